//! Evaluation and interpolation at the n-th roots of unity α^0 .. α^(n−1).
//!
//! `evaluate_all` and `interpolate_all` form a DFT pair over GF(2^m).
//! Since n = 2^m − 1 is odd, n·1 = 1 in characteristic 2 and the inverse
//! transform needs no scaling. Both are direct O(n²) loops.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};
use crate::poly::Poly;

/// Point values at α^0 .. α^(n−1); index i holds the value at α^i.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EvaluationVector(Vec<FieldElement>);

impl EvaluationVector {
    pub fn new(field: &Field, values: Vec<FieldElement>) -> Result<EvaluationVector> {
        if values.len() != field.order() {
            return Err(Error::LengthMismatch {
                expected: field.order(),
                actual: values.len(),
            });
        }
        Ok(EvaluationVector(values))
    }

    pub fn from_values(field: &Field, values: &[u32]) -> Result<EvaluationVector> {
        let v = values
            .iter()
            .map(|&x| field.element(x))
            .collect::<Result<Vec<_>>>()?;
        EvaluationVector::new(field, v)
    }

    pub fn values(&self) -> &[FieldElement] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<FieldElement> {
        self.0
    }

    /// Number of positions where the two vectors differ.
    pub fn distance(&self, other: &EvaluationVector) -> usize {
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count()
    }
}

/// Forward transform: `values[i] = p(α^i)`.
pub fn evaluate_all(field: &Field, p: &Poly) -> Result<EvaluationVector> {
    let n = field.order();
    if let Some(deg) = p.degree().filter(|&d| d >= n) {
        return Err(Error::DegreeTooLarge { degree: deg, bound: n });
    }
    let values = (0..n).map(|i| p.eval(field.alpha_pow(i as i64), field)).collect();
    Ok(EvaluationVector(values))
}

/// Inverse transform: the unique T with deg T < n and T(α^i) = values[i].
///
/// T_j = Σ_i values[i]·α^(−ij).
pub fn interpolate_all(field: &Field, v: &EvaluationVector) -> Result<Poly> {
    let n = field.order();
    if v.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: v.len(),
        });
    }
    let coeffs = (0..n)
        .map(|j| {
            v.0.iter().enumerate().fold(FieldElement::ZERO, |acc, (i, &r)| {
                acc + field.mul(r, field.alpha_pow(-((i * j) as i64)))
            })
        })
        .collect();
    Ok(Poly::from_coeffs(coeffs))
}

/// Lagrange interpolation through `(position, value)` pairs, where a
/// position i stands for the point α^i. Returns the unique polynomial of
/// degree below the number of points.
pub fn interpolate_subset(field: &Field, points: &[(usize, FieldElement)]) -> Result<Poly> {
    let n = field.order();
    let mut seen = HashSet::with_capacity(points.len());
    for &(pos, _) in points {
        if pos >= n {
            return Err(Error::PositionOutOfRange { position: pos, n });
        }
        if !seen.insert(pos) {
            return Err(Error::DuplicatePosition(pos));
        }
    }
    if points.is_empty() {
        return Ok(Poly::zero());
    }

    let xs: Vec<FieldElement> = points
        .iter()
        .map(|&(pos, _)| field.alpha_pow(pos as i64))
        .collect();

    let master = master_from_roots(field, &xs);

    let mut acc = vec![FieldElement::ZERO; points.len()];
    for (i, &(_, y)) in points.iter().enumerate() {
        if y.is_zero() {
            continue;
        }
        let basis = deflate(field, &master, xs[i]);
        // basis(x_i) = Π_{j≠i} (x_i − x_j)
        let denom = basis
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |a, &c| field.mul(a, xs[i]) + c);
        let w = field.mul(y, field.inv(denom)?);
        for (a, &b) in acc.iter_mut().zip(&basis) {
            *a += field.mul(w, b);
        }
    }
    Ok(Poly::from_coeffs(acc))
}

/// Coefficients of Π (x − r) over `roots`, low-to-high, monic.
fn master_from_roots(field: &Field, roots: &[FieldElement]) -> Vec<FieldElement> {
    let mut out = vec![FieldElement::ONE];
    for &r in roots {
        // out ← out·(x + r)
        out.push(FieldElement::ZERO);
        for j in (1..out.len()).rev() {
            out[j] = out[j - 1] + field.mul(out[j], r);
        }
        out[0] = field.mul(out[0], r);
    }
    out
}

/// Synthetic division of a monic polynomial by (x − root), assuming the
/// remainder is zero.
fn deflate(field: &Field, monic: &[FieldElement], root: FieldElement) -> Vec<FieldElement> {
    let deg = monic.len() - 1;
    let mut out = vec![FieldElement::ZERO; deg];
    let mut carry = FieldElement::ZERO;
    for j in (0..deg).rev() {
        carry = monic[j + 1] + field.mul(carry, root);
        out[j] = carry;
    }
    out
}

/// The exact quotient (x^n − 1) / Λ(x). Fails if Λ has a root that is not
/// an n-th root of unity, or a repeated root.
pub fn cyclotomic_quotient(field: &Field, erasure_locator: &Poly) -> Result<Poly> {
    let modulus = Poly::x_pow_minus_one(field.order());
    let (q, r) = modulus.divmod(erasure_locator, field)?;
    if !r.is_zero() {
        return Err(Error::NotCyclotomicDivisor);
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::tests::p;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf8() -> Field {
        Field::new(3, 0xB).unwrap()
    }

    fn ev(f: &Field, v: &[u32]) -> EvaluationVector {
        EvaluationVector::from_values(f, v).unwrap()
    }

    #[test]
    fn evaluate_all_examples() {
        let f = gf8();
        assert_eq!(evaluate_all(&f, &Poly::one()).unwrap(), ev(&f, &[1; 7]));
        assert_eq!(
            evaluate_all(&f, &p(&f, &[0, 1])).unwrap(),
            ev(&f, &[1, 2, 4, 3, 6, 7, 5])
        );
        assert_eq!(evaluate_all(&f, &Poly::zero()).unwrap(), ev(&f, &[0; 7]));
        let big = Poly::monomial(FieldElement::ONE, 7);
        assert!(matches!(
            evaluate_all(&f, &big),
            Err(Error::DegreeTooLarge { degree: 7, bound: 7 })
        ));
    }

    #[test]
    fn interpolate_all_examples() {
        let f = gf8();
        assert_eq!(interpolate_all(&f, &ev(&f, &[1; 7])).unwrap(), Poly::one());
        assert_eq!(
            interpolate_all(&f, &ev(&f, &[1, 2, 4, 3, 6, 7, 5])).unwrap(),
            p(&f, &[0, 1])
        );
        assert_eq!(interpolate_all(&f, &ev(&f, &[0; 7])).unwrap(), Poly::zero());
        assert!(EvaluationVector::from_values(&f, &[1, 2]).is_err());
    }

    #[test]
    fn interpolate_subset_examples() {
        let f = gf8();
        let five = f.element(5).unwrap();
        assert_eq!(
            interpolate_subset(&f, &[(0, five)]).unwrap(),
            Poly::constant(five)
        );
        let xs = ev(&f, &[1, 2, 4, 3, 6, 7, 5]);
        let all: Vec<_> = xs.values().iter().copied().enumerate().collect();
        assert_eq!(interpolate_subset(&f, &all).unwrap(), p(&f, &[0, 1]));

        let sq = p(&f, &[0, 0, 1]);
        let vals = evaluate_all(&f, &sq).unwrap();
        let first5: Vec<_> = vals.values().iter().copied().enumerate().take(5).collect();
        assert_eq!(interpolate_subset(&f, &first5).unwrap(), sq);
    }

    #[test]
    fn interpolate_subset_rejects_bad_positions() {
        let f = gf8();
        let one = FieldElement::ONE;
        assert_eq!(
            interpolate_subset(&f, &[(1, one), (1, one)]),
            Err(Error::DuplicatePosition(1))
        );
        assert!(matches!(
            interpolate_subset(&f, &[(7, one)]),
            Err(Error::PositionOutOfRange { .. })
        ));
    }

    #[test]
    fn cyclotomic_quotient_examples() {
        let f = gf8();
        assert_eq!(
            cyclotomic_quotient(&f, &Poly::one()).unwrap(),
            Poly::x_pow_minus_one(7)
        );
        assert_eq!(
            cyclotomic_quotient(&f, &p(&f, &[1, 1])).unwrap(),
            p(&f, &[1; 7])
        );
        let lambda = p(&f, &[1, 1]).mul(&p(&f, &[2, 1]), &f);
        let q = cyclotomic_quotient(&f, &lambda).unwrap();
        assert_eq!(q.degree(), Some(5));
        let (_, r) = Poly::x_pow_minus_one(7).divmod(&lambda, &f).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.mul(&lambda, &f), Poly::x_pow_minus_one(7));
        // x + 0 has root 0, which is no root of unity
        assert_eq!(
            cyclotomic_quotient(&f, &p(&f, &[0, 1])),
            Err(Error::NotCyclotomicDivisor)
        );
    }

    #[test]
    fn round_trip_random() {
        for m in [4u32, 8] {
            let f = Field::with_default_poly(m).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(77 + m as u64);
            for _ in 0..200 {
                let len = rng.gen_range(0..=f.order());
                let vals: Vec<u32> = (0..len).map(|_| rng.gen_range(0..f.size() as u32)).collect();
                let poly = Poly::from_values(&f, &vals).unwrap();
                let back = interpolate_all(&f, &evaluate_all(&f, &poly).unwrap()).unwrap();
                assert_eq!(back, poly);
            }
        }
    }

    #[test]
    fn subset_matches_full_interpolation_on_full_set() {
        let f = Field::with_default_poly(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let vals: Vec<u32> = (0..15).map(|_| rng.gen_range(0..16)).collect();
            let v = EvaluationVector::from_values(&f, &vals).unwrap();
            let pts: Vec<_> = v.values().iter().copied().enumerate().collect();
            assert_eq!(
                interpolate_subset(&f, &pts).unwrap(),
                interpolate_all(&f, &v).unwrap()
            );
        }
    }
}
