//! Dense univariate polynomials over GF(2^m).

use std::fmt;

use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};

/// Coefficients low-to-high, always normalized: the last entry is nonzero,
/// and the zero polynomial has no coefficients at all.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(FieldElement::ONE)
    }

    pub fn constant(c: FieldElement) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// x^n + 1, which equals x^n − 1 in characteristic 2.
    pub fn x_pow_minus_one(n: usize) -> Poly {
        let mut coeffs = vec![FieldElement::ZERO; n + 1];
        coeffs[0] = FieldElement::ONE;
        coeffs[n] += FieldElement::ONE;
        Poly::from_coeffs(coeffs)
    }

    /// The monomial c·x^e.
    pub fn monomial(c: FieldElement, e: usize) -> Poly {
        let mut coeffs = vec![FieldElement::ZERO; e + 1];
        coeffs[e] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Builds a polynomial from raw values, checking each against `field`.
    pub fn from_values(field: &Field, values: &[u32]) -> Result<Poly> {
        let coeffs = values
            .iter()
            .map(|&v| field.element(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Parses the textual form: decimal coefficients low-to-high separated
    /// by whitespace.
    pub fn parse(field: &Field, text: &str) -> Result<Poly> {
        let values = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Poly::from_values(field, &values)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of x^i; zero past the degree.
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    /// `None` stands for deg 0 = −∞, which compares below every `Some`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Some(FieldElement::ONE)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, &s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Poly, field: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += field.mul(a, b);
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: FieldElement, field: &Field) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    /// Schoolbook long division: `self = den·q + r` with deg r < deg den.
    pub fn divmod(&self, den: &Poly, field: &Field) -> Result<(Poly, Poly)> {
        let den_deg = den.degree().ok_or(Error::DivisionByZero)?;
        let num_len = self.coeffs.len();
        if num_len <= den_deg {
            return Ok((Poly::zero(), self.clone()));
        }
        // Monic divisors need no scaling of the quotient terms.
        let lead_inv = match den.coeffs[den_deg] {
            FieldElement::ONE => None,
            lead => Some(field.inv(lead)?),
        };
        let mut rem = self.coeffs.clone();
        let mut quot = vec![FieldElement::ZERO; num_len - den_deg];
        for shift in (0..quot.len()).rev() {
            let top = rem[shift + den_deg];
            let q = lead_inv.map_or(top, |li| field.mul(top, li));
            quot[shift] = q;
            // The leading term cancels by construction.
            rem[shift + den_deg] = FieldElement::ZERO;
            for (j, &d) in den.coeffs[..den_deg].iter().enumerate() {
                rem[shift + j] += field.mul(q, d);
            }
        }
        rem.truncate(den_deg);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Horner evaluation.
    pub fn eval(&self, at: FieldElement, field: &Field) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| field.mul(acc, at) + c)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf8() -> Field {
        Field::new(3, 0xB).unwrap()
    }

    pub(crate) fn p(f: &Field, vals: &[u32]) -> Poly {
        Poly::from_values(f, vals).unwrap()
    }

    /// Straight convolution, independent of `Poly::mul`.
    fn convolve(f: &Field, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                let prod = f.mul(f.element(x).unwrap(), f.element(y).unwrap());
                out[i + j] ^= prod.value() as u32;
            }
        }
        out
    }

    #[test]
    fn normalization() {
        let f = gf8();
        assert_eq!(p(&f, &[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(p(&f, &[0, 0]), Poly::zero());
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::one().degree(), Some(0));
        assert!(Poly::zero().degree() < Poly::one().degree());
    }

    #[test]
    fn add_examples() {
        let f = gf8();
        assert_eq!(p(&f, &[1, 1]).add(&p(&f, &[1, 1])), Poly::zero());
        let q = p(&f, &[3, 5, 7]);
        assert_eq!(q.add(&Poly::zero()), q);
        assert_eq!(p(&f, &[3, 0, 1]).add(&p(&f, &[3, 1])), p(&f, &[0, 1, 1]));
    }

    #[test]
    fn mul_examples() {
        let f = gf8();
        assert_eq!(p(&f, &[1, 1]).mul(&p(&f, &[1, 1]), &f), p(&f, &[1, 0, 1]));
        let q = p(&f, &[3, 5, 7]);
        assert_eq!(q.mul(&Poly::one(), &f), q);
        let want = convolve(&f, &[2, 1], &[4, 1]);
        assert_eq!(want, vec![3, 6, 1]);
        assert_eq!(p(&f, &[2, 1]).mul(&p(&f, &[4, 1]), &f), p(&f, &want));
    }

    #[test]
    fn divmod_examples() {
        let f = gf8();
        let (q, r) = p(&f, &[1, 0, 1]).divmod(&p(&f, &[1, 1]), &f).unwrap();
        assert_eq!((q, r), (p(&f, &[1, 1]), Poly::zero()));
        let a = p(&f, &[4, 0, 6]);
        assert_eq!(a.divmod(&Poly::one(), &f).unwrap(), (a.clone(), Poly::zero()));
        let (q, r) = p(&f, &[1, 1, 0, 1]).divmod(&p(&f, &[2, 0, 1]), &f).unwrap();
        assert_eq!(q, p(&f, &[0, 1]));
        assert_eq!(r, p(&f, &[1, 3]));
        assert_eq!(
            p(&f, &[2, 0, 1]).mul(&q, &f).add(&r),
            p(&f, &[1, 1, 0, 1])
        );
        assert_eq!(a.divmod(&Poly::zero(), &f), Err(Error::DivisionByZero));
    }

    #[test]
    fn divmod_short_numerator() {
        let f = gf8();
        let a = p(&f, &[3, 1]);
        let (q, r) = a.divmod(&p(&f, &[1, 2, 5]), &f).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, a);
    }

    #[test]
    fn eval_examples() {
        let f = gf8();
        assert_eq!(Poly::zero().eval(f.alpha_pow(2), &f), FieldElement::ZERO);
        assert_eq!(p(&f, &[0, 1]).eval(f.alpha_pow(3), &f).value(), 3);
        assert_eq!(p(&f, &[1, 1, 1]).eval(FieldElement::ONE, &f), FieldElement::ONE);
    }

    #[test]
    fn text_form() {
        let f = gf8();
        let a = p(&f, &[3, 0, 7]);
        assert_eq!(a.to_string(), "3 0 7");
        assert_eq!(Poly::parse(&f, "3 0 7 0").unwrap(), a);
        assert_eq!(Poly::zero().to_string(), "0");
        assert!(Poly::parse(&f, "1 8").is_err());
        assert!(Poly::parse(&f, "1 x").is_err());
    }

    #[test]
    fn x_pow_minus_one_shape() {
        let f = gf8();
        let q = Poly::x_pow_minus_one(7);
        assert_eq!(q.degree(), Some(7));
        for i in 0..7 {
            assert_eq!(q.eval(f.alpha_pow(i), &f), FieldElement::ZERO);
        }
    }

    /// All polynomials of degree < 2 over GF(8), i.e. 64 of them.
    #[test]
    fn ring_axioms_exhaustive_gf8_low_degree() {
        let f = gf8();
        let all: Vec<Poly> = (0..64u32).map(|v| p(&f, &[v & 7, v >> 3])).collect();
        for a in &all {
            for b in &all {
                assert_eq!(a.mul(b, &f), b.mul(a, &f));
                assert_eq!(a.add(b), b.add(a));
                if !b.is_zero() {
                    let (q, r) = a.divmod(b, &f).unwrap();
                    assert_eq!(b.mul(&q, &f).add(&r), *a);
                    assert!(r.degree() < b.degree());
                }
                for c in &all {
                    assert_eq!(a.mul(b, &f).mul(c, &f), a.mul(&b.mul(c, &f), &f));
                    assert_eq!(a.mul(&b.add(c), &f), a.mul(b, &f).add(&a.mul(c, &f)));
                }
            }
        }
    }

    fn arb_poly(m: u32, max_len: usize) -> impl Strategy<Value = Vec<u32>> {
        prop::collection::vec(0u32..(1 << m), 0..max_len)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn ring_axioms_random(a in arb_poly(4, 12), b in arb_poly(4, 12), c in arb_poly(4, 12)) {
            let f = Field::with_default_poly(4).unwrap();
            let [a, b, c] = [a, b, c].map(|v| Poly::from_values(&f, &v).unwrap());
            prop_assert_eq!(a.mul(&b, &f).mul(&c, &f), a.mul(&b.mul(&c, &f), &f));
            prop_assert_eq!(a.mul(&b.add(&c), &f), a.mul(&b, &f).add(&a.mul(&c, &f)));
            prop_assert_eq!(a.mul(&b, &f), b.mul(&a, &f));
        }

        #[test]
        fn divmod_reconstructs(num in arb_poly(8, 40), den in arb_poly(8, 20)) {
            let f = Field::with_default_poly(8).unwrap();
            let num = Poly::from_values(&f, &num).unwrap();
            let den = Poly::from_values(&f, &den).unwrap();
            prop_assume!(!den.is_zero());
            let (q, r) = num.divmod(&den, &f).unwrap();
            prop_assert_eq!(den.mul(&q, &f).add(&r), num);
            prop_assert!(r.degree() < den.degree());
        }

        #[test]
        fn eval_is_multiplicative(a in arb_poly(8, 30), b in arb_poly(8, 30), z in 0u32..256) {
            let f = Field::with_default_poly(8).unwrap();
            let a = Poly::from_values(&f, &a).unwrap();
            let b = Poly::from_values(&f, &b).unwrap();
            let z = f.element(z).unwrap();
            prop_assert_eq!(a.mul(&b, &f).eval(z, &f), f.mul(a.eval(z, &f), b.eval(z, &f)));
        }
    }
}
