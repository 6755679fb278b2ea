//! Nonsystematic Reed-Solomon encoding and the four interpolation-based
//! decoders.
//!
//! All decoders share one skeleton: interpolate the received word, solve a
//! key equation W·A ≡ B (mod N) by partial Euclid, then divide out the
//! locator. They differ in which interpolant A and modulus N they use:
//!
//! | decoder     | A                 | N              | recovery      |
//! |-------------|-------------------|----------------|---------------|
//! | errors-only | T                 | x^n − 1        | P / W         |
//! | gao         | 𝒯 (subset interp) | (x^n − 1) / Λ  | P / W         |
//! | truong      | T·Λ mod x^n − 1   | x^n − 1        | Q / (W·Λ)     |
//! | suggested   | T mod N           | (x^n − 1) / Λ  | P / W         |
//!
//! Erased coordinates are filled with zero before T is interpolated.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, FailureCause, Result};
use crate::galois::{Field, FieldElement};
use crate::key_equation::{self, half_ceil, KeyEquationProblem};
use crate::metrics::{self, Step};
use crate::poly::Poly;
use crate::spectral::{self, EvaluationVector};

/// Parameters of an (n, k, d) code over GF(2^m) with n = 2^m − 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeParams {
    field: Field,
    k: usize,
    self_check: bool,
}

/// Message coefficients m_0 .. m_(k−1) of M(x).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Message(Vec<FieldElement>);

impl Message {
    pub fn new(params: &CodeParams, coeffs: Vec<FieldElement>) -> Result<Message> {
        if coeffs.len() != params.k {
            return Err(Error::LengthMismatch {
                expected: params.k,
                actual: coeffs.len(),
            });
        }
        Ok(Message(coeffs))
    }

    pub fn from_values(params: &CodeParams, values: &[u32]) -> Result<Message> {
        let coeffs = values
            .iter()
            .map(|&v| params.field.element(v))
            .collect::<Result<Vec<_>>>()?;
        Message::new(params, coeffs)
    }

    /// Pads `poly` with zero coefficients up to length k.
    fn from_poly(params: &CodeParams, poly: &Poly) -> Message {
        let mut coeffs = poly.coeffs().to_vec();
        coeffs.resize(params.k, FieldElement::ZERO);
        Message(coeffs)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.0
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.0.clone())
    }
}

impl fmt::Display for Message {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// n received symbols plus the set S of erased positions. Erased symbols
/// are always stored as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReceivedWord {
    symbols: Vec<FieldElement>,
    erasures: BTreeSet<usize>,
}

impl ReceivedWord {
    pub fn new(
        params: &CodeParams,
        mut symbols: Vec<FieldElement>,
        erasures: &[usize],
    ) -> Result<ReceivedWord> {
        let n = params.n();
        if symbols.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: symbols.len(),
            });
        }
        let erasures = checked_positions(n, erasures)?;
        for &pos in &erasures {
            symbols[pos] = FieldElement::ZERO;
        }
        Ok(ReceivedWord { symbols, erasures })
    }

    /// A received word with no erasures.
    pub fn clean(params: &CodeParams, word: &EvaluationVector) -> Result<ReceivedWord> {
        ReceivedWord::new(params, word.values().to_vec(), &[])
    }

    pub fn symbols(&self) -> &[FieldElement] {
        &self.symbols
    }

    pub fn erasures(&self) -> impl Iterator<Item = usize> + '_ {
        self.erasures.iter().copied()
    }

    pub fn is_erased(&self, pos: usize) -> bool {
        self.erasures.contains(&pos)
    }

    pub fn erasure_count(&self) -> usize {
        self.erasures.len()
    }
}

fn checked_positions(n: usize, positions: &[usize]) -> Result<BTreeSet<usize>> {
    let mut set = BTreeSet::new();
    for &pos in positions {
        if pos >= n {
            return Err(Error::PositionOutOfRange { position: pos, n });
        }
        if !set.insert(pos) {
            return Err(Error::DuplicatePosition(pos));
        }
    }
    Ok(set)
}

/// A successful decode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub message: Message,
    /// Monic error locator W(x).
    pub locator: Poly,
    /// Final key-equation remainder: P(x) = W·M, or Q(x) = W·M·Λ for Truong.
    pub combination: Poly,
    /// Euclid division steps.
    pub iterations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    ErrorsOnly,
    Gao,
    Truong,
    Suggested,
}

impl Algorithm {
    /// The three errors-and-erasures pipelines.
    pub const ERASURE_DECODERS: [Algorithm; 3] =
        [Algorithm::Gao, Algorithm::Truong, Algorithm::Suggested];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::ErrorsOnly => "errors-only",
            Algorithm::Gao => "gao",
            Algorithm::Truong => "truong",
            Algorithm::Suggested => "suggested",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Algorithm> {
        match s {
            "errors-only" => Ok(Algorithm::ErrorsOnly),
            "gao" => Ok(Algorithm::Gao),
            "truong" => Ok(Algorithm::Truong),
            "suggested" => Ok(Algorithm::Suggested),
            other => Err(Error::Parse(format!("unknown algorithm {other:?}"))),
        }
    }
}

fn fail<T>(cause: FailureCause) -> Result<T> {
    Err(Error::Decode(cause))
}

impl CodeParams {
    pub fn new(field: Field, k: usize) -> Result<CodeParams> {
        let n = field.order();
        if k == 0 || k >= n {
            return Err(Error::InvalidParams(format!(
                "message length k = {k} must satisfy 1 <= k < n = {n}"
            )));
        }
        Ok(CodeParams {
            field,
            k,
            self_check: false,
        })
    }

    /// Enables re-encoding every successful decode and rejecting it with
    /// [`FailureCause::LocatorMismatch`] if it disagrees with the received
    /// word anywhere outside the erasures and the locator's roots.
    pub fn with_self_check(mut self, on: bool) -> CodeParams {
        self.self_check = on;
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.field.order()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Designed distance n − k + 1.
    pub fn d(&self) -> usize {
        self.n() - self.k + 1
    }

    /// True when 2t + l < d.
    pub fn within_radius(&self, errors: usize, erasures: usize) -> bool {
        2 * errors + erasures < self.d()
    }

    /// c_i = M(α^i).
    pub fn encode(&self, msg: &Message) -> Result<EvaluationVector> {
        if msg.0.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                actual: msg.0.len(),
            });
        }
        spectral::evaluate_all(&self.field, &msg.to_poly())
    }

    /// Λ(x) = Π (x − α^j) over the erased positions j.
    pub fn erasure_locator(&self, positions: &[usize]) -> Result<Poly> {
        let set = checked_positions(self.n(), positions)?;
        Ok(self.locator_of(set.iter().copied()))
    }

    fn locator_of(&self, positions: impl Iterator<Item = usize>) -> Poly {
        positions.fold(Poly::one(), |acc, j| {
            acc.mul(
                &Poly::from_coeffs(vec![self.field.alpha_pow(j as i64), FieldElement::ONE]),
                &self.field,
            )
        })
    }

    pub fn decode(&self, algorithm: Algorithm, received: &ReceivedWord) -> Result<Decoded> {
        match algorithm {
            Algorithm::ErrorsOnly => {
                if received.erasure_count() > 0 {
                    return Err(Error::InvalidParams(
                        "errors-only decoding cannot take erasures".into(),
                    ));
                }
                let word = EvaluationVector::new(&self.field, received.symbols.clone())?;
                self.decode_errors_only(&word)
            }
            Algorithm::Gao => self.decode_gao(received),
            Algorithm::Truong => self.decode_truong(received),
            Algorithm::Suggested => self.decode_suggested(received),
        }
    }

    pub fn decode_errors_only(&self, received: &EvaluationVector) -> Result<Decoded> {
        let f = &self.field;
        let n = self.n();
        if received.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: received.len(),
            });
        }

        metrics::enter(Step::Interpolate);
        let t = spectral::interpolate_all(f, received)?;

        metrics::enter(Step::Solve);
        let problem = KeyEquationProblem::new(Poly::x_pow_minus_one(n), t, half_ceil(n + self.k))?;
        let sol = key_equation::solve(f, &problem)?;

        metrics::enter(Step::Recover);
        let message = self.divide_out(&sol.combination, &sol.locator)?;
        self.finish(
            message,
            sol.locator,
            sol.combination,
            sol.iterations,
            received.values(),
            &BTreeSet::new(),
            0,
        )
    }

    pub fn decode_gao(&self, received: &ReceivedWord) -> Result<Decoded> {
        let f = &self.field;
        let l = self.check_erasures(received)?;

        metrics::enter(Step::Interpolate);
        let points: Vec<(usize, FieldElement)> = received
            .symbols
            .iter()
            .enumerate()
            .filter(|(i, _)| !received.is_erased(*i))
            .map(|(i, &r)| (i, r))
            .collect();
        let t_bar = spectral::interpolate_subset(f, &points)?;

        metrics::enter(Step::Prepare);
        let lambda = self.locator_of(received.erasures());
        let modulus = spectral::cyclotomic_quotient(f, &lambda)?;

        metrics::enter(Step::Solve);
        let stop = half_ceil(self.n() - l + self.k);
        let sol = key_equation::solve(f, &KeyEquationProblem::new(modulus, t_bar, stop)?)?;

        metrics::enter(Step::Recover);
        let message = self.divide_out(&sol.combination, &sol.locator)?;
        self.finish(
            message,
            sol.locator,
            sol.combination,
            sol.iterations,
            &received.symbols,
            &received.erasures,
            l,
        )
    }

    pub fn decode_truong(&self, received: &ReceivedWord) -> Result<Decoded> {
        let f = &self.field;
        let n = self.n();
        let l = self.check_erasures(received)?;

        metrics::enter(Step::Locator);
        let lambda = self.locator_of(received.erasures());

        metrics::enter(Step::Interpolate);
        let t = spectral::interpolate_all(f, &EvaluationVector::new(f, received.symbols.clone())?)?;

        metrics::enter(Step::Prepare);
        let x_n_1 = Poly::x_pow_minus_one(n);
        let (_, known) = t.mul(&lambda, f).divmod(&x_n_1, f)?;

        metrics::enter(Step::Solve);
        let stop = half_ceil(n + self.k + l);
        let sol = key_equation::solve(f, &KeyEquationProblem::new(x_n_1, known, stop)?)?;

        metrics::enter(Step::Recover);
        let divisor = sol.locator.mul(&lambda, f);
        let message = self.divide_out(&sol.combination, &divisor)?;
        self.finish(
            message,
            sol.locator,
            sol.combination,
            sol.iterations,
            &received.symbols,
            &received.erasures,
            l,
        )
    }

    pub fn decode_suggested(&self, received: &ReceivedWord) -> Result<Decoded> {
        let f = &self.field;
        let l = self.check_erasures(received)?;

        metrics::enter(Step::Interpolate);
        let t = spectral::interpolate_all(f, &EvaluationVector::new(f, received.symbols.clone())?)?;

        metrics::enter(Step::Prepare);
        let lambda = self.locator_of(received.erasures());
        let modulus = spectral::cyclotomic_quotient(f, &lambda)?;

        metrics::enter(Step::Solve);
        // T ≡ 𝒯 modulo (x^n − 1)/Λ, so any representative works; the
        // reduced one keeps the Euclid operands short.
        let (_, known) = t.divmod(&modulus, f)?;
        let stop = half_ceil(self.n() - l + self.k);
        let sol = key_equation::solve(f, &KeyEquationProblem::new(modulus, known, stop)?)?;

        metrics::enter(Step::Recover);
        let message = self.divide_out(&sol.combination, &sol.locator)?;
        self.finish(
            message,
            sol.locator,
            sol.combination,
            sol.iterations,
            &received.symbols,
            &received.erasures,
            l,
        )
    }

    fn check_erasures(&self, received: &ReceivedWord) -> Result<usize> {
        if received.symbols.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                actual: received.symbols.len(),
            });
        }
        let l = received.erasure_count();
        if l >= self.d() {
            return fail(FailureCause::DegreeOverflow);
        }
        Ok(l)
    }

    fn divide_out(&self, numerator: &Poly, divisor: &Poly) -> Result<Poly> {
        let (m, r) = numerator.divmod(divisor, &self.field)?;
        if !r.is_zero() {
            return fail(FailureCause::DivisionInexact);
        }
        if m.degree() >= Some(self.k) {
            return fail(FailureCause::DegreeOverflow);
        }
        Ok(m)
    }

    #[allow(clippy::too_many_arguments)]
    fn finish(
        &self,
        message: Poly,
        locator: Poly,
        combination: Poly,
        iterations: usize,
        symbols: &[FieldElement],
        erasures: &BTreeSet<usize>,
        l: usize,
    ) -> Result<Decoded> {
        let cap = (self.d() - l - 1) / 2;
        if locator.degree().unwrap_or(0) > cap {
            return fail(FailureCause::DegreeOverflow);
        }
        let message = Message::from_poly(self, &message);
        if self.self_check {
            metrics::unmetered(|| self.verify(&message, &locator, symbols, erasures))?;
        }
        Ok(Decoded {
            message,
            locator,
            combination,
            iterations,
        })
    }

    fn verify(
        &self,
        message: &Message,
        locator: &Poly,
        symbols: &[FieldElement],
        erasures: &BTreeSet<usize>,
    ) -> Result<()> {
        let codeword = self.encode(message)?;
        for (i, (&c, &r)) in codeword.values().iter().zip(symbols).enumerate() {
            if c != r && !erasures.contains(&i) {
                let z = self.field.alpha_pow(i as i64);
                if !locator.eval(z, &self.field).is_zero() {
                    return fail(FailureCause::LocatorMismatch);
                }
            }
        }
        Ok(())
    }
}
