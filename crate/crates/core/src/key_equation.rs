//! Partial extended Euclid for congruences `W·A ≡ B (mod N)`.
//!
//! Starting from the pair (N, A), the remainder sequence r_j is carried
//! together with the cofactor v_j of A, so that v_j·A ≡ r_j (mod N). The
//! iteration stops at the first remainder whose degree falls below the
//! threshold; the cofactor there is the error locator.

use crate::error::{Error, Result};
use crate::galois::Field;
use crate::metrics;
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyEquationProblem {
    pub modulus: Poly,
    pub known: Poly,
    /// The first remainder of degree below this ends the iteration.
    pub stop_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyEquationSolution {
    /// Monic cofactor of `known`.
    pub locator: Poly,
    /// Final remainder, scaled alongside the locator.
    pub combination: Poly,
    /// Number of division steps taken.
    pub iterations: usize,
}

impl KeyEquationProblem {
    pub fn new(modulus: Poly, known: Poly, stop_degree: usize) -> Result<KeyEquationProblem> {
        let problem = KeyEquationProblem {
            modulus,
            known,
            stop_degree,
        };
        problem.validate()?;
        Ok(problem)
    }

    fn validate(&self) -> Result<()> {
        let Some(mod_deg) = self.modulus.degree() else {
            return Err(Error::MalformedProblem("zero modulus".into()));
        };
        if self.known.degree() >= Some(mod_deg) {
            return Err(Error::MalformedProblem(format!(
                "known polynomial degree {:?} not below modulus degree {mod_deg}",
                self.known.degree()
            )));
        }
        if self.stop_degree == 0 || self.stop_degree > mod_deg {
            return Err(Error::MalformedProblem(format!(
                "stop degree {} outside 1..={mod_deg}",
                self.stop_degree
            )));
        }
        Ok(())
    }
}

/// `⌈num / 2⌉`: the smallest integer s with "deg r < num/2" ⇔ "deg r < s".
pub fn half_ceil(num: usize) -> usize {
    num.div_ceil(2)
}

pub fn solve(field: &Field, problem: &KeyEquationProblem) -> Result<KeyEquationSolution> {
    problem.validate()?;
    let stop = Some(problem.stop_degree);

    let mut r_prev = problem.modulus.clone();
    let mut r = problem.known.clone();
    let mut v_prev = Poly::zero();
    let mut v = Poly::one();
    // Cofactors of the modulus, only tracked to check u·N + v·A = r.
    #[cfg(debug_assertions)]
    let (mut u_prev, mut u) = (Poly::one(), Poly::zero());

    let mut iterations = 0;
    while r.degree() >= stop {
        let (q, rem) = r_prev.divmod(&r, field)?;
        let v_next = v_prev.add(&q.mul(&v, field));
        r_prev = std::mem::replace(&mut r, rem);
        v_prev = std::mem::replace(&mut v, v_next);
        iterations += 1;
        metrics::count_iteration();

        #[cfg(debug_assertions)]
        metrics::unmetered(|| {
            let u_next = u_prev.add(&q.mul(&u, field));
            u_prev = std::mem::replace(&mut u, u_next);
            let lhs = u.mul(&problem.modulus, field).add(&v.mul(&problem.known, field));
            debug_assert_eq!(lhs, r, "cofactor identity broken at iteration {iterations}");
        });
    }

    let lead = v.lead().expect("cofactor of the known polynomial never vanishes");
    let scale = field.inv(lead)?;
    Ok(KeyEquationSolution {
        locator: v.scale(scale, field),
        combination: r.scale(scale, field),
        iterations,
    })
}
