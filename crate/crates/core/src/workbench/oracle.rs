//! Brute-force minimum-distance decoder for small codes.

use crate::codec::{CodeParams, Message, ReceivedWord};
use crate::error::{Error, FailureCause, Result};
use crate::galois::FieldElement;
use crate::spectral::EvaluationVector;

/// Largest codebook the oracle will enumerate.
pub const MAX_CODEWORDS: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleMatch {
    pub message: Message,
    /// Hamming distance over the non-erased positions.
    pub distance: usize,
}

/// Every codeword of a code, listed once up front.
pub struct Oracle {
    params: CodeParams,
    codebook: Vec<(Message, EvaluationVector)>,
}

impl Oracle {
    pub fn new(params: &CodeParams) -> Result<Oracle> {
        let q = params.field().size() as u64;
        let total = (q as f64).powi(params.k() as i32);
        if total > MAX_CODEWORDS as f64 {
            return Err(Error::CodeTooLarge(total.min(u64::MAX as f64) as u64));
        }
        let total = total as u64;
        let mut codebook = Vec::with_capacity(total as usize);
        for index in 0..total {
            let mut rest = index;
            let coeffs: Vec<FieldElement> = (0..params.k())
                .map(|_| {
                    let digit = (rest % q) as u32;
                    rest /= q;
                    params.field().element(digit)
                })
                .collect::<Result<_>>()?;
            let message = Message::new(params, coeffs)?;
            let codeword = params.encode(&message)?;
            codebook.push((message, codeword));
        }
        Ok(Oracle {
            params: params.clone(),
            codebook,
        })
    }

    pub fn codeword_count(&self) -> usize {
        self.codebook.len()
    }

    /// Nearest codeword on the non-erased positions; a tie for the minimum
    /// is reported as [`FailureCause::Ambiguous`].
    pub fn decode(&self, received: &ReceivedWord) -> Result<OracleMatch> {
        let n = self.params.n();
        if received.symbols().len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: received.symbols().len(),
            });
        }
        let live: Vec<usize> = (0..n).filter(|&i| !received.is_erased(i)).collect();
        let symbols = received.symbols();

        let mut best: Option<(usize, usize)> = None;
        let mut tied = false;
        for (idx, (_, cw)) in self.codebook.iter().enumerate() {
            let cw = cw.values();
            let dist = live.iter().filter(|&&i| cw[i] != symbols[i]).count();
            match best {
                Some((_, d)) if dist > d => {}
                Some((_, d)) if dist == d => tied = true,
                _ => {
                    best = Some((idx, dist));
                    tied = false;
                }
            }
        }
        let (idx, distance) = best.expect("codebook is never empty");
        if tied {
            return Err(Error::Decode(FailureCause::Ambiguous));
        }
        Ok(OracleMatch {
            message: self.codebook[idx].0.clone(),
            distance,
        })
    }
}
