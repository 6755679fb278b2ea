//! Seeded error/erasure channel.

use std::collections::BTreeSet;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codec::{CodeParams, ReceivedWord};
use crate::error::{Error, Result};
use crate::galois::FieldElement;
use crate::spectral::EvaluationVector;

/// How many symbols to corrupt and where.
///
/// Explicit position lists take precedence over the random counts for their
/// kind; the remaining positions are drawn without replacement from the
/// rest of the block.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ChannelSpec {
    pub errors: usize,
    pub erasures: usize,
    pub seed: u64,
    pub error_positions: Option<Vec<usize>>,
    pub erasure_positions: Option<Vec<usize>>,
}

impl ChannelSpec {
    pub fn random(errors: usize, erasures: usize, seed: u64) -> ChannelSpec {
        ChannelSpec {
            errors,
            erasures,
            seed,
            ..ChannelSpec::default()
        }
    }

    pub fn with_error_positions(mut self, positions: Vec<usize>) -> ChannelSpec {
        self.errors = positions.len();
        self.error_positions = Some(positions);
        self
    }

    pub fn with_erasure_positions(mut self, positions: Vec<usize>) -> ChannelSpec {
        self.erasures = positions.len();
        self.erasure_positions = Some(positions);
        self
    }
}

/// Output of the channel with the ground truth kept alongside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corruption {
    pub received: ReceivedWord,
    /// Positions that received a nonzero additive error, ascending.
    pub error_positions: Vec<usize>,
}

/// Adds uniformly random nonzero errors at `spec.errors` positions and
/// erases `spec.erasures` others. Deterministic for a fixed seed.
pub fn corrupt(params: &CodeParams, codeword: &EvaluationVector, spec: &ChannelSpec) -> Result<Corruption> {
    let n = params.n();
    if codeword.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: codeword.len(),
        });
    }
    if spec.errors + spec.erasures > n {
        return Err(Error::ChannelOverflow {
            requested: spec.errors + spec.erasures,
            n,
        });
    }

    let mut taken = BTreeSet::new();
    let mut claim = |positions: &[usize]| -> Result<()> {
        for &p in positions {
            if p >= n {
                return Err(Error::PositionOutOfRange { position: p, n });
            }
            if !taken.insert(p) {
                return Err(Error::DuplicatePosition(p));
            }
        }
        Ok(())
    };
    if let Some(p) = &spec.error_positions {
        claim(p)?;
    }
    if let Some(p) = &spec.erasure_positions {
        claim(p)?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let free: Vec<usize> = (0..n).filter(|p| !taken.contains(p)).collect();
    let need_err = if spec.error_positions.is_some() { 0 } else { spec.errors };
    let need_era = if spec.erasure_positions.is_some() { 0 } else { spec.erasures };
    let picks: Vec<usize> = index::sample(&mut rng, free.len(), need_err + need_era)
        .into_iter()
        .map(|i| free[i])
        .collect();
    let (rand_err, rand_era) = picks.split_at(need_err);

    let mut errors: Vec<usize> = spec
        .error_positions
        .clone()
        .unwrap_or_else(|| rand_err.to_vec());
    errors.sort_unstable();
    let erasures: Vec<usize> = spec
        .erasure_positions
        .clone()
        .unwrap_or_else(|| rand_era.to_vec());

    let q = params.field().size() as u32;
    let mut symbols = codeword.values().to_vec();
    for &p in &errors {
        let e: u32 = rng.gen_range(1..q);
        symbols[p] += params.field().element(e)?;
    }
    for &p in &erasures {
        symbols[p] = FieldElement::ZERO;
    }
    Ok(Corruption {
        received: ReceivedWord::new(params, symbols, &erasures)?,
        error_positions: errors,
    })
}
