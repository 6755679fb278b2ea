//! Quick end-to-end sanity run used by the `selftest` subcommand.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codec::{Algorithm, CodeParams, Message};
use crate::error::Result;
use crate::galois::Field;
use crate::workbench::channel::{corrupt, ChannelSpec};
use crate::workbench::oracle::Oracle;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Random (t, l) with 2t + l < d, uniform over all such pairs.
pub fn radius_pair(params: &CodeParams, rng: &mut impl Rng) -> (usize, usize) {
    let d = params.d();
    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|l| (0..=(d - 1 - l) / 2).map(move |t| (t, l)))
        .filter(|&(t, l)| 2 * t + l < d)
        .collect();
    pairs[rng.gen_range(0..pairs.len())]
}

fn random_message(params: &CodeParams, rng: &mut impl Rng) -> Result<Message> {
    let q = params.field().size() as u32;
    let values: Vec<u32> = (0..params.k()).map(|_| rng.gen_range(0..q)).collect();
    Message::from_values(params, &values)
}

fn radius_check(params: &CodeParams, trials: usize, seed: u64) -> Result<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..trials {
        let (t, l) = radius_pair(params, &mut rng);
        let msg = random_message(params, &mut rng)?;
        let cw = params.encode(&msg)?;
        let rw = corrupt(params, &cw, &ChannelSpec::random(t, l, rng.gen()))?.received;
        let outs: Vec<_> = Algorithm::ERASURE_DECODERS
            .iter()
            .map(|&a| params.decode(a, &rw).ok().map(|d| d.message))
            .collect();
        if outs.iter().any(|o| o.as_ref() != Some(&msg)) {
            bad += 1;
        }
    }
    Ok(Check {
        name: format!("radius RS({},{})", params.n(), params.k()),
        passed: bad == 0,
        detail: format!("{} of {trials} trials decoded by all three pipelines", trials - bad),
    })
}

fn oracle_check(params: &CodeParams, trials: usize, seed: u64) -> Result<Check> {
    let oracle = Oracle::new(params)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..trials {
        let (t, l) = radius_pair(params, &mut rng);
        let msg = random_message(params, &mut rng)?;
        let cw = params.encode(&msg)?;
        let rw = corrupt(params, &cw, &ChannelSpec::random(t, l, rng.gen()))?.received;
        let want = oracle.decode(&rw).ok().map(|m| m.message);
        let agree = Algorithm::ERASURE_DECODERS
            .iter()
            .all(|&a| params.decode(a, &rw).ok().map(|d| d.message) == want);
        if !agree {
            bad += 1;
        }
    }
    Ok(Check {
        name: format!("oracle RS({},{})", params.n(), params.k()),
        passed: bad == 0,
        detail: format!("{} of {trials} trials matched brute force", trials - bad),
    })
}

pub fn run(trials: usize, seed: u64) -> Result<Vec<Check>> {
    let rs73 = CodeParams::new(Field::with_default_poly(3)?, 3)?.with_self_check(true);
    let rs157 = CodeParams::new(Field::with_default_poly(4)?, 7)?.with_self_check(true);
    Ok(vec![
        radius_check(&rs73, trials, seed)?,
        radius_check(&rs157, trials, seed.wrapping_add(1))?,
        oracle_check(&rs73, trials, seed.wrapping_add(2))?,
    ])
}
