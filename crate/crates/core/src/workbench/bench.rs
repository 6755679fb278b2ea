//! Operation-count benchmark: every decoder sees the same corrupted words
//! and its field multiplications, inversions and Euclid steps are tallied
//! per pipeline step.

use std::io::Write;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codec::{Algorithm, CodeParams, Message};
use crate::error::{Error, Result};
use crate::metrics::{self, OpCounts, Step};
use crate::workbench::channel::{corrupt, ChannelSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub trials: usize,
    /// Fixed error count, or `None` to draw t uniformly from 0..=(d−l−1)/2.
    pub errors: Option<usize>,
    pub erasures: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoderRun {
    pub algorithm: Algorithm,
    pub counts: OpCounts,
    pub success: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialRecord {
    pub errors: usize,
    pub erasures: usize,
    pub runs: Vec<DecoderRun>,
}

impl TrialRecord {
    pub fn run(&self, algorithm: Algorithm) -> Option<&DecoderRun> {
        self.runs.iter().find(|r| r.algorithm == algorithm)
    }

    /// Whether the suggested pipeline used no more multiplications and no
    /// more Euclid steps than Truong's. Trials without erasures pass.
    pub fn suggested_within_truong(&self) -> bool {
        if self.erasures == 0 {
            return true;
        }
        match (self.run(Algorithm::Suggested), self.run(Algorithm::Truong)) {
            (Some(s), Some(t)) => {
                s.counts.total_mults() <= t.counts.total_mults()
                    && s.counts.step(Step::Solve).iterations
                        <= t.counts.step(Step::Solve).iterations
            }
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanCounts {
    pub mults: f64,
    pub invs: f64,
    pub iterations: f64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpCountReport {
    pub n: usize,
    pub k: usize,
    pub trials: Vec<TrialRecord>,
}

impl OpCountReport {
    pub fn is_empty(&self) -> bool {
        self.trials.is_empty()
    }

    /// Algorithms that appear in at least one trial, in canonical order.
    pub fn algorithms(&self) -> Vec<Algorithm> {
        let mut algs: Vec<Algorithm> = self
            .trials
            .iter()
            .flat_map(|t| t.runs.iter().map(|r| r.algorithm))
            .collect();
        algs.sort();
        algs.dedup();
        algs
    }

    /// Mean counts for one algorithm and step, over the trials that ran it.
    /// `step = None` means the whole pipeline.
    pub fn mean(&self, algorithm: Algorithm, step: Option<Step>) -> Option<MeanCounts> {
        let picked: Vec<_> = self
            .trials
            .iter()
            .filter_map(|t| t.run(algorithm))
            .map(|r| match step {
                Some(s) => r.counts.step(s),
                None => r.counts.total(),
            })
            .collect();
        if picked.is_empty() {
            return None;
        }
        let len = picked.len() as f64;
        let sum = |f: fn(&metrics::StepCounts) -> u64| picked.iter().map(f).sum::<u64>() as f64 / len;
        Some(MeanCounts {
            mults: sum(|c| c.mults),
            invs: sum(|c| c.invs),
            iterations: sum(|c| c.iterations),
        })
    }

    /// Indices of trials where the suggested pipeline did more work than
    /// Truong's.
    pub fn claim_violations(&self) -> Vec<usize> {
        self.trials
            .iter()
            .enumerate()
            .filter(|(_, t)| !t.suggested_within_truong())
            .map(|(i, _)| i)
            .collect()
    }

    fn rows(&self) -> Vec<(Algorithm, String, MeanCounts)> {
        let mut rows = Vec::new();
        for alg in self.algorithms() {
            for step in Step::ALL {
                let m = self.mean(alg, Some(step)).expect("algorithm present");
                rows.push((alg, step.label().to_string(), m));
            }
            rows.push((alg, "total".into(), self.mean(alg, None).expect("algorithm present")));
        }
        rows
    }

    pub fn write_table(&self, mut out: impl Write) -> std::io::Result<()> {
        writeln!(
            out,
            "RS({}, {}) op counts, mean over {} trials",
            self.n,
            self.k,
            self.trials.len()
        )?;
        writeln!(
            out,
            "{:<12} {:>6} {:>12} {:>8} {:>10}",
            "algorithm", "step", "mults", "invs", "iterations"
        )?;
        for (alg, step, m) in self.rows() {
            writeln!(
                out,
                "{:<12} {:>6} {:>12.1} {:>8.1} {:>10.1}",
                alg.name(),
                step,
                m.mults,
                m.invs,
                m.iterations
            )?;
        }
        Ok(())
    }

    /// CSV with columns algorithm, step, mults, invs, iterations (means).
    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let io = |e: csv::Error| Error::Io(format!("writing {}: {e}", path.display()));
        let mut w = csv::Writer::from_path(path).map_err(io)?;
        w.write_record(["algorithm", "step", "mults", "invs", "iterations"])
            .map_err(io)?;
        for (alg, step, m) in self.rows() {
            w.write_record([
                alg.name().to_string(),
                step,
                m.mults.to_string(),
                m.invs.to_string(),
                m.iterations.to_string(),
            ])
            .map_err(io)?;
        }
        w.flush()
            .map_err(|e| Error::Io(format!("writing {}: {e}", path.display())))
    }
}

/// Runs every applicable decoder on `config.trials` random corrupted
/// codewords. Errors-only decoding joins in for trials without erasures.
pub fn bench(params: &CodeParams, config: &BenchConfig) -> Result<OpCountReport> {
    let params = params.clone().with_self_check(false);
    let l = config.erasures;
    let d = params.d();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let q = params.field().size() as u32;

    let mut trials = Vec::with_capacity(config.trials);
    for _ in 0..config.trials {
        let t = match config.errors {
            Some(t) => t,
            None if l < d => rng.gen_range(0..=(d - l - 1) / 2),
            None => 0,
        };
        let values: Vec<u32> = (0..params.k()).map(|_| rng.gen_range(0..q)).collect();
        let message = Message::from_values(&params, &values)?;
        let codeword = params.encode(&message)?;
        let spec = ChannelSpec::random(t, l, rng.gen());
        let received = corrupt(&params, &codeword, &spec)?.received;

        let mut algorithms = Algorithm::ERASURE_DECODERS.to_vec();
        if l == 0 {
            algorithms.insert(0, Algorithm::ErrorsOnly);
        }
        let runs = algorithms
            .into_iter()
            .map(|algorithm| {
                let (result, counts) = metrics::measure(|| params.decode(algorithm, &received));
                let success = matches!(&result, Ok(dec) if dec.message == message);
                match result {
                    Ok(_) | Err(Error::Decode(_)) => Ok(DecoderRun {
                        algorithm,
                        counts,
                        success,
                    }),
                    Err(e) => Err(e),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        trials.push(TrialRecord {
            errors: t,
            erasures: l,
            runs,
        });
    }
    Ok(OpCountReport {
        n: params.n(),
        k: params.k(),
        trials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::Field;

    fn rs15_7() -> CodeParams {
        CodeParams::new(Field::with_default_poly(4).unwrap(), 7).unwrap()
    }

    #[test]
    fn zero_trials_is_empty() {
        let report = bench(
            &rs15_7(),
            &BenchConfig {
                trials: 0,
                errors: None,
                erasures: 2,
                seed: 1,
            },
        )
        .unwrap();
        assert!(report.is_empty());
        assert!(report.algorithms().is_empty());
        assert!(report.mean(Algorithm::Gao, None).is_none());
    }

    #[test]
    fn suggested_never_exceeds_truong() {
        let report = bench(
            &rs15_7(),
            &BenchConfig {
                trials: 100,
                errors: Some(2),
                erasures: 2,
                seed: 42,
            },
        )
        .unwrap();
        assert_eq!(report.trials.len(), 100);
        assert!(report.claim_violations().is_empty());
        for t in &report.trials {
            assert!(t.runs.iter().all(|r| r.success));
        }
    }

    #[test]
    fn without_erasures_suggested_solve_matches_errors_only() {
        let report = bench(
            &rs15_7(),
            &BenchConfig {
                trials: 30,
                errors: None,
                erasures: 0,
                seed: 8,
            },
        )
        .unwrap();
        for t in &report.trials {
            let eo = t.run(Algorithm::ErrorsOnly).unwrap();
            let sg = t.run(Algorithm::Suggested).unwrap();
            assert_eq!(eo.counts.step(Step::Solve), sg.counts.step(Step::Solve));
        }
    }

    #[test]
    fn counts_are_deterministic() {
        let cfg = BenchConfig {
            trials: 10,
            errors: None,
            erasures: 3,
            seed: 99,
        };
        assert_eq!(bench(&rs15_7(), &cfg).unwrap(), bench(&rs15_7(), &cfg).unwrap());
    }

    #[test]
    fn table_and_csv() {
        let report = bench(
            &rs15_7(),
            &BenchConfig {
                trials: 3,
                errors: Some(1),
                erasures: 1,
                seed: 5,
            },
        )
        .unwrap();
        let mut buf = Vec::new();
        report.write_table(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("suggested"));
        assert!(text.contains("2b"));

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("counts.csv");
        report.write_csv(&path).unwrap();
        let csv = std::fs::read_to_string(&path).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("algorithm,step,mults,invs,iterations"));
        // 3 algorithms × (5 steps + total)
        assert_eq!(lines.count(), 18);
    }
}
