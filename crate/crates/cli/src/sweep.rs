//! Exhaustive verification sweep over one-bridge braids and boundary
//! slopes.
//!
//! Every knot `(n, b, t)` with `n <= max_n` is paired with every slope
//! `1 <= p <= max_slope`, `|q| <= max_slope`, `gcd(p, q) = 1`,
//! `gcd(p, n) = 1` whose weight homomorphism is nonzero on both
//! generators. For each admissible row the sweep checks that
//!
//! - Brown's criterion reports a unique maximum and a unique minimum;
//! - for mixed-sign weights (`wx < 0 < wy`) every maximum position lies
//!   in `{1..n}` and every minimum position in `{n+2..2n+1}`, and the
//!   prefix values in each of those windows are pairwise distinct mod `n`.
//!
//! Any violation aborts the sweep with a certificate. Rows are produced
//! in lexicographic `(n, b, t, p, q)` order regardless of the number of
//! worker threads, so CSV output is byte-identical run to run.

use std::collections::HashSet;

use kfk_core::braid::{is_knot, BraidParams};
use kfk_core::brown::{BrownVerdict, WeightHom};
use kfk_core::fibration::{fibers_over_slope, weight_for_slope, FibrationError, FibrationVerdict};
use kfk_core::slope::Slope;

#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    pub max_n: usize,
    pub max_slope: i64,
    pub threads: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 12,
            max_slope: 15,
            threads: 1,
        }
    }
}

/// One verified sweep row.
#[derive(Clone, Debug)]
pub struct SweepRecord {
    pub params: BraidParams,
    pub slope: Slope,
    pub verdict: FibrationVerdict,
}

/// A failed check, with everything needed to audit it.
#[derive(Clone, Debug)]
pub struct SweepFailure {
    pub event: &'static str,
    pub params: BraidParams,
    pub slope: Slope,
    pub weight: WeightHom,
    pub verdict: BrownVerdict,
}

/// All `(params, slope)` jobs in lexicographic `(n, b, t, p, q)` order.
pub fn jobs(config: &SweepConfig) -> Vec<(BraidParams, Slope)> {
    let mut out = Vec::new();
    for n in 2..=config.max_n {
        for b in 1..n {
            for t in 0..n {
                let params = BraidParams::new(n, b, t as i64).expect("in-range parameters");
                if !is_knot(&params) {
                    continue;
                }
                for p in 1..=config.max_slope {
                    for q in -config.max_slope..=config.max_slope {
                        let Ok(slope) = Slope::new(p, q) else {
                            continue;
                        };
                        if slope.p() != p || slope.q() != q {
                            continue; // (p, q) not primitive
                        }
                        if weight_for_slope(&params, slope).is_err() {
                            continue; // inadmissible: non-coprime winding or zero weight
                        }
                        out.push((params, slope));
                    }
                }
            }
        }
    }
    out
}

fn check_row(params: BraidParams, slope: Slope) -> Result<SweepRecord, Box<SweepFailure>> {
    let verdict = match fibers_over_slope(&params, slope) {
        Ok(v) => v,
        Err(FibrationError::Falsified(report)) => {
            return Err(Box::new(SweepFailure {
                event: "brown_extremum_not_unique",
                params: report.params,
                slope: report.slope,
                weight: report.weight,
                verdict: report.verdict,
            }));
        }
        Err(other) => unreachable!("inadmissible row survived the job filter: {other}"),
    };

    let hom = verdict.weight;
    if hom.wx < 0 && hom.wy > 0 {
        let n = params.n();
        let brown = &verdict.brown;
        let max_localized = brown.max_positions.iter().all(|&i| (1..=n).contains(&i));
        let min_localized = brown
            .min_positions
            .iter()
            .all(|&i| (n + 2..=2 * n + 1).contains(&i));
        if !max_localized || !min_localized {
            return Err(Box::new(SweepFailure {
                event: "mixed_sign_localization",
                params,
                slope,
                weight: hom,
                verdict: verdict.brown,
            }));
        }
        let distinct_mod_n = |values: &[i64]| {
            let mut seen = HashSet::new();
            values.iter().all(|&v| seen.insert(v.rem_euclid(n as i64)))
        };
        let head = &brown.prefix_values[..n];
        let tail = &brown.prefix_values[n + 1..=2 * n];
        if !distinct_mod_n(head) || !distinct_mod_n(tail) {
            return Err(Box::new(SweepFailure {
                event: "mod_n_collision",
                params,
                slope,
                weight: hom,
                verdict: verdict.brown,
            }));
        }
    }

    Ok(SweepRecord {
        params,
        slope,
        verdict,
    })
}

/// Runs the sweep, returning verified rows in lexicographic order or the
/// earliest failure.
pub fn run(config: &SweepConfig) -> Result<Vec<SweepRecord>, Box<SweepFailure>> {
    let jobs = jobs(config);
    let threads = config.threads.clamp(1, jobs.len().max(1));
    if threads == 1 {
        return jobs
            .into_iter()
            .map(|(params, slope)| check_row(params, slope))
            .collect();
    }

    type ChunkResult = Result<Vec<SweepRecord>, (usize, Box<SweepFailure>)>;
    let chunk_len = jobs.len().div_ceil(threads);
    let chunks: Vec<&[(BraidParams, Slope)]> = jobs.chunks(chunk_len).collect();
    let results: Vec<ChunkResult> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .enumerate()
            .map(|(chunk_idx, chunk)| {
                scope.spawn(move || {
                    let mut rows = Vec::with_capacity(chunk.len());
                    for (offset, &(params, slope)) in chunk.iter().enumerate() {
                        match check_row(params, slope) {
                            Ok(rec) => rows.push(rec),
                            Err(f) => return Err((chunk_idx * chunk_len + offset, f)),
                        }
                    }
                    Ok(rows)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });

    let mut rows = Vec::new();
    let mut earliest: Option<(usize, Box<SweepFailure>)> = None;
    for result in results {
        match result {
            Ok(mut chunk_rows) => rows.append(&mut chunk_rows),
            Err((idx, failure)) => {
                if earliest.as_ref().is_none_or(|(best, _)| idx < *best) {
                    earliest = Some((idx, failure));
                }
            }
        }
    }
    match earliest {
        Some((_, failure)) => Err(failure),
        None => Ok(rows),
    }
}

/// Worker count: `KFK_THREADS` when set, otherwise available parallelism
/// capped at 8.
pub fn threads_from_env() -> usize {
    match std::env::var("KFK_THREADS") {
        Ok(v) => v.parse::<usize>().ok().filter(|&t| t >= 1).unwrap_or(1),
        Err(_) => std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1)
            .min(8),
    }
}

pub const CSV_HEADER: &str = "n,b,t,p,q,wx,wy,max_pos,min_pos,fibred";

/// CSV serialisation of verified rows, one line per row plus header.
pub fn to_csv(records: &[SweepRecord]) -> String {
    let mut out = String::with_capacity(records.len() * 40 + CSV_HEADER.len() + 1);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for rec in records {
        let brown = &rec.verdict.brown;
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            rec.params.n(),
            rec.params.b(),
            rec.params.t(),
            rec.slope.p(),
            rec.slope.q(),
            rec.verdict.weight.wx,
            rec.verdict.weight.wy,
            brown.max_positions[0],
            brown.min_positions[0],
            rec.verdict.fibred,
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_is_clean() {
        let config = SweepConfig {
            max_n: 6,
            max_slope: 5,
            threads: 1,
        };
        let rows = run(&config).expect("no falsification");
        assert!(!rows.is_empty());
        for row in &rows {
            assert!(row.verdict.fibred);
            assert_eq!(row.verdict.boundary_components, row.params.n());
        }
    }

    #[test]
    fn jobs_are_lexicographically_sorted() {
        let config = SweepConfig {
            max_n: 7,
            max_slope: 4,
            threads: 1,
        };
        let jobs = jobs(&config);
        let keys: Vec<_> = jobs
            .iter()
            .map(|(k, s)| (k.n(), k.b(), k.t(), s.p(), s.q()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        sorted.dedup();
        assert_eq!(keys.len(), sorted.len());
    }

    #[test]
    fn parallel_matches_serial() {
        let serial = run(&SweepConfig {
            max_n: 7,
            max_slope: 5,
            threads: 1,
        })
        .unwrap();
        let parallel = run(&SweepConfig {
            max_n: 7,
            max_slope: 5,
            threads: 4,
        })
        .unwrap();
        assert_eq!(to_csv(&serial), to_csv(&parallel));
    }

    #[test]
    fn csv_shape() {
        let rows = run(&SweepConfig {
            max_n: 3,
            max_slope: 2,
            threads: 1,
        })
        .unwrap();
        let csv = to_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        let first = lines.next().expect("at least one row");
        assert_eq!(first.split(',').count(), 10);
        assert!(first.ends_with(",true"));
    }
}
