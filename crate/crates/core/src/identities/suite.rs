//! Parameter grids and the concurrent runner.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::*;

/// Environment variable holding the number of worker threads for
/// [`run_cases`] callers that do not pass one explicitly.
pub const WORKERS_ENV: &str = "SCHURPATHS_WORKERS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    BinetCauchy,
    QBinetCauchy,
    Kuperberg,
    QBinomialDet,
    Deviation,
    Watermelon,
    Counts,
    GesselViennot,
    Zq,
    Bijection,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::BinetCauchy,
        Suite::QBinetCauchy,
        Suite::Kuperberg,
        Suite::QBinomialDet,
        Suite::Deviation,
        Suite::Watermelon,
        Suite::Counts,
        Suite::GesselViennot,
        Suite::Zq,
        Suite::Bijection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::BinetCauchy => "binet-cauchy",
            Suite::QBinetCauchy => "q-binet-cauchy",
            Suite::Kuperberg => "kuperberg",
            Suite::QBinomialDet => "qbinomial-det",
            Suite::Deviation => "deviation",
            Suite::Watermelon => "watermelon",
            Suite::Counts => "counts",
            Suite::GesselViennot => "gv",
            Suite::Zq => "zq",
            Suite::Bijection => "bijection",
        }
    }

    /// Parses a suite name; `all` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>, String> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        let mut out = Vec::new();
        for part in s.split(',') {
            let suite: Suite = part.trim().parse()?;
            if !out.contains(&suite) {
                out.push(suite);
            }
        }
        out.sort();
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            format!("unknown suite '{s}' (expected all or one of {})", names.join(", "))
        })
    }
}

/// One unit of work for the runner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Case {
    BinetCauchy { n: usize, m: usize, a: GeometricPoint, b: GeometricPoint },
    QBinetCauchy { n: usize, m: usize },
    Kuperberg { n: usize, m: usize },
    QBinomialDet { n: usize, m: usize },
    Deviation { n: usize, m: usize, k: usize, a: GeometricPoint, b: GeometricPoint },
    Watermelon { n: usize, m: usize, k: usize },
    Counts { n: usize, l: usize, m: usize },
    GesselViennot { lambda: Partition, n: usize },
    Zq { n: usize, l: usize, m: usize },
    Bijection { n: usize, l: usize, m: usize },
}

/// Grid of parameters: `N` in `1..=max_n`, `M` in `1..=max_m`, and every
/// admissible deviation. Gessel–Viennot shapes range over `λ ⊆ M^N` unless
/// `shapes_in_box` names another box `(rows, cols)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub suites: Vec<Suite>,
    pub max_n: usize,
    pub max_m: usize,
    pub shapes_in_box: Option<(usize, usize)>,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { suites: Suite::ALL.to_vec(), max_n: 3, max_m: 3, shapes_in_box: None }
    }
}

impl GridSpec {
    /// All cases in a fixed order: by suite, then by parameter tuple.
    pub fn cases(&self) -> Vec<Case> {
        let mut out = Vec::new();
        let nm = || (1..=self.max_n).flat_map(|n| (1..=self.max_m).map(move |m| (n, m)));
        for &suite in &self.suites {
            match suite {
                Suite::BinetCauchy => {
                    for (n, m) in nm() {
                        for (a, b) in golden_points(n) {
                            out.push(Case::BinetCauchy { n, m, a, b });
                        }
                    }
                }
                Suite::QBinetCauchy => out.extend(nm().map(|(n, m)| Case::QBinetCauchy { n, m })),
                Suite::Kuperberg => out.extend(nm().map(|(n, m)| Case::Kuperberg { n, m })),
                Suite::QBinomialDet => out.extend(nm().map(|(n, m)| Case::QBinomialDet { n, m })),
                Suite::Deviation => {
                    for (n, m) in nm() {
                        for (a, b) in golden_points(n) {
                            for k in 0..n {
                                let a = GeometricPoint::new(a.exponents()[..n - k].to_vec());
                                out.push(Case::Deviation { n, m, k, a, b: b.clone() });
                            }
                        }
                    }
                }
                Suite::Watermelon => {
                    for (n, m) in nm() {
                        out.extend((0..=n).map(|k| Case::Watermelon { n, m, k }));
                    }
                }
                Suite::Counts | Suite::Zq | Suite::Bijection => {
                    for (n, m) in nm() {
                        for l in 0..=n {
                            out.push(match suite {
                                Suite::Counts => Case::Counts { n, l, m },
                                Suite::Zq => Case::Zq { n, l, m },
                                _ => Case::Bijection { n, l, m },
                            });
                        }
                    }
                }
                Suite::GesselViennot => match self.shapes_in_box {
                    Some((rows, cols)) => {
                        out.extend(enumerate_in_box(rows, cols).map(|lambda| Case::GesselViennot { lambda, n: rows }))
                    }
                    None => {
                        for n in 1..=self.max_n {
                            out.extend(enumerate_in_box(n, self.max_m).map(|lambda| Case::GesselViennot { lambda, n }));
                        }
                    }
                },
            }
        }
        out
    }
}

pub fn run_case(case: &Case) -> Result<Vec<IdentityReport>, IdentityError> {
    Ok(match case {
        Case::BinetCauchy { n, m, a, b } => vec![verify_binet_cauchy(*n, *m, a, b)?],
        Case::QBinetCauchy { n, m } => vec![verify_q_binet_cauchy(*n, *m)?],
        Case::Kuperberg { n, m } => vec![verify_kuperberg(*n, *m)?],
        Case::QBinomialDet { n, m } => vec![verify_qbinomial_det(*n, *m)?],
        Case::Deviation { n, m, k, a, b } => vec![verify_deviation_binet_cauchy(*n, *m, *k, a, b)?],
        Case::Watermelon { n, m, k } => verify_watermelon_suite(*n, *m, *k)?,
        Case::Counts { n, l, m } => verify_counts(*n, *l, *m)?,
        Case::GesselViennot { lambda, n } => vec![verify_gessel_viennot(lambda, *n)?],
        Case::Zq { n, l, m } => vec![verify_zq_equals_w(*n, *l, *m)?],
        Case::Bijection { n, l, m } => vec![verify_gradient_bijection(*n, *l, *m)?],
    })
}

/// Worker count from [`WORKERS_ENV`], defaulting to the available
/// parallelism.
pub fn worker_count() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

/// Runs every case on a pool of `workers` threads. Results come back in case
/// order regardless of completion order.
pub fn run_cases(cases: &[Case], workers: usize) -> Vec<Result<Vec<IdentityReport>, IdentityError>> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build().expect("thread pool");
    pool.install(|| cases.par_iter().map(run_case).collect())
}

/// Random Binet–Cauchy cases with generic exponents, reproducible from
/// `seed`.
pub fn fuzz_cases(seed: u64, count: usize, max_n: usize, max_m: usize) -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<i64> = (-4..=8).collect();
    let mut out = Vec::with_capacity(count);
    while out.len() < count && max_n > 0 {
        let n = rng.gen_range(1..=max_n);
        let m = rng.gen_range(0..=max_m);
        let a: Vec<i64> = pool.choose_multiple(&mut rng, n).copied().collect();
        let b: Vec<i64> = pool.choose_multiple(&mut rng, n).copied().collect();
        if a.iter().any(|x| b.iter().any(|y| x + y == 0)) {
            continue;
        }
        out.push(Case::BinetCauchy { n, m, a: GeometricPoint::new(a), b: GeometricPoint::new(b) });
    }
    out
}
