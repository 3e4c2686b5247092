//! Census of achieved SD16 determinants over coefficient boxes: sweeps a
//! configurable space (exhaustive or seeded random), collects achieved
//! values with minimal witnesses, and cross-checks every observation
//! against the necessary conditions and the classifier.
//!
//! The sweep uses the factored formula as the fast path with periodic
//! oracle spot-checks. Execution is embarrassingly parallel over a static
//! partition of the index space; for a fixed config the merged result is
//! identical for any worker count.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::determinants::{regular_determinant, sd16_factored, GroupSpec};
use crate::group_ring::GroupRingElement;
use crate::number_theory::classify;
use crate::rng::SplitMix64;
use crate::{Error, Result};

const SPOT_CHECK_PERIOD: u64 = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CensusMode {
    /// Every element of [lo,hi]^16 with at most `max_nonzero` nonzero
    /// coefficients.
    Enumerate { max_nonzero: usize },
    /// `samples` elements drawn uniformly from [lo,hi]^16, seeded.
    Random { samples: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusConfig {
    pub lo: i64,
    pub hi: i64,
    pub mode: CensusMode,
    /// Record only values with |D| <= bound (None = record everything).
    pub value_bound: Option<BigInt>,
    pub workers: usize,
    /// Enumerate only orbit representatives under the determinant-preserving
    /// translations validated at startup. Off by default; counts then refer
    /// to orbits, not raw elements.
    pub use_symmetry: bool,
}

impl CensusConfig {
    pub fn validate(&self) -> Result<()> {
        if self.lo > self.hi {
            return Err(Error::InvalidConfig(format!(
                "lo {} > hi {}",
                self.lo, self.hi
            )));
        }
        if self.workers == 0 {
            return Err(Error::InvalidConfig("workers must be >= 1".into()));
        }
        if let CensusMode::Enumerate { max_nonzero } = self.mode {
            if max_nonzero > 16 {
                return Err(Error::InvalidConfig(format!(
                    "max_nonzero {max_nonzero} > 16"
                )));
            }
        }
        Ok(())
    }

    fn radix(&self) -> u64 {
        (self.hi - self.lo + 1) as u64
    }

    /// Total index space (number of candidate indices, before filters).
    pub fn index_space(&self) -> u64 {
        match self.mode {
            CensusMode::Enumerate { .. } => self.radix().checked_pow(16).unwrap_or(u64::MAX),
            CensusMode::Random { samples, .. } => samples,
        }
    }
}

/// One achieved determinant value with its first witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AchievedValue {
    pub value: BigInt,
    pub example: GroupRingElement,
    pub count: u64,
    /// Global index of the example, used to merge deterministically.
    pub example_index: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub value: BigInt,
    pub element: Option<GroupRingElement>,
    pub description: String,
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub config: CensusConfig,
    /// Keyed by value, so iteration is sorted.
    pub achieved: BTreeMap<BigInt, AchievedValue>,
    pub violations: Vec<Violation>,
    pub scanned: u64,
    pub recorded: u64,
    pub elapsed: Duration,
}

impl CensusReport {
    fn empty(config: &CensusConfig) -> Self {
        CensusReport {
            config: config.clone(),
            achieved: BTreeMap::new(),
            violations: Vec::new(),
            scanned: 0,
            recorded: 0,
            elapsed: Duration::ZERO,
        }
    }

    /// One record per achieved value: value, element string, count.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for av in self.achieved.values() {
            out.push_str(&format!("{}\t{}\t{}\n", av.value, av.example, av.count));
        }
        out
    }

    pub fn achieved_values(&self) -> Vec<BigInt> {
        self.achieved.keys().cloned().collect()
    }
}

/// Merge two partial reports from compatible configs.
pub fn merge_reports(a: CensusReport, b: CensusReport) -> Result<CensusReport> {
    let compatible = a.config.lo == b.config.lo
        && a.config.hi == b.config.hi
        && a.config.mode == b.config.mode
        && a.config.value_bound == b.config.value_bound
        && a.config.use_symmetry == b.config.use_symmetry;
    if !compatible {
        return Err(Error::IncompatibleReports(format!(
            "{:?} vs {:?}",
            a.config, b.config
        )));
    }
    let mut out = a;
    for (value, av) in b.achieved {
        out.achieved
            .entry(value)
            .and_modify(|cur| {
                cur.count += av.count;
                if av.example_index < cur.example_index {
                    cur.example = av.example.clone();
                    cur.example_index = av.example_index;
                }
            })
            .or_insert(av);
    }
    out.violations.extend(b.violations);
    out.scanned += b.scanned;
    out.recorded += b.recorded;
    out.elapsed += b.elapsed;
    Ok(out)
}

/// Decode global index -> coefficient vector (mixed radix, digit 0 = a_0).
fn decode(config: &CensusConfig, mut index: u64) -> [i64; 16] {
    let radix = config.radix();
    let mut c = [0i64; 16];
    for slot in c.iter_mut() {
        *slot = config.lo + (index % radix) as i64;
        index /= radix;
    }
    c
}

fn sample(config: &CensusConfig, seed: u64, index: u64) -> [i64; 16] {
    // per-index generator so any partition of the index space sees the
    // same element at the same global index
    let mut rng = SplitMix64::new(seed ^ index.wrapping_mul(0x9e3779b97f4a7c15));
    let mut c = [0i64; 16];
    for slot in c.iter_mut() {
        *slot = rng.range_i64(config.lo, config.hi);
    }
    c
}

fn element_from(c: &[i64; 16]) -> GroupRingElement {
    GroupRingElement::from_i64(4, &c[..8], &c[8..]).expect("length 8+8")
}

/// The 16 translations F -> g*F by group basis elements, kept only if
/// determinant-preserving on a direct check of 100 random elements.
fn validated_symmetries(config: &CensusConfig) -> Result<Vec<GroupRingElement>> {
    let spec = GroupSpec::sd16();
    let twist = spec.twist()?;
    let mut rng = SplitMix64::new(0x5ca1e);
    let probes: Vec<GroupRingElement> = (0..100)
        .map(|_| {
            let mut c = [0i64; 16];
            for slot in c.iter_mut() {
                *slot = rng.range_i64(-5, 5);
            }
            element_from(&c)
        })
        .collect();
    let mut kept = Vec::new();
    for idx in 0..16 {
        let mut c = [0i64; 16];
        c[idx] = 1;
        let g = element_from(&c);
        let preserves = probes.iter().all(|f| {
            let lhs = sd16_factored(&g.multiply(f, &twist).unwrap()).unwrap().product;
            let rhs = sd16_factored(f).unwrap().product;
            lhs == rhs
        });
        if preserves && idx != 0 {
            kept.push(g);
        }
    }
    let _ = config;
    Ok(kept)
}

/// Lexicographic canonicity under the validated translations: an element
/// is kept iff no translate has a smaller coefficient vector.
fn is_canonical(
    f: &GroupRingElement,
    symmetries: &[GroupRingElement],
    twist: &crate::group_ring::TwistMap,
) -> bool {
    let mine = f.coefficients();
    for g in symmetries {
        let t = g.multiply(f, twist).expect("same n");
        if t.coefficients() < mine {
            return false;
        }
    }
    true
}

fn scan_range(
    config: &CensusConfig,
    symmetries: &[GroupRingElement],
    range: std::ops::Range<u64>,
) -> Result<CensusReport> {
    let start = Instant::now();
    let spec = GroupSpec::sd16();
    let twist = spec.twist()?;
    let mut report = CensusReport::empty(config);
    let four = BigInt::from(4);
    let eight = BigInt::from(8);
    let k1024 = BigInt::from(1024);

    for index in range {
        let coeffs = match &config.mode {
            CensusMode::Enumerate { max_nonzero } => {
                let c = decode(config, index);
                if c.iter().filter(|&&v| v != 0).count() > *max_nonzero {
                    continue;
                }
                c
            }
            CensusMode::Random { seed, .. } => sample(config, *seed, index),
        };
        let f = element_from(&coeffs);
        if config.use_symmetry && !is_canonical(&f, symmetries, &twist) {
            continue;
        }
        let fac = sd16_factored(&f)?;
        report.scanned += 1;

        if index % SPOT_CHECK_PERIOD == 0 {
            let oracle = regular_determinant(&f, spec)?;
            if oracle != fac.product {
                return Err(Error::FormulaMismatch(format!(
                    "element {f}: factored {} vs oracle {oracle}",
                    fac.product
                )));
            }
        }

        let d = &fac.product;
        if d.is_odd() {
            if d.mod_floor(&four) != BigInt::from(1) {
                report.violations.push(Violation {
                    value: d.clone(),
                    element: Some(f.clone()),
                    description: "odd determinant not 1 mod 4".into(),
                });
            }
            if d.mod_floor(&eight) == BigInt::from(5)
                && fac.a3.mod_floor(&eight) != BigInt::from(3)
            {
                report.violations.push(Violation {
                    value: d.clone(),
                    element: Some(f.clone()),
                    description: format!("determinant 5 mod 8 but A3 = {} is not 3 mod 8", fac.a3),
                });
            }
        } else if !d.is_multiple_of(&k1024) {
            report.violations.push(Violation {
                value: d.clone(),
                element: Some(f.clone()),
                description: "even determinant not divisible by 2^10".into(),
            });
        }

        let within = config
            .value_bound
            .as_ref()
            .map(|bound| d.abs() <= *bound)
            .unwrap_or(true);
        if within {
            report.recorded += 1;
            report
                .achieved
                .entry(d.clone())
                .and_modify(|av| av.count += 1)
                .or_insert_with(|| AchievedValue {
                    value: d.clone(),
                    example: f.clone(),
                    count: 1,
                    example_index: index,
                });
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Run the census described by `config`. Deterministic for a fixed config
/// (including seed) regardless of worker count.
pub fn run_census(config: &CensusConfig) -> Result<CensusReport> {
    config.validate()?;
    let symmetries = if config.use_symmetry {
        validated_symmetries(config)?
    } else {
        Vec::new()
    };
    let total = config.index_space();
    let workers = config.workers.min(total.max(1) as usize).max(1);

    let mut partials: Vec<CensusReport> = Vec::with_capacity(workers);
    if workers == 1 {
        partials.push(scan_range(config, &symmetries, 0..total)?);
    } else {
        let chunk = total / workers as u64;
        let results: Vec<Result<CensusReport>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let lo = w as u64 * chunk;
                    let hi = if w == workers - 1 {
                        total
                    } else {
                        (w as u64 + 1) * chunk
                    };
                    let symmetries = &symmetries;
                    scope.spawn(move || scan_range(config, symmetries, lo..hi))
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for r in results {
            partials.push(r?);
        }
    }

    let mut merged = partials
        .into_iter()
        .reduce(|a, b| merge_reports(a, b).expect("partials share a config"))
        .expect("at least one partial");

    // classifier cross-check on every distinct recorded value, and oracle
    // re-verification of every stored example
    let spec = GroupSpec::sd16();
    for av in merged.achieved.values() {
        let verdict = classify(&av.value);
        if verdict.achievable == Some(false) {
            merged.violations.push(Violation {
                value: av.value.clone(),
                element: Some(av.example.clone()),
                description: format!("achieved value classified as impossible: {verdict}"),
            });
        }
        let oracle = regular_determinant(&av.example, spec)?;
        if oracle != av.value {
            merged.violations.push(Violation {
                value: av.value.clone(),
                element: Some(av.example.clone()),
                description: format!("stored example re-verifies to {oracle}"),
            });
        }
    }
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(mode: CensusMode, lo: i64, hi: i64, workers: usize) -> CensusConfig {
        CensusConfig {
            lo,
            hi,
            mode,
            value_bound: None,
            workers,
            use_symmetry: false,
        }
    }

    #[test]
    fn invalid_configs_rejected() {
        let c = config(CensusMode::Enumerate { max_nonzero: 17 }, 0, 1, 1);
        assert!(c.validate().is_err());
        let c = config(CensusMode::Enumerate { max_nonzero: 4 }, 2, 1, 1);
        assert!(c.validate().is_err());
        let mut c = config(CensusMode::Enumerate { max_nonzero: 4 }, 0, 1, 1);
        c.workers = 0;
        assert!(c.validate().is_err());
    }

    #[test]
    fn zero_one_box_small_nonzero() {
        // all {0,1}^16 with at most 2 nonzero coefficients
        let c = config(CensusMode::Enumerate { max_nonzero: 2 }, 0, 1, 1);
        let r = run_census(&c).unwrap();
        assert!(r.violations.is_empty());
        assert_eq!(r.scanned, 1 + 16 + 120);
        // determinants of single group elements are +-1; here all +1
        assert!(r.achieved.contains_key(&BigInt::from(1)));
    }

    #[test]
    fn sharded_equals_single_threaded() {
        let mode = CensusMode::Random {
            samples: 4000,
            seed: 42,
        };
        let single = run_census(&config(mode.clone(), -3, 3, 1)).unwrap();
        let sharded = run_census(&config(mode, -3, 3, 4)).unwrap();
        assert_eq!(single.achieved_values(), sharded.achieved_values());
        assert_eq!(single.to_text(), sharded.to_text());
        assert_eq!(single.scanned, sharded.scanned);
    }

    #[test]
    fn merge_with_empty_is_identity() {
        let c = config(CensusMode::Enumerate { max_nonzero: 1 }, 0, 1, 1);
        let r = run_census(&c).unwrap();
        let empty = CensusReport::empty(&c);
        let merged = merge_reports(r.clone(), empty).unwrap();
        assert_eq!(merged.to_text(), r.to_text());
        assert_eq!(merged.scanned, r.scanned);
    }

    #[test]
    fn merge_is_commutative_on_achieved_sets() {
        let mode = CensusMode::Random {
            samples: 500,
            seed: 7,
        };
        let c = config(mode, -2, 2, 1);
        let a = scan_range(&c, &[], 0..250).unwrap();
        let b = scan_range(&c, &[], 250..500).unwrap();
        let ab = merge_reports(a.clone(), b.clone()).unwrap();
        let ba = merge_reports(b, a).unwrap();
        assert_eq!(ab.to_text(), ba.to_text());
    }

    #[test]
    fn incompatible_merge_rejected() {
        let c1 = config(CensusMode::Enumerate { max_nonzero: 1 }, 0, 1, 1);
        let c2 = config(CensusMode::Enumerate { max_nonzero: 1 }, -1, 1, 1);
        let r1 = CensusReport::empty(&c1);
        let r2 = CensusReport::empty(&c2);
        assert!(merge_reports(r1, r2).is_err());
    }

    #[test]
    fn symmetry_reduction_preserves_achieved_set() {
        let mode = CensusMode::Enumerate { max_nonzero: 2 };
        let plain = run_census(&config(mode.clone(), 0, 1, 1)).unwrap();
        let mut with_sym = config(mode, 0, 1, 1);
        with_sym.use_symmetry = true;
        let reduced = run_census(&with_sym).unwrap();
        assert_eq!(plain.achieved_values(), reduced.achieved_values());
        assert!(reduced.scanned <= plain.scanned);
    }

    #[test]
    fn random_run_odd_values_are_one_mod_four() {
        let c = config(
            CensusMode::Random {
                samples: 2000,
                seed: 1,
            },
            -5,
            5,
            2,
        );
        let r = run_census(&c).unwrap();
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        let four = BigInt::from(4);
        for v in r.achieved.keys() {
            if v.is_odd() {
                assert_eq!(v.mod_floor(&four), BigInt::from(1));
            } else {
                assert!(v.is_multiple_of(&BigInt::from(1024)));
            }
        }
    }
}
