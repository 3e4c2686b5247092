//! Reduced-scale run of the full invariant suite, printing one line per
//! suite. Any failure prints the first counterexample and exits nonzero.

use num_bigint::BigInt;
use num_integer::Integer;

use sdet::census::{run_census, CensusConfig, CensusMode};
use sdet::determinants::{
    dihedral_cross_check, m16_factored, regular_determinant, sd16_factored, sd_general_factored,
    GroupSpec,
};
use sdet::group_ring::GroupRingElement;
use sdet::number_theory::{classify, cornacchia2, is_prime, legendre_minus2, legendre_minus2_euler};
use sdet::witness::witness;

struct Harness {
    seed: u64,
    failed: bool,
}

impl Harness {
    fn suite<F: FnOnce() -> Result<(), String>>(&mut self, name: &str, f: F) {
        match f() {
            Ok(()) => println!("PASS {name}"),
            Err(counterexample) => {
                println!("FAIL {name}: {counterexample}");
                self.failed = true;
            }
        }
    }
}

struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn coeff(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }

    fn element(&mut self, n: u32, lo: i64, hi: i64) -> GroupRingElement {
        let half = 1usize << (n - 1);
        let a: Vec<i64> = (0..half).map(|_| self.coeff(lo, hi)).collect();
        let b: Vec<i64> = (0..half).map(|_| self.coeff(lo, hi)).collect();
        GroupRingElement::from_i64(n, &a, &b).unwrap()
    }
}

pub fn run(seed: u64) -> u8 {
    let mut h = Harness {
        seed,
        failed: false,
    };
    let base_seed = h.seed;

    h.suite("factored-vs-oracle (sd16, random)", || {
        let mut rng = Rng(base_seed);
        for _ in 0..2000 {
            let f = rng.element(4, -9, 9);
            let fac = sd16_factored(&f).map_err(|e| e.to_string())?;
            let oracle = regular_determinant(&f, GroupSpec::sd16()).map_err(|e| e.to_string())?;
            if fac.product != oracle {
                return Err(format!("{f}: factored {} oracle {oracle}", fac.product));
            }
        }
        Ok(())
    });

    h.suite("factored-vs-oracle (sd32/m16)", || {
        let mut rng = Rng(base_seed ^ 1);
        for _ in 0..50 {
            let f = rng.element(5, -3, 3);
            let fac = sd_general_factored(&f).map_err(|e| e.to_string())?;
            let oracle = regular_determinant(&f, GroupSpec::sd32()).map_err(|e| e.to_string())?;
            if fac.product != oracle {
                return Err(format!("sd32 {f}"));
            }
        }
        for _ in 0..500 {
            let f = rng.element(4, -6, 6);
            let fac = m16_factored(&f).map_err(|e| e.to_string())?;
            let oracle = regular_determinant(&f, GroupSpec::m16()).map_err(|e| e.to_string())?;
            if fac.product != oracle {
                return Err(format!("m16 {f}"));
            }
        }
        Ok(())
    });

    h.suite("dihedral cross-check", || {
        let mut rng = Rng(base_seed ^ 2);
        for _ in 0..200 {
            let f = rng.element(4, -7, 7);
            let (lhs, rhs) = dihedral_cross_check(&f).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return Err(format!("{f}: {lhs} vs {rhs}"));
            }
        }
        Ok(())
    });

    h.suite("witness round trips", || {
        let mut targets: Vec<BigInt> = vec![
            17.into(),
            (-7).into(),
            45.into(),
            (-27).into(),
            605.into(),
            0.into(),
            1024.into(),
            2048.into(),
            (4096 * 5).into(),
        ];
        for m in -5i64..=5 {
            targets.push(BigInt::from(1 + 16 * m));
            targets.push(BigInt::from(16 * m - 7));
            targets.push(BigInt::from(1024 * m));
            for p in [3i64, 11, 19] {
                targets.push(BigInt::from((5 + 16 * m) * p * p));
                targets.push(BigInt::from((16 * m - 3) * p * p));
            }
        }
        for t in targets {
            let w = witness(&t).map_err(|e| format!("target {t}: {e}"))?;
            if !w.verified {
                return Err(format!("target {t} not verified"));
            }
        }
        Ok(())
    });

    h.suite("cornacchia exhaustive < 10^4", || {
        let mut p = BigInt::from(3);
        while p < BigInt::from(10_000) {
            if is_prime(&p) && p.mod_floor(&BigInt::from(8)) == BigInt::from(3) {
                let (u, v) = cornacchia2(&p).map_err(|e| e.to_string())?;
                if &u * &u + 2 * &v * &v != p || u.is_even() || v.is_even() {
                    return Err(format!("p={p}: U={u} V={v}"));
                }
            }
            p += 2;
        }
        Ok(())
    });

    h.suite("legendre vs euler criterion", || {
        let mut p = BigInt::from(3);
        while p < BigInt::from(10_000) {
            if is_prime(&p) {
                let a = legendre_minus2(&p).map_err(|e| e.to_string())?;
                let b = legendre_minus2_euler(&p).map_err(|e| e.to_string())?;
                if a != b {
                    return Err(format!("p={p}: {a} vs {b}"));
                }
            }
            p += 2;
        }
        Ok(())
    });

    h.suite("classify vs brute-force predicate", || {
        for n in (-2000i64..=2000).filter(|n| n % 2 != 0) {
            let got = classify(&BigInt::from(n)).achievable;
            let want = Some(brute_force_achievable_odd(n));
            if got != want {
                return Err(format!("n={n}: {got:?} vs {want:?}"));
            }
        }
        Ok(())
    });

    h.suite("census invariants ({0,1}^16, max 6 nonzero)", || {
        let config = CensusConfig {
            lo: 0,
            hi: 1,
            mode: CensusMode::Enumerate { max_nonzero: 6 },
            value_bound: None,
            workers: 2,
            use_symmetry: false,
        };
        let report = run_census(&config).map_err(|e| e.to_string())?;
        if let Some(v) = report.violations.first() {
            return Err(format!("{}: {}", v.value, v.description));
        }
        Ok(())
    });

    if h.failed {
        3
    } else {
        println!("selftest: all suites passed (seed {seed})");
        0
    }
}

/// Direct transcription of the classification statement, used only as a
/// cross-check: odd n is achievable iff n = 1 mod 8, or n = 5 mod 8 and
/// some prime p = 3 mod 8 has p^2 | n.
fn brute_force_achievable_odd(n: i64) -> bool {
    let r = n.rem_euclid(8);
    match r {
        1 => true,
        5 => {
            let mut p = 3i64;
            while p * p <= n.abs() {
                if n % (p * p) == 0 && p % 8 == 3 && small_prime(p) {
                    return true;
                }
                p += 2;
            }
            false
        }
        _ => false,
    }
}

fn small_prime(p: i64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
