//! Arithmetic services behind the achievability classification: primality,
//! factorization (trial division + Pollard rho), the Legendre symbol
//! (-2/p), the representation U^2 + 2V^2 = p, and the classifier itself.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rng::SplitMix64;
use crate::{Error, Result};

const TRIAL_DIVISION_BOUND: u64 = 1_000_000;
const DEFAULT_RHO_ROUNDS: u32 = 64;

/// Miller-Rabin witnesses that make the test deterministic below 2^64.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality test: Miller-Rabin with the fixed 64-bit base
/// set; inputs above 2^64 additionally get seeded pseudorandom rounds.
pub fn is_prime(n: &BigInt) -> bool {
    if n.sign() == num_bigint::Sign::Minus {
        return false;
    }
    let two = BigInt::from(2);
    if n < &two {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if n.is_multiple_of(&p) {
            return false;
        }
    }
    // n - 1 = d * 2^s with d odd
    let n_minus_1: BigInt = n - 1;
    let s = n_minus_1.trailing_zeros().unwrap_or(0) as usize;
    let d = &n_minus_1 >> s;

    let witness = |a: &BigInt| -> bool {
        // true if a proves n composite
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            return false;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                return false;
            }
        }
        true
    };

    for b in MR_BASES {
        if witness(&BigInt::from(b)) {
            return false;
        }
    }
    if n.bits() > 64 {
        // extra rounds, deterministically seeded from n itself
        let seed = n
            .iter_u64_digits()
            .fold(0x5eed_u64, |acc, d| acc.rotate_left(7) ^ d);
        let mut rng = SplitMix64::new(seed);
        for _ in 0..20 {
            let a = BigInt::from(rng.next_u64() % u64::MAX) % (n - 3) + 2;
            if witness(&a) {
                return false;
            }
        }
    }
    true
}

/// (-2/p) for an odd prime p: +1 iff p = 1 or 3 mod 8.
pub fn legendre_minus2(p: &BigInt) -> Result<i32> {
    if p.is_even() || !is_prime(p) {
        return Err(Error::NotOddPrime(p.clone()));
    }
    let r = (p % 8u32).to_u32().unwrap();
    Ok(if r == 1 || r == 3 { 1 } else { -1 })
}

/// Euler's criterion (-2)^{(p-1)/2} mod p, the independent cross-check for
/// `legendre_minus2`.
pub fn legendre_minus2_euler(p: &BigInt) -> Result<i32> {
    if p.is_even() || !is_prime(p) {
        return Err(Error::NotOddPrime(p.clone()));
    }
    let e = (p - 1) / 2;
    let base = ((BigInt::from(-2) % p) + p) % p;
    let r = base.modpow(&e, p);
    Ok(if r.is_one() { 1 } else { -1 })
}

/// Positive odd (U, V) with U^2 + 2V^2 = p, for a prime p = 3 mod 8.
/// Brute-force scan over odd U <= sqrt(p); sizes at play make descent
/// algorithms unnecessary.
pub fn cornacchia2(p: &BigInt) -> Result<(BigInt, BigInt)> {
    if !is_prime(p) || (p % 8u32) != BigInt::from(3) {
        return Err(Error::BadResidue(p.clone()));
    }
    let mut u = BigInt::one();
    while &u * &u <= *p {
        let rest = (p - &u * &u) / 2u32;
        let v = rest.sqrt();
        if &v * &v == rest {
            return Ok((u, v));
        }
        u += 2u32;
    }
    // unreachable for valid input: p = 3 mod 8 always splits as U^2 + 2V^2
    Err(Error::NoRepresentation(p.clone()))
}

/// Prime factorization with completeness flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub n: BigInt,
    pub sign: i8,
    /// (prime, exponent), primes strictly increasing.
    pub factors: Vec<(BigInt, u32)>,
    /// Composite cofactors that survived the effort bound.
    pub unfactored: Vec<BigInt>,
    pub complete: bool,
}

impl Factorization {
    /// sign * prod p^e * prod unfactored; always equals n.
    pub fn reconstruct(&self) -> BigInt {
        let mut v = BigInt::from(self.sign);
        for (p, e) in &self.factors {
            v *= p.pow(*e);
        }
        for c in &self.unfactored {
            v *= c;
        }
        v
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.sign < 0 {
            parts.push("-1".to_string());
        }
        for (p, e) in &self.factors {
            if *e == 1 {
                parts.push(p.to_string());
            } else {
                parts.push(format!("{p}^{e}"));
            }
        }
        for c in &self.unfactored {
            parts.push(format!("C{c}"));
        }
        if parts.is_empty() {
            parts.push("1".to_string());
        }
        write!(f, "{}", parts.join(" * "))
    }
}

fn pollard_rho(n: &BigInt, rounds: u32) -> Option<BigInt> {
    // Floyd cycle-finding with a deterministic parameter sequence.
    let mut rng = SplitMix64::new(rho_seed(n));
    for _ in 0..rounds {
        let c = BigInt::from(rng.next_u64() % 1024 + 1);
        let mut x = BigInt::from(rng.next_u64() % 1024 + 2);
        let mut y = x.clone();
        let mut d = BigInt::one();
        let step = |v: &BigInt| (v * v + &c) % n;
        let mut iter = 0u32;
        while d.is_one() && iter < 1 << 18 {
            x = step(&x);
            y = step(&step(&y));
            let diff = if x >= y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
            iter += 1;
        }
        if !d.is_one() && d != *n {
            return Some(d);
        }
    }
    None
}

// seed derived from the input so every call is reproducible
fn rho_seed(n: &BigInt) -> u64 {
    n.iter_u64_digits()
        .fold(0x9e37_u64, |a, d| a.wrapping_mul(31).wrapping_add(d))
}

/// Factor a nonzero integer: trial division to 10^6, then Pollard rho up
/// to `rho_rounds` splitting attempts per surviving cofactor.
/// Incompleteness is reported in the result, never raised.
pub fn factorize(n: &BigInt, rho_rounds: u32) -> Factorization {
    assert!(!n.is_zero(), "factorize requires nonzero input");
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut rest = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let push = |p: BigInt, e: u32, factors: &mut Vec<(BigInt, u32)>| {
        if let Some(entry) = factors.iter_mut().find(|(q, _)| *q == p) {
            entry.1 += e;
        } else {
            factors.push((p, e));
        }
    };

    let mut d = 2u64;
    while d <= TRIAL_DIVISION_BOUND && rest > BigInt::one() {
        let db = BigInt::from(d);
        if &db * &db > rest {
            break;
        }
        let mut e = 0u32;
        while rest.is_multiple_of(&db) {
            rest /= &db;
            e += 1;
        }
        if e > 0 {
            push(db, e, &mut factors);
        }
        d = if d == 2 { 3 } else { d + 2 };
    }

    let mut unfactored = Vec::new();
    let mut stack = Vec::new();
    if rest > BigInt::one() {
        stack.push(rest);
    }
    while let Some(c) = stack.pop() {
        if is_prime(&c) {
            push(c, 1, &mut factors);
            continue;
        }
        // perfect powers split cheaply
        if let Some(r) = perfect_power_root(&c) {
            stack.push(r.clone());
            stack.push(&c / r);
            continue;
        }
        match pollard_rho(&c, rho_rounds) {
            Some(f) => {
                stack.push(&c / &f);
                stack.push(f);
            }
            None => unfactored.push(c),
        }
    }
    factors.sort_by(|x, y| x.0.cmp(&y.0));
    unfactored.sort();
    let complete = unfactored.is_empty();
    Factorization {
        n: n.clone(),
        sign,
        factors,
        unfactored,
        complete,
    }
}

/// If c = r^k for some k >= 2, return r.
fn perfect_power_root(c: &BigInt) -> Option<BigInt> {
    let bits = c.bits();
    for k in 2..=bits.max(2) {
        let k = k as u32;
        if k > 64 {
            break;
        }
        let r = c.nth_root(k);
        if r <= BigInt::one() {
            break;
        }
        if r.pow(k) == *c {
            return Some(r);
        }
    }
    None
}

/// Reason attached to an achievability verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reason {
    EvenMultipleOf1024,
    EvenNotMultiple,
    OddOneMod8,
    /// A prime p = 3 mod 8 with p^2 | n (the smallest such).
    OddFiveWithP(BigInt),
    OddFiveNoP,
    OddThreeMod4,
    UnknownIncompleteFactorization,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::EvenMultipleOf1024 => write!(f, "even multiple of 2^10"),
            Reason::EvenNotMultiple => write!(f, "even but not a multiple of 2^10"),
            Reason::OddOneMod8 => write!(f, "odd, 1 mod 8"),
            Reason::OddFiveWithP(p) => write!(f, "5 mod 8 with p={p} (p = 3 mod 8, p^2 | n)"),
            Reason::OddFiveNoP => write!(f, "5 mod 8 with no prime p = 3 mod 8 whose square divides n"),
            Reason::OddThreeMod4 => write!(f, "odd, 3 mod 4"),
            Reason::UnknownIncompleteFactorization => {
                write!(f, "5 mod 8, factorization incomplete: achievability undecided")
            }
        }
    }
}

/// Achievability decision for an integer target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub n: BigInt,
    /// Some(true) achievable, Some(false) not, None unknown.
    pub achievable: Option<bool>,
    pub reason: Reason,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = match self.achievable {
            Some(true) => "achievable",
            Some(false) => "not achievable",
            None => "unknown",
        };
        write!(f, "{}: {} ({})", self.n, word, self.reason)
    }
}

/// Decide achievability of n as an SD16 determinant.
///
/// Even n are achievable exactly when 2^10 | n (sign irrelevant, 0 counts
/// as a multiple). Odd n: 1 mod 8 always; 3 mod 4 never; 5 mod 8 exactly
/// when some prime p = 3 mod 8 has p^2 | n.
pub fn classify(n: &BigInt) -> Verdict {
    classify_with_effort(n, DEFAULT_RHO_ROUNDS)
}

pub fn classify_with_effort(n: &BigInt, rho_rounds: u32) -> Verdict {
    if n.is_even() {
        let achievable = n.is_multiple_of(&BigInt::from(1024));
        return Verdict {
            n: n.clone(),
            achievable: Some(achievable),
            reason: if achievable {
                Reason::EvenMultipleOf1024
            } else {
                Reason::EvenNotMultiple
            },
        };
    }
    let r8 = n.mod_floor(&BigInt::from(8)).to_u32().unwrap();
    match r8 {
        1 => Verdict {
            n: n.clone(),
            achievable: Some(true),
            reason: Reason::OddOneMod8,
        },
        3 | 7 => Verdict {
            n: n.clone(),
            achievable: Some(false),
            reason: Reason::OddThreeMod4,
        },
        5 => {
            let fac = factorize(n, rho_rounds);
            let three = BigInt::from(3);
            let qualifying = fac
                .factors
                .iter()
                .find(|(p, e)| *e >= 2 && p.mod_floor(&BigInt::from(8)) == three);
            match qualifying {
                Some((p, _)) => Verdict {
                    n: n.clone(),
                    achievable: Some(true),
                    reason: Reason::OddFiveWithP(p.clone()),
                },
                None if fac.complete => Verdict {
                    n: n.clone(),
                    achievable: Some(false),
                    reason: Reason::OddFiveNoP,
                },
                None => Verdict {
                    n: n.clone(),
                    achievable: None,
                    reason: Reason::UnknownIncompleteFactorization,
                },
            }
        }
        _ => unreachable!("odd residues mod 8 are 1,3,5,7"),
    }
}
