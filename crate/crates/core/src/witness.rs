//! Explicit group-ring elements realizing every achievable SD16
//! determinant. Each target class has a polynomial family in a free
//! integer parameter m (plus (U, V) with U^2 + 2V^2 = p for the 5 mod 8
//! classes); every constructed element is verified against the oracle
//! before it is returned.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::determinants::{regular_determinant, GroupSpec};
use crate::group_ring::GroupRingElement;
use crate::number_theory::{classify, cornacchia2, is_prime, Reason};
use crate::{Error, Result};

/// Coefficients of h(x) = (x+1)(x^2+1)(x^4+1) = 1 + x + ... + x^7.
pub fn h_poly() -> [i64; 8] {
    [1; 8]
}

/// Which construction produced a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessFamily {
    /// 2^12 * m
    Even4096,
    /// 2^11 * (2m+1)
    Even2048,
    /// 2^10 * (-1+4m)
    Even1024Neg,
    /// 2^10 * (1+4m)
    Even1024Pos,
    /// 1 + 16m
    OddOneMod16,
    /// 16m - 7
    OddNineMod16,
    /// (5+16m) p^2
    FiveMod16 { p: BigInt },
    /// (16m-3) p^2
    ThirteenMod16 { p: BigInt },
}

impl fmt::Display for WitnessFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessFamily::Even4096 => write!(f, "2^12*m"),
            WitnessFamily::Even2048 => write!(f, "2^11*(2m+1)"),
            WitnessFamily::Even1024Neg => write!(f, "2^10*(-1+4m)"),
            WitnessFamily::Even1024Pos => write!(f, "2^10*(1+4m)"),
            WitnessFamily::OddOneMod16 => write!(f, "1+16m"),
            WitnessFamily::OddNineMod16 => write!(f, "16m-7"),
            WitnessFamily::FiveMod16 { p } => write!(f, "(5+16m)*p^2, p={p}"),
            WitnessFamily::ThirteenMod16 { p } => write!(f, "(16m-3)*p^2, p={p}"),
        }
    }
}

/// A verified witness for a target determinant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessResult {
    pub target: BigInt,
    pub element: GroupRingElement,
    pub family: WitnessFamily,
    pub verified: bool,
}

/// base + c*h as a coefficient vector.
fn with_h(base: [i64; 8], c: &BigInt) -> Vec<BigInt> {
    base.iter().map(|&v| BigInt::from(v) + c).collect()
}

fn build(fa: Vec<BigInt>, fb: Vec<BigInt>) -> Result<GroupRingElement> {
    GroupRingElement::new(4, fa, fb)
}

fn verify(target: &BigInt, element: GroupRingElement, family: WitnessFamily) -> Result<WitnessResult> {
    let got = regular_determinant(&element, GroupSpec::sd16())?;
    if got != *target {
        return Err(Error::VerificationFailed {
            target: target.clone(),
            got,
            element: element.to_string(),
        });
    }
    Ok(WitnessResult {
        target: target.clone(),
        element,
        family,
        verified: true,
    })
}

/// Witness for a multiple of 2^10, dispatching on q = N / 2^10 mod 4.
pub fn witness_even(target: &BigInt) -> Result<WitnessResult> {
    let k1024 = BigInt::from(1024);
    if !target.is_multiple_of(&k1024) {
        return Err(Error::NotMultipleOf1024(target.clone()));
    }
    let q = target / &k1024;
    let four = BigInt::from(4);
    match q.mod_floor(&four).to_u32().unwrap() {
        0 => {
            // 2^12 * m
            let m = q / &four;
            let f = with_h([1, 1, 1, 1, 0, 0, -1, -1], &-&m);
            let g = with_h([1, 1, 0, -1, -1, -1, 0, -1], &-&m);
            verify(target, build(f, g)?, WitnessFamily::Even4096)
        }
        2 => {
            // 2^11 * (2m+1)
            let m = (q / 2 - 1) / 2;
            let f = with_h([1, 1, 1, 1, 1, 1, 1, -1], &m);
            let g = with_h([1, 1, 0, 0, 0, -1, 0, 1], &m);
            verify(target, build(f, g)?, WitnessFamily::Even2048)
        }
        1 => {
            // 2^10 * (1+4m)
            let m = (q - 1) / &four;
            let f = with_h([1, 1, 1, 1, 1, 0, 0, -1], &m);
            let g = with_h([1, 1, 0, -1, -1, -1, 0, 1], &m);
            verify(target, build(f, g)?, WitnessFamily::Even1024Pos)
        }
        3 => {
            // 2^10 * (-1+4m)
            let m = (q + 1) / &four;
            let f = with_h([1, 1, 1, 1, 0, 0, 0, 0], &-&m);
            let g = with_h([1, 1, 1, 0, 0, -1, -1, -1], &-&m);
            verify(target, build(f, g)?, WitnessFamily::Even1024Neg)
        }
        _ => unreachable!(),
    }
}

/// Witness for odd N = 1 mod 8 via the 1+16m and 16m-7 families.
pub fn witness_odd_1mod8(target: &BigInt) -> Result<WitnessResult> {
    let sixteen = BigInt::from(16);
    let r16 = target.mod_floor(&sixteen).to_u32().unwrap();
    match r16 {
        1 => {
            let m = (target - 1) / &sixteen;
            let f = with_h([1, 0, 0, 0, 0, 0, 0, 0], &m);
            let g = with_h([0; 8], &m);
            verify(target, build(f, g)?, WitnessFamily::OddOneMod16)
        }
        9 => {
            let m = (target + 7) / &sixteen;
            let f = with_h([1, 1, 1, 1, 1, 0, -1, 0], &-&m);
            let g = with_h([1, 1, 0, 0, 0, 1, 0, 0], &-&m);
            verify(target, build(f, g)?, WitnessFamily::OddNineMod16)
        }
        _ => Err(Error::BadResidue(target.clone())),
    }
}

/// Pick the sign of an odd w so that it lands in residue class `want`
/// mod 4 (want is 1 or 3); exactly one of +-w does.
fn normalize_mod4(w: &BigInt, want: u32) -> BigInt {
    let four = BigInt::from(4);
    if w.mod_floor(&four).to_u32().unwrap() == want {
        w.clone()
    } else {
        -w
    }
}

/// Witness for N = 5 mod 8 of the form m*p^2 with p = 3 mod 8 prime.
pub fn witness_odd_5mod8(target: &BigInt, p: &BigInt) -> Result<WitnessResult> {
    let eight = BigInt::from(8);
    if !is_prime(p) || p.mod_floor(&eight) != BigInt::from(3) {
        return Err(Error::BadPrime {
            n: target.clone(),
            p: p.clone(),
        });
    }
    let p2 = p * p;
    if !target.is_multiple_of(&p2) {
        return Err(Error::BadPrime {
            n: target.clone(),
            p: p.clone(),
        });
    }
    let m_total = target / &p2;
    if m_total.mod_floor(&eight) != BigInt::from(5) {
        return Err(Error::BadResidue(target.clone()));
    }
    let (u_raw, v_raw) = cornacchia2(p)?;
    let sixteen = BigInt::from(16);
    let four = BigInt::from(4);
    let r16 = m_total.mod_floor(&sixteen).to_u32().unwrap();

    if r16 == 5 {
        // (5+16m) p^2: U = 4k+1, V = 4s+1
        let u = normalize_mod4(&u_raw, 1);
        let v = normalize_mod4(&v_raw, 1);
        let k: BigInt = (&u - 1) / &four;
        let s: BigInt = (&v - 1) / &four;
        let m: BigInt = (&m_total - 5) / &sixteen;
        // f = x + x^2 - (k - s x^2)(1 - x^4) + m h
        let f: Vec<BigInt> = [
            -&k,
            BigInt::one(),
            BigInt::one() + &s,
            BigInt::zero(),
            k.clone(),
            BigInt::zero(),
            -&s,
            BigInt::zero(),
        ]
        .into_iter()
        .map(|c| c + &m)
        .collect();
        // g = 1 + x + x^2 + (s + k x^2)(1 - x^4) + m h
        let g: Vec<BigInt> = [
            BigInt::one() + &s,
            BigInt::one(),
            BigInt::one() + &k,
            BigInt::zero(),
            -&s,
            BigInt::zero(),
            -&k,
            BigInt::zero(),
        ]
        .into_iter()
        .map(|c| c + &m)
        .collect();
        verify(
            target,
            build(f, g)?,
            WitnessFamily::FiveMod16 { p: p.clone() },
        )
    } else if r16 == 13 {
        // (16m-3) p^2: U = 4s+1, V = 4k-1
        let u = normalize_mod4(&u_raw, 1);
        let v = normalize_mod4(&v_raw, 3);
        let s: BigInt = (&u - 1) / &four;
        let k: BigInt = (&v + 1) / &four;
        let m: BigInt = (&m_total + 3) / &sixteen;
        // f = 1 + x + (s + k x^2)(1 - x^4) - m h
        let f: Vec<BigInt> = [
            BigInt::one() + &s,
            BigInt::one(),
            k.clone(),
            BigInt::zero(),
            -&s,
            BigInt::zero(),
            -&k,
            BigInt::zero(),
        ]
        .into_iter()
        .map(|c| c - &m)
        .collect();
        // g = x + (k - s x^2)(1 - x^4) - m h
        let g: Vec<BigInt> = [
            k.clone(),
            BigInt::one(),
            -&s,
            BigInt::zero(),
            -&k,
            BigInt::zero(),
            s.clone(),
            BigInt::zero(),
        ]
        .into_iter()
        .map(|c| c - &m)
        .collect();
        verify(
            target,
            build(f, g)?,
            WitnessFamily::ThirteenMod16 { p: p.clone() },
        )
    } else {
        Err(Error::BadResidue(target.clone()))
    }
}

/// Full dispatcher: classify the target, construct a witness for every
/// achievable value (choosing the smallest qualifying prime in the 5 mod 8
/// case), and verify it against the oracle.
pub fn witness(target: &BigInt) -> Result<WitnessResult> {
    let verdict = classify(target);
    match (&verdict.achievable, &verdict.reason) {
        (Some(true), Reason::EvenMultipleOf1024) => witness_even(target),
        (Some(true), Reason::OddOneMod8) => witness_odd_1mod8(target),
        (Some(true), Reason::OddFiveWithP(p)) => witness_odd_5mod8(target, p),
        _ => Err(Error::NotAchievable(verdict)),
    }
}
