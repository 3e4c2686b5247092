//! Group-ring elements F = f(X) + Y*g(X) for the order-2^n families with a
//! single twist relation YXY = X^t, and their multiplication law.
//!
//! Canonical form keeps Y on the left: coefficient b_i sits on Y*X^i.
//! With tau the exponent permutation k -> t*k mod 2^{n-1}, moving a
//! polynomial past Y twists it: p(X)*Y = Y*p(X^tau). That gives
//!
//!   (f1 + Y g1)(f2 + Y g2) = (f1 f2 + g1^tau g2) + Y (f1^tau g2 + g1 f2)
//!
//! with all polynomial products taken mod X^{2^{n-1}} - 1.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Which twist relation the family uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistKind {
    /// YXY = X^{2^{n-2}-1} (semidihedral family).
    Semidihedral,
    /// YXY = X^{2^{n-2}+1} (modular maximal-cyclic family).
    ModularMaximal,
}

/// The exponent permutation induced by the twist relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwistMap {
    n: u32,
    kind: TwistKind,
}

impl TwistMap {
    pub fn new(n: u32, kind: TwistKind) -> Result<Self> {
        check_tower(n)?;
        Ok(TwistMap { n, kind })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn kind(&self) -> TwistKind {
        self.kind
    }

    /// Cyclic part order 2^{n-1}.
    pub fn half(&self) -> usize {
        1 << (self.n - 1)
    }

    /// The odd multiplier t with YXY = X^t.
    pub fn multiplier(&self) -> usize {
        match self.kind {
            TwistKind::Semidihedral => (1 << (self.n - 2)) - 1,
            TwistKind::ModularMaximal => ((1 << (self.n - 2)) + 1) % self.half(),
        }
    }

    /// k -> t*k mod 2^{n-1}.
    pub fn apply(&self, exp: usize) -> usize {
        exp * self.multiplier() % self.half()
    }
}

fn check_tower(n: u32) -> Result<()> {
    if (4..=6).contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedTower(n))
    }
}

/// Integer group-ring element f(X) + Y*g(X), group order 2^n.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    n: u32,
    a: Vec<BigInt>,
    b: Vec<BigInt>,
}

impl GroupRingElement {
    pub fn new(n: u32, a: Vec<BigInt>, b: Vec<BigInt>) -> Result<Self> {
        check_tower(n)?;
        let half = 1usize << (n - 1);
        if a.len() != half {
            return Err(Error::BadLength {
                expected: half,
                got: a.len(),
            });
        }
        if b.len() != half {
            return Err(Error::BadLength {
                expected: half,
                got: b.len(),
            });
        }
        Ok(GroupRingElement { n, a, b })
    }

    pub fn from_i64(n: u32, a: &[i64], b: &[i64]) -> Result<Self> {
        Self::new(
            n,
            a.iter().map(|&v| BigInt::from(v)).collect(),
            b.iter().map(|&v| BigInt::from(v)).collect(),
        )
    }

    /// The multiplicative identity (a0 = 1).
    pub fn identity(n: u32) -> Result<Self> {
        check_tower(n)?;
        let half = 1usize << (n - 1);
        let mut a = vec![BigInt::zero(); half];
        a[0] = BigInt::one();
        Ok(GroupRingElement {
            n,
            a,
            b: vec![BigInt::zero(); half],
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn half(&self) -> usize {
        1 << (self.n - 1)
    }

    pub fn a(&self) -> &[BigInt] {
        &self.a
    }

    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    /// Coefficient vector in group-element order: index i is X^i, index
    /// half+i is Y*X^i.
    pub fn coefficients(&self) -> Vec<BigInt> {
        let mut c = self.a.clone();
        c.extend_from_slice(&self.b);
        c
    }

    /// Parse "a0,...,a_{h-1};b0,...,b_{h-1}" with h = 2^{n-1}.
    /// Whitespace around commas is ignored; a leading '+' is permitted.
    pub fn parse(n: u32, s: &str) -> Result<Self> {
        check_tower(n)?;
        let parts: Vec<&str> = s.split(';').collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!(
                "expected exactly one ';' separating f and g, got {} parts",
                parts.len()
            )));
        }
        let half = 1usize << (n - 1);
        let parse_vec = |part: &str| -> Result<Vec<BigInt>> {
            part.split(',')
                .map(|tok| {
                    let t = tok.trim();
                    let t = t.strip_prefix('+').unwrap_or(t);
                    BigInt::from_str(t)
                        .map_err(|_| Error::Parse(format!("bad integer {:?}", tok.trim())))
                })
                .collect()
        };
        let a = parse_vec(parts[0])?;
        let b = parse_vec(parts[1])?;
        if a.len() != half || b.len() != half {
            return Err(Error::BadLength {
                expected: half,
                got: if a.len() != half { a.len() } else { b.len() },
            });
        }
        GroupRingElement::new(n, a, b)
    }

    /// Apply the twist permutation to a coefficient vector: p(X) -> p(X^tau).
    fn permute(v: &[BigInt], twist: &TwistMap) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); v.len()];
        for (k, c) in v.iter().enumerate() {
            out[twist.apply(k)] = c.clone();
        }
        out
    }

    /// Product in the group ring under the given twist.
    pub fn multiply(&self, other: &Self, twist: &TwistMap) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::MismatchedTower(self.n, other.n));
        }
        if self.n != twist.n() {
            return Err(Error::MismatchedTower(self.n, twist.n()));
        }
        let half = self.half();
        let cyclic_mul = |u: &[BigInt], v: &[BigInt]| -> Vec<BigInt> {
            let mut out = vec![BigInt::zero(); half];
            for (i, x) in u.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in v.iter().enumerate() {
                    out[(i + j) % half] += x * y;
                }
            }
            out
        };
        let add = |u: Vec<BigInt>, v: Vec<BigInt>| -> Vec<BigInt> {
            u.into_iter().zip(v).map(|(x, y)| x + y).collect()
        };
        let f1t = Self::permute(&self.a, twist);
        let g1t = Self::permute(&self.b, twist);
        let f = add(cyclic_mul(&self.a, &other.a), cyclic_mul(&g1t, &other.b));
        let g = add(cyclic_mul(&f1t, &other.b), cyclic_mul(&self.b, &other.a));
        GroupRingElement::new(self.n, f, g)
    }

    /// Quotient to the dihedral group of order 8 (n = 4 only): identify
    /// X^4 with 1, giving gamma_i = a_i + a_{i+4}, delta_i = b_i + b_{i+4}.
    pub fn fold_to_d8(&self) -> Result<DihedralElement> {
        if self.n != 4 {
            return Err(Error::UnsupportedTower(self.n));
        }
        let gamma: Vec<BigInt> = (0..4).map(|i| &self.a[i] + &self.a[i + 4]).collect();
        let delta: Vec<BigInt> = (0..4).map(|i| &self.b[i] + &self.b[i + 4]).collect();
        Ok(DihedralElement { gamma, delta })
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigInt]| {
            v.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{};{}", join(&self.a), join(&self.b))
    }
}

/// Image of an n = 4 element in the order-8 dihedral quotient:
/// gamma(X) + Y*delta(X) with X^4 = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DihedralElement {
    pub gamma: Vec<BigInt>,
    pub delta: Vec<BigInt>,
}

impl DihedralElement {
    pub fn coefficients(&self) -> Vec<BigInt> {
        let mut c = self.gamma.clone();
        c.extend_from_slice(&self.delta);
        c
    }
}
