//! The two determinant paths: the regular-representation oracle (Cayley
//! table + fraction-free Bareiss elimination over exact integers) and the
//! factored closed forms M * prod A_j^2 built from cyclotomic orbit norms.
//!
//! Supported groups: SD16, SD32, M16, M32 and the order-8 dihedral group
//! used for cross-checks.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::{orbit_norm, CyclotomicElement, GaloisIndex};
use crate::group_ring::{DihedralElement, GroupRingElement, TwistKind, TwistMap};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupFamily {
    Semidihedral,
    ModularMaximal,
    Dihedral8,
}

/// One of the supported concrete groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    family: GroupFamily,
    n: u32,
}

impl GroupSpec {
    pub fn new(family: GroupFamily, n: u32) -> Result<Self> {
        match family {
            GroupFamily::Dihedral8 => {
                if n != 3 {
                    return Err(Error::UnsupportedTower(n));
                }
            }
            _ => {
                if !(4..=5).contains(&n) {
                    return Err(Error::UnsupportedTower(n));
                }
            }
        }
        Ok(GroupSpec { family, n })
    }

    pub fn sd16() -> Self {
        GroupSpec {
            family: GroupFamily::Semidihedral,
            n: 4,
        }
    }

    pub fn sd32() -> Self {
        GroupSpec {
            family: GroupFamily::Semidihedral,
            n: 5,
        }
    }

    pub fn m16() -> Self {
        GroupSpec {
            family: GroupFamily::ModularMaximal,
            n: 4,
        }
    }

    pub fn m32() -> Self {
        GroupSpec {
            family: GroupFamily::ModularMaximal,
            n: 5,
        }
    }

    pub fn d8() -> Self {
        GroupSpec {
            family: GroupFamily::Dihedral8,
            n: 3,
        }
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Order of the cyclic part, 2^{n-1}.
    pub fn half(&self) -> usize {
        1 << (self.n - 1)
    }

    pub fn order(&self) -> usize {
        1 << self.n
    }

    /// The odd multiplier t in YXY = X^t.
    pub fn multiplier(&self) -> usize {
        match self.family {
            GroupFamily::Semidihedral => (1 << (self.n - 2)) - 1,
            GroupFamily::ModularMaximal => (1 << (self.n - 2)) + 1,
            GroupFamily::Dihedral8 => 3, // -1 mod 4
        }
    }

    /// The twist map for group-ring multiplication (SD/M only).
    pub fn twist(&self) -> Result<TwistMap> {
        match self.family {
            GroupFamily::Semidihedral => TwistMap::new(self.n, TwistKind::Semidihedral),
            GroupFamily::ModularMaximal => TwistMap::new(self.n, TwistKind::ModularMaximal),
            GroupFamily::Dihedral8 => Err(Error::UnsupportedTower(self.n)),
        }
    }

    pub fn name(&self) -> &'static str {
        match (self.family, self.n) {
            (GroupFamily::Semidihedral, 4) => "sd16",
            (GroupFamily::Semidihedral, _) => "sd32",
            (GroupFamily::ModularMaximal, 4) => "m16",
            (GroupFamily::ModularMaximal, _) => "m32",
            (GroupFamily::Dihedral8, _) => "d8",
        }
    }
}

/// Multiplication table of a supported group. Element indexing:
/// e(i,0) = i is X^i, e(i,1) = half + i is Y*X^i.
#[derive(Clone, Debug)]
pub struct CayleyTable {
    order: usize,
    half: usize,
    table: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl CayleyTable {
    /// Build from the presentation and verify the group axioms on the
    /// resulting table (permutation rows/columns, inverses, associativity).
    pub fn build(spec: GroupSpec) -> Result<CayleyTable> {
        let half = spec.half();
        let order = 2 * half;
        let t = spec.multiplier();
        // (Y^j1 X^i1)(Y^j2 X^i2) = Y^{j1^j2} X^{t^{j2} i1 + i2}
        let mul = |g: usize, h: usize| -> usize {
            let (i1, j1) = (g % half, g / half);
            let (i2, j2) = (h % half, h / half);
            let i1t = if j2 == 1 { i1 * t % half } else { i1 };
            (i1t + i2) % half + half * (j1 ^ j2)
        };
        let table: Vec<Vec<usize>> = (0..order)
            .map(|g| (0..order).map(|h| mul(g, h)).collect())
            .collect();
        let mut inv = vec![0usize; order];
        for g in 0..order {
            let found = (0..order).find(|&h| table[g][h] == 0 && table[h][g] == 0);
            inv[g] = found.ok_or_else(|| {
                Error::FormulaMismatch(format!("no inverse for element {g} in {}", spec.name()))
            })?;
        }
        let ct = CayleyTable {
            order,
            half,
            table,
            inv,
        };
        ct.validate(spec)?;
        Ok(ct)
    }

    fn validate(&self, spec: GroupSpec) -> Result<()> {
        let n = self.order;
        let bad = |msg: String| Err(Error::FormulaMismatch(msg));
        for g in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for h in 0..n {
                row[self.table[g][h]] = true;
                col[self.table[h][g]] = true;
            }
            if row.iter().any(|v| !v) || col.iter().any(|v| !v) {
                return bad(format!("row/column {g} of {} not a permutation", spec.name()));
            }
            if self.table[g][self.inv[g]] != 0 {
                return bad(format!("inverse of {g} wrong in {}", spec.name()));
            }
        }
        // order <= 32, so the full associativity sweep is cheap
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]] {
                        return bad(format!("associativity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn half(&self) -> usize {
        self.half
    }

    pub fn product(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inv[g]
    }

    /// det(c_{g h^{-1}}) by Bareiss elimination.
    pub fn determinant(&self, coeffs: &[BigInt]) -> Result<BigInt> {
        if coeffs.len() != self.order {
            return Err(Error::BadLength {
                expected: self.order,
                got: coeffs.len(),
            });
        }
        let mat: Vec<Vec<BigInt>> = (0..self.order)
            .map(|g| {
                (0..self.order)
                    .map(|h| coeffs[self.table[g][self.inv[h]]].clone())
                    .collect()
            })
            .collect();
        Ok(bareiss_determinant(mat))
    }
}

fn table_cache(spec: GroupSpec) -> &'static CayleyTable {
    static SD16: OnceLock<CayleyTable> = OnceLock::new();
    static SD32: OnceLock<CayleyTable> = OnceLock::new();
    static M16: OnceLock<CayleyTable> = OnceLock::new();
    static M32: OnceLock<CayleyTable> = OnceLock::new();
    static D8: OnceLock<CayleyTable> = OnceLock::new();
    let cell = match (spec.family(), spec.n()) {
        (GroupFamily::Semidihedral, 4) => &SD16,
        (GroupFamily::Semidihedral, _) => &SD32,
        (GroupFamily::ModularMaximal, 4) => &M16,
        (GroupFamily::ModularMaximal, _) => &M32,
        (GroupFamily::Dihedral8, _) => &D8,
    };
    cell.get_or_init(|| CayleyTable::build(spec).expect("presentation tables are valid"))
}

/// Exact determinant by fraction-free (Bareiss) elimination. Pivot is the
/// first nonzero entry in the column; a row swap flips the sign.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact by the Bareiss identity
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// The brute-force oracle: determinant of the regular-representation
/// matrix of F on the given group.
pub fn regular_determinant(f: &GroupRingElement, spec: GroupSpec) -> Result<BigInt> {
    if spec.family() == GroupFamily::Dihedral8 {
        return Err(Error::UnsupportedTower(spec.n()));
    }
    if f.n() != spec.n() {
        return Err(Error::MismatchedTower(f.n(), spec.n()));
    }
    table_cache(spec).determinant(&f.coefficients())
}

/// Oracle determinant of a folded element on the order-8 dihedral group.
pub fn d8_determinant(d: &DihedralElement) -> Result<BigInt> {
    table_cache(GroupSpec::d8()).determinant(&d.coefficients())
}

/// Factored SD16 determinant M * A2^2 * A3^2 with the bilinear forms
/// behind A3 exposed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredSd16 {
    pub m: BigInt,
    pub a2: BigInt,
    pub a3: BigInt,
    pub u1: BigInt,
    pub v1: BigInt,
    pub u2: BigInt,
    pub v2: BigInt,
    pub product: BigInt,
}

fn eval_at_one(v: &[BigInt]) -> BigInt {
    v.iter().sum()
}

fn eval_at_minus_one(v: &[BigInt]) -> BigInt {
    v.iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
        .sum()
}

/// M = (f(1)^2 - g(1)^2)(f(-1)^2 - g(-1)^2), the four-character product.
fn character_product(f: &GroupRingElement) -> BigInt {
    let f1 = eval_at_one(f.a());
    let g1 = eval_at_one(f.b());
    let fm = eval_at_minus_one(f.a());
    let gm = eval_at_minus_one(f.b());
    (&f1 * &f1 - &g1 * &g1) * (&fm * &fm - &gm * &gm)
}

/// Closed-form factored determinant for SD16 (n = 4 only).
pub fn sd16_factored(f: &GroupRingElement) -> Result<FactoredSd16> {
    if f.n() != 4 {
        return Err(Error::UnsupportedTower(f.n()));
    }
    let a = f.a();
    let b = f.b();
    let m = character_product(f);

    // A2 = |f(i)|^2 - |g(i)|^2
    let alt = |v: &[BigInt], off: usize| -> BigInt {
        &v[off] - &v[off + 2] + &v[off + 4] - &v[off + 6]
    };
    let (fr, fi) = (alt(a, 0), alt(a, 1));
    let (gr, gi) = (alt(b, 0), alt(b, 1));
    let a2 = &fr * &fr + &fi * &fi - &gr * &gr - &gi * &gi;

    // alpha_i = a_i - a_{i+4}, beta_i = b_i - b_{i+4}
    let alpha: Vec<BigInt> = (0..4).map(|i| &a[i] - &a[i + 4]).collect();
    let beta: Vec<BigInt> = (0..4).map(|i| &b[i] - &b[i + 4]).collect();
    let bilinear = |c: &[BigInt]| -> (BigInt, BigInt) {
        let u = &c[0] * &c[0] - &c[1] * &c[1] + &c[2] * &c[2] - &c[3] * &c[3];
        let v = &c[0] * &c[1] + &c[0] * &c[3] - &c[1] * &c[2] + &c[2] * &c[3];
        (u, v)
    };
    let (u1, v1) = bilinear(&alpha);
    let (u2, v2) = bilinear(&beta);
    let du = &u1 - &u2;
    let dv = &v1 - &v2;
    let a3 = &du * &du + BigInt::from(2) * &dv * &dv;

    let product = &m * &a2 * &a2 * &a3 * &a3;
    Ok(FactoredSd16 {
        m,
        a2,
        a3,
        u1,
        v1,
        u2,
        v2,
        product,
    })
}

/// Factored determinant M * prod_{j=2}^{n-1} A_j^2 for SD_{2^n}, n in {4,5},
/// computed through cyclotomic orbit norms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredGeneral {
    pub m: BigInt,
    /// A_2, ..., A_{n-1} in order.
    pub a: Vec<BigInt>,
    pub product: BigInt,
}

/// Coset representatives of (Z/modulus)^x modulo the subgroup generated by
/// `gen` (gen odd). Greedy: smallest unseen odd residue starts a new coset.
fn coset_reps(modulus: usize, gen: usize) -> Vec<GaloisIndex> {
    let mut subgroup = vec![1usize];
    let mut t = gen % modulus;
    while t != 1 {
        subgroup.push(t);
        t = t * gen % modulus;
    }
    let mut seen = vec![false; modulus];
    let mut reps = Vec::new();
    for r in (1..modulus).step_by(2) {
        if seen[r] {
            continue;
        }
        reps.push(GaloisIndex(r));
        for &h in &subgroup {
            seen[r * h % modulus] = true;
        }
    }
    reps
}

/// k = f * sigma(f) - g * sigma(g) in the ring of degree m.
fn twisted_form(
    f: &GroupRingElement,
    m: usize,
    sigma: GaloisIndex,
) -> Result<CyclotomicElement> {
    let fa = CyclotomicElement::reduce(f.a(), m)?;
    let ga = CyclotomicElement::reduce(f.b(), m)?;
    let left = fa.mul(&fa.galois_apply(sigma)?)?;
    let right = ga.mul(&ga.galois_apply(sigma)?)?;
    left.sub(&right)
}

pub fn sd_general_factored(f: &GroupRingElement) -> Result<FactoredGeneral> {
    let n = f.n();
    if !(4..=5).contains(&n) {
        return Err(Error::UnsupportedTower(n));
    }
    let m = character_product(f);
    let mut a_list = Vec::new();
    // 2 <= j <= n-2: conjugate pairs f(w)f(w^-1) - g(w)g(w^-1) in Z[w_{2^j}],
    // orbit over representatives of (Z/2^j)^x / {+-1}.
    for j in 2..=(n - 2) {
        let ring = 1usize << (j - 1);
        let k = twisted_form(f, ring, GaloisIndex(2 * ring - 1))?;
        let reps: Vec<GaloisIndex> = (1..ring).step_by(2).map(GaloisIndex).collect();
        a_list.push(orbit_norm(&k, &reps)?);
    }
    // j = n-1: the twist sends w to -w^{-1} = w^{2^{n-2}-1}; orbit over
    // (Z/2^{n-1})^x modulo the subgroup generated by the twist.
    let ring = 1usize << (n - 2);
    let tau = (1usize << (n - 2)) - 1;
    let k = twisted_form(f, ring, GaloisIndex(tau))?;
    let reps = coset_reps(2 * ring, tau);
    a_list.push(orbit_norm(&k, &reps)?);

    let mut product = m.clone();
    for a in &a_list {
        product *= a * a;
    }
    Ok(FactoredGeneral {
        m,
        a: a_list,
        product,
    })
}

/// Factored determinant M1 * A^2 for the modular maximal-cyclic family,
/// n in {4,5}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredM {
    pub m1: BigInt,
    pub a: BigInt,
    pub product: BigInt,
}

pub fn m_general_factored(f: &GroupRingElement) -> Result<FactoredM> {
    let n = f.n();
    if !(4..=5).contains(&n) {
        return Err(Error::UnsupportedTower(n));
    }
    // M1 = prod over 2^{n-2}-th roots of unity x of f(x)^2 - g(x)^2
    let f1 = eval_at_one(f.a());
    let g1 = eval_at_one(f.b());
    let fm = eval_at_minus_one(f.a());
    let gm = eval_at_minus_one(f.b());
    let mut m1 = (&f1 * &f1 - &g1 * &g1) * (&fm * &fm - &gm * &gm);
    let mut d = 4usize;
    while d <= (1 << (n - 2)) {
        let ring = d / 2;
        let fa = CyclotomicElement::reduce(f.a(), ring)?;
        let ga = CyclotomicElement::reduce(f.b(), ring)?;
        let k = fa.mul(&fa)?.sub(&ga.mul(&ga)?)?;
        let reps: Vec<GaloisIndex> = (1..d).step_by(2).map(GaloisIndex).collect();
        m1 *= orbit_norm(&k, &reps)?;
        d *= 2;
    }
    // A: twist sends w to -w = w^{2^{n-2}+1} on the primitive 2^{n-1}-th roots.
    let ring = 1usize << (n - 2);
    let tau = (1usize << (n - 2)) + 1;
    let k = twisted_form(f, ring, GaloisIndex(tau))?;
    let reps = coset_reps(2 * ring, tau);
    let a = orbit_norm(&k, &reps)?;
    let product = &m1 * &a * &a;
    Ok(FactoredM { m1, a, product })
}

/// n = 4 specialization, kept under the name used throughout the tests.
pub fn m16_factored(f: &GroupRingElement) -> Result<FactoredM> {
    if f.n() != 4 {
        return Err(Error::UnsupportedTower(f.n()));
    }
    m_general_factored(f)
}

/// (M * A2^2, D8 oracle determinant of the folded element). The two agree
/// because M * A2^2 is exactly the dihedral part of the factorization.
pub fn dihedral_cross_check(f: &GroupRingElement) -> Result<(BigInt, BigInt)> {
    let fac = sd16_factored(f)?;
    let folded = f.fold_to_d8()?;
    let d8 = d8_determinant(&folded)?;
    Ok((&fac.m * &fac.a2 * &fac.a2, d8))
}

/// |product| sanity helper used by census bounds.
pub fn abs_value(v: &BigInt) -> BigInt {
    v.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn el(a: &[i64; 8], b: &[i64; 8]) -> GroupRingElement {
        GroupRingElement::from_i64(4, a, b).unwrap()
    }

    fn random_element(n: u32, rng: &mut SplitMix64, lo: i64, hi: i64) -> GroupRingElement {
        let half = 1usize << (n - 1);
        let a: Vec<i64> = (0..half).map(|_| rng.range_i64(lo, hi)).collect();
        let b: Vec<i64> = (0..half).map(|_| rng.range_i64(lo, hi)).collect();
        GroupRingElement::from_i64(n, &a, &b).unwrap()
    }

    #[test]
    fn cayley_relations_sd16() {
        let t = CayleyTable::build(GroupSpec::sd16()).unwrap();
        // Y * X = Y*X^1: e(0,1)*e(1,0) = e(1,1)
        assert_eq!(t.product(8, 1), 9);
        // (X*Y-ish) squared: (Y X^3)(Y X^3) = X^{3*3+3} = X^{12 mod 8} = X^4
        assert_eq!(t.product(8 + 3, 8 + 3), 4);
    }

    #[test]
    fn cayley_relations_m16() {
        let t = CayleyTable::build(GroupSpec::m16()).unwrap();
        // In M16, YXY = X^5, i.e. (Y X^0)(X) = Y X, and X*Y = Y*X^5:
        // e(1,0)*e(0,1) = e(5,1)
        assert_eq!(t.product(1, 8), 8 + 5);
    }

    #[test]
    fn oracle_identity_and_single_y() {
        let e = GroupRingElement::identity(4).unwrap();
        assert_eq!(regular_determinant(&e, GroupSpec::sd16()).unwrap(), BigInt::one());
        let y = el(&[0; 8], &[1, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(regular_determinant(&y, GroupSpec::sd16()).unwrap(), BigInt::one());
        let x = el(&[0, 1, 0, 0, 0, 0, 0, 0], &[0; 8]);
        assert_eq!(regular_determinant(&x, GroupSpec::m16()).unwrap(), BigInt::one());
    }

    #[test]
    fn oracle_h_family_value_17() {
        // (1+h) + y*h has determinant 17
        let f = el(&[2, 1, 1, 1, 1, 1, 1, 1], &[1; 8]);
        assert_eq!(
            regular_determinant(&f, GroupSpec::sd16()).unwrap(),
            BigInt::from(17)
        );
    }

    #[test]
    fn factored_identity() {
        let e = GroupRingElement::identity(4).unwrap();
        let fac = sd16_factored(&e).unwrap();
        assert_eq!(fac.m, BigInt::one());
        assert_eq!(fac.a2, BigInt::one());
        assert_eq!(fac.a3, BigInt::one());
        assert_eq!(fac.product, BigInt::one());
    }

    #[test]
    fn factored_45_witness() {
        let f = el(&[0, 1, 1, 0, 0, 0, 0, 0], &[1, 1, 1, 0, 0, 0, 0, 0]);
        let fac = sd16_factored(&f).unwrap();
        assert_eq!(fac.m, BigInt::from(5));
        assert_eq!(fac.a2, BigInt::one());
        assert_eq!(fac.a3, BigInt::from(3));
        assert_eq!(fac.u1, BigInt::from(0));
        assert_eq!(fac.v1, BigInt::from(-1));
        assert_eq!(fac.u2, BigInt::from(1));
        assert_eq!(fac.v2, BigInt::from(0));
        assert_eq!(fac.product, BigInt::from(45));
        assert_eq!(
            regular_determinant(&f, GroupSpec::sd16()).unwrap(),
            BigInt::from(45)
        );
    }

    #[test]
    fn factored_minus_27_witness() {
        let f = el(&[1, 1, 0, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0, 0, 0]);
        let fac = sd16_factored(&f).unwrap();
        assert_eq!(fac.m, BigInt::from(-3));
        assert_eq!(fac.a2, BigInt::one());
        assert_eq!(fac.a3, BigInt::from(3));
        assert_eq!(fac.product, BigInt::from(-27));
    }

    #[test]
    fn factored_matches_oracle_random() {
        let mut rng = SplitMix64::new(0xdead_beef);
        for _ in 0..300 {
            let f = random_element(4, &mut rng, -9, 9);
            let fac = sd16_factored(&f).unwrap();
            let oracle = regular_determinant(&f, GroupSpec::sd16()).unwrap();
            assert_eq!(fac.product, oracle, "element {f}");
        }
    }

    #[test]
    fn general_reduces_to_sd16() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..200 {
            let f = random_element(4, &mut rng, -5, 5);
            let fac = sd16_factored(&f).unwrap();
            let gen = sd_general_factored(&f).unwrap();
            assert_eq!(gen.a.len(), 2);
            assert_eq!(gen.a[0], fac.a2);
            assert_eq!(gen.a[1], fac.a3);
            assert_eq!(gen.product, fac.product);
        }
    }

    #[test]
    fn sd32_identity_and_random_oracle() {
        let e = GroupRingElement::identity(5).unwrap();
        let fac = sd_general_factored(&e).unwrap();
        assert_eq!(fac.m, BigInt::one());
        assert!(fac.a.iter().all(|a| a.is_one()));
        assert_eq!(fac.product, BigInt::one());

        let mut rng = SplitMix64::new(11);
        for _ in 0..25 {
            let f = random_element(5, &mut rng, -3, 3);
            let fac = sd_general_factored(&f).unwrap();
            let oracle = regular_determinant(&f, GroupSpec::sd32()).unwrap();
            assert_eq!(fac.product, oracle, "element {f}");
        }
    }

    #[test]
    fn m16_examples() {
        let e = GroupRingElement::identity(4).unwrap();
        let fac = m16_factored(&e).unwrap();
        assert_eq!((fac.m1, fac.a, fac.product), (1.into(), 1.into(), 1.into()));

        let y = el(&[0; 8], &[1, 0, 0, 0, 0, 0, 0, 0]);
        let fac = m16_factored(&y).unwrap();
        assert_eq!(fac.m1, BigInt::one());
        assert_eq!(fac.a, BigInt::one());
        assert_eq!(fac.product, BigInt::one());

        let x = el(&[0, 1, 0, 0, 0, 0, 0, 0], &[0; 8]);
        let fac = m16_factored(&x).unwrap();
        assert_eq!(fac.product, BigInt::one());
    }

    #[test]
    fn m16_matches_oracle_random() {
        let mut rng = SplitMix64::new(23);
        for _ in 0..200 {
            let f = random_element(4, &mut rng, -6, 6);
            let fac = m16_factored(&f).unwrap();
            let oracle = regular_determinant(&f, GroupSpec::m16()).unwrap();
            assert_eq!(fac.product, oracle, "element {f}");
        }
    }

    #[test]
    fn m32_matches_oracle_random() {
        let mut rng = SplitMix64::new(29);
        for _ in 0..20 {
            let f = random_element(5, &mut rng, -3, 3);
            let fac = m_general_factored(&f).unwrap();
            let oracle = regular_determinant(&f, GroupSpec::m32()).unwrap();
            assert_eq!(fac.product, oracle, "element {f}");
        }
    }

    #[test]
    fn dihedral_cross_check_examples() {
        let e = GroupRingElement::identity(4).unwrap();
        let (lhs, rhs) = dihedral_cross_check(&e).unwrap();
        assert_eq!(lhs, BigInt::one());
        assert_eq!(rhs, BigInt::one());

        let f = el(&[0, 1, 1, 0, 0, 0, 0, 0], &[1, 1, 1, 0, 0, 0, 0, 0]);
        let (lhs, rhs) = dihedral_cross_check(&f).unwrap();
        assert_eq!(lhs, BigInt::from(5));
        assert_eq!(rhs, BigInt::from(5));

        let mut rng = SplitMix64::new(31);
        for _ in 0..100 {
            let f = random_element(4, &mut rng, -7, 7);
            let (lhs, rhs) = dihedral_cross_check(&f).unwrap();
            assert_eq!(lhs, rhs, "element {f}");
        }
    }

    #[test]
    fn determinant_multiplicative() {
        let mut rng = SplitMix64::new(37);
        for spec in [GroupSpec::sd16(), GroupSpec::m16()] {
            let twist = spec.twist().unwrap();
            for _ in 0..50 {
                let f1 = random_element(4, &mut rng, -4, 4);
                let f2 = random_element(4, &mut rng, -4, 4);
                let prod = f1.multiply(&f2, &twist).unwrap();
                let d1 = regular_determinant(&f1, spec).unwrap();
                let d2 = regular_determinant(&f2, spec).unwrap();
                let dp = regular_determinant(&prod, spec).unwrap();
                assert_eq!(dp, d1 * d2);
            }
        }
    }

    #[test]
    fn bareiss_small_matrices() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect()
        };
        assert_eq!(bareiss_determinant(m(&[&[5]])), BigInt::from(5));
        assert_eq!(
            bareiss_determinant(m(&[&[1, 2], &[3, 4]])),
            BigInt::from(-2)
        );
        // singular
        assert_eq!(
            bareiss_determinant(m(&[&[1, 2], &[2, 4]])),
            BigInt::zero()
        );
        // needs a row swap
        assert_eq!(
            bareiss_determinant(m(&[&[0, 1], &[1, 0]])),
            BigInt::from(-1)
        );
    }
}
