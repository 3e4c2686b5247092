//! Exact arithmetic in the power-of-two negacyclic rings Z[x]/(x^m + 1),
//! m in {1, 2, 4, 8, 16}, together with the Galois action x -> x^i (i odd)
//! and orbit-norm products.
//!
//! The generator x stands for a primitive 2m-th root of unity, so m = 2 is
//! the Gaussian integers (x = i) and m = 4 is Z[w8]. Every root-of-unity
//! evaluation in the factored determinant formulas happens inside these
//! rings; no complex floating point is ever involved.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::{Error, Result};

pub const SUPPORTED_DEGREES: [usize; 5] = [1, 2, 4, 8, 16];

/// Element of Z[x]/(x^m + 1), coefficients indexed by exponent 0..m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicElement {
    m: usize,
    coeffs: Vec<BigInt>,
}

/// Odd residue i mod 2m, naming the automorphism x -> x^i.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaloisIndex(pub usize);

fn check_degree(m: usize) -> Result<()> {
    if SUPPORTED_DEGREES.contains(&m) {
        Ok(())
    } else {
        Err(Error::UnsupportedDegree(m))
    }
}

impl CyclotomicElement {
    pub fn zero(m: usize) -> Result<Self> {
        check_degree(m)?;
        Ok(CyclotomicElement {
            m,
            coeffs: vec![BigInt::zero(); m],
        })
    }

    pub fn constant(m: usize, c: BigInt) -> Result<Self> {
        let mut e = Self::zero(m)?;
        e.coeffs[0] = c;
        Ok(e)
    }

    /// Reduce an arbitrary-length integer polynomial by x^m = -1:
    /// x^k contributes (-1)^floor((k mod 2m)/m) at index k mod m.
    pub fn reduce<T>(poly: &[T], m: usize) -> Result<Self>
    where
        T: Into<BigInt> + Clone,
    {
        let mut e = Self::zero(m)?;
        for (k, c) in poly.iter().enumerate() {
            let c: BigInt = c.clone().into();
            let r = k % (2 * m);
            if r < m {
                e.coeffs[r] += c;
            } else {
                e.coeffs[r - m] -= c;
            }
        }
        Ok(e)
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_scalar(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::MismatchedDegree(self.m, other.m));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(u, v)| u + v)
            .collect();
        Ok(CyclotomicElement { m: self.m, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::MismatchedDegree(self.m, other.m));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(u, v)| u - v)
            .collect();
        Ok(CyclotomicElement { m: self.m, coeffs })
    }

    /// Negacyclic schoolbook product: x^m wraps to -1.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::MismatchedDegree(self.m, other.m));
        }
        let m = self.m;
        let mut out = vec![BigInt::zero(); m];
        for (i, u) in self.coeffs.iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            for (j, v) in other.coeffs.iter().enumerate() {
                let t = u * v;
                if i + j < m {
                    out[i + j] += t;
                } else {
                    out[i + j - m] -= t;
                }
            }
        }
        Ok(CyclotomicElement { m, coeffs: out })
    }

    /// Apply the automorphism x -> x^i for odd i (taken mod 2m).
    pub fn galois_apply(&self, g: GaloisIndex) -> Result<Self> {
        let m = self.m;
        let i = g.0 % (2 * m);
        if i % 2 == 0 {
            return Err(Error::BadGaloisIndex(g.0, 2 * m));
        }
        let mut out = vec![BigInt::zero(); m];
        for (k, c) in self.coeffs.iter().enumerate() {
            let r = (k * i) % (2 * m);
            if r < m {
                out[r] += c;
            } else {
                out[r - m] -= c;
            }
        }
        Ok(CyclotomicElement { m, coeffs: out })
    }

    /// Complex conjugation x -> x^{-1}.
    pub fn conjugate(&self) -> Self {
        self.galois_apply(GaloisIndex(2 * self.m - 1))
            .expect("2m-1 is odd")
    }
}

/// Product of the images of `u` under the automorphisms named in `reps`.
/// The product must land in Z; a non-scalar result signals wrong orbit
/// representatives (or a non-stable element) and is reported as an error.
pub fn orbit_norm(u: &CyclotomicElement, reps: &[GaloisIndex]) -> Result<BigInt> {
    let mut acc = CyclotomicElement::constant(u.degree(), BigInt::from(1))?;
    for &g in reps {
        acc = acc.mul(&u.galois_apply(g)?)?;
    }
    if !acc.is_scalar() {
        return Err(Error::NonScalarProduct(format!(
            "m={} coeffs={:?}",
            acc.m, acc.coeffs
        )));
    }
    Ok(acc.coeffs[0].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn elt(m: usize, c: &[i64]) -> CyclotomicElement {
        CyclotomicElement::reduce(c, m).unwrap()
    }

    #[test]
    fn reduce_wraps_with_sign() {
        // x^4 = -1 in m=4
        assert_eq!(elt(4, &[0, 0, 0, 0, 1]), elt(4, &[-1, 0, 0, 0]));
        // m=1 is evaluation at -1
        assert_eq!(elt(1, &[1, 1]).coeffs()[0], BigInt::zero());
    }

    #[test]
    fn h_poly_vanishes_at_primitive_eighth_roots() {
        let h = [1i64; 8]; // (x+1)(x^2+1)(x^4+1)
        let r = elt(4, &h);
        assert!(r.coeffs().iter().all(Zero::is_zero));
    }

    #[test]
    fn gaussian_products() {
        // (1+i)(1-i) = 2
        let p = elt(2, &[1, 1]).mul(&elt(2, &[1, -1])).unwrap();
        assert_eq!(p, elt(2, &[2, 0]));
        // x * x^3 = -1 in m=4
        let q = elt(4, &[0, 1]).mul(&elt(4, &[0, 0, 0, 1])).unwrap();
        assert_eq!(q, elt(4, &[-1, 0, 0, 0]));
    }

    #[test]
    fn sigma3_product_hand_check() {
        // (x+x^2) * sigma_3(x+x^2) = -x^3 - x in m=4
        let f = elt(4, &[0, 1, 1, 0]);
        let fs = f.galois_apply(GaloisIndex(3)).unwrap();
        assert_eq!(fs, elt(4, &[0, 0, -1, 1]));
        let p = f.mul(&fs).unwrap();
        assert_eq!(p, elt(4, &[0, -1, 0, -1]));
    }

    #[test]
    fn conjugation_of_x() {
        // sigma_{-1}(x) = x^7 = -x^3 in m=4
        let x = elt(4, &[0, 1]);
        assert_eq!(x.conjugate(), elt(4, &[0, 0, 0, -1]));
    }

    #[test]
    fn sigma3_is_involution_on_m4() {
        for k in 0..4 {
            let mut c = vec![0i64; 4];
            c[k] = 1;
            let b = elt(4, &c);
            let twice = b
                .galois_apply(GaloisIndex(3))
                .unwrap()
                .galois_apply(GaloisIndex(3))
                .unwrap();
            assert_eq!(twice, b);
        }
    }

    #[test]
    fn even_galois_index_rejected() {
        let x = elt(4, &[0, 1]);
        assert!(matches!(
            x.galois_apply(GaloisIndex(2)),
            Err(Error::BadGaloisIndex(2, 8))
        ));
    }

    #[test]
    fn orbit_norm_examples() {
        let three = CyclotomicElement::constant(4, BigInt::from(3)).unwrap();
        let reps = [GaloisIndex(1), GaloisIndex(3)];
        assert_eq!(orbit_norm(&three, &reps).unwrap(), BigInt::from(9));

        let x = elt(4, &[0, 1]);
        assert_eq!(orbit_norm(&x, &reps).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn orbit_norm_rejects_nonscalar() {
        let x = elt(4, &[0, 1]);
        assert!(matches!(
            orbit_norm(&x, &[GaloisIndex(1)]),
            Err(Error::NonScalarProduct(_))
        ));
    }

    #[test]
    fn orbit_norm_order_independent() {
        let u = elt(4, &[2, 1, 0, -1]);
        let a = orbit_norm(&u, &[GaloisIndex(1), GaloisIndex(3)]).unwrap();
        let b = orbit_norm(&u, &[GaloisIndex(3), GaloisIndex(1)]).unwrap();
        assert_eq!(a, b);
    }

    fn small_poly(m: usize) -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-9i64..=9, m)
    }

    proptest! {
        #[test]
        fn galois_is_ring_automorphism(c1 in small_poly(8), c2 in small_poly(8), gi in 0usize..8) {
            let g = GaloisIndex(2 * gi + 1);
            let u = elt(8, &c1);
            let v = elt(8, &c2);
            let lhs = u.mul(&v).unwrap().galois_apply(g).unwrap();
            let rhs = u.galois_apply(g).unwrap().mul(&v.galois_apply(g).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = u.add(&v).unwrap().galois_apply(g).unwrap();
            let rhs = u.galois_apply(g).unwrap().add(&v.galois_apply(g).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn reduce_commutes_with_polynomial_multiplication(
            p in prop::collection::vec(-5i64..=5, 1..12),
            q in prop::collection::vec(-5i64..=5, 1..12),
        ) {
            // schoolbook product in Z[x]
            let mut prod = vec![0i64; p.len() + q.len() - 1];
            for (i, a) in p.iter().enumerate() {
                for (j, b) in q.iter().enumerate() {
                    prod[i + j] += a * b;
                }
            }
            for &m in &[2usize, 4, 8] {
                let lhs = CyclotomicElement::reduce(&prod, m).unwrap();
                let rhs = elt(m, &p).mul(&elt(m, &q)).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn m2_matches_gaussian_integers(a in -9i64..=9, b in -9i64..=9, c in -9i64..=9, d in -9i64..=9) {
            let p = elt(2, &[a, b]).mul(&elt(2, &[c, d])).unwrap();
            prop_assert_eq!(p.coeffs()[0].clone(), BigInt::from(a * c - b * d));
            prop_assert_eq!(p.coeffs()[1].clone(), BigInt::from(a * d + b * c));
        }
    }
}
