//! Total Chern classes in `Z[h]/(h^{N+1})`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::SplitBundle;
use crate::error::{Error, Result};
use crate::monadcoh::MonadSpec;

/// Coefficients `c_0, ..., c_N` of a truncated total Chern class on `P^N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChernVector {
    coeffs: Vec<BigInt>,
}

impl ChernVector {
    /// Builds a class of length `N + 1`. Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a Chern vector has at least c_0");
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().copied().map(BigInt::from).collect())
    }

    /// The class `1` on `P^N`.
    pub fn one(ambient_dim: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); ambient_dim + 1];
        coeffs[0] = BigInt::one();
        Self { coeffs }
    }

    /// `1 + d h`, the total Chern class of `O(d)`.
    pub fn of_line(ambient_dim: usize, d: i64) -> Self {
        let mut v = Self::one(ambient_dim);
        if ambient_dim >= 1 {
            v.coeffs[1] = BigInt::from(d);
        }
        v
    }

    pub fn ambient_dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `c_i`, zero beyond the ambient dimension.
    pub fn get(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Product in the truncated ring.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.ambient_dim();
        if other.ambient_dim() != n {
            return Err(Error::AmbientMismatch(n, other.ambient_dim()));
        }
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplicative inverse, by peeling coefficients:
    /// `inv_k = -sum_{i=1..k} c_i inv_{k-i}`.
    pub fn invert(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NotUnital);
        }
        let n = self.ambient_dim();
        let mut inv: Vec<BigInt> = Vec::with_capacity(n + 1);
        inv.push(BigInt::one());
        for k in 1..=n {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                acc -= &self.coeffs[i] * &inv[k - i];
            }
            inv.push(acc);
        }
        Ok(Self { coeffs: inv })
    }
}

impl fmt::Display for ChernVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// `prod_d (1 + d h)` over the summands of `B`, truncated at `h^N`.
pub fn chern_split(bundle: &SplitBundle) -> ChernVector {
    let n = bundle.ambient_dim();
    let mut acc = ChernVector::one(n);
    for &d in bundle.degrees() {
        // multiply in place by (1 + d h), high degree first
        let d = BigInt::from(d);
        for k in (1..=n).rev() {
            let prev = &acc.coeffs[k - 1] * &d;
            acc.coeffs[k] += prev;
        }
    }
    acc
}

pub fn chern_invert(v: &ChernVector) -> Result<ChernVector> {
    v.invert()
}

/// `c(E) = c(H) c(O(-c))^{-1} c(O(c))^{-1}` for the monad of `spec`.
pub fn chern_of_e(spec: &MonadSpec) -> ChernVector {
    let n = spec.ambient_dim();
    let c = spec.c_i64();
    let inv_minus = ChernVector::of_line(n, -c)
        .invert()
        .expect("line bundle classes are unital");
    let inv_plus = ChernVector::of_line(n, c)
        .invert()
        .expect("line bundle classes are unital");
    chern_split(&spec.h())
        .mul(&inv_minus)
        .and_then(|v| v.mul(&inv_plus))
        .expect("all classes live on the same P^N")
}

/// Chern classes `(c_1, c_2, c_3, c_4)` of a rank 4 bundle on `P^5`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct P5Chern {
    pub c1: BigInt,
    pub c2: BigInt,
    pub c3: BigInt,
    pub c4: BigInt,
}

impl P5Chern {
    pub fn from_vector(v: &ChernVector) -> Self {
        Self {
            c1: v.get(1),
            c2: v.get(2),
            c3: v.get(3),
            c4: v.get(4),
        }
    }
}

/// Closed forms on `P^5`: `c_1 = c_3 = 0`,
/// `c_2 = c^2 - (a_1^2 + a_2^2 + a_3^2)` and
/// `c_4 = c^4 - c^2 (a_1^2 + a_2^2 + a_3^2) + (a_1^2 a_2^2 + a_1^2 a_3^2 + a_2^2 a_3^2)`.
pub fn chern_closed_form_p5(c: u64, a1: u64, a2: u64, a3: u64) -> Result<P5Chern> {
    if !(a1 >= a2 && a2 >= a3) {
        return Err(Error::InvalidSpec(format!(
            "need a1 >= a2 >= a3 >= 0, got ({a1}, {a2}, {a3})"
        )));
    }
    if c <= a1 {
        return Err(Error::InvalidSpec(format!(
            "need c > a1, got c = {c}, a1 = {a1}"
        )));
    }
    let sq = |x: u64| BigInt::from(x) * BigInt::from(x);
    let (c2, s1, s2, s3) = (sq(c), sq(a1), sq(a2), sq(a3));
    let sum = &s1 + &s2 + &s3;
    let pair = &s1 * &s2 + &s1 * &s3 + &s2 * &s3;
    Ok(P5Chern {
        c1: BigInt::zero(),
        c2: &c2 - &sum,
        c3: BigInt::zero(),
        c4: &c2 * &c2 - &c2 * &sum + pair,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(c: &[i64]) -> ChernVector {
        ChernVector::from_i64(c)
    }

    #[test]
    fn split_classes() {
        let trivial = SplitBundle::trivial(5, 6).unwrap();
        assert_eq!(chern_split(&trivial), v(&[1, 0, 0, 0, 0, 0]));
        let pm1 = SplitBundle::new(5, vec![1, -1]).unwrap();
        assert_eq!(chern_split(&pm1), v(&[1, 0, -1, 0, 0, 0]));
        let pm2 = SplitBundle::new(5, vec![2, -2]).unwrap();
        assert_eq!(chern_split(&pm2), v(&[1, 0, -4, 0, 0, 0]));
    }

    #[test]
    fn inversion() {
        assert_eq!(
            v(&[1, 0, 0, 0, 0, 0]).invert().unwrap(),
            v(&[1, 0, 0, 0, 0, 0])
        );
        assert_eq!(
            v(&[1, 0, -1, 0, 0, 0]).invert().unwrap(),
            v(&[1, 0, 1, 0, 1, 0])
        );
        assert_eq!(
            v(&[1, 1, 0, 0, 0, 0]).invert().unwrap(),
            v(&[1, -1, 1, -1, 1, -1])
        );
        assert_eq!(v(&[2, 1]).invert(), Err(Error::NotUnital));
    }

    #[test]
    fn monad_classes() {
        let spec = MonadSpec::new(2, 1, vec![0, 0, 0]).unwrap();
        assert_eq!(chern_of_e(&spec), v(&[1, 0, 1, 0, 1, 0]));
        let spec = MonadSpec::new(2, 2, vec![1, 0, 0]).unwrap();
        assert_eq!(chern_of_e(&spec), v(&[1, 0, 3, 0, 12, 0]));
        // the classical null correlation bundle on P^3 has c_2 = 1
        let spec = MonadSpec::new(1, 1, vec![0, 0]).unwrap();
        assert_eq!(chern_of_e(&spec), v(&[1, 0, 1, 0]));
    }

    #[test]
    fn closed_forms() {
        let one = chern_closed_form_p5(1, 0, 0, 0).unwrap();
        assert_eq!(
            (one.c1, one.c2, one.c3, one.c4),
            (0.into(), 1.into(), 0.into(), 1.into())
        );
        let two = chern_closed_form_p5(2, 1, 0, 0).unwrap();
        assert_eq!((two.c2, two.c4), (3.into(), 12.into()));
        let big = chern_closed_form_p5(71, 14, 7, 7).unwrap();
        assert_eq!(big.c2, BigInt::from(4747));
        assert_eq!(big.c4, BigInt::from(23_951_236));
        assert!(chern_closed_form_p5(3, 1, 2, 0).is_err());
        assert!(chern_closed_form_p5(2, 2, 0, 0).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(v(&[1, 0, -3]).to_string(), "(1,0,-3)");
    }

    proptest! {
        #[test]
        fn inverse_multiplies_to_one(tail in proptest::collection::vec(-50i64..50, 1..10)) {
            let mut coeffs = vec![1];
            coeffs.extend(tail);
            let x = v(&coeffs);
            let inv = x.invert().unwrap();
            prop_assert!(x.mul(&inv).unwrap().is_one());
            prop_assert_eq!(inv.invert().unwrap(), x);
        }

        #[test]
        fn monad_relation_holds(n in 1usize..4, c in 1u64..10, raw in proptest::collection::vec(0u64..10, 4)) {
            let mut a: Vec<u64> = raw.into_iter().take(n + 1).map(|x| x % c).collect();
            a.sort_unstable_by(|x, y| y.cmp(x));
            let spec = MonadSpec::new(n, c, a).unwrap();
            let dim = spec.ambient_dim();
            let e = chern_of_e(&spec);
            let back = e
                .mul(&ChernVector::of_line(dim, -(c as i64))).unwrap()
                .mul(&ChernVector::of_line(dim, c as i64)).unwrap();
            prop_assert_eq!(back, chern_split(&spec.h()));
            for i in (1..=dim).step_by(2) {
                prop_assert!(e.get(i).is_zero());
            }
        }
    }
}
