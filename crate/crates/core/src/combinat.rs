//! Cohomology of line bundles and split bundles on `P^N`.
//!
//! Only `h^0` and `h^N` of a line bundle can be nonzero; everything for a
//! split bundle is a sum over its summands.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

thread_local! {
    static H0_CACHE: RefCell<HashMap<(usize, i128), BigInt>> = RefCell::new(HashMap::new());
}

/// `binom(d + n, n)` as a polynomial in `d`, evaluated at an integer.
///
/// Uses the running product `acc_k = acc_{k-1} * (d + k) / k`; every partial
/// product is the generalized binomial `binom(d + k, k)` so each division is
/// exact.
fn binomial_poly(n: usize, d: i128) -> BigInt {
    let mut acc = BigInt::one();
    let d = BigInt::from(d);
    for k in 1..=n {
        acc *= &d + k;
        acc /= k;
    }
    acc
}

/// `h^0(P^N, O(d))`: the number of degree-`d` monomials in `N + 1` variables.
pub fn h0_line(n: usize, d: i128) -> BigInt {
    assert!(n >= 1, "ambient dimension must be positive");
    if d < 0 {
        return BigInt::zero();
    }
    H0_CACHE.with(|cache| {
        cache
            .borrow_mut()
            .entry((n, d))
            .or_insert_with(|| binomial_poly(n, d))
            .clone()
    })
}

/// `h^N(P^N, O(d))`, via Serre duality with `O(-d-N-1)`.
pub fn h_top_line(n: usize, d: i128) -> BigInt {
    h0_line(n, -d - n as i128 - 1)
}

/// `h^i(P^N, O(d))` for any `i`.
pub fn h_line(n: usize, i: usize, d: i128) -> BigInt {
    match i {
        0 => h0_line(n, d),
        i if i == n => h_top_line(n, d),
        _ => BigInt::zero(),
    }
}

/// `chi(P^N, O(d)) = binom(d + N, N)` as a polynomial in `d`.
pub fn chi_line(n: usize, d: i128) -> BigInt {
    assert!(n >= 1, "ambient dimension must be positive");
    binomial_poly(n, d)
}

/// A direct sum of line bundles `O(d_1) + ... + O(d_r)` on `P^N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitBundle {
    ambient_dim: usize,
    degrees: Vec<i64>,
}

impl SplitBundle {
    pub fn new(ambient_dim: usize, degrees: Vec<i64>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::InvalidBundle(
                "ambient dimension must be at least 1".into(),
            ));
        }
        if degrees.is_empty() {
            return Err(Error::InvalidBundle(
                "a split bundle needs at least one summand".into(),
            ));
        }
        Ok(Self {
            ambient_dim,
            degrees,
        })
    }

    /// `O(a_1) + ... + O(a_m) + O(-a_1) + ... + O(-a_m)`.
    pub fn symmetric(ambient_dim: usize, positive: &[u64]) -> Result<Self> {
        let mut degrees = Vec::with_capacity(2 * positive.len());
        for &a in positive {
            let a = i64::try_from(a)
                .map_err(|_| Error::OutOfRange(format!("degree {a} does not fit in i64")))?;
            degrees.push(a);
        }
        for i in 0..positive.len() {
            degrees.push(-degrees[i]);
        }
        Self::new(ambient_dim, degrees)
    }

    /// `r` copies of `O` on `P^N`.
    pub fn trivial(ambient_dim: usize, rank: usize) -> Result<Self> {
        Self::new(ambient_dim, vec![0; rank])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    /// True when the degree multiset equals its own negation.
    pub fn is_negation_closed(&self) -> bool {
        let mut pos = self.degrees.clone();
        let mut neg: Vec<i64> = self.degrees.iter().map(|d| -d).collect();
        pos.sort_unstable();
        neg.sort_unstable();
        pos == neg
    }
}

/// `h^0(B(t))`.
pub fn h0_split(bundle: &SplitBundle, t: i64) -> BigInt {
    bundle
        .degrees
        .iter()
        .map(|&d| h0_line(bundle.ambient_dim, i128::from(d) + i128::from(t)))
        .sum()
}

/// `h^0(B1 (x) B2 (t))`.
pub fn h0_tensor(b1: &SplitBundle, b2: &SplitBundle, t: i64) -> Result<BigInt> {
    if b1.ambient_dim != b2.ambient_dim {
        return Err(Error::AmbientMismatch(b1.ambient_dim, b2.ambient_dim));
    }
    let n = b1.ambient_dim;
    let mut total = BigInt::zero();
    for &d in &b1.degrees {
        for &e in &b2.degrees {
            total += h0_line(n, i128::from(d) + i128::from(e) + i128::from(t));
        }
    }
    Ok(total)
}

/// `h^0(wedge^2 B)`. Repeated degrees count as distinct summand slots.
pub fn h0_wedge2(bundle: &SplitBundle) -> BigInt {
    let n = bundle.ambient_dim;
    let degs = &bundle.degrees;
    let mut total = BigInt::zero();
    for i in 0..degs.len() {
        for j in i + 1..degs.len() {
            total += h0_line(n, i128::from(degs[i]) + i128::from(degs[j]));
        }
    }
    total
}

/// Dimension of the group of symplectic automorphisms of `(H, J)`:
/// `h^0(H (x) H) - h^0(wedge^2 H)`.
pub fn dim_symp(bundle: &SplitBundle) -> Result<BigInt> {
    if !bundle.is_negation_closed() {
        return Err(Error::NotSymplectic);
    }
    Ok(h0_tensor(bundle, bundle, 0)? - h0_wedge2(bundle))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn b(n: usize, degs: &[i64]) -> SplitBundle {
        SplitBundle::new(n, degs.to_vec()).unwrap()
    }

    #[test]
    fn line_bundle_values() {
        assert_eq!(h0_line(5, 0), big(1));
        assert_eq!(h0_line(5, 2), big(21));
        assert_eq!(h0_line(3, -1), big(0));
        assert_eq!(h_top_line(3, -4), big(1));
        assert_eq!(h_top_line(5, -6), big(1));
        assert_eq!(h_top_line(5, 3), big(0));
        assert_eq!(chi_line(3, -2), big(0));
        assert_eq!(chi_line(5, 2), big(21));
        assert_eq!(chi_line(3, -4), big(-1));
    }

    #[test]
    fn middle_cohomology_vanishes() {
        for d in -10..10 {
            for i in 1..5 {
                assert_eq!(h_line(5, i, d), big(0));
            }
            assert_eq!(h_line(5, 5, d), h_top_line(5, d));
        }
    }

    #[test]
    fn huge_twist_is_exact() {
        // binom(10^20 + 2, 2) = (10^20 + 2)(10^20 + 1) / 2
        let d: i128 = 100_000_000_000_000_000_000;
        let expected = (BigInt::from(d) + 2) * (BigInt::from(d) + 1) / 2;
        assert_eq!(h0_line(2, d), expected);
    }

    #[test]
    fn split_values() {
        let trivial6 = SplitBundle::trivial(5, 6).unwrap();
        assert_eq!(h0_split(&trivial6, 1), big(36));
        assert_eq!(h0_split(&trivial6, 0), big(6));
        // h0(O(1)) + h0(O(-1)) + 4 h0(O) = 6 + 0 + 4
        assert_eq!(h0_split(&b(5, &[1, -1, 0, 0, 0, 0]), 0), big(10));
    }

    #[test]
    fn tensor_values() {
        let trivial6 = SplitBundle::trivial(5, 6).unwrap();
        assert_eq!(h0_tensor(&trivial6, &trivial6, 0).unwrap(), big(36));
        assert_eq!(h0_tensor(&trivial6, &trivial6, -1).unwrap(), big(0));
        let pm = b(5, &[1, -1]);
        assert_eq!(h0_tensor(&pm, &pm, 0).unwrap(), big(23));
        let p3 = SplitBundle::trivial(3, 2).unwrap();
        assert_eq!(h0_tensor(&pm, &p3, 0), Err(Error::AmbientMismatch(5, 3)));
    }

    #[test]
    fn wedge_values() {
        assert_eq!(h0_wedge2(&SplitBundle::trivial(3, 4).unwrap()), big(6));
        assert_eq!(h0_wedge2(&SplitBundle::trivial(5, 6).unwrap()), big(15));
        assert_eq!(h0_wedge2(&b(5, &[1, -1, 0, 0, 0, 0])), big(31));
    }

    #[test]
    fn symplectic_group_dimension() {
        assert_eq!(
            dim_symp(&SplitBundle::trivial(5, 6).unwrap()).unwrap(),
            big(21)
        );
        assert_eq!(
            dim_symp(&SplitBundle::trivial(3, 4).unwrap()).unwrap(),
            big(10)
        );
        // 87 - 31, both terms counted monomial by monomial
        assert_eq!(
            dim_symp(&SplitBundle::symmetric(5, &[1, 0, 0]).unwrap()).unwrap(),
            big(56)
        );
        assert_eq!(dim_symp(&b(5, &[1, 0])), Err(Error::NotSymplectic));
    }

    #[test]
    fn rejects_bad_bundles() {
        assert!(SplitBundle::new(0, vec![0]).is_err());
        assert!(SplitBundle::new(3, vec![]).is_err());
    }
}
