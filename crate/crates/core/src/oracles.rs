//! Slow, independent recomputations used to cross-check the production
//! routines. Nothing here calls into `combinat`, `chern` or `monadcoh`
//! arithmetic; only the data types are shared.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chern::ChernVector;
use crate::error::{Error, Result};
use crate::monadcoh::MonadSpec;

fn count_compositions(parts: usize, total: u32) -> u64 {
    if parts == 1 {
        return 1;
    }
    (0..=total)
        .map(|first| count_compositions(parts - 1, total - first))
        .sum()
}

/// Counts exponent vectors `(e_0, ..., e_N)` with `sum e = d`, one by one.
/// Desk scale only: `1 <= N <= 7`, `0 <= d <= 12`.
pub fn h0_line_by_enumeration(n: usize, d: i64) -> Result<u64> {
    if !(1..=7).contains(&n) || !(0..=12).contains(&d) {
        return Err(Error::OutOfRange(format!(
            "enumeration supports 1 <= N <= 7 and 0 <= d <= 12, got N = {n}, d = {d}"
        )));
    }
    Ok(count_compositions(n + 1, d as u32))
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `n! / (k! (n - k)!)`, zero outside `0 <= k <= n`.
fn binomial_by_factorials(n: i128, k: i128) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    factorial(n as u64) / (factorial(k as u64) * factorial((n - k) as u64))
}

/// `q = num / den` as truncated power series, by long division.
fn long_divide(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den[0].is_one() || den[0] == -BigInt::one());
    let mut quotient: Vec<BigInt> = Vec::with_capacity(num.len());
    for k in 0..num.len() {
        let mut r = num[k].clone();
        for i in 1..=k.min(den.len() - 1) {
            r -= &den[i] * &quotient[k - i];
        }
        quotient.push(r / &den[0]);
    }
    quotient
}

/// `c(E)` via elementary symmetric functions of the degrees of `H` (summed
/// over explicit subsets) and two long divisions by `1 - c h` and `1 + c h`.
pub fn chern_by_series(spec: &MonadSpec) -> ChernVector {
    let dim = 2 * spec.n() + 1;
    let mut degrees: Vec<i64> = spec.a().iter().map(|&a| a as i64).collect();
    degrees.extend(spec.a().iter().map(|&a| -(a as i64)));

    let mut elementary = vec![BigInt::zero(); dim + 1];
    for mask in 0u64..(1 << degrees.len()) {
        let size = mask.count_ones() as usize;
        if size > dim {
            continue;
        }
        let mut prod = BigInt::one();
        for (i, &d) in degrees.iter().enumerate() {
            if mask >> i & 1 == 1 {
                prod *= d;
            }
        }
        elementary[size] += prod;
    }

    let c = BigInt::from(spec.c());
    let step = long_divide(&elementary, &[BigInt::one(), -c.clone()]);
    ChernVector::new(long_divide(&step, &[BigInt::one(), c]))
}

fn resolution_terms(degrees: &[u64], j: i128, vars: i128, sign: i64, acc: u64) -> BigInt {
    match degrees.split_first() {
        None => {
            let shifted = j - i128::from(acc);
            BigInt::from(sign) * binomial_by_factorials(shifted + vars - 1, vars - 1)
        }
        Some((&d, rest)) => {
            resolution_terms(rest, j, vars, sign, acc)
                + resolution_terms(rest, j, vars, -sign, acc + d)
        }
    }
}

/// `dim M_j` from the graded pieces of the Koszul resolution, walking every
/// subset of generators recursively.
pub fn hilbert_by_resolution(spec: &MonadSpec, j: i64) -> BigInt {
    let mut degrees: Vec<u64> = spec.a().iter().map(|&a| spec.c() - a).collect();
    degrees.extend(spec.a().iter().map(|&a| spec.c() + a));
    let vars = 2 * spec.n() as i128 + 2;
    resolution_terms(&degrees, i128::from(j), vars, 1, 0)
}
