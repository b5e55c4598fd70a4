//! The complete intersection `M = S / (f_1, ..., f_{n+1}, g_1, ..., g_{n+1})`
//! and the cohomology table of the bundle `E`.
//!
//! With `deg f_i = c - a_i` and `deg g_i = c + a_i`, the ring `M` is a
//! zero-dimensional graded complete intersection, so its Hilbert series is
//! `prod_i (1 - t^{c-a_i})(1 - t^{c+a_i}) / (1 - t)^{2n+2}`. From the display
//! of the monad:
//!
//! * `h^1(E(t)) = dim M_{t+c}`,
//! * `h^0(F(t)) = h^0(H(t)) - h^0(O(t+c)) + dim M_{t+c}`,
//! * `h^0(E(t)) = h^0(F(t)) - h^0(O(t-c))`,
//! * `h^i(E(t)) = 0` for `2 <= i <= 2n-1`,
//!
//! and the top two rows follow from Serre duality and `E = E*`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{chi_line, h0_line, h0_split, SplitBundle};
use crate::error::{Error, Result};

/// Numeric data `(n, c, a_1 >= ... >= a_{n+1} >= 0)` of a special generalized
/// null correlation monad on `P^{2n+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonadSpec {
    n: usize,
    c: u64,
    a: Vec<u64>,
}

impl MonadSpec {
    pub fn new(n: usize, c: u64, a: Vec<u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("n must be at least 1".into()));
        }
        if a.len() != n + 1 {
            return Err(Error::InvalidSpec(format!(
                "expected {} values of a for n = {n}, got {}",
                n + 1,
                a.len()
            )));
        }
        if a.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidSpec("a must be non-increasing".into()));
        }
        if c <= a[0] {
            return Err(Error::InvalidSpec(format!(
                "need c > a1, got c = {c}, a1 = {}",
                a[0]
            )));
        }
        if i64::try_from(c).is_err() {
            return Err(Error::OutOfRange(format!("c = {c} does not fit in i64")));
        }
        Ok(Self { n, c, a })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub(crate) fn c_i64(&self) -> i64 {
        self.c as i64
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    /// `2n + 1`.
    pub fn ambient_dim(&self) -> usize {
        2 * self.n + 1
    }

    /// The middle term `H` of the monad.
    pub fn h(&self) -> SplitBundle {
        SplitBundle::symmetric(self.ambient_dim(), &self.a).expect("a_i < c fits in i64")
    }

    /// Degrees of `f_1, ..., f_{n+1}, g_1, ..., g_{n+1}`.
    pub fn generator_degrees(&self) -> Vec<u64> {
        let f = self.a.iter().map(|a| self.c - a);
        let g = self.a.iter().map(|a| self.c + a);
        f.chain(g).collect()
    }

    /// Top nonzero degree of `M`: `sum(degrees) - (2n + 2)`, which is
    /// `(2n + 2)(c - 1)`.
    pub fn socle_degree(&self) -> u64 {
        (2 * self.n as u64 + 2) * (self.c - 1)
    }
}

/// Every admissible spec with the given `n` and `c`, in lexicographic order
/// of `a`.
pub fn all_specs(n: usize, c: u64) -> Vec<MonadSpec> {
    fn extend(prefix: &mut Vec<u64>, len: usize, bound: u64, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for x in 0..=bound {
            prefix.push(x);
            extend(prefix, len, x, out);
            prefix.pop();
        }
    }
    if n == 0 || c == 0 {
        return Vec::new();
    }
    let mut raw = Vec::new();
    extend(&mut Vec::new(), n + 1, c - 1, &mut raw);
    raw.into_iter()
        .map(|a| MonadSpec::new(n, c, a).expect("enumerated data is admissible"))
        .collect()
}

/// Graded dimensions of `M`, stored densely from degree 0.
///
/// Built with an optional degree limit so that huge `c` does not force the
/// whole series into memory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertFunction {
    spec: MonadSpec,
    socle_degree: u64,
    values: Vec<BigInt>,
}

impl HilbertFunction {
    /// All degrees `0..=socle_degree`.
    pub fn new(spec: &MonadSpec) -> Self {
        Self::up_to(spec, spec.socle_degree())
    }

    /// Degrees `0..=min(limit, socle_degree)`.
    pub fn up_to(spec: &MonadSpec, limit: u64) -> Self {
        let socle_degree = spec.socle_degree();
        let top = usize::try_from(limit.min(socle_degree)).expect("degree range fits in memory");

        // numerator prod (1 - t^d), truncated
        let mut coeffs = vec![BigInt::zero(); top + 1];
        coeffs[0] = BigInt::one();
        for d in spec.generator_degrees() {
            let d = d as usize;
            for i in (d..=top).rev() {
                let lower = coeffs[i - d].clone();
                coeffs[i] -= lower;
            }
        }
        // divide by (1 - t)^{2n+2}
        for _ in 0..2 * spec.n() + 2 {
            for i in 1..=top {
                let prev = coeffs[i - 1].clone();
                coeffs[i] += prev;
            }
        }
        Self {
            spec: spec.clone(),
            socle_degree,
            values: coeffs,
        }
    }

    pub fn spec(&self) -> &MonadSpec {
        &self.spec
    }

    pub fn socle_degree(&self) -> u64 {
        self.socle_degree
    }

    /// Highest degree held in `values`.
    pub fn computed_limit(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// `dim M_j`. Panics if `j` is inside `(computed_limit, socle_degree]`.
    pub fn dim(&self, j: i128) -> BigInt {
        if j < 0 || j > i128::from(self.socle_degree) {
            return BigInt::zero();
        }
        let idx = j as usize;
        assert!(
            idx < self.values.len(),
            "degree {j} beyond the computed range {}",
            self.computed_limit()
        );
        self.values[idx].clone()
    }
}

/// `dim M_j`.
pub fn hilbert_m(spec: &MonadSpec, j: i64) -> BigInt {
    if j < 0 {
        return BigInt::zero();
    }
    HilbertFunction::up_to(spec, j as u64).dim(i128::from(j))
}

/// `dim M_j` as the graded Euler characteristic of the Koszul resolution:
/// `sum_k (-1)^k sum_{|T| = k} binom(j - sum T + 2n + 1, 2n + 1)`, with
/// subsets `T` of the generator degrees grouped by their sum.
pub fn koszul_alternating_sum(spec: &MonadSpec, j: i64) -> BigInt {
    let vars = spec.ambient_dim();
    // signed count of subsets by degree sum
    let degrees = spec.generator_degrees();
    let total: u64 = degrees.iter().sum();
    let mut by_sum = vec![0i64; total as usize + 1];
    by_sum[0] = 1;
    let mut reach = 0usize;
    for d in degrees {
        let d = d as usize;
        for s in (0..=reach).rev() {
            by_sum[s + d] -= by_sum[s];
        }
        reach += d;
    }
    by_sum
        .iter()
        .enumerate()
        .filter(|&(_, &count)| count != 0)
        .map(|(s, &count)| BigInt::from(count) * h0_line(vars, i128::from(j) - s as i128))
        .sum()
}

fn h0_f_with(spec: &MonadSpec, hilbert: &HilbertFunction, t: i64) -> BigInt {
    let c = i128::from(spec.c());
    let t128 = i128::from(t);
    h0_split(&spec.h(), t) - h0_line(spec.ambient_dim(), c + t128) + hilbert.dim(c + t128)
}

fn h0_e_with(spec: &MonadSpec, hilbert: &HilbertFunction, t: i64) -> BigInt {
    let c = i128::from(spec.c());
    h0_f_with(spec, hilbert, t) - h0_line(spec.ambient_dim(), i128::from(t) - c)
}

fn hilbert_for_twist(spec: &MonadSpec, t: i64) -> HilbertFunction {
    let j = i128::from(t) + i128::from(spec.c());
    HilbertFunction::up_to(spec, j.clamp(0, i128::from(u64::MAX)) as u64)
}

/// `h^1(E(t)) = dim M_{t+c}`.
pub fn h1_e(spec: &MonadSpec, t: i64) -> BigInt {
    hilbert_for_twist(spec, t).dim(i128::from(t) + i128::from(spec.c()))
}

/// `h^0(F(t))` where `F = ker(H -> O(c))`.
pub fn h0_f(spec: &MonadSpec, t: i64) -> BigInt {
    h0_f_with(spec, &hilbert_for_twist(spec, t), t)
}

/// `h^0(E(t))`.
pub fn h0_e(spec: &MonadSpec, t: i64) -> BigInt {
    h0_e_with(spec, &hilbert_for_twist(spec, t), t)
}

/// `chi(E(t))` by additivity over the display:
/// `chi(H(t)) - chi(O(t-c)) - chi(O(t+c))`.
pub fn chi_monad(spec: &MonadSpec, t: i64) -> BigInt {
    let n = spec.ambient_dim();
    let t = i128::from(t);
    let c = i128::from(spec.c());
    let from_h: BigInt = spec
        .h()
        .degrees()
        .iter()
        .map(|&d| chi_line(n, i128::from(d) + t))
        .sum();
    from_h - chi_line(n, t - c) - chi_line(n, t + c)
}

/// `[-2c - 2n - 2, 2c]`: wide enough to see the Serre-dual window and the
/// generation window.
pub fn default_window(spec: &MonadSpec) -> (i64, i64) {
    let c = spec.c_i64();
    let n = spec.n() as i64;
    (-2 * c - 2 * n - 2, 2 * c)
}

/// `h^i(E(t))` for `0 <= i <= 2n+1` over a twist range, plus `chi(E(t))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyTable {
    spec: MonadSpec,
    t_min: i64,
    t_max: i64,
    /// `rows[i][t - t_min] = h^i(E(t))`
    rows: Vec<Vec<BigInt>>,
    chi: Vec<BigInt>,
}

impl CohomologyTable {
    pub fn spec(&self) -> &MonadSpec {
        &self.spec
    }

    pub fn t_min(&self) -> i64 {
        self.t_min
    }

    pub fn t_max(&self) -> i64 {
        self.t_max
    }

    pub fn twists(&self) -> impl Iterator<Item = i64> {
        self.t_min..=self.t_max
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn h(&self, i: usize, t: i64) -> &BigInt {
        &self.rows[i][self.offset(t)]
    }

    pub fn chi(&self, t: i64) -> &BigInt {
        &self.chi[self.offset(t)]
    }

    /// `(h^0, ..., h^{2n+1})` at twist `t`.
    pub fn column(&self, t: i64) -> Vec<BigInt> {
        let k = self.offset(t);
        self.rows.iter().map(|row| row[k].clone()).collect()
    }

    fn offset(&self, t: i64) -> usize {
        assert!(
            (self.t_min..=self.t_max).contains(&t),
            "twist {t} outside [{}, {}]",
            self.t_min,
            self.t_max
        );
        (t - self.t_min) as usize
    }
}

pub fn cohomology_table(spec: &MonadSpec, t_min: i64, t_max: i64) -> Result<CohomologyTable> {
    if t_min > t_max {
        return Err(Error::InvalidSpec(format!(
            "empty twist range {t_min}..{t_max}"
        )));
    }
    let n = spec.n();
    let top = 2 * n + 1;
    let shift = 2 * n as i128 + 2;
    let c = i128::from(spec.c());

    // largest M-degree touched, directly or through the dual twist
    let reach = i128::from(t_max).max(-i128::from(t_min) - shift) + c;
    let hilbert = HilbertFunction::up_to(spec, reach.clamp(0, i128::from(u64::MAX)) as u64);

    let width = usize::try_from(i128::from(t_max) - i128::from(t_min) + 1)
        .map_err(|_| Error::OutOfRange("twist range too wide".into()))?;
    let mut rows = vec![Vec::with_capacity(width); top + 1];
    let mut chi = Vec::with_capacity(width);
    for t in t_min..=t_max {
        let dual = i64::try_from(-i128::from(t) - shift)
            .map_err(|_| Error::OutOfRange(format!("dual of twist {t} overflows")))?;
        let mut column = vec![BigInt::zero(); top + 1];
        column[0] = h0_e_with(spec, &hilbert, t);
        column[1] = hilbert.dim(i128::from(t) + c);
        column[top - 1] = hilbert.dim(i128::from(dual) + c);
        column[top] = h0_e_with(spec, &hilbert, dual);
        let mut euler = BigInt::zero();
        for (i, h) in column.iter().enumerate() {
            if i % 2 == 0 {
                euler += h;
            } else {
                euler -= h;
            }
        }
        for (row, h) in rows.iter_mut().zip(column) {
            row.push(h);
        }
        chi.push(euler);
    }
    Ok(CohomologyTable {
        spec: spec.clone(),
        t_min,
        t_max,
        rows,
        chi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::h0_wedge2;

    fn spec(n: usize, c: u64, a: &[u64]) -> MonadSpec {
        MonadSpec::new(n, c, a.to_vec()).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn spec_validation() {
        assert!(MonadSpec::new(0, 1, vec![0]).is_err());
        assert!(MonadSpec::new(2, 1, vec![0, 0]).is_err());
        assert!(MonadSpec::new(2, 3, vec![0, 1, 0]).is_err());
        assert!(MonadSpec::new(2, 2, vec![2, 0, 0]).is_err());
        assert!(MonadSpec::new(2, 0, vec![0, 0, 0]).is_err());
        let s = spec(2, 3, &[2, 1, 0]);
        assert_eq!(s.generator_degrees(), vec![1, 2, 3, 5, 4, 3]);
        assert_eq!(s.socle_degree(), 12);
        assert_eq!(s.h().degrees(), &[2, 1, 0, -2, -1, 0]);
    }

    #[test]
    fn hilbert_values() {
        assert_eq!(hilbert_m(&spec(2, 1, &[0, 0, 0]), 0), big(1));
        assert_eq!(hilbert_m(&spec(2, 1, &[0, 0, 0]), 1), big(0));
        assert_eq!(hilbert_m(&spec(2, 2, &[0, 0, 0]), 3), big(20));
        assert_eq!(hilbert_m(&spec(2, 2, &[0, 0, 0]), -4), big(0));
        // degrees {1, 3, 2, 2}: (1 + t)^2 (1 + t + t^2) = 1 + 3t + 4t^2 + 3t^3 + t^4
        let small = HilbertFunction::new(&spec(1, 2, &[1, 0]));
        let expect: Vec<BigInt> = [1, 3, 4, 3, 1].into_iter().map(big).collect();
        assert_eq!(small.values(), expect.as_slice());
        assert_eq!(small.dim(6), big(0));
    }

    #[test]
    fn koszul_values() {
        assert_eq!(koszul_alternating_sum(&spec(2, 1, &[0, 0, 0]), 0), big(1));
        assert_eq!(koszul_alternating_sum(&spec(2, 2, &[0, 0, 0]), 3), big(20));
        assert_eq!(koszul_alternating_sum(&spec(1, 2, &[1, 0]), 4), big(1));
        assert_eq!(koszul_alternating_sum(&spec(1, 2, &[1, 0]), 6), big(0));
    }

    #[test]
    fn gorenstein_shape() {
        for s in [
            spec(2, 3, &[2, 1, 0]),
            spec(1, 4, &[3, 1]),
            spec(3, 2, &[1, 1, 0, 0]),
        ] {
            let hf = HilbertFunction::new(&s);
            let top = hf.socle_degree() as usize;
            assert_eq!(hf.values()[top], big(1));
            for j in 0..=top {
                assert_eq!(hf.values()[j], hf.values()[top - j]);
            }
        }
    }

    #[test]
    fn truncated_matches_full() {
        let s = spec(2, 4, &[3, 1, 1]);
        let full = HilbertFunction::new(&s);
        let part = HilbertFunction::up_to(&s, 7);
        assert_eq!(part.computed_limit(), 7);
        assert_eq!(&full.values()[..8], part.values());
    }

    #[test]
    fn h1_values() {
        assert_eq!(h1_e(&spec(2, 2, &[0, 0, 0]), -2), big(1));
        assert_eq!(h1_e(&spec(2, 1, &[0, 0, 0]), 0), big(0));
        assert_eq!(h1_e(&spec(2, 1, &[0, 0, 0]), -10), big(0));
    }

    #[test]
    fn h0_values() {
        let s = spec(2, 1, &[0, 0, 0]);
        assert_eq!(h0_e(&s, 1), big(14));
        assert_eq!(h0_e(&s, 1), h0_wedge2(&s.h()) - 1);
        assert_eq!(h0_f(&s, 1), big(15));
        assert_eq!(h0_e(&s, 0), big(0));
        assert_eq!(h0_e(&s, -1000), big(0));
        assert_eq!(h0_e(&spec(2, 7, &[3, 2, 2]), -1000), big(0));
    }

    #[test]
    fn chi_values() {
        assert_eq!(chi_monad(&spec(2, 1, &[0, 0, 0]), 1), big(14));
        assert_eq!(chi_monad(&spec(2, 2, &[0, 0, 0]), 2), big(-1));
        assert_eq!(chi_monad(&spec(2, 1, &[0, 0, 0]), -3), big(0));
    }

    #[test]
    fn table_columns() {
        let s = spec(2, 1, &[0, 0, 0]);
        let table = cohomology_table(&s, -7, 1).unwrap();
        let col: Vec<BigInt> = [14, 0, 0, 0, 0, 0].into_iter().map(big).collect();
        assert_eq!(table.column(1), col);
        assert_eq!(table.chi(1), &big(14));
        assert_eq!(table.h(5, -7), &big(14));

        let s2 = spec(2, 2, &[0, 0, 0]);
        let t2 = cohomology_table(&s2, -2, -2).unwrap();
        assert_eq!(t2.h(1, -2), &big(1));
        assert_eq!(t2.h(0, -2), &big(0));

        assert!(cohomology_table(&s, 5, 1).is_err());
    }

    #[test]
    fn table_on_p3_keeps_both_middle_rows() {
        // on P^3 rows 1 and 2 are h^1 and its dual, nothing vanishes for free
        let s = spec(1, 2, &[0, 0]);
        let (lo, hi) = default_window(&s);
        let table = cohomology_table(&s, lo, hi).unwrap();
        for t in table.twists() {
            assert_eq!(table.h(2, t), &h1_e(&s, -t - 4));
            assert_eq!(table.chi(t), &chi_monad(&s, t));
        }
    }

    #[test]
    fn spec_enumeration() {
        // non-increasing triples below 3: binom(5, 3)
        assert_eq!(all_specs(2, 3).len(), 10);
        assert!(all_specs(2, 3).iter().all(|s| s.a()[0] < 3));
        assert_eq!(all_specs(1, 1).len(), 1);
    }

    #[test]
    fn default_window_bounds() {
        assert_eq!(default_window(&spec(2, 3, &[1, 0, 0])), (-12, 6));
    }
}
