//! Triples `u >= v >= w >= 0` sharing both `u^2 + v^2 + w^2` and
//! `u^2 v^2 + u^2 w^2 + v^2 w^2`, and the moduli component certificates built
//! from them.
//!
//! Families come from the parametric identities (`k = 2, 4`)
//!
//! ```text
//! (a x + (a + 2b) y)^k + (b x - (2a + b) y)^k + ((a + b) x - (a - b) y)^k
//!     = (a^k + b^k + (a + b)^k) (x^2 + 3 y^2)^{k/2}
//! ```
//!
//! so every representation of a fixed `M = x^2 + 3 y^2` yields a triple with
//! the same power sums. Each family is then completed and checked by an
//! exhaustive scan.

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::moduli::moduli_report;
use crate::monadcoh::MonadSpec;

/// `[u, v, w]` with `u >= v >= w >= 0`.
pub type Triple = [u64; 3];

/// Default ceiling for the search over `M`.
pub const DEFAULT_MAX_M: u64 = 1_000_000;

/// All triples with a prescribed `lambda = u^2 + v^2 + w^2` and
/// `zeta = u^2 v^2 + u^2 w^2 + v^2 w^2`, in descending lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleClass {
    pub lambda: BigUint,
    pub zeta: BigUint,
    pub triples: Vec<Triple>,
}

fn sq(x: u64) -> u128 {
    u128::from(x) * u128::from(x)
}

/// Exhaustive scan over `u <= sqrt(lambda)`, `v <= u`, with `w` determined.
pub fn brute_force_triples(lambda: &BigUint, zeta: &BigUint) -> Result<TripleClass> {
    let lam = lambda
        .to_u64()
        .ok_or_else(|| Error::OutOfRange(format!("lambda = {lambda} is too large to scan")))?;
    let mut triples = Vec::new();

    // sum of fourth powers is lambda^2 - 2 zeta
    let two_zeta = zeta * 2u32;
    let lam_sq = BigUint::from(sq(lam));
    if two_zeta <= lam_sq {
        let fourth = (lam_sq - two_zeta)
            .to_u128()
            .expect("bounded by lambda^2 < 2^128");
        let lam = u128::from(lam);
        let top = lam.sqrt() as u64;
        for u in (0..=top).rev() {
            let rest = lam - sq(u);
            // u is the largest entry, so 3u^2 >= lambda
            if 3 * sq(u) < lam {
                break;
            }
            for v in (0..=u).rev() {
                if sq(v) > rest {
                    continue;
                }
                let r = rest - sq(v);
                // w <= v
                if r > sq(v) {
                    break;
                }
                let w = r.sqrt();
                if w * w != r {
                    continue;
                }
                let w = w as u64;
                if sq(u) * sq(u) + sq(v) * sq(v) + sq(w) * sq(w) == fourth {
                    triples.push([u, v, w]);
                }
            }
        }
    }
    Ok(TripleClass {
        lambda: lambda.clone(),
        zeta: zeta.clone(),
        triples,
    })
}

fn nondegenerate(a: i64, b: i64) -> Result<()> {
    // det [[a, a + 2b], [b, -2a - b]] = -2 (a^2 + ab + b^2)
    let (a2, b2) = (i128::from(a), i128::from(b));
    if a2 * (-2 * a2 - b2) - b2 * (a2 + 2 * b2) == 0 {
        return Err(Error::Degenerate { a, b });
    }
    Ok(())
}

/// The three signed linear forms of the identity.
pub fn piezas_forms(a: i64, b: i64, x: i64, y: i64) -> [BigInt; 3] {
    let (a, b, x, y) = (
        BigInt::from(a),
        BigInt::from(b),
        BigInt::from(x),
        BigInt::from(y),
    );
    [
        &a * &x + (&a + &b * 2) * &y,
        &b * &x - (&a * 2 + &b) * &y,
        (&a + &b) * &x - (&a - &b) * &y,
    ]
}

/// One triple of the family, sorted descending, with both power-sum
/// identities checked before returning.
pub fn piezas_triple(a: i64, b: i64, x: i64, y: i64) -> Result<Triple> {
    nondegenerate(a, b)?;
    let forms = piezas_forms(a, b, x, y);
    let (ab, bb) = (BigInt::from(a), BigInt::from(b));
    let norm = BigInt::from(x) * x + BigInt::from(y) * y * 3;
    let sum_of = |k: u32| -> BigInt { forms.iter().map(|f| f.pow(k)).sum() };
    let coeff = |k: u32| -> BigInt { ab.pow(k) + bb.pow(k) + (&ab + &bb).pow(k) };
    if sum_of(2) != coeff(2) * &norm || sum_of(4) != coeff(4) * &norm * &norm {
        return Err(Error::InvariantViolation(format!(
            "power-sum identity failed at (a, b, x, y) = ({a}, {b}, {x}, {y})"
        )));
    }
    let mut out = [0u64; 3];
    for (slot, f) in out.iter_mut().zip(&forms) {
        *slot = f
            .abs()
            .to_u64()
            .ok_or_else(|| Error::OutOfRange(format!("triple entry {f} exceeds u64")))?;
    }
    out.sort_unstable_by(|p, q| q.cmp(p));
    Ok(out)
}

/// Nonnegative `(x, y)` with `x^2 + 3 y^2 = m`, by increasing `y`.
pub fn representations_x2_3y2(m: u64) -> Vec<(u64, u64)> {
    let m = u128::from(m);
    let mut reps = Vec::new();
    let mut y: u128 = 0;
    while 3 * y * y <= m {
        let r = m - 3 * y * y;
        let x = r.sqrt();
        if x * x == r {
            reps.push((x as u64, y as u64));
        }
        y += 1;
    }
    reps
}

/// Number of integral `(x, y)` (all signs) with `x^2 + 3 y^2 = m`.
pub fn full_solution_count(m: u64) -> u64 {
    representations_x2_3y2(m)
        .into_iter()
        .map(|(x, y)| if x == 0 { 1 } else { 2 } * if y == 0 { 1 } else { 2 })
        .sum()
}

/// Distinct sorted triples produced by every integral solution of
/// `x^2 + 3 y^2 = m`, in descending order.
pub fn piezas_classes(m: u64, a: i64, b: i64) -> Result<Vec<Triple>> {
    nondegenerate(a, b)?;
    let mut out = Vec::new();
    for (x, y) in representations_x2_3y2(m) {
        let (x, y) = (
            i64::try_from(x).map_err(|_| Error::OutOfRange("x exceeds i64".into()))?,
            i64::try_from(y).map_err(|_| Error::OutOfRange("y exceeds i64".into()))?,
        );
        for (sx, sy) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            out.push(piezas_triple(a, b, sx * x, sy * y)?);
        }
    }
    out.sort_unstable_by(|p, q| q.cmp(p));
    out.dedup();
    Ok(out)
}

/// Smallest `m <= max_m` whose full solution set has at least `count`
/// elements and whose induced triples fall into at least `count` distinct
/// classes for the given `(a, b)`.
pub fn find_m_with_representations(count: usize, a: i64, b: i64, max_m: u64) -> Result<u64> {
    nondegenerate(a, b)?;
    for m in 1..=max_m {
        if (full_solution_count(m) as usize) < count {
            continue;
        }
        if piezas_classes(m, a, b)?.len() >= count {
            return Ok(m);
        }
    }
    Err(Error::SearchExhausted { ceiling: max_m })
}

/// `sum_k = a^k + b^k + (a + b)^k` as a nonnegative integer (`k` even).
fn even_power_coeff(a: i64, b: i64, k: u32) -> BigUint {
    let (a, b) = (BigInt::from(a), BigInt::from(b));
    (a.pow(k) + b.pow(k) + (&a + &b).pow(k))
        .to_biguint()
        .expect("even powers are nonnegative")
}

/// A family of triples with shared power sums, together with where it came
/// from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleFamily {
    pub m: u64,
    pub ab: (i64, i64),
    /// Classes produced directly by the identity.
    pub piezas_triples: Vec<Triple>,
    /// The complete class for `(lambda, zeta)`, as found by the exhaustive scan.
    pub class: TripleClass,
}

/// At least `count` triples sharing `(lambda, zeta)`, with
/// `lambda = (a^2 + b^2 + (a+b)^2) M` and
/// `zeta = (lambda^2 - (a^4 + b^4 + (a+b)^4) M^2) / 2`.
pub fn triple_family(count: usize, a: i64, b: i64, max_m: u64) -> Result<TripleFamily> {
    let m = find_m_with_representations(count, a, b, max_m)?;
    let piezas_triples = piezas_classes(m, a, b)?;
    let mm = BigUint::from(m);
    let lambda = even_power_coeff(a, b, 2) * &mm;
    let fourth = even_power_coeff(a, b, 4) * &mm * &mm;
    let zeta = (&lambda * &lambda - fourth) / 2u32;
    let class = brute_force_triples(&lambda, &zeta)?;

    for t in &piezas_triples {
        if !class.triples.contains(t) {
            return Err(Error::InvariantViolation(format!(
                "triple {t:?} from the identity is missing from the exhaustive scan"
            )));
        }
    }
    if class.triples.len() < count {
        return Err(Error::InvariantViolation(format!(
            "expected at least {count} triples, scan found {}",
            class.triples.len()
        )));
    }
    Ok(TripleFamily {
        m,
        ab: (a, b),
        piezas_triples,
        class,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentEntry {
    pub a1: u64,
    pub a2: u64,
    pub a3: u64,
    pub dim_n: BigInt,
}

/// Distinct data `(a_1, a_2, a_3)` sharing one `c` and one pair of Chern
/// classes `(c_2, c_4) = (s, t)` on `P^5`, each with `c > 5 a_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentCertificate {
    pub c: u64,
    pub s: BigInt,
    pub t: BigInt,
    pub family: TripleFamily,
    pub components: Vec<ComponentEntry>,
    pub verified_by_brute_force: bool,
}

impl ComponentCertificate {
    pub fn count(&self) -> usize {
        self.components.len()
    }
}

/// Builds a certificate with at least `count` components.
pub fn components_certificate(
    count: usize,
    a: i64,
    b: i64,
    max_m: u64,
) -> Result<ComponentCertificate> {
    let family = triple_family(count, a, b, max_m)?;
    let max_a1 = family
        .class
        .triples
        .iter()
        .map(|t| t[0])
        .max()
        .expect("family is nonempty");
    let c = max_a1
        .checked_mul(5)
        .and_then(|x| x.checked_add(1))
        .ok_or_else(|| Error::OutOfRange(format!("c = 5 * {max_a1} + 1 overflows")))?;

    let cc = BigInt::from(c) * c;
    let lambda = BigInt::from(family.class.lambda.clone());
    let zeta = BigInt::from(family.class.zeta.clone());
    let s = &cc - &lambda;
    let t = &cc * &cc - &cc * &lambda + &zeta;

    let mut components = Vec::with_capacity(family.class.triples.len());
    for &[a1, a2, a3] in &family.class.triples {
        let report = moduli_report(&MonadSpec::new(2, c, vec![a1, a2, a3])?)?;
        components.push(ComponentEntry {
            a1,
            a2,
            a3,
            dim_n: report.dim_n,
        });
    }
    let cert = ComponentCertificate {
        c,
        s,
        t,
        family,
        components,
        verified_by_brute_force: true,
    };
    verify_certificate(&cert)?;
    Ok(cert)
}

/// Re-derives every claim of a certificate from scratch.
pub fn verify_certificate(cert: &ComponentCertificate) -> Result<()> {
    let fail = |msg: String| Err(Error::InvariantViolation(msg));
    let rescan = brute_force_triples(&cert.family.class.lambda, &cert.family.class.zeta)?;
    let listed: Vec<Triple> = cert.components.iter().map(|e| [e.a1, e.a2, e.a3]).collect();
    if rescan.triples != listed {
        return fail("component list differs from the exhaustive scan".into());
    }
    if cert.components.is_empty() {
        return fail("certificate has no components".into());
    }
    for (i, e) in cert.components.iter().enumerate() {
        if cert.components[..i]
            .iter()
            .any(|o| (o.a1, o.a2, o.a3) == (e.a1, e.a2, e.a3))
        {
            return fail(format!(
                "duplicate component ({}, {}, {})",
                e.a1, e.a2, e.a3
            ));
        }
        if !(e.a1 >= e.a2 && e.a2 >= e.a3) {
            return fail(format!("unsorted component ({}, {}, {})", e.a1, e.a2, e.a3));
        }
        if u128::from(cert.c) <= 5 * u128::from(e.a1) {
            return fail(format!("c = {} does not exceed 5 * {}", cert.c, e.a1));
        }
        let report = moduli_report(&MonadSpec::new(2, cert.c, vec![e.a1, e.a2, e.a3])?)?;
        if report.chern.c2 != cert.s || report.chern.c4 != cert.t {
            return fail(format!(
                "Chern classes of ({}, {}, {}) are ({}, {}), certificate says ({}, {})",
                e.a1, e.a2, e.a3, report.chern.c2, report.chern.c4, cert.s, cert.t
            ));
        }
        if !report.chern.c1.is_zero() || !report.chern.c3.is_zero() {
            return fail("odd Chern classes must vanish".into());
        }
        if report.dim_n != e.dim_n {
            return fail(format!(
                "dimension mismatch for ({}, {}, {})",
                e.a1, e.a2, e.a3
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(lambda: u64, zeta: u64) -> Vec<Triple> {
        brute_force_triples(&lambda.into(), &zeta.into())
            .unwrap()
            .triples
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(class(6, 9), vec![[2, 1, 1]]);
        assert_eq!(class(294, 21609), vec![[14, 7, 7], [13, 11, 2]]);
        assert!(class(1, 1).is_empty());
        assert_eq!(class(1, 0), vec![[1, 0, 0]]);
        assert_eq!(class(0, 0), vec![[0, 0, 0]]);
        // zeta too large for any triple
        assert!(class(6, 100).is_empty());
    }

    #[test]
    fn piezas_examples() {
        assert_eq!(piezas_triple(1, 1, 1, 0).unwrap(), [2, 1, 1]);
        assert_eq!(piezas_triple(1, 1, 1, 2).unwrap(), [7, 5, 2]);
        assert_eq!(piezas_triple(1, 1, 1, 4).unwrap(), [13, 11, 2]);
        assert_eq!(
            piezas_triple(0, 0, 3, 4),
            Err(Error::Degenerate { a: 0, b: 0 })
        );
    }

    #[test]
    fn representation_examples() {
        assert_eq!(representations_x2_3y2(1), vec![(1, 0)]);
        assert_eq!(representations_x2_3y2(49), vec![(7, 0), (1, 4)]);
        assert!(representations_x2_3y2(2).is_empty());
        assert_eq!(full_solution_count(1), 2);
        assert_eq!(full_solution_count(49), 6);
        assert_eq!(full_solution_count(4), 6); // (2,0), (1,1) and signs
    }

    #[test]
    fn m_search() {
        assert_eq!(find_m_with_representations(1, 1, 1, 10).unwrap(), 1);
        assert_eq!(find_m_with_representations(2, 1, 1, 100).unwrap(), 49);
        assert_eq!(
            find_m_with_representations(2, 1, 1, 10),
            Err(Error::SearchExhausted { ceiling: 10 })
        );
        let m3 = find_m_with_representations(3, 1, 1, DEFAULT_MAX_M).unwrap();
        assert_eq!(m3, 637);
        let scan = triple_family(3, 1, 1, DEFAULT_MAX_M).unwrap();
        assert!(scan.class.triples.len() >= 3);
    }

    #[test]
    fn family_examples() {
        let one = triple_family(1, 1, 1, 10).unwrap();
        assert_eq!(
            (one.class.lambda.clone(), one.class.zeta.clone()),
            (6u32.into(), 9u32.into())
        );
        assert_eq!(one.class.triples, vec![[2, 1, 1]]);
        let two = triple_family(2, 1, 1, 100).unwrap();
        assert_eq!(two.m, 49);
        assert_eq!(two.class.lambda, BigUint::from(294u32));
        assert_eq!(two.class.zeta, BigUint::from(21609u32));
        assert!(two.class.triples.contains(&[14, 7, 7]));
        assert!(two.class.triples.contains(&[13, 11, 2]));
        assert!(triple_family(2, 0, 0, 100).is_err());
    }

    #[test]
    fn certificate_examples() {
        let one = components_certificate(1, 1, 1, 10).unwrap();
        assert_eq!(one.c, 11);
        assert_eq!(one.s, BigInt::from(115));
        assert_eq!(one.t, BigInt::from(11i64.pow(4) - 121 * 6 + 9));
        assert_eq!(one.count(), 1);
        assert_eq!(one.components[0].dim_n, BigInt::from(28633));

        let two = components_certificate(2, 1, 1, 100).unwrap();
        assert_eq!(two.c, 71);
        assert_eq!(two.s, BigInt::from(4747));
        assert_eq!(two.t, BigInt::from(23_951_236));
        let triples: Vec<Triple> = two.components.iter().map(|e| [e.a1, e.a2, e.a3]).collect();
        assert_eq!(triples, vec![[14, 7, 7], [13, 11, 2]]);
        assert!(two.components.iter().all(|e| 71 > 5 * e.a1));
        assert_eq!(two.components[1].dim_n, BigInt::from(130_566_099));

        assert_eq!(
            components_certificate(2, 1, 1, 10),
            Err(Error::SearchExhausted { ceiling: 10 })
        );
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let mut cert = components_certificate(2, 1, 1, 100).unwrap();
        cert.t += 1;
        assert!(verify_certificate(&cert).is_err());

        let mut cert = components_certificate(2, 1, 1, 100).unwrap();
        cert.components.pop();
        assert!(verify_certificate(&cert).is_err());
    }
}
