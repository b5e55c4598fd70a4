//! Cross-module consistency checks, runnable from the command line.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chern::{chern_closed_form_p5, chern_of_e, P5Chern};
use crate::combinat::{h0_line, h0_split, h0_wedge2};
use crate::dioph::{components_certificate, piezas_forms, verify_certificate, DEFAULT_MAX_M};
use crate::moduli::{dim_n_quotient, h1_end, h2_end};
use crate::monadcoh::{
    all_specs, chi_monad, cohomology_table, default_window, h0_e, hilbert_m,
    koszul_alternating_sum, HilbertFunction, MonadSpec,
};
use crate::oracles::{chern_by_series, h0_line_by_enumeration, hilbert_by_resolution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Grid {
    #[default]
    Small,
    Full,
}

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "small" => Ok(Grid::Small),
            "full" => Ok(Grid::Full),
            other => Err(format!("unknown grid '{other}', expected small or full")),
        }
    }
}

struct Bounds {
    chern_c: u64,
    hilbert_c: u64,
    hilbert_n: usize,
    coh_c: u64,
    moduli_c: u64,
    components: usize,
    piezas_step: usize,
}

impl Grid {
    fn bounds(self) -> Bounds {
        match self {
            Grid::Small => Bounds {
                chern_c: 6,
                hilbert_c: 5,
                hilbert_n: 2,
                coh_c: 5,
                moduli_c: 8,
                components: 3,
                piezas_step: 5,
            },
            Grid::Full => Bounds {
                chern_c: 12,
                hilbert_c: 8,
                hilbert_n: 3,
                coh_c: 8,
                moduli_c: 12,
                components: 5,
                piezas_step: 2,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub cases: u64,
    pub detail: Option<String>,
}

struct Tally {
    name: &'static str,
    cases: u64,
    failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            failure: None,
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self) -> Check {
        Check {
            name: self.name,
            passed: self.failure.is_none(),
            cases: self.cases,
            detail: self.failure,
        }
    }
}

fn p5_specs(c_max: u64) -> impl Iterator<Item = MonadSpec> {
    (1..=c_max).flat_map(|c| all_specs(2, c))
}

fn line_enumeration() -> Check {
    let mut t = Tally::new("h0_line agrees with monomial enumeration");
    for n in 1..=7 {
        for d in 0..=12i64 {
            let fast = h0_line(n, i128::from(d));
            let slow = h0_line_by_enumeration(n, d).map(BigInt::from);
            t.expect(slow.as_ref() == Ok(&fast), || format!("N = {n}, d = {d}"));
        }
    }
    t.finish()
}

fn chern_agreement(b: &Bounds) -> Check {
    let mut t = Tally::new("Chern classes: monad product = closed form = long division");
    for spec in p5_specs(b.chern_c) {
        let v = chern_of_e(&spec);
        let a = spec.a();
        let closed = chern_closed_form_p5(spec.c(), a[0], a[1], a[2]);
        t.expect(closed.as_ref() == Ok(&P5Chern::from_vector(&v)), || {
            format!("{spec:?}")
        });
        t.expect(
            v.get(1).is_zero() && v.get(3).is_zero() && v.get(5).is_zero(),
            || format!("odd classes of {spec:?}"),
        );
        t.expect(chern_by_series(&spec) == v, || {
            format!("series oracle at {spec:?}")
        });
    }
    t.finish()
}

fn hilbert_agreement(b: &Bounds) -> Check {
    let mut t = Tally::new("Hilbert function = Koszul sum = resolution oracle; Gorenstein");
    for n in 1..=b.hilbert_n {
        for c in 1..=b.hilbert_c {
            for spec in all_specs(n, c) {
                let hf = HilbertFunction::new(&spec);
                let top = hf.socle_degree() as usize;
                t.expect(hf.values()[top] == BigInt::from(1), || {
                    format!("socle of {spec:?}")
                });
                for j in 0..=top {
                    let v = &hf.values()[j];
                    t.expect(v == &hf.values()[top - j], || {
                        format!("symmetry {spec:?} j = {j}")
                    });
                    t.expect(&hilbert_m(&spec, j as i64) == v, || {
                        format!("truncated series {spec:?} j = {j}")
                    });
                    t.expect(&koszul_alternating_sum(&spec, j as i64) == v, || {
                        format!("Koszul {spec:?} j = {j}")
                    });
                    t.expect(&hilbert_by_resolution(&spec, j as i64) == v, || {
                        format!("resolution {spec:?} j = {j}")
                    });
                }
            }
        }
    }
    t.finish()
}

fn sections_of_e(b: &Bounds) -> Check {
    let mut t = Tally::new("h0(E(c)) = h0(wedge2 H) - 1 and h0(E) = 0 when c > 2a1 + a2");
    for spec in p5_specs(b.moduli_c) {
        let a = spec.a();
        if spec.c() <= 2 * a[0] + a[1] {
            continue;
        }
        let c = spec.c() as i64;
        t.expect(h0_e(&spec, c) == h0_wedge2(&spec.h()) - 1, || {
            format!("{spec:?}")
        });
        t.expect(h0_e(&spec, 0).is_zero(), || format!("h0(E) at {spec:?}"));
    }
    t.finish()
}

fn euler_characteristic(b: &Bounds) -> Check {
    let mut t = Tally::new("chi(E(c)) = h0(H(c)) - h0(O(2c)) - 1 = alternating table sum");
    for spec in p5_specs(b.coh_c) {
        let c = spec.c() as i64;
        let chi = chi_monad(&spec, c);
        let via_sections = h0_split(&spec.h(), c) - h0_line(5, 2 * i128::from(c)) - 1;
        t.expect(chi == via_sections, || {
            format!("sections formula at {spec:?}")
        });
        match cohomology_table(&spec, c, c) {
            Ok(table) => t.expect(table.chi(c) == &chi, || format!("table at {spec:?}")),
            Err(e) => t.expect(false, || e.to_string()),
        }
    }
    t.finish()
}

fn moduli_routes(b: &Bounds) -> Check {
    let mut t = Tally::new("h1(End E) = dim N by the quotient count; h2(End E) routes agree");
    for spec in p5_specs(b.moduli_c).filter(|s| s.c() > 5 * s.a()[0]) {
        let h1 = h1_end(&spec);
        t.expect(h1.is_ok() && h1 == dim_n_quotient(&spec), || {
            format!("{spec:?}")
        });
        t.expect(h2_end(&spec).is_ok(), || format!("h2 routes at {spec:?}"));
    }
    let anchor = |c| MonadSpec::new(2, c, vec![0, 0, 0]).expect("valid");
    t.expect(h1_end(&anchor(1)) == Ok(14.into()), || {
        "h1(End E) at c = 1".into()
    });
    t.expect(h1_end(&anchor(2)) == Ok(104.into()), || {
        "h1(End E) at c = 2".into()
    });
    t.expect(h2_end(&anchor(1)) == Ok(0.into()), || {
        "h2(End E) at c = 1".into()
    });
    t.expect(h2_end(&anchor(2)) == Ok(15.into()), || {
        "h2(End E) at c = 2".into()
    });
    t.finish()
}

fn certificates(b: &Bounds) -> Check {
    let mut t = Tally::new("component certificates verify against the exhaustive scan");
    for count in 1..=b.components {
        match components_certificate(count, 1, 1, DEFAULT_MAX_M) {
            Ok(cert) => {
                t.expect(cert.count() >= count, || format!("count {count}"));
                t.expect(verify_certificate(&cert).is_ok(), || {
                    format!("verify {count}")
                });
                if count == 2 {
                    t.expect(
                        cert.c == 71
                            && cert.s == BigInt::from(4747)
                            && cert.t == BigInt::from(23_951_236),
                        || "N = 2 anchor".into(),
                    );
                }
            }
            Err(e) => t.expect(false, || format!("count {count}: {e}")),
        }
    }
    t.finish()
}

fn piezas_identity(b: &Bounds) -> Check {
    let mut t = Tally::new("power-sum identities for k = 2 and k = 4");
    let range: Vec<i64> = (-20..=20).step_by(b.piezas_step).collect();
    for &a in &range {
        for &bb in &range {
            if a == 0 && bb == 0 {
                continue;
            }
            let k2 = BigInt::from(a * a + bb * bb + (a + bb) * (a + bb));
            let k4 = BigInt::from(a.pow(4) + bb.pow(4) + (a + bb).pow(4));
            for &x in &range {
                for &y in &range {
                    let norm = BigInt::from(x * x + 3 * y * y);
                    let forms = piezas_forms(a, bb, x, y);
                    let s2: BigInt = forms.iter().map(|f| f.pow(2)).sum();
                    let s4: BigInt = forms.iter().map(|f| f.pow(4)).sum();
                    t.expect(s2 == &k2 * &norm && s4 == &k4 * &norm * &norm, || {
                        format!("(a, b, x, y) = ({a}, {bb}, {x}, {y})")
                    });
                }
            }
        }
    }
    t.finish()
}

fn vanishing_and_duality(b: &Bounds) -> Check {
    let mut t = Tally::new("middle rows vanish and h^{2n+1}(E(t)) = h0(E(-t-2n-2))");
    for n in 1..=b.hilbert_n {
        for c in 1..=b.coh_c.min(6) {
            for spec in all_specs(n, c) {
                let (lo, hi) = default_window(&spec);
                let table = match cohomology_table(&spec, lo, hi) {
                    Ok(table) => table,
                    Err(e) => {
                        t.expect(false, || e.to_string());
                        continue;
                    }
                };
                let top = 2 * n + 1;
                for tw in lo..=hi {
                    let middle_zero = (2..top - 1).all(|i| table.h(i, tw).is_zero());
                    t.expect(middle_zero, || format!("middle rows {spec:?} t = {tw}"));
                    let dual = -tw - 2 * n as i64 - 2;
                    t.expect(table.h(top, tw) == &h0_e(&spec, dual), || {
                        format!("duality {spec:?} t = {tw}")
                    });
                    t.expect(table.chi(tw) == &chi_monad(&spec, tw), || {
                        format!("chi {spec:?} t = {tw}")
                    });
                }
            }
        }
    }
    t.finish()
}

/// Runs every check on the chosen grid.
pub fn run(grid: Grid) -> Vec<Check> {
    let b = grid.bounds();
    vec![
        line_enumeration(),
        chern_agreement(&b),
        hilbert_agreement(&b),
        sections_of_e(&b),
        euler_characteristic(&b),
        moduli_routes(&b),
        certificates(&b),
        piezas_identity(&b),
        vanishing_and_duality(&b),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_passes() {
        for check in run(Grid::Small) {
            assert!(check.passed, "{}: {:?}", check.name, check.detail);
            assert!(check.cases > 0, "{} ran no cases", check.name);
        }
    }

    #[test]
    fn grid_parsing() {
        assert_eq!("small".parse::<Grid>(), Ok(Grid::Small));
        assert_eq!("full".parse::<Grid>(), Ok(Grid::Full));
        assert!("huge".parse::<Grid>().is_err());
        assert_eq!(Grid::default(), Grid::Small);
    }

    #[test]
    fn failing_expectation_is_reported() {
        let mut t = Tally::new("demo");
        t.expect(true, || unreachable!());
        t.expect(false, || "first".into());
        t.expect(false, || "second".into());
        let check = t.finish();
        assert!(!check.passed);
        assert_eq!(check.cases, 3);
        assert_eq!(check.detail.as_deref(), Some("first"));
    }
}
