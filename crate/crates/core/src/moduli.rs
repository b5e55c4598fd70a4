//! Stability flags, End-cohomology and moduli dimensions.
//!
//! The End-cohomology numbers are only proven on `P^5` under `c > 5 a_1`;
//! everything here refuses to extrapolate outside that range.

use std::fmt;

use num_bigint::BigInt;

use crate::chern::{chern_closed_form_p5, P5Chern};
use crate::combinat::{dim_symp, h0_line, h0_split, h0_tensor, h0_wedge2};
use crate::error::{Error, Result};
use crate::monadcoh::{chi_monad, MonadSpec};

/// Outcome of a numeric stability criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flag {
    /// The criterion applies and holds.
    True,
    /// The criterion is an equivalence and fails.
    False,
    /// A sufficient criterion fails; nothing is claimed either way.
    FalseUnknown,
    /// No criterion is known for this shape of data.
    NotAvailable,
}

impl Flag {
    pub fn as_str(self) -> &'static str {
        match self {
            Flag::True => "true",
            Flag::False => "false",
            Flag::FalseUnknown => "false-unknown",
            Flag::NotAvailable => "criterion-not-available",
        }
    }

    fn sufficient(holds: bool) -> Self {
        if holds {
            Flag::True
        } else {
            Flag::FalseUnknown
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub e_stable: Flag,
    pub e_simple: Flag,
    pub fg_stable: Flag,
    pub criteria_used: Vec<String>,
}

pub fn stability_flags(spec: &MonadSpec) -> StabilityReport {
    let c = u128::from(spec.c());
    let a: Vec<u128> = spec.a().iter().map(|&x| u128::from(x)).collect();
    match spec.n() {
        1 => {
            let holds = c > a[0] + a[1];
            StabilityReport {
                e_stable: if holds { Flag::True } else { Flag::False },
                // stable bundles are simple
                e_simple: Flag::sufficient(holds),
                fg_stable: Flag::NotAvailable,
                criteria_used: vec![format!(
                    "P^3: E stable iff c > a1 + a2 ({c} > {})",
                    a[0] + a[1]
                )],
            }
        }
        2 => {
            let bound = 2 * a[0] + a[1];
            let fg_bound = 5 * a[0];
            StabilityReport {
                e_stable: Flag::sufficient(c > bound),
                e_simple: Flag::sufficient(c > bound),
                fg_stable: Flag::sufficient(c > fg_bound),
                criteria_used: vec![
                    format!("E stable and simple if c > 2a1 + a2 ({c} > {bound})"),
                    format!("F and G stable if c > 5a1 ({c} > {fg_bound})"),
                ],
            }
        }
        _ => StabilityReport {
            e_stable: Flag::NotAvailable,
            e_simple: Flag::NotAvailable,
            fg_stable: Flag::NotAvailable,
            criteria_used: Vec::new(),
        },
    }
}

fn require_p5_range(spec: &MonadSpec) -> Result<()> {
    if spec.n() != 2 {
        return Err(Error::OutsideHypothesis(format!(
            "End-cohomology formulas need n = 2, got n = {}",
            spec.n()
        )));
    }
    let a1 = u128::from(spec.a()[0]);
    if u128::from(spec.c()) <= 5 * a1 {
        return Err(Error::OutsideHypothesis(format!(
            "need c > 5a1, got c = {} and 5a1 = {}",
            spec.c(),
            5 * a1
        )));
    }
    Ok(())
}

/// `h^1(End E) = h^0(wedge^2 H) - 1 + h^0(H(c)) - h^0(H (x) H)`.
pub fn h1_end(spec: &MonadSpec) -> Result<BigInt> {
    require_p5_range(spec)?;
    let h = spec.h();
    Ok(h0_wedge2(&h) - 1 + h0_split(&h, spec.c_i64()) - h0_tensor(&h, &h, 0)?)
}

/// `h^2(End E)`, computed as `h^0(wedge^2 H) - 1 - chi(E(c))` and as
/// `h^0(wedge^2 H) + h^0(O(2c)) - h^0(H(c))`; the two must agree.
pub fn h2_end(spec: &MonadSpec) -> Result<BigInt> {
    require_p5_range(spec)?;
    let h = spec.h();
    let wedge = h0_wedge2(&h);
    let via_chi = &wedge - 1 - chi_monad(spec, spec.c_i64());
    let via_sections = &wedge + h0_line(5, 2 * i128::from(spec.c())) - h0_split(&h, spec.c_i64());
    if via_chi != via_sections {
        return Err(Error::InvariantViolation(format!(
            "h2(End E) routes disagree: {via_chi} vs {via_sections}"
        )));
    }
    Ok(via_chi)
}

/// `dim Hom(O(-c), H) - (1 + dim Symp(H, J))`: parameter count of the
/// monads minus the fiber of the map to the moduli space.
pub fn dim_n_quotient(spec: &MonadSpec) -> Result<BigInt> {
    require_p5_range(spec)?;
    let h = spec.h();
    Ok(h0_split(&h, spec.c_i64()) - 1 - dim_symp(&h)?)
}

/// Everything the irreducible-component statement needs for one
/// `(c, a_1, a_2, a_3)` on `P^5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuliReport {
    pub spec: MonadSpec,
    pub h1_end: BigInt,
    pub h2_end: BigInt,
    pub dim_n: BigInt,
    pub smooth_point: bool,
    pub chern: P5Chern,
}

pub fn moduli_report(spec: &MonadSpec) -> Result<ModuliReport> {
    require_p5_range(spec)?;
    let h1 = h1_end(spec)?;
    let dim_n = dim_n_quotient(spec)?;
    if h1 != dim_n {
        return Err(Error::InvariantViolation(format!(
            "h1(End E) = {h1} but the quotient count gives {dim_n}"
        )));
    }
    let a = spec.a();
    Ok(ModuliReport {
        spec: spec.clone(),
        h2_end: h2_end(spec)?,
        h1_end: h1,
        dim_n,
        // every admitted spec satisfies c > 5a1
        smooth_point: true,
        chern: chern_closed_form_p5(spec.c(), a[0], a[1], a[2])?,
    })
}
