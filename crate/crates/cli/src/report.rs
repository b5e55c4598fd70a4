//! JSON rendering. Every integer goes through its decimal string so nothing
//! is ever rounded through a float.

use std::fmt::Display;
use std::str::FromStr;

use nullcorr::dioph::Triple;
use nullcorr::moduli::{ModuliReport, StabilityReport};
use nullcorr::selftest::Check;
use nullcorr::{ChernVector, CohomologyTable, ComponentCertificate, MonadSpec, P5Chern};
use serde_json::{json, Number, Value};

pub fn int(v: impl Display) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integers render as JSON numbers"))
}

fn ints<T: Display>(vs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(vs.into_iter().map(int).collect())
}

fn triples(ts: &[Triple]) -> Value {
    Value::Array(ts.iter().map(|t| ints(t.iter())).collect())
}

pub fn envelope(command: &str, input: Value, result: Value) -> Value {
    json!({
        "command": command,
        "input": input,
        "result": result,
        "version": env!("CARGO_PKG_VERSION"),
    })
}

pub fn spec_input(spec: &MonadSpec) -> Value {
    json!({ "n": spec.n(), "c": int(spec.c()), "a": ints(spec.a()) })
}

pub fn chern(v: &ChernVector, n: usize) -> Value {
    let mut out = json!({ "vector": ints(v.coeffs()) });
    if n == 2 {
        let p = P5Chern::from_vector(v);
        let map = out.as_object_mut().expect("object literal");
        for (key, value) in [("c1", &p.c1), ("c2", &p.c2), ("c3", &p.c3), ("c4", &p.c4)] {
            map.insert(key.into(), int(value));
        }
    }
    out
}

pub fn stability(r: &StabilityReport) -> Value {
    json!({
        "e_stable": r.e_stable.as_str(),
        "e_simple": r.e_simple.as_str(),
        "fg_stable": r.fg_stable.as_str(),
        "criteria_used": r.criteria_used,
    })
}

pub fn moduli(r: &ModuliReport) -> Value {
    json!({
        "h1_end": int(&r.h1_end),
        "h2_end": int(&r.h2_end),
        "dim_n": int(&r.dim_n),
        "smooth_point": r.smooth_point,
        "c2": int(&r.chern.c2),
        "c4": int(&r.chern.c4),
    })
}

pub fn table(t: &CohomologyTable) -> Value {
    json!({
        "t_min": t.t_min(),
        "t_max": t.t_max(),
        "twists": ints(t.twists()),
        "h": Value::Array(t.rows().iter().map(ints).collect()),
        "chi": ints(t.twists().map(|tw| t.chi(tw))),
    })
}

pub fn table_csv(t: &CohomologyTable) -> String {
    let top = t.rows().len();
    let mut out = String::from("t");
    for i in 0..top {
        out.push_str(&format!(",h{i}"));
    }
    out.push_str(",chi\n");
    for tw in t.twists() {
        out.push_str(&tw.to_string());
        for h in t.column(tw) {
            out.push_str(&format!(",{h}"));
        }
        out.push_str(&format!(",{}\n", t.chi(tw)));
    }
    out
}

pub fn certificate(cert: &ComponentCertificate) -> Value {
    let family = &cert.family;
    json!({
        "c": int(cert.c),
        "s": int(&cert.s),
        "t": int(&cert.t),
        "count": cert.count(),
        "components": cert.components.iter().map(|e| json!({
            "a1": int(e.a1),
            "a2": int(e.a2),
            "a3": int(e.a3),
            "dim_n": int(&e.dim_n),
        })).collect::<Vec<_>>(),
        "family": {
            "m": int(family.m),
            "ab": [family.ab.0, family.ab.1],
            "lambda": int(&family.class.lambda),
            "zeta": int(&family.class.zeta),
            "identity_triples": triples(&family.piezas_triples),
            "scan_triples": triples(&family.class.triples),
        },
        "verified_by_brute_force": cert.verified_by_brute_force,
    })
}

pub fn checks(checks: &[Check]) -> Value {
    Value::Array(
        checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "passed": c.passed,
                    "cases": c.cases,
                    "detail": c.detail,
                })
            })
            .collect(),
    )
}
