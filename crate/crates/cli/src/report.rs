//! JSON blocks for library results and a plain-text renderer for them.
//!
//! Key order follows insertion (serde_json `preserve_order`), so reports are
//! byte-for-byte reproducible.

use polystab::halfplane::HbPart;
use polystab::poly::fmt_rational;
use polystab::{
    AlgebraicRoot, Bound, DescartesBound, Error, GaussianRational, HalfPlaneCount,
    InterlacingCertificate, NewtonEqualityClass, NumericRoot, ParitySignPattern, PatternVerdict,
    Rational, RationalPolynomial, RealizationResult, RootLocation, StabilityReport,
};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: &str = "1.0";

pub fn rational(r: &Rational) -> Value {
    Value::String(fmt_rational(r))
}

pub fn gaussian(z: &GaussianRational) -> Value {
    Value::String(z.to_string())
}

pub fn bound(b: &Bound) -> Value {
    match b {
        Bound::Finite(x) => rational(x),
        other => Value::String(other.to_string()),
    }
}

pub fn polynomial(f: &RationalPolynomial) -> Value {
    Value::String(f.to_string())
}

pub fn coefficients(f: &RationalPolynomial) -> Value {
    Value::Array(f.coeffs().iter().map(rational).collect())
}

pub fn error(e: &Error) -> Value {
    json!({ "error": { "code": e.code(), "message": e.to_string() } })
}

pub fn counts(c: &HalfPlaneCount) -> Value {
    json!({
        "n_plus": c.n_plus,
        "n_minus": c.n_minus,
        "n_zero": c.n_zero,
        "d": c.interlacing_depth(),
    })
}

pub fn root(r: &AlgebraicRoot) -> Value {
    match &r.location {
        RootLocation::Exact(v) => json!({
            "display": r.to_string(),
            "exact": rational(v),
            "multiplicity": r.multiplicity,
        }),
        RootLocation::Interval { lo, hi } => json!({
            "display": r.to_string(),
            "defining": polynomial(&r.defining),
            "interval": [rational(lo), rational(hi)],
            "multiplicity": r.multiplicity,
            "approx": r.approx(),
        }),
    }
}

pub fn roots(rs: &[AlgebraicRoot]) -> Value {
    Value::Array(rs.iter().map(root).collect())
}

pub fn stability(s: &StabilityReport) -> Value {
    let witnesses: Vec<Value> = s
        .witnesses
        .iter()
        .map(|(part, r)| {
            let part = match part {
                HbPart::Even => "even",
                HbPart::Odd => "odd",
            };
            json!({ "part": part, "root": root(r) })
        })
        .collect();
    json!({
        "stable": s.stable,
        "verdict": if s.stable { "STABLE" } else { "NOT STABLE" },
        "counts": counts(&s.counts),
        "conditions": {
            "real_and_distinct": s.hb_conditions.real_and_distinct,
            "leading_same_sign": s.hb_conditions.leading_same_sign,
            "interleaved": s.hb_conditions.interleaved,
        },
        "witnesses": witnesses,
    })
}

pub fn certificate(c: &InterlacingCertificate, verified: bool) -> Value {
    let mut out = Map::new();
    out.insert("d".into(), json!(c.d));
    out.insert("strict".into(), json!(c.strict));
    out.insert("mu".into(), roots(&c.mu));
    out.insert("nu".into(), roots(&c.nu));
    if let Some(r) = &c.nu_pre {
        out.insert("nu_pre".into(), root(r));
    }
    if let Some(r) = &c.nu_post {
        out.insert("nu_post".into(), root(r));
    }
    out.insert("verified".into(), json!(verified));
    Value::Object(out)
}

pub fn descartes(d: &DescartesBound) -> Value {
    json!({ "sign_changes": d.sign_changes, "note": d.parity_note })
}

pub fn pattern(p: &ParitySignPattern) -> Value {
    let verdict = match p.verdict {
        PatternVerdict::AllPositive => json!({ "shape": "all_positive" }),
        PatternVerdict::OneSwitch { s, zero_at_switch } => {
            json!({ "shape": "one_switch", "s": s, "zero_at_switch": zero_at_switch })
        }
        PatternVerdict::AllNegative => json!({ "shape": "all_negative" }),
        PatternVerdict::AllZero => json!({ "shape": "all_zero" }),
        PatternVerdict::NoPattern => json!({ "shape": "no_pattern" }),
    };
    json!({ "t": p.t, "verdict": verdict })
}

pub fn newton(n: &NewtonEqualityClass) -> Value {
    let pairs: Vec<Value> = n
        .pairs
        .iter()
        .map(|p| {
            let classes: Vec<String> = p.classes.iter().map(|c| format!("{c:?}")).collect();
            json!({
                "k": p.k,
                "l": p.l,
                "lhs": rational(&p.lhs),
                "rhs": rational(&p.rhs),
                "classes": classes,
            })
        })
        .collect();
    json!({
        "holds": n.holds,
        "equalities": n.equality_pairs().count(),
        "violations": n.violations().count(),
        "pairs": pairs,
    })
}

pub fn matrix(m: &[Vec<Rational>]) -> Value {
    Value::Array(
        m.iter()
            .map(|row| Value::Array(row.iter().map(rational).collect()))
            .collect(),
    )
}

pub fn realization(r: &RealizationResult) -> Value {
    let mut out = Map::new();
    out.insert("realizable".into(), json!(r.realizable));
    out.insert(
        "failed_condition".into(),
        r.failed_condition.map_or(Value::Null, |c| json!(c.name())),
    );
    if let Some(a) = &r.alpha {
        out.insert("alpha".into(), rational(a));
    }
    if let Some(m) = &r.matrix {
        out.insert("matrix".into(), matrix(m));
    }
    Value::Object(out)
}

pub fn numeric_root(r: &NumericRoot) -> Value {
    json!({
        "re": r.re_f64(),
        "im": r.im_f64(),
        "radius": num_traits::ToPrimitive::to_f64(&r.radius).unwrap_or(f64::INFINITY),
        "multiplicity": r.multiplicity,
    })
}

/// Indented `key: value` rendering of a report.
pub fn render_text(value: &Value) -> String {
    let mut out = String::new();
    render_into(value, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn render_into(value: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match scalar(v) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(v, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_into(item, depth + 1, out);
                    }
                }
            }
        }
        other => {
            if let Some(s) = scalar(other) {
                out.push_str(&format!("{pad}{s}\n"));
            }
        }
    }
}
