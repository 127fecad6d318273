//! One function per subcommand; each returns a complete [`Report`].

use serde_json::{json, Value};
use superelliptic_core::curve::{CurveError, NormalForm, NormalFormKind, Violation};
use superelliptic_core::dihedral::{
    compute_invariants, numeric_crosscheck, roundtrip_verify, DihedralError, DihedralInvariants,
    RootChoice, RoundtripStatus,
};
use superelliptic_core::exact::ExactError;
use superelliptic_core::sampling::{random_roundtrip, SampleBounds};
use superelliptic_core::{genus, Rational, SuperellipticCurve};

use crate::equation::{parse_equation, render_equation, render_field_equation};
use crate::report::{element, field_report, rational, rationals, CliError, Report};

fn dihedral_error(e: DihedralError) -> CliError {
    match e {
        DihedralError::TooFewCoefficients { .. } => {
            CliError::new("too_few_coefficients", e.to_string())
        }
        DihedralError::DegenerateLocus => CliError::new("degenerate_locus", e.to_string()),
        DihedralError::Exact(inner) => exact_error(inner),
    }
}

fn exact_error(e: ExactError) -> CliError {
    let code = match e {
        ExactError::FactorBoundExceeded { .. } => "factor_bound_exceeded",
        ExactError::DivisionByZero => "division_by_zero",
        _ => "arithmetic_error",
    };
    CliError::new(code, e.to_string())
}

fn curve_error(e: CurveError) -> CliError {
    match &e {
        CurveError::Invalid(vs) => {
            let details: Vec<Value> = vs
                .iter()
                .map(|v: &Violation| json!({"code": v.code(), "message": v.to_string()}))
                .collect();
            CliError::new("invalid_curve", e.to_string()).with_details(Value::Array(details))
        }
        CurveError::GenusDomain { .. } | CurveError::NonIntegralGenus { .. } => {
            CliError::new("genus_domain", e.to_string())
        }
        CurveError::ZeroScale => CliError::new("zero_scale", e.to_string()),
        CurveError::DeltaMismatch { .. } => CliError::new("delta_mismatch", e.to_string()),
    }
}

fn load_curve(equation: &str) -> Result<SuperellipticCurve, CliError> {
    let (n, f) = parse_equation(equation).map_err(|e| CliError::new(e.code(), e.to_string()))?;
    SuperellipticCurve::validate(n, f).map_err(curve_error)
}

fn classify_curve(c: &SuperellipticCurve, delta: Option<usize>) -> Result<NormalForm, CliError> {
    match delta {
        Some(d) => c.classify_with_delta(d).map_err(curve_error),
        None => Ok(c.classify_normal_form()),
    }
}

fn normal_form_json(nf: &NormalForm) -> Value {
    json!({
        "kind": nf.kind.as_str(),
        "delta": nf.delta,
        "s": nf.s,
        "a": rationals(&nf.a),
        "rescale": nf.rescale.as_ref().map(rational),
        "diagnostic": nf.diagnostic,
    })
}

/// Curve → normal form → invariants, with the structured errors the
/// `invariants` and `field` commands share.
fn invariants_of(
    equation: &str,
    delta: Option<usize>,
) -> Result<(SuperellipticCurve, NormalForm, DihedralInvariants), CliError> {
    let curve = load_curve(equation)?;
    let nf = classify_curve(&curve, delta)?;
    match nf.kind {
        NormalFormKind::GDelta => {}
        NormalFormKind::XGDelta => {
            return Err(CliError::new(
                "unsupported_normal_form",
                "dihedral invariants are defined for the x^(delta(s+1)) + ... + 1 form only; \
                 this curve has the x*g(x^delta) form",
            )
            .with_details(normal_form_json(&nf)))
        }
        NormalFormKind::None if nf.delta < 2 => {
            return Err(CliError::new(
                "no_extra_automorphism",
                format!(
                    "no extra automorphism detected: exponent support has delta = {}",
                    nf.delta
                ),
            )
            .with_details(normal_form_json(&nf)))
        }
        NormalFormKind::None => {
            return Err(CliError::new(
                "normal_form_unavailable",
                nf.diagnostic.clone().unwrap_or_default(),
            )
            .with_details(normal_form_json(&nf)))
        }
    }
    let inv = compute_invariants(&nf.a, curve.n(), nf.delta).map_err(dihedral_error)?;
    Ok((curve, nf, inv))
}

pub fn genus_from_nd(n: u64, d: u64) -> Report {
    let inputs = json!({"n": n, "d": d});
    Report::new("genus", inputs, genus_json(n, d))
}

pub fn genus_from_equation(equation: &str) -> Report {
    let inputs = json!({"equation": equation});
    let result = parse_equation(equation)
        .map_err(|e| CliError::new(e.code(), e.to_string()))
        .and_then(|(n, f)| match f.degree() {
            Some(d) => genus_json(n, d as u64),
            None => Err(CliError::new("genus_domain", "f is the zero polynomial")),
        });
    Report::new("genus", inputs, result)
}

fn genus_json(n: u64, d: u64) -> Result<Value, CliError> {
    let g = genus(n, d).map_err(curve_error)?;
    let coprime = num_integer_gcd(n, d) == 1;
    Ok(json!({
        "n": n,
        "d": d,
        "genus": g,
        "coprime": coprime,
    }))
}

fn num_integer_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn classify(equation: &str, delta: Option<usize>) -> Report {
    let inputs = json!({"equation": equation, "delta": delta});
    let result = load_curve(equation).and_then(|c| {
        let nf = classify_curve(&c, delta)?;
        let mut out = normal_form_json(&nf);
        out["n"] = json!(c.n());
        out["genus"] = json!(c.genus());
        out["notice"] = match nf.kind {
            NormalFormKind::XGDelta => {
                json!("dihedral invariants are not supported for the x*g(x^delta) form")
            }
            _ => Value::Null,
        };
        Ok(out)
    });
    Report::new("classify", inputs, result)
}

pub fn invariants(equation: &str, delta: Option<usize>) -> Report {
    let inputs = json!({"equation": equation, "delta": delta});
    let result = invariants_of(equation, delta).and_then(|(curve, nf, inv)| {
        let report = inv.field_of_definition().map_err(dihedral_error)?;
        Ok(json!({
            "n": curve.n(),
            "genus": curve.genus(),
            "delta": nf.delta,
            "s": nf.s,
            "a": rationals(&nf.a),
            "rescale": nf.rescale.as_ref().map(rational),
            "s_values": rationals(inv.values()),
            "delta_s": rational(&report.delta_s),
            "field": field_report(&report),
        }))
    });
    Report::new("invariants", inputs, result)
}

fn field_json(inv: &DihedralInvariants) -> Result<Value, CliError> {
    let report = inv.field_of_definition().map_err(dihedral_error)?;
    let shape = inv.shape();
    Ok(json!({
        "n": shape.n,
        "delta": shape.delta,
        "s": shape.s,
        "s_values": rationals(inv.values()),
        "field": field_report(&report),
    }))
}

pub fn field_from_equation(equation: &str, delta: Option<usize>) -> Report {
    let inputs = json!({"equation": equation, "delta": delta});
    let result = invariants_of(equation, delta).and_then(|(_, _, inv)| field_json(&inv));
    Report::new("field", inputs, result)
}

pub fn field_from_values(s_values: &[Rational], n: u64, delta: usize) -> Report {
    let inputs = json!({"s_values": rationals(s_values), "n": n, "delta": delta});
    let result = DihedralInvariants::new(s_values.to_vec(), n, delta)
        .map_err(dihedral_error)
        .and_then(|inv| field_json(&inv));
    Report::new("field", inputs, result)
}

pub fn reconstruct(
    s_values: &[Rational],
    n: u64,
    delta: usize,
    root: Option<RootChoice>,
) -> Report {
    let inputs = json!({
        "s_values": rationals(s_values),
        "n": n,
        "delta": delta,
        "root": root.map(|r| r.as_str()),
    });
    let result = (|| {
        let inv = DihedralInvariants::new(s_values.to_vec(), n, delta).map_err(dihedral_error)?;
        let report = inv.field_of_definition().map_err(dihedral_error)?;
        if report.is_degenerate {
            return Err(dihedral_error(DihedralError::DegenerateLocus)
                .with_details(json!({"field": field_report(&report)})));
        }
        let roots = inv.solve_a().map_err(dihedral_error)?;
        let choice = root.unwrap_or_else(|| roots.default_choice());
        let rec = inv.reconstruct(choice).map_err(dihedral_error)?;
        let check = numeric_crosscheck(&inv, choice).map_err(dihedral_error)?;
        Ok(json!({
            "n": n,
            "delta": delta,
            "s": inv.shape().s,
            "s_values": rationals(inv.values()),
            "delta_s": rational(&report.delta_s),
            "field": field_report(&report),
            "roots": {"plus": element(&roots.plus), "minus": element(&roots.minus)},
            "root": choice.as_str(),
            "A": element(&rec.leading),
            "c_values": Value::Array(rec.c_values.iter().map(element).collect()),
            "equation": render_field_equation(n, &rec.terms()),
            "degenerate_model": rec.is_degenerate_model(),
            "numeric_crosscheck": {
                "passed": check.passed,
                "note": check.note,
            },
        }))
    })();
    Report::new("reconstruct", inputs, result)
}

pub fn roundtrip_tuple(a: &[Rational], n: u64, delta: usize) -> Report {
    let inputs = json!({"a": rationals(a), "n": n, "delta": delta});
    let result = roundtrip_verify(a, n, delta)
        .map_err(dihedral_error)
        .and_then(|rep| {
            let (status, reason) = match &rep.status {
                RoundtripStatus::Pass => ("pass", None),
                RoundtripStatus::SkippedDegenerate => {
                    ("skipped_degenerate", Some("delta_s = 0".to_string()))
                }
                RoundtripStatus::Fail(why) => ("fail", Some(why.clone())),
            };
            let out = json!({
                "status": status,
                "reason": reason,
                "s_values": rationals(rep.invariants.values()),
                "root": rep.root_choice.map(|c| c.as_str()),
                "A": rep.leading.as_ref().map(rational),
                "c_values": rationals(&rep.c_values),
                "products_checked": rep.products_checked,
            });
            if status == "fail" {
                Err(CliError::new("roundtrip_failed", reason.unwrap_or_default()).with_details(out))
            } else {
                Ok(out)
            }
        });
    Report::new("roundtrip", inputs, result)
}

pub fn roundtrip_random(count: usize, seed: u64, n: u64, delta: usize) -> Report {
    let bounds = SampleBounds::default();
    let inputs = json!({
        "random": count,
        "seed": seed,
        "n": n,
        "delta": delta,
        "max_s": bounds.max_s,
        "height": bounds.height,
    });
    let result = random_roundtrip(count, seed, bounds, n, delta)
        .map_err(dihedral_error)
        .and_then(|sum| {
            let failures: Vec<Value> = sum
                .failures
                .iter()
                .map(|(a, why)| json!({"a": rationals(a), "reason": why}))
                .collect();
            let out = json!({
                "total": sum.total,
                "passed": sum.passed,
                "failed": sum.failed,
                "skipped_degenerate": sum.skipped_degenerate,
                "failures": failures,
            });
            if sum.failed > 0 {
                Err(
                    CliError::new("roundtrip_failed", format!("{} tuples failed", sum.failed))
                        .with_details(out),
                )
            } else {
                Ok(out)
            }
        });
    Report::new("roundtrip", inputs, result)
}

/// Re-renders an equation in canonical form; the identity on canonical text.
pub fn canonicalize(equation: &str) -> Result<String, CliError> {
    let (n, f) = parse_equation(equation).map_err(|e| CliError::new(e.code(), e.to_string()))?;
    Ok(render_equation(n, &f))
}
