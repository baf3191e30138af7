//! Library side of the `isect-alg` binary: argument parsing and job
//! execution, kept separate from `main` so both can be tested directly.

mod args;
mod verify;

use std::fmt::Write as _;

use intersection_algebra::algebra::{
    hilbert_series_denominator, hilbert_series_numerator_truncated, SeriesFactor,
};
use intersection_algebra::fanalg::{
    check_fan_linear, normality_check, FanAlgebra, FanLinearFunction, FanLinearViolation,
    IntersectionSemigroup, NormalityReport,
};
use intersection_algebra::{
    build_fan, canonical_ideal_generators, cf_elements, count_minimal, fund_elements, generators,
    hilbert_bases, is_gorenstein, krull_dimension, minimal_count_bound, minimal_positive,
    EPhiElement, Error, GradedMonomial, LatticePoint2,
};
use serde_json::{json, Value};

pub use args::{parse_args, Command, Format, JobSpec, Options, UsageError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_CHECK_FAILED: i32 = 4;

/// What a job printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    json: Value,
    text: String,
    passed: bool,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report {
            json,
            text,
            passed: true,
        }
    }
}

fn point(p: &LatticePoint2) -> Value {
    json!([p.r, p.s])
}

fn elements(v: &[EPhiElement]) -> Value {
    Value::from(
        v.iter()
            .map(|e| Value::from(e.as_slice().to_vec()))
            .collect::<Vec<_>>(),
    )
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().fold(String::new(), |mut out, x| {
        out.push_str(&x.to_string());
        out.push('\n');
        out
    })
}

/// Display order: graded pieces by `(r, s)`, then the variables.
fn display_order(mut gens: Vec<GradedMonomial>) -> Vec<GradedMonomial> {
    gens.sort_by(|x, y| {
        let key = |g: &GradedMonomial| (g.r + g.s == 0, g.r, g.s, g.m.clone());
        key(x).cmp(&key(y))
    });
    gens
}

fn monomials(gens: &[GradedMonomial]) -> Value {
    Value::from(
        gens.iter()
            .map(|g| Value::from(g.log()))
            .collect::<Vec<_>>(),
    )
}

/// Renders `r^i s^j m1^k ...`, the series variables.
fn series_monomial(exponent: &[u64]) -> String {
    let names = ["r".to_string(), "s".to_string()]
        .into_iter()
        .chain((1..=exponent.len().saturating_sub(2)).map(|t| format!("m{t}")));
    let factors: Vec<String> = names
        .zip(exponent)
        .filter(|(_, &e)| e > 0)
        .map(|(name, &e)| if e == 1 { name } else { format!("{name}^{e}") })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

fn factor_text(f: &SeriesFactor) -> String {
    let base = format!("(1 - {})", series_monomial(&f.exponent));
    if f.multiplicity == 1 {
        base
    } else {
        format!("{base}^{}", f.multiplicity)
    }
}

fn fan_report(job: &JobSpec) -> Report {
    let fan = build_fan(&job.pair);
    let cones: Vec<Value> = fan
        .cones
        .iter()
        .map(|c| {
            json!({
                "index": c.index,
                "ray_low": point(&c.primitive_low),
                "ray_high": point(&c.primitive_high),
                "degenerate": c.degenerate,
            })
        })
        .collect();
    let mut text = format!(
        "fan order: a = {:?}, b = {:?} (input positions {:?})\n",
        job.pair.a(),
        job.pair.b(),
        job.pair.perm().iter().map(|i| i + 1).collect::<Vec<_>>()
    );
    for c in &fan.cones {
        let _ = writeln!(
            text,
            "C{}: {} to {}{}",
            c.index,
            c.primitive_low,
            c.primitive_high,
            if c.degenerate { " (degenerate)" } else { "" }
        );
    }
    Report::ok(
        json!({
            "fan": {
                "a": job.pair.a(),
                "b": job.pair.b(),
                "permutation": job.pair.perm(),
                "non_degenerate": job.pair.is_non_degenerate(),
                "cones": cones,
            }
        }),
        text,
    )
}

fn hilbert_basis_report(job: &JobSpec) -> Report {
    let bases = hilbert_bases(&build_fan(&job.pair));
    let json_bases: Vec<Value> = bases
        .iter()
        .map(|hb| Value::from(hb.points.iter().map(point).collect::<Vec<_>>()))
        .collect();
    let text = lines(bases.iter().map(|hb| {
        let pts: Vec<String> = hb.points.iter().map(ToString::to_string).collect();
        format!("H{}: {}", hb.cone_index, pts.join(" "))
    }));
    Report::ok(json!({ "hilbert_bases": json_bases }), text)
}

fn series_report(job: &JobSpec) -> Report {
    let cap = job.options.degree_cap;
    let den = hilbert_series_denominator(&job.pair);
    let num = hilbert_series_numerator_truncated(&job.pair, cap);
    let factors: Vec<Value> = den
        .iter()
        .map(|f| json!({ "exponent": f.exponent, "multiplicity": f.multiplicity }))
        .collect();
    let coefficients: Vec<Value> = num
        .coefficients
        .iter()
        .map(|(e, c)| json!({ "exponent": e, "coefficient": c }))
        .collect();
    let mut text = format!(
        "variables: {}\ndenominator: {}\nnumerator through total degree {cap}:\n",
        series_monomial(&vec![1; job.pair.n() + 2]).replace('*', ", "),
        den.iter().map(factor_text).collect::<Vec<_>>().join(" "),
    );
    for (e, c) in &num.coefficients {
        let _ = writeln!(text, "  {c:+} {}", series_monomial(e));
    }
    Report::ok(
        json!({
            "degree_cap": cap,
            "denominator_factors": factors,
            "numerator_coefficients": coefficients,
        }),
        text,
    )
}

fn violation_json(v: &FanLinearViolation) -> Value {
    match v {
        FanLinearViolation::NotIntegral { cone, point: p } => {
            json!({ "kind": "not_integral", "cone": cone, "point": point(p) })
        }
        FanLinearViolation::FaceDisagreement {
            cone,
            ray,
            left,
            right,
        } => json!({
            "kind": "face_disagreement",
            "cone": cone,
            "ray": point(ray),
            "left": left.to_string(),
            "right": right.to_string(),
        }),
        FanLinearViolation::NotSubadditive {
            p,
            q,
            sum_of_values,
            value_of_sum,
        } => json!({
            "kind": "not_subadditive",
            "p": point(p),
            "q": point(q),
            "sum_of_values": sum_of_values,
            "value_of_sum": value_of_sum,
        }),
    }
}

fn violation_text(v: &FanLinearViolation) -> String {
    match v {
        FanLinearViolation::NotIntegral { cone, point } => {
            format!("not fan-linear: g{cone} is not a natural number at {point}")
        }
        FanLinearViolation::FaceDisagreement {
            cone,
            ray,
            left,
            right,
        } => {
            format!(
                "not fan-linear: g{cone} and g{} disagree on {ray} ({left} vs {right})",
                cone + 1
            )
        }
        FanLinearViolation::NotSubadditive {
            p,
            q,
            sum_of_values,
            value_of_sum,
        } => {
            format!(
                "not fan-linear: f{p} + f{q} = {sum_of_values} < {value_of_sum} = f({},{})",
                p.r + q.r,
                p.s + q.s
            )
        }
    }
}

fn fan_linear_function(job: &JobSpec) -> Result<Option<FanLinearFunction>, Error> {
    job.options
        .fan_linear
        .clone()
        .map(FanLinearFunction::new)
        .transpose()
}

fn fan_linear_report(job: &JobSpec) -> Result<Report, Error> {
    let f = fan_linear_function(job)?.expect("checked during parsing");
    let fan = build_fan(&job.pair);
    let bound = job.options.rs_bound;
    Ok(match check_fan_linear(&f, &fan, bound)? {
        Ok(cert) => Report::ok(
            json!({ "fan_linear": { "valid": true, "certificate": cert.to_string() } }),
            format!("fan-linear ({cert})\n"),
        ),
        Err(v) => Report {
            json: json!({ "fan_linear": { "valid": false, "violation": violation_json(&v) } }),
            text: format!("{}\n", violation_text(&v)),
            passed: false,
        },
    })
}

fn normality_report(job: &JobSpec) -> Result<Report, Error> {
    let bound = job.options.rs_bound;
    let mult = job.options.multiplier_bound;
    let fan = build_fan(&job.pair);
    let report = match fan_linear_function(job)? {
        Some(f) => normality_check(
            &FanAlgebra {
                fan: &fan,
                functions: vec![f],
            },
            bound,
            mult,
        )?,
        None => normality_check(&IntersectionSemigroup(&job.pair), bound, mult)?,
    };
    Ok(match report {
        NormalityReport::Saturated { box_bound, max_multiplier } => Report::ok(
            json!({ "normality": { "saturated": true, "box_bound": box_bound, "max_multiplier": max_multiplier } }),
            format!("saturated: no gaps for r, s <= {box_bound} and multipliers up to {max_multiplier}\n"),
        ),
        NormalityReport::Violation { z, multiplier } => Report {
            text: format!("not saturated: {multiplier} * {z:?} is in the semigroup but {z:?} is not\n"),
            json: json!({ "normality": { "saturated": false, "witness": z, "multiplier": multiplier } }),
            passed: false,
        },
    })
}

fn dispatch(job: &JobSpec) -> Result<Report, Error> {
    let ep = &job.pair;
    Ok(match job.command {
        Command::Fan => fan_report(job),
        Command::HilbertBasis => hilbert_basis_report(job),
        Command::Generators => {
            let gens = display_order(generators(ep));
            Report::ok(json!({ "generators": monomials(&gens) }), lines(&gens))
        }
        Command::Fund => {
            let fund = fund_elements(ep).elements();
            Report::ok(json!({ "fund": elements(&fund) }), lines(&fund))
        }
        Command::Cf => {
            let cf = cf_elements(ep);
            Report::ok(json!({ "cf": elements(&cf) }), lines(&cf))
        }
        Command::HilbertSeries => series_report(job),
        Command::Canonical => {
            let mp = minimal_positive(ep)?;
            let gens = display_order(canonical_ideal_generators(ep)?);
            Report::ok(
                json!({ "canonical_generators": monomials(&gens), "minimal_positive": elements(&mp) }),
                lines(&gens),
            )
        }
        Command::Gorenstein => {
            let g = is_gorenstein(ep);
            let text = match &g.witness {
                Some(w) => format!("Gorenstein: canonical ideal generated by {}\n", w.project()),
                None => format!(
                    "not Gorenstein: {} minimal positive elements\n",
                    g.minimal_count
                ),
            };
            Report::ok(
                json!({
                    "gorenstein": g.gorenstein,
                    "minimal_count": g.minimal_count,
                    "witness": g.witness.as_ref().map(|w| w.as_slice().to_vec()),
                    "from_box_scan": g.from_box_scan,
                }),
                text,
            )
        }
        Command::Count => {
            let c = count_minimal(ep)?;
            Report::ok(json!({ "count": c }), format!("{c}\n"))
        }
        Command::Bound => {
            let (a, b) = (ep.a()[0], ep.b()[0]);
            let bound = minimal_count_bound(a, b)?;
            let count = minimal_positive(ep)?.len();
            Report::ok(
                json!({ "bound": bound, "count": count }),
                format!("{count} minimal positive elements, bound {bound}\n"),
            )
        }
        Command::Dimension => {
            let d = krull_dimension(ep);
            Report::ok(json!({ "dimension": d }), format!("{d}\n"))
        }
        Command::FanlinearCheck => fan_linear_report(job)?,
        Command::Normality => normality_report(job)?,
        Command::Verify => {
            let v = verify::run(job)?;
            Report {
                passed: v.passed(),
                text: v.text(),
                json: json!({ "verified": v.json() }),
            }
        }
    })
}

/// Serializes with sorted keys, which makes the output canonical.
pub fn to_canonical_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializing a Value cannot fail");
    s.push('\n');
    s
}

/// Executes a job.
pub fn run(job: &JobSpec) -> Outcome {
    match dispatch(job) {
        Ok(report) => {
            let code = if report.passed {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            let stdout = match job.format {
                Format::Json => to_canonical_json(&report.json),
                Format::Text => report.text,
            };
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(err) => {
            let (stdout, stderr) = match job.format {
                Format::Json => (
                    to_canonical_json(&json!({
                        "error": { "module": err.module(), "name": err.name(), "message": err.to_string() }
                    })),
                    String::new(),
                ),
                Format::Text => (
                    String::new(),
                    format!("error: {}::{}: {err}\n", err.module(), err.name()),
                ),
            };
            Outcome {
                code: EXIT_DOMAIN,
                stdout,
                stderr,
            }
        }
    }
}

/// Parses and runs, mapping usage errors to exit code 2.
pub fn main_with_args<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match parse_args(argv) {
        Ok(job) => run(&job),
        Err(e) if e.informational => Outcome {
            code: EXIT_OK,
            stdout: e.message,
            stderr: String::new(),
        },
        Err(e) => {
            let mut stderr = e.message;
            if !stderr.ends_with('\n') {
                stderr.push('\n');
            }
            Outcome {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr,
            }
        }
    }
}
