use std::fmt::Write as _;

use logfutaki::{
    brute_force_threshold, futaki_line, log_futaki, q_point, r_invariant, stability_threshold,
    BetaInterval, FutakiLine, OracleResult, RatPoint, Rational, ThresholdReport,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::job::JobSpec;

/// Significant digits of the advisory decimal fields.
pub const DECIMAL_DIGITS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSection {
    pub lambda: RatPoint,
    pub line: FutakiLine,
    pub interval: BetaInterval,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaSection {
    pub beta: Rational,
    pub lambda: RatPoint,
    pub futaki: Rational,
}

/// How much of a report the human table shows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum View {
    /// Polytope data, `R(M)` and `Q` only.
    Invariant,
    Full,
}

/// Everything computed for one job.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub polytope: String,
    pub vertices: Vec<RatPoint>,
    pub m: u32,
    pub support: Vec<RatPoint>,
    pub excluded: Vec<RatPoint>,
    pub barycenter: RatPoint,
    pub volume: Rational,
    pub r_of_m: Rational,
    pub q_point: Option<RatPoint>,
    pub threshold: ThresholdReport,
    pub lambda: Option<LambdaSection>,
    pub beta: Option<BetaSection>,
    pub oracle: Option<(u32, OracleResult)>,
    pub warnings: Vec<String>,
}

pub fn run_job(job: &JobSpec) -> Result<Report, CliError> {
    let fano = job.fano()?;
    let divisor = job.divisor(&fano)?;
    let all = fano
        .lattice_points(job.m)
        .map_err(CliError::engine("lattice points"))?;
    let excluded = all.into_iter().filter(|p| !divisor.contains(p)).collect();

    let barycenter = fano.barycenter();
    let r_of_m = r_invariant(&fano).map_err(CliError::engine("R(M)"))?;
    let q = if barycenter.is_zero() {
        None
    } else {
        Some(q_point(&fano).map_err(CliError::engine("Q"))?)
    };
    let threshold = stability_threshold(&fano, &divisor).map_err(CliError::engine("threshold"))?;

    let lambda = job
        .lambda
        .map(|(a, b)| {
            let lambda = RatPoint::from_ints(a, b);
            let line =
                futaki_line(&fano, &divisor, &lambda).map_err(CliError::engine("futaki line"))?;
            let interval = line.interval();
            Ok::<_, CliError>(LambdaSection {
                lambda,
                line,
                interval,
            })
        })
        .transpose()?;

    let beta = job
        .beta
        .as_ref()
        .map(|beta| {
            let lambda = lambda
                .as_ref()
                .map_or_else(|| threshold.witness.clone(), |s| s.lambda.clone());
            let futaki = log_futaki(&fano, &divisor, beta, &lambda)
                .map_err(CliError::engine("log-Futaki"))?;
            Ok::<_, CliError>(BetaSection {
                beta: beta.clone(),
                lambda,
                futaki,
            })
        })
        .transpose()?;

    let oracle = job
        .oracle_bound
        .map(|bound| {
            brute_force_threshold(&fano, &divisor, bound)
                .map(|r| (bound, r))
                .map_err(CliError::engine("oracle"))
        })
        .transpose()?;

    Ok(Report {
        polytope: job.polytope_label(),
        vertices: fano.vertices().to_vec(),
        m: job.m,
        support: divisor.points().to_vec(),
        excluded,
        barycenter,
        volume: fano.volume(),
        r_of_m,
        q_point: q,
        threshold,
        lambda,
        beta,
        oracle,
        warnings: divisor.warnings().iter().map(ToString::to_string).collect(),
    })
}

/// Rounds to `digits` significant digits (half away from zero) in plain
/// positional notation. Display only.
pub fn decimal(value: &Rational, digits: usize) -> String {
    assert!(digits > 0);
    if value.is_zero() {
        return "0".to_string();
    }
    let ten = Rational::from_integer(BigInt::from(10));
    let pow10 = |e: i64| -> Rational {
        let p = num_traits::pow(ten.clone(), e.unsigned_abs() as usize);
        if e >= 0 {
            p
        } else {
            Rational::one() / p
        }
    };
    let abs = value.abs();
    let mut exp = abs.numer().to_string().len() as i64 - abs.denom().to_string().len() as i64;
    while abs < pow10(exp) {
        exp -= 1;
    }
    while abs >= pow10(exp + 1) {
        exp += 1;
    }
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let mut mantissa = (&abs * pow10(digits as i64 - 1 - exp) + half)
        .floor()
        .to_integer();
    if mantissa.to_string().len() > digits {
        mantissa /= 10;
        exp += 1;
    }
    let body = mantissa.to_string();
    let text = if exp < 0 {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), body)
    } else if (exp as usize) + 1 >= digits {
        format!("{}{}", body, "0".repeat(exp as usize + 1 - digits))
    } else {
        let (int_part, frac) = body.split_at(exp as usize + 1);
        format!("{int_part}.{frac}")
    };
    if value.is_negative() {
        format!("-{text}")
    } else {
        text
    }
}

fn num(r: &Rational) -> Value {
    json!({"exact": r.to_string(), "approx": decimal(r, DECIMAL_DIGITS)})
}

fn pt(p: &RatPoint) -> Value {
    json!({
        "exact": [p.x.to_string(), p.y.to_string()],
        "approx": [decimal(&p.x, DECIMAL_DIGITS), decimal(&p.y, DECIMAL_DIGITS)],
    })
}

fn interval(i: &BetaInterval) -> Value {
    json!({
        "empty": i.empty,
        "lower": num(&i.lower),
        "upper": num(&i.upper),
        "upper_closed": i.upper_closed,
        "text": i.to_string(),
    })
}

fn line(l: &FutakiLine) -> Value {
    let (ns, ni) = l.normalized();
    json!({
        "slope": num(&l.slope),
        "intercept": num(&l.intercept),
        "volume": num(&l.volume),
        "w_value": num(&l.w_value),
        "c_value": num(&l.c_value),
        "normalized_slope": num(&ns),
        "normalized_intercept": num(&ni),
    })
}

impl Report {
    pub fn to_json(&self) -> Value {
        let t = &self.threshold;
        let mut doc = json!({
            "polytope": self.polytope,
            "vertices": self.vertices.iter().map(pt).collect::<Vec<_>>(),
            "m": self.m,
            "support_size": self.support.len(),
            "excluded": self.excluded.iter().map(pt).collect::<Vec<_>>(),
            "barycenter": pt(&self.barycenter),
            "volume": num(&self.volume),
            "r_of_m": num(&self.r_of_m),
            "q_point": self.q_point.as_ref().map(pt),
            "threshold": {
                "r_bar": num(&t.r_bar),
                "l_bar": num(&t.l_bar),
                "feasible": t.feasible(),
                "interval": interval(&t.interval),
                "witness": [t.witness.x.to_string(), t.witness.y.to_string()],
                "witness_interval": interval(&t.witness_interval),
                "sharp_at_r": t.sharp_at_r,
            },
            "warnings": self.warnings,
        });
        let obj = doc.as_object_mut().unwrap();
        if let Some(s) = &self.lambda {
            obj.insert(
                "futaki".into(),
                json!({
                    "lambda": [s.lambda.x.to_string(), s.lambda.y.to_string()],
                    "line": line(&s.line),
                    "interval": interval(&s.interval),
                }),
            );
        }
        if let Some(b) = &self.beta {
            obj.insert(
                "log_futaki".into(),
                json!({
                    "beta": num(&b.beta),
                    "lambda": [b.lambda.x.to_string(), b.lambda.y.to_string()],
                    "value": num(&b.futaki),
                }),
            );
        }
        if let Some((bound, r)) = &self.oracle {
            obj.insert(
                "oracle".into(),
                json!({
                    "bound": bound,
                    "value": num(&r.value),
                    "witness": [r.witness.x.to_string(), r.witness.y.to_string()],
                }),
            );
        }
        doc
    }

    /// Rows for the human-readable table.
    fn rows(&self, view: View) -> Vec<(String, String)> {
        let t = &self.threshold;
        let r = |label: &str, v: &Rational| {
            (
                label.to_string(),
                format!("{v}  (~{})", decimal(v, DECIMAL_DIGITS)),
            )
        };
        let mut rows = vec![
            ("polytope".to_string(), self.polytope.clone()),
            (
                "vertices".to_string(),
                self.vertices
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" "),
            ),
            ("m".to_string(), self.m.to_string()),
            ("support size".to_string(), self.support.len().to_string()),
            (
                "excluded".to_string(),
                if self.excluded.is_empty() {
                    "none".to_string()
                } else {
                    self.excluded
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                },
            ),
            ("barycenter".to_string(), self.barycenter.to_string()),
            r("volume", &self.volume),
            r("R(M)", &self.r_of_m),
            (
                "Q".to_string(),
                self.q_point.as_ref().map_or(
                    "undefined (barycenter at origin)".to_string(),
                    ToString::to_string,
                ),
            ),
        ];
        if view == View::Invariant {
            rows.retain(|(k, _)| !matches!(k.as_str(), "m" | "support size" | "excluded"));
            return rows;
        }
        rows.extend([
            r("r_bar", &t.r_bar),
            r("l_bar", &t.l_bar),
            ("feasible set".to_string(), t.interval.to_string()),
            (
                "witness".to_string(),
                format!("{}  {}", t.witness, t.witness_interval),
            ),
            (
                "Q in P_D".to_string(),
                t.sharp_at_r.map_or("n/a".to_string(), |b| b.to_string()),
            ),
        ]);
        if let Some(s) = &self.lambda {
            let (ns, ni) = s.line.normalized();
            rows.push(("lambda".to_string(), s.lambda.to_string()));
            rows.push(("W(lambda)".to_string(), s.line.w_value.to_string()));
            rows.push(("<P_c, lambda>".to_string(), s.line.c_value.to_string()));
            rows.push((
                "F(beta)".to_string(),
                format!("({})·beta + ({})", s.line.slope, s.line.intercept),
            ));
            rows.push(("F(beta)/Vol".to_string(), format!("({ns})·beta + ({ni})")));
            rows.push(("F < 0 for beta in".to_string(), s.interval.to_string()));
        }
        if let Some(b) = &self.beta {
            rows.push(r(&format!("F({}) at {}", b.beta, b.lambda), &b.futaki));
        }
        if let Some((bound, o)) = &self.oracle {
            rows.push(r(&format!("oracle (bound {bound})"), &o.value));
            rows.push(("oracle witness".to_string(), o.witness.to_string()));
        }
        for w in &self.warnings {
            rows.push(("warning".to_string(), w.clone()));
        }
        rows
    }

    pub fn to_table(&self, view: View) -> String {
        render_table(&self.rows(view))
    }
}

pub(crate) fn render_table(rows: &[(String, String)]) -> String {
    let width = rows
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let pad = width - k.chars().count();
        writeln!(out, "{k}{}  {v}", " ".repeat(pad)).unwrap();
    }
    out
}
