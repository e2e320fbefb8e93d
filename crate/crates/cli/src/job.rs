//! Job files: which polytope, which divisor support, and what to compute.
//!
//! ```json
//! {
//!   "polytope": "BL1",                       // or [[0,-1],[-1,0],[-1,2],[2,-1]]
//!   "support": {"exclude": [["-1", "0"]]},    // or "generic", or {"edge_run": {"v": [-1,0], "w": [0,-1]}}
//!   "m": 1,
//!   "lambda": [-2, -1],
//!   "beta": "4/5",
//!   "oracle_bound": 25
//! }
//! ```
//!
//! Rationals are strings `"p/q"` or bare integers.

use logfutaki::geometry::parse_rational;
use logfutaki::{lookup, DivisorSupport, RatPoint, Rational, ToricFano};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolytopeSource {
    Catalog(String),
    Vertices(Vec<(i64, i64)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SupportSpec {
    Generic,
    Exclude(Vec<RatPoint>),
    EdgeRun { v: RatPoint, w: RatPoint },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub polytope: PolytopeSource,
    pub support: SupportSpec,
    pub m: u32,
    pub lambda: Option<(i64, i64)>,
    pub beta: Option<Rational>,
    pub oracle_bound: Option<u32>,
}

impl JobSpec {
    pub fn new(polytope: PolytopeSource, support: SupportSpec) -> Self {
        Self {
            polytope,
            support,
            m: 1,
            lambda: None,
            beta: None,
            oracle_bound: None,
        }
    }

    pub fn polytope_label(&self) -> String {
        match &self.polytope {
            PolytopeSource::Catalog(name) => name.clone(),
            PolytopeSource::Vertices(_) => "custom".to_string(),
        }
    }

    pub fn fano(&self) -> Result<ToricFano, CliError> {
        match &self.polytope {
            PolytopeSource::Catalog(name) => lookup(name)
                .map(|e| e.fano)
                .ok_or_else(|| CliError::input(format!("polytope: unknown catalog name {name:?}"))),
            PolytopeSource::Vertices(coords) => {
                ToricFano::from_ints(coords).map_err(CliError::engine("polytope"))
            }
        }
    }

    pub fn divisor(&self, fano: &ToricFano) -> Result<DivisorSupport, CliError> {
        let built = match &self.support {
            SupportSpec::Generic => DivisorSupport::generic(fano, self.m),
            SupportSpec::Exclude(points) => DivisorSupport::excluding(fano, self.m, points),
            SupportSpec::EdgeRun { v, w } => DivisorSupport::edge_run(fano, self.m, v, w),
        };
        built.map_err(CliError::engine("support"))
    }

    /// Job-file form; [`parse_job`] reads it back to an equal value.
    pub fn to_json(&self) -> Value {
        let point = |p: &RatPoint| json!([p.x.to_string(), p.y.to_string()]);
        let polytope = match &self.polytope {
            PolytopeSource::Catalog(name) => json!(name),
            PolytopeSource::Vertices(vs) => {
                json!(vs.iter().map(|&(x, y)| [x, y]).collect::<Vec<_>>())
            }
        };
        let support = match &self.support {
            SupportSpec::Generic => json!("generic"),
            SupportSpec::Exclude(pts) => {
                json!({"exclude": pts.iter().map(point).collect::<Vec<_>>()})
            }
            SupportSpec::EdgeRun { v, w } => json!({"edge_run": {"v": point(v), "w": point(w)}}),
        };
        let mut doc = json!({"polytope": polytope, "support": support, "m": self.m});
        let obj = doc.as_object_mut().unwrap();
        if let Some((a, b)) = self.lambda {
            obj.insert("lambda".into(), json!([a, b]));
        }
        if let Some(beta) = &self.beta {
            obj.insert("beta".into(), json!(beta.to_string()));
        }
        if let Some(bound) = self.oracle_bound {
            obj.insert("oracle_bound".into(), json!(bound));
        }
        doc
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawJob {
    polytope: RawPolytope,
    #[serde(default)]
    support: Option<RawSupport>,
    #[serde(default)]
    m: Option<u32>,
    #[serde(default)]
    lambda: Option<[i64; 2]>,
    #[serde(default)]
    beta: Option<RawScalar>,
    #[serde(default)]
    oracle_bound: Option<u32>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawPolytope {
    Name(String),
    Vertices(Vec<[i64; 2]>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawSupport {
    Keyword(String),
    Tagged(RawSupportTagged),
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum RawSupportTagged {
    Exclude(Vec<[RawScalar; 2]>),
    EdgeRun(RawEdge),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEdge {
    v: [RawScalar; 2],
    w: [RawScalar; 2],
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawScalar {
    Int(i64),
    Text(String),
}

fn scalar(raw: &RawScalar, field: &str) -> Result<Rational, CliError> {
    match raw {
        RawScalar::Int(n) => Ok(logfutaki::int(*n)),
        RawScalar::Text(s) => {
            parse_rational(s).map_err(|e| CliError::input(format!("{field}: {e}")))
        }
    }
}

fn point(raw: &[RawScalar; 2], field: &str) -> Result<RatPoint, CliError> {
    Ok(RatPoint::new(
        scalar(&raw[0], &format!("{field}[0]"))?,
        scalar(&raw[1], &format!("{field}[1]"))?,
    ))
}

pub fn parse_job(text: &str) -> Result<JobSpec, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: RawJob = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if path == "." {
            CliError::input(format!("job: {inner}"))
        } else {
            CliError::input(format!("job field `{path}`: {inner}"))
        }
    })?;

    let polytope = match raw.polytope {
        RawPolytope::Name(name) => {
            if lookup(&name).is_none() {
                return Err(CliError::input(format!(
                    "polytope: unknown catalog name {name:?}"
                )));
            }
            PolytopeSource::Catalog(name)
        }
        RawPolytope::Vertices(vs) => {
            if vs.is_empty() {
                return Err(CliError::input("polytope: empty vertex list"));
            }
            PolytopeSource::Vertices(vs.into_iter().map(|[x, y]| (x, y)).collect())
        }
    };

    let support = match raw.support {
        None => SupportSpec::Generic,
        Some(RawSupport::Keyword(k)) if k == "generic" => SupportSpec::Generic,
        Some(RawSupport::Keyword(k)) => {
            return Err(CliError::input(format!(
                "support: unknown keyword {k:?}, expected \"generic\", {{\"exclude\": ...}} or {{\"edge_run\": ...}}"
            )))
        }
        Some(RawSupport::Tagged(RawSupportTagged::Exclude(points))) => SupportSpec::Exclude(
            points
                .iter()
                .enumerate()
                .map(|(i, p)| point(p, &format!("support.exclude[{i}]")))
                .collect::<Result<_, _>>()?,
        ),
        Some(RawSupport::Tagged(RawSupportTagged::EdgeRun(edge))) => SupportSpec::EdgeRun {
            v: point(&edge.v, "support.edge_run.v")?,
            w: point(&edge.w, "support.edge_run.w")?,
        },
    };

    let m = raw.m.unwrap_or(1);
    if m == 0 {
        return Err(CliError::input("m: must be a positive integer"));
    }
    if raw.oracle_bound == Some(0) {
        return Err(CliError::input("oracle_bound: must be a positive integer"));
    }
    let lambda = raw.lambda.map(|[a, b]| (a, b));
    if lambda == Some((0, 0)) {
        return Err(CliError::input("lambda: must be non-zero"));
    }
    let beta = raw.beta.as_ref().map(|b| scalar(b, "beta")).transpose()?;

    Ok(JobSpec {
        polytope,
        support,
        m,
        lambda,
        beta,
        oracle_bound: raw.oracle_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use logfutaki::rat;

    #[test]
    fn minus_vertex_job() {
        let job = parse_job(r#"{"polytope":"BL1","support":{"exclude":[["-1","0"]]}}"#).unwrap();
        assert_eq!(job.polytope, PolytopeSource::Catalog("BL1".into()));
        assert_eq!(
            job.support,
            SupportSpec::Exclude(vec![RatPoint::from_ints(-1, 0)])
        );
        assert_eq!(job.m, 1);
    }

    #[test]
    fn generic_job() {
        let job = parse_job(r#"{"polytope":"BL1","support":"generic","m":1}"#).unwrap();
        assert_eq!(
            job,
            JobSpec::new(PolytopeSource::Catalog("BL1".into()), SupportSpec::Generic)
        );
    }

    #[test]
    fn explicit_vertices_edge_run_job() {
        let text = r#"{"polytope":[[0,-1],[-1,0],[-1,2],[2,-1]],
                       "support":{"edge_run":{"v":[-1,0],"w":[0,-1]}}, "m":3}"#;
        let job = parse_job(text).unwrap();
        assert_eq!(
            job.polytope,
            PolytopeSource::Vertices(vec![(0, -1), (-1, 0), (-1, 2), (2, -1)])
        );
        assert_eq!(
            job.support,
            SupportSpec::EdgeRun {
                v: RatPoint::from_ints(-1, 0),
                w: RatPoint::from_ints(0, -1)
            }
        );
        assert_eq!(job.m, 3);
    }

    #[test]
    fn optional_fields() {
        let job =
            parse_job(r#"{"polytope":"BL2","lambda":[-2,-1],"beta":"7/9","oracle_bound":10}"#)
                .unwrap();
        assert_eq!(job.lambda, Some((-2, -1)));
        assert_eq!(job.beta, Some(rat(7, 9)));
        assert_eq!(job.oracle_bound, Some(10));
        assert_eq!(job.support, SupportSpec::Generic);
    }

    #[test]
    fn diagnostics() {
        let err = |t: &str| parse_job(t).unwrap_err().to_string();
        assert!(err(r#"{"polytope":"dP9"}"#).contains("unknown catalog name"));
        assert!(
            err(r#"{"polytope":"BL1","support":{"exclude":[["1/0","0"]]}}"#)
                .contains("support.exclude[0][0]")
        );
        assert!(
            err(r#"{"polytope":"BL1","support":{"exclude":[["x","0"]]}}"#)
                .contains("malformed rational")
        );
        assert!(err(r#"{"polytope":"BL1","colour":"red"}"#).contains("unknown field"));
        assert!(err(r#"{"polytope":"BL1","m":-2}"#).contains("`m`"));
        assert!(err(r#"{"polytope":"BL1","m":0}"#).contains("m: must be"));
        assert!(err(r#"{"polytope":"BL1","support":"special"}"#).contains("unknown keyword"));
        assert!(err("{\n\"polytope\": \"BL1\",\n\"lambda\": [1]\n}").contains("line 3"));
        assert!(matches!(parse_job("not json"), Err(CliError::Input(_))));
    }

    #[test]
    fn serializes_back() {
        let mut job = JobSpec::new(
            PolytopeSource::Vertices(vec![(1, 0), (0, 1), (-1, -1)]),
            SupportSpec::Exclude(vec![RatPoint::new(rat(-1, 2), rat(1, 3))]),
        );
        job.beta = Some(rat(3, 7));
        job.lambda = Some((4, -1));
        let text = job.to_json().to_string();
        assert_eq!(parse_job(&text).unwrap(), job);
    }
}
