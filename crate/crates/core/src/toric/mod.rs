//! Toric Fano surfaces as reflexive lattice polygons, and divisors modeled
//! by the support of their defining section.

mod catalog;

pub use catalog::{catalog, lookup, CatalogEntry};

use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::geometry::{convex_hull, int, primitive, Hull, Location, Polygon, RatPoint, Rational};

/// A reflexive lattice polygon together with its lattice points, which index
/// the torus-weight sections of the anticanonical bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricFano {
    polygon: Polygon,
    weights: Vec<RatPoint>,
}

impl ToricFano {
    /// Builds the polygon as the convex hull of `points` and validates it.
    pub fn new(points: &[RatPoint]) -> Result<Self> {
        if let Some(bad) = points.iter().find(|p| !p.is_integral()) {
            return Err(Error::NotIntegral(bad.clone()));
        }
        let polygon = match convex_hull(points)? {
            Hull::Polygon(p) => p,
            _ => return Err(Error::DegenerateHull),
        };
        if polygon.contains(&RatPoint::origin()) != Location::Interior {
            return Err(Error::OriginNotInterior);
        }
        for ((from, to), normal) in polygon.edges().zip(polygon.edge_outer_normals()) {
            if normal.dot(from) != int(1) {
                return Err(Error::NotReflexive {
                    from: from.clone(),
                    to: to.clone(),
                });
            }
        }
        let weights = polygon.scaled_lattice_points(1)?;
        Ok(Self { polygon, weights })
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self> {
        let points: Vec<RatPoint> = coords
            .iter()
            .map(|&(x, y)| RatPoint::from_ints(x, y))
            .collect();
        Self::new(&points)
    }

    pub fn polygon(&self) -> &Polygon {
        &self.polygon
    }

    pub fn vertices(&self) -> &[RatPoint] {
        self.polygon.vertices()
    }

    /// Lattice points of the polygon, sorted.
    pub fn weights(&self) -> &[RatPoint] {
        &self.weights
    }

    pub fn barycenter(&self) -> RatPoint {
        self.polygon.centroid()
    }

    pub fn volume(&self) -> Rational {
        self.polygon.area()
    }

    /// Weights of sections of the `m`-th power: `P ∩ (1/m)Z²`.
    pub fn lattice_points(&self, m: u32) -> Result<Vec<RatPoint>> {
        if m == 1 {
            return Ok(self.weights.clone());
        }
        self.polygon.scaled_lattice_points(m)
    }

    /// The two neighbours of vertex `v` in counterclockwise order
    /// `(previous, next)`.
    fn neighbours(&self, v: &RatPoint) -> Option<(&RatPoint, &RatPoint)> {
        let vs = self.vertices();
        let n = vs.len();
        let i = vs.iter().position(|u| u == v)?;
        Some((&vs[(i + n - 1) % n], &vs[(i + 1) % n]))
    }

    /// Applies a lattice automorphism. The result is again reflexive.
    pub fn transform(&self, u: &crate::geometry::Unimodular) -> ToricFano {
        let image: Vec<RatPoint> = self.vertices().iter().map(|v| u.apply(v)).collect();
        ToricFano::new(&image).expect("unimodular image of a reflexive polygon is reflexive")
    }
}

/// Combinatorial condition that fails for a support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SupportWarning {
    /// Every section vanishes at the fixed point of `vertex`, and neither of
    /// the first points along its two edges is in the support, so the
    /// general member of the linear system is singular there.
    SingularAtVertex {
        vertex: RatPoint,
        missing: [RatPoint; 2],
    },
}

impl fmt::Display for SupportWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SupportWarning::SingularAtVertex { vertex, missing } => write!(
                f,
                "vertex {vertex} is excluded and neither {} nor {} is in the support",
                missing[0], missing[1]
            ),
        }
    }
}

/// Multiplicity `m` and the set of weights in `P ∩ (1/m)Z²` whose
/// coefficients are non-zero. Only the zero pattern of a divisor enters the
/// log-Futaki invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorSupport {
    m: u32,
    points: Vec<RatPoint>,
    hull: Hull,
    warnings: Vec<SupportWarning>,
}

impl DivisorSupport {
    /// Support given explicitly. Every point must be a weight of the `m`-th
    /// power.
    pub fn new(
        fano: &ToricFano,
        m: u32,
        points: impl IntoIterator<Item = RatPoint>,
    ) -> Result<Self> {
        let allowed: BTreeSet<RatPoint> = fano.lattice_points(m)?.into_iter().collect();
        let points: BTreeSet<RatPoint> = points.into_iter().collect();
        if let Some(bad) = points.iter().find(|p| !allowed.contains(*p)) {
            return Err(Error::NotALatticePoint(bad.clone()));
        }
        if points.is_empty() {
            return Err(Error::EmptySupport);
        }
        let points: Vec<RatPoint> = points.into_iter().collect();
        let hull = convex_hull(&points)?;
        let warnings = smoothness_warnings(fano, m, &points);
        Ok(Self {
            m,
            points,
            hull,
            warnings,
        })
    }

    /// All coefficients non-zero, so the hull is the whole polygon.
    pub fn generic(fano: &ToricFano, m: u32) -> Result<Self> {
        Self::new(fano, m, fano.lattice_points(m)?)
    }

    /// All weights except `excluded`.
    pub fn excluding(fano: &ToricFano, m: u32, excluded: &[RatPoint]) -> Result<Self> {
        let all = fano.lattice_points(m)?;
        if let Some(bad) = excluded.iter().find(|p| all.binary_search(p).is_err()) {
            return Err(Error::NotALatticePoint(bad.clone()));
        }
        let keep: Vec<RatPoint> = all.into_iter().filter(|p| !excluded.contains(p)).collect();
        Self::new(fano, m, keep)
    }

    /// Excludes the `m` weights `v + (k/m)(w - v)`, `k = 0..m`, along an
    /// edge `[v, w]` of lattice length one: every section vanishes at the
    /// fixed point of `v` to order `m` along the curve of that edge.
    pub fn edge_run(fano: &ToricFano, m: u32, v: &RatPoint, w: &RatPoint) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        let adjacent = fano
            .neighbours(v)
            .is_some_and(|(prev, next)| prev == w || next == w);
        if !adjacent {
            return Err(Error::NotAnEdge(v.clone(), w.clone()));
        }
        let delta = w - v;
        let step = primitive(&delta);
        if step != delta {
            let length = if step.x != int(0) {
                &delta.x / &step.x
            } else {
                &delta.y / &step.y
            };
            return Err(Error::EdgeLatticeLength(
                v.clone(),
                w.clone(),
                length.to_string(),
            ));
        }
        let m_rat = int(m as i64);
        let run: Vec<RatPoint> = (0..m as i64)
            .map(|k| v + &delta.scale(&(int(k) / &m_rat)))
            .collect();
        Self::excluding(fano, m, &run)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Support points, sorted.
    pub fn points(&self) -> &[RatPoint] {
        &self.points
    }

    /// The weight polygon `P_D` (possibly degenerate).
    pub fn hull(&self) -> &Hull {
        &self.hull
    }

    pub fn warnings(&self) -> &[SupportWarning] {
        &self.warnings
    }

    pub fn contains(&self, p: &RatPoint) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn is_subset_of(&self, other: &DivisorSupport) -> bool {
        self.m == other.m && self.points.iter().all(|p| other.contains(p))
    }

    /// Image under a lattice automorphism, with the image polygon.
    pub fn transform(
        &self,
        fano: &ToricFano,
        u: &crate::geometry::Unimodular,
    ) -> Result<(ToricFano, DivisorSupport)> {
        let image = fano.transform(u);
        let points: Vec<RatPoint> = self.points.iter().map(|p| u.apply(p)).collect();
        let support = DivisorSupport::new(&image, self.m, points)?;
        Ok((image, support))
    }
}

fn smoothness_warnings(fano: &ToricFano, m: u32, points: &[RatPoint]) -> Vec<SupportWarning> {
    let step = Rational::one() / int(m as i64);
    let in_support = |p: &RatPoint| points.binary_search(p).is_ok();
    let mut warnings = Vec::new();
    for v in fano.vertices() {
        if in_support(v) {
            continue;
        }
        let (prev, next) = fano.neighbours(v).expect("vertex of the polygon");
        let toward = |u: &RatPoint| v + &primitive(&(u - v)).scale(&step);
        let missing = [toward(prev), toward(next)];
        if !missing.iter().any(in_support) {
            warnings.push(SupportWarning::SingularAtVertex {
                vertex: v.clone(),
                missing,
            });
        }
    }
    warnings
}
