use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::lattice::{primitive, primitive_direction};
use super::point::{orient, RatPoint};
use super::rational::{checked_div, int, Rational};
use crate::error::{Error, Result};

/// Result of a convex hull computation. Hulls with empty interior are kept
/// as their own variants because tiny supports are legal inputs elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hull {
    Point(RatPoint),
    /// Endpoints in lexicographic order.
    Segment(RatPoint, RatPoint),
    Polygon(Polygon),
}

impl Hull {
    /// Extreme points: the vertex list for a polygon, endpoints for a segment.
    pub fn vertices(&self) -> Vec<RatPoint> {
        match self {
            Hull::Point(p) => vec![p.clone()],
            Hull::Segment(a, b) => vec![a.clone(), b.clone()],
            Hull::Polygon(poly) => poly.vertices().to_vec(),
        }
    }

    pub fn as_polygon(&self) -> Option<&Polygon> {
        match self {
            Hull::Polygon(p) => Some(p),
            _ => None,
        }
    }

    pub fn contains(&self, q: &RatPoint) -> Location {
        match self {
            Hull::Point(p) if p == q => Location::Boundary,
            Hull::Point(_) => Location::Outside,
            Hull::Segment(a, b) => {
                let on_line = orient(a, b, q).is_zero();
                let within = (q - a).dot(&(b - a)) >= Rational::zero()
                    && (q - b).dot(&(a - b)) >= Rational::zero();
                if on_line && within {
                    Location::Boundary
                } else {
                    Location::Outside
                }
            }
            Hull::Polygon(poly) => poly.contains(q),
        }
    }
}

/// Position of a point relative to a closed region.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Location {
    Interior,
    Boundary,
    Outside,
}

impl Location {
    pub fn is_inside(self) -> bool {
        self != Location::Outside
    }
}

/// Andrew's monotone chain. Collinear points on the boundary are dropped.
pub fn convex_hull(points: &[RatPoint]) -> Result<Hull> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let mut sorted = points.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() == 1 {
        return Ok(Hull::Point(sorted.swap_remove(0)));
    }

    let zero = Rational::zero();
    let mut lower: Vec<RatPoint> = Vec::with_capacity(sorted.len());
    for p in &sorted {
        while lower.len() >= 2
            && orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= zero
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<RatPoint> = Vec::with_capacity(sorted.len());
    for p in sorted.iter().rev() {
        while upper.len() >= 2
            && orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= zero
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);

    match lower.len() {
        // All input points were collinear: the chains are the two endpoints.
        2 => {
            let b = lower.pop().unwrap();
            let a = lower.pop().unwrap();
            Ok(Hull::Segment(a.clone().min(b.clone()), a.max(b)))
        }
        _ => Ok(Hull::Polygon(Polygon { vertices: lower })),
    }
}

/// `max` of the pairing `<p, lambda>` over a finite point set. The same value
/// is obtained on the convex hull of the set.
pub fn support_value(points: &[RatPoint], lambda: &RatPoint) -> Result<Rational> {
    points
        .iter()
        .map(|p| p.dot(lambda))
        .max()
        .ok_or(Error::EmptyPointSet)
}

/// Strictly convex polygon with a counterclockwise vertex list.
///
/// The vertex list is stored starting from the lexicographically smallest
/// vertex, so derived equality is geometric equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polygon {
    vertices: Vec<RatPoint>,
}

impl Polygon {
    /// Validates a counterclockwise, strictly convex vertex list.
    pub fn new(vertices: Vec<RatPoint>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidPolygon("fewer than 3 vertices"));
        }
        let n = vertices.len();
        let zero = Rational::zero();
        for i in 0..n {
            let turn = orient(&vertices[i], &vertices[(i + 1) % n], &vertices[(i + 2) % n]);
            if turn < zero {
                return Err(Error::InvalidPolygon("not counterclockwise convex"));
            }
            if turn == zero {
                return Err(Error::InvalidPolygon(
                    "repeated or collinear consecutive vertices",
                ));
            }
        }
        // Local left turns everywhere still admit star polygons that wind twice.
        match convex_hull(&vertices)? {
            Hull::Polygon(hull) if hull.vertices.len() == n => {
                let mut canonical = vertices;
                let start = (0..n)
                    .min_by(|&a, &b| canonical[a].cmp(&canonical[b]))
                    .unwrap();
                canonical.rotate_left(start);
                if canonical != hull.vertices {
                    return Err(Error::InvalidPolygon("vertex list winds more than once"));
                }
                Ok(hull)
            }
            _ => Err(Error::InvalidPolygon("vertex list winds more than once")),
        }
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|&(x, y)| RatPoint::from_ints(x, y))
                .collect(),
        )
    }

    pub fn vertices(&self) -> &[RatPoint] {
        &self.vertices
    }

    /// Directed edges `(v_i, v_{i+1})` in counterclockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (&RatPoint, &RatPoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(RatPoint::is_integral)
    }

    /// Shoelace area.
    pub fn area(&self) -> Rational {
        let twice: Rational = self.edges().map(|(a, b)| a.cross(b)).sum();
        twice / int(2)
    }

    /// Area centroid from a fan triangulation at vertex 0.
    pub fn centroid(&self) -> RatPoint {
        let v0 = &self.vertices[0];
        let mut weighted = RatPoint::origin();
        let mut total = Rational::zero();
        for pair in self.vertices[1..].windows(2) {
            let twice_area = orient(v0, &pair[0], &pair[1]);
            let sum = &(v0 + &pair[0]) + &pair[1];
            weighted = &weighted + &sum.scale(&twice_area);
            total += twice_area;
        }
        // sum / 3 is the triangle centroid; the factor 1/2 of the area cancels.
        weighted.scale(&(int(1) / (total * int(3))))
    }

    pub fn contains(&self, q: &RatPoint) -> Location {
        let zero = Rational::zero();
        let mut on_edge = false;
        for (a, b) in self.edges() {
            let side = orient(a, b, q);
            if side < zero {
                return Location::Outside;
            }
            on_edge |= side == zero;
        }
        if on_edge {
            Location::Boundary
        } else {
            Location::Interior
        }
    }

    /// First boundary point hit by the ray `from + t * dir`, `t > 0`.
    pub fn ray_exit(&self, from: &RatPoint, dir: &RatPoint) -> Result<RatPoint> {
        if dir.is_zero() {
            return Err(Error::ZeroDirection);
        }
        if self.contains(from) != Location::Interior {
            return Err(Error::NotInterior(from.clone()));
        }
        let zero = Rational::zero();
        let mut best: Option<Rational> = None;
        for (a, b) in self.edges() {
            let normal = (b - a).rotate_cw();
            let speed = normal.dot(dir);
            if speed <= zero {
                continue;
            }
            let t = checked_div(&(normal.dot(a) - normal.dot(from)), &speed)?;
            if best.as_ref().is_none_or(|s| t < *s) {
                best = Some(t);
            }
        }
        // A bounded polygon always has an edge facing any direction.
        let t = best.expect("bounded polygon has an edge facing every direction");
        Ok(from + &dir.scale(&t))
    }

    /// Primitive integer outward normal of each edge, in counterclockwise
    /// edge order.
    pub fn edge_outer_normals(&self) -> Vec<RatPoint> {
        self.edges()
            .map(|(a, b)| primitive(&(b - a).rotate_cw()))
            .collect()
    }

    /// All points of `P ∩ (1/m)Z²` in original coordinates, sorted.
    pub fn scaled_lattice_points(&self, m: u32) -> Result<Vec<RatPoint>> {
        if m == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        let scale = Rational::from_integer(BigInt::from(m));
        let bound = |f: fn(&RatPoint) -> &Rational| {
            let lo = self.vertices.iter().map(f).min().unwrap() * &scale;
            let hi = self.vertices.iter().map(f).max().unwrap() * &scale;
            let lo = lo
                .ceil()
                .to_integer()
                .to_i64()
                .expect("coordinate range fits in i64");
            let hi = hi
                .floor()
                .to_integer()
                .to_i64()
                .expect("coordinate range fits in i64");
            (lo, hi)
        };
        let (x_lo, x_hi) = bound(|p| &p.x);
        let (y_lo, y_hi) = bound(|p| &p.y);
        // Edge half-planes <n, q> <= h become <n, (i, j)> <= floor(m h) on the
        // scaled integer grid, with n primitive.
        let half_planes: Vec<(i64, i64, i64)> = self
            .edges()
            .zip(self.edge_outer_normals())
            .map(|((a, _), n)| {
                let h = (n.dot(a) * &scale).floor().to_integer();
                let c = |r: &Rational| r.to_integer().to_i64().expect("normal fits in i64");
                (c(&n.x), c(&n.y), h.to_i64().expect("offset fits in i64"))
            })
            .collect();
        let mut out = Vec::new();
        for i in x_lo..=x_hi {
            for j in y_lo..=y_hi {
                if half_planes.iter().all(|&(nx, ny, h)| nx * i + ny * j <= h) {
                    out.push(RatPoint::new(int(i) / &scale, int(j) / &scale));
                }
            }
        }
        Ok(out)
    }

    /// Number of lattice points on the boundary. Only meaningful for lattice
    /// polygons.
    pub fn boundary_lattice_count(&self) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (a, b) in self.edges() {
            let (_, len) = primitive_direction(&(b - a))?;
            total += len;
        }
        Ok(total)
    }

    /// Polygon with every vertex replaced by `f(v)`. Works for any map that
    /// preserves convexity; orientation is repaired if `f` reverses it.
    pub fn map(&self, f: impl Fn(&RatPoint) -> RatPoint) -> Polygon {
        let image: Vec<RatPoint> = self.vertices.iter().map(f).collect();
        match convex_hull(&image).expect("non-empty") {
            Hull::Polygon(p) => p,
            _ => panic!("map collapsed the polygon"),
        }
    }
}
