use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::rational::{int, is_integer, Rational};

/// A point (or vector) of the plane with exact rational coordinates.
///
/// The derived ordering is lexicographic: `x` first, then `y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatPoint {
    pub x: Rational,
    pub y: Rational,
}

impl RatPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(int(x), int(y))
    }

    pub fn origin() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        is_integer(&self.x) && is_integer(&self.y)
    }

    /// Euclidean pairing, identifying the plane with its dual.
    pub fn dot(&self, other: &RatPoint) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    /// z-component of the cross product.
    pub fn cross(&self, other: &RatPoint) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn scale(&self, k: &Rational) -> RatPoint {
        RatPoint::new(&self.x * k, &self.y * k)
    }

    /// Clockwise quarter turn, `(x, y) -> (y, -x)`. For an edge vector of a
    /// counterclockwise polygon this points outward.
    pub fn rotate_cw(&self) -> RatPoint {
        RatPoint::new(self.y.clone(), -&self.x)
    }

    pub fn abs_max(&self) -> Rational {
        let (ax, ay) = (self.x.abs(), self.y.abs());
        if ax > ay {
            ax
        } else {
            ay
        }
    }
}

/// Orientation of `c` relative to the directed line `a -> b`, as twice the
/// signed triangle area.
pub(crate) fn orient(a: &RatPoint, b: &RatPoint, c: &RatPoint) -> Rational {
    (b - a).cross(&(c - a))
}

impl fmt::Display for RatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl<'a> Add<&'a RatPoint> for &'a RatPoint {
    type Output = RatPoint;
    fn add(self, rhs: &'a RatPoint) -> RatPoint {
        RatPoint::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl<'a> Sub<&'a RatPoint> for &'a RatPoint {
    type Output = RatPoint;
    fn sub(self, rhs: &'a RatPoint) -> RatPoint {
        RatPoint::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Add for RatPoint {
    type Output = RatPoint;
    fn add(self, rhs: RatPoint) -> RatPoint {
        &self + &rhs
    }
}

impl Sub for RatPoint {
    type Output = RatPoint;
    fn sub(self, rhs: RatPoint) -> RatPoint {
        &self - &rhs
    }
}

impl Neg for &RatPoint {
    type Output = RatPoint;
    fn neg(self) -> RatPoint {
        RatPoint::new(-&self.x, -&self.y)
    }
}

impl Neg for RatPoint {
    type Output = RatPoint;
    fn neg(self) -> RatPoint {
        -&self
    }
}

impl Mul<&Rational> for &RatPoint {
    type Output = RatPoint;
    fn mul(self, k: &Rational) -> RatPoint {
        self.scale(k)
    }
}
