use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::point::RatPoint;
use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Primitive integer vector positively proportional to a non-zero rational
/// vector. The zero vector maps to itself.
pub fn primitive(v: &RatPoint) -> RatPoint {
    if v.is_zero() {
        return v.clone();
    }
    let denom = v.x.denom().lcm(v.y.denom());
    let x = v.x.numer() * (&denom / v.x.denom());
    let y = v.y.numer() * (&denom / v.y.denom());
    let g = x.gcd(&y);
    RatPoint::new(
        Rational::from_integer(x / &g),
        Rational::from_integer(y / &g),
    )
}

/// Splits an integer vector into its primitive direction and lattice length.
pub(crate) fn primitive_direction(v: &RatPoint) -> Result<(RatPoint, BigInt)> {
    if !v.is_integral() {
        return Err(Error::NotIntegral(v.clone()));
    }
    let g = v.x.numer().gcd(v.y.numer());
    if g.is_zero() {
        return Ok((v.clone(), g));
    }
    let k = Rational::from_integer(g.clone());
    Ok((RatPoint::new(&v.x / &k, &v.y / &k), g))
}

/// An element of GL(2, Z), acting on column vectors:
/// `(x, y) -> (a x + b y, c x + d y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Unimodular {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Unimodular {
    pub const IDENTITY: Unimodular = Unimodular {
        a: 1,
        b: 0,
        c: 0,
        d: 1,
    };

    /// Returns `None` unless the determinant is ±1.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Option<Self> {
        let det = a * d - b * c;
        (det.abs() == 1).then_some(Self { a, b, c, d })
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn apply(&self, p: &RatPoint) -> RatPoint {
        RatPoint::new(
            int(self.a) * &p.x + int(self.b) * &p.y,
            int(self.c) * &p.x + int(self.d) * &p.y,
        )
    }

    pub fn compose(&self, rhs: &Unimodular) -> Unimodular {
        Unimodular {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }

    pub fn inverse(&self) -> Unimodular {
        let det = self.det();
        Unimodular {
            a: self.d * det,
            b: -self.b * det,
            c: -self.c * det,
            d: self.a * det,
        }
    }

    pub fn transpose(&self) -> Unimodular {
        Unimodular {
            a: self.a,
            b: self.c,
            c: self.b,
            d: self.d,
        }
    }

    /// The dual action: `<U p, U^{-T} l> = <p, l>`.
    pub fn dual(&self) -> Unimodular {
        self.inverse().transpose()
    }

    pub fn max_abs_entry(&self) -> i64 {
        [self.a, self.b, self.c, self.d]
            .iter()
            .map(|e| e.abs())
            .max()
            .unwrap()
    }
}
