//! The toric log-Futaki invariant of a product test-configuration and the
//! cone angles it allows.
//!
//! For a one-parameter subgroup `λ`, a divisor support `S` with weight
//! polygon `P_D` and cone-angle parameter `β`,
//!
//! ```text
//! F(β) = -[β <P_c, λ> + (1 - β) W(λ)] Vol(P),     W(λ) = max_{p ∈ P_D} <p, λ>
//! ```
//!
//! and log K-stability along `λ` requires `F(β) < 0`.

mod oracle;
mod threshold;

pub use oracle::{brute_force_threshold, OracleResult};
pub use threshold::{q_membership, q_point, r_invariant, stability_threshold, ThresholdReport};

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{support_value, RatPoint, Rational};
use crate::toric::{DivisorSupport, ToricFano};

/// `F(β) = slope·β + intercept`, with the ingredients it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FutakiLine {
    pub slope: Rational,
    pub intercept: Rational,
    pub volume: Rational,
    /// `W(λ)`, the support value of the divisor's weight polygon.
    pub w_value: Rational,
    /// `<P_c, λ>`.
    pub c_value: Rational,
}

impl FutakiLine {
    pub fn new(w_value: Rational, c_value: Rational, volume: Rational) -> Self {
        let slope = (&w_value - &c_value) * &volume;
        let intercept = -(&w_value * &volume);
        Self {
            slope,
            intercept,
            volume,
            w_value,
            c_value,
        }
    }

    pub fn eval(&self, beta: &Rational) -> Rational {
        &self.slope * beta + &self.intercept
    }

    /// `(slope, intercept)` of `F / Vol(P)`.
    pub fn normalized(&self) -> (Rational, Rational) {
        (&self.slope / &self.volume, &self.intercept / &self.volume)
    }

    /// Solution set of `F(β) < 0` within `(0, 1]`.
    pub fn interval(&self) -> BetaInterval {
        let w = &self.w_value;
        let gap = w - &self.c_value;
        let one = Rational::one();
        if gap.is_zero() {
            return if w.is_positive() {
                BetaInterval::full()
            } else {
                BetaInterval::empty()
            };
        }
        let root = w / &gap;
        if gap.is_positive() {
            // β < root
            if !root.is_positive() {
                BetaInterval::empty()
            } else if root > one {
                BetaInterval::full()
            } else {
                BetaInterval::below(root)
            }
        } else if root >= one {
            // β > root
            BetaInterval::empty()
        } else if !root.is_positive() {
            BetaInterval::full()
        } else {
            BetaInterval::above(root)
        }
    }
}

impl fmt::Display for FutakiLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F(b) = ({})·b + ({})", self.slope, self.intercept)
    }
}

/// A set of cone-angle parameters of the form `{β : lower < β < upper}` or
/// `{β : lower < β ≤ upper}`, with `0 ≤ lower` and `upper ≤ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaInterval {
    pub lower: Rational,
    pub upper: Rational,
    pub upper_closed: bool,
    pub empty: bool,
}

impl BetaInterval {
    /// `(0, 1]`
    pub fn full() -> Self {
        Self {
            lower: Rational::zero(),
            upper: Rational::one(),
            upper_closed: true,
            empty: false,
        }
    }

    /// Represented with both endpoints at zero.
    pub fn empty() -> Self {
        Self {
            lower: Rational::zero(),
            upper: Rational::zero(),
            upper_closed: false,
            empty: true,
        }
    }

    fn below(upper: Rational) -> Self {
        Self {
            lower: Rational::zero(),
            upper,
            upper_closed: false,
            empty: false,
        }
    }

    fn above(lower: Rational) -> Self {
        Self {
            lower,
            upper: Rational::one(),
            upper_closed: true,
            empty: false,
        }
    }

    pub fn contains(&self, beta: &Rational) -> bool {
        !self.empty
            && *beta > self.lower
            && (*beta < self.upper || (self.upper_closed && *beta == self.upper))
    }

    pub fn intersect(&self, other: &BetaInterval) -> BetaInterval {
        if self.empty || other.empty {
            return BetaInterval::empty();
        }
        let lower = (&self.lower).max(&other.lower).clone();
        let (upper, upper_closed) = match self.upper.cmp(&other.upper) {
            std::cmp::Ordering::Less => (self.upper.clone(), self.upper_closed),
            std::cmp::Ordering::Greater => (other.upper.clone(), other.upper_closed),
            std::cmp::Ordering::Equal => {
                (self.upper.clone(), self.upper_closed && other.upper_closed)
            }
        };
        if lower >= upper {
            return BetaInterval::empty();
        }
        BetaInterval {
            lower,
            upper,
            upper_closed,
            empty: false,
        }
    }
}

impl fmt::Display for BetaInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.empty {
            return f.write_str("{}");
        }
        let close = if self.upper_closed { ']' } else { ')' };
        write!(f, "({}, {}{close}", self.lower, self.upper)
    }
}

fn check_lambda(lambda: &RatPoint) -> Result<()> {
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    if !lambda.is_integral() {
        return Err(Error::NotIntegral(lambda.clone()));
    }
    Ok(())
}

pub fn futaki_line(
    fano: &ToricFano,
    support: &DivisorSupport,
    lambda: &RatPoint,
) -> Result<FutakiLine> {
    check_lambda(lambda)?;
    let w_value = support_value(support.points(), lambda)?;
    let c_value = fano.barycenter().dot(lambda);
    Ok(FutakiLine::new(w_value, c_value, fano.volume()))
}

pub fn log_futaki(
    fano: &ToricFano,
    support: &DivisorSupport,
    beta: &Rational,
    lambda: &RatPoint,
) -> Result<Rational> {
    if beta.is_negative() || *beta > Rational::one() {
        return Err(Error::BetaOutOfRange(beta.to_string()));
    }
    Ok(futaki_line(fano, support, lambda)?.eval(beta))
}

pub fn beta_interval(
    fano: &ToricFano,
    support: &DivisorSupport,
    lambda: &RatPoint,
) -> Result<BetaInterval> {
    Ok(futaki_line(fano, support, lambda)?.interval())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, rat};
    use crate::toric::lookup;

    fn p(x: i64, y: i64) -> RatPoint {
        RatPoint::from_ints(x, y)
    }

    fn minus_vertex(name: &str) -> (ToricFano, DivisorSupport) {
        let fano = lookup(name).unwrap().fano;
        let d = DivisorSupport::excluding(&fano, 1, &[p(-1, 0)]).unwrap();
        (fano, d)
    }

    #[test]
    fn bl1_line_matches_displayed_formula() {
        let (fano, d) = minus_vertex("BL1");
        let line = futaki_line(&fano, &d, &p(-2, -1)).unwrap();
        // -[(-3/12) b + (1 - b)] = (15/12) b - 1
        assert_eq!(line.normalized(), (rat(15, 12), int(-1)));
        assert_eq!(line.volume, int(4));
    }

    #[test]
    fn bl2_line_matches_displayed_formula() {
        let (fano, d) = minus_vertex("BL2");
        let line = futaki_line(&fano, &d, &p(-2, -1)).unwrap();
        // -[(-6/21) b + (1 - b)] = (27/21) b - 1
        assert_eq!(line.normalized(), (rat(27, 21), int(-1)));
    }

    #[test]
    fn pluri_line_matches_displayed_formula() {
        let entry = lookup("BL1").unwrap();
        for m in 1..=6i64 {
            let d = DivisorSupport::edge_run(&entry.fano, m as u32, &p(-1, 0), &p(0, -1)).unwrap();
            let line = futaki_line(&entry.fano, &d, &p(-m - 1, -m)).unwrap();
            // -[((-2m-1)/12) b + m (1 - b)]
            let expected = (int(m) + rat(2 * m + 1, 12), int(-m));
            assert_eq!(line.normalized(), expected, "m = {m}");
        }
    }

    #[test]
    fn log_futaki_values() {
        let (fano, d) = minus_vertex("BL1");
        let lambda = p(-2, -1);
        assert_eq!(log_futaki(&fano, &d, &rat(4, 5), &lambda).unwrap(), int(0));
        assert_eq!(log_futaki(&fano, &d, &int(0), &lambda).unwrap(), int(-4));
        let a = log_futaki(&fano, &d, &rat(1, 3), &p(0, 1)).unwrap();
        let b = log_futaki(&fano, &d, &rat(1, 3), &p(0, 2)).unwrap();
        assert_eq!(b, a * int(2));
    }

    #[test]
    fn argument_errors() {
        let (fano, d) = minus_vertex("BL1");
        assert_eq!(futaki_line(&fano, &d, &p(0, 0)), Err(Error::ZeroLambda));
        assert!(matches!(
            futaki_line(&fano, &d, &RatPoint::new(rat(1, 2), int(0))),
            Err(Error::NotIntegral(_))
        ));
        assert!(matches!(
            log_futaki(&fano, &d, &rat(3, 2), &p(1, 0)),
            Err(Error::BetaOutOfRange(_))
        ));
        assert!(log_futaki(&fano, &d, &rat(-1, 2), &p(1, 0)).is_err());
    }

    #[test]
    fn intervals() {
        let (fano, d) = minus_vertex("BL1");
        let i = beta_interval(&fano, &d, &p(-2, -1)).unwrap();
        assert_eq!(i, BetaInterval::below(rat(4, 5)));
        assert!(i.contains(&rat(79, 100)) && !i.contains(&rat(4, 5)));

        let generic = DivisorSupport::generic(&fano, 1).unwrap();
        assert_eq!(
            beta_interval(&fano, &generic, &p(1, 1)).unwrap(),
            BetaInterval::full()
        );

        let (fano2, d2) = minus_vertex("BL2");
        assert_eq!(
            beta_interval(&fano2, &d2, &p(-2, -1)).unwrap(),
            BetaInterval::below(rat(7, 9))
        );
    }

    #[test]
    fn interval_case_table() {
        let v = int(1);
        let line = |w: Rational, c: Rational| FutakiLine::new(w, c, v.clone()).interval();
        // W - c > 0
        assert_eq!(line(int(1), rat(-1, 4)), BetaInterval::below(rat(4, 5)));
        assert_eq!(line(int(1), rat(1, 6)), BetaInterval::full());
        assert_eq!(line(int(1), int(0)), BetaInterval::below(int(1)));
        assert_eq!(line(int(0), int(-1)), BetaInterval::empty());
        assert_eq!(line(int(-1), int(-3)), BetaInterval::empty());
        // W - c < 0
        assert_eq!(line(int(1), int(2)), BetaInterval::full());
        assert_eq!(line(int(-1), int(1)), BetaInterval::above(rat(1, 2)));
        assert_eq!(line(int(-2), int(-1)), BetaInterval::empty());
        assert_eq!(line(int(0), int(1)), BetaInterval::full());
        // W = c
        assert_eq!(line(int(1), int(1)), BetaInterval::full());
        assert_eq!(line(int(0), int(0)), BetaInterval::empty());
        assert_eq!(line(int(-1), int(-1)), BetaInterval::empty());
    }

    #[test]
    fn interval_intersection() {
        let a = BetaInterval::below(rat(4, 5));
        let b = BetaInterval::above(rat(1, 2));
        let ab = a.intersect(&b);
        assert_eq!(
            ab,
            BetaInterval {
                lower: rat(1, 2),
                upper: rat(4, 5),
                upper_closed: false,
                empty: false
            }
        );
        assert!(BetaInterval::above(rat(4, 5)).intersect(&a).empty);
        assert_eq!(
            BetaInterval::full().intersect(&BetaInterval::below(int(1))),
            BetaInterval::below(int(1))
        );
        assert!(BetaInterval::full().intersect(&BetaInterval::empty()).empty);
        assert_eq!(a.to_string(), "(0, 4/5)");
        assert_eq!(BetaInterval::full().to_string(), "(0, 1]");
    }
}
