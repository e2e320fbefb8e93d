use num_traits::{One, Zero};

use super::{beta_interval, BetaInterval};
use crate::error::{Error, Result};
use crate::geometry::{primitive, Hull, RatPoint, Rational};
use crate::toric::{DivisorSupport, ToricFano};

/// Best cone-angle bound obtainable from toric product test-configurations.
///
/// `r_bar` is an upper bound for the supremum of admissible cone angles of
/// the divisor, not that supremum itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdReport {
    /// Supremum of the feasible set, or 0 when it is empty.
    pub r_bar: Rational,
    /// Infimum of the feasible set, or 0 when it is empty.
    pub l_bar: Rational,
    /// Intersection of the per-subgroup intervals over all subgroups.
    pub interval: BetaInterval,
    /// Primitive subgroup with the smallest upper endpoint, lexicographically
    /// first among ties.
    pub witness: RatPoint,
    pub witness_interval: BetaInterval,
    pub r_of_m: Rational,
    pub q_point: Option<RatPoint>,
    /// Whether `Q` lies in the weight polygon; `None` when the barycenter is
    /// the origin and `Q` is undefined.
    pub sharp_at_r: Option<bool>,
    /// Every subgroup that was evaluated, with its interval.
    pub candidates: Vec<(RatPoint, BetaInterval)>,
}

impl ThresholdReport {
    pub fn feasible(&self) -> bool {
        !self.interval.empty
    }
}

/// Subgroups that cut out the intersection of all per-subgroup intervals.
///
/// For fixed `β < 1`, `F(β) < 0` for every `λ` exactly when the origin lies
/// in the interior of `(1 - β) P_D + β P_c`, that is when
/// `-β/(1 - β) · P_c` is interior to `P_D`. Interior points of a polygon are
/// cut out by its edge inequalities, so the outer edge normals of `P_D`
/// suffice. A hull with empty interior lies on a line `<n, x> = h`, and the
/// pair `n, -n` already forces the empty set. `β = 1` is never feasible: the
/// edge normals positively span the plane, so some `<P_c, n>` is `≤ 0`.
fn candidate_subgroups(hull: &Hull) -> Vec<RatPoint> {
    let mut out = match hull {
        Hull::Polygon(pd) => pd.edge_outer_normals(),
        Hull::Segment(a, b) => {
            let dir = primitive(&(b - a));
            let normal = dir.rotate_cw();
            vec![-&normal, normal, -&dir, dir]
        }
        Hull::Point(_) => vec![
            RatPoint::from_ints(1, 0),
            RatPoint::from_ints(-1, 0),
            RatPoint::from_ints(0, 1),
            RatPoint::from_ints(0, -1),
        ],
    };
    out.sort();
    out.dedup();
    out
}

pub fn stability_threshold(fano: &ToricFano, support: &DivisorSupport) -> Result<ThresholdReport> {
    let candidates = candidate_subgroups(support.hull())
        .into_iter()
        .map(|lambda| beta_interval(fano, support, &lambda).map(|i| (lambda, i)))
        .collect::<Result<Vec<_>>>()?;

    let interval = candidates
        .iter()
        .fold(BetaInterval::full(), |acc, (_, i)| acc.intersect(i));
    // Candidates are sorted, so min_by keeps the lexicographically first tie.
    let (witness, witness_interval) = candidates
        .iter()
        .min_by(|(_, a), (_, b)| a.upper.cmp(&b.upper))
        .cloned()
        .expect("at least one candidate");
    let (r_bar, l_bar) = if interval.empty {
        (Rational::zero(), Rational::zero())
    } else {
        (interval.upper.clone(), interval.lower.clone())
    };

    let r_of_m = r_invariant(fano)?;
    let q = if fano.barycenter().is_zero() {
        None
    } else {
        Some(q_point(fano)?)
    };
    let sharp_at_r = q.as_ref().map(|q| support.hull().contains(q).is_inside());

    Ok(ThresholdReport {
        r_bar,
        l_bar,
        interval,
        witness,
        witness_interval,
        r_of_m,
        q_point: q,
        sharp_at_r,
        candidates,
    })
}

/// `R(M) = |OQ| / |P_c Q|`, where `Q` is where the ray from the barycenter
/// through the origin leaves the polygon. Equal to 1 when the barycenter is
/// the origin.
pub fn r_invariant(fano: &ToricFano) -> Result<Rational> {
    let pc = fano.barycenter();
    if pc.is_zero() {
        return Ok(Rational::one());
    }
    let q = q_point(fano)?;
    // q = (1 - t) pc with t > 1
    let ratio = if pc.x.is_zero() {
        &q.y / &pc.y
    } else {
        &q.x / &pc.x
    };
    let t = Rational::one() - ratio;
    Ok((&t - Rational::one()) / t)
}

pub fn q_point(fano: &ToricFano) -> Result<RatPoint> {
    let pc = fano.barycenter();
    if pc.is_zero() {
        return Err(Error::BarycenterAtOrigin);
    }
    fano.polygon().ray_exit(&pc, &-&pc)
}

/// Whether the weight polygon of the support contains `Q`.
pub fn q_membership(fano: &ToricFano, support: &DivisorSupport) -> Result<bool> {
    let q = q_point(fano)?;
    Ok(support.hull().contains(&q).is_inside())
}
