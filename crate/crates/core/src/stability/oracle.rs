use num_integer::Integer;

use super::beta_interval;
use crate::error::{Error, Result};
use crate::geometry::{RatPoint, Rational};
use crate::toric::{DivisorSupport, ToricFano};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub value: Rational,
    pub witness: RatPoint,
}

/// Exhaustive search: smallest upper endpoint of the per-subgroup interval
/// (0 for an empty interval) over all primitive `λ` with
/// `|λ_1|, |λ_2| ≤ bound`, lexicographically first witness among ties.
pub fn brute_force_threshold(
    fano: &ToricFano,
    support: &DivisorSupport,
    bound: u32,
) -> Result<OracleResult> {
    if bound == 0 {
        return Err(Error::ZeroBound);
    }
    let b = bound as i64;
    let mut best: Option<OracleResult> = None;
    for x in -b..=b {
        for y in -b..=b {
            if x.gcd(&y) != 1 {
                continue;
            }
            let lambda = RatPoint::from_ints(x, y);
            let upper = beta_interval(fano, support, &lambda)?.upper;
            if best.as_ref().is_none_or(|r| upper < r.value) {
                best = Some(OracleResult {
                    value: upper,
                    witness: lambda,
                });
            }
        }
    }
    Ok(best.expect("bound >= 1 yields primitive vectors"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat;
    use crate::toric::lookup;

    #[test]
    fn finds_paper_subgroup() {
        let bl1 = lookup("BL1").unwrap().fano;
        let d = DivisorSupport::excluding(&bl1, 1, &[RatPoint::from_ints(-1, 0)]).unwrap();
        let r = brute_force_threshold(&bl1, &d, 5).unwrap();
        assert_eq!(
            r,
            OracleResult {
                value: rat(4, 5),
                witness: RatPoint::from_ints(-2, -1)
            }
        );

        let g = DivisorSupport::generic(&bl1, 1).unwrap();
        assert_eq!(brute_force_threshold(&bl1, &g, 5).unwrap().value, rat(6, 7));
        assert_eq!(brute_force_threshold(&bl1, &g, 0), Err(Error::ZeroBound));
    }
}
