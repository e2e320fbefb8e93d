#![allow(dead_code)]

use logfutaki::geometry::primitive;
use logfutaki::{
    catalog, int, CatalogEntry, DivisorSupport, Hull, RatPoint, Rational, ToricFano, Unimodular,
};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

pub fn p(x: i64, y: i64) -> RatPoint {
    RatPoint::from_ints(x, y)
}

pub fn entry(name: &str) -> CatalogEntry {
    logfutaki::lookup(name).unwrap()
}

const GENERATORS: [Unimodular; 4] = [
    Unimodular {
        a: 0,
        b: -1,
        c: 1,
        d: 0,
    },
    Unimodular {
        a: 1,
        b: 1,
        c: 0,
        d: 1,
    },
    Unimodular {
        a: 1,
        b: -1,
        c: 0,
        d: 1,
    },
    Unimodular {
        a: 1,
        b: 0,
        c: 0,
        d: -1,
    },
];

/// Random element of GL(2, Z) as a short word in the generators.
pub fn unimodular() -> impl Strategy<Value = Unimodular> {
    prop::collection::vec(0..GENERATORS.len(), 0..6).prop_map(|word| {
        word.into_iter()
            .fold(Unimodular::IDENTITY, |acc, g| acc.compose(&GENERATORS[g]))
    })
}

pub fn small_points(max: usize) -> impl Strategy<Value = Vec<RatPoint>> {
    prop::collection::vec((-6i64..=6, -6i64..=6), 1..max)
        .prop_map(|v| v.into_iter().map(|(x, y)| p(x, y)).collect())
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| logfutaki::rat(n, d))
}

/// Catalog entry, multiplicity and a non-empty random subset of its weights.
pub fn catalog_support(max_m: u32) -> impl Strategy<Value = (ToricFano, DivisorSupport)> {
    (0..5usize, 1..=max_m, any::<u64>()).prop_map(|(idx, m, seed)| {
        let fano = catalog()[idx].fano.clone();
        let all = fano.lattice_points(m).unwrap();
        let keep = subset(&all, seed);
        let support = DivisorSupport::new(&fano, m, keep).unwrap();
        (fano, support)
    })
}

/// Pseudo-random non-empty subset driven by a seed (splitmix64).
pub fn subset(points: &[RatPoint], mut seed: u64) -> Vec<RatPoint> {
    let mut out = Vec::new();
    for pt in points {
        seed = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = seed;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        if !z.is_multiple_of(3) {
            out.push(pt.clone());
        }
    }
    if out.is_empty() {
        out.push(points[(seed as usize) % points.len()].clone());
    }
    out
}

/// Feasible cone angles computed without the per-subgroup interval table:
/// `β` is feasible iff `-β/(1-β) · P_c` is interior to `P_D`. Walks the ray
/// `x(t) = -t P_c` through the interior of `P_D` and maps `t` to
/// `β = t / (1 + t)`. Returns `(l_bar, r_bar)` or `None` when infeasible.
pub fn ray_oracle(fano: &ToricFano, support: &DivisorSupport) -> Option<(Rational, Rational)> {
    let pd = match support.hull() {
        Hull::Polygon(pd) => pd,
        _ => return None,
    };
    let pc = fano.barycenter();
    let verts = pd.vertices();
    let n = verts.len();
    let (mut t_lo, mut t_hi): (Rational, Option<Rational>) = (Rational::zero(), None);
    for i in 0..n {
        let (a, b) = (&verts[i], &verts[(i + 1) % n]);
        let e = b - a;
        // cross(e, x(t) - a) > 0  <=>  k * t + h > 0
        let k = -e.cross(&pc);
        let h = -e.cross(a);
        if k.is_zero() {
            if !h.is_positive() {
                return None;
            }
        } else {
            let root = -&h / &k;
            if k.is_positive() {
                if root > t_lo {
                    t_lo = root;
                }
            } else if t_hi.as_ref().is_none_or(|hi| root < *hi) {
                t_hi = Some(root);
            }
        }
    }
    let to_beta = |t: &Rational| t / (Rational::one() + t);
    match t_hi {
        Some(hi) if hi <= t_lo => None,
        Some(hi) => Some((to_beta(&t_lo), to_beta(&hi))),
        // unbounded ray (only when P_c = O, where x(t) = O)
        None => Some((to_beta(&t_lo), int(1))),
    }
}

pub fn lattice_length_one_edge(fano: &ToricFano) -> Option<(RatPoint, RatPoint)> {
    fano.polygon()
        .edges()
        .find(|&(a, b)| primitive(&(b - a)) == b - a)
        .map(|(a, b)| (a.clone(), b.clone()))
}

pub fn abs_bound(points: &[RatPoint]) -> Rational {
    points
        .iter()
        .map(|q| q.x.abs().max(q.y.abs()))
        .max()
        .unwrap()
}
