use super::ToricFano;
use crate::geometry::RatPoint;

/// A named reflexive polygon.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub fano: ToricFano,
    pub notes: &'static str,
    /// Vertex whose torus-fixed point the built-in special divisors pass
    /// through, followed by its counterclockwise neighbour.
    pub marked_vertex: RatPoint,
}

impl CatalogEntry {
    /// The vertex after `marked_vertex` in counterclockwise order.
    pub fn marked_edge_end(&self) -> RatPoint {
        let vs = self.fano.vertices();
        let i = vs
            .iter()
            .position(|v| *v == self.marked_vertex)
            .expect("marked vertex");
        vs[(i + 1) % vs.len()].clone()
    }
}

type Spec = (
    &'static str,
    &'static [(i64, i64)],
    (i64, i64),
    &'static str,
);

const ENTRIES: [Spec; 5] = [
    (
        "P2",
        &[(1, 0), (0, 1), (-1, -1)],
        (-1, -1),
        "projective plane",
    ),
    (
        "P1xP1",
        &[(1, 1), (-1, 1), (-1, -1), (1, -1)],
        (-1, -1),
        "product of two projective lines",
    ),
    (
        "BL1",
        &[(0, -1), (-1, 0), (-1, 2), (2, -1)],
        (-1, 0),
        "blowup of P2 in one point",
    ),
    (
        "BL2",
        &[(0, -1), (-1, 0), (-1, 1), (1, 1), (1, -1)],
        (-1, 0),
        "blowup of P2 in two points",
    ),
    (
        "BL3",
        &[(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (-1, -1)],
        (-1, 0),
        "blowup of P2 in three points",
    ),
];

/// The five smooth toric del Pezzo surfaces.
pub fn catalog() -> Vec<CatalogEntry> {
    ENTRIES
        .iter()
        .map(|&(name, coords, (mx, my), notes)| CatalogEntry {
            name,
            fano: ToricFano::from_ints(coords).expect("catalog polygons are reflexive"),
            notes,
            marked_vertex: RatPoint::from_ints(mx, my),
        })
        .collect()
}

pub fn lookup(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}
