use serde::Serialize;

use super::{CommGraph, Vertex};

/// An induced path `a – b – c` with `a ≁ c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct P3Witness(pub Vertex, pub Vertex, pub Vertex);

/// Four vertices spanning an induced square: `x1 ≁ x2`, `y1 ≁ y2`, and every
/// `x` adjacent to every `y`. The pairs generate `F2 × F2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct F2xF2 {
    pub x1: Vertex,
    pub x2: Vertex,
    pub y1: Vertex,
    pub y2: Vertex,
}

/// Returns `(true, None)` when no induced path on three vertices exists,
/// otherwise the first witness in lexicographic order of `(a, b, c)`.
pub fn is_p3_free(g: &CommGraph) -> (bool, Option<P3Witness>) {
    let vs = g.vertices();
    for a in 0..vs.len() {
        for b in g.neighbors_idx(a) {
            for c in g.neighbors_idx(b) {
                if c != a && !g.adjacent_idx(a, c) {
                    return (false, Some(P3Witness(vs[a], vs[b], vs[c])));
                }
            }
        }
    }
    (true, None)
}

impl P3Witness {
    pub fn is_valid(&self, g: &CommGraph) -> bool {
        let P3Witness(a, b, c) = self;
        [a, b, c].iter().all(|v| g.index_of(v).is_some())
            && a != c
            && g.adjacent(a, b)
            && g.adjacent(b, c)
            && !g.adjacent(a, c)
    }
}

/// The six adjacency conditions of an induced square.
pub fn is_f2xf2_pattern(g: &CommGraph, q: &F2xF2) -> bool {
    let all = [q.x1, q.x2, q.y1, q.y2];
    if all.iter().any(|v| g.index_of(v).is_none()) {
        return false;
    }
    q.x1 != q.x2
        && q.y1 != q.y2
        && !g.adjacent(&q.x1, &q.x2)
        && !g.adjacent(&q.y1, &q.y2)
        && g.adjacent(&q.x1, &q.y1)
        && g.adjacent(&q.x1, &q.y2)
        && g.adjacent(&q.x2, &q.y1)
        && g.adjacent(&q.x2, &q.y2)
}

/// First induced square in lexicographic search order, if any.
pub fn f2xf2_witness(g: &CommGraph) -> Option<F2xF2> {
    let vs = g.vertices();
    let n = vs.len();
    for x1 in 0..n {
        for x2 in x1 + 1..n {
            if g.adjacent_idx(x1, x2) {
                continue;
            }
            let common: Vec<usize> = g.neighbors_idx(x1).filter(|&y| g.adjacent_idx(x2, y)).collect();
            for (k, &y1) in common.iter().enumerate() {
                if let Some(&y2) = common[k + 1..].iter().find(|&&y2| !g.adjacent_idx(y1, y2)) {
                    return Some(F2xF2 { x1: vs[x1], x2: vs[x2], y1: vs[y1], y2: vs[y2] });
                }
            }
        }
    }
    None
}

/// Vertices adjacent to every other vertex; they generate the centre of the RAAG.
pub fn dominating_vertices(g: &CommGraph) -> Vec<Vertex> {
    let n = g.vertex_count();
    (0..n).filter(|&a| (0..n).all(|b| b == a || g.adjacent_idx(a, b))).map(|a| g.vertices()[a]).collect()
}
