//! Exact maximum clique by branch and bound with a greedy colouring bound.

use std::sync::atomic::{AtomicUsize, Ordering};

use super::{CommGraph, Vertex};
use crate::exec::Execution;

/// Greedy sequential colouring of `cand` (in the given order). Returns the
/// candidates reordered by colour class together with the running colour
/// count, which bounds the clique size inside every prefix.
fn colour_sort(g: &CommGraph, cand: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in cand {
        match classes.iter_mut().find(|class| class.iter().all(|&u| !g.adjacent_idx(u, v))) {
            Some(class) => class.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(cand.len());
    let mut bounds = Vec::with_capacity(cand.len());
    for (k, class) in classes.into_iter().enumerate() {
        for v in class {
            order.push(v);
            bounds.push(k + 1);
        }
    }
    (order, bounds)
}

struct Search<'a> {
    g: &'a CommGraph,
    best: &'a AtomicUsize,
    current: Vec<usize>,
    found: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, cand: Vec<usize>) {
        let (order, bounds) = colour_sort(self.g, &cand);
        for k in (0..order.len()).rev() {
            if self.current.len() + bounds[k] <= self.best.load(Ordering::Relaxed) {
                return;
            }
            let v = order[k];
            self.current.push(v);
            let next: Vec<usize> = order[..k].iter().copied().filter(|&u| self.g.adjacent_idx(u, v)).collect();
            if next.is_empty() {
                if self.best.fetch_max(self.current.len(), Ordering::Relaxed) < self.current.len() {
                    self.found = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
        }
    }
}

/// Best clique containing `root` among `root` and later vertices.
fn search_root(g: &CommGraph, root: usize, best: &AtomicUsize) -> Vec<usize> {
    let cand: Vec<usize> = g.neighbors_idx(root).filter(|&u| u > root).collect();
    let mut search = Search { g, best, current: vec![root], found: Vec::new() };
    if cand.is_empty() {
        if best.fetch_max(1, Ordering::Relaxed) < 1 {
            search.found = vec![root];
        }
    } else {
        search.expand(cand);
    }
    search.found
}

/// Clique number ω(Γ), each root branch searched as an independent task.
pub fn clique_number_with(g: &CommGraph, exec: Execution) -> usize {
    let best = AtomicUsize::new(0);
    exec.map_range(0..g.vertex_count(), |root| search_root(g, root, &best));
    best.load(Ordering::Relaxed)
}

pub fn clique_number(g: &CommGraph) -> usize {
    clique_number_with(g, Execution::default())
}

/// A maximum clique, the first in root order, so the answer does not depend
/// on scheduling.
pub fn maximum_clique_with(g: &CommGraph, exec: Execution) -> Vec<Vertex> {
    let omega = clique_number_with(g, exec);
    for root in 0..g.vertex_count() {
        // only cliques strictly larger than omega - 1 are recorded
        let bound = AtomicUsize::new(omega.saturating_sub(1));
        let found = search_root(g, root, &bound);
        if found.len() == omega {
            let mut clique: Vec<Vertex> = found.into_iter().map(|k| g.vertices()[k]).collect();
            clique.sort();
            return clique;
        }
    }
    Vec::new()
}

pub fn maximum_clique(g: &CommGraph) -> Vec<Vertex> {
    maximum_clique_with(g, Execution::default())
}

pub fn is_clique(g: &CommGraph, vertices: &[Vertex]) -> bool {
    vertices.iter().enumerate().all(|(k, a)| {
        g.index_of(a).is_some() && vertices[k + 1..].iter().all(|b| g.index_of(b).is_some() && g.adjacent(a, b))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::raag::build_graph;
    use crate::words::Params;

    fn graph(n: usize, c: usize) -> CommGraph {
        build_graph(Params::new(n, c).unwrap()).unwrap()
    }

    /// Independent oracle: largest set of pairwise adjacent vertices by
    /// exhaustive subset growth over sorted vertex lists.
    fn brute_force_omega(g: &CommGraph) -> usize {
        fn grow(g: &CommGraph, clique: &mut Vec<usize>, from: usize, best: &mut usize) {
            *best = (*best).max(clique.len());
            for v in from..g.vertex_count() {
                if clique.iter().all(|&u| g.adjacent_idx(u, v)) {
                    clique.push(v);
                    grow(g, clique, v + 1, best);
                    clique.pop();
                }
            }
        }
        let mut best = 0;
        grow(g, &mut Vec::new(), 0, &mut best);
        best
    }

    #[test]
    fn examples() {
        assert_eq!(clique_number(&graph(5, 1)), 2);
        assert_eq!(clique_number(&graph(5, 3)), 2);
        assert_eq!(clique_number(&graph(2, 1)), 1);
        assert_eq!(clique_number(&graph(8, 1)), 4);
    }

    #[test]
    fn agrees_with_brute_force() {
        for n in 2..=6 {
            for c in 1..=2 {
                let g = graph(n, c);
                assert_eq!(clique_number(&g), brute_force_omega(&g), "n={n} c={c}");
            }
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        for n in 2..=7 {
            let g = graph(n, 2);
            assert_eq!(clique_number_with(&g, Execution::Sequential), clique_number_with(&g, Execution::Parallel));
            assert_eq!(maximum_clique_with(&g, Execution::Sequential), maximum_clique_with(&g, Execution::Parallel));
        }
    }

    #[test]
    fn witness_is_a_clique_of_the_right_size() {
        for n in 2..=8 {
            let g = graph(n, 2);
            let clique = maximum_clique(&g);
            assert_eq!(clique.len(), clique_number(&g));
            assert!(is_clique(&g, &clique));
        }
        assert_eq!(maximum_clique(&graph(4, 1))[0], Vertex::new(1, 2, 1));
    }
}
