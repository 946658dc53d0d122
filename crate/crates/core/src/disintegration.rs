//! Iterated low-degree vertex removal and the resulting cores.
//!
//! The alpha-disintegration removes vertices of degree at most alpha until
//! the remainder has minimum degree at least alpha + 1 or is empty; the
//! survivor set (the (alpha+1)-core) does not depend on removal order.

use crate::bits::{vertex_bit, vertices_of, Vertex};
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisintegrationTrace {
    pub alpha: usize,
    /// `(vertex, degree at removal time)` in removal order.
    pub removal_order: Vec<(Vertex, usize)>,
    /// Survivors, as a vertex mask.
    pub core_vertices: u64,
}

impl DisintegrationTrace {
    pub fn core_list(&self) -> Vec<Vertex> {
        vertices_of(self.core_vertices)
    }

    pub fn core_is_empty(&self) -> bool {
        self.core_vertices == 0
    }
}

/// Runs the alpha-disintegration, removing the lowest-id eligible vertex
/// first. The core is order-independent; the trace is deterministic.
pub fn disintegrate(g: &SimpleGraph, alpha: usize) -> DisintegrationTrace {
    disintegrate_with_order(g, alpha, |eligible| eligible.trailing_zeros() + 1)
}

/// Same process with a caller-chosen eligible-vertex picker; used to verify
/// order independence of the core.
pub fn disintegrate_with_order(
    g: &SimpleGraph,
    alpha: usize,
    mut pick: impl FnMut(u64) -> Vertex,
) -> DisintegrationTrace {
    let mut alive = crate::bits::full_mask(g.n());
    let mut removal_order = Vec::new();
    loop {
        let mut eligible = 0u64;
        for v in vertices_of(alive) {
            let deg = (g.neighbors(v) & alive).count_ones() as usize;
            if deg <= alpha {
                eligible |= vertex_bit(v);
            }
        }
        if eligible == 0 {
            break;
        }
        let v = pick(eligible);
        debug_assert!(eligible & vertex_bit(v) != 0);
        let deg = (g.neighbors(v) & alive).count_ones() as usize;
        removal_order.push((v, deg));
        alive &= !vertex_bit(v);
    }
    DisintegrationTrace {
        alpha,
        removal_order,
        core_vertices: alive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_graph;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn five_cycle_disintegrates_at_two() {
        let t = disintegrate(&cycle_graph(5), 2);
        assert!(t.core_is_empty());
        assert_eq!(t.removal_order.len(), 5);
        for &(_, d) in &t.removal_order {
            assert!(d <= 2);
        }
    }

    #[test]
    fn k4_survives_at_two() {
        let t = disintegrate(&SimpleGraph::complete(4).unwrap(), 2);
        assert_eq!(t.core_list(), vec![1, 2, 3, 4]);
        assert!(t.removal_order.is_empty());
    }

    #[test]
    fn pendant_vertex_is_removed() {
        let mut g = SimpleGraph::complete(4).unwrap();
        let mut edges: Vec<(u32, u32)> = g.edges();
        edges.push((1, 5));
        g = SimpleGraph::new(5, &edges).unwrap();
        let t = disintegrate(&g, 2);
        assert_eq!(t.removal_order, vec![(5, 1)]);
        assert_eq!(t.core_list(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn core_has_min_degree_above_alpha() {
        let g = SimpleGraph::new(
            8,
            &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 7), (7, 4), (4, 6), (5, 7)],
        )
        .unwrap();
        for alpha in 0..4 {
            let t = disintegrate(&g, alpha);
            for v in t.core_list() {
                let deg = (g.neighbors(v) & t.core_vertices).count_ones() as usize;
                assert!(deg >= alpha + 1);
            }
        }
    }

    #[test]
    fn core_is_order_independent() {
        let g = SimpleGraph::new(
            9,
            &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (2, 4), (4, 5), (5, 6), (6, 7), (7, 5), (8, 9)],
        )
        .unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for alpha in 0..4 {
            let reference = disintegrate(&g, alpha).core_vertices;
            for _ in 0..100 {
                let t = disintegrate_with_order(&g, alpha, |elig| {
                    let vs = vertices_of(elig);
                    *vs.choose(&mut rng).unwrap()
                });
                assert_eq!(t.core_vertices, reference);
            }
        }
    }
}
