//! Block decomposition: maximal 2-connected subgraphs and bridges, found by
//! the standard DFS lowpoint algorithm with an edge stack.

use crate::bits::{vertex_bit, vertices_of, Vertex};
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: u64,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl Block {
    pub fn vertex_count(&self) -> usize {
        self.vertices.count_ones() as usize
    }

    pub fn vertex_list(&self) -> Vec<Vertex> {
        vertices_of(self.vertices)
    }
}

#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: u64,
    /// For each cut vertex, the indices of the blocks containing it.
    pub attachments: Vec<(Vertex, Vec<usize>)>,
}

impl BlockDecomposition {
    pub fn cut_vertex_list(&self) -> Vec<Vertex> {
        vertices_of(self.cut_vertices)
    }

    /// The block containing both endpoints of an edge, if any.
    pub fn block_of_edge(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let m = vertex_bit(u) | vertex_bit(v);
        self.blocks.iter().position(|b| b.vertices & m == m)
    }
}

/// Computes the unique decomposition into 2-connected blocks and bridges.
/// Isolated vertices belong to no block; every edge lies in exactly one.
pub fn blocks(g: &SimpleGraph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![0usize; n + 1];
    let mut low = vec![0usize; n + 1];
    let mut parent = vec![0u32; n + 1];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut out: Vec<Block> = Vec::new();
    let mut cut = 0u64;

    // Iterative DFS; n <= 64 keeps all structures tiny.
    let mut rem = vec![0u64; n + 1];
    for root in 1..=n as Vertex {
        if disc[root as usize] != 0 {
            continue;
        }
        timer += 1;
        disc[root as usize] = timer;
        low[root as usize] = timer;
        rem[root as usize] = g.neighbors(root);
        let mut root_children = 0usize;
        let mut stack: Vec<Vertex> = vec![root];
        while let Some(&u) = stack.last() {
            if rem[u as usize] == 0 {
                stack.pop();
                if let Some(&p) = stack.last() {
                    low[p as usize] = low[p as usize].min(low[u as usize]);
                    if low[u as usize] >= disc[p as usize] {
                        // p separates the subtree at u: pop one block.
                        let mut block_edges = Vec::new();
                        while let Some(&(a, b)) = edge_stack.last() {
                            if disc[a as usize] >= disc[u as usize] {
                                block_edges.push((a.min(b), a.max(b)));
                                edge_stack.pop();
                            } else {
                                break;
                            }
                        }
                        // The tree edge (p, u) itself.
                        if edge_stack.last() == Some(&(p, u)) {
                            block_edges.push((p.min(u), p.max(u)));
                            edge_stack.pop();
                        }
                        if !block_edges.is_empty() {
                            let mut vs = 0u64;
                            for &(a, b) in &block_edges {
                                vs |= vertex_bit(a) | vertex_bit(b);
                            }
                            block_edges.sort();
                            out.push(Block {
                                vertices: vs,
                                edges: block_edges,
                            });
                        }
                        if p == root {
                            root_children += 1;
                        } else {
                            cut |= vertex_bit(p);
                        }
                    }
                }
                continue;
            }
            let v = rem[u as usize].trailing_zeros() + 1;
            rem[u as usize] &= rem[u as usize] - 1;
            if disc[v as usize] == 0 {
                parent[v as usize] = u;
                timer += 1;
                disc[v as usize] = timer;
                low[v as usize] = timer;
                rem[v as usize] = g.neighbors(v);
                edge_stack.push((u, v));
                stack.push(v);
            } else if v != parent[u as usize] && disc[v as usize] < disc[u as usize] {
                // back edge
                edge_stack.push((u, v));
                low[u as usize] = low[u as usize].min(disc[v as usize]);
            }
        }
        if root_children >= 2 {
            cut |= vertex_bit(root);
        }
    }

    // Deterministic block order: by sorted vertex list.
    out.sort_by(|a, b| vertices_of(a.vertices).cmp(&vertices_of(b.vertices)));

    let mut attachments = Vec::new();
    for v in vertices_of(cut) {
        let ids: Vec<usize> = out
            .iter()
            .enumerate()
            .filter(|(_, b)| b.vertices & vertex_bit(v) != 0)
            .map(|(i, _)| i)
            .collect();
        attachments.push((v, ids));
    }

    BlockDecomposition {
        blocks: out,
        cut_vertices: cut,
        attachments,
    }
}

/// True iff `g` is 2-connected: connected, n >= 3, and no cut vertex.
pub fn is_two_connected(g: &SimpleGraph) -> bool {
    if g.n() < 3 || !g.is_connected() {
        return false;
    }
    blocks(g).cut_vertices == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::mask_of;
    use crate::graph::{cycle_graph, path_graph};

    #[test]
    fn path_splits_into_bridge_blocks() {
        let d = blocks(&path_graph(3));
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.blocks[0].edges, vec![(1, 2)]);
        assert_eq!(d.blocks[1].edges, vec![(2, 3)]);
        assert_eq!(d.cut_vertex_list(), vec![2]);
    }

    #[test]
    fn two_cliques_sharing_a_vertex() {
        // K_5 on {1..5} and K_5 on {5..9} share vertex 5.
        let mut edges = Vec::new();
        for u in 1..=5u32 {
            for v in u + 1..=5 {
                edges.push((u, v));
            }
        }
        for u in 5..=9u32 {
            for v in u + 1..=9 {
                edges.push((u, v));
            }
        }
        let g = SimpleGraph::new(9, &edges).unwrap();
        let d = blocks(&g);
        assert_eq!(d.blocks.len(), 2);
        assert!(d.blocks.iter().all(|b| b.vertex_count() == 5));
        assert_eq!(d.cut_vertex_list(), vec![5]);
        assert_eq!(d.blocks[0].vertices, mask_of(&[1, 2, 3, 4, 5]));
        assert_eq!(d.blocks[1].vertices, mask_of(&[5, 6, 7, 8, 9]));
    }

    #[test]
    fn complete_graph_is_one_block() {
        let d = blocks(&SimpleGraph::complete(4).unwrap());
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices == 0);
        assert_eq!(d.blocks[0].edges.len(), 6);
    }

    #[test]
    fn edges_partition_and_size_identity() {
        // Random-ish mix: cycle + pendant + isolated vertex.
        let g = SimpleGraph::new(7, &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 4)])
            .unwrap();
        let d = blocks(&g);
        let total_edges: usize = d.blocks.iter().map(|b| b.edges.len()).sum();
        assert_eq!(total_edges, g.edge_count());
        // Every edge appears in exactly one block.
        for (u, v) in g.edges() {
            let cnt = d
                .blocks
                .iter()
                .filter(|b| b.edges.contains(&(u.min(v), u.max(v))))
                .count();
            assert_eq!(cnt, 1);
        }
        // Sum (n_i - 1) <= n - 1, strict here because vertex 7 is isolated.
        let s: usize = d.blocks.iter().map(|b| b.vertex_count() - 1).sum();
        assert!(s < g.n() - 1);

        let connected = cycle_graph(5);
        let dc = blocks(&connected);
        let sc: usize = dc.blocks.iter().map(|b| b.vertex_count() - 1).sum();
        assert_eq!(sc, connected.n() - 1);
    }

    #[test]
    fn two_connectivity() {
        assert!(is_two_connected(&cycle_graph(4)));
        assert!(!is_two_connected(&path_graph(4)));
        assert!(!is_two_connected(&SimpleGraph::new(2, &[(1, 2)]).unwrap()));
    }
}
