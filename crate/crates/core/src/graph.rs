//! Simple undirected graphs on `[n]`, adjacency stored as bitmasks.

use crate::bits::{self, full_mask, vertex_bit, vertices_of, Vertex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    /// `adj[v-1]` is the neighbor mask of vertex `v`.
    adj: Vec<u64>,
    m: usize,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if n == 0 || n > bits::MAX_VERTICES {
            return Err(Error::parameter(format!(
                "vertex count must be in [1, {}], got {n}",
                bits::MAX_VERTICES
            )));
        }
        let mut g = SimpleGraph {
            n,
            adj: vec![0u64; n],
            m: 0,
        };
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 1..=n as Vertex {
            for v in u + 1..=n as Vertex {
                edges.push((u, v));
            }
        }
        Self::new(n, &edges)
    }

    fn add_edge_checked(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(Error::parameter(format!("loop at vertex {u}")));
        }
        for w in [u, v] {
            if w < 1 || w as usize > self.n {
                return Err(Error::parameter(format!(
                    "vertex {w} outside [1, {}]",
                    self.n
                )));
            }
        }
        if self.has_edge(u, v) {
            return Err(Error::parameter(format!("duplicate edge {{{u},{v}}}")));
        }
        self.adj[(u - 1) as usize] |= vertex_bit(v);
        self.adj[(v - 1) as usize] |= vertex_bit(u);
        self.m += 1;
        Ok(())
    }

    /// Adds an edge, ignoring duplicates. Used by saturation.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        if u != v && !self.has_edge(u, v) {
            self.adj[(u - 1) as usize] |= vertex_bit(v);
            self.adj[(v - 1) as usize] |= vertex_bit(u);
            self.m += 1;
        }
    }

    /// Removes an edge if present.
    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        if self.has_edge(u, v) {
            self.adj[(u - 1) as usize] &= !vertex_bit(v);
            self.adj[(v - 1) as usize] &= !vertex_bit(u);
            self.m -= 1;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[(u - 1) as usize] & vertex_bit(v) != 0
    }

    pub fn neighbors(&self, v: Vertex) -> u64 {
        self.adj[(v - 1) as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).count_ones() as usize
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 1..=self.n as Vertex {
            let mut higher = self.adj[(u - 1) as usize] & !(full_mask(u as usize));
            while higher != 0 {
                let v = higher.trailing_zeros() + 1;
                out.push((u, v));
                higher &= higher - 1;
            }
        }
        out
    }

    /// Edges as 2-element bitmasks in lexicographic order.
    pub fn edge_masks(&self) -> Vec<u64> {
        self.edges()
            .into_iter()
            .map(|(u, v)| vertex_bit(u) | vertex_bit(v))
            .collect()
    }

    /// Non-edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in 1..=self.n as Vertex {
            for v in u + 1..=self.n as Vertex {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Component of `v` within the vertex set `within`, as a mask.
    pub fn component_of(&self, v: Vertex, within: u64) -> u64 {
        let start = vertex_bit(v) & within;
        if start == 0 {
            return 0;
        }
        let mut comp = start;
        loop {
            let mut grown = comp;
            let mut m = comp;
            while m != 0 {
                let u = m.trailing_zeros() + 1;
                grown |= self.adj[(u - 1) as usize] & within;
                m &= m - 1;
            }
            if grown == comp {
                return comp;
            }
            comp = grown;
        }
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let full = full_mask(self.n);
        let mut out = Vec::new();
        for v in 1..=self.n as Vertex {
            if seen & vertex_bit(v) == 0 {
                let comp = self.component_of(v, full);
                seen |= comp;
                out.push(comp);
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Relabels vertices by `perm`, where `perm[v-1]` is the new name of `v`.
    pub fn permuted(&self, perm: &[Vertex]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::parameter("permutation length must equal n".to_string()));
        }
        let edges: Vec<(Vertex, Vertex)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[(u - 1) as usize], perm[(v - 1) as usize]))
            .collect();
        Self::new(self.n, &edges)
    }

    /// Restriction to a vertex mask, relabeled onto `[|mask|]` preserving
    /// vertex order; returns the subgraph and the original vertices.
    pub fn induced(&self, mask: u64) -> (SimpleGraph, Vec<Vertex>) {
        let verts = vertices_of(mask);
        let mut relabel = [0u32; 65];
        for (i, &v) in verts.iter().enumerate() {
            relabel[v as usize] = (i + 1) as u32;
        }
        let mut edges = Vec::new();
        for (u, v) in self.edges() {
            if mask & vertex_bit(u) != 0 && mask & vertex_bit(v) != 0 {
                edges.push((relabel[u as usize], relabel[v as usize]));
            }
        }
        let g = SimpleGraph::new(verts.len().max(1), &edges).expect("induced subgraph is valid");
        (g, verts)
    }

    /// Parses the `.elg` format: first non-comment line `n`, then one
    /// `u v` pair per line; `#` starts a comment.
    pub fn parse_elg(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::parse("missing header line `n`".to_string()))?;
        let n: usize = header
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad vertex count {header:?}")))?;
        let mut edges = Vec::new();
        for line in lines {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(Error::parse(format!("expected `u v`, got {line:?}")));
            }
            let u: Vertex = toks[0]
                .parse()
                .map_err(|_| Error::parse(format!("bad vertex {:?}", toks[0])))?;
            let v: Vertex = toks[1]
                .parse()
                .map_err(|_| Error::parse(format!("bad vertex {:?}", toks[1])))?;
            edges.push((u, v));
        }
        Self::new(n, &edges).map_err(|e| match e {
            Error::Parameter(msg) => Error::InvalidInput(msg),
            other => other,
        })
    }

    pub fn to_elg(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Path graph 1-2-...-n.
pub fn path_graph(n: usize) -> SimpleGraph {
    let edges: Vec<(Vertex, Vertex)> = (1..n as Vertex).map(|u| (u, u + 1)).collect();
    SimpleGraph::new(n, &edges).expect("path graph")
}

/// Cycle graph on n >= 3 vertices.
pub fn cycle_graph(n: usize) -> SimpleGraph {
    assert!(n >= 3);
    let mut edges: Vec<(Vertex, Vertex)> = (1..n as Vertex).map(|u| (u, u + 1)).collect();
    edges.push((1, n as Vertex));
    SimpleGraph::new(n, &edges).expect("cycle graph")
}
