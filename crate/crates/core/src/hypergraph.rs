//! r-uniform hypergraphs on vertex set `[n] = {1..n}`.
//!
//! Edges are r-element subsets stored as 64-bit masks, kept sorted in
//! lexicographic (sorted vertex list) order with set semantics. Isolated
//! vertices are allowed: `n` may exceed the support of the edge family.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, lex_cmp, mask_of, vertex_bit, vertices_of, RSubsets, Vertex};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// An unordered pair of vertices `u < v`, an element of the 2-shadow or of
/// its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ShadowPair {
    pub u: Vertex,
    pub v: Vertex,
}

impl ShadowPair {
    pub fn new(a: Vertex, b: Vertex) -> Result<Self> {
        if a == b {
            return Err(Error::parameter(format!("pair vertices must differ, got {a} twice")));
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        Ok(ShadowPair { u, v })
    }

    pub fn from_mask(mask: u64) -> Self {
        debug_assert_eq!(mask.count_ones(), 2);
        let vs = vertices_of(mask);
        ShadowPair { u: vs[0], v: vs[1] }
    }

    pub fn mask(&self) -> u64 {
        vertex_bit(self.u) | vertex_bit(self.v)
    }
}

impl fmt::Display for ShadowPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// An r-uniform hypergraph: a family of r-element subsets of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    /// Edge masks, sorted by `lex_cmp`, pairwise distinct.
    edges: Vec<u64>,
}

impl Hypergraph {
    /// Builds a hypergraph from explicit vertex lists. Rejects edges of the
    /// wrong size, vertices outside `[1, n]`, and duplicate edges.
    pub fn new(n: usize, r: usize, edges: &[Vec<Vertex>]) -> Result<Self> {
        if n == 0 || n > bits::MAX_VERTICES {
            return Err(Error::parameter(format!(
                "vertex count must be in [1, {}], got {n}",
                bits::MAX_VERTICES
            )));
        }
        if r < 2 {
            return Err(Error::parameter(format!("uniformity must be at least 2, got {r}")));
        }
        let mut masks = Vec::with_capacity(edges.len());
        for e in edges {
            let mask = mask_of_checked(e, n, r)?;
            masks.push(mask);
        }
        Self::from_masks(n, r, masks)
    }

    /// Builds from edge masks; validates cardinality, range, and distinctness.
    pub fn from_masks(n: usize, r: usize, mut masks: Vec<u64>) -> Result<Self> {
        if n == 0 || n > bits::MAX_VERTICES {
            return Err(Error::parameter(format!(
                "vertex count must be in [1, {}], got {n}",
                bits::MAX_VERTICES
            )));
        }
        if r < 2 {
            return Err(Error::parameter(format!("uniformity must be at least 2, got {r}")));
        }
        let full = bits::full_mask(n);
        for &m in &masks {
            if m.count_ones() as usize != r {
                return Err(Error::parameter(format!(
                    "edge {:?} has {} vertices, expected {r}",
                    vertices_of(m),
                    m.count_ones()
                )));
            }
            if m & !full != 0 {
                return Err(Error::parameter(format!(
                    "edge {:?} leaves the vertex range [1, {n}]",
                    vertices_of(m)
                )));
            }
        }
        masks.sort_by(|a, b| lex_cmp(*a, *b));
        for w in masks.windows(2) {
            if w[0] == w[1] {
                return Err(Error::parameter(format!(
                    "duplicate edge {:?}",
                    vertices_of(w[0])
                )));
            }
        }
        Ok(Hypergraph { n, r, edges: masks })
    }

    /// The complete r-graph `K_w^(r)` on `[w]`.
    pub fn complete(w: usize, r: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::parameter(format!("uniformity must be at least 2, got {r}")));
        }
        if w < r {
            return Err(Error::parameter(format!(
                "complete r-graph needs at least r vertices, got w={w} < r={r}"
            )));
        }
        let masks: Vec<u64> = RSubsets::new(w, r).collect();
        Self::from_masks(w, r, masks)
    }

    pub fn empty(n: usize, r: usize) -> Result<Self> {
        Self::from_masks(n, r, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_masks(&self) -> &[u64] {
        &self.edges
    }

    pub fn edge_vertex_lists(&self) -> Vec<Vec<Vertex>> {
        self.edges.iter().map(|&m| vertices_of(m)).collect()
    }

    pub fn contains_edge(&self, mask: u64) -> bool {
        self.edges.binary_search_by(|e| lex_cmp(*e, mask)).is_ok()
    }

    /// The p-shadow: all p-sets contained in at least one edge, as masks in
    /// lexicographic order.
    pub fn shadow(&self, p: usize) -> Result<Vec<u64>> {
        if p < 1 || p > self.r {
            return Err(Error::parameter(format!(
                "shadow order must satisfy 1 <= p <= r = {}, got {p}",
                self.r
            )));
        }
        let mut out: Vec<u64> = Vec::new();
        for &e in &self.edges {
            for sub in subsets_of_mask(e, p) {
                out.push(sub);
            }
        }
        out.sort_by(|a, b| lex_cmp(*a, *b));
        out.dedup();
        Ok(out)
    }

    /// The 2-shadow as pairs.
    pub fn shadow_pairs(&self) -> Vec<ShadowPair> {
        self.shadow(2)
            .expect("r >= 2 always admits the 2-shadow")
            .into_iter()
            .map(ShadowPair::from_mask)
            .collect()
    }

    /// All pairs of `[n]` not contained in any edge: the complement of the
    /// 2-shadow within the C(n,2) pairs.
    pub fn shadow_complement(&self) -> Vec<ShadowPair> {
        let covered: Vec<u64> = self.shadow(2).expect("2-shadow");
        let mut out = Vec::new();
        for pair in RSubsets::new(self.n, 2) {
            if covered.binary_search_by(|e| lex_cmp(*e, pair)).is_err() {
                out.push(ShadowPair::from_mask(pair));
            }
        }
        out
    }

    /// The 2-shadow as a simple graph on the same vertex set.
    pub fn shadow_graph(&self) -> SimpleGraph {
        let pairs: Vec<(Vertex, Vertex)> = self
            .shadow_pairs()
            .into_iter()
            .map(|p| (p.u, p.v))
            .collect();
        SimpleGraph::new(self.n, &pairs).expect("shadow pairs are valid graph edges")
    }

    /// Vertex degree: number of edges containing `v`.
    pub fn degree(&self, v: Vertex) -> usize {
        let b = vertex_bit(v);
        self.edges.iter().filter(|&&e| e & b != 0).count()
    }

    /// Connected means the 2-shadow graph is connected and spans `[n]`
    /// (an isolated vertex disconnects any hypergraph with n > 1).
    pub fn is_connected(&self) -> bool {
        self.shadow_graph().is_connected()
    }

    /// Relabels vertices by `perm`, where `perm[v-1]` is the new name of `v`.
    pub fn permuted(&self, perm: &[Vertex]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::parameter("permutation length must equal n".to_string()));
        }
        let mut masks = Vec::with_capacity(self.edges.len());
        for &e in &self.edges {
            let mut m = 0u64;
            for v in vertices_of(e) {
                m |= vertex_bit(perm[(v - 1) as usize]);
            }
            masks.push(m);
        }
        Self::from_masks(self.n, self.r, masks)
    }

    /// Restriction to a vertex subset: edges fully contained in `mask`,
    /// relabeled onto `[|mask|]` preserving vertex order. Returns the
    /// restriction and the sorted original vertices.
    pub fn induced(&self, mask: u64) -> (Hypergraph, Vec<Vertex>) {
        let verts = vertices_of(mask);
        let mut relabel = [0u32; 65];
        for (i, &v) in verts.iter().enumerate() {
            relabel[v as usize] = (i + 1) as u32;
        }
        let mut masks = Vec::new();
        for &e in &self.edges {
            if e & !mask == 0 {
                let mut m = 0u64;
                for v in vertices_of(e) {
                    m |= vertex_bit(relabel[v as usize]);
                }
                masks.push(m);
            }
        }
        let sub = Hypergraph::from_masks(verts.len().max(1), self.r, masks)
            .expect("induced subhypergraph is valid");
        (sub, verts)
    }

    /// Parses the `.hyg` text format: first non-comment line `n r`, then one
    /// edge per line as r space-separated vertex ids; `#` starts a comment.
    /// Duplicate edges are an input error.
    pub fn parse_hyg(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::parse("missing header line `n r`".to_string()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .ok_or_else(|| Error::parse("header must be `n r`".to_string()))?
            .parse()
            .map_err(|_| Error::parse(format!("bad vertex count in header {header:?}")))?;
        let r: usize = it
            .next()
            .ok_or_else(|| Error::parse("header must be `n r`".to_string()))?
            .parse()
            .map_err(|_| Error::parse(format!("bad uniformity in header {header:?}")))?;
        if it.next().is_some() {
            return Err(Error::parse(format!("trailing tokens in header {header:?}")));
        }
        let mut edges: Vec<Vec<Vertex>> = Vec::new();
        for line in lines {
            let vs: std::result::Result<Vec<Vertex>, _> =
                line.split_whitespace().map(|t| t.parse::<Vertex>()).collect();
            let vs = vs.map_err(|_| Error::parse(format!("bad edge line {line:?}")))?;
            edges.push(vs);
        }
        let h = Self::new(n, r, &edges).map_err(|e| match e {
            Error::Parameter(msg) => Error::InvalidInput(msg),
            other => other,
        })?;
        if h.edge_count() != edges.len() {
            return Err(Error::invalid("duplicate edges in input".to_string()));
        }
        Ok(h)
    }

    /// Writes the `.hyg` format; edges come out in lexicographic order.
    pub fn to_hyg(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.r);
        for &e in &self.edges {
            let vs: Vec<String> = vertices_of(e).iter().map(|v| v.to_string()).collect();
            out.push_str(&vs.join(" "));
            out.push('\n');
        }
        out
    }
}

fn mask_of_checked(vertices: &[Vertex], n: usize, r: usize) -> Result<u64> {
    if vertices.len() != r {
        return Err(Error::parameter(format!(
            "edge {vertices:?} has {} vertices, expected {r}",
            vertices.len()
        )));
    }
    let mut mask = 0u64;
    for &v in vertices {
        if v < 1 || v as usize > n {
            return Err(Error::parameter(format!(
                "vertex {v} outside [1, {n}] in edge {vertices:?}"
            )));
        }
        let b = vertex_bit(v);
        if mask & b != 0 {
            return Err(Error::parameter(format!("repeated vertex {v} in edge {vertices:?}")));
        }
        mask |= b;
    }
    Ok(mask)
}

/// All p-subsets of the set `mask`.
pub fn subsets_of_mask(mask: u64, p: usize) -> Vec<u64> {
    let verts = vertices_of(mask);
    let k = verts.len();
    if p > k {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(bits::binomial(k as u64, p as u64) as usize);
    for sel in RSubsets::new(k, p) {
        let mut m = 0u64;
        for i in vertices_of(sel) {
            m |= vertex_bit(verts[(i - 1) as usize]);
        }
        out.push(m);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::binomial;

    fn pairs(h: &Hypergraph) -> Vec<(u32, u32)> {
        h.shadow_pairs().iter().map(|p| (p.u, p.v)).collect()
    }

    #[test]
    fn single_edge_shadow_is_clique() {
        let h = Hypergraph::new(3, 3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(pairs(&h), vec![(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn empty_family_has_empty_shadow() {
        let h = Hypergraph::empty(3, 3).unwrap();
        assert!(h.shadow(2).unwrap().is_empty());
        assert_eq!(h.shadow_complement().len(), 3);
    }

    #[test]
    fn k43_shadow_is_all_pairs() {
        // Independent oracle: collect the pairs inside each edge directly.
        let h = Hypergraph::complete(4, 3).unwrap();
        let mut expect: Vec<(u32, u32)> = Vec::new();
        for e in h.edge_vertex_lists() {
            for i in 0..e.len() {
                for j in i + 1..e.len() {
                    expect.push((e[i], e[j]));
                }
            }
        }
        expect.sort();
        expect.dedup();
        assert_eq!(pairs(&h), expect);
        assert_eq!(expect.len(), 6);
    }

    #[test]
    fn shadow_complement_examples() {
        let k53 = Hypergraph::complete(5, 3).unwrap();
        assert!(k53.shadow_complement().is_empty());

        let h = Hypergraph::new(4, 3, &[vec![1, 2, 3]]).unwrap();
        let comp: Vec<(u32, u32)> = h.shadow_complement().iter().map(|p| (p.u, p.v)).collect();
        assert_eq!(comp, vec![(1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn shadow_and_complement_partition_all_pairs() {
        for (n, r, edges) in [
            (5usize, 3usize, vec![vec![1, 2, 3], vec![2, 3, 4]]),
            (6, 4, vec![vec![1, 2, 3, 4], vec![3, 4, 5, 6]]),
            (4, 2, vec![vec![1, 2]]),
        ] {
            let h = Hypergraph::new(n, r, &edges).unwrap();
            let s = h.shadow(2).unwrap().len();
            let c = h.shadow_complement().len();
            assert_eq!(s + c, binomial(n as u64, 2) as usize);
        }
    }

    #[test]
    fn complete_counts() {
        assert_eq!(Hypergraph::complete(5, 3).unwrap().edge_count(), 10);
        assert_eq!(Hypergraph::complete(6, 4).unwrap().edge_count(), 15);
        assert_eq!(
            Hypergraph::complete(4, 3).unwrap().edge_vertex_lists(),
            vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]
        );
        assert!(Hypergraph::complete(3, 4).is_err());
    }

    #[test]
    fn shadow_is_monotone_under_edge_addition() {
        let small = Hypergraph::new(6, 3, &[vec![1, 2, 3]]).unwrap();
        let big = Hypergraph::new(6, 3, &[vec![1, 2, 3], vec![4, 5, 6], vec![2, 3, 4]]).unwrap();
        for p in 1..=3 {
            let s = small.shadow(p).unwrap();
            let b = big.shadow(p).unwrap();
            for m in s {
                assert!(b.contains(&m));
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(Hypergraph::new(3, 3, &[vec![1, 2]]).is_err());
        assert!(Hypergraph::new(3, 3, &[vec![1, 2, 4]]).is_err());
        assert!(Hypergraph::new(3, 3, &[vec![1, 2, 3], vec![3, 2, 1]]).is_err());
        assert!(Hypergraph::new(3, 1, &[]).is_err());
        let h = Hypergraph::new(3, 3, &[vec![1, 2, 3]]).unwrap();
        assert!(h.shadow(0).is_err());
        assert!(h.shadow(4).is_err());
    }

    #[test]
    fn hyg_round_trip() {
        let h = Hypergraph::new(5, 3, &[vec![3, 1, 2], vec![2, 4, 5]]).unwrap();
        let text = h.to_hyg();
        let back = Hypergraph::parse_hyg(&text).unwrap();
        assert_eq!(h, back);

        let commented = "# a comment\n4 3\n1 2 3 # inline\n\n2 3 4\n";
        let g = Hypergraph::parse_hyg(commented).unwrap();
        assert_eq!(g.edge_count(), 2);

        assert!(Hypergraph::parse_hyg("4 3\n1 2 3\n1 3 2\n").is_err());
        assert!(Hypergraph::parse_hyg("").is_err());
        assert!(Hypergraph::parse_hyg("4\n1 2\n").is_err());
    }

    #[test]
    fn induced_restriction() {
        let h = Hypergraph::new(6, 3, &[vec![1, 2, 3], vec![2, 3, 6], vec![4, 5, 6]]).unwrap();
        let (sub, verts) = h.induced(mask_of(&[2, 3, 6]));
        assert_eq!(verts, vec![2, 3, 6]);
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.edge_count(), 1);
        assert_eq!(sub.edge_vertex_lists(), vec![vec![1, 2, 3]]);
    }
}
