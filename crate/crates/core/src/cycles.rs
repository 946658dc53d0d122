//! Exact longest cycles and paths in small graphs, plus saturation with
//! respect to long cycles.
//!
//! Backtracking over simple paths with bitmask visited sets. Two prunes:
//! the current path plus all still-reachable vertices cannot beat the
//! target, and (for cycles) the start vertex must stay adjacent to the
//! reachable region. Both preserve exactness.

use crate::bits::{full_mask, vertex_bit, Vertex};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Default cap on `n` for exact graph cycle/path search.
pub const DEFAULT_GRAPH_SEARCH_MAX_N: usize = 14;

fn check_budget(g: &SimpleGraph, max_n: usize) -> Result<()> {
    if g.n() > max_n {
        return Err(Error::budget(format!(
            "exact graph search limited to n <= {max_n}, got n = {}",
            g.n()
        )));
    }
    Ok(())
}

/// Length of a longest cycle (0 if acyclic) and a witness vertex cycle.
pub fn longest_cycle(g: &SimpleGraph) -> Result<(usize, Option<Vec<Vertex>>)> {
    longest_cycle_budgeted(g, DEFAULT_GRAPH_SEARCH_MAX_N)
}

pub fn longest_cycle_budgeted(
    g: &SimpleGraph,
    max_n: usize,
) -> Result<(usize, Option<Vec<Vertex>>)> {
    check_budget(g, max_n)?;
    let mut search = CycleSearch {
        g,
        best_len: 0,
        witness: None,
        target: None,
        found: false,
    };
    search.run();
    Ok((search.best_len, search.witness))
}

/// Does `g` contain a cycle of length at least `k`? Returns a witness cycle.
pub fn has_cycle_geq(g: &SimpleGraph, k: usize) -> Result<Option<Vec<Vertex>>> {
    has_cycle_geq_budgeted(g, k, DEFAULT_GRAPH_SEARCH_MAX_N)
}

pub fn has_cycle_geq_budgeted(
    g: &SimpleGraph,
    k: usize,
    max_n: usize,
) -> Result<Option<Vec<Vertex>>> {
    check_budget(g, max_n)?;
    if k < 3 {
        return Err(Error::parameter(format!("cycle threshold must be >= 3, got {k}")));
    }
    if k > g.n() {
        return Ok(None);
    }
    let mut search = CycleSearch {
        g,
        best_len: 0,
        witness: None,
        target: Some(k),
        found: false,
    };
    search.run();
    Ok(if search.found { search.witness } else { None })
}

struct CycleSearch<'a> {
    g: &'a SimpleGraph,
    best_len: usize,
    witness: Option<Vec<Vertex>>,
    /// When set, stop at the first cycle of at least this length.
    target: Option<usize>,
    found: bool,
}

impl<'a> CycleSearch<'a> {
    fn run(&mut self) {
        let n = self.g.n();
        for s in 1..=n as Vertex {
            if self.found {
                return;
            }
            // s is the minimum vertex of the cycle: everything else > s.
            let allowed = full_mask(n) & !full_mask(s as usize);
            let mut path = vec![s];
            self.extend(s, &mut path, vertex_bit(s), allowed);
        }
    }

    fn goal(&self) -> usize {
        self.target.unwrap_or(self.best_len + 1).max(3)
    }

    fn extend(&mut self, s: Vertex, path: &mut Vec<Vertex>, used: u64, allowed: u64) {
        let last = *path.last().unwrap();
        if path.len() >= 3 && self.g.has_edge(last, s) {
            let record = match self.target {
                Some(k) => path.len() >= k,
                None => path.len() > self.best_len,
            };
            if record {
                self.best_len = path.len();
                self.witness = Some(path.clone());
                if self.target.is_some() {
                    self.found = true;
                    return;
                }
            }
        }
        let avail = allowed & !used;
        // Reachable region from `last` through unused allowed vertices.
        let reach = reachable(self.g, last, avail | vertex_bit(last));
        if path.len() + (reach & avail).count_ones() as usize < self.goal() {
            return;
        }
        // The cycle must close back to s.
        if self.g.neighbors(s) & reach == 0 {
            return;
        }
        let mut cands = self.g.neighbors(last) & avail;
        while cands != 0 {
            let v = cands.trailing_zeros() + 1;
            cands &= cands - 1;
            path.push(v);
            self.extend(s, path, used | vertex_bit(v), allowed);
            path.pop();
            if self.found {
                return;
            }
        }
    }
}

fn reachable(g: &SimpleGraph, from: Vertex, within: u64) -> u64 {
    g.component_of(from, within)
}

/// Longest path measured in edges, with a witness vertex sequence.
pub fn longest_path(g: &SimpleGraph) -> Result<(usize, Option<Vec<Vertex>>)> {
    longest_path_budgeted(g, DEFAULT_GRAPH_SEARCH_MAX_N)
}

pub fn longest_path_budgeted(
    g: &SimpleGraph,
    max_n: usize,
) -> Result<(usize, Option<Vec<Vertex>>)> {
    check_budget(g, max_n)?;
    let n = g.n();
    let mut best = 0usize;
    let mut witness = None;
    let mut path = Vec::with_capacity(n);
    for s in 1..=n as Vertex {
        path.clear();
        path.push(s);
        extend_path(g, &mut path, vertex_bit(s), &mut best, &mut witness);
    }
    Ok((best, witness))
}

fn extend_path(
    g: &SimpleGraph,
    path: &mut Vec<Vertex>,
    used: u64,
    best: &mut usize,
    witness: &mut Option<Vec<Vertex>>,
) {
    let last = *path.last().unwrap();
    if path.len() - 1 > *best {
        *best = path.len() - 1;
        *witness = Some(path.clone());
    }
    let avail = full_mask(g.n()) & !used;
    let reach = g.component_of(last, avail | vertex_bit(last));
    if path.len() - 1 + (reach & avail).count_ones() as usize <= *best {
        return;
    }
    let mut cands = g.neighbors(last) & avail;
    while cands != 0 {
        let v = cands.trailing_zeros() + 1;
        cands &= cands - 1;
        path.push(v);
        extend_path(g, path, used | vertex_bit(v), best, witness);
        path.pop();
    }
}

/// Greedily adds non-edges (in lexicographic order) that do not create a
/// cycle of length `k` or longer. The result is saturated: every remaining
/// non-edge would create one. Rejected non-edges stay rejected because the
/// property is monotone under edge addition.
pub fn saturate_no_long_cycle(g: &SimpleGraph, k: usize) -> Result<SimpleGraph> {
    saturate_no_long_cycle_budgeted(g, k, DEFAULT_GRAPH_SEARCH_MAX_N)
}

pub fn saturate_no_long_cycle_budgeted(
    g: &SimpleGraph,
    k: usize,
    max_n: usize,
) -> Result<SimpleGraph> {
    check_budget(g, max_n)?;
    if has_cycle_geq_budgeted(g, k, max_n)?.is_some() {
        return Err(Error::invalid(format!(
            "input already has a cycle of length >= {k}"
        )));
    }
    let mut out = g.clone();
    for (u, v) in g.non_edges() {
        out.add_edge(u, v);
        if has_cycle_geq_budgeted(&out, k, max_n)?.is_some() {
            out.remove_edge(u, v);
        }
    }
    Ok(out)
}

/// Checks a witness cycle against the graph.
pub fn validate_cycle(g: &SimpleGraph, cycle: &[Vertex]) -> bool {
    if cycle.len() < 3 {
        return false;
    }
    let mut seen = 0u64;
    for &v in cycle {
        if v < 1 || v as usize > g.n() || seen & vertex_bit(v) != 0 {
            return false;
        }
        seen |= vertex_bit(v);
    }
    cycle
        .windows(2)
        .all(|w| g.has_edge(w[0], w[1]))
        && g.has_edge(cycle[cycle.len() - 1], cycle[0])
}
