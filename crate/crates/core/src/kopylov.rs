//! Structure witness for saturated 2-connected graphs without long cycles:
//! either the whole graph disintegrates at threshold `t = ⌊(k-1)/2⌋`, or the
//! t-core is a complete graph on `s` vertices with `t+2 <= s <= k-2` and the
//! remaining vertices removable by a `(k-s)`-disintegration.

use crate::bits::{vertex_bit, vertices_of};
use crate::blocks::is_two_connected;
use crate::cycles::{has_cycle_geq_budgeted, DEFAULT_GRAPH_SEARCH_MAX_N};
use crate::disintegration::{disintegrate, DisintegrationTrace};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

#[derive(Debug, Clone)]
pub enum KopylovCase {
    /// The t-core is empty; the graph is t-disintegrable.
    Disintegrable { trace: DisintegrationTrace },
    /// The t-core is a complete graph on `s` vertices and the rest is
    /// removable by (k-s)-disintegration.
    Core {
        s: usize,
        core_vertices: u64,
        tail_trace: DisintegrationTrace,
    },
}

#[derive(Debug, Clone)]
pub struct KopylovWitness {
    pub k: usize,
    pub t: usize,
    pub case: KopylovCase,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct KopylovOptions {
    /// Saturate the input first instead of requiring it saturated.
    pub saturate_first: bool,
    pub max_n: Option<usize>,
}

pub fn kopylov_witness(g: &SimpleGraph, k: usize) -> Result<KopylovWitness> {
    kopylov_witness_with(g, k, KopylovOptions::default())
}

pub fn kopylov_witness_with(
    g: &SimpleGraph,
    k: usize,
    opts: KopylovOptions,
) -> Result<KopylovWitness> {
    let max_n = opts.max_n.unwrap_or(DEFAULT_GRAPH_SEARCH_MAX_N);
    let n = g.n();
    if k < 5 || n < k {
        return Err(Error::invalid(format!(
            "requires n >= k >= 5, got n = {n}, k = {k}"
        )));
    }
    let owned;
    let g = if opts.saturate_first {
        owned = crate::cycles::saturate_no_long_cycle_budgeted(g, k, max_n)?;
        &owned
    } else {
        g
    };
    if !is_two_connected(g) {
        return Err(Error::invalid("graph is not 2-connected".to_string()));
    }
    if has_cycle_geq_budgeted(g, k, max_n)?.is_some() {
        return Err(Error::invalid(format!("graph has a cycle of length >= {k}")));
    }
    if !opts.saturate_first {
        // Saturation: every non-edge must create a long cycle.
        for (u, v) in g.non_edges() {
            let mut t = g.clone();
            t.add_edge(u, v);
            if has_cycle_geq_budgeted(&t, k, max_n)?.is_none() {
                return Err(Error::invalid(format!(
                    "graph is not saturated: edge {u}-{v} creates no cycle of length >= {k}"
                )));
            }
        }
    }

    let t = (k - 1) / 2;
    let trace = disintegrate(g, t);
    if trace.core_is_empty() {
        return Ok(KopylovWitness {
            k,
            t,
            case: KopylovCase::Disintegrable { trace },
        });
    }

    let core = trace.core_vertices;
    let s = core.count_ones() as usize;
    if !(t + 2 <= s && s <= k - 2) {
        return Err(Error::consistency(format!(
            "nonempty t-core of size s = {s} outside [{}, {}]",
            t + 2,
            k - 2
        )));
    }
    let mut problems = Vec::new();
    // Side condition noted for the core case: 2 <= k - s <= t.
    if !(2 <= k - s && k - s <= t) {
        problems.push(format!("k - s = {} outside [2, {t}]", k - s));
    }
    let core_list = vertices_of(core);
    for (i, &u) in core_list.iter().enumerate() {
        for &v in &core_list[i + 1..] {
            if !g.has_edge(u, v) {
                problems.push(format!("core is not complete: missing {u}-{v}"));
            }
        }
    }
    let tail_trace = disintegrate(g, k - s);
    if tail_trace.core_vertices != core {
        problems.push(format!(
            "(k-s)-disintegration leaves {:?}, expected the t-core {:?}",
            vertices_of(tail_trace.core_vertices),
            core_list
        ));
    }
    if !problems.is_empty() {
        return Err(Error::consistency(format!(
            "no structure case validates: {}",
            problems.join("; ")
        )));
    }
    Ok(KopylovWitness {
        k,
        t,
        case: KopylovCase::Core {
            s,
            core_vertices: core,
            tail_trace,
        },
    })
}
