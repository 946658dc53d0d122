//! Canonical labeling for small uniform hypergraphs (and graphs, as the
//! 2-uniform case).
//!
//! Two hypergraphs on the same `n` receive the same label iff some
//! relabeling of `[n]` maps one edge family onto the other. The label is
//! computed by iterated degree/neighborhood color refinement, followed by a
//! backtracking search over the color-respecting relabelings for the
//! minimum edge-set image. Images are compared in graded order (largest
//! assigned label first, then lexicographic), which makes partial images
//! append-only and lets the search prune against the best prefix.

use std::cmp::Ordering;

use crate::bits::{binomial, graded_cmp, lex_cmp, vertex_bit, vertices_of, RSubsets, Vertex};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::hypergraph::Hypergraph;

/// Default cap on `n` for canonical labeling and isomorph-free enumeration.
pub const DEFAULT_CANON_MAX_N: usize = 12;

/// Canonical edge masks of `(n, edges)`: isomorphism-invariant, and itself
/// the edge set of a representative of the class.
pub fn canonical_edge_masks(n: usize, edges: &[u64], max_n: usize) -> Result<Vec<u64>> {
    if n > max_n {
        return Err(Error::budget(format!(
            "canonical labeling limited to n <= {max_n}, got n = {n}"
        )));
    }
    if edges.is_empty() {
        return Ok(Vec::new());
    }
    let r = edges[0].count_ones() as usize;
    debug_assert!(edges.iter().all(|e| e.count_ones() as usize == r));

    // Fully symmetric families label as themselves.
    if edges.len() as u128 == binomial(n as u64, r as u64) {
        let mut all: Vec<u64> = RSubsets::new(n, r).collect();
        all.sort_by(|a, b| graded_cmp(*a, *b));
        return Ok(all);
    }

    let cells = refine(n, edges);
    let mut search = CanonSearch::new(n, edges, cells);
    search.run();
    Ok(search.best.expect("search always produces an image"))
}

/// Canonical label string for a hypergraph; equal iff isomorphic.
pub fn canonical_form(h: &Hypergraph) -> Result<String> {
    canonical_form_budgeted(h, DEFAULT_CANON_MAX_N)
}

pub fn canonical_form_budgeted(h: &Hypergraph, max_n: usize) -> Result<String> {
    let masks = canonical_edge_masks(h.n(), h.edge_masks(), max_n)?;
    Ok(render_label(h.n(), h.r(), &masks))
}

/// Canonical representative of the isomorphism class of `h`.
pub fn canonical_representative(h: &Hypergraph, max_n: usize) -> Result<Hypergraph> {
    let masks = canonical_edge_masks(h.n(), h.edge_masks(), max_n)?;
    Hypergraph::from_masks(h.n(), h.r(), masks)
}

/// Canonical label for a simple graph via its edge masks.
pub fn graph_canonical_form(g: &SimpleGraph, max_n: usize) -> Result<String> {
    let masks = canonical_edge_masks(g.n(), &g.edge_masks(), max_n)?;
    Ok(render_label(g.n(), 2, &masks))
}

pub fn render_label(n: usize, r: usize, masks: &[u64]) -> String {
    let body: Vec<String> = masks.iter().map(|m| format!("{m:x}")).collect();
    format!("n{n}r{r}:{}", body.join("."))
}

/// Iterated color refinement. Returns the vertex cells in canonical order
/// (by structural signature); isomorphic inputs produce matching cell
/// sequences.
fn refine(n: usize, edges: &[u64]) -> Vec<Vec<Vertex>> {
    let incident: Vec<Vec<usize>> = (1..=n as Vertex)
        .map(|v| {
            edges
                .iter()
                .enumerate()
                .filter(|(_, &e)| e & vertex_bit(v) != 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    // Initial colors: degree rank.
    let mut color: Vec<u32> = {
        let degs: Vec<usize> = incident.iter().map(|es| es.len()).collect();
        let mut uniq = degs.clone();
        uniq.sort_unstable();
        uniq.dedup();
        degs.iter()
            .map(|d| uniq.binary_search(d).unwrap() as u32)
            .collect()
    };

    loop {
        let before = distinct(&color);
        // Signature: own color plus the sorted multiset, over incident
        // edges, of the sorted co-vertex color lists.
        let mut sigs: Vec<(u32, Vec<Vec<u32>>)> = Vec::with_capacity(n);
        for v in 1..=n as Vertex {
            let mut per_edge: Vec<Vec<u32>> = incident[(v - 1) as usize]
                .iter()
                .map(|&ei| {
                    let mut cs: Vec<u32> = vertices_of(edges[ei] & !vertex_bit(v))
                        .into_iter()
                        .map(|u| color[(u - 1) as usize])
                        .collect();
                    cs.sort_unstable();
                    cs
                })
                .collect();
            per_edge.sort();
            sigs.push((color[(v - 1) as usize], per_edge));
        }
        let mut uniq: Vec<&(u32, Vec<Vec<u32>>)> = sigs.iter().collect();
        uniq.sort();
        uniq.dedup();
        color = sigs
            .iter()
            .map(|s| uniq.binary_search(&s).unwrap() as u32)
            .collect();
        if distinct(&color) == before {
            break;
        }
    }

    let k = distinct(&color);
    let mut cells: Vec<Vec<Vertex>> = vec![Vec::new(); k];
    for v in 1..=n as Vertex {
        cells[color[(v - 1) as usize] as usize].push(v);
    }
    cells
}

fn distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct CanonSearch<'a> {
    n: usize,
    edges: &'a [u64],
    incident: Vec<Vec<usize>>,
    /// Cell index providing the vertex for each label position.
    cell_at_position: Vec<usize>,
    cells: Vec<Vec<Vertex>>,
    used: u64,
    /// label assigned to each original vertex (0 = unassigned)
    label_of: Vec<u32>,
    image: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl<'a> CanonSearch<'a> {
    fn new(n: usize, edges: &'a [u64], cells: Vec<Vec<Vertex>>) -> Self {
        let incident: Vec<Vec<usize>> = (1..=n as Vertex)
            .map(|v| {
                edges
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e & vertex_bit(v) != 0)
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let mut cell_at_position = Vec::with_capacity(n);
        for (ci, cell) in cells.iter().enumerate() {
            for _ in cell {
                cell_at_position.push(ci);
            }
        }
        CanonSearch {
            n,
            edges,
            incident,
            cell_at_position,
            cells,
            used: 0,
            label_of: vec![0; n + 1],
            image: Vec::new(),
            best: None,
        }
    }

    fn run(&mut self) {
        self.assign(0, false);
    }

    /// `incomparable`: some ancestor chunk already fell strictly below the
    /// best image, so prefix pruning is disabled below (the best may have
    /// been replaced since). Leaves always do a full comparison.
    fn assign(&mut self, depth: usize, incomparable: bool) {
        if depth == self.n {
            let replace = match &self.best {
                None => true,
                Some(best) => image_lt(&self.image, best),
            };
            if replace {
                self.best = Some(self.image.clone());
            }
            return;
        }
        let cell = self.cell_at_position[depth];
        let label = (depth + 1) as u32;
        let candidates: Vec<Vertex> = self.cells[cell]
            .iter()
            .copied()
            .filter(|&v| self.used & vertex_bit(v) == 0)
            .collect();
        for v in candidates {
            // Edges newly completed by labeling v: all other endpoints are
            // already labeled, so their images carry max label `label` and
            // extend the graded image append-only.
            let mut new_imgs: Vec<u64> = Vec::new();
            'edges: for &ei in &self.incident[(v - 1) as usize] {
                let e = self.edges[ei];
                let mut img = 1u64 << (label - 1);
                for u in vertices_of(e & !vertex_bit(v)) {
                    let lu = self.label_of[u as usize];
                    if lu == 0 {
                        continue 'edges;
                    }
                    img |= 1u64 << (lu - 1);
                }
                new_imgs.push(img);
            }
            new_imgs.sort_by(|a, b| lex_cmp(*a, *b));

            // Compare the appended chunk against the best image's prefix;
            // everything below this node extends the chunk verbatim.
            let mut child_incomparable = incomparable;
            let mut prune = false;
            if !child_incomparable {
                if let Some(best) = &self.best {
                    let base = self.image.len();
                    for (i, &img) in new_imgs.iter().enumerate() {
                        match graded_cmp(img, best[base + i]) {
                            Ordering::Less => {
                                child_incomparable = true;
                                break;
                            }
                            Ordering::Greater => {
                                prune = true;
                                break;
                            }
                            Ordering::Equal => {}
                        }
                    }
                }
            }
            if prune {
                continue;
            }

            let added = new_imgs.len();
            self.image.extend_from_slice(&new_imgs);
            self.used |= vertex_bit(v);
            self.label_of[v as usize] = label;
            self.assign(depth + 1, child_incomparable);
            self.label_of[v as usize] = 0;
            self.used &= !vertex_bit(v);
            self.image.truncate(self.image.len() - added);
        }
    }
}

/// Graded-sequence comparison of two complete images of equal length.
fn image_lt(a: &[u64], b: &[u64]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    for (&x, &y) in a.iter().zip(b) {
        match graded_cmp(x, y) {
            Ordering::Less => return true,
            Ordering::Greater => return false,
            Ordering::Equal => {}
        }
    }
    false
}
