//! Bipartite maximum matching by augmenting paths, with the extras the
//! representative-pair machinery needs: alternating-path reachability for
//! extracting Hall violators, and strict-surplus certification by either
//! pair cloning or direct subset enumeration.

use crate::error::{Error, Result};

/// Incremental left-to-right matcher (Kuhn's algorithm).
#[derive(Debug, Clone)]
pub struct Matcher {
    pub left_adj: Vec<Vec<usize>>,
    n_right: usize,
    match_of_left: Vec<Option<usize>>,
    match_of_right: Vec<Option<usize>>,
}

#[derive(Debug, Clone)]
pub struct MatchSnapshot {
    match_of_left: Vec<Option<usize>>,
    match_of_right: Vec<Option<usize>>,
}

impl Matcher {
    pub fn new(n_right: usize) -> Self {
        Matcher {
            left_adj: Vec::new(),
            n_right,
            match_of_left: Vec::new(),
            match_of_right: vec![None; n_right],
        }
    }

    pub fn with_lefts(left_adj: Vec<Vec<usize>>, n_right: usize) -> Self {
        let n_left = left_adj.len();
        Matcher {
            left_adj,
            n_right,
            match_of_left: vec![None; n_left],
            match_of_right: vec![None; n_right],
        }
    }

    pub fn n_left(&self) -> usize {
        self.left_adj.len()
    }

    pub fn push_left(&mut self, adj: Vec<usize>) -> usize {
        debug_assert!(adj.iter().all(|&r| r < self.n_right));
        self.left_adj.push(adj);
        self.match_of_left.push(None);
        self.left_adj.len() - 1
    }

    /// Removes the most recently added left vertex, releasing its match.
    pub fn pop_left(&mut self) {
        if let Some(Some(r)) = self.match_of_left.pop() {
            self.match_of_right[r] = None;
        }
        self.left_adj.pop();
    }

    pub fn snapshot(&self) -> MatchSnapshot {
        MatchSnapshot {
            match_of_left: self.match_of_left.clone(),
            match_of_right: self.match_of_right.clone(),
        }
    }

    pub fn restore(&mut self, snap: &MatchSnapshot) {
        self.match_of_left.clone_from(&snap.match_of_left);
        self.match_of_right.clone_from(&snap.match_of_right);
    }

    pub fn match_of_left(&self, l: usize) -> Option<usize> {
        self.match_of_left[l]
    }

    pub fn matched_count(&self) -> usize {
        self.match_of_left.iter().filter(|m| m.is_some()).count()
    }

    /// Tries to match left `l`, possibly rerouting existing matches.
    pub fn try_augment(&mut self, l: usize) -> bool {
        if self.match_of_left[l].is_some() {
            return true;
        }
        let mut visited = vec![false; self.n_right];
        self.augment_dfs(l, &mut visited)
    }

    fn augment_dfs(&mut self, l: usize, visited: &mut [bool]) -> bool {
        let adj = self.left_adj[l].clone();
        for r in adj {
            if visited[r] {
                continue;
            }
            visited[r] = true;
            match self.match_of_right[r] {
                None => {
                    self.match_of_right[r] = Some(l);
                    self.match_of_left[l] = Some(r);
                    return true;
                }
                Some(other) => {
                    if self.augment_dfs(other, visited) {
                        self.match_of_right[r] = Some(l);
                        self.match_of_left[l] = Some(r);
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Augments every unmatched left in index order; returns matching size.
    pub fn run(&mut self) -> usize {
        for l in 0..self.left_adj.len() {
            self.try_augment(l);
        }
        self.matched_count()
    }

    /// Left vertices reachable from `start` by alternating paths
    /// (left -> any adjacent right -> its matched left), including `start`.
    pub fn reachable_lefts(&self, start: usize) -> Vec<usize> {
        let mut seen_left = vec![false; self.left_adj.len()];
        let mut seen_right = vec![false; self.n_right];
        let mut queue = vec![start];
        seen_left[start] = true;
        while let Some(l) = queue.pop() {
            for &r in &self.left_adj[l] {
                if seen_right[r] {
                    continue;
                }
                seen_right[r] = true;
                if let Some(other) = self.match_of_right[r] {
                    if !seen_left[other] {
                        seen_left[other] = true;
                        queue.push(other);
                    }
                }
            }
        }
        (0..self.left_adj.len()).filter(|&l| seen_left[l]).collect()
    }
}

/// Outcome of a strict-surplus (positive Hall surplus) check: every
/// nonempty left subset S must see strictly more than |S| rights.
#[derive(Debug, Clone)]
pub enum Surplus {
    Holds,
    /// Indices of a violating left set with |S| >= |N(S)|.
    Violated(Vec<usize>),
}

impl Surplus {
    pub fn holds(&self) -> bool {
        matches!(self, Surplus::Holds)
    }
}

/// Surplus check by pair cloning: the surplus holds iff the base matching
/// saturates every left and, for each left `p`, adding a duplicate of `p`
/// still admits an augmenting path.
pub fn surplus_by_matching(left_adj: &[Vec<usize>], n_right: usize) -> Surplus {
    let mut matcher = Matcher::with_lefts(left_adj.to_vec(), n_right);
    for l in 0..left_adj.len() {
        if !matcher.try_augment(l) {
            // |N(S)| = |S| - 1 for the reachable set S.
            return Surplus::Violated(matcher.reachable_lefts(l));
        }
    }
    for p in 0..left_adj.len() {
        let clone = matcher.push_left(left_adj[p].clone());
        let ok = matcher.try_augment(clone);
        if !ok {
            // Reachable originals are all matched, pairwise onto exactly
            // their neighborhood: |N(S)| = |S|.
            let mut reach = matcher.reachable_lefts(clone);
            reach.retain(|&l| l != clone);
            return Surplus::Violated(reach);
        }
        // Dropping the clone leaves a matching that still saturates all
        // originals, so later clone tests can continue from it.
        matcher.pop_left();
    }
    Surplus::Holds
}

/// Surplus check by direct subset enumeration. Requires at most 20 lefts
/// and at most 64 rights. Returns the first violator in subset order.
pub fn surplus_by_subsets(left_adj: &[Vec<usize>], n_right: usize) -> Result<Surplus> {
    let n_left = left_adj.len();
    if n_left > 20 {
        return Err(Error::parameter(format!(
            "subset enumeration limited to 20 lefts, got {n_left}"
        )));
    }
    if n_right > 64 {
        return Err(Error::parameter(format!(
            "subset enumeration limited to 64 rights, got {n_right}"
        )));
    }
    let masks: Vec<u64> = left_adj
        .iter()
        .map(|adj| adj.iter().fold(0u64, |m, &r| m | (1u64 << r)))
        .collect();
    for sel in 1u32..(1u32 << n_left) {
        let mut union = 0u64;
        let mut size = 0u32;
        for (i, &m) in masks.iter().enumerate() {
            if sel >> i & 1 == 1 {
                union |= m;
                size += 1;
            }
        }
        if union.count_ones() <= size {
            let violator: Vec<usize> = (0..n_left).filter(|&i| sel >> i & 1 == 1).collect();
            return Ok(Surplus::Violated(violator));
        }
    }
    Ok(Surplus::Holds)
}

/// Shrinks a violating left set to an inclusion-minimal one, dropping
/// candidates from the largest index down so lexicographically early lefts
/// survive. The input must violate; the output still violates.
pub fn shrink_violator(left_adj: &[Vec<usize>], violator: &[usize]) -> Vec<usize> {
    let mut current: Vec<usize> = violator.to_vec();
    current.sort_unstable();
    debug_assert!(violates(left_adj, &current));
    let mut i = current.len();
    while i > 0 {
        i -= 1;
        if current.len() == 1 {
            break;
        }
        let removed = current.remove(i);
        if !violates(left_adj, &current) {
            current.insert(i, removed);
        }
    }
    current
}

fn violates(left_adj: &[Vec<usize>], set: &[usize]) -> bool {
    if set.is_empty() {
        return false;
    }
    let mut union: std::collections::BTreeSet<usize> = std::collections::BTreeSet::new();
    for &l in set {
        union.extend(left_adj[l].iter().copied());
    }
    union.len() <= set.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_matching() {
        // 3 lefts, 2 rights: maximum matching 2.
        let adj = vec![vec![0], vec![0, 1], vec![1]];
        let mut m = Matcher::with_lefts(adj, 2);
        assert_eq!(m.run(), 2);
    }

    #[test]
    fn augmenting_reroutes() {
        // l0 -> {r0}, l1 -> {r0, r1}: l1 must reroute to r1.
        let adj = vec![vec![0], vec![0, 1]];
        let mut m = Matcher::with_lefts(adj, 2);
        assert!(m.try_augment(0));
        assert!(m.try_augment(1));
        assert_eq!(m.matched_count(), 2);
    }

    #[test]
    fn push_pop_round_trip() {
        let mut m = Matcher::new(3);
        let a = m.push_left(vec![0, 1]);
        assert!(m.try_augment(a));
        let snap = m.snapshot();
        let b = m.push_left(vec![0]);
        assert!(m.try_augment(b));
        m.pop_left();
        m.restore(&snap);
        assert_eq!(m.matched_count(), 1);
    }

    #[test]
    fn surplus_both_methods_agree_on_small_cases() {
        let cases: Vec<(Vec<Vec<usize>>, usize)> = vec![
            // one pair, one edge: 1 >= 1 violates strictness
            (vec![vec![0]], 1),
            // one pair, two edges: strict surplus
            (vec![vec![0, 1]], 2),
            // triangle pairs all inside a single edge
            (vec![vec![0], vec![0], vec![0]], 1),
            // 2 lefts sharing 3 rights
            (vec![vec![0, 1, 2], vec![0, 1, 2]], 3),
            // deficiency hidden in a subset
            (vec![vec![0, 1], vec![0, 1], vec![1, 2, 3]], 4),
            (vec![], 0),
        ];
        for (adj, nr) in cases {
            let a = surplus_by_matching(&adj, nr).holds();
            let b = surplus_by_subsets(&adj, nr).unwrap().holds();
            assert_eq!(a, b, "disagreement on {adj:?}");
        }
    }

    #[test]
    fn violator_is_a_real_violator() {
        let adj = vec![vec![0, 1], vec![0, 1], vec![1, 2, 3]];
        match surplus_by_matching(&adj, 4) {
            Surplus::Violated(v) => {
                assert!(violates(&adj, &{
                    let mut s = v.clone();
                    s.sort_unstable();
                    s
                }));
                let shrunk = shrink_violator(&adj, &v);
                assert!(violates(&adj, &shrunk));
                assert_eq!(shrunk, vec![0, 1]);
            }
            Surplus::Holds => panic!("expected a violator"),
        }
    }
}
