//! Bitmask helpers for vertex sets on up to 64 vertices.
//!
//! Vertices are 1-based; vertex `v` occupies bit `v - 1`. All set orderings
//! in this crate derive from two comparators: `lex_cmp` (sorted-vertex-list
//! lexicographic, for same-size sets) and `graded_cmp` (largest vertex
//! first, then lex), the order canonical labeling grows images in.

use std::cmp::Ordering;

pub type Vertex = u32;

pub const MAX_VERTICES: usize = 64;

#[inline]
pub fn vertex_bit(v: Vertex) -> u64 {
    debug_assert!(v >= 1 && v as usize <= MAX_VERTICES);
    1u64 << (v - 1)
}

#[inline]
pub fn full_mask(n: usize) -> u64 {
    debug_assert!(n <= MAX_VERTICES);
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn mask_of(vertices: &[Vertex]) -> u64 {
    vertices.iter().fold(0u64, |m, &v| m | vertex_bit(v))
}

pub fn vertices_of(mask: u64) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        let b = m.trailing_zeros();
        out.push(b + 1);
        m &= m - 1;
    }
    out
}

/// Lexicographic comparison of two same-cardinality vertex sets, viewed as
/// ascending vertex lists. The set containing the smallest vertex outside
/// the common part comes first.
#[inline]
pub fn lex_cmp(a: u64, b: u64) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let d = a ^ b;
    let low = d & d.wrapping_neg();
    if a & low != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Order by largest contained vertex, ties broken lexicographically.
/// Under this order, edges contained in `{1..d}` always precede edges that
/// reach beyond `d`, which makes partial canonical images append-only.
#[inline]
pub fn graded_cmp(a: u64, b: u64) -> Ordering {
    debug_assert!(a != 0 && b != 0);
    let ha = 63 - a.leading_zeros();
    let hb = 63 - b.leading_zeros();
    ha.cmp(&hb).then_with(|| lex_cmp(a, b))
}

/// Iterator over all r-subsets of `[n]` as bitmasks, in ascending numeric
/// mask order (Gosper's hack).
pub struct RSubsets {
    current: u64,
    limit: u128,
    r: usize,
}

impl RSubsets {
    pub fn new(n: usize, r: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        let limit = if n == 64 { 1u128 << 64 } else { 1u128 << n };
        let current = if r == 0 || r > n {
            0
        } else {
            (1u64 << (r - 1) << 1).wrapping_sub(1).max(1) // (1<<r)-1 without r=64 overflow
        };
        RSubsets {
            current,
            limit,
            r,
        }
    }
}

impl Iterator for RSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.r == 0 || self.current == 0 || (self.current as u128) >= self.limit {
            return None;
        }
        let v = self.current;
        // Gosper: next larger integer with the same popcount.
        let u = v & v.wrapping_neg();
        let w = v.wrapping_add(u);
        if w == 0 {
            self.current = 0;
        } else {
            self.current = w | (((v ^ w) / u) >> 2);
        }
        Some(v)
    }
}

/// Exact binomial coefficient; panics on intermediate overflow of u128.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128).expect("binomial overflow");
        acc /= (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_matches_sorted_lists() {
        // {1,4} < {2,3} in sorted-list lexicographic order.
        let a = mask_of(&[1, 4]);
        let b = mask_of(&[2, 3]);
        assert_eq!(lex_cmp(a, b), Ordering::Less);
        // {1,2,4} < {1,3,4}
        assert_eq!(
            lex_cmp(mask_of(&[1, 2, 4]), mask_of(&[1, 3, 4])),
            Ordering::Less
        );
        assert_eq!(lex_cmp(a, a), Ordering::Equal);
    }

    #[test]
    fn lex_order_agrees_with_vertex_list_comparison() {
        let subsets: Vec<u64> = RSubsets::new(6, 3).collect();
        for &a in &subsets {
            for &b in &subsets {
                let by_mask = lex_cmp(a, b);
                let by_list = vertices_of(a).cmp(&vertices_of(b));
                assert_eq!(by_mask, by_list, "{:?} vs {:?}", vertices_of(a), vertices_of(b));
            }
        }
    }

    #[test]
    fn rsubsets_counts() {
        assert_eq!(RSubsets::new(5, 3).count(), 10);
        assert_eq!(RSubsets::new(6, 4).count(), 15);
        assert_eq!(RSubsets::new(4, 4).count(), 1);
        assert_eq!(RSubsets::new(3, 4).count(), 0);
        assert_eq!(RSubsets::new(8, 1).count(), 8);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(6, 4), 15);
        assert_eq!(binomial(29, 10), 20030010);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn mask_round_trip() {
        let vs = vec![2, 5, 7];
        assert_eq!(vertices_of(mask_of(&vs)), vs);
        assert_eq!(full_mask(3), 0b111);
    }
}
