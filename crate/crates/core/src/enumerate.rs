//! Canonical-order enumeration of index subsets, 3-block partitions and
//! triples of pairwise disjoint parts.
//!
//! Subsets are sorted index tuples compared lexicographically, a proper
//! prefix sorting first. Triples and partitions list their blocks by
//! increasing smallest element and compare block by block.

use alloc::vec::Vec;
use core::cmp::Ordering;

/// `k`-element subsets of `0..n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        let current = (k <= n).then(|| (0..k).collect());
        Combinations { n, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let k = cur.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Lexicographic comparison of sorted index tuples.
pub fn cmp_tuples(a: &[usize], b: &[usize]) -> Ordering {
    a.cmp(b)
}

/// Compares two canonical triples block by block.
pub fn cmp_triples(a: &[Vec<usize>; 3], b: &[Vec<usize>; 3]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| cmp_tuples(x, y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Sorts each block and orders the blocks by smallest element.
pub fn canonicalize(parts: [Vec<usize>; 3]) -> [Vec<usize>; 3] {
    let mut parts = parts;
    for p in &mut parts {
        p.sort_unstable();
    }
    parts.sort_by(|a, b| cmp_tuples(a, b));
    parts
}

/// Nonempty subsets of `elements` (assumed sorted) with at most `max_size`
/// members, in lexicographic order. `keep` must be hereditary: once it
/// rejects a subset, no superset reached through it is visited.
pub fn subsets_preorder<F>(elements: &[usize], max_size: usize, mut keep: F) -> Vec<Vec<usize>>
where
    F: FnMut(&[usize]) -> bool,
{
    fn go<F: FnMut(&[usize]) -> bool>(
        elements: &[usize],
        start: usize,
        max_size: usize,
        cur: &mut Vec<usize>,
        keep: &mut F,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == max_size {
            return;
        }
        for i in start..elements.len() {
            cur.push(elements[i]);
            if keep(cur) {
                out.push(cur.clone());
                go(elements, i + 1, max_size, cur, keep, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(elements, 0, max_size, &mut Vec::new(), &mut keep, &mut out);
    out
}

/// All partitions of `0..n` into exactly three nonempty blocks, in
/// canonical order.
pub fn tripartitions(n: usize) -> Vec<[Vec<usize>; 3]> {
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    // restricted growth strings: a[0] = 0, a[i] <= max(a[..i]) + 1 <= 2
    let mut a = alloc::vec![0usize; n];
    fn rec(a: &mut [usize], i: usize, max: usize, out: &mut Vec<[Vec<usize>; 3]>) {
        if i == a.len() {
            if max == 2 {
                let mut blocks = [Vec::new(), Vec::new(), Vec::new()];
                for (idx, &b) in a.iter().enumerate() {
                    blocks[b].push(idx);
                }
                out.push(blocks);
            }
            return;
        }
        let remaining = a.len() - i;
        for b in 0..=(max + 1).min(2) {
            let new_max = max.max(b);
            if 2 - new_max > remaining - 1 {
                continue;
            }
            a[i] = b;
            rec(a, i + 1, new_max, out);
        }
    }
    rec(&mut a, 1, 0, &mut out);
    out.sort_by(cmp_triples);
    out
}

/// A subset with its bitmask; `members` is sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Part {
    pub members: Vec<usize>,
    pub mask: u64,
}

impl Part {
    pub fn new(members: Vec<usize>) -> Self {
        let mask = members.iter().fold(0u64, |m, &i| m | (1u64 << i));
        Part { members, mask }
    }

    pub fn min(&self) -> usize {
        self.members[0]
    }
}

/// Iterates canonical triples `(a, b, c)` of pairwise disjoint parts drawn
/// from a list sorted lexicographically, with `min a < min b < min c`.
/// Yields indices into the part list.
#[derive(Debug, Clone)]
pub struct DisjointTriples<'a> {
    parts: &'a [Part],
    // first part index whose minimum element is >= m
    first_with_min: Vec<usize>,
    state: TripleState,
}

#[derive(Debug, Clone, Copy)]
enum TripleState {
    NotStarted,
    At(usize, usize, usize),
    Done,
}

impl<'a> DisjointTriples<'a> {
    pub fn new(parts: &'a [Part]) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0].members < w[1].members));
        let max_el = parts.iter().map(|p| p.min()).max().map_or(0, |m| m + 1);
        let first_with_min = (0..=max_el + 1)
            .map(|m| parts.partition_point(|p| p.min() < m))
            .collect();
        DisjointTriples {
            parts,
            first_with_min,
            state: TripleState::NotStarted,
        }
    }

    fn start_after(&self, part: usize) -> usize {
        let m = self.parts[part].min() + 1;
        self.first_with_min
            .get(m)
            .copied()
            .unwrap_or(self.parts.len())
    }

    /// First valid triple at or after `(i, j, l)` in nested-loop order.
    /// With `fresh_j`, `j` and `l` restart from their lower bounds.
    fn seek(&self, mut i: usize, mut j: usize, mut l: usize, mut fresh_j: bool) -> Option<(usize, usize, usize)> {
        let n = self.parts.len();
        let mut fresh_l = fresh_j;
        while i < n {
            if fresh_j {
                j = self.start_after(i);
                fresh_l = true;
            }
            while j < n {
                if self.parts[j].mask & self.parts[i].mask != 0 {
                    j += 1;
                    fresh_l = true;
                    continue;
                }
                if fresh_l {
                    l = self.start_after(j);
                }
                let used = self.parts[i].mask | self.parts[j].mask;
                while l < n && self.parts[l].mask & used != 0 {
                    l += 1;
                }
                if l < n {
                    return Some((i, j, l));
                }
                j += 1;
                fresh_l = true;
            }
            i += 1;
            fresh_j = true;
        }
        None
    }
}

impl Iterator for DisjointTriples<'_> {
    type Item = (usize, usize, usize);

    fn next(&mut self) -> Option<Self::Item> {
        let found = match self.state {
            TripleState::NotStarted => self.seek(0, 0, 0, true),
            TripleState::At(i, j, l) => self.seek(i, j, l + 1, false),
            TripleState::Done => return None,
        };
        self.state = match found {
            Some((i, j, l)) => TripleState::At(i, j, l),
            None => TripleState::Done,
        };
        found
    }
}
