//! Integer partitions: the indexing combinatorics for symmetric
//! functions and affine Grassmannian elements.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Weakly decreasing positive parts; the empty partition has none.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The k-rectangle R_i = (i)^{n−i} for 1 ≤ i ≤ n−1.
    pub fn rectangle(n: usize, i: usize) -> Self {
        Partition(vec![i as u32; n - i])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Self {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let parts = (1..=cols)
            .map(|c| self.0.iter().filter(|&&p| p as usize >= c).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Union: concatenate the parts and re-sort.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    pub fn contains(&self, other: &Self) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    pub fn is_k_bounded(&self, k: usize) -> bool {
        self.part(0) as usize <= k
    }

    /// k-small: contained in a j × (k+1−j) rectangle for some 1 ≤ j ≤ k.
    pub fn is_k_small(&self, k: usize) -> bool {
        if self.is_empty() {
            return true;
        }
        (1..=k).any(|j| self.len() <= j && (self.part(0) as usize) <= k + 1 - j)
    }

    /// All partitions of exactly `n`.
    pub fn all_of(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of size ≤ n (including the empty one).
    pub fn all_up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of).collect()
    }

    /// All partitions of exactly `n` with parts ≤ `max_part`.
    pub fn bounded_of(n: u32, max_part: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen(n, max_part, &mut cur, &mut out);
        out
    }
}

fn gen(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    let hi = rem.min(max);
    for p in (1..=hi).rev() {
        cur.push(p);
        gen(rem - p, p, cur, out);
        cur.pop();
    }
}

/// Total order: by size first, then lexicographic on the parts. Used
/// for deterministic term ordering in series maps.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec())
    }
}
