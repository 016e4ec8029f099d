//! Exponent keys for sparse term maps.
//!
//! Two shapes are used: dense fixed-length vectors for the finite-rank
//! rings R(T) and Z[a_1,...,a_n], and sparse index maps for the
//! infinite-rank ring Z[e^{±a_i} | i in Z].

use std::collections::BTreeMap;

/// An exponent key of a monomial. Keys form an abelian group under
/// componentwise addition; `Ord` must be a translation-invariant total
/// order (lexicographic works) so that leading terms multiply.
pub trait ExpKey: Clone + Ord + std::fmt::Debug {
    /// Variable identifier: a slot for dense keys, an integer index for
    /// sparse keys.
    type Var: Copy + Ord + std::fmt::Debug;

    /// The zero key with the same shape (rank) as `self`.
    fn zero_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Exponent of the given variable.
    fn get(&self, v: Self::Var) -> i64;
    /// Variables carrying a nonzero exponent.
    fn support(&self) -> Vec<Self::Var>;
    /// True if some exponent is negative (used by the polynomial mode).
    fn has_negative(&self) -> bool;
}

impl ExpKey for Vec<i64> {
    type Var = usize;

    fn zero_like(&self) -> Self {
        vec![0; self.len()]
    }

    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        self.iter().zip(other).map(|(a, b)| a + b).collect()
    }

    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        self.iter().zip(other).map(|(a, b)| a - b).collect()
    }

    fn neg(&self) -> Self {
        self.iter().map(|a| -a).collect()
    }

    fn is_zero(&self) -> bool {
        self.iter().all(|&a| a == 0)
    }

    fn get(&self, v: usize) -> i64 {
        self[v]
    }

    fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self[i] != 0).collect()
    }

    fn has_negative(&self) -> bool {
        self.iter().any(|&a| a < 0)
    }
}

/// Sparse exponent key: index -> exponent, zero entries never stored.
pub type SparseExp = BTreeMap<i64, i64>;

impl ExpKey for SparseExp {
    type Var = i64;

    fn zero_like(&self) -> Self {
        BTreeMap::new()
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, &v) in other {
            let e = out.entry(k).or_insert(0);
            *e += v;
            if *e == 0 {
                out.remove(&k);
            }
        }
        out
    }

    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, &v) in other {
            let e = out.entry(k).or_insert(0);
            *e -= v;
            if *e == 0 {
                out.remove(&k);
            }
        }
        out
    }

    fn neg(&self) -> Self {
        self.iter().map(|(&k, &v)| (k, -v)).collect()
    }

    fn is_zero(&self) -> bool {
        self.is_empty()
    }

    fn get(&self, v: i64) -> i64 {
        self.get(&v).copied().unwrap_or(0)
    }

    fn support(&self) -> Vec<i64> {
        self.keys().copied().collect()
    }

    fn has_negative(&self) -> bool {
        self.values().any(|&v| v < 0)
    }
}
