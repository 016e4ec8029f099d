//! Exact arithmetic for all coefficient rings.

pub mod engine;
pub mod exponent;
mod indexed;
mod laurent;

pub use indexed::IndexedLaurent;
pub use laurent::{CoeffMode, LaurentPoly};

use num_bigint::BigInt;

use crate::error::Result;

/// A commutative coefficient ring with exact arithmetic. Symmetric
/// series are generic over this so the finite equivariant ring, the
/// polynomial (cohomology) ring, and the infinite-rank rings share one
/// implementation.
pub trait Ring: Clone + Send + Sync {
    type Elem: Clone + Eq + Ord + std::fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn int(&self, k: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, k: &BigInt) -> Self::Elem;
    /// Inverse of a unit monomial; used by series inversion.
    fn unit_inverse(&self, a: &Self::Elem) -> Result<Self::Elem>;
}

/// Finite-rank ring handle: R(T) in K mode, Z[a_1..a_n] in H mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LaurentRing {
    pub rank: usize,
    pub mode: CoeffMode,
}

impl LaurentRing {
    pub fn k(rank: usize) -> Self {
        LaurentRing {
            rank,
            mode: CoeffMode::KMultiplicative,
        }
    }

    pub fn h(rank: usize) -> Self {
        LaurentRing {
            rank,
            mode: CoeffMode::HAdditive,
        }
    }
}

impl Ring for LaurentRing {
    type Elem = LaurentPoly;

    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero(self.rank, self.mode)
    }

    fn one(&self) -> LaurentPoly {
        LaurentPoly::one(self.rank, self.mode)
    }

    fn int(&self, k: i64) -> LaurentPoly {
        LaurentPoly::constant(self.rank, self.mode, BigInt::from(k))
    }

    fn is_zero(&self, a: &LaurentPoly) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.add(b).expect("ring mismatch")
    }

    fn sub(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.sub(b).expect("ring mismatch")
    }

    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.mul(b).expect("ring mismatch")
    }

    fn neg(&self, a: &LaurentPoly) -> LaurentPoly {
        a.neg()
    }

    fn scale(&self, a: &LaurentPoly, k: &BigInt) -> LaurentPoly {
        a.scale(k)
    }

    fn unit_inverse(&self, a: &LaurentPoly) -> Result<LaurentPoly> {
        a.monomial_inverse()
    }
}

/// Infinite-rank ring handle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexedRing {
    pub mode: CoeffMode,
}

impl IndexedRing {
    pub fn k() -> Self {
        IndexedRing {
            mode: CoeffMode::KMultiplicative,
        }
    }

    pub fn h() -> Self {
        IndexedRing {
            mode: CoeffMode::HAdditive,
        }
    }
}

impl Ring for IndexedRing {
    type Elem = IndexedLaurent;

    fn zero(&self) -> IndexedLaurent {
        IndexedLaurent::zero(self.mode)
    }

    fn one(&self) -> IndexedLaurent {
        IndexedLaurent::one(self.mode)
    }

    fn int(&self, k: i64) -> IndexedLaurent {
        IndexedLaurent::constant(self.mode, BigInt::from(k))
    }

    fn is_zero(&self, a: &IndexedLaurent) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &IndexedLaurent, b: &IndexedLaurent) -> IndexedLaurent {
        a.add(b).expect("ring mismatch")
    }

    fn sub(&self, a: &IndexedLaurent, b: &IndexedLaurent) -> IndexedLaurent {
        a.sub(b).expect("ring mismatch")
    }

    fn mul(&self, a: &IndexedLaurent, b: &IndexedLaurent) -> IndexedLaurent {
        a.mul(b).expect("ring mismatch")
    }

    fn neg(&self, a: &IndexedLaurent) -> IndexedLaurent {
        a.neg()
    }

    fn scale(&self, a: &IndexedLaurent, k: &BigInt) -> IndexedLaurent {
        a.scale(k)
    }

    fn unit_inverse(&self, a: &IndexedLaurent) -> Result<IndexedLaurent> {
        a.monomial_inverse()
    }
}
