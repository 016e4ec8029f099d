//! The infinite-rank coefficient rings R(T_Z) = Z[e^{±a_i} | i ∈ Z]
//! (multiplicative mode) and Z[a_i | i ∈ Z] (additive mode), stored as
//! sparse index → exponent maps.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::engine::{self, TermMap};
use super::exponent::{ExpKey, SparseExp};
use super::laurent::{CoeffMode, LaurentPoly};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexedLaurent {
    mode: CoeffMode,
    terms: TermMap<SparseExp>,
}

impl IndexedLaurent {
    pub fn zero(mode: CoeffMode) -> Self {
        IndexedLaurent {
            mode,
            terms: TermMap::new(),
        }
    }

    pub fn one(mode: CoeffMode) -> Self {
        Self::constant(mode, BigInt::one())
    }

    pub fn constant(mode: CoeffMode, c: BigInt) -> Self {
        let mut terms = TermMap::new();
        if !c.is_zero() {
            terms.insert(SparseExp::new(), c);
        }
        IndexedLaurent { mode, terms }
    }

    pub fn monomial(mode: CoeffMode, exp: SparseExp, coef: BigInt) -> Result<Self> {
        if mode == CoeffMode::HAdditive && exp.has_negative() {
            return Err(Error::NegativeExponent);
        }
        let mut terms = TermMap::new();
        if !coef.is_zero() {
            terms.insert(exp, coef);
        }
        Ok(IndexedLaurent { mode, terms })
    }

    /// e^{a_i} in K mode.
    pub fn exp_a(i: i64) -> Self {
        let mut e = SparseExp::new();
        e.insert(i, 1);
        Self::monomial(CoeffMode::KMultiplicative, e, BigInt::one()).unwrap()
    }

    /// b_i = 1 − e^{−a_i} in K mode, any integer index.
    pub fn b(i: i64) -> Self {
        let mut e = SparseExp::new();
        e.insert(i, -1);
        let mut terms = TermMap::new();
        terms.insert(SparseExp::new(), BigInt::one());
        terms.insert(e, BigInt::from(-1));
        IndexedLaurent {
            mode: CoeffMode::KMultiplicative,
            terms,
        }
    }

    /// The generator a_i in H mode.
    pub fn a(i: i64) -> Self {
        let mut e = SparseExp::new();
        e.insert(i, 1);
        Self::monomial(CoeffMode::HAdditive, e, BigInt::one()).unwrap()
    }

    /// c(a_i − a_{i+1}): 1 − e^{a_i−a_{i+1}} in K mode, a_i − a_{i+1} in
    /// H mode.
    pub fn c_simple(mode: CoeffMode, i: i64) -> Self {
        match mode {
            CoeffMode::KMultiplicative => {
                let mut e = SparseExp::new();
                e.insert(i, 1);
                e.insert(i + 1, -1);
                let mut terms = TermMap::new();
                terms.insert(SparseExp::new(), BigInt::one());
                terms.insert(e, BigInt::from(-1));
                IndexedLaurent { mode, terms }
            }
            CoeffMode::HAdditive => Self::a(i).sub(&Self::a(i + 1)).unwrap(),
        }
    }

    pub fn mode(&self) -> CoeffMode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&SparseExp::new())
                .map_or(false, |c| c.is_one())
    }

    /// The set of indices appearing with nonzero exponent in some term.
    pub fn window(&self) -> BTreeSet<i64> {
        let mut w = BTreeSet::new();
        for e in self.terms.keys() {
            w.extend(e.keys().copied());
        }
        w
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.mode != other.mode {
            return Err(Error::ModeMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(IndexedLaurent {
            mode: self.mode,
            terms: engine::add(&self.terms, &other.terms),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(IndexedLaurent {
            mode: self.mode,
            terms: engine::sub(&self.terms, &other.terms),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(IndexedLaurent {
            mode: self.mode,
            terms: engine::mul(&self.terms, &other.terms),
        })
    }

    pub fn neg(&self) -> Self {
        IndexedLaurent {
            mode: self.mode,
            terms: engine::neg(&self.terms),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IndexedLaurent {
            mode: self.mode,
            terms: engine::scale(&self.terms, k),
        }
    }

    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        self.check(d)?;
        Ok(IndexedLaurent {
            mode: self.mode,
            terms: engine::exact_divide(&self.terms, &d.terms)?,
        })
    }

    pub fn monomial_inverse(&self) -> Result<Self> {
        if self.terms.len() != 1 {
            return Err(Error::NotInvertible("need a unit monomial".into()));
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if !(c.is_one() || (-c).is_one()) {
            return Err(Error::NotInvertible("coefficient is not ±1".into()));
        }
        if self.mode == CoeffMode::HAdditive && !e.is_empty() {
            return Err(Error::NotInvertible("non-constant in additive mode".into()));
        }
        let mut terms = TermMap::new();
        terms.insert(e.neg(), c.clone());
        Ok(IndexedLaurent {
            mode: self.mode,
            terms,
        })
    }

    /// s_i: exchange the indices i and i+1. A ring automorphism.
    pub fn swap(&self, i: i64) -> Self {
        IndexedLaurent {
            mode: self.mode,
            terms: engine::map_exponents(&self.terms, |e| {
                let mut out = e.clone();
                let vi = out.remove(&i).unwrap_or(0);
                let vj = out.remove(&(i + 1)).unwrap_or(0);
                if vj != 0 {
                    out.insert(i, vj);
                }
                if vi != 0 {
                    out.insert(i + 1, vi);
                }
                out
            }),
        }
    }

    /// Shift all indices by m (the substitution a_i ↦ a_{i+m}).
    pub fn shift(&self, m: i64) -> Self {
        IndexedLaurent {
            mode: self.mode,
            terms: engine::map_exponents(&self.terms, |e| {
                e.iter().map(|(&k, &v)| (k + m, v)).collect()
            }),
        }
    }

    /// The finite-rank image under the index reduction i ↦ i mod n with
    /// representatives {1,...,n} (so b_0 ↦ b_n, b_{−1} ↦ b_{n−1}, ...).
    pub fn reduce_mod(&self, n: usize) -> LaurentPoly {
        let mut out = LaurentPoly::zero(n, self.mode);
        for (e, c) in &self.terms {
            let mut exp = vec![0i64; n];
            for (&idx, &v) in e {
                let slot = (idx - 1).rem_euclid(n as i64) as usize;
                exp[slot] += v;
            }
            let m = LaurentPoly::monomial(n, self.mode, exp, c.clone()).unwrap();
            out = out.add(&m).unwrap();
        }
        out
    }

    /// φ_0: every e^λ ↦ 1 (K), or evaluation at a = 0 (H).
    pub fn phi0(&self) -> BigInt {
        match self.mode {
            CoeffMode::KMultiplicative => engine::sum_coefficients(&self.terms),
            CoeffMode::HAdditive => self
                .terms
                .get(&SparseExp::new())
                .cloned()
                .unwrap_or_else(BigInt::zero),
        }
    }
}

impl fmt::Debug for IndexedLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*x{:?}", c, e)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_mod_examples() {
        // b_{−1} under the mod-3 rule is b_2.
        assert_eq!(IndexedLaurent::b(-1).reduce_mod(3), LaurentPoly::b(3, 2));
        // b_0 ↦ b_3 and b_4 ↦ b_1.
        assert_eq!(IndexedLaurent::b(0).reduce_mod(3), LaurentPoly::b(3, 3));
        assert_eq!(IndexedLaurent::b(4).reduce_mod(3), LaurentPoly::b(3, 1));
    }

    #[test]
    fn swap_is_involutive_automorphism() {
        let f = IndexedLaurent::b(0).mul(&IndexedLaurent::b(1)).unwrap();
        let g = IndexedLaurent::b(1).mul(&IndexedLaurent::exp_a(-2)).unwrap();
        assert_eq!(f.swap(0).swap(0), f);
        assert_eq!(
            f.mul(&g).unwrap().swap(0),
            f.swap(0).mul(&g.swap(0)).unwrap()
        );
    }

    #[test]
    fn divide_by_simple_c() {
        // (s_0 − 1) e^{a_0} = e^{a_1} − e^{a_0} is divisible by c(a_0−a_1).
        let f = IndexedLaurent::exp_a(1).sub(&IndexedLaurent::exp_a(0)).unwrap();
        let c = IndexedLaurent::c_simple(CoeffMode::KMultiplicative, 0);
        let q = f.exact_div(&c).unwrap();
        assert_eq!(q.mul(&c).unwrap(), f);
        assert_eq!(q, IndexedLaurent::exp_a(1));
    }
}
