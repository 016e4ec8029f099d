//! The finite-rank coefficient rings.
//!
//! In the multiplicative (K) mode a `LaurentPoly` is an element of
//! R(T) = Z[e^{±a_1},...,e^{±a_n}]: the exponent vector of a term is a
//! character λ and the term is coef·e^λ. In the additive (H) mode the
//! same storage carries Z[a_1,...,a_n] with the exponent vector a plain
//! monomial; negative exponents are rejected.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize};

use super::engine::{self, TermMap};
use super::exponent::ExpKey;
use crate::error::{Error, Result};
use crate::root_data::FinitePerm;

/// Selects the flavour of the coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CoeffMode {
    /// R(T): group ring of the character lattice, exponents in Z.
    KMultiplicative,
    /// Z[a_1,...,a_n]: polynomial ring, exponents nonnegative.
    HAdditive,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    rank: usize,
    mode: CoeffMode,
    terms: TermMap<Vec<i64>>,
}

impl LaurentPoly {
    pub fn zero(rank: usize, mode: CoeffMode) -> Self {
        LaurentPoly {
            rank,
            mode,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize, mode: CoeffMode) -> Self {
        Self::constant(rank, mode, BigInt::one())
    }

    pub fn constant(rank: usize, mode: CoeffMode, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; rank], c);
        }
        LaurentPoly { rank, mode, terms }
    }

    /// A single term coef·e^exp (K mode) or coef·a^exp (H mode).
    pub fn monomial(rank: usize, mode: CoeffMode, exp: Vec<i64>, coef: BigInt) -> Result<Self> {
        if exp.len() != rank {
            return Err(Error::RankMismatch(exp.len(), rank));
        }
        if mode == CoeffMode::HAdditive && exp.has_negative() {
            return Err(Error::NegativeExponent);
        }
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exp, coef);
        }
        Ok(LaurentPoly { rank, mode, terms })
    }

    /// e^λ in K mode.
    pub fn exp(rank: usize, lambda: Vec<i64>) -> Self {
        Self::monomial(rank, CoeffMode::KMultiplicative, lambda, BigInt::one()).unwrap()
    }

    /// b_i = 1 − e^{−a_i} (K mode, slots are 1-based).
    pub fn b(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i));
        let mut exp = vec![0i64; rank];
        exp[i - 1] = -1;
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; rank], BigInt::one());
        terms.insert(exp, BigInt::from(-1));
        LaurentPoly {
            rank,
            mode: CoeffMode::KMultiplicative,
            terms,
        }
    }

    /// The generator a_i in H mode (1-based).
    pub fn a(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i));
        let mut exp = vec![0i64; rank];
        exp[i - 1] = 1;
        Self::monomial(rank, CoeffMode::HAdditive, exp, BigInt::one()).unwrap()
    }

    /// c(α) = 1 − e^α in K mode; the linear form α itself in H mode.
    pub fn c_of(rank: usize, mode: CoeffMode, alpha: &[i64]) -> Result<Self> {
        if alpha.len() != rank {
            return Err(Error::RankMismatch(alpha.len(), rank));
        }
        match mode {
            CoeffMode::KMultiplicative => {
                let mut terms = BTreeMap::new();
                engine::insert_term(&mut terms, vec![0; rank], BigInt::one());
                engine::insert_term(&mut terms, alpha.to_vec(), BigInt::from(-1));
                Ok(LaurentPoly { rank, mode, terms })
            }
            CoeffMode::HAdditive => {
                let mut terms = BTreeMap::new();
                for (j, &c) in alpha.iter().enumerate() {
                    if c != 0 {
                        let mut exp = vec![0i64; rank];
                        exp[j] = 1;
                        engine::insert_term(&mut terms, exp, BigInt::from(c));
                    }
                }
                Ok(LaurentPoly { rank, mode, terms })
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
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
                .get(&vec![0i64; self.rank])
                .map_or(false, |c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        if self.mode != other.mode {
            return Err(Error::ModeMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(LaurentPoly {
            rank: self.rank,
            mode: self.mode,
            terms: engine::add(&self.terms, &other.terms),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(LaurentPoly {
            rank: self.rank,
            mode: self.mode,
            terms: engine::sub(&self.terms, &other.terms),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(LaurentPoly {
            rank: self.rank,
            mode: self.mode,
            terms: engine::mul(&self.terms, &other.terms),
        })
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            rank: self.rank,
            mode: self.mode,
            terms: engine::neg(&self.terms),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        LaurentPoly {
            rank: self.rank,
            mode: self.mode,
            terms: engine::scale(&self.terms, k),
        }
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        self.scale(&BigInt::from(k))
    }

    /// Exact division by a two-term divisor, e.g. e^μ − e^ν or a_i − a_j.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        self.check(d)?;
        let terms = engine::exact_divide(&self.terms, &d.terms)?;
        if self.mode == CoeffMode::HAdditive {
            debug_assert!(terms.keys().all(|e| !e.has_negative()));
        }
        Ok(LaurentPoly {
            rank: self.rank,
            mode: self.mode,
            terms,
        })
    }

    /// Multiplicative inverse, defined only for unit monomials ±e^λ.
    pub fn monomial_inverse(&self) -> Result<Self> {
        if self.terms.len() != 1 {
            return Err(Error::NotInvertible(format!(
                "{} terms, need a unit monomial",
                self.terms.len()
            )));
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if !(c.is_one() || (-c).is_one()) {
            return Err(Error::NotInvertible("coefficient is not ±1".into()));
        }
        if self.mode == CoeffMode::HAdditive && !e.iter().all(|&x| x == 0) {
            return Err(Error::NotInvertible("non-constant in additive mode".into()));
        }
        let mut terms = BTreeMap::new();
        terms.insert(e.neg(), c.clone());
        Ok(LaurentPoly {
            rank: self.rank,
            mode: self.mode,
            terms,
        })
    }

    /// Action of a finite Weyl element by permuting (and in signed types
    /// negating) the exponent slots. A ring automorphism.
    pub fn weyl_act(&self, u: &FinitePerm) -> Self {
        assert_eq!(u.rank(), self.rank);
        LaurentPoly {
            rank: self.rank,
            mode: self.mode,
            terms: engine::map_exponents(&self.terms, |e| u.act_on_vec(e)),
        }
    }

    /// ι: a_i ↦ −a_{n+1−i}, i.e. exponent-vector reversal and negation.
    /// K mode only; an involutive ring automorphism.
    pub fn involution_iota(&self) -> Self {
        assert_eq!(self.mode, CoeffMode::KMultiplicative);
        LaurentPoly {
            rank: self.rank,
            mode: self.mode,
            terms: engine::map_exponents(&self.terms, |e| {
                e.iter().rev().map(|&x| -x).collect()
            }),
        }
    }

    /// φ_0: e^λ ↦ 1 termwise (K mode). In H mode this is evaluation at
    /// a = 0, i.e. the constant coefficient.
    pub fn phi0(&self) -> BigInt {
        match self.mode {
            CoeffMode::KMultiplicative => engine::sum_coefficients(&self.terms),
            CoeffMode::HAdditive => self
                .terms
                .get(&vec![0i64; self.rank])
                .cloned()
                .unwrap_or_else(BigInt::zero),
        }
    }

    /// Total degree bounds of the stored exponents, None when zero.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        if self.terms.is_empty() {
            return None;
        }
        let degs = self.terms.keys().map(|e| e.iter().sum::<i64>());
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for d in degs {
            lo = lo.min(d);
            hi = hi.max(d);
        }
        Some((lo, hi))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let var = match self.mode {
            CoeffMode::KMultiplicative => "e",
            CoeffMode::HAdditive => "a",
        };
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e.is_zero() {
                write!(f, "{}", c)?;
            } else if self.mode == CoeffMode::KMultiplicative {
                write!(f, "{}*{}^{:?}", c, var, e)?;
            } else {
                write!(f, "{}*{}{:?}", c, var, e)?;
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            exp: &'a [i64],
            coef: String,
        }
        let mut st = s.serialize_struct("LaurentPoly", 2)?;
        st.serialize_field("rank", &self.rank)?;
        // BTreeMap iterates exponent vectors in lexicographic order.
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(e, c)| Term {
                exp: e,
                coef: c.to_string(),
            })
            .collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}
