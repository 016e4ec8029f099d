//! The coordinate ring of the centralizer family: pairs (t, Z) with Z
//! upper triangular commuting with the bidiagonal matrix A(t). The
//! defining relations (b_i − b_j)z_{ij} = z_{i,j−1} − z_{i+1,j} let
//! every z_{ij} with i ≥ 2 be rewritten over the first-row coordinates
//! z_{11},…,z_{1n}; the localization by the diagonal entries is tracked
//! as an explicit monomial denominator.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use crate::coeff::{CoeffMode, LaurentPoly, LaurentRing};
use crate::error::{Error, Result};
use crate::root_data::RootDatum;
use crate::symseries::SymSeries;

type KSeries = SymSeries<LaurentRing>;

/// Normal form: numerator over the z_{1k} coordinates, denominator a
/// monomial in the diagonal entries z_{ii}.
#[derive(Clone, PartialEq, Eq)]
pub struct ZExpression {
    n: usize,
    /// exponent vector over z_{11},…,z_{1n} → coefficient in R(T)
    num: BTreeMap<Vec<u32>, LaurentPoly>,
    /// den[i−1] = power of z_{ii} in the denominator
    den: Vec<u32>,
}

impl std::fmt::Debug for ZExpression {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ZExpr(num {} terms / den {:?})", self.num.len(), self.den)
    }
}

pub struct ZRing {
    datum: Arc<RootDatum>,
    n: usize,
    nf_cache: RwLock<HashMap<(usize, usize), ZExpression>>,
}

impl ZRing {
    pub fn new(datum: &Arc<RootDatum>) -> Self {
        assert!(datum.is_type_a());
        ZRing {
            datum: datum.clone(),
            n: datum.n(),
            nf_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn rank(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> ZExpression {
        ZExpression {
            n: self.n,
            num: BTreeMap::new(),
            den: vec![0; self.n],
        }
    }

    pub fn one(&self) -> ZExpression {
        self.scalar(LaurentPoly::one(self.rank(), CoeffMode::KMultiplicative))
    }

    pub fn scalar(&self, c: LaurentPoly) -> ZExpression {
        let mut num = BTreeMap::new();
        if !c.is_zero() {
            num.insert(vec![0; self.n], c);
        }
        ZExpression {
            n: self.n,
            num,
            den: vec![0; self.n],
        }
    }

    /// The first-row generator z_{1j}.
    pub fn first_row(&self, j: usize) -> ZExpression {
        let mut exp = vec![0u32; self.n];
        exp[j - 1] = 1;
        let mut num = BTreeMap::new();
        num.insert(exp, LaurentPoly::one(self.rank(), CoeffMode::KMultiplicative));
        ZExpression {
            n: self.n,
            num,
            den: vec![0; self.n],
        }
    }

    fn b(&self, i: usize) -> LaurentPoly {
        LaurentPoly::b(self.rank(), i)
    }

    /// Normal form of the generator z_{ij} (1 ≤ i ≤ j ≤ n): rows below
    /// the first are rewritten by z_{ij} = z_{i−1,j−1} − (b_{i−1}−b_j)·z_{i−1,j},
    /// recursing with increasing i then j.
    pub fn generator(&self, i: usize, j: usize) -> Result<ZExpression> {
        if i > j || j > self.n || i == 0 {
            return Err(Error::IndexOutOfRange(j as i64));
        }
        if let Some(hit) = self.nf_cache.read().unwrap().get(&(i, j)) {
            return Ok(hit.clone());
        }
        let out = if i == 1 {
            self.first_row(j)
        } else {
            let a = self.generator(i - 1, j - 1)?;
            let bb = self.generator(i - 1, j)?;
            let c = self.b(i - 1).sub(&self.b(j))?;
            self.sub(&a, &self.scalar_mul(&bb, &c))
        };
        self.nf_cache.write().unwrap().insert((i, j), out.clone());
        Ok(out)
    }

    /// z_{ii}^{-1}.
    pub fn diag_inverse(&self, i: usize) -> ZExpression {
        let mut out = self.one();
        out.den[i - 1] = 1;
        out
    }

    fn insert(&self, map: &mut BTreeMap<Vec<u32>, LaurentPoly>, exp: Vec<u32>, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match map.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c).unwrap();
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Raise an expression to the common denominator `den` by
    /// multiplying the numerator with the diagonal images.
    fn lift(&self, e: &ZExpression, den: &[u32]) -> BTreeMap<Vec<u32>, LaurentPoly> {
        let mut extra = self.one();
        for i in 1..=self.n {
            let diff = den[i - 1] - e.den[i - 1];
            for _ in 0..diff {
                extra = self.mul_raw(&extra.num, &self.generator(i, i).unwrap().num, &extra.den);
            }
        }
        self.mul_raw(&e.num, &extra.num, &e.den).num
    }

    fn mul_raw(
        &self,
        a: &BTreeMap<Vec<u32>, LaurentPoly>,
        b: &BTreeMap<Vec<u32>, LaurentPoly>,
        den: &[u32],
    ) -> ZExpression {
        let mut num = BTreeMap::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                self.insert(&mut num, exp, ca.mul(cb).unwrap());
            }
        }
        ZExpression {
            n: self.n,
            num,
            den: den.to_vec(),
        }
    }

    pub fn add(&self, a: &ZExpression, b: &ZExpression) -> ZExpression {
        let den: Vec<u32> = a.den.iter().zip(&b.den).map(|(x, y)| *x.max(y)).collect();
        let mut num = self.lift(a, &den);
        for (e, c) in self.lift(b, &den) {
            self.insert(&mut num, e, c);
        }
        ZExpression { n: self.n, num, den }
    }

    pub fn sub(&self, a: &ZExpression, b: &ZExpression) -> ZExpression {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &ZExpression) -> ZExpression {
        ZExpression {
            n: self.n,
            num: a.num.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
            den: a.den.clone(),
        }
    }

    pub fn mul(&self, a: &ZExpression, b: &ZExpression) -> ZExpression {
        let den: Vec<u32> = a.den.iter().zip(&b.den).map(|(x, y)| x + y).collect();
        self.mul_raw(&a.num, &b.num, &den)
    }

    pub fn scalar_mul(&self, a: &ZExpression, c: &LaurentPoly) -> ZExpression {
        ZExpression {
            n: self.n,
            num: a
                .num
                .iter()
                .filter_map(|(e, x)| {
                    let p = x.mul(c).unwrap();
                    if p.is_zero() {
                        None
                    } else {
                        Some((e.clone(), p))
                    }
                })
                .collect(),
            den: a.den.clone(),
        }
    }

    /// Equality after raising to a common denominator (the underlying
    /// ring is a domain, so no spurious cancellation).
    pub fn eq(&self, a: &ZExpression, b: &ZExpression) -> bool {
        let den: Vec<u32> = a.den.iter().zip(&b.den).map(|(x, y)| *x.max(y)).collect();
        self.lift(a, &den) == self.lift(b, &den)
    }

    pub fn is_zero(&self, a: &ZExpression) -> bool {
        a.num.is_empty()
    }

    /// The image of the defining relation
    /// (b_i−b_j) z_{ij} − z_{i,j−1} + z_{i+1,j}; identically zero in
    /// normal form.
    pub fn relation(&self, i: usize, j: usize) -> Result<ZExpression> {
        if !(1 <= i && i < j && j <= self.n) {
            return Err(Error::IndexOutOfRange(j as i64));
        }
        let zij = self.generator(i, j)?;
        let left = self.scalar_mul(&zij, &self.b(i).sub(&self.b(j))?);
        let z_left = self.generator(i, j - 1)?;
        let z_down = self.generator(i + 1, j)?;
        Ok(self.add(&self.sub(&left, &z_left), &z_down))
    }

    // -----------------------------------------------------------------
    // The extended affine Weyl action.
    // -----------------------------------------------------------------

    /// s_i as a ring automorphism: permutes the coefficients and
    /// rewrites the first-row generators per the matrix conjugation
    /// rules, then renormalizes.
    pub fn s_act(&self, i: usize, e: &ZExpression) -> ZExpression {
        debug_assert!((1..self.n).contains(&i));
        let u = self.datum.simple_reflection_perm(i);
        // images of the first-row generators
        let images: Vec<ZExpression> = (1..=self.n)
            .map(|l| {
                if i == 1 && l == 1 {
                    // s_1(z_{11}) = z_{22}
                    self.generator(2, 2).unwrap()
                } else if i >= 2 && l == i {
                    // s_i(z_{1i}) = z_{1i} + (b_{i+1}−b_i) z_{1,i+1}
                    let c = self.b(i + 1).sub(&self.b(i)).unwrap();
                    self.add(
                        &self.first_row(i),
                        &self.scalar_mul(&self.first_row(i + 1), &c),
                    )
                } else {
                    self.first_row(l)
                }
            })
            .collect();
        let mut out = self.zero();
        for (exp, c) in &e.num {
            let mut term = self.scalar(c.weyl_act(&u));
            for (l, &p) in exp.iter().enumerate() {
                for _ in 0..p {
                    term = self.mul(&term, &images[l]);
                }
            }
            out = self.add(&out, &term);
        }
        // denominator indices are permuted: s_i(z_{jj}) swaps j = i, i+1
        let mut den = out.den.clone();
        let mut src = e.den.clone();
        src.swap(i - 1, i);
        for (d, s) in den.iter_mut().zip(&src) {
            *d += s;
        }
        ZExpression {
            n: self.n,
            num: out.num,
            den,
        }
    }

    /// Action of a finite permutation word (used for s_θ).
    fn s_act_word(&self, word: &[usize], e: &ZExpression) -> ZExpression {
        let mut cur = e.clone();
        for &i in word.iter().rev() {
            cur = self.s_act(i, &cur);
        }
        cur
    }

    fn s_theta_word(&self) -> Vec<usize> {
        // (1, n) = s_1 s_2 ⋯ s_{n−1} ⋯ s_2 s_1
        let mut w: Vec<usize> = (1..self.n).collect();
        w.extend((1..self.n - 1).rev());
        w
    }

    /// t_{ε_i}(f) = z_{ii}·f, t_{−ε_i}(f) = z_{ii}^{-1}·f.
    pub fn translation_act(&self, i: usize, positive: bool, e: &ZExpression) -> ZExpression {
        if positive {
            self.mul(&self.generator(i, i).unwrap(), e)
        } else {
            self.mul(&self.diag_inverse(i), e)
        }
    }

    /// s_0(f) = z_{11} z_{nn}^{-1} s_θ(f).
    pub fn s0_act(&self, e: &ZExpression) -> ZExpression {
        let conj = self.s_act_word(&self.s_theta_word(), e);
        self.mul(
            &self.mul(&self.generator(1, 1).unwrap(), &self.diag_inverse(self.n)),
            &conj,
        )
    }

    // -----------------------------------------------------------------
    // The symmetric-series realization.
    // -----------------------------------------------------------------

    /// β(z_{ij}) = ĥ_{j−i}(y|b_i,…,b_j).
    pub fn beta_generator(&self, i: usize, j: usize, cap: u32) -> KSeries {
        let ring = LaurentRing::k(self.rank());
        let params: Vec<LaurentPoly> = (i..=j).map(|l| self.b(l)).collect();
        SymSeries::hhat(&ring, cap, (j - i) as u32, &params)
    }

    /// β applied to a normal form: numerator monomials map to products
    /// of ĥ's, diagonal inverses to Ω(b_i)^{-1}.
    pub fn beta(&self, e: &ZExpression, cap: u32) -> KSeries {
        let ring = LaurentRing::k(self.rank());
        let mut out = SymSeries::zero(&ring, cap);
        let images: Vec<KSeries> = (1..=self.n).map(|l| self.beta_generator(1, l, cap)).collect();
        for (exp, c) in &e.num {
            let mut term = SymSeries::constant(&ring, cap, c.clone());
            for (l, &p) in exp.iter().enumerate() {
                for _ in 0..p {
                    term = term.mul(&images[l]);
                }
            }
            out = out.add(&term);
        }
        for i in 1..=self.n {
            for _ in 0..e.den[i - 1] {
                let om_inv = SymSeries::omega(&ring, cap, &self.b(i)).invert().unwrap();
                out = out.mul(&om_inv);
            }
        }
        out
    }

    /// β_PGL(z_{ij}/z_{11}) = β(z_{ij})·β(z_{11})^{-1}, a degree-zero
    /// class of the quotient family.
    pub fn beta_pgl(&self, i: usize, j: usize, cap: u32) -> Result<KSeries> {
        if !(1 <= i && i <= j && j <= self.n) {
            return Err(Error::IndexOutOfRange(j as i64));
        }
        let ring = LaurentRing::k(self.rank());
        let om1_inv = SymSeries::omega(&ring, cap, &self.b(1)).invert().unwrap();
        Ok(self.beta_generator(i, j, cap).mul(&om1_inv))
    }
}
