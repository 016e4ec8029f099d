//! The affine level-zero K-nil-Hecke ring in its T-basis: exact
//! products, the action on R(T), and the D-elements.
//!
//! Elements are finite R(T)-combinations Σ f_w T_w. Products expand the
//! left factor along reduced words and push coefficients through the
//! derivation rule T_i f = T_i(f) + s_i(f) T_i; everything stays in the
//! T-basis over R(T), no denominators ever appear.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use crate::coeff::{CoeffMode, LaurentPoly};
use crate::error::{Error, Result};
use crate::ext_weyl::ExtWeylElement;
use crate::root_data::{FinitePerm, RootDatum};

#[derive(Clone, PartialEq, Eq)]
pub struct NilHeckeElement {
    datum: Arc<RootDatum>,
    terms: BTreeMap<ExtWeylElement, LaurentPoly>,
}

impl std::fmt::Debug for NilHeckeElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, "  +  ")?;
            }
            first = false;
            write!(f, "({}) T_{:?}", c, w)?;
        }
        Ok(())
    }
}

impl NilHeckeElement {
    pub fn zero(datum: &Arc<RootDatum>) -> Self {
        NilHeckeElement {
            datum: datum.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// T_w with coefficient 1.
    pub fn t_basis(w: &ExtWeylElement) -> Self {
        let datum = w.datum().clone();
        let mut terms = BTreeMap::new();
        terms.insert(w.clone(), LaurentPoly::one(datum.n(), CoeffMode::KMultiplicative));
        NilHeckeElement { datum, terms }
    }

    pub fn one(datum: &Arc<RootDatum>) -> Self {
        Self::t_basis(&ExtWeylElement::identity(datum))
    }

    /// f·T_w.
    pub fn term(w: &ExtWeylElement, f: LaurentPoly) -> Self {
        let datum = w.datum().clone();
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(w.clone(), f);
        }
        NilHeckeElement { datum, terms }
    }

    /// The scalar f·T_id.
    pub fn scalar(datum: &Arc<RootDatum>, f: LaurentPoly) -> Self {
        Self::term(&ExtWeylElement::identity(datum), f)
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExtWeylElement, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &ExtWeylElement) -> LaurentPoly {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(self.datum.n(), CoeffMode::KMultiplicative))
    }

    fn insert(&mut self, w: ExtWeylElement, f: LaurentPoly) {
        if f.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(f);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&f).expect("coefficient rank mismatch");
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.datum == other.datum, "datum mismatch");
        let mut out = self.clone();
        for (w, f) in &other.terms {
            out.insert(w.clone(), f.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert!(self.datum == other.datum, "datum mismatch");
        let mut out = self.clone();
        for (w, f) in &other.terms {
            out.insert(w.clone(), f.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        NilHeckeElement {
            datum: self.datum.clone(),
            terms: self.terms.iter().map(|(w, f)| (w.clone(), f.neg())).collect(),
        }
    }

    /// Left multiplication by a scalar f ∈ R(T).
    pub fn scalar_mul(&self, f: &LaurentPoly) -> Self {
        let mut out = NilHeckeElement::zero(&self.datum);
        for (w, g) in &self.terms {
            out.insert(w.clone(), f.mul(g).expect("rank mismatch"));
        }
        out
    }

    /// Support restricted to affine Grassmannian indices.
    pub fn grassmannian_part(&self) -> Vec<(ExtWeylElement, LaurentPoly)> {
        self.terms
            .iter()
            .filter(|(w, _)| w.is_grassmannian())
            .map(|(w, f)| (w.clone(), f.clone()))
            .collect()
    }

    pub fn has_grassmannian_support(&self) -> bool {
        self.terms.keys().any(|w| w.is_grassmannian())
    }

    pub fn json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(w, f)| {
                serde_json::json!({
                    "element": crate::ext_weyl::element_json(w),
                    "coef": f,
                })
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }
}

/// Ring context: owns the datum and the memo caches for T-basis
/// expansions of group elements and for D-elements. Caches take
/// concurrent readers with serialized insertion.
pub struct NilHecke {
    datum: Arc<RootDatum>,
    group_cache: RwLock<HashMap<ExtWeylElement, NilHeckeElement>>,
    d_cache: RwLock<HashMap<ExtWeylElement, NilHeckeElement>>,
}

impl NilHecke {
    pub fn new(datum: &Arc<RootDatum>) -> Self {
        NilHecke {
            datum: datum.clone(),
            group_cache: RwLock::new(HashMap::new()),
            d_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    fn rank(&self) -> usize {
        self.datum.n()
    }

    fn mode(&self) -> CoeffMode {
        CoeffMode::KMultiplicative
    }

    /// The finite reflection underlying s_i at level zero (s_θ for i=0).
    fn classical_perm(&self, i: usize) -> FinitePerm {
        if i == 0 {
            self.datum.s_theta_perm()
        } else {
            self.datum.simple_reflection_perm(i)
        }
    }

    /// The classical root α_i, with α_0 = −θ.
    fn classical_root(&self, i: usize) -> Vec<i64> {
        if i == 0 {
            self.datum.alpha_zero()
        } else {
            self.datum.simple_root(i).to_vec()
        }
    }

    pub fn c_alpha(&self, i: usize) -> LaurentPoly {
        LaurentPoly::c_of(self.rank(), self.mode(), &self.classical_root(i)).unwrap()
    }

    /// Level-zero action of s_i on R(T).
    pub fn s_act(&self, i: usize, f: &LaurentPoly) -> LaurentPoly {
        f.weyl_act(&self.classical_perm(i))
    }

    /// The divided difference T_i(f) = c(α_i)^{-1}(s_i(f) − f), exact.
    pub fn t_act(&self, i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
        let num = self.s_act(i, f).sub(f)?;
        if num.is_zero() {
            return Ok(LaurentPoly::zero(self.rank(), self.mode()));
        }
        num.exact_div(&self.c_alpha(i))
    }

    /// Left multiplication by T_i via the derivation rule.
    pub fn t_mul(&self, i: usize, x: &NilHeckeElement) -> NilHeckeElement {
        let mut out = NilHeckeElement::zero(&self.datum);
        let si = ExtWeylElement::simple_reflection(&self.datum, i);
        for (w, g) in &x.terms {
            let tg = self.t_act(i, g).expect("divided difference must be exact");
            out.insert(w.clone(), tg);
            let sg = self.s_act(i, g);
            let siw = si.multiply(w);
            if siw.length() > w.length() {
                out.insert(siw, sg);
            } else {
                out.insert(w.clone(), sg.neg());
            }
        }
        out
    }

    /// Left multiplication by D_i = T_i + 1.
    pub fn d_mul(&self, i: usize, x: &NilHeckeElement) -> NilHeckeElement {
        self.t_mul(i, x).add(x)
    }

    /// Left multiplication by a fundamental element of class m:
    /// π·(g T_w) = π(g)·T_{πw}.
    pub fn pi_mul(&self, m: i64, x: &NilHeckeElement) -> NilHeckeElement {
        if m == 0 {
            return x.clone();
        }
        let pi = ExtWeylElement::fundamental(&self.datum, m);
        let u = pi.finite_part();
        let mut out = NilHeckeElement::zero(&self.datum);
        for (w, g) in &x.terms {
            out.insert(pi.multiply(w), g.weyl_act(u));
        }
        out
    }

    /// T_w · x for a group element w, along the canonical reduced word.
    pub fn t_basis_mul(&self, w: &ExtWeylElement, x: &NilHeckeElement) -> NilHeckeElement {
        let word = w.reduced_word();
        let mut cur = x.clone();
        for &i in word.word.iter().rev() {
            cur = self.t_mul(i, &cur);
        }
        self.pi_mul(word.class, &cur)
    }

    /// The ring product, expanding the left factor termwise.
    pub fn multiply(&self, a: &NilHeckeElement, b: &NilHeckeElement) -> NilHeckeElement {
        assert!(a.datum == self.datum && b.datum == self.datum, "datum mismatch");
        let mut out = NilHeckeElement::zero(&self.datum);
        for (w, f) in &a.terms {
            let tw_b = self.t_basis_mul(w, b);
            out = out.add(&tw_b.scalar_mul(f));
        }
        out
    }

    /// Expansion of a group element in the T-basis via s_i = 1 + c(α_i)T_i.
    pub fn group_to_t(&self, w: &ExtWeylElement) -> NilHeckeElement {
        if let Some(hit) = self.group_cache.read().unwrap().get(w) {
            return hit.clone();
        }
        let word = w.reduced_word();
        let mut cur = NilHeckeElement::one(&self.datum);
        for &i in word.word.iter().rev() {
            // s_i·X = X + c(α_i)·(T_i·X)
            cur = cur.add(&self.t_mul(i, &cur).scalar_mul(&self.c_alpha(i)));
        }
        cur = self.pi_mul(word.class, &cur);
        self.group_cache
            .write()
            .unwrap()
            .insert(w.clone(), cur.clone());
        cur
    }

    /// D_w = Π D_i along a reduced word, times the fundamental part.
    pub fn d_of(&self, w: &ExtWeylElement) -> NilHeckeElement {
        if let Some(hit) = self.d_cache.read().unwrap().get(w) {
            return hit.clone();
        }
        let word = w.reduced_word();
        let mut cur = NilHeckeElement::one(&self.datum);
        for &i in word.word.iter().rev() {
            cur = self.d_mul(i, &cur);
        }
        cur = self.pi_mul(word.class, &cur);
        self.d_cache.write().unwrap().insert(w.clone(), cur.clone());
        cur
    }

    /// The level-zero action on R(T): translations act trivially, T_i by
    /// divided differences, the fundamental part by its finite Weyl part.
    pub fn act_on_ring(&self, a: &NilHeckeElement, f: &LaurentPoly) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero(self.rank(), self.mode());
        for (w, g) in &a.terms {
            let word = w.reduced_word();
            let mut val = f.clone();
            for &i in word.word.iter().rev() {
                val = self.t_act(i, &val)?;
                if val.is_zero() {
                    break;
                }
            }
            if word.class != 0 {
                let pi = ExtWeylElement::fundamental(&self.datum, word.class);
                val = val.weyl_act(pi.finite_part());
            }
            out = out.add(&g.mul(&val)?)?;
        }
        Ok(out)
    }

    /// T_α = u T_i u^{-1} for a positive root α, with ℓ(u) minimal and
    /// ties broken by the smaller i.
    pub fn t_alpha(&self, alpha: &[i64]) -> Result<NilHeckeElement> {
        let (i, u) = self.reflection_conjugator(alpha)?;
        let ti = NilHeckeElement::t_basis(&ExtWeylElement::simple_reflection(&self.datum, i));
        if u.is_identity() {
            return Ok(ti);
        }
        let ue = ExtWeylElement::from_perm(&self.datum, u);
        let left = self.group_to_t(&ue);
        let right = self.group_to_t(&ue.inverse());
        Ok(self.multiply(&self.multiply(&left, &ti), &right))
    }

    /// Minimal-length u with u(α_i) = α, scanning BFS levels of W.
    fn reflection_conjugator(&self, alpha: &[i64]) -> Result<(usize, FinitePerm)> {
        let m = self.datum.num_simple();
        let mut frontier = vec![FinitePerm::identity(self.datum.n())];
        let mut seen = frontier.clone();
        loop {
            for u in &frontier {
                for i in 1..=m {
                    if u.act_on_vec(self.datum.simple_root(i)) == alpha {
                        return Ok((i, u.clone()));
                    }
                }
            }
            let mut next = Vec::new();
            for u in &frontier {
                for i in 1..=m {
                    let v = self.datum.simple_reflection_perm(i).compose(u);
                    if !seen.contains(&v) {
                        seen.push(v.clone());
                        next.push(v);
                    }
                }
            }
            if next.is_empty() {
                return Err(Error::Unsupported(format!(
                    "{:?} is not in the root system",
                    alpha
                )));
            }
            frontier = next;
        }
    }
}
