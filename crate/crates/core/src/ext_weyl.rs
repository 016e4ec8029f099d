//! The extended affine Weyl group W̃ = X∨ ⋊ W: element arithmetic,
//! length, reduced words, Bruhat order, affine Grassmannian elements,
//! partition bijections, and the named special elements.
//!
//! The canonical form of an element is the pair (λ, u) with w = t_λ·u;
//! words are derived views. Affine roots are pairs (α, m) of a finite
//! root and a level, with w(α, m) = (u(α), m − ⟨λ, u(α)⟩).

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::root_data::{FinitePerm, GroupKind, RootDatum};

#[derive(Clone)]
pub struct ExtWeylElement {
    datum: Arc<RootDatum>,
    trans: Vec<i64>,
    perm: FinitePerm,
}

impl PartialEq for ExtWeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.datum == other.datum && self.trans == other.trans && self.perm == other.perm
    }
}
impl Eq for ExtWeylElement {}

impl Hash for ExtWeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.datum.kind().hash(state);
        self.datum.n().hash(state);
        self.trans.hash(state);
        self.perm.hash(state);
    }
}

impl Ord for ExtWeylElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.datum.kind(), self.datum.n(), &self.trans, &self.perm).cmp(&(
            other.datum.kind(),
            other.datum.n(),
            &other.trans,
            &other.perm,
        ))
    }
}
impl PartialOrd for ExtWeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExtWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{:?}*{:?}", self.trans, self.perm)
    }
}

/// π together with a word in Ĩ; evaluates to π·s_{w_1}⋯s_{w_l}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineWord {
    /// Fundamental-group class (τ-power for GL, node for PGL, parity
    /// for adjoint C, always 0 for SL).
    pub class: i64,
    pub word: Vec<usize>,
}

impl ExtWeylElement {
    pub fn identity(datum: &Arc<RootDatum>) -> Self {
        ExtWeylElement {
            datum: datum.clone(),
            trans: vec![0; datum.n()],
            perm: FinitePerm::identity(datum.n()),
        }
    }

    pub fn translation(datum: &Arc<RootDatum>, coweight: Vec<i64>) -> Self {
        debug_assert!(
            datum.kind() != GroupKind::Sl || coweight.iter().sum::<i64>() == 0,
            "SL translations must have coordinate sum zero"
        );
        ExtWeylElement {
            datum: datum.clone(),
            trans: datum.canonicalize_coweight(coweight),
            perm: FinitePerm::identity(datum.n()),
        }
    }

    pub fn from_perm(datum: &Arc<RootDatum>, perm: FinitePerm) -> Self {
        ExtWeylElement {
            datum: datum.clone(),
            trans: vec![0; datum.n()],
            perm,
        }
    }

    pub fn new(datum: &Arc<RootDatum>, trans: Vec<i64>, perm: FinitePerm) -> Self {
        ExtWeylElement {
            datum: datum.clone(),
            trans: datum.canonicalize_coweight(trans),
            perm,
        }
    }

    /// s_i for i ∈ Ĩ = {0, 1, ..., num_simple}. s_0 = t_{θ∨} s_θ.
    pub fn simple_reflection(datum: &Arc<RootDatum>, i: usize) -> Self {
        if i == 0 {
            ExtWeylElement::new(
                datum,
                datum.theta_coroot().to_vec(),
                datum.s_theta_perm(),
            )
        } else {
            ExtWeylElement::from_perm(datum, datum.simple_reflection_perm(i))
        }
    }

    /// The fundamental-group element of class m (τ^m for GL).
    pub fn fundamental(datum: &Arc<RootDatum>, m: i64) -> Self {
        let (t, u) = datum.fundamental_element(m);
        ExtWeylElement::new(datum, t, u)
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn translation_part(&self) -> &[i64] {
        &self.trans
    }

    pub fn finite_part(&self) -> &FinitePerm {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.trans.iter().all(|&x| x == 0) && self.perm.is_identity()
    }

    pub fn is_translation(&self) -> bool {
        self.perm.is_identity()
    }

    fn same_datum(&self, other: &Self) {
        assert!(
            self.datum == other.datum,
            "root datum mismatch: {:?}_{} vs {:?}_{}",
            self.datum.kind(),
            self.datum.n(),
            other.datum.kind(),
            other.datum.n()
        );
    }

    /// Group law (t_λ u)(t_μ v) = t_{λ+u(μ)} (uv).
    pub fn multiply(&self, other: &Self) -> Self {
        self.same_datum(other);
        let mut t = self.perm.act_on_vec(&other.trans);
        for (a, b) in t.iter_mut().zip(&self.trans) {
            *a += b;
        }
        ExtWeylElement::new(&self.datum, t, self.perm.compose(&other.perm))
    }

    pub fn inverse(&self) -> Self {
        let ui = self.perm.inverse();
        let t: Vec<i64> = ui.act_on_vec(&self.trans).iter().map(|x| -x).collect();
        ExtWeylElement::new(&self.datum, t, ui)
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = ExtWeylElement::identity(&self.datum);
        for _ in 0..k.abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// Image of the affine root (α, m); returns the new pair.
    fn act_affine_root(&self, alpha: &[i64], level: i64) -> (Vec<i64>, i64) {
        let beta = self.perm.act_on_vec(alpha);
        let new_level = level - self.datum.pairing(&self.trans, &beta);
        (beta, new_level)
    }

    /// Iwahori–Matsumoto length: the number of positive affine real
    /// roots sent negative.
    pub fn length(&self) -> usize {
        let d = &self.datum;
        let mut total: i64 = 0;
        for alpha in d.positive_roots() {
            for sign in [1i64, -1] {
                let a: Vec<i64> = alpha.iter().map(|x| sign * x).collect();
                let (beta, _) = self.act_affine_root(&a, 0);
                let c = self.datum.pairing(&self.trans, &beta);
                let floor = if sign > 0 { 0 } else { 1 };
                let cnt = (c - floor).max(0);
                total += cnt;
                if !is_positive_root(&beta) && c >= floor {
                    total += 1;
                }
            }
        }
        total as usize
    }

    /// True if ℓ(s_i w) < ℓ(w), i ∈ Ĩ.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let d = &self.datum;
        if i == 0 {
            // w^{-1}(−θ + δ) = (−u^{-1}θ, 1 − ⟨λ, θ⟩)
            let lvl = 1 - d.pairing(&self.trans, d.theta());
            if lvl != 0 {
                return lvl < 0;
            }
            let ut = self.perm.inverse().act_on_vec(d.theta());
            is_positive_root(&ut)
        } else {
            let alpha = d.simple_root(i);
            let lvl = d.pairing(&self.trans, alpha);
            if lvl != 0 {
                return lvl < 0;
            }
            let ua = self.perm.inverse().act_on_vec(alpha);
            !is_positive_root(&ua)
        }
    }

    /// True if ℓ(w s_i) < ℓ(w), i ∈ Ĩ.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let d = &self.datum;
        if i == 0 {
            let ut = self.perm.act_on_vec(d.theta());
            let lvl = 1 + d.pairing(&self.trans, &ut);
            if lvl != 0 {
                return lvl < 0;
            }
            is_positive_root(&ut)
        } else {
            let ua = self.perm.act_on_vec(d.simple_root(i));
            let lvl = -d.pairing(&self.trans, &ua);
            if lvl != 0 {
                return lvl < 0;
            }
            !is_positive_root(&ua)
        }
    }

    /// Affine Grassmannian test: no right descents in I.
    pub fn is_grassmannian(&self) -> bool {
        (1..=self.datum.num_simple()).all(|i| !self.has_right_descent(i))
    }

    pub fn fundamental_class(&self) -> i64 {
        self.datum.fundamental_class(&self.trans)
    }

    /// Split w = π·v with π fundamental and v in the affine Weyl group;
    /// returns (class of π, v).
    pub fn fundamental_split(&self) -> (i64, ExtWeylElement) {
        let m = self.fundamental_class();
        let pi_inv = ExtWeylElement::fundamental(&self.datum, m).inverse();
        (m, pi_inv.multiply(self))
    }

    /// Canonical reduced word: the smallest left descent is stripped
    /// greedily; the fundamental part is reported up front.
    pub fn reduced_word(&self) -> AffineWord {
        let num = self.datum.num_simple();
        let mut cur = self.clone();
        let mut len = cur.length();
        let mut left_letters = Vec::with_capacity(len);
        while len > 0 {
            let i = (0..=num)
                .find(|&i| cur.has_left_descent(i))
                .expect("positive length but no descent");
            left_letters.push(i);
            cur = ExtWeylElement::simple_reflection(&self.datum, i).multiply(&cur);
            len -= 1;
        }
        let m = cur.fundamental_class();
        debug_assert_eq!(cur, ExtWeylElement::fundamental(&self.datum, m));
        // w = s_{i_1}⋯s_{i_l}·π = π·s_{π^{-1}(i_1)}⋯s_{π^{-1}(i_l)}.
        let word = left_letters
            .into_iter()
            .map(|i| dynkin_node(&self.datum, -m, i))
            .collect();
        AffineWord { class: m, word }
    }

    pub fn from_word(datum: &Arc<RootDatum>, w: &AffineWord) -> Self {
        let mut out = ExtWeylElement::fundamental(datum, w.class);
        for &i in &w.word {
            out = out.multiply(&ExtWeylElement::simple_reflection(datum, i));
        }
        out
    }

    /// All v ≤ w, by deduplicated subword evaluation on the canonical
    /// reduced word.
    pub fn bruhat_ideal(&self) -> BTreeSet<ExtWeylElement> {
        let (m, v) = self.fundamental_split();
        let word = v.reduced_word();
        debug_assert_eq!(word.class, 0);
        let mut set: BTreeSet<ExtWeylElement> = BTreeSet::new();
        set.insert(ExtWeylElement::identity(&self.datum));
        for &i in &word.word {
            let s = ExtWeylElement::simple_reflection(&self.datum, i);
            let next: Vec<ExtWeylElement> = set.iter().map(|x| x.multiply(&s)).collect();
            set.extend(next);
        }
        let pi = ExtWeylElement::fundamental(&self.datum, m);
        set.into_iter().map(|x| pi.multiply(&x)).collect()
    }

    /// Extended Bruhat order: equal fundamental parts, then the subword
    /// characterization.
    pub fn bruhat_leq(&self, other: &Self) -> bool {
        self.same_datum(other);
        let (mv, _) = self.fundamental_split();
        let (mw, _) = other.fundamental_split();
        if mv != mw {
            return false;
        }
        if self.length() > other.length() {
            return false;
        }
        other.bruhat_ideal().contains(self)
    }

    /// The Dynkin automorphism of Ĩ fixing 0 applied to the element:
    /// for type A this is ι with w ↦ w*.
    pub fn star_involution(&self) -> Result<Self> {
        if !self.datum.is_type_a() {
            return Err(Error::NotTypeA);
        }
        let n = self.datum.n();
        // ι(ε_i) = −ε_{n+1−i}; on W it is conjugation by w_0.
        let t: Vec<i64> = self.trans.iter().rev().map(|x| -x).collect();
        let w0 = FinitePerm::from_images((1..=n as i64).rev().collect());
        let u = w0.compose(&self.perm).compose(&w0);
        Ok(ExtWeylElement::new(&self.datum, t, u))
    }
}

pub fn is_positive_root(alpha: &[i64]) -> bool {
    match alpha.iter().find(|&&x| x != 0) {
        Some(&x) => x > 0,
        None => false,
    }
}

/// Action of the fundamental class m on affine Dynkin nodes.
pub fn dynkin_node(datum: &Arc<RootDatum>, m: i64, i: usize) -> usize {
    match datum.kind() {
        GroupKind::Sl => i,
        GroupKind::Gl | GroupKind::Pgl => {
            let n = datum.n() as i64;
            (i as i64 + m).rem_euclid(n) as usize
        }
        GroupKind::CAdjoint => {
            if m.rem_euclid(2) == 1 {
                datum.num_simple() - i
            } else {
                i
            }
        }
    }
}

/// ρ_i = s_{i−1}⋯s_1 s_0 (single row).
pub fn rho(datum: &Arc<RootDatum>, i: usize) -> ExtWeylElement {
    let word: Vec<usize> = (0..i).rev().collect();
    ExtWeylElement::from_word(datum, &AffineWord { class: 0, word })
}

/// ρ'_i = s_{n−i+1}⋯s_{n−1} s_0 (single column).
pub fn rho_prime(datum: &Arc<RootDatum>, i: usize) -> ExtWeylElement {
    let n = datum.n();
    let mut word: Vec<usize> = (n - i + 1..n).collect();
    word.push(0);
    ExtWeylElement::from_word(datum, &AffineWord { class: 0, word })
}

/// κ_i: the affine-Weyl part of t_{−ϖ_i∨}.
pub fn kappa(datum: &Arc<RootDatum>, i: usize) -> Result<ExtWeylElement> {
    let w = datum.fund_coweight(i)?;
    let t = ExtWeylElement::translation(datum, w.iter().map(|x| -x).collect());
    let (_, v) = t.fundamental_split();
    Ok(v)
}

/// The canonical word of the bijection λ ↦ x_λ: the residues c − r
/// (mod n) of the boxes of λ, rows read bottom-to-top and right-to-left.
pub fn partition_word(lambda: &Partition, n: usize) -> Vec<usize> {
    let mut word = Vec::with_capacity(lambda.size() as usize);
    for r in (1..=lambda.len()).rev() {
        for c in (1..=lambda.part(r - 1) as i64).rev() {
            word.push((c - r as i64).rem_euclid(n as i64) as usize);
        }
    }
    word
}

/// x_λ for a k-bounded partition, k = n − 1.
pub fn partition_to_grassmannian(
    datum: &Arc<RootDatum>,
    lambda: &Partition,
) -> Result<ExtWeylElement> {
    if !datum.is_type_a() {
        return Err(Error::NotTypeA);
    }
    let k = datum.n() - 1;
    if !lambda.is_k_bounded(k) {
        return Err(Error::NotBounded(k));
    }
    let word = partition_word(lambda, datum.n());
    let x = ExtWeylElement::from_word(datum, &AffineWord { class: 0, word });
    debug_assert_eq!(x.length() as u32, lambda.size());
    debug_assert!(x.is_grassmannian());
    Ok(x)
}

/// Inverse of λ ↦ x_λ, by searching the k-bounded partitions of size
/// ℓ(w). Fine at desk scale.
pub fn grassmannian_to_partition(w: &ExtWeylElement) -> Result<Partition> {
    if !w.datum().is_type_a() {
        return Err(Error::NotTypeA);
    }
    let (m, v) = w.fundamental_split();
    if m != 0 || !w.is_grassmannian() {
        return Err(Error::NotGrassmannian(format!("{:?}", w)));
    }
    let k = w.datum().n() as u32 - 1;
    let len = v.length() as u32;
    for lambda in Partition::bounded_of(len, k) {
        if &partition_to_grassmannian(w.datum(), &lambda).unwrap() == w {
            return Ok(lambda);
        }
    }
    Err(Error::NotGrassmannian(format!(
        "no k-bounded partition matches {:?}",
        w
    )))
}

/// γ_u = −Σ ϖ_i∨ over the right descents of the finite element u.
pub fn gamma_u(datum: &Arc<RootDatum>, u: &FinitePerm) -> Result<Vec<i64>> {
    let mut g = vec![0i64; datum.n()];
    for i in 1..=datum.num_simple() {
        let ua = u.act_on_vec(datum.simple_root(i));
        if !is_positive_root(&ua) {
            let w = datum.fund_coweight(i)?;
            for (a, b) in g.iter_mut().zip(&w) {
                *a -= b;
            }
        }
    }
    Ok(g)
}

/// Factor a Grassmannian w = u t_γ as (u t_{γ_u}) · t_{γ−γ_u} with the
/// irreducible part first and an antidominant translation second.
pub fn irreducible_factorization(
    w: &ExtWeylElement,
) -> Result<(ExtWeylElement, ExtWeylElement)> {
    if !w.is_grassmannian() {
        return Err(Error::NotGrassmannian(format!("{:?}", w)));
    }
    let datum = w.datum().clone();
    let u = w.finite_part().clone();
    // w = t_λ u = u t_{u^{-1}(λ)}
    let gamma = u.inverse().act_on_vec(w.translation_part());
    let gu = gamma_u(&datum, &u)?;
    let rest: Vec<i64> = gamma.iter().zip(&gu).map(|(a, b)| a - b).collect();
    debug_assert!(datum.is_antidominant(&rest));
    let irr = ExtWeylElement::from_perm(&datum, u)
        .multiply(&ExtWeylElement::translation(&datum, gu));
    let tail = ExtWeylElement::translation(&datum, rest);
    debug_assert_eq!(irr.multiply(&tail), *w);
    Ok((irr, tail))
}

// ---------------------------------------------------------------------
// The infinite symmetric group S_Z and the bijection λ ↦ w_λ.
// ---------------------------------------------------------------------

/// A permutation of Z with finite support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SzPerm {
    images: HashMap<i64, i64>,
}

impl SzPerm {
    pub fn identity() -> Self {
        SzPerm {
            images: HashMap::new(),
        }
    }

    pub fn apply(&self, i: i64) -> i64 {
        self.images.get(&i).copied().unwrap_or(i)
    }

    pub fn simple(i: i64) -> Self {
        let mut images = HashMap::new();
        images.insert(i, i + 1);
        images.insert(i + 1, i);
        SzPerm { images }
    }

    pub fn compose(&self, other: &Self) -> Self {
        let mut keys: BTreeSet<i64> = self.images.keys().copied().collect();
        keys.extend(other.images.keys().copied());
        let mut images = HashMap::new();
        for k in keys {
            let v = self.apply(other.apply(k));
            if v != k {
                images.insert(k, v);
            }
        }
        SzPerm { images }
    }

    pub fn from_word(word: &[i64]) -> Self {
        let mut out = SzPerm::identity();
        for &i in word {
            out = out.compose(&SzPerm::simple(i));
        }
        out
    }

    /// Number of inversions (the Coxeter length).
    pub fn length(&self) -> usize {
        if self.images.is_empty() {
            return 0;
        }
        let lo = *self.images.keys().min().unwrap();
        let hi = *self.images.keys().max().unwrap();
        let mut count = 0;
        for i in lo..=hi {
            for j in i + 1..=hi {
                if self.apply(i) > self.apply(j) {
                    count += 1;
                }
            }
        }
        count
    }

    /// w(i) < w(i+1) for all i ≠ 0.
    pub fn is_zero_grassmannian(&self) -> bool {
        if self.images.is_empty() {
            return true;
        }
        let lo = *self.images.keys().min().unwrap() - 1;
        let hi = *self.images.keys().max().unwrap() + 1;
        (lo..hi).all(|i| i == 0 || self.apply(i) < self.apply(i + 1))
    }
}

/// The canonical word of w_λ ∈ S_Z: residues c − r of the boxes of λ,
/// rows read bottom-to-top and right-to-left (no reduction mod n).
pub fn infinite_partition_word(lambda: &Partition) -> Vec<i64> {
    let mut word = Vec::with_capacity(lambda.size() as usize);
    for r in (1..=lambda.len()).rev() {
        for c in (1..=lambda.part(r - 1) as i64).rev() {
            word.push(c - r as i64);
        }
    }
    word
}

/// w_λ as a permutation of Z.
pub fn infinite_partition_to_element(lambda: &Partition) -> SzPerm {
    SzPerm::from_word(&infinite_partition_word(lambda))
}

/// Recover λ from a 0-Grassmannian element: the code j − w(j), j ≥ 1,
/// is the conjugate of the partition in the word convention.
pub fn element_to_infinite_partition(w: &SzPerm) -> Result<Partition> {
    if !w.is_zero_grassmannian() {
        return Err(Error::NotGrassmannian("not 0-Grassmannian in S_Z".into()));
    }
    let mut parts = Vec::new();
    let mut j = 1i64;
    loop {
        let c = j - w.apply(j);
        if c <= 0 {
            break;
        }
        parts.push(c as u32);
        j += 1;
    }
    Ok(Partition::new(parts).conjugate())
}

// ---------------------------------------------------------------------
// Element literals used by the CLI.
// ---------------------------------------------------------------------

/// Grammar: "t:[1,0,-1];perm:[2,1,3]", "word:pi^2:0,1,0",
/// "lambda:3,1" (x_λ), "mlambda:4,2,2,1" (infinite-rank; rejected here,
/// the caller routes it to the S_Z types).
pub fn parse_element(datum: &Arc<RootDatum>, s: &str) -> Result<ExtWeylElement> {
    if let Some(rest) = s.strip_prefix("t:") {
        let (tpart, ppart) = rest
            .split_once(";perm:")
            .ok_or_else(|| Error::Parse("expected t:[...];perm:[...]".into()))?;
        let trans = parse_bracket_list(tpart)?;
        let perm = parse_bracket_list(ppart)?;
        if trans.len() != datum.n() || perm.len() != datum.n() {
            return Err(Error::Parse("length must equal n".into()));
        }
        if datum.kind() == GroupKind::Sl && trans.iter().sum::<i64>() != 0 {
            return Err(Error::Parse("SL translation must sum to zero".into()));
        }
        let mut seen = vec![false; datum.n()];
        for &x in &perm {
            if x == 0 || x.unsigned_abs() as usize > datum.n() {
                return Err(Error::Parse("bad permutation image".into()));
            }
            if x < 0 && datum.is_type_a() {
                return Err(Error::Parse("signed images need type C".into()));
            }
            let slot = (x.abs() - 1) as usize;
            if seen[slot] {
                return Err(Error::Parse("not a permutation".into()));
            }
            seen[slot] = true;
        }
        Ok(ExtWeylElement::new(
            datum,
            trans,
            FinitePerm::from_images(perm),
        ))
    } else if let Some(rest) = s.strip_prefix("word:") {
        let (pi, word) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse("expected word:pi^M:i,j,...".into()))?;
        let m: i64 = pi
            .strip_prefix("pi^")
            .ok_or_else(|| Error::Parse("expected pi^M".into()))?
            .parse()
            .map_err(|_| Error::Parse("bad pi exponent".into()))?;
        if datum.kind() == GroupKind::Sl && m != 0 {
            return Err(Error::Parse("SL has a trivial fundamental group".into()));
        }
        let letters: Vec<usize> = if word.is_empty() {
            vec![]
        } else {
            word.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad letter {t:?}")))
                })
                .collect::<Result<_>>()?
        };
        for &i in &letters {
            if i > datum.num_simple() {
                return Err(Error::Parse(format!("letter {i} out of range")));
            }
        }
        Ok(ExtWeylElement::from_word(
            datum,
            &AffineWord {
                class: m,
                word: letters,
            },
        ))
    } else if let Some(rest) = s.strip_prefix("lambda:") {
        let parts: Vec<u32> = if rest.is_empty() {
            vec![]
        } else {
            rest.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad part {t:?}")))
                })
                .collect::<std::result::Result<_, _>>()?
        };
        partition_to_grassmannian(datum, &Partition::new(parts))
    } else {
        Err(Error::Parse(format!("unrecognized element literal {s:?}")))
    }
}

fn parse_bracket_list(s: &str) -> Result<Vec<i64>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse("expected [..]".into()))?;
    if inner.trim().is_empty() {
        return Ok(vec![]);
    }
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
        })
        .collect()
}

/// JSON view of an element: translation part and one-line permutation.
pub fn element_json(w: &ExtWeylElement) -> serde_json::Value {
    serde_json::json!({
        "t": w.translation_part(),
        "perm": w.finite_part().images(),
    })
}
