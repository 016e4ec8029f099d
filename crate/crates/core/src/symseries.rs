//! Truncated completed symmetric functions over an arbitrary
//! coefficient ring: the ring structure, Hopf maps, Schur conversions,
//! the Ω series, and the ĥ building blocks.
//!
//! The internal basis is h-monomials: a term is a partition μ standing
//! for h_{μ_1}h_{μ_2}⋯ with a coefficient from the ring. Everything is
//! exact modulo y-degree > cap.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::coeff::Ring;
use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone)]
pub struct SymSeries<R: Ring> {
    ring: R,
    cap: u32,
    terms: BTreeMap<Partition, R::Elem>,
}

impl<R: Ring> PartialEq for SymSeries<R> {
    fn eq(&self, other: &Self) -> bool {
        self.cap == other.cap && self.terms == other.terms
    }
}
impl<R: Ring> Eq for SymSeries<R> {}

impl<R: Ring> std::fmt::Debug for SymSeries<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mu, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:?})·h{}", c, mu)?;
        }
        Ok(())
    }
}

impl<R: Ring> SymSeries<R> {
    pub fn zero(ring: &R, cap: u32) -> Self {
        SymSeries {
            ring: ring.clone(),
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &R, cap: u32) -> Self {
        Self::constant(ring, cap, ring.one())
    }

    pub fn constant(ring: &R, cap: u32, c: R::Elem) -> Self {
        let mut s = Self::zero(ring, cap);
        s.insert(Partition::empty(), c);
        s
    }

    /// c·h_μ.
    pub fn h_monomial(ring: &R, cap: u32, mu: Partition, c: R::Elem) -> Self {
        let mut s = Self::zero(ring, cap);
        if mu.size() <= cap {
            s.insert(mu, c);
        }
        s
    }

    /// h_r (h_0 = 1; zero when r > cap).
    pub fn h(ring: &R, cap: u32, r: u32) -> Self {
        if r == 0 {
            Self::one(ring, cap)
        } else {
            Self::h_monomial(ring, cap, Partition::new(vec![r]), ring.one())
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Partition::empty())
                .map_or(false, |c| *c == self.ring.one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &R::Elem)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mu: &Partition) -> R::Elem {
        self.terms
            .get(mu)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    fn insert(&mut self, mu: Partition, c: R::Elem) {
        if self.ring.is_zero(&c) || mu.size() > self.cap {
            return;
        }
        match self.terms.entry(mu) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = self.ring.add(e.get(), &c);
                if self.ring.is_zero(&sum) {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.cap, other.cap, "cap mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.insert(mu.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.insert(mu.clone(), self.ring.neg(c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        SymSeries {
            ring: self.ring.clone(),
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.ring.neg(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = Self::zero(&self.ring, self.cap);
        for (ma, ca) in &self.terms {
            if ma.size() > self.cap {
                continue;
            }
            for (mb, cb) in &other.terms {
                if ma.size() + mb.size() > self.cap {
                    continue;
                }
                out.insert(ma.union(mb), self.ring.mul(ca, cb));
            }
        }
        out
    }

    pub fn scalar_mul(&self, c: &R::Elem) -> Self {
        let mut out = Self::zero(&self.ring, self.cap);
        for (mu, a) in &self.terms {
            out.insert(mu.clone(), self.ring.mul(c, a));
        }
        out
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scalar_mul(&self.ring.int(k))
    }

    /// Map every coefficient through a ring endomorphism.
    pub fn map_coeffs<F: Fn(&R::Elem) -> R::Elem>(&self, f: F) -> Self {
        let mut out = Self::zero(&self.ring, self.cap);
        for (mu, c) in &self.terms {
            out.insert(mu.clone(), f(c));
        }
        out
    }

    /// Map coefficients, allowing failure (exact divisions).
    pub fn try_map_coeffs<F: Fn(&R::Elem) -> Result<R::Elem>>(&self, f: F) -> Result<Self> {
        let mut out = Self::zero(&self.ring, self.cap);
        for (mu, c) in &self.terms {
            out.insert(mu.clone(), f(c)?);
        }
        Ok(out)
    }

    /// The slice of total y-degree d.
    pub fn degree_slice(&self, d: u32) -> Self {
        let mut out = Self::zero(&self.ring, self.cap);
        for (mu, c) in &self.terms {
            if mu.size() == d {
                out.insert(mu.clone(), c.clone());
            }
        }
        out
    }

    /// Lowest total degree with a nonzero term.
    pub fn lowest_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.size()).min()
    }

    /// Re-truncate to a smaller cap.
    pub fn truncate(&self, cap: u32) -> Self {
        let mut out = Self::zero(&self.ring, cap);
        for (mu, c) in &self.terms {
            out.insert(mu.clone(), c.clone());
        }
        out
    }

    /// Multiplicative inverse by degree-by-degree recursion; requires a
    /// unit constant term.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.coefficient(&Partition::empty());
        if self.ring.is_zero(&c0) {
            return Err(Error::NotInvertible("zero constant term".into()));
        }
        let c0_inv = self.ring.unit_inverse(&c0)?;
        let mut inv = Self::constant(&self.ring, self.cap, c0_inv.clone());
        for d in 1..=self.cap {
            // q_d = −c0^{-1} Σ_{j=1..d} f_j q_{d−j}
            let mut acc = Self::zero(&self.ring, self.cap);
            for j in 1..=d {
                acc = acc.add(&self.degree_slice(j).mul(&inv.degree_slice(d - j)));
            }
            let qd = acc.scalar_mul(&c0_inv).neg().degree_slice(d);
            inv = inv.add(&qd);
        }
        debug_assert!(self.mul(&inv).is_one());
        Ok(inv)
    }

    /// Ω(b|y) = Σ_{l ≤ cap} b^l h_l for a coefficient-ring element b.
    pub fn omega(ring: &R, cap: u32, b: &R::Elem) -> Self {
        let mut out = Self::one(ring, cap);
        let mut power = ring.one();
        for l in 1..=cap {
            power = ring.mul(&power, b);
            out.insert(Partition::new(vec![l]), power.clone());
        }
        out
    }

    /// ĥ_m(y|t_1,…,t_i) = Σ_l h_l(t) h_{m+l}(y), truncated.
    pub fn hhat(ring: &R, cap: u32, m: u32, params: &[R::Elem]) -> Self {
        let mut out = Self::zero(ring, cap);
        if m > cap {
            return out;
        }
        for l in 0..=(cap - m) {
            let hl = complete_homogeneous(ring, params, l);
            if !ring.is_zero(&hl) {
                out.insert(Partition::new(vec![m + l]), hl);
            }
        }
        out
    }

    /// Schur function via the Jacobi–Trudi determinant det(h_{λ_i+j−i}).
    pub fn schur(ring: &R, cap: u32, lambda: &Partition) -> Result<Self> {
        if lambda.size() > cap {
            return Err(Error::Unsupported(format!(
                "|λ| = {} exceeds cap {}",
                lambda.size(),
                cap
            )));
        }
        if lambda.is_empty() {
            return Ok(Self::one(ring, cap));
        }
        let l = lambda.len();
        let entry = |i: usize, j: usize| -> Self {
            let r = lambda.part(i) as i64 + j as i64 - i as i64;
            if r < 0 {
                Self::zero(ring, cap)
            } else {
                Self::h(ring, cap, r as u32)
            }
        };
        Ok(determinant(ring, cap, l, entry))
    }

    /// e_r as the column Schur s_{(1^r)}.
    pub fn elementary(ring: &R, cap: u32, r: u32) -> Self {
        if r == 0 {
            return Self::one(ring, cap);
        }
        Self::schur(ring, cap, &Partition::new(vec![1; r as usize])).unwrap()
    }

    /// Expansion in the Schur basis (exact; the h↔s change of basis is
    /// unitriangular degree by degree).
    pub fn to_schur(&self) -> Result<BTreeMap<Partition, R::Elem>> {
        let mut out = BTreeMap::new();
        let mut g = self.clone();
        while let Some((mu, c)) = g.terms.iter().next().map(|(m, c)| (m.clone(), c.clone())) {
            // The least term (by size, then lex) is the leading Schur
            // index: s_μ = h_μ + lexicographically larger monomials.
            let s = Self::schur(&self.ring, self.cap, &mu)?;
            g = g.sub(&s.scalar_mul(&c));
            out.insert(mu, c);
        }
        Ok(out)
    }

    /// Power sum via Newton's identity p_j = j h_j − Σ_{i<j} h_i p_{j−i}.
    pub fn power_sum(ring: &R, cap: u32, j: u32) -> Self {
        assert!(j >= 1);
        let mut ps: Vec<Self> = vec![Self::zero(ring, cap)]; // p_0 unused
        for m in 1..=j {
            let mut p = Self::h(ring, cap, m).scale_int(m as i64);
            for i in 1..m {
                p = p.sub(&Self::h(ring, cap, i).mul(&ps[(m - i) as usize]));
            }
            ps.push(p);
        }
        ps.pop().unwrap()
    }

    /// Coefficient-wise φ_0 style checks need the constant term.
    pub fn constant_term(&self) -> R::Elem {
        self.coefficient(&Partition::empty())
    }
}

/// h_l(t_1,…,t_k) in the coefficient ring, by the standard recursion.
pub fn complete_homogeneous<R: Ring>(ring: &R, params: &[R::Elem], l: u32) -> R::Elem {
    if l == 0 {
        return ring.one();
    }
    if params.is_empty() {
        return ring.zero();
    }
    // dp[d] = h_d(t_1..t_j) as j grows
    let mut dp = vec![ring.zero(); l as usize + 1];
    dp[0] = ring.one();
    for t in params {
        for d in 1..=l as usize {
            let add = ring.mul(&dp[d - 1], t);
            dp[d] = ring.add(&dp[d], &add);
        }
    }
    dp[l as usize].clone()
}

/// Determinant of an s×s matrix of series by minor expansion with a
/// bitmask memo over column subsets.
pub fn determinant<R: Ring, F: Fn(usize, usize) -> SymSeries<R>>(
    ring: &R,
    cap: u32,
    s: usize,
    entry: F,
) -> SymSeries<R> {
    fn go<R: Ring>(
        ring: &R,
        cap: u32,
        s: usize,
        entries: &[Vec<SymSeries<R>>],
        row: usize,
        cols: u64,
        memo: &mut std::collections::HashMap<u64, SymSeries<R>>,
    ) -> SymSeries<R> {
        if row == s {
            return SymSeries::one(ring, cap);
        }
        if let Some(hit) = memo.get(&cols) {
            return hit.clone();
        }
        let mut acc = SymSeries::zero(ring, cap);
        let mut sign = 1i64;
        for j in 0..s {
            if cols & (1 << j) != 0 {
                continue;
            }
            let e = &entries[row][j];
            if !e.is_zero() {
                let minor = go(ring, cap, s, entries, row + 1, cols | (1 << j), memo);
                let term = e.mul(&minor).scale_int(sign);
                acc = acc.add(&term);
            }
            sign = -sign;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    let entries: Vec<Vec<SymSeries<R>>> = (0..s)
        .map(|i| (0..s).map(|j| entry(i, j)).collect())
        .collect();
    let mut memo = std::collections::HashMap::new();
    go(ring, cap, s, &entries, 0, 0, &mut memo)
}

// ---------------------------------------------------------------------
// Hopf structure: coproduct into the truncated tensor square, antipode,
// counit.
// ---------------------------------------------------------------------

#[derive(Clone)]
pub struct TensorSeries<R: Ring> {
    ring: R,
    cap: u32,
    terms: BTreeMap<(Partition, Partition), R::Elem>,
}

impl<R: Ring> PartialEq for TensorSeries<R> {
    fn eq(&self, other: &Self) -> bool {
        self.cap == other.cap && self.terms == other.terms
    }
}
impl<R: Ring> Eq for TensorSeries<R> {}

impl<R: Ring> std::fmt::Debug for TensorSeries<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TensorSeries({} terms)", self.terms.len())
    }
}

impl<R: Ring> TensorSeries<R> {
    pub fn zero(ring: &R, cap: u32) -> Self {
        TensorSeries {
            ring: ring.clone(),
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &R, cap: u32) -> Self {
        let mut t = Self::zero(ring, cap);
        t.insert((Partition::empty(), Partition::empty()), ring.one());
        t
    }

    fn insert(&mut self, key: (Partition, Partition), c: R::Elem) {
        if self.ring.is_zero(&c) || key.0.size() + key.1.size() > self.cap {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = self.ring.add(e.get(), &c);
                if self.ring.is_zero(&sum) {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(k.clone(), self.ring.neg(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.ring, self.cap);
        for ((la, ra), ca) in &self.terms {
            for ((lb, rb), cb) in &other.terms {
                out.insert((la.union(lb), ra.union(rb)), self.ring.mul(ca, cb));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// σ ⊗ τ of two plain series.
    pub fn of(a: &SymSeries<R>, b: &SymSeries<R>) -> Self {
        let mut out = Self::zero(a.ring(), a.cap());
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                out.insert((ma.clone(), mb.clone()), a.ring().mul(ca, cb));
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &R::Elem)> {
        self.terms.iter()
    }
}

/// Triple tensors for the coassociativity check.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorCube<R: Ring> {
    ring: R,
    cap: u32,
    terms: BTreeMap<(Partition, Partition, Partition), R::Elem>,
}

impl<R: Ring> std::fmt::Debug for TensorCube<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TensorCube({} terms)", self.terms.len())
    }
}

impl<R: Ring> TensorCube<R> {
    pub fn zero(ring: &R, cap: u32) -> Self {
        TensorCube {
            ring: ring.clone(),
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, key: (Partition, Partition, Partition), c: R::Elem) {
        if self.ring.is_zero(&c) || key.0.size() + key.1.size() + key.2.size() > self.cap {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = self.ring.add(e.get(), &c);
                if self.ring.is_zero(&sum) {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }
}

/// (Δ ⊗ id) applied to a tensor square.
pub fn coproduct_left<R: Ring>(t: &TensorSeries<R>) -> TensorCube<R> {
    let mut out = TensorCube::zero(&t.ring, t.cap);
    for ((l, r), c) in &t.terms {
        let dl = Hopf::coproduct(&SymSeries::h_monomial(&t.ring, t.cap, l.clone(), t.ring.one()));
        for ((a, b), d) in &dl.terms {
            out.insert(
                (a.clone(), b.clone(), r.clone()),
                t.ring.mul(c, d),
            );
        }
    }
    out
}

/// (id ⊗ Δ) applied to a tensor square.
pub fn coproduct_right<R: Ring>(t: &TensorSeries<R>) -> TensorCube<R> {
    let mut out = TensorCube::zero(&t.ring, t.cap);
    for ((l, r), c) in &t.terms {
        let dr = Hopf::coproduct(&SymSeries::h_monomial(&t.ring, t.cap, r.clone(), t.ring.one()));
        for ((a, b), d) in &dr.terms {
            out.insert(
                (l.clone(), a.clone(), b.clone()),
                t.ring.mul(c, d),
            );
        }
    }
    out
}

/// Contract a tensor square by multiplication on one factor with the
/// counit on the other; used for the counit axiom.
pub fn contract_counit_left<R: Ring>(t: &TensorSeries<R>) -> SymSeries<R> {
    let mut out = SymSeries::zero(&t.ring, t.cap);
    for ((l, r), c) in &t.terms {
        if l.is_empty() {
            out.insert(r.clone(), c.clone());
        }
    }
    out
}

pub fn contract_counit_right<R: Ring>(t: &TensorSeries<R>) -> SymSeries<R> {
    let mut out = SymSeries::zero(&t.ring, t.cap);
    for ((l, r), c) in &t.terms {
        if r.is_empty() {
            out.insert(l.clone(), c.clone());
        }
    }
    out
}

/// Hopf operations on the h-monomial presentation.
pub struct Hopf;

impl Hopf {
    /// Δ(h_r) = Σ h_i ⊗ h_{r−i}, extended multiplicatively and linearly.
    pub fn coproduct<R: Ring>(f: &SymSeries<R>) -> TensorSeries<R> {
        let ring = f.ring().clone();
        let cap = f.cap();
        let mut out = TensorSeries::zero(&ring, cap);
        for (mu, c) in f.terms() {
            let mut acc = TensorSeries::one(&ring, cap);
            for &part in mu.parts() {
                let mut dh = TensorSeries::zero(&ring, cap);
                for i in 0..=part {
                    dh.insert(
                        (
                            if i == 0 {
                                Partition::empty()
                            } else {
                                Partition::new(vec![i])
                            },
                            if i == part {
                                Partition::empty()
                            } else {
                                Partition::new(vec![part - i])
                            },
                        ),
                        ring.one(),
                    );
                }
                acc = acc.mul(&dh);
            }
            for (k, a) in acc.terms.clone() {
                out.insert(k, ring.mul(&a, c));
            }
        }
        out
    }

    /// S(h_r) = (−1)^r e_r, extended multiplicatively (the ring is
    /// commutative). The sign (−1)^r rather than −1 is forced by the
    /// antipode axiom Σ_i S(h_i) h_{r−i} = 0 and by S(Ω) = Ω^{-1}.
    pub fn antipode<R: Ring>(f: &SymSeries<R>) -> SymSeries<R> {
        let ring = f.ring().clone();
        let cap = f.cap();
        let mut out = SymSeries::zero(&ring, cap);
        for (mu, c) in f.terms() {
            let mut acc = SymSeries::constant(&ring, cap, c.clone());
            for &part in mu.parts() {
                let e = SymSeries::elementary(&ring, cap, part).scale_int(sign(part));
                acc = acc.mul(&e);
            }
            out = out.add(&acc);
        }
        out
    }

    /// ε kills positive degree.
    pub fn counit<R: Ring>(f: &SymSeries<R>) -> R::Elem {
        f.constant_term()
    }
}

/// ω̃(h_l), the K-theoretic conjugation on one generator, computed by
/// inverting the generating identity
/// (Σ u^l h_l)(Σ (⊖u)^l ω̃(h_l)) = 1 degree by degree.
pub fn omega_tilde_h<R: Ring>(ring: &R, cap: u32, l: u32) -> SymSeries<R> {
    let ws = omega_tilde_table(ring, cap);
    ws[l as usize].clone()
}

fn omega_tilde_table<R: Ring>(ring: &R, cap: u32) -> Vec<SymSeries<R>> {
    // With W_l = ω̃(h_l), the identity says for every N ≥ 1
    //   Σ_{a+b=N} h_a · c_b = 0,
    // where c_0 = 1 and c_b = Σ_{l=1}^{b} (−1)^l C(b−1, b−l) W_l (from
    // (⊖u)^l = (−1)^l Σ_m C(l+m−1, m) u^{l+m}). The a = 0, l = N term is
    // (−1)^N W_N; solve for it.
    let mut ws: Vec<SymSeries<R>> = vec![SymSeries::one(ring, cap)];
    for nn in 1..=cap {
        let mut acc = SymSeries::zero(ring, cap);
        for a in 0..=nn {
            let b = nn - a;
            let ha = SymSeries::h(ring, cap, a);
            if b == 0 {
                acc = acc.add(&ha);
                continue;
            }
            for l in 1..=b {
                if a == 0 && l == nn {
                    continue; // the unknown W_N term
                }
                let coef = sign(l) * binomial(b - 1, b - l);
                if coef != 0 {
                    acc = acc.add(&ha.mul(&ws[l as usize]).scale_int(coef));
                }
            }
        }
        // (−1)^N W_N + acc = 0
        ws.push(acc.scale_int(-sign(nn)));
    }
    ws
}

/// ω̃(p_j) = (−1)^{j+1} Σ_r C(r+j−1, j−1) p_{j+r}, truncated.
pub fn omega_tilde_p<R: Ring>(ring: &R, cap: u32, j: u32) -> SymSeries<R> {
    assert!(j >= 1 && j <= cap);
    let mut out = SymSeries::zero(ring, cap);
    for r in 0..=(cap - j) {
        let c = sign(j + 1) * binomial(r + j - 1, j - 1);
        out = out.add(&SymSeries::power_sum(ring, cap, j + r).scale_int(c));
    }
    out
}

fn sign(k: u32) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn binomial(n: u32, k: u32) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    let q: BigInt = num / den;
    i64::try_from(&q).expect("binomial fits i64 at desk scale")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{LaurentPoly, LaurentRing};

    fn kr(n: usize) -> LaurentRing {
        LaurentRing::k(n)
    }

    fn b(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::b(n, i)
    }

    #[test]
    fn omega_times_inverse_is_one() {
        let r = kr(2);
        let om = SymSeries::omega(&r, 6, &b(2, 1));
        assert!(om.mul(&om.invert().unwrap()).is_one());
        assert!(SymSeries::omega(&r, 6, &r.zero()).is_one());
        // degree-2 slice of Ω(b_1) is b_1² h_2
        let slice = om.degree_slice(2);
        let want = SymSeries::h_monomial(
            &r,
            6,
            Partition::new(vec![2]),
            b(2, 1).mul(&b(2, 1)).unwrap(),
        );
        assert_eq!(slice, want);
    }

    #[test]
    fn geometric_inverse() {
        let r = kr(2);
        let f = SymSeries::one(&r, 3).add(&SymSeries::h(&r, 3, 1));
        let inv = f.invert().unwrap();
        // 1 − h_1 + h_1² − h_1³
        let h1 = SymSeries::h(&r, 3, 1);
        let want = SymSeries::one(&r, 3)
            .sub(&h1)
            .add(&h1.mul(&h1))
            .sub(&h1.mul(&h1).mul(&h1));
        assert_eq!(inv, want);
    }

    #[test]
    fn h_monomial_product() {
        let r = kr(2);
        let h1 = SymSeries::h(&r, 4, 1);
        let got = h1.mul(&h1);
        assert_eq!(
            got,
            SymSeries::h_monomial(&r, 4, Partition::new(vec![1, 1]), r.one())
        );
    }

    #[test]
    fn schur_basics() {
        let r = kr(2);
        for rr in 1..=4u32 {
            assert_eq!(
                SymSeries::schur(&r, 6, &Partition::new(vec![rr])).unwrap(),
                SymSeries::h(&r, 6, rr)
            );
        }
        // s_{(1,1)} = h_{(1,1)} − h_2
        let got = SymSeries::schur(&r, 6, &Partition::new(vec![1, 1])).unwrap();
        let want = SymSeries::h_monomial(&r, 6, Partition::new(vec![1, 1]), r.one())
            .sub(&SymSeries::h(&r, 6, 2));
        assert_eq!(got, want);
    }

    #[test]
    fn to_schur_round_trip() {
        let r = kr(2);
        for lam in Partition::all_up_to(6) {
            let s = SymSeries::schur(&r, 6, &lam).unwrap();
            let exp = s.to_schur().unwrap();
            assert_eq!(exp.len(), 1);
            assert_eq!(exp.get(&lam).unwrap(), &r.one());
        }
        // a mixed element round-trips through the basis change
        let f = SymSeries::omega(&r, 5, &b(2, 1))
            .mul(&SymSeries::schur(&r, 5, &Partition::new(vec![2, 1])).unwrap());
        let exp = f.to_schur().unwrap();
        let mut back = SymSeries::zero(&r, 5);
        for (lam, c) in exp {
            back = back.add(&SymSeries::schur(&r, 5, &lam).unwrap().scalar_mul(&c));
        }
        assert_eq!(back, f);
    }

    #[test]
    fn hopf_on_h1_and_omega() {
        let r = kr(2);
        let cap = 5;
        let h1 = SymSeries::h(&r, cap, 1);
        let d = Hopf::coproduct(&h1);
        let want = TensorSeries::of(&h1, &SymSeries::one(&r, cap))
            .add(&TensorSeries::of(&SymSeries::one(&r, cap), &h1));
        assert_eq!(d, want);

        let om = SymSeries::omega(&r, cap, &b(2, 1));
        // Δ(Ω) = Ω ⊗ Ω
        assert_eq!(Hopf::coproduct(&om), TensorSeries::of(&om, &om));
        // S(Ω) = Ω^{-1}
        assert_eq!(Hopf::antipode(&om), om.invert().unwrap());
        // ε(Ω) = 1
        assert_eq!(Hopf::counit(&om), r.one());
    }

    #[test]
    fn antipode_signs_and_axiom() {
        let r = kr(2);
        for rr in 1..=4u32 {
            let got = Hopf::antipode(&SymSeries::h(&r, 6, rr));
            assert_eq!(
                got,
                SymSeries::elementary(&r, 6, rr).scale_int(sign(rr))
            );
        }
        // m∘(S⊗id)∘Δ = η∘ε on h_r: Σ_i S(h_i) h_{r−i} = 0 for r ≥ 1.
        for rr in 1..=6u32 {
            let mut acc = SymSeries::zero(&r, 6);
            for i in 0..=rr {
                acc = acc.add(
                    &Hopf::antipode(&SymSeries::h(&r, 6, i)).mul(&SymSeries::h(&r, 6, rr - i)),
                );
            }
            assert!(acc.is_zero(), "antipode axiom at r = {rr}");
        }
    }

    #[test]
    fn coassociativity_and_counit_small() {
        let r = kr(2);
        let cap = 4;
        let f = SymSeries::h(&r, cap, 2)
            .mul(&SymSeries::h(&r, cap, 1))
            .add(&SymSeries::h(&r, cap, 3).scalar_mul(&b(2, 2)))
            .add(&SymSeries::one(&r, cap));
        let d = Hopf::coproduct(&f);
        assert_eq!(coproduct_left(&d), coproduct_right(&d));
        assert_eq!(contract_counit_left(&d), f);
        assert_eq!(contract_counit_right(&d), f);
    }

    #[test]
    fn hhat_cases() {
        let r = kr(2);
        let cap = 6;
        // hhat(0, [b_i]) = Ω(b_i)
        assert_eq!(
            SymSeries::hhat(&r, cap, 0, &[b(2, 1)]),
            SymSeries::omega(&r, cap, &b(2, 1))
        );
        // hhat(1, []) = h_1
        assert_eq!(SymSeries::hhat(&r, cap, 1, &[]), SymSeries::h(&r, cap, 1));
        // (b_1−b_2)·ĥ_1(y|b_1,b_2) = Ω(b_1) − Ω(b_2)
        let lhs = SymSeries::hhat(&r, cap, 1, &[b(2, 1), b(2, 2)])
            .scalar_mul(&b(2, 1).sub(&b(2, 2)).unwrap());
        let rhs = SymSeries::omega(&r, cap, &b(2, 1)).sub(&SymSeries::omega(&r, cap, &b(2, 2)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn power_sums_and_omega_tilde() {
        let r = kr(2);
        assert_eq!(SymSeries::power_sum(&r, 5, 1), SymSeries::h(&r, 5, 1));
        // ω̃(p_1) at cap 3 = p_1 + p_2 + p_3
        let got = omega_tilde_p(&r, 3, 1);
        let want = SymSeries::power_sum(&r, 3, 1)
            .add(&SymSeries::power_sum(&r, 3, 2))
            .add(&SymSeries::power_sum(&r, 3, 3));
        assert_eq!(got, want);
        // ω̃(p_2) leads with −p_2
        let got = omega_tilde_p(&r, 4, 2);
        assert_eq!(
            got.degree_slice(2),
            SymSeries::power_sum(&r, 4, 2).neg().degree_slice(2)
        );
    }

    #[test]
    fn omega_tilde_h_closed_form() {
        // ω̃(h_l) = Σ_{r=0}^{l−1} C(l−1, r) e_{r+1}; the generating
        // identity inversion must reproduce it.
        let r = kr(2);
        let cap = 8;
        for l in 1..=cap {
            let got = omega_tilde_h(&r, cap, l);
            let mut want = SymSeries::zero(&r, cap);
            for rr in 0..l {
                want = want.add(
                    &SymSeries::elementary(&r, cap, rr + 1).scale_int(binomial(l - 1, rr)),
                );
            }
            assert_eq!(got, want, "l = {l}");
        }
    }

    #[test]
    fn omega_tilde_slice_structure() {
        // The degree-d slice of ω̃(h_l) is C(l−1, d−1)·e_d; resumming
        // Σ_l (⊖u)^l ω̃(h_l) slice by slice gives Σ_d (−u)^d e_d, which
        // is how ι̂(Ω(u)) = Ω(u)^{-1} closes exactly.
        let r = kr(2);
        let cap = 7;
        for l in 1..=cap {
            let w = omega_tilde_h(&r, cap, l);
            for d in 1..=l {
                assert_eq!(
                    w.degree_slice(d),
                    SymSeries::elementary(&r, cap, d).scale_int(binomial(l - 1, d - 1)),
                    "l={l} d={d}"
                );
            }
        }
        // Ω(b)·Σ_m (−b)^m e_m = 1 (the e-side of the resummation).
        let b1 = b(2, 1);
        let om = SymSeries::omega(&r, cap, &b1);
        let mut inv = SymSeries::zero(&r, cap);
        let mut pw = r.one();
        for m in 0..=cap {
            inv = inv.add(&SymSeries::elementary(&r, cap, m).scalar_mul(&pw));
            pw = pw.mul(&b1.neg()).unwrap();
        }
        assert!(om.mul(&inv).is_one());
    }

    #[test]
    fn newton_jacobi_trudi_consistency() {
        // e_r from the antipode path equals e_r from the column Schur.
        let r = kr(2);
        for rr in 1..=5u32 {
            let via_antipode = Hopf::antipode(&SymSeries::h(&r, 6, rr)).scale_int(sign(rr));
            assert_eq!(via_antipode, SymSeries::elementary(&r, 6, rr));
        }
    }

    #[test]
    fn truncation_soundness() {
        let r = kr(2);
        let f8 = SymSeries::omega(&r, 8, &b(2, 1)).mul(&SymSeries::omega(&r, 8, &b(2, 2)));
        let f5 = SymSeries::omega(&r, 5, &b(2, 1)).mul(&SymSeries::omega(&r, 5, &b(2, 2)));
        assert_eq!(f8.truncate(5), f5);
        let i8 = SymSeries::omega(&r, 8, &b(2, 1)).invert().unwrap();
        let i5 = SymSeries::omega(&r, 5, &b(2, 1)).invert().unwrap();
        assert_eq!(i8.truncate(5), i5);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }
}
