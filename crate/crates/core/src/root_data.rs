//! Root-datum descriptions generic over Cartan type, with shipped
//! instantiations GL_n, SL_n, PGL_n, and adjoint C_n.
//!
//! Weights live in the a-coordinates, coweights in the ε-coordinates,
//! both as integer vectors of length n with the dot-product pairing.
//! For adjoint C_n the coweight lattice P∨ contains half-integer
//! vectors, so stored coweights carry a fixed denominator of 2; all
//! pairings against root-lattice weights stay integral.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A signed permutation: `images[i-1] = ±j` means i ↦ ±j. Type A data
/// use no signs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinitePerm {
    images: Vec<i64>,
}

impl FinitePerm {
    pub fn identity(n: usize) -> Self {
        FinitePerm {
            images: (1..=n as i64).collect(),
        }
    }

    pub fn from_images(images: Vec<i64>) -> Self {
        let n = images.len() as i64;
        debug_assert!(images.iter().all(|&x| x != 0 && x.abs() <= n));
        FinitePerm { images }
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, j - 1);
        p
    }

    /// The sign change at slot i (type C generator s_n when i = n).
    pub fn sign_flip(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images[i - 1] = -(i as i64);
        p
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i as i64 + 1)
    }

    /// Image of ±i.
    pub fn apply(&self, i: i64) -> i64 {
        let a = self.images[(i.abs() - 1) as usize];
        if i < 0 {
            -a
        } else {
            a
        }
    }

    /// Composition (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Self) -> Self {
        FinitePerm {
            images: (1..=other.rank() as i64)
                .map(|i| self.apply(other.apply(i)))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0i64; self.rank()];
        for i in 1..=self.rank() as i64 {
            let j = self.apply(i);
            images[(j.abs() - 1) as usize] = if j < 0 { -i } else { i };
        }
        FinitePerm { images }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity(self.rank());
        for _ in 0..k.abs() {
            out = base.compose(&out);
        }
        out
    }

    /// Action on a coordinate vector: (w·x)[|w(i)|−1] = sgn(w(i))·x[i−1].
    pub fn act_on_vec(&self, x: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; x.len()];
        for (i, &img) in self.images.iter().enumerate() {
            let slot = (img.abs() - 1) as usize;
            out[slot] = if img < 0 { -x[i] } else { x[i] };
        }
        out
    }

    pub fn images(&self) -> &[i64] {
        &self.images
    }
}

impl std::fmt::Debug for FinitePerm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    Gl,
    Sl,
    Pgl,
    CAdjoint,
}

#[derive(Debug)]
pub struct RootDatum {
    kind: GroupKind,
    n: usize,
    /// Coweight coordinates are stored scaled by this factor (2 for
    /// adjoint C_n where P∨ has half-integral vectors).
    coweight_denom: i64,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    theta: Vec<i64>,
    theta_coroot: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    two_rho: Vec<i64>,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.n == other.n
    }
}
impl Eq for RootDatum {}

pub fn type_a_gl(n: usize) -> Result<Arc<RootDatum>> {
    RootDatum::new(GroupKind::Gl, n)
}
pub fn type_a_sl(n: usize) -> Result<Arc<RootDatum>> {
    RootDatum::new(GroupKind::Sl, n)
}
pub fn type_a_pgl(n: usize) -> Result<Arc<RootDatum>> {
    RootDatum::new(GroupKind::Pgl, n)
}
pub fn type_c_adjoint(n: usize) -> Result<Arc<RootDatum>> {
    RootDatum::new(GroupKind::CAdjoint, n)
}

impl RootDatum {
    pub fn new(kind: GroupKind, n: usize) -> Result<Arc<RootDatum>> {
        if n < 2 {
            return Err(Error::RankTooSmall(n));
        }
        let datum = match kind {
            GroupKind::Gl | GroupKind::Sl | GroupKind::Pgl => {
                let mut simple_roots = Vec::new();
                let mut simple_coroots = Vec::new();
                for i in 0..n - 1 {
                    let mut r = vec![0i64; n];
                    r[i] = 1;
                    r[i + 1] = -1;
                    simple_roots.push(r.clone());
                    simple_coroots.push(r);
                }
                let mut theta = vec![0i64; n];
                theta[0] = 1;
                theta[n - 1] = -1;
                let positive_roots: Vec<Vec<i64>> = (0..n)
                    .flat_map(|i| {
                        (i + 1..n).map(move |j| (i, j)).collect::<Vec<_>>()
                    })
                    .map(|(i, j)| {
                        let mut r = vec![0i64; n];
                        r[i] = 1;
                        r[j] = -1;
                        r
                    })
                    .collect();
                let two_rho = sum_vecs(&positive_roots, n);
                RootDatum {
                    kind,
                    n,
                    coweight_denom: 1,
                    simple_roots,
                    simple_coroots,
                    theta: theta.clone(),
                    theta_coroot: theta,
                    positive_roots,
                    two_rho,
                }
            }
            GroupKind::CAdjoint => {
                let mut simple_roots = Vec::new();
                let mut simple_coroots = Vec::new();
                for i in 0..n - 1 {
                    let mut r = vec![0i64; n];
                    r[i] = 1;
                    r[i + 1] = -1;
                    simple_roots.push(r.clone());
                    // Coroots are stored doubled, like all coweights.
                    simple_coroots.push(r.iter().map(|x| 2 * x).collect());
                }
                let mut long = vec![0i64; n];
                long[n - 1] = 2;
                simple_roots.push(long);
                let mut long_co = vec![0i64; n];
                long_co[n - 1] = 2; // = ε_n doubled
                simple_coroots.push(long_co);

                let mut theta = vec![0i64; n];
                theta[0] = 2;
                let mut theta_co = vec![0i64; n];
                theta_co[0] = 2; // = ε_1 doubled

                let mut positive_roots = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        let mut r = vec![0i64; n];
                        r[i] = 1;
                        r[j] = -1;
                        positive_roots.push(r);
                        let mut r = vec![0i64; n];
                        r[i] = 1;
                        r[j] = 1;
                        positive_roots.push(r);
                    }
                    let mut r = vec![0i64; n];
                    r[i] = 2;
                    positive_roots.push(r);
                }
                let two_rho = sum_vecs(&positive_roots, n);
                RootDatum {
                    kind,
                    n,
                    coweight_denom: 2,
                    simple_roots,
                    simple_coroots,
                    theta,
                    theta_coroot: theta_co,
                    positive_roots,
                    two_rho,
                }
            }
        };
        Ok(Arc::new(datum))
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_type_a(&self) -> bool {
        matches!(self.kind, GroupKind::Gl | GroupKind::Sl | GroupKind::Pgl)
    }

    /// Size of the finite index set I (nodes are 1..=num_simple).
    pub fn num_simple(&self) -> usize {
        match self.kind {
            GroupKind::CAdjoint => self.n,
            _ => self.n - 1,
        }
    }

    pub fn coweight_denom(&self) -> i64 {
        self.coweight_denom
    }

    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.simple_roots[i - 1]
    }

    pub fn simple_coroot(&self, i: usize) -> &[i64] {
        &self.simple_coroots[i - 1]
    }

    pub fn theta(&self) -> &[i64] {
        &self.theta
    }

    pub fn theta_coroot(&self) -> &[i64] {
        &self.theta_coroot
    }

    /// α_0 = −θ, the classical projection of the affine simple root.
    pub fn alpha_zero(&self) -> Vec<i64> {
        self.theta.iter().map(|x| -x).collect()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    /// ⟨μ, λ⟩ for a stored coweight μ and a weight λ.
    pub fn pairing(&self, coweight: &[i64], weight: &[i64]) -> i64 {
        let dot: i64 = coweight.iter().zip(weight).map(|(a, b)| a * b).sum();
        debug_assert_eq!(
            dot % self.coweight_denom,
            0,
            "pairing of {:?} with {:?} is not integral",
            coweight,
            weight
        );
        dot / self.coweight_denom
    }

    pub fn simple_reflection_perm(&self, i: usize) -> FinitePerm {
        debug_assert!((1..=self.num_simple()).contains(&i));
        if self.kind == GroupKind::CAdjoint && i == self.n {
            FinitePerm::sign_flip(self.n, self.n)
        } else {
            FinitePerm::transposition(self.n, i, i + 1)
        }
    }

    /// The reflection s_θ in the highest root.
    pub fn s_theta_perm(&self) -> FinitePerm {
        match self.kind {
            GroupKind::CAdjoint => FinitePerm::sign_flip(self.n, 1),
            _ => FinitePerm::transposition(self.n, 1, self.n),
        }
    }

    /// Standard (lifted, for GL/PGL) fundamental coweight ϖ_i∨ in stored
    /// coordinates.
    pub fn fund_coweight(&self, i: usize) -> Result<Vec<i64>> {
        match self.kind {
            GroupKind::Gl | GroupKind::Pgl => {
                if !(1..self.n).contains(&i) {
                    return Err(Error::IndexOutOfRange(i as i64));
                }
                let mut v = vec![0i64; self.n];
                v[..i].fill(1);
                Ok(v)
            }
            GroupKind::Sl => Err(Error::Unsupported(
                "SL_n has no fundamental coweights in its cocharacter lattice".into(),
            )),
            GroupKind::CAdjoint => {
                if !(1..=self.n).contains(&i) {
                    return Err(Error::IndexOutOfRange(i as i64));
                }
                let mut v = vec![0i64; self.n];
                if i < self.n {
                    v[..i].fill(2);
                } else {
                    v.fill(1);
                }
                Ok(v)
            }
        }
    }

    /// Canonical representative of a coweight (PGL works modulo Zε).
    pub fn canonicalize_coweight(&self, mut v: Vec<i64>) -> Vec<i64> {
        if self.kind == GroupKind::Pgl {
            let s: i64 = v.iter().sum();
            let c = s.div_euclid(self.n as i64);
            for x in &mut v {
                *x -= c;
            }
        }
        v
    }

    /// Class of a coweight in X∨/Q∨, the fundamental-group grading.
    /// GL: Z; PGL: Z/n; SL: trivial; adjoint C: Z/2 (1 means the class
    /// of ϖ_n∨).
    pub fn fundamental_class(&self, coweight: &[i64]) -> i64 {
        match self.kind {
            GroupKind::Gl => coweight.iter().sum(),
            GroupKind::Pgl => coweight.iter().sum::<i64>().rem_euclid(self.n as i64),
            GroupKind::Sl => 0,
            GroupKind::CAdjoint => coweight[0].rem_euclid(2),
        }
    }

    /// Number of classes; 0 encodes the infinite group Z (GL case).
    pub fn fundamental_order(&self) -> usize {
        match self.kind {
            GroupKind::Gl => 0,
            GroupKind::Pgl => self.n,
            GroupKind::Sl => 1,
            GroupKind::CAdjoint => 2,
        }
    }

    /// The rotation u_1 = s_1 s_2 ⋯ s_{n−1} of type A (j ↦ j+1 cyclic).
    pub fn rotation_perm(&self) -> FinitePerm {
        debug_assert!(self.is_type_a());
        let n = self.n as i64;
        FinitePerm::from_images((1..=n).map(|j| j % n + 1).collect())
    }

    /// The pair (t_π, u_π) for the fundamental element of class m.
    pub fn fundamental_element(&self, m: i64) -> (Vec<i64>, FinitePerm) {
        match self.kind {
            GroupKind::Sl => {
                debug_assert_eq!(m, 0);
                (vec![0; self.n], FinitePerm::identity(self.n))
            }
            GroupKind::Gl => {
                // τ^{rn+i} = t_ε^r t_{ε_1+⋯+ε_i} u_1^i
                let n = self.n as i64;
                let r = m.div_euclid(n);
                let i = m.rem_euclid(n);
                let mut t = vec![r; self.n];
                for slot in 0..i as usize {
                    t[slot] += 1;
                }
                (t, self.rotation_perm().pow(i))
            }
            GroupKind::Pgl => {
                let i = m.rem_euclid(self.n as i64);
                let t = if i == 0 {
                    vec![0; self.n]
                } else {
                    self.fund_coweight(i as usize).unwrap()
                };
                (
                    self.canonicalize_coweight(t),
                    self.rotation_perm().pow(i),
                )
            }
            GroupKind::CAdjoint => {
                if m.rem_euclid(2) == 0 {
                    (vec![0; self.n], FinitePerm::identity(self.n))
                } else {
                    // π_n = t_{ϖ_n∨} u_n with u_n(j) = −(n+1−j).
                    let n = self.n as i64;
                    let u = FinitePerm::from_images((1..=n).map(|j| -(n + 1 - j)).collect());
                    (vec![1; self.n], u)
                }
            }
        }
    }

    /// Special nodes i ∈ Iaf^s \ {0} with (i, t_{π_i}, u_{π_i}). For GL
    /// the single generator τ is reported under node 1.
    pub fn fundamental_group_elements(&self) -> Vec<(usize, Vec<i64>, FinitePerm)> {
        match self.kind {
            GroupKind::Sl => vec![],
            GroupKind::Gl => {
                let (t, u) = self.fundamental_element(1);
                vec![(1, t, u)]
            }
            GroupKind::Pgl => (1..self.n)
                .map(|i| {
                    let (t, u) = self.fundamental_element(i as i64);
                    (i, t, u)
                })
                .collect(),
            GroupKind::CAdjoint => {
                let (t, u) = self.fundamental_element(1);
                vec![(self.n, t, u)]
            }
        }
    }

    /// The node i* with π_i^{-1} = π_{i*}.
    pub fn dual_node(&self, i: usize) -> usize {
        match self.kind {
            GroupKind::Pgl => (self.n - i % self.n) % self.n,
            GroupKind::CAdjoint => i,
            _ => i,
        }
    }

    pub fn is_antidominant(&self, coweight: &[i64]) -> bool {
        (1..=self.num_simple()).all(|i| self.pairing(coweight, self.simple_root(i)) <= 0)
    }

    pub fn json_descriptor(&self) -> serde_json::Value {
        let t = match self.kind {
            GroupKind::Gl => "gl",
            GroupKind::Sl => "sl",
            GroupKind::Pgl => "pgl",
            GroupKind::CAdjoint => "c_adjoint",
        };
        serde_json::json!({"type": t, "n": self.n})
    }
}

fn sum_vecs(vs: &[Vec<i64>], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n];
    for v in vs {
        for (o, x) in out.iter_mut().zip(v) {
            *o += x;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl3_highest_root() {
        let d = type_a_gl(3).unwrap();
        assert_eq!(d.theta(), &[1, 0, -1]);
        assert_eq!(d.theta_coroot(), &[1, 0, -1]);
        assert_eq!(d.pairing(d.theta_coroot(), d.theta()), 2);
    }

    #[test]
    fn gl_pairing_is_kronecker() {
        let d = type_a_gl(4).unwrap();
        let eps1 = [1, 0, 0, 0];
        let a1 = [1, 0, 0, 0];
        let a2 = [0, 1, 0, 0];
        assert_eq!(d.pairing(&eps1, &a1), 1);
        assert_eq!(d.pairing(&eps1, &a2), 0);
        // ⟨ε, a_1−a_2⟩ = 0 for ε = Σ ε_i.
        let eps = [1, 1, 1, 1];
        assert_eq!(d.pairing(&eps, &[1, -1, 0, 0]), 0);
    }

    #[test]
    fn cartan_matrix_consistency() {
        for d in [
            type_a_gl(4).unwrap(),
            type_a_sl(3).unwrap(),
            type_a_pgl(5).unwrap(),
            type_c_adjoint(3).unwrap(),
        ] {
            let m = d.num_simple();
            for i in 1..=m {
                for j in 1..=m {
                    let c = d.pairing(d.simple_coroot(i), d.simple_root(j));
                    if i == j {
                        assert_eq!(c, 2);
                    } else {
                        assert!(c <= 0);
                    }
                }
            }
        }
    }

    #[test]
    fn c3_cartan_entries() {
        let d = type_c_adjoint(3).unwrap();
        // ⟨α_2∨, α_3⟩ = −2 and ⟨α_3∨, α_2⟩ = −1 (long root at the end).
        assert_eq!(d.pairing(d.simple_coroot(2), d.simple_root(3)), -2);
        assert_eq!(d.pairing(d.simple_coroot(3), d.simple_root(2)), -1);
    }

    #[test]
    fn pairing_invariance_under_weyl() {
        let d = type_c_adjoint(3).unwrap();
        let mu = d.fund_coweight(3).unwrap();
        let lam = d.theta().to_vec();
        for i in 1..=3 {
            let u = d.simple_reflection_perm(i);
            assert_eq!(
                d.pairing(&u.act_on_vec(&mu), &u.act_on_vec(&lam)),
                d.pairing(&mu, &lam)
            );
        }
    }

    #[test]
    fn fund_coweights_dual_to_simple_roots() {
        for d in [type_a_pgl(4).unwrap(), type_c_adjoint(3).unwrap()] {
            for i in 1..=d.num_simple() {
                if let Ok(w) = d.fund_coweight(i) {
                    for j in 1..=d.num_simple() {
                        let expect = if i == j { 1 } else { 0 };
                        assert_eq!(d.pairing(&w, d.simple_root(j)), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn perm_compose_inverse() {
        let u = FinitePerm::from_images(vec![2, 3, 1]);
        assert!(u.compose(&u.inverse()).is_identity());
        assert_eq!(u.pow(3), FinitePerm::identity(3));
    }

    #[test]
    fn c3_un_is_negated_reversal() {
        let d = type_c_adjoint(3).unwrap();
        let (_, _, u) = d.fundamental_group_elements().pop().unwrap();
        assert_eq!(u.images(), &[-3, -2, -1]);
        // u_n sends ϖ_n∨ to −ϖ_n∨ (n* = n).
        let w = d.fund_coweight(3).unwrap();
        let neg: Vec<i64> = w.iter().map(|x| -x).collect();
        assert_eq!(u.act_on_vec(&w), neg);
    }

    #[test]
    fn n_too_small() {
        assert!(type_a_gl(1).is_err());
    }
}
