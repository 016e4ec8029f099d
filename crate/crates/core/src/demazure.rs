//! The module action on completed symmetric series and everything
//! built from it: the double classes g_w(y|b) and g̃_w(y|b), the
//! cohomology classes s_w(y|a), the infinite-rank families ĝ_λ and the
//! Molev dual Schur functions ŝ_λ, plus k-conjugation.
//!
//! Translations t_{±ε_i} act by Ω(b_i|y)^{±1}; the finite Weyl group
//! permutes the parameters; T_i = c(α_i)^{-1}(s_i − 1) acts by exact
//! coefficientwise division for i ∈ I, and through the Ω(b_n)-twisted
//! antisymmetrization for i = 0.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::coeff::{CoeffMode, IndexedLaurent, IndexedRing, LaurentPoly, LaurentRing, Ring};
use crate::error::{Error, Result};
use crate::ext_weyl::{infinite_partition_word, ExtWeylElement};
use crate::partition::Partition;
use crate::root_data::RootDatum;
use crate::symseries::{omega_tilde_h, SymSeries};

pub type KSeries = SymSeries<LaurentRing>;
pub type HSeries = SymSeries<LaurentRing>;
pub type InfSeries = SymSeries<IndexedRing>;

// ---------------------------------------------------------------------
// Finite-rank K mode.
// ---------------------------------------------------------------------

pub struct KDemazure {
    datum: Arc<RootDatum>,
    ring: LaurentRing,
    cap: u32,
    omegas: Vec<KSeries>,
    omega_invs: Vec<KSeries>,
    cache: RwLock<HashMap<(bool, ExtWeylElement), KSeries>>,
}

impl KDemazure {
    pub fn new(datum: &Arc<RootDatum>, cap: u32) -> Self {
        assert!(datum.is_type_a(), "the series model is type A");
        let n = datum.n();
        let ring = LaurentRing::k(n);
        let omegas: Vec<KSeries> = (1..=n)
            .map(|i| SymSeries::omega(&ring, cap, &LaurentPoly::b(n, i)))
            .collect();
        let omega_invs = omegas.iter().map(|o| o.invert().unwrap()).collect();
        KDemazure {
            datum: datum.clone(),
            ring,
            cap,
            omegas,
            omega_invs,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn ring(&self) -> &LaurentRing {
        &self.ring
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn n(&self) -> usize {
        self.datum.n()
    }

    pub fn one(&self) -> KSeries {
        SymSeries::one(&self.ring, self.cap)
    }

    /// Ω(b_i|y), 1-based.
    pub fn omega(&self, i: usize) -> &KSeries {
        &self.omegas[i - 1]
    }

    pub fn omega_inv(&self, i: usize) -> &KSeries {
        &self.omega_invs[i - 1]
    }

    fn c_alpha(&self, i: usize) -> LaurentPoly {
        let root = if i == 0 {
            self.datum.alpha_zero()
        } else {
            self.datum.simple_root(i).to_vec()
        };
        LaurentPoly::c_of(self.n(), CoeffMode::KMultiplicative, &root).unwrap()
    }

    /// Parameter rotation b_j ↦ b_{j+m} (indices mod n) on coefficients.
    pub fn rotate_coeffs(&self, f: &KSeries, m: i64) -> KSeries {
        let u = self.datum.rotation_perm().pow(m);
        f.map_coeffs(|c| c.weyl_act(&u))
    }

    /// s_i for i ∈ I: permute b_i, b_{i+1} in the coefficients.
    /// s_0: multiply by Ω(b_1)/Ω(b_n) and apply s_θ to coefficients.
    pub fn s_apply(&self, i: usize, f: &KSeries) -> KSeries {
        if i == 0 {
            let swapped = f.map_coeffs(|c| c.weyl_act(&self.datum.s_theta_perm()));
            self.omega(1).mul(self.omega_inv(self.n())).mul(&swapped)
        } else {
            f.map_coeffs(|c| c.weyl_act(&self.datum.simple_reflection_perm(i)))
        }
    }

    /// τ(f) = Ω(b_1|y)·f(y|rot(b)).
    pub fn tau_apply(&self, f: &KSeries) -> KSeries {
        self.omega(1).mul(&self.rotate_coeffs(f, 1))
    }

    pub fn tau_inv_apply(&self, f: &KSeries) -> KSeries {
        self.rotate_coeffs(&self.omega_inv(1).mul(f), -1)
    }

    /// T_i(f). For i ∈ I a coefficientwise divided difference; for
    /// i = 0 the exact-division route: antisymmetrize Ω(b_n)f under
    /// s_θ, divide every coefficient by b_1 − b_n = e^{−a_n} − e^{−a_1},
    /// and unwind with e^{−a_n}·Ω(b_n)^{-1}.
    pub fn t_apply(&self, i: usize, f: &KSeries) -> Result<KSeries> {
        let n = self.n();
        if i == 0 {
            let g = self.omega(n).mul(f);
            let anti = g.map_coeffs(|c| c.weyl_act(&self.datum.s_theta_perm())).sub(&g);
            let b1_minus_bn = LaurentPoly::b(n, 1).sub(&LaurentPoly::b(n, n)).unwrap();
            let divided = anti.try_map_coeffs(|c| {
                if c.is_zero() {
                    Ok(c.clone())
                } else {
                    c.exact_div(&b1_minus_bn)
                }
            })?;
            let mut e = vec![0i64; n];
            e[n - 1] = -1;
            let e_neg_an = LaurentPoly::exp(n, e);
            Ok(divided.scalar_mul(&e_neg_an).mul(self.omega_inv(n)))
        } else {
            let c_a = self.c_alpha(i);
            let u = self.datum.simple_reflection_perm(i);
            f.try_map_coeffs(|c| {
                let num = c.weyl_act(&u).sub(c)?;
                if num.is_zero() {
                    Ok(num)
                } else {
                    num.exact_div(&c_a)
                }
            })
        }
    }

    /// The slower direct route for T_0: series inversion then a
    /// coefficientwise division check. Kept as a cross-check.
    pub fn t_zero_direct(&self, f: &KSeries) -> Result<KSeries> {
        let num = self.s_apply(0, f).sub(f);
        let c0 = self.c_alpha(0);
        num.try_map_coeffs(|c| {
            if c.is_zero() {
                Ok(c.clone())
            } else {
                c.exact_div(&c0)
            }
        })
    }

    pub fn d_apply(&self, i: usize, f: &KSeries) -> Result<KSeries> {
        Ok(self.t_apply(i, f)?.add(f))
    }

    /// g_w (ideal flavour, closed = false) or g̃_w (closed = true):
    /// the operator word along the affine part, then the τ-power.
    pub fn g_class(&self, w: &ExtWeylElement, closed: bool) -> Result<KSeries> {
        if !w.is_grassmannian() {
            return Err(Error::NotGrassmannian(format!("{:?}", w)));
        }
        let key = (closed, w.clone());
        if let Some(hit) = self.cache.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let (m, v) = w.fundamental_split();
        let word = v.reduced_word();
        let mut val = self.one();
        for &i in word.word.iter().rev() {
            val = if closed {
                self.d_apply(i, &val)?
            } else {
                self.t_apply(i, &val)?
            };
        }
        for _ in 0..m.abs() {
            val = if m > 0 {
                self.tau_apply(&val)
            } else {
                self.tau_inv_apply(&val)
            };
        }
        self.cache.write().unwrap().insert(key, val.clone());
        Ok(val)
    }

    /// φ_0 on coefficients: the non-equivariant specialization b = 0.
    pub fn specialize_b0(&self, f: &KSeries) -> KSeries {
        f.map_coeffs(|c| {
            LaurentPoly::constant(self.n(), CoeffMode::KMultiplicative, c.phi0())
        })
    }

    /// ι̂ applied termwise: ι on coefficients and ω̃ on each h-generator.
    /// Exact on polynomial data (every h-degree of the true series
    /// present below the cap); see iota-related checks for the resummed
    /// identities on completed series.
    pub fn iota_hat(&self, f: &KSeries) -> KSeries {
        let mut out = SymSeries::zero(&self.ring, self.cap);
        for (mu, c) in f.terms() {
            let mut acc = SymSeries::constant(&self.ring, self.cap, c.involution_iota());
            for &part in mu.parts() {
                acc = acc.mul(&omega_tilde_h(&self.ring, self.cap, part));
            }
            out = out.add(&acc);
        }
        out
    }

    /// The exact resummed image ι̂(Ω(b_i|y)) = Ω(b_{n+1−i}|y)^{-1},
    /// realized as Σ_m (−b_{n+1−i})^m e_m.
    pub fn iota_omega_image(&self, i: usize) -> KSeries {
        let n = self.n();
        let b = LaurentPoly::b(n, n + 1 - i);
        let mut out = SymSeries::zero(&self.ring, self.cap);
        let mut pw = self.ring.one();
        for m in 0..=self.cap {
            out = out.add(&SymSeries::elementary(&self.ring, self.cap, m).scalar_mul(&pw));
            pw = pw.mul(&b.neg()).unwrap();
        }
        out
    }
}

// ---------------------------------------------------------------------
// Finite-rank H (cohomology) mode: double k-Schur functions s_w(y|a).
// ---------------------------------------------------------------------

pub struct HDemazure {
    datum: Arc<RootDatum>,
    ring: LaurentRing,
    cap: u32,
    omegas: Vec<HSeries>,
    omega_invs: Vec<HSeries>,
}

impl HDemazure {
    pub fn new(datum: &Arc<RootDatum>, cap: u32) -> Self {
        assert!(datum.is_type_a());
        let n = datum.n();
        let ring = LaurentRing::h(n);
        let omegas: Vec<HSeries> = (1..=n)
            .map(|i| SymSeries::omega(&ring, cap, &LaurentPoly::a(n, i)))
            .collect();
        let omega_invs = omegas.iter().map(|o| o.invert().unwrap()).collect();
        HDemazure {
            datum: datum.clone(),
            ring,
            cap,
            omegas,
            omega_invs,
        }
    }

    pub fn ring(&self) -> &LaurentRing {
        &self.ring
    }

    pub fn one(&self) -> HSeries {
        SymSeries::one(&self.ring, self.cap)
    }

    pub fn omega_a(&self, i: usize) -> &HSeries {
        &self.omegas[i - 1]
    }

    fn n(&self) -> usize {
        self.datum.n()
    }

    /// A_i = (a_i − a_{i+1})^{-1}(1 − s_i) for i ∈ I;
    /// A_0 = (a_n − a_1)^{-1}(1 − t_{θ∨}s_θ) with t_{θ∨} acting by
    /// Ω(a_1|y)Ω(a_n|y)^{-1}.
    pub fn a_apply(&self, i: usize, f: &HSeries) -> Result<HSeries> {
        let n = self.n();
        if i == 0 {
            let lhs = self.omega_a(n).mul(f);
            let rhs = self
                .omega_a(1)
                .mul(&f.map_coeffs(|c| c.weyl_act(&self.datum.s_theta_perm())));
            let num = lhs.sub(&rhs);
            let an_minus_a1 = LaurentPoly::a(n, n).sub(&LaurentPoly::a(n, 1)).unwrap();
            let divided = num.try_map_coeffs(|c| {
                if c.is_zero() {
                    Ok(c.clone())
                } else {
                    c.exact_div(&an_minus_a1)
                }
            })?;
            Ok(divided.mul(&self.omega_invs[n - 1]))
        } else {
            let u = self.datum.simple_reflection_perm(i);
            let d = LaurentPoly::a(n, i).sub(&LaurentPoly::a(n, i + 1)).unwrap();
            f.try_map_coeffs(|c| {
                let num = c.sub(&c.weyl_act(&u))?;
                if num.is_zero() {
                    Ok(num)
                } else {
                    num.exact_div(&d)
                }
            })
        }
    }

    /// τ(f) = Ω(a_1|y)·f(y|rot(a)).
    pub fn tau_apply(&self, f: &HSeries) -> HSeries {
        let u = self.datum.rotation_perm();
        self.omega_a(1).mul(&f.map_coeffs(|c| c.weyl_act(&u)))
    }

    /// The double k-Schur function s_w(y|a) = A_w(1).
    pub fn cohomology_class(&self, w: &ExtWeylElement) -> Result<HSeries> {
        if !w.is_grassmannian() {
            return Err(Error::NotGrassmannian(format!("{:?}", w)));
        }
        let (m, v) = w.fundamental_split();
        let word = v.reduced_word();
        let mut val = self.one();
        for &i in word.word.iter().rev() {
            val = self.a_apply(i, &val)?;
        }
        for _ in 0..m {
            val = self.tau_apply(&val);
        }
        if m < 0 {
            return Err(Error::Unsupported(
                "negative τ-powers are not used in the cohomology model".into(),
            ));
        }
        Ok(val)
    }

    /// Evaluation at a = 0.
    pub fn specialize_a0(&self, f: &HSeries) -> HSeries {
        f.map_coeffs(|c| LaurentPoly::constant(self.n(), CoeffMode::HAdditive, c.phi0()))
    }
}

// ---------------------------------------------------------------------
// Infinite-rank K mode: ĝ_λ(y|b) over R(T_Z).
// ---------------------------------------------------------------------

pub struct InfKDemazure {
    ring: IndexedRing,
    cap: u32,
    // Ω(b_i|y) and inverses are built on demand per index.
    omega_cache: RwLock<HashMap<i64, (InfSeries, InfSeries)>>,
}

impl InfKDemazure {
    pub fn new(cap: u32) -> Self {
        InfKDemazure {
            ring: IndexedRing::k(),
            cap,
            omega_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn ring(&self) -> &IndexedRing {
        &self.ring
    }

    pub fn one(&self) -> InfSeries {
        SymSeries::one(&self.ring, self.cap)
    }

    pub fn omega(&self, i: i64) -> InfSeries {
        self.omega_pair(i).0
    }

    pub fn omega_inv(&self, i: i64) -> InfSeries {
        self.omega_pair(i).1
    }

    fn omega_pair(&self, i: i64) -> (InfSeries, InfSeries) {
        if let Some(hit) = self.omega_cache.read().unwrap().get(&i) {
            return hit.clone();
        }
        let om = SymSeries::omega(&self.ring, self.cap, &IndexedLaurent::b(i));
        let pair = (om.clone(), om.invert().unwrap());
        self.omega_cache.write().unwrap().insert(i, pair.clone());
        pair
    }

    /// T̂_i(f) = c(α_i)^{-1}(s_i − 1)(f). For i ≠ 0 the reflection only
    /// permutes coefficients; s_0 carries the Ω(b_1)/Ω(b_0) twist.
    pub fn t_apply(&self, i: i64, f: &InfSeries) -> Result<InfSeries> {
        if i == 0 {
            let g = self.omega(0).mul(f);
            let anti = g.map_coeffs(|c| c.swap(0)).sub(&g);
            let b1_minus_b0 = IndexedLaurent::b(1).sub(&IndexedLaurent::b(0)).unwrap();
            let divided = anti.try_map_coeffs(|c| {
                if c.is_zero() {
                    Ok(c.clone())
                } else {
                    c.exact_div(&b1_minus_b0)
                }
            })?;
            let mut e = crate::coeff::exponent::SparseExp::new();
            e.insert(0, -1);
            let e_neg_a0 =
                IndexedLaurent::monomial(CoeffMode::KMultiplicative, e, 1.into()).unwrap();
            Ok(divided.scalar_mul(&e_neg_a0).mul(&self.omega_inv(0)))
        } else {
            let c = IndexedLaurent::c_simple(CoeffMode::KMultiplicative, i);
            f.try_map_coeffs(|x| {
                let num = x.swap(i).sub(x)?;
                if num.is_zero() {
                    Ok(num)
                } else {
                    num.exact_div(&c)
                }
            })
        }
    }

    pub fn d_apply(&self, i: i64, f: &InfSeries) -> Result<InfSeries> {
        Ok(self.t_apply(i, f)?.add(f))
    }

    /// ĝ_λ(y|b) = T̂_{w_λ}(1), or the closed variant with D̂.
    pub fn infinite_class(&self, lambda: &Partition, closed: bool) -> Result<InfSeries> {
        let word = infinite_partition_word(lambda);
        let mut val = self.one();
        for &i in word.iter().rev() {
            val = if closed {
                self.d_apply(i, &val)?
            } else {
                self.t_apply(i, &val)?
            };
        }
        Ok(val)
    }

    /// The finite-rank image under b_i ↦ b_{i mod n}.
    pub fn reduce_mod(&self, f: &InfSeries, n: usize) -> KSeries {
        let ring = LaurentRing::k(n);
        let mut out = SymSeries::zero(&ring, self.cap);
        for (mu, c) in f.terms() {
            out = out.add(&SymSeries::h_monomial(
                &ring,
                self.cap,
                mu.clone(),
                c.reduce_mod(n),
            ));
        }
        out
    }

    /// b = 0 specialization, for the reverse-plane-partition oracle.
    pub fn specialize_b0(&self, f: &InfSeries) -> InfSeries {
        f.map_coeffs(|c| IndexedLaurent::constant(CoeffMode::KMultiplicative, c.phi0()))
    }
}

// ---------------------------------------------------------------------
// Infinite-rank H mode: Molev dual Schur functions ŝ_λ(y|a).
// ---------------------------------------------------------------------

pub struct MolevDemazure {
    ring: IndexedRing,
    cap: u32,
    omega_cache: RwLock<HashMap<i64, (InfSeries, InfSeries)>>,
    rho_cache: RwLock<HashMap<(bool, u32), InfSeries>>,
}

impl MolevDemazure {
    pub fn new(cap: u32) -> Self {
        MolevDemazure {
            ring: IndexedRing::h(),
            cap,
            omega_cache: RwLock::new(HashMap::new()),
            rho_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn ring(&self) -> &IndexedRing {
        &self.ring
    }

    pub fn one(&self) -> InfSeries {
        SymSeries::one(&self.ring, self.cap)
    }

    pub fn omega_a(&self, i: i64) -> InfSeries {
        self.omega_pair(i).0
    }

    fn omega_pair(&self, i: i64) -> (InfSeries, InfSeries) {
        if let Some(hit) = self.omega_cache.read().unwrap().get(&i) {
            return hit.clone();
        }
        let om = SymSeries::omega(&self.ring, self.cap, &IndexedLaurent::a(i));
        let pair = (om.clone(), om.invert().unwrap());
        self.omega_cache.write().unwrap().insert(i, pair.clone());
        pair
    }

    /// A_i = Ω(a_0)^{-1} Â_i Ω(a_0): the plain divided difference
    /// (a_i−a_{i+1})^{-1}(1−s_i^a) away from 0, twisted at i = 0.
    pub fn a_apply(&self, i: i64, f: &InfSeries) -> Result<InfSeries> {
        let d = IndexedLaurent::a(i).sub(&IndexedLaurent::a(i + 1)).unwrap();
        if i == 0 {
            let num = self
                .omega_a(0)
                .mul(f)
                .sub(&self.omega_a(1).mul(&f.map_coeffs(|c| c.swap(0))));
            let divided = num.try_map_coeffs(|c| {
                if c.is_zero() {
                    Ok(c.clone())
                } else {
                    c.exact_div(&d)
                }
            })?;
            Ok(divided.mul(&self.omega_pair(0).1))
        } else {
            f.try_map_coeffs(|c| {
                let num = c.sub(&c.swap(i))?;
                if num.is_zero() {
                    Ok(num)
                } else {
                    num.exact_div(&d)
                }
            })
        }
    }

    /// ŝ_w(y|a) = A_w(1) for a word in S_Z.
    pub fn class_from_word(&self, word: &[i64]) -> Result<InfSeries> {
        let mut val = self.one();
        for &i in word.iter().rev() {
            val = self.a_apply(i, &val)?;
        }
        Ok(val)
    }

    /// ŝ_λ(y|a) = A_{w_λ}(1).
    pub fn molev_class(&self, lambda: &Partition) -> Result<InfSeries> {
        self.class_from_word(&infinite_partition_word(lambda))
    }

    /// One-row class ŝ_{ρ_m} (row = true) or one-column ŝ_{ρ'_m}:
    /// ρ_m = s_{m−1}⋯s_1s_0, ρ'_m = s_{−m+1}⋯s_{−1}s_0.
    pub fn rho_class(&self, row: bool, m: u32) -> Result<InfSeries> {
        if m == 0 {
            return Ok(self.one());
        }
        if let Some(hit) = self.rho_cache.read().unwrap().get(&(row, m)) {
            return Ok(hit.clone());
        }
        let word: Vec<i64> = if row {
            (0..m as i64).rev().collect()
        } else {
            (-(m as i64) + 1..=0).collect()
        };
        let val = self.class_from_word(&word)?;
        self.rho_cache.write().unwrap().insert((row, m), val.clone());
        Ok(val)
    }

    /// Substitution a_i ↦ a_{i+shift} on coefficients (the τ^shift
    /// parameter twist).
    pub fn shift_params(&self, f: &InfSeries, shift: i64) -> InfSeries {
        f.map_coeffs(|c| c.shift(shift))
    }

    /// Jacobi–Trudi determinant: rows from λ (row kind) or λ' (column
    /// kind), with the parameter shifts τ^{−j+1} resp. τ^{j−1}.
    pub fn jacobi_trudi(&self, lambda: &Partition, row_kind: bool) -> Result<InfSeries> {
        let shape = if row_kind {
            lambda.clone()
        } else {
            lambda.conjugate()
        };
        let s = shape.len();
        if s == 0 {
            return Ok(self.one());
        }
        let mut entries: Vec<Vec<InfSeries>> = Vec::with_capacity(s);
        for i in 0..s {
            let mut row = Vec::with_capacity(s);
            for j in 0..s {
                let m = shape.part(i) as i64 + j as i64 - i as i64;
                let e = if m < 0 {
                    SymSeries::zero(&self.ring, self.cap)
                } else {
                    let base = self.rho_class(row_kind, m as u32)?;
                    let shift = if row_kind {
                        -(j as i64)
                    } else {
                        j as i64
                    };
                    self.shift_params(&base, shift)
                };
                row.push(e);
            }
            entries.push(row);
        }
        Ok(crate::symseries::determinant(&self.ring, self.cap, s, |i, j| {
            entries[i][j].clone()
        }))
    }

    /// The finite-rank image under a_i ↦ a_{i mod n}.
    pub fn reduce_mod(&self, f: &InfSeries, n: usize) -> HSeries {
        let ring = LaurentRing::h(n);
        let mut out = SymSeries::zero(&ring, self.cap);
        for (mu, c) in f.terms() {
            out = out.add(&SymSeries::h_monomial(
                &ring,
                self.cap,
                mu.clone(),
                c.reduce_mod(n),
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext_weyl::{partition_to_grassmannian, rho, rho_prime};
    use crate::oracle;
    use crate::root_data::type_a_gl;
    use crate::symseries::{Hopf, TensorSeries};

    fn ctx(n: usize, cap: u32) -> KDemazure {
        KDemazure::new(&type_a_gl(n).unwrap(), cap)
    }

    #[test]
    fn basic_operator_facts() {
        let dz = ctx(3, 6);
        let one = dz.one();
        assert_eq!(dz.s_apply(1, &one), one);
        for i in 1..=2usize {
            assert_eq!(dz.d_apply(i, &one).unwrap(), one);
        }
        // s_0(1) = Ω(b_1)/Ω(b_n)
        assert_eq!(
            dz.s_apply(0, &one),
            dz.omega(1).mul(dz.omega_inv(3))
        );
        // τ⁻¹(τ(f)) = f on a non-symmetric sample
        let f = dz
            .omega(2)
            .scalar_mul(&LaurentPoly::b(3, 1))
            .add(&SymSeries::h(dz.ring(), 6, 2));
        assert_eq!(dz.tau_inv_apply(&dz.tau_apply(&f)), f);
        assert_eq!(dz.tau_apply(&dz.tau_inv_apply(&f)), f);
    }

    #[test]
    fn t_zero_routes_agree() {
        let dz = ctx(3, 6);
        let one = dz.one();
        let a = dz.t_apply(0, &one).unwrap();
        let b = dz.t_zero_direct(&one).unwrap();
        assert_eq!(a, b);
        let f = dz.omega(1).mul(&SymSeries::h(dz.ring(), 6, 1));
        assert_eq!(dz.t_apply(0, &f).unwrap(), dz.t_zero_direct(&f).unwrap());
        // degree-1 slice of T_0(1) is e^{−a_n}·s_1(y)
        let slice = a.degree_slice(1);
        let want = SymSeries::h(dz.ring(), 6, 1)
            .scalar_mul(&LaurentPoly::exp(3, vec![0, 0, -1]));
        assert_eq!(slice, want);
    }

    #[test]
    fn t_squares_and_braids() {
        let dz = ctx(3, 5);
        let f = dz
            .omega(1)
            .scalar_mul(&LaurentPoly::exp(3, vec![0, 1, -1]))
            .add(&SymSeries::h(dz.ring(), 5, 2).scalar_mul(&LaurentPoly::b(3, 3)));
        for i in 0..=2usize {
            let t = dz.t_apply(i, &f).unwrap();
            let tt = dz.t_apply(i, &t).unwrap();
            assert_eq!(tt, t.neg(), "T_{i}^2 = -T_{i}");
        }
        for (a, b) in [(0usize, 1usize), (1, 2), (0, 2)] {
            let lhs = dz
                .t_apply(a, &dz.t_apply(b, &dz.t_apply(a, &f).unwrap()).unwrap())
                .unwrap();
            let rhs = dz
                .t_apply(b, &dz.t_apply(a, &dz.t_apply(b, &f).unwrap()).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs, "braid {a}{b}");
        }
    }

    #[test]
    fn tau_power_prefactors() {
        // g_{τ^i} = Ω(b_1)⋯Ω(b_i) for i > 0 and
        // Ω(b_{i+1})^{-1}⋯Ω(b_0)^{-1} for i < 0, indices mod n.
        let dz = ctx(3, 5);
        let d = dz.datum().clone();
        for m in 1..=4i64 {
            let w = ExtWeylElement::fundamental(&d, m);
            let got = dz.g_class(&w, false).unwrap();
            let mut want = dz.one();
            for j in 1..=m {
                let idx = ((j - 1).rem_euclid(3) + 1) as usize;
                want = want.mul(dz.omega(idx));
            }
            assert_eq!(got, want, "m={m}");
            assert_eq!(dz.g_class(&w, true).unwrap(), want);
        }
        for m in 1..=3i64 {
            let w = ExtWeylElement::fundamental(&d, -m);
            let got = dz.g_class(&w, false).unwrap();
            // indices i+1, …, 0 reduced mod n, inverse factors
            let mut want = dz.one();
            for j in 0..m {
                let idx = ((-j).rem_euclid(3)) as usize;
                let idx = if idx == 0 { 3 } else { idx };
                want = want.mul(dz.omega_inv(idx));
            }
            assert_eq!(got, want, "m=-{m}");
        }
    }

    #[test]
    fn row_and_column_oracles_small() {
        let n = 3;
        let cap = 6;
        let dz = ctx(n, cap);
        let d = dz.datum().clone();
        for i in 1..=2usize {
            let got = dz.g_class(&rho(&d, i), false).unwrap();
            assert_eq!(got, oracle::single_row_oracle(n, cap, i), "row {i}");
            let got = dz.g_class(&rho_prime(&d, i), false).unwrap();
            assert_eq!(got, oracle::single_column_oracle(n, cap, i), "col {i}");
        }
        // b = 0 specializations
        for i in 1..=2usize {
            let got = dz.specialize_b0(&dz.g_class(&rho(&d, i), false).unwrap());
            assert_eq!(got, oracle::single_row_b0(n, cap, i));
            let got = dz.specialize_b0(&dz.g_class(&rho_prime(&d, i), false).unwrap());
            assert_eq!(got, oracle::single_column_b0(n, cap, i));
        }
    }

    #[test]
    fn degree_structure_of_classes() {
        // The b = 0 specialization of g_w is the K-theoretic k-Schur
        // function: a polynomial with top degree exactly ℓ(w) and a
        // nonzero top slice. (The equivariant series itself can have
        // terms below degree ℓ(w): g_{ρ'_2}(y|0) = e_1 + e_2 already
        // does.)
        let dz = ctx(3, 6);
        let d = dz.datum().clone();
        for size in 0..=4u32 {
            for lam in Partition::bounded_of(size, 2) {
                let w = partition_to_grassmannian(&d, &lam).unwrap();
                let g0 = dz.specialize_b0(&dz.g_class(&w, false).unwrap());
                let top = g0.terms().map(|(m, _)| m.size()).max().unwrap_or(0);
                assert_eq!(top, size, "{:?}", lam);
                assert!(!g0.degree_slice(size).is_zero());
            }
        }
        let g = dz.g_class(&rho_prime(&d, 2), false).unwrap();
        assert_eq!(dz.specialize_b0(&g).lowest_degree(), Some(1));
    }

    #[test]
    fn grouplike_tau_classes() {
        let dz = ctx(3, 5);
        let d = dz.datum().clone();
        for m in 1..=2i64 {
            let g = dz
                .g_class(&ExtWeylElement::fundamental(&d, m), false)
                .unwrap();
            assert_eq!(Hopf::coproduct(&g), TensorSeries::of(&g, &g));
        }
    }

    #[test]
    fn iota_intertwines_finite_operators() {
        // ι̂ T_i = T_{n−i} ι̂ and ι̂ s_i = s_{n−i} ι̂ for i ∈ I, exactly
        // on truncated data; and parameter rotation reverses.
        let dz = ctx(3, 5);
        let f = dz
            .omega(2)
            .scalar_mul(&LaurentPoly::b(3, 1))
            .add(&SymSeries::h(dz.ring(), 5, 2).scalar_mul(&LaurentPoly::exp(3, vec![1, 0, -1])));
        for i in 1..=2usize {
            let lhs = dz.iota_hat(&dz.t_apply(i, &f).unwrap());
            let rhs = dz.t_apply(3 - i, &dz.iota_hat(&f)).unwrap();
            assert_eq!(lhs, rhs, "T_{i}");
            let lhs = dz.iota_hat(&dz.s_apply(i, &f));
            let rhs = dz.s_apply(3 - i, &dz.iota_hat(&f));
            assert_eq!(lhs, rhs, "s_{i}");
        }
        let lhs = dz.iota_hat(&dz.rotate_coeffs(&f, 1));
        let rhs = dz.rotate_coeffs(&dz.iota_hat(&f), -1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn iota_squares_to_identity_on_generators() {
        let dz = ctx(3, 8);
        for l in 1..=8u32 {
            let h = SymSeries::h(dz.ring(), 8, l);
            assert_eq!(dz.iota_hat(&dz.iota_hat(&h)), h, "l={l}");
        }
    }

    #[test]
    fn iota_omega_resummed_image() {
        let dz = ctx(3, 6);
        for i in 1..=3usize {
            let img = dz.iota_omega_image(i);
            assert!(dz.omega(4 - i).mul(&img).is_one(), "i={i}");
        }
        assert!(dz.iota_hat(&dz.one()).is_one());
    }

    #[test]
    fn naive_iota_on_truncated_g_exploration() {
        // Exploratory: is the termwise ι̂ of the truncated g_w equal to
        // the truncated g_{w*}? (Expected to fail beyond low degrees
        // because ι̂ does not commute with y-degree truncation.)
        let dz = ctx(3, 5);
        let d = dz.datum().clone();
        let w = ExtWeylElement::simple_reflection(&d, 0);
        let g = dz.g_class(&w, false).unwrap();
        let gs = dz.g_class(&w.star_involution().unwrap(), false).unwrap();
        let naive = dz.iota_hat(&g);
        if naive == gs {
            println!("naive iota matched at cap 5 for s_0");
        } else {
            let diff = naive.sub(&gs);
            println!(
                "naive iota differs for s_0: lowest corrupted degree {:?}",
                diff.lowest_degree()
            );
        }
    }

    #[test]
    fn infinite_classes_and_k_small() {
        let cap = 5;
        let inf = InfKDemazure::new(cap);
        assert!(inf.infinite_class(&Partition::empty(), false).unwrap().is_one());
        // k-small comparison: g_{x_λ}(y|b) = ĝ_λ(y|b^{(n)}) for n = 3.
        let n = 3;
        let dz = ctx(n, cap);
        let d = dz.datum().clone();
        for size in 1..=4u32 {
            for lam in Partition::bounded_of(size, (n - 1) as u32) {
                if !lam.is_k_small(n - 1) {
                    continue;
                }
                let ghat = inf.infinite_class(&lam, false).unwrap();
                let reduced = inf.reduce_mod(&ghat, n);
                let x = partition_to_grassmannian(&d, &lam).unwrap();
                let g = dz.g_class(&x, false).unwrap();
                assert_eq!(reduced, g, "λ = {:?}", lam);
                // and the closed variants
                let ghat_cl = inf.infinite_class(&lam, true).unwrap();
                assert_eq!(inf.reduce_mod(&ghat_cl, n), dz.g_class(&x, true).unwrap());
            }
        }
    }

    #[test]
    fn ghat_matches_rpp_oracle() {
        let cap = 4;
        let inf = InfKDemazure::new(cap);
        for size in 0..=4u32 {
            for lam in Partition::all_of(size) {
                let ghat = inf.infinite_class(&lam, false).unwrap();
                let b0 = inf.specialize_b0(&ghat);
                // move to a plain integer-coefficient finite series
                let fin = inf.reduce_mod(&b0, 2);
                let vars = 4;
                let got = oracle::evaluate_in_variables(
                    &fin.map_coeffs(|c| {
                        LaurentPoly::constant(2, CoeffMode::KMultiplicative, c.phi0())
                    }),
                    vars,
                );
                let want = oracle::rpp_polynomial(&lam, vars);
                assert_eq!(got, want, "λ = {:?}", lam);
            }
        }
    }

    #[test]
    fn molev_jacobi_trudi_small() {
        let cap = 5;
        let mv = MolevDemazure::new(cap);
        // 1×1 determinant: trivially the operator class.
        let lam = Partition::new(vec![2]);
        assert_eq!(
            mv.jacobi_trudi(&lam, true).unwrap(),
            mv.molev_class(&lam).unwrap()
        );
        // (2,1): both determinant kinds agree with the operator build.
        let lam = Partition::new(vec![2, 1]);
        let op = mv.molev_class(&lam).unwrap();
        assert_eq!(mv.jacobi_trudi(&lam, true).unwrap(), op);
        assert_eq!(mv.jacobi_trudi(&lam, false).unwrap(), op);
    }

    #[test]
    fn molev_rho_symmetry() {
        // ŝ_{ρ_i}(y|τ^{−j}a) is symmetric in a_0, a_1 for i ≠ j.
        let cap = 4;
        let mv = MolevDemazure::new(cap);
        for i in 1..=3u32 {
            for j in 1..=3i64 {
                if i as i64 == j {
                    continue;
                }
                let f = mv.shift_params(&mv.rho_class(true, i).unwrap(), -j);
                let swapped = f.map_coeffs(|c| c.swap(0));
                assert_eq!(f, swapped, "i={i} j={j}");
            }
        }
    }

    #[test]
    fn cohomology_classes() {
        let n = 3;
        let cap = 5;
        let hd = HDemazure::new(&type_a_gl(n).unwrap(), cap);
        let d = type_a_gl(n).unwrap();
        assert!(hd.cohomology_class(&ExtWeylElement::identity(&d)).unwrap().is_one());
        // a = 0 specialization of k-small classes is the Schur function
        for lam in [Partition::new(vec![1]), Partition::new(vec![2]), Partition::new(vec![1, 1])] {
            let w = partition_to_grassmannian(&d, &lam).unwrap();
            let s = hd.cohomology_class(&w).unwrap();
            let a0 = hd.specialize_a0(&s);
            let want = SymSeries::schur(hd.ring(), cap, &lam).unwrap();
            assert_eq!(a0, want, "λ = {:?}", lam);
            // bigraded homogeneity: every term has y-degree − a-degree
            // equal to |λ|.
            for (mu, c) in s.terms() {
                for (exp, _) in c.terms() {
                    let adeg: i64 = exp.iter().sum();
                    assert_eq!(mu.size() as i64 - adeg, lam.size() as i64);
                }
            }
        }
        // Molev k-small comparison: s_λ(y|a) = ŝ_λ(y|a^{(n)}).
        let mv = MolevDemazure::new(cap);
        for lam in [Partition::new(vec![1]), Partition::new(vec![2]), Partition::new(vec![1, 1])] {
            let w = partition_to_grassmannian(&d, &lam).unwrap();
            let fin = hd.cohomology_class(&w).unwrap();
            let inf = mv.reduce_mod(&mv.molev_class(&lam).unwrap(), n);
            assert_eq!(fin, inf, "λ = {:?}", lam);
        }
    }

    #[test]
    fn k_lowest_slice_matches_cohomology_a0() {
        // The degree-ℓ(w) slice of g_w(y|0) is the k-Schur function,
        // which is also the a = 0 value of the cohomology class.
        let n = 3;
        let cap = 6;
        let dz = ctx(n, cap);
        let hd = HDemazure::new(&type_a_gl(n).unwrap(), cap);
        let d = dz.datum().clone();
        for size in 0..=4u32 {
            for lam in Partition::bounded_of(size, 2) {
                let w = partition_to_grassmannian(&d, &lam).unwrap();
                let g0 = dz.specialize_b0(&dz.g_class(&w, false).unwrap());
                let k_schur_k = g0.degree_slice(size);
                let h0 = hd.specialize_a0(&hd.cohomology_class(&w).unwrap());
                // compare integer coefficients across the two modes
                let a: Vec<_> = k_schur_k
                    .terms()
                    .map(|(m, c)| (m.clone(), c.phi0()))
                    .collect();
                let b: Vec<_> = h0.terms().map(|(m, c)| (m.clone(), c.phi0())).collect();
                assert_eq!(a, b, "λ = {:?}", lam);
            }
        }
    }
}
