//! Named verification suites. Each suite runs a grid of independent
//! exact checks (in parallel under the `parallel` feature) and returns
//! a report; the acceptance tests and the CLI `verify` subcommand both
//! drive these.

use serde::Serialize;

use crate::coeff::{CoeffMode, LaurentPoly, LaurentRing, Ring};
use crate::demazure::{InfKDemazure, KDemazure, MolevDemazure};
use crate::error::Result;
use crate::exec;
use crate::ext_weyl::{
    kappa, partition_to_grassmannian, rho, rho_prime, ExtWeylElement,
};
use crate::nilhecke::NilHeckeElement;
use crate::oracle;
use crate::partition::Partition;
use crate::peterson::{ClassKind, Peterson};
use crate::root_data::{type_a_gl, type_a_pgl, RootDatum};
use crate::symseries::{
    binomial, contract_counit_left, contract_counit_right, coproduct_left, coproduct_right,
    omega_tilde_h, Hopf, SymSeries, TensorSeries,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Scale knobs for the suites; `Default` matches the acceptance gate.
#[derive(Debug, Clone, Copy)]
pub struct Scale {
    pub n: usize,
    pub cap: u32,
    pub max_len: usize,
    pub max_size: u32,
    pub seed: u64,
}

impl Default for Scale {
    fn default() -> Self {
        Scale {
            n: 3,
            cap: 6,
            max_len: 5,
            max_size: 4,
            seed: 0,
        }
    }
}

pub const SUITES: &[&str] = &[
    "braid",
    "dsum",
    "pieri",
    "rectangle",
    "involution",
    "hopf",
    "centralizer",
    "jacobi-trudi",
    "tau-center",
    "cross-rep",
    "variants",
];

pub fn run_suite(name: &str, scale: Scale) -> Result<Report> {
    match name {
        "braid" => Ok(braid(scale)),
        "dsum" => Ok(dsum(scale)),
        "pieri" => Ok(pieri(scale)),
        "rectangle" => Ok(rectangle(scale)),
        "involution" => Ok(involution(scale)),
        "hopf" => Ok(hopf(scale)),
        "centralizer" => Ok(centralizer_suite(scale)),
        "jacobi-trudi" => Ok(jacobi_trudi(scale)),
        "tau-center" => Ok(tau_center(scale)),
        "cross-rep" => Ok(cross_rep(scale)),
        "variants" => Ok(variants(scale)),
        other => Err(crate::error::Error::Parse(format!(
            "unknown suite {other:?}; available: {}",
            SUITES.join(", ")
        ))),
    }
}

fn report(suite: &str, results: Vec<Option<String>>) -> Report {
    Report {
        suite: suite.to_string(),
        cases: results.len(),
        failures: results.into_iter().flatten().collect(),
    }
}

/// Grassmannian elements of the affine Weyl group (class 0) up to the
/// given length, via the partition bijection.
pub fn grassmannian_up_to(datum: &Arc<RootDatum>, max_len: usize) -> Vec<ExtWeylElement> {
    let k = datum.n() as u32 - 1;
    (0..=max_len as u32)
        .flat_map(|l| Partition::bounded_of(l, k))
        .map(|lam| partition_to_grassmannian(datum, &lam).unwrap())
        .collect()
}

// ---------------------------------------------------------------------
// braid: Coxeter relations across every layer.
// ---------------------------------------------------------------------

fn braid(scale: Scale) -> Report {
    let mut cases: Vec<Box<dyn FnOnce() -> Option<String> + Send>> = Vec::new();
    let n = scale.n.max(3);

    // Words related by a single braid/commutation move evaluate equally
    // in the group and as T-operator strings; exhaustive over words of
    // length ≤ 4 in Ĩ.
    let d = type_a_gl(n).unwrap();
    let num = d.num_simple();
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..4 {
        let mut next = Vec::new();
        for w in &words {
            for i in 0..=num {
                let mut v = w.clone();
                v.push(i);
                next.push(v);
            }
        }
        words.extend(next.clone());
        words = words.into_iter().filter(|w| w.len() <= 4).collect();
        words.dedup();
        if next.iter().all(|w| w.len() >= 4) {
            break;
        }
    }
    words.sort();
    words.dedup();
    let mut pairs: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for w in &words {
        for pos in 0..w.len() {
            // commutation move
            if pos + 2 <= w.len().saturating_sub(0) && pos + 1 < w.len() {
                let (a, b) = (w[pos], w[pos + 1]);
                if a != b && !adjacent_nodes(n, a, b) {
                    let mut v = w.clone();
                    v.swap(pos, pos + 1);
                    pairs.push((w.clone(), v));
                }
            }
            // braid move aba -> bab
            if pos + 3 <= w.len() {
                let (a, b, c) = (w[pos], w[pos + 1], w[pos + 2]);
                if a == c && a != b && adjacent_nodes(n, a, b) {
                    let mut v = w.clone();
                    v[pos] = b;
                    v[pos + 1] = a;
                    v[pos + 2] = b;
                    pairs.push((w.clone(), v));
                }
            }
        }
    }
    for (w1, w2) in pairs {
        let d = d.clone();
        let cap = scale.cap;
        cases.push(Box::new(move || {
            let e1 = ExtWeylElement::from_word(
                &d,
                &crate::ext_weyl::AffineWord {
                    class: 0,
                    word: w1.clone(),
                },
            );
            let e2 = ExtWeylElement::from_word(
                &d,
                &crate::ext_weyl::AffineWord {
                    class: 0,
                    word: w2.clone(),
                },
            );
            if e1 != e2 {
                return Some(format!("group braid: {w1:?} vs {w2:?}"));
            }
            // T-operator words on a fixed probe element
            let nh = crate::nilhecke::NilHecke::new(&d);
            let probe = NilHeckeElement::one(&d).add(&NilHeckeElement::term(
                &ExtWeylElement::simple_reflection(&d, 0),
                LaurentPoly::b(d.n(), 1),
            ));
            let mut x1 = probe.clone();
            for &i in w1.iter().rev() {
                x1 = nh.t_mul(i, &x1);
            }
            let mut x2 = probe.clone();
            for &i in w2.iter().rev() {
                x2 = nh.t_mul(i, &x2);
            }
            if x1 != x2 {
                return Some(format!("nil-Hecke braid: {w1:?} vs {w2:?}"));
            }
            // Demazure operators (K mode) on a seeded series
            let dz = KDemazure::new(&d, cap.min(5));
            let f = dz
                .omega(1)
                .scalar_mul(&LaurentPoly::b(d.n(), 2))
                .add(&SymSeries::h(dz.ring(), cap.min(5), 2));
            let run = |w: &[usize]| -> Result<crate::demazure::KSeries> {
                let mut v = f.clone();
                for &i in w.iter().rev() {
                    v = dz.t_apply(i, &v)?;
                }
                Ok(v)
            };
            match (run(&w1), run(&w2)) {
                (Ok(a), Ok(b)) if a == b => None,
                _ => Some(format!("series braid: {w1:?} vs {w2:?}")),
            }
        }));
    }

    // Infinite-rank braids (K and H) on seeded data.
    let mut rng = ChaCha8Rng::seed_from_u64(scale.seed);
    for _ in 0..4 {
        let i0: i64 = rng.gen_range(-2..2);
        let cap = scale.cap.min(5);
        cases.push(Box::new(move || {
            let inf = InfKDemazure::new(cap);
            let f = inf
                .omega(i0)
                .add(&SymSeries::h(inf.ring(), cap, 1).scalar_mul(&crate::coeff::IndexedLaurent::b(i0 + 1)));
            let a = inf
                .t_apply(i0, &inf.t_apply(i0 + 1, &inf.t_apply(i0, &f).unwrap()).unwrap())
                .unwrap();
            let b = inf
                .t_apply(i0 + 1, &inf.t_apply(i0, &inf.t_apply(i0 + 1, &f).unwrap()).unwrap())
                .unwrap();
            if a != b {
                return Some(format!("infinite K braid at {i0}"));
            }
            let mv = MolevDemazure::new(cap);
            let g = mv.omega_a(i0).add(&mv.one());
            let a = mv
                .a_apply(i0, &mv.a_apply(i0 + 1, &mv.a_apply(i0, &g).unwrap()).unwrap())
                .unwrap();
            let b = mv
                .a_apply(i0 + 1, &mv.a_apply(i0, &mv.a_apply(i0 + 1, &g).unwrap()).unwrap())
                .unwrap();
            if a != b {
                return Some(format!("infinite H braid at {i0}"));
            }
            None
        }));
    }

    report("braid", exec::map_collect(cases, |c| c()))
}

fn adjacent_nodes(n: usize, a: usize, b: usize) -> bool {
    // affine A_{n−1} diagram is a cycle on {0,…,n−1}
    let diff = (a as i64 - b as i64).rem_euclid(n as i64);
    diff == 1 || diff == n as i64 - 1
}

// ---------------------------------------------------------------------
// dsum: D_w = Σ_{v ≤ w} T_v.
// ---------------------------------------------------------------------

fn dsum(scale: Scale) -> Report {
    let mut cases: Vec<(Arc<RootDatum>, ExtWeylElement)> = Vec::new();
    for n in [3usize, 4] {
        let d = type_a_gl(n).unwrap();
        for w in grassmannian_up_to(&d, scale.max_len) {
            cases.push((d.clone(), w));
        }
    }
    // π-twisted samples in PGL_3.
    let pd = type_a_pgl(3).unwrap();
    for m in 1..3i64 {
        for w in grassmannian_up_to(&pd, 2) {
            cases.push((pd.clone(), ExtWeylElement::fundamental(&pd, m).multiply(&w)));
        }
    }
    let results = exec::map_collect(cases, |(d, w)| {
        let nh = crate::nilhecke::NilHecke::new(&d);
        let dw = nh.d_of(&w);
        let mut sum = NilHeckeElement::zero(&d);
        for v in w.bruhat_ideal() {
            sum = sum.add(&NilHeckeElement::t_basis(&v));
        }
        if dw == sum {
            None
        } else {
            Some(format!("D-sum fails at {:?}", w))
        }
    });
    report("dsum", results)
}

// ---------------------------------------------------------------------
// pieri: special-class oracles and the Ω-Pieri identities.
// ---------------------------------------------------------------------

fn pieri(scale: Scale) -> Report {
    let a = special_classes(scale);
    let b = om_pieri(scale);
    Report {
        suite: "pieri".into(),
        cases: a.cases + b.cases,
        failures: a.failures.into_iter().chain(b.failures).collect(),
    }
}

/// Criterion 2: the row/column closed-form oracles at cap 7 for
/// n = 4, 5, plus the b = 0 specializations.
pub fn special_classes(scale: Scale) -> Report {
    let mut cases: Vec<Box<dyn FnOnce() -> Option<String> + Send>> = Vec::new();
    let _ = scale;
    for n in [4usize, 5] {
        for i in 1..n {
            let cap = scale.cap.max(7).min(7);
            cases.push(Box::new(move || {
                let d = type_a_gl(n).unwrap();
                let dz = KDemazure::new(&d, cap);
                let got = dz.g_class(&rho(&d, i), false).unwrap();
                if got != oracle::single_row_oracle(n, cap, i) {
                    return Some(format!("row oracle n={n} i={i}"));
                }
                let got = dz.g_class(&rho_prime(&d, i), false).unwrap();
                if got != oracle::single_column_oracle(n, cap, i) {
                    return Some(format!("column oracle n={n} i={i}"));
                }
                let b0_row = dz.specialize_b0(&dz.g_class(&rho(&d, i), false).unwrap());
                if b0_row != oracle::single_row_b0(n, cap, i) {
                    return Some(format!("row b=0 n={n} i={i}"));
                }
                let b0_col = dz.specialize_b0(&dz.g_class(&rho_prime(&d, i), false).unwrap());
                if b0_col != oracle::single_column_b0(n, cap, i) {
                    return Some(format!("column b=0 n={n} i={i}"));
                }
                None
            }));
        }
    }
    report("special-classes", exec::map_collect(cases, |c| c()))
}

/// Criterion 3: both Ω-Pieri identities at cap 6, n = 3 and 4.
pub fn om_pieri(scale: Scale) -> Report {
    let mut cases: Vec<Box<dyn FnOnce() -> Option<String> + Send>> = Vec::new();
    let _ = scale;
    for n in [3usize, 4] {
        for i in 1..n {
            let cap = 6;
            cases.push(Box::new(move || om_pieri_case(n, cap, i)));
        }
    }
    report("om-pieri", exec::map_collect(cases, |c| c()))
}

/// Both Ω-Pieri identities at one i. The column product bound is the
/// corrected Π_{l=n−j+2}^{n}; the printed j-independent bound fails.
fn om_pieri_case(n: usize, cap: u32, i: usize) -> Option<String> {
    let d = type_a_gl(n).unwrap();
    let dz = KDemazure::new(&d, cap);
    let rank = n;
    let c = |alpha: Vec<i64>| LaurentPoly::c_of(rank, CoeffMode::KMultiplicative, &alpha).unwrap();
    let a = |p: usize| {
        let mut v = vec![0i64; rank];
        v[p - 1] = 1;
        v
    };
    let diff = |p: usize, q: usize| {
        let mut v = a(p);
        for (x, y) in v.iter_mut().zip(a(q)) {
            *x -= y;
        }
        v
    };
    // row: Ω(b_i)/Ω(b_n) = 1 + c(a_n−a_i) Σ_j Π_{l<j} c(a_l−a_i) g_{ρ_j}
    let lhs = dz.omega(i).mul(dz.omega_inv(n));
    let mut rhs = dz.one();
    let mut sum = SymSeries::zero(dz.ring(), cap);
    for j in 1..=i {
        let mut coef = LaurentPoly::one(rank, CoeffMode::KMultiplicative);
        for l in 1..j {
            coef = coef.mul(&c(diff(l, i))).unwrap();
        }
        sum = sum.add(&dz.g_class(&rho(&d, j), false).unwrap().scalar_mul(&coef));
    }
    rhs = rhs.add(&sum.scalar_mul(&c(diff(n, i))));
    if lhs != rhs {
        return Some(format!("Ω-Pieri row n={n} i={i}"));
    }
    // column: Ω(b_1)/Ω(b_i) = 1 + c(a_i−a_1) Σ_j Π_{l=n−j+2}^n c(a_i−a_l) g_{ρ'_j}
    let lhs = dz.omega(1).mul(dz.omega_inv(i));
    let mut sum = SymSeries::zero(dz.ring(), cap);
    for j in 1..=(n - i + 1).min(n - 1) {
        let mut coef = LaurentPoly::one(rank, CoeffMode::KMultiplicative);
        for l in (n - j + 2)..=n {
            coef = coef.mul(&c(diff(i, l))).unwrap();
        }
        sum = sum.add(&dz.g_class(&rho_prime(&d, j), false).unwrap().scalar_mul(&coef));
    }
    let rhs = dz.one().add(&sum.scalar_mul(&c(diff(i, 1))));
    if lhs != rhs {
        return Some(format!("Ω-Pieri column n={n} i={i}"));
    }
    None
}

// ---------------------------------------------------------------------
// rectangle: the k-rectangle factorizations, function and nil-Hecke
// sides.
// ---------------------------------------------------------------------

fn rectangle(scale: Scale) -> Report {
    let mut cases: Vec<Box<dyn FnOnce() -> Option<String> + Send>> = Vec::new();

    // function side, n = 3: all |λ| ≤ max_size, all i.
    let n = 3usize;
    for i in 1..n {
        for size in 0..=scale.max_size {
            for lam in Partition::bounded_of(size, n as u32 - 1) {
                let cap = scale.cap;
                cases.push(Box::new(move || rectangle_function_case(n, cap, i, lam)));
            }
        }
    }
    // the paper's n = 5, λ = (3,1), i = 2 instance.
    cases.push(Box::new(move || {
        rectangle_function_case(5, 6, 2, Partition::new(vec![3, 1]))
    }));

    // nil-Hecke side: ℓ_{w t_λ} = ℓ_w ℓ_{t_λ} for Grassmannian w and
    // antidominant λ (GL_3 samples).
    let d = type_a_gl(3).unwrap();
    for w in grassmannian_up_to(&d, 3) {
        for lam in [vec![-1i64, 0, 0], vec![-1, -1, 0], vec![-2, -1, -1]] {
            let d = d.clone();
            let w = w.clone();
            cases.push(Box::new(move || {
                let p = Peterson::new(&d);
                let t = ExtWeylElement::translation(&d, lam.clone());
                let wt = w.multiply(&t);
                if wt.length() != w.length() + t.length() {
                    return Some(format!("lengths must add: {:?} {:?}", w, lam));
                }
                let lhs = p.l_class(&wt).unwrap().value;
                let rhs = p
                    .nilhecke()
                    .multiply(&p.l_class(&w).unwrap().value, &p.l_class(&t).unwrap().value);
                if lhs == rhs {
                    None
                } else {
                    Some(format!("k-rectangle nil-Hecke at {:?} λ={:?}", w, lam))
                }
            }));
        }
    }

    // s_i * ℓ_{t_λ} = ℓ_{t_λ} for antidominant λ (W-invariance).
    cases.push(Box::new(|| {
        let d = type_a_gl(3).unwrap();
        let p = Peterson::new(&d);
        for lam in [vec![-1i64, 0, 0], vec![-3, -1, -1]] {
            let l = p
                .l_class(&ExtWeylElement::translation(&d, lam.clone()))
                .unwrap()
                .value;
            for i in 1..3usize {
                // s_i * b = T_i*b·c(α_i) + b: use the star primitives:
                // s_i = 1 + c(α_i)T_i so s_i * b = b + c(α_i)·(T_i * b)
                // ... computed directly by conjugation:
                let u = d.simple_reflection_perm(i);
                let got = p.star_finite(&u, &l);
                if got != l {
                    return Some(format!("ℓ_t_λ not W-invariant: λ={:?} i={i}", lam));
                }
            }
        }
        None
    }));

    // Lemma: ℓ_{t_{−ϖ_i∨}} = t_{−ϖ_i∨} ℓ_{κ_i} in PGL_3 (special i),
    // and the rotation lemma π_j(ℓ_{κ_i}) = t_{u_j(ϖ_i∨)−ϖ_i∨} ℓ_{κ_i}.
    cases.push(Box::new(|| {
        let d = type_a_pgl(3).unwrap();
        let p = Peterson::new(&d);
        for i in 1..3usize {
            let wi = d.fund_coweight(i).unwrap();
            let neg: Vec<i64> = wi.iter().map(|x| -x).collect();
            let t = ExtWeylElement::translation(&d, neg.clone());
            let lhs = p.l_class(&t).unwrap().value;
            let lk = p.l_class(&kappa(&d, i).unwrap()).unwrap().value;
            let rhs = p.nilhecke().multiply(&p.nilhecke().group_to_t(&t), &lk);
            if lhs != rhs {
                return Some(format!("fund-translation-kappa i={i}"));
            }
            for j in 1..3usize {
                let pi_j = ExtWeylElement::fundamental(&d, j as i64);
                let u_j = pi_j.finite_part().clone();
                // π_j(ℓ_{κ_i}) = u_j ℓ u_j^{-1}
                let lhs = p.star_finite(&u_j, &lk);
                let shift: Vec<i64> = u_j
                    .act_on_vec(&wi)
                    .iter()
                    .zip(&wi)
                    .map(|(a, b)| a - b)
                    .collect();
                let rhs = p.nilhecke().multiply(
                    &p.nilhecke()
                        .group_to_t(&ExtWeylElement::translation(&d, shift)),
                    &lk,
                );
                if lhs != rhs {
                    return Some(format!("rotate-kappa i={i} j={j}"));
                }
            }
        }
        None
    }));

    // The PGL_3 worked example:
    // ℓ_w = ℓ_{t_{−ϖ_1∨}} ℓ_{t_{−ϖ_2∨}}² ℓ_{π_2 s_0} for the element
    // with canonical word s_2 s_0 s_1 s_0 s_2 s_1 s_0.
    cases.push(Box::new(|| {
        let d = type_a_pgl(3).unwrap();
        let p = Peterson::new(&d);
        let w = ExtWeylElement::from_word(
            &d,
            &crate::ext_weyl::AffineWord {
                class: 0,
                word: vec![2, 0, 1, 0, 2, 1, 0],
            },
        );
        let lhs = p.l_class(&w).unwrap().value;
        let t1 = ExtWeylElement::translation(&d, d.fund_coweight(1).unwrap().iter().map(|x| -x).collect());
        let t2 = ExtWeylElement::translation(&d, d.fund_coweight(2).unwrap().iter().map(|x| -x).collect());
        let pi2s0 = ExtWeylElement::fundamental(&d, 2)
            .multiply(&ExtWeylElement::simple_reflection(&d, 0));
        let nh = p.nilhecke();
        let l1 = p.l_class(&t1).unwrap().value;
        let l2 = p.l_class(&t2).unwrap().value;
        let l3 = p.l_class(&pi2s0).unwrap().value;
        let rhs = nh.multiply(&nh.multiply(&nh.multiply(&l1, &l2), &l2), &l3);
        if lhs == rhs {
            None
        } else {
            Some("PGL_3 worked factorization example".into())
        }
    }));

    report("rectangle", exec::map_collect(cases, |c| c()))
}

fn rectangle_function_case(n: usize, cap: u32, i: usize, lam: Partition) -> Option<String> {
    let d = type_a_gl(n).unwrap();
    let dz = KDemazure::new(&d, cap);
    let ri = Partition::rectangle(n, i);
    let union = lam.union(&ri);
    let x_union = partition_to_grassmannian(&d, &union).unwrap();
    let x_ri = partition_to_grassmannian(&d, &ri).unwrap();
    let x_lam = partition_to_grassmannian(&d, &lam).unwrap();
    let lhs = dz.g_class(&x_union, true).unwrap();
    let rhs = dz.g_class(&x_ri, true).unwrap().mul(&dz.rotate_coeffs(
        &dz.g_class(&x_lam, true).unwrap(),
        i as i64,
    ));
    if lhs == rhs {
        None
    } else {
        Some(format!("rectangle function n={n} i={i} λ={:?}", lam))
    }
}

// ---------------------------------------------------------------------
// involution: the executable content of the k-conjugation identities.
// ---------------------------------------------------------------------

fn involution(scale: Scale) -> Report {
    let mut cases: Vec<Box<dyn FnOnce() -> Option<String> + Send>> = Vec::new();
    let n = 3usize;
    let cap = scale.cap.max(8);

    // ι̂² = id on h-generators up to cap.
    for l in 1..=cap {
        cases.push(Box::new(move || {
            let dz = KDemazure::new(&type_a_gl(n).unwrap(), cap);
            let h = SymSeries::h(dz.ring(), cap, l);
            if dz.iota_hat(&dz.iota_hat(&h)) == h {
                None
            } else {
                Some(format!("ι̂² ≠ id on h_{l}"))
            }
        }));
    }

    // ι̂(Ω(b_i)) = Ω(b_{n+1−i})^{-1} via the exact resummation:
    // the resummed image times Ω(b_{n+1−i}) is 1, and the ω̃ slices
    // match the binomial pattern the resummation uses.
    for i in 1..=n {
        cases.push(Box::new(move || {
            let dz = KDemazure::new(&type_a_gl(n).unwrap(), cap);
            if !dz.omega(n + 1 - i).mul(&dz.iota_omega_image(i)).is_one() {
                return Some(format!("ι̂(Ω(b_{i})) resummation"));
            }
            None
        }));
    }
    cases.push(Box::new(move || {
        let ring = LaurentRing::k(n);
        for l in 1..=cap {
            let w = omega_tilde_h(&ring, cap, l);
            for deg in 1..=l {
                let want =
                    SymSeries::elementary(&ring, cap, deg).scale_int(binomial(l - 1, deg - 1));
                if w.degree_slice(deg) != want {
                    return Some(format!("ω̃(h_{l}) slice {deg}"));
                }
            }
        }
        None
    }));

    // Operator intertwinings (exact on truncations): ι̂T_i = T_{n−i}ι̂,
    // ι̂s_i = s_{n−i}ι̂ for i ∈ I, parameter rotation reversal, and the
    // T_0 coefficient identities ι∘s_θ = s_θ∘ι, ι(c(α_0)) = c(α_0).
    cases.push(Box::new(move || {
        let d = type_a_gl(n).unwrap();
        let dz = KDemazure::new(&d, cap.min(6));
        let cc = cap.min(6);
        let f = dz
            .omega(2)
            .scalar_mul(&LaurentPoly::b(n, 1))
            .add(&SymSeries::h(dz.ring(), cc, 2).scalar_mul(&LaurentPoly::exp(n, vec![1, 0, -1])));
        for i in 1..n {
            let lhs = dz.iota_hat(&dz.t_apply(i, &f).unwrap());
            let rhs = dz.t_apply(n - i, &dz.iota_hat(&f)).unwrap();
            if lhs != rhs {
                return Some(format!("ι̂T_{i} ≠ T_{}ι̂", n - i));
            }
            if dz.iota_hat(&dz.s_apply(i, &f)) != dz.s_apply(n - i, &dz.iota_hat(&f)) {
                return Some(format!("ι̂s_{i} ≠ s_{}ι̂", n - i));
            }
        }
        if dz.iota_hat(&dz.rotate_coeffs(&f, 1)) != dz.rotate_coeffs(&dz.iota_hat(&f), -1) {
            return Some("ι̂∘rot ≠ rot^{-1}∘ι̂".into());
        }
        // coefficient-level T_0 ingredients
        let g = LaurentPoly::b(n, 1).mul(&LaurentPoly::exp(n, vec![0, 1, -2])).unwrap();
        let s_theta = d.s_theta_perm();
        if g.weyl_act(&s_theta).involution_iota() != g.involution_iota().weyl_act(&s_theta) {
            return Some("ι∘s_θ ≠ s_θ∘ι on R(T)".into());
        }
        let c0 = LaurentPoly::c_of(n, CoeffMode::KMultiplicative, &d.alpha_zero()).unwrap();
        if c0.involution_iota() != c0 {
            return Some("ι(c(α_0)) ≠ c(α_0)".into());
        }
        None
    }));

    // ι(k_w) = k_{w*} on the nil-Hecke side for ℓ(w) ≤ 4, computed two
    // independent ways; this is the transported ι̂(g_w) = g_{w*}.
    for size in 0..=4u32 {
        for lam in Partition::bounded_of(size, n as u32 - 1) {
            cases.push(Box::new(move || {
                let d = type_a_gl(n).unwrap();
                let p = Peterson::new(&d);
                let w = partition_to_grassmannian(&d, &lam).unwrap();
                let ws = w.star_involution().unwrap();
                let got = p
                    .star_involution_class(&p.k_class(&w).unwrap().value)
                    .unwrap();
                if got != p.k_class(&ws).unwrap().value {
                    return Some(format!("ι(k) ≠ k_* at λ={:?}", lam));
                }
                let got = p
                    .star_involution_class(&p.l_class(&w).unwrap().value)
                    .unwrap();
                if got != p.l_class(&ws).unwrap().value {
                    return Some(format!("ι(ℓ) ≠ ℓ_* at λ={:?}", lam));
                }
                None
            }));
        }
    }

    report("involution", exec::map_collect(cases, |c| c()))
}

// ---------------------------------------------------------------------
// hopf.
// ---------------------------------------------------------------------

fn hopf(scale: Scale) -> Report {
    let mut cases: Vec<Box<dyn FnOnce() -> Option<String> + Send>> = Vec::new();
    let n = scale.n.max(2);
    let cap = scale.cap;
    for i in 1..=n {
        cases.push(Box::new(move || {
            let ring = LaurentRing::k(n);
            let om = SymSeries::omega(&ring, cap, &LaurentPoly::b(n, i));
            if Hopf::coproduct(&om) != TensorSeries::of(&om, &om) {
                return Some(format!("Δ(Ω(b_{i}))"));
            }
            if Hopf::antipode(&om) != om.invert().unwrap() {
                return Some(format!("S(Ω(b_{i}))"));
            }
            if Hopf::counit(&om) != ring.one() {
                return Some(format!("ε(Ω(b_{i}))"));
            }
            None
        }));
    }
    // coassociativity and counit on seeded degree-≤4 elements
    let mut rng = ChaCha8Rng::seed_from_u64(scale.seed);
    for _ in 0..6 {
        let coeffs: Vec<(u32, i64)> = (0..4)
            .map(|_| (rng.gen_range(0..=4u32), rng.gen_range(-3..=3i64)))
            .collect();
        cases.push(Box::new(move || {
            let ring = LaurentRing::k(n);
            let mut f = SymSeries::zero(&ring, cap);
            for (deg, c) in &coeffs {
                let mut part = SymSeries::h(&ring, cap, *deg).scale_int(*c);
                if *deg >= 2 {
                    part = part.mul(&SymSeries::h(&ring, cap, 1));
                }
                f = f.add(&part);
            }
            let d = Hopf::coproduct(&f);
            if coproduct_left(&d) != coproduct_right(&d) {
                return Some("coassociativity".into());
            }
            if contract_counit_left(&d) != f || contract_counit_right(&d) != f {
                return Some("counit axiom".into());
            }
            None
        }));
    }
    report("hopf", exec::map_collect(cases, |c| c()))
}

// ---------------------------------------------------------------------
// centralizer.
// ---------------------------------------------------------------------

fn centralizer_suite(scale: Scale) -> Report {
    use crate::centralizer::ZRing;
    let mut cases: Vec<Box<dyn FnOnce() -> Option<String> + Send>> = Vec::new();

    // β kills every defining relation, n ≤ 4, cap ≤ 7 (both the
    // normal-form vanishing and the direct series telescoping).
    for n in 2..=4usize {
        let cap = scale.cap.min(7);
        for i in 1..n {
            for j in i + 1..=n {
                cases.push(Box::new(move || {
                    let zr = ZRing::new(&type_a_gl(n).unwrap());
                    if !zr.is_zero(&zr.relation(i, j).unwrap()) {
                        return Some(format!("relation ({i},{j}) n={n} in normal form"));
                    }
                    let bi = LaurentPoly::b(n, i);
                    let bj = LaurentPoly::b(n, j);
                    let lhs = zr
                        .beta_generator(i, j, cap)
                        .scalar_mul(&bi.sub(&bj).unwrap());
                    let rhs = zr
                        .beta_generator(i, j - 1, cap)
                        .sub(&zr.beta_generator(i + 1, j, cap));
                    if lhs != rhs {
                        return Some(format!("β relation ({i},{j}) n={n}"));
                    }
                    None
                }));
            }
        }
    }

    // equivariance grid, n = 3, cap 6.
    {
        let n = 3usize;
        let cap = 6;
        for i in 1..=n {
            for j in i..=n {
                cases.push(Box::new(move || equivariance_case(n, cap, i, j)));
            }
        }
    }

    // sl_quotient: β(z_{11}⋯z_{nn}) = Ω(b_1)⋯Ω(b_n), and modding by the
    // −1 relation matches g̃_{τⁿw} = ΠΩ·g̃_w on examples.
    cases.push(Box::new(move || {
        let n = 3usize;
        let cap = 6;
        let zr = ZRing::new(&type_a_gl(n).unwrap());
        let mut prod = zr.one();
        for i in 1..=n {
            prod = zr.mul(&prod, &zr.generator(i, i).unwrap());
        }
        let got = zr.beta(&prod, cap);
        let dz = KDemazure::new(&type_a_gl(n).unwrap(), cap);
        let mut want = dz.one();
        for i in 1..=n {
            want = want.mul(dz.omega(i));
        }
        if got != want {
            return Some("β(z_{11}⋯z_{nn}) ≠ ΠΩ".into());
        }
        // quotient consistency on w = s_0 and w = ρ_2
        let d = dz.datum().clone();
        for w in [
            ExtWeylElement::simple_reflection(&d, 0),
            rho(&d, 2),
        ] {
            let tau_n = ExtWeylElement::fundamental(&d, n as i64);
            let lhs = dz.g_class(&tau_n.multiply(&w), true).unwrap();
            let gw = dz.g_class(&w, true).unwrap();
            if lhs.sub(&gw) != want.sub(&dz.one()).mul(&gw) {
                return Some(format!("quotient relation at {:?}", w));
            }
        }
        None
    }));

    // beta_pgl shape checks.
    cases.push(Box::new(move || {
        let n = 3usize;
        let cap = 5;
        let zr = ZRing::new(&type_a_gl(n).unwrap());
        if !zr.beta_pgl(1, 1, cap).unwrap().is_one() {
            return Some("β_pgl(1,1) ≠ 1".into());
        }
        let ring = LaurentRing::k(n);
        for i in 2..=n {
            let want = SymSeries::omega(&ring, cap, &LaurentPoly::b(n, i)).mul(
                &SymSeries::omega(&ring, cap, &LaurentPoly::b(n, 1))
                    .invert()
                    .unwrap(),
            );
            if zr.beta_pgl(i, i, cap).unwrap() != want {
                return Some(format!("β_pgl({i},{i})"));
            }
        }
        for i in 1..n {
            for j in i + 1..=n {
                let bi = LaurentPoly::b(n, i);
                let bj = LaurentPoly::b(n, j);
                let lhs = zr
                    .beta_pgl(i, j, cap)
                    .unwrap()
                    .scalar_mul(&bi.sub(&bj).unwrap());
                let rhs = zr
                    .beta_pgl(i, j - 1, cap)
                    .unwrap()
                    .sub(&zr.beta_pgl(i + 1, j, cap).unwrap());
                if lhs != rhs {
                    return Some(format!("β_pgl relation ({i},{j})"));
                }
            }
        }
        None
    }));

    report("centralizer", exec::map_collect(cases, |c| c()))
}

fn equivariance_case(n: usize, cap: u32, i: usize, j: usize) -> Option<String> {
    use crate::centralizer::ZRing;
    let d = type_a_gl(n).unwrap();
    let zr = ZRing::new(&d);
    let dz = KDemazure::new(&d, cap);
    let z = zr.generator(i, j).unwrap();
    let bz = zr.beta(&z, cap);
    // finite reflections
    for g in 1..n {
        let lhs = zr.beta(&zr.s_act(g, &z), cap);
        let rhs = dz.s_apply(g, &bz);
        if lhs != rhs {
            return Some(format!("equivariance s_{g} on z_({i},{j})"));
        }
    }
    // s_0
    let lhs = zr.beta(&zr.s0_act(&z), cap);
    let rhs = dz.s_apply(0, &bz);
    if lhs != rhs {
        return Some(format!("equivariance s_0 on z_({i},{j})"));
    }
    // translations, both signs
    for t in 1..=n {
        let lhs = zr.beta(&zr.translation_act(t, true, &z), cap);
        let rhs = dz.omega(t).mul(&bz);
        if lhs != rhs {
            return Some(format!("equivariance t_ε{t} on z_({i},{j})"));
        }
        let lhs = zr.beta(&zr.translation_act(t, false, &z), cap);
        let rhs = dz.omega_inv(t).mul(&bz);
        if lhs != rhs {
            return Some(format!("equivariance t_-ε{t} on z_({i},{j})"));
        }
    }
    None
}

// ---------------------------------------------------------------------
// jacobi-trudi: the appendix families.
// ---------------------------------------------------------------------

fn jacobi_trudi(scale: Scale) -> Report {
    let mut cases: Vec<Box<dyn FnOnce() -> Option<String> + Send>> = Vec::new();
    let cap = scale.cap.min(6);

    // operator construction equals both determinants for |λ| ≤ 4.
    for size in 0..=4u32 {
        for lam in Partition::all_of(size) {
            cases.push(Box::new(move || {
                let mv = MolevDemazure::new(cap);
                let op = mv.molev_class(&lam).unwrap();
                if mv.jacobi_trudi(&lam, true).unwrap() != op {
                    return Some(format!("JT row at {:?}", lam));
                }
                if mv.jacobi_trudi(&lam, false).unwrap() != op {
                    return Some(format!("JT column at {:?}", lam));
                }
                None
            }));
        }
    }

    // k-small comparison at n = 4.
    {
        let n = 4usize;
        for size in 0..=4u32 {
            for lam in Partition::bounded_of(size, n as u32 - 1) {
                if !lam.is_k_small(n - 1) {
                    continue;
                }
                cases.push(Box::new(move || {
                    let d = type_a_gl(n).unwrap();
                    let dz = KDemazure::new(&d, cap);
                    let inf = InfKDemazure::new(cap);
                    let x = partition_to_grassmannian(&d, &lam).unwrap();
                    let fin = dz.g_class(&x, false).unwrap();
                    let red = inf.reduce_mod(&inf.infinite_class(&lam, false).unwrap(), n);
                    if fin == red {
                        None
                    } else {
                        Some(format!("k-small comparison at {:?}", lam))
                    }
                }));
            }
        }
    }

    // ĝ_λ(y|0) matches the reverse-plane-partition oracle, |λ| ≤ 4.
    for size in 0..=4u32 {
        for lam in Partition::all_of(size) {
            cases.push(Box::new(move || {
                let inf = InfKDemazure::new(4);
                let ghat = inf.specialize_b0(&inf.infinite_class(&lam, false).unwrap());
                let fin = inf.reduce_mod(&ghat, 2).map_coeffs(|c| {
                    LaurentPoly::constant(2, CoeffMode::KMultiplicative, c.phi0())
                });
                let vars = 4;
                if oracle::evaluate_in_variables(&fin, vars) == oracle::rpp_polynomial(&lam, vars)
                {
                    None
                } else {
                    Some(format!("RPP oracle at {:?}", lam))
                }
            }));
        }
    }

    report("jacobi-trudi", exec::map_collect(cases, |c| c()))
}

// ---------------------------------------------------------------------
// tau-center: fundamental-group identities.
// ---------------------------------------------------------------------

fn tau_center(scale: Scale) -> Report {
    let mut cases: Vec<Box<dyn FnOnce() -> Option<String> + Send>> = Vec::new();
    let n = scale.n.max(3);

    cases.push(Box::new(move || {
        let d = type_a_gl(n).unwrap();
        let p = Peterson::new(&d);
        // k_π = ℓ_π = t_π for τ-powers.
        for m in 1..=n as i64 {
            let pi = ExtWeylElement::fundamental(&d, m);
            let want = p
                .nilhecke()
                .group_to_t(&ExtWeylElement::translation(&d, pi.translation_part().to_vec()));
            if p.k_class(&pi).unwrap().value != want || p.l_class(&pi).unwrap().value != want {
                return Some(format!("k_τ^{m} ≠ t_τ^{m}"));
            }
        }
        None
    }));

    // π * ℓ_w = ℓ_{πw} and ℓ_{τⁿ w} = ℓ_{τⁿ}·ℓ_w for ℓ(w) ≤ 3.
    let d = type_a_gl(n).unwrap();
    for w in grassmannian_up_to(&d, 3) {
        let d = d.clone();
        cases.push(Box::new(move || {
            let p = Peterson::new(&d);
            let lw = p.l_class(&w).unwrap().value;
            let tau = ExtWeylElement::fundamental(&d, 1);
            if p.star_fundamental(1, &lw) != p.l_class(&tau.multiply(&w)).unwrap().value {
                return Some(format!("τ * ℓ ≠ ℓ_τw at {:?}", w));
            }
            let tau_n = ExtWeylElement::fundamental(&d, n as i64);
            let lhs = p.l_class(&tau_n.multiply(&w)).unwrap().value;
            let rhs = p
                .nilhecke()
                .multiply(&p.l_class(&tau_n).unwrap().value, &lw);
            if lhs != rhs {
                return Some(format!("ℓ_τⁿw ≠ ℓ_τⁿ ℓ_w at {:?}", w));
            }
            None
        }));
    }

    report("tau-center", exec::map_collect(cases, |c| c()))
}

// ---------------------------------------------------------------------
// cross-rep: the executable ring-isomorphism content.
// ---------------------------------------------------------------------

fn cross_rep(scale: Scale) -> Report {
    let n = 3usize;
    let cap = scale.cap.max(8);
    let d = type_a_gl(n).unwrap();
    let elems = grassmannian_up_to(&d, scale.max_len);
    let mut pairs = Vec::new();
    for (a, u) in elems.iter().enumerate() {
        for v in elems.iter().skip(a) {
            if u.length() + v.length() <= scale.max_len {
                pairs.push((u.clone(), v.clone()));
            }
        }
    }
    let peterson = Arc::new(Peterson::new(&d));
    let dz = Arc::new(KDemazure::new(&d, cap));
    let results = exec::map_collect(pairs, move |(u, v)| {
        let e = match peterson.expand_product(&u, &v, ClassKind::Ideal) {
            Ok(e) => e,
            Err(err) => return Some(format!("expansion failed at {:?},{:?}: {err}", u, v)),
        };
        let lhs = dz
            .g_class(&u, false)
            .unwrap()
            .mul(&dz.g_class(&v, false).unwrap());
        let mut rhs = SymSeries::zero(dz.ring(), cap);
        for (w, c) in &e {
            rhs = rhs.add(&dz.g_class(w, false).unwrap().scalar_mul(c));
        }
        if lhs == rhs {
            None
        } else {
            Some(format!("cross-rep at ℓ={},{}: {:?} {:?}", u.length(), v.length(), u, v))
        }
    });
    report("cross-rep", results)
}

// ---------------------------------------------------------------------
// variants: SL and PGL realizations.
// ---------------------------------------------------------------------

fn variants(scale: Scale) -> Report {
    let mut cases: Vec<Box<dyn FnOnce() -> Option<String> + Send>> = Vec::new();
    let cap = scale.cap;

    // SL: the Ω-ratios expand over the g̃ basis through the Ω-Pieri
    // closed forms; the ideal/structure conversion g_ρj = g̃_ρj − g̃_ρ(j−1)
    // provides the g̃-coefficients.
    for n in [3usize, 4] {
        for i in 1..n {
            cases.push(Box::new(move || {
                if let Some(fail) = om_pieri_case(n, cap.min(6), i) {
                    return Some(format!("variants/{fail}"));
                }
                let d = type_a_gl(n).unwrap();
                let dz = KDemazure::new(&d, cap.min(6));
                for j in 1..n {
                    let g = dz.g_class(&rho(&d, j), false).unwrap();
                    let gt = dz.g_class(&rho(&d, j), true).unwrap();
                    let prev = if j == 1 {
                        dz.one()
                    } else {
                        dz.g_class(&rho(&d, j - 1), true).unwrap()
                    };
                    if g != gt.sub(&prev) {
                        return Some(format!("g_ρ{j} ≠ g̃_ρ{j} − g̃_ρ{}", j - 1));
                    }
                }
                None
            }));
        }
    }

    // PGL: g̃_{τⁿ w} = Ω(b_1)⋯Ω(b_n)·g̃_w.
    for n in [3usize] {
        let d = type_a_gl(n).unwrap();
        for w in grassmannian_up_to(&d, 3) {
            let d = d.clone();
            cases.push(Box::new(move || {
                let dz = KDemazure::new(&d, cap.min(6));
                let tau_n = ExtWeylElement::fundamental(&d, n as i64);
                let lhs = dz.g_class(&tau_n.multiply(&w), true).unwrap();
                let mut om = dz.one();
                for i in 1..=n {
                    om = om.mul(dz.omega(i));
                }
                let rhs = om.mul(&dz.g_class(&w, true).unwrap());
                if lhs == rhs {
                    None
                } else {
                    Some(format!("PGL quotient at {:?}", w))
                }
            }));
        }
    }

    report("variants", exec::map_collect(cases, |c| c()))
}
