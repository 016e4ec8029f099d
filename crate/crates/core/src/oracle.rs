//! Independent oracles for the verification suites: the closed-form
//! Schur expansions of the special classes, and the reverse-plane-
//! partition generating function for dual stable Grothendieck
//! polynomials. These never call the operator recursions they check.

use num_bigint::BigInt;
use num_traits::One;

use crate::coeff::{CoeffMode, LaurentPoly, LaurentRing, Ring};
use crate::partition::Partition;
use crate::symseries::{complete_homogeneous, SymSeries};

type KSeries = SymSeries<LaurentRing>;

/// The single-row closed form: g_{ρ_i}(y|b) equals
/// e^{−(a_1+⋯+a_{i−1}+a_n)} Σ_{p≥1,q≥0} (−1)^q b_n^q
///   h_{p−i}(b_1,…,b_i) s_{(p,1^q)}(y).
pub fn single_row_oracle(n: usize, cap: u32, i: usize) -> KSeries {
    let ring = LaurentRing::k(n);
    let mut exp = vec![0i64; n];
    for slot in 0..i - 1 {
        exp[slot] = -1;
    }
    exp[n - 1] -= 1;
    let prefactor = LaurentPoly::exp(n, exp);
    let bs: Vec<LaurentPoly> = (1..=i).map(|j| LaurentPoly::b(n, j)).collect();
    let bn = LaurentPoly::b(n, n);
    let mut out = SymSeries::zero(&ring, cap);
    for p in 1..=cap {
        for q in 0..=(cap - p) {
            if (p as usize) < i {
                continue;
            }
            let h = complete_homogeneous(&ring, &bs, p - i as u32);
            if ring.is_zero(&h) {
                continue;
            }
            let mut coef = h;
            for _ in 0..q {
                coef = coef.mul(&bn).unwrap();
            }
            if q % 2 == 1 {
                coef = coef.neg();
            }
            let hook = hook_schur(&ring, cap, p, q);
            out = out.add(&hook.scalar_mul(&coef));
        }
    }
    out.scalar_mul(&prefactor)
}

/// The single-column closed form: g_{ρ'_i}(y|b) equals
/// e^{−a_{n−i+1}} Σ_{p≥1,q≥0} (−1)^{q+i−1} b_1^{p−1}
///   [Σ_{r=0}^{i−1} (−1)^{i−1−r} C(i−1,r) h_{q−r}(b_{n−i+1},…,b_n)]
///   s_{(p,1^q)}(y).
pub fn single_column_oracle(n: usize, cap: u32, i: usize) -> KSeries {
    let ring = LaurentRing::k(n);
    let mut exp = vec![0i64; n];
    exp[n - i] = -1;
    let prefactor = LaurentPoly::exp(n, exp);
    let tail_bs: Vec<LaurentPoly> = (n - i + 1..=n).map(|j| LaurentPoly::b(n, j)).collect();
    let b1 = LaurentPoly::b(n, 1);
    let mut out = SymSeries::zero(&ring, cap);
    for p in 1..=cap {
        for q in 0..=(cap - p) {
            let mut inner = LaurentPoly::zero(n, CoeffMode::KMultiplicative);
            for r in 0..=(i - 1) as u32 {
                if r > q {
                    continue;
                }
                let h = complete_homogeneous(&ring, &tail_bs, q - r);
                let c = crate::symseries::binomial(i as u32 - 1, r);
                let signed = if (i as u32 - 1 - r) % 2 == 1 { -c } else { c };
                inner = inner.add(&h.scale_i64(signed)).unwrap();
            }
            if inner.is_zero() {
                continue;
            }
            let mut coef = inner;
            for _ in 0..p - 1 {
                coef = coef.mul(&b1).unwrap();
            }
            if (q + i as u32 - 1) % 2 == 1 {
                coef = coef.neg();
            }
            let hook = hook_schur(&ring, cap, p, q);
            out = out.add(&hook.scalar_mul(&coef));
        }
    }
    out.scalar_mul(&prefactor)
}

/// s_{(p,1^q)}.
fn hook_schur(ring: &LaurentRing, cap: u32, p: u32, q: u32) -> KSeries {
    let mut parts = vec![p];
    parts.extend(std::iter::repeat(1).take(q as usize));
    SymSeries::schur(ring, cap, &Partition::new(parts)).unwrap()
}

/// The non-equivariant single row: Σ over p of s_{(i)} collapses to
/// h_i(y); kept for readability at call sites.
pub fn single_row_b0(n: usize, cap: u32, i: usize) -> KSeries {
    let ring = LaurentRing::k(n);
    SymSeries::h(&ring, cap, i as u32)
}

/// The non-equivariant single column Σ_r C(i−1,r) e_{r+1}(y).
pub fn single_column_b0(n: usize, cap: u32, i: usize) -> KSeries {
    let ring = LaurentRing::k(n);
    let mut out = SymSeries::zero(&ring, cap);
    for r in 0..=(i as u32 - 1) {
        out = out.add(
            &SymSeries::elementary(&ring, cap, r + 1)
                .scale_int(crate::symseries::binomial(i as u32 - 1, r)),
        );
    }
    out
}

/// The dual stable Grothendieck polynomial g_λ(y) as a polynomial in
/// y_1..y_vars, by direct enumeration of reverse plane partitions:
/// rows and columns weakly increase, and the weight records, for each
/// value v, the number of columns containing v.
pub fn rpp_polynomial(lambda: &Partition, vars: usize) -> LaurentPoly {
    let n = vars;
    let mut total = LaurentPoly::zero(n, CoeffMode::KMultiplicative);
    if lambda.is_empty() {
        return LaurentPoly::one(n, CoeffMode::KMultiplicative);
    }
    let rows = lambda.len();
    let shape: Vec<usize> = (0..rows).map(|r| lambda.part(r) as usize).collect();
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for (r, &len) in shape.iter().enumerate() {
        for c in 0..len {
            cells.push((r, c));
        }
    }
    let mut filling = vec![vec![0u32; shape[0]]; rows];
    fill(
        &mut filling,
        &cells,
        0,
        &shape,
        n as u32,
        &mut |f: &Vec<Vec<u32>>| {
            // weight: for each column, the set of distinct values
            let mut exp = vec![0i64; n];
            for c in 0..shape[0] {
                let mut seen = std::collections::BTreeSet::new();
                for (r, row) in f.iter().enumerate() {
                    if c < shape[r] {
                        seen.insert(row[c]);
                    }
                }
                for v in seen {
                    exp[(v - 1) as usize] += 1;
                }
            }
            total = total
                .add(&LaurentPoly::monomial(n, CoeffMode::KMultiplicative, exp, BigInt::one()).unwrap())
                .unwrap();
        },
    );
    total
}

fn fill<F: FnMut(&Vec<Vec<u32>>)>(
    filling: &mut Vec<Vec<u32>>,
    cells: &[(usize, usize)],
    idx: usize,
    shape: &[usize],
    max: u32,
    emit: &mut F,
) {
    if idx == cells.len() {
        emit(filling);
        return;
    }
    let (r, c) = cells[idx];
    let lo_row = if c > 0 { filling[r][c - 1] } else { 1 };
    let lo_col = if r > 0 && c < shape[r - 1] {
        filling[r - 1][c]
    } else {
        1
    };
    let lo = lo_row.max(lo_col).max(1);
    for v in lo..=max {
        filling[r][c] = v;
        fill(filling, cells, idx + 1, shape, max, emit);
    }
    filling[r][c] = 0;
}

/// Evaluate a (nonnegative-degree) symmetric series with integer
/// coefficients in the variables y_1..y_vars, exactly, as a polynomial:
/// h_r ↦ h_r(y_1..y_vars). Coefficients must be constants.
pub fn evaluate_in_variables(f: &KSeries, vars: usize) -> LaurentPoly {
    let ring = LaurentRing::k(vars);
    let ys: Vec<LaurentPoly> = (0..vars)
        .map(|j| {
            let mut e = vec![0i64; vars];
            e[j] = 1;
            LaurentPoly::exp(vars, e)
        })
        .collect();
    let mut out = LaurentPoly::zero(vars, CoeffMode::KMultiplicative);
    for (mu, c) in f.terms() {
        // coefficient must be constant (integer)
        let k = c.phi0();
        debug_assert_eq!(c, &LaurentPoly::constant(c.rank(), c.mode(), k.clone()));
        let mut term = LaurentPoly::constant(vars, CoeffMode::KMultiplicative, k);
        for &part in mu.parts() {
            term = term
                .mul(&complete_homogeneous(&ring, &ys, part))
                .unwrap();
        }
        out = out.add(&term).unwrap();
    }
    out
}
