//! Generic arithmetic on sparse term maps over arbitrary-precision
//! integers, shared by the finite- and infinite-rank coefficient rings.
//!
//! A term map is canonical when it stores no zero coefficients; every
//! function here preserves that invariant.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::exponent::ExpKey;
use crate::error::Error;

pub type TermMap<E> = BTreeMap<E, BigInt>;

pub fn insert_term<E: ExpKey>(map: &mut TermMap<E>, exp: E, coef: BigInt) {
    if coef.is_zero() {
        return;
    }
    match map.entry(exp) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coef);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += coef;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub fn add<E: ExpKey>(a: &TermMap<E>, b: &TermMap<E>) -> TermMap<E> {
    let mut out = a.clone();
    for (e, c) in b {
        insert_term(&mut out, e.clone(), c.clone());
    }
    out
}

pub fn sub<E: ExpKey>(a: &TermMap<E>, b: &TermMap<E>) -> TermMap<E> {
    let mut out = a.clone();
    for (e, c) in b {
        insert_term(&mut out, e.clone(), -c.clone());
    }
    out
}

pub fn neg<E: ExpKey>(a: &TermMap<E>) -> TermMap<E> {
    a.iter().map(|(e, c)| (e.clone(), -c.clone())).collect()
}

pub fn mul<E: ExpKey>(a: &TermMap<E>, b: &TermMap<E>) -> TermMap<E> {
    let mut out = TermMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            insert_term(&mut out, ea.add(eb), ca * cb);
        }
    }
    out
}

pub fn scale<E: ExpKey>(a: &TermMap<E>, k: &BigInt) -> TermMap<E> {
    if k.is_zero() {
        return TermMap::new();
    }
    a.iter().map(|(e, c)| (e.clone(), c * k)).collect()
}

pub fn map_exponents<E: ExpKey, F: Fn(&E) -> E>(a: &TermMap<E>, f: F) -> TermMap<E> {
    let mut out = TermMap::new();
    for (e, c) in a {
        insert_term(&mut out, f(e), c.clone());
    }
    out
}

/// Exact division by a two-term divisor `c1*x^mu + c2*x^nu` with unit
/// coefficients (±1). Eliminates the first variable on which the two
/// divisor exponents differ and runs univariate synthetic division from
/// the top degree; any nonzero remainder is a hard error.
pub fn exact_divide<E: ExpKey>(f: &TermMap<E>, d: &TermMap<E>) -> Result<TermMap<E>, Error> {
    if d.len() != 2 {
        return Err(Error::BadDivisor(format!(
            "divisor must have exactly two terms, got {}",
            d.len()
        )));
    }
    let mut it = d.iter();
    let (e1, c1) = it.next().unwrap();
    let (e2, c2) = it.next().unwrap();
    let one = BigInt::from(1);
    let m_one = BigInt::from(-1);
    if (c1 != &one && c1 != &m_one) || (c2 != &one && c2 != &m_one) {
        return Err(Error::BadDivisor("divisor coefficients must be ±1".into()));
    }
    if f.is_empty() {
        return Ok(TermMap::new());
    }

    // Pick the elimination variable: first slot where the divisor
    // exponents differ; orient so `top` has the larger exponent there.
    let diff = e1.sub(e2);
    let var = *diff
        .support()
        .first()
        .expect("two-term divisor with equal exponents");
    let (top_e, top_c, low_e, low_c) = if e1.get(var) > e2.get(var) {
        (e1.clone(), c1.clone(), e2.clone(), c2.clone())
    } else {
        (e2.clone(), c2.clone(), e1.clone(), c1.clone())
    };
    let m1 = top_e.get(var);
    let m2 = low_e.get(var);

    let hi = f.keys().map(|e| e.get(var)).max().unwrap();
    let lo = f.keys().map(|e| e.get(var)).min().unwrap();
    // Quotient degrees in `var` lie in [lo - m2, hi - m1].
    let q_lo = lo - m2;
    let q_hi = hi - m1;
    if q_hi < q_lo {
        return Err(Error::NotDivisible);
    }

    let mut r = f.clone();
    let mut q = TermMap::new();
    for k in (q_lo..=q_hi).rev() {
        let deg = k + m1;
        let level: Vec<(E, BigInt)> = r
            .iter()
            .filter(|(e, _)| e.get(var) == deg)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        for (e, c) in level {
            // top_c is ±1, so the coefficient divides exactly.
            let qc = if top_c == one { c } else { -c };
            let qe = e.sub(&top_e);
            insert_term(&mut r, qe.add(&top_e), -&qc * &top_c);
            insert_term(&mut r, qe.add(&low_e), -&qc * &low_c);
            insert_term(&mut q, qe, qc);
        }
    }
    if !r.is_empty() {
        return Err(Error::NotDivisible);
    }
    Ok(q)
}

/// Sum of all coefficients: the image under e^λ ↦ 1 (or a ↦ ... no-op
/// in polynomial mode only for the constant part; callers choose).
pub fn sum_coefficients<E: ExpKey>(a: &TermMap<E>) -> BigInt {
    let mut s = BigInt::zero();
    for c in a.values() {
        s += c;
    }
    s
}
