//! Multivariate polynomial gcd over the rationals.
//!
//! The workhorses are modular: a single evaluation plus a word-prime Euclid
//! certifies coprime inputs almost for free, univariate gcds are lifted
//! from word primes by CRT and verified by trial division, and bivariate
//! gcds interpolate univariate images Brown-style (scaled by the gcd of the
//! leading coefficients, verified by trial division).  A primitive
//! pseudo-remainder sequence on the recursive dense view remains as the
//! fallback and handles three or more variables.  Inputs with negative
//! exponents are shifted to proper polynomials first; monomial factors are
//! part of the gcd of the shifted representatives.

use crate::poly::Poly;
use crate::symbol::Symbol;
use crate::{rat, Rat};
use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

const PRIMES: [u64; 5] = [2147483647, 2147483629, 2147483587, 2147483579, 2147483563];

/// Greatest common divisor, canonical: primitive with positive leading
/// coefficient under graded-lex.  `gcd(0, 0) = 0`.
pub fn multivar_gcd(a: &Poly, b: &Poly) -> Poly {
    let (a, _) = a.shrink_vars().clear_negative_exponents();
    let (b, _) = b.shrink_vars().clear_negative_exponents();
    gcd_proper(&a, &b)
}

fn gcd_proper(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(&[]);
    }
    let (a, b) = Poly::unify(a, b);
    match a.vars().len() {
        1 => univariate_gcd(&a, &b),
        2 => bivariate_gcd(&a, &b),
        _ => prs_entry(&a, &b),
    }
}

fn normalize(p: &Poly) -> Poly {
    if p.is_zero() {
        return p.clone();
    }
    p.primitive_part().shrink_vars()
}

// ---------------------------------------------------------------------------
// dense helpers

fn dense_1(p: &Poly) -> Vec<Rat> {
    let v = p.vars()[0];
    let deg = p.degree_in(v);
    let mut out = vec![Rat::zero(); deg as usize + 1];
    for (m, c) in p.terms() {
        out[m.0[0] as usize] = c.clone();
    }
    out
}

fn poly_1(v: Symbol, coeffs: &[Rat]) -> Poly {
    let mut p = Poly::zero(&[v]);
    for (e, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            p = p.add(&Poly::monomial(&[v], v, e as i64, c.clone()));
        }
    }
    p
}

fn trim(v: &mut Vec<Rat>) {
    while v.last().map(|x| x.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

/// Integer primitive form of a dense rational vector.
fn to_int_primitive(p: &[Rat]) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for c in p {
        den = den.lcm(c.denom());
    }
    let mut v: Vec<BigInt> = p.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    while v.last().map(|x| x.is_zero()).unwrap_or(false) {
        v.pop();
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if !content.is_zero() && !content.is_one() {
        for c in &mut v {
            *c /= &content;
        }
    }
    v
}

// ---------------------------------------------------------------------------
// word-prime arithmetic

fn modp(x: &BigInt, p: u64) -> u64 {
    let m = (x % BigInt::from(p)).to_i128().unwrap();
    (m.rem_euclid(p as i128)) as u64
}

fn rat_modp(x: &Rat, p: u64) -> Option<u64> {
    let d = modp(x.denom(), p);
    if d == 0 {
        return None;
    }
    let n = modp(x.numer(), p);
    Some(mulmod(n, inv_modp(d, p), p))
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_modp(a: u64, p: u64) -> u64 {
    // extended Euclid
    let (mut t, mut new_t): (i64, i64) = (0, 1);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        t -= q * new_t;
        std::mem::swap(&mut t, &mut new_t);
        r -= q * new_r;
        std::mem::swap(&mut r, &mut new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i64) as u64
}

fn vec_modp(p: &[Rat], pr: u64) -> Option<Vec<u64>> {
    let mut out = Vec::with_capacity(p.len());
    for c in p {
        out.push(rat_modp(c, pr)?);
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    Some(out)
}

/// Monic gcd over `F_p`, dense, low degree first.
fn gcd_modp(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    loop {
        if b.is_empty() {
            if let Some(&lc) = a.last() {
                let ilc = inv_modp(lc, p);
                for c in a.iter_mut() {
                    *c = mulmod(*c, ilc, p);
                }
            }
            return a;
        }
        // a mod b
        let db = b.len() - 1;
        let lb = inv_modp(*b.last().unwrap(), p);
        while a.len() > db {
            let la = *a.last().unwrap();
            if la != 0 {
                let f = mulmod(la, lb, p);
                let shift = a.len() - 1 - db;
                for i in 0..=db {
                    let t = mulmod(f, b[i], p);
                    let idx = shift + i;
                    a[idx] = (a[idx] + p - t) % p;
                }
            }
            a.pop();
            while a.last() == Some(&0) {
                a.pop();
            }
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
}

// ---------------------------------------------------------------------------
// univariate gcd over Q: modular with CRT lift and trial-division verify

/// Dense univariate gcd, primitive over `Z` with positive leading
/// coefficient, lowest degree first.
pub(crate) fn univariate_gcd_rat(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let ai = to_int_primitive(a);
    let bi = to_int_primitive(b);
    if ai.is_empty() {
        return bi.into_iter().map(Rat::from_integer).collect();
    }
    if bi.is_empty() {
        return ai.into_iter().map(Rat::from_integer).collect();
    }
    if ai.len() == 1 || bi.len() == 1 {
        return vec![Rat::one()];
    }
    let gamma = ai.last().unwrap().gcd(bi.last().unwrap());
    let mut crt_mod = BigInt::one();
    let mut crt_val: Vec<BigInt> = Vec::new();
    let mut best_deg = usize::MAX;
    for &p in &PRIMES {
        let (ap, bp) = match (int_vec_modp(&ai, p), int_vec_modp(&bi, p)) {
            (Some(x), Some(y)) => (x, y),
            _ => continue,
        };
        if ap.len() != ai.len() || bp.len() != bi.len() {
            continue; // leading coefficient vanished: unlucky prime
        }
        let g = gcd_modp(ap, bp, p);
        let d = g.len() - 1;
        if d == 0 {
            return vec![Rat::one()];
        }
        if d < best_deg {
            best_deg = d;
            crt_mod = BigInt::one();
            crt_val.clear();
        } else if d > best_deg {
            continue;
        }
        // scale to gamma * monic
        let gp = modp(&gamma, p);
        let scaled: Vec<u64> = g.iter().map(|&c| mulmod(c, gp, p)).collect();
        crt_combine(&mut crt_val, &mut crt_mod, &scaled, p);
        let candidate: Vec<BigInt> = crt_val
            .iter()
            .map(|c| symmetric(c, &crt_mod))
            .collect();
        let mut cand: Vec<BigInt> = candidate;
        let mut content = BigInt::zero();
        for c in &cand {
            content = content.gcd(c);
        }
        if !content.is_zero() && !content.is_one() {
            for c in &mut cand {
                *c /= &content;
            }
        }
        if divides_int(&cand, &ai) && divides_int(&cand, &bi) {
            if cand.last().unwrap().is_negative() {
                for c in cand.iter_mut() {
                    *c = -c.clone();
                }
            }
            return cand.into_iter().map(Rat::from_integer).collect();
        }
    }
    // all primes exhausted without verification: integer PRS fallback
    univariate_gcd_int(a, b)
}

fn int_vec_modp(p: &[BigInt], pr: u64) -> Option<Vec<u64>> {
    let mut out: Vec<u64> = p.iter().map(|c| modp(c, pr)).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    Some(out)
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    if c * 2 > *m {
        c - m
    } else {
        c.clone()
    }
}

fn crt_combine(acc: &mut Vec<BigInt>, acc_mod: &mut BigInt, new: &[u64], p: u64) {
    let pb = BigInt::from(p);
    if acc.is_empty() {
        *acc = new.iter().map(|&c| BigInt::from(c)).collect();
        *acc_mod = pb;
        return;
    }
    let len = acc.len().max(new.len());
    acc.resize(len, BigInt::zero());
    let inv = {
        let m = modp(acc_mod, p);
        BigInt::from(inv_modp(m, p))
    };
    for (i, slot) in acc.iter_mut().enumerate() {
        let target = if i < new.len() { new[i] } else { 0 };
        let cur = modp(slot, p);
        let diff = (target + p - cur) % p;
        let k = (BigInt::from(diff) * &inv) % &pb;
        *slot += &k * &*acc_mod;
    }
    *acc_mod *= pb;
}

/// Does `d` divide `a` exactly over the integers (as polynomials)?
fn divides_int(d: &[BigInt], a: &[BigInt]) -> bool {
    if d.is_empty() {
        return a.is_empty();
    }
    if d.len() == 1 {
        return true; // constant, content-free setting
    }
    let mut r: Vec<Rat> = a.iter().map(|c| Rat::from_integer(c.clone())).collect();
    let dd: Vec<Rat> = d.iter().map(|c| Rat::from_integer(c.clone())).collect();
    let lc = dd.last().unwrap().clone();
    while r.len() >= dd.len() {
        let f = r.last().unwrap() / &lc;
        let shift = r.len() - dd.len();
        for i in 0..dd.len() {
            let t = &dd[i] * &f;
            r[shift + i] -= t;
        }
        r.pop();
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r.is_empty()
}

fn univariate_gcd(a: &Poly, b: &Poly) -> Poly {
    let v = a.vars()[0];
    let g = univariate_gcd_rat(&dense_1(a), &dense_1(b));
    normalize(&poly_1(v, &g))
}

/// Integer primitive PRS (kept as the verified fallback).
pub(crate) fn univariate_gcd_int(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    fn prem(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
        let mut r = f.to_vec();
        let dg = g.len() - 1;
        let lg = g.last().unwrap().clone();
        while r.len() >= g.len() {
            let dr = r.len() - 1;
            let lr = r.last().unwrap().clone();
            for c in r.iter_mut() {
                *c *= &lg;
            }
            for i in 0..g.len() {
                r[dr - dg + i] -= &lr * &g[i];
            }
            while r.last().map(|x| x.is_zero()).unwrap_or(false) {
                r.pop();
            }
            if r.is_empty() {
                break;
            }
        }
        r
    }

    fn primitive(v: &mut Vec<BigInt>) {
        let mut content = BigInt::zero();
        for c in v.iter() {
            content = content.gcd(c);
        }
        if !content.is_zero() && !content.is_one() {
            for c in v.iter_mut() {
                *c /= &content;
            }
        }
    }

    let mut f = to_int_primitive(a);
    let mut g = to_int_primitive(b);
    if f.is_empty() {
        std::mem::swap(&mut f, &mut g);
    }
    if g.is_empty() {
        if !f.is_empty() && f.last().unwrap().is_negative() {
            for c in f.iter_mut() {
                *c = -c.clone();
            }
        }
        return f.into_iter().map(Rat::from_integer).collect();
    }
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let mut r = prem(&f, &g);
        if r.is_empty() {
            break;
        }
        primitive(&mut r);
        f = g;
        g = r;
    }
    if g.last().unwrap().is_negative() {
        for c in g.iter_mut() {
            *c = -c.clone();
        }
    }
    g.into_iter().map(Rat::from_integer).collect()
}

// ---------------------------------------------------------------------------
// bivariate gcd: content split + interpolation of univariate images

/// Dense bivariate view: `coeffs[i]` is the `main^i` coefficient as a dense
/// vector in the other variable.
fn dense_2(p: &Poly, main_idx: usize) -> Vec<Vec<Rat>> {
    let other_idx = 1 - main_idx;
    let dm = p
        .terms()
        .map(|(m, _)| m.0[main_idx])
        .max()
        .unwrap_or(0) as usize;
    let dw = p
        .terms()
        .map(|(m, _)| m.0[other_idx])
        .max()
        .unwrap_or(0) as usize;
    let mut out = vec![vec![Rat::zero(); dw + 1]; dm + 1];
    for (m, c) in p.terms() {
        out[m.0[main_idx] as usize][m.0[other_idx] as usize] = c.clone();
    }
    out
}

fn eval_w(col: &[Rat], w: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in col.iter().rev() {
        acc = acc * w.clone() + c.clone();
    }
    acc
}

fn bivariate_gcd(a: &Poly, b: &Poly) -> Poly {
    let vars = a.vars().to_vec();
    let main = 1usize; // last variable in graded-lex order
    let da = dense_2(a, main);
    let db = dense_2(b, main);
    let (wv, zv) = (vars[0], vars[1]);

    // content with respect to the main variable
    let cont = |d: &Vec<Vec<Rat>>| -> Vec<Rat> {
        let mut g: Vec<Rat> = Vec::new();
        for col in d {
            let mut col = col.clone();
            trim(&mut col);
            if col.is_empty() {
                continue;
            }
            g = if g.is_empty() {
                to_int_primitive(&col)
                    .into_iter()
                    .map(Rat::from_integer)
                    .collect()
            } else {
                univariate_gcd_rat(&g, &col)
            };
            if g.len() == 1 {
                break;
            }
        }
        g
    };
    let ca = cont(&da);
    let cb = cont(&db);
    let content_gcd = poly_1(wv, &univariate_gcd_rat(&ca, &cb));
    let pa = a
        .exact_div(&poly_1(wv, &ca))
        .expect("content divides");
    let pb = b
        .exact_div(&poly_1(wv, &cb))
        .expect("content divides");
    if pa.degree_in(zv) == 0 || pb.degree_in(zv) == 0 {
        return normalize(&content_gcd);
    }
    let pp = bivariate_pp_gcd(&pa, &pb, wv, zv)
        .unwrap_or_else(|| prs_entry(&pa, &pb));
    normalize(&content_gcd.mul(&pp))
}

/// Divisibility in the proper polynomial ring: `exact_div` works in the
/// Laurent ring where monomials are units, so the valuations must be
/// compared as well.
fn divides_properly(a: &Poly, d: &Poly) -> bool {
    for &v in d.vars() {
        if d.min_exp_in(v) > a.min_exp_in(v) {
            return false;
        }
    }
    a.exact_div(d).is_ok()
}

/// Gcd of primitive (in `z`) bivariate polynomials by interpolation in `w`;
/// `None` when the interpolation did not verify (callers fall back).
fn bivariate_pp_gcd(a: &Poly, b: &Poly, wv: Symbol, zv: Symbol) -> Option<Poly> {
    let da = dense_2(a, 1);
    let db = dense_2(b, 1);
    let lca: Vec<Rat> = da.last().unwrap().clone();
    let lcb: Vec<Rat> = db.last().unwrap().clone();
    let gamma = univariate_gcd_rat(&lca, &lcb);

    // quick mod-p probe for the z-degree of the gcd
    let probe = |w0: i64| -> Option<usize> {
        let p = PRIMES[0];
        let w = rat(w0);
        let ea: Vec<Rat> = da.iter().map(|col| eval_w(col, &w)).collect();
        let eb: Vec<Rat> = db.iter().map(|col| eval_w(col, &w)).collect();
        if ea.last().unwrap().is_zero() || eb.last().unwrap().is_zero() {
            return None;
        }
        let (ap, bp) = (vec_modp(&ea, p)?, vec_modp(&eb, p)?);
        if ap.len() != ea.len() || bp.len() != eb.len() {
            return None;
        }
        Some(gcd_modp(ap, bp, p).len() - 1)
    };
    let mut deg_estimate = usize::MAX;
    for w0 in [3i64, -3, 5, 7, -5] {
        if let Some(d) = probe(w0) {
            deg_estimate = deg_estimate.min(d);
            if deg_estimate == 0 {
                return Some(Poly::one(&[]));
            }
            break;
        }
    }

    // Newton interpolation of gamma(w) * monic gcd at w-points
    let wdeg = |d: &Vec<Vec<Rat>>| d.iter().map(|col| col.len()).max().unwrap_or(1);
    let w_budget = wdeg(&da).min(wdeg(&db)) + gamma.len() + 1;
    let mut points: Vec<Rat> = Vec::new();
    let mut newton: Vec<Vec<Rat>> = Vec::new(); // divided differences, per z-coefficient
    let mut best_deg = usize::MAX;
    let mut w0 = 0i64;
    let mut tried = 0;
    while tried < 4 * w_budget + 20 {
        let w = rat(w0);
        w0 = if w0 <= 0 { -w0 + 1 } else { -w0 };
        tried += 1;
        let ea: Vec<Rat> = da.iter().map(|col| eval_w(col, &w)).collect();
        let eb: Vec<Rat> = db.iter().map(|col| eval_w(col, &w)).collect();
        if ea.last().unwrap().is_zero() || eb.last().unwrap().is_zero() {
            continue;
        }
        let g = univariate_gcd_rat(&ea, &eb);
        let d = g.len() - 1;
        if d == 0 {
            return Some(Poly::one(&[]));
        }
        if d > best_deg {
            continue; // unlucky evaluation
        }
        if d < best_deg {
            best_deg = d;
            points.clear();
            newton.clear();
        }
        // scale to gamma(w0) * monic
        let gv = eval_w(&gamma, &w);
        if gv.is_zero() {
            continue;
        }
        let lc = g.last().unwrap().clone();
        let scaled: Vec<Rat> = g.iter().map(|c| c * &gv / &lc).collect();
        // Newton update
        let mut col = scaled.clone();
        col.resize(best_deg + 1, Rat::zero());
        let mut diff = col;
        for (j, prev) in newton.iter().enumerate() {
            let denom = &w - &points[j];
            diff = diff
                .iter()
                .zip(prev.iter().chain(std::iter::repeat(&Rat::zero())))
                .map(|(x, p)| (x - p) / &denom)
                .collect();
        }
        newton.push(diff.clone());
        points.push(w.clone());
        if diff.iter().all(|c| c.is_zero()) && points.len() >= 2 {
            // stabilized: assemble and verify
            let mut acc = vec![Vec::<Rat>::new(); best_deg + 1];
            let mut basis: Vec<Rat> = vec![Rat::one()]; // poly in w
            for (j, coeffs) in newton.iter().enumerate() {
                for (i, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if acc[i].len() < basis.len() {
                        acc[i].resize(basis.len(), Rat::zero());
                    }
                    for (k, bkc) in basis.iter().enumerate() {
                        let t = bkc * c;
                        acc[i][k] += t;
                    }
                }
                // basis *= (w - points[j])
                let mut next = vec![Rat::zero(); basis.len() + 1];
                for (k, bkc) in basis.iter().enumerate() {
                    next[k + 1] += bkc;
                    next[k] -= bkc * &points[j];
                }
                basis = next;
            }
            let mut cand = Poly::zero(&[wv, zv]);
            for (i, col) in acc.iter().enumerate() {
                for (k, c) in col.iter().enumerate() {
                    if !c.is_zero() {
                        cand = cand.add(
                            &Poly::monomial(&[wv, zv], zv, i as i64, c.clone())
                                .mul_monomial(&[(wv, k as i64)]),
                        );
                    }
                }
            }
            if cand.is_zero() {
                continue;
            }
            // the gamma scaling can smuggle in a power of w that divides
            // neither primitive part; strip it before verifying
            let wmin = cand.min_exp_in(wv);
            let cand = cand.mul_monomial(&[(wv, -wmin)]).primitive_part();
            if divides_properly(a, &cand) && divides_properly(b, &cand) {
                return Some(cand);
            }
            // not yet the true gcd: keep adding points
        }
        if points.len() > w_budget + 2 {
            return None;
        }
    }
    None
}

// ---------------------------------------------------------------------------
// fallback: primitive PRS on the recursive dense view

fn prs_entry(a: &Poly, b: &Poly) -> Poly {
    let main = *a.vars().last().unwrap();
    let da = decompose(a, main);
    let db = decompose(b, main);
    let cont_a = content_of(&da);
    let cont_b = content_of(&db);
    let cont = gcd_proper(&cont_a, &cont_b);
    let pp_a = recompose(&div_all(&da, &cont_a), main);
    let pp_b = recompose(&div_all(&db, &cont_b), main);
    let pp = prs_gcd(&pp_a, &pp_b, main);
    normalize(&cont.mul(&pp))
}

fn decompose(p: &Poly, main: Symbol) -> BTreeMap<i64, Poly> {
    let pos = p.vars().iter().position(|&v| v == main).unwrap();
    let rest: Vec<Symbol> = p.vars().iter().copied().filter(|&v| v != main).collect();
    let mut out: BTreeMap<i64, Poly> = BTreeMap::new();
    for (m, c) in p.terms() {
        let e = m.0[pos];
        let reduced: Vec<i64> = m
            .0
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != pos)
            .map(|(_, &x)| x)
            .collect();
        let entry = out.entry(e).or_insert_with(|| Poly::zero(&rest));
        let mut t = Poly::constant(&rest, c.clone());
        let shifts: Vec<(Symbol, i64)> = rest.iter().copied().zip(reduced).collect();
        t = t.mul_monomial(&shifts);
        *entry = entry.add(&t);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn recompose(d: &BTreeMap<i64, Poly>, main: Symbol) -> Poly {
    let mut out = Poly::zero(&[main]);
    for (&e, c) in d {
        out = out.add(&c.mul_monomial(&[(main, e)]));
    }
    out
}

fn content_of(d: &BTreeMap<i64, Poly>) -> Poly {
    let mut g = Poly::zero(&[]);
    for c in d.values() {
        g = gcd_proper(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn div_all(d: &BTreeMap<i64, Poly>, c: &Poly) -> BTreeMap<i64, Poly> {
    if c.is_one() {
        return d.clone();
    }
    d.iter()
        .map(|(&e, p)| (e, p.exact_div(c).expect("content must divide")))
        .collect()
}

fn prs_gcd(f: &Poly, g: &Poly, main: Symbol) -> Poly {
    let (mut f, mut g) = if f.degree_in(main) >= g.degree_in(main) {
        (f.clone(), g.clone())
    } else {
        (g.clone(), f.clone())
    };
    if g.degree_in(main) == 0 {
        return Poly::one(&[]);
    }
    loop {
        let r = pseudo_rem(&f, &g, main);
        if r.is_zero() {
            return normalize(&primitive_in(&g, main));
        }
        if !r.uses_var(main) {
            return Poly::one(&[]);
        }
        f = g;
        g = primitive_in(&r, main);
    }
}

fn primitive_in(p: &Poly, main: Symbol) -> Poly {
    let d = decompose(p, main);
    let c = content_of(&d);
    recompose(&div_all(&d, &c), main)
}

fn pseudo_rem(f: &Poly, g: &Poly, main: Symbol) -> Poly {
    let dg = g.degree_in(main);
    let lg = lead_coeff_in(g, main);
    let mut r = f.clone();
    while !r.is_zero() && r.degree_in(main) >= dg {
        let dr = r.degree_in(main);
        let lr = lead_coeff_in(&r, main);
        r = r
            .mul(&lg)
            .sub(&lr.mul(&g.mul_monomial(&[(main, dr - dg)])));
        debug_assert!(r.is_zero() || r.degree_in(main) < dr);
    }
    r
}

fn lead_coeff_in(p: &Poly, main: Symbol) -> Poly {
    let d = decompose(p, main);
    d.iter().next_back().map(|(_, c)| c.clone()).unwrap()
}

/// Build a `Poly` from dense univariate coefficients (used in tests).
pub fn poly_from_dense(v: Symbol, coeffs: &[Rat]) -> Poly {
    poly_1(v, coeffs)
}
