//! Plethystic Log and Exp.
//!
//! For a series `f` with constant term 1 over a domain carrying Adams
//! operations `psi_d`, write `log f = sum U_n T^n / n`.  Then
//!
//! ```text
//! Log f = sum V_n T^n,     V_n = (1/n) sum_{d|n} mu(d) psi_d(U_{n/d})
//! Exp g = exp(sum_{d>=1} psi_d(g) / d)
//! ```
//!
//! These are mutually inverse, turn products into sums, and commute with
//! the Adams operations.  Note that `T -> -T` does *not* commute with them.

use crate::series::{GradedRing, Series};
use crate::{ratio, Error, Result};

/// Ordinary Möbius function.
pub fn moebius(n: u32) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut mu = 1i64;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

pub fn divisors(n: u32) -> Vec<u32> {
    let mut d: Vec<u32> = (1..=n).filter(|k| n % k == 0).collect();
    d.sort_unstable();
    d
}

/// 2-adic valuation.
pub fn v2(n: u32) -> u32 {
    assert!(n >= 1);
    n.trailing_zeros()
}

/// Plethystic logarithm of a series with constant term 1.
pub fn pleth_log<R: GradedRing>(f: &Series<R>) -> Result<Series<R>> {
    let ring = f.ring().clone();
    if f.slice(0) != &ring.one() {
        return Err(Error::LogOfNonUnit(format!("{:?}", f.slice(0))));
    }
    let l = f.log()?;
    let cutoff = f.cutoff();
    let mut out = Series::zero(ring.clone(), cutoff);
    for n in 1..=cutoff {
        // U_m = m * L_m;  V_n = (1/n) sum_{d|n} mu(d) psi_d(U_{n/d})
        let mut acc = ring.zero();
        for d in divisors(n as u32) {
            let mu = moebius(d);
            if mu == 0 {
                continue;
            }
            let m = n / d as usize;
            if ring.is_zero(l.slice(m)) {
                continue;
            }
            let u = ring.scale(&crate::rat(m as i64), l.slice(m));
            let t = ring.adams(d, &u);
            acc = ring.add(&acc, &ring.scale(&crate::rat(mu), &t));
        }
        out.set_slice(n, ring.scale(&ratio(1, n as i64), &acc));
    }
    Ok(out)
}

/// Plethystic exponential of a series with constant term 0.
pub fn pleth_exp<R: GradedRing>(g: &Series<R>) -> Result<Series<R>> {
    let ring = g.ring().clone();
    if !ring.is_zero(g.slice(0)) {
        return Err(Error::ExpOfNonzeroConstant(format!("{:?}", g.slice(0))));
    }
    let cutoff = g.cutoff();
    // Psi(g) = sum_{d >= 1} psi_d(g)/d, collected by target degree
    let mut psi = Series::zero(ring.clone(), cutoff);
    for n in 1..=cutoff {
        let mut acc = ring.zero();
        for d in divisors(n as u32) {
            let m = n / d as usize;
            if ring.is_zero(g.slice(m)) {
                continue;
            }
            let t = ring.adams(d, g.slice(m));
            acc = ring.add(&acc, &ring.scale(&ratio(1, d as i64), &t));
        }
        psi.set_slice(n, acc);
    }
    psi.exp()
}

/// Möbius resummation of an Adams-power family: `g_n` such that
/// `psi_n(g) = sum_{d|n} d * g_d`, i.e.
/// `g_n = (1/n) sum_{d|n} mu(d) psi_{n/d}(g)` for a degree-0 slice `g`.
pub fn moebius_resum<R: GradedRing>(ring: &R, g: &R::Slice, n: u32) -> R::Slice {
    let mut acc = ring.zero();
    for d in divisors(n) {
        let mu = moebius(d);
        if mu == 0 {
            continue;
        }
        let t = ring.adams(n / d, g);
        acc = ring.add(&acc, &ring.scale(&crate::rat(mu), &t));
    }
    ring.scale(&ratio(1, n as i64), &acc)
}
