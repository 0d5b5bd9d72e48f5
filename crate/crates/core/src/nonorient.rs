//! Counting series for character stacks of closed non-orientable surfaces.
//!
//! For the connected sum of `r` projective planes, set `rho = r - 2`.  The
//! pipeline is
//!
//! ```text
//! Z_rho(q, T) = sum_lambda (q^{-n(lambda)} H_lambda(q))^rho T^|lambda|
//! V_{rho, n}  = Log-coefficients of Z_rho
//! W_{rho, n}  = 2 V_{rho,n} + (q-2) V_{2rho,n/2}
//!               + (q-1)/2 (V_{rho,n/2,2}(q^2) - V_{2rho,n/2,2}(q))
//! M_rho(q, T) = Exp(sum W_{rho,n} T^n)
//! ```
//!
//! and the stack point count for degree `n` is
//! `q^{rho binom(n,2)} [T^n] M_rho`, a Laurent polynomial with integer
//! coefficients for `rho >= 0` and a rational function for `rho = -1`.
//! The same series factors as a triple product over Frobenius-inversion
//! orbit counts of the multiplicative group; both routes are implemented
//! and compared.

use crate::partitions::{hook_polynomial, partitions_of_bounded};
use crate::plethysm::{divisors, moebius, moebius_resum, pleth_exp, pleth_log, v2};
use crate::poly::{poly_from_coeffs, Poly};
use crate::ratfun::Rf;
use crate::report::Report;
use crate::series::{geometric, BiRing, BiSeries, BiSlice, QSeries, RfRing, Series};
use crate::symbol::{sym, Symbol};
use crate::{rat, ratio, Error, Rat, Result};
use num_traits::{One, Zero};

pub fn q_symbol() -> Symbol {
    sym("q")
}

/// `(q)_n = prod_{k=1}^{n} (1 - q^k)`.
pub fn q_pochhammer(n: u32) -> Poly {
    let q = q_symbol();
    let mut out = Poly::one(&[q]);
    for k in 1..=n {
        out = out.mul(&Poly::one(&[q]).sub(&Poly::monomial(&[q], q, k as i64, Rat::one())));
    }
    out
}

/// Gaussian binomial coefficient `(q)_n / ((q)_r (q)_{n-r})`.
pub fn q_binomial(n: u32, r: u32) -> Result<Poly> {
    if r > n {
        return Err(Error::RangeError(format!("binomial [{} {}]", n, r)));
    }
    q_pochhammer(n).exact_div(&q_pochhammer(r).mul(&q_pochhammer(n - r)))
}

/// Number of involutions in `GL_n(F_q)`:
/// `I_n(q) = sum_r q^{r(n-r)} [n r]`.
pub fn involution_count(n: u32) -> Poly {
    let q = q_symbol();
    let mut out = Poly::zero(&[q]);
    for r in 0..=n {
        let term = Poly::monomial(&[q], q, (r * (n - r)) as i64, Rat::one())
            .mul(&q_binomial(n, r).expect("r <= n"));
        out = out.add(&term);
    }
    out
}

/// `|GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i)` as a polynomial in `q`.
pub fn gl_order(n: u32) -> Poly {
    let q = q_symbol();
    let mut out = Poly::one(&[q]);
    for i in 0..n {
        out = out.mul(
            &Poly::monomial(&[q], q, n as i64, Rat::one()).sub(&Poly::monomial(
                &[q],
                q,
                i as i64,
                Rat::one(),
            )),
        );
    }
    out
}

/// `I(q, T) = sum_n I_n(q)/(q)_n T^n`.
pub fn i_series(nmax: usize) -> QSeries {
    let coeffs = (0..=nmax)
        .map(|n| {
            Rf::new(involution_count(n as u32), q_pochhammer(n as u32))
                .expect("(q)_n is nonzero")
        })
        .collect();
    QSeries::from_coeffs(coeffs)
}

/// `I*(q, X, Y) = sum_{r,s} q^{rs}/((q)_r (q)_s) X^r Y^s`, graded by total
/// degree.
pub fn i_star_series(nmax: usize) -> BiSeries {
    let q = q_symbol();
    let mut slices = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        let mut slice = BiSlice::new();
        for r in 0..=n {
            let s = n - r;
            let num = Poly::monomial(&[q], q, (r * s) as i64, Rat::one());
            let den = q_pochhammer(r as u32).mul(&q_pochhammer(s as u32));
            slice.insert((r, s), Rf::new(num, den).expect("nonzero"));
        }
        slices.push(slice);
    }
    Series::from_slices(BiRing, slices)
}

/// `Z_rho(q, T) = sum_lambda (q^{-n(lambda)} H_lambda(q))^rho T^{|lambda|}`.
pub fn z_series(rho: i32, nmax: usize) -> Result<QSeries> {
    let q = q_symbol();
    let mut coeffs = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        let mut acc = Rf::zero();
        for lam in partitions_of_bounded(n as u32, nmax.max(12) as u32)? {
            let base = Rf::from_poly(
                &Poly::monomial(&[q], q, -lam.n_stat(), Rat::one()).mul(&hook_polynomial(&lam)),
            );
            acc = acc.add(&base.pow(rho as i64)?);
        }
        coeffs.push(acc);
    }
    Ok(QSeries::from_coeffs(coeffs))
}

/// `V_{rho, n}` for `n = 0..=nmax` (index 0 unused).
pub fn v_coeffs(rho: i32, nmax: usize) -> Result<Vec<Rf>> {
    let l = pleth_log(&z_series(rho, nmax)?)?;
    Ok((0..=nmax).map(|n| l.coeff(n).clone()).collect())
}

/// `V_{rho, n, k} = sum_{m | k^infty, m | n} (1/m) V_{rho, n/m}(q^m)`.
pub fn v_coeff_k(n: u32, k: u32, v: &[Rf]) -> Rf {
    let mut acc = Rf::zero();
    for m in divisors(n) {
        // m must divide some power of k: all prime factors of m divide k
        let mut mm = m;
        for p in 2..=mm {
            while mm % p == 0 && k % p == 0 {
                mm /= p;
            }
            if p > mm {
                break;
            }
        }
        if mm != 1 {
            continue;
        }
        let term = v[(n / m) as usize].adams(m).scale(&ratio(1, m as i64));
        acc = acc.add(&term);
    }
    acc
}

/// The `W` coefficients of the counting series, `n = 1..=nmax`.
pub fn w_coeffs(rho: i32, nmax: usize) -> Result<Vec<Rf>> {
    let v_rho = v_coeffs(rho, nmax)?;
    let v_2rho = v_coeffs(2 * rho, nmax)?;
    let q = q_symbol();
    let q_minus = |c: i64| Rf::from_poly(&poly_from_coeffs(q, &[(1, 1), (0, -c)]));
    let mut out = vec![Rf::zero(); nmax + 1];
    for n in 1..=nmax {
        let mut w = v_rho[n].scale(&rat(2));
        if n % 2 == 0 {
            let h = (n / 2) as u32;
            w = w.add(&q_minus(2).mul(&v_2rho[h as usize]));
            let a = v_coeff_k(h, 2, &v_rho).adams(2);
            let b = v_coeff_k(h, 2, &v_2rho);
            w = w.add(&q_minus(1).mul(&a.sub(&b)).scale(&ratio(1, 2)));
        }
        out[n] = w;
    }
    Ok(out)
}

/// `M_rho(q, T) = Exp(sum_n W_{rho,n} T^n)`.
pub fn m_series(rho: i32, nmax: usize) -> Result<QSeries> {
    let w = w_coeffs(rho, nmax)?;
    let mut g = QSeries::zero(RfRing, nmax);
    for (n, c) in w.into_iter().enumerate().skip(1) {
        g.set_slice(n, c);
    }
    pleth_exp(&g)
}

/// `[T^n] M_rho(q, T)`.
pub fn mcoeff(rho: i32, n: u32) -> Result<Rf> {
    Ok(m_series(rho, n as usize)?.coeff(n as usize).clone())
}

/// Stack point count `E = q^{rho binom(n,2)} [T^n] M_rho`.  For `rho >= 0`
/// the result must be a Laurent polynomial with integer coefficients; a
/// violation signals a bug in the pipeline, not a mathematical failure.
pub fn e_count_nonorient(rho: i32, n: u32) -> Result<Rf> {
    let q = q_symbol();
    let binom = (n as i64) * (n as i64 - 1) / 2;
    let prefactor = Rf::from_poly(&Poly::monomial(&[q], q, rho as i64 * binom, Rat::one()));
    let value = prefactor.mul(&mcoeff(rho, n)?);
    if rho >= 0 {
        let ok = value.is_polynomial()
            && value.num().terms().all(|(_, c)| c.denom().is_one());
        if !ok {
            return Err(Error::IntegralityViolation(format!(
                "E(rho={}, n={}) = {}",
                rho, n, value
            )));
        }
    }
    Ok(value)
}

/// Every coefficient even (used for the observed mod-2 pattern).
pub fn all_coeffs_even(p: &Rf) -> bool {
    p.is_polynomial()
        && p.num()
            .terms()
            .all(|(_, c)| c.denom().is_one() && (c.numer() % 2i32).is_zero())
}

/// Counting data for a Frobenius-plus-inversion action: point counts of the
/// sigma-fixed locus, the twisted locus, and the moving locus, as
/// polynomials in `q`.
#[derive(Clone, Debug)]
pub struct GammaDatum {
    pub n1: Poly,
    pub n1_prime: Poly,
    pub n1_sharp: Poly,
}

impl GammaDatum {
    /// The multiplicative-group instance: 2 fixed points, `q - 1` twisted
    /// points, `q - 3` moving points.
    pub fn gm() -> GammaDatum {
        let q = q_symbol();
        GammaDatum {
            n1: Poly::int(&[q], 2),
            n1_prime: poly_from_coeffs(q, &[(1, 1), (0, -1)]),
            n1_sharp: poly_from_coeffs(q, &[(1, 1), (0, -3)]),
        }
    }
}

/// Orbit counts per Gamma-degree, as rational functions of `q`:
/// `n0[d] = N~_{(0,d)}`, `n1[r] = N~_{(r,2r)}`, `ninf[d] = N~_{(inf,d)}`,
/// `nsharp[d] = N~_d^#` (index 0 unused).
#[derive(Clone, Debug)]
pub struct OrbitCounts {
    pub n0: Vec<Rf>,
    pub n1: Vec<Rf>,
    pub ninf: Vec<Rf>,
    pub nsharp: Vec<Rf>,
}

/// Expand a datum through the Möbius formulas.
pub fn orbit_counts(datum: &GammaDatum, bound: u32) -> OrbitCounts {
    let ring = RfRing;
    let n1 = Rf::from_poly(&datum.n1);
    let n1p = Rf::from_poly(&datum.n1_prime);
    let n1s = Rf::from_poly(&datum.n1_sharp);
    let mut out = OrbitCounts {
        n0: vec![Rf::zero(); bound as usize + 1],
        n1: vec![Rf::zero(); bound as usize + 1],
        ninf: vec![Rf::zero(); bound as usize + 1],
        nsharp: vec![Rf::zero(); bound as usize + 1],
    };
    for d in 1..=bound {
        out.n0[d as usize] = moebius_resum(&ring, &n1, d);
        out.nsharp[d as usize] = moebius_resum(&ring, &n1s, d);
        // N~_{(r,2r)} = (1/2r) sum_{s | r, r/s odd} mu(r/s) N'_1(q^s)
        let mut acc = Rf::zero();
        for s in divisors(d) {
            if ((d / s) & 1) == 1 {
                let mu = moebius(d / s);
                if mu != 0 {
                    acc = acc.add(&n1p.adams(s).scale(&rat(mu)));
                }
            }
        }
        out.n1[d as usize] = acc.scale(&ratio(1, 2 * d as i64));
    }
    for d in 1..=bound as usize {
        let mut v = out.nsharp[d].scale(&ratio(1, 2));
        if d % 2 == 0 {
            v = v.sub(&out.n1[d / 2].scale(&ratio(1, 2)));
        }
        out.ninf[d] = v;
    }
    out
}

/// The orbit counts of the multiplicative-group action.
pub fn gamma_counts_gm(bound: u32) -> OrbitCounts {
    orbit_counts(&GammaDatum::gm(), bound)
}

/// The triple product
/// `prod_d Om0(q^d,T^d)^{N~_{(0,d)}} prod_r Om1(q^{2r},T^{2r})^{N~_{(r,2r)}}
///  prod_d Ominf(q^d,T^{2d})^{N~_{(inf,d)}}`
/// with binomial-series powers for the rational-function exponents.
pub fn triple_product(
    counts: &OrbitCounts,
    om0: &QSeries,
    om1: &QSeries,
    ominf: &QSeries,
    nmax: usize,
) -> Result<QSeries> {
    assert!(counts.n0.len() > nmax, "orbit counts must cover the cutoff");
    let mut out = QSeries::one(RfRing, nmax);
    for d in 1..=nmax {
        if !counts.n0[d].is_zero() {
            out = out.mul(&om0.truncate(nmax).stretch(d as u32, d).pow_frac(&counts.n0[d])?);
        }
    }
    for r in 1..=(nmax / 2) {
        if !counts.n1[r].is_zero() {
            let f = om1.truncate(nmax).stretch(2 * r as u32, 2 * r);
            out = out.mul(&f.pow_frac(&counts.n1[r])?);
        }
    }
    for d in 1..=(nmax / 2) {
        if !counts.ninf[d].is_zero() {
            let f = ominf.truncate(nmax).stretch(d as u32, 2 * d);
            out = out.mul(&f.pow_frac(&counts.ninf[d])?);
        }
    }
    Ok(out)
}

/// `M_rho` through the orbit-count product formula (independent of the `W`
/// route).
pub fn product_formula_m(rho: i32, nmax: usize) -> Result<QSeries> {
    let counts = gamma_counts_gm(nmax as u32);
    let z_rho = z_series(rho, nmax)?;
    let z_2rho = z_series(2 * rho, nmax)?;
    triple_product(&counts, &z_rho, &z_rho, &z_2rho, nmax)
}

/// Verify the three closed forms for the plethystic logs of the factors
/// `F_0, F_1, F_inf` of the triple product, for an arbitrary datum.
pub fn maintheo_check(
    datum: &GammaDatum,
    om0: &QSeries,
    om1: &QSeries,
    ominf: &QSeries,
    nmax: usize,
) -> Result<Report> {
    let mut report = Report::new("maintheo");
    let counts = orbit_counts(datum, nmax as u32);
    let one = QSeries::one(RfRing, nmax);

    // F0 against N1(q) Log(Om0)
    let mut f0 = one.clone();
    for d in 1..=nmax {
        if !counts.n0[d].is_zero() {
            f0 = f0.mul(&om0.truncate(nmax).stretch(d as u32, d).pow_frac(&counts.n0[d])?);
        }
    }
    let lhs0 = pleth_log(&f0)?;
    let rhs0 = pleth_log(&om0.truncate(nmax))?.scale_slice(&Rf::from_poly(&datum.n1));
    push_series_check(&mut report, "log_F0", &lhs0, &rhs0);

    // F1 against (ii)
    let mut f1 = one.clone();
    for r in 1..=(nmax / 2) {
        if !counts.n1[r].is_zero() {
            f1 = f1.mul(
                &om1.truncate(nmax)
                    .stretch(2 * r as u32, 2 * r)
                    .pow_frac(&counts.n1[r])?,
            );
        }
    }
    let lhs1 = pleth_log(&f1)?;
    let h1: Vec<Rf> = {
        let l = pleth_log(&om1.truncate(nmax))?;
        (0..=nmax).map(|n| l.coeff(n).clone()).collect()
    };
    let half_n1p = Rf::from_poly(&datum.n1_prime).scale(&ratio(1, 2));
    let mut rhs1 = QSeries::zero(RfRing, nmax);
    for m in 1..=(nmax / 2) {
        let mut acc = Rf::zero();
        for j in 0..=v2(m as u32) {
            let idx = m / (1usize << j);
            let term = h1[idx].adams(1 << (j + 1)).scale(&ratio(1, 1i64 << j));
            acc = acc.add(&term);
        }
        rhs1.set_slice(2 * m, half_n1p.mul(&acc));
    }
    push_series_check(&mut report, "log_F1", &lhs1, &rhs1);

    // Finf against (iii)
    let mut finf = one;
    for d in 1..=(nmax / 2) {
        if !counts.ninf[d].is_zero() {
            finf = finf.mul(
                &ominf
                    .truncate(nmax)
                    .stretch(d as u32, 2 * d)
                    .pow_frac(&counts.ninf[d])?,
            );
        }
    }
    let lhs_inf = pleth_log(&finf)?;
    let hinf: Vec<Rf> = {
        let l = pleth_log(&ominf.truncate(nmax))?;
        (0..=nmax).map(|n| l.coeff(n).clone()).collect()
    };
    let half_n1s = Rf::from_poly(&datum.n1_sharp).scale(&ratio(1, 2));
    let mut rhs_inf = QSeries::zero(RfRing, nmax);
    for m in 1..=(nmax / 2) {
        let mut acc = half_n1s.mul(&hinf[m]);
        for j in 1..=v2(m as u32) {
            let idx = m / (1usize << j);
            let term = hinf[idx].adams(1 << j).scale(&ratio(1, 1i64 << j));
            acc = acc.sub(&half_n1p.mul(&term));
        }
        rhs_inf.set_slice(2 * m, acc);
    }
    push_series_check(&mut report, "log_Finf", &lhs_inf, &rhs_inf);
    Ok(report)
}

fn push_series_check(report: &mut Report, name: impl Into<String>, lhs: &QSeries, rhs: &QSeries) {
    let name = name.into();
    let c = lhs.cutoff().min(rhs.cutoff());
    for n in 0..=c {
        if lhs.coeff(n) != rhs.coeff(n) {
            report.check(
                name,
                false,
                format!(
                    "first discrepancy at T^{}: {} vs {}",
                    n,
                    lhs.coeff(n),
                    rhs.coeff(n)
                ),
            );
            return;
        }
    }
    report.check(name, true, format!("equal to degree {}", c));
}

fn push_bi_check(report: &mut Report, name: &str, lhs: &BiSeries, rhs: &BiSeries) {
    let c = lhs.cutoff().min(rhs.cutoff());
    for n in 0..=c {
        for a in 0..=n {
            let (x, y) = (lhs.coeff_xy(a, n - a), rhs.coeff_xy(a, n - a));
            if x != y {
                report.check(
                    name,
                    false,
                    format!("first discrepancy at X^{}Y^{}: {} vs {}", a, n - a, x, y),
                );
                return;
            }
        }
    }
    report.check(name, true, format!("equal to total degree {}", c));
}

/// Flip `T -> -T` (negate odd slices).
pub fn sign_flip(f: &QSeries) -> QSeries {
    let mut out = f.clone();
    for n in (1..=f.cutoff()).step_by(2) {
        out.set_slice(n, f.coeff(n).neg());
    }
    out
}

fn rf_q(coeffs: &[(i64, i64)]) -> Rf {
    Rf::from_poly(&poly_from_coeffs(q_symbol(), coeffs))
}

fn q_frac(num: &[(i64, i64)], den_factors: &[&[(i64, i64)]]) -> Rf {
    let q = q_symbol();
    let mut den = Poly::one(&[q]);
    for f in den_factors {
        den = den.mul(&poly_from_coeffs(q, f));
    }
    Rf::new(poly_from_coeffs(q, num), den).expect("nonzero denominator")
}

/// Named closed-form identity checks.  Failures are reported with the first
/// discrepancy, never thrown.
pub fn verify_identity(name: &str, degree: usize) -> Result<Report> {
    match name {
        "i_log" => {
            let mut report = Report::new("i_log");
            let qm1 = rf_q(&[(1, 1), (0, -1)]);
            let lhs = pleth_log(&i_series(degree))?.scale_slice(&qm1);
            let mut rhs = QSeries::zero(RfRing, degree);
            rhs.set_slice(1, Rf::from_int(-2));
            rhs.set_slice(2, Rf::from_int(1));
            push_series_check(&mut report, "(q-1) Log I = -2T + T^2", &lhs, &rhs);
            Ok(report)
        }
        "i_star_log" => {
            let mut report = Report::new("i_star_log");
            let qm1 = {
                let mut s = BiSlice::new();
                s.insert((0, 0), rf_q(&[(1, 1), (0, -1)]));
                s
            };
            let lhs = pleth_log(&i_star_series(degree))?.scale_slice(&qm1);
            let mut rhs = BiSeries::zero(BiRing, degree);
            let mut s1 = BiSlice::new();
            s1.insert((1, 0), Rf::from_int(-1));
            s1.insert((0, 1), Rf::from_int(-1));
            rhs.set_slice(1, s1);
            let mut s2 = BiSlice::new();
            s2.insert((1, 1), Rf::from_int(1));
            rhs.set_slice(2, s2);
            push_bi_check(&mut report, "(q-1) Log I* = -X - Y + XY", &lhs, &rhs);
            Ok(report)
        }
        "i_star_product" => {
            let mut report = Report::new("i_star_product");
            // Euler expansions:  prod (1-q^n u)^{-1} = sum u^r/(q)_r  and
            // prod (1-q^n u) = sum (-1)^r q^{binom r 2} u^r/(q)_r
            let q = q_symbol();
            let euler_inv = |x: bool| -> BiSeries {
                let mut s = BiSeries::zero(BiRing, degree);
                for r in 0..=degree {
                    let mut slice = BiSlice::new();
                    let key = if x { (r, 0) } else { (0, r) };
                    slice.insert(key, Rf::new(Poly::one(&[q]), q_pochhammer(r as u32)).unwrap());
                    s.set_slice(r, slice);
                }
                s
            };
            let mut euler_xy = BiSeries::zero(BiRing, degree);
            for r in 0..=(degree / 2) {
                let mut slice = BiSlice::new();
                let sign = if r % 2 == 0 { 1 } else { -1 };
                let num = Poly::monomial(&[q], q, (r * (r.max(1) - 1) / 2) as i64, rat(sign));
                slice.insert((r, r), Rf::new(num, q_pochhammer(r as u32)).unwrap());
                euler_xy.set_slice(2 * r, slice);
            }
            let rhs = euler_xy.mul(&euler_inv(true)).mul(&euler_inv(false));
            let lhs = i_star_series(degree);
            push_bi_check(
                &mut report,
                "I* = prod (1-q^n XY)/((1-q^n X)(1-q^n Y))",
                &lhs,
                &rhs,
            );
            Ok(report)
        }
        "z_minus1" => {
            let mut report = Report::new("z_minus1");
            let lhs = pleth_log(&z_series(-1, degree)?)?;
            let mut rhs = QSeries::zero(RfRing, degree);
            rhs.set_slice(1, q_frac(&[(0, 1)], &[&[(1, 1), (0, -1)]]));
            rhs.set_slice(
                2,
                q_frac(&[(0, 1)], &[&[(2, 1), (0, -1)], &[(1, 1), (0, -1)]]),
            );
            push_series_check(
                &mut report,
                "Log Z_-1 = T/(q-1) + T^2/((q^2-1)(q-1)), rest 0",
                &lhs,
                &rhs,
            );
            Ok(report)
        }
        "m_minus1" => {
            let mut report = Report::new("m_minus1");
            let mut rhs = QSeries::zero(RfRing, degree);
            rhs.set_slice(1, q_frac(&[(0, 2)], &[&[(1, 1), (0, -1)]]));
            rhs.set_slice(2, q_frac(&[(0, 1)], &[&[(1, 1), (0, 1)]]));
            // via the W pipeline
            let m = m_series(-1, degree)?;
            push_series_check(&mut report, "Log M_-1 (W route)", &pleth_log(&m)?, &rhs);
            // via the involution series with T -> -T
            let flipped = sign_flip(&i_series(degree));
            push_series_check(
                &mut report,
                "Log I(q,-T) (involution route)",
                &pleth_log(&flipped)?,
                &rhs,
            );
            push_series_check(&mut report, "M_-1 = I(q,-T)", &m, &flipped);
            Ok(report)
        }
        "m0_product" => {
            let mut report = Report::new("m0_product");
            let lhs = m_series(0, degree)?;
            let mut rhs = QSeries::one(RfRing, degree);
            let mut n = 1usize;
            while 2 * n - 1 <= degree {
                rhs = rhs.mul(&geometric(&Rf::one(), 2 * n - 1, degree).pow_int(2));
                if 2 * n <= degree {
                    rhs = rhs.mul(&geometric(&rf_q(&[(1, 1)]), 2 * n, degree));
                }
                n += 1;
            }
            push_series_check(
                &mut report,
                "M_0 = prod (1-T^{2n-1})^{-2} (1-qT^{2n})^{-1}",
                &lhs,
                &rhs,
            );
            Ok(report)
        }
        "m_product" => {
            let mut report = Report::new("m_product");
            for rho in [-1, 0, 1, 2] {
                let a = m_series(rho, degree)?;
                let b = product_formula_m(rho, degree)?;
                push_series_check(
                    &mut report,
                    format!("M_{} = triple product", rho),
                    &a,
                    &b,
                );
            }
            Ok(report)
        }
        "leading_table" => {
            let mut report = Report::new("leading_table");
            let expected: [[i64; 5]; 5] = [
                [2, 1, 2, 1, 2],
                [2, 1, 2, 1, 2],
                [2, 3, 2, 2, 2],
                [2, 2, 2, 2, 2],
                [2, 2, 2, 2, 2],
            ];
            let table = leading_coeff_table(5, 5)?;
            for (r, row) in expected.iter().enumerate() {
                let got: Vec<String> = table[r].iter().map(|c| c.to_string()).collect();
                let ok = row
                    .iter()
                    .zip(&table[r])
                    .all(|(&want, have)| have == &rat(want));
                report.check(
                    format!("leading coefficients of |U_{}|, n = 1..5", r + 1),
                    ok,
                    got.join(", "),
                );
            }
            Ok(report)
        }
        _ => Err(Error::RangeError(format!("unknown identity {:?}", name))),
    }
}

/// Leading coefficients of `|U_r(F_q)| = E(rho, n) |GL_n(F_q)|` for
/// `r = 1..=rmax`, `n = 1..=nmax`.
pub fn leading_coeff_table(rmax: u32, nmax: u32) -> Result<Vec<Vec<Rat>>> {
    let mut table = Vec::new();
    for r in 1..=rmax {
        let mut row = Vec::new();
        for n in 1..=nmax {
            let e = e_count_nonorient(r as i32 - 2, n)?;
            let u = e.mul(&Rf::from_poly(&gl_order(n)));
            if !u.is_polynomial() {
                return Err(Error::IntegralityViolation(format!(
                    "|U_{}| for n = {} is not polynomial: {}",
                    r, n, u
                )));
            }
            row.push(u.num().leading_coeff());
        }
        table.push(row);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_binomials() {
        let q = q_symbol();
        assert_eq!(q_binomial(2, 1).unwrap(), poly_from_coeffs(q, &[(1, 1), (0, 1)]));
        assert_eq!(
            q_binomial(4, 2).unwrap(),
            poly_from_coeffs(q, &[(4, 1), (3, 1), (2, 2), (1, 1), (0, 1)])
        );
        assert_eq!(q_binomial(5, 0).unwrap(), Poly::one(&[q]));
        assert!(q_binomial(2, 3).is_err());
    }

    #[test]
    fn involution_polynomials() {
        assert_eq!(involution_count(0).to_string(), "1");
        assert_eq!(involution_count(1).to_string(), "2");
        assert_eq!(involution_count(2).to_string(), "q^2 + q + 2");
        assert_eq!(involution_count(3).to_string(), "2*q^4 + 2*q^3 + 2*q^2 + 2");
        // non-negative coefficients, and even for odd n
        for n in 0..=7u32 {
            let p = involution_count(n);
            assert!(p.terms().all(|(_, c)| c > &Rat::zero()));
            if n % 2 == 1 {
                assert!(p.terms().all(|(_, c)| (c.numer() % 2i32).is_zero()), "n={}", n);
            }
        }
    }

    #[test]
    fn i_series_is_diagonal_of_i_star() {
        let n = 6;
        let i = i_series(n);
        let istar = i_star_series(n);
        for d in 0..=n {
            let mut acc = Rf::zero();
            for a in 0..=d {
                acc = acc.add(&istar.coeff_xy(a, d - a));
            }
            assert_eq!(&acc, i.coeff(d), "degree {}", d);
        }
        // I*(q, X, 0) is the Euler series
        for r in 0..=n {
            assert_eq!(
                istar.coeff_xy(r, 0),
                Rf::new(Poly::one(&[]), q_pochhammer(r as u32)).unwrap()
            );
        }
    }

    #[test]
    fn z_series_small_coefficients() {
        // rho = 0: partition-count coefficients
        let z0 = z_series(0, 6).unwrap();
        for (n, p) in [1usize, 1, 2, 3, 5, 7, 11].iter().enumerate() {
            assert_eq!(z0.coeff(n), &Rf::from_int(*p as i64));
        }
        // rho = 1, T^2 coefficient: (q^2-1)^2/q
        let z1 = z_series(1, 2).unwrap();
        let expect = q_frac(&[(4, 1), (2, -2), (0, 1)], &[&[(1, 1)]]);
        assert_eq!(z1.coeff(2), &expect);
    }

    #[test]
    fn v_and_w_examples() {
        // V_{0,n} = 1
        let v0 = v_coeffs(0, 8).unwrap();
        for n in 1..=8 {
            assert_eq!(v0[n], Rf::one(), "V_0,{}", n);
        }
        // V_{-1,1} = 1/(q-1), V_{-1,2} = 1/((q^2-1)(q-1))
        let vm1 = v_coeffs(-1, 6).unwrap();
        assert_eq!(vm1[1], q_frac(&[(0, 1)], &[&[(1, 1), (0, -1)]]));
        assert_eq!(
            vm1[2],
            q_frac(&[(0, 1)], &[&[(2, 1), (0, -1)], &[(1, 1), (0, -1)]])
        );
        // V_{0,2,2} = 3/2
        assert_eq!(v_coeff_k(2, 2, &v0), Rf::from_rat(ratio(3, 2)));

        // W_{0,n} = 2, q, 2, q, ...
        let w0 = w_coeffs(0, 6).unwrap();
        for n in 1..=6 {
            let expect = if n % 2 == 1 {
                Rf::from_int(2)
            } else {
                rf_q(&[(1, 1)])
            };
            assert_eq!(w0[n], expect, "W_0,{}", n);
        }
        // W_{-1,1} = 2/(q-1), W_{-1,2} = 1/(q+1)
        let wm1 = w_coeffs(-1, 2).unwrap();
        assert_eq!(wm1[1], q_frac(&[(0, 2)], &[&[(1, 1), (0, -1)]]));
        assert_eq!(wm1[2], q_frac(&[(0, 1)], &[&[(1, 1), (0, 1)]]));
        // W_{1,1} = 2(q-1)
        let w1 = w_coeffs(1, 1).unwrap();
        assert_eq!(w1[1], rf_q(&[(1, 2), (0, -2)]));
    }

    #[test]
    fn e_counts_match_printed_values() {
        assert_eq!(e_count_nonorient(1, 1).unwrap().to_string(), "2*q - 2");
        assert_eq!(
            e_count_nonorient(1, 2).unwrap().to_string(),
            "3*q^4 - 2*q^3 - 3*q^2 + 2"
        );
        assert_eq!(
            e_count_nonorient(1, 3).unwrap().to_string(),
            "2*q^9 - 2*q^8 + 4*q^7 - 12*q^6 + 10*q^5 - 6*q^4 + 6*q^3 - 2*q^2 + 2*q - 2"
        );
        // rho = 0 series start
        let m0 = m_series(0, 4).unwrap();
        assert_eq!(m0.coeff(0), &Rf::one());
        assert_eq!(m0.coeff(1), &Rf::from_int(2));
        assert_eq!(m0.coeff(2), &rf_q(&[(1, 1), (0, 3)]));
        assert_eq!(m0.coeff(3), &rf_q(&[(1, 2), (0, 6)]));
        assert_eq!(m0.coeff(4), &rf_q(&[(2, 1), (1, 4), (0, 9)]));
        // rho = -1, n = 2 at q = 3: I_2(3)/|GL_2(F_3)| = 14/48
        let e = e_count_nonorient(-1, 2).unwrap();
        let v = e.eval(&[(q_symbol(), rat(3))]).unwrap();
        assert_eq!(v, ratio(7, 24));
    }

    #[test]
    fn gm_orbit_count_values() {
        let c = gamma_counts_gm(4);
        assert_eq!(c.n0[1], Rf::from_int(2));
        for d in 2..=4 {
            assert!(c.n0[d].is_zero(), "N0 at {}", d);
        }
        // N~_(1,2) = (q-1)/2
        assert_eq!(c.n1[1], rf_q(&[(1, 1), (0, -1)]).scale(&ratio(1, 2)));
        // N~_1^# = q-3, N~_(inf,1) = (q-3)/2
        assert_eq!(c.nsharp[1], rf_q(&[(1, 1), (0, -3)]));
        assert_eq!(c.ninf[1], rf_q(&[(1, 1), (0, -3)]).scale(&ratio(1, 2)));
        // integrality at admissible prime powers
        for d in 1..=4usize {
            for qv in [3i64, 5, 7, 9] {
                for fam in [&c.n0, &c.n1, &c.ninf, &c.nsharp] {
                    let v = fam[d].eval(&[(q_symbol(), rat(qv))]).unwrap();
                    assert!(v.denom().is_one(), "non-integer orbit count at q={}", qv);
                    assert!(v >= Rat::zero());
                }
            }
        }
    }

    #[test]
    fn identity_reports_pass() {
        for name in ["i_log", "z_minus1", "m_minus1", "m0_product"] {
            let r = verify_identity(name, 8).unwrap();
            assert!(r.passed(), "{}:\n{}", name, r.render_text());
        }
    }

    #[test]
    fn product_formula_matches_w_route() {
        for rho in [-1, 0, 1] {
            let a = m_series(rho, 4).unwrap();
            let b = product_formula_m(rho, 4).unwrap();
            assert_eq!(a, b, "rho = {}", rho);
        }
    }

    #[test]
    fn maintheo_with_vanishing_twisted_locus() {
        // N'_1 = 0: the F_1 factor is an empty product and the closed form
        // for its log reduces to the empty sum
        let q = q_symbol();
        let datum = GammaDatum {
            n1: Poly::int(&[q], 2),
            n1_prime: Poly::zero(&[q]),
            n1_sharp: poly_from_coeffs(q, &[(1, 1), (0, -1)]),
        };
        let om = z_series(0, 6).unwrap();
        let report = maintheo_check(&datum, &om, &om, &om, 6).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn series_coefficient_substitution() {
        // I(q, T) specialized at q = 3: coefficient of T^2 is I_2(3)/(3)_2
        let i = i_series(2).substitute_coeffs(&[(q_symbol(), Poly::int(&[], 3))]).unwrap();
        assert_eq!(i.coeff(2), &Rf::from_rat(ratio(14, (1 - 3) * (1 - 9))));
    }
}
