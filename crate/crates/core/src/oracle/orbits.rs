//! Orbits of Frobenius-plus-inversion actions.
//!
//! The group `Z x Z/2` acts through an automorphism `F` of finite orbits
//! and a commuting involution `sigma`.  For `x` of `F`-orbit size `d`, the
//! orbit kind is `(0, d)` when `x` is `sigma`-fixed, `(r, 2r)` when
//! `F^r x = sigma(x)` first happens at `r = d/2`, and `(inf, d)` when the
//! `sigma`-orbit is disjoint (the full orbit has size `2d`).  Counts are
//! compared against the Möbius formulas expanded from the fixed-point data.

use super::field::FiniteField;
use super::FIELD_BUDGET;
use crate::plethysm::{divisors, moebius};
use crate::report::Report;
use crate::{Error, Result};

/// A finite set with commuting permutation `f` and involution `sigma`.
#[derive(Clone, Debug)]
pub struct FInvAction {
    pub f: Vec<usize>,
    pub sigma: Vec<usize>,
}

impl FInvAction {
    pub fn new(f: Vec<usize>, sigma: Vec<usize>) -> Result<FInvAction> {
        let n = f.len();
        if sigma.len() != n {
            return Err(Error::RangeError("table sizes differ".into()));
        }
        if n > 100_000 {
            return Err(Error::BudgetExceeded(format!("set of size {}", n)));
        }
        for x in 0..n {
            if f[x] >= n || sigma[x] >= n {
                return Err(Error::RangeError("table entry out of range".into()));
            }
            if sigma[sigma[x]] != x {
                return Err(Error::RangeError("sigma is not an involution".into()));
            }
        }
        for x in 0..n {
            if sigma[f[x]] != f[sigma[x]] {
                return Err(Error::RangeError("sigma and F do not commute".into()));
            }
        }
        Ok(FInvAction { f, sigma })
    }

}

/// Orbit counts per kind, indexed by `d` (resp. `r`); index 0 unused.
#[derive(Clone, Debug, Default)]
pub struct GammaOrbitCounts {
    pub n0: Vec<i64>,
    pub n1: Vec<i64>,
    pub ninf: Vec<i64>,
    /// `F`-orbits of non-fixed points, by size (the `#` family).
    pub nsharp: Vec<i64>,
}

/// Classify every orbit of the action directly.
pub fn classify_orbits(action: &FInvAction) -> GammaOrbitCounts {
    let n = action.f.len();
    let dmax = n.max(1);
    let mut counts = GammaOrbitCounts {
        n0: vec![0; dmax + 1],
        n1: vec![0; dmax + 1],
        ninf: vec![0; dmax + 1],
        nsharp: vec![0; dmax + 1],
    };
    let mut seen = vec![false; n];
    for x in 0..n {
        if seen[x] {
            continue;
        }
        // walk the F-orbit of x
        let mut orbit = vec![x];
        let mut y = action.f[x];
        while y != x {
            orbit.push(y);
            y = action.f[y];
        }
        for &z in &orbit {
            seen[z] = true;
        }
        let d = orbit.len();
        if action.sigma[x] == x {
            counts.n0[d] += 1;
            continue;
        }
        counts.nsharp[d] += 1;
        // minimal r with F^r x = sigma x, if any
        if let Some(r) = orbit.iter().position(|&z| z == action.sigma[x]) {
            debug_assert_eq!(2 * r, d, "twisted orbits pair up to size 2r");
            counts.n1[r] += 1;
        } else {
            // mark the sigma-image orbit too; keep one Gamma-orbit
            let sx = action.sigma[x];
            let mut z = sx;
            loop {
                seen[z] = true;
                z = action.f[z];
                if z == sx {
                    break;
                }
            }
            counts.nsharp[d] += 1;
            counts.ninf[d] += 1;
        }
    }
    counts
}

/// Fixed-point counts scanned from the tables:
/// `N_d = #{x sigma-fixed, F^d x = x}`, `N'_r = #{x not fixed, F^r x = sigma x}`,
/// `N_d^# = #{x not fixed, F^d x = x}`.
fn fixed_point_data(action: &FInvAction, dmax: usize) -> (Vec<i64>, Vec<i64>, Vec<i64>) {
    let n = action.f.len();
    let mut nd = vec![0i64; dmax + 1];
    let mut npr = vec![0i64; dmax + 1];
    let mut nsh = vec![0i64; dmax + 1];
    for x in 0..n {
        let fixed = action.sigma[x] == x;
        // iterate F^j x
        let mut y = x;
        for j in 1..=dmax {
            y = action.f[y];
            if y == x {
                if fixed {
                    nd[j] += 1;
                } else {
                    nsh[j] += 1;
                }
            }
            if !fixed && y == action.sigma[x] {
                npr[j] += 1;
            }
        }
    }
    (nd, npr, nsh)
}

/// Compare direct orbit counts with the Möbius formulas.
pub fn orbit_prop_oracle(action: &FInvAction) -> Result<Report> {
    let mut report = Report::new("orbit_prop_oracle");
    let direct = classify_orbits(action);
    let dmax = direct.n0.len() - 1;
    let (nd, npr, nsh) = fixed_point_data(action, dmax);

    for d in 1..=dmax {
        // N~_(0,d) = (1/d) sum_{r | d} mu(d/r) N_r
        let mut acc = 0i64;
        for r in divisors(d as u32) {
            acc += moebius(d as u32 / r) * nd[r as usize];
        }
        let formula = acc / d as i64;
        debug_assert_eq!(acc % d as i64, 0);
        report.check(
            format!("kind (0,{})", d),
            formula == direct.n0[d],
            format!("formula {} vs direct {}", formula, direct.n0[d]),
        );

        // N~_d^# = (1/d) sum_{e | d} mu(d/e) N_e^#
        let mut acc = 0i64;
        for e in divisors(d as u32) {
            acc += moebius(d as u32 / e) * nsh[e as usize];
        }
        let sharp_formula = acc / d as i64;
        report.check(
            format!("sharp orbits of size {}", d),
            sharp_formula == direct.nsharp[d],
            format!("formula {} vs direct {}", sharp_formula, direct.nsharp[d]),
        );

        // N~_(r,2r) = (1/2r) sum_{s | r, r/s odd} mu(r/s) N'_s
        let r = d;
        let mut acc = 0i64;
        for s in divisors(r as u32) {
            if (r as u32 / s) % 2 == 1 {
                acc += moebius(r as u32 / s) * npr[s as usize];
            }
        }
        let formula = acc / (2 * r as i64);
        report.check(
            format!("kind ({},{})", r, 2 * r),
            formula == direct.n1[r],
            format!("formula {} vs direct {}", formula, direct.n1[r]),
        );

        // N~_(inf,d) = N~_d^#/2 - [d even] N~_(d/2,d)/2
        let half_twisted = if d % 2 == 0 { direct.n1[d / 2] } else { 0 };
        let formula = (sharp_formula - half_twisted) / 2;
        report.check(
            format!("kind (inf,{})", d),
            formula == direct.ninf[d],
            format!("formula {} vs direct {}", formula, direct.ninf[d]),
        );
    }
    Ok(report)
}

/// The multiplicative group `F_{q^d}^x` with Frobenius `x -> x^q` and
/// inversion, realized on discrete logarithms.
pub fn unit_group_action(q: u64, d: u32) -> Result<FInvAction> {
    let base = FiniteField::of_order(q)?;
    let qd = q.checked_pow(d).filter(|&v| v <= FIELD_BUDGET).ok_or_else(|| {
        Error::BudgetExceeded(format!("{}^{} exceeds the field budget", q, d))
    })?;
    // verify the extension field exists and is cyclic (constructs tables)
    let ext = FiniteField::new(base.p, base.e * d)?;
    debug_assert_eq!(ext.q, qd);
    let m = (qd - 1) as usize;
    let f: Vec<usize> = (0..m).map(|i| i * q as usize % m).collect();
    let sigma: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
    FInvAction::new(f, sigma)
}

/// Roots of unity `mu_m` inside an algebraic closure of `F_p`, with
/// Frobenius `x -> x^p` and inversion (`gcd(m, p) = 1` required).
pub fn mu_m_action(m: usize, p: u64) -> Result<FInvAction> {
    if m == 0 || (m as u64) % p == 0 {
        return Err(Error::RangeError(format!(
            "mu_{} is not etale in characteristic {}",
            m, p
        )));
    }
    let f: Vec<usize> = (0..m).map(|i| i * p as usize % m).collect();
    let sigma: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
    FInvAction::new(f, sigma)
}

/// Enumerate `F_{q^d}` for `d <= dmax` and classify every orbit whose
/// `F`-orbit size is exactly `d`, producing integer counts comparable with
/// the polynomial formulas.
pub fn gamma_orbit_oracle(q: u64, dmax: u32) -> Result<GammaOrbitCounts> {
    if q.checked_pow(dmax).map(|v| v > FIELD_BUDGET).unwrap_or(true) {
        return Err(Error::BudgetExceeded(format!(
            "{}^{} exceeds the field budget",
            q, dmax
        )));
    }
    let mut out = GammaOrbitCounts {
        n0: vec![0; dmax as usize + 1],
        n1: vec![0; dmax as usize + 1],
        ninf: vec![0; dmax as usize + 1],
        nsharp: vec![0; dmax as usize + 1],
    };
    for d in 1..=dmax {
        let action = unit_group_action(q, d)?;
        let counts = classify_orbits(&action);
        // keep only orbits of F-degree exactly d (smaller degrees belong to
        // subfields and are counted at their own level)
        let exact = d as usize;
        let pick = |v: &Vec<i64>, idx: usize| if idx < v.len() { v[idx] } else { 0 };
        out.n0[exact] = pick(&counts.n0, exact);
        out.nsharp[exact] = pick(&counts.nsharp, exact);
        out.ninf[exact] = pick(&counts.ninf, exact);
        if d % 2 == 0 {
            out.n1[exact / 2] = pick(&counts.n1, exact / 2);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f5_orbit_landscape() {
        // q = 5, considering F_25: kinds (0,1): {1}, {-1}; (1,2): 2 orbits;
        // (inf,1): one orbit {2,3}
        let counts = gamma_orbit_oracle(5, 2).unwrap();
        assert_eq!(counts.n0[1], 2);
        assert_eq!(counts.ninf[1], 1);
        assert_eq!(counts.n1[1], 2);
        assert_eq!(counts.nsharp[1], 2); // {2,3} is two F-orbits of size 1
    }

    #[test]
    fn boundary_q3_has_no_free_orbits_at_level_1() {
        let counts = gamma_orbit_oracle(3, 1).unwrap();
        assert_eq!(counts.n0[1], 2);
        assert_eq!(counts.ninf[1], 0); // (3-3)/2
    }

    #[test]
    fn orbit_formulas_on_f25() {
        let action = unit_group_action(5, 2).unwrap();
        let report = orbit_prop_oracle(&action).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn orbit_formulas_on_mu12() {
        let action = mu_m_action(12, 5).unwrap();
        let report = orbit_prop_oracle(&action).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn orbit_formulas_with_trivial_sigma() {
        // sigma = id: kinds (ii), (iii) empty, (i) is plain orbit counting
        let f: Vec<usize> = (0..12).map(|i| (i + 1) % 12).collect();
        let sigma: Vec<usize> = (0..12).collect();
        let action = FInvAction::new(f, sigma).unwrap();
        let counts = classify_orbits(&action);
        assert_eq!(counts.n0[12], 1);
        assert_eq!(counts.n1.iter().sum::<i64>(), 0);
        assert_eq!(counts.ninf.iter().sum::<i64>(), 0);
        let report = orbit_prop_oracle(&action).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }
}
