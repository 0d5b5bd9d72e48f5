//! Truncated graded series over a coefficient domain.
//!
//! A [`Series`] stores homogeneous slices of degree `0..=cutoff`.  The slice
//! type is abstracted by [`GradedRing`] so the same Log/Exp machinery serves
//! series with rational-function coefficients, bivariate `(X, Y)` series
//! graded by total degree, and symmetric-function-valued series.  Mixing two
//! series takes the minimum cutoff; no operation ever reports a coefficient
//! beyond its cutoff.

use crate::ratfun::Rf;
use crate::{ratio, Error, Rat, Result};

/// Default truncation order; callers may pass any other cutoff.
pub const DEFAULT_CUTOFF: usize = 8;
use std::collections::BTreeMap;

/// Homogeneous-slice arithmetic for one coefficient domain.
///
/// `mul` is degree-additive, `adams(d, _)` applies the domain's `d`-th Adams
/// endomorphism to a slice (the caller relocates it to degree `d * n`).
pub trait GradedRing: Clone {
    type Slice: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Slice;
    fn one(&self) -> Self::Slice;
    fn is_zero(&self, s: &Self::Slice) -> bool;
    fn add(&self, a: &Self::Slice, b: &Self::Slice) -> Self::Slice;
    fn neg(&self, a: &Self::Slice) -> Self::Slice;
    fn mul(&self, a: &Self::Slice, b: &Self::Slice) -> Self::Slice;
    fn scale(&self, c: &Rat, a: &Self::Slice) -> Self::Slice;
    fn adams(&self, d: u32, a: &Self::Slice) -> Self::Slice;
    /// Inverse of a degree-0 slice, when the domain supports it.
    fn inv(&self, _a: &Self::Slice) -> Option<Self::Slice> {
        None
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Series<R: GradedRing> {
    ring: R,
    slices: Vec<R::Slice>,
}

impl<R: GradedRing> Series<R> {
    pub fn zero(ring: R, cutoff: usize) -> Self {
        let slices = (0..=cutoff).map(|_| ring.zero()).collect();
        Series { ring, slices }
    }

    pub fn one(ring: R, cutoff: usize) -> Self {
        let mut s = Series::zero(ring, cutoff);
        s.slices[0] = s.ring.one();
        s
    }

    pub fn from_slices(ring: R, slices: Vec<R::Slice>) -> Self {
        assert!(!slices.is_empty());
        Series { ring, slices }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn cutoff(&self) -> usize {
        self.slices.len() - 1
    }

    pub fn slice(&self, n: usize) -> &R::Slice {
        &self.slices[n]
    }

    pub fn set_slice(&mut self, n: usize, s: R::Slice) {
        self.slices[n] = s;
    }

    pub fn truncate(&self, cutoff: usize) -> Self {
        let c = cutoff.min(self.cutoff());
        Series {
            ring: self.ring.clone(),
            slices: self.slices[..=c].to_vec(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.slices[0] == self.ring.one()
            && self.slices[1..].iter().all(|s| self.ring.is_zero(s))
    }

    pub fn add(&self, other: &Self) -> Self {
        let c = self.cutoff().min(other.cutoff());
        let slices = (0..=c)
            .map(|n| self.ring.add(&self.slices[n], &other.slices[n]))
            .collect();
        Series {
            ring: self.ring.clone(),
            slices,
        }
    }

    pub fn neg(&self) -> Self {
        Series {
            ring: self.ring.clone(),
            slices: self.slices.iter().map(|s| self.ring.neg(s)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let c = self.cutoff().min(other.cutoff());
        let mut slices = vec![self.ring.zero(); c + 1];
        for i in 0..=c {
            if self.ring.is_zero(&self.slices[i]) {
                continue;
            }
            for j in 0..=(c - i) {
                if self.ring.is_zero(&other.slices[j]) {
                    continue;
                }
                let t = self.ring.mul(&self.slices[i], &other.slices[j]);
                slices[i + j] = self.ring.add(&slices[i + j], &t);
            }
        }
        Series {
            ring: self.ring.clone(),
            slices,
        }
    }

    /// Multiply every slice by a fixed degree-0 slice.
    pub fn scale_slice(&self, c: &R::Slice) -> Self {
        Series {
            ring: self.ring.clone(),
            slices: self.slices.iter().map(|s| self.ring.mul(c, s)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Series {
            ring: self.ring.clone(),
            slices: self.slices.iter().map(|s| self.ring.scale(c, s)).collect(),
        }
    }

    pub fn pow_int(&self, e: u32) -> Self {
        let mut out = Series::one(self.ring.clone(), self.cutoff());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Multiplicative inverse; requires an invertible constant slice.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self
            .ring
            .inv(&self.slices[0])
            .ok_or(Error::InverseOfNonUnit)?;
        let c = self.cutoff();
        let mut inv = vec![self.ring.zero(); c + 1];
        inv[0] = c0.clone();
        for n in 1..=c {
            // f * f^{-1} = 1  =>  sum_{j=0}^{n} f_j inv_{n-j} = 0
            let mut acc = self.ring.zero();
            for j in 1..=n {
                let t = self.ring.mul(&self.slices[j], &inv[n - j]);
                acc = self.ring.add(&acc, &t);
            }
            inv[n] = self.ring.neg(&self.ring.mul(&c0, &acc));
        }
        Ok(Series {
            ring: self.ring.clone(),
            slices: inv,
        })
    }

    /// Ordinary series logarithm; requires constant slice exactly 1.
    pub fn log(&self) -> Result<Self> {
        if self.slices[0] != self.ring.one() {
            return Err(Error::LogOfNonUnit(format!("{:?}", self.slices[0])));
        }
        let c = self.cutoff();
        let mut l = vec![self.ring.zero(); c + 1];
        for n in 1..=c {
            // L_n = f_n - (1/n) sum_{j=1}^{n-1} j L_j f_{n-j}
            let mut acc = self.ring.zero();
            for j in 1..n {
                if self.ring.is_zero(&l[j]) || self.ring.is_zero(&self.slices[n - j]) {
                    continue;
                }
                let t = self.ring.mul(&l[j], &self.slices[n - j]);
                acc = self.ring.add(&acc, &self.ring.scale(&crate::rat(j as i64), &t));
            }
            let corr = self.ring.scale(&ratio(-1, n as i64), &acc);
            l[n] = self.ring.add(&self.slices[n], &corr);
        }
        Ok(Series {
            ring: self.ring.clone(),
            slices: l,
        })
    }

    /// Ordinary series exponential; requires constant slice exactly 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.ring.is_zero(&self.slices[0]) {
            return Err(Error::ExpOfNonzeroConstant(format!("{:?}", self.slices[0])));
        }
        let c = self.cutoff();
        let mut e = vec![self.ring.zero(); c + 1];
        e[0] = self.ring.one();
        for n in 1..=c {
            // E_n = (1/n) sum_{j=1}^{n} j g_j E_{n-j}
            let mut acc = self.ring.zero();
            for j in 1..=n {
                if self.ring.is_zero(&self.slices[j]) || self.ring.is_zero(&e[n - j]) {
                    continue;
                }
                let t = self.ring.mul(&self.slices[j], &e[n - j]);
                acc = self.ring.add(&acc, &self.ring.scale(&crate::rat(j as i64), &t));
            }
            e[n] = self.ring.scale(&ratio(1, n as i64), &acc);
        }
        Ok(Series {
            ring: self.ring.clone(),
            slices: e,
        })
    }

    /// Adams operation: coefficients through `psi_d`, degree `n -> d*n`,
    /// degrees beyond the cutoff dropped.
    pub fn adams(&self, d: u32) -> Self {
        self.stretch(d, d as usize)
    }

    /// Coefficient Adams power `d` together with degree multiplier `s`
    /// (e.g. `Omega(q^d, T^{2d})` is `stretch(d, 2d)`).
    pub fn stretch(&self, d: u32, s: usize) -> Self {
        assert!(s >= 1);
        let c = self.cutoff();
        let mut slices = vec![self.ring.zero(); c + 1];
        for n in 0..=c {
            if n * s > c {
                break;
            }
            if self.ring.is_zero(&self.slices[n]) {
                continue;
            }
            slices[n * s] = self.ring.adams(d, &self.slices[n]);
        }
        Series {
            ring: self.ring.clone(),
            slices,
        }
    }

    /// Formal power with an arbitrary degree-0 exponent: `exp(c * log f)`
    /// (the binomial series when `c` is a scalar).
    pub fn pow_frac(&self, c: &R::Slice) -> Result<Self> {
        Ok(self.log()?.scale_slice(c).exp()?)
    }
}

/// Coefficient domain: rational functions with the Adams action that raises
/// every variable to the `n`-th power.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RfRing;

impl GradedRing for RfRing {
    type Slice = Rf;

    fn zero(&self) -> Rf {
        Rf::zero()
    }
    fn one(&self) -> Rf {
        Rf::one()
    }
    fn is_zero(&self, s: &Rf) -> bool {
        s.is_zero()
    }
    fn add(&self, a: &Rf, b: &Rf) -> Rf {
        a.add(b)
    }
    fn neg(&self, a: &Rf) -> Rf {
        a.neg()
    }
    fn mul(&self, a: &Rf, b: &Rf) -> Rf {
        a.mul(b)
    }
    fn scale(&self, c: &Rat, a: &Rf) -> Rf {
        a.scale(c)
    }
    fn adams(&self, d: u32, a: &Rf) -> Rf {
        a.adams(d)
    }
    fn inv(&self, a: &Rf) -> Option<Rf> {
        a.inv().ok()
    }
}

/// Series in one grading variable with `Rf` coefficients.
pub type QSeries = Series<RfRing>;

impl QSeries {
    pub fn from_coeffs(coeffs: Vec<Rf>) -> QSeries {
        Series::from_slices(RfRing, coeffs)
    }

    pub fn coeff(&self, n: usize) -> &Rf {
        self.slice(n)
    }

    /// Substitute into every coefficient (the grading variable is not
    /// substitutable).
    pub fn substitute_coeffs(
        &self,
        map: &[(crate::symbol::Symbol, crate::poly::Poly)],
    ) -> Result<QSeries> {
        let mut slices = Vec::with_capacity(self.cutoff() + 1);
        for n in 0..=self.cutoff() {
            slices.push(self.slice(n).substitute(map)?);
        }
        Ok(Series::from_slices(RfRing, slices))
    }

    /// Render with a given grading-variable name, low degrees first.
    pub fn render(&self, t: &str) -> String {
        let mut parts = Vec::new();
        for n in 0..=self.cutoff() {
            let c = self.slice(n);
            if c.is_zero() {
                continue;
            }
            let var = match n {
                0 => String::new(),
                1 => format!("*{}", t),
                _ => format!("*{}^{}", t, n),
            };
            let cs = if c.is_constant() || (c.is_polynomial() && c.num().num_terms() == 1) {
                format!("{}", c)
            } else {
                format!("({})", c)
            };
            parts.push(format!("{}{}", cs, var));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Homogeneous component of a series in two grading variables: a map from
/// exponent pairs `(a, b)` with `a + b = n` to coefficients.
pub type BiSlice = BTreeMap<(usize, usize), Rf>;

/// Bivariate series graded by total degree; the Adams action raises the
/// coefficient variables and both grading variables to the `n`-th power.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiRing;

impl GradedRing for BiRing {
    type Slice = BiSlice;

    fn zero(&self) -> BiSlice {
        BTreeMap::new()
    }
    fn one(&self) -> BiSlice {
        let mut m = BTreeMap::new();
        m.insert((0, 0), Rf::one());
        m
    }
    fn is_zero(&self, s: &BiSlice) -> bool {
        s.values().all(|c| c.is_zero())
    }
    fn add(&self, a: &BiSlice, b: &BiSlice) -> BiSlice {
        let mut out = a.clone();
        for (k, c) in b {
            let e = out.entry(*k).or_insert_with(Rf::zero);
            *e = e.add(c);
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
    fn neg(&self, a: &BiSlice) -> BiSlice {
        a.iter().map(|(k, c)| (*k, c.neg())).collect()
    }
    fn mul(&self, a: &BiSlice, b: &BiSlice) -> BiSlice {
        let mut out = BTreeMap::new();
        for ((ax, ay), ac) in a {
            if ac.is_zero() {
                continue;
            }
            for ((bx, by), bc) in b {
                if bc.is_zero() {
                    continue;
                }
                let k = (ax + bx, ay + by);
                let e = out.entry(k).or_insert_with(Rf::zero);
                *e = e.add(&ac.mul(bc));
            }
        }
        out.retain(|_, c: &mut Rf| !c.is_zero());
        out
    }
    fn scale(&self, c: &Rat, a: &BiSlice) -> BiSlice {
        a.iter().map(|(k, x)| (*k, x.scale(c))).collect()
    }
    fn adams(&self, d: u32, a: &BiSlice) -> BiSlice {
        a.iter()
            .map(|((x, y), c)| ((x * d as usize, y * d as usize), c.adams(d)))
            .collect()
    }
    fn inv(&self, a: &BiSlice) -> Option<BiSlice> {
        if a.len() == 1 {
            if let Some(c) = a.get(&(0, 0)) {
                let mut m = BTreeMap::new();
                m.insert((0, 0), c.inv().ok()?);
                return Some(m);
            }
        }
        None
    }
}

pub type BiSeries = Series<BiRing>;

impl BiSeries {
    pub fn coeff_xy(&self, a: usize, b: usize) -> Rf {
        if a + b > self.cutoff() {
            return Rf::zero();
        }
        self.slice(a + b).get(&(a, b)).cloned().unwrap_or_else(Rf::zero)
    }
}

/// Helper: a `QSeries` built from `Rf` coefficients of `1/(1 - c T^k)`.
pub fn geometric(c: &Rf, k: usize, cutoff: usize) -> QSeries {
    let mut slices = vec![Rf::zero(); cutoff + 1];
    let mut acc = Rf::one();
    let mut n = 0;
    while n <= cutoff {
        slices[n] = acc.clone();
        acc = acc.mul(c);
        n += k;
    }
    Series::from_slices(RfRing, slices)
}
