//! Sparse multivariate Laurent polynomials over big rationals.
//!
//! Terms are kept in a `BTreeMap` under graded-lexicographic order on
//! exponent vectors, so every polynomial has one canonical in-memory form
//! and rendering is deterministic.  Exponents may be negative; a polynomial
//! whose exponents are all non-negative is "proper".

use crate::symbol::Symbol;
use crate::{rat, Error, Rat, Result};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector, ordered graded-lexicographically (total degree first,
/// then lexicographic on the entries).
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Mono(pub Vec<i64>);

impl Mono {
    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// A sparse Laurent polynomial with `Rat` coefficients.
#[derive(Clone, Debug)]
pub struct Poly {
    vars: Vec<Symbol>,
    terms: BTreeMap<Mono, Rat>,
}

/// Equality ignores variables that occur in no term, so `1` over `[q, t]`
/// equals `1` over `[]`.
impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let a = self.shrink_vars();
        let b = other.shrink_vars();
        a.vars == b.vars && a.terms == b.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(vars: &[Symbol]) -> Poly {
        let mut vs = vars.to_vec();
        vs.sort();
        vs.dedup();
        Poly {
            vars: vs,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[Symbol], c: Rat) -> Poly {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Mono(vec![0; p.vars.len()]), c);
        }
        p
    }

    pub fn one(vars: &[Symbol]) -> Poly {
        Poly::constant(vars, Rat::one())
    }

    pub fn int(vars: &[Symbol], n: i64) -> Poly {
        Poly::constant(vars, rat(n))
    }

    /// The monomial `c * v^e` inside the given variable list.
    pub fn monomial(vars: &[Symbol], v: Symbol, e: i64, c: Rat) -> Poly {
        let mut p = Poly::zero(vars);
        if c.is_zero() {
            return p;
        }
        let i = p
            .vars
            .iter()
            .position(|&s| s == v)
            .expect("monomial variable not in list");
        let mut exps = vec![0; p.vars.len()];
        exps[i] = e;
        p.terms.insert(Mono(exps), c);
        p
    }

    /// The single variable `v` as a polynomial in `[v]`.
    pub fn var(v: Symbol) -> Poly {
        Poly::monomial(&[v], v, 1, Rat::one())
    }

    pub fn vars(&self) -> &[Symbol] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.0.iter().all(|&e| e == 0))
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&Mono(vec![0; self.vars.len()]))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }

    /// Leading (maximal graded-lex) term.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rat::zero)
    }

    /// Largest total degree among terms (0 for the zero polynomial).
    pub fn total_degree(&self) -> i64 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Degree in one variable (maximum exponent; 0 if absent or zero poly).
    pub fn degree_in(&self, v: Symbol) -> i64 {
        match self.vars.iter().position(|&s| s == v) {
            None => 0,
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
        }
    }

    /// Minimum exponent of `v` over all terms (0 if absent or zero poly).
    pub fn min_exp_in(&self, v: Symbol) -> i64 {
        match self.vars.iter().position(|&s| s == v) {
            None => 0,
            Some(i) => self.terms.keys().map(|m| m.0[i]).min().unwrap_or(0),
        }
    }

    pub fn uses_var(&self, v: Symbol) -> bool {
        match self.vars.iter().position(|&s| s == v) {
            None => false,
            Some(i) => self.terms.keys().any(|m| m.0[i] != 0),
        }
    }

    fn insert_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Re-express over a variable list containing this polynomial's.
    fn embed(&self, vars: &[Symbol]) -> Poly {
        if self.vars == vars {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("missing variable"))
            .collect();
        let mut out = Poly::zero(vars);
        for (m, c) in &self.terms {
            let mut exps = vec![0; vars.len()];
            for (i, &e) in m.0.iter().enumerate() {
                exps[map[i]] = e;
            }
            out.terms.insert(Mono(exps), c.clone());
        }
        out
    }

    /// Unify two polynomials over the union of their variable lists.
    pub fn unify(a: &Poly, b: &Poly) -> (Poly, Poly) {
        if a.vars == b.vars {
            return (a.clone(), b.clone());
        }
        let mut vars = a.vars.clone();
        vars.extend_from_slice(&b.vars);
        vars.sort();
        vars.dedup();
        (a.embed(&vars), b.embed(&vars))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let (mut a, b) = Poly::unify(self, other);
        for (m, c) in b.terms {
            a.insert_term(m, c);
        }
        a
    }

    pub fn neg(&self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let (a, b) = Poly::unify(self, other);
        let mut out = Poly::zero(&a.vars);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, mut n: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.vars);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiply by the monomial `v^e` for each `(v, e)`.
    pub fn mul_monomial(&self, shifts: &[(Symbol, i64)]) -> Poly {
        let mut out = self.clone();
        for &(v, e) in shifts {
            if e == 0 {
                continue;
            }
            let i = match out.vars.iter().position(|&s| s == v) {
                Some(i) => i,
                None => {
                    out = out.embed(&{
                        let mut vs = out.vars.clone();
                        vs.push(v);
                        vs.sort();
                        vs.dedup();
                        vs
                    });
                    out.vars.iter().position(|&s| s == v).unwrap()
                }
            };
            out.terms = out
                .terms
                .into_iter()
                .map(|(mut m, c)| {
                    m.0[i] += e;
                    (m, c)
                })
                .collect();
        }
        out
    }

    /// Shift exponents so all are non-negative; returns the shifted
    /// polynomial plus the per-variable shifts that were applied.
    pub fn clear_negative_exponents(&self) -> (Poly, Vec<(Symbol, i64)>) {
        let mut shifts = Vec::new();
        for (i, &v) in self.vars.iter().enumerate() {
            let min = self.terms.keys().map(|m| m.0[i]).min().unwrap_or(0);
            if min < 0 {
                shifts.push((v, -min));
            }
        }
        (self.mul_monomial(&shifts), shifts)
    }

    /// Exact division; errors with `DivisionNotExact` when the quotient is
    /// not a Laurent polynomial and `ZeroDivisor` when `other` is zero.
    pub fn exact_div(&self, other: &Poly) -> Result<Poly> {
        if other.is_zero() {
            return Err(Error::ZeroDivisor("polynomial division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Poly::zero(&self.vars));
        }
        let (a0, b0) = Poly::unify(self, other);
        // Shift so that divisor, dividend AND quotient are proper: the
        // per-variable valuation of the quotient is the difference of
        // valuations, so the required shift is known up front.
        let mut ashift = Vec::new();
        let mut bshift = Vec::new();
        let mut qshift = Vec::new();
        for &v in a0.vars() {
            let ma = a0.min_exp_in(v);
            let mb = b0.min_exp_in(v);
            let tb = 0.max(-mb);
            let sq = 0.max(mb - ma);
            if tb != 0 {
                bshift.push((v, tb));
            }
            if sq + tb != 0 {
                ashift.push((v, sq + tb));
            }
            if sq != 0 {
                qshift.push((v, -sq));
            }
        }
        let a = a0.mul_monomial(&ashift);
        let b = b0.mul_monomial(&bshift);
        let mut rem = a.clone();
        let mut quot = Poly::zero(&a.vars);
        let (bm, bc) = b.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
            let diff: Vec<i64> = rm.0.iter().zip(&bm.0).map(|(x, y)| x - y).collect();
            if diff.iter().any(|&e| e < 0) {
                return Err(Error::DivisionNotExact(format!(
                    "{} does not divide {}",
                    other, self
                )));
            }
            let t = Mono(diff);
            let c = rc / bc.clone();
            let mut tp = Poly::zero(&a.vars);
            tp.terms.insert(t.clone(), c.clone());
            rem = rem.sub(&tp.mul(&b));
            quot.insert_term(t, c);
        }
        Ok(quot.mul_monomial(&qshift))
    }

    /// Substitute variables by polynomial images.  Negative exponents are
    /// supported only when the image is a single term (a monomial, hence a
    /// unit in the Laurent ring).
    pub fn substitute(&self, map: &[(Symbol, Poly)]) -> Result<Poly> {
        let mut out: Option<Poly> = None;
        'terms: for (m, c) in &self.terms {
            let mut term = Poly::constant(&[], c.clone());
            for (i, &v) in self.vars.iter().enumerate() {
                let e = m.0[i];
                if e == 0 {
                    continue;
                }
                let image = map.iter().find(|(s, _)| *s == v).map(|(_, p)| p);
                let factor = match image {
                    None => Poly::monomial(&[v], v, e, Rat::one()),
                    Some(img) => {
                        if e >= 0 {
                            img.pow(e as u64)
                        } else {
                            if img.num_terms() != 1 {
                                return Err(Error::DivisionNotExact(format!(
                                    "cannot raise non-monomial image of {} to power {}",
                                    v, e
                                )));
                            }
                            let (mono, coeff) = img.leading().unwrap();
                            if coeff.is_zero() {
                                term = Poly::zero(&[]);
                                continue 'terms;
                            }
                            let inv_mono = Mono(mono.0.iter().map(|&x| -x).collect());
                            let mut inv = Poly::zero(img.vars());
                            inv.terms.insert(inv_mono, Rat::one() / coeff.clone());
                            inv.pow((-e) as u64)
                        }
                    }
                };
                term = term.mul(&factor);
            }
            out = Some(match out {
                None => term,
                Some(acc) => acc.add(&term),
            });
        }
        Ok(out.unwrap_or_else(|| Poly::zero(&[])))
    }

    /// The Adams endomorphism on polynomial domains: every variable is
    /// raised to the `n`-th power, i.e. all exponents scale by `n`.
    pub fn adams(&self, n: u32) -> Poly {
        if n == 1 {
            return self.clone();
        }
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Mono(m.0.iter().map(|e| e * n as i64).collect()), c.clone()))
                .collect(),
        }
    }

    /// Evaluate at rational points (every variable must be assigned, and
    /// a zero value is rejected when it meets a negative exponent).
    pub fn eval(&self, point: &[(Symbol, Rat)]) -> Result<Rat> {
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &v) in self.vars.iter().enumerate() {
                let e = m.0[i];
                if e == 0 {
                    continue;
                }
                let x = point
                    .iter()
                    .find(|(s, _)| *s == v)
                    .map(|(_, x)| x.clone())
                    .ok_or_else(|| Error::RangeError(format!("no value for {}", v)))?;
                if x.is_zero() && e < 0 {
                    return Err(Error::ZeroDivisor(format!("{}^{} at 0", v, e)));
                }
                term *= rat_pow(&x, e);
            }
            total += term;
        }
        Ok(total)
    }

    /// Content: gcd of coefficient numerators over lcm of denominators,
    /// signed to match the leading coefficient.
    pub fn content(&self) -> Rat {
        use num_integer::Integer as _;
        if self.is_zero() {
            return Rat::zero();
        }
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        let mut content = Rat::new(num, den);
        if self.leading_coeff().is_negative() {
            content = -content;
        }
        content
    }

    /// Divide out the content (result has content 1, positive leading
    /// coefficient, integer coefficients when the input had a common shape).
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.scale(&(Rat::one() / c))
    }

    /// Whether only even powers of `v` occur.
    pub fn is_even_in(&self, v: Symbol) -> bool {
        match self.vars.iter().position(|&s| s == v) {
            None => true,
            Some(i) => self.terms.keys().all(|m| m.0[i] % 2 == 0),
        }
    }

    /// Substitute `v^2 -> target`, i.e. halve every exponent of `v` and
    /// rename it.  Errors if an odd power of `v` remains.
    pub fn even_sub(&self, v: Symbol, target: Symbol) -> Result<Poly> {
        if !self.is_even_in(v) {
            return Err(Error::OddPowersRemain(v.name().into()));
        }
        let mut vars = self.vars.clone();
        let pos = match vars.iter().position(|&s| s == v) {
            None => return Ok(self.clone()),
            Some(i) => i,
        };
        vars[pos] = target;
        let perm: Vec<usize> = {
            let mut idx: Vec<usize> = (0..vars.len()).collect();
            idx.sort_by_key(|&i| vars[i]);
            idx
        };
        let sorted_vars: Vec<Symbol> = perm.iter().map(|&i| vars[i]).collect();
        let mut out = Poly::zero(&sorted_vars);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            exps[pos] /= 2;
            let remapped: Vec<i64> = perm.iter().map(|&i| exps[i]).collect();
            out.insert_term(Mono(remapped), c.clone());
        }
        Ok(out)
    }

    /// Rename a variable (target must not already occur).
    pub fn rename(&self, v: Symbol, target: Symbol) -> Poly {
        assert!(!self.vars.contains(&target) || v == target);
        let mut vars = self.vars.clone();
        if let Some(pos) = vars.iter().position(|&s| s == v) {
            vars[pos] = target;
        } else {
            return self.clone();
        }
        let perm: Vec<usize> = {
            let mut idx: Vec<usize> = (0..vars.len()).collect();
            idx.sort_by_key(|&i| vars[i]);
            idx
        };
        let sorted_vars: Vec<Symbol> = perm.iter().map(|&i| vars[i]).collect();
        let mut out = Poly::zero(&sorted_vars);
        for (m, c) in &self.terms {
            let remapped: Vec<i64> = perm.iter().map(|&i| m.0[i]).collect();
            out.terms.insert(Mono(remapped), c.clone());
        }
        out
    }

    /// Drop variables that no longer occur in any term.
    pub fn shrink_vars(&self) -> Poly {
        let used: Vec<usize> = (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] != 0))
            .collect();
        if used.len() == self.vars.len() {
            return self.clone();
        }
        let vars: Vec<Symbol> = used.iter().map(|&i| self.vars[i]).collect();
        let mut out = Poly::zero(&vars);
        for (m, c) in &self.terms {
            out.terms
                .insert(Mono(used.iter().map(|&i| m.0[i]).collect()), c.clone());
        }
        out
    }

    /// Render in LaTeX.
    pub fn to_latex(&self) -> String {
        render(self, true)
    }
}

pub(crate) fn rat_pow(x: &Rat, e: i64) -> Rat {
    if e >= 0 {
        num_traits::pow::pow(x.clone(), e as usize)
    } else {
        num_traits::pow::pow(Rat::one() / x.clone(), (-e) as usize)
    }
}

fn render_coeff(c: &Rat, latex: bool) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else if latex {
        format!("\\tfrac{{{}}}{{{}}}", c.numer(), c.denom())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn render(p: &Poly, latex: bool) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms.iter().rev().enumerate() {
        let mut mono = String::new();
        for (j, &v) in p.vars.iter().enumerate() {
            let e = m.0[j];
            if e == 0 {
                continue;
            }
            if !mono.is_empty() {
                mono.push_str(if latex { " " } else { "*" });
            }
            if e == 1 {
                mono.push_str(v.name());
            } else if latex {
                mono.push_str(&format!("{}^{{{}}}", v.name(), e));
            } else {
                mono.push_str(&format!("{}^{}", v.name(), e));
            }
        }
        let abs = c.abs();
        let sign = c.is_negative();
        if i == 0 {
            if sign {
                out.push('-');
            }
        } else {
            out.push_str(if sign { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&render_coeff(&abs, latex));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&render_coeff(&abs, latex));
            out.push_str(if latex { " " } else { "*" });
            out.push_str(&mono);
        }
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(self, false))
    }
}

/// Parse integers out of a simple comma list, used by CLI helpers.
pub fn poly_from_coeffs(v: Symbol, coeffs: &[(i64, i64)]) -> Poly {
    let mut p = Poly::zero(&[v]);
    for &(e, c) in coeffs {
        p = p.add(&Poly::monomial(&[v], v, e, rat(c)));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::sym;

    fn q() -> Symbol {
        sym("q")
    }

    #[test]
    fn difference_of_squares() {
        let qm1 = Poly::var(q()).sub(&Poly::int(&[q()], 1));
        let qp1 = Poly::var(q()).add(&Poly::int(&[q()], 1));
        let prod = qm1.mul(&qp1);
        let q2m1 = Poly::monomial(&[q()], q(), 2, rat(1)).sub(&Poly::int(&[q()], 1));
        assert_eq!(prod, q2m1);
        assert_eq!(prod.to_string(), "q^2 - 1");
    }

    #[test]
    fn exact_division() {
        let qm1 = Poly::var(q()).sub(&Poly::int(&[q()], 1));
        let qp1 = Poly::var(q()).add(&Poly::int(&[q()], 1));
        let q2m1 = qm1.mul(&qp1);
        assert_eq!(q2m1.exact_div(&qm1).unwrap(), qp1);
        assert!(matches!(
            qp1.exact_div(&qm1),
            Err(Error::DivisionNotExact(_))
        ));
        assert!(matches!(
            qp1.exact_div(&Poly::zero(&[q()])),
            Err(Error::ZeroDivisor(_))
        ));
    }

    #[test]
    fn laurent_units_cancel() {
        let qinv = Poly::monomial(&[q()], q(), -1, rat(1));
        let qq = Poly::var(q());
        assert!(qinv.mul(&qq).is_one());
        // exact_div with Laurent exponents
        let r = qq.exact_div(&qinv).unwrap();
        assert_eq!(r, Poly::monomial(&[q()], q(), 2, rat(1)));
    }

    #[test]
    fn substitute_examples() {
        let z = sym("z");
        let w = sym("w");
        let u = sym("u");
        let zmw = Poly::var(z).sub(&Poly::var(w));
        let img = zmw
            .substitute(&[
                (z, Poly::var(u)),
                (w, Poly::monomial(&[u], u, -1, rat(1))),
            ])
            .unwrap();
        let expect = Poly::var(u).sub(&Poly::monomial(&[u], u, -1, rat(1)));
        assert_eq!(img, expect);

        let p = poly_from_coeffs(q(), &[(2, 1), (1, 1), (0, 2)]);
        let v = p.substitute(&[(q(), Poly::int(&[], 3))]).unwrap();
        assert_eq!(v.constant_term(), rat(14));
    }

    #[test]
    fn even_substitution() {
        let u = sym("u");
        let p = Poly::monomial(&[u], u, 4, rat(1)).add(&Poly::monomial(&[u], u, -2, rat(3)));
        let qv = p.even_sub(u, q()).unwrap();
        assert_eq!(
            qv,
            Poly::monomial(&[q()], q(), 2, rat(1)).add(&Poly::monomial(&[q()], q(), -1, rat(3)))
        );
        let odd = Poly::var(u);
        assert!(matches!(odd.even_sub(u, q()), Err(Error::OddPowersRemain(_))));
    }

    #[test]
    fn rendering_matches_canonical_form() {
        let p = poly_from_coeffs(q(), &[(4, 3), (3, -2), (2, -3), (0, 2)]);
        assert_eq!(p.to_string(), "3*q^4 - 2*q^3 - 3*q^2 + 2");
        assert_eq!(p.to_latex(), "3 q^{4} - 2 q^{3} - 3 q^{2} + 2");
        let z = sym("z");
        let w = sym("w");
        let m = Poly::monomial(&[z, w], z, 2, rat(1)).mul(&Poly::var(w)).neg();
        assert_eq!(m.to_string(), "-w*z^2");
    }

    #[test]
    fn unify_across_variable_sets() {
        let z = sym("z");
        let a = Poly::var(q());
        let b = Poly::var(z);
        let s = a.add(&b);
        assert_eq!(s.vars(), &[q(), z]);
        assert_eq!(s.num_terms(), 2);
        assert_eq!(s.mul(&s).num_terms(), 3);
    }
}
