//! Symmetric functions over `k` variable sets.
//!
//! Elements are stored as maps from `k`-tuples of partitions to rational
//! function coefficients, in one of four bases per coordinate: monomial,
//! power sum, complete homogeneous, Schur.  Conversions route through the
//! power-sum basis; per-degree tables are memoized.  The Hall pairing is
//! the one with `<p_lambda, p_mu> = delta z_lambda`, extended
//! multiplicatively over variable sets — so `<f, h_mu>` is the coefficient
//! of `m_mu`.

use crate::partitions::{partitions_of_bounded, Partition};
use crate::ratfun::Rf;
use crate::{Error, Rat, Result};
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

pub const TABLE_BOUND: u32 = 12;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Basis {
    Monomial,
    Power,
    Homogeneous,
    Schur,
}

impl Basis {
    pub fn letter(&self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Power => "p",
            Basis::Homogeneous => "h",
            Basis::Schur => "s",
        }
    }
}

type Expansion = BTreeMap<Partition, BTreeMap<Partition, Rat>>;

static TABLES: Lazy<RwLock<HashMap<(Basis, Basis, u32), Arc<Expansion>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// Expansion of every degree-`n` element of `from` in the basis `to`.
pub fn conversion_table(from: Basis, to: Basis, n: u32) -> Result<Arc<Expansion>> {
    if n > TABLE_BOUND {
        return Err(Error::CutoffExceeded(format!(
            "basis conversion tables stop at degree {}",
            TABLE_BOUND
        )));
    }
    let key = (from, to, n);
    if let Some(t) = TABLES.read().unwrap().get(&key) {
        return Ok(t.clone());
    }
    let table = Arc::new(build_table(from, to, n)?);
    TABLES.write().unwrap().insert(key, table.clone());
    Ok(table)
}

fn build_table(from: Basis, to: Basis, n: u32) -> Result<Expansion> {
    use Basis::*;
    if from == to {
        let mut t = Expansion::new();
        for lam in partitions_of_bounded(n, TABLE_BOUND)? {
            let mut row = BTreeMap::new();
            row.insert(lam.clone(), Rat::one());
            t.insert(lam, row);
        }
        return Ok(t);
    }
    match (from, to) {
        (Power, Monomial) => power_in_monomial(n),
        (Monomial, Power) => invert_table(conversion_table(Power, Monomial, n)?.as_ref(), n),
        (Homogeneous, Power) => homogeneous_in_power(n),
        (Schur, Power) => schur_in_power(n),
        (Power, Schur) => invert_table(conversion_table(Schur, Power, n)?.as_ref(), n),
        (Power, Homogeneous) => invert_table(conversion_table(Homogeneous, Power, n)?.as_ref(), n),
        // everything else composes through the power basis
        _ => {
            let a = conversion_table(from, Power, n)?;
            let b = conversion_table(Power, to, n)?;
            Ok(compose_tables(&a, &b))
        }
    }
}

fn compose_tables(a: &Expansion, b: &Expansion) -> Expansion {
    let mut out = Expansion::new();
    for (src, row) in a {
        let mut acc: BTreeMap<Partition, Rat> = BTreeMap::new();
        for (mid, c) in row {
            for (dst, d) in &b[mid] {
                let e = acc.entry(dst.clone()).or_insert_with(Rat::zero);
                *e += c * d;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        out.insert(src.clone(), acc);
    }
    out
}

/// Multiply an m-basis expansion by `p_r`:
/// `m_lambda p_r = sum_mu mult(a + r in mu) m_mu` over the ways of adding
/// `r` to one part of `lambda` (or adjoining a new part `r`).
fn m_times_p(acc: &BTreeMap<Partition, Rat>, r: u32) -> BTreeMap<Partition, Rat> {
    let mut out: BTreeMap<Partition, Rat> = BTreeMap::new();
    for (lam, c) in acc {
        let mut sources: Vec<u32> = lam.parts().to_vec();
        sources.push(0);
        sources.sort_unstable();
        sources.dedup();
        for &a in &sources {
            let mut parts: Vec<u32> = lam.parts().to_vec();
            if a == 0 {
                parts.push(r);
            } else {
                let pos = parts.iter().position(|&x| x == a).unwrap();
                parts[pos] = a + r;
            }
            let mu = Partition::new(parts);
            let mult = mu.parts().iter().filter(|&&x| x == a + r).count() as i64;
            let e = out.entry(mu).or_insert_with(Rat::zero);
            *e += c * crate::rat(mult);
        }
    }
    out
}

fn power_in_monomial(n: u32) -> Result<Expansion> {
    let mut out = Expansion::new();
    for nu in partitions_of_bounded(n, TABLE_BOUND)? {
        let mut acc = BTreeMap::new();
        acc.insert(Partition::empty(), Rat::one());
        for &r in nu.parts() {
            acc = m_times_p(&acc, r);
        }
        out.insert(nu, acc);
    }
    Ok(out)
}

fn homogeneous_in_power(n: u32) -> Result<Expansion> {
    // h_r = sum_{|lambda| = r} p_lambda / z_lambda; products concatenate keys
    let mut out = Expansion::new();
    for nu in partitions_of_bounded(n, TABLE_BOUND)? {
        let mut acc: BTreeMap<Partition, Rat> = BTreeMap::new();
        acc.insert(Partition::empty(), Rat::one());
        for &r in nu.parts() {
            let mut next: BTreeMap<Partition, Rat> = BTreeMap::new();
            for lam in partitions_of_bounded(r, TABLE_BOUND)? {
                let w = Rat::one() / lam.z_stat();
                for (key, c) in &acc {
                    let mut parts = key.parts().to_vec();
                    parts.extend_from_slice(lam.parts());
                    let merged = Partition::new(parts);
                    let e = next.entry(merged).or_insert_with(Rat::zero);
                    *e += c * &w;
                }
            }
            acc = next;
        }
        out.insert(nu, acc);
    }
    Ok(out)
}

/// Jacobi–Trudi: `s_lambda = det(h_{lambda_i - i + j})`, expanded over
/// permutations into products of `h`'s in the power basis.
fn schur_in_power(n: u32) -> Result<Expansion> {
    let h_table = conversion_table(Basis::Homogeneous, Basis::Power, n)?;
    let mut out = Expansion::new();
    for lam in partitions_of_bounded(n, TABLE_BOUND)? {
        let l = lam.len().max(1);
        let mut acc: BTreeMap<Partition, Rat> = BTreeMap::new();
        for (perm, sign) in permutations(l) {
            let mut degrees = Vec::with_capacity(l);
            let mut ok = true;
            for (i, &pj) in perm.iter().enumerate() {
                let li = if i < lam.len() { lam.parts()[i] as i64 } else { 0 };
                let d = li - (i as i64 + 1) + (pj as i64 + 1);
                if d < 0 {
                    ok = false;
                    break;
                }
                degrees.push(d as u32);
            }
            if !ok {
                continue;
            }
            let key = Partition::new(degrees);
            debug_assert_eq!(key.size(), n);
            // h_key expanded in p
            for (dst, c) in &h_table[&key] {
                let e = acc.entry(dst.clone()).or_insert_with(Rat::zero);
                *e += c * crate::rat(sign);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        out.insert(lam, acc);
    }
    Ok(out)
}

fn permutations(l: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..l).collect();
    fn rec(k: usize, idx: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == idx.len() {
            out.push((idx.clone(), sign));
            return;
        }
        for i in k..idx.len() {
            idx.swap(k, i);
            let s = if i == k { sign } else { -sign };
            rec(k + 1, idx, s, out);
            idx.swap(k, i);
        }
    }
    rec(0, &mut idx, 1, &mut out);
    out
}

/// Invert the square per-degree table by Gaussian elimination.
fn invert_table(t: &Expansion, n: u32) -> Result<Expansion> {
    let keys: Vec<Partition> = partitions_of_bounded(n, TABLE_BOUND)?;
    let dim = keys.len();
    let idx: HashMap<&Partition, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut a = vec![vec![Rat::zero(); dim]; dim];
    let mut inv = vec![vec![Rat::zero(); dim]; dim];
    for (i, key) in keys.iter().enumerate() {
        for (dst, c) in &t[key] {
            a[i][idx[dst]] = c.clone();
        }
        inv[i][i] = Rat::one();
    }
    for col in 0..dim {
        let pivot = (col..dim)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::BasisMismatch("singular conversion table".into()))?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for c in 0..dim {
            a[col][c] /= &p;
            inv[col][c] /= &p;
        }
        for r in 0..dim {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..dim {
                let t1 = &a[col][c] * &f;
                a[r][c] -= t1;
                let t2 = &inv[col][c] * &f;
                inv[r][c] -= t2;
            }
        }
    }
    let mut out = Expansion::new();
    for (i, key) in keys.iter().enumerate() {
        let mut row = BTreeMap::new();
        for (j, dst) in keys.iter().enumerate() {
            if !inv[i][j].is_zero() {
                row.insert(dst.clone(), inv[i][j].clone());
            }
        }
        out.insert(key.clone(), row);
    }
    Ok(out)
}

/// A symmetric-function element over `k` variable sets.
#[derive(Clone, PartialEq, Debug)]
pub struct SymFunc {
    pub k: usize,
    pub basis: Basis,
    pub terms: BTreeMap<Vec<Partition>, Rf>,
}

impl SymFunc {
    pub fn zero(k: usize, basis: Basis) -> SymFunc {
        SymFunc {
            k,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(basis: Basis, key: Vec<Partition>, coeff: Rf) -> SymFunc {
        let mut f = SymFunc::zero(key.len(), basis);
        if !coeff.is_zero() {
            f.terms.insert(key, coeff);
        }
        f
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.basis != other.basis || self.k != other.k {
            return Err(Error::BasisMismatch(
                "cannot add across bases or variable-set counts".into(),
            ));
        }
        let mut out = self.clone();
        for (key, c) in &other.terms {
            let e = out.terms.entry(key.clone()).or_insert_with(Rf::zero);
            *e = e.add(c);
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn scale(&self, c: &Rf) -> SymFunc {
        let mut out = self.clone();
        if c.is_zero() {
            out.terms.clear();
            return out;
        }
        for v in out.terms.values_mut() {
            *v = v.mul(c);
        }
        out
    }

    /// Change of basis, coordinate by coordinate.
    pub fn basis_convert(&self, target: Basis) -> Result<SymFunc> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let mut out = SymFunc::zero(self.k, target);
        for (key, c) in &self.terms {
            let mut partial: Vec<(Vec<Partition>, Rat)> = vec![(Vec::new(), Rat::one())];
            for part in key {
                let table = conversion_table(self.basis, target, part.size())?;
                let row = &table[part];
                let mut next = Vec::new();
                for (prefix, pc) in &partial {
                    for (dst, dc) in row {
                        let mut ext = prefix.clone();
                        ext.push(dst.clone());
                        next.push((ext, pc * dc));
                    }
                }
                partial = next;
            }
            for (dst, rc) in partial {
                let e = out.terms.entry(dst).or_insert_with(Rf::zero);
                *e = e.add(&c.scale(&rc));
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// Multiplication (keys concatenate per coordinate in the power basis).
    pub fn mul(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.k != other.k {
            return Err(Error::BasisMismatch("variable-set counts differ".into()));
        }
        let a = self.basis_convert(Basis::Power)?;
        let b = other.basis_convert(Basis::Power)?;
        let mut out = SymFunc::zero(self.k, Basis::Power);
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                let key: Vec<Partition> = ka
                    .iter()
                    .zip(kb)
                    .map(|(x, y)| {
                        let mut parts = x.parts().to_vec();
                        parts.extend_from_slice(y.parts());
                        Partition::new(parts)
                    })
                    .collect();
                let e = out.terms.entry(key).or_insert_with(Rf::zero);
                *e = e.add(&ca.mul(cb));
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out.basis_convert(self.basis)
    }

    /// Hall pairing, multiplicative across variable sets.
    pub fn hall_inner(&self, other: &SymFunc) -> Result<Rf> {
        if self.k != other.k {
            return Err(Error::BasisMismatch("variable-set counts differ".into()));
        }
        let a = self.basis_convert(Basis::Power)?;
        let b = other.basis_convert(Basis::Power)?;
        let mut acc = Rf::zero();
        for (key, ca) in &a.terms {
            if let Some(cb) = b.terms.get(key) {
                let z: Rat = key.iter().map(|p| p.z_stat()).product();
                acc = acc.add(&ca.mul(cb).scale(&z));
            }
        }
        Ok(acc)
    }

    /// Adams operation in a diagonal basis (monomial or power sum): scales
    /// every partition key by `d` and applies the coefficient Adams map.
    pub fn adams(&self, d: u32) -> SymFunc {
        debug_assert!(matches!(self.basis, Basis::Power | Basis::Monomial));
        let mut out = SymFunc::zero(self.k, self.basis);
        for (key, c) in &self.terms {
            let scaled: Vec<Partition> = key.iter().map(|p| p.scaled(d)).collect();
            out.terms.insert(scaled, c.adams(d));
        }
        out
    }

    pub fn coeff(&self, key: &[Partition]) -> Rf {
        self.terms.get(key).cloned().unwrap_or_else(Rf::zero)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (key, c) in self.terms.iter().rev() {
            let name = format!(
                "{}[{}]",
                self.basis.letter(),
                key.iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join("|")
            );
            let cs = if c.is_one() {
                name
            } else if c.is_constant() || (c.is_polynomial() && c.num().num_terms() == 1) {
                format!("{}*{}", c, name)
            } else {
                format!("({})*{}", c, name)
            };
            parts.push(cs);
        }
        parts.join(" + ")
    }
}

/// `h_mu = h_{mu^1}(x_1) ... h_{mu^k}(x_k)` as a `SymFunc`.
pub fn h_mu(mu: &[Partition]) -> SymFunc {
    SymFunc::single(Basis::Homogeneous, mu.to_vec(), Rf::one())
}

/// Single-set basis element of degree `|lambda|`.
pub fn basis_element(basis: Basis, lam: &Partition) -> SymFunc {
    SymFunc::single(basis, vec![lam.clone()], Rf::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn classical_expansions() {
        // h2 = m2 + m11
        let h2 = basis_element(Basis::Homogeneous, &part(&[2]))
            .basis_convert(Basis::Monomial)
            .unwrap();
        assert_eq!(h2.coeff(&[part(&[2])]), Rf::one());
        assert_eq!(h2.coeff(&[part(&[1, 1])]), Rf::one());

        // p2 = m2
        let p2 = basis_element(Basis::Power, &part(&[2]))
            .basis_convert(Basis::Monomial)
            .unwrap();
        assert_eq!(p2.coeff(&[part(&[2])]), Rf::one());
        assert!(p2.coeff(&[part(&[1, 1])]).is_zero());

        // s2 = m2 + m11,  s11 = m11
        let s2 = basis_element(Basis::Schur, &part(&[2]))
            .basis_convert(Basis::Monomial)
            .unwrap();
        assert_eq!(s2.coeff(&[part(&[2])]), Rf::one());
        assert_eq!(s2.coeff(&[part(&[1, 1])]), Rf::one());
        let s11 = basis_element(Basis::Schur, &part(&[1, 1]))
            .basis_convert(Basis::Monomial)
            .unwrap();
        assert!(s11.coeff(&[part(&[2])]).is_zero());
        assert_eq!(s11.coeff(&[part(&[1, 1])]), Rf::one());
    }

    #[test]
    fn round_trips_below_cutoff() {
        for n in 1..=5u32 {
            for basis in [Basis::Power, Basis::Homogeneous, Basis::Schur] {
                for lam in partitions_of(n).unwrap() {
                    let f = basis_element(basis, &lam);
                    let there = f.basis_convert(Basis::Monomial).unwrap();
                    let back = there.basis_convert(basis).unwrap();
                    assert_eq!(back, f, "{:?} {}", basis, lam);
                }
            }
        }
    }

    #[test]
    fn hall_pairing_duality() {
        for n in 1..=5u32 {
            for lam in partitions_of(n).unwrap() {
                for mu in partitions_of(n).unwrap() {
                    let m = basis_element(Basis::Monomial, &lam);
                    let h = basis_element(Basis::Homogeneous, &mu);
                    let v = m.hall_inner(&h).unwrap();
                    let expect = if lam == mu { Rf::one() } else { Rf::zero() };
                    assert_eq!(v, expect, "<m_{}, h_{}>", lam, mu);

                    let p1 = basis_element(Basis::Power, &lam);
                    let p2 = basis_element(Basis::Power, &mu);
                    let v = p1.hall_inner(&p2).unwrap();
                    let expect = if lam == mu {
                        Rf::from_rat(lam.z_stat())
                    } else {
                        Rf::zero()
                    };
                    assert_eq!(v, expect, "<p_{}, p_{}>", lam, mu);
                }
            }
        }
    }

    #[test]
    fn power_orthogonality_example() {
        // <p1 p1, p2> = 0
        let p1 = basis_element(Basis::Power, &part(&[1]));
        let p1p1 = p1.mul(&p1).unwrap();
        let p2 = basis_element(Basis::Power, &part(&[2]));
        assert!(p1p1.hall_inner(&p2).unwrap().is_zero());
        // and <p1 p1, p1 p1> = z_(1,1) = 2
        assert_eq!(p1p1.hall_inner(&p1p1).unwrap(), Rf::from_int(2));
    }

    #[test]
    fn tuple_pairing_is_multiplicative() {
        let f = SymFunc::single(
            Basis::Monomial,
            vec![part(&[2]), part(&[1, 1])],
            Rf::one(),
        );
        let g = h_mu(&[part(&[2]), part(&[1, 1])]);
        assert_eq!(f.hall_inner(&g).unwrap(), Rf::one());
        let g2 = h_mu(&[part(&[2]), part(&[2])]);
        assert!(f.hall_inner(&g2).unwrap().is_zero());
    }
}
