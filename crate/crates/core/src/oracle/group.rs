//! Explicit enumeration of `GL_n(F_q)` with conjugacy classes, the
//! transpose-inverse involution, and class-function convolution.
//!
//! Solution counts of the surface-group equations are `r`-fold
//! convolutions of the appropriate point-counting function with class
//! indicator functions, evaluated at the identity; convolutions are done
//! class-wise (one pass over the group per class representative), which
//! keeps `GL_3(F_3)` with its 24 classes comfortably inside the budget.

use super::field::FiniteField;
use super::GROUP_BUDGET;
use crate::{Error, Result};
use std::collections::HashMap;

/// Row-major `n x n` matrix of field codes (`n <= 3`).
pub type Mat = [u8; 9];

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EtaKind {
    /// `eta(y) = #{a : a^2 = y}` (untwisted generators).
    Square,
    /// `eta(y) = #{a : a sigma(a) = y}` (twisted generators).
    Sigma,
}

pub struct GroupTable {
    pub n: usize,
    pub field: FiniteField,
    pub elements: Vec<Mat>,
    index: HashMap<Mat, u32>,
    pub class_of: Vec<u32>,
    pub class_reps: Vec<u32>,
    pub class_sizes: Vec<u64>,
    pub sigma: Vec<u32>,
    pub inverse: Vec<u32>,
    identity: u32,
}

impl GroupTable {
    pub fn build(n: usize, q: u64) -> Result<GroupTable> {
        let field = FiniteField::of_order(q)?;
        if n == 0 || n > 3 {
            return Err(Error::BudgetExceeded(format!(
                "group enumeration supports n <= 3, got {}",
                n
            )));
        }
        let mut order: u64 = 1;
        for i in 0..n {
            order = order.saturating_mul(q.pow(n as u32) - q.pow(i as u32));
        }
        if order > GROUP_BUDGET {
            return Err(Error::BudgetExceeded(format!(
                "|GL_{}(F_{})| = {} exceeds the budget {}",
                n, q, order, GROUP_BUDGET
            )));
        }

        // enumerate invertible matrices
        let cells = n * n;
        let mut elements = Vec::with_capacity(order as usize);
        let mut index = HashMap::with_capacity(order as usize);
        let mut m: Mat = [0; 9];
        enumerate(&field, &mut m, 0, cells, n, &mut elements, &mut index);
        debug_assert_eq!(elements.len() as u64, order);

        let identity = {
            let mut id: Mat = [0; 9];
            for i in 0..n {
                id[i * n + i] = 1;
            }
            index[&id]
        };

        // inverse and sigma tables
        let mut inverse = vec![0u32; elements.len()];
        let mut sigma = vec![0u32; elements.len()];
        for (i, mat) in elements.iter().enumerate() {
            let inv = mat_inverse(&field, mat, n)?;
            inverse[i] = index[&inv];
            sigma[i] = index[&transpose(&inv, n)];
        }

        let mut table = GroupTable {
            n,
            field,
            elements,
            index,
            class_of: Vec::new(),
            class_reps: Vec::new(),
            class_sizes: Vec::new(),
            sigma,
            inverse,
            identity,
        };
        table.compute_classes();
        debug_assert_eq!(
            table.class_sizes.iter().sum::<u64>(),
            table.elements.len() as u64
        );
        Ok(table)
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn num_classes(&self) -> usize {
        self.class_reps.len()
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let prod = mat_mul(
            &self.field,
            &self.elements[a as usize],
            &self.elements[b as usize],
            self.n,
        );
        self.index[&prod]
    }

    pub fn index_of(&self, m: &Mat) -> Option<u32> {
        self.index.get(m).copied()
    }

    /// Index of the diagonal matrix with the given eigenvalue codes.
    pub fn diagonal(&self, eigenvalues: &[u64]) -> Result<u32> {
        if eigenvalues.len() != self.n {
            return Err(Error::RangeError("wrong number of eigenvalues".into()));
        }
        let mut m: Mat = [0; 9];
        for (i, &ev) in eigenvalues.iter().enumerate() {
            if ev == 0 {
                return Err(Error::ZeroDivisor("eigenvalue 0 is not invertible".into()));
            }
            m[i * self.n + i] = ev as u8;
        }
        Ok(self.index[&m])
    }

    /// Conjugation orbits under a generating set.
    fn compute_classes(&mut self) {
        let gens = self.generators();
        let gen_pairs: Vec<(u32, u32)> = gens
            .iter()
            .map(|&g| (g, self.inverse[g as usize]))
            .collect();
        let mut class_of = vec![u32::MAX; self.elements.len()];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for start in 0..self.elements.len() as u32 {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let cls = reps.len() as u32;
            reps.push(start);
            let mut queue = vec![start];
            class_of[start as usize] = cls;
            let mut size = 0u64;
            while let Some(x) = queue.pop() {
                size += 1;
                for &(g, ginv) in &gen_pairs {
                    let y = self.mul(self.mul(g, x), ginv);
                    if class_of[y as usize] == u32::MAX {
                        class_of[y as usize] = cls;
                        queue.push(y);
                    }
                }
            }
            sizes.push(size);
        }
        self.class_of = class_of;
        self.class_reps = reps;
        self.class_sizes = sizes;
    }

    /// A small generating set: a primitive scalar in the top-left slot, the
    /// cyclic permutation, and one transvection.
    fn generators(&self) -> Vec<u32> {
        let n = self.n;
        let g = self.field.generator;
        let mut out = Vec::new();
        let mut d: Mat = [0; 9];
        for i in 0..n {
            d[i * n + i] = 1;
        }
        d[0] = g as u8;
        out.push(self.index[&d]);
        if n > 1 {
            let mut p: Mat = [0; 9];
            for i in 0..n {
                p[i * n + ((i + 1) % n)] = 1;
            }
            out.push(self.index[&p]);
            let mut t: Mat = [0; 9];
            for i in 0..n {
                t[i * n + i] = 1;
            }
            t[1] = 1; // I + E_12
            out.push(self.index[&t]);
        }
        out
    }

    /// The class of the inverse of each class (well defined).
    pub fn inverse_class(&self, cls: u32) -> u32 {
        let rep = self.class_reps[cls as usize];
        self.class_of[self.inverse[rep as usize] as usize]
    }
}

fn enumerate(
    field: &FiniteField,
    m: &mut Mat,
    pos: usize,
    cells: usize,
    n: usize,
    out: &mut Vec<Mat>,
    index: &mut HashMap<Mat, u32>,
) {
    if pos == cells {
        if mat_det(field, m, n) != 0 {
            index.insert(*m, out.len() as u32);
            out.push(*m);
        }
        return;
    }
    for v in 0..field.q {
        m[pos] = v as u8;
        enumerate(field, m, pos + 1, cells, n, out, index);
    }
    m[pos] = 0;
}

pub fn mat_mul(field: &FiniteField, a: &Mat, b: &Mat, n: usize) -> Mat {
    let mut out: Mat = [0; 9];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0u64;
            for k in 0..n {
                acc = field.add(
                    acc,
                    field.mul(a[i * n + k] as u64, b[k * n + j] as u64),
                );
            }
            out[i * n + j] = acc as u8;
        }
    }
    out
}

fn transpose(a: &Mat, n: usize) -> Mat {
    let mut out: Mat = [0; 9];
    for i in 0..n {
        for j in 0..n {
            out[j * n + i] = a[i * n + j];
        }
    }
    out
}

pub fn mat_det(field: &FiniteField, a: &Mat, n: usize) -> u64 {
    let f = field;
    let at = |i: usize, j: usize| a[i * n + j] as u64;
    match n {
        1 => at(0, 0),
        2 => f.sub(f.mul(at(0, 0), at(1, 1)), f.mul(at(0, 1), at(1, 0))),
        3 => {
            let m00 = f.sub(f.mul(at(1, 1), at(2, 2)), f.mul(at(1, 2), at(2, 1)));
            let m01 = f.sub(f.mul(at(1, 0), at(2, 2)), f.mul(at(1, 2), at(2, 0)));
            let m02 = f.sub(f.mul(at(1, 0), at(2, 1)), f.mul(at(1, 1), at(2, 0)));
            let t0 = f.mul(at(0, 0), m00);
            let t1 = f.mul(at(0, 1), m01);
            let t2 = f.mul(at(0, 2), m02);
            f.add(f.sub(t0, t1), t2)
        }
        _ => unreachable!(),
    }
}

fn mat_inverse(field: &FiniteField, a: &Mat, n: usize) -> Result<Mat> {
    let det = mat_det(field, a, n);
    let det_inv = field.inv(det)?;
    let f = field;
    let at = |i: usize, j: usize| a[i * n + j] as u64;
    let mut out: Mat = [0; 9];
    match n {
        1 => out[0] = det_inv as u8,
        2 => {
            out[0] = f.mul(at(1, 1), det_inv) as u8;
            out[1] = f.mul(f.neg(at(0, 1)), det_inv) as u8;
            out[2] = f.mul(f.neg(at(1, 0)), det_inv) as u8;
            out[3] = f.mul(at(0, 0), det_inv) as u8;
        }
        3 => {
            // adjugate
            for i in 0..3 {
                for j in 0..3 {
                    let (r0, r1) = match j {
                        0 => (1, 2),
                        1 => (0, 2),
                        _ => (0, 1),
                    };
                    let (c0, c1) = match i {
                        0 => (1, 2),
                        1 => (0, 2),
                        _ => (0, 1),
                    };
                    let minor = f.sub(
                        f.mul(at(r0, c0), at(r1, c1)),
                        f.mul(at(r0, c1), at(r1, c0)),
                    );
                    let sign = (i + j) % 2 == 1;
                    let cof = if sign { f.neg(minor) } else { minor };
                    out[i * 3 + j] = f.mul(cof, det_inv) as u8;
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(out)
}

/// Class-constant counting function `eta` as per-class values.
pub fn eta_counts(g: &GroupTable, kind: EtaKind) -> Result<Vec<i128>> {
    let mut per_element = vec![0i128; g.elements.len()];
    for a in 0..g.elements.len() as u32 {
        let target = match kind {
            EtaKind::Square => g.mul(a, a),
            EtaKind::Sigma => g.mul(a, g.sigma[a as usize]),
        };
        per_element[target as usize] += 1;
    }
    let mut per_class = vec![i128::MIN; g.num_classes()];
    for (x, &v) in per_element.iter().enumerate() {
        let cls = g.class_of[x] as usize;
        if per_class[cls] == i128::MIN {
            per_class[cls] = v;
        } else if per_class[cls] != v {
            return Err(Error::NotClassConstant(format!(
                "eta({:?}) differs inside class {}",
                kind, cls
            )));
        }
    }
    Ok(per_class)
}

/// Convolution of class functions: `(f * g)(z) = sum_x f(x) g(x^{-1} z)`,
/// one pass over the group per class representative.
fn convolve(g: &GroupTable, f: &[i128], h: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; g.num_classes()];
    for (k, slot) in out.iter_mut().enumerate() {
        let z = g.class_reps[k];
        let mut acc = 0i128;
        for x in 0..g.elements.len() as u32 {
            let fx = f[g.class_of[x as usize] as usize];
            if fx == 0 {
                continue;
            }
            let y = g.mul(g.inverse[x as usize], z);
            acc += fx * h[g.class_of[y as usize] as usize];
        }
        *slot = acc;
    }
    out
}

/// Number of solutions of
/// `E(a_1) ... E(a_r) x_1 ... x_k = 1` with `x_i` in the chosen classes,
/// where `E` is squaring (untwisted) or `a sigma(a)` (twisted).
pub fn rep_count(g: &GroupTable, kind: EtaKind, r: u32, classes: &[u32]) -> Result<i128> {
    if r == 0 {
        return Err(Error::RangeError("need r >= 1".into()));
    }
    let eta = eta_counts(g, kind)?;
    let mut f = eta.clone();
    for _ in 1..r {
        f = convolve(g, &f, &eta);
    }
    for &cls in classes {
        let mut ind = vec![0i128; g.num_classes()];
        ind[cls as usize] = 1;
        f = convolve(g, &f, &ind);
    }
    Ok(f[g.class_of[g.identity() as usize] as usize])
}

/// Counts of the two equations of the orientation-cover correspondence:
/// `#{(x, z) : x z sigma(x) z^{-1} = h}` and `#{(x, z) : x z x^{-1} z^{-1} = h}`.
pub fn correspondence_check(g: &GroupTable, h: u32) -> (i128, i128, bool) {
    let mut count_a = 0i128;
    let mut count_b = 0i128;
    for x in 0..g.elements.len() as u32 {
        let sx = g.sigma[x as usize];
        let xi = g.inverse[x as usize];
        for z in 0..g.elements.len() as u32 {
            let zi = g.inverse[z as usize];
            // x z sigma(x) z^{-1}
            let a = g.mul(g.mul(g.mul(x, z), sx), zi);
            if a == h {
                count_a += 1;
            }
            // x z x^{-1} z^{-1}
            let b = g.mul(g.mul(g.mul(x, z), xi), zi);
            if b == h {
                count_b += 1;
            }
        }
    }
    (count_a, count_b, count_a == count_b)
}
