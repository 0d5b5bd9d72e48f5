//! Integer partitions with hook statistics, and tuples of partitions.

use crate::poly::Poly;
use crate::ratfun::Rf;
use crate::symbol::sym;
use crate::{rat, Error, Rat, Result};
use num_traits::One;
use std::fmt;

pub const DEFAULT_PARTITION_BOUND: u32 = 12;

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let p = Partition { parts };
        debug_assert_eq!(
            2 * p.n_stat() + p.size() as i64,
            p.self_pairing(),
            "hook statistics out of sync"
        );
        p
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut out = vec![0u32; cols];
        for (j, slot) in out.iter_mut().enumerate() {
            *slot = self.parts.iter().filter(|&&p| p > j as u32).count() as u32;
        }
        Partition { parts: out }
    }

    /// `n(lambda) = sum (i-1) lambda_i`.
    pub fn n_stat(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as i64 * p as i64)
            .sum()
    }

    /// `<lambda, lambda> = sum (lambda'_i)^2 = 2 n(lambda) + |lambda|`.
    pub fn self_pairing(&self) -> i64 {
        self.conjugate()
            .parts
            .iter()
            .map(|&c| (c as i64) * (c as i64))
            .sum()
    }

    /// Cells `(i, j)` of the Young diagram, 0-indexed, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    /// Arm length of a cell: boxes strictly to the right in its row.
    pub fn arm(&self, i: usize, j: usize) -> u32 {
        self.parts[i] - 1 - j as u32
    }

    /// Leg length of a cell: boxes strictly below in its column.
    pub fn leg(&self, i: usize, j: usize) -> u32 {
        self.parts.iter().skip(i + 1).filter(|&&p| p > j as u32).count() as u32
    }

    pub fn hook(&self, i: usize, j: usize) -> u32 {
        self.arm(i, j) + self.leg(i, j) + 1
    }

    /// Multiplicity vector: `m[k]` = number of parts equal to `k`.
    pub fn multiplicities(&self) -> std::collections::BTreeMap<u32, u32> {
        let mut m = std::collections::BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0u32) += 1;
        }
        m
    }

    /// `z_lambda = prod k^{m_k} m_k!`.
    pub fn z_stat(&self) -> Rat {
        let mut z = Rat::one();
        for (k, m) in self.multiplicities() {
            for i in 1..=m {
                z *= rat(k as i64 * i as i64);
            }
        }
        z
    }

    /// Scale every part by `d` (the Adams action on partition indices).
    pub fn scaled(&self, d: u32) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| p * d).collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All partitions of `n`, in reverse-lexicographic order (largest first),
/// so `partitions_of(4)` starts with `(4)` and ends with `(1,1,1,1)`.
pub fn partitions_of(n: u32) -> Result<Vec<Partition>> {
    partitions_of_bounded(n, DEFAULT_PARTITION_BOUND)
}

pub fn partitions_of_bounded(n: u32, bound: u32) -> Result<Vec<Partition>> {
    if n > bound {
        return Err(Error::BoundExceeded(format!(
            "partitions of {} requested, bound is {}",
            n, bound
        )));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let top = remaining.min(max);
        for p in (1..=top).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    Ok(out)
}

/// A `k`-tuple of partitions, all of the same size.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PartitionTuple {
    components: Vec<Partition>,
}

impl PartitionTuple {
    pub fn new(components: Vec<Partition>) -> Result<PartitionTuple> {
        if components.is_empty() {
            return Err(Error::RangeError("partition tuple needs k >= 1".into()));
        }
        let n = components[0].size();
        if components.iter().any(|p| p.size() != n) {
            return Err(Error::RangeError(
                "partition tuple components must share one size".into(),
            ));
        }
        Ok(PartitionTuple { components })
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn k(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> u32 {
        self.components[0].size()
    }

    /// `sum_{i,j} (mu^i_j)^2`.
    pub fn sum_of_part_squares(&self) -> i64 {
        self.components
            .iter()
            .flat_map(|p| p.parts())
            .map(|&x| (x as i64) * (x as i64))
            .sum()
    }

    /// Parse the CLI literal, e.g. `"2,1|3"` for a 2-tuple.
    pub fn parse(s: &str) -> Result<PartitionTuple> {
        let components = s
            .split('|')
            .map(|chunk| {
                let parts = chunk
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::RangeError(format!("bad partition part {:?}", t)))
                    })
                    .collect::<Result<Vec<u32>>>()?;
                Ok(Partition::new(parts))
            })
            .collect::<Result<Vec<Partition>>>()?;
        PartitionTuple::new(components)
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.components
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join("|")
        )
    }
}

/// Hook polynomial `H_lambda(q) = prod_cells (q^{h(x)} - 1)`.
pub fn hook_polynomial(lam: &Partition) -> Poly {
    let q = sym("q");
    let mut out = Poly::one(&[q]);
    for (i, j) in lam.cells() {
        let h = lam.hook(i, j) as i64;
        let factor = Poly::monomial(&[q], q, h, Rat::one()).sub(&Poly::one(&[q]));
        out = out.mul(&factor);
    }
    out
}

/// Deformed hook function with exponent `r`:
/// `prod_cells (z^{2a+1} - w^{2l+1})^r / ((z^{2a+2} - w^{2l})(z^{2a} - w^{2l+2}))`.
pub fn deformed_hook(r: u32, lam: &Partition) -> Rf {
    assert!(r >= 1);
    let z = sym("z");
    let w = sym("w");
    let vars = [w, z];
    let zw_term = |ze: i64, we: i64| -> Poly {
        Poly::monomial(&vars, z, ze, Rat::one()).sub(&Poly::monomial(&vars, w, we, Rat::one()))
    };
    let mut num = Poly::one(&vars);
    let mut den = Poly::one(&vars);
    for (i, j) in lam.cells() {
        let a = lam.arm(i, j) as i64;
        let l = lam.leg(i, j) as i64;
        num = num.mul(&zw_term(2 * a + 1, 2 * l + 1).pow(r as u64));
        den = den.mul(&zw_term(2 * a + 2, 2 * l));
        den = den.mul(&zw_term(2 * a, 2 * l + 2));
    }
    Rf::new(num, den).expect("hook denominators are nonzero")
}
