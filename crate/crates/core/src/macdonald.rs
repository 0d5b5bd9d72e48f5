//! Modified Macdonald polynomials by the combinatorial filling formula.
//!
//! `H~_mu(x; q, t) = sum_sigma q^{inv(sigma)} t^{maj(sigma)} x^sigma`, the
//! sum over all fillings of the diagram of `mu` with positive integers.
//! Diagrams are drawn with the longest row at the bottom and row indices
//! increasing upward; for a filling:
//!
//! * a cell not in the bottom row is a *descent* when its entry exceeds the
//!   entry directly below; `maj` adds `leg + 1` for each descent;
//! * two cells *attack* each other when they share a row, or when one is in
//!   the row directly below and strictly to the left; reading cells top row
//!   to bottom row, left to right, an attacking pair inverted in reading
//!   order counts toward `inv`, and each descent subtracts its arm.
//!
//! Coefficients land in `Z[q, t]`; the result is assembled in the monomial
//! basis.  Values are memoized behind a lock that allows concurrent reads.

use crate::partitions::{partitions_of_bounded, Partition};
use crate::poly::Poly;
use crate::ratfun::Rf;
use crate::symbol::{sym, Symbol};
use crate::symfunc::{Basis, SymFunc};
use crate::{rat, Error, Result};
use once_cell::sync::Lazy;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

pub const MACDONALD_BOUND: u32 = 6;

/// m-basis coefficients of one modified Macdonald polynomial; keys are the
/// content partitions, values are polynomials in `(q, t)`.
pub type MacdonaldExpansion = BTreeMap<Partition, Poly>;

static MEMO: Lazy<RwLock<HashMap<Partition, Arc<MacdonaldExpansion>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// The modified Macdonald polynomial of `mu` in the monomial basis.
pub fn macdonald_modified(mu: &Partition) -> Result<Arc<MacdonaldExpansion>> {
    macdonald_modified_bounded(mu, MACDONALD_BOUND)
}

pub fn macdonald_modified_bounded(
    mu: &Partition,
    bound: u32,
) -> Result<Arc<MacdonaldExpansion>> {
    if mu.size() > bound {
        return Err(Error::BoundExceeded(format!(
            "Macdonald polynomial of size {} requested, bound is {}",
            mu.size(),
            bound
        )));
    }
    if let Some(hit) = MEMO.read().unwrap().get(mu) {
        return Ok(hit.clone());
    }
    let value = Arc::new(compute(mu));
    MEMO.write().unwrap().insert(mu.clone(), value.clone());
    Ok(value)
}

struct Cell {
    row: usize, // 0 = bottom row
    col: usize,
    arm: u32,
    leg_plus_one: u32,
    below: Option<usize>, // index of the cell directly below, in cell order
}

fn diagram(mu: &Partition) -> Vec<Cell> {
    // cells in reading order: top row first, left to right
    let rows = mu.len();
    let mut cells = Vec::with_capacity(mu.size() as usize);
    let mut index_of = HashMap::new();
    for row in (0..rows).rev() {
        for col in 0..mu.parts()[row] as usize {
            index_of.insert((row, col), cells.len());
            cells.push(Cell {
                row,
                col,
                arm: mu.arm(row, col),
                // rows above (row, col): leg of the cell in the flipped
                // diagram equals the standard leg statistic
                leg_plus_one: mu.leg(row, col) + 1,
                below: if row > 0 {
                    index_of.get(&(row - 1, col)).copied()
                } else {
                    None
                },
            });
        }
    }
    // the cell below sits in a longer or equal row, hence appears later in
    // reading order; record those indices now
    for i in 0..cells.len() {
        if cells[i].row > 0 {
            let key = (cells[i].row - 1, cells[i].col);
            cells[i].below = index_of.get(&key).copied();
        }
    }
    cells
}

fn compute(mu: &Partition) -> MacdonaldExpansion {
    let q = sym("q");
    let t = sym("t");
    let n = mu.size();
    let mut out = MacdonaldExpansion::new();
    if n == 0 {
        out.insert(Partition::empty(), Poly::one(&[q, t]));
        return out;
    }
    let cells = diagram(mu);
    // attacking pairs (i, j) with i before j in reading order
    let mut attacking: Vec<(usize, usize)> = Vec::new();
    for i in 0..cells.len() {
        for j in (i + 1)..cells.len() {
            let (a, b) = (&cells[i], &cells[j]);
            let same_row = a.row == b.row;
            let below_left = b.row + 1 == a.row && b.col < a.col;
            if same_row || below_left {
                attacking.push((i, j));
            }
        }
    }
    for content in partitions_of_bounded(n, n).expect("size within bound") {
        // entries: content.parts()[v-1] copies of value v
        let mut counts: Vec<u32> = content.parts().to_vec();
        let mut filling = vec![0u32; cells.len()];
        let mut acc: BTreeMap<(i64, i64), i64> = BTreeMap::new();
        fill(
            0,
            &cells,
            &attacking,
            &mut counts,
            &mut filling,
            &mut acc,
        );
        let mut poly = Poly::zero(&[q, t]);
        for ((qi, ti), c) in acc {
            poly = poly.add(&Poly::monomial(&[q, t], q, qi, rat(c)).mul(&Poly::monomial(
                &[q, t],
                t,
                ti,
                rat(1),
            )));
        }
        out.insert(content, poly);
    }
    out
}

fn fill(
    pos: usize,
    cells: &[Cell],
    attacking: &[(usize, usize)],
    counts: &mut Vec<u32>,
    filling: &mut Vec<u32>,
    acc: &mut BTreeMap<(i64, i64), i64>,
) {
    if pos == cells.len() {
        let (inv, maj) = statistics(cells, attacking, filling);
        *acc.entry((inv, maj)).or_insert(0) += 1;
        return;
    }
    for v in 0..counts.len() {
        if counts[v] == 0 {
            continue;
        }
        counts[v] -= 1;
        filling[pos] = v as u32 + 1;
        fill(pos + 1, cells, attacking, counts, filling, acc);
        counts[v] += 1;
    }
}

fn statistics(cells: &[Cell], attacking: &[(usize, usize)], filling: &[u32]) -> (i64, i64) {
    let mut maj = 0i64;
    let mut arm_correction = 0i64;
    for (i, cell) in cells.iter().enumerate() {
        if let Some(b) = cell.below {
            if filling[i] > filling[b] {
                maj += cell.leg_plus_one as i64;
                arm_correction += cell.arm as i64;
            }
        }
    }
    let mut inversions = 0i64;
    for &(i, j) in attacking {
        if filling[i] > filling[j] {
            inversions += 1;
        }
    }
    (inversions - arm_correction, maj)
}

/// The Macdonald polynomial as a `SymFunc` with the `(q, t)` parameters
/// substituted by arbitrary polynomials (e.g. `z^2, w^2`).
pub fn macdonald_symfunc(mu: &Partition, q_image: &Poly, t_image: &Poly) -> Result<SymFunc> {
    let q = sym("q");
    let t = sym("t");
    let exp = macdonald_modified(mu)?;
    let mut f = SymFunc::zero(1, Basis::Monomial);
    for (key, c) in exp.iter() {
        let image = c.substitute(&[(q, q_image.clone()), (t, t_image.clone())])?;
        f.terms.insert(vec![key.clone()], Rf::from_poly(&image));
    }
    Ok(f)
}

/// Variables of the coefficient ring, exposed for tests and rendering.
pub fn qt_symbols() -> (Symbol, Symbol) {
    (sym("q"), sym("t"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly_from_coeffs;
    use crate::symfunc::basis_element;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn qt_poly(pairs: &[((i64, i64), i64)]) -> Poly {
        let (q, t) = qt_symbols();
        let mut p = Poly::zero(&[q, t]);
        for &((qe, te), c) in pairs {
            p = p.add(
                &Poly::monomial(&[q, t], q, qe, rat(c)).mul(&Poly::monomial(&[q, t], t, te, rat(1))),
            );
        }
        p
    }

    #[test]
    fn smallest_cases() {
        // H~_(1) = m_(1)
        let h1 = macdonald_modified(&part(&[1])).unwrap();
        assert_eq!(h1[&part(&[1])], qt_poly(&[((0, 0), 1)]));

        // H~_(2) = m_2 + (1+q) m_11
        let h2 = macdonald_modified(&part(&[2])).unwrap();
        assert_eq!(h2[&part(&[2])], qt_poly(&[((0, 0), 1)]));
        assert_eq!(h2[&part(&[1, 1])], qt_poly(&[((0, 0), 1), ((1, 0), 1)]));

        // H~_(1,1) = m_2 + (1+t) m_11
        let h11 = macdonald_modified(&part(&[1, 1])).unwrap();
        assert_eq!(h11[&part(&[2])], qt_poly(&[((0, 0), 1)]));
        assert_eq!(h11[&part(&[1, 1])], qt_poly(&[((0, 0), 1), ((0, 1), 1)]));
    }

    #[test]
    fn hook_shape_21() {
        // H~_(2,1) = m_3 + (1+q+t) m_21 + (1+2q+2t+qt) m_111
        let h = macdonald_modified(&part(&[2, 1])).unwrap();
        assert_eq!(h[&part(&[3])], qt_poly(&[((0, 0), 1)]));
        assert_eq!(
            h[&part(&[2, 1])],
            qt_poly(&[((0, 0), 1), ((1, 0), 1), ((0, 1), 1)])
        );
        assert_eq!(
            h[&part(&[1, 1, 1])],
            qt_poly(&[((0, 0), 1), ((1, 0), 2), ((0, 1), 2), ((1, 1), 1)])
        );
    }

    #[test]
    fn duality_swaps_q_and_t() {
        let (q, t) = qt_symbols();
        for n in 1..=5u32 {
            for lam in crate::partitions::partitions_of(n).unwrap() {
                let a = macdonald_modified(&lam).unwrap();
                let b = macdonald_modified(&lam.conjugate()).unwrap();
                for (key, c) in a.iter() {
                    let swapped = c
                        .substitute(&[(q, Poly::var(t)), (t, Poly::var(q))])
                        .unwrap();
                    assert_eq!(&swapped, &b[key], "lambda {} key {}", lam, key);
                }
            }
        }
    }

    #[test]
    fn specialization_at_one_one() {
        // H~_lambda(x; 1, 1) = (m_1)^n
        let (q, t) = qt_symbols();
        for n in 1..=5u32 {
            for lam in crate::partitions::partitions_of(n).unwrap() {
                let h = macdonald_modified(&lam).unwrap();
                let mut f = SymFunc::zero(1, Basis::Monomial);
                for (key, c) in h.iter() {
                    let v = c
                        .substitute(&[(q, Poly::one(&[])), (t, Poly::one(&[]))])
                        .unwrap();
                    f.terms
                        .insert(vec![key.clone()], Rf::from_poly(&v));
                }
                let m1 = basis_element(Basis::Monomial, &part(&[1]));
                let mut power = basis_element(Basis::Monomial, &Partition::empty());
                for _ in 0..n {
                    power = power.mul(&m1).unwrap();
                }
                assert_eq!(f, power, "lambda {}", lam);
            }
        }
    }

    #[test]
    fn normalization_against_schur() {
        // <H~_lambda, s_(n)> = 1 and <H~_lambda, s_(1^n)> = q^{n(lambda')} t^{n(lambda)}
        let (q, t) = qt_symbols();
        for n in 1..=5u32 {
            for lam in crate::partitions::partitions_of(n).unwrap() {
                let h = macdonald_modified(&lam).unwrap();
                let mut f = SymFunc::zero(1, Basis::Monomial);
                for (key, c) in h.iter() {
                    f.terms.insert(vec![key.clone()], Rf::from_poly(c));
                }
                let s_row = basis_element(Basis::Schur, &part(&[n]));
                assert_eq!(f.hall_inner(&s_row).unwrap(), Rf::one(), "row {}", lam);

                let s_col = basis_element(Basis::Schur, &Partition::new(vec![1; n as usize]));
                let v = f.hall_inner(&s_col).unwrap();
                let expect = Poly::monomial(&[q, t], q, lam.conjugate().n_stat(), rat(1)).mul(
                    &Poly::monomial(&[q, t], t, lam.n_stat(), rat(1)),
                );
                assert_eq!(v, Rf::from_poly(&expect), "col {}", lam);
            }
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            macdonald_modified(&part(&[7])),
            Err(Error::BoundExceeded(_))
        ));
        let _ = poly_from_coeffs(qt_symbols().0, &[(0, 1)]);
    }
}
