//! Rational functions: canonically normalized fractions of sparse Laurent
//! polynomials.
//!
//! Normal form: numerator and denominator are proper polynomials (no
//! negative exponents), share no common factor (including monomial
//! factors), and the denominator is monic under graded-lex.  Two values are
//! mathematically equal iff they are structurally equal.

use crate::gcd::multivar_gcd;
use crate::poly::Poly;
use crate::symbol::Symbol;
use crate::{rat, Error, Rat, Result};
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rf {
    num: Poly,
    den: Poly,
}

impl Rf {
    pub fn new(num: Poly, den: Poly) -> Result<Rf> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor("zero denominator".into()));
        }
        Ok(Rf { num, den }.normalized())
    }

    pub fn from_poly(p: &Poly) -> Rf {
        Rf {
            num: p.clone(),
            den: Poly::one(&[]),
        }
        .normalized()
    }

    pub fn from_rat(c: Rat) -> Rf {
        Rf::from_poly(&Poly::constant(&[], c))
    }

    pub fn from_int(n: i64) -> Rf {
        Rf::from_rat(rat(n))
    }

    pub fn zero() -> Rf {
        Rf::from_int(0)
    }

    pub fn one() -> Rf {
        Rf::from_int(1)
    }

    pub fn var(v: Symbol) -> Rf {
        Rf::from_poly(&Poly::var(v))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn as_rat(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.num.constant_term())
        } else {
            None
        }
    }

    fn normalized(self) -> Rf {
        let Rf { num, den } = self;
        if num.is_zero() {
            return Rf {
                num: Poly::zero(&[]),
                den: Poly::one(&[]),
            };
        }
        // Shift both parts by a joint monomial so they become proper, with
        // no common monomial factor.
        fn joint_shift(num: Poly, den: Poly) -> (Poly, Poly) {
            let num = num.shrink_vars();
            let den = den.shrink_vars();
            let mut vars = num.vars().to_vec();
            vars.extend_from_slice(den.vars());
            vars.sort();
            vars.dedup();
            let mut shifts = Vec::new();
            for &v in &vars {
                let m = num.min_exp_in(v).min(den.min_exp_in(v));
                if m != 0 {
                    shifts.push((v, -m));
                }
            }
            (num.mul_monomial(&shifts), den.mul_monomial(&shifts))
        }
        let (num, den) = joint_shift(num, den);
        let (num, den) = if den.is_constant() {
            (num, den)
        } else if num.is_constant() {
            (num, den)
        } else {
            let g = multivar_gcd(&num, &den);
            if g.is_one() || g.is_constant() {
                (num, den)
            } else {
                (
                    num.exact_div(&g).expect("gcd divides numerator"),
                    den.exact_div(&g).expect("gcd divides denominator"),
                )
            }
        };
        // The gcd quotients live in the Laurent ring; re-shift to proper.
        let (num, den) = joint_shift(num, den);
        // Monic denominator pins the scale.
        let lc = den.leading_coeff();
        let inv = Rat::one() / lc;
        Rf {
            num: num.scale(&inv).shrink_vars(),
            den: den.scale(&inv).shrink_vars(),
        }
    }

    pub fn add(&self, other: &Rf) -> Rf {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return Rf::from_poly(&self.num.add(&other.num));
        }
        let g = multivar_gcd(&self.den, &other.den);
        let (db, dd) = if g.is_one() || g.is_constant() {
            (self.den.clone(), other.den.clone())
        } else {
            (
                self.den.exact_div(&g).unwrap(),
                other.den.exact_div(&g).unwrap(),
            )
        };
        // lcm(den1, den2) = den1 * dd
        let num = self.num.mul(&dd).add(&other.num.mul(&db));
        let den = self.den.mul(&dd);
        Rf { num, den }.normalized()
    }

    pub fn neg(&self) -> Rf {
        Rf {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Rf) -> Rf {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Rf) -> Rf {
        if self.is_zero() || other.is_zero() {
            return Rf::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Rf::from_poly(&self.num.mul(&other.num));
        }
        // cross-cancel to keep intermediates reduced
        let g1 = multivar_gcd(&self.num, &other.den);
        let g2 = multivar_gcd(&other.num, &self.den);
        let (a, d) = if g1.is_constant() {
            (self.num.clone(), other.den.clone())
        } else {
            (
                self.num.exact_div(&g1).unwrap(),
                other.den.exact_div(&g1).unwrap(),
            )
        };
        let (c, b) = if g2.is_constant() {
            (other.num.clone(), self.den.clone())
        } else {
            (
                other.num.exact_div(&g2).unwrap(),
                self.den.exact_div(&g2).unwrap(),
            )
        };
        Rf {
            num: a.mul(&c),
            den: b.mul(&d),
        }
        .normalized()
    }

    pub fn scale(&self, c: &Rat) -> Rf {
        if c.is_zero() {
            return Rf::zero();
        }
        Rf {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Rf> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor("inverse of zero".into()));
        }
        Ok(Rf {
            num: self.den.clone(),
            den: self.num.clone(),
        }
        .normalized())
    }

    pub fn div(&self, other: &Rf) -> Result<Rf> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Rf> {
        if e == 0 {
            return Ok(Rf::one());
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = Rf::one();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Adams endomorphism: every variable raised to the `n`-th power.
    pub fn adams(&self, n: u32) -> Rf {
        if n == 1 {
            return self.clone();
        }
        Rf {
            num: self.num.adams(n),
            den: self.den.adams(n),
        }
        .normalized()
    }

    pub fn substitute(&self, map: &[(Symbol, Poly)]) -> Result<Rf> {
        let num = self.num.substitute(map)?;
        let den = self.den.substitute(map)?;
        if den.is_zero() {
            return Err(Error::ZeroDivisor(
                "substitution sends denominator to zero".into(),
            ));
        }
        Ok(Rf { num, den }.normalized())
    }

    pub fn eval(&self, point: &[(Symbol, Rat)]) -> Result<Rat> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(Error::ZeroDivisor("denominator vanishes at point".into()));
        }
        Ok(self.num.eval(point)? / d)
    }

    /// Rewrite an even function of `v` as a function of `target = v^2`.
    /// A reduced fraction that is globally even has numerator and
    /// denominator either both even or both odd in `v`; the odd case is
    /// fixed by multiplying both by `v`.
    pub fn even_sub(&self, v: Symbol, target: Symbol) -> Result<Rf> {
        let ne = self.num.is_even_in(v);
        let de = self.den.is_even_in(v);
        let (num, den) = if ne && de {
            (self.num.clone(), self.den.clone())
        } else {
            let num = self.num.mul_monomial(&[(v, 1)]);
            let den = self.den.mul_monomial(&[(v, 1)]);
            if !num.is_even_in(v) || !den.is_even_in(v) {
                return Err(Error::OddPowersRemain(v.name().into()));
            }
            (num, den)
        };
        Ok(Rf {
            num: num.even_sub(v, target)?,
            den: den.even_sub(v, target)?,
        }
        .normalized())
    }

    pub fn uses_var(&self, v: Symbol) -> bool {
        self.num.uses_var(v) || self.den.uses_var(v)
    }

    pub fn to_latex(&self) -> String {
        if self.den.is_one() {
            self.num.to_latex()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.num.to_latex(), self.den.to_latex())
        }
    }
}

impl fmt::Display for Rf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = if self.num.num_terms() > 1 {
            format!("({})", self.num)
        } else {
            format!("{}", self.num)
        };
        let den = if self.den.num_terms() > 1 {
            format!("({})", self.den)
        } else {
            format!("{}", self.den)
        };
        write!(f, "{}/{}", num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly_from_coeffs;
    use crate::symbol::sym;

    fn q() -> Symbol {
        sym("q")
    }

    fn qp(coeffs: &[(i64, i64)]) -> Poly {
        poly_from_coeffs(q(), coeffs)
    }

    #[test]
    fn partial_fractions_sum() {
        // 1/(q-1) + 1/(q+1) = 2q/(q^2-1)
        let a = Rf::new(Poly::one(&[]), qp(&[(1, 1), (0, -1)])).unwrap();
        let b = Rf::new(Poly::one(&[]), qp(&[(1, 1), (0, 1)])).unwrap();
        let s = a.add(&b);
        let expect = Rf::new(qp(&[(1, 2)]), qp(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(s, expect);
        assert_eq!(s.to_string(), "2*q/(q^2 - 1)");
    }

    #[test]
    fn normalization_cancels() {
        // (q-1)/(q^2-1) == 1/(q+1)
        let a = Rf::new(qp(&[(1, 1), (0, -1)]), qp(&[(2, 1), (0, -1)])).unwrap();
        let b = Rf::new(Poly::one(&[]), qp(&[(1, 1), (0, 1)])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn multiply_back_through_denominator() {
        let z = sym("z");
        let w = sym("w");
        let zmw = Poly::var(z).sub(&Poly::var(w));
        let z2m1 = poly_from_coeffs(z, &[(2, 1), (0, -1)]);
        let w2 = Poly::monomial(&[w], w, 2, rat(1));
        let onemw2 = Poly::one(&[w]).sub(&w2);
        let den = z2m1.mul(&onemw2);
        let f = Rf::new(zmw.clone(), den.clone()).unwrap();
        let back = f.mul(&Rf::from_poly(&den));
        assert_eq!(back, Rf::from_poly(&zmw));
    }

    #[test]
    fn laurent_normalizes_to_proper_fraction() {
        let f = Rf::from_poly(&poly_from_coeffs(q(), &[(-1, 1)]));
        assert_eq!(f.num(), &Poly::one(&[]));
        assert_eq!(f.den(), &Poly::var(q()));
        assert_eq!(f.to_string(), "1/q");
    }

    #[test]
    fn monic_denominator_is_canonical() {
        // (q-1)/2 stored with denominator 2 -> monic denominator 1
        let f = Rf::new(qp(&[(1, 1), (0, -1)]), qp(&[(0, 2)])).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.to_string(), "1/2*q - 1/2");
        // and equality decides value equality
        let g = Rf::new(qp(&[(1, 2), (0, -2)]), qp(&[(0, 4)])).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn even_image_becomes_rational_in_q() {
        // 1/(z^2+1) at z -> u, w -> 1/u is even in u: equals 1/(q+1)
        let z = sym("z");
        let w = sym("w");
        let u = sym("u");
        let f = Rf::new(Poly::one(&[]), poly_from_coeffs(z, &[(2, 1), (0, 1)])).unwrap();
        let spec = f
            .substitute(&[(z, Poly::var(u)), (w, Poly::monomial(&[u], u, -1, rat(1)))])
            .unwrap();
        let in_q = spec.even_sub(u, q()).unwrap();
        assert_eq!(
            in_q,
            Rf::new(Poly::one(&[]), qp(&[(1, 1), (0, 1)])).unwrap()
        );
    }

    #[test]
    fn even_substitution_with_odd_parts() {
        let u = sym("u");
        let qv = q();
        // (u - u^-1) is odd: u^{d} adjustment applies to u*(...)/u forms.
        // f = (u^2-1)/u is odd; f/u = even? f·u = u^2-1 even, den u^2 even.
        let f = Rf::new(
            poly_from_coeffs(u, &[(2, 1), (0, -1)]),
            Poly::var(u),
        )
        .unwrap();
        assert!(matches!(f.even_sub(u, qv), Err(Error::OddPowersRemain(_))));
        let g = f.mul(&f); // (u^2-1)^2/u^2 is even
        let gq = g.even_sub(u, qv).unwrap();
        let expect = Rf::new(
            qp(&[(2, 1), (1, -2), (0, 1)]),
            Poly::var(qv),
        )
        .unwrap();
        assert_eq!(gq, expect);
    }
}
