//! Explicit finite fields of odd characteristic.
//!
//! Elements are codes `0..p^e` packing base-`p` digit vectors (constant
//! digit first).  For `e > 1` the modulus is the monic irreducible whose
//! coefficient vector has the smallest packed code, so tables are
//! reproducible without external constants.  Construction finds a
//! multiplicative generator, which both verifies cyclicity and provides
//! discrete logarithms.

use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct FiniteField {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    /// coefficients `c_0..c_{e-1}` of the monic modulus `x^e + sum c_i x^i`
    pub modulus: Vec<u64>,
    pub generator: u64,
    exp_table: Vec<u64>,
    log_table: Vec<u32>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FiniteField {
    pub fn new(p: u64, e: u32) -> Result<FiniteField> {
        if p < 3 || !is_prime(p) || p % 2 == 0 {
            return Err(Error::RangeError(format!(
                "characteristic must be an odd prime, got {}",
                p
            )));
        }
        if e == 0 {
            return Err(Error::RangeError("degree must be positive".into()));
        }
        let q = p.checked_pow(e).filter(|&q| q <= crate::oracle::FIELD_BUDGET).ok_or_else(
            || Error::BudgetExceeded(format!("field size {}^{} too large", p, e)),
        )?;
        let modulus = if e == 1 {
            Vec::new()
        } else {
            find_modulus(p, e)?
        };
        let mut field = FiniteField {
            p,
            e,
            q,
            modulus,
            generator: 0,
            exp_table: Vec::new(),
            log_table: Vec::new(),
        };
        field.build_log_tables()?;
        Ok(field)
    }

    /// Construct the field of order `q` (auto-factoring the prime power).
    pub fn of_order(q: u64) -> Result<FiniteField> {
        let fs = prime_factors(q);
        if fs.len() != 1 {
            return Err(Error::RangeError(format!("{} is not a prime power", q)));
        }
        let p = fs[0];
        let mut e = 0;
        let mut t = q;
        while t > 1 {
            t /= p;
            e += 1;
        }
        FiniteField::new(p, e)
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    fn digits(&self, x: u64) -> Vec<u64> {
        let mut out = vec![0; self.e as usize];
        let mut x = x;
        for d in out.iter_mut() {
            *d = x % self.p;
            x /= self.p;
        }
        out
    }

    fn pack(&self, digits: &[u64]) -> u64 {
        let mut acc = 0;
        for &d in digits.iter().rev() {
            acc = acc * self.p + d;
        }
        acc
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.e == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.e == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let da = self.digits(a);
        let neg: Vec<u64> = da.iter().map(|&x| (self.p - x) % self.p).collect();
        self.pack(&neg)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.e == 1 {
            return a * b % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let e = self.e as usize;
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // reduce by x^e = -modulus
        for i in (e..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus.iter().enumerate() {
                let idx = i - e + j;
                prod[idx] = (prod[idx] + (self.p - m) * c) % self.p;
            }
        }
        prod.truncate(e);
        self.pack(&prod)
    }

    pub fn pow(&self, mut a: u64, mut n: u64) -> u64 {
        let mut acc = 1;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            n >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroDivisor("field inverse of 0".into()));
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// Discrete logarithm base the stored generator.
    pub fn dlog(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroDivisor("dlog of 0".into()));
        }
        Ok(self.log_table[a as usize] as u64)
    }

    pub fn exp(&self, i: u64) -> u64 {
        self.exp_table[(i % (self.q - 1)) as usize]
    }

    /// All nonzero elements, in generator-power order.
    pub fn units(&self) -> &[u64] {
        &self.exp_table
    }

    fn build_log_tables(&mut self) -> Result<()> {
        let m = self.q - 1;
        let factors = prime_factors(m);
        let mut generator = 0;
        'search: for g in 2..self.q {
            for &f in &factors {
                if self.pow(g, m / f) == 1 {
                    continue 'search;
                }
            }
            generator = g;
            break;
        }
        if generator == 0 {
            return Err(Error::RangeError(
                "multiplicative group has no generator; field construction is broken".into(),
            ));
        }
        self.generator = generator;
        let mut exp_table = Vec::with_capacity(m as usize);
        let mut log_table = vec![0u32; self.q as usize];
        let mut acc = 1;
        for i in 0..m {
            exp_table.push(acc);
            log_table[acc as usize] = i as u32;
            acc = self.mul(acc, generator);
        }
        if acc != 1 {
            return Err(Error::RangeError("generator order mismatch".into()));
        }
        self.exp_table = exp_table;
        self.log_table = log_table;
        Ok(())
    }
}

/// Smallest (by packed code) monic irreducible of degree `e` over `F_p`.
fn find_modulus(p: u64, e: u32) -> Result<Vec<u64>> {
    let total = p.pow(e);
    for code in 0..total {
        let mut digits = vec![0u64; e as usize];
        let mut x = code;
        for d in digits.iter_mut() {
            *d = x % p;
            x /= p;
        }
        if is_irreducible(p, &digits) {
            return Ok(digits);
        }
    }
    Err(Error::RangeError(format!(
        "no irreducible of degree {} over F_{}",
        e, p
    )))
}

/// Irreducibility of `x^e + sum c_i x^i` over `F_p`:
/// `x^{p^e} = x (mod f)` and `gcd(x^{p^{e/l}} - x, f) = 1` for primes `l | e`.
fn is_irreducible(p: u64, coeffs: &[u64]) -> bool {
    let e = coeffs.len() as u32;
    if e == 1 {
        return true;
    }
    let xq = |k: u32| -> Vec<u64> {
        // x^(p^k) mod f by repeated Frobenius powering
        let mut cur = poly_x(e);
        for _ in 0..k {
            cur = poly_powmod(p, coeffs, &cur, p);
        }
        cur
    };
    let xpe = xq(e);
    if xpe != poly_x(e) {
        return false;
    }
    for l in prime_factors(e as u64) {
        let k = e / l as u32;
        let mut diff = xq(k);
        // subtract x
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        let g = poly_gcd_modp(p, &diff, &poly_f(coeffs));
        if g.len() > 1 {
            return false;
        }
    }
    true
}

fn poly_x(e: u32) -> Vec<u64> {
    if e == 1 {
        vec![0] // degree < 1 representation is just the constant; unused
    } else {
        vec![0, 1]
    }
}

fn poly_f(coeffs: &[u64]) -> Vec<u64> {
    let mut f = coeffs.to_vec();
    f.push(1);
    f
}

/// `base(x)^n mod f` where the exponent is `p` (Frobenius step).
fn poly_powmod(p: u64, modulus_coeffs: &[u64], base: &[u64], mut n: u64) -> Vec<u64> {
    let f = poly_f(modulus_coeffs);
    let mut acc = vec![1];
    let mut b = base.to_vec();
    while n > 0 {
        if n & 1 == 1 {
            acc = poly_mulmod(p, &f, &acc, &b);
        }
        b = poly_mulmod(p, &f, &b, &b);
        n >>= 1;
    }
    acc
}

fn poly_mulmod(p: u64, f: &[u64], a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // reduce mod monic f
    let df = f.len() - 1;
    for i in (df..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for j in 0..df {
            prod[i - df + j] = (prod[i - df + j] + (p - f[j]) * c) % p;
        }
    }
    prod.truncate(df.max(1));
    while prod.len() > 1 && *prod.last().unwrap() == 0 {
        prod.pop();
    }
    prod
}

fn poly_gcd_modp(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let norm = |mut v: Vec<u64>| {
        while v.len() > 1 && *v.last().unwrap() == 0 {
            v.pop();
        }
        v
    };
    let is_zero = |v: &[u64]| v.len() == 1 && v[0] == 0;
    let mut a = norm(a.to_vec());
    let mut b = norm(b.to_vec());
    while !is_zero(&b) {
        if b.len() == 1 {
            return vec![1]; // nonzero constant is a unit
        }
        let db = b.len() - 1;
        let lb_inv = mod_inv(*b.last().unwrap(), p);
        while !is_zero(&a) && a.len() - 1 >= db {
            let la = *a.last().unwrap();
            if la != 0 {
                let fct = la * lb_inv % p;
                let shift = a.len() - 1 - db;
                for i in 0..b.len() {
                    a[shift + i] = (a[shift + i] + p - fct * b[i] % p) % p;
                }
            }
            a.pop();
            a = norm(a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let mut pow = p - 2;
    let mut acc = 1u64;
    let mut base = a % p;
    while pow > 0 {
        if pow & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        pow >>= 1;
    }
    acc
}
