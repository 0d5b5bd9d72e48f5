//! Acceptance suite: every criterion runs as one test that prints a single
//! pass/fail line (visible with `--nocapture`) and asserts its stated
//! runtime budget.  All arithmetic is exact; every comparison is identity.

use charstack::nonorient::{
    e_count_nonorient, gamma_counts_gm, involution_count, leading_coeff_table, m_series,
    maintheo_check, product_formula_m, q_symbol, verify_identity, z_series, GammaDatum,
};
use charstack::oracle::{
    gamma_orbit_oracle, rep_count, EtaKind, GroupTable,
};
use charstack::partitions::PartitionTuple;
use charstack::plethysm::pleth_log;
use charstack::poly::{poly_from_coeffs, Poly};
use charstack::punctured::{
    conjecture_checks, denominator_observation, e_count_punctured, hh_mu, is_generic,
    mixed_poincare, ClassSpec,
};
use charstack::ratfun::Rf;
use charstack::series::{QSeries, RfRing};
use charstack::symbol::sym;
use charstack::{rat, Rat};
use num_traits::{One, Signed};
use std::time::Instant;

struct Criterion {
    name: &'static str,
    start: Instant,
    budget_secs: f64,
}

impl Criterion {
    fn new(name: &'static str, budget_secs: f64) -> Criterion {
        Criterion {
            name,
            start: Instant::now(),
            budget_secs,
        }
    }

    fn finish(self, detail: &str) {
        let elapsed = self.start.elapsed().as_secs_f64();
        println!(
            "criterion {}: PASS ({:.2}s) — {}",
            self.name, elapsed, detail
        );
        assert!(
            elapsed < self.budget_secs,
            "criterion {} exceeded its {}s budget ({:.2}s)",
            self.name,
            self.budget_secs,
            elapsed
        );
    }
}

#[test]
fn criterion_01_involution_table() {
    let c = Criterion::new("1 (involution table)", 1.0);
    let expected = [
        "2",
        "q^2 + q + 2",
        "2*q^4 + 2*q^3 + 2*q^2 + 2",
        "q^8 + q^7 + 4*q^6 + 3*q^5 + 3*q^4 + 2*q^3 + 2",
        "2*q^12 + 2*q^11 + 4*q^10 + 4*q^9 + 6*q^8 + 4*q^7 + 4*q^6 + 2*q^5 + 2*q^4 + 2",
    ];
    for (n, want) in expected.iter().enumerate() {
        let got = involution_count(n as u32 + 1).to_string();
        assert_eq!(&got, want, "I_{}", n + 1);
    }
    c.finish("I_1..I_5 match the printed polynomials");
}

#[test]
fn criterion_02_q_series_identities() {
    let c = Criterion::new("2 (q-series identities)", 10.0);
    let names = [
        ("i_log", 10),
        ("i_star_log", 8),
        ("i_star_product", 8),
        ("z_minus1", 8),
        ("m_minus1", 8),
        ("m0_product", 10),
    ];
    for (name, degree) in names {
        let report = verify_identity(name, degree).unwrap();
        assert!(
            report.passed(),
            "{} failed:\n{}",
            name,
            report.render_text()
        );
    }
    // closed form: Log Z_-1 has exactly two nonzero coefficients through T^6
    let l = pleth_log(&z_series(-1, 6).unwrap()).unwrap();
    for n in 3..=6 {
        assert!(l.coeff(n).is_zero(), "Log Z_-1 coefficient T^{}", n);
    }
    c.finish("Log and product identities verified to degree 8-10");
}

#[test]
fn criterion_03_series_pipeline() {
    let c = Criterion::new("3 (W-series pipeline)", 30.0);
    assert_eq!(e_count_nonorient(1, 1).unwrap().to_string(), "2*q - 2");
    assert_eq!(
        e_count_nonorient(1, 2).unwrap().to_string(),
        "3*q^4 - 2*q^3 - 3*q^2 + 2"
    );
    assert_eq!(
        e_count_nonorient(1, 3).unwrap().to_string(),
        "2*q^9 - 2*q^8 + 4*q^7 - 12*q^6 + 10*q^5 - 6*q^4 + 6*q^3 - 2*q^2 + 2*q - 2"
    );
    let m0 = m_series(0, 4).unwrap();
    let q = q_symbol();
    let expect = [
        Poly::one(&[q]),
        Poly::int(&[q], 2),
        poly_from_coeffs(q, &[(1, 1), (0, 3)]),
        poly_from_coeffs(q, &[(1, 2), (0, 6)]),
        poly_from_coeffs(q, &[(2, 1), (1, 4), (0, 9)]),
    ];
    for (n, want) in expect.iter().enumerate() {
        assert_eq!(m0.coeff(n), &Rf::from_poly(want), "M_0 coefficient T^{}", n);
    }
    for rho in [-1, 0, 1, 2] {
        let a = m_series(rho, 6).unwrap();
        let b = product_formula_m(rho, 6).unwrap();
        assert_eq!(a, b, "M_rho = triple product at rho = {}", rho);
    }
    c.finish("printed E-counts, the rho=0 series, and M = product to degree 6");
}

#[test]
fn criterion_04_polynomiality_and_parity() {
    let c = Criterion::new("4 (integrality and parity)", 30.0);
    let mut parity_report = Vec::new();
    for rho in 0..=3i32 {
        for n in 1..=6u32 {
            // e_count_nonorient errors on any non-integer coefficient
            let e = e_count_nonorient(rho, n).unwrap();
            assert!(e.is_polynomial(), "rho={} n={}", rho, n);
            if rho > 0 && n % 2 == 1 {
                let even = charstack::nonorient::all_coeffs_even(&e);
                parity_report.push(format!("rho={} n={}: {}", rho, n, even));
                // observed pattern: reported, not asserted
            }
        }
    }
    c.finish(&format!(
        "integer Laurent polynomials for rho=0..3, n<=6; parity pattern [{}]",
        parity_report.join(", ")
    ));
}

#[test]
fn criterion_05_leading_coefficient_table() {
    let c = Criterion::new("5 (leading coefficients)", 30.0);
    let table = leading_coeff_table(5, 5).unwrap();
    let expected: [[i64; 5]; 5] = [
        [2, 1, 2, 1, 2],
        [2, 1, 2, 1, 2],
        [2, 3, 2, 2, 2],
        [2, 2, 2, 2, 2],
        [2, 2, 2, 2, 2],
    ];
    for (r, row) in expected.iter().enumerate() {
        for (n, &want) in row.iter().enumerate() {
            assert_eq!(
                table[r][n],
                rat(want),
                "leading coefficient at r={} n={}",
                r + 1,
                n + 1
            );
        }
    }
    c.finish("5x5 table reproduced, including the exceptional 3 at (r,n)=(3,2)");
}

#[test]
fn criterion_06_oracle_case_a() {
    let c = Criterion::new("6 (case A oracle)", 300.0);
    let mut cases: Vec<(u32, u64, Vec<u32>)> = vec![
        (1, 3, vec![1, 2, 3]),
        (1, 5, vec![1, 2, 3]),
        (2, 3, vec![1, 2, 3]),
        (2, 5, vec![1, 2, 3]),
        (2, 7, vec![1, 2]),
        (3, 3, vec![1, 2]),
    ];
    let mut checked = 0;
    for (n, q, rs) in cases.drain(..) {
        let g = GroupTable::build(n as usize, q).unwrap();
        for r in rs {
            let count = rep_count(&g, EtaKind::Square, r, &[]).unwrap();
            let ratio = Rat::new(count.into(), (g.order() as i64).into());
            let formula = e_count_nonorient(r as i32 - 2, n)
                .unwrap()
                .eval(&[(q_symbol(), rat(q as i64))])
                .unwrap();
            assert_eq!(ratio, formula, "n={} q={} r={}", n, q, r);
            checked += 1;
        }
    }
    c.finish(&format!(
        "{} brute-force counts equal the closed formulas exactly",
        checked
    ));
}

#[test]
fn criterion_07_gamma_orbits_and_triple_log() {
    let c = Criterion::new("7 (orbit counts and factor logs)", 60.0);
    // direct enumeration vs the polynomials
    for q in [3u64, 5, 7, 9] {
        let counts = gamma_orbit_oracle(q, 4).unwrap();
        let formulas = gamma_counts_gm(4);
        let ev =
            |f: &Rf| f.eval(&[(q_symbol(), rat(q as i64))]).unwrap();
        for d in 1..=4usize {
            assert_eq!(ev(&formulas.n0[d]), rat(counts.n0[d]), "N0 q={} d={}", q, d);
            assert_eq!(
                ev(&formulas.ninf[d]),
                rat(counts.ninf[d]),
                "Ninf q={} d={}",
                q,
                d
            );
            assert_eq!(
                ev(&formulas.nsharp[d]),
                rat(counts.nsharp[d]),
                "N# q={} d={}",
                q,
                d
            );
            if d <= 2 {
                assert_eq!(ev(&formulas.n1[d]), rat(counts.n1[d]), "N1 q={} r={}", q, d);
            }
        }
    }
    // closed forms for the factor logs: the Gm datum with the Z_rho family
    for rho in [-1, 0, 1] {
        let z = z_series(rho, 6).unwrap();
        let z2 = z_series(2 * rho, 6).unwrap();
        let report = maintheo_check(&GammaDatum::gm(), &z, &z, &z2, 6).unwrap();
        assert!(report.passed(), "Gm datum rho={}:\n{}", rho, report.render_text());
    }
    // and on 20 reproducible pseudo-random data
    let mut state = 0x243F6A8885A308D3u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let q = q_symbol();
    for case in 0..20 {
        let rand_poly = |next: &mut dyn FnMut() -> u64| {
            let mut p = Poly::zero(&[q]);
            for e in 0..=2i64 {
                let cv = (next() % 7) as i64 - 3;
                if cv != 0 {
                    p = p.add(&Poly::monomial(&[q], q, e, rat(cv)));
                }
            }
            p
        };
        let datum = GammaDatum {
            n1: rand_poly(&mut next),
            n1_prime: rand_poly(&mut next),
            n1_sharp: rand_poly(&mut next),
        };
        let rand_series = |next: &mut dyn FnMut() -> u64| {
            let mut f = QSeries::one(RfRing, 6);
            for n in 1..=6 {
                let e = (next() % 3) as i64 - 1;
                let cv = (next() % 5) as i64 - 2;
                f.set_slice(n, Rf::from_poly(&Poly::monomial(&[q], q, e, rat(cv))));
            }
            f
        };
        let om0 = rand_series(&mut next);
        let om1 = rand_series(&mut next);
        let ominf = rand_series(&mut next);
        let report = maintheo_check(&datum, &om0, &om1, &ominf, 6).unwrap();
        assert!(
            report.passed(),
            "random datum {}:\n{}",
            case,
            report.render_text()
        );
    }
    c.finish("orbit polynomials match enumeration; factor logs verified on Gm and 20 random data");
}

#[test]
fn criterion_08_case_b_closed_forms() {
    let c = Criterion::new("8 (case B closed forms)", 60.0);
    let report = conjecture_checks("lemma_rk1", 2).unwrap();
    assert!(report.passed(), "{}", report.render_text());

    let q = q_symbol();
    let t = sym("t");
    let mu1 = PartitionTuple::parse("1").unwrap();
    let mu2 = PartitionTuple::parse("2").unwrap();
    let mu11 = PartitionTuple::parse("1,1").unwrap();

    assert_eq!(e_count_punctured(1, 1, &mu1).unwrap(), Rf::one());
    assert_eq!(
        e_count_punctured(1, 1, &mu2).unwrap(),
        Rf::new(Poly::one(&[]), poly_from_coeffs(q, &[(3, 1), (1, -1)])).unwrap()
    );
    assert_eq!(
        e_count_punctured(1, 1, &mu11).unwrap(),
        Rf::new(Poly::one(&[]), poly_from_coeffs(q, &[(1, 1), (0, -1)])).unwrap()
    );

    let qt2 = Poly::monomial(&[q, t], q, 1, Rat::one()).mul(&Poly::monomial(
        &[q, t],
        t,
        2,
        Rat::one(),
    ));
    let one = Poly::one(&[q, t]);
    assert_eq!(
        mixed_poincare(1, 1, &mu1).unwrap(),
        Rf::new(
            Poly::monomial(&[q, t], t, 1, Rat::one()).add(&qt2),
            qt2.sub(&one)
        )
        .unwrap()
    );
    assert_eq!(
        mixed_poincare(1, 1, &mu2).unwrap(),
        Rf::new(Poly::one(&[]), qt2.mul(&qt2.sub(&one)).mul(&qt2.add(&one))).unwrap()
    );
    assert_eq!(
        mixed_poincare(1, 1, &mu11).unwrap(),
        Rf::new(Poly::one(&[]), qt2.sub(&one)).unwrap()
    );

    // consistency of the two specializations: t = -1 recovers the E-count
    let mut checked = 0;
    for (r, k) in [(1u32, 1usize), (2, 1), (1, 2)] {
        for n in 1..=3u32 {
            for mu in tuples_of(n, k) {
                let h = mixed_poincare(r, k, &mu).unwrap();
                let e = e_count_punctured(r, k, &mu).unwrap();
                let at = h.substitute(&[(t, Poly::int(&[], -1))]).unwrap();
                assert_eq!(at, e, "r={} k={} mu={}", r, k, mu);
                checked += 1;
            }
        }
    }
    c.finish(&format!(
        "three closed forms and {} mixed-Poincare/E-count consistency checks",
        checked
    ));
}

fn tuples_of(n: u32, k: usize) -> Vec<PartitionTuple> {
    use charstack::partitions::partitions_of;
    let parts = partitions_of(n).unwrap();
    let mut out: Vec<Vec<charstack::partitions::Partition>> = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for prefix in &out {
            for p in &parts {
                let mut ext = prefix.clone();
                ext.push(p.clone());
                next.push(ext);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|c| PartitionTuple::new(c).unwrap())
        .collect()
}

#[test]
fn criterion_09_oracle_case_b() {
    let c = Criterion::new("9 (case B oracle)", 60.0);
    let mut checked = 0;
    // n = 1: the only generic class is {1}; the count is |Gm(F_q)|
    for q in [3u64, 5, 7] {
        let g = GroupTable::build(1, q).unwrap();
        let cls = g.class_of[g.diagonal(&[1]).unwrap() as usize];
        let count = rep_count(&g, EtaKind::Sigma, 1, &[cls]).unwrap();
        let ratio = Rat::new(count.into(), (g.order() as i64).into());
        let mu = PartitionTuple::parse("1").unwrap();
        let formula = e_count_punctured(1, 1, &mu)
            .unwrap()
            .eval(&[(q_symbol(), rat(q as i64))])
            .unwrap();
        assert_eq!(ratio, formula, "n=1 q={}", q);
        // genericity: determinant is the single eigenvalue 1
        let spec = ClassSpec::new(q - 1, vec![vec![(0, 1)]]).unwrap();
        assert!(is_generic(&spec).generic);
        checked += 1;
    }
    // n = 2 over F_5 and F_7
    for q in [5u64, 7] {
        let g = GroupTable::build(2, q).unwrap();
        let field = &g.field;
        let minus1 = q - 1; // -1 mod p for prime fields
        // mu = ((2)): eigenvalues (-1, -1)
        let spec = ClassSpec::new(
            q - 1,
            vec![vec![(field.dlog(minus1).unwrap(), 2)]],
        )
        .unwrap();
        assert!(is_generic(&spec).generic, "(-1,-1) over F_{}", q);
        let cls = g.class_of[g.diagonal(&[minus1, minus1]).unwrap() as usize];
        let count = rep_count(&g, EtaKind::Sigma, 1, &[cls]).unwrap();
        let ratio = Rat::new(count.into(), (g.order() as i64).into());
        let formula = e_count_punctured(1, 1, &PartitionTuple::parse("2").unwrap())
            .unwrap()
            .eval(&[(q_symbol(), rat(q as i64))])
            .unwrap();
        assert_eq!(ratio, formula, "mu=(2) q={}", q);
        checked += 1;
        // mu = ((1,1)): eigenvalues (xi, xi^{-1}), xi != +-1
        let xi = 2u64;
        let xi_inv = field.inv(xi).unwrap();
        let spec = ClassSpec::new(
            q - 1,
            vec![vec![
                (field.dlog(xi).unwrap(), 1),
                (field.dlog(xi_inv).unwrap(), 1),
            ]],
        )
        .unwrap();
        assert!(is_generic(&spec).generic, "(xi, 1/xi) over F_{}", q);
        let cls = g.class_of[g.diagonal(&[xi, xi_inv]).unwrap() as usize];
        let count = rep_count(&g, EtaKind::Sigma, 1, &[cls]).unwrap();
        let ratio = Rat::new(count.into(), (g.order() as i64).into());
        let formula = e_count_punctured(1, 1, &PartitionTuple::parse("1,1").unwrap())
            .unwrap()
            .eval(&[(q_symbol(), rat(q as i64))])
            .unwrap();
        assert_eq!(ratio, formula, "mu=(1,1) q={}", q);
        checked += 1;
    }
    c.finish(&format!(
        "{} twisted brute-force counts equal the punctured formulas",
        checked
    ));
}

#[test]
fn criterion_10_conjecture_and_hook_identities() {
    let c = Criterion::new("10 (conjecture at desk scale)", 120.0);
    // the displayed identity is a conjecture: report, do not assert
    let report = conjecture_checks("conj_0conj", 4).unwrap();
    if report.passed() {
        println!("  conjectured vanishing holds through degree 4");
    } else {
        println!(
            "  NOTE: conjectured identity fails — offending coefficients follow\n{}",
            report.render_text()
        );
    }
    // the two hook identities hold unconditionally: assert them for |lambda| <= 6
    for name in ["euler_spec", "sign_symmetry"] {
        let r = conjecture_checks(name, 6).unwrap();
        assert!(r.passed(), "{}:\n{}", name, r.render_text());
    }
    c.finish("hook specialization and sign relation verified for all |lambda| <= 6");
}

#[test]
fn criterion_11_denominator_observation() {
    let c = Criterion::new("11 (denominator observation)", 60.0);
    let report = denominator_observation(4).unwrap();
    // reported: print the profile; the observation itself is also asserted
    // since it holds at this scale
    for item in &report.items {
        println!("  {}: {}", item.name, item.value);
    }
    assert!(report.passed(), "{}", report.render_text());
    c.finish("HH denominators divide a power of z^2+1, nontrivial only for mu=(2)");
}

#[test]
fn integrality_support_e_counts_are_nonnegative_counts() {
    // supporting invariant: E-count times |GL_n| is a non-negative integer
    // at odd prime powers (it counts representation-variety points)
    let q = q_symbol();
    for rho in [-1, 0, 1] {
        for n in 1..=4u32 {
            let e = e_count_nonorient(rho, n).unwrap();
            for qv in [3i64, 5, 7, 9] {
                let gl = charstack::nonorient::gl_order(n)
                    .eval(&[(q, rat(qv))])
                    .unwrap();
                let v = e.eval(&[(q, rat(qv))]).unwrap() * gl;
                assert!(v.denom().is_one() && !v.is_negative(), "rho={} n={} q={}", rho, n, qv);
            }
        }
    }
    // punctured side: (q-1) E is a non-negative rational whose product with
    // |GL_n| is a non-negative integer
    for (r, k) in [(1u32, 1usize), (2, 1)] {
        for n in 1..=3u32 {
            for mu in tuples_of(n, k) {
                let e = e_count_punctured(r, k, &mu).unwrap();
                for qv in [3i64, 5, 7] {
                    let qm1 = rat(qv - 1);
                    let v = e.eval(&[(q, rat(qv))]).unwrap() * qm1;
                    assert!(!v.is_negative());
                    let gl = charstack::nonorient::gl_order(n)
                        .eval(&[(q, rat(qv))])
                        .unwrap();
                    let w = e.eval(&[(q, rat(qv))]).unwrap() * gl;
                    assert!(w.denom().is_one() && !w.is_negative());
                }
            }
        }
    }
}

#[test]
fn hh_values_match_closed_forms_and_hand_computation() {
    // frozen oracle from the independent hand expansion of Log Omega at
    // (z, w) = (2, 3): HH_(2) = 1/5, HH_(1,1) = 1, HH_(1) = -1
    let z = sym("z");
    let w = sym("w");
    let at = |f: &Rf| f.eval(&[(z, rat(2)), (w, rat(3))]).unwrap();
    let h1 = hh_mu(1, 1, &PartitionTuple::parse("1").unwrap()).unwrap();
    assert_eq!(at(&h1.value), rat(-1));
    let h2 = hh_mu(1, 1, &PartitionTuple::parse("2").unwrap()).unwrap();
    assert_eq!(at(&h2.value), Rat::new(1.into(), 5.into()));
    let h11 = hh_mu(1, 1, &PartitionTuple::parse("1,1").unwrap()).unwrap();
    assert_eq!(at(&h11.value), rat(1));
}
