use proptest::prelude::*;

use pdyn_core::dermap::{build_phi, fixed_point_form, iterate, multiplier, periodic_report, psi_sequence, DEFAULT_SIZE_CAP};
use pdyn_core::lattes::{cm_automorphism_suite, division_polynomial, doubling_from_torsion, lattes_map, torsion_forms};
use pdyn_core::moduli::{conjugate_form, conjugate_map, invariance_check, is_automorphism, normal_form};
use pdyn_core::polyalg::{discriminant, rational_roots, resultant, squarefree};
use pdyn_core::{q, BiForm, EllCurve, Field, Fp, Modulus, Moebius, ProjPoint, QForm, Rational, UniPoly};

fn qform(coeffs: &[i64]) -> QForm {
    BiForm::from_ascending(&(), coeffs.iter().map(|&c| q(c)).collect())
}

fn coeffs(d: std::ops::RangeInclusive<usize>, bound: i64) -> impl Strategy<Value = Vec<i64>> {
    d.prop_flat_map(move |d| prop::collection::vec(-bound..=bound, d + 1))
}

fn squarefree_qform(d: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = QForm> {
    coeffs(d, 9).prop_map(|c| qform(&c)).prop_filter("squarefree", |f| !f.is_zero() && squarefree(f))
}

fn moebius() -> impl Strategy<Value = Moebius<Rational>> {
    prop::array::uniform4(-5i64..=5).prop_filter_map("singular", |e| Moebius::from_i64s(&(), e).ok())
}

/// Multipliers at all period-n points, including infinity when it is periodic.
fn full_spectrum(f: &QForm, n: usize) -> UniPoly<Rational> {
    let r = periodic_report(f, n, DEFAULT_SIZE_CAP).unwrap();
    let mut chi = r.multiplier_charpoly.clone();
    if r.infinity_periodic {
        let phi = build_phi(f).unwrap();
        let lam = multiplier(&phi, &ProjPoint::infinity(&()), n).unwrap();
        chi = &chi * &UniPoly::linear_root(&lam);
    }
    chi
}

/// Newton interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[Rational], ys: &[Rational]) -> UniPoly<Rational> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (dd[i].clone() - dd[i - 1].clone()) / (xs[i].clone() - xs[i - j].clone());
        }
    }
    let mut p = UniPoly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        p = &(&p * &UniPoly::linear_root(&xs[i])) + &UniPoly::constant(dd[i].clone());
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn euler_identity_over_q(c in coeffs(1..=8, 20)) {
        let f = qform(&c);
        prop_assume!(!f.is_zero());
        let (fx, fy) = f.partials();
        let d = f.degree() as i64;
        prop_assert!((&(&fx.times_x() + &fy.times_y()) - &f.scale(&q(d))).is_zero());
    }

    #[test]
    fn euler_identity_over_fp(c in coeffs(1..=8, 200), p in prop::sample::select(vec![2u64, 3, 5, 7, 101])) {
        let m = Modulus::new(p).unwrap();
        let f = BiForm::from_ascending(&m, c.iter().map(|&v| Fp::new(v, m)).collect());
        prop_assume!(!f.is_zero());
        let (fx, fy) = f.partials();
        let d = Fp::from_i64(&m, f.degree() as i64);
        prop_assert!((&(&fx.times_x() + &fy.times_y()) - &f.scale(&d)).is_zero());
    }

    #[test]
    fn resultant_is_multiplicative(a in coeffs(1..=3, 4), b in coeffs(1..=3, 4), c in coeffs(1..=3, 4)) {
        let (p, r, s) = (qform(&a), qform(&b), qform(&c));
        prop_assume!(!p.is_zero() && !r.is_zero() && !s.is_zero());
        prop_assert_eq!(resultant(&(&p * &r), &s), resultant(&p, &s) * resultant(&r, &s));
    }

    #[test]
    fn resultant_vanishes_iff_common_root(a in coeffs(1..=4, 3), b in coeffs(1..=4, 3)) {
        let (p, r) = (qform(&a), qform(&b));
        prop_assume!(!p.is_zero() && !r.is_zero());
        let both_at_infinity = p.leading().is_zero() && r.leading().is_zero();
        let common_affine = p.dehomogenize().gcd(&r.dehomogenize()).degree().unwrap_or(0) > 0;
        prop_assert_eq!(resultant(&p, &r).is_zero(), both_at_infinity || common_affine);
    }

    #[test]
    fn discriminant_matches_root_product(lead in 1i64..=4, roots in prop::collection::btree_set(-6i64..=6, 2..=5)) {
        let roots: Vec<i64> = roots.into_iter().collect();
        let d = roots.len();
        let f: QForm = roots.iter().fold(BiForm::from_i64s_desc(&(), &[lead]), |acc, &r| &acc * &BiForm::from_i64s_desc(&(), &[1, -r]));
        let mut prod = Field::pow(&q(lead), 2 * d as u64 - 2);
        for i in 0..d {
            for j in i + 1..d {
                prod *= Field::pow(&q(roots[i] - roots[j]), 2);
            }
        }
        prop_assert_eq!(discriminant(&f).unwrap().value, prod);
    }

    #[test]
    fn gcd_divides_and_keeps_common_factor(g in coeffs(0..=3, 6), u in coeffs(0..=4, 6), v in coeffs(0..=4, 6)) {
        let p = |c: &[i64]| UniPoly::<Rational>::from_i64s(&(), c);
        let (g, u, v) = (p(&g), p(&u), p(&v));
        prop_assume!(!g.is_zero() && !u.is_zero() && !v.is_zero());
        let (a, b) = (&g * &u, &g * &v);
        let h = a.gcd(&b);
        prop_assert!(a.exact_div(&h).is_some() && b.exact_div(&h).is_some());
        prop_assert!(h.exact_div(&g.monic().unwrap()).is_some());
        let (ra, rb) = (a.exact_div(&h).unwrap(), b.exact_div(&h).unwrap());
        prop_assert!(!ra.is_zero() && !rb.is_zero());
        // the cofactors share no root: their resultant is nonzero
        let (da, db) = (ra.degree().unwrap(), rb.degree().unwrap());
        prop_assert!(!resultant(&BiForm::homogenize(&ra, da).unwrap(), &BiForm::homogenize(&rb, db).unwrap()).is_zero());
    }

    #[test]
    fn fixed_point_form_is_multiple_of_f(f in squarefree_qform(3..=7)) {
        let phi = build_phi(&f).unwrap();
        prop_assert!(fixed_point_form(&phi).is_scalar_multiple_of(&f));
    }

    #[test]
    fn iterate_degree_law(f in squarefree_qform(3..=4), n in 1usize..=3) {
        let phi = build_phi(&f).unwrap();
        prop_assert_eq!(iterate(&phi, n, DEFAULT_SIZE_CAP).unwrap().degree(), phi.degree().pow(n as u32));
    }

    #[test]
    fn psi_degree_law(f in squarefree_qform(3..=5), n in 1usize..=3) {
        prop_assume!(f.degree() < 5 || n < 3);
        for step in psi_sequence(&f, n, DEFAULT_SIZE_CAP).unwrap() {
            prop_assert!(step.degree_law_holds(), "n = {}: {} vs {}", step.n, step.degree(), step.expected_degree);
        }
    }

    #[test]
    fn conjugation_is_a_right_action(f in squarefree_qform(3..=5), g in moebius(), h in moebius()) {
        let phi = build_phi(&f).unwrap();
        let lhs = conjugate_map(&conjugate_map(&phi, &g), &h);
        prop_assert_eq!(lhs, conjugate_map(&phi, &g.compose(&h)));
    }

    #[test]
    fn family_closure(f in squarefree_qform(3..=6), g in moebius()) {
        let lhs = build_phi(&conjugate_form(&f, &g)).unwrap();
        prop_assert_eq!(lhs, conjugate_map(&build_phi(&f).unwrap(), &g));
    }

    #[test]
    fn multiplier_spectrum_is_conjugation_invariant(f in squarefree_qform(3..=3), g in moebius(), n in 1usize..=2) {
        let h = conjugate_form(&f, &g);
        prop_assert_eq!(full_spectrum(&f, n), full_spectrum(&h, n));
    }

    #[test]
    fn charpoly_matches_resultant_oracle(f in squarefree_qform(3..=3), n in 1usize..=2) {
        let step = psi_sequence(&f, n, DEFAULT_SIZE_CAP).unwrap().pop().unwrap();
        let (a, b) = (&step.a, &step.b);
        let num = &(&a.derivative() * b) - &(a * &b.derivative());
        let den = b * b;
        let k = step.psi.degree().unwrap();
        let m = num.degree().unwrap_or(0).max(den.degree().unwrap_or(0));
        let psi_form = BiForm::homogenize(&step.psi, k).unwrap();
        let ts: Vec<Rational> = (0..=k as i64).map(q).collect();
        let vals: Vec<Rational> = ts
            .iter()
            .map(|t| resultant(&psi_form, &BiForm::homogenize(&(&den.scale(t) - &num), m).unwrap()))
            .collect();
        let res = interpolate(&ts, &vals).monic().unwrap();
        prop_assert_eq!(res, periodic_report(&f, n, DEFAULT_SIZE_CAP).unwrap().multiplier_charpoly);
    }

    #[test]
    fn normal_form_is_idempotent(roots in prop::collection::btree_set(-12i64..=12, 3..=5), inf in any::<bool>()) {
        let mut pts: Vec<ProjPoint<Rational>> = roots.into_iter().map(|r| ProjPoint::affine(q(r))).collect();
        if inf {
            pts.push(ProjPoint::infinity(&()));
        }
        let f = BiForm::from_roots(&(), &pts);
        prop_assume!(f.degree() >= 3);
        let first = normal_form(&f).unwrap();
        let second = normal_form(&first.form).unwrap();
        prop_assert!(second.moebius.is_identity());
        let mut a = first.alphas.clone();
        let mut b = second.alphas.clone();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn char_p_dividing_d_gives_identity(c in prop::collection::vec(-50i64..=50, 6), case in 0usize..4) {
        let (p, d) = [(2u64, 2usize), (2, 4), (3, 3), (5, 5)][case];
        let m = Modulus::new(p).unwrap();
        let f = BiForm::from_ascending(&m, c[..=d].iter().map(|&v| Fp::new(v, m)).collect());
        prop_assume!(!f.is_zero() && f.degree() == d && squarefree(&f));
        prop_assert!(build_phi(&f).unwrap().is_identity());
    }

    #[test]
    fn invariance_implies_automorphism(b in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3, 5])) {
        let e = EllCurve::from_i64s(&(), 0, b, 0).unwrap();
        let g = Moebius::diag(q(-1), q(1)).unwrap();
        for (_, f) in torsion_forms(&e).unwrap() {
            if invariance_check(&f, &g).is_some() {
                prop_assert!(is_automorphism(&build_phi(&f).unwrap(), &g));
            }
        }
        prop_assert!(cm_automorphism_suite(&e).unwrap().checks.iter().all(|c| c.chi.is_some() && c.automorphism));
    }

    #[test]
    fn lattes_doubling_matches_newton(a in -6i64..=6, b in -6i64..=6, c in -6i64..=6) {
        let e = EllCurve::from_i64s(&(), a, b, c);
        prop_assume!(e.is_ok());
        let e = e.unwrap();
        let (newton, equal) = doubling_from_torsion(&e).unwrap();
        prop_assert!(equal);
        prop_assert_eq!(newton.map, lattes_map(&e, 2).unwrap().affine);
        let g = e.g();
        let closed = &(&(&g * &g.derivative().derivative()) * &UniPoly::constant(q(2))) - &(&g.derivative() * &g.derivative());
        let psi3 = division_polynomial(&e, 3);
        prop_assert_eq!(psi3.as_plain(), Some(&closed));
    }
}

#[test]
fn rational_roots_of_normal_form_example() {
    let f = qform(&[0, 2, -3, 1, 0]);
    let roots: Vec<_> = rational_roots(&f).unwrap().into_iter().map(|(p, _)| p.to_string()).collect();
    assert_eq!(roots.len(), 4);
    for r in ["0", "1", "2", "inf"] {
        assert!(roots.contains(&r.to_string()));
    }
}
