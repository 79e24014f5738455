use super::*;
use crate::arith::special::binom2;
use crate::arith::xpoly::permutations;
use crate::symmetric::expand_schur;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn x(n: usize, i: usize) -> XPoly<Poly> {
    XPoly::var(n, i)
}

fn indexed_kinds() -> [OpKind; 9] {
    [
        OpKind::D,
        OpKind::KPlus,
        OpKind::KMinus,
        OpKind::MPlus,
        OpKind::MMinus,
        OpKind::Ku,
        OpKind::Lu,
        OpKind::Mu,
        OpKind::Nu,
    ]
}

fn generator_kinds() -> [OpKind; 5] {
    [OpKind::Dx, OpKind::KGen, OpKind::LGen, OpKind::MGen, OpKind::NGen]
}

fn all_specs(n: usize) -> Vec<OperatorSpec> {
    let mut out = Vec::new();
    for kind in indexed_kinds() {
        for m in 0..=n {
            out.push(OperatorSpec::new(kind, m));
        }
    }
    for kind in generator_kinds() {
        out.push(OperatorSpec::generator(kind));
    }
    out
}

/// A small symmetric test polynomial with parameters in its coefficients.
fn probe(n: usize) -> XPoly<Poly> {
    let mut f = expand_schur::<Poly>(&p("2"), n)
        .unwrap()
        .add(&XPoly::constant(n, Poly::q()));
    if n > 1 {
        f = f.add(&expand_schur::<Poly>(&p("1,1"), n).unwrap().scale(&Poly::t()));
    }
    f
}

#[test]
fn d_zero_and_top() {
    for n in 1..=4 {
        assert_eq!(build(&OperatorSpec::d(0), n).unwrap(), QDiffOp::identity(n));
        let top = QDiffOp::identity(n)
            .then_shift(&Shift::all(n))
            .scale(&Poly::t_pow(binom2(n)));
        assert_eq!(build(&OperatorSpec::d(n), n).unwrap(), top);
    }
}

#[test]
fn kminus_zero_is_full_shift() {
    for n in 1..=4 {
        let all = QDiffOp::identity(n).then_shift(&Shift::all(n));
        assert_eq!(build(&OperatorSpec::kminus(0), n).unwrap(), all);
        assert_eq!(build(&OperatorSpec::kplus(0), n).unwrap(), QDiffOp::identity(n));
    }
}

#[test]
fn d1_on_power_sum() {
    let f = x(2, 0).add(&x(2, 1));
    let got = build(&OperatorSpec::d(1), 2).unwrap().apply(&f).unwrap();
    let eig = Poly::one().add(&Poly::t().mul(&Poly::q()));
    assert_eq!(got, f.scale(&eig));
}

#[test]
fn kplus1_on_one() {
    let got = build(&OperatorSpec::kplus(1), 2)
        .unwrap()
        .apply(&XPoly::one(2))
        .unwrap();
    let want = x(2, 0).add(&x(2, 1)).scale(&Poly::one().sub(&Poly::t()));
    assert_eq!(got, want);
}

#[test]
fn top_raising_is_scaled_dx() {
    for n in 1..=4 {
        let all = (0..n).fold(XMono::one(), |m, i| m.mul(&XMono::var(i, 1)));
        let dx = build(&OperatorSpec::dx().with_u(Poly::t()), n).unwrap();
        let mut want = QDiffOp::zero(n);
        for (s, num) in dx.terms() {
            want.add_term(*s, num.mul_mono(&all));
        }
        assert_eq!(build(&OperatorSpec::kplus(n), n).unwrap(), want);
        assert_eq!(build(&OperatorSpec::kminus(n), n).unwrap(), want);
    }
}

#[test]
fn interchanged_sums_match_printed_forms() {
    for n in 1..=4 {
        for spec in all_specs(n) {
            let a = build(&spec, n).unwrap();
            let b = build_printed(&spec, n).unwrap();
            assert_eq!(a, b, "{spec:?} n={n}");
        }
    }
}

#[test]
fn special_values_of_the_u_families() {
    for n in 1..=4 {
        for m in 0..=n {
            let ru = Poly::t_pow(m as i64 - n as i64 + 1);
            let scale = Poly::t_pow(-binom2(n - m));
            let ku = build_printed(&OperatorSpec::ku(m), n).unwrap();
            let lu = build_printed(&OperatorSpec::lu(m), n).unwrap();
            let mu = build_printed(&OperatorSpec::mu(m), n).unwrap();
            let nu = build_printed(&OperatorSpec::nu(m), n).unwrap();
            let one = Poly::one();
            assert_eq!(
                ku.subst(Param::U, &ru).unwrap(),
                build_printed(&OperatorSpec::kplus(m), n).unwrap()
            );
            assert_eq!(
                lu.subst(Param::U, &ru).unwrap().scale(&scale),
                build_printed(&OperatorSpec::kminus(m), n).unwrap()
            );
            assert_eq!(
                mu.subst(Param::U, &one).unwrap(),
                build_printed(&OperatorSpec::mplus(m), n).unwrap()
            );
            assert_eq!(
                nu.subst(Param::U, &one).unwrap().scale(&scale),
                build_printed(&OperatorSpec::mminus(m), n).unwrap()
            );
        }
    }
}

#[test]
fn raising_operators_are_dual() {
    for n in 1..=4 {
        for m in 0..=n {
            let plus = build(&OperatorSpec::kplus(m), n).unwrap();
            let minus = build(&OperatorSpec::kminus(m), n).unwrap();
            let c = Poly::t().neg().pow(m as u32).mul(&Poly::t_pow(binom2(m)));
            let dual = plus.dualize().then_shift(&Shift::all(n)).scale(&c);
            assert_eq!(dual, minus, "n={n} m={m}");
            assert_eq!(plus.dualize().dualize(), plus);
        }
    }
}

#[test]
fn generators_collect_the_indexed_families() {
    let n = 3;
    for (g, k) in [
        (OpKind::KGen, OpKind::Ku),
        (OpKind::LGen, OpKind::Lu),
        (OpKind::MGen, OpKind::Mu),
        (OpKind::NGen, OpKind::Nu),
    ] {
        let gen = build(&OperatorSpec::generator(g), n).unwrap();
        for m in 0..=n {
            let part = build(&OperatorSpec::new(k, m), n).unwrap();
            assert_eq!(gen.coefficient_in(Param::V, m as i16), part);
        }
    }
}

#[test]
fn operators_commute_with_permutations() {
    let n = 3;
    for spec in all_specs(n) {
        let op = build(&spec, n).unwrap();
        for (perm, sign) in permutations(n) {
            assert_eq!(op.conjugate_by(&perm, sign), op, "{spec:?} {perm:?}");
        }
    }
}

#[test]
fn macdonald_operators_commute() {
    let n = 3;
    let f = probe(n);
    let d1 = build(&OperatorSpec::d(1), n).unwrap();
    let d2 = build(&OperatorSpec::d(2), n).unwrap();
    let a = d1.apply(&d2.apply(&f).unwrap()).unwrap();
    let b = d2.apply(&d1.apply(&f).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn determinantal_route_agrees() {
    for n in 1..=3 {
        let f = probe(n);
        for spec in all_specs(n) {
            let direct = build(&spec, n).unwrap().apply(&f).unwrap();
            let det = apply_determinantal(&spec, &f, n).unwrap();
            assert_eq!(direct, det, "{spec:?} n={n}");
        }
    }
}

#[test]
fn product_route_agrees_at_q_equal_t() {
    let to_t = |c: &Poly| c.subst_monomial(Param::Q, &crate::arith::PMono::var(Param::T, 1));
    for n in 1..=3 {
        let f = probe(n).map_coeffs(to_t);
        for spec in all_specs(n) {
            let direct = build(&spec, n)
                .unwrap()
                .apply(&f)
                .unwrap()
                .map_coeffs(to_t);
            let prod = apply_factorized_qt(&spec, &f, n).unwrap();
            assert_eq!(direct, prod, "{spec:?} n={n}");
        }
    }
}

#[test]
fn product_route_needs_q_specialized() {
    let f = XPoly::constant(2, Poly::q());
    assert!(matches!(
        apply_factorized_qt(&OperatorSpec::dx(), &f, 2),
        Err(Error::SpecializationRequired(_))
    ));
}

#[test]
fn product_route_small_cases() {
    // K(u, v) 1 = 1 + v x_1 (1 - u) in one variable
    let got = apply_factorized_qt(&OperatorSpec::generator(OpKind::KGen), &XPoly::one(1), 1).unwrap();
    let c = Poly::v().mul(&Poly::one().sub(&Poly::u()));
    assert_eq!(got, XPoly::one(1).add(&x(1, 0).scale(&c)));
    let got = apply_factorized_qt(&OperatorSpec::generator(OpKind::LGen), &XPoly::one(1), 1).unwrap();
    assert_eq!(got, XPoly::one(1).add(&x(1, 0).scale(&c)));
}

#[test]
fn dx_determinant_small_cases() {
    let one_minus = |p: Poly| Poly::one().sub(&p);
    let got = apply_determinantal(&OperatorSpec::dx(), &XPoly::one(2), 2).unwrap();
    let want = one_minus(Poly::u().mul(&Poly::t())).mul(&one_minus(Poly::u()));
    assert_eq!(got, XPoly::constant(2, want));
    let m1 = x(2, 0).add(&x(2, 1));
    let got = apply_determinantal(&OperatorSpec::dx(), &m1, 2).unwrap();
    let want = one_minus(Poly::u().mul(&Poly::t()).mul(&Poly::q())).mul(&one_minus(Poly::u()));
    assert_eq!(got, m1.scale(&want));
}

#[test]
fn duality_needs_inverted_shifts() {
    // keeping T_q fixed while inverting q, t does not reproduce K^-
    let n = 2;
    for m in 1..=n {
        let plus = build(&OperatorSpec::kplus(m), n).unwrap();
        let minus = build(&OperatorSpec::kminus(m), n).unwrap();
        let c = Poly::t().neg().pow(m as u32).mul(&Poly::t_pow(binom2(m)));
        let fixed = plus
            .map_scalars(|p| p.invert_qt())
            .then_shift(&Shift::all(n))
            .scale(&c);
        assert_ne!(fixed, minus);
    }
}

#[test]
fn antisymmetrized_route_agrees() {
    for n in 1..=4 {
        for lam in ["0", "1", "2", "1,1", "2,1"] {
            let lam = p(lam);
            if lam.len() > n {
                continue;
            }
            let f = expand_schur::<Poly>(&lam, n).unwrap();
            for m in 0..=n {
                for spec in [
                    OperatorSpec::kplus(m),
                    OperatorSpec::kminus(m),
                    OperatorSpec::mplus(m),
                    OperatorSpec::mminus(m),
                ] {
                    let direct = build(&spec, n).unwrap().apply(&f).unwrap();
                    let alt = apply_antisymmetrized(&spec, &f, n).unwrap();
                    assert_eq!(direct, alt, "{spec:?} n={n} λ={lam}");
                }
            }
        }
    }
}

#[test]
fn antisymmetrized_rejects_nonsymmetric() {
    assert!(matches!(
        apply_antisymmetrized(&OperatorSpec::kplus(1), &x(2, 0), 2),
        Err(Error::NotSymmetric(_))
    ));
}

#[test]
fn symmetric_application_matches_generic() {
    for n in 1..=4 {
        for lam in ["0", "1", "2", "1,1", "2,1", "3"] {
            let lam = p(lam);
            if lam.len() > n {
                continue;
            }
            let fx = expand_schur::<Poly>(&lam, n).unwrap();
            let f = to_monomial_basis(&fx, n).unwrap();
            for m in 0..=n {
                for spec in [OperatorSpec::kplus(m), OperatorSpec::kminus(m), OperatorSpec::d(m)] {
                    let op = build(&spec, n).unwrap();
                    let a = op.apply(&fx).unwrap();
                    let b = op.apply_symmetric(&f).unwrap().to_xpoly().unwrap();
                    assert_eq!(a, b, "{spec:?} n={n} λ={lam}");
                }
            }
        }
    }
}

#[test]
fn lowering_below_zero_is_reported() {
    // M^+_1 on the constant 1 leaves x^{-1} terms
    let n = 2;
    let op = build(&OperatorSpec::mplus(1), n).unwrap();
    let f = to_monomial_basis(&XPoly::one(n), n).unwrap();
    let generic = op.apply(&XPoly::one(n)).unwrap();
    match op.apply_symmetric(&f) {
        Ok(r) => assert_eq!(r.to_xpoly().unwrap(), generic),
        Err(e) => {
            assert!(matches!(e, Error::NonExactDivision(_)));
            assert!(!generic.is_polynomial());
        }
    }
}

#[test]
fn index_above_n_is_rejected() {
    assert!(matches!(
        build(&OperatorSpec::kplus(3), 2),
        Err(Error::IndexOutOfRange(_))
    ));
}
