use super::*;
use crate::arith::parse_poly;

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn poly(s: &str) -> Poly {
    parse_poly(s).unwrap()
}

#[test]
fn p_two_in_two_variables() {
    let r = macdonald_p_eigen(&part(&[2]), 2).unwrap();
    assert_eq!(r.p.coeff(&part(&[2])), RatFn::one());
    let expected = RatFn::new(poly("(1+q)*(1-t)"), poly("1-q*t"));
    assert_eq!(r.p.coeff(&part(&[1, 1])), expected);
    assert_eq!(r.j.coeff(&part(&[2])), poly("(1-t)*(1-q*t)"));
    assert_eq!(r.j.coeff(&part(&[1, 1])), poly("(1+q)*(1-t)^2"));
}

#[test]
fn single_column_is_scaled_elementary() {
    for m in 1..=4 {
        let lambda = Partition::column(m);
        let r = macdonald_j_raising(&lambda, m, RaisingKind::Kplus).unwrap();
        assert_eq!(r.j.len(), 1);
        let expected = crate::arith::pochhammer_t(&Poly::t(), m as u32);
        assert_eq!(r.j.coeff(&lambda), expected);
    }
    let r = macdonald_j_raising(&part(&[1, 1]), 2, RaisingKind::Kminus).unwrap();
    assert_eq!(r.j.coeff(&part(&[1, 1])), poly("1 - t - t^2 + t^3"));
}

#[test]
fn raising_routes_agree_with_eigen() {
    for d in 1..=4u32 {
        for lambda in crate::partition::partitions_of(d) {
            let n = d as usize;
            let e = macdonald_p_eigen(&lambda, n).unwrap();
            let kp = macdonald_j_raising(&lambda, n, RaisingKind::Kplus).unwrap();
            let km = macdonald_j_raising(&lambda, n, RaisingKind::Kminus).unwrap();
            assert_eq!(kp.j, e.j, "{lambda}");
            assert_eq!(km.j, e.j, "{lambda}");
            assert_eq!(kp.p, e.p, "{lambda}");
            assert!(is_integral(&kp.j));
            assert_eq!(kp.provenance, Provenance::RaisingKplus);
            assert_eq!(e.provenance, Provenance::EigenOracle);
        }
    }
}

#[test]
fn column_orders_agree() {
    for d in 0..=7u32 {
        for lambda in crate::partition::partitions_of(d) {
            assert_eq!(column_order(&lambda), conjugate_order(&lambda));
        }
    }
    assert_eq!(column_order(&part(&[3, 1])), vec![1, 1, 2]);
}

#[test]
fn kostka_degree_two() {
    let k = kostka_matrix(2).unwrap();
    assert_eq!(k.labels, vec![part(&[2]), part(&[1, 1])]);
    assert_eq!(k.entries[0][0], Poly::one());
    assert_eq!(k.entries[0][1], Poly::t());
    assert_eq!(k.entries[1][0], Poly::q());
    assert_eq!(k.entries[1][1], Poly::one());
    k.check_duality().unwrap();
}

#[test]
fn kostka_degree_three_and_stability() {
    let k = kostka_matrix(3).unwrap();
    k.check_duality().unwrap();
    assert_eq!(k.entry(&part(&[3]), &part(&[3])).unwrap(), &Poly::one());
    assert_eq!(
        k.entry(&part(&[2, 1]), &part(&[3])).unwrap(),
        &poly("q + q^2")
    );
    let wider = kostka_matrix_in(3, 4).unwrap();
    assert_eq!(wider.entries, k.entries);
    // specialization q = 0, t = 1 counts tableaux
    for row in &k.entries {
        for c in row {
            assert!(c.is_polynomial());
        }
    }
    assert!(kostka_matrix_in(3, 2).is_err());
    assert!(kostka_matrix(0).is_err());
}

#[test]
fn lowering_examples() {
    for kind in [LoweringKind::Mplus, LoweringKind::Mminus] {
        assert!(lowering_verify(&part(&[2, 1]), 2, 3, kind).unwrap().passed());
        assert!(lowering_verify(&part(&[2]), 2, 2, kind).unwrap().passed());
        assert!(lowering_verify(&part(&[1, 1, 1]), 3, 3, kind).unwrap().passed());
        assert!(lowering_after_raising(&part(&[1]), 2, 2, RaisingKind::Kplus, kind)
            .unwrap()
            .passed());
    }
    assert!(lowering_verify(&part(&[1, 1, 1]), 2, 3, LoweringKind::Mplus).is_err());
}

#[test]
fn length_and_variable_errors() {
    assert!(matches!(
        macdonald_j_raising(&part(&[1, 1, 1]), 2, RaisingKind::Kplus),
        Err(Error::LengthExceedsVars { .. })
    ));
    assert!(macdonald_p_eigen(&part(&[1]), 0).is_err());
}

#[test]
fn eigen_check_rejects_wrong_candidate() {
    let r = macdonald_p_eigen(&part(&[2]), 2).unwrap();
    let bad = r.j.add(&monomial(&part(&[1, 1]), 2));
    assert!(eigen_check(&bad, &part(&[2]), 2).is_err());
}

#[test]
fn suites_pass_small() {
    for suite in Suite::ALL {
        for n in 1..=3 {
            for m in 0..=n {
                if suite.two_alphabet() && m == 0 {
                    continue;
                }
                for r in identity_suite(suite, n, m).unwrap() {
                    assert!(r.passed(), "{}", r.line());
                }
            }
        }
    }
}

#[test]
fn generating_note_records_exponent() {
    let rs = identity_suite(Suite::EGenerating, 2, 1).unwrap();
    let note = rs[1].note.clone().unwrap();
    assert!(note.starts_with("exponent C(n-|I|,2) holds"), "{note}");
}

#[test]
fn suite_names_round_trip() {
    for s in Suite::ALL {
        assert_eq!(s.name().parse::<Suite>().unwrap(), s);
    }
    assert!("nope".parse::<Suite>().is_err());
}
