//! End-to-end acceptance checks. Prints one pass/fail line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use macops::arith::special::binom2;
use macops::arith::{PMono, Param, Poly, RatFn, XPoly};
use macops::jack::{jack_j, jack_limit_verify, jack_lowering_coeff, jack_lowering_verify};
use macops::macdonald::{
    eigen_check, identity_suite, is_integral, kostka_matrix, lowering_verify,
    macdonald_j_raising, macdonald_p_eigen, LoweringKind, RaisingKind, Suite,
};
use macops::partition::{c_alpha, c_integral, partitions_of, Partition};
use macops::qdiff::{
    apply_determinantal, apply_factorized_qt, build_cached, OpKind, OperatorSpec, Shift,
};
use macops::symmetric::expand_monomial;
use macops::Result;

type Check = fn() -> Result<Vec<String>>;

fn ensure(ok: bool, what: impl FnOnce() -> String, failures: &mut Vec<String>) {
    if !ok {
        failures.push(what());
    }
}

fn partitions_up_to(d: u32) -> Vec<Partition> {
    (0..=d).flat_map(partitions_of).collect()
}

fn raising_range() -> Vec<(Partition, usize)> {
    partitions_up_to(6)
        .into_iter()
        .map(|l| {
            let n = l.len().max(2);
            (l, n)
        })
        .filter(|(_, n)| *n <= 6)
        .collect()
}

fn criterion_1() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for (lambda, n) in raising_range() {
        let eigen = macdonald_p_eigen(&lambda, n)?;
        let plus = macdonald_j_raising(&lambda, n, RaisingKind::Kplus)?;
        let minus = macdonald_j_raising(&lambda, n, RaisingKind::Kminus)?;
        let c = RatFn::from_poly(c_integral(&lambda));
        let scaled = eigen.p.map_coeffs(|x| x.mul(&c));
        let j_as_rat = plus.j.map_coeffs(|x| RatFn::from_poly(x.clone()));
        ensure(plus.j == minus.j, || format!("{lambda}: K+ and K- differ"), &mut bad);
        ensure(j_as_rat == scaled, || format!("{lambda}: K+ differs from c P"), &mut bad);
    }
    Ok(bad)
}

fn criterion_2() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for (lambda, n) in raising_range() {
        let j = macdonald_j_raising(&lambda, n, RaisingKind::Kplus)?.j;
        ensure(is_integral(&j), || format!("{lambda}: J not in Z[q,t]"), &mut bad);
        let c = RatFn::from_poly(c_integral(&lambda));
        for (mu, x) in macdonald_p_eigen(&lambda, n)?.p.terms() {
            let y = x.mul(&c);
            ensure(
                y.den().is_one() && y.num().is_polynomial(),
                || format!("{lambda}: c P has coefficient {y} at {mu}"),
                &mut bad,
            );
        }
    }
    Ok(bad)
}

fn criterion_3() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for d in 1..=5 {
        let k = kostka_matrix(d)?;
        for row in &k.entries {
            for c in row {
                ensure(
                    c.is_polynomial() && c.only_involves(&[Param::Q, Param::T]),
                    || format!("d={d}: entry {c} not in Z[q,t]"),
                    &mut bad,
                );
            }
        }
        if let Err(e) = k.check_duality() {
            bad.push(format!("d={d}: {e}"));
        }
        if d == 2 {
            let want = vec![vec![Poly::one(), Poly::t()], vec![Poly::q(), Poly::one()]];
            ensure(k.entries == want, || format!("d=2 matrix {:?}", k.entries), &mut bad);
        }
    }
    Ok(bad)
}

fn criterion_4() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for (lambda, n) in raising_range() {
        let j = macdonald_j_raising(&lambda, n, RaisingKind::Kminus)?.j;
        if let Err(e) = eigen_check(&j, &lambda, n) {
            bad.push(format!("{lambda}: {e}"));
        }
    }
    Ok(bad)
}

fn criterion_5() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let mut notes = Vec::new();
    for n in 1..=5 {
        for m in 0..=n {
            for suite in [Suite::ERaising, Suite::EGenerating, Suite::ESlices] {
                for r in identity_suite(suite, n, m)? {
                    if let Some(note) = &r.note {
                        if n == 5 && m == 2 {
                            notes.push(note.clone());
                        }
                    }
                    ensure(r.passed(), || r.line(), &mut bad);
                }
            }
        }
    }
    for n in 1..=3 {
        for m in 1..=n {
            for suite in [Suite::KernelSymmetry, Suite::KernelPlus, Suite::KernelMinus] {
                for r in identity_suite(suite, n, m)? {
                    ensure(r.passed(), || r.line(), &mut bad);
                }
            }
        }
    }
    for note in notes {
        println!("    note: {note}");
    }
    Ok(bad)
}

fn monomials(n: usize, max: u32) -> Vec<(Partition, XPoly<Poly>)> {
    partitions_up_to(max)
        .into_iter()
        .filter(|mu| mu.len() <= n)
        .map(|mu| {
            let f = expand_monomial::<Poly>(&mu, n).expect("fits");
            (mu, f)
        })
        .collect()
}

fn criterion_6() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let to_t = |c: &Poly| c.subst_monomial(Param::Q, &PMono::var(Param::T, 1));
    let specs = [
        OperatorSpec::dx(),
        OperatorSpec::generator(OpKind::KGen),
        OperatorSpec::generator(OpKind::LGen),
        OperatorSpec::generator(OpKind::MGen),
        OperatorSpec::generator(OpKind::NGen),
    ];
    for n in 1..=4 {
        for (mu, f) in monomials(n, 4) {
            for spec in &specs {
                let op = build_cached(spec, n)?;
                let direct = op.apply(&f)?;
                let det = apply_determinantal(spec, &f, n)?;
                ensure(direct == det, || format!("{spec:?} n={n} m_{mu}: determinant"), &mut bad);
                let fact = apply_factorized_qt(spec, &f, n)?;
                ensure(
                    direct.map_coeffs(to_t) == fact,
                    || format!("{spec:?} n={n} m_{mu}: q=t product"),
                    &mut bad,
                );
            }
        }
    }
    Ok(bad)
}

fn criterion_7() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for n in 1..=4 {
        for lambda in partitions_up_to(5) {
            if lambda.len() > n {
                continue;
            }
            for m in lambda.len().max(1)..=n {
                for kind in [LoweringKind::Mplus, LoweringKind::Mminus] {
                    if let Err(e) = lowering_verify(&lambda, m, n, kind) {
                        bad.push(format!("{lambda} m={m} n={n} {kind:?}: {e}"));
                    }
                }
            }
        }
    }
    Ok(bad)
}

fn criterion_8() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for n in 1..=3 {
        for m in 0..=n {
            let plus = build_cached(&OperatorSpec::kplus(m), n)?;
            let minus = build_cached(&OperatorSpec::kminus(m), n)?;
            let c = Poly::t().neg().pow(m as u32).mul(&Poly::t_pow(binom2(m)));
            let dual = plus.dualize().then_shift(&Shift::all(n)).scale(&c);
            for (mu, f) in monomials(n, 3) {
                let lhs = minus.apply(&f)?;
                let rhs = dual.apply(&f)?;
                ensure(lhs == rhs, || format!("n={n} m={m} m_{mu}"), &mut bad);
            }
        }
    }
    Ok(bad)
}

fn criterion_9() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for lambda in partitions_up_to(5) {
        let n = lambda.len().max(2);
        let j = jack_j(&lambda, n)?;
        ensure(
            j.j.coeff(&lambda) == c_alpha(&lambda),
            || format!("{lambda}: leading coefficient"),
            &mut bad,
        );
        ensure(
            j.j.terms().iter().all(|(_, c)| c.is_polynomial() && c.only_involves(&[Param::A])),
            || format!("{lambda}: not in Z[alpha]"),
            &mut bad,
        );
        if lambda.weight() <= 4 {
            for alpha in 1..=3 {
                if let Err(e) = jack_limit_verify(&lambda, n, alpha) {
                    bad.push(format!("{lambda} alpha={alpha}: {e}"));
                }
            }
        }
    }
    for n in 1..=4 {
        for lambda in partitions_up_to(4) {
            if lambda.len() > n {
                continue;
            }
            for m in lambda.len().max(1)..=n {
                if let Err(e) = jack_lowering_verify(&lambda, m, n) {
                    bad.push(format!("lowering {lambda} m={m} n={n}: {e}"));
                }
            }
        }
    }
    let a = Poly::alpha();
    let want = a.mul_int(2);
    ensure(
        jack_lowering_coeff(&Partition::new(vec![1])?, 1, 2)? == want,
        || "lowering coefficient for (1), m=1, n=2".into(),
        &mut bad,
    );
    Ok(bad)
}

fn criterion_10() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for n in 1..=3 {
        for r in 0..=n {
            for s in 0..=n {
                let dr = build_cached(&OperatorSpec::d(r), n)?;
                let ds = build_cached(&OperatorSpec::d(s), n)?;
                for (mu, f) in monomials(n, 3) {
                    let a = dr.apply(&ds.apply(&f)?)?;
                    let b = ds.apply(&dr.apply(&f)?)?;
                    ensure(a == b, || format!("[D_{r}, D_{s}] on m_{mu}, n={n}"), &mut bad);
                }
            }
        }
    }
    Ok(bad)
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 10] = [
        ("raising recursions agree with the eigen oracle", criterion_1),
        ("integrality of J", criterion_2),
        ("Kostka integrality and duality", criterion_3),
        ("full eigen-equations", criterion_4),
        ("identity suites", criterion_5),
        ("determinantal and product forms", criterion_6),
        ("lowering operators", criterion_7),
        ("duality of the raising operators", criterion_8),
        ("Jack limit", criterion_9),
        ("commutativity of the difference operators", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = match check() {
            Ok(bad) if bad.is_empty() => None,
            Ok(bad) => Some(bad.join("; ")),
            Err(e) => Some(e.to_string()),
        };
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            None => println!("criterion {:>2}: pass  {name} ({secs:.2}s)", i + 1),
            Some(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
