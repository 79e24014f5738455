use macops::arith::special::binom2;
use macops::arith::{PMono, Param, Poly, RatFn, XPoly};
use macops::jack::{jack_j, jack_limit_verify, jack_lowering_verify};
use macops::macdonald::{
    eigen_check, identity_suite, is_integral, kostka_matrix, kostka_matrix_in, lowering_verify,
    macdonald_j_raising, macdonald_p_eigen, LoweringKind, RaisingKind, Suite,
};
use macops::output::to_json_line;
use macops::partition::{c_alpha, c_integral, partitions_of, Partition};
use macops::qdiff::{
    apply_determinantal, apply_factorized_qt, build_cached, OpKind, OperatorSpec, Shift,
};
use macops::report::Report;
use macops::symmetric::expand_monomial;
use macops::{Error, Result};

use crate::run::{check_weight, Failure, Output, Res, EXIT_VERIFY};
use crate::{Format, VerifyArgs};

/// Names accepted by `verify --suite`, with a one-line description.
pub const SUITES: &[(&str, &str)] = &[
    ("raising", "K+ and K- recursions against the eigen oracle"),
    ("eigen", "full eigen-equation in u for every J"),
    ("integrality", "J coefficients in Z[q,t]"),
    ("kostka", "Kostka integrality, duality and stability"),
    ("lowering", "lowering operators on J"),
    ("duality", "K- as the dual of K+"),
    ("commutativity", "the D_r commute"),
    ("determinantal", "determinant and q = t product routes"),
    ("e-identities", "e_raising, e_generating, e_slices"),
    ("kernel", "two-alphabet kernel identities"),
    ("schur-action", "generating operators on Schur functions"),
    ("unit-action", "generating operators on 1"),
    ("jack-limit", "Jack raising against the t -> 1 limit"),
    ("jack-lowering", "Jack lowering coefficients"),
    ("all", "every suite above at default bounds"),
];

fn partitions_up_to(d: u32) -> Vec<Partition> {
    (0..=d).flat_map(partitions_of).collect()
}

fn lam(l: &Partition) -> String {
    format!("({l})")
}

fn expect(ok: bool, lhs: impl FnOnce() -> String, rhs: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::VerificationFailed {
            lhs: lhs(),
            rhs: rhs.to_string(),
        })
    }
}

struct Bounds {
    max_weight: Option<u32>,
    n: Option<usize>,
    m: Option<usize>,
}

impl Bounds {
    fn weight(&self, default: u32) -> u32 {
        self.max_weight.unwrap_or(default)
    }

    fn ns(&self, default_max: usize) -> Vec<usize> {
        match self.n {
            Some(n) => vec![n],
            None => (1..=default_max).collect(),
        }
    }

    fn ms(&self, n: usize, from: usize) -> Vec<usize> {
        match self.m {
            Some(m) => vec![m],
            None => (from..=n).collect(),
        }
    }
}

fn raising(b: &Bounds) -> Vec<Report> {
    let mut out = Vec::new();
    for l in partitions_up_to(b.weight(4)) {
        let n = b.n.unwrap_or(l.len().max(2));
        if l.len() > n {
            continue;
        }
        let p = [("lambda", lam(&l)), ("n", n.to_string())];
        out.push(Report::capture("raising", &p, || {
            let e = macdonald_p_eigen(&l, n)?;
            let plus = macdonald_j_raising(&l, n, RaisingKind::Kplus)?;
            let minus = macdonald_j_raising(&l, n, RaisingKind::Kminus)?;
            expect(plus.j == minus.j, || plus.j.to_string(), &minus.j.to_string())?;
            let c = RatFn::from_poly(c_integral(&l));
            let scaled = e.p.map_coeffs(|x| x.mul(&c));
            let j = plus.j.map_coeffs(|x| RatFn::from_poly(x.clone()));
            expect(j == scaled, || j.to_string(), &scaled.to_string())?;
            Ok(Report::pass("raising", &p))
        }));
    }
    out
}

fn eigen(b: &Bounds) -> Vec<Report> {
    let mut out = Vec::new();
    for l in partitions_up_to(b.weight(4)) {
        let n = b.n.unwrap_or(l.len().max(2));
        if l.len() > n {
            continue;
        }
        let p = [("lambda", lam(&l)), ("n", n.to_string())];
        out.push(Report::capture("eigen", &p, || {
            let j = macdonald_j_raising(&l, n, RaisingKind::Kminus)?.j;
            eigen_check(&j, &l, n)?;
            Ok(Report::pass("eigen", &p))
        }));
    }
    out
}

fn integrality(b: &Bounds) -> Vec<Report> {
    let mut out = Vec::new();
    for l in partitions_up_to(b.weight(4)) {
        let n = b.n.unwrap_or(l.len().max(2));
        if l.len() > n {
            continue;
        }
        let p = [("lambda", lam(&l)), ("n", n.to_string())];
        out.push(Report::capture("integrality", &p, || {
            let j = macdonald_j_raising(&l, n, RaisingKind::Kplus)?.j;
            expect(is_integral(&j), || j.to_string(), "coefficients in Z[q,t]")?;
            Ok(Report::pass("integrality", &p))
        }));
    }
    out
}

fn kostka(b: &Bounds) -> Vec<Report> {
    let mut out = Vec::new();
    for d in 1..=b.weight(4) {
        let p = [("degree", d.to_string())];
        out.push(Report::capture("kostka", &p, || {
            let k = kostka_matrix(d)?;
            k.check_duality()?;
            let wider = kostka_matrix_in(d, d as usize + 1)?;
            expect(wider.entries == k.entries, || "table in d+1 variables".into(), "table in d variables")?;
            Ok(Report::pass("kostka", &p))
        }));
    }
    out
}

fn lowering(b: &Bounds) -> Vec<Report> {
    let mut out = Vec::new();
    for n in b.ns(3) {
        for l in partitions_up_to(b.weight(4)) {
            if l.len() > n {
                continue;
            }
            for m in b.ms(n, l.len().max(1)) {
                if m < l.len() || m > n {
                    continue;
                }
                for kind in [LoweringKind::Mplus, LoweringKind::Mminus] {
                    let p = [
                        ("lambda", lam(&l)),
                        ("m", m.to_string()),
                        ("n", n.to_string()),
                        ("kind", format!("{kind:?}").to_lowercase()),
                    ];
                    out.push(Report::capture("lowering", &p, || lowering_verify(&l, m, n, kind)));
                }
            }
        }
    }
    out
}

fn monomials(n: usize, max: u32) -> Vec<(Partition, XPoly<Poly>)> {
    partitions_up_to(max)
        .into_iter()
        .filter(|mu| mu.len() <= n)
        .map(|mu| {
            let f = expand_monomial::<Poly>(&mu, n).expect("length checked");
            (mu, f)
        })
        .collect()
}

fn duality(b: &Bounds) -> Vec<Report> {
    let mut out = Vec::new();
    for n in b.ns(3) {
        for m in b.ms(n, 0) {
            let p = [("n", n.to_string()), ("m", m.to_string())];
            out.push(Report::capture("duality", &p, || {
                let plus = build_cached(&OperatorSpec::kplus(m), n)?;
                let minus = build_cached(&OperatorSpec::kminus(m), n)?;
                let c = Poly::t().neg().pow(m as u32).mul(&Poly::t_pow(binom2(m)));
                let dual = plus.dualize().then_shift(&Shift::all(n)).scale(&c);
                for (_, f) in monomials(n, b.weight(3)) {
                    let (x, y) = (minus.apply(&f)?, dual.apply(&f)?);
                    expect(x == y, || x.to_string(), &y.to_string())?;
                }
                Ok(Report::pass("duality", &p))
            }));
        }
    }
    out
}

fn commutativity(b: &Bounds) -> Vec<Report> {
    let mut out = Vec::new();
    for n in b.ns(3) {
        for r in 0..=n {
            for s in (r + 1)..=n {
                let p = [("n", n.to_string()), ("r", r.to_string()), ("s", s.to_string())];
                out.push(Report::capture("commutativity", &p, || {
                    let dr = build_cached(&OperatorSpec::d(r), n)?;
                    let ds = build_cached(&OperatorSpec::d(s), n)?;
                    for (_, f) in monomials(n, b.weight(3)) {
                        let x = dr.apply(&ds.apply(&f)?)?;
                        let y = ds.apply(&dr.apply(&f)?)?;
                        expect(x == y, || x.to_string(), &y.to_string())?;
                    }
                    Ok(Report::pass("commutativity", &p))
                }));
            }
        }
    }
    out
}

fn determinantal(b: &Bounds) -> Vec<Report> {
    let to_t = |c: &Poly| c.subst_monomial(Param::Q, &PMono::var(Param::T, 1));
    let mut out = Vec::new();
    let specs = [
        OperatorSpec::dx(),
        OperatorSpec::generator(OpKind::KGen),
        OperatorSpec::generator(OpKind::LGen),
        OperatorSpec::generator(OpKind::MGen),
        OperatorSpec::generator(OpKind::NGen),
    ];
    for n in b.ns(3) {
        for (mu, f) in monomials(n, b.weight(3)) {
            for spec in &specs {
                let p = [
                    ("n", n.to_string()),
                    ("mu", lam(&mu)),
                    ("operator", format!("{:?}", spec.kind)),
                ];
                out.push(Report::capture("determinantal", &p, || {
                    let direct = build_cached(spec, n)?.apply(&f)?;
                    let det = apply_determinantal(spec, &f, n)?;
                    expect(direct == det, || direct.to_string(), &det.to_string())?;
                    let prod = apply_factorized_qt(spec, &f, n)?;
                    let special = direct.map_coeffs(to_t);
                    expect(special == prod, || special.to_string(), &prod.to_string())?;
                    Ok(Report::pass("determinantal", &p))
                }));
            }
        }
    }
    out
}

fn identity_family(b: &Bounds, suites: &[Suite], default_n: usize, from: usize) -> Res<Vec<Report>> {
    let mut out = Vec::new();
    for n in b.ns(default_n) {
        for m in b.ms(n, from) {
            for &s in suites {
                out.extend(identity_suite(s, n, m)?);
            }
        }
    }
    Ok(out)
}

fn jack_limit(b: &Bounds) -> Vec<Report> {
    let mut out = Vec::new();
    for l in partitions_up_to(b.weight(4)) {
        let n = b.n.unwrap_or(l.len().max(2));
        if l.len() > n {
            continue;
        }
        for alpha in 1..=3 {
            let p = [("lambda", lam(&l)), ("n", n.to_string()), ("alpha", alpha.to_string())];
            out.push(Report::capture("jack_limit", &p, || jack_limit_verify(&l, n, alpha)));
        }
        let p = [("lambda", lam(&l)), ("n", n.to_string())];
        out.push(Report::capture("jack_normalization", &p, || {
            let j = jack_j(&l, n)?.j;
            let lead = j.coeff(&l);
            expect(lead == c_alpha(&l), || lead.to_string(), &c_alpha(&l).to_string())?;
            Ok(Report::pass("jack_normalization", &p))
        }));
    }
    out
}

fn jack_lowering(b: &Bounds) -> Vec<Report> {
    let mut out = Vec::new();
    for n in b.ns(3) {
        for l in partitions_up_to(b.weight(4)) {
            if l.len() > n {
                continue;
            }
            for m in b.ms(n, l.len().max(1)) {
                if m < l.len() || m > n {
                    continue;
                }
                let p = [("lambda", lam(&l)), ("m", m.to_string()), ("n", n.to_string())];
                out.push(Report::capture("jack_lowering", &p, || jack_lowering_verify(&l, m, n)));
            }
        }
    }
    out
}

fn collect(name: &str, b: &Bounds) -> Res<Vec<Report>> {
    let single = [Suite::ERaising, Suite::EGenerating, Suite::ESlices];
    let kernel = [Suite::KernelPlus, Suite::KernelMinus, Suite::KernelSymmetry];
    let schur = [Suite::SchurActionK, Suite::SchurActionL, Suite::SchurActionMN];
    Ok(match name {
        "raising" => raising(b),
        "eigen" => eigen(b),
        "integrality" => integrality(b),
        "kostka" => kostka(b),
        "lowering" => lowering(b),
        "duality" => duality(b),
        "commutativity" => commutativity(b),
        "determinantal" => determinantal(b),
        "e-identities" => identity_family(b, &single, 4, 0)?,
        "kernel" => identity_family(b, &kernel, 2, 1)?,
        "schur-action" => identity_family(b, &schur, 3, 1)?,
        "unit-action" => identity_family(b, &[Suite::UnitAction], 3, 0)?,
        "jack-limit" => jack_limit(b),
        "jack-lowering" => jack_lowering(b),
        "all" => {
            let mut out = Vec::new();
            for (s, _) in SUITES.iter().filter(|(s, _)| *s != "all") {
                out.extend(collect(s, b)?);
            }
            out
        }
        other => match other.parse::<Suite>() {
            Ok(s) => identity_family(b, &[s], 3, if s.two_alphabet() { 1 } else { 0 })?,
            Err(_) => {
                let names: Vec<&str> = SUITES.iter().map(|(s, _)| *s).collect();
                return Err(Failure::input(format!(
                    "unknown suite {other:?}; expected one of {} or an identity family name",
                    names.join(", ")
                )));
            }
        },
    })
}

pub fn run_suite(a: &VerifyArgs, format: Format) -> Res<Output> {
    if let Some(w) = a.max_weight {
        check_weight(w, 8)?;
    }
    if let Some(n) = a.n {
        if n == 0 || n > 6 {
            return Err(Failure::input(format!("--n must lie in 1..=6, got {n}")));
        }
        if let Some(m) = a.m {
            if m > n {
                return Err(Failure::input(format!("--m {m} exceeds --n {n}")));
            }
        }
    }
    let b = Bounds {
        max_weight: a.max_weight,
        n: a.n,
        m: a.m,
    };
    let reports = collect(a.suite.trim(), &b)?;
    let mut stdout = String::new();
    for r in &reports {
        match format {
            Format::Json => stdout.push_str(&to_json_line(r)),
            Format::Text => {
                stdout.push_str(&r.line());
                stdout.push('\n');
            }
        }
    }
    let failed: Vec<&Report> = reports.iter().filter(|r| !r.passed()).collect();
    if let Some(first) = failed.first() {
        eprintln!("{} of {} checks failed; first: {}", failed.len(), reports.len(), first.line());
        return Ok(Output {
            stdout,
            code: EXIT_VERIFY,
        });
    }
    Ok(Output { stdout, code: 0 })
}
