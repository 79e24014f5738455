use std::collections::BTreeMap;

use serde_json::Value;

use macops::jack::{jack_j, jack_limit_oracle, specialize_alpha};
use macops::macdonald::{
    kostka_matrix_in, macdonald_j_raising, macdonald_p_eigen, MacdonaldResult, RaisingKind,
};
use macops::output::{to_json_line, Expansion, KostkaTable};
use macops::partition::Partition;
use macops::qdiff::{
    apply_antisymmetrized, apply_determinantal, apply_factorized_qt, build_cached, build_printed,
    OpKind, OperatorSpec,
};
use macops::report::Status;
use macops::symmetric::{expand_monomial, to_monomial_basis};
use macops::Error;

use crate::verify::run_suite;
use crate::{ApplyArgs, Cli, Command, Format, JackArgs, KostkaArgs, OpName, PolyArgs, Route, Via};

pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;

const DEFAULT_MAX_WEIGHT: u32 = 8;
const DEFAULT_MAX_DEGREE: u32 = 6;

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

#[derive(Debug)]
pub struct Failure {
    pub message: String,
    pub code: u8,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: EXIT_INPUT,
        }
    }

    pub fn mismatch(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: EXIT_MISMATCH,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_invalid_input() { EXIT_INPUT } else { EXIT_MISMATCH };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

pub type Res<T> = std::result::Result<T, Failure>;

pub fn run(cli: &Cli) -> Res<Output> {
    match &cli.command {
        Command::Jpoly(a) => poly(a, cli.format, false),
        Command::Ppoly(a) => poly(a, cli.format, true),
        Command::Kostka(a) => kostka(a, cli.format),
        Command::Jack(a) => jack(a, cli.format),
        Command::Verify(a) => run_suite(a, cli.format),
        Command::ApplyOp(a) => apply_op(a, cli.format),
    }
}

/// The size cap from `MACOPS_MAX_WEIGHT`, or `default`.
pub fn weight_cap(default: u32) -> Res<u32> {
    match std::env::var("MACOPS_MAX_WEIGHT") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::input(format!("MACOPS_MAX_WEIGHT={s:?} is not a number"))),
        Err(_) => Ok(default),
    }
}

pub fn check_weight(w: u32, default: u32) -> Res<()> {
    let cap = weight_cap(default)?;
    if w > cap {
        return Err(Failure::input(format!(
            "weight {w} exceeds the cap {cap} (set MACOPS_MAX_WEIGHT to raise it)"
        )));
    }
    Ok(())
}

pub fn parse_partition(s: &str) -> Res<Partition> {
    Ok(s.parse::<Partition>()?)
}

fn resolve_nvars(lambda: &Partition, nvars: Option<usize>) -> Res<usize> {
    let n = nvars.unwrap_or((lambda.weight() as usize).max(1));
    if n < lambda.len() {
        return Err(Failure::input(format!(
            "partition {lambda} has more than {n} parts"
        )));
    }
    if n == 0 {
        return Err(Failure::input("nvars must be at least 1"));
    }
    Ok(n)
}

fn params(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn lambda_value(l: &Partition) -> Value {
    Value::from(l.parts().to_vec())
}

fn emit_expansion(e: &Expansion, format: Format) -> String {
    match format {
        Format::Json => to_json_line(e),
        Format::Text => e.to_text(),
    }
}

fn build_route(lambda: &Partition, n: usize, via: Via) -> Res<MacdonaldResult> {
    Ok(match via {
        Via::Kplus => macdonald_j_raising(lambda, n, RaisingKind::Kplus)?,
        Via::Kminus => macdonald_j_raising(lambda, n, RaisingKind::Kminus)?,
        Via::Eigen => macdonald_p_eigen(lambda, n)?,
    })
}

fn poly(a: &PolyArgs, format: Format, monic: bool) -> Res<Output> {
    let lambda = parse_partition(&a.lambda)?;
    let n = resolve_nvars(&lambda, a.nvars)?;
    check_weight(lambda.weight(), DEFAULT_MAX_WEIGHT)?;
    let r = build_route(&lambda, n, a.via)?;
    let check = if a.check {
        for via in [Via::Kplus, Via::Kminus, Via::Eigen] {
            let other = build_route(&lambda, n, via)?;
            if other.j != r.j || other.p != r.p {
                return Err(Failure::mismatch(format!(
                    "routes {:?} and {:?} disagree for {lambda}",
                    a.via, via
                )));
            }
        }
        Some(Status::Pass)
    } else {
        None
    };
    let p = params(&[
        ("lambda", lambda_value(&lambda)),
        ("nvars", Value::from(n)),
        ("via", Value::from(format!("{:?}", a.via).to_lowercase())),
    ]);
    let e = if monic {
        Expansion::new("ppoly", p, &r.p, r.provenance.tag(), check)
    } else {
        Expansion::new("jpoly", p, &r.j, r.provenance.tag(), check)
    };
    Ok(Output {
        stdout: emit_expansion(&e, format),
        code: 0,
    })
}

fn kostka(a: &KostkaArgs, format: Format) -> Res<Output> {
    if a.degree == 0 {
        return Err(Failure::input("degree must be at least 1"));
    }
    check_weight(a.degree, DEFAULT_MAX_DEGREE)?;
    let n = a.nvars.unwrap_or(a.degree as usize);
    let k = kostka_matrix_in(a.degree, n)?;
    let check = if a.check_duality {
        k.check_duality()?;
        Some(Status::Pass)
    } else {
        None
    };
    let t = KostkaTable::new(&k, "kostka_big_schur_solve", check);
    let stdout = match format {
        Format::Json => to_json_line(&t),
        Format::Text => t.to_text(),
    };
    Ok(Output { stdout, code: 0 })
}

fn jack(a: &JackArgs, format: Format) -> Res<Output> {
    let lambda = parse_partition(&a.lambda)?;
    let n = resolve_nvars(&lambda, a.nvars)?;
    check_weight(lambda.weight(), DEFAULT_MAX_WEIGHT)?;
    let alpha: Option<u32> = match a.alpha.trim() {
        "sym" => None,
        s => match s.parse::<u32>() {
            Ok(k) if k > 0 => Some(k),
            _ => return Err(Failure::input(format!("alpha must be `sym` or a positive integer, got {s:?}"))),
        },
    };
    let r = jack_j(&lambda, n)?;
    let check = if a.check {
        let alphas: Vec<u32> = match alpha {
            Some(k) => vec![k],
            None => vec![1, 2, 3],
        };
        for k in alphas {
            let oracle = jack_limit_oracle(&lambda, n, k)?;
            if specialize_alpha(&r.j, k as i64) != oracle.j {
                return Err(Failure::mismatch(format!(
                    "raising and limit routes disagree for {lambda} at alpha = {k}"
                )));
            }
        }
        Some(Status::Pass)
    } else {
        None
    };
    let value = match alpha {
        Some(k) => Value::from(k),
        None => Value::from("sym"),
    };
    let p = params(&[
        ("lambda", lambda_value(&lambda)),
        ("nvars", Value::from(n)),
        ("alpha", value),
    ]);
    let f = match alpha {
        Some(k) => specialize_alpha(&r.j, k as i64),
        None => r.j.clone(),
    };
    let e = Expansion::new("jack", p, &f, &r.provenance.tag(), check);
    Ok(Output {
        stdout: emit_expansion(&e, format),
        code: 0,
    })
}

fn spec_for(op: OpName, m: Option<usize>) -> Res<OperatorSpec> {
    let need = || m.ok_or_else(|| Failure::input(format!("--m is required for {op:?}")));
    Ok(match op {
        OpName::D => OperatorSpec::d(need()?),
        OpName::Dx => OperatorSpec::dx(),
        OpName::Kplus => OperatorSpec::kplus(need()?),
        OpName::Kminus => OperatorSpec::kminus(need()?),
        OpName::Mplus => OperatorSpec::mplus(need()?),
        OpName::Mminus => OperatorSpec::mminus(need()?),
        OpName::Ku => OperatorSpec::ku(need()?),
        OpName::Lu => OperatorSpec::lu(need()?),
        OpName::Mu => OperatorSpec::mu(need()?),
        OpName::Nu => OperatorSpec::nu(need()?),
        OpName::K => OperatorSpec::generator(OpKind::KGen),
        OpName::L => OperatorSpec::generator(OpKind::LGen),
        OpName::M => OperatorSpec::generator(OpKind::MGen),
        OpName::N => OperatorSpec::generator(OpKind::NGen),
    })
}

fn apply_op(a: &ApplyArgs, format: Format) -> Res<Output> {
    let mu = parse_partition(&a.mu)?;
    let n = resolve_nvars(&mu, a.nvars)?;
    check_weight(mu.weight(), DEFAULT_MAX_WEIGHT)?;
    let spec = spec_for(a.op, a.m)?;
    let f = expand_monomial(&mu, n)?;
    let image = match a.route {
        Route::Generic => build_cached(&spec, n)?.apply(&f)?,
        Route::Printed => build_printed(&spec, n)?.apply(&f)?,
        Route::Determinantal => apply_determinantal(&spec, &f, n)?,
        Route::Product => apply_factorized_qt(&spec, &f, n)?,
        Route::Antisymmetrized => apply_antisymmetrized(&spec, &f, n)?,
    };
    let sym = to_monomial_basis(&image, n)?;
    let route = format!("{:?}", a.route).to_lowercase();
    let mut pairs = vec![
        ("op", Value::from(format!("{:?}", a.op).to_lowercase())),
        ("mu", lambda_value(&mu)),
        ("nvars", Value::from(n)),
        ("route", Value::from(route.clone())),
    ];
    if let Some(m) = a.m {
        pairs.push(("m", Value::from(m)));
    }
    let provenance = format!("operator_{route}");
    let e = Expansion::new("apply-op", params(&pairs), &sym, &provenance, None);
    Ok(Output {
        stdout: emit_expansion(&e, format),
        code: 0,
    })
}
