use serde::{Deserialize, Serialize};

use super::raising::{macdonald_j_raising, RaisingKind};
use super::check_length;
use crate::error::{Error, Result};
use crate::partition::{lowering_coeff, Partition};
use crate::qdiff::{build_cached, OperatorSpec};
use crate::report::Report;
use crate::symmetric::{Basis, SymPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LoweringKind {
    Mplus,
    Mminus,
}

impl LoweringKind {
    pub fn spec(self, m: usize) -> OperatorSpec {
        match self {
            LoweringKind::Mplus => OperatorSpec::mplus(m),
            LoweringKind::Mminus => OperatorSpec::mminus(m),
        }
    }

    fn name(self) -> &'static str {
        match self {
            LoweringKind::Mplus => "mplus",
            LoweringKind::Mminus => "mminus",
        }
    }
}

fn same(lhs: &SymPoly<crate::arith::Poly>, rhs: &SymPoly<crate::arith::Poly>) -> Result<()> {
    if lhs != rhs {
        return Err(Error::VerificationFailed {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    Ok(())
}

/// Checks `M_m J_λ = a^m_λ J_{λ - (1^m)}` when `ℓ(λ) = m`, and `M_m J_λ = 0`
/// when `ℓ(λ) < m`.
pub fn lowering_verify(lambda: &Partition, m: usize, n: usize, kind: LoweringKind) -> Result<Report> {
    check_length(lambda, n)?;
    if lambda.len() > m || m > n {
        return Err(Error::IndexOutOfRange(format!(
            "lowering needs l(lambda) <= m <= n, got {lambda}, m = {m}, n = {n}"
        )));
    }
    let j = macdonald_j_raising(lambda, n, RaisingKind::Kminus)?.j;
    let image = build_cached(&kind.spec(m), n)?.apply_symmetric(&j)?;
    let rhs = if lambda.len() == m {
        let lower = lambda.remove_column(m).expect("length is m");
        let a = lowering_coeff(lambda, m, n)?;
        macdonald_j_raising(&lower, n, RaisingKind::Kminus)?.j.scale(&a)
    } else {
        SymPoly::zero(n, Basis::Monomial)
    };
    same(&image, &rhs)?;
    Ok(Report::pass(
        "lowering",
        &[
            ("lambda", lambda.to_string()),
            ("m", m.to_string()),
            ("n", n.to_string()),
            ("kind", kind.name().to_string()),
        ],
    ))
}

/// Checks `M_m K_m J_λ = a^m_{λ + (1^m)} J_λ` for `ℓ(λ) ≤ m ≤ n`.
pub fn lowering_after_raising(
    lambda: &Partition,
    m: usize,
    n: usize,
    raise: RaisingKind,
    lower: LoweringKind,
) -> Result<Report> {
    check_length(lambda, n)?;
    if lambda.len() > m || m > n {
        return Err(Error::IndexOutOfRange(format!(
            "needs l(lambda) <= m <= n, got {lambda}, m = {m}, n = {n}"
        )));
    }
    let j = macdonald_j_raising(lambda, n, RaisingKind::Kminus)?.j;
    let up = build_cached(&raise.spec(m), n)?.apply_symmetric(&j)?;
    let down = build_cached(&lower.spec(m), n)?.apply_symmetric(&up)?;
    let a = lowering_coeff(&lambda.add_column(m), m, n)?;
    same(&down, &j.scale(&a))?;
    Ok(Report::pass(
        "lowering_after_raising",
        &[
            ("lambda", lambda.to_string()),
            ("m", m.to_string()),
            ("n", n.to_string()),
        ],
    ))
}
