use serde::{Deserialize, Serialize};

use super::{check_length, one, MacdonaldResult, Provenance};
use crate::arith::{Poly, RatFn};
use crate::error::{Error, Result};
use crate::partition::{c_integral, Partition};
use crate::qdiff::{build_cached, OperatorSpec};
use crate::symmetric::SymPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RaisingKind {
    Kplus,
    Kminus,
}

impl RaisingKind {
    pub fn spec(self, m: usize) -> OperatorSpec {
        match self {
            RaisingKind::Kplus => OperatorSpec::kplus(m),
            RaisingKind::Kminus => OperatorSpec::kminus(m),
        }
    }

    pub fn provenance(self) -> Provenance {
        match self {
            RaisingKind::Kplus => Provenance::RaisingKplus,
            RaisingKind::Kminus => Provenance::RaisingKminus,
        }
    }
}

/// Column heights in application order, grouped by height:
/// `λ_1 - λ_2` columns of height 1, then `λ_2 - λ_3` of height 2, and so on.
pub fn column_order(lambda: &Partition) -> Vec<usize> {
    let mut out = Vec::new();
    for m in 1..=lambda.len() {
        let k = lambda.part(m) - lambda.part(m + 1);
        out.extend(std::iter::repeat(m).take(k as usize));
    }
    out
}

/// Column heights read off the conjugate partition, shortest first.
pub fn conjugate_order(lambda: &Partition) -> Vec<usize> {
    let mut cols: Vec<usize> = lambda.conjugate().parts().iter().map(|&c| c as usize).collect();
    cols.reverse();
    cols
}

/// Applies `K_{m_1}`, then `K_{m_2}`, ... to the constant 1.
pub fn apply_raising_sequence(heights: &[usize], n: usize, kind: RaisingKind) -> Result<SymPoly<Poly>> {
    let mut f = one(n);
    for &m in heights {
        let op = build_cached(&kind.spec(m), n)?;
        f = op.apply_symmetric(&f)?;
    }
    Ok(f)
}

/// `J_λ` by adding the columns of `λ` one at a time with `K^+` or `K^-`.
pub fn macdonald_j_raising(lambda: &Partition, n: usize, kind: RaisingKind) -> Result<MacdonaldResult> {
    check_length(lambda, n)?;
    let j = apply_raising_sequence(&column_order(lambda), n, kind)?;
    let c = RatFn::from_poly(c_integral(lambda));
    let p = j.map_coeffs(|x| {
        RatFn::from_poly(x.clone())
            .div(&c)
            .expect("nonzero normalization")
    });
    if p.coeff(lambda) != RatFn::one() {
        return Err(Error::VerificationFailed {
            lhs: format!("leading coefficient {}", p.coeff(lambda)),
            rhs: "1".into(),
        });
    }
    Ok(MacdonaldResult {
        lambda: lambda.clone(),
        nvars: n,
        p,
        j,
        provenance: kind.provenance(),
    })
}
