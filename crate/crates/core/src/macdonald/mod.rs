//! Macdonald polynomials `P_λ` and `J_λ`: the eigen-oracle, the raising
//! recursion, `(q,t)`-Kostka tables, the lowering check, and the closed-form
//! identity suites.

mod eigen;
pub mod identities;
pub mod kernel;
mod kostka;
mod lowering;
mod raising;

use serde::{Deserialize, Serialize};

use crate::arith::{Poly, RatFn, XPoly};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symmetric::{Basis, SymPoly};

pub use eigen::{eigen_check, macdonald_p_eigen};
pub use identities::{identity_suite, Suite};
pub use kernel::{kernel_f, RationalX};
pub use kostka::{kostka_matrix, kostka_matrix_in, KostkaMatrix};
pub use lowering::{lowering_after_raising, lowering_verify, LoweringKind};
pub use raising::{
    apply_raising_sequence, column_order, conjugate_order, macdonald_j_raising, RaisingKind,
};

/// Which construction produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    EigenOracle,
    RaisingKplus,
    RaisingKminus,
}

impl Provenance {
    pub fn tag(self) -> &'static str {
        match self {
            Provenance::EigenOracle => "eigen_oracle",
            Provenance::RaisingKplus => "raising_kplus",
            Provenance::RaisingKminus => "raising_kminus",
        }
    }
}

/// `P_λ` and `J_λ = c_λ P_λ` in the monomial basis of `n` variables.
#[derive(Clone, Debug, PartialEq)]
pub struct MacdonaldResult {
    pub lambda: Partition,
    pub nvars: usize,
    pub p: SymPoly<RatFn>,
    pub j: SymPoly<Poly>,
    pub provenance: Provenance,
}

/// True when every coefficient is a polynomial in `q, t` (no negative
/// powers, no other parameters).
pub fn is_integral(f: &SymPoly<Poly>) -> bool {
    f.terms().iter().all(|(_, c)| {
        c.is_polynomial() && c.only_involves(&[crate::arith::Param::Q, crate::arith::Param::T])
    })
}

pub(crate) fn check_length(lambda: &Partition, n: usize) -> Result<()> {
    if lambda.len() > n {
        return Err(Error::LengthExceedsVars {
            partition: lambda.to_string(),
            nvars: n,
        });
    }
    if n == 0 || n > crate::arith::MAX_VARS {
        return Err(Error::TooManyVariables(n));
    }
    Ok(())
}

pub(crate) fn monomial(mu: &Partition, n: usize) -> SymPoly<Poly> {
    let mut f = SymPoly::zero(n, Basis::Monomial);
    f.add_term(mu.clone(), &Poly::one()).expect("length checked");
    f
}

pub(crate) fn one(n: usize) -> SymPoly<Poly> {
    monomial(&Partition::empty(), n)
}

/// First differing term of two `x`-polynomials, for failure witnesses.
pub(crate) fn witness(lhs: &XPoly<Poly>, rhs: &XPoly<Poly>) -> Option<String> {
    let d = lhs.sub(rhs);
    d.terms()
        .first()
        .map(|(m, c)| format!("x^{:?}: {c}", m.exps(d.nvars())))
}

pub(crate) fn expect_equal(lhs: &XPoly<Poly>, rhs: &XPoly<Poly>) -> Result<()> {
    match witness(lhs, rhs) {
        None => Ok(()),
        Some(w) => Err(Error::IdentityFailed(w)),
    }
}

#[cfg(test)]
mod tests;
