use super::raising::{macdonald_j_raising, RaisingKind};
use crate::arith::linalg;
use crate::arith::{Param, Poly, RatFn};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::symmetric::{basis_matrix, Basis};

/// `K_{λμ}(q,t)` with `J_μ = Σ_λ K_{λμ} S_λ`; rows `λ`, columns `μ`, both in
/// reverse lexicographic order.
#[derive(Clone, Debug, PartialEq)]
pub struct KostkaMatrix {
    pub degree: u32,
    pub nvars: usize,
    pub labels: Vec<Partition>,
    pub entries: Vec<Vec<Poly>>,
}

impl KostkaMatrix {
    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> Option<&Poly> {
        let i = self.labels.iter().position(|p| p == lambda)?;
        let j = self.labels.iter().position(|p| p == mu)?;
        Some(&self.entries[i][j])
    }

    /// Checks `K_{λμ}(q,t) = K_{λ'μ'}(t,q)` for every entry.
    pub fn check_duality(&self) -> Result<()> {
        for (i, lambda) in self.labels.iter().enumerate() {
            for (j, mu) in self.labels.iter().enumerate() {
                let a = &self.entries[i][j];
                let b = self
                    .entry(&lambda.conjugate(), &mu.conjugate())
                    .ok_or_else(|| Error::IndexOutOfRange(format!("{lambda}' or {mu}'")))?
                    .swap_qt();
                if *a != b {
                    return Err(Error::VerificationFailed {
                        lhs: format!("K[{lambda}][{mu}](q,t) = {a}"),
                        rhs: format!("K[{lambda}'][{mu}'](t,q) = {b}"),
                    });
                }
            }
        }
        Ok(())
    }
}

/// The Kostka table of degree `d`, computed in `d` variables.
pub fn kostka_matrix(d: u32) -> Result<KostkaMatrix> {
    kostka_matrix_in(d, d as usize)
}

/// The Kostka table of degree `d` computed in `n ≥ d` variables.
pub fn kostka_matrix_in(d: u32, n: usize) -> Result<KostkaMatrix> {
    if d == 0 {
        return Err(Error::OutOfRange("degree must be at least 1".into()));
    }
    if n < d as usize {
        return Err(Error::OutOfRange(format!(
            "n = {n} is too small to separate partitions of {d}"
        )));
    }
    let labels = partitions_of(d);
    let (rows, cols, a) = basis_matrix(Basis::BigSchur, d, n)?;
    debug_assert_eq!(cols, labels);
    let js = crate::par::map(&labels, |mu| macdonald_j_raising(mu, n, RaisingKind::Kminus));
    let mut b = vec![vec![RatFn::zero(); labels.len()]; rows.len()];
    for (j, res) in js.into_iter().enumerate() {
        let res = res?;
        for (i, r) in rows.iter().enumerate() {
            b[i][j] = RatFn::from_poly(res.j.coeff(r));
        }
    }
    let k = linalg::solve(&a, &b)?;
    let mut entries = Vec::with_capacity(labels.len());
    for (lambda, row) in labels.iter().zip(k) {
        let mut out = Vec::with_capacity(row.len());
        for (mu, x) in labels.iter().zip(row) {
            let p = x
                .to_poly()
                .filter(|p| p.is_polynomial() && p.only_involves(&[Param::Q, Param::T]))
                .ok_or_else(|| Error::NonIntegralEntry(format!("K[{lambda}][{mu}] = {x}")))?;
            out.push(p);
        }
        entries.push(out);
    }
    Ok(KostkaMatrix {
        degree: d,
        nvars: n,
        labels,
        entries,
    })
}
