use std::collections::BTreeMap;

use super::{check_length, monomial, MacdonaldResult, Provenance};
use crate::arith::{Param, Poly, RatFn};
use crate::error::{Error, Result};
use crate::partition::{c_integral, dominance_leq, eigen_poly, partitions_with_length, Partition};
use crate::qdiff::{build_cached, OperatorSpec};
use crate::symmetric::{Basis, SymPoly};

/// `P_λ` from the `D_1` eigen-equation and unitriangularity, solved one
/// dominance-lower monomial at a time (reverse lexicographic order is a
/// linear extension of dominance). The result is then checked against the
/// full generating operator `D_x(u)`.
pub fn macdonald_p_eigen(lambda: &Partition, n: usize) -> Result<MacdonaldResult> {
    check_length(lambda, n)?;
    let below: Vec<Partition> = partitions_with_length(lambda.weight(), n)
        .into_iter()
        .filter(|mu| dominance_leq(mu, lambda))
        .collect();
    let d1 = build_cached(&OperatorSpec::d(1), n)?;
    let images = crate::par::map(&below, |mu| d1.apply_symmetric(&monomial(mu, n)));
    let images: Vec<SymPoly<Poly>> = images.into_iter().collect::<Result<_>>()?;
    let eigenvalue = eigen_poly(lambda, n)?.coefficient_of(Param::U, 1).neg();

    let mut coeffs: BTreeMap<Partition, RatFn> = BTreeMap::new();
    for (k, nu) in below.iter().enumerate() {
        if k == 0 {
            coeffs.insert(nu.clone(), RatFn::one());
            continue;
        }
        let mut rhs = RatFn::zero();
        for (mu, image) in below[..k].iter().zip(&images) {
            let c = image.coeff(nu);
            if !c.is_zero() {
                rhs = rhs.add(&coeffs[mu].mul(&RatFn::from_poly(c)));
            }
        }
        let gap = eigenvalue.sub(&images[k].coeff(nu));
        if gap.is_zero() {
            return Err(Error::SingularSystem(format!(
                "repeated eigenvalue at {nu} below {lambda}"
            )));
        }
        coeffs.insert(nu.clone(), rhs.div(&RatFn::from_poly(gap)).expect("nonzero"));
    }
    let p = SymPoly::from_terms(n, Basis::Monomial, coeffs)?;

    let c = RatFn::from_poly(c_integral(lambda));
    let j = p.scale(&c).try_map_coeffs(|x| {
        x.to_poly()
            .ok_or_else(|| Error::NonIntegralEntry(format!("{x} in J_{lambda}")))
    })?;
    eigen_check(&j, lambda, n)?;
    Ok(MacdonaldResult {
        lambda: lambda.clone(),
        nvars: n,
        p,
        j,
        provenance: Provenance::EigenOracle,
    })
}

/// Checks `D_x(u) f = d^n_λ(u) f` with `u` symbolic.
pub fn eigen_check(f: &SymPoly<Poly>, lambda: &Partition, n: usize) -> Result<()> {
    let dx = build_cached(&OperatorSpec::dx(), n)?;
    let lhs = dx.apply_symmetric(f)?;
    let rhs = f.scale(&eigen_poly(lambda, n)?);
    if lhs != rhs {
        return Err(Error::VerificationFailed {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    Ok(())
}
