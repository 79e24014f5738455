//! Operators applied through their determinantal form, and through the
//! product form that holds when `q = t`.

use super::build::{OpKind, OperatorSpec};
use super::{shift_poly, Shift};
use crate::arith::special::binom2;
use crate::arith::xpoly::permutations;
use crate::arith::{vandermonde, Param, Poly, XMono, XPoly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq)]
enum Family {
    /// entries `1 + v y (1 - u t^δ T)`
    K,
    /// entries `t^δ T + v y (1 - u t^δ T)`
    L,
    /// entries `1 - u t^δ T`
    Dx,
}

/// How to read a named operator off a generating determinant.
struct Plan {
    family: Family,
    inverse: bool,
    u: Poly,
    v: Poly,
    /// keep only the coefficient of this power of the given parameter
    take: Option<(Param, i16)>,
    scale: Poly,
}

fn plan(spec: &OperatorSpec, n: usize) -> Plan {
    let m = spec.index;
    let raising_u = Poly::t_pow(m as i64 - n as i64 + 1);
    let minus_scale = Poly::t_pow(-binom2(n - m.min(n)));
    let p = |family, inverse, u: Poly, take: Option<(Param, i16)>, scale| Plan {
        family,
        inverse,
        u,
        v: if take.is_some() { Poly::v() } else { spec.v.clone() },
        take,
        scale,
    };
    let vm = Some((Param::V, m as i16));
    let one = Poly::one;
    match spec.kind {
        OpKind::D => {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            p(Family::Dx, false, Poly::u(), Some((Param::U, m as i16)), Poly::int(sign))
        }
        OpKind::Dx => p(Family::Dx, false, spec.u.clone(), None, one()),
        OpKind::Ku => p(Family::K, false, spec.u.clone(), vm, one()),
        OpKind::Lu => p(Family::L, false, spec.u.clone(), vm, one()),
        OpKind::Mu => p(Family::K, true, spec.u.clone(), vm, one()),
        OpKind::Nu => p(Family::L, true, spec.u.clone(), vm, one()),
        OpKind::KPlus => p(Family::K, false, raising_u, vm, one()),
        OpKind::KMinus => p(Family::L, false, raising_u, vm, minus_scale),
        OpKind::MPlus => p(Family::K, true, one(), vm, one()),
        OpKind::MMinus => p(Family::L, true, one(), vm, minus_scale),
        OpKind::KGen => p(Family::K, false, spec.u.clone(), None, one()),
        OpKind::LGen => p(Family::L, false, spec.u.clone(), None, one()),
        OpKind::MGen => p(Family::K, true, spec.u.clone(), None, one()),
        OpKind::NGen => p(Family::L, true, spec.u.clone(), None, one()),
    }
}

/// The entry `x_j^δ (c + d T_{x_j})` as the pair `(c x_j^δ, d x_j^δ)`.
fn entry(plan: &Plan, n: usize, j: usize, delta: usize) -> (XPoly<Poly>, XPoly<Poly>) {
    let base = XMono::var(j, delta as i16);
    let y = XMono::var(j, if plan.inverse { -1 } else { 1 });
    let td = Poly::t_pow(delta as i64);
    let mono = |m: XMono, c: Poly| XPoly::monomial(n, m, c);
    let vy = mono(base.mul(&y), plan.v.clone());
    let vuy = mono(base.mul(&y), plan.v.mul(&plan.u).mul(&td).neg());
    match plan.family {
        Family::K => (mono(base, Poly::one()).add(&vy), vuy),
        Family::L => (vy, mono(base, td).add(&vuy)),
        Family::Dx => (mono(base, Poly::one()), mono(base, plan.u.mul(&td).neg())),
    }
}

/// `(c + d T_{p, x_j}) g`.
fn apply_entry(c: &XPoly<Poly>, d: &XPoly<Poly>, j: usize, g: &XPoly<Poly>, p: Param) -> XPoly<Poly> {
    let mut s = Shift::zero();
    s.0[j] = 1;
    c.mul(g).add(&d.mul(&shift_poly(g, &s, p)))
}

fn finish(plan: &Plan, out: XPoly<Poly>) -> XPoly<Poly> {
    let out = match plan.take {
        Some((p, k)) => out.map_coeffs(|c| c.coefficient_of(p, k)),
        None => out,
    };
    out.scale(&plan.scale)
}

/// `O f` computed from the determinant `Δ^{-1} det(entries)`, expanded over
/// permutations with each column acting on its own variable.
pub fn apply_determinantal(spec: &OperatorSpec, f: &XPoly<Poly>, n: usize) -> Result<XPoly<Poly>> {
    spec.check(n)?;
    let plan = plan(spec, n);
    let entries: Vec<Vec<(XPoly<Poly>, XPoly<Poly>)>> = (0..n)
        .map(|row| (0..n).map(|j| entry(&plan, n, j, n - 1 - row)).collect())
        .collect();
    let perms = permutations(n);
    let parts = crate::par::map(&perms, |(sigma, sign)| {
        let mut g = f.clone();
        for (j, &row) in sigma.iter().enumerate() {
            let (c, d) = &entries[row][j];
            g = apply_entry(c, d, j, &g, Param::Q);
        }
        g.scale(&Poly::int(*sign))
    });
    let num = parts
        .into_iter()
        .fold(XPoly::zero(n), |acc, p| acc.add(&p));
    Ok(finish(&plan, num.div_vandermonde(n)?))
}

/// `O f` at `q = t` from the product `Δ^{-1} ∏_j (entry_j) Δ f` with
/// `t`-shifts. The coefficients of `f` must already be free of `q`.
pub fn apply_factorized_qt(spec: &OperatorSpec, f: &XPoly<Poly>, n: usize) -> Result<XPoly<Poly>> {
    spec.check(n)?;
    if f.terms().iter().any(|(_, c)| c.involves(Param::Q)) {
        return Err(Error::SpecializationRequired(format!("{f}")));
    }
    let plan = plan(spec, n);
    let mut g = vandermonde::<Poly>(n).mul(f);
    for j in 0..n {
        let (c, d) = entry(&plan, n, j, 0);
        g = apply_entry(&c, &d, j, &g, Param::T);
    }
    Ok(finish(&plan, g.div_vandermonde(n)?))
}
