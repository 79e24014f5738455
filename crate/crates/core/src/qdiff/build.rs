//! Named operators, assembled from the interchanged subset sums.

use serde::{Deserialize, Serialize};

use super::{QDiffOp, Shift};
use crate::arith::special::binom2;
use crate::arith::xpoly::elementary_in;
use crate::arith::{vandermonde, Param, Poly, XMono, XPoly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OpKind {
    /// `D_r`
    D,
    /// `D_x(u) = Σ_r (-u)^r D_r`
    Dx,
    KPlus,
    KMinus,
    /// `K_m(u)`
    Ku,
    /// `L_m(u)`
    Lu,
    MPlus,
    MMinus,
    /// `M_m(u)`
    Mu,
    /// `N_m(u)`
    Nu,
    /// `K(u, v) = Σ_m v^m K_m(u)`
    KGen,
    LGen,
    MGen,
    NGen,
}

/// Which operator to build, with values for the `u` and `v` slots (the
/// symbolic parameters by default).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperatorSpec {
    pub kind: OpKind,
    pub index: usize,
    pub u: Poly,
    pub v: Poly,
}

impl OperatorSpec {
    pub fn new(kind: OpKind, index: usize) -> Self {
        OperatorSpec {
            kind,
            index,
            u: Poly::u(),
            v: Poly::v(),
        }
    }

    pub fn d(r: usize) -> Self {
        Self::new(OpKind::D, r)
    }

    pub fn dx() -> Self {
        Self::new(OpKind::Dx, 0)
    }

    pub fn kplus(m: usize) -> Self {
        Self::new(OpKind::KPlus, m)
    }

    pub fn kminus(m: usize) -> Self {
        Self::new(OpKind::KMinus, m)
    }

    pub fn mplus(m: usize) -> Self {
        Self::new(OpKind::MPlus, m)
    }

    pub fn mminus(m: usize) -> Self {
        Self::new(OpKind::MMinus, m)
    }

    pub fn ku(m: usize) -> Self {
        Self::new(OpKind::Ku, m)
    }

    pub fn lu(m: usize) -> Self {
        Self::new(OpKind::Lu, m)
    }

    pub fn mu(m: usize) -> Self {
        Self::new(OpKind::Mu, m)
    }

    pub fn nu(m: usize) -> Self {
        Self::new(OpKind::Nu, m)
    }

    pub fn generator(kind: OpKind) -> Self {
        Self::new(kind, 0)
    }

    pub fn with_u(mut self, u: Poly) -> Self {
        self.u = u;
        self
    }

    pub fn with_v(mut self, v: Poly) -> Self {
        self.v = v;
        self
    }

    pub(crate) fn check(&self, n: usize) -> Result<()> {
        let indexed = !matches!(
            self.kind,
            OpKind::Dx | OpKind::KGen | OpKind::LGen | OpKind::MGen | OpKind::NGen
        );
        if n == 0 || n > crate::arith::MAX_VARS {
            return Err(Error::IndexOutOfRange(format!("n = {n}")));
        }
        if indexed && self.index > n {
            return Err(Error::IndexOutOfRange(format!(
                "{:?} index {} exceeds n = {n}",
                self.kind, self.index
            )));
        }
        Ok(())
    }
}

/// `T_t^I(Δ(x))`: the difference product with `x_i -> t x_i` for `i ∈ I`.
pub(crate) fn t_shifted_delta(n: usize, mask: u32) -> XPoly<Poly> {
    let d: XPoly<Poly> = vandermonde(n);
    super::shift_poly(&d, &Shift::from_mask(mask, n), Param::T)
}

pub(crate) fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask & (1 << i) != 0).collect()
}

/// `x_I` (or `x_I^{-1}` when `inverse`).
pub(crate) fn x_subset(mask: u32, n: usize, inverse: bool) -> XMono {
    let e = if inverse { -1 } else { 1 };
    let mut m = XMono::one();
    for i in members(mask, n) {
        m.0[i] = e;
    }
    m
}

/// `e_k` of the variables outside `I`, or of their inverses.
pub(crate) fn elementary_outside(mask: u32, n: usize, k: usize, inverse: bool) -> XPoly<Poly> {
    let comp: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) == 0).collect();
    let e: XPoly<Poly> = elementary_in(n, &comp, k);
    if inverse {
        e.map_terms(|m, c| Some((XMono(m.0.map(|x| -x)), c.clone())))
    } else {
        e
    }
}

fn neg_pow(u: &Poly, k: usize) -> Poly {
    u.neg().pow(k as u32)
}

/// `Σ_{J} x_J^{±1} Σ_{I ⊂ J} (-u)^{|I|} T_t^I(Δ)/Δ T^I`, summed over `J`
/// first: `Σ_I (-u)^{|I|} T_t^I(Δ) x_I^{±1} e_{m-|I|}(x_{I^c}^{±1}) T^I`.
fn k_family(n: usize, m: usize, u: &Poly, inverse: bool) -> QDiffOp {
    let mut op = QDiffOp::zero(n);
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k > m {
            continue;
        }
        let e = elementary_outside(mask, n, m - k, inverse);
        if e.is_zero() {
            continue;
        }
        let num = t_shifted_delta(n, mask)
            .mul(&e)
            .mul_mono(&x_subset(mask, n, inverse))
            .scale(&neg_pow(u, k));
        op.add_term(Shift::from_mask(mask, n), num);
    }
    op
}

/// `Σ_{J} x_J^{±1} Σ_{I ⊂ J} (-u)^{m-|I|} T_t^{I^c}(Δ)/Δ T^{I^c}`.
fn l_family(n: usize, m: usize, u: &Poly, inverse: bool) -> QDiffOp {
    let full = (1u32 << n) - 1;
    let mut op = QDiffOp::zero(n);
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k > m {
            continue;
        }
        let e = elementary_outside(mask, n, m - k, inverse);
        if e.is_zero() {
            continue;
        }
        let comp = full & !mask;
        let num = t_shifted_delta(n, comp)
            .mul(&e)
            .mul_mono(&x_subset(mask, n, inverse))
            .scale(&neg_pow(u, m - k));
        op.add_term(Shift::from_mask(comp, n), num);
    }
    op
}

/// `Σ_{|I| = r} (-u)^r T_t^I(Δ)/Δ T^I`; all `r` when `r` is `None`.
fn d_family(n: usize, r: Option<usize>, u: &Poly) -> QDiffOp {
    let mut op = QDiffOp::zero(n);
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if r.is_some_and(|r| r != k) {
            continue;
        }
        let c = if r.is_some() { Poly::one() } else { neg_pow(u, k) };
        op.add_term(Shift::from_mask(mask, n), t_shifted_delta(n, mask).scale(&c));
    }
    op
}

fn generator(n: usize, u: &Poly, v: &Poly, part: impl Fn(usize, &Poly) -> QDiffOp) -> QDiffOp {
    (0..=n).fold(QDiffOp::zero(n), |acc, m| {
        acc.add(&part(m, u).scale(&v.pow(m as u32)))
    })
}

/// The operator named by `spec` in `n` variables.
pub fn build(spec: &OperatorSpec, n: usize) -> Result<QDiffOp> {
    spec.check(n)?;
    let m = spec.index;
    let u = &spec.u;
    let raising_u = Poly::t_pow(m as i64 - n as i64 + 1);
    let minus_scale = Poly::t_pow(-binom2(n - m.min(n)));
    Ok(match spec.kind {
        OpKind::D => d_family(n, Some(m), u),
        OpKind::Dx => d_family(n, None, u),
        OpKind::Ku => k_family(n, m, u, false),
        OpKind::Lu => l_family(n, m, u, false),
        OpKind::Mu => k_family(n, m, u, true),
        OpKind::Nu => l_family(n, m, u, true),
        OpKind::KPlus => k_family(n, m, &raising_u, false),
        OpKind::KMinus => l_family(n, m, &raising_u, false).scale(&minus_scale),
        OpKind::MPlus => k_family(n, m, &Poly::one(), true),
        OpKind::MMinus => l_family(n, m, &Poly::one(), true).scale(&minus_scale),
        OpKind::KGen => generator(n, u, &spec.v, |m, u| k_family(n, m, u, false)),
        OpKind::LGen => generator(n, u, &spec.v, |m, u| l_family(n, m, u, false)),
        OpKind::MGen => generator(n, u, &spec.v, |m, u| k_family(n, m, u, true)),
        OpKind::NGen => generator(n, u, &spec.v, |m, u| l_family(n, m, u, true)),
    })
}
