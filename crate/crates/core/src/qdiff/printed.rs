//! The operators written out term by term as products of ratios
//! `(t x_i - x_j)/(x_i - x_j)` with an explicit sum over `J ⊇ I`. Used as an
//! independent construction to check the interchanged-sum builders.

use super::build::{members, x_subset, OpKind, OperatorSpec};
use super::{QDiffOp, Shift};
use crate::arith::special::binom2;
use crate::arith::{Poly, XPoly};
use crate::error::Result;

/// `Δ(x) · ∏_{i ∈ I, j ∉ I} (a x_i - b x_j) / (x_i - x_j)` where the pair
/// `(a, b)` is `(t, 1)` or `(1, t)`.
fn ratio_numerator(n: usize, mask: u32, t_on_inside: bool) -> XPoly<Poly> {
    let inside = |i: usize| mask & (1 << i) != 0;
    let x = |i: usize| XPoly::<Poly>::var(n, i);
    let t = Poly::t();
    let mut out = XPoly::one(n);
    let mut sign = 1;
    for a in 0..n {
        for b in (a + 1)..n {
            match (inside(a), inside(b)) {
                (true, true) | (false, false) => out = out.mul(&x(a).sub(&x(b))),
                (false, true) => sign = -sign,
                (true, false) => {}
            }
        }
    }
    for i in (0..n).filter(|&i| inside(i)) {
        for j in (0..n).filter(|&j| !inside(j)) {
            let f = if t_on_inside {
                x(i).scale(&t).sub(&x(j))
            } else {
                x(i).sub(&x(j).scale(&t))
            };
            out = out.mul(&f);
        }
    }
    out.scale(&Poly::int(sign))
}

/// Which of the two printed shapes a family follows.
#[derive(Clone, Copy)]
enum Shape {
    /// coefficient `c(|I|) ∏ (t x_i - x_j)/(x_i - x_j)` with shift `T^I`
    Inside,
    /// coefficient `c(|I|) ∏ (x_i - t x_j)/(x_i - x_j)` with shift `T^{I^c}`
    Outside,
}

/// `Σ_{|J| = m} x_J^{±1} Σ_{I ⊂ J} coeff(|I|) · ratio(I) · shift(I)`.
fn subset_sum(
    n: usize,
    m: usize,
    inverse: bool,
    shape: Shape,
    coeff: impl Fn(usize) -> Poly,
) -> QDiffOp {
    let full = (1u32 << n) - 1;
    let mut op = QDiffOp::zero(n);
    for jmask in 0u32..=full {
        if jmask.count_ones() as usize != m {
            continue;
        }
        let xj = x_subset(jmask, n, inverse);
        let js = members(jmask, n);
        for sub in 0u32..(1 << js.len()) {
            let imask: u32 = (0..js.len())
                .filter(|&k| sub & (1 << k) != 0)
                .map(|k| 1u32 << js[k])
                .sum();
            let k = imask.count_ones() as usize;
            let (num, shift) = match shape {
                Shape::Inside => (ratio_numerator(n, imask, true), imask),
                Shape::Outside => (ratio_numerator(n, imask, false), full & !imask),
            };
            op.add_term(
                Shift::from_mask(shift, n),
                num.mul_mono(&xj).scale(&coeff(k)),
            );
        }
    }
    op
}

/// `Σ_{|I| = r}` (or all `I`) `coeff(|I|) t^{C(|I|,2)} ratio(I) T^I`.
fn d_sum(n: usize, r: Option<usize>, coeff: impl Fn(usize) -> Poly) -> QDiffOp {
    let mut op = QDiffOp::zero(n);
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if r.is_some_and(|r| r != k) {
            continue;
        }
        let c = coeff(k).mul(&Poly::t_pow(binom2(k)));
        op.add_term(Shift::from_mask(mask, n), ratio_numerator(n, mask, true).scale(&c));
    }
    op
}

fn neg_pow(u: &Poly, k: usize) -> Poly {
    u.neg().pow(k as u32)
}

/// The operator named by `spec`, written exactly in its defining subset-sum
/// form with every `T_t^I(Δ)/Δ` replaced by `t^{C(|I|,2)}` times the ratio
/// product.
pub fn build_printed(spec: &OperatorSpec, n: usize) -> Result<QDiffOp> {
    spec.check(n)?;
    let m = spec.index;
    let u = spec.u.clone();
    let t = Poly::t;
    let nn = n as i64;
    let mi = m as i64;
    // (-u)^{|I|} T_t^I(Δ)/Δ with the (3.6) expansion
    let ku = |m: usize, inv: bool, u: Poly| {
        subset_sum(n, m, inv, Shape::Inside, move |k| {
            neg_pow(&u, k).mul(&Poly::t_pow(binom2(k)))
        })
    };
    // (-u)^{m-|I|} T_t^{I^c}(Δ)/Δ = (-u)^{m-|I|} t^{C(n-|I|,2)} ∏ (x_i - t x_j)/(x_i - x_j)
    let lu = |m: usize, inv: bool, u: Poly| {
        subset_sum(n, m, inv, Shape::Outside, move |k| {
            neg_pow(&u, m - k).mul(&Poly::t_pow(binom2(n - k)))
        })
    };
    let gen = |f: &dyn Fn(usize) -> QDiffOp| {
        (0..=n).fold(QDiffOp::zero(n), |acc, m| {
            acc.add(&f(m).scale(&spec.v.pow(m as u32)))
        })
    };
    Ok(match spec.kind {
        OpKind::D => d_sum(n, Some(m), |_| Poly::one()),
        OpKind::Dx => d_sum(n, None, |k| neg_pow(&u, k)),
        OpKind::KPlus => subset_sum(n, m, false, Shape::Inside, |k| {
            neg_pow(&Poly::t_pow(mi - nn + 1), k).mul(&Poly::t_pow(binom2(k)))
        }),
        OpKind::KMinus => subset_sum(n, m, false, Shape::Outside, |k| {
            neg_pow(&t(), m - k).mul(&Poly::t_pow(binom2(m - k)))
        }),
        OpKind::MPlus => subset_sum(n, m, true, Shape::Inside, |k| {
            Poly::int(if k % 2 == 0 { 1 } else { -1 }).mul(&Poly::t_pow(binom2(k)))
        }),
        OpKind::MMinus => subset_sum(n, m, true, Shape::Outside, |k| {
            neg_pow(&Poly::t_pow(nn - mi), m - k).mul(&Poly::t_pow(binom2(m - k)))
        }),
        OpKind::Ku => ku(m, false, u),
        OpKind::Lu => lu(m, false, u),
        OpKind::Mu => ku(m, true, u),
        OpKind::Nu => lu(m, true, u),
        OpKind::KGen => gen(&|m| ku(m, false, u.clone())),
        OpKind::LGen => gen(&|m| lu(m, false, u.clone())),
        OpKind::MGen => gen(&|m| ku(m, true, u.clone())),
        OpKind::NGen => gen(&|m| lu(m, true, u.clone())),
    })
}
