//! Raising and lowering operators on symmetric functions as antisymmetrized
//! elementary functions of commuting one-variable letters.

use super::build::{OpKind, OperatorSpec};
use super::{shift_poly, Shift};
use crate::arith::special::binom2;
use crate::arith::xpoly::{for_each_subset, permutations};
use crate::arith::{Param, Poly, XMono, XPoly};
use crate::error::{Error, Result};

/// A letter in variable `i`: `Σ coeff · x_i^{power} T_{q,x_i}^{shift}`.
type Letter = Vec<(i16, i8, Poly)>;

fn apply_letter(letter: &Letter, i: usize, g: &XPoly<Poly>) -> XPoly<Poly> {
    let n = g.nvars();
    let mut out = XPoly::zero(n);
    for (power, shift, c) in letter {
        let mut s = Shift::zero();
        s.0[i] = *shift;
        let term = shift_poly(g, &s, Param::Q).mul_mono(&XMono::var(i, *power));
        out = out.add(&term.scale(c));
    }
    out
}

/// `K^±_m f` or `M^±_m f` for symmetric `f` as
/// `Δ^{-1} Σ_w ε(w) w(x^δ e_m(letters) f)`.
pub fn apply_antisymmetrized(spec: &OperatorSpec, f: &XPoly<Poly>, n: usize) -> Result<XPoly<Poly>> {
    spec.check(n)?;
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric(format!("{f}")));
    }
    let m = spec.index;
    let tp = |e: i64| Poly::t_pow(e);
    // 1-based letter index i = k + 1, δ_i = n - i
    let letters: Vec<Letter> = (0..n)
        .map(|k| {
            let i = k as i64 + 1;
            let delta = n as i64 - i;
            let neg = |p: Poly| p.neg();
            match spec.kind {
                OpKind::KPlus => vec![(1, 0, Poly::one()), (1, 1, neg(tp(m as i64 - i + 1)))],
                OpKind::KMinus => vec![
                    (1, -1, tp(-delta)),
                    (1, 0, neg(tp(m as i64 - i + 1 - delta))),
                ],
                OpKind::MPlus => vec![(-1, 0, Poly::one()), (-1, 1, neg(tp(delta)))],
                OpKind::MMinus => vec![(-1, -1, tp(-delta)), (-1, 0, Poly::int(-1))],
                _ => Vec::new(),
            }
        })
        .collect();
    let minus = match spec.kind {
        OpKind::KPlus | OpKind::MPlus => false,
        OpKind::KMinus | OpKind::MMinus => true,
        other => {
            return Err(Error::OutOfRange(format!(
                "{other:?} has no antisymmetrized form"
            )))
        }
    };
    let start = if minus {
        shift_poly(f, &Shift::all(n), Param::Q)
    } else {
        f.clone()
    };
    let mut em = XPoly::zero(n);
    for_each_subset(n, m, |set| {
        let mut g = start.clone();
        for &i in set {
            g = apply_letter(&letters[i], i, &g);
        }
        em = em.add(&g);
    });
    let delta_mono = XMono::from_slice(&(0..n).map(|i| (n - 1 - i) as i64).collect::<Vec<_>>());
    let g = em.mul_mono(&delta_mono);
    let perms = permutations(n);
    let parts = crate::par::map(&perms, |(w, sign)| g.permute(w).scale(&Poly::int(*sign)));
    let alt = parts.into_iter().fold(XPoly::zero(n), |acc, p| acc.add(&p));
    let out = alt.div_vandermonde(n)?;
    Ok(if minus {
        out.scale(&tp(binom2(n) - binom2(n - m)))
    } else {
        out
    })
}
