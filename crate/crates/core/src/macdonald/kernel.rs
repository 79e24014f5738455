//! The two-alphabet kernel function `F(u; x, y)` and the finite identities
//! that stand in for the action of the raising operators on the
//! reproducing kernel. Variables `x_1..x_n` occupy slots `0..n` and
//! `y_1..y_m` occupy slots `n..n+m`.

use crate::arith::special::binom2;
use crate::arith::{pochhammer_t, Poly, XMono, XPoly};
use crate::error::{Error, Result};

/// A quotient of two `x`-polynomials, compared by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalX {
    pub num: XPoly<Poly>,
    pub den: XPoly<Poly>,
}

impl RationalX {
    pub fn same_as(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }

    pub fn scale(&self, c: &Poly) -> Self {
        RationalX {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Exact quotient when the denominator divides the numerator.
    pub fn to_poly(&self) -> Result<XPoly<Poly>> {
        self.num.exact_div(&self.den)
    }
}

fn var(nv: usize, i: usize) -> XPoly<Poly> {
    XPoly::var(nv, i)
}

/// `∏_{a<b} (z_a - z_b)` over the listed slots.
pub(crate) fn delta_in(nv: usize, slots: &[usize]) -> XPoly<Poly> {
    let mut out = XPoly::one(nv);
    for a in 0..slots.len() {
        for b in (a + 1)..slots.len() {
            out = out.mul(&var(nv, slots[a]).sub(&var(nv, slots[b])));
        }
    }
    out
}

/// `Δ(z) ∏_{i ∈ I, j ∉ I} (t z_i - z_j)/(z_i - z_j)` (or with `(z_i - t z_j)`
/// when `t_inside` is false), where `I` is a bit mask over `slots`.
pub(crate) fn ratio_numerator_in(nv: usize, slots: &[usize], mask: u32, t_inside: bool) -> XPoly<Poly> {
    let inside = |a: usize| mask & (1 << a) != 0;
    let z = |a: usize| var(nv, slots[a]);
    let t = Poly::t();
    let k = slots.len();
    let mut out = XPoly::one(nv);
    let mut sign = 1;
    for a in 0..k {
        for b in (a + 1)..k {
            match (inside(a), inside(b)) {
                (true, true) | (false, false) => out = out.mul(&z(a).sub(&z(b))),
                (false, true) => sign = -sign,
                (true, false) => {}
            }
        }
    }
    for a in (0..k).filter(|&a| inside(a)) {
        for b in (0..k).filter(|&b| !inside(b)) {
            let f = if t_inside {
                z(a).scale(&t).sub(&z(b))
            } else {
                z(a).sub(&z(b).scale(&t))
            };
            out = out.mul(&f);
        }
    }
    out.scale(&Poly::int(sign))
}

/// `1 - c z_a z_b`.
fn one_minus(nv: usize, a: usize, b: usize, c: &Poly) -> XPoly<Poly> {
    let mut m = XMono::one();
    m.0[a] += 1;
    m.0[b] += 1;
    XPoly::one(nv).sub(&XPoly::monomial(nv, m, c.clone()))
}

/// `∏_{a ∈ A, b ∈ B} (1 - c z_a z_b)`.
fn pair_product(nv: usize, a: &[usize], b: &[usize], c: &Poly) -> XPoly<Poly> {
    let mut out = XPoly::one(nv);
    for &i in a {
        for &k in b {
            out = out.mul(&one_minus(nv, i, k, c));
        }
    }
    out
}

fn pick(slots: &[usize], mask: u32, inside: bool) -> Vec<usize> {
    slots
        .iter()
        .enumerate()
        .filter(|(a, _)| (mask & (1 << a) != 0) == inside)
        .map(|(_, &s)| s)
        .collect()
}

/// `Σ_{I ⊂ A} (-u)^{|I|} t^{C(|I|,2)} ∏ (t z_i - z_j)/(z_i - z_j)
/// ∏_{i ∈ I, k ∈ B} (1 - z_i w_k)/(1 - t z_i w_k)`.
fn kernel_sum(u: &Poly, nv: usize, a: &[usize], b: &[usize]) -> RationalX {
    let one = Poly::one();
    let t = Poly::t();
    let mut num = XPoly::zero(nv);
    for mask in 0u32..(1 << a.len()) {
        let k = mask.count_ones() as usize;
        let c = u.neg().pow(k as u32).mul(&Poly::t_pow(binom2(k)));
        let inside = pick(a, mask, true);
        let outside = pick(a, mask, false);
        let term = ratio_numerator_in(nv, a, mask, true)
            .mul(&pair_product(nv, &inside, b, &one))
            .mul(&pair_product(nv, &outside, b, &t));
        num = num.add(&term.scale(&c));
    }
    RationalX {
        num,
        den: delta_in(nv, a).mul(&pair_product(nv, a, b, &t)),
    }
}

fn slots(n: usize, m: usize) -> (Vec<usize>, Vec<usize>) {
    ((0..n).collect(), (n..n + m).collect())
}

fn check_sizes(n: usize, m: usize) -> Result<()> {
    if m > n || n + m > crate::arith::MAX_VARS {
        return Err(Error::IndexOutOfRange(format!("n = {n}, m = {m}")));
    }
    Ok(())
}

/// `F(u; x, y) = Σ_{I ⊂ [1,n]} (-u)^{|I|} t^{C(|I|,2)} ∏_{i∈I, j∉I}
/// (t x_i - x_j)/(x_i - x_j) ∏_{i∈I, k} (1 - x_i y_k)/(1 - t x_i y_k)`.
pub fn kernel_f(u: &Poly, n: usize, m: usize) -> Result<RationalX> {
    check_sizes(n, m)?;
    let (xs, ys) = slots(n, m);
    Ok(kernel_sum(u, n + m, &xs, &ys))
}

/// `F(u; y, x)` in the same slots as [`kernel_f`].
pub fn kernel_f_swapped(u: &Poly, n: usize, m: usize) -> Result<RationalX> {
    check_sizes(n, m)?;
    let (xs, ys) = slots(n, m);
    Ok(kernel_sum(u, n + m, &ys, &xs))
}

/// `F(u; x, y) = (u; t)_{n-m} F(u t^{n-m}; y, x)` with `u` symbolic.
pub fn check_kernel_symmetry(n: usize, m: usize) -> Result<()> {
    let u = Poly::u();
    let lhs = kernel_f(&u, n, m)?;
    let shifted = u.mul(&Poly::t_pow((n - m) as i64));
    let rhs = kernel_f_swapped(&shifted, n, m)?.scale(&pochhammer_t(&u, (n - m) as u32));
    if !lhs.same_as(&rhs) {
        return Err(Error::IdentityFailed(
            super::witness(&lhs.num.mul(&rhs.den), &rhs.num.mul(&lhs.den)).unwrap_or_default(),
        ));
    }
    Ok(())
}

/// `(y_1 ⋯ y_m)^{-1} Σ_{K ⊂ [1,m]} (-1)^{|K|} t^{C(|K|,2)} ∏ (t y_k - y_l)/(y_k - y_l)
/// ∏_{i, k ∈ K} (1 - x_i y_k)/(1 - t x_i y_k)`, as a numerator over
/// `Δ(x) Δ(y) y_1⋯y_m ∏_{i,k} (1 - t x_i y_k)`.
fn kernel_right_numerator(n: usize, m: usize) -> XPoly<Poly> {
    let nv = n + m;
    let (xs, ys) = slots(n, m);
    let one = Poly::one();
    let t = Poly::t();
    let mut num = XPoly::zero(nv);
    for mask in 0u32..(1 << m) {
        let k = mask.count_ones() as usize;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let c = Poly::int(sign).mul(&Poly::t_pow(binom2(k)));
        let inside = pick(&ys, mask, true);
        let outside = pick(&ys, mask, false);
        let term = ratio_numerator_in(nv, &ys, mask, true)
            .mul(&pair_product(nv, &xs, &inside, &one))
            .mul(&pair_product(nv, &xs, &outside, &t));
        num = num.add(&term.scale(&c));
    }
    num.mul(&delta_in(nv, &xs))
}

/// Left side of the kernel identity for `K^+_m` (`minus = false`) or
/// `K^-_m` (`minus = true`), over the same denominator as
/// [`kernel_right_numerator`], with the sum over `J` kept explicit.
fn kernel_left_numerator(n: usize, m: usize, minus: bool) -> XPoly<Poly> {
    let nv = n + m;
    let (xs, ys) = slots(n, m);
    let one = Poly::one();
    let t = Poly::t();
    let raise_u = Poly::t_pow(m as i64 - n as i64 + 1);
    let full = (1u32 << n) - 1;
    let mut num = XPoly::zero(nv);
    for jmask in 0..=full {
        if jmask.count_ones() as usize != m {
            continue;
        }
        let mut xj = XMono::one();
        for i in pick(&xs, jmask, true) {
            xj.0[i] = 1;
        }
        let js = pick(&xs, jmask, true);
        for sub in 0u32..(1 << js.len()) {
            let imask: u32 = (0..js.len())
                .filter(|&a| sub & (1 << a) != 0)
                .map(|a| 1u32 << js[a])
                .sum();
            let k = imask.count_ones() as usize;
            let inside = pick(&xs, imask, true);
            let outside = pick(&xs, imask, false);
            let (c, ratio, kernel) = if minus {
                let c = Poly::t().neg().pow((m - k) as u32).mul(&Poly::t_pow(binom2(m - k)));
                let kernel = pair_product(nv, &outside, &ys, &one).mul(&pair_product(nv, &inside, &ys, &t));
                (c, ratio_numerator_in(nv, &xs, imask, false), kernel)
            } else {
                let c = raise_u.neg().pow(k as u32).mul(&Poly::t_pow(binom2(k)));
                let kernel = pair_product(nv, &inside, &ys, &one).mul(&pair_product(nv, &outside, &ys, &t));
                (c, ratio_numerator_in(nv, &xs, imask, true), kernel)
            };
            num = num.add(&ratio.mul(&kernel).mul_mono(&xj).scale(&c));
        }
    }
    let yall = (n..nv).fold(XMono::one(), |acc, k| acc.mul(&XMono::var(k, 1)));
    num.mul(&delta_in(nv, &ys)).mul_mono(&yall)
}

/// The finite kernel identity equivalent to `K_{m,x} Π(x,y) = (y_1⋯y_m)^{-1}
/// D_y(1) Π(x,y)` for `K^+_m` or `K^-_m`; it does not involve `q`.
pub fn check_kernel_raising(n: usize, m: usize, minus: bool) -> Result<()> {
    check_sizes(n, m)?;
    super::expect_equal(&kernel_left_numerator(n, m, minus), &kernel_right_numerator(n, m))
}
