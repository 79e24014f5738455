//! Multivariate gcd over ℤ by recursive primitive pseudo-remainder sequences.

use num_bigint::BigInt;
use num_integer::Integer;


use super::poly::{PMono, Param, Poly};

/// Greatest common divisor in the Laurent ring ℤ[q^±, t^±, ...].
///
/// Monomials are units there, so the result is monomial-free and its lowest
/// term is positive. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.strip_monomial().0.normalize_sign();
    }
    if b.is_zero() {
        return a.strip_monomial().0.normalize_sign();
    }
    let (a0, _) = a.strip_monomial();
    let (b0, _) = b.strip_monomial();
    gcd_polynomial(&a0, &b0).strip_monomial().0.normalize_sign()
}

fn main_param(a: &Poly, b: &Poly) -> Option<Param> {
    Param::ALL
        .into_iter()
        .find(|&p| a.involves(p) || b.involves(p))
}

/// Gcd of genuine polynomials (nonnegative exponents).
fn gcd_polynomial(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.normalize_sign();
    }
    if b.is_zero() {
        return a.normalize_sign();
    }
    if a.is_one() || b.is_one() {
        return Poly::one();
    }
    let Some(v) = main_param(a, b) else {
        let g = a.content().gcd(&b.content());
        return Poly::constant(g);
    };
    if !a.involves(v) {
        return gcd_polynomial(a, &content_in(b, v));
    }
    if !b.involves(v) {
        return gcd_polynomial(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd_polynomial(&ca, &cb);
    let pa = to_univariate(&a.exact_div(&ca).expect("content divides"), v);
    let pb = to_univariate(&b.exact_div(&cb).expect("content divides"), v);
    let g = primitive_prs(pa, pb);
    from_univariate(&g, v).mul(&c).normalize_sign()
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
fn content_in(p: &Poly, v: Param) -> Poly {
    let coeffs = to_univariate(p, v);
    let mut g = Poly::zero();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = gcd_polynomial(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn to_univariate(p: &Poly, v: Param) -> Vec<Poly> {
    let deg = p.degree_range(v).map_or(0, |(_, hi)| hi.max(0) as usize);
    let mut buckets: Vec<Vec<(PMono, BigInt)>> = vec![Vec::new(); deg + 1];
    for (m, c) in p.terms() {
        let e = m.exp(v);
        debug_assert!(e >= 0);
        let mut rest = *m;
        rest.0[v.index()] = 0;
        buckets[e as usize].push((rest, c.clone()));
    }
    buckets.into_iter().map(Poly::from_terms).collect()
}

fn from_univariate(coeffs: &[Poly], v: Param) -> Poly {
    let mut out = Poly::zero();
    for (e, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&c.mul_mono(&PMono::var(v, e as i16)));
        }
    }
    out
}

fn trim(p: &mut Vec<Poly>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn degree(p: &[Poly]) -> usize {
    p.len() - 1
}

/// Pseudo-remainder of `a` by `b` (both nonzero, trimmed).
fn prem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let mut r: Vec<Poly> = a.to_vec();
    let db = degree(b);
    let lb = b[db].clone();
    trim(&mut r);
    while !r.is_empty() && degree(&r) >= db {
        let dr = degree(&r);
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = c.mul(&lb);
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&bc.mul(&lr));
        }
        trim(&mut r);
    }
    r
}

fn primitive_part(p: Vec<Poly>) -> Vec<Poly> {
    let mut g = Poly::zero();
    for c in p.iter().filter(|c| !c.is_zero()) {
        g = gcd_polynomial(&g, c);
        if g.is_one() {
            return p;
        }
    }
    if g.is_zero() {
        return p;
    }
    p.into_iter()
        .map(|c| c.exact_div(&g).expect("content divides"))
        .collect()
}

fn primitive_prs(a: Vec<Poly>, b: Vec<Poly>) -> Vec<Poly> {
    let (mut r0, mut r1) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    trim(&mut r0);
    trim(&mut r1);
    while !r1.is_empty() {
        if r1.len() == 1 {
            return vec![Poly::one()];
        }
        let r = prem(&r0, &r1);
        r0 = r1;
        r1 = primitive_part(r);
    }
    primitive_part(r0)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_poly as p;

    #[test]
    fn univariate_and_bivariate() {
        assert_eq!(gcd(&p("1 - t^2").unwrap(), &p("1 - t").unwrap()), p("1 - t").unwrap());
        let a = p("(1 - t)*(1 - q*t)*(1 + q)").unwrap();
        let b = p("(1 - q*t)*(1 - q)^2").unwrap();
        assert_eq!(gcd(&a, &b), p("1 - q*t").unwrap());
        assert_eq!(gcd(&p("6*q").unwrap(), &p("4*q^2").unwrap()), Poly::int(2));
        assert_eq!(gcd(&p("q^-1 - t").unwrap(), &p("1 - q*t").unwrap()), p("1 - q*t").unwrap());
    }

    #[test]
    fn coprime() {
        assert!(gcd(&p("1 - q").unwrap(), &p("1 - t").unwrap()).is_one());
        assert!(gcd(&p("1 + q + t").unwrap(), &p("2").unwrap()).is_one());
    }
}
