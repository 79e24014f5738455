//! q-special functions and coefficient specializations.

use num_rational::BigRational;
use num_traits::{Pow, Zero};

use super::poly::{PMono, Param, Poly};
use super::ratfn::RatFn;
use super::xpoly::XPoly;
use crate::error::{Error, Result};

/// `(a; t)_k = ∏_{i=0}^{k-1} (1 - a t^i)`.
pub fn pochhammer_t(a: &Poly, k: u32) -> Poly {
    (0..k).fold(Poly::one(), |acc, i| {
        acc.mul(&a.mul(&Poly::t_pow(i as i64)).one_minus())
    })
}

/// Gaussian binomial coefficient `[m, r]_t`.
pub fn gauss_binomial(m: u32, r: u32) -> Result<Poly> {
    if r > m {
        return Err(Error::OutOfRange(format!("gauss_binomial({m}, {r})")));
    }
    // row-by-row Pascal recurrence [m, r] = [m-1, r-1] + t^r [m-1, r]
    let mut row = vec![Poly::one()];
    for mm in 1..=m {
        let mut next = Vec::with_capacity(mm as usize + 1);
        for rr in 0..=mm {
            let left = if rr > 0 { row[rr as usize - 1].clone() } else { Poly::zero() };
            let right = if rr < mm {
                row[rr as usize].mul(&Poly::t_pow(rr as i64))
            } else {
                Poly::zero()
            };
            next.push(left.add(&right));
        }
        row = next;
    }
    Ok(row[r as usize].clone())
}

/// `n choose 2`, used for the `t^{C(k,2)}` weights.
pub fn binom2(k: usize) -> i64 {
    (k as i64) * (k as i64 - 1) / 2
}

/// Coefficient specializations.
#[derive(Clone, Debug, PartialEq)]
pub enum SubstRule {
    /// `q := t`
    QToT,
    /// `q := t^k`
    QToTPow(u32),
    /// `t := value`
    TToRational(BigRational),
    /// Divide by `(1 - t)^order` exactly, then set `t := 1`.
    LimitAtTOne { order: u32 },
}

/// `q := t^k` on a single coefficient.
pub fn q_to_t_pow(c: &Poly, k: u32) -> Poly {
    c.subst_monomial(Param::Q, &PMono::var(Param::T, k as i16))
}

/// Exact division by `(1 - t)^order` followed by `t := 1`.
pub fn limit_at_t_one(c: &Poly, order: u32) -> Result<Poly> {
    let d = Poly::t().one_minus().pow(order);
    let quotient = c.exact_div(&d).ok_or_else(|| Error::NotDivisible {
        order,
        value: c.to_string(),
    })?;
    quotient.eval_int(Param::T, 1).ok_or_else(|| Error::NotDivisible {
        order,
        value: c.to_string(),
    })
}

/// `t := p/r` on a single coefficient.
pub fn t_to_rational(c: &Poly, value: &BigRational) -> Result<RatFn> {
    let Some((lo, hi)) = c.degree_range(Param::T) else {
        return Ok(RatFn::zero());
    };
    if value.is_zero() && lo < 0 {
        return Err(Error::OutOfRange("t := 0 on a negative power of t".into()));
    }
    let mut acc = RatFn::zero();
    for e in lo..=hi {
        let coeff = c.coefficient_of(Param::T, e);
        if coeff.is_zero() {
            continue;
        }
        let power = Pow::pow(value, e as i32);
        acc = acc.add(&RatFn::new(
            coeff.scale(power.numer()),
            Poly::constant(power.denom().clone()),
        ));
    }
    Ok(acc)
}

/// Coefficient-wise substitution on an `x`-polynomial; exact throughout.
pub fn substitute(f: &XPoly<Poly>, rule: &SubstRule) -> Result<XPoly<RatFn>> {
    match rule {
        SubstRule::QToT => Ok(f.map_coeffs(|c| RatFn::from_poly(q_to_t_pow(c, 1)))),
        SubstRule::QToTPow(k) => Ok(f.map_coeffs(|c| RatFn::from_poly(q_to_t_pow(c, *k)))),
        SubstRule::TToRational(v) => f.try_map_coeffs(|c| t_to_rational(c, v)),
        SubstRule::LimitAtTOne { order } => {
            f.try_map_coeffs(|c| limit_at_t_one(c, *order).map(RatFn::from_poly))
        }
    }
}

/// `q := t^k` keeping polynomial coefficients.
pub fn specialize_q(f: &XPoly<Poly>, k: u32) -> XPoly<Poly> {
    f.map_coeffs(|c| q_to_t_pow(c, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_poly as p;
    use crate::arith::xpoly::XMono;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer_t(&Poly::t(), 2), p("(1 - t)*(1 - t^2)").unwrap());
        assert!(pochhammer_t(&Poly::t(), 0).is_one());
        let a = p("u*t^2").unwrap();
        assert_eq!(pochhammer_t(&a, 2), p("(1 - u*t^2)*(1 - u*t^3)").unwrap());
    }

    #[test]
    fn gauss_binomial_examples() {
        assert_eq!(gauss_binomial(2, 1).unwrap(), p("1 + t").unwrap());
        assert!(gauss_binomial(5, 0).unwrap().is_one());
        assert_eq!(gauss_binomial(3, 2).unwrap(), p("1 + t + t^2").unwrap());
        assert!(matches!(gauss_binomial(2, 3), Err(Error::OutOfRange(_))));
        // quotient-of-products oracle
        for m in 0..7u32 {
            for r in 0..=m {
                let num = pochhammer_t(&Poly::t(), m);
                let den = pochhammer_t(&Poly::t(), r).mul(&pochhammer_t(&Poly::t(), m - r));
                assert_eq!(gauss_binomial(m, r).unwrap(), num.exact_div(&den).unwrap());
            }
        }
    }

    #[test]
    fn substitution_rules() {
        let f = XPoly::monomial(1, XMono::var(0, 1), p("1 - q*t").unwrap());
        let g = substitute(&f, &SubstRule::QToT).unwrap();
        assert_eq!(g.terms()[0].1, RatFn::from_poly(p("1 - t^2").unwrap()));
        let c = p("(1 - t)*(1 - t^3)").unwrap();
        assert_eq!(limit_at_t_one(&c, 2).unwrap(), Poly::int(3));
        let err = substitute(&f, &SubstRule::LimitAtTOne { order: 2 });
        assert!(matches!(err, Err(Error::NotDivisible { .. })));
        let half = BigRational::new(1.into(), 2.into());
        let h = t_to_rational(&p("1 - t + t^-1").unwrap(), &half).unwrap();
        assert_eq!(h, RatFn::new(Poly::int(5), Poly::int(2)));
    }
}
