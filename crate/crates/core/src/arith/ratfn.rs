use std::fmt;

use num_bigint::BigInt;

use super::gcd::gcd;
use super::poly::Poly;
use super::ring::Ring;

/// Element of the fraction field ℚ(q, t, ...), kept in reduced canonical form.
///
/// Canonical form: the denominator is a genuine polynomial with no monomial
/// factor and a positive lowest term, numerator and denominator are coprime,
/// and any monomial unit lives in the numerator. Two fractions are equal iff
/// their canonical forms coincide.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

/// Element of ℚ(q, t); shares the representation of [`RatFn`].
pub type RatBi = RatFn;

impl RatFn {
    /// Panics if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (n0, nm) = num.strip_monomial();
        let (d0, dm) = den.strip_monomial();
        let g = gcd(&n0, &d0);
        let (mut n1, mut d1) = if g.is_one() {
            (n0, d0)
        } else {
            (
                n0.exact_div(&g).expect("gcd divides numerator"),
                d0.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        if d1.lowest_term().is_some_and(|(_, c)| c < &BigInt::from(0)) {
            n1 = n1.neg();
            d1 = d1.neg();
        }
        RatFn {
            num: n1.mul_mono(&nm.div(&dm)),
            den: d1,
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        RatFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        RatFn {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a Laurent polynomial, if the denominator is 1.
    pub fn to_poly(&self) -> Option<Poly> {
        self.den.is_one().then(|| self.num.clone())
    }

    /// True iff the value lies in ℤ[q, t, ...] (no denominator, no negative
    /// exponents).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one() && self.num.is_polynomial()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return Self::from_poly(self.num.add(&o.num));
            }
            return Self::new(self.num.add(&o.num), self.den.clone());
        }
        Self::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(self.num.mul(&o.num));
        }
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::new(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        Some(self.mul(&o.inv()?))
    }

    /// Applies a ring map to numerator and denominator, e.g. `q <-> t`.
    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        Self::new(f(&self.num), f(&self.den))
    }
}

impl From<Poly> for RatFn {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let n = if self.num.num_terms() > 1 {
                format!("({})", self.num)
            } else {
                self.num.to_string()
            };
            let d = if self.den.num_terms() > 1 {
                format!("({})", self.den)
            } else {
                self.den.to_string()
            };
            write!(f, "{}/{}", n, d)
        }
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({})", self)
    }
}

impl Ring for RatFn {
    fn zero() -> Self {
        RatFn::zero()
    }
    fn one() -> Self {
        RatFn::one()
    }
    fn from_i64(v: i64) -> Self {
        RatFn::from_poly(Poly::int(v))
    }
    fn is_zero(&self) -> bool {
        RatFn::is_zero(self)
    }
    fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }
    fn add(&self, other: &Self) -> Self {
        RatFn::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatFn::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatFn::mul(self, other)
    }
    fn neg(&self) -> Self {
        RatFn::neg(self)
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        self.div(other)
    }
    fn is_compound(&self) -> bool {
        !self.den.is_one() || Ring::is_compound(&self.num)
    }
}
