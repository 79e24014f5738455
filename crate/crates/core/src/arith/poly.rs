//! Sparse Laurent polynomials over ℤ in the scalar parameters `q, t, u, v, α`.
//!
//! The operators of the engine carry coefficients in ℤ[q, t] together with the
//! auxiliary parameters `u`, `v` of the generating operators and the Jack
//! parameter `α` (rendered `a`). Negative exponents are admitted because the
//! raising operators are written with `t^{m-n+1}` and the duality involution
//! inverts `q` and `t`; polynomiality is a checked property, see
//! [`Poly::is_polynomial`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::ring;

pub const NPARAMS: usize = 5;

/// Scalar indeterminates, in rendering priority order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    Q = 0,
    T = 1,
    U = 2,
    V = 3,
    A = 4,
}

impl Param {
    pub const ALL: [Param; NPARAMS] = [Param::Q, Param::T, Param::U, Param::V, Param::A];

    pub fn symbol(self) -> &'static str {
        match self {
            Param::Q => "q",
            Param::T => "t",
            Param::U => "u",
            Param::V => "v",
            Param::A => "a",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Exponent vector over [`Param::ALL`].
///
/// Ordered graded-lexicographically: total degree first, then larger
/// `q`-exponent first, then larger `t`-exponent, and so on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct PMono(pub [i16; NPARAMS]);

impl PMono {
    pub fn one() -> Self {
        PMono([0; NPARAMS])
    }

    pub fn var(p: Param, e: i16) -> Self {
        let mut m = [0; NPARAMS];
        m[p.index()] = e;
        PMono(m)
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().map(|&e| e as i32).sum()
    }

    pub fn exp(&self, p: Param) -> i16 {
        self.0[p.index()]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        PMono(m)
    }

    pub fn div(&self, other: &Self) -> Self {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a -= *b;
        }
        PMono(m)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn meet(&self, other: &Self) -> Self {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a = (*a).min(*b);
        }
        PMono(m)
    }
}

impl Ord for PMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for PMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted ascending by [`PMono`]'s order with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(PMono, BigInt)>,
}

/// Bivariate polynomial in `(q, t)`; shares the representation of [`Poly`].
pub type BiPoly = Poly;
/// Polynomial in the Jack parameter `α`; shares the representation of [`Poly`].
pub type AlphaPoly = Poly;

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, PMono::one())
    }

    pub fn int(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    pub fn monomial(c: BigInt, m: PMono) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// `p^e` for a single parameter; `e` may be negative.
    pub fn var_pow(p: Param, e: i16) -> Self {
        Self::monomial(BigInt::one(), PMono::var(p, e))
    }

    pub fn var(p: Param) -> Self {
        Self::var_pow(p, 1)
    }

    pub fn q() -> Self {
        Self::var(Param::Q)
    }

    pub fn t() -> Self {
        Self::var(Param::T)
    }

    pub fn u() -> Self {
        Self::var(Param::U)
    }

    pub fn v() -> Self {
        Self::var(Param::V)
    }

    pub fn alpha() -> Self {
        Self::var(Param::A)
    }

    pub fn t_pow(e: i64) -> Self {
        Self::var_pow(Param::T, e as i16)
    }

    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (PMono, BigInt)>>(it: I) -> Self {
        let mut acc: FxHashMap<PMono, BigInt> = FxHashMap::default();
        for (m, c) in it {
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: FxHashMap<PMono, BigInt>) -> Self {
        let mut terms: Vec<(PMono, BigInt)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Poly { terms }
    }

    fn from_sorted(terms: Vec<(PMono, BigInt)>) -> Self {
        Poly { terms }
    }

    pub fn terms(&self) -> &[(PMono, BigInt)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == PMono::one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == PMono::one())
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if *m == PMono::one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// First term in canonical order; its sign fixes the unit normalization.
    pub fn lowest_term(&self) -> Option<&(PMono, BigInt)> {
        self.terms.first()
    }

    pub fn highest_term(&self) -> Option<&(PMono, BigInt)> {
        self.terms.last()
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_nonneg())
    }

    /// True when only the listed parameters occur.
    pub fn only_involves(&self, params: &[Param]) -> bool {
        self.terms.iter().all(|(m, _)| {
            Param::ALL
                .iter()
                .all(|p| params.contains(p) || m.exp(*p) == 0)
        })
    }

    pub fn involves(&self, p: Param) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(p) != 0)
    }

    /// `(min, max)` exponent of `p`, or `None` for the zero polynomial.
    pub fn degree_range(&self, p: Param) -> Option<(i16, i16)> {
        let mut it = self.terms.iter().map(|(m, _)| m.exp(p));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    pub fn total_degree(&self) -> Option<i32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    pub fn neg(&self) -> Self {
        Poly::from_sorted(self.terms.iter().map(|(m, c)| (*m, -c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for (m, c) in &b[j..] {
            out.push((*m, if negate { -c } else { c.clone() }));
        }
        Poly::from_sorted(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let mut acc: FxHashMap<PMono, BigInt> =
            FxHashMap::with_capacity_and_hasher(self.terms.len() * other.terms.len(), Default::default());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert_with(BigInt::zero);
                *e += ca * cb;
            }
        }
        Self::from_map(acc)
    }

    /// Multiplication by `c * m`; monomial multiplication preserves the order.
    pub fn mul_term(&self, m: &PMono, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly::from_sorted(self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect())
    }

    pub fn mul_mono(&self, m: &PMono) -> Self {
        Poly::from_sorted(self.terms.iter().map(|(a, b)| (a.mul(m), b.clone())).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.mul_term(&PMono::one(), c)
    }

    pub fn mul_int(&self, k: i64) -> Self {
        self.scale(&BigInt::from(k))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// `1 - self`.
    pub fn one_minus(&self) -> Self {
        Self::one().sub(self)
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exponents(&self) -> PMono {
        let mut it = self.terms.iter().map(|(m, _)| *m);
        match it.next() {
            None => PMono::one(),
            Some(first) => it.fold(first, |acc, m| acc.meet(&m)),
        }
    }

    /// Splits off the largest monomial factor: `self = m * rest`.
    pub fn strip_monomial(&self) -> (Poly, PMono) {
        let m = self.min_exponents();
        if m == PMono::one() {
            return (self.clone(), m);
        }
        let inv = PMono::one().div(&m);
        (self.mul_mono(&inv), m)
    }

    /// Positive gcd of the integer coefficients.
    pub fn content(&self) -> BigInt {
        self.terms
            .iter()
            .fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
    }

    /// Multiplies by -1 when the lowest term is negative.
    pub fn normalize_sign(&self) -> Self {
        match self.terms.first() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Applies an exponent map to every term (e.g. `q -> t^k`).
    pub fn map_monomials(&self, f: impl Fn(&PMono) -> PMono) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// The involution `q -> 1/q, t -> 1/t`.
    pub fn invert_qt(&self) -> Self {
        self.map_monomials(|m| {
            let mut e = m.0;
            e[Param::Q.index()] = -e[Param::Q.index()];
            e[Param::T.index()] = -e[Param::T.index()];
            PMono(e)
        })
    }

    /// Exchanges `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        self.map_monomials(|m| {
            let mut e = m.0;
            e.swap(Param::Q.index(), Param::T.index());
            PMono(e)
        })
    }

    /// Substitutes `p := t^k`-style monomials: `p^e -> image^e`.
    pub fn subst_monomial(&self, p: Param, image: &PMono) -> Self {
        self.map_monomials(|m| {
            let e = m.exp(p);
            let mut rest = *m;
            rest.0[p.index()] = 0;
            let mut img = *image;
            for x in img.0.iter_mut() {
                *x *= e;
            }
            rest.mul(&img)
        })
    }

    /// Substitutes a polynomial for `p`. Negative exponents of `p` require
    /// `value` to be a monomial with coefficient ±1.
    pub fn subst(&self, p: Param, value: &Poly) -> Option<Self> {
        if value.is_monomial() && value.terms[0].1.abs().is_one() {
            let (m, c) = &value.terms[0];
            let neg = c.is_negative();
            return Some(Self::from_terms(self.terms.iter().map(|(mono, coeff)| {
                let e = mono.exp(p);
                let mut rest = *mono;
                rest.0[p.index()] = 0;
                let mut img = *m;
                for x in img.0.iter_mut() {
                    *x *= e;
                }
                let sign = if neg && e.rem_euclid(2) == 1 { -coeff } else { coeff.clone() };
                (rest.mul(&img), sign)
            })));
        }
        let mut by_power: BTreeMap<i16, Vec<(PMono, BigInt)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(p);
            if e < 0 {
                return None;
            }
            let mut rest = *m;
            rest.0[p.index()] = 0;
            by_power.entry(e).or_default().push((rest, c.clone()));
        }
        let mut out = Self::zero();
        for (e, ts) in by_power {
            out = out.add(&Self::from_terms(ts).mul(&value.pow(e as u32)));
        }
        Some(out)
    }

    /// Evaluates `p := value` for an integer value (exponents of `p` must be
    /// nonnegative unless `value` is ±1).
    pub fn eval_int(&self, p: Param, value: i64) -> Option<Self> {
        self.subst(p, &Poly::int(value))
    }

    /// Coefficient of `p^k`, with `p` removed.
    pub fn coefficient_of(&self, p: Param, k: i16) -> Self {
        Poly::from_sorted(
            self.terms
                .iter()
                .filter(|(m, _)| m.exp(p) == k)
                .map(|(m, c)| {
                    let mut r = *m;
                    r.0[p.index()] = 0;
                    (r, c.clone())
                })
                .collect::<Vec<_>>(),
        )
        .resorted()
    }

    fn resorted(mut self) -> Self {
        self.terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        self
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`
    /// in the Laurent ring.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                out.push((m.div(dm), q));
            }
            return Some(Poly::from_sorted(out));
        }
        let (fs, fm) = self.strip_monomial();
        let (ds, dm) = d.strip_monomial();
        let q = div_polynomial(&fs, &ds)?;
        Some(q.mul_mono(&fm.div(&dm)))
    }
}

/// Long division of genuine polynomials, failing on any nonzero remainder.
fn div_polynomial(f: &Poly, d: &Poly) -> Option<Poly> {
    let (dlm, dlc) = d.terms.last()?.clone();
    let dlen = dlm.degree();
    let mut rem: BTreeMap<PMono, BigInt> = f.terms.iter().cloned().collect();
    let mut quot: Vec<(PMono, BigInt)> = Vec::new();
    while let Some((lm, lc)) = rem.pop_last() {
        if lm.degree() < dlen {
            return None;
        }
        let qm = lm.div(&dlm);
        if !qm.is_nonneg() {
            return None;
        }
        let (qc, r) = lc.div_rem(&dlc);
        if !r.is_zero() {
            return None;
        }
        for (m, c) in &d.terms[..d.terms.len() - 1] {
            let key = m.mul(&qm);
            let e = rem.entry(key).or_insert_with(BigInt::zero);
            *e -= &qc * c;
            if e.is_zero() {
                rem.remove(&key);
            }
        }
        quot.push((qm, qc));
    }
    Some(Poly::from_terms(quot))
}

impl From<i64> for Poly {
    fn from(v: i64) -> Self {
        Poly::int(v)
    }
}

impl From<BigInt> for Poly {
    fn from(v: BigInt) -> Self {
        Poly::constant(v)
    }
}

fn render_monomial(m: &PMono) -> String {
    let mut parts = Vec::new();
    for p in Param::ALL {
        match m.exp(p) {
            0 => {}
            1 => parts.push(p.symbol().to_string()),
            e => parts.push(format!("{}^{}", p.symbol(), e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Poly {
    /// Canonical text form, e.g. `1 - t - q*t + q*t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = render_monomial(m);
            if mono.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", mag, mono)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

impl ring::Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn from_i64(v: i64) -> Self {
        Poly::int(v)
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Poly::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        Poly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Poly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        self.exact_div(other)
    }
    fn mul_int(&self, k: i64) -> Self {
        self.scale(&BigInt::from(k))
    }
    fn is_compound(&self) -> bool {
        self.terms.len() > 1 || self.terms.first().is_some_and(|(_, c)| c.is_negative())
    }
}
