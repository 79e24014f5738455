//! q-difference operators: construction, exact application, duality.
//!
//! Every operator is stored as `Δ(x)^{-1} Σ_s N_s(x) T_q^s`, with Laurent
//! polynomial numerators `N_s` and signed shift vectors `s`.

mod antisym;
mod build;
mod determinantal;
mod printed;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rustc_hash::FxHashMap;

use crate::arith::{Param, Poly, XMono, XPoly, MAX_VARS};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symmetric::{expand_schur, to_monomial_basis, Basis, SymPoly};

pub use antisym::apply_antisymmetrized;
pub use build::{build, OpKind, OperatorSpec};
pub use determinantal::{apply_determinantal, apply_factorized_qt};
pub use printed::build_printed;

/// Exponent vector of a product of q-shifts `∏ T_{q,x_i}^{s_i}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Shift(pub [i8; MAX_VARS]);

impl Shift {
    pub fn zero() -> Self {
        Shift([0; MAX_VARS])
    }

    /// `T^I` for the index set `I` given as a bit mask.
    pub fn from_mask(mask: u32, n: usize) -> Self {
        let mut s = [0; MAX_VARS];
        for (i, slot) in s.iter_mut().enumerate().take(n) {
            *slot = ((mask >> i) & 1) as i8;
        }
        Shift(s)
    }

    pub fn all(n: usize) -> Self {
        Self::from_mask((1u32 << n) - 1, n)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut s = self.0;
        for (a, b) in s.iter_mut().zip(o.0) {
            *a += b;
        }
        Shift(s)
    }

    pub fn neg(&self) -> Self {
        Shift(self.0.map(|a| -a))
    }

    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut s = [0; MAX_VARS];
        for (i, &p) in perm.iter().enumerate() {
            s[p] = self.0[i];
        }
        Shift(s)
    }
}

impl fmt::Debug for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("T{}", i + 1)
                } else {
                    format!("T{}^{}", i + 1, e)
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// `f(x_1, ..., p^{s_i} x_i, ...)` for the scalar parameter `p` (q or t).
pub fn shift_poly(f: &XPoly<Poly>, s: &Shift, p: Param) -> XPoly<Poly> {
    let n = f.nvars();
    if s.0[..n].iter().all(|&e| e == 0) {
        return f.clone();
    }
    f.map_terms(|m, c| {
        let e: i64 = (0..n).map(|i| m.0[i] as i64 * s.0[i] as i64).sum();
        Some((*m, c.mul_mono(&crate::arith::PMono::var(p, e as i16))))
    })
}

/// Formal operator `Δ(x)^{-1} Σ_s N_s(x) T_q^s` in `n` variables.
#[derive(Clone, PartialEq)]
pub struct QDiffOp {
    nvars: usize,
    terms: BTreeMap<Shift, XPoly<Poly>>,
}

impl QDiffOp {
    pub fn zero(nvars: usize) -> Self {
        QDiffOp {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(nvars: usize) -> Self {
        let mut op = Self::zero(nvars);
        op.add_term(Shift::zero(), crate::arith::vandermonde(nvars));
        op
    }

    /// Adds `Δ^{-1} num T^s`.
    pub fn add_term(&mut self, s: Shift, num: XPoly<Poly>) {
        if num.is_zero() {
            return;
        }
        match self.terms.get_mut(&s) {
            Some(e) => {
                *e = e.add(&num);
                if e.is_zero() {
                    self.terms.remove(&s);
                }
            }
            None => {
                self.terms.insert(s, num);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `(shift, numerator over Δ)` pairs in shift order.
    pub fn terms(&self) -> impl Iterator<Item = (&Shift, &XPoly<Poly>)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (s, n) in &o.terms {
            out.add_term(*s, n.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&Poly::int(-1)))
    }

    pub fn scale(&self, c: &Poly) -> Self {
        let mut out = Self::zero(self.nvars);
        for (s, n) in &self.terms {
            out.add_term(*s, n.scale(c));
        }
        out
    }

    /// Right multiplication by a pure shift: `O · T^a`.
    pub fn then_shift(&self, a: &Shift) -> Self {
        let mut out = Self::zero(self.nvars);
        for (s, n) in &self.terms {
            out.add_term(s.add(a), n.clone());
        }
        out
    }

    /// Coefficient-wise scalar map, e.g. a parameter specialization.
    pub fn map_scalars(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        let mut out = Self::zero(self.nvars);
        for (s, n) in &self.terms {
            out.add_term(*s, n.map_coeffs(&f));
        }
        out
    }

    /// Substitutes a scalar parameter (`u` or `v`) by a value.
    pub fn subst(&self, p: Param, value: &Poly) -> Result<Self> {
        let mut out = Self::zero(self.nvars);
        for (s, n) in &self.terms {
            let m = n.try_map_coeffs(|c| {
                c.subst(p, value).ok_or_else(|| {
                    Error::OutOfRange(format!("cannot substitute {} := {value} in {c}", p.symbol()))
                })
            })?;
            out.add_term(*s, m);
        }
        Ok(out)
    }

    /// Coefficient of `v^k` in an operator polynomial in `v`.
    pub fn coefficient_in(&self, p: Param, k: i16) -> Self {
        self.map_scalars(|c| c.coefficient_of(p, k))
    }

    /// The involution induced by `q -> q^{-1}`, `t -> t^{-1}`; shifts are
    /// inverted along with `q`.
    pub fn dualize(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (s, n) in &self.terms {
            out.add_term(s.neg(), n.map_coeffs(|c| c.invert_qt()));
        }
        out
    }

    /// `σ O σ^{-1}` for the variable permutation `x_i -> x_{perm[i]}`.
    pub fn conjugate_by(&self, perm: &[usize], sign: i64) -> Self {
        let mut out = Self::zero(self.nvars);
        for (s, n) in &self.terms {
            out.add_term(s.permute(perm), n.permute(perm).scale(&Poly::int(sign)));
        }
        out
    }

    /// `Σ_s N_s · T^s f`, the numerator of `O f` over `Δ(x)`.
    pub fn apply_numerator(&self, f: &XPoly<Poly>) -> XPoly<Poly> {
        let terms: Vec<(&Shift, &XPoly<Poly>)> = self.terms.iter().collect();
        let parts = crate::par::map(&terms, |(s, num)| num.mul(&shift_poly(f, s, Param::Q)));
        parts
            .into_iter()
            .fold(XPoly::zero(self.nvars), |acc, p| acc.add(&p))
    }

    /// Exact application `O f`; the result must be a Laurent polynomial.
    pub fn apply(&self, f: &XPoly<Poly>) -> Result<XPoly<Poly>> {
        self.apply_numerator(f).div_vandermonde(self.nvars)
    }

    /// Application to a symmetric polynomial, returning its monomial
    /// expansion. Only the coefficients of the antisymmetric numerator at
    /// strictly decreasing exponents are formed; they are the Schur
    /// coefficients of the result.
    pub fn apply_symmetric(&self, f: &SymPoly<Poly>) -> Result<SymPoly<Poly>> {
        let n = self.nvars;
        if f.nvars() != n {
            return Err(Error::IndexOutOfRange(format!(
                "operator in {n} variables applied to a function of {}",
                f.nvars()
            )));
        }
        let fx = f.to_xpoly()?;
        let terms: Vec<(&Shift, &XPoly<Poly>)> = self.terms.iter().collect();
        let parts = crate::par::map(&terms, |(s, num)| {
            let g = shift_poly(&fx, s, Param::Q);
            dominant_products(num, &g, n)
        });
        let mut acc: FxHashMap<XMono, Poly> = FxHashMap::default();
        for part in parts {
            for (m, c) in part {
                let e = acc.entry(m).or_insert_with(Poly::zero);
                *e = e.add(&c);
            }
        }
        let mut out = SymPoly::zero(n, Basis::Monomial);
        let mut keys: Vec<&XMono> = acc.keys().collect();
        keys.sort();
        for m in keys {
            let c = &acc[m];
            if c.is_zero() {
                continue;
            }
            let parts: Vec<i64> = (0..n).map(|i| m.0[i] as i64 - (n - 1 - i) as i64).collect();
            if parts.last().is_some_and(|&p| p < 0) {
                return Err(Error::NonExactDivision(format!(
                    "result has a negative exponent (Schur index {parts:?})"
                )));
            }
            let lambda = Partition::new(parts.iter().map(|&p| p as u32).collect())?;
            for (mu, k) in schur_in_monomials(&lambda, n)?.terms() {
                out.add_term(mu.clone(), &c.mul(k))?;
            }
        }
        Ok(out)
    }
}

fn strictly_decreasing(m: &XMono, n: usize) -> bool {
    (1..n).all(|i| m.0[i - 1] > m.0[i])
}

/// Terms of `a · b` whose exponent is strictly decreasing.
fn dominant_products(a: &XPoly<Poly>, b: &XPoly<Poly>, n: usize) -> Vec<(XMono, Poly)> {
    let mut acc: FxHashMap<XMono, Poly> = FxHashMap::default();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let m = ma.mul(mb);
            if strictly_decreasing(&m, n) {
                let e = acc.entry(m).or_insert_with(Poly::zero);
                *e = e.add(&ca.mul(cb));
            }
        }
    }
    acc.into_iter().collect()
}

type OpCache = Mutex<FxHashMap<(OperatorSpec, usize), Arc<QDiffOp>>>;

/// [`build`] with the result memoized for the life of the process.
pub fn build_cached(spec: &OperatorSpec, n: usize) -> Result<Arc<QDiffOp>> {
    static CACHE: OnceLock<OpCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(FxHashMap::default()));
    let key = (spec.clone(), n);
    if let Some(op) = cache.lock().expect("cache lock").get(&key) {
        return Ok(op.clone());
    }
    let op = Arc::new(build(spec, n)?);
    cache.lock().expect("cache lock").insert(key, op.clone());
    Ok(op)
}

type SchurCache = Mutex<FxHashMap<(Partition, usize), Arc<SymPoly<Poly>>>>;

/// `s_λ` in the monomial basis (Kostka numbers), cached per `(λ, n)`.
pub fn schur_in_monomials(lambda: &Partition, n: usize) -> Result<Arc<SymPoly<Poly>>> {
    static CACHE: OnceLock<SchurCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(FxHashMap::default()));
    let key = (lambda.clone(), n);
    if let Some(v) = cache.lock().expect("cache lock").get(&key) {
        return Ok(v.clone());
    }
    let s = Arc::new(to_monomial_basis(&expand_schur::<Poly>(lambda, n)?, n)?);
    cache.lock().expect("cache lock").insert(key, s.clone());
    Ok(s)
}

impl fmt::Debug for QDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QDiffOp(n={}) = Δ^-1 * [", self.nvars)?;
        for (s, num) in &self.terms {
            writeln!(f, "  ({num}) {s:?}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests;
