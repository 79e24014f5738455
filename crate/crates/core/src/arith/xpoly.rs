//! Sparse multivariate (Laurent) polynomials in `x_1..x_n` over a pluggable
//! coefficient ring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use rustc_hash::FxHashMap;

use super::ring::Ring;
use crate::error::{Error, Result};

/// Largest supported number of `x` variables.
pub const MAX_VARS: usize = 12;

/// Exponent vector of an `x`-monomial (unused slots stay zero).
///
/// Same graded order as the scalar monomials: total degree, then larger
/// exponent of `x_1` first, and so on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct XMono(pub [i16; MAX_VARS]);

impl XMono {
    pub fn one() -> Self {
        XMono([0; MAX_VARS])
    }

    pub fn from_slice(e: &[i64]) -> Self {
        let mut m = [0i16; MAX_VARS];
        for (slot, &v) in m.iter_mut().zip(e) {
            *slot = v as i16;
        }
        XMono(m)
    }

    pub fn var(i: usize, e: i16) -> Self {
        let mut m = [0; MAX_VARS];
        m[i] = e;
        XMono(m)
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().map(|&e| e as i32).sum()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a += *b;
        }
        XMono(m)
    }

    pub fn div(&self, o: &Self) -> Self {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a -= *b;
        }
        XMono(m)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn meet(&self, o: &Self) -> Self {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a = (*a).min(*b);
        }
        XMono(m)
    }

    pub fn exps(&self, n: usize) -> &[i16] {
        &self.0[..n]
    }

    /// Sends the exponent of variable `i` to slot `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut m = [0; MAX_VARS];
        for (i, &p) in perm.iter().enumerate() {
            m[p] = self.0[i];
        }
        XMono(m)
    }
}

impl Ord for XMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for XMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for XMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.0)
    }
}

/// Polynomial in `nvars` variables with coefficients in `R`; terms sorted
/// ascending, no zero coefficients. Negative exponents are permitted
/// (Laurent polynomials) for the lowering-operator generators.
#[derive(Clone, PartialEq)]
pub struct XPoly<R: Ring> {
    nvars: usize,
    terms: Vec<(XMono, R)>,
}

impl<R: Ring> XPoly<R> {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        XPoly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: R) -> Self {
        Self::monomial(nvars, XMono::one(), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, R::one())
    }

    pub fn monomial(nvars: usize, m: XMono, c: R) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, XMono::var(i, 1), R::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (XMono, R)>>(nvars: usize, it: I) -> Self {
        let mut acc: FxHashMap<XMono, R> = FxHashMap::default();
        for (m, c) in it {
            match acc.get_mut(&m) {
                Some(e) => e.add_assign(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(nvars, acc)
    }

    fn from_map(nvars: usize, acc: FxHashMap<XMono, R>) -> Self {
        let mut terms: Vec<(XMono, R)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        XPoly { nvars, terms }
    }

    fn from_sorted(nvars: usize, terms: Vec<(XMono, R)>) -> Self {
        XPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(XMono, R)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(XMono, R)> {
        self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &XMono) -> R {
        match self.terms.binary_search_by(|(k, _)| k.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => R::zero(),
        }
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_nonneg())
    }

    pub fn add(&self, o: &Self) -> Self {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.merge(o, true)
    }

    fn merge(&self, o: &Self, negate: bool) -> Self {
        debug_assert_eq!(self.nvars, o.nvars);
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (a, b) = (&self.terms, &o.terms);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        a[i].1.sub(&b[j].1)
                    } else {
                        a[i].1.add(&b[j].1)
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
            out.push((*m, if negate { c.neg() } else { c.clone() }));
        }
        Self::from_sorted(self.nvars, out)
    }

    pub fn neg(&self) -> Self {
        Self::from_sorted(
            self.nvars,
            self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.nvars, o.nvars);
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.nvars);
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0].0, &o.terms[0].1);
        }
        if self.terms.len() == 1 {
            return o.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: FxHashMap<XMono, R> =
            FxHashMap::with_capacity_and_hasher(self.terms.len() * 2, Default::default());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let prod = ca.mul(cb);
                match acc.get_mut(&ma.mul(mb)) {
                    Some(e) => e.add_assign(&prod),
                    None => {
                        acc.insert(ma.mul(mb), prod);
                    }
                }
            }
        }
        Self::from_map(self.nvars, acc)
    }

    pub fn mul_term(&self, m: &XMono, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let one = c.is_one();
        Self::from_sorted(
            self.nvars,
            self.terms
                .iter()
                .filter_map(|(a, b)| {
                    let v = if one { b.clone() } else { b.mul(c) };
                    (!v.is_zero()).then(|| (a.mul(m), v))
                })
                .collect(),
        )
    }

    pub fn mul_mono(&self, m: &XMono) -> Self {
        self.mul_term(m, &R::one())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.mul_term(&XMono::one(), c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Coefficient-wise ring map; zero images are dropped.
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> XPoly<S> {
        XPoly::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Fallible coefficient-wise map.
    pub fn try_map_coeffs<S: Ring, E>(
        &self,
        f: impl Fn(&R) -> std::result::Result<S, E>,
    ) -> std::result::Result<XPoly<S>, E> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            out.push((*m, f(c)?));
        }
        Ok(XPoly::from_terms(self.nvars, out))
    }

    /// Term-wise map that may rescale coefficients by the exponent, e.g. a
    /// q-shift or a derivative.
    pub fn map_terms(&self, f: impl Fn(&XMono, &R) -> Option<(XMono, R)>) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().filter_map(|(m, c)| f(m, c)))
    }

    /// Variable permutation: `x_i -> x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.nvars);
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, c)| (m.permute(perm), c.clone())),
        )
    }

    /// Re-embeds into `nvars` variables with variable `i` sent to slot `map[i]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Self {
        XPoly::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| {
                let mut e = [0; MAX_VARS];
                for (i, &j) in map.iter().enumerate() {
                    e[j] = m.0[i];
                }
                (XMono(e), c.clone())
            }),
        )
    }

    /// Partial derivative with respect to `x_{i+1}`.
    pub fn derivative(&self, i: usize) -> Self {
        self.map_terms(|m, c| {
            let e = m.0[i];
            if e == 0 {
                return None;
            }
            let mut nm = *m;
            nm.0[i] -= 1;
            Some((nm, c.mul_int(e as i64)))
        })
    }

    pub fn min_exponents(&self) -> XMono {
        let mut it = self.terms.iter().map(|(m, _)| *m);
        match it.next() {
            None => XMono::one(),
            Some(first) => it.fold(first, |acc, m| acc.meet(&m)),
        }
    }

    pub fn total_degree(&self) -> Option<i32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    /// Exact quotient `self / g` in the Laurent ring `R[x^±]`.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::NonExactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let fm = self.min_exponents();
        let gm = g.min_exponents();
        let f0 = self.mul_mono(&XMono::one().div(&fm));
        let g0 = g.mul_mono(&XMono::one().div(&gm));
        let q = div_polynomial(&f0, &g0).ok_or_else(|| {
            Error::NonExactDivision(format!("({}) / ({})", truncate(self), truncate(g)))
        })?;
        Ok(q.mul_mono(&fm.div(&gm)))
    }

    /// Divides by the difference product `∏_{i<j} (x_i - x_j)` over the first
    /// `k` variables, one linear factor at a time.
    pub fn div_vandermonde(&self, k: usize) -> Result<Self> {
        let mut cur = self.clone();
        for i in 0..k {
            for j in (i + 1)..k {
                let d = Self::var(self.nvars, i).sub(&Self::var(self.nvars, j));
                cur = cur.exact_div(&d)?;
            }
        }
        Ok(cur)
    }

    /// Checks invariance under every transposition of adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            let mut perm: Vec<usize> = (0..self.nvars).collect();
            perm.swap(i, i + 1);
            self.permute(&perm) == *self
        })
    }

    pub fn leading_term(&self) -> Option<&(XMono, R)> {
        self.terms.last()
    }
}

fn truncate<R: Ring>(p: &XPoly<R>) -> String {
    let s = p.to_string();
    if s.len() > 200 {
        format!("{}...", &s[..200])
    } else {
        s
    }
}

fn div_polynomial<R: Ring>(f: &XPoly<R>, g: &XPoly<R>) -> Option<XPoly<R>> {
    let (glm, glc) = g.terms.last()?.clone();
    let gdeg = glm.degree();
    let unit = glc.is_one();
    let neg_unit = !unit && glc.neg().is_one();
    let mut rem: BTreeMap<XMono, R> = f.terms.iter().cloned().collect();
    let mut quot = Vec::new();
    let rest = &g.terms[..g.terms.len() - 1];
    while let Some((lm, lc)) = rem.pop_last() {
        if lm.degree() < gdeg {
            return None;
        }
        let qm = lm.div(&glm);
        if !qm.is_nonneg() {
            return None;
        }
        let qc = if unit {
            lc
        } else if neg_unit {
            lc.neg()
        } else {
            lc.try_div(&glc)?
        };
        for (m, c) in rest {
            let key = m.mul(&qm);
            let delta = c.mul(&qc);
            match rem.get_mut(&key) {
                Some(e) => {
                    *e = e.sub(&delta);
                    if e.is_zero() {
                        rem.remove(&key);
                    }
                }
                None => {
                    rem.insert(key, delta.neg());
                }
            }
        }
        quot.push((qm, qc));
    }
    Some(XPoly::from_terms(f.nvars, quot))
}

impl<R: Ring> fmt::Display for XPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (v, &e) in m.0[..self.nvars].iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", v + 1)),
                    _ => factors.push(format!("x{}^{}", v + 1, e)),
                }
            }
            let coeff = if c.is_compound() {
                format!("({})", c)
            } else {
                c.to_string()
            };
            if factors.is_empty() {
                write!(f, "{}", coeff)?;
            } else if c.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", coeff, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for XPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly[{}]({})", self.nvars, self)
    }
}

/// Exact division `f / g` in `R[x]`.
pub fn poly_exact_div<R: Ring>(f: &XPoly<R>, g: &XPoly<R>) -> Result<XPoly<R>> {
    f.exact_div(g)
}

/// The difference product `Δ(x) = ∏_{i<j} (x_i - x_j)` in `n` variables.
pub fn vandermonde<R: Ring>(n: usize) -> XPoly<R> {
    let mut d = XPoly::one(n);
    for i in 0..n {
        for j in (i + 1)..n {
            d = d.mul(&XPoly::var(n, i).sub(&XPoly::var(n, j)));
        }
    }
    d
}

/// Elementary symmetric polynomial `e_k` of the variables listed in `vars`.
pub fn elementary_in<R: Ring>(nvars: usize, vars: &[usize], k: usize) -> XPoly<R> {
    if k > vars.len() {
        return XPoly::zero(nvars);
    }
    let mut out = Vec::new();
    for_each_subset(vars.len(), k, |s| {
        let mut e = [0i16; MAX_VARS];
        for &i in s {
            e[vars[i]] = 1;
        }
        out.push((XMono(e), R::one()));
    });
    XPoly::from_terms(nvars, out)
}

/// Calls `f` with every `k`-subset of `0..n`, in lexicographic order.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    let mut cur = Vec::with_capacity(k);
    rec(0, n, k, &mut cur, &mut f);
}

/// Every permutation of `0..n` with its sign, in lexicographic order.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
        if cur.len() == n {
            let mut inv = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    if cur[i] > cur[j] {
                        inv += 1;
                    }
                }
            }
            out.push((cur.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}
