//! Classical symmetric-function bases at finite `n` and conversions between
//! them.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::linalg;
use crate::arith::xpoly::elementary_in;
use crate::arith::{Poly, RatFn, Ring, XMono, XPoly, MAX_VARS};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Elementary,
    Schur,
    BigSchur,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Basis::Monomial => "monomial",
            Basis::Elementary => "elementary",
            Basis::Schur => "schur",
            Basis::BigSchur => "bigschur",
        };
        f.write_str(s)
    }
}

/// Symmetric polynomial in `nvars` variables as a partition-indexed
/// combination of basis elements.
#[derive(Clone, PartialEq)]
pub struct SymPoly<R: Ring> {
    nvars: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, R>,
}

impl<R: Ring> SymPoly<R> {
    pub fn zero(nvars: usize, basis: Basis) -> Self {
        SymPoly {
            nvars,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds from `(partition, coefficient)` pairs, summing repeats.
    pub fn from_terms(
        nvars: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, R)>,
    ) -> Result<Self> {
        let mut out = Self::zero(nvars, basis);
        for (p, c) in terms {
            out.add_term(p, &c)?;
        }
        Ok(out)
    }

    pub fn add_term(&mut self, p: Partition, c: &R) -> Result<()> {
        check_index(self.basis, &p, self.nvars)?;
        let slot = self.coeffs.entry(p).or_insert_with(R::zero);
        *slot = slot.add(c);
        if slot.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeff(&self, p: &Partition) -> R {
        self.coeffs.get(p).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms by decreasing weight, reverse lexicographic within a weight.
    pub fn terms(&self) -> Vec<(&Partition, &R)> {
        let mut v: Vec<_> = self.coeffs.iter().collect();
        v.sort_by(|a, b| b.0.weight().cmp(&a.0.weight()).then(b.0.cmp(a.0)));
        v
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> SymPoly<S> {
        SymPoly {
            nvars: self.nvars,
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, c)| (p.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn try_map_coeffs<S: Ring, E>(
        &self,
        f: impl Fn(&R) -> std::result::Result<S, E>,
    ) -> std::result::Result<SymPoly<S>, E> {
        let mut coeffs = BTreeMap::new();
        for (p, c) in &self.coeffs {
            let v = f(c)?;
            if !v.is_zero() {
                coeffs.insert(p.clone(), v);
            }
        }
        Ok(SymPoly {
            nvars: self.nvars,
            basis: self.basis,
            coeffs,
        })
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map_coeffs(|x| x.mul(c))
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &o.coeffs {
            out.add_term(p.clone(), c).expect("same basis and nvars");
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &o.coeffs {
            out.add_term(p.clone(), &c.neg()).expect("same basis and nvars");
        }
        out
    }
}

impl<R: Ring + From<Poly>> SymPoly<R> {
    /// Expands every basis element into `x`.
    pub fn to_xpoly(&self) -> Result<XPoly<R>> {
        let mut out = XPoly::zero(self.nvars);
        for (p, c) in &self.coeffs {
            let e = expand_basis(self.basis, p, self.nvars)?;
            out = out.add(&e.map_coeffs(|k| R::from(k.clone())).scale(c));
        }
        Ok(out)
    }
}

impl<R: Ring> fmt::Display for SymPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let sym = match self.basis {
            Basis::Monomial => "m",
            Basis::Elementary => "e",
            Basis::Schur => "s",
            Basis::BigSchur => "S",
        };
        let parts: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(p, c)| format!("({c})*{sym}[{p}]"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<R: Ring> fmt::Debug for SymPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPoly<{}, n={}>({})", self.basis, self.nvars, self)
    }
}

fn check_index(basis: Basis, p: &Partition, n: usize) -> Result<()> {
    let bad = match basis {
        Basis::Elementary => p.part(1) as usize > n,
        _ => p.len() > n,
    };
    if bad {
        return Err(Error::LengthExceedsVars {
            partition: p.to_string(),
            nvars: n,
        });
    }
    Ok(())
}

fn check_vars(n: usize) -> Result<()> {
    if n > MAX_VARS {
        return Err(Error::TooManyVariables(n));
    }
    Ok(())
}

/// `m_μ(x_1, ..., x_n)`.
pub fn expand_monomial<R: Ring>(mu: &Partition, n: usize) -> Result<XPoly<R>> {
    check_vars(n)?;
    check_index(Basis::Monomial, mu, n)?;
    let mut exps: Vec<u32> = mu.padded(n);
    exps.sort_unstable();
    let mut out = Vec::new();
    loop {
        let e: Vec<i64> = exps.iter().map(|&v| v as i64).collect();
        out.push((XMono::from_slice(&e), R::one()));
        if !next_permutation(&mut exps) {
            break;
        }
    }
    Ok(XPoly::from_terms(n, out))
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `e_k(x_1, ..., x_n)`; zero for `k > n`.
pub fn expand_elementary<R: Ring>(k: usize, n: usize) -> XPoly<R> {
    let vars: Vec<usize> = (0..n).collect();
    elementary_in(n, &vars, k)
}

/// `h_k(x_1, ..., x_n)`.
pub fn expand_complete<R: Ring>(k: usize, n: usize) -> XPoly<R> {
    let mut out = Vec::new();
    fn rec<R: Ring>(i: usize, n: usize, left: i16, cur: &mut [i16; MAX_VARS], out: &mut Vec<(XMono, R)>) {
        if i + 1 == n {
            cur[i] = left;
            out.push((XMono(*cur), R::one()));
            cur[i] = 0;
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, n, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        return if k == 0 { XPoly::one(0) } else { XPoly::zero(0) };
    }
    rec(0, n, k as i16, &mut [0; MAX_VARS], &mut out);
    XPoly::from_terms(n, out)
}

/// Sorts `v + δ` into a strictly decreasing sequence. Returns the sign of the
/// sorting permutation and the resulting partition after removing `δ` and a
/// common shift `c` (so the result is `(sign, λ, c)` with `λ_n = 0`), or
/// `None` when two entries coincide.
pub fn straighten(v: &[i64]) -> Option<(i64, Partition, i64)> {
    let n = v.len();
    let mut a: Vec<i64> = v.iter().enumerate().map(|(i, &x)| x + (n - 1 - i) as i64).collect();
    let mut sign = 1;
    for i in 0..n {
        for j in 0..n - 1 - i {
            if a[j] < a[j + 1] {
                a.swap(j, j + 1);
                sign = -sign;
            } else if a[j] == a[j + 1] {
                return None;
            }
        }
    }
    if a.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let shift = a.last().copied().unwrap_or(0);
    let parts: Vec<u32> = a
        .iter()
        .enumerate()
        .map(|(i, &x)| (x - shift - (n - 1 - i) as i64) as u32)
        .collect();
    Some((sign, Partition::new(parts).expect("sorted"), shift))
}

/// Bialternant `det(x_j^{v_i + n - i}) / Δ(x)` for any integer vector `v`
/// of length `n`; this is `0` or `± (x_1⋯x_n)^c s_λ(x)`.
pub fn schur_of_vector<R: Ring>(v: &[i64], n: usize) -> Result<XPoly<R>> {
    check_vars(n)?;
    if v.len() != n {
        return Err(Error::IndexOutOfRange(format!(
            "vector of length {} for {n} variables",
            v.len()
        )));
    }
    let Some((sign, lambda, shift)) = straighten(v) else {
        return Ok(XPoly::zero(n));
    };
    let s = bialternant::<R>(&lambda, n)?;
    let unit = XMono::from_slice(&vec![shift; n]);
    Ok(s.mul_mono(&unit).scale(&R::from_i64(sign)))
}

fn bialternant<R: Ring>(lambda: &Partition, n: usize) -> Result<XPoly<R>> {
    let exps: Vec<i64> = lambda
        .padded(n)
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (n - 1 - i) as i64)
        .collect();
    let mut terms = Vec::new();
    for (perm, sign) in crate::arith::xpoly::permutations(n) {
        let mut e = vec![0i64; n];
        for (i, &j) in perm.iter().enumerate() {
            e[j] = exps[i];
        }
        terms.push((XMono::from_slice(&e), R::from_i64(sign)));
    }
    XPoly::from_terms(n, terms).div_vandermonde(n)
}

/// `s_λ(x_1, ..., x_n)` by the bialternant formula.
pub fn expand_schur<R: Ring>(lambda: &Partition, n: usize) -> Result<XPoly<R>> {
    check_vars(n)?;
    check_index(Basis::Schur, lambda, n)?;
    bialternant(lambda, n)
}

/// One-row function `q_r(x; t)`, the `y^r` coefficient of
/// `∏_i (1 - t x_i y) / (1 - x_i y)`.
pub fn one_row(r: i64, n: usize) -> XPoly<Poly> {
    if r < 0 {
        return XPoly::zero(n);
    }
    let r = r as usize;
    let mut out = XPoly::zero(n);
    for k in 0..=r.min(n) {
        let e: XPoly<Poly> = expand_elementary(k, n);
        let h: XPoly<Poly> = expand_complete(r - k, n);
        let c = Poly::t().neg().pow(k as u32);
        out = out.add(&e.mul(&h).scale(&c));
    }
    out
}

/// Big Schur function `S_λ(x; t) = det(q_{λ_i - i + j})`.
pub fn expand_big_schur(lambda: &Partition, n: usize) -> Result<XPoly<Poly>> {
    check_vars(n)?;
    check_index(Basis::BigSchur, lambda, n)?;
    let l = lambda.len();
    if l == 0 {
        return Ok(XPoly::one(n));
    }
    let max_r = lambda.part(1) as i64 + l as i64;
    let rows: Vec<XPoly<Poly>> = (0..=max_r).map(|r| one_row(r, n)).collect();
    let entry = |i: usize, j: usize| -> XPoly<Poly> {
        let r = lambda.part(i + 1) as i64 - i as i64 + j as i64;
        if r < 0 {
            XPoly::zero(n)
        } else {
            rows[r as usize].clone()
        }
    };
    Ok(laplace_det(l, n, &entry))
}

/// Determinant by expansion along rows with minors memoized on the set of
/// remaining columns.
fn laplace_det<R: Ring>(l: usize, n: usize, entry: &dyn Fn(usize, usize) -> XPoly<R>) -> XPoly<R> {
    let full = (1usize << l) - 1;
    let mut memo: Vec<Option<XPoly<R>>> = vec![None; 1 << l];
    memo[0] = Some(XPoly::one(n));
    // minors over column sets of increasing size, bottom rows first
    for mask in 1..=full {
        let size = mask.count_ones() as usize;
        let row = l - size;
        let mut acc = XPoly::zero(n);
        let mut pos = 0;
        for j in 0..l {
            if mask & (1 << j) == 0 {
                continue;
            }
            let e = entry(row, j);
            if !e.is_zero() {
                let minor = memo[mask & !(1 << j)].as_ref().expect("computed");
                if !minor.is_zero() {
                    let term = e.mul(minor);
                    acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
            }
            pos += 1;
        }
        memo[mask] = Some(acc);
    }
    memo[full].take().expect("computed")
}

/// Expansion of a single basis element.
pub fn expand_basis(basis: Basis, p: &Partition, n: usize) -> Result<XPoly<Poly>> {
    match basis {
        Basis::Monomial => expand_monomial(p, n),
        Basis::Schur => expand_schur(p, n),
        Basis::BigSchur => expand_big_schur(p, n),
        Basis::Elementary => {
            check_index(Basis::Elementary, p, n)?;
            Ok(p
                .parts()
                .iter()
                .fold(XPoly::one(n), |acc, &k| acc.mul(&expand_elementary(k as usize, n))))
        }
    }
}

/// Reads off monomial-basis coefficients, checking that every orbit carries
/// a constant coefficient.
pub fn to_monomial_basis<R: Ring>(f: &XPoly<R>, n: usize) -> Result<SymPoly<R>> {
    if f.nvars() != n {
        return Err(Error::IndexOutOfRange(format!(
            "polynomial in {} variables read with n = {n}",
            f.nvars()
        )));
    }
    let mut coeffs: BTreeMap<Partition, R> = BTreeMap::new();
    for (m, c) in f.terms() {
        if !m.is_nonneg() {
            return Err(Error::NotSymmetric(format!("negative exponent in {:?}", m)));
        }
        let mut e: Vec<u32> = m.exps(n).iter().map(|&x| x as u32).collect();
        e.sort_unstable_by(|a, b| b.cmp(a));
        let p = Partition::new(e).expect("sorted");
        match coeffs.get(&p) {
            Some(prev) if prev != c => {
                return Err(Error::NotSymmetric(format!(
                    "coefficient {c} at {:?} differs from {prev} on the orbit of {p}",
                    m
                )))
            }
            Some(_) => {}
            None => {
                coeffs.insert(p, c.clone());
            }
        }
    }
    let expected: usize = coeffs.keys().map(|p| orbit_size(p, n)).sum();
    if expected != f.num_terms() {
        return Err(Error::NotSymmetric(format!(
            "{} terms but the orbits need {expected}",
            f.num_terms()
        )));
    }
    Ok(SymPoly {
        nvars: n,
        basis: Basis::Monomial,
        coeffs,
    })
}

/// Number of distinct permutations of `μ` padded to length `n`.
pub fn orbit_size(mu: &Partition, n: usize) -> usize {
    let padded = mu.padded(n);
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for p in padded {
        *counts.entry(p).or_default() += 1;
    }
    let fact = |k: usize| -> u128 { (1..=k as u128).product() };
    let denom: u128 = counts.values().map(|&c| fact(c)).product();
    (fact(n) / denom) as usize
}

/// Monomial-basis expansion of every basis element of weight `d`, as the
/// columns of a matrix whose rows are the monomial partitions (both in
/// reverse lexicographic order).
pub fn basis_matrix(basis: Basis, d: u32, n: usize) -> Result<(Vec<Partition>, Vec<Partition>, Vec<Vec<RatFn>>)> {
    let rows: Vec<Partition> = partitions_of(d).into_iter().filter(|p| p.len() <= n).collect();
    let cols: Vec<Partition> = partitions_of(d)
        .into_iter()
        .filter(|p| check_index(basis, p, n).is_ok())
        .collect();
    let mut mat = vec![vec![RatFn::zero(); cols.len()]; rows.len()];
    for (j, p) in cols.iter().enumerate() {
        let m = to_monomial_basis(&expand_basis(basis, p, n)?, n)?;
        for (i, r) in rows.iter().enumerate() {
            mat[i][j] = RatFn::from_poly(m.coeff(r));
        }
    }
    Ok((rows, cols, mat))
}

/// Exact linear change of basis, one homogeneous component at a time.
pub fn change_basis(f: &SymPoly<RatFn>, target: Basis) -> Result<SymPoly<RatFn>> {
    let n = f.nvars;
    let mono = to_monomial(f)?;
    if target == Basis::Monomial {
        return Ok(mono);
    }
    let mut weights: Vec<u32> = mono.coeffs.keys().map(|p| p.weight()).collect();
    weights.dedup();
    let mut out = SymPoly::zero(n, target);
    for d in weights {
        let (rows, cols, mat) = basis_matrix(target, d, n)?;
        if rows.len() != cols.len() {
            return Err(Error::SingularTransition(format!(
                "{} monomials against {} {target} elements in degree {d}",
                rows.len(),
                cols.len()
            )));
        }
        let rhs: Vec<Vec<RatFn>> = rows.iter().map(|r| vec![mono.coeff(r)]).collect();
        let sol = linalg::solve(&mat, &rhs).map_err(|e| match e {
            Error::SingularSystem(s) => Error::SingularTransition(s),
            other => other,
        })?;
        for (p, c) in cols.into_iter().zip(sol) {
            out.add_term(p, &c[0])?;
        }
    }
    Ok(out)
}

/// Rewrites any basis into monomials.
pub fn to_monomial(f: &SymPoly<RatFn>) -> Result<SymPoly<RatFn>> {
    if f.basis == Basis::Monomial {
        return Ok(f.clone());
    }
    let n = f.nvars;
    let mut out = SymPoly::zero(n, Basis::Monomial);
    for (p, c) in &f.coeffs {
        let m = to_monomial_basis(&expand_basis(f.basis, p, n)?, n)?;
        for (q, k) in &m.coeffs {
            out.add_term(q.clone(), &RatFn::from_poly(k.clone()).mul(c))?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use crate::arith::parse_poly;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    type Z = XPoly<BigInt>;

    fn x(n: usize, i: usize) -> Z {
        Z::var(n, i)
    }

    #[test]
    fn monomials() {
        assert_eq!(expand_monomial::<BigInt>(&pt("1"), 2).unwrap(), x(2, 0).add(&x(2, 1)));
        assert_eq!(expand_monomial::<BigInt>(&pt("1,1"), 2).unwrap(), x(2, 0).mul(&x(2, 1)));
        let m21 = x(2, 0).pow(2).mul(&x(2, 1)).add(&x(2, 0).mul(&x(2, 1).pow(2)));
        assert_eq!(expand_monomial::<BigInt>(&pt("2,1"), 2).unwrap(), m21);
        assert!(matches!(
            expand_monomial::<BigInt>(&pt("1,1,1"), 2),
            Err(Error::LengthExceedsVars { .. })
        ));
        assert_eq!(orbit_size(&pt("2,1"), 3), 6);
        assert_eq!(orbit_size(&pt("1,1"), 3), 3);
    }

    #[test]
    fn schur_polynomials() {
        assert_eq!(expand_schur::<BigInt>(&pt("1,1"), 2).unwrap(), x(2, 0).mul(&x(2, 1)));
        let s2 = x(2, 0).pow(2).add(&x(2, 0).mul(&x(2, 1))).add(&x(2, 1).pow(2));
        assert_eq!(expand_schur::<BigInt>(&pt("2"), 2).unwrap(), s2);
        assert!(schur_of_vector::<BigInt>(&[1, 2], 2).unwrap().is_zero());
        // (0, 2) + δ = (1, 2) -> sorted (2, 1) with a sign flip: -s_(1,1)
        assert_eq!(
            schur_of_vector::<BigInt>(&[0, 2], 2).unwrap(),
            x(2, 0).mul(&x(2, 1)).neg()
        );
        // (0, -1) + δ = (1, -1): shift -1 gives s_(1) / (x1 x2)
        let v = schur_of_vector::<BigInt>(&[0, -1], 2).unwrap();
        let expect = x(2, 0).add(&x(2, 1)).mul_mono(&XMono::from_slice(&[-1, -1]));
        assert_eq!(v, expect);
    }

    #[test]
    fn schur_against_jacobi_trudi() {
        // s_λ = det(h_{λ_i - i + j}) as an independent route
        for d in 1..=5u32 {
            for lambda in partitions_of(d) {
                let n = d as usize;
                let l = lambda.len();
                let entry = |i: usize, j: usize| -> XPoly<BigInt> {
                    let r = lambda.part(i + 1) as i64 - i as i64 + j as i64;
                    if r < 0 {
                        XPoly::zero(n)
                    } else {
                        expand_complete(r as usize, n)
                    }
                };
                let jt = laplace_det(l, n, &entry);
                assert_eq!(expand_schur::<BigInt>(&lambda, n).unwrap(), jt, "{lambda}");
            }
        }
    }

    #[test]
    fn big_schur_low_degree() {
        let m = |s: &str, n| expand_monomial::<Poly>(&pt(s), n).unwrap();
        let s1 = expand_big_schur(&pt("1"), 2).unwrap();
        assert_eq!(s1, m("1", 2).scale(&p("1 - t")));
        let s2 = expand_big_schur(&pt("2"), 2).unwrap();
        let expect = m("2", 2).add(&m("1,1", 2).scale(&p("1 - t"))).scale(&p("1 - t"));
        assert_eq!(s2, expect);
        // S_(1,1) = q_1^2 - q_2 derived from the generating product
        let s11 = expand_big_schur(&pt("1,1"), 2).unwrap();
        let expect = m("2", 2)
            .scale(&p("-t"))
            .add(&m("1,1", 2).scale(&p("1 - t")))
            .scale(&p("1 - t"));
        assert_eq!(s11, expect);
    }

    #[test]
    fn big_schur_at_t_zero_is_schur() {
        for d in 1..=5u32 {
            for lambda in partitions_of(d) {
                let n = d as usize;
                let s = expand_big_schur(&lambda, n).unwrap();
                let at0 = s.map_coeffs(|c| c.eval_int(crate::arith::Param::T, 0).unwrap());
                let schur = expand_schur::<Poly>(&lambda, n).unwrap();
                assert_eq!(at0, schur, "{lambda}");
            }
        }
    }

    #[test]
    fn monomial_readoff() {
        let f = x(2, 0).add(&x(2, 1));
        let s = to_monomial_basis(&f, 2).unwrap();
        assert_eq!(s.coeff(&pt("1")), BigInt::from(1));
        let g = x(2, 0).pow(2).add(&x(2, 1).pow(2)).sub(&f.pow(2));
        let s = to_monomial_basis(&g, 2).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.coeff(&pt("1,1")), BigInt::from(-2));
        assert!(matches!(
            to_monomial_basis(&x(2, 0), 2),
            Err(Error::NotSymmetric(_))
        ));
    }

    #[test]
    fn basis_changes() {
        let one = RatFn::one();
        let f = SymPoly::from_terms(1, Basis::Monomial, [(pt("1"), one.clone())]).unwrap();
        let s = change_basis(&f, Basis::Schur).unwrap();
        assert_eq!(s.coeff(&pt("1")), one);
        // (1 - t)(1 - t^2) m_(1,1) = S_(1,1) + t S_(2)
        let j11 = SymPoly::from_terms(
            2,
            Basis::Monomial,
            [(pt("1,1"), RatFn::from_poly(p("(1 - t)*(1 - t^2)")))],
        )
        .unwrap();
        let k = change_basis(&j11, Basis::BigSchur).unwrap();
        assert_eq!(k.coeff(&pt("1,1")), one);
        assert_eq!(k.coeff(&pt("2")), RatFn::from_poly(p("t")));
        assert_eq!(to_monomial(&k).unwrap(), j11);
    }

    #[test]
    fn round_trips() {
        for d in 1..=5u32 {
            let n = d as usize;
            for lambda in partitions_of(d) {
                let f = SymPoly::from_terms(n, Basis::Monomial, [(lambda.clone(), RatFn::one())])
                    .unwrap();
                for b in [Basis::Schur, Basis::Elementary, Basis::BigSchur] {
                    let g = change_basis(&f, b).unwrap();
                    assert_eq!(to_monomial(&g).unwrap(), f, "{lambda} via {b}");
                }
            }
        }
    }

    #[test]
    fn transition_denominators_are_regular_at_zero() {
        for d in 1..=5u32 {
            let n = d as usize;
            let (_, _, mat) = basis_matrix(Basis::BigSchur, d, n).unwrap();
            let inv = linalg::invert(&mat).unwrap();
            for row in &inv {
                for c in row {
                    let d0 = c.den().eval_int(crate::arith::Param::T, 0).unwrap();
                    assert!(d0 == Poly::one() || d0 == Poly::int(-1), "{c}");
                }
            }
        }
    }
}
