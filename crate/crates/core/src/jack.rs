//! Differential raising and lowering operators for Jack polynomials in the
//! normalization with leading coefficient `c_λ(α)`, and the integer-`α`
//! limit of `J_λ(x; t^α, t) / (1 - t)^{|λ|}` used to check them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::special::{limit_at_t_one, q_to_t_pow};
use crate::arith::xpoly::permutations;
use crate::arith::{Param, Poly, XMono, XPoly, MAX_VARS};
use crate::error::{Error, Result};
use crate::macdonald::{column_order, macdonald_j_raising, RaisingKind};
use crate::partition::{c_alpha, Partition};
use crate::report::Report;
use crate::symmetric::{to_monomial_basis, Basis, SymPoly};

/// Which family of first-order letters an operator is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JackKind {
    /// letters `x_i (α x_i ∂_i + m - i + 1)`
    Raising,
    /// letters `x_i^{-1} (α x_i ∂_i + n - i)`
    Lowering,
}

/// `Δ(x)^{-1} Σ_β c_β(x) ∂^β` with Laurent coefficients in `x` over `ℤ[α]`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiffOp {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, XPoly<Poly>>,
}

impl DiffOp {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `(multi-index, numerator)` pairs; the common denominator is `Δ(x)`.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &XPoly<Poly>)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn order(&self) -> u32 {
        self.terms.keys().map(|b| b.iter().sum()).max().unwrap_or(0)
    }

    fn add_term(&mut self, beta: Vec<u32>, c: XPoly<Poly>) {
        let e = self
            .terms
            .entry(beta.clone())
            .or_insert_with(|| XPoly::zero(self.nvars));
        *e = e.add(&c);
        if e.is_zero() {
            self.terms.remove(&beta);
        }
    }

    /// Applies the operator and divides by `Δ(x)`; the image must be a
    /// polynomial.
    pub fn apply(&self, f: &XPoly<Poly>) -> Result<XPoly<Poly>> {
        let n = self.nvars;
        let mut num = XPoly::zero(n);
        for (beta, c) in &self.terms {
            let mut g = f.clone();
            for (i, &k) in beta.iter().enumerate() {
                for _ in 0..k {
                    g = g.derivative(i);
                }
            }
            if !g.is_zero() {
                num = num.add(&c.mul(&g));
            }
        }
        polynomial_quotient(&num, n)
    }

    pub fn apply_symmetric(&self, f: &SymPoly<Poly>) -> Result<SymPoly<Poly>> {
        to_monomial_basis(&self.apply(&f.to_xpoly()?)?, self.nvars)
    }
}

fn polynomial_quotient(num: &XPoly<Poly>, n: usize) -> Result<XPoly<Poly>> {
    let out = num.div_vandermonde(n)?;
    if out.terms().iter().any(|(m, _)| !m.is_nonneg()) {
        return Err(Error::NonExactDivision(format!(
            "negative powers of x survive in {out}"
        )));
    }
    Ok(out)
}

fn check_index(m: usize, n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        return Err(Error::TooManyVariables(n));
    }
    if m > n {
        return Err(Error::IndexOutOfRange(format!("m = {m} exceeds n = {n}")));
    }
    Ok(())
}

/// The two parts of letter `i`: `(multiplier of α ∂_i, constant multiplier)`.
fn letter(kind: JackKind, i: usize, m: usize, n: usize) -> (XMono, i64) {
    match kind {
        JackKind::Raising => (XMono::var(i, 2), m as i64 - i as i64),
        JackKind::Lowering => (XMono::one(), (n - 1 - i) as i64),
    }
}

fn constant_shift(kind: JackKind, i: usize) -> XMono {
    match kind {
        JackKind::Raising => XMono::var(i, 1),
        JackKind::Lowering => XMono::var(i, -1),
    }
}

fn staircase(n: usize) -> XMono {
    let d: Vec<i64> = (0..n).map(|i| (n - 1 - i) as i64).collect();
    XMono::from_slice(&d)
}

/// Expands `x^δ e_m(letters)` into `(multi-index, coefficient)` pairs before
/// antisymmetrization.
fn unsymmetrized(kind: JackKind, m: usize, n: usize) -> Vec<(Vec<u32>, XPoly<Poly>)> {
    let mut out = Vec::new();
    let delta = staircase(n);
    for imask in 0u32..(1 << n) {
        if imask.count_ones() as usize != m {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| imask & (1 << i) != 0).collect();
        for smask in 0u32..(1 << members.len()) {
            let mut beta = vec![0u32; n];
            let mut mono = delta;
            let mut c = Poly::one();
            for (a, &i) in members.iter().enumerate() {
                let (dpart, konst) = letter(kind, i, m, n);
                if smask & (1 << a) != 0 {
                    beta[i] = 1;
                    mono = mono.mul(&dpart);
                    c = c.mul(&Poly::alpha());
                } else {
                    mono = mono.mul(&constant_shift(kind, i));
                    c = c.mul_int(konst);
                }
            }
            if !c.is_zero() {
                out.push((beta, XPoly::monomial(n, mono, c)));
            }
        }
    }
    out
}

/// `Δ^{-1} Σ_w ε(w) w(x^δ e_m(letters))` as an explicit differential operator.
pub fn build_jack(kind: JackKind, m: usize, n: usize) -> Result<DiffOp> {
    check_index(m, n)?;
    let base = unsymmetrized(kind, m, n);
    let mut op = DiffOp {
        nvars: n,
        terms: BTreeMap::new(),
    };
    for (perm, sign) in permutations(n) {
        for (beta, c) in &base {
            let mut moved = vec![0u32; n];
            for (i, &k) in beta.iter().enumerate() {
                moved[perm[i]] = k;
            }
            op.add_term(moved, c.permute(&perm).scale(&Poly::int(sign)));
        }
    }
    Ok(op)
}

pub fn build_jack_raising(m: usize, n: usize) -> Result<DiffOp> {
    build_jack(JackKind::Raising, m, n)
}

pub fn build_jack_lowering(m: usize, n: usize) -> Result<DiffOp> {
    build_jack(JackKind::Lowering, m, n)
}

/// Second route for symmetric `f`: apply `x^δ e_m(letters)` to `f` first,
/// then antisymmetrize the result and divide by `Δ`.
pub fn apply_jack_antisymmetrized(kind: JackKind, m: usize, f: &XPoly<Poly>, n: usize) -> Result<XPoly<Poly>> {
    check_index(m, n)?;
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric(f.to_string()));
    }
    let mut g = XPoly::zero(n);
    for (beta, c) in unsymmetrized(kind, m, n) {
        let mut h = f.clone();
        for (i, &k) in beta.iter().enumerate() {
            if k == 1 {
                h = h.derivative(i);
            }
        }
        g = g.add(&c.mul(&h));
    }
    let mut num = XPoly::zero(n);
    for (perm, sign) in permutations(n) {
        num = num.add(&g.permute(&perm).scale(&Poly::int(sign)));
    }
    polynomial_quotient(&num, n)
}

/// Which construction produced a Jack polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JackProvenance {
    Raising,
    LimitOracle(u32),
}

impl JackProvenance {
    pub fn tag(self) -> String {
        match self {
            JackProvenance::Raising => "jack_raising".into(),
            JackProvenance::LimitOracle(a) => format!("jack_limit_oracle(alpha={a})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct JackResult {
    pub lambda: Partition,
    pub nvars: usize,
    /// coefficients in `ℤ[α]` (or integers for the oracle)
    pub j: SymPoly<Poly>,
    pub provenance: JackProvenance,
}

fn check_length(lambda: &Partition, n: usize) -> Result<()> {
    if lambda.len() > n {
        return Err(Error::LengthExceedsVars {
            partition: lambda.to_string(),
            nvars: n,
        });
    }
    if n == 0 || n > MAX_VARS {
        return Err(Error::TooManyVariables(n));
    }
    Ok(())
}

fn is_integral_alpha(f: &SymPoly<Poly>) -> bool {
    f.terms()
        .iter()
        .all(|(_, c)| c.is_polynomial() && c.only_involves(&[Param::A]))
}

/// `J^{(α)}_λ` by adding the columns of `λ` with the differential raising
/// operators, starting from 1.
pub fn jack_j(lambda: &Partition, n: usize) -> Result<JackResult> {
    check_length(lambda, n)?;
    let mut f = SymPoly::zero(n, Basis::Monomial);
    f.add_term(Partition::empty(), &Poly::one())?;
    for m in column_order(lambda) {
        f = jack_raising_cached(m, n)?.apply_symmetric(&f)?;
    }
    let lead = f.coeff(lambda);
    let expected = c_alpha(lambda);
    if lead != expected {
        return Err(Error::VerificationFailed {
            lhs: format!("leading coefficient {lead}"),
            rhs: expected.to_string(),
        });
    }
    if !is_integral_alpha(&f) {
        return Err(Error::NonIntegralEntry(f.to_string()));
    }
    Ok(JackResult {
        lambda: lambda.clone(),
        nvars: n,
        j: f,
        provenance: JackProvenance::Raising,
    })
}

fn jack_raising_cached(m: usize, n: usize) -> Result<std::sync::Arc<DiffOp>> {
    use std::sync::{Arc, Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<BTreeMap<(usize, usize), Arc<DiffOp>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(op) = cache.lock().expect("cache").get(&(m, n)) {
        return Ok(op.clone());
    }
    let op = Arc::new(build_jack_raising(m, n)?);
    cache.lock().expect("cache").insert((m, n), op.clone());
    Ok(op)
}

/// `lim_{t→1} J_λ(x; t^α, t) / (1 - t)^{|λ|}` at a positive integer `α`.
pub fn jack_limit_oracle(lambda: &Partition, n: usize, alpha: u32) -> Result<JackResult> {
    if alpha == 0 {
        return Err(Error::OutOfRange("alpha must be a positive integer".into()));
    }
    let j = macdonald_j_raising(lambda, n, RaisingKind::Kminus)?.j;
    let order = lambda.weight();
    let j = j.try_map_coeffs(|c| limit_at_t_one(&q_to_t_pow(c, alpha), order))?;
    Ok(JackResult {
        lambda: lambda.clone(),
        nvars: n,
        j,
        provenance: JackProvenance::LimitOracle(alpha),
    })
}

/// `J^{(α)}_λ` with `α` set to an integer.
pub fn specialize_alpha(f: &SymPoly<Poly>, alpha: i64) -> SymPoly<Poly> {
    f.map_coeffs(|c| c.eval_int(Param::A, alpha).expect("polynomial in alpha"))
}

/// `∏_{i=1}^m (α λ_i + m - i)(α (λ_i - 1) + n - i + 1)`.
pub fn jack_lowering_coeff(lambda: &Partition, m: usize, n: usize) -> Result<Poly> {
    if m > n || lambda.len() > m {
        return Err(Error::IndexOutOfRange(format!(
            "needs l(lambda) <= m <= n, got {lambda}, m = {m}, n = {n}"
        )));
    }
    let a = Poly::alpha();
    let mut out = Poly::one();
    for i in 1..=m {
        let li = lambda.part(i) as i64;
        let first = a.mul_int(li).add(&Poly::int(m as i64 - i as i64));
        let second = a.mul_int(li - 1).add(&Poly::int(n as i64 - i as i64 + 1));
        out = out.mul(&first).mul(&second);
    }
    Ok(out)
}

/// Checks `𝓜_m J_λ = (lowering coefficient) J_{λ-(1^m)}`; the coefficient
/// vanishes when `ℓ(λ) < m`.
pub fn jack_lowering_verify(lambda: &Partition, m: usize, n: usize) -> Result<Report> {
    check_length(lambda, n)?;
    let coeff = jack_lowering_coeff(lambda, m, n)?;
    let j = jack_j(lambda, n)?.j;
    let image = build_jack_lowering(m, n)?.apply_symmetric(&j)?;
    let rhs = match lambda.remove_column(m) {
        Some(lower) if lambda.len() == m => jack_j(&lower, n)?.j.scale(&coeff),
        _ => SymPoly::zero(n, Basis::Monomial),
    };
    if image != rhs {
        return Err(Error::VerificationFailed {
            lhs: image.to_string(),
            rhs: rhs.to_string(),
        });
    }
    Ok(Report::pass(
        "jack_lowering",
        &[
            ("lambda", lambda.to_string()),
            ("m", m.to_string()),
            ("n", n.to_string()),
        ],
    ))
}

/// Checks `jack_J` at `α` against the limit oracle.
pub fn jack_limit_verify(lambda: &Partition, n: usize, alpha: u32) -> Result<Report> {
    let lhs = specialize_alpha(&jack_j(lambda, n)?.j, alpha as i64);
    let rhs = jack_limit_oracle(lambda, n, alpha)?.j;
    if lhs != rhs {
        return Err(Error::VerificationFailed {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    Ok(Report::pass(
        "jack_limit",
        &[
            ("lambda", lambda.to_string()),
            ("n", n.to_string()),
            ("alpha", alpha.to_string()),
        ],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_poly;
    use crate::partition::partitions_of;
    use crate::symmetric::expand_monomial;

    fn pt(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn x(n: usize, i: usize) -> XPoly<Poly> {
        XPoly::var(n, i)
    }

    #[test]
    fn raising_on_one() {
        let one = XPoly::one(2);
        let k1 = build_jack_raising(1, 2).unwrap().apply(&one).unwrap();
        assert_eq!(k1, x(2, 0).add(&x(2, 1)));
        let k2 = build_jack_raising(2, 2).unwrap().apply(&one).unwrap();
        assert_eq!(k2, x(2, 0).mul(&x(2, 1)).scale(&Poly::int(2)));
        let f = expand_monomial::<Poly>(&pt(&[2, 1]), 3).unwrap();
        assert_eq!(build_jack_raising(0, 3).unwrap().apply(&f).unwrap(), f);
        assert_eq!(build_jack_lowering(0, 3).unwrap().apply(&f).unwrap(), f);
    }

    #[test]
    fn lowering_on_m1() {
        let f = expand_monomial::<Poly>(&pt(&[1]), 2).unwrap();
        let g = build_jack_lowering(1, 2).unwrap().apply(&f).unwrap();
        assert_eq!(g, XPoly::constant(2, Poly::alpha().mul_int(2)));
    }

    #[test]
    fn first_order_operators() {
        let op = build_jack_raising(2, 3).unwrap();
        assert_eq!(op.order(), 2);
        assert!(build_jack_raising(4, 3).is_err());
    }

    #[test]
    fn jack_examples() {
        let j1 = jack_j(&pt(&[1]), 2).unwrap().j;
        assert_eq!(j1.coeff(&pt(&[1])), Poly::one());
        assert_eq!(j1.len(), 1);
        let j2 = jack_j(&pt(&[2]), 2).unwrap().j;
        assert_eq!(j2.coeff(&pt(&[2])), parse_poly("1 + a").unwrap());
        assert_eq!(j2.coeff(&pt(&[1, 1])), Poly::int(2));
        let j11 = jack_j(&pt(&[1, 1]), 2).unwrap().j;
        assert_eq!(j11.coeff(&pt(&[1, 1])), Poly::int(2));
        assert_eq!(j11.len(), 1);
    }

    #[test]
    fn limit_examples() {
        let at1 = jack_limit_oracle(&pt(&[2]), 2, 1).unwrap().j;
        assert_eq!(at1.coeff(&pt(&[2])), Poly::int(2));
        assert_eq!(at1.coeff(&pt(&[1, 1])), Poly::int(2));
        let at2 = jack_limit_oracle(&pt(&[2]), 2, 2).unwrap().j;
        assert_eq!(at2.coeff(&pt(&[2])), Poly::int(3));
        assert_eq!(at2.coeff(&pt(&[1, 1])), Poly::int(2));
        let one = jack_limit_oracle(&pt(&[1]), 3, 5).unwrap().j;
        assert_eq!(one.coeff(&pt(&[1])), Poly::one());
        assert!(jack_limit_oracle(&pt(&[1]), 2, 0).is_err());
    }

    #[test]
    fn routes_agree() {
        for m in 0..=3 {
            for mu in [pt(&[]), pt(&[1]), pt(&[2]), pt(&[1, 1]), pt(&[2, 1])] {
                let f = expand_monomial::<Poly>(&mu, 3).unwrap();
                for kind in [JackKind::Raising, JackKind::Lowering] {
                    let a = build_jack(kind, m, 3).unwrap().apply(&f).unwrap();
                    let b = apply_jack_antisymmetrized(kind, m, &f, 3).unwrap();
                    assert_eq!(a, b, "{kind:?} m={m} mu={mu}");
                }
            }
        }
    }

    #[test]
    fn limit_matches_raising_small() {
        for d in 1..=3 {
            for lambda in partitions_of(d) {
                let n = lambda.len().max(2);
                for alpha in 1..=3 {
                    assert!(jack_limit_verify(&lambda, n, alpha).unwrap().passed());
                }
            }
        }
    }

    #[test]
    fn lowering_law_small() {
        assert!(jack_lowering_verify(&pt(&[2, 1]), 2, 2).unwrap().passed());
        assert!(jack_lowering_verify(&pt(&[1]), 2, 2).unwrap().passed());
        assert!(jack_lowering_verify(&pt(&[2]), 1, 3).unwrap().passed());
        assert_eq!(
            jack_lowering_coeff(&pt(&[1]), 1, 2).unwrap(),
            Poly::alpha().mul_int(2)
        );
    }
}
