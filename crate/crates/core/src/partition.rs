//! Partitions and the partition-indexed scalars of the Macdonald theory.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{PMono, Param, Poly, RatFn};
use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive parts (trailing zeros stripped).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Accepts trailing zeros; rejects increasing sequences.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{:?} is not weakly decreasing", parts)));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1^m)`.
    pub fn column(m: usize) -> Self {
        Partition(vec![1; m])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `λ_i` with 1-based `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Parts padded with zeros to length `n` (must be at least the length).
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.0.first().copied().unwrap_or(0) as usize;
        let conj = (1..=cols)
            .map(|j| self.0.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition(conj)
    }

    /// `λ + (1^m)`; requires `ℓ(λ) ≤ m`.
    pub fn add_column(&self, m: usize) -> Self {
        let mut p = self.padded(m);
        for x in p.iter_mut().take(m) {
            *x += 1;
        }
        Partition(p)
    }

    /// `λ - (1^m)` when `ℓ(λ) = m`.
    pub fn remove_column(&self, m: usize) -> Option<Self> {
        if self.len() != m {
            return None;
        }
        Some(Partition::new(self.0.iter().map(|p| p - 1).collect()).expect("still decreasing"))
    }

    /// Cells `(i, j)` of the diagram, 1-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    /// `(a(s), ℓ(s))`: arm `λ_i - j`, leg `λ'_j - i`.
    pub fn arm_leg(&self, row: usize, col: usize) -> Result<(u32, u32)> {
        if row == 0 || col == 0 || col > self.part(row) as usize {
            return Err(Error::CellOutsideDiagram {
                partition: self.to_string(),
                row,
                col,
            });
        }
        let conj = self.conjugate();
        Ok((
            self.part(row) - col as u32,
            conj.part(col) - row as u32,
        ))
    }

    fn arm_legs(&self) -> Vec<(u32, u32)> {
        let conj = self.conjugate();
        self.cells()
            .map(|(i, j)| (self.part(i) - j as u32, conj.part(j) - i as u32))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad part {:?} in {:?}", p, s)))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

/// Lexicographic order on parts; descending lex refines dominance.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `μ ≤ λ` in dominance order; partitions of different weight are incomparable.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> bool {
    if mu.weight() != lambda.weight() {
        return false;
    }
    let n = mu.len().max(lambda.len());
    let (mut a, mut b) = (0u32, 0u32);
    for i in 1..=n {
        a += mu.part(i);
        b += lambda.part(i);
        if a > b {
            return false;
        }
    }
    true
}

/// Partitions of `d`, in reverse lexicographic order: `(d), (d-1,1), ..., (1^d)`.
pub fn partitions_of(d: u32) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `d` with at most `n` parts, reverse lexicographic.
pub fn partitions_with_length(d: u32, n: usize) -> Vec<Partition> {
    partitions_of(d).into_iter().filter(|p| p.len() <= n).collect()
}

/// `1 - t^a q^b` as a polynomial.
fn one_minus_tq(t_exp: i64, q_exp: i64) -> Poly {
    Poly::monomial(
        1.into(),
        PMono::var(Param::T, t_exp as i16).mul(&PMono::var(Param::Q, q_exp as i16)),
    )
    .one_minus()
}

/// `c_λ = ∏_s (1 - t^{ℓ(s)+1} q^{a(s)})`.
pub fn c_integral(lambda: &Partition) -> Poly {
    lambda
        .arm_legs()
        .into_iter()
        .fold(Poly::one(), |acc, (a, l)| {
            acc.mul(&one_minus_tq(l as i64 + 1, a as i64))
        })
}

/// `b_λ = ∏_s (1 - t^{ℓ(s)+1} q^{a(s)}) / (1 - t^{ℓ(s)} q^{a(s)+1})`.
pub fn b_coeff(lambda: &Partition) -> RatFn {
    let mut num = Poly::one();
    let mut den = Poly::one();
    for (a, l) in lambda.arm_legs() {
        num = num.mul(&one_minus_tq(l as i64 + 1, a as i64));
        den = den.mul(&one_minus_tq(l as i64, a as i64 + 1));
    }
    RatFn::new(num, den)
}

/// `d^n_λ(u) = ∏_{i=1}^n (1 - u t^{n-i} q^{λ_i})`.
pub fn eigen_poly(lambda: &Partition, n: usize) -> Result<Poly> {
    if lambda.len() > n {
        return Err(Error::LengthExceedsVars {
            partition: lambda.to_string(),
            nvars: n,
        });
    }
    Ok((1..=n).fold(Poly::one(), |acc, i| {
        let m = PMono::var(Param::U, 1)
            .mul(&PMono::var(Param::T, (n - i) as i16))
            .mul(&PMono::var(Param::Q, lambda.part(i) as i16));
        acc.mul(&Poly::monomial(1.into(), m).one_minus())
    }))
}

/// `c_λ(α) = ∏_s (α a(s) + ℓ(s) + 1)`.
pub fn c_alpha(lambda: &Partition) -> Poly {
    lambda.arm_legs().into_iter().fold(Poly::one(), |acc, (a, l)| {
        acc.mul(&Poly::alpha().mul_int(a as i64).add(&Poly::int(l as i64 + 1)))
    })
}

/// `a^m_λ = ∏_{i=1}^m (1 - t^{m-i} q^{λ_i})(1 - t^{n-i+1} q^{λ_i - 1})`.
pub fn lowering_coeff(lambda: &Partition, m: usize, n: usize) -> Result<Poly> {
    if m > n || lambda.len() > m {
        return Err(Error::IndexOutOfRange(format!(
            "lowering_coeff({lambda}, m={m}, n={n}) needs l(lambda) <= m <= n"
        )));
    }
    if lambda.len() < m {
        return Err(Error::NegativeExponent(format!(
            "lambda_{} = 0 for lambda = {lambda}, m = {m}",
            lambda.len() + 1
        )));
    }
    Ok((1..=m).fold(Poly::one(), |acc, i| {
        let li = lambda.part(i) as i64;
        acc.mul(&one_minus_tq((m - i) as i64, li))
            .mul(&one_minus_tq((n - i + 1) as i64, li - 1))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_poly;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn conjugation() {
        assert_eq!(pt("3,1").conjugate(), pt("2,1,1"));
        assert_eq!(pt("").conjugate(), pt(""));
        assert_eq!(pt("2,2").conjugate(), pt("2,2"));
        for d in 0..=8 {
            for l in partitions_of(d) {
                assert_eq!(l.conjugate().conjugate(), l);
            }
        }
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(pt("3,1,0,0").to_string(), "3,1");
        assert_eq!(pt("0").to_string(), "0");
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(2), vec![pt("2"), pt("1,1")]);
    }

    #[test]
    fn dominance() {
        assert!(dominance_leq(&pt("1,1"), &pt("2")));
        assert!(dominance_leq(&pt("2,2"), &pt("3,1")));
        assert!(!dominance_leq(&pt("3,1"), &pt("2,2")));
        assert!(!dominance_leq(&pt("1"), &pt("2")));
        assert!(!dominance_leq(&pt("2"), &pt("1")));
    }

    #[test]
    fn dominance_is_partial_order() {
        for d in 1..=8 {
            let ps = partitions_of(d);
            for a in &ps {
                assert!(dominance_leq(a, a));
                for b in &ps {
                    if a != b && dominance_leq(a, b) {
                        assert!(!dominance_leq(b, a));
                        // reverse lex refines dominance
                        assert!(a < b);
                    }
                    for c in &ps {
                        if dominance_leq(a, b) && dominance_leq(b, c) {
                            assert!(dominance_leq(a, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn arm_and_leg() {
        assert_eq!(pt("2,1").arm_leg(1, 1).unwrap(), (1, 1));
        assert_eq!(pt("1").arm_leg(1, 1).unwrap(), (0, 0));
        assert_eq!(pt("3,2").arm_leg(1, 2).unwrap(), (1, 1));
        assert!(matches!(
            pt("2,1").arm_leg(2, 2),
            Err(Error::CellOutsideDiagram { .. })
        ));
    }

    #[test]
    fn normalization_scalars() {
        assert_eq!(c_integral(&pt("1")), p("1 - t"));
        assert_eq!(c_integral(&pt("2")), p("(1 - q*t)*(1 - t)"));
        assert_eq!(c_integral(&pt("1,1")), p("(1 - t^2)*(1 - t)"));
        assert_eq!(b_coeff(&pt("")), RatFn::one());
        assert_eq!(b_coeff(&pt("1")), RatFn::new(p("1 - t"), p("1 - q")));
        assert_eq!(
            b_coeff(&pt("2")),
            RatFn::new(p("(1 - t)*(1 - q*t)"), p("(1 - q)*(1 - q^2)"))
        );
        assert_eq!(c_alpha(&pt("1")), p("1"));
        assert_eq!(c_alpha(&pt("2")), p("a + 1"));
        assert_eq!(c_alpha(&pt("1,1")), p("2"));
    }

    #[test]
    fn eigenvalue_polynomials() {
        assert_eq!(eigen_poly(&pt(""), 2).unwrap(), p("(1 - u*t)*(1 - u)"));
        assert_eq!(eigen_poly(&pt("1"), 2).unwrap(), p("(1 - u*t*q)*(1 - u)"));
        assert_eq!(eigen_poly(&pt("1,1"), 2).unwrap(), p("(1 - u*t*q)*(1 - u*q)"));
        assert!(matches!(
            eigen_poly(&pt("1,1,1"), 2),
            Err(Error::LengthExceedsVars { .. })
        ));
    }

    #[test]
    fn lowering_scalars() {
        assert_eq!(lowering_coeff(&pt("1"), 1, 2).unwrap(), p("(1 - q)*(1 - t^2)"));
        assert_eq!(lowering_coeff(&pt("1"), 1, 3).unwrap(), p("(1 - q)*(1 - t^3)"));
        assert_eq!(
            lowering_coeff(&pt("2,1"), 2, 2).unwrap(),
            p("(1 - t*q^2)*(1 - t^2*q)*(1 - q)*(1 - t)")
        );
        assert!(matches!(
            lowering_coeff(&pt("1"), 2, 2),
            Err(Error::NegativeExponent(_))
        ));
    }

    #[test]
    fn scalar_invariants() {
        for d in 0..=8 {
            for l in partitions_of(d) {
                let spec = |x: &Poly| x.subst(Param::Q, &Poly::t()).unwrap();
                assert_eq!(spec(&c_integral(&l)), spec(&c_integral(&l.conjugate())));
                let n = l.len().max(1);
                let shifted = eigen_poly(&l.add_column(n), n).unwrap();
                let base = eigen_poly(&l, n).unwrap();
                let uq = base.subst(Param::U, &Poly::u().mul(&Poly::q())).unwrap();
                assert_eq!(shifted, uq);
                // d^m_λ(1) vanishes when λ_m = 0
                let m = l.len() + 1;
                let at_one = eigen_poly(&l, m).unwrap().subst(Param::U, &Poly::one()).unwrap();
                assert!(at_one.is_zero());
            }
        }
    }
}
