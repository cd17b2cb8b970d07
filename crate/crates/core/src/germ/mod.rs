//! Truncated Laurent polynomials in the normalization parameter `t`.
//!
//! A [`LaurentGerm`] is a finite sum of terms `c * t^e` plus an optional
//! truncation marker `O(t^T)` standing for unknown terms of exponent `>= T`.
//! Arithmetic propagates the marker so that every stored coefficient is
//! exact, and questions about exponents come back as a three-valued
//! [`Decision`].

mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::coeff::Coefficient;

/// Outcome of a question whose answer may depend on truncated terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    CertainlyYes,
    CertainlyNo,
    Unknown(String),
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::CertainlyYes)
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Decision::CertainlyNo)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Decision::Unknown(_))
    }

    /// Conjunction: any `No` wins, then any `Unknown`, else `Yes`.
    pub fn and(self, other: Decision) -> Decision {
        match (self, other) {
            (Decision::CertainlyNo, _) | (_, Decision::CertainlyNo) => Decision::CertainlyNo,
            (Decision::Unknown(r), _) | (_, Decision::Unknown(r)) => Decision::Unknown(r),
            _ => Decision::CertainlyYes,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Decision::CertainlyYes => "yes",
            Decision::CertainlyNo => "no",
            Decision::Unknown(_) => "unknown",
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decision::Unknown(reason) => write!(f, "unknown ({reason})"),
            other => f.write_str(other.label()),
        }
    }
}

impl Serialize for Decision {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// A Laurent polynomial with exact coefficients and an optional truncation.
///
/// Invariants: stored exponents strictly increase, no stored coefficient is
/// zero, and every stored exponent is below the tail bound when present.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentGerm {
    terms: Vec<(i64, Coefficient)>,
    tail: Option<i64>,
}

impl LaurentGerm {
    pub fn zero() -> Self {
        Self {
            terms: Vec::new(),
            tail: None,
        }
    }

    pub fn one() -> Self {
        Self::monomial(Coefficient::one(), 0)
    }

    pub fn monomial(c: Coefficient, exponent: i64) -> Self {
        Self::from_terms([(exponent, c)], None)
    }

    /// `t^e` with coefficient 1.
    pub fn t_pow(exponent: i64) -> Self {
        Self::monomial(Coefficient::one(), exponent)
    }

    /// The pure truncation `O(t^T)`.
    pub fn big_o(tail: i64) -> Self {
        Self {
            terms: Vec::new(),
            tail: Some(tail),
        }
    }

    /// Builds a germ from arbitrary terms, summing repeated exponents and
    /// dropping zeros and anything at or beyond `tail`.
    pub fn from_terms<I>(terms: I, tail: Option<i64>) -> Self
    where
        I: IntoIterator<Item = (i64, Coefficient)>,
    {
        let mut acc: BTreeMap<i64, Coefficient> = BTreeMap::new();
        for (e, c) in terms {
            if tail.is_some_and(|t| e >= t) {
                continue;
            }
            acc.entry(e)
                .and_modify(|x| x.add_assign_ref(&c))
                .or_insert(c);
        }
        Self {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
            tail,
        }
    }

    /// Adds the marker `O(t^T)` (or lowers an existing one).
    pub fn truncate(&self, tail: i64) -> Self {
        let tail = self.tail.map_or(tail, |t| t.min(tail));
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| *e < tail)
                .cloned()
                .collect(),
            tail: Some(tail),
        }
    }

    pub fn terms(&self) -> &[(i64, Coefficient)] {
        &self.terms
    }

    pub fn tail_bound(&self) -> Option<i64> {
        self.tail
    }

    pub fn is_exact(&self) -> bool {
        self.tail.is_none()
    }

    /// Exactly zero: no terms and no truncation.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.tail.is_none()
    }

    pub fn coeff(&self, exponent: i64) -> Option<&Coefficient> {
        self.terms
            .binary_search_by(|(e, _)| e.cmp(&exponent))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    pub fn exponents(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.iter().map(|(e, _)| *e)
    }

    pub fn lowest_exponent(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn highest_exponent(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Lower bound on every exponent that may be present, known or not.
    /// `None` for the exact zero germ.
    fn order_bound(&self) -> Option<i64> {
        self.lowest_exponent().or(self.tail)
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return Self {
                terms: Vec::new(),
                tail: self.tail,
            };
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (*e, x.mul_ref(c)))
                .collect(),
            tail: self.tail,
        }
    }

    /// Multiplies by `t^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + shift, c.clone()))
                .collect(),
            tail: self.tail.map(|t| t + shift),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let tail = min_bound(self.tail, other.tail);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let next = match (self.terms.get(i), other.terms.get(j)) {
                (Some((ea, ca)), Some((eb, cb))) => match ea.cmp(eb) {
                    Ordering::Less => {
                        i += 1;
                        (*ea, ca.clone())
                    }
                    Ordering::Greater => {
                        j += 1;
                        (*eb, cb.clone())
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        let mut c = ca.clone();
                        c.add_assign_ref(cb);
                        (*ea, c)
                    }
                },
                (Some((e, c)), None) => {
                    i += 1;
                    (*e, c.clone())
                }
                (None, Some((e, c))) => {
                    j += 1;
                    (*e, c.clone())
                }
                (None, None) => unreachable!(),
            };
            if tail.is_some_and(|t| next.0 >= t) {
                break;
            }
            if !next.1.is_zero() {
                out.push(next);
            }
        }
        Self { terms: out, tail }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
            tail: self.tail,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Cauchy product. The result is truncated at
    /// `min(tail(f) + ord(g), tail(g) + ord(f))`, where `ord` is the lowest
    /// exponent that may occur.
    pub fn mul(&self, other: &Self) -> Self {
        let (Some(low_a), Some(low_b)) = (self.order_bound(), other.order_bound()) else {
            return Self::zero();
        };
        let tail = min_bound(
            self.tail.map(|t| t + low_b),
            other.tail.map(|t| t + low_a),
        );
        let (Some(top_a), Some(top_b)) = (self.highest_exponent(), other.highest_exponent())
        else {
            return Self {
                terms: Vec::new(),
                tail,
            };
        };
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = tail.map_or(top_a + top_b + 1, |t| t.min(top_a + top_b + 1));
        if hi <= lo {
            return Self {
                terms: Vec::new(),
                tail,
            };
        }

        let a = Scaled::new(&self.terms);
        let b = Scaled::new(&other.terms);
        let den = &a.den * &b.den;
        let width = (hi - lo) as usize;
        let pairs = self.terms.len().saturating_mul(other.terms.len());
        let sums: Vec<(i64, BigInt, BigInt)> = if width <= pairs.saturating_mul(4) {
            let mut acc = vec![(BigInt::zero(), BigInt::zero()); width];
            a.convolve(&b, hi, |e, re, im| {
                let slot = &mut acc[(e - lo) as usize];
                slot.0 += re;
                if let Some(im) = im {
                    slot.1 += im;
                }
            });
            acc.into_iter()
                .enumerate()
                .map(|(i, (re, im))| (lo + i as i64, re, im))
                .collect()
        } else {
            let mut acc: BTreeMap<i64, (BigInt, BigInt)> = BTreeMap::new();
            a.convolve(&b, hi, |e, re, im| {
                let slot = acc.entry(e).or_default();
                slot.0 += re;
                if let Some(im) = im {
                    slot.1 += im;
                }
            });
            acc.into_iter().map(|(e, (re, im))| (e, re, im)).collect()
        };
        let terms = sums
            .into_iter()
            .filter(|(_, re, im)| !re.is_zero() || !im.is_zero())
            .map(|(e, re, im)| (e, Coefficient::over(re, im, &den)))
            .collect();
        Self { terms, tail }
    }

    /// `f^n` by square-and-multiply; `f^0 = 1` exactly.
    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Checks every exponent that may occur against `pred`.
    ///
    /// `holds_from` is the caller's promise that `pred` is true for every
    /// integer at or above it; without it, a truncated germ can only be
    /// refuted, never confirmed.
    pub fn exponents_within<P>(&self, pred: P, holds_from: Option<i64>) -> Decision
    where
        P: Fn(i64) -> bool,
    {
        if self.exponents().any(|e| !pred(e)) {
            return Decision::CertainlyNo;
        }
        let Some(tail) = self.tail else {
            return Decision::CertainlyYes;
        };
        match holds_from {
            Some(from) if (tail..from).all(&pred) => Decision::CertainlyYes,
            Some(from) => {
                let bad = (tail..from).find(|e| !pred(*e)).unwrap_or(from);
                Decision::Unknown(format!(
                    "unknown terms from t^{tail} on may include exponent {bad}"
                ))
            }
            None => Decision::Unknown(format!("unknown terms from t^{tail} on")),
        }
    }

    /// Renders as `c*t^e + ... + O(t^T)` in the given variable.
    pub fn render_in(&self, var: &str) -> String {
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let (sign, c) = if i > 0 && c.is_negative_real() {
                (" - ", -c.clone())
            } else if i > 0 {
                (" + ", c.clone())
            } else {
                ("", c.clone())
            };
            out.push_str(sign);
            let power = match e {
                0 => String::new(),
                1 => var.to_string(),
                e => format!("{var}^{e}"),
            };
            if power.is_empty() {
                out.push_str(&c.render());
            } else if c.is_one() {
                out.push_str(&power);
            } else if c == -Coefficient::one() {
                out.push('-');
                out.push_str(&power);
            } else {
                out.push_str(&format!("{}*{power}", c.render()));
            }
        }
        if let Some(t) = self.tail {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            out.push_str(&format!("O({var}^{t})"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parses the grammar produced by [`LaurentGerm::render_in`].
    pub fn parse_in(input: &str, var: char) -> crate::Result<Self> {
        parse::parse(input, var)
    }
}

/// Coefficients `(re + i*im) / den` over one common denominator, so that
/// products can be accumulated in integers and reduced once at the end.
struct Scaled {
    den: BigInt,
    terms: Vec<(i64, BigInt, BigInt)>,
    real: bool,
}

impl Scaled {
    fn new(terms: &[(i64, Coefficient)]) -> Self {
        let den = terms.iter().fold(BigInt::one(), |acc, (_, c)| {
            acc.lcm(c.re().denom()).lcm(c.im().denom())
        });
        let lift = |r: &num_rational::BigRational| r.numer() * (&den / r.denom());
        let terms: Vec<(i64, BigInt, BigInt)> = terms
            .iter()
            .map(|(e, c)| (*e, lift(c.re()), lift(c.im())))
            .collect();
        let real = terms.iter().all(|(_, _, im)| im.is_zero());
        Self { den, terms, real }
    }

    fn convolve(&self, other: &Self, hi: i64, mut sink: impl FnMut(i64, BigInt, Option<BigInt>)) {
        let low_b = other.terms[0].0;
        let real = self.real && other.real;
        for (ea, ar, ai) in &self.terms {
            if ea + low_b >= hi {
                break;
            }
            for (eb, br, bi) in &other.terms {
                let e = ea + eb;
                if e >= hi {
                    break;
                }
                if real {
                    sink(e, ar * br, None);
                } else {
                    sink(e, ar * br - ai * bi, Some(ar * bi + ai * br));
                }
            }
        }
    }
}

fn min_bound(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl fmt::Display for LaurentGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_in("t"))
    }
}

impl std::str::FromStr for LaurentGerm {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        parse::parse(s, 't')
    }
}

impl Serialize for LaurentGerm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl Add for &LaurentGerm {
    type Output = LaurentGerm;
    fn add(self, rhs: &LaurentGerm) -> LaurentGerm {
        LaurentGerm::add(self, rhs)
    }
}

impl Sub for &LaurentGerm {
    type Output = LaurentGerm;
    fn sub(self, rhs: &LaurentGerm) -> LaurentGerm {
        LaurentGerm::sub(self, rhs)
    }
}

impl Mul for &LaurentGerm {
    type Output = LaurentGerm;
    fn mul(self, rhs: &LaurentGerm) -> LaurentGerm {
        LaurentGerm::mul(self, rhs)
    }
}

impl Neg for &LaurentGerm {
    type Output = LaurentGerm;
    fn neg(self) -> LaurentGerm {
        LaurentGerm::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> LaurentGerm {
        s.parse().unwrap()
    }

    #[test]
    fn addition_examples() {
        let t = LaurentGerm::t_pow(1);
        assert_eq!(&t + &LaurentGerm::zero(), t);
        assert!((&t + &t.neg()).is_zero());
        assert_eq!(&g("t + O(t^5)") + &g("t^4 + t^6"), g("t + t^4 + O(t^5)"));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&g("t^2") * &g("t^3"), g("t^5"));
        assert_eq!(&g("t + O(t^6)") * &g("t + O(t^6)"), g("t^2 + O(t^7)"));
        assert_eq!(&g("1 + t") * &g("1 - t"), g("1 - t^2"));
        assert!((&g("0") * &g("t + O(t^3)")).is_zero());
        // Pure truncations multiply into a pure truncation.
        assert_eq!(&g("O(t^2)") * &g("t^3 + O(t^4)"), g("O(t^5)"));
    }

    #[test]
    fn power_examples() {
        assert_eq!(g("t").pow(5), g("t^5"));
        assert_eq!(g("t + O(t^20)").pow(3), g("t^3 + O(t^22)"));
        assert_eq!(g("1 + t").pow(2), g("1 + 2*t + t^2"));
        assert_eq!(g("t + O(t^4)").pow(0), LaurentGerm::one());
    }

    #[test]
    fn lowest_exponents() {
        assert_eq!(g("t^3 + t^7").lowest_exponent(), Some(3));
        assert_eq!(LaurentGerm::zero().lowest_exponent(), None);
        assert_eq!(g("O(t^4)").lowest_exponent(), None);
    }

    #[test]
    fn exponent_decisions() {
        let nonneg = |e: i64| e >= 0;
        assert_eq!(g("t^2").exponents_within(nonneg, Some(0)), Decision::CertainlyYes);
        assert_eq!(
            g("t^-1 + t").exponents_within(nonneg, Some(0)),
            Decision::CertainlyNo
        );
        let s = crate::NumericalSemigroup::new(2, 3).unwrap();
        assert_eq!(
            g("O(t^5)").exponents_within(|e| s.contains(e), Some(s.conductor())),
            Decision::CertainlyYes
        );
        assert!(g("O(t^1)")
            .exponents_within(|e| s.contains(e), Some(s.conductor()))
            .is_unknown());
        assert!(g("t^2 + O(t^3)").exponents_within(nonneg, None).is_unknown());
    }

    #[test]
    fn decision_conjunction() {
        use Decision::*;
        assert_eq!(CertainlyYes.and(CertainlyYes), CertainlyYes);
        assert_eq!(Unknown("x".into()).and(CertainlyNo), CertainlyNo);
        assert!(CertainlyYes.and(Unknown("x".into())).is_unknown());
    }

    #[test]
    fn rendering() {
        assert_eq!(g("t - 3*t^2 + O(t^4)").to_string(), "t - 3*t^2 + O(t^4)");
        assert_eq!(g("-t^-1 + 1/2").to_string(), "-t^-1 + 1/2");
        assert_eq!(g("(1,2)*t^3").to_string(), "(1,2)*t^3");
        assert_eq!(LaurentGerm::zero().to_string(), "0");
        assert_eq!(g("O(t^3)").to_string(), "O(t^3)");
        assert_eq!(LaurentGerm::parse_in("2*z^-1", 'z').unwrap().render_in("z"), "2*z^-1");
    }
}
