//! Monomial cusp curves `z1^p = z2^q` and holomorphy of germs on them.
//!
//! The normalization `t -> (t^q, t^p)` is a homeomorphism onto the curve, so
//! a continuous germ is the same thing as its pullback, and a weakly
//! holomorphic germ is the same thing as a c-holomorphic one. Restrictions
//! of ambient holomorphic functions pull back to series whose exponents lie
//! in the semigroup `<p, q>`; that is the holomorphy criterion used here.

mod geometry;
mod weierstrass;

pub use geometry::Axis;
pub use weierstrass::WeierstrassPoly;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::germ::{Decision, LaurentGerm};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CuspCurve {
    semigroup: NumericalSemigroup,
}

/// The germ `h = z1^m / z2^n` (extended by 0) with `mq - np = 1`, whose
/// pullback is `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadoGerm {
    pub m: i64,
    pub n: i64,
    pub pullback: LaurentGerm,
}

impl CuspCurve {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        Ok(Self {
            semigroup: NumericalSemigroup::new(p, q)?,
        })
    }

    /// Parses `gamma:p,q`.
    pub fn parse(spec: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            what: "curve",
            input: spec.to_string(),
            reason: reason.to_string(),
        };
        let rest = spec
            .trim()
            .strip_prefix("gamma:")
            .ok_or_else(|| err("expected the form gamma:p,q"))?;
        let (p, q) = rest
            .split_once(',')
            .ok_or_else(|| err("expected the form gamma:p,q"))?;
        let p = p.trim().parse().map_err(|_| err("p is not an integer"))?;
        let q = q.trim().parse().map_err(|_| err("q is not an integer"))?;
        Self::new(p, q)
    }

    pub fn p(&self) -> i64 {
        self.semigroup.p()
    }

    pub fn q(&self) -> i64 {
        self.semigroup.q()
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    /// Exponent of the pullback of `z1^a z2^b`, namely `a*q + b*p`.
    pub fn pullback_monomial(&self, a: i64, b: i64) -> i64 {
        a * self.q() + b * self.p()
    }

    pub fn monomial_germ(&self, a: i64, b: i64) -> LaurentGerm {
        LaurentGerm::t_pow(self.pullback_monomial(a, b))
    }

    /// The minimal positive solution of `mq - np = 1`, with `1 <= m <= p`.
    pub fn rado_germ(&self) -> RadoGerm {
        let (p, q) = (self.p(), self.q());
        let ext = q.extended_gcd(&p);
        debug_assert_eq!(ext.gcd, 1);
        // ext.x * q + ext.y * p = 1
        let m = ext.x.rem_euclid(p);
        let m = if m == 0 { p } else { m };
        let n = (m * q - 1) / p;
        debug_assert_eq!(m * q - n * p, 1);
        RadoGerm {
            m,
            n,
            pullback: LaurentGerm::t_pow(1),
        }
    }

    pub fn is_holomorphic_at_cusp(&self, f: &LaurentGerm) -> Decision {
        let s = self.semigroup;
        f.exponents_within(|e| s.contains(e), Some(s.conductor()))
    }

    /// First stored exponent that keeps `f` from being holomorphic.
    pub fn holomorphy_witness(&self, f: &LaurentGerm) -> Option<i64> {
        f.exponents().find(|e| !self.semigroup.contains(*e))
    }

    pub fn is_weakly_holomorphic(&self, f: &LaurentGerm) -> Decision {
        f.exponents_within(|e| e >= 0, Some(0))
    }

    fn check_power_input(&self, f: &LaurentGerm) -> Result<()> {
        if f.lowest_exponent().is_none() {
            return Err(Error::InvalidGerm(format!(
                "{f} has no known leading term"
            )));
        }
        match self.is_weakly_holomorphic(f) {
            Decision::CertainlyNo => Err(Error::InvalidGerm(format!(
                "{f} is not weakly holomorphic on {self}"
            ))),
            _ => Ok(()),
        }
    }

    /// Smallest `n >= 1` for which `f^n` is certainly holomorphic, searched
    /// up to the conductor.
    pub fn min_power(&self, f: &LaurentGerm) -> Result<i64> {
        self.check_power_input(f)?;
        let bound = self.semigroup.conductor();
        let mut power = LaurentGerm::one();
        let mut all_unknown = true;
        for n in 1..=bound {
            power = power.mul(f);
            match self.is_holomorphic_at_cusp(&power) {
                Decision::CertainlyYes => return Ok(n),
                Decision::CertainlyNo => all_unknown = false,
                Decision::Unknown(_) => {}
            }
        }
        if all_unknown {
            Err(Error::UndecidableAtTruncation(format!(
                "every power of {f} up to {bound} depends on truncated terms"
            )))
        } else {
            Err(Error::NoPowerWithinBound { bound })
        }
    }

    /// Smallest `N` such that `f^n` is certainly holomorphic for all
    /// `n >= N`, found by scanning up to `conductor + p*q`.
    pub fn stable_power(&self, f: &LaurentGerm) -> Result<i64> {
        self.check_power_input(f)?;
        let cap = self.semigroup.conductor() + self.p() * self.q();
        let mut power = LaurentGerm::one();
        let mut last_bad: Option<(i64, Decision)> = None;
        for n in 1..=cap {
            power = power.mul(f);
            let d = self.is_holomorphic_at_cusp(&power);
            if !d.is_yes() {
                last_bad = Some((n, d));
            }
        }
        match last_bad {
            None => Ok(1),
            Some((n, _)) if n == cap => Err(Error::NoPowerWithinBound { bound: cap }),
            Some((n, Decision::Unknown(reason))) => Err(Error::UndecidableAtTruncation(
                format!("power {n} of {f}: {reason}"),
            )),
            Some((n, _)) => Ok(n + 1),
        }
    }

    /// The sufficient condition `q * floor((m + a)/p) + b >= n` for
    /// `z1^a z2^b h` to be holomorphic.
    pub fn floor_multiplier_check(&self, a: i64, b: i64) -> bool {
        let RadoGerm { m, n, .. } = self.rado_germ();
        self.q() * Integer::div_floor(&(m + a), &self.p()) + b >= n
    }

    /// Exact criterion: the pullback `t^(aq + bp + 1)` is holomorphic.
    pub fn exact_multiplier_check(&self, a: i64, b: i64) -> bool {
        self.semigroup.contains(self.pullback_monomial(a, b) + 1)
    }

    /// `r = min(p, q) - 1`: the germs `1, h, ..., h^r` generate the weakly
    /// holomorphic germs as a module over the holomorphic ones.
    pub fn weak_generator_count(&self) -> i64 {
        self.semigroup.min_generator() - 1
    }

    /// Checks at monomial level that every `e` in `[0, upto]` is `s + j`
    /// with `s` in the semigroup and `0 <= j <= generators`.
    pub fn generates_up_to(&self, generators: i64, upto: i64) -> bool {
        (0..=upto).all(|e| (0..=generators.min(e)).any(|j| self.semigroup.contains(e - j)))
    }

    /// Runs [`Self::generates_up_to`] for `r` and for `r - 1` over
    /// `[0, conductor + r]`.
    pub fn verify_weak_generation(&self) -> (bool, bool) {
        let r = self.weak_generator_count();
        let upto = self.semigroup.conductor() + r;
        (self.generates_up_to(r, upto), self.generates_up_to(r - 1, upto))
    }

    /// Weierstrass polynomial of the germ with pullback `t^e` over the
    /// admissible projection.
    pub fn weierstrass(&self, e: i64) -> Result<WeierstrassPoly> {
        WeierstrassPoly::new(self.covering_degree().0, e)
    }
}

impl std::fmt::Display for CuspCurve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "gamma:{},{}", self.p(), self.q())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(p: i64, q: i64) -> CuspCurve {
        CuspCurve::new(p, q).unwrap()
    }

    fn g(s: &str) -> LaurentGerm {
        s.parse().unwrap()
    }

    #[test]
    fn parses_curve_spec() {
        assert_eq!(CuspCurve::parse("gamma:2,3").unwrap(), curve(2, 3));
        assert!(CuspCurve::parse("gamma:2,4").is_err());
        assert!(CuspCurve::parse("cusp:2,3").is_err());
    }

    #[test]
    fn pullback_exponents() {
        let c = curve(2, 3);
        assert_eq!(c.pullback_monomial(1, 0), 3);
        assert_eq!(c.pullback_monomial(0, 1), 2);
        assert_eq!(c.monomial_germ(1, 0).lowest_exponent(), Some(3));
        for k in 2..20 {
            let c = curve(k, k + 1);
            assert_eq!(c.pullback_monomial(k - 1, 0) + 1, k * k);
            assert_eq!(c.pullback_monomial(0, k), k * k);
        }
    }

    #[test]
    fn rado_exponents() {
        let RadoGerm { m, n, .. } = curve(2, 3).rado_germ();
        assert_eq!((m, n), (1, 1));
        let RadoGerm { m, n, .. } = curve(2, 5).rado_germ();
        assert_eq!((m, n), (1, 2));
        for k in 2..30 {
            let r = curve(k, k + 1).rado_germ();
            assert_eq!((r.m, r.n), (1, 1));
        }
        // q < p: 3*m - 5*n = 1 has minimal solution m = 2, n = 1.
        let r = curve(5, 3).rado_germ();
        assert_eq!((r.m, r.n), (2, 1));
    }

    #[test]
    fn holomorphy_of_h_and_its_powers() {
        let c = curve(2, 3);
        let h = c.rado_germ().pullback;
        assert_eq!(c.is_holomorphic_at_cusp(&h), Decision::CertainlyNo);
        assert_eq!(c.holomorphy_witness(&h), Some(1));
        assert_eq!(c.is_holomorphic_at_cusp(&h.pow(2)), Decision::CertainlyYes);
        for k in 2..=50 {
            let c = curve(k, k + 1);
            let h = c.rado_germ().pullback;
            assert!(c.is_holomorphic_at_cusp(&h.pow(k as u32 - 1)).is_no());
        }
    }

    #[test]
    fn weak_holomorphy() {
        let c = curve(4, 5);
        assert!(c.is_weakly_holomorphic(&c.rado_germ().pullback).is_yes());
        assert!(c.is_weakly_holomorphic(&g("t^-1")).is_no());
        assert!(curve(2, 3).is_weakly_holomorphic(&g("1 + t^3")).is_yes());
    }

    #[test]
    fn min_and_stable_powers() {
        let h = LaurentGerm::t_pow(1);
        assert_eq!(curve(2, 3).min_power(&h), Ok(2));
        assert_eq!(curve(3, 4).min_power(&h), Ok(3));
        assert_eq!(curve(3, 4).min_power(&g("t^3")), Ok(1));
        assert_eq!(curve(2, 3).stable_power(&h), Ok(2));
        for k in 2..12 {
            assert_eq!(curve(k, k + 1).stable_power(&h), Ok(k * (k - 1)));
        }
        assert_eq!(curve(5, 7).stable_power(&g("t^5")), Ok(1));
    }

    #[test]
    fn power_errors() {
        let c = curve(2, 3);
        assert!(matches!(
            c.min_power(&g("1 + O(t)")),
            Err(Error::UndecidableAtTruncation(_))
        ));
        assert!(matches!(
            c.min_power(&g("1 + t")),
            Err(Error::NoPowerWithinBound { .. })
        ));
        assert!(matches!(c.min_power(&g("t^-1")), Err(Error::InvalidGerm(_))));
        assert!(matches!(c.min_power(&g("0")), Err(Error::InvalidGerm(_))));
        // On <3,4>, t^n + O(t^(n+1)) is undecided at n = 3, 4 (5 may appear).
        assert_eq!(curve(3, 4).min_power(&g("t + O(t^2)")), Ok(6));
    }

    #[test]
    fn stable_power_truncation() {
        // Below the conductor the tail keeps n = 5 undecided on <3,4>.
        let c = curve(3, 4);
        assert_eq!(c.stable_power(&g("t + O(t^2)")), Ok(6));
        assert!(matches!(
            c.stable_power(&g("t^3 + O(t^4)")),
            Err(Error::UndecidableAtTruncation(_))
        ));
    }

    #[test]
    fn multiplier_checks() {
        for k in 2..20 {
            let c = curve(k, k + 1);
            assert!(c.floor_multiplier_check(k - 1, 0));
            assert!(c.exact_multiplier_check(k - 1, 0));
            assert!(!c.floor_multiplier_check(0, 0));
            assert!(!c.exact_multiplier_check(0, 0));
        }
        let c = curve(2, 3);
        for a in 0..=50 {
            for b in 0..=50 {
                if c.floor_multiplier_check(a, b) {
                    assert!(c.exact_multiplier_check(a, b), "a = {a}, b = {b}");
                }
            }
        }
    }

    #[test]
    fn weak_generators() {
        assert_eq!(curve(2, 3).weak_generator_count(), 1);
        assert_eq!(curve(5, 7).weak_generator_count(), 4);
        assert!(curve(5, 7).generates_up_to(4, 28));
        assert_eq!(curve(5, 7).verify_weak_generation(), (true, false));
        for k in 2..15 {
            assert_eq!(curve(k, k + 1).weak_generator_count(), k - 1);
        }
    }
}
