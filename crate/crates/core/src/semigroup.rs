//! Two-generator numerical semigroups `<p, q> = { a*p + b*q : a, b >= 0 }`.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// The semigroup generated by two coprime integers `p, q >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct NumericalSemigroup {
    p: i64,
    q: i64,
}

impl NumericalSemigroup {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 2 || q < 2 {
            return Err(Error::InvalidGenerators {
                p,
                q,
                reason: "generators must be at least 2",
            });
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidGenerators {
                p,
                q,
                reason: "generators must be coprime",
            });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn min_generator(&self) -> i64 {
        self.p.min(self.q)
    }

    /// Membership test. Runs over the residues of the smaller generator:
    /// `n` is in the semigroup iff some `b` in `[0, s)` has `b*l <= n` and
    /// `b*l = n (mod s)`, where `s < l` are the generators.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let (small, large) = (self.p.min(self.q), self.p.max(self.q));
        let target = n.rem_euclid(small);
        let mut multiple = 0i64;
        for _ in 0..small {
            if multiple > n {
                return false;
            }
            if multiple % small == target {
                return true;
            }
            multiple += large;
        }
        false
    }

    /// `(p - 1)(q - 1)`: every integer from here on lies in the semigroup.
    pub fn conductor(&self) -> i64 {
        (self.p - 1) * (self.q - 1)
    }

    /// `pq - p - q`, the largest integer outside the semigroup.
    pub fn frobenius(&self) -> i64 {
        self.p * self.q - self.p - self.q
    }

    /// Some `(a, b)` with `a*p + b*q = n`, choosing the smallest `a`.
    pub fn representation(&self, n: i64) -> Option<(i64, i64)> {
        if n < 0 {
            return None;
        }
        (0..self.q)
            .take_while(|a| a * self.p <= n)
            .find(|a| (n - a * self.p) % self.q == 0)
            .map(|a| (a, (n - a * self.p) / self.q))
    }

    /// Whether `n` is a sum of at least `parts` nonzero semigroup elements,
    /// i.e. `n = a*p + b*q` with `a + b >= parts`. These are the exponents of
    /// the pullback of the ideal `m^parts` of the cusp.
    pub fn in_ideal_power(&self, parts: i64, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        if parts <= 0 {
            return self.contains(n);
        }
        // a + b is maximal when the smaller generator is used as often as possible.
        let (small, large) = (self.p.min(self.q), self.p.max(self.q));
        (0..=n / large)
            .filter(|b| (n - b * large) % small == 0)
            .any(|b| b + (n - b * large) / small >= parts)
    }
}

impl std::fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<{},{}>", self.p, self.q)
    }
}
