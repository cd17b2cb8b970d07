#![allow(dead_code)]

//! Test-only oracles and random generators. Nothing here calls into the
//! code paths it is used to check.

use cusp_core::{Coefficient, LaurentGerm};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Coprime pairs with `2 <= p, q <= max`, both orders when `ordered` is false.
pub fn coprime_pairs(max: i64, ordered: bool) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for p in 2..=max {
        for q in 2..=max {
            if p != q && gcd(p, q) == 1 && (!ordered || p < q) {
                out.push((p, q));
            }
        }
    }
    out
}

/// Exhaustive search over `a <= n/p`, `b <= n/q`.
pub fn brute_contains(p: i64, q: i64, n: i64) -> bool {
    n >= 0 && (0..=n / p).any(|a| (n - a * p) >= 0 && (0..=n / q).any(|b| a * p + b * q == n))
}

/// Membership table for `0..=upto` by enumerating all sums.
pub fn sieve(p: i64, q: i64, upto: i64) -> Vec<bool> {
    let mut table = vec![false; upto as usize + 1];
    for a in 0..=upto / p {
        for b in 0..=(upto - a * p) / q {
            table[(a * p + b * q) as usize] = true;
        }
    }
    table
}

pub fn random_coefficient(rng: &mut TestRng) -> Coefficient {
    let den = [1, 1, 1, 2, 3][rng.gen_range(0..5)];
    loop {
        let re = rng.gen_range(-4..=4);
        let im = if rng.gen_bool(0.3) { rng.gen_range(-3..=3) } else { 0 };
        if re != 0 || im != 0 {
            return Coefficient::gaussian((re, den), (im, 1));
        }
    }
}

/// A germ vanishing at the cusp: exact monomial `c t^a`, or `t^a (unit)`
/// known up to a short truncation `O(t^(a + w))`.
pub fn random_vanishing_germ(rng: &mut TestRng) -> LaurentGerm {
    let low = rng.gen_range(1..=3);
    if rng.gen_bool(0.25) {
        return LaurentGerm::monomial(random_coefficient(rng), low + rng.gen_range(0..=2));
    }
    let width = rng.gen_range(1..=6);
    let mut terms = vec![(low, random_coefficient(rng))];
    for e in low + 1..low + width {
        if rng.gen_bool(0.5) {
            terms.push((e, random_coefficient(rng)));
        }
    }
    LaurentGerm::from_terms(terms, Some(low + width))
}

/// Exact Laurent polynomial with exponents in `[lo, hi]`.
pub fn random_exact_germ(rng: &mut TestRng, lo: i64, hi: i64, max_terms: usize) -> LaurentGerm {
    let n = rng.gen_range(0..=max_terms);
    LaurentGerm::from_terms(
        (0..n).map(|_| (rng.gen_range(lo..=hi), random_coefficient(rng))),
        None,
    )
}

/// Coefficient of `t^e`, reading absent terms as zero.
pub fn coeff_or_zero(g: &LaurentGerm, e: i64) -> Coefficient {
    g.coeff(e).cloned().unwrap_or_else(|| Coefficient::from_int(0))
}
