mod common;

use common::coeff_or_zero;
use cusp_core::{Coefficient, LaurentGerm};
use proptest::prelude::*;

fn coefficient() -> impl Strategy<Value = Coefficient> {
    (-5i64..=5, 1i64..=3, -2i64..=2).prop_map(|(re, den, im)| Coefficient::gaussian((re, den), (im, 1)))
}

fn exact_germ() -> impl Strategy<Value = LaurentGerm> {
    prop::collection::vec((-4i64..12, coefficient()), 0..6)
        .prop_map(|terms| LaurentGerm::from_terms(terms, None))
}

fn any_germ() -> impl Strategy<Value = LaurentGerm> {
    (exact_germ(), prop::option::of(-2i64..16)).prop_map(|(g, tail)| match tail {
        Some(t) => g.truncate(t),
        None => g,
    })
}

/// Coefficients below `bound` agree.
fn agree_below(a: &LaurentGerm, b: &LaurentGerm, bound: Option<i64>) -> bool {
    let exps: Vec<i64> = a.exponents().chain(b.exponents()).collect();
    exps.into_iter()
        .filter(|e| bound.map_or(true, |t| *e < t))
        .all(|e| coeff_or_zero(a, e) == coeff_or_zero(b, e))
}

fn common_bound(a: &LaurentGerm, b: &LaurentGerm) -> Option<i64> {
    match (a.tail_bound(), b.tail_bound()) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

proptest! {
    #[test]
    fn exact_ring_laws(f in exact_germ(), g in exact_germ(), h in exact_germ()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &LaurentGerm::one(), f.clone());
    }

    #[test]
    fn truncated_ring_laws(f in any_germ(), g in any_germ(), h in any_germ()) {
        let lhs = &(&f * &g) * &h;
        let rhs = &f * &(&g * &h);
        prop_assert!(agree_below(&lhs, &rhs, common_bound(&lhs, &rhs)));
        let lhs = &f * &(&g + &h);
        let rhs = &(&f * &g) + &(&f * &h);
        prop_assert!(agree_below(&lhs, &rhs, common_bound(&lhs, &rhs)));
        prop_assert_eq!(&f * &g, &g * &f);
    }

    #[test]
    fn truncation_is_consistent_with_exact_products(f in exact_germ(), g in exact_germ(), tf in 0i64..14, tg in 0i64..14) {
        // Truncating the inputs never changes coefficients below the result's bound.
        let exact = &f * &g;
        let approx = &f.truncate(tf) * &g.truncate(tg);
        prop_assert!(agree_below(&exact, &approx, approx.tail_bound()));
    }

    #[test]
    fn leading_exponents_add(f in exact_germ(), g in exact_germ()) {
        if let (Some(a), Some(b)) = (f.lowest_exponent(), g.lowest_exponent()) {
            prop_assert_eq!((&f * &g).lowest_exponent(), Some(a + b));
        }
    }

    #[test]
    fn square_and_multiply_matches_repeated_product(f in any_germ(), n in 0u32..7) {
        let repeated = (0..n).fold(LaurentGerm::one(), |acc, _| &acc * &f);
        let fast = f.pow(n);
        prop_assert_eq!(fast.tail_bound(), repeated.tail_bound());
        prop_assert!(agree_below(&fast, &repeated, fast.tail_bound()));
    }

    #[test]
    fn render_parse_round_trip(f in any_germ()) {
        let text = f.to_string();
        prop_assert_eq!(text.parse::<LaurentGerm>().unwrap(), f);
    }

    #[test]
    fn stored_terms_respect_invariants(f in any_germ(), g in any_germ()) {
        for h in [&f * &g, &f + &g, f.pow(3)] {
            let exps: Vec<i64> = h.exponents().collect();
            prop_assert!(exps.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(h.terms().iter().all(|(_, c)| *c != Coefficient::from_int(0)));
            if let Some(t) = h.tail_bound() {
                prop_assert!(exps.iter().all(|e| *e < t));
            }
        }
    }
}

#[test]
fn zero_germ_is_canonical() {
    let z = LaurentGerm::from_terms([(3, Coefficient::from_int(2)), (3, Coefficient::from_int(-2))], None);
    assert_eq!(z, LaurentGerm::zero());
    assert_eq!(z.tail_bound(), None);
    assert!(z.terms().is_empty());
}
