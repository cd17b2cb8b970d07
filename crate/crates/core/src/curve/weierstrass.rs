//! Weierstrass polynomials of monomial germs over a branched covering.
//!
//! For the germ with pullback `t^e` and a projection of degree `d` (so the
//! base coordinate pulls back to `t^d`), the product of `T - f(x')` over the
//! fiber is `(T^(d/g) - z^(e/g))^g` with `g = gcd(d, e)`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::{binomial, Integer};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::germ::LaurentGerm;

/// A polynomial in `z` with integer coefficients, as sorted `(exponent, coeff)`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ZPolynomial(pub Vec<(i64, BigInt)>);

impl ZPolynomial {
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Evaluates at a germ by substitution.
    pub fn substitute(&self, z: &LaurentGerm) -> LaurentGerm {
        self.0.iter().fold(LaurentGerm::zero(), |acc, (e, c)| {
            let c = Coefficient::from_int(c.to_i64().expect("coefficient fits in i64"));
            acc.add(&z.pow(*e as u32).scale(&c))
        })
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.0
            .iter()
            .map(|(e, c)| z.powi(*e as i32) * c.to_f64().unwrap_or(f64::NAN))
            .sum()
    }
}

fn z_power(e: i64) -> String {
    if e == 1 {
        "z".to_string()
    } else {
        format!("z^{e}")
    }
}

impl std::fmt::Display for ZPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.0.iter().enumerate() {
            let sign = match (i, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let mag = c.magnitude();
            let body = match (e, mag.is_one()) {
                (0, _) => mag.to_string(),
                (_, true) => z_power(*e),
                (_, false) => format!("{mag}*{}", z_power(*e)),
            };
            write!(f, "{sign}{body}")?;
        }
        Ok(())
    }
}

/// `W(z, T) = T^d + a_1(z) T^(d-1) + ... + a_d(z)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeierstrassPoly {
    pub degree: i64,
    pub z_exponent: i64,
    pub inner_degree: i64,
    pub inner_z_exponent: i64,
    pub multiplicity: i64,
    /// `coefficients[j] = a_j(z)`, with `a_0 = 1`.
    pub coefficients: Vec<ZPolynomial>,
}

impl WeierstrassPoly {
    pub fn new(degree: i64, z_exponent: i64) -> Result<Self> {
        if degree < 1 {
            return Err(Error::InvalidArgument(format!(
                "covering degree must be at least 1, got {degree}"
            )));
        }
        if z_exponent < 1 {
            return Err(Error::InvalidArgument(format!(
                "germ exponent must be at least 1, got {z_exponent}"
            )));
        }
        let g = degree.gcd(&z_exponent);
        let (a, b) = (degree / g, z_exponent / g);
        // (T^a - z^b)^g = sum_i C(g, i) (-1)^i z^(b i) T^(a (g - i))
        let mut coefficients = vec![ZPolynomial::default(); degree as usize + 1];
        for i in 0..=g {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let c = BigInt::from(binomial(g, i) * sign);
            coefficients[(a * i) as usize] = ZPolynomial(vec![(b * i, c)]);
        }
        Ok(Self {
            degree,
            z_exponent,
            inner_degree: a,
            inner_z_exponent: b,
            multiplicity: g,
            coefficients,
        })
    }

    pub fn coefficient(&self, j: usize) -> &ZPolynomial {
        &self.coefficients[j]
    }

    /// `W(z, T)` with germs substituted for both variables.
    pub fn substitute(&self, z: &LaurentGerm, t: &LaurentGerm) -> LaurentGerm {
        let d = self.degree as usize;
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .fold(LaurentGerm::zero(), |acc, (j, a)| {
                acc.add(&a.substitute(z).mul(&t.pow((d - j) as u32)))
            })
    }

    /// Whether `W(t^d, t^e)` vanishes identically.
    pub fn annihilates_pullback(&self) -> bool {
        self.substitute(
            &LaurentGerm::t_pow(self.degree),
            &LaurentGerm::t_pow(self.z_exponent),
        )
        .is_zero()
    }

    pub fn eval(&self, z: Complex64, t: Complex64) -> Complex64 {
        let d = self.degree as usize;
        self.coefficients
            .iter()
            .enumerate()
            .map(|(j, a)| a.eval(z) * t.powi((d - j) as i32))
            .sum()
    }

    /// Numerical roots in `T` over the base point `z`, with multiplicity.
    ///
    /// The simple roots of `T^a - z^b` are found by Durand-Kerner after
    /// rescaling to unit modulus, then repeated `g` times.
    pub fn numeric_roots(&self, z: Complex64) -> Vec<Complex64> {
        let a = self.inner_degree as usize;
        let c = z.powi(self.inner_z_exponent as i32);
        if c.norm() == 0.0 {
            return vec![Complex64::zero(); self.degree as usize];
        }
        let scale = c.norm().powf(1.0 / a as f64);
        let w = c / scale.powi(a as i32);
        let mut monic = vec![Complex64::zero(); a + 1];
        monic[0] = Complex64::new(1.0, 0.0);
        monic[a] = -w;
        let inner = durand_kerner(&monic);
        inner
            .iter()
            .flat_map(|u| std::iter::repeat(u * scale).take(self.multiplicity as usize))
            .collect()
    }

    /// Largest `|T| / ||z||^(1/d)` over the roots above `z`.
    pub fn root_bound_ratio(&self, z: Complex64) -> f64 {
        let base = z.norm().powf(1.0 / self.degree as f64);
        self.numeric_roots(z)
            .iter()
            .map(|t| t.norm() / base)
            .fold(0.0, f64::max)
    }
}

/// Roots of the monic polynomial `x^n + c_1 x^(n-1) + ... + c_n`, given as
/// `[1, c_1, ..., c_n]`.
pub fn durand_kerner(monic: &[Complex64]) -> Vec<Complex64> {
    let n = monic.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let eval = |x: Complex64| monic.iter().fold(Complex64::zero(), |acc, c| acc * x + c);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powi(k as i32)).collect();
    for _ in 0..1000 {
        let mut delta: f64 = 0.0;
        for i in 0..n {
            let xi = roots[i];
            let denom: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| xi - roots[j])
                .product();
            let step = eval(xi) / denom;
            roots[i] = xi - step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    roots
}

impl std::fmt::Display for WeierstrassPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let lead = if self.inner_degree == 1 {
            "T".to_string()
        } else {
            format!("T^{}", self.inner_degree)
        };
        let inner = format!("{lead} - {}", z_power(self.inner_z_exponent));
        if self.multiplicity == 1 {
            f.write_str(&inner)
        } else {
            write!(f, "({inner})^{}", self.multiplicity)
        }
    }
}
