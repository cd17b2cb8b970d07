//! Gaussian-rational coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact complex number `re + i*im` with rational parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coefficient(Complex<BigRational>);

impl Coefficient {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self(Complex::new(re, im))
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(
            BigRational::new(num.into(), den.into()),
            BigRational::zero(),
        )
    }

    pub fn gaussian(re: (i64, i64), im: (i64, i64)) -> Self {
        Self::new(
            BigRational::new(re.0.into(), re.1.into()),
            BigRational::new(im.0.into(), im.1.into()),
        )
    }

    /// `(re + i*im) / den`.
    pub(crate) fn over(re: BigInt, im: BigInt, den: &BigInt) -> Self {
        let im = if im.is_zero() {
            BigRational::zero()
        } else {
            BigRational::new(im, den.clone())
        };
        Self::new(BigRational::new(re, den.clone()), im)
    }

    pub fn re(&self) -> &BigRational {
        &self.0.re
    }

    pub fn im(&self) -> &BigRational {
        &self.0.im
    }

    pub fn is_real(&self) -> bool {
        self.0.im.is_zero()
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = BigRational::from_integer(BigInt::from(k));
        Self(Complex::new(&self.0.re * &k, &self.0.im * &k))
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (
            self.0.re.to_f64().unwrap_or(f64::NAN),
            self.0.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    pub(crate) fn add_assign_ref(&mut self, other: &Self) {
        self.0.re += &other.0.re;
        self.0.im += &other.0.im;
    }

    pub(crate) fn mul_ref(&self, other: &Self) -> Self {
        let (a, b) = (&self.0.re, &self.0.im);
        let (c, d) = (&other.0.re, &other.0.im);
        if b.is_zero() && d.is_zero() {
            return Self(Complex::new(a * c, BigRational::zero()));
        }
        Self(Complex::new(a * c - b * d, a * d + b * c))
    }
}

impl Zero for Coefficient {
    fn zero() -> Self {
        Self(Complex::zero())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Coefficient {
    fn one() -> Self {
        Self(Complex::one())
    }
}

impl Add for Coefficient {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        self.add_assign_ref(rhs);
    }
}

impl Sub for Coefficient {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl Mul for Coefficient {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Neg for Coefficient {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Coefficient {
    /// Real coefficients print as `a` or `a/b`, others as `(a/b,c/d)`.
    pub fn render(&self) -> String {
        if self.is_real() {
            fmt_rational(&self.0.re)
        } else {
            format!("({},{})", fmt_rational(&self.0.re), fmt_rational(&self.0.im))
        }
    }

    pub(crate) fn is_negative_real(&self) -> bool {
        self.is_real() && self.0.re.is_negative()
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
