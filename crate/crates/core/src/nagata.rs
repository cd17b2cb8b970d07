//! Sections of the square-zero extension `O + eps*O` (`eps^2 = 0`) over the
//! punctured line, with multiplication `(r, m)(r', m') = (rr', rm' + r'm)`.
//!
//! Components are Laurent polynomials in `z`, optionally times the formal
//! factor `E = exp(1/z)`. Only products with at most one `E` are
//! representable, which covers powers of `id + eps*g`.

use std::fmt;

use num_traits::One;
use serde::{Serialize, Serializer};

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::germ::LaurentGerm;

/// `poly` or `poly * exp(1/z)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentObject {
    poly: LaurentGerm,
    essential: bool,
}

impl LaurentObject {
    pub fn plain(poly: LaurentGerm) -> Result<Self> {
        Self::new(poly, false)
    }

    /// `poly * exp(1/z)`; `poly` must be nonzero.
    pub fn essential(poly: LaurentGerm) -> Result<Self> {
        Self::new(poly, true)
    }

    fn new(poly: LaurentGerm, essential: bool) -> Result<Self> {
        if !poly.is_exact() {
            return Err(Error::InvalidGerm(format!(
                "{} carries a truncation; sections need exact components",
                poly.render_in("z")
            )));
        }
        if essential && poly.is_zero() {
            return Err(Error::InvalidGerm(
                "the essential factor needs a nonzero polynomial".into(),
            ));
        }
        Ok(Self { poly, essential })
    }

    pub fn zero() -> Self {
        Self {
            poly: LaurentGerm::zero(),
            essential: false,
        }
    }

    pub fn one() -> Self {
        Self::z_pow(0)
    }

    pub fn z_pow(e: i64) -> Self {
        Self {
            poly: LaurentGerm::t_pow(e),
            essential: false,
        }
    }

    /// `exp(1/z)` itself.
    pub fn exp_inv() -> Self {
        Self {
            poly: LaurentGerm::one(),
            essential: true,
        }
    }

    pub fn poly(&self) -> &LaurentGerm {
        &self.poly
    }

    pub fn has_essential_factor(&self) -> bool {
        self.essential
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Holomorphic across 0: no essential factor and no negative powers.
    pub fn extends_across_origin(&self) -> bool {
        !self.essential && self.poly.lowest_exponent().map_or(true, |e| e >= 0)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        if self.essential && other.essential {
            return Err(Error::UnsupportedEssentialProduct);
        }
        Ok(Self {
            poly: self.poly.mul(&other.poly),
            essential: self.essential || other.essential,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.essential != other.essential {
            return Err(Error::UnsupportedMixedSum);
        }
        let poly = self.poly.add(&other.poly);
        let essential = self.essential && !poly.is_zero();
        Ok(Self { poly, essential })
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self {
            poly: self.poly.scale(&Coefficient::from_int(k)),
            essential: self.essential,
        }
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Ok(Self::one());
        }
        if self.essential && k > 1 {
            return Err(Error::UnsupportedEssentialProduct);
        }
        Ok(Self {
            poly: self.poly.pow(k),
            essential: self.essential,
        })
    }
}

impl fmt::Display for LaurentObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = self.poly.render_in("z");
        if !self.essential {
            f.write_str(&poly)
        } else if self.poly.terms().len() == 1 && self.poly.terms()[0] == (0, Coefficient::one()) {
            f.write_str("exp(1/z)")
        } else {
            write!(f, "({poly})*exp(1/z)")
        }
    }
}

impl Serialize for LaurentObject {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// `base + eps * nil` with `eps^2 = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DualSection {
    pub base: LaurentObject,
    pub nil: LaurentObject,
}

impl DualSection {
    pub fn new(base: LaurentObject, nil: LaurentObject) -> Self {
        Self { base, nil }
    }

    pub fn one() -> Self {
        Self::new(LaurentObject::one(), LaurentObject::zero())
    }

    /// `id + eps * g`.
    pub fn identity_plus(g: LaurentObject) -> Self {
        Self::new(LaurentObject::z_pow(1), g)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self::new(
            self.base.add(&other.base)?,
            self.nil.add(&other.nil)?,
        ))
    }

    /// `(r, m)(r', m') = (rr', rm' + r'm)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let base = self.base.mul(&other.base)?;
        let nil = self
            .base
            .mul(&other.nil)?
            .add(&other.base.mul(&self.nil)?)?;
        Ok(Self::new(base, nil))
    }

    /// Closed form `(r^k, k r^(k-1) m)`.
    pub fn pow(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Ok(Self::one());
        }
        let base = self.base.pow(k)?;
        let nil = self.base.pow(k - 1)?.mul(&self.nil)?.scale(k as i64);
        Ok(Self::new(base, nil))
    }

    /// `k - 1` repeated multiplications by `self`.
    pub fn pow_iterated(&self, k: u32) -> Result<Self> {
        (0..k).try_fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.nil.is_zero()
    }

    pub fn reduction(&self) -> &LaurentObject {
        &self.base
    }

    pub fn extends_across_origin(&self) -> bool {
        self.base.extends_across_origin() && self.nil.extends_across_origin()
    }
}

impl fmt::Display for DualSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + eps*({})", self.base, self.nil)
    }
}

/// The two choices of `g` in `sigma = id + eps*g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SingularPart {
    /// `g = 1/z`
    Inverse,
    /// `g = exp(1/z)`
    ExpInverse,
}

impl SingularPart {
    pub fn object(self) -> LaurentObject {
        match self {
            SingularPart::Inverse => LaurentObject::z_pow(-1),
            SingularPart::ExpInverse => LaurentObject::exp_inv(),
        }
    }

    pub fn section(self) -> DualSection {
        DualSection::identity_plus(self.object())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerRow {
    pub k: u32,
    pub power: DualSection,
    pub extends: bool,
    /// What `id + eps*k*g` would give, for comparison.
    pub linear_formula_extends: bool,
}

/// `sigma^k` and whether it extends across 0, for `k = 1..=max_pow`.
pub fn power_table(g: SingularPart, max_pow: u32) -> Result<Vec<PowerRow>> {
    let sigma = g.section();
    (1..=max_pow)
        .map(|k| {
            let power = sigma.pow(k)?;
            let linear = DualSection::identity_plus(g.object().scale(k as i64));
            Ok(PowerRow {
                k,
                extends: power.extends_across_origin(),
                linear_formula_extends: linear.extends_across_origin(),
                power,
            })
        })
        .collect()
}
