//! Branched-covering data of a cusp: covering degree, Whitney cone and the
//! order of flatness of germs, all in closed form for monomial curves.
//!
//! Norms are max-norms on `C^2`, so `||pi(t)|| = |t|^min(p,q)` near 0 and the
//! order of flatness of a germ with leading exponent `e` is `e / min(p,q)`.

use num_rational::Rational64;
use serde::Serialize;

use super::CuspCurve;
use crate::error::{Error, Result};
use crate::germ::LaurentGerm;

/// A coordinate axis of `C^2`. `Z1` is the line `{z2 = 0}`, `Z2` is `{z1 = 0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Axis {
    #[serde(rename = "z1-axis")]
    Z1,
    #[serde(rename = "z2-axis")]
    Z2,
}

impl Axis {
    /// Unit direction vector.
    pub fn direction(self) -> [f64; 2] {
        match self {
            Axis::Z1 => [1.0, 0.0],
            Axis::Z2 => [0.0, 1.0],
        }
    }

    pub fn other(self) -> Axis {
        match self {
            Axis::Z1 => Axis::Z2,
            Axis::Z2 => Axis::Z1,
        }
    }
}

impl std::fmt::Display for Axis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Axis::Z1 => "z1-axis",
            Axis::Z2 => "z2-axis",
        })
    }
}

impl CuspCurve {
    /// Degree `min(p, q)` of the projection onto the coordinate whose pullback
    /// has the smaller exponent, and that target axis.
    pub fn covering_degree(&self) -> (i64, Axis) {
        if self.p() < self.q() {
            (self.p(), Axis::Z2)
        } else {
            (self.q(), Axis::Z1)
        }
    }

    /// Kernel of the admissible projection: the axis that gets collapsed.
    pub fn projection_kernel(&self) -> Axis {
        self.covering_degree().1.other()
    }

    /// The cone of limiting secant directions at the cusp: the axis of the
    /// coordinate with the smaller pullback exponent.
    pub fn whitney_cone(&self) -> Axis {
        if self.p() < self.q() {
            Axis::Z2
        } else {
            Axis::Z1
        }
    }

    /// `ord f = e / min(p, q)` for a germ with leading exponent `e >= 1`.
    pub fn order_of_flatness(&self, f: &LaurentGerm) -> Result<Rational64> {
        match f.lowest_exponent() {
            Some(e) if e >= 1 => Ok(Rational64::new(e, self.covering_degree().0)),
            Some(e) => Err(Error::InvalidGerm(format!(
                "{f} has leading exponent {e}; order of flatness needs a germ vanishing at the cusp"
            ))),
            None => Err(Error::InvalidGerm(format!("{f} has no known leading term"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(p: i64, q: i64) -> CuspCurve {
        CuspCurve::new(p, q).unwrap()
    }

    #[test]
    fn covering_degrees() {
        assert_eq!(curve(2, 3).covering_degree(), (2, Axis::Z2));
        assert_eq!(curve(3, 2).covering_degree(), (2, Axis::Z1));
        for k in 2..20 {
            assert_eq!(curve(k, k + 1).covering_degree(), (k, Axis::Z2));
        }
    }

    #[test]
    fn cone_meets_kernel_only_at_origin() {
        assert_eq!(curve(2, 3).whitney_cone(), Axis::Z2);
        assert_eq!(curve(3, 2).whitney_cone(), Axis::Z1);
        for p in 2..=12 {
            for q in 2..=12 {
                let Ok(c) = CuspCurve::new(p, q) else { continue };
                assert_ne!(c.whitney_cone(), c.projection_kernel());
            }
        }
    }

    #[test]
    fn flatness_orders() {
        let c = curve(2, 3);
        let h = LaurentGerm::t_pow(1);
        assert_eq!(c.order_of_flatness(&h), Ok(Rational64::new(1, 2)));
        assert_eq!(
            c.order_of_flatness(&h.pow(5)),
            Ok(Rational64::new(5, 2))
        );
        let c = curve(4, 7);
        assert_eq!(
            c.order_of_flatness(&c.monomial_germ(0, 1)),
            Ok(Rational64::from_integer(1))
        );
        assert!(c.order_of_flatness(&"1 + t".parse().unwrap()).is_err());
        assert!(c.order_of_flatness(&"t^-2".parse().unwrap()).is_err());
        assert!(c.order_of_flatness(&LaurentGerm::big_o(3)).is_err());
    }
}
