use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::finite::finite_root_set;
use super::gcm::Gcm2;
use super::lattice::{norm_scaled, RootVec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootClass {
    RealPositive,
    RealNegative,
    ImaginaryPositive,
    ImaginaryNegative,
    NotRoot,
    Zero,
}

impl RootClass {
    pub fn is_root(self) -> bool {
        !matches!(self, RootClass::NotRoot | RootClass::Zero)
    }

    pub fn is_real(self) -> bool {
        matches!(self, RootClass::RealPositive | RootClass::RealNegative)
    }

    pub fn is_imaginary(self) -> bool {
        matches!(
            self,
            RootClass::ImaginaryPositive | RootClass::ImaginaryNegative
        )
    }

    pub fn is_positive_root(self) -> bool {
        matches!(self, RootClass::RealPositive | RootClass::ImaginaryPositive)
    }

    /// Class of `-v` given the class of `v`.
    pub fn negated(self) -> RootClass {
        match self {
            RootClass::RealPositive => RootClass::RealNegative,
            RootClass::RealNegative => RootClass::RealPositive,
            RootClass::ImaginaryPositive => RootClass::ImaginaryNegative,
            RootClass::ImaginaryNegative => RootClass::ImaginaryPositive,
            other => other,
        }
    }
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Decides whether `v` is a root and of which kind.
///
/// For `ab >= 4`, a vector of positive norm is real iff
/// `k_j (α_j, α_j) / (v, v)` is an integer for both coordinates, and a
/// nonzero vector of non-positive norm is imaginary. Both branches also demand
/// that the nonzero coordinates share a sign. Finite-type matrices are answered
/// from the enumerated root set.
pub fn classify_root(g: &Gcm2, v: &RootVec) -> RootClass {
    if v.is_zero() {
        return RootClass::Zero;
    }
    let positive = v.is_positive();
    if !positive && !v.is_negative() {
        return RootClass::NotRoot;
    }
    if g.is_finite() {
        return if finite_root_set(g).contains(v) {
            if positive {
                RootClass::RealPositive
            } else {
                RootClass::RealNegative
            }
        } else {
            RootClass::NotRoot
        };
    }

    let norm = norm_scaled(g, v);
    if norm.is_positive() {
        // With N = b·(v,v): k₁(α₁,α₁)/(v,v) = 2b·x/N and k₂(α₂,α₂)/(v,v) = 2a·y/N.
        let two = num_bigint::BigInt::from(2);
        let r1 = (&two * g.b_big() * &v.x).mod_floor(&norm);
        let r2 = (&two * g.a_big() * &v.y).mod_floor(&norm);
        if r1.is_zero() && r2.is_zero() {
            if positive {
                RootClass::RealPositive
            } else {
                RootClass::RealNegative
            }
        } else {
            RootClass::NotRoot
        }
    } else if positive {
        RootClass::ImaginaryPositive
    } else {
        RootClass::ImaginaryNegative
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> Gcm2 {
        Gcm2::new(a, b).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            classify_root(&g(2, 2), &RootVec::new(1, 1)),
            RootClass::ImaginaryPositive
        );
        assert_eq!(
            classify_root(&g(5, 1), &RootVec::new(5, 1)),
            RootClass::RealPositive
        );
        assert_eq!(
            classify_root(&g(2, 2), &RootVec::new(-1, 1)),
            RootClass::NotRoot
        );
        assert_eq!(classify_root(&g(2, 2), &RootVec::zero()), RootClass::Zero);
    }

    #[test]
    fn positive_norm_without_integrality_is_not_a_root() {
        // norm 8, 2b·x/N = 1/2
        assert_eq!(
            classify_root(&g(2, 2), &RootVec::new(2, 0)),
            RootClass::NotRoot
        );
        assert_eq!(
            classify_root(&g(6, 3), &RootVec::new(2, 0)),
            RootClass::NotRoot
        );
    }

    #[test]
    fn finite_type_uses_root_set() {
        let a2 = g(1, 1);
        assert_eq!(
            classify_root(&a2, &RootVec::new(1, 1)),
            RootClass::RealPositive
        );
        assert_eq!(classify_root(&a2, &RootVec::new(2, 1)), RootClass::NotRoot);
        assert_eq!(
            classify_root(&a2, &RootVec::new(-1, -1)),
            RootClass::RealNegative
        );
        let g2 = g(3, 1);
        assert_eq!(
            classify_root(&g2, &RootVec::new(3, 2)),
            RootClass::RealPositive
        );
        assert_eq!(classify_root(&g2, &RootVec::new(4, 2)), RootClass::NotRoot);
    }

    #[test]
    fn negation_flips_class() {
        assert_eq!(RootClass::RealPositive.negated(), RootClass::RealNegative);
        assert_eq!(RootClass::NotRoot.negated(), RootClass::NotRoot);
        assert_eq!(RootClass::Zero.negated(), RootClass::Zero);
    }
}
