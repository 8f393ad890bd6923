use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::classify::classify_root;
use super::gcm::Gcm2;
use crate::error::{Error, Result};

/// An element `x·α₁ + y·α₂` of the root lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVec {
    #[serde(with = "crate::serde_int::scalar")]
    pub x: BigInt,
    #[serde(with = "crate::serde_int::scalar")]
    pub y: BigInt,
}

impl RootVec {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        RootVec {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn zero() -> Self {
        RootVec::new(0, 0)
    }

    pub fn alpha1() -> Self {
        RootVec::new(1, 0)
    }

    pub fn alpha2() -> Self {
        RootVec::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Both coordinates `>= 0` and not both zero.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && !self.x.is_negative() && !self.y.is_negative()
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && !self.x.is_positive() && !self.y.is_positive()
    }

    /// Nonzero coordinates share one sign.
    pub fn is_sign_coherent(&self) -> bool {
        self.is_positive() || self.is_negative()
    }

    pub fn scaled(&self, k: &BigInt) -> RootVec {
        RootVec {
            x: &self.x * k,
            y: &self.y * k,
        }
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Neg for &RootVec {
    type Output = RootVec;
    fn neg(self) -> RootVec {
        RootVec {
            x: -&self.x,
            y: -&self.y,
        }
    }
}

impl Neg for RootVec {
    type Output = RootVec;
    fn neg(self) -> RootVec {
        -&self
    }
}

impl Add for &RootVec {
    type Output = RootVec;
    fn add(self, rhs: &RootVec) -> RootVec {
        RootVec {
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
        }
    }
}

impl Sub for &RootVec {
    type Output = RootVec;
    fn sub(self, rhs: &RootVec) -> RootVec {
        RootVec {
            x: &self.x - &rhs.x,
            y: &self.y - &rhs.y,
        }
    }
}

impl Add for RootVec {
    type Output = RootVec;
    fn add(self, rhs: RootVec) -> RootVec {
        &self + &rhs
    }
}

impl Sub for RootVec {
    type Output = RootVec;
    fn sub(self, rhs: RootVec) -> RootVec {
        &self - &rhs
    }
}

/// `b·(u, v)` for the invariant form with `(α₁,α₁) = 2`, `(α₂,α₂) = 2a/b`,
/// `(α₁,α₂) = -a`. Scaling by `b` keeps the value integral and preserves signs.
pub fn bilinear_scaled(g: &Gcm2, u: &RootVec, v: &RootVec) -> BigInt {
    let a = g.a_big();
    let b = g.b_big();
    let two = BigInt::from(2);
    &two * &b * &u.x * &v.x + &two * &a * &u.y * &v.y - &a * &b * (&u.x * &v.y + &u.y * &v.x)
}

/// `b·(v, v)`.
pub fn norm_scaled(g: &Gcm2, v: &RootVec) -> BigInt {
    bilinear_scaled(g, v, v)
}

/// One of the two simple reflections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Simple {
    S1,
    S2,
}

impl Simple {
    pub fn other(self) -> Simple {
        match self {
            Simple::S1 => Simple::S2,
            Simple::S2 => Simple::S1,
        }
    }
}

impl TryFrom<u8> for Simple {
    type Error = Error;

    fn try_from(i: u8) -> Result<Self> {
        match i {
            1 => Ok(Simple::S1),
            2 => Ok(Simple::S2),
            _ => Err(Error::InvalidArgument(format!(
                "simple reflection index must be 1 or 2, got {i}"
            ))),
        }
    }
}

/// `s_i(v) = v - ⟨v, α_i^∨⟩ α_i` with `⟨α₂, α₁^∨⟩ = -a` and `⟨α₁, α₂^∨⟩ = -b`.
pub fn simple_reflection(g: &Gcm2, i: Simple, v: &RootVec) -> RootVec {
    match i {
        Simple::S1 => RootVec {
            x: g.a_big() * &v.y - &v.x,
            y: v.y.clone(),
        },
        Simple::S2 => RootVec {
            x: v.x.clone(),
            y: g.b_big() * &v.x - &v.y,
        },
    }
}

/// A product `s_{w₁} s_{w₂} ⋯ s_{wₙ}` of simple reflections, written left to
/// right; as an operator the rightmost factor acts first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct WeylWord(pub Vec<Simple>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn single(s: Simple) -> Self {
        WeylWord(vec![s])
    }

    /// `(s_first s_other)^k`.
    pub fn alternating_power(first: Simple, k: usize) -> Self {
        let mut w = Vec::with_capacity(2 * k);
        for _ in 0..k {
            w.push(first);
            w.push(first.other());
        }
        WeylWord(w)
    }

    pub fn then(mut self, rhs: WeylWord) -> Self {
        self.0.extend(rhs.0);
        self
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, g: &Gcm2, v: &RootVec) -> RootVec {
        weyl_word_apply(g, &self.0, v)
    }
}

pub fn weyl_word_apply(g: &Gcm2, word: &[Simple], v: &RootVec) -> RootVec {
    word.iter()
        .rev()
        .fold(v.clone(), |acc, &s| simple_reflection(g, s, &acc))
}

/// `⟨beta, alpha^∨⟩ = 2(beta, alpha)/(alpha, alpha)` as an exact rational.
pub fn pairing(g: &Gcm2, beta: &RootVec, alpha: &RootVec) -> Result<BigRational> {
    if !classify_root(g, alpha).is_real() {
        return Err(Error::NonRealRoot(alpha.clone()));
    }
    Ok(BigRational::new(
        BigInt::from(2) * bilinear_scaled(g, beta, alpha),
        norm_scaled(g, alpha),
    ))
}

/// Integral pairing; a non-integral value means `alpha` was not a genuine
/// real root and is reported as an internal inconsistency.
pub fn coroot_pairing(g: &Gcm2, beta: &RootVec, alpha: &RootVec) -> Result<BigInt> {
    let num = BigInt::from(2) * bilinear_scaled(g, beta, alpha);
    let den = norm_scaled(g, alpha);
    if !den.is_positive() {
        return Err(Error::NonRealRoot(alpha.clone()));
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Inconsistent(format!(
            "pairing of {beta} against {alpha} is {num}/{den}, not an integer"
        )));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> Gcm2 {
        Gcm2::new(a, b).unwrap()
    }

    #[test]
    fn bilinear_examples() {
        let d = RootVec::new(1, 1);
        assert_eq!(norm_scaled(&g(2, 2), &d), BigInt::from(0));
        assert_eq!(norm_scaled(&g(5, 1), &RootVec::new(5, 1)), BigInt::from(10));
        assert_eq!(norm_scaled(&g(3, 2), &RootVec::new(3, 5)), BigInt::from(6));
    }

    #[test]
    fn reflections() {
        let g51 = g(5, 1);
        assert_eq!(
            simple_reflection(&g51, Simple::S1, &RootVec::alpha1()),
            RootVec::new(-1, 0)
        );
        assert_eq!(
            simple_reflection(&g51, Simple::S1, &RootVec::alpha2()),
            RootVec::new(5, 1)
        );
        let s2s1 = simple_reflection(
            &g51,
            Simple::S2,
            &simple_reflection(&g51, Simple::S1, &RootVec::alpha2()),
        );
        assert_eq!(s2s1, RootVec::new(5, 4));
    }

    #[test]
    fn weyl_words() {
        let g32 = g(3, 2);
        let v = RootVec::new(7, -3);
        assert_eq!(weyl_word_apply(&g32, &[], &v), v);
        assert_eq!(
            weyl_word_apply(&g32, &[Simple::S1, Simple::S2], &RootVec::alpha1()),
            RootVec::new(5, 2)
        );
        assert_eq!(
            weyl_word_apply(&g(5, 1), &[Simple::S2, Simple::S1], &RootVec::alpha2()),
            RootVec::new(5, 4)
        );
        assert_eq!(
            WeylWord::alternating_power(Simple::S2, 2).0,
            vec![Simple::S2, Simple::S1, Simple::S2, Simple::S1]
        );
    }

    #[test]
    fn pairing_examples() {
        let g32 = g(3, 2);
        let a1 = RootVec::alpha1();
        let a2 = RootVec::alpha2();
        assert_eq!(
            pairing(&g32, &a2, &a1).unwrap(),
            BigRational::from_integer((-3).into())
        );
        assert_eq!(
            pairing(&g32, &a1, &a2).unwrap(),
            BigRational::from_integer((-2).into())
        );
        let b12 = RootVec::new(3, 5);
        assert_eq!(
            pairing(&g32, &b12, &b12).unwrap(),
            BigRational::from_integer(2.into())
        );
        assert_eq!(
            pairing(&g32, &a1, &b12).unwrap(),
            BigRational::from_integer((-6).into())
        );
        assert_eq!(coroot_pairing(&g32, &a1, &b12).unwrap(), BigInt::from(-6));
    }

    #[test]
    fn pairing_rejects_non_real_alpha() {
        let g22 = g(2, 2);
        let delta = RootVec::new(1, 1);
        assert_eq!(
            pairing(&g22, &RootVec::alpha1(), &delta),
            Err(Error::NonRealRoot(delta.clone()))
        );
        assert!(pairing(&g22, &RootVec::alpha1(), &RootVec::zero()).is_err());
    }

    #[test]
    fn sign_helpers() {
        assert!(RootVec::new(0, 3).is_positive());
        assert!(RootVec::new(-1, 0).is_negative());
        assert!(!RootVec::new(1, -1).is_sign_coherent());
        assert!(!RootVec::zero().is_sign_coherent());
    }
}
