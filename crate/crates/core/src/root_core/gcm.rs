use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cartan type of a rank-2 matrix, read off the sign of `det = 4 - ab`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    Finite,
    Affine,
    Hyperbolic,
}

impl CartanType {
    /// Type of a 2x2 generalized Cartan matrix with the given determinant.
    pub fn from_determinant(det: &BigInt) -> Self {
        match det.sign() {
            num_bigint::Sign::Plus => CartanType::Finite,
            num_bigint::Sign::NoSign => CartanType::Affine,
            num_bigint::Sign::Minus => CartanType::Hyperbolic,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CartanType::Finite => "Finite",
            CartanType::Affine => "Affine",
            CartanType::Hyperbolic => "Hyperbolic",
        })
    }
}

/// Which body of results applies to a matrix.
///
/// `Standing` is `b >= 2`, or `b = 1` with `a >= 5`; `(4, 1)` is the twisted
/// affine case handled through the `epsilon`/`delta` model; the remaining
/// `b = 1, a <= 3` matrices are of finite type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    Finite,
    TwistedAffine,
    Standing,
}

/// A rank-2 generalized Cartan matrix `(2 -a; -b 2)` normalized to `a >= b >= 1`.
///
/// Equality, ordering and hashing look only at `(a, b)`; whether the caller
/// handed the entries over in the opposite orientation is kept as metadata.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(try_from = "GcmRepr", into = "GcmRepr")]
pub struct Gcm2 {
    a: u64,
    b: u64,
    swapped: bool,
}

#[derive(Serialize, Deserialize)]
struct GcmRepr {
    a: u64,
    b: u64,
}

impl TryFrom<GcmRepr> for Gcm2 {
    type Error = Error;

    fn try_from(r: GcmRepr) -> Result<Self> {
        let a = i64::try_from(r.a)
            .map_err(|_| Error::InvalidArgument(format!("a={} too large", r.a)))?;
        let b = i64::try_from(r.b)
            .map_err(|_| Error::InvalidArgument(format!("b={} too large", r.b)))?;
        Gcm2::new(a, b)
    }
}

impl From<Gcm2> for GcmRepr {
    fn from(g: Gcm2) -> Self {
        GcmRepr { a: g.a, b: g.b }
    }
}

impl Gcm2 {
    /// Builds the matrix with off-diagonal entries `-a` at (1,2) and `-b` at (2,1).
    ///
    /// Inputs with `a < b` are swapped into the `a >= b` orientation; the swap
    /// is observable through [`Gcm2::was_swapped`].
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a < 1 || b < 1 {
            return Err(Error::InvalidGcm { a, b });
        }
        let (a, b) = (a as u64, b as u64);
        Ok(if a >= b {
            Gcm2 {
                a,
                b,
                swapped: false,
            }
        } else {
            Gcm2 {
                a: b,
                b: a,
                swapped: true,
            }
        })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn ab(&self) -> u64 {
        self.a * self.b
    }

    pub fn was_swapped(&self) -> bool {
        self.swapped
    }

    pub fn determinant(&self) -> i128 {
        4 - i128::from(self.a) * i128::from(self.b)
    }

    pub fn cartan_type(&self) -> CartanType {
        CartanType::from_determinant(&BigInt::from(self.determinant()))
    }

    pub fn is_finite(&self) -> bool {
        self.ab() < 4
    }

    pub fn regime(&self) -> Regime {
        match (self.a, self.b) {
            (a, 1) if a <= 3 => Regime::Finite,
            (4, 1) => Regime::TwistedAffine,
            _ => Regime::Standing,
        }
    }

    pub(crate) fn a_big(&self) -> BigInt {
        BigInt::from(self.a)
    }

    pub(crate) fn b_big(&self) -> BigInt {
        BigInt::from(self.b)
    }
}

impl PartialEq for Gcm2 {
    fn eq(&self, other: &Self) -> bool {
        (self.a, self.b) == (other.a, other.b)
    }
}

impl Eq for Gcm2 {}

impl Hash for Gcm2 {
    fn hash<H: Hasher>(&self, state: &mut H) {
        (self.a, self.b).hash(state);
    }
}

impl PartialOrd for Gcm2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Gcm2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.a, self.b).cmp(&(other.a, other.b))
    }
}

impl fmt::Display for Gcm2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={}, b={})", self.a, self.b)
    }
}
