//! Closed-form answers to "is this pair of real roots a pi-system?".

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pi_systems::{Provenance, Sign};
use crate::root_core::{Family, Gcm2, Regime};

pub(crate) fn require_standing(g: &Gcm2, op: &'static str) -> Result<()> {
    match g.regime() {
        Regime::Standing => Ok(()),
        Regime::Finite => Err(Error::FiniteType { op, gcm: *g }),
        Regime::TwistedAffine => Err(Error::Unsupported {
            op,
            gcm: *g,
            reason: "the (4,1) matrix has its own pair rules, see thm41_predicate",
        }),
    }
}

/// Whether `{β₁^j, β₂^k}` is a pi-system.
///
/// For `b >= 2` every cross pair is; for `b = 1, a >= 5` only `(j, k) = (1, 0)`
/// fails, since `β₁¹ - β₂⁰ = α₂`.
pub fn thmab_pair_predicate(g: &Gcm2, j: usize, k: usize) -> Result<bool> {
    require_standing(g, "thmab_pair_predicate")?;
    Ok(g.b() >= 2 || (j, k) != (1, 0))
}

/// Whether `{β_i^j, -β_i^k}` is a pi-system.
///
/// For `b = 1, a >= 5` the exceptions are `{j, k} = {s, s + 2}` with `s` odd
/// in family 1 and `s` even in family 2, where `β_i^s + β_i^{s+2}` is real.
pub fn nthmab_pair_predicate(g: &Gcm2, family: Family, j: usize, k: usize) -> Result<bool> {
    require_standing(g, "nthmab_pair_predicate")?;
    if g.b() >= 2 || j.abs_diff(k) != 2 {
        return Ok(true);
    }
    let s = j.min(k);
    let bad_parity = match family {
        Family::I => 1,
        Family::II => 0,
    };
    Ok(s % 2 != bad_parity)
}

/// The two pair shapes covered by the `(4,1)` rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Thm41Query {
    /// `{β₁^j, β₂^k}`.
    PositivePair { j: usize, k: usize },
    /// `{β_i^j, -β_i^k}`.
    MixedPair { family: Family, j: usize, k: usize },
}

/// Pi-system rules for `A = (2 -4; -1 2)`.
pub fn thm41_predicate(query: Thm41Query) -> bool {
    match query {
        Thm41Query::PositivePair { j, k } => j % 2 == 0 || k % 4 != (j + 3) % 4,
        Thm41Query::MixedPair { family, j, k } => {
            let i = family.number() as usize;
            j % 2 != i % 2 || k % 2 != i % 2 || j % 4 == k % 4
        }
    }
}

/// Whether two labeled real roots form a pi-system, for any non-finite `g`.
///
/// Covers every sign pattern: a same-family, same-sign pair always differs by
/// a root, a cross-family pair of opposite signs differs by `β₁^j + β₂^k`,
/// which is always a root. Equal labels are not a pair and give an error.
pub fn pair_predicate(g: &Gcm2, p: Provenance, q: Provenance) -> Result<bool> {
    if p == q {
        return Err(Error::InvalidArgument(format!(
            "pair predicate needs two distinct roots, got {p} twice"
        )));
    }
    let twisted = match g.regime() {
        Regime::Finite => {
            return Err(Error::FiniteType {
                op: "pair_predicate",
                gcm: *g,
            })
        }
        Regime::TwistedAffine => true,
        Regime::Standing => false,
    };
    let same_family = p.index.family == q.index.family;
    let same_sign = p.sign == q.sign;
    match (same_family, same_sign) {
        (true, true) => Ok(false),
        (false, false) => Ok(false),
        (true, false) => {
            let (pos, neg) = if p.sign == Sign::Plus { (p, q) } else { (q, p) };
            let (family, j, k) = (p.index.family, pos.index.j, neg.index.j);
            if twisted {
                Ok(thm41_predicate(Thm41Query::MixedPair { family, j, k }))
            } else {
                nthmab_pair_predicate(g, family, j, k)
            }
        }
        (false, true) => {
            let (one, two) = if p.index.family == Family::I {
                (p, q)
            } else {
                (q, p)
            };
            let (j, k) = (one.index.j, two.index.j);
            if twisted {
                Ok(thm41_predicate(Thm41Query::PositivePair { j, k }))
            } else {
                thmab_pair_predicate(g, j, k)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_core::BetaIndex;

    fn g(a: i64, b: i64) -> Gcm2 {
        Gcm2::new(a, b).unwrap()
    }

    #[test]
    fn cross_pairs() {
        assert!(thmab_pair_predicate(&g(2, 2), 3, 7).unwrap());
        assert!(!thmab_pair_predicate(&g(5, 1), 1, 0).unwrap());
        assert!(thmab_pair_predicate(&g(5, 1), 0, 1).unwrap());
        assert!(thmab_pair_predicate(&g(4, 1), 0, 0).is_err());
        assert!(thmab_pair_predicate(&g(3, 1), 0, 0).is_err());
    }

    #[test]
    fn mixed_pairs() {
        assert!(nthmab_pair_predicate(&g(3, 2), Family::I, 4, 4).unwrap());
        assert!(!nthmab_pair_predicate(&g(5, 1), Family::II, 0, 2).unwrap());
        assert!(nthmab_pair_predicate(&g(5, 1), Family::I, 0, 2).unwrap());
        assert!(!nthmab_pair_predicate(&g(5, 1), Family::I, 3, 1).unwrap());
        assert!(nthmab_pair_predicate(&g(5, 1), Family::II, 3, 1).unwrap());
        assert!(nthmab_pair_predicate(&g(5, 1), Family::II, 0, 4).unwrap());
    }

    #[test]
    fn twisted_affine_pairs() {
        assert!(thm41_predicate(Thm41Query::PositivePair { j: 0, k: 0 }));
        assert!(!thm41_predicate(Thm41Query::PositivePair { j: 1, k: 0 }));
        assert!(thm41_predicate(Thm41Query::PositivePair { j: 1, k: 1 }));
        assert!(!thm41_predicate(Thm41Query::MixedPair {
            family: Family::II,
            j: 0,
            k: 2
        }));
        assert!(thm41_predicate(Thm41Query::MixedPair {
            family: Family::II,
            j: 0,
            k: 4
        }));
        assert!(thm41_predicate(Thm41Query::MixedPair {
            family: Family::I,
            j: 0,
            k: 2
        }));
    }

    #[test]
    fn dispatch_by_shape() {
        let p = |f, j, s| Provenance::new(BetaIndex::new(f, j), s);
        let gcm = g(5, 1);
        use Family::*;
        use Sign::*;
        assert!(!pair_predicate(&gcm, p(I, 0, Plus), p(I, 3, Plus)).unwrap());
        assert!(!pair_predicate(&gcm, p(I, 0, Plus), p(II, 3, Minus)).unwrap());
        assert!(!pair_predicate(&gcm, p(II, 0, Minus), p(I, 1, Minus)).unwrap());
        assert!(pair_predicate(&gcm, p(II, 1, Minus), p(I, 0, Minus)).unwrap());
        assert!(!pair_predicate(&gcm, p(II, 2, Minus), p(II, 0, Plus)).unwrap());
        assert!(pair_predicate(&gcm, p(II, 2, Minus), p(II, 2, Plus)).unwrap());
        assert!(pair_predicate(&gcm, p(I, 2, Plus), p(I, 2, Plus)).is_err());
        assert!(!pair_predicate(&g(4, 1), p(I, 1, Plus), p(II, 0, Plus)).unwrap());
    }
}
