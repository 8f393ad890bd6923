//! Isomorphism classes of the subalgebras generated by `Σ_{j,k} = {β₁^j, β₂^k}`.
//!
//! Two rank-2 subalgebras are identified when their derived matrices agree up
//! to relabeling the two generators, i.e. `B` equals `B'` or its transpose.

use num_bigint::BigInt;

use super::predicates::{require_standing, thmab_pair_predicate};
use crate::error::{Error, Result};
use crate::pi_systems::{compute_gcm_of_system, DerivedGcm, PiSystem, Sign, SignedRoot};
use crate::root_core::{BetaIndex, BetaTable, Gcm2};

/// `Σ_{j,k}` with `β₁^j` first.
pub fn sigma(g: &Gcm2, j: usize, k: usize) -> Result<PiSystem> {
    let table = BetaTable::new(g, j.max(k))?;
    PiSystem::standard(vec![
        SignedRoot::from_table(&table, BetaIndex::one(j), Sign::Plus),
        SignedRoot::from_table(&table, BetaIndex::two(k), Sign::Plus),
    ])
}

/// `B_{Σ_{j,k}}` computed from pairings.
pub fn sigma_matrix(g: &Gcm2, j: usize, k: usize) -> Result<DerivedGcm> {
    compute_gcm_of_system(g, &sigma(g, j, k)?)
}

/// Same matrix after possibly swapping the two generators.
pub fn equal_up_to_relabeling(m1: &[Vec<BigInt>], m2: &[Vec<BigInt>]) -> bool {
    if m1 == m2 {
        return true;
    }
    let n = m2.len();
    m1.len() == n && (0..n).all(|i| (0..n).all(|j| m1[i][j] == m2[j][i]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Reduced {
    /// Isomorphic to `Σ_{n,0}` with `n` odd.
    Odd(usize),
    /// Isomorphic to `Σ_{n,0}` with `n` even.
    Even(usize),
    /// No reduction applies (`Σ_{j+k,0}` is not a pi-system).
    Raw(usize, usize),
}

fn reduce(g: &Gcm2, j: usize, k: usize) -> Result<Reduced> {
    let n = j + k;
    if n % 2 == 1 {
        // B_{Σ_{j,k}} depends only on j + k when the parities differ
        if thmab_pair_predicate(g, n, 0)? {
            Ok(Reduced::Odd(n))
        } else {
            Ok(Reduced::Raw(j, k))
        }
    } else {
        // B_{Σ_{j,k}} is B_{Σ_{n,0}} or B_{Σ_{n-1,1}}, and those are transposes
        Ok(Reduced::Even(n))
    }
}

fn require_pi(g: &Gcm2, j: usize, k: usize) -> Result<()> {
    if thmab_pair_predicate(g, j, k)? {
        return Ok(());
    }
    let table = BetaTable::new(g, j.max(k))?;
    Err(Error::NotPiSystem {
        first: Box::new(table.one(j).clone()),
        second: Box::new(table.two(k).clone()),
    })
}

/// Whether `g(Σ_{j,k}) ≅ g(Σ_{l,m})`.
///
/// Each side is reduced to some `Σ_{n,0}`; within one parity class the answer
/// is `r = s` for `ab >= 5` and always yes for `a = b = 2`. Pairs the
/// reduction does not cover are compared by derived matrix.
pub fn iso_class_equal(g: &Gcm2, s1: (usize, usize), s2: (usize, usize)) -> Result<bool> {
    require_standing(g, "iso_class_equal")?;
    require_pi(g, s1.0, s1.1)?;
    require_pi(g, s2.0, s2.1)?;
    let affine = g.ab() == 4;
    match (reduce(g, s1.0, s1.1)?, reduce(g, s2.0, s2.1)?) {
        (Reduced::Odd(r), Reduced::Odd(s)) | (Reduced::Even(r), Reduced::Even(s)) => {
            Ok(affine || r == s)
        }
        _ => {
            let m1 = sigma_matrix(g, s1.0, s1.1)?;
            let m2 = sigma_matrix(g, s2.0, s2.1)?;
            Ok(equal_up_to_relabeling(&m1.entries, &m2.entries))
        }
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
        assert!(iso_class_equal(&g(2, 2), (1, 0), (3, 0)).unwrap());
        assert!(!iso_class_equal(&g(3, 2), (2, 0), (4, 0)).unwrap());
        assert!(iso_class_equal(&g(3, 2), (2, 0), (1, 1)).unwrap());
        assert!(iso_class_equal(&g(3, 2), (0, 3), (2, 1)).unwrap());
        assert!(!iso_class_equal(&g(3, 2), (0, 3), (2, 0)).unwrap());
        assert!(iso_class_equal(&g(2, 2), (1, 0), (0, 0)).unwrap());
    }

    #[test]
    fn b_one_uses_unreduced_matrix() {
        let gcm = g(5, 1);
        assert!(iso_class_equal(&gcm, (0, 1), (0, 1)).unwrap());
        assert!(!iso_class_equal(&gcm, (0, 1), (3, 0)).unwrap());
        assert!(iso_class_equal(&gcm, (0, 3), (2, 1)).unwrap());
        assert!(matches!(
            iso_class_equal(&gcm, (1, 0), (0, 1)),
            Err(Error::NotPiSystem { .. })
        ));
    }
}
