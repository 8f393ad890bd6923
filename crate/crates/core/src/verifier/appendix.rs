//! The twisted affine matrix `(2 -4; -1 2)` in `ε`/`δ` coordinates:
//! `α₁ = ε`, `α₂ = -2ε + δ`, with `δ` the null root.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::report::{Counterexample, Witnesses};
use crate::error::Result;
use crate::pi_systems::{compute_gcm_of_system, is_pi_system, PiSystem, SignedRoot};
use crate::root_core::{
    classify_root, norm_scaled, BetaIndex, BetaTable, Family, Gcm2, RootClass, RootVec,
};

/// `e·ε + d·δ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EpsDeltaVec {
    #[serde(with = "crate::serde_int::scalar")]
    pub e: BigInt,
    #[serde(with = "crate::serde_int::scalar")]
    pub d: BigInt,
}

impl EpsDeltaVec {
    pub fn new(e: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        EpsDeltaVec {
            e: e.into(),
            d: d.into(),
        }
    }

    /// Real roots are `±ε + rδ` and `±2ε + (2r+1)δ`.
    pub fn is_real_root(&self) -> bool {
        let e = self.e.abs();
        e.is_one() || (e == BigInt::from(2) && self.d.is_odd())
    }

    /// Imaginary roots are the nonzero multiples of `δ`.
    pub fn is_imaginary_root(&self) -> bool {
        self.e.is_zero() && !self.d.is_zero()
    }

    /// Norm in the scaling of [`crate::root_core::bilinear_scaled`], where
    /// `(ε, ε)` counts as 2.
    pub fn norm_scaled(&self) -> BigInt {
        BigInt::from(2) * &self.e * &self.e
    }
}

impl std::fmt::Display for EpsDeltaVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}ε + {}δ", self.e, self.d)
    }
}

/// `x·α₁ + y·α₂ = (x - 2y)·ε + y·δ`.
pub fn to_eps_delta(v: &RootVec) -> EpsDeltaVec {
    EpsDeltaVec {
        e: &v.x - BigInt::from(2) * &v.y,
        d: v.y.clone(),
    }
}

pub fn from_eps_delta(w: &EpsDeltaVec) -> RootVec {
    RootVec {
        x: &w.e + BigInt::from(2) * &w.d,
        y: w.d.clone(),
    }
}

/// `β` in `ε`/`δ` form: `β₁^{2k} = -2ε + (2k+1)δ`, `β₁^{2k+1} = -ε + (k+1)δ`,
/// `β₂^{2k} = ε + kδ`, `β₂^{2k+1} = 2ε + (2k+1)δ`.
pub fn beta_eps_delta(idx: BetaIndex) -> EpsDeltaVec {
    let k = (idx.j / 2) as u64;
    match (idx.family, idx.j % 2) {
        (Family::I, 0) => EpsDeltaVec::new(-2, 2 * k + 1),
        (Family::I, _) => EpsDeltaVec::new(-1, k + 1),
        (Family::II, 0) => EpsDeltaVec::new(1, k),
        (Family::II, _) => EpsDeltaVec::new(2, 2 * k + 1),
    }
}

pub(crate) fn twisted() -> Gcm2 {
    Gcm2::new(4, 1).expect("(4,1) is a valid Cartan matrix")
}

pub(crate) fn appendix_roots(bound: usize) -> Result<Vec<Counterexample>> {
    let g = twisted();
    let mut w = Witnesses::default();
    let table = BetaTable::new(&g, 4 * bound + 4)?;
    for family in [Family::I, Family::II] {
        for j in 0..=bound {
            let idx = BetaIndex::new(family, j);
            let v = table.get(idx);
            let closed = beta_eps_delta(idx);
            w.require(
                to_eps_delta(v) == closed && from_eps_delta(&closed) == *v,
                || {
                    Counterexample::new("beta in eps/delta coordinates matches its closed form")
                        .index("family", family.number() as usize)
                        .index("j", j)
                        .vector("beta", v)
                        .value("closed_form", &closed)
                        .value("converted", to_eps_delta(v))
                },
            );
        }
    }

    let m = bound as i64;
    for x in -m..=m {
        for y in -m..=m {
            let v = RootVec::new(x, y);
            let ed = to_eps_delta(&v);
            let class = classify_root(&g, &v);
            let claim_real = ed.is_real_root();
            let claim_imag = ed.is_imaginary_root();
            w.require(
                class.is_real() == claim_real && class.is_imaginary() == claim_imag,
                || {
                    Counterexample::new(
                        "real roots are ±ε+rδ and ±2ε+(2r+1)δ, imaginary roots are rδ",
                    )
                    .vector("v", &v)
                    .value("eps_delta", &ed)
                    .value("class", class)
                },
            );
            w.require(norm_scaled(&g, &v) == ed.norm_scaled(), || {
                Counterexample::new("lattice norm equals the eps/delta norm")
                    .vector("v", &v)
                    .int("norm", &norm_scaled(&g, &v))
                    .int("eps_delta_norm", &ed.norm_scaled())
            });
            if from_eps_delta(&ed) != v {
                w.push(Counterexample::new("eps/delta conversion is invertible").vector("v", &v));
            }
            if class == RootClass::RealPositive {
                w.require(table.index_of(&v).is_some(), || {
                    Counterexample::new("every positive real root is some beta").vector("v", &v)
                });
            }
        }
    }
    Ok(w.into_inner())
}

fn positive_claim(j: usize, k: usize) -> bool {
    j.is_multiple_of(2) || k % 4 != (j + 3) % 4
}

fn mixed_claim(i: usize, j: usize, k: usize) -> bool {
    j % 2 != i % 2 || k % 2 != i % 2 || j % 4 == k % 4
}

pub(crate) fn appendix_thm41(bound: usize) -> Result<Vec<Counterexample>> {
    let g = twisted();
    let mut w = Witnesses::default();
    let table = BetaTable::new(&g, bound)?;
    let plus = |idx: BetaIndex| SignedRoot::from_table(&table, idx, crate::pi_systems::Sign::Plus);
    let minus =
        |idx: BetaIndex| SignedRoot::from_table(&table, idx, crate::pi_systems::Sign::Minus);

    for j in 0..=bound {
        for k in 0..=bound {
            let s = PiSystem::standard(vec![plus(BetaIndex::one(j)), plus(BetaIndex::two(k))])?;
            let found = is_pi_system(&g, &s)?.holds();
            w.require(found == positive_claim(j, k), || {
                Counterexample::new(
                    "{beta1^j, beta2^k} is a pi-system iff j even or k != j+3 mod 4",
                )
                .index("j", j)
                .index("k", k)
                .value("brute_force", found)
            });
            for family in [Family::I, Family::II] {
                let i = family.number() as usize;
                let s = PiSystem::standard(vec![
                    plus(BetaIndex::new(family, j)),
                    minus(BetaIndex::new(family, k)),
                ])?;
                let found = is_pi_system(&g, &s)?.holds();
                w.require(found == mixed_claim(i, j, k), || {
                    Counterexample::new(
                        "{beta_i^j, -beta_i^k} is a pi-system iff j != i or k != i mod 2, or j = k mod 4",
                    )
                    .index("family", i)
                    .index("j", j)
                    .index("k", k)
                    .value("brute_force", found)
                });
            }
        }
    }

    // every two-element pi-system in the signed window has an affine derived matrix
    let mut window = Vec::new();
    for family in [Family::I, Family::II] {
        for j in 0..=bound {
            window.push(plus(BetaIndex::new(family, j)));
            window.push(minus(BetaIndex::new(family, j)));
        }
    }
    for p in 0..window.len() {
        for q in (p + 1)..window.len() {
            let s = PiSystem::standard(vec![window[p].clone(), window[q].clone()])?;
            if !is_pi_system(&g, &s)?.holds() {
                continue;
            }
            let m = compute_gcm_of_system(&g, &s)?;
            let det = m.determinant();
            w.require(det.is_zero(), || {
                Counterexample::new("derived matrices of (4,1) pi-systems have determinant 0")
                    .value("system", s.literal())
                    .int("determinant", &det)
            });
        }
    }
    Ok(w.into_inner())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversions() {
        assert_eq!(to_eps_delta(&RootVec::alpha2()), EpsDeltaVec::new(-2, 1));
        assert_eq!(from_eps_delta(&EpsDeltaVec::new(1, 0)), RootVec::alpha1());
        let g = twisted();
        let b13 = crate::root_core::beta(&g, BetaIndex::one(3)).unwrap();
        assert_eq!(to_eps_delta(&b13), EpsDeltaVec::new(-1, 2));
        let b26 = crate::root_core::beta(&g, BetaIndex::two(6)).unwrap();
        assert_eq!(to_eps_delta(&b26), EpsDeltaVec::new(1, 3));
    }

    #[test]
    fn checks_pass_at_small_bounds() {
        assert!(appendix_roots(12).unwrap().is_empty());
        assert!(appendix_thm41(12).unwrap().is_empty());
    }
}
