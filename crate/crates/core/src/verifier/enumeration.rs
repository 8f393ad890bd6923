//! Exhaustive pi-system searches compared with the stated classifications.

use std::collections::HashSet;

use super::report::{Counterexample, Witnesses};
use crate::error::Result;
use crate::pi_systems::{
    enumerate_pi_systems, enumerate_real_roots, is_linearly_independent, Mode, PiSystem,
    Provenance, SignedRoot,
};
use crate::root_core::{classify_root, enumerate_finite_roots, Family, Gcm2};

fn label(r: &SignedRoot) -> Provenance {
    r.provenance.expect("window roots carry their beta label")
}

/// Stated answer for a pair of labeled real roots in the non-finite,
/// non-(4,1) case.
fn claimed_pair(g: &Gcm2, p: Provenance, q: Provenance) -> bool {
    let b_one = g.b() == 1;
    if p.sign != q.sign {
        if p.index.family != q.index.family {
            return false;
        }
        let (j, k) = (p.index.j, q.index.j);
        if !b_one || j.abs_diff(k) != 2 {
            return true;
        }
        let s = j.min(k);
        return match p.index.family {
            Family::I => s % 2 == 0,
            Family::II => s % 2 == 1,
        };
    }
    if p.index.family == q.index.family {
        return false;
    }
    let (one, two) = if p.index.family == Family::I {
        (p, q)
    } else {
        (q, p)
    };
    !(b_one && (one.index.j, two.index.j) == (1, 0))
}

fn exhaustive(g: &Gcm2, bound: usize, negatives: bool) -> Result<Vec<Counterexample>> {
    let mut w = Witnesses::default();
    let window = enumerate_real_roots(g, bound, negatives)?;
    let systems = enumerate_pi_systems(g, bound, 3, negatives, Mode::Standard)?;

    let mut pairs = HashSet::new();
    for s in &systems {
        match s.len() {
            1 => {}
            2 => {
                let (p, q) = (label(&s.elements()[0]), label(&s.elements()[1]));
                pairs.insert((p, q));
                pairs.insert((q, p));
            }
            n => w.push(
                Counterexample::new("every pi-system in the window has at most two elements")
                    .value("system", s.literal())
                    .value("size", n),
            ),
        }
    }
    w.require(
        systems.iter().filter(|s| s.len() == 1).count() == window.len(),
        || Counterexample::new("every single real root is a pi-system"),
    );

    for (i, p) in window.iter().enumerate() {
        for q in &window[i + 1..] {
            let (lp, lq) = (label(p), label(q));
            let found = pairs.contains(&(lp, lq));
            let claim = claimed_pair(g, lp, lq);
            w.require(found == claim, || {
                Counterexample::new(if lp.sign == lq.sign {
                    "{beta1^j, beta2^k} is a pi-system except (j,k) = (1,0) when b = 1; same-family pairs never are"
                } else {
                    "{beta_i^j, -beta_i^k} is a pi-system except {s, s+2} with the stated parity when b = 1; mixed cross-family pairs never are"
                })
                .value("first", lp)
                .value("second", lq)
                .value("brute_force", found)
                .value("claimed", claim)
            });
        }
    }
    Ok(w.into_inner())
}

pub(crate) fn thmab_exhaustive(g: &Gcm2, bound: usize) -> Result<Vec<Counterexample>> {
    exhaustive(g, bound, false)
}

pub(crate) fn nthmab_exhaustive(g: &Gcm2, bound: usize) -> Result<Vec<Counterexample>> {
    exhaustive(g, bound, true)
}

/// Every subset of the positive roots that is a pi-system is linearly
/// independent; subsets are taken from the full power set.
pub(crate) fn finpisystem_finite(g: &Gcm2) -> Result<Vec<Counterexample>> {
    let mut w = Witnesses::default();
    let positives: Vec<_> = enumerate_finite_roots(g)?
        .into_iter()
        .filter(|v| v.is_positive())
        .collect();
    let n = positives.len();
    for mask in 1u32..(1 << n) {
        let members: Vec<_> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| &positives[i])
            .collect();
        let pi = members.iter().enumerate().all(|(i, u)| {
            members[i + 1..]
                .iter()
                .all(|v| !classify_root(g, &(*u - *v)).is_root())
        });
        if !pi {
            continue;
        }
        let s = PiSystem::new(
            members
                .iter()
                .map(|v| SignedRoot::unlabeled((*v).clone()))
                .collect(),
            Mode::Extended,
        )?;
        w.require(is_linearly_independent(&s), || {
            Counterexample::new(
                "pi-systems of positive roots in finite type are linearly independent",
            )
            .value("system", s.literal())
        });
    }
    Ok(w.into_inner())
}
