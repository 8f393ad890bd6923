use std::collections::BTreeSet;

use super::gcm::Gcm2;
use super::lattice::{simple_reflection, RootVec, Simple};
use crate::error::{Error, Result};

/// Closes `{±α₁, ±α₂}` under the simple reflections.
pub(crate) fn finite_root_set(g: &Gcm2) -> BTreeSet<RootVec> {
    debug_assert!(g.is_finite());
    let mut roots: BTreeSet<RootVec> = [
        RootVec::alpha1(),
        RootVec::alpha2(),
        -RootVec::alpha1(),
        -RootVec::alpha2(),
    ]
    .into_iter()
    .collect();
    let mut frontier: Vec<RootVec> = roots.iter().cloned().collect();
    while let Some(v) = frontier.pop() {
        for s in [Simple::S1, Simple::S2] {
            let w = simple_reflection(g, s, &v);
            if roots.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    roots
}

/// The full root system of a finite-type matrix: positive roots by height,
/// then their negatives in the same order.
pub fn enumerate_finite_roots(g: &Gcm2) -> Result<Vec<RootVec>> {
    if !g.is_finite() {
        return Err(Error::NotFiniteType {
            op: "enumerate_finite_roots",
            gcm: *g,
        });
    }
    let mut positive: Vec<RootVec> = finite_root_set(g)
        .into_iter()
        .filter(RootVec::is_positive)
        .collect();
    positive.sort_by_key(|v| (&v.x + &v.y, v.x.clone()));
    let negative: Vec<RootVec> = positive.iter().map(|v| -v).collect();
    Ok(positive.into_iter().chain(negative).collect())
}
