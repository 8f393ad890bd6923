//! Extended pi-systems containing imaginary roots for `A_a = (2 -a; -3 2)`.

use serde::{Deserialize, Serialize};

use super::report::{Counterexample, Witnesses};
use crate::error::{Error, Result};
use crate::pi_systems::{is_pi_system, Mode, PiSystem, PiVerdict};
use crate::root_core::{classify_root, Gcm2, RootVec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorcherdsSystems {
    pub a: u64,
    /// `(2k+1)α₁ + α₂` for `1 <= k <= ⌊(a-2)/2⌋`.
    pub sigma1: PiSystem,
    /// `α₂`, `aα₁ + α₂` and `2iα₁ + α₂` for `1 <= i <= ⌊a/2⌋ - 1`.
    pub sigma2: PiSystem,
}

impl BorcherdsSystems {
    pub fn new(a: u64) -> Result<Self> {
        if a < 3 {
            return Err(Error::InvalidArgument(format!(
                "A_a needs a >= 3 to keep the (2 -a; -3 2) orientation, got {a}"
            )));
        }
        let sigma1 = (1..=(a - 2) / 2)
            .map(|k| RootVec::new(2 * k + 1, 1))
            .collect();
        let mut sigma2 = vec![RootVec::new(0, 1), RootVec::new(a, 1)];
        sigma2.extend((1..a / 2).map(|i| RootVec::new(2 * i, 1)));
        Ok(BorcherdsSystems {
            a,
            sigma1: PiSystem::from_vectors(sigma1, Mode::Extended)?,
            sigma2: PiSystem::from_vectors(sigma2, Mode::Extended)?,
        })
    }

    pub fn gcm(&self) -> Gcm2 {
        Gcm2::new(self.a as i64, 3).expect("a >= 3 checked on construction")
    }

    /// The two real members of `sigma2`.
    pub fn real_members(&self) -> [RootVec; 2] {
        [RootVec::new(0, 1), RootVec::new(self.a, 1)]
    }
}

pub(crate) fn borcherds_sigma(g: &Gcm2) -> Result<Vec<Counterexample>> {
    let sys = BorcherdsSystems::new(g.a())?;
    let mut w = Witnesses::default();
    for (name, s) in [("sigma1", &sys.sigma1), ("sigma2", &sys.sigma2)] {
        match is_pi_system(g, s) {
            Ok(PiVerdict::PiSystem) => {}
            Ok(PiVerdict::Violation {
                first,
                second,
                difference,
            }) => w.push(
                Counterexample::new("sigma is an extended pi-system")
                    .value("system", name)
                    .vector("first", &first.vec)
                    .vector("second", &second.vec)
                    .value("difference_class", difference),
            ),
            Err(Error::ContractViolation { element, .. }) => w.push(
                Counterexample::new("every member of sigma is a positive root")
                    .value("system", name)
                    .vector("element", &element),
            ),
            Err(e) => return Err(e),
        }
    }
    let reals = sys.real_members();
    for v in sys.sigma1.vectors().chain(sys.sigma2.vectors()) {
        let class = classify_root(g, v);
        let expect_real = reals.contains(v);
        let ok = if expect_real {
            class.is_real()
        } else {
            class.is_imaginary() && class.is_positive_root()
        };
        w.require(ok, || {
            Counterexample::new(if expect_real {
                "alpha2 and alpha2 + a*alpha1 are real"
            } else {
                "the other members are positive imaginary roots"
            })
            .vector("v", v)
            .value("class", class)
        });
    }
    let expected = g.a() / 2 + 1;
    w.require(sys.sigma2.len() as u64 == expected, || {
        Counterexample::new("|sigma2| = floor(a/2) + 1")
            .value("size", sys.sigma2.len())
            .value("expected", expected)
    });
    Ok(w.into_inner())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let s = BorcherdsSystems::new(6).unwrap();
        let v1: Vec<_> = s.sigma1.vectors().cloned().collect();
        assert_eq!(v1, vec![RootVec::new(3, 1), RootVec::new(5, 1)]);
        assert_eq!(s.sigma2.len(), 4);
        assert_eq!(BorcherdsSystems::new(3).unwrap().sigma1.len(), 0);
        assert!(BorcherdsSystems::new(2).is_err());
    }

    #[test]
    fn holds_for_small_a() {
        for a in 3..=10 {
            let g = Gcm2::new(a, 3).unwrap();
            assert!(borcherds_sigma(&g).unwrap().is_empty(), "a = {a}");
        }
    }
}
