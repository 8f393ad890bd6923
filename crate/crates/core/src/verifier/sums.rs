//! Which sums and differences of two positive real roots are roots.

use num_traits::Signed;

use super::report::{Counterexample, Witnesses};
use crate::error::Result;
use crate::root_core::{classify_root, norm_scaled, BetaTable, Family, Gcm2, RootClass};

pub(crate) fn keyproppos_diffs(g: &Gcm2, bound: usize) -> Result<Vec<Counterexample>> {
    let table = BetaTable::new(g, bound)?;
    let mut w = Witnesses::default();
    let b_one = g.b() == 1;

    for family in [Family::I, Family::II] {
        let beta = table.family(family);
        for j in 0..=bound {
            for k in 0..=bound {
                if j == k {
                    continue;
                }
                let diff = &beta[j] - &beta[k];
                let class = classify_root(g, &diff);
                let ok = if b_one && j.abs_diff(k) == 1 {
                    class.is_real()
                } else {
                    class.is_imaginary()
                };
                w.require(ok, || {
                    Counterexample::new(if b_one && j.abs_diff(k) == 1 {
                        "for b = 1, beta_i^j - beta_i^{j+1} is a real root"
                    } else {
                        "beta_i^j - beta_i^k is an imaginary root"
                    })
                    .index("family", family.number() as usize)
                    .index("j", j)
                    .index("k", k)
                    .vector("difference", &diff)
                    .value("class", class)
                });
            }
        }
    }

    for j in 0..=bound {
        for k in 0..=bound {
            let diff = table.one(j) - table.two(k);
            let class = classify_root(g, &diff);
            let exceptional = b_one && (j, k) == (1, 0);
            let ok = if exceptional {
                class.is_real()
            } else {
                class == RootClass::NotRoot
            };
            w.require(ok, || {
                Counterexample::new(if exceptional {
                    "for b = 1, beta1^1 - beta2^0 is a real root"
                } else {
                    "beta1^j - beta2^k is not a root (except j = 1, k = 0 when b = 1)"
                })
                .index("j", j)
                .index("k", k)
                .vector("difference", &diff)
                .value("class", class)
            });
        }
    }
    Ok(w.into_inner())
}

pub(crate) fn nsumroot_sums(g: &Gcm2, bound: usize) -> Result<Vec<Counterexample>> {
    let table = BetaTable::new(g, bound)?;
    let mut w = Witnesses::default();
    let b_one = g.b() == 1;

    for family in [Family::I, Family::II] {
        let beta = table.family(family);
        // the real same-family sums for b = 1 start at an odd index in family 1
        // and at an even index in family 2
        let real_parity = match family {
            Family::I => 1,
            Family::II => 0,
        };
        for j in 0..=bound {
            for k in j..=bound {
                let sum = &beta[j] + &beta[k];
                let norm = norm_scaled(g, &sum);
                w.require(norm.is_positive(), || {
                    Counterexample::new("beta_i^j + beta_i^k has positive norm")
                        .index("family", family.number() as usize)
                        .index("j", j)
                        .index("k", k)
                        .vector("sum", &sum)
                        .int("norm", &norm)
                });
                let class = classify_root(g, &sum);
                let expect_real = b_one && k == j + 2 && j % 2 == real_parity;
                let ok = if expect_real {
                    class.is_real()
                } else {
                    class == RootClass::NotRoot
                };
                w.require(ok, || {
                    Counterexample::new(if expect_real {
                        "for b = 1, beta1^{2k+1} + beta1^{2k+3} and beta2^{2k} + beta2^{2k+2} are real roots"
                    } else {
                        "no other sum of two same-family betas is a root"
                    })
                    .index("family", family.number() as usize)
                    .index("j", j)
                    .index("k", k)
                    .vector("sum", &sum)
                    .value("class", class)
                });
            }
        }
    }

    for j in 0..=bound {
        for k in 0..=bound {
            let sum = table.one(j) + table.two(k);
            let class = classify_root(g, &sum);
            let exceptional = b_one && (j, k) == (0, 0);
            let ok = if exceptional {
                class.is_real()
            } else {
                class.is_imaginary()
            };
            w.require(ok, || {
                Counterexample::new(if exceptional {
                    "for b = 1, beta1^0 + beta2^0 is a real root"
                } else {
                    "beta1^j + beta2^k is an imaginary root"
                })
                .index("j", j)
                .index("k", k)
                .vector("sum", &sum)
                .value("class", class)
            });
        }
    }
    Ok(w.into_inner())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_pass() {
        for (a, b) in [(2, 2), (3, 2), (5, 1), (6, 1), (4, 3)] {
            let g = Gcm2::new(a, b).unwrap();
            assert!(keyproppos_diffs(&g, 20).unwrap().is_empty(), "({a},{b})");
            assert!(nsumroot_sums(&g, 20).unwrap().is_empty(), "({a},{b})");
        }
    }
}
