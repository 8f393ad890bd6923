//! The pairing sequences `η`, `ξ`, `ζ`, `γ` and the off-diagonal pairs
//! `(x_n, y_n)` of derived matrices.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::predicates::require_standing;
use crate::error::{Error, Result};
use crate::root_core::{coroot_pairing, BetaTable, Gcm2};

/// First `len` terms of `u_n = m·u_{n-1} - u_{n-2}`.
pub fn linear_recurrence(m: &BigInt, u0: BigInt, u1: BigInt, len: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len.max(2));
    out.push(u0);
    out.push(u1);
    while out.len() < len {
        let n = out.len();
        let next = m * &out[n - 1] - &out[n - 2];
        out.push(next);
    }
    out.truncate(len);
    out
}

fn recurrence_step(g: &Gcm2) -> BigInt {
    BigInt::from(g.ab()) - 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EtaOrdering {
    /// `a = b = 2`.
    Constant,
    /// `η₁ < η₀ < η₃ < η₂ < …`, for `b = 1, a >= 5`.
    Interleaved,
    StrictlyIncreasing,
}

impl EtaOrdering {
    pub fn expected(g: &Gcm2) -> EtaOrdering {
        if g.a() == 2 && g.b() == 2 {
            EtaOrdering::Constant
        } else if g.b() == 1 {
            EtaOrdering::Interleaved
        } else {
            EtaOrdering::StrictlyIncreasing
        }
    }

    /// Whether `eta` is ordered this way.
    pub fn holds_for(self, eta: &[BigInt]) -> bool {
        match self {
            EtaOrdering::Constant => eta.windows(2).all(|w| w[0] == w[1]),
            EtaOrdering::StrictlyIncreasing => eta.windows(2).all(|w| w[0] < w[1]),
            EtaOrdering::Interleaved => {
                // reorder as η₁, η₀, η₃, η₂, … and require strict increase
                let mut seq = Vec::with_capacity(eta.len());
                for pair in eta.chunks(2) {
                    if pair.len() == 2 {
                        seq.push(&pair[1]);
                    }
                    seq.push(&pair[0]);
                }
                seq.windows(2).all(|w| w[0] < w[1])
            }
        }
    }
}

/// `η_j = -⟨β₁^j, (β₂⁰)^∨⟩`, `ξ_j = η_{2j}`, `ζ_j = η_{2j+1}` and
/// `γ_j = -⟨β₂^{2j}, (β₁⁰)^∨⟩`, for `j <= n` (so `η` has `2n + 2` terms).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaSequences {
    #[serde(with = "crate::serde_int::list")]
    pub eta: Vec<BigInt>,
    #[serde(with = "crate::serde_int::list")]
    pub xi: Vec<BigInt>,
    #[serde(with = "crate::serde_int::list")]
    pub zeta: Vec<BigInt>,
    #[serde(with = "crate::serde_int::list")]
    pub gamma: Vec<BigInt>,
    pub ordering: EtaOrdering,
}

/// `ξ` from its recurrence, `ξ₀ = a`, `ξ₁ = a(ab - 3)`.
pub fn xi_recurrence(g: &Gcm2, n: usize) -> Vec<BigInt> {
    let a = BigInt::from(g.a());
    let ab = BigInt::from(g.ab());
    linear_recurrence(&recurrence_step(g), a.clone(), &a * (ab - 3), n + 1)
}

/// `ζ` from its recurrence, `ζ₀ = ab - 2`, `ζ₁ = ζ₀² - 2`.
pub fn zeta_recurrence(g: &Gcm2, n: usize) -> Vec<BigInt> {
    let z0 = recurrence_step(g);
    let z1 = &z0 * &z0 - 2;
    linear_recurrence(&z0, z0.clone(), z1, n + 1)
}

/// Computes the sequences from pairings and from the recurrences and fails
/// with [`Error::Inconsistent`] if the two disagree or the predicted ordering
/// does not hold.
pub fn eta_sequences(g: &Gcm2, n: usize) -> Result<EtaSequences> {
    require_standing(g, "eta_sequences")?;
    let table = BetaTable::new(g, 2 * n + 1)?;
    let eta = (0..=2 * n + 1)
        .map(|j| coroot_pairing(g, table.one(j), table.two(0)).map(|v| -v))
        .collect::<Result<Vec<_>>>()?;
    let gamma = (0..=n)
        .map(|j| coroot_pairing(g, table.two(2 * j), table.one(0)).map(|v| -v))
        .collect::<Result<Vec<_>>>()?;
    let xi: Vec<BigInt> = eta.iter().step_by(2).cloned().collect();
    let zeta: Vec<BigInt> = eta.iter().skip(1).step_by(2).cloned().collect();

    if xi != xi_recurrence(g, n) {
        return Err(Error::Inconsistent(format!(
            "xi from pairings disagrees with its recurrence for {g}"
        )));
    }
    if zeta != zeta_recurrence(g, n) {
        return Err(Error::Inconsistent(format!(
            "zeta from pairings disagrees with its recurrence for {g}"
        )));
    }
    let (a, b) = (BigInt::from(g.a()), BigInt::from(g.b()));
    if let Some(j) = (0..=n).find(|&j| &a * &gamma[j] != &b * &xi[j]) {
        return Err(Error::Inconsistent(format!(
            "a*gamma_{j} != b*xi_{j} for {g}"
        )));
    }
    let ordering = EtaOrdering::expected(g);
    if !ordering.holds_for(&eta) {
        return Err(Error::Inconsistent(format!(
            "eta is not {ordering:?} for {g}"
        )));
    }
    Ok(EtaSequences {
        eta,
        xi,
        zeta,
        gamma,
        ordering,
    })
}

/// `x_n`, `y_n` for `n <= bound`: `x₀ = b`, `x₁ = b(ab - 3)`, `y₀ = a`,
/// `y₁ = a(ab - 3)`, both with step `ab - 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConverseSolutions {
    #[serde(with = "crate::serde_int::list")]
    pub x: Vec<BigInt>,
    #[serde(with = "crate::serde_int::list")]
    pub y: Vec<BigInt>,
}

/// Where a matrix `(2 -c₁; -c₂ 2)` sits among the `(x_n, y_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConverseMatch {
    pub n: usize,
    /// `(c₁, c₂) = (y_n, x_n)`: the matrix is the transpose of the one at `n`.
    pub transposed: bool,
}

pub fn converse_solutions(g: &Gcm2, n: usize) -> Result<ConverseSolutions> {
    require_standing(g, "converse_solutions")?;
    let (a, b, ab) = (
        BigInt::from(g.a()),
        BigInt::from(g.b()),
        BigInt::from(g.ab()),
    );
    let m = recurrence_step(g);
    Ok(ConverseSolutions {
        x: linear_recurrence(&m, b.clone(), &b * (&ab - 3), n + 1),
        y: linear_recurrence(&m, a.clone(), &a * (&ab - 3), n + 1),
    })
}

impl ConverseSolutions {
    /// Matches `(c₁, c₂)` against `(x_n, y_n)`, then against `(y_n, x_n)`.
    ///
    /// In the `β₁`-first order, `Σ_{2n,0}` has off-diagonal pair `(x_n, y_n)`
    /// and `Σ_{2n-1,1}` has the transposed pair.
    pub fn member(&self, c1: &BigInt, c2: &BigInt) -> Option<ConverseMatch> {
        let hit =
            |xs: &[BigInt], ys: &[BigInt]| xs.iter().zip(ys).position(|(x, y)| x == c1 && y == c2);
        hit(&self.x, &self.y)
            .map(|n| ConverseMatch {
                n,
                transposed: false,
            })
            .or_else(|| {
                hit(&self.y, &self.x).map(|n| ConverseMatch {
                    n,
                    transposed: true,
                })
            })
    }

    /// As [`ConverseSolutions::member`] for a full 2×2 matrix; `None` unless
    /// the diagonal is `2`.
    pub fn member_matrix(&self, m: &[Vec<BigInt>]) -> Option<ConverseMatch> {
        let two = BigInt::from(2);
        if m.len() != 2 || m.iter().any(|r| r.len() != 2) || m[0][0] != two || m[1][1] != two {
            return None;
        }
        self.member(&-&m[0][1], &-&m[1][0])
    }
}

/// Index `n` with `ζ_n = s`, if any: `(2 -s; -s 2)` is then the derived matrix
/// of a pi-system `{β₁^j, β₂^k}` with `j ≢ k mod 2`.
pub fn zeta_solution_index(g: &Gcm2, s: &BigInt) -> Result<Option<usize>> {
    require_standing(g, "zeta_solution_index")?;
    let m = recurrence_step(g);
    let mut prev = m.clone();
    if &prev == s {
        return Ok(Some(0));
    }
    let mut cur = &m * &m - 2;
    if cur == prev {
        // constant sequence, a = b = 2
        return Ok(None);
    }
    let mut n = 1;
    while &cur <= s {
        if &cur == s {
            return Ok(Some(n));
        }
        let next = &m * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
        n += 1;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> Gcm2 {
        Gcm2::new(a, b).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn eta_examples() {
        let e = eta_sequences(&g(2, 2), 4).unwrap();
        assert_eq!(e.ordering, EtaOrdering::Constant);
        assert!(e.eta.iter().all(|v| *v == BigInt::from(2)));

        let e = eta_sequences(&g(5, 1), 3).unwrap();
        assert_eq!(e.zeta, ints(&[3, 7, 18, 47]));
        assert_eq!(e.eta[..6], ints(&[5, 3, 10, 7, 25, 18])[..]);
        assert_eq!(e.ordering, EtaOrdering::Interleaved);

        let e = eta_sequences(&g(3, 2), 2).unwrap();
        assert_eq!(e.xi, ints(&[3, 9, 33]));
        assert_eq!(e.gamma, ints(&[2, 6, 22]));
        assert_eq!(e.ordering, EtaOrdering::StrictlyIncreasing);

        assert!(eta_sequences(&g(4, 1), 2).is_err());
    }

    #[test]
    fn interleaved_order_check() {
        assert!(EtaOrdering::Interleaved.holds_for(&ints(&[5, 3, 10, 7, 25])));
        assert!(!EtaOrdering::Interleaved.holds_for(&ints(&[3, 5, 10, 7])));
    }

    #[test]
    fn converse_examples() {
        let c = converse_solutions(&g(3, 2), 3).unwrap();
        assert_eq!(
            (c.x[0].clone(), c.y[0].clone()),
            (BigInt::from(2), BigInt::from(3))
        );
        let m = vec![ints(&[2, -6]), ints(&[-9, 2])];
        assert_eq!(
            c.member_matrix(&m),
            Some(ConverseMatch {
                n: 1,
                transposed: false
            })
        );
        let t = vec![ints(&[2, -9]), ints(&[-6, 2])];
        assert!(c.member_matrix(&t).unwrap().transposed);
        assert_eq!(c.member(&BigInt::from(5), &BigInt::from(5)), None);
    }

    #[test]
    fn zeta_solutions() {
        let two = BigInt::from(2);
        assert_eq!(zeta_solution_index(&g(2, 2), &two).unwrap(), Some(0));
        assert_eq!(
            zeta_solution_index(&g(2, 2), &BigInt::from(3)).unwrap(),
            None
        );
        assert_eq!(
            zeta_solution_index(&g(5, 1), &BigInt::from(47)).unwrap(),
            Some(3)
        );
        assert_eq!(
            zeta_solution_index(&g(5, 1), &BigInt::from(46)).unwrap(),
            None
        );
        assert_eq!(zeta_solution_index(&g(5, 1), &two).unwrap(), None);
    }
}
