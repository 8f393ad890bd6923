//! Pairing identities between the two families and the derived matrices of
//! `Σ_{j,k} = {β₁^j, β₂^k}`.

use num_bigint::BigInt;
use num_traits::Signed;

use super::report::{Counterexample, Witnesses};
use crate::error::Result;
use crate::root_core::{bilinear_scaled, cd_sequences, coroot_pairing, BetaTable, Gcm2};

/// `p12[j][k] = ⟨β₁^j, (β₂^k)^∨⟩`, `p21[k][j] = ⟨β₂^k, (β₁^j)^∨⟩` and
/// `bil[j][k]` the scaled form, for indices `< n`.
struct Pairings {
    p12: Vec<Vec<BigInt>>,
    p21: Vec<Vec<BigInt>>,
    bil: Vec<Vec<BigInt>>,
}

impl Pairings {
    fn new(g: &Gcm2, n: usize) -> Result<Self> {
        let t = BetaTable::new(g, n)?;
        let mut p12 = Vec::with_capacity(n);
        let mut p21 = Vec::with_capacity(n);
        let mut bil = Vec::with_capacity(n);
        for i in 0..n {
            p12.push(
                (0..n)
                    .map(|k| coroot_pairing(g, t.one(i), t.two(k)))
                    .collect::<Result<_>>()?,
            );
            p21.push(
                (0..n)
                    .map(|j| coroot_pairing(g, t.two(i), t.one(j)))
                    .collect::<Result<_>>()?,
            );
            bil.push(
                (0..n)
                    .map(|k| bilinear_scaled(g, t.one(i), t.two(k)))
                    .collect(),
            );
        }
        Ok(Pairings { p12, p21, bil })
    }

    /// `B_{Σ_{j,k}}` in the order `(β₁^j, β₂^k)`, entries `b_rs = ⟨β_s, β_r^∨⟩`.
    fn sigma(&self, j: usize, k: usize) -> [[BigInt; 2]; 2] {
        [
            [BigInt::from(2), self.p21[k][j].clone()],
            [self.p12[j][k].clone(), BigInt::from(2)],
        ]
    }
}

fn transpose(m: &[[BigInt; 2]; 2]) -> [[BigInt; 2]; 2] {
    [
        [m[0][0].clone(), m[1][0].clone()],
        [m[0][1].clone(), m[1][1].clone()],
    ]
}

fn show(m: &[[BigInt; 2]; 2]) -> String {
    format!("[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
}

fn det(m: &[[BigInt; 2]; 2]) -> BigInt {
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
}

/// Same subalgebra up to swapping the generators.
fn isomorphic(m1: &[[BigInt; 2]; 2], m2: &[[BigInt; 2]; 2]) -> bool {
    m1 == m2 || *m1 == transpose(m2)
}

/// `Σ_{j,k}` is a pi-system except `Σ_{1,0}` when `b = 1`.
fn is_pair_pi(g: &Gcm2, j: usize, k: usize) -> bool {
    !(g.b() == 1 && (j, k) == (1, 0))
}

fn non_increasing(v: &[BigInt], strict: bool) -> bool {
    v.windows(2)
        .all(|p| if strict { p[0] > p[1] } else { p[0] >= p[1] })
}

pub(crate) fn gcm_symmetry_relations(g: &Gcm2, bound: usize) -> Result<Vec<Counterexample>> {
    let n = bound + 3;
    let p = Pairings::new(g, n)?;
    let mut w = Witnesses::default();
    let pair = |claim: &str, j: usize, k: usize, l: &BigInt, r: &BigInt| {
        Counterexample::new(claim)
            .index("j", j)
            .index("k", k)
            .int("lhs", l)
            .int("rhs", r)
    };

    for j in 0..=bound {
        for k in 0..=bound {
            if (j + k) % 2 == 1 {
                let (l, r) = (&p.p12[j][k], &p.p21[k][j]);
                w.require(l == r, || {
                    pair(
                        "j != k mod 2: <beta1^j, beta2^k> = <beta2^k, beta1^j>",
                        j,
                        k,
                        l,
                        r,
                    )
                });
                if k >= 1 {
                    let r = &p.p12[j + 1][k - 1];
                    w.require(l == r, || {
                        pair(
                            "j != k mod 2: <beta1^j, beta2^k> depends only on j + k",
                            j,
                            k,
                            l,
                            r,
                        )
                    });
                }
                continue;
            }
            if k >= 1 {
                let (l, r) = (&p.bil[j][k], &p.bil[j + 1][k - 1]);
                w.require(l == r, || {
                    pair(
                        "j = k mod 2: (beta1^j, beta2^k) = (beta1^{j+1}, beta2^{k-1})",
                        j,
                        k,
                        l,
                        r,
                    )
                });
                let (l, r) = (&p.p12[j + 1][k - 1], &p.p21[k][j]);
                w.require(l == r, || {
                    pair(
                        "<beta1^{j+1}, beta2^{k-1}> = <beta2^k, beta1^j>",
                        j,
                        k,
                        l,
                        r,
                    )
                });
            }
            if j >= 1 {
                let (l, r) = (&p.p21[k + 1][j - 1], &p.p12[j][k]);
                w.require(l == r, || {
                    pair(
                        "<beta2^{k+1}, beta1^{j-1}> = <beta1^j, beta2^k>",
                        j,
                        k,
                        l,
                        r,
                    )
                });
            }
            if k >= 2 {
                let (l, r) = (&p.p12[j][k], &p.p12[j + 2][k - 2]);
                w.require(l == r, || {
                    pair(
                        "<beta1^j, beta2^k> = <beta1^{j+2}, beta2^{k-2}>",
                        j,
                        k,
                        l,
                        r,
                    )
                });
            }
            if j >= 2 {
                let (l, r) = (&p.p21[k][j], &p.p21[k + 2][j - 2]);
                w.require(l == r, || {
                    pair(
                        "<beta2^k, beta1^j> = <beta2^{k+2}, beta1^{j-2}>",
                        j,
                        k,
                        l,
                        r,
                    )
                });
            }
        }
    }

    let half = bound / 2;
    let (a, b) = (BigInt::from(g.a()), BigInt::from(g.b()));
    let strict4 = g.ab() > 4;
    let even_first: Vec<BigInt> = (0..=half).map(|r| p.p12[2 * r][0].clone()).collect();
    let even_second: Vec<BigInt> = (0..=half).map(|r| p.p21[2 * r][0].clone()).collect();
    let odd_first: Vec<BigInt> = (0..=half).map(|r| p.p12[2 * r + 1][1].clone()).collect();
    let odd_second: Vec<BigInt> = (0..=half).map(|r| p.p21[2 * r + 1][1].clone()).collect();
    for (name, seq) in [
        ("<beta1^{2r}, beta2^0>", &even_first),
        ("<beta2^{2r}, beta1^0>", &even_second),
        ("<beta1^{2r+1}, beta2^1>", &odd_first),
        ("<beta2^{2r+1}, beta1^1>", &odd_second),
    ] {
        w.require(non_increasing(seq, strict4), || {
            Counterexample::new(format!("{name} is decreasing, strictly when ab > 4")).value(
                "sequence",
                seq.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            )
        });
    }
    let minus_one = BigInt::from(-1);
    for r in 0..=half {
        let (e1, e2, o1, o2) = (
            &even_first[r],
            &even_second[r],
            &odd_first[r],
            &odd_second[r],
        );
        let detail = |claim: &str| {
            Counterexample::new(claim)
                .index("r", r)
                .int("<beta1^{2r}, beta2^0>", e1)
                .int("<beta2^{2r}, beta1^0>", e2)
                .int("<beta1^{2r+1}, beta2^1>", o1)
                .int("<beta2^{2r+1}, beta1^1>", o2)
        };
        w.require(&a * e2 == &b * e1, || {
            detail("a <beta2^{2r}, beta1^0> = b <beta1^{2r}, beta2^0>")
        });
        if g.a() > g.b() {
            w.require(o2 < o1 && o1 < &minus_one, || {
                detail("a > b: <beta2^{2r+1}, beta1^1> < <beta1^{2r+1}, beta2^1> < -1")
            });
            w.require(e1 < e2 && e2 <= &minus_one, || {
                detail("a > b: <beta1^{2r}, beta2^0> < <beta2^{2r}, beta1^0> <= -1")
            });
            w.require((e2 == &minus_one) == (r == 0 && g.b() == 1), || {
                detail("a > b: <beta2^{2r}, beta1^0> = -1 iff r = 0 and b = 1")
            });
        } else {
            w.require(o1 == o2, || {
                detail("a = b: <beta1^{2r+1}, beta2^1> = <beta2^{2r+1}, beta1^1>")
            });
            if g.a() == 2 {
                w.require(e2 == o1, || {
                    detail("a = b = 2: <beta2^{2r}, beta1^0> = <beta1^{2r+1}, beta2^1>")
                });
            } else {
                w.require(e2 > o1, || {
                    detail("a = b != 2: <beta2^{2r}, beta1^0> > <beta1^{2r+1}, beta2^1>")
                });
            }
        }
    }

    for k in 1..=half {
        let (even, odd) = (p.sigma(2 * k, 0), p.sigma(2 * k - 1, 1));
        w.require(even == transpose(&odd), || {
            Counterexample::new("B_{Sigma_{2k,0}} is the transpose of B_{Sigma_{2k-1,1}}")
                .index("k", k)
                .value("even", show(&even))
                .value("odd", show(&odd))
        });
    }
    Ok(w.into_inner())
}

/// `u_n = (ab - 2) u_{n-1} - u_{n-2}` from the given start.
fn recurrence(g: &Gcm2, u0: BigInt, u1: BigInt, len: usize) -> Vec<BigInt> {
    let m = BigInt::from(g.ab()) - 2;
    let mut out = vec![u0, u1];
    while out.len() < len {
        let n = out.len();
        let next = &m * &out[n - 1] - &out[n - 2];
        out.push(next);
    }
    out.truncate(len);
    out
}

fn xi_zeta(g: &Gcm2, len: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let a = BigInt::from(g.a());
    let ab = BigInt::from(g.ab());
    let z0 = &ab - 2;
    let z1 = &z0 * &z0 - 2;
    (
        recurrence(g, a.clone(), &a * (&ab - 3), len),
        recurrence(g, z0, z1, len),
    )
}

pub(crate) fn eta_recurrence(g: &Gcm2, bound: usize) -> Result<Vec<Counterexample>> {
    let mut w = Witnesses::default();
    let t = BetaTable::new(g, 2 * bound + 3)?;
    let s = cd_sequences(g, 2 * bound + 4);
    let eta: Vec<BigInt> = (0..=2 * bound + 1)
        .map(|j| coroot_pairing(g, t.one(j), t.two(0)).map(|v| -v))
        .collect::<Result<_>>()?;
    let gamma: Vec<BigInt> = (0..=bound)
        .map(|j| coroot_pairing(g, t.two(2 * j), t.one(0)).map(|v| -v))
        .collect::<Result<_>>()?;
    let (xi, zeta) = xi_zeta(g, bound + 1);
    let (a, b) = (BigInt::from(g.a()), BigInt::from(g.b()));

    for j in 0..=bound {
        let row = |claim: &str| {
            Counterexample::new(claim)
                .index("j", j)
                .int("eta_2j", &eta[2 * j])
                .int("eta_2j+1", &eta[2 * j + 1])
                .int("xi", &xi[j])
                .int("zeta", &zeta[j])
                .int("gamma", &gamma[j])
        };
        w.require(eta[2 * j] == xi[j], || {
            row("xi_j = eta_{2j} from xi_0 = a, xi_1 = a(ab-3)")
        });
        w.require(eta[2 * j + 1] == zeta[j], || {
            row("zeta_j = eta_{2j+1} from zeta_0 = ab-2, zeta_1 = zeta_0^2-2")
        });
        w.require(&a * &gamma[j] == &b * &xi[j], || row("a gamma_j = b xi_j"));
        w.require(xi[j] == &s.c[2 * j + 2] - &s.c[2 * j], || {
            row("xi_j = c_{2j+2} - c_{2j}")
        });
        w.require(zeta[j] == &s.d[2 * j + 3] - &s.d[2 * j + 1], || {
            row("zeta_j = d_{2j+3} - d_{2j+1}")
        });
    }

    let (ordered, claim) = if g.a() == 2 && g.b() == 2 {
        (
            eta.windows(2).all(|p| p[0] == p[1]),
            "eta is constant for a = b = 2",
        )
    } else if g.b() == 1 {
        let mut seq = Vec::new();
        for pair in eta.chunks(2) {
            seq.push(&pair[1]);
            seq.push(&pair[0]);
        }
        (
            seq.windows(2).all(|p| p[0] < p[1]),
            "eta_1 < eta_0 < eta_3 < eta_2 < ... for b = 1",
        )
    } else {
        (
            eta.windows(2).all(|p| p[0] < p[1]),
            "eta is strictly increasing",
        )
    };
    w.require(ordered, || {
        Counterexample::new(claim).value(
            "eta",
            eta.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(","),
        )
    });
    Ok(w.into_inner())
}

pub(crate) fn converse_recurrence(g: &Gcm2, bound: usize) -> Result<Vec<Counterexample>> {
    let mut w = Witnesses::default();
    let p = Pairings::new(g, bound + 1)?;
    let (a, b, ab) = (
        BigInt::from(g.a()),
        BigInt::from(g.b()),
        BigInt::from(g.ab()),
    );
    let x = recurrence(g, b.clone(), &b * (&ab - 3), bound + 1);
    let y = recurrence(g, a.clone(), &a * (&ab - 3), bound + 1);
    let (_, zeta) = xi_zeta(g, bound + 1);

    for j in 0..=bound {
        for k in 0..=bound {
            if !is_pair_pi(g, j, k) {
                continue;
            }
            let m = p.sigma(j, k);
            let (c1, c2) = (-&m[0][1], -&m[1][0]);
            let n = (j + k) / 2;
            let (ok, claim, expected) = if (j + k) % 2 == 1 {
                (
                    c1 == zeta[n] && c2 == zeta[n],
                    "j != k mod 2: B_{Sigma_{j,k}} = (2 -s; -s 2) with s = zeta_{(j+k-1)/2}",
                    format!("({}, {})", zeta[n], zeta[n]),
                )
            } else if j % 2 == 0 {
                (
                    c1 == x[n] && c2 == y[n],
                    "j, k even: B_{Sigma_{j,k}} = (2 -x_n; -y_n 2) with n = (j+k)/2",
                    format!("({}, {})", x[n], y[n]),
                )
            } else {
                (
                    c1 == y[n] && c2 == x[n],
                    "j, k odd: B_{Sigma_{j,k}} = (2 -y_n; -x_n 2) with n = (j+k)/2",
                    format!("({}, {})", y[n], x[n]),
                )
            };
            w.require(ok, || {
                Counterexample::new(claim)
                    .index("j", j)
                    .index("k", k)
                    .value("matrix", show(&m))
                    .value("expected_off_diagonal", expected)
            });
        }
    }
    Ok(w.into_inner())
}

pub(crate) fn iso_table(g: &Gcm2, bound: usize) -> Result<Vec<Counterexample>> {
    let mut w = Witnesses::default();
    let n = 2 * bound + 2;
    let p = Pairings::new(g, n)?;
    let affine = g.ab() == 4;
    let equal = g.a() == g.b();
    let (a, b) = (BigInt::from(g.a()), BigInt::from(g.b()));

    // table rows, values read off direct pairings
    for j in 0..=bound {
        let zeta = -&p.p12[2 * j + 1][0];
        let xi = -&p.p12[2 * j][0];
        let odd = if g.b() == 1 && j == 0 {
            (0, 1)
        } else {
            (2 * j + 1, 0)
        };
        let m = p.sigma(odd.0, odd.1);
        let d = det(&m);
        let type_ok = if affine {
            d.sign() == num_bigint::Sign::NoSign
        } else {
            d.is_negative()
        };
        w.require(m[0][1] == -&zeta && m[1][0] == -&zeta && type_ok, || {
            Counterexample::new("odd row: symmetric (2 -zeta_j; -zeta_j 2), hyperbolic for ab >= 5, affine for a = b = 2")
                .index("j", j)
                .index("first", odd.0)
                .index("second", odd.1)
                .value("matrix", show(&m))
                .int("zeta", &zeta)
        });
        let m = p.sigma(2 * j, 0);
        let d = det(&m);
        let type_ok = if affine {
            d.sign() == num_bigint::Sign::NoSign
        } else {
            d.is_negative()
        };
        w.require(
            &a * &m[0][1] == -(&b * &xi)
                && m[1][0] == -&xi
                && (m[0][1] == m[1][0]) == equal
                && type_ok,
            || {
                Counterexample::new("even row: (2 -(b/a)xi_j; -xi_j 2), symmetric iff a = b")
                    .index("j", j)
                    .value("matrix", show(&m))
                    .int("xi", &xi)
            },
        );
    }

    // reduction of Σ_{j,k} to Σ_{j+k,0} or Σ_{j+k-1,1}
    for j in 0..=bound {
        for k in 0..=(bound - j) {
            if !is_pair_pi(g, j, k) {
                continue;
            }
            let m = p.sigma(j, k);
            let sym = m[0][1] == m[1][0];
            let (target, sym_ok) = if (j + k) % 2 == 1 {
                ((j + k, 0), sym)
            } else if j % 2 == 0 {
                ((j + k, 0), sym == equal)
            } else {
                ((j + k - 1, 1), sym == equal)
            };
            let skip_target = !is_pair_pi(g, target.0, target.1);
            let reduced = p.sigma(target.0, target.1);
            w.require(sym_ok && (skip_target || m == reduced), || {
                Counterexample::new(
                    "B_{Sigma_{j,k}} reduces to B_{Sigma_{j+k,0}} (or B_{Sigma_{j+k-1,1}} for j, k odd); symmetric iff j != k mod 2 or a = b",
                )
                .index("j", j)
                .index("k", k)
                .value("matrix", show(&m))
                .value("reduced", show(&reduced))
            });
        }
    }

    // isomorphism classes
    let half = bound / 2;
    for r in 0..=half {
        for s in 0..=half {
            if is_pair_pi(g, 2 * r + 1, 0) && is_pair_pi(g, 2 * s + 1, 0) {
                let iso = isomorphic(&p.sigma(2 * r + 1, 0), &p.sigma(2 * s + 1, 0));
                w.require(iso == (affine || r == s), || {
                    Counterexample::new(
                        "g(Sigma_{2r+1,0}) = g(Sigma_{2s+1,0}) iff r = s (always for a = b = 2)",
                    )
                    .index("r", r)
                    .index("s", s)
                    .value("isomorphic", iso)
                });
            }
            let iso = isomorphic(&p.sigma(2 * r, 0), &p.sigma(2 * s, 0));
            w.require(iso == (affine || r == s), || {
                Counterexample::new(
                    "g(Sigma_{2r,0}) = g(Sigma_{2s,0}) iff r = s (always for a = b = 2)",
                )
                .index("r", r)
                .index("s", s)
                .value("isomorphic", iso)
            });
        }
        if r >= 1 {
            let iso = isomorphic(&p.sigma(2 * r, 0), &p.sigma(2 * r - 1, 1));
            w.require(iso, || {
                Counterexample::new("g(Sigma_{2r,0}) = g(Sigma_{2r-1,1})").index("r", r)
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
        for (a, b) in [(2, 2), (3, 2), (3, 3), (5, 1), (6, 1), (4, 3)] {
            let g = Gcm2::new(a, b).unwrap();
            assert!(
                gcm_symmetry_relations(&g, 16).unwrap().is_empty(),
                "({a},{b})"
            );
            assert!(eta_recurrence(&g, 10).unwrap().is_empty(), "({a},{b})");
            assert!(converse_recurrence(&g, 16).unwrap().is_empty(), "({a},{b})");
            assert!(iso_table(&g, 10).unwrap().is_empty(), "({a},{b})");
        }
    }
}
