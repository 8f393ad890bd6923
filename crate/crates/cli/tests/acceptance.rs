//! Acceptance suite: one line per criterion, each PASS or FAIL.
//!
//! All comparisons are exact integer equality (tolerance 0). Time limits are
//! pinned below.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use kmpi::classifier::{
    converse_solutions, eta_sequences, iso_class_equal, nthmab_pair_predicate, summary_table,
    thmab_pair_predicate, EtaOrdering,
};
use kmpi::pi_systems::{enumerate_pi_systems, is_pi_system, Mode, PiSystem, Sign, SignedRoot};
use kmpi::root_core::{coroot_pairing, weyl_word_apply};
use kmpi::verifier::{run_check, BorcherdsSystems, CheckId, CheckReport};
use kmpi::{classify_root, BetaIndex, BetaTable, Family, Gcm2, RootClass, RootVec, Simple};

const GRID: [(i64, i64); 8] = [
    (2, 2),
    (3, 2),
    (4, 2),
    (3, 3),
    (5, 1),
    (6, 1),
    (5, 3),
    (4, 3),
];
const GRID_ARG: &str = "2,2;3,2;4,2;3,3;5,1;6,1;5,3;4,3";
const ROOTS_TIME_PER_GCM: Duration = Duration::from_secs(1);
const FULL_SUITE_TIME: Duration = Duration::from_secs(60);

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn gcm(a: i64, b: i64) -> Gcm2 {
    Gcm2::new(a, b).unwrap()
}

fn grid() -> impl Iterator<Item = Gcm2> {
    GRID.iter().map(|&(a, b)| gcm(a, b))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passed(r: CheckReport) -> Outcome {
    ensure(r.passed, || {
        format!(
            "{} at {:?} failed: {}",
            r.check,
            r.gcm,
            r.counterexamples
                .first()
                .map(|c| c.claim.clone())
                .unwrap_or_default()
        )
    })
}

fn check(id: CheckId, g: Option<Gcm2>, bound: usize) -> Outcome {
    passed(run_check(id, g, Some(bound)).map_err(|e| e.to_string())?)
}

fn neg(v: BigInt) -> BigInt {
    -v
}

/// Weyl-word form of `β_i^j` spelled out letter by letter; the rightmost
/// letter acts first.
fn word_form(family: Family, j: usize) -> (Vec<Simple>, RootVec) {
    let (first, second, even_base, odd_base) = match family {
        Family::I => (Simple::S2, Simple::S1, RootVec::alpha2(), RootVec::alpha1()),
        Family::II => (Simple::S1, Simple::S2, RootVec::alpha1(), RootVec::alpha2()),
    };
    let mut word = Vec::new();
    for _ in 0..j / 2 {
        word.push(first);
        word.push(second);
    }
    if j % 2 == 1 {
        word.push(first);
        (word, odd_base)
    } else {
        (word, even_base)
    }
}

fn criterion_1() -> Outcome {
    for g in grid() {
        let start = Instant::now();
        let table = BetaTable::new(&g, 12).map_err(|e| e.to_string())?;
        for family in [Family::I, Family::II] {
            for j in 0..=12 {
                let (word, base) = word_form(family, j);
                let beta = table.get(BetaIndex::new(family, j));
                ensure(&weyl_word_apply(&g, &word, &base) == beta, || {
                    format!(
                        "{g}: beta_{}^{j} differs from its Weyl-word form",
                        family.number()
                    )
                })?;
                ensure(classify_root(&g, beta) == RootClass::RealPositive, || {
                    format!("{g}: beta_{}^{j} is not RealPositive", family.number())
                })?;
            }
        }
        check(CheckId::RootfourtypesIdentity, Some(g), 12)?;
        let took = start.elapsed();
        ensure(took < ROOTS_TIME_PER_GCM, || format!("{g}: took {took:?}"))?;
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    for g in grid() {
        for id in [
            CheckId::Lem1Ineq,
            CheckId::Lem2Ineq,
            CheckId::Lem41Ineq,
            CheckId::Lem42Ineq,
        ] {
            check(id, Some(g), 200)?;
        }
    }
    // boundary indices for b = 1: alpha2 - beta1^1 and alpha1 - beta2^1 are
    // real, and so is alpha1 + alpha2
    for a in [5, 6] {
        let g = gcm(a, 1);
        let t = BetaTable::new(&g, 2).map_err(|e| e.to_string())?;
        for v in [
            &RootVec::alpha2() - t.one(1),
            &RootVec::alpha1() - t.two(1),
            &RootVec::alpha1() + &RootVec::alpha2(),
        ] {
            ensure(classify_root(&g, &v).is_real(), || {
                format!("{g}: {v} should be a real root")
            })?;
        }
    }
    Ok(())
}

fn pair_is_pi(g: &Gcm2, t: &BetaTable, p: (Family, usize, Sign), q: (Family, usize, Sign)) -> bool {
    let root =
        |(f, j, s): (Family, usize, Sign)| SignedRoot::from_table(t, BetaIndex::new(f, j), s);
    let s = PiSystem::standard(vec![root(p), root(q)]).unwrap();
    is_pi_system(g, &s).unwrap().holds()
}

fn no_size_three(g: &Gcm2, negatives: bool) -> Outcome {
    let systems =
        enumerate_pi_systems(g, 8, 3, negatives, Mode::Standard).map_err(|e| e.to_string())?;
    let big = systems.iter().filter(|s| s.len() >= 3).count();
    ensure(big == 0, || format!("{g}: {big} pi-systems of size 3"))
}

fn criterion_3() -> Outcome {
    for g in grid() {
        check(CheckId::ThmabExhaustive, Some(g), 8)?;
        no_size_three(&g, false)?;
        let t = BetaTable::new(&g, 8).map_err(|e| e.to_string())?;
        let mut excluded = BTreeSet::new();
        for j in 0..=8 {
            for k in 0..=8 {
                let found = pair_is_pi(
                    &g,
                    &t,
                    (Family::I, j, Sign::Plus),
                    (Family::II, k, Sign::Plus),
                );
                let claim = thmab_pair_predicate(&g, j, k).map_err(|e| e.to_string())?;
                ensure(found == claim, || {
                    format!("{g}: ({j},{k}) predicate disagrees")
                })?;
                if !found {
                    excluded.insert((j, k));
                }
            }
        }
        let expected: BTreeSet<_> = if g.b() == 1 {
            [(1, 0)].into()
        } else {
            BTreeSet::new()
        };
        ensure(excluded == expected, || {
            format!("{g}: exclusions {excluded:?}")
        })?;
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    for g in grid() {
        check(CheckId::NthmabExhaustive, Some(g), 8)?;
        no_size_three(&g, true)?;
        let t = BetaTable::new(&g, 8).map_err(|e| e.to_string())?;
        for family in [Family::I, Family::II] {
            let mut excluded = BTreeSet::new();
            for j in 0..=8 {
                for k in 0..=8 {
                    if j == k {
                        continue;
                    }
                    let found =
                        pair_is_pi(&g, &t, (family, j, Sign::Plus), (family, k, Sign::Minus));
                    let claim =
                        nthmab_pair_predicate(&g, family, j, k).map_err(|e| e.to_string())?;
                    ensure(found == claim, || {
                        format!(
                            "{g}: family {} ({j},{k}) predicate disagrees",
                            family.number()
                        )
                    })?;
                    if !found {
                        excluded.insert((j.min(k), j.max(k)));
                    }
                }
            }
            // {s, s+2} with s odd in family 1 and s even in family 2
            let parity = match family {
                Family::I => 1,
                Family::II => 0,
            };
            let expected: BTreeSet<_> = if g.b() == 1 {
                (0..=6)
                    .filter(|s| s % 2 == parity)
                    .map(|s| (s, s + 2))
                    .collect()
            } else {
                BTreeSet::new()
            };
            ensure(excluded == expected, || {
                format!("{g}: family {} exclusions {excluded:?}", family.number())
            })?;
        }
    }
    Ok(())
}

const TABLE_2_2: &str = r#"[
  {
    "case": "a=b=2",
    "pattern": "Σ_{2j+1,0}",
    "subcase": "any",
    "j": 0,
    "system": [
      1,
      0
    ],
    "symmetric": true,
    "matrix": [
      [
        "2",
        "-2"
      ],
      [
        "-2",
        "2"
      ]
    ],
    "cartan_type": "Affine"
  },
  {
    "case": "a=b=2",
    "pattern": "Σ_{2j,0}",
    "subcase": "any",
    "j": 0,
    "system": [
      0,
      0
    ],
    "symmetric": true,
    "matrix": [
      [
        "2",
        "-2"
      ],
      [
        "-2",
        "2"
      ]
    ],
    "cartan_type": "Affine"
  }
]"#;

fn criterion_5() -> Outcome {
    let rows = summary_table(&gcm(2, 2), 10).map_err(|e| e.to_string())?;
    let text = serde_json::to_string_pretty(&rows).unwrap();
    ensure(text == TABLE_2_2, || {
        format!("(2,2) table differs:\n{text}")
    })?;

    for g in [gcm(3, 2), gcm(3, 3), gcm(5, 1)] {
        let n = 10;
        let t = BetaTable::new(&g, 2 * n + 1).map_err(|e| e.to_string())?;
        let pair = |u: &RootVec, v: &RootVec| coroot_pairing(&g, u, v).unwrap();
        let rows = summary_table(&g, n).map_err(|e| e.to_string())?;
        ensure(rows.len() == 2 * (n + 1), || {
            format!("{g}: {} rows", rows.len())
        })?;
        let two = BigInt::from(2);
        for r in &rows {
            let odd = r.pattern.contains("2j+1");
            let (first, second) = if odd {
                // zeta_j = -<beta1^{2j+1}, (beta2^0)^vee>
                let zeta = neg(pair(t.one(2 * r.j + 1), t.two(0)));
                (zeta.clone(), zeta)
            } else {
                // xi_j = -<beta1^{2j}, (beta2^0)^vee>, gamma_j = -<beta2^{2j}, (beta1^0)^vee>
                let xi = neg(pair(t.one(2 * r.j), t.two(0)));
                let gamma = neg(pair(t.two(2 * r.j), t.one(0)));
                (gamma, xi)
            };
            let expected = vec![vec![two.clone(), -&first], vec![-&second, two.clone()]];
            ensure(r.matrix == expected, || {
                format!("{g}: row {} j={} has {:?}", r.pattern, r.j, r.matrix)
            })?;
            let symmetric = odd || g.a() == g.b();
            ensure(r.symmetric == symmetric, || {
                format!("{g}: row {} j={} symmetry flag", r.pattern, r.j)
            })?;
            let det = &r.matrix[0][0] * &r.matrix[1][1] - &r.matrix[0][1] * &r.matrix[1][0];
            ensure(
                r.cartan_type.to_string() == "Hyperbolic" && det < BigInt::from(0),
                || format!("{g}: row {} j={} type", r.pattern, r.j),
            )?;
        }
        check(CheckId::IsoTable, Some(g), n)?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let n = 10;
    for g in grid() {
        for id in [
            CheckId::EtaRecurrence,
            CheckId::ConverseRecurrence,
            CheckId::GcmSymmetryRelations,
            CheckId::IsoTable,
        ] {
            check(id, Some(g), n)?;
        }
        let t = BetaTable::new(&g, 2 * n + 2).map_err(|e| e.to_string())?;
        let pair = |u: &RootVec, v: &RootVec| coroot_pairing(&g, u, v).unwrap();

        let eta = eta_sequences(&g, n).map_err(|e| e.to_string())?;
        for j in 0..=n {
            ensure(eta.xi[j] == neg(pair(t.one(2 * j), t.two(0))), || {
                format!("{g}: xi_{j}")
            })?;
            ensure(eta.zeta[j] == neg(pair(t.one(2 * j + 1), t.two(0))), || {
                format!("{g}: zeta_{j}")
            })?;
        }
        ensure(eta.ordering == EtaOrdering::expected(&g), || {
            format!("{g}: eta ordering")
        })?;

        // (x_n, y_n) against the off-diagonal of B_{Σ_{2n,0}}
        let conv = converse_solutions(&g, n).map_err(|e| e.to_string())?;
        for m in 0..=n {
            let c1 = neg(pair(t.two(0), t.one(2 * m)));
            let c2 = neg(pair(t.one(2 * m), t.two(0)));
            ensure(conv.x[m] == c1 && conv.y[m] == c2, || {
                format!("{g}: (x_{m}, y_{m}) vs Σ_{{{},0}}", 2 * m)
            })?;
        }

        // the three isomorphism statements
        let iso = |s1, s2| iso_class_equal(&g, s1, s2).unwrap();
        let affine = g.ab() == 4;
        for r in 0..=n / 2 {
            for s in 0..=n / 2 {
                let odd_ok = g.b() == 1 && (r == 0 || s == 0)
                    || iso((2 * r + 1, 0), (2 * s + 1, 0)) == (affine || r == s);
                ensure(odd_ok, || format!("{g}: odd family r={r} s={s}"))?;
                ensure(iso((2 * r, 0), (2 * s, 0)) == (affine || r == s), || {
                    format!("{g}: even family r={r} s={s}")
                })?;
            }
            if r >= 1 {
                ensure(iso((2 * r, 0), (2 * r - 1, 1)), || {
                    format!("{g}: Σ_{{{},0}} vs Σ_{{{},1}}", 2 * r, 2 * r - 1)
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    check(CheckId::AppendixRoots, None, 12)?;
    check(CheckId::AppendixThm41, None, 12)
}

fn criterion_8() -> Outcome {
    for (a, b) in [(1, 1), (2, 1), (3, 1)] {
        check(CheckId::FinpisystemFinite, Some(gcm(a, b)), 8)?;
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    for a in 4..=10u64 {
        let sys = BorcherdsSystems::new(a).map_err(|e| e.to_string())?;
        ensure(sys.sigma2.len() as u64 == a / 2 + 1, || {
            format!("a={a}: |sigma2| = {}", sys.sigma2.len())
        })?;
        check(CheckId::BorcherdsSigma, Some(sys.gcm()), 8)?;
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_kmpi"))
        .args(["verify", "--check", "all", "--grid", GRID_ARG])
        .env_remove("KMPI_DEFAULT_BOUND")
        .output()
        .map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure(out.status.code() == Some(0), || {
        format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        )
    })?;
    ensure(took < FULL_SUITE_TIME, || format!("took {took:?}"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        (
            "root parameterization matches Weyl words, index <= 12, < 1 s per matrix",
            criterion_1,
        ),
        (
            "quadratic sign conditions for k <= 200 with boundary real roots for b = 1",
            criterion_2,
        ),
        (
            "positive pairs: brute force = predicate, index <= 8, no size-3 systems",
            criterion_3,
        ),
        (
            "signed pairs: brute force = predicate, index <= 8, exclusions {s, s+2}",
            criterion_4,
        ),
        (
            "summary table exact for (2,2), structural for (3,2), (3,3), (5,1), j <= 10",
            criterion_5,
        ),
        (
            "xi, zeta, (x_n, y_n) from direct pairings, n <= 10; isomorphism classes",
            criterion_6,
        ),
        (
            "(4,1) eps/delta forms and pair rules, index <= 12, determinant 0",
            criterion_7,
        ),
        (
            "finite type pi-systems are linearly independent",
            criterion_8,
        ),
        ("Borcherds systems for a = 4..10, b = 3", criterion_9),
        (
            "kmpi verify --check all over the grid: exit 0 in < 60 s",
            criterion_10,
        ),
    ];
    let mut failures = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(()) => println!("criterion {:>2} PASS  {name}", i + 1),
            Err(e) => {
                println!("criterion {:>2} FAIL  {name}: {e}", i + 1);
                failures.push(i + 1);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
