//! Checks on the `c`/`d` sequences and on the Weyl-group description of the
//! positive real roots.

use num_bigint::BigInt;

use super::report::{Counterexample, Witnesses};
use crate::error::Result;
use crate::root_core::{
    cd_sequences, classify_root, weyl_word_apply, BetaTable, Gcm2, RootClass, RootVec, Simple,
    WeylWord,
};

/// A Weyl group element as an integer matrix acting on `(x, y)` columns.
#[derive(Debug, Clone, PartialEq, Eq)]
struct WeylMatrix([[BigInt; 2]; 2]);

impl WeylMatrix {
    fn identity() -> Self {
        WeylMatrix([
            [BigInt::from(1), BigInt::from(0)],
            [BigInt::from(0), BigInt::from(1)],
        ])
    }

    fn reflection(g: &Gcm2, s: Simple) -> Self {
        let (a, b) = (BigInt::from(g.a()), BigInt::from(g.b()));
        match s {
            Simple::S1 => WeylMatrix([[BigInt::from(-1), a], [BigInt::from(0), BigInt::from(1)]]),
            Simple::S2 => WeylMatrix([[BigInt::from(1), BigInt::from(0)], [b, BigInt::from(-1)]]),
        }
    }

    fn mul(&self, rhs: &WeylMatrix) -> WeylMatrix {
        let (l, r) = (&self.0, &rhs.0);
        let e = |i: usize, j: usize| &l[i][0] * &r[0][j] + &l[i][1] * &r[1][j];
        WeylMatrix([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    fn apply(&self, v: &RootVec) -> RootVec {
        let m = &self.0;
        RootVec {
            x: &m[0][0] * &v.x + &m[0][1] * &v.y,
            y: &m[1][0] * &v.x + &m[1][1] * &v.y,
        }
    }

    /// `[1, w, w², …, w^n]`.
    fn powers(w: &WeylMatrix, n: usize) -> Vec<WeylMatrix> {
        let mut out = vec![WeylMatrix::identity()];
        for i in 0..n {
            let next = out[i].mul(w);
            out.push(next);
        }
        out
    }
}

pub(crate) fn rootfourtypes_identity(g: &Gcm2, bound: usize) -> Result<Vec<Counterexample>> {
    let mut w = Witnesses::default();
    let table = BetaTable::new(g, bound + 2)?;
    let (a1, a2) = (RootVec::alpha1(), RootVec::alpha2());

    for j in 0..=bound {
        let k = j / 2;
        let (w1, base1, w2, base2) = if j % 2 == 0 {
            (
                WeylWord::alternating_power(Simple::S2, k),
                &a2,
                WeylWord::alternating_power(Simple::S1, k),
                &a1,
            )
        } else {
            (
                WeylWord::alternating_power(Simple::S2, k).then(WeylWord::single(Simple::S2)),
                &a1,
                WeylWord::alternating_power(Simple::S1, k).then(WeylWord::single(Simple::S1)),
                &a2,
            )
        };
        for (name, beta, word, base) in [
            ("beta1", table.one(j), &w1, base1),
            ("beta2", table.two(j), &w2, base2),
        ] {
            let image = weyl_word_apply(g, &word.0, base);
            w.require(&image == beta, || {
                Counterexample::new("beta equals its Weyl-word form")
                    .value("root", name)
                    .index("j", j)
                    .vector("recurrence", beta)
                    .vector("weyl_word", &image)
            });
            let class = classify_root(g, beta);
            w.require(class == RootClass::RealPositive, || {
                Counterexample::new("every beta is a positive real root")
                    .value("root", name)
                    .index("j", j)
                    .vector("beta", beta)
                    .value("class", class)
            });
        }
    }

    // sums and differences of two betas, rewritten as a Weyl conjugate of
    // something involving a simple root
    let h = bound / 2;
    let s1 = WeylMatrix::reflection(g, Simple::S1);
    let s2 = WeylMatrix::reflection(g, Simple::S2);
    let p = WeylMatrix::powers(&s2.mul(&s1), 2 * h + 2);
    let q = WeylMatrix::powers(&s1.mul(&s2), 2 * h + 2);
    let b1 = |i: usize| table.one(i);
    let b2 = |i: usize| table.two(i);
    let mut conj =
        |label: &str, j: usize, k: usize, lhs: RootVec, el: &WeylMatrix, inner: RootVec| {
            let rhs = el.apply(&inner);
            let (cl, ci) = (classify_root(g, &lhs), classify_root(g, &inner));
            // W permutes the real roots and fixes the positive imaginary ones
            let same_kind = cl == ci || (cl.is_real() && ci.is_real());
            w.require(lhs == rhs && same_kind, || {
                Counterexample::new("sum or difference of betas is the stated Weyl conjugate")
                    .value("identity", label)
                    .index("j", j)
                    .index("k", k)
                    .vector("lhs", &lhs)
                    .vector("rhs", &rhs)
                    .value("lhs_class", cl)
                    .value("inner_class", ci)
            });
        };
    for sign in [1i32, -1] {
        let pm = |u: &RootVec, v: &RootVec| if sign > 0 { u + v } else { u - v };
        let tag = |s: &str| format!("{s}{}", if sign > 0 { "+" } else { "-" });
        for j in 0..=h {
            for k in 0..=j {
                let d = j - k;
                conj(
                    &tag("b1even"),
                    j,
                    k,
                    pm(b1(2 * k), b1(2 * j)),
                    &p[k],
                    pm(&a2, b1(2 * d)),
                );
                conj(
                    &tag("b1odd"),
                    j,
                    k,
                    pm(b1(2 * k + 1), b1(2 * j + 1)),
                    &s2.mul(&q[k]),
                    pm(&a1, b2(2 * d)),
                );
                conj(
                    &tag("b2even"),
                    j,
                    k,
                    pm(b2(2 * k), b2(2 * j)),
                    &q[k],
                    pm(&a1, b2(2 * d)),
                );
                conj(
                    &tag("b2odd"),
                    j,
                    k,
                    pm(b2(2 * k + 1), b2(2 * j + 1)),
                    &s1.mul(&p[k]),
                    pm(&a2, b1(2 * d)),
                );
                conj(
                    &tag("b1mixed"),
                    j,
                    k,
                    pm(b1(2 * k), b1(2 * j + 1)),
                    &p[k],
                    pm(&a2, b1(2 * d + 1)),
                );
                conj(
                    &tag("b2mixed"),
                    j,
                    k,
                    pm(b2(2 * k), b2(2 * j + 1)),
                    &q[k],
                    pm(&a1, b2(2 * d + 1)),
                );
            }
            for k in 0..=h {
                conj(
                    &tag("cross_even_even"),
                    j,
                    k,
                    pm(b1(2 * j), b2(2 * k)),
                    &q[k],
                    pm(&p[j + k].apply(&a2), &a1),
                );
                conj(
                    &tag("cross_even_odd"),
                    j,
                    k,
                    pm(b1(2 * j), b2(2 * k + 1)),
                    &q[k].mul(&s1),
                    pm(&s1.mul(&p[j + k]).apply(&a2), &a2),
                );
                conj(
                    &tag("cross_odd_even"),
                    j,
                    k,
                    pm(b1(2 * k + 1), b2(2 * j)),
                    &p[k].mul(&s2),
                    pm(&a1, &p[j + k].mul(&s2).apply(&a1)),
                );
                conj(
                    &tag("cross_odd_odd"),
                    j,
                    k,
                    pm(b1(2 * k + 1), b2(2 * j + 1)),
                    &s2.mul(&q[k]),
                    pm(&a1, &p[j + k + 1].apply(&a2)),
                );
            }
        }
    }
    Ok(w.into_inner())
}

pub(crate) fn lemrelcd(g: &Gcm2, bound: usize) -> Result<Vec<Counterexample>> {
    let mut w = Witnesses::default();
    let s = cd_sequences(g, bound);
    let (a, b) = (BigInt::from(g.a()), BigInt::from(g.b()));
    for i in 0..=bound {
        let (c, d) = (&s.c[i], &s.d[i]);
        if i % 2 == 1 {
            w.require(c == d, || {
                Counterexample::new("c_{2j+1} = d_{2j+1}")
                    .index("i", i)
                    .int("c", c)
                    .int("d", d)
            });
        } else {
            w.require(&b * c == &a * d, || {
                Counterexample::new("b*c_{2j} = a*d_{2j}")
                    .index("i", i)
                    .int("c", c)
                    .int("d", d)
            });
        }
    }
    Ok(w.into_inner())
}

fn strictly_increasing(v: &[&BigInt]) -> bool {
    v.windows(2).all(|p| p[0] < p[1])
}

/// Witness unless `seq[idx[0]] < seq[idx[1]] < …`.
fn chain(
    claim: &str,
    j: usize,
    name: &str,
    seq: &[BigInt],
    idx: &[usize],
) -> Option<Counterexample> {
    let row: Vec<&BigInt> = idx.iter().map(|&i| &seq[i]).collect();
    if strictly_increasing(&row) {
        return None;
    }
    let mut cx = Counterexample::new(claim).index("j", j);
    for (&i, v) in idx.iter().zip(row) {
        cx = cx.int(&format!("{name}_{i}"), v);
    }
    Some(cx)
}

pub(crate) fn increasing_monotonicity(g: &Gcm2, bound: usize) -> Result<Vec<Counterexample>> {
    let mut w = Witnesses::default();
    let s = cd_sequences(g, bound);
    let (c, d) = (&s.c, &s.d);
    let mut found = Vec::new();
    if g.b() >= 2 {
        for j in (0..).take_while(|j| 2 * j + 2 <= bound) {
            let idx = [2 * j, 2 * j + 1, 2 * j + 2];
            found.push(chain(
                "c_{2j} < c_{2j+1} < c_{2j+2} for b >= 2",
                j,
                "c",
                c,
                &idx,
            ));
            found.push(chain(
                "d_{2j} < d_{2j+1} < d_{2j+2} for b >= 2",
                j,
                "d",
                d,
                &idx,
            ));
        }
    } else {
        for j in (1..).take_while(|j| 2 * j + 3 <= bound) {
            found.push(chain(
                "c_{2j+1} < c_{2j} < c_{2j+3} < c_{2j+2} for b = 1, j >= 1",
                j,
                "c",
                c,
                &[2 * j + 1, 2 * j, 2 * j + 3, 2 * j + 2],
            ));
        }
        for j in (2..).take_while(|j| 2 * j + 2 <= bound) {
            found.push(chain(
                "d_{2j} < d_{2j-1} < d_{2j+2} < d_{2j+1} for b = 1, j >= 2",
                j,
                "d",
                d,
                &[2 * j, 2 * j - 1, 2 * j + 2, 2 * j + 1],
            ));
        }
    }
    for cx in found.into_iter().flatten() {
        w.push(cx);
    }
    for (name, seq) in [("c", c), ("d", d)] {
        for parity in 0..2 {
            let sub: Vec<&BigInt> = seq.iter().skip(parity).step_by(2).collect();
            w.require(strictly_increasing(&sub), || {
                Counterexample::new("c_{2j}, c_{2j+1}, d_{2j}, d_{2j+1} are strictly increasing")
                    .value("sequence", name)
                    .index("parity", parity)
            });
        }
    }
    Ok(w.into_inner())
}

pub(crate) fn auxeq_identity(g: &Gcm2, bound: usize) -> Result<Vec<Counterexample>> {
    let mut w = Witnesses::default();
    let s = cd_sequences(g, bound);
    let (a, b) = (BigInt::from(g.a()), BigInt::from(g.b()));
    let ab1 = BigInt::from(g.ab()) - 1;
    for k in 0..bound.saturating_sub(2) {
        let c3 = &ab1 * &s.c[k + 1] - &a * &s.d[k];
        let d3 = &ab1 * &s.d[k + 1] - &b * &s.c[k];
        w.require(c3 == s.c[k + 3], || {
            Counterexample::new("c_{k+3} = (ab-1)c_{k+1} - a*d_k")
                .index("k", k)
                .int("c_{k+3}", &s.c[k + 3])
                .int("rhs", &c3)
        });
        w.require(d3 == s.d[k + 3], || {
            Counterexample::new("d_{k+3} = (ab-1)d_{k+1} - b*c_k")
                .index("k", k)
                .int("d_{k+3}", &s.d[k + 3])
                .int("rhs", &d3)
        });
    }
    Ok(w.into_inner())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_checks_pass() {
        for (a, b) in [(2, 2), (3, 2), (5, 1), (6, 1), (4, 3)] {
            let g = Gcm2::new(a, b).unwrap();
            assert!(lemrelcd(&g, 30).unwrap().is_empty());
            assert!(increasing_monotonicity(&g, 30).unwrap().is_empty());
            assert!(auxeq_identity(&g, 30).unwrap().is_empty());
            let cx = rootfourtypes_identity(&g, 12).unwrap();
            assert!(cx.is_empty(), "({a},{b}): {:#?}", &cx[..cx.len().min(3)]);
        }
    }

    #[test]
    fn weyl_matrices_agree_with_reflections() {
        let g = Gcm2::new(5, 3).unwrap();
        let v = RootVec::new(7, -2);
        for s in [Simple::S1, Simple::S2] {
            assert_eq!(
                WeylMatrix::reflection(&g, s).apply(&v),
                crate::root_core::simple_reflection(&g, s, &v)
            );
        }
    }
}
