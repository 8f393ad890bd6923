//! Sign conditions on quadratic expressions in `c_k`, `d_k`.
//!
//! Each expression is half the scaled norm of a vector like `α₂ - β₁^k`. Checks
//! evaluate the polynomial as written and, separately, compare it with the
//! norm of that vector, so a transcription slip in either shows up.

use num_bigint::BigInt;
use num_traits::Signed;

use super::report::{Counterexample, Witnesses};
use crate::error::Result;
use crate::root_core::{cd_sequences, classify_root, norm_scaled, Gcm2, RootClass, RootVec};

struct Ctx {
    g: Gcm2,
    a: BigInt,
    b: BigInt,
    ab: BigInt,
    c: Vec<BigInt>,
    d: Vec<BigInt>,
}

impl Ctx {
    fn new(g: &Gcm2, bound: usize) -> Self {
        let s = cd_sequences(g, bound + 2);
        Ctx {
            g: *g,
            a: BigInt::from(g.a()),
            b: BigInt::from(g.b()),
            ab: BigInt::from(g.ab()),
            c: s.c,
            d: s.d,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Expect {
    NonPositive,
    Positive,
}

impl Expect {
    fn holds(self, v: &BigInt) -> bool {
        match self {
            Expect::NonPositive => !v.is_positive(),
            Expect::Positive => v.is_positive(),
        }
    }

    fn describe(self) -> &'static str {
        match self {
            Expect::NonPositive => "<= 0",
            Expect::Positive => "> 0",
        }
    }
}

struct Form {
    name: &'static str,
    text: &'static str,
    /// Vector whose scaled norm is twice the expression.
    vector: &'static str,
    value: fn(&Ctx, usize) -> BigInt,
    root: fn(&Ctx, usize) -> RootVec,
}

const E1: Form = Form {
    name: "E1",
    text: "b c_k^2 + a d_{k+1}^2 - ab c_k d_{k+1} + ab c_k - 2a d_{k+1} + a",
    vector: "alpha2 - beta1^k",
    value: |x, k| {
        let (c, d) = (&x.c[k], &x.d[k + 1]);
        &x.b * c * c + &x.a * d * d - &x.ab * c * d + &x.ab * c - &x.a * d * 2u32 + &x.a
    },
    root: |x, k| RootVec::new(-&x.c[k], 1 - &x.d[k + 1]),
};

const E2: Form = Form {
    name: "E2",
    text: "b c_{k+1}^2 + a d_k^2 - ab d_k c_{k+1} - 2b c_{k+1} + ab d_k + b",
    vector: "alpha1 - beta2^k",
    value: |x, k| {
        let (c, d) = (&x.c[k + 1], &x.d[k]);
        &x.b * c * c + &x.a * d * d - &x.ab * d * c - &x.b * c * 2u32 + &x.ab * d + &x.b
    },
    root: |x, k| RootVec::new(1 - &x.c[k + 1], -&x.d[k]),
};

const F1: Form = Form {
    name: "F1",
    text: "b c_{k+1}^2 + a d_k^2 - ab c_{k+1} d_k + ab c_{k+1} - 2a d_k + a",
    vector: "alpha2 - beta2^k",
    value: |x, k| {
        let (c, d) = (&x.c[k + 1], &x.d[k]);
        &x.b * c * c + &x.a * d * d - &x.ab * c * d + &x.ab * c - &x.a * d * 2u32 + &x.a
    },
    root: |x, k| RootVec::new(-&x.c[k + 1], 1 - &x.d[k]),
};

const F2: Form = Form {
    name: "F2",
    text: "b c_k^2 + a d_{k+1}^2 - ab c_k d_{k+1} - 2b c_k + ab d_{k+1} + b",
    vector: "alpha1 - beta1^k",
    value: |x, k| {
        let (c, d) = (&x.c[k], &x.d[k + 1]);
        &x.b * c * c + &x.a * d * d - &x.ab * c * d - &x.b * c * 2u32 + &x.ab * d + &x.b
    },
    root: |x, k| RootVec::new(1 - &x.c[k], -&x.d[k + 1]),
};

const G1: Form = Form {
    name: "G1",
    text: "b c_k^2 + a d_{k+1}^2 - ab c_k d_{k+1} - ab c_k + 2a d_{k+1} + a",
    vector: "alpha2 + beta1^k",
    value: |x, k| {
        let (c, d) = (&x.c[k], &x.d[k + 1]);
        &x.b * c * c + &x.a * d * d - &x.ab * c * d - &x.ab * c + &x.a * d * 2u32 + &x.a
    },
    root: |x, k| RootVec::new(x.c[k].clone(), 1 + &x.d[k + 1]),
};

const G2: Form = Form {
    name: "G2",
    text: "b c_{k+1}^2 + a d_k^2 - ab c_{k+1} d_k + 2b c_{k+1} - ab d_k + b",
    vector: "alpha1 + beta2^k",
    value: |x, k| {
        let (c, d) = (&x.c[k + 1], &x.d[k]);
        &x.b * c * c + &x.a * d * d - &x.ab * c * d + &x.b * c * 2u32 - &x.ab * d + &x.b
    },
    root: |x, k| RootVec::new(1 + &x.c[k + 1], x.d[k].clone()),
};

const H1: Form = Form {
    name: "H1",
    text: "b c_{k+1}^2 + a d_k^2 - ab c_{k+1} d_k + 2a d_k - ab c_{k+1} + a",
    vector: "alpha2 + beta2^k",
    value: |x, k| {
        let (c, d) = (&x.c[k + 1], &x.d[k]);
        &x.b * c * c + &x.a * d * d - &x.ab * c * d + &x.a * d * 2u32 - &x.ab * c + &x.a
    },
    root: |x, k| RootVec::new(x.c[k + 1].clone(), 1 + &x.d[k]),
};

const H2: Form = Form {
    name: "H2",
    text: "b c_k^2 + a d_{k+1}^2 - ab d_{k+1} c_k - ab d_{k+1} + 2b c_k + b",
    vector: "alpha1 + beta1^k",
    value: |x, k| {
        let (c, d) = (&x.c[k], &x.d[k + 1]);
        &x.b * c * c + &x.a * d * d - &x.ab * d * c - &x.ab * d + &x.b * c * 2u32 + &x.b
    },
    root: |x, k| RootVec::new(1 + &x.c[k], x.d[k + 1].clone()),
};

/// Norm identity for every `k <= bound`, sign condition for `start <= k <= bound`.
fn check_form(w: &mut Witnesses, x: &Ctx, f: &Form, bound: usize, start: usize, expect: Expect) {
    for k in 0..=bound {
        let v = (f.value)(x, k);
        let root = (f.root)(x, k);
        let norm = norm_scaled(&x.g, &root);
        w.require(norm == &v * 2u32, || {
            Counterexample::new(format!("scaled norm of {} equals 2*{}", f.vector, f.name))
                .index("k", k)
                .vector("vector", &root)
                .int("norm", &norm)
                .int(f.name, &v)
        });
        if k >= start {
            w.require(expect.holds(&v), || {
                Counterexample::new(format!("{} {} ({})", f.name, expect.describe(), f.text))
                    .index("k", k)
                    .int(f.name, &v)
            });
        }
    }
}

/// At an index just below the stated range for `b = 1`, the expression is
/// positive and the vector is a real root.
fn check_boundary(w: &mut Witnesses, x: &Ctx, f: &Form, k: usize) {
    let v = (f.value)(x, k);
    let root = (f.root)(x, k);
    let class = classify_root(&x.g, &root);
    w.require(v.is_positive() && class.is_real(), || {
        Counterexample::new(format!(
            "for b = 1 at k = {k}, {} > 0 and {} is a real root",
            f.name, f.vector
        ))
        .index("k", k)
        .int(f.name, &v)
        .vector("vector", &root)
        .value("class", class)
    });
}

pub(crate) fn lem1_ineq(g: &Gcm2, bound: usize) -> Result<Vec<Counterexample>> {
    let x = Ctx::new(g, bound);
    let mut w = Witnesses::default();
    let start = if g.b() >= 2 { 1 } else { 2 };
    for f in [&E1, &E2] {
        check_form(&mut w, &x, f, bound, start, Expect::NonPositive);
        if g.b() == 1 {
            check_boundary(&mut w, &x, f, 1);
        }
    }
    Ok(w.into_inner())
}

pub(crate) fn lem2_ineq(g: &Gcm2, bound: usize) -> Result<Vec<Counterexample>> {
    let x = Ctx::new(g, bound);
    let mut w = Witnesses::default();
    for f in [&F1, &F2] {
        check_form(&mut w, &x, f, bound, 0, Expect::Positive);
    }
    Ok(w.into_inner())
}

pub(crate) fn lem41_ineq(g: &Gcm2, bound: usize) -> Result<Vec<Counterexample>> {
    let x = Ctx::new(g, bound);
    let mut w = Witnesses::default();
    for f in [&G1, &G2] {
        check_form(&mut w, &x, f, bound, 0, Expect::Positive);
    }
    Ok(w.into_inner())
}

pub(crate) fn lem42_ineq(g: &Gcm2, bound: usize) -> Result<Vec<Counterexample>> {
    let x = Ctx::new(g, bound);
    let mut w = Witnesses::default();
    let start = if g.b() >= 2 { 0 } else { 1 };
    for f in [&H1, &H2] {
        check_form(&mut w, &x, f, bound, start, Expect::NonPositive);
        if g.b() == 1 {
            check_boundary(&mut w, &x, f, 0);
        }
    }
    if g.b() == 1 {
        let sum = RootVec::new(1, 1);
        let class = classify_root(g, &sum);
        w.require(class == RootClass::RealPositive, || {
            Counterexample::new("for b = 1, beta1^0 + beta2^0 is a real root")
                .vector("sum", &sum)
                .value("class", class)
        });
    }
    Ok(w.into_inner())
}
