use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::gcm::Gcm2;
use super::lattice::RootVec;
use crate::error::{Error, Result};

/// The sequences `c_k`, `d_k` with `c₀ = d₀ = 0`, `c₁ = d₁ = 1` and
/// `c_{k+2} + c_k = a·d_{k+1}`, `d_{k+2} + d_k = b·c_{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceTable {
    #[serde(with = "crate::serde_int::list")]
    pub c: Vec<BigInt>,
    #[serde(with = "crate::serde_int::list")]
    pub d: Vec<BigInt>,
}

impl SequenceTable {
    /// Largest index held.
    pub fn max_index(&self) -> usize {
        self.c.len() - 1
    }
}

/// `c_0..=c_n` and `d_0..=d_n`.
pub fn cd_sequences(g: &Gcm2, n: usize) -> SequenceTable {
    let a = g.a_big();
    let b = g.b_big();
    let len = n.max(1) + 1;
    let mut c = Vec::with_capacity(len);
    let mut d = Vec::with_capacity(len);
    c.extend([BigInt::from(0), BigInt::from(1)]);
    d.extend([BigInt::from(0), BigInt::from(1)]);
    for k in 0..len.saturating_sub(2) {
        let ck2 = &a * &d[k + 1] - &c[k];
        let dk2 = &b * &c[k + 1] - &d[k];
        c.push(ck2);
        d.push(dk2);
    }
    c.truncate(n + 1);
    d.truncate(n + 1);
    SequenceTable { c, d }
}

/// Type I roots `β₁^j = c_j α₁ + d_{j+1} α₂`, type II roots `β₂^j = c_{j+1} α₁ + d_j α₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Family {
    I,
    II,
}

impl Family {
    pub fn number(self) -> u8 {
        match self {
            Family::I => 1,
            Family::II => 2,
        }
    }

    pub fn other(self) -> Family {
        match self {
            Family::I => Family::II,
            Family::II => Family::I,
        }
    }
}

impl TryFrom<u8> for Family {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(Family::I),
            2 => Ok(Family::II),
            _ => Err(Error::InvalidArgument(format!(
                "root family must be 1 or 2, got {v}"
            ))),
        }
    }
}

impl From<Family> for u8 {
    fn from(f: Family) -> u8 {
        f.number()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BetaIndex {
    pub family: Family,
    pub j: usize,
}

impl BetaIndex {
    pub fn new(family: Family, j: usize) -> Self {
        BetaIndex { family, j }
    }

    pub fn one(j: usize) -> Self {
        BetaIndex::new(Family::I, j)
    }

    pub fn two(j: usize) -> Self {
        BetaIndex::new(Family::II, j)
    }
}

impl fmt::Display for BetaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "beta{}^{}", self.family.number(), self.j)
    }
}

fn require_non_finite(op: &'static str, g: &Gcm2) -> Result<()> {
    if g.is_finite() {
        Err(Error::FiniteType { op, gcm: *g })
    } else {
        Ok(())
    }
}

/// The positive real root named by `idx`. Only defined when `ab >= 4`.
pub fn beta(g: &Gcm2, idx: BetaIndex) -> Result<RootVec> {
    require_non_finite("beta", g)?;
    let t = cd_sequences(g, idx.j + 1);
    Ok(root_from_table(&t, idx))
}

fn root_from_table(t: &SequenceTable, idx: BetaIndex) -> RootVec {
    let j = idx.j;
    match idx.family {
        Family::I => RootVec::new(t.c[j].clone(), t.d[j + 1].clone()),
        Family::II => RootVec::new(t.c[j + 1].clone(), t.d[j].clone()),
    }
}

/// `β₁^j` and `β₂^j` for `0 <= j <= max_index`, computed once from the sequences.
#[derive(Debug, Clone)]
pub struct BetaTable {
    gcm: Gcm2,
    seq: SequenceTable,
    one: Vec<RootVec>,
    two: Vec<RootVec>,
}

impl BetaTable {
    pub fn new(g: &Gcm2, max_index: usize) -> Result<Self> {
        require_non_finite("BetaTable", g)?;
        let seq = cd_sequences(g, max_index + 1);
        let one = (0..=max_index)
            .map(|j| root_from_table(&seq, BetaIndex::one(j)))
            .collect();
        let two = (0..=max_index)
            .map(|j| root_from_table(&seq, BetaIndex::two(j)))
            .collect();
        Ok(BetaTable {
            gcm: *g,
            seq,
            one,
            two,
        })
    }

    pub fn gcm(&self) -> &Gcm2 {
        &self.gcm
    }

    pub fn max_index(&self) -> usize {
        self.one.len() - 1
    }

    pub fn sequences(&self) -> &SequenceTable {
        &self.seq
    }

    pub fn one(&self, j: usize) -> &RootVec {
        &self.one[j]
    }

    pub fn two(&self, j: usize) -> &RootVec {
        &self.two[j]
    }

    /// Panics if `idx.j` exceeds [`BetaTable::max_index`].
    pub fn get(&self, idx: BetaIndex) -> &RootVec {
        match idx.family {
            Family::I => &self.one[idx.j],
            Family::II => &self.two[idx.j],
        }
    }

    pub fn family(&self, family: Family) -> &[RootVec] {
        match family {
            Family::I => &self.one,
            Family::II => &self.two,
        }
    }

    /// Reverse lookup of a positive real root inside the table.
    pub fn index_of(&self, v: &RootVec) -> Option<BetaIndex> {
        [Family::I, Family::II].into_iter().find_map(|f| {
            self.family(f)
                .iter()
                .position(|r| r == v)
                .map(|j| BetaIndex::new(f, j))
        })
    }
}
