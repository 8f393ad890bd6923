//! The pi-system predicate, bounded enumeration of pi-systems and the derived
//! Cartan matrix `B_Σ = (⟨β_j, β_i^∨⟩)`.
//!
//! A finite set Σ of roots is a pi-system when no difference of two of its
//! elements is a root. The property is pairwise, so enumeration is clique
//! search in the "difference is not a root" graph over a window of roots.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_core::{
    classify_root, coroot_pairing, BetaIndex, BetaTable, CartanType, Family, Gcm2, RootClass,
    RootVec,
};

/// Largest subset size the enumerator accepts.
pub const MAX_SYSTEM_SIZE: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Which β a root came from, and with which sign. Written `family:index:sign`,
/// e.g. `1:2:+` for `β₁²` or `2:0:-` for `-α₁`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Provenance {
    pub index: BetaIndex,
    pub sign: Sign,
}

impl Provenance {
    pub fn new(index: BetaIndex, sign: Sign) -> Self {
        Provenance { index, sign }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}",
            self.index.family.number(),
            self.index.j,
            self.sign.symbol()
        )
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("expected family:index:sign, got {s:?}"));
        let mut parts = s.trim().split(':');
        let (Some(fam), Some(idx), Some(sign), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(bad());
        };
        let family = Family::try_from(fam.parse::<u8>().map_err(|_| bad())?)?;
        let j = idx.parse::<usize>().map_err(|_| bad())?;
        let sign = match sign {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            _ => return Err(bad()),
        };
        Ok(Provenance::new(BetaIndex::new(family, j), sign))
    }
}

/// A root together with its β label, when it has one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedRoot {
    pub vec: RootVec,
    pub provenance: Option<Provenance>,
}

impl SignedRoot {
    pub fn unlabeled(vec: RootVec) -> Self {
        SignedRoot {
            vec,
            provenance: None,
        }
    }

    pub fn from_table(table: &BetaTable, index: BetaIndex, sign: Sign) -> Self {
        let v = table.get(index);
        SignedRoot {
            vec: match sign {
                Sign::Plus => v.clone(),
                Sign::Minus => -v,
            },
            provenance: Some(Provenance::new(index, sign)),
        }
    }

    /// Resolves a `family:index:sign` label against `g`.
    pub fn from_provenance(g: &Gcm2, p: Provenance) -> Result<Self> {
        let table = BetaTable::new(g, p.index.j)?;
        Ok(SignedRoot::from_table(&table, p.index, p.sign))
    }

    pub fn negated(&self) -> Self {
        SignedRoot {
            vec: -&self.vec,
            provenance: self.provenance.map(|p| Provenance {
                index: p.index,
                sign: p.sign.flipped(),
            }),
        }
    }

    fn sort_key(&self) -> (bool, Option<Provenance>, &RootVec) {
        (self.provenance.is_none(), self.provenance, &self.vec)
    }
}

/// Labeled roots first, by (family, index, sign); unlabeled ones after, by coordinates.
impl Ord for SignedRoot {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for SignedRoot {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.provenance {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "{}", self.vec),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Real roots only, any signs.
    Standard,
    /// Positive roots, real or imaginary.
    Extended,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Standard => "standard",
            Mode::Extended => "extended",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiSystem {
    elements: Vec<SignedRoot>,
    mode: Mode,
}

impl PiSystem {
    /// Rejects repeated vectors; root-class requirements are checked against a
    /// matrix by [`is_pi_system`].
    pub fn new(elements: Vec<SignedRoot>, mode: Mode) -> Result<Self> {
        for (i, e) in elements.iter().enumerate() {
            if elements[..i].iter().any(|o| o.vec == e.vec) {
                return Err(Error::DuplicateElement(e.vec.clone()));
            }
        }
        Ok(PiSystem { elements, mode })
    }

    pub fn standard(elements: Vec<SignedRoot>) -> Result<Self> {
        PiSystem::new(elements, Mode::Standard)
    }

    pub fn from_vectors(vectors: Vec<RootVec>, mode: Mode) -> Result<Self> {
        PiSystem::new(
            vectors.into_iter().map(SignedRoot::unlabeled).collect(),
            mode,
        )
    }

    pub fn elements(&self) -> &[SignedRoot] {
        &self.elements
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn vectors(&self) -> impl Iterator<Item = &RootVec> {
        self.elements.iter().map(|e| &e.vec)
    }

    pub fn canonical(&self) -> PiSystem {
        let mut elements = self.elements.clone();
        elements.sort();
        PiSystem {
            elements,
            mode: self.mode,
        }
    }

    pub fn negated(&self) -> PiSystem {
        PiSystem {
            elements: self.elements.iter().map(SignedRoot::negated).collect(),
            mode: self.mode,
        }
    }

    /// Comma-separated element labels, e.g. `1:1:+,2:0:+`.
    pub fn literal(&self) -> String {
        self.elements
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Outcome of the pi-system test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PiVerdict {
    PiSystem,
    /// The first pair, in canonical order, whose difference is a root.
    Violation {
        first: SignedRoot,
        second: SignedRoot,
        difference: RootClass,
    },
}

impl PiVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, PiVerdict::PiSystem)
    }
}

fn check_contract(g: &Gcm2, s: &PiSystem) -> Result<()> {
    for e in &s.elements {
        let class = classify_root(g, &e.vec);
        match s.mode {
            Mode::Standard if !class.is_real() => {
                return Err(Error::ContractViolation {
                    element: Box::new(e.vec.clone()),
                    mode: "standard",
                    reason: "element is not a real root",
                })
            }
            Mode::Extended if !class.is_positive_root() => {
                return Err(Error::ContractViolation {
                    element: Box::new(e.vec.clone()),
                    mode: "extended",
                    reason: "element is not a positive root",
                })
            }
            _ => {}
        }
    }
    Ok(())
}

fn difference_is_root(g: &Gcm2, u: &RootVec, v: &RootVec) -> RootClass {
    classify_root(g, &(u - v))
}

/// Tests `α - β ∉ Δ` for every pair of distinct elements.
///
/// An element that breaks the mode's contract (a non-real root in standard
/// mode, a non-positive or non-root vector in extended mode) is an error, not
/// a negative verdict.
pub fn is_pi_system(g: &Gcm2, s: &PiSystem) -> Result<PiVerdict> {
    check_contract(g, s)?;
    let canon = s.canonical();
    let el = &canon.elements;
    for i in 0..el.len() {
        for j in (i + 1)..el.len() {
            let class = difference_is_root(g, &el[i].vec, &el[j].vec);
            if class.is_root() {
                return Ok(PiVerdict::Violation {
                    first: el[i].clone(),
                    second: el[j].clone(),
                    difference: class,
                });
            }
        }
    }
    Ok(PiVerdict::PiSystem)
}

/// `β₁^j`, `β₂^j` for `j <= max_index`, optionally with their negatives, in
/// (family, index, sign) order.
pub fn enumerate_real_roots(
    g: &Gcm2,
    max_index: usize,
    include_negatives: bool,
) -> Result<Vec<SignedRoot>> {
    let table = BetaTable::new(g, max_index)?;
    let signs: &[Sign] = if include_negatives {
        &[Sign::Plus, Sign::Minus]
    } else {
        &[Sign::Plus]
    };
    let mut out = Vec::new();
    for family in [Family::I, Family::II] {
        for j in 0..=max_index {
            for &sign in signs {
                out.push(SignedRoot::from_table(
                    &table,
                    BetaIndex::new(family, j),
                    sign,
                ));
            }
        }
    }
    Ok(out)
}

/// Every positive root `x·α₁ + y·α₂` with `0 <= x, y <= max_coord`, real ones
/// labeled with their β index. Candidates for extended pi-systems.
pub fn extended_window(g: &Gcm2, max_coord: usize) -> Result<Vec<SignedRoot>> {
    let table = BetaTable::new(g, 2 * max_coord + 2)?;
    let labels: HashMap<&RootVec, BetaIndex> = [Family::I, Family::II]
        .into_iter()
        .flat_map(|f| {
            table
                .family(f)
                .iter()
                .enumerate()
                .map(move |(j, v)| (v, BetaIndex::new(f, j)))
        })
        .collect();
    let mut out = Vec::new();
    for x in 0..=max_coord {
        for y in 0..=max_coord {
            let v = RootVec::new(x as u64, y as u64);
            let class = classify_root(g, &v);
            if !class.is_positive_root() {
                continue;
            }
            let provenance = if class.is_real() {
                labels.get(&v).map(|&i| Provenance::new(i, Sign::Plus))
            } else {
                None
            };
            out.push(SignedRoot { vec: v, provenance });
        }
    }
    out.sort();
    Ok(out)
}

/// All pi-systems of size `1..=max_size` inside the window, ordered by size
/// and then by the positions of their elements in the window.
///
/// Standard mode uses [`enumerate_real_roots`]; extended mode uses
/// [`extended_window`] with `max_index` read as a coordinate bound and does not
/// accept negative roots.
pub fn enumerate_pi_systems(
    g: &Gcm2,
    max_index: usize,
    max_size: usize,
    include_negatives: bool,
    mode: Mode,
) -> Result<Vec<PiSystem>> {
    if max_size == 0 || max_size > MAX_SYSTEM_SIZE {
        return Err(Error::InvalidArgument(format!(
            "max_size must be between 1 and {MAX_SYSTEM_SIZE}, got {max_size}"
        )));
    }
    let window = match mode {
        Mode::Standard => enumerate_real_roots(g, max_index, include_negatives)?,
        Mode::Extended if include_negatives => {
            return Err(Error::InvalidArgument(
                "extended pi-systems consist of positive roots only".into(),
            ))
        }
        Mode::Extended => extended_window(g, max_index)?,
    };
    Ok(pi_systems_in(g, &window, max_size, mode))
}

/// Clique search over an explicit candidate list; candidates are assumed to
/// satisfy the mode's contract.
pub fn pi_systems_in(
    g: &Gcm2,
    window: &[SignedRoot],
    max_size: usize,
    mode: Mode,
) -> Vec<PiSystem> {
    let n = window.len();
    let compatible: Vec<Vec<bool>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| i != j && !difference_is_root(g, &window[i].vec, &window[j].vec).is_root())
                .collect()
        })
        .collect();

    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn extend(
        start: usize,
        n: usize,
        max_size: usize,
        compatible: &[Vec<bool>],
        stack: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        for next in start..n {
            if stack.iter().all(|&s| compatible[s][next]) {
                stack.push(next);
                found.push(stack.clone());
                if stack.len() < max_size {
                    extend(next + 1, n, max_size, compatible, stack, found);
                }
                stack.pop();
            }
        }
    }
    extend(0, n, max_size, &compatible, &mut stack, &mut found);
    found.sort_by(|p, q| p.len().cmp(&q.len()).then_with(|| p.cmp(q)));
    found
        .into_iter()
        .map(|idx| PiSystem {
            elements: idx.into_iter().map(|i| window[i].clone()).collect(),
            mode,
        })
        .collect()
}

/// `B_Σ` with rows and columns in the system's element order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedGcm {
    #[serde(with = "crate::serde_int::matrix")]
    pub entries: Vec<Vec<BigInt>>,
    pub order: Vec<SignedRoot>,
}

impl DerivedGcm {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn transpose(&self) -> Vec<Vec<BigInt>> {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect())
            .collect()
    }

    pub fn determinant(&self) -> BigInt {
        determinant(&self.entries)
    }

    /// Defined for orders 1 and 2, where the determinant sign decides it.
    pub fn cartan_type(&self) -> Option<CartanType> {
        match self.size() {
            1 => Some(CartanType::Finite),
            2 => Some(CartanType::from_determinant(&self.determinant())),
            _ => None,
        }
    }

    fn check_invariants(&self) -> Result<()> {
        let n = self.size();
        for i in 0..n {
            if self.entries[i][i] != BigInt::from(2) {
                return Err(Error::Inconsistent(format!(
                    "diagonal entry {i} of B_Σ is {}",
                    self.entries[i][i]
                )));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let e = &self.entries[i][j];
                if e.is_positive() {
                    return Err(Error::Inconsistent(format!(
                        "off-diagonal entry ({i},{j}) of B_Σ is positive: {e}"
                    )));
                }
                if e.is_zero() != self.entries[j][i].is_zero() {
                    return Err(Error::Inconsistent(format!(
                        "zero pattern of B_Σ is not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Cofactor expansion; derived matrices here have order at most a handful.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::from(1),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        n => (0..n)
            .map(|col| {
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != col)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][col] * determinant(&minor);
                if col % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum(),
    }
}

/// `b_ij = ⟨β_j, β_i^∨⟩` over a standard pi-system.
pub fn compute_gcm_of_system(g: &Gcm2, s: &PiSystem) -> Result<DerivedGcm> {
    if s.mode != Mode::Standard {
        return Err(Error::InvalidArgument(
            "derived Cartan matrices need a standard (all-real) pi-system".into(),
        ));
    }
    if let PiVerdict::Violation { first, second, .. } = is_pi_system(g, s)? {
        return Err(Error::NotPiSystem {
            first: Box::new(first.vec),
            second: Box::new(second.vec),
        });
    }
    let el = &s.elements;
    let entries = el
        .iter()
        .map(|bi| {
            el.iter()
                .map(|bj| coroot_pairing(g, &bj.vec, &bi.vec))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let m = DerivedGcm {
        entries,
        order: el.clone(),
    };
    m.check_invariants()?;
    Ok(m)
}

/// The coordinate vectors have rank `|s|`.
pub fn is_linearly_independent(s: &PiSystem) -> bool {
    let v: Vec<&RootVec> = s.vectors().collect();
    match v.len() {
        0 => true,
        1 => !v[0].is_zero(),
        2 => !(&v[0].x * &v[1].y - &v[0].y * &v[1].x).is_zero(),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> Gcm2 {
        Gcm2::new(a, b).unwrap()
    }

    fn sys(gcm: &Gcm2, literal: &str) -> PiSystem {
        let elements = literal
            .split(',')
            .map(|s| SignedRoot::from_provenance(gcm, s.parse().unwrap()).unwrap())
            .collect();
        PiSystem::standard(elements).unwrap()
    }

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn simple_roots_form_a_pi_system() {
        for (a, b) in [(1, 1), (2, 2), (5, 1), (3, 2), (4, 1)] {
            let s =
                PiSystem::from_vectors(vec![RootVec::alpha1(), RootVec::alpha2()], Mode::Standard)
                    .unwrap();
            assert!(is_pi_system(&g(a, b), &s).unwrap().holds());
        }
    }

    #[test]
    fn excluded_pair_reports_witness() {
        let gcm = g(5, 1);
        let s = sys(&gcm, "1:1:+,2:0:+");
        match is_pi_system(&gcm, &s).unwrap() {
            PiVerdict::Violation {
                first,
                second,
                difference,
            } => {
                assert_eq!(&first.vec - &second.vec, RootVec::alpha2());
                assert_eq!(difference, RootClass::RealPositive);
            }
            PiVerdict::PiSystem => panic!("(1,0) must be excluded for b = 1"),
        }
    }

    #[test]
    fn extended_borcherds_example() {
        let gcm = g(6, 3);
        let s =
            PiSystem::from_vectors(vec![RootVec::new(3, 1), RootVec::new(5, 1)], Mode::Extended)
                .unwrap();
        assert!(is_pi_system(&gcm, &s).unwrap().holds());
        // same vectors as a standard system break the contract
        let s =
            PiSystem::from_vectors(vec![RootVec::new(3, 1), RootVec::new(5, 1)], Mode::Standard)
                .unwrap();
        assert!(matches!(
            is_pi_system(&gcm, &s),
            Err(Error::ContractViolation { .. })
        ));
    }

    #[test]
    fn contract_violations() {
        let gcm = g(2, 2);
        let s = PiSystem::from_vectors(vec![RootVec::new(1, 1)], Mode::Standard).unwrap();
        assert!(is_pi_system(&gcm, &s).is_err());
        let s = PiSystem::from_vectors(vec![RootVec::new(-1, 0)], Mode::Extended).unwrap();
        assert!(is_pi_system(&gcm, &s).is_err());
        assert!(matches!(
            PiSystem::from_vectors(vec![RootVec::alpha1(), RootVec::alpha1()], Mode::Standard),
            Err(Error::DuplicateElement(_))
        ));
    }

    #[test]
    fn real_root_windows() {
        let w = enumerate_real_roots(&g(2, 2), 1, false).unwrap();
        let vs: Vec<RootVec> = w.iter().map(|e| e.vec.clone()).collect();
        assert_eq!(
            vs,
            vec![
                RootVec::new(0, 1),
                RootVec::new(1, 2),
                RootVec::new(1, 0),
                RootVec::new(2, 1)
            ]
        );
        let w = enumerate_real_roots(&g(7, 2), 0, false).unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w[0].vec, RootVec::alpha2());
        assert_eq!(enumerate_real_roots(&g(5, 1), 2, true).unwrap().len(), 12);
        assert!(enumerate_real_roots(&g(2, 1), 2, false).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let count_by_size = |gcm: &Gcm2, n, s| {
            let mut counts = [0usize; 5];
            for p in enumerate_pi_systems(gcm, n, s, false, Mode::Standard).unwrap() {
                counts[p.len()] += 1;
            }
            counts
        };
        assert_eq!(count_by_size(&g(2, 2), 2, 2), [0, 6, 9, 0, 0]);
        assert_eq!(count_by_size(&g(5, 1), 1, 2), [0, 4, 3, 0, 0]);
        for (a, b) in [(2, 2), (3, 2), (5, 1), (4, 1)] {
            assert_eq!(count_by_size(&g(a, b), 4, 3)[3], 0);
        }
    }

    #[test]
    fn enumeration_argument_errors() {
        assert!(enumerate_pi_systems(&g(2, 2), 2, 5, false, Mode::Standard).is_err());
        assert!(enumerate_pi_systems(&g(2, 2), 2, 0, false, Mode::Standard).is_err());
        assert!(enumerate_pi_systems(&g(2, 2), 2, 2, true, Mode::Extended).is_err());
    }

    #[test]
    fn derived_matrices() {
        for (a, b) in [(2, 2), (3, 2), (5, 1), (9, 4)] {
            let gcm = g(a, b);
            let d = compute_gcm_of_system(&gcm, &sys(&gcm, "1:0:+,2:0:+")).unwrap();
            assert_eq!(d.entries, m(&[&[2, -b], &[-a, 2]]));
        }
        let gcm = g(2, 2);
        let d = compute_gcm_of_system(&gcm, &sys(&gcm, "1:1:+,2:0:+")).unwrap();
        assert_eq!(d.entries, m(&[&[2, -2], &[-2, 2]]));
        assert_eq!(d.cartan_type(), Some(CartanType::Affine));

        let gcm = g(3, 2);
        let d = compute_gcm_of_system(&gcm, &sys(&gcm, "1:2:+,2:0:+")).unwrap();
        assert_eq!(d.entries, m(&[&[2, -6], &[-9, 2]]));
        assert_eq!(d.cartan_type(), Some(CartanType::Hyperbolic));
        assert!(!d.is_symmetric());
    }

    #[test]
    fn derived_matrix_of_non_pi_system_is_rejected() {
        let gcm = g(5, 1);
        assert!(matches!(
            compute_gcm_of_system(&gcm, &sys(&gcm, "1:1:+,2:0:+")),
            Err(Error::NotPiSystem { .. })
        ));
    }

    #[test]
    fn linear_independence() {
        let s = PiSystem::from_vectors(vec![RootVec::alpha1(), RootVec::alpha2()], Mode::Standard)
            .unwrap();
        assert!(is_linearly_independent(&s));
        let b = RootVec::new(5, 4);
        let s = PiSystem::from_vectors(vec![b.clone(), -&b], Mode::Standard).unwrap();
        assert!(!is_linearly_independent(&s));
        let s = PiSystem::from_vectors(
            vec![RootVec::new(0, 1), RootVec::new(1, 0), RootVec::new(1, 2)],
            Mode::Standard,
        )
        .unwrap();
        assert!(!is_linearly_independent(&s));
    }

    #[test]
    fn provenance_literals() {
        let p: Provenance = "2:10:-".parse().unwrap();
        assert_eq!(p.index, BetaIndex::two(10));
        assert_eq!(p.sign, Sign::Minus);
        assert_eq!(p.to_string(), "2:10:-");
        for bad in ["3:0:+", "1:x:+", "1:0", "1:0:*", "1:0:+:1", "1:-1:+"] {
            assert!(bad.parse::<Provenance>().is_err(), "{bad}");
        }
    }

    #[test]
    fn canonical_order() {
        let gcm = g(3, 2);
        let s = sys(&gcm, "2:0:+,1:3:-,1:3:+");
        assert_eq!(s.canonical().literal(), "1:3:+,1:3:-,2:0:+");
    }

    #[test]
    fn determinant_of_three_by_three() {
        let a = m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(determinant(&a), BigInt::from(4));
    }
}
