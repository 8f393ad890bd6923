use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::root_core::{Gcm2, RootVec};

/// Named checks, declared in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckId {
    RootfourtypesIdentity,
    Lemrelcd,
    IncreasingMonotonicity,
    AuxeqIdentity,
    Lem1Ineq,
    Lem2Ineq,
    Lem41Ineq,
    Lem42Ineq,
    KeypropposDiffs,
    NsumrootSums,
    ThmabExhaustive,
    NthmabExhaustive,
    FinpisystemFinite,
    GcmSymmetryRelations,
    EtaRecurrence,
    ConverseRecurrence,
    IsoTable,
    AppendixRoots,
    AppendixThm41,
    BorcherdsSigma,
}

impl CheckId {
    pub const ALL: [CheckId; 20] = [
        CheckId::RootfourtypesIdentity,
        CheckId::Lemrelcd,
        CheckId::IncreasingMonotonicity,
        CheckId::AuxeqIdentity,
        CheckId::Lem1Ineq,
        CheckId::Lem2Ineq,
        CheckId::Lem41Ineq,
        CheckId::Lem42Ineq,
        CheckId::KeypropposDiffs,
        CheckId::NsumrootSums,
        CheckId::ThmabExhaustive,
        CheckId::NthmabExhaustive,
        CheckId::FinpisystemFinite,
        CheckId::GcmSymmetryRelations,
        CheckId::EtaRecurrence,
        CheckId::ConverseRecurrence,
        CheckId::IsoTable,
        CheckId::AppendixRoots,
        CheckId::AppendixThm41,
        CheckId::BorcherdsSigma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::RootfourtypesIdentity => "rootfourtypes_identity",
            CheckId::Lemrelcd => "lemrelcd",
            CheckId::IncreasingMonotonicity => "increasing_monotonicity",
            CheckId::AuxeqIdentity => "auxeq_identity",
            CheckId::Lem1Ineq => "lem1_ineq",
            CheckId::Lem2Ineq => "lem2_ineq",
            CheckId::Lem41Ineq => "lem41_ineq",
            CheckId::Lem42Ineq => "lem42_ineq",
            CheckId::KeypropposDiffs => "keyproppos_diffs",
            CheckId::NsumrootSums => "nsumroot_sums",
            CheckId::ThmabExhaustive => "thmab_exhaustive",
            CheckId::NthmabExhaustive => "nthmab_exhaustive",
            CheckId::FinpisystemFinite => "finpisystem_finite",
            CheckId::GcmSymmetryRelations => "gcm_symmetry_relations",
            CheckId::EtaRecurrence => "eta_recurrence",
            CheckId::ConverseRecurrence => "converse_recurrence",
            CheckId::IsoTable => "iso_table",
            CheckId::AppendixRoots => "appendix_roots",
            CheckId::AppendixThm41 => "appendix_thm41",
            CheckId::BorcherdsSigma => "borcherds_sigma",
        }
    }

    /// Bound used when the caller does not give one.
    pub fn default_bound(self) -> usize {
        match self {
            CheckId::ThmabExhaustive | CheckId::NthmabExhaustive | CheckId::FinpisystemFinite => 8,
            CheckId::BorcherdsSigma => 8,
            _ => 50,
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check id {s:?}")))
    }
}

/// What a check ran against: a Cartan matrix, or the fixed `ε`/`δ` model of
/// `(2 -4; -1 2)`, written `"appendix"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckTarget {
    Gcm(Gcm2),
    Appendix,
}

impl fmt::Display for CheckTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckTarget::Gcm(g) => write!(f, "{g}"),
            CheckTarget::Appendix => f.write_str("appendix"),
        }
    }
}

impl Serialize for CheckTarget {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CheckTarget::Gcm(g) => g.serialize(s),
            CheckTarget::Appendix => s.serialize_str("appendix"),
        }
    }
}

impl<'de> Deserialize<'de> for CheckTarget {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Name(String),
            Gcm(Gcm2),
        }
        match Repr::deserialize(d)? {
            Repr::Gcm(g) => Ok(CheckTarget::Gcm(g)),
            Repr::Name(n) if n == "appendix" => Ok(CheckTarget::Appendix),
            Repr::Name(n) => Err(serde::de::Error::custom(format!(
                "expected {{a, b}} or \"appendix\", got {n:?}"
            ))),
        }
    }
}

/// One failed instance of a claim, with enough data to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Counterexample {
    pub claim: String,
    pub indices: BTreeMap<String, u64>,
    pub vectors: BTreeMap<String, RootVec>,
    pub values: BTreeMap<String, String>,
}

impl Counterexample {
    pub fn new(claim: impl Into<String>) -> Self {
        Counterexample {
            claim: claim.into(),
            ..Default::default()
        }
    }

    pub fn index(mut self, name: &str, v: usize) -> Self {
        self.indices.insert(name.into(), v as u64);
        self
    }

    pub fn vector(mut self, name: &str, v: &RootVec) -> Self {
        self.vectors.insert(name.into(), v.clone());
        self
    }

    pub fn value(mut self, name: &str, v: impl fmt::Display) -> Self {
        self.values.insert(name.into(), v.to_string());
        self
    }

    pub fn int(self, name: &str, v: &BigInt) -> Self {
        self.value(name, v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: CheckId,
    pub gcm: CheckTarget,
    pub bound: u64,
    pub passed: bool,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub(crate) fn new(
        check: CheckId,
        gcm: CheckTarget,
        bound: usize,
        counterexamples: Vec<Counterexample>,
        elapsed_ms: u64,
    ) -> Self {
        CheckReport {
            check,
            gcm,
            bound: bound as u64,
            passed: counterexamples.is_empty(),
            counterexamples,
            elapsed_ms,
        }
    }
}

/// Collects counterexamples while a check runs.
#[derive(Debug, Default)]
pub(crate) struct Witnesses(pub Vec<Counterexample>);

impl Witnesses {
    /// Records the witness built by `f` unless `ok`.
    pub fn require(&mut self, ok: bool, f: impl FnOnce() -> Counterexample) {
        if !ok {
            self.0.push(f());
        }
    }

    pub fn push(&mut self, c: Counterexample) {
        self.0.push(c);
    }

    pub fn into_inner(self) -> Vec<Counterexample> {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_round_trip() {
        for id in CheckId::ALL {
            assert_eq!(id.name().parse::<CheckId>().unwrap(), id);
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(json, format!("\"{}\"", id.name()));
        }
        assert!("lem3_ineq".parse::<CheckId>().is_err());
        let mut sorted = CheckId::ALL;
        sorted.sort();
        assert_eq!(sorted, CheckId::ALL);
    }

    #[test]
    fn target_serialization() {
        let g = CheckTarget::Gcm(Gcm2::new(3, 2).unwrap());
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"a":3,"b":2}"#);
        assert_eq!(
            serde_json::to_string(&CheckTarget::Appendix).unwrap(),
            r#""appendix""#
        );
        for t in [g, CheckTarget::Appendix] {
            let back: CheckTarget =
                serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
            assert_eq!(back, t);
        }
        assert!(serde_json::from_str::<CheckTarget>(r#""elsewhere""#).is_err());
    }
}
