//! Machine-readable reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::doc::LieRingDocument;

pub const DETERMINISM: &str =
    "deterministic: no randomness, timestamps or thread-count dependence in the payload";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub format: u32,
    pub command: Vec<String>,
    /// SHA-256 of the input files, hex.
    pub input_sha256: String,
    pub tool_version: String,
    pub determinism: String,
    pub result: Payload,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubgroupInfo {
    pub order: String,
    pub invariant_factors: Vec<u64>,
    pub generators: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleTables {
    pub class: Vec<u64>,
    pub f: Vec<Vec<Vec<u64>>>,
    pub g: Vec<Vec<Vec<u64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionEntry {
    pub class: Vec<u64>,
    pub split: bool,
    pub invariant_factors: Vec<u64>,
    pub total: LieRingDocument,
    /// Images of the coefficient generators in the total ring.
    pub iota: Vec<Vec<u64>>,
    /// Images of the total ring's generators in the base.
    pub beta: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleCheck {
    pub pairs: u64,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapInfo {
    pub name: String,
    pub images: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiveTermVerdicts {
    pub inf_hom_injective: bool,
    pub exact_at_hom_l: bool,
    pub exact_at_hom_h: bool,
    pub exact_at_h2_quotient: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleRow {
    pub modulus: u64,
    pub h2: Vec<u64>,
    pub multiplier: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ViolationInfo {
    pub condition: u8,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Validate {
        order: String,
        invariant_factors: Vec<u64>,
        center_order: String,
    },
    Info {
        order: String,
        invariant_factors: Vec<u64>,
        abelian: bool,
        brackets: BTreeMap<String, Vec<u64>>,
        center: SubgroupInfo,
        derived: SubgroupInfo,
    },
    H2 {
        coeff: Vec<u64>,
        invariant_factors: Vec<u64>,
        z2_order: String,
        b2_order: String,
        /// One cocycle per invariant factor.
        representatives: Vec<CocycleTables>,
    },
    Classify {
        coeff: Vec<u64>,
        h2: Vec<u64>,
        classes: Vec<ExtensionEntry>,
        oracle: Option<OracleCheck>,
    },
    FiveTerm {
        coeff: Vec<u64>,
        ideal: SubgroupInfo,
        /// `Hom(L/H,A)`, `Hom(L,A)`, `Hom(H,A)`, `H2(L/H,A)`, `H2(L,A)`.
        groups: Vec<Vec<u64>>,
        maps: Vec<MapInfo>,
        verdicts: FiveTermVerdicts,
        exact: bool,
    },
    Schur {
        multiplier: Vec<u64>,
        stable: bool,
        schedule: Vec<ScheduleRow>,
    },
    CocycleCheck {
        coeff: Vec<u64>,
        cocycle: bool,
        violation: Option<ViolationInfo>,
        class: Option<Vec<u64>>,
        h2: Option<Vec<u64>>,
    },
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
