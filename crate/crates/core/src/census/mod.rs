//! Unrooted complete-map counts by closed form, by Burnside summation and by
//! direct orbit enumeration.

mod burnside;
mod formula;
mod orbit;
mod pairs;

pub use burnside::{adjudicate_beta, burnside_count, BetaAdjudication};
pub use formula::{
    alpha_exponent, beta_exponent, fixed_count_formula, formula_counts, formula_report, formula_values, printed_tail_factor, FormulaCounts,
    FormulaValues,
};
pub use orbit::{
    biggs_check, genus_distribution, isomorphism_classes, labeled_surface_tally, orbit_count, BiggsRow, MapClass,
    OrbitOptions, DEFAULT_ORBIT_BUDGET,
};
pub use pairs::{pair_permutation_check, stable_pair_permutation_count, PairPermutation, PairPermutationCheck};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::complete::SurfaceKind;
use crate::perm::CycleType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BetaVariant {
    /// `(n−1)(n−2)/2k` for odd `k`.
    Statement,
    /// `(n−1)(n−4)/2k` for odd `k`.
    Proof,
}

impl BetaVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            BetaVariant::Statement => "statement",
            BetaVariant::Proof => "proof",
        }
    }
}

impl fmt::Display for BetaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BetaVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "statement" => Ok(BetaVariant::Statement),
            "proof" => Ok(BetaVariant::Proof),
            _ => Err(format!("unknown beta variant {s:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Formula,
    Burnside,
    Orbit,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Burnside => "burnside",
            Method::Orbit => "orbit",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "formula" => Ok(Method::Formula),
            "burnside" => Ok(Method::Burnside),
            "orbit" => Ok(Method::Orbit),
            _ => Err(format!("unknown method {s:?}")),
        }
    }
}

/// Where Burnside summation takes its fixed-point counts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixedSource {
    /// Counted on the embedding carrier.
    Dfs,
    /// The closed forms.
    Formula,
}

/// One `(class, reversing)` term of a Burnside sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTerm {
    pub class: CycleType,
    pub reversing: bool,
    pub class_size: BigUint,
    pub fixed_count: BigUint,
    /// The closed-form value for this class, when there is one.
    pub formula_count: Option<BigUint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    pub kind: SurfaceKind,
    pub method: Method,
    pub count: BigUint,
    pub per_class: Vec<ClassTerm>,
    pub beta_variant: BetaVariant,
    pub notes: Vec<String>,
}

impl CensusReport {
    pub fn new(n: usize, kind: SurfaceKind, method: Method, beta_variant: BetaVariant) -> Self {
        CensusReport {
            n,
            kind,
            method,
            count: BigUint::default(),
            per_class: Vec::new(),
            beta_variant,
            notes: Vec::new(),
        }
    }

    /// Counts are decimal strings; keys come out sorted.
    pub fn to_json(&self) -> serde_json::Value {
        let per_class: Vec<_> = self
            .per_class
            .iter()
            .map(|t| {
                json!({
                    "class": t.class.to_string(),
                    "reversing": t.reversing,
                    "class_size": t.class_size.to_string(),
                    "fixed_count": t.fixed_count.to_string(),
                    "formula_count": t.formula_count.as_ref().map(|c| c.to_string()),
                })
            })
            .collect();
        json!({
            "n": self.n,
            "kind": self.kind,
            "method": self.method,
            "count": self.count.to_string(),
            "per_class": per_class,
            "beta_variant": self.beta_variant,
            "notes": self.notes,
        })
    }

    /// One row per class term (a single summary row when there are none).
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "n",
            "kind",
            "method",
            "count",
            "class",
            "reversing",
            "class_size",
            "fixed_count",
            "formula_count",
        ])
        .expect("in-memory write");
        let head = [
            self.n.to_string(),
            self.kind.to_string(),
            self.method.to_string(),
            self.count.to_string(),
        ];
        if self.per_class.is_empty() {
            let row: Vec<String> = head.iter().cloned().chain(std::iter::repeat(String::new()).take(5)).collect();
            w.write_record(&row).expect("in-memory write");
        }
        for t in &self.per_class {
            let row: Vec<String> = head
                .iter()
                .cloned()
                .chain([
                    t.class.to_string(),
                    t.reversing.to_string(),
                    t.class_size.to_string(),
                    t.fixed_count.to_string(),
                    t.formula_count.as_ref().map_or_else(String::new, |c| c.to_string()),
                ])
                .collect();
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }
}

impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}, kind = {}, method = {}", self.n, self.kind, self.method)?;
        writeln!(f, "count = {}", self.count)?;
        if !self.per_class.is_empty() {
            writeln!(f, "{:<16} {:>4} {:>12} {:>24} {:>24}", "class", "rev", "size", "fixed", "closed form")?;
            for t in &self.per_class {
                let formula = t.formula_count.as_ref().map_or_else(|| "-".to_string(), |c| c.to_string());
                writeln!(
                    f,
                    "{:<16} {:>4} {:>12} {:>24} {:>24}",
                    t.class.to_string(),
                    if t.reversing { "yes" } else { "no" },
                    t.class_size,
                    t.fixed_count,
                    formula
                )?;
            }
        }
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("census needs n >= 4, got {0}")]
    TooSmall(usize),
    #[error("{k} does not divide {n}")]
    NotDivisor { k: usize, n: usize },
    #[error("{what} is not an integer")]
    NonIntegral { what: String },
    #[error("class {class}{} has no closed-form fixed count", if *.reversing { " (reversing)" } else { "" })]
    NoClosedForm { class: CycleType, reversing: bool },
    #[error("class {class}{} is not admissible", if *.reversing { " (reversing)" } else { "" })]
    Inadmissible { class: CycleType, reversing: bool },
    #[error("count is not an integer (remainder {remainder}); the report keeps the quotient")]
    NonIntegerOrbitCount { report: Box<CensusReport>, remainder: BigUint },
    #[error("carrier has {required} codes, budget is {budget}; pass the long-run flag to go ahead")]
    Budget { required: BigUint, budget: u64 },
}
