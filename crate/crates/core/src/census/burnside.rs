use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use super::formula::{fixed_count_formula, printed_tail_factor, show_ratio};
use crate::perm::divisors;
use super::{BetaVariant, CensusError, CensusReport, ClassTerm, FixedSource, Method};
use crate::complete::{fixed_maps_count, twist_class_fixed_count, SurfaceKind};
use crate::perm::{conjugacy_class_size, factorial, CycleType};

fn dfs_fixed(n: usize, class: &CycleType, reversing: bool, kind: SurfaceKind) -> BigUint {
    let g = class.representative();
    match kind {
        SurfaceKind::Orientable => fixed_maps_count(n, &g, reversing, kind),
        _ => twist_class_fixed_count(n, &g, kind),
    }
}

/// Orbits of `S_n × ⟨α⟩` on the embeddings of the given kind:
/// `(1/2n!) Σ |class|·|Fix|` over every class and both reversing flags.
///
/// With `Dfs`, orientable counts run on the all-`+` codes (where `α` is the
/// mirror) and the other kinds on twist classes (where `α` acts trivially).
pub fn burnside_count(
    n: usize,
    kind: SurfaceKind,
    source: FixedSource,
    variant: BetaVariant,
) -> Result<CensusReport, CensusError> {
    if n < 4 {
        return Err(CensusError::TooSmall(n));
    }
    let jobs: Vec<(CycleType, bool)> = CycleType::all(n)
        .into_iter()
        .flat_map(|t| [(t.clone(), false), (t, true)])
        .collect();
    let terms: Vec<Result<ClassTerm, CensusError>> = jobs
        .par_iter()
        .map(|(class, reversing)| {
            let closed = match fixed_count_formula(n, class, *reversing, kind, variant) {
                Ok(v) => Ok(Some(v)),
                Err(CensusError::Inadmissible { .. }) => Ok(Some(BigUint::zero())),
                Err(CensusError::NoClosedForm { .. }) => Ok(None),
                Err(e) => Err(e),
            }?;
            let fixed_count = match source {
                FixedSource::Dfs => dfs_fixed(n, class, *reversing, kind),
                FixedSource::Formula => closed.clone().ok_or_else(|| CensusError::NoClosedForm {
                    class: class.clone(),
                    reversing: *reversing,
                })?,
            };
            Ok(ClassTerm {
                class: class.clone(),
                reversing: *reversing,
                class_size: conjugacy_class_size(class),
                fixed_count,
                formula_count: closed,
            })
        })
        .collect();
    let terms: Vec<ClassTerm> = terms.into_iter().collect::<Result<_, _>>()?;

    let mut report = CensusReport::new(n, kind, Method::Burnside, variant);
    let total: BigUint = terms.iter().map(|t| &t.class_size * &t.fixed_count).sum();
    let denom = factorial(n) * 2u32;
    let (count, remainder) = total.div_rem(&denom);
    report.count = count;
    report.notes.push(match (source, kind) {
        (FixedSource::Formula, _) => "fixed counts from the closed forms".to_string(),
        (FixedSource::Dfs, SurfaceKind::Orientable) => {
            "fixed counts by orbit propagation on all-plus rotation codes".to_string()
        }
        (FixedSource::Dfs, _) => "fixed counts on twist classes (codes modulo edge side swaps)".to_string(),
    });
    let differing: Vec<String> = terms
        .iter()
        .filter(|t| t.formula_count.as_ref().is_some_and(|f| *f != t.fixed_count))
        .map(|t| format!("{}{}", t.class, if t.reversing { "·α" } else { "" }))
        .collect();
    if source == FixedSource::Dfs && !differing.is_empty() {
        report
            .notes
            .push(format!("closed form differs from the counted value for {}", differing.join(", ")));
    }
    let tails: Vec<String> = divisors(n - 1)
        .into_iter()
        .filter(|&k| k > 1)
        .filter_map(|k| printed_tail_factor(n, k).ok().map(|r| format!("k={k}: {}", show_ratio(&r))))
        .collect();
    if !tails.is_empty() {
        report.notes.push(format!(
            "[1,k^((n-1)/k)] closed forms divide by the class size in S_(n-1); dividing by the S_n class size instead gives tail factors {}",
            tails.join(", ")
        ));
    }
    report.per_class = terms;
    if !remainder.is_zero() {
        return Err(CensusError::NonIntegerOrbitCount {
            report: Box::new(report),
            remainder,
        });
    }
    Ok(report)
}

/// The counted fixed points of one class against both readings of the odd
/// `β` exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaAdjudication {
    pub n: usize,
    pub class: CycleType,
    /// Fixed twist classes: the carrier whose identity count is `2^{α(n,1)}(n−2)!^n`.
    pub twist_carrier: BigUint,
    /// Fixed signed codes, for reference.
    pub code_carrier: BigUint,
    pub statement: BigUint,
    pub proof: BigUint,
    pub matching: Vec<BetaVariant>,
}

pub fn adjudicate_beta(n: usize, class: &CycleType) -> Result<BetaAdjudication, CensusError> {
    let kind = SurfaceKind::LocallyOrientable;
    let statement = fixed_count_formula(n, class, false, kind, BetaVariant::Statement)?;
    let proof = fixed_count_formula(n, class, false, kind, BetaVariant::Proof)?;
    let g = class.representative();
    let twist_carrier = twist_class_fixed_count(n, &g, kind);
    let code_carrier = fixed_maps_count(n, &g, false, kind);
    let matching = [(BetaVariant::Statement, &statement), (BetaVariant::Proof, &proof)]
        .into_iter()
        .filter(|(_, v)| **v == twist_carrier)
        .map(|(b, _)| b)
        .collect();
    Ok(BetaAdjudication {
        n,
        class: class.clone(),
        twist_carrier,
        code_carrier,
        statement,
        proof,
        matching,
    })
}
