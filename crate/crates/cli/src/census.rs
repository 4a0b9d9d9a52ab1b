use quadmap::census::{burnside_count, formula_report, orbit_count, FixedSource, OrbitOptions};
use quadmap::{CensusError, CensusReport};

use crate::{CensusArgs, CliResult, Failure, Format, Source};

pub fn render(report: &CensusReport, format: Format) -> String {
    match format {
        Format::Text => report.to_string(),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report.to_json()).expect("json")),
        Format::Csv => report.to_csv(),
    }
}

/// Maps census errors onto exit codes, printing the partial report where
/// there is one.
pub fn finish(result: Result<CensusReport, CensusError>, format: Format) -> CliResult {
    match result {
        Ok(report) => {
            print!("{}", render(&report, format));
            Ok(())
        }
        Err(CensusError::NonIntegerOrbitCount { report, remainder }) => {
            print!("{}", render(&report, format));
            Err(Failure::NonInteger(format!("count is not an integer (remainder {remainder})")))
        }
        Err(e @ CensusError::Budget { .. }) => Err(Failure::Budget(e.to_string())),
        Err(e @ CensusError::NonIntegral { .. }) => Err(Failure::NonInteger(e.to_string())),
        Err(e) => Err(Failure::Input(e.to_string())),
    }
}

pub fn run(a: &CensusArgs, format: Format) -> CliResult {
    let result = match a.method {
        quadmap::Method::Formula => formula_report(a.n, a.kind, a.beta_variant),
        quadmap::Method::Burnside => {
            let source = match a.source {
                Source::Dfs => FixedSource::Dfs,
                Source::Formula => FixedSource::Formula,
            };
            burnside_count(a.n, a.kind, source, a.beta_variant)
        }
        quadmap::Method::Orbit => {
            let opts = OrbitOptions {
                long_run: a.long_run,
                budget: a.budget,
            };
            orbit_count(a.n, a.kind, &opts).map(|mut r| {
                r.beta_variant = a.beta_variant;
                r
            })
        }
    };
    finish(result, format)
}
