//! Printed-formula versus solver comparison rows and their CSV/JSON rendering.

use std::fmt;

use serde::Serialize;

use crate::completion::{zeta, Limits};
use crate::error::{Error, Result};
use crate::families::{Family, FamilySpec, FormulaValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    NonIntegral,
    FormulaOnly,
    OracleOnly,
    Skipped,
}

impl Status {
    /// Classifies a formula/oracle pair. A non-integral formula wins over everything else.
    pub fn classify(formula: Option<&FormulaValue>, oracle: Option<u64>) -> Status {
        match (formula, oracle) {
            (Some(f), _) if !f.is_integral() => Status::NonIntegral,
            (Some(f), Some(o)) => {
                if f.as_integer() == Some(o as i64) {
                    Status::Match
                } else {
                    Status::Mismatch
                }
            }
            (Some(_), None) => Status::FormulaOnly,
            (None, Some(_)) => Status::OracleOnly,
            (None, None) => Status::Skipped,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::NonIntegral => "non-integral",
            Status::FormulaOnly => "formula-only",
            Status::OracleOnly => "oracle-only",
            Status::Skipped => "skipped",
        }
    }

    /// Statuses that fail a strict audit.
    pub fn is_discrepancy(self) -> bool {
        matches!(self, Status::Mismatch | Status::NonIntegral)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRow {
    pub family: Family,
    pub n: usize,
    pub formula: Option<FormulaValue>,
    pub oracle: Option<u64>,
    pub status: Status,
    pub note: Option<&'static str>,
}

#[derive(Serialize)]
struct RowJson {
    family: &'static str,
    n: usize,
    formula: Option<String>,
    oracle: Option<u64>,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'static str>,
}

impl Serialize for VerificationRow {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RowJson {
            family: self.family.name(),
            n: self.n,
            formula: self.formula.map(|f| f.to_string()),
            oracle: self.oracle,
            status: self.status,
            note: self.note,
        }
        .serialize(serializer)
    }
}

/// Evaluates the printed formula (if any) and the exact solver on one family member.
///
/// Members above the order guard, or whose search times out, get no oracle value.
pub fn verify_instance(spec: &FamilySpec, limits: &Limits) -> Result<VerificationRow> {
    let graph = spec.build()?;
    let formula = spec.formula().transpose()?;
    let oracle = match zeta(&graph, limits) {
        Ok(r) if r.exact => Some(r.zeta),
        Ok(_) | Err(Error::GuardExceeded { .. }) | Err(Error::Timeout) => None,
        Err(e) => return Err(e),
    };
    Ok(VerificationRow {
        family: spec.family(),
        n: spec.parameter(),
        status: Status::classify(formula.as_ref(), oracle),
        formula,
        oracle,
        note: spec.domain_note(),
    })
}

/// One row per `n` in `range`; `make` maps each parameter to a family member.
pub fn verify_range<F>(range: std::ops::RangeInclusive<usize>, limits: &Limits, make: F) -> Result<Vec<VerificationRow>>
where
    F: Fn(usize) -> Result<FamilySpec>,
{
    range
        .map(|n| make(n).and_then(|spec| verify_instance(&spec, limits)))
        .collect()
}

pub fn rows_to_csv(rows: &[VerificationRow]) -> String {
    let mut out = String::from("family,n,formula,oracle,status\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.family,
            r.n,
            r.formula.map(|f| f.to_string()).unwrap_or_default(),
            r.oracle.map(|o| o.to_string()).unwrap_or_default(),
            r.status
        ));
    }
    out
}

pub fn rows_to_json(rows: &[VerificationRow]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification() {
        let i = |v| FormulaValue::integer(v);
        assert_eq!(Status::classify(Some(&i(3)), Some(3)), Status::Match);
        assert_eq!(Status::classify(Some(&i(24)), Some(29)), Status::Mismatch);
        assert_eq!(
            Status::classify(Some(&FormulaValue::new(15, 2)), Some(3)),
            Status::NonIntegral
        );
        assert_eq!(
            Status::classify(Some(&FormulaValue::new(15, 2)), None),
            Status::NonIntegral
        );
        assert_eq!(Status::classify(Some(&i(1)), None), Status::FormulaOnly);
        assert_eq!(Status::classify(None, Some(1)), Status::OracleOnly);
        assert_eq!(Status::classify(None, None), Status::Skipped);
    }

    #[test]
    fn guard_drops_oracle() {
        let row = verify_instance(&FamilySpec::Cycle(30), &Limits::default()).unwrap();
        assert_eq!(row.oracle, None);
        assert_eq!(row.status, Status::FormulaOnly);
    }

    #[test]
    fn csv_layout() {
        let rows = verify_range(5..=6, &Limits::default(), |n| Ok(FamilySpec::Sun(n.min(3)))).unwrap();
        assert_eq!(
            rows_to_csv(&rows),
            "family,n,formula,oracle,status\nsun,3,15/2,3,non-integral\nsun,3,15/2,3,non-integral\n"
        );
    }
}
