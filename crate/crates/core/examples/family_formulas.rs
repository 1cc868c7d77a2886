//! Closed-form values for the standard families next to the solver's answer.

use chromcomp::completion::{zeta, Limits};
use chromcomp::families::{Family, FamilySpec};

fn main() -> chromcomp::Result<()> {
    for family in [Family::Cycle, Family::Sunlet, Family::Wheel, Family::Sun, Family::Helm] {
        for n in 3..=7 {
            let spec = FamilySpec::simple(family, n)?;
            let formula = match spec.formula() {
                Some(f) => f?.to_string(),
                None => "-".into(),
            };
            let z = zeta(&spec.build()?, &Limits::default())?.zeta;
            let note = spec.domain_note().map(|s| format!("  [{s}]")).unwrap_or_default();
            println!("{spec:<10} formula {formula:>6}  solver {z:>4}{note}");
        }
    }
    Ok(())
}
