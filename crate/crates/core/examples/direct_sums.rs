//! Q is multiplicative over orthogonal direct sums.
//!
//!     cargo run --example direct_sums

use cxqt::closed::q_closed_label;
use cxqt::counter::q_bruteforce;
use cxqt::group::Budget;
use cxqt::roots::{build_label, Label};

pub fn run_example() -> cxqt::Result<()> {
    let budget = Budget::default();
    for name in ["A1+A1", "A2+A1", "A2+B2", "B2+B2", "G2+H3"] {
        let label: Label = name.parse()?;
        let system = build_label(&label)?;
        let report = q_bruteforce(&system, &budget)?;
        let parts: Vec<String> = label
            .components()
            .iter()
            .map(|t| {
                Ok(format!(
                    "Q({t}) = {}",
                    q_bruteforce(&cxqt::roots::RootSystem::build(*t)?, &budget)?.q
                ))
            })
            .collect::<cxqt::Result<_>>()?;
        println!(
            "Q({label}) = {} in {} dimensions; {}; closed product {}",
            report.q,
            system.ambient_dim(),
            parts.join(", "),
            q_closed_label(&label)?
        );
    }
    Ok(())
}

fn main() -> cxqt::Result<()> {
    run_example()
}
