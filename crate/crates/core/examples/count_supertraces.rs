//! Q(R) for a few root systems, by enumerating W(R) and by the closed forms.
//!
//!     cargo run --example count_supertraces

use cxqt::closed::q_closed;
use cxqt::counter::q_bruteforce;
use cxqt::group::Budget;
use cxqt::roots::{CartanType, RootSystem};

pub fn run_example() -> cxqt::Result<()> {
    let budget = Budget::default();
    println!(
        "{:<6} {:>8} {:>8} {:>6} {:>6}",
        "type", "|W|", "classes", "brute", "closed"
    );
    for name in ["A3", "B4", "D4", "G2", "H3", "F4"] {
        let ty: CartanType = name.parse()?;
        let report = q_bruteforce(&RootSystem::build(ty)?, &budget)?;
        println!(
            "{:<6} {:>8} {:>8} {:>6} {:>6}",
            report.label,
            report.group_order,
            report.num_classes.unwrap_or(0),
            report.q,
            q_closed(ty)?
        );
        assert_eq!(report.q, q_closed(ty)?);
    }
    Ok(())
}

fn main() -> cxqt::Result<()> {
    run_example()
}
