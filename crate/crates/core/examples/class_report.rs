//! Per-class invariants of W(F4), then the same report as JSON.
//!
//!     cargo run --example class_report

use cxqt::counter::q_of_group;
use cxqt::group::{conjugacy_classes, generate, Budget};
use cxqt::roots::RootSystem;

pub fn run_example() -> cxqt::Result<()> {
    let group = generate(&RootSystem::build("F4".parse()?)?, &Budget::default())?;
    for c in conjugacy_classes(&group) {
        println!(
            "class {:>2}: size {:>3}, order {:>2}, det {:>2}, E = {}, charpoly {}",
            c.id, c.size, c.order, c.det, c.e_grade, c.charpoly
        );
    }
    let json = q_of_group(&group).to_json()?;
    println!(
        "{}",
        &json[..json.find("\"classes\"").unwrap_or(json.len())]
    );
    Ok(())
}

fn main() -> cxqt::Result<()> {
    run_example()
}
