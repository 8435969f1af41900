//! Run one of the self-check suites from code.
//!
//!     cargo run --example self_check

use cxqt::verify::{run_suite, Suite, VerifyOptions};

pub fn run_example() -> cxqt::Result<()> {
    let lines = run_suite(Suite::Multiplicativity, &VerifyOptions::default());
    for line in &lines {
        println!("{line}");
    }
    Ok(())
}

fn main() -> cxqt::Result<()> {
    run_example()
}
