//! Partition counts behind the classical series, and the exceptional values.
//!
//!     cargo run --example closed_forms

use cxqt::closed::{q_closed, PartitionTable};
use cxqt::roots::CartanType;

pub fn run_example() -> cxqt::Result<()> {
    let table = PartitionTable::new(12);
    println!("{:>3} {:>6} {:>6} {:>12}", "n", "p(n)", "odd", "even evens");
    for n in 0..=table.n_max() {
        println!(
            "{n:>3} {:>6} {:>6} {:>12}",
            table.p_all(n),
            table.p_odd(n),
            table.p_even_evens(n)
        );
    }

    // A_n uses p_odd(n+1), B/C/BC use p(n), D uses the even-evens count
    for name in [
        "A4", "B5", "BC5", "D6", "E6", "E7", "E8", "F4", "G2", "H3", "H4", "I2(7)",
    ] {
        let ty: CartanType = name.parse()?;
        println!("Q({ty}) = {}", q_closed(ty)?);
    }

    let big: CartanType = "B200".parse()?;
    println!("Q(B200) = {}", q_closed(big)?);
    Ok(())
}

fn main() -> cxqt::Result<()> {
    run_example()
}
