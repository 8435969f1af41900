//! H3 from three explicit reflections: relations, rotation class polynomials
//! and the count of classes without eigenvalue −1.
//!
//!     cargo run --example h3_matrices

use cxqt::appendix::{
    h3_charpoly_table, h3_generators, h3_relations_hold, h3_system_from_generators,
};
use cxqt::group::{conjugacy_classes, generate, Budget};

pub fn run_example() -> cxqt::Result<()> {
    let (a, b, c) = h3_generators();
    for (name, m) in [("a", &a), ("b", &b), ("c", &c)] {
        println!(
            "{name} = {:?}",
            m.rows()
                .iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        );
    }
    println!("relations hold: {}", h3_relations_hold());

    println!("det(1 - t g), coefficients from t^0:");
    for row in h3_charpoly_table()? {
        println!("  {:<5} {}", row.word, row.computed);
    }

    let group = generate(&h3_system_from_generators()?, &Budget::default())?;
    let classes = conjugacy_classes(&group);
    let q = classes.iter().filter(|c| c.e_grade == 0).count();
    println!(
        "|W| = {}, {} classes, {q} without eigenvalue -1",
        group.order(),
        classes.len()
    );
    Ok(())
}

fn main() -> cxqt::Result<()> {
    run_example()
}
