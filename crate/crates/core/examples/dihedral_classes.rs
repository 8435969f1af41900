//! The dihedral class model and ⌊(n+1)/2⌋.
//!
//!     cargo run --example dihedral_classes

use cxqt::closed::{dihedral_classes, q_dihedral, DihedralClassKind};

pub fn run_example() -> cxqt::Result<()> {
    for n in [5, 8] {
        println!("I2({n}):");
        for c in dihedral_classes(n)? {
            let kind = match c.kind {
                DihedralClassKind::Rotation { k } => format!("rotation by 2pi*{k}/{n}"),
                DihedralClassKind::Reflections { coset } => format!("reflections, class {coset}"),
            };
            println!("  {kind:<28} size {:>2}  E = {}", c.size, c.e_grade);
        }
        println!("  Q = {}", q_dihedral(n)?);
    }
    let qs: Vec<String> = (2..=12)
        .map(|n| q_dihedral(n).map(|q| q.to_string()))
        .collect::<cxqt::Result<_>>()?;
    println!("Q(I2(n)) for n = 2..12: {}", qs.join(" "));
    Ok(())
}

fn main() -> cxqt::Result<()> {
    run_example()
}
