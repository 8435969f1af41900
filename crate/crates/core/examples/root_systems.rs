//! Building, checking and serializing root systems, including one given
//! only by generating roots.
//!
//!     cargo run --example root_systems

use cxqt::exact::Scalar;
use cxqt::roots::{build_root_system, Label, Realization, RootSystem};

pub fn run_example() -> cxqt::Result<()> {
    for name in ["A4", "BC3", "F4", "H4", "E8", "I2(7)"] {
        match build_root_system(name.parse()?)? {
            Realization::Concrete(sys) => {
                let report = sys.verify();
                println!(
                    "{name}: {} roots in {} dimensions, rank {}, checks passed: {}",
                    sys.len(),
                    sys.ambient_dim(),
                    sys.rank(),
                    report.passed()
                );
            }
            Realization::Dihedral(n) => {
                println!("{name}: symbolic dihedral group of order {}", 2 * n)
            }
        }
    }

    // B2 closed from two generating roots
    let gens = vec![
        vec![Scalar::one(), Scalar::from_int(-1)],
        vec![Scalar::zero(), Scalar::one()],
    ];
    let b2 = RootSystem::from_generators(Label::Custom("my B2".into()), gens)?;
    println!(
        "closure of two roots: {} roots, simple {:?}",
        b2.len(),
        b2.simple_roots()
    );

    let h3 = RootSystem::build("H3".parse()?)?;
    let json = h3.to_json()?;
    let back = RootSystem::from_json(&json)?;
    println!(
        "H3 as JSON: {} bytes, round trip equal: {}",
        json.len(),
        back.roots() == h3.roots()
    );
    Ok(())
}

fn main() -> cxqt::Result<()> {
    run_example()
}
