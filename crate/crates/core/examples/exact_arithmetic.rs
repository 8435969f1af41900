//! Arithmetic in Q(sqrt 5) and exact matrix invariants.
//!
//!     cargo run --example exact_arithmetic

use cxqt::appendix::h3_generators;
use cxqt::counter::e_grade;
use cxqt::exact::Scalar;

pub fn run_example() -> cxqt::Result<()> {
    let phi = Scalar::golden();
    println!(
        "phi = {phi}, phi^2 = {}, 1/phi = {}",
        phi.pow(2),
        phi.recip()?
    );
    println!("phi > 1.618: {}", phi > "809/500".parse()?);

    // a·b from the H3 generators is a rotation of order 5
    let (a, b, _) = h3_generators();
    let m = &a * &b;
    let mut power = m.clone();
    for _ in 1..5 {
        power = &power * &m;
    }
    println!("(ab)^5 = 1: {}", power.is_identity());
    println!("det = {}, trace = {}", m.det(), m.trace());
    println!("det(tI - m) = {}", m.char_poly());
    println!("E(m) = {}", e_grade(&m));
    Ok(())
}

fn main() -> cxqt::Result<()> {
    run_example()
}
