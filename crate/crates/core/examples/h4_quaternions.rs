//! W(H4) acting on the quaternions: the two lemmas on x ↦ p x* and
//! x ↦ l x r*, then every group element lifted to quaternion form.
//!
//!     cargo run --release --example h4_quaternions

use cxqt::appendix::{
    det_identity_report, h4_census, map_star, random_unit_quaternion, Quaternion,
};
use cxqt::counter::e_grade;
use cxqt::group::Budget;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> cxqt::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    let p = random_unit_quaternion(&mut rng);
    let x = &p - &Quaternion::one();
    let m = map_star(&p)?;
    println!("p = {p}");
    println!(
        "  E = {}, p(-1+p)* = {}",
        e_grade(&m),
        Quaternion::from_slice(&m.apply(&x.to_vec()))
    );

    let l = random_unit_quaternion(&mut rng);
    let r = random_unit_quaternion(&mut rng);
    let rep = det_identity_report(&l, &r);
    println!(
        "det(x -> lx + xr) = {}, 4(l0 + r0)^2 = {}",
        rep.det, rep.claimed
    );

    let census = h4_census(&Budget::default())?;
    println!(
        "|W(H4)| = {}: {} rotations, {} reflections; {} classes, {} without eigenvalue -1",
        census.order, census.rotations, census.reflections, census.classes, census.q
    );
    println!("all lifts and criteria agree: {}", census.passed());
    Ok(())
}

fn main() -> cxqt::Result<()> {
    run_example()
}
