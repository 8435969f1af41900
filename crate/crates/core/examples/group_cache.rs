//! Store an enumerated group with its class partition and load it back.
//!
//!     cargo run --example group_cache

use cxqt::counter::q_of_group;
use cxqt::group::{cache_load, cache_store, generate, Budget};
use cxqt::roots::RootSystem;

pub fn run_example() -> cxqt::Result<()> {
    let group = generate(&RootSystem::build("E6".parse()?)?, &Budget::default())?;
    let path = std::env::temp_dir().join(format!("cxqt-example-{}.cxqt", std::process::id()));

    cache_store(&group, &path)?;
    let size = std::fs::metadata(&path)?.len();
    let loaded = cache_load(&path)?;
    std::fs::remove_file(&path)?;

    println!("wrote {} elements in {size} bytes", group.order());
    println!(
        "reloaded: |W| = {}, Q = {}",
        loaded.order(),
        q_of_group(&loaded).q
    );
    assert_eq!(q_of_group(&loaded), q_of_group(&group));
    Ok(())
}

fn main() -> cxqt::Result<()> {
    run_example()
}
