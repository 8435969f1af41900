// Each example is compiled in as a module and run once.

#[allow(dead_code)]
#[path = "../examples/class_report.rs"]
mod class_report;

#[allow(dead_code)]
#[path = "../examples/closed_forms.rs"]
mod closed_forms;

#[allow(dead_code)]
#[path = "../examples/count_supertraces.rs"]
mod count_supertraces;

#[allow(dead_code)]
#[path = "../examples/dihedral_classes.rs"]
mod dihedral_classes;

#[allow(dead_code)]
#[path = "../examples/direct_sums.rs"]
mod direct_sums;

#[allow(dead_code)]
#[path = "../examples/exact_arithmetic.rs"]
mod exact_arithmetic;

#[allow(dead_code)]
#[path = "../examples/group_cache.rs"]
mod group_cache;

#[allow(dead_code)]
#[path = "../examples/h3_matrices.rs"]
mod h3_matrices;

#[allow(dead_code)]
#[path = "../examples/h4_quaternions.rs"]
mod h4_quaternions;

#[allow(dead_code)]
#[path = "../examples/root_systems.rs"]
mod root_systems;

#[allow(dead_code)]
#[path = "../examples/self_check.rs"]
mod self_check;

#[test]
fn class_report_runs() {
    class_report::run_example().unwrap();
}

#[test]
fn closed_forms_runs() {
    closed_forms::run_example().unwrap();
}

#[test]
fn count_supertraces_runs() {
    count_supertraces::run_example().unwrap();
}

#[test]
fn dihedral_classes_runs() {
    dihedral_classes::run_example().unwrap();
}

#[test]
fn direct_sums_runs() {
    direct_sums::run_example().unwrap();
}

#[test]
fn exact_arithmetic_runs() {
    exact_arithmetic::run_example().unwrap();
}

#[test]
fn group_cache_runs() {
    group_cache::run_example().unwrap();
}

#[test]
fn h3_matrices_runs() {
    h3_matrices::run_example().unwrap();
}

#[test]
fn h4_quaternions_runs() {
    h4_quaternions::run_example().unwrap();
}

#[test]
fn root_systems_runs() {
    root_systems::run_example().unwrap();
}

#[test]
fn self_check_runs() {
    self_check::run_example().unwrap();
}
