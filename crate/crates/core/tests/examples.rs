//! Runs every example so their assertions stay checked.

#[allow(dead_code)]
#[path = "../examples/binary_descent.rs"]
mod binary_descent;
#[allow(dead_code)]
#[path = "../examples/bounds_figure.rs"]
mod bounds_figure;
#[allow(dead_code)]
#[path = "../examples/dual_chain.rs"]
mod dual_chain;
#[allow(dead_code)]
#[path = "../examples/finite_fields.rs"]
mod finite_fields;
#[allow(dead_code)]
#[path = "../examples/hermitian_curve.rs"]
mod hermitian_curve;
#[allow(dead_code)]
#[path = "../examples/json_artifacts.rs"]
mod json_artifacts;
#[allow(dead_code)]
#[path = "../examples/or_weight.rs"]
mod or_weight;
#[allow(dead_code)]
#[path = "../examples/pauli_operators.rs"]
mod pauli_operators;
#[allow(dead_code)]
#[path = "../examples/pipeline_bound_only.rs"]
mod pipeline_bound_only;
#[allow(dead_code)]
#[path = "../examples/pipeline_small.rs"]
mod pipeline_small;
#[allow(dead_code)]
#[path = "../examples/steane_enlargement.rs"]
mod steane_enlargement;

#[test]
fn binary_descent() {
    binary_descent::run_example().unwrap();
}

#[test]
fn bounds_figure() {
    bounds_figure::run_example().unwrap();
}

#[test]
fn dual_chain() {
    dual_chain::run_example().unwrap();
}

#[test]
fn finite_fields() {
    finite_fields::run_example().unwrap();
}

#[test]
fn hermitian_curve() {
    hermitian_curve::run_example().unwrap();
}

#[test]
fn json_artifacts() {
    json_artifacts::run_example().unwrap();
}

#[test]
fn or_weight() {
    or_weight::run_example().unwrap();
}

#[test]
fn pauli_operators() {
    pauli_operators::run_example().unwrap();
}

#[test]
fn pipeline_bound_only() {
    pipeline_bound_only::run_example().unwrap();
}

#[test]
fn pipeline_small() {
    pipeline_small::run_example().unwrap();
}

#[test]
fn steane_enlargement() {
    steane_enlargement::run_example().unwrap();
}
