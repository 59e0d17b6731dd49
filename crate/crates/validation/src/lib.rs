//! Holds the `acceptance` test target, which runs after every other test in
//! the workspace. Run it alone with `cargo test -p golden-poincare-validation`.
