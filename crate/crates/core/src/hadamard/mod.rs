//! Products over the simple zeros of f: the genus-zero product H, the
//! representations of f and f′ built from it, the closed forms driven by
//! radical chains, and the first-moment identities.

mod argument;
pub mod bounds;
mod closed;
mod product;

pub use argument::{argument_principle_check, expected_zero_count, winding_number, ArgumentCheck};
pub use closed::{chain_term, closed_form_eval, moment_sum, ClosedForm, Variant};
pub use product::{HProduct, SqrtEval};
