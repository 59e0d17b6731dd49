//! Zeros of f: primitive zeros of the iterates `P_n`, simple zeros from
//! sign sequences, the constant C, and approximate zero clouds.

mod cloud;
mod paris;
mod primitive;
mod radical;
mod sign;
mod simple;

pub use cloud::{approx_zero_cloud, cloud_nodes, CloudPoint, BOUNDARY_TOL, DEFAULT_BUDGET};
pub use paris::{
    bisect_real_root, nested_convergence, nested_radicals, paris_constant, ParisConstant,
    CROSS_CHECK_TOL,
};
pub use primitive::{
    addresses, primitive_zeros, primitivity_witness, y_of_s, y_of_s_mp, PrimitiveZeros,
    PrimitivityCheck, DEFAULT_DEPTH_LIMIT,
};
pub(crate) use radical::{run_chain, ChainConsts, Stop};
pub use sign::{Convention, Sign, SignSeq};
pub use simple::{
    doubling_at, doubling_witness, enumerate_simple_zeros, multiplicity_doubling_check,
    ring_index, ring_occupancy, ring_tags, z0_approx, z0_of_sigma, z0_truncated, ZeroRecord,
};
