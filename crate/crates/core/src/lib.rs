pub mod error;
pub mod estimate;
pub mod goldfield;
pub mod mp;
pub mod series;
pub mod zeros;
pub mod hadamard;
pub mod verify;
