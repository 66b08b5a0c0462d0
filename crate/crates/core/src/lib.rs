//! Exact Haar state values, corepresentation Gram matrices and q-series identities
//! for the quantum group `O(U_q(n))`, with emphasis on `n = 3`.

pub mod cli;
pub mod corep;
pub mod error;
pub mod haar;
pub mod linsys;
pub mod perm;
pub mod qalgebra;
pub mod qarith;
pub mod uqaction;
pub mod verify;

pub use error::{Error, Result};
pub use qalgebra::{AlgebraElement, CountingMatrix, Generator, TensorElement, Word};
pub use qarith::{LaurentPoly, QRational};
