//! Exact computation of Grothendieck polynomials and their orthogonal and
//! symplectic analogues.
//!
//! The crate is organised bottom-up:
//!
//! - [`polyring`]: the sparse ring `Z[β][x_1, x_2, …]` with divided differences.
//! - [`permgroup`]: finitely supported permutations, Rothe diagrams, Demazure
//!   products and Bruhat covers.
//! - [`involutions`]: involutions, atoms `B_inv(z)`, the vexillary weak order.
//! - [`grothendieck`]: `𝒢_w`, basis expansion, transition and Pieri formulas.
//! - [`ortho`]: `Ĝ_z`, `𝒢^O_z`, the coefficients `GC^O_z`, shiftable sets,
//!   `B_inv⁺(z)`, shifts and stable limits.
//! - [`harness`]: exhaustive sweeps, census tables and exports used by the CLI.
//!
//! ```
//! use ogroth::prelude::*;
//!
//! let z = Involution::parse("(1,2)").unwrap();
//! let gc = ortho::gco(&z).unwrap();
//! assert_eq!(gc.get(&Permutation::parse("213").unwrap()), Some(&2));
//! assert_eq!(gc.get(&Permutation::parse("312").unwrap()), Some(&1));
//! ```

pub mod error;
pub mod grothendieck;
pub mod harness;
pub mod involutions;
pub mod ortho;
pub mod permgroup;
pub mod polyring;

pub use error::{Error, Result};

/// Common imports for examples and downstream code.
pub mod prelude {
    pub use crate::error::{Error, Result};
    pub use crate::grothendieck::{self, groth, GrothExpansion};
    pub use crate::involutions::{FpfInvolution, Involution};
    pub use crate::ortho;
    pub use crate::permgroup::Permutation;
    pub use crate::polyring::{Int, MultiPoly};
}
