//! Exact construction and verification of planar harmonic polynomials for
//! the rational Dunkl operators of the hyperoctahedral group, together with
//! the spin Calogero eigenfunctions built from them.
//!
//! All arithmetic is exact over arbitrary-precision rationals. Module map:
//!
//! - [`exactalg`]: rationals, sparse polynomials, structured exact division
//! - [`dunkl`]: reflections, the operators `T_i` and their squared-variable
//!   counterparts, the Laplacian, and the one-variable lifting rule
//! - [`pbasis`]: the inhomogeneous `p` basis, its raising/annihilation
//!   expansion, and the formal isomorphism onto monomials in `p_1..p_N`
//! - [`planar`]: generating-function expansion of the `phi`/`psi` tables and
//!   the first-order recurrences between them
//! - [`harmonic`]: the eight degree-indexed harmonic families and their
//!   ladder identities
//! - [`special`]: Pochhammer symbols, terminating hypergeometric sums, the
//!   closed-form special values, and dual-route squared norms
//! - [`calogero`]: Laguerre-dressed eigenfunctions of the conjugated
//!   Calogero Hamiltonian
//! - [`verify`]: deterministic, seedable verification suites over random
//!   rational parameters

pub mod calogero;
pub mod dunkl;
pub mod exactalg;
pub mod harmonic;
pub mod pbasis;
pub mod planar;
pub mod special;
pub mod verify;

pub use exactalg::{MultiPoly, Params, Rational};
