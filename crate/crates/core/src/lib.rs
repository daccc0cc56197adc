//! Quantum stabilizer codes over finite fields built from symmetric matrices.
//!
//! The stabilizer of a code is `{ w(aᵀDa) U_a V_{La} : a ∈ C }` where `L = D + Dᵀ` is a
//! symmetric matrix over `F_q`, `C` is a subspace of `F_q^n` and `w` is the trace
//! character. This crate provides:
//!
//! - [`gf`]: arithmetic in `F_{p^r}`, the trace map and the additive character.
//! - [`veclin`]: matrices and subspaces over `F_q` (row reduction, kernels, circulants).
//! - [`pauli`]: Weyl operator labels, their phase-exact composition and dense matrices.
//! - [`stabcode`]: code construction, the symplectic dual and exact minimum distance.
//! - [`search`]: circulant scans, α-good matrices and the block construction.
//! - [`verify`]: codeword state vectors, the code projection and Knill–Laflamme checks.
//! - [`puncture`]: `[[n,k,d]] → [[n-1,k+1,d-1]]` for pure codes.
//! - [`descriptor`]: the `.code.json` and `.fqm` file formats.
//!
//! Search loops are data-parallel through rayon when the `parallel` feature is on
//! (the default); `workers = 1` always runs the sequential reference path.
//!
//! ```
//! use fq_stabilizer::gf::FieldCtx;
//! use fq_stabilizer::stabcode::{circulant_code, min_distance, DistanceOptions};
//!
//! let f2 = FieldCtx::prime(2).unwrap();
//! let code = circulant_code(&f2, &[0, 0, 1, 1, 0]).unwrap();
//! let report = min_distance(&code, &DistanceOptions::default()).unwrap();
//! assert_eq!((report.n, report.k, report.d), (5, 1, 3));
//! assert!(report.pure);
//! ```

pub mod descriptor;
pub mod error;
pub mod gf;
pub mod par;
pub mod pauli;
pub mod puncture;
pub mod search;
pub mod stabcode;
pub mod verify;
pub mod veclin;

pub use error::{Error, Result};
pub use gf::{Elem, FieldCtx, PhaseExp};
pub use pauli::{ErrorElement, SympPair};
pub use stabcode::{CodeReport, DistanceMode, DistanceOptions, StabilizerCode};
pub use veclin::{FqMat, Subspace};
