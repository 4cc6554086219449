//! Spectra and eigenbases of Cayley color graphs.
//!
//! A Cayley color graph `Gamma(G; alpha)` has the elements of a finite group
//! as vertices and weight `alpha(g' g^-1)` on the edge `g -> g'`. This crate
//! builds such graphs on cyclic, abelian, dihedral, metacyclic, semidirect
//! and permutation groups, computes their spectra in closed form from
//! irreducible representations, and certifies the results against the
//! directly assembled adjacency matrix.
//!
//! ```
//! use cayspec::spectra::spectrum_cor33;
//!
//! // triangular prism as a Cayley graph of C3 x| C2
//! let s = spectrum_cor33(3, 2, 2, &[vec![1, 2], vec![0]], false).unwrap();
//! let mut values: Vec<f64> = s.eigenvalues().iter().map(|z| z.re).collect();
//! values.sort_by(f64::total_cmp);
//! assert!((values[5] - 3.0).abs() < 1e-12);
//! ```

pub mod cayley;
pub mod error;
pub mod group;
pub mod numfmt;
pub mod repr;
pub mod roots;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
pub use group::{construct_group, FiniteGroup, GroupElement, GroupKind, GroupSpec};
