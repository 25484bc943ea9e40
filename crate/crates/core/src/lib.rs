//! Exact computation of Schur elements of Ariki-Koike algebras.
//!
//! Three independent published formulas are implemented over exact sparse
//! Laurent polynomials with arbitrary-precision integer coefficients:
//!
//! - the cancellation-free product form ([`schur::schur_factored`]),
//! - the hook/content product form ([`schur::schur_mathas`]),
//! - the beta-number symbol form ([`schur::schur_gim`]).
//!
//! [`verify`] cross-checks them pairwise over whole enumeration sweeps,
//! and [`schur::semisimple_at`] ties vanishing of Schur elements at exact
//! rational specializations to the semisimplicity criterion polynomial.
//!
//! Sweeps run data-parallel under the default `parallel` feature (rayon)
//! and fall back to sequential execution without it; results are reduced
//! in enumeration order, so output never depends on scheduling.

pub mod combinatorics;
pub mod polynomial;
pub mod schur;
pub mod sweep;
pub mod verify;
