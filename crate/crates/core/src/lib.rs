//! Exact computations around the Bernstein-Gelfand-Gelfand complex on real
//! projective space.
//!
//! * [`weights`] and [`kostant`] give the closed-form combinatorics: Kostant's
//!   cohomology table, E_1 positions, operator orders.
//! * [`bruteforce`] builds explicit representations over the rationals and
//!   recomputes the cohomology from the Koszul complex.
//! * [`riccati`] and [`circle`] are two independent exact engines for the
//!   operator identities behind the round-sphere formulae.
//! * [`report`] assembles everything into text and JSON.

pub mod bruteforce;
pub mod circle;
pub mod error;
pub mod kostant;
pub mod linalg;
pub mod report;
pub mod riccati;
pub mod weights;

pub use error::{Error, Result};
pub use linalg::Q;
pub use weights::DynkinLabels;
