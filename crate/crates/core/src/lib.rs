//! Exact symbolic arithmetic for the quantum group SL_q(2,R) at odd roots of
//! unity and its dual U_q(sl(2,R)).

pub mod elem;
pub mod envalg;
pub mod duality;
pub mod error;
pub mod funalg;
pub mod hopf;
pub mod integral;
pub mod report;
pub mod reps;
pub mod scalars;

pub use elem::{Elem, Monomial};
pub use error::{Error, Result};
pub use scalars::{Field, Scalar};
