//! Polynomial-time satisfiability engines for the tractable classes.

mod gf2;
mod horn;
mod restrict;
mod twosat;

pub use gf2::{gauss_solve, F2Solution, F2System};
pub use horn::{double_horn_bounds, solve_dual_horn, solve_horn};
pub use restrict::{restrict, PartialAssignment, Restriction};
pub use twosat::solve_2sat;
pub(crate) use twosat::{tarjan_scc, Csr};
