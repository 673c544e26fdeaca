//! Exact computational algebra for Mackey modules over Green functors.
//!
//! The library works with finite groups of small order (multiplication
//! tables, default limit 48) and keeps every computation exact: integer
//! matrices with Smith normal forms, arbitrary-precision rationals, and
//! cyclotomic fields in the power basis.
//!
//! The main pipeline goes from a finite group to:
//!
//! * its subgroup lattice, Weyl groups and double cosets ([`group`]),
//! * exact character tables of all subgroups ([`chartab`]),
//! * Mackey functors, Green functors and Mackey modules with full axiom
//!   validators ([`mackey`]),
//! * Brauer quotients carrying Weyl-group and residual ring actions,
//!   skew group rings, the splitting functor and its right adjoint
//!   ([`brauer`]),
//! * tensor products of Mackey modules and the monoidal comparison maps
//!   ([`boxprod`]),
//! * the cyclotomic model of the category of modules split along
//!   conjugacy classes of cyclic subgroups ([`cell`]).
//!
//! Every major capability has a runnable example under `examples/`, and
//! the `mackey` binary exposes the same checks as subcommands producing
//! machine-readable reports.

pub mod boxprod;
pub mod brauer;
pub mod cell;
pub mod chartab;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod linalg;
pub mod mackey;
pub mod report;

pub use error::{Error, Result};
