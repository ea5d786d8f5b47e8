//! Four-valued paraconsistent and paracomplete logics: truth tables, finite
//! matrices, twist structures, Hilbert proof checking and first-order
//! structures.

pub mod budget;
pub mod cli;
pub mod fol;
pub mod hilbert;
pub mod lattice;
pub mod matrix;
pub mod syntax;
pub mod twist;
