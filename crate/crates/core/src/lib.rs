//! Fuzzy ordered sets over finite residuated lattices.

// Index loops mirror the table formulas.
#![allow(clippy::needless_range_loop)]

pub mod dot;
pub mod error;
pub mod fuzz;
pub mod galois;
pub mod generate;
pub mod lattice;
pub mod laws;
pub mod model;
pub mod order;
pub mod power;
pub mod report;
pub mod search;
pub mod suite;
pub mod tolerance;

pub use error::{Error, Result};
pub use fuzz::{LRelation, LSet, Universe};
pub use lattice::{ChainKind, Degree, ResiduatedLattice};
pub use order::{LOrderedSet, PowerLattice};
pub use report::{Check, Report};

#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $file:literal) => {
            #[doc = include_str!(concat!("../../../book/src/", $file))]
            pub struct $name;
        };
    }
    chapter!(Introduction, "introduction.md");
    chapter!(Lattices, "lattices.md");
    chapter!(FuzzySets, "fuzzy-sets.md");
    chapter!(OrderedSets, "ordered-sets.md");
    chapter!(PowerRelations, "power-relations.md");
    chapter!(Galois, "galois.md");
    chapter!(Tolerances, "tolerances.md");
    chapter!(Suites, "suites.md");
    chapter!(Cli, "cli.md");

    #[doc = include_str!("../../../README.md")]
    pub struct Readme;
}
