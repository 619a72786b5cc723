pub mod canon;
pub mod catalog;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod graph;
pub mod matroid;
pub mod rc;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Eta, Graph};
pub use matroid::RigidityOracle;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/rigidity-matroid.md")]
    mod rigidity_matroid {}
    #[doc = include_str!("../../../book/src/coning.md")]
    mod coning {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/rank-contributions.md")]
    mod rank_contributions {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/random-graphs.md")]
    mod random_graphs {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/reproducibility.md")]
    mod reproducibility {}
}
