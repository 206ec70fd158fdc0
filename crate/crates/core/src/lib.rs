pub mod bounds;
pub mod cli;
pub mod distance;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod output;
pub mod rational;
pub mod search;
pub mod spectra;

pub use distance::{DistanceMatrix, InvariantReport};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::Graph;
pub use graph6::{parse_graph6, write_graph6};
pub use rational::Rational;
pub use spectra::Spectrum;
