pub mod cut;
pub mod embedding;
pub mod error;
pub mod fixtures;
pub mod gf2;
pub mod graph;
