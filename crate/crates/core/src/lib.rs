pub mod cli;
pub mod combinators;
pub mod diagonal;
pub mod finite_topology;
pub mod games;
pub mod groups;
pub mod presets;
pub mod service;
pub mod sorgenfrey;
