pub mod cli;
pub mod error;
pub mod mixed_poly;
pub mod sequences;
pub mod series_core;
pub mod sheffer;
pub mod verify;
