//! Quadriculated disks: diagonals, cut-and-paste surgery, domino tilings and
//! the exact {0, ±1} triangular factorization of black-to-white matrices.

#![allow(clippy::needless_range_loop)]

pub mod adjacency;
pub mod board;
pub mod check;
pub mod cli;
pub mod corpus;
pub mod cutpaste;
pub mod diagonals;
pub mod disk;
pub mod error;
pub mod glue;
pub mod ldu;
pub mod oracle;
pub mod tilings;

pub use board::{parse_board, render_board, Board};
pub use disk::{census, validate, BoundaryCensus, Color, QuadDisk};
pub use error::{Error, Result};
pub use glue::{parse_glued, render_glued};
