//! Polycyclic point-line configurations: combinatorics, symmetry, voltage
//! lifts and high-precision geometric realization.

pub mod canon;
pub mod celestial;
pub mod config;
pub mod error;
pub mod families;
pub mod geom;
pub mod incidence;
pub mod io;
pub mod perm;
pub mod poly;
pub mod real;
pub mod realize;
pub mod render;
pub mod report;
pub mod scene;
pub mod symmetry;
pub mod synthetic;
pub mod verify;
pub mod voltage;

pub use error::{Error, Result};
