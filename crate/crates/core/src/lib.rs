//! Exact pure-braid orbits on Aff(C)-character varieties of the punctured sphere.
#![forbid(unsafe_code)]

pub mod braid;
pub mod charvar;
pub mod classify;
pub mod coalesce;
pub mod connect;
pub mod cyclo;
pub mod eisenstein;
pub mod error;
pub mod linalg;
pub mod rational;
pub mod reflgrp;
pub mod tables;

pub use cyclo::{parse_cyclo, Cyclotomic, ParseError};
pub use error::{Error, Result};
pub use linalg::{Mat, Vector};
pub use rational::Rational;
