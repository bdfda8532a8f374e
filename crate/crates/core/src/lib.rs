//! Congruence toolkit for the coefficients d_k(n) of
//! (q^2;q^2)^k / (q;q)^(3k+1).
//!
//! The crate is organised bottom-up: truncated series over exact or 5-adic
//! rings, eta quotients and their cusp data, the U_l operator, theta-function
//! identities, the localization machinery built on the Hauptmodul x of
//! level 10, and the coefficient scanner.

pub mod ring;
pub mod series;
pub mod eta;
pub mod hecke;
pub mod report;
pub mod theta;
pub mod localize;
pub mod dkscan;
pub mod cli;
