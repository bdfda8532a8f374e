//! Elements p(x)/(1+5x)^n, the two U_5-based operators acting on them, and
//! the 5-adic bookkeeping that carries the main induction.

use serde::Serialize;

pub(crate) mod base_data;
pub mod audit;
pub mod engine;
pub mod hdata;
pub mod modeq;
pub mod numeric;
pub mod pipeline;
pub mod symbolic;
pub mod theorems;
pub mod twostep;
pub mod valuation;
pub mod xpoly;

pub use xpoly::{LocalizedElement, XPoly};

/// The two operators: `Weighted` is f -> U_5(A f), `Plain` is f -> U_5(f).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Op {
    Weighted,
    Plain,
}

impl Op {
    pub const BOTH: [Op; 2] = [Op::Weighted, Op::Plain];

    /// 0 for the weighted operator, 1 for the plain one.
    pub fn index(self) -> u8 {
        match self {
            Op::Weighted => 0,
            Op::Plain => 1,
        }
    }

    pub fn from_index(i: u8) -> Option<Op> {
        match i {
            0 => Some(Op::Weighted),
            1 => Some(Op::Plain),
            _ => None,
        }
    }

    /// Extra denominator exponent: images of x^m/(1+5x)^n sit over (1+5x)^(5n + kappa).
    pub fn kappa(self) -> u32 {
        match self {
            Op::Weighted => 6,
            Op::Plain => 0,
        }
    }

    /// Support of the image of x^m starts at ceil((m + delta)/5).
    pub fn delta(self) -> u32 {
        match self {
            Op::Weighted => 1,
            Op::Plain => 0,
        }
    }

    /// The operator applied to L_alpha to produce L_(alpha+1).
    pub fn for_step(alpha: u32) -> Op {
        if alpha % 2 == 0 {
            Op::Weighted
        } else {
            Op::Plain
        }
    }
}
