//! Alexander invariants of ribbon 2-knots.
//!
//! The crate computes Alexander polynomials of 2-knots from Seifert matrix
//! pairs, derives such pairs from combinatorial A-ribbon 3-ball
//! presentations, factors the result over Z[t, 1/t] to search for
//! Fox-Milnor witnesses, and evaluates elementary ideals of the Alexander
//! module to obstruct mirror-sum decompositions.

pub mod aribbon;
pub mod classical;
pub mod intlinalg;
pub mod laurent;
pub mod modulecalc;
pub mod seifert;

pub use aribbon::{
    ARibbonPresentation, AribbonError, ConcentricityReport, EtaLinkings, HomologySummary,
    LinkingsReport, Position, PreSing, Region, SeifertBlocks,
};
pub use classical::{catalog, ClassicalError, ClassicalSeifertMatrix, CATALOG};
pub use intlinalg::{
    cokernel_invariants, rank, smith_normal_form, IntMatrix, MatrixError, SmithDecomposition,
};
pub use laurent::{
    factor, factor_with_bound, fox_milnor_witness, Factorization, LaurentError, LaurentPoly,
    DEFAULT_DEGREE_BOUND,
};
pub use modulecalc::{
    evaluate_ideal, ModuleError, ModulePresentation, ObstructionReport, ObstructionVerdict,
};
pub use seifert::{int_det, LaurentMatrix, SeifertError, SeifertPair};

/// Positive or negative push-off side of the Seifert hypersurface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}
