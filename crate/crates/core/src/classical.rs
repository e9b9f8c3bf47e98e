//! Classical Seifert matrices and spun 2-knots.
//!
//! A classical Seifert matrix V satisfies det(V - V^T) = +-1. Spinning the
//! underlying 1-knot yields the Seifert pair (V, V^T), whose Alexander
//! polynomial equals that of the 1-knot.

use num::bigint::BigInt;
use num::{One, Signed};
use thiserror::Error;

use crate::intlinalg::IntMatrix;
use crate::laurent::LaurentPoly;
use crate::seifert::{int_det, SeifertPair};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassicalError {
    #[error("matrix is not a Seifert matrix: det(V - V^T) is not a unit")]
    NotSeifert,
    #[error("matrix must be square")]
    NotSquare,
    #[error("unknown catalog knot: {0}")]
    UnknownKnot(String),
}

/// A Seifert matrix of a classical knot in the 3-sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalSeifertMatrix {
    matrix: IntMatrix,
}

impl ClassicalSeifertMatrix {
    pub fn new(matrix: IntMatrix) -> Result<Self, ClassicalError> {
        if matrix.rows() != matrix.cols() {
            return Err(ClassicalError::NotSquare);
        }
        let skew = matrix.sub(&matrix.transpose()).map_err(|_| ClassicalError::NotSquare)?;
        if !is_unit_int(&int_det(&skew)) {
            return Err(ClassicalError::NotSeifert);
        }
        Ok(ClassicalSeifertMatrix { matrix })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, ClassicalError> {
        ClassicalSeifertMatrix::new(IntMatrix::from_i64_rows(rows))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    /// The Seifert pair (V, V^T) of the spun 2-knot.
    pub fn spun(&self) -> SeifertPair {
        SeifertPair::new(self.matrix.clone(), self.matrix.transpose())
            .expect("square matrices of equal size")
    }

    /// det(tV - V^T), canonicalized. Always nonzero since V - V^T is
    /// unimodular.
    pub fn alexander(&self) -> LaurentPoly {
        self.spun().alexander().expect("det(V - V^T) is a unit")
    }
}

/// Catalog knots with known Seifert matrices.
pub const CATALOG: &[&str] = &["unknot", "trefoil", "figure_eight", "six_one"];

/// Looks up a catalog knot by name. Each entry's Alexander polynomial is
/// checked against its published value on construction.
pub fn catalog(name: &str) -> Result<ClassicalSeifertMatrix, ClassicalError> {
    let (rows, delta): (&[&[i64]], &str) = match name {
        "unknot" => (&[], "1"),
        "trefoil" => (&[&[-1, 1], &[0, -1]], "t^2 - t + 1"),
        "figure_eight" => (&[&[1, 1], &[0, -1]], "-t^2 + 3*t - 1"),
        "six_one" => (&[&[1, 1], &[0, -2]], "-2*t^2 + 5*t - 2"),
        _ => return Err(ClassicalError::UnknownKnot(name.to_string())),
    };
    let m = ClassicalSeifertMatrix::from_i64_rows(rows)?;
    let expected: LaurentPoly = delta.parse().expect("catalog polynomial parses");
    debug_assert_eq!(m.alexander(), expected.canonicalize().unwrap());
    Ok(m)
}

/// The determinant |Delta(-1)| of a catalog knot, a quick sanity invariant.
pub fn knot_determinant(v: &ClassicalSeifertMatrix) -> BigInt {
    v.alexander().value_at_minus_one().abs()
}

fn is_unit_int(x: &BigInt) -> bool {
    x.abs() == BigInt::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn catalog_alexander_polynomials() {
        assert_eq!(catalog("unknot").unwrap().alexander(), LaurentPoly::one());
        assert_eq!(
            catalog("trefoil").unwrap().alexander(),
            p("t^2 - t + 1")
        );
        assert_eq!(
            catalog("figure_eight").unwrap().alexander(),
            p("-t^2 + 3*t - 1").canonicalize().unwrap()
        );
        assert_eq!(
            catalog("six_one").unwrap().alexander(),
            p("-2*t^2 + 5*t - 2").canonicalize().unwrap()
        );
    }

    #[test]
    fn catalog_canonical_value_at_one() {
        for name in CATALOG {
            let d = catalog(name).unwrap().alexander();
            assert_eq!(d.value_at_one(), BigInt::from(1), "{name}");
            assert_eq!(d.min_exp(), 0, "{name}");
        }
    }

    #[test]
    fn knot_determinants() {
        assert_eq!(knot_determinant(&catalog("trefoil").unwrap()), BigInt::from(3));
        assert_eq!(knot_determinant(&catalog("figure_eight").unwrap()), BigInt::from(5));
        assert_eq!(knot_determinant(&catalog("six_one").unwrap()), BigInt::from(9));
    }

    #[test]
    fn unknown_knot_rejected() {
        assert_eq!(
            catalog("granny"),
            Err(ClassicalError::UnknownKnot("granny".to_string()))
        );
    }

    #[test]
    fn non_seifert_matrix_rejected() {
        // V - V^T = [[0, 2], [-2, 0]] has determinant 4
        assert_eq!(
            ClassicalSeifertMatrix::from_i64_rows(&[&[0, 2], &[0, 0]]),
            Err(ClassicalError::NotSeifert)
        );
        assert!(ClassicalSeifertMatrix::new(IntMatrix::zero(2, 3)).is_err());
    }

    #[test]
    fn spun_pair_shape() {
        let v = catalog("trefoil").unwrap();
        let pair = v.spun();
        assert_eq!(pair.size(), 2);
        assert_eq!(*pair.v_minus(), pair.v_plus().transpose());
        assert_eq!(pair.alexander().unwrap(), p("t^2 - t + 1"));
    }
}
