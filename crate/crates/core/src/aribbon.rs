//! Combinatorial model of an A-ribbon 3-ball presentation.
//!
//! A presentation records, for each singularity R_i, the orientation sign
//! of its boundary pre-singularity and the relative position of every
//! pre-singularity with respect to R_i: inside the ball piece B(R_i)
//! or inside the homology torus T(R_i) with a homology coefficient k.
//! From this data the Seifert matrix blocks U± and W± are derived, the
//! linkings and concentricity conditions are checked, and the homology of
//! the associated Seifert hypersurface is computed.

use num::bigint::BigInt;
use thiserror::Error;

use crate::intlinalg::{cokernel_invariants, rank, IntMatrix};
use crate::laurent::LaurentPoly;
use crate::seifert::{LaurentMatrix, SeifertPair};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AribbonError {
    #[error("invalid presentation: {0}")]
    Invalid(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(usize),
    #[error("the position of R_i's boundary pre-singularity relative to R_i itself is not a valid query")]
    SelfBoundaryQuery,
    #[error("Seifert matrix blocks require a trivial linking matrix Lk_S")]
    NonzeroLinkingMatrix,
    #[error("concentricity check requires eta linking data")]
    MissingEtaData,
    #[error("linkings condition does not hold")]
    LinkingsConditionFails,
}

/// Side of a boundary pre-singularity R_i^d on which another
/// pre-singularity lies: the ball piece B(R_i) or the torus piece T(R_i).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    InBall,
    InTorus,
}

/// Relative position of a pre-singularity with respect to some R_i:
/// the region, and the homology coefficient k of its core in H_1(T(R_i))
/// (forced to 1 inside the ball piece).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Position {
    pub region: Region,
    pub class_multiple: i64,
}

impl Position {
    pub fn ball() -> Self {
        Position { region: Region::InBall, class_multiple: 1 }
    }

    pub fn torus(k: i64) -> Self {
        Position { region: Region::InTorus, class_multiple: k }
    }

    /// The linking l_i(R_j^star): 1 in the ball piece, k in the torus piece.
    pub fn linking(&self) -> i64 {
        match self.region {
            Region::InBall => 1,
            Region::InTorus => self.class_multiple,
        }
    }

    fn validate(&self) -> Result<(), AribbonError> {
        if self.region == Region::InBall && self.class_multiple != 1 {
            return Err(AribbonError::Invalid(
                "class multiple must be 1 inside a ball piece".to_string(),
            ));
        }
        Ok(())
    }
}

/// Which pre-singularity of a singularity is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PreSing {
    Boundary,
    Interior,
}

/// Per-pre-singularity linking numbers with an essential arc eta, for the
/// concentricity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaLinkings {
    pub boundary: Vec<i64>,
    pub interior: Vec<i64>,
}

/// Combinatorial data of an A-ribbon 3-ball with n singularities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ARibbonPresentation {
    n: usize,
    eps: Vec<i64>,
    /// pos_boundary[i][j]: position of R_j^d relative to R_i. The diagonal
    /// is implicit (l_i(R_i^d) = 1) and normalized to the ball piece.
    pos_boundary: Vec<Vec<Position>>,
    /// pos_interior[i][j]: position of R_j^o relative to R_i.
    pos_interior: Vec<Vec<Position>>,
    lk_matrix: IntMatrix,
    pub star_plus: Option<IntMatrix>,
    pub star_minus: Option<IntMatrix>,
    pub eta_linkings: Option<EtaLinkings>,
}

impl ARibbonPresentation {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        eps: Vec<i64>,
        mut pos_boundary: Vec<Vec<Position>>,
        pos_interior: Vec<Vec<Position>>,
        lk_matrix: IntMatrix,
        star_plus: Option<IntMatrix>,
        star_minus: Option<IntMatrix>,
        eta_linkings: Option<EtaLinkings>,
    ) -> Result<Self, AribbonError> {
        let n = eps.len();
        if eps.iter().any(|&e| e != 1 && e != -1) {
            return Err(AribbonError::Invalid("orientation signs must be +-1".to_string()));
        }
        let check_table = |t: &Vec<Vec<Position>>, name: &str| -> Result<(), AribbonError> {
            if t.len() != n || t.iter().any(|r| r.len() != n) {
                return Err(AribbonError::Invalid(format!("{name} table must be {n}x{n}")));
            }
            for r in t {
                for p in r {
                    p.validate()?;
                }
            }
            Ok(())
        };
        check_table(&pos_boundary, "boundary position")?;
        check_table(&pos_interior, "interior position")?;
        for (i, row) in pos_boundary.iter_mut().enumerate() {
            row[i] = Position::ball(); // l_i(R_i^d) = 1, never stored
        }
        if lk_matrix.rows() != n || lk_matrix.cols() != n {
            return Err(AribbonError::Invalid(format!("linking matrix must be {n}x{n}")));
        }
        if !lk_matrix.is_symmetric() {
            return Err(AribbonError::Invalid("linking matrix must be symmetric".to_string()));
        }
        for (m, name) in [(&star_plus, "star_plus"), (&star_minus, "star_minus")] {
            if let Some(m) = m {
                if m.rows() != n || m.cols() != n {
                    return Err(AribbonError::Invalid(format!("{name} block must be {n}x{n}")));
                }
            }
        }
        if let Some(eta) = &eta_linkings {
            if eta.boundary.len() != n || eta.interior.len() != n {
                return Err(AribbonError::Invalid(format!("eta linkings must have {n} entries each")));
            }
        }
        Ok(ARibbonPresentation {
            n,
            eps,
            pos_boundary,
            pos_interior,
            lk_matrix,
            star_plus,
            star_minus,
            eta_linkings,
        })
    }

    /// The degenerate presentation with no singularities: the unknot.
    pub fn unknot() -> Self {
        ARibbonPresentation::new(vec![], vec![], vec![], IntMatrix::zero(0, 0), None, None, None)
            .unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn eps(&self) -> &[i64] {
        &self.eps
    }

    pub fn lk_matrix(&self) -> &IntMatrix {
        &self.lk_matrix
    }

    pub fn position(&self, i: usize, j: usize, star: PreSing) -> Position {
        match star {
            PreSing::Boundary => self.pos_boundary[i][j],
            PreSing::Interior => self.pos_interior[i][j],
        }
    }

    pub fn pos_boundary(&self) -> &Vec<Vec<Position>> {
        &self.pos_boundary
    }

    pub fn pos_interior(&self) -> &Vec<Vec<Position>> {
        &self.pos_interior
    }

    fn check_index(&self, i: usize) -> Result<(), AribbonError> {
        if i >= self.n {
            return Err(AribbonError::IndexOutOfRange(i));
        }
        Ok(())
    }

    fn require_trivial_lk(&self) -> Result<(), AribbonError> {
        if self.lk_matrix.is_zero() {
            Ok(())
        } else {
            Err(AribbonError::NonzeroLinkingMatrix)
        }
    }

    /// The direction sign of the arc y_i at its boundary endpoint: equal to
    /// eps_i when R_i^o lies in the ball piece, opposite otherwise (the arc
    /// approaches R_i^d from the side containing R_i^o).
    pub fn derive_epsilon_y(&self, i: usize) -> i64 {
        match self.pos_interior[i][i].region {
            Region::InBall => self.eps[i],
            Region::InTorus => -self.eps[i],
        }
    }

    /// The collar side sign of Y_i^d: always -eps_i, since Y_i^d is a disk
    /// properly embedded in B(R_i).
    pub fn derive_epsilon_hat(&self, i: usize) -> i64 {
        -self.eps[i]
    }

    /// The algebraic intersection <R_i^d, y_j> for i != j.
    pub fn intersection_r_y(&self, i: usize, j: usize) -> Result<i64, AribbonError> {
        self.check_index(i)?;
        self.check_index(j)?;
        assert_ne!(i, j, "intersection_r_y is only defined for i != j");
        let interior = self.pos_interior[i][j].region;
        let boundary = self.pos_boundary[i][j].region;
        Ok(match (interior, boundary) {
            (Region::InBall, Region::InBall) | (Region::InTorus, Region::InTorus) => 0,
            (Region::InBall, Region::InTorus) => self.eps[i],
            (Region::InTorus, Region::InBall) => -self.eps[i],
        })
    }

    /// The algebraic intersection <Y_j^star, cocore(R_i^d)>, defined for
    /// (j, star) != (i, boundary).
    pub fn intersection_y_cocore(
        &self,
        j: usize,
        star: PreSing,
        i: usize,
    ) -> Result<i64, AribbonError> {
        self.check_index(i)?;
        self.check_index(j)?;
        if j == i && star == PreSing::Boundary {
            return Err(AribbonError::SelfBoundaryQuery);
        }
        let pos = self.position(i, j, star);
        Ok(match pos.region {
            Region::InBall => 0,
            Region::InTorus => self.eps[i] * pos.linking(),
        })
    }

    /// The block U_sign = (lk(X_i, y_j^sign)). Off-diagonal entries do not
    /// depend on the sign.
    pub fn build_u(&self, sign: crate::Sign) -> Result<IntMatrix, AribbonError> {
        self.require_trivial_lk()?;
        let n = self.n;
        let mut u = IntMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = if i == j {
                    let eps_y = self.derive_epsilon_y(i);
                    match sign {
                        crate::Sign::Plus => {
                            if eps_y == -1 {
                                -1
                            } else {
                                0
                            }
                        }
                        crate::Sign::Minus => {
                            if eps_y == -1 {
                                0
                            } else {
                                1
                            }
                        }
                    }
                } else {
                    self.intersection_r_y(i, j)?
                };
                u[(i, j)] = BigInt::from(v);
            }
        }
        Ok(u)
    }

    /// The block W_sign = (lk(Y_i, x_j^sign)), with Y_i = Y_i^d - Y_i^o.
    pub fn build_w(&self, sign: crate::Sign) -> Result<IntMatrix, AribbonError> {
        self.require_trivial_lk()?;
        let n = self.n;
        let mut w = IntMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = if i == j {
                    let rho = match (sign, self.derive_epsilon_hat(i)) {
                        (crate::Sign::Plus, 1) => 0,
                        (crate::Sign::Plus, _) => 1,
                        (crate::Sign::Minus, 1) => -1,
                        (crate::Sign::Minus, _) => 0,
                    };
                    -self.intersection_y_cocore(i, PreSing::Interior, i)? + rho
                } else {
                    self.intersection_y_cocore(i, PreSing::Boundary, j)?
                        - self.intersection_y_cocore(i, PreSing::Interior, j)?
                };
                w[(i, j)] = BigInt::from(v);
            }
        }
        Ok(w)
    }

    pub fn seifert_blocks(&self) -> Result<SeifertBlocks, AribbonError> {
        Ok(SeifertBlocks {
            u_plus: self.build_u(crate::Sign::Plus)?,
            u_minus: self.build_u(crate::Sign::Minus)?,
            w_plus: self.build_w(crate::Sign::Plus)?,
            w_minus: self.build_w(crate::Sign::Minus)?,
            star_plus: self.star_plus.clone(),
            star_minus: self.star_minus.clone(),
        })
    }

    /// Assembles the 2n x 2n Seifert pair with blocks [[0, U], [W, S]];
    /// the star blocks default to zero.
    pub fn assemble_seifert_pair(&self) -> Result<SeifertPair, AribbonError> {
        Ok(self.seifert_blocks()?.assemble())
    }

    /// The Alexander polynomial det(tU+ - U-) det(tW+ - W-), canonicalized.
    /// Equals the Alexander polynomial of the assembled pair up to units,
    /// for any choice of star blocks.
    pub fn alexander(&self) -> Result<LaurentPoly, AribbonError> {
        Ok(self.seifert_blocks()?.alexander())
    }

    /// Checks the linkings condition both by definition and through the
    /// Seifert blocks (W+- = transpose(U-+)); the two verdicts agree.
    pub fn check_linkings_condition(&self) -> LinkingsReport {
        let mut witness = None;
        let mut holds = true;
        'outer: for i in 0..self.n {
            for j in 0..self.n {
                let lb = if i == j { 1 } else { self.pos_boundary[i][j].linking() };
                let lo = self.pos_interior[i][j].linking();
                if lb != lo {
                    holds = false;
                    witness = Some((i, j));
                    break 'outer;
                }
            }
        }
        let trivial_lk = self.lk_matrix.is_zero();
        if !trivial_lk {
            holds = false;
        }
        let matrix_check = if trivial_lk {
            let blocks = self.seifert_blocks().expect("lk is trivial");
            Some(blocks.matrix_linkings_check())
        } else {
            None
        };
        LinkingsReport { holds, matrix_check, witness, trivial_lk }
    }

    /// Concentricity: every supplied eta linking is 1 and Lk_S = 0.
    pub fn check_concentricity(&self) -> Result<ConcentricityReport, AribbonError> {
        let eta = self.eta_linkings.as_ref().ok_or(AribbonError::MissingEtaData)?;
        let all_ones =
            eta.boundary.iter().chain(eta.interior.iter()).all(|&l| l == 1);
        let trivial_lk = self.lk_matrix.is_zero();
        Ok(ConcentricityReport { holds: all_ones && trivial_lk, all_ones, trivial_lk })
    }

    /// Homology of the associated Seifert hypersurface:
    /// H1 = Z^n + Z^n / Lk_S Z^n, H2 = Z^(2n - rank Lk_S).
    pub fn homology(&self) -> HomologySummary {
        let (free, torsion) = cokernel_invariants(&self.lk_matrix).expect("lk matrix is square");
        let s = rank(&self.lk_matrix);
        HomologySummary {
            h1_free_rank: self.n + free,
            h1_torsion: torsion,
            h2_rank: 2 * self.n - s,
        }
    }

    /// Under the linkings condition, f = det(tU+ - U-) satisfies
    /// Delta ~ f(t) f(1/t).
    pub fn fox_milnor_from_linkings(&self) -> Result<LaurentPoly, AribbonError> {
        if !self.check_linkings_condition().holds {
            return Err(AribbonError::LinkingsConditionFails);
        }
        let blocks = self.seifert_blocks()?;
        Ok(levine_block_det(&blocks.u_plus, &blocks.u_minus))
    }
}

/// The Seifert matrix blocks of a presentation with trivial Lk_S.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertBlocks {
    pub u_plus: IntMatrix,
    pub u_minus: IntMatrix,
    pub w_plus: IntMatrix,
    pub w_minus: IntMatrix,
    pub star_plus: Option<IntMatrix>,
    pub star_minus: Option<IntMatrix>,
}

impl SeifertBlocks {
    pub fn new(
        u_plus: IntMatrix,
        u_minus: IntMatrix,
        w_plus: IntMatrix,
        w_minus: IntMatrix,
    ) -> Result<Self, AribbonError> {
        let n = u_plus.rows();
        for m in [&u_plus, &u_minus, &w_plus, &w_minus] {
            if m.rows() != n || m.cols() != n {
                return Err(AribbonError::Invalid(format!("all blocks must be {n}x{n}")));
            }
        }
        Ok(SeifertBlocks { u_plus, u_minus, w_plus, w_minus, star_plus: None, star_minus: None })
    }

    pub fn n(&self) -> usize {
        self.u_plus.rows()
    }

    /// [[0, U], [W, S]] with S defaulting to zero.
    pub fn assemble(&self) -> SeifertPair {
        let n = self.n();
        let build = |u: &IntMatrix, w: &IntMatrix, s: &Option<IntMatrix>| {
            let mut v = IntMatrix::zero(2 * n, 2 * n);
            for i in 0..n {
                for j in 0..n {
                    v[(i, n + j)] = u[(i, j)].clone();
                    v[(n + i, j)] = w[(i, j)].clone();
                    if let Some(s) = s {
                        v[(n + i, n + j)] = s[(i, j)].clone();
                    }
                }
            }
            v
        };
        let v_plus = build(&self.u_plus, &self.w_plus, &self.star_plus);
        let v_minus = build(&self.u_minus, &self.w_minus, &self.star_minus);
        SeifertPair::new(v_plus, v_minus).expect("blocks are square of equal size")
    }

    /// det(tU+ - U-) det(tW+ - W-), canonicalized; 1 for n = 0.
    /// Zero determinants are kept as the zero polynomial.
    pub fn alexander(&self) -> LaurentPoly {
        let fu = levine_block_det(&self.u_plus, &self.u_minus);
        let fw = levine_block_det(&self.w_plus, &self.w_minus);
        let product = &fu * &fw;
        if product.is_zero() {
            product
        } else {
            product.canonicalize().unwrap()
        }
    }

    /// The matrix form of the linkings condition:
    /// W+ = transpose(U-) and W- = transpose(U+).
    pub fn matrix_linkings_check(&self) -> bool {
        self.w_plus == self.u_minus.transpose() && self.w_minus == self.u_plus.transpose()
    }
}

/// det(tA - B) as a Laurent polynomial.
pub fn levine_block_det(a: &IntMatrix, b: &IntMatrix) -> LaurentPoly {
    let n = a.rows();
    let rows: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let plus = LaurentPoly::from_coeffs(1, vec![a[(i, j)].clone()]);
                    let minus = LaurentPoly::from_coeffs(0, vec![b[(i, j)].clone()]);
                    &plus - &minus
                })
                .collect()
        })
        .collect();
    LaurentMatrix::from_rows(rows).unwrap().det()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkingsReport {
    /// Definitional verdict: l_i(R_j^d) = l_i(R_j^o) for all i, j and
    /// trivial Lk_S.
    pub holds: bool,
    /// W+- = transpose(U-+); only defined when Lk_S = 0.
    pub matrix_check: Option<bool>,
    /// First mismatching (i, j), if any.
    pub witness: Option<(usize, usize)>,
    pub trivial_lk: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcentricityReport {
    pub holds: bool,
    pub all_ones: bool,
    pub trivial_lk: bool,
}

/// Betti numbers and torsion of the Seifert hypersurface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologySummary {
    pub h1_free_rank: usize,
    pub h1_torsion: Vec<BigInt>,
    pub h2_rank: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Sign;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    /// n = 1 presentation with given eps and interior self-position.
    fn single(eps: i64, interior: Position) -> ARibbonPresentation {
        ARibbonPresentation::new(
            vec![eps],
            vec![vec![Position::ball()]],
            vec![vec![interior]],
            IntMatrix::zero(1, 1),
            None,
            None,
            None,
        )
        .unwrap()
    }

    fn entry(m: &IntMatrix, i: usize, j: usize) -> i64 {
        i64::try_from(&m[(i, j)]).unwrap()
    }

    #[test]
    fn epsilon_y_cases() {
        assert_eq!(single(1, Position::ball()).derive_epsilon_y(0), 1);
        assert_eq!(single(1, Position::torus(2)).derive_epsilon_y(0), -1);
        assert_eq!(single(-1, Position::ball()).derive_epsilon_y(0), -1);
    }

    #[test]
    fn epsilon_hat_cases() {
        assert_eq!(single(1, Position::ball()).derive_epsilon_hat(0), -1);
        assert_eq!(single(-1, Position::ball()).derive_epsilon_hat(0), 1);
    }

    fn two_sing(
        eps: [i64; 2],
        bd01: Position,
        int01: Position,
    ) -> ARibbonPresentation {
        // positions of R_1^* relative to R_0; everything else in the ball
        ARibbonPresentation::new(
            eps.to_vec(),
            vec![vec![Position::ball(), bd01], vec![Position::ball(), Position::ball()]],
            vec![vec![Position::ball(), int01], vec![Position::ball(), Position::ball()]],
            IntMatrix::zero(2, 2),
            None,
            None,
            None,
        )
        .unwrap()
    }

    #[test]
    fn intersection_r_y_cases() {
        let same_side = two_sing([1, 1], Position::ball(), Position::ball());
        assert_eq!(same_side.intersection_r_y(0, 1).unwrap(), 0);
        let split = two_sing([1, 1], Position::torus(1), Position::ball());
        assert_eq!(split.intersection_r_y(0, 1).unwrap(), 1);
        let split_neg = two_sing([-1, 1], Position::ball(), Position::torus(1));
        assert_eq!(split_neg.intersection_r_y(0, 1).unwrap(), 1);
    }

    #[test]
    fn intersection_y_cocore_cases() {
        let in_ball = two_sing([1, 1], Position::ball(), Position::ball());
        assert_eq!(in_ball.intersection_y_cocore(1, PreSing::Boundary, 0).unwrap(), 0);
        let in_torus = two_sing([1, 1], Position::torus(2), Position::ball());
        assert_eq!(in_torus.intersection_y_cocore(1, PreSing::Boundary, 0).unwrap(), 2);
        let neg = two_sing([-1, 1], Position::torus(1), Position::ball());
        assert_eq!(neg.intersection_y_cocore(1, PreSing::Boundary, 0).unwrap(), -1);
        assert_eq!(
            in_ball.intersection_y_cocore(0, PreSing::Boundary, 0),
            Err(AribbonError::SelfBoundaryQuery)
        );
        assert!(in_ball.intersection_y_cocore(5, PreSing::Interior, 0).is_err());
    }

    #[test]
    fn blocks_single_in_ball() {
        let pres = single(1, Position::ball());
        assert_eq!(entry(&pres.build_u(Sign::Plus).unwrap(), 0, 0), 0);
        assert_eq!(entry(&pres.build_u(Sign::Minus).unwrap(), 0, 0), 1);
        assert_eq!(entry(&pres.build_w(Sign::Plus).unwrap(), 0, 0), 1);
        assert_eq!(entry(&pres.build_w(Sign::Minus).unwrap(), 0, 0), 0);
    }

    #[test]
    fn blocks_single_in_torus_k2() {
        let pres = single(1, Position::torus(2));
        assert_eq!(entry(&pres.build_u(Sign::Plus).unwrap(), 0, 0), -1);
        assert_eq!(entry(&pres.build_u(Sign::Minus).unwrap(), 0, 0), 0);
        assert_eq!(entry(&pres.build_w(Sign::Plus).unwrap(), 0, 0), -1);
        assert_eq!(entry(&pres.build_w(Sign::Minus).unwrap(), 0, 0), -2);
    }

    #[test]
    fn blocks_single_negative_eps() {
        let pres = single(-1, Position::ball());
        assert_eq!(entry(&pres.build_w(Sign::Plus).unwrap(), 0, 0), 0);
        assert_eq!(entry(&pres.build_w(Sign::Minus).unwrap(), 0, 0), -1);
    }

    #[test]
    fn assemble_block_placement() {
        let pres = single(1, Position::ball());
        let pair = pres.assemble_seifert_pair().unwrap();
        assert_eq!(pair.size(), 2);
        assert_eq!(entry(pair.v_plus(), 0, 0), 0);
        assert_eq!(entry(pair.v_plus(), 0, 1), 0);
        assert_eq!(entry(pair.v_plus(), 1, 0), 1);
        assert_eq!(entry(pair.v_minus(), 0, 1), 1);
        assert_eq!(entry(pair.v_minus(), 1, 0), 0);
    }

    #[test]
    fn assemble_empty_presentation() {
        let pair = ARibbonPresentation::unknot().assemble_seifert_pair().unwrap();
        assert_eq!(pair.size(), 0);
    }

    #[test]
    fn alexander_single_examples() {
        let unknotted = single(1, Position::ball());
        assert_eq!(unknotted.alexander().unwrap(), LaurentPoly::one());
        let twisted = single(1, Position::torus(2));
        assert_eq!(twisted.alexander().unwrap(), p("2 - t").canonicalize().unwrap());
    }

    #[test]
    fn alexander_paper_example_blocks() {
        let blocks = SeifertBlocks::new(
            IntMatrix::from_i64_rows(&[&[0, 0], &[0, -1]]),
            IntMatrix::from_i64_rows(&[&[1, 0], &[0, 0]]),
            IntMatrix::from_i64_rows(&[&[1, -1], &[1, 1]]),
            IntMatrix::from_i64_rows(&[&[0, -1], &[1, 0]]),
        )
        .unwrap();
        assert_eq!(
            levine_block_det(&blocks.u_plus, &blocks.u_minus),
            p("t")
        );
        assert_eq!(
            levine_block_det(&blocks.w_plus, &blocks.w_minus),
            p("2*t^2 - 2*t + 1")
        );
        assert_eq!(blocks.alexander(), p("2*t^2 - 2*t + 1"));
        assert!(!blocks.matrix_linkings_check());
    }

    #[test]
    fn linkings_condition_cases() {
        let good = single(1, Position::ball());
        let r = good.check_linkings_condition();
        assert!(r.holds);
        assert_eq!(r.matrix_check, Some(true));

        let bad = single(1, Position::torus(2));
        let r = bad.check_linkings_condition();
        assert!(!r.holds);
        assert_eq!(r.matrix_check, Some(false));
        assert_eq!(r.witness, Some((0, 0)));
    }

    #[test]
    fn linkings_fails_with_nonzero_lk() {
        let pres = ARibbonPresentation::new(
            vec![1],
            vec![vec![Position::ball()]],
            vec![vec![Position::ball()]],
            IntMatrix::from_i64_rows(&[&[2]]),
            None,
            None,
            None,
        )
        .unwrap();
        let r = pres.check_linkings_condition();
        assert!(!r.holds);
        assert_eq!(r.matrix_check, None);
        assert!(pres.build_u(Sign::Plus).is_err());
    }

    #[test]
    fn concentricity_cases() {
        let mut pres = single(1, Position::ball());
        assert_eq!(pres.check_concentricity(), Err(AribbonError::MissingEtaData));
        pres.eta_linkings = Some(EtaLinkings { boundary: vec![1], interior: vec![1] });
        assert!(pres.check_concentricity().unwrap().holds);
        pres.eta_linkings = Some(EtaLinkings { boundary: vec![1], interior: vec![0] });
        assert!(!pres.check_concentricity().unwrap().holds);
    }

    #[test]
    fn concentricity_fails_with_nonzero_lk() {
        let mut pres = ARibbonPresentation::new(
            vec![1],
            vec![vec![Position::ball()]],
            vec![vec![Position::ball()]],
            IntMatrix::from_i64_rows(&[&[2]]),
            None,
            None,
            None,
        )
        .unwrap();
        pres.eta_linkings = Some(EtaLinkings { boundary: vec![1], interior: vec![1] });
        assert!(!pres.check_concentricity().unwrap().holds);
    }

    #[test]
    fn homology_examples() {
        let zero2 = ARibbonPresentation::new(
            vec![1, 1],
            vec![vec![Position::ball(); 2]; 2],
            vec![vec![Position::ball(); 2]; 2],
            IntMatrix::zero(2, 2),
            None,
            None,
            None,
        )
        .unwrap();
        let h = zero2.homology();
        assert_eq!((h.h1_free_rank, h.h1_torsion.len(), h.h2_rank), (4, 0, 4));

        let hopf = ARibbonPresentation::new(
            vec![1, 1],
            vec![vec![Position::ball(); 2]; 2],
            vec![vec![Position::ball(); 2]; 2],
            IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]),
            None,
            None,
            None,
        )
        .unwrap();
        let h = hopf.homology();
        assert_eq!((h.h1_free_rank, h.h1_torsion.len(), h.h2_rank), (2, 0, 2));

        let double = ARibbonPresentation::new(
            vec![1],
            vec![vec![Position::ball()]],
            vec![vec![Position::ball()]],
            IntMatrix::from_i64_rows(&[&[2]]),
            None,
            None,
            None,
        )
        .unwrap();
        let h = double.homology();
        assert_eq!(h.h1_free_rank, 1);
        assert_eq!(h.h1_torsion, vec![BigInt::from(2)]);
        assert_eq!(h.h2_rank, 1);
    }

    #[test]
    fn fox_milnor_from_linkings_single() {
        let pres = single(1, Position::ball());
        let f = pres.fox_milnor_from_linkings().unwrap();
        assert!(f.equals_up_to_unit(&LaurentPoly::one()));
        let bad = single(1, Position::torus(2));
        assert_eq!(bad.fox_milnor_from_linkings(), Err(AribbonError::LinkingsConditionFails));
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(ARibbonPresentation::new(
            vec![2],
            vec![vec![Position::ball()]],
            vec![vec![Position::ball()]],
            IntMatrix::zero(1, 1),
            None,
            None,
            None,
        )
        .is_err());
        assert!(ARibbonPresentation::new(
            vec![1],
            vec![vec![Position { region: Region::InBall, class_multiple: 2 }]],
            vec![vec![Position::ball()]],
            IntMatrix::zero(1, 1),
            None,
            None,
            None,
        )
        .is_err());
        assert!(ARibbonPresentation::new(
            vec![1, 1],
            vec![vec![Position::ball(); 2]; 2],
            vec![vec![Position::ball(); 2]; 2],
            IntMatrix::from_i64_rows(&[&[0, 1], &[2, 0]]),
            None,
            None,
            None,
        )
        .is_err());
    }
}
