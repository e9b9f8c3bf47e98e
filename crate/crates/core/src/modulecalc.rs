//! Alexander module presentations over the Laurent ring.
//!
//! A module presentation is a square matrix P over Z[t, 1/t]; the
//! elementary ideal E_k is generated by the (N - k + 1)-minors, so E_1 is
//! generated by det(P). Ideal membership over the Laurent ring is not
//! decided; evaluation homomorphisms to Z at t = +-1 are provided instead,
//! and the mirror-sum obstruction combines them with Fox-Milnor pairings.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use thiserror::Error;

use crate::laurent::{factor_with_bound, LaurentError, LaurentPoly};
use crate::seifert::{LaurentMatrix, SeifertPair};

/// Total irreducible factor count beyond which pairing enumeration bails.
pub const MAX_PAIRING_FACTORS: u32 = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("ideal index out of range: {0}")]
    IndexOutOfRange(usize),
    #[error("presentation matrix has zero determinant")]
    ZeroDeterminant,
    #[error("too many irreducible factors for pairing enumeration")]
    TooManyFactors,
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// A square presentation matrix of an Alexander module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModulePresentation {
    matrix: LaurentMatrix,
}

impl ModulePresentation {
    pub fn new(matrix: LaurentMatrix) -> Self {
        ModulePresentation { matrix }
    }

    pub fn empty() -> Self {
        ModulePresentation { matrix: LaurentMatrix::empty() }
    }

    pub fn matrix(&self) -> &LaurentMatrix {
        &self.matrix
    }

    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    /// The Levine presentation tV+ - V- of a Seifert pair.
    pub fn from_seifert(s: &SeifertPair) -> Self {
        ModulePresentation { matrix: s.levine_matrix() }
    }

    pub fn det(&self) -> LaurentPoly {
        self.matrix.det()
    }

    /// Entry-wise involution t -> 1/t; presents the mirror image module.
    pub fn mirror(&self) -> Self {
        ModulePresentation { matrix: self.matrix.map_entries(|p| p.involute()) }
    }

    /// Block-diagonal presentation of a connected sum.
    pub fn connected_sum(&self, other: &ModulePresentation) -> Self {
        ModulePresentation { matrix: self.matrix.block_diag(&other.matrix) }
    }

    /// Generators of E_k: all (N - k + 1)-minors, canonicalized, with zeros
    /// and duplicates removed. E_1 = {det P}.
    pub fn elementary_ideal(&self, k: usize) -> Result<Vec<LaurentPoly>, ModuleError> {
        let n = self.size();
        if k == 0 || k > n.max(1) {
            return Err(ModuleError::IndexOutOfRange(k));
        }
        let m = n + 1 - k;
        let mut gens = Vec::new();
        for rows in combinations(n, m) {
            for cols in combinations(n, m) {
                let minor = self.matrix.submatrix(&rows, &cols).det();
                if minor.is_zero() {
                    continue;
                }
                let c = minor.canonicalize().expect("nonzero");
                if !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        Ok(gens)
    }

    /// The mirror-sum decomposition obstruction at the given evaluation
    /// points (t0 = -1 if none are given).
    pub fn mirror_sum_obstruction(
        &self,
        eval_points: &[i64],
        degree_bound: i64,
    ) -> Result<ObstructionReport, ModuleError> {
        let delta = self.det();
        if delta.is_zero() {
            return Err(ModuleError::ZeroDeterminant);
        }
        let delta = delta.canonicalize().expect("nonzero");
        let points: &[i64] = if eval_points.is_empty() { &[-1] } else { eval_points };

        let factorization = factor_with_bound(&delta, degree_bound)?;
        if factorization.factor_count() > MAX_PAIRING_FACTORS {
            return Err(ModuleError::TooManyFactors);
        }
        let pairings = fox_milnor_pairings(&factorization.factors, &delta);

        if pairings.is_empty() {
            return Ok(ObstructionReport {
                verdict: ObstructionVerdict::Inconclusive,
                delta,
                pairings,
                evaluations: vec![],
                note: "Delta itself fails the Fox-Milnor factorization property; \
                       the evaluation obstruction does not apply"
                    .to_string(),
            });
        }

        let e2 = if self.size() >= 2 {
            self.elementary_ideal(2)?
        } else {
            vec![LaurentPoly::one()] // minors of size <= 0: the unit ideal
        };

        let mut evaluations = Vec::new();
        let mut obstructed = false;
        for &t0 in points {
            let e2_value = evaluate_ideal(&e2, t0)?;
            let all_pairings_blocked = pairings.iter().all(|g| {
                let a = eval_abs(g, t0);
                let b = eval_abs(&g.involute(), t0);
                a.gcd(&b) > BigInt::one()
            });
            let here = e2_value == BigInt::one() && all_pairings_blocked;
            obstructed |= here;
            evaluations.push(EvalOutcome { t0, e2_value, all_pairings_blocked, obstructed: here });
        }

        let (verdict, note) = if obstructed {
            (
                ObstructionVerdict::Obstructed,
                "no mirror-sum decomposition exists whose ribbon factor admits a \
                 square integral presentation: E_2 evaluates onto Z while every \
                 Fox-Milnor pairing evaluates into a proper ideal"
                    .to_string(),
            )
        } else {
            (
                ObstructionVerdict::Inconclusive,
                "some Fox-Milnor pairing is compatible with the evaluated ideals"
                    .to_string(),
            )
        };
        Ok(ObstructionReport { verdict, delta, pairings, evaluations, note })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionVerdict {
    Obstructed,
    Inconclusive,
}

impl std::fmt::Display for ObstructionVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ObstructionVerdict::Obstructed => write!(f, "OBSTRUCTED"),
            ObstructionVerdict::Inconclusive => write!(f, "INCONCLUSIVE"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalOutcome {
    pub t0: i64,
    pub e2_value: BigInt,
    pub all_pairings_blocked: bool,
    pub obstructed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub verdict: ObstructionVerdict,
    pub delta: LaurentPoly,
    /// All g with Delta ~ g(t) g(1/t), up to units, as canonical polynomials.
    pub pairings: Vec<LaurentPoly>,
    pub evaluations: Vec<EvalOutcome>,
    pub note: String,
}

/// gcd of |g(t0)| over the generators; 0 if all vanish.
pub fn evaluate_ideal(gens: &[LaurentPoly], t0: i64) -> Result<BigInt, ModuleError> {
    if t0 == 0 {
        return Err(ModuleError::Laurent(LaurentError::ZeroEvaluationPoint));
    }
    let mut d = BigInt::zero();
    for g in gens {
        d = d.gcd(&eval_abs(g, t0));
    }
    Ok(d)
}

/// |g(t0)| after shifting g to minimal exponent 0, so the value is an
/// integer representative of the evaluation up to the unit t0^k.
fn eval_abs(g: &LaurentPoly, t0: i64) -> BigInt {
    if g.is_zero() {
        return BigInt::zero();
    }
    let shifted = g.shifted(-g.min_exp());
    shifted.eval_int(t0).expect("t0 is nonzero").to_integer().abs()
}

/// All canonical g with product(factors) ~ g(t) g(1/t) up to units.
fn fox_milnor_pairings(factors: &[(LaurentPoly, u32)], delta: &LaurentPoly) -> Vec<LaurentPoly> {
    // group factors into canonical classes
    let mut classes: Vec<(LaurentPoly, u32)> = Vec::new();
    for (q, m) in factors {
        let c = q.canonicalize().expect("factors are nonzero");
        match classes.iter_mut().find(|(p, _)| *p == c) {
            Some((_, mult)) => *mult += m,
            None => classes.push((c, *m)),
        }
    }
    // pair each class with its involute class; self-paired classes force an
    // even split, conjugate pairs contribute one free split each
    let mut partials = vec![LaurentPoly::one()];
    let mut used = vec![false; classes.len()];
    for i in 0..classes.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let (q, m) = &classes[i];
        let conj = q.involute().canonicalize().expect("nonzero");
        if conj == *q {
            if m % 2 != 0 {
                return vec![];
            }
            let half = pow(q, m / 2);
            for p in &mut partials {
                *p = &*p * &half;
            }
        } else {
            let Some(j) = classes.iter().position(|(p, _)| *p == conj) else {
                return vec![];
            };
            if used[j] || classes[j].1 != *m {
                return vec![];
            }
            used[j] = true;
            let mut next = Vec::new();
            for a in 0..=*m {
                let choice = &pow(q, a) * &pow(&conj, m - a);
                for p in &partials {
                    next.push(p * &choice);
                }
            }
            partials = next;
        }
    }
    for g in &partials {
        let prod = g * &g.involute();
        debug_assert!(prod.equals_up_to_unit(delta), "pairing must reassemble delta");
    }
    let _ = delta;
    partials.into_iter().map(|g| g.canonicalize().expect("nonzero")).collect()
}

fn pow(p: &LaurentPoly, e: u32) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for _ in 0..e {
        acc = &acc * p;
    }
    acc
}

/// All size-m index subsets of 0..n in lexicographic order.
fn combinations(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, m, cur, out);
            cur.pop();
        }
    }
    rec(0, n, m, &mut cur, &mut out);
    out
}
