//! Exact arithmetic in the ring of integer Laurent polynomials Z[t, t^-1].
//!
//! Alexander polynomials live in this ring and are only defined up to a
//! unit `±t^k`; equality of invariants always goes through [`LaurentPoly::canonicalize`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use thiserror::Error;

mod factor;
mod parse;

pub use factor::{factor, factor_with_bound, fox_milnor_witness, Factorization, DEFAULT_DEGREE_BOUND};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("evaluation point must be nonzero")]
    ZeroEvaluationPoint,
    #[error("degree {degree} exceeds the factorization bound {bound}")]
    DegreeTooLarge { degree: i64, bound: i64 },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// An integer Laurent polynomial, stored as a dense coefficient window.
///
/// Represents `sum coeffs[i] * t^(min_exp + i)`. The window is trimmed:
/// `coeffs` is empty iff the polynomial is zero, otherwise its first and
/// last entries are nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { min_exp: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        LaurentPoly::from_coeffs(0, vec![c.into()])
    }

    /// The monomial `c * t^exp`.
    pub fn term<T: Into<BigInt>>(c: T, exp: i64) -> Self {
        LaurentPoly::from_coeffs(exp, vec![c.into()])
    }

    pub fn t() -> Self {
        LaurentPoly::term(1, 1)
    }

    /// Builds a polynomial from a coefficient window, trimming zeros at
    /// both ends.
    pub fn from_coeffs(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { min_exp, coeffs };
        p.trim();
        p
    }

    pub fn from_i64_coeffs(min_exp: i64, coeffs: &[i64]) -> Self {
        LaurentPoly::from_coeffs(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        let leading_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if leading_zeros > 0 {
            self.coeffs.drain(..leading_zeros);
            self.min_exp += leading_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn max_exp(&self) -> i64 {
        self.min_exp + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        if self.is_zero() || exp < self.min_exp || exp > self.max_exp() {
            BigInt::zero()
        } else {
            self.coeffs[(exp - self.min_exp) as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Degree of the coefficient window (max_exp - min_exp); 0 for zero.
    pub fn span(&self) -> i64 {
        if self.is_zero() { 0 } else { self.coeffs.len() as i64 - 1 }
    }

    /// True for `±t^k`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    pub fn is_one(&self) -> bool {
        self.min_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Gcd of the coefficients (nonnegative; 0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Multiplies by `t^k`.
    pub fn shifted(&self, k: i64) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { min_exp: self.min_exp + k, coeffs: self.coeffs.clone() }
    }

    /// The value at t = 1 (sum of coefficients).
    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// The value at t = -1.
    pub fn value_at_minus_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if (self.min_exp + i as i64).rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn eval(&self, t0: &BigRational) -> Result<BigRational, LaurentError> {
        if t0.is_zero() {
            return Err(LaurentError::ZeroEvaluationPoint);
        }
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        // Horner on the window, then scale by t0^min_exp.
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t0 + BigRational::from(c.clone());
        }
        let exp = self.min_exp;
        let scale = if exp >= 0 {
            BigRational::from(num::pow::pow(t0.numer().clone(), exp as usize))
                / BigRational::from(num::pow::pow(t0.denom().clone(), exp as usize))
        } else {
            BigRational::from(num::pow::pow(t0.denom().clone(), (-exp) as usize))
                / BigRational::from(num::pow::pow(t0.numer().clone(), (-exp) as usize))
        };
        Ok(acc * scale)
    }

    /// Evaluation at a nonzero integer point.
    pub fn eval_int(&self, t0: i64) -> Result<BigRational, LaurentError> {
        self.eval(&BigRational::from(BigInt::from(t0)))
    }

    /// `p(t^-1)`: reverses the coefficient window and negates the exponents.
    pub fn involute(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly { min_exp: -self.max_exp(), coeffs }
    }

    /// The unique representative of the unit orbit `{±t^k p}`: min_exp is 0
    /// and the value at 1 is positive (leading coefficient positive when the
    /// value at 1 vanishes).
    pub fn canonicalize(&self) -> Result<LaurentPoly, LaurentError> {
        if self.is_zero() {
            return Err(LaurentError::ZeroPolynomial);
        }
        let mut p = self.shifted(-self.min_exp);
        let at_one = p.value_at_one();
        let flip = if at_one.is_zero() { p.leading_coeff().is_negative() } else { at_one.is_negative() };
        if flip {
            p = -&p;
        }
        Ok(p)
    }

    /// Equality up to a unit `±t^k`; zero is only equivalent to zero.
    pub fn equals_up_to_unit(&self, other: &LaurentPoly) -> bool {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => true,
            (true, false) | (false, true) => false,
            (false, false) => self.canonicalize().unwrap() == other.canonicalize().unwrap(),
        }
    }

    /// Exact division in the Laurent ring; None when not exact.
    pub fn exact_div(&self, rhs: &LaurentPoly) -> Option<LaurentPoly> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if self.coeffs.len() < rhs.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len() - rhs.coeffs.len() + 1];
        let lead = rhs.coeffs.last().unwrap();
        for i in (0..quot.len()).rev() {
            let lead_r = rem[i + rhs.coeffs.len() - 1].clone();
            if lead_r.is_zero() {
                continue;
            }
            let (q, r) = num::Integer::div_rem(&lead_r, lead);
            if !r.is_zero() {
                return None;
            }
            for (j, bc) in rhs.coeffs.iter().enumerate() {
                let prod = &q * bc;
                rem[i + j] -= prod;
            }
            quot[i] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(LaurentPoly::from_coeffs(self.min_exp - rhs.min_exp, quot))
        } else {
            None
        }
    }

    /// Compact textual form `[min_exp; c0,c1,...]`.
    pub fn to_compact(&self) -> String {
        if self.is_zero() {
            return "[0; 0]".to_string();
        }
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}; {}]", self.min_exp, coeffs.join(","))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let exp = self.min_exp + i as i64;
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match exp {
                0 => write!(f, "{abs}")?,
                1 => {
                    if abs.is_one() {
                        write!(f, "t")?;
                    } else {
                        write!(f, "{abs}*t")?;
                    }
                }
                _ => {
                    if abs.is_one() {
                        write!(f, "t^{exp}")?;
                    } else {
                        write!(f, "{abs}*t^{exp}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_poly(s)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let min = self.min_exp.min(rhs.min_exp);
        let max = self.max_exp().max(rhs.max_exp());
        let mut coeffs = vec![BigInt::zero(); (max - min + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_exp - min) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.min_exp - min) as usize + i] += c;
        }
        LaurentPoly::from_coeffs(min, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.min_exp + rhs.min_exp, coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
