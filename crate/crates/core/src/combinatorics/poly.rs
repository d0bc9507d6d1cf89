use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Dense polynomial in `q` with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `q^i`. Trailing zeros are never stored,
/// so the zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl From<Vec<BigInt>> for QPolynomial {
    fn from(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs)
    }
}

impl From<QPolynomial> for Vec<BigInt> {
    fn from(p: QPolynomial) -> Self {
        p.coeffs
    }
}

impl TryFrom<Vec<String>> for QPolynomial {
    type Error = Error;

    fn try_from(coeffs: Vec<String>) -> Result<Self> {
        coeffs
            .iter()
            .map(|c| {
                c.parse::<BigInt>()
                    .map_err(|_| Error::InvalidNumber(c.clone()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

/// Coefficients serialize as decimal strings.
impl From<QPolynomial> for Vec<String> {
    fn from(p: QPolynomial) -> Self {
        p.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// The constant term when the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Long division by a divisor whose leading coefficient is `±1`, so
    /// that the quotient stays integral.
    pub fn div_rem_monic(&self, divisor: &QPolynomial) -> Result<(QPolynomial, QPolynomial)> {
        let lead = divisor.leading().ok_or(Error::InexactDivision)?;
        let unit = if lead.is_one() {
            BigInt::one()
        } else if *lead == -BigInt::one() {
            -BigInt::one()
        } else {
            return Err(Error::OutOfRange(
                "divisor must have leading coefficient +1 or -1".into(),
            ));
        };
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((QPolynomial::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let factor = top * &unit;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * d;
            }
            quot[shift] = factor;
        }
        Ok((QPolynomial::new(quot), QPolynomial::new(rem)))
    }

    /// Exact division; fails unless the remainder is zero.
    pub fn div_exact(&self, divisor: &QPolynomial) -> Result<QPolynomial> {
        let (q, r) = self.div_rem_monic(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    pub fn pow(&self, e: u32) -> QPolynomial {
        (0..e).fold(QPolynomial::one(), |acc, _| &acc * self)
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        QPolynomial::new(coeffs)
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        QPolynomial::new(coeffs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
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
        QPolynomial::new(coeffs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        QPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPolynomial {
            type Output = QPolynomial;
            fn $m(self, rhs: QPolynomial) -> QPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, abs) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{abs}q^{i}")?,
            }
        }
        Ok(())
    }
}

/// `[m]_q = 1 + q + ... + q^{m-1}`; `[0]_q = 0`.
pub fn q_integer(m: u32) -> QPolynomial {
    QPolynomial::new(vec![BigInt::one(); m as usize])
}

/// `[m]!_q = [1]_q [2]_q ... [m]_q`.
pub fn q_factorial(m: u32) -> QPolynomial {
    (1..=m).fold(QPolynomial::one(), |acc, i| &acc * &q_integer(i))
}

/// Gaussian binomial coefficient, built with the q-Pascal recurrence
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
pub fn q_binomial(n: u32, k: u32) -> Result<QPolynomial> {
    if k > n {
        return Err(Error::QBinomialRange { n, k });
    }
    // row[j] holds [i, j] for the current i
    let mut row: Vec<QPolynomial> = vec![QPolynomial::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        for j in 0..=(i as usize).min(k as usize) {
            let left = if j == 0 {
                QPolynomial::zero()
            } else {
                row[j - 1].clone()
            };
            let right = match row.get(j) {
                Some(p) if j < i as usize => &QPolynomial::monomial(BigInt::one(), j) * p,
                _ => QPolynomial::zero(),
            };
            next.push(&left + &right);
        }
        row = next;
    }
    Ok(row.swap_remove(k as usize))
}
