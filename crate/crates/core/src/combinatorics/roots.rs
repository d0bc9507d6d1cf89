use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use super::numbers::{binomial, divisors, mobius};
use super::poly::QPolynomial;
use crate::{Error, Result};

/// Value of an integer polynomial at a primitive root of unity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RootValue {
    Integer(BigInt),
    /// The value is not a rational integer (e.g. `q` at `i`).
    NonInteger,
}

impl RootValue {
    pub fn integer(&self) -> Option<&BigInt> {
        match self {
            RootValue::Integer(v) => Some(v),
            RootValue::NonInteger => None,
        }
    }
}

impl fmt::Display for RootValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootValue::Integer(v) => write!(f, "{v}"),
            RootValue::NonInteger => write!(f, "non-integer"),
        }
    }
}

impl Serialize for RootValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn q_power_minus_one(e: u64) -> QPolynomial {
    let mut coeffs = vec![BigInt::default(); e as usize + 1];
    coeffs[0] = -BigInt::one();
    coeffs[e as usize] = BigInt::one();
    QPolynomial::new(coeffs)
}

/// The `d`-th cyclotomic polynomial, from
/// `Φ_d(q) = Π_{e | d} (q^e - 1)^{μ(d/e)}` by exact division.
pub fn cyclotomic(d: u64) -> QPolynomial {
    assert!(d >= 1, "cyclotomic polynomials are indexed from 1");
    let mut num = QPolynomial::one();
    let mut den = QPolynomial::one();
    for e in divisors(d) {
        match mobius(d / e) {
            1 => num = &num * &q_power_minus_one(e),
            -1 => den = &den * &q_power_minus_one(e),
            _ => {}
        }
    }
    num.div_exact(&den)
        .expect("cyclotomic quotient is always exact")
}

/// Exact value of `f` at a primitive `d`-th root of unity: the remainder of
/// `f` modulo `Φ_d`, which is an integer exactly when it is constant.
pub fn eval_at_root_exact(f: &QPolynomial, d: u64) -> RootValue {
    let phi = cyclotomic(d);
    let (_, rem) = f
        .div_rem_monic(&phi)
        .expect("cyclotomic polynomials are monic");
    match rem.as_constant() {
        Some(c) => RootValue::Integer(c),
        None => RootValue::NonInteger,
    }
}

/// Floating-point value of `f(e^{2πi/d})` as `(re, im)`. Only used to
/// cross-check [`eval_at_root_exact`].
pub fn eval_at_root_numeric(f: &QPolynomial, d: u64) -> (f64, f64) {
    let theta = 2.0 * std::f64::consts::PI / d as f64;
    let mut re = 0.0;
    let mut im = 0.0;
    for (i, c) in f.coeffs().iter().enumerate() {
        // reduce the exponent first so large degrees keep full precision
        let angle = theta * (i as u64 % d) as f64;
        let c = c.to_f64().unwrap_or(f64::NAN);
        re += c * angle.cos();
        im += c * angle.sin();
    }
    (re, im)
}

/// Closed-form value of `[n, ⌊n/2⌋]_q` at `e^{2πik/n}`: with
/// `d = n / gcd(n, k)`, this is `binom(n/d, ⌊n/2⌋/d)` when `d` divides
/// `⌊n/2⌋`, and zero otherwise.
pub fn eval_qbin_central_closed(n: u64, k: u64) -> Result<BigInt> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::OutOfRange(format!(
            "root index k = {k} must lie in [1, {n}]"
        )));
    }
    let d = n / n.gcd(&k);
    let half = n / 2;
    if half.is_multiple_of(d) {
        Ok(binomial(n / d, (half / d) as i64))
    } else {
        Ok(BigInt::default())
    }
}
