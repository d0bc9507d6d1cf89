use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::quotient::{has_empty_two_core, two_quotient};
use crate::combinatorics::{binomial, catalan, compositions, factorial};
use crate::tableaux::Partition;
use crate::{Error, Result};

/// Hook length of every cell, row by row.
pub fn hook_lengths(shape: &Partition) -> Vec<Vec<u32>> {
    let conj = shape.conjugate();
    shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            (0..len)
                .map(|j| {
                    let arm = len - j - 1;
                    let leg = conj.parts()[j as usize] - i as u32 - 1;
                    arm + leg + 1
                })
                .collect()
        })
        .collect()
}

/// Number of standard Young tableaux of `shape`, by the hook length formula.
pub fn num_syt(shape: &Partition) -> BigInt {
    let product: BigInt = hook_lengths(shape)
        .into_iter()
        .flatten()
        .map(BigInt::from)
        .product();
    factorial(shape.weight()) / product
}

/// The factors of `#DT` for the `2k x n` rectangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RectangularCount {
    #[serde(serialize_with = "crate::serde_util::big")]
    pub f_mu: BigInt,
    #[serde(serialize_with = "crate::serde_util::big")]
    pub f_nu: BigInt,
    #[serde(serialize_with = "crate::serde_util::big")]
    pub label_choices: BigInt,
    #[serde(serialize_with = "crate::serde_util::big")]
    pub total: BigInt,
}

pub fn rectangular_breakdown(k: u32, n: u32) -> RectangularCount {
    let f_mu = num_syt(&Partition::rectangle(k, n.div_ceil(2)));
    let f_nu = num_syt(&Partition::rectangle(k, n / 2));
    let label_choices = binomial(k as u64 * n as u64, (k * (n / 2)) as i64);
    let total = &f_mu * &f_nu * &label_choices;
    RectangularCount {
        f_mu,
        f_nu,
        label_choices,
        total,
    }
}

/// `#DT` of the rectangle with `2k` rows and `n` columns.
pub fn count_rectangular(k: u32, n: u32) -> BigInt {
    rectangular_breakdown(k, n).total
}

/// `#DT` of the `rows x cols` rectangle; zero when both sides are odd.
pub fn count_rectangle(rows: u32, cols: u32) -> BigInt {
    if rows == 0 || cols == 0 {
        BigInt::one()
    } else if rows.is_multiple_of(2) {
        count_rectangular(rows / 2, cols)
    } else if cols.is_multiple_of(2) {
        count_rectangular(cols / 2, rows)
    } else {
        BigInt::zero()
    }
}

/// `#DT(n, 1^m)` as `(a+b)! / ((a+b) (a-1)! b!)` with `a = ⌈n/2⌉`, `b = ⌊m/2⌋`.
pub fn count_hook(n: u32, m: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::OutOfRange("hook arm must be positive".into()));
    }
    if (n + m) % 2 == 1 {
        return Err(Error::OddHook { n, m });
    }
    let a = n.div_ceil(2) as u64;
    let b = (m / 2) as u64;
    Ok(factorial(a + b) / (BigInt::from(a + b) * factorial(a - 1) * factorial(b)))
}

/// `#DT(shape)` for any shape: zero unless the 2-core is empty, and
/// otherwise `binom(|shape|/2, |α|) f^α f^β` for the 2-quotient `{α, β}`.
pub fn count_domino_tableaux(shape: &Partition) -> BigInt {
    if shape.weight() % 2 == 1 || !has_empty_two_core(shape) {
        return BigInt::zero();
    }
    let pair = two_quotient(shape).expect("weight is even");
    let [a, b] = pair.members();
    binomial(shape.weight() / 2, a.weight() as i64) * num_syt(a) * num_syt(b)
}

fn composition_sum(n: u32, weight: impl Fn(&[u32]) -> BigInt) -> BigInt {
    let mut total = BigInt::one();
    for j in 1..=n / 2 {
        for alpha in compositions(j) {
            let len = alpha.len() as u32;
            if 2 * j + len - 1 > n {
                continue;
            }
            total += binomial((n - 2 * j + 1) as u64, len as i64) * weight(alpha.parts());
        }
    }
    total
}

/// `Σ_α binom(n - 2j + 1, ℓ(α)) Π C_{α_i}` over compositions `α` of `j` with
/// `2j + ℓ(α) - 1 <= n`, the empty composition contributing 1.
pub fn catalan_composition_count(n: u32) -> BigInt {
    composition_sum(n, |parts| {
        parts.iter().map(|&p| catalan(p as u64)).product()
    })
}

/// The same sum without the Catalan weights.
pub fn fibonacci_composition_count(n: u32) -> BigInt {
    composition_sum(n, |_| BigInt::one())
}
