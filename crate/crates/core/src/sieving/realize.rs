use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Serialize, Serializer};

use crate::bijection::count_rectangular;
use crate::combinatorics::{
    divisors, eval_at_root_exact, mobius, q_binomial, q_factorial, q_integer, QPolynomial,
    RootValue,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Failure {
    NonIntegerValue,
    NegativeOrbitCount,
    NonIntegerOrbitCount,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "reason")]
pub enum Realizability {
    Realizable,
    Fails(Failure),
}

/// Whether some action of the cyclic group of order `order` has the fixed
/// point counts predicted by a polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizabilityReport {
    pub order: u64,
    /// `d -> f(ω)` with `ω` a root of unity of order `order / d`: the
    /// predicted number of points fixed by the `d`-th power.
    pub fix: BTreeMap<u64, RootValue>,
    /// `m -> ` predicted number of orbits of size `m`.
    #[serde(serialize_with = "rationals")]
    pub orbit_counts: BTreeMap<u64, BigRational>,
    #[serde(flatten)]
    pub verdict: Realizability,
}

impl RealizabilityReport {
    pub fn is_realizable(&self) -> bool {
        self.verdict == Realizability::Realizable
    }
}

fn rationals<S: Serializer>(m: &BTreeMap<u64, BigRational>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_map(m.iter().map(|(k, v)| (k, v.to_string())))
}

/// Möbius-inverts the fixed point profile of `f` for a cyclic group of
/// order `order` into orbit counts, which must all be nonnegative integers.
pub fn realizability(f: &QPolynomial, order: u64) -> Result<RealizabilityReport> {
    if order == 0 {
        return Err(Error::OutOfRange("group order must be positive".into()));
    }
    let divs = divisors(order);
    let fix: BTreeMap<u64, RootValue> = divs
        .iter()
        .map(|&d| (d, eval_at_root_exact(f, order / d)))
        .collect();
    let mut report = RealizabilityReport {
        order,
        fix,
        orbit_counts: BTreeMap::new(),
        verdict: Realizability::Realizable,
    };
    let values: Option<BTreeMap<u64, BigInt>> = report
        .fix
        .iter()
        .map(|(&d, v)| v.integer().map(|v| (d, v.clone())))
        .collect();
    let Some(values) = values else {
        report.verdict = Realizability::Fails(Failure::NonIntegerValue);
        return Ok(report);
    };
    for &m in &divs {
        let sum: BigInt = divisors(m)
            .into_iter()
            .map(|d| BigInt::from(mobius(m / d)) * &values[&d])
            .sum();
        report
            .orbit_counts
            .insert(m, BigRational::new(sum, BigInt::from(m)));
    }
    if report.orbit_counts.values().any(|o| o.is_negative()) {
        report.verdict = Realizability::Fails(Failure::NegativeOrbitCount);
    } else if report.orbit_counts.values().any(|o| !o.is_integer()) {
        report.verdict = Realizability::Fails(Failure::NonIntegerOrbitCount);
    }
    Ok(report)
}

/// The candidate sieving polynomial for the `2k x n` rectangle:
/// `q`-hook formulas of the `k x ⌈n/2⌉` and `k x ⌊n/2⌋` rectangles times
/// `[kn, k⌊n/2⌋]_q`. The division must be exact.
pub fn conjecture_polynomial(k: u32, n: u32) -> Result<QPolynomial> {
    if k == 0 || n == 0 {
        return Err(Error::OutOfRange("k and n must be positive".into()));
    }
    let (a, b) = (n.div_ceil(2), n / 2);
    let numerator = q_factorial(k * a) * q_factorial(k * b) * q_binomial(k * n, k * b)?;
    let mut denominator = QPolynomial::one();
    for i in 1..=k {
        for j in 0..a {
            denominator = denominator * q_integer(i + j);
        }
        for j in 0..b {
            denominator = denominator * q_integer(i + j);
        }
    }
    let (quotient, remainder) = numerator.div_rem_monic(&denominator)?;
    if !remainder.is_zero() {
        return Err(Error::InexactDivision);
    }
    Ok(quotient)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureProbe {
    pub k: u32,
    pub n: u32,
    pub polynomial: QPolynomial,
    pub nonnegative: bool,
    #[serde(serialize_with = "crate::serde_util::big")]
    pub value_at_one: BigInt,
    #[serde(serialize_with = "crate::serde_util::big")]
    pub expected_count: BigInt,
    pub count_matches: bool,
    /// Realizability for the group order `kn`, the number of dominoes.
    pub default_order: RealizabilityReport,
    pub requested_order: Option<RealizabilityReport>,
}

impl ConjectureProbe {
    /// All necessary conditions hold for every probed order.
    pub fn consistent(&self) -> bool {
        self.nonnegative
            && self.count_matches
            && self.default_order.is_realizable()
            && self
                .requested_order
                .as_ref()
                .is_none_or(RealizabilityReport::is_realizable)
    }
}

pub fn conjecture_probe(k: u32, n: u32, order: Option<u64>) -> Result<ConjectureProbe> {
    let polynomial = conjecture_polynomial(k, n)?;
    let value_at_one = polynomial.eval_at_one();
    let expected_count = count_rectangular(k, n);
    let default_order = realizability(&polynomial, k as u64 * n as u64)?;
    let requested_order = order.map(|m| realizability(&polynomial, m)).transpose()?;
    Ok(ConjectureProbe {
        k,
        n,
        nonnegative: polynomial.has_nonnegative_coeffs(),
        count_matches: value_at_one == expected_count,
        value_at_one,
        expected_count,
        default_order,
        requested_order,
        polynomial,
    })
}
