use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::action::{act, shift_subset};
use crate::bijection::phi;
use crate::combinatorics::{
    binomial, eval_at_root_exact, eval_qbin_central_closed, q_binomial, RootValue,
};
use crate::tableaux::{enumerate_tableaux_with, maj_polynomial_with, Partition};
use crate::{Error, Result, Strategy};

/// Largest `n` for which fixed points are counted by running the action.
pub const DEFAULT_EXHAUSTIVE_CAP: u32 = 16;

fn check_range(n: u32, k: u32) -> Result<()> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::OutOfRange(format!("k = {k} must lie in [1, {n}]")));
    }
    Ok(())
}

/// Number of tableaux of shape `(n, n)` fixed by the `k`-th power of the
/// shift, by applying it to every element.
pub fn fixed_points_exhaustive(n: u32, k: u32) -> Result<BigInt> {
    check_range(n, k)?;
    let tableaux = enumerate_tableaux_with(&Partition::two_row(n), Strategy::default());
    let fixed: Vec<bool> = Strategy::default()
        .map(&tableaux, |t| act(t, k as i64).map(|image| image == *t))
        .into_iter()
        .collect::<Result<_>>()?;
    Ok(BigInt::from(fixed.into_iter().filter(|&f| f).count()))
}

/// The case analysis for the same count: with `g = gcd(n, k)`, a fixed
/// subset is a union of residue classes mod `g`, so the count is
/// `binom(g, g/2)` when `n` and `g` are even, `binom(n, ⌊n/2⌋)` at `k = n`,
/// and zero otherwise.
pub fn fixed_points_closed(n: u32, k: u32) -> Result<BigInt> {
    check_range(n, k)?;
    let g = n.gcd(&k);
    Ok(if g == n {
        binomial(n as u64, (n / 2) as i64)
    } else if n.is_multiple_of(2) && g.is_multiple_of(2) {
        binomial(g as u64, (g / 2) as i64)
    } else {
        BigInt::zero()
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedPointCount {
    /// `None` above the exhaustive cap.
    #[serde(serialize_with = "crate::serde_util::big_opt")]
    pub exhaustive: Option<BigInt>,
    #[serde(serialize_with = "crate::serde_util::big")]
    pub closed: BigInt,
}

impl FixedPointCount {
    pub fn agrees(&self) -> bool {
        self.exhaustive.as_ref().is_none_or(|e| *e == self.closed)
    }
}

pub fn fixed_point_count(n: u32, k: u32) -> Result<FixedPointCount> {
    fixed_point_count_capped(n, k, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn fixed_point_count_capped(n: u32, k: u32, cap: u32) -> Result<FixedPointCount> {
    let closed = fixed_points_closed(n, k)?;
    let exhaustive = if n <= cap {
        Some(fixed_points_exhaustive(n, k)?)
    } else {
        None
    };
    Ok(FixedPointCount { exhaustive, closed })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CspRow {
    pub k: u32,
    #[serde(serialize_with = "crate::serde_util::big_opt")]
    pub fixed: Option<BigInt>,
    pub poly: RootValue,
    #[serde(serialize_with = "crate::serde_util::big")]
    pub closed: BigInt,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CspReport {
    pub n: u32,
    pub rows: Vec<CspRow>,
    pub verdict: Verdict,
}

pub fn verify_csp(n: u32) -> Result<CspReport> {
    verify_csp_with(n, DEFAULT_EXHAUSTIVE_CAP, Strategy::default())
}

/// Compares, for every `k` in `1..=n`, the fixed points of the `k`-th power
/// of the shift with the maj generating function at `e^{2πik/n}` and with
/// the closed form of the central q-binomial there. Above `cap` the fixed
/// point column is left empty and the generating function is replaced by the
/// q-binomial it equals.
pub fn verify_csp_with(n: u32, cap: u32, strategy: Strategy) -> Result<CspReport> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    let shape = Partition::two_row(n);
    let (poly, subsets) = if n <= cap {
        let tableaux = enumerate_tableaux_with(&shape, strategy);
        let subsets: Vec<BTreeSet<u32>> = strategy
            .map(&tableaux, |t| phi(t).map(|s| s.subset))
            .into_iter()
            .collect::<Result<_>>()?;
        (maj_polynomial_with(&shape, strategy), Some(subsets))
    } else {
        (q_binomial(n, n / 2)?, None)
    };
    let ks: Vec<u32> = (1..=n).collect();
    // values at a root of order d depend only on d
    let orders: BTreeSet<u64> = ks.iter().map(|&k| (n / n.gcd(&k)) as u64).collect();
    let orders: Vec<u64> = orders.into_iter().collect();
    let at_order: HashMap<u64, RootValue> = orders
        .iter()
        .copied()
        .zip(strategy.map(&orders, |&d| eval_at_root_exact(&poly, d)))
        .collect();

    let rows: Vec<CspRow> = strategy
        .map(&ks, |&k| -> Result<CspRow> {
            let fixed = subsets.as_ref().map(|all| {
                BigInt::from(
                    all.iter()
                        .filter(|s| shift_subset(s, k as i64, n) == **s)
                        .count(),
                )
            });
            let poly = at_order[&((n / n.gcd(&k)) as u64)].clone();
            let closed = eval_qbin_central_closed(n as u64, k as u64)?;
            let case_analysis = fixed_points_closed(n, k)?;
            let matches = poly.integer() == Some(&closed)
                && case_analysis == closed
                && fixed.as_ref().is_none_or(|f| *f == closed);
            Ok(CspRow {
                k,
                fixed,
                poly,
                closed,
                matches,
            })
        })
        .into_iter()
        .collect::<Result<_>>()?;
    let verdict = if rows.iter().all(|r| r.matches) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(CspReport { n, rows, verdict })
}
