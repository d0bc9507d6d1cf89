use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use serde::Serialize;

use crate::bijection::{phi, phi_inverse};
use crate::combinatorics::BinaryWord;
use crate::tableaux::{enumerate_tableaux_with, DominoTableau, Partition};
use crate::{Error, Result, Strategy};

/// `{s + t}` taken mod `n` with residues in `1..=n`.
pub fn shift_subset(subset: &BTreeSet<u32>, t: i64, n: u32) -> BTreeSet<u32> {
    let n = n as i64;
    subset
        .iter()
        .map(|&s| ((s as i64 + t - 1).rem_euclid(n) + 1) as u32)
        .collect()
}

/// The action of the `t`-th power of the generator on a tableau of shape
/// `(n, n)`, by shifting its subset encoding.
pub fn act(t: &DominoTableau, power: i64) -> Result<DominoTableau> {
    let state = phi(t)?;
    phi_inverse(state.n, &shift_subset(&state.subset, power, state.n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub size: usize,
    /// Lexicographically smallest subset encoding in the orbit.
    pub representative: BTreeSet<u32>,
    /// The representative as a binary word (zeros at subset positions).
    pub word: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub n: u32,
    pub orbits: Vec<Orbit>,
    #[serde(serialize_with = "crate::serde_util::big")]
    pub total: BigInt,
}

pub fn orbits(n: u32) -> Result<OrbitReport> {
    orbits_with(n, Strategy::default())
}

/// Orbit decomposition of `DT(n, n)`, with orbits sorted by representative.
pub fn orbits_with(n: u32, strategy: Strategy) -> Result<OrbitReport> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    let tableaux = enumerate_tableaux_with(&Partition::two_row(n), strategy);
    let images: Vec<(DominoTableau, DominoTableau)> = strategy
        .map(&tableaux, |t| act(t, 1).map(|next| (t.clone(), next)))
        .into_iter()
        .collect::<Result<_>>()?;
    let next: HashMap<&DominoTableau, &DominoTableau> =
        images.iter().map(|(a, b)| (a, b)).collect();

    let mut seen: BTreeSet<&DominoTableau> = BTreeSet::new();
    let mut out = Vec::new();
    for start in &tableaux {
        if seen.contains(start) {
            continue;
        }
        let mut members = Vec::new();
        let mut cur = start;
        loop {
            seen.insert(cur);
            members.push(phi(cur)?.subset);
            cur = next
                .get(cur)
                .ok_or_else(|| Error::Internal("shift left DT(n, n)".into()))?;
            if cur == start {
                break;
            }
        }
        let size = members.len();
        let representative = members.into_iter().min().unwrap_or_default();
        let word = BinaryWord::from_zero_positions(n as usize, &representative)?;
        out.push(Orbit {
            size,
            representative,
            word: word.to_string(),
        });
    }
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(OrbitReport {
        n,
        orbits: out,
        total: BigInt::from(tableaux.len()),
    })
}
