use serde::Serialize;

use crate::tableaux::Partition;
use crate::{Error, Result};

/// An unordered pair of partitions, stored in sorted order so that equality
/// ignores the order in which the two members were produced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct QuotientPair([Partition; 2]);

impl QuotientPair {
    pub fn new(a: Partition, b: Partition) -> Self {
        if a <= b {
            Self([a, b])
        } else {
            Self([b, a])
        }
    }

    pub fn members(&self) -> &[Partition; 2] {
        &self.0
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.0.contains(p)
    }
}

/// The sequences `L` and `M` behind the 2-quotient: `L_i = λ_i + ℓ - i`,
/// and `M` replaces the even entries of `L`, scanned right to left, by
/// `0, 2, 4, ...` and the odd entries by `1, 3, 5, ...`.
pub fn beta_numbers(shape: &Partition) -> (Vec<u64>, Vec<u64>) {
    let len = shape.len() as u64;
    let l: Vec<u64> = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as u64 + len - (i as u64 + 1))
        .collect();
    let mut m = vec![0; l.len()];
    let (mut next_even, mut next_odd) = (0, 1);
    for i in (0..l.len()).rev() {
        if l[i].is_multiple_of(2) {
            m[i] = next_even;
            next_even += 2;
        } else {
            m[i] = next_odd;
            next_odd += 2;
        }
    }
    (l, m)
}

/// Whether `shape` can be tiled by dominoes, i.e. its 2-core is empty: the
/// beta numbers must split into `⌈ℓ/2⌉` even and `⌊ℓ/2⌋` odd values.
pub fn has_empty_two_core(shape: &Partition) -> bool {
    let (l, _) = beta_numbers(shape);
    let even = l.iter().filter(|&&x| x % 2 == 0).count();
    even == l.len().div_ceil(2)
}

/// The 2-quotient of a shape of even weight, as an unordered pair: one
/// member from the halved differences `(L_i - M_i) / 2` over odd `L_i`, the
/// other over even `L_i`, each sorted decreasingly with zeros dropped.
pub fn two_quotient(shape: &Partition) -> Result<QuotientPair> {
    if shape.weight() % 2 == 1 {
        return Err(Error::OddWeight {
            shape: shape.to_string(),
            weight: shape.weight(),
        });
    }
    let (l, m) = beta_numbers(shape);
    let half_diffs = |parity: u64| -> Vec<u32> {
        l.iter()
            .zip(&m)
            .filter(|(li, _)| *li % 2 == parity)
            .map(|(li, mi)| ((li - mi) / 2) as u32)
            .collect()
    };
    Ok(QuotientPair::new(
        Partition::from_unsorted(half_diffs(1)),
        Partition::from_unsorted(half_diffs(0)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn worked_example() {
        let shape = p(&[5, 5, 3, 3, 2]);
        let (l, m) = beta_numbers(&shape);
        assert_eq!(l, vec![9, 8, 5, 4, 2]);
        assert_eq!(m, vec![3, 4, 1, 2, 0]);
        assert_eq!(
            two_quotient(&shape).unwrap(),
            QuotientPair::new(p(&[3, 2]), p(&[2, 1, 1]))
        );
    }

    #[test]
    fn rectangles() {
        for k in 1..=4u32 {
            for n in 1..=4u32 {
                let shape = Partition::rectangle(2 * k, n);
                assert_eq!(
                    two_quotient(&shape).unwrap(),
                    QuotientPair::new(
                        Partition::rectangle(k, n.div_ceil(2)),
                        Partition::rectangle(k, n / 2)
                    ),
                    "k = {k}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(
            two_quotient(&p(&[1, 1])).unwrap(),
            QuotientPair::new(p(&[1]), Partition::empty())
        );
        let (_, m) = beta_numbers(&p(&[1, 1]));
        assert_eq!(m, vec![0, 1]);
        assert!(matches!(
            two_quotient(&p(&[2, 1])),
            Err(Error::OddWeight { .. })
        ));
        assert_eq!(
            two_quotient(&Partition::empty()).unwrap(),
            QuotientPair::new(Partition::empty(), Partition::empty())
        );
    }

    #[test]
    fn two_cores() {
        assert!(has_empty_two_core(&p(&[5, 5, 3, 3, 2])));
        assert!(has_empty_two_core(&p(&[1, 1])));
        assert!(has_empty_two_core(&p(&[2, 1, 1])));
        assert!(!has_empty_two_core(&p(&[2, 1])));
        assert!(!has_empty_two_core(&p(&[3, 2, 1])));
        assert!(!has_empty_two_core(&p(&[1])));
        assert!(has_empty_two_core(&Partition::empty()));
    }

    #[test]
    fn unordered_equality() {
        assert_eq!(
            QuotientPair::new(p(&[1]), p(&[2])),
            QuotientPair::new(p(&[2]), p(&[1]))
        );
    }
}
