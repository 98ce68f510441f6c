use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest ambient size representable by the bit-mask backing of [`IndexSet`].
pub const MAX_AMBIENT: usize = 63;

/// Strictly increasing sequence `α` over `{1..n}`.
///
/// Elements are 1-based. Ordering is colexicographic: sets compare by their
/// largest differing element, which is also the numeric order of the bit masks.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexSet {
    ambient: usize,
    elements: Vec<usize>,
}

impl IndexSet {
    pub fn new(ambient: usize, elements: Vec<usize>) -> Result<Self> {
        if ambient > MAX_AMBIENT {
            return Err(Error::input(
                "n",
                format!("ambient size {ambient} exceeds {MAX_AMBIENT}"),
            ));
        }
        if let Some(&bad) = elements.iter().find(|&&e| e == 0 || e > ambient) {
            return Err(Error::input(
                "alpha",
                format!("element {bad} outside 1..{ambient}"),
            ));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::input("alpha", "elements must be strictly increasing"));
        }
        Ok(IndexSet { ambient, elements })
    }

    pub fn empty(ambient: usize) -> Self {
        IndexSet {
            ambient,
            elements: Vec::new(),
        }
    }

    /// Full set `{1..n}`.
    pub fn full(ambient: usize) -> Self {
        IndexSet {
            ambient,
            elements: (1..=ambient).collect(),
        }
    }

    /// Bit `i` of `mask` selects element `i + 1`.
    pub fn from_mask(ambient: usize, mask: u64) -> Self {
        debug_assert!(ambient <= MAX_AMBIENT && mask >> ambient == 0);
        IndexSet {
            ambient,
            elements: (0..ambient).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect(),
        }
    }

    pub fn mask(&self) -> u64 {
        self.elements.iter().fold(0, |m, &e| m | 1 << (e - 1))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Elements as 0-based row/column indices.
    pub fn zero_based(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().map(|e| e - 1)
    }

    /// Complement `α′` in `{1..n}`.
    pub fn dual(&self) -> IndexSet {
        let full = if self.ambient == 64 {
            u64::MAX
        } else {
            (1u64 << self.ambient) - 1
        };
        IndexSet::from_mask(self.ambient, full & !self.mask())
    }

    pub fn intersection_len(&self, other: &IndexSet) -> usize {
        (self.mask() & other.mask()).count_ones() as usize
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then_with(|| self.mask().cmp(&other.mask()))
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Bit masks of all `m`-subsets of an `n`-set in colex order (increasing
/// numeric value, Gosper's successor).
pub(crate) fn colex_masks(n: usize, m: usize) -> Vec<u64> {
    debug_assert!(m <= n && n <= MAX_AMBIENT);
    if m == 0 {
        return vec![0];
    }
    let limit = 1u64 << n;
    let mut out = Vec::with_capacity(binomial_u128(n as u64, m as u64) as usize);
    let mut x: u64 = (1u64 << m) - 1;
    while x < limit {
        out.push(x);
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

/// All `C(n, m)` subsets of size `m` of `{1..n}` in colex order.
pub fn enumerate_subsets(n: usize, m: usize) -> Result<Vec<IndexSet>> {
    if m > n {
        return Err(Error::input("m", format!("subset size {m} exceeds n = {n}")));
    }
    if n > MAX_AMBIENT {
        return Err(Error::input("n", format!("n = {n} exceeds {MAX_AMBIENT}")));
    }
    Ok(colex_masks(n, m)
        .into_iter()
        .map(|mask| IndexSet::from_mask(n, mask))
        .collect())
}

/// `C(n, k)` as `u128`; zero when `k > n`.
pub fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `C(n, k)` for signed arguments, zero outside `0 <= k <= n`.
pub(crate) fn binomial_signed(n: i64, k: i64) -> u128 {
    if n < 0 || k < 0 || k > n {
        0
    } else {
        binomial_u128(n as u64, k as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(n: usize, m: usize) -> Vec<Vec<usize>> {
        enumerate_subsets(n, m)
            .unwrap()
            .into_iter()
            .map(|s| s.elements().to_vec())
            .collect()
    }

    #[test]
    fn colex_examples() {
        assert_eq!(sets(3, 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(sets(5, 0), vec![Vec::<usize>::new()]);
        assert_eq!(sets(4, 1), vec![vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(
            sets(4, 2),
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
                vec![1, 4],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        assert_eq!(sets(3, 3), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn oversized_m_is_an_error() {
        assert!(enumerate_subsets(3, 4).is_err());
    }

    #[test]
    fn index_set_validation() {
        assert!(IndexSet::new(3, vec![0]).is_err());
        assert!(IndexSet::new(3, vec![4]).is_err());
        assert!(IndexSet::new(3, vec![2, 2]).is_err());
        assert!(IndexSet::new(3, vec![3, 1]).is_err());
        assert_eq!(IndexSet::new(3, vec![1, 3]).unwrap().dual().elements(), &[2]);
        assert!(IndexSet::empty(4).dual() == IndexSet::full(4));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_u128(10, 5), 252);
        assert_eq!(binomial_u128(40, 20), 137_846_528_820);
        assert_eq!(binomial_u128(3, 4), 0);
        assert_eq!(binomial_signed(-1, 0), 0);
        assert_eq!(binomial_signed(4, -1), 0);
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn enumeration_is_complete_and_colex(n in 0usize..=12, m_frac in 0.0f64..=1.0) {
                let m = ((n as f64) * m_frac).round() as usize;
                let all = enumerate_subsets(n, m).unwrap();
                prop_assert_eq!(all.len() as u128, binomial_u128(n as u64, m as u64));
                for s in &all {
                    prop_assert_eq!(s.len(), m);
                    prop_assert!(IndexSet::new(n, s.elements().to_vec()).is_ok());
                }
                for w in all.windows(2) {
                    // largest differing element decides
                    let a = w[0].elements();
                    let b = w[1].elements();
                    let diff = (1..=n).rev().find(|e| a.contains(e) != b.contains(e));
                    prop_assert!(matches!(diff, Some(e) if b.contains(&e)));
                }
            }

            #[test]
            fn dual_is_an_involution(n in 1usize..=20, mask in any::<u64>()) {
                let s = IndexSet::from_mask(n, mask & ((1u64 << n) - 1));
                prop_assert_eq!(s.dual().dual(), s.clone());
                prop_assert_eq!(s.len() + s.dual().len(), n);
            }
        }
    }
}
