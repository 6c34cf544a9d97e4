//! Integer partitions in multiplicity form and the binomial helpers the
//! multiset recurrences are built on.
use crate::scalar::{from_usize, Coeff};

/// A partition `N = c_1 N_1 + c_2 N_2 + ...` with strictly decreasing part
/// sizes `N_j` and positive multiplicities `c_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionWithMultiplicity {
    parts: Vec<(usize, usize)>,
}

impl PartitionWithMultiplicity {
    /// `(part size, multiplicity)` pairs, largest part first.
    pub fn parts(&self) -> &[(usize, usize)] {
        &self.parts
    }

    /// The partitioned integer.
    pub fn total(&self) -> usize {
        self.parts.iter().map(|&(n, c)| n * c).sum()
    }

    /// Number of parts counted with multiplicity.
    pub fn num_parts(&self) -> usize {
        self.parts.iter().map(|&(_, c)| c).sum()
    }

    fn from_parts(parts: &[usize]) -> Self {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in parts {
            match out.last_mut() {
                Some((n, c)) if *n == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        Self { parts: out }
    }
}

/// Streams the partitions of `n` in decreasing lexicographic order
/// (`4`, `3+1`, `2+2`, `2+1+1`, `1+1+1+1`).
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<usize>>,
    exact_parts: Option<usize>,
}

impl Iterator for Partitions {
    type Item = PartitionWithMultiplicity;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let parts = self.current.as_mut()?;
            let item = match self.exact_parts {
                Some(k) if parts.len() != k => None,
                _ => Some(PartitionWithMultiplicity::from_parts(parts)),
            };
            if !advance(parts) {
                self.current = None;
            }
            if item.is_some() {
                return item;
            }
        }
    }
}

/// Moves to the next partition in decreasing lexicographic order.
fn advance(parts: &mut Vec<usize>) -> bool {
    let mut ones = 0;
    while parts.last() == Some(&1) {
        parts.pop();
        ones += 1;
    }
    let Some(last) = parts.last_mut() else {
        return false;
    };
    *last -= 1;
    let cap = *last;
    let mut rest = ones + 1;
    while rest > 0 {
        let p = rest.min(cap);
        parts.push(p);
        rest -= p;
    }
    true
}

/// Every partition of `n`, optionally only those with exactly
/// `exact_parts` parts. `n = 0` yields one empty partition.
pub fn partitions_of(n: usize, exact_parts: Option<usize>) -> Partitions {
    Partitions {
        current: Some(if n == 0 { vec![] } else { vec![n] }),
        exact_parts,
    }
}

pub fn binomial<T: Coeff>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 1..=k {
        acc *= from_usize::<T>(n - k + i);
        acc /= from_usize::<T>(i);
    }
    acc
}

/// `binom(n + c - 1, c)`: multisets of size `c` drawn from `n` types.
pub fn multiset_binomial<T: Coeff>(n: &T, c: usize) -> T {
    let mut acc = T::one();
    for i in 1..=c {
        acc *= n.clone() + from_usize::<T>(i - 1);
        acc /= from_usize::<T>(i);
    }
    acc
}
