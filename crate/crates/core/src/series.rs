//! Truncated power series with exact integer coefficients, Euler transforms
//! and cycle-index substitution.
//!
//! Every binary operation requires both operands to carry the same order;
//! nothing here silently extends or shrinks a truncation.
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{from_usize, Coeff};

/// A power series in `z` kept up to and including `z^order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> TruncSeries<T> {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = T::one();
        s
    }

    /// Builds a series from `coeffs`, padding with zeros or truncating so that
    /// the result has exactly the requested order.
    pub fn from_coeffs(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        Self { coeffs }
    }

    /// `1 + z + z^2 + ...`, the series of `1/(1-z)`.
    pub fn geometric(order: usize) -> Self {
        Self {
            coeffs: vec![T::one(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^n`; zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> T {
        self.coeffs.get(n).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.clone() + b)
            .collect();
        Ok(Self { coeffs })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                out[i + j] += a.clone() * b;
            }
        }
        Ok(Self { coeffs: out })
    }

    pub fn scale(&self, k: &T) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.clone() * k).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..exp {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    /// `a(z^j)` truncated at the same order.
    pub fn substitute_power(&self, j: usize) -> Self {
        assert!(j >= 1, "substitute_power needs j >= 1");
        let order = self.order();
        let mut out = vec![T::zero(); order + 1];
        for (n, a) in self.coeffs.iter().enumerate() {
            let m = n * j;
            if m > order {
                break;
            }
            out[m] = a.clone();
        }
        Self { coeffs: out }
    }

    /// Multiplies by `z^k`, dropping what falls past the order.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = vec![T::zero(); order + 1];
        if k <= order {
            out[k..].clone_from_slice(&self.coeffs[..=order - k]);
        }
        Self { coeffs: out }
    }

    /// Re-truncates to a lower order, or pads with zeros to a higher one.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order)
    }

    /// Coefficient-wise division that must leave no remainder.
    pub fn div_exact(&self, divisor: &T, context: &'static str) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (degree, a) in self.coeffs.iter().enumerate() {
            let (q, r) = a.div_rem(divisor);
            if !r.is_zero() {
                return Err(Error::InexactDivision {
                    context,
                    degree,
                    numerator: a.to_string(),
                    divisor: divisor.to_string(),
                });
            }
            coeffs.push(q);
        }
        Ok(Self { coeffs })
    }
}

impl<T: fmt::Debug> fmt::Debug for TruncSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c:?}")?;
        }
        write!(f, "]")
    }
}

/// A plain integer sequence indexed from `n = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntSequence<T> {
    values: Vec<T>,
}

impl<T: Coeff> IntSequence<T> {
    pub fn new(values: Vec<T>) -> Self {
        Self { values }
    }

    /// Value at `n`, zero past the end.
    pub fn get(&self, n: usize) -> T {
        self.values.get(n).cloned().unwrap_or_else(T::zero)
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn push(&mut self, v: T) {
        self.values.push(v);
    }
}

impl<T: Coeff> From<TruncSeries<T>> for IntSequence<T> {
    fn from(s: TruncSeries<T>) -> Self {
        Self::new(s.into_coeffs())
    }
}

impl<T: Coeff> FromIterator<T> for IntSequence<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

/// Euler transform: the coefficients of `prod_{n>=1} (1-z^n)^(-a_n)`.
///
/// `a_0` is ignored. Runs the divisor-sum recurrence
/// `n b_n = c_n + sum_{k=1}^{n-1} c_k b_{n-k}` with `c_n = sum_{d|n} d a_d`.
pub fn euler_transform<T: Coeff>(a: &IntSequence<T>, order: usize) -> Result<TruncSeries<T>> {
    let mut c = vec![T::zero(); order + 1];
    for d in 1..=order {
        let ad = a.get(d);
        if ad.is_zero() {
            continue;
        }
        let term = ad * from_usize::<T>(d);
        let mut m = d;
        while m <= order {
            c[m] += &term;
            m += d;
        }
    }
    let mut b = vec![T::zero(); order + 1];
    b[0] = T::one();
    for n in 1..=order {
        let mut acc = c[n].clone();
        for k in 1..n {
            acc += c[k].clone() * &b[n - k];
        }
        let (q, r) = acc.div_rem(&from_usize(n));
        if !r.is_zero() {
            return Err(Error::InexactDivision {
                context: "euler transform",
                degree: n,
                numerator: acc.to_string(),
                divisor: n.to_string(),
            });
        }
        b[n] = q;
    }
    Ok(TruncSeries { coeffs: b })
}

/// Exponents `j -> e_j` of one cycle-index monomial `prod t_j^{e_j}`.
pub type Monomial = BTreeMap<usize, u32>;

/// A cycle index stored as integer numerators over one shared group order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleIndex {
    group_order: u64,
    terms: Vec<(u64, Monomial)>,
}

impl CycleIndex {
    /// Validates that the numerators sum to the group order and that every
    /// monomial has the same degree `sum j e_j`.
    pub fn new(group_order: u64, terms: Vec<(u64, Monomial)>) -> Result<Self> {
        if group_order == 0 {
            return Err(Error::InvalidCycleIndex(
                "group order must be positive".into(),
            ));
        }
        let total: u64 = terms.iter().map(|(c, _)| c).sum();
        if total != group_order {
            return Err(Error::InvalidCycleIndex(format!(
                "coefficients sum to {total}, group order is {group_order}"
            )));
        }
        let degrees: Vec<u64> = terms
            .iter()
            .map(|(_, m)| m.iter().map(|(&j, &e)| j as u64 * e as u64).sum())
            .collect();
        if degrees.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::InvalidCycleIndex(format!(
                "monomial degrees differ: {degrees:?}"
            )));
        }
        if terms.iter().any(|(_, m)| m.contains_key(&0)) {
            return Err(Error::InvalidCycleIndex("cycle length 0".into()));
        }
        let mut merged: BTreeMap<Monomial, u64> = BTreeMap::new();
        for (c, m) in terms {
            *merged.entry(m).or_insert(0) += c;
        }
        let mut terms: Vec<(u64, Monomial)> = merged.into_iter().map(|(m, c)| (c, m)).collect();
        // identity cycle type first: most fixed points, then most 2-cycles, ...
        let key = |m: &Monomial| -> Vec<u32> {
            let top = m.keys().copied().max().unwrap_or(0);
            (1..=top).map(|j| m.get(&j).copied().unwrap_or(0)).collect()
        };
        terms.sort_by_key(|t| std::cmp::Reverse(key(&t.1)));
        Ok(Self { group_order, terms })
    }

    /// Builds the cycle index of a permutation group given by all of its
    /// elements, each as an image vector `i -> perm[i]`.
    pub fn from_permutations(perms: &[Vec<usize>]) -> Result<Self> {
        let mut counts: BTreeMap<Monomial, u64> = BTreeMap::new();
        for p in perms {
            let mut seen = vec![false; p.len()];
            let mut mono = Monomial::new();
            for start in 0..p.len() {
                if seen[start] {
                    continue;
                }
                let mut len = 0;
                let mut i = start;
                while !seen[i] {
                    seen[i] = true;
                    i = *p.get(i).ok_or_else(|| {
                        Error::InvalidCycleIndex(format!("image out of range in {p:?}"))
                    })?;
                    len += 1;
                }
                *mono.entry(len).or_insert(0) += 1;
            }
            *counts.entry(mono).or_insert(0) += 1;
        }
        let terms = counts.into_iter().map(|(m, c)| (c, m)).collect();
        Self::new(perms.len() as u64, terms)
    }

    /// `t_1`, the trivial group on one slot.
    pub fn trivial() -> Self {
        Self::new(1, vec![(1, mono(&[(1, 1)]))]).unwrap()
    }

    /// `(t_1^2 + t_2)/2`, two slots that may be swapped.
    pub fn cyclic2() -> Self {
        Self::new(2, vec![(1, mono(&[(1, 2)])), (1, mono(&[(2, 1)]))]).unwrap()
    }

    /// `(t_1^3 + 3 t_1 t_2 + 2 t_3)/6`, the full symmetric group on three slots.
    pub fn symmetric3() -> Self {
        Self::new(
            6,
            vec![
                (1, mono(&[(1, 3)])),
                (3, mono(&[(1, 1), (2, 1)])),
                (2, mono(&[(3, 1)])),
            ],
        )
        .unwrap()
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn terms(&self) -> &[(u64, Monomial)] {
        &self.terms
    }

    /// Number of slots the group permutes.
    pub fn degree(&self) -> u64 {
        self.terms
            .first()
            .map(|(_, m)| m.iter().map(|(&j, &e)| j as u64 * e as u64).sum())
            .unwrap_or(0)
    }

    /// Evaluates `(1/|G|) sum coeff prod_j arg(j)^{e_j}` with exact division.
    pub fn substitute<T: Coeff>(
        &self,
        arg_for: &BTreeMap<usize, TruncSeries<T>>,
    ) -> Result<TruncSeries<T>> {
        let order = arg_for
            .values()
            .next()
            .map(TruncSeries::order)
            .ok_or(Error::MissingArgument(1))?;
        let mut acc = TruncSeries::zero(order);
        for (c, m) in &self.terms {
            let mut prod = TruncSeries::one(order);
            for (&j, &e) in m {
                let arg = arg_for.get(&j).ok_or(Error::MissingArgument(j))?;
                prod = prod.mul(&arg.pow(e))?;
            }
            let c = T::from_u64(*c).expect("cycle index coefficient fits");
            acc = acc.add(&prod.scale(&c))?;
        }
        let order_t = T::from_u64(self.group_order).expect("group order fits");
        acc.div_exact(&order_t, "cycle index substitution")
    }

    /// The usual Pólya substitution `t_j -> f(z^j)`.
    pub fn substitute_powers<T: Coeff>(&self, f: &TruncSeries<T>) -> Result<TruncSeries<T>> {
        let args = self
            .terms
            .iter()
            .flat_map(|(_, m)| m.keys().copied())
            .map(|j| (j, f.substitute_power(j)))
            .collect();
        self.substitute(&args)
    }
}

fn mono(pairs: &[(usize, u32)]) -> Monomial {
    pairs.iter().copied().collect()
}

impl fmt::Display for CycleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (c, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            if *c != 1 {
                write!(f, "{c}")?;
            }
            for (j, e) in m {
                write!(f, "t{j}")?;
                if *e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        write!(f, ")/{}", self.group_order)
    }
}

/// Unordered pairs of `f`-objects: `(f(z)^2 + f(z^2))/2`.
pub fn pair_multiset<T: Coeff>(f: &TruncSeries<T>) -> Result<TruncSeries<T>> {
    CycleIndex::cyclic2().substitute_powers(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    type S = TruncSeries<u64>;

    fn s(v: &[u64]) -> S {
        TruncSeries::from_coeffs(v.to_vec(), v.len() - 1)
    }

    #[test]
    fn add_examples() {
        assert_eq!(s(&[1, 1]).add(&s(&[1, 1])).unwrap(), s(&[2, 2]));
        assert_eq!(s(&[1, 2, 4]).add(&S::zero(2)).unwrap(), s(&[1, 2, 4]));
        assert_eq!(s(&[1, 2, 4]).add(&s(&[0, 1, 1])).unwrap(), s(&[1, 3, 5]));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let err = s(&[1, 1]).add(&s(&[1, 1, 1])).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 1, right: 2 });
        assert!(s(&[1]).mul(&s(&[1, 1])).is_err());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(s(&[1, 1]).mul(&s(&[1, 1])).unwrap(), s(&[1, 2]));
        let a = s(&[3, 1, 4, 1, 5]);
        assert_eq!(a.mul(&S::one(4)).unwrap(), a);
    }

    #[test]
    fn substitute_power_examples() {
        assert_eq!(s(&[1, 2, 4, 9]).substitute_power(2), s(&[1, 0, 2, 0]));
        let a = s(&[1, 2, 4, 9]);
        assert_eq!(a.substitute_power(1), a);
    }

    #[test]
    fn euler_transform_of_zero_is_one() {
        let a = IntSequence::new(vec![0u64; 8]);
        assert_eq!(euler_transform(&a, 7).unwrap(), S::one(7));
    }

    #[test]
    fn euler_transform_single_atom() {
        // Multisets of one atom: exactly one of each size. Brute force over
        // partitions of n that only use the part 1.
        let a = IntSequence::new(vec![0u64, 1]);
        let b = euler_transform(&a, 10).unwrap();
        for n in 0..=10 {
            let brute = brute_partitions(n, n)
                .into_iter()
                .filter(|p| p.iter().all(|&x| x == 1))
                .count() as u64;
            assert_eq!(b.coeff(n), brute);
        }
    }

    #[test]
    fn bigint_and_u64_agree() {
        let a: Vec<u64> = vec![0, 1, 1, 2, 4, 9, 20];
        let small = euler_transform(&IntSequence::new(a.clone()), 6).unwrap();
        let big = euler_transform(
            &IntSequence::new(a.into_iter().map(BigUint::from).collect()),
            6,
        )
        .unwrap();
        let big: Vec<u64> = big.coeffs().iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(small.coeffs(), &big[..]);
    }

    fn brute_partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = vec![];
        for first in (1..=max.min(n)).rev() {
            for mut rest in brute_partitions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    /// Explicit multiset oracle: atoms `(weight, label)`, `a_w` labels of
    /// weight `w`; count multisets by total weight.
    fn brute_multisets(a: &[u64], order: usize) -> Vec<u64> {
        let atoms: Vec<usize> = a
            .iter()
            .enumerate()
            .skip(1)
            .flat_map(|(w, &k)| std::iter::repeat_n(w, k as usize))
            .collect();
        let mut counts = vec![0u64; order + 1];
        fn rec(atoms: &[usize], start: usize, left: usize, counts: &mut [u64], used: usize) {
            counts[used] += 1;
            for i in start..atoms.len() {
                if atoms[i] <= left {
                    rec(atoms, i, left - atoms[i], counts, used + atoms[i]);
                }
            }
        }
        rec(&atoms, 0, order, &mut counts, 0);
        counts
    }

    #[test]
    fn cycle_index_s3_on_one_atom() {
        // Triples over {empty, atom} up to reordering, counted by weight.
        let f = s(&[1, 1, 0, 0]);
        let got = CycleIndex::symmetric3().substitute_powers(&f).unwrap();
        let mut brute = [0u64; 4];
        let mut seen = std::collections::BTreeSet::new();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    let mut t = [a, b, c];
                    t.sort();
                    if seen.insert(t) {
                        brute[a + b + c] += 1;
                    }
                }
            }
        }
        assert_eq!(got.coeffs(), &brute);
        assert_eq!(got.coeffs(), &[1, 1, 1, 1]);
    }

    #[test]
    fn trivial_index_is_identity() {
        let f = s(&[1, 4, 2, 7]);
        assert_eq!(CycleIndex::trivial().substitute_powers(&f).unwrap(), f);
    }

    #[test]
    fn from_permutations_recovers_named_indices() {
        let s2 = CycleIndex::from_permutations(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(s2, CycleIndex::cyclic2());
        let s3 = CycleIndex::from_permutations(&[
            vec![0, 1, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![0, 2, 1],
            vec![2, 1, 0],
            vec![1, 0, 2],
        ])
        .unwrap();
        assert_eq!(s3.to_string(), "(t1^3+3t1t2+2t3)/6");
        assert_eq!(s3.degree(), 3);
    }

    #[test]
    fn invalid_cycle_indices_rejected() {
        assert!(CycleIndex::new(2, vec![(1, mono(&[(1, 2)]))]).is_err());
        assert!(CycleIndex::new(2, vec![(1, mono(&[(1, 2)])), (1, mono(&[(1, 1)]))]).is_err());
        assert!(CycleIndex::new(0, vec![]).is_err());
    }

    #[test]
    fn missing_argument_reported() {
        let args: BTreeMap<usize, S> = [(1, s(&[1, 1]))].into_iter().collect();
        assert_eq!(
            CycleIndex::cyclic2().substitute(&args).unwrap_err(),
            Error::MissingArgument(2)
        );
    }

    #[test]
    fn pair_multiset_of_one() {
        assert_eq!(pair_multiset(&S::one(5)).unwrap(), S::one(5));
    }

    #[test]
    fn div_exact_reports_degree() {
        let err = s(&[2, 4, 5]).div_exact(&2, "test").unwrap_err();
        assert!(matches!(err, Error::InexactDivision { degree: 2, .. }));
    }

    proptest! {
        #[test]
        fn euler_matches_multiset_oracle(a in proptest::collection::vec(0u64..3, 1..6)) {
            let mut seq = vec![0u64];
            seq.extend(a);
            let order = 6;
            let got = euler_transform(&IntSequence::new(seq.clone()), order).unwrap();
            prop_assert_eq!(got.coeffs(), &brute_multisets(&seq, order)[..]);
        }

        #[test]
        fn pair_multiset_matches_pair_oracle(f in proptest::collection::vec(0u64..3, 7)) {
            // objects (weight, label); unordered pairs {u, v} with u <= v
            let objs: Vec<(usize, u64)> = f
                .iter()
                .enumerate()
                .flat_map(|(w, &k)| (0..k).map(move |l| (w, l)))
                .collect();
            let mut brute = [0u64; 7];
            for i in 0..objs.len() {
                for j in i..objs.len() {
                    let w = objs[i].0 + objs[j].0;
                    if w <= 6 {
                        brute[w] += 1;
                    }
                }
            }
            let got = pair_multiset(&s(&f)).unwrap();
            prop_assert_eq!(got.coeffs(), &brute[..]);
        }

        #[test]
        fn substitute_power_composes(v in proptest::collection::vec(0u64..100, 1..12), i in 1usize..4, j in 1usize..4) {
            let a = s(&v);
            prop_assert_eq!(a.substitute_power(i).substitute_power(j), a.substitute_power(i * j));
        }

        #[test]
        fn identity_index_is_plain_power(v in proptest::collection::vec(0u64..20, 1..6), e in 1u32..4) {
            let a = s(&v);
            let z = CycleIndex::new(1, vec![(1, mono(&[(1, e)]))]).unwrap();
            prop_assert_eq!(z.substitute_powers(&a).unwrap(), a.pow(e));
        }
    }
}
