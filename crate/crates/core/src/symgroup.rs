//! The symmetric group S_n: permutations, lexicographic enumeration, the
//! reversal and the long cycle, cyclic cosets and conjugacy classes.
//!
//! Composition is `(p ∘ q)(i) = p(q(i))` throughout the crate.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest degree for which all of S_n is materialized.
pub const MAX_N: usize = 8;

/// A bijection of `{1..n}` stored by its images: `images[i - 1] = π(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 1..={n}"
                )));
            }
            seen[x - 1] = true;
        }
        Ok(Self {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n as u8).collect(),
        }
    }

    /// `w_n`: `i ↦ n + 1 − i`.
    pub fn reversal(n: usize) -> Self {
        Self {
            images: (1..=n as u8).rev().collect(),
        }
    }

    /// The long cycle `(1 2 … n)`: `i ↦ i + 1`, `n ↦ 1`.
    pub fn cyc(n: usize) -> Self {
        Self {
            images: (0..n as u8).map(|i| (i + 1) % n as u8 + 1).collect(),
        }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidPermutation(format!(
                "transposition ({a} {b}) outside 1..={n}"
            )));
        }
        let mut images: Vec<u8> = (1..=n as u8).collect();
        images.swap(a - 1, b - 1);
        Ok(Self { images })
    }

    /// The adjacent transpositions `(i i+1)`, `1 ≤ i < n`.
    pub fn adjacent_transpositions(n: usize) -> Vec<Self> {
        (1..n)
            .map(|i| Self::transposition(n, i, i + 1).expect("in range"))
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `π(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| x as usize == i + 1)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::SizeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Self {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize - 1])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = i as u8 + 1;
        }
        Self { images }
    }

    /// `self^k` for any integer `k`.
    pub fn power(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity(self.degree());
        for _ in 0..k.unsigned_abs() {
            out = base.compose_unchecked(&out);
        }
        out
    }

    /// Cycle lengths sorted in decreasing order (fixed points included).
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i - 1] {
                seen[i - 1] = true;
                i = self.apply(i);
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Position of `self` in the lexicographic enumeration of S_n
    /// (Lehmer code).
    pub fn lex_rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0;
        for i in 0..n {
            let smaller_after = self.images[i + 1..]
                .iter()
                .filter(|&&x| x < self.images[i])
                .count();
            rank = rank * (n - i) + smaller_after;
        }
        rank
    }

    /// Drops the last entry of a permutation fixing `n`, giving an element of
    /// S_{n−1}.
    pub fn restrict(&self) -> Result<Self> {
        let n = self.degree();
        if n == 0 || self.apply(n) != n {
            return Err(Error::InvalidPermutation(format!(
                "{self} does not fix {n}"
            )));
        }
        Ok(Self {
            images: self.images[..n - 1].to_vec(),
        })
    }

    /// Embeds into S_{n+1} by fixing `n + 1`.
    pub fn extend(&self) -> Self {
        let mut images = self.images.clone();
        images.push(self.degree() as u8 + 1);
        Self { images }
    }

    /// The unique `c^k ∘ self` that fixes `n`, where `c` is the long cycle.
    pub fn coset_representative(&self) -> Self {
        let n = self.degree();
        let shift = (n - self.apply(n)) as u8;
        Self {
            images: self
                .images
                .iter()
                .map(|&x| (x - 1 + shift) % n as u8 + 1)
                .collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.images.iter().join(" "))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(&images)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All of S_n in lexicographic order, with `O(n²)` index lookup.
#[derive(Debug)]
pub struct SymmetricGroup {
    n: usize,
    elements: Vec<Permutation>,
}

impl SymmetricGroup {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    pub fn index_of(&self, p: &Permutation) -> usize {
        debug_assert_eq!(p.degree(), self.n);
        p.lex_rank()
    }
}

/// Cached S_n for `1 ≤ n ≤ MAX_N`.
pub fn group(n: usize) -> Result<&'static SymmetricGroup> {
    static GROUPS: [OnceLock<SymmetricGroup>; MAX_N + 1] = [const { OnceLock::new() }; MAX_N + 1];
    if n == 0 || n > MAX_N {
        return Err(Error::NTooLarge { n, max: MAX_N });
    }
    Ok(GROUPS[n].get_or_init(|| SymmetricGroup {
        n,
        elements: (1..=n)
            .permutations(n)
            .map(|images| Permutation::from_images(&images).expect("bijection"))
            .collect(),
    }))
}

/// All `n!` permutations in lexicographic order of image sequences.
pub fn enumerate(n: usize) -> Result<Vec<Permutation>> {
    Ok(group(n)?.elements.clone())
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Partition of S_n into the right cosets `C_n ∘ π` of the cyclic group
/// generated by the long cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetPartition {
    /// Members of each coset, sorted lexicographically.
    pub classes: Vec<Vec<Permutation>>,
    /// The member of each coset fixing `n`.
    pub representatives: Vec<Permutation>,
}

impl CosetPartition {
    pub fn class_of(&self, p: &Permutation) -> Option<usize> {
        let rep = p.coset_representative();
        self.representatives.iter().position(|r| *r == rep)
    }
}

pub fn cyclic_cosets(n: usize) -> Result<CosetPartition> {
    if n < 2 {
        return Err(Error::NOutOfRange {
            n,
            min: 2,
            max: MAX_N,
        });
    }
    let c = Permutation::cyc(n);
    let mut classes = Vec::new();
    let mut representatives = Vec::new();
    for p in group(n)?.elements().iter().filter(|p| p.apply(n) == n) {
        let mut class: Vec<Permutation> = (0..n as i64)
            .map(|k| c.power(k).compose_unchecked(p))
            .collect();
        class.sort();
        classes.push(class);
        representatives.push(p.clone());
    }
    Ok(CosetPartition {
        classes,
        representatives,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    /// Cycle type as a partition of `n`, parts decreasing.
    pub cycle_type: Vec<usize>,
    pub size: usize,
    pub representative: Permutation,
}

fn partitions(n: usize, max_part: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=max_part.min(n) {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// One class per partition of `n`, in increasing lexicographic order of the
/// (decreasing) cycle type; e.g. `(1,1,1), (2,1), (3)` for `n = 3`.
pub fn conjugacy_classes(n: usize) -> Result<Vec<ConjugacyClass>> {
    if n == 0 || n > MAX_N {
        return Err(Error::NTooLarge { n, max: MAX_N });
    }
    let mut types = partitions(n, n);
    types.sort();
    Ok(types
        .into_iter()
        .map(|cycle_type| {
            // centralizer order: Π k^{m_k} m_k!
            let centralizer: usize = (1..=n)
                .map(|k| {
                    let m = cycle_type.iter().filter(|&&p| p == k).count();
                    k.pow(m as u32) * factorial(m)
                })
                .product();
            let mut images = vec![0usize; n];
            let mut start = 0;
            for &len in &cycle_type {
                for off in 0..len {
                    images[start + off] = start + (off + 1) % len + 1;
                }
                start += len;
            }
            ConjugacyClass {
                size: factorial(n) / centralizer,
                representative: Permutation::from_images(&images).expect("cycle layout"),
                cycle_type,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images).unwrap()
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate(1).unwrap(), vec![p(&[1])]);
        let s3 = enumerate(3).unwrap();
        assert_eq!(s3.len(), 6);
        assert_eq!(s3[0], p(&[1, 2, 3]));
        assert_eq!(s3[5], p(&[3, 2, 1]));
        assert_eq!(enumerate(5).unwrap().len(), 120);
        assert_eq!(enumerate(9), Err(Error::NTooLarge { n: 9, max: 8 }));
    }

    #[test]
    fn lex_rank_matches_enumeration() {
        for n in 1..=5 {
            for (i, q) in enumerate(n).unwrap().iter().enumerate() {
                assert_eq!(q.lex_rank(), i);
            }
        }
    }

    #[test]
    fn compose_examples() {
        let q = p(&[1, 3, 2]);
        assert_eq!(Permutation::identity(3).compose(&q).unwrap(), q);
        let w = Permutation::reversal(3);
        assert!(w.compose(&w).unwrap().is_identity());
        assert_eq!(p(&[2, 1, 3]).compose(&q).unwrap(), p(&[2, 3, 1]));
        assert!(matches!(
            p(&[1, 2]).compose(&q),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn distinguished_elements() {
        assert_eq!(Permutation::reversal(3), p(&[3, 2, 1]));
        assert_eq!(Permutation::cyc(4), p(&[2, 3, 4, 1]));
        assert_eq!(Permutation::reversal(1), p(&[1]));
        assert!(Permutation::cyc(5).power(5).is_identity());
    }

    #[test]
    fn text_form() {
        let q: Permutation = "3 1 2".parse().unwrap();
        assert_eq!(q.apply(1), 3);
        assert_eq!(q.to_string(), "3 1 2");
        assert!("1 1 2".parse::<Permutation>().is_err());
    }

    #[test]
    fn cosets_n3() {
        let cp = cyclic_cosets(3).unwrap();
        assert_eq!(cp.classes.len(), 2);
        assert_eq!(
            cp.classes[0],
            vec![p(&[1, 2, 3]), p(&[2, 3, 1]), p(&[3, 1, 2])]
        );
        assert_eq!(cp.representatives, vec![p(&[1, 2, 3]), p(&[2, 1, 3])]);
    }

    #[test]
    fn cosets_n4_counts() {
        let cp = cyclic_cosets(4).unwrap();
        assert_eq!(cp.classes.len(), 6);
        assert!(cp.classes.iter().all(|c| c.len() == 4));
    }

    /// Brute force: group S_n by cycle type computed from scratch.
    fn brute_force_class_sizes(n: usize) -> Vec<(Vec<usize>, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for q in enumerate(n).unwrap() {
            *counts.entry(q.cycle_type()).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }

    #[test]
    fn conjugacy_classes_match_brute_force() {
        for n in 1..=6 {
            let classes = conjugacy_classes(n).unwrap();
            let brute = brute_force_class_sizes(n);
            assert_eq!(classes.len(), brute.len());
            for (c, (t, size)) in classes.iter().zip(&brute) {
                assert_eq!(&c.cycle_type, t);
                assert_eq!(c.size, *size);
                assert_eq!(c.representative.cycle_type(), c.cycle_type);
            }
            assert_eq!(classes.iter().map(|c| c.size).sum::<usize>(), factorial(n));
        }
        let sizes = |n| {
            conjugacy_classes(n)
                .unwrap()
                .iter()
                .map(|c| c.size)
                .collect::<Vec<_>>()
        };
        assert_eq!(sizes(2), vec![1, 1]);
        assert_eq!(sizes(3), vec![1, 3, 2]);
        assert_eq!(sizes(4), vec![1, 6, 3, 8, 6]);
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..=6).prop_flat_map(|n| {
            Just((1..=n).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(&v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn inverse_cancels(q in arb_perm()) {
            prop_assert!(q.compose(&q.inverse()).unwrap().is_identity());
            prop_assert!(q.inverse().compose(&q).unwrap().is_identity());
        }

        #[test]
        fn coset_membership(q in arb_perm().prop_filter("n >= 2", |q| q.degree() >= 2)) {
            let n = q.degree();
            let cp = cyclic_cosets(n).unwrap();
            let containing: Vec<usize> = (0..cp.classes.len())
                .filter(|&k| cp.classes[k].contains(&q))
                .collect();
            prop_assert_eq!(containing.len(), 1);
            let k = containing[0];
            prop_assert_eq!(cp.representatives[k].apply(n), n);
            prop_assert_eq!(cp.class_of(&q), Some(k));
            let c = Permutation::cyc(n);
            let mut expected: Vec<Permutation> =
                (0..n as i64).map(|j| c.power(j).compose(&q).unwrap()).collect();
            expected.sort();
            prop_assert_eq!(&cp.classes[k], &expected);
        }
    }
}
