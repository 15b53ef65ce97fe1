//! Permutations of `[n]` in one-line notation.

use std::fmt;

use crate::error::{Error, Result};
use crate::stats;

/// Rearranges `v` into its lexicographic successor. Returns `false` (and
/// leaves `v` sorted ascending) once the last arrangement has been passed.
/// Repeated values are handled, so this also steps through multiset
/// permutations.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Parses `1,3,2` or, when no comma is present, a run of single digits `132`.
pub(crate) fn parse_sequence(s: &str) -> Option<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if s.contains(',') {
        s.split(',').map(|t| t.trim().parse().ok()).collect()
    } else if s.chars().all(|c| c.is_ascii_digit()) {
        Some(s.chars().map(|c| c.to_digit(10).unwrap() as i64).collect())
    } else {
        s.parse().ok().map(|v| vec![v])
    }
}

pub(crate) fn join<T: fmt::Display>(v: &[T]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
    inverse: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty".into()));
        }
        let mut inverse = vec![0; n];
        for (i, &v) in image.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..={n}"
                )));
            }
            if inverse[v - 1] != 0 {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            inverse[v - 1] = i + 1;
        }
        Ok(Permutation { image, inverse })
    }

    pub fn identity(n: usize) -> Self {
        let image: Vec<usize> = (1..=n).collect();
        Permutation {
            inverse: image.clone(),
            image,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let seq = parse_sequence(s)
            .ok_or_else(|| Error::InvalidPermutation(format!("cannot parse {s:?}")))?;
        let image = seq
            .into_iter()
            .map(|v| {
                usize::try_from(v)
                    .map_err(|_| Error::InvalidPermutation(format!("negative value {v}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(image)
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    /// `σ⁻¹(j)` for 1-based `j`.
    pub fn apply_inverse(&self, j: usize) -> usize {
        self.inverse[j - 1]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            image: self.inverse.clone(),
            inverse: self.image.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn descent_set(&self) -> Vec<usize> {
        stats::descent_set(&self.image)
    }

    pub fn des(&self) -> usize {
        stats::des(&self.image)
    }

    pub fn maj(&self) -> usize {
        stats::maj(&self.image)
    }

    /// Positions `i` with `σ(i) > i`.
    pub fn exc_set(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.apply(i) > i).collect()
    }

    pub fn exc(&self) -> usize {
        self.exc_set().len()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.image))
    }
}

/// All of `S_n` in lexicographic order.
pub struct Permutations {
    current: Vec<usize>,
    done: bool,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations {
            current: (1..=n).collect(),
            done: n == 0,
        }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = Permutation::new(self.current.clone()).expect("valid by construction");
        self.done = !next_permutation(&mut self.current);
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_inverse() {
        let s = Permutation::parse("6,8,10,2,4,3,5,1,7,9").unwrap();
        assert_eq!(s.inverse().image(), &[8, 4, 6, 5, 7, 1, 9, 2, 10, 3]);
        for i in 1..=10 {
            assert_eq!(s.apply_inverse(s.apply(i)), i);
        }
        assert!(Permutation::parse("1,1").is_err());
        assert!(Permutation::parse("1,3").is_err());
        assert!(Permutation::parse("0,1").is_err());
        assert!(Permutation::parse("-1,1").is_err());
        assert_eq!(Permutation::parse("312").unwrap().image(), &[3, 1, 2]);
    }

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<_> = Permutations::new(3).map(|p| p.to_string()).collect();
        assert_eq!(all, ["1,2,3", "1,3,2", "2,1,3", "2,3,1", "3,1,2", "3,2,1"]);
        assert_eq!(Permutations::new(6).count(), 720);
    }

    #[test]
    fn multiset_successor() {
        let mut v = vec![1, 1, 2];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen, vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
        assert_eq!(v, vec![1, 1, 2]);
    }
}
