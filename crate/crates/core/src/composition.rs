//! Compositions of `n`: ordered tuples of positive parts.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
    n: usize,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if let Some(p) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidComposition(format!("part {} is zero", p + 1)));
        }
        let n = parts.iter().sum();
        Ok(Composition { parts, n })
    }

    /// The rectangle `(m^r)`.
    pub fn rectangle(r: usize, m: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidComposition("rectangle with zero rows".into()));
        }
        Composition::new(vec![m; r])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.parts.len()
    }

    /// Partial sums `η₁, η₁+η₂, …` excluding the full sum `n`.
    pub fn descent_set(&self) -> Vec<usize> {
        self.parts[..self.r() - 1]
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// `Some((r, m))` when every part equals `m`.
    pub fn as_rectangle(&self) -> Option<(usize, usize)> {
        let m = self.parts[0];
        self.parts.iter().all(|&p| p == m).then_some((self.r(), m))
    }

    /// The trivial word `1^{η₁} 2^{η₂} … r^{η_r}`.
    pub fn trivial_letters(&self) -> Vec<usize> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(k, &p)| std::iter::repeat_n(k + 1, p))
            .collect()
    }

    /// Number of multiset permutations `n! / Π η_k!`.
    pub fn multinomial(&self) -> u128 {
        let mut acc: u128 = 1;
        let mut filled = 0u128;
        for &p in &self.parts {
            for i in 1..=p as u128 {
                filled += 1;
                // binomial build-up keeps every intermediate integral
                acc = acc * filled / i;
            }
        }
        acc
    }

    /// The one-part composition `(n)`.
    pub fn single(n: usize) -> Result<Self> {
        Composition::new(vec![n])
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Comma-separated positive integers, e.g. `3,2,2,3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidComposition("empty".into()));
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidComposition(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// All `2^{n-1}` compositions of `n`, ordered by the binary encoding of
/// their cut points.
pub fn compositions_of(n: usize) -> impl Iterator<Item = Composition> {
    let count: u64 = if n == 0 { 0 } else { 1u64 << (n - 1) };
    (0..count).map(move |mask| {
        let mut parts = Vec::new();
        let mut run = 1;
        for bit in 0..n - 1 {
            if mask & (1 << bit) != 0 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        Composition::new(parts).expect("parts are positive")
    })
}

/// Every composition of every `n` in `1..=max_n`.
pub fn compositions_up_to(max_n: usize) -> impl Iterator<Item = Composition> {
    (1..=max_n).flat_map(compositions_of)
}
