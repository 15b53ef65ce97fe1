//! Multiset permutations `w ∈ S_η` and Han's Denert statistic.
//!
//! Letters are `1..=r` and positions are 1-based throughout, so that
//! `Σ_{i ∈ Exc(w)} i` reads exactly as written.

use std::fmt;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::perm::{join, next_permutation, parse_sequence, Permutation};
use crate::stats;

/// Positions where `letters` strictly exceeds `trivial` letterwise.
pub fn exc_set_of(letters: &[usize], trivial: &[usize]) -> Vec<usize> {
    letters
        .iter()
        .zip(trivial)
        .enumerate()
        .filter(|(_, (w, id))| w > id)
        .map(|(i, _)| i + 1)
        .collect()
}

/// The three summands of `denh`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DenhParts {
    pub exc_sum: usize,
    pub imv_exceeding: usize,
    pub inv_nonexceeding: usize,
}

impl DenhParts {
    pub fn total(&self) -> usize {
        self.exc_sum + self.imv_exceeding + self.inv_nonexceeding
    }
}

/// `denh` for a word given as letters together with its trivial word.
pub fn denh_parts_of(letters: &[usize], trivial: &[usize]) -> DenhParts {
    let mut exc_sum = 0;
    let mut exceeding = Vec::with_capacity(letters.len());
    let mut nonexceeding = Vec::with_capacity(letters.len());
    for (i, (&w, &id)) in letters.iter().zip(trivial).enumerate() {
        if w > id {
            exc_sum += i + 1;
            exceeding.push(w);
        } else {
            nonexceeding.push(w);
        }
    }
    DenhParts {
        exc_sum,
        imv_exceeding: stats::imv(&exceeding),
        inv_nonexceeding: stats::inv(&nonexceeding),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<usize>,
    composition: Composition,
}

impl Word {
    /// Checks that letter `k` occurs exactly `η_k` times.
    pub fn new(composition: Composition, letters: Vec<usize>) -> Result<Self> {
        if letters.len() != composition.n() {
            return Err(Error::InvalidWord(format!(
                "length {} but composition {} has n = {}",
                letters.len(),
                composition,
                composition.n()
            )));
        }
        let mut counts = vec![0usize; composition.r()];
        for &l in &letters {
            if l == 0 || l > composition.r() {
                return Err(Error::InvalidWord(format!(
                    "letter {l} outside 1..={}",
                    composition.r()
                )));
            }
            counts[l - 1] += 1;
        }
        if counts != composition.parts() {
            return Err(Error::InvalidWord(format!(
                "letter multiplicities {counts:?} differ from {composition}"
            )));
        }
        Ok(Word {
            letters,
            composition,
        })
    }

    pub fn parse(composition: Composition, s: &str) -> Result<Self> {
        let seq =
            parse_sequence(s).ok_or_else(|| Error::InvalidWord(format!("cannot parse {s:?}")))?;
        let letters = seq
            .into_iter()
            .map(|v| {
                usize::try_from(v).map_err(|_| Error::InvalidWord(format!("negative letter {v}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(composition, letters)
    }

    /// The sorted word `id^η`.
    pub fn trivial(composition: Composition) -> Self {
        Word {
            letters: composition.trivial_letters(),
            composition,
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    pub fn descent_set(&self) -> Vec<usize> {
        stats::descent_set(&self.letters)
    }

    pub fn des(&self) -> usize {
        stats::des(&self.letters)
    }

    pub fn maj(&self) -> usize {
        stats::maj(&self.letters)
    }

    pub fn exc_set(&self) -> Vec<usize> {
        exc_set_of(&self.letters, &self.composition.trivial_letters())
    }

    pub fn exc(&self) -> usize {
        self.exc_set().len()
    }

    /// `E(w)`: letters at excedance positions, in order.
    pub fn exceeding_subword(&self) -> Vec<usize> {
        self.exc_set()
            .into_iter()
            .map(|i| self.letters[i - 1])
            .collect()
    }

    /// `N(w)`: letters at the remaining positions, in order.
    pub fn nonexceeding_subword(&self) -> Vec<usize> {
        let trivial = self.composition.trivial_letters();
        self.letters
            .iter()
            .zip(&trivial)
            .filter(|(w, id)| w <= id)
            .map(|(&w, _)| w)
            .collect()
    }

    pub fn denh_parts(&self) -> DenhParts {
        denh_parts_of(&self.letters, &self.composition.trivial_letters())
    }

    pub fn denh(&self) -> usize {
        self.denh_parts().total()
    }

    /// Replaces the `η_k` copies of `k`, left to right, by consecutive
    /// integers starting after `η₁ + … + η_{k−1}`.
    pub fn standardize(&self) -> Permutation {
        let mut next: Vec<usize> = self
            .composition
            .parts()
            .iter()
            .scan(0, |acc, &p| {
                let start = *acc + 1;
                *acc += p;
                Some(start)
            })
            .collect();
        let image = self
            .letters
            .iter()
            .map(|&l| {
                let v = next[l - 1];
                next[l - 1] += 1;
                v
            })
            .collect();
        Permutation::new(image).expect("standardisation is a bijection onto [n]")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.composition.r() <= 9 {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            f.write_str(&join(&self.letters))
        }
    }
}

/// Every word of `S_η` in lexicographic order.
pub struct Words {
    composition: Composition,
    current: Vec<usize>,
    done: bool,
}

impl Words {
    pub fn new(composition: &Composition) -> Self {
        Words {
            current: composition.trivial_letters(),
            composition: composition.clone(),
            done: false,
        }
    }
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let out = Word {
            letters: self.current.clone(),
            composition: self.composition.clone(),
        };
        self.done = !next_permutation(&mut self.current);
        Some(out)
    }
}

/// Visits the letters of every word of `S_η` in lexicographic order
/// without allocating per word.
pub fn for_each_word<F: FnMut(&[usize])>(composition: &Composition, mut f: F) {
    let mut current = composition.trivial_letters();
    loop {
        f(&current);
        if !next_permutation(&mut current) {
            break;
        }
    }
}
