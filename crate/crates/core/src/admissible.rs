//! The block-map grid of a composition and Denert's statistics `den` and
//! `iexc` on η-admissible permutations.
//!
//! A cell `(i, j)` of the `n × n` grid lies in row `i` and column `j`; the
//! permutation matrix of `σ` has its ones at `(i, σ(i))`. The regions
//! `[⪯]` and `[≻]` compare the block of the row with the block of the
//! column.
//!
//! Besides `den` itself this module exposes every auxiliary cell set used
//! in the proofs relating `den` to Han's `denh` (`N⁺[⪯]`, `N⁺[≻]`,
//! `U_σ(l)`, `U_σ⁻¹(l)`, `M⁼`, `M^>` and the per-row pieces), so those
//! identities can be checked cell by cell.

use std::collections::BTreeSet;
use std::fmt;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::{Word, Words};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GridCellSet(BTreeSet<(usize, usize)>);

impl GridCellSet {
    pub fn new() -> Self {
        GridCellSet(BTreeSet::new())
    }

    pub fn insert(&mut self, i: usize, j: usize) {
        self.0.insert((i, j));
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.0.contains(&(i, j))
    }

    /// Cells in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }

    pub fn is_disjoint(&self, other: &GridCellSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &GridCellSet) -> GridCellSet {
        GridCellSet(self.0.union(&other.0).copied().collect())
    }
}

impl FromIterator<(usize, usize)> for GridCellSet {
    fn from_iter<T: IntoIterator<Item = (usize, usize)>>(iter: T) -> Self {
        GridCellSet(iter.into_iter().collect())
    }
}

impl fmt::Display for GridCellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, j)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({i},{j})")?;
        }
        write!(f, "}}")
    }
}

/// The four ingredients of `den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DenParts {
    pub i_sum: usize,
    pub n_plus: usize,
    pub n_minus: usize,
    pub iexc: usize,
}

impl DenParts {
    pub fn total(&self) -> usize {
        // |N⁻| + iexc ≤ Σ I + |N⁺| on admissible input
        (self.i_sum + self.n_plus)
            .checked_sub(self.n_minus + self.iexc)
            .expect("den is non-negative on admissible permutations")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockContext {
    composition: Composition,
    block_of: Vec<usize>,
}

impl BlockContext {
    pub fn new(composition: Composition) -> Self {
        let block_of = composition.trivial_letters();
        BlockContext {
            composition,
            block_of,
        }
    }

    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    pub fn n(&self) -> usize {
        self.composition.n()
    }

    pub fn r(&self) -> usize {
        self.composition.r()
    }

    /// `π_η(i)`.
    pub fn block_index(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.n() {
            return Err(Error::PositionOutOfRange {
                pos: i,
                n: self.n(),
            });
        }
        Ok(self.block_of[i - 1])
    }

    #[inline]
    fn pi(&self, i: usize) -> usize {
        self.block_of[i - 1]
    }

    fn check_size(&self, sigma: &Permutation) -> Result<()> {
        if sigma.n() != self.n() {
            return Err(Error::InvalidPermutation(format!(
                "permutation of length {} for composition {} of {}",
                sigma.n(),
                self.composition,
                self.n()
            )));
        }
        Ok(())
    }

    fn not_admissible(&self, sigma: &Permutation) -> Error {
        Error::NotAdmissible {
            perm: sigma.to_string(),
            eta: self.composition.to_string(),
        }
    }

    /// `π_η(σ) = π_η(σ(1)) ⋯ π_η(σ(n))`.
    pub fn project_perm(&self, sigma: &Permutation) -> Result<Word> {
        self.check_size(sigma)?;
        let letters = sigma.image().iter().map(|&v| self.pi(v)).collect();
        Word::new(self.composition.clone(), letters)
    }

    /// `Des(σ) ⊆ Des(η)`, i.e. `σ` has no descent inside a block.
    pub fn is_admissible(&self, sigma: &Permutation) -> bool {
        sigma.n() == self.n()
            && sigma
                .image()
                .windows(2)
                .enumerate()
                .all(|(i, p)| p[0] < p[1] || self.pi(i + 1) != self.pi(i + 2))
    }

    /// `σ ↦ π_η(σ⁻¹)`.
    pub fn admissible_to_word(&self, sigma: &Permutation) -> Result<Word> {
        self.check_size(sigma)?;
        if !self.is_admissible(sigma) {
            return Err(self.not_admissible(sigma));
        }
        self.project_perm(&sigma.inverse())
    }

    /// All of `S^η`, in the lexicographic order of the corresponding words.
    pub fn admissible_permutations(&self) -> impl Iterator<Item = Permutation> {
        Words::new(&self.composition).map(|w| word_to_admissible(&w))
    }

    /// `I_σ` as cells `(i, σ(i))` in `[≻]`.
    pub fn i_cells(&self, sigma: &Permutation) -> GridCellSet {
        (1..=self.n())
            .filter(|&i| self.pi(i) > self.pi(sigma.apply(i)))
            .map(|i| (i, sigma.apply(i)))
            .collect()
    }

    /// `I_σ = {j : π_η(σ⁻¹(j)) > π_η(j)}`, ascending.
    pub fn i_set(&self, sigma: &Permutation) -> Vec<usize> {
        (1..=self.n())
            .filter(|&j| self.pi(sigma.apply_inverse(j)) > self.pi(j))
            .collect()
    }

    pub fn iexc(&self, sigma: &Permutation) -> usize {
        self.i_set(sigma).len()
    }

    fn in_n_plus(&self, sigma: &Permutation, i: usize, j: usize) -> bool {
        self.pi(i) <= self.pi(j) && sigma.apply(i) < j && sigma.apply_inverse(j) < i
    }

    fn in_n_minus(&self, sigma: &Permutation, i: usize, j: usize) -> bool {
        self.pi(i) > self.pi(j) && sigma.apply(i) < j && sigma.apply_inverse(j) > i
    }

    fn grid<F: Fn(usize, usize) -> bool>(&self, keep: F) -> GridCellSet {
        let n = self.n();
        (1..=n)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| keep(i, j))
            .collect()
    }

    /// `N⁺_σ = [⪯] ∩ {(i,j) : σ(i) < j, σ⁻¹(j) < i}`.
    pub fn n_plus_set(&self, sigma: &Permutation) -> GridCellSet {
        self.grid(|i, j| self.in_n_plus(sigma, i, j))
    }

    /// `N⁻_σ = [≻] ∩ {(i,j) : σ(i) < j, σ⁻¹(j) > i}`.
    pub fn n_minus_set(&self, sigma: &Permutation) -> GridCellSet {
        self.grid(|i, j| self.in_n_minus(sigma, i, j))
    }

    /// `(N⁺_σ[⪯], N⁺_σ[≻])`, split by the region of the row's own one
    /// `(i, σ(i))`.
    pub fn n_plus_split(&self, sigma: &Permutation) -> (GridCellSet, GridCellSet) {
        let weak =
            self.grid(|i, j| self.in_n_plus(sigma, i, j) && self.pi(i) <= self.pi(sigma.apply(i)));
        let strict =
            self.grid(|i, j| self.in_n_plus(sigma, i, j) && self.pi(i) > self.pi(sigma.apply(i)));
        (weak, strict)
    }

    fn check_level(&self, l: usize) -> Result<()> {
        if l < 2 || l > self.r() {
            return Err(Error::BlockOutOfRange { l, r: self.r() });
        }
        Ok(())
    }

    /// `U_σ(l) = {(i, σ(i)) : l ≤ π_η(i), π_η(σ(i)) < l}`.
    pub fn u_set(&self, sigma: &Permutation, l: usize) -> Result<GridCellSet> {
        self.check_level(l)?;
        Ok((1..=self.n())
            .filter(|&i| l <= self.pi(i) && self.pi(sigma.apply(i)) < l)
            .map(|i| (i, sigma.apply(i)))
            .collect())
    }

    /// `U_σ⁻¹(l) = {(i, σ(i)) : π_η(i) < l, l ≤ π_η(σ(i))}`.
    pub fn u_inv_set(&self, sigma: &Permutation, l: usize) -> Result<GridCellSet> {
        self.check_level(l)?;
        Ok((1..=self.n())
            .filter(|&i| self.pi(i) < l && l <= self.pi(sigma.apply(i)))
            .map(|i| (i, sigma.apply(i)))
            .collect())
    }

    /// Rows `j₀` with `(j₀, σ(j₀)) ∈ [≻]`, ascending.
    pub fn succ_rows(&self, sigma: &Permutation) -> Vec<usize> {
        (1..=self.n())
            .filter(|&j0| self.pi(j0) > self.pi(sigma.apply(j0)))
            .collect()
    }

    fn check_row(&self, sigma: &Permutation, j0: usize) -> Result<()> {
        if j0 == 0 || j0 > self.n() {
            return Err(Error::PositionOutOfRange {
                pos: j0,
                n: self.n(),
            });
        }
        if self.pi(j0) <= self.pi(sigma.apply(j0)) {
            return Err(Error::RowNotInSucc { j0 });
        }
        Ok(())
    }

    /// `(M⁼_σ(j₀), M^>_σ(j₀))`: cells `(j₀, σ(i))` with `σ(i) < σ(j₀)` and
    /// `π_η(σ(i)) < π_η(i)`, where row `i` lies in the block of `j₀`
    /// (with `i < j₀`) or in a strictly later block (so `i > j₀`).
    pub fn m_sets(&self, sigma: &Permutation, j0: usize) -> Result<(GridCellSet, GridCellSet)> {
        self.check_size(sigma)?;
        self.check_row(sigma, j0)?;
        let target = sigma.apply(j0);
        let mut equal = GridCellSet::new();
        let mut greater = GridCellSet::new();
        for i in 1..=self.n() {
            let si = sigma.apply(i);
            if si >= target || self.pi(si) >= self.pi(i) {
                continue;
            }
            if i < j0 && self.pi(i) == self.pi(j0) {
                equal.insert(j0, si);
            } else if i > j0 && self.pi(i) > self.pi(j0) {
                greater.insert(j0, si);
            }
        }
        Ok((equal, greater))
    }

    /// `N⁻_σ(j₀)`: the cells of `N⁻_σ` in row `j₀`.
    pub fn n_minus_row(&self, sigma: &Permutation, j0: usize) -> Result<GridCellSet> {
        self.check_size(sigma)?;
        self.check_row(sigma, j0)?;
        Ok((1..=self.n())
            .filter(|&j| self.in_n_minus(sigma, j0, j))
            .map(|j| (j0, j))
            .collect())
    }

    /// `N⁺_σ[≻](j₀)`: the cells of `N⁺_σ[≻]` in row `j₀`.
    pub fn n_plus_succ_row(&self, sigma: &Permutation, j0: usize) -> Result<GridCellSet> {
        self.check_size(sigma)?;
        self.check_row(sigma, j0)?;
        Ok((1..=self.n())
            .filter(|&j| self.in_n_plus(sigma, j0, j))
            .map(|j| (j0, j))
            .collect())
    }

    /// Counts for `den` by a single grid scan, without building cell sets.
    pub fn den_parts(&self, sigma: &Permutation) -> Result<DenParts> {
        self.check_size(sigma)?;
        if !self.is_admissible(sigma) {
            return Err(self.not_admissible(sigma));
        }
        let n = self.n();
        let (mut i_sum, mut iexc, mut n_plus, mut n_minus) = (0, 0, 0, 0);
        for i in 1..=n {
            let si = sigma.apply(i);
            if self.pi(i) > self.pi(si) {
                i_sum += si;
                iexc += 1;
            }
            for j in si + 1..=n {
                let inv_j = sigma.apply_inverse(j);
                if inv_j < i && self.pi(i) <= self.pi(j) {
                    n_plus += 1;
                } else if inv_j > i && self.pi(i) > self.pi(j) {
                    n_minus += 1;
                }
            }
        }
        Ok(DenParts {
            i_sum,
            n_plus,
            n_minus,
            iexc,
        })
    }

    /// `den(σ) = Σ_{j ∈ I_σ} j + |N⁺_σ| − |N⁻_σ| − iexc(σ)`.
    pub fn den(&self, sigma: &Permutation) -> Result<usize> {
        Ok(self.den_parts(sigma)?.total())
    }
}

/// `w ↦ std(w)⁻¹`.
pub fn word_to_admissible(w: &Word) -> Permutation {
    w.standardize().inverse()
}
