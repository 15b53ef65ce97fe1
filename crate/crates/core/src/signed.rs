//! Signed permutations (`B_n`) and even-signed permutations (`D_n`), with
//! their negative, flag and Denert-type statistics.
//!
//! Only the window `σ(1) … σ(n)` is stored; `σ(−i) = −σ(i)` is implied.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{join, next_permutation, parse_sequence, Permutation};
use crate::stats;
use crate::word::denh_parts_of;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    window: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BStats {
    pub neg: usize,
    pub ndes: usize,
    pub nmaj: usize,
    pub fdes: usize,
    pub fmaj: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DStats {
    pub dneg: usize,
    pub ddes: usize,
    pub dmaj: usize,
    pub dexc: usize,
    pub nsp: usize,
    pub dden: usize,
}

impl SignedPermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::InvalidSigned("empty window".into()));
        }
        let mut seen = vec![false; n];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n {
                return Err(Error::InvalidSigned(format!("entry {v} outside ±[{n}]")));
            }
            if std::mem::replace(&mut seen[a - 1], true) {
                return Err(Error::InvalidSigned(format!("|{v}| repeated")));
            }
        }
        Ok(SignedPermutation { window })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let window =
            parse_sequence(s).ok_or_else(|| Error::InvalidSigned(format!("cannot parse {s:?}")))?;
        SignedPermutation::new(window)
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i64).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `D_n` membership: an even number of negative entries.
    pub fn is_even(&self) -> bool {
        self.neg().is_multiple_of(2)
    }

    /// `|σ| = |σ(1)| ⋯ |σ(n)|`.
    pub fn abs(&self) -> Permutation {
        Permutation::new(self.abs_image()).expect("window validated")
    }

    fn abs_image(&self) -> Vec<usize> {
        self.window
            .iter()
            .map(|v| v.unsigned_abs() as usize)
            .collect()
    }

    /// Type A `(des, maj)` of the window under the integer order.
    pub fn type_a_stats(&self) -> (usize, usize) {
        (stats::des(&self.window), stats::maj(&self.window))
    }

    pub fn neg(&self) -> usize {
        self.window.iter().filter(|&&v| v < 0).count()
    }

    /// `−Σ_{σ(i)<0} σ(i)`.
    fn neg_sum(&self) -> usize {
        self.window
            .iter()
            .filter(|&&v| v < 0)
            .map(|v| v.unsigned_abs() as usize)
            .sum()
    }

    pub fn b_stats(&self) -> BStats {
        let (des, maj) = self.type_a_stats();
        let neg = self.neg();
        let first_negative = usize::from(self.window[0] < 0);
        BStats {
            neg,
            ndes: des + neg,
            nmaj: maj + self.neg_sum(),
            fdes: 2 * des + first_negative,
            fmaj: 2 * maj + neg,
        }
    }

    /// `exc(|σ|)`: positions with `|σ(i)| > i`.
    fn abs_exc(&self) -> usize {
        self.window
            .iter()
            .enumerate()
            .filter(|(i, v)| v.unsigned_abs() as usize > i + 1)
            .count()
    }

    fn abs_denh(&self) -> usize {
        let identity: Vec<usize> = (1..=self.n()).collect();
        denh_parts_of(&self.abs_image(), &identity).total()
    }

    pub fn excabs(&self) -> usize {
        self.abs_exc() + self.neg()
    }

    pub fn nden(&self) -> usize {
        self.abs_denh() + self.neg_sum()
    }

    /// `DNeg(σ) = {i : σ(i) < −1}`.
    pub fn dneg_set(&self) -> Vec<usize> {
        self.window
            .iter()
            .enumerate()
            .filter(|(_, &v)| v < -1)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Pairs `i < j` with `σ(i) + σ(j) < 0`.
    pub fn nsp(&self) -> usize {
        let w = &self.window;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&b| w[i] + b < 0).count())
            .sum()
    }

    pub fn d_stats(&self) -> Result<DStats> {
        if !self.is_even() {
            return Err(Error::OddSigned(self.to_string()));
        }
        let (des, maj) = self.type_a_stats();
        let dneg_set = self.dneg_set();
        let dneg = dneg_set.len();
        let dneg_sum: usize = dneg_set
            .iter()
            .map(|&i| self.window[i - 1].unsigned_abs() as usize)
            .sum();
        let nsp = self.nsp();
        let denh = self.abs_denh();
        let dden = denh + nsp;
        // both published forms of dden must agree
        if dden + dneg != denh + dneg_sum {
            return Err(Error::Inconsistent(format!(
                "dden forms disagree on {self}: denh + nsp = {dden}, denh - sum - dneg = {}",
                (denh + dneg_sum) as i64 - dneg as i64
            )));
        }
        Ok(DStats {
            dneg,
            ddes: des + dneg,
            dmaj: maj + dneg_sum - dneg,
            dexc: self.abs_exc() + dneg,
            nsp,
            dden,
        })
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.window))
    }
}

/// Every window of `B_n`, lexicographic under `−n < … < −1 < 1 < … < n`.
pub fn signed_permutations(n: usize) -> impl Iterator<Item = SignedPermutation> {
    let mut all = Vec::new();
    let mut arrangement: Vec<usize> = (1..=n).collect();
    loop {
        for signs in 0u32..(1 << n) {
            let window = arrangement
                .iter()
                .enumerate()
                .map(|(k, &a)| {
                    if signs >> k & 1 == 1 {
                        -(a as i64)
                    } else {
                        a as i64
                    }
                })
                .collect();
            all.push(SignedPermutation { window });
        }
        if !next_permutation(&mut arrangement) {
            break;
        }
    }
    // sign patterns break lexicographic order, so sort once at the end
    all.sort_by(|a, b| a.window.cmp(&b.window));
    all.into_iter()
}

/// The windows of `D_n`, in the same order as [`signed_permutations`].
pub fn even_signed_permutations(n: usize) -> impl Iterator<Item = SignedPermutation> {
    signed_permutations(n).filter(SignedPermutation::is_even)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SignedPermutation {
        SignedPermutation::parse(s).unwrap()
    }

    #[test]
    fn type_a() {
        assert_eq!(sp("-2,1").type_a_stats(), (0, 0));
        assert_eq!(sp("-1,-2").type_a_stats(), (1, 1));
        assert_eq!(SignedPermutation::identity(5).type_a_stats(), (0, 0));
    }

    #[test]
    fn b_statistics() {
        assert_eq!(
            sp("-2,1").b_stats(),
            BStats {
                neg: 1,
                ndes: 1,
                nmaj: 2,
                fdes: 1,
                fmaj: 1
            }
        );
        assert_eq!(
            sp("-1").b_stats(),
            BStats {
                neg: 1,
                ndes: 1,
                nmaj: 1,
                fdes: 1,
                fmaj: 1
            }
        );
        let zero = BStats {
            neg: 0,
            ndes: 0,
            nmaj: 0,
            fdes: 0,
            fmaj: 0,
        };
        assert_eq!(SignedPermutation::identity(4).b_stats(), zero);
    }

    #[test]
    fn excabs_and_nden() {
        assert_eq!(sp("-2,1").excabs(), 2);
        assert_eq!(sp("2,-1").excabs(), 2);
        assert_eq!(SignedPermutation::identity(3).excabs(), 0);
        assert_eq!(sp("-2,1").nden(), 3);
        assert_eq!(sp("-1").nden(), 1);
        assert_eq!(SignedPermutation::identity(3).nden(), 0);
    }

    #[test]
    fn d_statistics() {
        assert_eq!(
            sp("-1,-2").d_stats().unwrap(),
            DStats {
                dneg: 1,
                ddes: 2,
                dmaj: 2,
                dexc: 1,
                nsp: 1,
                dden: 1
            }
        );
        let s = sp("-2,-1").d_stats().unwrap();
        assert_eq!((s.dneg, s.nsp, s.dden), (1, 1, 2));
        let id = SignedPermutation::identity(4).d_stats().unwrap();
        assert_eq!(
            (id.dneg, id.ddes, id.dmaj, id.dexc, id.nsp, id.dden),
            (0, 0, 0, 0, 0, 0)
        );
        assert!(matches!(sp("-2,1").d_stats(), Err(Error::OddSigned(_))));
    }

    #[test]
    fn excabs_differs_from_dexc_exactly_when_minus_one_appears() {
        for s in even_signed_permutations(4) {
            let d = s.d_stats().unwrap();
            assert_eq!(d.dexc != s.excabs(), s.window().contains(&-1), "{s}");
        }
    }

    #[test]
    fn validation() {
        assert!(SignedPermutation::parse("1,-1").is_err());
        assert!(SignedPermutation::parse("0,1").is_err());
        assert!(SignedPermutation::parse("3,1").is_err());
        assert!(SignedPermutation::parse("").is_err());
    }

    #[test]
    fn enumeration() {
        let b1: Vec<_> = signed_permutations(1).map(|s| s.to_string()).collect();
        assert_eq!(b1, ["-1", "1"]);
        let d1: Vec<_> = even_signed_permutations(1).map(|s| s.to_string()).collect();
        assert_eq!(d1, ["1"]);
        assert_eq!(signed_permutations(2).count(), 8);
        assert_eq!(even_signed_permutations(2).count(), 4);
        assert_eq!(signed_permutations(3).count(), 48);
        let b2: Vec<_> = signed_permutations(2).map(|s| s.to_string()).collect();
        assert_eq!(b2[0], "-2,-1");
        assert_eq!(b2[7], "2,1");
    }
}
