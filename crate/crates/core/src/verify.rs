//! Exhaustive checks of the equidistribution identities, the N⁺
//! decomposition behind `den = denh ∘ (σ ↦ π_η(σ⁻¹))`, the Hadamard
//! identity and the reciprocity dichotomy. Each check reports the first
//! counterexample it meets.

use std::fmt;
use std::str::FromStr;

use crate::admissible::BlockContext;
use crate::composition::Composition;
use crate::dist::{joint_distribution, Domain, StatPair};
use crate::error::{Error, Result};
use crate::poly::BiPoly;
use crate::signed::even_signed_permutations;
use crate::stats;
use crate::word::Word;
use crate::zeta::{expected_reciprocity, hadamard_check, reciprocity_check, Reciprocity};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    EulerMahonianA,
    EulerMahonianDen,
    Lemma42,
    Lemma43,
    BEquidistribution,
    DEquidistribution,
    Hadamard,
    Reciprocity,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::EulerMahonianA,
        Check::EulerMahonianDen,
        Check::Lemma42,
        Check::Lemma43,
        Check::BEquidistribution,
        Check::DEquidistribution,
        Check::Hadamard,
        Check::Reciprocity,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Check::EulerMahonianA => "euler-mahonian-a",
            Check::EulerMahonianDen => "euler-mahonian-den",
            Check::Lemma42 => "lemma42",
            Check::Lemma43 => "lemma43",
            Check::BEquidistribution => "b-equidistribution",
            Check::DEquidistribution => "d-equidistribution",
            Check::Hadamard => "hadamard",
            Check::Reciprocity => "reciprocity",
        }
    }

    /// Parameterised by a size `n` rather than a composition.
    pub fn takes_n(&self) -> bool {
        matches!(self, Check::BEquidistribution | Check::DEquidistribution)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check: Check,
    pub subject: String,
    /// Objects (or polynomial coefficients) examined.
    pub cases: u64,
    pub counterexample: Option<String>,
    pub note: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    fn new(check: Check, subject: String) -> Self {
        CheckOutcome {
            check,
            subject,
            cases: 0,
            counterexample: None,
            note: None,
        }
    }

    fn fail(mut self, why: String) -> Self {
        self.counterexample = Some(why);
        self
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(
            f,
            "{} {}: {status} ({} cases)",
            self.check, self.subject, self.cases
        )?;
        if let Some(note) = &self.note {
            write!(f, "; {note}")?;
        }
        if let Some(c) = &self.counterexample {
            write!(f, "\n  counterexample: {c}")?;
        }
        Ok(())
    }
}

/// The first term (in `(b, a)` order) where two polynomials differ.
pub fn first_difference(left: &BiPoly, right: &BiPoly) -> Option<(u32, u32, String, String)> {
    let mut keys: Vec<(u32, u32)> = left
        .terms()
        .chain(right.terms())
        .map(|(a, b, _)| (b, a))
        .collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter().find_map(|(b, a)| {
        let (l, r) = (left.coeff(a, b), right.coeff(a, b));
        (l != r).then(|| (a, b, l.to_string(), r.to_string()))
    })
}

fn compare(
    mut out: CheckOutcome,
    left_name: &str,
    left: &BiPoly,
    right_name: &str,
    right: &BiPoly,
) -> CheckOutcome {
    if let Some((a, b, l, r)) = first_difference(left, right) {
        return out.fail(format!(
            "coefficient of x^{a}*y^{b}: {left_name} gives {l}, {right_name} gives {r}"
        ));
    }
    out.cases += left.len() as u64;
    out
}

/// Runs a composition-indexed check.
pub fn run_eta(check: Check, eta: &Composition, budget: u128) -> Result<CheckOutcome> {
    let out = CheckOutcome::new(check, eta.to_string());
    match check {
        Check::EulerMahonianA => {
            let words = Domain::Words(eta.clone());
            let md = joint_distribution(&words, StatPair::MajDes, budget)?;
            let de = joint_distribution(&words, StatPair::DenhExc, budget)?;
            Ok(compare(out, "(maj,des)", &md, "(denh,exc)", &de))
        }
        Check::EulerMahonianDen => euler_mahonian_den(out, eta, budget),
        Check::Lemma42 | Check::Lemma43 => lemmas(out, eta, budget),
        Check::Hadamard => {
            let report = hadamard_check(eta, budget)?;
            let mut out = out;
            out.cases = report.depth as u64 + 1;
            Ok(match report.mismatch {
                None => out,
                Some(m) => out.fail(format!(
                    "y^{} coefficient: numerator {}, Hadamard side {}",
                    m.k, m.numerator_side, m.hadamard_side
                )),
            })
        }
        Check::Reciprocity => {
            let mut out = out;
            out.cases = 1;
            let got = reciprocity_check(eta, budget)?;
            let expected = expected_reciprocity(eta);
            out.note = Some(match got {
                Reciprocity::Holds { sign, a, b } => {
                    format!("holds with sign {sign:+}, a = {a}, b = {b}")
                }
                Reciprocity::Fails if eta.as_rectangle().is_none() => {
                    "fails (expected: non-rectangle)".to_string()
                }
                Reciprocity::Fails => "fails".to_string(),
            });
            Ok(if got == expected {
                out
            } else {
                out.fail(format!("got {got:?}, predicted {expected:?}"))
            })
        }
        Check::BEquidistribution | Check::DEquidistribution => Err(Error::Parse(format!(
            "check {check} takes --n, not a composition"
        ))),
    }
}

fn euler_mahonian_den(
    mut out: CheckOutcome,
    eta: &Composition,
    budget: u128,
) -> Result<CheckOutcome> {
    Domain::Admissible(eta.clone()).check_budget(budget)?;
    let ctx = BlockContext::new(eta.clone());
    for sigma in ctx.admissible_permutations() {
        out.cases += 1;
        let w = ctx.admissible_to_word(&sigma)?;
        if crate::admissible::word_to_admissible(&w) != sigma {
            return Ok(out.fail(format!("bijection does not round-trip on {sigma}")));
        }
        let den = ctx.den(&sigma)?;
        let iexc = ctx.iexc(&sigma);
        if den != w.denh() || iexc != w.exc() {
            return Ok(out.fail(format!(
                "sigma = {sigma}, w = {w}: (den, iexc) = ({den}, {iexc}), (denh, exc) = ({}, {})",
                w.denh(),
                w.exc()
            )));
        }
    }
    let di = joint_distribution(&Domain::Admissible(eta.clone()), StatPair::DenIexc, budget)?;
    let md = joint_distribution(&Domain::Words(eta.clone()), StatPair::MajDes, budget)?;
    Ok(compare(out, "(den,iexc)", &di, "(maj,des)", &md))
}

fn lemmas(mut out: CheckOutcome, eta: &Composition, budget: u128) -> Result<CheckOutcome> {
    Domain::Admissible(eta.clone()).check_budget(budget)?;
    let ctx = BlockContext::new(eta.clone());
    for sigma in ctx.admissible_permutations() {
        out.cases += 1;
        let w: Word = ctx.admissible_to_word(&sigma)?;
        let (weak, strict) = ctx.n_plus_split(&sigma);
        if out.check == Check::Lemma42 {
            let inv_n = stats::inv(&w.nonexceeding_subword());
            if weak.len() != inv_n {
                return Ok(out.fail(format!(
                    "sigma = {sigma}: |N+[<=]| = {}, inv(N(w)) = {inv_n}",
                    weak.len()
                )));
            }
            continue;
        }
        let imv_e = stats::imv(&w.exceeding_subword());
        let n_minus = ctx.n_minus_set(&sigma).len();
        let iexc = ctx.iexc(&sigma);
        if strict.len() != imv_e + n_minus + iexc {
            return Ok(out.fail(format!(
                "sigma = {sigma}: |N+[>]| = {}, imv(E(w)) + |N-| + iexc = {imv_e} + {n_minus} + {iexc}",
                strict.len()
            )));
        }
        let mut m_total = 0;
        for j0 in ctx.succ_rows(&sigma) {
            let (eq, gt) = ctx.m_sets(&sigma, j0)?;
            m_total += eq.len() + gt.len();
            let level = ctx.block_index(j0)?;
            let lhs = eq.len() + gt.len() + ctx.n_minus_row(&sigma, j0)?.len() + 1;
            let u = ctx.u_set(&sigma, level)?.len();
            let u_inv = ctx.u_inv_set(&sigma, level)?.len();
            let row = ctx.n_plus_succ_row(&sigma, j0)?.len();
            if !(lhs == u && u == u_inv && u_inv == row) {
                return Ok(out.fail(format!(
                    "sigma = {sigma}, j0 = {j0}: |M=|+|M>|+|N-(j0)|+1 = {lhs}, |U| = {u}, |U^-1| = {u_inv}, |N+[>](j0)| = {row}"
                )));
            }
        }
        if m_total != imv_e {
            return Ok(out.fail(format!(
                "sigma = {sigma}: sum of |M=|+|M>| = {m_total}, imv(E(w)) = {imv_e}"
            )));
        }
    }
    Ok(out)
}

/// Runs a size-indexed check over `B_n` or `D_n`.
pub fn run_n(check: Check, n: usize, budget: u128) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new(check, format!("n={n}"));
    match check {
        Check::BEquidistribution => {
            let b = Domain::Signed(n);
            let flag = joint_distribution(&b, StatPair::FmajFdes, budget)?;
            let negative = joint_distribution(&b, StatPair::NmajNdes, budget)?;
            let denert = joint_distribution(&b, StatPair::NdenExcabs, budget)?;
            out = compare(out, "(nmaj,ndes)", &negative, "(fmaj,fdes)", &flag);
            if out.passed() {
                out = compare(out, "(nden,excabs)", &denert, "(fmaj,fdes)", &flag);
            }
            Ok(out)
        }
        Check::DEquidistribution => {
            let d = Domain::EvenSigned(n);
            d.check_budget(budget)?;
            for s in even_signed_permutations(n) {
                out.cases += 1;
                let dneg_set = s.dneg_set();
                let rhs: i64 = -dneg_set.iter().map(|&i| s.window()[i - 1]).sum::<i64>()
                    - dneg_set.len() as i64;
                if s.nsp() as i64 != rhs {
                    return Ok(out.fail(format!(
                        "sigma = {s}: nsp = {}, -sum_DNeg - dneg = {rhs}",
                        s.nsp()
                    )));
                }
            }
            let major = joint_distribution(&d, StatPair::DmajDdes, budget)?;
            let denert = joint_distribution(&d, StatPair::DdenDexc, budget)?;
            Ok(compare(out, "(dden,dexc)", &denert, "(dmaj,ddes)", &major))
        }
        _ => Err(Error::Parse(format!(
            "check {check} takes a composition, not --n"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::DEFAULT_BUDGET;

    #[test]
    fn small_sweeps_pass() {
        let eta: Composition = "2,1,2".parse().unwrap();
        for check in Check::ALL.iter().filter(|c| !c.takes_n()) {
            let out = run_eta(*check, &eta, DEFAULT_BUDGET).unwrap();
            assert!(out.passed(), "{out}");
        }
        for check in [Check::BEquidistribution, Check::DEquidistribution] {
            let out = run_n(check, 3, DEFAULT_BUDGET).unwrap();
            assert!(out.passed(), "{out}");
        }
    }

    #[test]
    fn strict_split_check_counts_every_admissible_permutation() {
        let eta: Composition = "3,2,2,3".parse().unwrap();
        let out = run_eta(Check::Lemma43, &eta, DEFAULT_BUDGET).unwrap();
        assert!(out.passed(), "{out}");
        assert_eq!(out.cases, 25200);
    }

    #[test]
    fn reciprocity_notes() {
        let out = run_eta(Check::Reciprocity, &"2,1".parse().unwrap(), DEFAULT_BUDGET).unwrap();
        assert!(out.passed());
        assert_eq!(out.note.as_deref(), Some("fails (expected: non-rectangle)"));
    }

    #[test]
    fn differences_are_located() {
        let a = BiPoly::from_terms([(0, 0, 1), (1, 1, 2)]);
        let b = BiPoly::from_terms([(0, 0, 1), (1, 1, 1), (2, 1, 1)]);
        assert_eq!(
            first_difference(&a, &b),
            Some((1, 1, "2".to_string(), "1".to_string()))
        );
        assert_eq!(first_difference(&a, &a), None);
    }

    #[test]
    fn wrong_parameter_kind_is_rejected() {
        assert!(run_n(Check::Lemma42, 3, DEFAULT_BUDGET).is_err());
        assert!(run_eta(
            Check::BEquidistribution,
            &"2".parse().unwrap(),
            DEFAULT_BUDGET
        )
        .is_err());
        assert_eq!("lemma43".parse::<Check>().unwrap(), Check::Lemma43);
        assert!("lemma44".parse::<Check>().is_err());
    }
}
