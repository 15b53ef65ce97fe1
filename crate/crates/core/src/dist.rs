//! Joint distributions of statistic pairs as bivariate generating
//! polynomials `Σ x^{stat₁} y^{stat₂}`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num::BigInt;

use crate::admissible::{word_to_admissible, BlockContext};
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::poly::BiPoly;
use crate::signed::{even_signed_permutations, signed_permutations};
use crate::stats;
use crate::word::{denh_parts_of, exc_set_of, for_each_word, Words};

/// Largest domain enumerated unless the caller raises it.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Domain {
    /// `S_η`
    Words(Composition),
    /// `S^η`
    Admissible(Composition),
    /// `B_n`
    Signed(usize),
    /// `D_n`
    EvenSigned(usize),
}

impl Domain {
    pub fn size(&self) -> u128 {
        match self {
            Domain::Words(eta) | Domain::Admissible(eta) => eta.multinomial(),
            Domain::Signed(n) => (1u128 << n) * factorial(*n),
            Domain::EvenSigned(n) => (1u128 << n) * factorial(*n) / 2,
        }
    }

    pub fn check_budget(&self, budget: u128) -> Result<()> {
        let size = self.size();
        if size > budget {
            return Err(Error::BudgetExceeded { size, budget });
        }
        Ok(())
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Words(eta) => write!(f, "words{eta}"),
            Domain::Admissible(eta) => write!(f, "admissible{eta}"),
            Domain::Signed(n) => write!(f, "B{n}"),
            Domain::EvenSigned(n) => write!(f, "D{n}"),
        }
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatPair {
    MajDes,
    DenhExc,
    DenIexc,
    NmajNdes,
    FmajFdes,
    NdenExcabs,
    DmajDdes,
    DdenDexc,
}

impl StatPair {
    pub const ALL: [StatPair; 8] = [
        StatPair::MajDes,
        StatPair::DenhExc,
        StatPair::DenIexc,
        StatPair::NmajNdes,
        StatPair::FmajFdes,
        StatPair::NdenExcabs,
        StatPair::DmajDdes,
        StatPair::DdenDexc,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            StatPair::MajDes => "maj,des",
            StatPair::DenhExc => "denh,exc",
            StatPair::DenIexc => "den,iexc",
            StatPair::NmajNdes => "nmaj,ndes",
            StatPair::FmajFdes => "fmaj,fdes",
            StatPair::NdenExcabs => "nden,excabs",
            StatPair::DmajDdes => "dmaj,ddes",
            StatPair::DdenDexc => "dden,dexc",
        }
    }

    fn fits(&self, domain: &Domain) -> bool {
        use StatPair::*;
        matches!(
            (self, domain),
            (MajDes | DenhExc, Domain::Words(_))
                | (DenIexc, Domain::Admissible(_))
                | (
                    NmajNdes | FmajFdes | NdenExcabs,
                    Domain::Signed(_) | Domain::EvenSigned(_)
                )
                | (DmajDdes | DdenDexc, Domain::EvenSigned(_))
        )
    }
}

impl fmt::Display for StatPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        StatPair::ALL
            .into_iter()
            .find(|p| p.name() == key)
            .ok_or_else(|| {
                let known: Vec<_> = StatPair::ALL.iter().map(|p| p.name()).collect();
                Error::Parse(format!(
                    "unknown pair {s:?}; expected one of {}",
                    known.join(" | ")
                ))
            })
    }
}

/// Exponent-pair counts; merging is order independent.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally(HashMap<(u32, u32), u64>);

impl Tally {
    pub fn record(&mut self, a: usize, b: usize) {
        *self.0.entry((a as u32, b as u32)).or_insert(0) += 1;
    }

    pub fn merge(&mut self, other: Tally) {
        for (k, v) in other.0 {
            *self.0.entry(k).or_insert(0) += v;
        }
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn into_poly(self) -> BiPoly {
        BiPoly::from_terms(
            self.0
                .into_iter()
                .map(|((a, b), c)| (a, b, BigInt::from(c))),
        )
    }
}

/// `Σ_{σ ∈ domain} x^{stat₁(σ)} y^{stat₂(σ)}`.
pub fn joint_distribution(domain: &Domain, pair: StatPair, budget: u128) -> Result<BiPoly> {
    if !pair.fits(domain) {
        return Err(Error::PairNotOnDomain {
            pair: pair.name().into(),
            domain: domain.to_string(),
        });
    }
    domain.check_budget(budget)?;
    let mut tally = Tally::default();
    match domain {
        Domain::Words(eta) => {
            let trivial = eta.trivial_letters();
            for_each_word(eta, |w| match pair {
                StatPair::MajDes => tally.record(stats::maj(w), stats::des(w)),
                _ => tally.record(
                    denh_parts_of(w, &trivial).total(),
                    exc_set_of(w, &trivial).len(),
                ),
            });
        }
        Domain::Admissible(eta) => {
            let ctx = BlockContext::new(eta.clone());
            for w in Words::new(eta) {
                let sigma = word_to_admissible(&w);
                let parts = ctx.den_parts(&sigma)?;
                tally.record(parts.total(), parts.iexc);
            }
        }
        Domain::Signed(n) | Domain::EvenSigned(n) => {
            let all: Box<dyn Iterator<Item = _>> = match domain {
                Domain::Signed(_) => Box::new(signed_permutations(*n)),
                _ => Box::new(even_signed_permutations(*n)),
            };
            for s in all {
                match pair {
                    StatPair::NmajNdes => {
                        let b = s.b_stats();
                        tally.record(b.nmaj, b.ndes)
                    }
                    StatPair::FmajFdes => {
                        let b = s.b_stats();
                        tally.record(b.fmaj, b.fdes)
                    }
                    StatPair::NdenExcabs => tally.record(s.nden(), s.excabs()),
                    StatPair::DmajDdes => {
                        let d = s.d_stats()?;
                        tally.record(d.dmaj, d.ddes)
                    }
                    _ => {
                        let d = s.d_stats()?;
                        tally.record(d.dden, d.dexc)
                    }
                }
            }
        }
    }
    Ok(tally.into_poly())
}
