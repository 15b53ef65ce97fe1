//! Bounded search for unitary factors `F(x^a y^b)`, `F` cyclotomic, and the
//! rectangle factorisation test built on it.
//!
//! The scan only tries cyclotomic `F`. A found factor certifies a unitary
//! factor; an empty result only says none was found within the bounds.

use std::collections::HashMap;
use std::fmt;

use num::{BigInt, One};

use crate::composition::Composition;
use crate::dist::{joint_distribution, Domain, StatPair};
use crate::error::Result;
use crate::poly::{BiPoly, UniPoly};

/// Cyclotomic polynomials, computed by dividing `x^d − 1` by `Φ_e` for
/// every proper divisor `e` of `d`.
#[derive(Debug, Default)]
pub struct Cyclotomics {
    cache: HashMap<usize, UniPoly>,
}

impl Cyclotomics {
    pub fn new() -> Self {
        Cyclotomics::default()
    }

    /// `Φ_d(x)` for `d ≥ 1`.
    pub fn get(&mut self, d: usize) -> UniPoly {
        assert!(d >= 1, "cyclotomic index must be positive");
        if let Some(p) = self.cache.get(&d) {
            return p.clone();
        }
        let mut p = &UniPoly::monomial(BigInt::one(), d) - &UniPoly::one();
        for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
            let phi_e = self.get(e);
            p = p
                .divide_exact(&phi_e)
                .expect("nonzero divisor")
                .expect("Φ_e divides x^d − 1");
        }
        self.cache.insert(d, p.clone());
        p
    }
}

/// Euler's totient; equals `deg Φ_d`.
pub fn totient(d: usize) -> usize {
    (1..=d).filter(|&k| num::integer::gcd(k, d) == 1).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanBounds {
    pub max_a: u32,
    pub max_b: u32,
    pub max_d: usize,
}

impl ScanBounds {
    /// `max_a = max_b = n`, `max_d = 2n²`.
    pub fn default_for(n: usize) -> Self {
        ScanBounds {
            max_a: n as u32,
            max_b: n as u32,
            max_d: 2 * n * n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitaryFactor {
    pub d: usize,
    pub a: u32,
    pub b: u32,
    pub factor: BiPoly,
}

impl fmt::Display for UnitaryFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Phi_{}(x^{}*y^{}) = {}",
            self.d, self.a, self.b, self.factor
        )
    }
}

/// Every `Φ_d(x^a y^b)` dividing `f`, over `0 ≤ a ≤ max_a`, `1 ≤ b ≤ max_b`
/// together with `(a, b) = (1, 0)`, and `1 ≤ d ≤ max_d`. Candidates whose
/// degree exceeds that of `f` in either variable are skipped.
pub fn unitary_factor_scan(f: &BiPoly, bounds: ScanBounds) -> Vec<UnitaryFactor> {
    let (Some(dx), Some(dy)) = (f.degree_x(), f.degree_y()) else {
        return Vec::new();
    };
    let mut directions = vec![(1, 0)];
    for b in 1..=bounds.max_b {
        for a in 0..=bounds.max_a {
            directions.push((a, b));
        }
    }
    let mut cyclo = Cyclotomics::new();
    let mut found = Vec::new();
    for d in 1..=bounds.max_d {
        let phi = totient(d) as u32;
        for &(a, b) in &directions {
            if a * phi > dx || b * phi > dy {
                continue;
            }
            let factor = BiPoly::compose_monomial(&cyclo.get(d), a, b);
            if let Ok(Some(_)) = f.divide_exact(&factor) {
                found.push(UnitaryFactor { d, a, b, factor });
            }
        }
    }
    found
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    /// A qualifying rectangle without the predicted factor.
    MissingFactor,
    /// The predicted factor divides a composition that does not qualify.
    UnexpectedFactor,
    /// The bounded scan found a unitary factor of the residual `f₀`.
    UnitaryResidual,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub composition: Composition,
    pub rectangle: Option<(usize, usize)>,
    /// Rectangle `(m^r)` with `r` even and `m` odd.
    pub qualifies: bool,
    /// `1 + x^{n/2} y`, when `n` is even.
    pub candidate: Option<BiPoly>,
    pub divisible: bool,
    pub numerator: BiPoly,
    /// `numerator / candidate` when divisible, else the numerator itself.
    pub residual: BiPoly,
    pub residual_factors: Vec<UnitaryFactor>,
    pub bounds: ScanBounds,
    pub verdict: Verdict,
}

impl ConjectureReport {
    pub fn is_consistent(&self) -> bool {
        self.verdict == Verdict::Consistent
    }
}

/// Tests the predicted factorisation of the `(denh, exc)` distribution:
/// a unitary factor exists exactly for rectangles `(m^r)` with `r` even and
/// `m` odd, and then it is `1 + x^{rm/2} y` with a residual free of
/// unitary factors.
pub fn conjecture_report(
    eta: &Composition,
    bounds: ScanBounds,
    budget: u128,
) -> Result<ConjectureReport> {
    let numerator = joint_distribution(&Domain::Words(eta.clone()), StatPair::DenhExc, budget)?;
    let rectangle = eta.as_rectangle();
    let qualifies = matches!(rectangle, Some((r, m)) if r % 2 == 0 && m % 2 == 1);
    let n = eta.n();
    let candidate = n
        .is_multiple_of(2)
        .then(|| BiPoly::from_terms([(0, 0, 1), (n as u32 / 2, 1, 1)]));
    let quotient = match &candidate {
        Some(c) => numerator.divide_exact(c)?,
        None => None,
    };
    let divisible = quotient.is_some();
    let residual = quotient.unwrap_or_else(|| numerator.clone());
    let residual_factors = unitary_factor_scan(&residual, bounds);
    let verdict = if qualifies && !divisible {
        Verdict::MissingFactor
    } else if !qualifies && divisible {
        Verdict::UnexpectedFactor
    } else if !residual_factors.is_empty() {
        Verdict::UnitaryResidual
    } else {
        Verdict::Consistent
    };
    Ok(ConjectureReport {
        composition: eta.clone(),
        rectangle,
        qualifies,
        candidate,
        divisible,
        numerator,
        residual,
        residual_factors,
        bounds,
        verdict,
    })
}
