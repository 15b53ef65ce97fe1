//! Genus zeta functions of local hereditary orders as rational functions
//!
//! ```text
//! W_η(x, y) = Σ_{σ ∈ S^η} x^{den σ} y^{iexc σ} / Π_{j=0}^{n−1} (1 − x^j y)
//! ```
//!
//! with `Z(s) = W_η(q, q^{−ns})`. The denominator is kept in factored form.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::composition::Composition;
use crate::dist::{joint_distribution, Domain, StatPair};
use crate::error::{Error, Result};
use crate::poly::{BiPoly, UniPoly};

/// A numerator over `Π_{j ∈ denom_exponents} (1 − x^j y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalW {
    pub numerator: BiPoly,
    pub denom_exponents: Vec<u32>,
}

impl RationalW {
    /// `W_η`, with the numerator computed and cross-checked by
    /// [`w_numerator`].
    pub fn genus(eta: &Composition, budget: u128) -> Result<Self> {
        Ok(RationalW {
            numerator: w_numerator(eta, budget)?,
            denom_exponents: (0..eta.n() as u32).collect(),
        })
    }

    /// Exact value at `x = q`, `y = t`.
    pub fn eval(&self, q: &BigRational, t: &BigRational) -> Result<BigRational> {
        let mut denom = BigRational::one();
        for &j in &self.denom_exponents {
            let factor = BigRational::one() - num::pow(q.clone(), j as usize) * t;
            if factor.is_zero() {
                return Err(Error::Pole);
            }
            denom *= factor;
        }
        Ok(self.numerator.eval(q, t) / denom)
    }

    /// The first `terms` coefficients of `W` as a power series in `y`.
    pub fn y_series(&self, terms: u32) -> BiPoly {
        if terms == 0 {
            return BiPoly::zero();
        }
        let max_y = terms - 1;
        let mut acc = self.numerator.truncate_y(max_y);
        for &j in &self.denom_exponents {
            // 1 / (1 − x^j y) = Σ_k x^{jk} y^k
            let geometric = BiPoly::from_terms((0..=max_y).map(|k| (j * k, k, 1)));
            acc = acc.mul_truncated(&geometric, max_y);
        }
        acc
    }
}

/// Numerator of `W_η`. It is computed twice, as the `(den, iexc)`
/// distribution over `S^η` and as the `(maj, des)` distribution over
/// `S_η`, and the two must agree.
pub fn w_numerator(eta: &Composition, budget: u128) -> Result<BiPoly> {
    let via_den = joint_distribution(&Domain::Admissible(eta.clone()), StatPair::DenIexc, budget)?;
    let via_maj = joint_distribution(&Domain::Words(eta.clone()), StatPair::MajDes, budget)?;
    if via_den != via_maj {
        return Err(Error::Inconsistent(format!(
            "numerator of W_{eta}: (den,iexc) gives {via_den}, (maj,des) gives {via_maj}"
        )));
    }
    Ok(via_den)
}

/// The Gaussian binomial `[m + k choose k]_x`, built by the q-Pascal rule
/// `[a choose b] = [a−1 choose b−1] + x^b [a−1 choose b]`.
pub fn gaussian_binomial(m: usize, k: usize) -> UniPoly {
    let top = m + k;
    // row[b] = [a choose b] for the current a
    let mut row = vec![UniPoly::one()];
    for a in 1..=top {
        let mut next = Vec::with_capacity(a + 1);
        for b in 0..=a {
            let left = if b > 0 {
                row[b - 1].clone()
            } else {
                UniPoly::zero()
            };
            let right = if b < a {
                &UniPoly::monomial(BigInt::one(), b) * &row[b]
            } else {
                UniPoly::zero()
            };
            next.push(&left + &right);
        }
        row = next;
    }
    row.swap_remove(k)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HadamardMismatch {
    pub k: u32,
    pub numerator_side: UniPoly,
    pub hadamard_side: UniPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HadamardReport {
    pub depth: u32,
    pub mismatch: Option<HadamardMismatch>,
}

impl HadamardReport {
    pub fn holds(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// The first `terms` coefficients of `⊛_i W_{(η_i+1)}`, i.e.
/// `Σ_k Π_i [η_i + k choose k]_x y^k`. This is `W_η / (1 − x^n y)`.
pub fn hadamard_series(eta: &Composition, terms: u32) -> BiPoly {
    let series: Vec<UniPoly> = (0..terms as usize)
        .map(|k| {
            eta.parts()
                .iter()
                .fold(UniPoly::one(), |acc, &m| &acc * &gaussian_binomial(m, k))
        })
        .collect();
    BiPoly::from_y_coefficients(&series)
}

/// Checks `W_η = (1 − x^n y) ⊛_i W_{(η_i + 1)}` with the Hadamard product
/// taken in `y`. The `y^k` coefficient of `⊛_i W_{(η_i+1)}` is
/// `Π_i [η_i + k choose k]_x`; multiplying that series by
/// `Π_{j=0}^{n} (1 − x^j y)` must reproduce the numerator of `W_η` up to
/// `y`-degree `n + 1`.
pub fn hadamard_check(eta: &Composition, budget: u128) -> Result<HadamardReport> {
    let numerator = w_numerator(eta, budget)?;
    Ok(hadamard_against(eta, &numerator))
}

/// [`hadamard_check`] against a precomputed numerator.
pub fn hadamard_against(eta: &Composition, numerator: &BiPoly) -> HadamardReport {
    let n = eta.n() as u32;
    let depth = n + 1;
    let mut cleared = hadamard_series(eta, depth + 1);
    for j in 0..=n {
        let factor = BiPoly::from_terms([(0, 0, 1), (j, 1, -1)]);
        cleared = cleared.mul_truncated(&factor, depth);
    }
    let mismatch = (0..=depth).find_map(|k| {
        let lhs = numerator.y_coefficient(k);
        let rhs = cleared.y_coefficient(k);
        (lhs != rhs).then_some(HadamardMismatch {
            k,
            numerator_side: lhs,
            hadamard_side: rhs,
        })
    });
    HadamardReport { depth, mismatch }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reciprocity {
    /// `W(1/x, 1/y) = sign · x^a · y^b · W(x, y)`.
    Holds {
        sign: i32,
        a: i64,
        b: i64,
    },
    Fails,
}

/// Tests whether `W_η(1/x, 1/y)` is a signed monomial multiple of
/// `W_η(x, y)`.
///
/// With `Π_{j<n} (1 − x^{−j} y^{−1}) = (−1)^n x^{−n(n−1)/2} y^{−n} Π_{j<n} (1 − x^j y)`
/// the question reduces to whether the reflected numerator
/// `x^α y^β N(1/x, 1/y)` is `ε x^s y^t N(x, y)`, in which case
/// `W(1/x,1/y) / W(x,y) = (−1)^n ε x^{n(n−1)/2 − α + s} y^{n − β + t}`.
pub fn reciprocity_of(numerator: &BiPoly, n: usize) -> Reciprocity {
    let (Some(alpha), Some(beta)) = (numerator.degree_x(), numerator.degree_y()) else {
        return Reciprocity::Fails;
    };
    match numerator.reflect().unit_monomial_ratio(numerator) {
        Some((eps, s, t)) => {
            let n = n as i64;
            let sign = if n % 2 == 0 { eps } else { -eps };
            Reciprocity::Holds {
                sign,
                a: n * (n - 1) / 2 - alpha as i64 + s,
                b: n - beta as i64 + t,
            }
        }
        None => Reciprocity::Fails,
    }
}

pub fn reciprocity_check(eta: &Composition, budget: u128) -> Result<Reciprocity> {
    Ok(reciprocity_of(&w_numerator(eta, budget)?, eta.n()))
}

/// The prediction for `η`: rectangles `(m^r)` satisfy the functional
/// equation with `((−1)^{rm}, rm(m−1)/2, m)`, all other compositions fail.
pub fn expected_reciprocity(eta: &Composition) -> Reciprocity {
    match eta.as_rectangle() {
        Some((r, m)) => {
            let (r, m) = (r as i64, m as i64);
            Reciprocity::Holds {
                sign: if (r * m) % 2 == 0 { 1 } else { -1 },
                a: r * m * (m - 1) / 2,
                b: m,
            }
        }
        None => Reciprocity::Fails,
    }
}

/// `W_η(q, t)` as an exact rational.
pub fn zeta_eval(
    eta: &Composition,
    q: &BigRational,
    t: &BigRational,
    budget: u128,
) -> Result<BigRational> {
    RationalW::genus(eta, budget)?.eval(q, t)
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub fn format_rational(v: &BigRational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else if v.is_negative() {
        format!("-{}/{}", v.numer().abs(), v.denom())
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}
