//! Exact polynomials with arbitrary-precision integer coefficients: sparse
//! bivariate [`BiPoly`] in `(x, y)` and dense univariate [`UniPoly`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent pair ordered by `y` first, then `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Exp {
    y: u32,
    x: u32,
}

/// A bivariate polynomial in canonical form: no zero coefficients stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<Exp, BigInt>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<(u32, u32, String)>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::monomial(BigInt::one(), 0, 0)
    }

    /// `c · x^a · y^b`.
    pub fn monomial(c: BigInt, a: u32, b: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(a, b, c);
        p
    }

    /// Sums the given terms; repeated exponents accumulate.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = BiPoly::zero();
        for (a, b, c) in terms {
            p.add_term(a, b, c.into());
        }
        p
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = Exp { y: b, x: a };
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms `(a, b, c)` for `c·x^a·y^b`, sorted by `(b, a)` ascending.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.x, e.y, c))
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms
            .get(&Exp { y: b, x: a })
            .cloned()
            .unwrap_or_default()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.x).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|e| e.y)
    }

    fn min_degrees(&self) -> Option<(u32, u32)> {
        let x = self.terms.keys().map(|e| e.x).min()?;
        let y = self.terms.keys().map(|e| e.y).min()?;
        Some((x, y))
    }

    /// Value at `x = y = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (e, c)| {
            acc + BigRational::from_integer(c.clone())
                * num::pow(x.clone(), e.x as usize)
                * num::pow(y.clone(), e.y as usize)
        })
    }

    /// The coefficient of `y^k`, as a polynomial in `x`.
    pub fn y_coefficient(&self, k: u32) -> UniPoly {
        let mut coeffs = Vec::new();
        for (e, c) in self
            .terms
            .range(Exp { y: k, x: 0 }..=Exp { y: k, x: u32::MAX })
        {
            let a = e.x as usize;
            if coeffs.len() <= a {
                coeffs.resize(a + 1, BigInt::zero());
            }
            coeffs[a] = c.clone();
        }
        UniPoly::new(coeffs)
    }

    /// `Σ_k F_k(x) y^k` from a list of `x`-polynomials.
    pub fn from_y_coefficients(coeffs: &[UniPoly]) -> Self {
        let mut p = BiPoly::zero();
        for (k, f) in coeffs.iter().enumerate() {
            for (a, c) in f.coefficients().iter().enumerate() {
                p.add_term(a as u32, k as u32, c.clone());
            }
        }
        p
    }

    /// Drops every term of `y`-degree above `max_y`.
    pub fn truncate_y(&self, max_y: u32) -> Self {
        BiPoly {
            terms: self
                .terms
                .range(..Exp { y: max_y + 1, x: 0 })
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Product truncated at `y`-degree `max_y`.
    pub fn mul_truncated(&self, other: &BiPoly, max_y: u32) -> Self {
        let mut out = BiPoly::zero();
        for (e1, c1) in &self.terms {
            if e1.y > max_y {
                break;
            }
            for (e2, c2) in &other.terms {
                if e1.y + e2.y > max_y {
                    break;
                }
                out.add_term(e1.x + e2.x, e1.y + e2.y, c1 * c2);
            }
        }
        out
    }

    /// `x^α y^β f(1/x, 1/y)` where `α, β` are the degrees of `f`.
    pub fn reflect(&self) -> Self {
        let (Some(dx), Some(dy)) = (self.degree_x(), self.degree_y()) else {
            return BiPoly::zero();
        };
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (
                        Exp {
                            y: dy - e.y,
                            x: dx - e.x,
                        },
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// `F(x^a y^b)`.
    pub fn compose_monomial(f: &UniPoly, a: u32, b: u32) -> Self {
        BiPoly::from_terms(
            f.coefficients()
                .iter()
                .enumerate()
                .map(|(k, c)| (a * k as u32, b * k as u32, c.clone())),
        )
    }

    /// Returns `Some((ε, s, t))` when `self = ε · x^s · y^t · other` for a
    /// unit `ε ∈ {±1}` and integer shifts `s, t`.
    pub fn unit_monomial_ratio(&self, other: &BiPoly) -> Option<(i32, i64, i64)> {
        if self.len() != other.len() || self.is_zero() {
            return None;
        }
        let (sx, sy) = self.min_degrees()?;
        let (ox, oy) = other.min_degrees()?;
        let shift_x = sx as i64 - ox as i64;
        let shift_y = sy as i64 - oy as i64;
        let (e0, c0) = other.terms.iter().next()?;
        let lead = self.terms.get(&Exp {
            y: (e0.y as i64 + shift_y) as u32,
            x: (e0.x as i64 + shift_x) as u32,
        })?;
        let sign = if lead == c0 {
            1
        } else if *lead == -c0 {
            -1
        } else {
            return None;
        };
        for (e, c) in &other.terms {
            let key = Exp {
                y: (e.y as i64 + shift_y) as u32,
                x: (e.x as i64 + shift_x) as u32,
            };
            let expected = if sign == 1 { c.clone() } else { -c };
            if self.terms.get(&key) != Some(&expected) {
                return None;
            }
        }
        Some((sign, shift_x, shift_y))
    }

    /// Exact division: `Some(h)` with `self = divisor · h`, or `None` when no
    /// such `h` with integer coefficients exists.
    pub fn divide_exact(&self, divisor: &BiPoly) -> Result<Option<BiPoly>> {
        let Some((lead_exp, lead_c)) = divisor.terms.iter().next_back() else {
            return Err(Error::DivisionByZero);
        };
        let (lead_exp, lead_c) = (*lead_exp, lead_c.clone());
        if let (Some(fx), Some(gx)) = (self.degree_x(), divisor.degree_x()) {
            if gx > fx || lead_exp.y > self.degree_y().unwrap_or(0) {
                return Ok(None);
            }
        }
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        // the (y, x) lexicographic order is a monomial order, so the leading
        // term of a multiple of `divisor` is always divisible by `lead_exp`
        while let Some((e, c)) = rem.terms.iter().next_back() {
            if e.x < lead_exp.x || e.y < lead_exp.y {
                return Ok(None);
            }
            let (q, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return Ok(None);
            }
            let (a, b) = (e.x - lead_exp.x, e.y - lead_exp.y);
            for (ge, gc) in &divisor.terms {
                rem.add_term(ge.x + a, ge.y + b, -(gc * &q));
            }
            quot.add_term(a, b, q);
        }
        Ok(Some(quot))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(PolyJson {
            vars: vec!["x".into(), "y".into()],
            terms: self
                .terms()
                .map(|(a, b, c)| (a, b, c.to_string()))
                .collect(),
        })
        .expect("plain data serializes")
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    /// Parses the `{"vars": ["x","y"], "terms": [[a, b, "c"], …]}` form,
    /// requiring sorted, distinct, nonzero terms.
    pub fn from_json(s: &str) -> Result<Self> {
        let raw: PolyJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("polynomial JSON: {e}")))?;
        if raw.vars != ["x", "y"] {
            return Err(Error::Parse(format!(
                "vars must be [\"x\",\"y\"], got {:?}",
                raw.vars
            )));
        }
        let mut p = BiPoly::zero();
        let mut last: Option<Exp> = None;
        for (a, b, c) in raw.terms {
            let e = Exp { y: b, x: a };
            if last.is_some_and(|l| l >= e) {
                return Err(Error::Parse(format!(
                    "term [{a}, {b}] out of (b, a) order or repeated"
                )));
            }
            last = Some(e);
            let c: BigInt = c
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?;
            if c.is_zero() {
                return Err(Error::Parse(format!("zero coefficient at [{a}, {b}]")));
            }
            p.terms.insert(e, c);
        }
        Ok(p)
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &BigInt,
    powers: &[(&str, u32)],
) -> fmt::Result {
    if first {
        if c.is_negative() {
            f.write_str("-")?;
        }
    } else if c.is_negative() {
        f.write_str(" - ")?;
    } else {
        f.write_str(" + ")?;
    }
    let mag = c.abs();
    let vars: Vec<String> = powers
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| {
            if *e == 1 {
                v.to_string()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect();
    if vars.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        f.write_str(&vars.join("*"))
    } else {
        write!(f, "{mag}*{}", vars.join("*"))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (a, b, c)) in self.terms().enumerate() {
            write_term(f, k == 0, c, &[("x", a), ("y", b)])?;
        }
        Ok(())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.x, e.y, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.x + e2.x, e1.y + e2.y, c1 * c2);
            }
        }
        out
    }
}

/// Dense univariate polynomial in `x`, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::from_i64(&[1])
    }

    /// `c · x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::new(coeffs)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// `Some(q)` with `self = divisor · q` exactly over the integers.
    pub fn divide_exact(&self, divisor: &UniPoly) -> Result<Option<UniPoly>> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let Some(nd) = self.degree() else {
            return Ok(Some(UniPoly::zero()));
        };
        if nd < dd {
            return Ok(None);
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let (q, r) = rem[k + dd].div_rem(lead);
            if !r.is_zero() {
                return Ok(None);
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= c * &q;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        Ok(Some(UniPoly::new(quot)))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_term(f, first, c, &[("x", k as u32)])?;
            first = false;
        }
        Ok(())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(
            (0..len)
                .map(|k| {
                    self.coeffs.get(k).cloned().unwrap_or_default()
                        + rhs.coeffs.get(k).cloned().unwrap_or_default()
                })
                .collect(),
        )
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        UniPoly::new(
            (0..len)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) - rhs.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bp(terms: &[(u32, u32, i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn canonical_form_and_text() {
        let p = bp(&[(2, 1, 1), (0, 0, 1), (1, 1, 1), (3, 0, 0)]);
        assert_eq!(p.len(), 3);
        assert_eq!(p.to_string(), "1 + x*y + x^2*y");
        assert_eq!(bp(&[(0, 0, 1)]).to_string(), "1");
        assert_eq!(BiPoly::zero().to_string(), "0");
        assert_eq!(
            bp(&[(0, 0, -1), (1, 1, -3), (0, 2, 2)]).to_string(),
            "-1 - 3*x*y + 2*y^2"
        );
        let q = &p - &p;
        assert!(q.is_zero());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let p = bp(&[(0, 0, 1), (1, 1, 1), (2, 1, 1)]);
        let s = p.to_json();
        assert_eq!(
            s,
            r#"{"vars":["x","y"],"terms":[[0,0,"1"],[1,1,"1"],[2,1,"1"]]}"#
        );
        assert_eq!(BiPoly::from_json(&s).unwrap(), p);
        assert!(BiPoly::from_json(r#"{"vars":["x","y"],"terms":[[1,1,"1"],[0,0,"1"]]}"#).is_err());
        assert!(BiPoly::from_json(r#"{"vars":["x","y"],"terms":[[0,0,"0"]]}"#).is_err());
        assert!(BiPoly::from_json(r#"{"vars":["y","x"],"terms":[]}"#).is_err());
        assert!(BiPoly::from_json(r#"{"vars":["x","y"],"terms":[[0,0,"1x"]]}"#).is_err());
        let big = "123456789012345678901234567890";
        let p =
            BiPoly::from_json(&format!(r#"{{"vars":["x","y"],"terms":[[0,3,"{big}"]]}}"#)).unwrap();
        assert_eq!(p.coeff(0, 3).to_string(), big);
    }

    #[test]
    fn exact_division() {
        let f = bp(&[(0, 0, 1), (1, 1, 1)]);
        assert_eq!(f.divide_exact(&f).unwrap(), Some(BiPoly::one()));
        let g = bp(&[(0, 0, 1), (1, 1, 1), (2, 1, 1)]);
        assert_eq!(g.divide_exact(&f).unwrap(), None);
        assert!(matches!(
            f.divide_exact(&BiPoly::zero()),
            Err(Error::DivisionByZero)
        ));
        // (1 - y)(1 + x^2 y) ÷ (1 - y)
        let a = bp(&[(0, 0, 1), (0, 1, -1)]);
        let b = bp(&[(0, 0, 1), (2, 1, 1)]);
        assert_eq!((&a * &b).divide_exact(&a).unwrap(), Some(b.clone()));
        // 2 + 2xy is not (1 + xy) times an integer polynomial divided by 4
        let four = bp(&[(0, 0, 4)]);
        assert_eq!(
            bp(&[(0, 0, 2), (1, 1, 2)]).divide_exact(&four).unwrap(),
            None
        );
    }

    #[test]
    fn reflection_and_ratio() {
        let p = bp(&[(0, 0, 1), (1, 1, 1)]);
        assert_eq!(p.reflect(), p);
        assert_eq!(p.reflect().unit_monomial_ratio(&p), Some((1, 0, 0)));
        let q = bp(&[(0, 0, 1), (1, 1, 1), (2, 1, 1)]);
        assert_eq!(q.reflect().unit_monomial_ratio(&q), None);
        let shifted = &bp(&[(3, 1, -1)]) * &q;
        assert_eq!(shifted.unit_monomial_ratio(&q), Some((-1, 3, 1)));
    }

    #[test]
    fn y_coefficients() {
        let p = bp(&[(0, 0, 1), (1, 1, 2), (3, 1, 1), (0, 2, 5)]);
        assert_eq!(p.y_coefficient(1), UniPoly::from_i64(&[0, 2, 0, 1]));
        assert_eq!(p.y_coefficient(7), UniPoly::zero());
        let back = BiPoly::from_y_coefficients(&[
            p.y_coefficient(0),
            p.y_coefficient(1),
            p.y_coefficient(2),
        ]);
        assert_eq!(back, p);
        assert_eq!(p.truncate_y(1).degree_y(), Some(1));
    }

    #[test]
    fn univariate() {
        let a = UniPoly::from_i64(&[1, 1]);
        let sq = &a * &a;
        assert_eq!(sq, UniPoly::from_i64(&[1, 2, 1]));
        assert_eq!(sq.to_string(), "1 + 2*x + x^2");
        assert_eq!(sq.divide_exact(&a).unwrap(), Some(a.clone()));
        assert_eq!(
            UniPoly::from_i64(&[1, 0, 1]).divide_exact(&a).unwrap(),
            None
        );
        assert!(sq.is_palindromic());
        assert!(!UniPoly::from_i64(&[1, 2]).is_palindromic());
        assert_eq!(&sq - &sq, UniPoly::zero());
        assert_eq!(
            BiPoly::compose_monomial(&a, 2, 1),
            bp(&[(0, 0, 1), (2, 1, 1)])
        );
    }

    fn small_poly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec((0u32..5, 0u32..4, -6i64..7), 0..8).prop_map(BiPoly::from_terms)
    }

    proptest! {
        #[test]
        fn product_divides_back(f in small_poly(), g in small_poly()) {
            prop_assume!(!g.is_zero());
            let h = &f * &g;
            let q = h.divide_exact(&g).unwrap();
            prop_assert_eq!(q.as_ref(), Some(&f));
            prop_assert_eq!(&g * q.as_ref().unwrap(), h);
        }

        #[test]
        fn json_round_trip(f in small_poly()) {
            prop_assert_eq!(BiPoly::from_json(&f.to_json()).unwrap(), f);
        }

        #[test]
        fn division_result_multiplies_back(f in small_poly(), g in small_poly()) {
            prop_assume!(!g.is_zero());
            if let Some(q) = f.divide_exact(&g).unwrap() {
                prop_assert_eq!(&g * &q, f);
            }
        }
    }
}
