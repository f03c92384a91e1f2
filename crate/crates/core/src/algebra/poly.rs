//! Dense univariate polynomials in ascending-coefficient order.
//!
//! [`Polynomial<T>`] carries the ring operations shared by both coefficient
//! rings. [`Poly`] (over GF(3)) adds division, evaluation, root-multiplicity
//! extraction and the text interchange form; [`IntPoly`] (over ℤ) adds
//! reduction mod 3.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{AlgebraError, Gf3, Ring};

/// Polynomial with coefficients `coeffs[i]` of `x^i`.
///
/// Always normalized: the last coefficient is nonzero, and the zero
/// polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

/// Polynomial over GF(3).
pub type Poly = Polynomial<Gf3>;
/// Polynomial over the integers, arbitrary precision.
pub type IntPoly = Polynomial<BigInt>;

impl<T: Ring> Polynomial<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `c·x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// `x + c`.
    pub fn x_plus(c: T) -> Self {
        Self::from_coeffs(vec![c, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner(x))`, by Horner's rule.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// `self(-x)`.
    pub fn reflect(&self) -> Self {
        Self::from_coeffs(
            self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() }).collect(),
        )
    }
}

impl<T: Ring> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Ring> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Ring> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Ring> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl<T: Ring> Mul for Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Polynomial<T>) -> Polynomial<T> {
        &self * &rhs
    }
}

impl<T: Ring> std::iter::Product for Polynomial<T> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}

/// Multiplicities of the roots `0`, `1` and `-1`, written `(r, s, t)` for
/// `x^r (x-1)^s (x+1)^t`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ExponentTriple {
    pub r: u64,
    pub s: u64,
    pub t: u64,
}

impl ExponentTriple {
    pub const fn new(r: u64, s: u64, t: u64) -> Self {
        ExponentTriple { r, s, t }
    }

    pub fn total(&self) -> u64 {
        self.r + self.s + self.t
    }

    pub fn residues(&self) -> (u64, u64, u64) {
        (self.r % 3, self.s % 3, self.t % 3)
    }
}

impl fmt::Display for ExponentTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.s, self.t)
    }
}

/// Result of [`Poly::split_linear`]: `x^r (x-1)^s (x+1)^t · remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSplit {
    pub exponents: ExponentTriple,
    pub remainder: Poly,
}

impl LinearSplit {
    pub fn is_fully_split(&self) -> bool {
        self.remainder == Poly::one()
    }
}

/// The three monic irreducible quadratics over GF(3), as used by the
/// display helper. Ascending coefficients.
const IRREDUCIBLE_QUADRATICS: [(&str, [u8; 3]); 3] =
    [("(x^2+1)", [1, 0, 1]), ("(x^2+x-1)", [2, 1, 1]), ("(x^2-x-1)", [2, 2, 1])];

impl Poly {
    /// Builds a polynomial from residues, reducing each mod 3.
    pub fn from_residues(values: &[i64]) -> Self {
        Self::from_coeffs(values.iter().map(|&v| Gf3::from_i64(v)).collect())
    }

    /// `x - a`.
    pub fn linear_factor(root: Gf3) -> Self {
        Self::x_plus(-root)
    }

    /// `x^r (x-1)^s (x+1)^t`.
    pub fn split(exponents: ExponentTriple) -> Self {
        let pow = |root: Gf3, e: u64| Self::linear_factor(root).pow(e as u32);
        &(&pow(Gf3::ZERO, exponents.r) * &pow(Gf3::ONE, exponents.s)) * &pow(Gf3::MINUS_ONE, exponents.t)
    }

    /// Long division; `divisor` must be nonzero.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly), AlgebraError> {
        let dlen = divisor.coeffs.len();
        let lead_inv = divisor.leading().ok_or(AlgebraError::DivisionByZeroPolynomial)?.inv()?;
        if self.coeffs.len() < dlen {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Gf3::ZERO; rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dlen - 1] * lead_inv;
            quot[k] = c;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= c * *d;
            }
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn eval(&self, at: Gf3) -> Gf3 {
        self.coeffs.iter().rev().fold(Gf3::ZERO, |acc, &c| acc * at + c)
    }

    /// Strips the maximal powers of `x`, `x-1` and `x+1`.
    pub fn split_linear(&self) -> Result<LinearSplit, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let mut rest = self.clone();
        let mut exps = [0u64; 3];
        for (slot, root) in Gf3::ELEMENTS.into_iter().enumerate() {
            let factor = Poly::linear_factor(root);
            while rest.eval(root).is_zero() {
                let (q, r) = rest.divrem(&factor)?;
                debug_assert!(r.is_zero());
                rest = q;
                exps[slot] += 1;
            }
        }
        // ELEMENTS order is 0, 1, 2 = roots 0, 1, -1.
        Ok(LinearSplit { exponents: ExponentTriple::new(exps[0], exps[1], exps[2]), remainder: rest })
    }

    /// `[c0,c1,...]` with coefficients in `{0,1,2}`.
    pub fn to_bracket(&self) -> String {
        let body: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", body.join(","))
    }

    pub fn from_bracket(text: &str) -> Result<Poly, PolyParseError> {
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| PolyParseError::new(text, "expected [c0,c1,...]"))?;
        if inner.trim().is_empty() {
            return Ok(Poly::zero());
        }
        let coeffs = inner
            .split(',')
            .map(|c| match c.trim() {
                "0" => Ok(Gf3::ZERO),
                "1" => Ok(Gf3::ONE),
                "2" => Ok(Gf3::TWO),
                other => Err(PolyParseError::new(other, "coefficient must be 0, 1 or 2")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Factored form with the remainder trial-divided by the irreducible
    /// quadratics `x^2+1`, `x^2+x-1`, `x^2-x-1`. Display only.
    pub fn factored_display(&self) -> String {
        let Ok(split) = self.split_linear() else {
            return "0".to_string();
        };
        let mut parts = compact_linear_factors(split.exponents);
        let mut rest = split.remainder;
        for (name, coeffs) in IRREDUCIBLE_QUADRATICS {
            let q = Poly::from_coeffs(coeffs.iter().map(|&c| Gf3::from(c)).collect());
            let mut mult = 0;
            loop {
                let (quot, rem) = rest.divrem(&q).expect("quadratic is nonzero");
                if !rem.is_zero() {
                    break;
                }
                rest = quot;
                mult += 1;
            }
            match mult {
                0 => {}
                1 => parts.push(name.to_string()),
                m => parts.push(format!("{name}^{m}")),
            }
        }
        if rest != Poly::one() {
            parts.push(rest.to_bracket());
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

fn compact_linear_factors(e: ExponentTriple) -> Vec<String> {
    let mut parts = Vec::new();
    for (name, exp) in [("x", e.r), ("(x-1)", e.s), ("(x+1)", e.t)] {
        match exp {
            0 => {}
            1 => parts.push(name.to_string()),
            k => parts.push(format!("{name}^{k}")),
        }
    }
    parts
}

/// Text form: fully split polynomials print compactly (`x^3*(x-1)^3`,
/// `x`, `1`); everything else prints all three exponents followed by the
/// remainder in bracket form (`x^1*(x-1)^2*(x+1)^0*[2,2,1]`).
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Ok(split) = self.split_linear() else {
            return f.write_str("0");
        };
        if split.is_fully_split() {
            let parts = compact_linear_factors(split.exponents);
            if parts.is_empty() {
                f.write_str("1")
            } else {
                f.write_str(&parts.join("*"))
            }
        } else {
            let e = split.exponents;
            write!(f, "x^{}*(x-1)^{}*(x+1)^{}*{}", e.r, e.s, e.t, split.remainder.to_bracket())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid polynomial text near `{fragment}`: {reason}")]
pub struct PolyParseError {
    pub fragment: String,
    pub reason: &'static str,
}

impl PolyParseError {
    fn new(fragment: &str, reason: &'static str) -> Self {
        PolyParseError { fragment: fragment.to_string(), reason }
    }
}

/// Accepts every string the `Display` impl produces, and more generally any
/// `*`-separated product of `x`, `(x-1)`, `(x+1)` (each with optional `^k`),
/// bracket polynomials, `1` and `0`.
impl FromStr for Poly {
    type Err = PolyParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        if text.is_empty() {
            return Err(PolyParseError::new(text, "empty input"));
        }
        let mut acc = Poly::one();
        for raw in text.split('*') {
            let factor = raw.trim();
            let (base, exp) = match factor.rsplit_once('^') {
                Some((b, e)) => {
                    let exp = e.trim().parse::<u32>().map_err(|_| PolyParseError::new(factor, "bad exponent"))?;
                    (b.trim(), exp)
                }
                _ => (factor, 1),
            };
            let base_poly = match base {
                "x" => Poly::x(),
                "(x-1)" => Poly::linear_factor(Gf3::ONE),
                "(x+1)" => Poly::linear_factor(Gf3::MINUS_ONE),
                "1" => Poly::one(),
                "0" => Poly::zero(),
                b if b.starts_with('[') => Poly::from_bracket(b)?,
                _ => return Err(PolyParseError::new(factor, "unknown factor")),
            };
            acc = &acc * &base_poly.pow(exp);
        }
        Ok(acc)
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl IntPoly {
    pub fn from_i64s(values: &[i64]) -> Self {
        Self::from_coeffs(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// Coefficientwise reduction into GF(3).
    pub fn reduce_mod3(&self) -> Poly {
        let three = BigInt::from(3);
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| {
                    let r = ((c % &three) + &three) % &three;
                    Gf3::new(r.to_u64().expect("residue fits"))
                })
                .collect(),
        )
    }
}

/// Conventional descending form, e.g. `x^3 - 3*x + 2`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
                if k > 0 {
                    f.write_str("*")?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(values: &[i64]) -> Poly {
        Poly::from_residues(values)
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[1, 0, 3, 0]).coeffs(), &[Gf3::ONE]);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert!(Poly::zero().is_zero());
    }

    #[test]
    fn mul_examples() {
        let xm1 = Poly::linear_factor(Gf3::ONE);
        let xp1 = Poly::linear_factor(Gf3::MINUS_ONE);
        assert_eq!(&xm1 * &xp1, p(&[2, 0, 1]));
        assert_eq!(&xm1 * &Poly::one(), xm1);
        // Frobenius: (x-1)^3 = x^3 - 1
        assert_eq!(xm1.pow(3), p(&[2, 0, 0, 1]));
        assert_eq!(&xm1 * &Poly::zero(), Poly::zero());
    }

    #[test]
    fn divrem_examples() {
        let (q, r) = p(&[2, 0, 0, 1]).divrem(&Poly::linear_factor(Gf3::ONE)).unwrap();
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
        let (q, r) = Poly::x().divrem(&Poly::x()).unwrap();
        assert_eq!((q, r), (Poly::one(), Poly::zero()));
        let (_, r) = p(&[2, 2, 1]).divrem(&Poly::linear_factor(Gf3::ONE)).unwrap();
        assert_eq!(r, Poly::constant(Gf3::TWO));
        assert_eq!(Poly::x().divrem(&Poly::zero()), Err(AlgebraError::DivisionByZeroPolynomial));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[2, 0, 0, 1]).eval(Gf3::ONE), Gf3::ZERO);
        assert_eq!(Poly::zero().eval(Gf3::TWO), Gf3::ZERO);
        assert_eq!(p(&[2, 2, 1]).eval(Gf3::TWO), Gf3::ONE);
    }

    #[test]
    fn split_examples() {
        // x^6 + 2x^3 = x^3 (x-1)^3
        let s = p(&[0, 0, 0, 2, 0, 0, 1]).split_linear().unwrap();
        assert_eq!(s.exponents, ExponentTriple::new(3, 3, 0));
        assert_eq!(s.remainder, Poly::one());

        let target = &Poly::split(ExponentTriple::new(1, 2, 0)) * &p(&[2, 2, 1]);
        let s = target.split_linear().unwrap();
        assert_eq!(s.exponents, ExponentTriple::new(1, 2, 0));
        assert_eq!(s.remainder, p(&[2, 2, 1]));

        let s = Poly::one().split_linear().unwrap();
        assert_eq!(s.exponents, ExponentTriple::default());
        assert_eq!(Poly::zero().split_linear(), Err(AlgebraError::ZeroPolynomial));
    }

    #[test]
    fn text_form() {
        assert_eq!(p(&[0, 0, 0, 2, 0, 0, 1]).to_string(), "x^3*(x-1)^3");
        assert_eq!(Poly::x().to_string(), "x");
        assert_eq!(Poly::one().to_string(), "1");
        assert_eq!(Poly::zero().to_string(), "0");
        let mixed = &Poly::split(ExponentTriple::new(1, 2, 0)) * &p(&[2, 2, 1]);
        assert_eq!(mixed.to_string(), "x^1*(x-1)^2*(x+1)^0*[2,2,1]");
        assert_eq!(mixed.factored_display(), "x*(x-1)^2*(x^2-x-1)");
        assert_eq!("x^1*(x-1)^2*(x+1)^0*[2,2,1]".parse::<Poly>().unwrap(), mixed);
        assert_eq!("(x+1)^3".parse::<Poly>().unwrap(), Poly::split(ExponentTriple::new(0, 0, 3)));
        assert!("y^2".parse::<Poly>().is_err());
        assert!("[0,3]".parse::<Poly>().is_err());
    }

    #[test]
    fn int_poly_display_and_reduction() {
        let q = IntPoly::from_i64s(&[2, -3, 0, 1]);
        assert_eq!(q.to_string(), "x^3 - 3*x + 2");
        assert_eq!(q.reduce_mod3(), p(&[2, 0, 0, 1]));
        assert_eq!(IntPoly::from_i64s(&[-1]).to_string(), "-1");
    }

    #[test]
    fn compose_shifts() {
        // (x)^2 at x+1 = x^2 + 2x + 1
        let sq = Poly::monomial(Gf3::ONE, 2);
        assert_eq!(sq.compose(&Poly::x_plus(Gf3::ONE)), p(&[1, 2, 1]));
        assert_eq!(p(&[1, 1, 1]).reflect(), p(&[1, 2, 1]));
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(0i64..3, 0..10).prop_map(|v| Poly::from_residues(&v))
    }

    proptest! {
        #[test]
        fn text_round_trip(q in arb_poly()) {
            let back: Poly = q.to_string().parse().unwrap();
            prop_assert_eq!(back, q);
        }

        #[test]
        fn divrem_reconstructs(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree() < b.degree() || r.is_zero());
        }

        #[test]
        fn split_reconstructs(a in arb_poly()) {
            prop_assume!(!a.is_zero());
            let s = a.split_linear().unwrap();
            prop_assert_eq!(&Poly::split(s.exponents) * &s.remainder, a);
            for root in Gf3::ELEMENTS {
                prop_assert!(!s.remainder.eval(root).is_zero());
            }
        }

        #[test]
        fn mul_degrees_add(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!((&a * &b).degree().unwrap(), a.degree().unwrap() + b.degree().unwrap());
        }
    }
}
