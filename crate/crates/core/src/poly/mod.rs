//! Dense univariate polynomials over arbitrary-precision integers and
//! rationals. `coeffs[i]` is the coefficient of `x^i`; the zero polynomial is
//! the empty vector and has no degree.

mod basis;

pub use basis::{
    from_falling_factorial, is_log_concave, stirling2, stirling2_row, to_falling_factorial, LogConcavity,
};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub type Rational = BigRational;
pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("stirling number S({n}, {k}) requested with k > n")]
    StirlingRange { n: usize, k: usize },
    #[error("invalid coefficient {0:?}")]
    BadCoefficient(String),
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Num> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![T::one()],
        }
    }

    /// `c·x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `x - root`.
    pub fn linear(root: T) -> Self {
        Self::new(vec![T::zero() - root, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero past the end).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_by_power(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn evaluate(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let mut k = T::zero();
        let coeffs = self
            .coeffs
            .iter()
            .skip(1)
            .map(|c| {
                k = k.clone() + T::one();
                c.clone() * k.clone()
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Largest `k` with `x^k` dividing the polynomial (0 for the zero polynomial).
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn map<U: Clone + Num>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Clone + Num> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Clone + Num> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Clone + Num> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
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
        Poly::new(out)
    }
}

impl<T: Clone + Num + Neg<Output = T>> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().cloned().map(Neg::neg).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Clone + Num> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl IntPoly {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rational(&self) -> RatPoly {
        self.map(|c| Rational::from_integer(c.clone()))
    }

    /// Exact value at a rational point.
    pub fn evaluate_at(&self, q: &Rational) -> Rational {
        self.to_rational().evaluate(q)
    }
}

impl RatPoly {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// Polynomial division: `self = q·g + r` with `deg r < deg g`.
    pub fn div_rem(&self, g: &RatPoly) -> Result<(RatPoly, RatPoly), PolyError> {
        let dg = g.degree().ok_or(PolyError::DivisionByZero)?;
        let lead = g.coeffs[dg].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dg] / &lead;
            if !c.is_zero() {
                for (i, gc) in g.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * gc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dg);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, g: &RatPoly) -> Result<RatPoly, PolyError> {
        self.div_rem(g).map(|(_, r)| r)
    }

    /// Exact quotient; callers guarantee divisibility.
    pub fn exact_div(&self, g: &RatPoly) -> Result<RatPoly, PolyError> {
        let (q, r) = self.div_rem(g)?;
        debug_assert!(r.is_zero(), "inexact division");
        Ok(q)
    }

    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor by Euclidean remainders.
    pub fn gcd(&self, other: &RatPoly) -> Result<RatPoly, PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::ZeroGcd);
        }
        let (mut a, mut b) = (self.primitive(), other.primitive());
        while !b.is_zero() {
            let r = a.rem(&b)?.primitive();
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Rescales by a positive rational so the coefficients become coprime
    /// integers. Signs and roots are unchanged.
    pub fn primitive(&self) -> RatPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let den_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let content = nums.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Self::new(
            nums.into_iter()
                .map(|c| Rational::from_integer(c / &content))
                .collect(),
        )
    }

    /// Integer coefficients if every coefficient is integral.
    pub fn to_integer(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }

    /// Sign (−1, 0, 1) of the value at `x`.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        let v = self.evaluate(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Sign of the leading coefficient at ±∞ (`positive_end` picks +∞).
    pub fn sign_at_infinity(&self, positive_end: bool) -> i8 {
        match self.leading() {
            None => 0,
            Some(l) => {
                let s: i8 = if l.is_positive() { 1 } else { -1 };
                let odd = self.degree().unwrap_or(0) % 2 == 1;
                if positive_end || !odd {
                    s
                } else {
                    -s
                }
            }
        }
    }
}

fn fmt_terms<T: fmt::Display + Zero>(coeffs: &[T], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if coeffs.is_empty() {
        return f.write_str("0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !first {
            f.write_str(" + ")?;
        }
        first = false;
        match i {
            0 => write!(f, "{c}")?,
            1 => write!(f, "({c})x")?,
            _ => write!(f, "({c})x^{i}")?,
        }
    }
    Ok(())
}

impl<T: fmt::Display + Zero> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(&self.coeffs, f)
    }
}

impl<T: fmt::Display + Zero> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[")?;
        fmt_terms(&self.coeffs, f)?;
        write!(f, "]")
    }
}

/// Coefficient lists travel as JSON arrays of decimal strings so arbitrary
/// precision survives every JSON reader.
pub mod decimal {
    use super::*;

    pub fn to_strings(coeffs: &[BigInt]) -> Vec<String> {
        coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<Vec<BigInt>, PolyError> {
        items
            .iter()
            .map(|s| {
                let s = s.as_ref().trim();
                s.parse::<BigInt>()
                    .map_err(|_| PolyError::BadCoefficient(s.to_string()))
            })
            .collect()
    }

    pub fn serialize<S: Serializer>(coeffs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        to_strings(coeffs).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        from_strings(&raw).map_err(serde::de::Error::custom)
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        decimal::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        decimal::deserialize(d).map(IntPoly::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn rp(c: &[i64]) -> RatPoly {
        RatPoly::from_i64s(c)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&ip(&[1, 1]) * &ip(&[-1, 1]), ip(&[-1, 0, 1]));
        assert_eq!(ip(&[1, 0, 1]).evaluate_at(&q(0, 1)), q(1, 1));
        assert_eq!(ip(&[2, 1]).shift_by_power(3), ip(&[0, 0, 0, 2, 1]));
        assert_eq!(ip(&[3, 0, 0]), ip(&[3]));
        assert_eq!(ip(&[0, 0]).degree(), None);
        assert!(IntPoly::zero().shift_by_power(4).is_zero());
        assert_eq!(&ip(&[1, 2]) - &ip(&[1, 2]), IntPoly::zero());
        assert_eq!(ip(&[1, 1]).pow(3), ip(&[1, 3, 3, 1]));
        assert_eq!(ip(&[0, 0, 5, 1]).low_order(), 2);
    }

    #[test]
    fn derivatives() {
        assert_eq!(rp(&[0, 0, 0, 1]).derivative(), rp(&[0, 0, 3]));
        assert!(rp(&[7]).derivative().is_zero());
        // F(2,0) cubic x^3 + 7x^2 + 12x + 4
        assert_eq!(rp(&[4, 12, 7, 1]).derivative(), rp(&[12, 14, 3]));
    }

    #[test]
    fn remainders() {
        assert_eq!(rp(&[-1, 0, 1]).rem(&rp(&[0, 2])).unwrap(), rp(&[-1]));
        let g = rp(&[3, 1, 4]);
        assert!(g.rem(&g).unwrap().is_zero());
        assert_eq!(rp(&[0, 0, 0, 1]).rem(&rp(&[1, 0, 1])).unwrap(), rp(&[0, -1]));
        assert_eq!(rp(&[1, 2]).rem(&RatPoly::zero()), Err(PolyError::DivisionByZero));
        let (qq, r) = rp(&[1, 2, 3, 4]).div_rem(&rp(&[1, 1])).unwrap();
        assert_eq!(&(&qq * &rp(&[1, 1])) + &r, rp(&[1, 2, 3, 4]));
    }

    #[test]
    fn gcds() {
        let xm1 = rp(&[-1, 1]);
        assert_eq!(xm1.pow(2).gcd(&xm1).unwrap(), xm1);
        assert_eq!(rp(&[1, 1]).gcd(&rp(&[2, 1])).unwrap(), RatPoly::one());
        assert_eq!(RatPoly::zero().gcd(&RatPoly::zero()), Err(PolyError::ZeroGcd));
        assert_eq!(RatPoly::zero().gcd(&rp(&[2, 4])).unwrap(), rp(&[1, 2]).monic());
        // repeated root detection
        let f = &xm1.pow(2) * &rp(&[2, 1]);
        assert_eq!(f.gcd(&f.derivative()).unwrap(), xm1);
        let g = &xm1 * &rp(&[2, 1]);
        assert_eq!(g.gcd(&g.derivative()).unwrap(), RatPoly::one());
    }

    #[test]
    fn primitive_keeps_sign() {
        let p = RatPoly::new(vec![q(-2, 3), q(4, 9)]);
        assert_eq!(p.primitive(), rp(&[-3, 2]));
        assert_eq!(rp(&[-4, -6]).primitive(), rp(&[-2, -3]));
    }

    #[test]
    fn json_decimal_strings() {
        let p = IntPoly::new(vec![BigInt::from(10).pow(30), BigInt::from(-3)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["1000000000000000000000000000000","-3"]"#);
        assert_eq!(serde_json::from_str::<IntPoly>(&s).unwrap(), p);
        assert!(serde_json::from_str::<IntPoly>(r#"["1.5"]"#).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..20, 0..7).prop_map(|v| ip(&v))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), n in -9i64..9, d in 1i64..9) {
            let x = q(n, d);
            prop_assert_eq!((&a * &b).evaluate_at(&x), a.evaluate_at(&x) * b.evaluate_at(&x));
        }

        #[test]
        fn division_identity(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (a, b) = (a.to_rational(), b.to_rational());
            let (qq, r) = a.div_rem(&b).unwrap();
            prop_assert!(r.degree() < b.degree());
            prop_assert_eq!(&(&qq * &b) + &r, a);
        }
    }
}
