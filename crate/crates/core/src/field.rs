//! Exact scalar fields: the rationals and the Eisenstein field Q(ω).
//!
//! Everything above this module is generic over [`Field`]. The two exact
//! instances are [`Rational`] and [`Eisenstein`]; `f64` also implements the
//! trait so the matrix layer can be reused for quick floating-point checks,
//! but equality there is bitwise and none of the axiom suites rely on it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed scalar literal `{0}`")]
    Malformed(String),
}

/// A commutative field with decidable equality.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// The image of a rational number under the prime-field embedding.
    fn from_rational(q: &Rational) -> Self;

    /// Draw a pseudorandom element whose rational components have numerator
    /// and denominator bounded by `bound` in absolute value.
    fn random<R: Rng + ?Sized>(rng: &mut R, bound: u32) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from(n))
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        rhs.inv().map(|r| self.clone() * r).ok_or(FieldError::DivisionByZero)
    }
}

/// Scalars with a textual form in the ASCII scalar grammar.
pub trait ScalarText: Field + FromStr<Err = FieldError> {}

impl<T: Field + FromStr<Err = FieldError>> ScalarText for T {}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// An arbitrary-precision rational in lowest terms with positive denominator.
///
/// Values whose numerator and denominator fit in an `i64` are stored inline
/// and use overflow-checked machine arithmetic, falling back to big integers
/// on overflow. The representation is canonical, so derived equality and
/// hashing agree with numeric equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Repr {
    Small(Ratio<i64>),
    Big(BigRational),
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self, FieldError> {
        Self::from_bigints(BigInt::from(num), BigInt::from(den))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::ZeroDenominator);
        }
        Ok(Self::from_big(BigRational::new(num, den)))
    }

    fn from_big(q: BigRational) -> Self {
        match (q.numer().to_i64(), q.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Rational(Repr::Small(Ratio::new_raw(n, d))),
            _ => Rational(Repr::Big(q)),
        }
    }

    fn from_small(q: Ratio<i64>) -> Self {
        // i64::MIN has no negation; keep it out of the inline form
        if *q.numer() == i64::MIN {
            Rational(Repr::Big(BigRational::new_raw(BigInt::from(*q.numer()), BigInt::from(*q.denom()))))
        } else {
            Rational(Repr::Small(q))
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(q) => BigRational::new_raw(BigInt::from(*q.numer()), BigInt::from(*q.denom())),
            Repr::Big(q) => q.clone(),
        }
    }

    fn combine(
        &self,
        rhs: &Self,
        small: impl FnOnce(&Ratio<i64>, &Ratio<i64>) -> Option<Ratio<i64>>,
        big: impl FnOnce(BigRational, BigRational) -> BigRational,
    ) -> Self {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
            if let Some(r) = small(a, b) {
                return Self::from_small(r);
            }
        }
        Self::from_big(big(self.to_big(), rhs.to_big()))
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(q) => BigInt::from(*q.numer()),
            Repr::Big(q) => q.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(q) => BigInt::from(*q.denom()),
            Repr::Big(q) => q.denom().clone(),
        }
    }

    /// max(|num|, den)
    pub fn height(&self) -> BigInt {
        self.numer().abs().max(self.denom())
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(q) => q.is_integer(),
            Repr::Big(q) => q.is_integer(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(q) => *q.numer() < 0,
            Repr::Big(q) => q.is_negative(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(q) => q.to_f64(),
            Repr::Big(q) => q.to_f64(),
        }
        .unwrap_or(f64::NAN)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_small(Ratio::from_integer(n))
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Self::from_big(BigRational::from_integer(n))
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(Repr::Small(Ratio::zero()))
    }
    fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Small(q) if q.is_zero())
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(Repr::Small(Ratio::one()))
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        &self + &rhs
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        &self - &rhs
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        &self * &rhs
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self.0 {
            Repr::Small(q) => Rational(Repr::Small(-q)),
            Repr::Big(q) => Self::from_big(-q),
        }
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        self.combine(rhs, |a, b| a.checked_add(b), |a, b| a + b)
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self.combine(rhs, |a, b| a.checked_sub(b), |a, b| a - b)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        self.combine(rhs, |a, b| a.checked_mul(b), |a, b| a * b)
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        match &self.0 {
            _ if self.is_zero() => None,
            Repr::Small(q) => Some(Self::from_small(q.recip())),
            Repr::Big(q) => Some(Self::from_big(q.recip())),
        }
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn random<R: Rng + ?Sized>(rng: &mut R, bound: u32) -> Self {
        let b = i64::from(bound.max(1));
        let num = rng.gen_range(-b..=b);
        let den = rng.gen_range(1..=b);
        Rational::new(num, den).expect("den >= 1")
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

fn parse_digits(s: &str, whole: &str) -> Result<BigInt, FieldError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(FieldError::Malformed(whole.to_string()));
    }
    s.parse::<BigInt>().map_err(|_| FieldError::Malformed(whole.to_string()))
}

/// `['-'] digits ['/' digits]`
fn parse_rational(s: &str, whole: &str) -> Result<Rational, FieldError> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (parse_digits(n, whole)?, parse_digits(d, whole)?),
        None => (parse_digits(body, whole)?, BigInt::one()),
    };
    let num = if neg { -num } else { num };
    Rational::from_bigints(num, den)
}

impl FromStr for Rational {
    type Err = FieldError;
    fn from_str(s: &str) -> Result<Self, FieldError> {
        let t = s.trim();
        parse_rational(t, s)
    }
}

// ---------------------------------------------------------------------------
// Eisenstein field Q(ω), ω² + ω + 1 = 0
// ---------------------------------------------------------------------------

/// `u + w·ω` with ω a primitive cube root of unity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Eisenstein {
    pub u: Rational,
    pub w: Rational,
}

impl Eisenstein {
    pub fn new(u: Rational, w: Rational) -> Self {
        Eisenstein { u, w }
    }

    pub fn omega() -> Self {
        Eisenstein::new(Rational::zero(), Rational::one())
    }

    /// ω² = −1 − ω
    pub fn omega_squared() -> Self {
        Eisenstein::new(-Rational::one(), -Rational::one())
    }

    /// √3·i = 2ω + 1.
    pub fn sqrt_minus_three() -> Self {
        Eisenstein::new(Rational::one(), Rational::from(2))
    }

    /// N(u + wω) = u² − uw + w², the product with the Galois conjugate.
    pub fn norm(&self) -> Rational {
        &(&(&self.u * &self.u) - &(&self.u * &self.w)) + &(&self.w * &self.w)
    }

    /// Galois conjugate, ω ↦ ω².
    pub fn conj(&self) -> Self {
        Eisenstein::new(&self.u - &self.w, -self.w.clone())
    }

    pub fn is_rational(&self) -> bool {
        self.w.is_zero()
    }

    pub fn height(&self) -> BigInt {
        self.u.height().max(self.w.height())
    }
}

impl From<Rational> for Eisenstein {
    fn from(q: Rational) -> Self {
        Eisenstein::new(q, Rational::zero())
    }
}

impl From<i64> for Eisenstein {
    fn from(n: i64) -> Self {
        Eisenstein::from(Rational::from(n))
    }
}

impl Zero for Eisenstein {
    fn zero() -> Self {
        Eisenstein::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.u.is_zero() && self.w.is_zero()
    }
}

impl One for Eisenstein {
    fn one() -> Self {
        Eisenstein::new(Rational::one(), Rational::zero())
    }
}

impl Add for Eisenstein {
    type Output = Eisenstein;
    fn add(self, rhs: Eisenstein) -> Eisenstein {
        Eisenstein::new(self.u + rhs.u, self.w + rhs.w)
    }
}

impl Sub for Eisenstein {
    type Output = Eisenstein;
    fn sub(self, rhs: Eisenstein) -> Eisenstein {
        Eisenstein::new(self.u - rhs.u, self.w - rhs.w)
    }
}

impl Mul for Eisenstein {
    type Output = Eisenstein;
    fn mul(self, rhs: Eisenstein) -> Eisenstein {
        // (a + bω)(c + dω) = (ac − bd) + (ad + bc − bd)ω
        let bd = &self.w * &rhs.w;
        let u = &(&self.u * &rhs.u) - &bd;
        let w = &(&(&self.u * &rhs.w) + &(&self.w * &rhs.u)) - &bd;
        Eisenstein::new(u, w)
    }
}

impl Neg for Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein::new(-self.u, -self.w)
    }
}

impl Field for Eisenstein {
    fn inv(&self) -> Option<Self> {
        // (a + bω)⁻¹ = ((a − b) − bω) / N
        let n = self.norm();
        let n_inv = n.inv()?;
        let c = self.conj();
        Some(Eisenstein::new(&c.u * &n_inv, &c.w * &n_inv))
    }

    fn from_rational(q: &Rational) -> Self {
        Eisenstein::from(q.clone())
    }

    fn random<R: Rng + ?Sized>(rng: &mut R, bound: u32) -> Self {
        Eisenstein::new(Rational::random(rng, bound), Rational::random(rng, bound))
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w_term = |f: &mut fmt::Formatter<'_>, w: &Rational| -> fmt::Result {
            if w.is_one() {
                write!(f, "w")
            } else {
                write!(f, "{w}w")
            }
        };
        match (self.u.is_zero(), self.w.is_zero()) {
            (_, true) => write!(f, "{}", self.u),
            (true, false) if self.w == -Rational::one() => write!(f, "-w"),
            (true, false) => w_term(f, &self.w),
            (false, false) => {
                write!(f, "{}", self.u)?;
                if self.w.is_negative() {
                    write!(f, "-")?;
                } else {
                    write!(f, "+")?;
                }
                w_term(f, &self.w.abs())
            }
        }
    }
}

impl FromStr for Eisenstein {
    type Err = FieldError;
    fn from_str(s: &str) -> Result<Self, FieldError> {
        let t = s.trim();
        let Some(body) = t.strip_suffix('w') else {
            return parse_rational(t, s).map(Eisenstein::from);
        };
        // the only sign past position 0 separates the rational part from the ω part
        let split = body.char_indices().skip(1).filter(|&(_, ch)| ch == '+' || ch == '-').map(|(i, _)| i).last();
        let (u, coeff) = match split {
            Some(i) => (parse_rational(&body[..i], s)?, &body[i..]),
            None => (Rational::zero(), body),
        };
        let w = match (split, coeff) {
            (None, "") | (Some(_), "+") => Rational::one(),
            (_, "-") => -Rational::one(),
            (None, c) => parse_rational(c, s)?,
            (Some(_), c) => parse_rational(c.strip_prefix('+').unwrap_or(c), s)?,
        };
        Ok(Eisenstein::new(u, w))
    }
}

// ---------------------------------------------------------------------------
// Floating point
// ---------------------------------------------------------------------------

impl Field for f64 {
    fn inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }

    fn from_rational(q: &Rational) -> Self {
        q.to_f64()
    }

    fn random<R: Rng + ?Sized>(rng: &mut R, bound: u32) -> Self {
        Rational::random(rng, bound).to_f64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn e(s: &str) -> Eisenstein {
        s.parse().unwrap()
    }

    #[test]
    fn rational_canonical_form() {
        let r = q(2, 4);
        assert_eq!((r.numer().clone(), r.denom().clone()), (1.into(), 2.into()));
        let r = q(0, 7);
        assert_eq!((r.numer().clone(), r.denom().clone()), (0.into(), 1.into()));
        let r = q(3, -6);
        assert_eq!((r.numer().clone(), r.denom().clone()), ((-1).into(), 2.into()));
        assert_eq!(Rational::new(1, 0), Err(FieldError::ZeroDenominator));
    }

    #[test]
    fn canonical_form_is_stable() {
        let r = q(-12, 18);
        let again = Rational::from_bigints(r.numer().clone(), r.denom().clone()).unwrap();
        assert_eq!(again, r);
        assert_eq!(again.numer(), r.numer());
        assert_eq!(again.denom(), r.denom());
    }

    #[test]
    fn rational_arith() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        assert_eq!(q(2, 3).inv(), Some(q(3, 2)));
        assert_eq!(Rational::zero().inv(), None);
        assert_eq!(q(1, 2).checked_div(&Rational::zero()), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn eisenstein_products() {
        let one_plus_w = e("1+w");
        assert_eq!(one_plus_w.clone() * one_plus_w.clone(), e("w"));
        let w = Eisenstein::omega();
        assert_eq!(w.clone() * w.clone() * w.clone(), Eisenstein::one());
        assert_eq!(w.clone() * w.clone(), Eisenstein::omega_squared());
        let minimal = w.clone() * w.clone() + w + Eisenstein::one();
        assert!(minimal.is_zero());
    }

    #[test]
    fn eisenstein_inverses() {
        assert_eq!(e("1+w").inv(), Some(e("-w")));
        assert_eq!(Eisenstein::omega().inv(), Some(e("-1-w")));
        assert_eq!(Eisenstein::zero().inv(), None);
        // (√3 i)² = −3
        let s = Eisenstein::sqrt_minus_three();
        assert_eq!(s.clone() * s, Eisenstein::from(-3));
    }

    #[test]
    fn parse_cases() {
        assert_eq!(e("1/3+2/3w"), Eisenstein::new(q(1, 3), q(2, 3)));
        assert_eq!(e("-1"), Eisenstein::from(-1));
        assert_eq!(e("w"), Eisenstein::omega());
        assert_eq!(e("-w"), -Eisenstein::omega());
        assert_eq!(e("5"), Eisenstein::from(5));
        assert_eq!(e("2-w"), Eisenstein::new(q(2, 1), q(-1, 1)));
        assert_eq!(e("-1/2-3/4w"), Eisenstein::new(q(-1, 2), q(-3, 4)));
        assert_eq!(e("-3/4w"), Eisenstein::new(q(0, 1), q(-3, 4)));
        assert_eq!(e("2/4"), Eisenstein::from(q(1, 2)));
        assert!("7/-2".parse::<Rational>().is_err());
    }

    #[test]
    fn parse_rejects_malformed() {
        for bad in ["", "-", "1/", "/2", "1//2", "+w", "ww", "1+", "a", "1.5", "1/0", "3w2", "1+-2w"] {
            assert!(bad.parse::<Eisenstein>().is_err(), "accepted {bad:?}");
        }
        for bad in ["w", "1+w", "+1"] {
            assert!(bad.parse::<Rational>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn format_minimal_terms() {
        let cases = [
            ("0", "0"),
            ("4/2", "2"),
            ("w", "w"),
            ("-w", "-w"),
            ("1+w", "1+w"),
            ("1-w", "1-w"),
            ("1/3+2/3w", "1/3+2/3w"),
            ("-1/3-2/3w", "-1/3-2/3w"),
            ("0+3w", "3w"),
        ];
        for (input, out) in cases {
            assert_eq!(e(input).to_string(), out);
        }
    }

    #[test]
    fn field_axioms_sampled() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        fn axioms<F: Field>(rng: &mut ChaCha8Rng) {
            for _ in 0..1000 {
                let (a, b, c) = (F::random(rng, 9), F::random(rng, 9), F::random(rng, 9));
                assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
                assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
                assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
                assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
                assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
                assert!((a.clone() - a.clone()).is_zero());
                if let Some(ai) = a.inv() {
                    assert!((a.clone() * ai).is_one());
                } else {
                    assert!(a.is_zero());
                }
            }
        }
        axioms::<Rational>(&mut rng);
        axioms::<Eisenstein>(&mut rng);
    }

    #[test]
    fn norm_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let x = Eisenstein::random(&mut rng, 12);
            let y = Eisenstein::random(&mut rng, 12);
            assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
            assert_eq!(x.clone() * x.conj(), Eisenstein::from(x.norm()));
        }
    }
}
