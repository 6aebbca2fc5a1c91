//! Exact scalars over ℚ and ℚ(i), and bivariate Hodge polynomials.
//!
//! `Rational` is `num_rational::BigRational`; it is always reduced with a
//! positive denominator. `GaussianRational` is a pair of rationals.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`; panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `"p/q"` rendering used by serialized output (integers keep `/1`).
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Converts an integral rational to `i64`, `None` otherwise.
pub fn rational_to_i64(r: &Rational) -> Option<i64> {
    if !r.is_integer() {
        return None;
    }
    i64::try_from(r.numer().clone()).ok()
}

/// An element `re + i·im` of ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational::new(rat(n), Rational::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        GaussianRational::new(r, Rational::zero())
    }

    /// `re + i·im` from machine integers.
    pub fn int_pair(re: i64, im: i64) -> Self {
        GaussianRational::new(rat(re), rat(im))
    }

    pub fn i() -> Self {
        GaussianRational::int_pair(0, 1)
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// |z|² = re² + im².
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussianRational::new(&self.re * r, &self.im * r)
    }

    /// Multiplication by `i`.
    pub fn times_i(&self) -> Self {
        GaussianRational::new(-self.im.clone(), self.re.clone())
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::from_int(1)
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GaussianRational::new(self.re + o.re, self.im + o.im)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, o: &GaussianRational) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussianRational::new(self.re - o.re, self.im - o.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{}{}{}i", self.re, sign, self.im.abs())
            }
        }
    }
}

/// Polynomial in `x`, `t` with positive integer coefficients.
///
/// Invariant: no zero coefficient is ever stored, so equality is structural
/// and iteration is lexicographic in `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct HodgePolynomial {
    terms: BTreeMap<(u32, u32), u64>,
}

impl HodgePolynomial {
    pub fn zero() -> Self {
        HodgePolynomial::default()
    }

    pub fn one() -> Self {
        HodgePolynomial::monomial(0, 0, 1)
    }

    pub fn monomial(a: u32, b: u32, c: u64) -> Self {
        let mut p = HodgePolynomial::zero();
        p.add_term(a, b, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, u32, u64)>>(it: I) -> Self {
        let mut p = HodgePolynomial::zero();
        for (a, b, c) in it {
            p.add_term(a, b, c);
        }
        p
    }

    /// `Σ_{j=lo}^{hi} (xt)^j`.
    pub fn diagonal_run(lo: u32, hi: u32) -> Self {
        HodgePolynomial::from_terms((lo..=hi).map(|j| (j, j, 1)))
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: u64) {
        if c == 0 {
            return;
        }
        *self.terms.entry((a, b)).or_insert(0) += c;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x^a t^b`.
    pub fn coeff(&self, a: u32, b: u32) -> u64 {
        self.terms.get(&(a, b)).copied().unwrap_or(0)
    }

    /// `{a + b : coeff(a, b) > 0}`.
    pub fn total_degree_support(&self) -> BTreeSet<u32> {
        self.terms.keys().map(|&(a, b)| a + b).collect()
    }

    /// Exchanges the roles of `x` and `t`.
    pub fn swap_variables(&self) -> Self {
        HodgePolynomial::from_terms(self.terms.iter().map(|(&(a, b), &c)| (b, a, c)))
    }

    /// Multiplies by `x^a t^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        HodgePolynomial::from_terms(self.terms.iter().map(|(&(x, y), &c)| (x + a, y + b, c)))
    }

    /// Value at `x = t = 1`.
    pub fn eval_one(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.terms.iter().map(|(&(a, b), &c)| (a, b, c))
    }

    /// True when every term has the form `(xt)^j`.
    pub fn is_diagonal(&self) -> bool {
        self.terms.keys().all(|&(a, b)| a == b)
    }

    /// Palindromic as a polynomial in the single variable `xt`
    /// (only meaningful for diagonal polynomials).
    pub fn is_palindromic(&self) -> bool {
        if !self.is_diagonal() {
            return false;
        }
        let Some(&(top, _)) = self.terms.keys().next_back() else {
            return true;
        };
        let bottom = self.terms.keys().next().map(|k| k.0).unwrap_or(0);
        self.terms.iter().all(|(&(a, _), &c)| self.coeff(top + bottom - a, top + bottom - a) == c)
    }
}

impl Add for &HodgePolynomial {
    type Output = HodgePolynomial;
    fn add(self, o: &HodgePolynomial) -> HodgePolynomial {
        let mut p = self.clone();
        for (a, b, c) in o.terms() {
            p.add_term(a, b, c);
        }
        p
    }
}

impl Mul for &HodgePolynomial {
    type Output = HodgePolynomial;
    fn mul(self, o: &HodgePolynomial) -> HodgePolynomial {
        let mut p = HodgePolynomial::zero();
        for (a, b, c) in self.terms() {
            for (x, y, d) in o.terms() {
                p.add_term(a + x, b + y, c * d);
            }
        }
        p
    }
}

impl fmt::Display for HodgePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (a, b, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let var = |name: &str, e: u32| match e {
                0 => String::new(),
                1 => name.to_string(),
                _ => format!("{name}^{e}"),
            };
            let mono = format!("{}{}", var("x", a), var("t", b));
            match (c, mono.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => write!(f, "{mono}")?,
                (_, false) => write!(f, "{c}{mono}")?,
            }
        }
        Ok(())
    }
}
