use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

use super::NumError;

/// Exact field arithmetic. Implemented for [`Rational`] and [`Gaussian`].
pub trait Field: Num + Clone + Neg<Output = Self> + Debug {
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl<T: Num + Clone + Neg<Output = T> + Debug> Field for T {}

pub type Rational = BigRational;
/// Element of ℚ(i).
pub type Gaussian = Complex<BigRational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldTag {
    /// ℚ, standing in for ℝ.
    RealQ,
    /// ℚ(i), standing in for ℂ.
    ComplexQi,
}

impl FieldTag {
    pub fn admits(self, z: &Gaussian) -> bool {
        self == FieldTag::ComplexQi || z.im.is_zero()
    }

    pub fn name(self) -> &'static str {
        match self {
            FieldTag::RealQ => "R",
            FieldTag::ComplexQi => "C",
        }
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn gauss(re: i64, im: i64) -> Gaussian {
    Complex::new(rat(re), rat(im))
}

pub fn real(q: Rational) -> Gaussian {
    Complex::new(q, Rational::zero())
}

pub fn imag_unit() -> Gaussian {
    gauss(0, 1)
}

pub fn is_real(z: &Gaussian) -> bool {
    z.im.is_zero()
}

pub fn parse_rational(s: &str) -> Result<Rational, NumError> {
    let t = s.trim();
    let bad = || NumError::Parse(s.to_string());
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num = num.strip_prefix('+').unwrap_or(num);
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(NumError::ZeroDenominator(s.to_string()));
    }
    Ok(Rational::new(n, d))
}

/// Parses `a/b`, `c/d*i`, `a/b+c/d*i`, `i`, `-i`.
pub fn parse_gaussian(s: &str) -> Result<Gaussian, NumError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = t.strip_suffix('i') else {
        return Ok(real(parse_rational(&t)?));
    };
    let body = body.strip_suffix('*').unwrap_or(body);
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(k, _)| k)
        .last();
    let (re, im) = match split {
        Some(k) => (parse_rational(&body[..k])?, &body[k..]),
        None => (Rational::zero(), body),
    };
    let im = match im {
        "" | "+" => Rational::one(),
        "-" => -Rational::one(),
        other => parse_rational(other).map_err(|_| NumError::Parse(s.to_string()))?,
    };
    Ok(Complex::new(re, im))
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn format_gaussian(z: &Gaussian) -> String {
    if z.im.is_zero() {
        return format_rational(&z.re);
    }
    let im = if z.im.abs().is_one() {
        String::new()
    } else {
        format!("{}*", format_rational(&z.im.abs()))
    };
    let sign = if z.im.is_negative() { "-" } else { "+" };
    if z.re.is_zero() {
        let sign = if z.im.is_negative() { "-" } else { "" };
        format!("{sign}{im}i")
    } else {
        format!("{}{sign}{im}i", format_rational(&z.re))
    }
}

fn integer_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    Some(Rational::new(integer_sqrt(q.numer())?, integer_sqrt(q.denom())?))
}

pub fn gaussian_sqrt(z: &Gaussian) -> Option<Gaussian> {
    if z.im.is_zero() {
        return if z.re.is_negative() {
            rational_sqrt(&-z.re.clone()).map(|r| Complex::new(Rational::zero(), r))
        } else {
            rational_sqrt(&z.re).map(real)
        };
    }
    let norm = rational_sqrt(&(&z.re * &z.re + &z.im * &z.im))?;
    let two = rat(2);
    let x = rational_sqrt(&((&z.re + &norm) / &two))?;
    let y = &z.im / (&two * &x);
    let w = Complex::new(x, y);
    (&w * &w == *z).then_some(w)
}

/// A square root in the field named by `tag`, if one exists.
pub fn field_sqrt(tag: FieldTag, z: &Gaussian) -> Option<Gaussian> {
    match tag {
        FieldTag::RealQ if is_real(z) => rational_sqrt(&z.re).map(real),
        FieldTag::RealQ => None,
        FieldTag::ComplexQi => gaussian_sqrt(z),
    }
}
