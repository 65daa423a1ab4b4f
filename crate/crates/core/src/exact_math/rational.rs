use num_bigint::{BigInt, BigUint, Sign};
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `re + i*im` with exact rational parts.
pub type GaussianRational = Complex<Rational>;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn gaussian(re: Rational, im: Rational) -> GaussianRational {
    Complex::new(re, im)
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    BigInt::from(acc)
}

/// `"num/den"`, with the denominator omitted when it is 1.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let parsed = match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
            let d: BigInt = d
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(
            t.parse()
                .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?,
        ),
    };
    Ok(parsed)
}

/// Floating-point shadow of an exact value. Display and sanity checks only.
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // numerator or denominator too large for f64: scale both down first
        let shift = x.numer().bits().max(x.denom().bits()).saturating_sub(1000);
        let n = (x.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (x.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Decimal rendering with `precision` fractional digits, rounded half away from zero.
pub fn to_decimal_string(x: &Rational, precision: usize) -> String {
    let scale = BigInt::from(10u32).pow(precision as u32);
    let scaled = x.abs() * Rational::from_integer(scale.clone());
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let rounded = if r * 2u32 >= *scaled.denom() { q + 1u32 } else { q };
    let digits = rounded.to_string();
    let negative = x.is_negative() && !rounded.is_zero();
    let body = if precision == 0 {
        digits
    } else {
        let padded = format!("{digits:0>width$}", width = precision + 1);
        let (whole, frac) = padded.split_at(padded.len() - precision);
        format!("{whole}.{frac}")
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Sign of `x` as -1, 0 or 1.
pub fn rational_sign(x: &Rational) -> i8 {
    match x.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let x = rat(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(format_rational(&x), "-3/2");
        assert_eq!(format_rational(&int(1)), "1");
    }

    #[test]
    fn parse_accepts_both_forms() {
        assert_eq!(parse_rational("1/6").unwrap(), rat(1, 6));
        assert_eq!(parse_rational("-4/8").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(10, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal_string(&rat(1, 4), 2), "0.25");
        assert_eq!(to_decimal_string(&rat(1, 6), 4), "0.1667");
        assert_eq!(to_decimal_string(&rat(-1, 8), 2), "-0.13");
        assert_eq!(to_decimal_string(&rat(-1, 1000), 2), "0.00");
        assert_eq!(to_decimal_string(&rat(5, 2), 0), "3");
        assert_eq!(to_decimal_string(&int(12), 1), "12.0");
    }

    #[test]
    fn float_shadow() {
        assert_eq!(to_f64(&rat(1, 4)), 0.25);
        let huge = Rational::new(BigInt::from(3) << 3000usize, BigInt::from(2) << 3000usize);
        assert!((to_f64(&huge) - 1.5).abs() < 1e-12);
    }
}
