//! Exact rational parsing and formatting.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Accepts integers (`-2`), ratios (`3/2`) and plain decimals (`1.25`).
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::InvalidRational(text.to_string());
    let s = text.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.starts_with('-');
        let digits = int.trim_start_matches(['-', '+']);
        if frac.is_empty() && digits.is_empty()
            || !frac.bytes().all(|b| b.is_ascii_digit())
            || !digits.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(bad());
        }
        let whole: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| bad())?
        };
        let numer: BigInt = if frac.is_empty() {
            BigInt::zero()
        } else {
            frac.parse().map_err(|_| bad())?
        };
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        let value = BigRational::from_integer(whole) + BigRational::new(numer, denom);
        return Ok(if negative { -value } else { value });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// `p/q` in lowest terms, or just `p` for integers.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
