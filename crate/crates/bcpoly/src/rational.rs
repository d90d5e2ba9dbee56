//! Small helpers around `num_rational::BigRational`, which is the coefficient
//! field everywhere in this crate.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = num_rational::BigRational;

/// The rational `n/d`. Panics if `d == 0`; intended for literals in code.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parse `"p/q"` or `"p"` (optionally signed) into a rational.
pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    let bad = || Error::MalformedRational(s.to_string());
    // `BigInt::from_str` tolerates `_` separators; an integer part must be a
    // plain optionally-signed digit string here.
    let int = |part: &str| -> Result<BigInt> {
        let digits = part.strip_prefix(['-', '+']).unwrap_or(part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        part.parse().map_err(|_| bad())
    };
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let n = int(num)?;
    let d = match den {
        Some(d) => int(d)?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

/// Format a rational as `p/q`, or `p` when the denominator is one.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Rising factorial `x (x+1) ... (x+k-1)`; the empty product for `k == 0`.
pub fn rising(x: &Q, k: usize) -> Q {
    let mut acc = Q::one();
    let mut t = x.clone();
    for _ in 0..k {
        acc *= &t;
        t += Q::one();
    }
    acc
}

/// Binomial coefficient `C(n, k)` as a rational.
pub fn binom(n: usize, k: usize) -> Q {
    if k > n {
        return Q::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k.min(n - k) {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Q::new(num, den)
}

/// `x^k` for a usize exponent.
pub fn pow_q(x: &Q, k: usize) -> Q {
    let mut acc = Q::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

/// Nearest `f64` below/at the rational (via big-integer conversion).
pub fn q_to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of truncated floats for pathological sizes.
        let n = x.numer().to_f64().unwrap_or(f64::MAX * x.numer().signum().to_f64().unwrap());
        let d = x.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// True when the rational is a (nonnegative) integer.
pub fn is_nonneg_int(x: &Q) -> bool {
    x.denom().is_one() && !x.numer().is_negative()
}

/// The rational as `usize` if it is a small nonnegative integer.
pub fn as_usize(x: &Q) -> Option<usize> {
    if x.denom().is_one() {
        x.numer().to_usize()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-7/2", "5", "0", "-12"] {
            let v = parse_q(s).unwrap();
            assert_eq!(fmt_q(&v), s);
        }
        assert_eq!(parse_q("6/4").unwrap(), q(3, 2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
        assert!(parse_q("1.5").is_err());
        assert!(parse_q("1_2").is_err());
        assert!(parse_q("1/2/3").is_err());
        assert!(parse_q("").is_err());
    }

    #[test]
    fn rising_factorial_matches_gamma_ratio_on_integers() {
        // rising(3, 4) = 3*4*5*6 = Γ(7)/Γ(3)
        assert_eq!(rising(&qi(3), 4), qi(360));
        assert_eq!(rising(&q(1, 2), 2), q(3, 4));
        assert_eq!(rising(&qi(5), 0), qi(1));
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(6, 2), qi(15));
        assert_eq!(binom(4, 0), qi(1));
        assert_eq!(binom(3, 5), qi(0));
    }
}
