//! Exact rational scalars and the canonical scaling of rational vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `2^e` as a rational; negative exponents give `1/2^|e|`.
pub fn pow2(e: i64) -> Rational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// `(-1)^k`
pub fn sign_pow(k: u32) -> Rational {
    if k % 2 == 0 {
        one()
    } else {
        -one()
    }
}

/// Formats as `"n"` or `"p/q"`.
pub fn format(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(zero(), |acc, (x, y)| acc + x * y)
}

/// The positive factor that turns `v` into a primitive integer vector.
/// Returns `None` for the zero vector.
pub fn primitive_scale(v: &[Rational]) -> Option<Rational> {
    let mut lcm = BigInt::one();
    let mut any = false;
    for x in v.iter().filter(|x| !x.is_zero()) {
        lcm = lcm.lcm(x.denom());
        any = true;
    }
    if !any {
        return None;
    }
    let mut g = BigInt::zero();
    for x in v.iter().filter(|x| !x.is_zero()) {
        let n = (x.numer() * &lcm) / x.denom();
        g = g.gcd(&n);
    }
    Some(Rational::new(lcm, g.abs()))
}

pub fn scale(v: &[Rational], s: &Rational) -> Vec<Rational> {
    v.iter().map(|x| x * s).collect()
}

pub fn is_integral(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_integer())
}

pub fn to_bigint(q: &Rational) -> Option<BigInt> {
    q.is_integer().then(|| q.numer().clone())
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-5/6"] {
            assert_eq!(format(&parse(s).unwrap()), s);
        }
        assert_eq!(format(&parse("4/2").unwrap()), "2");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn primitive_scale_clears_denominators_and_content() {
        let v = vec![frac(1, 2), frac(-3, 2), zero()];
        let s = primitive_scale(&v).unwrap();
        assert_eq!(scale(&v, &s), vec![int(1), int(-3), int(0)]);
        let w = vec![int(4), int(6)];
        assert_eq!(scale(&w, &primitive_scale(&w).unwrap()), vec![int(2), int(3)]);
        assert!(primitive_scale(&[zero(), zero()]).is_none());
    }

    #[test]
    fn powers() {
        assert_eq!(pow2(3), int(8));
        assert_eq!(pow2(-1), frac(1, 2));
        assert_eq!(sign_pow(3), int(-1));
    }
}
