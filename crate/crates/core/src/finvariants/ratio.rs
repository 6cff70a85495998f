use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Exact non-negative fraction in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: BigUint,
    den: BigUint,
}

impl Fraction {
    pub fn new(num: impl Into<BigUint>, den: impl Into<BigUint>) -> Self {
        let (num, den) = (num.into(), den.into());
        assert!(!den.is_zero(), "zero denominator");
        let g = num.gcd(&den);
        if g.is_zero() || g.is_one() {
            return Self { num, den };
        }
        Self {
            num: num / &g,
            den: den / g,
        }
    }

    /// `a / base^k`.
    pub fn over_power(a: u64, base: u64, k: u32) -> Self {
        Self::new(BigUint::from(a), BigUint::from(base).pow(k))
    }

    pub fn numer(&self) -> &BigUint {
        &self.num
    }

    pub fn denom(&self) -> &BigUint {
        &self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Six-place decimal, rounded half up.
    pub fn decimal(&self) -> String {
        let scale = BigUint::from(1_000_000u32);
        let scaled = (&self.num * &scale * 2u32 + &self.den) / (&self.den * 2u32);
        let (int, frac) = scaled.div_rem(&scale);
        format!("{int}.{:06}", frac.to_u64_digits().first().copied().unwrap_or(0))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Fraction", 3)?;
        st.serialize_field("num", &self.num.to_string())?;
        st.serialize_field("den", &self.den.to_string())?;
        st.serialize_field("decimal", &self.decimal())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_renders() {
        let f = Fraction::new(6u32, 4u32);
        assert_eq!(f.to_string(), "3/2");
        assert_eq!(f.decimal(), "1.500000");
        assert_eq!(Fraction::new(5u32, 3u32).decimal(), "1.666667");
        assert_eq!(Fraction::over_power(81, 9, 2).to_string(), "1");
        assert_eq!(Fraction::new(0u32, 7u32).to_string(), "0");
        assert!(Fraction::new(1u32, 3u32) < Fraction::new(1u32, 2u32));
    }
}
