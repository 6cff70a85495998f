use crate::error::{Error, Result};

/// Residue of the prime field, always in `[0, p)`.
pub type Coeff = u32;

/// The prime field F_p with `2 <= p < 2^16`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1 << 16).contains(&p) {
            if p >= 2 && !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p: p as u32 })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, v: u64) -> Coeff {
        (v % self.p as u64) as Coeff
    }

    pub fn reduce_signed(&self, v: i64) -> Coeff {
        v.rem_euclid(self.p as i64) as Coeff
    }

    #[inline]
    pub fn add(&self, a: Coeff, b: Coeff) -> Coeff {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: Coeff, b: Coeff) -> Coeff {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: Coeff) -> Coeff {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: Coeff, b: Coeff) -> Coeff {
        ((a as u64 * b as u64) % self.p as u64) as Coeff
    }

    pub fn pow(&self, mut base: Coeff, mut exp: u64) -> Coeff {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue (Fermat).
    pub fn inv(&self, a: Coeff) -> Coeff {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    /// Returns `e` with `q = p^e`, or an error if `q` is not a power of `p`.
    pub fn log_q(&self, q: u64) -> Result<u32> {
        let p = self.p as u64;
        let mut e = 0;
        let mut t = q;
        if t == 0 {
            return Err(Error::NotPowerOfP { q, p });
        }
        while t.is_multiple_of(p) {
            t /= p;
            e += 1;
        }
        if t != 1 {
            return Err(Error::NotPowerOfP { q, p });
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_range() {
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeField::new(1), Err(Error::ModulusOutOfRange(1)));
        assert_eq!(PrimeField::new(65537), Err(Error::ModulusOutOfRange(65537)));
        assert!(PrimeField::new(65521).is_ok());
    }

    #[test]
    fn inverses() {
        let f = PrimeField::new(65521).unwrap();
        for a in [1u32, 2, 3, 65520, 12345] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.sub(1, 3), 3);
        assert_eq!(f.reduce_signed(-1), 4);
    }

    #[test]
    fn log_q() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(f.log_q(1), Ok(0));
        assert_eq!(f.log_q(27), Ok(3));
        assert!(f.log_q(6).is_err());
        assert!(f.log_q(0).is_err());
    }
}
