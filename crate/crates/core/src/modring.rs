//! Residue arithmetic modulo odd prime powers p^e with e <= 4.
//!
//! All products go through u128 intermediates, so every operation is exact
//! for any modulus below the 2^62 cap. Inverses use the extended Euclidean
//! algorithm (valid mod p^e, not just mod p); the Legendre symbol uses the
//! Euler criterion.

use crate::error::{Error, Result};

/// An odd prime power modulus p^e, e in 1..=4, p^e < 2^62.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePowerModulus {
    p: u64,
    e: u32,
    m: u64,
}

const MODULUS_CAP: u64 = 1 << 62;

impl PrimePowerModulus {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if p < 3 || p % 2 == 0 || !is_prime(p) {
            return Err(Error::NotOddPrime { p });
        }
        if !(1..=4).contains(&e) {
            return Err(Error::ExponentOutOfRange { e });
        }
        let mut m: u64 = 1;
        for _ in 0..e {
            m = m
                .checked_mul(p)
                .filter(|&m| m < MODULUS_CAP)
                .ok_or(Error::ModulusTooLarge { p, e })?;
        }
        Ok(Self { p, e, m })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Residue of an arbitrary signed integer.
    pub fn residue(&self, v: i64) -> Residue {
        let m = self.m as i128;
        let value = ((v as i128 % m) + m) % m;
        Residue {
            value: value as u64,
            modulus: *self,
        }
    }

    pub fn residue_u64(&self, v: u64) -> Residue {
        Residue {
            value: v % self.m,
            modulus: *self,
        }
    }

    pub fn zero(&self) -> Residue {
        self.residue_u64(0)
    }

    pub fn one(&self) -> Residue {
        self.residue_u64(1)
    }

    /// num / den reduced into this ring; fails when p divides den.
    pub fn residue_of_rational(&self, num: i64, den: i64) -> Result<Residue> {
        let d = self.residue(den);
        Ok(self.residue(num) * d.inv()?)
    }

    /// Same modulus with a lower exponent (used after exact division by p^k).
    pub(crate) fn lower(&self, drop: u32) -> PrimePowerModulus {
        let e = self.e - drop;
        debug_assert!(e >= 1);
        let mut m = 1u64;
        for _ in 0..e {
            m *= self.p;
        }
        PrimePowerModulus { p: self.p, e, m }
    }
}

/// An element of Z/p^e, canonical representative in [0, m).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: PrimePowerModulus,
}

impl Residue {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> PrimePowerModulus {
        self.modulus
    }

    /// Representative in (-m/2, m/2], convenient for printing small negatives.
    pub fn balanced(&self) -> i64 {
        let m = self.modulus.m;
        if self.value > m / 2 {
            self.value as i64 - m as i64
        } else {
            self.value as i64
        }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(&self, mut n: u64) -> Residue {
        let m = self.modulus.m;
        let mut base = self.value;
        let mut acc: u64 = 1 % m;
        while n > 0 {
            if n & 1 == 1 {
                acc = mul_raw(acc, base, m);
            }
            base = mul_raw(base, base, m);
            n >>= 1;
        }
        Residue {
            value: acc,
            modulus: self.modulus,
        }
    }

    pub fn inv(&self) -> Result<Residue> {
        let m = self.modulus.m;
        match inv_raw(self.value, m) {
            Some(value) => Ok(Residue {
                value,
                modulus: self.modulus,
            }),
            None => Err(Error::NotInvertible {
                value: self.value,
                modulus: m,
            }),
        }
    }

    fn check_same_modulus(&self, rhs: &Residue) {
        assert_eq!(
            self.modulus, rhs.modulus,
            "modulus mismatch: {} vs {}",
            self.modulus.m, rhs.modulus.m
        );
    }
}

impl std::ops::Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        self.check_same_modulus(&rhs);
        let mut value = self.value + rhs.value;
        if value >= self.modulus.m {
            value -= self.modulus.m;
        }
        Residue {
            value,
            modulus: self.modulus,
        }
    }
}

impl std::ops::Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        self.check_same_modulus(&rhs);
        let value = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + (self.modulus.m - rhs.value)
        };
        Residue {
            value,
            modulus: self.modulus,
        }
    }
}

impl std::ops::Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        self.check_same_modulus(&rhs);
        Residue {
            value: mul_raw(self.value, rhs.value, self.modulus.m),
            modulus: self.modulus,
        }
    }
}

impl std::ops::Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        let value = if self.value == 0 {
            0
        } else {
            self.modulus.m - self.value
        };
        Residue {
            value,
            modulus: self.modulus,
        }
    }
}

impl std::fmt::Display for Residue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus.m)
    }
}

#[inline]
pub(crate) fn mul_raw(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_raw(mut base: u64, mut n: u64, m: u64) -> u64 {
    base %= m;
    let mut acc: u64 = 1 % m;
    while n > 0 {
        if n & 1 == 1 {
            acc = mul_raw(acc, base, m);
        }
        base = mul_raw(base, base, m);
        n >>= 1;
    }
    acc
}

/// Extended Euclid; None when gcd(a, m) != 1.
pub(crate) fn inv_raw(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    let m = m as i128;
    Some((((old_s % m) + m) % m) as u64)
}

/// Legendre symbol (a/p) by the Euler criterion: a^((p-1)/2) mod p.
pub fn legendre(a: i64, p: u64) -> i32 {
    debug_assert!(p >= 3 && p % 2 == 1);
    let pm = p as i128;
    let a = (((a as i128 % pm) + pm) % pm) as u64;
    if a == 0 {
        return 0;
    }
    let t = pow_raw(a, (p - 1) / 2, p);
    if t == 1 {
        1
    } else {
        debug_assert_eq!(t, p - 1);
        -1
    }
}

/// Deterministic Miller-Rabin, valid for all u64.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'base: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_raw(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_raw(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u64, e: u32) -> PrimePowerModulus {
        PrimePowerModulus::new(p, e).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(PrimePowerModulus::new(3, 1).is_ok());
        assert_eq!(m(5, 3).m(), 125);
        assert_eq!(
            PrimePowerModulus::new(2, 1).unwrap_err(),
            Error::NotOddPrime { p: 2 }
        );
        assert_eq!(
            PrimePowerModulus::new(9, 1).unwrap_err(),
            Error::NotOddPrime { p: 9 }
        );
        assert_eq!(
            PrimePowerModulus::new(5, 0).unwrap_err(),
            Error::ExponentOutOfRange { e: 0 }
        );
        assert_eq!(
            PrimePowerModulus::new(5, 5).unwrap_err(),
            Error::ExponentOutOfRange { e: 5 }
        );
        // 2^61 < p^4 for p around 2^16
        assert_eq!(
            PrimePowerModulus::new(100003, 4).unwrap_err(),
            Error::ModulusTooLarge { p: 100003, e: 4 }
        );
    }

    #[test]
    fn add_examples() {
        let m5 = m(5, 1);
        assert_eq!((m5.residue(3) + m5.residue(4)).value(), 2);
        let m125 = m(5, 3);
        assert_eq!((m125.zero() + m125.zero()).value(), 0);
        assert_eq!((m125.residue(124) + m125.one()).value(), 0);
    }

    #[test]
    fn mul_examples() {
        let m25 = m(5, 2);
        assert_eq!((m25.residue(13) * m25.residue(13)).value(), 19);
        let m49 = m(7, 2);
        assert_eq!((m49.one() * m49.residue(37)).value(), 37);
        assert_eq!((m49.residue(48) * m49.residue(48)).value(), 1);
    }

    #[test]
    fn pow_examples() {
        assert_eq!(m(5, 2).residue(2).pow(4).value(), 16);
        assert_eq!(m(7, 2).residue(2).pow(6).value(), 15);
        assert_eq!(m(7, 2).residue(0).pow(0).value(), 1);
    }

    #[test]
    fn pow_matches_iterated_product() {
        let m49 = m(7, 2);
        let a = m49.residue(24);
        let mut acc = m49.one();
        for n in 0..=64u64 {
            assert_eq!(a.pow(n), acc, "n = {n}");
            acc = acc * a;
        }
    }

    #[test]
    fn inv_examples() {
        let m5 = m(5, 1);
        assert_eq!(m5.residue(2).inv().unwrap().value(), 3);
        let m125 = m(5, 3);
        assert_eq!(m125.residue(18).inv().unwrap().value(), 7);
        let m25 = m(5, 2);
        assert_eq!(
            m25.residue(5).inv().unwrap_err(),
            Error::NotInvertible {
                value: 5,
                modulus: 25
            }
        );
    }

    #[test]
    fn every_unit_has_an_inverse() {
        for (p, e) in [(3u64, 4u32), (5, 3), (7, 2), (97, 1)] {
            let md = m(p, e);
            for v in 1..md.m() {
                let r = md.residue_u64(v);
                if v % p == 0 {
                    assert!(r.inv().is_err());
                } else {
                    assert_eq!((r * r.inv().unwrap()).value(), 1, "p={p} e={e} v={v}");
                }
            }
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(-1, 5), 1);
        assert_eq!(legendre(2, 5), -1);
        assert_eq!(legendre(3, 5), -1);
        assert_eq!(legendre(10, 5), 0);
    }

    #[test]
    fn legendre_is_multiplicative() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
            79, 83, 89, 97]
        {
            for a in 1..p {
                for b in 1..p {
                    assert_eq!(
                        legendre((a * b) as i64, p),
                        legendre(a as i64, p) * legendre(b as i64, p),
                        "p={p} a={a} b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn legendre_counts_squares() {
        for p in [3u64, 5, 7, 11, 13, 97] {
            let plus: i64 = (1..p).map(|a| (legendre(a as i64, p) == 1) as i64).sum();
            let minus: i64 = (1..p).map(|a| (legendre(a as i64, p) == -1) as i64).sum();
            assert_eq!(plus as u64, (p - 1) / 2);
            assert_eq!(minus as u64, (p - 1) / 2);
        }
    }

    #[test]
    fn residue_of_rational_examples() {
        assert_eq!(m(5, 2).residue_of_rational(1, 2).unwrap().value(), 13);
        assert_eq!(m(7, 1).residue_of_rational(-1, 4).unwrap().value(), 5);
        assert!(matches!(
            m(5, 1).residue_of_rational(1, 5),
            Err(Error::NotInvertible { .. })
        ));
    }

    #[test]
    #[should_panic(expected = "modulus mismatch")]
    fn mixed_moduli_panic() {
        let _ = m(5, 1).one() + m(7, 1).one();
    }

    #[test]
    fn balanced_representative() {
        let m7 = m(7, 1);
        assert_eq!(m7.residue(-2).balanced(), -2);
        assert_eq!(m7.residue(3).balanced(), 3);
    }

    #[test]
    fn primality_helper() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(1_000_003));
        assert!(!is_prime(1));
        assert!(!is_prime(1_000_001)); // 101 * 9901
    }
}
