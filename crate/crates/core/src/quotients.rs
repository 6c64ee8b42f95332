//! p-divided quantities: values provably divisible by p are computed one
//! power higher than the target modulus, the divisibility is asserted, and
//! the exact quotient is returned in the smaller ring.
//!
//! Every "divide by p" in the codebase funnels through [`p_divide`], so a
//! false divisibility claim always surfaces as a loud `NotDivisible` error.

use crate::error::{Error, Result};
use crate::modring::{legendre, PrimePowerModulus, Residue};
use crate::sequences::{binary_recurrence_prefix, quadring_prefix, SequenceKind};

/// A residue together with an asserted power of p dividing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LiftedValue {
    value: Residue,
    divisibility: u32,
}

impl LiftedValue {
    /// Wraps `value`, checking that p^divisibility really divides its
    /// canonical representative.
    pub fn new(value: Residue, divisibility: u32) -> Result<Self> {
        let modulus = value.modulus();
        let pk = modulus.p().pow(divisibility);
        if value.value() % pk != 0 {
            return Err(Error::NotDivisible {
                value: value.value(),
                p: modulus.p(),
                k: divisibility,
                modulus: modulus.m(),
            });
        }
        Ok(LiftedValue { value, divisibility })
    }

    pub fn value(&self) -> Residue {
        self.value
    }

    pub fn divisibility(&self) -> u32 {
        self.divisibility
    }

    /// The exact quotient value / p^divisibility in the correspondingly
    /// smaller ring.
    pub fn divided(&self) -> Result<Residue> {
        p_divide(self.value, self.divisibility)
    }
}

/// Divides the canonical representative of `v` (mod p^e) by p^k exactly,
/// returning the quotient mod p^(e-k).
pub fn p_divide(v: Residue, k: u32) -> Result<Residue> {
    let modulus = v.modulus();
    let p = modulus.p();
    if k >= modulus.e() {
        return Err(Error::ExponentOutOfRange {
            e: modulus.e().saturating_sub(k),
        });
    }
    let pk = p.pow(k);
    if v.value() % pk != 0 {
        return Err(Error::NotDivisible {
            value: v.value(),
            p,
            k,
            modulus: modulus.m(),
        });
    }
    let lowered = modulus.lower(k);
    Ok(lowered.residue_u64(v.value() / pk))
}

/// Fermat quotient (2^(p-1) - 1)/p as a residue mod p^e, computed one power
/// higher so the division is exact.
pub fn fermat_quotient_2_mod(p: u64, e: u32) -> Result<Residue> {
    let wide = PrimePowerModulus::new(p, e + 1)?;
    let v = wide.residue_u64(2).pow(p - 1) - wide.one();
    p_divide(v, 1)
}

/// Fermat quotient (2^(p-1) - 1)/p mod p.
pub fn fermat_quotient_2(p: u64) -> Result<Residue> {
    fermat_quotient_2_mod(p, 1)
}

/// (b - b^p)/p mod p for a base b not divisible by p; exact by Fermat's
/// little theorem.
pub fn power_difference_quotient(base: u64, p: u64) -> Result<Residue> {
    let wide = PrimePowerModulus::new(p, 2)?;
    let v = wide.residue_u64(base) - wide.residue_u64(base).pow(p);
    p_divide(v, 1)
}

/// (A_p(x) + 2)/p mod p, where A_n(x) = (-1+sqrt(-x))^n + (-1-sqrt(-x))^n.
/// `x` must be given mod p^2 (any lift of the intended residue class works;
/// the quotient mod p depends only on x mod p).
pub fn rhs_eq13(x: Residue) -> Result<Residue> {
    let modulus = x.modulus();
    assert_eq!(modulus.e(), 2, "evaluation point must be lifted mod p^2");
    let p = modulus.p();
    let table = quadring_prefix(x, p as usize, modulus);
    let v = table.value(p as usize) + modulus.residue_u64(2);
    p_divide(v, 1)
}

/// P_(p - (2/p)) / p mod p, where P is the Pell sequence; the index is p
/// minus the Legendre symbol, so a negative symbol means index p + 1.
pub fn pell_quotient(p: u64) -> Result<Residue> {
    let wide = PrimePowerModulus::new(p, 2)?;
    let idx = (p as i64 - legendre(2, p) as i64) as usize;
    let table = binary_recurrence_prefix(SequenceKind::Pell, idx, wide)?;
    p_divide(table.value(idx), 1)
}

/// F_(p - (p/5)) / p mod p, where F is the Fibonacci sequence and (p/5) is
/// the Legendre symbol of p modulo 5. Undefined at p = 5.
pub fn fibonacci_quotient(p: u64) -> Result<Residue> {
    if p == 5 {
        return Err(Error::NotApplicable {
            check: "fibonacci-quotient".into(),
            p,
        });
    }
    let wide = PrimePowerModulus::new(p, 2)?;
    let idx = (p as i64 - legendre(p as i64, 5) as i64) as usize;
    let table = binary_recurrence_prefix(SequenceKind::Fibonacci, idx, wide)?;
    p_divide(table.value(idx), 1)
}

/// 2(L_p - 1) mod p^2, where L is the Lucas sequence. Not itself p-divided;
/// it feeds the identity 2(L_p - 1) = 5 F_(p - (p/5)) mod p^2.
pub fn lucas_term(p: u64) -> Result<Residue> {
    if p == 5 {
        return Err(Error::NotApplicable {
            check: "lucas-term".into(),
            p,
        });
    }
    let wide = PrimePowerModulus::new(p, 2)?;
    let table = binary_recurrence_prefix(SequenceKind::Lucas, p as usize, wide)?;
    let one = wide.one();
    Ok((table.value(p as usize) - one) * wide.residue_u64(2))
}
