//! Exact big-integer reference computations.
//!
//! Everything here evaluates defining sums and recursions over arbitrary
//! precision integers or rationals, with no modular shortcuts. The modular
//! engines in [`crate::sequences`] are validated against these values; keep
//! this module free of any code path shared with them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Binomial coefficient C(n, k) with C(n, k) = 0 for k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * big((n - i) as i64) / big((i + 1) as i64);
    }
    acc
}

/// Central Delannoy number via the first closed form sum of C(n,k)*C(n+k,k).
pub fn delannoy(n: u64) -> BigInt {
    (0..=n).map(|k| binomial(n, k) * binomial(n + k, k)).sum()
}

/// Central Delannoy number via the second closed form sum of C(n+k,2k)*C(2k,k).
pub fn delannoy_alt(n: u64) -> BigInt {
    (0..=n)
        .map(|k| binomial(n + k, 2 * k) * binomial(2 * k, k))
        .sum()
}

/// Delannoy polynomial D_n(x) = sum of C(n,k)*C(n+k,k)*x^k at an exact point.
pub fn delannoy_poly(n: u64, x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    let mut xp = BigInt::one();
    for k in 0..=n {
        acc += binomial(n, k) * binomial(n + k, k) * &xp;
        xp *= x;
    }
    acc
}

/// Catalan number C(2k,k)/(k+1), by exact division.
pub fn catalan(k: u64) -> BigInt {
    binomial(2 * k, k) / big((k + 1) as i64)
}

/// Large Schroeder number via the closed form sum of C(n+k,2k)*C_k.
pub fn schroeder(n: u64) -> BigInt {
    (0..=n)
        .map(|k| binomial(n + k, 2 * k) * catalan(k))
        .sum()
}

/// Large Schroeder number via the first closed form
/// sum of C(n,k)*C(n+k,k)/(k+1), evaluated over exact rationals.
/// Panics if the sum fails to be an integer.
pub fn schroeder_alt(n: u64) -> BigInt {
    let sum: BigRational = (0..=n)
        .map(|k| {
            BigRational::new(binomial(n, k) * binomial(n + k, k), big((k + 1) as i64))
        })
        .sum();
    assert!(sum.is_integer(), "Schroeder sum must be integral");
    sum.to_integer()
}

/// s_n = sum of C(n+k,2k)*C(2k,k+1), the direct form of D_n - S_n.
pub fn s_small(n: u64) -> BigInt {
    (0..=n)
        .map(|k| binomial(n + k, 2 * k) * binomial(2 * k, k + 1))
        .sum()
}

/// Euler numbers E_0..E_n from E_0 = 1 and
/// sum over even k of C(n,k)*E_{n-k} = 0.
pub fn euler_numbers(n_max: u64) -> Vec<BigInt> {
    let mut e = vec![BigInt::one()];
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        for k in (2..=n).step_by(2) {
            acc += binomial(n, k) * &e[(n - k) as usize];
        }
        e.push(-acc);
    }
    e
}

/// Bernoulli numbers B_0..B_n from B_n = -1/(n+1) * sum_{j<n} C(n+1,j)*B_j.
pub fn bernoulli_numbers(n_max: u64) -> Vec<BigRational> {
    let mut b = vec![BigRational::one()];
    for n in 1..=n_max {
        let mut acc = BigRational::zero();
        for j in 0..n {
            acc += BigRational::from_integer(binomial(n + 1, j)) * &b[j as usize];
        }
        b.push(-acc / BigRational::from_integer(big((n + 1) as i64)));
    }
    b
}

fn linear_recurrence(a0: i64, a1: i64, c1: i64, c0: i64, n_max: u64) -> Vec<BigInt> {
    let mut v = vec![big(a0), big(a1)];
    for n in 1..n_max as usize {
        let next = big(c1) * &v[n] + big(c0) * &v[n - 1];
        v.push(next);
    }
    v.truncate(n_max as usize + 1);
    v
}

pub fn pell(n_max: u64) -> Vec<BigInt> {
    linear_recurrence(0, 1, 2, 1, n_max.max(1))
}

pub fn pell_companion(n_max: u64) -> Vec<BigInt> {
    linear_recurrence(2, 2, 2, 1, n_max.max(1))
}

pub fn fibonacci(n_max: u64) -> Vec<BigInt> {
    linear_recurrence(0, 1, 1, 1, n_max.max(1))
}

pub fn lucas(n_max: u64) -> Vec<BigInt> {
    linear_recurrence(2, 1, 1, 1, n_max.max(1))
}

/// A_n = (-1 + sqrt(-x))^n + (-1 - sqrt(-x))^n as a polynomial in x,
/// expanded symbolically: write (-1 + s)^n = u_n(x) + v_n(x)*s with s^2 = -x,
/// then A_n = 2*u_n. Coefficient vectors are indexed by the power of x.
pub fn quadring_polynomials(n_max: u64) -> Vec<Vec<BigInt>> {
    let mut u = vec![BigInt::one()];
    let mut v: Vec<BigInt> = vec![];
    let mut out = vec![vec![big(2)]];
    for _ in 1..=n_max {
        // (u + v s)(-1 + s) = (-u - x v) + (u - v) s
        let mut nu: Vec<BigInt> = vec![BigInt::zero(); u.len().max(v.len() + 1)];
        for (i, c) in u.iter().enumerate() {
            nu[i] -= c;
        }
        for (i, c) in v.iter().enumerate() {
            nu[i + 1] -= c; // times x
        }
        let mut nv: Vec<BigInt> = vec![BigInt::zero(); u.len().max(v.len())];
        for (i, c) in u.iter().enumerate() {
            nv[i] += c;
        }
        for (i, c) in v.iter().enumerate() {
            nv[i] -= c;
        }
        u = nu;
        v = nv;
        out.push(u.iter().map(|c| c * 2).collect());
    }
    for poly in &mut out {
        while poly.len() > 1 && poly.last().unwrap().is_zero() {
            poly.pop();
        }
    }
    out
}

/// Evaluate a coefficient vector at an exact integer point.
pub fn eval_poly(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Residue of an exact integer in [0, m).
pub fn reduce(v: &BigInt, m: u64) -> u64 {
    let m = BigInt::from(m);
    let mut r = v % &m;
    if r.is_negative() {
        r += &m;
    }
    let (_, digits) = r.to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => digits[0],
        _ => unreachable!("residue exceeds u64"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_values_match_the_literature() {
        let d: Vec<i64> = (0..6).map(|n| delannoy(n).try_into().unwrap()).collect();
        assert_eq!(d, [1, 3, 13, 63, 321, 1683]);
        let s: Vec<i64> = (0..6).map(|n| schroeder(n).try_into().unwrap()).collect();
        assert_eq!(s, [1, 2, 6, 22, 90, 394]);
        let c: Vec<i64> = (0..6).map(|n| catalan(n).try_into().unwrap()).collect();
        assert_eq!(c, [1, 1, 2, 5, 14, 42]);
    }

    #[test]
    fn closed_forms_agree() {
        for n in 0..=60 {
            assert_eq!(delannoy(n), delannoy_alt(n), "D_{n}");
            assert_eq!(schroeder(n), schroeder_alt(n), "S_{n}");
        }
    }

    #[test]
    fn catalan_difference_identity() {
        for k in 0..=40 {
            assert_eq!(catalan(k), binomial(2 * k, k) - binomial(2 * k, k + 1));
        }
    }

    #[test]
    fn s_small_is_delannoy_minus_schroeder() {
        for n in 0..=40 {
            assert_eq!(s_small(n), delannoy(n) - schroeder(n));
        }
        let s: Vec<i64> = (1..5).map(|n| s_small(n).try_into().unwrap()).collect();
        assert_eq!(s, [1, 7, 41, 231]);
    }

    #[test]
    fn euler_numbers_small() {
        let e = euler_numbers(6);
        let got: Vec<i64> = e.iter().map(|v| v.try_into().unwrap()).collect();
        assert_eq!(got, [1, 0, -1, 0, 5, 0, -61]);
    }

    #[test]
    fn bernoulli_small() {
        let b = bernoulli_numbers(4);
        assert_eq!(b[0], BigRational::from_integer(big(1)));
        assert_eq!(b[1], BigRational::new(big(-1), big(2)));
        assert_eq!(b[2], BigRational::new(big(1), big(6)));
        assert_eq!(b[3], BigRational::zero());
        assert_eq!(b[4], BigRational::new(big(-1), big(30)));
    }

    #[test]
    fn binary_recurrences_small() {
        let p: Vec<i64> = pell(6).iter().map(|v| v.try_into().unwrap()).collect();
        assert_eq!(p, [0, 1, 2, 5, 12, 29, 70]);
        let q: Vec<i64> = pell_companion(5)
            .iter()
            .map(|v| v.try_into().unwrap())
            .collect();
        assert_eq!(q, [2, 2, 6, 14, 34, 82]);
        let f: Vec<i64> = fibonacci(10).iter().map(|v| v.try_into().unwrap()).collect();
        assert_eq!(f, [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]);
        let l: Vec<i64> = lucas(7).iter().map(|v| v.try_into().unwrap()).collect();
        assert_eq!(l, [2, 1, 3, 4, 7, 11, 18, 29]);
    }

    #[test]
    fn quadring_expansion_small_cases() {
        let a = quadring_polynomials(3);
        // A_0 = 2, A_1 = -2, A_2 = 2 - 2x, A_3 = -2 + 6x
        assert_eq!(a[0], vec![big(2)]);
        assert_eq!(a[1], vec![big(-2)]);
        assert_eq!(a[2], vec![big(2), big(-2)]);
        assert_eq!(a[3], vec![big(-2), big(6)]);
        // x = -4 gives roots 1 and -3, so A_n = 1 + (-3)^n
        for (n, poly) in quadring_polynomials(8).iter().enumerate() {
            assert_eq!(
                eval_poly(poly, &big(-4)),
                big(1) + big(-3).pow(n as u32),
                "A_{n}(-4)"
            );
        }
    }

    #[test]
    fn reduce_handles_negatives() {
        assert_eq!(reduce(&big(-7), 5), 3);
        assert_eq!(reduce(&big(0), 5), 0);
        assert_eq!(reduce(&(big(10).pow(30)), 97), {
            // 10^30 mod 97 computed independently via modular exponentiation
            let mut acc: u64 = 1;
            for _ in 0..30 {
                acc = acc * 10 % 97;
            }
            acc
        });
    }
}
