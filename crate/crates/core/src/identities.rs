//! Exact (non-congruence) identities, verified over arbitrary-precision
//! rationals and integers. These certify the combinatorial inputs the
//! congruence checks lean on, with no modular reduction anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::oracle;

fn ratio(num: BigInt, den: BigInt) -> BigRational {
    // BigRational normalizes sign and reduces to lowest terms on new()
    BigRational::new(num, den)
}

/// Alternating rational sums over r of C(2n,r)/(2n+1-2r)^s for s = 1, 2,
/// against their closed forms (-16)^n / ((2n+1)^s C(2n,n)), plus the
/// equivalent symmetric form obtained by substituting k = n - r.
pub fn lemma31_check(n: u64) -> bool {
    let two_n = 2 * n;
    let center = oracle::binomial(two_n, n);
    let minus_sixteen_pow = oracle::big(-16).pow(n as u32);
    let odd = oracle::big(2 * n as i64 + 1);

    let mut sum1 = BigRational::zero();
    let mut sum2 = BigRational::zero();
    for r in 0..=two_n {
        let mut c = oracle::binomial(two_n, r);
        if r % 2 == 1 {
            c = -c;
        }
        let den = oracle::big(2 * n as i64 + 1 - 2 * r as i64);
        sum1 += ratio(c.clone(), den.clone());
        sum2 += ratio(c, &den * &den);
    }
    let rhs1 = ratio(minus_sixteen_pow.clone(), &odd * &center);
    let rhs2 = ratio(minus_sixteen_pow, &odd * &odd * &center);
    if sum1 != rhs1 || sum2 != rhs2 {
        return false;
    }

    // symmetric form: sum over k in [-n, n] of (-1)^k C(2n, n-k)/(2k+1)^s
    // equals 16^n / ((2n+1)^s C(2n,n))
    let sixteen_pow = oracle::big(16).pow(n as u32);
    let mut sym1 = BigRational::zero();
    let mut sym2 = BigRational::zero();
    for k in -(n as i64)..=n as i64 {
        let mut c = oracle::binomial(two_n, (n as i64 - k) as u64);
        if k.rem_euclid(2) == 1 {
            c = -c;
        }
        let den = oracle::big(2 * k + 1);
        sym1 += ratio(c.clone(), den.clone());
        sym2 += ratio(c, &den * &den);
    }
    let odd_sq = &odd * &odd;
    sym1 == ratio(sixteen_pow.clone(), &odd * &center)
        && sym2 == ratio(sixteen_pow, odd_sq * &center)
}

/// Non-alternating counterpart: sum over r of C(2n,r)/(2n+1-2r) = 4^n/(2n+1).
pub fn remark31_identity_check(n: u64) -> bool {
    let two_n = 2 * n;
    let mut sum = BigRational::zero();
    for r in 0..=two_n {
        sum += ratio(
            oracle::binomial(two_n, r),
            oracle::big(2 * n as i64 + 1 - 2 * r as i64),
        );
    }
    sum == ratio(oracle::big(4).pow(n as u32), oracle::big(2 * n as i64 + 1))
}

/// (-1)^n D_n(x) = D_n(-x-1) at every sample point, for all n <= n_max,
/// over exact integers. Agreement at n_max+1 distinct points pins the
/// degree-n polynomial identity.
pub fn remark12_symmetry_check(n_max: u64, x_samples: &[i64]) -> bool {
    for &x in x_samples {
        let xb = oracle::big(x);
        let reflected = oracle::big(-x - 1);
        for n in 0..=n_max {
            let mut lhs = oracle::delannoy_poly(n, &xb);
            if n % 2 == 1 {
                lhs = -lhs;
            }
            if lhs != oracle::delannoy_poly(n, &reflected) {
                return false;
            }
        }
    }
    true
}

/// The sample set used by the default symmetry run: 2*half+1 consecutive
/// integers centered at zero.
pub fn symmetric_sample_points(half: i64) -> Vec<i64> {
    (-half..=half).collect()
}
