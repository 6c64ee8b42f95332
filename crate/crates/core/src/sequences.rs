//! Prefix tables of every sequence the congruence registry consumes, reduced
//! mod p^e.
//!
//! Delannoy tables come from two independent engines. The DP engine is
//! division free (Delannoy square, Pascal rows, prefix sums) and works for
//! any modulus; it is the in-process authority. The holonomic engine runs the
//! three-term recurrence with division by n+1 and is the O(n) fast path,
//! always cross-checkable against DP. Schroeder and Catalan use division-free
//! convolutions only.

use crate::error::{Error, Result};
use crate::modring::{inv_raw, mul_raw, PrimePowerModulus, Residue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Engine {
    Dp,
    Holonomic,
}

impl Engine {
    pub fn as_str(&self) -> &'static str {
        match self {
            Engine::Dp => "dp",
            Engine::Holonomic => "holonomic",
        }
    }
}

impl std::fmt::Display for Engine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which sequence a table holds. The two parameterised kinds carry their
/// evaluation point as a residue in the table's ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceKind {
    Delannoy,
    DelannoyX(Residue),
    Schroeder,
    Catalan,
    SSmall,
    EulerNumber,
    Bernoulli,
    Pell,
    PellCompanion,
    Fibonacci,
    Lucas,
    QuadringA(Residue),
}

/// Values 0..=n_max of one sequence mod p^e, tagged with the producing engine.
#[derive(Debug, Clone)]
pub struct SequenceTable {
    kind: SequenceKind,
    modulus: PrimePowerModulus,
    engine: Engine,
    values: Vec<u64>,
}

impl SequenceTable {
    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn modulus(&self) -> PrimePowerModulus {
        self.modulus
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn raw(&self, n: usize) -> u64 {
        self.values[n]
    }

    pub fn value(&self, n: usize) -> Residue {
        self.modulus.residue_u64(self.values[n])
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }
}

#[inline]
fn add2(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

#[inline]
fn add3(a: u64, b: u64, c: u64, m: u64) -> u64 {
    add2(add2(a, b, m), c, m)
}

#[inline]
fn sub2(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (m - b)
    }
}

/// Central Delannoy numbers D_0..D_{n_max} mod p^e.
pub fn delannoy_prefix(
    n_max: usize,
    modulus: PrimePowerModulus,
    engine: Engine,
) -> Result<SequenceTable> {
    let values = match engine {
        Engine::Dp => delannoy_square_diagonal(n_max, modulus.m()),
        Engine::Holonomic => {
            let two_x_plus_one = modulus.residue_u64(3);
            holonomic_delannoy(n_max, modulus, two_x_plus_one)?
        }
    };
    Ok(SequenceTable {
        kind: SequenceKind::Delannoy,
        modulus,
        engine,
        values,
    })
}

/// Delannoy polynomials D_0(x)..D_{n_max}(x) mod p^e.
pub fn dpoly_prefix(
    x: Residue,
    n_max: usize,
    modulus: PrimePowerModulus,
    engine: Engine,
) -> Result<SequenceTable> {
    assert_eq!(x.modulus(), modulus, "evaluation point is in a different ring");
    let values = match engine {
        Engine::Dp => dpoly_defining_sum(x.value(), n_max, modulus.m()),
        Engine::Holonomic => {
            let two_x_plus_one = x + x + modulus.one();
            holonomic_delannoy(n_max, modulus, two_x_plus_one)?
        }
    };
    Ok(SequenceTable {
        kind: SequenceKind::DelannoyX(x),
        modulus,
        engine,
        values,
    })
}

/// Delannoy square D(i,j) = D(i-1,j) + D(i,j-1) + D(i-1,j-1) with a rolling
/// row; the central diagonal D(n,n) is read off as the row passes it.
fn delannoy_square_diagonal(n_max: usize, m: u64) -> Vec<u64> {
    let one = 1 % m;
    let mut row = vec![one; n_max + 1];
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(one);
    for i in 1..=n_max {
        let mut upper_left = row[0]; // D(i-1, j-1)
        row[0] = one;
        for j in 1..=n_max {
            let upper = row[j]; // D(i-1, j)
            row[j] = add3(upper, row[j - 1], upper_left, m);
            upper_left = upper;
        }
        out.push(row[i]);
    }
    out
}

/// D_n(x) = sum_k C(n,k) C(n+k,k) x^k via two division-free row updates:
/// the Pascal row C(n, .) and the diagonal C(n+j, j), which advances in n by
/// a prefix sum (hockey stick).
fn dpoly_defining_sum(x: u64, n_max: usize, m: u64) -> Vec<u64> {
    let one = 1 % m;
    let mut xpow = Vec::with_capacity(n_max + 1);
    let mut xp = one;
    for _ in 0..=n_max {
        xpow.push(xp);
        xp = mul_raw(xp, x, m);
    }
    let mut binom = vec![0u64; n_max + 1];
    binom[0] = one;
    let mut diag = vec![one; n_max + 1]; // C(0+j, j) = 1
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(one);
    for n in 1..=n_max {
        for k in (1..=n).rev() {
            binom[k] = add2(binom[k], binom[k - 1], m);
        }
        let mut running = 0u64;
        for d in diag.iter_mut() {
            running = add2(running, *d, m);
            *d = running;
        }
        let mut acc = 0u64;
        for k in 0..=n {
            acc = add2(acc, mul_raw(mul_raw(binom[k], diag[k], m), xpow[k], m), m);
        }
        out.push(acc);
    }
    out
}

/// (n+1) D_{n+1} = (2n+1)(2x+1) D_n - n D_{n-1}; x = 1 gives the plain
/// Delannoy recurrence with coefficient 3(2n+1).
fn holonomic_delannoy(
    n_max: usize,
    modulus: PrimePowerModulus,
    two_x_plus_one: Residue,
) -> Result<Vec<u64>> {
    let p = modulus.p();
    if n_max as u64 >= p {
        return Err(Error::IndexTooLarge { n_max, p });
    }
    let m = modulus.m();
    let one = 1 % m;
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(one);
    if n_max == 0 {
        return Ok(out);
    }
    let t = two_x_plus_one.value();
    out.push(t); // D_1(x) = 2x + 1... plus 1 - 1; see below
    // D_1(x) = 1 + 2x = (2x+1), consistent with t.
    let mut prev = one;
    let mut cur = t;
    for n in 1..n_max {
        let nn = n as u64;
        let lead = mul_raw((2 * nn + 1) % m, t, m);
        let num = sub2(mul_raw(lead, cur, m), mul_raw(nn % m, prev, m), m);
        let inv = inv_raw((nn + 1) % m, m).expect("n+1 < p is a unit");
        let next = mul_raw(num, inv, m);
        out.push(next);
        prev = cur;
        cur = next;
    }
    Ok(out)
}

/// Large Schroeder numbers via S_{n+1} = S_n + sum_{k<=n} S_k S_{n-k}.
pub fn schroeder_prefix(n_max: usize, modulus: PrimePowerModulus) -> SequenceTable {
    let m = modulus.m();
    let one = 1 % m;
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(one);
    for n in 0..n_max {
        let mut conv = 0u64;
        for k in 0..=n {
            conv = add2(conv, mul_raw(values[k], values[n - k], m), m);
        }
        values.push(add2(values[n], conv, m));
    }
    SequenceTable {
        kind: SequenceKind::Schroeder,
        modulus,
        engine: Engine::Dp,
        values,
    }
}

/// Catalan numbers via C_{k+1} = sum_{i<=k} C_i C_{k-i}.
pub fn catalan_prefix(n_max: usize, modulus: PrimePowerModulus) -> SequenceTable {
    let m = modulus.m();
    let one = 1 % m;
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(one);
    for n in 0..n_max {
        let mut conv = 0u64;
        for i in 0..=n {
            conv = add2(conv, mul_raw(values[i], values[n - i], m), m);
        }
        values.push(conv);
    }
    SequenceTable {
        kind: SequenceKind::Catalan,
        modulus,
        engine: Engine::Dp,
        values,
    }
}

/// s_n = D_n - S_n, elementwise from the two DP tables.
pub fn s_small_prefix(n_max: usize, modulus: PrimePowerModulus) -> SequenceTable {
    let m = modulus.m();
    let d = delannoy_square_diagonal(n_max, m);
    let s = schroeder_prefix(n_max, modulus);
    let values = d
        .iter()
        .zip(s.values())
        .map(|(&d, &s)| sub2(d, s, m))
        .collect();
    SequenceTable {
        kind: SequenceKind::SSmall,
        modulus,
        engine: Engine::Dp,
        values,
    }
}

/// Euler numbers mod p from E_0 = 1 and sum over even k of C(n,k) E_{n-k} = 0,
/// with a rolling Pascal row. Odd indices come out zero.
pub fn euler_numbers(n_max: usize, p: u64) -> Result<SequenceTable> {
    let modulus = PrimePowerModulus::new(p, 1)?;
    let m = modulus.m();
    let mut row = vec![0u64; n_max + 2];
    row[0] = 1 % m;
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(1 % m);
    for n in 1..=n_max {
        for k in (1..=n).rev() {
            row[k] = add2(row[k], row[k - 1], m);
        }
        let mut acc = 0u64;
        for k in (2..=n).step_by(2) {
            acc = add2(acc, mul_raw(row[k], values[n - k], m), m);
        }
        values.push(sub2(0, acc, m));
    }
    Ok(SequenceTable {
        kind: SequenceKind::EulerNumber,
        modulus,
        engine: Engine::Dp,
        values,
    })
}

/// Bernoulli numbers mod p from B_n = -(1/(n+1)) sum_{j<n} C(n+1,j) B_j.
/// Needs every n+1 <= n_max+1 to be a unit mod p.
pub fn bernoulli_mod_p(n_max: usize, p: u64) -> Result<SequenceTable> {
    let modulus = PrimePowerModulus::new(p, 1)?;
    if n_max as u64 >= p - 1 {
        return Err(Error::IndexTooLarge { n_max, p });
    }
    let m = modulus.m();
    // row holds C(n+1, .) at the top of each iteration
    let mut row = vec![0u64; n_max + 2];
    row[0] = 1 % m;
    row[1] = 1 % m;
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(1 % m);
    for n in 1..=n_max {
        for k in (1..=n + 1).rev() {
            row[k] = add2(row[k], row[k - 1], m);
        }
        let mut acc = 0u64;
        for j in 0..n {
            acc = add2(acc, mul_raw(row[j], values[j], m), m);
        }
        let inv = inv_raw((n as u64 + 1) % m, m).expect("n+1 < p is a unit");
        values.push(sub2(0, mul_raw(acc, inv, m), m));
    }
    Ok(SequenceTable {
        kind: SequenceKind::Bernoulli,
        modulus,
        engine: Engine::Dp,
        values,
    })
}

/// Pell, Pell companion, Fibonacci, and Lucas prefixes mod p^e.
pub fn binary_recurrence_prefix(
    kind: SequenceKind,
    n_max: usize,
    modulus: PrimePowerModulus,
) -> Result<SequenceTable> {
    let (a0, a1, c1) = match kind {
        SequenceKind::Pell => (0u64, 1u64, 2u64),
        SequenceKind::PellCompanion => (2, 2, 2),
        SequenceKind::Fibonacci => (0, 1, 1),
        SequenceKind::Lucas => (2, 1, 1),
        other => {
            return Err(Error::InvalidConfig(format!(
                "{other:?} is not a two-term linear recurrence kind"
            )))
        }
    };
    let m = modulus.m();
    let mut values = vec![a0 % m, a1 % m];
    for n in 1..n_max {
        let next = add2(mul_raw(c1 % m, values[n], m), values[n - 1], m);
        values.push(next);
    }
    values.truncate(n_max + 1);
    Ok(SequenceTable {
        kind,
        modulus,
        engine: Engine::Dp,
        values,
    })
}

/// A_n = (-1+sqrt(-x))^n + (-1-sqrt(-x))^n as the integer sequence
/// A_0 = 2, A_1 = -2, A_{n+1} = -2 A_n - (1+x) A_{n-1}.
pub fn quadring_prefix(x: Residue, n_max: usize, modulus: PrimePowerModulus) -> SequenceTable {
    assert_eq!(x.modulus(), modulus, "evaluation point is in a different ring");
    let m = modulus.m();
    let one_plus_x = add2(1 % m, x.value(), m);
    let two = 2 % m;
    let mut values = vec![two, sub2(0, two, m)];
    for n in 1..n_max {
        let next = sub2(
            sub2(0, mul_raw(two, values[n], m), m),
            mul_raw(one_plus_x, values[n - 1], m),
            m,
        );
        values.push(next);
    }
    values.truncate(n_max + 1);
    SequenceTable {
        kind: SequenceKind::QuadringA(x),
        modulus,
        engine: Engine::Dp,
        values,
    }
}

/// Build any kind through one entry point; `engine` is honored for the two
/// Delannoy kinds and must be `Dp` for everything else.
pub fn build(
    kind: SequenceKind,
    n_max: usize,
    modulus: PrimePowerModulus,
    engine: Engine,
) -> Result<SequenceTable> {
    match kind {
        SequenceKind::Delannoy => delannoy_prefix(n_max, modulus, engine),
        SequenceKind::DelannoyX(x) => dpoly_prefix(x, n_max, modulus, engine),
        _ => {
            if engine == Engine::Holonomic {
                return Err(Error::InvalidConfig(format!(
                    "{kind:?} has no holonomic engine"
                )));
            }
            match kind {
                SequenceKind::Schroeder => Ok(schroeder_prefix(n_max, modulus)),
                SequenceKind::Catalan => Ok(catalan_prefix(n_max, modulus)),
                SequenceKind::SSmall => Ok(s_small_prefix(n_max, modulus)),
                SequenceKind::EulerNumber => {
                    ensure_mod_p(modulus)?;
                    euler_numbers(n_max, modulus.p())
                }
                SequenceKind::Bernoulli => {
                    ensure_mod_p(modulus)?;
                    bernoulli_mod_p(n_max, modulus.p())
                }
                SequenceKind::Pell
                | SequenceKind::PellCompanion
                | SequenceKind::Fibonacci
                | SequenceKind::Lucas => binary_recurrence_prefix(kind, n_max, modulus),
                SequenceKind::QuadringA(x) => Ok(quadring_prefix(x, n_max, modulus)),
                SequenceKind::Delannoy | SequenceKind::DelannoyX(_) => unreachable!(),
            }
        }
    }
}

fn ensure_mod_p(modulus: PrimePowerModulus) -> Result<()> {
    if modulus.e() != 1 {
        return Err(Error::InvalidConfig(
            "Euler and Bernoulli tables are defined mod p only (power 1)".into(),
        ));
    }
    Ok(())
}
