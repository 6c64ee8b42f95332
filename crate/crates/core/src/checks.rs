//! The registry of congruence checks. Each check compiles one congruence to
//! an evaluation over a single prime, producing exact left/right residues and
//! a verdict. No check ever rounds or tolerates: pass means lhs == rhs in the
//! stated prime-power ring.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::modring::{inv_raw, legendre, mul_raw, PrimePowerModulus, Residue};
use crate::quotients;
use crate::representations::{classify_case, represent, CaseBranch, ConjectureFamily};
use crate::sequences::{self, Engine, SequenceKind, SequenceTable};

/// Where a congruence sits in the source hierarchy; conjectures get softer
/// failure handling than proved statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckStatus {
    Theorem,
    Lemma,
    Corollary,
    Example,
    Remark,
    Conjecture,
    Auxiliary,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Theorem => "theorem",
            CheckStatus::Lemma => "lemma",
            CheckStatus::Corollary => "corollary",
            CheckStatus::Example => "example",
            CheckStatus::Remark => "remark",
            CheckStatus::Conjecture => "conjecture",
            CheckStatus::Auxiliary => "auxiliary",
        }
    }

    /// Proved statements must never fail; conjectures may in principle.
    pub fn is_conjecture(&self) -> bool {
        matches!(self, CheckStatus::Conjecture)
    }
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Per-record parameter instance (which m, which x, which of several chained
/// sums). Ordering is the report sort order within one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Params {
    None,
    M(u64),
    X(u64),
    Sum(&'static str),
}

impl Params {
    /// Compact JSON object, e.g. {}, {"m":2}, {"x":5}, {"sum":"x=1/8"}.
    pub fn to_json(&self) -> String {
        match self {
            Params::None => "{}".into(),
            Params::M(v) => format!("{{\"m\":{v}}}"),
            Params::X(v) => format!("{{\"x\":{v}}}"),
            Params::Sum(s) => format!("{{\"sum\":\"{s}\"}}"),
        }
    }
}

/// One evaluated congruence instance.
#[derive(Debug, Clone)]
pub struct CheckRecord {
    pub check_id: &'static str,
    pub p: u64,
    pub params: Params,
    pub modulus: u64,
    pub lhs: u64,
    pub rhs: u64,
    pub pass: bool,
    pub status: CheckStatus,
    pub engine: Engine,
    pub elapsed_us: u64,
}

/// A registry entry: identity, applicability, and the evaluation itself.
pub struct CheckSpec {
    pub id: &'static str,
    pub status: CheckStatus,
    /// Highest power of p the comparison happens in.
    pub mod_power: u32,
    /// Whether the evaluation consumes Delannoy-family tables, i.e. whether
    /// the holonomic engine can change anything.
    pub engine_sensitive: bool,
    applicable: fn(u64) -> bool,
    eval: fn(&PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>>,
}

impl CheckSpec {
    pub fn applicable(&self, p: u64) -> bool {
        (self.applicable)(p)
    }
}

impl std::fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CheckSpec")
            .field("id", &self.id)
            .field("status", &self.status)
            .field("mod_power", &self.mod_power)
            .finish()
    }
}

/// Per-prime evaluation context: memoizes sequence tables and inverse tables
/// so checks sharing inputs build them once. One context per (prime, engine).
pub struct PrimeCtx {
    p: u64,
    engine: Engine,
    m_values: Vec<u64>,
    x_values: Vec<u64>,
    tables: RefCell<HashMap<(u8, u32, u64), Rc<SequenceTable>>>,
    inverses: RefCell<HashMap<u32, Rc<Vec<u64>>>>,
}

impl PrimeCtx {
    /// Context with exhaustive parameter policies: every m in [1, p-1] and
    /// every x in [0, p-1].
    pub fn new(p: u64, engine: Engine) -> Result<Self> {
        let m_values = (1..p).collect();
        let x_values = (0..p).collect();
        Self::with_params(p, engine, m_values, x_values)
    }

    /// Context with explicit parameter lists (used by sampled runs).
    pub fn with_params(
        p: u64,
        engine: Engine,
        m_values: Vec<u64>,
        x_values: Vec<u64>,
    ) -> Result<Self> {
        // validates that p is an odd prime
        PrimePowerModulus::new(p, 1)?;
        if m_values.iter().any(|&m| m == 0 || m >= p) {
            return Err(Error::InvalidConfig(format!(
                "m values must lie in [1, {}]",
                p - 1
            )));
        }
        if x_values.iter().any(|&x| x >= p) {
            return Err(Error::InvalidConfig(format!(
                "x values must lie in [0, {}]",
                p - 1
            )));
        }
        Ok(PrimeCtx {
            p,
            engine,
            m_values,
            x_values,
            tables: RefCell::new(HashMap::new()),
            inverses: RefCell::new(HashMap::new()),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    fn modulus(&self, e: u32) -> Result<PrimePowerModulus> {
        PrimePowerModulus::new(self.p, e)
    }

    fn cached<F>(&self, tag: u8, e: u32, xv: u64, build: F) -> Result<Rc<SequenceTable>>
    where
        F: FnOnce(PrimePowerModulus) -> Result<SequenceTable>,
    {
        let key = (tag, e, xv);
        if let Some(t) = self.tables.borrow().get(&key) {
            return Ok(Rc::clone(t));
        }
        let t = Rc::new(build(self.modulus(e)?)?);
        self.tables.borrow_mut().insert(key, Rc::clone(&t));
        Ok(t)
    }

    fn delannoy(&self, e: u32) -> Result<Rc<SequenceTable>> {
        let n_max = self.p as usize - 1;
        let engine = self.engine;
        self.cached(0, e, 0, |md| sequences::delannoy_prefix(n_max, md, engine))
    }

    fn dpoly(&self, e: u32, num: i64, den: i64) -> Result<Rc<SequenceTable>> {
        let n_max = self.p as usize - 1;
        let engine = self.engine;
        let md = self.modulus(e)?;
        let x = md.residue_of_rational(num, den)?;
        self.cached(1, e, x.value(), |md| {
            sequences::dpoly_prefix(x, n_max, md, engine)
        })
    }

    fn schroeder(&self, e: u32) -> Result<Rc<SequenceTable>> {
        let n_max = self.p as usize - 1;
        self.cached(2, e, 0, |md| Ok(sequences::schroeder_prefix(n_max, md)))
    }

    fn catalan(&self, e: u32) -> Result<Rc<SequenceTable>> {
        let n_max = self.p as usize - 1;
        self.cached(3, e, 0, |md| Ok(sequences::catalan_prefix(n_max, md)))
    }

    fn s_small(&self, e: u32) -> Result<Rc<SequenceTable>> {
        let n_max = self.p as usize - 1;
        self.cached(4, e, 0, |md| Ok(sequences::s_small_prefix(n_max, md)))
    }

    fn euler(&self) -> Result<Rc<SequenceTable>> {
        let p = self.p;
        let n_max = p as usize - 3;
        self.cached(5, 1, 0, |_| sequences::euler_numbers(n_max, p))
    }

    fn bernoulli(&self) -> Result<Rc<SequenceTable>> {
        let p = self.p;
        let n_max = p as usize - 3;
        self.cached(6, 1, 0, |_| sequences::bernoulli_mod_p(n_max, p))
    }

    fn binary(&self, kind: SequenceKind, tag: u8, e: u32, n_max: usize) -> Result<Rc<SequenceTable>> {
        self.cached(tag, e, 0, |md| {
            sequences::binary_recurrence_prefix(kind, n_max, md)
        })
    }

    fn pell(&self, e: u32) -> Result<Rc<SequenceTable>> {
        self.binary(SequenceKind::Pell, 7, e, self.p as usize + 1)
    }

    fn pell_companion(&self, e: u32) -> Result<Rc<SequenceTable>> {
        self.binary(SequenceKind::PellCompanion, 8, e, self.p as usize)
    }

    fn fibonacci(&self, e: u32) -> Result<Rc<SequenceTable>> {
        self.binary(SequenceKind::Fibonacci, 9, e, self.p as usize + 1)
    }

    /// inv[k] = k^(-1) mod p^e for 1 <= k < p (index 0 unused).
    fn inv_table(&self, e: u32) -> Result<Rc<Vec<u64>>> {
        if let Some(t) = self.inverses.borrow().get(&e) {
            return Ok(Rc::clone(t));
        }
        let m = self.modulus(e)?.m();
        let mut inv = vec![0u64; self.p as usize];
        for k in 1..self.p as usize {
            inv[k] = inv_raw(k as u64, m).expect("k < p is a unit mod p^e");
        }
        let t = Rc::new(inv);
        self.inverses.borrow_mut().insert(e, Rc::clone(&t));
        Ok(t)
    }
}

#[inline]
fn addm(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

#[inline]
fn subm(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (m - b)
    }
}

/// Sum over k = 1..len-1 of (sign)^k table[k] / k^s.
fn sum_div_pow(t: &[u64], inv: &[u64], m: u64, s: u32, alternating: bool) -> u64 {
    let mut acc = 0u64;
    for k in 1..t.len() {
        let mut w = t[k];
        for _ in 0..s {
            w = mul_raw(w, inv[k], m);
        }
        if alternating && k % 2 == 1 {
            acc = subm(acc, w, m);
        } else {
            acc = addm(acc, w, m);
        }
    }
    acc
}

/// Sum over k = 1..len-1 of table[k] * w^k, with w given directly (already
/// an inverse when the check divides by m^k).
fn sum_geometric(t: &[u64], w: u64, m: u64) -> u64 {
    let mut acc = 0u64;
    let mut wk = 1u64 % m;
    for &v in &t[1..] {
        wk = mul_raw(wk, w, m);
        acc = addm(acc, mul_raw(v, wk, m), m);
    }
    acc
}

/// Residue of the Legendre symbol value 1 - (a/p) in the given ring.
fn one_minus_legendre(md: PrimePowerModulus, a: i64) -> Residue {
    md.residue(1 - legendre(a, md.p()) as i64)
}

// --- evaluation functions, one per registry entry ---

fn delannoy_over_k_squared(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(1)?;
    let d = ctx.delannoy(1)?;
    let inv = ctx.inv_table(1)?;
    let lhs = md.residue_u64(sum_div_pow(d.values(), &inv, md.m(), 2, false));
    let e = ctx.euler()?;
    let ep3 = e.value(e.len() - 1);
    let rhs = md.residue(2 * legendre(-1, ctx.p) as i64) * ep3;
    Ok(vec![(Params::None, lhs, rhs)])
}

fn delannoy_over_k(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(1)?;
    let d = ctx.delannoy(1)?;
    let inv = ctx.inv_table(1)?;
    let lhs = md.residue_u64(sum_div_pow(d.values(), &inv, md.m(), 1, false));
    let rhs = -quotients::fermat_quotient_2(ctx.p)?;
    Ok(vec![(Params::None, lhs, rhs)])
}

fn dpoly_over_k_all_x(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(1)?;
    let wide = ctx.modulus(2)?;
    let inv = ctx.inv_table(1)?;
    let n_max = ctx.p as usize - 1;
    let mut out = Vec::with_capacity(ctx.x_values.len());
    for &x in &ctx.x_values {
        let t = sequences::dpoly_prefix(md.residue_u64(x), n_max, md, ctx.engine)?;
        let lhs = md.residue_u64(sum_div_pow(t.values(), &inv, md.m(), 1, false));
        let rhs = quotients::rhs_eq13(wide.residue_u64(x))?;
        out.push((Params::X(x), lhs, rhs));
    }
    Ok(out)
}

/// Shared left side of the fixed-x corollaries: sum of D_k(x)/k mod p.
fn dpoly_over_k_at(ctx: &PrimeCtx, x_num: i64) -> Result<Residue> {
    let md = ctx.modulus(1)?;
    let t = ctx.dpoly(1, x_num, 1)?;
    let inv = ctx.inv_table(1)?;
    Ok(md.residue_u64(sum_div_pow(t.values(), &inv, md.m(), 1, false)))
}

fn dpoly3_over_k(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let lhs = dpoly_over_k_at(ctx, 3)?;
    let md = ctx.modulus(1)?;
    let rhs = md.residue(-2) * quotients::fermat_quotient_2(ctx.p)?;
    Ok(vec![(Params::None, lhs, rhs)])
}

fn dpoly_minus4_over_k(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let lhs = dpoly_over_k_at(ctx, -4)?;
    let rhs = quotients::power_difference_quotient(3, ctx.p)?;
    Ok(vec![(Params::None, lhs, rhs)])
}

fn dpoly_minus9_over_k(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let lhs = dpoly_over_k_at(ctx, -9)?;
    let md = ctx.modulus(1)?;
    let rhs = md.residue(-6) * quotients::fermat_quotient_2(ctx.p)?;
    Ok(vec![(Params::None, lhs, rhs)])
}

fn dpoly_minus2_over_k(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let lhs = dpoly_over_k_at(ctx, -2)?;
    let md = ctx.modulus(1)?;
    let rhs = md.residue(-4) * quotients::pell_quotient(ctx.p)?;
    Ok(vec![(Params::None, lhs, rhs)])
}

fn dpoly_minus5_over_k(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let lhs = dpoly_over_k_at(ctx, -5)?;
    let md = ctx.modulus(1)?;
    let rhs = md.residue(-2) * quotients::fermat_quotient_2(ctx.p)?
        + md.residue(-5) * quotients::fibonacci_quotient(ctx.p)?;
    Ok(vec![(Params::None, lhs, rhs)])
}

fn schroeder_geometric(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(1)?;
    let m = md.m();
    let p = ctx.p;
    let s = ctx.schroeder(1)?;
    let inv = ctx.inv_table(1)?;
    let mut out = Vec::with_capacity(ctx.m_values.len());
    for &mv in &ctx.m_values {
        let lhs = md.residue_u64(sum_geometric(s.values(), inv[mv as usize], m));
        let c = (mv as i128 * mv as i128 - 6 * mv as i128 + 1).rem_euclid(p as i128) as u64;
        let half = md.residue_u64(c) * md.residue_u64(2 * mv).inv()?;
        let rhs = half * one_minus_legendre(md, c as i64);
        out.push((Params::M(mv), lhs, rhs));
    }
    Ok(out)
}

fn schroeder_geometric_at_6(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(1)?;
    let s = ctx.schroeder(1)?;
    let w = md.residue_u64(6).inv()?;
    let lhs = md.residue_u64(sum_geometric(s.values(), w.value(), md.m()));
    Ok(vec![(Params::None, lhs, md.zero())])
}

fn catalan_geometric(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(1)?;
    let m = md.m();
    let p = ctx.p;
    let c = ctx.catalan(1)?;
    let inv = ctx.inv_table(1)?;
    let two_inv = md.residue_u64(2).inv()?;
    let mut out = Vec::with_capacity(ctx.m_values.len());
    for &mv in &ctx.m_values {
        let lhs = md.residue_u64(sum_geometric(c.values(), inv[mv as usize], m));
        let shifted = (mv as i128 - 4).rem_euclid(p as i128) as u64;
        let product = (mv as i128 * (mv as i128 - 4)).rem_euclid(p as i128) as u64;
        let rhs =
            md.residue_u64(shifted) * two_inv * one_minus_legendre(md, product as i64);
        out.push((Params::M(mv), lhs, rhs));
    }
    Ok(out)
}

fn schroeder_plain_sum(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(2)?;
    let s = ctx.schroeder(2)?;
    let mut acc = 0u64;
    for &v in &s.values()[1..] {
        acc = addm(acc, v, md.m());
    }
    let lhs = md.residue_u64(acc);
    let rhs = md.residue(2 * legendre(-1, ctx.p) as i64) - md.residue_u64(2).pow(ctx.p);
    Ok(vec![(Params::None, lhs, rhs)])
}

fn delannoy_plain_sum(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(3)?;
    let d = ctx.delannoy(3)?;
    let mut acc = 0u64;
    for &v in d.values() {
        acc = addm(acc, v, md.m());
    }
    let lhs = md.residue_u64(acc);
    let e = ctx.euler()?;
    let ep3 = e.raw(e.len() - 1);
    let rhs = md.residue(legendre(-1, ctx.p) as i64)
        - md.residue_u64(ctx.p * ctx.p) * md.residue_u64(ep3);
    Ok(vec![(Params::None, lhs, rhs)])
}

fn delannoy_square_sum(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(1)?;
    let d = ctx.delannoy(1)?;
    let m = md.m();
    let mut acc = 0u64;
    for &v in d.values() {
        acc = addm(acc, mul_raw(v, v, m), m);
    }
    Ok(vec![(
        Params::None,
        md.residue_u64(acc),
        md.residue(legendre(2, ctx.p) as i64),
    )])
}

fn harmonic_sum(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(3)?;
    let inv = ctx.inv_table(3)?;
    let mut acc = 0u64;
    for k in 1..ctx.p as usize {
        acc = addm(acc, inv[k], md.m());
    }
    let lhs = md.residue_u64(acc);
    let b = ctx.bernoulli()?;
    let bp3 = b.raw(b.len() - 1);
    let third = inv_raw(3, ctx.p).expect("3 is a unit");
    let scaled = mul_raw(bp3, third, ctx.p);
    let rhs = -(md.residue_u64(ctx.p * ctx.p) * md.residue_u64(scaled));
    Ok(vec![(Params::None, lhs, rhs)])
}

fn s_small_alternating(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(1)?;
    let s = ctx.s_small(1)?;
    let inv = ctx.inv_table(1)?;
    let lhs = md.residue_u64(sum_div_pow(s.values(), &inv, md.m(), 1, true));
    let rhs = md.residue(4 * (legendre(2, ctx.p) as i64 - 1));
    Ok(vec![(Params::None, lhs, rhs)])
}

fn delannoy_alternating(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(1)?;
    let d = ctx.delannoy(1)?;
    let inv = ctx.inv_table(1)?;
    let lhs = md.residue_u64(sum_div_pow(d.values(), &inv, md.m(), 1, true));
    let rhs = md.residue(-4) * quotients::pell_quotient(ctx.p)?;
    Ok(vec![(Params::None, lhs, rhs)])
}

fn schroeder_alternating(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(1)?;
    let s = ctx.schroeder(1)?;
    let inv = ctx.inv_table(1)?;
    let lhs = md.residue_u64(sum_div_pow(s.values(), &inv, md.m(), 1, true));
    let rhs = md.residue(4 * (1 - legendre(2, ctx.p) as i64))
        + md.residue(-4) * quotients::pell_quotient(ctx.p)?;
    Ok(vec![(Params::None, lhs, rhs)])
}

fn delannoy_square_over_k_squared(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(1)?;
    let d = ctx.delannoy(1)?;
    let inv = ctx.inv_table(1)?;
    let m = md.m();
    let mut acc = 0u64;
    for k in 1..ctx.p as usize {
        let w = mul_raw(d.raw(k), inv[k], m);
        acc = addm(acc, mul_raw(w, w, m), m);
    }
    let q = quotients::fermat_quotient_2(ctx.p)?;
    let rhs = md.residue(-2) * q * q;
    Ok(vec![(Params::None, md.residue_u64(acc), rhs)])
}

fn delannoy_over_k_lifted(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(2)?;
    let d = ctx.delannoy(2)?;
    let inv = ctx.inv_table(2)?;
    let lhs = md.residue_u64(sum_div_pow(d.values(), &inv, md.m(), 1, false));
    let q = quotients::fermat_quotient_2_mod(ctx.p, 2)?;
    let rhs = -q + md.residue_u64(ctx.p) * q * q;
    Ok(vec![(Params::None, lhs, rhs)])
}

fn delannoy_schroeder_product_sum(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(4)?;
    let m = md.m();
    let d = ctx.delannoy(4)?;
    let s = ctx.schroeder(4)?;
    let inv = ctx.inv_table(4)?;
    let mut lhs = 0u64;
    let mut weights = 0u64;
    for k in 1..ctx.p as usize {
        lhs = addm(lhs, mul_raw(d.raw(k), s.raw(k), m), m);
        let coef = if k % 2 == 0 { 4 } else { 2 };
        weights = addm(weights, mul_raw(coef, inv[k], m), m);
    }
    let rhs = -(md.residue_u64(2 * ctx.p) * md.residue_u64(weights));
    Ok(vec![(Params::None, md.residue_u64(lhs), rhs)])
}

fn branch_rhs(md: PrimePowerModulus, p: u64, family: ConjectureFamily) -> Result<Residue> {
    match classify_case(p, family) {
        CaseBranch::Zero => Ok(md.zero()),
        CaseBranch::Quadratic { a, b, multiplier } => {
            let rep = represent(p, a, b)?;
            if !rep.found {
                return Err(Error::InvalidConfig(format!(
                    "{p} admits no representation by {a}x^2+{b}y^2"
                )));
            }
            let x = md.residue_u64(rep.x);
            Ok(md.residue_u64(multiplier) * x * x - md.residue_u64(2 * p))
        }
    }
}

fn delannoy_schroeder_half_sum(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(1)?;
    let m = md.m();
    let d = ctx.delannoy(1)?;
    let s = ctx.schroeder(1)?;
    let mut acc = 0u64;
    for k in 1..=(ctx.p as usize - 1) / 2 {
        acc = addm(acc, mul_raw(d.raw(k), s.raw(k), m), m);
    }
    let rhs = branch_rhs(md, ctx.p, ConjectureFamily::TwoSquares)?;
    Ok(vec![(Params::None, md.residue_u64(acc), rhs)])
}

fn s_small_square_over_n(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(1)?;
    let s = ctx.s_small(1)?;
    let inv = ctx.inv_table(1)?;
    let m = md.m();
    let mut acc = 0u64;
    for n in 1..ctx.p as usize {
        let w = mul_raw(s.raw(n), s.raw(n), m);
        acc = addm(acc, mul_raw(w, inv[n], m), m);
    }
    Ok(vec![(Params::None, md.residue_u64(acc), md.residue(-6))])
}

/// Alternating sum of cubes: sum over k = 0..p-1 of (-1)^k table[k]^3.
fn alternating_cube_sum(t: &[u64], m: u64) -> u64 {
    let mut acc = 0u64;
    for (k, &v) in t.iter().enumerate() {
        let cube = mul_raw(mul_raw(v, v, m), v, m);
        if k % 2 == 1 {
            acc = subm(acc, cube, m);
        } else {
            acc = addm(acc, cube, m);
        }
    }
    acc
}

fn cube_sum_at(ctx: &PrimeCtx, num: i64, den: i64) -> Result<Residue> {
    let md = ctx.modulus(2)?;
    let t = ctx.dpoly(2, num, den)?;
    Ok(md.residue_u64(alternating_cube_sum(t.values(), md.m())))
}

fn disc12_cube_sums(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(2)?;
    let rhs = md.residue(legendre(-1, ctx.p) as i64)
        * branch_rhs(md, ctx.p, ConjectureFamily::Disc12)?;
    let twist = md.residue(legendre(-2, ctx.p) as i64);
    Ok(vec![
        (Params::Sum("x=2"), cube_sum_at(ctx, 2, 1)?, rhs),
        (Params::Sum("x=-1/4"), cube_sum_at(ctx, -1, 4)?, rhs),
        (Params::Sum("x=1/8"), twist * cube_sum_at(ctx, 1, 8)?, rhs),
    ])
}

fn disc24_cube_sum(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(2)?;
    let lhs = md.residue(legendre(-1, ctx.p) as i64) * cube_sum_at(ctx, 1, 2)?;
    let rhs = branch_rhs(md, ctx.p, ConjectureFamily::Disc24)?;
    Ok(vec![(Params::Sum("x=1/2"), lhs, rhs)])
}

fn disc60_cube_sums(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(2)?;
    let rhs = branch_rhs(md, ctx.p, ConjectureFamily::Disc60)?;
    let twist = md.residue(legendre(-5, ctx.p) as i64);
    Ok(vec![
        (Params::Sum("x=-4"), cube_sum_at(ctx, -4, 1)?, rhs),
        (
            Params::Sum("x=-1/16"),
            twist * cube_sum_at(ctx, -1, 16)?,
            rhs,
        ),
    ])
}

fn pell_companion_identity(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(2)?;
    let q = ctx.pell_companion(2)?;
    let p_table = ctx.pell(2)?;
    let lhs = q.value(ctx.p as usize) - md.residue_u64(2);
    let idx = (ctx.p as i64 - legendre(2, ctx.p) as i64) as usize;
    let rhs = md.residue_u64(4) * p_table.value(idx);
    Ok(vec![(Params::None, lhs, rhs)])
}

fn lucas_fibonacci_identity(ctx: &PrimeCtx) -> Result<Vec<(Params, Residue, Residue)>> {
    let md = ctx.modulus(2)?;
    let lhs = quotients::lucas_term(ctx.p)?;
    let f = ctx.fibonacci(2)?;
    let idx = (ctx.p as i64 - legendre(ctx.p as i64, 5) as i64) as usize;
    let rhs = md.residue_u64(5) * f.value(idx);
    Ok(vec![(Params::None, lhs, rhs)])
}

// --- applicability predicates ---

fn every_odd_prime(_: u64) -> bool {
    true
}

fn except_3(p: u64) -> bool {
    p != 3
}

fn except_5(p: u64) -> bool {
    p != 5
}

fn above_3(p: u64) -> bool {
    p > 3
}

fn above_3_except_5(p: u64) -> bool {
    p > 3 && p != 5
}

/// The full check registry, in source order.
pub fn registry() -> &'static [CheckSpec] {
    static REGISTRY: &[CheckSpec] = &[
        CheckSpec {
            id: "thm1.1-eq1.1",
            status: CheckStatus::Theorem,
            mod_power: 1,
            engine_sensitive: true,
            applicable: every_odd_prime,
            eval: delannoy_over_k_squared,
        },
        CheckSpec {
            id: "thm1.1-eq1.2",
            status: CheckStatus::Theorem,
            mod_power: 1,
            engine_sensitive: true,
            applicable: every_odd_prime,
            eval: delannoy_over_k,
        },
        CheckSpec {
            id: "thm1.1-eq1.3",
            status: CheckStatus::Theorem,
            mod_power: 1,
            engine_sensitive: true,
            applicable: every_odd_prime,
            eval: dpoly_over_k_all_x,
        },
        CheckSpec {
            id: "cor1.1-eq1.4",
            status: CheckStatus::Corollary,
            mod_power: 1,
            engine_sensitive: true,
            applicable: except_3,
            eval: dpoly3_over_k,
        },
        CheckSpec {
            id: "cor1.1-eq1.5",
            status: CheckStatus::Corollary,
            mod_power: 1,
            engine_sensitive: true,
            applicable: every_odd_prime,
            eval: dpoly_minus4_over_k,
        },
        CheckSpec {
            id: "cor1.1-eq1.6",
            status: CheckStatus::Corollary,
            mod_power: 1,
            engine_sensitive: true,
            applicable: every_odd_prime,
            eval: dpoly_minus9_over_k,
        },
        CheckSpec {
            id: "cor1.1-eq1.7",
            status: CheckStatus::Corollary,
            mod_power: 1,
            engine_sensitive: true,
            applicable: every_odd_prime,
            eval: dpoly_minus2_over_k,
        },
        CheckSpec {
            id: "cor1.1-eq1.8",
            status: CheckStatus::Corollary,
            mod_power: 1,
            engine_sensitive: true,
            applicable: except_5,
            eval: dpoly_minus5_over_k,
        },
        CheckSpec {
            id: "thm1.2-eq1.11",
            status: CheckStatus::Theorem,
            mod_power: 1,
            engine_sensitive: false,
            applicable: every_odd_prime,
            eval: schroeder_geometric,
        },
        CheckSpec {
            id: "ex1.1-eq1.12",
            status: CheckStatus::Example,
            mod_power: 1,
            engine_sensitive: false,
            applicable: above_3,
            eval: schroeder_geometric_at_6,
        },
        CheckSpec {
            id: "lem2.1-eq2.1",
            status: CheckStatus::Lemma,
            mod_power: 1,
            engine_sensitive: false,
            applicable: every_odd_prime,
            eval: catalan_geometric,
        },
        CheckSpec {
            id: "lem2.2-eq2.2",
            status: CheckStatus::Lemma,
            mod_power: 2,
            engine_sensitive: false,
            applicable: every_odd_prime,
            eval: schroeder_plain_sum,
        },
        CheckSpec {
            id: "rem1.1-a",
            status: CheckStatus::Remark,
            mod_power: 3,
            engine_sensitive: true,
            applicable: every_odd_prime,
            eval: delannoy_plain_sum,
        },
        CheckSpec {
            id: "rem1.1-b",
            status: CheckStatus::Remark,
            mod_power: 1,
            engine_sensitive: true,
            applicable: every_odd_prime,
            eval: delannoy_square_sum,
        },
        CheckSpec {
            id: "rem1.1-c",
            status: CheckStatus::Remark,
            mod_power: 3,
            engine_sensitive: false,
            applicable: above_3,
            eval: harmonic_sum,
        },
        CheckSpec {
            id: "rem3.1-a",
            status: CheckStatus::Remark,
            mod_power: 1,
            engine_sensitive: false,
            applicable: every_odd_prime,
            eval: s_small_alternating,
        },
        CheckSpec {
            id: "rem3.1-b",
            status: CheckStatus::Remark,
            mod_power: 1,
            engine_sensitive: true,
            applicable: every_odd_prime,
            eval: delannoy_alternating,
        },
        CheckSpec {
            id: "rem3.1-c",
            status: CheckStatus::Remark,
            mod_power: 1,
            engine_sensitive: false,
            applicable: every_odd_prime,
            eval: schroeder_alternating,
        },
        CheckSpec {
            id: "conj1.1-eq1.9",
            status: CheckStatus::Conjecture,
            mod_power: 1,
            engine_sensitive: true,
            applicable: above_3,
            eval: delannoy_square_over_k_squared,
        },
        CheckSpec {
            id: "conj1.1-eq1.10",
            status: CheckStatus::Conjecture,
            mod_power: 2,
            engine_sensitive: true,
            applicable: above_3,
            eval: delannoy_over_k_lifted,
        },
        CheckSpec {
            id: "conj1.1-c",
            status: CheckStatus::Conjecture,
            mod_power: 4,
            engine_sensitive: true,
            applicable: above_3,
            eval: delannoy_schroeder_product_sum,
        },
        CheckSpec {
            id: "conj1.1-d",
            status: CheckStatus::Conjecture,
            mod_power: 1,
            engine_sensitive: true,
            applicable: above_3,
            eval: delannoy_schroeder_half_sum,
        },
        CheckSpec {
            id: "conj1.1-e",
            status: CheckStatus::Conjecture,
            mod_power: 1,
            engine_sensitive: false,
            applicable: above_3,
            eval: s_small_square_over_n,
        },
        CheckSpec {
            id: "conj1.2-A",
            status: CheckStatus::Conjecture,
            mod_power: 2,
            engine_sensitive: true,
            applicable: above_3,
            eval: disc12_cube_sums,
        },
        CheckSpec {
            id: "conj1.2-B",
            status: CheckStatus::Conjecture,
            mod_power: 2,
            engine_sensitive: true,
            applicable: above_3,
            eval: disc24_cube_sum,
        },
        CheckSpec {
            id: "conj1.2-C",
            status: CheckStatus::Conjecture,
            mod_power: 2,
            engine_sensitive: true,
            applicable: above_3_except_5,
            eval: disc60_cube_sums,
        },
        CheckSpec {
            id: "aux-ST-pell",
            status: CheckStatus::Auxiliary,
            mod_power: 2,
            engine_sensitive: false,
            applicable: every_odd_prime,
            eval: pell_companion_identity,
        },
        CheckSpec {
            id: "aux-ST-lucas",
            status: CheckStatus::Auxiliary,
            mod_power: 2,
            engine_sensitive: false,
            applicable: except_5,
            eval: lucas_fibonacci_identity,
        },
    ];
    REGISTRY
}

/// Looks a check up by its stable id.
pub fn find_check(id: &str) -> Result<&'static CheckSpec> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Runs one check against one prime, producing one record per parameter
/// instance.
pub fn evaluate(spec: &CheckSpec, ctx: &PrimeCtx) -> Result<Vec<CheckRecord>> {
    if !spec.applicable(ctx.p()) {
        return Err(Error::NotApplicable {
            check: spec.id.to_string(),
            p: ctx.p(),
        });
    }
    let engine = if spec.engine_sensitive {
        ctx.engine()
    } else {
        Engine::Dp
    };
    let start = Instant::now();
    let rows = (spec.eval)(ctx)?;
    let elapsed_us = start.elapsed().as_micros() as u64;
    let per_row = elapsed_us / rows.len().max(1) as u64;
    Ok(rows
        .into_iter()
        .map(|(params, lhs, rhs)| {
            assert_eq!(lhs.modulus(), rhs.modulus(), "{}: mixed moduli", spec.id);
            CheckRecord {
                check_id: spec.id,
                p: ctx.p(),
                params,
                modulus: lhs.modulus().m(),
                lhs: lhs.value(),
                rhs: rhs.value(),
                pass: lhs == rhs,
                status: spec.status,
                engine,
                elapsed_us: per_row,
            }
        })
        .collect())
}
