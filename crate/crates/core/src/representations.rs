//! Representations of a prime by the six binary quadratic forms
//! a*x^2 + b*y^2 the conjectural right-hand sides need, plus the residue-class
//! case analysis that decides which form (if any) applies.

use crate::error::{Error, Result};

/// The six supported (a, b) coefficient pairs.
const SUPPORTED_FORMS: &[(u64, u64)] = &[(1, 1), (1, 3), (1, 6), (2, 3), (1, 15), (3, 5)];

/// A solution of a*x^2 + b*y^2 = p (or the verdict that none exists).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormRepresentation {
    pub a: u64,
    pub b: u64,
    pub x: u64,
    pub y: u64,
    pub found: bool,
}

/// Which case split a check consults; named by form discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjectureFamily {
    /// p = x^2 + y^2 (x odd, y even) when p = 1 mod 4, else the zero branch.
    TwoSquares,
    /// p = x^2 + 3y^2 when p = 1 mod 3, else the zero branch.
    Disc12,
    /// p = x^2 + 6y^2 or 2x^2 + 3y^2 by p mod 24, zero branch when (-6/p) = -1.
    Disc24,
    /// p = x^2 + 15y^2 or 3x^2 + 5y^2 by p mod 15, zero branch when (-15/p) = -1.
    Disc60,
}

/// Outcome of the case split: either "the RHS is multiplier*x^2 - 2p with x
/// from form (a, b)", or the zero branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseBranch {
    Quadratic { a: u64, b: u64, multiplier: u64 },
    Zero,
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Exhaustive search for the smallest x >= 0 with a*x^2 + b*y^2 = p, y >= 0.
/// For the form (1,1) the solution is normalized to x odd, y even.
pub fn represent(p: u64, a: u64, b: u64) -> Result<FormRepresentation> {
    if !SUPPORTED_FORMS.contains(&(a, b)) {
        return Err(Error::UnsupportedForm { a, b });
    }
    let none = FormRepresentation { a, b, x: 0, y: 0, found: false };
    for x in 0..=isqrt(p / a) {
        let rest = p - a * x * x;
        if rest % b != 0 {
            continue;
        }
        let y2 = rest / b;
        let y = isqrt(y2);
        if y * y != y2 {
            continue;
        }
        if (a, b) == (1, 1) && (x % 2 == 0 || y % 2 == 1) {
            continue;
        }
        return Ok(FormRepresentation { a, b, x, y, found: true });
    }
    Ok(none)
}

/// All normalized solutions (x, y) with x, y >= 0; used to verify that the
/// branch value does not depend on which solution the search returns first.
pub fn represent_all(p: u64, a: u64, b: u64) -> Result<Vec<(u64, u64)>> {
    if !SUPPORTED_FORMS.contains(&(a, b)) {
        return Err(Error::UnsupportedForm { a, b });
    }
    let mut out = Vec::new();
    for x in 0..=isqrt(p / a) {
        let rest = p - a * x * x;
        if rest % b != 0 {
            continue;
        }
        let y2 = rest / b;
        let y = isqrt(y2);
        if y * y == y2 && !((a, b) == (1, 1) && (x % 2 == 0 || y % 2 == 1)) {
            out.push((x, y));
        }
    }
    Ok(out)
}

/// Decides which branch of the family's case split applies to p, from p's
/// residue class alone.
pub fn classify_case(p: u64, family: ConjectureFamily) -> CaseBranch {
    match family {
        ConjectureFamily::TwoSquares => {
            if p % 4 == 1 {
                CaseBranch::Quadratic { a: 1, b: 1, multiplier: 4 }
            } else {
                CaseBranch::Zero
            }
        }
        ConjectureFamily::Disc12 => {
            if p % 3 == 1 {
                CaseBranch::Quadratic { a: 1, b: 3, multiplier: 4 }
            } else {
                CaseBranch::Zero
            }
        }
        ConjectureFamily::Disc24 => match p % 24 {
            1 | 7 => CaseBranch::Quadratic { a: 1, b: 6, multiplier: 4 },
            5 | 11 => CaseBranch::Quadratic { a: 2, b: 3, multiplier: 8 },
            _ => CaseBranch::Zero,
        },
        ConjectureFamily::Disc60 => match p % 15 {
            1 | 4 => CaseBranch::Quadratic { a: 1, b: 15, multiplier: 4 },
            2 | 8 => CaseBranch::Quadratic { a: 3, b: 5, multiplier: 12 },
            _ => CaseBranch::Zero,
        },
    }
}
