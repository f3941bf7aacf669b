//! Named characters: Steinberg, cuspidal, and witnesses for every attainable Θ-rank.

use std::fmt;

use crate::datum::{LusztigDatum, OrthoSympDatum, UnitaryDatum};
use crate::error::{Error, Result};
use crate::family::{enumerate_symbols_with_ceiling, FamilyKind, GroupFamily, UnipotentChar};
use crate::partition::Bipartition;
use crate::symbol::Symbol;
use crate::theta::theta_rank;

/// `hi, hi-1, ..., lo`; empty when `hi < lo`.
fn desc(hi: i64, lo: i64) -> Vec<u64> {
    if hi < lo {
        return Vec::new();
    }
    (lo..=hi).rev().map(|v| v as u64).collect()
}

fn symbol(top: Vec<u64>, bottom: Vec<u64>) -> Symbol {
    Symbol::new(top, bottom).expect("constructed rows are strictly decreasing")
}

fn out_of_range(what: &'static str, detail: String) -> Error {
    Error::OutOfRange { what, detail }
}

fn checked(family: GroupFamily, s: Symbol, sgn: bool, expected: u64) -> Result<UnipotentChar> {
    let c = UnipotentChar::new(family, &s, sgn)?;
    let got = theta_rank(&c);
    if got != expected {
        return Err(Error::WitnessMismatch { witness: c.to_string(), expected, got });
    }
    Ok(c)
}

/// The Steinberg character(s) of a family: both transposes for even
/// orthogonal groups, both sign twists for odd orthogonal groups.
pub fn steinberg(kind: FamilyKind, n: u64) -> Result<Vec<UnipotentChar>> {
    let m = n as i64;
    if n == 0 && matches!(kind, FamilyKind::OPlus | FamilyKind::OMinus | FamilyKind::U) {
        return Err(out_of_range("n", format!("{kind} Steinberg needs n >= 1")));
    }
    let family = GroupFamily::new(kind, n);
    Ok(match kind {
        FamilyKind::Sp => vec![checked(family, symbol(desc(m, 0), desc(m, 1)), false, 2 * n)?],
        FamilyKind::OPlus | FamilyKind::OMinus => {
            let s = if kind == FamilyKind::OPlus {
                symbol(desc(m, 1), desc(m - 1, 0))
            } else {
                symbol(desc(m, 0), desc(m - 1, 1))
            };
            let t = s.transpose();
            vec![checked(family, s, false, 2 * n - 2)?, checked(family, t, false, 2 * n - 2)?]
        }
        FamilyKind::OOdd => {
            let s = symbol(desc(m, 1), desc(m, 0));
            vec![checked(family, s.clone(), false, 2 * n)?, checked(family, s, true, 2 * n)?]
        }
        FamilyKind::U => {
            let s = if n % 2 == 0 {
                symbol(desc(m / 2 - 1, 0), desc(m / 2, 1))
            } else {
                symbol(desc((m - 1) / 2, 1), desc((m - 1) / 2, 0))
            };
            vec![checked(family, s, false, n - 1)?]
        }
    })
}

/// The cuspidal unipotent character(s) with parameter `d` (the Υ-empty symbols).
pub fn cuspidal(kind: FamilyKind, d: u64) -> Result<Vec<UnipotentChar>> {
    let e = d as i64;
    let (defect, theta) = match kind {
        FamilyKind::Sp => (if d % 2 == 0 { 2 * e + 1 } else { -(2 * e + 1) }, 2 * d * d),
        FamilyKind::OOdd => (if d % 2 == 1 { 2 * e + 1 } else { -(2 * e + 1) }, 2 * d * d),
        FamilyKind::OPlus | FamilyKind::OMinus => {
            if d == 0 {
                return Err(out_of_range("d", "even orthogonal cuspidal needs d >= 1".into()));
            }
            let wanted = if d % 2 == 0 { FamilyKind::OPlus } else { FamilyKind::OMinus };
            if wanted != kind {
                return Err(out_of_range("d", format!("{kind} has no cuspidal unipotent character for d = {d}")));
            }
            (2 * e, 2 * d * (d - 1))
        }
        FamilyKind::U => (if d % 2 == 0 { e } else { -e }, d * (d.max(1) - 1) / 2),
    };
    let s = Symbol::from_upsilon(&Bipartition::empty(), defect);
    let family = GroupFamily::new(kind, kind.size_of(&s));
    Ok(match kind {
        FamilyKind::OPlus | FamilyKind::OMinus => {
            vec![checked(family, s.clone(), false, theta)?, checked(family, s.transpose(), false, theta)?]
        }
        FamilyKind::OOdd => vec![checked(family, s.clone(), false, theta)?, checked(family, s, true, theta)?],
        _ => vec![checked(family, s, false, theta)?],
    })
}

/// A character realizing a prescribed Θ-rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Unipotent(UnipotentChar),
    Datum(LusztigDatum),
}

impl Witness {
    pub fn theta_rank(&self) -> u64 {
        match self {
            Witness::Unipotent(c) => theta_rank(c),
            Witness::Datum(d) => d.theta_rank(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Unipotent(c) => write!(f, "{c}"),
            Witness::Datum(d) => write!(f, "{d}"),
        }
    }
}

/// Whether some irreducible character of the family has Θ-rank `k`.
///
/// `O+_2(q)` with `q = 3` has no character of Θ-rank 2; that depends on `q`
/// and is not reflected here.
pub fn is_admissible(family: GroupFamily, k: u64) -> bool {
    let n = family.n;
    match family.kind {
        FamilyKind::Sp => k <= 2 * n,
        FamilyKind::OPlus | FamilyKind::OOdd => k % 2 == 0 && k <= 2 * n,
        FamilyKind::OMinus => n >= 1 && k % 2 == 0 && k <= 2 * n,
        FamilyKind::U => {
            if n <= 1 {
                k == 0
            } else {
                k <= n
            }
        }
    }
}

/// `(n, j, ..., 1 ; j-1, ..., 0)` with `j = k/2`, for even `k < 2n`.
fn sp_lambda(n: u64, k: u64) -> Symbol {
    let j = (k / 2) as i64;
    let mut top = vec![n];
    top.extend(desc(j, 1));
    symbol(top, desc(j - 1, 0))
}

/// `(n, j, ..., 1 ; j, ..., 0)`, for even `k < 2n`.
fn o_plus_lambda(n: u64, k: u64) -> Symbol {
    let j = (k / 2) as i64;
    let mut top = vec![n];
    top.extend(desc(j, 1));
    symbol(top, desc(j, 0))
}

/// `(n-1, j, ..., 1 ; j-2, ..., 0)`, for even `2 <= k <= 2n-4`.
fn o_minus_lambda(n: u64, k: u64) -> Symbol {
    let j = (k / 2) as i64;
    let mut top = vec![n - 1];
    top.extend(desc(j, 1));
    symbol(top, desc(j - 2, 0))
}

fn unipotent(family: GroupFamily, s: Symbol, k: u64) -> Result<Witness> {
    Ok(Witness::Unipotent(checked(family, s, false, k)?))
}

fn datum(d: LusztigDatum, k: u64) -> Result<Witness> {
    let got = d.theta_rank();
    if got != k {
        return Err(Error::WitnessMismatch { witness: d.to_string(), expected: k, got });
    }
    Ok(Witness::Datum(d))
}

/// A character of Θ-rank exactly `k` in `family`, checked before it is returned.
pub fn witness(family: GroupFamily, k: u64) -> Result<Witness> {
    if !is_admissible(family, k) {
        return Err(Error::Inadmissible { family: family.to_string(), k });
    }
    let n = family.n;
    match family.kind {
        FamilyKind::Sp if k == 2 * n => Ok(Witness::Unipotent(steinberg(FamilyKind::Sp, n)?.remove(0))),
        FamilyKind::Sp if k % 2 == 0 => unipotent(family, sp_lambda(n, k), k),
        FamilyKind::Sp => {
            let minus = o_plus_lambda(n, k - 1);
            let d = OrthoSympDatum::new(FamilyKind::Sp, n, &minus, &Symbol::new(vec![0], vec![])?, false)?;
            datum(d.into(), k)
        }
        FamilyKind::OPlus if n == 0 => unipotent(family, Symbol::empty(), k),
        FamilyKind::OPlus if k == 2 * n => datum(OrthoSympDatum::torus(FamilyKind::OPlus, n)?.into(), k),
        FamilyKind::OPlus => unipotent(family, o_plus_lambda(n, k), k),
        FamilyKind::OMinus if k == 0 => unipotent(family, symbol(vec![n, 0], vec![]), k),
        FamilyKind::OMinus if k == 2 * n => datum(OrthoSympDatum::torus(FamilyKind::OMinus, n)?.into(), k),
        FamilyKind::OMinus if k == 2 * n - 2 => Ok(Witness::Unipotent(steinberg(FamilyKind::OMinus, n)?.remove(0))),
        FamilyKind::OMinus => unipotent(family, o_minus_lambda(n, k), k),
        FamilyKind::OOdd => {
            let sp = if k == 2 * n { steinberg(FamilyKind::Sp, n)?.remove(0).symbol } else { sp_lambda(n, k) };
            unipotent(family, sp.transpose(), k)
        }
        FamilyKind::U if k == n && n >= 2 => datum(UnitaryDatum::new(n, Vec::new())?.into(), k),
        FamilyKind::U => {
            let ceiling = n.max(crate::family::DEFAULT_MAX_RANK);
            let found = enumerate_symbols_with_ceiling(family, ceiling)?
                .into_iter()
                .find(|s| crate::theta::theta_rank_unchecked(crate::family::World::U, s) == k)
                .ok_or_else(|| Error::Inadmissible { family: family.to_string(), k })?;
            unipotent(family, found, k)
        }
    }
}
