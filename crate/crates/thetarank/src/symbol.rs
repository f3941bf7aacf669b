//! Symbols: pairs of beta-sets up to the shift equivalence.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, ParseError, Result};
use crate::partition::{Bipartition, Partition};

/// Largest entry accepted by the text parser.
pub const MAX_ENTRY: u64 = 1_000_000_000;
/// Longest row accepted by the text parser.
pub const MAX_ROW: usize = 1_000_000;

/// A strictly decreasing finite sequence of non-negative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BetaSet {
    entries: Vec<u64>,
}

impl BetaSet {
    pub fn new(entries: Vec<u64>) -> Result<BetaSet> {
        if entries.windows(2).all(|w| w[0] > w[1]) {
            Ok(BetaSet { entries })
        } else {
            Err(Error::InvalidBetaSet { entries })
        }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn sum(&self) -> i128 {
        self.entries.iter().map(|&e| e as i128).sum()
    }

    /// Subtracts the staircase `(m-1, ..., 0)`.
    fn parts(&self) -> Partition {
        let m = self.entries.len() as u64;
        Partition::from_decreasing(self.entries.iter().enumerate().map(|(i, &e)| e - (m - 1 - i as u64)))
    }

    /// Trailing run of the form `(k-1, ..., 1, 0)`.
    fn staircase_tail(&self) -> usize {
        self.entries.iter().rev().enumerate().take_while(|&(i, &e)| e == i as u64).count()
    }
}

/// An ordered pair of beta-sets `(a_1 > ... > a_m1 ; b_1 > ... > b_m2)`.
///
/// Equality is structural. Use [`Symbol::equivalent`] or compare
/// [`Symbol::normalize`]d forms to test equivalence.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    top: BetaSet,
    bottom: BetaSet,
}

fn quadratic(d: i64) -> u64 {
    let a = d.unsigned_abs();
    if a % 2 == 1 {
        (a * a - 1) / 4
    } else {
        a * a / 4
    }
}

impl Symbol {
    pub fn new(top: Vec<u64>, bottom: Vec<u64>) -> Result<Symbol> {
        Ok(Symbol { top: BetaSet::new(top)?, bottom: BetaSet::new(bottom)? })
    }

    pub fn from_rows(top: BetaSet, bottom: BetaSet) -> Symbol {
        Symbol { top, bottom }
    }

    pub(crate) fn from_vecs(top: Vec<u64>, bottom: Vec<u64>) -> Symbol {
        debug_assert!(top.windows(2).all(|w| w[0] > w[1]));
        debug_assert!(bottom.windows(2).all(|w| w[0] > w[1]));
        Symbol { top: BetaSet { entries: top }, bottom: BetaSet { entries: bottom } }
    }

    /// The empty symbol `[|]`.
    pub fn empty() -> Symbol {
        Symbol::default()
    }

    pub fn top(&self) -> &[u64] {
        self.top.entries()
    }

    pub fn bottom(&self) -> &[u64] {
        self.bottom.entries()
    }

    /// `m1 - m2`.
    pub fn defect(&self) -> i64 {
        self.top.len() as i64 - self.bottom.len() as i64
    }

    /// `Σa + Σb - ⌊(m1+m2-1)²/4⌋`.
    pub fn rank(&self) -> u64 {
        let m = (self.top.len() + self.bottom.len()) as i128;
        let r = self.top.sum() + self.bottom.sum() - ((m - 1) * (m - 1)).div_euclid(4);
        r as u64
    }

    /// `2|Υ| + |d|(|d|+1)/2`.
    pub fn rank_u(&self) -> u64 {
        let d = self.defect().unsigned_abs();
        2 * self.upsilon().size() + d * (d + 1) / 2
    }

    /// `Σ2a + Σ2b + |m1-m2|/2 - (m1+m2)(m1+m2-2)/2`, evaluated directly.
    pub fn rank_u_closed_form(&self) -> u64 {
        let m = (self.top.len() + self.bottom.len()) as i128;
        let d = self.defect().unsigned_abs() as i128;
        let twice = 4 * (self.top.sum() + self.bottom.sum()) + d - m * (m - 2);
        (twice / 2) as u64
    }

    /// The defect term of the rank: `rank = |Υ| + quadratic(defect)`.
    pub fn quadratic(defect: i64) -> u64 {
        quadratic(defect)
    }

    /// Drops a common `0` from both rows and shifts down, as often as possible.
    pub fn normalize(&self) -> Symbol {
        let k = self.top.staircase_tail().min(self.bottom.staircase_tail());
        if k == 0 {
            return self.clone();
        }
        let shrink = |b: &BetaSet| {
            let keep = b.len() - k;
            b.entries[..keep].iter().map(|&e| e - k as u64).collect::<Vec<_>>()
        };
        Symbol::from_vecs(shrink(&self.top), shrink(&self.bottom))
    }

    pub fn is_reduced(&self) -> bool {
        !(self.top.entries.last() == Some(&0) && self.bottom.entries.last() == Some(&0))
    }

    /// `(A+1 ∪ {0} ; B+1 ∪ {0})`.
    pub fn expand(&self) -> Symbol {
        let shift = |b: &BetaSet| b.entries.iter().map(|&e| e + 1).chain(std::iter::once(0)).collect::<Vec<_>>();
        Symbol::from_vecs(shift(&self.top), shift(&self.bottom))
    }

    /// The least equivalent symbol whose rows are both non-empty.
    pub fn with_nonempty_rows(&self) -> Symbol {
        let s = self.normalize();
        if s.top.is_empty() || s.bottom.is_empty() {
            s.expand()
        } else {
            s
        }
    }

    pub fn equivalent(&self, other: &Symbol) -> bool {
        self.normalize() == other.normalize()
    }

    /// `(B ; A)`.
    pub fn transpose(&self) -> Symbol {
        Symbol { top: self.bottom.clone(), bottom: self.top.clone() }
    }

    /// Subtracts the staircases rowwise and drops zero parts.
    pub fn upsilon(&self) -> Bipartition {
        Bipartition::new(self.top.parts(), self.bottom.parts())
    }

    /// The reduced symbol of defect `d` whose Υ is `b`.
    pub fn from_upsilon(b: &Bipartition, d: i64) -> Symbol {
        let lt = b.top.len() as i64;
        let lb = b.bottom.len() as i64;
        let m2 = lb.max(lt - d).max(-d).max(0);
        let m1 = m2 + d;
        let build = |p: &Partition, m: i64| {
            (0..m as usize)
                .map(|i| p.parts().get(i).copied().unwrap_or(0) + (m as u64 - 1 - i as u64))
                .collect::<Vec<_>>()
        };
        Symbol::from_vecs(build(&b.top, m1), build(&b.bottom, m2))
    }

    /// Reduced symbols of the same defect whose Υ has one more box.
    pub fn add_box(&self) -> Vec<Symbol> {
        let d = self.defect();
        self.upsilon().add_box().iter().map(|b| Symbol::from_upsilon(b, d)).collect()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |f: &mut fmt::Formatter<'_>, r: &[u64]| -> fmt::Result {
            for (i, e) in r.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
            Ok(())
        };
        f.write_str("[")?;
        row(f, self.top())?;
        f.write_str("|")?;
        row(f, self.bottom())?;
        f.write_str("]")
    }
}

fn parse_row(row: &str, whole: &str) -> Result<Vec<u64>, ParseError> {
    let trimmed = row.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for tok in trimmed.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            return Err(ParseError::new(whole, "empty entry"));
        }
        if !tok.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseError::new(tok, "expected a non-negative integer"));
        }
        let v: u64 = tok.parse().map_err(|_| ParseError::new(tok, "entry too large"))?;
        if v > MAX_ENTRY {
            return Err(ParseError::new(tok, "entry exceeds 10^9"));
        }
        if let Some(&prev) = out.last() {
            if v == prev {
                return Err(ParseError::new(tok, "repeated entry"));
            }
            if v > prev {
                return Err(ParseError::new(tok, "row is not strictly decreasing"));
            }
        }
        out.push(v);
        if out.len() > MAX_ROW {
            return Err(ParseError::new(tok, "row longer than 10^6"));
        }
    }
    Ok(out)
}

impl FromStr for Symbol {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Symbol, ParseError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| ParseError::new(s, "symbol must look like [a,b,...|c,d,...]"))?;
        let mut halves = inner.split('|');
        let (Some(top), Some(bottom), None) = (halves.next(), halves.next(), halves.next()) else {
            return Err(ParseError::new(s, "symbol needs exactly one '|'"));
        };
        Ok(Symbol::from_vecs(parse_row(top, s)?, parse_row(bottom, s)?))
    }
}

impl Serialize for Symbol {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Symbol {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Symbol, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for parsing a symbol literal that is known to be valid.
///
/// # Panics
///
/// Panics on malformed input.
pub fn sym(s: &str) -> Symbol {
    s.parse().unwrap_or_else(|e| panic!("bad symbol literal {s:?}: {e}"))
}
