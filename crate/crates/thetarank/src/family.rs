//! Group families, membership, and enumeration of unipotent characters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::partition::{bipartition_count, bipartitions};
use crate::symbol::Symbol;

/// Default ceiling on the family parameter for enumeration.
pub const DEFAULT_MAX_RANK: u64 = 30;

/// Which series a symbol indexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    #[serde(rename = "sp")]
    Sp,
    #[serde(rename = "o+")]
    OPlus,
    #[serde(rename = "o-")]
    OMinus,
    #[serde(rename = "oodd")]
    OOdd,
    #[serde(rename = "u")]
    U,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 5] =
        [FamilyKind::Sp, FamilyKind::OPlus, FamilyKind::OMinus, FamilyKind::OOdd, FamilyKind::U];
    pub const SYMPLECTIC_ORTHOGONAL: [FamilyKind; 4] =
        [FamilyKind::Sp, FamilyKind::OPlus, FamilyKind::OMinus, FamilyKind::OOdd];

    pub fn literal(self) -> &'static str {
        match self {
            FamilyKind::Sp => "sp",
            FamilyKind::OPlus => "o+",
            FamilyKind::OMinus => "o-",
            FamilyKind::OOdd => "oodd",
            FamilyKind::U => "u",
        }
    }

    pub fn world(self) -> World {
        if self == FamilyKind::U {
            World::U
        } else {
            World::SpO
        }
    }

    pub fn is_even_orthogonal(self) -> bool {
        matches!(self, FamilyKind::OPlus | FamilyKind::OMinus)
    }

    /// Defect residue mod 4 of the symplectic/orthogonal families.
    pub fn defect_residue(self) -> Option<i64> {
        match self {
            FamilyKind::Sp => Some(1),
            FamilyKind::OPlus => Some(0),
            FamilyKind::OMinus => Some(2),
            FamilyKind::OOdd => Some(3),
            FamilyKind::U => None,
        }
    }

    /// Whether a defect is allowed in this family (ignoring rank).
    pub fn allows_defect(self, d: i64) -> bool {
        match self.defect_residue() {
            Some(r) => d.rem_euclid(4) == r,
            None => unitary_defect(d),
        }
    }

    /// Symbol statistic matched against the family parameter.
    pub fn size_of(self, s: &Symbol) -> u64 {
        if self == FamilyKind::U {
            s.rank_u()
        } else {
            s.rank()
        }
    }

    /// Smallest parameter cost of a defect: `rank - |Υ|`, or `rk_U - 2|Υ|`.
    pub fn defect_cost(self, d: i64) -> u64 {
        if self == FamilyKind::U {
            let t = d.unsigned_abs();
            t * (t + 1) / 2
        } else {
            Symbol::quadratic(d)
        }
    }

    /// The symplectic/orthogonal family of a defect.
    pub fn from_defect(d: i64) -> FamilyKind {
        match d.rem_euclid(4) {
            0 => FamilyKind::OPlus,
            1 => FamilyKind::Sp,
            2 => FamilyKind::OMinus,
            _ => FamilyKind::OOdd,
        }
    }
}

/// Even and non-negative, or odd and negative.
pub fn unitary_defect(d: i64) -> bool {
    if d % 2 == 0 {
        d >= 0
    } else {
        d < 0
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.literal())
    }
}

impl FromStr for FamilyKind {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<FamilyKind, ParseError> {
        match s.trim() {
            "sp" => Ok(FamilyKind::Sp),
            "o+" => Ok(FamilyKind::OPlus),
            "o-" => Ok(FamilyKind::OMinus),
            "oodd" => Ok(FamilyKind::OOdd),
            "u" => Ok(FamilyKind::U),
            other => Err(ParseError::new(other, "unknown family (expected sp, o+, o-, oodd or u)")),
        }
    }
}

/// The two kinds of theta towers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum World {
    #[serde(rename = "spo")]
    SpO,
    #[serde(rename = "u")]
    U,
}

impl World {
    pub fn literal(self) -> &'static str {
        match self {
            World::SpO => "spo",
            World::U => "u",
        }
    }

    /// Family of a symbol in this world, if any.
    pub fn classify(self, s: &Symbol) -> Option<GroupFamily> {
        let d = s.defect();
        match self {
            World::SpO => Some(GroupFamily::new(FamilyKind::from_defect(d), s.rank())),
            World::U => unitary_defect(d).then(|| GroupFamily::new(FamilyKind::U, s.rank_u())),
        }
    }
}

impl fmt::Display for World {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.literal())
    }
}

impl FromStr for World {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<World, ParseError> {
        match s.trim() {
            "spo" => Ok(World::SpO),
            "u" => Ok(World::U),
            other => Err(ParseError::new(other, "unknown world (expected spo or u)")),
        }
    }
}

/// A family at a fixed parameter: symbol rank for Sp/O, dimension for U.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupFamily {
    pub kind: FamilyKind,
    pub n: u64,
}

impl GroupFamily {
    pub fn new(kind: FamilyKind, n: u64) -> GroupFamily {
        GroupFamily { kind, n }
    }

    pub fn sp(n: u64) -> GroupFamily {
        GroupFamily::new(FamilyKind::Sp, n)
    }

    pub fn o_plus(n: u64) -> GroupFamily {
        GroupFamily::new(FamilyKind::OPlus, n)
    }

    pub fn o_minus(n: u64) -> GroupFamily {
        GroupFamily::new(FamilyKind::OMinus, n)
    }

    pub fn o_odd(n: u64) -> GroupFamily {
        GroupFamily::new(FamilyKind::OOdd, n)
    }

    pub fn u(n: u64) -> GroupFamily {
        GroupFamily::new(FamilyKind::U, n)
    }

    /// Dimension of the natural module of the group.
    pub fn dimension(self) -> u64 {
        match self.kind {
            FamilyKind::Sp | FamilyKind::OPlus | FamilyKind::OMinus => 2 * self.n,
            FamilyKind::OOdd => 2 * self.n + 1,
            FamilyKind::U => self.n,
        }
    }

    /// Parameter step of one Witt-tower move (parabolic induction).
    pub fn step(self) -> u64 {
        if self.kind == FamilyKind::U {
            2
        } else {
            1
        }
    }

    pub fn next(self) -> GroupFamily {
        GroupFamily::new(self.kind, self.n + self.step())
    }

    pub fn member(self, s: &Symbol) -> bool {
        self.kind.allows_defect(s.defect()) && self.kind.size_of(s) == self.n
    }

    /// Admissible defects, ascending, with the size of Υ at each.
    pub fn defect_strata(self) -> Vec<(i64, u64)> {
        let mut out = Vec::new();
        match self.kind {
            FamilyKind::U => {
                let mut t = 0u64;
                while t * (t + 1) / 2 <= self.n {
                    let rest = self.n - t * (t + 1) / 2;
                    if rest % 2 == 0 {
                        let d = if t % 2 == 0 { t as i64 } else { -(t as i64) };
                        out.push((d, rest / 2));
                    }
                    t += 1;
                }
            }
            _ => {
                let bound = 2 * (self.n as f64).sqrt() as i64 + 3;
                for d in -bound..=bound {
                    if self.kind.allows_defect(d) && Symbol::quadratic(d) <= self.n {
                        out.push((d, self.n - Symbol::quadratic(d)));
                    }
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind, self.n)
    }
}

impl Serialize for GroupFamily {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for GroupFamily {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<GroupFamily, ParseError> {
        let t = s.trim();
        let (kind, n) = t
            .split_once(':')
            .ok_or_else(|| ParseError::new(t, "family must look like sp:N, o+:N, o-:N, oodd:N or u:N"))?;
        let kind: FamilyKind = kind.parse()?;
        let n = n.trim();
        let n: u64 = n.parse().map_err(|_| ParseError::new(n, "expected a non-negative integer"))?;
        Ok(GroupFamily::new(kind, n))
    }
}

/// A Witt series `G_0, G_1, ...`; converts indices to families and dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WittFamily {
    /// `Sp_{2n}`
    Sp,
    /// `O+_{2n}`
    OPlus,
    /// `O-_{2n+2}`
    OMinus,
    /// `O_{2n+1}`
    OOdd,
    /// `U_{2n}`
    UEven,
    /// `U_{2n+1}`
    UOdd,
}

impl WittFamily {
    pub fn dimension(self, index: u64) -> u64 {
        self.group(index).dimension()
    }

    pub fn group(self, index: u64) -> GroupFamily {
        match self {
            WittFamily::Sp => GroupFamily::sp(index),
            WittFamily::OPlus => GroupFamily::o_plus(index),
            WittFamily::OMinus => GroupFamily::o_minus(index + 1),
            WittFamily::OOdd => GroupFamily::o_odd(index),
            WittFamily::UEven => GroupFamily::u(2 * index),
            WittFamily::UOdd => GroupFamily::u(2 * index + 1),
        }
    }

    /// Witt series and index of a family.
    pub fn of(family: GroupFamily) -> Option<(WittFamily, u64)> {
        let n = family.n;
        match family.kind {
            FamilyKind::Sp => Some((WittFamily::Sp, n)),
            FamilyKind::OPlus => Some((WittFamily::OPlus, n)),
            FamilyKind::OMinus => n.checked_sub(1).map(|i| (WittFamily::OMinus, i)),
            FamilyKind::OOdd => Some((WittFamily::OOdd, n)),
            FamilyKind::U if n % 2 == 0 => Some((WittFamily::UEven, n / 2)),
            FamilyKind::U => Some((WittFamily::UOdd, n / 2)),
        }
    }
}

/// A unipotent character label.
///
/// The symbol is stored reduced. `sgn` is the odd orthogonal twist by the
/// sign character; even orthogonal sign twists are transposed symbols.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnipotentChar {
    pub family: GroupFamily,
    pub symbol: Symbol,
    pub sgn: bool,
}

impl UnipotentChar {
    pub fn new(family: GroupFamily, symbol: &Symbol, sgn: bool) -> Result<UnipotentChar> {
        if !family.member(symbol) {
            return Err(Error::NotInFamily { symbol: symbol.to_string(), family: family.to_string() });
        }
        if sgn && family.kind != FamilyKind::OOdd {
            return Err(Error::Unsupported(format!("sgn flag on {family}")));
        }
        Ok(UnipotentChar { family, symbol: symbol.normalize(), sgn })
    }

    /// The character of `s` in whichever family of `world` contains it.
    pub fn classify(world: World, s: &Symbol) -> Result<UnipotentChar> {
        let family =
            world.classify(s).ok_or_else(|| Error::NotInWorld { symbol: s.to_string(), world: world.to_string() })?;
        UnipotentChar::new(family, s, false)
    }

    /// Twist by the sign character: transpose for even orthogonal, flag flip for odd.
    pub fn sgn_twist(&self) -> Result<UnipotentChar> {
        match self.family.kind {
            FamilyKind::OPlus | FamilyKind::OMinus => {
                Ok(UnipotentChar { family: self.family, symbol: self.symbol.transpose().normalize(), sgn: false })
            }
            FamilyKind::OOdd => Ok(UnipotentChar { sgn: !self.sgn, ..self.clone() }),
            _ => Err(Error::Unsupported(format!("sign twist on {}", self.family))),
        }
    }
}

impl fmt::Display for UnipotentChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.family, self.symbol)?;
        if self.sgn {
            f.write_str(" sgn")?;
        }
        Ok(())
    }
}

/// Symbol equal to its own transpose up to equivalence.
pub fn is_self_transpose(s: &Symbol) -> bool {
    s.normalize() == s.transpose().normalize()
}

fn check_ceiling(family: GroupFamily, ceiling: u64) -> Result<()> {
    if family.n > ceiling {
        Err(Error::BoundExceeded { n: family.n, max: ceiling })
    } else {
        Ok(())
    }
}

/// All reduced symbols of a family, ordered by defect, then by Υ.
pub fn enumerate_symbols(family: GroupFamily) -> Result<Vec<Symbol>> {
    enumerate_symbols_with_ceiling(family, DEFAULT_MAX_RANK)
}

pub fn enumerate_symbols_with_ceiling(family: GroupFamily, ceiling: u64) -> Result<Vec<Symbol>> {
    check_ceiling(family, ceiling)?;
    let mut out = Vec::new();
    for (d, size) in family.defect_strata() {
        out.extend(bipartitions(size).iter().map(|b| Symbol::from_upsilon(b, d)));
    }
    Ok(out)
}

/// All unipotent characters of a family; odd orthogonal symbols appear twice.
pub fn enumerate_unipotent(family: GroupFamily) -> Result<Vec<UnipotentChar>> {
    enumerate_unipotent_with_ceiling(family, DEFAULT_MAX_RANK)
}

pub fn enumerate_unipotent_with_ceiling(family: GroupFamily, ceiling: u64) -> Result<Vec<UnipotentChar>> {
    let symbols = enumerate_symbols_with_ceiling(family, ceiling)?;
    let flags: &[bool] = if family.kind == FamilyKind::OOdd { &[false, true] } else { &[false] };
    Ok(symbols
        .into_iter()
        .flat_map(|symbol| flags.iter().map(move |&sgn| UnipotentChar { family, symbol: symbol.clone(), sgn }))
        .collect())
}

/// `Σ_d p₂(n - cost(d))` over the admissible defects.
pub fn count_symbols(family: GroupFamily) -> u64 {
    family.defect_strata().iter().map(|&(_, size)| bipartition_count(size)).sum()
}
