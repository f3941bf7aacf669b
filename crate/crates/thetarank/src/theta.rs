//! Θ-rank of unipotent characters and first occurrences in theta towers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::family::{unitary_defect, FamilyKind, UnipotentChar, World};
use crate::symbol::Symbol;

/// The two removal symbols `(b1.. ; a2..)` and `(b2.. ; a1..)`, taken on the
/// least representative with both rows non-empty.
pub fn removals(s: &Symbol) -> (Symbol, Symbol) {
    let rep = s.with_nonempty_rows();
    let (a, b) = (rep.top(), rep.bottom());
    let first = Symbol::from_vecs(b.to_vec(), a[1..].to_vec());
    let second = Symbol::from_vecs(b[1..].to_vec(), a.to_vec());
    (first, second)
}

/// Dimension of the partner group a removal symbol points to.
pub fn partner_dimension(world: World, removal: &Symbol) -> u64 {
    match world {
        World::SpO => 2 * removal.rank(),
        World::U => {
            // Removals can leave the unitary defect convention (in practice
            // only defect 1 does); such a symbol is read one defect step
            // closer to zero.
            let d = removal.defect();
            let mut t = d.unsigned_abs();
            if !unitary_defect(d) {
                t -= 1;
            }
            2 * removal.upsilon().size() + t * (t + 1) / 2
        }
    }
}

/// Θ-rank without checking that the symbol belongs to a family of `world`.
pub fn theta_rank_unchecked(world: World, s: &Symbol) -> u64 {
    let (r1, r2) = removals(s);
    partner_dimension(world, &r1).min(partner_dimension(world, &r2))
}

/// Θ-rank of the unipotent character attached to `s`.
pub fn theta_rank_symbol(world: World, s: &Symbol) -> Result<u64> {
    if world.classify(s).is_none() {
        return Err(Error::NotInWorld { symbol: s.to_string(), world: world.to_string() });
    }
    Ok(theta_rank_unchecked(world, s))
}

/// Θ-rank of a unipotent character. The odd orthogonal sign twist does not change it.
pub fn theta_rank(c: &UnipotentChar) -> u64 {
    theta_rank_unchecked(c.family.kind.world(), &c.symbol)
}

/// A theta tower, named partner-family-of-source-family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tower {
    #[serde(rename = "oplus-of-sp")]
    OPlusOfSp,
    #[serde(rename = "ominus-of-sp")]
    OMinusOfSp,
    #[serde(rename = "sp-of-oplus")]
    SpOfOPlus,
    #[serde(rename = "sp-of-ominus")]
    SpOfOMinus,
    #[serde(rename = "sp-of-oodd")]
    SpOfOOdd,
    #[serde(rename = "u-same-parity")]
    USameParity,
    #[serde(rename = "u-opposite-parity")]
    UOppositeParity,
}

impl Tower {
    pub const ALL: [Tower; 7] = [
        Tower::OPlusOfSp,
        Tower::OMinusOfSp,
        Tower::SpOfOPlus,
        Tower::SpOfOMinus,
        Tower::SpOfOOdd,
        Tower::USameParity,
        Tower::UOppositeParity,
    ];

    pub fn literal(self) -> &'static str {
        match self {
            Tower::OPlusOfSp => "oplus-of-sp",
            Tower::OMinusOfSp => "ominus-of-sp",
            Tower::SpOfOPlus => "sp-of-oplus",
            Tower::SpOfOMinus => "sp-of-ominus",
            Tower::SpOfOOdd => "sp-of-oodd",
            Tower::USameParity => "u-same-parity",
            Tower::UOppositeParity => "u-opposite-parity",
        }
    }

    /// Family whose characters this tower applies to.
    pub fn source(self) -> FamilyKind {
        match self {
            Tower::OPlusOfSp | Tower::OMinusOfSp => FamilyKind::Sp,
            Tower::SpOfOPlus => FamilyKind::OPlus,
            Tower::SpOfOMinus => FamilyKind::OMinus,
            Tower::SpOfOOdd => FamilyKind::OOdd,
            Tower::USameParity | Tower::UOppositeParity => FamilyKind::U,
        }
    }
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.literal())
    }
}

impl FromStr for Tower {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Tower, ParseError> {
        let t = s.trim();
        Tower::ALL.into_iter().find(|tw| tw.literal() == t).ok_or_else(|| ParseError::new(t, "unknown tower"))
    }
}

/// Dimension of the first group of `tower` whose theta correspondence contains `c`.
pub fn first_occurrence(c: &UnipotentChar, tower: Tower) -> Result<u64> {
    if tower.source() != c.family.kind {
        return Err(Error::IncompatibleTower { tower: tower.to_string(), family: c.family.to_string() });
    }
    let spo = |r: Symbol| partner_dimension(World::SpO, &r);
    let (r1, r2) = removals(&c.symbol);
    Ok(match tower {
        Tower::OPlusOfSp | Tower::SpOfOPlus => spo(r1),
        Tower::OMinusOfSp | Tower::SpOfOMinus => spo(r2),
        Tower::SpOfOOdd => {
            let (t1, t2) = removals(&c.symbol.transpose());
            if c.sgn {
                spo(t2)
            } else {
                spo(t1)
            }
        }
        Tower::USameParity => partner_dimension(World::U, &r1),
        Tower::UOppositeParity => partner_dimension(World::U, &r2),
    })
}

/// The two first occurrences whose minimum is the Θ-rank: both towers for
/// Sp and U, the character and its sign twist for orthogonal groups.
pub fn tower_occurrences(c: &UnipotentChar) -> Result<[(Tower, UnipotentChar, u64); 2]> {
    let pair = match c.family.kind {
        FamilyKind::Sp => [(Tower::OPlusOfSp, c.clone()), (Tower::OMinusOfSp, c.clone())],
        FamilyKind::OPlus => [(Tower::SpOfOPlus, c.clone()), (Tower::SpOfOPlus, c.sgn_twist()?)],
        FamilyKind::OMinus => [(Tower::SpOfOMinus, c.clone()), (Tower::SpOfOMinus, c.sgn_twist()?)],
        FamilyKind::OOdd => {
            let plain = UnipotentChar { sgn: false, ..c.clone() };
            let twisted = UnipotentChar { sgn: true, ..c.clone() };
            [(Tower::SpOfOOdd, plain), (Tower::SpOfOOdd, twisted)]
        }
        FamilyKind::U => [(Tower::USameParity, c.clone()), (Tower::UOppositeParity, c.clone())],
    };
    let [(t1, c1), (t2, c2)] = pair;
    let v1 = first_occurrence(&c1, t1)?;
    let v2 = first_occurrence(&c2, t2)?;
    Ok([(t1, c1, v1), (t2, c2, v2)])
}
