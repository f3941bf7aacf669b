//! Modified Lusztig data and the Θ-rank of arbitrary irreducible characters.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{enumerate_symbols_with_ceiling, FamilyKind, GroupFamily, UnipotentChar, World};
use crate::symbol::Symbol;
use crate::theta::theta_rank_unchecked;

/// Datum of a character of `Sp_2n`, `O±_2n` or `O_2n+1`.
///
/// `lambda_minus` and `lambda_plus` are the symbols at the eigenvalues -1 and
/// +1; the remaining rank `n - n_minus - n_plus` sits in the part of the
/// centralizer away from ±1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrthoSympDatum {
    pub family: FamilyKind,
    pub n: u64,
    pub n_minus: u64,
    pub n_plus: u64,
    pub lambda_minus: Symbol,
    pub lambda_plus: Symbol,
    pub sgn: bool,
}

fn even_defect(s: &Symbol) -> bool {
    s.defect() % 2 == 0
}

fn sp_defect(s: &Symbol) -> bool {
    s.defect().rem_euclid(4) == 1
}

/// Reads `[|]` as the trivial character of `Sp_0` where a symplectic part is
/// expected; normalizes everything else.
fn empty_part(family: FamilyKind, minus: bool, s: &Symbol) -> Symbol {
    let symplectic = family == FamilyKind::OOdd || (family == FamilyKind::Sp && !minus);
    if symplectic && *s == Symbol::empty() {
        Symbol::from_vecs(vec![0], vec![])
    } else {
        s.normalize()
    }
}

impl OrthoSympDatum {
    /// Builds and validates a datum; `n_minus` and `n_plus` are read off the symbol ranks.
    pub fn new(
        family: FamilyKind,
        n: u64,
        lambda_minus: &Symbol,
        lambda_plus: &Symbol,
        sgn: bool,
    ) -> Result<OrthoSympDatum> {
        let lambda_minus = empty_part(family, true, lambda_minus);
        let lambda_plus = empty_part(family, false, lambda_plus);
        let d = OrthoSympDatum {
            family,
            n,
            n_minus: lambda_minus.rank(),
            n_plus: lambda_plus.rank(),
            lambda_minus,
            lambda_plus,
            sgn,
        };
        d.validate()?;
        Ok(d)
    }

    /// The datum whose centralizer is a torus: Θ-rank `2n`.
    pub fn torus(family: FamilyKind, n: u64) -> Result<OrthoSympDatum> {
        OrthoSympDatum::new(family, n, &Symbol::empty(), &Symbol::empty(), false)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidDatum(msg));
        if self.family == FamilyKind::U {
            return bad("unitary family needs a slot datum".into());
        }
        if self.n_minus + self.n_plus > self.n {
            return bad(format!("n- + n+ = {} exceeds n = {}", self.n_minus + self.n_plus, self.n));
        }
        if self.lambda_minus.rank() != self.n_minus {
            return bad(format!("rank of {} is not n- = {}", self.lambda_minus, self.n_minus));
        }
        if self.lambda_plus.rank() != self.n_plus {
            return bad(format!("rank of {} is not n+ = {}", self.lambda_plus, self.n_plus));
        }
        let (minus_ok, plus_ok) = match self.family {
            FamilyKind::Sp => (even_defect(&self.lambda_minus), sp_defect(&self.lambda_plus)),
            FamilyKind::OPlus | FamilyKind::OMinus => (even_defect(&self.lambda_minus), even_defect(&self.lambda_plus)),
            _ => (sp_defect(&self.lambda_minus), sp_defect(&self.lambda_plus)),
        };
        if !minus_ok {
            return bad(format!("{} has the wrong defect for the -1 part", self.lambda_minus));
        }
        if !plus_ok {
            return bad(format!("{} has the wrong defect for the +1 part", self.lambda_plus));
        }
        if self.sgn && self.family != FamilyKind::OOdd {
            return bad("sgn flag only applies to odd orthogonal groups".into());
        }
        Ok(())
    }

    pub fn group(&self) -> GroupFamily {
        GroupFamily::new(self.family, self.n)
    }

    pub fn theta_rank(&self) -> u64 {
        let plus = 2 * (self.n - self.n_plus) + theta_rank_unchecked(World::SpO, &self.lambda_plus);
        let mut minus = 2 * (self.n - self.n_minus) + theta_rank_unchecked(World::SpO, &self.lambda_minus);
        if self.family == FamilyKind::Sp {
            minus += 1;
        }
        plus.min(minus)
    }

    /// Twist by the sign character.
    pub fn twist_sgn(&self) -> Result<OrthoSympDatum> {
        match self.family {
            FamilyKind::OPlus | FamilyKind::OMinus => Ok(OrthoSympDatum {
                lambda_minus: self.lambda_minus.transpose().normalize(),
                lambda_plus: self.lambda_plus.transpose().normalize(),
                ..self.clone()
            }),
            FamilyKind::OOdd => Ok(OrthoSympDatum { sgn: !self.sgn, ..self.clone() }),
            _ => Err(Error::Unsupported(format!("sign twist on {}", self.family))),
        }
    }

    /// Twist by the spinor-norm character: swaps the ±1 parts.
    pub fn twist_chi(&self) -> Result<OrthoSympDatum> {
        if self.family == FamilyKind::Sp || self.family == FamilyKind::U {
            return Err(Error::Unsupported(format!("spinor twist on {}", self.family)));
        }
        Ok(OrthoSympDatum {
            n_minus: self.n_plus,
            n_plus: self.n_minus,
            lambda_minus: self.lambda_plus.clone(),
            lambda_plus: self.lambda_minus.clone(),
            ..self.clone()
        })
    }
}

/// One eigenvalue slot of a unitary datum: a unipotent character of `U_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slot {
    pub n: u64,
    pub lambda: Symbol,
}

/// Datum of a character of `U_n`: the occupied eigenvalue slots and the
/// dimension left to the other eigenvalue orbits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitaryDatum {
    pub n: u64,
    pub slots: Vec<Slot>,
    pub rest: u64,
}

impl UnitaryDatum {
    pub fn new(n: u64, slots: Vec<Slot>) -> Result<UnitaryDatum> {
        let used: u64 = slots.iter().map(|s| s.n).sum();
        let rest = n
            .checked_sub(used)
            .ok_or_else(|| Error::InvalidDatum(format!("slot dimensions sum to {used}, more than n = {n}")))?;
        let d = UnitaryDatum {
            n,
            slots: slots.into_iter().map(|s| Slot { n: s.n, lambda: s.lambda.normalize() }).collect(),
            rest,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        let used: u64 = self.slots.iter().map(|s| s.n).sum();
        if used + self.rest != self.n {
            return Err(Error::InvalidDatum(format!(
                "slots ({used}) plus rest ({}) differ from n = {}",
                self.rest, self.n
            )));
        }
        for s in &self.slots {
            if s.n == 0 {
                return Err(Error::InvalidDatum("slot dimensions must be positive".into()));
            }
            if !GroupFamily::u(s.n).member(&s.lambda) {
                return Err(Error::InvalidDatum(format!("{} is not a unipotent symbol of U_{}", s.lambda, s.n)));
            }
        }
        Ok(())
    }

    /// Eigenvalue orbits outside the slots have size at least 2, so a rest of
    /// exactly 1 cannot come from a semisimple class.
    pub fn is_realizable(&self) -> bool {
        self.rest != 1
    }

    pub fn theta_rank(&self) -> u64 {
        self.slots.iter().map(|s| self.n - s.n + theta_rank_unchecked(World::U, &s.lambda)).fold(self.n, u64::min)
    }
}

/// Either kind of datum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DatumRepr", into = "DatumRepr")]
pub enum LusztigDatum {
    OrthoSymp(OrthoSympDatum),
    Unitary(UnitaryDatum),
}

impl LusztigDatum {
    pub fn theta_rank(&self) -> u64 {
        match self {
            LusztigDatum::OrthoSymp(d) => d.theta_rank(),
            LusztigDatum::Unitary(d) => d.theta_rank(),
        }
    }

    pub fn group(&self) -> GroupFamily {
        match self {
            LusztigDatum::OrthoSymp(d) => d.group(),
            LusztigDatum::Unitary(d) => GroupFamily::u(d.n),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            LusztigDatum::OrthoSymp(d) => d.validate(),
            LusztigDatum::Unitary(d) => d.validate(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("datum serializes")
    }

    pub fn from_json(text: &str) -> Result<LusztigDatum> {
        serde_json::from_str(text).map_err(|e| Error::InvalidDatum(e.to_string()))
    }
}

impl fmt::Display for LusztigDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

impl From<OrthoSympDatum> for LusztigDatum {
    fn from(d: OrthoSympDatum) -> LusztigDatum {
        LusztigDatum::OrthoSymp(d)
    }
}

impl From<UnitaryDatum> for LusztigDatum {
    fn from(d: UnitaryDatum) -> LusztigDatum {
        LusztigDatum::Unitary(d)
    }
}

/// The datum of a unipotent character.
pub fn embed_unipotent(c: &UnipotentChar) -> LusztigDatum {
    let n = c.family.n;
    match c.family.kind {
        FamilyKind::U => {
            let slots = if n == 0 { Vec::new() } else { vec![Slot { n, lambda: c.symbol.clone() }] };
            LusztigDatum::Unitary(UnitaryDatum { n, slots, rest: 0 })
        }
        FamilyKind::OOdd => LusztigDatum::OrthoSymp(OrthoSympDatum {
            family: c.family.kind,
            n,
            n_minus: 0,
            n_plus: n,
            lambda_minus: Symbol::from_vecs(vec![0], vec![]),
            lambda_plus: c.symbol.transpose().normalize(),
            sgn: c.sgn,
        }),
        kind => LusztigDatum::OrthoSymp(OrthoSympDatum {
            family: kind,
            n,
            n_minus: 0,
            n_plus: n,
            lambda_minus: Symbol::empty(),
            lambda_plus: c.symbol.clone(),
            sgn: false,
        }),
    }
}

/// Symbols allowed at the -1 (`minus`) or +1 part of a family, at rank `r`.
pub fn part_symbols(family: FamilyKind, minus: bool, r: u64) -> Vec<Symbol> {
    let kinds: &[FamilyKind] = match (family, minus) {
        (FamilyKind::Sp, false) | (FamilyKind::OOdd, _) => &[FamilyKind::Sp],
        _ => &[FamilyKind::OPlus, FamilyKind::OMinus],
    };
    let mut out = Vec::new();
    for &k in kinds {
        out.extend(enumerate_symbols_with_ceiling(GroupFamily::new(k, r), u64::MAX).expect("no ceiling"));
    }
    out
}

/// Every datum of a symplectic/orthogonal family at rank `n` (sgn flag off).
pub fn enumerate_orthosymp_data(family: FamilyKind, n: u64) -> Vec<OrthoSympDatum> {
    let mut out = Vec::new();
    for n_minus in 0..=n {
        let minus = part_symbols(family, true, n_minus);
        for n_plus in 0..=n - n_minus {
            let plus = part_symbols(family, false, n_plus);
            for lm in &minus {
                for lp in &plus {
                    out.push(OrthoSympDatum {
                        family,
                        n,
                        n_minus,
                        n_plus,
                        lambda_minus: lm.clone(),
                        lambda_plus: lp.clone(),
                        sgn: false,
                    });
                }
            }
        }
    }
    out
}

/// Every unitary datum of dimension `n`, slots listed as a multiset.
pub fn enumerate_unitary_data(n: u64) -> Vec<UnitaryDatum> {
    let mut kinds = Vec::new();
    for m in 1..=n {
        for s in enumerate_symbols_with_ceiling(GroupFamily::u(m), u64::MAX).expect("no ceiling") {
            kinds.push(Slot { n: m, lambda: s });
        }
    }
    fn go(kinds: &[Slot], from: usize, left: u64, n: u64, cur: &mut Vec<Slot>, out: &mut Vec<UnitaryDatum>) {
        out.push(UnitaryDatum { n, slots: cur.clone(), rest: left });
        for i in from..kinds.len() {
            if kinds[i].n <= left {
                cur.push(kinds[i].clone());
                go(kinds, i, left - kinds[i].n, n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&kinds, 0, n, n, &mut Vec::new(), &mut out);
    out
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct OrthoSympRepr {
    n: u64,
    n_minus: u64,
    n_plus: u64,
    lambda_minus: Symbol,
    lambda_plus: Symbol,
    #[serde(default)]
    sgn: bool,
}

#[derive(Serialize, Deserialize)]
struct UnitaryRepr {
    n: u64,
    #[serde(default)]
    slots: Vec<Slot>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rest: Option<u64>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "family")]
enum DatumRepr {
    #[serde(rename = "sp")]
    Sp(OrthoSympRepr),
    #[serde(rename = "o+")]
    OPlus(OrthoSympRepr),
    #[serde(rename = "o-")]
    OMinus(OrthoSympRepr),
    #[serde(rename = "oodd")]
    OOdd(OrthoSympRepr),
    #[serde(rename = "u")]
    U(UnitaryRepr),
}

impl TryFrom<DatumRepr> for LusztigDatum {
    type Error = Error;

    fn try_from(r: DatumRepr) -> Result<LusztigDatum> {
        let os = |family: FamilyKind, r: OrthoSympRepr| {
            let d = OrthoSympDatum {
                family,
                n: r.n,
                n_minus: r.n_minus,
                n_plus: r.n_plus,
                lambda_minus: empty_part(family, true, &r.lambda_minus),
                lambda_plus: empty_part(family, false, &r.lambda_plus),
                sgn: r.sgn,
            };
            d.validate()?;
            Ok(LusztigDatum::OrthoSymp(d))
        };
        match r {
            DatumRepr::Sp(r) => os(FamilyKind::Sp, r),
            DatumRepr::OPlus(r) => os(FamilyKind::OPlus, r),
            DatumRepr::OMinus(r) => os(FamilyKind::OMinus, r),
            DatumRepr::OOdd(r) => os(FamilyKind::OOdd, r),
            DatumRepr::U(r) => {
                let d = UnitaryDatum::new(r.n, r.slots)?;
                if let Some(rest) = r.rest {
                    if rest != d.rest {
                        return Err(Error::InvalidDatum(format!(
                            "rest {rest} does not match n minus the slot dimensions ({})",
                            d.rest
                        )));
                    }
                }
                Ok(LusztigDatum::Unitary(d))
            }
        }
    }
}

impl From<LusztigDatum> for DatumRepr {
    fn from(d: LusztigDatum) -> DatumRepr {
        match d {
            LusztigDatum::OrthoSymp(d) => {
                let r = OrthoSympRepr {
                    n: d.n,
                    n_minus: d.n_minus,
                    n_plus: d.n_plus,
                    lambda_minus: d.lambda_minus,
                    lambda_plus: d.lambda_plus,
                    sgn: d.sgn,
                };
                match d.family {
                    FamilyKind::Sp => DatumRepr::Sp(r),
                    FamilyKind::OPlus => DatumRepr::OPlus(r),
                    FamilyKind::OMinus => DatumRepr::OMinus(r),
                    _ => DatumRepr::OOdd(r),
                }
            }
            LusztigDatum::Unitary(d) => DatumRepr::U(UnitaryRepr { n: d.n, slots: d.slots, rest: Some(d.rest) }),
        }
    }
}
