//! The underline-theta sub-correspondence between unipotent characters.
//!
//! A source symbol `Λ'` is sent to the target symbol `Λ` with
//! `Υ(Λ) = swap(Υ(Λ')) ∪ {τ}`, where `τ` joins the top row of `Υ(Λ)` in
//! cases I and III and the bottom row in cases II and IV. The defect of `Λ`
//! is an affine function of the defect of `Λ'`; which one is fixed by
//! calibrating against the first-occurrence formulas (see [`defect_map`]).

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, ParseError, Result};
use crate::family::{enumerate_symbols_with_ceiling, unitary_defect, FamilyKind, GroupFamily, UnipotentChar, World};
use crate::partition::Bipartition;
use crate::symbol::Symbol;
use crate::theta::{first_occurrence, Tower};

/// The four kinds of dual pair carrying an underline-theta correspondence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PairCase {
    /// `(O+_2n', Sp_2n)` in either orientation.
    I,
    /// `(O-_2n', Sp_2n)` in either orientation.
    II,
    /// Unitary groups whose dimensions have the same parity.
    III,
    /// Unitary groups whose dimensions have opposite parity.
    IV,
}

impl PairCase {
    pub const ALL: [PairCase; 4] = [PairCase::I, PairCase::II, PairCase::III, PairCase::IV];

    pub fn world(self) -> World {
        match self {
            PairCase::I | PairCase::II => World::SpO,
            PairCase::III | PairCase::IV => World::U,
        }
    }

    /// Whether `τ` joins the top row of the target bipartition.
    pub fn tau_on_top(self) -> bool {
        matches!(self, PairCase::I | PairCase::III)
    }

    /// Partner family kind of `kind` in this case, if `kind` takes part.
    pub fn partner(self, kind: FamilyKind) -> Option<FamilyKind> {
        match (self, kind) {
            (PairCase::I, FamilyKind::Sp) => Some(FamilyKind::OPlus),
            (PairCase::I, FamilyKind::OPlus) => Some(FamilyKind::Sp),
            (PairCase::II, FamilyKind::Sp) => Some(FamilyKind::OMinus),
            (PairCase::II, FamilyKind::OMinus) => Some(FamilyKind::Sp),
            (PairCase::III | PairCase::IV, FamilyKind::U) => Some(FamilyKind::U),
            _ => None,
        }
    }

    /// The tower in which the partners of a character of `kind` live.
    pub fn tower_of(self, kind: FamilyKind) -> Option<Tower> {
        match (self, kind) {
            (PairCase::I, FamilyKind::Sp) => Some(Tower::OPlusOfSp),
            (PairCase::I, FamilyKind::OPlus) => Some(Tower::SpOfOPlus),
            (PairCase::II, FamilyKind::Sp) => Some(Tower::OMinusOfSp),
            (PairCase::II, FamilyKind::OMinus) => Some(Tower::SpOfOMinus),
            (PairCase::III, FamilyKind::U) => Some(Tower::USameParity),
            (PairCase::IV, FamilyKind::U) => Some(Tower::UOppositeParity),
            _ => None,
        }
    }

    fn parity_ok(self, source_dim: u64, target_dim: u64) -> bool {
        match self {
            PairCase::III => (source_dim + target_dim) % 2 == 0,
            PairCase::IV => (source_dim + target_dim) % 2 == 1,
            _ => true,
        }
    }
}

impl fmt::Display for PairCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for PairCase {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<PairCase, ParseError> {
        match s.trim().to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(PairCase::I),
            "II" | "2" => Ok(PairCase::II),
            "III" | "3" => Ok(PairCase::III),
            "IV" | "4" => Ok(PairCase::IV),
            _ => Err(ParseError::new(s.trim(), "unknown pair case (expected I, II, III or IV)")),
        }
    }
}

/// `d ↦ sign·d + shift`, with unitary results pushed back into the unitary
/// defect convention (`|d|` lowered by one).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DefectMap {
    pub sign: i64,
    pub shift: i64,
}

impl DefectMap {
    pub const CANDIDATES: [DefectMap; 4] = [
        DefectMap { sign: 1, shift: 1 },
        DefectMap { sign: 1, shift: -1 },
        DefectMap { sign: -1, shift: 1 },
        DefectMap { sign: -1, shift: -1 },
    ];

    pub fn apply(self, world: World, d: i64) -> i64 {
        let e = self.sign * d + self.shift;
        if world == World::U && !unitary_defect(e) {
            let t = e.abs() - 1;
            if t % 2 == 0 {
                t
            } else {
                -t
            }
        } else {
            e
        }
    }
}

impl fmt::Display for DefectMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { "-d" } else { "d" };
        if self.shift < 0 {
            write!(f, "{s} - {}", -self.shift)
        } else {
            write!(f, "{s} + {}", self.shift)
        }
    }
}

/// Symbols used to calibrate the defect maps: every target family at this size.
const CALIBRATION_SIZE: u64 = 5;

fn defect_cost(world: World, d: i64) -> u64 {
    match world {
        World::SpO => Symbol::quadratic(d),
        World::U => {
            let a = d.unsigned_abs();
            a * (a + 1) / 2
        }
    }
}

fn target_families(case: PairCase, size: u64) -> Vec<GroupFamily> {
    match case {
        PairCase::I => vec![GroupFamily::sp(size), GroupFamily::o_plus(size)],
        PairCase::II => vec![GroupFamily::sp(size), GroupFamily::o_minus(size)],
        PairCase::III | PairCase::IV => vec![GroupFamily::u(size)],
    }
}

fn map_survives(case: PairCase, map: DefectMap) -> bool {
    for size in 0..=CALIBRATION_SIZE {
        for family in target_families(case, size) {
            let Ok(symbols) = enumerate_symbols_with_ceiling(family, u64::MAX) else { return false };
            for s in symbols {
                let Some(tower) = case.tower_of(family.kind) else { return false };
                let c = UnipotentChar { family, symbol: s.clone(), sgn: false };
                let Ok(expected) = first_occurrence(&c, tower) else { return false };
                match min_source_with(case, &[map], family, &s) {
                    Ok(got) if got == expected => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

fn calibrate() -> Result<[DefectMap; 4], String> {
    let mut out = [DefectMap { sign: 0, shift: 0 }; 4];
    for (i, case) in PairCase::ALL.into_iter().enumerate() {
        let survivors: Vec<DefectMap> = DefectMap::CANDIDATES.into_iter().filter(|&m| map_survives(case, m)).collect();
        match survivors.as_slice() {
            [m] => out[i] = *m,
            [] => return Err(format!("no defect map reproduces the first occurrences for case {case}")),
            many => {
                let list: Vec<String> = many.iter().map(|m| m.to_string()).collect();
                return Err(format!("several defect maps fit case {case}: {}", list.join(", ")));
            }
        }
    }
    Ok(out)
}

/// The calibrated defect map of a case. Computed once per process.
pub fn defect_map(case: PairCase) -> Result<DefectMap> {
    static TABLE: OnceLock<Result<[DefectMap; 4], String>> = OnceLock::new();
    match TABLE.get_or_init(calibrate) {
        Ok(table) => Ok(table[case as usize]),
        Err(e) => Err(Error::Calibration(e.clone())),
    }
}

/// A target symbol with its `τ` and defect.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnderlineTheta {
    pub lambda: Symbol,
    #[serde(skip)]
    pub family: GroupFamily,
    pub tau: u64,
    pub defect: i64,
}

fn source_family(case: PairCase, s: &Symbol) -> Result<GroupFamily> {
    let world = case.world();
    let family =
        world.classify(s).ok_or_else(|| Error::NotInWorld { symbol: s.to_string(), world: world.to_string() })?;
    if case.partner(family.kind).is_none() {
        return Err(Error::NotInFamily { symbol: s.to_string(), family: format!("a family of case {case}") });
    }
    Ok(family)
}

fn image(case: PairCase, map: DefectMap, source: &Symbol, target: u64) -> Result<UnderlineTheta> {
    let world = case.world();
    let family = source_family(case, source)?;
    let no_partner =
        |reason: String| Error::NoPartner { symbol: source.to_string(), target: format!("{target}"), reason };
    let d = map.apply(world, source.defect());
    let kind = case.partner(family.kind).expect("checked by source_family");
    if !kind.allows_defect(d) {
        return Err(Error::Calibration(format!("defect {d} is not in family {kind}")));
    }
    let upsilon = source.upsilon();
    let cost = defect_cost(world, d) as i128;
    let tau = match world {
        World::SpO => target as i128 - upsilon.size() as i128 - cost,
        World::U => {
            if !case.parity_ok(family.dimension(), target) {
                return Err(no_partner(format!(
                    "case {case} needs {} parity",
                    if case == PairCase::III { "equal" } else { "opposite" }
                )));
            }
            let room = target as i128 - cost;
            if room.rem_euclid(2) != 0 {
                return Err(no_partner(format!("defect {d} only reaches dimensions of the other parity")));
            }
            room / 2 - upsilon.size() as i128
        }
    };
    if tau < 0 {
        return Err(no_partner(format!("target lies below the first occurrence (tau = {tau})")));
    }
    let tau = tau as u64;
    let swapped = upsilon.swap();
    let grown = if tau == 0 {
        swapped
    } else if case.tau_on_top() {
        Bipartition::new(swapped.top.with_part(tau), swapped.bottom)
    } else {
        Bipartition::new(swapped.top, swapped.bottom.with_part(tau))
    };
    let lambda = Symbol::from_upsilon(&grown, d);
    Ok(UnderlineTheta { family: GroupFamily::new(kind, target), lambda, tau, defect: d })
}

/// Image of `source` in the partner group of size `target` (symbol rank for
/// symplectic and orthogonal targets, dimension for unitary ones).
///
/// ```
/// use thetarank::{sym, underline_theta, PairCase};
///
/// let cusp = underline_theta(PairCase::I, &sym("[|3,2,1,0]"), 6).unwrap();
/// assert_eq!(cusp.lambda, sym("[4,3,2,1,0|]"));
/// assert_eq!(cusp.tau, 0);
/// ```
pub fn underline_theta(case: PairCase, source: &Symbol, target: u64) -> Result<UnderlineTheta> {
    let map = defect_map(case)?;
    image(case, map, source, target)
}

/// Smallest target size at which `source` has an image (`τ = 0` there).
pub fn min_target(case: PairCase, source: &Symbol) -> Result<u64> {
    let map = defect_map(case)?;
    let family = source_family(case, source)?;
    let world = case.world();
    let d = map.apply(world, source.defect());
    let size = source.upsilon().size();
    let target = match world {
        World::SpO => size + defect_cost(world, d),
        World::U => 2 * size + defect_cost(world, d),
    };
    if !case.parity_ok(family.dimension(), target) {
        return Err(Error::NoPartner {
            symbol: source.to_string(),
            target: format!("case {case}"),
            reason: "no target dimension of the required parity".into(),
        });
    }
    Ok(target)
}

/// A source symbol mapping onto a given target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Preimage {
    pub symbol: Symbol,
    pub family: GroupFamily,
    pub tau: u64,
}

fn preimages_with(case: PairCase, maps: &[DefectMap], family: GroupFamily, target: &Symbol) -> Result<Vec<Preimage>> {
    let world = case.world();
    let kind = case
        .partner(family.kind)
        .ok_or_else(|| Error::NotInFamily { symbol: target.to_string(), family: format!("a family of case {case}") })?;
    let d = target.defect();
    let upsilon = target.upsilon();
    let row = if case.tau_on_top() { &upsilon.top } else { &upsilon.bottom };
    let mut taus = vec![0];
    taus.extend(row.parts().iter().copied());
    taus.dedup();
    let reach = d.abs() + 3;
    let mut out = Vec::new();
    for &map in maps {
        for d_src in -reach..=reach {
            if !kind.allows_defect(d_src) || map.apply(world, d_src) != d {
                continue;
            }
            for &tau in &taus {
                let rest = if tau == 0 {
                    upsilon.clone()
                } else if case.tau_on_top() {
                    Bipartition::new(upsilon.top.without_part(tau).expect("tau is a part"), upsilon.bottom.clone())
                } else {
                    Bipartition::new(upsilon.top.clone(), upsilon.bottom.without_part(tau).expect("tau is a part"))
                };
                let src = Symbol::from_upsilon(&rest.swap(), d_src);
                let src_family = GroupFamily::new(kind, kind.size_of(&src));
                match image(case, map, &src, family.n) {
                    Ok(img) if img.lambda == *target && img.tau == tau => {
                        let p = Preimage { symbol: src, family: src_family, tau };
                        if !out.contains(&p) {
                            out.push(p);
                        }
                    }
                    _ => {}
                }
            }
        }
    }
    out.sort_by_key(|p| (p.family.dimension(), p.symbol.clone()));
    Ok(out)
}

/// Every source symbol whose image in `family` is `target`, smallest source first.
pub fn preimages(case: PairCase, family: GroupFamily, target: &Symbol) -> Result<Vec<Preimage>> {
    let map = defect_map(case)?;
    if !family.member(target) {
        return Err(Error::NotInFamily { symbol: target.to_string(), family: family.to_string() });
    }
    preimages_with(case, &[map], family, &target.normalize())
}

fn min_source_with(case: PairCase, maps: &[DefectMap], family: GroupFamily, target: &Symbol) -> Result<u64> {
    preimages_with(case, maps, family, target)?.first().map(|p| p.family.dimension()).ok_or_else(|| Error::NoPartner {
        symbol: target.to_string(),
        target: format!("case {case}"),
        reason: "no source symbol maps onto it".into(),
    })
}

/// Dimension of the smallest source group with a symbol mapping onto `target`.
pub fn min_source(case: PairCase, family: GroupFamily, target: &Symbol) -> Result<u64> {
    let map = defect_map(case)?;
    if !family.member(target) {
        return Err(Error::NotInFamily { symbol: target.to_string(), family: family.to_string() });
    }
    min_source_with(case, &[map], family, &target.normalize())
}

/// Smallest source dimension, over the towers of the symbol's family, at
/// which the symbol (or its sign twist) is an underline-theta image.
///
/// ```
/// use thetarank::{sym, underline_theta_rank, World};
///
/// assert_eq!(underline_theta_rank(&sym("[2,1,0|2,1]"), World::SpO).unwrap(), 4);
/// ```
pub fn underline_theta_rank(s: &Symbol, world: World) -> Result<u64> {
    let family =
        world.classify(s).ok_or_else(|| Error::NotInWorld { symbol: s.to_string(), world: world.to_string() })?;
    let s = s.normalize();
    let attempts: Vec<(PairCase, GroupFamily, Symbol)> = match family.kind {
        FamilyKind::Sp => vec![(PairCase::I, family, s.clone()), (PairCase::II, family, s)],
        FamilyKind::OPlus => vec![(PairCase::I, family, s.clone()), (PairCase::I, family, s.transpose().normalize())],
        FamilyKind::OMinus => {
            vec![(PairCase::II, family, s.clone()), (PairCase::II, family, s.transpose().normalize())]
        }
        FamilyKind::OOdd => {
            let t = s.transpose().normalize();
            let sp = GroupFamily::sp(family.n);
            vec![(PairCase::I, sp, t.clone()), (PairCase::II, sp, t)]
        }
        FamilyKind::U => vec![(PairCase::III, family, s.clone()), (PairCase::IV, family, s)],
    };
    let mut best: Option<u64> = None;
    let mut last_err = None;
    for (case, fam, sym) in attempts {
        match min_source(case, fam, &sym) {
            Ok(v) => best = Some(best.map_or(v, |b| b.min(v))),
            Err(e @ Error::Calibration(_)) => return Err(e),
            Err(e) => last_err = Some(e),
        }
    }
    best.ok_or_else(|| last_err.expect("at least one attempt"))
}
