//! Parabolic induction on unipotent characters: add one box to Υ at fixed defect.

use std::collections::BTreeSet;

use crate::datum::{LusztigDatum, OrthoSympDatum, Slot, UnitaryDatum};
use crate::error::{Error, Result};
use crate::family::{FamilyKind, GroupFamily, UnipotentChar, World};
use crate::symbol::Symbol;
use crate::theta::{partner_dimension, removals, theta_rank};

/// Constituents of the character induced one step up the Witt series.
///
/// ```
/// use thetarank::{successors, sym, GroupFamily, UnipotentChar};
///
/// let triv = UnipotentChar::new(GroupFamily::sp(2), &sym("[2|]"), false).unwrap();
/// let next: Vec<String> = successors(&triv).iter().map(|c| c.symbol.to_string()).collect();
/// assert_eq!(next.len(), 3);
/// assert!(next.contains(&"[3|]".to_string()));
/// ```
pub fn successors(c: &UnipotentChar) -> Vec<UnipotentChar> {
    let family = c.family.next();
    c.symbol.add_box().into_iter().map(|symbol| UnipotentChar { family, symbol, sgn: c.sgn }).collect()
}

fn steps_to(family: GroupFamily, m: u64) -> Result<u64> {
    let n = family.n;
    if m < n {
        return Err(Error::OutOfRange { what: "m", detail: format!("{m} is below the rank {n} of {family}") });
    }
    let step = family.step();
    if (m - n) % step != 0 {
        return Err(Error::OutOfRange { what: "m", detail: format!("{family} grows in steps of {step}") });
    }
    Ok((m - n) / step)
}

/// All characters reached from `c` by repeated successors, up to size `m`.
/// Sorted by symbol.
pub fn induced_set(c: &UnipotentChar, m: u64) -> Result<Vec<UnipotentChar>> {
    let steps = steps_to(c.family, m)?;
    let mut frontier: BTreeSet<Symbol> = BTreeSet::from([c.symbol.clone()]);
    for _ in 0..steps {
        frontier = frontier.iter().flat_map(|s| s.add_box()).collect();
    }
    let family = GroupFamily::new(c.family.kind, m);
    Ok(frontier.into_iter().map(|symbol| UnipotentChar { family, symbol, sgn: c.sgn }).collect())
}

/// Smallest Θ-rank in [`induced_set`].
pub fn min_theta_over_induced(c: &UnipotentChar, m: u64) -> Result<u64> {
    let set = induced_set(c, m)?;
    Ok(set.iter().map(theta_rank).min().expect("the induced set is never empty"))
}

/// Which row receives the extra box of the distinguished successor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowRow {
    /// Raise the first top entry; keeps the first removal.
    Top,
    /// Raise the first bottom entry; keeps the second removal.
    Bottom,
}

/// The row whose growth keeps the Θ-rank: the one fixing the smaller removal.
pub fn minimizing_row(c: &UnipotentChar) -> GrowRow {
    let world = c.family.kind.world();
    let (r1, r2) = removals(&c.symbol);
    if partner_dimension(world, &r1) <= partner_dimension(world, &r2) {
        GrowRow::Top
    } else {
        GrowRow::Bottom
    }
}

/// Raises the first entry of `row` on the representative with both rows non-empty.
pub fn grow_first_entry(c: &UnipotentChar, row: GrowRow) -> UnipotentChar {
    let rep = c.symbol.with_nonempty_rows();
    let (mut top, mut bottom) = (rep.top().to_vec(), rep.bottom().to_vec());
    match row {
        GrowRow::Top => top[0] += 1,
        GrowRow::Bottom => bottom[0] += 1,
    }
    let symbol = Symbol::from_vecs(top, bottom).normalize();
    UnipotentChar { family: c.family.next(), symbol, sgn: c.sgn }
}

/// A successor with the same Θ-rank as `c`.
pub fn distinguished_successor(c: &UnipotentChar) -> UnipotentChar {
    grow_first_entry(c, minimizing_row(c))
}

/// Where a unitary datum grows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlotChoice {
    /// Grow the slot with this index.
    Explicit(usize),
    /// Open a new slot of dimension 2.
    Empty,
}

fn orthosymp_successors(d: &OrthoSympDatum) -> Vec<OrthoSympDatum> {
    d.lambda_plus
        .add_box()
        .into_iter()
        .map(|lambda_plus| OrthoSympDatum { n: d.n + 1, n_plus: d.n_plus + 1, lambda_plus, ..d.clone() })
        .collect()
}

/// Successors of a unitary datum growing the chosen slot by two dimensions.
pub fn unitary_successors(d: &UnitaryDatum, choice: SlotChoice) -> Result<Vec<UnitaryDatum>> {
    let grown: Vec<(usize, Slot)> = match choice {
        SlotChoice::Explicit(j) => {
            let slot = d.slots.get(j).ok_or_else(|| Error::OutOfRange {
                what: "slot",
                detail: format!("index {j} with {} slots", d.slots.len()),
            })?;
            slot.lambda.add_box().into_iter().map(|lambda| (j, Slot { n: slot.n + 2, lambda })).collect()
        }
        SlotChoice::Empty => {
            Symbol::empty().add_box().into_iter().map(|lambda| (d.slots.len(), Slot { n: 2, lambda })).collect()
        }
    };
    Ok(grown
        .into_iter()
        .map(|(j, slot)| {
            let mut slots = d.slots.clone();
            if j == slots.len() {
                slots.push(slot);
            } else {
                slots[j] = slot;
            }
            UnitaryDatum { n: d.n + 2, slots, rest: d.rest }
        })
        .collect())
}

/// Successors of a datum: the (+) part grows for symplectic and orthogonal
/// groups, any slot (or a new one) for unitary groups.
pub fn datum_successors(d: &LusztigDatum) -> Vec<LusztigDatum> {
    match d {
        LusztigDatum::OrthoSymp(o) => orthosymp_successors(o).into_iter().map(LusztigDatum::from).collect(),
        LusztigDatum::Unitary(u) => {
            let mut out = Vec::new();
            let choices = (0..u.slots.len()).map(SlotChoice::Explicit).chain([SlotChoice::Empty]);
            for choice in choices {
                out.extend(unitary_successors(u, choice).expect("valid index").into_iter().map(LusztigDatum::from));
            }
            out
        }
    }
}

/// Smallest Θ-rank among the successors of `d` and of its twists by linear
/// characters that data can express (the spinor twist for orthogonal groups).
pub fn min_theta_over_twisted_successors(d: &LusztigDatum) -> u64 {
    let mut twists = vec![d.clone()];
    if let LusztigDatum::OrthoSymp(o) = d {
        if o.family != FamilyKind::Sp {
            twists.push(o.twist_chi().expect("orthogonal datum").into());
        }
    }
    twists.iter().flat_map(datum_successors).map(|s| s.theta_rank()).min().expect("every datum has a successor")
}

/// Whether the Θ-rank of `d` comes from its (+) part, the only part successors touch.
pub fn theta_from_plus_part(d: &OrthoSympDatum) -> bool {
    let plus = 2 * (d.n - d.n_plus) + crate::theta::theta_rank_unchecked(World::SpO, &d.lambda_plus);
    plus == d.theta_rank()
}
