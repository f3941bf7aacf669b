//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Values are recomputed here from raw rows or closed forms wherever that is
//! cheap; the library is only trusted for enumeration.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use thetarank::branching::{distinguished_successor, min_theta_over_induced, successors};
use thetarank::correspondence::{min_source, min_target, underline_theta, underline_theta_rank, PairCase};
use thetarank::datum::{embed_unipotent, enumerate_orthosymp_data, LusztigDatum, OrthoSympDatum};
use thetarank::family::{
    count_symbols, enumerate_symbols, enumerate_unipotent, unitary_defect, FamilyKind, GroupFamily, UnipotentChar,
    World,
};
use thetarank::theta::{first_occurrence, theta_rank, theta_rank_symbol, tower_occurrences, Tower};
use thetarank::verify::counting_oracle;
use thetarank::witness::{cuspidal, is_admissible, steinberg, witness};
use thetarank::{sym, Symbol};

/// Largest Witt index for unitary groups in the exhaustive criteria: dimension 13.
const U_INDEX: u64 = 6;

#[derive(Default)]
struct Tally {
    cases: u64,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, input: impl std::fmt::Display, expected: T, got: T) {
        let ok = expected == got;
        self.check(ok, || format!("{input}: expected {expected:?}, got {got:?}"));
    }
}

fn spo(max_rank: u64) -> Vec<GroupFamily> {
    (0..=max_rank).flat_map(|n| FamilyKind::SYMPLECTIC_ORTHOGONAL.map(|k| GroupFamily::new(k, n))).collect()
}

fn unitary(max_dim: u64) -> Vec<GroupFamily> {
    (0..=max_dim).map(GroupFamily::u).collect()
}

fn chars(family: GroupFamily) -> Vec<UnipotentChar> {
    enumerate_unipotent(family).expect("within the ceiling")
}

fn raw_theta(s: &Symbol, world: World) -> u64 {
    common::theta(s.top(), s.bottom(), world == World::U) as u64
}

fn steinberg_values(t: &mut Tally) {
    for n in 1..=20u64 {
        for (kind, expected, count) in [
            (FamilyKind::Sp, 2 * n, 1),
            (FamilyKind::OPlus, 2 * n - 2, 2),
            (FamilyKind::OMinus, 2 * n - 2, 2),
            (FamilyKind::OOdd, 2 * n, 2),
            (FamilyKind::U, n - 1, 1),
        ] {
            let input = format!("{kind}:{n} Steinberg");
            match steinberg(kind, n) {
                Ok(list) => {
                    t.eq(&input, count, list.len());
                    for c in list {
                        t.eq(format!("{c}"), expected, theta_rank(&c));
                        t.eq(format!("{c} rows"), expected, raw_theta(&c.symbol, kind.world()));
                    }
                }
                Err(e) => t.check(false, || format!("{input}: {e}")),
            }
        }
    }
    // Oodd sign flags both appear.
    let flags: BTreeSet<bool> = steinberg(FamilyKind::OOdd, 3).unwrap().iter().map(|c| c.sgn).collect();
    t.eq("oodd:3 Steinberg sign flags", BTreeSet::from([false, true]), flags);
}

fn cuspidal_values(t: &mut Tally) {
    for d in 0..=5u64 {
        let mut cases = vec![
            (FamilyKind::Sp, 2 * d * d),
            (FamilyKind::OOdd, 2 * d * d),
            (FamilyKind::U, d * d.saturating_sub(1) / 2),
        ];
        if d >= 1 {
            let kind = if d % 2 == 0 { FamilyKind::OPlus } else { FamilyKind::OMinus };
            cases.push((kind, 2 * d * (d - 1)));
            let other = if kind == FamilyKind::OPlus { FamilyKind::OMinus } else { FamilyKind::OPlus };
            t.check(cuspidal(other, d).is_err(), || format!("{other} d={d}: cuspidal with the wrong sign accepted"));
        }
        for (kind, expected) in cases {
            match cuspidal(kind, d) {
                Ok(list) => {
                    for c in list {
                        t.check(c.symbol.upsilon().size() == 0, || format!("{c}: Υ not empty"));
                        t.eq(format!("{c}"), expected, theta_rank(&c));
                        t.eq(format!("{c} rows"), expected, raw_theta(&c.symbol, kind.world()));
                    }
                }
                Err(e) => t.check(false, || format!("{kind} d={d}: {e}")),
            }
        }
    }
}

fn parity_and_range(t: &mut Tally) {
    for family in spo(7) {
        for c in chars(family) {
            let v = theta_rank(&c);
            t.check(v % 2 == 0 && v <= 2 * family.n, || format!("{c}: Θ-rank {v} odd or above {}", 2 * family.n));
        }
    }
    for family in unitary(10) {
        for c in chars(family) {
            let v = theta_rank(&c);
            t.check(v <= family.n, || format!("{c}: Θ-rank {v} above {}", family.n));
        }
    }
}

fn classification(t: &mut Tally) {
    for family in spo(6) {
        let n = family.n;
        let st: BTreeSet<Symbol> = match family.kind {
            FamilyKind::Sp | FamilyKind::OOdd => {
                steinberg(family.kind, n).unwrap().into_iter().map(|c| c.symbol).collect()
            }
            _ => BTreeSet::new(),
        };
        for c in chars(family) {
            let at_top = theta_rank(&c) == 2 * n;
            let expected = match family.kind {
                FamilyKind::Sp | FamilyKind::OOdd => st.contains(&c.symbol),
                FamilyKind::OPlus => n == 0,
                _ => false,
            };
            t.eq(format!("{c} has Θ-rank 2n"), expected, at_top);
        }
    }
    for family in unitary(10).into_iter().filter(|f| f.n >= 1) {
        for c in chars(family) {
            let v = theta_rank(&c);
            t.check(v != family.n, || format!("{c}: Θ-rank equals n"));
        }
    }
}

fn existence(t: &mut Tally) {
    let families: Vec<GroupFamily> = spo(8).into_iter().chain(unitary(8)).collect();
    for family in families {
        let n = family.n;
        let admissible = |k: u64| match family.kind {
            FamilyKind::Sp => k <= 2 * n,
            FamilyKind::OPlus | FamilyKind::OOdd => k % 2 == 0 && k <= 2 * n,
            FamilyKind::OMinus => n >= 1 && k % 2 == 0 && k <= 2 * n,
            FamilyKind::U => k <= n && (n >= 2 || k == 0),
        };
        for k in 0..=2 * n + 2 {
            t.eq(format!("{family} k={k} admissible"), admissible(k), is_admissible(family, k));
            match (admissible(k), witness(family, k)) {
                (true, Ok(w)) => t.eq(format!("{family} witness {w}"), k, w.theta_rank()),
                (true, Err(e)) => t.check(false, || format!("{family} k={k}: {e}")),
                (false, Ok(w)) => t.check(false, || format!("{family} k={k}: inadmissible but got {w}")),
                (false, Err(_)) => t.check(true, String::new),
            }
        }
        for c in chars(family) {
            let v = theta_rank(&c);
            t.check(admissible(v), || format!("{c}: inadmissible Θ-rank {v}"));
        }
    }
}

fn pseudo_unipotent(t: &mut Tally) {
    let sp0 = sym("[0|]");
    for r in 1..=6 {
        for kind in [FamilyKind::OPlus, FamilyKind::OMinus] {
            for lm in enumerate_symbols(GroupFamily::new(kind, r)).unwrap() {
                match OrthoSympDatum::new(FamilyKind::Sp, r, &lm, &sp0, false) {
                    Ok(d) => {
                        let v = d.theta_rank();
                        t.eq(format!("sp:{r} λ- {lm}"), raw_theta(&lm, World::SpO) + 1, v);
                        t.check(v % 2 == 1, || format!("sp:{r} λ- {lm}: even Θ-rank {v}"));
                    }
                    Err(e) => t.check(false, || format!("sp:{r} λ- {lm}: {e}")),
                }
            }
        }
    }
    for n in 1..=20 {
        let lm = Symbol::new(vec![n], vec![0]).unwrap();
        let d = OrthoSympDatum::new(FamilyKind::Sp, n, &lm, &sp0, false).unwrap();
        t.eq(format!("sp:{n} datum of degree (q^n+1)/2"), 1, d.theta_rank());
    }
}

struct Branching {
    unitary_jumps: Vec<String>,
}

fn branching(t: &mut Tally, out: &mut Branching) {
    let families: Vec<GroupFamily> = spo(6).into_iter().chain(unitary(2 * U_INDEX + 1)).collect();
    for family in families {
        for c in chars(family) {
            let v = theta_rank(&c);
            for next in successors(&c) {
                let w = theta_rank(&next);
                let ok = w == v || w == v + 2;
                if !ok && family.kind == FamilyKind::U {
                    out.unitary_jumps.push(format!("{c} -> {}: {v} -> {w}", next.symbol));
                }
                t.check(ok, || format!("{c} -> {}: jump {v} -> {w}", next.symbol));
            }
            for steps in 1..=3 {
                let m = family.n + steps * family.step();
                match min_theta_over_induced(&c, m) {
                    Ok(min) => t.eq(format!("{c} induced to {m}"), v, min),
                    Err(e) => t.check(false, || format!("{c} induced to {m}: {e}")),
                }
            }
            let d = distinguished_successor(&c);
            t.eq(format!("{c} distinguished {}", d.symbol), v, theta_rank(&d));
        }
    }
}

fn towers(t: &mut Tally) {
    let families: Vec<GroupFamily> = spo(6).into_iter().chain(unitary(2 * U_INDEX + 1)).collect();
    for family in families {
        for c in chars(family) {
            match tower_occurrences(&c) {
                Ok([(_, _, a), (_, _, b)]) => t.eq(
                    format!("{c} tower minimum"),
                    theta_rank_symbol(family.kind.world(), &c.symbol).unwrap(),
                    a.min(b),
                ),
                Err(e) => t.check(false, || format!("{c}: {e}")),
            }
        }
    }
    for n in 0..=7 {
        for c in chars(GroupFamily::sp(n)) {
            let sum =
                first_occurrence(&c, Tower::OPlusOfSp).unwrap() + first_occurrence(&c, Tower::OMinusOfSp).unwrap();
            t.check(sum <= 4 * n + 2, || format!("{c}: tower sum {sum} above {}", 4 * n + 2));
        }
    }
}

fn calibration(t: &mut Tally) {
    let families: Vec<GroupFamily> = spo(5).into_iter().chain(unitary(5)).collect();
    for family in &families {
        let world = family.kind.world();
        for s in enumerate_symbols(*family).unwrap() {
            match underline_theta_rank(&s, world) {
                Ok(v) => t.eq(format!("{family} {s} underline-theta rank"), raw_theta(&s, world), v),
                Err(e) => t.check(false, || format!("{family} {s}: {e}")),
            }
        }
    }
    for case in PairCase::ALL {
        for family in families.iter().filter(|f| case.partner(f.kind).is_some()) {
            let tower = case.tower_of(family.kind).unwrap();
            for s in enumerate_symbols(*family).unwrap() {
                let input = format!("case {case} {family} {s}");
                let c = UnipotentChar::new(*family, &s, false).unwrap();
                let fo = first_occurrence(&c, tower).unwrap();
                match min_source(case, *family, &s) {
                    Ok(v) => t.eq(format!("{input} smallest source"), fo, v),
                    Err(e) => t.check(false, || format!("{input}: {e}")),
                }
                let image = min_target(case, &s).and_then(|n| underline_theta(case, &s, n));
                match image {
                    Ok(img) => {
                        t.eq(format!("{input} τ at the smallest target"), 0, img.tau);
                        let back = case.tower_of(img.family.kind).unwrap();
                        let ic = UnipotentChar::new(img.family, &img.lambda, false).unwrap();
                        let u = img.lambda.upsilon();
                        let row = if case.tau_on_top() { u.top.largest() } else { u.bottom.largest() };
                        let expected = family.dimension() as i64 - 2 * row as i64;
                        t.eq(
                            format!("{input} -> {}", img.lambda),
                            expected,
                            first_occurrence(&ic, back).unwrap() as i64,
                        );
                    }
                    // Unitary sources whose parity admits no partner.
                    Err(_) if case.world() == World::U => t.check(true, String::new),
                    Err(e) => t.check(false, || format!("{input}: {e}")),
                }
            }
        }
    }
    let o8 = sym("[|3,2,1,0]");
    let sp12 = sym("[4,3,2,1,0|]");
    match underline_theta(PairCase::I, &o8, 6) {
        Ok(img) => t.eq("cuspidal O+_8 -> Sp_12", (sp12.clone(), 0), (img.lambda, img.tau)),
        Err(e) => t.check(false, || format!("cuspidal O+_8 -> Sp_12: {e}")),
    }
    match underline_theta(PairCase::I, &sp12, 4) {
        Ok(img) => {
            let ok = img.tau == 0 && (img.lambda == o8 || img.lambda == o8.transpose());
            t.check(ok, || format!("cuspidal Sp_12 -> O+_8: got {} with τ {}", img.lambda, img.tau));
        }
        Err(e) => t.check(false, || format!("cuspidal Sp_12 -> O+_8: {e}")),
    }
}

fn structural_symbol(t: &mut Tally, s: &Symbol) {
    let (a, b) = (s.top(), s.bottom());
    let d = s.defect();
    t.eq(format!("{s} rank"), common::rank(a, b), s.rank() as i64);
    t.eq(format!("{s} rank identity"), s.rank(), s.upsilon().size() + Symbol::quadratic(d));
    t.eq(format!("{s} unitary rank"), s.rank_u(), s.rank_u_closed_form());
    t.eq(format!("{s} unitary rank rows"), common::rank_u(a, b), s.rank_u() as i64);
    t.eq(format!("{s} Υ round trip"), s.normalize(), Symbol::from_upsilon(&s.upsilon(), d));
    let mut worlds = vec![World::SpO];
    if unitary_defect(d) {
        worlds.push(World::U);
    }
    for world in worlds {
        let v = theta_rank_symbol(world, s).unwrap();
        t.eq(format!("{s} {world} rows"), raw_theta(s, world), v);
        let mut e = s.clone();
        for k in 1..=3 {
            e = e.expand();
            t.eq(format!("{s} {world} expanded {k}x"), v, theta_rank_symbol(world, &e).unwrap());
        }
        if world == World::SpO {
            t.eq(format!("{s} transposed"), v, theta_rank_symbol(world, &s.transpose()).unwrap());
        }
    }
}

fn structural(t: &mut Tally) {
    let families: Vec<GroupFamily> = spo(6).into_iter().chain(unitary(2 * U_INDEX + 1)).collect();
    for family in families {
        for c in chars(family) {
            structural_symbol(t, &c.symbol);
            if matches!(family.kind, FamilyKind::OPlus | FamilyKind::OMinus | FamilyKind::OOdd) {
                let tw = c.sgn_twist().unwrap();
                t.eq(format!("{c} sign twist"), theta_rank(&c), theta_rank(&tw));
            }
            let LusztigDatum::OrthoSymp(d) = embed_unipotent(&c) else { continue };
            if d.family != FamilyKind::Sp {
                t.eq(format!("{c} datum sign twist"), d.theta_rank(), d.twist_sgn().unwrap().theta_rank());
                t.eq(format!("{c} datum spinor twist"), d.theta_rank(), d.twist_chi().unwrap().theta_rank());
            }
        }
    }
    for n in 0..=6 {
        for kind in [FamilyKind::OPlus, FamilyKind::OMinus, FamilyKind::OOdd] {
            for d in enumerate_orthosymp_data(kind, n) {
                let v = d.theta_rank();
                t.eq(format!("{} sign twist", LusztigDatum::from(d.clone())), v, d.twist_sgn().unwrap().theta_rank());
                t.eq(format!("{} spinor twist", LusztigDatum::from(d.clone())), v, d.twist_chi().unwrap().theta_rank());
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e7a_2a4c);
    for _ in 0..10_000 {
        let mut row = || {
            let len = rng.gen_range(0..=12);
            let mut v: Vec<u64> = sample(&mut rng, 41, len).into_iter().map(|x| x as u64).collect();
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        };
        let (a, b) = (row(), row());
        structural_symbol(t, &Symbol::new(a, b).unwrap());
    }
}

fn counting(t: &mut Tally) {
    for family in spo(8).into_iter().chain(unitary(8)) {
        let oracle = counting_oracle(family).unwrap();
        t.eq(format!("{family} enumeration"), oracle, enumerate_symbols(family).unwrap().len() as u64);
        t.eq(format!("{family} count"), oracle, count_symbols(family));
    }
    for n in 0..=4 {
        for kind in ["sp", "o+", "o-", "oodd", "u"] {
            let family: GroupFamily = format!("{kind}:{n}").parse().unwrap();
            t.eq(
                format!("{family} brute force"),
                common::brute_family(kind, n).len() as u64,
                counting_oracle(family).unwrap(),
            );
        }
    }
    t.eq("sp:2 enumeration", 6, enumerate_symbols(GroupFamily::sp(2)).unwrap().len());
}

/// `(id, name, budget in seconds, runner)`.
type Criterion<'a> = (u32, &'static str, u64, Box<dyn FnMut(&mut Tally) + 'a>);

fn main() -> ExitCode {
    let mut branch_notes = Branching { unitary_jumps: Vec::new() };
    let criteria: Vec<Criterion<'_>> = vec![
        (1, "steinberg-theta-ranks", 1, Box::new(steinberg_values)),
        (2, "cuspidal-theta-ranks", 1, Box::new(cuspidal_values)),
        (3, "parity-and-range", 5, Box::new(parity_and_range)),
        (4, "maximal-rank-classification", 5, Box::new(classification)),
        (5, "existence-witnesses", 10, Box::new(existence)),
        (6, "pseudo-unipotent", 5, Box::new(pseudo_unipotent)),
        (7, "branching-laws", 30, Box::new(|t: &mut Tally| branching(t, &mut branch_notes))),
        (8, "tower-consistency", 5, Box::new(towers)),
        (9, "underline-theta-calibration", 10, Box::new(calibration)),
        (10, "structural-identities", 10, Box::new(structural)),
        (11, "counting", 1, Box::new(counting)),
    ];
    let mut failed = 0;
    for (id, name, budget, mut run) in criteria {
        let mut t = Tally::default();
        let start = Instant::now();
        run(&mut t);
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(budget);
        let pass = t.failures.is_empty() && in_time;
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {id:>2} {name:<28} {} cases={} failures={} time={}ms budget={}s",
            if pass { "PASS" } else { "FAIL" },
            t.cases,
            t.failures.len(),
            elapsed.as_millis(),
            budget
        );
        if !in_time {
            println!("    over the time budget");
        }
        for f in t.failures.iter().take(5) {
            println!("    {f}");
        }
    }
    if !branch_notes.unitary_jumps.is_empty() {
        println!(
            "note: {} unitary successor pairs change the Θ-rank by an odd amount",
            branch_notes.unitary_jumps.len()
        );
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
