mod common;

use std::collections::BTreeSet;

use thetarank::branching::{datum_successors, induced_set, min_theta_over_induced, successors};
use thetarank::correspondence::{underline_theta, underline_theta_rank, PairCase};
use thetarank::datum::{embed_unipotent, LusztigDatum, OrthoSympDatum, Slot, UnitaryDatum};
use thetarank::family::{enumerate_symbols, enumerate_unipotent, FamilyKind, GroupFamily, UnipotentChar, World};
use thetarank::partition::{Bipartition, Partition};
use thetarank::theta::{first_occurrence, theta_rank, theta_rank_symbol, Tower};
use thetarank::verify::counting_oracle;
use thetarank::witness::{cuspidal, steinberg, witness, Witness};
use thetarank::{sym, Symbol};

fn spo(s: &str) -> u64 {
    theta_rank_symbol(World::SpO, &sym(s)).unwrap()
}

fn u(s: &str) -> u64 {
    theta_rank_symbol(World::U, &sym(s)).unwrap()
}

fn part(parts: &[u64]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn normal_form_and_expansion() {
    assert_eq!(sym("[3,2,1,0|0]").normalize(), sym("[2,1,0|]"));
    assert_eq!(sym("[2,1,0|]").normalize(), sym("[2,1,0|]"));
    assert_eq!(sym("[1,0|2,0]").normalize(), sym("[0|1]"));
    assert_eq!(sym("[1,0|2,0]").normalize().expand(), sym("[1,0|2,0]"));
    assert_eq!(sym("[2,1,0|]").expand(), sym("[3,2,1,0|0]"));
    assert_eq!(Symbol::empty().expand(), sym("[0|0]"));
    assert_eq!(sym("[0|1]").expand(), sym("[1,0|2,0]"));
    assert!(sym("[2,1,0|]").equivalent(&sym("[3,2,1,0|0]")));
    assert!(!sym("[2,1,0|]").equivalent(&sym("[2,1,0|0]")));
}

#[test]
fn rank_defect_examples_against_row_sums() {
    for (s, d, r) in
        [("[2,1,0|2,1]", 1, 2), ("[0|1]", 0, 1), ("[|3,2,1,0]", -4, 4), ("[|]", 0, 0), ("[0|4,3,2,1,0]", -4, 4)]
    {
        let x = sym(s);
        assert_eq!(x.defect(), d, "{s}");
        assert_eq!(x.rank() as i64, common::rank(x.top(), x.bottom()), "{s}");
        assert_eq!(x.rank(), r, "{s}");
    }
    for (s, r) in [("[1,0|]", 3), ("[0|1]", 2), ("[|]", 0)] {
        let x = sym(s);
        assert_eq!(x.rank_u(), r);
        assert_eq!(x.rank_u() as i64, common::rank_u(x.top(), x.bottom()));
    }
}

#[test]
fn upsilon_examples() {
    assert_eq!(sym("[2,1,0|2,1]").upsilon(), Bipartition::new(Partition::empty(), part(&[1, 1])));
    assert_eq!(Symbol::empty().upsilon(), Bipartition::empty());
    let b = Bipartition::new(part(&[3, 1]), part(&[2]));
    assert_eq!(sym("[4,1|2]").upsilon(), b);
    assert_eq!(Symbol::from_upsilon(&b, 1), sym("[4,1|2]"));
    let one = Bipartition::new(part(&[1]), Partition::empty());
    assert_eq!(Symbol::from_upsilon(&one, -3), sym("[1|3,2,1,0]"));
    assert_eq!(sym("[1|3,2,1,0]").upsilon(), one);
    assert_eq!(sym("[2,1|1,0]").transpose(), sym("[1,0|2,1]"));
}

#[test]
fn membership_examples() {
    assert!(GroupFamily::sp(2).member(&sym("[2,1,0|2,1]")));
    assert!(GroupFamily::u(1).member(&sym("[|0]")));
    assert!(!GroupFamily::u(1).member(&sym("[0|]")));
    assert!(GroupFamily::o_plus(4).member(&sym("[|3,2,1,0]")));
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 0..=4 {
        for kind in ["sp", "o+", "o-", "oodd"] {
            let family: GroupFamily = format!("{kind}:{n}").parse().unwrap();
            let mut got: Vec<common::Rows> = enumerate_symbols(family).unwrap().iter().map(common::split).collect();
            got.sort();
            assert_eq!(got, common::brute_family(kind, n), "{family}");
        }
    }
    for n in 0..=6 {
        let mut got: Vec<common::Rows> =
            enumerate_symbols(GroupFamily::u(n)).unwrap().iter().map(common::split).collect();
        got.sort();
        assert_eq!(got, common::brute_family("u", n), "u:{n}");
    }
}

#[test]
fn enumeration_examples() {
    assert_eq!(enumerate_symbols(GroupFamily::sp(2)).unwrap().len(), 6);
    let o1: BTreeSet<Symbol> = enumerate_symbols(GroupFamily::o_plus(1)).unwrap().into_iter().collect();
    assert_eq!(o1, BTreeSet::from([sym("[1|0]"), sym("[0|1]")]));
    let u3: BTreeSet<Symbol> = enumerate_symbols(GroupFamily::u(3)).unwrap().into_iter().collect();
    let expected: BTreeSet<Symbol> = ["[1,0|]", "[1|1,0]", "[0|2,0]"].iter().map(|s| sym(s).normalize()).collect();
    assert_eq!(u3, expected);
    assert_eq!(enumerate_unipotent(GroupFamily::o_odd(1)).unwrap().len(), 4);
    assert_eq!(enumerate_unipotent(GroupFamily::sp(0)).unwrap().len(), 1);
    // O-_2 has two symbols of rank 1, a transpose pair.
    let om: BTreeSet<Symbol> = enumerate_symbols(GroupFamily::o_minus(1)).unwrap().into_iter().collect();
    assert_eq!(om, BTreeSet::from([sym("[1,0|]"), sym("[|1,0]")]));
    assert_eq!(counting_oracle(GroupFamily::sp(2)).unwrap(), 6);
    assert_eq!(counting_oracle(GroupFamily::u(3)).unwrap(), 3);
}

#[test]
fn theta_rank_examples() {
    assert_eq!(spo("[3,2,1,0|3,2,1]"), 6);
    assert_eq!(spo("[2,1,0|]"), 2);
    assert_eq!(spo("[|2,1,0]"), 2);
    assert_eq!(spo("[2,1|1,0]"), 2);
    assert_eq!(u("[0|1]"), 1);
    assert_eq!(u("[1,0|]"), 1);
    assert_eq!(spo("[|]"), 0);
    for s in ["[3,2,1,0|3,2,1]", "[2,1,0|]", "[2,1|1,0]", "[4,1|2]", "[5,2|3,0]"] {
        let x = sym(s);
        assert_eq!(spo(s) as i64, common::theta(x.top(), x.bottom(), false), "{s}");
    }
}

#[test]
fn first_occurrence_examples() {
    let ch = |f: GroupFamily, s: &str| UnipotentChar::new(f, &sym(s), false).unwrap();
    let st = ch(GroupFamily::sp(2), "[2,1,0|2,1]");
    assert_eq!(first_occurrence(&st, Tower::OPlusOfSp).unwrap(), 4);
    assert_eq!(first_occurrence(&st, Tower::OMinusOfSp).unwrap(), 4);
    let cusp = ch(GroupFamily::sp(6), "[4,3,2,1,0|]");
    assert_eq!(first_occurrence(&cusp, Tower::OPlusOfSp).unwrap(), 8);
    assert_eq!(first_occurrence(&cusp, Tower::OMinusOfSp).unwrap(), 18);
    let u3 = ch(GroupFamily::u(3), "[1|1,0]");
    assert_eq!(first_occurrence(&u3, Tower::USameParity).unwrap(), 3);
    assert_eq!(first_occurrence(&u3, Tower::UOppositeParity).unwrap(), 2);
    for n in 0..6 {
        let triv = ch(GroupFamily::sp(n), &format!("[{n}|]"));
        assert_eq!(first_occurrence(&triv, Tower::OPlusOfSp).unwrap(), 0);
    }
}

#[test]
fn named_characters() {
    assert_eq!(steinberg(FamilyKind::Sp, 2).unwrap()[0].symbol, sym("[2,1,0|2,1]"));
    assert_eq!(steinberg(FamilyKind::U, 4).unwrap()[0].symbol, sym("[1,0|2,1]"));
    let oodd = &steinberg(FamilyKind::OOdd, 2).unwrap()[0];
    assert_eq!(oodd.symbol, sym("[2,1|2,1,0]"));
    assert_eq!(oodd.symbol.rank(), 2);
    let sp = &cuspidal(FamilyKind::Sp, 1).unwrap()[0];
    assert_eq!(theta_rank(sp), 2);
    let o = cuspidal(FamilyKind::OPlus, 2).unwrap();
    let o_syms: BTreeSet<Symbol> = o.iter().map(|c| c.symbol.clone()).collect();
    assert_eq!(o_syms, BTreeSet::from([sym("[3,2,1,0|]"), sym("[|3,2,1,0]")]));
    assert!(o.iter().all(|c| theta_rank(c) == 4));
    assert_eq!(cuspidal(FamilyKind::U, 2).unwrap()[0].symbol, sym("[1,0|]"));
}

#[test]
fn witness_examples() {
    let Witness::Unipotent(c) = witness(GroupFamily::o_minus(3), 2).unwrap() else { panic!() };
    assert_eq!(c.symbol, sym("[2,1|]"));
    assert_eq!(theta_rank(&c), 2);
    let Witness::Datum(LusztigDatum::OrthoSymp(d)) = witness(GroupFamily::sp(3), 3).unwrap() else { panic!() };
    assert_eq!((d.n_minus, d.n_plus), (3, 0));
    assert_eq!(d.theta_rank(), 3);
    let Witness::Datum(LusztigDatum::Unitary(ud)) = witness(GroupFamily::u(4), 4).unwrap() else { panic!() };
    assert!(ud.slots.is_empty());
    assert_eq!(ud.theta_rank(), 4);
}

#[test]
fn datum_examples() {
    let sp0 = sym("[0|]");
    for n in 1..=20 {
        let lm = Symbol::new(vec![n], vec![0]).unwrap();
        assert_eq!(OrthoSympDatum::new(FamilyKind::Sp, n, &lm, &sp0, false).unwrap().theta_rank(), 1);
    }
    let st = steinberg(FamilyKind::Sp, 3).unwrap().remove(0);
    let d = OrthoSympDatum::new(FamilyKind::Sp, 3, &Symbol::empty(), &st.symbol, false).unwrap();
    assert_eq!(d.theta_rank(), 6);
    for kind in [FamilyKind::OPlus, FamilyKind::OMinus] {
        for n in 1..6 {
            assert_eq!(OrthoSympDatum::torus(kind, n).unwrap().theta_rank(), 2 * n);
        }
    }
    assert_eq!(UnitaryDatum::new(5, vec![]).unwrap().theta_rank(), 5);
    let full = UnitaryDatum::new(3, vec![Slot { n: 3, lambda: sym("[1|1,0]") }]).unwrap();
    assert_eq!(full.theta_rank(), 2);
    let two =
        UnitaryDatum::new(5, vec![Slot { n: 2, lambda: sym("[0|1]") }, Slot { n: 2, lambda: sym("[1|0]") }]).unwrap();
    assert_eq!(two.rest, 1);
    assert_eq!(two.theta_rank(), 3);
}

#[test]
fn datum_twists() {
    let d = OrthoSympDatum::new(FamilyKind::OPlus, 2, &sym("[1|0]"), &Symbol::empty(), false).unwrap();
    let t = d.twist_sgn().unwrap();
    assert_eq!((t.lambda_minus.clone(), t.lambda_plus.clone()), (sym("[0|1]"), Symbol::empty()));
    let chi = d.twist_chi().unwrap();
    assert_eq!((chi.n_minus, chi.n_plus), (0, 1));
    let odd = OrthoSympDatum::new(FamilyKind::OOdd, 2, &sym("[0|]"), &sym("[2|]"), false).unwrap();
    let flipped = odd.twist_sgn().unwrap();
    assert!(flipped.sgn);
    assert_eq!(flipped.lambda_plus, odd.lambda_plus);
}

#[test]
fn embedding_examples() {
    let st = steinberg(FamilyKind::Sp, 2).unwrap().remove(0);
    let LusztigDatum::OrthoSymp(d) = embed_unipotent(&st) else { panic!() };
    assert_eq!(d.lambda_plus, sym("[2,1,0|2,1]"));
    assert_eq!(d.theta_rank(), 4);
    for n in 0..5 {
        for kind in FamilyKind::ALL {
            let family = GroupFamily::new(kind, n);
            for c in enumerate_unipotent(family).unwrap() {
                assert_eq!(embed_unipotent(&c).theta_rank(), theta_rank(&c), "{c}");
            }
        }
    }
}

#[test]
fn branching_examples() {
    let ch = |f: GroupFamily, s: &str| UnipotentChar::new(f, &sym(s), false).unwrap();
    for n in 1..5 {
        let next: BTreeSet<String> = successors(&ch(GroupFamily::sp(n), &format!("[{n}|]")))
            .into_iter()
            .map(|c| c.symbol.upsilon().to_string())
            .collect();
        let expected: BTreeSet<String> =
            [format!("(({}),())", n + 1), format!("(({n},1),())"), format!("(({n}),(1))")].into_iter().collect();
        assert_eq!(next, expected);
    }
    assert_eq!(induced_set(&ch(GroupFamily::sp(3), "[3|]"), 3).unwrap().len(), 1);
    assert_eq!(induced_set(&ch(GroupFamily::o_plus(1), "[1|0]"), 2).unwrap().len(), 3);
    // Bipartitions of 3 containing ((1),()): ((3),()), ((2,1),()), ((1,1,1),()),
    // ((2),(1)), ((1,1),(1)), ((1),(2)), ((1),(1,1)).
    assert_eq!(induced_set(&ch(GroupFamily::sp(1), "[1|]"), 3).unwrap().len(), 7);
    assert_eq!(min_theta_over_induced(&ch(GroupFamily::sp(2), "[2,1,0|2,1]"), 4).unwrap(), 4);
    assert_eq!(min_theta_over_induced(&ch(GroupFamily::sp(2), "[|2,1,0]"), 4).unwrap(), 2);
    let pseudo = OrthoSympDatum::new(FamilyKind::Sp, 2, &sym("[2|0]"), &sym("[0|]"), false).unwrap();
    for s in datum_successors(&pseudo.into()) {
        let LusztigDatum::OrthoSymp(o) = s else { panic!() };
        assert_eq!((o.n, o.n_plus), (3, 1));
    }
    let triv = ch(GroupFamily::u(2), "[1|0]");
    let d = embed_unipotent(&triv);
    let grown: Vec<LusztigDatum> = datum_successors(&d);
    assert!(grown.iter().all(|g| g.group() == GroupFamily::u(4)));
}

#[test]
fn correspondence_examples() {
    for n in 0..6 {
        let img = underline_theta(PairCase::I, &Symbol::empty(), n).unwrap();
        assert_eq!(img.lambda, Symbol::new(vec![n], vec![]).unwrap());
    }
    let img = underline_theta(PairCase::I, &sym("[|3,2,1,0]"), 6).unwrap();
    assert_eq!((img.lambda, img.tau), (sym("[4,3,2,1,0|]"), 0));
    assert_eq!(underline_theta(PairCase::IV, &Symbol::empty(), 1).unwrap().lambda, sym("[|0]"));
    assert_eq!(underline_theta_rank(&sym("[2,1,0|2,1]"), World::SpO).unwrap(), 4);
    assert_eq!(underline_theta_rank(&sym("[4,3,2,1,0|]"), World::SpO).unwrap(), 8);
    assert_eq!(underline_theta_rank(&Symbol::empty(), World::SpO).unwrap(), 0);
}
