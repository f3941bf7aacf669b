//! Reference implementations working on raw rows, sharing no code with the library.
#![allow(dead_code)]

pub type Rows = (Vec<u64>, Vec<u64>);

pub fn rank(a: &[u64], b: &[u64]) -> i64 {
    let m = (a.len() + b.len()) as i64;
    a.iter().chain(b).sum::<u64>() as i64 - (m - 1) * (m - 1) / 4
}

/// Twice the unitary rank, straight from the row sums.
pub fn rank_u(a: &[u64], b: &[u64]) -> i64 {
    let m = (a.len() + b.len()) as i64;
    let d = (a.len() as i64 - b.len() as i64).abs();
    (4 * a.iter().chain(b).sum::<u64>() as i64 + d - m * (m - 2)) / 2
}

pub fn defect(a: &[u64], b: &[u64]) -> i64 {
    a.len() as i64 - b.len() as i64
}

pub fn reduce(mut a: Vec<u64>, mut b: Vec<u64>) -> Rows {
    while a.last() == Some(&0) && b.last() == Some(&0) {
        a.pop();
        b.pop();
        a.iter_mut().for_each(|x| *x -= 1);
        b.iter_mut().for_each(|x| *x -= 1);
    }
    (a, b)
}

fn shift(a: &[u64]) -> Vec<u64> {
    a.iter().map(|x| x + 1).chain([0]).collect()
}

fn nonempty(a: &[u64], b: &[u64]) -> Rows {
    let (a, b) = reduce(a.to_vec(), b.to_vec());
    if a.is_empty() || b.is_empty() {
        (shift(&a), shift(&b))
    } else {
        (a, b)
    }
}

fn unitary_ok(d: i64) -> bool {
    (d >= 0 && d % 2 == 0) || (d < 0 && d % 2 != 0)
}

fn partner_u(a: &[u64], b: &[u64]) -> i64 {
    let d = defect(a, b);
    if unitary_ok(d) {
        return rank_u(a, b);
    }
    // Outside the unitary convention: the staircase term shrinks by one step.
    let t = d.abs();
    rank_u(a, b) - t
}

/// Θ-rank from the two removals of the representative with non-empty rows.
pub fn theta(a: &[u64], b: &[u64], unitary: bool) -> i64 {
    let (a, b) = nonempty(a, b);
    let r1 = (b.clone(), a[1..].to_vec());
    let r2 = (b[1..].to_vec(), a.clone());
    if unitary {
        partner_u(&r1.0, &r1.1).min(partner_u(&r2.0, &r2.1))
    } else {
        (2 * rank(&r1.0, &r1.1)).min(2 * rank(&r2.0, &r2.1))
    }
}

/// Every strictly decreasing row with entries below `limit`.
pub fn rows_below(limit: u64) -> Vec<Vec<u64>> {
    (0u32..1 << limit).map(|mask| (0..limit).rev().filter(|i| mask & (1 << i) != 0).collect()).collect()
}

/// Reduced symbols with `accept(a, b)`, found by scanning all pairs of rows.
pub fn brute_symbols(limit: u64, accept: impl Fn(&[u64], &[u64]) -> bool) -> Vec<Rows> {
    let rows = rows_below(limit);
    let mut out = Vec::new();
    for a in &rows {
        for b in &rows {
            if a.last() == Some(&0) && b.last() == Some(&0) {
                continue;
            }
            if accept(a, b) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out.sort();
    out
}

pub fn residue(kind: &str) -> Option<i64> {
    match kind {
        "sp" => Some(1),
        "o+" => Some(0),
        "o-" => Some(2),
        "oodd" => Some(3),
        _ => None,
    }
}

/// Reduced symbols of a family found by brute force.
pub fn brute_family(kind: &str, n: u64) -> Vec<Rows> {
    match residue(kind) {
        Some(r) => brute_symbols(n + 6, |a, b| defect(a, b).rem_euclid(4) == r && rank(a, b) == n as i64),
        None => brute_symbols(n + 3, |a, b| unitary_ok(defect(a, b)) && rank_u(a, b) == n as i64),
    }
}

pub fn split(s: &thetarank::Symbol) -> Rows {
    (s.top().to_vec(), s.bottom().to_vec())
}
