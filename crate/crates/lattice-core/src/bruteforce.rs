//! Exhaustive face enumeration, kept as an independent check on [`crate::hull::faces`].

use std::collections::BTreeSet;

use num::{BigRational, One, Signed, Zero};

use crate::hull::{affine_basis, complement_normals};
use crate::point::LatticePoint3 as P3;

/// `subset` is a face of `conv(points)` iff no convex combination of the
/// remaining points lands in the affine hull of `subset`.
pub fn is_face_bruteforce(points: &[P3], subset: &[P3]) -> bool {
    let all: BTreeSet<P3> = points.iter().copied().collect();
    let sub: BTreeSet<P3> = subset.iter().copied().collect();
    if sub.is_empty() || !sub.is_subset(&all) {
        return false;
    }
    let rest: Vec<P3> = all.difference(&sub).copied().collect();
    if rest.is_empty() {
        return true;
    }
    let s: Vec<P3> = sub.into_iter().collect();
    let basis = affine_basis(&s);
    if basis.len() == 3 {
        return false;
    }
    let normals = complement_normals(&basis);
    // rows: one per normal plus the affine constraint sum(lambda) = 1
    let rows = normals.len() + 1;
    let rhs: Vec<i64> = normals.iter().map(|n| n.dot(s[0])).chain([1]).collect();
    let column = |t: P3| -> Vec<i64> { normals.iter().map(|n| n.dot(t)).chain([1]).collect() };
    let cols: Vec<Vec<i64>> = rest.iter().map(|&t| column(t)).collect();
    for size in 1..=rows.min(cols.len()) {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            if let Some(lambda) = solve(&pick.iter().map(|&i| cols[i].clone()).collect::<Vec<_>>(), &rhs) {
                if lambda.iter().all(|l| !l.is_negative()) {
                    return false;
                }
            }
            if !next_combination(&mut pick, cols.len()) {
                break;
            }
        }
    }
    true
}

/// All faces by testing every subset; exponential, for small inputs only.
pub fn faces_bruteforce(points: &[P3]) -> BTreeSet<Vec<P3>> {
    let pts: Vec<P3> = points.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << pts.len()) {
        let s: Vec<P3> = (0..pts.len()).filter(|i| mask >> i & 1 == 1).map(|i| pts[i]).collect();
        if is_face_bruteforce(&pts, &s) {
            out.insert(s);
        }
    }
    out
}

fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    for i in (0..k).rev() {
        if pick[i] < n - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Solve `sum_j lambda_j cols[j] = rhs` when the columns are independent and
/// the system is consistent.
fn solve(cols: &[Vec<i64>], rhs: &[i64]) -> Option<Vec<BigRational>> {
    let m = rhs.len();
    let n = cols.len();
    let q = |v: i64| BigRational::from_integer(v.into());
    let mut a: Vec<Vec<BigRational>> = (0..m)
        .map(|r| (0..n).map(|c| q(cols[c][r])).chain([q(rhs[r])]).collect())
        .collect();
    let mut row = 0;
    let mut pivots = Vec::new();
    for c in 0..n {
        let p = (row..m).find(|&r| !a[r][c].is_zero())?;
        a.swap(row, p);
        let inv = BigRational::one() / a[row][c].clone();
        for x in a[row].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..m {
            if r != row && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot = a[row].clone();
                for (x, v) in a[r].iter_mut().zip(pivot) {
                    *x -= v * f.clone();
                }
            }
        }
        pivots.push(row);
        row += 1;
    }
    if a[row..].iter().any(|r| !r[n].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&r| a[r][n].clone()).collect())
}
