//! Independent homology oracles and a generator of random chain complexes
//! with known homology. Shared between test targets.

#![allow(dead_code)]

use mbaudit_core::{ChainComplex, Group, HomologyProfile, IntegerMatrix};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::Rng;

fn to_i128(m: &IntegerMatrix) -> Vec<Vec<i128>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|x| i128::try_from(x).expect("small entries")).collect())
        .collect()
}

/// Rank over Q by fraction-free (Bareiss) elimination.
pub fn rational_rank(m: &IntegerMatrix) -> usize {
    let mut a = to_i128(m);
    let (rows, cols) = m.shape();
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for cc in c + 1..cols {
                a[r][cc] = (a[rank][c] * a[r][cc] - a[r][c] * a[rank][cc]) / prev;
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Rank over GF(2).
pub fn mod2_rank(m: &IntegerMatrix) -> usize {
    let mut a: Vec<Vec<bool>> =
        to_i128(m).into_iter().map(|r| r.into_iter().map(|x| x.rem_euclid(2) == 1).collect()).collect();
    let (rows, cols) = m.shape();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c]) else { continue };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && a[r][c] {
                let pivot = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Betti numbers and mod-2 Betti numbers straight from the boundary ranks.
pub fn oracle_betti(c: &ChainComplex) -> (Vec<usize>, Vec<usize>) {
    let n = c.ranks().len();
    let rq: Vec<usize> = (0..=n).map(|k| c.boundary(k).map_or(0, rational_rank)).collect();
    let r2: Vec<usize> = (0..=n).map(|k| c.boundary(k).map_or(0, mod2_rank)).collect();
    let betti = (0..n).map(|k| c.ranks()[k] - rq[k] - rq[k + 1]).collect();
    let betti2 = (0..n).map(|k| c.ranks()[k] - r2[k] - r2[k + 1]).collect();
    (betti, betti2)
}

/// Checks a computed profile against both oracles: free ranks against the
/// rational Betti numbers, and even torsion through the universal
/// coefficient count `dim H_k(F_2) = b_k + e_k + e_{k-1}`.
pub fn agrees_with_oracle(c: &ChainComplex, h: &HomologyProfile) -> Result<(), String> {
    let (betti, betti2) = oracle_betti(c);
    let even = |k: usize| -> usize {
        h.group(k).torsion.iter().filter(|t| (*t % 2u32) == BigInt::from(0)).count()
    };
    for k in 0..betti.len() {
        let g = h.group(k);
        if g.free_rank != betti[k] {
            return Err(format!("degree {k}: free rank {} vs rational oracle {}", g.free_rank, betti[k]));
        }
        let predicted = betti[k] + even(k) + if k == 0 { 0 } else { even(k - 1) };
        if predicted != betti2[k] {
            return Err(format!("degree {k}: mod-2 count {predicted} vs oracle {}", betti2[k]));
        }
    }
    if h.len() > betti.len() && (betti.len()..h.len()).any(|k| !h.group(k).is_trivial()) {
        return Err("homology beyond the top degree".into());
    }
    Ok(())
}

/// A random complex with known homology: a direct sum of `Z` summands and
/// two-term pieces `Z --m--> Z`, scrambled by random unimodular changes of
/// basis in every degree. Total rank is at most `max_total`.
pub fn random_complex(rng: &mut StdRng, max_total: usize) -> (ChainComplex, HomologyProfile) {
    let top = rng.gen_range(0..=3usize);
    let mut ranks = vec![0usize; top + 1];
    let mut expected = vec![Group::default(); top + 1];
    // (column in degree k+1, row in degree k, multiplier)
    let mut pieces: Vec<(usize, usize, usize, i64)> = Vec::new();
    let mut total = 0;
    let target = rng.gen_range(1..=max_total);
    while total < target {
        if top > 0 && total + 2 <= target && rng.gen_bool(0.5) {
            let k = rng.gen_range(0..top);
            let m: i64 = rng.gen_range(1..=4);
            pieces.push((k, ranks[k], ranks[k + 1], m));
            ranks[k] += 1;
            ranks[k + 1] += 1;
            if m > 1 {
                expected[k].torsion.push(BigInt::from(m));
            }
            total += 2;
        } else {
            let k = rng.gen_range(0..=top);
            ranks[k] += 1;
            expected[k].free_rank += 1;
            total += 1;
        }
    }
    let mut ds: Vec<Vec<Vec<i64>>> = (1..=top).map(|k| vec![vec![0; ranks[k]]; ranks[k - 1]]).collect();
    for &(k, row, col, m) in &pieces {
        ds[k][row][col] = m;
    }
    // basis change in degree k: e_i' = e_i + c e_j. Column op on d_k, inverse row op on d_{k+1}.
    for _ in 0..12 {
        let k = rng.gen_range(0..=top);
        if ranks[k] < 2 {
            continue;
        }
        let i = rng.gen_range(0..ranks[k]);
        let j = (i + rng.gen_range(1..ranks[k])) % ranks[k];
        let c: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
        if k >= 1 {
            for row in ds[k - 1].iter_mut() {
                row[i] += c * row[j];
            }
        }
        if k < top {
            let src = ds[k][i].clone();
            for (x, y) in ds[k][j].iter_mut().zip(src) {
                *x -= c * y;
            }
        }
    }
    for g in expected.iter_mut() {
        g.torsion.sort();
    }
    let boundaries = ds
        .iter()
        .zip(1..)
        .map(|(d, k)| IntegerMatrix::from_rows(ranks[k], d.iter().map(|r| r.iter().copied())).unwrap())
        .collect();
    let c = ChainComplex::new(ranks, boundaries).expect("scrambling preserves d^2 = 0");
    (c, HomologyProfile::new(expected))
}

/// Whether every sorted torsion list is already a divisibility chain; a
/// mix like `Z/2 ⊕ Z/3` is `Z/6` in invariant-factor form.
pub fn is_invariant_form(h: &HomologyProfile) -> bool {
    h.degrees().iter().all(|g| g.torsion.windows(2).all(|w| (&w[1] % &w[0]) == BigInt::from(0)))
}
