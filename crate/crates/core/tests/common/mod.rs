//! Independent reference implementations shared by the integration tests.
//! Nothing here calls the code under test except for plain data accessors.
#![allow(dead_code)]

use std::collections::BTreeSet;

use eil_core::ideal::ambient;
use eil_core::{Graph, Monomial, MonomialIdeal};
use rand::Rng;

pub const P_LARGE: u64 = 1_000_000_007;

/// Rank of a dense matrix modulo the prime `p`.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Reduced homology ranks of a simplicial complex given by its faces (as
/// bitmasks, including the empty face), indexed from dimension -1.
pub fn reduced_homology(faces: &BTreeSet<u64>, p: u64) -> Vec<usize> {
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    let by_size: Vec<Vec<u64>> = (0..=top + 1)
        .map(|k| faces.iter().copied().filter(|f| f.count_ones() as usize == k).collect())
        .collect();
    // boundary from size k to size k-1
    let boundary_rank = |k: usize| -> usize {
        if k == 0 || k > top {
            return 0;
        }
        let lower = &by_size[k - 1];
        let rows: Vec<Vec<u64>> = by_size[k]
            .iter()
            .map(|&f| {
                let mut row = vec![0u64; lower.len()];
                for (pos, v) in (0..64).filter(|v| f >> v & 1 == 1).enumerate() {
                    let g = f & !(1 << v);
                    let c = lower.iter().position(|&x| x == g).expect("closed under subsets");
                    row[c] = if pos % 2 == 0 { 1 } else { p - 1 };
                }
                row
            })
            .collect();
        rank_mod_p(rows, p)
    };
    (0..=top)
        .map(|k| by_size[k].len() - boundary_rank(k) - boundary_rank(k + 1))
        .collect()
}

fn in_ideal(gens: &[Vec<u32>], m: &[u32]) -> bool {
    gens.iter().any(|g| g.iter().zip(m).all(|(a, b)| a <= b))
}

/// Total Betti numbers `β_i(S/I)` of a proper nonzero monomial ideal from the
/// upper Koszul simplicial complexes
/// `K^b = { F ⊆ supp b : x^(b - F) ∈ I }`, with `β_{i,b}(I) = dim H̃_{i-1}(K^b)`.
/// Works directly on non-squarefree ideals.
pub fn koszul_betti_totals(gens: &[Vec<u32>], p: u64) -> Vec<usize> {
    let n = gens[0].len();
    let mut degrees = BTreeSet::new();
    for subset in 1u32..1 << gens.len() {
        let mut b = vec![0u32; n];
        for (k, g) in gens.iter().enumerate() {
            if subset >> k & 1 == 1 {
                for v in 0..n {
                    b[v] = b[v].max(g[v]);
                }
            }
        }
        degrees.insert(b);
    }
    let mut totals = vec![1usize];
    for b in degrees {
        let supp: u64 = (0..n).filter(|&v| b[v] > 0).map(|v| 1u64 << v).sum();
        let faces: BTreeSet<u64> = (0..1u64 << n)
            .filter(|f| f & !supp == 0)
            .filter(|&f| {
                let m: Vec<u32> = (0..n).map(|v| b[v] - (f >> v & 1) as u32).collect();
                in_ideal(gens, &m)
            })
            .collect();
        for (k, &r) in reduced_homology(&faces, p).iter().enumerate() {
            // k is dimension + 1, so H̃_{k-1} feeds β_k(I) = β_{k+1}(S/I)
            if r > 0 {
                let i = k + 1;
                if totals.len() <= i {
                    totals.resize(i + 1, 0);
                }
                totals[i] += r;
            }
        }
    }
    while totals.last() == Some(&0) {
        totals.pop();
    }
    totals
}

pub fn oracle_pd(gens: &[Vec<u32>], p: u64) -> usize {
    koszul_betti_totals(gens, p).len() - 1
}

pub fn var_names(n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("v{k}")).collect()
}

pub fn ideal_from_rows(rows: &[Vec<u32>]) -> MonomialIdeal {
    let n = rows[0].len();
    MonomialIdeal::new(
        ambient(&var_names(n)),
        rows.iter().map(|r| Monomial::new(r.clone())).collect(),
    )
    .unwrap()
}

/// Random proper nonzero monomial ideal on `n` variables with exponents at
/// most `max_exp`, as exponent rows.
pub fn random_rows<R: Rng>(rng: &mut R, n: usize, max_gens: usize, max_exp: u32) -> Vec<Vec<u32>> {
    let k = rng.gen_range(1..=max_gens);
    (0..k)
        .map(|_| loop {
            let row: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
            if row.iter().any(|&e| e > 0) {
                break row;
            }
        })
        .collect()
}

/// Largest set of vertices at pairwise distance at least 3, by brute force.
pub fn brute_alpha2(g: &Graph) -> usize {
    let n = g.n();
    let closed: Vec<u64> = (0..n)
        .map(|v| (0..n).filter(|&u| u == v || g.has_edge(u, v)).map(|u| 1u64 << u).sum())
        .collect();
    (0u64..1 << n)
        .filter(|s| {
            let vs: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 1).collect();
            vs.iter()
                .enumerate()
                .all(|(a, &u)| vs[a + 1..].iter().all(|&v| closed[u] & closed[v] == 0))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism-invariant form: the lexicographically largest sorted edge list
/// over all vertex permutations.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut e: Vec<(usize, usize)> = g
                .edges()
                .into_iter()
                .map(|(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            e.sort();
            e
        })
        .max()
        .unwrap()
}

/// Induced whiskered triangle by trying every 6-subset and every bijection.
pub fn brute_has_wk3(g: &Graph) -> bool {
    let n = g.n();
    if n < 6 {
        return false;
    }
    let target: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)];
    let is_edge = |a: usize, b: usize| target.contains(&(a.min(b), a.max(b)));
    let perms = permutations(6);
    (0u64..1 << n).filter(|s| s.count_ones() == 6).any(|s| {
        let vs: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 1).collect();
        perms
            .iter()
            .any(|p| (0..6).all(|a| (a + 1..6).all(|b| g.has_edge(vs[p[a]], vs[p[b]]) == is_edge(a, b))))
    })
}
