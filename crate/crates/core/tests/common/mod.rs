//! Brute-force oracles on plain integer arithmetic mod p, shared by the integration
//! tests. Nothing here uses the library's field, elimination or enumeration code.
#![allow(dead_code)]

use std::collections::HashSet;

use fq_stabilizer::stabcode::{build_from_ld, min_distance, DistanceMode, DistanceOptions};
use fq_stabilizer::veclin::split_upper;
use fq_stabilizer::{FieldCtx, FqMat, Subspace};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// All vectors of `Z_p^n`, first coordinate fastest.
pub fn all_vectors(p: usize, n: usize) -> Vec<Vec<usize>> {
    (0..p.pow(n as u32))
        .map(|mut i| {
            (0..n)
                .map(|_| {
                    let d = i % p;
                    i /= p;
                    d
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(p: usize, l: &[Vec<usize>], x: &[usize]) -> Vec<usize> {
    l.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum::<usize>() % p).collect()
}

pub fn dot(p: usize, x: &[usize], y: &[usize]) -> usize {
    x.iter().zip(y).map(|(a, b)| a * b).sum::<usize>() % p
}

pub struct OracleResult {
    pub standard: Option<usize>,
    pub pure: usize,
    pub dual_size: usize,
    pub stabilizer_size: usize,
}

/// Distance of `{(a, La) : a ∈ span(basis)}` by testing every pair in `Z_p^{2n}`.
pub fn oracle(p: usize, l: &[Vec<usize>], basis: &[Vec<usize>]) -> OracleResult {
    let n = l.len();
    let c: HashSet<Vec<usize>> = all_vectors(p, basis.len())
        .iter()
        .map(|coeffs| {
            let mut v = vec![0; n];
            for (b, &k) in basis.iter().zip(coeffs) {
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi = (*vi + k * bi) % p;
                }
            }
            v
        })
        .collect();
    let s: Vec<(Vec<usize>, Vec<usize>)> = c.iter().map(|a| (a.clone(), mat_vec(p, l, a))).collect();
    let vectors = all_vectors(p, n);
    let mut standard = None::<usize>;
    let mut pure = usize::MAX;
    let mut dual_size = 0;
    for x in &vectors {
        for y in &vectors {
            let commutes = s.iter().all(|(a, b)| (dot(p, x, b) + p - dot(p, y, a)).is_multiple_of(p));
            if !commutes {
                continue;
            }
            dual_size += 1;
            let w = (0..n).filter(|&i| x[i] != 0 || y[i] != 0).count();
            if w == 0 {
                continue;
            }
            pure = pure.min(w);
            let in_s = c.contains(x) && mat_vec(p, l, x) == *y;
            if !in_s {
                standard = Some(standard.map_or(w, |d| d.min(w)));
            }
        }
    }
    OracleResult { standard, pure, dual_size, stabilizer_size: c.len() }
}

pub fn random_instance(rng: &mut ChaCha8Rng, p: usize, n: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut l = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = if i == j && p == 2 { 0 } else { rng.random_range(0..p) };
            l[i][j] = v;
            l[j][i] = v;
        }
    }
    let gens = rng.random_range(0..=n);
    let vs: Vec<Vec<usize>> = (0..gens).map(|_| (0..n).map(|_| rng.random_range(0..p)).collect()).collect();
    (l, vs)
}

/// Checks one random instance against the library; panics with context on mismatch.
pub fn compare(rng: &mut ChaCha8Rng, p: usize, n: usize) {
    let (l_int, vs) = random_instance(rng, p, n);
    let field = FieldCtx::prime(p as u32).unwrap();
    let rows: Vec<Vec<u64>> = l_int.iter().map(|r| r.iter().map(|&x| x as u64).collect()).collect();
    let l = FqMat::from_rows(&field, &rows).unwrap();
    let d = split_upper(&l).unwrap();
    let elems: Vec<Vec<u8>> = vs.iter().map(|v| v.iter().map(|&x| x as u8).collect()).collect();
    let c = Subspace::span(&field, n, &elems);
    let basis: Vec<Vec<usize>> = c.basis().iter().map(|v| v.iter().map(|&x| x as usize).collect()).collect();
    let code = build_from_ld(&l, &d, &c).unwrap();
    let want = oracle(p, &l_int, &basis);

    let rep = min_distance(&code, &DistanceOptions::default()).unwrap();
    let pure = min_distance(&code, &DistanceOptions { mode: DistanceMode::Pure, ..Default::default() }).unwrap();
    let ctx = format!("p={p} n={n} L={l_int:?} C={basis:?}");
    match want.standard {
        Some(dw) => {
            assert!(!rep.undefined, "{ctx}");
            assert_eq!(rep.d, dw, "{ctx}");
            assert_eq!(rep.witness.as_ref().unwrap().weight(), dw, "{ctx}");
            assert_eq!(rep.pure, want.pure >= dw, "{ctx}");
        }
        None => {
            assert!(rep.undefined, "{ctx}");
            assert_eq!(rep.d, n + 1, "{ctx}");
        }
    }
    assert_eq!(pure.d, want.pure, "{ctx}");
    assert_eq!(want.dual_size * want.stabilizer_size, p.pow(2 * n as u32), "{ctx}");
    assert_eq!(code.symplectic_dual().dim() + code.stabilizer_dim(), 2 * n, "{ctx}");
}

/// Every nonzero `x` with `w(x) ≤ αn` checked on `R` and `Rᵀ` from matrix entries.
pub fn alpha_good_oracle(r: &FqMat, num: u64, den: u64) -> bool {
    let n = r.rows();
    let small = |w: usize| (w as u64) * den <= num * n as u64;
    for mask in 1u64..(1 << n) {
        let support: Vec<usize> = (0..n).filter(|&j| mask >> j & 1 == 1).collect();
        if !small(support.len()) {
            continue;
        }
        for transpose in [false, true] {
            let weight = (0..n)
                .filter(|&i| {
                    support.iter().fold(0u8, |acc, &j| acc ^ if transpose { r.get(j, i) } else { r.get(i, j) }) == 1
                })
                .count() as u64;
            if weight * den < num * n as u64 || weight * den > (den - num) * n as u64 {
                return false;
            }
        }
    }
    true
}
