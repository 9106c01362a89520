//! Oracles shared by the integration tests. None of them call into the
//! symbolic layer of the library.
#![allow(dead_code)]

use std::f64::consts::PI;

use cliffpart::dense::{identity, kron_all, DenseMatrix};
use ndarray::Array2;
use num_complex::Complex64;

/// Padé(13) coefficients of the exponential.
const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

fn one_norm(a: &DenseMatrix) -> f64 {
    (0..a.ncols())
        .map(|j| a.column(j).iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

fn solve(mut a: DenseMatrix, mut b: DenseMatrix) -> DenseMatrix {
    let n = a.nrows();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[[x, col]].norm().total_cmp(&a[[y, col]].norm()))
            .unwrap();
        for j in 0..n {
            a.swap([col, j], [pivot, j]);
        }
        for j in 0..b.ncols() {
            b.swap([col, j], [pivot, j]);
        }
        let p = a[[col, col]];
        for row in 0..n {
            if row == col {
                continue;
            }
            let f = a[[row, col]] / p;
            if f.norm() == 0.0 {
                continue;
            }
            for j in 0..n {
                let v = a[[col, j]];
                a[[row, j]] -= f * v;
            }
            for j in 0..b.ncols() {
                let v = b[[col, j]];
                b[[row, j]] -= f * v;
            }
        }
    }
    for row in 0..n {
        let p = a[[row, row]];
        for j in 0..b.ncols() {
            b[[row, j]] /= p;
        }
    }
    b
}

/// Matrix exponential by scaling and squaring with a Padé(13) approximant.
pub fn expm(a: &DenseMatrix) -> DenseMatrix {
    let n = a.nrows();
    let norm = one_norm(a);
    let theta = 5.371920351148152;
    let s = if norm > theta { (norm / theta).log2().ceil() as i32 } else { 0 };
    let a = a.mapv(|z| z / 2f64.powi(s));
    let id = identity(n);
    let a2 = a.dot(&a);
    let a4 = a2.dot(&a2);
    let a6 = a4.dot(&a2);
    let b = |k: usize| Complex64::new(PADE13[k], 0.0);
    let u_inner = &a6 * b(13) + &a4 * b(11) + &a2 * b(9);
    let u = a.dot(&(a6.dot(&u_inner) + &a6 * b(7) + &a4 * b(5) + &a2 * b(3) + &id * b(1)));
    let v_inner = &a6 * b(12) + &a4 * b(10) + &a2 * b(8);
    let v = a6.dot(&v_inner) + &a6 * b(6) + &a4 * b(4) + &a2 * b(2) + &id * b(0);
    let mut r = solve(&v - &u, &v + &u);
    for _ in 0..s {
        r = r.dot(&r);
    }
    r
}

/// Truncated series `Σ_k x^{nk+i}/(nk+i)!` for every branch `i`.
pub fn hyperbolic_series(n: u32, x: Complex64) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n as usize];
    let mut term = Complex64::new(1.0, 0.0);
    for j in 0..200usize {
        if j > 0 {
            term = term * x / j as f64;
        }
        out[j % n as usize] += term;
        if j > 40 && term.norm() < 1e-30 {
            break;
        }
    }
    out
}

/// Normalized trace of an n=2 word by the signed sum over perfect
/// pairings, each pair contributing `δ(i_a, i_b)`.
pub fn pairing_trace(word: &[usize]) -> i64 {
    fn rec(rest: &[usize], word: &[usize]) -> i64 {
        if rest.is_empty() {
            return 1;
        }
        let first = rest[0];
        let mut total = 0;
        for j in 1..rest.len() {
            if word[first] != word[rest[j]] {
                continue;
            }
            // Crossing count of this pair with the remaining positions.
            let sign = if (j - 1) % 2 == 0 { 1 } else { -1 };
            let remaining: Vec<usize> = rest[1..j].iter().chain(&rest[j + 1..]).copied().collect();
            total += sign * rec(&remaining, word);
        }
        total
    }
    if word.len() % 2 == 1 {
        return 0;
    }
    let positions: Vec<usize> = (0..word.len()).collect();
    rec(&positions, word)
}

/// Matrices `Θ_1 … Θ_m` with `Θ_i Θ_j = ω Θ_j Θ_i` for every `i < j`:
/// clocks on the sites before `i`, a shift on site `i`.
pub fn theta_matrices(n: u32, m: usize) -> Vec<DenseMatrix> {
    let nn = n as usize;
    let w = Complex64::from_polar(1.0, 2.0 * PI / n as f64);
    let shift = Array2::from_shape_fn((nn, nn), |(i, j)| {
        if j == (i + 1) % nn {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let clock = Array2::from_shape_fn((nn, nn), |(i, j)| {
        if i == j {
            w.powu(i as u32)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let id = identity(nn);
    (0..m)
        .map(|i| {
            let factors: Vec<DenseMatrix> = (0..m)
                .map(|s| match s.cmp(&i) {
                    std::cmp::Ordering::Less => clock.clone(),
                    std::cmp::Ordering::Equal => shift.clone(),
                    std::cmp::Ordering::Greater => id.clone(),
                })
                .collect();
            kron_all(&factors)
        })
        .collect()
}

/// All permutations of `0..m` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

/// Classical sign of a permutation by cycle decomposition.
pub fn cycle_sign(perm: &[usize]) -> i32 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}
