//! Independent Alexander polynomial oracle via the reduced Burau
//! representation of a positive braid word. Entirely separate from the
//! diagram pipeline: dense integer polynomials and a subset-expansion
//! determinant.

use oneone::floer::{normalize_alexander, FloerError, LaurentPolynomial};

/// Dense polynomial in t with integer coefficients, lowest exponent 0.
pub type Poly = Vec<i64>;

pub fn poly_trim(p: &mut Poly) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

pub fn poly_add(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] += c;
    }
    poly_trim(&mut out);
    out
}

pub fn poly_neg(a: &Poly) -> Poly {
    a.iter().map(|&c| -c).collect()
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &ca) in a.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    poly_trim(&mut out);
    out
}

/// Exact division; None if the remainder is nonzero.
pub fn poly_div_exact(num: &Poly, den: &Poly) -> Option<Poly> {
    let mut rem = num.clone();
    poly_trim(&mut rem);
    let mut den = den.clone();
    poly_trim(&mut den);
    let dlead = *den.last()?;
    if dlead == 0 {
        return None;
    }
    if rem.len() < den.len() {
        return (rem.iter().all(|&c| c == 0)).then(|| vec![0]);
    }
    let mut quot = vec![0i64; rem.len() - den.len() + 1];
    for k in (0..quot.len()).rev() {
        let lead = rem[k + den.len() - 1];
        if lead % dlead != 0 {
            return None;
        }
        let q = lead / dlead;
        quot[k] = q;
        if q != 0 {
            for (j, &dc) in den.iter().enumerate() {
                rem[k + j] -= q * dc;
            }
        }
    }
    if rem.iter().any(|&c| c != 0) {
        return None;
    }
    poly_trim(&mut quot);
    Some(quot)
}

/// Reduced Burau matrix of the generator sigma_i in B_n, an (n-1) x (n-1)
/// matrix over Z[t].
fn burau_generator(i: usize, n: usize) -> Vec<Vec<Poly>> {
    let m = n - 1;
    let zero = vec![0i64];
    let one = vec![1i64];
    let t = vec![0i64, 1];
    let neg_t = vec![0i64, -1];
    let mut mat: Vec<Vec<Poly>> = (0..m)
        .map(|r| {
            (0..m)
                .map(|c| if r == c { one.clone() } else { zero.clone() })
                .collect()
        })
        .collect();
    // rows/columns are 0-indexed; generator index i is 1-based.
    let k = i - 1;
    mat[k][k] = neg_t;
    if k > 0 {
        mat[k - 1][k] = t.clone();
    }
    if k + 1 < m {
        mat[k + 1][k] = one;
    }
    mat
}

fn mat_mul(a: &[Vec<Poly>], b: &[Vec<Poly>]) -> Vec<Vec<Poly>> {
    let n = a.len();
    let mut out = vec![vec![vec![0i64]; n]; n];
    for r in 0..n {
        for c in 0..n {
            let mut acc = vec![0i64];
            for k in 0..n {
                acc = poly_add(&acc, &poly_mul(&a[r][k], &b[k][c]));
            }
            out[r][c] = acc;
        }
    }
    out
}

/// Determinant by expansion over column subsets.
fn mat_det(mat: &[Vec<Poly>]) -> Poly {
    let n = mat.len();
    // dp[mask] = signed minor determinant of the first popcount(mask) rows
    // against the column set in mask.
    let mut dp = vec![None::<Poly>; 1 << n];
    dp[0] = Some(vec![1i64]);
    for mask in 0usize..(1 << n) {
        let Some(cur) = dp[mask].clone() else {
            continue;
        };
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        let mut used_below = 0u32;
        for col in 0..n {
            let bit = 1usize << col;
            if mask & bit != 0 {
                used_below += 1;
                continue;
            }
            // Cofactor sign: (-1)^(row + index of col within the subset).
            let term = poly_mul(&cur, &mat[row][col]);
            let term = if (row as u32 + used_below) % 2 == 1 {
                poly_neg(&term)
            } else {
                term
            };
            let next = mask | bit;
            dp[next] = Some(match dp[next].take() {
                None => term,
                Some(acc) => poly_add(&acc, &term),
            });
        }
    }
    dp[(1 << n) - 1].clone().expect("full determinant")
}

/// Alexander polynomial of the closure of a positive braid word in B_n,
/// normalized symmetric with value one at t = 1. The word lists generator
/// indices (1-based), applied left to right.
pub fn alexander_of_braid_closure(word: &[usize], n: usize) -> Result<LaurentPolynomial, FloerError> {
    assert!(n >= 2);
    let m = n - 1;
    let mut prod: Vec<Vec<Poly>> = (0..m)
        .map(|r| {
            (0..m)
                .map(|c| if r == c { vec![1i64] } else { vec![0i64] })
                .collect()
        })
        .collect();
    for &g in word {
        prod = mat_mul(&prod, &burau_generator(g, n));
    }
    // det(prod - I)
    for (r, row) in prod.iter_mut().enumerate() {
        row[r] = poly_add(&row[r], &vec![-1i64]);
    }
    let det = mat_det(&prod);
    // Divide by 1 + t + ... + t^{n-1}.
    let ones = vec![1i64; n];
    let quot = poly_div_exact(&det, &ones)
        .ok_or_else(|| FloerError::Internal("burau determinant not divisible".into()))?;
    let mut out = LaurentPolynomial::zero();
    for (e, &c) in quot.iter().enumerate() {
        out.add_term(e as i64, c);
    }
    normalize_alexander(out)
}

/// The braid word of K(omega, b, m): (sigma_b ... sigma_1) followed by m
/// copies of (sigma_{omega-1} ... sigma_1).
pub fn bridge_braid_word(omega: i64, b: i64, m: i64) -> Vec<usize> {
    let mut word = Vec::new();
    for i in (1..=b).rev() {
        word.push(i as usize);
    }
    for _ in 0..m {
        for i in (1..omega).rev() {
            word.push(i as usize);
        }
    }
    word
}
