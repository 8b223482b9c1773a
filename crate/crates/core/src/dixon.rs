//! Character tables by the Burnside–Dixon–Schneider method.
//!
//! The class matrices are reduced modulo a prime `p ≡ 1 (mod e)` (with `e` the group
//! exponent and `p > 2√|G|`), their common eigenvectors are found by repeated
//! eigenspace splitting over 𝔽ₚ, and each character value is lifted back to ℚ(ζₘ) by
//! an inverse discrete Fourier transform over the powers of a class representative.

use rayon::prelude::*;

use crate::chartab::CharacterTable;
use crate::cyclotomic::{factorize, Cyclotomic};
use crate::error::{Error, Result};
use crate::permgroup::GroupData;

const PRIME_SEARCH_BOUND: u64 = 1 << 31;

/// Class multiplication constants `a_{ijk} = #{x ∈ Cᵢ : x⁻¹·zₖ ∈ Cⱼ}` for fixed
/// representatives `zₖ`, so that `Cᵢ·Cⱼ = Σₖ a_{ijk} Cₖ` as class sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCoefficients {
    classes: usize,
    data: Vec<u64>,
}

impl ClassCoefficients {
    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.data[(i * self.classes + j) * self.classes + k]
    }

    pub fn num_classes(&self) -> usize {
        self.classes
    }
}

pub fn class_mult_coeffs(group: &GroupData) -> ClassCoefficients {
    let r = group.num_classes();
    let per_k: Vec<Vec<u64>> = (0..r)
        .into_par_iter()
        .map(|k| {
            let z = group.representative(k);
            let mut counts = vec![0u64; r * r];
            for (x, elem) in group.elements.iter().enumerate() {
                let i = group.class_of_index(x);
                let y = elem.inverse().then(z);
                let j = group.class_of(&y).expect("group is closed");
                counts[i * r + j] += 1;
            }
            counts
        })
        .collect();
    let mut data = vec![0u64; r * r * r];
    for (k, counts) in per_k.iter().enumerate() {
        for (ij, &c) in counts.iter().enumerate() {
            data[ij * r + k] = c;
        }
    }
    ClassCoefficients { classes: r, data }
}

// Arithmetic modulo a prime below 2^31.

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).len() == 1 && factorize(n)[0].1 == 1
}

/// Prime field data for one group.
#[derive(Clone, Debug)]
pub struct ClassMatrixContext {
    pub prime: u64,
    /// An element of multiplicative order exactly `exponent`.
    pub root: u64,
    pub exponent: u64,
    pub coefficients: ClassCoefficients,
}

/// Least prime `p ≡ 1 (mod exponent)` with `p > 2√order`.
pub fn choose_prime(exponent: u64, order: u64) -> Result<u64> {
    let mut p = exponent + 1;
    while p * p <= 4 * order || !is_prime(p) {
        p += exponent;
        if p >= PRIME_SEARCH_BOUND {
            let lower = (4.0 * order as f64).sqrt().floor() as u64;
            return Err(Error::NoPrime {
                exponent,
                lower,
                bound: PRIME_SEARCH_BOUND,
            });
        }
    }
    Ok(p)
}

/// An element of order exactly `exponent` in 𝔽ₚ*, with `exponent | p - 1`.
pub fn root_of_order(exponent: u64, p: u64) -> u64 {
    let factors: Vec<u64> = factorize(p - 1).into_iter().map(|(q, _)| q).collect();
    let generator = (2..p)
        .find(|&g| factors.iter().all(|q| pow_mod(g, (p - 1) / q, p) != 1))
        .unwrap_or(1);
    pow_mod(generator, (p - 1) / exponent, p)
}

impl ClassMatrixContext {
    pub fn new(group: &GroupData) -> Result<Self> {
        let exponent = group.exponent();
        let prime = choose_prime(exponent, group.order())?;
        Ok(ClassMatrixContext {
            prime,
            root: root_of_order(exponent, prime),
            exponent,
            coefficients: class_mult_coeffs(group),
        })
    }
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = inv_mod(rows[r][c], p);
        for v in rows[r].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for col in 0..ncols {
                    let sub = mul_mod(f, rows[r][col], p);
                    rows[i][col] = (rows[i][col] + p - sub) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{c : A c = 0}` for a square matrix `A`.
fn kernel(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut rows = a.to_vec();
    let pivots = rref(&mut rows, p);
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (row, &pc) in rows.iter().zip(&pivots) {
            v[pc] = (p - row[free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial (coefficients from the constant term up, monic) via
/// reduction to upper Hessenberg form.
fn charpoly(mut h: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = h.len();
    for j in 0..n.saturating_sub(2) {
        if h[j + 1][j] == 0 {
            if let Some(i) = (j + 2..n).find(|&i| h[i][j] != 0) {
                h.swap(i, j + 1);
                for row in h.iter_mut() {
                    row.swap(i, j + 1);
                }
            }
        }
        if h[j + 1][j] == 0 {
            continue;
        }
        let inv = inv_mod(h[j + 1][j], p);
        for i in j + 2..n {
            if h[i][j] == 0 {
                continue;
            }
            let u = mul_mod(h[i][j], inv, p);
            for k in 0..n {
                let sub = mul_mod(u, h[j + 1][k], p);
                h[i][k] = (h[i][k] + p - sub) % p;
            }
            for row in h.iter_mut() {
                let add = mul_mod(u, row[i], p);
                row[j + 1] = (row[j + 1] + add) % p;
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        // (x - h[m-1][m-1]) · p_{m-1}
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        let diag = h[m - 1][m - 1];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + p - mul_mod(diag, c, p)) % p;
        }
        let mut t = 1u64;
        for i in 1..m {
            t = mul_mod(t, h[m - i][m - i - 1], p);
            let f = mul_mod(t, h[m - i - 1][m - 1], p);
            if f == 0 {
                continue;
            }
            for (d, &c) in polys[m - i - 1].iter().enumerate() {
                next[d] = (next[d] + p - mul_mod(f, c, p)) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn roots_in_field(poly: &[u64], p: u64) -> Vec<u64> {
    (0..p)
        .filter(|&x| poly.iter().rev().fold(0u64, |acc, &c| (mul_mod(acc, x, p) + c) % p) == 0)
        .collect()
}

/// Splits an invariant subspace (rows in RREF) into eigenspaces of class matrix `i`.
fn split(
    space: Vec<Vec<u64>>,
    class: usize,
    coeffs: &ClassCoefficients,
    p: u64,
) -> Result<Vec<Vec<Vec<u64>>>> {
    let d = space.len();
    let r = coeffs.num_classes();
    let pivots: Vec<usize> = space
        .iter()
        .map(|row| row.iter().position(|&v| v != 0).unwrap())
        .collect();
    // image[t] = M · b_t; coordinates are read off at the pivots.
    let image: Vec<Vec<u64>> = space
        .iter()
        .map(|b| {
            (0..r)
                .map(|j| {
                    (0..r).fold(0u64, |acc, k| {
                        (acc + mul_mod(coeffs.get(class, j, k) % p, b[k], p)) % p
                    })
                })
                .collect()
        })
        .collect();
    // a[s][t] = coordinate s of M·b_t; eigenvectors are kernels of a - λ.
    let a: Vec<Vec<u64>> = (0..d)
        .map(|s| (0..d).map(|t| image[t][pivots[s]]).collect())
        .collect();
    let eigenvalues = roots_in_field(&charpoly(a.clone(), p), p);
    if eigenvalues.len() <= 1 {
        return Ok(vec![space]);
    }
    let mut parts = Vec::with_capacity(eigenvalues.len());
    let mut total = 0;
    for lambda in eigenvalues {
        let shifted: Vec<Vec<u64>> = a
            .iter()
            .enumerate()
            .map(|(s, row)| {
                row.iter()
                    .enumerate()
                    .map(|(t, &v)| if s == t { (v + p - lambda) % p } else { v })
                    .collect()
            })
            .collect();
        let mut vectors: Vec<Vec<u64>> = kernel(&shifted, p)
            .into_iter()
            .map(|c| {
                (0..r)
                    .map(|col| {
                        c.iter()
                            .zip(&space)
                            .fold(0u64, |acc, (&ct, b)| (acc + mul_mod(ct, b[col], p)) % p)
                    })
                    .collect()
            })
            .collect();
        rref(&mut vectors, p);
        total += vectors.len();
        parts.push(vectors);
    }
    if total != d {
        return Err(Error::Internal(format!(
            "class matrix {class} is not diagonalizable on a {d}-dimensional subspace mod {p}"
        )));
    }
    Ok(parts)
}

/// Computes the irreducible characters of an enumerated group.
pub fn character_table(group: &GroupData, name: &str) -> Result<CharacterTable> {
    let ctx = ClassMatrixContext::new(group)?;
    character_table_with(group, name, &ctx)
}

pub fn character_table_with(
    group: &GroupData,
    name: &str,
    ctx: &ClassMatrixContext,
) -> Result<CharacterTable> {
    let p = ctx.prime;
    let r = group.num_classes();
    let order = group.order();
    let sizes = group.class_sizes();

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect()];
    let mut schedule: Vec<usize> = (1..r).collect();
    schedule.sort_by_key(|&c| (sizes[c], c));
    for &class in &schedule {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::with_capacity(spaces.len());
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
            } else {
                next.extend(split(space, class, &ctx.coefficients, p)?);
            }
        }
        spaces = next;
    }
    if spaces.len() != r || spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Internal(
            "common eigenspaces of the class matrices did not separate".into(),
        ));
    }

    let inverse = &group.power_maps[(group.exponent() - 1) as usize];
    let root_bound = (order as f64).sqrt().floor() as u64 + 1;
    let mut rows = Vec::with_capacity(r);
    for space in &spaces {
        let v = &space[0];
        if v[0] == 0 {
            return Err(Error::Internal("central character vanishes at the identity".into()));
        }
        let scale = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|&x| mul_mod(x, scale, p)).collect();

        let norm = (0..r).fold(0u64, |acc, i| {
            let term = mul_mod(mul_mod(omega[i], omega[inverse[i]], p), inv_mod(sizes[i] % p, p), p);
            (acc + term) % p
        });
        if norm == 0 {
            return Err(Error::Internal("degenerate central character norm".into()));
        }
        let degree_sq = mul_mod(order % p, inv_mod(norm, p), p);
        let degree = (1..=root_bound)
            .find(|d| d * d <= order && mul_mod(*d, *d, p) == degree_sq)
            .ok_or_else(|| Error::Internal("no integer degree lifts the modular value".into()))?;

        let residues: Vec<u64> = (0..r)
            .map(|k| mul_mod(mul_mod(omega[k], degree, p), inv_mod(sizes[k] % p, p), p))
            .collect();

        let mut row = Vec::with_capacity(r);
        for j in 0..r {
            let m = group.element_orders[j];
            let zm = pow_mod(ctx.root, ctx.exponent / m, p);
            let zm_inv = inv_mod(zm, p);
            let m_inv = inv_mod(m % p, p);
            let samples: Vec<u64> = (0..m as usize)
                .map(|s| residues[group.power_maps[s][j]])
                .collect();
            let mut multiplicities = Vec::with_capacity(m as usize);
            for k in 0..m {
                let step = pow_mod(zm_inv, k, p);
                let mut twiddle = 1u64;
                let mut acc = 0u64;
                for &x in &samples {
                    acc = (acc + mul_mod(x, twiddle, p)) % p;
                    twiddle = mul_mod(twiddle, step, p);
                }
                let mu = mul_mod(acc, m_inv, p);
                if mu > degree {
                    return Err(Error::Internal(format!(
                        "eigenvalue multiplicity {mu} exceeds degree {degree} at class {j}"
                    )));
                }
                multiplicities.push((k as i64, num_rational::BigRational::from_integer(mu.into())));
            }
            let total: u64 = multiplicities
                .iter()
                .map(|(_, c)| u64::try_from(c.to_integer()).unwrap())
                .sum();
            if total != degree {
                return Err(Error::Internal(format!(
                    "multiplicities at class {j} sum to {total}, not the degree {degree}"
                )));
            }
            row.push(Cyclotomic::from_coefficients(m, multiplicities)?);
        }
        rows.push(row);
    }

    let mut table = CharacterTable {
        name: name.to_owned(),
        group_order: order,
        class_sizes: sizes,
        element_orders: group.element_orders.clone(),
        power_maps: group.power_maps.clone(),
        values: rows,
    };
    table.sort_rows();
    let violations = table.validate();
    if !violations.is_empty() {
        return Err(Error::Internal(format!(
            "computed table fails validation: {}",
            violations[0]
        )));
    }
    Ok(table)
}
