//! Closed forms and case analyses for the Suzuki groups, `L₂(q)`, and small
//! alternating groups.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::analysis::{Classified, Verdict};
use crate::chartab::CharacterTable;
use crate::cyclotomic::{factorize, Cyclotomic, ValueKind};
use crate::dixon;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::permgroup::DEFAULT_ENUM_CAP;

fn big(n: u128) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn frac(n: u128, d: u128) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn verdict(name: &str, passed: bool, detail: String) -> Verdict {
    Verdict {
        name: name.to_owned(),
        passed,
        detail,
    }
}

/// Parameters of `Suz(q)` for `q = 2^e`, `e` odd and at least 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuzData {
    pub q: u128,
    pub e: u32,
    pub r: u128,
    pub group_order: u128,
    /// `|A₀|, |A₁|, |A₂|`.
    pub a_orders: [u128; 3],
    /// `|G₀|, |G₁|, |G₂|`: elements conjugate into `Aᵢ − {1}`.
    pub fused_sizes: [u128; 3],
    pub class_count: u128,
}

impl SuzData {
    pub fn new(q: u64) -> Result<Self> {
        let e = q.trailing_zeros();
        if !q.is_power_of_two() || e < 3 || e % 2 == 0 || e > 31 {
            return Err(Error::InvalidParameter(format!(
                "Suzuki parameter q = {q} must be 2^e with e odd, 3 <= e <= 31"
            )));
        }
        let q = q as u128;
        let r = 1u128 << ((e + 1) / 2);
        let group_order = q * q * (q - 1) * (q * q + 1);
        let a_orders = [q - 1, q + r + 1, q - r + 1];
        let l = [2, 4, 4];
        let fused_sizes = [0, 1, 2].map(|i| (a_orders[i] - 1) / l[i] * (group_order / a_orders[i]));
        Ok(SuzData {
            q,
            e,
            r,
            group_order,
            a_orders,
            fused_sizes,
            class_count: q + 3,
        })
    }
}

/// `1/2 + (q+1)(q²+2) / (2q²(q²+1))`.
pub fn suz_theta(q: u64) -> Result<BigRational> {
    let d = SuzData::new(q)?;
    let q = d.q;
    Ok(frac(1, 2) + frac((q + 1) * (q * q + 2), 2 * q * q * (q * q + 1)))
}

/// `1/2 + 5 / (2(q+3))`.
pub fn suz_theta_prime(q: u64) -> Result<BigRational> {
    let d = SuzData::new(q)?;
    Ok(frac(1, 2) + frac(5, 2 * (d.q + 3)))
}

/// Recounts θ and θ′ from the class census and checks they match the closed forms.
pub fn suz_consistency(q: u64) -> Result<Vec<Verdict>> {
    let d = SuzData::new(q)?;
    let g = d.group_order;
    let [g0, g1, g2] = d.fused_sizes;
    let (qq, r) = (d.q, d.r);
    let theta = suz_theta(q)?;
    let theta_prime = suz_theta_prime(q)?;

    let row_count = frac(g - g0 - 1, g);
    let col_count = frac(qq / 2 + 4, qq + 3);
    let residue = g - 1 - g0 - g1 - g2;
    Ok(vec![
        verdict(
            "fused_sizes",
            1 + g0 + g1 + g2 < g,
            format!("1 + {g0} + {g1} + {g2} < {g}, residue {residue}"),
        ),
        verdict(
            "theta_row_count",
            row_count == theta,
            format!("(|G| - |G0| - 1)/|G| = {row_count}, closed form {theta}"),
        ),
        verdict(
            "theta_prime_column_count",
            col_count == theta_prime,
            format!("(q/2 + 4)/(q + 3) = {col_count}, closed form {theta_prime}"),
        ),
        verdict(
            "centralizer_below_class_count",
            qq - 1 < d.class_count,
            format!("|C(g)| = {} < {} classes", qq - 1, d.class_count),
        ),
        verdict(
            "w_rows_dominate",
            g0 + g1 + g2 > g - g0 - 1,
            format!("{} > {}", g0 + g1 + g2, g - g0 - 1),
        ),
        verdict(
            "other_rows_dominate",
            g0 + g2 > g - g0 - 1,
            format!("{} > {}", g0 + g2, g - g0 - 1),
        ),
        verdict(
            "g12_columns_dominate",
            3 * qq + 12 >= r + 2 * qq + 16,
            format!("(3q - r + 12)/4 = {} >= q/2 + 4 = {}", frac(3 * qq + 12 - r, 4), qq / 2 + 4),
        ),
    ])
}

/// `γₛ = ζ^s + ζ^{-s}` with `ζ` of order `q − 1` is never zero or a root of unity.
pub fn suz_gamma_classification(q: u64) -> Result<Vec<Verdict>> {
    let d = SuzData::new(q)?;
    let m = d.q - 1;
    // 6s ± m ≡ 0 (mod 3m) and 4s ± m ≡ 0 (mod 2m) are solvable iff gcd(6, 3m) | m and
    // gcd(4, 2m) | m respectively.
    let root_solvable = m % 6u128.gcd(&(3 * m)) == 0;
    let zero_solvable = m % 4u128.gcd(&(2 * m)) == 0;
    let mut out = vec![
        verdict(
            "gamma_never_unit_modulus",
            !root_solvable,
            format!("gcd(6, 3(q-1)) = {} does not divide q - 1 = {m}", 6u128.gcd(&(3 * m))),
        ),
        verdict(
            "gamma_never_zero",
            !zero_solvable,
            format!("gcd(4, 2(q-1)) = {} does not divide q - 1 = {m}", 4u128.gcd(&(2 * m))),
        ),
    ];
    if d.q <= 32 {
        let n = m as u64;
        let classes: Vec<_> = (1..n as i64)
            .into_par_iter()
            .map(|s| {
                let g = Cyclotomic::root_of_unity(n, s).unwrap() + Cyclotomic::root_of_unity(n, -s).unwrap();
                (s, g.classify())
            })
            .collect();
        let bad: Vec<i64> = classes
            .iter()
            .filter(|(_, c)| c.kind != ValueKind::Other || c.mean < frac(3, 2))
            .map(|(s, _)| *s)
            .collect();
        let min_mean = classes.iter().map(|(_, c)| c.mean.clone()).min().unwrap();
        out.push(verdict(
            "gamma_exact_classification",
            bad.is_empty(),
            if bad.is_empty() {
                format!("all {} values are other, least mean {min_mean}", classes.len())
            } else {
                format!("s = {bad:?} fail")
            },
        ));
    }
    Ok(out)
}

/// Counts for `L₂(q)`; `b_size` is absent for even `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L2Census {
    pub q: u64,
    pub group_order: u128,
    pub class_count: u128,
    pub g0: u128,
    pub g1: u128,
    pub a_size: u128,
    pub b_size: Option<u128>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L2Bounds {
    pub lb_theta: BigRational,
    pub lb_theta_prime: BigRational,
    pub census: L2Census,
}

/// Lower bounds on θ and θ′ of `L₂(q)` from the vanishing patterns of its characters.
pub fn l2_bounds(q: u64) -> Result<L2Bounds> {
    let f = factorize(q);
    if f.len() != 1 || q < 4 {
        return Err(Error::InvalidParameter(format!(
            "L2 parameter q = {q} must be a prime power >= 4"
        )));
    }
    let p = f[0].0;
    let qq = q as u128;
    if p != 2 {
        let g = qq * (qq * qq - 1) / 2;
        let cl = (qq + 5) / 2;
        let g0 = qq * (qq + 1) * (qq - 3) / 4;
        let g1 = qq * (qq - 1) * (qq - 1) / 4;
        let ab = (qq * qq - 1) / 2;
        let lb_theta = frac((g0 + g1).min(2 * ab + g0), g);
        let mut terms = vec![frac(cl - (qq - 3) / 4, cl), frac(cl - (qq - 1) / 4, cl)];
        if ab * cl >= g {
            terms.push(frac((qq + 1) / 2, cl));
        }
        Ok(L2Bounds {
            lb_theta,
            lb_theta_prime: terms.into_iter().min().unwrap(),
            census: L2Census {
                q,
                group_order: g,
                class_count: cl,
                g0,
                g1,
                a_size: ab,
                b_size: Some(ab),
            },
        })
    } else {
        let g = qq * (qq * qq - 1);
        let cl = qq + 1;
        let g0 = qq * (qq + 1) * (qq - 2) / 2;
        let g1 = qq * qq * (qq - 1) / 2;
        let a = qq * qq - 1;
        let lb_theta = frac((g - 1).min(g0 + a).min(g1 + a), g);
        let mut terms = vec![frac(qq / 2 + 2, cl), frac(qq / 2 + 1, cl)];
        if a * cl >= g {
            terms.push(BigRational::one());
        }
        Ok(L2Bounds {
            lb_theta,
            lb_theta_prime: terms.into_iter().min().unwrap(),
            census: L2Census {
                q,
                group_order: g,
                class_count: cl,
                g0,
                g1,
                a_size: a,
                b_size: None,
            },
        })
    }
}

/// Prime powers in `lo..=hi`.
pub fn prime_powers(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&q| q > 1 && factorize(q).len() == 1).collect()
}

/// Result of checking one alternating group.
#[derive(Clone, Debug)]
pub struct AltReport {
    pub n: usize,
    pub table: CharacterTable,
    pub theta: BigRational,
    pub theta_prime: BigRational,
    pub verdicts: Vec<Verdict>,
}

/// Computes the table of `Aₙ` and checks the θ/θ′ bounds and the law for irrational
/// values: at a class of cycle type λ (distinct odd parts), `4·𝔪(α) = 1 + Πλᵢ`, and
/// `4|α|² = 1 + Πλᵢ` when `α` is not real.
pub fn alt_verify(n: usize) -> Result<AltReport> {
    alt_verify_with_cap(n, DEFAULT_ENUM_CAP)
}

pub fn alt_verify_with_cap(n: usize, cap: usize) -> Result<AltReport> {
    if !(5..=9).contains(&n) {
        return Err(Error::InvalidParameter(format!("alternating degree {n} must be in 5..=9")));
    }
    let group = fixtures::alternating(n).enumerate_with_cap(cap)?;
    let table = dixon::character_table(&group, &format!("A{n}"))?;
    let cl = Classified::new(&table);
    let theta = cl.theta();
    let theta_prime = cl.theta_prime();
    let bound = if n < 9 { frac(1, 2) } else { frac(3, 4) };

    let mut failures = Vec::new();
    let mut irrational = 0usize;
    for c in 0..table.num_classes() {
        let cycle_type = group.representative(c).cycle_type();
        let distinct_odd = cycle_type.iter().all(|l| l % 2 == 1)
            && cycle_type.windows(2).all(|w| w[0] != w[1]);
        let product: u128 = cycle_type.iter().map(|&l| l as u128).product();
        let target = big(1 + product);
        for (i, row) in table.values.iter().enumerate() {
            let a = &row[c];
            if a.to_integer().is_some() {
                continue;
            }
            irrational += 1;
            let four = big(4);
            let mean_ok = &four * &cl.classes[i][c].mean == target;
            let norm = (a * &a.complex_conjugate()).scale(&four);
            let real = a.complex_conjugate() == *a;
            let norm_ok = real || norm.to_rational().as_ref() == Some(&target);
            if !distinct_odd || !mean_ok || !norm_ok {
                failures.push(format!("value {a} at ({i}, {c}) with cycle type {cycle_type:?}"));
            }
        }
    }
    let irr_detail = if failures.is_empty() {
        format!("{irrational} irrational entries obey the law")
    } else {
        format!("{} (of {} failures)", failures[0], failures.len())
    };
    let verdicts = vec![
        verdict(
            "theta_bound",
            theta > bound,
            format!("theta = {theta} > {bound}"),
        ),
        verdict(
            "theta_prime_bound",
            theta_prime > bound,
            format!("theta' = {theta_prime} > {bound}"),
        ),
        verdict("irrational_value_law", failures.is_empty(), irr_detail),
    ];
    Ok(AltReport {
        n,
        table,
        theta,
        theta_prime,
        verdicts,
    })
}
