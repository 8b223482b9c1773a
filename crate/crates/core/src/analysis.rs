//! Root-of-unity-or-zero statistics of a character table and mechanical checks of
//! the vanishing theorems and classical bounds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::chartab::CharacterTable;
use crate::cyclotomic::{factorize, Cyclotomic, ValueClass, ValueKind};
use crate::error::{Error, Result};

pub fn classify_value(a: &Cyclotomic) -> ValueClass {
    a.classify()
}

/// Number of distinct primes dividing `degree`.
pub fn omega(degree: u64) -> u32 {
    assert!(degree >= 1, "degree must be positive");
    factorize(degree).len() as u32
}

fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `q` rounded half away from zero to `digits` decimals.
pub fn decimal(q: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = q.abs() * BigRational::from_integer(scale.clone());
    let rounded = (scaled + ratio(1, 2)).floor().to_integer();
    let (int, frac) = rounded.div_rem(&scale);
    let sign = if q.is_negative() && !rounded.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{:0>width$}", frac.to_string(), width = digits)
    }
}

/// One named check and its outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    fn new(name: &str, failures: Vec<String>, ok_detail: impl Into<String>) -> Self {
        let passed = failures.is_empty();
        let detail = match failures.len() {
            0 => ok_detail.into(),
            1 => failures[0].clone(),
            n => format!("{} (and {} more)", failures[0], n - 1),
        };
        Verdict {
            name: name.to_owned(),
            passed,
            detail,
        }
    }
}

pub fn all_passed(verdicts: &[Verdict]) -> bool {
    verdicts.iter().all(|v| v.passed)
}

/// A table with every entry classified once.
pub struct Classified<'a> {
    pub table: &'a CharacterTable,
    pub classes: Vec<Vec<ValueClass>>,
}

impl<'a> Classified<'a> {
    pub fn new(table: &'a CharacterTable) -> Self {
        let classes = table
            .values
            .par_iter()
            .map(|row| row.iter().map(Cyclotomic::classify).collect())
            .collect();
        Classified { table, classes }
    }

    fn order(&self) -> u64 {
        self.table.group_order
    }

    fn k(&self) -> u64 {
        self.table.num_classes() as u64
    }

    fn degrees(&self) -> Vec<u64> {
        self.table.degrees()
    }

    /// Classes with `|gᴳ| ≥ |G|/|Cl(G)|`.
    pub fn qualifying_classes(&self) -> Vec<usize> {
        (0..self.table.num_classes())
            .filter(|&c| self.table.class_sizes[c] * self.k() >= self.order())
            .collect()
    }

    /// Number of elements where row `i` takes each kind of value: (zero, root of unity).
    pub fn row_counts(&self, i: usize) -> (u64, u64) {
        let mut zero = 0;
        let mut root = 0;
        for (c, v) in self.classes[i].iter().enumerate() {
            match v.kind {
                ValueKind::Zero => zero += self.table.class_sizes[c],
                ValueKind::RootOfUnity => root += self.table.class_sizes[c],
                ValueKind::Other => {}
            }
        }
        (zero, root)
    }

    /// Number of rows with a zero / root of unity in column `c`.
    pub fn column_counts(&self, c: usize) -> (u64, u64) {
        let mut zero = 0;
        let mut root = 0;
        for row in &self.classes {
            match row[c].kind {
                ValueKind::Zero => zero += 1,
                ValueKind::RootOfUnity => root += 1,
                ValueKind::Other => {}
            }
        }
        (zero, root)
    }

    pub fn theta(&self) -> BigRational {
        (0..self.classes.len())
            .map(|i| {
                let (z, r) = self.row_counts(i);
                ratio(z + r, self.order())
            })
            .min()
            .expect("a table has at least one row")
    }

    pub fn theta_prime(&self) -> BigRational {
        let qualifying = self.qualifying_classes();
        assert!(!qualifying.is_empty(), "the largest class always qualifies");
        let rows = self.classes.len() as u64;
        qualifying
            .into_iter()
            .map(|c| {
                let (z, r) = self.column_counts(c);
                ratio(z + r, rows)
            })
            .min()
            .unwrap()
    }

    pub fn galois_mean_identities(&self) -> Vec<Verdict> {
        let t = self.table;
        let mut worst = BigRational::zero();
        let mut row_failures = Vec::new();
        for (i, row) in self.classes.iter().enumerate() {
            let sum: BigRational = row
                .iter()
                .zip(&t.class_sizes)
                .map(|(v, &s)| &v.mean * BigRational::from_integer(s.into()))
                .sum();
            let dev = (&sum - BigRational::from_integer(t.group_order.into())).abs();
            if !dev.is_zero() {
                row_failures.push(format!("row {i}: sum of means is {sum}, expected {}", t.group_order));
            }
            worst = worst.max(dev);
        }
        let mut col_failures = Vec::new();
        for c in 0..t.num_classes() {
            let sum: BigRational = self.classes.iter().map(|row| row[c].mean.clone()).sum();
            let expected = ratio(t.group_order, t.class_sizes[c]);
            let dev = (&sum - &expected).abs();
            if !dev.is_zero() {
                col_failures.push(format!("class {c}: sum of means is {sum}, expected {expected}"));
            }
            worst = worst.max(dev);
        }
        let ok = format!("worst deviation {worst}");
        vec![
            Verdict::new("row_mean_identity", row_failures, ok.clone()),
            Verdict::new("column_mean_identity", col_failures, ok),
        ]
    }

    pub fn classical_bounds(&self) -> Vec<Verdict> {
        let t = self.table;
        let degrees = self.degrees();
        let burnside = (0..self.classes.len())
            .filter(|&i| degrees[i] > 1)
            .filter(|&i| self.row_counts(i).0 == 0)
            .map(|i| format!("row {i} of degree {} has no zero", degrees[i]))
            .collect();
        let gallagher = (0..t.num_classes())
            .filter(|&c| t.class_sizes[c] * self.k() > self.order())
            .filter(|&c| self.column_counts(c).0 == 0)
            .map(|c| format!("class {c} of size {} has no zero", t.class_sizes[c]))
            .collect();
        let third = ratio(1, 3);
        let theta = self.theta();
        let theta_prime = self.theta_prime();
        let mut siegel = Vec::new();
        let bound = ratio(3, 2);
        for (i, row) in self.classes.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if v.kind == ValueKind::Other && v.mean < bound {
                    siegel.push(format!("value at ({i}, {c}) has mean {}", v.mean));
                }
            }
        }
        vec![
            Verdict::new("burnside_zeros", burnside, "every nonlinear row vanishes somewhere"),
            Verdict::new(
                "gallagher_zeros",
                gallagher,
                "every larger-than-average class has a zero",
            ),
            threshold("theta_gt_third", &theta, &third, true),
            threshold("theta_prime_gt_third", &theta_prime, &third, true),
            Verdict::new("siegel_mean_bound", siegel, "every other value has mean at least 3/2"),
        ]
    }

    /// Theorems for nilpotent groups; the caller vouches for nilpotency.
    pub fn nilpotent_theorems(&self, nilpotent: bool) -> Result<Vec<Verdict>> {
        if !nilpotent {
            return Err(Error::InvalidParameter(format!(
                "table '{}' is not flagged nilpotent",
                self.table.name
            )));
        }
        let t = self.table;
        let g = self.order() as i128;
        let degrees = self.degrees();
        let nonlinear: Vec<usize> = (0..self.classes.len()).filter(|&i| degrees[i] > 1).collect();

        let mut zeros_fail = Vec::new();
        let mut omega_fail = Vec::new();
        for &i in &nonlinear {
            let z = self.row_counts(i).0 as i128;
            if 2 * z <= g {
                zeros_fail.push(format!("row {i} vanishes on {z} of {g} elements"));
            }
            let d = degrees[i] as i128;
            let p = 1i128 << omega(degrees[i]);
            // z/|G| ≥ 1 − (|G| − d² + 2^ω)/(2^ω |G|)
            if z * p < p * g - (g - d * d + p) {
                omega_fail.push(format!("row {i} vanishes on {z} of {g} elements, below the omega bound"));
            }
        }

        let mut dual_fail = Vec::new();
        let n = nonlinear.len() as u64;
        for c in 0..t.num_classes() {
            let z = nonlinear
                .iter()
                .filter(|&&i| self.classes[i][c].kind == ValueKind::Zero)
                .count() as u64;
            let lhs = t.class_sizes[c] * self.k();
            if lhs > self.order() && 2 * z <= n {
                dual_fail.push(format!("class {c} vanishes on {z} of {n} nonlinear rows"));
            } else if lhs == self.order() && 2 * z < n {
                dual_fail.push(format!("class {c} vanishes on {z} of {n} nonlinear rows"));
            }
        }

        let mut lemma_fail = Vec::new();
        for (i, row) in self.classes.iter().enumerate() {
            let bound = BigRational::from_integer(BigInt::from(1u64 << omega(degrees[i])));
            for (c, v) in row.iter().enumerate() {
                if v.kind != ValueKind::Zero && v.mean < bound {
                    lemma_fail.push(format!("value at ({i}, {c}) has mean {} < {bound}", v.mean));
                }
            }
        }

        let half = ratio(1, 2);
        Ok(vec![
            Verdict::new("zeros_theorem", zeros_fail, "every nonlinear row vanishes on more than half"),
            Verdict::new("omega_bound", omega_fail, "every nonlinear row meets the omega bound"),
            Verdict::new("dual_zeros_theorem", dual_fail, "every class meets its half bound"),
            threshold("theta_gt_half", &self.theta(), &half, true),
            threshold("theta_prime_gt_half", &self.theta_prime(), &half, true),
            Verdict::new("nilpotent_mean_lemma", lemma_fail, "every nonzero value has mean at least 2^omega"),
        ])
    }

    pub fn prime_power_lemmas(&self) -> Vec<Verdict> {
        let t = self.table;
        let degrees = self.degrees();
        let two = BigRational::from_integer(2.into());
        let mut mean_fail = Vec::new();
        let mut root_fail = Vec::new();
        for c in 1..t.num_classes() {
            let f = factorize(t.element_orders[c]);
            if f.len() != 1 {
                continue;
            }
            let p = f[0].0;
            for (i, row) in self.classes.iter().enumerate() {
                let r = degrees[i] % p;
                let v = &row[c];
                if (p == 2 || (r != 2 % p && r != p - 2)) && v.kind == ValueKind::Other && v.mean < two {
                    mean_fail.push(format!("value at ({i}, {c}) has mean {}", v.mean));
                }
                if r != 1 % p && r != p - 1 && v.kind == ValueKind::RootOfUnity {
                    root_fail.push(format!("value at ({i}, {c}) is a root of unity"));
                }
            }
        }
        let mut pgroup_fail = Vec::new();
        if factorize(t.group_order).len() <= 1 {
            for (i, row) in self.classes.iter().enumerate() {
                if degrees[i] == 1 {
                    continue;
                }
                for (c, v) in row.iter().enumerate() {
                    if v.kind != ValueKind::Zero && v.mean < two {
                        pgroup_fail.push(format!("value at ({i}, {c}) has mean {}", v.mean));
                    }
                }
            }
        }
        vec![
            Verdict::new("prime_power_mean", mean_fail, "prime-power values have mean at least 2"),
            Verdict::new("prime_power_not_root", root_fail, "no forbidden roots of unity"),
            Verdict::new("p_group_mean", pgroup_fail, "p-group values are zero or have mean at least 2"),
        ]
    }
}

fn threshold(name: &str, value: &BigRational, bound: &BigRational, strict: bool) -> Verdict {
    let ok = if strict { value > bound } else { value >= bound };
    let rel = if strict { ">" } else { ">=" };
    let detail = format!("{value} {} {bound}", if ok { rel } else { "fails" });
    Verdict {
        name: name.to_owned(),
        passed: ok,
        detail,
    }
}

pub fn theta(t: &CharacterTable) -> BigRational {
    Classified::new(t).theta()
}

pub fn theta_prime(t: &CharacterTable) -> BigRational {
    Classified::new(t).theta_prime()
}

pub fn verify_galois_mean_identities(t: &CharacterTable) -> Vec<Verdict> {
    Classified::new(t).galois_mean_identities()
}

pub fn verify_classical_bounds(t: &CharacterTable) -> Vec<Verdict> {
    Classified::new(t).classical_bounds()
}

pub fn verify_nilpotent_theorems(t: &CharacterTable, nilpotent: bool) -> Result<Vec<Verdict>> {
    Classified::new(t).nilpotent_theorems(nilpotent)
}

pub fn verify_prime_power_lemmas(t: &CharacterTable) -> Vec<Verdict> {
    Classified::new(t).prime_power_lemmas()
}

/// A root of unity `ζ_order^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnitRoot {
    pub order: u64,
    pub exponent: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Congruence {
    Congruent,
    NotCongruent,
    /// The two root sums are different numbers.
    NotApplicable,
}

/// For equal sums `Σ aₖ·ρₖ = Σ bₖ·τₖ` of p-power roots of unity, whether
/// `Σ aₖ ≡ Σ bₖ (mod p)`.
pub fn root_sum_congruence(
    coeff_a: &[i64],
    roots_a: &[UnitRoot],
    coeff_b: &[i64],
    roots_b: &[UnitRoot],
    p: u64,
) -> Result<Congruence> {
    if factorize(p) != [(p, 1)] {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    if coeff_a.len() != roots_a.len() || coeff_b.len() != roots_b.len() {
        return Err(Error::InvalidParameter("coefficient and root counts differ".into()));
    }
    let combine = |coeffs: &[i64], roots: &[UnitRoot]| -> Result<Cyclotomic> {
        let mut sum = Cyclotomic::zero();
        for (&a, r) in coeffs.iter().zip(roots) {
            let f = factorize(r.order);
            if r.order == 0 || f.iter().any(|&(q, _)| q != p) {
                return Err(Error::InvalidParameter(format!(
                    "root of order {} is not a power of {p}",
                    r.order
                )));
            }
            sum = sum + Cyclotomic::root_of_unity(r.order, r.exponent)?.scale(&BigRational::from_integer(a.into()));
        }
        Ok(sum)
    };
    if combine(coeff_a, roots_a)? != combine(coeff_b, roots_b)? {
        return Ok(Congruence::NotApplicable);
    }
    let sa: i128 = coeff_a.iter().map(|&a| a as i128).sum();
    let sb: i128 = coeff_b.iter().map(|&b| b as i128).sum();
    Ok(if (sa - sb).rem_euclid(p as i128) == 0 {
        Congruence::Congruent
    } else {
        Congruence::NotCongruent
    })
}

/// Two integer combinations of `pⁿ`-th roots of unity with equal value.
#[derive(Clone, Debug)]
pub struct RootSumPair {
    pub p: u64,
    pub coeff_a: Vec<i64>,
    pub roots_a: Vec<UnitRoot>,
    pub coeff_b: Vec<i64>,
    pub roots_b: Vec<UnitRoot>,
}

/// Builds an equal pair by adding integer multiples of vanishing sums
/// `Σₖ ζ^{j + k·pⁿ⁻¹}` to a random combination and moving some terms across.
pub fn random_root_sum_pair<R: Rng>(rng: &mut R, p: u64, n: u32) -> RootSumPair {
    let q = p.pow(n);
    let step = q / p;
    let len = rng.gen_range(1..=6);
    let mut coeff_a: Vec<i64> = (0..len).map(|_| rng.gen_range(-5..=5)).collect();
    let mut roots_a: Vec<UnitRoot> = (0..len)
        .map(|_| UnitRoot {
            order: q,
            exponent: rng.gen_range(0..q as i64),
        })
        .collect();
    let mut coeff_b = coeff_a.clone();
    let mut roots_b = roots_a.clone();
    for _ in 0..rng.gen_range(1..=3) {
        let j = rng.gen_range(0..step as i64);
        let t = rng.gen_range(-3..=3i64);
        for k in 0..p as i64 {
            coeff_b.push(t);
            roots_b.push(UnitRoot {
                order: q,
                exponent: j + k * step as i64,
            });
        }
    }
    // a + x = b + x keeps the equality and mixes in terms of smaller order
    let extra = rng.gen_range(0..3);
    for _ in 0..extra {
        let order = p.pow(rng.gen_range(0..=n));
        let root = UnitRoot {
            order,
            exponent: rng.gen_range(0..order as i64),
        };
        let c = rng.gen_range(-4..=4);
        coeff_a.push(c);
        roots_a.push(root);
        coeff_b.push(c);
        roots_b.push(root);
    }
    RootSumPair {
        p,
        coeff_a,
        roots_a,
        coeff_b,
        roots_b,
    }
}

/// `count` seeded pairs cycling through `p ∈ {2, 3, 5}` and `n ∈ {1, 2, 3}`.
pub fn congruence_cases(seed: u64, count: usize) -> Vec<RootSumPair> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let p = [2, 3, 5][i % 3];
            let n = 1 + (i / 3 % 3) as u32;
            random_root_sum_pair(&mut rng, p, n)
        })
        .collect()
}

/// Runs [`root_sum_congruence`] on every case; passes iff all are congruent.
pub fn verify_congruence_cases(cases: &[RootSumPair]) -> Result<Verdict> {
    let mut failures = Vec::new();
    for (i, c) in cases.iter().enumerate() {
        let out = root_sum_congruence(&c.coeff_a, &c.roots_a, &c.coeff_b, &c.roots_b, c.p)?;
        if out != Congruence::Congruent {
            failures.push(format!("case {i} (p = {}): {out:?}", c.p));
        }
    }
    Ok(Verdict::new(
        "root_sum_congruence",
        failures,
        format!("{} equal root sums have congruent coefficient sums", cases.len()),
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterStats {
    pub index: usize,
    pub degree: u64,
    pub omega: u32,
    pub zero_count: u64,
    pub root_of_unity_count: u64,
    pub zero_fraction: String,
    pub zero_fraction_decimal: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassStats {
    pub class: usize,
    pub size: u64,
    pub zero_count: u64,
    pub root_of_unity_count: u64,
    pub root_or_zero_fraction: String,
    pub root_or_zero_fraction_decimal: String,
}

/// Everything `analyze` reports about one table.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub name: String,
    pub group_order: u64,
    pub num_classes: usize,
    pub nilpotent: bool,
    pub theta: String,
    pub theta_decimal: String,
    pub theta_prime: String,
    pub theta_prime_decimal: String,
    pub per_character: Vec<CharacterStats>,
    pub per_class: Vec<ClassStats>,
    pub verdicts: Vec<Verdict>,
    #[serde(skip)]
    pub theta_exact: BigRational,
    #[serde(skip)]
    pub theta_prime_exact: BigRational,
}

impl AnalysisReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.verdicts)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} (order {}, {} classes, nilpotent: {})\ntheta = {} ~ {}\ntheta' = {} ~ {}\n",
            self.name,
            self.group_order,
            self.num_classes,
            self.nilpotent,
            self.theta,
            self.theta_decimal,
            self.theta_prime,
            self.theta_prime_decimal
        );
        for v in &self.verdicts {
            out += &format!("[{}] {}: {}\n", if v.passed { "pass" } else { "FAIL" }, v.name, v.detail);
        }
        out
    }
}

/// θ, θ′, per-row and per-class counts, and every applicable verdict. Nilpotent
/// theorems are only checked when `nilpotent` is set.
pub fn analyze(t: &CharacterTable, nilpotent: bool) -> AnalysisReport {
    let cl = Classified::new(t);
    let theta = cl.theta();
    let theta_prime = cl.theta_prime();
    let per_character = t
        .degrees()
        .into_iter()
        .enumerate()
        .map(|(i, degree)| {
            let (z, r) = cl.row_counts(i);
            let f = ratio(z, t.group_order);
            CharacterStats {
                index: i,
                degree,
                omega: omega(degree),
                zero_count: z,
                root_of_unity_count: r,
                zero_fraction_decimal: decimal(&f, 10),
                zero_fraction: f.to_string(),
            }
        })
        .collect();
    let rows = t.num_characters() as u64;
    let per_class = cl
        .qualifying_classes()
        .into_iter()
        .map(|c| {
            let (z, r) = cl.column_counts(c);
            let f = ratio(z + r, rows);
            ClassStats {
                class: c,
                size: t.class_sizes[c],
                zero_count: z,
                root_of_unity_count: r,
                root_or_zero_fraction_decimal: decimal(&f, 10),
                root_or_zero_fraction: f.to_string(),
            }
        })
        .collect();
    let mut verdicts = cl.galois_mean_identities();
    verdicts.extend(cl.classical_bounds());
    verdicts.extend(cl.prime_power_lemmas());
    if nilpotent {
        verdicts.extend(cl.nilpotent_theorems(true).expect("flag is set"));
    }
    AnalysisReport {
        schema: 1,
        name: t.name.clone(),
        group_order: t.group_order,
        num_classes: t.num_classes(),
        nilpotent,
        theta: theta.to_string(),
        theta_decimal: decimal(&theta, 10),
        theta_prime: theta_prime.to_string(),
        theta_prime_decimal: decimal(&theta_prime, 10),
        per_character,
        per_class,
        verdicts,
        theta_exact: theta,
        theta_prime_exact: theta_prime,
    }
}

/// Rational from a `num/den` string, for reading reports back.
pub fn parse_ratio(s: &str) -> Option<BigRational> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let d: BigInt = d.trim().parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n.trim().parse().ok()?, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn c(s: &str) -> Cyclotomic {
        s.parse().unwrap()
    }

    fn q8() -> CharacterTable {
        CharacterTable::parse(
            "CHARTABLE v1\nname: Q8\norder: 8\nclasses: 5\nclasssizes: 1 1 2 2 2\n\
             elementorders: 1 2 4 4 4\n\
             X1: 1 1 1 1 1\nX2: 1 1 1 -1 -1\nX3: 1 1 -1 1 -1\nX4: 1 1 -1 -1 1\nX5: 2 -2 0 0 0\n",
        )
        .unwrap()
    }

    fn s3() -> CharacterTable {
        CharacterTable::parse(
            "CHARTABLE v1\nname: S3\norder: 6\nclasses: 3\nclasssizes: 1 3 2\n\
             elementorders: 1 2 3\nX1: 1 1 1\nX2: 1 -1 1\nX3: 2 0 -1\n",
        )
        .unwrap()
    }

    fn c4() -> CharacterTable {
        CharacterTable::parse(
            "CHARTABLE v1\nname: C4\norder: 4\nclasses: 4\nclasssizes: 1 1 1 1\n\
             elementorders: 1 4 2 4\nX1: 1 1 1 1\nX2: 1 -1 1 -1\n\
             X3: 1 E(4) -1 -E(4)\nX4: 1 -E(4) -1 E(4)\n",
        )
        .unwrap()
    }

    #[test]
    fn value_classification() {
        assert_eq!(classify_value(&c("0")).kind, ValueKind::Zero);
        let v = classify_value(&c("-E(3)"));
        assert_eq!((v.kind, v.mean), (ValueKind::RootOfUnity, BigRational::one()));
        let v = classify_value(&c("E(5)-1"));
        assert_eq!((v.kind, v.mean), (ValueKind::Other, ratio(5, 2)));
    }

    #[test]
    fn omega_examples() {
        assert_eq!((omega(1), omega(12), omega(30)), (0, 2, 3));
    }

    #[test]
    fn decimals_round_half_up() {
        assert_eq!(decimal(&ratio(3, 4), 10), "0.7500000000");
        assert_eq!(decimal(&ratio(2, 3), 4), "0.6667");
        assert_eq!(decimal(&ratio(1, 1), 2), "1.00");
        assert_eq!(decimal(&-ratio(1, 8), 2), "-0.13");
    }

    #[test]
    fn quaternion_statistics() {
        let t = q8();
        assert_eq!(theta(&t), ratio(3, 4));
        assert_eq!(theta_prime(&t), BigRational::one());
        let cl = Classified::new(&t);
        assert_eq!(cl.qualifying_classes(), vec![2, 3, 4]);
        let means: BigRational = cl.classes.iter().map(|r| r[2].mean.clone()).sum();
        assert_eq!(means, ratio(4, 1));
        assert!(all_passed(&verify_nilpotent_theorems(&t, true).unwrap()));
        assert!(verify_nilpotent_theorems(&t, false).is_err());
        assert!(all_passed(&verify_prime_power_lemmas(&t)));
    }

    #[test]
    fn omega_bound_arithmetic_on_quaternions() {
        // 1 − (8 − 4 + 2)/(2·8) = 5/8 ≤ 6/8
        let g = 8i128;
        let (d, p, z) = (2i128, 2i128, 6i128);
        assert!(z * p >= p * g - (g - d * d + p));
        assert_eq!(p * g - (g - d * d + p), 10);
    }

    #[test]
    fn abelian_and_symmetric_bounds() {
        let t = c4();
        assert_eq!(theta(&t), BigRational::one());
        assert_eq!(theta_prime(&t), BigRational::one());
        assert!(all_passed(&verify_galois_mean_identities(&t)));
        assert!(all_passed(&verify_classical_bounds(&t)));
        let t = s3();
        assert!(all_passed(&verify_classical_bounds(&t)));
        assert!(all_passed(&verify_galois_mean_identities(&t)));
        assert!(all_passed(&verify_prime_power_lemmas(&t)));
    }

    #[test]
    fn congruence_examples() {
        let r = |order, exponent| UnitRoot { order, exponent };
        let out = root_sum_congruence(
            &[1, 1, 1, 1],
            &[r(4, 0), r(4, 1), r(4, 2), r(4, 3)],
            &[],
            &[],
            2,
        )
        .unwrap();
        assert_eq!(out, Congruence::Congruent);
        let out = root_sum_congruence(&[1, 1], &[r(3, 1), r(3, 2)], &[-1], &[r(1, 0)], 3).unwrap();
        assert_eq!(out, Congruence::Congruent);
        let out = root_sum_congruence(&[1], &[r(3, 1)], &[1], &[r(1, 0)], 3).unwrap();
        assert_eq!(out, Congruence::NotApplicable);
        assert!(root_sum_congruence(&[1], &[r(6, 1)], &[], &[], 3).is_err());
        assert!(root_sum_congruence(&[1], &[r(3, 1)], &[], &[], 4).is_err());
    }

    #[test]
    fn generated_pairs_are_equal_and_congruent() {
        let cases = congruence_cases(7, 60);
        assert!(verify_congruence_cases(&cases).unwrap().passed);
    }

    #[test]
    fn report_json_shape() {
        let rep = analyze(&q8(), true);
        assert!(rep.passed());
        let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["theta"], "3/4");
        assert_eq!(v["theta_prime"], "1");
        assert_eq!(v["per_class"].as_array().unwrap().len(), 3);
        assert_eq!(v["per_character"][4]["zero_count"], 6);
        assert_eq!(parse_ratio("3/4"), Some(ratio(3, 4)));
    }
}
