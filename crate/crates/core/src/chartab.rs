//! Character tables: data model, validation, direct products and the `CHARTABLE v1`
//! text format.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

use crate::cyclotomic::{self, Cyclotomic};
use crate::error::{Error, Result};

/// Rows are irreducible characters, columns are conjugacy classes; the identity
/// class is always column 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub name: String,
    pub group_order: u64,
    pub class_sizes: Vec<u64>,
    pub element_orders: Vec<u64>,
    /// `power_maps[s][c]` is the class of `gˢ` for `g` in class `c`; may be empty.
    pub power_maps: Vec<Vec<usize>>,
    pub values: Vec<Vec<Cyclotomic>>,
}

/// One failed table invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Shape(String),
    IdentityClass,
    ClassSizeSum { sum: u64, order: u64 },
    ClassSizeDivides { class: usize, size: u64 },
    Degree { row: usize, value: String },
    DegreeDivides { row: usize, degree: u64 },
    DegreeSquares { sum: u64, order: u64 },
    FirstOrthogonality { rows: (usize, usize), value: String },
    SecondOrthogonality { classes: (usize, usize), value: String },
    ValueField { row: usize, class: usize, conductor: u64 },
    PowerMap { power: usize, class: usize, detail: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape(s) => write!(f, "shape: {s}"),
            Violation::IdentityClass => f.write_str("class 0 is not the identity class"),
            Violation::ClassSizeSum { sum, order } => {
                write!(f, "class sizes sum to {sum}, group order is {order}")
            }
            Violation::ClassSizeDivides { class, size } => {
                write!(f, "class {class} has size {size} not dividing the group order")
            }
            Violation::Degree { row, value } => {
                write!(f, "row {row} has degree {value}, not a positive integer")
            }
            Violation::DegreeDivides { row, degree } => {
                write!(f, "row {row} has degree {degree} not dividing the group order")
            }
            Violation::DegreeSquares { sum, order } => {
                write!(f, "squared degrees sum to {sum}, group order is {order}")
            }
            Violation::FirstOrthogonality { rows, value } => write!(
                f,
                "first orthogonality fails for rows {} and {}: inner sum {value}",
                rows.0, rows.1
            ),
            Violation::SecondOrthogonality { classes, value } => write!(
                f,
                "second orthogonality fails for classes {} and {}: column sum {value}",
                classes.0, classes.1
            ),
            Violation::ValueField {
                row,
                class,
                conductor,
            } => write!(
                f,
                "value at row {row}, class {class} has conductor {conductor} not dividing the element order"
            ),
            Violation::PowerMap {
                power,
                class,
                detail,
            } => write!(f, "power map {power} at class {class}: {detail}"),
        }
    }
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn num_characters(&self) -> usize {
        self.values.len()
    }

    /// Column 0 as integers. Panics on a table whose first column is not integral.
    pub fn degrees(&self) -> Vec<u64> {
        self.values
            .iter()
            .map(|row| {
                row[0]
                    .to_integer()
                    .and_then(|d| u64::try_from(d).ok())
                    .expect("degrees are positive integers")
            })
            .collect()
    }

    pub fn centralizer_order(&self, class: usize) -> u64 {
        self.group_order / self.class_sizes[class]
    }

    pub fn exponent(&self) -> u64 {
        self.element_orders.iter().fold(1, |acc, o| acc.lcm(o))
    }

    pub fn is_abelian(&self) -> bool {
        self.class_sizes.iter().all(|&s| s == 1)
    }

    /// Class of `g⁻¹` for `g` in `class`, read from the power maps.
    pub fn inverse_class(&self, class: usize) -> Option<usize> {
        let m = self.element_orders[class] as usize;
        self.power_maps.get(m - 1).map(|row| row[class])
    }

    fn is_trivial_row(row: &[Cyclotomic]) -> bool {
        let one = Cyclotomic::one();
        row.iter().all(|v| *v == one)
    }

    /// Trivial character first, then ascending degree, then rendered values.
    pub fn sort_rows(&mut self) {
        let mut keyed: Vec<_> = std::mem::take(&mut self.values)
            .into_iter()
            .map(|row| {
                let key = (
                    !Self::is_trivial_row(&row),
                    row[0].to_integer(),
                    row.iter().map(Cyclotomic::to_string).collect::<Vec<_>>(),
                );
                (key, row)
            })
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        self.values = keyed.into_iter().map(|(_, row)| row).collect();
    }

    /// Checks every table invariant; an empty result means the table is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let k = self.num_classes();
        if self.element_orders.len() != k {
            out.push(Violation::Shape(format!(
                "{k} class sizes but {} element orders",
                self.element_orders.len()
            )));
        }
        if self.values.len() != k || self.values.iter().any(|r| r.len() != k) {
            out.push(Violation::Shape(format!(
                "value matrix is not {k} x {k}"
            )));
        }
        if let Some(bad) = self.power_maps.iter().position(|row| row.len() != k) {
            out.push(Violation::Shape(format!("power map {bad} has wrong length")));
        }
        if !out.is_empty() || k == 0 {
            if k == 0 {
                out.push(Violation::Shape("no classes".into()));
            }
            return out;
        }

        let order = self.group_order;
        let sum: u64 = self.class_sizes.iter().sum();
        if sum != order {
            out.push(Violation::ClassSizeSum { sum, order });
        }
        if self.class_sizes[0] != 1 || self.element_orders[0] != 1 {
            out.push(Violation::IdentityClass);
        }
        for (class, &size) in self.class_sizes.iter().enumerate() {
            if size == 0 || order % size != 0 {
                out.push(Violation::ClassSizeDivides { class, size });
            }
        }

        let mut degrees = Vec::with_capacity(k);
        for (row, values) in self.values.iter().enumerate() {
            match values[0].to_integer().and_then(|d| u64::try_from(d).ok()) {
                Some(d) if d > 0 => {
                    if order % d != 0 {
                        out.push(Violation::DegreeDivides { row, degree: d });
                    }
                    degrees.push(d);
                }
                _ => out.push(Violation::Degree {
                    row,
                    value: values[0].to_string(),
                }),
            }
        }
        if degrees.len() == k {
            let squares: u64 = degrees.iter().map(|d| d * d).sum();
            if squares != order {
                out.push(Violation::DegreeSquares {
                    sum: squares,
                    order,
                });
            }
        }

        for (row, values) in self.values.iter().enumerate() {
            for (class, v) in values.iter().enumerate() {
                let m = self.element_orders[class];
                if m == 0 || m % v.conductor() != 0 {
                    out.push(Violation::ValueField {
                        row,
                        class,
                        conductor: v.conductor(),
                    });
                }
            }
        }

        let conj: Vec<Vec<Cyclotomic>> = self
            .values
            .par_iter()
            .map(|row| row.iter().map(Cyclotomic::complex_conjugate).collect())
            .collect();
        let sizes: Vec<Cyclotomic> = self
            .class_sizes
            .iter()
            .map(|&s| Cyclotomic::from_int(s as i64))
            .collect();

        let first: Vec<Violation> = (0..k)
            .into_par_iter()
            .flat_map_iter(|a| {
                let conj = &conj;
                let sizes = &sizes;
                (a..k).filter_map(move |b| {
                    let inner: Cyclotomic = (0..k)
                        .map(|c| &(&sizes[c] * &self.values[a][c]) * &conj[b][c])
                        .sum();
                    let expected = if a == b { order as i64 } else { 0 };
                    (inner != Cyclotomic::from_int(expected)).then(|| {
                        Violation::FirstOrthogonality {
                            rows: (a, b),
                            value: inner.to_string(),
                        }
                    })
                })
            })
            .collect();
        out.extend(first);

        let second: Vec<Violation> = (0..k)
            .into_par_iter()
            .flat_map_iter(|c| {
                let conj = &conj;
                (c..k).filter_map(move |d| {
                    let column: Cyclotomic = (0..k)
                        .map(|r| &self.values[r][c] * &conj[r][d])
                        .sum();
                    let expected = if c == d {
                        self.centralizer_order(c) as i64
                    } else {
                        0
                    };
                    (column != Cyclotomic::from_int(expected)).then(|| {
                        Violation::SecondOrthogonality {
                            classes: (c, d),
                            value: column.to_string(),
                        }
                    })
                })
            })
            .collect();
        out.extend(second);

        out.extend(self.power_map_violations());
        out
    }

    /// χ(gˢ) must be the image of χ(g) under ζₘ ↦ ζₘˢ whenever `gcd(s, m) = 1`.
    fn power_map_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let k = self.num_classes();
        for (s, row) in self.power_maps.iter().enumerate() {
            for c in 0..k {
                let target = row[c];
                if target >= k {
                    out.push(Violation::PowerMap {
                        power: s,
                        class: c,
                        detail: format!("class index {target} out of range"),
                    });
                    continue;
                }
                let m = self.element_orders[c];
                let expected_order = m / (s as u64).gcd(&m).max(1);
                if s == 0 && target != 0 || s > 0 && self.element_orders[target] != expected_order
                {
                    out.push(Violation::PowerMap {
                        power: s,
                        class: c,
                        detail: format!("lands in class {target} of the wrong element order"),
                    });
                    continue;
                }
                if s == 0 || (s as u64) >= m || (s as u64).gcd(&m) != 1 {
                    continue;
                }
                for (r, values) in self.values.iter().enumerate() {
                    let image = values[c]
                        .galois_conjugate(s as i64)
                        .expect("coprime to the element order");
                    if image != values[target] {
                        out.push(Violation::PowerMap {
                            power: s,
                            class: c,
                            detail: format!("row {r} is not Galois-compatible"),
                        });
                        break;
                    }
                }
            }
        }
        out
    }

    pub fn validated(self) -> Result<Self> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(self)
        } else {
            Err(Error::Validation(violations))
        }
    }

    /// Kronecker product: classes are pairs `(i, j)` flattened as `i·k_b + j`.
    pub fn direct_product(&self, other: &CharacterTable) -> CharacterTable {
        let (ka, kb) = (self.num_classes(), other.num_classes());
        let pairs = || (0..ka).flat_map(move |i| (0..kb).map(move |j| (i, j)));
        let class_sizes = pairs()
            .map(|(i, j)| self.class_sizes[i] * other.class_sizes[j])
            .collect();
        let element_orders = pairs()
            .map(|(i, j)| self.element_orders[i].lcm(&other.element_orders[j]))
            .collect();
        let power_maps = if self.power_maps.is_empty() || other.power_maps.is_empty() {
            Vec::new()
        } else {
            let exponent = self.exponent().lcm(&other.exponent()) as usize;
            let (ea, eb) = (self.power_maps.len(), other.power_maps.len());
            (0..exponent)
                .map(|s| {
                    pairs()
                        .map(|(i, j)| {
                            self.power_maps[s % ea][i] * kb + other.power_maps[s % eb][j]
                        })
                        .collect()
                })
                .collect()
        };
        let mut values = Vec::with_capacity(ka * kb);
        for chi in &self.values {
            for psi in &other.values {
                values.push(pairs().map(|(i, j)| &chi[i] * &psi[j]).collect());
            }
        }
        let mut table = CharacterTable {
            name: format!("{}x{}", self.name, other.name),
            group_order: self.group_order * other.group_order,
            class_sizes,
            element_orders,
            power_maps,
            values,
        };
        table.sort_rows();
        table
    }

    /// The table with every value replaced by its image under ζ ↦ ζᵏ.
    pub fn galois_conjugate(&self, k: i64) -> Result<CharacterTable> {
        let values = self
            .values
            .iter()
            .map(|row| row.iter().map(|v| v.galois_conjugate(k)).collect())
            .collect::<Result<_>>()?;
        Ok(CharacterTable {
            values,
            ..self.clone()
        })
    }

    /// Same table up to reordering rows and classes (class sizes and element orders
    /// must be carried along).
    pub fn is_equivalent(&self, other: &CharacterTable) -> bool {
        let k = self.num_classes();
        if self.group_order != other.group_order
            || k != other.num_classes()
            || self.num_characters() != other.num_characters()
        {
            return false;
        }
        let signature = |t: &CharacterTable, c: usize| {
            let mut col: Vec<String> = t.values.iter().map(|r| r[c].to_string()).collect();
            col.sort();
            (t.class_sizes[c], t.element_orders[c], col)
        };
        let sig_a: Vec<_> = (0..k).map(|c| signature(self, c)).collect();
        let sig_b: Vec<_> = (0..k).map(|c| signature(other, c)).collect();
        let rendered = |t: &CharacterTable| -> Vec<Vec<String>> {
            t.values
                .iter()
                .map(|r| r.iter().map(Cyclotomic::to_string).collect())
                .collect()
        };
        let (ra, rb) = (rendered(self), rendered(other));

        fn prefix_rows(rows: &[Vec<String>], cols: &[usize]) -> Vec<Vec<String>> {
            let mut out: Vec<Vec<String>> = rows
                .iter()
                .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
                .collect();
            out.sort();
            out
        }

        fn search(
            depth: usize,
            image: &mut Vec<usize>,
            used: &mut [bool],
            ctx: &(
                &[(u64, u64, Vec<String>)],
                &[(u64, u64, Vec<String>)],
                &[Vec<String>],
                &[Vec<String>],
            ),
        ) -> bool {
            let (sig_a, sig_b, ra, rb) = *ctx;
            if depth == sig_a.len() {
                return true;
            }
            for cand in 0..sig_b.len() {
                if used[cand] || sig_a[depth] != sig_b[cand] {
                    continue;
                }
                image.push(cand);
                let domain: Vec<usize> = (0..=depth).collect();
                if prefix_rows(ra, &domain) == prefix_rows(rb, image) {
                    used[cand] = true;
                    if search(depth + 1, image, used, ctx) {
                        return true;
                    }
                    used[cand] = false;
                }
                image.pop();
            }
            false
        }

        let mut image = Vec::with_capacity(k);
        let mut used = vec![false; k];
        search(
            0,
            &mut image,
            &mut used,
            &(&sig_a[..], &sig_b[..], &ra[..], &rb[..]),
        )
    }

    pub fn render(&self) -> String {
        let join = |xs: &mut dyn Iterator<Item = String>| xs.collect::<Vec<_>>().join(" ");
        let mut out = String::from("CHARTABLE v1\n");
        out.push_str(&format!("name: {}\n", self.name));
        out.push_str(&format!("order: {}\n", self.group_order));
        out.push_str(&format!("classes: {}\n", self.num_classes()));
        out.push_str(&format!(
            "classsizes: {}\n",
            join(&mut self.class_sizes.iter().map(u64::to_string))
        ));
        out.push_str(&format!(
            "elementorders: {}\n",
            join(&mut self.element_orders.iter().map(u64::to_string))
        ));
        for (s, row) in self.power_maps.iter().enumerate() {
            out.push_str(&format!(
                "powermap {s}: {}\n",
                join(&mut row.iter().map(usize::to_string))
            ));
        }
        for (i, row) in self.values.iter().enumerate() {
            out.push_str(&format!(
                "X{}: {}\n",
                i + 1,
                join(&mut row.iter().map(Cyclotomic::to_string))
            ));
        }
        out
    }

    /// Parses the `CHARTABLE v1` format. Only structural problems are reported here;
    /// call [`CharacterTable::validate`] (or use [`CharacterTable::load`]) for the
    /// mathematical invariants.
    pub fn parse(text: &str) -> Result<CharacterTable> {
        TableParser::default().run(text)
    }

    /// Parse, then validate.
    pub fn load(text: &str) -> Result<CharacterTable> {
        Self::parse(text)?.validated()
    }
}

#[derive(Default)]
struct TableParser {
    name: Option<String>,
    order: Option<u64>,
    classes: Option<usize>,
    class_sizes: Option<Vec<u64>>,
    element_orders: Option<Vec<u64>>,
    power_maps: Vec<(usize, Vec<usize>)>,
    rows: Vec<Vec<Cyclotomic>>,
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(s: &str, base_column: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(st)) => {
                out.push((base_column + s[..st].chars().count(), &s[st..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(st) = start {
        out.push((base_column + s[..st].chars().count(), &s[st..]));
    }
    out
}

impl TableParser {
    fn ints<T: std::str::FromStr>(line: usize, rest: &str, base: usize) -> Result<Vec<T>> {
        tokens(rest, base)
            .into_iter()
            .map(|(col, tok)| {
                tok.parse::<T>()
                    .map_err(|_| Error::parse(line, col, format!("expected an integer, found '{tok}'")))
            })
            .collect()
    }

    fn run(mut self, text: &str) -> Result<CharacterTable> {
        let mut saw_header = false;
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            last_line = line;
            let content = raw.split('#').next().unwrap();
            let trimmed = content.trim();
            if trimmed.is_empty() {
                continue;
            }
            let indent = content.len() - content.trim_start().len();
            if !saw_header {
                if trimmed != "CHARTABLE v1" {
                    return Err(Error::parse(line, indent + 1, "expected 'CHARTABLE v1' header"));
                }
                saw_header = true;
                continue;
            }
            let Some(colon) = trimmed.find(':') else {
                return Err(Error::parse(line, indent + 1, "expected 'key: value'"));
            };
            let key = trimmed[..colon].trim();
            let rest = &trimmed[colon + 1..];
            let base = indent + colon + 2;
            match key {
                "name" => self.name = Some(rest.trim().to_owned()),
                "order" => {
                    let v = Self::ints::<u64>(line, rest, base)?;
                    match v.as_slice() {
                        [n] if *n > 0 => self.order = Some(*n),
                        _ => return Err(Error::parse(line, base, "order must be one positive integer")),
                    }
                }
                "classes" => {
                    let v = Self::ints::<usize>(line, rest, base)?;
                    match v.as_slice() {
                        [n] if *n > 0 => self.classes = Some(*n),
                        _ => return Err(Error::parse(line, base, "classes must be one positive integer")),
                    }
                }
                "classsizes" => self.class_sizes = Some(self.sized(line, rest, base)?),
                "elementorders" => self.element_orders = Some(self.sized(line, rest, base)?),
                _ if key.starts_with("powermap") => {
                    let s = key["powermap".len()..].trim().parse::<usize>().map_err(|_| {
                        Error::parse(line, indent + 9, "expected 'powermap <s>:'")
                    })?;
                    let row: Vec<usize> = self.sized(line, rest, base)?;
                    self.power_maps.push((s, row));
                }
                _ if key.starts_with('X') && key[1..].parse::<usize>().is_ok() => {
                    let k = self.expect_classes(line)?;
                    let toks = tokens(rest, base);
                    if toks.len() != k {
                        return Err(Error::parse(
                            line,
                            base,
                            format!("row has {} values, expected {k}", toks.len()),
                        ));
                    }
                    let row = toks
                        .into_iter()
                        .map(|(col, tok)| cyclotomic::parse_at(tok, line, col))
                        .collect::<Result<Vec<_>>>()?;
                    self.rows.push(row);
                }
                other => {
                    return Err(Error::parse(line, indent + 1, format!("unknown key '{other}'")))
                }
            }
        }
        if !saw_header {
            return Err(Error::parse(1, 1, "empty table file"));
        }
        let end = last_line + 1;
        let k = self
            .classes
            .ok_or_else(|| Error::parse(end, 1, "missing 'classes:'"))?;
        if self.rows.len() != k {
            return Err(Error::parse(
                end,
                1,
                format!("value matrix has {} rows, expected {k}", self.rows.len()),
            ));
        }
        self.power_maps.sort_by_key(|(s, _)| *s);
        if self.power_maps.iter().enumerate().any(|(i, (s, _))| i != *s) {
            return Err(Error::parse(end, 1, "power maps must be numbered 0, 1, 2, ... without gaps"));
        }
        Ok(CharacterTable {
            name: self.name.unwrap_or_default(),
            group_order: self
                .order
                .ok_or_else(|| Error::parse(end, 1, "missing 'order:'"))?,
            class_sizes: self
                .class_sizes
                .ok_or_else(|| Error::parse(end, 1, "missing 'classsizes:'"))?,
            element_orders: self
                .element_orders
                .ok_or_else(|| Error::parse(end, 1, "missing 'elementorders:'"))?,
            power_maps: self.power_maps.into_iter().map(|(_, row)| row).collect(),
            values: self.rows,
        })
    }

    fn expect_classes(&self, line: usize) -> Result<usize> {
        self.classes
            .ok_or_else(|| Error::parse(line, 1, "'classes:' must precede this line"))
    }

    fn sized<T: std::str::FromStr>(&self, line: usize, rest: &str, base: usize) -> Result<Vec<T>> {
        let k = self.expect_classes(line)?;
        let v = Self::ints::<T>(line, rest, base)?;
        if v.len() != k {
            return Err(Error::parse(
                line,
                base,
                format!("expected {k} entries, found {}", v.len()),
            ));
        }
        Ok(v)
    }
}

/// Degree of a row as an integer, when it is one.
pub fn row_degree(row: &[Cyclotomic]) -> Option<BigInt> {
    row.first().and_then(Cyclotomic::to_integer)
}
