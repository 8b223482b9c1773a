//! Exact arithmetic in cyclotomic fields.
//!
//! A [`Cyclotomic`] is an element of some ℚ(ζₙ) written in the Zumbroich basis of
//! the smallest such field. For a prime power `p^a` exactly dividing `n`, write the
//! `p`-component of an exponent as `x = i + p^(a-1)·k` with `0 <= i < p^(a-1)`. The
//! basis keeps `k ∈ {1, …, p-1}` for odd `p` and `k = 0` for `p = 2`; a basis
//! element of ℚ(ζₙ) is a product of such components, one per prime. Because every
//! value is stored in the basis of its own conductor, structural equality is field
//! equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact element of a cyclotomic field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u64,
    terms: Vec<(u64, BigRational)>,
}

/// Zero / root of unity / anything else, together with the Galois mean of `|α|²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueClass {
    pub kind: ValueKind,
    pub mean: BigRational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum ValueKind {
    Zero,
    RootOfUnity,
    Other,
}

impl ValueClass {
    pub fn is_root_or_zero(&self) -> bool {
        matches!(self.kind, ValueKind::Zero | ValueKind::RootOfUnity)
    }
}

pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut a = 0;
            while n % p == 0 {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let ext = (a as i64).extended_gcd(&(m as i64));
    debug_assert_eq!(ext.gcd, 1);
    ext.x.rem_euclid(m as i64) as u64
}

fn zeros(n: u64) -> Vec<BigRational> {
    vec![BigRational::zero(); n as usize]
}

/// Rewrites `dense` (indexed by exponents of ζₙ, `n ≢ 2 mod 4`) in the Zumbroich basis.
fn reduce_to_basis(n: u64, dense: &mut [BigRational]) {
    for (p, a) in factorize(n) {
        let pa = p.pow(a);
        let m = n / pa;
        let inv = mod_inverse(m % pa, pa);
        let top = pa / p;
        let step = m * top;
        for e in 0..n {
            if dense[e as usize].is_zero() {
                continue;
            }
            let digit = (e % pa) * inv % pa / top;
            if p == 2 {
                if digit == 1 {
                    let c = std::mem::take(&mut dense[e as usize]);
                    dense[((e + step) % n) as usize] -= c;
                }
            } else if digit == 0 {
                let c = std::mem::take(&mut dense[e as usize]);
                for k in 1..p {
                    dense[((e + k * step) % n) as usize] -= &c;
                }
            }
        }
    }
}

/// Tries to move a reduced element into a maximal proper subfield ℚ(ζ_{n/p}).
fn shrink(n: u64, dense: &[BigRational]) -> Option<(u64, Vec<BigRational>)> {
    let support: Vec<u64> = (0..n).filter(|&e| !dense[e as usize].is_zero()).collect();
    for (p, a) in factorize(n) {
        if a >= 2 {
            if support.iter().all(|e| e % p == 0) {
                // ℚ(ζ_{2m}) = ℚ(ζ_m) for odd m, so strip 4 at once.
                let div = if p == 2 && a == 2 { 4 } else { p };
                debug_assert!(support.iter().all(|e| e % div == 0));
                let new_n = n / div;
                let mut out = zeros(new_n);
                for &e in &support {
                    out[(e / div) as usize] = dense[e as usize].clone();
                }
                return Some((new_n, out));
            }
        } else {
            let m = n / p;
            let mut groups: Vec<Option<(u64, &BigRational)>> = vec![None; m as usize];
            let mut uniform = true;
            for &e in &support {
                let c = &dense[e as usize];
                match &mut groups[(e % m) as usize] {
                    slot @ None => *slot = Some((1, c)),
                    Some((count, first)) => {
                        if *first != c {
                            uniform = false;
                            break;
                        }
                        *count += 1;
                    }
                }
            }
            if !uniform || groups.iter().flatten().any(|(count, _)| *count != p - 1) {
                continue;
            }
            let mut out = zeros(m);
            for (r, slot) in groups.iter().enumerate() {
                if let Some((_, c)) = slot {
                    let r = r as u64;
                    let t = (0..p).find(|t| (r + m * t) % p == 0).unwrap();
                    let e0 = r + m * t;
                    out[(e0 / p) as usize] -= *c;
                }
            }
            return Some((m, out));
        }
    }
    None
}

impl Cyclotomic {
    /// Canonicalizes a dense coefficient vector over the powers of ζₙ.
    pub(crate) fn from_dense(n: u64, dense: Vec<BigRational>) -> Self {
        assert_eq!(dense.len() as u64, n);
        let (mut n, mut dense) = if n % 4 == 2 {
            let m = n / 2;
            let mut out = zeros(m);
            for (e, c) in dense.into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let e = e as u64;
                if e % 2 == 0 {
                    out[(e / 2) as usize] += c;
                } else {
                    out[(((e + m) / 2) % m) as usize] -= c;
                }
            }
            (m, out)
        } else {
            (n, dense)
        };
        reduce_to_basis(n, &mut dense);
        while let Some((m, smaller)) = shrink(n, &dense) {
            n = m;
            dense = smaller;
        }
        let terms: Vec<_> = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u64, c))
            .collect();
        if terms.is_empty() {
            return Self::zero();
        }
        Cyclotomic { order: n, terms }
    }

    /// Builds `Σ coeffs[k]·ζₙᵏ`.
    pub fn from_coefficients<I, C>(n: u64, coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigRational>,
    {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut dense = zeros(n);
        for (k, c) in coeffs {
            dense[k.rem_euclid(n as i64) as usize] += c.into();
        }
        Ok(Self::from_dense(n, dense))
    }

    pub fn zero() -> Self {
        Cyclotomic {
            order: 1,
            terms: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            order: 1,
            terms: vec![(0, q)],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    /// ζₙᵏ.
    pub fn root_of_unity(n: u64, k: i64) -> Result<Self> {
        Self::from_coefficients(n, [(k, BigRational::one())])
    }

    /// The order of the field the value is stored in. Equal to the conductor.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Nonzero `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> &[(u64, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match (self.order, self.terms.as_slice()) {
            (1, []) => Some(BigRational::zero()),
            (1, [(_, c)]) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    /// 𝔣(α): the least `k` with α ∈ ℚ(ζₖ). Never ≡ 2 (mod 4).
    pub fn conductor(&self) -> u64 {
        self.order
    }

    /// Numeric value under ζₙ ↦ e^{2πi/n}.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        self.terms
            .iter()
            .map(|(e, c)| {
                let angle = 2.0 * std::f64::consts::PI * (*e as f64) / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle)
            })
            .sum()
    }

    fn lifted(&self, n: u64) -> impl Iterator<Item = (u64, &BigRational)> {
        let scale = n / self.order;
        self.terms.iter().map(move |(e, c)| (e * scale, c))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            order: self.order,
            terms: self.terms.iter().map(|(e, c)| (*e, c * q)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The field automorphism ζₙ ↦ ζₙᵏ.
    pub fn galois_conjugate(&self, k: i64) -> Result<Self> {
        let n = self.order;
        if n == 1 {
            return Ok(self.clone());
        }
        let k = k.rem_euclid(n as i64) as u64;
        if k.gcd(&n) != 1 {
            return Err(Error::NotCoprime {
                k: k as i64,
                order: n,
            });
        }
        let mut dense = zeros(n);
        for (e, c) in &self.terms {
            dense[(e * k % n) as usize] += c;
        }
        Ok(Self::from_dense(n, dense))
    }

    pub fn complex_conjugate(&self) -> Self {
        self.galois_conjugate(-1)
            .expect("-1 is a unit modulo every order")
    }

    /// 𝔪(α): the average of `σ(α·ᾱ)` over all automorphisms σ of ℚ(ζₙ).
    pub fn galois_mean(&self) -> BigRational {
        let norm = self * &self.complex_conjugate();
        let n = norm.order;
        if n == 1 {
            return norm.to_rational().unwrap();
        }
        let mut dense = zeros(n);
        let mut count = 0u64;
        for k in (1..n).filter(|k| k.gcd(&n) == 1) {
            count += 1;
            for (e, c) in &norm.terms {
                dense[(e * k % n) as usize] += c;
            }
        }
        let trace = Self::from_dense(n, dense)
            .to_rational()
            .expect("a sum over the full Galois group is rational");
        trace / BigRational::from_integer(count.into())
    }

    /// Exact test `α^lcm(2, n) = 1`.
    pub fn is_root_of_unity(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        // Every root of unity has modulus exactly one; skip the exact power when the
        // embedding is far from the unit circle and the coefficients are small.
        let small = self
            .terms
            .iter()
            .all(|(_, c)| c.abs() < BigRational::from_integer(1_000_000.into()));
        if small && (self.to_complex().norm_sqr() - 1.0).abs() > 1e-6 {
            return false;
        }
        let exponent = self.order.lcm(&2);
        self.pow(exponent) == Self::one()
    }

    pub fn classify(&self) -> ValueClass {
        if self.is_zero() {
            ValueClass {
                kind: ValueKind::Zero,
                mean: BigRational::zero(),
            }
        } else if self.is_root_of_unity() {
            ValueClass {
                kind: ValueKind::RootOfUnity,
                mean: BigRational::one(),
            }
        } else {
            ValueClass {
                kind: ValueKind::Other,
                mean: self.galois_mean(),
            }
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_at(text, 1, 1)
    }
}

fn binary_dense(
    a: &Cyclotomic,
    b: &Cyclotomic,
    combine: impl Fn(&mut Vec<BigRational>, u64, &Cyclotomic, &Cyclotomic),
) -> Cyclotomic {
    let n = a.order.lcm(&b.order);
    let mut dense = zeros(n);
    combine(&mut dense, n, a, b);
    Cyclotomic::from_dense(n, dense)
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;

    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if let (Some(x), Some(y)) = (self.to_rational(), rhs.to_rational()) {
            return Cyclotomic::from_rational(x + y);
        }
        binary_dense(self, rhs, |dense, n, a, b| {
            for (e, c) in a.lifted(n).chain(b.lifted(n)) {
                dense[e as usize] += c;
            }
        })
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;

    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;

    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || rhs.is_zero() {
            return Cyclotomic::zero();
        }
        if let Some(q) = self.to_rational() {
            return rhs.scale(&q);
        }
        if let Some(q) = rhs.to_rational() {
            return self.scale(&q);
        }
        binary_dense(self, rhs, |dense, n, a, b| {
            for (ea, ca) in a.lifted(n) {
                for (eb, cb) in b.lifted(n) {
                    dense[((ea + eb) % n) as usize] += ca * cb;
                }
            }
        })
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$f(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| &acc + &x)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}

impl From<BigRational> for Cyclotomic {
    fn from(q: BigRational) -> Self {
        Cyclotomic::from_rational(q)
    }
}

// Rendering

fn write_rational(f: &mut impl fmt::Write, q: &BigRational) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mut term = String::new();
            if *e == 0 {
                write_rational(&mut term, c)?;
            } else {
                if c.is_one() {
                } else if (-c).is_one() {
                    term.push('-');
                } else {
                    write_rational(&mut term, c)?;
                    term.push('*');
                }
                term.push_str(&format!("E({})", self.order));
                if *e != 1 {
                    term.push_str(&format!("^{e}"));
                }
            }
            if i > 0 && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Parsing

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    _src: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, self.column + self.pos, message)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected '{want}', found '{c}'"))),
            None => Err(self.err(format!("expected '{want}', found end of input"))),
        }
    }

    fn unsigned(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn int(&mut self) -> Result<BigInt> {
        let negative = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let v = self.unsigned()?;
        Ok(if negative { -v } else { v })
    }

    fn rational(&mut self) -> Result<BigRational> {
        let num = self.unsigned()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let den = self.unsigned()?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn atom(&mut self) -> Result<Cyclotomic> {
        match self.peek() {
            Some('E') => {
                self.pos += 1;
                self.expect('(')?;
                let n = self.unsigned()?;
                let n = n
                    .to_u64()
                    .ok_or_else(|| self.err("root order too large"))?;
                if n == 0 {
                    return Err(self.err("root order must be positive"));
                }
                self.expect(')')?;
                let k = if self.peek() == Some('^') {
                    self.pos += 1;
                    let k = self.int()?;
                    k.mod_floor(&BigInt::from(n)).to_i64().unwrap()
                } else {
                    1
                };
                Cyclotomic::root_of_unity(n, k)
            }
            Some(c) if c.is_ascii_digit() => Ok(Cyclotomic::from_rational(self.rational()?)),
            Some(c) => Err(self.err(format!("unexpected '{c}'"))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn term(&mut self) -> Result<Cyclotomic> {
        let negative = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut value = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let q = self.rational()?;
            if self.peek() == Some('*') {
                self.pos += 1;
                self.atom()?.scale(&q)
            } else {
                Cyclotomic::from_rational(q)
            }
        } else {
            self.atom()?
        };
        if negative {
            value = -value;
        }
        Ok(value)
    }

    fn expr(&mut self) -> Result<Cyclotomic> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') | Some('-') => {
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                None => return Ok(acc),
                Some(c) => return Err(self.err(format!("unexpected '{c}'"))),
            }
        }
    }
}

/// Parses a literal whose first character sits at `line:column` of some larger text.
pub(crate) fn parse_at(text: &str, line: usize, column: usize) -> Result<Cyclotomic> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
        line,
        column,
        _src: text,
    };
    parser.expr()
}

impl FromStr for Cyclotomic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Cyclotomic::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    #[test]
    fn root_of_unity_examples() {
        assert_eq!(z(1, 0), Cyclotomic::one());
        assert_eq!(z(4, 2), Cyclotomic::from_int(-1));
        let lhs = z(6, 1);
        let rhs = -z(3, 2);
        assert_eq!(lhs, rhs);
        let expected = Complex64::from_polar(1.0, std::f64::consts::PI / 3.0);
        assert!(close(lhs.to_complex(), expected, 1e-12));
        assert!(z(6, 1).order() == 3);
        assert!(matches!(Cyclotomic::root_of_unity(0, 1), Err(Error::ZeroOrder)));
    }

    #[test]
    fn arithmetic_examples() {
        assert!((&z(4, 1) + &z(4, 3)).is_zero());
        let a = &Cyclotomic::one() + &z(5, 1);
        let b = &Cyclotomic::one() + &z(5, 4);
        let prod = &a * &b;
        let expected = &(&Cyclotomic::from_int(2) + &z(5, 1)) + &z(5, 4);
        assert_eq!(prod, expected);
        let numeric = 2.0 + 2.0 * (72f64).to_radians().cos();
        assert!((prod.to_complex().re - numeric).abs() < 1e-12);
        assert!((numeric - 2.618).abs() < 1e-3);
    }

    #[test]
    fn sums_of_all_roots_vanish() {
        for n in 2..40 {
            let total: Cyclotomic = (0..n as i64).map(|k| z(n, k)).sum();
            assert!(total.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn galois_examples() {
        assert_eq!(z(5, 1).galois_conjugate(2).unwrap(), z(5, 2));
        let r = Cyclotomic::from_rational(q(7, 3));
        assert_eq!(r.galois_conjugate(5).unwrap(), r);
        let a = &Cyclotomic::one() + &z(7, 3);
        let image = a.galois_conjugate(3).unwrap();
        assert_eq!(image, &Cyclotomic::one() + &z(7, 2));
        let numeric = Complex64::new(1.0, 0.0) + Complex64::from_polar(1.0, 4.0 * std::f64::consts::PI / 7.0);
        assert!(close(image.to_complex(), numeric, 1e-12));
        assert!(matches!(
            z(6, 1).galois_conjugate(3),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn complex_conjugate_examples() {
        assert_eq!(z(8, 1).complex_conjugate(), z(8, 7));
        assert_eq!(Cyclotomic::from_int(5).complex_conjugate(), Cyclotomic::from_int(5));
    }

    #[test]
    fn galois_mean_examples() {
        for (n, k) in [(1, 0), (3, 1), (8, 3), (12, 5), (9, 2)] {
            assert_eq!(z(n, k).galois_mean(), BigRational::one());
            assert_eq!((-z(n, k)).galois_mean(), BigRational::one());
        }
        assert_eq!((&z(5, 1) - &Cyclotomic::one()).galois_mean(), q(5, 2));
        // Brute force over the four embeddings of ℚ(ζ₅).
        let alpha = &Cyclotomic::one() + &z(5, 1);
        let brute: f64 = (1..5)
            .map(|k| (Complex64::new(1.0, 0.0) + Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / 5.0)).norm_sqr())
            .sum::<f64>()
            / 4.0;
        assert!((brute - 1.5).abs() < 1e-12);
        assert_eq!(alpha.galois_mean(), q(3, 2));
    }

    #[test]
    fn conductor_examples() {
        assert_eq!(Cyclotomic::from_int(7).conductor(), 1);
        let sqrt2 = &z(8, 1) + &z(8, 7);
        assert_eq!(sqrt2.conductor(), 8);
        assert!((sqrt2.to_complex().re - 2f64.sqrt()).abs() < 1e-12);
        // Not representable in ℚ(ζ₄): its square is 2 but it is not ±1±i-like.
        assert_eq!(&sqrt2 * &sqrt2, Cyclotomic::from_int(2));
        assert_eq!(z(5, 1).conductor(), 5);
        assert_eq!(z(4, 1).conductor(), 4);
        assert_eq!(z(10, 3).conductor(), 5);
        // √-3 = ζ₃ - ζ₃² lives in ℚ(ζ₃); written over ζ₁₂ it must shrink.
        let s = &z(12, 4) - &z(12, 8);
        assert_eq!(s.conductor(), 3);
    }

    #[test]
    fn root_of_unity_detection() {
        assert!(z(7, 3).is_root_of_unity());
        assert!((-z(7, 3)).is_root_of_unity());
        let a = &Cyclotomic::one() + &z(5, 1);
        assert!(!a.is_root_of_unity());
        assert_ne!(a.pow(10), Cyclotomic::one());
        assert!(!Cyclotomic::zero().is_root_of_unity());
        // -ζ₃ = ζ₆ written as a sum in the basis of ℚ(ζ₃)
        assert!((&z(3, 1) + &Cyclotomic::one()).is_root_of_unity());
    }

    #[test]
    fn parse_and_render() {
        let a: Cyclotomic = "E(5)+E(5)^4".parse().unwrap();
        assert_eq!(a, &z(5, 1) + &z(5, 4));
        assert_eq!(a.to_string(), "E(5)+E(5)^4");
        let b: Cyclotomic = "-3/2*E(8)^3".parse().unwrap();
        assert_eq!(b, z(8, 3).scale(&q(-3, 2)));
        assert_eq!(b.to_string(), "-3/2*E(8)^3");
        assert_eq!("E(4)^2".parse::<Cyclotomic>().unwrap().to_string(), "-1");
        assert_eq!("E(3)^0+E(3)".parse::<Cyclotomic>().unwrap().to_string(), "-E(3)^2");
        assert_eq!(Cyclotomic::zero().to_string(), "0");
        assert_eq!("1+E(4)".parse::<Cyclotomic>().unwrap().to_string(), "1+E(4)");
    }

    #[test]
    fn parse_errors() {
        match Cyclotomic::parse("E(0)") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 4),
            other => panic!("{other:?}"),
        }
        assert!(Cyclotomic::parse("E(5)+").is_err());
        assert!(Cyclotomic::parse("3/0").is_err());
        assert!(Cyclotomic::parse("E5").is_err());
        assert!(Cyclotomic::parse("").is_err());
        assert!(Cyclotomic::parse("2 3").is_err());
    }

    #[test]
    fn zumbroich_dimension_matches_phi() {
        // Reducing every power of ζₙ lands on exactly φ(n) basis exponents.
        for n in [3u64, 4, 5, 7, 8, 9, 12, 15, 16, 20, 21, 24, 36, 45] {
            let mut seen = std::collections::BTreeSet::new();
            for k in 0..n {
                let mut dense = zeros(n);
                dense[k as usize] = BigRational::one();
                reduce_to_basis(n, &mut dense);
                seen.extend((0..n).filter(|&e| !dense[e as usize].is_zero()));
            }
            assert_eq!(seen.len() as u64, euler_phi(n), "n = {n}");
        }
    }
}
