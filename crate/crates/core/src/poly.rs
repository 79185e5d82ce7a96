//! Sparse exact polynomials in `(x, s)` and in a single variable `x`.
//!
//! Both types keep no zero coefficients, so structural equality is polynomial
//! equality. Terms are iterated in canonical order: descending `x` degree, then
//! descending `s` degree. That same order drives the text rendering, e.g.
//! `x^3 + 6*s*x^2 + 9*s^2*x`.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::ops::{Add, Mul, Neg, Sub};

pub use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient, always in lowest terms with a positive denominator.
pub type BigRat = num_rational::BigRational;

pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

// Integer coefficients skip `Ratio` normalization; a gcd against the
// denominator 1 costs time quadratic in the bit length.
fn mul_coeff(a: &BigRat, b: &BigRat) -> BigRat {
    if a.is_integer() && b.is_integer() {
        BigRat::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

fn add_coeff(acc: &mut BigRat, c: BigRat) {
    if acc.is_integer() && c.is_integer() {
        *acc = BigRat::from_integer(acc.numer() + c.numer());
    } else {
        *acc += c;
    }
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, BigRat>, key: K, c: BigRat) {
    match map.entry(key) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            add_coeff(o.get_mut(), c);
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Writes one signed term. `monomial` is empty for a constant.
fn write_term(out: &mut impl fmt::Write, first: bool, c: &BigRat, monomial: &str) -> fmt::Result {
    let negative = c.is_negative();
    match (first, negative) {
        (true, true) => out.write_char('-')?,
        (true, false) => {}
        (false, true) => out.write_str(" - ")?,
        (false, false) => out.write_str(" + ")?,
    }
    let magnitude = c.abs();
    if monomial.is_empty() {
        write!(out, "{magnitude}")
    } else if magnitude.is_one() {
        out.write_str(monomial)
    } else {
        write!(out, "{magnitude}*{monomial}")
    }
}

fn power_str(out: &mut String, var: char, e: u32) {
    match e {
        0 => {}
        1 => out.push(var),
        _ => {
            out.push(var);
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

/// Polynomial in the commuting variables `x` and `s` over the rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    // key is (deg_x, deg_s); canonical order is the reverse of the map order
    terms: BTreeMap<(u32, u32), BigRat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    pub fn x() -> Self {
        Self::monomial(BigRat::one(), 1, 0)
    }

    pub fn s() -> Self {
        Self::monomial(BigRat::one(), 0, 1)
    }

    /// `c * x^deg_x * s^deg_s`.
    pub fn monomial(c: BigRat, deg_x: u32, deg_s: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_x, deg_s), c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(deg_x, deg_s, coefficient)` triples, summing repeats.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, BigRat)>,
    {
        let mut map = BTreeMap::new();
        for (dx, ds, c) in terms {
            add_into(&mut map, (dx, ds), c);
        }
        Self { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(One::is_one)
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(deg_x, deg_s, coefficient)` in canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, u32, &BigRat)> + '_ {
        self.terms.iter().rev().map(|(&(dx, ds), c)| (dx, ds, c))
    }

    pub fn coefficient(&self, deg_x: u32, deg_s: u32) -> BigRat {
        self.terms.get(&(deg_x, deg_s)).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn max_deg_x(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|&(dx, _)| dx)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&k, v)| (k, mul_coeff(v, c))).collect() }
    }

    /// Multiplies by `x^dx * s^ds`.
    pub fn shift(&self, dx: u32, ds: u32) -> Self {
        Self { terms: self.terms.iter().map(|(&(a, b), v)| ((a + dx, b + ds), v.clone())).collect() }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact value at `(x0, s0)`.
    pub fn evaluate(&self, x0: &BigRat, s0: &BigRat) -> BigRat {
        let Some(max_x) = self.max_deg_x() else {
            return BigRat::zero();
        };
        let max_s = self.terms.keys().map(|&(_, ds)| ds).max().unwrap_or(0);
        let xp = powers(x0, max_x);
        let sp = powers(s0, max_s);
        self.terms
            .iter()
            .map(|(&(dx, ds), c)| c * &xp[dx as usize] * &sp[ds as usize])
            .fold(BigRat::zero(), |acc, v| acc + v)
    }

    /// Replaces every `x^(2k)` by `q^k`, leaving `s` exponents untouched.
    ///
    /// This realizes evaluation at `x = sqrt(q)` for polynomials even in `x`.
    /// Powers of `q` are built by repeated multiplication.
    pub fn even_substitute(&self, q: &BiPoly) -> Result<BiPoly> {
        if let Some(&(dx, _)) = self.terms.keys().find(|(dx, _)| dx % 2 == 1) {
            return Err(Error::OddDegree { degree: dx });
        }
        let top = self.max_deg_x().unwrap_or(0) / 2;
        let mut q_pows = Vec::with_capacity(top as usize + 1);
        q_pows.push(BiPoly::one());
        for k in 1..=top as usize {
            let next = &q_pows[k - 1] * q;
            q_pows.push(next);
        }
        let mut out = BTreeMap::new();
        for (&(dx, ds), c) in &self.terms {
            for (&(a, b), d) in &q_pows[(dx / 2) as usize].terms {
                add_into(&mut out, (a, b + ds), mul_coeff(c, d));
            }
        }
        Ok(BiPoly { terms: out })
    }

    /// `(max weight, homogeneous?)` where `x^i s^j` has weight `w_x*i + w_s*j`.
    pub fn weighted_degree(&self, w_x: u32, w_s: u32) -> Result<(u64, bool)> {
        let mut weights = self
            .terms
            .keys()
            .map(|&(dx, ds)| u64::from(w_x) * u64::from(dx) + u64::from(w_s) * u64::from(ds));
        let first = weights.next().ok_or(Error::ZeroPolynomial)?;
        let (max, homogeneous) =
            weights.fold((first, true), |(m, h), w| (m.max(w), h && w == first));
        Ok((max, homogeneous))
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// `p(x, -s)`.
    pub fn negate_s(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(dx, ds), c)| ((dx, ds), if ds % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// `p(x, s0)` as a polynomial in `x`.
    pub fn specialize_s(&self, s0: &BigRat) -> UniPoly {
        let max_s = self.terms.keys().map(|&(_, ds)| ds).max().unwrap_or(0);
        let sp = powers(s0, max_s);
        let mut out = BTreeMap::new();
        for (&(dx, ds), c) in &self.terms {
            add_into(&mut out, dx, c * &sp[ds as usize]);
        }
        UniPoly { coeffs: out }
    }

    /// Canonical rendering, cut after `max_terms` terms.
    pub fn render_truncated(&self, max_terms: usize) -> String {
        render_truncated(self, self.len(), max_terms)
    }
}

fn render_truncated(p: &impl fmt::Display, len: usize, max_terms: usize) -> String {
    let full = p.to_string();
    if len <= max_terms {
        return full;
    }
    // terms are separated by " + " or " - " at the top level
    let mut seen = 0;
    let bytes = full.as_bytes();
    for i in 1..bytes.len().saturating_sub(2) {
        if bytes[i] == b' ' && (bytes[i + 1] == b'+' || bytes[i + 1] == b'-') && bytes[i + 2] == b' ' {
            seen += 1;
            if seen == max_terms {
                let mut s = String::from(&full[..i]);
                let _ = write!(s, " + ... ({} more terms)", len - max_terms);
                return s;
            }
        }
    }
    full
}

fn powers(base: &BigRat, max: u32) -> Vec<BigRat> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(BigRat::one());
    for k in 1..=max as usize {
        let next = &out[k - 1] * base;
        out.push(next);
    }
    out
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut monomial = String::new();
        for (i, (dx, ds, c)) in self.terms().enumerate() {
            monomial.clear();
            power_str(&mut monomial, 's', ds);
            if ds > 0 && dx > 0 {
                monomial.push('*');
            }
            power_str(&mut monomial, 'x', dx);
            write_term(f, i == 0, c, &monomial)?;
        }
        Ok(())
    }
}

impl From<BigRat> for BiPoly {
    fn from(c: BigRat) -> Self {
        Self::constant(c)
    }
}

/// Product of two polynomials in an auxiliary variable `z` whose coefficients
/// are `BiPoly`s (index `i` holds the coefficient of `z^i`).
pub fn convolve(a: &[BiPoly], b: &[BiPoly]) -> Vec<BiPoly> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BiPoly::zero(); a.len() + b.len() - 1];
    for (i, p) in a.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        for (j, q) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(p * q);
        }
    }
    out
}

/// Polynomial in one variable `x` over the rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: BTreeMap<u32, BigRat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    pub fn x() -> Self {
        Self::monomial(BigRat::one(), 1)
    }

    pub fn monomial(c: BigRat, deg: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(deg, c);
        }
        Self { coeffs }
    }

    /// Integer coefficients listed from degree 0 upward.
    pub fn from_coeffs(ascending: &[i64]) -> Self {
        let mut coeffs = BTreeMap::new();
        for (k, &c) in ascending.iter().enumerate() {
            add_into(&mut coeffs, k as u32, rat(c));
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms as `(degree, coefficient)`, highest degree first.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &BigRat)> + '_ {
        self.coeffs.iter().rev().map(|(&k, c)| (k, c))
    }

    pub fn coefficient(&self, deg: u32) -> BigRat {
        self.coeffs.get(&deg).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|(&k, v)| (k, mul_coeff(v, c))).collect() }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn evaluate(&self, x0: &BigRat) -> BigRat {
        let Some(top) = self.degree() else {
            return BigRat::zero();
        };
        let mut acc = BigRat::zero();
        for k in (0..=top).rev() {
            acc *= x0;
            if let Some(c) = self.coeffs.get(&k) {
                acc += c;
            }
        }
        acc
    }

    /// `self(inner(x))`, by Horner's rule over polynomials.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        let Some(top) = self.degree() else {
            return UniPoly::zero();
        };
        let mut acc = UniPoly::zero();
        for k in (0..=top).rev() {
            acc = &acc * inner;
            if let Some(c) = self.coeffs.get(&k) {
                acc = &acc + &UniPoly::constant(c.clone());
            }
        }
        acc
    }

    /// Replaces every `x^(2k)` by `q^k`.
    pub fn even_substitute(&self, q: &UniPoly) -> Result<UniPoly> {
        if let Some(&k) = self.coeffs.keys().find(|k| *k % 2 == 1) {
            return Err(Error::OddDegree { degree: k });
        }
        let halved = UniPoly { coeffs: self.coeffs.iter().map(|(&k, c)| (k / 2, c.clone())).collect() };
        Ok(halved.compose(q))
    }

    /// Exact division by `x`; `None` if the constant term is nonzero.
    pub fn div_x(&self) -> Option<UniPoly> {
        if self.coeffs.contains_key(&0) {
            return None;
        }
        Some(UniPoly { coeffs: self.coeffs.iter().map(|(&k, c)| (k - 1, c.clone())).collect() })
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// Dense coefficients from degree 0 upward, rounded to `f64`.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        let len = self.degree().map_or(0, |d| d as usize + 1);
        let mut out = vec![0.0; len];
        for (&k, c) in &self.coeffs {
            out[k as usize] = c.to_f64().unwrap_or(f64::NAN);
        }
        out
    }

    /// The same polynomial viewed in `(x, s)`.
    pub fn to_bipoly(&self) -> BiPoly {
        BiPoly::from_terms(self.coeffs.iter().map(|(&k, c)| (k, 0, c.clone())))
    }

    pub fn render_truncated(&self, max_terms: usize) -> String {
        render_truncated(self, self.len(), max_terms)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut monomial = String::new();
        for (i, (k, c)) in self.terms().enumerate() {
            monomial.clear();
            power_str(&mut monomial, 'x', k);
            write_term(f, i == 0, c, &monomial)?;
        }
        Ok(())
    }
}

impl From<BigRat> for UniPoly {
    fn from(c: BigRat) -> Self {
        Self::constant(c)
    }
}

macro_rules! ring_ops {
    ($ty:ident, $field:ident, $mul_key:expr) => {
        impl Add<&$ty> for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                let (big, small) =
                    if self.$field.len() >= rhs.$field.len() { (self, rhs) } else { (rhs, self) };
                let mut out = big.$field.clone();
                for (k, c) in &small.$field {
                    add_into(&mut out, k.clone(), c.clone());
                }
                $ty { $field: out }
            }
        }

        impl Sub<&$ty> for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                let mut out = self.$field.clone();
                for (k, c) in &rhs.$field {
                    add_into(&mut out, k.clone(), -c);
                }
                $ty { $field: out }
            }
        }

        impl Mul<&$ty> for &$ty {
            type Output = $ty;
            fn mul(self, rhs: &$ty) -> $ty {
                let mut out = BTreeMap::new();
                for (a, c) in &self.$field {
                    for (b, d) in &rhs.$field {
                        add_into(&mut out, $mul_key(a, b), mul_coeff(c, d));
                    }
                }
                $ty { $field: out }
            }
        }

        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty { $field: self.$field.iter().map(|(k, c)| (k.clone(), -c)).collect() }
            }
        }

        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }

        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }

        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }

        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }

        impl core::iter::Sum for $ty {
            fn sum<I: Iterator<Item = $ty>>(iter: I) -> $ty {
                iter.fold($ty::zero(), |acc, p| &acc + &p)
            }
        }
    };
}

ring_ops!(BiPoly, terms, |a: &(u32, u32), b: &(u32, u32)| (a.0 + b.0, a.1 + b.1));
ring_ops!(UniPoly, coeffs, |a: &u32, b: &u32| a + b);
