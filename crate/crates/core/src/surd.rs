//! Exact arithmetic in `Q(sqrt d)` and Binet-style evaluations.
//!
//! The characteristic roots `(x ± sqrt(x^2 + 4s)) / 2` of the Fibonacci/Lucas
//! recurrence live in `Q(sqrt(x^2 + 4s))` for rational `x, s`. Raising them to
//! powers here and comparing with the polynomial constructions gives a check
//! that shares no code path with the recurrences.

use alloc::vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{convolve, ratio, BiPoly, BigRat};

/// `a + b*sqrt(d)`. No square-free reduction is applied to `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub a: BigRat,
    pub b: BigRat,
    pub d: BigRat,
}

impl QuadExt {
    pub fn new(a: BigRat, b: BigRat, d: BigRat) -> Self {
        Self { a, b, d }
    }

    pub fn rational(a: BigRat, d: BigRat) -> Self {
        Self::new(a, BigRat::zero(), d)
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_of(d: BigRat) -> Self {
        Self::new(BigRat::zero(), BigRat::one(), d)
    }

    pub fn one(d: BigRat) -> Self {
        Self::rational(BigRat::one(), d)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::DiscriminantMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::new(&self.a + &other.a, &self.b + &other.b, self.d.clone()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::new(&self.a - &other.a, &self.b - &other.b, self.d.clone()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let a = &self.a * &other.a + &self.b * &other.b * &self.d;
        let b = &self.a * &other.b + &self.b * &other.a;
        Self::new(a, b, self.d.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = other.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self.mul_unchecked(&other.conj());
        Ok(Self::new(num.a / &n, num.b / &n, self.d.clone()))
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.a, -&self.b, self.d.clone())
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        Self::new(&self.a * c, &self.b * c, self.d.clone())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -&self.b, self.d.clone())
    }

    /// `a^2 - b^2 d`, the product with the conjugate.
    pub fn norm(&self) -> BigRat {
        &self.a * &self.a - &self.b * &self.b * &self.d
    }

    /// Binary powering.
    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.d.clone());
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
    }
}

/// The two roots `(x0 ± sqrt(x0^2 + 4 s0)) / 2` of `z^2 - x0 z - s0`.
pub fn characteristic_roots(x0: &BigRat, s0: &BigRat) -> Result<(QuadExt, QuadExt)> {
    let d = x0 * x0 + s0 * BigRat::from_integer(4.into());
    if d.is_zero() {
        return Err(Error::DegenerateDiscriminant);
    }
    let half = ratio(1, 2);
    let gamma = QuadExt::new(x0 * &half, half, d);
    let gamma_bar = gamma.conj();
    Ok((gamma, gamma_bar))
}

fn rational_part(u: QuadExt) -> BigRat {
    assert!(u.is_rational(), "irrational part failed to cancel: {u}");
    u.a
}

/// `F_n(x0, s0) = (γ^n - γ̄^n) / (γ - γ̄)`.
pub fn binet_fibonacci(n: u32, x0: &BigRat, s0: &BigRat) -> Result<BigRat> {
    let (g, gb) = characteristic_roots(x0, s0)?;
    let num = g.pow(n).sub(&gb.pow(n))?;
    let den = g.sub(&gb)?;
    Ok(rational_part(num.div(&den)?))
}

/// `L_n(x0, s0) = γ^n + γ̄^n`.
pub fn binet_lucas(n: u32, x0: &BigRat, s0: &BigRat) -> Result<BigRat> {
    let (g, gb) = characteristic_roots(x0, s0)?;
    Ok(rational_part(g.pow(n).add(&gb.pow(n))?))
}

/// `α, ᾱ = (q ± sqrt(q^2 + 4 s0)) / 2`, the roots at `x = q^2` with `sqrt(x)` taken as `q`.
pub fn alpha_roots(q: &BigRat, s0: &BigRat) -> Result<(QuadExt, QuadExt)> {
    characteristic_roots(q, s0)
}

/// `Z_n(q^2, s0) = α^(2n) + ᾱ^(2n) - 2 s0^n`.
pub fn binet_z(n: u32, q: &BigRat, s0: &BigRat) -> Result<BigRat> {
    let (alpha, alpha_bar) = alpha_roots(q, s0)?;
    let sum = alpha.pow(2 * n).add(&alpha_bar.pow(2 * n))?;
    let s_n = num_traits::pow(s0.clone(), n as usize);
    Ok(rational_part(sum)
        - s_n * BigRat::from_integer(2.into()))
}

/// Outcome of [`check_root_relations`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootRelations {
    pub alpha: QuadExt,
    pub alpha_bar: QuadExt,
    pub beta: QuadExt,
    pub beta_bar: QuadExt,
    /// `α = β`
    pub alpha_is_beta: bool,
    /// `ᾱ = -β̄`
    pub alpha_bar_is_neg_beta_bar: bool,
    /// `β β̄ = s`
    pub beta_product_is_s: bool,
    /// `α^4 - (x + 2s) α^2 + s^2 = 0`
    pub alpha_squared_on_quadratic: bool,
    /// `(z - s)(z^2 - (x+2s)z + s^2) = z^3 - (x+3s)z^2 + s(x+3s)z - s^3` symbolically.
    pub cubic_expansion: bool,
}

impl RootRelations {
    pub fn passed(&self) -> bool {
        self.alpha_is_beta
            && self.alpha_bar_is_neg_beta_bar
            && self.beta_product_is_s
            && self.alpha_squared_on_quadratic
            && self.cubic_expansion
    }
}

/// Verifies the relations between the roots `α, ᾱ` of `z^2 - sqrt(x) z - s` and
/// the roots `β, β̄` of `z^2 - sqrt(x+4s) z + s`, exactly at `x = q^2`.
///
/// `sqrt(x)` is taken to be `q`; everything lives in `Q(sqrt(q^2 + 4 s0))`.
pub fn check_root_relations(q: &BigRat, s0: &BigRat) -> Result<RootRelations> {
    let (alpha, alpha_bar) = alpha_roots(q, s0)?;
    let d = alpha.d.clone();
    let half = ratio(1, 2);
    // β, β̄ = (sqrt(x+4s) ± sqrt((x+4s) - 4s)) / 2 with sqrt(x) = q
    let beta = QuadExt::new(q * &half, half.clone(), d.clone());
    let beta_bar = QuadExt::new(-(q * &half), half, d.clone());

    let x0 = q * q;
    let s_ext = QuadExt::rational(s0.clone(), d.clone());
    let alpha_sq = alpha.pow(2);
    let on_quadratic = alpha_sq
        .pow(2)
        .sub(&alpha_sq.scale(&(&x0 + s0 * BigRat::from_integer(2.into()))))?
        .add(&QuadExt::rational(s0 * s0, d))?;

    Ok(RootRelations {
        alpha_is_beta: alpha == beta,
        alpha_bar_is_neg_beta_bar: alpha_bar == beta_bar.neg(),
        beta_product_is_s: beta.mul(&beta_bar)? == s_ext,
        alpha_squared_on_quadratic: on_quadratic.is_zero(),
        cubic_expansion: cubic_expansion_holds(),
        alpha,
        alpha_bar,
        beta,
        beta_bar,
    })
}

/// Expands `(z - s)(z^2 - (x+2s)z + s^2)` with `x, s` symbolic and compares it
/// with `z^3 - (x+3s)z^2 + s(x+3s)z - s^3`.
pub fn cubic_expansion_holds() -> bool {
    let x = BiPoly::x();
    let s = BiPoly::s();
    let two_s = s.scale(&BigRat::from_integer(2.into()));
    let three_s = s.scale(&BigRat::from_integer(3.into()));
    let linear = vec![-&s, BiPoly::one()];
    let quadratic = vec![s.pow(2), -(&x + &two_s), BiPoly::one()];
    let x3s = &x + &three_s;
    let expected = vec![-s.pow(3), &s * &x3s, -x3s, BiPoly::one()];
    convolve(&linear, &quadratic) == expected
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn q5(a: BigRat, b: BigRat) -> QuadExt {
        QuadExt::new(a, b, rat(5))
    }

    #[test]
    fn sqrt_squared_is_d() {
        let r = QuadExt::sqrt_of(rat(5));
        assert_eq!(r.mul(&r).unwrap(), QuadExt::rational(rat(5), rat(5)));
    }

    #[test]
    fn golden_ratio_product_is_minus_s() {
        let (g, gb) = characteristic_roots(&rat(1), &rat(1)).unwrap();
        assert_eq!(g, q5(ratio(1, 2), ratio(1, 2)));
        assert_eq!(g.mul(&gb).unwrap(), QuadExt::rational(rat(-1), rat(5)));
        assert_eq!(g.pow(2), q5(ratio(3, 2), ratio(1, 2)));
    }

    #[test]
    fn conj_involution_and_pow_zero() {
        let u = q5(ratio(3, 7), ratio(-2, 3));
        assert_eq!(u.conj().conj(), u);
        assert_eq!(u.pow(0), QuadExt::one(rat(5)));
        assert_eq!(u.pow(2), u.mul(&u).unwrap());
        assert!(u.mul(&u.conj()).unwrap().is_rational());
    }

    #[test]
    fn errors() {
        let u = QuadExt::sqrt_of(rat(2));
        let v = QuadExt::sqrt_of(rat(3));
        assert_eq!(u.add(&v), Err(Error::DiscriminantMismatch));
        assert_eq!(u.mul(&v), Err(Error::DiscriminantMismatch));
        assert_eq!(u.div(&QuadExt::rational(rat(0), rat(2))), Err(Error::DivisionByZero));
        assert_eq!(binet_fibonacci(3, &rat(2), &rat(-1)), Err(Error::DegenerateDiscriminant));
        assert_eq!(binet_z(3, &rat(2), &rat(-1)), Err(Error::DegenerateDiscriminant));
        assert!(check_root_relations(&rat(0), &rat(0)).is_err());
    }

    #[test]
    fn division_inverts_multiplication() {
        let u = q5(ratio(3, 7), ratio(-2, 3));
        let v = q5(rat(1), rat(4));
        assert_eq!(u.mul(&v).unwrap().div(&v).unwrap(), u);
    }

    #[test]
    fn binet_values() {
        assert_eq!(binet_fibonacci(0, &rat(3), &rat(1)), Ok(rat(0)));
        assert_eq!(binet_fibonacci(5, &rat(1), &rat(1)), Ok(rat(5)));
        assert_eq!(binet_lucas(2, &rat(1), &rat(1)), Ok(rat(3)));
        assert_eq!(binet_z(0, &rat(7), &rat(3)), Ok(rat(0)));
        assert_eq!(binet_z(3, &rat(1), &rat(2)), Ok(rat(49)));
        assert_eq!(binet_z(2, &rat(1), &rat(2)), Ok(rat(9)));
    }

    #[test]
    fn root_relations_examples() {
        let r = check_root_relations(&rat(1), &rat(2)).unwrap();
        assert!(r.passed());
        // d = 9: the roots are the rationals 2 and -1 in disguise
        assert_eq!(r.alpha, QuadExt::new(ratio(1, 2), ratio(1, 2), rat(9)));
        assert_eq!(r.alpha_bar, QuadExt::new(ratio(1, 2), ratio(-1, 2), rat(9)));
        let r0 = check_root_relations(&rat(0), &rat(1)).unwrap();
        assert!(r0.passed());
        assert_eq!(r0.alpha, QuadExt::new(rat(0), ratio(1, 2), rat(4)));
        assert!(cubic_expansion_holds());
    }

    #[test]
    fn vieta() {
        let (g, gb) = characteristic_roots(&ratio(-3, 4), &ratio(5, 2)).unwrap();
        assert_eq!(g.add(&gb).unwrap(), QuadExt::rational(ratio(-3, 4), g.d.clone()));
        assert_eq!(g.mul(&gb).unwrap(), QuadExt::rational(ratio(-5, 2), g.d.clone()));
    }
}
