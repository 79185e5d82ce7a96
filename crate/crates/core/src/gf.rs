//! Rational generating functions in `z` with `(x, s)`-polynomial coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::{convolve, rat, BiPoly};
use crate::sequences::UnknownMethod;

/// `N(z) / D(z)`; index `i` of each list is the coefficient of `z^i`.
///
/// `D(0) = 1` keeps the series expansion division-free. [`RationalGF::new`]
/// enforces it; [`expand`] re-checks for values built field by field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    pub numerator: Vec<BiPoly>,
    pub denominator: Vec<BiPoly>,
}

impl RationalGF {
    pub fn new(numerator: Vec<BiPoly>, denominator: Vec<BiPoly>) -> Result<Self> {
        let gf = Self { numerator, denominator };
        gf.validate()?;
        Ok(gf)
    }

    fn validate(&self) -> Result<()> {
        match self.denominator.first() {
            Some(d0) if d0.is_one() => Ok(()),
            _ => Err(Error::MalformedGf),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GfKind {
    /// `sum F_n z^n = z / (1 - xz - sz^2)`
    Fibonacci,
    /// `sum L_n z^n = (2 - xz) / (1 - xz - sz^2)`
    Lucas,
    /// `sum Z_(n+1) z^n = x(1 + sz) / (1 - (x+3s)z + s(x+3s)z^2 - s^3 z^3)`
    ZShifted,
}

impl GfKind {
    pub const ALL: &'static [GfKind] = &[GfKind::Fibonacci, GfKind::Lucas, GfKind::ZShifted];

    pub fn name(self) -> &'static str {
        match self {
            GfKind::Fibonacci => "fibonacci",
            GfKind::Lucas => "lucas",
            GfKind::ZShifted => "z_shifted",
        }
    }
}

impl fmt::Display for GfKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GfKind {
    type Err = UnknownMethod;

    fn from_str(s: &str) -> core::result::Result<Self, UnknownMethod> {
        GfKind::ALL.iter().copied().find(|k| k.name() == s).ok_or(UnknownMethod)
    }
}

pub fn gf_of(kind: GfKind) -> RationalGF {
    let x = BiPoly::x();
    let s = BiPoly::s();
    let fib_den = vec![BiPoly::one(), -&x, -&s];
    let (numerator, denominator) = match kind {
        GfKind::Fibonacci => (vec![BiPoly::zero(), BiPoly::one()], fib_den),
        GfKind::Lucas => (vec![BiPoly::from_int(2), -&x], fib_den),
        GfKind::ZShifted => {
            let x3s = &x + &s.scale(&rat(3));
            (
                vec![x.clone(), &s * &x],
                vec![BiPoly::one(), -&x3s, &s * &x3s, -s.pow(3)],
            )
        }
    };
    RationalGF { numerator, denominator }
}

/// Series coefficients `a_0..=a_n_max` of `N(z)/D(z)`, from
/// `a_n = N_n - sum_(j>=1) D_j a_(n-j)`.
pub fn expand(gf: &RationalGF, n_max: u32) -> Result<Vec<BiPoly>> {
    gf.validate()?;
    let mut out: Vec<BiPoly> = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max as usize {
        let mut a = gf.numerator.get(n).cloned().unwrap_or_default();
        for (j, d) in gf.denominator.iter().enumerate().skip(1).take(n) {
            if !d.is_zero() {
                a = &a - &(d * &out[n - j]);
            }
        }
        out.push(a);
    }
    Ok(out)
}

/// `D(z) * series`, truncated to the series length. Recovers `N(z)` padded
/// with zeros when `series` is the expansion of `N/D`.
pub fn times_denominator(gf: &RationalGF, series: &[BiPoly]) -> Vec<BiPoly> {
    let mut prod = convolve(&gf.denominator, series);
    prod.truncate(series.len());
    prod
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::BigRat;

    fn bi(terms: &[(u32, u32, i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|&(a, b, c)| (a, b, rat(c))))
    }

    #[test]
    fn gf_shapes() {
        let f = gf_of(GfKind::Fibonacci);
        assert_eq!(f.numerator, vec![BiPoly::zero(), BiPoly::one()]);
        assert_eq!(f.denominator, vec![BiPoly::one(), bi(&[(1, 0, -1)]), bi(&[(0, 1, -1)])]);
        let l = gf_of(GfKind::Lucas);
        assert_eq!(l.numerator, vec![BiPoly::from_int(2), bi(&[(1, 0, -1)])]);
        let z = gf_of(GfKind::ZShifted);
        assert_eq!(z.numerator, vec![BiPoly::x(), bi(&[(1, 1, 1)])]);
        assert_eq!(
            z.denominator,
            vec![BiPoly::one(), bi(&[(1, 0, -1), (0, 1, -3)]), bi(&[(1, 1, 1), (0, 2, 3)]), bi(&[(0, 3, -1)])]
        );
    }

    #[test]
    fn expansions() {
        assert_eq!(
            expand(&gf_of(GfKind::Fibonacci), 3).unwrap(),
            vec![BiPoly::zero(), BiPoly::one(), BiPoly::x(), bi(&[(2, 0, 1), (0, 1, 1)])]
        );
        assert_eq!(
            expand(&gf_of(GfKind::Lucas), 2).unwrap(),
            vec![BiPoly::from_int(2), BiPoly::x(), bi(&[(2, 0, 1), (0, 1, 2)])]
        );
        assert_eq!(
            expand(&gf_of(GfKind::ZShifted), 2).unwrap(),
            vec![BiPoly::x(), bi(&[(1, 1, 4), (2, 0, 1)]), bi(&[(1, 2, 9), (2, 1, 6), (3, 0, 1)])]
        );
        assert_eq!(expand(&gf_of(GfKind::Lucas), 0).unwrap(), vec![BiPoly::from_int(2)]);
    }

    #[test]
    fn malformed() {
        let bad = RationalGF { numerator: vec![BiPoly::one()], denominator: vec![BiPoly::from_int(2)] };
        assert_eq!(expand(&bad, 3), Err(Error::MalformedGf));
        assert_eq!(RationalGF::new(vec![], vec![]), Err(Error::MalformedGf));
        assert!(RationalGF::new(vec![BiPoly::one()], vec![BiPoly::constant(BigRat::from_integer(1.into()))]).is_ok());
    }

    #[test]
    fn round_trip_recovers_numerator() {
        for kind in GfKind::ALL {
            let gf = gf_of(*kind);
            let series = expand(&gf, 10).unwrap();
            let back = times_denominator(&gf, &series);
            let mut num = gf.numerator.clone();
            num.resize(11, BiPoly::zero());
            assert_eq!(back, num, "{kind}");
        }
    }

    #[test]
    fn kind_names() {
        for k in GfKind::ALL {
            assert_eq!(k.name().parse::<GfKind>(), Ok(*k));
        }
        assert!("z".parse::<GfKind>().is_err());
    }
}
