//! Executable identity checks.
//!
//! Each check builds the two sides of an identity from different constructions
//! (typically the `Z` recurrence on one side and a Fibonacci/Lucas based
//! construction on the other) and compares them exactly. A failure carries a
//! witness with both sides rendered, truncated to [`WITNESS_TERMS`] terms.

use alloc::format;
use alloc::string::String;
use core::f64::consts::FRAC_PI_2;
use core::fmt;
use core::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::float::{compensated_horner, horner};
use crate::poly::{rat, ratio, BiPoly, BigRat, UniPoly};
use crate::sequences::{
    binomial, chebyshev_t, coefficient_c_exact, fibonacci, fibonacci_sequence, lucas_sequence,
    spread_z_univariate, univariate_l, wildberger_spread, z_polynomial, z_sequence, CoefficientForm,
    FibMethod, SpreadMethod, ZMethod,
};

pub const WITNESS_TERMS: usize = 40;

/// Default tolerance for [`check_trig`].
pub const TRIG_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub index: u32,
    /// Which equality of the check failed.
    pub label: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [{}]\n  lhs: {}\n  rhs: {}", self.index, self.label, self.lhs, self.rhs)
    }
}

/// Outcome of one identity check. `passed` holds exactly when `witness` is `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub range: RangeInclusive<u32>,
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl CheckResult {
    fn pass(name: &'static str, n: u32) -> Self {
        Self { name, range: n..=n, passed: true, witness: None }
    }

    fn fail(name: &'static str, n: u32, label: impl Into<String>, lhs: String, rhs: String) -> Self {
        Self {
            name,
            range: n..=n,
            passed: false,
            witness: Some(Witness { index: n, label: label.into(), lhs, rhs }),
        }
    }
}

trait Render: PartialEq {
    fn render(&self) -> String;
}

impl Render for BiPoly {
    fn render(&self) -> String {
        self.render_truncated(WITNESS_TERMS)
    }
}

impl Render for UniPoly {
    fn render(&self) -> String {
        self.render_truncated(WITNESS_TERMS)
    }
}

/// Runs equalities in order and stops at the first mismatch.
struct Comparison {
    name: &'static str,
    n: u32,
    failure: Option<CheckResult>,
}

impl Comparison {
    fn new(name: &'static str, n: u32) -> Self {
        Self { name, n, failure: None }
    }

    fn eq<P: Render>(mut self, label: &str, lhs: &P, rhs: &P) -> Self {
        if self.failure.is_none() && lhs != rhs {
            self.failure = Some(CheckResult::fail(self.name, self.n, label, lhs.render(), rhs.render()));
        }
        self
    }

    fn finish(self) -> CheckResult {
        self.failure.unwrap_or_else(|| CheckResult::pass(self.name, self.n))
    }
}

fn require_positive(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::Range { what: "n", value: 0 })
    } else {
        Ok(())
    }
}

fn neg_s_pow(j: u32) -> BiPoly {
    BiPoly::monomial(rat(if j.is_multiple_of(2) { 1 } else { -1 }), 0, j)
}

fn int(v: num_bigint::BigInt) -> BigRat {
    BigRat::from_integer(v)
}

/// `F_n^2 - F_(n-1) F_(n+1) = (-s)^(n-1)`.
pub fn check_cassini(n: u32) -> Result<CheckResult> {
    require_positive(n)?;
    let f = fibonacci_sequence(n + 1);
    let i = n as usize;
    let fn_closed = fibonacci(n, FibMethod::Closed);
    let lhs = &fn_closed.pow(2) - &(&f[i - 1] * &f[i + 1]);
    Ok(Comparison::new("cassini", n).eq("F_n^2 - F_(n-1) F_(n+1) = (-s)^(n-1)", &lhs, &neg_s_pow(n - 1)).finish())
}

/// `Z_(n-1) Z_(n+1) = (Z_n - s^(n-1) x)^2`.
pub fn check_z_cassini(n: u32) -> Result<CheckResult> {
    require_positive(n)?;
    let z = z_sequence(n + 1, ZMethod::Recurrence);
    let i = n as usize;
    let lhs = &z[i - 1] * &z[i + 1];
    let zn = z_polynomial(n, ZMethod::ViaFib);
    let rhs = (&zn - &BiPoly::monomial(rat(1), 1, n - 1)).pow(2);
    Ok(Comparison::new("z_cassini", n).eq("Z_(n-1) Z_(n+1) = (Z_n - s^(n-1) x)^2", &lhs, &rhs).finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// Even: `sum_j (-s)^j C(2n, j) L_(2n-2j) = x^(2n) + (-s)^n C(2n, n)`.
/// Odd: `sum_j (-s)^j C(2n+1, j) L_(2n+1-2j) = x^(2n+1)`.
pub fn check_lucas_binomial(n: u32, parity: Parity) -> CheckResult {
    let top = match parity {
        Parity::Even => 2 * n,
        Parity::Odd => 2 * n + 1,
    };
    let l = lucas_sequence(top);
    let lhs: BiPoly = (0..=n)
        .map(|j| {
            let c = int(binomial(u64::from(top), u64::from(j)));
            (&neg_s_pow(j) * &l[(top - 2 * j) as usize]).scale(&c)
        })
        .sum();
    let mut rhs = BiPoly::monomial(rat(1), top, 0);
    if parity == Parity::Even {
        let c = int(binomial(u64::from(2 * n), u64::from(n)));
        rhs = &rhs + &neg_s_pow(n).scale(&c);
    }
    let (name, label) = match parity {
        Parity::Even => ("lucas_binomial_even", "sum (-s)^j C(2n,j) L_(2n-2j) = x^(2n) + (-s)^n C(2n,n)"),
        Parity::Odd => ("lucas_binomial_odd", "sum (-s)^j C(2n+1,j) L_(2n+1-2j) = x^(2n+1)"),
    };
    Comparison::new(name, n).eq(label, &lhs, &rhs).finish()
}

/// `sum_j (-s)^j C(2n, j) Z_(n-j) = x^n`.
///
/// The identity holds for `n >= 1`. At `n = 0` the left side is `Z_0 = 0` and
/// the right side is `1`; that case is reported as a failure labelled as the
/// known boundary rather than special-cased away.
pub fn check_z_binomial(n: u32) -> CheckResult {
    let z = z_sequence(n, ZMethod::Recurrence);
    let lhs: BiPoly = (0..=n)
        .map(|j| {
            let c = int(binomial(u64::from(2 * n), u64::from(j)));
            (&neg_s_pow(j) * &z[(n - j) as usize]).scale(&c)
        })
        .sum();
    let rhs = BiPoly::monomial(rat(1), n, 0);
    let label = if n == 0 {
        "n = 0 boundary: Z_0 = 0 while x^0 = 1; the identity holds for n >= 1"
    } else {
        "sum (-s)^j C(2n,j) Z_(n-j) = x^n"
    };
    Comparison::new("z_binomial", n).eq(label, &lhs, &rhs).finish()
}

/// `Z_n(x) = (-1)^(n-1) Z_n(x, -1)` and `Z_n(x, s) = -s^n Z_n(-x/s)`.
pub fn check_symmetry(n: u32) -> Result<CheckResult> {
    require_positive(n)?;
    let uni = spread_z_univariate(n, SpreadMethod::ViaL);
    let bi = z_polynomial(n, ZMethod::Recurrence);
    let sign = rat(if n % 2 == 1 { 1 } else { -1 });
    let specialized = bi.specialize_s(&rat(-1)).scale(&sign);
    // -s^n Z_n(-x/s) = -sum_k a_k (-1)^k s^(n-k) x^k
    let homogenized = BiPoly::from_terms(uni.terms().map(|(k, a)| {
        let c = if k % 2 == 0 { -a } else { a.clone() };
        (k, n - k, c)
    }));
    Ok(Comparison::new("symmetry", n)
        .eq("Z_n(x) = (-1)^(n-1) Z_n(x, -1)", &uni, &specialized)
        .eq("Z_n(x, s) = -s^n Z_n(-x/s)", &homogenized, &bi)
        .finish())
}

/// All four expressions for `c(n, k)` agree and are integers, for `1 <= k <= n`.
pub fn check_coefficient_forms(n: u32) -> Result<CheckResult> {
    require_positive(n)?;
    for k in 1..=n {
        let reference = coefficient_c_exact(n, k, CoefficientForm::SumBinomials)?;
        if !reference.is_integer() {
            return Ok(CheckResult::fail("coefficients", n, format!("c({n},{k}) integral"), format!("{reference}"), String::from("an integer")));
        }
        for form in CoefficientForm::ALL {
            let v = coefficient_c_exact(n, k, *form)?;
            if v != reference {
                return Ok(CheckResult::fail(
                    "coefficients",
                    n,
                    format!("c({n},{k}): {form} = sum_binomials"),
                    format!("{v}"),
                    format!("{reference}"),
                ));
            }
        }
    }
    Ok(CheckResult::pass("coefficients", n))
}

/// Double-precision evaluation strategy for [`trig_max_errors`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Horner {
    Plain,
    Compensated,
}

/// Largest `|Z_n(4 sin^2 θ) - 4 sin^2(nθ)|` and `|S_n(sin^2 θ) - sin^2(nθ)|`
/// over `θ_i = i (π/2) / (samples + 1)`, `i = 1..=samples`.
pub fn trig_max_errors(n: u32, samples: u32, scheme: Horner) -> (f64, f64) {
    let z = spread_z_univariate(n, SpreadMethod::ViaL).to_f64_coeffs();
    let s = wildberger_spread(n).to_f64_coeffs();
    let eval = |c: &[f64], x: f64| match scheme {
        Horner::Plain => horner(c, x),
        Horner::Compensated => compensated_horner(c, x),
    };
    let step = FRAC_PI_2 / f64::from(samples + 1);
    let mut worst = (0.0f64, 0.0f64);
    for i in 1..=samples {
        let theta = step * f64::from(i);
        let sin_t = libm::sin(theta);
        let sin_nt = libm::sin(f64::from(n) * theta);
        let x = sin_t * sin_t;
        let target = sin_nt * sin_nt;
        worst.0 = worst.0.max((eval(&z, 4.0 * x) - 4.0 * target).abs());
        worst.1 = worst.1.max((eval(&s, x) - target).abs());
    }
    worst
}

/// `Z_n(4 sin^2 θ) = 4 sin^2(nθ)` and `S_n(sin^2 θ) = sin^2(nθ)` to within `tol`,
/// evaluated in double precision with compensated Horner.
pub fn check_trig(n: u32, samples: u32, tol: f64) -> Result<CheckResult> {
    require_positive(n)?;
    if samples == 0 {
        return Err(Error::Range { what: "samples", value: 0 });
    }
    let (ez, es) = trig_max_errors(n, samples, Horner::Compensated);
    let within = |e: f64| e < tol;
    let result = if !within(ez) {
        CheckResult::fail("trig", n, "max |Z_n(4 sin^2 t) - 4 sin^2(nt)|", format!("{ez:e}"), format!("< {tol:e}"))
    } else if !within(es) {
        CheckResult::fail("trig", n, "max |S_n(sin^2 t) - sin^2(nt)|", format!("{es:e}"), format!("< {tol:e}"))
    } else {
        CheckResult::pass("trig", n)
    };
    Ok(result)
}

/// `2 T_n((x+2)/2) - 2 = l_n(x+2) - 2 = -Z_n(-x) = Z_n(x, 1)` and `2 T_n(x) = l_n(2x)`.
pub fn check_chebyshev_bala(n: u32) -> Result<CheckResult> {
    require_positive(n)?;
    let t = chebyshev_t(n);
    let l = univariate_l(n);
    let two = UniPoly::from_int(2);
    let half_shift = UniPoly::one() + UniPoly::monomial(ratio(1, 2), 1);
    let chebyshev_side = &t.compose(&half_shift).scale(&rat(2)) - &two;
    let lucas_side = &l.compose(&UniPoly::from_coeffs(&[2, 1])) - &two;
    let spread_side = -spread_z_univariate(n, SpreadMethod::ViaL2n).compose(&UniPoly::from_coeffs(&[0, -1]));
    let bivariate_side = z_polynomial(n, ZMethod::Recurrence).specialize_s(&rat(1));
    let doubled = t.scale(&rat(2));
    let l_at_2x = l.compose(&UniPoly::from_coeffs(&[0, 2]));
    Ok(Comparison::new("chebyshev", n)
        .eq("2 T_n((x+2)/2) - 2 = l_n(x+2) - 2", &chebyshev_side, &lucas_side)
        .eq("l_n(x+2) - 2 = -Z_n(-x)", &lucas_side, &spread_side)
        .eq("-Z_n(-x) = Z_n(x, 1)", &spread_side, &bivariate_side)
        .eq("2 T_n(x) = l_n(2x)", &doubled, &l_at_2x)
        .finish())
}

/// `l_2n(x) = l_n(x^2 - 2)`, together with the `l_2n` form of `Z_n(x)`.
pub fn check_l_doubling(n: u32) -> Result<CheckResult> {
    require_positive(n)?;
    let l2n = univariate_l(2 * n);
    let composed = univariate_l(n).compose(&UniPoly::from_coeffs(&[-2, 0, 1]));
    Ok(Comparison::new("doubling", n)
        .eq("l_2n(x) = l_n(x^2 - 2)", &l2n, &composed)
        .eq(
            "(-1)^(n-1)(l_2n(sqrt x) - 2(-1)^n) = 2 - l_n(2 - x)",
            &spread_z_univariate(n, SpreadMethod::ViaL2n),
            &spread_z_univariate(n, SpreadMethod::ViaL),
        )
        .finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cases() {
        assert!(check_cassini(1).unwrap().passed);
        assert!(check_cassini(3).unwrap().passed);
        assert!(check_z_cassini(1).unwrap().passed);
        assert!(check_z_cassini(2).unwrap().passed);
        assert!(check_lucas_binomial(1, Parity::Even).passed);
        assert!(check_lucas_binomial(0, Parity::Odd).passed);
        assert!(check_lucas_binomial(0, Parity::Even).passed);
        assert!(check_z_binomial(1).passed);
        assert!(check_z_binomial(2).passed);
        assert!(check_symmetry(1).unwrap().passed);
        assert!(check_symmetry(2).unwrap().passed);
        assert!(check_coefficient_forms(5).unwrap().passed);
        assert!(check_trig(1, 100, TRIG_TOLERANCE).unwrap().passed);
        assert!(check_chebyshev_bala(1).unwrap().passed);
        assert!(check_chebyshev_bala(2).unwrap().passed);
        assert!(check_l_doubling(1).unwrap().passed);
        assert!(check_l_doubling(2).unwrap().passed);
    }

    #[test]
    fn zero_index_rejected() {
        let err = Err(Error::Range { what: "n", value: 0 });
        assert_eq!(check_cassini(0), err);
        assert_eq!(check_z_cassini(0), err);
        assert_eq!(check_symmetry(0), err);
        assert_eq!(check_coefficient_forms(0), err);
        assert_eq!(check_trig(0, 10, 1.0), err);
        assert_eq!(check_chebyshev_bala(0), err);
        assert_eq!(check_l_doubling(0), err);
        assert!(check_trig(3, 0, 1.0).is_err());
    }

    #[test]
    fn z_binomial_boundary_is_flagged() {
        let r = check_z_binomial(0);
        assert!(!r.passed);
        let w = r.witness.unwrap();
        assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("0", "1"));
        assert!(w.label.contains("boundary"));
    }

    #[test]
    fn trig_hand_value() {
        // Z_2(2) = 8 - 4 = 4 = 4 sin^2(pi/2)
        let z2 = spread_z_univariate(2, SpreadMethod::ViaL);
        assert_eq!(z2.evaluate(&rat(2)), rat(4));
        // one sample at θ = π/4
        let (ez, es) = trig_max_errors(2, 1, Horner::Plain);
        assert!(ez < 1e-15 && es < 1e-15);
    }

    #[test]
    fn trig_failure_has_witness() {
        let r = check_trig(20, 100, 1e-30).unwrap();
        assert!(!r.passed);
        assert!(r.witness.unwrap().label.contains("Z_n"));
    }

    #[test]
    fn witness_renders_both_sides() {
        let a = BiPoly::x();
        let b = BiPoly::s();
        let r = Comparison::new("demo", 7).eq("x = s", &a, &b).finish();
        assert!(!r.passed);
        assert_eq!(r.range, 7..=7);
        let w = r.witness.unwrap();
        assert_eq!((w.index, w.lhs.as_str(), w.rhs.as_str()), (7, "x", "s"));
        assert_eq!(alloc::string::ToString::to_string(&w), "n=7 [x = s]\n  lhs: x\n  rhs: s");
    }
}
