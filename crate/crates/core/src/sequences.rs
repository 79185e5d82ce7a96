//! Constructors for the Fibonacci, Lucas and spread polynomial families.
//!
//! Every family that admits more than one construction exposes a method enum,
//! and the constructions share no intermediate results, so any two of them can
//! be compared as independent oracles.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{rat, ratio, BiPoly, BigRat, UniPoly};

macro_rules! method_enum {
    ($(#[$meta:meta])* $name:ident { $($(#[$vmeta:meta])* $variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub enum $name {
            $($(#[$vmeta])* $variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn name(self) -> &'static str {
                match self {
                    $($name::$variant => $text),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl FromStr for $name {
            type Err = UnknownMethod;

            fn from_str(s: &str) -> core::result::Result<Self, UnknownMethod> {
                match s {
                    $($text => Ok($name::$variant),)+
                    _ => Err(UnknownMethod),
                }
            }
        }
    };
}

/// A method name that does not belong to the requested family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnknownMethod;

impl fmt::Display for UnknownMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown method")
    }
}

method_enum!(FibMethod {
    Recurrence => "recurrence",
    Closed => "closed",
});

method_enum!(LucasMethod {
    Recurrence => "recurrence",
    Closed => "closed",
    FromFib => "from_fib",
});

method_enum!(
    /// The five constructions of `Z_n(x, s)`.
    ZMethod {
        /// Third-order recurrence seeded with `Z_0, Z_1, Z_2`.
        Recurrence => "recurrence",
        /// `sum_k c(n,k) s^(n-k) x^k`.
        Closed => "closed",
        /// `L_2n(sqrt x, s) - 2 s^n`.
        ViaLucas => "via_lucas",
        /// `x F_n(sqrt(x + 4s), -s)^2`.
        ViaFib => "via_fib",
        /// `L_(2m+1)(sqrt x, s)^2` for odd `n`, `(x + 4s) F_2m(sqrt x, s)^2` for even `n`.
        Parity => "parity",
    }
);

method_enum!(
    /// Expressions for the coefficients `c(n, k)` of `Z_n`.
    CoefficientForm {
        /// `(n/k) C(n+k-1, n-k)`
        RatioBinomial => "ratio_binomial",
        /// `(n/k) C(n+k-1, 2k-1)`
        RatioBinomialSymmetric => "ratio_binomial_symmetric",
        /// `C(n+k, 2k) + C(n+k-1, 2k)`
        SumBinomials => "sum_binomials",
        /// `2/(2k)! n^2 (n^2 - 1^2) ... (n^2 - (k-1)^2)`
        Product => "product",
    }
);

method_enum!(
    /// Constructions of the univariate spread polynomial `Z_n(x)`.
    SpreadMethod {
        /// `2 - l_n(2 - x)`
        ViaL => "via_l",
        /// `(-1)^(n-1) (l_2n(sqrt x) - 2 (-1)^n)`
        ViaL2n => "via_l2n",
        /// `(-1)^(n-1) Z_n(x, -1)`, with `Z_n(x, s)` built from squared Fibonacci polynomials.
        FromBivariate => "from_bivariate",
    }
);

/// `C(n, k)` by the multiplicative formula; every partial quotient is integral.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn int(v: BigInt) -> BigRat {
    BigRat::from_integer(v)
}

fn sign(negative: bool) -> BigRat {
    if negative {
        rat(-1)
    } else {
        rat(1)
    }
}

/// Terms `a_0..=a_max` of `a_n = p a_(n-1) + q a_(n-2)`.
fn two_term_sequence(a0: BiPoly, a1: BiPoly, p: &BiPoly, q: &BiPoly, max: u32) -> Vec<BiPoly> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(a0);
    if max >= 1 {
        out.push(a1);
    }
    for n in 2..=max as usize {
        let next = &(p * &out[n - 1]) + &(q * &out[n - 2]);
        out.push(next);
    }
    out
}

/// `F_0..=F_max` by the recurrence `F_n = x F_(n-1) + s F_(n-2)`.
pub fn fibonacci_sequence(max: u32) -> Vec<BiPoly> {
    two_term_sequence(BiPoly::zero(), BiPoly::one(), &BiPoly::x(), &BiPoly::s(), max)
}

/// `L_0..=L_max` by the recurrence.
pub fn lucas_sequence(max: u32) -> Vec<BiPoly> {
    two_term_sequence(BiPoly::from_int(2), BiPoly::x(), &BiPoly::x(), &BiPoly::s(), max)
}

/// `F_0(u, -s)..=F_max(u, -s)`, the Fibonacci recurrence with negated second argument.
fn fibonacci_neg_s_sequence(max: u32) -> Vec<BiPoly> {
    two_term_sequence(BiPoly::zero(), BiPoly::one(), &BiPoly::x(), &-BiPoly::s(), max)
}

pub fn fibonacci(n: u32, method: FibMethod) -> BiPoly {
    match method {
        FibMethod::Recurrence => fibonacci_sequence(n).swap_remove(n as usize),
        FibMethod::Closed => {
            if n == 0 {
                return BiPoly::zero();
            }
            let m = n - 1;
            BiPoly::from_terms(
                (0..=m / 2).map(|k| (m - 2 * k, k, int(binomial(u64::from(m - k), u64::from(k))))),
            )
        }
    }
}

pub fn lucas(n: u32, method: LucasMethod) -> Result<BiPoly> {
    match method {
        LucasMethod::Recurrence => Ok(lucas_sequence(n).swap_remove(n as usize)),
        LucasMethod::Closed => {
            // the n/(n-k) factor is 0/0 at n = 0; L_0 = 2 is the seed value
            if n == 0 {
                return Ok(BiPoly::from_int(2));
            }
            let terms = (0..=n / 2).map(|k| {
                let c = int(binomial(u64::from(n - k), u64::from(k))) * ratio(i64::from(n), i64::from(n - k));
                debug_assert!(c.is_integer());
                (n - 2 * k, k, c)
            });
            Ok(BiPoly::from_terms(terms))
        }
        LucasMethod::FromFib => {
            if n == 0 {
                return Err(Error::Index { n, min: 1 });
            }
            let f = fibonacci_sequence(n + 1);
            Ok(&f[n as usize + 1] + &(&BiPoly::s() * &f[n as usize - 1]))
        }
    }
}

/// Seeds of the third-order recurrence: `Z_0 = 0`, `Z_1 = x`, `Z_2 = 4sx + x^2`.
fn z_seeds() -> [BiPoly; 3] {
    [
        BiPoly::zero(),
        BiPoly::x(),
        BiPoly::from_terms([(1, 1, rat(4)), (2, 0, rat(1))]),
    ]
}

/// `Z_0..=Z_max` from `Z_(n+3) = (x+3s) Z_(n+2) - s(x+3s) Z_(n+1) + s^3 Z_n`.
fn z_recurrence_sequence(max: u32) -> Vec<BiPoly> {
    let x3s = BiPoly::from_terms([(1, 0, rat(1)), (0, 1, rat(3))]);
    let s_x3s = x3s.shift(0, 1);
    let mut out: Vec<BiPoly> = z_seeds().into_iter().take(max as usize + 1).collect();
    for n in 3..=max as usize {
        let next = &(&(&x3s * &out[n - 1]) - &(&s_x3s * &out[n - 2])) + &out[n - 3].shift(0, 3);
        out.push(next);
    }
    out
}

fn z_closed(n: u32) -> BiPoly {
    BiPoly::from_terms((1..=n).map(|k| {
        let c = coefficient_c(n, k, CoefficientForm::SumBinomials).expect("1 <= k <= n");
        (k, n - k, int(c))
    }))
}

fn z_from_lucas_2n(l2n: &BiPoly, n: u32) -> BiPoly {
    let sub = l2n.even_substitute(&BiPoly::x()).expect("L_2n is even in x");
    &sub - &BiPoly::monomial(rat(2), 0, n)
}

fn x_plus_4s() -> BiPoly {
    BiPoly::from_terms([(1, 0, rat(1)), (0, 1, rat(4))])
}

fn z_from_fib_neg_s(f_n: &BiPoly) -> BiPoly {
    let sq = f_n.pow(2);
    let sub = sq.even_substitute(&x_plus_4s()).expect("F_n^2 is even in x");
    sub.shift(1, 0)
}

/// `n` odd uses `L_n`, `n` even uses `F_n`; both evaluated at `sqrt x`.
fn z_parity(n: u32, lucas_n: impl FnOnce() -> BiPoly, fib_n: impl FnOnce() -> BiPoly) -> BiPoly {
    if n % 2 == 1 {
        lucas_n().pow(2).even_substitute(&BiPoly::x()).expect("L_(2m+1)^2 is even")
    } else {
        let sub = fib_n().pow(2).even_substitute(&BiPoly::x()).expect("F_2m^2 is even");
        &sub * &x_plus_4s()
    }
}

/// The bivariate spread polynomial `Z_n(x, s)`.
pub fn z_polynomial(n: u32, method: ZMethod) -> BiPoly {
    match method {
        ZMethod::Recurrence => z_recurrence_sequence(n).swap_remove(n as usize),
        ZMethod::Closed => z_closed(n),
        ZMethod::ViaLucas => z_from_lucas_2n(&lucas_sequence(2 * n)[2 * n as usize], n),
        ZMethod::ViaFib => z_from_fib_neg_s(&fibonacci_neg_s_sequence(n)[n as usize]),
        ZMethod::Parity => z_parity(
            n,
            || lucas_sequence(n).swap_remove(n as usize),
            || fibonacci_sequence(n).swap_remove(n as usize),
        ),
    }
}

/// `Z_0..=Z_max` by one method, sharing the underlying Fibonacci/Lucas
/// sequences across indices. Equal to `z_polynomial(n, method)` for each `n`.
pub fn z_sequence(max: u32, method: ZMethod) -> Vec<BiPoly> {
    match method {
        ZMethod::Recurrence => z_recurrence_sequence(max),
        ZMethod::Closed => (0..=max).map(z_closed).collect(),
        ZMethod::ViaLucas => {
            let l = lucas_sequence(2 * max);
            (0..=max).map(|n| z_from_lucas_2n(&l[2 * n as usize], n)).collect()
        }
        ZMethod::ViaFib => fibonacci_neg_s_sequence(max).iter().map(z_from_fib_neg_s).collect(),
        ZMethod::Parity => {
            let l = lucas_sequence(max);
            let f = fibonacci_sequence(max);
            (0..=max)
                .map(|n| z_parity(n, || l[n as usize].clone(), || f[n as usize].clone()))
                .collect()
        }
    }
}

/// The coefficient `c(n, k)` of `s^(n-k) x^k` in `Z_n(x, s)`.
pub fn coefficient_c(n: u32, k: u32, form: CoefficientForm) -> Result<BigInt> {
    Ok(coefficient_c_exact(n, k, form)?.to_integer())
}

/// `c(n, k)` as the exact rational the chosen expression produces, before any
/// integrality is assumed.
pub fn coefficient_c_exact(n: u32, k: u32, form: CoefficientForm) -> Result<BigRat> {
    if n == 0 {
        return Err(Error::Range { what: "n", value: n });
    }
    if k == 0 || k > n {
        return Err(Error::Range { what: "k", value: k });
    }
    let (n64, k64) = (u64::from(n), u64::from(k));
    let n_over_k = ratio(i64::from(n), i64::from(k));
    let value = match form {
        CoefficientForm::RatioBinomial => n_over_k * int(binomial(n64 + k64 - 1, n64 - k64)),
        CoefficientForm::RatioBinomialSymmetric => n_over_k * int(binomial(n64 + k64 - 1, 2 * k64 - 1)),
        CoefficientForm::SumBinomials => {
            int(binomial(n64 + k64, 2 * k64) + binomial(n64 + k64 - 1, 2 * k64))
        }
        CoefficientForm::Product => {
            let n2 = BigInt::from(n64 * n64);
            let mut prod = n2.clone();
            for j in 1..k64 {
                prod *= &n2 - BigInt::from(j * j);
            }
            let fact: BigInt = (1..=2 * k64).map(BigInt::from).product();
            BigRat::new(prod * 2, fact)
        }
    };
    Ok(value)
}

/// Rows `1..=N` of the coefficient triangle `c(n, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    rows: Vec<Vec<BigInt>>,
}

impl Triangle {
    /// Row `n` (1-based), entries `c(n, 1..=n)`.
    pub fn row(&self, n: u32) -> Option<&[BigInt]> {
        self.rows.get((n as usize).checked_sub(1)?).map(Vec::as_slice)
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

pub fn triangle(size: u32) -> Result<Triangle> {
    if size == 0 {
        return Err(Error::Range { what: "N", value: 0 });
    }
    let rows = (1..=size)
        .map(|n| (1..=n).map(|k| coefficient_c(n, k, CoefficientForm::SumBinomials)).collect())
        .collect::<Result<_>>()?;
    Ok(Triangle { rows })
}

/// Reads `c(n, 1..=n)` off `Z_n(x, s)`; `None` if a coefficient is not an integer.
pub fn coefficient_row(z: &BiPoly, n: u32) -> Option<Vec<BigInt>> {
    (1..=n)
        .map(|k| {
            let c = z.coefficient(k, n - k);
            c.is_integer().then(|| c.to_integer())
        })
        .collect()
}

/// `l_n(x) = L_n(x, -1)`.
pub fn univariate_l(n: u32) -> UniPoly {
    lucas_sequence(n)[n as usize].specialize_s(&rat(-1))
}

/// The normalized spread polynomial `Z_n(x)`, with `Z_n(4 sin^2 θ) = 4 sin^2(nθ)`.
pub fn spread_z_univariate(n: u32, method: SpreadMethod) -> UniPoly {
    let odd = n % 2 == 1;
    match method {
        SpreadMethod::ViaL => {
            let two_minus_x = UniPoly::from_coeffs(&[2, -1]);
            &UniPoly::from_int(2) - &univariate_l(n).compose(&two_minus_x)
        }
        SpreadMethod::ViaL2n => {
            let sub = univariate_l(2 * n).even_substitute(&UniPoly::x()).expect("l_2n is even");
            // (-1)^(n-1) (l_2n(sqrt x) - 2(-1)^n)
            let shifted = &sub - &UniPoly::constant(sign(odd) * rat(2));
            shifted.scale(&sign(!odd))
        }
        SpreadMethod::FromBivariate => {
            z_polynomial(n, ZMethod::ViaFib).specialize_s(&rat(-1)).scale(&sign(!odd))
        }
    }
}

/// Wildberger's spread polynomial `S_n(x) = Z_n(4x) / 4`, with `S_n(sin^2 θ) = sin^2(nθ)`.
pub fn wildberger_spread(n: u32) -> UniPoly {
    let z = spread_z_univariate(n, SpreadMethod::ViaL);
    let s = z.compose(&UniPoly::from_coeffs(&[0, 4])).scale(&ratio(1, 4));
    debug_assert!(s.is_integral());
    s
}

/// Chebyshev polynomial of the first kind.
pub fn chebyshev_t(n: u32) -> UniPoly {
    let two_x = UniPoly::from_coeffs(&[0, 2]);
    let mut prev = UniPoly::one();
    let mut cur = UniPoly::x();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = core::mem::replace(&mut cur, next);
    }
    cur
}

/// Bala's `R(n, x) = (2/x) (T_n((x+2)/2) - 1)`.
pub fn bala_r(n: u32) -> UniPoly {
    let half_shift = UniPoly::constant(rat(1)) + UniPoly::monomial(ratio(1, 2), 1);
    let inner = &chebyshev_t(n).compose(&half_shift) - &UniPoly::one();
    inner.scale(&rat(2)).div_x().expect("T_n(1) = 1")
}
