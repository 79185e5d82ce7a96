//! Named verification suites, each a sweep over `n` that collects pass/fail
//! counts and failure witnesses.
//!
//! Suites are independent, so `run_suites` evaluates them on separate threads
//! and reports in the fixed suite order.

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::thread;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spreadpoly_core::gf::{expand, gf_of, GfKind};
use spreadpoly_core::identities::{self, CheckResult, Parity, Witness, TRIG_TOLERANCE};
use spreadpoly_core::sequences::{
    coefficient_row, fibonacci, fibonacci_sequence, lucas, lucas_sequence, spread_z_univariate, triangle,
    z_sequence, FibMethod, LucasMethod, SpreadMethod, ZMethod,
};
use spreadpoly_core::surd::{binet_fibonacci, binet_lucas, binet_z, check_root_relations};
use spreadpoly_core::{BiPoly, BigRat};

use crate::fixture::a156308_rows;

/// Double precision stops resolving the trigonometric identity beyond this degree.
pub const TRIG_MAX_N: u32 = 20;
pub const TRIG_SAMPLES: u32 = 100;
/// Random rational points used by the Binet suite.
pub const BINET_POINTS: usize = 25;
const BINET_SEED: u64 = 0x5eed_b1e7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Cassini,
    ZCassini,
    LucasBinomial,
    ZBinomial,
    Symmetry,
    Coefficients,
    Trig,
    Chebyshev,
    Doubling,
    CrossMethod,
    Binet,
    Gf,
}

impl Suite {
    pub const ALL: &'static [Suite] = &[
        Suite::Cassini,
        Suite::ZCassini,
        Suite::LucasBinomial,
        Suite::ZBinomial,
        Suite::Symmetry,
        Suite::Coefficients,
        Suite::Trig,
        Suite::Chebyshev,
        Suite::Doubling,
        Suite::CrossMethod,
        Suite::Binet,
        Suite::Gf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cassini => "cassini",
            Suite::ZCassini => "z_cassini",
            Suite::LucasBinomial => "lucas_binomial",
            Suite::ZBinomial => "z_binomial",
            Suite::Symmetry => "symmetry",
            Suite::Coefficients => "coefficients",
            Suite::Trig => "trig",
            Suite::Chebyshev => "chebyshev",
            Suite::Doubling => "doubling",
            Suite::CrossMethod => "cross_method",
            Suite::Binet => "binet",
            Suite::Gf => "gf",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL.iter().copied().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// `all` or a single suite.
pub fn parse_selection(s: &str) -> Result<Vec<Suite>, String> {
    if s == "all" {
        Ok(Suite::ALL.to_vec())
    } else {
        s.parse().map(|x| vec![x])
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    pub failures: Vec<Witness>,
    pub range: String,
    pub note: Option<String>,
}

impl SuiteReport {
    fn new(suite: Suite, range: String) -> Self {
        Self { suite, checks: 0, failures: Vec::new(), range, note: None }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, result: CheckResult) {
        self.checks += 1;
        if let Some(w) = result.witness {
            self.failures.push(w);
        }
    }

    fn record_core(&mut self, result: spreadpoly_core::Result<CheckResult>, n: u32) {
        match result {
            Ok(r) => self.record(r),
            Err(e) => self.fail(n, "error", e.to_string(), String::new()),
        }
    }

    fn compare<T: PartialEq + fmt::Display>(&mut self, n: u32, label: impl Into<String>, lhs: &T, rhs: &T) {
        self.checks += 1;
        if lhs != rhs {
            let render = |v: &T| {
                let s = v.to_string();
                if s.len() > 2000 {
                    format!("{}...", &s[..2000])
                } else {
                    s
                }
            };
            self.failures.push(Witness { index: n, label: label.into(), lhs: render(lhs), rhs: render(rhs) });
        }
    }

    fn fail(&mut self, n: u32, label: impl Into<String>, lhs: String, rhs: String) {
        self.checks += 1;
        self.failures.push(Witness { index: n, label: label.into(), lhs, rhs });
    }
}

fn range(lo: u32, hi: u32) -> String {
    format!("n={lo}..={hi}")
}

pub fn run_suite(suite: Suite, max_n: u32) -> SuiteReport {
    match suite {
        Suite::Cassini => sweep(suite, 1, max_n, |r, n| r.record_core(identities::check_cassini(n), n)),
        Suite::ZCassini => sweep(suite, 1, max_n, |r, n| r.record_core(identities::check_z_cassini(n), n)),
        Suite::LucasBinomial => sweep(suite, 0, max_n, |r, n| {
            r.record(identities::check_lucas_binomial(n, Parity::Even));
            r.record(identities::check_lucas_binomial(n, Parity::Odd));
        }),
        Suite::ZBinomial => {
            let mut rep = sweep(suite, 1, max_n, |r, n| r.record(identities::check_z_binomial(n)));
            rep.note = Some("n = 0 excluded: Z_0 = 0 while x^0 = 1".into());
            rep
        }
        Suite::Symmetry => sweep(suite, 1, max_n, |r, n| r.record_core(identities::check_symmetry(n), n)),
        Suite::Coefficients => coefficients(max_n),
        Suite::Trig => {
            let top = max_n.min(TRIG_MAX_N);
            let mut rep = sweep(suite, 1, top, |r, n| {
                r.record_core(identities::check_trig(n, TRIG_SAMPLES, TRIG_TOLERANCE), n)
            });
            if max_n > TRIG_MAX_N {
                rep.note = Some(format!("capped at n={TRIG_MAX_N}: coefficients outgrow double precision"));
            }
            rep
        }
        Suite::Chebyshev => sweep(suite, 1, max_n, |r, n| r.record_core(identities::check_chebyshev_bala(n), n)),
        Suite::Doubling => sweep(suite, 1, max_n, |r, n| r.record_core(identities::check_l_doubling(n), n)),
        Suite::CrossMethod => cross_method(max_n),
        Suite::Binet => binet(max_n),
        Suite::Gf => generating_functions(max_n),
    }
}

fn sweep(suite: Suite, lo: u32, hi: u32, mut body: impl FnMut(&mut SuiteReport, u32)) -> SuiteReport {
    let mut rep = SuiteReport::new(suite, range(lo, hi));
    for n in lo..=hi {
        body(&mut rep, n);
    }
    rep
}

fn coefficients(max_n: u32) -> SuiteReport {
    let mut rep = sweep(Suite::Coefficients, 1, max_n, |r, n| {
        r.record_core(identities::check_coefficient_forms(n), n)
    });
    let z = z_sequence(max_n, ZMethod::Recurrence);
    let Ok(tri) = triangle(max_n) else {
        rep.fail(max_n, "triangle", "construction failed".into(), String::new());
        return rep;
    };
    for n in 1..=max_n {
        let extracted = coefficient_row(&z[n as usize], n).unwrap_or_default();
        let row = tri.row(n).unwrap_or_default();
        rep.compare(n, "triangle row = coefficients of Z_n (recurrence)", &Row(row), &Row(&extracted));
    }
    match a156308_rows() {
        Ok(fixture) => {
            for (i, want) in fixture.iter().enumerate().take(max_n as usize) {
                let n = i as u32 + 1;
                rep.compare(n, "triangle row = A156308 fixture", &Row(tri.row(n).unwrap_or_default()), &Row(want));
            }
        }
        Err(e) => rep.fail(0, "A156308 fixture", e.to_string(), String::new()),
    }
    rep
}

#[derive(PartialEq)]
struct Row<'a>(&'a [BigInt]);

impl fmt::Display for Row<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

fn cross_method(max_n: u32) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::CrossMethod, range(0, max_n));
    let reference = z_sequence(max_n, ZMethod::Recurrence);
    for method in &ZMethod::ALL[1..] {
        let other = z_sequence(max_n, *method);
        for (n, (a, b)) in reference.iter().zip(&other).enumerate() {
            rep.compare(n as u32, format!("Z_n recurrence = {method}"), a, b);
        }
    }
    let f = fibonacci_sequence(max_n);
    let l = lucas_sequence(max_n);
    for n in 0..=max_n {
        rep.compare(n, "F_n recurrence = closed", &f[n as usize], &fibonacci(n, FibMethod::Closed));
        match lucas(n, LucasMethod::Closed) {
            Ok(c) => rep.compare(n, "L_n recurrence = closed", &l[n as usize], &c),
            Err(e) => rep.fail(n, "L_n closed", e.to_string(), String::new()),
        }
        if n >= 1 {
            match lucas(n, LucasMethod::FromFib) {
                Ok(c) => rep.compare(n, "L_n recurrence = from_fib", &l[n as usize], &c),
                Err(e) => rep.fail(n, "L_n from_fib", e.to_string(), String::new()),
            }
        }
        let zx = spread_z_univariate(n, SpreadMethod::ViaL);
        for m in &SpreadMethod::ALL[1..] {
            rep.compare(n, format!("Z_n(x) via_l = {m}"), &zx, &spread_z_univariate(n, *m));
        }
    }
    rep
}

/// `BINET_POINTS` random rationals `(x0, s0)` with components in `[-20, 20]`
/// (denominators in `1..=20`) and `x0^2 + 4 s0 != 0`, from a fixed seed.
pub fn binet_points() -> Vec<(BigRat, BigRat)> {
    let mut rng = ChaCha8Rng::seed_from_u64(BINET_SEED);
    let draw = |rng: &mut ChaCha8Rng| {
        BigRat::new(BigInt::from(rng.gen_range(-20i64..=20)), BigInt::from(rng.gen_range(1i64..=20)))
    };
    let mut out = Vec::with_capacity(BINET_POINTS);
    while out.len() < BINET_POINTS {
        let x0 = draw(&mut rng);
        let s0 = draw(&mut rng);
        if &x0 * &x0 + &s0 * BigRat::from_integer(4.into()) != BigRat::from_integer(0.into()) {
            out.push((x0, s0));
        }
    }
    out
}

/// `(q, s0)` with `q in 0..=3`, `s0 in -3..=3`, minus the points where `q^2 + 4 s0 = 0`.
pub fn square_points() -> Vec<(i64, i64)> {
    (0..=3).flat_map(|q| (-3..=3).map(move |s| (q, s))).filter(|(q, s)| q * q + 4 * s != 0).collect()
}

fn binet(max_n: u32) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Binet, range(0, max_n));
    let f = fibonacci_sequence(max_n);
    let l = lucas_sequence(max_n);
    for (x0, s0) in binet_points() {
        for n in 0..=max_n {
            let at = format!("at ({x0}, {s0})");
            match binet_fibonacci(n, &x0, &s0) {
                Ok(v) => rep.compare(n, format!("F_n Binet = F_n {at}"), &v, &f[n as usize].evaluate(&x0, &s0)),
                Err(e) => rep.fail(n, format!("F_n Binet {at}"), e.to_string(), String::new()),
            }
            match binet_lucas(n, &x0, &s0) {
                Ok(v) => rep.compare(n, format!("L_n Binet = L_n {at}"), &v, &l[n as usize].evaluate(&x0, &s0)),
                Err(e) => rep.fail(n, format!("L_n Binet {at}"), e.to_string(), String::new()),
            }
        }
    }
    let z = z_sequence(max_n, ZMethod::Closed);
    for (q, s) in square_points() {
        let (q, s0) = (BigRat::from_integer(q.into()), BigRat::from_integer(s.into()));
        let x0 = &q * &q;
        for n in 0..=max_n {
            match binet_z(n, &q, &s0) {
                Ok(v) => rep.compare(n, format!("Z_n Binet = Z_n at ({x0}, {s0})"), &v, &z[n as usize].evaluate(&x0, &s0)),
                Err(e) => rep.fail(n, format!("Z_n Binet at ({x0}, {s0})"), e.to_string(), String::new()),
            }
        }
        match check_root_relations(&q, &s0) {
            Ok(rel) if rel.passed() => rep.checks += 1,
            Ok(rel) => rep.fail(0, format!("root relations at q={q}, s={s0}"), format!("{rel:?}"), "all hold".into()),
            Err(e) => rep.fail(0, format!("root relations at q={q}, s={s0}"), e.to_string(), String::new()),
        }
    }
    // Z_n(1, 2) = (2^n - 1)^2
    let (one, two) = (BigRat::from_integer(1.into()), BigRat::from_integer(2.into()));
    for n in 0..=max_n {
        let m = (BigInt::from(1) << n) - 1;
        rep.compare(n, "Z_n(1, 2) = (2^n - 1)^2", &z[n as usize].evaluate(&one, &two), &BigRat::from_integer(&m * &m));
    }
    rep
}

fn generating_functions(max_n: u32) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Gf, range(0, max_n));
    let targets: [(GfKind, Vec<BiPoly>); 3] = [
        (GfKind::Fibonacci, fibonacci_sequence(max_n)),
        (GfKind::Lucas, lucas_sequence(max_n)),
        (GfKind::ZShifted, z_sequence(max_n + 1, ZMethod::Recurrence).split_off(1)),
    ];
    for (kind, want) in targets {
        match expand(&gf_of(kind), max_n) {
            Ok(series) => {
                for (n, (a, b)) in series.iter().zip(&want).enumerate() {
                    rep.compare(n as u32, format!("{kind} series coefficient = constructor"), a, b);
                }
            }
            Err(e) => rep.fail(0, format!("{kind} expansion"), e.to_string(), String::new()),
        }
    }
    rep
}

/// Runs the suites concurrently; the reports come back in input order.
pub fn run_suites(suites: &[Suite], max_n: u32) -> Vec<SuiteReport> {
    thread::scope(|scope| {
        let handles: Vec<_> = suites.iter().map(|&s| scope.spawn(move || run_suite(s, max_n))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    })
}

/// Human-readable report; failures list up to five witnesses per suite.
pub fn render_reports(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let passed = r.checks - r.failures.len();
        let _ = write!(out, "{:<15} {status}  {passed}/{} checks  {}", r.suite.name(), r.checks, r.range);
        if let Some(note) = &r.note {
            let _ = write!(out, "  ({note})");
        }
        out.push('\n');
        for w in r.failures.iter().take(5) {
            let _ = writeln!(out, "  witness {w}");
        }
        if r.failures.len() > 5 {
            let _ = writeln!(out, "  ... {} more failures", r.failures.len() - 5);
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        let _ = writeln!(out, "all {} suite(s) passed", reports.len());
    } else {
        let _ = writeln!(out, "{failed} of {} suite(s) failed", reports.len());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selection() {
        assert_eq!(parse_selection("all").unwrap().len(), 12);
        assert_eq!(parse_selection("cassini").unwrap(), vec![Suite::Cassini]);
        assert!(parse_selection("nope").is_err());
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
    }

    #[test]
    fn sample_points() {
        let pts = binet_points();
        assert_eq!(pts.len(), BINET_POINTS);
        assert_eq!(pts, binet_points());
        for (x, s) in &pts {
            for v in [x, s] {
                assert!(v.numer().magnitude() <= &20u32.into() && v.denom() <= &20.into());
            }
        }
        // (0,0) and (2,-1) are the only degenerate points in the grid
        assert_eq!(square_points().len(), 26);
    }

    #[test]
    fn small_suites_pass() {
        for r in run_suites(Suite::ALL, 6) {
            assert!(r.passed(), "{}", render_reports(std::slice::from_ref(&r)));
            assert!(r.checks > 0);
        }
    }

    #[test]
    fn failure_rendering() {
        let mut r = SuiteReport::new(Suite::Gf, range(0, 1));
        r.compare(1, "x = s", &BiPoly::x(), &BiPoly::s());
        r.checks += 1;
        let text = render_reports(&[r]);
        assert!(text.starts_with("gf              FAIL  1/2 checks  n=0..=1\n  witness n=1 [x = s]"), "{text}");
        assert!(text.ends_with("1 of 1 suite(s) failed\n"));
    }
}
