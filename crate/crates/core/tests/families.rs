//! Cross-construction sweeps over the polynomial families.

use std::time::Instant;

use num_bigint::BigInt;
use spreadpoly_core::gf::{expand, gf_of, times_denominator, GfKind};
use spreadpoly_core::poly::{BiPoly, BigRat};
use spreadpoly_core::sequences::*;

fn r(n: i64) -> BigRat {
    BigRat::from_integer(n.into())
}

#[test]
fn five_way_agreement_to_200() {
    let start = Instant::now();
    let reference = z_sequence(200, ZMethod::Recurrence);
    for method in &ZMethod::ALL[1..] {
        let other = z_sequence(200, *method);
        for (n, (a, b)) in reference.iter().zip(&other).enumerate() {
            assert_eq!(a, b, "recurrence vs {method} at n={n}");
        }
    }
    eprintln!("five-way sweep to n=200: {:?}", start.elapsed());
}

#[test]
fn fibonacci_lucas_closed_forms_to_200() {
    let f = fibonacci_sequence(200);
    let l = lucas_sequence(200);
    for n in 0..=200u32 {
        assert_eq!(fibonacci(n, FibMethod::Closed), f[n as usize], "F_{n}");
        assert_eq!(lucas(n, LucasMethod::Closed).unwrap(), l[n as usize], "L_{n}");
        if n >= 1 && n % 10 == 0 {
            assert_eq!(lucas(n, LucasMethod::FromFib).unwrap(), l[n as usize], "L_{n} from F");
        }
    }
}

#[test]
fn structure_of_z_and_friends() {
    let z = z_sequence(200, ZMethod::Recurrence);
    let f = fibonacci_sequence(100);
    let l = lucas_sequence(100);
    for n in 1..=200u32 {
        let zn = &z[n as usize];
        // zero constant term and x divides Z_n
        assert!(zn.terms().all(|(dx, _, _)| dx >= 1), "Z_{n}");
        if n <= 100 {
            assert_eq!(zn.weighted_degree(1, 1), Ok((u64::from(n), true)));
            assert_eq!(f[n as usize].weighted_degree(1, 2), Ok((u64::from(n - 1), true)));
            assert_eq!(l[n as usize].weighted_degree(1, 2), Ok((u64::from(n), true)));
            assert!(zn.is_integral() && f[n as usize].is_integral() && l[n as usize].is_integral());
            assert!(univariate_l(n).is_integral());
            assert!(spread_z_univariate(n, SpreadMethod::ViaL).is_integral());
            assert!(wildberger_spread(n).is_integral());
            assert!(chebyshev_t(n).is_integral());
        }
    }
}

#[test]
fn coefficient_forms_match_extraction_to_100() {
    let z = z_sequence(100, ZMethod::Recurrence);
    for n in 1..=100u32 {
        let row = coefficient_row(&z[n as usize], n).expect("integral");
        for k in 1..=n {
            let want = &row[k as usize - 1];
            for form in CoefficientForm::ALL {
                assert_eq!(&coefficient_c(n, k, *form).unwrap(), want, "c({n},{k}) {form}");
            }
        }
        assert_eq!(row[0], BigInt::from(n * n));
        assert_eq!(row[n as usize - 1], BigInt::from(1));
    }
    let t = triangle(30).unwrap();
    for n in 1..=30 {
        assert_eq!(t.row(n).unwrap(), coefficient_row(&z[n as usize], n).unwrap().as_slice());
    }
}

#[test]
fn spread_methods_agree_to_100() {
    for n in 0..=100 {
        let a = spread_z_univariate(n, SpreadMethod::ViaL);
        assert_eq!(a, spread_z_univariate(n, SpreadMethod::ViaL2n), "n={n}");
        assert_eq!(a, spread_z_univariate(n, SpreadMethod::FromBivariate), "n={n}");
    }
}

#[test]
fn second_form_of_normalized_spread() {
    // Z_n(x) = (-1)^(n-1) x F_n(sqrt(x - 4))^2 with F_n(u) = F_n(u, 1)
    let f = fibonacci_sequence(40);
    for n in 1..=40u32 {
        let sq = f[n as usize].pow(2).specialize_s(&r(1));
        let shifted = sq
            .even_substitute(&spreadpoly_core::UniPoly::from_coeffs(&[-4, 1]))
            .unwrap();
        let sign = r(if n % 2 == 1 { 1 } else { -1 });
        let built = (&shifted * &spreadpoly_core::UniPoly::x()).scale(&sign);
        assert_eq!(built, spread_z_univariate(n, SpreadMethod::ViaL), "n={n}");
    }
}

#[test]
fn generating_functions_match_constructors() {
    let f = expand(&gf_of(GfKind::Fibonacci), 64).unwrap();
    let l = expand(&gf_of(GfKind::Lucas), 64).unwrap();
    let z = expand(&gf_of(GfKind::ZShifted), 63).unwrap();
    assert_eq!(f, fibonacci_sequence(64));
    assert_eq!(l, lucas_sequence(64));
    let zs = z_sequence(64, ZMethod::Closed);
    for n in 0..=63 {
        assert_eq!(z[n], zs[n + 1], "Z_{}", n + 1);
    }
    for kind in GfKind::ALL {
        let gf = gf_of(*kind);
        let series = expand(&gf, 30).unwrap();
        let back = times_denominator(&gf, &series);
        for (i, c) in back.iter().enumerate() {
            assert_eq!(c, gf.numerator.get(i).unwrap_or(&BiPoly::zero()), "{kind} z^{i}");
        }
    }
}

#[test]
fn l_doubling_matches_compose_of_l2() {
    let l2 = univariate_l(2);
    for n in 1..=30 {
        assert_eq!(univariate_l(2 * n), univariate_l(n).compose(&l2));
    }
}
