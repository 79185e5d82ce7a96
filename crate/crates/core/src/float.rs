//! Double-precision polynomial evaluation.

/// Plain Horner evaluation; `coeffs` are listed from degree 0 upward.
pub fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

// Error-free transformations: a + b = s + e and a * b = p + e exactly.
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let z = s - a;
    (s, (a - (s - z)) + (b - z))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, libm::fma(a, b, -p))
}

/// Compensated Horner evaluation.
///
/// The rounding errors of every step are carried in a second Horner pass, so
/// the result is as accurate as plain Horner run in twice the working precision.
/// Alternating-sign coefficients of size ~4^n make plain Horner lose all digits
/// near `x = 4` once `n` reaches the high teens.
pub fn compensated_horner(coeffs: &[f64], x: f64) -> f64 {
    let Some((&lead, rest)) = coeffs.split_last() else {
        return 0.0;
    };
    let mut r = lead;
    let mut err = 0.0;
    for &c in rest.iter().rev() {
        let (p, pe) = two_prod(r, x);
        let (s, se) = two_sum(p, c);
        r = s;
        err = err * x + (pe + se);
    }
    r + err
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_agree_on_benign_input() {
        let c = [1.0, -3.0, 2.0];
        assert_eq!(horner(&c, 2.0), 3.0);
        assert_eq!(compensated_horner(&c, 2.0), 3.0);
        assert_eq!(compensated_horner(&[], 2.0), 0.0);
    }

    #[test]
    fn compensated_recovers_cancellation() {
        // (x - 1)^7 expanded, evaluated next to its root
        let c = [-1.0, 7.0, -21.0, 35.0, -35.0, 21.0, -7.0, 1.0];
        let x = 1.0 + 1.0 / 1024.0;
        let exact = libm::pow(1.0 / 1024.0, 7.0);
        let rel = |v: f64| ((v - exact) / exact).abs();
        assert!(rel(compensated_horner(&c, x)) < 1e-12);
        assert!(rel(horner(&c, x)) > rel(compensated_horner(&c, x)));
    }
}
