//! The first ten rows of OEIS A156308, vendored as CSV.

use num_bigint::BigInt;

use crate::format::{parse_triangle_csv, FormatError};

pub const A156308_CSV: &str = include_str!("../data/a156308.csv");

pub fn a156308_rows() -> Result<Vec<Vec<BigInt>>, FormatError> {
    parse_triangle_csv(A156308_CSV)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shape() {
        let rows = a156308_rows().unwrap();
        assert_eq!(rows.len(), 10);
        for (i, row) in rows.iter().enumerate() {
            let n = i as u32 + 1;
            assert_eq!(row.len(), n as usize);
            assert_eq!(row[0], BigInt::from(n * n));
            assert_eq!(row[row.len() - 1], BigInt::from(1));
        }
    }
}
