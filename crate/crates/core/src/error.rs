use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A square-root substitution met a term of odd degree in the substituted variable.
    OddDegree { degree: u32 },
    /// The operation needs a degree and the polynomial is zero.
    ZeroPolynomial,
    /// Quadratic-extension elements with different discriminants were combined.
    DiscriminantMismatch,
    DivisionByZero,
    /// `x^2 + 4s = 0`: the characteristic polynomial has a repeated root.
    DegenerateDiscriminant,
    /// A construction referenced an index below its valid start.
    Index { n: u32, min: u32 },
    /// An argument outside the documented range.
    Range { what: &'static str, value: u32 },
    /// A generating function whose denominator does not start with 1.
    MalformedGf,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OddDegree { degree } => {
                write!(f, "cannot substitute a square root into a term of odd degree {degree}")
            }
            Error::ZeroPolynomial => f.write_str("the zero polynomial has no degree"),
            Error::DiscriminantMismatch => f.write_str("quadratic extensions with different discriminants"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::DegenerateDiscriminant => f.write_str("degenerate discriminant x^2 + 4s = 0"),
            Error::Index { n, min } => write!(f, "index {n} is below the minimum {min}"),
            Error::Range { what, value } => write!(f, "{what} out of range: {value}"),
            Error::MalformedGf => f.write_str("generating function denominator must have constant term 1"),
        }
    }
}

impl core::error::Error for Error {}
