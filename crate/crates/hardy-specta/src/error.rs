use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by the symbol algebra, the series model and the catalogs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// Coefficient matrix has (numerically) vanishing determinant.
    Degenerate,
    /// The identity map fixes every point and has no fixed-point class.
    IdentityMap,
    /// The map does not send the unit disc into itself.
    NotSelfMap,
    /// Hardy exponent outside `(1, oo)`.
    InvalidExponent,
    /// Truncation order too small for the requested operation.
    InvalidTruncation,
    /// Quadrature grid too coarse for the truncation order.
    QuadratureTooCoarse,
    /// Iterate count or regression window out of range.
    InvalidRange,
    /// A norm left the representable range during power iteration.
    NumericalUnderflow,
    /// The zero function carries no local spectral data.
    ZeroFunction,
    /// Eigenfunction generator outside its admissibility strip/half-plane.
    InadmissibleGenerator,
    /// No closed-form data is cataloged for this symbol class.
    UnsupportedClass,
    /// The region is numeric-only; exact membership is not available.
    NumericOnlyRegion,
    /// The (class, direction) pair has no cataloged local-spectral answer.
    NotCataloged,
    /// The two symbols do not commute, so no product verdict applies.
    NonCommuting,
    /// Class parameter outside the admissible range of the canonical form.
    InvalidClassParameter,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            Error::Degenerate => "degenerate coefficient matrix (ad - bc = 0)",
            Error::IdentityMap => "identity map has no fixed-point class",
            Error::NotSelfMap => "map does not send the unit disc into itself",
            Error::InvalidExponent => "Hardy exponent must lie in (1, oo)",
            Error::InvalidTruncation => "truncation order too small",
            Error::QuadratureTooCoarse => "quadrature grid must have at least 4N points",
            Error::InvalidRange => "iterate count or window out of range",
            Error::NumericalUnderflow => "norm left the representable range",
            Error::ZeroFunction => "zero function has no local spectral data",
            Error::InadmissibleGenerator => "generator outside the admissible region",
            Error::UnsupportedClass => "no closed-form data for this symbol class",
            Error::NumericOnlyRegion => "region is numeric-only",
            Error::NotCataloged => "no cataloged answer for this class/direction",
            Error::NonCommuting => "symbols do not commute",
            Error::InvalidClassParameter => "parameter outside the canonical-form range",
        };
        f.write_str(msg)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
