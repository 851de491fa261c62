use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational coefficient.
///
/// `BigRational` is always stored in lowest terms with a positive
/// denominator, and zero is `0/1`, which is exactly the canonical form the
/// rest of the crate relies on for map equality of polynomials.
pub type Scalar = BigRational;

/// The integer `n` as a scalar.
pub fn scalar(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// The fraction `num/den` as a scalar.
///
/// Panics if `den` is zero; callers construct literals only.
pub fn ratio(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Signed, Zero};

    #[test]
    fn stored_in_lowest_terms() {
        let x = ratio(6, -4);
        assert_eq!(x, ratio(-3, 2));
        assert!(x.denom().is_positive());
        assert_eq!(*x.denom(), BigInt::from(2));
    }

    #[test]
    fn zero_is_zero_over_one() {
        let z = ratio(0, 7);
        assert!(z.is_zero());
        assert!(z.denom().is_one());
    }

    #[test]
    #[should_panic(expected = "zero denominator")]
    fn zero_denominator_panics() {
        let _ = ratio(1, 0);
    }
}
