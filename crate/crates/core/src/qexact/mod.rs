//! Exact scalar substrate: arbitrary-precision rationals, perfect-square
//! tests, elementary symmetric functions, univariate polynomials and
//! Gaussian elimination over the rationals.
//!
//! Nothing in this crate that feeds a verdict touches floating point.

mod affine;
mod linear;
mod poly;

pub use affine::Affine;
pub use linear::{solve_linear, LinearSolution, MatrixError, ParametricSolution, QMatrix};
pub use poly::{poly_eval, QPoly};

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::trace::{trace_op, Op};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Builds `num / den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_integral(x: &Rational) -> bool {
    x.is_integer()
}

/// Returns the value as an `i64` when it is an integer in range.
pub fn to_i64(x: &Rational) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

/// Exact square root: `Some(s)` with `s * s == x`, or `None` when `x` is not
/// a perfect square.
pub fn isqrt_exact(x: u64) -> Option<u64> {
    trace_op(Op::IsqrtExact);
    let s = x.sqrt();
    (s.checked_mul(s) == Some(x)).then_some(s)
}

/// `k`-th elementary symmetric function of `roots`.
///
/// Panics if `k > roots.len()`.
pub fn elem_symmetric(roots: &[i64], k: usize) -> BigInt {
    trace_op(Op::ElemSymmetric);
    assert!(k <= roots.len(), "elementary symmetric index out of range");
    // e[j] after processing a prefix of the roots
    let mut e = alloc::vec![BigInt::zero(); k + 1];
    e[0] = BigInt::one();
    for &r in roots {
        let r = BigInt::from(r);
        for j in (1..=k).rev() {
            let add = &e[j - 1] * &r;
            e[j] += add;
        }
    }
    e.swap_remove(k)
}

/// Smallest integer `>= x`.
pub fn ceil(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

/// Smallest integer `<= x`.
pub fn floor(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

pub fn is_positive(x: &Rational) -> bool {
    x.is_positive()
}

pub fn is_negative(x: &Rational) -> bool {
    x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt_exact(0), Some(0));
        assert_eq!(isqrt_exact(49), Some(7));
        assert_eq!(isqrt_exact(8 * 3 + 1), Some(5));
        assert_eq!(isqrt_exact(2), None);
        assert_eq!(isqrt_exact(48), None);
        assert_eq!(isqrt_exact(u64::MAX), None);
    }

    #[test]
    fn elem_symmetric_examples() {
        let roots = [1, 2, 3, 4, 6, 8, 10];
        assert_eq!(elem_symmetric(&roots, 0), BigInt::from(1));
        assert_eq!(elem_symmetric(&roots, 1), BigInt::from(34));
        assert_eq!(elem_symmetric(&roots, 2), BigInt::from(463));
        assert_eq!(elem_symmetric(&[], 0), BigInt::from(1));
        assert_eq!(elem_symmetric(&roots, 7), BigInt::from(11520));
    }

    #[test]
    fn rationals_are_canonical() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(3, -6), rat(-1, 2));
        assert_eq!(*rat(3, -6).denom(), BigInt::from(2));
        assert_eq!(to_i64(&rat(10, 5)), Some(2));
        assert_eq!(to_i64(&rat(1, 5)), None);
        assert_eq!(ceil(&rat(-5, 4)), BigInt::from(-1));
        assert_eq!(floor(&rat(-5, 4)), BigInt::from(-2));
    }

    proptest! {
        #[test]
        fn isqrt_of_square(s in 0u64..=1_000_000) {
            prop_assert_eq!(isqrt_exact(s * s), Some(s));
        }

        #[test]
        fn isqrt_rejects_non_squares(s in 1u64..=1_000_000, off in 1u64..1000) {
            let x = s * s + off.min(2 * s);
            prop_assert_eq!(isqrt_exact(x), None);
        }

        #[test]
        fn field_axioms(an in -1000i64..1000, ad in 1i64..1000, bn in -1000i64..1000, bd in 1i64..1000,
                        cn in -1000i64..1000, cd in 1i64..1000) {
            let (a, b, c) = (rat(an, ad), rat(bn, bd), rat(cn, cd));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a - &a), &int(0));
            if !a.is_zero() && !b.is_zero() {
                prop_assert_eq!((&a / &b) * (&b / &a), int(1));
            }
        }

        #[test]
        fn elem_symmetric_matches_expansion(roots in proptest::collection::vec(-20i64..20, 0..8)) {
            // coefficients of prod (t - r) are signed elementary symmetric functions
            let p = QPoly::from_roots(&roots);
            let n = roots.len();
            for k in 0..=n {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let expect = Rational::from_integer(elem_symmetric(&roots, k) * sign);
                prop_assert_eq!(p.coeff(n - k), expect);
            }
        }
    }
}
