//! Roots of unity tracked by their exponent.
//!
//! `UnityRoot(a)` stands for `e^{2πi a}` with `a` reduced to `[0, 1)`.
//! Raising to a rational power multiplies the reduced exponent, which fixes
//! the branch of fractional powers once and for all.

use std::fmt;
use std::ops::Mul;

use num_traits::Zero;

use super::cyclotomic::{root_of_unity, CycNum};
use super::rational::{format_rational, frac, Rational};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnityRoot {
    exponent: Rational,
}

impl UnityRoot {
    pub fn new(exponent: Rational) -> Self {
        UnityRoot {
            exponent: frac(&exponent),
        }
    }

    pub fn one() -> Self {
        UnityRoot::new(Rational::zero())
    }

    /// The reduced exponent `a ∈ [0, 1)`.
    pub fn exponent(&self) -> &Rational {
        &self.exponent
    }

    /// `u^h := e^{2πi·a·h}` using the reduced exponent `a`.
    pub fn pow(&self, h: &Rational) -> UnityRoot {
        UnityRoot::new(&self.exponent * h)
    }

    pub fn inv(&self) -> UnityRoot {
        UnityRoot::new(-&self.exponent)
    }

    pub fn order(&self) -> u64 {
        u64::try_from(self.exponent.denom().clone()).expect("order too large")
    }

    /// The value as an element of `Q(ζ_b)`, `b` the exponent's denominator.
    pub fn to_cyc(&self) -> CycNum {
        root_of_unity(&self.exponent)
    }
}

impl Mul for &UnityRoot {
    type Output = UnityRoot;
    fn mul(self, rhs: &UnityRoot) -> UnityRoot {
        UnityRoot::new(&self.exponent + &rhs.exponent)
    }
}

impl fmt::Debug for UnityRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e(2πi·{})", format_rational(&self.exponent))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    #[test]
    fn multiplication_adds_exponents_mod_one() {
        let a = UnityRoot::new(rat(3, 4));
        let b = UnityRoot::new(rat(1, 2));
        assert_eq!((&a * &b).exponent(), &rat(1, 4));
        assert_eq!(a.inv().exponent(), &rat(1, 4));
        assert_eq!(UnityRoot::new(rat(-1, 3)).exponent(), &rat(2, 3));
    }

    #[test]
    fn fractional_power_uses_reduced_exponent() {
        // t = ξ^18 with ξ = e^{2πi/24}; t^{1-12c} at c = 1/12 is t^0 = 1,
        // and at c = 1/4 it is ξ^{18·(-2)} = ξ^{-36}.
        let t = UnityRoot::new(rat(18, 24));
        assert_eq!(t.pow(&rat(0, 1)).to_cyc(), CycNum::one());
        assert_eq!(t.pow(&rat(-2, 1)).to_cyc(), CycNum::zeta(24, -36));
        assert_eq!(t.pow(&rat(2, 3)).exponent(), &rat(1, 2));
    }

    #[test]
    fn order_is_denominator() {
        assert_eq!(UnityRoot::new(rat(5, 8)).order(), 8);
        assert_eq!(UnityRoot::one().order(), 1);
    }
}
