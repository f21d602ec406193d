//! Truncated formal power series with exact integer coefficients, and the
//! generating function for permutations whose occurrence graph for the
//! pattern 12 is connected.

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// A formal power series truncated at an explicit order N, holding exact
/// coefficients c_0..c_N. Arithmetic propagates the minimum operand order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    /// Series with the given coefficients c_0..c_N (order N = len - 1).
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least order 0");
        Self { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::ZERO; order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(1, order)
    }

    pub fn constant(c: i64, order: usize) -> Self {
        let mut coeffs = vec![BigInt::ZERO; order + 1];
        coeffs[0] = BigInt::from(c);
        Self { coeffs }
    }

    /// The monomial x, truncated at `order` (the zero series when order 0).
    pub fn x(order: usize) -> Self {
        let mut coeffs = vec![BigInt::ZERO; order + 1];
        if order >= 1 {
            coeffs[1] = BigInt::from(1);
        }
        Self { coeffs }
    }

    /// Truncation order N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        PowerSeries { coeffs }
    }

    pub fn sub(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        PowerSeries { coeffs }
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigInt::ZERO; order + 1];
        for i in 0..=order {
            if self.coeffs[i] == BigInt::ZERO {
                continue;
            }
            for j in 0..=order - i {
                if other.coeffs[j] != BigInt::ZERO {
                    coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
                }
            }
        }
        PowerSeries { coeffs }
    }

    /// The series r with self * r = 1 up to the truncation order.
    ///
    /// Over integer coefficients this needs a unit constant term (1 or -1);
    /// a zero constant term is rejected outright.
    pub fn reciprocal(&self) -> Result<PowerSeries> {
        let c0 = &self.coeffs[0];
        if *c0 == BigInt::ZERO {
            return Err(Error::InvalidInput(
                "reciprocal of a series with zero constant term".into(),
            ));
        }
        let one = BigInt::from(1);
        let minus_one = BigInt::from(-1);
        if *c0 != one && *c0 != minus_one {
            return Err(Error::InvalidInput(format!(
                "reciprocal over integer coefficients needs constant term 1 or -1, got {c0}"
            )));
        }
        let order = self.order();
        let mut recip = vec![BigInt::ZERO; order + 1];
        recip[0] = c0.clone();
        for n in 1..=order {
            let mut acc = BigInt::ZERO;
            for i in 1..=n {
                acc += &self.coeffs[i] * &recip[n - i];
            }
            recip[n] = -c0 * acc;
        }
        Ok(PowerSeries { coeffs: recip })
    }
}

impl std::fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The series 1 + 1!x + 2!x^2 + ... truncated at `order`.
pub fn factorial_series(order: usize) -> PowerSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut fact = BigInt::from(1);
    coeffs.push(fact.clone());
    for k in 1..=order {
        fact *= k;
        coeffs.push(fact.clone());
    }
    PowerSeries::from_coeffs(coeffs)
}

/// F(x) = 1 - 1/(sum of k! x^k): the coefficient of x^n counts the
/// skew-indecomposable permutations of length n.
pub fn skew_indecomposable_gf(order: usize) -> PowerSeries {
    let all = factorial_series(order);
    let recip = all.reciprocal().expect("constant term is 1");
    PowerSeries::one(order).sub(&recip)
}

/// (F(x) - x) / (1-x)^2 + 1/(1-x): the coefficient of x^n counts the
/// permutations of length n whose occurrence graph for the pattern 12 is
/// connected.
pub fn connected_class_gf(order: usize) -> PowerSeries {
    let f = skew_indecomposable_gf(order);
    let one_minus_x = PowerSeries::one(order).sub(&PowerSeries::x(order));
    let geo = one_minus_x.reciprocal().expect("constant term is 1");
    let geo_sq = geo.mul(&geo);
    f.sub(&PowerSeries::x(order)).mul(&geo_sq).add(&geo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn coeffs_i64(s: &PowerSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).expect("fits i64"))
            .collect()
    }

    #[test]
    fn geometric_series() {
        let geo = PowerSeries::one(6)
            .sub(&PowerSeries::x(6))
            .reciprocal()
            .unwrap();
        assert_eq!(coeffs_i64(&geo), vec![1; 7]);
    }

    #[test]
    fn reciprocal_satisfies_defining_identity() {
        let all = factorial_series(12);
        let recip = all.reciprocal().unwrap();
        assert_eq!(all.mul(&recip), PowerSeries::one(12));
    }

    #[test]
    fn monomial_product() {
        let x = PowerSeries::x(4);
        assert_eq!(coeffs_i64(&x.mul(&x)), vec![0, 0, 1, 0, 0]);
    }

    #[test]
    fn reciprocal_rejects_non_units() {
        assert!(PowerSeries::zero(3).reciprocal().is_err());
        assert!(PowerSeries::constant(2, 3).reciprocal().is_err());
        assert!(PowerSeries::constant(-1, 3).reciprocal().is_ok());
    }

    #[test]
    fn skew_indecomposable_counts() {
        let f = skew_indecomposable_gf(7);
        assert_eq!(coeffs_i64(&f), vec![0, 1, 1, 3, 13, 71, 461, 3447]);
    }

    #[test]
    fn skew_gf_algebraic_identity() {
        let order = 12;
        let f = skew_indecomposable_gf(order);
        let lhs = PowerSeries::one(order)
            .sub(&f)
            .mul(&factorial_series(order));
        assert_eq!(lhs, PowerSeries::one(order));
    }

    #[test]
    fn connected_class_counts() {
        let gf = connected_class_gf(8);
        assert_eq!(coeffs_i64(&gf), vec![1, 1, 2, 6, 23, 111, 660, 4656, 37745]);
        assert_eq!(coeffs_i64(&connected_class_gf(0)), vec![1]);
        // Expanding the formula by hand at order 3: f_2*2 + f_3 + 1 = 6.
        assert_eq!(*connected_class_gf(3).coeff(3), BigInt::from(6));
    }

    #[test]
    fn truncation_order_propagates() {
        let a = PowerSeries::one(8);
        let b = PowerSeries::x(3);
        assert_eq!(a.add(&b).order(), 3);
        assert_eq!(a.mul(&b).order(), 3);
        assert_eq!(a.sub(&b).order(), 3);
        assert_eq!(a.truncate(5).order(), 5);
    }

    proptest! {
        #[test]
        fn mul_commutes_and_associates(
            a in proptest::collection::vec(-9i64..=9, 1..=6),
            b in proptest::collection::vec(-9i64..=9, 1..=6),
            c in proptest::collection::vec(-9i64..=9, 1..=6),
        ) {
            let (a, b, c) = (
                PowerSeries::from_i64_coeffs(&a),
                PowerSeries::from_i64_coeffs(&b),
                PowerSeries::from_i64_coeffs(&c),
            );
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn reciprocal_is_an_involution(
            mut coeffs in proptest::collection::vec(-9i64..=9, 1..=8),
            unit in prop_oneof![Just(1i64), Just(-1i64)],
        ) {
            coeffs[0] = unit;
            let s = PowerSeries::from_i64_coeffs(&coeffs);
            let back = s.reciprocal().unwrap().reciprocal().unwrap();
            prop_assert_eq!(back, s);
        }
    }
}
