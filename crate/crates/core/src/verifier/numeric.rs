//! Exact interpolation and interval helpers.

use num_traits::{One, Signed, Zero};

use crate::linalg;
use crate::rational::{self, Rational};

/// Monomial coefficients of the interpolating polynomial through
/// `(x_i, y_i)` with distinct nodes.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    let rows: Vec<Vec<Rational>> = xs
        .iter()
        .map(|x| {
            let mut p = Rational::one();
            (0..xs.len())
                .map(|_| {
                    let c = p.clone();
                    p *= x;
                    c
                })
                .collect()
        })
        .collect();
    linalg::solve(&rows, ys).expect("distinct interpolation nodes")
}

pub fn evaluate(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// A closed rational interval.
#[derive(Debug, Clone, PartialEq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn point(x: Rational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    /// Enclosure of `x^(1/k)` for `x >= 0` of width at most `10^-digits`.
    pub fn root(x: &Rational, k: u32, digits: u32) -> Self {
        if k == 1 {
            return Self::point(x.clone());
        }
        let (lo, hi) = rational::root_enclosure(x, k, digits);
        Self { lo, hi }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        Self { lo: c.iter().min().unwrap().clone(), hi: c.iter().max().unwrap().clone() }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let a = &self.lo * k;
        let b = &self.hi * k;
        if k.is_negative() {
            Self { lo: b, hi: a }
        } else {
            Self { lo: a, hi: b }
        }
    }

    /// Odd or even integer power (monotone handling for the sign cases).
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::point(Rational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        if e.is_multiple_of(2) && self.lo.is_negative() && self.hi.is_positive() {
            acc.lo = Rational::zero();
        }
        acc
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }
}

pub fn ten_pow_neg(digits: u32) -> Rational {
    Rational::new(1.into(), num_bigint::BigInt::from(10u32).pow(digits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn quadratic_through_three_points() {
        let xs = [int(0), int(1), int(2)];
        let ys = [int(1), int(2), int(5)];
        assert_eq!(interpolate(&xs, &ys), vec![int(1), int(0), int(1)]);
        assert_eq!(evaluate(&[int(1), int(0), int(1)], &rat(1, 2)), rat(5, 4));
    }

    #[test]
    fn interval_arithmetic() {
        let r = Interval::root(&int(2), 2, 20);
        let sq = r.mul(&r);
        assert!(sq.lo <= int(2) && int(2) <= sq.hi);
        let i = Interval { lo: int(-1), hi: int(2) };
        assert_eq!(i.pow(2), Interval { lo: int(0), hi: int(4) });
        assert_eq!(i.scale(&int(-1)), Interval { lo: int(-2), hi: int(1) });
    }
}
