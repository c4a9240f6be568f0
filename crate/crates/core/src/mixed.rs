//! Mixed volumes by inclusion–exclusion polarization.

use num_traits::Zero;

use crate::polytope::{minkowski_combination, volume_of_points, GeometryError, Polytope};
use crate::rational::{binomial, factorial, pow, Rational};

/// `V(P_1, …, P_n)` normalized so that `V(P, …, P) = volume(P)`.
///
/// Repeated arguments (equal vertex sets) are grouped, so the polarization sum
/// runs over count vectors rather than all `2^n` subsets; `V(P[n-1], Q)` costs
/// `2n - 1` volumes.
pub fn mixed_volume(polytopes: &[&Polytope]) -> Result<Rational, GeometryError> {
    let n = polytopes.len();
    if n == 0 {
        return Err(GeometryError::EmptyInput);
    }
    for p in polytopes {
        if p.ambient_dim() != n {
            return Err(GeometryError::DimensionMismatch { expected: n, found: p.ambient_dim() });
        }
        if p.is_empty()? {
            return Err(GeometryError::Empty);
        }
    }
    let mut groups: Vec<(&Polytope, usize)> = Vec::new();
    for p in polytopes {
        match groups.iter_mut().find(|(q, _)| q.vertices() == p.vertices()) {
            Some(g) => g.1 += 1,
            None => groups.push((p, 1)),
        }
    }
    let mut counts = vec![0usize; groups.len()];
    let mut total = Rational::zero();
    loop {
        // Advance the mixed-radix counter; stop after wrapping to all zeros.
        let mut j = 0;
        while j < counts.len() && counts[j] == groups[j].1 {
            counts[j] = 0;
            j += 1;
        }
        if j == counts.len() {
            break;
        }
        counts[j] += 1;

        let size: usize = counts.iter().sum();
        let weight: num_bigint::BigInt =
            counts.iter().zip(&groups).map(|(&c, (_, m))| binomial(*m, c)).product();
        let nonzero: Vec<(Rational, &Polytope)> = counts
            .iter()
            .zip(&groups)
            .filter(|(&c, _)| c > 0)
            .map(|(&c, (p, _))| (Rational::from_integer(c.into()), *p))
            .collect();
        let vol = if nonzero.len() == 1 {
            nonzero[0].1.volume()? * pow(&nonzero[0].0, n as u32)
        } else {
            volume_of_points(&minkowski_combination(&nonzero)?)
        };
        let term = vol * Rational::from_integer(weight);
        if (n - size).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total / Rational::from_integer(factorial(n)))
}
