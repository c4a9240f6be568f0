//! Toric divisor classes as piecewise-linear functions on a fan.

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::fan::{self, Fan, FanError};
use crate::linalg::{self, Matrix};
use crate::polytope::{GeometryError, HalfSpace, LatticeVector, LinearForm, Polytope};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassError {
    #[error("class has {found} ray values but the fan has {expected} rays")]
    WrongLength { expected: usize, found: usize },
    #[error("classes live on different fans")]
    FanMismatch,
    #[error("class is not pseudo-effective (empty Newton polytope)")]
    NotPsef,
    #[error("class is not nef")]
    NotNef,
    #[error("reference class is not strictly convex")]
    NotAmple,
    #[error("no nef multiple found below 2^62")]
    NefSearchExhausted,
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// A class on a fan, stored as its ray values `a_ρ = g(v_ρ)`.
#[derive(Debug, Clone)]
pub struct ToricClass {
    fan: Arc<Fan>,
    values: Vec<Rational>,
    newton: OnceLock<Polytope>,
}

impl PartialEq for ToricClass {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values && (Arc::ptr_eq(&self.fan, &other.fan) || self.fan == other.fan)
    }
}

impl ToricClass {
    pub fn new(fan: Arc<Fan>, values: Vec<Rational>) -> Result<Self, ClassError> {
        if values.len() != fan.rays().len() {
            return Err(ClassError::WrongLength { expected: fan.rays().len(), found: values.len() });
        }
        Ok(Self { fan, values, newton: OnceLock::new() })
    }

    pub fn from_ints(fan: Arc<Fan>, values: &[i64]) -> Result<Self, ClassError> {
        Self::new(fan, values.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    pub fn zero(fan: Arc<Fan>) -> Self {
        let n = fan.rays().len();
        Self::new(fan, vec![Rational::zero(); n]).unwrap()
    }

    /// The torus-invariant prime divisor `δ_ρ` (value 1 at `ρ`, 0 elsewhere).
    pub fn ray_divisor(fan: Arc<Fan>, ray: usize) -> Self {
        let mut values = vec![Rational::zero(); fan.rays().len()];
        values[ray] = Rational::one();
        Self::new(fan, values).unwrap()
    }

    /// The certified strictly convex class stored with the fan.
    pub fn ample(fan: Arc<Fan>) -> Self {
        let values = fan.ample_values().to_vec();
        Self::new(fan, values).unwrap()
    }

    pub fn fan(&self) -> &Arc<Fan> {
        &self.fan
    }

    pub fn dim(&self) -> usize {
        self.fan.dim()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, ray: usize) -> &Rational {
        &self.values[ray]
    }

    /// `g(v)`, linear on each maximal cone.
    pub fn pl_value(&self, v: &[Rational]) -> Rational {
        let (c, lambda) = self.fan.locate(v);
        let cone = &self.fan.cones()[c];
        cone.iter().zip(&lambda).fold(Rational::zero(), |acc, (&r, l)| acc + l * &self.values[r])
    }

    pub fn pl_value_int(&self, v: &[BigInt]) -> Rational {
        self.pl_value(&linalg::to_rational(v))
    }

    fn same_fan(&self, other: &Self) -> Result<(), ClassError> {
        if Arc::ptr_eq(&self.fan, &other.fan) || self.fan == other.fan {
            Ok(())
        } else {
            Err(ClassError::FanMismatch)
        }
    }

    fn with_values(&self, values: Vec<Rational>) -> Self {
        Self { fan: self.fan.clone(), values, newton: OnceLock::new() }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ClassError> {
        self.same_fan(other)?;
        Ok(self.with_values(self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ClassError> {
        self.same_fan(other)?;
        Ok(self.with_values(self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        self.with_values(self.values.iter().map(|a| a * k).collect())
    }

    /// `self + k · other`.
    pub fn add_scaled(&self, k: &Rational, other: &Self) -> Result<Self, ClassError> {
        self.same_fan(other)?;
        Ok(self.with_values(self.values.iter().zip(&other.values).map(|(a, b)| a + k * b).collect()))
    }

    /// Adds the linear function `⟨m, ·⟩`; the class is unchanged up to
    /// equivalence and the Newton polytope is translated by `m`.
    pub fn add_linear(&self, m: &[Rational]) -> Self {
        self.with_values(self.fan.rays().iter().zip(&self.values).map(|(v, a)| a + linalg::dot_int(v, m)).collect())
    }

    /// Equivalence modulo linear functions.
    pub fn is_equivalent(&self, other: &Self) -> bool {
        if self.same_fan(other).is_err() {
            return false;
        }
        let n = self.dim();
        let rows: Matrix = self.fan.rays().iter().map(|v| linalg::to_rational(v)).collect();
        let diff: Vec<Rational> = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        linalg::solve_consistent(&rows, &diff, n).is_some()
    }

    /// The same PL function written on a refinement of its fan.
    pub fn restate(&self, target: &Arc<Fan>) -> Self {
        let values = target.rays().iter().map(|v| self.pl_value_int(v)).collect();
        Self { fan: target.clone(), values, newton: OnceLock::new() }
    }

    /// `Nw(α) = {m : ⟨m, v_ρ⟩ <= a_ρ}`.
    pub fn newton_polytope(&self) -> &Polytope {
        self.newton.get_or_init(|| {
            let hs = self.fan.rays().iter().zip(&self.values).map(|(v, a)| HalfSpace::new(v.clone(), a.clone())).collect();
            Polytope::from_bounded_halfspaces(self.dim(), hs)
        })
    }

    /// Convexity of `g`, tested cone by cone: each linear piece must lie
    /// below `g` at every ray.
    pub fn is_nef(&self) -> bool {
        self.fan.convexity(&self.values, false)
    }

    pub fn is_strictly_convex(&self) -> bool {
        self.fan.is_strictly_convex(&self.values)
    }

    /// Nefness via the refinement of the fan by the normal fan of `Nw(α)`:
    /// the support function of `Nw(α)` must equal `g` on every ray of the
    /// refinement.
    pub fn is_nef_on_refinement(&self) -> Result<bool, ClassError> {
        let poly = self.newton_polytope();
        if poly.is_empty()? {
            return Ok(false);
        }
        let minorant = NefClass::from_polytope(poly.clone())?;
        for v in fan::refinement_rays(&self.fan, &minorant.normal_cones()?) {
            if minorant.support_int(&v)? != self.pl_value_int(&v) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Largest convex minorant of `g`: its support function `h` and the
    /// ray-wise gaps `g(v_ρ) - h(v_ρ) >= 0`.
    pub fn convex_minorant(&self) -> Result<(NefClass, Vec<Rational>), ClassError> {
        let poly = self.newton_polytope();
        if poly.is_empty()? {
            return Err(ClassError::NotPsef);
        }
        let nef = NefClass::from_polytope(poly.clone())?;
        let gaps = self
            .fan
            .rays()
            .iter()
            .zip(&self.values)
            .map(|(v, a)| nef.support_int(v).map(|h| a - h))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((nef, gaps))
    }

    /// Writes `self = β₊ - β₋` with `β₋ = C·ω` and `C >= 0` the least integer
    /// making `self + C·ω` nef. `ω` defaults to the fan's ample class.
    pub fn nef_difference(&self, omega: Option<&ToricClass>) -> Result<NefDifference, ClassError> {
        let default;
        let omega = match omega {
            Some(w) => {
                self.same_fan(w)?;
                w
            }
            None => {
                default = ToricClass::ample(self.fan.clone());
                &default
            }
        };
        if !omega.is_strictly_convex() {
            return Err(ClassError::NotAmple);
        }
        let at = |c: u64| self.add_scaled(&Rational::from_integer(c.into()), omega).unwrap();
        let multiple = if self.is_nef() {
            0
        } else {
            let mut hi = 1u64;
            while !at(hi).is_nef() {
                if hi >= 1 << 62 {
                    return Err(ClassError::NefSearchExhausted);
                }
                hi *= 2;
            }
            let mut lo = hi / 2;
            if lo == 0 {
                hi
            } else {
                while hi - lo > 1 {
                    let mid = lo + (hi - lo) / 2;
                    if at(mid).is_nef() {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                hi
            }
        };
        let c = Rational::from_integer(multiple.into());
        let positive = at(multiple);
        let negative = omega.scale(&c);
        Ok(NefDifference { multiple, positive, negative })
    }
}

/// `γ = positive - negative` with both parts nef and `negative = C·ω`.
#[derive(Debug, Clone)]
pub struct NefDifference {
    pub multiple: u64,
    pub positive: ToricClass,
    pub negative: ToricClass,
}

/// A nef class, represented by its Newton polytope (the support function).
#[derive(Debug, Clone, PartialEq)]
pub struct NefClass {
    polytope: Polytope,
}

impl NefClass {
    pub fn from_polytope(polytope: Polytope) -> Result<Self, ClassError> {
        if polytope.is_empty()? {
            return Err(ClassError::NotPsef);
        }
        Ok(Self { polytope })
    }

    /// Requires a nef class.
    pub fn from_class(class: &ToricClass) -> Result<Self, ClassError> {
        if !class.is_nef() {
            return Err(ClassError::NotNef);
        }
        Self::from_polytope(class.newton_polytope().clone())
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    pub fn support(&self, v: &[Rational]) -> Result<Rational, ClassError> {
        Ok(self.polytope.support(v)?)
    }

    pub fn support_int(&self, v: &[BigInt]) -> Result<Rational, ClassError> {
        Ok(self.polytope.support_int(v)?)
    }

    /// The support function's values on the rays of a fan.
    pub fn on_fan(&self, fan: Arc<Fan>) -> Result<ToricClass, ClassError> {
        let values = fan.rays().iter().map(|v| self.support_int(v)).collect::<Result<Vec<_>, _>>()?;
        ToricClass::new(fan, values)
    }

    /// Normal cones `{v : ⟨p - q, v⟩ >= 0 for all vertices q}` of the
    /// vertices `p`, in H-form.
    pub fn normal_cones(&self) -> Result<Vec<Matrix>, ClassError> {
        let verts = self.polytope.vertices()?;
        Ok(verts
            .iter()
            .map(|p| {
                verts
                    .iter()
                    .filter(|q| *q != p)
                    .map(|q| p.iter().zip(q).map(|(a, b)| a - b).collect::<LinearForm>())
                    .collect()
            })
            .collect())
    }
}

/// Primitive integer vectors with entries of absolute value at most `bound`,
/// e.g. for spot-checking PL functions.
pub fn small_directions(dim: usize, bound: i64) -> Vec<LatticeVector> {
    let mut out = Vec::new();
    let mut x = vec![-bound; dim];
    loop {
        let v: LatticeVector = x.iter().map(|&c| BigInt::from(c)).collect();
        if !v.iter().all(Zero::is_zero) && linalg::gcd_all(&v).is_one() {
            out.push(v);
        }
        let mut j = 0;
        loop {
            if j == dim {
                return out;
            }
            if x[j] < bound {
                x[j] += 1;
                break;
            }
            x[j] = -bound;
            j += 1;
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn lv(c: &[i64]) -> LatticeVector {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    pub(crate) fn blowup() -> Arc<Fan> {
        Arc::new(
            Fan::new(
                2,
                vec![lv(&[1, 0]), lv(&[0, 1]), lv(&[-1, -1]), lv(&[1, 1])],
                vec![vec![0, 3], vec![3, 1], vec![1, 2], vec![2, 0]],
            )
            .unwrap(),
        )
    }

    fn pt(c: &[i64]) -> Vec<Rational> {
        c.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn pl_value_on_plane() {
        let f = Arc::new(Fan::projective_space(2));
        let h = ToricClass::from_ints(f, &[1, 0, 0]).unwrap();
        assert_eq!(h.pl_value(&pt(&[1, 1])), int(1));
        assert_eq!(h.pl_value(&pt(&[-2, -1])), int(0));
        assert_eq!(h.pl_value(&pt(&[2, -1])), int(3));
    }

    #[test]
    fn newton_polytopes() {
        let f = Arc::new(Fan::projective_space(2));
        let h = ToricClass::from_ints(f.clone(), &[1, 0, 0]).unwrap();
        let tri = Polytope::hull(&[pt(&[0, 0]), pt(&[1, -1]), pt(&[1, 0])]).unwrap();
        assert_eq!(h.newton_polytope(), &tri);
        let bad = ToricClass::from_ints(blowup(), &[1, 0, 0, -1]).unwrap();
        assert!(bad.newton_polytope().is_empty().unwrap());
        let zero = ToricClass::zero(f);
        assert_eq!(zero.newton_polytope().vertices().unwrap(), &[pt(&[0, 0])]);
    }

    #[test]
    fn nefness() {
        let b = blowup();
        let h = ToricClass::from_ints(b.clone(), &[1, 0, 0, 1]).unwrap();
        let e = ToricClass::from_ints(b.clone(), &[0, 0, 0, 1]).unwrap();
        let two_h_minus_e = ToricClass::from_ints(b.clone(), &[2, 0, 0, 1]).unwrap();
        assert!(h.is_nef());
        assert!(!e.is_nef());
        assert!(two_h_minus_e.is_nef());
        assert!(ToricClass::from_ints(b.clone(), &[1, 1, 1, 1]).unwrap().is_strictly_convex());
        for c in [&h, &e, &two_h_minus_e] {
            assert_eq!(c.is_nef(), c.is_nef_on_refinement().unwrap());
        }
    }

    #[test]
    fn minorant_of_h_plus_e() {
        let b = blowup();
        let c = ToricClass::from_ints(b, &[1, 0, 0, 2]).unwrap();
        let (_, gaps) = c.convex_minorant().unwrap();
        assert_eq!(gaps, vec![int(0), int(0), int(0), int(1)]);
    }

    #[test]
    fn nef_difference_of_exceptional() {
        let b = blowup();
        let e = ToricClass::from_ints(b.clone(), &[0, 0, 0, 1]).unwrap();
        let omega = ToricClass::from_ints(b.clone(), &[1, 1, 1, 1]).unwrap();
        let d = e.nef_difference(Some(&omega)).unwrap();
        assert_eq!(d.multiple, 1);
        assert_eq!(d.positive.values(), &[int(1), int(1), int(1), int(2)]);
        let minus = omega.scale(&int(-1));
        let d = minus.nef_difference(Some(&omega)).unwrap();
        assert_eq!(d.multiple, 1);
        assert!(d.positive.values().iter().all(Zero::is_zero));
    }

    #[test]
    fn equivalence_and_restatement() {
        let f = Arc::new(Fan::projective_space(2));
        let h = ToricClass::from_ints(f.clone(), &[1, 0, 0]).unwrap();
        let h2 = ToricClass::from_ints(f.clone(), &[0, 1, 0]).unwrap();
        assert!(h.is_equivalent(&h2));
        assert!(!h.is_equivalent(&h.scale(&rat(1, 2))));
        let b = blowup();
        let r = h.restate(&b);
        assert_eq!(r.values(), &[int(1), int(0), int(0), int(1)]);
    }
}
