//! Positivity predicates and numerical invariants of toric classes.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::class::{ClassError, NefClass, ToricClass};
use crate::fan::{self, Fan};
use crate::lp::{self, Inequality, LpOutcome};
use crate::mixed::mixed_volume;
use crate::polytope::{GeometryError, HalfSpace, Polytope};
use crate::rational::{self, factorial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PositivityError {
    #[error("class is not pseudo-effective")]
    NotPsef,
    #[error("class is not big")]
    NotBig,
    #[error("class is not nef")]
    NotNef,
    #[error("class has non-integral ray values")]
    NonIntegral,
    #[error("ray index {0} out of range")]
    UnknownRay(usize),
    #[error("expected {expected} classes, got {found}")]
    Arity { expected: usize, found: usize },
    #[error("k must be at least 1")]
    BadMultiple,
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Fan(#[from] crate::fan::FanError),
}

pub fn is_psef(alpha: &ToricClass) -> bool {
    let n = alpha.dim();
    let cons: Vec<Inequality> = alpha
        .fan()
        .rays()
        .iter()
        .zip(alpha.values())
        .map(|(v, a)| Inequality::new(crate::linalg::to_rational(v), a.clone()))
        .collect();
    lp::feasible_point(n, &cons).expect("consistent dimensions").is_some()
}

/// Maximizes a uniform slack `ε <= 1` on every Newton constraint.
pub fn is_big(alpha: &ToricClass) -> bool {
    let n = alpha.dim();
    let mut cons: Vec<Inequality> = alpha
        .fan()
        .rays()
        .iter()
        .zip(alpha.values())
        .map(|(v, a)| {
            let mut c = crate::linalg::to_rational(v);
            c.push(Rational::one());
            Inequality::new(c, a.clone())
        })
        .collect();
    let mut cap = vec![Rational::zero(); n + 1];
    cap[n] = Rational::one();
    cons.push(Inequality::new(cap.clone(), Rational::one()));
    match lp::maximize(&cap, &cons).expect("consistent dimensions") {
        LpOutcome::Optimal { value, .. } => value.is_positive(),
        _ => false,
    }
}

/// Convexity of the class's PL function, tested on the common refinement of
/// its fan with the normal fan of its Newton polytope.
pub fn is_nef(alpha: &ToricClass) -> bool {
    let nef = alpha.is_nef_on_refinement().unwrap_or(false);
    debug_assert!(!nef || is_psef(alpha));
    nef
}

/// `α = P(α) + N(α)`: the support function of `Nw(α)` plus nonnegative ray
/// coefficients.
#[derive(Debug, Clone)]
pub struct ZariskiDecomposition {
    pub positive: NefClass,
    /// `P(α)` written on the source fan.
    pub positive_class: ToricClass,
    pub negative: Vec<Rational>,
    pub source: ToricClass,
}

impl ZariskiDecomposition {
    /// Rays with a nonzero negative coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.negative.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect()
    }
}

pub fn zariski(alpha: &ToricClass) -> Result<ZariskiDecomposition, PositivityError> {
    let (positive, negative) = match alpha.convex_minorant() {
        Ok(x) => x,
        Err(ClassError::NotPsef) => return Err(PositivityError::NotPsef),
        Err(e) => return Err(e.into()),
    };
    let positive_class = positive.on_fan(alpha.fan().clone())?;
    if negative.iter().any(Signed::is_negative) {
        return Err(PositivityError::Internal("negative Zariski coefficient".into()));
    }
    let rebuilt: Vec<Rational> = positive_class.values().iter().zip(&negative).map(|(p, c)| p + c).collect();
    if rebuilt != alpha.values() {
        return Err(PositivityError::Internal("Zariski parts do not reconstitute the class".into()));
    }
    if vol(&positive_class) != vol(alpha) {
        return Err(PositivityError::Internal("volume of positive part differs".into()));
    }
    Ok(ZariskiDecomposition { positive, positive_class, negative, source: alpha.clone() })
}

/// `n! · volume(Nw(α))`, zero outside the psef cone.
pub fn vol(alpha: &ToricClass) -> Rational {
    match alpha.newton_polytope().volume() {
        Ok(v) => v * Rational::from_integer(factorial(alpha.dim())),
        Err(GeometryError::Empty) => Rational::zero(),
        Err(e) => panic!("Newton polytope of a class on a complete fan: {e}"),
    }
}

fn newton_of_psef(alpha: &ToricClass) -> Result<&Polytope, PositivityError> {
    let p = alpha.newton_polytope();
    if p.is_empty()? {
        return Err(PositivityError::NotPsef);
    }
    Ok(p)
}

/// `⟨α₁ ⋯ α_n⟩ = n! · V(Nw(α₁), …, Nw(α_n))`.
pub fn positive_product(classes: &[&ToricClass]) -> Result<Rational, PositivityError> {
    let n = classes.first().map_or(0, |c| c.dim());
    if classes.len() != n || n == 0 {
        return Err(PositivityError::Arity { expected: n, found: classes.len() });
    }
    let polys = classes.iter().map(|c| newton_of_psef(c)).collect::<Result<Vec<_>, _>>()?;
    Ok(mixed_volume(&polys)? * Rational::from_integer(factorial(n)))
}

/// `⟨α₁ ⋯ α_{n-1}⟩ · γ` for psef `α_i` and arbitrary `γ`, through
/// `γ = β₊ - β₋` with `β₋` a multiple of the fan's ample class.
pub fn pair(alphas: &[&ToricClass], gamma: &ToricClass) -> Result<Rational, PositivityError> {
    pair_with(alphas, gamma, None)
}

/// As [`pair`], with an explicit strictly convex reference class `ω`.
pub fn pair_with(
    alphas: &[&ToricClass],
    gamma: &ToricClass,
    omega: Option<&ToricClass>,
) -> Result<Rational, PositivityError> {
    let n = gamma.dim();
    if alphas.len() + 1 != n {
        return Err(PositivityError::Arity { expected: n - 1, found: alphas.len() });
    }
    let mut polys = alphas.iter().map(|c| newton_of_psef(c)).collect::<Result<Vec<_>, _>>()?;
    let diff = gamma.nef_difference(omega)?;
    let scale = Rational::from_integer(factorial(n));
    polys.push(diff.positive.newton_polytope());
    let plus = mixed_volume(&polys)?;
    if diff.multiple == 0 {
        return Ok(plus * scale);
    }
    polys.pop();
    polys.push(diff.negative.newton_polytope());
    let minus = mixed_volume(&polys)?;
    Ok((plus - minus) * scale)
}

/// Writes both classes on a common fan.
pub fn align(a: &ToricClass, b: &ToricClass) -> Result<(ToricClass, ToricClass), PositivityError> {
    if Arc::ptr_eq(a.fan(), b.fan()) || a.fan() == b.fan() {
        return Ok((a.clone(), b.clone()));
    }
    let common = Arc::new(fan::common_refinement(a.fan(), b.fan())?);
    Ok((a.restate(&common), b.restate(&common)))
}

/// `sup {t > 0 : α - tβ psef}` as an LP in `(m, t)`.
pub fn slope(alpha: &ToricClass, beta: &ToricClass) -> Result<Rational, PositivityError> {
    if !is_big(alpha) || !is_big(beta) {
        return Err(PositivityError::NotBig);
    }
    let (a, b) = align(alpha, beta)?;
    let n = a.dim();
    let cons: Vec<Inequality> = a
        .fan()
        .rays()
        .iter()
        .zip(a.values().iter().zip(b.values()))
        .map(|(v, (ga, gb))| {
            let mut c = crate::linalg::to_rational(v);
            c.push(gb.clone());
            Inequality::new(c, ga.clone())
        })
        .collect();
    let mut objective = vec![Rational::zero(); n + 1];
    objective[n] = Rational::one();
    match lp::maximize(&objective, &cons).map_err(|e| PositivityError::Internal(e.to_string()))? {
        LpOutcome::Optimal { value, .. } if value.is_positive() => Ok(value),
        LpOutcome::Optimal { value, .. } => Err(PositivityError::Internal(format!("nonpositive slope {value}"))),
        LpOutcome::Unbounded => Err(PositivityError::Internal("slope LP unbounded".into())),
        LpOutcome::Infeasible => Err(PositivityError::Internal("slope LP infeasible".into())),
    }
}

fn check_ray(alpha: &ToricClass, ray: usize) -> Result<(), PositivityError> {
    if ray >= alpha.fan().rays().len() {
        return Err(PositivityError::UnknownRay(ray));
    }
    Ok(())
}

/// The ray lies outside the support of the negative part.
pub fn is_d_psef(alpha: &ToricClass, ray: usize) -> Result<bool, PositivityError> {
    check_ray(alpha, ray)?;
    let z = zariski(alpha)?;
    Ok(z.negative[ray].is_zero())
}

pub fn is_d_big(alpha: &ToricClass, ray: usize) -> Result<bool, PositivityError> {
    Ok(restricted_volume(alpha, ray)?.is_positive())
}

/// `(n-1)! ·` lattice-normalized volume of the face of `Nw(α)` in direction
/// `v_ρ`.
pub fn restricted_volume(alpha: &ToricClass, ray: usize) -> Result<Rational, PositivityError> {
    check_ray(alpha, ray)?;
    if !is_big(alpha) {
        return Err(PositivityError::NotBig);
    }
    let v = alpha.fan().ray(ray);
    let face = alpha.newton_polytope().face(v)?;
    Ok(face.relative_volume(v)? * Rational::from_integer(factorial(alpha.dim() - 1)))
}

fn integral_values(alpha: &ToricClass) -> Result<Vec<BigInt>, PositivityError> {
    alpha.values().iter().map(|a| if a.is_integer() { Ok(a.to_integer()) } else { Err(PositivityError::NonIntegral) }).collect()
}

fn scaled_halfspaces(alpha: &ToricClass, k: u64) -> Result<Vec<HalfSpace>, PositivityError> {
    if k == 0 {
        return Err(PositivityError::BadMultiple);
    }
    let values = integral_values(alpha)?;
    let k = BigInt::from(k);
    Ok(alpha
        .fan()
        .rays()
        .iter()
        .zip(values)
        .map(|(v, a)| HalfSpace::new(v.clone(), Rational::from_integer(a * &k)))
        .collect())
}

/// Lattice points of `Nw(kα)`.
pub fn h0(alpha: &ToricClass, k: u64) -> Result<u64, PositivityError> {
    let hs = scaled_halfspaces(alpha, k)?;
    Ok(Polytope::from_bounded_halfspaces(alpha.dim(), hs).lattice_points()?)
}

/// Lattice points of `Nw(kα)` on the level set `⟨m, v_ρ⟩ = k·a_ρ`; equals
/// `h0(kα) - h0(kα - δ_ρ)`.
pub fn h0_restricted(alpha: &ToricClass, ray: usize, k: u64) -> Result<u64, PositivityError> {
    check_ray(alpha, ray)?;
    let mut hs = scaled_halfspaces(alpha, k)?;
    let level = hs[ray].clone();
    hs.push(HalfSpace::new(level.normal.iter().map(|x| -x).collect(), -level.bound));
    Ok(Polytope::from_bounded_halfspaces(alpha.dim(), hs).lattice_points()?)
}

/// The ray divisor `δ_ρ` on a fan.
pub fn delta(fan: &Arc<Fan>, ray: usize) -> ToricClass {
    ToricClass::ray_divisor(fan.clone(), ray)
}

/// Exact numbers collected for reports.
#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub psef: bool,
    pub big: bool,
    pub nef: bool,
    #[serde(serialize_with = "rational::serialize_rational")]
    pub volume: Rational,
}

pub fn summary(alpha: &ToricClass) -> Summary {
    Summary { psef: is_psef(alpha), big: is_big(alpha), nef: is_nef(alpha), volume: vol(alpha) }
}
