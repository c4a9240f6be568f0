//! Complete simplicial projective fans in `N_R ≅ R^n`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::linalg::{self, Matrix};
use crate::lp::{self, Inequality};
use crate::polytope::{subsets, LatticeVector};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FanError {
    #[error("ray {ray} has {found} coordinates, expected {expected}")]
    RayDimension { ray: usize, expected: usize, found: usize },
    #[error("ray {0} is zero")]
    ZeroRay(usize),
    #[error("rays {0} and {1} coincide after primitivization")]
    DuplicateRay(usize, usize),
    #[error("ray {0} belongs to no maximal cone")]
    UnusedRay(usize),
    #[error("cone {cone} references ray index {index}, but there are only {rays} rays")]
    ConeIndexOutOfRange { cone: usize, index: usize, rays: usize },
    #[error("cone {cone} has {found} distinct rays, expected {expected}")]
    ConeSize { cone: usize, expected: usize, found: usize },
    #[error("cone {0} is listed twice")]
    DuplicateCone(usize),
    #[error("cone {0} is not simplicial (its rays are linearly dependent)")]
    NonSimplicial(usize),
    #[error("facet {facet:?} lies in {count} maximal cones (completeness requires exactly 2)")]
    DanglingFacet { facet: Vec<usize>, count: usize },
    #[error("cones {0} and {1} lie on the same side of their common facet")]
    OverlappingCones(usize, usize),
    #[error("direction {direction:?} is covered by {count} maximal cones")]
    CoveringFailure { direction: Vec<i64>, count: usize },
    #[error("fan admits no strictly convex piecewise-linear support function")]
    NotProjective,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("{0:?} is not a face of the fan")]
    NotAFace(Vec<usize>),
}

/// A validated complete simplicial projective fan.
///
/// Rays are primitive; every maximal cone lists `dim` ray indices in
/// increasing order. The fan also carries a certified strictly convex
/// piecewise-linear function (`ample_values`).
#[derive(Debug, Clone)]
pub struct Fan {
    dim: usize,
    rays: Vec<LatticeVector>,
    cones: Vec<Vec<usize>>,
    /// `cone_inverse[c] · v` are the coordinates of `v` in the rays of cone `c`.
    cone_inverse: Vec<Matrix>,
    ample_values: Vec<Rational>,
}

impl PartialEq for Fan {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.rays == other.rays && self.cones == other.cones
    }
}

impl Eq for Fan {}

fn ray_matrix(rays: &[LatticeVector], cone: &[usize]) -> Matrix {
    let n = rays[0].len();
    (0..n)
        .map(|i| cone.iter().map(|&r| Rational::from_integer(rays[r][i].clone())).collect())
        .collect()
}

/// Deterministic pseudo-random directions for the covering spot-check.
fn sample_directions(dim: usize, count: usize) -> Vec<Vec<i64>> {
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15 ^ (dim as u64);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    (0..count).map(|_| (0..dim).map(|_| (next() % 195) as i64 - 97).collect()).collect()
}

impl Fan {
    /// Validates raw fan data: primitivizes rays, then checks simpliciality,
    /// facet pairing, a covering spot-check and projectivity.
    pub fn new(dim: usize, rays: Vec<LatticeVector>, cones: Vec<Vec<usize>>) -> Result<Self, FanError> {
        let mut prim = Vec::with_capacity(rays.len());
        for (i, r) in rays.iter().enumerate() {
            if r.len() != dim {
                return Err(FanError::RayDimension { ray: i, expected: dim, found: r.len() });
            }
            if r.iter().all(Zero::is_zero) {
                return Err(FanError::ZeroRay(i));
            }
            let p = linalg::primitive_int(r);
            if let Some(j) = prim.iter().position(|q: &LatticeVector| *q == p) {
                return Err(FanError::DuplicateRay(j, i));
            }
            prim.push(p);
        }
        let rays = prim;

        let mut sorted_cones = Vec::with_capacity(cones.len());
        let mut seen = BTreeSet::new();
        for (c, cone) in cones.iter().enumerate() {
            for &idx in cone {
                if idx >= rays.len() {
                    return Err(FanError::ConeIndexOutOfRange { cone: c, index: idx, rays: rays.len() });
                }
            }
            let set: BTreeSet<usize> = cone.iter().copied().collect();
            if set.len() != dim {
                return Err(FanError::ConeSize { cone: c, expected: dim, found: set.len() });
            }
            let sorted: Vec<usize> = set.into_iter().collect();
            if !seen.insert(sorted.clone()) {
                return Err(FanError::DuplicateCone(c));
            }
            sorted_cones.push(sorted);
        }
        let cones = sorted_cones;
        for r in 0..rays.len() {
            if !cones.iter().any(|c| c.contains(&r)) {
                return Err(FanError::UnusedRay(r));
            }
        }

        let mut cone_inverse = Vec::with_capacity(cones.len());
        for (c, cone) in cones.iter().enumerate() {
            let inv = linalg::inverse(&ray_matrix(&rays, cone)).ok_or(FanError::NonSimplicial(c))?;
            cone_inverse.push(inv);
        }

        // Facet pairing: each (n-1)-face in exactly two cones, on opposite sides.
        let mut facets: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
        for (c, cone) in cones.iter().enumerate() {
            for &opposite in cone {
                let facet: Vec<usize> = cone.iter().copied().filter(|&r| r != opposite).collect();
                facets.entry(facet).or_default().push((c, opposite));
            }
        }
        for (facet, owners) in &facets {
            if owners.len() != 2 {
                return Err(FanError::DanglingFacet { facet: facet.clone(), count: owners.len() });
            }
            if dim >= 1 {
                let vecs: Vec<LatticeVector> = facet.iter().map(|&r| rays[r].clone()).collect();
                let normal = linalg::cross_int(&vecs, dim);
                let s0 = linalg::dot_ints(&normal, &rays[owners[0].1]);
                let s1 = linalg::dot_ints(&normal, &rays[owners[1].1]);
                if (s0.is_positive() && s1.is_positive()) || (s0.is_negative() && s1.is_negative()) {
                    return Err(FanError::OverlappingCones(owners[0].0, owners[1].0));
                }
            }
        }

        let walls: Vec<(usize, usize)> = facets.values().map(|o| (o[0].0, o[1].1)).collect();
        let mut fan = Fan { dim, rays, cones, cone_inverse, ample_values: Vec::new() };

        for direction in sample_directions(dim, 64) {
            let v: Vec<Rational> = direction.iter().map(|&x| rational::int(x)).collect();
            if v.iter().all(Zero::is_zero) {
                continue;
            }
            let mut interior = 0;
            let mut boundary = false;
            for inv in &fan.cone_inverse {
                let lambda = linalg::mat_vec(inv, &v);
                if lambda.iter().all(|x| x.is_positive()) {
                    interior += 1;
                } else if lambda.iter().all(|x| !x.is_negative()) {
                    boundary = true;
                }
            }
            if !boundary && interior != 1 {
                return Err(FanError::CoveringFailure { direction, count: interior });
            }
        }

        fan.ample_values = fan.certify_projective(&walls)?;
        Ok(fan)
    }

    /// Finds ray values whose PL function is strictly convex with unit slack
    /// across every wall: for a wall of cone `σ` with opposite ray `ρ` in the
    /// neighbouring cone, `⟨m_σ, v_ρ⟩ <= a_ρ - 1`.
    fn certify_projective(&self, walls: &[(usize, usize)]) -> Result<Vec<Rational>, FanError> {
        let ones = vec![Rational::one(); self.rays.len()];
        if self.is_strictly_convex(&ones) {
            return Ok(ones);
        }
        let r = self.rays.len();
        let mut cons = Vec::new();
        for &(c, rho) in walls {
            let lambda = self.coordinates_in_cone(c, &self.rays[rho]);
            let mut coeffs = vec![Rational::zero(); r];
            for (k, &i) in self.cones[c].iter().enumerate() {
                coeffs[i] = lambda[k].clone();
            }
            coeffs[rho] -= Rational::one();
            cons.push(Inequality::new(coeffs, -Rational::one()));
        }
        let point = lp::feasible_point(r, &cons).expect("dimensions consistent").ok_or(FanError::NotProjective)?;
        debug_assert!(self.is_strictly_convex(&point));
        Ok(point)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn ray(&self, index: usize) -> &LatticeVector {
        &self.rays[index]
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn ray_index(&self, v: &[BigInt]) -> Option<usize> {
        let p = linalg::primitive_int(v);
        self.rays.iter().position(|r| *r == p)
    }

    /// Certified strictly convex ray values.
    pub fn ample_values(&self) -> &[Rational] {
        &self.ample_values
    }

    pub(crate) fn coordinates_in_cone(&self, cone: usize, v: &[BigInt]) -> Vec<Rational> {
        linalg::mat_vec(&self.cone_inverse[cone], &linalg::to_rational(v))
    }

    /// A maximal cone containing `v` and the coefficients of `v` in its rays.
    pub fn locate(&self, v: &[Rational]) -> (usize, Vec<Rational>) {
        for (c, inv) in self.cone_inverse.iter().enumerate() {
            let lambda = linalg::mat_vec(inv, v);
            if lambda.iter().all(|x| !x.is_negative()) {
                return (c, lambda);
            }
        }
        unreachable!("complete fan covers every direction")
    }

    /// H-representation `{v : row · v >= 0}` of a maximal cone.
    pub(crate) fn cone_hrep(&self, cone: usize) -> &Matrix {
        &self.cone_inverse[cone]
    }

    /// The linear form agreeing with `values` on the rays of `cone`.
    pub fn linear_piece(&self, values: &[Rational], cone: usize) -> Vec<Rational> {
        let inv = &self.cone_inverse[cone];
        let local: Vec<Rational> = self.cones[cone].iter().map(|&r| values[r].clone()).collect();
        // m = inv^T · a_σ, since ⟨m, v_i⟩ = a_i for the cone rays.
        (0..self.dim)
            .map(|j| (0..self.dim).fold(Rational::zero(), |acc, k| acc + &inv[k][j] * &local[k]))
            .collect()
    }

    /// Strict convexity of the PL function with the given ray values.
    pub fn is_strictly_convex(&self, values: &[Rational]) -> bool {
        self.convexity(values, true)
    }

    pub(crate) fn convexity(&self, values: &[Rational], strict: bool) -> bool {
        for (c, cone) in self.cones.iter().enumerate() {
            let m = self.linear_piece(values, c);
            for (rho, v) in self.rays.iter().enumerate() {
                if cone.contains(&rho) {
                    continue;
                }
                let lhs = linalg::dot_int(v, &m);
                if (strict && lhs >= values[rho]) || (!strict && lhs > values[rho]) {
                    return false;
                }
            }
        }
        true
    }

    /// Standard fan of projective `n`-space.
    pub fn projective_space(n: usize) -> Self {
        let mut rays: Vec<LatticeVector> =
            (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect();
        rays.push(vec![BigInt::from(-1); n]);
        let cones = (0..=n).map(|skip| (0..=n).filter(|&r| r != skip).collect()).collect();
        Fan::new(n, rays, cones).expect("projective space fan is valid")
    }

    /// Fan of the product of `n` projective lines; rays `e_i` then `-e_i`.
    pub fn product_of_lines(n: usize) -> Self {
        let mut rays = Vec::new();
        for sign in [1i64, -1] {
            for i in 0..n {
                rays.push((0..n).map(|j| BigInt::from(if i == j { sign } else { 0 })).collect());
            }
        }
        let cones = (0..1usize << n)
            .map(|mask| (0..n).map(|i| if mask >> i & 1 == 1 { i + n } else { i }).collect())
            .collect();
        Fan::new(n, rays, cones).expect("product fan is valid")
    }

    /// All cones of the fan of dimension at least 2, as sorted ray index lists.
    pub fn faces(&self, min_dim: usize) -> Vec<Vec<usize>> {
        let mut out = BTreeSet::new();
        for cone in &self.cones {
            for k in min_dim..=self.dim {
                for s in subsets(cone.len(), k) {
                    out.insert(s.iter().map(|&i| cone[i]).collect::<Vec<_>>());
                }
            }
        }
        out.into_iter().collect()
    }

    /// Stellar subdivision at a face: new ray is the primitive sum of the
    /// face's generators; each cone containing the face is split.
    pub fn stellar_subdivision(&self, face: &[usize]) -> Result<(Fan, usize), FanError> {
        let face: BTreeSet<usize> = face.iter().copied().collect();
        if face.is_empty() || !self.cones.iter().any(|c| face.iter().all(|r| c.contains(r))) {
            return Err(FanError::NotAFace(face.into_iter().collect()));
        }
        let mut sum = vec![BigInt::zero(); self.dim];
        for &r in &face {
            for (acc, x) in sum.iter_mut().zip(&self.rays[r]) {
                *acc += x;
            }
        }
        let new_ray = linalg::primitive_int(&sum);
        if let Some(existing) = self.ray_index(&new_ray) {
            return Ok((self.clone(), existing));
        }
        let w = self.rays.len();
        let mut rays = self.rays.clone();
        rays.push(new_ray);
        let mut cones = Vec::new();
        for cone in &self.cones {
            if face.iter().all(|r| cone.contains(r)) {
                for &r in &face {
                    cones.push(cone.iter().map(|&x| if x == r { w } else { x }).collect());
                }
            } else {
                cones.push(cone.clone());
            }
        }
        Ok((Fan::new(self.dim, rays, cones)?, w))
    }
}

/// Extremal rays of the pointed cone `{v : row · v >= 0}` (brute force over
/// `(n-1)`-subsets of rows), primitive and sorted; empty unless full-dimensional.
pub(crate) fn extremal_rays(rows: &[Vec<Rational>], dim: usize) -> Vec<LatticeVector> {
    let mut out: BTreeSet<LatticeVector> = BTreeSet::new();
    if dim == 1 {
        for sign in [1i64, -1] {
            let v = vec![Rational::from_integer(sign.into())];
            if rows.iter().all(|r| !linalg::dot(r, &v).is_negative()) {
                out.insert(vec![BigInt::from(sign)]);
            }
        }
        return out.into_iter().collect();
    }
    for subset in subsets(rows.len(), dim - 1) {
        let sub: Vec<Vec<Rational>> = subset.iter().map(|&i| rows[i].clone()).collect();
        let ns = linalg::nullspace(&sub, dim);
        if ns.len() != 1 {
            continue;
        }
        let d = &ns[0];
        for sign in [1i64, -1] {
            let v: Vec<Rational> = d.iter().map(|x| x * Rational::from_integer(sign.into())).collect();
            if rows.iter().all(|r| !linalg::dot(r, &v).is_negative()) {
                out.insert(linalg::primitive(&v));
            }
        }
    }
    let rays: Vec<LatticeVector> = out.into_iter().collect();
    if linalg::rank_int(&rays) < dim {
        return Vec::new();
    }
    rays
}

/// Facets of a full-dimensional pointed cone given by extremal rays, as
/// subsets of the ray indices in `cone`.
fn cone_facets(rays: &[LatticeVector], cone: &[usize], dim: usize) -> Vec<Vec<usize>> {
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    for s in subsets(cone.len(), dim - 1) {
        let vecs: Vec<LatticeVector> = s.iter().map(|&i| rays[cone[i]].clone()).collect();
        if linalg::rank_int(&vecs) != dim - 1 {
            continue;
        }
        let normal = linalg::cross_int(&vecs, dim);
        let signs: Vec<BigInt> = cone.iter().map(|&r| linalg::dot_ints(&normal, &rays[r])).collect();
        let all_nonneg = signs.iter().all(|x| !x.is_negative());
        let all_nonpos = signs.iter().all(|x| !x.is_positive());
        if all_nonneg || all_nonpos {
            out.insert(cone.iter().zip(&signs).filter(|(_, s)| s.is_zero()).map(|(&r, _)| r).collect());
        }
    }
    out.into_iter().collect()
}

/// All faces (as sorted ray lists, with their dimension) of a cone.
fn cone_faces(rays: &[LatticeVector], cone: &[usize], dim: usize) -> Vec<(usize, Vec<usize>)> {
    let facets = cone_facets(rays, cone, dim);
    let mut faces: BTreeSet<Vec<usize>> = facets.iter().cloned().collect();
    faces.insert(cone.to_vec());
    loop {
        let current: Vec<Vec<usize>> = faces.iter().cloned().collect();
        let mut grew = false;
        for f in &current {
            for g in &facets {
                let meet: Vec<usize> = f.iter().copied().filter(|r| g.contains(r)).collect();
                if !meet.is_empty() && faces.insert(meet) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    faces
        .into_iter()
        .map(|f| {
            let vecs: Vec<LatticeVector> = f.iter().map(|&r| rays[r].clone()).collect();
            (linalg::rank_int(&vecs), f)
        })
        .collect()
}

/// Turns a complete polyhedral fan into a simplicial one by stellar
/// subdivisions at the lowest-dimensional non-simplicial face, ties broken
/// lexicographically; the new ray is the primitive sum of the face's rays.
fn simplicialize(dim: usize, mut rays: Vec<LatticeVector>, mut cones: Vec<Vec<usize>>) -> (Vec<LatticeVector>, Vec<Vec<usize>>) {
    loop {
        let mut target: Option<(usize, Vec<usize>)> = None;
        for cone in &cones {
            if cone.len() == dim {
                continue;
            }
            for (d, face) in cone_faces(&rays, cone, dim) {
                if face.len() > d {
                    let key = (d, face);
                    if target.as_ref().is_none_or(|t| key < *t) {
                        target = Some(key);
                    }
                }
            }
        }
        let Some((_, face)) = target else {
            return (rays, cones);
        };
        let mut sum = vec![BigInt::zero(); dim];
        for &r in &face {
            for (acc, x) in sum.iter_mut().zip(&rays[r]) {
                *acc += x;
            }
        }
        let w = rays.len();
        rays.push(linalg::primitive_int(&sum));
        let mut next = Vec::new();
        for cone in &cones {
            if face.iter().all(|r| cone.contains(r)) {
                for g in cone_facets(&rays, cone, dim) {
                    if face.iter().all(|r| g.contains(r)) {
                        continue;
                    }
                    let mut c = g.clone();
                    c.push(w);
                    c.sort_unstable();
                    next.push(c);
                }
            } else {
                next.push(cone.clone());
            }
        }
        cones = next;
    }
}

/// Rays of the common refinement of a fan with a complete collection of
/// (possibly non-pointed) cones given in H-form `{v : row · v >= 0}`.
pub(crate) fn refinement_rays(fan: &Fan, others: &[Matrix]) -> Vec<LatticeVector> {
    let mut out: BTreeSet<LatticeVector> = BTreeSet::new();
    for c in 0..fan.cones.len() {
        for other in others {
            let mut rows = fan.cone_hrep(c).clone();
            rows.extend(other.iter().cloned());
            out.extend(extremal_rays(&rows, fan.dim));
        }
    }
    out.into_iter().collect()
}

/// Common refinement: all full-dimensional intersections `σ₁ ∩ σ₂`, then
/// simplicialized. Rays are ordered as Σ₁'s rays, Σ₂'s new rays, then rays
/// created by the intersection and the subdivision.
pub fn common_refinement(first: &Fan, second: &Fan) -> Result<Fan, FanError> {
    if first.dim != second.dim {
        return Err(FanError::DimensionMismatch(first.dim, second.dim));
    }
    if first == second {
        return Ok(first.clone());
    }
    let dim = first.dim;
    let mut intersections: Vec<Vec<LatticeVector>> = Vec::new();
    for a in 0..first.cones.len() {
        for b in 0..second.cones.len() {
            let mut rows = first.cone_hrep(a).clone();
            rows.extend(second.cone_hrep(b).iter().cloned());
            let rays = extremal_rays(&rows, dim);
            if !rays.is_empty() {
                intersections.push(rays);
            }
        }
    }
    let mut rays: Vec<LatticeVector> = first.rays.clone();
    for r in &second.rays {
        if !rays.contains(r) && intersections.iter().any(|c| c.contains(r)) {
            rays.push(r.clone());
        }
    }
    let mut fresh: BTreeSet<LatticeVector> = BTreeSet::new();
    for c in &intersections {
        for r in c {
            if !rays.contains(r) {
                fresh.insert(r.clone());
            }
        }
    }
    rays.extend(fresh);
    let mut cones: Vec<Vec<usize>> = intersections
        .iter()
        .map(|c| {
            let mut idx: Vec<usize> = c.iter().map(|r| rays.iter().position(|x| x == r).unwrap()).collect();
            idx.sort_unstable();
            idx
        })
        .collect();
    cones.sort();
    cones.dedup();
    let (rays, mut cones) = simplicialize(dim, rays, cones);
    cones.sort();
    Fan::new(dim, rays, cones)
}

/// Fan equality up to ray and cone ordering.
pub fn same_fan(a: &Fan, b: &Fan) -> bool {
    if a.dim != b.dim || a.rays.len() != b.rays.len() || a.cones.len() != b.cones.len() {
        return false;
    }
    let canon = |f: &Fan| -> BTreeSet<BTreeSet<LatticeVector>> {
        f.cones.iter().map(|c| c.iter().map(|&r| f.rays[r].clone()).collect()).collect()
    };
    canon(a) == canon(b)
}

/// Whether every maximal cone of `fine` lies inside some maximal cone of
/// `coarse` (so `fine` refines `coarse`), tested at cone barycenters.
pub fn refines(fine: &Fan, coarse: &Fan) -> bool {
    fine.cones.iter().all(|cone| {
        let mut sum = vec![BigInt::zero(); fine.dim];
        for &r in cone {
            for (acc, x) in sum.iter_mut().zip(&fine.rays[r]) {
                *acc += x;
            }
        }
        let bary = linalg::to_rational(&sum);
        (0..coarse.cones.len()).any(|c| {
            let inside = |v: &[BigInt]| {
                coarse.coordinates_in_cone(c, v).iter().all(|x| !x.is_negative())
            };
            linalg::mat_vec(&coarse.cone_inverse[c], &bary).iter().all(|x| !x.is_negative())
                && cone.iter().all(|&r| inside(&fine.rays[r]))
        })
    })
}

pub type SharedFan = Arc<Fan>;

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(c: &[i64]) -> LatticeVector {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    pub(crate) fn blown_up_plane() -> Fan {
        Fan::new(
            2,
            vec![lv(&[1, 0]), lv(&[0, 1]), lv(&[-1, -1]), lv(&[1, 1])],
            vec![vec![0, 3], vec![3, 1], vec![1, 2], vec![2, 0]],
        )
        .unwrap()
    }

    #[test]
    fn plane_fan_valid() {
        let f = Fan::new(2, vec![lv(&[1, 0]), lv(&[0, 1]), lv(&[-1, -1])], vec![vec![0, 1], vec![1, 2], vec![2, 0]])
            .unwrap();
        assert!(same_fan(&f, &Fan::projective_space(2)));
        assert_eq!(f.ample_values(), &[Rational::one(), Rational::one(), Rational::one()]);
    }

    #[test]
    fn missing_cone_is_dangling() {
        let err = Fan::new(2, vec![lv(&[1, 0]), lv(&[0, 1]), lv(&[-1, -1])], vec![vec![0, 1], vec![1, 2]]).unwrap_err();
        assert!(matches!(err, FanError::DanglingFacet { .. }));
    }

    #[test]
    fn rays_are_primitivized() {
        let f = Fan::new(2, vec![lv(&[2, 0]), lv(&[0, 1]), lv(&[-1, -1])], vec![vec![0, 1], vec![1, 2], vec![2, 0]])
            .unwrap();
        assert_eq!(f.ray(0), &lv(&[1, 0]));
    }

    #[test]
    fn rejects_bad_input() {
        let err = Fan::new(2, vec![lv(&[1, 0]), lv(&[2, 0]), lv(&[-1, -1])], vec![vec![0, 1]]).unwrap_err();
        assert_eq!(err, FanError::DuplicateRay(0, 1));
        let err = Fan::new(2, vec![lv(&[1, 0]), lv(&[0, 1])], vec![vec![0, 5]]).unwrap_err();
        assert!(matches!(err, FanError::ConeIndexOutOfRange { .. }));
        let err =
            Fan::new(2, vec![lv(&[1, 0]), lv(&[-1, 0]), lv(&[0, 1]), lv(&[0, -1])], vec![vec![0, 1], vec![2, 3]])
                .unwrap_err();
        assert_eq!(err, FanError::NonSimplicial(0));
    }

    #[test]
    fn blowup_is_projective() {
        let f = blown_up_plane();
        assert!(f.is_strictly_convex(f.ample_values()));
        assert_eq!(f.cones().len(), 4);
    }

    #[test]
    fn standard_fans() {
        assert_eq!(Fan::projective_space(3).cones().len(), 4);
        assert_eq!(Fan::product_of_lines(3).cones().len(), 8);
        assert_eq!(Fan::product_of_lines(2).rays().len(), 4);
    }

    #[test]
    fn stellar_gives_blowup() {
        let (f, w) = Fan::projective_space(2).stellar_subdivision(&[0, 1]).unwrap();
        assert_eq!(w, 3);
        assert!(same_fan(&f, &blown_up_plane()));
        let (g, _) = Fan::projective_space(3).stellar_subdivision(&[0, 1, 2]).unwrap();
        assert_eq!(g.cones().len(), 6);
    }

    #[test]
    fn refinement_examples() {
        let p2 = Fan::projective_space(2);
        assert_eq!(common_refinement(&p2, &p2).unwrap(), p2);
        let r = common_refinement(&p2, &blown_up_plane()).unwrap();
        assert!(same_fan(&r, &blown_up_plane()));
        assert!(refines(&r, &p2));
        assert!(refines(&r, &blown_up_plane()));
        assert!(!refines(&p2, &blown_up_plane()));
    }

    #[test]
    fn refinement_in_dimension_three_is_simplicial() {
        let a = Fan::projective_space(3);
        let b = Fan::product_of_lines(3);
        let r = common_refinement(&a, &b).unwrap();
        assert!(refines(&r, &a));
        assert!(refines(&r, &b));
        assert!(r.cones().iter().all(|c| c.len() == 3));
    }
}
