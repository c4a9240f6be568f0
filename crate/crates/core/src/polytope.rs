//! Bounded rational polytopes in half-space form with a cached vertex form.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::hull::{self, HullResult};
use crate::linalg::{self, dot_int};
use crate::lp::{self, Inequality, LpOutcome};
use crate::rational::{self, Rational};

/// Element of the lattice `N = Z^n`.
pub type LatticeVector = Vec<BigInt>;

pub fn lattice(coords: &[i64]) -> LatticeVector {
    coords.iter().map(|&c| BigInt::from(c)).collect()
}
/// Element of `M_Q`, the dual of `N_Q`.
pub type LinearForm = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("polytope is empty")]
    Empty,
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty point list")]
    EmptyInput,
    #[error("half-space normal is zero")]
    ZeroNormal,
    #[error("lattice vector is not primitive")]
    NotPrimitive,
    #[error("polytope does not lie in a single level set of the given vector")]
    NotInLevelSet,
    #[error("lattice-point enumeration exceeds machine range")]
    TooLarge,
}

/// `{m : ⟨m, normal⟩ <= bound}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSpace {
    pub normal: LatticeVector,
    pub bound: Rational,
}

impl HalfSpace {
    pub fn new(normal: LatticeVector, bound: Rational) -> Self {
        Self { normal, bound }
    }

    pub fn contains(&self, m: &[Rational]) -> bool {
        dot_int(&self.normal, m) <= self.bound
    }

    pub fn is_tight(&self, m: &[Rational]) -> bool {
        dot_int(&self.normal, m) == self.bound
    }

    fn as_inequality(&self) -> Inequality {
        Inequality::new(linalg::to_rational(&self.normal), self.bound.clone())
    }
}

#[derive(Debug, Clone)]
pub struct Polytope {
    dim: usize,
    halfspaces: Vec<HalfSpace>,
    /// Skips the recession-cone LPs; set for polytopes whose normals are
    /// known to positively span (complete fans, hulls).
    known_bounded: bool,
    vertices: OnceLock<Result<Vec<LinearForm>, GeometryError>>,
    volume: OnceLock<Rational>,
}

impl PartialEq for Polytope {
    /// Point-set equality via vertex sets.
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices() == other.vertices()
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl Polytope {
    pub fn from_halfspaces(dim: usize, halfspaces: Vec<HalfSpace>) -> Result<Self, GeometryError> {
        for h in &halfspaces {
            if h.normal.len() != dim {
                return Err(GeometryError::DimensionMismatch { expected: dim, found: h.normal.len() });
            }
            if h.normal.iter().all(Zero::is_zero) {
                return Err(GeometryError::ZeroNormal);
            }
        }
        Ok(Self { dim, halfspaces, known_bounded: false, vertices: OnceLock::new(), volume: OnceLock::new() })
    }

    /// H-form whose normals are known to positively span `R^n`.
    pub(crate) fn from_bounded_halfspaces(dim: usize, halfspaces: Vec<HalfSpace>) -> Self {
        Self { dim, halfspaces, known_bounded: true, vertices: OnceLock::new(), volume: OnceLock::new() }
    }

    fn with_vertices(dim: usize, halfspaces: Vec<HalfSpace>, vertices: Vec<LinearForm>) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(Ok(vertices));
        Self { dim, halfspaces, known_bounded: true, vertices: cell, volume: OnceLock::new() }
    }

    fn from_hull(dim: usize, h: HullResult) -> Self {
        let mut halfspaces: Vec<HalfSpace> =
            h.facets.iter().map(|f| HalfSpace::new(f.normal.clone(), f.offset.clone())).collect();
        for e in &h.equalities {
            halfspaces.push(HalfSpace::new(e.normal.clone(), e.offset.clone()));
            halfspaces.push(HalfSpace::new(e.normal.iter().map(|x| -x).collect(), -e.offset.clone()));
        }
        let full = h.dim == dim;
        let p = Self::with_vertices(dim, halfspaces, h.vertices);
        if full {
            let _ = p.volume.set(h.volume);
        } else {
            let _ = p.volume.set(Rational::zero());
        }
        p
    }

    /// Convex hull of a finite nonempty point list.
    pub fn hull(points: &[LinearForm]) -> Result<Self, GeometryError> {
        let first = points.first().ok_or(GeometryError::EmptyInput)?;
        let dim = first.len();
        if let Some(bad) = points.iter().find(|p| p.len() != dim) {
            return Err(GeometryError::DimensionMismatch { expected: dim, found: bad.len() });
        }
        Ok(Self::from_hull(dim, hull::hull(points)))
    }

    pub fn point(coords: LinearForm) -> Self {
        Self::hull(&[coords]).expect("single point")
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    fn recession_is_trivial(&self) -> bool {
        let cons: Vec<Inequality> = self
            .halfspaces
            .iter()
            .map(|h| Inequality::new(linalg::to_rational(&h.normal), Rational::zero()))
            .collect();
        for j in 0..self.dim {
            for sign in [1i64, -1] {
                let mut all = cons.clone();
                let mut unit = vec![Rational::zero(); self.dim];
                unit[j] = rational::int(sign);
                all.push(Inequality::new(unit.clone(), Rational::one()));
                match lp::maximize(&unit, &all).expect("dimensions checked") {
                    LpOutcome::Optimal { value, .. } if value.is_positive() => return false,
                    LpOutcome::Unbounded => return false,
                    _ => {}
                }
            }
        }
        true
    }

    fn enumerate_vertices(&self) -> Result<Vec<LinearForm>, GeometryError> {
        if !self.known_bounded && !self.recession_is_trivial() {
            let feasible = lp::feasible_point(
                self.dim,
                &self.halfspaces.iter().map(HalfSpace::as_inequality).collect::<Vec<_>>(),
            )
            .expect("dimensions checked");
            return match feasible {
                None => Ok(Vec::new()),
                Some(_) => Err(GeometryError::Unbounded),
            };
        }
        let n = self.dim;
        if n == 0 {
            return Ok(vec![Vec::new()]);
        }
        let mut found: BTreeSet<LinearForm> = BTreeSet::new();
        let rows: Vec<Vec<Rational>> = self.halfspaces.iter().map(|h| linalg::to_rational(&h.normal)).collect();
        for subset in subsets(self.halfspaces.len(), n) {
            let a: Vec<Vec<Rational>> = subset.iter().map(|&i| rows[i].clone()).collect();
            let b: Vec<Rational> = subset.iter().map(|&i| self.halfspaces[i].bound.clone()).collect();
            let Some(x) = linalg::solve(&a, &b) else {
                continue;
            };
            if found.contains(&x) {
                continue;
            }
            if self.halfspaces.iter().all(|h| h.contains(&x)) {
                found.insert(x);
            }
        }
        Ok(found.into_iter().collect())
    }

    /// Exact, deduplicated, sorted vertex list; empty iff the polytope is empty.
    pub fn vertices(&self) -> Result<&[LinearForm], GeometryError> {
        self.vertices
            .get_or_init(|| self.enumerate_vertices())
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    pub fn is_empty(&self) -> Result<bool, GeometryError> {
        Ok(self.vertices()?.is_empty())
    }

    fn nonempty_vertices(&self) -> Result<&[LinearForm], GeometryError> {
        let v = self.vertices()?;
        if v.is_empty() {
            Err(GeometryError::Empty)
        } else {
            Ok(v)
        }
    }

    pub fn contains(&self, m: &[Rational]) -> bool {
        self.halfspaces.iter().all(|h| h.contains(m))
    }

    /// Indices of half-spaces that never attain equality on the polytope, or
    /// repeat an earlier half-space.
    pub fn redundant_halfspaces(&self) -> Result<Vec<usize>, GeometryError> {
        let verts = self.vertices()?;
        let mut seen = BTreeSet::new();
        Ok(self
            .halfspaces
            .iter()
            .enumerate()
            .filter(|(_, h)| {
                let dup = !seen.insert((*h).clone());
                dup || !verts.iter().any(|v| h.is_tight(v))
            })
            .map(|(i, _)| i)
            .collect())
    }

    /// Affine dimension, or `None` for the empty polytope.
    pub fn affine_dim(&self) -> Result<Option<usize>, GeometryError> {
        let v = self.vertices()?;
        if v.is_empty() {
            return Ok(None);
        }
        let diffs: Vec<Vec<Rational>> =
            v[1..].iter().map(|p| p.iter().zip(&v[0]).map(|(a, b)| a - b).collect()).collect();
        Ok(Some(linalg::rank(&diffs)))
    }

    /// `max_{m ∈ P} ⟨m, v⟩`.
    pub fn support(&self, v: &[Rational]) -> Result<Rational, GeometryError> {
        let verts = self.nonempty_vertices()?;
        Ok(verts.iter().map(|m| linalg::dot(m, v)).max().unwrap())
    }

    pub fn support_int(&self, v: &[BigInt]) -> Result<Rational, GeometryError> {
        self.support(&linalg::to_rational(v))
    }

    /// Euclidean volume w.r.t. `Z^n`; zero for lower-dimensional polytopes.
    pub fn volume(&self) -> Result<Rational, GeometryError> {
        if let Some(v) = self.volume.get() {
            return Ok(v.clone());
        }
        let verts = self.nonempty_vertices()?;
        let h = hull::hull(verts);
        let vol = if h.dim == self.dim { h.volume } else { Rational::zero() };
        let _ = self.volume.set(vol.clone());
        Ok(vol)
    }

    pub fn scale(&self, k: &Rational) -> Result<Polytope, GeometryError> {
        assert!(k.is_positive(), "scale factor must be positive");
        let verts = self.vertices()?;
        let halfspaces = self.halfspaces.iter().map(|h| HalfSpace::new(h.normal.clone(), &h.bound * k)).collect();
        let scaled = verts.iter().map(|v| v.iter().map(|x| x * k).collect()).collect();
        let p = Self::with_vertices(self.dim, halfspaces, scaled);
        if let Some(vol) = self.volume.get() {
            let _ = p.volume.set(vol * rational::pow(k, self.dim as u32));
        }
        Ok(p)
    }

    pub fn translate(&self, shift: &[Rational]) -> Result<Polytope, GeometryError> {
        let verts = self.vertices()?;
        let halfspaces =
            self.halfspaces.iter().map(|h| HalfSpace::new(h.normal.clone(), &h.bound + dot_int(&h.normal, shift))).collect();
        let moved = verts.iter().map(|v| v.iter().zip(shift).map(|(a, b)| a + b).collect()).collect();
        Ok(Self::with_vertices(self.dim, halfspaces, moved))
    }

    /// Hull of pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope, GeometryError> {
        if self.dim != other.dim {
            return Err(GeometryError::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        let a = self.nonempty_vertices()?;
        let b = other.nonempty_vertices()?;
        Ok(Self::from_hull(self.dim, hull::hull(&pairwise_sums(a, b))))
    }

    /// The face maximizing `⟨·, v⟩`, with the tight constraint added as an
    /// equality pair.
    pub fn face(&self, v: &[BigInt]) -> Result<Polytope, GeometryError> {
        if v.len() != self.dim {
            return Err(GeometryError::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        if v.iter().all(Zero::is_zero) {
            return Err(GeometryError::ZeroNormal);
        }
        let verts = self.nonempty_vertices()?;
        let level = self.support_int(v)?;
        let face_verts: Vec<LinearForm> = verts.iter().filter(|m| dot_int(v, m) == level).cloned().collect();
        let mut halfspaces = self.halfspaces.clone();
        halfspaces.push(HalfSpace::new(v.to_vec(), level.clone()));
        halfspaces.push(HalfSpace::new(v.iter().map(|x| -x).collect(), -level));
        Ok(Self::with_vertices(self.dim, halfspaces, face_verts))
    }

    /// `(n-1)`-dimensional volume of a polytope lying in a level set of the
    /// primitive vector `v`, normalized by the lattice `M ∩ v^⊥`.
    pub fn relative_volume(&self, v: &[BigInt]) -> Result<Rational, GeometryError> {
        if v.len() != self.dim {
            return Err(GeometryError::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        if !linalg::gcd_all(v).is_one() {
            return Err(GeometryError::NotPrimitive);
        }
        let verts = self.nonempty_vertices()?;
        let level = dot_int(v, &verts[0]);
        if verts.iter().any(|m| dot_int(v, m) != level) {
            return Err(GeometryError::NotInLevelSet);
        }
        let n = self.dim;
        if n == 1 {
            return Ok(Rational::one());
        }
        let basis = linalg::unimodular_completion(v).ok_or(GeometryError::NotPrimitive)?;
        // basis holds columns; U^{-1} maps differences to sublattice coordinates.
        let u: Vec<Vec<Rational>> =
            (0..n).map(|i| (0..n).map(|j| Rational::from_integer(basis[j][i].clone())).collect()).collect();
        let inv = linalg::inverse(&u).expect("unimodular");
        let coords: Vec<Vec<Rational>> = verts
            .iter()
            .map(|m| {
                let diff: Vec<Rational> = m.iter().zip(&verts[0]).map(|(a, b)| a - b).collect();
                let y = linalg::mat_vec(&inv, &diff);
                debug_assert!(y[0].is_zero());
                y[1..].to_vec()
            })
            .collect();
        let h = hull::hull(&coords);
        Ok(if h.dim == n - 1 { h.volume } else { Rational::zero() })
    }

    /// Number of points of `Z^n` in the polytope (bounding-box enumeration).
    pub fn lattice_points(&self) -> Result<u64, GeometryError> {
        let verts = self.vertices()?;
        if verts.is_empty() {
            return Ok(0);
        }
        let n = self.dim;
        let mut lo = Vec::with_capacity(n);
        let mut hi = Vec::with_capacity(n);
        for j in 0..n {
            let min = verts.iter().map(|v| &v[j]).min().unwrap();
            let max = verts.iter().map(|v| &v[j]).max().unwrap();
            lo.push(rational::ceil(min).to_i64().ok_or(GeometryError::TooLarge)?);
            hi.push(rational::floor(max).to_i64().ok_or(GeometryError::TooLarge)?);
        }
        if (0..n).any(|j| lo[j] > hi[j]) {
            return Ok(0);
        }
        let mut checks: Vec<(Vec<i128>, i128)> = Vec::with_capacity(self.halfspaces.len());
        for h in &self.halfspaces {
            let normal: Option<Vec<i128>> = h.normal.iter().map(|x| x.to_i128()).collect();
            let bound = rational::floor(&h.bound).to_i128();
            match (normal, bound) {
                (Some(a), Some(b)) => checks.push((a, b)),
                _ => return Err(GeometryError::TooLarge),
            }
        }
        let mut count = 0u64;
        let mut x = lo.clone();
        loop {
            if checks
                .iter()
                .all(|(a, b)| a.iter().zip(&x).map(|(ai, xi)| ai * (*xi as i128)).sum::<i128>() <= *b)
            {
                count += 1;
            }
            let mut j = 0;
            loop {
                if j == n {
                    return Ok(count);
                }
                if x[j] < hi[j] {
                    x[j] += 1;
                    break;
                }
                x[j] = lo[j];
                j += 1;
            }
        }
    }
}

pub(crate) fn pairwise_sums(a: &[LinearForm], b: &[LinearForm]) -> Vec<LinearForm> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for p in a {
        for q in b {
            out.push(p.iter().zip(q).map(|(x, y)| x + y).collect());
        }
    }
    out
}

/// Vertices of `Σ coeff_i · P_i`, folding one summand at a time.
pub(crate) fn minkowski_combination(terms: &[(Rational, &Polytope)]) -> Result<Vec<LinearForm>, GeometryError> {
    let mut acc: Option<Vec<LinearForm>> = None;
    for (k, p) in terms {
        let verts = p.nonempty_vertices()?;
        let scaled: Vec<LinearForm> = verts.iter().map(|v| v.iter().map(|x| x * k).collect()).collect();
        acc = Some(match acc {
            None => scaled,
            Some(prev) => hull::hull(&pairwise_sums(&prev, &scaled)).vertices,
        });
    }
    acc.ok_or(GeometryError::EmptyInput)
}

/// Euclidean volume of `conv(points)` in the ambient dimension.
pub(crate) fn volume_of_points(points: &[LinearForm]) -> Rational {
    let h = hull::hull(points);
    if h.dim == points[0].len() {
        h.volume
    } else {
        Rational::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn hs(normal: &[i64], bound: i64) -> HalfSpace {
        HalfSpace::new(normal.iter().map(|&x| BigInt::from(x)).collect(), int(bound))
    }

    fn pt(c: &[i64]) -> LinearForm {
        c.iter().map(|&x| int(x)).collect()
    }

    fn lv(c: &[i64]) -> LatticeVector {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn triangle() -> Polytope {
        Polytope::from_halfspaces(2, vec![hs(&[1, 0], 1), hs(&[0, 1], 0), hs(&[-1, -1], 0)]).unwrap()
    }

    #[test]
    fn subsets_enumerate() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(subsets(2, 3).len(), 0);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn triangle_vertices() {
        assert_eq!(triangle().vertices().unwrap(), &[pt(&[0, 0]), pt(&[1, -1]), pt(&[1, 0])]);
    }

    #[test]
    fn point_from_four_halfspaces() {
        let p = Polytope::from_halfspaces(2, vec![hs(&[1, 0], 0), hs(&[-1, 0], 0), hs(&[0, 1], 0), hs(&[0, -1], 0)])
            .unwrap();
        assert_eq!(p.vertices().unwrap(), &[pt(&[0, 0])]);
        assert_eq!(p.volume().unwrap(), int(0));
    }

    #[test]
    fn second_triangle_vertices() {
        let p = Polytope::from_halfspaces(2, vec![hs(&[1, 0], 1), hs(&[0, 1], 1), hs(&[-1, -1], 0)]).unwrap();
        assert_eq!(p.vertices().unwrap(), &[pt(&[-1, 1]), pt(&[1, -1]), pt(&[1, 1])]);
    }

    #[test]
    fn unbounded_rejected_and_empty_reported() {
        let p = Polytope::from_halfspaces(2, vec![hs(&[0, 1], 0)]).unwrap();
        assert_eq!(p.vertices().unwrap_err(), GeometryError::Unbounded);
        let e = Polytope::from_halfspaces(2, vec![hs(&[-1, -1], 0), hs(&[1, 1], -1), hs(&[1, 0], 0)]).unwrap();
        assert!(e.is_empty().unwrap());
        assert_eq!(e.volume().unwrap_err(), GeometryError::Empty);
        assert_eq!(e.lattice_points().unwrap(), 0);
    }

    #[test]
    fn hull_recovers_triangle_facets() {
        let p = Polytope::hull(&[pt(&[0, 0]), pt(&[1, 0]), pt(&[1, -1])]).unwrap();
        let mut got: Vec<HalfSpace> = p.halfspaces().to_vec();
        got.sort();
        let mut want = vec![hs(&[1, 0], 1), hs(&[0, 1], 0), hs(&[-1, -1], 0)];
        want.sort();
        assert_eq!(got, want);
        let seg = Polytope::hull(&[pt(&[0, 0]), pt(&[2, 0]), pt(&[1, 0])]).unwrap();
        assert_eq!(seg.vertices().unwrap(), &[pt(&[0, 0]), pt(&[2, 0])]);
        let origin = Polytope::hull(&[pt(&[0, 0])]).unwrap();
        assert_eq!(origin.vertices().unwrap(), &[pt(&[0, 0])]);
        assert_eq!(Polytope::hull(&[]).unwrap_err(), GeometryError::EmptyInput);
    }

    #[test]
    fn volumes() {
        assert_eq!(triangle().volume().unwrap(), rat(1, 2));
        let quad = Polytope::hull(&[pt(&[0, 0]), pt(&[1, 0]), pt(&[2, -1]), pt(&[2, -2])]).unwrap();
        assert_eq!(quad.volume().unwrap(), rat(3, 2));
        assert_eq!(Polytope::point(pt(&[3, 4])).volume().unwrap(), int(0));
    }

    #[test]
    fn minkowski_examples() {
        let square = Polytope::hull(&[pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1]), pt(&[1, 1])]).unwrap();
        let seg = Polytope::hull(&[pt(&[0, 0]), pt(&[1, 0])]).unwrap();
        let sum = square.minkowski_sum(&seg).unwrap();
        assert_eq!(sum.vertices().unwrap(), &[pt(&[0, 0]), pt(&[0, 1]), pt(&[2, 0]), pt(&[2, 1])]);
        let shifted = triangle().minkowski_sum(&Polytope::point(pt(&[2, 3]))).unwrap();
        assert_eq!(shifted, triangle().translate(&pt(&[2, 3])).unwrap());
        let doubled = triangle().minkowski_sum(&triangle()).unwrap();
        assert_eq!(doubled.volume().unwrap(), int(4) * triangle().volume().unwrap());
        let three = Polytope::from_halfspaces(3, vec![hs(&[1, 0, 0], 0)]).unwrap();
        assert!(matches!(triangle().minkowski_sum(&three), Err(GeometryError::DimensionMismatch { .. })));
    }

    #[test]
    fn faces() {
        let f = triangle().face(&lv(&[0, 1])).unwrap();
        assert_eq!(f.vertices().unwrap(), &[pt(&[0, 0]), pt(&[1, 0])]);
        let v = triangle().face(&lv(&[1, 1])).unwrap();
        assert_eq!(v.vertices().unwrap(), &[pt(&[1, 0])]);
        assert!(f.contains(&pt(&[0, 0])));
    }

    #[test]
    fn relative_volumes() {
        let seg = triangle().face(&lv(&[0, 1])).unwrap();
        assert_eq!(seg.relative_volume(&lv(&[0, 1])).unwrap(), int(1));
        let vertex = triangle().face(&lv(&[1, 1])).unwrap();
        assert_eq!(vertex.relative_volume(&lv(&[1, 1])).unwrap(), int(0));
        let diag = Polytope::hull(&[pt(&[1, 0]), pt(&[2, -1])]).unwrap();
        assert_eq!(diag.relative_volume(&lv(&[1, 1])).unwrap(), int(1));
        assert_eq!(diag.relative_volume(&lv(&[2, 2])).unwrap_err(), GeometryError::NotPrimitive);
        assert_eq!(diag.relative_volume(&lv(&[1, 0])).unwrap_err(), GeometryError::NotInLevelSet);
    }

    #[test]
    fn lattice_counts() {
        assert_eq!(triangle().lattice_points().unwrap(), 3);
        assert_eq!(triangle().scale(&int(2)).unwrap().lattice_points().unwrap(), 6);
        assert_eq!(Polytope::point(pt(&[1, 2])).lattice_points().unwrap(), 1);
    }

    #[test]
    fn redundant_flagged() {
        let p = Polytope::from_halfspaces(
            2,
            vec![hs(&[1, 0], 1), hs(&[0, 1], 0), hs(&[-1, -1], 0), hs(&[1, 1], 5), hs(&[1, 0], 1)],
        )
        .unwrap();
        assert_eq!(p.redundant_halfspaces().unwrap(), vec![3, 4]);
    }
}
