//! Exact beneath-beyond convex hull over integer-scaled coordinates.
//!
//! Facets are kept as simplices (a triangulated boundary); coplanar simplices
//! are merged only when the distinct supporting hyperplanes are extracted.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg::{self, cross_int, det_int, dot_ints, primitive_int, Matrix};
use crate::rational::{common_denominator, factorial, Rational};

/// Supporting hyperplane `⟨normal, m⟩ = offset` in ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Hyperplane {
    pub normal: Vec<BigInt>,
    pub offset: Rational,
}

#[derive(Debug, Clone)]
pub(crate) struct HullResult {
    /// Affine dimension of the point set.
    pub dim: usize,
    /// Extreme points, sorted.
    pub vertices: Vec<Vec<Rational>>,
    /// Facet inequalities `⟨normal, m⟩ <= offset`, valid on the affine hull.
    pub facets: Vec<Hyperplane>,
    /// Affine hull equations `⟨normal, m⟩ = offset`.
    pub equalities: Vec<Hyperplane>,
    /// `dim`-dimensional volume measured in the coordinate projection used
    /// internally; equals the Euclidean volume when `dim` is the ambient
    /// dimension.
    pub volume: Rational,
}

struct SimplexFacet {
    verts: Vec<usize>,
    normal: Vec<BigInt>,
    offset: BigInt,
}

fn orient(
    verts: Vec<usize>,
    pts: &[Vec<BigInt>],
    interior_sum: &[BigInt],
    count: usize,
) -> SimplexFacet {
    let d = pts[0].len();
    let base = &pts[verts[0]];
    let diffs: Vec<Vec<BigInt>> = verts[1..]
        .iter()
        .map(|&v| pts[v].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    let mut normal = cross_int(&diffs, d);
    let mut offset = dot_ints(&normal, base);
    let probe = dot_ints(&normal, interior_sum);
    if probe > &offset * BigInt::from(count) {
        normal.iter_mut().for_each(|x| *x = -x.clone());
        offset = -offset;
    }
    SimplexFacet { verts, normal, offset }
}

/// Hull of a full-dimensional integer point set in `Z^d`, `d >= 1`. `simplex`
/// indexes `d + 1` affinely independent points.
fn beneath_beyond(pts: &[Vec<BigInt>], simplex: &[usize]) -> Vec<SimplexFacet> {
    let d = pts[0].len();
    let mut interior_sum = vec![BigInt::zero(); d];
    for &s in simplex {
        for (acc, x) in interior_sum.iter_mut().zip(&pts[s]) {
            *acc += x;
        }
    }
    let count = simplex.len();
    let mut facets: Vec<SimplexFacet> = (0..simplex.len())
        .map(|skip| {
            let verts: Vec<usize> = simplex.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &v)| v).collect();
            orient(verts, pts, &interior_sum, count)
        })
        .collect();
    let in_simplex: BTreeSet<usize> = simplex.iter().copied().collect();
    for q in 0..pts.len() {
        if in_simplex.contains(&q) {
            continue;
        }
        let visible: Vec<bool> = facets.iter().map(|f| dot_ints(&f.normal, &pts[q]) > f.offset).collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for (f, _) in facets.iter().zip(&visible).filter(|(_, &v)| v) {
            for skip in 0..f.verts.len() {
                let mut ridge: Vec<usize> = f.verts.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &v)| v).collect();
                ridge.sort_unstable();
                *ridges.entry(ridge).or_insert(0) += 1;
            }
        }
        let mut kept: Vec<SimplexFacet> = facets.into_iter().zip(visible).filter(|(_, v)| !v).map(|(f, _)| f).collect();
        let mut horizon: Vec<Vec<usize>> = ridges.into_iter().filter(|(_, c)| *c == 1).map(|(r, _)| r).collect();
        horizon.sort();
        for mut ridge in horizon {
            ridge.push(q);
            kept.push(orient(ridge, pts, &interior_sum, count));
        }
        facets = kept;
    }
    facets
}

fn normalize(normal: &[BigInt], offset: &BigInt) -> (Vec<BigInt>, BigInt, BigInt) {
    let g = linalg::gcd_all(normal);
    (primitive_int(normal), offset.clone(), g)
}

pub(crate) fn hull(points: &[Vec<Rational>]) -> HullResult {
    assert!(!points.is_empty(), "hull of an empty point set");
    let n = points[0].len();
    let mut uniq: Vec<Vec<Rational>> = points.to_vec();
    uniq.sort();
    uniq.dedup();
    let den = common_denominator(uniq.iter().flatten());
    let den_r = Rational::from_integer(den.clone());
    let scaled: Vec<Vec<BigInt>> = uniq
        .iter()
        .map(|p| p.iter().map(|x| (x * &den_r).to_integer()).collect())
        .collect();

    // Greedy affinely independent subset, in input order.
    let mut echelon: Matrix = Vec::new();
    let mut simplex = vec![0usize];
    for i in 1..scaled.len() {
        let diff: Vec<Rational> = scaled[i]
            .iter()
            .zip(&scaled[0])
            .map(|(a, b)| Rational::from_integer(a - b))
            .collect();
        let mut trial = echelon.clone();
        trial.push(diff);
        if linalg::rank(&trial) == trial.len() {
            echelon = trial;
            simplex.push(i);
            if echelon.len() == n {
                break;
            }
        }
    }
    let d = echelon.len();
    let mut reduced = echelon.clone();
    let pivots = linalg::rref(&mut reduced);

    let equalities: Vec<Hyperplane> = linalg::nullspace(&echelon, n)
        .into_iter()
        .map(|c| {
            let normal = linalg::primitive(&c);
            let offset = linalg::dot_int(&normal, &uniq[0]);
            Hyperplane { normal, offset }
        })
        .collect();

    if d == 0 {
        return HullResult { dim: 0, vertices: uniq, facets: Vec::new(), equalities, volume: Rational::zero() };
    }

    let projected: Vec<Vec<BigInt>> = scaled.iter().map(|p| pivots.iter().map(|&j| p[j].clone()).collect()).collect();
    let simplices = beneath_beyond(&projected, &simplex);

    let apex = &projected[simplex[0]];
    let mut total = BigInt::zero();
    for f in &simplices {
        let m: Vec<Vec<BigInt>> = f
            .verts
            .iter()
            .map(|&v| projected[v].iter().zip(apex).map(|(a, b)| a - b).collect())
            .collect();
        total += det_int(&m).abs();
    }
    let volume = Rational::new(total, factorial(d) * num_traits::pow(den.clone(), d));

    let mut planes: BTreeSet<(Vec<BigInt>, Rational)> = BTreeSet::new();
    for f in &simplices {
        let (normal, offset, g) = normalize(&f.normal, &f.offset);
        planes.insert((normal, Rational::new(offset, g)));
    }
    let plane_list: Vec<(Vec<BigInt>, Rational)> = planes.into_iter().collect();

    let used: BTreeSet<usize> = simplices.iter().flat_map(|f| f.verts.iter().copied()).collect();
    let mut vertices = Vec::new();
    for &i in &used {
        let q: Vec<Rational> = projected[i].iter().cloned().map(Rational::from_integer).collect();
        let tight: Vec<Vec<BigInt>> = plane_list
            .iter()
            .filter(|(a, b)| linalg::dot_int(a, &q) == *b)
            .map(|(a, _)| a.clone())
            .collect();
        if linalg::rank_int(&tight) == d {
            vertices.push(uniq[i].clone());
        }
    }
    vertices.sort();

    let facets = plane_list
        .into_iter()
        .map(|(a, b)| {
            let mut normal = vec![BigInt::zero(); n];
            for (k, &j) in pivots.iter().enumerate() {
                normal[j] = a[k].clone();
            }
            Hyperplane { normal, offset: b / &den_r }
        })
        .collect();

    HullResult { dim: d, vertices, facets, equalities, volume }
}
