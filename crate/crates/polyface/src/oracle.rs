//! Geometric cross-check: recompute the low-dimensional face counts from
//! vertex coordinates alone, in exact integer arithmetic.
//!
//! The polytopes live on the 0/1 lattice, so faces can be computed without
//! any floating point: a face is recovered as the set of vertices tight on
//! a common set of inequalities, and dimensions come from integer Gaussian
//! elimination. Nothing in here knows about filters or antichains beyond
//! using them as vertex coordinates — which is what makes it an
//! independent check of the combinatorial census.

use crate::census::FVector2;
use crate::poset::Poset;
use crate::set::all_subsets;
use std::collections::BTreeSet;
use thiserror::Error;

/// A point with integer coordinates; vertices here are always 0/1.
pub type LatticePoint = Vec<i64>;

/// One inequality `coeffs · x <= bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub coeffs: Vec<i64>,
    pub bound: i64,
}

impl Inequality {
    fn eval(&self, pt: &[i64]) -> i64 {
        self.coeffs.iter().zip(pt).map(|(c, x)| c * x).sum()
    }

    pub fn satisfied_by(&self, pt: &[i64]) -> bool {
        self.eval(pt) <= self.bound
    }

    pub fn tight_at(&self, pt: &[i64]) -> bool {
        self.eval(pt) == self.bound
    }
}

/// An inequality description of a polytope in `R^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetSystem {
    pub dim: usize,
    pub inequalities: Vec<Inequality>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("point {index} violates inequality {inequality}")]
    PointOutsideSystem { index: usize, inequality: usize },
    #[error("no points given")]
    NoPoints,
    #[error("a two-dimensional face has {0} vertices; a 0/1 polygon can have at most four")]
    PolygonTooBig(usize),
    #[error("the face is not a square")]
    NotASquare,
    #[error("0/1 point {0:?} satisfies every inequality but is not a listed vertex")]
    MissingVertex(Vec<i64>),
    #[error("listed point {index} has tight-set rank {rank}, expected {dim}")]
    NotAVertex { index: usize, rank: usize, dim: usize },
    #[error("a one-dimensional face has {0} vertices, expected two")]
    BadEdge(usize),
}

// ---------------------------------------------------------------------------
// Systems and vertices

/// Inequalities of the order polytope: `0 <= x_p` at minimal elements,
/// `x_q <= 1` at maximal elements, and `x_p <= x_q` along covers.
pub fn order_facets(p: &Poset) -> FacetSystem {
    let n = p.n();
    let mut inequalities = Vec::new();
    let unit = |i: usize, sign: i64| {
        let mut coeffs = vec![0i64; n];
        coeffs[i] = sign;
        coeffs
    };
    for i in p.minimals().iter() {
        inequalities.push(Inequality { coeffs: unit(i, -1), bound: 0 });
    }
    for i in p.maximals().iter() {
        inequalities.push(Inequality { coeffs: unit(i, 1), bound: 1 });
    }
    for (lo, hi) in p.covers() {
        let mut coeffs = vec![0i64; n];
        coeffs[lo] = 1;
        coeffs[hi] = -1;
        inequalities.push(Inequality { coeffs, bound: 0 });
    }
    FacetSystem { dim: n, inequalities }
}

/// Inequalities of the chain polytope: `0 <= x_p` everywhere and a unit
/// sum bound along every maximal chain.
pub fn chain_facets(p: &Poset) -> FacetSystem {
    let n = p.n();
    let mut inequalities = Vec::new();
    for i in 0..n {
        let mut coeffs = vec![0i64; n];
        coeffs[i] = -1;
        inequalities.push(Inequality { coeffs, bound: 0 });
    }
    for chain in p.maximal_chains() {
        let mut coeffs = vec![0i64; n];
        for i in chain {
            coeffs[i] = 1;
        }
        inequalities.push(Inequality { coeffs, bound: 1 });
    }
    FacetSystem { dim: n, inequalities }
}

fn indicator(n: usize, s: crate::set::ElementSet) -> LatticePoint {
    (0..n).map(|i| i64::from(s.contains(i))).collect()
}

/// Indicator vectors of all filters, in the same order as
/// [`Poset::filters`].
pub fn order_vertices(p: &Poset) -> Vec<LatticePoint> {
    p.filters().into_iter().map(|f| indicator(p.n(), f)).collect()
}

/// Indicator vectors of all antichains, in the same order as
/// [`Poset::antichains`].
pub fn chain_vertices(p: &Poset) -> Vec<LatticePoint> {
    p.antichains().into_iter().map(|a| indicator(p.n(), a)).collect()
}

/// Full audit of a claimed vertex list: every point satisfies the system,
/// every point is a genuine vertex (its tight inequalities span full rank),
/// and no other 0/1 point satisfies the system. The last check walks all
/// `2^dim` lattice points, so this is for small dimensions only.
pub fn verify_vertices(sys: &FacetSystem, vertices: &[LatticePoint]) -> Result<(), OracleError> {
    assert!(sys.dim <= 20, "exhaustive 0/1 check needs 2^{} points", sys.dim);
    for (index, v) in vertices.iter().enumerate() {
        for (inequality, ineq) in sys.inequalities.iter().enumerate() {
            if !ineq.satisfied_by(v) {
                return Err(OracleError::PointOutsideSystem { index, inequality });
            }
        }
        let tight_rows: Vec<Vec<i128>> = sys
            .inequalities
            .iter()
            .filter(|ineq| ineq.tight_at(v))
            .map(|ineq| ineq.coeffs.iter().map(|&c| c as i128).collect())
            .collect();
        let rank = int_rank(tight_rows);
        if rank != sys.dim {
            return Err(OracleError::NotAVertex { index, rank, dim: sys.dim });
        }
    }
    let known: BTreeSet<&LatticePoint> = vertices.iter().collect();
    for s in all_subsets(sys.dim) {
        let pt = indicator(sys.dim, s);
        if sys.inequalities.iter().all(|ineq| ineq.satisfied_by(&pt)) && !known.contains(&pt) {
            return Err(OracleError::MissingVertex(pt));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Exact linear algebra

/// Rank of an integer matrix, by fraction-free elimination. Rows are
/// divided by their gcd after each step to keep entries small.
fn int_rank(mut rows: Vec<Vec<i128>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let (fixed, rest) = rows.split_at_mut(rank + 1);
        let pivot_line = &fixed[rank];
        let pivot = pivot_line[col];
        for row in rest.iter_mut() {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for (cell, &p) in row.iter_mut().zip(pivot_line) {
                *cell = *cell * pivot - p * factor;
            }
            reduce_row(row);
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn reduce_row(row: &mut [i128]) {
    let mut g: i128 = 0;
    for &v in row.iter() {
        g = gcd(g, v.abs());
        if g == 1 {
            return;
        }
    }
    if g > 1 {
        for v in row.iter_mut() {
            *v /= g;
        }
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Dimension of the affine hull of the points: the rank of the differences
/// against the first point.
pub fn affine_dim(pts: &[&LatticePoint]) -> Result<usize, OracleError> {
    let first = pts.first().ok_or(OracleError::NoPoints)?;
    let rows: Vec<Vec<i128>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(first.iter()).map(|(&a, &b)| (a - b) as i128).collect())
        .collect();
    Ok(int_rank(rows))
}

// ---------------------------------------------------------------------------
// Faces from tight sets

/// Indices of the inequalities tight at every one of the given points.
/// Errors if a point lies outside the system.
pub fn tight_set(sys: &FacetSystem, pts: &[&LatticePoint]) -> Result<Vec<usize>, OracleError> {
    for (index, pt) in pts.iter().enumerate() {
        if let Some(inequality) = sys.inequalities.iter().position(|i| !i.satisfied_by(pt)) {
            return Err(OracleError::PointOutsideSystem { index, inequality });
        }
    }
    Ok((0..sys.inequalities.len())
        .filter(|&i| pts.iter().all(|pt| sys.inequalities[i].tight_at(pt)))
        .collect())
}

/// The smallest face containing the seed vertices, as vertex indices: take
/// the inequalities tight on the whole seed, then collect every vertex
/// tight on all of them.
pub fn face_closure(
    sys: &FacetSystem,
    vertices: &[LatticePoint],
    seed: &[usize],
) -> Result<Vec<usize>, OracleError> {
    let seed_pts: Vec<&LatticePoint> = seed.iter().map(|&i| &vertices[i]).collect();
    let tight = tight_set(sys, &seed_pts)?;
    Ok((0..vertices.len())
        .filter(|&v| tight.iter().all(|&i| sys.inequalities[i].tight_at(&vertices[v])))
        .collect())
}

/// A face reported by the oracle: its vertices (as indices into the vertex
/// list), affine dimension, and defining tight inequalities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceRecord {
    pub vertex_ids: Vec<usize>,
    pub dim: usize,
    pub tight: Vec<usize>,
}

/// All proper two-dimensional faces, found by closing every vertex pair
/// and triple. Any polygon has three affinely independent vertices, so
/// seeding triples finds every 2-face; the whole polytope is excluded
/// (a proper face never contains all vertices).
pub fn two_faces(
    sys: &FacetSystem,
    vertices: &[LatticePoint],
) -> Result<Vec<FaceRecord>, OracleError> {
    let m = vertices.len();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut seeds: Vec<Vec<usize>> = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            seeds.push(vec![i, j]);
            for k in (j + 1)..m {
                seeds.push(vec![i, j, k]);
            }
        }
    }
    let mut out = Vec::new();
    for seed in seeds {
        let closure = face_closure(sys, vertices, &seed)?;
        if closure.len() == m || closure.len() < 3 || seen.contains(&closure) {
            continue;
        }
        let pts: Vec<&LatticePoint> = closure.iter().map(|&i| &vertices[i]).collect();
        if affine_dim(&pts)? != 2 {
            continue;
        }
        if closure.len() > 4 {
            return Err(OracleError::PolygonTooBig(closure.len()));
        }
        let tight = tight_set(sys, &pts)?;
        seen.insert(closure.clone());
        out.push(FaceRecord { vertex_ids: closure, dim: 2, tight });
    }
    out.sort_by(|a, b| a.vertex_ids.cmp(&b.vertex_ids));
    Ok(out)
}

/// Vertex, edge, triangle, and square counts straight from the geometry.
/// Only proper faces count, so the whole polytope is excluded at every
/// dimension.
pub fn f_vector_low(
    sys: &FacetSystem,
    vertices: &[LatticePoint],
) -> Result<FVector2, OracleError> {
    let m = vertices.len();
    let mut edges: BTreeSet<Vec<usize>> = BTreeSet::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let closure = face_closure(sys, vertices, &[i, j])?;
            if closure.len() == m {
                continue;
            }
            let pts: Vec<&LatticePoint> = closure.iter().map(|&i| &vertices[i]).collect();
            if affine_dim(&pts)? == 1 {
                if closure.len() != 2 {
                    return Err(OracleError::BadEdge(closure.len()));
                }
                edges.insert(closure);
            }
        }
    }
    let faces = two_faces(sys, vertices)?;
    let f2_tri = faces.iter().filter(|f| f.vertex_ids.len() == 3).count();
    let f2_sq = faces.iter().filter(|f| f.vertex_ids.len() == 4).count();
    Ok(FVector2 { f0: m, f1: edges.len(), f2_tri, f2_sq })
}

// ---------------------------------------------------------------------------
// Structural checks on faces

/// For a square face, finds its two diagonals (the vertex pairs whose
/// closure is the whole square) and checks the 0/1 square identities: the
/// diagonals partition the four vertices, opposite pairs sum to the same
/// point coordinate-wise, and every coordinate is set in an even number of
/// the four vertices.
pub fn check_square_diagonals(
    sys: &FacetSystem,
    vertices: &[LatticePoint],
    face: &FaceRecord,
) -> Result<bool, OracleError> {
    if face.vertex_ids.len() != 4 || face.dim != 2 {
        return Err(OracleError::NotASquare);
    }
    let ids = &face.vertex_ids;
    let mut diagonals = Vec::new();
    for a in 0..4 {
        for b in (a + 1)..4 {
            let closure = face_closure(sys, vertices, &[ids[a], ids[b]])?;
            if closure == *ids {
                diagonals.push((a, b));
            }
        }
    }
    let [(a, b), (c, d)] = diagonals[..] else {
        return Ok(false); // a square has exactly two diagonals
    };
    if [a, b, c, d].iter().collect::<BTreeSet<_>>().len() != 4 {
        return Ok(false);
    }
    let pt = |i: usize| &vertices[ids[i]];
    let sums_match = pt(a)
        .iter()
        .zip(pt(b))
        .zip(pt(c).iter().zip(pt(d)))
        .all(|((xa, xb), (xc, xd))| xa + xb == xc + xd);
    let parity_ok = (0..sys.dim).all(|coord| {
        let count: i64 = (0..4).map(|i| pt(i)[coord]).sum();
        count % 2 == 0
    });
    Ok(sums_match && parity_ok)
}

/// Drops coordinates one by one as long as the affine dimension survives,
/// returning the projected points and the kept coordinate indices. The
/// result has as many coordinates as its affine dimension, and the
/// projection stays injective on the input.
pub fn project_to_full_dim(pts: &[LatticePoint]) -> Result<(Vec<LatticePoint>, Vec<usize>), OracleError> {
    let target = affine_dim(&pts.iter().collect::<Vec<_>>())?;
    let width = pts[0].len();
    let mut kept: Vec<usize> = (0..width).collect();
    for coord in 0..width {
        if kept.len() == target {
            break;
        }
        let trial: Vec<usize> = kept.iter().copied().filter(|&c| c != coord).collect();
        let projected: Vec<LatticePoint> = pts
            .iter()
            .map(|p| trial.iter().map(|&c| p[c]).collect())
            .collect();
        let refs: Vec<&LatticePoint> = projected.iter().collect();
        if affine_dim(&refs)? == target {
            kept = trial;
        }
    }
    let projected = pts
        .iter()
        .map(|p| kept.iter().map(|&c| p[c]).collect())
        .collect();
    Ok((projected, kept))
}

/// How many inequalities of the system define actual facets (faces of
/// dimension one less than the polytope), and which ones do not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetInfo {
    pub facet_count: usize,
    /// Indices of inequalities whose tight vertex set has too small a
    /// dimension; expected to be empty for both polytope systems.
    pub non_facets: Vec<usize>,
}

pub fn facet_info(sys: &FacetSystem, vertices: &[LatticePoint]) -> Result<FacetInfo, OracleError> {
    let all: Vec<&LatticePoint> = vertices.iter().collect();
    let polytope_dim = affine_dim(&all)?;
    let mut facet_count = 0;
    let mut non_facets = Vec::new();
    for (i, ineq) in sys.inequalities.iter().enumerate() {
        let tight: Vec<&LatticePoint> = vertices.iter().filter(|v| ineq.tight_at(v)).collect();
        let is_facet = !tight.is_empty() && affine_dim(&tight)? + 1 == polytope_dim;
        if is_facet {
            facet_count += 1;
        } else {
            non_facets.push(i);
        }
    }
    Ok(FacetInfo { facet_count, non_facets })
}
