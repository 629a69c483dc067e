//! Combinatorial census of the faces of dimension at most two.
//!
//! Everything here works purely on filters and antichains; no coordinates
//! are involved. Faces are always *proper* faces: a poset on one or two
//! elements yields a polytope of dimension one or two, and candidates that
//! would be the whole polytope are excluded, matching the geometric count.

use crate::poset::Poset;
use crate::set::ElementSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Polytope {
    #[serde(rename = "O")]
    Order,
    #[serde(rename = "C")]
    Chain,
}

/// Face counts up to dimension two.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FVector2 {
    pub f0: usize,
    pub f1: usize,
    pub f2_tri: usize,
    pub f2_sq: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CensusError {
    #[error("the poset is not connected")]
    NotConnected,
    #[error("{trace:?} is not a subset of the {which} elements")]
    InvalidBoundaryTrace { which: &'static str, trace: ElementSet },
    #[error("element {0} is extremal; the recursion needs an interior element")]
    ExtremalElement(usize),
    #[error("element {0} is outside the ground set")]
    ElementOutOfRange(usize),
    #[error("the interior element and the boundary traces must be pairwise incomparable")]
    NotParallel,
    #[error("{0:?}, {1:?}, {2:?} do not form a triangle face")]
    NotATriangle(ElementSet, ElementSet, ElementSet),
}

/// Membership test for connectivity, table-backed on small ground sets.
fn connectivity_oracle<'a>(p: &'a Poset) -> Box<dyn Fn(ElementSet) -> bool + 'a> {
    if p.n() <= 16 {
        let table = p.connectivity_table();
        Box::new(move |s: ElementSet| table[s.mask() as usize])
    } else {
        Box::new(move |s: ElementSet| p.is_connected(s))
    }
}

// ---------------------------------------------------------------------------
// Edges

/// Edges of the order polytope: pairs of nested filters `F ⊂ G` whose
/// difference is connected. Pairs are listed in ascending `(F, G)` order.
pub fn order_edges(p: &Poset) -> Vec<(ElementSet, ElementSet)> {
    if p.n() <= 1 {
        return Vec::new(); // a segment has no proper edges
    }
    let conn = connectivity_oracle(p);
    let filters = p.filters();
    let mut out = Vec::new();
    for (i, &f) in filters.iter().enumerate() {
        for &g in &filters[i + 1..] {
            if f.is_subset(g) && conn(g - f) {
                out.push((f, g));
            }
        }
    }
    out
}

/// Edges of the chain polytope: pairs of distinct antichains whose
/// symmetric difference is connected, in ascending `(A, B)` order.
pub fn chain_edges(p: &Poset) -> Vec<(ElementSet, ElementSet)> {
    if p.n() <= 1 {
        return Vec::new();
    }
    let conn = connectivity_oracle(p);
    let antichains = p.antichains();
    let mut out = Vec::new();
    for (i, &a) in antichains.iter().enumerate() {
        for &b in &antichains[i + 1..] {
            if conn(a ^ b) {
                out.push((a, b));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Triangles

/// Triangles of the order polytope: chains of filters `F ⊂ G ⊂ H` with all
/// three pairwise differences connected. Ascending `(F, G, H)` order.
pub fn order_triangles(p: &Poset) -> Vec<[ElementSet; 3]> {
    if p.n() <= 2 {
        return Vec::new(); // any candidate would be the whole polytope
    }
    let conn = connectivity_oracle(p);
    let filters = p.filters();
    let m = filters.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let (f, g) = (filters[i], filters[j]);
            if !f.is_subset(g) || !conn(g - f) {
                continue;
            }
            for &h in &filters[j + 1..] {
                if g.is_subset(h) && conn(h - g) && conn(h - f) {
                    out.push([f, g, h]);
                }
            }
        }
    }
    out
}

/// Triangles of the chain polytope: unordered triples of antichains with
/// pairwise connected symmetric differences. Each triple is reported in its
/// normalised orientation (see [`normalize_chain_triangle`]) and the list
/// is sorted by that orientation.
pub fn chain_triangles(p: &Poset) -> Vec<[ElementSet; 3]> {
    if p.n() <= 2 {
        return Vec::new();
    }
    let conn = connectivity_oracle(p);
    let antichains = p.antichains();
    let m = antichains.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let (a, b) = (antichains[i], antichains[j]);
            if !conn(a ^ b) {
                continue;
            }
            for &c in &antichains[j + 1..] {
                if conn(b ^ c) && conn(a ^ c) {
                    out.push(orient_triangle(p, [a, b, c]));
                }
            }
        }
    }
    out.sort();
    out
}

/// Reorders the three antichains of a triangle so that the first is the
/// minimal layer of their union and the last is the maximal layer. Exactly
/// one such orientation exists for a genuine triangle.
pub fn normalize_chain_triangle(
    p: &Poset,
    triple: [ElementSet; 3],
) -> Result<[ElementSet; 3], CensusError> {
    let [a, b, c] = triple;
    let distinct = a != b && b != c && a != c;
    let antichains = triple.iter().all(|&s| p.is_antichain(s));
    let connected =
        p.is_connected(a ^ b) && p.is_connected(b ^ c) && p.is_connected(a ^ c);
    if !(distinct && antichains && connected) {
        return Err(CensusError::NotATriangle(a, b, c));
    }
    Ok(orient_triangle(p, triple))
}

fn orient_triangle(p: &Poset, triple: [ElementSet; 3]) -> [ElementSet; 3] {
    let union = triple[0] | triple[1] | triple[2];
    let bottom = p.min_of(union);
    let top = p.max_of(union);
    let first = triple.iter().position(|&s| s == bottom);
    let last = triple.iter().position(|&s| s == top);
    let (Some(first), Some(last)) = (first, last) else {
        unreachable!("a triangle always contains its union's extremal layers: {triple:?}");
    };
    debug_assert_ne!(first, last);
    let mid = 3 - first - last;
    let oriented = [triple[first], triple[mid], triple[last]];
    debug_assert!((oriented[0] & oriented[2]).is_subset(oriented[1]));
    oriented
}

// ---------------------------------------------------------------------------
// Squares

/// A square face of the order polytope, recorded by the two incomparable
/// filters forming its diagonal; the other diagonal is their intersection
/// and union. Stored with the smaller bitmask first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct OrderSquare {
    pub filters: [ElementSet; 2],
}

impl OrderSquare {
    pub fn new(f1: ElementSet, f2: ElementSet) -> OrderSquare {
        let mut filters = [f1, f2];
        filters.sort();
        OrderSquare { filters }
    }

    /// Both sets are filters and their two differences are connected.
    pub fn is_valid(&self, p: &Poset) -> bool {
        let [f1, f2] = self.filters;
        p.is_filter(f1)
            && p.is_filter(f2)
            && p.is_connected(f1 - f2)
            && p.is_connected(f2 - f1)
    }

    /// The four vertices: intersection, the two filters, union.
    pub fn vertices(&self) -> [ElementSet; 4] {
        let [f1, f2] = self.filters;
        [f1 & f2, f1, f2, f1 | f2]
    }
}

/// A square face of the chain polytope: two connected height-≤2 subposets
/// (the `sides`), parallel to each other and to a `shared` antichain. Each
/// side splits into its minimal and maximal layer, and the four vertices
/// combine one layer of each side with the shared part.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct ChainSquare {
    pub sides: [ElementSet; 2],
    pub shared: ElementSet,
}

impl ChainSquare {
    pub fn new(q: ElementSet, r: ElementSet, shared: ElementSet) -> ChainSquare {
        let mut sides = [q, r];
        sides.sort();
        ChainSquare { sides, shared }
    }

    pub fn is_valid(&self, p: &Poset) -> bool {
        let [q, r] = self.sides;
        p.is_connected(q)
            && p.is_connected(r)
            && p.height(q) <= 2
            && p.height(r) <= 2
            && p.is_antichain(self.shared)
            && p.sets_parallel(q, r)
            && p.sets_parallel(q, self.shared)
            && p.sets_parallel(r, self.shared)
    }

    /// The two antichain layers of one side. A singleton side contributes
    /// the empty layer and itself; a height-two side contributes its
    /// minimal and maximal elements.
    pub fn layers(p: &Poset, side: ElementSet) -> (ElementSet, ElementSet) {
        if side.len() == 1 {
            (ElementSet::EMPTY, side)
        } else {
            (p.min_of(side), p.max_of(side))
        }
    }

    /// The four vertex antichains, one per choice of layer on each side.
    pub fn vertices(&self, p: &Poset) -> [ElementSet; 4] {
        let (q0, q1) = Self::layers(p, self.sides[0]);
        let (r0, r1) = Self::layers(p, self.sides[1]);
        let s = self.shared;
        [q0 | r0 | s, q0 | r1 | s, q1 | r0 | s, q1 | r1 | s]
    }
}

/// Square faces of the order polytope, ascending by filter pair.
pub fn order_squares(p: &Poset) -> Vec<OrderSquare> {
    if p.n() <= 2 {
        return Vec::new();
    }
    let conn = connectivity_oracle(p);
    let filters = p.filters();
    let mut out = Vec::new();
    for (i, &f1) in filters.iter().enumerate() {
        for &f2 in &filters[i + 1..] {
            if conn(f1 - f2) && conn(f2 - f1) {
                out.push(OrderSquare { filters: [f1, f2] });
            }
        }
    }
    out
}

/// Square faces of the chain polytope, ascending by `(sides, shared)`.
pub fn chain_squares(p: &Poset) -> Vec<ChainSquare> {
    if p.n() <= 2 {
        return Vec::new();
    }
    let conn = connectivity_oracle(p);
    let sides: Vec<ElementSet> = crate::set::all_subsets(p.n())
        .filter(|&s| conn(s) && p.height(s) <= 2)
        .collect();
    let antichains = p.antichains();
    let mut out = Vec::new();
    for (i, &q) in sides.iter().enumerate() {
        for &r in &sides[i + 1..] {
            if !p.sets_parallel(q, r) {
                continue;
            }
            for &s in &antichains {
                if p.sets_parallel(q, s) && p.sets_parallel(r, s) {
                    out.push(ChainSquare { sides: [q, r], shared: s });
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Triangle parametrisation

/// Data determining one triangle of the order polytope: a connected,
/// order-convex `support` of height at least two; an `anchor` antichain
/// parallel to it, shared by all three filters; and a `split` filter inside
/// the support that cuts it into two connected parts.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct OrderTriangleParam {
    pub support: ElementSet,
    pub anchor: ElementSet,
    pub split: ElementSet,
}

/// Data determining one triangle of the chain polytope: the same kind of
/// `support` and `anchor`, plus a `middle` antichain inside the support
/// whose symmetric differences with the support's extremal layers are both
/// connected.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct ChainTriangleParam {
    pub support: ElementSet,
    pub anchor: ElementSet,
    pub middle: ElementSet,
}

fn is_filter_within(p: &Poset, g: ElementSet, q: ElementSet) -> bool {
    g.iter().all(|x| (p.up_set(x) & q).is_subset(g))
}

/// All valid `(support, anchor, split)` triples, in that lexicographic
/// order. In bijection with [`order_triangles`] via
/// [`expand_order_triangle`].
pub fn order_triangle_params(p: &Poset) -> Vec<OrderTriangleParam> {
    if p.n() <= 2 {
        return Vec::new();
    }
    let conn = connectivity_oracle(p);
    let antichains = p.antichains();
    let mut out = Vec::new();
    for support in p.connected_order_convex_subposets(2) {
        let anchors: Vec<ElementSet> = antichains
            .iter()
            .copied()
            .filter(|&w| p.sets_parallel(w, support))
            .collect();
        if anchors.is_empty() {
            continue;
        }
        let splits: Vec<ElementSet> = support
            .subsets()
            .filter(|&g| {
                conn(g) && conn(support - g) && is_filter_within(p, g, support)
            })
            .collect();
        for &anchor in &anchors {
            for &split in &splits {
                out.push(OrderTriangleParam { support, anchor, split });
            }
        }
    }
    out
}

/// All valid `(support, anchor, middle)` triples, in that lexicographic
/// order. In bijection with [`chain_triangles`] via
/// [`expand_chain_triangle`].
pub fn chain_triangle_params(p: &Poset) -> Vec<ChainTriangleParam> {
    if p.n() <= 2 {
        return Vec::new();
    }
    let conn = connectivity_oracle(p);
    let antichains = p.antichains();
    let mut out = Vec::new();
    for support in p.connected_order_convex_subposets(2) {
        let anchors: Vec<ElementSet> = antichains
            .iter()
            .copied()
            .filter(|&w| p.sets_parallel(w, support))
            .collect();
        if anchors.is_empty() {
            continue;
        }
        let bottom = p.min_of(support);
        let top = p.max_of(support);
        let middles: Vec<ElementSet> = support
            .subsets()
            .filter(|&b| p.is_antichain(b) && conn(b ^ bottom) && conn(b ^ top))
            .collect();
        for &anchor in &anchors {
            for &middle in &middles {
                out.push(ChainTriangleParam { support, anchor, middle });
            }
        }
    }
    out
}

/// The filter chain `F ⊂ G ⊂ H` of the triangle a parameter triple
/// describes: the top filter is generated by support and anchor together,
/// the bottom one is everything of the top outside the support, and the
/// middle one adds the split.
pub fn expand_order_triangle(p: &Poset, t: &OrderTriangleParam) -> [ElementSet; 3] {
    let h = p.up_closure(t.support | t.anchor);
    let f = h - t.support;
    let g = f | t.split;
    [f, g, h]
}

/// The normalised antichain triple of the triangle a parameter triple
/// describes: anchor plus the support's bottom layer, anchor plus the
/// middle, anchor plus the top layer.
pub fn expand_chain_triangle(p: &Poset, t: &ChainTriangleParam) -> [ElementSet; 3] {
    [
        t.anchor | p.min_of(t.support),
        t.anchor | t.middle,
        t.anchor | p.max_of(t.support),
    ]
}

// ---------------------------------------------------------------------------
// Boundary-trace counting

fn check_boundary_traces(
    q: &Poset,
    outside_max: ElementSet,
    inside_min: ElementSet,
) -> Result<(), CensusError> {
    if !outside_max.is_subset(q.maximals()) {
        return Err(CensusError::InvalidBoundaryTrace { which: "maximal", trace: outside_max });
    }
    if !inside_min.is_subset(q.minimals()) {
        return Err(CensusError::InvalidBoundaryTrace { which: "minimal", trace: inside_min });
    }
    Ok(())
}

/// Counts the filters `G` of `q` that split `q` into two connected pieces
/// with a prescribed boundary: the complement meets the maximal elements
/// exactly in `outside_max`, and `G` meets the minimal elements exactly in
/// `inside_min`.
pub fn biconnected_filter_count(
    q: &Poset,
    outside_max: ElementSet,
    inside_min: ElementSet,
) -> Result<usize, CensusError> {
    check_boundary_traces(q, outside_max, inside_min)?;
    let maxima = q.maximals();
    let minima = q.minimals();
    let count = q
        .filters()
        .into_iter()
        .filter(|&g| {
            (q.full_set() - g) & maxima == outside_max
                && g & minima == inside_min
                && q.is_connected(g)
                && q.is_connected(q.full_set() - g)
        })
        .count();
    Ok(count)
}

/// Counts the antichains `B` of `q` whose symmetric differences with the
/// minimal and maximal layers are both connected, with prescribed boundary
/// traces `B ∩ max(q) = on_max` and `B ∩ min(q) = on_min`.
pub fn biconnected_antichain_count(
    q: &Poset,
    on_max: ElementSet,
    on_min: ElementSet,
) -> Result<usize, CensusError> {
    check_boundary_traces(q, on_max, on_min)?;
    let maxima = q.maximals();
    let minima = q.minimals();
    let count = q
        .antichains()
        .into_iter()
        .filter(|&b| {
            b & maxima == on_max
                && b & minima == on_min
                && q.is_connected(b ^ minima)
                && q.is_connected(b ^ maxima)
        })
        .count();
    Ok(count)
}

/// The two posets the recursion steps into when removing the interior
/// element `e`: the deleted poset itself, and contractions of the images of
/// `e`'s strict up- and down-sets.
struct RecursionPieces {
    rest: Poset,
    rest_up: ElementSet,
    rest_down: ElementSet,
    on_max: ElementSet,
    on_min: ElementSet,
}

fn recursion_pieces(
    q: &Poset,
    on_max: ElementSet,
    on_min: ElementSet,
    e: usize,
) -> Result<RecursionPieces, CensusError> {
    check_boundary_traces(q, on_max, on_min)?;
    if e >= q.n() {
        return Err(CensusError::ElementOutOfRange(e));
    }
    if !q.is_connected(q.full_set()) {
        return Err(CensusError::NotConnected);
    }
    if q.minimals().contains(e) || q.maximals().contains(e) {
        return Err(CensusError::ExtremalElement(e));
    }
    let eset = ElementSet::singleton(e);
    if !q.sets_parallel(eset, on_max)
        || !q.sets_parallel(eset, on_min)
        || !q.sets_parallel(on_max, on_min)
    {
        return Err(CensusError::NotParallel);
    }
    let del = q.delete(eset);
    Ok(RecursionPieces {
        rest_up: del.map_set(q.up_set(e)),
        rest_down: del.map_set(q.down_set(e)),
        on_max: del.map_set(on_max),
        on_min: del.map_set(on_min),
        rest: del.poset,
    })
}

/// Recomputes [`biconnected_antichain_count`] by removing one interior
/// element `e` (incomparable to both traces): antichains avoiding `e`'s
/// neighbourhood constraints split into those of the deleted poset and
/// those of the poset with both of `e`'s shadows collapsed.
pub fn biconnected_antichain_count_recursive(
    q: &Poset,
    on_max: ElementSet,
    on_min: ElementSet,
    e: usize,
) -> Result<usize, CensusError> {
    let pieces = recursion_pieces(q, on_max, on_min, e)?;
    let plain = biconnected_antichain_count(&pieces.rest, pieces.on_max, pieces.on_min)?;
    let upper = pieces.rest.contract(pieces.rest_up).expect("up-set image is a filter");
    let lower = upper
        .quotient
        .contract(upper.map_set(pieces.rest_down))
        .expect("down-set image is an ideal");
    let collapsed = biconnected_antichain_count(
        &lower.quotient,
        lower.map_set(upper.map_set(pieces.on_max)),
        lower.map_set(upper.map_set(pieces.on_min)),
    )?;
    Ok(plain + collapsed)
}

/// Recomputes [`biconnected_filter_count`] by removing one interior element
/// `e`: splits either keep `e` in the filter (collapse its up-set) or in
/// the complement (collapse its down-set).
pub fn biconnected_filter_count_recursive(
    q: &Poset,
    outside_max: ElementSet,
    inside_min: ElementSet,
    e: usize,
) -> Result<usize, CensusError> {
    let pieces = recursion_pieces(q, outside_max, inside_min, e)?;
    let upper = pieces.rest.contract(pieces.rest_up).expect("up-set image is a filter");
    let above = biconnected_filter_count(
        &upper.quotient,
        upper.map_set(pieces.on_max),
        upper.map_set(pieces.on_min),
    )?;
    let lower = pieces.rest.contract(pieces.rest_down).expect("down-set image is an ideal");
    let below = biconnected_filter_count(
        &lower.quotient,
        lower.map_set(pieces.on_max),
        lower.map_set(pieces.on_min),
    )?;
    Ok(above + below)
}

/// The two sides of the antichain-count supermodularity inequality at an
/// interior element `e`, plus whether strictness is required: collapsing
/// both shadows together never loses against collapsing them separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SupermodularityCheck {
    /// `count(rest) + count(both shadows collapsed)`.
    pub lhs: usize,
    /// `count(upper shadow collapsed) + count(lower shadow collapsed)`.
    pub rhs: usize,
    pub strict: bool,
    /// Set when every minimal element is below `e`, every maximal element
    /// above it, and both layers have at least two elements; strictness is
    /// guaranteed in that configuration.
    pub must_be_strict: bool,
}

impl SupermodularityCheck {
    pub fn holds(&self) -> bool {
        self.lhs >= self.rhs && (self.strict || !self.must_be_strict)
    }
}

/// Evaluates both sides of the supermodularity inequality for the
/// biconnected antichain count at interior element `e`.
pub fn antichain_count_supermodularity(
    q: &Poset,
    on_max: ElementSet,
    on_min: ElementSet,
    e: usize,
) -> Result<SupermodularityCheck, CensusError> {
    let pieces = recursion_pieces(q, on_max, on_min, e)?;
    let count = |p: &Poset, mx: ElementSet, mn: ElementSet| biconnected_antichain_count(p, mx, mn);

    let plain = count(&pieces.rest, pieces.on_max, pieces.on_min)?;
    let upper = pieces.rest.contract(pieces.rest_up).expect("filter");
    let upper_count = count(
        &upper.quotient,
        upper.map_set(pieces.on_max),
        upper.map_set(pieces.on_min),
    )?;
    let lower = pieces.rest.contract(pieces.rest_down).expect("ideal");
    let lower_count = count(
        &lower.quotient,
        lower.map_set(pieces.on_max),
        lower.map_set(pieces.on_min),
    )?;
    let both = upper
        .quotient
        .contract(upper.map_set(pieces.rest_down))
        .expect("ideal");
    let both_count = count(
        &both.quotient,
        both.map_set(upper.map_set(pieces.on_max)),
        both.map_set(upper.map_set(pieces.on_min)),
    )?;

    let must_be_strict = q.minimals().is_subset(q.down_set(e))
        && q.maximals().is_subset(q.up_set(e))
        && q.minimals().len() >= 2
        && q.maximals().len() >= 2;
    let (lhs, rhs) = (plain + both_count, upper_count + lower_count);
    Ok(SupermodularityCheck { lhs, rhs, strict: lhs > rhs, must_be_strict })
}

// ---------------------------------------------------------------------------
// Aggregates

/// Counts of vertices, edges, triangles, and squares of the chosen
/// polytope, all by direct combinatorial enumeration.
pub fn f_vector2(p: &Poset, kind: Polytope) -> FVector2 {
    match kind {
        Polytope::Order => FVector2 {
            f0: p.filters().len(),
            f1: order_edges(p).len(),
            f2_tri: order_triangles(p).len(),
            f2_sq: order_squares(p).len(),
        },
        Polytope::Chain => FVector2 {
            f0: p.antichains().len(),
            f1: chain_edges(p).len(),
            f2_tri: chain_triangles(p).len(),
            f2_sq: chain_squares(p).len(),
        },
    }
}

/// Triangle count computed the long way round: for each support, multiply
/// the number of parallel anchors by the number of splits (or middles),
/// summed over all boundary traces. Must agree with the direct enumeration.
pub fn triangle_count_by_support(p: &Poset, kind: Polytope) -> usize {
    if p.n() <= 2 {
        return 0;
    }
    let antichains = p.antichains();
    let mut total = 0;
    for support in p.connected_order_convex_subposets(2) {
        let anchors = antichains
            .iter()
            .filter(|&&w| p.sets_parallel(w, support))
            .count();
        if anchors == 0 {
            continue;
        }
        let del = p.delete(p.full_set() - support);
        let sub = &del.poset;
        let mut splits = 0;
        for mx in sub.maximals().subsets() {
            for mn in sub.minimals().subsets() {
                // Non-parallel traces contribute nothing: the filter (or
                // antichain) would have to both contain and avoid a point.
                if !sub.sets_parallel(mx, mn) {
                    continue;
                }
                splits += match kind {
                    Polytope::Order => biconnected_filter_count(sub, mx, mn),
                    Polytope::Chain => biconnected_antichain_count(sub, mx, mn),
                }
                .expect("traces are subsets of the extremal layers by construction");
            }
        }
        total += anchors * splits;
    }
    total
}
