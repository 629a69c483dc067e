//! Finite posets on the dense ground set `{0, .., n-1}`.
//!
//! The strict order is kept transitively closed in two bitmask tables
//! (`up[x] = {y : x < y}` and its mirror), so comparability queries are a
//! single mask test. Everything downstream — face enumeration, quotients,
//! the geometric cross-check — works through this type.

use crate::set::{all_subsets, ElementSet, MAX_ELEMENTS};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("element {element} is out of range for a poset on {n} elements")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("poset on {n} elements exceeds the supported maximum of {MAX_ELEMENTS}")]
    TooManyElements { n: usize },
    #[error("cover relation contains a cycle")]
    CycleDetected,
    #[error("{0:?} is not an antichain")]
    NotAnAntichain(ElementSet),
    #[error("{0:?} is not a filter")]
    NotAFilter(ElementSet),
    #[error("{0:?} is neither a filter nor an ideal, so it cannot be contracted")]
    NotFilterOrIdeal(ElementSet),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
}

impl Poset {
    /// The poset with `n` elements and no relations.
    pub fn antichain(n: usize) -> Poset {
        Poset {
            n,
            up: vec![ElementSet::EMPTY; n],
            down: vec![ElementSet::EMPTY; n],
        }
    }

    /// Builds a poset from its cover pairs `(lower, upper)` and takes the
    /// transitive closure. Rejects out-of-range elements and cycles.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Poset, PosetError> {
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooManyElements { n });
        }
        let mut up = vec![ElementSet::EMPTY; n];
        for &(lo, hi) in covers {
            for x in [lo, hi] {
                if x >= n {
                    return Err(PosetError::ElementOutOfRange { element: x, n });
                }
            }
            if lo == hi {
                return Err(PosetError::CycleDetected);
            }
            up[lo].insert(hi);
        }
        // Warshall closure on the bitmask rows.
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    up[i] = up[i] | up[k];
                }
            }
        }
        for (x, row) in up.iter().enumerate() {
            if row.contains(x) {
                return Err(PosetError::CycleDetected);
            }
        }
        Ok(Poset::from_strict_up(n, up))
    }

    /// Internal constructor from an already transitively closed, irreflexive
    /// `up` table.
    pub(crate) fn from_strict_up(n: usize, up: Vec<ElementSet>) -> Poset {
        let mut down = vec![ElementSet::EMPTY; n];
        for (x, above) in up.iter().enumerate() {
            for y in above.iter() {
                down[y].insert(x);
            }
        }
        let p = Poset { n, up, down };
        debug_assert!(p.relation_is_valid());
        p
    }

    fn relation_is_valid(&self) -> bool {
        for x in 0..self.n {
            if self.up[x].contains(x) {
                return false;
            }
            for y in self.up[x].iter() {
                if !self.up[y].is_subset(self.up[x]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    /// Strict comparison `x < y`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y) || self.lt(y, x)
    }

    /// Everything strictly above `x`.
    pub fn up_set(&self, x: usize) -> ElementSet {
        self.up[x]
    }

    /// Everything strictly below `x`.
    pub fn down_set(&self, x: usize) -> ElementSet {
        self.down[x]
    }

    /// Everything comparable to `x`, including `x` itself.
    pub fn comparables(&self, x: usize) -> ElementSet {
        self.up[x] | self.down[x] | ElementSet::singleton(x)
    }

    /// The same ground set with all relations reversed.
    pub fn opposite(&self) -> Poset {
        Poset {
            n: self.n,
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// True when every element of `a` is incomparable to every element of
    /// `b`. Shared elements are comparable to themselves, so overlapping
    /// sets are never parallel. Vacuously true when either set is empty.
    pub fn sets_parallel(&self, a: ElementSet, b: ElementSet) -> bool {
        a.iter().all(|x| (self.comparables(x) & b).is_empty())
    }

    /// Connectivity of the comparability graph induced on `s`. The empty
    /// set does not count as connected.
    pub fn is_connected(&self, s: ElementSet) -> bool {
        let Some(start) = s.first() else {
            return false;
        };
        let mut seen = ElementSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = ElementSet::EMPTY;
            for x in frontier.iter() {
                next = next | ((self.up[x] | self.down[x]) & s);
            }
            frontier = next - seen;
            seen = seen | next;
        }
        seen == s
    }

    /// Precomputed `is_connected` for every subset mask; index by
    /// `set.mask()`. Only sensible for small ground sets.
    pub fn connectivity_table(&self) -> Vec<bool> {
        assert!(self.n <= 20, "connectivity table would need 2^{} entries", self.n);
        all_subsets(self.n).map(|s| self.is_connected(s)).collect()
    }

    /// True when `s` contains every element lying between two of its
    /// members.
    pub fn is_order_convex(&self, s: ElementSet) -> bool {
        for x in s.iter() {
            for z in (self.up[x] & s).iter() {
                if !(self.up[x] & self.down[z]).is_subset(s) {
                    return false;
                }
            }
        }
        true
    }

    /// Minimal elements of the subposet induced on `s`.
    pub fn min_of(&self, s: ElementSet) -> ElementSet {
        s.iter().filter(|&x| (self.down[x] & s).is_empty()).collect()
    }

    /// Maximal elements of the subposet induced on `s`.
    pub fn max_of(&self, s: ElementSet) -> ElementSet {
        s.iter().filter(|&x| (self.up[x] & s).is_empty()).collect()
    }

    pub fn minimals(&self) -> ElementSet {
        self.min_of(self.full_set())
    }

    pub fn maximals(&self) -> ElementSet {
        self.max_of(self.full_set())
    }

    /// Smallest filter containing `s`.
    pub fn up_closure(&self, s: ElementSet) -> ElementSet {
        s.iter().fold(s, |acc, x| acc | self.up[x])
    }

    /// Smallest ideal containing `s`.
    pub fn down_closure(&self, s: ElementSet) -> ElementSet {
        s.iter().fold(s, |acc, x| acc | self.down[x])
    }

    pub fn is_filter(&self, s: ElementSet) -> bool {
        s.iter().all(|x| self.up[x].is_subset(s))
    }

    pub fn is_ideal(&self, s: ElementSet) -> bool {
        s.iter().all(|x| self.down[x].is_subset(s))
    }

    pub fn is_antichain(&self, s: ElementSet) -> bool {
        s.iter().all(|x| ((self.up[x] | self.down[x]) & s).is_empty())
    }

    pub fn is_chain(&self, s: ElementSet) -> bool {
        s.iter().all(|x| s.is_subset(self.comparables(x)))
    }

    /// All filters, in ascending bitmask order. The empty set and the full
    /// set always appear.
    pub fn filters(&self) -> Vec<ElementSet> {
        all_subsets(self.n).filter(|&s| self.is_filter(s)).collect()
    }

    /// All antichains, in ascending bitmask order. There are exactly as
    /// many as there are filters.
    pub fn antichains(&self) -> Vec<ElementSet> {
        all_subsets(self.n).filter(|&s| self.is_antichain(s)).collect()
    }

    /// The filter generated by an antichain; inverse of
    /// [`Poset::filter_to_antichain`].
    pub fn antichain_to_filter(&self, a: ElementSet) -> Result<ElementSet, PosetError> {
        if !self.is_antichain(a) {
            return Err(PosetError::NotAnAntichain(a));
        }
        Ok(self.up_closure(a))
    }

    /// The minimal elements of a filter; inverse of
    /// [`Poset::antichain_to_filter`].
    pub fn filter_to_antichain(&self, f: ElementSet) -> Result<ElementSet, PosetError> {
        if !self.is_filter(f) {
            return Err(PosetError::NotAFilter(f));
        }
        Ok(self.min_of(f))
    }

    /// Number of elements in the longest chain inside `s`.
    pub fn height(&self, s: ElementSet) -> usize {
        let mut memo = vec![0usize; self.n];
        fn depth(p: &Poset, s: ElementSet, x: usize, memo: &mut Vec<usize>) -> usize {
            if memo[x] != 0 {
                return memo[x];
            }
            let below = p.down[x] & s;
            let d = 1 + below.iter().map(|y| depth(p, s, y, memo)).max().unwrap_or(0);
            memo[x] = d;
            d
        }
        s.iter().map(|x| depth(self, s, x, &mut memo)).max().unwrap_or(0)
    }

    /// Cover pairs `(lower, upper)` of the relation, ascending.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in self.up[x].iter() {
                if (self.up[x] & self.down[y]).is_empty() {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// All maximal chains, each listed bottom-up. Chains are found by
    /// walking cover edges from minimal to maximal elements, so every chain
    /// is saturated.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        for start in self.minimals().iter() {
            self.extend_chain(start, &mut path, &mut out);
        }
        out
    }

    fn extend_chain(&self, x: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        path.push(x);
        let covers_above: Vec<usize> = self.up[x]
            .iter()
            .filter(|&y| (self.up[x] & self.down[y]).is_empty())
            .collect();
        if covers_above.is_empty() {
            out.push(path.clone());
        } else {
            for y in covers_above {
                self.extend_chain(y, path, out);
            }
        }
        path.pop();
    }

    /// True when no element has two incomparable elements below it and two
    /// incomparable elements above it.
    pub fn is_x_free(&self) -> bool {
        (0..self.n).all(|e| self.is_chain(self.down[e]) || self.is_chain(self.up[e]))
    }

    /// Connected, order-convex subsets whose height is at least
    /// `min_height`, in ascending bitmask order.
    pub fn connected_order_convex_subposets(&self, min_height: usize) -> Vec<ElementSet> {
        assert!(min_height >= 1);
        all_subsets(self.n)
            .filter(|&s| {
                self.height(s) >= min_height && self.is_connected(s) && self.is_order_convex(s)
            })
            .collect()
    }

    /// Collapses a filter or ideal `j` to a single new element. The
    /// surviving elements are relabelled densely in their original order;
    /// the merged element takes the last label. Contracting a filter makes
    /// the merged element maximal, contracting an ideal makes it minimal,
    /// and contracting the empty set returns an unchanged copy.
    pub fn contract(&self, j: ElementSet) -> Result<Contraction, PosetError> {
        debug_assert!(j.is_subset(self.full_set()));
        let is_filter = self.is_filter(j);
        let is_ideal = self.is_ideal(j);
        if !is_filter && !is_ideal {
            return Err(PosetError::NotFilterOrIdeal(j));
        }
        if j.is_empty() {
            return Ok(Contraction {
                quotient: self.clone(),
                class_of: (0..self.n).collect(),
                merged: None,
            });
        }
        let kept: Vec<usize> = (self.full_set() - j).iter().collect();
        let k = kept.len();
        let merged = k; // label of the collapsed block
        let mut class_of = vec![merged; self.n];
        for (new, &old) in kept.iter().enumerate() {
            class_of[old] = new;
        }
        let mut up = vec![ElementSet::EMPTY; k + 1];
        for (nx, &x) in kept.iter().enumerate() {
            for y in (self.up[x] - j).iter() {
                up[nx].insert(class_of[y]);
            }
            // A filter collapses to a new top over everything that was
            // below it; an ideal collapses to a new bottom dually.
            if is_filter && !(self.up[x] & j).is_empty() {
                up[nx].insert(merged);
            }
            if is_ideal && !(self.down[x] & j).is_empty() {
                up[merged].insert(nx);
            }
        }
        Ok(Contraction {
            quotient: Poset::from_strict_up(k + 1, up),
            class_of,
            merged: Some(merged),
        })
    }

    /// The subposet induced on the complement of `removed`, with the
    /// surviving elements relabelled densely in their original order.
    pub fn delete(&self, removed: ElementSet) -> Deletion {
        debug_assert!(removed.is_subset(self.full_set()));
        let kept: Vec<usize> = (self.full_set() - removed).iter().collect();
        let mut new_of_old = vec![None; self.n];
        for (new, &old) in kept.iter().enumerate() {
            new_of_old[old] = Some(new);
        }
        let up = kept
            .iter()
            .map(|&x| (self.up[x] - removed).iter().map(|y| new_of_old[y].unwrap()).collect())
            .collect();
        Deletion {
            poset: Poset::from_strict_up(kept.len(), up),
            old_of_new: kept,
            new_of_old,
        }
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset(n={}, covers={:?})", self.n, self.covers())
    }
}

/// Result of [`Poset::contract`]: the quotient plus the label maps.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub quotient: Poset,
    /// Maps each original element to its label in the quotient.
    pub class_of: Vec<usize>,
    /// Label of the collapsed block, absent when the contracted set was
    /// empty.
    pub merged: Option<usize>,
}

impl Contraction {
    /// Transports a set of original elements through the class map.
    pub fn map_set(&self, s: ElementSet) -> ElementSet {
        s.iter().map(|x| self.class_of[x]).collect()
    }
}

/// Result of [`Poset::delete`]: the induced subposet plus the relabelling.
#[derive(Clone, Debug)]
pub struct Deletion {
    pub poset: Poset,
    /// `old_of_new[new] = old`.
    pub old_of_new: Vec<usize>,
    /// `new_of_old[old]` is `None` for deleted elements.
    pub new_of_old: Vec<Option<usize>>,
}

impl Deletion {
    /// Transports a set of surviving original elements to the new labels.
    /// Panics if the set touches a deleted element.
    pub fn map_set(&self, s: ElementSet) -> ElementSet {
        s.iter()
            .map(|x| self.new_of_old[x].expect("set touches a deleted element"))
            .collect()
    }
}

// Posets serialize as `{"n": .., "covers": [[lower, upper], ..]}`; the
// relation is rebuilt (and re-validated) on the way in.
impl Serialize for Poset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let covers: Vec<[usize; 2]> = self.covers().iter().map(|&(a, b)| [a, b]).collect();
        let mut st = serializer.serialize_struct("Poset", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("covers", &covers)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Poset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Poset, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            covers: Vec<[usize; 2]>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let covers: Vec<(usize, usize)> = raw.covers.iter().map(|&[a, b]| (a, b)).collect();
        Poset::from_covers(raw.n, &covers).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen as fixtures;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn from_covers_takes_transitive_closure() {
        let x5 = fixtures::x5();
        assert!(x5.lt(0, 3), "0 < 2 < 3 must close to 0 < 3");
        assert!(x5.lt(1, 4));
        assert!(!x5.lt(3, 0));
        assert!(x5.comparable(0, 3));
        assert!(!x5.comparable(0, 1));
        assert!(!x5.comparable(3, 4));
    }

    #[test]
    fn from_covers_rejects_bad_input() {
        assert_eq!(
            Poset::from_covers(3, &[(0, 5)]),
            Err(PosetError::ElementOutOfRange { element: 5, n: 3 })
        );
        assert_eq!(
            Poset::from_covers(2, &[(0, 1), (1, 0)]),
            Err(PosetError::CycleDetected)
        );
        assert_eq!(Poset::from_covers(3, &[(1, 1)]), Err(PosetError::CycleDetected));
        assert_eq!(
            Poset::from_covers(4, &[(0, 1), (1, 2), (2, 0)]),
            Err(PosetError::CycleDetected)
        );
    }

    #[test]
    fn opposite_reverses_and_is_involutive() {
        let c3 = fixtures::chain(3);
        let op = c3.opposite();
        assert!(op.lt(2, 0) && op.lt(1, 0) && !op.lt(0, 1));
        assert_eq!(op.opposite(), c3);
    }

    #[test]
    fn parallel_sets() {
        let v = fixtures::v();
        assert!(v.sets_parallel(set(&[1]), set(&[2])));
        assert!(!v.sets_parallel(set(&[0]), set(&[1])));
        assert!(v.sets_parallel(ElementSet::EMPTY, set(&[0, 1, 2])));
        // Overlap means a shared element, which is comparable to itself.
        assert!(!v.sets_parallel(set(&[1]), set(&[1])));
    }

    #[test]
    fn connectivity() {
        let v = fixtures::v();
        assert!(v.is_connected(set(&[0, 1, 2])));
        assert!(v.is_connected(set(&[0, 1])));
        assert!(!v.is_connected(set(&[1, 2])));
        assert!(v.is_connected(set(&[1])));
        assert!(!v.is_connected(ElementSet::EMPTY), "the empty poset is not connected");

        let table = v.connectivity_table();
        for s in crate::set::all_subsets(3) {
            assert_eq!(table[s.mask() as usize], v.is_connected(s));
        }
    }

    #[test]
    fn order_convexity() {
        let x5 = fixtures::x5();
        assert!(!x5.is_order_convex(set(&[0, 3])), "0 < 2 < 3 but 2 is missing");
        assert!(x5.is_order_convex(set(&[2, 3])));
        assert!(x5.is_order_convex(set(&[0, 1])));
        assert!(x5.is_order_convex(ElementSet::EMPTY));
        assert!(x5.is_order_convex(x5.full_set()));
    }

    #[test]
    fn extremes_and_closures() {
        let x5 = fixtures::x5();
        assert_eq!(x5.min_of(set(&[0, 1, 3, 4])), set(&[0, 1]));
        assert_eq!(x5.max_of(set(&[0, 1, 3, 4])), set(&[3, 4]));
        assert_eq!(x5.minimals(), set(&[0, 1]));
        assert_eq!(x5.maximals(), set(&[3, 4]));

        let v = fixtures::v();
        assert_eq!(v.up_closure(set(&[0])), set(&[0, 1, 2]));
        assert_eq!(v.down_closure(set(&[1, 2])), set(&[0, 1, 2]));
        assert_eq!(v.up_closure(ElementSet::EMPTY), ElementSet::EMPTY);
    }

    #[test]
    fn filters_and_antichains_of_v() {
        let v = fixtures::v();
        let filters = v.filters();
        let antichains = v.antichains();
        assert_eq!(
            filters,
            vec![set(&[]), set(&[1]), set(&[2]), set(&[1, 2]), set(&[0, 1, 2])]
        );
        assert_eq!(
            antichains,
            vec![set(&[]), set(&[0]), set(&[1]), set(&[2]), set(&[1, 2])]
        );
        assert_eq!(filters.len(), antichains.len());
    }

    #[test]
    fn filter_antichain_bijection() {
        let v = fixtures::v();
        assert_eq!(v.antichain_to_filter(set(&[1, 2])), Ok(set(&[1, 2])));
        assert_eq!(v.filter_to_antichain(set(&[0, 1, 2])), Ok(set(&[0])));
        assert_eq!(
            v.antichain_to_filter(set(&[0, 1])),
            Err(PosetError::NotAnAntichain(set(&[0, 1])))
        );
        assert_eq!(
            v.filter_to_antichain(set(&[0])),
            Err(PosetError::NotAFilter(set(&[0])))
        );

        // Round trips, exhaustively over a handful of shapes.
        for p in [fixtures::v(), fixtures::x5(), fixtures::diamond(), fixtures::chain(4)] {
            for f in p.filters() {
                let a = p.filter_to_antichain(f).unwrap();
                assert_eq!(p.antichain_to_filter(a), Ok(f));
            }
            for a in p.antichains() {
                let f = p.antichain_to_filter(a).unwrap();
                assert_eq!(p.filter_to_antichain(f), Ok(a));
            }
        }
    }

    #[test]
    fn heights() {
        let x5 = fixtures::x5();
        assert_eq!(x5.height(x5.full_set()), 3);
        assert_eq!(x5.height(set(&[0, 1, 3, 4])), 2, "0 < 3 survives inside the subset");
        assert_eq!(x5.height(set(&[0, 1])), 1);
        assert_eq!(x5.height(ElementSet::EMPTY), 0);
        assert_eq!(fixtures::chain(5).height(ElementSet::full(5)), 5);
    }

    #[test]
    fn covers_and_maximal_chains() {
        let x5 = fixtures::x5();
        assert_eq!(x5.covers(), vec![(0, 2), (1, 2), (2, 3), (2, 4)]);
        assert_eq!(
            x5.maximal_chains(),
            vec![vec![0, 2, 3], vec![0, 2, 4], vec![1, 2, 3], vec![1, 2, 4]]
        );
        assert_eq!(fixtures::antichain(2).maximal_chains(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn x_freeness() {
        assert!(fixtures::v().is_x_free());
        assert!(fixtures::chain(5).is_x_free());
        assert!(fixtures::antichain(4).is_x_free());
        assert!(fixtures::diamond().is_x_free());
        assert!(!fixtures::x5().is_x_free());
    }

    #[test]
    fn connected_order_convex_enumeration() {
        let v = fixtures::v();
        assert_eq!(
            v.connected_order_convex_subposets(2),
            vec![set(&[0, 1]), set(&[0, 2]), set(&[0, 1, 2])]
        );
        let c3 = fixtures::chain(3);
        assert_eq!(
            c3.connected_order_convex_subposets(2),
            vec![set(&[0, 1]), set(&[1, 2]), set(&[0, 1, 2])]
        );
    }

    #[test]
    fn contract_filter_makes_merged_top() {
        let c3 = fixtures::chain(3);
        let c = c3.contract(set(&[2])).unwrap();
        assert_eq!(c.merged, Some(2));
        assert_eq!(c.class_of, vec![0, 1, 2]);
        let q = &c.quotient;
        assert_eq!(q.n(), 3);
        assert!(q.lt(0, 1) && q.lt(1, 2) && q.lt(0, 2), "expected the chain 0 < 1 < merged");
    }

    #[test]
    fn contract_rejects_non_filter_non_ideal() {
        let c3 = fixtures::chain(3);
        assert!(matches!(
            c3.contract(set(&[1])),
            Err(PosetError::NotFilterOrIdeal(_))
        ));
    }

    #[test]
    fn contract_empty_is_identity() {
        let v = fixtures::v();
        let c = v.contract(ElementSet::EMPTY).unwrap();
        assert_eq!(c.quotient, v);
        assert_eq!(c.merged, None);
        assert_eq!(c.class_of, vec![0, 1, 2]);
    }

    #[test]
    fn chained_contractions_collapse_bowtie_to_two_chain() {
        // Remove the middle of the X shape, then collapse its top and
        // bottom pairs; what is left is a two-element chain.
        let x5 = fixtures::x5();
        let del = x5.delete(set(&[2]));
        let q = &del.poset; // 0,1 below 2,3 in new labels
        assert!(q.lt(0, 2) && q.lt(0, 3) && q.lt(1, 2) && q.lt(1, 3));

        let top = q.contract(set(&[2, 3])).unwrap();
        let bottom = top.quotient.contract(top.map_set(set(&[0, 1]))).unwrap();
        let two = &bottom.quotient;
        assert_eq!(two.n(), 2);
        let merged_bottom = bottom.merged.unwrap();
        let merged_top = bottom.class_of[top.merged.unwrap()];
        assert!(two.lt(merged_bottom, merged_top));
    }

    #[test]
    fn deletion_relabels_densely() {
        let x5 = fixtures::x5();
        let del = x5.delete(set(&[2]));
        assert_eq!(del.poset.n(), 4);
        assert_eq!(del.old_of_new, vec![0, 1, 3, 4]);
        assert_eq!(del.map_set(set(&[3, 4])), set(&[2, 3]));
        assert!(del.poset.lt(0, 2) && !del.poset.lt(0, 1));
    }

    #[test]
    fn merged_element_is_extremal() {
        for p in [fixtures::x5(), fixtures::diamond(), fixtures::v()] {
            for j in crate::set::all_subsets(p.n()) {
                if j.is_empty() {
                    continue;
                }
                if p.is_filter(j) {
                    let c = p.contract(j).unwrap();
                    assert!(c.quotient.maximals().contains(c.merged.unwrap()));
                }
                if p.is_ideal(j) {
                    let c = p.contract(j).unwrap();
                    assert!(c.quotient.minimals().contains(c.merged.unwrap()));
                }
            }
        }
    }

    #[test]
    fn connectivity_matches_extremes() {
        // A subposet is connected exactly when its minimal and maximal
        // elements alone are connected.
        for p in [fixtures::x5(), fixtures::diamond(), fixtures::v(), fixtures::chain(4)] {
            for s in crate::set::all_subsets(p.n()) {
                let extremes = p.min_of(s) | p.max_of(s);
                assert_eq!(p.is_connected(s), p.is_connected(extremes), "subset {s:?} of {p:?}");
            }
        }
    }

    #[test]
    fn serde_round_trip() {
        let x5 = fixtures::x5();
        let json = serde_json::to_string(&x5).unwrap();
        assert_eq!(json, r#"{"n":5,"covers":[[0,2],[1,2],[2,3],[2,4]]}"#);
        let back: Poset = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x5);
        assert!(serde_json::from_str::<Poset>(r#"{"n":2,"covers":[[0,1],[1,0]]}"#).is_err());
    }
}
