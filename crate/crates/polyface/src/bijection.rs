//! The explicit correspondence between the square faces of the two
//! polytopes.
//!
//! Both polytopes of a poset always have the same number of squares, and
//! the two maps here realise the matching concretely: an order-polytope
//! square is a pair of filters, a chain-polytope square is a pair of
//! parallel sides plus a shared antichain, and the maps translate between
//! the two descriptions. [`check_squares`] runs both directions over an
//! entire poset and reports any mismatch.

use crate::census::{chain_squares, order_squares, ChainSquare, OrderSquare};
use crate::poset::Poset;
use crate::set::ElementSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BijectionError {
    #[error("{0:?} is not a valid order-polytope square")]
    InvalidOrderSquare(OrderSquare),
    #[error("{0:?} is not a valid chain-polytope square")]
    InvalidChainSquare(ChainSquare),
}

/// Maps an order-polytope square to its chain-polytope counterpart: each
/// filter difference flattens to its extremal layers (one side each), and
/// the shared antichain collects the bottom of the intersection that stays
/// parallel to both sides.
pub fn order_to_chain(p: &Poset, sq: &OrderSquare) -> Result<ChainSquare, BijectionError> {
    if !sq.is_valid(p) {
        return Err(BijectionError::InvalidOrderSquare(*sq));
    }
    let [f1, f2] = sq.filters;
    let side = |d: ElementSet| p.min_of(d) | p.max_of(d);
    let q = side(f1 - f2);
    let r = side(f2 - f1);
    let shared = p
        .min_of(f1 & f2)
        .iter()
        .filter(|&x| {
            let xs = ElementSet::singleton(x);
            p.sets_parallel(xs, q) && p.sets_parallel(xs, r)
        })
        .collect();
    Ok(ChainSquare::new(q, r, shared))
}

/// Maps a chain-polytope square back to filters: each filter is generated
/// upward by one side and the shared antichain, together with the strictly
/// upper shadow of the other side (everything above it but not below it).
pub fn chain_to_order(p: &Poset, sq: &ChainSquare) -> Result<OrderSquare, BijectionError> {
    if !sq.is_valid(p) {
        return Err(BijectionError::InvalidChainSquare(*sq));
    }
    let [q, r] = sq.sides;
    let upper_shadow = |s: ElementSet| p.up_closure(s) - p.down_closure(s);
    let shared_up = p.up_closure(sq.shared);
    let f1 = p.up_closure(q) | shared_up | upper_shadow(r);
    let f2 = p.up_closure(r) | shared_up | upper_shadow(q);
    Ok(OrderSquare::new(f1, f2))
}

/// Outcome of matching the two square lists of one poset against each
/// other. Clean means equal counts and both round trips returning every
/// square to itself inside the opposite list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SquareMatchReport {
    pub order_count: usize,
    pub chain_count: usize,
    pub failures: Vec<String>,
}

impl SquareMatchReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Maps every order square forward and every chain square backward,
/// checking membership in the opposite list and exact round trips.
pub fn check_squares(p: &Poset) -> SquareMatchReport {
    let order = order_squares(p);
    let chain = chain_squares(p);
    let order_set: std::collections::BTreeSet<_> = order.iter().copied().collect();
    let chain_set: std::collections::BTreeSet<_> = chain.iter().copied().collect();
    let mut failures = Vec::new();

    if order.len() != chain.len() {
        failures.push(format!(
            "square counts differ: {} order vs {} chain",
            order.len(),
            chain.len()
        ));
    }
    for sq in &order {
        match order_to_chain(p, sq) {
            Err(e) => failures.push(format!("{sq:?}: forward map failed: {e}")),
            Ok(c) => {
                if !chain_set.contains(&c) {
                    failures.push(format!("{sq:?} maps to {c:?}, which is not a listed square"));
                } else if chain_to_order(p, &c) != Ok(*sq) {
                    failures.push(format!("{sq:?} does not round-trip through {c:?}"));
                }
            }
        }
    }
    for sq in &chain {
        match chain_to_order(p, sq) {
            Err(e) => failures.push(format!("{sq:?}: backward map failed: {e}")),
            Ok(o) => {
                if !order_set.contains(&o) {
                    failures.push(format!("{sq:?} maps to {o:?}, which is not a listed square"));
                } else if order_to_chain(p, &o) != Ok(*sq) {
                    failures.push(format!("{sq:?} does not round-trip through {o:?}"));
                }
            }
        }
    }

    SquareMatchReport {
        order_count: order.len(),
        chain_count: chain.len(),
        failures,
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
    fn v_square_maps_both_ways() {
        let v = fixtures::v();
        let o = OrderSquare::new(set(&[1]), set(&[2]));
        let c = order_to_chain(&v, &o).unwrap();
        assert_eq!(c, ChainSquare::new(set(&[1]), set(&[2]), ElementSet::EMPTY));
        assert_eq!(chain_to_order(&v, &c), Ok(o));
    }

    #[test]
    fn shared_part_collects_parallel_bottom() {
        // In the 3-antichain, the square on filters {0,2} and {1,2} keeps
        // element 2 in every vertex; it must surface as the shared part.
        let p = fixtures::antichain(3);
        let o = OrderSquare::new(set(&[0, 2]), set(&[1, 2]));
        let c = order_to_chain(&p, &o).unwrap();
        assert_eq!(c, ChainSquare::new(set(&[0]), set(&[1]), set(&[2])));
        assert_eq!(chain_to_order(&p, &c), Ok(o));
    }

    #[test]
    fn two_storey_side_round_trips() {
        // One side of height two: 0 < 1 next to an isolated 2.
        let p = Poset::from_covers(3, &[(0, 1)]).unwrap();
        let c = ChainSquare::new(set(&[2]), set(&[0, 1]), ElementSet::EMPTY);
        let o = chain_to_order(&p, &c).unwrap();
        assert_eq!(o, OrderSquare::new(set(&[2]), set(&[0, 1])));
        assert_eq!(order_to_chain(&p, &o), Ok(c));
    }

    #[test]
    fn maps_reject_invalid_squares() {
        let v = fixtures::v();
        // {0,1,2} and {1} are nested, so one difference is empty.
        let bad = OrderSquare::new(set(&[0, 1, 2]), set(&[1]));
        assert!(matches!(
            order_to_chain(&v, &bad),
            Err(BijectionError::InvalidOrderSquare(_))
        ));
        // Sides 1 and 0 are comparable in V.
        let bad = ChainSquare::new(set(&[0]), set(&[1]), ElementSet::EMPTY);
        assert!(matches!(
            chain_to_order(&v, &bad),
            Err(BijectionError::InvalidChainSquare(_))
        ));
    }

    #[test]
    fn whole_poset_checks() {
        let report = check_squares(&fixtures::v());
        assert_eq!((report.order_count, report.chain_count), (1, 1));
        assert!(report.is_clean());

        // Two-element posets have no proper squares at all.
        let report = check_squares(&fixtures::antichain(2));
        assert_eq!((report.order_count, report.chain_count), (0, 0));
        assert!(report.is_clean());

        for p in [fixtures::x5(), fixtures::diamond(), fixtures::antichain(4)] {
            let report = check_squares(&p);
            assert!(report.is_clean(), "{p:?}: {:?}", report.failures);
            assert_eq!(report.order_count, report.chain_count);
        }
    }
}
