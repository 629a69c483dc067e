//! JSON-facing report types for the command-line tool.
//!
//! Census reports carry the face descriptors in combinatorial form (filter
//! pairs, side/shared splits); oracle reports carry each face as the sorted
//! list of its vertex sets, since the geometry knows nothing finer. Both
//! expose the same flat `f0`/`f1`/`f2_tri`/`f2_sq` counters so the two can
//! be compared field by field.

use crate::bijection;
use crate::census::{self, ChainSquare, FVector2, OrderSquare, Polytope};
use crate::oracle::{self, OracleError};
use crate::poset::Poset;
use crate::set::ElementSet;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

fn as_list(s: ElementSet) -> Vec<usize> {
    s.to_vec()
}

/// One square face in descriptor form. Order-polytope squares are a pair
/// of filters; chain-polytope squares are two sides plus a shared part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SquareEntry {
    Order { filters: [Vec<usize>; 2] },
    Chain { sides: [Vec<usize>; 2], shared: Vec<usize> },
}

impl SquareEntry {
    fn from_order(sq: &OrderSquare) -> SquareEntry {
        SquareEntry::Order { filters: sq.filters.map(as_list) }
    }

    fn from_chain(sq: &ChainSquare) -> SquareEntry {
        SquareEntry::Chain { sides: sq.sides.map(as_list), shared: as_list(sq.shared) }
    }
}

/// Combinatorial census of one polytope of one poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub poset: Poset,
    pub polytope: Polytope,
    #[serde(flatten)]
    pub f_vector: FVector2,
    /// Each triangle as its three vertex sets. Order-polytope triangles
    /// are listed as the filter chain; chain-polytope triangles keep the
    /// orientation with the middle antichain second.
    pub triangles: Vec<[Vec<usize>; 3]>,
    pub squares: Vec<SquareEntry>,
}

pub fn census_report(p: &Poset, which: Polytope) -> CensusReport {
    let f_vector = census::f_vector2(p, which);
    let triangles = match which {
        Polytope::Order => census::order_triangles(p),
        Polytope::Chain => census::chain_triangles(p),
    }
    .into_iter()
    .map(|t| t.map(as_list))
    .collect();
    let squares = match which {
        Polytope::Order => {
            census::order_squares(p).iter().map(SquareEntry::from_order).collect()
        }
        Polytope::Chain => {
            census::chain_squares(p).iter().map(SquareEntry::from_chain).collect()
        }
    };
    CensusReport { poset: p.clone(), polytope: which, f_vector, triangles, squares }
}

/// Geometric recount of the same quantities. `source` is always
/// `"oracle"` so mixed report streams stay distinguishable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub source: String,
    pub poset: Poset,
    pub polytope: Polytope,
    #[serde(flatten)]
    pub f_vector: FVector2,
    /// Each face as the sorted list of its vertex sets.
    pub triangles: Vec<Vec<Vec<usize>>>,
    pub squares: Vec<Vec<Vec<usize>>>,
}

pub fn oracle_report(p: &Poset, which: Polytope) -> Result<OracleReport, OracleError> {
    let (sys, verts) = match which {
        Polytope::Order => (oracle::order_facets(p), oracle::order_vertices(p)),
        Polytope::Chain => (oracle::chain_facets(p), oracle::chain_vertices(p)),
    };
    let f_vector = oracle::f_vector_low(&sys, &verts)?;
    let support = |id: usize| -> Vec<usize> {
        verts[id].iter().enumerate().filter(|&(_, &x)| x == 1).map(|(i, _)| i).collect()
    };
    let mut triangles = Vec::new();
    let mut squares = Vec::new();
    for face in oracle::two_faces(&sys, &verts)? {
        let mut sets: Vec<Vec<usize>> = face.vertex_ids.iter().map(|&i| support(i)).collect();
        sets.sort();
        match sets.len() {
            3 => triangles.push(sets),
            _ => squares.push(sets),
        }
    }
    triangles.sort();
    squares.sort();
    Ok(OracleReport {
        source: "oracle".to_owned(),
        poset: p.clone(),
        polytope: which,
        f_vector,
        triangles,
        squares,
    })
}

/// Census and oracle side by side, with a verdict. The verdict compares
/// the counts and the faces themselves (as vertex-set families), so a
/// census that got the totals right by luck still fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusWithOracle {
    pub census: CensusReport,
    pub oracle: OracleReport,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// A face family: each face as its sorted list of vertex sets.
type FaceFamily = BTreeSet<Vec<Vec<usize>>>;

fn sorted_family(faces: &[Vec<Vec<usize>>]) -> FaceFamily {
    faces.iter().cloned().collect()
}

/// The census's faces, flattened to sorted vertex-set families in the
/// oracle's terms.
fn census_face_families(p: &Poset, which: Polytope) -> (FaceFamily, FaceFamily) {
    let triangle_sets = match which {
        Polytope::Order => census::order_triangles(p),
        Polytope::Chain => census::chain_triangles(p),
    };
    let triangles = triangle_sets
        .into_iter()
        .map(|t| {
            let mut sets = t.map(as_list).to_vec();
            sets.sort();
            sets
        })
        .collect();
    let square_sets: Vec<[ElementSet; 4]> = match which {
        Polytope::Order => census::order_squares(p).iter().map(OrderSquare::vertices).collect(),
        Polytope::Chain => {
            census::chain_squares(p).iter().map(|sq| sq.vertices(p)).collect()
        }
    };
    let squares = square_sets
        .into_iter()
        .map(|t| {
            let mut sets = t.map(as_list).to_vec();
            sets.sort();
            sets
        })
        .collect();
    (triangles, squares)
}

pub fn census_with_oracle(
    p: &Poset,
    which: Polytope,
) -> Result<CensusWithOracle, OracleError> {
    let census = census_report(p, which);
    let oracle = oracle_report(p, which)?;
    let (tri, sq) = census_face_families(p, which);
    let matches = census.f_vector == oracle.f_vector
        && tri == sorted_family(&oracle.triangles)
        && sq == sorted_family(&oracle.squares);
    Ok(CensusWithOracle { census, oracle, matches })
}

/// One matched pair of square faces under the order→chain map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchedSquares {
    pub o_square: SquareEntry,
    pub c_square: SquareEntry,
}

/// The square correspondence for one poset: counts on both sides, the
/// matched pairs, and any round-trip failures (which a correct
/// implementation never produces).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionReport {
    pub poset: Poset,
    pub count_o: usize,
    pub count_c: usize,
    pub pairs: Vec<MatchedSquares>,
    pub roundtrip_failures: Vec<String>,
}

impl BijectionReport {
    pub fn is_clean(&self) -> bool {
        self.count_o == self.count_c
            && self.pairs.len() == self.count_o
            && self.roundtrip_failures.is_empty()
    }
}

pub fn bijection_report(p: &Poset) -> BijectionReport {
    let checked = bijection::check_squares(p);
    let pairs = census::order_squares(p)
        .iter()
        .filter_map(|o| {
            let c = bijection::order_to_chain(p, o).ok()?;
            Some(MatchedSquares {
                o_square: SquareEntry::from_order(o),
                c_square: SquareEntry::from_chain(&c),
            })
        })
        .collect();
    BijectionReport {
        poset: p.clone(),
        count_o: checked.order_count,
        count_c: checked.chain_count,
        pairs,
        roundtrip_failures: checked.failures,
    }
}
