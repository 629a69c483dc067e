//! Sweep every poset up to a size bound through every correctness
//! property this crate claims, in parallel, and collect counterexamples.
//!
//! The properties fall into three groups: count identities between the two
//! polytopes (equal vertex, edge, and square counts; the triangle
//! inequality with its exactness criterion), internal cross-checks of the
//! combinatorial machinery (parametrized triangle enumeration, removal
//! recursions, supermodularity, the square correspondence, the edge
//! dichotomy), and agreement with the exact geometric oracle (face-by-face
//! for small sizes, facet counts everywhere).

use crate::bijection;
use crate::census::{self, Polytope};
use crate::gen;
use crate::oracle::{self, FacetSystem, LatticePoint};
use crate::poset::Poset;
use crate::report;
use crate::set::{all_subsets, ElementSet};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};

/// What to sweep and how hard.
#[derive(Clone, Copy, Debug)]
pub struct SweepOptions {
    /// Check every poset with between 1 and this many elements.
    pub max_n: usize,
    /// Run the geometric face enumeration only up to this size; it is the
    /// by far most expensive check.
    pub oracle_max_n: usize,
    /// Worker threads. Results are merged in poset order, so the report
    /// does not depend on this.
    pub jobs: usize,
    /// Deliberately misreport one census count, to prove the harness
    /// catches a broken census. Exists for the self-test only.
    pub inject_fault: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { max_n: 6, oracle_max_n: 5, jobs: 1, inject_fault: false }
    }
}

/// How often each property was checked and how often it failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub poset: Poset,
    pub property: String,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n_range: [usize; 2],
    pub posets_checked: usize,
    pub checks: Vec<CheckTally>,
    pub counterexamples: Vec<Counterexample>,
    /// Oddities that are not property violations (e.g. a listed inequality
    /// turning out redundant). Expected to stay empty.
    pub warnings: Vec<String>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty() && self.warnings.is_empty()
    }
}

const CHECK_NAMES: [&str; 12] = [
    "f0_f1_equal",
    "square_count_equal",
    "triangle_inequality",
    "square_bijection",
    "triangle_parametrization",
    "edge_dichotomy",
    "recursion_identities",
    "supermodularity",
    "vertex_audit",
    "oracle_agreement",
    "face_geometry",
    "facet_counts",
];

struct CheckOutcome {
    name: &'static str,
    failure: Option<String>,
}

/// Runs the full sweep and aggregates the outcome.
pub fn run_sweep(opts: &SweepOptions) -> VerificationReport {
    let mut posets = Vec::new();
    for n in 1..=opts.max_n {
        let batch = gen::all_posets_bounded(n, opts.max_n)
            .expect("n stays within the requested bound");
        posets.extend(batch);
    }
    let jobs = opts.jobs.max(1);
    let next = AtomicUsize::new(0);
    let mut per_poset: Vec<(usize, Vec<CheckOutcome>, Vec<String>)> =
        Vec::with_capacity(posets.len());
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for _ in 0..jobs {
            handles.push(scope.spawn(|| {
                let mut local = Vec::new();
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(p) = posets.get(i) else { break };
                    let mut warnings = Vec::new();
                    local.push((i, run_checks(p, opts, &mut warnings), warnings));
                }
                local
            }));
        }
        for handle in handles {
            per_poset.extend(handle.join().expect("sweep worker panicked"));
        }
    });
    per_poset.sort_by_key(|&(i, _, _)| i);

    let mut checks: Vec<CheckTally> = CHECK_NAMES
        .iter()
        .map(|&name| CheckTally { name: name.to_owned(), passed: 0, failed: 0 })
        .collect();
    let mut counterexamples = Vec::new();
    let mut warnings = Vec::new();
    for (i, outcomes, poset_warnings) in per_poset {
        warnings.extend(poset_warnings);
        for outcome in outcomes {
            let tally = checks
                .iter_mut()
                .find(|t| t.name == outcome.name)
                .expect("every outcome uses a registered check name");
            match outcome.failure {
                None => tally.passed += 1,
                Some(details) => {
                    tally.failed += 1;
                    counterexamples.push(Counterexample {
                        poset: posets[i].clone(),
                        property: outcome.name.to_owned(),
                        details,
                    });
                }
            }
        }
    }
    VerificationReport {
        n_range: [1, opts.max_n],
        posets_checked: posets.len(),
        checks,
        counterexamples,
        warnings,
    }
}

fn run_checks(p: &Poset, opts: &SweepOptions, warnings: &mut Vec<String>) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let mut record = |name: &'static str, failure: Option<String>| {
        out.push(CheckOutcome { name, failure });
    };

    let o = census::f_vector2(p, Polytope::Order);
    let c = census::f_vector2(p, Polytope::Chain);

    record(
        "f0_f1_equal",
        (o.f0 != c.f0 || o.f1 != c.f1).then(|| {
            format!("order (f0, f1) = ({}, {}) vs chain ({}, {})", o.f0, o.f1, c.f0, c.f1)
        }),
    );

    // Self-test hook: misreport the order-polytope square count so the
    // harness has something to catch.
    let o_squares = o.f2_sq + usize::from(opts.inject_fault);
    record(
        "square_count_equal",
        (o_squares != c.f2_sq)
            .then(|| format!("order squares {} vs chain squares {}", o_squares, c.f2_sq)),
    );

    record("triangle_inequality", check_triangle_inequality(p, o.f2_tri, c.f2_tri));
    record("square_bijection", check_square_bijection(p, o.f2_sq));
    record("triangle_parametrization", check_triangle_parametrization(p, o.f2_tri, c.f2_tri));
    record("edge_dichotomy", check_edge_dichotomy(p));

    let instances = sample_evenly(recursion_instances(p), 12);
    record("recursion_identities", check_recursions(&instances));
    record("supermodularity", check_supermodularity(&instances));

    record("vertex_audit", check_vertex_audit(p));
    if p.n() <= opts.oracle_max_n {
        record("oracle_agreement", check_oracle_agreement(p));
        record("face_geometry", face_geometry_failure(p));
    }
    record("facet_counts", check_facet_counts(p, warnings));
    out
}

// ---------------------------------------------------------------------------
// Individual checks; `None` means pass.

fn check_triangle_inequality(p: &Poset, o_tri: usize, c_tri: usize) -> Option<String> {
    if o_tri > c_tri {
        return Some(format!("order triangles {} exceed chain triangles {}", o_tri, c_tri));
    }
    let x_free = p.is_x_free();
    if (o_tri == c_tri) != x_free {
        return Some(format!(
            "triangle counts {} vs {}, but poset is {}",
            o_tri,
            c_tri,
            if x_free { "x-free" } else { "not x-free" }
        ));
    }
    None
}

fn check_square_bijection(p: &Poset, expected: usize) -> Option<String> {
    let matched = bijection::check_squares(p);
    if !matched.is_clean() {
        return Some(format!(
            "counts {} vs {}, failures: {:?}",
            matched.order_count, matched.chain_count, matched.failures
        ));
    }
    if matched.order_count != expected {
        return Some(format!(
            "bijection saw {} order squares, census {}",
            matched.order_count, expected
        ));
    }
    None
}

fn check_triangle_parametrization(p: &Poset, o_tri: usize, c_tri: usize) -> Option<String> {
    let mut direct_o = census::order_triangles(p);
    direct_o.sort();
    let mut expanded_o: Vec<_> = census::order_triangle_params(p)
        .iter()
        .map(|t| census::expand_order_triangle(p, t))
        .collect();
    expanded_o.sort();
    let distinct = expanded_o.iter().collect::<BTreeSet<_>>().len();
    if distinct != expanded_o.len() {
        return Some("two order-triangle parameters expand to the same triangle".to_owned());
    }
    if expanded_o != direct_o {
        return Some(format!(
            "order-triangle parametrization yields {} triangles, direct enumeration {}",
            expanded_o.len(),
            direct_o.len()
        ));
    }

    let mut direct_c = census::chain_triangles(p);
    direct_c.sort();
    let mut expanded_c: Vec<_> = census::chain_triangle_params(p)
        .iter()
        .map(|t| census::expand_chain_triangle(p, t))
        .collect();
    expanded_c.sort();
    let distinct = expanded_c.iter().collect::<BTreeSet<_>>().len();
    if distinct != expanded_c.len() {
        return Some("two chain-triangle parameters expand to the same triangle".to_owned());
    }
    if expanded_c != direct_c {
        return Some(format!(
            "chain-triangle parametrization yields {} triangles, direct enumeration {}",
            expanded_c.len(),
            direct_c.len()
        ));
    }

    for (kind, expected) in [(Polytope::Order, o_tri), (Polytope::Chain, c_tri)] {
        let by_support = census::triangle_count_by_support(p, kind);
        if by_support != expected {
            return Some(format!(
                "{:?}-triangle count by support {} vs direct {}",
                kind, by_support, expected
            ));
        }
    }
    None
}

/// Every chain-polytope edge pair, up to swapping, either differs by one
/// added element or has all comparabilities point the same way.
fn check_edge_dichotomy(p: &Poset) -> Option<String> {
    let grows_by_one =
        |a: ElementSet, b: ElementSet| a.is_subset(b) && (b - a).len() == 1;
    let tilts_up = |a: ElementSet, b: ElementSet| {
        !a.is_subset(b)
            && a.iter().all(|x| {
                b.iter().all(|y| x == y || !p.comparable(x, y) || p.lt(x, y))
            })
    };
    for (a, b) in census::chain_edges(p) {
        let ok = grows_by_one(a, b)
            || grows_by_one(b, a)
            || tilts_up(a, b)
            || tilts_up(b, a);
        if !ok {
            return Some(format!("edge ({:?}, {:?}) fits neither case", a, b));
        }
    }
    None
}

/// A subposet, an interior element, and boundary traces on which the
/// removal recursions are defined.
pub struct RecursionInstance {
    pub sub: Poset,
    pub on_max: ElementSet,
    pub on_min: ElementSet,
    pub interior: usize,
}

/// Every valid recursion instance drawn from the connected induced
/// subposets of `p`: the interior element and the two boundary traces must
/// be pairwise parallel.
pub fn recursion_instances(p: &Poset) -> Vec<RecursionInstance> {
    let mut out = Vec::new();
    for s in all_subsets(p.n()) {
        if s.len() < 3 {
            continue; // an interior element needs something above and below
        }
        let del = p.delete(p.full_set() - s);
        out.extend(recursion_instances_on(&del.poset));
    }
    out
}

/// The valid recursion instances on `q` itself (empty when `q` is
/// disconnected or has no interior element).
pub fn recursion_instances_on(q: &Poset) -> Vec<RecursionInstance> {
    let mut out = Vec::new();
    if !q.is_connected(q.full_set()) {
        return out;
    }
    let maxima = q.maximals();
    let minima = q.minimals();
    for e in 0..q.n() {
        if maxima.contains(e) || minima.contains(e) {
            continue;
        }
        let eset = ElementSet::singleton(e);
        for on_max in maxima.subsets() {
            if !q.sets_parallel(eset, on_max) {
                continue;
            }
            for on_min in minima.subsets() {
                if !q.sets_parallel(eset, on_min) || !q.sets_parallel(on_max, on_min) {
                    continue;
                }
                out.push(RecursionInstance { sub: q.clone(), on_max, on_min, interior: e });
            }
        }
    }
    out
}

/// Deterministic sample: keep every item when at most `cap`, otherwise an
/// evenly strided selection.
fn sample_evenly<T>(items: Vec<T>, cap: usize) -> Vec<T> {
    let total = items.len();
    if total <= cap {
        return items;
    }
    let wanted: BTreeSet<usize> = (0..cap).map(|i| i * total / cap).collect();
    items
        .into_iter()
        .enumerate()
        .filter_map(|(i, item)| wanted.contains(&i).then_some(item))
        .collect()
}

fn check_recursions(instances: &[RecursionInstance]) -> Option<String> {
    for inst in instances {
        let q = &inst.sub;
        let direct = census::biconnected_antichain_count(q, inst.on_max, inst.on_min);
        let recursive = census::biconnected_antichain_count_recursive(
            q,
            inst.on_max,
            inst.on_min,
            inst.interior,
        );
        if direct != recursive {
            return Some(format!(
                "antichain count {:?} vs recursive {:?} on {:?} at element {}",
                direct, recursive, q, inst.interior
            ));
        }
        let direct = census::biconnected_filter_count(q, inst.on_max, inst.on_min);
        let recursive = census::biconnected_filter_count_recursive(
            q,
            inst.on_max,
            inst.on_min,
            inst.interior,
        );
        if direct != recursive {
            return Some(format!(
                "filter count {:?} vs recursive {:?} on {:?} at element {}",
                direct, recursive, q, inst.interior
            ));
        }
    }
    None
}

fn check_supermodularity(instances: &[RecursionInstance]) -> Option<String> {
    for inst in instances {
        match census::antichain_count_supermodularity(
            &inst.sub,
            inst.on_max,
            inst.on_min,
            inst.interior,
        ) {
            Ok(check) if check.holds() => {}
            Ok(check) => {
                return Some(format!(
                    "{:?} on {:?} at element {}",
                    check, inst.sub, inst.interior
                ));
            }
            Err(e) => {
                return Some(format!(
                    "supermodularity undefined on {:?} at element {}: {}",
                    inst.sub, inst.interior, e
                ));
            }
        }
    }
    None
}

fn check_vertex_audit(p: &Poset) -> Option<String> {
    if let Err(e) = oracle::verify_vertices(&oracle::order_facets(p), &oracle::order_vertices(p)) {
        return Some(format!("order polytope: {}", e));
    }
    if let Err(e) = oracle::verify_vertices(&oracle::chain_facets(p), &oracle::chain_vertices(p)) {
        return Some(format!("chain polytope: {}", e));
    }
    None
}

fn check_oracle_agreement(p: &Poset) -> Option<String> {
    for which in [Polytope::Order, Polytope::Chain] {
        match report::census_with_oracle(p, which) {
            Ok(combined) if combined.matches => {}
            Ok(combined) => {
                return Some(format!(
                    "{:?}: census {:?} vs oracle {:?}",
                    which, combined.census.f_vector, combined.oracle.f_vector
                ));
            }
            Err(e) => return Some(format!("{:?}: oracle failed: {}", which, e)),
        }
    }
    None
}

/// Containment shape of four distinct sets, as the list of strict-subset
/// pairs (i, j).
pub fn containment_pairs(sets: &[ElementSet; 4]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i != j && sets[i] != sets[j] && sets[i].is_subset(sets[j]) {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Bottom, two incomparable middles, top — with the bottom the middles'
/// intersection and the top their union.
pub fn is_containment_diamond(sets: &[ElementSet; 4]) -> bool {
    let pairs = containment_pairs(sets);
    if pairs.len() != 5 {
        return false;
    }
    let below = |i: usize| pairs.iter().filter(|&&(a, _)| a == i).count();
    let Some(bottom) = (0..4).find(|&i| below(i) == 3) else { return false };
    let Some(top) = (0..4).find(|&i| pairs.iter().filter(|&&(_, b)| b == i).count() == 3) else {
        return false;
    };
    let middles: Vec<usize> = (0..4).filter(|&i| i != bottom && i != top).collect();
    let [m1, m2] = middles[..] else { return false };
    sets[bottom] == sets[m1] & sets[m2] && sets[top] == sets[m1] | sets[m2]
}

/// Two disjoint two-element chains with no cross containments.
pub fn is_two_disjoint_chains(sets: &[ElementSet; 4]) -> bool {
    let pairs = containment_pairs(sets);
    let [(a, b), (c, d)] = pairs[..] else { return false };
    a != c && a != d && b != c && b != d
}

fn square_vertex_sets(verts: &[LatticePoint], ids: &[usize]) -> [ElementSet; 4] {
    let mut sets = [ElementSet::EMPTY; 4];
    for (slot, &id) in sets.iter_mut().zip(ids) {
        *slot = verts[id]
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == 1)
            .map(|(i, _)| i)
            .collect();
    }
    sets
}

/// Structural audit of every geometric 2-face: squares must have honest
/// diagonals, order-polytope squares must form a containment diamond,
/// chain-polytope squares one of the three admissible shapes, and every
/// triangle must be recognizable by the combinatorial characterization.
/// Returns a description of the first violation, if any.
pub fn face_geometry_failure(p: &Poset) -> Option<String> {
    for which in [Polytope::Order, Polytope::Chain] {
        let (sys, verts): (FacetSystem, Vec<LatticePoint>) = match which {
            Polytope::Order => (oracle::order_facets(p), oracle::order_vertices(p)),
            Polytope::Chain => (oracle::chain_facets(p), oracle::chain_vertices(p)),
        };
        let faces = match oracle::two_faces(&sys, &verts) {
            Ok(faces) => faces,
            Err(e) => return Some(format!("{:?}: {}", which, e)),
        };
        for face in faces {
            let ids = &face.vertex_ids;
            if ids.len() == 4 {
                match oracle::check_square_diagonals(&sys, &verts, &face) {
                    Ok(true) => {}
                    Ok(false) => {
                        return Some(format!("{:?}: square {:?} has bad diagonals", which, ids));
                    }
                    Err(e) => return Some(format!("{:?}: {}", which, e)),
                }
                let sets = square_vertex_sets(&verts, ids);
                let shape_ok = match which {
                    Polytope::Order => is_containment_diamond(&sets),
                    Polytope::Chain => {
                        is_containment_diamond(&sets)
                            || is_two_disjoint_chains(&sets)
                            || containment_pairs(&sets).is_empty()
                    }
                };
                if !shape_ok {
                    return Some(format!(
                        "{:?}: square {:?} has containment shape {:?}",
                        which,
                        sets,
                        containment_pairs(&sets)
                    ));
                }
            } else {
                let sets: Vec<ElementSet> = square_vertex_sets(&verts, &[ids[0], ids[1], ids[2]])
                    [..3]
                    .to_vec();
                let recognized = match which {
                    Polytope::Order => {
                        let mut chain = sets.clone();
                        chain.sort();
                        chain[0].is_subset(chain[1])
                            && chain[1].is_subset(chain[2])
                            && p.is_connected(chain[1] - chain[0])
                            && p.is_connected(chain[2] - chain[1])
                            && p.is_connected(chain[2] - chain[0])
                    }
                    Polytope::Chain => {
                        census::normalize_chain_triangle(p, [sets[0], sets[1], sets[2]]).is_ok()
                    }
                };
                if !recognized {
                    return Some(format!(
                        "{:?}: triangle {:?} is not of the characterized form",
                        which, sets
                    ));
                }
            }
        }
    }
    None
}

fn check_facet_counts(p: &Poset, warnings: &mut Vec<String>) -> Option<String> {
    let mut counts = [0usize; 2];
    for (slot, which) in counts.iter_mut().zip([Polytope::Order, Polytope::Chain]) {
        let (sys, verts) = match which {
            Polytope::Order => (oracle::order_facets(p), oracle::order_vertices(p)),
            Polytope::Chain => (oracle::chain_facets(p), oracle::chain_vertices(p)),
        };
        match oracle::facet_info(&sys, &verts) {
            Ok(info) => {
                if !info.non_facets.is_empty() {
                    warnings.push(format!(
                        "{:?} polytope of {:?}: inequalities {:?} are not facets",
                        which, p, info.non_facets
                    ));
                }
                *slot = info.facet_count;
            }
            Err(e) => return Some(format!("{:?}: {}", which, e)),
        }
    }
    let [o_facets, c_facets] = counts;
    if o_facets > c_facets {
        return Some(format!("order facets {} exceed chain facets {}", o_facets, c_facets));
    }
    let x_free = p.is_x_free();
    if (o_facets == c_facets) != x_free {
        return Some(format!(
            "facet counts {} vs {}, but poset is {}",
            o_facets,
            c_facets,
            if x_free { "x-free" } else { "not x-free" }
        ));
    }
    None
}
