//! Poset constructors: named shapes, seeded random posets, and exhaustive
//! enumeration up to isomorphism.

use crate::poset::Poset;
use crate::set::ElementSet;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Largest ground set the exhaustive enumeration accepts by default; the
/// CLI can override it through `POLYFACE_MAX_N`.
pub const DEFAULT_MAX_N: usize = 7;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("unknown poset name {0:?}")]
    UnknownName(String),
    #[error("poset {0:?} needs a size argument")]
    MissingSize(String),
    #[error("poset {0:?} does not take a size argument")]
    UnexpectedSize(String),
    #[error("enumeration over {n} elements exceeds the bound of {bound}")]
    BeyondBound { n: usize, bound: usize },
}

/// The chain `0 < 1 < .. < k-1`.
pub fn chain(k: usize) -> Poset {
    let covers: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    Poset::from_covers(k, &covers).unwrap()
}

/// `k` pairwise incomparable elements.
pub fn antichain(k: usize) -> Poset {
    Poset::antichain(k)
}

/// One bottom element under two incomparable tops: `0 < 1`, `0 < 2`.
pub fn v() -> Poset {
    Poset::from_covers(3, &[(0, 1), (0, 2)]).unwrap()
}

/// Two incomparable bottoms under one top: `0 < 2`, `1 < 2`.
pub fn lambda() -> Poset {
    Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap()
}

/// Two incomparable bottoms and two incomparable tops joined through a
/// middle element — the smallest poset that is not X-free.
pub fn x5() -> Poset {
    Poset::from_covers(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]).unwrap()
}

/// `0 < {1, 2} < 3` with `1` and `2` incomparable.
pub fn diamond() -> Poset {
    Poset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
}

/// Looks up a named poset; `chain` and `antichain` require `k`.
pub fn named(name: &str, k: Option<usize>) -> Result<Poset, GenError> {
    let sized = |f: fn(usize) -> Poset| match k {
        Some(k) => Ok(f(k)),
        None => Err(GenError::MissingSize(name.to_string())),
    };
    let fixed = |p: Poset| match k {
        None => Ok(p),
        Some(_) => Err(GenError::UnexpectedSize(name.to_string())),
    };
    match name {
        "chain" => sized(chain),
        "antichain" => sized(antichain),
        "v" => fixed(v()),
        "lambda" => fixed(lambda()),
        "x5" => fixed(x5()),
        "diamond" => fixed(diamond()),
        _ => Err(GenError::UnknownName(name.to_string())),
    }
}

/// A reproducible random poset: every pair `i < j` (as integers) is related
/// with probability `density`, then the relation is transitively closed.
/// Density 0 yields the antichain, density 1 the chain.
pub fn random(n: usize, density: f64, seed: u64) -> Poset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut covers = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random::<f64>() < density {
                covers.push((i, j));
            }
        }
    }
    Poset::from_covers(n, &covers).unwrap()
}

/// A label-independent fingerprint of a poset: two posets are isomorphic
/// exactly when their canonical forms are equal. `Ord` on the form gives
/// the deterministic output order of [`all_posets`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    /// Strictly-upper-triangular relation bits of the minimal relabelling:
    /// the bit for `(i, j)` comes before `(i', j')` when `(j, i) < (j', i')`
    /// lexicographically, and earlier bits are more significant.
    bits: u64,
}

impl CanonicalForm {
    /// Rebuilds the canonically labelled poset the form encodes.
    pub fn to_poset(&self) -> Poset {
        let total = self.n * self.n.saturating_sub(1) / 2;
        let mut covers = Vec::new();
        let mut idx = 0;
        for j in 1..self.n {
            for i in 0..j {
                idx += 1;
                if self.bits >> (total - idx) & 1 == 1 {
                    covers.push((i, j));
                }
            }
        }
        Poset::from_covers(self.n, &covers).unwrap()
    }
}

/// Computes the canonical form by searching for the relabelling that
/// minimises the relation's bit encoding. Only labelings that respect the
/// order (linear extensions) can be minimal, so the search walks those,
/// pruning any branch whose partial encoding already exceeds the best
/// complete one. Earlier-placed labels own the most significant bits, which
/// is what makes prefix pruning sound.
pub fn canonical_form(p: &Poset) -> CanonicalForm {
    assert!(p.n() <= 11, "canonical form encoding holds at most 55 relation bits");
    let mut search = CanonicalSearch {
        p,
        total_bits: p.n() * p.n().saturating_sub(1) / 2,
        chosen: Vec::with_capacity(p.n()),
        used: ElementSet::EMPTY,
        best: None,
    };
    search.run(0, 0);
    CanonicalForm {
        n: p.n(),
        bits: search.best.unwrap_or(0),
    }
}

struct CanonicalSearch<'a> {
    p: &'a Poset,
    total_bits: usize,
    chosen: Vec<usize>,
    used: ElementSet,
    best: Option<u64>,
}

impl CanonicalSearch<'_> {
    fn run(&mut self, depth: usize, prefix: u64) {
        let n = self.p.n();
        if depth == n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let bits_after = depth * (depth + 1) / 2; // bits decided once label `depth` is placed
        let remaining = self.p.full_set() - self.used;
        for x in remaining.iter() {
            // Candidates must be minimal among the unplaced elements so the
            // relabelling is a linear extension.
            if !(self.p.down_set(x) & remaining).is_empty() {
                continue;
            }
            let mut column = 0u64;
            for &c in &self.chosen {
                column = column << 1 | u64::from(self.p.lt(c, x));
            }
            let next_prefix = prefix << depth | column;
            if let Some(b) = self.best {
                if next_prefix > b >> (self.total_bits - bits_after) {
                    continue;
                }
            }
            self.chosen.push(x);
            self.used.insert(x);
            self.run(depth + 1, next_prefix);
            self.used.remove(x);
            self.chosen.pop();
        }
    }
}

pub fn are_isomorphic(a: &Poset, b: &Poset) -> bool {
    a.n() == b.n() && canonical_form(a) == canonical_form(b)
}

/// Every poset on `n` elements up to isomorphism, canonically labelled and
/// sorted by canonical form. Enumerates relations that are transitively
/// closed and compatible with the integer order — every step extends by a
/// new top element whose down-set is an ideal of what was built so far —
/// then dedupes by canonical form.
pub fn all_posets(n: usize) -> Result<Vec<Poset>, GenError> {
    all_posets_bounded(n, DEFAULT_MAX_N)
}

/// [`all_posets`] with an explicit size bound.
pub fn all_posets_bounded(n: usize, bound: usize) -> Result<Vec<Poset>, GenError> {
    if n > bound {
        return Err(GenError::BeyondBound { n, bound });
    }
    let mut forms = std::collections::BTreeSet::new();
    let mut down_sets: Vec<ElementSet> = Vec::with_capacity(n);
    extend(n, &mut down_sets, &mut forms);
    Ok(forms.iter().map(CanonicalForm::to_poset).collect())
}

fn extend(n: usize, down_sets: &mut Vec<ElementSet>, forms: &mut std::collections::BTreeSet<CanonicalForm>) {
    let j = down_sets.len();
    if j == n {
        let up = up_table_from_down_sets(n, down_sets);
        forms.insert(canonical_form(&Poset::from_strict_up(n, up)));
        return;
    }
    // Any ideal of the poset built so far can serve as the down-set of the
    // next element; transitivity then holds by construction.
    for d in crate::set::all_subsets(j) {
        if d.iter().all(|x| down_sets[x].is_subset(d)) {
            down_sets.push(d);
            extend(n, down_sets, forms);
            down_sets.pop();
        }
    }
}

fn up_table_from_down_sets(n: usize, down_sets: &[ElementSet]) -> Vec<ElementSet> {
    let mut up = vec![ElementSet::EMPTY; n];
    for (j, d) in down_sets.iter().enumerate() {
        for i in d.iter() {
            up[i].insert(j);
        }
    }
    up
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_shapes() {
        assert_eq!(chain(3).covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(antichain(4).covers(), vec![]);
        assert_eq!(x5().covers(), vec![(0, 2), (1, 2), (2, 3), (2, 4)]);
        assert_eq!(named("chain", Some(3)), Ok(chain(3)));
        assert_eq!(named("x5", None), Ok(x5()));
        assert!(matches!(named("chain", None), Err(GenError::MissingSize(_))));
        assert!(matches!(named("x5", Some(2)), Err(GenError::UnexpectedSize(_))));
        assert!(matches!(named("zigzag", None), Err(GenError::UnknownName(_))));
    }

    #[test]
    fn random_density_extremes() {
        assert_eq!(random(5, 0.0, 7), antichain(5));
        assert_eq!(random(5, 1.0, 7), chain(5));
        // Same seed, same poset; different seed should eventually differ.
        assert_eq!(random(6, 0.4, 42), random(6, 0.4, 42));
        assert!((0..20).any(|s| random(6, 0.4, s) != random(6, 0.4, s + 100)));
    }

    #[test]
    fn canonical_form_detects_isomorphism() {
        assert!(are_isomorphic(&v().opposite(), &lambda()));
        assert!(!are_isomorphic(&v(), &lambda()));
        assert!(!are_isomorphic(&v(), &chain(3)));
        assert!(are_isomorphic(&x5(), &x5().opposite()));

        // Relabelling never changes the form: compare against a manual
        // relabelling of the diamond.
        let relabelled = Poset::from_covers(4, &[(3, 1), (3, 2), (1, 0), (2, 0)]).unwrap();
        assert!(are_isomorphic(&diamond(), &relabelled));
    }

    #[test]
    fn canonical_form_round_trips() {
        for p in [v(), lambda(), x5(), diamond(), chain(4), antichain(4)] {
            let form = canonical_form(&p);
            let rebuilt = form.to_poset();
            assert_eq!(canonical_form(&rebuilt), form);
            assert_eq!(rebuilt.n(), p.n());
        }
    }

    #[test]
    fn poset_counts_small() {
        let expected = [1usize, 1, 2, 5, 16, 63];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(all_posets(n).unwrap().len(), count, "count for n = {n}");
        }
    }

    #[test]
    fn poset_count_n6() {
        assert_eq!(all_posets(6).unwrap().len(), 318);
    }

    #[test]
    fn poset_count_n7() {
        assert_eq!(all_posets(7).unwrap().len(), 2045);
    }

    #[test]
    fn enumeration_respects_bound() {
        assert_eq!(
            all_posets_bounded(6, 5),
            Err(GenError::BeyondBound { n: 6, bound: 5 })
        );
        assert!(all_posets_bounded(3, 3).is_ok());
    }

    #[test]
    fn enumeration_is_canonical_and_sorted() {
        let posets = all_posets(4).unwrap();
        let forms: Vec<CanonicalForm> = posets.iter().map(canonical_form).collect();
        let mut sorted = forms.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(forms, sorted, "output must be sorted and duplicate-free");
    }
}
