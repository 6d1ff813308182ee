//! Complex corpora for sweeps: exhaustive enumeration of the complexes on
//! a small vertex set, the standard generator family, and deterministic
//! pseudo-random complexes.

use crate::complex::{generate, Generator, SimplicialComplex};

const LETTERS: [&str; 12] = ["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"];

fn subset_labels(mask: u32) -> Vec<&'static str> {
    (0..LETTERS.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| LETTERS[i])
        .collect()
}

/// Every simplicial complex on at most `n` labeled vertices, as the
/// downward-closed families of nonempty subsets of an `n`-element set.
/// The count grows like the Dedekind numbers: 7581 complexes for `n = 5`.
/// Intended for `n <= 5`; use [`random_complex`] beyond that.
pub fn enumerate_complexes(n: usize) -> Vec<SimplicialComplex> {
    assert!(
        n <= 5,
        "exhaustive enumeration is only sensible up to 5 vertices"
    );
    // nonempty subsets ordered by size then value, so that every proper
    // subset of a set precedes it
    let mut subsets: Vec<u32> = (1..(1u32 << n)).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    let position: std::collections::BTreeMap<u32, usize> =
        subsets.iter().enumerate().map(|(i, &s)| (s, i)).collect();

    let mut out = Vec::new();
    let mut chosen: Vec<u32> = Vec::new();
    fn visit(
        idx: usize,
        subsets: &[u32],
        position: &std::collections::BTreeMap<u32, usize>,
        chosen: &mut Vec<u32>,
        chosen_mask: &mut Vec<bool>,
        out: &mut Vec<SimplicialComplex>,
    ) {
        if idx == subsets.len() {
            let facets: Vec<Vec<&str>> = chosen.iter().map(|&s| subset_labels(s)).collect();
            out.push(
                SimplicialComplex::from_facet_labels(&facets)
                    .expect("enumerated family is well formed"),
            );
            return;
        }
        // exclude
        visit(idx + 1, subsets, position, chosen, chosen_mask, out);
        // include, when downward closed
        let s = subsets[idx];
        let closed = (0..32)
            .filter(|i| s >> i & 1 == 1)
            .map(|i| s & !(1 << i))
            .filter(|&face| face != 0)
            .all(|face| chosen_mask[position[&face]]);
        if closed {
            chosen.push(s);
            chosen_mask[idx] = true;
            visit(idx + 1, subsets, position, chosen, chosen_mask, out);
            chosen_mask[idx] = false;
            chosen.pop();
        }
    }
    let mut chosen_mask = vec![false; subsets.len()];
    visit(
        0,
        &subsets,
        &position,
        &mut chosen,
        &mut chosen_mask,
        &mut out,
    );
    out
}

/// The generator family used by sweeps: simplices, simplex boundaries,
/// cycles, point sets, the projective plane, and barycentric subdivisions,
/// everything of dimension at most three.
pub fn generator_corpus() -> Vec<(String, SimplicialComplex)> {
    let mut specs: Vec<String> = Vec::new();
    for n in -1..=3 {
        specs.push(format!("simplex({n})"));
    }
    for n in 0..=4 {
        specs.push(format!("simplex_boundary({n})"));
    }
    for k in 3..=6 {
        specs.push(format!("cycle({k})"));
    }
    for m in 1..=4 {
        specs.push(format!("points({m})"));
    }
    specs.push("rp2_six".to_string());
    for inner in [
        "simplex(1)",
        "simplex(2)",
        "simplex_boundary(2)",
        "cycle(4)",
        "rp2_six",
    ] {
        specs.push(format!("barycentric({inner})"));
    }
    specs
        .into_iter()
        .map(|s| {
            let complex = generate(&Generator::parse(&s).unwrap()).unwrap();
            (s, complex)
        })
        .collect()
}

/// A tiny deterministic generator (SplitMix64) so that randomized sweeps
/// reproduce bit-for-bit without depending on an external generator's
/// stream stability.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..n` (n > 0).
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn int_in(&mut self, low: i64, high: i64) -> i64 {
        low + self.below((high - low + 1) as u64) as i64
    }
}

/// A pseudo-random complex on at most `n` vertices: the downward closure
/// of a few random vertex subsets.
pub fn random_complex(rng: &mut SplitMix64, n: usize) -> SimplicialComplex {
    assert!(n <= LETTERS.len());
    let facet_count = rng.below(5) + 1;
    let mut facets = Vec::new();
    for _ in 0..facet_count {
        let mask = (rng.below((1 << n) - 1) + 1) as u32;
        facets.push(subset_labels(mask));
    }
    SimplicialComplex::from_facet_labels(&facets).expect("random facets are well formed")
}

/// A pseudo-random subcomplex: the downward closure of a random subset of
/// the complex's simplices.
pub fn random_subcomplex(rng: &mut SplitMix64, ambient: &SimplicialComplex) -> SimplicialComplex {
    let members: Vec<Vec<String>> = ambient
        .simplices()
        .filter(|t| !t.is_empty())
        .filter(|_| rng.below(2) == 1)
        .map(|t| ambient.labels_of(t))
        .collect();
    SimplicialComplex::from_facet_labels(&members).expect("subcomplex facets are well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_matches_brute_force_on_three_vertices() {
        // independent oracle: filter all families of nonempty subsets of a
        // 3-set for downward closure
        let mut expected = 0usize;
        for family in 0u32..(1 << 7) {
            let contains = |s: u32| family >> (s - 1) & 1 == 1;
            let closed = (1u32..8).all(|s| {
                !contains(s)
                    || (0..3)
                        .filter(|i| s >> i & 1 == 1)
                        .map(|i| s & !(1 << i))
                        .filter(|&f| f != 0)
                        .all(contains)
            });
            if closed {
                expected += 1;
            }
        }
        let enumerated = enumerate_complexes(3);
        assert_eq!(enumerated.len(), expected);
        assert_eq!(expected, 19);
    }

    #[test]
    fn enumeration_counts() {
        // one less than the Dedekind numbers, which also count the ideal
        // containing the empty set alone
        assert_eq!(enumerate_complexes(0).len(), 1);
        assert_eq!(enumerate_complexes(1).len(), 2);
        assert_eq!(enumerate_complexes(2).len(), 5);
        assert_eq!(enumerate_complexes(4).len(), 167);
    }

    #[test]
    fn enumerated_complexes_are_valid_and_distinct_as_label_families() {
        let all = enumerate_complexes(4);
        let families: std::collections::BTreeSet<_> =
            all.iter().map(|c| c.label_simplices()).collect();
        assert_eq!(families.len(), all.len());
    }

    #[test]
    fn generator_corpus_builds() {
        let corpus = generator_corpus();
        assert!(corpus.iter().any(|(name, _)| name == "rp2_six"));
        assert!(corpus
            .iter()
            .all(|(_, c)| c.dimension() <= 3 || c.vertex_count() == 0));
    }

    #[test]
    fn random_complexes_are_reproducible() {
        let mut a = SplitMix64::new(7);
        let mut b = SplitMix64::new(7);
        for _ in 0..10 {
            assert_eq!(random_complex(&mut a, 6), random_complex(&mut b, 6));
        }
    }

    #[test]
    fn random_subcomplexes_are_subcomplexes() {
        let mut rng = SplitMix64::new(42);
        for _ in 0..20 {
            let ambient = random_complex(&mut rng, 5);
            let sub = random_subcomplex(&mut rng, &ambient);
            assert!(ambient.contains_subcomplex(&sub));
        }
    }
}
