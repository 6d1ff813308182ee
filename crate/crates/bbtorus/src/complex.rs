//! Finite abstract simplicial complexes.
//!
//! A complex is stored as a downward-closed set of strictly increasing
//! vertex-index tuples, always including the empty tuple: every complex,
//! including the empty one, has a unique simplex of dimension -1. Vertices
//! carry string labels and their position in the global vertex list fixes
//! the orientation of every simplex, which makes boundary-matrix signs
//! deterministic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("not a subcomplex: contains `{0}` which the ambient complex lacks")]
    NotSubcomplex(String),
    #[error("invalid generator: {0}")]
    Generator(String),
}

/// Simplex counts per dimension, starting at the empty simplex:
/// `counts[i]` is the number of simplices of dimension `i - 1`, and
/// `f(-1) = 1` always.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector {
    counts: Vec<u64>,
}

impl FVector {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Number of `d`-simplices; zero outside the complex's range.
    pub fn f(&self, d: isize) -> u64 {
        if d < -1 {
            return 0;
        }
        self.counts.get((d + 1) as usize).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> isize {
        self.counts.len() as isize - 2
    }

    /// The alternating sum starting at the empty simplex,
    /// `sum_{i >= -1} (-1)^i f_i`.
    pub fn reduced_euler(&self) -> i64 {
        let mut acc = 0i64;
        for (idx, &c) in self.counts.iter().enumerate() {
            let i = idx as i64 - 1;
            let sign = if i.rem_euclid(2) == 0 { 1 } else { -1 };
            acc += sign * c as i64;
        }
        acc
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.counts.iter().join(", "))
    }
}

/// A finite abstract simplicial complex with labeled vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    simplices: BTreeSet<Vec<usize>>,
}

// Facet lines with more vertices than this are rejected: the downward
// closure of a single simplex has exponentially many faces.
const MAX_FACET_VERTICES: usize = 24;

impl SimplicialComplex {
    /// The empty complex: no vertices, only the empty simplex.
    pub fn empty() -> Self {
        SimplicialComplex {
            vertices: Vec::new(),
            simplices: BTreeSet::from([Vec::new()]),
        }
    }

    /// Builds the downward closure of the given simplices, each a list of
    /// vertex labels. Vertex order is first-appearance order.
    pub fn from_facet_labels<S: AsRef<str>>(facets: &[Vec<S>]) -> Result<Self, ComplexError> {
        let mut vertices: Vec<String> = Vec::new();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let mut tuples: Vec<Vec<usize>> = Vec::new();
        for (line_no, facet) in facets.iter().enumerate() {
            let mut tuple = Vec::with_capacity(facet.len());
            for label in facet {
                let label = label.as_ref();
                let idx = *index.entry(label.to_string()).or_insert_with(|| {
                    vertices.push(label.to_string());
                    vertices.len() - 1
                });
                if tuple.contains(&idx) {
                    return Err(ComplexError::Parse {
                        line: line_no + 1,
                        message: format!("duplicate vertex `{label}` in one simplex"),
                    });
                }
                tuple.push(idx);
            }
            if tuple.len() > MAX_FACET_VERTICES {
                return Err(ComplexError::Parse {
                    line: line_no + 1,
                    message: format!("simplex with {} vertices is too large", tuple.len()),
                });
            }
            tuple.sort_unstable();
            tuples.push(tuple);
        }
        Ok(Self::close_downward(vertices, tuples))
    }

    /// Parses the plain text format: one simplex per line as
    /// whitespace-separated vertex labels, `#` starting a comment, blank
    /// lines ignored. The complex is the downward closure of the listed
    /// simplices; a document with no simplex lines is the empty complex.
    pub fn parse(text: &str) -> Result<Self, ComplexError> {
        let mut vertices: Vec<String> = Vec::new();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let mut tuples: Vec<Vec<usize>> = Vec::new();
        for (line_no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            let labels: Vec<&str> = line.split_whitespace().collect();
            if labels.is_empty() {
                continue;
            }
            let mut tuple = Vec::with_capacity(labels.len());
            for label in labels {
                let idx = *index.entry(label.to_string()).or_insert_with(|| {
                    vertices.push(label.to_string());
                    vertices.len() - 1
                });
                if tuple.contains(&idx) {
                    return Err(ComplexError::Parse {
                        line: line_no + 1,
                        message: format!("duplicate vertex `{label}` in one simplex"),
                    });
                }
                tuple.push(idx);
            }
            if tuple.len() > MAX_FACET_VERTICES {
                return Err(ComplexError::Parse {
                    line: line_no + 1,
                    message: format!("simplex with {} vertices is too large", tuple.len()),
                });
            }
            tuple.sort_unstable();
            tuples.push(tuple);
        }
        Ok(Self::close_downward(vertices, tuples))
    }

    fn close_downward(vertices: Vec<String>, tuples: Vec<Vec<usize>>) -> Self {
        let mut simplices: BTreeSet<Vec<usize>> = BTreeSet::from([Vec::new()]);
        for tuple in tuples {
            for mask in 0u32..(1u32 << tuple.len()) {
                let face: Vec<usize> = tuple
                    .iter()
                    .enumerate()
                    .filter(|(pos, _)| mask >> pos & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                simplices.insert(face);
            }
        }
        let complex = SimplicialComplex {
            vertices,
            simplices,
        };
        debug_assert!(complex.validate());
        complex
    }

    fn validate(&self) -> bool {
        let n = self.vertices.len();
        if !self.simplices.contains(&Vec::new()) {
            return false;
        }
        let mut used = vec![false; n];
        for t in &self.simplices {
            if !t.windows(2).all(|w| w[0] < w[1]) || t.iter().any(|&v| v >= n) {
                return false;
            }
            for &v in t {
                used[v] = true;
            }
            for skip in 0..t.len() {
                let face: Vec<usize> = t
                    .iter()
                    .enumerate()
                    .filter(|(pos, _)| *pos != skip)
                    .map(|(_, &v)| v)
                    .collect();
                if !self.simplices.contains(&face) {
                    return false;
                }
            }
        }
        used.into_iter().all(|u| u) || n == 0
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn dimension(&self) -> isize {
        self.simplices
            .iter()
            .map(|t| t.len() as isize - 1)
            .max()
            .unwrap_or(-1)
    }

    /// All simplices in canonical order, including the empty one.
    pub fn simplices(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.iter()
    }

    pub fn simplex_count(&self) -> usize {
        self.simplices.len()
    }

    /// The `d`-simplices in canonical (lexicographic) order.
    pub fn simplices_of_dim(&self, d: isize) -> Vec<&Vec<usize>> {
        let len = (d + 1).max(0) as usize;
        if d < -1 {
            return Vec::new();
        }
        self.simplices.iter().filter(|t| t.len() == len).collect()
    }

    pub fn contains(&self, tuple: &[usize]) -> bool {
        debug_assert!(tuple.windows(2).all(|w| w[0] < w[1]));
        self.simplices.contains(tuple)
    }

    pub fn contains_labels(&self, labels: &[&str]) -> bool {
        let Some(mut tuple) = labels
            .iter()
            .map(|l| self.vertex_index(l))
            .collect::<Option<Vec<usize>>>()
        else {
            return false;
        };
        tuple.sort_unstable();
        self.simplices.contains(&tuple)
    }

    pub fn labels_of(&self, tuple: &[usize]) -> Vec<String> {
        tuple.iter().map(|&v| self.vertices[v].clone()).collect()
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; (self.dimension() + 2) as usize];
        for t in &self.simplices {
            counts[t.len()] += 1;
        }
        FVector { counts }
    }

    /// Maximal simplices in canonical order.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.simplices
            .iter()
            .filter(|t| {
                // downward closure: a proper superset exists iff some
                // one-vertex extension is a member
                !(0..self.vertices.len()).any(|v| {
                    if t.contains(&v) {
                        return false;
                    }
                    let mut ext = t.to_vec();
                    ext.push(v);
                    ext.sort_unstable();
                    self.simplices.contains(&ext)
                })
            })
            .cloned()
            .collect()
    }

    /// Canonical serialization: facets only, vertex labels sorted within a
    /// line, lines sorted lexicographically. The empty complex serializes
    /// to the empty document.
    pub fn to_canonical_string(&self) -> String {
        let mut lines: Vec<String> = self
            .facets()
            .iter()
            .filter(|t| !t.is_empty())
            .map(|t| {
                let mut labels = self.labels_of(t);
                labels.sort();
                labels.join(" ")
            })
            .collect();
        lines.sort();
        if lines.is_empty() {
            String::new()
        } else {
            lines.join("\n") + "\n"
        }
    }

    /// The simplices as sets of labels, forgetting vertex order. Two
    /// parses of equivalent documents agree under this view.
    pub fn label_simplices(&self) -> BTreeSet<Vec<String>> {
        self.simplices
            .iter()
            .map(|t| {
                let mut labels = self.labels_of(t);
                labels.sort();
                labels
            })
            .collect()
    }

    /// Does every simplex of `other` occur (as a label set) in `self`?
    pub fn contains_subcomplex(&self, other: &SimplicialComplex) -> bool {
        other
            .label_simplices()
            .iter()
            .all(|s| self.contains_labels(&s.iter().map(|x| x.as_str()).collect::<Vec<_>>()))
    }

    fn adjacency(&self) -> Vec<Vec<bool>> {
        let n = self.vertices.len();
        let mut adj = vec![vec![false; n]; n];
        for t in self.simplices_of_dim(1) {
            adj[t[0]][t[1]] = true;
            adj[t[1]][t[0]] = true;
        }
        adj
    }

    /// Is every clique of the 1-skeleton a simplex?
    ///
    /// Checks the equivalent local condition: for every simplex and every
    /// outside vertex adjacent to all of it, the extension is a simplex.
    pub fn is_flag(&self) -> bool {
        let adj = self.adjacency();
        for t in &self.simplices {
            if t.len() < 2 {
                continue;
            }
            for (v, row) in adj.iter().enumerate() {
                if t.contains(&v) {
                    continue;
                }
                if t.iter().all(|&w| row[w]) {
                    let mut ext = t.clone();
                    ext.push(v);
                    ext.sort_unstable();
                    if !self.simplices.contains(&ext) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The clique complex of the 1-skeleton: the minimal flag complex with
    /// the same 1-skeleton containing this one.
    pub fn flag_completion(&self) -> SimplicialComplex {
        let adj = self.adjacency();
        let n = self.vertices.len();
        let mut simplices: BTreeSet<Vec<usize>> = BTreeSet::from([Vec::new()]);
        // enumerate cliques by extending with larger vertices only
        let mut stack: Vec<(Vec<usize>, Vec<usize>)> = vec![(Vec::new(), (0..n).collect())];
        while let Some((clique, candidates)) = stack.pop() {
            for (pos, &v) in candidates.iter().enumerate() {
                let mut next = clique.clone();
                next.push(v);
                let narrowed: Vec<usize> = candidates[pos + 1..]
                    .iter()
                    .copied()
                    .filter(|&w| adj[v][w])
                    .collect();
                simplices.insert(next.clone());
                stack.push((next, narrowed));
            }
        }
        let complex = SimplicialComplex {
            vertices: self.vertices.clone(),
            simplices,
        };
        debug_assert!(complex.validate());
        complex
    }

    /// The full subcomplex spanned by the given vertex labels: all
    /// simplices whose vertices lie in the set.
    pub fn full_subcomplex(&self, labels: &[&str]) -> Result<SimplicialComplex, ComplexError> {
        let mut keep = vec![false; self.vertices.len()];
        for label in labels {
            let idx = self
                .vertex_index(label)
                .ok_or_else(|| ComplexError::UnknownVertex(label.to_string()))?;
            keep[idx] = true;
        }
        let new_index: Vec<Option<usize>> = {
            let mut next = 0;
            keep.iter()
                .map(|&k| {
                    if k {
                        next += 1;
                        Some(next - 1)
                    } else {
                        None
                    }
                })
                .collect()
        };
        let vertices: Vec<String> = self
            .vertices
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(v, _)| v.clone())
            .collect();
        let simplices: BTreeSet<Vec<usize>> = self
            .simplices
            .iter()
            .filter(|t| t.iter().all(|&v| keep[v]))
            .map(|t| t.iter().map(|&v| new_index[v].unwrap()).collect())
            .collect();
        let complex = SimplicialComplex {
            vertices,
            simplices,
        };
        debug_assert!(complex.validate());
        Ok(complex)
    }

    /// Is `sub` a full subcomplex: does it contain every simplex of `self`
    /// whose vertices all belong to `sub`? Errors when `sub` is not a
    /// subcomplex at all.
    pub fn is_full_subcomplex(&self, sub: &SimplicialComplex) -> Result<bool, ComplexError> {
        for s in sub.label_simplices() {
            let labels: Vec<&str> = s.iter().map(|x| x.as_str()).collect();
            if !self.contains_labels(&labels) {
                return Err(ComplexError::NotSubcomplex(labels.join(" ")));
            }
        }
        let sub_labels: Vec<&str> = sub.vertices.iter().map(|x| x.as_str()).collect();
        let spanned = self.full_subcomplex(&sub_labels)?;
        Ok(spanned.label_simplices() == sub.label_simplices())
    }
}

fn is_proper_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() < b.len() && a.iter().all(|v| b.binary_search(v).is_ok())
}

/// The relative barycentric subdivision of the pair: `inner` is left
/// untriangulated while every simplex of `ambient` outside it is starred
/// from a new barycenter vertex. Simplices are chains
/// `sigma_0 < sigma_1 < ... < sigma_r` with `sigma_0` in `inner` (possibly
/// the empty simplex) and the others outside it, contributing the vertices
/// of `sigma_0` together with one barycenter per chain member.
///
/// With `inner` empty this is the ordinary barycentric subdivision. The
/// result contains `inner` as a full subcomplex, and is flag whenever
/// `inner` is.
pub fn relative_barycentric_subdivision(
    ambient: &SimplicialComplex,
    inner: &SimplicialComplex,
) -> Result<SimplicialComplex, ComplexError> {
    for s in inner.label_simplices() {
        let labels: Vec<&str> = s.iter().map(|x| x.as_str()).collect();
        if !ambient.contains_labels(&labels) {
            return Err(ComplexError::NotSubcomplex(labels.join(" ")));
        }
    }
    // translate inner's simplices into ambient's vertex numbering
    let inner_in_ambient: BTreeSet<Vec<usize>> = inner
        .simplices()
        .map(|t| {
            let mut mapped: Vec<usize> = t
                .iter()
                .map(|&v| ambient.vertex_index(&inner.vertices()[v]).unwrap())
                .collect();
            mapped.sort_unstable();
            mapped
        })
        .collect();
    let outside: Vec<Vec<usize>> = ambient
        .simplices()
        .filter(|t| !t.is_empty() && !inner_in_ambient.contains(*t))
        .cloned()
        .collect();

    // vertices: inner's vertices first, then one barycenter per outside
    // simplex in canonical order
    let mut labels: Vec<String> = inner.vertices().to_vec();
    let mut used: BTreeSet<String> = labels.iter().cloned().collect();
    let mut bary_index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for t in &outside {
        let mut label = ambient.labels_of(t).join(".");
        while used.contains(&label) {
            label.push('\'');
        }
        used.insert(label.clone());
        bary_index.insert(t.clone(), labels.len());
        labels.push(label);
    }

    let mut simplices: BTreeSet<Vec<usize>> = BTreeSet::new();
    // depth-first extension of chains ordered by strict inclusion
    fn extend(
        chain_top: &[usize],
        tuple: &[usize],
        outside: &[Vec<usize>],
        bary_index: &BTreeMap<Vec<usize>, usize>,
        simplices: &mut BTreeSet<Vec<usize>>,
    ) {
        for candidate in outside {
            if is_proper_subset(chain_top, candidate) {
                let mut next = tuple.to_vec();
                next.push(bary_index[candidate]);
                next.sort_unstable();
                simplices.insert(next.clone());
                extend(candidate, &next, outside, bary_index, simplices);
            }
        }
    }
    for sigma0 in inner.simplices() {
        // inner vertices keep their indices in the subdivision
        simplices.insert(sigma0.clone());
        let sigma0_in_ambient: Vec<usize> = {
            let mut mapped: Vec<usize> = sigma0
                .iter()
                .map(|&v| ambient.vertex_index(&inner.vertices()[v]).unwrap())
                .collect();
            mapped.sort_unstable();
            mapped
        };
        extend(
            &sigma0_in_ambient,
            sigma0,
            &outside,
            &bary_index,
            &mut simplices,
        );
    }
    let complex = SimplicialComplex {
        vertices: labels,
        simplices,
    };
    debug_assert!(complex.validate());
    Ok(complex)
}

/// Ordinary barycentric subdivision: the relative subdivision with empty
/// inner complex.
pub fn barycentric_subdivision(complex: &SimplicialComplex) -> SimplicialComplex {
    relative_barycentric_subdivision(complex, &SimplicialComplex::empty())
        .expect("the empty complex is a subcomplex of everything")
}

/// Built-in complex generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// The full simplex on `n + 1` vertices; `n = -1` is the empty complex.
    Simplex(i64),
    /// The boundary of the `n`-simplex.
    SimplexBoundary(i64),
    /// The cycle graph on `k >= 3` vertices.
    Cycle(u64),
    /// `m` isolated points.
    Points(u64),
    /// The six-vertex triangulation of the real projective plane.
    Rp2Six,
    /// Barycentric subdivision of another generated complex.
    Barycentric(Box<Generator>),
}

impl Generator {
    /// Parses generator expressions such as `rp2_six`, `simplex(2)`,
    /// `cycle(5)`, or `barycentric(rp2_six)`.
    pub fn parse(spec: &str) -> Result<Self, ComplexError> {
        let spec = spec.trim();
        let bad = |msg: String| ComplexError::Generator(msg);
        let (name, arg) = match spec.find('(') {
            None => (spec, None),
            Some(open) => {
                if !spec.ends_with(')') {
                    return Err(bad(format!("unbalanced parentheses in `{spec}`")));
                }
                (&spec[..open], Some(&spec[open + 1..spec.len() - 1]))
            }
        };
        let int_arg = |what: &str| -> Result<i64, ComplexError> {
            arg.ok_or_else(|| bad(format!("{what} requires an integer argument")))?
                .trim()
                .parse::<i64>()
                .map_err(|_| bad(format!("{what} requires an integer argument")))
        };
        match name {
            "simplex" => Ok(Generator::Simplex(int_arg("simplex(n)")?)),
            "simplex_boundary" => Ok(Generator::SimplexBoundary(int_arg("simplex_boundary(n)")?)),
            "cycle" => {
                let k = int_arg("cycle(k)")?;
                if k < 0 {
                    return Err(bad("cycle(k) requires k >= 3".to_string()));
                }
                Ok(Generator::Cycle(k as u64))
            }
            "points" => {
                let m = int_arg("points(m)")?;
                if m < 0 {
                    return Err(bad("points(m) requires m >= 0".to_string()));
                }
                Ok(Generator::Points(m as u64))
            }
            "rp2_six" => {
                if arg.is_some() {
                    return Err(bad("rp2_six takes no argument".to_string()));
                }
                Ok(Generator::Rp2Six)
            }
            "barycentric" => {
                let inner =
                    arg.ok_or_else(|| bad("barycentric(...) requires an inner generator".into()))?;
                Ok(Generator::Barycentric(Box::new(Generator::parse(inner)?)))
            }
            other => Err(bad(format!("unknown generator `{other}`"))),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Simplex(n) => write!(f, "simplex({n})"),
            Generator::SimplexBoundary(n) => write!(f, "simplex_boundary({n})"),
            Generator::Cycle(k) => write!(f, "cycle({k})"),
            Generator::Points(m) => write!(f, "points({m})"),
            Generator::Rp2Six => write!(f, "rp2_six"),
            Generator::Barycentric(inner) => write!(f, "barycentric({inner})"),
        }
    }
}

/// Faces of the real projective plane's minimal triangulation: the
/// antipodal quotient of the icosahedron. Each of the 15 edges of the
/// complete graph on six vertices lies in exactly two faces.
const RP2_FACES: [[&str; 3]; 10] = [
    ["1", "2", "4"],
    ["1", "2", "5"],
    ["1", "3", "4"],
    ["1", "3", "6"],
    ["1", "5", "6"],
    ["2", "3", "5"],
    ["2", "3", "6"],
    ["2", "4", "6"],
    ["3", "4", "5"],
    ["4", "5", "6"],
];

pub fn generate(generator: &Generator) -> Result<SimplicialComplex, ComplexError> {
    match generator {
        Generator::Simplex(n) => {
            if *n < -1 {
                return Err(ComplexError::Generator(format!(
                    "simplex({n}) requires n >= -1"
                )));
            }
            if *n == -1 {
                return Ok(SimplicialComplex::empty());
            }
            let facet: Vec<String> = (0..=*n).map(|i| i.to_string()).collect();
            SimplicialComplex::from_facet_labels(&[facet])
        }
        Generator::SimplexBoundary(n) => {
            if *n < 0 {
                return Err(ComplexError::Generator(format!(
                    "simplex_boundary({n}) requires n >= 0"
                )));
            }
            let n = *n as usize;
            let facets: Vec<Vec<String>> = (0..=n)
                .map(|skip| {
                    (0..=n)
                        .filter(|&i| i != skip)
                        .map(|i| i.to_string())
                        .collect()
                })
                .collect();
            SimplicialComplex::from_facet_labels(&facets)
        }
        Generator::Cycle(k) => {
            if *k < 3 {
                return Err(ComplexError::Generator(format!(
                    "cycle({k}) requires k >= 3"
                )));
            }
            let k = *k as usize;
            let facets: Vec<Vec<String>> = (0..k)
                .map(|i| vec![i.to_string(), ((i + 1) % k).to_string()])
                .collect();
            SimplicialComplex::from_facet_labels(&facets)
        }
        Generator::Points(m) => {
            let facets: Vec<Vec<String>> = (0..*m).map(|i| vec![i.to_string()]).collect();
            SimplicialComplex::from_facet_labels(&facets)
        }
        Generator::Rp2Six => {
            let mut facets: Vec<Vec<String>> = (1..=6).map(|i| vec![i.to_string()]).collect();
            facets.extend(
                RP2_FACES
                    .iter()
                    .map(|f| f.iter().map(|s| s.to_string()).collect()),
            );
            SimplicialComplex::from_facet_labels(&facets)
        }
        Generator::Barycentric(inner) => Ok(barycentric_subdivision(&generate(inner)?)),
    }
}

/// Convenience wrapper returning the complex behind an `Arc` for sharing
/// with face-ring elements.
pub fn generate_shared(generator: &Generator) -> Result<Arc<SimplicialComplex>, ComplexError> {
    generate(generator).map(Arc::new)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(spec: &str) -> SimplicialComplex {
        generate(&Generator::parse(spec).unwrap()).unwrap()
    }

    #[test]
    fn parse_single_triangle() {
        let c = SimplicialComplex::parse("a b c").unwrap();
        assert_eq!(c.simplex_count(), 8);
        assert_eq!(c.dimension(), 2);
        assert_eq!(c.f_vector().counts(), &[1, 3, 3, 1]);
    }

    #[test]
    fn parse_triangle_boundary() {
        let c = SimplicialComplex::parse("a b\nb c\na c").unwrap();
        assert_eq!(c.f_vector().counts(), &[1, 3, 3]);
        assert_eq!(c.dimension(), 1);
    }

    #[test]
    fn parse_empty_document() {
        for text in ["", "  \n# only a comment\n\n"] {
            let c = SimplicialComplex::parse(text).unwrap();
            assert_eq!(c, SimplicialComplex::empty());
            assert_eq!(c.dimension(), -1);
            assert_eq!(c.f_vector().counts(), &[1]);
        }
    }

    #[test]
    fn parse_reports_duplicate_vertex_with_line() {
        let err = SimplicialComplex::parse("a b\nc c").unwrap_err();
        match err {
            ComplexError::Parse { line, message } => {
                assert_eq!(line, 2);
                assert!(message.contains('c'));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn comments_and_blank_lines() {
        let c = SimplicialComplex::parse("# header\n\na b # an edge\n").unwrap();
        assert_eq!(c.f_vector().counts(), &[1, 2, 1]);
    }

    #[test]
    fn f_vector_of_rp2() {
        let c = gen("rp2_six");
        assert_eq!(c.f_vector().counts(), &[1, 6, 15, 10]);
        assert_eq!(c.f_vector().reduced_euler(), -1 + 6 - 15 + 10);
        // every edge of the surface lies in exactly two faces
        for e in c.simplices_of_dim(1) {
            let in_faces = c
                .simplices_of_dim(2)
                .into_iter()
                .filter(|f| e.iter().all(|v| f.contains(v)))
                .count();
            assert_eq!(in_faces, 2);
        }
    }

    #[test]
    fn flag_detection() {
        assert!(!gen("simplex_boundary(2)").is_flag());
        assert!(gen("simplex(2)").is_flag());
        assert!(gen("cycle(4)").is_flag());
        assert!(SimplicialComplex::empty().is_flag());
        assert!(!gen("rp2_six").is_flag());
    }

    #[test]
    fn flag_completion_fills_the_triangle() {
        let completed = gen("simplex_boundary(2)").flag_completion();
        assert_eq!(
            completed.label_simplices(),
            gen("simplex(2)").label_simplices()
        );
    }

    #[test]
    fn flag_completion_fixes_nothing_on_a_cycle() {
        let c = gen("cycle(4)");
        assert_eq!(c.flag_completion(), c);
    }

    #[test]
    fn flag_completion_of_k4_skeleton() {
        // the 1-skeleton of the 3-simplex completes back to the 3-simplex
        let skeleton = SimplicialComplex::parse("0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap();
        let completed = skeleton.flag_completion();
        assert_eq!(
            completed.label_simplices(),
            gen("simplex(3)").label_simplices()
        );
    }

    #[test]
    fn flag_completion_is_idempotent_and_preserves_skeleton() {
        for spec in ["rp2_six", "simplex_boundary(3)", "cycle(5)"] {
            let c = gen(spec);
            let once = c.flag_completion();
            assert_eq!(once.flag_completion(), once);
            assert!(once.is_flag());
            assert_eq!(once.simplices_of_dim(1).len(), c.simplices_of_dim(1).len());
            assert_eq!(once.simplices_of_dim(0).len(), c.simplices_of_dim(0).len());
        }
    }

    #[test]
    fn full_subcomplex_examples() {
        let triangle = gen("simplex(2)");
        let edge = triangle.full_subcomplex(&["0", "1"]).unwrap();
        assert_eq!(edge.f_vector().counts(), &[1, 2, 1]);

        let circle = gen("simplex_boundary(2)");
        let edge = circle.full_subcomplex(&["0", "1"]).unwrap();
        assert_eq!(edge.f_vector().counts(), &[1, 2, 1]);

        let square = gen("cycle(4)");
        let diagonal = square.full_subcomplex(&["0", "2"]).unwrap();
        assert_eq!(diagonal.f_vector().counts(), &[1, 2]);
    }

    #[test]
    fn full_subcomplex_unknown_vertex() {
        let err = gen("simplex(2)").full_subcomplex(&["0", "x"]).unwrap_err();
        assert_eq!(err, ComplexError::UnknownVertex("x".to_string()));
    }

    #[test]
    fn fullness_detection() {
        let triangle = gen("simplex(2)");
        let boundary = SimplicialComplex::parse("0 1\n1 2\n0 2").unwrap();
        assert!(!triangle.is_full_subcomplex(&boundary).unwrap());
        assert!(triangle.is_full_subcomplex(&triangle).unwrap());

        // not a subcomplex at all
        let other = SimplicialComplex::parse("0 9").unwrap();
        assert!(triangle.is_full_subcomplex(&other).is_err());
    }

    #[test]
    fn relative_subdivision_of_the_triangle_mod_its_boundary() {
        let triangle = gen("simplex(2)");
        let boundary = SimplicialComplex::parse("0 1\n1 2\n0 2").unwrap();
        let cone = relative_barycentric_subdivision(&triangle, &boundary).unwrap();
        assert_eq!(cone.f_vector().counts(), &[1, 4, 6, 3]);
        assert!(!triangle.is_full_subcomplex(&boundary).unwrap());
        assert!(cone.is_full_subcomplex(&boundary).unwrap());
    }

    #[test]
    fn relative_subdivision_with_everything_inner_is_identity() {
        let c = gen("rp2_six");
        assert_eq!(relative_barycentric_subdivision(&c, &c).unwrap(), c);
    }

    #[test]
    fn barycentric_subdivision_of_an_edge() {
        let sd = barycentric_subdivision(&gen("simplex(1)"));
        assert_eq!(sd.f_vector().counts(), &[1, 3, 2]);
        assert!(sd.is_flag());
    }

    #[test]
    fn relative_subdivision_rejects_non_subcomplex() {
        let triangle = gen("simplex(2)");
        let stray = SimplicialComplex::parse("0 7").unwrap();
        assert!(relative_barycentric_subdivision(&triangle, &stray).is_err());
    }

    #[test]
    fn generator_edge_cases() {
        assert!(generate(&Generator::Cycle(2)).is_err());
        assert!(generate(&Generator::Simplex(-2)).is_err());
        assert!(generate(&Generator::SimplexBoundary(-1)).is_err());
        assert_eq!(gen("points(2)").f_vector().counts(), &[1, 2]);
        assert_eq!(gen("points(0)"), SimplicialComplex::empty());
        assert_eq!(gen("simplex(-1)"), SimplicialComplex::empty());
        assert_eq!(gen("simplex_boundary(0)"), SimplicialComplex::empty());
        assert_eq!(gen("simplex_boundary(2)").f_vector().counts(), &[1, 3, 3]);
    }

    #[test]
    fn generator_parsing() {
        assert_eq!(Generator::parse("rp2_six").unwrap(), Generator::Rp2Six);
        assert_eq!(
            Generator::parse("barycentric(simplex(2))").unwrap(),
            Generator::Barycentric(Box::new(Generator::Simplex(2)))
        );
        assert!(Generator::parse("torus(2)").is_err());
        assert!(Generator::parse("cycle(x)").is_err());
        assert!(Generator::parse("cycle(3").is_err());
        let round = Generator::parse("barycentric(cycle(5))").unwrap();
        assert_eq!(Generator::parse(&round.to_string()).unwrap(), round);
    }

    #[test]
    fn barycentric_of_rp2_counts() {
        let sd = gen("barycentric(rp2_six)");
        assert_eq!(sd.f_vector().counts(), &[1, 31, 90, 60]);
        assert!(sd.is_flag());
    }

    #[test]
    fn canonical_serialization() {
        let c = gen("simplex(2)");
        assert_eq!(c.to_canonical_string(), "0 1 2\n");
        assert_eq!(SimplicialComplex::empty().to_canonical_string(), "");
        // round trip preserves the complex as a labeled simplex family
        let sd = gen("barycentric(simplex_boundary(2))");
        let reparsed = SimplicialComplex::parse(&sd.to_canonical_string()).unwrap();
        assert_eq!(reparsed.label_simplices(), sd.label_simplices());
    }

    #[test]
    fn downward_closure_is_exhaustive() {
        for spec in [
            "rp2_six",
            "simplex(3)",
            "barycentric(simplex(2))",
            "cycle(6)",
        ] {
            let c = gen(spec);
            for t in c.simplices() {
                for mask in 0u32..(1 << t.len()) {
                    let face: Vec<usize> = t
                        .iter()
                        .enumerate()
                        .filter(|(pos, _)| mask >> pos & 1 == 1)
                        .map(|(_, &v)| v)
                        .collect();
                    assert!(c.contains(&face));
                }
            }
        }
    }
}
