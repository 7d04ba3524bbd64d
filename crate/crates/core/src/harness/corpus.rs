//! Isomorph-free graph enumeration and corpus definitions.
//!
//! Graphs on up to eight vertices are enumerated one representative per
//! isomorphism class, by augmenting each (n-1)-vertex representative with a
//! new vertex in every possible way and deduplicating on a canonical form.
//! The canonical form is the minimal packed upper-triangle bit string over
//! all vertex orderings compatible with an iterated degree refinement, found
//! by branch-and-bound.

use std::collections::BTreeSet;
use std::path::PathBuf;

use crate::error::Error;
use crate::graph::{from_graph6, read_graph6_file, Graph};
use crate::Result;

/// Largest vertex count for internal exhaustive enumeration. Beyond this,
/// corpora come from external graph6 files.
pub const MAX_ENUM_N: usize = 8;

/// Where a corpus of graphs comes from.
#[derive(Debug, Clone)]
pub enum Corpus {
    /// Every isomorphism class of graphs on 1..=n vertices.
    Internal { n_max: usize },
    /// One graph per line of a graph6 file.
    External { path: PathBuf },
}

impl Corpus {
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        match self {
            Corpus::Internal { n_max } => {
                let mut all = Vec::new();
                for n in 1..=*n_max {
                    all.extend(enumerate_graphs(n)?);
                }
                Ok(all)
            }
            Corpus::External { path } => {
                let contents = std::fs::read_to_string(path)?;
                read_graph6_file(&contents)
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Corpus::Internal { n_max } => format!("internal:n<={n_max}"),
            Corpus::External { path } => format!("file:{}", path.display()),
        }
    }
}

/// Iterated refinement: vertices are colored by degree, then repeatedly by
/// the multiset of neighbor colors, with colors renumbered canonically at
/// each round. The final coloring is an isomorphism invariant.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v) as usize).collect();
    normalize(&mut colors);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&u| g.has_edge(u, v))
                    .map(|u| colors[u])
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs
            .drain(..)
            .map(|s| sorted.binary_search(&s).expect("own signature present"))
            .collect();
        if next == colors {
            return colors;
        }
        colors = next;
    }
}

/// Canonical packed form: minimum of `pack_bits` over all orderings that
/// list the refinement classes in color order.
pub fn canonical_bits(g: &Graph) -> u64 {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    let colors = refine_colors(g);
    // layout[p] = color required at position p.
    let mut layout: Vec<usize> = colors.clone();
    layout.sort_unstable();
    let mut best: Option<u64> = None;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(g, &colors, &layout, &mut perm, &mut used, 0u64, 0usize, &mut best);
    best.expect("at least one compatible ordering exists")
}

#[allow(clippy::too_many_arguments)]
fn search(
    g: &Graph,
    colors: &[usize],
    layout: &[usize],
    perm: &mut Vec<usize>,
    used: &mut [bool],
    prefix: u64,
    prefix_len: usize,
    best: &mut Option<u64>,
) {
    let n = g.n();
    let total = n * (n - 1) / 2;
    let depth = perm.len();
    if depth == n {
        if best.is_none_or(|b| prefix < b) {
            *best = Some(prefix);
        }
        return;
    }
    for v in 0..n {
        if used[v] || colors[v] != layout[depth] {
            continue;
        }
        // New column: adjacency of v to the already placed vertices.
        let mut bits = prefix;
        let mut pos = prefix_len;
        for &u in perm.iter() {
            if g.has_edge(u, v) {
                bits |= 1 << (total - 1 - pos);
            }
            pos += 1;
        }
        // Prune whenever the extended prefix already exceeds the best form.
        if let Some(b) = *best {
            if pos > 0 && (bits >> (total - pos)) > (b >> (total - pos)) {
                continue;
            }
        }
        used[v] = true;
        perm.push(v);
        search(g, colors, layout, perm, used, bits, pos, best);
        perm.pop();
        used[v] = false;
    }
}

fn normalize(colors: &mut [usize]) {
    let mut sorted: Vec<usize> = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for c in colors.iter_mut() {
        *c = sorted.binary_search(c).expect("own color present");
    }
}

/// The canonically relabeled representative of a graph's isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    let bits = canonical_bits(g);
    unpack_bits(g.n(), bits)
}

fn unpack_bits(n: usize, bits: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut g = Graph::new(n);
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if (bits >> (total - 1 - pos)) & 1 == 1 {
                g.add_edge(i, j);
            }
            pos += 1;
        }
    }
    g
}

/// One representative per isomorphism class of graphs on exactly n vertices,
/// sorted by canonical form.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUM_N {
        return Err(Error::Unsupported(format!(
            "internal enumeration covers 1..={MAX_ENUM_N} vertices; supply larger graphs \
             as an external graph6 file"
        )));
    }
    let mut reps: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); n + 1];
    reps[1].insert(0);
    for m in 2..=n {
        let prev: Vec<u64> = reps[m - 1].iter().copied().collect();
        for bits in prev {
            let base = unpack_bits(m - 1, bits);
            for nb in 0u64..(1 << (m - 1)) {
                let mut g = Graph::new(m);
                for (u, v) in base.edges() {
                    g.add_edge(u, v);
                }
                for v in 0..(m - 1) {
                    if (nb >> v) & 1 == 1 {
                        g.add_edge(v, m - 1);
                    }
                }
                reps[m].insert(canonical_bits(&g));
            }
        }
    }
    Ok(reps[n].iter().map(|&bits| unpack_bits(n, bits)).collect())
}

/// Reads one graph from a graph6 string, for CLI plumbing.
pub fn graph_from_g6(line: &str) -> Result<Graph> {
    from_graph6(line)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{to_graph6, turan_graph};

    #[test]
    fn counts_match_known_sequence() {
        let expected = [1usize, 2, 4, 11, 34, 156, 1044];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(enumerate_graphs(n).unwrap().len(), want, "n = {n}");
        }
    }

    #[test]
    fn eight_vertex_count() {
        assert_eq!(enumerate_graphs(8).unwrap().len(), 12346);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(enumerate_graphs(0).is_err());
        assert!(enumerate_graphs(9).is_err());
    }

    #[test]
    fn canonical_form_is_invariant_under_relabeling() {
        let g = turan_graph(6, 3);
        let perm = [3usize, 0, 5, 1, 4, 2];
        let h = g.relabel(&perm);
        assert_eq!(canonical_bits(&g), canonical_bits(&h));
        assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn distinct_classes_get_distinct_forms() {
        let path = Graph::with_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let star = Graph::with_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_ne!(canonical_bits(&path), canonical_bits(&star));
    }

    #[test]
    fn corpus_descriptors_are_graph6() {
        for g in enumerate_graphs(4).unwrap() {
            let s = to_graph6(&g);
            assert_eq!(from_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn enumerated_representatives_are_canonical() {
        for n in 1..=6 {
            for g in enumerate_graphs(n).unwrap() {
                assert_eq!(canonical_form(&g), g);
            }
        }
    }
}
