//! Named graphs and exhaustive small-graph families used by the
//! verification suites.

use std::collections::HashSet;

use itertools::Itertools;

use crate::graph::Multigraph;

/// Look up a built-in graph: `C<n>`, `P<n>` (n edges), `K<n>`, `bowtie`,
/// `figure-eight`, `circle`, `empty`.
pub fn named(name: &str) -> Option<Multigraph> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "bowtie" => return Some(Multigraph::bowtie()),
        "figure-eight" | "figure8" | "figure_eight" => return Some(Multigraph::figure_eight()),
        "circle" | "o" => return Some(Multigraph::circles(1)),
        "empty" => return Some(Multigraph::empty()),
        _ => {}
    }
    let (kind, rest) = lower.split_at(1);
    let n: usize = rest.parse().ok()?;
    match kind {
        "c" if n >= 1 => Some(Multigraph::cycle(n)),
        "p" => Some(Multigraph::path(n)),
        "k" => Some(Multigraph::complete(n)),
        _ => None,
    }
}

/// Vertex relabeling that minimises the sorted edge list, searched only
/// over permutations inside refined degree classes. Falls back to the
/// class-sorted labeling when the search space is large, so equal keys
/// imply isomorphic graphs but not conversely.
pub fn canonical_key(vertex_count: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut degree = vec![0usize; vertex_count];
    let mut loops = vec![0usize; vertex_count];
    for &(u, v) in edges {
        degree[u] += 1;
        degree[v] += 1;
        if u == v {
            loops[u] += 1;
        }
    }
    let signature: Vec<(usize, usize, Vec<usize>)> = (0..vertex_count)
        .map(|v| {
            let mut nbr: Vec<usize> = edges
                .iter()
                .filter_map(|&(a, b)| {
                    if a == v {
                        Some(degree[b])
                    } else if b == v {
                        Some(degree[a])
                    } else {
                        None
                    }
                })
                .collect();
            nbr.sort_unstable();
            (degree[v], loops[v], nbr)
        })
        .collect();
    let mut order: Vec<usize> = (0..vertex_count).collect();
    order.sort_by(|&a, &b| signature[a].cmp(&signature[b]));
    let classes: Vec<Vec<usize>> = order
        .iter()
        .copied()
        .chunk_by(|&v| signature[v].clone())
        .into_iter()
        .map(|(_, group)| group.collect())
        .collect();

    let relabel = |slots: &[Vec<usize>]| -> Vec<(usize, usize)> {
        let mut label = vec![0usize; vertex_count];
        let mut next = 0;
        for class in slots {
            for &v in class {
                label[v] = next;
                next += 1;
            }
        }
        let mut out: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (label[u], label[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        out.sort_unstable();
        out
    };

    let space: u128 = classes
        .iter()
        .map(|c| (1..=c.len() as u128).product::<u128>())
        .product();
    if space > 50_000 {
        return relabel(&classes);
    }
    classes
        .iter()
        .map(|c| c.iter().copied().permutations(c.len()).collect::<Vec<_>>())
        .multi_cartesian_product()
        .map(|slots| relabel(&slots))
        .min()
        .unwrap_or_default()
}

/// All multigraphs (loops and parallel edges allowed, no circles, no
/// isolated vertices) with at most `max_edges` edges, one per isomorphism
/// class up to [`canonical_key`]. `filter` runs on the degree sequence.
///
/// Graphs with `m` edges are grown from the class representatives with
/// `m - 1` edges by adding one edge that may touch up to two new vertices.
pub fn multigraphs_where<F>(max_edges: usize, mut filter: F) -> Vec<Multigraph>
where
    F: FnMut(&[usize]) -> bool,
{
    let mut out = Vec::new();
    let mut level: Vec<(usize, Vec<(usize, usize)>)> = vec![(0, Vec::new())];
    for m in 0..=max_edges {
        for (n, edges) in &level {
            let g = Multigraph::new(*n, edges.clone(), 0).expect("valid endpoints");
            if filter(&g.degrees()) {
                out.push(g);
            }
        }
        if m == max_edges {
            break;
        }
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for (n, edges) in &level {
            let n = *n;
            let mut options: Vec<(usize, usize, usize)> = Vec::new();
            for a in 0..n {
                for b in a..n {
                    options.push((a, b, n));
                }
                options.push((a, n, n + 1));
            }
            options.push((n, n, n + 1));
            options.push((n, n + 1, n + 2));
            for (a, b, size) in options {
                let mut grown = edges.clone();
                grown.push((a, b));
                let key = canonical_key(size, &grown);
                if seen.insert(key.clone()) {
                    next.push((size, key));
                }
            }
        }
        level = next;
    }
    out
}

pub fn multigraphs(max_edges: usize) -> Vec<Multigraph> {
    multigraphs_where(max_edges, |_| true)
}

/// Eulerian multigraphs without isolated vertices or circles, including
/// the empty graph.
pub fn eulerian_multigraphs(max_edges: usize) -> Vec<Multigraph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for m in 0..=max_edges {
        // every vertex has degree >= 2, so at most m vertices
        for n in 0..=m {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
            for edges in pairs.iter().copied().combinations_with_replacement(m) {
                let mut degree = vec![0usize; n];
                for &(u, v) in &edges {
                    degree[u] += 1;
                    degree[v] += 1;
                }
                if degree.iter().any(|&d| d == 0 || d % 2 == 1) {
                    continue;
                }
                if seen.insert(canonical_key(n, &edges)) {
                    out.push(Multigraph::new(n, edges, 0).expect("valid endpoints"));
                }
            }
        }
    }
    out
}

/// Disjoint unions of cycles (loops and digons included) with at most
/// `max_edges` edges in total, one per multiset of cycle lengths.
pub fn two_regular_graphs(max_edges: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for m in 0..=max_edges {
        for parts in integer_partitions(m) {
            let g = parts.iter().fold(Multigraph::empty(), |acc, &len| {
                acc.disjoint_union(&Multigraph::cycle(len))
            });
            out.push(g);
        }
    }
    out
}

/// Partitions of `n` as weakly decreasing part lists.
pub fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs() {
        assert_eq!(named("C3"), Some(Multigraph::cycle(3)));
        assert_eq!(named("c4").unwrap().edge_count(), 4);
        assert_eq!(named("bowtie"), Some(Multigraph::bowtie()));
        assert_eq!(named("K4").unwrap().edge_count(), 6);
        assert_eq!(named("P2").unwrap().vertex_count(), 3);
        assert!(named("frob").is_none());
        assert!(named("C0").is_none());
    }

    #[test]
    fn canonical_key_identifies_relabelings() {
        let a = canonical_key(3, &[(0, 1), (1, 2), (2, 2)]);
        let b = canonical_key(3, &[(2, 1), (1, 0), (0, 0)]);
        assert_eq!(a, b);
        let c = canonical_key(3, &[(0, 1), (1, 2), (1, 1)]);
        assert_ne!(a, c);
    }

    #[test]
    fn small_family_counts() {
        // Eulerian multigraphs without isolated vertices:
        // 1 edge: loop. 2 edges: two loops apart, figure-eight, digon.
        let by_edges = |m: usize| eulerian_multigraphs(m).len() - eulerian_multigraphs(m - 1).len();
        assert_eq!(eulerian_multigraphs(0).len(), 1);
        assert_eq!(by_edges(1), 1);
        assert_eq!(by_edges(2), 3);
        // multigraphs with one edge: a loop or a link
        assert_eq!(multigraphs(1).len(), 3);
    }

    #[test]
    fn grown_family_matches_brute_force() {
        // oracle: every labeled edge multiset, keyed by the least sorted
        // edge list over all vertex permutations
        let full_key = |n: usize, edges: &[(usize, usize)]| {
            (0..n)
                .permutations(n)
                .map(|p| {
                    let mut e: Vec<(usize, usize)> = edges
                        .iter()
                        .map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b])))
                        .collect();
                    e.sort_unstable();
                    e
                })
                .min()
                .unwrap_or_default()
        };
        let mut classes = HashSet::new();
        for m in 0..=4 {
            for n in 0..=2 * m {
                let pairs: Vec<(usize, usize)> =
                    (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
                for edges in pairs.iter().copied().combinations_with_replacement(m) {
                    let mut deg = vec![0; n];
                    for &(a, b) in &edges {
                        deg[a] += 1;
                        deg[b] += 1;
                    }
                    if !deg.contains(&0) {
                        classes.insert((n, full_key(n, &edges)));
                    }
                }
            }
        }
        let grown: HashSet<_> = multigraphs(4)
            .iter()
            .map(|g| (g.vertex_count(), full_key(g.vertex_count(), g.edges())))
            .collect();
        assert_eq!(grown.len(), multigraphs(4).len());
        assert_eq!(grown, classes);
    }

    #[test]
    fn two_regular_family() {
        let fam = two_regular_graphs(4);
        // partitions of 0..=4: 1 + 1 + 2 + 3 + 5
        assert_eq!(fam.len(), 12);
        assert!(fam.iter().all(|g| g.is_two_regular()));
    }

    #[test]
    fn partitions_of_five() {
        assert_eq!(integer_partitions(5).len(), 7);
        assert_eq!(integer_partitions(0), vec![Vec::<usize>::new()]);
    }
}
