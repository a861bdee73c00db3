use std::collections::BTreeSet;

use itertools::Itertools;

use crate::graph::Multigraph;

use super::fragment::Fragment;

/// Relabeling-invariant key of a fragment whose unlabeled vertices are
/// `0..n_u` and whose label `i` sits on vertex `n_u + i - 1`: the least
/// sorted edge list over all permutations of the unlabeled vertices.
fn fragment_key(n_u: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    (0..n_u)
        .permutations(n_u)
        .map(|perm| {
            let relabel = |v: usize| if v < n_u { perm[v] } else { v };
            let mut out: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(a, b)| {
                    let (a, b) = (relabel(a), relabel(b));
                    (a.min(b), a.max(b))
                })
                .collect();
            out.sort_unstable();
            out
        })
        .min()
        .unwrap_or_default()
}

/// How each label's open end attaches: to an unlabeled vertex, or to
/// another label through a bare edge.
fn open_end_patterns(labels: usize, n_u: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(
        i: usize,
        labels: usize,
        n_u: usize,
        taken: &mut Vec<bool>,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if i == labels {
            out.push(cur.clone());
            return;
        }
        if taken[i] {
            rec(i + 1, labels, n_u, taken, cur, out);
            return;
        }
        taken[i] = true;
        for u in 0..n_u {
            cur.push((u, n_u + i));
            rec(i + 1, labels, n_u, taken, cur, out);
            cur.pop();
        }
        for j in i + 1..labels {
            if !taken[j] {
                taken[j] = true;
                cur.push((n_u + i, n_u + j));
                rec(i + 1, labels, n_u, taken, cur, out);
                cur.pop();
                taken[j] = false;
            }
        }
        taken[i] = false;
    }
    let mut out = Vec::new();
    rec(
        0,
        labels,
        n_u,
        &mut vec![false; labels],
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// All fragments with `labels` open ends and at most `max_edges` edges
/// whose unlabeled vertices have even, positive degree, without circles,
/// one per class under permutations of the unlabeled vertices (labels
/// stay fixed). Sorted by edge count, then by key.
pub fn eulerian_fragments(labels: usize, max_edges: usize) -> Vec<Fragment> {
    let mut keys: BTreeSet<(usize, usize, Vec<(usize, usize)>)> = BTreeSet::new();
    // each unlabeled vertex has degree at least two
    let max_unlabeled = (2 * max_edges).saturating_sub(labels) / 2;
    for n_u in 0..=max_unlabeled {
        let pairs: Vec<(usize, usize)> = (0..n_u)
            .flat_map(|a| (a..n_u).map(move |b| (a, b)))
            .collect();
        for open in open_end_patterns(labels, n_u) {
            if open.len() > max_edges {
                continue;
            }
            for r in 0..=max_edges - open.len() {
                for inner in pairs.iter().copied().combinations_with_replacement(r) {
                    let mut deg = vec![0usize; n_u];
                    for &(a, b) in open.iter().chain(&inner) {
                        if a < n_u {
                            deg[a] += 1;
                        }
                        if b < n_u {
                            deg[b] += 1;
                        }
                    }
                    if deg.iter().any(|&d| d == 0 || d % 2 == 1) {
                        continue;
                    }
                    let edges: Vec<(usize, usize)> = open.iter().chain(&inner).copied().collect();
                    keys.insert((edges.len(), n_u, fragment_key(n_u, &edges)));
                }
            }
        }
    }
    keys.into_iter()
        .map(|(_, n_u, edges)| {
            let g = Multigraph::new(n_u + labels, edges, 0).expect("valid endpoints");
            Fragment::new(g, (n_u..n_u + labels).collect()).expect("labels have degree one")
        })
        .collect()
}
