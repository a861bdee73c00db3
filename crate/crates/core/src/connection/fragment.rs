use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{
    edge_of, parse_graph_with, parse_usize, Dart, LocalOrder, Multigraph, Orientation,
};

/// A graph with `k` distinct degree-one vertices labeled `1..=k`.
/// `labels[i]` is the vertex carrying label `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fragment {
    graph: Multigraph,
    labels: Vec<usize>,
}

impl Fragment {
    pub fn new(graph: Multigraph, labels: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; graph.vertex_count()];
        for (i, &v) in labels.iter().enumerate() {
            if v >= graph.vertex_count() {
                return Err(Error::InvalidGraph(format!(
                    "label {} on vertex {v}, which does not exist",
                    i + 1
                )));
            }
            if seen[v] {
                return Err(Error::InvalidGraph(format!(
                    "vertex {v} carries two labels"
                )));
            }
            seen[v] = true;
            if graph.degree(v) != 1 {
                return Err(Error::InvalidGraph(format!(
                    "labeled vertex {v} has degree {}, expected 1",
                    graph.degree(v)
                )));
            }
        }
        Ok(Fragment { graph, labels })
    }

    /// `k` disjoint edges joining labels `i` and `i + k`: the unit for the
    /// fragment product.
    pub fn unit(k: usize) -> Self {
        let edges = (0..k).map(|i| (i, i + k)).collect();
        let graph = Multigraph::new(2 * k, edges, 0).expect("valid endpoints");
        Fragment::new(graph, (0..2 * k).collect()).expect("labels have degree one")
    }

    /// One vertex with `k` open ends.
    pub fn star(k: usize) -> Self {
        let edges = (1..=k).map(|i| (0, i)).collect();
        let graph = Multigraph::new(k + 1, edges, 0).expect("valid endpoints");
        Fragment::new(graph, (1..=k).collect()).expect("labels have degree one")
    }

    /// Edges between labeled vertices only, one per pair (1-based labels).
    pub fn matching(pairs: &[(usize, usize)]) -> Result<Self> {
        let k = 2 * pairs.len();
        let edges = pairs.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
        let graph = Multigraph::new(k, edges, 0)?;
        Fragment::new(graph, (0..k).collect())
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Number of labeled vertices.
    pub fn k(&self) -> usize {
        self.labels.len()
    }

    pub fn is_labeled(&self, v: usize) -> bool {
        self.labels.contains(&v)
    }

    /// Label (1-based) of each vertex, 0 for unlabeled ones.
    pub fn label_map(&self) -> Vec<usize> {
        let mut map = vec![0; self.graph.vertex_count()];
        for (i, &v) in self.labels.iter().enumerate() {
            map[v] = i + 1;
        }
        map
    }

    /// Every unlabeled vertex has even degree.
    pub fn is_eulerian(&self) -> bool {
        let map = self.label_map();
        (0..self.graph.vertex_count()).all(|v| map[v] > 0 || self.graph.degree(v) % 2 == 0)
    }

    /// Graph format followed by `label <vertex> <index>` lines.
    pub fn parse(text: &str) -> Result<Self> {
        let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
        let graph = parse_graph_with(text, |line, tokens| {
            if tokens[0] != "label" {
                return Err(Error::parse(
                    line,
                    format!("unknown directive `{}`", tokens[0]),
                ));
            }
            if tokens.len() != 3 {
                return Err(Error::parse(line, "expected `label <vertex> <index>`"));
            }
            pairs.push((
                parse_usize(line, tokens[1])?,
                parse_usize(line, tokens[2])?,
                line,
            ));
            Ok(())
        })?;
        let k = pairs.len();
        let mut labels = vec![usize::MAX; k];
        for &(v, idx, line) in &pairs {
            if idx == 0 || idx > k {
                return Err(Error::parse(
                    line,
                    format!("label index {idx} outside 1..={k}"),
                ));
            }
            if labels[idx - 1] != usize::MAX {
                return Err(Error::parse(line, format!("label {idx} used twice")));
            }
            labels[idx - 1] = v;
        }
        Fragment::new(graph, labels).map_err(|e| match e {
            Error::InvalidGraph(msg) => Error::parse(pairs.first().map_or(1, |p| p.2), msg),
            other => other,
        })
    }

    /// Several fragments in one text, each starting at its `graph` line.
    pub fn parse_many(text: &str) -> Result<Vec<Self>> {
        let mut chunks: Vec<(usize, String)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let content = line.split('#').next().unwrap_or("").trim();
            if content.split_whitespace().next() == Some("graph") {
                chunks.push((i, String::new()));
            } else if !content.is_empty() && chunks.is_empty() {
                return Err(Error::parse(i + 1, "missing graph header"));
            }
            if let Some((_, chunk)) = chunks.last_mut() {
                chunk.push_str(line);
                chunk.push('\n');
            }
        }
        chunks
            .into_iter()
            .map(|(offset, chunk)| {
                Fragment::parse(&chunk).map_err(|e| match e {
                    Error::Parse { line, message } => Error::Parse {
                        line: line + offset,
                        message,
                    },
                    other => other,
                })
            })
            .collect()
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Fragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.graph)?;
        for (i, &v) in self.labels.iter().enumerate() {
            writeln!(f, "label {v} {}", i + 1)?;
        }
        Ok(())
    }
}

/// `F₁ ∗ F₂`: equally labeled vertices are removed and their edges joined.
/// An open end joined back onto itself through labeled vertices only
/// closes into a circle.
pub fn glue(f1: &Fragment, f2: &Fragment) -> Result<Multigraph> {
    if f1.k() != f2.k() {
        return Err(Error::LabelMismatch {
            left: f1.k(),
            right: f2.k(),
        });
    }
    let n1 = f1.graph.vertex_count();
    let n = n1 + f2.graph.vertex_count();
    let mut edges: Vec<Option<(usize, usize)>> = f1
        .graph
        .edges()
        .iter()
        .copied()
        .chain(f2.graph.edges().iter().map(|&(u, v)| (u + n1, v + n1)))
        .map(Some)
        .collect();
    let mut removed = vec![false; n];
    for &v in &f1.labels {
        removed[v] = true;
    }
    for &v in &f2.labels {
        removed[v + n1] = true;
    }
    let mut circles = f1.graph.circle_count() + f2.graph.circle_count();
    for (&a, &b) in f1.labels.iter().zip(&f2.labels) {
        let b = b + n1;
        // merge b into a, giving a vertex of degree two, then suppress it
        for e in edges.iter_mut().flatten() {
            if e.0 == b {
                e.0 = a;
            }
            if e.1 == b {
                e.1 = a;
            }
        }
        let at: Vec<usize> = (0..edges.len())
            .filter(|&i| edges[i].is_some_and(|(u, v)| u == a || v == a))
            .collect();
        match at[..] {
            [e] => {
                debug_assert_eq!(edges[e], Some((a, a)));
                edges[e] = None;
                circles += 1;
            }
            [e1, e2] => {
                let other = |(u, v): (usize, usize)| if u == a { v } else { u };
                let far = other(edges[e2].expect("present"));
                let (u, v) = edges[e1].expect("present");
                edges[e1] = Some(if u == a { (far, v) } else { (u, far) });
                edges[e2] = None;
            }
            _ => unreachable!("labeled vertices have degree one"),
        }
    }
    let mut index = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if !removed[v] {
            index[v] = next;
            next += 1;
        }
    }
    let edges = edges
        .into_iter()
        .flatten()
        .map(|(u, v)| (index[u], index[v]))
        .collect();
    Multigraph::new(next, edges, circles)
}

/// Fragments are Eulerian at unlabeled vertices, carry an even number `2k`
/// of labels and have no circles.
fn ensure_tensor_ready(f: &Fragment) -> Result<()> {
    if f.graph.circle_count() > 0 {
        return Err(Error::NotEulerianFragment(
            "fragment has circle components".into(),
        ));
    }
    if f.k() % 2 == 1 {
        return Err(Error::NotEulerianFragment(format!(
            "odd number {} of open ends",
            f.k()
        )));
    }
    if !f.is_eulerian() {
        return Err(Error::NotEulerianFragment(
            "an unlabeled vertex has odd degree".into(),
        ));
    }
    Ok(())
}

/// Orientation balanced at every unlabeled vertex with exactly half of the
/// labeled vertices receiving an arc: orient the graph with temporary edges
/// joining labels `i` and `i + k`, then drop them.
pub fn fragment_orientation(f: &Fragment) -> Result<Orientation> {
    ensure_tensor_ready(f)?;
    let k = f.k() / 2;
    let mut edges = f.graph.edges().to_vec();
    edges.extend((0..k).map(|i| (f.labels[i], f.labels[i + k])));
    let augmented = Multigraph::new(f.graph.vertex_count(), edges, 0)?;
    let omega = crate::graph::eulerian_orientation(&augmented)?;
    Ok(Orientation::from_reversed(
        omega.reversed()[..f.graph.edge_count()].to_vec(),
    ))
}

/// Incoming darts on odd positions and outgoing on even ones at every
/// unlabeled vertex, in dart order; a labeled vertex lists its one dart.
pub fn fragment_local_order(f: &Fragment, omega: &Orientation) -> Result<LocalOrder> {
    let g = &f.graph;
    let map = f.label_map();
    let mut order = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        if map[v] > 0 {
            order.push(g.darts_at(v).to_vec());
            continue;
        }
        let (outs, ins): (Vec<Dart>, Vec<Dart>) =
            g.darts_at(v).iter().partition(|&&d| omega.is_outgoing(d));
        if outs.len() != ins.len() {
            return Err(Error::NotCompatible(format!("vertex {v} is not balanced")));
        }
        order.push(
            ins.into_iter()
                .zip(outs)
                .flat_map(|(i, o)| [i, o])
                .collect(),
        );
    }
    Ok(LocalOrder::new(order))
}

/// Walk structure of a compatible pair on a fragment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FragmentWalks {
    /// Number of closed circuits avoiding the labeled vertices.
    pub circuits: usize,
    /// `(i, j)` (1-based labels) for each directed walk from label `i` to
    /// label `j`.
    pub walks: Vec<(usize, usize)>,
}

/// Splits the edges into closed circuits and directed walks between
/// labeled vertices, following "position `i` in, position `i + 1` out".
pub fn fragment_walks(
    f: &Fragment,
    omega: &Orientation,
    kappa: &LocalOrder,
) -> Result<FragmentWalks> {
    ensure_tensor_ready(f)?;
    let g = &f.graph;
    let map = f.label_map();
    if omega.reversed().len() != g.edge_count() || kappa.vertices().len() != g.vertex_count() {
        return Err(Error::NotCompatible(
            "orientation or order has the wrong size".into(),
        ));
    }
    for v in 0..g.vertex_count() {
        let mut ends = kappa.at(v).to_vec();
        ends.sort_unstable();
        if ends != g.darts_at(v) {
            return Err(Error::NotCompatible(format!(
                "order at vertex {v} is not a permutation"
            )));
        }
        if map[v] == 0
            && kappa
                .at(v)
                .iter()
                .enumerate()
                .any(|(i, &d)| omega.is_outgoing(d) != (i % 2 == 1))
        {
            return Err(Error::NotCompatible(format!(
                "order at vertex {v} does not alternate incoming/outgoing"
            )));
        }
    }
    let starts: Vec<usize> = (0..f.k())
        .filter(|&i| omega.is_outgoing(g.darts_at(f.labels[i])[0]))
        .collect();
    if 2 * starts.len() != f.k() {
        return Err(Error::NotCompatible(format!(
            "{} of {} labeled vertices have an outgoing arc, expected half",
            starts.len(),
            f.k()
        )));
    }
    let pos = kappa.positions(g.dart_count());
    let mut used = vec![false; g.edge_count()];
    let mut walks = Vec::new();
    for &i in &starts {
        let mut e = edge_of(g.darts_at(f.labels[i])[0]);
        loop {
            used[e] = true;
            let head = omega.head(e);
            let v = g.dart_vertex(head);
            if map[v] > 0 {
                walks.push((i + 1, map[v]));
                break;
            }
            e = edge_of(kappa.at(v)[pos[head] + 1]);
        }
    }
    let mut circuits = 0;
    for start in 0..g.edge_count() {
        if used[start] {
            continue;
        }
        circuits += 1;
        let mut e = start;
        while !used[e] {
            used[e] = true;
            let head = omega.head(e);
            let v = g.dart_vertex(head);
            e = edge_of(kappa.at(v)[pos[head] + 1]);
        }
    }
    Ok(FragmentWalks { circuits, walks })
}
