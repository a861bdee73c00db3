//! Half-edge multigraphs, Eulerian orientations, compatible local orderings
//! and the circuit decompositions they induce.
//!
//! Edge `e` owns darts `2e` (at `edges[e].0`) and `2e + 1` (at `edges[e].1`).
//! A loop has both darts at the same vertex. Vertex-free circles are kept as
//! a plain counter.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Dart = usize;

#[inline]
pub fn edge_of(d: Dart) -> usize {
    d / 2
}

#[inline]
pub fn opposite(d: Dart) -> Dart {
    d ^ 1
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMultigraph", into = "RawMultigraph")]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    circle_count: usize,
    incidence: Vec<Vec<Dart>>,
}

#[derive(Serialize, Deserialize)]
struct RawMultigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    circle_count: usize,
}

impl TryFrom<RawMultigraph> for Multigraph {
    type Error = Error;

    fn try_from(raw: RawMultigraph) -> Result<Self> {
        Multigraph::new(raw.vertex_count, raw.edges, raw.circle_count)
    }
}

impl From<Multigraph> for RawMultigraph {
    fn from(g: Multigraph) -> Self {
        RawMultigraph {
            vertex_count: g.vertex_count,
            edges: g.edges,
            circle_count: g.circle_count,
        }
    }
}

impl Multigraph {
    pub fn new(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        circle_count: usize,
    ) -> Result<Self> {
        let mut incidence = vec![Vec::new(); vertex_count];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge {e} = ({u}, {v}) references a vertex outside 0..{vertex_count}"
                )));
            }
            incidence[u].push(2 * e);
            incidence[v].push(2 * e + 1);
        }
        for darts in &mut incidence {
            darts.sort_unstable();
        }
        Ok(Multigraph {
            vertex_count,
            edges,
            circle_count,
            incidence,
        })
    }

    pub fn empty() -> Self {
        Multigraph::new(0, Vec::new(), 0).unwrap()
    }

    /// `count` disjoint circles and nothing else.
    pub fn circles(count: usize) -> Self {
        Multigraph::new(0, Vec::new(), count).unwrap()
    }

    /// Cycle on `n >= 1` vertices; `n = 1` is a loop, `n = 2` a digon.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 1, "cycle needs at least one vertex");
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::new(n, edges, 0).unwrap()
    }

    /// Path with `n` edges.
    pub fn path(n: usize) -> Self {
        let edges = (0..n).map(|i| (i, i + 1)).collect();
        Multigraph::new(n + 1, edges, 0).unwrap()
    }

    /// Two triangles sharing vertex 0.
    pub fn bowtie() -> Self {
        Multigraph::new(5, vec![(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)], 0).unwrap()
    }

    /// One vertex carrying two loops.
    pub fn figure_eight() -> Self {
        Multigraph::new(1, vec![(0, 0), (0, 0)], 0).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Multigraph::new(n, edges, 0).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn circle_count(&self) -> usize {
        self.circle_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn dart_vertex(&self, d: Dart) -> usize {
        let (u, v) = self.edges[edge_of(d)];
        if d % 2 == 0 {
            u
        } else {
            v
        }
    }

    /// Darts at `v` in increasing dart order.
    pub fn darts_at(&self, v: usize) -> &[Dart] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.edges[e].0 == self.edges[e].1
    }

    /// First vertex of odd degree, if any.
    pub fn odd_vertex(&self) -> Option<usize> {
        (0..self.vertex_count).find(|&v| self.degree(v) % 2 == 1)
    }

    /// Every vertex has even degree. Circles impose no condition.
    pub fn is_eulerian(&self) -> bool {
        self.odd_vertex().is_none()
    }

    pub fn ensure_eulerian(&self) -> Result<()> {
        match self.odd_vertex() {
            Some(vertex) => Err(Error::NotEulerian {
                vertex,
                degree: self.degree(vertex),
            }),
            None => Ok(()),
        }
    }

    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let shift = self.vertex_count;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Multigraph::new(
            self.vertex_count + other.vertex_count,
            edges,
            self.circle_count + other.circle_count,
        )
        .unwrap()
    }

    /// Connected components, counting isolated vertices and circles.
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        uf.set_count() + self.circle_count
    }

    /// Number of components of the subgraph formed by `subset` (edge
    /// indices), provided every vertex it touches meets exactly two of its
    /// darts. The empty subset has zero components.
    pub fn two_regular_components(&self, subset: &[usize]) -> Result<usize> {
        let mut darts = vec![0usize; self.vertex_count];
        for &e in subset {
            let (u, v) = self.edges[e];
            darts[u] += 1;
            darts[v] += 1;
        }
        if let Some(vertex) = (0..self.vertex_count).find(|&v| darts[v] != 0 && darts[v] != 2) {
            return Err(Error::NotTwoRegular {
                vertex,
                darts: darts[vertex],
            });
        }
        let mut uf = UnionFind::new(self.vertex_count);
        for &e in subset {
            let (u, v) = self.edges[e];
            uf.union(u, v);
        }
        let mut roots: Vec<usize> = (0..self.vertex_count)
            .filter(|&v| darts[v] > 0)
            .map(|v| uf.find(v))
            .collect();
        roots.sort_unstable();
        roots.dedup();
        Ok(roots.len())
    }

    /// Whole graph is 2-regular: every vertex has degree exactly 2.
    /// Circles are allowed, isolated vertices are not.
    pub fn is_two_regular(&self) -> bool {
        (0..self.vertex_count).all(|v| self.degree(v) == 2)
    }

    /// Same graph with the circles removed.
    pub fn without_circles(&self) -> Multigraph {
        Multigraph {
            circle_count: 0,
            ..self.clone()
        }
    }

    pub fn with_circles(&self, circle_count: usize) -> Multigraph {
        Multigraph {
            circle_count,
            ..self.clone()
        }
    }

    /// Parse the line-oriented graph format:
    ///
    /// ```text
    /// graph <vertex_count> <circle_count>
    /// edge <u> <v>
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        parse_graph_with(text, |line, _| Err(Error::parse(line, "unknown directive")))
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph {} {}", self.vertex_count, self.circle_count)?;
        for &(u, v) in &self.edges {
            writeln!(f, "edge {u} {v}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Multigraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Multigraph::parse(s)
    }
}

/// Parses the graph format, handing any directive other than `graph` and
/// `edge` to `extra` together with its 1-based line number.
pub(crate) fn parse_graph_with<F>(text: &str, mut extra: F) -> Result<Multigraph>
where
    F: FnMut(usize, &[&str]) -> Result<()>,
{
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens[0] {
            "graph" => {
                if header.is_some() {
                    return Err(Error::parse(line, "duplicate graph header"));
                }
                if tokens.len() != 3 {
                    return Err(Error::parse(
                        line,
                        "expected `graph <vertex_count> <circle_count>`",
                    ));
                }
                let n = parse_usize(line, tokens[1])?;
                let c = parse_usize(line, tokens[2])?;
                header = Some((n, c, line));
            }
            "edge" => {
                let Some((n, _, _)) = header else {
                    return Err(Error::parse(line, "edge before graph header"));
                };
                if tokens.len() != 3 {
                    return Err(Error::parse(line, "expected `edge <u> <v>`"));
                }
                let u = parse_usize(line, tokens[1])?;
                let v = parse_usize(line, tokens[2])?;
                if u >= n || v >= n {
                    return Err(Error::parse(line, format!("vertex out of range 0..{n}")));
                }
                edges.push((u, v));
            }
            _ => {
                if header.is_none() {
                    return Err(Error::parse(line, "missing graph header"));
                }
                extra(line, &tokens)?
            }
        }
    }
    let (n, c, _) = header.ok_or_else(|| Error::parse(1, "missing graph header"))?;
    Multigraph::new(n, edges, c)
}

pub(crate) fn parse_usize(line: usize, token: &str) -> Result<usize> {
    token.parse().map_err(|_| {
        Error::parse(
            line,
            format!("expected a nonnegative integer, found `{token}`"),
        )
    })
}

/// Per-edge direction. Edge `e` runs from its tail dart to its head dart;
/// unreversed edges have tail `2e` and head `2e + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Orientation {
    reversed: Vec<bool>,
}

impl Orientation {
    pub fn natural(edge_count: usize) -> Self {
        Orientation {
            reversed: vec![false; edge_count],
        }
    }

    pub fn from_reversed(reversed: Vec<bool>) -> Self {
        Orientation { reversed }
    }

    pub fn reversed(&self) -> &[bool] {
        &self.reversed
    }

    pub fn tail(&self, e: usize) -> Dart {
        2 * e + usize::from(self.reversed[e])
    }

    pub fn head(&self, e: usize) -> Dart {
        2 * e + usize::from(!self.reversed[e])
    }

    pub fn is_outgoing(&self, d: Dart) -> bool {
        self.tail(edge_of(d)) == d
    }

    pub fn flip(&mut self, e: usize) {
        self.reversed[e] = !self.reversed[e];
    }

    /// `(tail vertex, head vertex)` of each edge.
    pub fn arcs(&self, g: &Multigraph) -> Vec<(usize, usize)> {
        (0..g.edge_count())
            .map(|e| (g.dart_vertex(self.tail(e)), g.dart_vertex(self.head(e))))
            .collect()
    }

    /// Indegree equals outdegree everywhere.
    pub fn is_eulerian_for(&self, g: &Multigraph) -> bool {
        if self.reversed.len() != g.edge_count() {
            return false;
        }
        (0..g.vertex_count()).all(|v| {
            let out = g
                .darts_at(v)
                .iter()
                .filter(|&&d| self.is_outgoing(d))
                .count();
            2 * out == g.degree(v)
        })
    }
}

/// Eulerian orientation obtained by tracing closed trails: each trail
/// starts on the lowest unused edge (from its first endpoint) and always
/// leaves along the lowest unused dart.
pub fn eulerian_orientation(g: &Multigraph) -> Result<Orientation> {
    g.ensure_eulerian()?;
    let m = g.edge_count();
    let mut used = vec![false; m];
    let mut reversed = vec![false; m];
    for start in 0..m {
        if used[start] {
            continue;
        }
        used[start] = true;
        let mut at = g.dart_vertex(2 * start + 1);
        loop {
            let next = g.darts_at(at).iter().copied().find(|&d| !used[edge_of(d)]);
            let Some(d) = next else { break };
            let e = edge_of(d);
            used[e] = true;
            reversed[e] = d % 2 == 1;
            at = g.dart_vertex(opposite(d));
        }
    }
    Ok(Orientation { reversed })
}

/// Every Eulerian orientation of `g`, in increasing bitmask order of the
/// reversal flags. Exponential in the edge count.
pub fn all_eulerian_orientations(g: &Multigraph) -> Vec<Orientation> {
    let m = g.edge_count();
    assert!(m < 32, "too many edges to enumerate orientations");
    (0u64..1 << m)
        .map(|mask| Orientation {
            reversed: (0..m).map(|e| mask >> e & 1 == 1).collect(),
        })
        .filter(|o| o.is_eulerian_for(g))
        .collect()
}

/// Per-vertex total order of darts, position `i` (0-based) holding
/// `order[v][i]`. Position `i` here is position `i + 1` in the 1-based
/// convention, so compatibility means even indices hold incoming darts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LocalOrder {
    order: Vec<Vec<Dart>>,
}

impl LocalOrder {
    pub fn new(order: Vec<Vec<Dart>>) -> Self {
        LocalOrder { order }
    }

    pub fn at(&self, v: usize) -> &[Dart] {
        &self.order[v]
    }

    pub fn vertices(&self) -> &[Vec<Dart>] {
        &self.order
    }

    /// 0-based position of each dart at its vertex.
    pub fn positions(&self, dart_count: usize) -> Vec<usize> {
        let mut pos = vec![usize::MAX; dart_count];
        for darts in &self.order {
            for (i, &d) in darts.iter().enumerate() {
                pos[d] = i;
            }
        }
        pos
    }

    pub fn is_compatible(&self, g: &Multigraph, omega: &Orientation) -> bool {
        if self.order.len() != g.vertex_count() || !omega.is_eulerian_for(g) {
            return false;
        }
        (0..g.vertex_count()).all(|v| {
            let mut seen: Vec<Dart> = self.order[v].clone();
            seen.sort_unstable();
            seen == g.darts_at(v)
                && self.order[v]
                    .iter()
                    .enumerate()
                    .all(|(i, &d)| omega.is_outgoing(d) == (i % 2 == 1))
        })
    }

    /// Swap the darts at two positions of one vertex.
    pub fn swap(&mut self, v: usize, i: usize, j: usize) {
        self.order[v].swap(i, j);
    }
}

/// Incoming darts at odd (1-based) positions, outgoing at even ones, each
/// class in increasing dart order.
pub fn compatible_local_order(g: &Multigraph, omega: &Orientation) -> Result<LocalOrder> {
    if !omega.is_eulerian_for(g) {
        return Err(Error::NotCompatible(
            "orientation is not Eulerian for this graph".into(),
        ));
    }
    let order = (0..g.vertex_count())
        .map(|v| {
            let (outs, ins): (Vec<Dart>, Vec<Dart>) =
                g.darts_at(v).iter().partition(|&&d| omega.is_outgoing(d));
            ins.into_iter()
                .zip(outs)
                .flat_map(|(i, o)| [i, o])
                .collect()
        })
        .collect();
    Ok(LocalOrder { order })
}

/// All local orders compatible with `omega`: at each vertex, every
/// arrangement of the incoming darts on odd positions times every
/// arrangement of the outgoing darts on even positions.
pub fn all_compatible_local_orders(g: &Multigraph, omega: &Orientation) -> Result<Vec<LocalOrder>> {
    use itertools::Itertools;
    let base = compatible_local_order(g, omega)?;
    let per_vertex: Vec<Vec<Vec<Dart>>> = (0..g.vertex_count())
        .map(|v| {
            let darts = base.at(v);
            let ins: Vec<Dart> = darts.iter().step_by(2).copied().collect();
            let outs: Vec<Dart> = darts.iter().skip(1).step_by(2).copied().collect();
            let k = ins.len();
            let in_perms: Vec<Vec<Dart>> = ins.iter().copied().permutations(k).collect();
            let out_perms: Vec<Vec<Dart>> = outs.iter().copied().permutations(k).collect();
            in_perms
                .iter()
                .cartesian_product(out_perms.iter())
                .map(|(i, o)| i.iter().zip(o).flat_map(|(&a, &b)| [a, b]).collect())
                .collect()
        })
        .collect();
    if per_vertex.is_empty() {
        return Ok(vec![LocalOrder { order: Vec::new() }]);
    }
    Ok(per_vertex
        .into_iter()
        .multi_cartesian_product()
        .map(|order| LocalOrder { order })
        .collect())
}

/// The κ-circuits of a compatible pair. Each circuit lists the tail darts
/// of its arcs in traversal order; circles are not included.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitDecomposition {
    pub circuits: Vec<Vec<Dart>>,
}

impl CircuitDecomposition {
    pub fn circuit_count(&self) -> usize {
        self.circuits.len()
    }
}

pub fn circuit_decomposition(
    g: &Multigraph,
    omega: &Orientation,
    kappa: &LocalOrder,
) -> Result<CircuitDecomposition> {
    if !kappa.is_compatible(g, omega) {
        return Err(Error::NotCompatible(
            "local order is not compatible with the orientation".into(),
        ));
    }
    let pos = kappa.positions(g.dart_count());
    let mut visited = vec![false; g.edge_count()];
    let mut circuits = Vec::new();
    for start in 0..g.edge_count() {
        if visited[start] {
            continue;
        }
        let mut circuit = Vec::new();
        let mut e = start;
        while !visited[e] {
            visited[e] = true;
            circuit.push(omega.tail(e));
            let head = omega.head(e);
            let v = g.dart_vertex(head);
            let next_tail = kappa.at(v)[pos[head] + 1];
            e = edge_of(next_tail);
        }
        debug_assert_eq!(e, start);
        circuits.push(circuit);
    }
    Ok(CircuitDecomposition { circuits })
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }

    pub(crate) fn set_count(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&x| self.find(x) == x)
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Multigraph {
        Multigraph::cycle(3)
    }

    #[test]
    fn eulerian_checks() {
        assert!(triangle().is_eulerian());
        assert!(!Multigraph::path(1).is_eulerian());
        assert!(Multigraph::circles(3).is_eulerian());
        assert!(Multigraph::figure_eight().is_eulerian());
    }

    #[test]
    fn orientation_of_triangle_is_cyclic() {
        let g = triangle();
        let omega = eulerian_orientation(&g).unwrap();
        assert!(omega.is_eulerian_for(&g));
        assert_eq!(omega.arcs(&g), vec![(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn orientation_of_figure_eight() {
        let g = Multigraph::figure_eight();
        let omega = eulerian_orientation(&g).unwrap();
        assert!(omega.is_eulerian_for(&g));
        let kappa = compatible_local_order(&g, &omega).unwrap();
        assert_eq!(kappa.at(0).len(), 4);
        assert!(!omega.is_outgoing(kappa.at(0)[0]));
        assert!(!omega.is_outgoing(kappa.at(0)[2]));
    }

    #[test]
    fn path_is_not_eulerian() {
        assert_eq!(
            eulerian_orientation(&Multigraph::path(2)),
            Err(Error::NotEulerian {
                vertex: 0,
                degree: 1
            })
        );
    }

    #[test]
    fn incompatible_orientation_rejected() {
        let g = triangle();
        let omega = Orientation::from_reversed(vec![false, true, false]);
        assert!(matches!(
            compatible_local_order(&g, &omega),
            Err(Error::NotCompatible(_))
        ));
    }

    #[test]
    fn isolated_vertex_has_empty_order() {
        let g = Multigraph::new(2, vec![(0, 0)], 0).unwrap();
        let omega = eulerian_orientation(&g).unwrap();
        let kappa = compatible_local_order(&g, &omega).unwrap();
        assert!(kappa.at(1).is_empty());
    }

    #[test]
    fn triangle_has_one_circuit() {
        let g = triangle();
        let omega = eulerian_orientation(&g).unwrap();
        let kappa = compatible_local_order(&g, &omega).unwrap();
        let dec = circuit_decomposition(&g, &omega, &kappa).unwrap();
        assert_eq!(dec.circuit_count(), 1);
        assert_eq!(dec.circuits[0].len(), 3);
    }

    #[test]
    fn figure_eight_circuits_depend_on_pairing() {
        let g = Multigraph::figure_eight();
        // loop 0: 0 -> 1, loop 1: 2 -> 3; darts 1, 3 incoming.
        let omega = Orientation::natural(2);
        let same = LocalOrder::new(vec![vec![1, 0, 3, 2]]);
        let crossed = LocalOrder::new(vec![vec![1, 2, 3, 0]]);
        assert_eq!(
            circuit_decomposition(&g, &omega, &same)
                .unwrap()
                .circuit_count(),
            2
        );
        assert_eq!(
            circuit_decomposition(&g, &omega, &crossed)
                .unwrap()
                .circuit_count(),
            1
        );
    }

    #[test]
    fn union_and_components() {
        let u = triangle().disjoint_union(&triangle());
        assert_eq!(u.vertex_count(), 6);
        assert_eq!(u.edge_count(), 6);
        assert_eq!(u.component_count(), 2);
        assert_eq!(
            Multigraph::circles(2)
                .disjoint_union(&triangle())
                .component_count(),
            3
        );
    }

    #[test]
    fn two_regular_subsets() {
        let g = Multigraph::bowtie();
        assert_eq!(g.two_regular_components(&[0, 1, 2]), Ok(1));
        assert_eq!(g.two_regular_components(&[]), Ok(0));
        assert_eq!(
            g.two_regular_components(&[0, 1, 2, 3, 4, 5]),
            Err(Error::NotTwoRegular {
                vertex: 0,
                darts: 4
            })
        );
    }

    #[test]
    fn text_format() {
        let text = "# bowtie\ngraph 5 0\nedge 0 1\nedge 1 2 # second\nedge 2 0\n\nedge 0 3\nedge 3 4\nedge 4 0\n";
        let g = Multigraph::parse(text).unwrap();
        assert_eq!(g, Multigraph::bowtie());
        assert_eq!(Multigraph::parse(&g.to_text()).unwrap(), g);
        assert_eq!(
            Multigraph::parse("graph 0 1").unwrap(),
            Multigraph::circles(1)
        );
        assert!(matches!(
            Multigraph::parse("graph 2 0\nedge 0 2"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Multigraph::parse("edge 0 1"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Multigraph::parse("graph 1 0\nfoo"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn compatible_orders_of_figure_eight() {
        let g = Multigraph::figure_eight();
        let omega = eulerian_orientation(&g).unwrap();
        let orders = all_compatible_local_orders(&g, &omega).unwrap();
        assert_eq!(orders.len(), 4);
        assert!(orders.iter().all(|k| k.is_compatible(&g, &omega)));
    }
}
