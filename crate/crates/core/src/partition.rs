//! Partition functions of edge-coloring models: the ordinary `p_h`, the
//! digraph skew-partition function `Σ_φ (-1)^{o(φ)} ∏_v h(φ_v)`, the
//! graph-level `s_h` with its direct dual-basis form, the fixed-`φ` partial
//! sums, and the invariance verifier.

use std::collections::HashMap;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{
    all_compatible_local_orders, all_eulerian_orientations, circuit_decomposition,
    compatible_local_order, edge_of, eulerian_orientation, Dart, LocalOrder, Multigraph,
    Orientation,
};
use crate::limits::Limits;
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::skew::{dual_vector, SkewTensor, SymModel};

/// Directed multigraph with a total order of the arc ends at each vertex.
///
/// Arc `a` owns two ends: `2a` is its tail, `2a + 1` its head. `order[v]`
/// lists the ends at `v`; a directed loop appears twice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocallyOrderedDigraph {
    vertex_count: usize,
    arcs: Vec<(usize, usize)>,
    order: Vec<Vec<Dart>>,
}

impl LocallyOrderedDigraph {
    pub fn new(
        vertex_count: usize,
        arcs: Vec<(usize, usize)>,
        order: Vec<Vec<Dart>>,
    ) -> Result<Self> {
        if order.len() != vertex_count {
            return Err(Error::SizeMismatch {
                expected: vertex_count,
                found: order.len(),
            });
        }
        let mut seen = vec![false; 2 * arcs.len()];
        for (v, ends) in order.iter().enumerate() {
            for &d in ends {
                let Some((t, h)) = arcs.get(edge_of(d)) else {
                    return Err(Error::InvalidGraph(format!("unknown arc end {d}")));
                };
                let at = if d % 2 == 0 { *t } else { *h };
                if at != v || seen[d] {
                    return Err(Error::InvalidGraph(format!(
                        "arc end {d} misplaced or repeated at vertex {v}"
                    )));
                }
                seen[d] = true;
            }
        }
        if let Some(d) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidGraph(format!(
                "arc end {d} missing from the local order"
            )));
        }
        Ok(LocallyOrderedDigraph {
            vertex_count,
            arcs,
            order,
        })
    }

    /// The digraph induced by an orientation and local order of a graph.
    /// Arc `e` is edge `e`; circles are dropped.
    pub fn from_graph(g: &Multigraph, omega: &Orientation, kappa: &LocalOrder) -> Result<Self> {
        if omega.reversed().len() != g.edge_count() || kappa.vertices().len() != g.vertex_count() {
            return Err(Error::NotCompatible(
                "orientation or order has the wrong size".into(),
            ));
        }
        let arcs = omega.arcs(g);
        let order = kappa
            .vertices()
            .iter()
            .map(|ends| {
                ends.iter()
                    .map(|&d| 2 * edge_of(d) + usize::from(!omega.is_outgoing(d)))
                    .collect()
            })
            .collect();
        LocallyOrderedDigraph::new(g.vertex_count(), arcs, order)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn order(&self) -> &[Vec<Dart>] {
        &self.order
    }

    /// Reverse arc `a`, keeping every position of the local order.
    pub fn flip_arc(&mut self, a: usize) {
        let (t, h) = self.arcs[a];
        self.arcs[a] = (h, t);
        for ends in &mut self.order {
            for d in ends.iter_mut() {
                if edge_of(*d) == a {
                    *d ^= 1;
                }
            }
        }
    }

    /// Swap two positions of the order at `v`.
    pub fn swap(&mut self, v: usize, i: usize, j: usize) {
        self.order[v].swap(i, j);
    }

    fn slots(&self) -> Vec<Vec<(usize, bool)>> {
        self.order
            .iter()
            .map(|ends| ends.iter().map(|&d| (edge_of(d), d % 2 == 0)).collect())
            .collect()
    }
}

/// `φ_v`: the colors of the arcs at `v` in local order, outgoing ones
/// shifted by `ℓ` modulo `2ℓ`. `phi[a]` is the color (in `1..=2ℓ`) of arc `a`.
pub fn phi_v(d: &LocallyOrderedDigraph, v: usize, phi: &[usize], ell: usize) -> Vec<usize> {
    d.order[v]
        .iter()
        .map(|&end| shift_letter(phi[edge_of(end)], end % 2 == 0, ell))
        .collect()
}

#[inline]
fn shift_letter(color: usize, outgoing: bool, ell: usize) -> usize {
    if outgoing {
        (color - 1 + ell) % (2 * ell) + 1
    } else {
        color
    }
}

/// Words whose table would exceed this many entries are evaluated directly.
const TABLE_CAP: usize = 1 << 12;

/// Depth at which the search fans out across threads, once the instance is
/// large enough to be worth it.
const PARALLEL_THRESHOLD: u64 = 1 << 14;

/// Backtracking sum over edge colorings `E → [q]` of
/// `(-1)^{#edges colored ≤ negative_below} ∏_v value(word_v)`. Each vertex
/// is evaluated as soon as its last edge is colored, and zero factors prune
/// the subtree.
struct ColoringSum<'a, T, F> {
    q: usize,
    shift: usize,
    negative_below: usize,
    slots: &'a [Vec<(usize, bool)>],
    edge_order: Vec<usize>,
    completes: Vec<Vec<usize>>,
    value: F,
    base: T,
}

impl<'a, T, F> ColoringSum<'a, T, F>
where
    T: Scalar,
    F: Fn(&[usize]) -> T + Sync,
{
    fn new(
        q: usize,
        shift: usize,
        negative_below: usize,
        edge_count: usize,
        slots: &'a [Vec<(usize, bool)>],
        value: F,
    ) -> Self {
        // visit vertices in breadth-first order so vertices close early
        let n = slots.len();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); edge_count];
        for (v, s) in slots.iter().enumerate() {
            for &(e, _) in s {
                incident[e].push(v);
            }
        }
        let mut seen_v = vec![false; n];
        let mut seen_e = vec![false; edge_count];
        let mut edge_order = Vec::with_capacity(edge_count);
        let mut queue = std::collections::VecDeque::new();
        for root in 0..n {
            if seen_v[root] {
                continue;
            }
            seen_v[root] = true;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                for &(e, _) in &slots[v] {
                    if !seen_e[e] {
                        seen_e[e] = true;
                        edge_order.push(e);
                    }
                    for &w in &incident[e] {
                        if !seen_v[w] {
                            seen_v[w] = true;
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        // edges touching no vertex (never produced by the callers) still
        // need a color
        edge_order.extend((0..edge_count).filter(|&e| !seen_e[e]));

        let mut step = vec![0usize; edge_count];
        for (i, &e) in edge_order.iter().enumerate() {
            step[e] = i;
        }
        let mut completes = vec![Vec::new(); edge_count];
        let mut base = T::one();
        for (v, s) in slots.iter().enumerate() {
            match s.iter().map(|&(e, _)| step[e]).max() {
                Some(last) => completes[last].push(v),
                None => base = base * value(&[]),
            }
        }
        ColoringSum {
            q,
            shift,
            negative_below,
            slots,
            edge_order,
            completes,
            value,
            base,
        }
    }

    fn vertex_value(&self, v: usize, colors: &[usize], word: &mut Vec<usize>) -> T {
        word.clear();
        word.extend(self.slots[v].iter().map(|&(e, out)| {
            let c = colors[e];
            if out && self.shift > 0 {
                (c - 1 + self.shift) % self.q + 1
            } else {
                c
            }
        }));
        (self.value)(word)
    }

    /// Extends the partial coloring one edge at a time. At `stop_depth`
    /// the state is handed to `leaf` instead of recursing further.
    fn search(
        &self,
        depth: usize,
        stop_depth: usize,
        colors: &mut Vec<usize>,
        prod: &T,
        negative: bool,
        word: &mut Vec<usize>,
        leaf: &mut dyn FnMut(&[usize], &T, bool),
    ) {
        if depth == stop_depth {
            leaf(colors, prod, negative);
            return;
        }
        let e = self.edge_order[depth];
        'color: for c in 1..=self.q {
            colors[e] = c;
            let mut p = prod.clone();
            for &v in &self.completes[depth] {
                let val = self.vertex_value(v, colors, word);
                if val.is_zero() {
                    continue 'color;
                }
                p = p * val;
            }
            let neg = negative ^ (c <= self.negative_below);
            self.search(depth + 1, stop_depth, colors, &p, neg, word, leaf);
        }
        colors[e] = 0;
    }

    fn total(&self) -> T {
        let m = self.edge_order.len();
        if self.base.is_zero() {
            return T::zero();
        }
        let count = (self.q as u64).checked_pow(m as u32).unwrap_or(u64::MAX);
        let mut word = Vec::new();
        if count < PARALLEL_THRESHOLD || m < 2 {
            let mut acc = T::zero();
            let mut colors = vec![0usize; m];
            self.search(
                0,
                m,
                &mut colors,
                &self.base,
                false,
                &mut word,
                &mut |_, p, neg| {
                    acc = if neg {
                        acc.clone() - p.clone()
                    } else {
                        acc.clone() + p.clone()
                    };
                },
            );
            return acc;
        }
        let mut split = 1;
        while split < m - 1 && (self.q as u64).pow(split as u32) < 256 {
            split += 1;
        }
        let mut prefixes: Vec<(Vec<usize>, T, bool)> = Vec::new();
        let mut colors = vec![0usize; m];
        self.search(
            0,
            split,
            &mut colors,
            &self.base,
            false,
            &mut word,
            &mut |c, p, neg| {
                prefixes.push((c.to_vec(), p.clone(), neg));
            },
        );
        let partial: Vec<T> = prefixes
            .into_par_iter()
            .map(|(mut colors, p, neg)| {
                let mut acc = T::zero();
                let mut word = Vec::new();
                self.search(
                    split,
                    m,
                    &mut colors,
                    &p,
                    neg,
                    &mut word,
                    &mut |_, p, neg| {
                        acc = if neg {
                            acc.clone() - p.clone()
                        } else {
                            acc.clone() + p.clone()
                        };
                    },
                );
                acc
            })
            .collect();
        partial.into_iter().fold(T::zero(), |a, b| a + b)
    }
}

/// Dense tables of `h` on all words of each length that occurs, when small.
fn skew_tables<T: Scalar>(
    h: &SkewTensor<T>,
    degrees: impl Iterator<Item = usize>,
) -> HashMap<usize, Vec<T>> {
    let mut tables = HashMap::new();
    for d in degrees {
        if d > 0 && !tables.contains_key(&d) {
            if let Some(t) = h.word_table(d, TABLE_CAP) {
                tables.insert(d, t);
            }
        }
    }
    tables
}

fn table_lookup<T: Scalar>(
    h: &SkewTensor<T>,
    tables: &HashMap<usize, Vec<T>>,
    word: &[usize],
) -> T {
    match tables.get(&word.len()) {
        Some(table) => {
            let base = 2 * h.ell();
            let mut idx = 0;
            for &w in word.iter().rev() {
                idx = idx * base + (w - 1);
            }
            table[idx].clone()
        }
        None => h.eval_unchecked(word),
    }
}

/// `Σ_{φ: A → [2ℓ]} (-1)^{o(φ)} ∏_v h(φ_v)` with `o(φ) = |φ⁻¹([ℓ])|`.
pub fn skew_partition_digraph<T: Scalar>(
    h: &SkewTensor<T>,
    d: &LocallyOrderedDigraph,
    limits: &Limits,
) -> Result<T> {
    let ell = h.ell();
    limits.check_power("arc colorings", 2 * ell, d.arcs.len())?;
    let slots = d.slots();
    let tables = skew_tables(h, slots.iter().map(Vec::len));
    let engine = ColoringSum::new(2 * ell, ell, ell, d.arcs.len(), &slots, |w: &[usize]| {
        table_lookup(h, &tables, w)
    });
    Ok(engine.total())
}

/// `s_h(G)`: zero unless `G` is Eulerian; otherwise `(-1)^{c(G,κ)}` times
/// the digraph sum for the canonical `(ω, κ)`, times `(-2ℓ)` per circle.
pub fn skew_partition<T: Scalar>(h: &SkewTensor<T>, g: &Multigraph, limits: &Limits) -> Result<T> {
    if !g.is_eulerian() {
        return Ok(T::zero());
    }
    let omega = eulerian_orientation(g)?;
    let kappa = compatible_local_order(g, &omega)?;
    let c = circuit_decomposition(g, &omega, &kappa)?.circuit_count();
    let d = LocallyOrderedDigraph::from_graph(g, &omega, &kappa)?;
    let value = skew_partition_digraph(h, &d, limits)?;
    Ok(T::sign(c) * value * circle_factor(h.ell(), g.circle_count()))
}

fn circle_factor<T: Scalar>(ell: usize, circles: usize) -> T {
    T::powi(&T::from_int(-2 * ell as i64), circles)
}

/// The defining sum for a fixed `(G, ω, κ)`, evaluated literally: incoming
/// slots carry `e_{φ(a)}`, outgoing slots carry `f_{φ(a)}`, expanded
/// through the dual basis. Includes the `(-1)^{c(G,κ)}` and circle factors.
pub fn skew_partition_direct<T: Scalar>(
    h: &SkewTensor<T>,
    g: &Multigraph,
    omega: &Orientation,
    kappa: &LocalOrder,
    limits: &Limits,
) -> Result<T> {
    let ell = h.ell();
    let m = g.edge_count();
    limits.check_power("edge colorings", 2 * ell, m)?;
    let c = circuit_decomposition(g, omega, kappa)?.circuit_count();
    let mut total = T::zero();
    let mut phi = vec![1usize; m];
    let count = (2 * ell).pow(m as u32);
    for code in 0..count {
        let mut rest = code;
        for p in phi.iter_mut() {
            *p = rest % (2 * ell) + 1;
            rest /= 2 * ell;
        }
        total = total + direct_term(h, omega, kappa, &phi);
    }
    Ok(T::sign(c) * total * circle_factor(ell, g.circle_count()))
}

/// `∏_v h(⊗ e_{φ(in)} ⊗ f_{φ(out)})` for one coloring.
fn direct_term<T: Scalar>(
    h: &SkewTensor<T>,
    omega: &Orientation,
    kappa: &LocalOrder,
    phi: &[usize],
) -> T {
    let ell = h.ell();
    let mut prod = T::one();
    let mut word = Vec::new();
    for ends in kappa.vertices() {
        word.clear();
        let mut negative = false;
        for &d in ends {
            let color = phi[edge_of(d)];
            if omega.is_outgoing(d) {
                let (s, idx) = dual_vector(color, ell).expect("color in range");
                negative ^= s < 0;
                word.push(idx);
            } else {
                word.push(color);
            }
        }
        let v = h.eval_unchecked(&word);
        if v.is_zero() {
            return T::zero();
        }
        prod = if negative { prod * -v } else { prod * v };
    }
    prod
}

/// `s_{h,φ}(G, ω, κ)` for a base coloring `φ: E → [ℓ]`: the sum over the
/// shifts `ψ: E → {0, ℓ}`. Circles contribute `(-2ℓ)` each, so summing
/// over all `φ` reproduces [`skew_partition`].
pub fn skew_partition_fixed_phi<T: Scalar>(
    h: &SkewTensor<T>,
    g: &Multigraph,
    omega: &Orientation,
    kappa: &LocalOrder,
    phi: &[usize],
) -> Result<T> {
    let ell = h.ell();
    let m = g.edge_count();
    if phi.len() != m {
        return Err(Error::SizeMismatch {
            expected: m,
            found: phi.len(),
        });
    }
    if let Some(&bad) = phi.iter().find(|&&c| c == 0 || c > ell) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            dimension: ell,
        });
    }
    if m >= 64 {
        return Err(Error::TooLarge {
            what: "shift patterns",
            count: BigUint::from(1u8) << m,
            bound: u64::MAX,
        });
    }
    let c = circuit_decomposition(g, omega, kappa)?.circuit_count();
    let mut total = T::zero();
    let mut colors = vec![0usize; m];
    for mask in 0u64..1 << m {
        for (e, col) in colors.iter_mut().enumerate() {
            *col = phi[e] + if mask >> e & 1 == 1 { ell } else { 0 };
        }
        total = total + direct_term(h, omega, kappa, &colors);
    }
    Ok(T::sign(c) * total * circle_factor(ell, g.circle_count()))
}

/// `p_h(G) = Σ_{φ: E → [k]} ∏_v h(colors at v)`. Undefined on circles.
pub fn partition_function<T: Scalar>(
    h: &SymModel<T>,
    g: &Multigraph,
    limits: &Limits,
) -> Result<T> {
    if g.circle_count() > 0 {
        return Err(Error::CirclesUnsupported(g.circle_count()));
    }
    limits.check_power("edge colorings", h.color_count(), g.edge_count())?;
    let slots: Vec<Vec<(usize, bool)>> = (0..g.vertex_count())
        .map(|v| g.darts_at(v).iter().map(|&d| (edge_of(d), false)).collect())
        .collect();
    let engine = ColoringSum::new(
        h.color_count(),
        0,
        0,
        g.edge_count(),
        &slots,
        |w: &[usize]| h.value(w),
    );
    Ok(engine.total())
}

/// Settings for [`verify_invariance`].
#[derive(Clone, Copy, Debug)]
pub struct InvarianceOptions {
    /// Maximum number of `(ω, κ)` pairs; above it, pairs are sampled.
    pub budget: usize,
    pub seed: u64,
    /// Maximum number of base colorings `φ: E → [ℓ]` checked per pair.
    pub phi_budget: usize,
}

impl Default for InvarianceOptions {
    fn default() -> Self {
        InvarianceOptions {
            budget: 2_000,
            seed: 0,
            phi_budget: 16,
        }
    }
}

/// Recomputes the defining sum over Eulerian orientations and compatible
/// local orders (all of them when within budget, otherwise a seeded sample)
/// and checks that the value, and each fixed-`φ` partial sum, never
/// changes.
pub fn verify_invariance<T: Scalar>(
    h: &SkewTensor<T>,
    g: &Multigraph,
    options: &InvarianceOptions,
    limits: &Limits,
) -> Result<CheckReport> {
    g.ensure_eulerian()?;
    let m = g.edge_count();
    if m > 24 {
        return Err(Error::TooLarge {
            what: "orientations",
            count: BigUint::from(1u8) << m,
            bound: 1 << 24,
        });
    }
    let ell = h.ell();
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);

    let omega0 = eulerian_orientation(g)?;
    let kappa0 = compatible_local_order(g, &omega0)?;
    let reference = skew_partition_direct(h, g, &omega0, &kappa0, limits)?;

    let phi_count = BigUint::from(ell).pow(m as u32);
    let phis: Vec<Vec<usize>> = if phi_count <= BigUint::from(options.phi_budget) {
        (0..ell.pow(m as u32))
            .map(|mut code| {
                (0..m)
                    .map(|_| {
                        let c = code % ell + 1;
                        code /= ell;
                        c
                    })
                    .collect()
            })
            .collect()
    } else {
        (0..options.phi_budget)
            .map(|_| (0..m).map(|_| rng.gen_range(1..=ell)).collect())
            .collect()
    };
    let phi_reference: Vec<T> = phis
        .iter()
        .map(|phi| skew_partition_fixed_phi(h, g, &omega0, &kappa0, phi))
        .collect::<Result<_>>()?;

    let orientations = all_eulerian_orientations(g);
    let per_orientation: BigUint = (0..g.vertex_count())
        .map(|v| {
            let half = g.degree(v) / 2;
            let f: BigUint = (1..=half).map(BigUint::from).product();
            &f * &f
        })
        .product();
    let pairs = &per_orientation * BigUint::from(orientations.len());

    let mut chosen: Vec<(Orientation, LocalOrder)> = Vec::new();
    if pairs <= BigUint::from(options.budget) {
        for omega in &orientations {
            for kappa in all_compatible_local_orders(g, omega)? {
                chosen.push((omega.clone(), kappa));
            }
        }
    } else {
        for _ in 0..options.budget {
            let omega = orientations
                .choose(&mut rng)
                .expect("Eulerian graphs have an orientation");
            let base = compatible_local_order(g, omega)?;
            let order = base
                .vertices()
                .iter()
                .map(|ends| {
                    let mut ins: Vec<Dart> = ends.iter().step_by(2).copied().collect();
                    let mut outs: Vec<Dart> = ends.iter().skip(1).step_by(2).copied().collect();
                    ins.shuffle(&mut rng);
                    outs.shuffle(&mut rng);
                    ins.into_iter()
                        .zip(outs)
                        .flat_map(|(a, b)| [a, b])
                        .collect()
                })
                .collect();
            chosen.push((omega.clone(), LocalOrder::new(order)));
        }
    }

    let mut report = CheckReport::new("invariance");
    for (omega, kappa) in &chosen {
        let value = skew_partition_direct(h, g, omega, kappa, limits)?;
        report.record(value == reference, || {
            format!(
                "{g:?}: value {value} for ω={:?}, expected {reference}",
                omega.reversed()
            )
        });
        for (phi, expected) in phis.iter().zip(&phi_reference) {
            let part = skew_partition_fixed_phi(h, g, omega, kappa, phi)?;
            report.record(&part == expected, || {
                format!("{g:?}: s_(h,φ) for φ={phi:?} is {part}, expected {expected}")
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skew::{build_double_factorial_model, build_martin_model};
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn canonical(g: &Multigraph) -> (Orientation, LocalOrder) {
        let omega = eulerian_orientation(g).unwrap();
        let kappa = compatible_local_order(g, &omega).unwrap();
        (omega, kappa)
    }

    fn directed_c3() -> LocallyOrderedDigraph {
        let g = Multigraph::cycle(3);
        let (omega, kappa) = canonical(&g);
        LocallyOrderedDigraph::from_graph(&g, &omega, &kappa).unwrap()
    }

    #[test]
    fn phi_v_shifts_outgoing_letters() {
        // vertex 0 of a one-arc digraph 0 -> 1
        let d = LocallyOrderedDigraph::new(2, vec![(0, 1)], vec![vec![0], vec![1]]).unwrap();
        assert_eq!(phi_v(&d, 1, &[1], 1), vec![1]);
        assert_eq!(phi_v(&d, 0, &[1], 1), vec![2]);
        assert_eq!(phi_v(&d, 0, &[4], 2), vec![2]);
    }

    #[test]
    fn digraph_examples() {
        let h = build_martin_model::<Rational>(1);
        let lim = Limits::default();
        let d = directed_c3();
        assert_eq!(skew_partition_digraph(&h, &d, &lim).unwrap(), q(2));

        let mut flipped = d.clone();
        flipped.flip_arc(0);
        assert_eq!(skew_partition_digraph(&h, &flipped, &lim).unwrap(), q(-2));
        // the two orders touched by the flip, each transposed
        let (t, hd) = d.arcs()[0];
        flipped.swap(t, 0, 1);
        flipped.swap(hd, 0, 1);
        assert_eq!(skew_partition_digraph(&h, &flipped, &lim).unwrap(), q(-2));

        let single = LocallyOrderedDigraph::new(1, vec![], vec![vec![]]).unwrap();
        assert_eq!(skew_partition_digraph(&h, &single, &lim).unwrap(), q(1));
    }

    #[test]
    fn digraph_rejects_bad_orders() {
        assert!(LocallyOrderedDigraph::new(2, vec![(0, 1)], vec![vec![1], vec![0]]).is_err());
        assert!(LocallyOrderedDigraph::new(2, vec![(0, 1)], vec![vec![0], vec![]]).is_err());
        assert!(LocallyOrderedDigraph::new(1, vec![(0, 0)], vec![vec![0, 0]]).is_err());
    }

    #[test]
    fn graph_examples() {
        let h = build_martin_model::<Rational>(1);
        let lim = Limits::default();
        let c3 = Multigraph::cycle(3);
        assert_eq!(skew_partition(&h, &c3, &lim).unwrap(), q(-2));
        assert_eq!(
            skew_partition(&h, &c3.disjoint_union(&c3), &lim).unwrap(),
            q(4)
        );
        assert_eq!(
            skew_partition(&h, &Multigraph::path(2), &lim).unwrap(),
            q(0)
        );
        assert_eq!(
            skew_partition(&h, &Multigraph::figure_eight(), &lim).unwrap(),
            q(0)
        );
        assert_eq!(
            skew_partition(&h, &Multigraph::circles(1), &lim).unwrap(),
            q(-2)
        );
        let h2 = build_martin_model::<Rational>(2);
        assert_eq!(
            skew_partition(&h2, &Multigraph::circles(1), &lim).unwrap(),
            q(-4)
        );
        assert_eq!(
            skew_partition(&h, &Multigraph::empty(), &lim).unwrap(),
            q(1)
        );
    }

    #[test]
    fn direct_route_matches_canonical() {
        let h = build_martin_model::<Rational>(2);
        let lim = Limits::default();
        for g in [
            Multigraph::cycle(3),
            Multigraph::figure_eight(),
            Multigraph::bowtie(),
        ] {
            let (omega, kappa) = canonical(&g);
            assert_eq!(
                skew_partition_direct(&h, &g, &omega, &kappa, &lim).unwrap(),
                skew_partition(&h, &g, &lim).unwrap()
            );
        }
    }

    #[test]
    fn fixed_phi_examples() {
        let h = build_martin_model::<Rational>(1);
        let c3 = Multigraph::cycle(3);
        let (omega, kappa) = canonical(&c3);
        assert_eq!(
            skew_partition_fixed_phi(&h, &c3, &omega, &kappa, &[1, 1, 1]).unwrap(),
            q(-2)
        );
        let f8 = Multigraph::figure_eight();
        let (omega, kappa) = canonical(&f8);
        assert_eq!(
            skew_partition_fixed_phi(&h, &f8, &omega, &kappa, &[1, 1]).unwrap(),
            q(0)
        );
        assert!(skew_partition_fixed_phi(&h, &f8, &omega, &kappa, &[2, 1]).is_err());
    }

    #[test]
    fn ordinary_partition_function_examples() {
        let lim = Limits::default();
        let one = SymModel::constant(1, q(1));
        assert_eq!(
            partition_function(&one, &Multigraph::bowtie(), &lim).unwrap(),
            q(1)
        );
        let df1 = build_double_factorial_model::<Rational>(1);
        assert_eq!(
            partition_function(&df1, &Multigraph::bowtie(), &lim).unwrap(),
            q(3)
        );
        let df2 = build_double_factorial_model::<Rational>(2);
        assert_eq!(
            partition_function(&df2, &Multigraph::cycle(3), &lim).unwrap(),
            q(2)
        );
        assert_eq!(
            partition_function(&df2, &Multigraph::circles(1), &lim),
            Err(Error::CirclesUnsupported(1))
        );
    }

    #[test]
    fn guardrail_reports_exact_count() {
        let h = build_martin_model::<Rational>(1);
        let err = skew_partition(&h, &Multigraph::cycle(12), &Limits::new(1000)).unwrap_err();
        assert_eq!(
            err,
            Error::TooLarge {
                what: "arc colorings",
                count: BigUint::from(4096u32),
                bound: 1000
            }
        );
    }

    #[test]
    fn invariance_examples() {
        let h = build_martin_model::<Rational>(1);
        let lim = Limits::default();
        for g in [
            Multigraph::cycle(3),
            Multigraph::figure_eight(),
            Multigraph::cycle(4),
        ] {
            let r = verify_invariance(&h, &g, &InvarianceOptions::default(), &lim).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
            assert!(r.instances > 0);
        }
        // C3 has two Eulerian orientations and one order each
        let r = verify_invariance(
            &h,
            &Multigraph::cycle(3),
            &InvarianceOptions::default(),
            &lim,
        )
        .unwrap();
        assert_eq!(r.instances, 2 * 2);
    }

    #[test]
    fn parallel_path_agrees_with_serial() {
        // 16 edges with ℓ = 1 crosses the parallel threshold
        let h = build_martin_model::<Rational>(1);
        let g = Multigraph::cycle(8).disjoint_union(&Multigraph::cycle(8));
        assert_eq!(skew_partition(&h, &g, &Limits::default()).unwrap(), q(4));
        let bowties = Multigraph::bowtie()
            .disjoint_union(&Multigraph::bowtie())
            .disjoint_union(&Multigraph::figure_eight());
        assert_eq!(
            skew_partition(&h, &bowties, &Limits::default()).unwrap(),
            q(0)
        );
    }
}
