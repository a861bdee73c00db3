//! The circuit partition polynomial `J(G, x)` and its closed-form
//! evaluations at positive integers and at negative even integers.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{edge_of, Multigraph, UnionFind};
use crate::limits::Limits;
use crate::perm::perfect_matchings;
use crate::skew::double_factorial;

/// Polynomial with integer coefficients, `coeffs[i]` multiplying `x^i`.
/// No trailing zeros; the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        IntPolynomial::monomial(0)
    }

    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &IntPolynomial, i: usize| p.coeffs.get(i).cloned().unwrap_or_default();
        IntPolynomial::new((0..n).map(|i| get(self, i) + get(other, i)).collect())
    }
}

/// Coefficients from the constant term up, separated by spaces; the zero
/// polynomial prints as `0`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Number of transition systems: `∏_v (deg(v) - 1)!!`.
pub fn transition_system_count(g: &Multigraph) -> BigUint {
    (0..g.vertex_count())
        .map(|v| {
            let d = g.degree(v) as u64;
            if d == 0 {
                BigUint::one()
            } else {
                (1..d).step_by(2).map(BigUint::from).product()
            }
        })
        .product()
}

/// `J(G, x)`: over all transition systems (a perfect pairing of the darts
/// at every vertex), `x` to the number of closed walks, times `x` per
/// circle. Zero when `G` is not Eulerian.
pub fn circuit_partition_polynomial(g: &Multigraph, limits: &Limits) -> Result<IntPolynomial> {
    if !g.is_eulerian() {
        return Ok(IntPolynomial::zero());
    }
    limits.check("transition systems", &transition_system_count(g))?;
    let choices: Vec<Vec<Vec<(usize, usize)>>> = (0..g.vertex_count())
        .filter(|&v| g.degree(v) > 0)
        .map(|v| perfect_matchings(g.darts_at(v)))
        .collect();
    let darts = g.dart_count();
    let edges = g.edge_count();

    // fan out over the pairings at the first vertex
    let (head, tail) = match choices.split_first() {
        Some((h, t)) => (h.clone(), t.to_vec()),
        None => (vec![Vec::new()], Vec::new()),
    };
    let histograms: Vec<Vec<u64>> = head
        .par_iter()
        .map(|first| {
            let mut hist = vec![0u64; edges + 1];
            let mut idx = vec![0usize; tail.len()];
            loop {
                let mut uf = UnionFind::new(darts);
                for e in 0..edges {
                    uf.union(2 * e, 2 * e + 1);
                }
                for &(a, b) in first {
                    uf.union(a, b);
                }
                for (pairings, &i) in tail.iter().zip(&idx) {
                    for &(a, b) in &pairings[i] {
                        uf.union(a, b);
                    }
                }
                hist[uf.set_count()] += 1;
                // odometer
                let mut pos = 0;
                loop {
                    if pos == idx.len() {
                        return hist;
                    }
                    idx[pos] += 1;
                    if idx[pos] < tail[pos].len() {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
            }
        })
        .collect();
    let mut coeffs = vec![BigInt::zero(); edges + 1];
    for hist in histograms {
        for (k, n) in hist.into_iter().enumerate() {
            coeffs[k] += n;
        }
    }
    let poly = IntPolynomial::new(coeffs);
    Ok(poly.mul(&IntPolynomial::monomial(g.circle_count())))
}

/// `J(G, k)` for a positive integer `k` as a sum over ordered partitions
/// `A_1, …, A_k` of the edges into Eulerian parts of
/// `∏_v ∏_i (deg_{A_i}(v) - 1)!!`, times `k` per circle.
pub fn eval_positive(g: &Multigraph, k: usize, limits: &Limits) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    let m = g.edge_count();
    limits.check_power("ordered edge partitions", k, m)?;
    let n = g.vertex_count();
    let total = (k as u64).pow(m as u32);
    let mut sum = BigInt::zero();
    let mut class = vec![0usize; m];
    let mut deg = vec![0i64; n * k];
    for code in 0..total {
        let mut rest = code;
        for c in class.iter_mut() {
            *c = (rest % k as u64) as usize;
            rest /= k as u64;
        }
        deg.iter_mut().for_each(|d| *d = 0);
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            deg[u * k + class[e]] += 1;
            deg[v * k + class[e]] += 1;
        }
        if deg.iter().any(|d| d % 2 == 1) {
            continue;
        }
        let mut term = BigInt::one();
        for &d in &deg {
            term *= double_factorial(d - 1);
        }
        sum += term;
    }
    Ok(sum * BigInt::from(k).pow(g.circle_count() as u32))
}

/// `J(G, -2ℓ)` as a sum over ordered partitions `H_1, …, H_ℓ` of the edges
/// into 2-regular (possibly empty) parts of `(-2)^{Σ c(H_i)}`, times `-2ℓ`
/// per circle.
pub fn eval_negative_even(g: &Multigraph, ell: usize, limits: &Limits) -> Result<BigInt> {
    if ell == 0 {
        return Err(Error::Precondition("ℓ must be positive".into()));
    }
    let m = g.edge_count();
    limits.check_power("ordered edge partitions", ell, m)?;
    let n = g.vertex_count();
    let mut sum = BigInt::zero();
    let mut class = vec![0usize; m];
    let mut deg = vec![0u8; n * ell];
    let minus_two = BigInt::from(-2);

    // backtracking over the class of each edge, pruning at degree 3
    fn rec(
        g: &Multigraph,
        ell: usize,
        e: usize,
        class: &mut [usize],
        deg: &mut [u8],
        sum: &mut BigInt,
        minus_two: &BigInt,
    ) {
        let m = g.edge_count();
        if e == m {
            if deg.iter().any(|&d| d != 0 && d != 2) {
                return;
            }
            let mut comps = 0;
            for i in 0..ell {
                let part: Vec<usize> = (0..m).filter(|&x| class[x] == i).collect();
                comps += g
                    .two_regular_components(&part)
                    .expect("degrees already checked");
            }
            *sum += minus_two.pow(comps as u32);
            return;
        }
        let (u, v) = g.edges()[e];
        for i in 0..ell {
            deg[u * ell + i] += 1;
            deg[v * ell + i] += 1;
            if deg[u * ell + i] <= 2 && deg[v * ell + i] <= 2 {
                class[e] = i;
                rec(g, ell, e + 1, class, deg, sum, minus_two);
            }
            deg[u * ell + i] -= 1;
            deg[v * ell + i] -= 1;
        }
    }
    rec(g, ell, 0, &mut class, &mut deg, &mut sum, &minus_two);
    let circle = BigInt::from(-2 * ell as i64).pow(g.circle_count() as u32);
    Ok(sum * circle)
}

/// Best available evaluation of `J(G, x)`: the polynomial, plus the closed
/// form when `x` is a positive integer or a negative even integer.
/// Returns both values so callers can insist they agree.
pub fn evaluate_checked(
    g: &Multigraph,
    x: &BigInt,
    limits: &Limits,
) -> Result<(BigInt, Option<BigInt>)> {
    let poly = circuit_partition_polynomial(g, limits)?.eval(x);
    let closed = if x.is_positive() {
        let k = usize::try_from(x).ok();
        match k {
            Some(k) => Some(eval_positive(g, k, limits)?),
            None => None,
        }
    } else if x.is_negative() && (x % 2u8).is_zero() {
        match usize::try_from(-x / 2u8) {
            Ok(ell) => Some(eval_negative_even(g, ell, limits)?),
            Err(_) => None,
        }
    } else {
        None
    };
    Ok((poly, closed))
}

/// Closed walks of one transition system, each as the list of edges in
/// traversal order. Exposed for tests that need the walks themselves.
pub fn transition_walks(g: &Multigraph, pairing: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut partner = vec![usize::MAX; g.dart_count()];
    for &(a, b) in pairing {
        partner[a] = b;
        partner[b] = a;
    }
    let mut used = vec![false; g.edge_count()];
    let mut walks = Vec::new();
    for start in 0..g.edge_count() {
        if used[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut d = 2 * start;
        loop {
            let e = edge_of(d);
            if used[e] {
                break;
            }
            used[e] = true;
            walk.push(e);
            d = partner[d ^ 1];
        }
        walks.push(walk);
    }
    walks
}
