//! Directed perfect matchings on `[2m]` (1-based points) and the checks
//! built on them: union statistics, matching signs, the `A`/`B` matrices,
//! the sign identity, annihilation of the antisymmetrised generator and
//! the Gram identity for `τ`.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matrix::Matrix;
use crate::perm::{cycle_count, perfect_matchings, permutation_sign, permutations};
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::skew::{bilinear_form, tau_matching, SparseTensor};

/// Set of `m` arcs `(tail, head)` covering `1..=2m` exactly once. Arcs are
/// kept sorted by their smaller endpoint, so listing order carries no
/// structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DirectedMatching {
    arcs: Vec<(usize, usize)>,
}

impl DirectedMatching {
    pub fn new(mut arcs: Vec<(usize, usize)>) -> Result<Self> {
        let n = 2 * arcs.len();
        let mut seen = vec![false; n + 1];
        for &(a, b) in &arcs {
            for x in [a, b] {
                if x == 0 || x > n {
                    return Err(Error::InvalidMatching(format!("point {x} outside 1..={n}")));
                }
                if seen[x] {
                    return Err(Error::InvalidMatching(format!("point {x} covered twice")));
                }
                seen[x] = true;
            }
        }
        arcs.sort_by_key(|&(a, b)| a.min(b));
        Ok(DirectedMatching { arcs })
    }

    /// `(1,2), (3,4), …, (2m-1, 2m)`.
    pub fn standard(m: usize) -> Self {
        DirectedMatching {
            arcs: (0..m).map(|i| (2 * i + 1, 2 * i + 2)).collect(),
        }
    }

    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Image under a permutation of points; `perm[i]` (0-based) is the
    /// image of point `i + 1`, minus one.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), 2 * self.m());
        DirectedMatching::new(
            self.arcs
                .iter()
                .map(|&(a, b)| (perm[a - 1] + 1, perm[b - 1] + 1))
                .collect(),
        )
        .expect("permutation preserves a perfect matching")
    }

    /// Same matching with the arcs at the given positions reversed.
    pub fn flip(&self, which: &[usize]) -> Self {
        let mut arcs = self.arcs.clone();
        for &i in which {
            let (a, b) = arcs[i];
            arcs[i] = (b, a);
        }
        DirectedMatching::new(arcs).expect("flip preserves coverage")
    }

    fn mates(&self) -> (Vec<usize>, Vec<bool>) {
        let n = 2 * self.m();
        let mut mate = vec![0; n];
        let mut is_tail = vec![false; n];
        for &(a, b) in &self.arcs {
            mate[a - 1] = b - 1;
            mate[b - 1] = a - 1;
            is_tail[a - 1] = true;
        }
        (mate, is_tail)
    }
}

impl std::fmt::Display for DirectedMatching {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .arcs
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Cycle count of `M ∪ N` and parity of the number of arcs traversed
/// backwards when each cycle is walked from its lowest point, leaving
/// along the arc of `M`.
pub fn union_stats(m: &DirectedMatching, n: &DirectedMatching) -> Result<(usize, u8)> {
    if m.m() != n.m() {
        return Err(Error::SizeMismatch {
            expected: m.m(),
            found: n.m(),
        });
    }
    let (m_mate, m_tail) = m.mates();
    let (n_mate, n_tail) = n.mates();
    let points = 2 * m.m();
    let mut visited = vec![false; points];
    let mut cycles = 0;
    let mut odd = 0usize;
    for start in 0..points {
        if visited[start] {
            continue;
        }
        cycles += 1;
        let mut cur = start;
        loop {
            visited[cur] = true;
            if !m_tail[cur] {
                odd += 1;
            }
            cur = m_mate[cur];
            visited[cur] = true;
            if !n_tail[cur] {
                odd += 1;
            }
            cur = n_mate[cur];
            if cur == start {
                break;
            }
        }
    }
    Ok((cycles, (odd % 2) as u8))
}

/// Sign of any permutation carrying `M` onto the standard matching.
pub fn matching_sign(m: &DirectedMatching) -> i8 {
    let mut perm = vec![0; 2 * m.m()];
    for (i, &(a, b)) in m.arcs().iter().enumerate() {
        perm[a - 1] = 2 * i;
        perm[b - 1] = 2 * i + 1;
    }
    permutation_sign(&perm)
}

/// All directed perfect matchings of `[2m]`, sorted lexicographically by
/// arc list.
pub fn all_directed_matchings(m: usize) -> Vec<DirectedMatching> {
    let points: Vec<usize> = (1..=2 * m).collect();
    let mut out = Vec::new();
    for undirected in perfect_matchings(&points) {
        for mask in 0u32..1 << m {
            let arcs = undirected
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| if mask >> i & 1 == 1 { (b, a) } else { (a, b) })
                .collect();
            out.push(DirectedMatching::new(arcs).expect("valid matching"));
        }
    }
    out.sort();
    out
}

pub fn directed_matching_count(m: usize) -> BigUint {
    let odd: BigUint = (1..2 * m.max(1)).step_by(2).map(BigUint::from).product();
    if m == 0 {
        return BigUint::from(1u32);
    }
    odd << m
}

/// `A_{M,N} = (-2ℓ)^{c(M∪N)}` and `B_{M,N} = (2ℓ)^{c(M∪N)} (-1)^{o(M∪N)+m}`
/// over all directed matchings of `[2m]`, with the registry in the order
/// of [`all_directed_matchings`].
pub fn build_a_b<T: Scalar>(
    ell: usize,
    m: usize,
    limits: &Limits,
) -> Result<(Vec<DirectedMatching>, Matrix<T>, Matrix<T>)> {
    let count = directed_matching_count(m);
    limits.check("directed matching pairs", &(&count * &count))?;
    let matchings = all_directed_matchings(m);
    let k = matchings.len();
    let two_ell = T::from_int(2 * ell as i64);
    let mut a = Matrix::zeros(k, k);
    let mut b = Matrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            let (c, o) = union_stats(&matchings[i], &matchings[j])?;
            let pow = T::powi(&two_ell, c);
            a.set(i, j, T::sign(c) * pow.clone());
            b.set(i, j, T::sign(o as usize + m) * pow);
        }
    }
    let labels: Vec<String> = matchings.iter().map(ToString::to_string).collect();
    let a = a.with_labels(labels.clone(), labels.clone());
    let b = b.with_labels(labels.clone(), labels);
    Ok((matchings, a, b))
}

/// `(-1)^{o(M∪N)} = sgn(M) sgn(N) (-1)^{c(M∪N)}` over all ordered pairs,
/// plus its consequence `B = (-1)^m D A D` with `D = diag(sgn)` for ℓ = 1.
pub fn verify_sign_identity(m: usize, limits: &Limits) -> Result<CheckReport> {
    let count = directed_matching_count(m);
    limits.check("directed matching pairs", &(&count * &count))?;
    let matchings = all_directed_matchings(m);
    let signs: Vec<i8> = matchings.iter().map(matching_sign).collect();
    let mut report = CheckReport::new("signid");
    for (i, mi) in matchings.iter().enumerate() {
        for (j, mj) in matchings.iter().enumerate() {
            let (c, o) = union_stats(mi, mj)?;
            let lhs: i8 = if o == 0 { 1 } else { -1 };
            let rhs = signs[i] * signs[j] * if c % 2 == 0 { 1 } else { -1 };
            report.record(lhs == rhs, || format!("M={mi} N={mj}: c={c}, o parity={o}"));
        }
    }
    let (_, a, b) = build_a_b::<i64>(1, m, limits)?;
    let parity: i64 = if m % 2 == 0 { 1 } else { -1 };
    for i in 0..matchings.len() {
        for j in 0..matchings.len() {
            let expected = parity * i64::from(signs[i]) * i64::from(signs[j]) * a.get(i, j);
            report.record(*b.get(i, j) == expected, || {
                format!("B/A relation fails at ({}, {})", matchings[i], matchings[j])
            });
        }
    }
    Ok(report)
}

/// `τ(v₀) = Σ_{ρ ∈ S_{2ℓ+2}} sgn(ρ) τ(ρM₀)` is the zero tensor, and
/// `τ(M) + τ(M') = 0` for every negative flip `M'` of every `M`.
pub fn v0_annihilation<T: Scalar>(ell: usize, m: usize, limits: &Limits) -> Result<CheckReport> {
    let support = 2 * ell + 2;
    if 2 * m < support {
        return Err(Error::Precondition(format!(
            "the generator needs 2m >= 2ℓ+2, got 2m = {} and 2ℓ+2 = {support}",
            2 * m
        )));
    }
    let factorial: BigUint = (1..=support).map(BigUint::from).product();
    let per_term = BigUint::from(2 * ell).pow(m as u32);
    limits.check("generator terms", &(&factorial * &per_term))?;
    limits.check(
        "negative flips",
        &(directed_matching_count(m) * (BigUint::from(1u32) << m.saturating_sub(1)) * per_term),
    )?;

    let mut report = CheckReport::new("v0");
    let m0 = DirectedMatching::standard(m);
    let mut acc = SparseTensor::<T>::zero(ell, 2 * m);
    for rho in permutations(support) {
        let mut perm: Vec<usize> = (0..2 * m).collect();
        perm[..support].copy_from_slice(&rho);
        let term = tau_matching::<T>(&m0.relabel(&perm), ell);
        let sign = T::from_int(i64::from(permutation_sign(&rho)));
        acc.add_scaled(&term, &sign)?;
    }
    report.record(acc.is_zero(), || {
        format!(
            "τ(v₀) has {} nonzero coordinates for ℓ={ell}, m={m}",
            acc.nnz()
        )
    });

    for mat in all_directed_matchings(m) {
        let base = tau_matching::<T>(&mat, ell);
        for mask in 1u32..1 << m {
            if mask.count_ones() % 2 == 0 {
                continue;
            }
            let which: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
            let flipped = tau_matching::<T>(&mat.flip(&which), ell);
            let sum = base.add(&flipped)?;
            report.record(sum.is_zero(), || {
                format!("τ({mat}) + τ(flip {which:?}) ≠ 0")
            });
        }
    }
    Ok(report)
}

/// `⟨τ(M), τ(N)⟩ = B_{M,N}` for every ordered pair.
pub fn gram_check<T: Scalar>(ell: usize, m: usize, limits: &Limits) -> Result<CheckReport> {
    let count = directed_matching_count(m);
    let dim = BigUint::from(2 * ell).pow(2 * m as u32);
    limits.check("tensor coordinates", &dim)?;
    let (matchings, _, b) = build_a_b::<T>(ell, m, limits)?;
    limits.check(
        "form evaluations",
        &(&count * &count * BigUint::from(2 * ell).pow(m as u32)),
    )?;
    let taus: Vec<SparseTensor<T>> = matchings.iter().map(|mm| tau_matching(mm, ell)).collect();
    let mut report = CheckReport::new("gram");
    for i in 0..matchings.len() {
        for j in 0..matchings.len() {
            let value = bilinear_form(&taus[i], &taus[j])?;
            let expected = b.get(i, j);
            report.record(&value == expected, || {
                format!(
                    "⟨τ({}), τ({})⟩ = {value}, B = {expected}",
                    matchings[i], matchings[j]
                )
            });
        }
    }
    Ok(report)
}

/// Brute-force check that every permutation carrying `M` onto `M₀` has
/// the sign reported by [`matching_sign`]. Only for small `m`.
pub fn sign_is_well_defined(m: &DirectedMatching) -> bool {
    let target = DirectedMatching::standard(m.m());
    let expected = matching_sign(m);
    permutations(2 * m.m())
        .filter(|p| m.relabel(p) == target)
        .all(|p| permutation_sign(&p) == expected)
}

/// Cycle count of a permutation given as a 1-based image list; exposed
/// for callers working with point permutations of `[2m]`.
pub fn point_cycle_count(images: &[usize]) -> usize {
    let zero_based: Vec<usize> = images.iter().map(|&x| x - 1).collect();
    cycle_count(&zero_based)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn dm(arcs: &[(usize, usize)]) -> DirectedMatching {
        DirectedMatching::new(arcs.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(DirectedMatching::new(vec![(1, 1)]).is_err());
        assert!(DirectedMatching::new(vec![(1, 3)]).is_err());
        assert!(DirectedMatching::new(vec![(1, 2), (2, 3)]).is_err());
        assert_eq!(dm(&[(3, 4), (1, 2)]), DirectedMatching::standard(2));
    }

    #[test]
    fn union_stats_examples() {
        assert_eq!(union_stats(&dm(&[(1, 2)]), &dm(&[(1, 2)])), Ok((1, 1)));
        assert_eq!(union_stats(&dm(&[(1, 2)]), &dm(&[(2, 1)])), Ok((1, 0)));
        let (c, _) = union_stats(&DirectedMatching::standard(2), &dm(&[(1, 3), (2, 4)])).unwrap();
        assert_eq!(c, 1);
        assert!(matches!(
            union_stats(&dm(&[(1, 2)]), &DirectedMatching::standard(2)),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(matching_sign(&DirectedMatching::standard(2)), 1);
        assert_eq!(matching_sign(&dm(&[(2, 1), (3, 4)])), -1);
        assert_eq!(matching_sign(&dm(&[(3, 4), (1, 2)])), 1);
    }

    #[test]
    fn sign_well_defined_exhaustive() {
        for m in 1..=3 {
            for mat in all_directed_matchings(m) {
                assert!(sign_is_well_defined(&mat), "{mat}");
            }
        }
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(
            all_directed_matchings(1),
            vec![dm(&[(1, 2)]), dm(&[(2, 1)])]
        );
        assert_eq!(all_directed_matchings(2).len(), 12);
        assert_eq!(all_directed_matchings(3).len(), 120);
        assert_eq!(directed_matching_count(3), BigUint::from(120u32));
        assert_eq!(directed_matching_count(0), BigUint::from(1u32));
    }

    #[test]
    fn a_b_small() {
        let (_, a, b) = build_a_b::<Rational>(1, 1, &Limits::default()).unwrap();
        let q = Rational::from_int;
        assert_eq!(a.to_rows(), vec![vec![q(-2), q(-2)], vec![q(-2), q(-2)]]);
        assert_eq!(b.to_rows(), vec![vec![q(2), q(-2)], vec![q(-2), q(2)]]);
        for (ell, m) in [(1, 2), (2, 2), (1, 3)] {
            let (_, a, b) = build_a_b::<Rational>(ell, m, &Limits::default()).unwrap();
            assert!(a.is_symmetric() && b.is_symmetric());
            let d = Rational::from_int(2 * ell as i64);
            for i in 0..a.rows() {
                assert_eq!(*b.get(i, i), Rational::powi(&d, m));
                assert_eq!(*a.get(i, i), Rational::powi(&-d.clone(), m));
            }
        }
    }

    #[test]
    fn sign_identity_small() {
        let r1 = verify_sign_identity(1, &Limits::default()).unwrap();
        assert!(r1.passed());
        assert_eq!(r1.instances, 8);
        let r2 = verify_sign_identity(2, &Limits::default()).unwrap();
        assert!(r2.passed());
        assert_eq!(r2.instances, 2 * 144);
    }

    #[test]
    fn gram_small() {
        let r = gram_check::<Rational>(1, 1, &Limits::default()).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.instances, 4);
    }

    #[test]
    fn v0_precondition() {
        assert!(matches!(
            v0_annihilation::<Rational>(2, 2, &Limits::default()),
            Err(Error::Precondition(_))
        ));
        let r = v0_annihilation::<Rational>(1, 2, &Limits::default()).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn guardrail() {
        assert!(matches!(
            gram_check::<Rational>(1, 3, &Limits::new(100)),
            Err(Error::TooLarge { .. })
        ));
    }
}
