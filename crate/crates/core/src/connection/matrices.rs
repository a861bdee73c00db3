use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, UnionFind};
use crate::limits::Limits;
use crate::matrix::Matrix;
use crate::perm::{cycle_count, matching_count, perfect_matchings, permutation_sign, permutations};
use crate::scalar::Scalar;

use super::fragment::{glue, Fragment};

/// The finite submatrix `f(Fᵢ ∗ Fⱼ)` of the connection matrix on the given
/// fragments. Entries are computed in parallel.
pub fn connection_submatrix<T, F>(f: F, fragments: &[Fragment]) -> Result<Matrix<T>>
where
    T: Scalar,
    F: Fn(&Multigraph) -> Result<T> + Sync,
{
    let n = fragments.len();
    if let Some(first) = fragments.first() {
        if let Some(bad) = fragments.iter().find(|x| x.k() != first.k()) {
            return Err(Error::LabelMismatch {
                left: first.k(),
                right: bad.k(),
            });
        }
    }
    let entries: Vec<T> = (0..n * n)
        .into_par_iter()
        .map(|idx| f(&glue(&fragments[idx / n], &fragments[idx % n])?))
        .collect::<Result<_>>()?;
    let mut it = entries.into_iter();
    let labels: Vec<String> = (0..n).map(|i| format!("F{i}")).collect();
    Ok(Matrix::from_fn(n, n, |_, _| it.next().expect("n² entries"))
        .with_labels(labels.clone(), labels))
}

/// Number of cycles in the union of two perfect matchings on the same
/// points (a shared pair is a cycle of length two).
pub fn matching_union_cycles(m: &[(usize, usize)], n: &[(usize, usize)], points: usize) -> usize {
    let mut uf = UnionFind::new(points);
    for &(a, b) in m.iter().chain(n) {
        uf.union(a, b);
    }
    uf.set_count()
}

/// `N_{b,2k}`: entry `b^{c(M ∪ N)}` over the `(2k-1)!!` perfect matchings
/// of `[2k]`, in lexicographic order.
pub fn matching_matrix<T: Scalar>(b: i64, k: usize, limits: &Limits) -> Result<Matrix<T>> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let size = matching_count(2 * k);
    limits.check(
        "matching pairs",
        &(BigUint::from(size) * BigUint::from(size)),
    )?;
    let points: Vec<usize> = (0..2 * k).collect();
    let matchings = perfect_matchings(&points);
    let bb = T::from_int(b);
    let n = matchings.len();
    let labels: Vec<String> = matchings
        .iter()
        .map(|m| {
            m.iter()
                .map(|(a, b)| format!("{}{}", a + 1, b + 1))
                .collect::<Vec<_>>()
                .join("|")
        })
        .collect();
    Ok(Matrix::from_fn(n, n, |i, j| {
        T::powi(
            &bb,
            matching_union_cycles(&matchings[i], &matchings[j], 2 * k),
        )
    })
    .with_labels(labels.clone(), labels))
}

/// `(2k)! / ((k+1)! k!)`.
pub fn catalan_rank(k: usize) -> BigUint {
    let fact = |n: usize| -> BigUint { (1..=n).map(BigUint::from).product() };
    fact(2 * k) / (fact(k + 1) * fact(k))
}

/// Number of standard Young tableaux of shape `λ`: `n!` over the product
/// of hook lengths.
pub fn hook_length_dimension(lambda: &[usize]) -> Result<BigUint> {
    if lambda.contains(&0) || lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidPartition(lambda.to_vec()));
    }
    let n: usize = lambda.iter().sum();
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = lambda[i + 1..].iter().filter(|&&r| r > j).count();
            hooks *= BigUint::from(arm + leg + 1);
        }
    }
    let fact: BigUint = (1..=n).map(BigUint::from).product();
    Ok(fact / hooks)
}

/// `Σ_{π ∈ S_m} sgn(π) x^{cycles(π)}`, by brute force.
pub fn signed_cycle_count_sum(m: usize, x: &BigInt, limits: &Limits) -> Result<BigInt> {
    let count: BigUint = (1..=m).map(BigUint::from).product();
    limits.check("permutations", &count)?;
    let mut sum = BigInt::zero();
    for p in permutations(m) {
        let term = x.pow(cycle_count(&p) as u32);
        if permutation_sign(&p) > 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

/// `x (x-1) ⋯ (x-m+1)`.
pub fn falling_factorial(x: &BigInt, m: usize) -> BigInt {
    (0..m).fold(BigInt::one(), |acc, i| acc * (x - BigInt::from(i)))
}
