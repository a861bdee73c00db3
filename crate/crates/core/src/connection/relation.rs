use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::limits::Limits;
use crate::perm::permutations;
use crate::report::CheckReport;
use crate::scalar::Scalar;

/// `G_{U,π}`. Edge `U[i]` (0-based `i`) is oriented by `reversed[i]`; its
/// tail gets label `i + 1` and its head label `ℓ + 2 + i`. The edges of
/// `U` are removed and, for each `i`, an edge joining the vertices labeled
/// `π(i)` and `π(ℓ + 1 + i)` is appended. `pi` is 0-based: `pi[a] = b`
/// sends label `a + 1` to label `b + 1`.
pub fn build_g_u_pi(
    g: &Multigraph,
    u: &[usize],
    reversed: &[bool],
    pi: &[usize],
) -> Result<Multigraph> {
    let r = u.len();
    if reversed.len() != r {
        return Err(Error::SizeMismatch {
            expected: r,
            found: reversed.len(),
        });
    }
    if pi.len() != 2 * r {
        return Err(Error::SizeMismatch {
            expected: 2 * r,
            found: pi.len(),
        });
    }
    let mut seen = vec![false; 2 * r];
    for &p in pi {
        if p >= 2 * r || seen[p] {
            return Err(Error::Precondition(format!("{pi:?} is not a permutation")));
        }
        seen[p] = true;
    }
    let mut in_u = vec![false; g.edge_count()];
    for &e in u {
        if e >= g.edge_count() || in_u[e] {
            return Err(Error::Precondition(format!("edge subset {u:?} is invalid")));
        }
        in_u[e] = true;
    }
    let mut at_label = vec![0usize; 2 * r];
    for (i, &e) in u.iter().enumerate() {
        let (a, b) = g.edges()[e];
        let (tail, head) = if reversed[i] { (b, a) } else { (a, b) };
        at_label[i] = tail;
        at_label[r + i] = head;
    }
    let mut edges: Vec<(usize, usize)> = (0..g.edge_count())
        .filter(|&e| !in_u[e])
        .map(|e| g.edges()[e])
        .collect();
    edges.extend((0..r).map(|i| (at_label[pi[i]], at_label[pi[r + i]])));
    Multigraph::new(g.vertex_count(), edges, g.circle_count())
}

/// `Σ_{π ∈ S_{2|U|}} f(G_{U,π})` for one orientation of `U`.
pub fn relation_sum<T, F>(
    f: &F,
    g: &Multigraph,
    u: &[usize],
    reversed: &[bool],
    limits: &Limits,
) -> Result<T>
where
    T: Scalar,
    F: Fn(&Multigraph) -> Result<T> + Sync,
{
    let count: BigUint = (1..=2 * u.len()).map(BigUint::from).product();
    limits.check("rewirings", &count)?;
    let perms: Vec<Vec<usize>> = permutations(2 * u.len()).collect();
    let terms: Vec<T> = perms
        .par_iter()
        .map(|pi| f(&build_g_u_pi(g, u, reversed, pi)?))
        .collect::<Result<_>>()?;
    Ok(terms.into_iter().fold(T::zero(), |a, b| a + b))
}

/// Checks that the rewiring sum vanishes, with `U` in edge-index order and
/// every edge oriented as stored, and again with every edge of `U`
/// reversed.
pub fn verify_skew_relation<T, F>(
    f: &F,
    g: &Multigraph,
    u: &[usize],
    limits: &Limits,
) -> Result<CheckReport>
where
    T: Scalar,
    F: Fn(&Multigraph) -> Result<T> + Sync,
{
    let mut sorted = u.to_vec();
    sorted.sort_unstable();
    let mut report = CheckReport::new("relation");
    for reversed in [vec![false; u.len()], vec![true; u.len()]] {
        let sum = relation_sum(f, g, &sorted, &reversed, limits)?;
        report.record(sum.is_zero(), || {
            format!("{g:?} U={sorted:?} reversed={reversed:?}: sum {sum}")
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::skew_partition;
    use crate::skew::build_martin_model;
    use crate::Rational;

    #[test]
    fn identity_reproduces_graph() {
        let g = Multigraph::cycle(4);
        let h = build_g_u_pi(&g, &[0, 2], &[false, false], &[0, 1, 2, 3]).unwrap();
        let mut a = g.edges().to_vec();
        let mut b = h.edges().to_vec();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    #[test]
    fn c4_rewirings() {
        // C4 edges: (0,1) (1,2) (2,3) (3,0); U = {(0,1), (2,3)}
        let g = Multigraph::cycle(4);
        let mut two_cycles = 0;
        let mut four_cycles = 0;
        for pi in permutations(4) {
            let h = build_g_u_pi(&g, &[0, 2], &[false, false], &pi).unwrap();
            assert_eq!(h.degrees(), g.degrees());
            match h.component_count() {
                1 => four_cycles += 1,
                2 => two_cycles += 1,
                _ => {}
            }
        }
        assert!(two_cycles > 0 && four_cycles > 0);
    }

    #[test]
    fn loops_can_appear() {
        let g = Multigraph::cycle(2);
        let h = build_g_u_pi(&g, &[0, 1], &[false, false], &[0, 1, 3, 2]).unwrap();
        assert!((0..h.edge_count()).any(|e| h.is_loop(e)));
    }

    #[test]
    fn relation_for_martin_model() {
        let h = build_martin_model::<Rational>(1);
        let lim = Limits::default();
        let f = |g: &Multigraph| skew_partition(&h, g, &lim);
        let r = verify_skew_relation(&f, &Multigraph::cycle(4), &[0, 2], &lim).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        let c3c3 = Multigraph::cycle(3).disjoint_union(&Multigraph::cycle(3));
        assert!(verify_skew_relation(&f, &c3c3, &[0, 3], &lim)
            .unwrap()
            .passed());

        let one = |_: &Multigraph| Ok(Rational::from_int(1));
        let sum =
            relation_sum(&one, &Multigraph::cycle(4), &[0, 2], &[false, false], &lim).unwrap();
        assert_eq!(sum, Rational::from_int(24));
        assert!(
            !verify_skew_relation(&one, &Multigraph::cycle(4), &[0, 2], &lim)
                .unwrap()
                .passed()
        );
    }

    #[test]
    fn size_checks() {
        let g = Multigraph::cycle(4);
        assert!(matches!(
            build_g_u_pi(&g, &[0, 2], &[false], &[0, 1, 2, 3]),
            Err(Error::SizeMismatch { .. })
        ));
        assert!(matches!(
            build_g_u_pi(&g, &[0, 2], &[false, false], &[0, 1, 2]),
            Err(Error::SizeMismatch { .. })
        ));
        assert!(build_g_u_pi(&g, &[0, 0], &[false, false], &[0, 1, 2, 3]).is_err());
    }
}
