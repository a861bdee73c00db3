use crate::error::{Error, Result};
use crate::graph::{edge_of, LocalOrder, Orientation};
use crate::limits::Limits;
use crate::matchdir::{matching_sign, DirectedMatching};
use crate::partition::skew_partition;
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::skew::{bilinear_form, dual_vector, SkewTensor, SparseTensor};

use super::fragment::{fragment_local_order, fragment_orientation, fragment_walks, glue, Fragment};

/// `t_h(F, ω, κ) ∈ V^{⊗2k}`. For each coloring `φ` of the edges, the
/// weight `(-1)^{o'(φ)} ∏_v h(φ_v)` over unlabeled vertices multiplies
/// `e_{φ(i)}` in the slot of every walk start `i` and `f_{φ(j)}` in the
/// slot of every walk end `j`; the total is scaled by `(-1)^{c(F,κ)}`.
///
/// `o'(φ)` counts edges colored in `[ℓ]` whose tail is unlabeled, i.e.
/// every edge except the open ends leaving a labeled vertex.
pub fn fragment_tensor<T: Scalar>(
    h: &SkewTensor<T>,
    f: &Fragment,
    omega: &Orientation,
    kappa: &LocalOrder,
    limits: &Limits,
) -> Result<SparseTensor<T>> {
    let ell = h.ell();
    let walks = fragment_walks(f, omega, kappa)?;
    let g = f.graph();
    let m = g.edge_count();
    limits.check_power("edge colorings", 2 * ell, m)?;
    let map = f.label_map();
    let open: Vec<usize> = f
        .labels()
        .iter()
        .map(|&v| edge_of(g.darts_at(v)[0]))
        .collect();
    let tail_unlabeled: Vec<bool> = (0..m)
        .map(|e| map[g.dart_vertex(omega.tail(e))] == 0)
        .collect();
    let inner: Vec<usize> = (0..g.vertex_count()).filter(|&v| map[v] == 0).collect();

    let mut out = SparseTensor::zero(ell, f.k());
    let mut phi = vec![1usize; m];
    let mut word = Vec::new();
    let mut slots = vec![0usize; f.k()];
    for code in 0..(2 * ell).pow(m as u32) {
        let mut rest = code;
        for p in phi.iter_mut() {
            *p = rest % (2 * ell) + 1;
            rest /= 2 * ell;
        }
        let mut weight = T::one();
        for &v in &inner {
            word.clear();
            word.extend(kappa.at(v).iter().map(|&d| {
                let c = phi[edge_of(d)];
                if omega.is_outgoing(d) {
                    (c - 1 + ell) % (2 * ell) + 1
                } else {
                    c
                }
            }));
            let val = h.eval_unchecked(&word);
            if val.is_zero() {
                weight = T::zero();
                break;
            }
            weight = weight * val;
        }
        if weight.is_zero() {
            continue;
        }
        let mut negative = (0..m)
            .filter(|&e| tail_unlabeled[e] && phi[e] <= ell)
            .count()
            % 2
            == 1;
        for &(i, j) in &walks.walks {
            slots[i - 1] = phi[open[i - 1]];
            let (s, idx) = dual_vector(phi[open[j - 1]], ell).expect("color in range");
            slots[j - 1] = idx;
            negative ^= s < 0;
        }
        out.add_term_unchecked(slots.clone(), if negative { -weight } else { weight });
    }
    Ok(if walks.circuits % 2 == 1 {
        out.neg()
    } else {
        out
    })
}

/// The walk matching `M(F, κ)` as a directed matching on the labels.
pub fn walk_matching(
    f: &Fragment,
    omega: &Orientation,
    kappa: &LocalOrder,
) -> Result<DirectedMatching> {
    DirectedMatching::new(fragment_walks(f, omega, kappa)?.walks)
}

/// Fragment tensor together with its walk matching, for the canonical
/// orientation and local order.
pub fn canonical_fragment_tensor<T: Scalar>(
    h: &SkewTensor<T>,
    f: &Fragment,
    limits: &Limits,
) -> Result<(SparseTensor<T>, DirectedMatching)> {
    let omega = fragment_orientation(f)?;
    let kappa = fragment_local_order(f, &omega)?;
    Ok((
        fragment_tensor(h, f, &omega, &kappa, limits)?,
        walk_matching(f, &omega, &kappa)?,
    ))
}

/// `s_h(F₁ ∗ F₂) = sgn(M₁) sgn(M₂) (-1)^k ⟨t_h(F₁), t_h(F₂)⟩` for every
/// ordered pair of the given `2k`-fragments.
pub fn verify_fragment_gram<T: Scalar>(
    h: &SkewTensor<T>,
    fragments: &[Fragment],
    limits: &Limits,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("fragment-gram");
    let Some(first) = fragments.first() else {
        return Ok(report);
    };
    let labels = first.k();
    if let Some(bad) = fragments.iter().find(|f| f.k() != labels) {
        return Err(Error::LabelMismatch {
            left: labels,
            right: bad.k(),
        });
    }
    let tensors: Vec<(SparseTensor<T>, i8)> = fragments
        .iter()
        .map(|f| {
            let (t, m) = canonical_fragment_tensor(h, f, limits)?;
            Ok((t, matching_sign(&m)))
        })
        .collect::<Result<_>>()?;
    let half = labels / 2;
    for (a, fa) in fragments.iter().enumerate() {
        for (b, fb) in fragments.iter().enumerate() {
            let lhs = skew_partition(h, &glue(fa, fb)?, limits)?;
            let (ta, sa) = &tensors[a];
            let (tb, sb) = &tensors[b];
            let form = bilinear_form(ta, tb)?;
            let sign = i64::from(*sa) * i64::from(*sb) * if half % 2 == 0 { 1 } else { -1 };
            let rhs = T::from_int(sign) * form;
            report.record(lhs == rhs, || {
                format!("fragments #{a} and #{b}: s_h = {lhs}, Gram side = {rhs}")
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;
    use crate::skew::{build_martin_model, tau_matching};
    use crate::Rational;

    #[test]
    fn unit_tensor_is_tau() {
        let h = build_martin_model::<Rational>(1);
        let (t, m) = canonical_fragment_tensor(&h, &Fragment::unit(1), &Limits::default()).unwrap();
        assert_eq!(m, DirectedMatching::standard(1));
        assert_eq!(t, tau_matching(&m, 1));
    }

    #[test]
    fn path_fragment_tensor() {
        let h = build_martin_model::<Rational>(1);
        let g = Multigraph::new(3, vec![(1, 0), (0, 2)], 0).unwrap();
        let f = Fragment::new(g, vec![1, 2]).unwrap();
        let (t, m) = canonical_fragment_tensor(&h, &f, &Limits::default()).unwrap();
        assert_eq!(m, DirectedMatching::standard(1));
        assert_eq!(t, tau_matching(&m, 1));
        let report = verify_fragment_gram(&h, &[f, Fragment::unit(1)], &Limits::default()).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.instances, 4);
    }

    #[test]
    fn reversed_orientation_negates_tensor() {
        let h = build_martin_model::<Rational>(1);
        let g = Multigraph::new(3, vec![(1, 0), (0, 2)], 0).unwrap();
        let f = Fragment::new(g, vec![1, 2]).unwrap();
        let omega = fragment_orientation(&f).unwrap();
        let mut flipped = omega.clone();
        flipped.flip(0);
        flipped.flip(1);
        let kappa = fragment_local_order(&f, &flipped).unwrap();
        let lim = Limits::default();
        let t = fragment_tensor(&h, &f, &flipped, &kappa, &lim).unwrap();
        assert_eq!(
            walk_matching(&f, &flipped, &kappa).unwrap(),
            DirectedMatching::new(vec![(2, 1)]).unwrap()
        );
        let kappa0 = fragment_local_order(&f, &omega).unwrap();
        assert_eq!(
            t,
            fragment_tensor(&h, &f, &omega, &kappa0, &lim)
                .unwrap()
                .neg()
        );
    }
}
