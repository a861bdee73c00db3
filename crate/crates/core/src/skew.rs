//! Exterior-algebra tensors over the symplectic space of dimension `2ℓ`,
//! symmetric edge-coloring models, sparse tensors in `V^{⊗n}`, the
//! symplectic bilinear form and the matching map `τ`.
//!
//! Letters (basis indices) are 1-based throughout: `1..=2ℓ`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::matchdir::DirectedMatching;
use crate::perm::sorting_sign;
use crate::scalar::Scalar;

/// `f_i` expressed in the standard basis: `f_i = -e_{i+ℓ}` for `i <= ℓ`
/// and `f_i = e_{i-ℓ}` otherwise.
pub fn dual_vector(i: usize, ell: usize) -> Result<(i8, usize)> {
    if i == 0 || i > 2 * ell {
        return Err(Error::IndexOutOfRange {
            index: i,
            dimension: 2 * ell,
        });
    }
    Ok(if i <= ell {
        (-1, i + ell)
    } else {
        (1, i - ell)
    })
}

/// `⟨e_a, e_b⟩` for the form with Gram matrix `[[0, I], [-I, 0]]`.
pub fn symplectic_pairing(a: usize, b: usize, ell: usize) -> i8 {
    if a <= ell && b == a + ell {
        1
    } else if a > ell && b + ell == a {
        -1
    } else {
        0
    }
}

/// The unique `b` with `⟨e_a, e_b⟩ ≠ 0`, together with that value.
#[inline]
fn pairing_partner(a: usize, ell: usize) -> (usize, i8) {
    if a <= ell {
        (a + ell, 1)
    } else {
        (a - ell, -1)
    }
}

/// Element of `Λ(V*_{2ℓ})` stored by its coefficients on the basis `x_S`.
/// Evaluating on the sorted word of `S` returns exactly `coeffs[S]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewTensor<T> {
    ell: usize,
    coeffs: BTreeMap<Vec<usize>, T>,
}

impl<T: Scalar> SkewTensor<T> {
    pub fn new(ell: usize) -> Self {
        assert!(ell >= 1, "ℓ must be positive");
        SkewTensor {
            ell,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn dimension(&self) -> usize {
        2 * self.ell
    }

    /// Set the coefficient of `x_S`; `subset` must be strictly increasing
    /// within `1..=2ℓ`.
    pub fn set(&mut self, subset: &[usize], value: T) -> Result<()> {
        self.check_subset(subset)?;
        if value.is_zero() {
            self.coeffs.remove(subset);
        } else {
            self.coeffs.insert(subset.to_vec(), value);
        }
        Ok(())
    }

    pub fn with(mut self, subset: &[usize], value: T) -> Result<Self> {
        self.set(subset, value)?;
        Ok(self)
    }

    pub fn coeff(&self, subset: &[usize]) -> T {
        self.coeffs.get(subset).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<usize>, T> {
        &self.coeffs
    }

    fn check_subset(&self, subset: &[usize]) -> Result<()> {
        for &i in subset {
            if i == 0 || i > 2 * self.ell {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    dimension: 2 * self.ell,
                });
            }
        }
        if subset.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::OrderMismatch(format!(
                "subset {subset:?} is not strictly increasing"
            )));
        }
        Ok(())
    }

    /// `h(e_{w_1} ⊗ … ⊗ e_{w_n})`: zero on repeated letters, otherwise the
    /// sign of the sorting permutation times the coefficient of the
    /// underlying set.
    pub fn eval(&self, word: &[usize]) -> Result<T> {
        if let Some(&i) = word.iter().find(|&&i| i == 0 || i > 2 * self.ell) {
            return Err(Error::IndexOutOfRange {
                index: i,
                dimension: 2 * self.ell,
            });
        }
        Ok(self.eval_unchecked(word))
    }

    pub(crate) fn eval_unchecked(&self, word: &[usize]) -> T {
        let Some(sign) = sorting_sign(word) else {
            return T::zero();
        };
        let mut sorted = word.to_vec();
        sorted.sort_unstable();
        match self.coeffs.get(&sorted) {
            Some(c) if sign > 0 => c.clone(),
            Some(c) => -c.clone(),
            None => T::zero(),
        }
    }

    /// Dense table of `eval` on all words of length `n`, indexed by
    /// `Σ (w_j - 1)·(2ℓ)^j`. `None` if the table would exceed `cap` entries.
    pub(crate) fn word_table(&self, n: usize, cap: usize) -> Option<Vec<T>> {
        let base = 2 * self.ell;
        let size = base.checked_pow(n as u32)?;
        if size > cap {
            return None;
        }
        let mut word = vec![0usize; n];
        Some(
            (0..size)
                .map(|mut code| {
                    for w in word.iter_mut() {
                        *w = code % base + 1;
                        code /= base;
                    }
                    self.eval_unchecked(&word)
                })
                .collect(),
        )
    }

    /// Parse `skewtensor <ell>` followed by `<subset> <p>/<q>` lines; the
    /// empty subset is written `-`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tensor: Option<SkewTensor<T>> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            if tokens[0] == "skewtensor" {
                if tensor.is_some() || tokens.len() != 2 {
                    return Err(Error::parse(
                        line,
                        "expected a single `skewtensor <ell>` header",
                    ));
                }
                let ell = crate::graph::parse_usize(line, tokens[1])?;
                if ell == 0 {
                    return Err(Error::parse(line, "ℓ must be positive"));
                }
                tensor = Some(SkewTensor::new(ell));
                continue;
            }
            let Some(t) = tensor.as_mut() else {
                return Err(Error::parse(line, "missing skewtensor header"));
            };
            if tokens.len() != 2 {
                return Err(Error::parse(line, "expected `<subset> <value>`"));
            }
            let subset: Vec<usize> = if tokens[0] == "-" {
                Vec::new()
            } else {
                tokens[0]
                    .split(',')
                    .map(|s| crate::graph::parse_usize(line, s))
                    .collect::<Result<_>>()?
            };
            let value: T = tokens[1]
                .parse()
                .map_err(|_| Error::parse(line, format!("invalid rational `{}`", tokens[1])))?;
            if t.coeffs.contains_key(&subset) {
                return Err(Error::parse(line, "duplicate subset"));
            }
            t.set(&subset, value)
                .map_err(|e| Error::parse(line, e.to_string()))?;
        }
        tensor.ok_or_else(|| Error::parse(1, "missing skewtensor header"))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("skewtensor {}\n", self.ell);
        for (subset, value) in &self.coeffs {
            let key = if subset.is_empty() {
                "-".to_string()
            } else {
                subset
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            };
            writeln!(out, "{key} {value}").unwrap();
        }
        out
    }
}

/// The tensor realising `J(G, -2ℓ)`: on `S = T ∪ (T+ℓ)` with `|T| = k`, the
/// interleaved word `(t_1, t_1+ℓ, t_2, t_2+ℓ, …)` evaluates to `(-1)^k`;
/// every other subset has coefficient zero.
pub fn build_martin_model<T: Scalar>(ell: usize) -> SkewTensor<T> {
    let mut h = SkewTensor::new(ell);
    for mask in 0u64..1 << ell {
        let ts: Vec<usize> = (1..=ell).filter(|t| mask >> (t - 1) & 1 == 1).collect();
        let word: Vec<usize> = ts.iter().flat_map(|&t| [t, t + ell]).collect();
        let sign = sorting_sign(&word).expect("interleaved word has distinct letters");
        let mut subset = word.clone();
        subset.sort_unstable();
        let value = if (ts.len() % 2 == 0) == (sign > 0) {
            T::one()
        } else {
            -T::one()
        };
        h.set(&subset, value).expect("subset within range");
    }
    h
}

/// `m!!` with the edge-coloring conventions: `(-1)!! = 1`, `m!! = 0` for
/// even `m >= 0`, odd `m` the usual product.
pub fn double_factorial(m: i64) -> i64 {
    if m == -1 {
        1
    } else if m < -1 || m % 2 == 0 {
        0
    } else {
        (1..=m).step_by(2).product()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SymRule<T> {
    /// Explicit values on sorted color multisets; missing keys are zero.
    Table(BTreeMap<Vec<usize>, T>),
    /// `∏_i (m_i - 1)!!` over color multiplicities `m_i`.
    DoubleFactorial,
    Constant(T),
}

/// Symmetric edge-coloring model on `k` colors (1-based).
#[derive(Clone, Debug, PartialEq)]
pub struct SymModel<T> {
    color_count: usize,
    rule: SymRule<T>,
}

impl<T: Scalar> SymModel<T> {
    pub fn from_table(color_count: usize, table: BTreeMap<Vec<usize>, T>) -> Result<Self> {
        for key in table.keys() {
            if let Some(&c) = key.iter().find(|&&c| c == 0 || c > color_count) {
                return Err(Error::IndexOutOfRange {
                    index: c,
                    dimension: color_count,
                });
            }
            if key.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::OrderMismatch(format!(
                    "multiset key {key:?} is not sorted"
                )));
            }
        }
        Ok(SymModel {
            color_count,
            rule: SymRule::Table(table),
        })
    }

    /// Model with the same value on every multiset.
    pub fn constant(color_count: usize, value: T) -> Self {
        SymModel {
            color_count,
            rule: SymRule::Constant(value),
        }
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn rule(&self) -> &SymRule<T> {
        &self.rule
    }

    /// Value on the multiset of `colors`; order is irrelevant.
    pub fn value(&self, colors: &[usize]) -> T {
        match &self.rule {
            SymRule::Constant(value) => value.clone(),
            SymRule::Table(table) => {
                let mut key = colors.to_vec();
                key.sort_unstable();
                table.get(&key).cloned().unwrap_or_else(T::zero)
            }
            SymRule::DoubleFactorial => {
                let mut mult = vec![0i64; self.color_count + 1];
                for &c in colors {
                    mult[c] += 1;
                }
                let mut acc = 1i64;
                for &m in &mult[1..] {
                    acc *= double_factorial(m - 1);
                    if acc == 0 {
                        break;
                    }
                }
                T::from_int(acc)
            }
        }
    }
}

pub fn build_double_factorial_model<T: Scalar>(color_count: usize) -> SymModel<T> {
    assert!(color_count >= 1, "need at least one color");
    SymModel {
        color_count,
        rule: SymRule::DoubleFactorial,
    }
}

/// Element of `V_{2ℓ}^{⊗n}` stored by its nonzero coordinates on words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseTensor<T> {
    ell: usize,
    order: usize,
    entries: BTreeMap<Vec<usize>, T>,
}

impl<T: Scalar> SparseTensor<T> {
    pub fn zero(ell: usize, order: usize) -> Self {
        SparseTensor {
            ell,
            order,
            entries: BTreeMap::new(),
        }
    }

    pub fn basis(ell: usize, word: &[usize]) -> Result<Self> {
        let mut t = SparseTensor::zero(ell, word.len());
        t.add_term(word, T::one())?;
        Ok(t)
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &BTreeMap<Vec<usize>, T> {
        &self.entries
    }

    pub fn get(&self, word: &[usize]) -> T {
        self.entries.get(word).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn add_term(&mut self, word: &[usize], coeff: T) -> Result<()> {
        if word.len() != self.order {
            return Err(Error::OrderMismatch(format!(
                "word of length {} in a tensor of order {}",
                word.len(),
                self.order
            )));
        }
        if let Some(&i) = word.iter().find(|&&i| i == 0 || i > 2 * self.ell) {
            return Err(Error::IndexOutOfRange {
                index: i,
                dimension: 2 * self.ell,
            });
        }
        self.add_term_unchecked(word.to_vec(), coeff);
        Ok(())
    }

    pub(crate) fn add_term_unchecked(&mut self, word: Vec<usize>, coeff: T) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.entries.entry(word) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.ell != other.ell || self.order != other.order {
            return Err(Error::OrderMismatch(format!(
                "(ℓ={}, order {}) vs (ℓ={}, order {})",
                self.ell, self.order, other.ell, other.order
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (w, c) in &other.entries {
            out.add_term_unchecked(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &T) -> Result<()> {
        self.check_same_shape(other)?;
        for (w, c) in &other.entries {
            self.add_term_unchecked(w.clone(), c.clone() * factor.clone());
        }
        Ok(())
    }

    pub fn scale(&self, factor: &T) -> Self {
        let mut out = SparseTensor::zero(self.ell, self.order);
        for (w, c) in &self.entries {
            out.add_term_unchecked(w.clone(), c.clone() * factor.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-T::one())
    }

    /// `self ⊗ other`, slots of `self` first.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.ell != other.ell {
            return Err(Error::OrderMismatch(
                "tensor product across different ℓ".into(),
            ));
        }
        let mut out = SparseTensor::zero(self.ell, self.order + other.order);
        for (a, x) in &self.entries {
            for (b, y) in &other.entries {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term_unchecked(w, x.clone() * y.clone());
            }
        }
        Ok(out)
    }
}

/// `τ(M) = Σ_φ ⊗_j a_{φ,j}` where `φ` is constant on each arc, the tail
/// slot carries `e_φ` and the head slot `f_φ`.
pub fn tau_matching<T: Scalar>(matching: &DirectedMatching, ell: usize) -> SparseTensor<T> {
    let arcs = matching.arcs();
    let order = 2 * arcs.len();
    let base = 2 * ell;
    let mut out = SparseTensor::zero(ell, order);
    let total = base.pow(arcs.len() as u32);
    let mut word = vec![0usize; order];
    for mut code in 0..total {
        let mut negative = false;
        for &(tail, head) in arcs {
            let color = code % base + 1;
            code /= base;
            let (sign, idx) = dual_vector(color, ell).expect("color in range");
            word[tail - 1] = color;
            word[head - 1] = idx;
            negative ^= sign < 0;
        }
        let coeff = if negative { -T::one() } else { T::one() };
        out.add_term_unchecked(word.clone(), coeff);
    }
    out
}

/// The symmetric form on `V^{⊗n}` induced by `⟨x, y⟩ = xᵀJy`, slotwise.
pub fn bilinear_form<T: Scalar>(x: &SparseTensor<T>, y: &SparseTensor<T>) -> Result<T> {
    if x.ell != y.ell || x.order != y.order {
        return Err(Error::OrderMismatch(format!(
            "(ℓ={}, order {}) vs (ℓ={}, order {})",
            x.ell, x.order, y.ell, y.order
        )));
    }
    let mut total = T::zero();
    let mut partner = vec![0usize; x.order];
    for (word, a) in &x.entries {
        let mut negative = false;
        for (j, &letter) in word.iter().enumerate() {
            let (p, s) = pairing_partner(letter, x.ell);
            partner[j] = p;
            negative ^= s < 0;
        }
        if let Some(b) = y.entries.get(&partner) {
            let term = a.clone() * b.clone();
            total = if negative { total - term } else { total + term };
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::{One, Zero};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn martin_example_values() {
        let h = build_martin_model::<Rational>(1);
        assert_eq!(h.eval(&[1, 2]).unwrap(), q(-1));
        assert_eq!(h.eval(&[2, 1]).unwrap(), q(1));
        assert_eq!(h.eval(&[1, 1]).unwrap(), q(0));
        assert_eq!(h.coeff(&[1, 2]), q(-1));
        assert_eq!(h.coeff(&[]), q(1));
        assert_eq!(h.eval(&[]).unwrap(), q(1));
        let h2 = build_martin_model::<Rational>(2);
        // T = {1}: S = {1, 3}
        assert_eq!(h2.coeff(&[1, 3]), q(-1));
        assert_eq!(h2.coeff(&[1, 2]), q(0));
        assert_eq!(h2.coeff(&[1, 4]), q(0));
        // T = {1, 2}: word (1,3,2,4) has one inversion, k = 2
        assert_eq!(h2.coeff(&[1, 2, 3, 4]), q(-1));
        assert_eq!(h2.eval(&[1, 3, 2, 4]).unwrap(), q(1));
    }

    #[test]
    fn eval_rejects_out_of_range() {
        let h = build_martin_model::<Rational>(1);
        assert_eq!(
            h.eval(&[1, 3]),
            Err(Error::IndexOutOfRange {
                index: 3,
                dimension: 2
            })
        );
        assert!(h.eval(&[0]).is_err());
    }

    #[test]
    fn dual_vectors() {
        assert_eq!(dual_vector(1, 1), Ok((-1, 2)));
        assert_eq!(dual_vector(2, 1), Ok((1, 1)));
        assert_eq!(dual_vector(3, 2), Ok((1, 1)));
        assert_eq!(dual_vector(2, 2), Ok((-1, 4)));
        assert!(dual_vector(0, 1).is_err());
        assert!(dual_vector(3, 1).is_err());
    }

    #[test]
    fn dual_basis_is_dual_for_the_form() {
        // ⟨f_i, e_j⟩ = δ_ij
        for ell in 1..=3 {
            for i in 1..=2 * ell {
                let (s, idx) = dual_vector(i, ell).unwrap();
                for j in 1..=2 * ell {
                    let v = s * symplectic_pairing(idx, j, ell);
                    assert_eq!(v, i8::from(i == j), "ℓ={ell} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn double_factorial_model_values() {
        let h = build_double_factorial_model::<Rational>(1);
        assert_eq!(h.value(&[1, 1]), q(1));
        assert_eq!(h.value(&[1, 1, 1]), q(0));
        assert_eq!(h.value(&[1, 1, 1, 1]), q(3));
        assert_eq!(h.value(&[1]), q(0));
        assert_eq!(h.value(&[]), q(1));
        let h3 = build_double_factorial_model::<Rational>(3);
        assert_eq!(h3.value(&[2, 1, 1, 2]), q(1));
        assert_eq!(h3.value(&[3, 3, 3, 3, 1, 1]), q(3));
        assert_eq!(h3.value(&[1, 2]), q(0));
        assert_eq!(double_factorial(5), 15);
        assert_eq!(double_factorial(-1), 1);
        assert_eq!(double_factorial(4), 0);
    }

    #[test]
    fn table_and_constant_models() {
        let one = SymModel::<Rational>::constant(2, q(1));
        assert_eq!(one.value(&[1, 2, 2]), q(1));
        assert_eq!(one.value(&[]), q(1));
        let t = SymModel::from_table(2, BTreeMap::from([(vec![1, 2], q(5))])).unwrap();
        assert_eq!(t.value(&[2, 1]), q(5));
        assert_eq!(t.value(&[1, 1]), q(0));
        assert!(SymModel::from_table(2, BTreeMap::from([(vec![3], q(1))])).is_err());
    }

    #[test]
    fn tau_examples() {
        let m = DirectedMatching::new(vec![(1, 2)]).unwrap();
        let t = tau_matching::<Rational>(&m, 1);
        let mut expected = SparseTensor::zero(1, 2);
        expected.add_term(&[1, 2], q(-1)).unwrap();
        expected.add_term(&[2, 1], q(1)).unwrap();
        assert_eq!(t, expected);

        let flipped = DirectedMatching::new(vec![(2, 1)]).unwrap();
        assert_eq!(tau_matching::<Rational>(&flipped, 1), expected.neg());

        let m0 = DirectedMatching::new(vec![(1, 2), (3, 4)]).unwrap();
        assert_eq!(
            tau_matching::<Rational>(&m0, 1),
            expected.tensor(&expected).unwrap()
        );
    }

    #[test]
    fn form_examples() {
        let e1 = SparseTensor::<Rational>::basis(1, &[1]).unwrap();
        let e2 = SparseTensor::<Rational>::basis(1, &[2]).unwrap();
        assert_eq!(bilinear_form(&e1, &e2).unwrap(), q(1));
        assert_eq!(bilinear_form(&e2, &e1).unwrap(), q(-1));
        assert!(bilinear_form(&e1, &e1).unwrap().is_zero());
        let t = tau_matching::<Rational>(&DirectedMatching::new(vec![(1, 2)]).unwrap(), 1);
        assert_eq!(bilinear_form(&t, &t).unwrap(), q(2));
        let t4 = SparseTensor::<Rational>::basis(1, &[1, 1]).unwrap();
        assert!(matches!(
            bilinear_form(&t, &t4.tensor(&t4).unwrap()),
            Err(Error::OrderMismatch(_))
        ));
    }

    #[test]
    fn tensor_text_format() {
        let h = build_martin_model::<Rational>(2);
        let text = h.to_text();
        assert!(text.starts_with("skewtensor 2\n- 1\n"));
        assert_eq!(SkewTensor::<Rational>::parse(&text).unwrap(), h);
        let parsed = SkewTensor::<Rational>::parse("# c\nskewtensor 1\n1,2 -3/4\n- 1\n").unwrap();
        assert_eq!(parsed.coeff(&[1, 2]), Rational::new((-3).into(), 4.into()));
        assert!(parsed.coeff(&[]).is_one());
        assert!(SkewTensor::<Rational>::parse("skewtensor 1\n2,1 1").is_err());
        assert!(SkewTensor::<Rational>::parse("skewtensor 1\n1,3 1").is_err());
        assert!(SkewTensor::<Rational>::parse("1,2 1").is_err());
        assert!(SkewTensor::<Rational>::parse("skewtensor 1\n1 x").is_err());
    }

    #[test]
    fn word_table_matches_eval() {
        let h = build_martin_model::<Rational>(2);
        let table = h.word_table(2, 1 << 10).unwrap();
        assert_eq!(table.len(), 16);
        // word (1, 3) -> code 0 + 2*4
        assert_eq!(table[8], h.eval(&[1, 3]).unwrap());
        assert_eq!(table[2 * 4 + 0], h.eval(&[1, 3]).unwrap());
        assert!(h.word_table(12, 1000).is_none());
    }
}
