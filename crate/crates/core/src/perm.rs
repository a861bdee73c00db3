//! Small permutation and matching utilities shared by the combinatorial
//! modules. Permutations are 0-based images: `p[i]` is the image of `i`.

use itertools::Itertools;

/// Number of cycles of a permutation (fixed points count).
pub fn cycle_count(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut cycles = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
        }
    }
    cycles
}

/// `+1` or `-1`.
pub fn permutation_sign(p: &[usize]) -> i8 {
    if (p.len() - cycle_count(p)) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of the permutation that sorts `word` increasingly, or `None` if a
/// letter repeats.
pub fn sorting_sign<T: Ord>(word: &[T]) -> Option<i8> {
    let mut inversions = 0usize;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            match word[i].cmp(&word[j]) {
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).permutations(n)
}

/// All perfect matchings of `items`, each as a list of pairs `(a, b)` with
/// `a` before `b` in `items`. Lexicographic in the pair sequence.
pub fn perfect_matchings<T: Copy>(items: &[T]) -> Vec<Vec<(T, T)>> {
    let mut out = Vec::new();
    if items.len() % 2 == 1 {
        return out;
    }
    let mut used = vec![false; items.len()];
    let mut current = Vec::with_capacity(items.len() / 2);
    matchings_rec(items, &mut used, &mut current, &mut out);
    out
}

fn matchings_rec<T: Copy>(
    items: &[T],
    used: &mut [bool],
    current: &mut Vec<(T, T)>,
    out: &mut Vec<Vec<(T, T)>>,
) {
    let Some(first) = used.iter().position(|u| !u) else {
        out.push(current.clone());
        return;
    };
    used[first] = true;
    for second in first + 1..items.len() {
        if used[second] {
            continue;
        }
        used[second] = true;
        current.push((items[first], items[second]));
        matchings_rec(items, used, current, out);
        current.pop();
        used[second] = false;
    }
    used[first] = false;
}

/// `(n-1)!!` for even `n` (number of perfect matchings on `n` points), as u128.
pub fn matching_count(n: usize) -> u128 {
    if n % 2 == 1 {
        return 0;
    }
    (1..n).step_by(2).map(|x| x as u128).product()
}
