//! Carriers, enumeration and sampling shared by the instances.

use lpc_semantics::{Elem, Mat, Mor, Obj, SemError};
use rand::seq::index;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Above this many candidates a hom-set is sampled instead of listed.
const ENUMERATE_LIMIT: u128 = 4096;

pub fn atoms(n: usize) -> Vec<Elem> {
    (0..n as u32).map(Elem::Atom).collect()
}

pub fn set(n: usize) -> Obj {
    Obj::set(atoms(n))
}

pub fn star_set() -> Obj {
    Obj::set(vec![Elem::Star])
}

pub fn star_poset() -> Obj {
    Obj::poset_by(vec![Elem::Star], |_, _| true)
}

pub fn guard(what: impl Into<String>, size: u128, limit: usize) -> Result<(), SemError> {
    if size > limit as u128 {
        Err(SemError::DomainTooLarge { what: what.into(), size, limit: limit as u128 })
    } else {
        Ok(())
    }
}

/// `base^exp`, saturating.
pub fn pow(base: usize, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base as u128))
}

/// Keep `k` items, chosen at random, in their original order.
pub fn pick<T>(all: Vec<T>, rng: &mut ChaCha8Rng, k: usize) -> Vec<T> {
    if all.len() <= k {
        return all;
    }
    let mut keep = index::sample(rng, all.len(), k).into_vec();
    keep.sort_unstable();
    let mut all: Vec<Option<T>> = all.into_iter().map(Some).collect();
    keep.into_iter().map(|i| all[i].take().expect("distinct indices")).collect()
}

/// Every function `0..n -> 0..m`, as image tables, in lexicographic order.
pub fn all_functions(n: usize, m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    loop {
        out.push(cur.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < m {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// Up to `k` functions `0..n -> 0..m` satisfying `accept`.
pub fn sample_functions(
    n: usize,
    m: usize,
    rng: &mut ChaCha8Rng,
    k: usize,
    accept: impl Fn(&[usize]) -> bool,
) -> Vec<Vec<usize>> {
    if pow(m, n) <= ENUMERATE_LIMIT {
        let all: Vec<_> = all_functions(n, m).into_iter().filter(|f| accept(f)).collect();
        return pick(all, rng, k);
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    for _ in 0..k * 50 {
        if out.len() == k {
            break;
        }
        let f: Vec<usize> = (0..n).map(|_| rng.gen_range(0..m)).collect();
        if accept(&f) && !out.contains(&f) {
            out.push(f);
        }
    }
    out.sort();
    out
}

/// Up to `k` matrices with entries below `q` (2 for the Booleans).
pub fn sample_matrices(rows: usize, cols: usize, q: u8, rng: &mut ChaCha8Rng, k: usize) -> Vec<Mat> {
    let base = if q == 0 { 2 } else { q as usize };
    let to_mat = |entries: &[usize]| Mat::from_fn(rows, cols, q, |i, j| entries[i * cols + j] as u8);
    sample_functions(rows * cols, base, rng, k, |_| true).iter().map(|e| to_mat(e)).collect()
}

/// Whether an index table is order-preserving between posets.
pub fn monotone(dom: &Obj, cod: &Obj, f: &[usize]) -> bool {
    (0..dom.len()).all(|i| (0..dom.len()).all(|j| !dom.leq(i, j) || cod.leq(f[i], f[j])))
}

pub fn functions_between(dom: &Obj, cod: &Obj, q: u8, rng: &mut ChaCha8Rng, k: usize) -> Vec<Mor> {
    sample_functions(dom.len(), cod.len(), rng, k, |f| monotone(dom, cod, f))
        .iter()
        .map(|f| Mor::from_indices(dom, cod, q, f))
        .collect()
}

/// Posets on `0..n` with their elements numbered along a linear extension,
/// one per isomorphism class.
pub fn posets(n: usize) -> Vec<Obj> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut lt = vec![vec![false; n]; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            lt[i][j] = mask >> b & 1 == 1;
        }
        let closed = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(lt[i][j] && lt[j][k]) || lt[i][k])));
        if !closed {
            continue;
        }
        let canon = canonical(&lt);
        if seen.insert(canon) {
            out.push(Obj::poset_by(atoms(n), |i, j| i == j || lt[i][j]));
        }
    }
    out
}

/// The least relabelling of a strict order under all permutations.
pub fn canonical(lt: &[Vec<bool>]) -> Vec<bool> {
    let n = lt.len();
    let mut best: Option<Vec<bool>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let code: Vec<bool> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| lt[p[i]][p[j]]).collect();
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    });
    best.unwrap_or_default()
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

/// The monotone map of a matrix whose columns are functions, if it is one.
pub fn table(f: &Mor) -> Vec<usize> {
    f.as_function().unwrap_or_else(|| panic!("expected a function\n{f}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_counts_up_to_iso() {
        let counts: Vec<usize> = (0..=4).map(|n| posets(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 16]);
    }

    #[test]
    fn function_tables() {
        assert_eq!(all_functions(2, 2), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(all_functions(0, 0), vec![Vec::<usize>::new()]);
        assert!(all_functions(1, 0).is_empty());
    }
}
