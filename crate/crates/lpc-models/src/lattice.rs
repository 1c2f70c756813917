//! Finite posets and distributive lattices: lower sets, join-irreducibles,
//! joins and meets from the order, and Birkhoff duality between them.

use lpc_semantics::{Elem, Mor, Obj, SemError};

use crate::common::{atoms, canonical, guard};

/// Down-closed subsets of a poset, as bitmasks over its indices, sorted.
pub fn down_sets(p: &Obj, limit: usize) -> Result<Vec<u64>, SemError> {
    let n = p.len();
    if n > 63 {
        guard(format!("lower sets of a {n}-element poset"), 1u128 << n.min(127), limit)?;
    }
    let mut topo: Vec<usize> = (0..n).collect();
    topo.sort_by_key(|&i| (0..n).filter(|&j| p.leq(j, i)).count());
    let below: Vec<u64> = (0..n).map(|i| (0..n).filter(|&j| j != i && p.leq(j, i)).fold(0, |m, j| m | 1 << j)).collect();
    let mut out = Vec::new();
    let mut stack = vec![(0usize, 0u64)];
    while let Some((k, mask)) = stack.pop() {
        if k == n {
            out.push(mask);
            guard(format!("lower sets of a {n}-element poset"), out.len() as u128, limit)?;
            continue;
        }
        let x = topo[k];
        stack.push((k + 1, mask));
        if below[x] & !mask == 0 {
            stack.push((k + 1, mask | 1 << x));
        }
    }
    out.sort_unstable();
    Ok(out)
}

pub fn mask_label(p: &Obj, mask: u64) -> Elem {
    Elem::Set((0..p.len()).filter(|i| mask >> i & 1 == 1).map(|i| p.elem(i).clone()).collect())
}

pub fn label_mask(p: &Obj, e: &Elem) -> u64 {
    match e {
        Elem::Set(xs) => xs.iter().fold(0, |m, x| m | 1 << p.idx(x)),
        e => panic!("{e} is not a subset label"),
    }
}

/// `↓x` as a bitmask.
pub fn principal(p: &Obj, x: usize) -> u64 {
    (0..p.len()).filter(|&j| p.leq(j, x)).fold(0, |m, j| m | 1 << j)
}

/// The lattice of lower sets of `p`, ordered by inclusion: join is union,
/// meet is intersection, `⊥ = ∅` and `⊤ = p`.
pub fn ba_lower(p: &Obj, limit: usize) -> Result<Obj, SemError> {
    let masks = down_sets(p, limit)?;
    let labels = masks.iter().map(|&m| mask_label(p, m)).collect();
    Ok(Obj::poset_by(labels, |i, j| masks[i] & !masks[j] == 0))
}

/// Least upper bound of two elements, if any.
pub fn join(l: &Obj, x: usize, y: usize) -> Option<usize> {
    let ups: Vec<usize> = (0..l.len()).filter(|&z| l.leq(x, z) && l.leq(y, z)).collect();
    ups.iter().copied().find(|&z| ups.iter().all(|&w| l.leq(z, w)))
}

pub fn meet(l: &Obj, x: usize, y: usize) -> Option<usize> {
    let downs: Vec<usize> = (0..l.len()).filter(|&z| l.leq(z, x) && l.leq(z, y)).collect();
    downs.iter().copied().find(|&z| downs.iter().all(|&w| l.leq(w, z)))
}

pub fn bottom(l: &Obj) -> Option<usize> {
    (0..l.len()).find(|&z| (0..l.len()).all(|w| l.leq(z, w)))
}

pub fn top(l: &Obj) -> Option<usize> {
    (0..l.len()).find(|&z| (0..l.len()).all(|w| l.leq(w, z)))
}

/// Join of a set of elements, `⊥` when empty.
pub fn join_all(l: &Obj, xs: impl IntoIterator<Item = usize>) -> usize {
    xs.into_iter()
        .fold(bottom(l).expect("a lattice has a bottom"), |acc, x| join(l, acc, x).expect("a lattice has joins"))
}

/// Neither `⊥` nor the join of two strictly smaller elements.
pub fn is_join_irreducible(l: &Obj, x: usize) -> bool {
    let below: Vec<usize> = (0..l.len()).filter(|&z| z != x && l.leq(z, x)).collect();
    !below.is_empty() && below.iter().all(|&a| below.iter().all(|&b| join(l, a, b) != Some(x)))
}

/// The join-irreducible elements of a finite lattice with the induced order.
pub fn ba_joinirr(l: &Obj) -> Obj {
    let js: Vec<usize> = (0..l.len()).filter(|&x| is_join_irreducible(l, x)).collect();
    Obj::poset_by(js.iter().map(|&i| l.elem(i).clone()).collect(), |a, b| l.leq(js[a], js[b]))
}

/// The powerset algebra on a carrier, ordered by inclusion.
pub fn ba_powerset_algebra(x: &Obj, limit: usize) -> Result<Obj, SemError> {
    guard(format!("powerset of a {}-element set", x.len()), 1u128 << x.len().min(127), limit)?;
    let masks: Vec<u64> = (0..1u64 << x.len()).collect();
    Ok(Obj::poset_by(masks.iter().map(|&m| mask_label(x, m)).collect(), |i, j| masks[i] & !masks[j] == 0))
}

/// Direct image on powerset algebras, `X ↦ {f(x) | x ∈ X}`.
pub fn ba_hom_image(f: &Mor, limit: usize) -> Result<Mor, SemError> {
    let table = crate::common::table(f);
    let (pa, pb) = (ba_powerset_algebra(&f.dom, limit)?, ba_powerset_algebra(&f.cod, limit)?);
    Ok(Mor::function(&pa, &pb, 0, |e| {
        let m = label_mask(&f.dom, e);
        let image = (0..f.dom.len()).filter(|i| m >> i & 1 == 1).fold(0, |acc, i| acc | 1 << table[i]);
        mask_label(&f.cod, image)
    }))
}

pub fn is_lattice(l: &Obj) -> bool {
    (0..l.len()).all(|x| (0..l.len()).all(|y| join(l, x, y).is_some() && meet(l, x, y).is_some())) && !l.is_empty()
}

pub fn is_distributive(l: &Obj) -> bool {
    let n = l.len();
    let j = |a, b| join(l, a, b).expect("lattice");
    let m = |a, b| meet(l, a, b).expect("lattice");
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| m(x, j(y, z)) == j(m(x, y), m(x, z)))))
}

/// Distributive lattices with exactly `n` elements, one per isomorphism
/// class, found among orders on `0..n` with `0` least and `n - 1` greatest.
pub fn distributive_lattices(n: usize) -> Vec<Obj> {
    if n <= 2 {
        return vec![Obj::poset_by(atoms(n), |i, j| i <= j)];
    }
    let inner = n - 2;
    let pairs: Vec<(usize, usize)> = (1..=inner).flat_map(|i| (i + 1..=inner).map(move |j| (i, j))).collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut lt = vec![vec![false; n]; n];
        lt[0][1..].fill(true);
        for row in lt.iter_mut().take(n - 1) {
            row[n - 1] = true;
        }
        for (b, &(i, j)) in pairs.iter().enumerate() {
            lt[i][j] = mask >> b & 1 == 1;
        }
        let closed = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(lt[i][j] && lt[j][k]) || lt[i][k])));
        if !closed {
            continue;
        }
        let l = Obj::poset_by(atoms(n), |i, j| i == j || lt[i][j]);
        if !is_lattice(&l) || !is_distributive(&l) {
            continue;
        }
        if seen.insert(canonical(&lt)) {
            out.push(l);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn antichain(n: usize) -> Obj {
        Obj::poset_by(atoms(n), |i, j| i == j)
    }

    #[test]
    fn two_antichain_has_four_lower_sets() {
        assert_eq!(ba_lower(&antichain(2), 64).unwrap().len(), 4);
    }

    #[test]
    fn chain_lower_sets() {
        let chain = Obj::poset_by(atoms(3), |i, j| i <= j);
        assert_eq!(down_sets(&chain, 64).unwrap(), vec![0b000, 0b001, 0b011, 0b111]);
    }

    #[test]
    fn square_join_irreducibles() {
        let l = ba_powerset_algebra(&antichain(2), 64).unwrap();
        let j = ba_joinirr(&l);
        assert_eq!(j.len(), 2);
        assert!(!j.leq(0, 1) && !j.leq(1, 0));
    }

    #[test]
    fn lower_set_guard() {
        assert!(matches!(down_sets(&antichain(5), 16), Err(SemError::DomainTooLarge { .. })));
    }
}
