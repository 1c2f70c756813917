//! Exhaustive enumeration of propositions by depth or size.

use std::sync::Arc;

use crate::prop::{Mode, Prop};

fn idx(m: Mode) -> usize {
    match m {
        Mode::L => 0,
        Mode::P => 1,
        Mode::C => 2,
    }
}

fn constants(m: Mode) -> Vec<Prop> {
    match m {
        Mode::L => vec![Prop::Top, Prop::Zero, Prop::OneL, Prop::BotL],
        Mode::P => vec![Prop::OneP],
        Mode::C => vec![Prop::BotC],
    }
}

type Bin = fn(Arc<Prop>, Arc<Prop>) -> Prop;
type Un = fn(Arc<Prop>) -> Prop;

// (result mode, operand mode, constructor)
fn binaries() -> [(Mode, Mode, Bin); 6] {
    [
        (Mode::L, Mode::L, Prop::With as Bin),
        (Mode::L, Mode::L, Prop::Plus as Bin),
        (Mode::L, Mode::L, Prop::TensorL as Bin),
        (Mode::L, Mode::L, Prop::ParL as Bin),
        (Mode::P, Mode::P, Prop::TensorP as Bin),
        (Mode::C, Mode::C, Prop::ParC as Bin),
    ]
}

fn unaries() -> [(Mode, Mode, Un); 4] {
    [
        (Mode::L, Mode::P, Prop::FBang as Un),
        (Mode::L, Mode::C, Prop::FWhy as Un),
        (Mode::P, Mode::L, Prop::GBang as Un),
        (Mode::C, Mode::L, Prop::GWhy as Un),
    ]
}

/// `exact[d][mode]`: propositions of depth exactly `d + 1`.
fn exact_levels(max_depth: usize) -> Vec<[Vec<Arc<Prop>>; 3]> {
    let mut exact: Vec<[Vec<Arc<Prop>>; 3]> = Vec::new();
    if max_depth == 0 {
        return exact;
    }
    let first = [Mode::L, Mode::P, Mode::C].map(|m| constants(m).into_iter().map(Arc::new).collect());
    exact.push(first);
    for d in 1..max_depth {
        let mut level: [Vec<Arc<Prop>>; 3] = Default::default();
        let below: [Vec<Arc<Prop>>; 3] = std::array::from_fn(|m| {
            exact[..d - 1].iter().flat_map(|lv| lv[m].iter().cloned()).collect()
        });
        let top = &exact[d - 1];
        for (res, arg, f) in unaries() {
            for a in &top[idx(arg)] {
                level[idx(res)].push(Arc::new(f(a.clone())));
            }
        }
        for (res, arg, f) in binaries() {
            let t = &top[idx(arg)];
            let b = &below[idx(arg)];
            for x in t {
                for y in b.iter().chain(t.iter()) {
                    level[idx(res)].push(Arc::new(f(x.clone(), y.clone())));
                }
            }
            for x in b {
                for y in t {
                    level[idx(res)].push(Arc::new(f(x.clone(), y.clone())));
                }
            }
        }
        exact.push(level);
    }
    exact
}

/// Visit every `stride`-th proposition of depth exactly `depth`, all modes,
/// without materialising the level. Returns the size of the level.
///
/// With `stride == 1` this is the whole level, which at depth 4 is about
/// 1.5 billion propositions.
pub fn visit_level(depth: usize, stride: u128, mut f: impl FnMut(Prop)) -> u128 {
    assert!(stride > 0, "stride must be positive");
    if depth == 0 {
        return 0;
    }
    let lower = exact_levels(depth - 1);
    if depth == 1 {
        let all: Vec<Prop> = [Mode::L, Mode::P, Mode::C].into_iter().flat_map(constants).collect();
        for (k, p) in all.iter().enumerate() {
            if (k as u128).is_multiple_of(stride) {
                f(p.clone());
            }
        }
        return all.len() as u128;
    }
    let top = &lower[depth - 2];
    let below: [Vec<Arc<Prop>>; 3] =
        std::array::from_fn(|m| lower[..depth - 2].iter().flat_map(|lv| lv[m].iter().cloned()).collect());
    // `next` is the index within the level of the next item to visit.
    let mut base = 0u128;
    let mut next = 0u128;
    for (_, arg, g) in unaries() {
        let t = &top[idx(arg)];
        while next < base + t.len() as u128 {
            f(g(t[(next - base) as usize].clone()));
            next += stride;
        }
        base += t.len() as u128;
    }
    for (_, arg, g) in binaries() {
        let (t, b) = (&top[idx(arg)], &below[idx(arg)]);
        let (nt, nb) = (t.len() as u128, b.len() as u128);
        let wide = nb + nt;
        let item = |y: u128| if y < nb { b[y as usize].clone() } else { t[(y - nb) as usize].clone() };
        // x from the top level, y anywhere
        while next < base + nt * wide {
            let r = next - base;
            f(g(t[(r / wide) as usize].clone(), item(r % wide)));
            next += stride;
        }
        base += nt * wide;
        // x strictly below, y from the top level
        while next < base + nb * nt {
            let r = next - base;
            f(g(b[(r / nt) as usize].clone(), t[(r % nt) as usize].clone()));
            next += stride;
        }
        base += nb * nt;
    }
    base
}

/// All propositions of the given mode with depth at most `max_depth`,
/// shallowest first.
pub fn props_up_to_depth(mode: Mode, max_depth: usize) -> Vec<Prop> {
    exact_levels(max_depth)
        .into_iter()
        .flat_map(|lv| lv[idx(mode)].clone())
        .map(|p| Arc::try_unwrap(p).unwrap_or_else(|p| (*p).clone()))
        .collect()
}

/// Number of propositions per mode `[L, P, C]` with depth at most `max_depth`,
/// computed without building them.
pub fn count_up_to_depth(max_depth: usize) -> [u128; 3] {
    let mut upto = [0u128; 3];
    let mut prev_upto = [0u128; 3];
    for d in 0..max_depth {
        let mut exact = [0u128; 3];
        if d == 0 {
            exact = [4, 1, 1];
        } else {
            let top: [u128; 3] = std::array::from_fn(|m| upto[m] - prev_upto[m]);
            for (res, arg, _) in unaries() {
                exact[idx(res)] += top[idx(arg)];
            }
            for (res, arg, _) in binaries() {
                let all = upto[idx(arg)];
                let below = prev_upto[idx(arg)];
                exact[idx(res)] += all * all - below * below;
            }
        }
        prev_upto = upto;
        for m in 0..3 {
            upto[m] += exact[m];
        }
    }
    upto
}

/// All propositions of every mode with at most `max_size` nodes, smallest first.
pub fn props_up_to_size(max_size: usize) -> Vec<Prop> {
    // by_size[s][mode]
    let mut by_size: Vec<[Vec<Arc<Prop>>; 3]> = vec![Default::default()];
    for s in 1..=max_size {
        let mut level: [Vec<Arc<Prop>>; 3] = Default::default();
        if s == 1 {
            for m in [Mode::L, Mode::P, Mode::C] {
                level[idx(m)] = constants(m).into_iter().map(Arc::new).collect();
            }
        } else {
            for (res, arg, f) in unaries() {
                for a in &by_size[s - 1][idx(arg)] {
                    level[idx(res)].push(Arc::new(f(a.clone())));
                }
            }
            for (res, arg, f) in binaries() {
                for ls in 1..s - 1 {
                    let rs = s - 1 - ls;
                    for x in &by_size[ls][idx(arg)] {
                        for y in &by_size[rs][idx(arg)] {
                            level[idx(res)].push(Arc::new(f(x.clone(), y.clone())));
                        }
                    }
                }
            }
        }
        by_size.push(level);
    }
    by_size
        .into_iter()
        .flat_map(|lv| lv.into_iter().flatten())
        .map(|p| (*p).clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(props_up_to_depth(Mode::L, 1).len(), 4);
        assert_eq!(props_up_to_depth(Mode::L, 2).len(), 70);
        assert_eq!(props_up_to_depth(Mode::P, 2).len(), 6);
        assert_eq!(count_up_to_depth(2), [70, 6, 6]);
        assert_eq!(count_up_to_depth(3), [19_616, 107, 107]);
    }

    #[test]
    fn visiting_a_level_matches_the_enumeration() {
        for depth in 1..=3 {
            let mut seen = Vec::new();
            let n = visit_level(depth, 1, |p| seen.push(p));
            let want: Vec<Prop> = exact_levels(depth)[depth - 1].iter().flatten().map(|p| (**p).clone()).collect();
            assert_eq!(n as usize, want.len());
            let mut strided = Vec::new();
            visit_level(depth, 7, |p| strided.push(p));
            assert_eq!(strided, seen.iter().step_by(7).cloned().collect::<Vec<_>>());
            // Same propositions, grouped by constructor rather than by mode.
            let (mut seen, mut want) = (seen, want);
            seen.sort();
            want.sort();
            assert_eq!(seen, want);
        }
    }

    #[test]
    fn depth_four_level_size() {
        let [l, p, c] = count_up_to_depth(4);
        let [l3, p3, c3] = count_up_to_depth(3);
        assert_eq!(visit_level(4, u128::MAX, |_| {}), (l - l3) + (p - p3) + (c - c3));
    }

    #[test]
    fn enumeration_matches_count_and_depth() {
        for m in [Mode::L, Mode::P, Mode::C] {
            let v = props_up_to_depth(m, 3);
            assert_eq!(v.len() as u128, count_up_to_depth(3)[idx(m)]);
            assert!(v.iter().all(|p| p.mode() == m && p.depth() <= 3 && p.is_well_moded()));
            let mut s = v.clone();
            s.sort();
            s.dedup();
            assert_eq!(s.len(), v.len());
        }
    }

    #[test]
    fn size_enumeration() {
        let v = props_up_to_size(4);
        assert!(v.iter().all(|p| p.size() <= 4 && p.is_well_moded()));
        let mut s = v.clone();
        s.sort();
        s.dedup();
        assert_eq!(s.len(), v.len());
        assert_eq!(props_up_to_size(1).len(), 6);
    }
}
