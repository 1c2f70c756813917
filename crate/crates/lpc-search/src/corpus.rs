use lpc_kernel::Derivation;
use lpc_syntax::enumerate::props_up_to_size;
use lpc_syntax::{Context, Judgment, Prop, Sequent, Side};

use crate::{search, SearchBudget};

/// Every sequent whose propositions have total size at most `max_size`,
/// ordered by size and then structurally. Persistent sequents appear
/// whenever all their propositions are persistent.
pub fn enumerate_sequents(max_size: usize) -> Vec<Sequent> {
    let props = props_up_to_size(max_size);
    let items: Vec<(Side, &Prop)> =
        [Side::Left, Side::Right].into_iter().flat_map(|sd| props.iter().map(move |p| (sd, p))).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    grow(&items, 0, max_size, &mut chosen, &mut out);
    out.sort_by(|a: &Sequent, b: &Sequent| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    out
}

fn grow(items: &[(Side, &Prop)], from: usize, budget: usize, chosen: &mut Vec<usize>, out: &mut Vec<Sequent>) {
    let pick = |sd: Side| chosen.iter().filter(move |&&i| items[i].0 == sd).map(|&i| items[i].1.clone());
    let left = Context::new(pick(Side::Left));
    let right = Context::new(pick(Side::Right));
    if left.all_persistent() && right.all_persistent() {
        out.push(Sequent { kind: Judgment::Persistent, left: left.clone(), right: right.clone() });
    }
    out.push(Sequent { kind: Judgment::Linear, left, right });
    for i in from..items.len() {
        let sz = items[i].1.size();
        if sz <= budget {
            chosen.push(i);
            grow(items, i, budget - sz, chosen, out);
            chosen.pop();
        }
    }
}

/// Sequents up to `max_size` that search proves within `b`, with their
/// proofs, in the order of [`enumerate_sequents`].
pub fn enumerate_provable(max_size: usize, b: SearchBudget) -> Vec<(Sequent, Derivation)> {
    enumerate_sequents(max_size)
        .into_iter()
        .filter_map(|s| {
            let d = search(&s, b).ok().flatten()?;
            Some((s, d))
        })
        .collect()
}
