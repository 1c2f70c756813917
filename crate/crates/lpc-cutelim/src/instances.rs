use std::collections::BTreeMap;

use lpc_kernel::{Derivation, RuleId};
use lpc_syntax::{Judgment, Prop, Sequent, Side};

use crate::elim::cut_rule;

/// Sequents on which elimination never needs to re-express a persistent
/// derivation linearly: persistent ones, and linear ones with no producer on
/// the right and no consumer on the left.
pub fn in_safe_class(s: &Sequent) -> bool {
    s.kind == Judgment::Persistent || s.misplaced().is_empty()
}

/// Cut every derivation proving some `X` on the right against every one
/// using `X` on the left, wherever a cut rule applies. At most `per_rule`
/// instances of each cut rule, spread evenly over the candidate pairs.
pub fn pair_cuts(corpus: &[Derivation], per_rule: usize) -> Vec<Derivation> {
    let mut by_left: BTreeMap<&Prop, Vec<&Derivation>> = BTreeMap::new();
    for d in corpus {
        for x in d.conclusion.left.iter() {
            by_left.entry(x).or_default().push(d);
        }
    }
    for v in by_left.values_mut() {
        v.dedup_by(|a, b| std::ptr::eq(*a, *b));
    }
    let cap = per_rule.saturating_mul(40);
    let mut found: BTreeMap<RuleId, Vec<Derivation>> = BTreeMap::new();
    for d1 in corpus {
        let mut seen: Vec<&Prop> = Vec::new();
        for x in d1.conclusion.right.iter() {
            if seen.contains(&x) {
                continue;
            }
            seen.push(x);
            for d2 in by_left.get(x).into_iter().flatten() {
                let Ok(rule) = cut_rule(d1.conclusion.kind, d2.conclusion.kind, x) else { continue };
                if found.get(&rule).map_or(0, Vec::len) >= cap {
                    continue;
                }
                let r1 = d1.conclusion.side(Side::Right).remove_one(x).unwrap();
                let r2 = d2.conclusion.side(Side::Left).remove_one(x).unwrap();
                let restricted = |l: &lpc_syntax::Context, r: &lpc_syntax::Context| l.all_producer() && r.all_consumer();
                let ok = match rule {
                    RuleId::CutP | RuleId::CutPP => restricted(&d1.conclusion.left, &r1),
                    RuleId::CutC | RuleId::CutCP => restricted(&r2, &d2.conclusion.right),
                    _ => true,
                };
                if !ok {
                    continue;
                }
                let s = Sequent {
                    kind: rule.conclusion_judgment(),
                    left: d1.conclusion.left.sum(&r2),
                    right: r1.sum(&d2.conclusion.right),
                };
                let cut = Derivation::infer(rule, s, &[(Side::Right, x)], vec![d1.clone(), (*d2).clone()]);
                found.entry(rule).or_default().push(cut);
            }
        }
    }
    found
        .into_values()
        .flat_map(|all| {
            let step = (all.len() / per_rule.max(1)).max(1);
            all.into_iter().step_by(step).take(per_rule)
        })
        .collect()
}
