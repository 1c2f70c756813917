//! Single-field corruptions of a derivation's root node, each paired with
//! the cause the checker must report.

use lpc_syntax::{Judgment, Prop, Side};

use crate::check::Cause;
use crate::derivation::{Derivation, Pos};
use crate::rule::RuleId::{self, *};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MutationKind {
    Principal,
    Arity,
    Judgment,
    Mode,
    Context,
}

#[derive(Debug, Clone)]
pub struct Mutation {
    pub kind: MutationKind,
    pub derivation: Derivation,
    pub expected: Cause,
}

fn restricted_rule(r: RuleId) -> bool {
    matches!(r, FBangR | FWhyL | GBangR | GWhyL)
}

/// All applicable root mutations of `d`.
pub fn mutations(d: &Derivation) -> Vec<Mutation> {
    let mut out = Vec::new();

    // principal index pushed past the end of its context
    let mut m = d.clone();
    if let Some(first) = m.principal.first_mut() {
        let len = if d.rule.is_cut() {
            d.premises[0].conclusion.side(first.side).len()
        } else {
            d.conclusion.side(first.side).len()
        };
        first.index = len;
        out.push(Mutation { kind: MutationKind::Principal, derivation: m, expected: Cause::PrincipalMismatch });
    }

    let mut m = d.clone();
    let dummy = Derivation::new(Ax, lpc_syntax::Sequent::linear([Prop::OneL], [Prop::OneL]), vec![Pos::left(0), Pos::right(0)], vec![]);
    m.premises.push(m.premises.first().cloned().unwrap_or(dummy));
    out.push(Mutation { kind: MutationKind::Arity, derivation: m, expected: Cause::Arity });

    let mut m = d.clone();
    m.conclusion.kind = match d.conclusion.kind {
        Judgment::Linear => Judgment::Persistent,
        Judgment::Persistent => Judgment::Linear,
    };
    out.push(Mutation { kind: MutationKind::Judgment, derivation: m, expected: Cause::JudgmentKind });

    if d.conclusion.kind == Judgment::Persistent || restricted_rule(d.rule) {
        let mut m = d.clone();
        m.conclusion.left = m.conclusion.left.with(Prop::Top);
        reindex(&mut m, d);
        out.push(Mutation { kind: MutationKind::Mode, derivation: m, expected: Cause::ModeRestriction });
    } else if matches!(d.rule, CutP | CutC) {
        // the restriction lives on one premise's side context
        let mut m = d.clone();
        let i = if d.rule == CutP { 0 } else { 1 };
        m.premises[i].conclusion.left = m.premises[i].conclusion.left.with(Prop::Top);
        m.conclusion.left = m.conclusion.left.with(Prop::Top);
        m.principal[i] = Pos {
            side: m.principal[i].side,
            index: m.premises[i]
                .conclusion
                .side(m.principal[i].side)
                .index_of(d.principal_prop(i).unwrap())
                .unwrap(),
        };
        out.push(Mutation { kind: MutationKind::Mode, derivation: m, expected: Cause::ModeRestriction });
    } else if d.rule.is_structural() {
        // replace the weakened or contracted formula by a linear unit
        let pos = d.principal[0];
        let x = d.conclusion.side(pos.side).get(pos.index).unwrap().clone();
        let swap = |s: &mut lpc_syntax::Sequent, side: Side| {
            let c = s.side(side).clone();
            if let Some(rest) = c.remove_one(&x) {
                *s.side_mut(side) = rest.with(Prop::OneL);
            }
        };
        let mut m = d.clone();
        swap(&mut m.conclusion, pos.side);
        swap(&mut m.premises[0].conclusion, pos.side);
        if matches!(d.rule, ContrL | ContrR | PContrL | PContrR) {
            swap(&mut m.premises[0].conclusion, pos.side);
        }
        m.principal[0].index = m.conclusion.side(pos.side).index_of(&Prop::OneL).unwrap();
        out.push(Mutation { kind: MutationKind::Mode, derivation: m, expected: Cause::ModeRestriction });
    }

    if !matches!(d.rule, TopR | ZeroL) {
        let mut m = d.clone();
        m.conclusion.left = m.conclusion.left.with(Prop::OneP);
        reindex(&mut m, d);
        out.push(Mutation { kind: MutationKind::Context, derivation: m, expected: Cause::ContextMismatch });
    }
    out
}

// Keep principal positions pointing at the same formulas after the
// conclusion gained an element.
fn reindex(m: &mut Derivation, orig: &Derivation) {
    if orig.rule.is_cut() {
        return;
    }
    for (i, pos) in m.principal.iter_mut().enumerate() {
        let x = orig.principal_prop(i).unwrap();
        pos.index = m.conclusion.side(pos.side).index_of(x).unwrap();
    }
}
