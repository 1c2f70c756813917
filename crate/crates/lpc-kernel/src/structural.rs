//! Displacement and the replication macro.

use lpc_syntax::{Judgment, Prop, Sequent, Side};

use crate::derivation::{Derivation, Pos};
use crate::error::KernelError;
use crate::rule::RuleId;

/// Producers on the right and consumers on the left of a persistent sequent.
pub fn displaced(s: &Sequent) -> Result<Vec<Pos>, KernelError> {
    if s.kind != Judgment::Persistent {
        return Err(KernelError::NotPersistent);
    }
    Ok(s.misplaced().into_iter().map(|(side, index)| Pos { side, index }).collect())
}

/// Whether `x` may be weakened or contracted on `side`.
pub fn replicable(x: &Prop, side: Side) -> bool {
    match side {
        Side::Left => x.is_producer(),
        Side::Right => x.is_consumer(),
    }
}

fn rules_for(kind: Judgment, side: Side) -> (RuleId, RuleId) {
    use RuleId::*;
    match (kind, side) {
        (Judgment::Linear, Side::Left) => (WeakL, ContrL),
        (Judgment::Linear, Side::Right) => (WeakR, ContrR),
        (Judgment::Persistent, Side::Left) => (PWeakL, PContrL),
        (Judgment::Persistent, Side::Right) => (PWeakR, PContrR),
    }
}

/// Weaken `x` into the conclusion of `d` on `side`.
pub fn weaken(d: Derivation, side: Side, x: &Prop) -> Result<Derivation, KernelError> {
    if !replicable(x, side) {
        return Err(KernelError::NotReplicable { prop: x.clone(), side });
    }
    let (w, _) = rules_for(d.conclusion.kind, side);
    let mut s = d.conclusion.clone();
    *s.side_mut(side) = s.side(side).with(x.clone());
    Ok(Derivation::infer(w, s, &[(side, x)], vec![d]))
}

/// Contract two copies of `x` on `side` into one.
pub fn contract(d: Derivation, side: Side, x: &Prop) -> Result<Derivation, KernelError> {
    if !replicable(x, side) {
        return Err(KernelError::NotReplicable { prop: x.clone(), side });
    }
    let (_, c) = rules_for(d.conclusion.kind, side);
    let mut s = d.conclusion.clone();
    let shrunk = s.side(side).remove_one(x).ok_or_else(|| KernelError::MissingCopies {
        prop: x.clone(),
        side,
        count: 2,
    })?;
    if !shrunk.contains(x) {
        return Err(KernelError::MissingCopies { prop: x.clone(), side, count: 2 });
    }
    *s.side_mut(side) = shrunk;
    Ok(Derivation::infer(c, s, &[(side, x)], vec![d]))
}

/// From `d` proving a sequent with `n` copies of `x` on `side`, derive the
/// same sequent with exactly one of those copies: one weakening when `n = 0`,
/// nothing when `n = 1`, `n - 1` contractions otherwise.
pub fn replicate(d: Derivation, side: Side, x: &Prop, n: usize) -> Result<Derivation, KernelError> {
    if !replicable(x, side) {
        return Err(KernelError::NotReplicable { prop: x.clone(), side });
    }
    if d.conclusion.side(side).count(x) < n {
        return Err(KernelError::MissingCopies { prop: x.clone(), side, count: n });
    }
    match n {
        0 => weaken(d, side, x),
        _ => (1..n).try_fold(d, |acc, _| contract(acc, side, x)),
    }
}
