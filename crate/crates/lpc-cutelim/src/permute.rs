//! Moving the last rule of a derivation below a transformation of its
//! premises. Shared by the commutative cut cases and the direct duality
//! induction.

use lpc_kernel::{contract, Derivation, RuleId};
use lpc_syntax::{Context, Judgment, Prop, Sequent, Side};

use crate::CutError;

/// The linear rule with the same shape as a persistent one.
pub(crate) fn linear_twin(r: RuleId) -> Option<RuleId> {
    use RuleId::*;
    Some(match r {
        AxP | AxC => Ax,
        TensorPL => TensorL,
        TensorPR => TensorR,
        OnePL => OneL,
        OnePR => OneR,
        ParCL => ParL,
        ParCR => ParR,
        BotCL => BotL,
        BotCR => BotR,
        PWeakL => WeakL,
        PWeakR => WeakR,
        PContrL => ContrL,
        PContrR => ContrR,
        GBangR | GWhyL => return None,
        r if r.is_cut() => return None,
        r => r,
    })
}

fn is_multiplicative(r: RuleId) -> bool {
    matches!(r, RuleId::TensorR | RuleId::TensorPR | RuleId::ParL | RuleId::ParCL)
}

pub(crate) fn remove(s: &Sequent, side: Side, x: &Prop, n: usize) -> Result<Sequent, CutError> {
    let mut t = s.clone();
    *t.side_mut(side) = s
        .side(side)
        .remove_n(x, n)
        .ok_or_else(|| CutError::Shape(format!("{s} lacks {n} cop(ies) of {x} on the {side}")))?;
    Ok(t)
}

/// Contract one copy of every formula of `extra` on its side.
pub(crate) fn contract_all(mut d: Derivation, extra: &Sequent) -> Result<Derivation, CutError> {
    for side in [Side::Left, Side::Right] {
        for y in extra.side(side).iter() {
            d = contract(d, side, y)?;
        }
    }
    Ok(d)
}

/// Copies of `x` on `side` of premise `i` that come from the context rather
/// than from decomposing the principal formula.
fn context_copies(d: &Derivation, i: usize, side: Side, x: &Prop) -> usize {
    let here = d.premises[i].conclusion.side(side).count(x);
    let fresh = match d.principal_prop(0) {
        Some(p) if d.principal[0].side == side && p.children().get(i) == Some(&x) => 1,
        _ => 0,
    };
    here - fresh
}

/// Rebuild `d` over transformed premises.
///
/// `k` copies of `x` on `side` are traded for `extra`: each premise receiving
/// `k_i > 0` of those copies is replaced by `f(premise, k_i)`, whose
/// conclusion must be the premise's with the copies traded likewise. The
/// result concludes `d`'s sequent minus the copies plus `extra`, at judgment
/// `kind`.
pub(crate) fn permute(
    d: &Derivation,
    side: Side,
    x: &Prop,
    k: usize,
    extra: &Sequent,
    kind: Judgment,
    mut f: impl FnMut(&Derivation, usize) -> Result<Derivation, CutError>,
) -> Result<Derivation, CutError> {
    let ks: Vec<usize> = if is_multiplicative(d.rule) {
        let first = k.min(context_copies(d, 0, side, x));
        vec![first, k - first]
    } else {
        vec![k; d.premises.len()]
    };
    let mut premises = Vec::with_capacity(ks.len());
    let mut touched = 0;
    for (p, &kp) in d.premises.iter().zip(&ks) {
        if kp == 0 {
            premises.push(p.clone());
        } else {
            touched += 1;
            premises.push(f(p, kp)?);
        }
    }
    let doubled = is_multiplicative(d.rule) && touched == 2;
    let base = remove(&d.conclusion, side, x, k)?;
    let mut left: Context = base.left.sum(&extra.left);
    let mut right: Context = base.right.sum(&extra.right);
    if doubled {
        left = left.sum(&extra.left);
        right = right.sum(&extra.right);
    }
    let conclusion = Sequent { kind, left, right };
    let rule = if kind == d.conclusion.kind {
        d.rule
    } else {
        linear_twin(d.rule).ok_or_else(|| CutError::Shape(format!("{} has no linear form", d.rule)))?
    };
    let principal: Vec<(Side, &Prop)> = (0..d.principal.len())
        .map(|i| (d.principal[i].side, d.principal_prop(i).expect("checked input")))
        .collect();
    let node = Derivation::infer(rule, conclusion, &principal, premises);
    if doubled {
        contract_all(node, extra)
    } else {
        Ok(node)
    }
}
