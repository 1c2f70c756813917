use lpc_kernel::{check, Derivation, Policy, RuleId};
use lpc_syntax::{Judgment, Mode, Prop, Sequent, Side};

use crate::elim::{eliminate_all, CutSpec};
use crate::permute::{permute, remove};
use crate::CutError;

/// Identity on a proposition and its dual, in both orientations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualAxioms {
    /// `A, A^⊥ ⊢ ·` for linear `A`, `P, P^* ⊩ ·` for a producer.
    pub left: Derivation,
    /// `· ⊢ A, A^⊥`, or `· ⊩ P, P^*`.
    pub right: Derivation,
    /// For a producer, `P, P^* ⊢ ·` assembled with a cut.
    pub linear_left: Option<Derivation>,
    /// For a producer, `· ⊢ P, P^*` assembled with a cut.
    pub linear_right: Option<Derivation>,
}

/// A consumer `C` is handled as the producer `C_*`.
pub fn dual_axiom(x: &Prop) -> DualAxioms {
    match x.mode() {
        Mode::L => DualAxioms { left: lin_left(x), right: lin_right(x), linear_left: None, linear_right: None },
        Mode::P => DualAxioms {
            left: pers_left(x),
            right: pers_right(x),
            linear_left: Some(linear_left_cut(x)),
            linear_right: Some(linear_right_cut(x)),
        },
        Mode::C => dual_axiom(&x.dual()),
    }
}

fn lin(l: Vec<Prop>, r: Vec<Prop>) -> Sequent {
    Sequent::linear(l, r)
}

fn pers(l: Vec<Prop>, r: Vec<Prop>) -> Sequent {
    Sequent::persistent(l, r)
}

fn node(rule: RuleId, s: Sequent, side: Side, x: &Prop, premises: Vec<Derivation>) -> Derivation {
    Derivation::infer(rule, s, &[(side, x)], premises)
}

fn ax(x: &Prop) -> Derivation {
    Derivation::infer(RuleId::Ax, lin(vec![x.clone()], vec![x.clone()]), &[(Side::Left, x), (Side::Right, x)], vec![])
}

/// `A, A^⊥ ⊢ ·`
fn lin_left(a: &Prop) -> Derivation {
    use Prop::*;
    let d = a.dual();
    let s = lin(vec![a.clone(), d.clone()], vec![]);
    match a {
        Top | Zero => node(RuleId::ZeroL, s, Side::Left, &Zero, vec![]),
        OneL | BotL => {
            let bot = node(RuleId::BotL, lin(vec![BotL], vec![]), Side::Left, &BotL, vec![]);
            node(RuleId::OneL, s, Side::Left, &OneL, vec![bot])
        }
        With(x, y) => {
            let l1 = node(RuleId::WithL1, lin(vec![a.clone(), x.dual()], vec![]), Side::Left, a, vec![lin_left(x)]);
            let l2 = node(RuleId::WithL2, lin(vec![a.clone(), y.dual()], vec![]), Side::Left, a, vec![lin_left(y)]);
            node(RuleId::PlusL, s, Side::Left, &d, vec![l1, l2])
        }
        Plus(x, y) => {
            let l1 = node(RuleId::WithL1, lin(vec![(**x).clone(), d.clone()], vec![]), Side::Left, &d, vec![lin_left(x)]);
            let l2 = node(RuleId::WithL2, lin(vec![(**y).clone(), d.clone()], vec![]), Side::Left, &d, vec![lin_left(y)]);
            node(RuleId::PlusL, s, Side::Left, a, vec![l1, l2])
        }
        TensorL(x, y) => {
            let inner = lin(vec![(**x).clone(), (**y).clone(), d.clone()], vec![]);
            let par = node(RuleId::ParL, inner, Side::Left, &d, vec![lin_left(x), lin_left(y)]);
            node(RuleId::TensorL, s, Side::Left, a, vec![par])
        }
        ParL(x, y) => {
            let inner = lin(vec![a.clone(), x.dual(), y.dual()], vec![]);
            let par = node(RuleId::ParL, inner, Side::Left, a, vec![lin_left(x), lin_left(y)]);
            node(RuleId::TensorL, s, Side::Left, &d, vec![par])
        }
        FBang(p) => {
            let why = node(RuleId::FWhyL, lin(vec![(**p).clone(), d.clone()], vec![]), Side::Left, &d, vec![pers_left(p)]);
            node(RuleId::FBangL, s, Side::Left, a, vec![why])
        }
        FWhy(c) => {
            let star = c.dual();
            let why = node(RuleId::FWhyL, lin(vec![a.clone(), star.clone()], vec![]), Side::Left, a, vec![pers_left(&star)]);
            node(RuleId::FBangL, s, Side::Left, &d, vec![why])
        }
        _ => unreachable!("{a} is not linear"),
    }
}

/// `· ⊢ A, A^⊥`
fn lin_right(a: &Prop) -> Derivation {
    use Prop::*;
    let d = a.dual();
    let s = lin(vec![], vec![a.clone(), d.clone()]);
    match a {
        Top | Zero => node(RuleId::TopR, s, Side::Right, &Top, vec![]),
        OneL | BotL => {
            let one = node(RuleId::OneR, lin(vec![], vec![OneL]), Side::Right, &OneL, vec![]);
            node(RuleId::BotR, s, Side::Right, &BotL, vec![one])
        }
        With(x, y) => {
            let r1 = node(RuleId::PlusR1, lin(vec![], vec![(**x).clone(), d.clone()]), Side::Right, &d, vec![lin_right(x)]);
            let r2 = node(RuleId::PlusR2, lin(vec![], vec![(**y).clone(), d.clone()]), Side::Right, &d, vec![lin_right(y)]);
            node(RuleId::WithR, s, Side::Right, a, vec![r1, r2])
        }
        Plus(x, y) => {
            let r1 = node(RuleId::PlusR1, lin(vec![], vec![a.clone(), x.dual()]), Side::Right, a, vec![lin_right(x)]);
            let r2 = node(RuleId::PlusR2, lin(vec![], vec![a.clone(), y.dual()]), Side::Right, a, vec![lin_right(y)]);
            node(RuleId::WithR, s, Side::Right, &d, vec![r1, r2])
        }
        TensorL(x, y) => {
            let inner = lin(vec![], vec![a.clone(), x.dual(), y.dual()]);
            let ten = node(RuleId::TensorR, inner, Side::Right, a, vec![lin_right(x), lin_right(y)]);
            node(RuleId::ParR, s, Side::Right, &d, vec![ten])
        }
        ParL(x, y) => {
            let inner = lin(vec![], vec![(**x).clone(), (**y).clone(), d.clone()]);
            let ten = node(RuleId::TensorR, inner, Side::Right, &d, vec![lin_right(x), lin_right(y)]);
            node(RuleId::ParR, s, Side::Right, a, vec![ten])
        }
        FBang(p) => {
            let star = p.dual();
            let bang = node(RuleId::FBangR, lin(vec![], vec![a.clone(), star.clone()]), Side::Right, a, vec![pers_right(p)]);
            node(RuleId::FWhyR, s, Side::Right, &d, vec![bang])
        }
        FWhy(c) => {
            let star = c.dual();
            let bang = node(RuleId::FBangR, lin(vec![], vec![(**c).clone(), d.clone()]), Side::Right, &d, vec![pers_right(&star)]);
            node(RuleId::FWhyR, s, Side::Right, a, vec![bang])
        }
        _ => unreachable!("{a} is not linear"),
    }
}

/// `P, P^* ⊩ ·`
fn pers_left(p: &Prop) -> Derivation {
    use Prop::*;
    let d = p.dual();
    let s = pers(vec![p.clone(), d.clone()], vec![]);
    match p {
        OneP => {
            let bot = node(RuleId::BotCL, pers(vec![BotC], vec![]), Side::Left, &BotC, vec![]);
            node(RuleId::OnePL, s, Side::Left, &OneP, vec![bot])
        }
        TensorP(x, y) => {
            let inner = pers(vec![(**x).clone(), (**y).clone(), d.clone()], vec![]);
            let par = node(RuleId::ParCL, inner, Side::Left, &d, vec![pers_left(x), pers_left(y)]);
            node(RuleId::TensorPL, s, Side::Left, p, vec![par])
        }
        GBang(a) => {
            let bang = node(RuleId::GBangL, lin(vec![p.clone(), a.dual()], vec![]), Side::Left, p, vec![lin_left(a)]);
            node(RuleId::GWhyL, s, Side::Left, &d, vec![bang])
        }
        _ => unreachable!("{p} is not a producer"),
    }
}

/// `· ⊩ P, P^*`
fn pers_right(p: &Prop) -> Derivation {
    use Prop::*;
    let d = p.dual();
    let s = pers(vec![], vec![p.clone(), d.clone()]);
    match p {
        OneP => {
            let one = node(RuleId::OnePR, pers(vec![], vec![OneP]), Side::Right, &OneP, vec![]);
            node(RuleId::BotCR, s, Side::Right, &BotC, vec![one])
        }
        TensorP(x, y) => {
            let inner = pers(vec![], vec![p.clone(), x.dual(), y.dual()]);
            let ten = node(RuleId::TensorPR, inner, Side::Right, p, vec![pers_right(x), pers_right(y)]);
            node(RuleId::ParCR, s, Side::Right, &d, vec![ten])
        }
        GBang(a) => {
            let why = node(RuleId::GWhyR, lin(vec![], vec![(**a).clone(), d.clone()]), Side::Right, &d, vec![lin_right(a)]);
            node(RuleId::GBangR, s, Side::Right, p, vec![why])
        }
        _ => unreachable!("{p} is not a producer"),
    }
}

fn cut(rule: RuleId, s: Sequent, x: &Prop, d1: Derivation, d2: Derivation) -> Derivation {
    Derivation::infer(rule, s, &[(Side::Right, x)], vec![d1, d2])
}

/// `P, P^* ⊢ ·` by cutting `P^* ⊢ P^*` against `P, P^* ⊩ ·`.
fn linear_left_cut(p: &Prop) -> Derivation {
    let star = p.dual();
    cut(RuleId::CutC, lin(vec![p.clone(), star.clone()], vec![]), &star, ax(&star), pers_left(p))
}

/// `· ⊢ P, P^*` by cutting `· ⊩ P, P^*` against `P ⊢ P`.
fn linear_right_cut(p: &Prop) -> Derivation {
    cut(RuleId::CutP, lin(vec![], vec![p.clone(), p.dual()]), p, pers_right(p), ax(p))
}

/// From `d` with `x` on `side`, derive the same sequent with `x` removed and
/// its dual added on the other side. The result is cut-free.
pub fn elaborate_dual(d: &Derivation, side: Side, x: &Prop) -> Result<Derivation, CutError> {
    let r = check(d, Policy::WITH_CUT);
    if !r.is_ok() {
        return Err(CutError::Check(r.to_string()));
    }
    if !d.conclusion.side(side).contains(x) {
        return Err(CutError::Shape(format!("{x} is not on the {side} of {}", d.conclusion)));
    }
    let s = &d.conclusion;
    let y = x.dual();
    let rest = remove(s, side, x, 1)?;
    let mut goal = rest.clone();
    *goal.side_mut(side.flip()) = rest.side(side.flip()).with(y.clone());
    let axioms = dual_axiom(x);
    let linear = s.kind == Judgment::Linear;
    let with_cut = match (side, linear, x.mode()) {
        // moving to the left: cut d against x, x^dual |- .
        (Side::Right, true, Mode::P) | (Side::Left, true, Mode::C) => {
            let d0 = eliminate_all(d)?;
            return induct(&d0, side, x);
        }
        (Side::Right, _, _) => {
            let spec = CutSpec::between(d, &axioms.left, x.clone())?;
            cut(spec.rule, goal, x, d.clone(), axioms.left)
        }
        // moving to the right: cut . |- x^dual, x against d
        (Side::Left, _, _) => {
            let spec = CutSpec::between(&axioms.right, d, x.clone())?;
            cut(spec.rule, goal, x, axioms.right, d.clone())
        }
    };
    eliminate_all(&with_cut)
}

/// Direct induction for a displaced formula of a linear sequent: a producer
/// on the right or a consumer on the left.
fn induct(d: &Derivation, side: Side, x: &Prop) -> Result<Derivation, CutError> {
    use Prop::*;
    let y = x.dual();
    let principal = !d.rule.is_cut()
        && (0..d.principal.len()).any(|i| d.principal[i].side == side && d.principal_prop(i) == Some(x));
    let rest = remove(&d.conclusion, side, x, 1)?;
    let mut goal = rest.clone();
    *goal.side_mut(side.flip()) = rest.side(side.flip()).with(y.clone());
    if principal {
        return match (side, x, d.rule) {
            (_, _, RuleId::Ax) => {
                let a = dual_axiom(x);
                let with_cut = if side == Side::Right { a.linear_left } else { a.linear_right };
                eliminate_all(&with_cut.expect("persistent formula"))
            }
            (Side::Right, TensorP(a, b), RuleId::TensorR) => {
                let l = induct(&d.premises[0], side, a)?;
                let r = induct(&d.premises[1], side, b)?;
                Ok(Derivation::infer(RuleId::ParL, goal, &[(Side::Left, &y)], vec![l, r]))
            }
            (Side::Right, OneP, RuleId::OneR) => Ok(Derivation::infer(RuleId::BotL, goal, &[(Side::Left, &y)], vec![])),
            (Side::Left, ParC(a, b), RuleId::ParL) => {
                let l = induct(&d.premises[0], side, a)?;
                let r = induct(&d.premises[1], side, b)?;
                Ok(Derivation::infer(RuleId::TensorR, goal, &[(Side::Right, &y)], vec![l, r]))
            }
            (Side::Left, BotC, RuleId::BotL) => Ok(Derivation::infer(RuleId::OneR, goal, &[(Side::Right, &y)], vec![])),
            _ => Err(CutError::Internal { case: format!("duality on {x} through {}", d.rule), trace: String::new() }),
        };
    }
    let mut extra = Sequent { kind: d.conclusion.kind, left: Default::default(), right: Default::default() };
    *extra.side_mut(side.flip()) = extra.side(side.flip()).with(y);
    permute(d, side, x, 1, &extra, d.conclusion.kind, |p, _| induct(p, side, x))
}
