use lpc_kernel::{check, replicate, weaken, Derivation, Policy, RuleId};
use lpc_search::{search, SearchBudget};
use lpc_syntax::{Judgment, Mode, Prop, Sequent, Side};

use crate::permute::{contract_all, linear_twin, permute, remove};
use crate::trace::{EliminationTrace, Measure};
use crate::CutError;

/// One Cut⁺ instance: which rule, on what, and how many copies of the cut
/// formula the replicable premise contributes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CutSpec {
    pub rule: RuleId,
    pub formula: Prop,
    pub copies: usize,
}

impl CutSpec {
    pub fn new(rule: RuleId, formula: Prop, copies: usize) -> Result<CutSpec, CutError> {
        if !rule.is_cut() {
            return Err(CutError::Shape(format!("{rule} is not a cut")));
        }
        if copies == 0 || (rule == RuleId::CutL && copies != 1) {
            return Err(CutError::Shape(format!("{rule} cannot take {copies} copies")));
        }
        Ok(CutSpec { rule, formula, copies })
    }

    /// The cut matching the premises' judgments and the formula's mode.
    pub fn between(d1: &Derivation, d2: &Derivation, formula: Prop) -> Result<CutSpec, CutError> {
        let rule = cut_rule(d1.conclusion.kind, d2.conclusion.kind, &formula)?;
        CutSpec::new(rule, formula, 1)
    }
}

pub(crate) fn cut_rule(k1: Judgment, k2: Judgment, x: &Prop) -> Result<RuleId, CutError> {
    use Judgment::*;
    use RuleId::*;
    Ok(match (k1, k2, x.mode()) {
        (Linear, Linear, Mode::L) => CutL,
        (Persistent, Linear, Mode::P) => CutP,
        (Persistent, Persistent, Mode::P) => CutPP,
        (Linear, Persistent, Mode::C) => CutC,
        (Persistent, Persistent, Mode::C) => CutCP,
        _ => return Err(CutError::Shape(format!("no cut on {x} between {k1:?} and {k2:?} premises"))),
    })
}

/// Whether the replicable copies sit in the first premise (consumer cuts).
fn copies_in_first(rule: RuleId) -> bool {
    matches!(rule, RuleId::CutC | RuleId::CutCP)
}

fn is_axiom(d: &Derivation) -> bool {
    matches!(d.rule, RuleId::Ax | RuleId::AxP | RuleId::AxC)
}

fn principal_on(d: &Derivation, side: Side, x: &Prop) -> bool {
    !d.rule.is_cut() && (0..d.principal.len()).any(|i| d.principal[i].side == side && d.principal_prop(i) == Some(x))
}

fn weaken_all(mut d: Derivation, extra: &Sequent) -> Result<Derivation, CutError> {
    for side in [Side::Left, Side::Right] {
        for y in extra.side(side).iter() {
            d = weaken(d, side, y)?;
        }
    }
    Ok(d)
}

/// Re-express a persistent derivation as a linear one on the same contexts.
/// Falls back to search once a rule with no linear form is reached.
pub(crate) fn linearize(d: &Derivation) -> Result<Derivation, CutError> {
    fn go(d: &Derivation) -> Option<Derivation> {
        let rule = linear_twin(d.rule)?;
        let premises = d.premises.iter().map(go).collect::<Option<Vec<_>>>()?;
        Some(Derivation::new(rule, d.conclusion.with_kind(Judgment::Linear), d.principal.clone(), premises))
    }
    if let Some(l) = go(d) {
        return Ok(l);
    }
    let goal = d.conclusion.with_kind(Judgment::Linear);
    let budget = SearchBudget { depth: 8, contractions: 2, nodes: 200_000 };
    match search(&goal, budget) {
        Ok(Some(found)) => Ok(found),
        _ => Err(CutError::NoCutFreeForm { sequent: goal }),
    }
}

#[derive(Default)]
struct Eliminator {
    trace: EliminationTrace,
}

impl Eliminator {
    fn internal(&self, case: impl Into<String>) -> CutError {
        CutError::Internal { case: case.into(), trace: self.trace.to_string() }
    }

    fn cut(
        &mut self,
        d1: &Derivation,
        d2: &Derivation,
        rule: RuleId,
        x: &Prop,
        n: usize,
        parent: Option<usize>,
    ) -> Result<Derivation, CutError> {
        let me = self.trace.enter(Measure { formula: x.size(), depth: d1.depth() + d2.depth() }, parent);
        let first = copies_in_first(rule);
        let (n1, n2) = if first { (n, 1) } else { (1, n) };
        let r1 = remove(&d1.conclusion, Side::Right, x, n1)?;
        let r2 = remove(&d2.conclusion, Side::Left, x, n2)?;
        let kind = rule.conclusion_judgment();
        let (rep, rep_side, one, one_rest) = if first { (d1, Side::Right, d2, &r2) } else { (d2, Side::Left, d1, &r1) };

        if n == 0 {
            self.trace.label(me, "weakening");
            return weaken_all(rep.clone(), one_rest);
        }
        let structural = match (rep.rule, rep_side) {
            (RuleId::WeakL | RuleId::PWeakL, Side::Left) | (RuleId::WeakR | RuleId::PWeakR, Side::Right) => Some(n - 1),
            (RuleId::ContrL | RuleId::PContrL, Side::Left) | (RuleId::ContrR | RuleId::PContrR, Side::Right) => {
                Some(n + 1)
            }
            _ => None,
        };
        if let Some(m) = structural.filter(|_| rep.principal_prop(0) == Some(x)) {
            self.trace.label(me, "structural");
            let p = &rep.premises[0];
            return if first { self.cut(p, d2, rule, x, m, Some(me)) } else { self.cut(d1, p, rule, x, m, Some(me)) };
        }
        if is_axiom(one) {
            self.trace.label(me, "axiom");
            return if n == 1 { Ok(rep.clone()) } else { Ok(replicate(rep.clone(), rep_side, x, n)?) };
        }
        if is_axiom(rep) {
            self.trace.label(me, "axiom");
            return if one.conclusion.kind == kind { Ok(one.clone()) } else { linearize(one) };
        }
        let p1 = principal_on(d1, Side::Right, x);
        let p2 = principal_on(d2, Side::Left, x);
        if p1 && p2 {
            return self.principal(d1, d2, rule, x, n, me, one_rest);
        }
        self.trace.label(me, "commute");
        let (d, side, k, other, other_rest) =
            if !p2 { (d2, Side::Left, n2, d1, &r1) } else { (d1, Side::Right, n1, d2, &r2) };
        let on_first = !p2;
        permute(d, side, x, k, other_rest, kind, |p, kp| {
            let (a, b) = if on_first { (other, p) } else { (p, other) };
            let r = cut_rule(a.conclusion.kind, b.conclusion.kind, x)?;
            self.cut(a, b, r, x, kp, Some(me))
        })
    }

    /// Subcut between arbitrary derivations, choosing the rule from their
    /// judgments.
    fn sub(&mut self, a: &Derivation, b: &Derivation, x: &Prop, n: usize, me: usize) -> Result<Derivation, CutError> {
        let r = cut_rule(a.conclusion.kind, b.conclusion.kind, x)?;
        self.cut(a, b, r, x, n, Some(me))
    }

    #[allow(clippy::too_many_arguments)]
    fn principal(
        &mut self,
        d1: &Derivation,
        d2: &Derivation,
        rule: RuleId,
        x: &Prop,
        n: usize,
        me: usize,
        one_rest: &Sequent,
    ) -> Result<Derivation, CutError> {
        use Prop::*;
        let e1 = |i: usize| &d1.premises[i];
        let e2 = |i: usize| &d2.premises[i];
        let arity_ok = d1.premises.len() == d1.rule.arity() && d2.premises.len() == d2.rule.arity();
        if !arity_ok {
            return Err(self.internal(format!("principal {} against {}", d1.rule, d2.rule)));
        }
        let (label, out) = match (x, d1.rule, d2.rule) {
            (With(a, b), RuleId::WithR, RuleId::WithL1 | RuleId::WithL2) => {
                let (i, c) = if d2.rule == RuleId::WithL1 { (0, a) } else { (1, b) };
                ("principal &", self.sub(e1(i), e2(0), c, 1, me)?)
            }
            (Plus(a, b), RuleId::PlusR1 | RuleId::PlusR2, RuleId::PlusL) => {
                let (i, c) = if d1.rule == RuleId::PlusR1 { (0, a) } else { (1, b) };
                ("principal +", self.sub(e1(0), e2(i), c, 1, me)?)
            }
            (TensorL(a, b), RuleId::TensorR, RuleId::TensorL) => {
                let g = self.sub(e1(1), e2(0), b, 1, me)?;
                ("principal tensor", self.sub(e1(0), &g, a, 1, me)?)
            }
            (ParL(a, b), RuleId::ParR, RuleId::ParL) => {
                let g = self.sub(e1(0), e2(0), a, 1, me)?;
                ("principal par", self.sub(&g, e2(1), b, 1, me)?)
            }
            (OneL, RuleId::OneR, RuleId::OneL) => ("principal 1", e2(0).clone()),
            (BotL, RuleId::BotR, RuleId::BotL) => ("principal bot", e1(0).clone()),
            (FBang(p), RuleId::FBangR, RuleId::FBangL) => ("principal F!", self.sub(e1(0), e2(0), p, 1, me)?),
            (FWhy(c), RuleId::FWhyR, RuleId::FWhyL) => ("principal F?", self.sub(e1(0), e2(0), c, 1, me)?),
            (TensorP(a, b), RuleId::TensorPR, RuleId::TensorL | RuleId::TensorPL) => {
                let f = self.rest_copies(d1, e2(0), rule, x, n, me, true)?;
                let g = self.sub(e1(1), &f, b, 1, me)?;
                let h = self.sub(e1(0), &g, a, 1, me)?;
                ("principal tensor-p", self.merge(h, n, one_rest)?)
            }
            (OneP, RuleId::OnePR, RuleId::OneL | RuleId::OnePL) => {
                ("principal 1p", self.rest_copies(d1, e2(0), rule, x, n, me, true)?)
            }
            (GBang(a), RuleId::GBangR, RuleId::GBangL) => {
                let f = self.rest_copies(d1, e2(0), rule, x, n, me, true)?;
                let h = self.sub(e1(0), &f, a, 1, me)?;
                ("principal !", self.merge(h, n, one_rest)?)
            }
            (ParC(a, b), RuleId::ParR | RuleId::ParCR, RuleId::ParCL) => {
                let f = self.rest_copies(e1(0), d2, rule, x, n, me, false)?;
                let g = self.sub(&f, e2(0), a, 1, me)?;
                let h = self.sub(&g, e2(1), b, 1, me)?;
                ("principal par-c", self.merge(h, n, one_rest)?)
            }
            (BotC, RuleId::BotR | RuleId::BotCR, RuleId::BotCL) => {
                ("principal bot-c", self.rest_copies(e1(0), d2, rule, x, n, me, false)?)
            }
            (GWhy(a), RuleId::GWhyR, RuleId::GWhyL) => {
                let f = self.rest_copies(e1(0), d2, rule, x, n, me, false)?;
                let h = self.sub(&f, e2(0), a, 1, me)?;
                ("principal ?", self.merge(h, n, one_rest)?)
            }
            _ => return Err(self.internal(format!("principal {} against {} on {x}", d1.rule, d2.rule))),
        };
        self.trace.label(me, label);
        Ok(out)
    }

    /// Cut the `n - 1` copies left in the replicable premise after its last
    /// rule consumed one; identity when there are none.
    #[allow(clippy::too_many_arguments)]
    fn rest_copies(
        &mut self,
        a: &Derivation,
        b: &Derivation,
        rule: RuleId,
        x: &Prop,
        n: usize,
        me: usize,
        keep_second: bool,
    ) -> Result<Derivation, CutError> {
        if n == 1 {
            return Ok(if keep_second { b.clone() } else { a.clone() });
        }
        self.cut(a, b, rule, x, n - 1, Some(me))
    }

    /// The restricted side context enters twice when copies remained.
    fn merge(&self, d: Derivation, n: usize, one_rest: &Sequent) -> Result<Derivation, CutError> {
        if n > 1 {
            contract_all(d, one_rest)
        } else {
            Ok(d)
        }
    }
}

fn expect_cut_free(d: &Derivation, which: &str) -> Result<(), CutError> {
    let r = check(d, Policy::CUT_FREE);
    if r.is_ok() {
        Ok(())
    } else {
        Err(CutError::Check(format!("{which}: {r}")))
    }
}

/// Eliminate one Cut⁺ between cut-free derivations.
pub fn eliminate_cut_plus(
    d1: &Derivation,
    d2: &Derivation,
    spec: &CutSpec,
) -> Result<(Derivation, EliminationTrace), CutError> {
    expect_cut_free(d1, "first premise")?;
    expect_cut_free(d2, "second premise")?;
    let x = &spec.formula;
    let want = cut_rule(d1.conclusion.kind, d2.conclusion.kind, x)?;
    if want != spec.rule {
        return Err(CutError::Shape(format!("premises fit {want}, not {}", spec.rule)));
    }
    let first = copies_in_first(spec.rule);
    let (n1, n2) = if first { (spec.copies, 1) } else { (1, spec.copies) };
    let r1 = remove(&d1.conclusion, Side::Right, x, n1)?;
    let r2 = remove(&d2.conclusion, Side::Left, x, n2)?;
    let restricted = |s: &Sequent| s.left.all_producer() && s.right.all_consumer();
    let ok = match spec.rule {
        RuleId::CutP | RuleId::CutPP => restricted(&r1),
        RuleId::CutC | RuleId::CutCP => restricted(&r2),
        _ => true,
    };
    if !ok {
        return Err(CutError::Shape(format!("side context around {x} is not restricted")));
    }
    let mut e = Eliminator::default();
    let out = e.cut(d1, d2, spec.rule, x, spec.copies, None)?;
    Ok((out, e.trace))
}

/// Remove every cut, innermost first, keeping the end-sequent.
pub fn eliminate_all(d: &Derivation) -> Result<Derivation, CutError> {
    eliminate_all_traced(d).map(|(out, _)| out)
}

/// As [`eliminate_all`], also returning one trace per eliminated cut.
pub fn eliminate_all_traced(d: &Derivation) -> Result<(Derivation, Vec<EliminationTrace>), CutError> {
    let r = check(d, Policy::WITH_CUT);
    if !r.is_ok() {
        return Err(CutError::Check(r.to_string()));
    }
    let mut traces = Vec::new();
    let out = elim(d, &mut traces)?;
    Ok((out, traces))
}

fn elim(d: &Derivation, traces: &mut Vec<EliminationTrace>) -> Result<Derivation, CutError> {
    if d.is_cut_free() {
        return Ok(d.clone());
    }
    let premises = d.premises.iter().map(|p| elim(p, traces)).collect::<Result<Vec<_>, _>>()?;
    if !d.rule.is_cut() {
        return Ok(Derivation { premises, ..d.clone() });
    }
    let x = d.principal_prop(0).expect("checked cut").clone();
    let mut e = Eliminator::default();
    let out = e.cut(&premises[0], &premises[1], d.rule, &x, 1, None)?;
    traces.push(e.trace);
    Ok(out)
}
