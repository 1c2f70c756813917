//! Bounded backward proof search over the cut-free rules.
//!
//! Weakening is only ever applied directly above a leaf; contraction is
//! rationed per branch. Invertible rules are applied eagerly and committed
//! to. Iterative deepening makes the first proof found one of least depth.

use std::collections::HashMap;

use lpc_kernel::{weaken, Derivation, RuleId};
use lpc_syntax::{Context, Judgment, Prop, Sequent, Side};
use thiserror::Error;

mod corpus;

pub use corpus::{enumerate_provable, enumerate_sequents};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchBudget {
    /// Maximum derivation depth, counting nodes on a branch.
    pub depth: usize,
    /// Contractions allowed on any single branch.
    pub contractions: usize,
    /// Total proof-search nodes visited before giving up.
    pub nodes: usize,
}

impl SearchBudget {
    pub fn new(depth: usize, contractions: usize) -> Self {
        SearchBudget { depth, contractions, nodes: 2_000_000 }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(6, 2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("goal is not a well-formed sequent: {0}")]
    IllFormedGoal(String),
    #[error("node limit must be positive")]
    NoNodes,
}

/// Find a cut-free derivation of `goal` within budget, or `None` when the
/// budget is exhausted (which refutes nothing).
pub fn search(goal: &Sequent, b: SearchBudget) -> Result<Option<Derivation>, SearchError> {
    if !goal.is_well_formed() {
        return Err(SearchError::IllFormedGoal(goal.to_string()));
    }
    if b.nodes == 0 {
        return Err(SearchError::NoNodes);
    }
    let mut pr = Prover { limit: b.nodes, visited: 0, aborted: false, failed: HashMap::new() };
    for d in 1..=b.depth {
        if let Some(found) = pr.prove(goal, d, b.contractions) {
            return Ok(Some(found));
        }
        if pr.aborted {
            break;
        }
    }
    Ok(None)
}

/// A leaf rule applied to a sub-sequent, with its principal formulas.
type Core = (RuleId, Sequent, Vec<(Side, Prop)>);

struct Prover {
    limit: usize,
    visited: usize,
    aborted: bool,
    // (goal, contractions) -> greatest depth known to fail
    failed: HashMap<(Sequent, usize), usize>,
}

fn node(rule: RuleId, concl: &Sequent, side: Side, x: &Prop, premises: Vec<Derivation>) -> Derivation {
    Derivation::infer(rule, concl.clone(), &[(side, x)], premises)
}

fn plus(s: &Sequent, side: Side, xs: &[&Prop]) -> Sequent {
    let mut t = s.clone();
    for x in xs {
        *t.side_mut(side) = t.side(side).with((*x).clone());
    }
    t
}

fn without(s: &Sequent, side: Side, i: usize) -> Sequent {
    let mut t = s.clone();
    *t.side_mut(side) = t.side(side).without_index(i);
    t
}

fn weakenable(s: &Sequent) -> bool {
    s.left.all_producer() && s.right.all_consumer()
}

fn restricted(s: &Sequent) -> bool {
    weakenable(s)
}

/// Close `leaf` (whose conclusion is `core`) up to `full` by weakening the
/// difference, which must consist of producers on the left and consumers
/// on the right.
fn weaken_to(leaf: Derivation, full: &Sequent) -> Derivation {
    let core = leaf.conclusion.clone();
    let extra_l = full.left.minus(&core.left).expect("core is a sub-sequent");
    let extra_r = full.right.minus(&core.right).expect("core is a sub-sequent");
    let mut d = leaf;
    for x in extra_l.iter() {
        d = weaken(d, Side::Left, x).expect("producer on the left");
    }
    for x in extra_r.iter() {
        d = weaken(d, Side::Right, x).expect("consumer on the right");
    }
    d
}

fn distinct(c: &Context) -> Vec<(usize, &Prop)> {
    let mut out: Vec<(usize, &Prop)> = Vec::new();
    for (i, x) in c.iter().enumerate() {
        if out.last().map(|(_, y)| *y != x).unwrap_or(true) {
            out.push((i, x));
        }
    }
    out
}

impl Prover {
    fn prove(&mut self, s: &Sequent, depth: usize, contr: usize) -> Option<Derivation> {
        if depth == 0 || self.aborted {
            return None;
        }
        if let Some(&d) = self.failed.get(&(s.clone(), contr)) {
            if depth <= d {
                return None;
            }
        }
        self.visited += 1;
        if self.visited > self.limit {
            self.aborted = true;
            return None;
        }
        let r = self.attempt(s, depth, contr);
        if r.is_none() && !self.aborted {
            let e = self.failed.entry((s.clone(), contr)).or_insert(0);
            *e = (*e).max(depth);
        }
        r
    }

    fn attempt(&mut self, s: &Sequent, depth: usize, contr: usize) -> Option<Derivation> {
        if let Some(d) = self.leaf(s, depth) {
            return Some(d);
        }
        if depth < 2 {
            return None;
        }
        if let Some(r) = self.invertible(s, depth, contr) {
            return r;
        }
        self.choices(s, depth, contr)
    }

    fn leaf(&mut self, s: &Sequent, depth: usize) -> Option<Derivation> {
        let lin = s.kind == Judgment::Linear;
        if lin {
            if let Some(i) = s.right.index_of(&Prop::Top) {
                return Some(Derivation::infer(RuleId::TopR, s.clone(), &[(Side::Right, &s.right.as_slice()[i])], vec![]));
            }
            if let Some(i) = s.left.index_of(&Prop::Zero) {
                return Some(Derivation::infer(RuleId::ZeroL, s.clone(), &[(Side::Left, &s.left.as_slice()[i])], vec![]));
            }
        }
        // candidate cores, each a leaf rule on a sub-sequent
        let mut cores: Vec<Core> = Vec::new();
        for (_, x) in distinct(&s.left) {
            if s.right.contains(x) {
                let rule = match (lin, x.mode()) {
                    (true, _) => RuleId::Ax,
                    (false, lpc_syntax::Mode::P) => RuleId::AxP,
                    (false, _) => RuleId::AxC,
                };
                let core = Sequent { kind: s.kind, left: Context::single(x.clone()), right: Context::single(x.clone()) };
                cores.push((rule, core, vec![(Side::Left, x.clone()), (Side::Right, x.clone())]));
            }
        }
        let units: [(Side, Prop, RuleId); 4] = if lin {
            [
                (Side::Right, Prop::OneL, RuleId::OneR),
                (Side::Right, Prop::OneP, RuleId::OneR),
                (Side::Left, Prop::BotL, RuleId::BotL),
                (Side::Left, Prop::BotC, RuleId::BotL),
            ]
        } else {
            [
                (Side::Right, Prop::OneP, RuleId::OnePR),
                (Side::Right, Prop::OneP, RuleId::OnePR),
                (Side::Left, Prop::BotC, RuleId::BotCL),
                (Side::Left, Prop::BotC, RuleId::BotCL),
            ]
        };
        for (side, x, rule) in units {
            if s.side(side).contains(&x) {
                let mut core = Sequent { kind: s.kind, left: Context::empty(), right: Context::empty() };
                *core.side_mut(side) = Context::single(x.clone());
                cores.push((rule, core, vec![(side, x)]));
            }
        }
        for (rule, core, prin) in cores {
            let extra = Sequent {
                kind: s.kind,
                left: s.left.minus(&core.left).unwrap(),
                right: s.right.minus(&core.right).unwrap(),
            };
            if !weakenable(&extra) || depth < 1 + extra.left.len() + extra.right.len() {
                continue;
            }
            let refs: Vec<(Side, &Prop)> = prin.iter().map(|(sd, x)| (*sd, x)).collect();
            let leaf = Derivation::infer(rule, core, &refs, vec![]);
            return Some(weaken_to(leaf, s));
        }
        None
    }

    /// `Some(result)` when an invertible rule applied (and was committed to).
    fn invertible(&mut self, s: &Sequent, depth: usize, contr: usize) -> Option<Option<Derivation>> {
        let lin = s.kind == Judgment::Linear;
        for (i, x) in s.right.iter().enumerate() {
            let rest = without(s, Side::Right, i);
            let (rule, prem) = match x {
                Prop::ParL(a, b) if lin => (RuleId::ParR, vec![plus(&rest, Side::Right, &[a, b])]),
                Prop::ParC(a, b) => (if lin { RuleId::ParR } else { RuleId::ParCR }, vec![plus(&rest, Side::Right, &[a, b])]),
                Prop::BotL if lin => (RuleId::BotR, vec![rest]),
                Prop::BotC => (if lin { RuleId::BotR } else { RuleId::BotCR }, vec![rest]),
                Prop::With(a, b) if lin => {
                    (RuleId::WithR, vec![plus(&rest, Side::Right, &[a]), plus(&rest, Side::Right, &[b])])
                }
                Prop::FWhy(c) if lin => (RuleId::FWhyR, vec![plus(&rest, Side::Right, &[c])]),
                _ => continue,
            };
            return Some(self.all(rule, s, Side::Right, x, prem, depth, contr));
        }
        for (i, x) in s.left.iter().enumerate() {
            let rest = without(s, Side::Left, i);
            let (rule, prem) = match x {
                Prop::TensorL(a, b) if lin => (RuleId::TensorL, vec![plus(&rest, Side::Left, &[a, b])]),
                Prop::TensorP(a, b) => {
                    (if lin { RuleId::TensorL } else { RuleId::TensorPL }, vec![plus(&rest, Side::Left, &[a, b])])
                }
                Prop::OneL if lin => (RuleId::OneL, vec![rest]),
                Prop::OneP => (if lin { RuleId::OneL } else { RuleId::OnePL }, vec![rest]),
                Prop::Plus(a, b) if lin => {
                    (RuleId::PlusL, vec![plus(&rest, Side::Left, &[a]), plus(&rest, Side::Left, &[b])])
                }
                Prop::FBang(p) if lin => (RuleId::FBangL, vec![plus(&rest, Side::Left, &[p])]),
                _ => continue,
            };
            return Some(self.all(rule, s, Side::Left, x, prem, depth, contr));
        }
        None
    }

    #[allow(clippy::too_many_arguments)]
    fn all(
        &mut self,
        rule: RuleId,
        s: &Sequent,
        side: Side,
        x: &Prop,
        prem: Vec<Sequent>,
        depth: usize,
        contr: usize,
    ) -> Option<Derivation> {
        let mut ds = Vec::with_capacity(prem.len());
        for p in &prem {
            ds.push(self.prove(p, depth - 1, contr)?);
        }
        Some(node(rule, s, side, x, ds))
    }

    #[allow(clippy::too_many_arguments)]
    fn split(
        &mut self,
        rule: RuleId,
        s: &Sequent,
        side: Side,
        i: usize,
        parts: [&Prop; 2],
        depth: usize,
        contr: usize,
    ) -> Option<Derivation> {
        let x = s.side(side).as_slice()[i].clone();
        let rest = without(s, side, i);
        let ls = rest.left.splits();
        let rs = rest.right.splits();
        for (l1, l2) in &ls {
            for (r1, r2) in &rs {
                let mut p1 = Sequent { kind: s.kind, left: l1.clone(), right: r1.clone() };
                let mut p2 = Sequent { kind: s.kind, left: l2.clone(), right: r2.clone() };
                *p1.side_mut(side) = p1.side(side).with(parts[0].clone());
                *p2.side_mut(side) = p2.side(side).with(parts[1].clone());
                let Some(d1) = self.prove(&p1, depth - 1, contr) else { continue };
                let Some(d2) = self.prove(&p2, depth - 1, contr) else { continue };
                return Some(node(rule, s, side, &x, vec![d1, d2]));
            }
            if self.aborted {
                return None;
            }
        }
        None
    }

    fn choices(&mut self, s: &Sequent, depth: usize, contr: usize) -> Option<Derivation> {
        let lin = s.kind == Judgment::Linear;
        // multiplicative splits
        for (i, x) in distinct(&s.right) {
            let found = match x {
                Prop::TensorL(a, b) if lin => self.split(RuleId::TensorR, s, Side::Right, i, [a, b], depth, contr),
                Prop::TensorP(a, b) => {
                    let r = if lin { RuleId::TensorR } else { RuleId::TensorPR };
                    self.split(r, s, Side::Right, i, [a, b], depth, contr)
                }
                _ => None,
            };
            if found.is_some() {
                return found;
            }
        }
        for (i, x) in distinct(&s.left) {
            let found = match x {
                Prop::ParL(a, b) if lin => self.split(RuleId::ParL, s, Side::Left, i, [a, b], depth, contr),
                Prop::ParC(a, b) => {
                    let r = if lin { RuleId::ParL } else { RuleId::ParCL };
                    self.split(r, s, Side::Left, i, [a, b], depth, contr)
                }
                _ => None,
            };
            if found.is_some() {
                return found;
            }
        }
        // additive choices and modalities
        for (i, x) in distinct(&s.right) {
            let rest = without(s, Side::Right, i);
            let opts: Vec<(RuleId, Sequent)> = match x {
                Prop::Plus(a, b) if lin => vec![
                    (RuleId::PlusR1, plus(&rest, Side::Right, &[a])),
                    (RuleId::PlusR2, plus(&rest, Side::Right, &[b])),
                ],
                Prop::FBang(p) if lin && restricted(&rest) => {
                    vec![(RuleId::FBangR, plus(&rest, Side::Right, &[p]).with_kind(Judgment::Persistent))]
                }
                Prop::GWhy(a) if lin => vec![(RuleId::GWhyR, plus(&rest, Side::Right, &[a]))],
                Prop::GBang(a) if !lin && restricted(&rest) => {
                    vec![(RuleId::GBangR, plus(&rest, Side::Right, &[a]).with_kind(Judgment::Linear))]
                }
                _ => vec![],
            };
            for (rule, prem) in opts {
                if let Some(d) = self.prove(&prem, depth - 1, contr) {
                    return Some(node(rule, s, Side::Right, x, vec![d]));
                }
            }
        }
        for (i, x) in distinct(&s.left) {
            let rest = without(s, Side::Left, i);
            let opts: Vec<(RuleId, Sequent)> = match x {
                Prop::With(a, b) if lin => vec![
                    (RuleId::WithL1, plus(&rest, Side::Left, &[a])),
                    (RuleId::WithL2, plus(&rest, Side::Left, &[b])),
                ],
                Prop::FWhy(c) if lin && restricted(&rest) => {
                    vec![(RuleId::FWhyL, plus(&rest, Side::Left, &[c]).with_kind(Judgment::Persistent))]
                }
                Prop::GBang(a) if lin => vec![(RuleId::GBangL, plus(&rest, Side::Left, &[a]))],
                Prop::GWhy(a) if !lin && restricted(&rest) => {
                    vec![(RuleId::GWhyL, plus(&rest, Side::Left, &[a]).with_kind(Judgment::Linear))]
                }
                _ => vec![],
            };
            for (rule, prem) in opts {
                if let Some(d) = self.prove(&prem, depth - 1, contr) {
                    return Some(node(rule, s, Side::Left, x, vec![d]));
                }
            }
        }
        if contr > 0 {
            let (cl, cr) = if lin { (RuleId::ContrL, RuleId::ContrR) } else { (RuleId::PContrL, RuleId::PContrR) };
            for (_, x) in distinct(&s.left) {
                if x.is_producer() {
                    if let Some(d) = self.prove(&plus(s, Side::Left, &[x]), depth - 1, contr - 1) {
                        return Some(node(cl, s, Side::Left, x, vec![d]));
                    }
                }
            }
            for (_, x) in distinct(&s.right) {
                if x.is_consumer() {
                    if let Some(d) = self.prove(&plus(s, Side::Right, &[x]), depth - 1, contr - 1) {
                        return Some(node(cr, s, Side::Right, x, vec![d]));
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lpc_kernel::{check, Policy};
    use lpc_syntax::s;

    fn found(goal: &str) -> Derivation {
        let g = s(goal);
        let d = search(&g, SearchBudget::new(8, 2)).unwrap().unwrap_or_else(|| panic!("no proof of {goal}"));
        assert!(check(&d, Policy::CUT_FREE).is_ok(), "{}", check(&d, Policy::CUT_FREE));
        assert_eq!(d.conclusion, g);
        d
    }

    #[test]
    fn spec_examples() {
        assert_eq!(found("(|- () (1))").rule, RuleId::OneR);
        found("(|- ((tensor 1 1)) ((tensor 1 1)))");
        assert!(search(&s("(|- () (0))"), SearchBudget::new(8, 2)).unwrap().is_none());
    }

    #[test]
    fn exponentials() {
        found("(|- () ((F! (! T))))");
        found("(|- ((F! (! 1))) (1))");
        found("(|- ((F! (! 1))) ((tensor 1 1)))");
        found("(||- (1p) ((tensor 1p 1p)))");
        found("(|- () ((F? (? 1)) B))");
    }
}
