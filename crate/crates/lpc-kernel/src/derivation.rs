use std::fmt;

use lpc_syntax::{Prop, Sequent, Side};

use crate::rule::RuleId;

/// An occurrence in a canonical (sorted) context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pos {
    pub side: Side,
    pub index: usize,
}

impl Pos {
    pub fn left(index: usize) -> Pos {
        Pos { side: Side::Left, index }
    }

    pub fn right(index: usize) -> Pos {
        Pos { side: Side::Right, index }
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.side, self.index)
    }
}

/// An explicit rule-application tree.
///
/// For cut nodes the two principal positions point into the premises'
/// conclusions (right of the first, left of the second); for every other
/// rule they point into this node's conclusion.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Derivation {
    pub rule: RuleId,
    pub conclusion: Sequent,
    pub principal: Vec<Pos>,
    pub premises: Vec<Derivation>,
}

fn locate(s: &Sequent, side: Side, p: &Prop) -> Pos {
    let index = s
        .side(side)
        .index_of(p)
        .unwrap_or_else(|| panic!("{p} not on the {side} of {s}"));
    Pos { side, index }
}

impl Derivation {
    pub fn new(rule: RuleId, conclusion: Sequent, principal: Vec<Pos>, premises: Vec<Derivation>) -> Self {
        Derivation { rule, conclusion, principal, premises }
    }

    /// Build a node, locating the principal formulas by value.
    ///
    /// Panics if a formula is absent: this is for constructing derivations in
    /// code, where absence is a programming error.
    pub fn infer(rule: RuleId, conclusion: Sequent, principal: &[(Side, &Prop)], premises: Vec<Derivation>) -> Self {
        let principal = if rule.is_cut() {
            let (_, x) = principal[0];
            vec![
                locate(&premises[0].conclusion, Side::Right, x),
                locate(&premises[1].conclusion, Side::Left, x),
            ]
        } else {
            principal.iter().map(|(side, p)| locate(&conclusion, *side, p)).collect()
        };
        Derivation { rule, conclusion, principal, premises }
    }

    /// Longest root-to-leaf path, counting nodes.
    pub fn depth(&self) -> usize {
        1 + self.premises.iter().map(Derivation::depth).max().unwrap_or(0)
    }

    pub fn node_count(&self) -> usize {
        1 + self.premises.iter().map(Derivation::node_count).sum::<usize>()
    }

    pub fn is_cut_free(&self) -> bool {
        !self.rule.is_cut() && self.premises.iter().all(Derivation::is_cut_free)
    }

    /// Pre-order walk with paths (premise indices from the root).
    pub fn walk(&self) -> Vec<(Vec<usize>, &Derivation)> {
        let mut out = Vec::new();
        let mut stack = vec![(Vec::new(), self)];
        while let Some((path, d)) = stack.pop() {
            for (i, p) in d.premises.iter().enumerate().rev() {
                let mut q = path.clone();
                q.push(i);
                stack.push((q, p));
            }
            out.push((path, d));
        }
        out
    }

    pub fn at(&self, path: &[usize]) -> Option<&Derivation> {
        path.iter().try_fold(self, |d, &i| d.premises.get(i))
    }

    pub fn rules_used(&self) -> std::collections::BTreeSet<RuleId> {
        self.walk().into_iter().map(|(_, d)| d.rule).collect()
    }

    /// The principal formula at the i-th recorded position, if in range.
    pub fn principal_prop(&self, i: usize) -> Option<&Prop> {
        let pos = self.principal.get(i)?;
        let s = if self.rule.is_cut() { &self.premises.get(i)?.conclusion } else { &self.conclusion };
        s.side(pos.side).get(pos.index)
    }
}
