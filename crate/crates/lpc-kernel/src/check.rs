use std::fmt;

use lpc_syntax::{Context, Judgment, Prop, Sequent, Side};

use crate::derivation::{Derivation, Pos};
use crate::rule::RuleId::{self, *};

/// Why a node was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cause {
    Arity,
    JudgmentKind,
    ModeRestriction,
    PrincipalMismatch,
    ContextMismatch,
    CutForbidden,
}

impl Cause {
    pub fn tag(self) -> &'static str {
        match self {
            Cause::Arity => "arity",
            Cause::JudgmentKind => "judgment-kind",
            Cause::ModeRestriction => "mode-restriction",
            Cause::PrincipalMismatch => "principal-mismatch",
            Cause::ContextMismatch => "context-mismatch",
            Cause::CutForbidden => "cut-forbidden",
        }
    }
}

impl fmt::Display for Cause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Policy {
    pub allow_cut: bool,
}

impl Policy {
    pub const WITH_CUT: Policy = Policy { allow_cut: true };
    pub const CUT_FREE: Policy = Policy { allow_cut: false };
}

impl Default for Policy {
    fn default() -> Self {
        Policy::WITH_CUT
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub path: Vec<usize>,
    pub rule: RuleId,
    pub cause: Cause,
    pub message: String,
}

/// One record per node, in pre-order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeRecord {
    pub path: Vec<usize>,
    pub rule: RuleId,
    pub conclusion: String,
    pub verdict: Result<(), (Cause, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub nodes: Vec<NodeRecord>,
    pub failure: Option<Failure>,
}

impl CheckReport {
    pub fn is_ok(&self) -> bool {
        self.failure.is_none()
    }

    pub fn cause(&self) -> Option<Cause> {
        self.failure.as_ref().map(|f| f.cause)
    }

    /// Line-delimited machine-readable records.
    pub fn records(&self) -> String {
        let mut out = String::new();
        for n in &self.nodes {
            let path = n.path.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(".");
            let path = if path.is_empty() { "root".to_string() } else { path };
            match &n.verdict {
                Ok(()) => out.push_str(&format!("node\t{path}\t{}\tok\t{}\n", n.rule, n.conclusion)),
                Err((c, m)) => out.push_str(&format!("node\t{path}\t{}\terror:{c}\t{}\t{m}\n", n.rule, n.conclusion)),
            }
        }
        out
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => f.write_str("ok"),
            Some(fl) => {
                let path = fl.path.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(".");
                write!(
                    f,
                    "error({}) at {} [{}]: {}",
                    fl.cause,
                    if path.is_empty() { "root" } else { &path },
                    fl.rule,
                    fl.message
                )
            }
        }
    }
}

type NodeResult = Result<(), (Cause, String)>;

fn fail<T>(cause: Cause, msg: impl Into<String>) -> Result<T, (Cause, String)> {
    Err((cause, msg.into()))
}

/// Check every node; the report pinpoints the first failure in pre-order.
pub fn check(d: &Derivation, policy: Policy) -> CheckReport {
    let mut nodes = Vec::new();
    let mut failure = None;
    for (path, n) in d.walk() {
        let verdict = check_node(n, policy);
        if let (Err((cause, msg)), None) = (&verdict, &failure) {
            failure = Some(Failure { path: path.clone(), rule: n.rule, cause: *cause, message: msg.clone() });
        }
        nodes.push(NodeRecord { path, rule: n.rule, conclusion: n.conclusion.to_string(), verdict });
    }
    CheckReport { nodes, failure }
}

pub fn is_valid(d: &Derivation, policy: Policy) -> bool {
    d.walk().into_iter().all(|(_, n)| check_node(n, policy).is_ok())
}

/// Verdict for a single node, ignoring its premises' own validity.
pub fn check_node(d: &Derivation, policy: Policy) -> NodeResult {
    let r = d.rule;
    if d.premises.len() != r.arity() {
        return fail(Cause::Arity, format!("{} takes {} premise(s), got {}", r, r.arity(), d.premises.len()));
    }
    if d.conclusion.kind != r.conclusion_judgment() {
        return fail(Cause::JudgmentKind, format!("{} concludes a {:?} sequent", r, r.conclusion_judgment()));
    }
    for (i, (p, want)) in d.premises.iter().zip(r.premise_judgments()).enumerate() {
        if p.conclusion.kind != want {
            return fail(Cause::JudgmentKind, format!("premise {i} of {r} must be {want:?}"));
        }
    }
    if r.is_cut() && !policy.allow_cut {
        return fail(Cause::CutForbidden, "cut rules are disabled");
    }
    if d.conclusion.kind == Judgment::Persistent {
        if let Some(p) = d.conclusion.left.iter().chain(d.conclusion.right.iter()).find(|p| !p.is_persistent()) {
            return fail(Cause::ModeRestriction, format!("linear {p} in a persistent sequent"));
        }
    }
    if d.principal.len() != r.principal_count() {
        return fail(
            Cause::PrincipalMismatch,
            format!("{} records {} principal position(s), got {}", r, r.principal_count(), d.principal.len()),
        );
    }
    if r.is_cut() {
        check_cut(d)
    } else {
        for pos in &d.principal {
            if d.conclusion.side(pos.side).get(pos.index).is_none() {
                return fail(Cause::PrincipalMismatch, format!("position {pos} out of range"));
            }
        }
        check_logical(d)
    }
}

/// The conclusion with the occurrence at `pos` removed.
fn rest(s: &Sequent, pos: Pos) -> Sequent {
    let mut t = s.clone();
    let c = t.side_mut(pos.side);
    *c = c.without_index(pos.index);
    t
}

fn add(s: &Sequent, side: Side, ps: &[&Prop]) -> Sequent {
    let mut t = s.clone();
    for p in ps {
        let c = t.side_mut(side);
        *c = c.with((*p).clone());
    }
    t
}

fn expect_premise(d: &Derivation, i: usize, want: Sequent) -> NodeResult {
    let got = &d.premises[i].conclusion;
    if got.left == want.left && got.right == want.right {
        Ok(())
    } else {
        fail(Cause::ContextMismatch, format!("premise {i} should be {want}, found {got}"))
    }
}

fn expect_empty(s: &Sequent, what: &str) -> NodeResult {
    if s.left.is_empty() && s.right.is_empty() {
        Ok(())
    } else {
        fail(Cause::ContextMismatch, format!("{what} allows no side context, found {s}"))
    }
}

fn restricted(s: &Sequent) -> NodeResult {
    if let Some(p) = s.left.iter().find(|p| !p.is_producer()) {
        return fail(Cause::ModeRestriction, format!("{p} on the left is not a producer"));
    }
    if let Some(p) = s.right.iter().find(|p| !p.is_consumer()) {
        return fail(Cause::ModeRestriction, format!("{p} on the right is not a consumer"));
    }
    Ok(())
}

// Binary split rule: premise i must be rest_i plus `actives[i]` on `side`,
// and the rests must add up to the conclusion's rest.
fn expect_split(d: &Derivation, rest: &Sequent, side: Side, actives: [&Prop; 2]) -> NodeResult {
    let mut parts = Vec::new();
    for (i, a) in actives.iter().enumerate() {
        let s = &d.premises[i].conclusion;
        let Some(c) = s.side(side).remove_one(a) else {
            return fail(Cause::ContextMismatch, format!("premise {i} lacks {a} on the {side}"));
        };
        let mut t = s.clone();
        *t.side_mut(side) = c;
        parts.push(t);
    }
    let left = parts[0].left.sum(&parts[1].left);
    let right = parts[0].right.sum(&parts[1].right);
    if left == rest.left && right == rest.right {
        Ok(())
    } else {
        fail(Cause::ContextMismatch, format!("premises do not split the context of {}", d.conclusion))
    }
}

fn shape(ok: bool, what: &str, p: &Prop) -> NodeResult {
    if ok {
        Ok(())
    } else {
        fail(Cause::PrincipalMismatch, format!("expected {what}, principal formula is {p}"))
    }
}

fn check_logical(d: &Derivation) -> NodeResult {
    let c = &d.conclusion;
    let pos = d.principal[0];
    let x = c.side(pos.side).get(pos.index).expect("range checked");
    let side = pos.side;
    let want_side = |s: Side| -> NodeResult {
        if side == s {
            Ok(())
        } else {
            fail(Cause::PrincipalMismatch, format!("{} acts on the {s}", d.rule))
        }
    };
    let rs = rest(c, pos);
    match d.rule {
        Ax | AxP | AxC => {
            let q = d.principal[1];
            want_side(Side::Left)?;
            if q.side != Side::Right {
                return fail(Cause::PrincipalMismatch, "axiom needs one left and one right position");
            }
            let y = &c.right.as_slice()[q.index];
            if x != y {
                return fail(Cause::PrincipalMismatch, format!("axiom on {x} and {y}"));
            }
            match d.rule {
                AxP => shape(x.is_producer(), "a producer", x)?,
                AxC => shape(x.is_consumer(), "a consumer", x)?,
                _ => {}
            }
            expect_empty(&rest(&rs, q), "an axiom")
        }
        TopR => {
            want_side(Side::Right)?;
            shape(*x == Prop::Top, "T", x)
        }
        ZeroL => {
            want_side(Side::Left)?;
            shape(*x == Prop::Zero, "0", x)
        }
        WithL1 | WithL2 => {
            want_side(Side::Left)?;
            let Prop::With(a, b) = x else { return shape(false, "a &", x) };
            let pick = if d.rule == WithL1 { a } else { b };
            expect_premise(d, 0, add(&rs, Side::Left, &[pick]))
        }
        WithR => {
            want_side(Side::Right)?;
            let Prop::With(a, b) = x else { return shape(false, "a &", x) };
            expect_premise(d, 0, add(&rs, Side::Right, &[a]))?;
            expect_premise(d, 1, add(&rs, Side::Right, &[b]))
        }
        PlusR1 | PlusR2 => {
            want_side(Side::Right)?;
            let Prop::Plus(a, b) = x else { return shape(false, "a +", x) };
            let pick = if d.rule == PlusR1 { a } else { b };
            expect_premise(d, 0, add(&rs, Side::Right, &[pick]))
        }
        PlusL => {
            want_side(Side::Left)?;
            let Prop::Plus(a, b) = x else { return shape(false, "a +", x) };
            expect_premise(d, 0, add(&rs, Side::Left, &[a]))?;
            expect_premise(d, 1, add(&rs, Side::Left, &[b]))
        }
        TensorL | TensorPL => {
            want_side(Side::Left)?;
            let (a, b) = match (d.rule, x) {
                (TensorL, Prop::TensorL(a, b)) | (_, Prop::TensorP(a, b)) => (a, b),
                _ => return shape(false, "a tensor", x),
            };
            expect_premise(d, 0, add(&rs, Side::Left, &[a, b]))
        }
        TensorR | TensorPR => {
            want_side(Side::Right)?;
            let (a, b) = match (d.rule, x) {
                (TensorR, Prop::TensorL(a, b)) | (_, Prop::TensorP(a, b)) => (a, b),
                _ => return shape(false, "a tensor", x),
            };
            expect_split(d, &rs, Side::Right, [a, b])
        }
        OneL | OnePL => {
            want_side(Side::Left)?;
            let ok = *x == Prop::OneP || (d.rule == OneL && *x == Prop::OneL);
            shape(ok, "a unit of tensor", x)?;
            expect_premise(d, 0, rs)
        }
        OneR | OnePR => {
            want_side(Side::Right)?;
            let ok = *x == Prop::OneP || (d.rule == OneR && *x == Prop::OneL);
            shape(ok, "a unit of tensor", x)?;
            expect_empty(&rs, "a unit axiom")
        }
        ParL | ParCL => {
            want_side(Side::Left)?;
            let (a, b) = match (d.rule, x) {
                (ParL, Prop::ParL(a, b)) | (_, Prop::ParC(a, b)) => (a, b),
                _ => return shape(false, "a par", x),
            };
            expect_split(d, &rs, Side::Left, [a, b])
        }
        ParR | ParCR => {
            want_side(Side::Right)?;
            let (a, b) = match (d.rule, x) {
                (ParR, Prop::ParL(a, b)) | (_, Prop::ParC(a, b)) => (a, b),
                _ => return shape(false, "a par", x),
            };
            expect_premise(d, 0, add(&rs, Side::Right, &[a, b]))
        }
        BotL | BotCL => {
            want_side(Side::Left)?;
            let ok = *x == Prop::BotC || (d.rule == BotL && *x == Prop::BotL);
            shape(ok, "a unit of par", x)?;
            expect_empty(&rs, "a unit axiom")
        }
        BotR | BotCR => {
            want_side(Side::Right)?;
            let ok = *x == Prop::BotC || (d.rule == BotR && *x == Prop::BotL);
            shape(ok, "a unit of par", x)?;
            expect_premise(d, 0, rs)
        }
        FBangL => {
            want_side(Side::Left)?;
            let Prop::FBang(p) = x else { return shape(false, "F!", x) };
            expect_premise(d, 0, add(&rs, Side::Left, &[p]))
        }
        FBangR => {
            want_side(Side::Right)?;
            let Prop::FBang(p) = x else { return shape(false, "F!", x) };
            restricted(&rs)?;
            expect_premise(d, 0, add(&rs, Side::Right, &[p]))
        }
        FWhyL => {
            want_side(Side::Left)?;
            let Prop::FWhy(q) = x else { return shape(false, "F?", x) };
            restricted(&rs)?;
            expect_premise(d, 0, add(&rs, Side::Left, &[q]))
        }
        FWhyR => {
            want_side(Side::Right)?;
            let Prop::FWhy(q) = x else { return shape(false, "F?", x) };
            expect_premise(d, 0, add(&rs, Side::Right, &[q]))
        }
        GBangL => {
            want_side(Side::Left)?;
            let Prop::GBang(a) = x else { return shape(false, "!", x) };
            expect_premise(d, 0, add(&rs, Side::Left, &[a]))
        }
        GBangR => {
            want_side(Side::Right)?;
            let Prop::GBang(a) = x else { return shape(false, "!", x) };
            restricted(&rs)?;
            expect_premise(d, 0, add(&rs, Side::Right, &[a]))
        }
        GWhyL => {
            want_side(Side::Left)?;
            let Prop::GWhy(a) = x else { return shape(false, "?", x) };
            restricted(&rs)?;
            expect_premise(d, 0, add(&rs, Side::Left, &[a]))
        }
        GWhyR => {
            want_side(Side::Right)?;
            let Prop::GWhy(a) = x else { return shape(false, "?", x) };
            expect_premise(d, 0, add(&rs, Side::Right, &[a]))
        }
        WeakL | WeakR | PWeakL | PWeakR | ContrL | ContrR | PContrL | PContrR => {
            let want = if matches!(d.rule, WeakL | PWeakL | ContrL | PContrL) { Side::Left } else { Side::Right };
            want_side(want)?;
            let ok = match side {
                Side::Left => x.is_producer(),
                Side::Right => x.is_consumer(),
            };
            if !ok {
                let role = if side == Side::Left { "producer" } else { "consumer" };
                return fail(Cause::ModeRestriction, format!("{x} on the {side} is not a {role}"));
            }
            if d.rule.name().starts_with("weak") {
                expect_premise(d, 0, rs)
            } else {
                expect_premise(d, 0, add(c, side, &[x]))
            }
        }
        CutL | CutP | CutPP | CutC | CutCP => unreachable!("cuts are checked separately"),
    }
}

fn check_cut(d: &Derivation) -> NodeResult {
    let (p0, p1) = (d.principal[0], d.principal[1]);
    if p0.side != Side::Right || p1.side != Side::Left {
        return fail(Cause::PrincipalMismatch, "cut positions are (right i) in premise 0 and (left j) in premise 1");
    }
    let s1 = &d.premises[0].conclusion;
    let s2 = &d.premises[1].conclusion;
    let (Some(x), Some(y)) = (s1.right.get(p0.index), s2.left.get(p1.index)) else {
        return fail(Cause::PrincipalMismatch, "cut position out of range");
    };
    if x != y {
        return fail(Cause::PrincipalMismatch, format!("cut on {x} against {y}"));
    }
    let ok = match d.rule {
        CutL => x.mode() == lpc_syntax::Mode::L,
        CutP | CutPP => x.is_producer(),
        _ => x.is_consumer(),
    };
    shape(ok, "a cut formula of the rule's mode", x)?;
    let r1 = rest(s1, p0);
    let r2 = rest(s2, p1);
    match d.rule {
        CutP | CutPP => restricted(&r1)?,
        CutC | CutCP => restricted(&r2)?,
        _ => {}
    }
    let left: Context = r1.left.sum(&r2.left);
    let right: Context = r1.right.sum(&r2.right);
    if left == d.conclusion.left && right == d.conclusion.right {
        Ok(())
    } else {
        fail(Cause::ContextMismatch, format!("cut premises do not combine to {}", d.conclusion))
    }
}
