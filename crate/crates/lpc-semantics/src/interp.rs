//! Interpretation of propositions, contexts and cut-free derivations.
//!
//! A linear sequent `Γ ⊢ Δ` denotes an L-morphism from the left `⊗`-fold of
//! `Γ` to the left `⅋`-fold of `Δ`. A persistent sequent denotes a
//! P-morphism from `⟦Γ'⟧ ⊗ ⟦Δ'⟧` to its displaced formula, where `Γ'`, `Δ'`
//! are the remaining formulas. Consumers are interpreted in P directly
//! (`⊥ ↦ 1`, `⅋ ↦ ⊗`, `?A ↦ G!(A^⊥)`), which is `(⟦C⟧_C)_*` up to the
//! model's `η^*_*`.

use std::cell::RefCell;
use std::collections::HashMap;

use lpc_cutelim::eliminate_all;
use lpc_kernel::{check, displaced, Derivation, Policy, RuleId};
use lpc_syntax::{Context, Judgment, Mode, Prop, Sequent, Side};

use crate::error::SemError;
use crate::model::{Cat, Mono, Model};
use crate::obj::{Mor, Obj};
use crate::smc::{shuffle, Mon, Tree};
use crate::toolkit::{counit, diag, Lin};

/// How a context is folded into one object.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    LeftTensor,
    RightPar,
    PTensor,
    CCotensor,
}

type Items = Vec<(usize, Prop)>;

fn items(ctx: &Context, base: usize) -> Items {
    ctx.iter().cloned().enumerate().map(|(i, p)| (base + i, p)).collect()
}

/// Tag the formulas of `ctx` with tags drawn from `pool`. Among equal
/// formulas a rule's own subformulas win, in the order they were added.
fn take(ctx: &Context, pool: &mut Items) -> Items {
    ctx.iter()
        .map(|p| {
            let k = pool
                .iter()
                .enumerate()
                .filter(|(_, (_, q))| q == p)
                .min_by_key(|(_, (t, _))| (*t < A, *t))
                .map(|(k, _)| k)
                .expect("premise context drawn from its conclusion");
            pool.remove(k)
        })
        .collect()
}

/// `take` for one premise of a two-premise rule: the other premise's fresh
/// subformula is set aside.
fn take_own(ctx: &Context, pool: &mut Items, tag: usize) -> Items {
    let other = pool.iter().position(|(t, _)| *t >= A && *t != tag).map(|k| pool.remove(k));
    let out = take(ctx, pool);
    pool.extend(other);
    out
}

fn without(xs: &Items, i: usize) -> Items {
    let mut out = xs.clone();
    out.remove(i);
    out
}

fn with(xs: &Items, extra: &[(usize, &Prop)]) -> Items {
    let mut out = xs.clone();
    out.extend(extra.iter().map(|(t, p)| (*t, (*p).clone())));
    out
}

const A: usize = 1 << 20;
const B: usize = A + 1;
const RIGHT: usize = 1 << 10;

/// Non-displaced formulas of a persistent sequent, and the displaced one.
fn split_persistent(s: &Sequent) -> Result<(Context, Context, Prop), SemError> {
    let pos = displaced(s)?;
    let [p] = pos.as_slice() else {
        return Err(SemError::Check(format!("{s} has {} displaced formulas", pos.len())));
    };
    let x = s.side(p.side).get(p.index).expect("position in range").clone();
    let (mut l, mut r) = (s.left.clone(), s.right.clone());
    match p.side {
        Side::Left => l = l.without_index(p.index),
        Side::Right => r = r.without_index(p.index),
    }
    Ok((l, r, x))
}

/// Interprets into one model, caching object denotations.
pub struct Interpreter<'a> {
    m: &'a dyn Model,
    lin: Lin<'a>,
    pt: Mon<'a>,
    cache: RefCell<HashMap<(Prop, Cat), Obj>>,
}

impl<'a> Interpreter<'a> {
    pub fn new(m: &'a dyn Model) -> Self {
        Interpreter { m, lin: Lin::new(m), pt: Mon::new(m, Mono::PTensor), cache: RefCell::new(HashMap::new()) }
    }

    pub fn obj(&self, x: &Prop, c: Cat) -> Result<Obj, SemError> {
        if let Some(o) = self.cache.borrow().get(&(x.clone(), c)) {
            return Ok(o.clone());
        }
        let o = self.compute(x, c)?;
        self.cache.borrow_mut().insert((x.clone(), c), o.clone());
        Ok(o)
    }

    fn compute(&self, x: &Prop, c: Cat) -> Result<Obj, SemError> {
        use Prop::*;
        let (lin, m) = (&self.lin, self.m);
        match c {
            Cat::L => Ok(match x {
                _ if x.is_producer() => m.fbang(&self.obj(x, Cat::P)?),
                _ if x.is_consumer() => lin.neg(&m.fbang(&self.obj(x, Cat::P)?)),
                Top | Zero => m.zero(),
                OneL => lin.one(),
                BotL => lin.bot(),
                With(a, b) | Plus(a, b) => m.biprod(&self.obj(a, c)?, &self.obj(b, c)?),
                TensorL(a, b) => lin.t.obj(&self.obj(a, c)?, &self.obj(b, c)?),
                ParL(a, b) => lin.p.obj(&self.obj(a, c)?, &self.obj(b, c)?),
                FBang(p) => m.fbang(&self.obj(p, Cat::P)?),
                FWhy(q) => lin.neg(&m.fbang(&self.obj(q, Cat::P)?)),
                _ => unreachable!("persistent connectives are producers or consumers"),
            }),
            Cat::P => match x {
                OneP | BotC => Ok(self.pt.unit()),
                TensorP(a, b) | ParC(a, b) => Ok(self.pt.obj(&self.obj(a, c)?, &self.obj(b, c)?)),
                GBang(a) => m.gbang(&self.obj(a, Cat::L)?),
                GWhy(a) => m.gbang(&lin.neg(&self.obj(a, Cat::L)?)),
                _ => Err(SemError::Mode(format!("{x} is linear and has no meaning in P"))),
            },
            Cat::C if x.is_consumer() => Ok(m.star(&self.obj(x, Cat::P)?)),
            Cat::C => Err(SemError::Mode(format!("{x} is not a consumer and has no meaning in C"))),
        }
    }

    fn objs(&self, ps: &[Prop], c: Cat) -> Result<Vec<Obj>, SemError> {
        ps.iter().map(|p| self.obj(p, c)).collect()
    }

    pub fn ctx(&self, g: &Context, role: Role) -> Result<Obj, SemError> {
        let ps = g.as_slice();
        match role {
            Role::LeftTensor => Ok(self.lin.t.fold(&self.objs(ps, Cat::L)?)),
            Role::RightPar => Ok(self.lin.p.fold(&self.objs(ps, Cat::L)?)),
            Role::PTensor if g.all_producer() => Ok(self.pt.fold(&self.objs(ps, Cat::P)?)),
            Role::CCotensor if g.all_consumer() => Ok(self.m.star(&self.pt.fold(&self.objs(ps, Cat::P)?))),
            _ => Err(SemError::Mode(format!("context {g} cannot be folded as {role:?}"))),
        }
    }

    /// `⟦Γ⟧⊗_L -> F!⟦Γ⟧_P` for a context of producers.
    pub fn pi(&self, g: &Context) -> Result<Mor, SemError> {
        if !g.all_producer() {
            return Err(SemError::Mode(format!("{g} is not all producers")));
        }
        let ps = self.objs(g.as_slice(), Cat::P)?;
        let Some((first, rest)) = ps.split_first() else { return Ok(self.m.fbang_m1()) };
        let mut acc = self.lin.id(&self.m.fbang(first));
        let mut folded = first.clone();
        for p in rest {
            acc = self.lin.t.left(&acc, &self.m.fbang(p)).then(&self.m.fbang_m(&folded, p));
            folded = self.pt.obj(&folded, p);
        }
        Ok(acc)
    }

    /// `(⟦Δ⟧⅋_L)^⊥ -> F!⟦Δ⟧_P` for a context of consumers.
    pub fn tau(&self, d: &Context) -> Result<Mor, SemError> {
        if !d.all_consumer() {
            return Err(SemError::Mode(format!("{d} is not all consumers")));
        }
        let lin = &self.lin;
        let ps = self.objs(d.as_slice(), Cat::P)?;
        let ls = self.objs(d.as_slice(), Cat::L)?;
        if ps.is_empty() {
            return Ok(lin.neg_mor(&lin.negunit_to_bot()).then(&self.m.fbang_m1()));
        }
        let mut acc = lin.id(&self.m.fbang(&ps[0]));
        let (mut fl, mut fp) = (ls[0].clone(), ps[0].clone());
        for (cl, cp) in ls.iter().zip(&ps).skip(1) {
            acc = lin
                .dm_par(&fl, cl)
                .then(&lin.t.left(&acc, &lin.neg(cl)))
                .then(&self.m.fbang_m(&fp, cp));
            fl = lin.p.obj(&fl, cl);
            fp = self.pt.obj(&fp, cp);
        }
        Ok(acc)
    }

    /// Domain and codomain a derivation of `s` must have.
    pub fn sequent_type(&self, s: &Sequent) -> Result<(Obj, Obj), SemError> {
        match s.kind {
            Judgment::Linear => Ok((self.ctx(&s.left, Role::LeftTensor)?, self.ctx(&s.right, Role::RightPar)?)),
            Judgment::Persistent => {
                let (l, r, x) = split_persistent(s)?;
                let dom = self.pt.obj(&self.pfold(&l)?, &self.pfold(&r)?);
                Ok((dom, self.obj(&x, Cat::P)?))
            }
        }
    }

    fn pfold(&self, g: &Context) -> Result<Obj, SemError> {
        Ok(self.pt.fold(&self.objs(g.as_slice(), Cat::P)?))
    }

    /// Interpret a checked derivation, eliminating cuts first.
    pub fn derivation(&self, d: &Derivation) -> Result<Mor, SemError> {
        let report = check(d, Policy::WITH_CUT);
        if let Some(f) = report.failure {
            return Err(SemError::Check(f.message));
        }
        if d.is_cut_free() {
            self.go(d)
        } else {
            self.go(&eliminate_all(d)?)
        }
    }

    fn tree(&self, xs: &Items, c: Cat) -> Result<Tree, SemError> {
        Ok(Tree::fold(xs.iter().map(|(t, p)| self.obj(p, c).map(|o| (*t, o))).collect::<Result<Vec<_>, _>>()?))
    }

    fn leaf(&self, t: usize, p: &Prop, c: Cat) -> Result<Tree, SemError> {
        Ok(Tree::Leaf(t, self.obj(p, c)?))
    }

    fn go(&self, d: &Derivation) -> Result<Mor, SemError> {
        match d.conclusion.kind {
            Judgment::Linear => self.linear(d),
            Judgment::Persistent => self.persistent(d),
        }
    }

    fn linear(&self, d: &Derivation) -> Result<Mor, SemError> {
        use RuleId::*;
        let (lin, m) = (&self.lin, self.m);
        let (t, pa) = (&lin.t, &lin.p);
        let l = Cat::L;
        let s = &d.conclusion;
        let gl = items(&s.left, 0);
        let dl = items(&s.right, RIGHT);
        let g = self.tree(&gl, l)?;
        let dt = self.tree(&dl, l)?;
        let sh_t = |a: &Tree, b: &Tree| shuffle(t, a, b);
        let sh_p = |a: &Tree, b: &Tree| shuffle(pa, a, b);
        let pos = d.principal[0];
        let (xid, x) = match pos.side {
            Side::Left => gl[pos.index].clone(),
            Side::Right => dl[pos.index].clone(),
        };
        let xo = self.obj(&x, l)?;
        let xleaf = Tree::Leaf(xid, xo.clone());
        // Rest of the principal formula's side.
        let (gr, dr) = match pos.side {
            Side::Left => (without(&gl, pos.index), dl.clone()),
            Side::Right => (gl.clone(), without(&dl, pos.index)),
        };
        let (grt, drt) = (self.tree(&gr, l)?, self.tree(&dr, l)?);
        let (gro, dro) = (grt.obj(t), drt.obj(pa));
        // `Γ -> Γ' ⊗ x` and `Δ' ⅋ x -> Δ`.
        let pull = || sh_t(&g, &Tree::node(grt.clone(), xleaf.clone()));
        let push = || sh_p(&Tree::node(drt.clone(), xleaf.clone()), &dt);
        let premise = |k: usize, lpool: &Items, rpool: &Items| -> Result<(Mor, Tree, Tree), SemError> {
            let p = &d.premises[k];
            let (mut lp, mut rp) = (lpool.clone(), rpool.clone());
            let pl = take(&p.conclusion.left, &mut lp);
            let pr = take(&p.conclusion.right, &mut rp);
            Ok((self.go(p)?, self.tree(&pl, l)?, self.tree(&pr, l)?))
        };
        let kids = x.children();
        let sub = |i: usize| -> Result<Obj, SemError> { self.obj(kids[i], l) };
        let leaf_a = || self.leaf(A, kids[0], l);
        let leaf_b = || self.leaf(B, kids[1], l);
        let out = match d.rule {
            Ax => lin.id(&xo),
            TopR => {
                let nd = lin.neg(&dro);
                let h = lin.to_zero(&t.obj(&g.obj(t), &nd));
                lin.curry(&h, &g.obj(t), &nd).then(&sh_p(&Tree::node(xleaf.clone(), drt.clone()), &dt))
            }
            ZeroL => {
                let ng = lin.neg(&gro);
                let h = lin.from_zero(&pa.obj(&dt.obj(pa), &ng));
                pull().then(&t.sym(&gro, &xo)).then(&lin.uncurry(&h, &dt.obj(pa), &ng))
            }
            WithL1 | WithL2 => {
                let second = d.rule == WithL2;
                let (f, pl, _) = premise(0, &with(&gr, &[(A, kids[usize::from(second)])]), &dl)?;
                pull()
                    .then(&t.right(&gro, &lin.proj(&sub(0)?, &sub(1)?, second)))
                    .then(&sh_t(&Tree::node(grt.clone(), Tree::Leaf(A, sub(usize::from(second))?)), &pl))
                    .then(&f)
            }
            WithR => {
                let nd = lin.neg(&dro);
                let mut halves = Vec::new();
                for (k, &kid) in kids.iter().enumerate() {
                    let (f, _, pr) = premise(k, &gl, &with(&dr, &[(A, kid)]))?;
                    let a = sub(k)?;
                    let f = f
                        .then(&sh_p(&pr, &Tree::node(drt.clone(), Tree::Leaf(A, a.clone()))))
                        .then(&pa.sym(&dro, &a));
                    halves.push(lin.uncurry(&f, &a, &dro));
                }
                let h = lin.pair(&halves[0], &halves[1]);
                lin.curry(&h, &g.obj(t), &nd).then(&sh_p(&Tree::node(xleaf.clone(), drt.clone()), &dt))
            }
            PlusR1 | PlusR2 => {
                let second = d.rule == PlusR2;
                let k = usize::from(second);
                let (f, _, pr) = premise(0, &gl, &with(&dr, &[(A, kids[k])]))?;
                f.then(&sh_p(&pr, &Tree::node(drt.clone(), Tree::Leaf(A, sub(k)?))))
                    .then(&pa.right(&dro, &lin.inj(&sub(0)?, &sub(1)?, second)))
                    .then(&push())
            }
            PlusL => {
                let dto = dt.obj(pa);
                let mut halves = Vec::new();
                for (k, &kid) in kids.iter().enumerate() {
                    let (f, pl, _) = premise(k, &with(&gr, &[(A, kid)]), &dl)?;
                    let a = sub(k)?;
                    let f = t.sym(&a, &gro).then(&sh_t(&Tree::node(grt.clone(), Tree::Leaf(A, a.clone())), &pl)).then(&f);
                    halves.push(lin.curry(&f, &a, &gro));
                }
                let h = lin.copair(&halves[0], &halves[1]);
                let ng = lin.neg(&gro);
                pull().then(&t.sym(&gro, &xo)).then(&lin.uncurry(&h, &dto, &ng))
            }
            TensorL => {
                let split = self.split_tensor(&x)?;
                let (f, pl, _) = premise(0, &with(&gr, &[(A, kids[0]), (B, kids[1])]), &dl)?;
                pull()
                    .then(&t.right(&gro, &split))
                    .then(&sh_t(&Tree::node(grt.clone(), Tree::node(leaf_a()?, leaf_b()?)), &pl))
                    .then(&f)
            }
            TensorR => {
                let merge = lin.inverse(&self.split_tensor(&x)?);
                let mut lpool = gl.clone();
                let mut rpool = with(&dr, &[(A, kids[0]), (B, kids[1])]);
                let mut parts = Vec::new();
                for (k, tag) in [(0, A), (1, B)] {
                    let p = &d.premises[k];
                    let pl = take(&p.conclusion.left, &mut lpool);
                    let pr = take_own(&p.conclusion.right, &mut rpool, tag);
                    let rest = pr.iter().filter(|(t, _)| *t != tag).cloned().collect::<Items>();
                    let (plt, prt, rt) = (self.tree(&pl, l)?, self.tree(&pr, l)?, self.tree(&rest, l)?);
                    let f = self.go(p)?.then(&sh_p(&prt, &Tree::node(rt.clone(), Tree::Leaf(tag, sub(k)?))));
                    parts.push((f, plt, rt));
                }
                let (a, b) = (sub(0)?, sub(1)?);
                let (d0, d1) = (parts[0].2.obj(pa), parts[1].2.obj(pa));
                let inner = t
                    .right(&a, &pa.sym(&d1, &b))
                    .then(&m.delta(&a, &b, &d1))
                    .then(&pa.left(&merge, &d1));
                sh_t(&g, &Tree::node(parts[0].1.clone(), parts[1].1.clone()))
                    .then(&t.mor(&parts[0].0, &parts[1].0))
                    .then(&lin.delta_r(&d0, &a, &pa.obj(&d1, &b)))
                    .then(&pa.right(&d0, &inner))
                    .then(&sh_p(&Tree::node(parts[0].2.clone(), Tree::node(xleaf.clone(), parts[1].2.clone())), &dt))
            }
            OneL => {
                let u = if x == Prop::OneL { lin.id(&xo) } else { lin.inverse(&m.fbang_m1()) };
                let (f, pl, _) = premise(0, &gr, &dl)?;
                pull().then(&t.right(&gro, &u)).then(&t.runit(&gro)).then(&sh_t(&grt, &pl)).then(&f)
            }
            OneR => {
                if x == Prop::OneL {
                    lin.id(&xo)
                } else {
                    m.fbang_m1()
                }
            }
            ParL => {
                let split = self.split_par(&x)?;
                let (a, b) = (sub(0)?, sub(1)?);
                let lpool0 = with(&gr, &[(A, kids[0]), (B, kids[1])]);
                let mut lpool = lpool0.clone();
                let mut rpool = dl.clone();
                let mut parts = Vec::new();
                for (k, tag) in [(0, A), (1, B)] {
                    let p = &d.premises[k];
                    let pl = take_own(&p.conclusion.left, &mut lpool, tag);
                    let pr = take(&p.conclusion.right, &mut rpool);
                    let rest = pl.iter().filter(|(t, _)| *t != tag).cloned().collect::<Items>();
                    let (plt, prt, rt) = (self.tree(&pl, l)?, self.tree(&pr, l)?, self.tree(&rest, l)?);
                    let f = sh_t(&Tree::node(Tree::Leaf(tag, sub(k)?), rt.clone()), &plt).then(&self.go(p)?);
                    parts.push((f, rt, prt));
                }
                let (g0, g1) = (parts[0].1.obj(t), parts[1].1.obj(t));
                let step = t
                    .left(&pa.sym(&a, &b), &g0)
                    .then(&lin.delta_r(&b, &a, &g0))
                    .then(&pa.sym(&b, &t.obj(&a, &g0)));
                sh_t(&g, &Tree::node(Tree::node(xleaf.clone(), parts[0].1.clone()), parts[1].1.clone()))
                    .then(&t.left(&t.left(&split, &g0), &g1))
                    .then(&t.left(&step, &g1))
                    .then(&lin.delta_r(&t.obj(&a, &g0), &b, &g1))
                    .then(&pa.mor(&parts[0].0, &parts[1].0))
                    .then(&sh_p(&Tree::node(parts[0].2.clone(), parts[1].2.clone()), &dt))
            }
            ParR => {
                let join = lin.inverse(&self.split_par(&x)?);
                let (f, _, pr) = premise(0, &gl, &with(&dr, &[(A, kids[0]), (B, kids[1])]))?;
                f.then(&sh_p(&pr, &Tree::node(drt.clone(), Tree::node(leaf_a()?, leaf_b()?))))
                    .then(&pa.right(&dro, &join))
                    .then(&push())
            }
            BotL => self.bot_left(&x, &xo),
            BotR => {
                let u = lin.inverse(&self.bot_left(&x, &xo));
                let (f, _, pr) = premise(0, &gl, &dr)?;
                f.then(&sh_p(&pr, &drt)).then(&pa.runit_inv(&dro)).then(&pa.right(&dro, &u)).then(&push())
            }
            FBangL | GBangL => {
                let (f, pl, _) = premise(0, &with(&gr, &[(A, kids[0])]), &dl)?;
                let a = sub(0)?;
                let u = if d.rule == GBangL { m.eps(&a)? } else { lin.id(&a) };
                pull()
                    .then(&t.right(&gro, &u))
                    .then(&sh_t(&Tree::node(grt.clone(), Tree::Leaf(A, a)), &pl))
                    .then(&f)
            }
            FWhyR | GWhyR => {
                let (f, _, pr) = premise(0, &gl, &with(&dr, &[(A, kids[0])]))?;
                let a = sub(0)?;
                let u = if d.rule == GWhyR { lin.neg_mor(&m.eps(&lin.neg(&a))?) } else { lin.id(&a) };
                f.then(&sh_p(&pr, &Tree::node(drt.clone(), Tree::Leaf(A, a.clone()))))
                    .then(&pa.right(&dro, &u))
                    .then(&push())
            }
            FBangR => {
                let h = self.promote(&d.premises[0], &s.left, &s.without_pos(pos).right)?;
                let nd = lin.neg(&dro);
                lin.curry(&h, &g.obj(t), &nd).then(&sh_p(&Tree::node(xleaf.clone(), drt.clone()), &dt))
            }
            FWhyL => {
                let h = self.promote(&d.premises[0], &s.without_pos(pos).left, &s.right)?;
                let dto = dt.obj(pa);
                let fc = h.cod.clone();
                let k = lin.curry(&h, &gro, &lin.neg(&dto)).then(&pa.sym(&fc, &dto));
                pull().then(&lin.uncurry(&k, &dto, &fc))
            }
            WeakL => {
                let w = self.erase(&x)?;
                let (f, pl, _) = premise(0, &gr, &dl)?;
                pull().then(&t.right(&gro, &w)).then(&t.runit(&gro)).then(&sh_t(&grt, &pl)).then(&f)
            }
            WeakR => {
                let w = lin.inverse(&lin.negunit_to_bot()).then(&lin.neg_mor(&self.erase(&x)?));
                let (f, _, pr) = premise(0, &gl, &dr)?;
                f.then(&sh_p(&pr, &drt)).then(&pa.runit_inv(&dro)).then(&pa.right(&dro, &w)).then(&push())
            }
            ContrL => {
                let c = self.duplicate(&x)?;
                let (f, pl, _) = premise(0, &with(&gr, &[(A, &x), (B, &x)]), &dl)?;
                let two = Tree::node(Tree::Leaf(A, xo.clone()), Tree::Leaf(B, xo.clone()));
                pull().then(&t.right(&gro, &c)).then(&sh_t(&Tree::node(grt.clone(), two), &pl)).then(&f)
            }
            ContrR => {
                let fx = m.fbang(&self.obj(&x, Cat::P)?);
                let merge = lin.inverse(&lin.dm_tensor(&fx, &fx)).then(&lin.neg_mor(&self.duplicate(&x)?));
                let (f, _, pr) = premise(0, &gl, &with(&dr, &[(A, &x), (B, &x)]))?;
                let two = Tree::node(Tree::Leaf(A, xo.clone()), Tree::Leaf(B, xo.clone()));
                f.then(&sh_p(&pr, &Tree::node(drt.clone(), two))).then(&pa.right(&dro, &merge)).then(&push())
            }
            r => return Err(SemError::Check(format!("{r} does not conclude a cut-free linear sequent"))),
        };
        Ok(out)
    }

    /// `⟦a ⊗ b⟧ -> ⟦a⟧ ⊗ ⟦b⟧` in L.
    fn split_tensor(&self, x: &Prop) -> Result<Mor, SemError> {
        match x {
            Prop::TensorL(..) => Ok(self.lin.id(&self.obj(x, Cat::L)?)),
            Prop::TensorP(a, b) => {
                let (pa, pb) = (self.obj(a, Cat::P)?, self.obj(b, Cat::P)?);
                Ok(self.lin.inverse(&self.m.fbang_m(&pa, &pb)))
            }
            _ => Err(SemError::Check(format!("{x} is not a tensor"))),
        }
    }

    /// `⟦a ⅋ b⟧ -> ⟦a⟧ ⅋ ⟦b⟧` in L.
    fn split_par(&self, x: &Prop) -> Result<Mor, SemError> {
        let lin = &self.lin;
        match x {
            Prop::ParL(..) => Ok(lin.id(&self.obj(x, Cat::L)?)),
            Prop::ParC(a, b) => {
                let (pa, pb) = (self.obj(a, Cat::P)?, self.obj(b, Cat::P)?);
                let (fa, fb) = (self.m.fbang(&pa), self.m.fbang(&pb));
                Ok(lin.neg_mor(&self.m.fbang_m(&pa, &pb)).then(&lin.dm_tensor(&fa, &fb)))
            }
            _ => Err(SemError::Check(format!("{x} is not a par"))),
        }
    }

    /// `⟦x⟧ -> ⊥` for a bottom.
    fn bot_left(&self, x: &Prop, xo: &Obj) -> Mor {
        if *x == Prop::BotL {
            self.lin.id(xo)
        } else {
            self.lin.neg_mor(&self.m.fbang_m1()).then(&self.lin.negunit_to_bot())
        }
    }

    /// `F!⟦x⟧_P -> 1` from the counit.
    fn erase(&self, x: &Prop) -> Result<Mor, SemError> {
        let p = self.obj(x, Cat::P)?;
        Ok(self.m.fbang_mor(&counit(self.m, &p)).then(&self.lin.inverse(&self.m.fbang_m1())))
    }

    /// `F!⟦x⟧_P -> F!⟦x⟧_P ⊗ F!⟦x⟧_P` from the comultiplication.
    fn duplicate(&self, x: &Prop) -> Result<Mor, SemError> {
        let p = self.obj(x, Cat::P)?;
        Ok(self.m.fbang_mor(&diag(self.m, &p)).then(&self.lin.inverse(&self.m.fbang_m(&p, &p))))
    }

    /// `⟦Γ⟧⊗ ⊗ (⟦Δ⟧⅋)^⊥ -> F!⟦X⟧_P` from a persistent premise over `Γ`, `Δ`.
    fn promote(&self, p: &Derivation, g: &Context, dl: &Context) -> Result<Mor, SemError> {
        let (pl, pr, _) = split_persistent(&p.conclusion)?;
        let body = self.go(p)?;
        let (gp, dp) = (self.pfold(g)?, self.pfold(dl)?);
        let want = self.pt.obj(&gp, &dp);
        let fit = shuffle(
            &self.pt,
            &Tree::node(self.tree(&items(g, 0), Cat::P)?, self.tree(&items(dl, RIGHT), Cat::P)?),
            &Tree::node(self.tree(&items(&pl, 0), Cat::P)?, self.tree(&items(&pr, RIGHT), Cat::P)?),
        );
        debug_assert_eq!(fit.dom, want);
        Ok(self
            .lin
            .t
            .mor(&self.pi(g)?, &self.tau(dl)?)
            .then(&self.m.fbang_m(&gp, &dp))
            .then(&self.m.fbang_mor(&fit.then(&body))))
    }

    /// `⟦Γ⟧_P ⊗ ⟦Δ⟧_P -> G!a` from `u : ⟦Γ⟧⊗ ⊗ (⟦Δ⟧⅋)^⊥ -> a` in L.
    fn dereliction_inverse(&self, g: &Context, dl: &Context, u: &Mor) -> Result<Mor, SemError> {
        let (m, lin) = (self.m, &self.lin);
        let (gp, dp) = (self.pfold(g)?, self.pfold(dl)?);
        let body = lin.t.mor(&lin.inverse(&self.pi(g)?), &lin.inverse(&self.tau(dl)?)).then(u);
        Ok(self
            .pt
            .mor(&m.eta(&gp)?, &m.eta(&dp)?)
            .then(&m.gbang_m(&m.fbang(&gp), &m.fbang(&dp))?)
            .then(&m.gbang_mor(&body)?))
    }

    fn persistent(&self, d: &Derivation) -> Result<Mor, SemError> {
        use RuleId::*;
        let (m, lin, pt) = (self.m, &self.lin, &self.pt);
        let p = Cat::P;
        let s = &d.conclusion;
        let (ln, rn, _) = split_persistent(s)?;
        let (gn, dn) = (items(&ln, 0), items(&rn, RIGHT));
        let (gt, dt) = (self.tree(&gn, p)?, self.tree(&dn, p)?);
        let src = Tree::node(gt.clone(), dt.clone());
        let pos = d.principal[0];
        let x = s.side(pos.side).get(pos.index).expect("checked").clone();
        let kids = x.children();
        // Tagged trees of a persistent premise, drawing tags from the pools.
        let premise_tree = |k: usize, lpool: &mut Items, rpool: &mut Items| -> Result<Tree, SemError> {
            let (pl, pr, _) = split_persistent(&d.premises[k].conclusion)?;
            let (a, b) = (take(&pl, lpool), take(&pr, rpool));
            Ok(Tree::node(self.tree(&a, p)?, self.tree(&b, p)?))
        };
        // Locate `x` among the non-displaced formulas.
        let (side_items, on_left) = match pos.side {
            Side::Left => (&gn, true),
            Side::Right => (&dn, false),
        };
        let xid = |me: &Items| me.iter().position(|(_, q)| *q == x).map(|i| me[i].0);
        let replace = |with_tree: Tree| -> Result<Tree, SemError> {
            let id = xid(side_items).expect("principal formula is not displaced");
            let leaves = side_items
                .iter()
                .map(|(t, q)| if *t == id { Ok(with_tree.clone()) } else { self.leaf(*t, q, p) })
                .collect::<Result<Vec<_>, _>>()?;
            let side = leaves.into_iter().reduce(Tree::node).unwrap_or(Tree::Unit);
            Ok(if on_left { Tree::node(side, dt.clone()) } else { Tree::node(gt.clone(), side) })
        };
        let out = match d.rule {
            AxP => pt.runit(&self.obj(&x, p)?),
            AxC => pt.lunit(&self.obj(&x, p)?),
            OnePR | BotCL => pt.lunit(&pt.unit()),
            TensorPL | ParCR | OnePL | BotCR => {
                let id = xid(side_items).expect("principal formula is not displaced");
                let inner = match kids.as_slice() {
                    [a, b] => Tree::node(self.leaf(A, a, p)?, self.leaf(B, b, p)?),
                    _ => Tree::Unit,
                };
                let pool_add: Vec<(usize, &Prop)> = match kids.as_slice() {
                    [a, b] => vec![(A, *a), (B, *b)],
                    _ => vec![],
                };
                let (mut lp, mut rp) = if on_left {
                    (with(&without(&gn, gn.iter().position(|(t, _)| *t == id).unwrap()), &pool_add), dn.clone())
                } else {
                    (gn.clone(), with(&without(&dn, dn.iter().position(|(t, _)| *t == id).unwrap()), &pool_add))
                };
                let target = premise_tree(0, &mut lp, &mut rp)?;
                shuffle(pt, &replace(inner)?, &target).then(&self.go(&d.premises[0])?)
            }
            TensorPR | ParCL => {
                let (mut lp, mut rp) = (gn.clone(), dn.clone());
                let t0 = premise_tree(0, &mut lp, &mut rp)?;
                let t1 = premise_tree(1, &mut lp, &mut rp)?;
                let f0 = self.go(&d.premises[0])?;
                let f1 = self.go(&d.premises[1])?;
                shuffle(pt, &src, &Tree::node(t0, t1)).then(&pt.mor(&f0, &f1))
            }
            PWeakL | PWeakR | PContrL | PContrR => {
                let id = xid(side_items).expect("principal formula is not displaced");
                let xo = self.obj(&x, p)?;
                let weak = matches!(d.rule, PWeakL | PWeakR);
                let rest: Items = side_items.iter().filter(|(t, _)| *t != id).cloned().collect();
                let rt = self.tree(&rest, p)?;
                let ro = rt.obj(pt);
                let (step, after) = if weak {
                    (pt.right(&ro, &counit(m, &xo)).then(&pt.runit(&ro)), rt.clone())
                } else {
                    let two = Tree::node(Tree::Leaf(A, xo.clone()), Tree::Leaf(B, xo.clone()));
                    (pt.right(&ro, &diag(m, &xo)), Tree::node(rt.clone(), two))
                };
                let extra: Vec<(usize, &Prop)> = if weak { vec![] } else { vec![(A, &x), (B, &x)] };
                let pulled = Tree::node(rt.clone(), Tree::Leaf(id, xo.clone()));
                let (mut lp, mut rp) = if on_left { (with(&rest, &extra), dn.clone()) } else { (gn.clone(), with(&rest, &extra)) };
                let target = premise_tree(0, &mut lp, &mut rp)?;
                let (pre, mid) = if on_left {
                    (
                        pt.left(&shuffle(pt, &gt, &pulled), &dt.obj(pt)).then(&pt.left(&step, &dt.obj(pt))),
                        Tree::node(after, dt.clone()),
                    )
                } else {
                    (
                        pt.right(&gt.obj(pt), &shuffle(pt, &dt, &pulled)).then(&pt.right(&gt.obj(pt), &step)),
                        Tree::node(gt.clone(), after),
                    )
                };
                pre.then(&shuffle(pt, &mid, &target)).then(&self.go(&d.premises[0])?)
            }
            GBangR => {
                let prem = &d.premises[0];
                let a = self.obj(kids[0], Cat::L)?;
                let pl = take(&prem.conclusion.left, &mut gn.clone());
                let pr = take(&prem.conclusion.right, &mut with(&dn, &[(A, kids[0])]));
                let (glt, dlt) = (self.tree(&gn, Cat::L)?, self.tree(&dn, Cat::L)?);
                let dlo = dlt.obj(&lin.p);
                let f = shuffle(&lin.t, &glt, &self.tree(&pl, Cat::L)?)
                    .then(&self.go(prem)?)
                    .then(&shuffle(&lin.p, &self.tree(&pr, Cat::L)?, &Tree::node(Tree::Leaf(A, a.clone()), dlt)));
                let u = lin.uncurry(&f, &a, &dlo);
                self.dereliction_inverse(&ln, &rn, &u)?
            }
            GWhyL => {
                let prem = &d.premises[0];
                let a = self.obj(kids[0], Cat::L)?;
                let na = lin.neg(&a);
                let pl = take(&prem.conclusion.left, &mut with(&gn, &[(A, kids[0])]));
                let pr = take(&prem.conclusion.right, &mut dn.clone());
                let (glt, dlt) = (self.tree(&gn, Cat::L)?, self.tree(&dn, Cat::L)?);
                let (glo, dlo) = (glt.obj(&lin.t), dlt.obj(&lin.p));
                let f = shuffle(&lin.t, &Tree::node(glt, Tree::Leaf(A, a.clone())), &self.tree(&pl, Cat::L)?)
                    .then(&self.go(prem)?)
                    .then(&shuffle(&lin.p, &self.tree(&pr, Cat::L)?, &dlt));
                let k = lin.curry(&f, &glo, &a).then(&lin.p.sym(&dlo, &na));
                let u = lin.uncurry(&k, &na, &dlo);
                self.dereliction_inverse(&ln, &rn, &u)?
            }
            r => return Err(SemError::Check(format!("{r} does not conclude a cut-free persistent sequent"))),
        };
        Ok(out)
    }
}

trait WithoutPos {
    fn without_pos(&self, p: lpc_kernel::Pos) -> Sequent;
}

impl WithoutPos for Sequent {
    fn without_pos(&self, p: lpc_kernel::Pos) -> Sequent {
        let mut s = self.clone();
        *s.side_mut(p.side) = self.side(p.side).without_index(p.index);
        s
    }
}

pub fn interp_obj(m: &dyn Model, x: &Prop, c: Cat) -> Result<Obj, SemError> {
    Interpreter::new(m).obj(x, c)
}

pub fn interp_ctx(m: &dyn Model, g: &Context, role: Role) -> Result<Obj, SemError> {
    Interpreter::new(m).ctx(g, role)
}

pub fn iso_pi(m: &dyn Model, g: &Context) -> Result<Mor, SemError> {
    Interpreter::new(m).pi(g)
}

pub fn iso_tau(m: &dyn Model, d: &Context) -> Result<Mor, SemError> {
    Interpreter::new(m).tau(d)
}

pub fn interp_derivation(m: &dyn Model, d: &Derivation) -> Result<Mor, SemError> {
    Interpreter::new(m).derivation(d)
}

/// Modes an object of each category may interpret.
pub fn category_of(mode: Mode) -> Cat {
    match mode {
        Mode::L => Cat::L,
        Mode::P => Cat::P,
        Mode::C => Cat::C,
    }
}
