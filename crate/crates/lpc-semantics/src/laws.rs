//! Exhaustive small-instance law checking.
//!
//! Coherence equations are checked on every tuple of enumerated objects;
//! naturality and functoriality on sampled morphisms.

use std::collections::BTreeMap;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::model::{Cat, Mono, Model};
use crate::obj::{Mor, Obj};
use crate::smc::Mon;
use crate::toolkit::{c_mult, c_unit, counit, diag, Lin};

/// Enumeration bounds for [`check_laws`].
#[derive(Clone, Debug)]
pub struct Scope {
    pub seed: u64,
    /// Morphisms drawn per hom-set.
    pub samples: usize,
    /// Only families whose name contains this.
    pub filter: Option<String>,
}

impl Default for Scope {
    fn default() -> Self {
        Scope { seed: 0, samples: 6, filter: None }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawFamily {
    pub checked: usize,
    /// Instances skipped because an object exceeded a size guard.
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl LawFamily {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verdicts keyed by law family.
#[derive(Clone, Debug, Default)]
pub struct LawReport {
    pub model: String,
    pub families: BTreeMap<String, LawFamily>,
    filter: Option<String>,
}

/// Failures kept per family; the count is still exact.
const WITNESS_CAP: usize = 5;

impl LawReport {
    pub fn new(model: impl Into<String>, filter: Option<String>) -> Self {
        LawReport { model: model.into(), families: BTreeMap::new(), filter }
    }

    pub fn wants(&self, family: &str) -> bool {
        self.filter.as_deref().is_none_or(|f| family.contains(f))
    }

    /// Record one instance of a law; `witness` is only rendered on failure.
    pub fn record(&mut self, family: &str, ok: bool, witness: impl FnOnce() -> String) {
        if !self.wants(family) {
            return;
        }
        let fam = self.families.entry(family.to_string()).or_default();
        fam.checked += 1;
        if !ok {
            if fam.failures.len() < WITNESS_CAP {
                fam.failures.push(witness());
            } else {
                fam.failures.push(String::new());
            }
        }
    }

    pub fn skip(&mut self, family: &str) {
        if self.wants(family) {
            self.families.entry(family.to_string()).or_default().skipped += 1;
        }
    }

    pub fn eq(&mut self, family: &str, lhs: &Mor, rhs: &Mor, witness: impl FnOnce() -> String) {
        self.record(family, lhs == rhs, witness)
    }

    pub fn passed(&self) -> bool {
        self.families.values().all(LawFamily::passed)
    }

    pub fn failed_families(&self) -> Vec<&str> {
        self.families.iter().filter(|(_, f)| !f.passed()).map(|(k, _)| k.as_str()).collect()
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, fam) in &self.families {
            let status = if fam.passed() { "pass" } else { "FAIL" };
            writeln!(f, "{}\t{name}\t{status}\tchecked={}\tskipped={}\tfailures={}", self.model, fam.checked, fam.skipped, fam.failures.len())?;
            for w in fam.failures.iter().filter(|w| !w.is_empty()) {
                writeln!(f, "{}\t{name}\twitness\t{w}", self.model)?;
            }
        }
        Ok(())
    }
}

fn tuples(objs: &[Obj], n: usize) -> Vec<Vec<Obj>> {
    (0..n).fold(vec![vec![]], |acc, _| {
        acc.iter()
            .flat_map(|t| {
                objs.iter().map(move |o| {
                    let mut t = t.clone();
                    t.push(o.clone());
                    t
                })
            })
            .collect()
    })
}

fn show(objs: &[&Obj]) -> String {
    objs.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(" ; ")
}

struct Checker<'a> {
    m: &'a dyn Model,
    scope: &'a Scope,
    rng: ChaCha8Rng,
    report: LawReport,
}

impl<'a> Checker<'a> {
    fn objects(&self, c: Cat) -> Vec<Obj> {
        self.m.objects(c)
    }

    /// Objects small enough for tuples of `n`, keeping products in check.
    fn small(&self, c: Cat, n: usize) -> Vec<Obj> {
        let cap = match n {
            0..=2 => usize::MAX,
            3 => 3,
            _ => 2,
        };
        self.objects(c).into_iter().filter(|o| o.len() <= cap).collect()
    }

    fn sample(&mut self, c: Cat, a: &Obj, b: &Obj) -> Vec<Mor> {
        self.m.sample(c, a, b, &mut self.rng, self.scope.samples)
    }

    /// Composable pairs `f : a -> b`, `g : b -> c` over small objects.
    fn chains(&mut self, c: Cat) -> Vec<(Mor, Mor)> {
        let objs = self.small(c, 3);
        let mut out = Vec::new();
        for t in tuples(&objs, 3) {
            let fs = self.sample(c, &t[0], &t[1]);
            let gs = self.sample(c, &t[1], &t[2]);
            out.extend(fs.iter().zip(gs.iter().cycle()).map(|(f, g)| (f.clone(), g.clone())));
        }
        out
    }

    fn maps(&mut self, c: Cat) -> Vec<Mor> {
        let objs = self.small(c, 2);
        let mut out = Vec::new();
        for t in tuples(&objs, 2) {
            out.extend(self.sample(c, &t[0], &t[1]));
        }
        out
    }

    fn category(&mut self, c: Cat) {
        let fam = format!("{c}.category");
        if !self.report.wants(&fam) {
            return;
        }
        let m = self.m;
        for (f, g) in self.chains(c) {
            self.report.eq(&fam, &m.id(c, &f.dom).then(&f), &f, || format!("id;f at {f}"));
            self.report.eq(&fam, &f.then(&m.id(c, &f.cod)), &f, || format!("f;id at {f}"));
            for h in self.sample(c, &g.cod, &f.dom).into_iter().take(2) {
                let lhs = f.then(&g).then(&h);
                let rhs = f.then(&g.then(&h));
                self.report.eq(&fam, &lhs, &rhs, || format!("(f;g);h at {f} / {g} / {h}"));
            }
        }
    }

    fn monoidal(&mut self, kind: Mono) {
        let mon = Mon::new(self.m, kind);
        let c = kind.cat();
        let name = kind.to_string();
        let fam = |s: &str| format!("{name}.{s}");
        let (o4, o3, all) = (self.small(c, 4), self.small(c, 3), self.objects(c));
        let r = &mut self.report;
        let u = mon.unit();
        if r.wants(&fam("pentagon")) {
            for t in tuples(&o4, 4) {
                let (a, b, cc, d) = (&t[0], &t[1], &t[2], &t[3]);
                let lhs = mon.assoc(&mon.obj(a, b), cc, d).then(&mon.assoc(a, b, &mon.obj(cc, d)));
                let rhs = mon
                    .left(&mon.assoc(a, b, cc), d)
                    .then(&mon.assoc(a, &mon.obj(b, cc), d))
                    .then(&mon.right(a, &mon.assoc(b, cc, d)));
                r.eq(&fam("pentagon"), &lhs, &rhs, || show(&[a, b, cc, d]));
            }
        }
        for t in tuples(&o3, 3) {
            let (a, b, cc) = (&t[0], &t[1], &t[2]);
            let lhs = mon.assoc(a, b, cc).then(&mon.sym(a, &mon.obj(b, cc))).then(&mon.assoc(b, cc, a));
            let rhs = mon
                .left(&mon.sym(a, b), cc)
                .then(&mon.assoc(b, a, cc))
                .then(&mon.right(b, &mon.sym(a, cc)));
            r.eq(&fam("hexagon"), &lhs, &rhs, || show(&[a, b, cc]));
            let there = mon.assoc(a, b, cc).then(&mon.assoc_inv(a, b, cc));
            r.eq(&fam("iso"), &there, &mon.id(&there.dom), || format!("alpha {}", show(&[a, b, cc])));
        }
        for t in tuples(&all, 2) {
            let (a, b) = (&t[0], &t[1]);
            let lhs = mon.assoc(a, &u, b).then(&mon.right(a, &mon.lunit(b)));
            r.eq(&fam("triangle"), &lhs, &mon.left(&mon.runit(a), b), || show(&[a, b]));
            let twice = mon.sym(a, b).then(&mon.sym(b, a));
            r.eq(&fam("symmetry"), &twice, &mon.id(&twice.dom), || show(&[a, b]));
        }
        for a in all.iter() {
            let l = mon.sym(a, &u).then(&mon.lunit(a));
            r.eq(&fam("unit"), &l, &mon.runit(a), || show(&[a]));
            let round = mon.lunit_inv(a).then(&mon.lunit(a));
            r.eq(&fam("iso"), &round, &mon.id(a), || format!("lambda {a}"));
            let round = mon.runit_inv(a).then(&mon.runit(a));
            r.eq(&fam("iso"), &round, &mon.id(a), || format!("rho {a}"));
        }
        r.eq(&fam("unit"), &mon.lunit(&u), &mon.runit(&u), || "lambda_1 vs rho_1".into());

        if !(self.report.wants(&fam("bifunctor")) || self.report.wants(&fam("naturality"))) {
            return;
        }
        let chains = self.chains(c);
        let maps = self.maps(c);
        let all = self.objects(c);
        let r = &mut self.report;
        for ((f, f2), (g, g2)) in chains.iter().zip(chains.iter().rev()) {
            let lhs = mon.mor(&f.then(f2), &g.then(g2));
            let rhs = mon.mor(f, g).then(&mon.mor(f2, g2));
            r.eq(&fam("bifunctor"), &lhs, &rhs, || format!("{f} ; {f2} | {g} ; {g2}"));
        }
        for a in all.iter().take(4) {
            for b in all.iter().take(4) {
                r.eq(&fam("bifunctor"), &mon.mor(&mon.id(a), &mon.id(b)), &mon.id(&mon.obj(a, b)), || show(&[a, b]));
            }
        }
        for (f, g) in maps.iter().zip(maps.iter().rev()) {
            let lhs = mon.mor(f, g).then(&mon.sym(&f.cod, &g.cod));
            let rhs = mon.sym(&f.dom, &g.dom).then(&mon.mor(g, f));
            r.eq(&fam("naturality"), &lhs, &rhs, || format!("sigma at {f} | {g}"));
            let lhs = mon.mor(&mon.id(&u), f).then(&mon.lunit(&f.cod));
            let rhs = mon.lunit(&f.dom).then(f);
            r.eq(&fam("naturality"), &lhs, &rhs, || format!("lambda at {f}"));
        }
        for ((f, g), h) in maps.iter().zip(maps.iter().rev()).zip(maps.iter().skip(1)) {
            if f.dom.len() * g.dom.len() * h.dom.len() > 64 {
                continue;
            }
            let lhs = mon.mor(&mon.mor(f, g), h).then(&mon.assoc(&f.cod, &g.cod, &h.cod));
            let rhs = mon.assoc(&f.dom, &g.dom, &h.dom).then(&mon.mor(f, &mon.mor(g, h)));
            r.eq(&fam("naturality"), &lhs, &rhs, || format!("alpha at {f} | {g} | {h}"));
        }
    }

    fn linear(&mut self) {
        let lin = Lin::new(self.m);
        let (t, p) = (lin.t, lin.p);
        let m = self.m;
        let objs = self.objects(Cat::L);
        let o3 = self.small(Cat::L, 3);
        let r = &mut self.report;
        for a in &objs {
            let na = lin.neg(a);
            r.record("L.negation", lin.neg(&na) == *a, || format!("not involutive at {a}"));
            let snake = t
                .right(&na, &m.gamma_one(a))
                .then(&m.delta(&na, a, &na))
                .then(&p.left(&m.gamma_bot(a), &na))
                .then(&p.lunit(&na));
            r.eq("L.snake", &snake, &t.runit(&na), || format!("first snake at {a}"));
            let snake = t
                .left(&m.gamma_one(a), a)
                .then(&lin.delta_r(a, &na, a))
                .then(&p.right(a, &m.gamma_bot(a)))
                .then(&p.runit(a));
            r.eq("L.snake", &snake, &t.lunit(a), || format!("second snake at {a}"));
            r.eq("L.negation", &m.gamma_bot(&na), &t.sym(a, &na).then(&m.gamma_bot(a)), || format!("gamma_bot at {a}"));
            r.eq("L.negation", &m.gamma_one(&na), &m.gamma_one(a).then(&p.sym(a, &na)), || format!("gamma_one at {a}"));
            r.eq("L.negation", &lin.neg_mor(&lin.id(a)), &lin.id(&na), || format!("neg of id at {a}"));
        }
        for tup in tuples(&o3, 3) {
            let (a, b, c) = (&tup[0], &tup[1], &tup[2]);
            let dm = lin.dm_tensor(a, b);
            let ok = m.inverse(Cat::L, &dm).is_some();
            r.record("L.de-morgan", ok, || format!("dm_tensor not invertible at {}", show(&[a, b])));
            // (a ⊗ b) ⊗ c -> a ⅋ ... is not an iso in general, so only shape and round trips here.
            let d = m.delta(a, b, c);
            r.record("L.delta", d.dom == t.obj(a, &p.obj(b, c)) && d.cod == p.obj(&t.obj(a, b), c), || show(&[a, b, c]));
        }
        if self.report.wants("L.negation") || self.report.wants("L.closure") || self.report.wants("L.delta") {
            let maps = self.maps(Cat::L);
            let chains = self.chains(Cat::L);
            let r = &mut self.report;
            for f in &maps {
                r.eq("L.negation", &lin.neg_mor(&lin.neg_mor(f)), f, || format!("double negation of {f}"));
                let h = t.runit(&f.dom).then(f);
                let u = t.obj(&f.dom, &lin.one());
                let back = lin.uncurry(&lin.curry(&h, &f.dom, &lin.one()), &f.cod, &lin.neg(&lin.one()));
                r.eq("L.closure", &back, &h, || format!("uncurry of curry at {f}"));
                let _ = u;
            }
            for (f, g) in &chains {
                let lhs = lin.neg_mor(&f.then(g));
                let rhs = lin.neg_mor(g).then(&lin.neg_mor(f));
                r.eq("L.negation", &lhs, &rhs, || format!("negation of {f} ; {g}"));
            }
            for ((f, g), h) in maps.iter().zip(maps.iter().rev()).zip(maps.iter().skip(1)) {
                if f.dom.len() * g.dom.len() * h.dom.len() > 64 {
                    continue;
                }
                let lhs = t.mor(f, &p.mor(g, h)).then(&m.delta(&f.cod, &g.cod, &h.cod));
                let rhs = m.delta(&f.dom, &g.dom, &h.dom).then(&p.mor(&t.mor(f, g), h));
                r.eq("L.delta", &lhs, &rhs, || format!("naturality at {f} | {g} | {h}"));
            }
            for (f, g) in maps.iter().zip(maps.iter().rev()) {
                let b = &g.dom;
                let h = t.mor(f, g);
                let c = &h.cod;
                let back = lin.uncurry(&lin.curry(&h, &f.dom, b), c, &lin.neg(b));
                r.eq("L.closure", &back, &h, || format!("uncurry of curry at {f} | {g}"));
            }
        }
        self.biproducts();
    }

    fn biproducts(&mut self) {
        if !self.report.wants("L.biproduct") {
            return;
        }
        let lin = Lin::new(self.m);
        let objs = self.small(Cat::L, 3);
        let zero = self.m.zero();
        for a in &objs {
            let homs = self.m.sample(Cat::L, a, &zero, &mut self.rng, 4);
            self.report.record("L.biproduct", homs.len() == 1, || format!("{a} -> 0 has {} maps", homs.len()));
            let homs = self.m.sample(Cat::L, &zero, a, &mut self.rng, 4);
            self.report.record("L.biproduct", homs.len() == 1, || format!("0 -> {a} has {} maps", homs.len()));
        }
        for tup in tuples(&objs, 3) {
            let (x, a, b) = (&tup[0], &tup[1], &tup[2]);
            let fs = self.sample(Cat::L, x, a);
            let gs = self.sample(Cat::L, x, b);
            let hs = self.sample(Cat::L, a, x);
            let ks = self.sample(Cat::L, b, x);
            let r = &mut self.report;
            for (f, g) in fs.iter().zip(gs.iter()) {
                let pr = lin.pair(f, g);
                r.eq("L.biproduct", &pr.then(&lin.proj(a, b, false)), f, || format!("proj1 of pair {f} {g}"));
                r.eq("L.biproduct", &pr.then(&lin.proj(a, b, true)), g, || format!("proj2 of pair {f} {g}"));
            }
            for (h, k) in hs.iter().zip(ks.iter()) {
                let cp = lin.copair(h, k);
                r.eq("L.biproduct", &lin.inj(a, b, false).then(&cp), h, || format!("copair after inj1 {h} {k}"));
                r.eq("L.biproduct", &lin.inj(a, b, true).then(&cp), k, || format!("copair after inj2 {h} {k}"));
            }
            let ab = self.m.biprod(a, b);
            let id = lin.pair(&lin.proj(a, b, false), &lin.proj(a, b, true));
            r.eq("L.biproduct", &id, &lin.id(&ab), || format!("pair of projections at {}", show(&[a, b])));
            let id = lin.copair(&lin.inj(a, b, false), &lin.inj(a, b, true));
            r.eq("L.biproduct", &id, &lin.id(&ab), || format!("copair of injections at {}", show(&[a, b])));
        }
    }

    fn comonoids(&mut self) {
        let m = self.m;
        let pt = Mon::new(m, Mono::PTensor);
        for p in self.objects(Cat::P) {
            let (d, e) = (diag(m, &p), counit(m, &p));
            let r = &mut self.report;
            let l = d.then(&pt.left(&e, &p)).then(&pt.lunit(&p));
            r.eq("P.comonoid", &l, &pt.id(&p), || format!("left counit at {p}"));
            let rr = d.then(&pt.right(&p, &e)).then(&pt.runit(&p));
            r.eq("P.comonoid", &rr, &pt.id(&p), || format!("right counit at {p}"));
            r.eq("P.comonoid", &d.then(&pt.sym(&p, &p)), &d, || format!("cocommutativity at {p}"));
            if p.len() <= 4 {
                let lhs = d.then(&pt.left(&d, &p)).then(&pt.assoc(&p, &p, &p));
                let rhs = d.then(&pt.right(&p, &d));
                r.eq("P.comonoid", &lhs, &rhs, || format!("coassociativity at {p}"));
            }
        }
        if self.report.wants("P.comonoid") {
            for f in self.maps(Cat::P) {
                let lhs = f.then(&diag(m, &f.cod));
                let rhs = diag(m, &f.dom).then(&pt.mor(&f, &f));
                self.report.eq("P.comonoid", &lhs, &rhs, || format!("diagonal natural at {f}"));
                let lhs = f.then(&counit(m, &f.cod));
                self.report.eq("P.comonoid", &lhs, &counit(m, &f.dom), || format!("counit natural at {f}"));
            }
        }
    }

    fn duality(&mut self) {
        let m = self.m;
        let pt = Mon::new(m, Mono::PTensor);
        for p in self.objects(Cat::P) {
            let r = &mut self.report;
            let eta = m.eta_star(&p);
            r.record("duality.iso", m.inverse(Cat::P, &eta).is_some(), || format!("eta_star at {p}"));
            let tri = m.star_mor(&eta);
            let c = m.star(&p);
            r.eq("duality.iso", &tri, &m.eps_star(&c), || format!("triangle at {p}"));
            r.eq("duality.functor", &m.star_mor(&pt.id(&p)), &m.id(Cat::C, &c), || format!("star of id at {p}"));
        }
        let cs = self.objects(Cat::C);
        for c in &cs {
            let r = &mut self.report;
            let eps = m.eps_star(c);
            r.record("duality.iso", m.inverse(Cat::C, &eps).is_some(), || format!("eps_star at {c}"));
            let lc = m.lstar(c);
            r.eq("duality.functor", &m.lstar_mor(&m.id(Cat::C, c)), &pt.id(&lc), || format!("lower star of id at {c}"));
            // Monoid laws, read through the duality.
            let q = &lc;
            let unit_r = m.star_mor(&pt.runit(q)).then(&m.star_mor(&pt.right(q, &counit(m, q)))).then(&c_mult(m, c));
            r.eq("C.monoid", &unit_r, &eps, || format!("right unit at {c}"));
            let unit_l = m.star_mor(&pt.lunit(q)).then(&m.star_mor(&pt.left(&counit(m, q), q))).then(&c_mult(m, c));
            r.eq("C.monoid", &unit_l, &eps, || format!("left unit at {c}"));
            let comm = m.star_mor(&pt.sym(q, q)).then(&c_mult(m, c));
            r.eq("C.monoid", &comm, &c_mult(m, c), || format!("commutativity at {c}"));
            if q.len() <= 2 {
                let d = diag(m, q);
                let lhs = m.star_mor(&pt.assoc(q, q, q)).then(&m.star_mor(&pt.left(&d, q))).then(&m.star_mor(&d));
                let rhs = m.star_mor(&pt.right(q, &d)).then(&m.star_mor(&d));
                r.eq("C.monoid", &lhs, &rhs, || format!("associativity at {c}"));
            }
            let u = c_unit(m, c);
            r.record("C.monoid", u.cod == *c, || format!("unit codomain at {c}"));
        }
        if self.report.wants("duality") {
            for (f, g) in self.chains(Cat::P) {
                let lhs = m.star_mor(&f.then(&g));
                let rhs = m.star_mor(&g).then(&m.star_mor(&f));
                self.report.eq("duality.functor", &lhs, &rhs, || format!("star of {f} ; {g}"));
                let lhs = f.then(&m.eta_star(&f.cod));
                let rhs = m.eta_star(&f.dom).then(&m.lstar_mor(&m.star_mor(&f)));
                self.report.eq("duality.naturality", &lhs, &rhs, || format!("eta_star at {f}"));
            }
            for (f, g) in self.chains(Cat::C) {
                let lhs = m.lstar_mor(&f.then(&g));
                let rhs = m.lstar_mor(&g).then(&m.lstar_mor(&f));
                self.report.eq("duality.functor", &lhs, &rhs, || format!("lower star of {f} ; {g}"));
                let lhs = m.star_mor(&m.lstar_mor(&f)).then(&m.eps_star(&f.cod));
                let rhs = m.eps_star(&f.dom).then(&f);
                self.report.eq("duality.naturality", &lhs, &rhs, || format!("eps_star at {f}"));
            }
        }
    }

    fn fbang(&mut self) {
        let m = self.m;
        let lin = Lin::new(m);
        let pt = Mon::new(m, Mono::PTensor);
        let ps = self.objects(Cat::P);
        for p in &ps {
            let r = &mut self.report;
            r.eq("F!.functor", &m.fbang_mor(&pt.id(p)), &lin.id(&m.fbang(p)), || format!("F! of id at {p}"));
            let lu = lin.t.left(&m.fbang_m1(), &m.fbang(p)).then(&m.fbang_m(&pt.unit(), p)).then(&m.fbang_mor(&pt.lunit(p)));
            r.eq("F!.monoidal", &lu, &lin.t.lunit(&m.fbang(p)), || format!("left unit at {p}"));
            let ru = lin.t.right(&m.fbang(p), &m.fbang_m1()).then(&m.fbang_m(p, &pt.unit())).then(&m.fbang_mor(&pt.runit(p)));
            r.eq("F!.monoidal", &ru, &lin.t.runit(&m.fbang(p)), || format!("right unit at {p}"));
        }
        self.report.record("F!.monoidal", m.inverse(Cat::L, &m.fbang_m1()).is_some(), || "m_1 not invertible".into());
        for t in tuples(&self.small(Cat::P, 3), 3) {
            let (p, q, s) = (&t[0], &t[1], &t[2]);
            let (fp, fq, fs) = (m.fbang(p), m.fbang(q), m.fbang(s));
            let lhs = lin
                .t
                .left(&m.fbang_m(p, q), &fs)
                .then(&m.fbang_m(&pt.obj(p, q), s))
                .then(&m.fbang_mor(&pt.assoc(p, q, s)));
            let rhs = lin
                .t
                .assoc(&fp, &fq, &fs)
                .then(&lin.t.right(&fp, &m.fbang_m(q, s)))
                .then(&m.fbang_m(p, &pt.obj(q, s)));
            let r = &mut self.report;
            r.eq("F!.monoidal", &lhs, &rhs, || format!("associativity at {}", show(&[p, q, s])));
            let sym = m.fbang_m(p, q).then(&m.fbang_mor(&pt.sym(p, q)));
            r.eq("F!.monoidal", &sym, &lin.t.sym(&fp, &fq).then(&m.fbang_m(q, p)), || format!("symmetry at {}", show(&[p, q])));
            r.record("F!.monoidal", m.inverse(Cat::L, &m.fbang_m(p, q)).is_some(), || format!("m not invertible at {}", show(&[p, q])));
        }
        if self.report.wants("F!") {
            for (f, g) in self.chains(Cat::P) {
                let lhs = m.fbang_mor(&f.then(&g));
                let rhs = m.fbang_mor(&f).then(&m.fbang_mor(&g));
                self.report.eq("F!.functor", &lhs, &rhs, || format!("F! of {f} ; {g}"));
            }
            let maps = self.maps(Cat::P);
            for (f, g) in maps.iter().zip(maps.iter().rev()) {
                let lhs = lin.t.mor(&m.fbang_mor(f), &m.fbang_mor(g)).then(&m.fbang_m(&f.cod, &g.cod));
                let rhs = m.fbang_m(&f.dom, &g.dom).then(&m.fbang_mor(&pt.mor(f, g)));
                self.report.eq("F!.monoidal", &lhs, &rhs, || format!("m natural at {f} | {g}"));
            }
        }
    }

    fn gbang(&mut self) {
        if !(self.report.wants("G!") || self.report.wants("adjunction")) {
            return;
        }
        let m = self.m;
        let lin = Lin::new(m);
        let pt = Mon::new(m, Mono::PTensor);
        let ls = self.objects(Cat::L);
        let ps = self.objects(Cat::P);
        macro_rules! tryg {
            ($fam:expr, $e:expr) => {
                match $e {
                    Ok(v) => v,
                    Err(_) => {
                        self.report.skip($fam);
                        continue;
                    }
                }
            };
        }
        for a in &ls {
            let ga = tryg!("G!.functor", m.gbang(a));
            let gid = tryg!("G!.functor", m.gbang_mor(&lin.id(a)));
            self.report.eq("G!.functor", &gid, &pt.id(&ga), || format!("G! of id at {a}"));
            // G!(eps_a) ; eta_{G!a} = id
            let eps = tryg!("adjunction.triangle", m.eps(a));
            let geps = tryg!("adjunction.triangle", m.gbang_mor(&eps));
            let eta = tryg!("adjunction.triangle", m.eta(&ga));
            self.report.eq("adjunction.triangle", &eta.then(&geps), &pt.id(&ga), || format!("G! side at {a}"));
        }
        for p in &ps {
            let fp = m.fbang(p);
            let eta = tryg!("adjunction.triangle", m.eta(p));
            let eps = tryg!("adjunction.triangle", m.eps(&fp));
            self.report.eq("adjunction.triangle", &m.fbang_mor(&eta).then(&eps), &lin.id(&fp), || format!("F! side at {p}"));
        }
        // Monoidal structure of G! and of the unit and counit.
        let unit_ok = (|| -> Result<bool, crate::SemError> {
            let one = lin.one();
            let g1 = m.gbang_m1()?;
            let eta1 = m.eta(&pt.unit())?;
            let via = g1.then(&m.gbang_mor(&m.fbang_m1())?);
            let eps = m.fbang_m1().then(&m.fbang_mor(&g1)).then(&m.eps(&one)?);
            Ok(via == eta1 && eps == lin.id(&one))
        })();
        match unit_ok {
            Ok(ok) => self.report.record("adjunction.monoidal", ok, || "unit components".into()),
            Err(_) => self.report.skip("adjunction.monoidal"),
        }
        for t in tuples(&self.small(Cat::L, 3), 3) {
            let (a, b, c) = (&t[0], &t[1], &t[2]);
            let res = (|| -> Result<(Mor, Mor), crate::SemError> {
                let (ga, gb, gc) = (m.gbang(a)?, m.gbang(b)?, m.gbang(c)?);
                let lhs = pt
                    .left(&m.gbang_m(a, b)?, &gc)
                    .then(&m.gbang_m(&lin.t.obj(a, b), c)?)
                    .then(&m.gbang_mor(&lin.t.assoc(a, b, c))?);
                let rhs = pt
                    .assoc(&ga, &gb, &gc)
                    .then(&pt.right(&ga, &m.gbang_m(b, c)?))
                    .then(&m.gbang_m(a, &lin.t.obj(b, c))?);
                Ok((lhs, rhs))
            })();
            match res {
                Ok((l, r)) => self.report.eq("G!.monoidal", &l, &r, || format!("associativity at {}", show(&[a, b, c]))),
                Err(_) => self.report.skip("G!.monoidal"),
            }
        }
        for t in tuples(&self.small(Cat::L, 2), 2) {
            let (a, b) = (&t[0], &t[1]);
            let res = (|| -> Result<Vec<(&'static str, Mor, Mor)>, crate::SemError> {
                let (ga, gb) = (m.gbang(a)?, m.gbang(b)?);
                let gm = m.gbang_m(a, b)?;
                let sym = (
                    "G!.monoidal",
                    gm.then(&m.gbang_mor(&lin.t.sym(a, b))?),
                    pt.sym(&ga, &gb).then(&m.gbang_m(b, a)?),
                );
                let lu = (
                    "G!.monoidal",
                    pt.left(&m.gbang_m1()?, &ga).then(&m.gbang_m(&lin.one(), a)?).then(&m.gbang_mor(&lin.t.lunit(a))?),
                    pt.lunit(&ga),
                );
                // eps monoidal: F!(m^G) then eps = eps ⊗ eps, after m^F.
                let epsm = (
                    "adjunction.monoidal",
                    m.fbang_m(&ga, &gb).then(&m.fbang_mor(&gm)).then(&m.eps(&lin.t.obj(a, b))?),
                    lin.t.mor(&m.eps(a)?, &m.eps(b)?),
                );
                Ok(vec![sym, lu, epsm])
            })();
            match res {
                Ok(v) => {
                    for (fam, l, r) in v {
                        self.report.eq(fam, &l, &r, || show(&[a, b]));
                    }
                }
                Err(_) => self.report.skip("G!.monoidal"),
            }
        }
        for t in tuples(&self.small(Cat::P, 2), 2) {
            let (p, q) = (&t[0], &t[1]);
            let res = (|| -> Result<(Mor, Mor), crate::SemError> {
                let lhs = pt
                    .mor(&m.eta(p)?, &m.eta(q)?)
                    .then(&m.gbang_m(&m.fbang(p), &m.fbang(q))?)
                    .then(&m.gbang_mor(&m.fbang_m(p, q))?);
                Ok((lhs, m.eta(&pt.obj(p, q))?))
            })();
            match res {
                Ok((l, r)) => self.report.eq("adjunction.monoidal", &l, &r, || format!("eta at {}", show(&[p, q]))),
                Err(_) => self.report.skip("adjunction.monoidal"),
            }
        }
        for (f, g) in self.chains(Cat::L) {
            let res = (|| -> Result<Vec<(&'static str, Mor, Mor)>, crate::SemError> {
                let fun = ("G!.functor", m.gbang_mor(&f.then(&g))?, m.gbang_mor(&f)?.then(&m.gbang_mor(&g)?));
                let nat = (
                    "adjunction.naturality",
                    m.fbang_mor(&m.gbang_mor(&f)?).then(&m.eps(&f.cod)?),
                    m.eps(&f.dom)?.then(&f),
                );
                Ok(vec![fun, nat])
            })();
            match res {
                Ok(v) => {
                    for (fam, l, r) in v {
                        self.report.eq(fam, &l, &r, || format!("{f} ; {g}"));
                    }
                }
                Err(_) => self.report.skip("G!.functor"),
            }
        }
        for f in self.maps(Cat::P) {
            let res = (|| -> Result<(Mor, Mor), crate::SemError> {
                Ok((f.then(&m.eta(&f.cod)?), m.eta(&f.dom)?.then(&m.gbang_mor(&m.fbang_mor(&f))?)))
            })();
            match res {
                Ok((l, r)) => self.report.eq("adjunction.naturality", &l, &r, || format!("eta at {f}")),
                Err(_) => self.report.skip("adjunction.naturality"),
            }
        }
    }
}

/// Check every law family on a model instance.
pub fn check_laws(m: &dyn Model, scope: &Scope) -> LawReport {
    let mut ck = Checker {
        m,
        scope,
        rng: ChaCha8Rng::seed_from_u64(scope.seed),
        report: LawReport::new(m.name(), scope.filter.clone()),
    };
    for c in [Cat::L, Cat::P, Cat::C] {
        ck.category(c);
    }
    for k in [Mono::LTensor, Mono::LPar, Mono::PTensor] {
        ck.monoidal(k);
    }
    ck.linear();
    ck.comonoids();
    ck.duality();
    ck.fbang();
    ck.gbang();
    let mut rng = ChaCha8Rng::seed_from_u64(scope.seed ^ 0x5eed);
    m.extra_laws(&mut ck.report, &mut rng);
    ck.report
}
