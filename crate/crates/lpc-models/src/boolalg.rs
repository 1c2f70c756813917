//! Distributive lattices, posets and Birkhoff duality.
//!
//! L is finite distributive lattices with join-preserving maps. A lattice is
//! stored as its poset `J` of join-irreducibles, standing for the lattice of
//! lower sets of `J`, and a map `Down(J) -> Down(K)` as the relation
//! `k R j  iff  k ∈ f(↓j)`. The identity is the order itself, `⊗ = ⅋` is
//! the product poset and negation is the opposite order. P is finite posets
//! with monotone maps, C finite distributive lattices with bounded lattice
//! homomorphisms, stored as their full carriers.

use lpc_semantics::laws::LawReport;
use lpc_semantics::toolkit::c_mult;
use lpc_semantics::{Cat, Elem, Mat, Model, Mono, Mor, Obj, SemError};
use rand_chacha::ChaCha8Rng;

use crate::common::{functions_between, posets, sample_functions, star_poset, table};
use crate::lattice::{
    ba_joinirr, ba_lower, bottom, distributive_lattices, down_sets, join, join_all, label_mask, mask_label, meet, principal, top,
};

#[derive(Clone, Debug)]
pub struct BoolAlg {
    /// Largest enumerated poset.
    pub max_poset: usize,
    /// Largest number of lower sets a construction may produce.
    pub max_lower: usize,
}

impl Default for BoolAlg {
    fn default() -> Self {
        BoolAlg { max_poset: 3, max_lower: 1024 }
    }
}

/// The relation of the join-preserving map determined on generators by a
/// monotone `g : P -> Down(K)`; columns are the images `g(p)`.
fn relation(dom: &Obj, cod: &Obj, cols: &[u64]) -> Mor {
    let mat = Mat::from_fn(cod.len(), dom.len(), 0, |k, j| (cols[j] >> k & 1) as u8);
    Mor::new(dom.clone(), cod.clone(), mat)
}

fn column(f: &Mor, j: usize) -> u64 {
    (0..f.cod.len()).filter(|&k| f.mat.get(k, j) == 1).fold(0, |m, k| m | 1 << k)
}

/// `f♯ : P -> G!A` from `f : F!P -> A`, `x ↦ f(↓x)`.
pub fn ba_sharp(f: &Mor, limit: usize) -> Result<Mor, SemError> {
    let ga = ba_lower(&f.cod, limit)?;
    Ok(Mor::function(&f.dom, &ga, 0, |x| mask_label(&f.cod, column(f, f.dom.idx(x)))))
}

/// `g♭ : F!P -> A` from monotone `g : P -> G!A`, `X ↦ ⋃ g(x)`.
pub fn ba_flat(g: &Mor, a: &Obj) -> Result<Mor, SemError> {
    let t = table(g);
    if !crate::common::monotone(&g.dom, &g.cod, &t) {
        return Err(SemError::Check("flat needs a monotone map".into()));
    }
    let cols: Vec<u64> = t.iter().map(|&i| label_mask(a, g.cod.elem(i))).collect();
    Ok(relation(&g.dom, a, &cols))
}

impl BoolAlg {
    fn lower(&self, p: &Obj) -> Result<Obj, SemError> {
        ba_lower(p, self.max_lower)
    }

    fn lower_total(&self, p: &Obj) -> Obj {
        self.lower(p).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Monotone maps `a -> Down(b)` as relations.
    fn relations(&self, a: &Obj, b: &Obj, rng: &mut ChaCha8Rng, k: usize) -> Vec<Mor> {
        let Ok(masks) = down_sets(b, self.max_lower) else { return vec![] };
        let db = self.lower_total(b);
        sample_functions(a.len(), masks.len(), rng, k, |f| crate::common::monotone(a, &db, f))
            .iter()
            .map(|f| relation(a, b, &f.iter().map(|&i| masks[i]).collect::<Vec<_>>()))
            .collect()
    }

    fn lattice_laws(&self, report: &mut LawReport, l: &Obj) {
        let n = l.len();
        let j = |a, b| join(l, a, b).expect("lattice");
        let m = |a, b| meet(l, a, b).expect("lattice");
        let fam = "boolalg.lattice-laws";
        report.record(fam, bottom(l).is_some() && top(l).is_some(), || format!("unbounded {l}"));
        for x in 0..n {
            for y in 0..n {
                report.record(fam, j(x, y) == j(y, x) && m(x, y) == m(y, x), || format!("commutativity at {l}"));
                report.record(fam, j(x, m(x, y)) == x && m(x, j(x, y)) == x, || format!("absorption at {l}"));
                for z in 0..n {
                    let assoc = j(j(x, y), z) == j(x, j(y, z)) && m(m(x, y), z) == m(x, m(y, z));
                    report.record(fam, assoc, || format!("associativity at {l}"));
                    report.record(fam, m(x, j(y, z)) == j(m(x, y), m(x, z)), || format!("distributivity at {l}"));
                }
            }
        }
    }
}

impl Model for BoolAlg {
    fn name(&self) -> String {
        "boolalg".into()
    }

    fn ring(&self) -> u8 {
        0
    }

    fn iso(&self, c: Cat, dom: &Obj, cod: &Obj, f: &dyn Fn(&Elem) -> Elem) -> Mor {
        let g = Mor::function(dom, cod, 0, f);
        match c {
            Cat::L => Mor::new(dom.clone(), cod.clone(), cod.order().expect("poset").mul(&g.mat)),
            Cat::P | Cat::C => g,
        }
    }

    fn inverse(&self, c: Cat, f: &Mor) -> Option<Mor> {
        if f.dom.len() != f.cod.len() {
            return None;
        }
        let phi: Vec<usize> = match c {
            // Column j is ↓φ(j); φ is its greatest element.
            Cat::L => (0..f.dom.len())
                .map(|j| {
                    let col = column(f, j);
                    (0..f.cod.len()).find(|&k| col >> k & 1 == 1 && col == principal(&f.cod, k))
                })
                .collect::<Option<_>>()?,
            Cat::P | Cat::C => f.as_function()?,
        };
        let mut inv = vec![usize::MAX; phi.len()];
        for (j, &k) in phi.iter().enumerate() {
            if inv[k] != usize::MAX {
                return None;
            }
            inv[k] = j;
        }
        let back = self.iso(c, &f.cod, &f.dom, &|e| f.dom.elem(inv[f.cod.idx(e)]).clone());
        (f.then(&back) == self.id(c, &f.dom) && back.then(f) == self.id(c, &f.cod)).then_some(back)
    }

    fn mono_unit(&self, _m: Mono) -> Obj {
        star_poset()
    }

    fn neg(&self, a: &Obj) -> Obj {
        a.opposite()
    }

    fn gamma_bot(&self, a: &Obj) -> Mor {
        let n = a.len();
        let mat = Mat::from_fn(1, n * n, 0, |_, j| u8::from(a.leq(j / n, j % n)));
        Mor::new(Obj::product(&a.opposite(), a), star_poset(), mat)
    }

    fn gamma_one(&self, a: &Obj) -> Mor {
        let n = a.len();
        let mat = Mat::from_fn(n * n, 1, 0, |i, _| u8::from(a.leq(i / n, i % n)));
        Mor::new(star_poset(), Obj::product(a, &a.opposite()), mat)
    }

    fn zero(&self) -> Obj {
        Obj::poset_by(vec![], |_, _| true)
    }

    fn star(&self, p: &Obj) -> Obj {
        self.lower_total(p)
    }

    fn star_mor(&self, f: &Mor) -> Mor {
        let t = table(f);
        let (dp, dq) = (self.star(&f.dom), self.star(&f.cod));
        Mor::function(&dq, &dp, 0, |e| {
            let d = label_mask(&f.cod, e);
            mask_label(&f.dom, (0..f.dom.len()).filter(|&i| d >> t[i] & 1 == 1).fold(0, |m, i| m | 1 << i))
        })
    }

    fn lstar(&self, c: &Obj) -> Obj {
        ba_joinirr(c)
    }

    /// `m ↦ ⋀{l : m ≤ h(l)}`.
    fn lstar_mor(&self, g: &Mor) -> Mor {
        let t = table(g);
        let (jc, jd) = (self.lstar(&g.dom), self.lstar(&g.cod));
        Mor::function(&jd, &jc, 0, |e| {
            let m = g.cod.idx(e);
            let ups: Vec<usize> = (0..g.dom.len()).filter(|&l| g.cod.leq(m, t[l])).collect();
            let least = ups.iter().copied().find(|&l| ups.iter().all(|&u| g.dom.leq(l, u))).expect("a lattice map has a lower adjoint");
            g.dom.elem(least).clone()
        })
    }

    fn eta_star(&self, p: &Obj) -> Mor {
        let jl = self.lstar(&self.star(p));
        Mor::function(p, &jl, 0, |x| mask_label(p, principal(p, p.idx(x))))
    }

    fn eps_star(&self, c: &Obj) -> Mor {
        let jc = self.lstar(c);
        let dj = self.star(&jc);
        Mor::function(&dj, c, 0, |e| {
            let d = label_mask(&jc, e);
            let members = (0..jc.len()).filter(|i| d >> i & 1 == 1).map(|i| c.idx(jc.elem(i)));
            c.elem(join_all(c, members)).clone()
        })
    }

    fn fbang(&self, p: &Obj) -> Obj {
        p.clone()
    }

    fn fbang_mor(&self, f: &Mor) -> Mor {
        let t = table(f);
        self.iso(Cat::L, &f.dom, &f.cod, &|e| f.cod.elem(t[f.dom.idx(e)]).clone())
    }

    fn gbang(&self, a: &Obj) -> Result<Obj, SemError> {
        self.lower(a)
    }

    fn gbang_mor(&self, f: &Mor) -> Result<Mor, SemError> {
        let (ga, gb) = (self.gbang(&f.dom)?, self.gbang(&f.cod)?);
        Ok(Mor::function(&ga, &gb, 0, |e| {
            let d = label_mask(&f.dom, e);
            mask_label(&f.cod, (0..f.dom.len()).filter(|j| d >> j & 1 == 1).fold(0, |m, j| m | column(f, j)))
        }))
    }

    fn gbang_m(&self, a: &Obj, b: &Obj) -> Result<Mor, SemError> {
        let (ga, gb) = (self.gbang(a)?, self.gbang(b)?);
        let gab = self.gbang(&Obj::product(a, b))?;
        Ok(Mor::function(&Obj::product(&ga, &gb), &gab, 0, |e| {
            let (x, y) = e.split();
            let (Elem::Set(xs), Elem::Set(ys)) = (x, y) else { panic!("lower set labels") };
            Elem::Set(xs.iter().flat_map(|u| ys.iter().map(move |v| Elem::pair(u, v))).collect())
        }))
    }

    fn gbang_m1(&self) -> Result<Mor, SemError> {
        let one = star_poset();
        Ok(Mor::function(&one, &self.gbang(&one)?, 0, |_| Elem::Set(vec![Elem::Star])))
    }

    fn eps(&self, a: &Obj) -> Result<Mor, SemError> {
        let ga = self.gbang(a)?;
        let cols: Vec<u64> = ga.elems().iter().map(|e| label_mask(a, e)).collect();
        Ok(relation(&ga, a, &cols))
    }

    fn eta(&self, p: &Obj) -> Result<Mor, SemError> {
        let gp = self.gbang(p)?;
        Ok(Mor::function(p, &gp, 0, |x| mask_label(p, principal(p, p.idx(x)))))
    }

    fn objects(&self, c: Cat) -> Vec<Obj> {
        let ps: Vec<Obj> = (0..=self.max_poset).flat_map(posets).collect();
        match c {
            Cat::L | Cat::P => ps,
            Cat::C => ps.iter().map(|p| self.star(p)).collect(),
        }
    }

    fn sample(&self, c: Cat, a: &Obj, b: &Obj, rng: &mut ChaCha8Rng, k: usize) -> Vec<Mor> {
        match c {
            Cat::L => self.relations(a, b, rng, k),
            Cat::P => functions_between(a, b, 0, rng, k),
            Cat::C => {
                let (ja, jb) = (self.lstar(a), self.lstar(b));
                let back = self.inverse(Cat::C, &self.eps_star(a)).expect("Birkhoff");
                functions_between(&jb, &ja, 0, rng, k)
                    .iter()
                    .map(|g| back.then(&self.star_mor(g)).then(&self.eps_star(b)))
                    .collect()
            }
        }
    }

    fn extra_laws(&self, report: &mut LawReport, rng: &mut ChaCha8Rng) {
        for p in (0..=3).flat_map(posets) {
            let eta = self.eta_star(&p);
            report.record("boolalg.birkhoff", self.inverse(Cat::P, &eta).is_some(), || format!("joinirr(lower {p}) differs from {p}"));
        }
        let mut count = 0;
        for n in 1..=8 {
            for l in distributive_lattices(n) {
                count += 1;
                let eps = self.eps_star(&l);
                report.record("boolalg.birkhoff", self.inverse(Cat::C, &eps).is_some(), || format!("lower(joinirr {l}) differs from {l}"));
                self.lattice_laws(report, &l);
            }
        }
        // Distributive lattices with 1..=8 elements: 1, 1, 1, 2, 3, 5, 8, 15.
        report.record("boolalg.birkhoff", count == 36, || format!("{count} distributive lattices up to 8 elements"));

        for c in self.objects(Cat::C) {
            let mult = c_mult(self, &c);
            let jc = self.lstar(&c);
            let t = table(&mult);
            for x in 0..c.len() {
                for y in 0..c.len() {
                    let below = |z: usize| -> Vec<&Elem> {
                        jc.elems().iter().filter(|e| c.leq(c.idx(e), z)).collect()
                    };
                    let (bx, by) = (below(x), below(y));
                    let label = Elem::Set(bx.iter().flat_map(|u| by.iter().map(|v| Elem::pair(u, v))).collect());
                    let got = t[mult.dom.idx(&label)];
                    report.record("boolalg.monoid-meet", Some(got) == meet(&c, x, y), || format!("d(x,y) at {c}"));
                }
            }
            for d in self.objects(Cat::C).iter().filter(|d| d.len() <= 5) {
                for h in self.sample(Cat::C, &c, d, rng, 4) {
                    let t = table(&h);
                    let ok = (0..c.len()).all(|x| {
                        (0..c.len()).all(|y| {
                            Some(t[join(&c, x, y).unwrap()]) == join(d, t[x], t[y]) && Some(t[meet(&c, x, y).unwrap()]) == meet(d, t[x], t[y])
                        })
                    }) && bottom(&c).map(|b| t[b]) == bottom(d)
                        && top(&c).map(|b| t[b]) == top(d);
                    report.record("boolalg.lattice-homs", ok, || h.to_string());
                }
            }
        }
        for p in self.objects(Cat::P) {
            for a in self.objects(Cat::L) {
                let Ok(ga) = self.gbang(&a) else { continue };
                for f in self.sample(Cat::L, &p, &a, rng, 64) {
                    let back = ba_sharp(&f, self.max_lower).and_then(|s| ba_flat(&s, &a));
                    report.record("boolalg.sharp-flat", back.ok().as_ref() == Some(&f), || f.to_string());
                }
                for g in self.sample(Cat::P, &p, &ga, rng, 64) {
                    let back = ba_flat(&g, &a).and_then(|f| ba_sharp(&f, self.max_lower));
                    report.record("boolalg.sharp-flat", back.ok().as_ref() == Some(&g), || g.to_string());
                }
            }
        }
    }
}
