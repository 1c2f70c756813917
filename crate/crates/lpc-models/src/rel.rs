//! Finite sets with relations. Both tensors are the cartesian product and
//! negation is the identity; P is finite sets and functions.

use lpc_semantics::laws::LawReport;
use lpc_semantics::{Cat, Elem, Mat, Model, Mono, Mor, Obj, SemError};
use rand_chacha::ChaCha8Rng;

use crate::common::{functions_between, guard, sample_matrices, set, star_set};

#[derive(Clone, Debug)]
pub struct Rel {
    /// Largest enumerated carrier.
    pub max_size: usize,
    /// Largest carrier whose powerset may be formed.
    pub max_power: usize,
}

impl Default for Rel {
    fn default() -> Self {
        Rel { max_size: 3, max_power: 8 }
    }
}

/// Subsets of a carrier in bitmask order, labelled by their elements.
pub fn powerset(a: &Obj, max_power: usize) -> Result<Obj, SemError> {
    guard(format!("powerset of a {}-element set", a.len()), a.len() as u128, max_power)?;
    Ok(Obj::set((0u64..1 << a.len()).map(|m| subset(a, m)).collect()))
}

fn subset(a: &Obj, mask: u64) -> Elem {
    Elem::Set((0..a.len()).filter(|i| mask >> i & 1 == 1).map(|i| a.elem(i).clone()).collect())
}

fn members(x: &Elem) -> &[Elem] {
    match x {
        Elem::Set(xs) => xs,
        e => panic!("{e} is not a subset label"),
    }
}

/// Direct image `!R(X) = {y | ∃x ∈ X. x R y}`, as a function on powersets.
pub fn rel_bang(r: &Mor, max_power: usize) -> Result<Mor, SemError> {
    let (pa, pb) = (powerset(&r.dom, max_power)?, powerset(&r.cod, max_power)?);
    Ok(Mor::function(&pa, &pb, 0, |x| {
        let image = members(x).iter().map(|e| r.dom.idx(e)).fold(0u64, |acc, j| {
            (0..r.cod.len()).filter(|&i| r.mat.get(i, j) == 1).fold(acc, |acc, i| acc | 1 << i)
        });
        subset(&r.cod, image)
    }))
}

fn transpose(f: &Mor) -> Mor {
    Mor::new(f.cod.clone(), f.dom.clone(), f.mat.transpose())
}

impl Model for Rel {
    fn name(&self) -> String {
        "rel".into()
    }

    fn ring(&self) -> u8 {
        0
    }

    fn mono_unit(&self, _m: Mono) -> Obj {
        star_set()
    }

    fn neg(&self, a: &Obj) -> Obj {
        a.clone()
    }

    fn gamma_bot(&self, a: &Obj) -> Mor {
        let n = a.len();
        let dom = Obj::product(a, a);
        Mor::new(dom, star_set(), Mat::from_fn(1, n * n, 0, |_, j| u8::from(j / n.max(1) == j % n.max(1))))
    }

    fn gamma_one(&self, a: &Obj) -> Mor {
        transpose(&self.gamma_bot(a))
    }

    fn zero(&self) -> Obj {
        set(0)
    }

    fn star(&self, p: &Obj) -> Obj {
        p.clone()
    }

    fn star_mor(&self, f: &Mor) -> Mor {
        transpose(f)
    }

    fn lstar(&self, c: &Obj) -> Obj {
        c.clone()
    }

    fn lstar_mor(&self, g: &Mor) -> Mor {
        transpose(g)
    }

    fn eta_star(&self, p: &Obj) -> Mor {
        self.id(Cat::P, p)
    }

    fn eps_star(&self, c: &Obj) -> Mor {
        self.id(Cat::C, c)
    }

    fn fbang(&self, p: &Obj) -> Obj {
        p.clone()
    }

    fn fbang_mor(&self, f: &Mor) -> Mor {
        f.clone()
    }

    fn gbang(&self, a: &Obj) -> Result<Obj, SemError> {
        powerset(a, self.max_power)
    }

    fn gbang_mor(&self, f: &Mor) -> Result<Mor, SemError> {
        rel_bang(f, self.max_power)
    }

    fn gbang_m(&self, a: &Obj, b: &Obj) -> Result<Mor, SemError> {
        let (ga, gb) = (self.gbang(a)?, self.gbang(b)?);
        let gab = self.gbang(&Obj::product(a, b))?;
        Ok(Mor::function(&Obj::product(&ga, &gb), &gab, 0, |e| {
            let (x, y) = e.split();
            Elem::Set(members(x).iter().flat_map(|u| members(y).iter().map(move |v| Elem::pair(u, v))).collect())
        }))
    }

    fn gbang_m1(&self) -> Result<Mor, SemError> {
        let one = star_set();
        Ok(Mor::function(&one, &self.gbang(&one)?, 0, |_| Elem::Set(vec![Elem::Star])))
    }

    fn eps(&self, a: &Obj) -> Result<Mor, SemError> {
        let ga = self.gbang(a)?;
        let mat = Mat::from_fn(a.len(), ga.len(), 0, |i, j| u8::from(members(ga.elem(j)).contains(a.elem(i))));
        Ok(Mor::new(ga, a.clone(), mat))
    }

    fn eta(&self, p: &Obj) -> Result<Mor, SemError> {
        Ok(Mor::function(p, &self.gbang(p)?, 0, |x| Elem::Set(vec![x.clone()])))
    }

    fn objects(&self, _c: Cat) -> Vec<Obj> {
        (0..=self.max_size).map(set).collect()
    }

    fn sample(&self, c: Cat, a: &Obj, b: &Obj, rng: &mut ChaCha8Rng, k: usize) -> Vec<Mor> {
        match c {
            Cat::L => sample_matrices(b.len(), a.len(), 0, rng, k)
                .into_iter()
                .map(|m| Mor::new(a.clone(), b.clone(), m))
                .collect(),
            Cat::P => functions_between(a, b, 0, rng, k),
            Cat::C => functions_between(b, a, 0, rng, k).iter().map(transpose).collect(),
        }
    }

    fn extra_laws(&self, report: &mut LawReport, rng: &mut ChaCha8Rng) {
        for a in self.objects(Cat::L) {
            report.record("rel.negation-identity", self.neg(&a) == a, || a.to_string());
            for b in self.objects(Cat::L) {
                let same = self.mono_obj(Mono::LTensor, &a, &b) == self.mono_obj(Mono::LPar, &a, &b);
                report.record("rel.tensor-is-par", same, || format!("{a} ; {b}"));
                for f in self.sample(Cat::L, &a, &b, rng, 3) {
                    let g = self.id(Cat::L, &a);
                    let same = self.mono_mor(Mono::LTensor, &f, &g) == self.mono_mor(Mono::LPar, &f, &g);
                    report.record("rel.tensor-is-par", same, || f.to_string());
                }
            }
        }
    }
}
