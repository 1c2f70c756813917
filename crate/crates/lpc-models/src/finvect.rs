//! Finite-dimensional vector spaces over GF(q) with finite sets.
//!
//! A space is its basis; the dual basis is labelled with `Bar`, pushed
//! through pairs and injections so that negation commutes with the tensor
//! and the biproduct on the nose.

use lpc_semantics::laws::LawReport;
use lpc_semantics::{Cat, Elem, Mat, Model, Mono, Mor, Obj, SemError};
use rand_chacha::ChaCha8Rng;

use crate::common::{functions_between, guard, pow, sample_matrices, set, star_set};

#[derive(Clone, Debug)]
pub struct FinVect {
    pub q: u8,
    /// Largest enumerated dimension or set.
    pub max_dim: usize,
    /// Largest set of vectors the forgetful functor may produce.
    pub max_vectors: usize,
}

impl FinVect {
    pub fn new(q: u8, max_dim: usize) -> Result<FinVect, SemError> {
        if !(2..=7).contains(&q) || !(2..q).all(|d| !q.is_multiple_of(d)) {
            return Err(SemError::Params(format!("q = {q} is not a prime at most 7")));
        }
        Ok(FinVect { q, max_dim, max_vectors: 256 })
    }
}

impl Default for FinVect {
    fn default() -> Self {
        FinVect { q: 2, max_dim: 2, max_vectors: 256 }
    }
}

/// The dual label.
pub fn bar(e: &Elem) -> Elem {
    match e {
        Elem::Star => Elem::Star,
        Elem::Bar(x) => (**x).clone(),
        Elem::Pair(a, b) => Elem::pair(&bar(a), &bar(b)),
        Elem::Inl(x) => Elem::Inl(Box::new(bar(x))),
        Elem::Inr(x) => Elem::Inr(Box::new(bar(x))),
        other => Elem::Bar(Box::new(other.clone())),
    }
}

/// `Free(X)`: the space with basis `X`.
pub fn fv_free(x: &Obj) -> Obj {
    Obj::set(x.elems().to_vec())
}

/// `Free(f)`, sending `δ_x` to `δ_{f(x)}`.
pub fn fv_free_mor(f: &Mor) -> Mor {
    f.clone()
}

/// The vectors of `V` in radix-q order, first coordinate most significant.
pub fn fv_forget(v: &Obj, q: u8, max_vectors: usize) -> Result<Obj, SemError> {
    let n = v.len();
    let count = pow(q as usize, n);
    guard(format!("vectors of a {n}-dimensional space over GF({q})"), count, max_vectors)?;
    let vectors = (0..count as usize)
        .map(|mut k| {
            let mut digits = vec![0u8; n];
            for d in digits.iter_mut().rev() {
                *d = (k % q as usize) as u8;
                k /= q as usize;
            }
            Elem::Vector(digits)
        })
        .collect();
    Ok(Obj::set(vectors))
}

fn coords(e: &Elem) -> &[u8] {
    match e {
        Elem::Vector(v) => v,
        e => panic!("{e} is not a vector label"),
    }
}

/// `γ^⊥ : V^⊥ ⊗ V -> 1` and `γ¹ : 1 -> V ⊗ V^⊥`.
pub fn fv_gamma(v: &Obj, q: u8) -> (Mor, Mor) {
    let n = v.len();
    let nv = Obj::set(v.elems().iter().map(bar).collect());
    let row = Mat::from_fn(1, n * n, q, |_, j| u8::from(j / n == j % n));
    let bot = Mor::new(Obj::product(&nv, v), star_set(), row.clone());
    let one = Mor::new(star_set(), Obj::product(v, &nv), row.transpose());
    (bot, one)
}

/// `ε_V : Free(Forget V) -> V`, sending each generator to the vector it names.
pub fn fv_counit(v: &Obj, q: u8, max_vectors: usize) -> Result<Mor, SemError> {
    let vs = fv_forget(v, q, max_vectors)?;
    let mat = Mat::from_fn(v.len(), vs.len(), q, |i, j| coords(vs.elem(j))[i]);
    Ok(Mor::new(fv_free(&vs), v.clone(), mat))
}

/// `η_X : X -> Forget(Free X)`, `x ↦ δ_x`.
pub fn fv_unit(x: &Obj, q: u8, max_vectors: usize) -> Result<Mor, SemError> {
    let vs = fv_forget(&fv_free(x), q, max_vectors)?;
    Ok(Mor::function(x, &vs, q, |e| {
        let i = x.idx(e);
        Elem::Vector((0..x.len()).map(|k| u8::from(k == i)).collect())
    }))
}

impl Model for FinVect {
    fn name(&self) -> String {
        format!("finvect(q={})", self.q)
    }

    fn ring(&self) -> u8 {
        self.q
    }

    fn mono_unit(&self, _m: Mono) -> Obj {
        star_set()
    }

    fn neg(&self, a: &Obj) -> Obj {
        Obj::set(a.elems().iter().map(bar).collect())
    }

    fn gamma_bot(&self, a: &Obj) -> Mor {
        fv_gamma(a, self.q).0
    }

    fn gamma_one(&self, a: &Obj) -> Mor {
        fv_gamma(a, self.q).1
    }

    fn zero(&self) -> Obj {
        set(0)
    }

    fn star(&self, p: &Obj) -> Obj {
        p.clone()
    }

    fn star_mor(&self, f: &Mor) -> Mor {
        Mor::new(f.cod.clone(), f.dom.clone(), f.mat.transpose())
    }

    fn lstar(&self, c: &Obj) -> Obj {
        c.clone()
    }

    fn lstar_mor(&self, g: &Mor) -> Mor {
        self.star_mor(g)
    }

    fn eta_star(&self, p: &Obj) -> Mor {
        self.id(Cat::P, p)
    }

    fn eps_star(&self, c: &Obj) -> Mor {
        self.id(Cat::C, c)
    }

    fn fbang(&self, p: &Obj) -> Obj {
        fv_free(p)
    }

    fn fbang_mor(&self, f: &Mor) -> Mor {
        fv_free_mor(f)
    }

    fn gbang(&self, a: &Obj) -> Result<Obj, SemError> {
        fv_forget(a, self.q, self.max_vectors)
    }

    fn gbang_mor(&self, f: &Mor) -> Result<Mor, SemError> {
        let (ga, gb) = (self.gbang(&f.dom)?, self.gbang(&f.cod)?);
        let q = self.q as u16;
        Ok(Mor::function(&ga, &gb, self.q, |e| {
            let u = coords(e);
            Elem::Vector(
                (0..f.cod.len())
                    .map(|i| (u.iter().enumerate().map(|(j, &x)| f.mat.get(i, j) as u16 * x as u16).sum::<u16>() % q) as u8)
                    .collect(),
            )
        }))
    }

    fn gbang_m(&self, a: &Obj, b: &Obj) -> Result<Mor, SemError> {
        let (ga, gb) = (self.gbang(a)?, self.gbang(b)?);
        let gab = self.gbang(&Obj::product(a, b))?;
        let q = self.q as u16;
        Ok(Mor::function(&Obj::product(&ga, &gb), &gab, self.q, |e| {
            let (u, v) = e.split();
            let (u, v) = (coords(u), coords(v));
            Elem::Vector(u.iter().flat_map(|&x| v.iter().map(move |&y| (x as u16 * y as u16 % q) as u8)).collect())
        }))
    }

    fn gbang_m1(&self) -> Result<Mor, SemError> {
        let one = star_set();
        Ok(Mor::function(&one, &self.gbang(&one)?, self.q, |_| Elem::Vector(vec![1])))
    }

    fn eps(&self, a: &Obj) -> Result<Mor, SemError> {
        fv_counit(a, self.q, self.max_vectors)
    }

    fn eta(&self, p: &Obj) -> Result<Mor, SemError> {
        fv_unit(p, self.q, self.max_vectors)
    }

    fn objects(&self, c: Cat) -> Vec<Obj> {
        let mut out: Vec<Obj> = (0..=self.max_dim).map(set).collect();
        if c == Cat::L && self.max_dim >= 2 {
            out.push(self.neg(&set(2)));
        }
        out
    }

    fn sample(&self, c: Cat, a: &Obj, b: &Obj, rng: &mut ChaCha8Rng, k: usize) -> Vec<Mor> {
        match c {
            Cat::L => sample_matrices(b.len(), a.len(), self.q, rng, k)
                .into_iter()
                .map(|m| Mor::new(a.clone(), b.clone(), m))
                .collect(),
            Cat::P => functions_between(a, b, self.q, rng, k),
            Cat::C => functions_between(b, a, self.q, rng, k).iter().map(|f| self.star_mor(f)).collect(),
        }
    }

    fn extra_laws(&self, report: &mut LawReport, rng: &mut ChaCha8Rng) {
        let objs = self.objects(Cat::L);
        for a in &objs {
            for b in &objs {
                let same = self.mono_obj(Mono::LTensor, a, b) == self.mono_obj(Mono::LPar, a, b);
                report.record("finvect.tensor-is-par", same, || format!("{a} ; {b}"));
                for f in self.sample(Cat::L, a, b, rng, 3) {
                    for g in self.sample(Cat::L, b, a, rng, 2) {
                        let same = self.mono_mor(Mono::LTensor, &f, &g) == self.mono_mor(Mono::LPar, &f, &g);
                        report.record("finvect.tensor-is-par", same, || format!("{f}{g}"));
                    }
                }
            }
        }
    }
}
