use std::fmt;

use rand_chacha::ChaCha8Rng;

use crate::error::SemError;
use crate::laws::LawReport;
use crate::obj::{Elem, Mor, Obj};

/// The three categories of a model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cat {
    L,
    P,
    C,
}

impl fmt::Display for Cat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cat::L => "L",
            Cat::P => "P",
            Cat::C => "C",
        })
    }
}

/// The monoidal structures used by the interpretation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mono {
    LTensor,
    LPar,
    PTensor,
}

impl Mono {
    pub fn cat(self) -> Cat {
        match self {
            Mono::LTensor | Mono::LPar => Cat::L,
            Mono::PTensor => Cat::P,
        }
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mono::LTensor => "L-tensor",
            Mono::LPar => "L-par",
            Mono::PTensor => "P-tensor",
        })
    }
}

/// A concrete model, with every morphism a matrix over [`Model::ring`].
///
/// The structure on C used by the interpretation is carried over from P
/// along the dualities, and the exponentials on the consumer side are
/// obtained from `F!`, `G!` and negation; see [`crate::toolkit`].
pub trait Model {
    fn name(&self) -> String;

    /// 0 for the Boolean semiring, otherwise a prime modulus.
    fn ring(&self) -> u8;

    /// The isomorphism given by a bijection of labels.
    fn iso(&self, _c: Cat, dom: &Obj, cod: &Obj, f: &dyn Fn(&Elem) -> Elem) -> Mor {
        Mor::function(dom, cod, self.ring(), f)
    }

    fn id(&self, c: Cat, a: &Obj) -> Mor {
        self.iso(c, a, a, &|e| e.clone())
    }

    fn inverse(&self, _c: Cat, f: &Mor) -> Option<Mor> {
        Some(Mor::new(f.cod.clone(), f.dom.clone(), f.mat.inverse()?))
    }

    fn mono_unit(&self, m: Mono) -> Obj;

    fn mono_obj(&self, _m: Mono, a: &Obj, b: &Obj) -> Obj {
        Obj::product(a, b)
    }

    fn mono_mor(&self, m: Mono, f: &Mor, g: &Mor) -> Mor {
        Mor::new(self.mono_obj(m, &f.dom, &g.dom), self.mono_obj(m, &f.cod, &g.cod), f.mat.kron(&g.mat))
    }

    /// `a ⊗ (b ⅋ c) -> (a ⊗ b) ⅋ c`.
    fn delta(&self, a: &Obj, b: &Obj, c: &Obj) -> Mor {
        let dom = self.mono_obj(Mono::LTensor, a, &self.mono_obj(Mono::LPar, b, c));
        let cod = self.mono_obj(Mono::LPar, &self.mono_obj(Mono::LTensor, a, b), c);
        self.iso(Cat::L, &dom, &cod, &|e| {
            let (x, yz) = e.split();
            let (y, z) = yz.split();
            Elem::pair(&Elem::pair(x, y), z)
        })
    }

    /// Negation on L-objects; must be an involution on the nose.
    fn neg(&self, a: &Obj) -> Obj;

    /// `a^⊥ ⊗ a -> ⊥`.
    fn gamma_bot(&self, a: &Obj) -> Mor;

    /// `1 -> a ⅋ a^⊥`.
    fn gamma_one(&self, a: &Obj) -> Mor;

    /// Zero object of L, interpreting both `⊤` and `0`.
    fn zero(&self) -> Obj;

    /// Biproduct of L, interpreting both `&` and `⊕`.
    fn biprod(&self, a: &Obj, b: &Obj) -> Obj {
        Obj::sum(a, b)
    }

    /// `(-)^*`, contravariant from P to C.
    fn star(&self, p: &Obj) -> Obj;
    fn star_mor(&self, f: &Mor) -> Mor;
    /// `(-)_*`, contravariant from C to P.
    fn lstar(&self, c: &Obj) -> Obj;
    fn lstar_mor(&self, g: &Mor) -> Mor;
    /// `p -> (p^*)_*` in P.
    fn eta_star(&self, p: &Obj) -> Mor;
    /// `(c_*)^* -> c` in C.
    fn eps_star(&self, c: &Obj) -> Mor;

    fn fbang(&self, p: &Obj) -> Obj;
    fn fbang_mor(&self, f: &Mor) -> Mor;

    /// `F!p ⊗ F!q -> F!(p ⊗ q)`.
    fn fbang_m(&self, p: &Obj, q: &Obj) -> Mor {
        let dom = self.mono_obj(Mono::LTensor, &self.fbang(p), &self.fbang(q));
        let cod = self.fbang(&self.mono_obj(Mono::PTensor, p, q));
        self.iso(Cat::L, &dom, &cod, &|e| e.clone())
    }

    /// `1 -> F!1`.
    fn fbang_m1(&self) -> Mor {
        let cod = self.fbang(&self.mono_unit(Mono::PTensor));
        self.iso(Cat::L, &self.mono_unit(Mono::LTensor), &cod, &|e| e.clone())
    }

    fn gbang(&self, a: &Obj) -> Result<Obj, SemError>;
    fn gbang_mor(&self, f: &Mor) -> Result<Mor, SemError>;
    /// `G!a ⊗ G!b -> G!(a ⊗ b)`.
    fn gbang_m(&self, a: &Obj, b: &Obj) -> Result<Mor, SemError>;
    /// `1 -> G!1`.
    fn gbang_m1(&self) -> Result<Mor, SemError>;
    /// Counit `F!G!a -> a`.
    fn eps(&self, a: &Obj) -> Result<Mor, SemError>;
    /// Unit `p -> G!F!p`.
    fn eta(&self, p: &Obj) -> Result<Mor, SemError>;

    /// Objects of a category within the instance's scope.
    fn objects(&self, c: Cat) -> Vec<Obj>;

    /// Up to `k` morphisms `a -> b`: all of them when there are at most
    /// `k`, a random selection otherwise.
    fn sample(&self, c: Cat, a: &Obj, b: &Obj, rng: &mut ChaCha8Rng, k: usize) -> Vec<Mor>;

    /// Laws particular to this model.
    fn extra_laws(&self, _report: &mut LawReport, _rng: &mut ChaCha8Rng) {}
}
