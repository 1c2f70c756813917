//! Structure every model inherits from its primitives: closure and negation
//! of morphisms in L, De Morgan isomorphisms, biproduct maps, comonoids in
//! P and monoids in C.

use crate::model::{Cat, Mono, Model};
use crate::obj::{Elem, Mor, Obj};
use crate::smc::Mon;

/// The linear category of a model with both monoidal structures.
#[derive(Clone, Copy)]
pub struct Lin<'a> {
    pub m: &'a dyn Model,
    pub t: Mon<'a>,
    pub p: Mon<'a>,
}

impl<'a> Lin<'a> {
    pub fn new(m: &'a dyn Model) -> Self {
        Lin { m, t: Mon::new(m, Mono::LTensor), p: Mon::new(m, Mono::LPar) }
    }

    pub fn id(&self, a: &Obj) -> Mor {
        self.m.id(Cat::L, a)
    }

    pub fn neg(&self, a: &Obj) -> Obj {
        self.m.neg(a)
    }

    pub fn one(&self) -> Obj {
        self.t.unit()
    }

    pub fn bot(&self) -> Obj {
        self.p.unit()
    }

    /// `(a ⅋ b) ⊗ c -> a ⅋ (b ⊗ c)`.
    pub fn delta_r(&self, a: &Obj, b: &Obj, c: &Obj) -> Mor {
        let (t, p) = (self.t, self.p);
        t.sym(&p.obj(a, b), c)
            .then(&t.right(c, &p.sym(a, b)))
            .then(&self.m.delta(c, b, a))
            .then(&p.sym(&t.obj(c, b), a))
            .then(&p.right(a, &t.sym(c, b)))
    }

    /// From `h : x ⊗ b -> c` to `x -> c ⅋ b^⊥`.
    pub fn curry(&self, h: &Mor, x: &Obj, b: &Obj) -> Mor {
        let nb = self.neg(b);
        self.t
            .runit_inv(x)
            .then(&self.t.right(x, &self.m.gamma_one(b)))
            .then(&self.m.delta(x, b, &nb))
            .then(&self.p.left(h, &nb))
    }

    /// From `g : x -> c ⅋ b` to `x ⊗ b^⊥ -> c`.
    pub fn uncurry(&self, g: &Mor, c: &Obj, b: &Obj) -> Mor {
        let nb = self.neg(b);
        let pair = self.t.sym(b, &nb).then(&self.m.gamma_bot(b));
        self.t
            .left(g, &nb)
            .then(&self.delta_r(c, b, &nb))
            .then(&self.p.right(c, &pair))
            .then(&self.p.runit(c))
    }

    /// `f : x -> y` gives `f^⊥ : y^⊥ -> x^⊥`.
    pub fn neg_mor(&self, f: &Mor) -> Mor {
        let (x, y) = (&f.dom, &f.cod);
        let ny = self.neg(y);
        let h = self.t.right(&ny, f).then(&self.m.gamma_bot(y));
        self.curry(&h, &ny, x).then(&self.p.lunit(&self.neg(x)))
    }

    /// `(x ⊗ y)^⊥ -> x^⊥ ⅋ y^⊥`.
    pub fn dm_tensor(&self, x: &Obj, y: &Obj) -> Mor {
        let z = self.neg(&self.t.obj(x, y));
        let k = self
            .t
            .assoc(&z, y, x)
            .then(&self.t.right(&z, &self.t.sym(y, x)))
            .then(&self.m.gamma_bot(&self.t.obj(x, y)));
        let zy = self.t.obj(&z, y);
        let h = self.curry(&k, &zy, x).then(&self.p.lunit(&self.neg(x)));
        self.curry(&h, &z, y)
    }

    /// `(x ⅋ y)^⊥ -> x^⊥ ⊗ y^⊥`.
    pub fn dm_par(&self, x: &Obj, y: &Obj) -> Mor {
        self.neg_mor(&self.dm_tensor(&self.neg(x), &self.neg(y)))
    }

    /// `1^⊥ -> ⊥`.
    pub fn negunit_to_bot(&self) -> Mor {
        let n1 = self.neg(&self.one());
        self.t.runit_inv(&n1).then(&self.m.gamma_bot(&self.one()))
    }

    pub fn inverse(&self, f: &Mor) -> Mor {
        self.m
            .inverse(Cat::L, f)
            .unwrap_or_else(|| panic!("expected an isomorphism {} -> {}", f.dom, f.cod))
    }

    /// Projection from `a & b`.
    pub fn proj(&self, a: &Obj, b: &Obj, second: bool) -> Mor {
        let ab = self.m.biprod(a, b);
        let (ia, ib) = (self.id(a).mat, self.id(b).mat);
        let q = self.m.ring();
        let mat = if second {
            crate::Mat::zeros(b.len(), a.len(), q).hstack(&ib)
        } else {
            ia.hstack(&crate::Mat::zeros(a.len(), b.len(), q))
        };
        Mor::new(ab, if second { b.clone() } else { a.clone() }, mat)
    }

    /// Injection into `a ⊕ b`.
    pub fn inj(&self, a: &Obj, b: &Obj, second: bool) -> Mor {
        let ab = self.m.biprod(a, b);
        let (ia, ib) = (self.id(a).mat, self.id(b).mat);
        let q = self.m.ring();
        let mat = if second {
            crate::Mat::zeros(a.len(), b.len(), q).vstack(&ib)
        } else {
            ia.vstack(&crate::Mat::zeros(b.len(), a.len(), q))
        };
        Mor::new(if second { b.clone() } else { a.clone() }, ab, mat)
    }

    /// `⟨f, g⟩ : c -> a & b`.
    pub fn pair(&self, f: &Mor, g: &Mor) -> Mor {
        assert_eq!(f.dom, g.dom);
        Mor::new(f.dom.clone(), self.m.biprod(&f.cod, &g.cod), f.mat.vstack(&g.mat))
    }

    /// `[f, g] : a ⊕ b -> c`.
    pub fn copair(&self, f: &Mor, g: &Mor) -> Mor {
        assert_eq!(f.cod, g.cod);
        Mor::new(self.m.biprod(&f.dom, &g.dom), f.cod.clone(), f.mat.hstack(&g.mat))
    }

    pub fn to_zero(&self, a: &Obj) -> Mor {
        Mor::new(a.clone(), self.m.zero(), crate::Mat::zeros(0, a.len(), self.m.ring()))
    }

    pub fn from_zero(&self, a: &Obj) -> Mor {
        Mor::new(self.m.zero(), a.clone(), crate::Mat::zeros(a.len(), 0, self.m.ring()))
    }
}

/// Counit `p -> 1` of the comonoid on a P-object.
pub fn counit(m: &dyn Model, p: &Obj) -> Mor {
    let one = m.mono_unit(Mono::PTensor);
    let star = one.elem(0).clone();
    Mor::function(p, &one, m.ring(), |_| star.clone())
}

/// Comultiplication `p -> p ⊗ p`.
pub fn diag(m: &dyn Model, p: &Obj) -> Mor {
    let pp = m.mono_obj(Mono::PTensor, p, p);
    Mor::function(p, &pp, m.ring(), |e| Elem::pair(e, e))
}

/// `⅋` on C, carried over from P: `c ⅋ d = (c_* ⊗ d_*)^*`.
pub fn c_par(m: &dyn Model, c: &Obj, d: &Obj) -> Obj {
    m.star(&m.mono_obj(Mono::PTensor, &m.lstar(c), &m.lstar(d)))
}

/// Unit of `⅋` on C.
pub fn c_bot(m: &dyn Model) -> Obj {
    m.star(&m.mono_unit(Mono::PTensor))
}

/// Multiplication `c ⅋ c -> c` of the monoid on a C-object.
pub fn c_mult(m: &dyn Model, c: &Obj) -> Mor {
    m.star_mor(&diag(m, &m.lstar(c))).then(&m.eps_star(c))
}

/// Unit `⊥ -> c` of the monoid on a C-object.
pub fn c_unit(m: &dyn Model, c: &Obj) -> Mor {
    m.star_mor(&counit(m, &m.lstar(c))).then(&m.eps_star(c))
}
