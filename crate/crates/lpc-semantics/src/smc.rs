//! Symmetric monoidal structure shared by every model: product labels,
//! coherence isomorphisms by relabelling, and rebracketing of trees.

use crate::model::{Cat, Mono, Model};
use crate::obj::{Elem, Mor, Obj};

/// One monoidal structure of a model.
#[derive(Clone, Copy)]
pub struct Mon<'a> {
    pub model: &'a dyn Model,
    pub kind: Mono,
}

impl<'a> Mon<'a> {
    pub fn new(model: &'a dyn Model, kind: Mono) -> Self {
        Mon { model, kind }
    }

    pub fn cat(&self) -> Cat {
        self.kind.cat()
    }

    pub fn unit(&self) -> Obj {
        self.model.mono_unit(self.kind)
    }

    pub fn obj(&self, a: &Obj, b: &Obj) -> Obj {
        self.model.mono_obj(self.kind, a, b)
    }

    pub fn mor(&self, f: &Mor, g: &Mor) -> Mor {
        self.model.mono_mor(self.kind, f, g)
    }

    pub fn id(&self, a: &Obj) -> Mor {
        self.model.id(self.cat(), a)
    }

    /// `f ⊗ id`.
    pub fn left(&self, f: &Mor, b: &Obj) -> Mor {
        self.mor(f, &self.id(b))
    }

    /// `id ⊗ g`.
    pub fn right(&self, a: &Obj, g: &Mor) -> Mor {
        self.mor(&self.id(a), g)
    }

    fn relabel(&self, dom: Obj, cod: Obj, f: impl Fn(&Elem) -> Elem) -> Mor {
        self.model.iso(self.cat(), &dom, &cod, &f)
    }

    /// `(a ⊗ b) ⊗ c -> a ⊗ (b ⊗ c)`.
    pub fn assoc(&self, a: &Obj, b: &Obj, c: &Obj) -> Mor {
        let dom = self.obj(&self.obj(a, b), c);
        let cod = self.obj(a, &self.obj(b, c));
        self.relabel(dom, cod, |e| {
            let (xy, z) = e.split();
            let (x, y) = xy.split();
            Elem::pair(x, &Elem::pair(y, z))
        })
    }

    pub fn assoc_inv(&self, a: &Obj, b: &Obj, c: &Obj) -> Mor {
        let dom = self.obj(a, &self.obj(b, c));
        let cod = self.obj(&self.obj(a, b), c);
        self.relabel(dom, cod, |e| {
            let (x, yz) = e.split();
            let (y, z) = yz.split();
            Elem::pair(&Elem::pair(x, y), z)
        })
    }

    /// `1 ⊗ a -> a`.
    pub fn lunit(&self, a: &Obj) -> Mor {
        let dom = self.obj(&self.unit(), a);
        self.relabel(dom, a.clone(), |e| e.split().1.clone())
    }

    pub fn lunit_inv(&self, a: &Obj) -> Mor {
        let u = self.unit();
        let star = u.elem(0).clone();
        self.relabel(a.clone(), self.obj(&u, a), move |e| Elem::pair(&star, e))
    }

    /// `a ⊗ 1 -> a`.
    pub fn runit(&self, a: &Obj) -> Mor {
        let dom = self.obj(a, &self.unit());
        self.relabel(dom, a.clone(), |e| e.split().0.clone())
    }

    pub fn runit_inv(&self, a: &Obj) -> Mor {
        let u = self.unit();
        let star = u.elem(0).clone();
        self.relabel(a.clone(), self.obj(a, &u), move |e| Elem::pair(e, &star))
    }

    /// `a ⊗ b -> b ⊗ a`.
    pub fn sym(&self, a: &Obj, b: &Obj) -> Mor {
        self.relabel(self.obj(a, b), self.obj(b, a), |e| {
            let (x, y) = e.split();
            Elem::pair(y, x)
        })
    }

    /// Left fold; the unit when empty.
    pub fn fold(&self, objs: &[Obj]) -> Obj {
        objs.iter().cloned().reduce(|acc, x| self.obj(&acc, &x)).unwrap_or_else(|| self.unit())
    }
}

/// A bracketing of tagged objects, for building structural isomorphisms.
#[derive(Clone, Debug)]
pub enum Tree {
    Unit,
    Leaf(usize, Obj),
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn node(a: Tree, b: Tree) -> Tree {
        Tree::Node(Box::new(a), Box::new(b))
    }

    /// Left fold of the leaves; `Unit` when empty.
    pub fn fold(items: impl IntoIterator<Item = (usize, Obj)>) -> Tree {
        items
            .into_iter()
            .map(|(t, o)| Tree::Leaf(t, o))
            .reduce(Tree::node)
            .unwrap_or(Tree::Unit)
    }

    pub fn obj(&self, m: &Mon) -> Obj {
        match self {
            Tree::Unit => m.unit(),
            Tree::Leaf(_, o) => o.clone(),
            Tree::Node(a, b) => m.obj(&a.obj(m), &b.obj(m)),
        }
    }

    pub fn leaves(&self) -> Vec<(usize, Obj)> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<(usize, Obj)>) {
        match self {
            Tree::Unit => {}
            Tree::Leaf(t, o) => out.push((*t, o.clone())),
            Tree::Node(a, b) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }
}

/// The structural isomorphism between two trees over the same tags.
pub fn shuffle(m: &Mon, from: &Tree, to: &Tree) -> Mor {
    let (flat_from, _) = normalize(m, from);
    let (_, flat_to) = normalize(m, to);
    let mut items = from.leaves();
    let target: Vec<usize> = to.leaves().iter().map(|(t, _)| *t).collect();
    assert_eq!(items.len(), target.len(), "trees have different leaves");
    let mut f = flat_from;
    for (p, want) in target.iter().enumerate() {
        let k = items.iter().position(|(t, _)| t == want).expect("trees have different leaves");
        for i in (p..k).rev() {
            f = f.then(&swap(m, &items, i));
            items.swap(i, i + 1);
        }
    }
    f.then(&flat_to)
}

/// Exchange items `i` and `i + 1` of a left fold.
fn swap(m: &Mon, items: &[(usize, Obj)], i: usize) -> Mor {
    let objs: Vec<Obj> = items.iter().map(|(_, o)| o.clone()).collect();
    let mut f = if i == 0 {
        m.sym(&objs[0], &objs[1])
    } else {
        let before = m.fold(&objs[..i]);
        let (x, y) = (&objs[i], &objs[i + 1]);
        m.assoc(&before, x, y)
            .then(&m.right(&before, &m.sym(x, y)))
            .then(&m.assoc_inv(&before, y, x))
    };
    for x in &objs[i + 2..] {
        f = m.left(&f, x);
    }
    f
}

/// Isomorphisms between a tree and the left fold of its leaves.
fn normalize(m: &Mon, t: &Tree) -> (Mor, Mor) {
    match t {
        Tree::Unit | Tree::Leaf(..) => {
            let id = m.id(&t.obj(m));
            (id.clone(), id)
        }
        Tree::Node(a, b) => {
            let (fa, ga) = normalize(m, a);
            let (fb, gb) = normalize(m, b);
            let la: Vec<Obj> = a.leaves().into_iter().map(|(_, o)| o).collect();
            let lb: Vec<Obj> = b.leaves().into_iter().map(|(_, o)| o).collect();
            let (j, ji) = join(m, &la, &lb);
            (m.mor(&fa, &fb).then(&j), ji.then(&m.mor(&ga, &gb)))
        }
    }
}

/// `fold(xs) ⊗ fold(ys) -> fold(xs ++ ys)` and its inverse.
fn join(m: &Mon, xs: &[Obj], ys: &[Obj]) -> (Mor, Mor) {
    let fx = m.fold(xs);
    if xs.is_empty() {
        let fy = m.fold(ys);
        return (m.lunit(&fy), m.lunit_inv(&fy));
    }
    match ys {
        [] => (m.runit(&fx), m.runit_inv(&fx)),
        [_] => {
            let id = m.id(&m.obj(&fx, &ys[0]));
            (id.clone(), id)
        }
        [init @ .., last] => {
            let fi = m.fold(init);
            let (j, ji) = join(m, xs, init);
            (
                m.assoc_inv(&fx, &fi, last).then(&m.left(&j, last)),
                m.left(&ji, last).then(&m.assoc(&fx, &fi, last)),
            )
        }
    }
}
