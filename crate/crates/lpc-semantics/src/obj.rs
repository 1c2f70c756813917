use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::mat::Mat;

/// Label of an element of a carrier (a basis vector, a set element, a
/// poset element). Structured so that constructions can be relabelled.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Elem {
    Star,
    Atom(u32),
    Pair(Box<Elem>, Box<Elem>),
    Inl(Box<Elem>),
    Inr(Box<Elem>),
    /// Dual basis vector.
    Bar(Box<Elem>),
    Vector(Vec<u8>),
    Set(Vec<Elem>),
}

impl Elem {
    pub fn pair(a: &Elem, b: &Elem) -> Elem {
        Elem::Pair(Box::new(a.clone()), Box::new(b.clone()))
    }

    /// Components of a pair label.
    pub fn split(&self) -> (&Elem, &Elem) {
        match self {
            Elem::Pair(a, b) => (a, b),
            e => panic!("{e} is not a pair"),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Star => f.write_str("*"),
            Elem::Atom(i) if *i < 26 => write!(f, "{}", (b'a' + *i as u8) as char),
            Elem::Atom(i) => write!(f, "x{i}"),
            Elem::Pair(a, b) => write!(f, "({a},{b})"),
            Elem::Inl(a) => write!(f, "l.{a}"),
            Elem::Inr(a) => write!(f, "r.{a}"),
            Elem::Bar(a) => write!(f, "{a}'"),
            Elem::Vector(v) => {
                let s: Vec<String> = v.iter().map(u8::to_string).collect();
                write!(f, "[{}]", s.join(""))
            }
            Elem::Set(xs) => {
                let s: Vec<String> = xs.iter().map(Elem::to_string).collect();
                write!(f, "{{{}}}", s.join(","))
            }
        }
    }
}

#[derive(Debug)]
struct ObjData {
    elems: Vec<Elem>,
    order: Option<Mat>,
    index: HashMap<Elem, usize>,
}

/// An object: an ordered carrier, optionally partially ordered.
///
/// `order.get(i, j) == 1` means element `i` is below element `j`.
#[derive(Clone, Debug)]
pub struct Obj(Arc<ObjData>);

impl PartialEq for Obj {
    fn eq(&self, other: &Obj) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.elems == other.0.elems && self.0.order == other.0.order)
    }
}

impl Eq for Obj {}

impl Obj {
    pub fn set(elems: Vec<Elem>) -> Obj {
        Obj::build(elems, None)
    }

    pub fn poset(elems: Vec<Elem>, order: Mat) -> Obj {
        assert_eq!(order.rows(), elems.len());
        Obj::build(elems, Some(order))
    }

    /// Poset whose order is given by a predicate on element indices.
    pub fn poset_by(elems: Vec<Elem>, leq: impl Fn(usize, usize) -> bool) -> Obj {
        let n = elems.len();
        let order = Mat::from_fn(n, n, 0, |i, j| u8::from(leq(i, j)));
        Obj::poset(elems, order)
    }

    fn build(elems: Vec<Elem>, order: Option<Mat>) -> Obj {
        let index: HashMap<Elem, usize> = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        assert_eq!(index.len(), elems.len(), "duplicate labels in a carrier");
        Obj(Arc::new(ObjData { elems, order, index }))
    }

    pub fn len(&self) -> usize {
        self.0.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.elems.is_empty()
    }

    pub fn elems(&self) -> &[Elem] {
        &self.0.elems
    }

    pub fn elem(&self, i: usize) -> &Elem {
        &self.0.elems[i]
    }

    pub fn order(&self) -> Option<&Mat> {
        self.0.order.as_ref()
    }

    pub fn is_poset(&self) -> bool {
        self.0.order.is_some()
    }

    pub fn index_of(&self, e: &Elem) -> Option<usize> {
        self.0.index.get(e).copied()
    }

    pub fn idx(&self, e: &Elem) -> usize {
        self.index_of(e).unwrap_or_else(|| panic!("{e} is not an element of {self}"))
    }

    /// The order, or equality for a plain set.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        match &self.0.order {
            Some(o) => o.get(i, j) == 1,
            None => i == j,
        }
    }

    /// Cartesian product, labels `Pair(a, b)` with `a` major; product order.
    pub fn product(a: &Obj, b: &Obj) -> Obj {
        let elems = a.elems().iter().flat_map(|x| b.elems().iter().map(move |y| Elem::pair(x, y))).collect();
        let order = match (a.order(), b.order()) {
            (Some(p), Some(q)) => Some(p.kron(q)),
            (None, None) => None,
            _ => panic!("product of a set and a poset"),
        };
        Obj::build(elems, order)
    }

    /// Disjoint union, `Inl` labels first.
    pub fn sum(a: &Obj, b: &Obj) -> Obj {
        let elems = a
            .elems()
            .iter()
            .map(|x| Elem::Inl(Box::new(x.clone())))
            .chain(b.elems().iter().map(|y| Elem::Inr(Box::new(y.clone()))))
            .collect();
        let order = match (a.order(), b.order()) {
            (Some(p), Some(q)) => {
                let (m, n) = (p.rows(), q.rows());
                Some(Mat::from_fn(m + n, m + n, 0, |i, j| match (i < m, j < m) {
                    (true, true) => p.get(i, j),
                    (false, false) => q.get(i - m, j - m),
                    _ => 0,
                }))
            }
            (None, None) => None,
            _ => panic!("sum of a set and a poset"),
        };
        Obj::build(elems, order)
    }

    /// The same carrier with the order reversed.
    pub fn opposite(&self) -> Obj {
        Obj::build(self.elems().to_vec(), self.order().map(Mat::transpose))
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.elems().iter().map(Elem::to_string).collect();
        write!(f, "{{{}}}", s.join(" "))
    }
}

/// A morphism: a matrix together with its domain and codomain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mor {
    pub dom: Obj,
    pub cod: Obj,
    pub mat: Mat,
}

impl Mor {
    pub fn new(dom: Obj, cod: Obj, mat: Mat) -> Mor {
        assert_eq!((mat.rows(), mat.cols()), (cod.len(), dom.len()), "matrix shape does not match its objects");
        Mor { dom, cod, mat }
    }

    /// The 0/1 matrix of a function between carriers.
    pub fn function(dom: &Obj, cod: &Obj, q: u8, f: impl Fn(&Elem) -> Elem) -> Mor {
        let mut m = Mat::zeros(cod.len(), dom.len(), q);
        for (j, x) in dom.elems().iter().enumerate() {
            m.set(cod.idx(&f(x)), j, 1);
        }
        Mor::new(dom.clone(), cod.clone(), m)
    }

    /// Function given by images of element indices.
    pub fn from_indices(dom: &Obj, cod: &Obj, q: u8, image: &[usize]) -> Mor {
        let mut m = Mat::zeros(cod.len(), dom.len(), q);
        for (j, &i) in image.iter().enumerate() {
            m.set(i, j, 1);
        }
        Mor::new(dom.clone(), cod.clone(), m)
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &Mor) -> Mor {
        assert!(
            g.dom == self.cod,
            "cannot compose: codomain {} against domain {}",
            self.cod,
            g.dom
        );
        Mor::new(self.dom.clone(), g.cod.clone(), g.mat.mul(&self.mat))
    }

    /// Index images when the matrix is a function.
    pub fn as_function(&self) -> Option<Vec<usize>> {
        self.mat.as_function()
    }

    pub fn q(&self) -> u8 {
        self.mat.modulus()
    }
}

impl fmt::Display for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} -> {}", self.dom, self.cod)?;
        write!(f, "{}", self.mat)
    }
}
