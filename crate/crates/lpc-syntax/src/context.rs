use std::fmt;

use crate::prop::Prop;

/// A finite multiset of propositions, stored sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Context(Vec<Prop>);

impl Context {
    pub fn new(items: impl IntoIterator<Item = Prop>) -> Self {
        let mut v: Vec<Prop> = items.into_iter().collect();
        v.sort();
        Context(v)
    }

    pub fn empty() -> Self {
        Context(Vec::new())
    }

    pub fn single(p: Prop) -> Self {
        Context(vec![p])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Prop] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Prop> {
        self.0.iter()
    }

    pub fn get(&self, i: usize) -> Option<&Prop> {
        self.0.get(i)
    }

    pub fn count(&self, p: &Prop) -> usize {
        self.0.iter().filter(|q| *q == p).count()
    }

    pub fn contains(&self, p: &Prop) -> bool {
        self.0.binary_search(p).is_ok()
    }

    /// Position of the first occurrence.
    pub fn index_of(&self, p: &Prop) -> Option<usize> {
        self.0.iter().position(|q| q == p)
    }

    pub fn all_producer(&self) -> bool {
        self.0.iter().all(Prop::is_producer)
    }

    pub fn all_consumer(&self) -> bool {
        self.0.iter().all(Prop::is_consumer)
    }

    pub fn all_persistent(&self) -> bool {
        self.0.iter().all(Prop::is_persistent)
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Prop::size).sum()
    }

    pub fn with(&self, p: Prop) -> Context {
        let mut v = self.0.clone();
        let at = v.partition_point(|q| *q <= p);
        v.insert(at, p);
        Context(v)
    }

    pub fn with_n(&self, p: &Prop, n: usize) -> Context {
        let mut c = self.clone();
        for _ in 0..n {
            c = c.with(p.clone());
        }
        c
    }

    pub fn without_index(&self, i: usize) -> Context {
        let mut v = self.0.clone();
        v.remove(i);
        Context(v)
    }

    /// Remove one occurrence, if present.
    pub fn remove_one(&self, p: &Prop) -> Option<Context> {
        self.index_of(p).map(|i| self.without_index(i))
    }

    pub fn remove_n(&self, p: &Prop, n: usize) -> Option<Context> {
        let mut c = self.clone();
        for _ in 0..n {
            c = c.remove_one(p)?;
        }
        Some(c)
    }

    /// Multiset union.
    pub fn sum(&self, other: &Context) -> Context {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        v.sort();
        Context(v)
    }

    /// Multiset difference `self - other`; `None` unless `other` is a sub-multiset.
    pub fn minus(&self, other: &Context) -> Option<Context> {
        let mut out = Vec::with_capacity(self.len());
        let mut j = 0;
        for p in &self.0 {
            if j < other.0.len() && other.0[j] == *p {
                j += 1;
            } else {
                out.push(p.clone());
            }
        }
        (j == other.0.len()).then_some(Context(out))
    }

    pub fn is_submultiset(&self, other: &Context) -> bool {
        other.minus(self).is_some()
    }

    /// All ways to split into an ordered pair of sub-multisets, without
    /// repeating a split that differs only in which copy went where.
    pub fn splits(&self) -> Vec<(Context, Context)> {
        let mut groups: Vec<(Prop, usize)> = Vec::new();
        for p in &self.0 {
            match groups.last_mut() {
                Some((q, n)) if q == p => *n += 1,
                _ => groups.push((p.clone(), 1)),
            }
        }
        let mut out = vec![(Vec::new(), Vec::new())];
        for (p, n) in groups {
            let mut next = Vec::with_capacity(out.len() * (n + 1));
            for (l, r) in &out {
                for k in 0..=n {
                    let mut l2: Vec<Prop> = l.clone();
                    let mut r2: Vec<Prop> = r.clone();
                    l2.extend(std::iter::repeat_n(p.clone(), k));
                    r2.extend(std::iter::repeat_n(p.clone(), n - k));
                    next.push((l2, r2));
                }
            }
            out = next;
        }
        out.into_iter().map(|(l, r)| (Context(l), Context(r))).collect()
    }
}

impl FromIterator<Prop> for Context {
    fn from_iter<I: IntoIterator<Item = Prop>>(iter: I) -> Self {
        Context::new(iter)
    }
}

impl<'a> IntoIterator for &'a Context {
    type Item = &'a Prop;
    type IntoIter = std::slice::Iter<'a, Prop>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}
