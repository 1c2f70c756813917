use std::fmt;

use crate::context::Context;
use crate::prop::Prop;

/// Which turnstile a sequent uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Judgment {
    /// `⊢`
    Linear,
    /// `⊩`
    Persistent,
}

impl Judgment {
    pub fn symbol(self) -> &'static str {
        match self {
            Judgment::Linear => "|-",
            Judgment::Persistent => "||-",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// `left ⊢ right` or `left ⊩ right`.
///
/// Fields are public so that ill-formed persistent sequents can still be
/// represented and rejected by the kernel; `Sequent::new` validates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sequent {
    pub kind: Judgment,
    pub left: Context,
    pub right: Context,
}

impl Sequent {
    /// Build a sequent; `None` if a persistent sequent holds a linear proposition.
    pub fn new(kind: Judgment, left: Context, right: Context) -> Option<Sequent> {
        let s = Sequent { kind, left, right };
        s.is_well_formed().then_some(s)
    }

    pub fn linear(left: impl IntoIterator<Item = Prop>, right: impl IntoIterator<Item = Prop>) -> Sequent {
        Sequent { kind: Judgment::Linear, left: Context::new(left), right: Context::new(right) }
    }

    /// Panics on a linear proposition; meant for literals in code and tests.
    pub fn persistent(left: impl IntoIterator<Item = Prop>, right: impl IntoIterator<Item = Prop>) -> Sequent {
        let s = Sequent { kind: Judgment::Persistent, left: Context::new(left), right: Context::new(right) };
        assert!(s.is_well_formed(), "linear proposition in persistent sequent {s}");
        s
    }

    pub fn is_well_formed(&self) -> bool {
        let moded = self.left.iter().chain(self.right.iter()).all(Prop::is_well_moded);
        moded
            && (self.kind == Judgment::Linear
                || (self.left.all_persistent() && self.right.all_persistent()))
    }

    pub fn side(&self, s: Side) -> &Context {
        match s {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub fn side_mut(&mut self, s: Side) -> &mut Context {
        match s {
            Side::Left => &mut self.left,
            Side::Right => &mut self.right,
        }
    }

    pub fn size(&self) -> usize {
        self.left.size() + self.right.size()
    }

    /// Occurrences that are a producer on the right or a consumer on the left.
    pub fn misplaced(&self) -> Vec<(Side, usize)> {
        let l = self.left.iter().enumerate().filter(|(_, p)| p.is_consumer()).map(|(i, _)| (Side::Left, i));
        let r = self.right.iter().enumerate().filter(|(_, p)| p.is_producer()).map(|(i, _)| (Side::Right, i));
        l.chain(r).collect()
    }

    pub fn with_kind(&self, kind: Judgment) -> Sequent {
        Sequent { kind, ..self.clone() }
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {} {})", self.kind.symbol(), self.left, self.right)
    }
}
