use std::fmt;
use std::sync::Arc;

use crate::error::ModeError;

/// Syntactic class of a proposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    /// Linear.
    L,
    /// Producer.
    P,
    /// Consumer.
    C,
}

impl Mode {
    pub fn is_persistent(self) -> bool {
        !matches!(self, Mode::L)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::L => "L",
            Mode::P => "P",
            Mode::C => "C",
        })
    }
}

/// A proposition of the atom-free three-moded grammar.
///
/// Children sit behind `Arc` so that cloning is cheap; search and cut
/// elimination copy contexts constantly. The derived `Ord` is the total
/// structural order used to canonicalize multisets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Prop {
    Top,
    Zero,
    OneL,
    BotL,
    OneP,
    BotC,
    With(Arc<Prop>, Arc<Prop>),
    Plus(Arc<Prop>, Arc<Prop>),
    TensorL(Arc<Prop>, Arc<Prop>),
    ParL(Arc<Prop>, Arc<Prop>),
    TensorP(Arc<Prop>, Arc<Prop>),
    ParC(Arc<Prop>, Arc<Prop>),
    FBang(Arc<Prop>),
    FWhy(Arc<Prop>),
    GBang(Arc<Prop>),
    GWhy(Arc<Prop>),
}

fn expect(p: &Prop, want: Mode, ctor: &'static str) -> Result<(), ModeError> {
    let got = p.mode();
    if got == want {
        Ok(())
    } else {
        Err(ModeError { ctor, want, got })
    }
}

impl Prop {
    pub fn mode(&self) -> Mode {
        use Prop::*;
        match self {
            Top | Zero | OneL | BotL | With(..) | Plus(..) | TensorL(..) | ParL(..) | FBang(_)
            | FWhy(_) => Mode::L,
            OneP | TensorP(..) | GBang(_) => Mode::P,
            BotC | ParC(..) | GWhy(_) => Mode::C,
        }
    }

    pub fn is_producer(&self) -> bool {
        self.mode() == Mode::P
    }

    pub fn is_consumer(&self) -> bool {
        self.mode() == Mode::C
    }

    pub fn is_persistent(&self) -> bool {
        self.mode().is_persistent()
    }

    pub fn with(a: Prop, b: Prop) -> Result<Prop, ModeError> {
        expect(&a, Mode::L, "&")?;
        expect(&b, Mode::L, "&")?;
        Ok(Prop::With(Arc::new(a), Arc::new(b)))
    }

    pub fn plus(a: Prop, b: Prop) -> Result<Prop, ModeError> {
        expect(&a, Mode::L, "+")?;
        expect(&b, Mode::L, "+")?;
        Ok(Prop::Plus(Arc::new(a), Arc::new(b)))
    }

    /// Tensor; the variant follows the operands' mode (L or P).
    pub fn tensor(a: Prop, b: Prop) -> Result<Prop, ModeError> {
        match a.mode() {
            Mode::L => {
                expect(&b, Mode::L, "tensor")?;
                Ok(Prop::TensorL(Arc::new(a), Arc::new(b)))
            }
            Mode::P => {
                expect(&b, Mode::P, "tensor")?;
                Ok(Prop::TensorP(Arc::new(a), Arc::new(b)))
            }
            Mode::C => Err(ModeError { ctor: "tensor", want: Mode::L, got: Mode::C }),
        }
    }

    /// Par; the variant follows the operands' mode (L or C).
    pub fn par(a: Prop, b: Prop) -> Result<Prop, ModeError> {
        match a.mode() {
            Mode::L => {
                expect(&b, Mode::L, "par")?;
                Ok(Prop::ParL(Arc::new(a), Arc::new(b)))
            }
            Mode::C => {
                expect(&b, Mode::C, "par")?;
                Ok(Prop::ParC(Arc::new(a), Arc::new(b)))
            }
            Mode::P => Err(ModeError { ctor: "par", want: Mode::L, got: Mode::P }),
        }
    }

    pub fn fbang(p: Prop) -> Result<Prop, ModeError> {
        expect(&p, Mode::P, "F!")?;
        Ok(Prop::FBang(Arc::new(p)))
    }

    pub fn fwhy(c: Prop) -> Result<Prop, ModeError> {
        expect(&c, Mode::C, "F?")?;
        Ok(Prop::FWhy(Arc::new(c)))
    }

    pub fn gbang(a: Prop) -> Result<Prop, ModeError> {
        expect(&a, Mode::L, "!")?;
        Ok(Prop::GBang(Arc::new(a)))
    }

    pub fn gwhy(a: Prop) -> Result<Prop, ModeError> {
        expect(&a, Mode::L, "?")?;
        Ok(Prop::GWhy(Arc::new(a)))
    }

    /// Immediate subformulas, left to right.
    pub fn children(&self) -> Vec<&Prop> {
        use Prop::*;
        match self {
            Top | Zero | OneL | BotL | OneP | BotC => vec![],
            With(a, b) | Plus(a, b) | TensorL(a, b) | ParL(a, b) | TensorP(a, b) | ParC(a, b) => {
                vec![a, b]
            }
            FBang(a) | FWhy(a) | GBang(a) | GWhy(a) => vec![a],
        }
    }

    /// Node count.
    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(Prop::size).sum::<usize>()
    }

    /// Height of the tree; a constant has depth 1.
    pub fn depth(&self) -> usize {
        1 + self.children().into_iter().map(Prop::depth).max().unwrap_or(0)
    }

    /// Every constructor receives operands of the mode it demands.
    ///
    /// Values built through the smart constructors or the parser always pass;
    /// the enum itself cannot rule out hand-built nonsense.
    pub fn is_well_moded(&self) -> bool {
        use Prop::*;
        let both = |a: &Prop, b: &Prop, m| a.mode() == m && b.mode() == m && a.is_well_moded() && b.is_well_moded();
        match self {
            Top | Zero | OneL | BotL | OneP | BotC => true,
            With(a, b) | Plus(a, b) | TensorL(a, b) | ParL(a, b) => both(a, b, Mode::L),
            TensorP(a, b) => both(a, b, Mode::P),
            ParC(a, b) => both(a, b, Mode::C),
            FBang(p) => p.mode() == Mode::P && p.is_well_moded(),
            FWhy(c) => c.mode() == Mode::C && c.is_well_moded(),
            GBang(a) | GWhy(a) => a.mode() == Mode::L && a.is_well_moded(),
        }
    }

    /// The duality meta-operation: `(-)^⊥` on L, `(-)^*` on P, `(-)_*` on C.
    pub fn dual(&self) -> Prop {
        use Prop::*;
        let d = |a: &Arc<Prop>| Arc::new(a.dual());
        match self {
            Top => Zero,
            Zero => Top,
            OneL => BotL,
            BotL => OneL,
            OneP => BotC,
            BotC => OneP,
            With(a, b) => Plus(d(a), d(b)),
            Plus(a, b) => With(d(a), d(b)),
            TensorL(a, b) => ParL(d(a), d(b)),
            ParL(a, b) => TensorL(d(a), d(b)),
            TensorP(a, b) => ParC(d(a), d(b)),
            ParC(a, b) => TensorP(d(a), d(b)),
            FBang(p) => FWhy(d(p)),
            FWhy(c) => FBang(d(c)),
            GBang(a) => GWhy(d(a)),
            GWhy(a) => GBang(d(a)),
        }
    }

    /// `A^⊥ ⅋ 0`, defined for linear propositions only.
    pub fn neg(&self) -> Result<Prop, ModeError> {
        expect(self, Mode::L, "neg")?;
        Ok(Prop::ParL(Arc::new(self.dual()), Arc::new(Prop::Zero)))
    }
}

impl fmt::Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Prop::*;
        match self {
            Top => f.write_str("T"),
            Zero => f.write_str("0"),
            OneL => f.write_str("1"),
            BotL => f.write_str("B"),
            OneP => f.write_str("1p"),
            BotC => f.write_str("Bc"),
            With(a, b) => write!(f, "(& {a} {b})"),
            Plus(a, b) => write!(f, "(+ {a} {b})"),
            TensorL(a, b) | TensorP(a, b) => write!(f, "(tensor {a} {b})"),
            ParL(a, b) | ParC(a, b) => write!(f, "(par {a} {b})"),
            FBang(a) => write!(f, "(F! {a})"),
            FWhy(a) => write!(f, "(F? {a})"),
            GBang(a) => write!(f, "(! {a})"),
            GWhy(a) => write!(f, "(? {a})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_of_roots() {
        assert_eq!(Prop::OneL.mode(), Mode::L);
        assert_eq!(Prop::gbang(Prop::Top).unwrap().mode(), Mode::P);
        assert_eq!(Prop::fwhy(Prop::BotC).unwrap().mode(), Mode::L);
    }

    #[test]
    fn dual_table_spots() {
        assert_eq!(Prop::OneL.dual(), Prop::BotL);
        assert_eq!(
            Prop::gbang(Prop::Top).unwrap().dual(),
            Prop::gwhy(Prop::Zero).unwrap()
        );
        let p = Prop::tensor(Prop::OneP, Prop::gbang(Prop::OneL).unwrap()).unwrap();
        assert_eq!(
            p.dual(),
            Prop::par(Prop::BotC, Prop::gwhy(Prop::BotL).unwrap()).unwrap()
        );
    }

    #[test]
    fn neg_examples() {
        assert_eq!(
            Prop::OneL.neg().unwrap(),
            Prop::par(Prop::BotL, Prop::Zero).unwrap()
        );
        assert_eq!(Prop::Top.neg().unwrap(), Prop::par(Prop::Zero, Prop::Zero).unwrap());
        assert_eq!(
            Prop::fbang(Prop::OneP).unwrap().neg().unwrap(),
            Prop::par(Prop::fwhy(Prop::BotC).unwrap(), Prop::Zero).unwrap()
        );
        assert!(Prop::OneP.neg().is_err());
    }

    #[test]
    fn mixed_tensor_rejected() {
        assert!(Prop::tensor(Prop::OneL, Prop::BotC).is_err());
        assert!(Prop::par(Prop::OneP, Prop::OneP).is_err());
    }

    #[test]
    fn size_and_depth() {
        let p = Prop::fbang(Prop::gbang(Prop::Top).unwrap()).unwrap();
        assert_eq!(p.size(), 3);
        assert_eq!(p.depth(), 3);
        assert_eq!(Prop::Zero.depth(), 1);
    }
}
