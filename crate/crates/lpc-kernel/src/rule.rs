use std::fmt;
use std::str::FromStr;

use lpc_syntax::Judgment;

/// Every primitive inference rule. The set is closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    // linear sequent
    Ax,
    TopR,
    ZeroL,
    WithL1,
    WithL2,
    WithR,
    PlusR1,
    PlusR2,
    PlusL,
    TensorL,
    TensorR,
    OneL,
    OneR,
    ParL,
    ParR,
    BotL,
    BotR,
    // persistent sequent
    AxP,
    AxC,
    TensorPL,
    TensorPR,
    OnePL,
    OnePR,
    ParCL,
    ParCR,
    BotCL,
    BotCR,
    // adjunctions
    FBangL,
    FBangR,
    FWhyL,
    FWhyR,
    GBangL,
    GBangR,
    GWhyL,
    GWhyR,
    // structural
    WeakL,
    WeakR,
    ContrL,
    ContrR,
    PWeakL,
    PWeakR,
    PContrL,
    PContrR,
    // cuts
    CutL,
    CutP,
    CutPP,
    CutC,
    CutCP,
}

use RuleId::*;

impl RuleId {
    pub const ALL: [RuleId; 48] = [
        Ax, TopR, ZeroL, WithL1, WithL2, WithR, PlusR1, PlusR2, PlusL, TensorL, TensorR, OneL, OneR,
        ParL, ParR, BotL, BotR, AxP, AxC, TensorPL, TensorPR, OnePL, OnePR, ParCL, ParCR, BotCL,
        BotCR, FBangL, FBangR, FWhyL, FWhyR, GBangL, GBangR, GWhyL, GWhyR, WeakL, WeakR, ContrL,
        ContrR, PWeakL, PWeakR, PContrL, PContrR, CutL, CutP, CutPP, CutC, CutCP,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Ax => "ax",
            TopR => "top-r",
            ZeroL => "zero-l",
            WithL1 => "with-l1",
            WithL2 => "with-l2",
            WithR => "with-r",
            PlusR1 => "plus-r1",
            PlusR2 => "plus-r2",
            PlusL => "plus-l",
            TensorL => "tensor-l",
            TensorR => "tensor-r",
            OneL => "one-l",
            OneR => "one-r",
            ParL => "par-l",
            ParR => "par-r",
            BotL => "bot-l",
            BotR => "bot-r",
            AxP => "ax-p",
            AxC => "ax-c",
            TensorPL => "tensor-p-l",
            TensorPR => "tensor-p-r",
            OnePL => "one-p-l",
            OnePR => "one-p-r",
            ParCL => "par-c-l",
            ParCR => "par-c-r",
            BotCL => "bot-c-l",
            BotCR => "bot-c-r",
            FBangL => "fbang-l",
            FBangR => "fbang-r",
            FWhyL => "fwhy-l",
            FWhyR => "fwhy-r",
            GBangL => "gbang-l",
            GBangR => "gbang-r",
            GWhyL => "gwhy-l",
            GWhyR => "gwhy-r",
            WeakL => "weak-l",
            WeakR => "weak-r",
            ContrL => "contr-l",
            ContrR => "contr-r",
            PWeakL => "weak-p-l",
            PWeakR => "weak-p-r",
            PContrL => "contr-p-l",
            PContrR => "contr-p-r",
            CutL => "cut-l",
            CutP => "cut-p",
            CutPP => "cut-p-pers",
            CutC => "cut-c",
            CutCP => "cut-c-pers",
        }
    }

    /// Conventional symbolic name, for display only.
    pub fn symbol(self) -> &'static str {
        match self {
            Ax => "Ax⊢",
            TopR => "⊤R",
            ZeroL => "0L",
            WithL1 => "&L1",
            WithL2 => "&L2",
            WithR => "&R",
            PlusR1 => "⊕R1",
            PlusR2 => "⊕R2",
            PlusL => "⊕L",
            TensorL => "⊗L",
            TensorR => "⊗R",
            OneL => "1L",
            OneR => "1R",
            ParL => "⅋L",
            ParR => "⅋R",
            BotL => "⊥L",
            BotR => "⊥R",
            AxP => "Ax_P⊩",
            AxC => "Ax_C⊩",
            TensorPL => "⊗_P⊩L",
            TensorPR => "⊗_P⊩R",
            OnePL => "1_P⊩L",
            OnePR => "1_P⊩R",
            ParCL => "⅋_C⊩L",
            ParCR => "⅋_C⊩R",
            BotCL => "⊥_C⊩L",
            BotCR => "⊥_C⊩R",
            FBangL => "F!L",
            FBangR => "F!R",
            FWhyL => "F?L",
            FWhyR => "F?R",
            GBangL => "G!L",
            GBangR => "G!R",
            GWhyL => "G?L",
            GWhyR => "G?R",
            WeakL => "W⊢L",
            WeakR => "W⊢R",
            ContrL => "C⊢L",
            ContrR => "C⊢R",
            PWeakL => "W⊩L",
            PWeakR => "W⊩R",
            PContrL => "C⊩L",
            PContrR => "C⊩R",
            CutL => "Cut_L⊢",
            CutP => "Cut_P⊢",
            CutPP => "Cut_P⊩",
            CutC => "Cut_C⊢",
            CutCP => "Cut_C⊩",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Ax | TopR | ZeroL | OneR | BotL | AxP | AxC | OnePR | BotCL => 0,
            WithR | PlusL | TensorR | ParL | TensorPR | ParCL | CutL | CutP | CutPP | CutC | CutCP => 2,
            _ => 1,
        }
    }

    /// Number of principal positions recorded on a node.
    pub fn principal_count(self) -> usize {
        match self {
            Ax | AxP | AxC => 2,
            r if r.is_cut() => 2,
            _ => 1,
        }
    }

    pub fn is_cut(self) -> bool {
        matches!(self, CutL | CutP | CutPP | CutC | CutCP)
    }

    pub fn is_structural(self) -> bool {
        matches!(self, WeakL | WeakR | ContrL | ContrR | PWeakL | PWeakR | PContrL | PContrR)
    }

    /// Judgment of the conclusion.
    pub fn conclusion_judgment(self) -> Judgment {
        match self {
            AxP | AxC | TensorPL | TensorPR | OnePL | OnePR | ParCL | ParCR | BotCL | BotCR | GBangR
            | GWhyL | PWeakL | PWeakR | PContrL | PContrR | CutPP | CutCP => Judgment::Persistent,
            _ => Judgment::Linear,
        }
    }

    /// Judgment of each premise, in order.
    pub fn premise_judgments(self) -> Vec<Judgment> {
        use Judgment::*;
        match self {
            FBangR | FWhyL => vec![Persistent],
            GBangR | GWhyL => vec![Linear],
            CutL => vec![Linear, Linear],
            CutP => vec![Persistent, Linear],
            CutPP => vec![Persistent, Persistent],
            CutC => vec![Linear, Persistent],
            CutCP => vec![Persistent, Persistent],
            r => vec![r.conclusion_judgment(); r.arity()],
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown rule `{0}`")]
pub struct UnknownRule(pub String);

impl FromStr for RuleId {
    type Err = UnknownRule;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleId::ALL
            .iter()
            .copied()
            .find(|r| r.name() == s || r.symbol() == s)
            .ok_or_else(|| UnknownRule(s.to_string()))
    }
}
