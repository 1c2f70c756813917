use std::fmt;

/// Lexicographic termination measure of one Cut⁺ instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Measure {
    /// Size of the cut formula.
    pub formula: usize,
    /// Sum of the depths of the two premise derivations.
    pub depth: usize,
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.formula, self.depth)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub case: &'static str,
    pub measure: Measure,
    /// The step whose case analysis spawned this one.
    pub parent: Option<usize>,
}

/// Every Cut⁺ instance visited while eliminating one cut, in call order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EliminationTrace {
    pub steps: Vec<Step>,
}

impl EliminationTrace {
    pub(crate) fn enter(&mut self, measure: Measure, parent: Option<usize>) -> usize {
        self.steps.push(Step { case: "pending", measure, parent });
        self.steps.len() - 1
    }

    pub(crate) fn label(&mut self, at: usize, case: &'static str) {
        self.steps[at].case = case;
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Each step's measure is strictly below its parent's.
    pub fn decreasing(&self) -> bool {
        self.steps
            .iter()
            .all(|s| s.parent.is_none_or(|p| s.measure < self.steps[p].measure))
    }
}

impl fmt::Display for EliminationTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            let parent = s.parent.map_or_else(|| "-".to_string(), |p| p.to_string());
            writeln!(f, "{i}\t{parent}\t{}\t{}", s.case, s.measure)?;
        }
        Ok(())
    }
}
