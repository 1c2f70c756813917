//! The derivation script text format:
//! `(rule <name> <conclusion> (principal (left i) ...) <premise>*)`.

use lpc_syntax::sexp::{read_all, Sexp};
use lpc_syntax::{sequent_from_sexp_unchecked, Side};

use crate::derivation::{Derivation, Pos};
use crate::error::KernelError;
use crate::rule::RuleId;

fn side_of(x: &Sexp) -> Result<Side, KernelError> {
    match x.as_atom() {
        Some("left") => Ok(Side::Left),
        Some("right") => Ok(Side::Right),
        _ => Err(x.error("expected `left` or `right`").into()),
    }
}

fn pos_of(x: &Sexp) -> Result<Pos, KernelError> {
    match x.as_list() {
        Some([s, i]) => {
            let side = side_of(s)?;
            let index = i
                .as_atom()
                .and_then(|a| a.parse::<usize>().ok())
                .ok_or_else(|| i.error("expected a position index"))?;
            Ok(Pos { side, index })
        }
        _ => Err(x.error("a position is `(left i)` or `(right i)`").into()),
    }
}

pub fn derivation_from_sexp(x: &Sexp) -> Result<Derivation, KernelError> {
    let items = x.as_list().ok_or_else(|| x.error("expected `(rule ...)`"))?;
    if items.first().and_then(Sexp::as_atom) != Some("rule") || items.len() < 4 {
        return Err(x.error("a derivation is `(rule <name> <conclusion> (principal ...) <premise>*)`").into());
    }
    let name = items[1].as_atom().ok_or_else(|| items[1].error("expected a rule name"))?;
    let rule: RuleId = name.parse().map_err(|source| {
        let p = items[1].pos();
        KernelError::Rule { line: p.line, col: p.col, source }
    })?;
    let conclusion = sequent_from_sexp_unchecked(&items[2])?;
    let prin = items[3].as_list().ok_or_else(|| items[3].error("expected `(principal ...)`"))?;
    if prin.first().and_then(Sexp::as_atom) != Some("principal") {
        return Err(items[3].error("expected `(principal ...)`").into());
    }
    let principal = prin[1..].iter().map(pos_of).collect::<Result<Vec<_>, _>>()?;
    let premises = items[4..].iter().map(derivation_from_sexp).collect::<Result<Vec<_>, _>>()?;
    Ok(Derivation { rule, conclusion, principal, premises })
}

/// Every derivation in a script file.
pub fn parse_derivations(text: &str) -> Result<Vec<Derivation>, KernelError> {
    read_all(text)?.iter().map(derivation_from_sexp).collect()
}

/// Exactly one derivation.
pub fn parse_derivation(text: &str) -> Result<Derivation, KernelError> {
    let mut all = parse_derivations(text)?;
    if all.len() != 1 {
        return Err(lpc_syntax::SyntaxError::Syntax {
            line: 1,
            col: 1,
            msg: format!("expected one derivation, found {}", all.len()),
        }
        .into());
    }
    Ok(all.pop().unwrap())
}

fn write_node(d: &Derivation, indent: usize, out: &mut String) {
    out.push_str(&"  ".repeat(indent));
    out.push_str(&format!("(rule {} {} (principal", d.rule, d.conclusion));
    for p in &d.principal {
        out.push_str(&format!(" {p}"));
    }
    out.push(')');
    for p in &d.premises {
        out.push('\n');
        write_node(p, indent + 1, out);
    }
    out.push(')');
}

/// Canonical text: one node per line, premises indented two spaces.
pub fn print_derivation(d: &Derivation) -> String {
    let mut out = String::new();
    write_node(d, 0, &mut out);
    out.push('\n');
    out
}
