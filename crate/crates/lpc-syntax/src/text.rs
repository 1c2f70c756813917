//! Propositions and sequents from s-expressions.

use crate::context::Context;
use crate::error::{ModeError, SyntaxError};
use crate::prop::Prop;
use crate::sequent::{Judgment, Sequent};
use crate::sexp::{read_one, Sexp};

fn mode_err(x: &Sexp, source: ModeError) -> SyntaxError {
    let p = x.pos();
    SyntaxError::Mode { line: p.line, col: p.col, source }
}

pub fn prop_from_sexp(x: &Sexp) -> Result<Prop, SyntaxError> {
    match x {
        Sexp::Atom(a, _) => match a.as_str() {
            "T" => Ok(Prop::Top),
            "0" => Ok(Prop::Zero),
            "1" => Ok(Prop::OneL),
            "B" => Ok(Prop::BotL),
            "1p" => Ok(Prop::OneP),
            "Bc" => Ok(Prop::BotC),
            other => Err(x.error(format!("unknown constant `{other}`"))),
        },
        Sexp::List(items, _) => {
            let (head, args) = items.split_first().ok_or_else(|| x.error("empty list is not a proposition"))?;
            let op = head.as_atom().ok_or_else(|| head.error("expected a connective"))?;
            let arity = match op {
                "&" | "+" | "tensor" | "par" => 2,
                "F!" | "F?" | "!" | "?" => 1,
                _ => return Err(head.error(format!("unknown connective `{op}`"))),
            };
            if args.len() != arity {
                return Err(x.error(format!("`{op}` takes {arity} operand(s), got {}", args.len())));
            }
            let ps = args.iter().map(prop_from_sexp).collect::<Result<Vec<_>, _>>()?;
            let mut it = ps.into_iter();
            let a = it.next().unwrap();
            let r = match op {
                "&" => Prop::with(a, it.next().unwrap()),
                "+" => Prop::plus(a, it.next().unwrap()),
                "tensor" => Prop::tensor(a, it.next().unwrap()),
                "par" => Prop::par(a, it.next().unwrap()),
                "F!" => Prop::fbang(a),
                "F?" => Prop::fwhy(a),
                "!" => Prop::gbang(a),
                _ => Prop::gwhy(a),
            };
            r.map_err(|e| mode_err(x, e))
        }
    }
}

/// A context list, optionally tagged with a leading `ctx` atom.
pub fn context_from_sexp(x: &Sexp) -> Result<Context, SyntaxError> {
    let items = x.as_list().ok_or_else(|| x.error("expected a context list"))?;
    let items = match items.first().and_then(Sexp::as_atom) {
        Some("ctx") => &items[1..],
        _ => items,
    };
    items.iter().map(prop_from_sexp).collect()
}

/// Read a sequent without rejecting linear propositions under `||-`.
pub fn sequent_from_sexp_unchecked(x: &Sexp) -> Result<Sequent, SyntaxError> {
    let items = x.as_list().ok_or_else(|| x.error("expected a sequent"))?;
    let kind = match items.first().and_then(Sexp::as_atom) {
        Some("|-") => Judgment::Linear,
        Some("||-") => Judgment::Persistent,
        _ => return Err(x.error("a sequent starts with `|-` or `||-`")),
    };
    if items.len() != 3 {
        return Err(x.error("a sequent has exactly two contexts"));
    }
    Ok(Sequent { kind, left: context_from_sexp(&items[1])?, right: context_from_sexp(&items[2])? })
}

pub fn sequent_from_sexp(x: &Sexp) -> Result<Sequent, SyntaxError> {
    let s = sequent_from_sexp_unchecked(x)?;
    if s.kind == Judgment::Persistent {
        if let Some(p) = s.left.iter().chain(s.right.iter()).find(|p| !p.is_persistent()) {
            let pos = x.pos();
            return Err(SyntaxError::PersistentLinear { line: pos.line, col: pos.col, prop: p.to_string() });
        }
    }
    Ok(s)
}

pub fn parse_prop(text: &str) -> Result<Prop, SyntaxError> {
    prop_from_sexp(&read_one(text)?)
}

pub fn parse_sequent(text: &str) -> Result<Sequent, SyntaxError> {
    sequent_from_sexp(&read_one(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_and_nesting() {
        assert_eq!(parse_prop("1").unwrap(), Prop::OneL);
        assert_eq!(
            parse_prop("(F! (! T))").unwrap(),
            Prop::fbang(Prop::gbang(Prop::Top).unwrap()).unwrap()
        );
    }

    #[test]
    fn mode_error_reported_at_connective() {
        match parse_prop("  (tensor 1 Bc)") {
            Err(SyntaxError::Mode { line: 1, col: 3, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_prop("(tensor 1 b)"), Err(SyntaxError::Syntax { .. })));
    }

    #[test]
    fn sequents() {
        let s = parse_sequent("(|- () (0))").unwrap();
        assert_eq!(s, Sequent::linear([], [Prop::Zero]));
        let t = parse_sequent("(||- (ctx 1p) (ctx 1p))").unwrap();
        assert_eq!(t.to_string(), "(||- (1p) (1p))");
        assert!(parse_sequent("(||- (1) ())").is_err());
    }
}
