use std::time::Instant;

use lpc_cutelim::{
    dual_axiom, elaborate_dual, eliminate_all, eliminate_all_traced, eliminate_cut_plus, in_safe_class, pair_cuts,
    CutError, CutSpec,
};
use lpc_kernel::{check, displaced, parse_derivation, Derivation, Policy, RuleId};
use lpc_search::{enumerate_provable, SearchBudget};
use lpc_syntax::{p, s, Judgment, Side};

fn cut_free_with(d: &Derivation, concl: &lpc_syntax::Sequent) {
    let r = check(d, Policy::CUT_FREE);
    assert!(r.is_ok(), "{r}");
    assert_eq!(&d.conclusion, concl);
    for (_, n) in d.walk() {
        if n.conclusion.kind == Judgment::Persistent {
            assert_eq!(displaced(&n.conclusion).unwrap().len(), 1, "{}", n.conclusion);
        }
    }
}

#[test]
fn axiom_against_axiom() {
    let ax = parse_derivation("(rule ax (|- (1) (1)) (principal (left 0) (right 0)))").unwrap();
    let spec = CutSpec::new(RuleId::CutL, p("1"), 1).unwrap();
    let (out, trace) = eliminate_cut_plus(&ax, &ax, &spec).unwrap();
    assert_eq!(out, ax);
    assert_eq!(trace.steps[0].case, "axiom");
}

#[test]
fn tensor_principal_case() {
    let d1 = parse_derivation(
        "(rule tensor-r (|- () ((tensor 1 1))) (principal (right 0))
           (rule one-r (|- () (1)) (principal (right 0)))
           (rule one-r (|- () (1)) (principal (right 0))))",
    )
    .unwrap();
    let d2 = parse_derivation(
        "(rule tensor-l (|- ((tensor 1 1)) (1)) (principal (left 0))
           (rule one-l (|- (1 1) (1)) (principal (left 0))
             (rule ax (|- (1) (1)) (principal (left 0) (right 0)))))",
    )
    .unwrap();
    let spec = CutSpec::new(RuleId::CutL, p("(tensor 1 1)"), 1).unwrap();
    let (out, trace) = eliminate_cut_plus(&d1, &d2, &spec).unwrap();
    cut_free_with(&out, &s("(|- () (1))"));
    assert_eq!(trace.steps[0].case, "principal tensor");
    assert!(trace.decreasing());
}

#[test]
fn weakening_head() {
    // 1p |- 1 by weakening, cut against ||- 1p
    let d1 = parse_derivation("(rule one-p-r (||- () (1p)) (principal (right 0)))").unwrap();
    let d2 = parse_derivation(
        "(rule weak-l (|- (1p 1p) (1)) (principal (left 0))
           (rule weak-l (|- (1p) (1)) (principal (left 0))
             (rule one-r (|- () (1)) (principal (right 0)))))",
    )
    .unwrap();
    let spec = CutSpec::new(RuleId::CutP, p("1p"), 2).unwrap();
    let (out, trace) = eliminate_cut_plus(&d1, &d2, &spec).unwrap();
    cut_free_with(&out, &s("(|- () (1))"));
    assert_eq!(trace.steps[0].case, "structural");
    assert!(trace.decreasing());
}

#[test]
fn cut_free_input_unchanged() {
    let d = parse_derivation("(rule one-r (|- () (1)) (principal (right 0)))").unwrap();
    assert_eq!(eliminate_all(&d).unwrap(), d);
}

#[test]
fn dual_axioms_check() {
    for x in ["1", "(F! 1p)", "(tensor (+ 1 T) (par B 0))", "(F? (? (& 1 B)))"] {
        let a = dual_axiom(&p(x));
        assert!(check(&a.left, Policy::CUT_FREE).is_ok(), "{x}");
        assert!(check(&a.right, Policy::CUT_FREE).is_ok(), "{x}");
        assert_eq!(a.left.conclusion, s(&format!("(|- ({x} {}) ())", p(x).dual())));
    }
    for x in ["1p", "(tensor 1p (! 1))", "(! (F? Bc))"] {
        let a = dual_axiom(&p(x));
        assert!(check(&a.left, Policy::CUT_FREE).is_ok(), "{x}");
        assert!(check(&a.right, Policy::CUT_FREE).is_ok(), "{x}");
        for l in [a.linear_left.unwrap(), a.linear_right.unwrap()] {
            assert!(check(&l, Policy::WITH_CUT).is_ok(), "{x}");
        }
    }
    let one_p = dual_axiom(&p("1p"));
    assert_eq!(one_p.right.rule, RuleId::BotCR);
    let bot = dual_axiom(&p("Bc"));
    assert_eq!(bot.left.conclusion, s("(||- (1p Bc) ())"));
}

#[test]
fn linear_dual_axiom_gap() {
    // P = !1: the cut-built P, P^* |- . has no cut-free form
    let a = dual_axiom(&p("(! 1)"));
    match eliminate_all(&a.linear_left.unwrap()) {
        Err(CutError::NoCutFreeForm { .. }) => {}
        other => panic!("{other:?}"),
    }
    let a = dual_axiom(&p("(tensor 1p 1p)"));
    let out = eliminate_all(&a.linear_left.unwrap()).unwrap();
    assert!(check(&out, Policy::CUT_FREE).is_ok());
}

#[test]
fn duality_examples() {
    let d = parse_derivation("(rule one-r (|- () (1)) (principal (right 0)))").unwrap();
    let out = elaborate_dual(&d, Side::Right, &p("1")).unwrap();
    cut_free_with(&out, &s("(|- (B) ())"));
    let d = parse_derivation("(rule one-r (|- () (1p)) (principal (right 0)))").unwrap();
    let out = elaborate_dual(&d, Side::Right, &p("1p")).unwrap();
    cut_free_with(&out, &s("(|- (Bc) ())"));
    let out = elaborate_dual(&out, Side::Left, &p("Bc")).unwrap();
    cut_free_with(&out, &s("(|- () (1p))"));
}

#[test]
fn corpus_cuts() {
    let corpus: Vec<Derivation> =
        enumerate_provable(3, SearchBudget::new(5, 1)).into_iter().map(|(_, d)| d).collect();
    let cuts = pair_cuts(&corpus, 60);
    let mut per_rule = std::collections::BTreeMap::new();
    let mut gated = 0;
    let mut outside = (0, 0);
    for c in &cuts {
        let t = Instant::now();
        let r = eliminate_all_traced(c);
        assert!(t.elapsed().as_secs_f64() < 1.0);
        *per_rule.entry(c.rule).or_insert(0) += 1;
        if in_safe_class(&c.conclusion) {
            gated += 1;
            let (out, traces) = r.unwrap_or_else(|e| panic!("{c:?}\n{e}"));
            cut_free_with(&out, &c.conclusion);
            assert!(traces.iter().all(|t| t.decreasing()));
            assert_eq!(eliminate_all(&out).unwrap(), out);
        } else {
            outside.0 += 1;
            match r {
                Ok((out, _)) => cut_free_with(&out, &c.conclusion),
                Err(CutError::NoCutFreeForm { .. }) => outside.1 += 1,
                Err(e) => panic!("{e}"),
            }
        }
    }
    eprintln!("{per_rule:?} gated {gated}, outside {outside:?}");
    assert!(gated >= 200);
}

#[test]
fn duality_over_corpus() {
    let corpus = enumerate_provable(3, SearchBudget::new(5, 2));
    let (mut done, mut gaps) = (0, 0);
    for (q, d) in &corpus {
        for side in [Side::Left, Side::Right] {
            for x in q.side(side).iter() {
                let mut goal = q.clone();
                *goal.side_mut(side) = goal.side(side).remove_one(x).unwrap();
                *goal.side_mut(side.flip()) = goal.side(side.flip()).with(x.dual());
                match elaborate_dual(d, side, x) {
                    Ok(out) => {
                        cut_free_with(&out, &goal);
                        done += 1;
                    }
                    Err(CutError::NoCutFreeForm { .. }) if !in_safe_class(&goal) => gaps += 1,
                    Err(e) => panic!("{q} {side} {x}: {e}"),
                }
            }
        }
    }
    eprintln!("{done} elaborated, {gaps} outside the safe class without a cut-free form");
    assert!(done > 0);
}

#[test]
fn nested_cuts_from_the_corpus() {
    let corpus: Vec<Derivation> =
        enumerate_provable(3, SearchBudget::new(5, 1)).into_iter().map(|(_, d)| d).collect();
    let once = pair_cuts(&corpus, 40);
    let twice = pair_cuts(&[corpus, once].concat(), 400);
    let mut seen = 0;
    for c in twice.iter().filter(|c| c.premises.iter().any(|p| !p.is_cut_free())) {
        if !in_safe_class(&c.conclusion) {
            continue;
        }
        let out = eliminate_all(c).unwrap();
        cut_free_with(&out, &c.conclusion);
        seen += 1;
    }
    assert!(seen > 50, "{seen}");
}
