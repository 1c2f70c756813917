use lpc_kernel::mutate::mutations;
use lpc_kernel::{
    check, displaced, parse_derivation, print_derivation, replicate, Cause, Derivation, Policy, Pos, RuleId,
};
use lpc_syntax::{p, s, Prop, Side};

fn ax(x: &str) -> Derivation {
    let x = p(x);
    let seq = if x.is_persistent() {
        lpc_syntax::Sequent::persistent([x.clone()], [x.clone()])
    } else {
        lpc_syntax::Sequent::linear([x.clone()], [x.clone()])
    };
    let rule = match x.mode() {
        lpc_syntax::Mode::P => RuleId::AxP,
        lpc_syntax::Mode::C => RuleId::AxC,
        lpc_syntax::Mode::L => RuleId::Ax,
    };
    Derivation::new(rule, seq, vec![Pos::left(0), Pos::right(0)], vec![])
}

#[test]
fn axiom_on_one() {
    let d = Derivation::new(RuleId::Ax, s("(|- (1) (1))"), vec![Pos::left(0), Pos::right(0)], vec![]);
    assert!(check(&d, Policy::CUT_FREE).is_ok());
}

#[test]
fn one_right() {
    let d = Derivation::new(RuleId::OneR, s("(|- () (1))"), vec![Pos::right(0)], vec![]);
    assert!(check(&d, Policy::CUT_FREE).is_ok());
}

#[test]
fn persistent_axiom_with_linear_proposition() {
    let d = parse_derivation("(rule ax-p (||- (1p T) (1p)) (principal (left 0) (right 0)))").unwrap();
    assert_eq!(check(&d, Policy::WITH_CUT).cause(), Some(Cause::ModeRestriction));
}

#[test]
fn displaced_examples() {
    assert_eq!(displaced(&s("(||- (1p) (1p))")).unwrap(), vec![Pos::right(0)]);
    let q = s("(||- ((? T) 1p) (Bc))");
    // canonical order puts 1p before (? T)
    assert_eq!(q.left.as_slice()[1], p("(? T)"));
    assert_eq!(displaced(&q).unwrap(), vec![Pos::left(1)]);
    assert_eq!(displaced(&s("(||- () ())")).unwrap(), vec![]);
    assert!(displaced(&s("(|- () ())")).is_err());
}

#[test]
fn replicate_counts() {
    // 1p, 1p, 1p |- 1p  from weakening the axiom twice
    let base = ax("1p");
    let base = lpc_kernel::weaken(base, Side::Left, &Prop::OneP).unwrap();
    let three = lpc_kernel::weaken(base, Side::Left, &Prop::OneP).unwrap();
    assert!(check(&three, Policy::CUT_FREE).is_ok());
    let one = replicate(three.clone(), Side::Left, &Prop::OneP, 3).unwrap();
    assert_eq!(one.conclusion, s("(||- (1p) (1p))"));
    assert_eq!(one.rule, RuleId::PContrL);
    assert_eq!(one.premises[0].rule, RuleId::PContrL);
    assert!(check(&one, Policy::CUT_FREE).is_ok());

    let same = replicate(three.clone(), Side::Left, &Prop::OneP, 1).unwrap();
    assert_eq!(same, three);

    let d = Derivation::new(RuleId::OneR, s("(|- () (1))"), vec![Pos::right(0)], vec![]);
    let w = replicate(d, Side::Left, &Prop::OneP, 0).unwrap();
    assert_eq!(w.rule, RuleId::WeakL);
    assert!(check(&w, Policy::CUT_FREE).is_ok());
    assert!(replicate(ax("1"), Side::Left, &Prop::OneL, 1).is_err());
}

#[test]
fn cut_policy() {
    let d = Derivation::infer(
        RuleId::CutL,
        s("(|- (1) (1))"),
        &[(Side::Right, &Prop::OneL)],
        vec![ax("1"), ax("1")],
    );
    assert!(check(&d, Policy::WITH_CUT).is_ok());
    assert_eq!(check(&d, Policy::CUT_FREE).cause(), Some(Cause::CutForbidden));
}

#[test]
fn script_round_trip() {
    let text = "(rule tensor-r (|- () ((tensor 1 1))) (principal (right 0))\n  (rule one-r (|- () (1)) (principal (right 0)))\n  (rule one-r (|- () (1)) (principal (right 0))))\n";
    let d = parse_derivation(text).unwrap();
    assert!(check(&d, Policy::CUT_FREE).is_ok());
    assert_eq!(print_derivation(&d), text);
    assert_eq!(parse_derivation(&print_derivation(&d)).unwrap(), d);
}

#[test]
fn broken_split_is_a_context_error() {
    let text = "(rule tensor-r (|- (1p) ((tensor 1 1))) (principal (right 0))
      (rule one-r (|- () (1)) (principal (right 0)))
      (rule one-r (|- () (1)) (principal (right 0))))";
    let d = parse_derivation(text).unwrap();
    let r = check(&d, Policy::CUT_FREE);
    assert_eq!(r.cause(), Some(Cause::ContextMismatch));
    assert_eq!(r.failure.unwrap().path, Vec::<usize>::new());
}

#[test]
fn first_failure_in_preorder() {
    let text = "(rule tensor-r (|- () ((tensor 1 1))) (principal (right 0))
      (rule one-r (|- () (1)) (principal (right 3)))
      (rule one-r (|- () (1)) (principal (right 0))))";
    let r = check(&parse_derivation(text).unwrap(), Policy::CUT_FREE);
    let f = r.failure.unwrap();
    assert_eq!(f.path, vec![0]);
    assert_eq!(f.cause, Cause::PrincipalMismatch);
}

#[test]
fn mutations_of_an_axiom() {
    for m in mutations(&ax("1")) {
        assert_eq!(check(&m.derivation, Policy::WITH_CUT).cause(), Some(m.expected), "{:?}", m.kind);
    }
}
