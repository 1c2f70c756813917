use lpc_cutelim::{eliminate_all, in_safe_class, pair_cuts};
use lpc_kernel::{parse_derivation, Derivation};
use lpc_models::{instance_build, BoolAlg, FinVect, Params, Rel};
use lpc_search::{enumerate_provable, SearchBudget};
use lpc_semantics::toolkit::Lin;
use lpc_semantics::{interp_derivation, interp_obj, iso_pi, iso_tau, Cat, Interpreter, Mat, Model, Mono, Role, SemError};
use lpc_syntax::{p, s, Context, Prop};
use proptest::prelude::*;

fn ctx(items: &[&str]) -> Context {
    Context::new(items.iter().map(|x| p(x)))
}

#[test]
fn corpus_interpretations_are_well_typed() {
    let corpus = enumerate_provable(4, SearchBudget::new(6, 1));
    assert!(corpus.len() > 3000);
    for name in ["rel", "finvect", "boolalg"] {
        let m = instance_build(name, &Params::default()).unwrap();
        let it = Interpreter::new(m.as_ref());
        for (seq, d) in &corpus {
            let f = it.derivation(d).unwrap_or_else(|e| panic!("{name}: {seq}: {e}"));
            let (dom, cod) = it.sequent_type(seq).unwrap();
            assert!(f.dom == dom && f.cod == cod, "{name}: {seq} has the wrong type");
        }
    }
}

#[test]
fn object_examples() {
    let m = Rel::default();
    let lin = Lin::new(&m);
    assert_eq!(interp_obj(&m, &p("1"), Cat::L).unwrap(), lin.one());
    let unit_p = m.mono_unit(Mono::PTensor);
    assert_eq!(interp_obj(&m, &p("(F! 1p)"), Cat::L).unwrap(), m.fbang(&unit_p));
    let c = interp_obj(&m, &p("(? T)"), Cat::C).unwrap();
    assert_eq!(interp_obj(&m, &p("(? T)"), Cat::P).unwrap(), m.lstar(&c));
    assert!(matches!(interp_obj(&m, &p("(tensor 1 1)"), Cat::P), Err(SemError::Mode(_))));
    assert!(matches!(interp_obj(&m, &p("1p"), Cat::C), Err(SemError::Mode(_))));
}

#[test]
fn context_examples() {
    let m = FinVect::default();
    let it = Interpreter::new(&m);
    let lin = Lin::new(&m);
    assert_eq!(it.ctx(&Context::default(), Role::LeftTensor).unwrap(), lin.one());
    let one = lin.one();
    assert_eq!(it.ctx(&ctx(&["1", "1"]), Role::RightPar).unwrap(), lin.p.obj(&one, &one));
    assert_eq!(it.ctx(&ctx(&["1p"]), Role::PTensor).unwrap(), it.obj(&p("1p"), Cat::P).unwrap());
    assert!(it.ctx(&ctx(&["1"]), Role::PTensor).is_err());
    assert!(it.ctx(&ctx(&["1p"]), Role::CCotensor).is_err());
}

#[test]
fn pi_examples() {
    let m = Rel::default();
    let lin = Lin::new(&m);
    assert_eq!(iso_pi(&m, &Context::default()).unwrap(), m.fbang_m1());
    let single = iso_pi(&m, &ctx(&["1p"])).unwrap();
    assert_eq!(single, lin.id(&single.dom));
    let two = ctx(&["1p", "(! 1)"]);
    let pi = iso_pi(&m, &two).unwrap();
    let back = m.inverse(Cat::L, &pi).unwrap();
    assert_eq!(pi.then(&back), lin.id(&pi.dom));
    assert_eq!(back.then(&pi), lin.id(&pi.cod));
    assert!(iso_pi(&m, &ctx(&["Bc"])).is_err());
    assert!(iso_tau(&m, &ctx(&["1p"])).is_err());
}

#[test]
fn axiom_on_one_is_the_identity_relation() {
    let m = Rel::default();
    let d = parse_derivation("(rule ax (|- (1) (1)) (principal (left 0) (right 0)))").unwrap();
    let f = interp_derivation(&m, &d).unwrap();
    assert_eq!(f.mat, Mat::identity(1, 0));
}

#[test]
fn weakening_a_producer_erases_it() {
    // The premise denotes id on 1; the weakened !1 is sent through F!(e)
    // and the unit isos, so every basis vector of F!G!1 lands on 1.
    let m = FinVect::default();
    let d = parse_derivation(
        "(rule weak-l (|- ((! 1)) (1)) (principal (left 0))
           (rule one-r (|- () (1)) (principal (right 0))))",
    )
    .unwrap();
    let f = interp_derivation(&m, &d).unwrap();
    assert_eq!(f.mat, Mat::from_fn(1, 2, 2, |_, _| 1));
}

fn cut_corpus() -> Vec<Derivation> {
    let base: Vec<Derivation> = enumerate_provable(3, SearchBudget::new(5, 1)).into_iter().map(|(_, d)| d).collect();
    pair_cuts(&base, 20).into_iter().filter(|d| in_safe_class(&d.conclusion)).collect()
}

#[test]
fn cut_elimination_does_not_change_rel_denotations() {
    let m = Rel::default();
    let cuts = cut_corpus();
    assert!(cuts.len() >= 40, "{}", cuts.len());
    for d in &cuts {
        let e = eliminate_all(d).unwrap();
        assert_eq!(interp_derivation(&m, d).unwrap(), interp_derivation(&m, &e).unwrap(), "{}", d.conclusion);
    }
}

#[test]
fn interpretation_needs_a_valid_derivation() {
    let m = Rel::default();
    let d = parse_derivation("(rule ax (|- (1) (B)) (principal (left 0) (right 0)))").unwrap();
    assert!(matches!(interp_derivation(&m, &d), Err(SemError::Check(_))));
}

const PRODUCERS: [&str; 6] = ["1p", "(! 1)", "(! B)", "(tensor 1p 1p)", "(! T)", "(tensor 1p (! 0))"];
const CONSUMERS: [&str; 6] = ["Bc", "(? 1)", "(? B)", "(par Bc Bc)", "(? 0)", "(par Bc (? T))"];

fn models() -> Vec<Box<dyn Model>> {
    vec![Box::new(Rel::default()), Box::new(FinVect::default()), Box::new(BoolAlg::default())]
}

fn pick(names: &'static [&'static str]) -> impl Strategy<Value = Vec<Prop>> {
    prop::collection::vec(prop::sample::select(names), 0..=3).prop_map(|xs| xs.iter().map(|x| p(x)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pi_and_tau_are_isomorphisms(ps in pick(&PRODUCERS), cs in pick(&CONSUMERS)) {
        for m in models() {
            let lin = Lin::new(m.as_ref());
            let g = Context::new(ps.iter().cloned());
            let d = Context::new(cs.iter().cloned());
            for f in [iso_pi(m.as_ref(), &g).unwrap(), iso_tau(m.as_ref(), &d).unwrap()] {
                let back = m.inverse(Cat::L, &f);
                prop_assert!(back.is_some(), "{}: no inverse for {} / {}", m.name(), g, d);
                let back = back.unwrap();
                prop_assert_eq!(f.then(&back), lin.id(&f.dom));
                prop_assert_eq!(back.then(&f), lin.id(&f.cod));
            }
        }
    }

    #[test]
    fn context_order_does_not_matter(perm in Just([0usize, 1, 2]).prop_shuffle()) {
        let items = ["1", "(! 1)", "1p"];
        let text = perm.iter().map(|&i| items[i]).collect::<Vec<_>>().join(" ");
        let goal = s(&format!("(|- ({text}) (1))"));
        let d = lpc_search::search(&goal, SearchBudget::new(6, 1)).unwrap().unwrap();
        let reference = lpc_search::search(&s("(|- (1 (! 1) 1p) (1))"), SearchBudget::new(6, 1)).unwrap().unwrap();
        for m in models() {
            prop_assert_eq!(interp_derivation(m.as_ref(), &d).unwrap(), interp_derivation(m.as_ref(), &reference).unwrap());
        }
    }
}
