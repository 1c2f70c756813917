use std::time::Instant;

use lpc_kernel::{check, displaced, Policy};
use lpc_search::{enumerate_provable, enumerate_sequents, search, SearchBudget, SearchError};
use lpc_syntax::enumerate::props_up_to_depth;
use lpc_syntax::{s, Judgment, Mode, Sequent};

#[test]
fn size_one_corpus() {
    let found: Vec<Sequent> = enumerate_provable(1, SearchBudget::new(4, 1)).into_iter().map(|(q, _)| q).collect();
    assert!(found.contains(&s("(|- () (1))")));
    assert!(found.contains(&s("(|- () (T))")));
    assert!(!found.contains(&s("(|- () (0))")));
}

#[test]
fn zero_is_not_provable() {
    let t = Instant::now();
    let r = search(&s("(|- () (0))"), SearchBudget::new(8, 2)).unwrap();
    assert!(r.is_none());
    eprintln!("|- 0 exhausted in {:?}", t.elapsed());
}

#[test]
fn zero_nodes_is_invalid() {
    let b = SearchBudget { depth: 3, contractions: 0, nodes: 0 };
    assert_eq!(search(&s("(|- () (1))"), b), Err(SearchError::NoNodes));
}

#[test]
fn corpus_size_four() {
    let t = Instant::now();
    let seqs = enumerate_sequents(4);
    let corpus = enumerate_provable(4, SearchBudget::new(5, 2));
    eprintln!("{} sequents, {} provable, {:?}", seqs.len(), corpus.len(), t.elapsed());
    for (q, d) in &corpus {
        assert_eq!(&d.conclusion, q);
        assert!(check(d, Policy::CUT_FREE).is_ok(), "{q}");
        for (_, n) in d.walk() {
            if n.conclusion.kind == Judgment::Persistent {
                assert_eq!(displaced(&n.conclusion).unwrap().len(), 1, "{}", n.conclusion);
            }
        }
    }
    assert_eq!((seqs.len(), corpus.len()), (7164, 3299));
}

#[test]
fn deterministic_and_monotone() {
    let seqs = enumerate_sequents(3);
    for q in seqs.iter().filter(|q| q.kind == Judgment::Linear) {
        let small = search(q, SearchBudget::new(4, 0)).unwrap();
        let again = search(q, SearchBudget::new(4, 0)).unwrap();
        assert_eq!(small, again);
        if small.is_some() {
            assert!(search(q, SearchBudget::new(6, 1)).unwrap().is_some(), "{q}");
        }
    }
}

#[test]
fn no_proposition_and_its_negation() {
    let t = Instant::now();
    let b = SearchBudget::new(6, 2);
    let mut both = Vec::new();
    let props = props_up_to_depth(Mode::L, 3);
    for a in &props {
        let pos = search(&Sequent::linear([], [a.clone()]), b).unwrap();
        if pos.is_some() && search(&Sequent::linear([], [a.neg().unwrap()]), b).unwrap().is_some() {
            both.push(a.clone());
        }
    }
    eprintln!("{} props in {:?}", props.len(), t.elapsed());
    assert!(both.is_empty(), "{both:?}");
}
