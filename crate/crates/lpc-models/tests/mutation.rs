//! A Rel whose symmetry is broken must fail the symmetry law, with a witness.

use lpc_models::Rel;
use lpc_semantics::laws::LawReport;
use lpc_semantics::{check_laws, Cat, Elem, Mat, Model, Mono, Mor, Obj, Scope, SemError};
use rand_chacha::ChaCha8Rng;

/// Rel, except that every swap `a ⊗ b -> b ⊗ a` that moves something is
/// replaced by the full relation, which is not an involution.
struct BrokenSym(Rel);

fn is_swap(dom: &Obj, f: &dyn Fn(&Elem) -> Elem) -> bool {
    let swapped = |e: &Elem| matches!(e, Elem::Pair(..)) && {
        let (x, y) = e.split();
        f(e) == Elem::pair(y, x)
    };
    dom.elems().iter().all(swapped) && dom.elems().iter().any(|e| e.split().0 != e.split().1)
}

impl Model for BrokenSym {
    fn name(&self) -> String {
        "rel-broken-sym".into()
    }
    fn ring(&self) -> u8 {
        0
    }
    fn iso(&self, c: Cat, dom: &Obj, cod: &Obj, f: &dyn Fn(&Elem) -> Elem) -> Mor {
        if is_swap(dom, f) {
            return Mor::new(dom.clone(), cod.clone(), Mat::from_fn(cod.len(), dom.len(), 0, |_, _| 1));
        }
        self.0.iso(c, dom, cod, f)
    }
    fn mono_unit(&self, m: Mono) -> Obj {
        self.0.mono_unit(m)
    }
    fn neg(&self, a: &Obj) -> Obj {
        self.0.neg(a)
    }
    fn gamma_bot(&self, a: &Obj) -> Mor {
        self.0.gamma_bot(a)
    }
    fn gamma_one(&self, a: &Obj) -> Mor {
        self.0.gamma_one(a)
    }
    fn zero(&self) -> Obj {
        self.0.zero()
    }
    fn star(&self, p: &Obj) -> Obj {
        self.0.star(p)
    }
    fn star_mor(&self, f: &Mor) -> Mor {
        self.0.star_mor(f)
    }
    fn lstar(&self, c: &Obj) -> Obj {
        self.0.lstar(c)
    }
    fn lstar_mor(&self, g: &Mor) -> Mor {
        self.0.lstar_mor(g)
    }
    fn eta_star(&self, p: &Obj) -> Mor {
        self.0.eta_star(p)
    }
    fn eps_star(&self, c: &Obj) -> Mor {
        self.0.eps_star(c)
    }
    fn fbang(&self, p: &Obj) -> Obj {
        self.0.fbang(p)
    }
    fn fbang_mor(&self, f: &Mor) -> Mor {
        self.0.fbang_mor(f)
    }
    fn gbang(&self, a: &Obj) -> Result<Obj, SemError> {
        self.0.gbang(a)
    }
    fn gbang_mor(&self, f: &Mor) -> Result<Mor, SemError> {
        self.0.gbang_mor(f)
    }
    fn gbang_m(&self, a: &Obj, b: &Obj) -> Result<Mor, SemError> {
        self.0.gbang_m(a, b)
    }
    fn gbang_m1(&self) -> Result<Mor, SemError> {
        self.0.gbang_m1()
    }
    fn eps(&self, a: &Obj) -> Result<Mor, SemError> {
        self.0.eps(a)
    }
    fn eta(&self, p: &Obj) -> Result<Mor, SemError> {
        self.0.eta(p)
    }
    fn objects(&self, c: Cat) -> Vec<Obj> {
        self.0.objects(c)
    }
    fn sample(&self, c: Cat, a: &Obj, b: &Obj, rng: &mut ChaCha8Rng, k: usize) -> Vec<Mor> {
        self.0.sample(c, a, b, rng, k)
    }
    fn extra_laws(&self, _report: &mut LawReport, _rng: &mut ChaCha8Rng) {}
}

#[test]
fn broken_symmetry_fails_with_a_witness() {
    let m = BrokenSym(Rel::default());
    let scope = Scope { filter: Some("symmetry".into()), ..Scope::default() };
    let report = check_laws(&m, &scope);
    let fam = &report.families["L-tensor.symmetry"];
    assert!(!fam.passed());
    assert!(fam.failures.iter().any(|w| !w.is_empty()));
    assert!(report.to_string().contains("L-tensor.symmetry\twitness\t"));
}

#[test]
fn the_unbroken_model_passes_the_same_filter() {
    let scope = Scope { filter: Some("symmetry".into()), ..Scope::default() };
    let report = check_laws(&Rel::default(), &scope);
    assert!(!report.families.is_empty());
    assert!(report.passed(), "{report}");
}
