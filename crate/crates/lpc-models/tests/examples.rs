use lpc_models::lattice::{distributive_lattices, is_distributive, is_lattice, join};
use lpc_models::{
    ba_flat, ba_hom_image, ba_joinirr, ba_lower, ba_powerset_algebra, ba_sharp, fv_counit, fv_forget, fv_free, fv_free_mor,
    fv_gamma, fv_unit, instance_build, powerset, rel_bang, BoolAlg, FinVect, Params, Rel,
};
use lpc_semantics::smc::Mon;
use lpc_semantics::{Cat, Elem, Mat, Model, Mono, Mor, Obj, SemError};

fn atoms(n: u32) -> Vec<Elem> {
    (0..n).map(Elem::Atom).collect()
}

fn set(n: u32) -> Obj {
    Obj::set(atoms(n))
}

fn chain(n: u32) -> Obj {
    Obj::poset_by(atoms(n), |i, j| i <= j)
}

fn antichain(n: u32) -> Obj {
    Obj::poset_by(atoms(n), |i, j| i == j)
}

fn a(i: u32) -> Elem {
    Elem::Atom(i)
}

#[test]
fn free_space_on_a_singleton() {
    let v = fv_free(&set(1));
    assert_eq!(v.elems(), &[a(0)]);
}

#[test]
fn free_identity_is_identity_matrix() {
    let x = set(2);
    let f = fv_free_mor(&Mor::function(&x, &x, 2, |e| e.clone()));
    assert_eq!(f.mat, Mat::identity(2, 2));
}

#[test]
fn free_collapse_sends_both_generators_to_the_same_basis_vector() {
    let (x, c) = (set(2), Obj::set(vec![a(2)]));
    let f = fv_free_mor(&Mor::function(&x, &c, 2, |_| a(2)));
    assert_eq!(f.mat, Mat::from_fn(1, 2, 2, |_, _| 1));
}

#[test]
fn forget_sizes() {
    assert_eq!(fv_forget(&set(0), 2, 256).unwrap().elems(), &[Elem::Vector(vec![])]);
    assert_eq!(fv_forget(&set(2), 2, 256).unwrap().len(), 4);
    assert_eq!(fv_forget(&set(2), 3, 256).unwrap().len(), 9);
    assert!(matches!(fv_forget(&set(4), 3, 64), Err(SemError::DomainTooLarge { .. })));
}

fn add(u: &[u8], v: &[u8], q: u8) -> Vec<u8> {
    u.iter().zip(v).map(|(x, y)| (x + y) % q).collect()
}

fn coords(e: &Elem) -> Vec<u8> {
    match e {
        Elem::Vector(v) => v.clone(),
        e => panic!("{e} is not a vector"),
    }
}

#[test]
fn forget_monoidal_component_is_the_kronecker_product_and_bilinear() {
    for q in [2u8, 3] {
        let m = FinVect::new(q, 2).unwrap();
        let (u2, v1) = (set(2), set(1));
        let mm = m.gbang_m(&u2, &u2).unwrap();
        let f = mm.as_function().unwrap();
        let vs = fv_forget(&u2, q, 256).unwrap();
        let img = |x: &Elem, y: &Elem| coords(mm.cod.elem(f[mm.dom.idx(&Elem::pair(x, y))]));
        for x in vs.elems() {
            for y in vs.elems() {
                let (cx, cy) = (coords(x), coords(y));
                let kron: Vec<u8> = cx.iter().flat_map(|&s| cy.iter().map(move |&t| s * t % q)).collect();
                assert_eq!(img(x, y), kron);
                for z in vs.elems() {
                    let sum = Elem::Vector(add(&cx, &coords(z), q));
                    assert_eq!(img(&sum, y), add(&img(x, y), &img(z, y), q));
                }
            }
        }
        assert_eq!(m.gbang_m1().unwrap().cod, fv_forget(&v1, q, 256).unwrap());
    }
}

#[test]
fn gamma_in_dimension_one() {
    let (bot, one) = fv_gamma(&set(1), 2);
    assert_eq!(bot.mat, Mat::identity(1, 2));
    assert_eq!(one.mat, Mat::identity(1, 2));
}

#[test]
fn gamma_one_has_ones_on_the_diagonal_slots() {
    let (_, one) = fv_gamma(&set(2), 2);
    let col: Vec<u8> = (0..4).map(|i| one.mat.get(i, 0)).collect();
    assert_eq!(col, vec![1, 0, 0, 1]);
}

/// `λ ∘ (γ^⊥ ⊗ id) ∘ α ∘ (id ⊗ γ¹) = ρ`, with `γ¹` taken at `A^⊥` so that
/// its codomain is `A^⊥ ⊗ A`.
fn snake(m: &dyn Model, x: &Obj) -> (Mor, Mor) {
    let t = Mon::new(m, Mono::LTensor);
    let nx = m.neg(x);
    let lhs = t
        .right(x, &m.gamma_one(&nx))
        .then(&t.assoc_inv(x, &nx, x))
        .then(&t.left(&m.gamma_bot(&nx), x))
        .then(&t.lunit(x));
    (lhs, t.runit(x))
}

#[test]
fn snake_equation_up_to_dimension_three() {
    for q in [2, 3, 5] {
        let m = FinVect::new(q, 3).unwrap();
        for n in 0..=3 {
            let (lhs, rhs) = snake(&m, &set(n));
            assert_eq!(lhs, rhs, "q = {q}, n = {n}");
        }
    }
}

#[test]
fn counit_on_a_line_over_gf2() {
    let e = fv_counit(&set(1), 2, 256).unwrap();
    assert_eq!(e.mat, Mat::from_fn(1, 2, 2, |_, j| j as u8));
}

#[test]
fn unit_sends_a_label_to_its_basis_vector() {
    let x = set(2);
    let eta = fv_unit(&x, 2, 256).unwrap();
    let f = eta.as_function().unwrap();
    assert_eq!(eta.cod.elem(f[0]), &Elem::Vector(vec![1, 0]));
    assert_eq!(eta.cod.elem(f[1]), &Elem::Vector(vec![0, 1]));
}

#[test]
fn finvect_triangle_identities() {
    // G!F!G! of a plane over GF(3) has 3^9 points, past the guard.
    for (q, top) in [(2, 2), (3, 1)] {
        let m = FinVect::new(q, 2).unwrap();
        for n in 0..=top {
            let x = set(n);
            let fx = m.fbang(&x);
            let left = m.fbang_mor(&m.eta(&x).unwrap()).then(&m.eps(&fx).unwrap());
            assert_eq!(left, m.id(Cat::L, &fx));
            let gx = m.gbang(&x).unwrap();
            let right = m.eta(&gx).unwrap().then(&m.gbang_mor(&m.eps(&x).unwrap()).unwrap());
            assert_eq!(right, m.id(Cat::P, &gx));
        }
    }
}

#[test]
fn rel_bang_direct_image() {
    let (dom, cod) = (set(2), Obj::set(vec![a(1)]));
    let r = Mor::new(dom.clone(), cod.clone(), Mat::from_fn(1, 2, 0, |_, j| u8::from(j == 0)));
    let f = rel_bang(&r, 8).unwrap();
    let image = |x: Elem| f.cod.elem(f.as_function().unwrap()[f.dom.idx(&x)]).clone();
    assert_eq!(image(Elem::Set(vec![a(0)])), Elem::Set(vec![a(1)]));
    assert_eq!(image(Elem::Set(vec![])), Elem::Set(vec![]));
    assert_eq!(image(Elem::Set(vec![a(1)])), Elem::Set(vec![]));
}

#[test]
fn rel_bang_of_identity_is_identity() {
    for n in 0..=3 {
        let x = set(n);
        let f = rel_bang(&Mor::new(x.clone(), x.clone(), Mat::identity(x.len(), 0)), 8).unwrap();
        let px = powerset(&x, 8).unwrap();
        assert_eq!(f, Mor::new(px.clone(), px.clone(), Mat::identity(px.len(), 0)));
    }
}

#[test]
fn rel_negation_is_identity_and_tensors_coincide() {
    let m = Rel::default();
    for x in m.objects(Cat::L) {
        assert_eq!(m.neg(&x), x);
        for y in m.objects(Cat::L) {
            assert_eq!(m.mono_obj(Mono::LTensor, &x, &y), m.mono_obj(Mono::LPar, &x, &y));
        }
    }
}

#[test]
fn finvect_tensors_coincide() {
    let m = FinVect::default();
    for x in m.objects(Cat::L) {
        for y in m.objects(Cat::L) {
            assert_eq!(m.mono_obj(Mono::LTensor, &x, &y), m.mono_obj(Mono::LPar, &x, &y));
        }
    }
}

#[test]
fn lower_sets_of_a_two_antichain() {
    assert_eq!(ba_lower(&antichain(2), 64).unwrap().len(), 4);
}

#[test]
fn join_irreducibles_of_the_square() {
    let l = ba_powerset_algebra(&set(2), 64).unwrap();
    let j = ba_joinirr(&l);
    assert_eq!(j.elems(), &[Elem::Set(vec![a(0)]), Elem::Set(vec![a(1)])]);
    assert!(!j.leq(0, 1) && !j.leq(1, 0));
}

fn order_iso(f: &Mor) -> bool {
    let Some(t) = f.as_function() else { return false };
    let mut seen = t.clone();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == f.dom.len()
        && f.dom.len() == f.cod.len()
        && (0..t.len()).all(|i| (0..t.len()).all(|j| f.dom.leq(i, j) == f.cod.leq(t[i], t[j])))
}

#[test]
fn birkhoff_round_trip_isos_on_small_posets() {
    let m = BoolAlg::default();
    for p in m.objects(Cat::P) {
        assert!(order_iso(&m.eta_star(&p)), "{p}");
        let c = m.star(&p);
        assert!(order_iso(&m.eps_star(&c)), "{c}");
    }
}

#[test]
fn distributive_lattices_are_lower_sets_of_their_join_irreducibles() {
    let counts: Vec<usize> = (1..=8).map(|n| distributive_lattices(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 3, 5, 8, 15]);
    for n in 1..=8 {
        for l in distributive_lattices(n) {
            assert!(is_lattice(&l) && is_distributive(&l));
            assert_eq!(ba_lower(&ba_joinirr(&l), 1024).unwrap().len(), n);
        }
    }
}

#[test]
fn powerset_algebra_basics() {
    assert_eq!(ba_powerset_algebra(&set(1), 64).unwrap().len(), 2);
    let x = set(2);
    let id = ba_hom_image(&Mor::function(&x, &x, 0, |e| e.clone()), 64).unwrap();
    assert_eq!(id.as_function().unwrap(), (0..4).collect::<Vec<_>>());
}

#[test]
fn direct_image_preserves_unions() {
    for n in 0..=3u32 {
        for k in 1..=3u32 {
            let (x, y) = (set(n), set(k));
            let mut tables = vec![vec![]];
            for _ in 0..n {
                tables = tables.iter().flat_map(|t| (0..k as usize).map(move |v| [t.clone(), vec![v]].concat())).collect();
            }
            for t in tables {
                let f = ba_hom_image(&Mor::from_indices(&x, &y, 0, &t), 64).unwrap();
                let (px, py) = (&f.dom, &f.cod);
                let img = f.as_function().unwrap();
                for i in 0..px.len() {
                    for j in 0..px.len() {
                        let u = join(px, i, j).unwrap();
                        assert_eq!(img[u], join(py, img[i], img[j]).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn flat_of_constant_bottom_is_bottom() {
    let (p, l) = (chain(2), antichain(2));
    let gl = ba_lower(&l, 64).unwrap();
    let g = Mor::function(&p, &gl, 0, |_| Elem::Set(vec![]));
    let f = ba_flat(&g, &l).unwrap();
    assert_eq!(f.mat, Mat::zeros(2, 2, 0));
}

#[test]
fn flat_rejects_a_non_monotone_map() {
    let (p, l) = (chain(2), antichain(1));
    let gl = ba_lower(&l, 64).unwrap();
    let g = Mor::function(&p, &gl, 0, |e| if *e == a(0) { Elem::Set(vec![a(0)]) } else { Elem::Set(vec![]) });
    assert!(ba_flat(&g, &l).is_err());
}

#[test]
fn counit_takes_joins() {
    let m = BoolAlg::default();
    let l = antichain(2);
    let gl = ba_lower(&l, 64).unwrap();
    let eps = ba_flat(&m.id(Cat::P, &gl), &l).unwrap();
    assert_eq!(eps, m.eps(&l).unwrap());
    let top = gl.idx(&Elem::Set(vec![a(0), a(1)]));
    assert!((0..2).all(|k| eps.mat.get(k, top) == 1));
}

#[test]
fn unit_on_a_two_chain_is_the_principal_lower_set() {
    let m = BoolAlg::default();
    let p = chain(2);
    let eta = m.eta(&p).unwrap();
    let t = eta.as_function().unwrap();
    assert_eq!(eta.cod.elem(t[1]), &Elem::Set(vec![a(0), a(1)]));
    assert_eq!(eta.cod.elem(t[0]), &Elem::Set(vec![a(0)]));
}

#[test]
fn sharp_and_flat_are_inverse() {
    let m = BoolAlg::default();
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(7);
    for p in m.objects(Cat::P) {
        for l in m.objects(Cat::L) {
            for f in m.sample(Cat::L, &m.fbang(&p), &l, &mut rng, 64) {
                let back = ba_flat(&ba_sharp(&f, 1024).unwrap(), &l).unwrap();
                assert_eq!(back, f);
            }
        }
    }
}

#[test]
fn instance_parameters_are_validated() {
    assert!(instance_build("finvect", &Params::parse("q=4").unwrap()).is_err());
    assert!(instance_build("rel", &Params::parse("q=2").unwrap()).is_err());
    assert!(instance_build("sets", &Params::default()).is_err());
    assert!(Params::parse("q").is_err());
    let m = instance_build("finvect", &Params::parse("q=3, max_size=1").unwrap()).unwrap();
    assert_eq!(m.name(), "finvect(q=3)");
}
