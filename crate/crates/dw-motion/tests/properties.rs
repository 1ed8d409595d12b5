mod common;

use proptest::prelude::*;

use dw_motion::dw::{mcg_rep, DwSpace, Surface};
use dw_motion::group::FiniteGroup;
use dw_motion::homs::{act, evaluate, HomClasses};
use dw_motion::links::{motion_rep, FluxLabel, LinkFamily};
use dw_motion::presentation::{free_reduce, Endomorphism, Letter, Presentation, Word};

fn letters(gens: usize, max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((0..gens, any::<bool>()).prop_map(|(g, i)| Letter::new(g, i)), 0..max)
}

fn endo(gens: usize) -> impl Strategy<Value = Endomorphism> {
    prop::collection::vec(letters(gens, 5), gens).prop_map(|ims| {
        Endomorphism::new(ims.iter().map(|l| Word::from_letters(l)).collect()).unwrap()
    })
}

/// Words in the torus generators S and T.
fn mapping_class(max: usize) -> impl Strategy<Value = Endomorphism> {
    prop::collection::vec(any::<bool>(), 0..max).prop_map(|bits| {
        let st = Surface::Torus.mapping_class_generators();
        bits.iter()
            .fold(Endomorphism::identity(2), |acc, &b| acc.compose(&st[b as usize].1))
    })
}

fn a_group() -> impl Strategy<Value = FiniteGroup> {
    let groups = common::small_groups();
    (0..groups.len()).prop_map(move |i| groups[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms(g in a_group(), a in any::<usize>(), b in any::<usize>(), c in any::<usize>()) {
        let n = g.order();
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.identity()), a);
        prop_assert_eq!(g.mul(g.identity(), a), a);
        prop_assert_eq!(g.mul(a, g.inv(a)), g.identity());
        prop_assert_eq!(g.pow(a, g.element_order(a) as i64), g.identity());
    }

    #[test]
    fn orbit_stabilizer(g in a_group(), a in any::<usize>(), b in any::<usize>()) {
        let n = g.order();
        let (a, b) = (a % n, b % n);
        prop_assume!(g.commutes(a, b));
        let classes = HomClasses::of(&Presentation::torus(), &g);
        let k = classes.class_of(&g, &[a, b]).unwrap();
        let stab = common::centralizer_of(&g, &[a, b]).len();
        prop_assert_eq!(classes.classes()[k].orbit_size * stab, n);
    }

    #[test]
    fn act_is_functorial(e1 in mapping_class(6), e2 in mapping_class(6), which in 0usize..3) {
        let g: FiniteGroup = ["S:3", "Q8", "Z:4"][which].parse().unwrap();
        let p = Presentation::torus();
        let classes = HomClasses::of(&p, &g);
        let lhs = act(&e1.compose(&e2), &classes, &p, &g).unwrap();
        let rhs = act(&e1, &classes, &p, &g).unwrap().compose(&act(&e2, &classes, &p, &g).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn trivial_class_fixed_by_mapping_classes(e in mapping_class(8), which in 0usize..3) {
        let g: FiniteGroup = ["S:3", "D:4", "SL2:3"][which].parse().unwrap();
        let space = DwSpace::new(&Presentation::torus(), &g);
        let rep = mcg_rep(&space, &g, &[("e".into(), e)]).unwrap();
        let t = space.trivial_class();
        prop_assert_eq!(rep.perms[0].apply(t), t);
    }

    #[test]
    fn labeled_dimension_is_conjugation_invariant(pair in 0usize..18, c in 0usize..6, n in 2usize..4) {
        let g: FiniteGroup = "S:3".parse().unwrap();
        let pairs = common::commuting_pairs(&g);
        let (a, b) = pairs[pair % pairs.len()];
        let link = LinkFamily::torus(3, 2, n).unwrap();
        let base = motion_rep(&link, &g, FluxLabel { g: a, h: b }, None).unwrap().space.dim();
        let moved = FluxLabel { g: g.conj(c, a), h: g.conj(c, b) };
        prop_assert_eq!(motion_rep(&link, &g, moved, None).unwrap().space.dim(), base);
    }

    #[test]
    fn free_reduce_is_idempotent(w in letters(3, 24)) {
        let once = free_reduce(&w);
        prop_assert_eq!(free_reduce(once.letters()), once.clone());
        prop_assert!(once.letters().windows(2).all(|p| p[0] != p[1].inv()));
        prop_assert!(once.concat(&once.inverse()).is_empty());
    }

    #[test]
    fn substitution_respects_composition(w in letters(2, 10), e1 in endo(2), e2 in endo(2)) {
        let w = Word::from_letters(&w);
        prop_assert_eq!(w.substitute(&e1.compose(&e2)), w.substitute(&e2).substitute(&e1));
    }

    #[test]
    fn evaluation_is_multiplicative(u in letters(2, 8), v in letters(2, 8), a in 0usize..6, b in 0usize..6) {
        let g: FiniteGroup = "S:3".parse().unwrap();
        let (u, v) = (Word::from_letters(&u), Word::from_letters(&v));
        let im = [a, b];
        prop_assert_eq!(evaluate(&g, &im, &u.concat(&v)), g.mul(evaluate(&g, &im, &u), evaluate(&g, &im, &v)));
        prop_assert_eq!(evaluate(&g, &im, &u), common::eval(&g, &im, &u));
    }
}
