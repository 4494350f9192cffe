use proptest::prelude::*;

use idealfact::graded_ideal::{rref, times_linear_forms, GradedIdeal2, Rational};
use idealfact::monomial_ideal::phi;
use idealfact::power_monoid::{set_colon, sumset};
use idealfact::{Engine, ExpPair, LengthSet, MonIdeal, MonomialMonoid, NatSet, ReducedPowerMonoid, SearchConfig, SumSequence};

fn nat_set(max: u64) -> impl Strategy<Value = NatSet> {
    prop::collection::btree_set(0..=max, 1..8).prop_map(|s| NatSet::new(s).unwrap())
}

fn reduced_set(max: u64) -> impl Strategy<Value = NatSet> {
    prop::collection::btree_set(1..=max, 1..7).prop_map(|s| NatSet::new(std::iter::once(0).chain(s)).unwrap())
}

fn ideal(bound: u64) -> impl Strategy<Value = MonIdeal> {
    prop::collection::vec((0..=bound, 0..=bound), 1..6)
        .prop_map(|v| MonIdeal::from_generators(v.into_iter().map(ExpPair::from)).unwrap())
}

fn proper_ideal(bound: u64) -> impl Strategy<Value = MonIdeal> {
    prop::collection::vec((0..=bound, 0..=bound), 1..6).prop_map(|v| {
        let gens = v.into_iter().map(|(x, y)| if x + y == 0 { (1, 0) } else { (x, y) });
        MonIdeal::from_generators(gens.map(ExpPair::from)).unwrap()
    })
}

proptest! {
    #[test]
    fn sumset_is_commutative_and_associative(a in nat_set(20), b in nat_set(20), c in nat_set(20)) {
        prop_assert_eq!(sumset(&a, &b).unwrap(), sumset(&b, &a).unwrap());
        let left = sumset(&sumset(&a, &b).unwrap(), &c).unwrap();
        let right = sumset(&a, &sumset(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn sumset_extremes_add(a in nat_set(30), b in nat_set(30)) {
        let s = sumset(&a, &b).unwrap();
        prop_assert_eq!(s.max_element(), a.max_element() + b.max_element());
        prop_assert_eq!(s.min_element(), a.min_element() + b.min_element());
    }

    #[test]
    fn set_colon_is_the_set_of_fitting_shifts(a in reduced_set(8), b in reduced_set(8)) {
        let colon = set_colon(&a, &b);
        for c in 0..=8u64 {
            let fits = b.elements().iter().all(|&x| a.contains(x + c));
            let listed = colon.as_ref().is_some_and(|q| q.contains(c));
            prop_assert_eq!(fits, listed, "shift {}", c);
        }
    }

    #[test]
    fn phi_is_a_homomorphism(a in nat_set(12), b in nat_set(12)) {
        let lhs = phi(&sumset(&a, &b).unwrap());
        prop_assert_eq!(lhs, phi(&a).product(&phi(&b)).unwrap());
        prop_assert_eq!(phi(&a) == phi(&b), a == b);
    }

    #[test]
    fn minimization_is_idempotent(i in ideal(9)) {
        let again = MonIdeal::from_generators(i.gens().iter().copied()).unwrap();
        prop_assert_eq!(&again, &i);
        for w in i.gens().windows(2) {
            prop_assert!(w[0].x > w[1].x && w[0].y < w[1].y);
        }
    }

    #[test]
    fn ideal_product_laws(a in ideal(6), b in ideal(6), c in ideal(6)) {
        let ab = a.product(&b).unwrap();
        prop_assert_eq!(&ab, &b.product(&a).unwrap());
        prop_assert_eq!(ab.product(&c).unwrap(), a.product(&b.product(&c).unwrap()).unwrap());
        prop_assert!(a.contains_ideal(&ab));
    }

    #[test]
    fn colon_is_the_largest_cofactor(e in ideal(6), a in ideal(4)) {
        let q = e.colon(&a);
        prop_assert!(e.contains_ideal(&a.product(&q).unwrap()));
        for x in 0..=7u64 {
            for y in 0..=7u64 {
                let m = ExpPair::new(x, y);
                let inside = a.gens().iter().all(|g| e.contains_monomial(ExpPair::new(g.x + x, g.y + y)));
                prop_assert_eq!(q.contains_monomial(m), inside);
            }
        }
    }

    #[test]
    fn parsers_read_their_own_output(s in nat_set(40), i in ideal(12), n in 2usize..6) {
        prop_assert_eq!(&s.to_string().parse::<NatSet>().unwrap(), &s);
        prop_assert_eq!(&serde_json::from_str::<NatSet>(&serde_json::to_string(&s).unwrap()).unwrap(), &s);
        prop_assert_eq!(&i.to_string().parse::<MonIdeal>().unwrap(), &i);
        prop_assert_eq!(&i.to_text().parse::<MonIdeal>().unwrap(), &i);
        prop_assert_eq!(&serde_json::to_string(&i).unwrap().parse::<MonIdeal>().unwrap(), &i);
        let seq = SumSequence::minimal(n).unwrap();
        prop_assert_eq!(seq.to_string().parse::<SumSequence>().unwrap(), seq);
    }

    #[test]
    fn graded_pieces_grow_by_linear_forms(i in ideal(5)) {
        let g = GradedIdeal2::from_monomial(&i);
        let d = g.max_degree();
        for t in d..d + 2 {
            prop_assert_eq!(g.graded_piece(t + 1), times_linear_forms(&g.graded_piece(t)));
        }
    }

    #[test]
    fn rref_is_idempotent(rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 4), 0..5)) {
        let rows: Vec<Vec<Rational>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(|c| Rational::from_integer(c.into())).collect())
            .collect();
        let once = rref(rows);
        prop_assert_eq!(rref(once.clone()), once);
    }

    #[test]
    fn set_lengths_are_consistent(a in reduced_set(14)) {
        let engine = Engine::new(&ReducedPowerMonoid, SearchConfig::default());
        let l = engine.lengths(&a).unwrap();
        prop_assert!(l.max().unwrap() <= a.max_element());
        prop_assert_eq!(l.contains(1), engine.is_atom(&a).unwrap());
        for (b, c) in engine.split(&a).unwrap().iter() {
            prop_assert_eq!(&sumset(b, c).unwrap(), &a);
        }
    }

    #[test]
    fn ideal_lengths_are_consistent(e in proper_ideal(4)) {
        let engine = Engine::new(&MonomialMonoid, SearchConfig::default());
        let l = engine.lengths(&e).unwrap();
        prop_assert!(l.max().unwrap() <= e.mdeg());
        prop_assert_eq!(l.contains(1), engine.is_atom(&e).unwrap());
        prop_assert_eq!(engine.first_split(&e).unwrap().is_none(), l == LengthSet::from([1]));
        for (a, b) in engine.split(&e).unwrap().iter() {
            prop_assert_eq!(&a.product(b).unwrap(), &e);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn min_degree_adds(a in ideal(8), b in ideal(8)) {
        prop_assert_eq!(a.product(&b).unwrap().mdeg(), a.mdeg() + b.mdeg());
    }
}
