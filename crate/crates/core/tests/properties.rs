//! Property tests over seeded random gentle algebras and Brauer graphs.

use std::sync::Arc;

use brauerkit::brauer::{
    algebra_of_brauer_graph, classify_graph, gamma_of_gentle, shapes, GraphTag,
};
use brauerkit::corpus::{
    brauer_graphs, gentle_non_trees, gentle_trees, linear_orientations, tilde_a_cycles,
};
use brauerkit::gentle::{maximal_paths, quiver_shape, rad_square_zero, ShapeTag};
use brauerkit::presentation::{parse_presentation_text, Presentation};
use brauerkit::repmod::{fac_contains, hom_dim, syzygy, RepModule};
use brauerkit::stt::{enumerate_stt_pairs, hasse_quiver, SttOptions, SttPair};
use brauerkit::{Algebra, Rational};
use proptest::prelude::*;

fn bound(p: &Presentation) -> Algebra {
    Algebra::new(p.clone()).expect("corpus presentations are admissible")
}

fn trivial_extension(a: &Algebra) -> Algebra {
    Algebra::new(algebra_of_brauer_graph(&gamma_of_gentle(a).unwrap())).unwrap()
}

fn central_binomial(n: usize) -> usize {
    (1..=n).fold(1, |acc, k| acc * (n + k) / k)
}

fn any_gentle() -> impl Strategy<Value = Presentation> {
    (any::<u64>(), 2usize..=5, any::<bool>()).prop_map(|(seed, n, tree)| {
        let s = if tree {
            gentle_trees(seed, 1, n)
        } else {
            gentle_non_trees(seed, 1, n)
        };
        s.into_iter().next().unwrap().presentation
    })
}

fn gentle_tree(max_n: usize) -> impl Strategy<Value = Presentation> {
    (any::<u64>(), 2..=max_n).prop_map(|(seed, n)| {
        gentle_trees(seed, 1, n).into_iter().next().unwrap().presentation
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_forms_are_stable(p in any_gentle()) {
        let a = bound(&p);
        for b in 0..a.dimension() {
            let path = a.basis_path(b).clone();
            prop_assert_eq!(a.reduce(&path), vec![(b, Rational::from_integer(1))]);
        }
        prop_assert_eq!(a.dimension(), a.cartan().total());
    }

    #[test]
    fn text_round_trip(p in any_gentle()) {
        let again = parse_presentation_text(&p.to_text()).unwrap();
        prop_assert_eq!(again.to_text(), p.to_text());
    }

    #[test]
    fn maximal_path_bookkeeping(p in any_gentle()) {
        let a = bound(&p);
        let m = maximal_paths(&a).unwrap();
        let q = a.quiver();
        let mut hits = vec![0; q.arrow_count()];
        for path in &m.maximal {
            for &x in &path.arrows {
                hits[x] += 1;
            }
        }
        prop_assert!(hits.iter().all(|&h| h == 1));
        let mut seen = vec![0; q.vertex_count()];
        for member in m.members() {
            for v in member.vertices(q) {
                seen[v] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&h| h == 2));
        if rad_square_zero(&a) {
            prop_assert!(m.maximal.iter().all(|path| path.len() == 1));
        }
    }

    #[test]
    fn shape_survives_reversal(p in any_gentle()) {
        let coarse = |t: ShapeTag| match t {
            ShapeTag::LinearAOriented | ShapeTag::TypeATree => 0,
            ShapeTag::GeneralTree => 1,
            ShapeTag::TildeACycle => 2,
            ShapeTag::Other => 3,
        };
        prop_assert_eq!(
            coarse(quiver_shape(&p).tag),
            coarse(quiver_shape(&p.opposite()).tag)
        );
    }

    #[test]
    fn trivial_extension_identities(p in any_gentle()) {
        let a = bound(&p);
        let g = gamma_of_gentle(&a).unwrap();
        prop_assert_eq!(g.edge_count(), a.vertex_count());
        prop_assert_eq!(g.vertex_count(), maximal_paths(&a).unwrap().members().len());
        let t = Algebra::new(algebra_of_brauer_graph(&g)).unwrap();
        prop_assert_eq!(t.dimension(), 2 * a.dimension());
        let c = a.cartan();
        let expected = c.add(&c.transpose());
        prop_assert_eq!(t.cartan().relabeled(&expected.labels).unwrap(), expected);
        prop_assert!(t.cartan().is_symmetric());
    }

    #[test]
    fn tree_theorem(p in any_gentle()) {
        let a = bound(&p);
        let class = classify_graph(&gamma_of_gentle(&a).unwrap());
        prop_assert_eq!(class.is_tree_without_exceptional_vertex(), quiver_shape(&p).is_tree());
    }

    #[test]
    fn star_and_line_theorem(p in gentle_tree(6)) {
        let a = bound(&p);
        let class = classify_graph(&gamma_of_gentle(&a).unwrap());
        prop_assert_eq!(class.is_star, quiver_shape(&p).tag == ShapeTag::LinearAOriented);
        prop_assert_eq!(class.is_line, rad_square_zero(&a));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn tree_count_identity(p in gentle_tree(4)) {
        let a = bound(&p);
        let n = a.vertex_count();
        let t = Arc::new(trivial_extension(&a));
        let run = enumerate_stt_pairs(t, SttOptions::default()).unwrap();
        prop_assert_eq!(run.count(), central_binomial(n));
        let h = hasse_quiver(&run).unwrap();
        prop_assert!(h.is_regular(n));
        prop_assert_eq!(h.sources(), vec![h.source]);
        prop_assert_eq!(h.sinks(), vec![h.sink]);
    }

    #[test]
    fn catalog_module_laws(p in gentle_tree(3)) {
        let a = bound(&p);
        let t = Arc::new(trivial_extension(&a));
        let run = enumerate_stt_pairs(t.clone(), SttOptions::default()).unwrap();
        let entries = run.catalog.entries();
        let projectives: Vec<RepModule<Rational>> = (0..t.vertex_count())
            .map(|i| RepModule::projective(t.clone(), i).unwrap())
            .collect();
        let in_pair: Vec<bool> = (0..entries.len())
            .map(|k| run.pairs.iter().any(|p: &SttPair| p.modules.contains(&k)))
            .collect();
        for (k, e) in entries.iter().enumerate() {
            for (i, p) in projectives.iter().enumerate() {
                prop_assert_eq!(hom_dim(p, &e.module).unwrap(), e.dims()[i]);
            }
            prop_assert_eq!(e.tau.is_zero(), e.projective_at.is_some());
            if e.projective_at.is_none() {
                let omega2 = syzygy(&syzygy(&e.module).unwrap()).unwrap();
                prop_assert_eq!(e.tau.dims(), omega2.dims());
            }
            prop_assert!(fac_contains(&e.module, &e.module).unwrap());
            prop_assert_eq!(in_pair[k], e.tau_rigid);
        }
    }
}

#[test]
fn orientation_independence() {
    for n in 2..=4 {
        let counts: Vec<usize> = linear_orientations(n)
            .iter()
            .map(|s| {
                let t = Arc::new(trivial_extension(&bound(&s.presentation)));
                enumerate_stt_pairs(t, SttOptions::default()).unwrap().count()
            })
            .collect();
        assert!(counts.iter().all(|&c| c == central_binomial(n)), "{counts:?}");
    }
}

#[test]
fn multiplicity_independence() {
    let count = |m| {
        let t = Arc::new(Algebra::new(algebra_of_brauer_graph(&shapes::star(2, m))).unwrap());
        enumerate_stt_pairs(t, SttOptions::default()).unwrap().count()
    };
    assert_eq!(count(1), 6);
    assert_eq!(count(2), 6);
}

#[test]
fn cycle_theorem_on_every_small_cycle() {
    for n in 2..=5 {
        for s in tilde_a_cycles(n) {
            let a = bound(&s.presentation);
            let class = classify_graph(&gamma_of_gentle(&a).unwrap());
            assert_eq!(class.tag == GraphTag::Cycle, rad_square_zero(&a), "{}", s.name);
        }
    }
}

#[test]
fn random_brauer_graphs_are_symmetric() {
    for s in brauer_graphs(5, 24) {
        let t = Algebra::new(algebra_of_brauer_graph(&s.graph)).unwrap();
        assert!(t.cartan().is_symmetric(), "{}", s.name);
    }
}
