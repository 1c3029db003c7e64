//! The graph of a gentle algebra and the algebra of a Brauer graph.

use std::collections::HashSet;

use super::{BEdge, BVertex, BrauerGraph, ConstructionError};
use crate::gentle::{maximal_paths, MaximalMember};
use crate::presentation::{BoundAlgebra, Path, Presentation, Quiver, RelationSet};
use crate::scalar::Scalar;

/// Builds the Brauer graph whose algebra is the trivial extension of a gentle
/// algebra. Vertices are the maximal paths and marked trivial paths, edges are
/// the quiver vertices, and a maximal path lists its vertices in order.
pub fn gamma_of_gentle<F: Scalar>(alg: &BoundAlgebra<F>) -> Result<BrauerGraph, ConstructionError> {
    let set = maximal_paths(alg)?;
    let q = alg.quiver();
    let members = set.members();

    let mut used = HashSet::new();
    let mut vertices = Vec::with_capacity(members.len());
    let mut rotation = Vec::with_capacity(members.len());
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); q.vertex_count()];
    for (k, m) in members.iter().enumerate() {
        let seq = m.vertices(q);
        let mut distinct = HashSet::new();
        for &v in &seq {
            if !distinct.insert(v) {
                return Err(ConstructionError::SelfFolded {
                    vertex: q.vertex_name(v).to_string(),
                    member: member_label(q, m),
                });
            }
            holders[v].push(k);
        }
        let mut id = format!("v({})", member_label(q, m));
        while !used.insert(id.clone()) {
            id.push('\'');
        }
        vertices.push(BVertex { id, multiplicity: 1 });
        rotation.push(seq);
    }

    let mut edges = Vec::with_capacity(q.vertex_count());
    for (v, h) in holders.iter().enumerate() {
        // maximal_paths has already checked that each vertex lies in two members
        debug_assert_eq!(h.len(), 2);
        edges.push(BEdge {
            id: q.vertex_name(v).to_string(),
            ends: (h[0], h[1]),
        });
    }
    Ok(BrauerGraph::new(vertices, edges, rotation)?)
}

fn member_label(q: &Quiver, m: &MaximalMember) -> String {
    match m {
        MaximalMember::Path(p) => p
            .arrows
            .iter()
            .map(|&a| q.arrow_info(a).name.as_str())
            .collect::<Vec<_>>()
            .join("."),
        MaximalMember::Trivial(v) => format!("e{}", q.vertex_name(*v)),
    }
}

/// Presentation of the Brauer graph algebra. Quiver vertices are the edges of
/// the graph (named by edge id); each graph vertex with a cycle contributes
/// arrows `<vertex>_<position>` following its cyclic order.
pub fn algebra_of_brauer_graph(g: &BrauerGraph) -> Presentation {
    let mut quiver = Quiver::new();
    for e in g.edges() {
        quiver.add_vertex(&e.id).expect("edge ids are unique");
    }

    // arrow_at[v][k]: arrow leaving position k of the cyclic order at v
    let mut arrow_at: Vec<Option<Vec<usize>>> = Vec::with_capacity(g.vertex_count());
    for (v, bv) in g.vertices().iter().enumerate() {
        let rot = g.rotation(v);
        if rot.len() == 1 && bv.multiplicity == 1 {
            arrow_at.push(None);
            continue;
        }
        let mut ids = Vec::with_capacity(rot.len());
        for k in 0..rot.len() {
            let from = &g.edges()[rot[k]].id;
            let to = &g.edges()[rot[(k + 1) % rot.len()]].id;
            let name = format!("{}_{}", bv.id, k);
            let a = quiver
                .add_arrow(&name, from, to)
                .expect("generated arrow names are unique");
            ids.push(a);
        }
        arrow_at.push(Some(ids));
    }

    // special cycle C_v^m starting at the edge in position k
    let cycle_power = |v: usize, k: usize| -> Option<Vec<usize>> {
        let ids = arrow_at[v].as_ref()?;
        let d = ids.len();
        let m = g.vertices()[v].multiplicity;
        Some((0..d * m).map(|t| ids[(k + t) % d]).collect())
    };
    let position = |v: usize, e: usize| {
        g.rotation(v)
            .iter()
            .position(|&x| x == e)
            .expect("edge incident to vertex")
    };
    let path = |arrows: Vec<usize>| Path::from_arrows(&quiver, arrows).expect("arrows compose");

    let mut relations = RelationSet::default();
    for (e, edge) in g.edges().iter().enumerate() {
        let (u, w) = edge.ends;
        let cu = cycle_power(u, position(u, e));
        let cw = cycle_power(w, position(w, e));
        if let (Some(a), Some(b)) = (&cu, &cw) {
            relations.binomials.push((path(a.clone()), path(b.clone())));
        }
        for mut c in [cu, cw].into_iter().flatten() {
            c.push(c[0]);
            relations.monomials.push(path(c));
        }
    }
    // compositions of arrows from two different cycles vanish
    let owner: Vec<usize> = {
        let mut o = vec![0; quiver.arrow_count()];
        for (v, ids) in arrow_at.iter().enumerate() {
            for &a in ids.iter().flatten() {
                o[a] = v;
            }
        }
        o
    };
    for a in 0..quiver.arrow_count() {
        let t = quiver.arrow_info(a).target;
        let next: Vec<usize> = quiver.arrows_from(t).collect();
        for b in next {
            if owner[a] != owner[b] {
                relations.monomials.push(path(vec![a, b]));
            }
        }
    }
    Presentation::new(quiver, relations).expect("Brauer graph algebra presentation is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::shapes;
    use crate::presentation::parse_presentation_text;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn dimension_formula(g: &BrauerGraph) -> usize {
        let mut d = 2 * g.edge_count();
        for (v, bv) in g.vertices().iter().enumerate() {
            let val = g.degree(v);
            d += val * (bv.multiplicity * val - 1);
        }
        d
    }

    fn alg(text: &str) -> BoundAlgebra<Q> {
        BoundAlgebra::new(parse_presentation_text(text).unwrap()).unwrap()
    }

    #[test]
    fn two_edge_line_gives_the_symmetric_nakayama_algebra() {
        let p = algebra_of_brauer_graph(&shapes::line(2));
        let a = BoundAlgebra::<Q>::new(p).unwrap();
        assert_eq!(a.dimension(), 6);
        assert_eq!(a.cartan().entries, vec![vec![2, 1], vec![1, 2]]);
        let f4 = alg("vertices: 1 2\narrow: x 1 2\narrow: y 2 1\nzero: x y x\nzero: y x y\n");
        assert_eq!(a.cartan(), f4.cartan());
    }

    #[test]
    fn star_has_one_cycle_relation() {
        let p = algebra_of_brauer_graph(&shapes::star(3, 1));
        assert_eq!(p.quiver().arrow_count(), 3);
        assert!(p.relations().binomials.is_empty());
        assert!(p.relations().monomials.iter().all(|m| m.len() == 4));
        let a = BoundAlgebra::<Q>::new(p).unwrap();
        assert_eq!(a.dimension(), dimension_formula(&shapes::star(3, 1)));
    }

    #[test]
    fn dimension_matches_the_counting_formula() {
        for g in [
            shapes::line(3),
            shapes::line(4),
            shapes::star(2, 2),
            shapes::star(3, 3),
            shapes::cycle(2),
            shapes::cycle(3),
            shapes::cycle(4),
        ] {
            let a = BoundAlgebra::<Q>::new(algebra_of_brauer_graph(&g)).unwrap();
            assert_eq!(a.dimension(), dimension_formula(&g), "{}", g.to_text());
            assert!(a.cartan().is_symmetric());
        }
    }

    #[test]
    fn gamma_of_linear_a3_is_a_star() {
        let a = alg("vertices: 1 2 3\narrow: a 1 2\narrow: b 2 3\n");
        let g = gamma_of_gentle(&a).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
        let center = g.vertex_index("v(a.b)").unwrap();
        assert_eq!(g.rotation(center), &[0, 1, 2]);
    }

    #[test]
    fn gamma_of_zero_relation_a3_is_a_line() {
        let a = alg("vertices: 1 2 3\narrow: a 1 2\narrow: b 2 3\nzero: a b\n");
        let g = gamma_of_gentle(&a).unwrap();
        let ids: Vec<&str> = g.vertices().iter().map(|v| v.id.as_str()).collect();
        assert_eq!(ids, vec!["v(a)", "v(b)", "v(e1)", "v(e3)"]);
        assert!((0..4).all(|v| g.degree(v) <= 2));
    }

    #[test]
    fn loop_is_self_folded() {
        let a = alg("vertices: 1\narrow: x 1 1\nzero: x x\n");
        assert!(matches!(
            gamma_of_gentle(&a),
            Err(ConstructionError::SelfFolded { .. })
        ));
    }

    #[test]
    fn trivial_extension_identities() {
        for text in [
            "vertices: 1 2 3\narrow: a 1 2\narrow: b 2 3\n",
            "vertices: 1 2 3\narrow: a 1 2\narrow: b 3 2\n",
            "vertices: 1 2 3\narrow: a 1 2\narrow: b 2 3\narrow: c 3 1\nzero: a b\nzero: b c\nzero: c a\n",
            "vertices: 1 2 3 4\narrow: a 1 2\narrow: b 2 3\narrow: c 2 4\nzero: a b\n",
        ] {
            let a = alg(text);
            let t = BoundAlgebra::<Q>::new(algebra_of_brauer_graph(&gamma_of_gentle(&a).unwrap()))
                .unwrap();
            assert_eq!(t.dimension(), 2 * a.dimension());
            let c = a.cartan();
            let expected = c.add(&c.transpose());
            assert_eq!(t.cartan().relabeled(&expected.labels).unwrap(), expected);
        }
    }
}
