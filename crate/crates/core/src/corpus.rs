//! Seeded generators of gentle presentations and Brauer graphs.
//!
//! Every generator is a pure function of its seed and size arguments.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::brauer::{BEdge, BVertex, BrauerGraph};
use crate::presentation::{Path, Presentation, Quiver, RelationSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleKind {
    Tree,
    NonTree,
    TildeACycle,
    LinearA,
}

#[derive(Clone, Debug)]
pub struct GentleSample {
    pub name: String,
    pub kind: SampleKind,
    pub presentation: Presentation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    Tree,
    OddCycle,
    EvenCycle,
    TwoCycles,
}

#[derive(Clone, Debug)]
pub struct BrauerSample {
    pub name: String,
    pub kind: GraphKind,
    pub graph: BrauerGraph,
}

/// An oriented loop-free multigraph on vertices `0..n`.
type Arrows = Vec<(usize, usize)>;

fn degrees_ok(n: usize, arrows: &Arrows) -> bool {
    let mut ins = vec![0; n];
    let mut outs = vec![0; n];
    for &(s, t) in arrows {
        outs[s] += 1;
        ins[t] += 1;
    }
    ins.iter().chain(&outs).all(|&d| d <= 2)
}

/// Zero relation sets at one vertex satisfying both gentle continuation
/// rules: each arrow has at most one continuation inside and at most one
/// outside the ideal.
fn local_choices(ins: &[usize], outs: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = ins
        .iter()
        .flat_map(|&a| outs.iter().map(move |&b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let zero = |k: usize| mask >> k & 1 == 1;
        let ok_in = ins.iter().all(|&a| {
            let z = (0..pairs.len()).filter(|&k| pairs[k].0 == a && zero(k)).count();
            let nz = (0..pairs.len()).filter(|&k| pairs[k].0 == a && !zero(k)).count();
            z <= 1 && nz <= 1
        });
        let ok_out = outs.iter().all(|&b| {
            let z = (0..pairs.len()).filter(|&k| pairs[k].1 == b && zero(k)).count();
            let nz = (0..pairs.len()).filter(|&k| pairs[k].1 == b && !zero(k)).count();
            z <= 1 && nz <= 1
        });
        if ok_in && ok_out {
            out.push((0..pairs.len()).filter(|&k| zero(k)).map(|k| pairs[k]).collect());
        }
    }
    out
}

fn arrows_at(n: usize, arrows: &Arrows) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut at = vec![(Vec::new(), Vec::new()); n];
    for (k, &(s, t)) in arrows.iter().enumerate() {
        at[s].1.push(k);
        at[t].0.push(k);
    }
    at
}

/// No infinite nonzero path: the graph of nonzero compositions is acyclic.
fn finite_dimensional(arrows: &Arrows, zero: &[(usize, usize)]) -> bool {
    let m = arrows.len();
    let next: Vec<Vec<usize>> = (0..m)
        .map(|a| {
            (0..m)
                .filter(|&b| arrows[a].1 == arrows[b].0 && !zero.contains(&(a, b)))
                .collect()
        })
        .collect();
    let mut indeg = vec![0; m];
    for v in &next {
        for &b in v {
            indeg[b] += 1;
        }
    }
    let mut ready: Vec<usize> = (0..m).filter(|&a| indeg[a] == 0).collect();
    let mut seen = 0;
    while let Some(a) = ready.pop() {
        seen += 1;
        for &b in &next[a] {
            indeg[b] -= 1;
            if indeg[b] == 0 {
                ready.push(b);
            }
        }
    }
    seen == m
}

/// Whether some nonzero path visits a vertex twice. The Brauer graph of
/// such an algebra has a loop edge, which the construction does not cover.
fn has_folded_path(arrows: &Arrows, zero: &[(usize, usize)]) -> bool {
    fn walk(arrows: &Arrows, zero: &[(usize, usize)], path: &mut Vec<usize>, seen: &mut Vec<usize>) -> bool {
        let last = *path.last().expect("nonempty");
        let end = arrows[last].1;
        if seen.contains(&end) {
            return true;
        }
        seen.push(end);
        for b in 0..arrows.len() {
            if arrows[b].0 == end && !zero.contains(&(last, b)) {
                path.push(b);
                if walk(arrows, zero, path, seen) {
                    return true;
                }
                path.pop();
            }
        }
        seen.pop();
        false
    }
    (0..arrows.len()).any(|a| walk(arrows, zero, &mut vec![a], &mut vec![arrows[a].0]))
}

fn build(n: usize, arrows: &Arrows, zero: &[(usize, usize)]) -> Presentation {
    let mut q = Quiver::new();
    for v in 0..n {
        q.add_vertex(&(v + 1).to_string()).expect("fresh vertex");
    }
    for (k, &(s, t)) in arrows.iter().enumerate() {
        q.add_arrow(&format!("a{}", k + 1), &(s + 1).to_string(), &(t + 1).to_string())
            .expect("fresh arrow");
    }
    let mut zero = zero.to_vec();
    zero.sort();
    let monomials = zero
        .iter()
        .map(|&(a, b)| Path {
            start: arrows[a].0,
            arrows: vec![a, b],
        })
        .collect();
    Presentation::new(
        q,
        RelationSet {
            monomials,
            binomials: Vec::new(),
        },
    )
    .expect("generated presentation is well formed")
}

/// A gentle presentation on the given arrows with relations drawn at
/// random; `None` if the draw is infinite dimensional or folded.
fn with_random_relations(rng: &mut ChaCha8Rng, n: usize, arrows: &Arrows) -> Option<Presentation> {
    let mut zero = Vec::new();
    for (ins, outs) in arrows_at(n, arrows) {
        let choices = local_choices(&ins, &outs);
        zero.extend(choices.choose(rng).expect("the empty choice is always valid").clone());
    }
    if !finite_dimensional(arrows, &zero) || has_folded_path(arrows, &zero) {
        return None;
    }
    Some(build(n, arrows, &zero))
}

/// Random tree on `n` vertices with every in- and out-degree at most 2.
fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Arrows {
    loop {
        let mut arrows = Vec::with_capacity(n.saturating_sub(1));
        let mut ok = true;
        for v in 1..n {
            let mut placed = false;
            for _ in 0..32 {
                let p = rng.gen_range(0..v);
                let e = if rng.gen_bool(0.5) { (p, v) } else { (v, p) };
                arrows.push(e);
                if degrees_ok(n, &arrows) {
                    placed = true;
                    break;
                }
                arrows.pop();
            }
            if !placed {
                ok = false;
                break;
            }
        }
        if ok {
            return arrows;
        }
    }
}

/// `count` gentle tree algebras with 2 to `max_n` vertices.
pub fn gentle_trees(seed: u64, count: usize, max_n: usize) -> Vec<GentleSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let n = rng.gen_range(2..=max_n.max(2));
            let arrows = random_tree(&mut rng, n);
            let presentation =
                with_random_relations(&mut rng, n, &arrows).expect("trees are finite and unfolded");
            GentleSample {
                name: format!("tree-{seed}-{k}"),
                kind: SampleKind::Tree,
                presentation,
            }
        })
        .collect()
}

/// `count` loop-free gentle algebras whose quiver has at least one cycle
/// in the underlying graph, with 2 to `max_n` vertices.
pub fn gentle_non_trees(seed: u64, count: usize, max_n: usize) -> Vec<GentleSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=max_n.max(2));
        let mut arrows = random_tree(&mut rng, n);
        let extra = rng.gen_range(1..=2);
        for _ in 0..extra {
            let s = rng.gen_range(0..n);
            let t = rng.gen_range(0..n);
            if s == t {
                continue;
            }
            arrows.push((s, t));
            if !degrees_ok(n, &arrows) {
                arrows.pop();
            }
        }
        if arrows.len() < n {
            continue;
        }
        if let Some(presentation) = with_random_relations(&mut rng, n, &arrows) {
            out.push(GentleSample {
                name: format!("nontree-{seed}-{}", out.len()),
                kind: SampleKind::NonTree,
                presentation,
            });
        }
    }
    out
}

/// Every gentle algebra on a cycle of length `n` (all orientations and all
/// relation choices) that is finite dimensional and has no folded path.
pub fn tilde_a_cycles(n: usize) -> Vec<GentleSample> {
    let mut out = Vec::new();
    for orient in 0u32..(1 << n) {
        let arrows: Arrows = (0..n)
            .map(|i| {
                let j = (i + 1) % n;
                if orient >> i & 1 == 0 {
                    (i, j)
                } else {
                    (j, i)
                }
            })
            .collect();
        let locals: Vec<Vec<Vec<(usize, usize)>>> = arrows_at(n, &arrows)
            .iter()
            .map(|(ins, outs)| local_choices(ins, outs))
            .collect();
        let mut picks = vec![0usize; n];
        loop {
            let zero: Vec<(usize, usize)> = (0..n).flat_map(|v| locals[v][picks[v]].clone()).collect();
            if finite_dimensional(&arrows, &zero) && !has_folded_path(&arrows, &zero) {
                out.push(GentleSample {
                    name: format!("cycle{n}-o{orient}-{}", out.len()),
                    kind: SampleKind::TildeACycle,
                    presentation: build(n, &arrows, &zero),
                });
            }
            // odometer over the local choices
            let mut v = 0;
            while v < n {
                picks[v] += 1;
                if picks[v] < locals[v].len() {
                    break;
                }
                picks[v] = 0;
                v += 1;
            }
            if v == n {
                break;
            }
        }
    }
    out
}

/// The `2^(n-1)` orientations of the path quiver on `n` vertices, without
/// relations.
pub fn linear_orientations(n: usize) -> Vec<GentleSample> {
    (0u32..(1 << (n - 1)))
        .map(|orient| {
            let arrows: Arrows = (0..n - 1)
                .map(|i| if orient >> i & 1 == 0 { (i, i + 1) } else { (i + 1, i) })
                .collect();
            GentleSample {
                name: format!("A{n}-o{orient}"),
                kind: SampleKind::LinearA,
                presentation: build(n, &arrows, &[]),
            }
        })
        .collect()
}

/// Radical square zero oriented cycle on `n` vertices.
pub fn radical_square_zero_cycle(n: usize) -> Presentation {
    let arrows: Arrows = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let zero: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &arrows, &zero)
}

fn graph_from_edges(rng: &mut ChaCha8Rng, vertices: usize, edges: &[(usize, usize)], mult: &[usize]) -> BrauerGraph {
    let bv = (0..vertices)
        .map(|v| BVertex {
            id: format!("v{v}"),
            multiplicity: mult[v],
        })
        .collect();
    let be = edges
        .iter()
        .enumerate()
        .map(|(k, &ends)| BEdge {
            id: format!("{}", k + 1),
            ends,
        })
        .collect();
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); vertices];
    for (k, &(a, b)) in edges.iter().enumerate() {
        rotation[a].push(k);
        rotation[b].push(k);
    }
    for r in &mut rotation {
        r.shuffle(rng);
    }
    BrauerGraph::new(bv, be, rotation).expect("generated Brauer graph is valid")
}

/// Attaches `extra` pendant tree edges to random vertices.
fn attach_trees(rng: &mut ChaCha8Rng, vertices: &mut usize, edges: &mut Vec<(usize, usize)>, extra: usize) {
    for _ in 0..extra {
        let p = rng.gen_range(0..*vertices);
        edges.push((p, *vertices));
        *vertices += 1;
    }
}

/// Brauer graphs cycling through trees, odd cycles, even cycles and
/// graphs with two independent cycles, each with random rotations and a
/// few multiplicities of 2. Kept small (at most 5 edges).
pub fn brauer_graphs(seed: u64, count: usize) -> Vec<BrauerSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kinds = [
        GraphKind::Tree,
        GraphKind::OddCycle,
        GraphKind::EvenCycle,
        GraphKind::TwoCycles,
    ];
    (0..count)
        .map(|k| {
            let kind = kinds[k % kinds.len()];
            let mut edges: Vec<(usize, usize)> = Vec::new();
            let mut vertices;
            match kind {
                GraphKind::Tree => {
                    vertices = 1;
                    let e = rng.gen_range(2..=4);
                    attach_trees(&mut rng, &mut vertices, &mut edges, e);
                }
                GraphKind::OddCycle | GraphKind::EvenCycle => {
                    let len = match kind {
                        GraphKind::OddCycle => *[3usize, 3, 5].choose(&mut rng).expect("nonempty"),
                        _ => *[2usize, 4].choose(&mut rng).expect("nonempty"),
                    };
                    vertices = len;
                    edges.extend((0..len).map(|i| (i, (i + 1) % len)));
                    let extra = rng.gen_range(0..=(5 - edges.len()).min(2));
                    attach_trees(&mut rng, &mut vertices, &mut edges, extra);
                }
                GraphKind::TwoCycles => {
                    // two parallel pairs, or a theta graph
                    if rng.gen_bool(0.5) {
                        vertices = 3;
                        edges.extend([(0, 1), (0, 1), (1, 2), (1, 2)]);
                    } else {
                        vertices = 2;
                        edges.extend([(0, 1), (0, 1), (0, 1)]);
                    }
                }
            }
            let mut mult = vec![1; vertices];
            if rng.gen_bool(0.3) {
                let v = rng.gen_range(0..vertices);
                mult[v] = 2;
            }
            let graph = graph_from_edges(&mut rng, vertices, &edges, &mult);
            BrauerSample {
                name: format!("brauer-{seed}-{k}"),
                kind,
                graph,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::gamma_of_gentle;
    use crate::gentle::{check_gentle, quiver_shape};
    use crate::presentation::BoundAlgebra;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    #[test]
    fn trees_are_gentle_trees() {
        for s in gentle_trees(7, 30, 6) {
            let a = BoundAlgebra::<Q>::new(s.presentation.clone()).unwrap();
            assert!(check_gentle(&a).is_gentle, "{}", s.presentation.to_text());
            assert!(quiver_shape(&s.presentation).is_tree());
            gamma_of_gentle(&a).unwrap();
        }
    }

    #[test]
    fn non_trees_are_gentle_and_supported() {
        for s in gentle_non_trees(11, 30, 5) {
            let a = BoundAlgebra::<Q>::new(s.presentation.clone()).unwrap();
            assert!(check_gentle(&a).is_gentle, "{}", s.presentation.to_text());
            assert!(!quiver_shape(&s.presentation).is_tree());
            gamma_of_gentle(&a).unwrap();
        }
    }

    #[test]
    fn cycles_include_the_radical_square_zero_member() {
        for n in 2..=5 {
            let all = tilde_a_cycles(n);
            assert!(!all.is_empty());
            let target = radical_square_zero_cycle(n).to_text();
            assert!(all.iter().any(|s| s.presentation.to_text() == target));
        }
    }

    #[test]
    fn orientation_count() {
        assert_eq!(linear_orientations(4).len(), 8);
    }

    #[test]
    fn seeds_reproduce() {
        let a: Vec<String> = gentle_trees(3, 5, 5).iter().map(|s| s.presentation.to_text()).collect();
        let b: Vec<String> = gentle_trees(3, 5, 5).iter().map(|s| s.presentation.to_text()).collect();
        assert_eq!(a, b);
        let g1: Vec<String> = brauer_graphs(3, 8).iter().map(|s| s.graph.to_text()).collect();
        let g2: Vec<String> = brauer_graphs(3, 8).iter().map(|s| s.graph.to_text()).collect();
        assert_eq!(g1, g2);
    }
}
