//! Support τ-tilting pairs as maximal cliques of the compatibility graph.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::catalog::Catalog;
use super::SttError;
use crate::repmod::hom_dim;
use crate::scalar::Scalar;

/// One summand of a pair: a catalogued module or a marked vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Summand {
    Module(usize),
    Mark(usize),
}

/// A support τ-tilting pair `(M, P)`: catalog indices of the summands of
/// `M` and the vertices `i` with `e_i` in `P`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SttPair {
    pub modules: Vec<usize>,
    pub marks: Vec<usize>,
}

impl SttPair {
    pub fn summands(&self) -> Vec<Summand> {
        self.modules
            .iter()
            .map(|&m| Summand::Module(m))
            .chain(self.marks.iter().map(|&i| Summand::Mark(i)))
            .collect()
    }

    pub fn size(&self) -> usize {
        self.modules.len() + self.marks.len()
    }

    /// Sort key: fewer marks first, then module and mark lists.
    pub fn key(&self) -> (usize, &[usize], &[usize]) {
        (self.marks.len(), &self.modules, &self.marks)
    }

    fn from_summands(mut s: Vec<Summand>) -> Self {
        s.sort();
        let mut modules = Vec::new();
        let mut marks = Vec::new();
        for x in s {
            match x {
                Summand::Module(m) => modules.push(m),
                Summand::Mark(i) => marks.push(i),
            }
        }
        SttPair { modules, marks }
    }

    /// Human-readable form using catalog labels and vertex names.
    pub fn describe<F: Scalar>(&self, cat: &Catalog<F>) -> String {
        let q = cat.algebra().quiver();
        let m: Vec<&str> = self.modules.iter().map(|&k| cat.entries()[k].label()).collect();
        let p: Vec<&str> = self.marks.iter().map(|&i| q.vertex_name(i)).collect();
        format!("({} | {})", m.join(" ⊕ "), p.join(" "))
    }
}

impl fmt::Display for SttPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}|{:?}", self.modules, self.marks)
    }
}

/// `Hom(X, τY) = 0` for ordered pairs of τ-rigid catalog entries, cached
/// by label so it survives catalog growth.
#[derive(Default, Debug, Clone)]
pub struct HomCache {
    vanishes: HashMap<(String, String), bool>,
}

impl HomCache {
    fn fill<F: Scalar>(&mut self, cat: &Catalog<F>, rigid: &[usize]) -> Result<(), SttError> {
        let e = cat.entries();
        let todo: Vec<(usize, usize)> = rigid
            .iter()
            .flat_map(|&x| rigid.iter().map(move |&y| (x, y)))
            .filter(|&(x, y)| {
                !self
                    .vanishes
                    .contains_key(&(e[x].label().to_string(), e[y].label().to_string()))
            })
            .collect();
        let found: Vec<Result<((String, String), bool), SttError>> = todo
            .par_iter()
            .map(|&(x, y)| {
                let v = x == y || e[y].tau.is_zero() || hom_dim(&e[x].module, &e[y].tau)? == 0;
                Ok(((e[x].label().to_string(), e[y].label().to_string()), v))
            })
            .collect();
        for r in found {
            let (k, v) = r?;
            self.vanishes.insert(k, v);
        }
        Ok(())
    }

    fn get<F: Scalar>(&self, cat: &Catalog<F>, x: usize, y: usize) -> bool {
        let e = cat.entries();
        self.vanishes[&(e[x].label().to_string(), e[y].label().to_string())]
    }
}

/// Pairwise compatibility of two summands.
pub fn compatible<F: Scalar>(cat: &Catalog<F>, a: Summand, b: Summand) -> Result<bool, SttError> {
    let e = cat.entries();
    Ok(match (a, b) {
        (Summand::Mark(_), Summand::Mark(_)) => true,
        (Summand::Module(m), Summand::Mark(i)) | (Summand::Mark(i), Summand::Module(m)) => {
            e[m].dims()[i] == 0
        }
        (Summand::Module(x), Summand::Module(y)) => {
            hom_dim(&e[x].module, &e[y].tau)? == 0 && hom_dim(&e[y].module, &e[x].tau)? == 0
        }
    })
}

type Bits = Vec<u64>;

fn bit(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn count(b: &Bits) -> usize {
    b.iter().map(|w| w.count_ones() as usize).sum()
}

fn and(a: &Bits, b: &Bits) -> Bits {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

/// Cliques of size exactly `n` containing `chosen` and otherwise drawn from
/// `cand`, each listed once with vertices in increasing order.
fn cliques_from(adj: &[Bits], chosen: &mut Vec<usize>, cand: Bits, n: usize, out: &mut Vec<Vec<usize>>) {
    if chosen.len() == n {
        out.push(chosen.clone());
        return;
    }
    if chosen.len() + count(&cand) < n {
        return;
    }
    let mut rest = cand.clone();
    for v in 0..adj.len() {
        if !bit(&cand, v) {
            continue;
        }
        rest[v / 64] &= !(1 << (v % 64));
        chosen.push(v);
        cliques_from(adj, chosen, and(&rest, &adj[v]), n, out);
        chosen.pop();
        if chosen.len() + count(&rest) < n {
            break;
        }
    }
}

/// Compatibility graph on the τ-rigid modules and the marks, and its
/// cliques of size `n`.
fn stt_cliques<F: Scalar>(cat: &Catalog<F>, cache: &mut HomCache) -> Result<Vec<SttPair>, SttError> {
    let n = cat.algebra().vertex_count();
    let rigid = cat.tau_rigid_indices();
    cache.fill(cat, &rigid)?;
    let nodes: Vec<Summand> = rigid
        .iter()
        .map(|&m| Summand::Module(m))
        .chain((0..n).map(Summand::Mark))
        .collect();
    let words = nodes.len().div_ceil(64).max(1);
    let e = cat.entries();
    let adj: Vec<Bits> = nodes
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let mut b = vec![0u64; words];
            for (j, &c) in nodes.iter().enumerate() {
                if i == j {
                    continue;
                }
                let ok = match (a, c) {
                    (Summand::Mark(_), Summand::Mark(_)) => true,
                    (Summand::Module(m), Summand::Mark(v)) | (Summand::Mark(v), Summand::Module(m)) => {
                        e[m].dims()[v] == 0
                    }
                    (Summand::Module(x), Summand::Module(y)) => {
                        cache.get(cat, x, y) && cache.get(cat, y, x)
                    }
                };
                if ok {
                    set(&mut b, j);
                }
            }
            b
        })
        .collect();
    let found: Vec<Vec<usize>> = (0..nodes.len())
        .into_par_iter()
        .flat_map_iter(|v| {
            let mut later = vec![0u64; words];
            for w in v + 1..nodes.len() {
                set(&mut later, w);
            }
            let mut out = Vec::new();
            cliques_from(&adj, &mut vec![v], and(&later, &adj[v]), n, &mut out);
            out
        })
        .collect();
    let mut pairs: Vec<SttPair> = found
        .into_iter()
        .map(|c| SttPair::from_summands(c.into_iter().map(|k| nodes[k]).collect()))
        .collect();
    pairs.sort_by(|a, b| a.key().cmp(&b.key()));
    Ok(pairs)
}

/// Neighbours in the exchange graph: pairs sharing all but one summand.
/// The second value lists the almost complete pairs with a single
/// completion among `pairs`.
pub fn exchange_graph(pairs: &[SttPair]) -> (Vec<Vec<usize>>, usize) {
    let mut by_facet: HashMap<Vec<Summand>, Vec<usize>> = HashMap::new();
    for (k, p) in pairs.iter().enumerate() {
        let s = p.summands();
        for drop in 0..s.len() {
            let mut facet = s.clone();
            facet.remove(drop);
            facet.sort();
            by_facet.entry(facet).or_default().push(k);
        }
    }
    let mut adj = vec![BTreeSet::new(); pairs.len()];
    let mut lonely = 0;
    for members in by_facet.values() {
        if members.len() == 1 {
            lonely += 1;
        }
        for &a in members {
            for &b in members {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
    }
    (adj.into_iter().map(|s| s.into_iter().collect()).collect(), lonely)
}

fn connected(adj: &[Vec<usize>]) -> bool {
    if adj.is_empty() {
        return false;
    }
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Why the list of pairs is known to be complete.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Certificate {
    /// No bands: the catalog holds every indecomposable.
    BandFree,
    /// Bands exist, but the pairs found from strings of bounded length
    /// form an `n`-regular connected exchange graph, which is then the
    /// whole graph.
    ClosedExchangeGraph { max_string_len: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SttOptions {
    pub max_strings: usize,
    /// Longest string tried when the algebra has bands. `None` picks a
    /// bound from the number of vertices.
    pub max_string_len: Option<usize>,
}

impl Default for SttOptions {
    fn default() -> Self {
        SttOptions {
            max_strings: super::strings::DEFAULT_MAX_STRINGS,
            max_string_len: None,
        }
    }
}

pub struct SttEnumeration<F: Scalar> {
    pub catalog: Catalog<F>,
    pub pairs: Vec<SttPair>,
    pub certificate: Certificate,
    /// A band of the string quotient, if any.
    pub band: Option<String>,
}

impl<F: Scalar> SttEnumeration<F> {
    pub fn count(&self) -> usize {
        self.pairs.len()
    }
}

/// Length bound of the banded search when none is given. Every τ-tilting
/// finite Brauer graph algebra met in testing closed its exchange graph
/// well inside it.
pub fn default_string_len(n: usize) -> usize {
    2 * n + 6
}

/// Lists every support τ-tilting pair of a special biserial algebra.
///
/// Band-free algebras are handled from their full catalog. With bands the
/// search uses strings of growing length and stops once the exchange graph
/// closes up; if it never does within the length bound the algebra is
/// presumed to have infinitely many pairs.
pub fn enumerate_stt_pairs<F: Scalar>(
    alg: std::sync::Arc<crate::presentation::BoundAlgebra<F>>,
    opts: SttOptions,
) -> Result<SttEnumeration<F>, SttError> {
    let n = alg.vertex_count();
    let sq = super::strings::string_quotient(&alg)?;
    let rules = super::strings::StringRules::new(&sq);
    let band = rules
        .find_band(opts.max_strings)?
        .map(|b| b.display(rules.quiver()).to_string());
    let mut cache = HomCache::default();
    let Some(witness) = band else {
        let catalog = Catalog::complete(alg, opts.max_strings)?;
        let pairs = stt_cliques(&catalog, &mut cache)?;
        return Ok(SttEnumeration {
            catalog,
            pairs,
            certificate: Certificate::BandFree,
            band: None,
        });
    };

    let limit = opts.max_string_len.unwrap_or(default_string_len(n)).max(1);
    let mut len = 2.min(limit);
    let mut catalog = Catalog::bounded(alg, len, opts.max_strings)?;
    let mut found = 0;
    loop {
        let pairs = stt_cliques(&catalog, &mut cache)?;
        found = found.max(pairs.len());
        let (adj, lonely) = exchange_graph(&pairs);
        if lonely == 0 && connected(&adj) && adj.iter().all(|a| a.len() == n) {
            return Ok(SttEnumeration {
                catalog,
                pairs,
                certificate: Certificate::ClosedExchangeGraph { max_string_len: len },
                band: Some(witness),
            });
        }
        if len >= limit {
            return Err(SttError::PresumedInfinite {
                witness,
                max_string_len: len,
                found,
            });
        }
        let next = (len + 2).min(limit);
        match catalog.grow(next, opts.max_strings) {
            Ok(()) => len = next,
            // the string budget ends the search just like the length bound
            Err(SttError::StringCap { .. }) => {
                return Err(SttError::PresumedInfinite {
                    witness,
                    max_string_len: len,
                    found,
                })
            }
            Err(e) => return Err(e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::{algebra_of_brauer_graph, shapes, BrauerGraph};
    use crate::presentation::BoundAlgebra;
    use crate::repmod::tests::{alg, Q, F1, F3, F4};
    use std::sync::Arc;

    fn count(a: Arc<BoundAlgebra<Q>>) -> usize {
        enumerate_stt_pairs(a, SttOptions::default()).unwrap().count()
    }

    fn brauer(g: &BrauerGraph) -> Arc<BoundAlgebra<Q>> {
        Arc::new(BoundAlgebra::new(algebra_of_brauer_graph(g)).unwrap())
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(alg(F1)), 5);
        // radical square zero linear quivers give 2, 5, 12, 29, ...
        assert_eq!(count(alg(F3)), 12);
        assert_eq!(count(alg(F4)), 6);
        assert_eq!(count(alg("vertices: 1\narrow: x 1 1\nzero: x x\n")), 2);
    }

    #[test]
    fn brauer_trees() {
        assert_eq!(count(brauer(&shapes::line(2))), 6);
        assert_eq!(count(brauer(&shapes::line(3))), 20);
        assert_eq!(count(brauer(&shapes::star(2, 2))), 6);
        assert_eq!(count(brauer(&shapes::star(3, 1))), 20);
    }

    #[test]
    fn odd_cycle_is_certified() {
        let e = enumerate_stt_pairs(brauer(&shapes::cycle(3)), SttOptions::default()).unwrap();
        assert_eq!(e.count(), 32);
        assert!(e.band.is_some());
        assert!(matches!(e.certificate, Certificate::ClosedExchangeGraph { .. }));
    }

    #[test]
    fn even_cycle_is_presumed_infinite() {
        let r = enumerate_stt_pairs(
            brauer(&shapes::cycle(2)),
            SttOptions {
                max_string_len: Some(8),
                ..SttOptions::default()
            },
        );
        assert!(matches!(r, Err(SttError::PresumedInfinite { .. })));
    }

    #[test]
    fn exchange_graph_is_regular() {
        let e = enumerate_stt_pairs(alg(F3), SttOptions::default()).unwrap();
        let (adj, lonely) = exchange_graph(&e.pairs);
        assert_eq!(lonely, 0);
        assert!(adj.iter().all(|a| a.len() == 3));
        assert!(connected(&adj));
    }

    #[test]
    fn pairwise_compatibility_matches_cliques() {
        let e = enumerate_stt_pairs(alg(F4), SttOptions::default()).unwrap();
        for p in &e.pairs {
            let s = p.summands();
            for a in &s {
                for b in &s {
                    assert!(compatible(&e.catalog, *a, *b).unwrap());
                }
            }
        }
    }
}
