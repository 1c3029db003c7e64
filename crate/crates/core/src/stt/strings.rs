//! Strings and bands of monomial special biserial presentations.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::SttError;
use crate::gentle::check_gentle;
use crate::linalg::Matrix;
use crate::presentation::{BoundAlgebra, Presentation, Quiver, RelationSet};
use crate::repmod::RepModule;
use crate::scalar::Scalar;

pub const DEFAULT_MAX_STRINGS: usize = 100_000;

/// Replaces every binomial relation `p = q` by the two zero relations `p`
/// and `q`. The input must be special biserial.
pub fn string_quotient<F: Scalar>(alg: &BoundAlgebra<F>) -> Result<Presentation, SttError> {
    let report = check_gentle(alg);
    if !report.is_special_biserial {
        return Err(SttError::NotSpecialBiserial(report));
    }
    let pres = alg.presentation();
    let rel = pres.relations();
    let mut monomials = rel.monomials.clone();
    for (p, q) in &rel.binomials {
        for side in [p, q] {
            if !monomials.contains(side) {
                monomials.push(side.clone());
            }
        }
    }
    Ok(Presentation::new(
        pres.quiver().clone(),
        RelationSet {
            monomials,
            binomials: Vec::new(),
        },
    )?)
}

/// An arrow read forwards or backwards. Direct letters sort first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub arrow: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn start(&self, q: &Quiver) -> usize {
        let a = q.arrow_info(self.arrow);
        if self.inverse {
            a.target
        } else {
            a.source
        }
    }

    pub fn end(&self, q: &Quiver) -> usize {
        let a = q.arrow_info(self.arrow);
        if self.inverse {
            a.source
        } else {
            a.target
        }
    }

    pub fn flipped(&self) -> Letter {
        Letter {
            arrow: self.arrow,
            inverse: !self.inverse,
        }
    }
}

/// A reduced walk avoiding the zero relations in both directions. Trivial
/// strings carry only their vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StringWord {
    pub start: usize,
    pub letters: Vec<Letter>,
}

impl StringWord {
    pub fn trivial(v: usize) -> Self {
        StringWord {
            start: v,
            letters: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.letters.is_empty()
    }

    /// Vertices visited, one per basis vector of the string module.
    pub fn vertices(&self, q: &Quiver) -> Vec<usize> {
        let mut out = vec![self.start];
        out.extend(self.letters.iter().map(|l| l.end(q)));
        out
    }

    pub fn inverse(&self, q: &Quiver) -> StringWord {
        match self.letters.last() {
            None => self.clone(),
            Some(last) => StringWord {
                start: last.end(q),
                letters: self.letters.iter().rev().map(|l| l.flipped()).collect(),
            },
        }
    }

    /// The smaller of the word and its inverse.
    pub fn canonical(&self, q: &Quiver) -> StringWord {
        let inv = self.inverse(q);
        if inv.letters < self.letters {
            inv
        } else {
            self.clone()
        }
    }

    pub fn is_canonical(&self, q: &Quiver) -> bool {
        self.inverse(q).letters >= self.letters
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> StringDisplay<'a> {
        StringDisplay { word: self, quiver: q }
    }
}

pub struct StringDisplay<'a> {
    word: &'a StringWord,
    quiver: &'a Quiver,
}

impl fmt::Display for StringDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_trivial() {
            return write!(f, "e{}", self.quiver.vertex_name(self.word.start));
        }
        for (k, l) in self.word.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&self.quiver.arrow_info(l.arrow).name)?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// Local validity rules of a monomial special biserial presentation.
#[derive(Clone, Debug)]
pub struct StringRules {
    quiver: Quiver,
    zero_words: Vec<Vec<usize>>,
    longest: usize,
    out_letters: Vec<Vec<Letter>>,
}

impl StringRules {
    /// `pres` must be monomial (see [`string_quotient`]).
    pub fn new(pres: &Presentation) -> Self {
        let quiver = pres.quiver().clone();
        let zero_words: Vec<Vec<usize>> = pres
            .relations()
            .monomials
            .iter()
            .map(|m| m.arrows.clone())
            .collect();
        let longest = zero_words.iter().map(|w| w.len()).max().unwrap_or(0);
        let mut out_letters = vec![Vec::new(); quiver.vertex_count()];
        for a in 0..quiver.arrow_count() {
            for inverse in [false, true] {
                let l = Letter { arrow: a, inverse };
                out_letters[l.start(&quiver)].push(l);
            }
        }
        for v in &mut out_letters {
            v.sort();
        }
        StringRules {
            quiver,
            zero_words,
            longest,
            out_letters,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Whether `next` may follow the letters `word` (which are already valid).
    pub fn can_extend(&self, word: &[Letter], next: Letter) -> bool {
        let Some(&last) = word.last() else {
            return true;
        };
        if last.end(&self.quiver) != next.start(&self.quiver) {
            return false;
        }
        if last.arrow == next.arrow && last.inverse != next.inverse {
            return false;
        }
        if last.inverse != next.inverse {
            return true;
        }
        // same direction: the run ending in `next` must avoid every relation
        let run_start = word
            .iter()
            .rposition(|l| l.inverse != next.inverse)
            .map_or(0, |p| p + 1);
        let keep = self.longest.saturating_sub(1);
        let from = run_start.max(word.len().saturating_sub(keep));
        let mut run: Vec<usize> = word[from..].iter().map(|l| l.arrow).collect();
        run.push(next.arrow);
        if next.inverse {
            run.reverse();
            self.zero_words.iter().all(|z| !run.starts_with(z))
        } else {
            self.zero_words.iter().all(|z| !run.ends_with(z))
        }
    }

    fn extensions<'a>(&'a self, word: &'a StringWord) -> impl Iterator<Item = Letter> + 'a {
        let end = word.letters.last().map_or(word.start, |l| l.end(&self.quiver));
        self.out_letters[end]
            .iter()
            .copied()
            .filter(move |&l| self.can_extend(&word.letters, l))
    }

    /// Canonical strings of length at most `max_len`, ordered by length and
    /// then letters. Fails once more than `cap` strings have been found.
    pub fn strings_up_to(&self, max_len: usize, cap: usize) -> Result<Vec<StringWord>, SttError> {
        let q = &self.quiver;
        let mut out: Vec<StringWord> = (0..q.vertex_count()).map(StringWord::trivial).collect();
        let mut frontier: Vec<StringWord> = Vec::new();
        for v in 0..q.vertex_count() {
            for &l in &self.out_letters[v] {
                frontier.push(StringWord {
                    start: v,
                    letters: vec![l],
                });
            }
        }
        let mut len = 1;
        while !frontier.is_empty() && len <= max_len {
            let mut level: Vec<StringWord> =
                frontier.iter().filter(|w| w.is_canonical(q)).cloned().collect();
            level.sort();
            out.extend(level);
            if out.len() > cap {
                return Err(SttError::StringCap { limit: cap });
            }
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for w in &frontier {
                for l in self.extensions(w) {
                    let mut letters = w.letters.clone();
                    letters.push(l);
                    next.push(StringWord {
                        start: w.start,
                        letters,
                    });
                }
            }
            frontier = next;
            len += 1;
        }
        Ok(out)
    }

    /// A band if one exists: a primitive cyclic word all of whose powers
    /// are strings. Found as a cycle in the graph whose states are the
    /// strings of a fixed window length.
    pub fn find_band(&self, state_cap: usize) -> Result<Option<StringWord>, SttError> {
        let window = self.longest.max(2);
        let q = &self.quiver;
        // all (not only canonical) strings of exactly `window` letters
        let mut states: Vec<Vec<Letter>> = Vec::new();
        let mut frontier: Vec<Vec<Letter>> = (0..q.vertex_count())
            .flat_map(|v| self.out_letters[v].iter().map(|&l| vec![l]))
            .collect();
        for _ in 1..window {
            let mut next = Vec::new();
            for w in &frontier {
                let end = w.last().expect("nonempty").end(q);
                for &l in &self.out_letters[end] {
                    if self.can_extend(w, l) {
                        let mut x = w.clone();
                        x.push(l);
                        next.push(x);
                    }
                }
                if next.len() > state_cap {
                    return Err(SttError::StringCap { limit: state_cap });
                }
            }
            frontier = next;
        }
        states.extend(frontier);
        states.sort();
        let index: HashMap<&[Letter], usize> = states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let succ: Vec<Vec<(usize, Letter)>> = states
            .iter()
            .map(|s| {
                let end = s.last().expect("nonempty").end(q);
                self.out_letters[end]
                    .iter()
                    .filter(|&&l| self.can_extend(s, l))
                    .map(|&l| {
                        let mut t = s[1..].to_vec();
                        t.push(l);
                        (index[t.as_slice()], l)
                    })
                    .collect()
            })
            .collect();

        // iterative depth-first search for a cycle
        let n = states.len();
        let mut color = vec![0u8; n];
        let mut via: Vec<Option<(usize, Letter)>> = vec![None; n];
        for root in 0..n {
            if color[root] != 0 {
                continue;
            }
            let mut stack = vec![(root, 0usize)];
            color[root] = 1;
            while let Some(&mut (v, ref mut k)) = stack.last_mut() {
                if *k < succ[v].len() {
                    let (w, l) = succ[v][*k];
                    *k += 1;
                    match color[w] {
                        0 => {
                            color[w] = 1;
                            via[w] = Some((v, l));
                            stack.push((w, 0));
                        }
                        1 => {
                            // cycle w -> ... -> v -> w
                            let mut letters = vec![l];
                            let mut cur = v;
                            while cur != w {
                                let (p, pl) = via[cur].expect("on the stack");
                                letters.push(pl);
                                cur = p;
                            }
                            letters.reverse();
                            return Ok(Some(self.primitive_band(letters)));
                        }
                        _ => {}
                    }
                } else {
                    color[v] = 2;
                    stack.pop();
                }
            }
        }
        Ok(None)
    }

    fn primitive_band(&self, letters: Vec<Letter>) -> StringWord {
        let n = letters.len();
        let period = (1..=n)
            .find(|&p| n.is_multiple_of(p) && (0..n).all(|i| letters[i] == letters[i % p]))
            .unwrap_or(n);
        let root = letters[..period].to_vec();
        // least rotation, for a deterministic witness
        let best = (0..period)
            .map(|s| {
                let mut r = root[s..].to_vec();
                r.extend_from_slice(&root[..s]);
                r
            })
            .min()
            .expect("nonempty band");
        StringWord {
            start: best[0].start(&self.quiver),
            letters: best,
        }
    }

    /// Whether every power of the cyclic word is a string.
    pub fn is_band(&self, word: &StringWord) -> bool {
        if word.is_trivial() {
            return false;
        }
        let has_direct = word.letters.iter().any(|l| !l.inverse);
        let has_inverse = word.letters.iter().any(|l| l.inverse);
        if !has_direct || !has_inverse {
            return false;
        }
        let reps = self.longest / word.len() + 3;
        let mut acc: Vec<Letter> = Vec::new();
        for _ in 0..reps {
            for &l in &word.letters {
                if !self.can_extend(&acc, l) {
                    return false;
                }
                acc.push(l);
            }
        }
        true
    }

    /// The string module: basis `z_0..z_k` with `z_{i-1} a = z_i` for a
    /// direct letter `a` and `z_i a = z_{i-1}` for an inverse one.
    pub fn string_module<F: Scalar>(
        &self,
        alg: Arc<BoundAlgebra<F>>,
        word: &StringWord,
    ) -> Result<RepModule<F>, SttError> {
        let q = &self.quiver;
        let verts = word.vertices(q);
        let mut dims = vec![0; q.vertex_count()];
        let mut slot = Vec::with_capacity(verts.len());
        for &v in &verts {
            slot.push(dims[v]);
            dims[v] += 1;
        }
        let mut maps: Vec<Matrix<F>> = q
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.source], dims[a.target]))
            .collect();
        for (i, l) in word.letters.iter().enumerate() {
            let (from, to) = if l.inverse { (i + 1, i) } else { (i, i + 1) };
            maps[l.arrow][(slot[from], slot[to])] = F::one();
        }
        let label = format!("M({})", word.display(q));
        Ok(RepModule::new(alg, dims, maps, label)?)
    }
}

/// Band witness for a monomial special biserial presentation, if any.
pub fn detect_bands(pres: &Presentation) -> Result<Option<StringWord>, SttError> {
    StringRules::new(pres).find_band(DEFAULT_MAX_STRINGS)
}

/// All canonical strings of a band-free monomial presentation.
pub fn enumerate_strings(pres: &Presentation, cap: usize) -> Result<Vec<StringWord>, SttError> {
    let rules = StringRules::new(pres);
    if let Some(band) = rules.find_band(cap)? {
        return Err(SttError::Infinite {
            witness: band.display(rules.quiver()).to_string(),
        });
    }
    rules.strings_up_to(usize::MAX, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::{algebra_of_brauer_graph, shapes};
    use crate::presentation::parse_presentation_text;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn pres(text: &str) -> Presentation {
        parse_presentation_text(text).unwrap()
    }

    const F1: &str = "vertices: 1 2\narrow: a 1 2\n";
    const F2: &str = "vertices: 1 2 3\narrow: a 1 2\narrow: b 2 3\n";
    const F3: &str = "vertices: 1 2 3\narrow: a 1 2\narrow: b 2 3\nzero: a b\n";
    const F4: &str = "vertices: 1 2\narrow: α 1 2\narrow: β 2 1\nzero: α β α\nzero: β α β\n";

    #[test]
    fn string_counts() {
        assert_eq!(enumerate_strings(&pres(F1), 100).unwrap().len(), 3);
        assert_eq!(enumerate_strings(&pres(F2), 100).unwrap().len(), 6);
        assert_eq!(enumerate_strings(&pres(F3), 100).unwrap().len(), 5);
        // e1, e2, α, β, α β, β α
        assert_eq!(enumerate_strings(&pres(F4), 100).unwrap().len(), 6);
    }

    #[test]
    fn f3_strings_exclude_the_relation() {
        let p = pres(F3);
        let words = enumerate_strings(&p, 100).unwrap();
        let shown: Vec<String> = words.iter().map(|w| w.display(p.quiver()).to_string()).collect();
        assert_eq!(shown, vec!["e1", "e2", "e3", "a", "b"]);
    }

    #[test]
    fn inverse_runs_respect_relations() {
        // 1 -a-> 2 -b-> 3 with ab = 0 and c: 3 -> 2... the word b^-1 a^-1 is
        // the path a b read backwards, so it is forbidden
        let p = pres(F3);
        let rules = StringRules::new(&p);
        let b_inv = Letter {
            arrow: 1,
            inverse: true,
        };
        let a_inv = Letter {
            arrow: 0,
            inverse: true,
        };
        assert!(!rules.can_extend(&[b_inv], a_inv));
    }

    #[test]
    fn kronecker_has_a_band() {
        let p = pres("vertices: 1 2\narrow: a 1 2\narrow: b 1 2\n");
        let band = detect_bands(&p).unwrap().expect("band");
        let rules = StringRules::new(&p);
        assert!(rules.is_band(&band));
        assert_eq!(band.display(p.quiver()).to_string(), "a b^-1");
        assert!(matches!(
            enumerate_strings(&p, 100),
            Err(SttError::Infinite { .. })
        ));
    }

    #[test]
    fn brauer_quotients() {
        for (g, banded) in [
            (shapes::line(3), false),
            (shapes::star(3, 1), false),
            (shapes::star(2, 2), false),
            (shapes::cycle(4), true),
            (shapes::cycle(3), true),
            (shapes::cycle(2), true),
        ] {
            let a = BoundAlgebra::<Q>::new(algebra_of_brauer_graph(&g)).unwrap();
            let sq = string_quotient(&a).unwrap();
            assert!(sq.relations().binomials.is_empty());
            assert_eq!(detect_bands(&sq).unwrap().is_some(), banded, "{}", g.to_text());
        }
    }

    #[test]
    fn string_modules_satisfy_relations() {
        let p = pres(F4);
        let alg = Arc::new(BoundAlgebra::<Q>::new(p.clone()).unwrap());
        let rules = StringRules::new(&p);
        for w in enumerate_strings(&p, 100).unwrap() {
            let m = rules.string_module(alg.clone(), &w).unwrap();
            assert_eq!(m.total_dim(), w.len() + 1);
        }
    }

    #[test]
    fn non_special_biserial_is_rejected() {
        let a = BoundAlgebra::<Q>::new(pres("vertices: 1 2 3 4\narrow: a 1 2\narrow: b 2 3\narrow: c 2 4\n")).unwrap();
        assert!(matches!(
            string_quotient(&a),
            Err(SttError::NotSpecialBiserial(_))
        ));
    }
}
