//! Indecomposable modules of a special biserial algebra, built from the
//! strings of its string quotient together with the projectives.

use std::sync::Arc;

use rayon::prelude::*;

use super::strings::{string_quotient, StringRules, StringWord, DEFAULT_MAX_STRINGS};
use super::SttError;
use crate::presentation::BoundAlgebra;
use crate::repmod::{hom_dim, is_isomorphic, tau, RepModule};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct CatalogEntry<F: Scalar> {
    pub module: RepModule<F>,
    /// The string realizing the module, if it is a string module.
    pub word: Option<StringWord>,
    /// Vertex `i` when the module is the projective `P_i`.
    pub projective_at: Option<usize>,
    pub tau: RepModule<F>,
    pub tau_rigid: bool,
}

impl<F: Scalar> CatalogEntry<F> {
    pub fn label(&self) -> &str {
        self.module.label()
    }

    pub fn dims(&self) -> &[usize] {
        self.module.dims()
    }
}

/// Modules ordered by dimension vector, then label. A catalog built from
/// strings of bounded length is marked incomplete.
#[derive(Clone, Debug)]
pub struct Catalog<F: Scalar> {
    alg: Arc<BoundAlgebra<F>>,
    rules: StringRules,
    entries: Vec<CatalogEntry<F>>,
    max_len: Option<usize>,
}

impl<F: Scalar> Catalog<F> {
    /// Every indecomposable of a band-free special biserial algebra.
    pub fn complete(alg: Arc<BoundAlgebra<F>>, max_strings: usize) -> Result<Self, SttError> {
        let sq = string_quotient(&alg)?;
        let rules = StringRules::new(&sq);
        if let Some(band) = rules.find_band(max_strings)? {
            return Err(SttError::Infinite {
                witness: band.display(rules.quiver()).to_string(),
            });
        }
        let words = rules.strings_up_to(usize::MAX, max_strings)?;
        let mut cat = Catalog {
            alg,
            rules,
            entries: Vec::new(),
            max_len: None,
        };
        cat.add_strings(words)?;
        cat.add_projectives()?;
        Ok(cat)
    }

    /// Strings of length at most `max_len` plus the projectives.
    pub fn bounded(
        alg: Arc<BoundAlgebra<F>>,
        max_len: usize,
        max_strings: usize,
    ) -> Result<Self, SttError> {
        let sq = string_quotient(&alg)?;
        let rules = StringRules::new(&sq);
        let words = rules.strings_up_to(max_len, max_strings)?;
        let mut cat = Catalog {
            alg,
            rules,
            entries: Vec::new(),
            max_len: Some(max_len),
        };
        cat.add_strings(words)?;
        cat.add_projectives()?;
        Ok(cat)
    }

    /// Adds the strings of length in `(current, max_len]`.
    pub fn grow(&mut self, max_len: usize, max_strings: usize) -> Result<(), SttError> {
        let Some(old) = self.max_len else {
            return Ok(());
        };
        if max_len <= old {
            return Ok(());
        }
        let words: Vec<StringWord> = self
            .rules
            .strings_up_to(max_len, max_strings)?
            .into_iter()
            .filter(|w| w.len() > old)
            .collect();
        self.entries.retain(|e| e.word.is_some());
        self.add_strings(words)?;
        self.add_projectives()?;
        self.max_len = Some(max_len);
        Ok(())
    }

    fn add_strings(&mut self, words: Vec<StringWord>) -> Result<(), SttError> {
        let alg = self.alg.clone();
        let rules = &self.rules;
        let built: Vec<Result<CatalogEntry<F>, SttError>> = words
            .into_par_iter()
            .map(|w| {
                let module = rules.string_module(alg.clone(), &w)?;
                let t = tau(&module)?;
                let tau_rigid = hom_dim(&module, &t)? == 0;
                Ok(CatalogEntry {
                    module,
                    word: Some(w),
                    projective_at: None,
                    tau: t,
                    tau_rigid,
                })
            })
            .collect();
        for e in built {
            self.entries.push(e?);
        }
        Ok(())
    }

    /// Marks the string modules that are projective and appends the rest.
    fn add_projectives(&mut self) -> Result<(), SttError> {
        for e in &mut self.entries {
            e.projective_at = None;
        }
        for i in 0..self.alg.vertex_count() {
            let p = RepModule::projective(self.alg.clone(), i)?;
            let mut found = None;
            for (k, e) in self.entries.iter().enumerate() {
                if e.module.dims() == p.dims() && is_isomorphic(&e.module, &p)? {
                    found = Some(k);
                    break;
                }
            }
            match found {
                Some(k) => self.entries[k].projective_at = Some(i),
                None => {
                    let label = format!("P({})", self.alg.quiver().vertex_name(i));
                    let module = p.with_label(label);
                    let t = RepModule::zero(self.alg.clone()).with_label(format!("τ({})", module.label()));
                    self.entries.push(CatalogEntry {
                        module,
                        word: None,
                        projective_at: Some(i),
                        tau: t,
                        tau_rigid: true,
                    });
                }
            }
        }
        self.entries.sort_by(|a, b| {
            (a.dims(), a.label()).cmp(&(b.dims(), b.label()))
        });
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<BoundAlgebra<F>> {
        &self.alg
    }

    pub fn rules(&self) -> &StringRules {
        &self.rules
    }

    pub fn entries(&self) -> &[CatalogEntry<F>] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.max_len.is_none()
    }

    pub fn max_string_len(&self) -> Option<usize> {
        self.max_len
    }

    /// Catalog position of `P_i`.
    pub fn projective(&self, i: usize) -> usize {
        self.entries
            .iter()
            .position(|e| e.projective_at == Some(i))
            .expect("every projective is catalogued")
    }

    pub fn tau_rigid_indices(&self) -> Vec<usize> {
        (0..self.entries.len()).filter(|&k| self.entries[k].tau_rigid).collect()
    }
}

/// Every indecomposable module, with the default string cap.
pub fn indecomposable_catalog<F: Scalar>(alg: Arc<BoundAlgebra<F>>) -> Result<Catalog<F>, SttError> {
    Catalog::complete(alg, DEFAULT_MAX_STRINGS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repmod::tests::{alg, F1, F3, F4};

    #[test]
    fn small_catalogs() {
        assert_eq!(indecomposable_catalog(alg(F1)).unwrap().len(), 3);
        assert_eq!(indecomposable_catalog(alg(F3)).unwrap().len(), 5);
        // the strings α β and β α are the two projectives
        let c = indecomposable_catalog(alg(F4)).unwrap();
        assert_eq!(c.len(), 6);
        assert!(c.entries().iter().all(|e| e.word.is_some()));
    }

    #[test]
    fn projectives_appear_once() {
        for text in [F1, F3, F4] {
            let c = indecomposable_catalog(alg(text)).unwrap();
            for i in 0..c.algebra().vertex_count() {
                let hits = c.entries().iter().filter(|e| e.projective_at == Some(i)).count();
                assert_eq!(hits, 1);
                assert!(c.entries()[c.projective(i)].tau_rigid);
            }
        }
    }

    #[test]
    fn ordering_is_by_dimension_vector() {
        let c = indecomposable_catalog(alg(F4)).unwrap();
        let dims: Vec<Vec<usize>> = c.entries().iter().map(|e| e.dims().to_vec()).collect();
        let mut sorted = dims.clone();
        sorted.sort();
        assert_eq!(dims, sorted);
    }

    #[test]
    fn rigidity_over_f4() {
        // simples and projectives are τ-rigid, the two uniserial modules of length two are not
        let c = indecomposable_catalog(alg(F4)).unwrap();
        assert_eq!(c.tau_rigid_indices().len(), 4);
    }
}
