//! Representations of bound quiver algebras as explicit matrices.
//!
//! A right module `M` has a vector space `M_i` per vertex and, per arrow
//! `a: i -> j`, a `dim M_i x dim M_j` matrix acting on row vectors. A path
//! `a b` then acts by the product `M_a * M_b`.

mod hom;
mod translate;

use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::linalg::{Matrix, Quotient};
use crate::presentation::{BoundAlgebra, Path};
use crate::scalar::Scalar;

pub use hom::{fac_contains, hom_basis, hom_dim, is_isomorphic, trace_dims};
pub use translate::{minimal_projective_presentation, syzygy, tau, ProjectivePresentation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("matrix for arrow `{arrow}` has shape {got:?}, expected {expected:?}")]
    Shape {
        arrow: String,
        got: (usize, usize),
        expected: (usize, usize),
    },
    #[error("expected {expected} vertex dimensions, got {got}")]
    DimensionCount { expected: usize, got: usize },
    #[error("relation `{0}` does not hold on the module")]
    RelationViolated(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("operation needs a nonzero module")]
    ZeroModule,
    #[error("vertex index {0} out of range")]
    UnknownVertex(usize),
    #[error("opposite algebra: {0}")]
    Opposite(String),
}

/// A finite-dimensional right module given by matrices.
#[derive(Clone)]
pub struct RepModule<F> {
    alg: Arc<BoundAlgebra<F>>,
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
    label: String,
}

impl<F: Scalar> std::fmt::Debug for RepModule<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RepModule")
            .field("label", &self.label)
            .field("dims", &self.dims)
            .finish()
    }
}

pub(crate) fn same_algebra<F: Scalar>(a: &Arc<BoundAlgebra<F>>, b: &Arc<BoundAlgebra<F>>) -> bool {
    Arc::ptr_eq(a, b) || a.presentation() == b.presentation()
}

impl<F: Scalar> RepModule<F> {
    /// Checks shapes and every defining relation.
    pub fn new(
        alg: Arc<BoundAlgebra<F>>,
        dims: Vec<usize>,
        maps: Vec<Matrix<F>>,
        label: impl Into<String>,
    ) -> Result<Self, ModuleError> {
        let q = alg.quiver();
        if dims.len() != q.vertex_count() {
            return Err(ModuleError::DimensionCount {
                expected: q.vertex_count(),
                got: dims.len(),
            });
        }
        if maps.len() != q.arrow_count() {
            return Err(ModuleError::DimensionCount {
                expected: q.arrow_count(),
                got: maps.len(),
            });
        }
        for (a, info) in q.arrows().iter().enumerate() {
            let expected = (dims[info.source], dims[info.target]);
            let got = (maps[a].rows(), maps[a].cols());
            if got != expected {
                return Err(ModuleError::Shape {
                    arrow: info.name.clone(),
                    got,
                    expected,
                });
            }
        }
        let m = RepModule {
            alg,
            dims,
            maps,
            label: label.into(),
        };
        m.check_relations()?;
        Ok(m)
    }

    fn check_relations(&self) -> Result<(), ModuleError> {
        let q = self.alg.quiver();
        let rel = self.alg.presentation().relations();
        for p in &rel.monomials {
            if !self.path_matrix(p).is_zero() {
                return Err(ModuleError::RelationViolated(p.display(q).to_string()));
            }
        }
        for (p, r) in &rel.binomials {
            if !self.path_matrix(p).add(&self.path_matrix(r).scale(&-F::one())).is_zero() {
                return Err(ModuleError::RelationViolated(format!(
                    "{} = {}",
                    p.display(q),
                    r.display(q)
                )));
            }
        }
        Ok(())
    }

    pub fn zero(alg: Arc<BoundAlgebra<F>>) -> Self {
        let n = alg.vertex_count();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(0, 0))
            .collect();
        RepModule {
            alg,
            dims: vec![0; n],
            maps,
            label: "0".into(),
        }
    }

    pub fn simple(alg: Arc<BoundAlgebra<F>>, i: usize) -> Result<Self, ModuleError> {
        if i >= alg.vertex_count() {
            return Err(ModuleError::UnknownVertex(i));
        }
        let mut dims = vec![0; alg.vertex_count()];
        dims[i] = 1;
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.source], dims[a.target]))
            .collect();
        let label = format!("S{}", alg.quiver().vertex_name(i));
        RepModule::new(alg, dims, maps, label)
    }

    /// The indecomposable projective `e_i A`, with basis the normal-form
    /// paths starting at `i`.
    pub fn projective(alg: Arc<BoundAlgebra<F>>, i: usize) -> Result<Self, ModuleError> {
        if i >= alg.vertex_count() {
            return Err(ModuleError::UnknownVertex(i));
        }
        let q = alg.quiver();
        let n = q.vertex_count();
        let dims: Vec<usize> = (0..n).map(|j| alg.basis_between(i, j).len()).collect();
        let mut maps = Vec::with_capacity(q.arrow_count());
        for (a, info) in q.arrows().iter().enumerate() {
            let (j, k) = (info.source, info.target);
            let rows = alg.basis_between(i, j);
            let cols = alg.basis_between(i, k);
            let mut mat = Matrix::zeros(rows.len(), cols.len());
            let arrow = Path {
                start: j,
                arrows: vec![a],
            };
            for (r, &b) in rows.iter().enumerate() {
                for (c, coeff) in alg.multiply_basis(b, &arrow) {
                    let col = cols
                        .iter()
                        .position(|&x| x == c)
                        .expect("product stays in the block");
                    mat[(r, col)] = coeff;
                }
            }
            maps.push(mat);
        }
        let label = format!("P{}", q.vertex_name(i));
        RepModule::new(alg, dims, maps, label)
    }

    pub fn algebra(&self) -> &Arc<BoundAlgebra<F>> {
        &self.alg
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, i: usize) -> usize {
        self.dims[i]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow_matrix(&self, a: usize) -> &Matrix<F> {
        &self.maps[a]
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Action of a path, as a `dim M_start x dim M_end` matrix.
    pub fn path_matrix(&self, p: &Path) -> Matrix<F> {
        let q = self.alg.quiver();
        let mut acc = Matrix::identity(self.dims[p.start]);
        for &a in &p.arrows {
            acc = acc.mul(&self.maps[a]);
        }
        debug_assert_eq!(acc.cols(), self.dims[p.end(q)]);
        acc
    }

    /// Action of the basis element `b` of the algebra.
    pub fn basis_matrix(&self, b: usize) -> Matrix<F> {
        self.path_matrix(self.alg.basis_path(b))
    }

    /// Radical at vertex `j`: the span of all arrow images landing in `M_j`.
    pub fn radical_at(&self, j: usize) -> Matrix<F> {
        let q = self.alg.quiver();
        let mut acc = Matrix::zeros(0, self.dims[j]);
        for a in q.arrows_into(j) {
            acc = acc.vstack(&self.maps[a]);
        }
        acc.row_space()
    }

    pub fn top_dims(&self) -> Vec<usize> {
        (0..self.dims.len())
            .map(|j| self.dims[j] - self.radical_at(j).rows())
            .collect()
    }

    pub fn direct_sum(parts: &[&RepModule<F>]) -> Result<Self, ModuleError> {
        let first = parts.first().ok_or(ModuleError::ZeroModule)?;
        let alg = first.alg.clone();
        if parts.iter().any(|m| !same_algebra(&m.alg, &alg)) {
            return Err(ModuleError::AlgebraMismatch);
        }
        let n = alg.vertex_count();
        let dims: Vec<usize> = (0..n)
            .map(|i| parts.iter().map(|m| m.dims[i]).sum())
            .collect();
        let q = alg.quiver();
        let mut maps = Vec::with_capacity(q.arrow_count());
        for (a, info) in q.arrows().iter().enumerate() {
            let mut mat = Matrix::zeros(dims[info.source], dims[info.target]);
            let (mut r0, mut c0) = (0, 0);
            for m in parts {
                let block = &m.maps[a];
                for r in 0..block.rows() {
                    for c in 0..block.cols() {
                        mat[(r0 + r, c0 + c)] = block[(r, c)].clone();
                    }
                }
                r0 += block.rows();
                c0 += block.cols();
            }
            maps.push(mat);
        }
        let label = parts
            .iter()
            .map(|m| m.label.as_str())
            .collect::<Vec<_>>()
            .join(" + ");
        RepModule::new(alg, dims, maps, label)
    }

    /// Submodule spanned vertex-wise by the rows of `basis[i]`, which must be
    /// closed under the arrows.
    pub fn submodule(&self, basis: &[Matrix<F>], label: &str) -> Result<Self, ModuleError> {
        let q = self.alg.quiver();
        let mut maps = Vec::with_capacity(q.arrow_count());
        for (a, info) in q.arrows().iter().enumerate() {
            let image = basis[info.source].mul(&self.maps[a]);
            let coords = basis[info.target]
                .solve_left(&image)
                .ok_or_else(|| ModuleError::RelationViolated(format!("not closed under {}", info.name)))?;
            maps.push(coords);
        }
        let dims = basis.iter().map(|b| b.rows()).collect();
        RepModule::new(self.alg.clone(), dims, maps, label)
    }

    /// Quotient by the submodule spanned vertex-wise by the rows of `sub[i]`.
    pub fn quotient(&self, sub: &[Matrix<F>], label: &str) -> Result<Self, ModuleError> {
        let qs: Vec<Quotient<F>> = (0..self.dims.len())
            .map(|i| Quotient::new(self.dims[i], &sub[i]))
            .collect();
        let q = self.alg.quiver();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, info)| {
                qs[info.source]
                    .section
                    .mul(&self.maps[a])
                    .mul(&qs[info.target].projection)
            })
            .collect();
        let dims = qs.iter().map(|x| x.dim()).collect();
        RepModule::new(self.alg.clone(), dims, maps, label)
    }

    /// Human-readable dump: label, dimension vector and arrow matrices.
    pub fn to_text(&self) -> String {
        let q = self.alg.quiver();
        let mut out = String::new();
        let _ = writeln!(out, "module {}", self.label);
        let _ = writeln!(out, "dims {:?}", self.dims);
        for (a, info) in q.arrows().iter().enumerate() {
            let m = &self.maps[a];
            if m.rows() == 0 || m.cols() == 0 {
                continue;
            }
            let _ = writeln!(out, "arrow {} ({}x{})", info.name, m.rows(), m.cols());
            for r in 0..m.rows() {
                let row: Vec<String> = m.row(r).iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "  [{}]", row.join(" "));
            }
        }
        out
    }
}

/// A homomorphism of right modules, one matrix per vertex.
#[derive(Clone)]
pub struct ModuleMap<F> {
    pub components: Vec<Matrix<F>>,
}

impl<F: Scalar> std::fmt::Debug for ModuleMap<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.components).finish()
    }
}

impl<F: Scalar> ModuleMap<F> {
    /// `f_i * N_a == M_a * f_j` for every arrow `a: i -> j`.
    pub fn is_homomorphism(&self, m: &RepModule<F>, n: &RepModule<F>) -> bool {
        let q = m.alg.quiver();
        if self.components.len() != q.vertex_count() {
            return false;
        }
        for (i, f) in self.components.iter().enumerate() {
            if f.rows() != m.dims[i] || f.cols() != n.dims[i] {
                return false;
            }
        }
        q.arrows().iter().enumerate().all(|(a, info)| {
            let lhs = self.components[info.source].mul(&n.maps[a]);
            let rhs = m.maps[a].mul(&self.components[info.target]);
            lhs == rhs || lhs.add(&rhs.scale(&-F::one())).is_zero()
        })
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn compose(&self, then: &ModuleMap<F>) -> ModuleMap<F> {
        ModuleMap {
            components: self
                .components
                .iter()
                .zip(&then.components)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::presentation::parse_presentation_text;
    use num_rational::Ratio;

    pub type Q = Ratio<i64>;

    pub fn alg(text: &str) -> Arc<BoundAlgebra<Q>> {
        Arc::new(BoundAlgebra::new(parse_presentation_text(text).unwrap()).unwrap())
    }

    pub const F1: &str = "vertices: 1 2\narrow: a 1 2\n";
    pub const F3: &str = "vertices: 1 2 3\narrow: a 1 2\narrow: b 2 3\nzero: a b\n";
    pub const F4: &str = "vertices: 1 2\narrow: α 1 2\narrow: β 2 1\nzero: α β α\nzero: β α β\n";

    #[test]
    fn projective_dimension_vectors() {
        let a = alg(F1);
        assert_eq!(RepModule::projective(a.clone(), 0).unwrap().dims(), &[1, 1]);
        let a = alg(F4);
        assert_eq!(RepModule::projective(a.clone(), 0).unwrap().dims(), &[2, 1]);
        let a = alg(F3);
        assert_eq!(RepModule::projective(a, 0).unwrap().dims(), &[1, 1, 0]);
    }

    #[test]
    fn relations_are_enforced() {
        let a = alg(F3);
        let one = Matrix::identity(1);
        let err = RepModule::new(a.clone(), vec![1, 1, 1], vec![one.clone(), one], "bad");
        assert!(matches!(err, Err(ModuleError::RelationViolated(_))));
        let err = RepModule::new(a, vec![1, 1, 0], vec![Matrix::zeros(1, 2)], "bad");
        assert!(matches!(err, Err(ModuleError::DimensionCount { .. })));
    }

    #[test]
    fn tops_of_projectives_are_simple() {
        let a = alg(F4);
        for i in 0..2 {
            let p = RepModule::projective(a.clone(), i).unwrap();
            let mut expected = vec![0, 0];
            expected[i] = 1;
            assert_eq!(p.top_dims(), expected);
        }
    }

    #[test]
    fn sum_and_quotient() {
        let a = alg(F4);
        let p1 = RepModule::projective(a.clone(), 0).unwrap();
        let s2 = RepModule::simple(a.clone(), 1).unwrap();
        let sum = RepModule::direct_sum(&[&p1, &s2]).unwrap();
        assert_eq!(sum.dims(), &[2, 2]);
        let rad: Vec<Matrix<Q>> = (0..2).map(|j| p1.radical_at(j)).collect();
        let top = p1.quotient(&rad, "top").unwrap();
        assert_eq!(top.dims(), &[1, 0]);
        let radm = p1.submodule(&rad, "rad").unwrap();
        assert_eq!(radm.dims(), &[1, 1]);
    }

    #[test]
    fn dump_lists_matrices() {
        let a = alg(F1);
        let text = RepModule::projective(a, 0).unwrap().to_text();
        assert!(text.starts_with("module P1\ndims [1, 1]\narrow a (1x1)\n  [1]\n"));
    }
}
