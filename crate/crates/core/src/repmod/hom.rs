//! Hom spaces, traces and isomorphism tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{same_algebra, ModuleError, ModuleMap, RepModule};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Coefficient matrix of the intertwining system for `Hom(M, N)`. Unknowns
/// are the entries of the per-vertex blocks `f_i`, row-major, vertex by vertex.
fn intertwining_system<F: Scalar>(m: &RepModule<F>, n: &RepModule<F>) -> (Matrix<F>, Vec<usize>) {
    let q = m.algebra().quiver();
    let verts = q.vertex_count();
    let mut offset = vec![0; verts + 1];
    for i in 0..verts {
        offset[i + 1] = offset[i] + m.dim_at(i) * n.dim_at(i);
    }
    let unknowns = offset[verts];
    let mut rows: Vec<Vec<F>> = Vec::new();
    for (a, info) in q.arrows().iter().enumerate() {
        let (i, j) = (info.source, info.target);
        let (mi, ni, mj, nj) = (m.dim_at(i), n.dim_at(i), m.dim_at(j), n.dim_at(j));
        if mi == 0 || nj == 0 {
            continue;
        }
        let na = n.arrow_matrix(a);
        let ma = m.arrow_matrix(a);
        for r in 0..mi {
            for c in 0..nj {
                let mut eq = vec![F::zero(); unknowns];
                // (f_i N_a)[r][c]
                for k in 0..ni {
                    let v = &na[(k, c)];
                    if !v.is_negligible() {
                        let idx = offset[i] + r * ni + k;
                        eq[idx] = eq[idx].clone() + v.clone();
                    }
                }
                // - (M_a f_j)[r][c]
                for k in 0..mj {
                    let v = &ma[(r, k)];
                    if !v.is_negligible() {
                        let idx = offset[j] + k * nj + c;
                        eq[idx] = eq[idx].clone() - v.clone();
                    }
                }
                if eq.iter().any(|x| !x.is_negligible()) {
                    rows.push(eq);
                }
            }
        }
    }
    (Matrix::from_rows(rows, unknowns), offset)
}

fn check_same<F: Scalar>(m: &RepModule<F>, n: &RepModule<F>) -> Result<(), ModuleError> {
    if same_algebra(m.algebra(), n.algebra()) {
        Ok(())
    } else {
        Err(ModuleError::AlgebraMismatch)
    }
}

pub fn hom_basis<F: Scalar>(
    m: &RepModule<F>,
    n: &RepModule<F>,
) -> Result<Vec<ModuleMap<F>>, ModuleError> {
    check_same(m, n)?;
    let (system, offset) = intertwining_system(m, n);
    let kernel = system.null_space();
    let verts = m.dims().len();
    Ok((0..kernel.rows())
        .map(|k| {
            let sol = kernel.row(k);
            ModuleMap {
                components: (0..verts)
                    .map(|i| {
                        let (r, c) = (m.dim_at(i), n.dim_at(i));
                        let block = (0..r)
                            .map(|x| sol[offset[i] + x * c..offset[i] + (x + 1) * c].to_vec())
                            .collect();
                        Matrix::from_rows(block, c)
                    })
                    .collect(),
            }
        })
        .collect())
}

pub fn hom_dim<F: Scalar>(m: &RepModule<F>, n: &RepModule<F>) -> Result<usize, ModuleError> {
    check_same(m, n)?;
    let (system, offset) = intertwining_system(m, n);
    Ok(offset[offset.len() - 1] - system.rank())
}

/// Vertex-wise dimension of the trace of `M` in `X`, the sum of the images
/// of all homomorphisms `M -> X`.
pub fn trace_dims<F: Scalar>(m: &RepModule<F>, x: &RepModule<F>) -> Result<Vec<usize>, ModuleError> {
    let basis = hom_basis(m, x)?;
    Ok((0..x.dims().len())
        .map(|k| {
            let mut stacked = Matrix::zeros(0, x.dim_at(k));
            for f in &basis {
                stacked = stacked.vstack(&f.components[k]);
            }
            stacked.rank()
        })
        .collect())
}

/// Whether `X` is a quotient of a finite direct sum of copies of `M`.
pub fn fac_contains<F: Scalar>(m: &RepModule<F>, x: &RepModule<F>) -> Result<bool, ModuleError> {
    check_same(m, x)?;
    if x.is_zero() {
        return Ok(true);
    }
    Ok(trace_dims(m, x)? == x.dims())
}

const ISO_ATTEMPTS: usize = 8;

/// Decides `M ≅ N` by looking for an invertible combination of a Hom basis.
/// Coefficients come from a fixed-seed generator, so the answer is
/// reproducible; a false negative needs every attempt to hit a proper
/// subvariety.
pub fn is_isomorphic<F: Scalar>(m: &RepModule<F>, n: &RepModule<F>) -> Result<bool, ModuleError> {
    check_same(m, n)?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let basis = hom_basis(m, n)?;
    if basis.is_empty() {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x15_0b0e);
    for _ in 0..ISO_ATTEMPTS {
        let coeffs: Vec<F> = basis
            .iter()
            .map(|_| F::from_int(rng.gen_range(-40..=40)))
            .collect();
        let invertible = (0..m.dims().len()).all(|i| {
            let mut acc = Matrix::zeros(m.dim_at(i), n.dim_at(i));
            for (f, c) in basis.iter().zip(&coeffs) {
                acc = acc.add(&f.components[i].scale(c));
            }
            acc.is_invertible()
        });
        if invertible {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::super::tests::{alg, F1, F4};
    use super::*;

    #[test]
    fn projective_hom_formula() {
        let a = alg(F4);
        let p1 = RepModule::projective(a.clone(), 0).unwrap();
        let p2 = RepModule::projective(a.clone(), 1).unwrap();
        let s1 = RepModule::simple(a.clone(), 0).unwrap();
        let s2 = RepModule::simple(a.clone(), 1).unwrap();
        for m in [&s1, &s2, &p1, &p2] {
            assert_eq!(hom_dim(&p1, m).unwrap(), m.dim_at(0));
            assert_eq!(hom_dim(&p2, m).unwrap(), m.dim_at(1));
        }
        assert_eq!(hom_dim(&s1, &s1).unwrap(), 1);
        assert_eq!(hom_dim(&p1, &p1).unwrap(), 2);
        // symmetric algebra: the socle of P1 is S1
        assert_eq!(hom_dim(&s1, &p1).unwrap(), 1);
        for f in hom_basis(&p1, &p2).unwrap() {
            assert!(f.is_homomorphism(&p1, &p2));
        }
    }

    #[test]
    fn fac_examples() {
        let a = alg(F4);
        let p1 = RepModule::projective(a.clone(), 0).unwrap();
        let s1 = RepModule::simple(a.clone(), 0).unwrap();
        let zero = RepModule::zero(a.clone());
        assert!(fac_contains(&s1, &zero).unwrap());
        assert!(fac_contains(&p1, &s1).unwrap());
        assert!(!fac_contains(&s1, &p1).unwrap());
        assert_eq!(trace_dims(&s1, &p1).unwrap(), vec![1, 0]);
    }

    #[test]
    fn isomorphism() {
        let a = alg(F1);
        let p2 = RepModule::projective(a.clone(), 1).unwrap();
        let s2 = RepModule::simple(a.clone(), 1).unwrap();
        let s1 = RepModule::simple(a.clone(), 0).unwrap();
        assert!(is_isomorphic(&p2, &s2).unwrap());
        assert!(!is_isomorphic(&s1, &s2).unwrap());
        let p1 = RepModule::projective(a.clone(), 0).unwrap();
        let split = RepModule::direct_sum(&[&s1, &s2]).unwrap();
        assert_eq!(p1.dims(), split.dims());
        assert!(!is_isomorphic(&p1, &split).unwrap());
    }

    #[test]
    fn mismatched_algebras() {
        let a = alg(F1);
        let b = alg(F4);
        let x = RepModule::simple(a, 0).unwrap();
        let y = RepModule::simple(b, 0).unwrap();
        assert_eq!(hom_dim(&x, &y), Err(ModuleError::AlgebraMismatch));
    }
}
