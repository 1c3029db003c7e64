//! Minimal projective presentations, syzygies and the Auslander-Reiten
//! translate `τ = D Tr`.

use super::{ModuleError, ModuleMap, RepModule};
use crate::linalg::{Matrix, Quotient};
use crate::presentation::{BoundAlgebra, Path};
use crate::scalar::Scalar;

/// `P1 -> P0 -> M -> 0` with both covers minimal.
#[derive(Clone)]
pub struct ProjectivePresentation<F> {
    /// Vertex of each indecomposable summand of `P0`, in summand order.
    pub p0: Vec<usize>,
    pub p1: Vec<usize>,
    pub p0_module: RepModule<F>,
    /// `P0 -> M`.
    pub cover: ModuleMap<F>,
    /// The kernel of the cover, with its basis in `P0` coordinates.
    pub kernel: RepModule<F>,
    pub kernel_basis: Vec<Matrix<F>>,
    /// Image in `P0` of the generator of each summand of `P1`, as a vector of
    /// `P0` at the summand's vertex.
    pub p1_images: Vec<Vec<F>>,
    /// `P1 -> P0`; `None` when `P1 = 0`.
    pub differential: Option<ModuleMap<F>>,
}

struct Cover<F> {
    vertices: Vec<usize>,
    module: RepModule<F>,
    map: ModuleMap<F>,
}

/// Projective cover of a nonzero module: one summand per basis vector of
/// the top, mapped onto a chosen lift of that vector.
fn projective_cover<F: Scalar>(m: &RepModule<F>) -> Result<Cover<F>, ModuleError> {
    let alg = m.algebra().clone();
    let n = alg.vertex_count();
    let mut vertices = Vec::new();
    let mut gens: Vec<Vec<F>> = Vec::new();
    for j in 0..n {
        let top = Quotient::new(m.dim_at(j), &m.radical_at(j));
        for r in 0..top.dim() {
            vertices.push(j);
            gens.push(top.section.row(r).to_vec());
        }
    }
    if vertices.is_empty() {
        return Err(ModuleError::ZeroModule);
    }
    let projectives: Vec<RepModule<F>> = vertices
        .iter()
        .map(|&j| RepModule::projective(alg.clone(), j))
        .collect::<Result<_, _>>()?;
    let refs: Vec<&RepModule<F>> = projectives.iter().collect();
    let module = RepModule::direct_sum(&refs)?;
    let map = generator_map(&alg, &vertices, &gens, |b| m.basis_matrix(b), m.dims());
    debug_assert!(map.is_homomorphism(&module, m));
    Ok(Cover {
        vertices,
        module,
        map,
    })
}

/// The map `⊕ e_{v_t} A -> X` sending the generator of summand `t` to
/// `gens[t]`. `act(b)` is the action of basis element `b` on `X`.
fn generator_map<F: Scalar>(
    alg: &BoundAlgebra<F>,
    vertices: &[usize],
    gens: &[Vec<F>],
    act: impl Fn(usize) -> Matrix<F>,
    target_dims: &[usize],
) -> ModuleMap<F> {
    let n = alg.vertex_count();
    let mut acts: Vec<Option<Matrix<F>>> = vec![None; alg.dimension()];
    let components = (0..n)
        .map(|k| {
            let mut rows = Vec::new();
            for (&j, x) in vertices.iter().zip(gens) {
                for &b in alg.basis_between(j, k) {
                    let mat = acts[b].get_or_insert_with(|| act(b));
                    rows.push(mat.apply(x));
                }
            }
            Matrix::from_rows(rows, target_dims[k])
        })
        .collect();
    ModuleMap { components }
}

pub fn minimal_projective_presentation<F: Scalar>(
    m: &RepModule<F>,
) -> Result<ProjectivePresentation<F>, ModuleError> {
    let cover = projective_cover(m)?;
    let p0m = &cover.module;
    let n = p0m.dims().len();
    let kernel_basis: Vec<Matrix<F>> = (0..n).map(|k| cover.map.components[k].left_kernel()).collect();
    let kernel = p0m
        .submodule(&kernel_basis, &format!("Ω({})", m.label()))?;

    let (p1, p1_images, differential) = if kernel.is_zero() {
        (Vec::new(), Vec::new(), None)
    } else {
        let kc = projective_cover(&kernel)?;
        // generator images of the kernel cover, pushed into P0 coordinates
        let images: Vec<Vec<F>> = kc
            .vertices
            .iter()
            .enumerate()
            .map(|(s, &i)| {
                let start = kc.vertices[..s]
                    .iter()
                    .map(|&v| m.algebra().basis_between(v, i).len())
                    .sum::<usize>();
                // row of the generator itself: the trivial path is the first basis
                // element of its block, so it sits at `start`
                let y = kc.map.components[i].row(start).to_vec();
                kernel_basis[i].apply(&y)
            })
            .collect();
        let alg = m.algebra().clone();
        let diff = generator_map(&alg, &kc.vertices, &images, |b| p0m.basis_matrix(b), p0m.dims());
        debug_assert!(diff.is_homomorphism(&kc.module, p0m));
        (kc.vertices, images, Some(diff))
    };

    Ok(ProjectivePresentation {
        p0: cover.vertices,
        p1,
        p0_module: cover.module,
        cover: cover.map,
        kernel,
        kernel_basis,
        p1_images,
        differential,
    })
}

pub fn syzygy<F: Scalar>(m: &RepModule<F>) -> Result<RepModule<F>, ModuleError> {
    Ok(minimal_projective_presentation(m)?.kernel)
}

/// Position of every basis element inside its `e_i A e_j` block.
fn block_positions<F: Scalar>(alg: &BoundAlgebra<F>) -> Vec<usize> {
    let n = alg.vertex_count();
    let mut pos = vec![0; alg.dimension()];
    for i in 0..n {
        for j in 0..n {
            for (k, &b) in alg.basis_between(i, j).iter().enumerate() {
                pos[b] = k;
            }
        }
    }
    pos
}

/// `τM = D Tr M`. Dualizing the minimal presentation gives a map of left
/// projectives `⊕_t A e_{j_t} -> ⊕_s A e_{i_s}`, `(y_t) ↦ (Σ_t y_t a_ts)`;
/// its cokernel `Tr M` is a left module, i.e. a right module over the
/// opposite algebra, and `D` transposes it back.
pub fn tau<F: Scalar>(m: &RepModule<F>) -> Result<RepModule<F>, ModuleError> {
    let pres = minimal_projective_presentation(m)?;
    let alg = m.algebra().clone();
    let label = format!("τ({})", m.label());
    if pres.p1.is_empty() {
        return Ok(RepModule::zero(alg).with_label(label));
    }
    let n = alg.vertex_count();
    let q = alg.quiver();
    let pos = block_positions(&alg);

    // a_ts as sparse combinations of basis elements of e_{j_t} A e_{i_s}
    let coeffs: Vec<Vec<Vec<(usize, F)>>> = pres
        .p1
        .iter()
        .zip(&pres.p1_images)
        .map(|(&i, x)| {
            let mut start = 0;
            pres.p0
                .iter()
                .map(|&j| {
                    let block = alg.basis_between(j, i);
                    let a: Vec<(usize, F)> = block
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| !x[start + k].is_negligible())
                        .map(|(k, &b)| (b, x[start + k].clone()))
                        .collect();
                    start += block.len();
                    a
                })
                .collect()
        })
        .collect();

    let offsets = |k: usize, summands: &[usize]| -> Vec<usize> {
        let mut acc = vec![0];
        for &v in summands {
            acc.push(acc.last().unwrap() + alg.basis_between(k, v).len());
        }
        acc
    };

    let mut quotients = Vec::with_capacity(n);
    for k in 0..n {
        let dom = offsets(k, &pres.p0);
        let cod = offsets(k, &pres.p1);
        let mut phi = Matrix::<F>::zeros(*dom.last().unwrap(), *cod.last().unwrap());
        for (t, &j) in pres.p0.iter().enumerate() {
            for (r, &b) in alg.basis_between(k, j).iter().enumerate() {
                for (s, a_s) in coeffs.iter().enumerate() {
                    for (p, c) in &a_s[t] {
                        for (prod, v) in alg.multiply_basis(b, alg.basis_path(*p)) {
                            let col = cod[s] + pos[prod];
                            let cur = phi[(dom[t] + r, col)].clone();
                            phi[(dom[t] + r, col)] = cur + c.clone() * v;
                        }
                    }
                }
            }
        }
        quotients.push((Quotient::new(phi.cols(), &phi), cod));
    }

    // left action of a: k -> l, as a map from the l-space to the k-space
    let mut left = Vec::with_capacity(q.arrow_count());
    for (a, info) in q.arrows().iter().enumerate() {
        let (k, l) = (info.source, info.target);
        let arrow = Path {
            start: k,
            arrows: vec![a],
        };
        let (ql, cod_l) = &quotients[l];
        let (qk, cod_k) = &quotients[k];
        let mut amb = Matrix::zeros(*cod_l.last().unwrap(), *cod_k.last().unwrap());
        for (s, &i) in pres.p1.iter().enumerate() {
            for (r, &b) in alg.basis_between(l, i).iter().enumerate() {
                for (prod, v) in alg.premultiply_basis(&arrow, b) {
                    amb[(cod_l[s] + r, cod_k[s] + pos[prod])] = v;
                }
            }
        }
        left.push(ql.section.mul(&amb).mul(&qk.projection));
    }
    let dims: Vec<usize> = quotients.iter().map(|(qq, _)| qq.dim()).collect();

    let op = alg
        .opposite_shared()
        .map_err(|e| ModuleError::Opposite(e.to_string()))?;
    let transpose = RepModule::new(op, dims.clone(), left, format!("Tr({})", m.label()))?;
    let maps = (0..q.arrow_count())
        .map(|a| transpose.arrow_matrix(a).transpose())
        .collect();
    RepModule::new(alg, dims, maps, label)
}

#[cfg(test)]
mod tests {
    use super::super::tests::{alg, F1, F3, F4};
    use super::*;

    #[test]
    fn presentations() {
        let a = alg(F4);
        let s1 = RepModule::simple(a.clone(), 0).unwrap();
        let p = minimal_projective_presentation(&s1).unwrap();
        assert_eq!((p.p0.clone(), p.p1.clone()), (vec![0], vec![1]));
        let p1 = RepModule::projective(a.clone(), 0).unwrap();
        let p = minimal_projective_presentation(&p1).unwrap();
        assert_eq!((p.p0, p.p1), (vec![0], vec![]));

        let b = alg(F3);
        let s2 = RepModule::simple(b.clone(), 1).unwrap();
        let p = minimal_projective_presentation(&s2).unwrap();
        assert_eq!((p.p0, p.p1), (vec![1], vec![2]));
        assert!(p.differential.unwrap().is_homomorphism(&RepModule::projective(b.clone(), 2).unwrap(), &p.p0_module));
    }

    #[test]
    fn syzygies_over_the_two_edge_line() {
        let a = alg(F4);
        let s1 = RepModule::simple(a.clone(), 0).unwrap();
        let om = syzygy(&s1).unwrap();
        assert_eq!(om.dims(), &[1, 1]);
        assert_eq!(syzygy(&om).unwrap().dims(), &[0, 1]);
        assert!(syzygy(&RepModule::projective(a.clone(), 0).unwrap())
            .unwrap()
            .is_zero());
        assert_eq!(syzygy(&RepModule::zero(a)).unwrap_err(), ModuleError::ZeroModule);
    }

    #[test]
    fn translates() {
        let a = alg(F4);
        let s1 = RepModule::simple(a.clone(), 0).unwrap();
        assert_eq!(tau(&s1).unwrap().dims(), &[0, 1]);
        let s2 = RepModule::simple(a.clone(), 1).unwrap();
        assert_eq!(tau(&s2).unwrap().dims(), &[1, 0]);
        assert!(tau(&RepModule::projective(a.clone(), 1).unwrap()).unwrap().is_zero());

        let b = alg(F1);
        let s1 = RepModule::simple(b.clone(), 0).unwrap();
        assert_eq!(tau(&s1).unwrap().dims(), &[0, 1]);
        assert!(tau(&RepModule::simple(b.clone(), 1).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn translates_over_linear_a3() {
        // right modules over 1 -> 2 -> 3 are representations 1 -> 2 -> 3;
        // P3 = S3 and the AR quiver gives τS2 = S3, τS1 = S2
        let a = alg("vertices: 1 2 3\narrow: a 1 2\narrow: b 2 3\n");
        let s2 = RepModule::simple(a.clone(), 1).unwrap();
        assert_eq!(tau(&s2).unwrap().dims(), &[0, 0, 1]);
        let s1 = RepModule::simple(a.clone(), 0).unwrap();
        assert_eq!(tau(&s1).unwrap().dims(), &[0, 1, 0]);
    }
}
