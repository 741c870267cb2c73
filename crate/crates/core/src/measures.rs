//! Correlation measures on two-qubit states: concurrence (generic and
//! X-form), l1-norm coherence with an optional local basis rotation,
//! quantum Fisher information and local quantum Fisher information.

use num_complex::Complex64;

use crate::dynamics::{DensityMatrix, XView};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, kron, pauli, ComplexMatrix, EigenSystem, HERMITIAN_TOL};

/// Eigenvalue pairs with p_i + p_j at or below this are skipped.
pub const PAIR_EPS: f64 = 1e-12;
/// Eigenvalues in [-CLAMP_WINDOW, 0) are treated as 0.
pub const CLAMP_WINDOW: f64 = 1e-9;
pub const X_FORM_TOL: f64 = 1e-9;

/// Local rotation U(φ, ϕ) = [[cosφ, −e^{iϕ} sinφ], [e^{−iϕ} sinφ, cosφ]],
/// applied to both qubits.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BasisRotation {
    pub phi: f64,
    pub varphi: f64,
}

impl BasisRotation {
    pub fn new(phi: f64, varphi: f64) -> Self {
        Self { phi, varphi }
    }

    pub fn single_qubit(&self) -> ComplexMatrix {
        let (s, c) = self.phi.sin_cos();
        let e = Complex64::from_polar(1.0, self.varphi);
        let mut u = ComplexMatrix::zeros(2);
        u[(0, 0)] = Complex64::new(c, 0.0);
        u[(0, 1)] = -e * s;
        u[(1, 0)] = e.conj() * s;
        u[(1, 1)] = Complex64::new(c, 0.0);
        u
    }

    /// U ⊗ U
    pub fn two_qubit(&self) -> ComplexMatrix {
        let u = self.single_qubit();
        kron(&u, &u)
    }
}

/// Unit vector r defining the local observable σ·r on qubit A.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObservableDirection([f64; 3]);

impl ObservableDirection {
    pub fn new(r: [f64; 3]) -> Result<Self> {
        let norm = r.iter().map(|x| x * x).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParams(format!("|r| = {norm}, expected 1")));
        }
        Ok(Self(r))
    }

    pub fn from_angles(polar: f64, azimuth: f64) -> Self {
        let (sp, cp) = polar.sin_cos();
        let (sa, ca) = azimuth.sin_cos();
        Self([sp * ca, sp * sa, cp])
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }

    /// (σ·r) ⊗ 𝕀
    pub fn local_observable(&self) -> ComplexMatrix {
        kron(&pauli::along(self.0), &pauli::identity())
    }
}

/// Concurrence with the two branches of the X-state formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcurrenceParts {
    /// |ρ23| − √(ρ11ρ44)
    pub c1_branch: f64,
    /// |ρ14| − √(ρ22ρ33)
    pub c2_branch: f64,
    pub concurrence: f64,
}

impl ConcurrenceParts {
    /// C1 = 2 max(c1_branch, 0)
    pub fn c1(&self) -> f64 {
        2.0 * self.c1_branch.max(0.0)
    }

    /// C2 = 2 max(c2_branch, 0)
    pub fn c2(&self) -> f64 {
        2.0 * self.c2_branch.max(0.0)
    }
}

/// Measures of a single state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureSet {
    pub concurrence: f64,
    pub c1_branch: f64,
    pub c2_branch: f64,
    pub l1_coherence: f64,
    /// l1 norm in the rotated basis (equal to the full l1 sum when no
    /// rotation is given).
    pub l1_rotated: f64,
    pub lqfi: f64,
}

impl MeasureSet {
    pub fn evaluate(rho: &DensityMatrix, rot: Option<&BasisRotation>) -> Result<Self> {
        let parts = concurrence_x(rho)?;
        Ok(Self {
            concurrence: parts.concurrence,
            c1_branch: parts.c1_branch,
            c2_branch: parts.c2_branch,
            l1_coherence: l1_coherence_x(&rho.x_view()),
            l1_rotated: l1_coherence(rho, rot)?,
            lqfi: lqfi(rho)?,
        })
    }
}

/// Eigendecomposition of ρ with tiny negative eigenvalues clamped to zero.
pub fn clamped_spectrum(rho: &DensityMatrix) -> Result<EigenSystem> {
    let mut es = rho.eigen()?;
    for p in es.values.iter_mut() {
        if *p < -CLAMP_WINDOW {
            return Err(Error::NegativeEigenvalue { value: *p });
        }
        if *p < 0.0 {
            *p = 0.0;
        }
    }
    Ok(es)
}

fn sqrt_of(es: &EigenSystem) -> ComplexMatrix {
    let roots: Vec<f64> = es.values.iter().map(|p| p.max(0.0).sqrt()).collect();
    let d = ComplexMatrix::diag(&roots);
    &(&es.vectors * &d) * &es.vectors.dagger()
}

/// Wootters concurrence from the spectrum of R = ρ (σy⊗σy) ρ* (σy⊗σy).
///
/// R's eigenvalues are taken from the Hermitian √ρ ρ̃ √ρ, which shares them.
pub fn concurrence_generic(rho: &DensityMatrix) -> Result<f64> {
    let yy = kron(&pauli::y(), &pauli::y());
    let flipped = &(&yy * &rho.matrix().conj()) * &yy;
    let root = sqrt_of(&clamped_spectrum(rho)?);
    let mut k = &(&root * &flipped) * &root;
    // Restore exact Hermiticity lost to rounding.
    k = (&k + &k.dagger()).scale_re(0.5);
    let mut lambdas: Vec<f64> = hermitian_eig(&k)?
        .values
        .into_iter()
        .map(|l| l.max(0.0).sqrt())
        .collect();
    lambdas.sort_by(|a, b| b.total_cmp(a));
    Ok((lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0))
}

/// C = 2 max{|ρ23| − √(ρ11ρ44), |ρ14| − √(ρ22ρ33), 0}
pub fn concurrence_x(rho: &DensityMatrix) -> Result<ConcurrenceParts> {
    let leakage = rho.off_block_leakage();
    if leakage >= X_FORM_TOL {
        return Err(Error::NotXForm { leakage });
    }
    Ok(concurrence_x_view(&rho.x_view()))
}

pub fn concurrence_x_view(v: &XView) -> ConcurrenceParts {
    let c1_branch = v.rho23.norm() - (v.rho11 * v.rho44).max(0.0).sqrt();
    let c2_branch = v.rho14.norm() - (v.rho22 * v.rho33).max(0.0).sqrt();
    ConcurrenceParts {
        c1_branch,
        c2_branch,
        concurrence: 2.0 * c1_branch.max(c2_branch).max(0.0),
    }
}

/// 2|ρ23| + 2|ρ14|
pub fn l1_coherence_x(v: &XView) -> f64 {
    2.0 * v.rho23.norm() + 2.0 * v.rho14.norm()
}

/// Σ_{i≠j} |ρ_ij|, after conjugating by U⊗U when a rotation is given.
pub fn l1_coherence(rho: &DensityMatrix, rot: Option<&BasisRotation>) -> Result<f64> {
    let m = match rot {
        Some(r) => rho.matrix().conjugate_by(&r.two_qubit())?,
        None => rho.matrix().clone(),
    };
    let n = m.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += m[(i, j)].norm();
            }
        }
    }
    Ok(s)
}

/// F(ρ, H) = ½ Σ_{i≠j} (p_i − p_j)² / (p_i + p_j) |⟨ψ_i|H|ψ_j⟩|²
pub fn qfi(rho: &DensityMatrix, h: &ComplexMatrix) -> Result<f64> {
    let deviation = h.hermitian_deviation();
    if deviation > HERMITIAN_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    let es = clamped_spectrum(rho)?;
    let vecs: Vec<Vec<Complex64>> = (0..es.len()).map(|i| es.vector(i)).collect();
    let mut f = 0.0;
    for i in 0..es.len() {
        for j in 0..es.len() {
            let (pi, pj) = (es.values[i], es.values[j]);
            if i == j || pi + pj <= PAIR_EPS {
                continue;
            }
            let d = pi - pj;
            f += d * d / (pi + pj) * h.sandwich(&vecs[i], &vecs[j]).norm_sqr();
        }
    }
    Ok(0.5 * f)
}

/// ⟨ψ_i| σ_l ⊗ 𝕀 |ψ_j⟩ for l = x, y, z.
fn local_pauli_elements(es: &EigenSystem) -> [Vec<Vec<Complex64>>; 3] {
    let id = pauli::identity();
    let ops = [
        kron(&pauli::x(), &id),
        kron(&pauli::y(), &id),
        kron(&pauli::z(), &id),
    ];
    let vecs: Vec<Vec<Complex64>> = (0..es.len()).map(|i| es.vector(i)).collect();
    ops.map(|op| {
        vecs.iter()
            .map(|u| vecs.iter().map(|v| op.sandwich(u, v)).collect())
            .collect()
    })
}

/// M_lk = Σ 2 p_i p_j / (p_i + p_j) ⟨ψ_i|σ_l⊗𝕀|ψ_j⟩⟨ψ_j|σ_k⊗𝕀|ψ_i⟩
///
/// `include_diagonal` selects whether the i = j terms enter the sum.
pub fn lqfi_matrix(es: &EigenSystem, include_diagonal: bool) -> [[f64; 3]; 3] {
    let el = local_pauli_elements(es);
    let n = es.len();
    let mut m = [[Complex64::new(0.0, 0.0); 3]; 3];
    for i in 0..n {
        for j in 0..n {
            let (pi, pj) = (es.values[i], es.values[j]);
            if (i == j && !include_diagonal) || pi + pj <= PAIR_EPS {
                continue;
            }
            let w = 2.0 * pi * pj / (pi + pj);
            for l in 0..3 {
                for k in 0..3 {
                    m[l][k] += el[l][i][j] * el[k][j][i] * w;
                }
            }
        }
    }
    let mut out = [[0.0; 3]; 3];
    for l in 0..3 {
        for k in 0..3 {
            debug_assert!(m[l][k].im.abs() < 1e-10, "M has imaginary residue");
            debug_assert!((m[l][k].re - m[k][l].re).abs() < 1e-10, "M not symmetric");
            out[l][k] = 0.5 * (m[l][k].re + m[k][l].re);
        }
    }
    out
}

fn one_minus_lambda_max(m: [[f64; 3]; 3]) -> Result<f64> {
    let rows: Vec<Vec<f64>> = m.iter().map(|r| r.to_vec()).collect();
    let es = hermitian_eig(&ComplexMatrix::from_real_rows(&rows)?)?;
    Ok(1.0 - es.values[2])
}

/// Q_F = 1 − λ_max(M), with M summed over all eigenpairs including i = j.
pub fn lqfi(rho: &DensityMatrix) -> Result<f64> {
    lqfi_from_eigensystem(&clamped_spectrum(rho)?)
}

/// LQFI from a caller-supplied eigenbasis of ρ.
pub fn lqfi_from_eigensystem(es: &EigenSystem) -> Result<f64> {
    one_minus_lambda_max(lqfi_matrix(es, true))
}

/// Same pipeline with the i = j terms dropped from M.
pub fn lqfi_distinct_pairs(rho: &DensityMatrix) -> Result<f64> {
    lqfi_distinct_pairs_from_eigensystem(&clamped_spectrum(rho)?)
}

pub fn lqfi_distinct_pairs_from_eigensystem(es: &EigenSystem) -> Result<f64> {
    one_minus_lambda_max(lqfi_matrix(es, false))
}

/// Minimum of F(ρ, σ_r⊗𝕀) over an (n_polar × n_azimuth) grid on the sphere.
///
/// The polar grid includes both poles.
pub fn lqfi_bruteforce(rho: &DensityMatrix, n_polar: usize, n_azimuth: usize) -> Result<f64> {
    if n_polar < 8 || n_azimuth < 8 {
        return Err(Error::InvalidParams(format!(
            "sphere grid must be at least 8x8, got {n_polar}x{n_azimuth}"
        )));
    }
    let es = clamped_spectrum(rho)?;
    let el = local_pauli_elements(&es);
    let n = es.len();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (pi, pj) = (es.values[i], es.values[j]);
            if i != j && pi + pj > PAIR_EPS {
                let d = pi - pj;
                pairs.push((i, j, 0.5 * d * d / (pi + pj)));
            }
        }
    }
    let mut best = f64::INFINITY;
    for a in 0..n_polar {
        let polar = std::f64::consts::PI * a as f64 / (n_polar - 1) as f64;
        for b in 0..n_azimuth {
            let azimuth = 2.0 * std::f64::consts::PI * b as f64 / n_azimuth as f64;
            let r = ObservableDirection::from_angles(polar, azimuth).components();
            let f: f64 = pairs
                .iter()
                .map(|&(i, j, w)| {
                    let h = el[0][i][j] * r[0] + el[1][i][j] * r[1] + el[2][i][j] * r[2];
                    w * h.norm_sqr()
                })
                .sum();
            best = best.min(f);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{ONE, ZERO};
    use crate::model::initial_state;
    use std::f64::consts::FRAC_PI_4;

    fn x_state(d: [f64; 4], rho14: Complex64, rho23: Complex64) -> DensityMatrix {
        DensityMatrix::from_x_view(&XView {
            rho11: d[0],
            rho22: d[1],
            rho33: d[2],
            rho44: d[3],
            rho14,
            rho23,
        })
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn bell() -> DensityMatrix {
        initial_state(FRAC_PI_4)
    }

    fn ket01() -> DensityMatrix {
        DensityMatrix::from_matrix_unchecked(ComplexMatrix::diag(&[0.0, 1.0, 0.0, 0.0]))
    }

    #[test]
    fn concurrence_generic_anchors() {
        assert!((concurrence_generic(&bell()).unwrap() - 1.0).abs() < 1e-12);
        assert!(concurrence_generic(&initial_state(0.0)).unwrap().abs() < 1e-12);
        assert!(concurrence_generic(&DensityMatrix::maximally_mixed()).unwrap().abs() < 1e-12);
    }

    #[test]
    fn concurrence_x_cases() {
        let p = concurrence_x(&bell()).unwrap();
        assert!((p.concurrence - 1.0).abs() < 1e-15);
        assert!(p.c1_branch > p.c2_branch);
        assert!((p.c1() - 1.0).abs() < 1e-15);

        let rho = x_state([0.1, 0.35, 0.35, 0.1], ZERO, c(0.3));
        let p = concurrence_x(&rho).unwrap();
        assert!((p.concurrence - 0.4).abs() < 1e-15);
        let generic = concurrence_generic(&rho).unwrap();
        assert!((generic - 0.4).abs() < 1e-9);

        let diag = x_state([0.1, 0.2, 0.3, 0.4], ZERO, ZERO);
        let p = concurrence_x(&diag).unwrap();
        assert_eq!(p.concurrence, 0.0);
        assert!(p.c1_branch <= 0.0 && p.c2_branch <= 0.0);
    }

    #[test]
    fn concurrence_x_rejects_non_x() {
        let rot = BasisRotation::new(0.3, 0.1);
        let rho = bell().transformed(&kron(&rot.single_qubit(), &pauli::identity())).unwrap();
        assert!(matches!(concurrence_x(&rho), Err(Error::NotXForm { .. })));
    }

    #[test]
    fn l1_cases() {
        assert!((l1_coherence(&bell(), None).unwrap() - 1.0).abs() < 1e-15);
        let diag = x_state([0.1, 0.2, 0.3, 0.4], ZERO, ZERO);
        assert_eq!(l1_coherence(&diag, None).unwrap(), 0.0);
        let rho = x_state([0.25; 4], c(0.1), c(0.25));
        assert!((l1_coherence(&rho, None).unwrap() - 0.7).abs() < 1e-15);
        assert!((l1_coherence_x(&rho.x_view()) - 0.7).abs() < 1e-15);
        let ident = BasisRotation::default();
        assert!((l1_coherence(&rho, Some(&ident)).unwrap() - 0.7).abs() < 1e-15);
    }

    #[test]
    fn rotation_is_unitary() {
        let u = BasisRotation::new(0.7, -1.3).two_qubit();
        let g = &u.dagger() * &u;
        assert!((&g - &ComplexMatrix::identity(4)).max_abs() < 1e-14);
    }

    #[test]
    fn rotated_l1_on_product_state() {
        // |10⟩ rotated by φ = π/4 on each qubit spreads over all four kets
        // with equal weight: every |ρ_ij| = 1/4.
        let rot = BasisRotation::new(FRAC_PI_4, 0.0);
        let l1 = l1_coherence(&initial_state(0.0), Some(&rot)).unwrap();
        assert!((l1 - 3.0).abs() < 1e-14);
    }

    #[test]
    fn qfi_anchors() {
        let zi = kron(&pauli::z(), &pauli::identity());
        assert_eq!(qfi(&DensityMatrix::maximally_mixed(), &zi).unwrap(), 0.0);
        assert!(qfi(&ket01(), &zi).unwrap().abs() < 1e-15);
        // Rank-1 oracle: F = ½ Σ_{i≠j} p |⟨ψ|H|ψ_j⟩|² · 2 = ⟨H²⟩ − ⟨H⟩² = 1.
        assert!((qfi(&bell(), &zi).unwrap() - 1.0).abs() < 1e-12);
        let bad = ComplexMatrix::from_rows(&[vec![ZERO, ONE], vec![ZERO, ZERO]]).unwrap();
        let bad4 = kron(&bad, &pauli::identity());
        assert!(matches!(qfi(&bell(), &bad4), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn lqfi_anchors() {
        assert!(lqfi(&DensityMatrix::maximally_mixed()).unwrap().abs() < 1e-10);
        assert!(lqfi(&ket01()).unwrap().abs() < 1e-9);
        assert!((lqfi(&bell()).unwrap() - 1.0).abs() < 1e-9);
        // The i≠j-only sum loses the whole M for a pure product state.
        assert!((lqfi_distinct_pairs(&ket01()).unwrap() - 1.0).abs() < 1e-9);
        assert!((lqfi_distinct_pairs(&bell()).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn bruteforce_anchors() {
        assert!(lqfi_bruteforce(&DensityMatrix::maximally_mixed(), 16, 32).unwrap().abs() < 1e-12);
        let flat = lqfi_bruteforce(&bell(), 16, 32).unwrap();
        assert!((flat - 1.0).abs() < 1e-12);
        for r in [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]] {
            let h = ObservableDirection::new(r).unwrap().local_observable();
            assert!((qfi(&bell(), &h).unwrap() - 1.0).abs() < 1e-12);
        }
        assert!(lqfi_bruteforce(&bell(), 4, 32).is_err());
    }

    #[test]
    fn observable_direction_requires_unit_norm() {
        assert!(ObservableDirection::new([1.0, 1.0, 0.0]).is_err());
    }

    #[test]
    fn negative_eigenvalues_rejected() {
        let rho = DensityMatrix::from_matrix_unchecked(ComplexMatrix::diag(&[1.1, -0.1, 0.0, 0.0]));
        assert!(matches!(lqfi(&rho), Err(Error::NegativeEigenvalue { .. })));
        let tiny = DensityMatrix::from_matrix_unchecked(ComplexMatrix::diag(&[
            1.0 + 5e-10,
            -5e-10,
            0.0,
            0.0,
        ]));
        assert!(lqfi(&tiny).unwrap().abs() < 1e-9);
    }

    #[test]
    fn measure_set_on_bell() {
        let m = MeasureSet::evaluate(&bell(), None).unwrap();
        assert!((m.concurrence - 1.0).abs() < 1e-12);
        assert!((m.l1_coherence - 1.0).abs() < 1e-12);
        assert!((m.l1_rotated - 1.0).abs() < 1e-12);
        assert!((m.lqfi - 1.0).abs() < 1e-9);
    }
}
