//! Brute-force oracle for the protocol pipelines.
//!
//! Everything here works on raw amplitude vectors with explicit full
//! 2^n x 2^n projector and unitary matrices, deliberately bypassing the
//! library's measurement module. Index convention matches the library:
//! big-endian over the label order [1, 2, 3, 4, 5(, a)].

#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub type Matrix = Vec<Vec<Complex64>>;

pub fn matvec(m: &Matrix, v: &[Complex64]) -> Vec<Complex64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn norm_sq(v: &[Complex64]) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum()
}

pub fn fidelity_raw(u: &[Complex64], v: &[Complex64]) -> f64 {
    let nu = norm_sq(u).sqrt();
    let nv = norm_sq(v).sqrt();
    let ip: Complex64 = u.iter().zip(v).map(|(a, b)| a.conj() * b).sum();
    (ip.norm() / (nu * nv)).powi(2)
}

/// |ket⟩⟨ket| on the qubit pair at (shift_hi, shift_lo), identity elsewhere.
pub fn pair_projector(n: usize, shift_hi: usize, shift_lo: usize, ket: [Complex64; 4]) -> Matrix {
    let dim = 1 << n;
    let pmask = (1usize << shift_hi) | (1usize << shift_lo);
    let pair_bits = |idx: usize| ((idx >> shift_hi) & 1) << 1 | ((idx >> shift_lo) & 1);
    let mut m = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    for r in 0..dim {
        for col in 0..dim {
            if r & !pmask == col & !pmask {
                m[r][col] = ket[pair_bits(r)] * ket[pair_bits(col)].conj();
            }
        }
    }
    m
}

/// |ket⟩⟨ket| on a single qubit, identity elsewhere.
pub fn single_projector(n: usize, shift: usize, ket: [Complex64; 2]) -> Matrix {
    let dim = 1 << n;
    let mask = 1usize << shift;
    let mut m = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    for r in 0..dim {
        for col in 0..dim {
            if r & !mask == col & !mask {
                m[r][col] = ket[(r >> shift) & 1] * ket[(col >> shift) & 1].conj();
            }
        }
    }
    m
}

/// Embeds a 4x4 matrix acting on the pair (shift_hi, shift_lo).
pub fn pair_operator(
    n: usize,
    shift_hi: usize,
    shift_lo: usize,
    u: [[Complex64; 4]; 4],
) -> Matrix {
    let dim = 1 << n;
    let pmask = (1usize << shift_hi) | (1usize << shift_lo);
    let pair_bits = |idx: usize| ((idx >> shift_hi) & 1) << 1 | ((idx >> shift_lo) & 1);
    let mut m = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    for r in 0..dim {
        for col in 0..dim {
            if r & !pmask == col & !pmask {
                m[r][col] = u[pair_bits(r)][pair_bits(col)];
            }
        }
    }
    m
}

const SQRT_HALF: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Bell kets in pipeline order: Phi+, Phi-, Psi+, Psi-.
pub fn bell_kets() -> [[Complex64; 4]; 4] {
    let r = SQRT_HALF;
    [
        [c(r), c(0.0), c(0.0), c(r)],
        [c(r), c(0.0), c(0.0), c(-r)],
        [c(0.0), c(r), c(r), c(0.0)],
        [c(0.0), c(r), c(-r), c(0.0)],
    ]
}

/// Conclusive-basis kets {x, y} for channel (alpha, beta).
pub fn conclusive_kets(alpha: f64, beta: f64) -> [[Complex64; 2]; 2] {
    [[c(alpha), c(beta)], [c(beta), c(-alpha)]]
}

/// Balanced-basis kets {x, y}.
pub fn balanced_kets() -> [[Complex64; 2]; 2] {
    let r = SQRT_HALF;
    [[c(r), c(r)], [c(r), c(-r)]]
}

/// The published collective filters, rows in the published basis order
/// {|0⟩₅|0⟩ₐ, |1⟩₅|0⟩ₐ, |0⟩₅|1⟩ₐ, |1⟩₅|1⟩ₐ} (particle 5 least significant).
pub fn filter_phi(alpha: f64, beta: f64) -> [[Complex64; 4]; 4] {
    let r = beta / alpha;
    let k = (1.0 - r * r).max(0.0).sqrt();
    [
        [c(r), c(0.0), c(k), c(0.0)],
        [c(0.0), c(1.0), c(0.0), c(0.0)],
        [c(0.0), c(0.0), c(0.0), c(-1.0)],
        [c(k), c(0.0), c(-r), c(0.0)],
    ]
}

pub fn filter_psi(alpha: f64, beta: f64) -> [[Complex64; 4]; 4] {
    let r = beta / alpha;
    let k = (1.0 - r * r).max(0.0).sqrt();
    [
        [c(0.0), c(r), c(k), c(0.0)],
        [c(1.0), c(0.0), c(0.0), c(0.0)],
        [c(0.0), c(0.0), c(0.0), c(-1.0)],
        [c(0.0), c(k), c(-r), c(0.0)],
    ]
}

/// (α|000⟩₁₂₃ + β|111⟩₁₂₃) ⊗ (a|00⟩₄₅ + b|11⟩₄₅), 32 amplitudes.
pub fn initial_state_5(alpha: f64, beta: f64, a: Complex64, b: Complex64) -> Vec<Complex64> {
    let mut amps = vec![Complex64::new(0.0, 0.0); 32];
    amps[0b00000] = c(alpha) * a;
    amps[0b00011] = c(alpha) * b;
    amps[0b11100] = c(beta) * a;
    amps[0b11111] = c(beta) * b;
    amps
}

/// Extends to 64 amplitudes with the ancilla (least significant bit) in |0⟩.
pub fn with_ancilla(amps: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); 64];
    for (i, a) in amps.iter().enumerate() {
        out[i << 1] = *a;
    }
    out
}

pub struct OracleLeaf {
    pub probability: f64,
    /// Unnormalized projected amplitude vector.
    pub vector: Vec<Complex64>,
}

/// All 8 scheme-1 leaves in pipeline order (Bell outer, then x, y).
///
/// Shifts for n = 5: particle i sits at bit 5 - i.
pub fn scheme1_oracle(alpha: f64, beta: f64, a: Complex64, b: Complex64) -> Vec<OracleLeaf> {
    let init = initial_state_5(alpha, beta, a, b);
    let (s3, s4, s5) = (2usize, 1usize, 0usize);
    let mut leaves = Vec::with_capacity(8);
    for bell in bell_kets() {
        let p_bell = pair_projector(5, s3, s4, bell);
        let after_bell = matvec(&p_bell, &init);
        for ket in conclusive_kets(alpha, beta) {
            let p5 = single_projector(5, s5, ket);
            let v = matvec(&p5, &after_bell);
            leaves.push(OracleLeaf {
                probability: norm_sq(&v),
                vector: v,
            });
        }
    }
    leaves
}

/// All 12 scheme-2 leaves in pipeline order
/// (Bell outer; failure leaf, then ancilla-0 x, y).
///
/// Shifts for n = 6: particle i sits at bit 6 - i, ancilla at bit 0.
pub fn scheme2_oracle(alpha: f64, beta: f64, a: Complex64, b: Complex64) -> Vec<OracleLeaf> {
    let init = with_ancilla(&initial_state_5(alpha, beta, a, b));
    let (s3, s4, s5, sa) = (3usize, 2usize, 1usize, 0usize);
    let zero_ket = [c(1.0), c(0.0)];
    let one_ket = [c(0.0), c(1.0)];
    let mut leaves = Vec::with_capacity(12);
    for (i, bell) in bell_kets().into_iter().enumerate() {
        let filter = if i < 2 {
            filter_phi(alpha, beta)
        } else {
            filter_psi(alpha, beta)
        };
        // the published basis ordering makes the ancilla the high pair bit
        let u = pair_operator(6, sa, s5, filter);
        let p_bell = pair_projector(6, s3, s4, bell);
        let after = matvec(&u, &matvec(&p_bell, &init));
        let fail = matvec(&single_projector(6, sa, one_ket), &after);
        leaves.push(OracleLeaf {
            probability: norm_sq(&fail),
            vector: fail,
        });
        let cont = matvec(&single_projector(6, sa, zero_ket), &after);
        for ket in balanced_kets() {
            let v = matvec(&single_projector(6, s5, ket), &cont);
            leaves.push(OracleLeaf {
                probability: norm_sq(&v),
                vector: v,
            });
        }
    }
    leaves
}

/// Random normalized input coefficients, including complex phases.
pub fn random_input<R: Rng>(rng: &mut R) -> (Complex64, Complex64) {
    loop {
        let a = Complex64::new(rng.gen::<f64>() * 2.0 - 1.0, rng.gen::<f64>() * 2.0 - 1.0);
        let b = Complex64::new(rng.gen::<f64>() * 2.0 - 1.0, rng.gen::<f64>() * 2.0 - 1.0);
        let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
        if norm > 1e-3 {
            return (a / norm, b / norm);
        }
    }
}

/// Random valid channel: alpha squared uniform in [0.5, 1].
pub fn random_alpha_sq<R: Rng>(rng: &mut R) -> f64 {
    0.5 + 0.5 * rng.gen::<f64>()
}
