//! Shared test fixtures: full integer transcriptions of the braid words
//! β and β′ in B₅ and the conjugator w used by β′.

/// β, 26 letters: (σ₂σ₃σ₂⁻¹)(σ₁⁻²σ₂σ₃σ₄²σ₃⁻¹σ₂σ₃σ₄⁻²σ₃⁻¹σ₂⁻¹σ₁²)(σ₃⁻¹σ₂σ₁σ₂⁻¹σ₃)(σ₄⁻¹σ₃σ₄).
pub const BETA: [i64; 26] = [
    2, 3, -2, //
    -1, -1, 2, 3, 4, 4, -3, 2, 3, -4, -4, -3, -2, 1, 1, //
    -3, 2, 1, -2, 3, //
    -4, 3, 4,
];

/// w = σ₃σ₄⁻¹σ₁⁻¹σ₃⁻²σ₂⁻¹σ₁⁻¹σ₃⁻¹.
pub const W: [i64; 8] = [3, -4, -1, -3, -3, -2, -1, -3];

/// β′ = σ₂ (wσ₂⁻¹σ₁σ₂w⁻¹) (wσ₂⁻¹σ₃σ₁σ₂σ₁⁻¹σ₃⁻¹σ₂w⁻¹) (wσ₃²σ₄σ₃⁻²w⁻¹), 64 letters.
pub fn beta_prime() -> Vec<i64> {
    let w = W.to_vec();
    let w_inv: Vec<i64> = W.iter().rev().map(|k| -k).collect();
    let mut out = vec![2];
    for core in [
        vec![-2, 1, 2],
        vec![-2, 3, 1, 2, -1, -3, 2],
        vec![3, 3, 4, -3, -3],
    ] {
        out.extend_from_slice(&w);
        out.extend_from_slice(&core);
        out.extend_from_slice(&w_inv);
    }
    out
}
