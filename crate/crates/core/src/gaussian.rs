//! Closed-form achievable secrecy rates for the Gaussian interference
//! channel with confidential messages, under three transmission schemes:
//! time sharing (each slot a single-user Gaussian wiretap channel),
//! multiplexed transmission (interference raises the noise floor), and
//! multiplexed transmission with artificial noise (one transmitter spends a
//! `λ` fraction of its power jamming the other receiver).
//!
//! Noise variances are normalized to 1, so powers are SNRs and the crossover
//! amplitude gains `a1`, `a2` are unitless. All rates are in bits per channel
//! use. The multiplexed scheme is the artificial-noise scheme at `λ = 0`
//! through literally the same expression path, so the two coincide
//! bit-for-bit there.

use rayon::prelude::*;

use crate::region::{convex_hull, RatePair, RateRegion};
use crate::{Error, Result};

/// Default steps per scalar parameter in [`sweep_region`]; Fig-6-scale
/// frontiers are visually converged well below this.
pub const DEFAULT_GRID: usize = 101;

/// Time fractions below this are treated as a closed transmission slot; the
/// slot's rate contribution is the `ρ → 0` limit, i.e. zero.
const RHO_EPS: f64 = 1e-9;

/// Which transmitter generates the artificial noise. The canonical formulas
/// put transmitter 2 in the noise role; `Tx1` swaps all indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoiseRole {
    Tx1,
    Tx2,
}

/// Power constraints and crossover gains of the Gaussian interference
/// channel `Y₁ = X₁ + a1·X₂ + N₁`, `Y₂ = X₂ + a2·X₁ + N₂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianICParams {
    pub p1: f64,
    pub p2: f64,
    pub a1: f64,
    pub a2: f64,
}

impl GaussianICParams {
    /// Requires nonnegative powers and weak interference (`a² < 1` on both
    /// crossover gains); the formula kernels themselves accept any
    /// nonnegative gains for testing.
    pub fn new(p1: f64, p2: f64, a1: f64, a2: f64) -> Result<Self> {
        for (name, p) in [("p1", p1), ("p2", p2)] {
            if !p.is_finite() || p < 0.0 {
                return Err(Error::validation(format!("{name} = {p} must be ≥ 0")));
            }
        }
        for (name, a) in [("a1", a1), ("a2", a2)] {
            if !a.is_finite() || !(0.0..1.0).contains(&a) {
                return Err(Error::domain(format!(
                    "{name} = {a} violates weak interference (need 0 ≤ a < 1)"
                )));
            }
        }
        Ok(GaussianICParams { p1, p2, a1, a2 })
    }
}

/// Scheme parameters: time fractions `ρ₁ + ρ₂ = 1`, power-control factors
/// `β₁, β₂ ∈ [0,1]`, artificial-noise power split `λ ∈ [0,1]`, and the noise
/// role.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeParams {
    pub rho1: f64,
    pub rho2: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub lambda: f64,
    pub an_role: NoiseRole,
}

impl SchemeParams {
    pub fn new(
        rho1: f64,
        rho2: f64,
        beta1: f64,
        beta2: f64,
        lambda: f64,
        an_role: NoiseRole,
    ) -> Result<Self> {
        for (name, v) in [
            ("rho1", rho1),
            ("rho2", rho2),
            ("beta1", beta1),
            ("beta2", beta2),
            ("lambda", lambda),
        ] {
            if !v.is_finite() || !(0.0..=1.0).contains(&v) {
                return Err(Error::domain(format!("{name} = {v} outside [0,1]")));
            }
        }
        if (rho1 + rho2 - 1.0).abs() > 1e-12 {
            return Err(Error::validation(format!(
                "time fractions must satisfy rho1 + rho2 = 1, got {rho1} + {rho2}"
            )));
        }
        Ok(SchemeParams {
            rho1,
            rho2,
            beta1,
            beta2,
            lambda,
            an_role,
        })
    }

    /// Full-power parameters with the given noise split.
    pub fn full_power(lambda: f64, an_role: NoiseRole) -> Result<Self> {
        SchemeParams::new(0.5, 0.5, 1.0, 1.0, lambda, an_role)
    }
}

fn half_log2(x: f64) -> f64 {
    0.5 * x.log2()
}

/// Unclamped single-slot time-sharing secrecy rate
/// `(ρ/2)[log₂(1+P/ρ) − log₂(1+a²P/ρ)]`, with the `ρ → 0` limit value 0.
/// Accepts any nonnegative gain, so sign behavior can be tested outside the
/// weak-interference guard.
pub fn timeshare_kernel(rho: f64, p: f64, a: f64) -> f64 {
    if rho < RHO_EPS {
        return 0.0;
    }
    let boost = p / rho;
    rho * (half_log2(1.0 + boost) - half_log2(1.0 + a * a * boost))
}

/// Unclamped rate pair for multiplexed transmission with artificial noise.
/// With transmitter 2 in the noise role it spends `λβ₂P₂` on jamming and the
/// remainder on its own message:
///
/// ```text
/// R₁ = ½log₂(1 + β₁P₁/(1+a1²β₂P₂)) − ½log₂(1 + a2²β₁P₁/(1+λβ₂P₂))
/// R₂ = ½log₂(1 + (1−λ)β₂P₂/(1+a2²β₁P₁+λβ₂P₂))
///        − ½log₂(1 + (1−λ)a1²β₂P₂/(1+λa1²β₂P₂))
/// ```
///
/// `NoiseRole::Tx1` swaps all indices. At `λ = 0` this is exactly the
/// multiplexed scheme. Gains are not range-checked here.
pub fn an_kernel(
    p1: f64,
    p2: f64,
    a1: f64,
    a2: f64,
    beta1: f64,
    beta2: f64,
    lambda: f64,
    role: NoiseRole,
) -> (f64, f64) {
    match role {
        NoiseRole::Tx2 => an_kernel_tx2(p1, p2, a1, a2, beta1, beta2, lambda),
        NoiseRole::Tx1 => {
            let (r2, r1) = an_kernel_tx2(p2, p1, a2, a1, beta2, beta1, lambda);
            (r1, r2)
        }
    }
}

fn an_kernel_tx2(
    p1: f64,
    p2: f64,
    a1: f64,
    a2: f64,
    beta1: f64,
    beta2: f64,
    lambda: f64,
) -> (f64, f64) {
    let s1 = beta1 * p1;
    let s2 = beta2 * p2;
    let r1 = half_log2(1.0 + s1 / (1.0 + a1 * a1 * s2))
        - half_log2(1.0 + a2 * a2 * s1 / (1.0 + lambda * s2));
    let r2 = half_log2(1.0 + (1.0 - lambda) * s2 / (1.0 + a2 * a2 * s1 + lambda * s2))
        - half_log2(1.0 + (1.0 - lambda) * a1 * a1 * s2 / (1.0 + lambda * a1 * a1 * s2));
    (r1, r2)
}

/// Time-sharing rate pair: transmitter 1 gets a `ρ₁` slot of a single-user
/// wiretap channel at boosted power `P₁/ρ₁`, transmitter 2 the complementary
/// slot. Negative differences clamp to zero.
pub fn timeshare_rates(g: &GaussianICParams, rho1: f64) -> Result<RatePair> {
    if !rho1.is_finite() || !(0.0..=1.0).contains(&rho1) {
        return Err(Error::domain(format!("rho1 = {rho1} outside [0,1]")));
    }
    Ok(RatePair::new(
        timeshare_kernel(rho1, g.p1, g.a2),
        timeshare_kernel(1.0 - rho1, g.p2, g.a1),
    ))
}

/// Multiplexed-transmission rate pair; evaluated as the artificial-noise
/// scheme at `λ = 0` so the two agree bit-for-bit there.
pub fn mux_rates(g: &GaussianICParams, beta1: f64, beta2: f64) -> Result<RatePair> {
    for (name, b) in [("beta1", beta1), ("beta2", beta2)] {
        if !b.is_finite() || !(0.0..=1.0).contains(&b) {
            return Err(Error::domain(format!("{name} = {b} outside [0,1]")));
        }
    }
    let (r1, r2) = an_kernel(g.p1, g.p2, g.a1, g.a2, beta1, beta2, 0.0, NoiseRole::Tx2);
    Ok(RatePair::new(r1, r2))
}

/// Artificial-noise rate pair for the given scheme parameters; clamped at 0.
pub fn an_rates(g: &GaussianICParams, s: &SchemeParams) -> Result<RatePair> {
    let (r1, r2) = an_kernel(
        g.p1, g.p2, g.a1, g.a2, s.beta1, s.beta2, s.lambda, s.an_role,
    );
    Ok(RatePair::new(r1, r2))
}

/// Transmission scheme selector for sweeps. `An` sweeps both noise roles;
/// `AnSwapped` restricts to transmitter 1 in the noise role.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    Timeshare,
    Mux,
    An,
    AnSwapped,
}

fn linspace(n: usize) -> Vec<f64> {
    (0..n).map(|i| i as f64 / (n - 1) as f64).collect()
}

/// Evaluates the scheme's rate formula on a full parameter grid (`ρ₁` for
/// time sharing, `β₁×β₂` for multiplexing, `β₁×β₂×λ` per noise role for
/// artificial noise) and returns the convexified region. Grid cells are
/// evaluated in parallel with a deterministic result order.
pub fn sweep_region(g: &GaussianICParams, scheme: Scheme, grid: usize) -> Result<RateRegion> {
    if grid < 2 {
        return Err(Error::validation(format!("grid = {grid} must be ≥ 2")));
    }
    let ticks = linspace(grid);
    let points: Vec<RatePair> = match scheme {
        Scheme::Timeshare => ticks
            .par_iter()
            .map(|&rho1| timeshare_rates(g, rho1))
            .collect::<Result<_>>()?,
        Scheme::Mux => {
            let cells: Vec<(f64, f64)> = ticks
                .iter()
                .flat_map(|&b1| ticks.iter().map(move |&b2| (b1, b2)))
                .collect();
            cells
                .par_iter()
                .map(|&(b1, b2)| mux_rates(g, b1, b2))
                .collect::<Result<_>>()?
        }
        Scheme::An | Scheme::AnSwapped => {
            let roles: &[NoiseRole] = match scheme {
                Scheme::An => &[NoiseRole::Tx2, NoiseRole::Tx1],
                _ => &[NoiseRole::Tx1],
            };
            let mut cells: Vec<(f64, f64, f64, NoiseRole)> = Vec::new();
            for &role in roles {
                for &b1 in &ticks {
                    for &b2 in &ticks {
                        for &lam in &ticks {
                            cells.push((b1, b2, lam, role));
                        }
                    }
                }
            }
            cells
                .par_iter()
                .map(|&(b1, b2, lam, role)| {
                    let (r1, r2) = an_kernel(g.p1, g.p2, g.a1, g.a2, b1, b2, lam, role);
                    Ok(RatePair::new(r1, r2))
                })
                .collect::<Result<_>>()?
        }
    };
    convex_hull(&points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig6_params(p: f64) -> GaussianICParams {
        GaussianICParams::new(p, p, 0.2, 0.2).unwrap()
    }

    #[test]
    fn params_reject_strong_interference_and_negative_power() {
        assert!(GaussianICParams::new(10.0, 10.0, 1.0, 0.2).is_err());
        assert!(GaussianICParams::new(10.0, 10.0, 0.2, 1.5).is_err());
        assert!(GaussianICParams::new(-1.0, 10.0, 0.2, 0.2).is_err());
        assert!(GaussianICParams::new(0.0, 0.0, 0.0, 0.0).is_ok());
    }

    #[test]
    fn timeshare_full_slot_corner() {
        let g = fig6_params(10.0);
        let r = timeshare_rates(&g, 1.0).unwrap();
        let expect = 0.5 * (11.0f64.log2() - 1.4f64.log2());
        assert!((r.r1 - expect).abs() < 1e-12);
        assert!((r.r1 - 1.487003).abs() < 1e-6);
        assert_eq!(r.r2, 0.0);
    }

    #[test]
    fn timeshare_zero_slot_is_zero() {
        let g = fig6_params(10.0);
        let r = timeshare_rates(&g, 0.0).unwrap();
        assert_eq!(r.r1, 0.0);
        assert!((r.r2 - 1.487003).abs() < 1e-6);
        assert!(timeshare_rates(&g, 1.5).is_err());
    }

    #[test]
    fn timeshare_no_eavesdropper_gain() {
        let g = GaussianICParams::new(10.0, 10.0, 0.2, 0.0).unwrap();
        let r = timeshare_rates(&g, 1.0).unwrap();
        assert!((r.r1 - 0.5 * 11.0f64.log2()).abs() < 1e-12);
        assert!((r.r1 - 1.729716).abs() < 1e-6);
    }

    #[test]
    fn mux_zero_power_is_origin() {
        let g = fig6_params(10.0);
        let r = mux_rates(&g, 0.0, 0.0).unwrap();
        assert_eq!((r.r1, r.r2), (0.0, 0.0));
    }

    #[test]
    fn mux_full_power_symmetric_corner() {
        let g = fig6_params(10.0);
        let r = mux_rates(&g, 1.0, 1.0).unwrap();
        let expect = 0.5 * (1.0 + 10.0 / 1.4).log2() - 0.5 * 1.4f64.log2();
        assert!((r.r1 - expect).abs() < 1e-12);
        assert_eq!(r.r1, r.r2);
    }

    #[test]
    fn kernel_goes_negative_under_strong_interference_and_rates_clamp() {
        // a2 = 2 is outside the weak-interference guard; the raw kernel must
        // report the negative difference and the rate constructor clamps it.
        let (raw_r1, _) = an_kernel(10.0, 10.0, 0.2, 2.0, 1.0, 1.0, 0.0, NoiseRole::Tx2);
        assert!(raw_r1 < 0.0);
        assert_eq!(RatePair::new(raw_r1, 0.0).r1, 0.0);
    }

    #[test]
    fn an_at_lambda_zero_is_mux_bit_for_bit() {
        let g = fig6_params(10.0);
        for &(b1, b2) in &[(1.0, 1.0), (0.3, 0.8), (0.0, 0.5), (0.77, 0.13)] {
            let m = mux_rates(&g, b1, b2).unwrap();
            let s = SchemeParams::new(0.5, 0.5, b1, b2, 0.0, NoiseRole::Tx2).unwrap();
            let a = an_rates(&g, &s).unwrap();
            assert_eq!(m.r1.to_bits(), a.r1.to_bits());
            assert_eq!(m.r2.to_bits(), a.r2.to_bits());
        }
    }

    #[test]
    fn an_full_jamming_silences_r2_and_boosts_r1() {
        let g = fig6_params(10.0);
        let s = SchemeParams::full_power(1.0, NoiseRole::Tx2).unwrap();
        let r = an_rates(&g, &s).unwrap();
        assert_eq!(r.r2, 0.0);
        let expect = 0.5 * ((1.0 + 10.0 / 1.4) / (1.0 + 0.4 / 11.0)).log2();
        assert!((r.r1 - expect).abs() < 1e-12);
        assert!((r.r1 - 1.487003).abs() < 1e-6);
    }

    #[test]
    fn an_silent_transmitter_two_reduces_to_wiretap() {
        let g = fig6_params(10.0);
        let s = SchemeParams::new(0.5, 0.5, 1.0, 0.0, 0.7, NoiseRole::Tx2).unwrap();
        let r = an_rates(&g, &s).unwrap();
        assert_eq!(r.r2, 0.0);
        let wiretap = 0.5 * 11.0f64.log2() - 0.5 * 1.4f64.log2();
        assert!((r.r1 - wiretap).abs() < 1e-12);
    }

    #[test]
    fn role_swap_swaps_rates_for_symmetric_params() {
        let g = fig6_params(10.0);
        let (r1a, r2a) = an_kernel(g.p1, g.p2, g.a1, g.a2, 1.0, 1.0, 0.4, NoiseRole::Tx2);
        let (r1b, r2b) = an_kernel(g.p1, g.p2, g.a1, g.a2, 1.0, 1.0, 0.4, NoiseRole::Tx1);
        assert_eq!(r1a.to_bits(), r2b.to_bits());
        assert_eq!(r2a.to_bits(), r1b.to_bits());
    }

    #[test]
    fn timeshare_sweep_frontier_endpoints() {
        let g = fig6_params(10.0);
        let region = sweep_region(&g, Scheme::Timeshare, 11).unwrap();
        assert!((region.max_r1() - 1.487003).abs() < 1e-6);
        assert!((region.max_r2() - 1.487003).abs() < 1e-6);
        assert_eq!(region.max_r2_at(region.max_r1()).unwrap(), 0.0);
    }

    #[test]
    fn an_sweep_contains_mux_sweep_same_grid() {
        let g = fig6_params(10.0);
        let mux = sweep_region(&g, Scheme::Mux, 11).unwrap();
        let an = sweep_region(&g, Scheme::An, 11).unwrap();
        let (ok, witness) = an.dominates(&mux);
        assert!(ok, "witness: {witness:?}");
    }

    #[test]
    fn an_dominates_timeshare_at_high_power() {
        let g = fig6_params(100.0);
        let ts = sweep_region(&g, Scheme::Timeshare, 21).unwrap();
        let an = sweep_region(&g, Scheme::An, 21).unwrap();
        let (ok, witness) = an.dominates(&ts);
        assert!(ok, "witness: {witness:?}");
    }

    #[test]
    fn sweep_rejects_degenerate_grid() {
        let g = fig6_params(10.0);
        assert!(sweep_region(&g, Scheme::Mux, 1).is_err());
    }
}
