//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

pub mod oracle2d;
pub mod reduction;

use fluxcf::flux1d::{peclet_data, stencil_exact_ibp, Side};
use fluxcf::specfun::{bernoulli, bernoulli_scaled};
use fluxcf::{Limiter, Mesh1D, PecletData};
use nalgebra::{DMatrix, DVector};

/// Gauss–Legendre nodes and weights on `[-1, 1]` by Newton iteration.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// Composite Gauss–Legendre rule with `panels` equal panels.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let rule = gauss_legendre(20);
    let h = (b - a) / panels as f64;
    let mut sum = 0.0;
    for p in 0..panels {
        let lo = a + p as f64 * h;
        for &(x, w) in &rule {
            sum += w * f(lo + 0.5 * h * (x + 1.0));
        }
    }
    0.5 * h * sum
}

/// Flux coefficients `[c_j, c_{j+1}, s_j, s_{j+1}]` from direct quadrature
/// of the local two-point problem with `Λ(η) = pe(η-½) + aq(η-½)²`.
pub fn quadrature_flux(pe: f64, aq: f64, diffusion: f64, dx: f64) -> [f64; 4] {
    let lambda = |eta: f64| pe * (eta - 0.5) + aq * (eta - 0.5) * (eta - 0.5);
    let panels = 400;
    let norm = integrate(|e| (-lambda(e)).exp(), 0.0, 0.5, panels)
        + integrate(|e| (-lambda(e)).exp(), 0.5, 1.0, panels);
    let d = diffusion / dx;
    let left = integrate(|e| (e - 0.5) * (-lambda(e)).exp(), 0.0, 0.5, panels);
    let right = integrate(|e| (e - 0.5) * (-lambda(e)).exp(), 0.5, 1.0, panels);
    [
        d * (-lambda(0.0)).exp() / norm,
        -d * (-lambda(1.0)).exp() / norm,
        -dx * left / norm,
        -dx * right / norm,
    ]
}

pub fn dense_solve(a: &[Vec<f64>], b: &[f64]) -> Vec<f64> {
    let n = b.len();
    let m = DMatrix::from_fn(n, n, |i, j| a[i][j]);
    let rhs = DVector::from_column_slice(b);
    let x = m.lu().solve(&rhs).expect("singular dense system");
    x.iter().copied().collect()
}

/// Matrix and right-hand side of an affine map `r(c) = A c - b`, recovered
/// by probing with unit vectors.
pub fn probe_affine(n: usize, r: impl Fn(&[f64]) -> Vec<f64>) -> (Vec<Vec<f64>>, Vec<f64>) {
    let zero = vec![0.0; n];
    let r0 = r(&zero);
    let mut a = vec![vec![0.0; n]; n];
    for j in 0..n {
        let mut e = zero.clone();
        e[j] = 1.0;
        let rj = r(&e);
        for i in 0..n {
            a[i][j] = rj[i] - r0[i];
        }
    }
    (a, r0.iter().map(|v| -v).collect())
}

pub fn max_abs(a: &[f64]) -> f64 {
    a.iter().fold(0.0, |m, v| m.max(v.abs()))
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

/// Deterministic generator for test data.
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Self(
            seed.wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407),
        )
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let u = (self.0 >> 11) as f64 / (1u64 << 53) as f64;
        lo + (hi - lo) * u
    }
}

/// Exact solution of `(μVc - Dc')' = s` for constant `V` and `s` constant on
/// each control volume (half volumes at the ends).
pub fn exact_piecewise(mesh: &Mesh1D, k: f64, d: f64, s: &[f64], bc: (f64, f64)) -> Vec<f64> {
    let n = mesh.n_cells();
    let mut breaks = vec![0.0];
    breaks.extend((0..n).map(|i| mesh.interface(i)));
    breaks.push(mesh.length());
    // S(x) = ∫₀ˣ s, linear on each piece.
    let mut cum = vec![0.0];
    for j in 0..=n {
        cum.push(cum[j] + s[j] * (breaks[j + 1] - breaks[j]));
    }
    let big_s = |t: f64| {
        let j = breaks[1..].iter().position(|&b| t <= b).unwrap_or(n);
        cum[j] + s[j] * (t - breaks[j])
    };
    let i_of = |x: f64| {
        let mut total = 0.0;
        for j in 0..=n {
            let (a, b) = (breaks[j], breaks[j + 1].min(x));
            if b > a {
                total += integrate(|t| (-k * t).exp() * big_s(t), a, b, 4);
            }
        }
        total
    };
    let e_of = |x: f64| if k == 0.0 { x } else { -(-k * x).exp_m1() / k };
    let l = mesh.length();
    let g0 = (bc.0 - i_of(l) / d - bc.1 * (-k * l).exp()) * d / e_of(l);
    (0..=n)
        .map(|j| {
            let x = mesh.node(j);
            (k * x).exp() * (bc.0 - (g0 * e_of(x) + i_of(x)) / d)
        })
        .collect()
}

pub fn exact_ibp_discrepancy(cases: &[(f64, f64)]) -> f64 {
    let mut worst: f64 = 0.0;
    for &(pe, q) in cases {
        let p = PecletData::new(pe, q, Limiter::Ratio.alpha(pe, q));
        let side = if pe >= 0.0 { Side::Plus } else { Side::Minus };
        let s = stencil_exact_ibp(&p, 1.0, 0.1, side).unwrap();
        let oracle = quadrature_flux(pe, p.alpha_q(), 1.0, 0.1);
        let scale = oracle.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        for (a, b) in s.entries().iter().zip(oracle) {
            worst = worst.max((a - b).abs() / scale);
        }
    }
    worst
}

/// `max |asymptotic/exact - 1|` over the homogeneous entries for the
/// velocity `1 + x` at `x = 1/2`.
pub fn asymptotic_ratio_error(dx: f64) -> f64 {
    let p = peclet_data(1.5, 1.0, dx, 1.0, 1.0, Limiter::Off);
    let d = 1.0 / dx;
    let aq = p.alpha_q();
    let plus = [
        d * bernoulli(-p.pe_plus).unwrap(),
        -d * bernoulli_scaled(p.pe_plus, -aq).unwrap(),
    ];
    let minus = [
        d * bernoulli_scaled(-p.pe_minus, -aq).unwrap(),
        -d * bernoulli(p.pe_minus).unwrap(),
    ];
    let mut worst: f64 = 0.0;
    for (side, asym) in [(Side::Plus, plus), (Side::Minus, minus)] {
        let exact = stencil_exact_ibp(&p, 1.0, dx, side).unwrap();
        worst = worst
            .max((asym[0] / exact.a_left - 1.0).abs())
            .max((asym[1] / exact.a_right - 1.0).abs());
    }
    worst
}
