//! Globally adaptive Gauss–Kronrod (7/15) quadrature for complex-valued
//! integrands on finite intervals.

use num_complex::Complex64;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_19,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_42,
    0.204_432_940_075_298_89,
    0.209_482_141_084_727_82,
];

// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_64,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub value: Complex64,
    pub abs_err: f64,
    pub evals: usize,
    /// Sum of |integrand| weights, a scale for roundoff estimates.
    pub magnitude: f64,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
    magnitude: f64,
}

fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut magnitude = fc.norm() * WGK[7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        let pair = f1 + f2;
        kronrod += pair * WGK[j];
        magnitude += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    Panel {
        a,
        b,
        value: kronrod * half,
        err: ((kronrod - gauss) * half).norm(),
        magnitude: magnitude * half.abs(),
    }
}

/// Integrates `f` over `[a, b]` until the summed panel error is below
/// `max(abs_tol, rel_tol·|I|)` or `max_panels` is reached.
///
/// The panel error is the raw Gauss–Kronrod difference, which bounds the
/// error of the 7-point rule and so overestimates the 15-point result.
pub fn integrate<F>(f: F, a: f64, b: f64, abs_tol: f64, rel_tol: f64, max_panels: usize) -> Quadrature
where
    F: Fn(f64) -> Complex64,
{
    let mut panels = vec![gk15(&f, a, b)];
    let mut evals = 15;
    loop {
        let value: Complex64 = panels.iter().map(|p| p.value).sum();
        let err: f64 = panels.iter().map(|p| p.err).sum();
        if err <= abs_tol.max(rel_tol * value.norm()) || panels.len() >= max_panels {
            return Quadrature {
                value,
                abs_err: err,
                evals,
                magnitude: panels.iter().map(|p| p.magnitude).sum(),
            };
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .map(|(i, _)| i)
            .expect("at least one panel");
        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.a + p.b);
        if mid <= p.a || mid >= p.b {
            // Panel can no longer be split in f64; keep it and stop.
            panels.push(p);
            let value: Complex64 = panels.iter().map(|p| p.value).sum();
            return Quadrature {
                value,
                abs_err: panels.iter().map(|p| p.err).sum(),
                evals,
                magnitude: panels.iter().map(|p| p.magnitude).sum(),
            };
        }
        panels.push(gk15(&f, p.a, mid));
        panels.push(gk15(&f, mid, p.b));
        evals += 30;
    }
}

/// Real-valued convenience wrapper around [`integrate`].
pub fn integrate_real<F>(f: F, a: f64, b: f64, abs_tol: f64, rel_tol: f64, max_panels: usize) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let q = integrate(|x| Complex64::new(f(x), 0.0), a, b, abs_tol, rel_tol, max_panels);
    (q.value.re, q.abs_err)
}
