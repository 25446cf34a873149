use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::algebra::{to_f64, Poly};

/// Approximate complex roots with multiplicity: eigenvalues of the companion
/// matrix, polished by a few Newton steps on the original polynomial.
pub fn polynomial_roots(p: &Poly) -> Vec<Complex64> {
    let Some(n) = p.degree() else {
        return Vec::new();
    };
    if n == 0 {
        return Vec::new();
    }
    let c: Vec<f64> = p.coeffs().iter().map(to_f64).collect();
    let lead = c[n];
    let companion = DMatrix::<f64>::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -c[i] / lead
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let dp = p.derivative();
    companion
        .complex_eigenvalues()
        .iter()
        .map(|&z0| {
            let mut z = z0;
            for _ in 0..4 {
                let d = dp.eval_complex(z);
                if d.norm() == 0.0 {
                    break;
                }
                let step = p.eval_complex(z) / d;
                if !step.re.is_finite() || !step.im.is_finite() {
                    break;
                }
                z -= step;
            }
            z
        })
        .collect()
}
