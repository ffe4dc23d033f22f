//! Quadrature on the reference triangle.
//!
//! Rules are conical products of a Gauss-Jacobi rule (weight 1-x) in the
//! first coordinate with a Gauss-Legendre rule in the second: an n-by-n
//! product is exact for total degree 2n-1 and has strictly positive weights
//! at every order, which the energy-stability argument of the time stepper
//! relies on.

use crate::{Error, Result};

/// Quadrature points (local coordinates on the reference triangle) and
/// weights summing to the reference area 1/2.
#[derive(Clone, Debug)]
pub struct QuadratureRule {
    pub points: Vec<[f64; 2]>,
    pub weights: Vec<f64>,
    /// Total polynomial degree integrated exactly.
    pub degree: usize,
}

/// Gauss-Legendre nodes/weights on [0,1] for n = 1..6.
const GL: [&[(f64, f64)]; 6] = [
    &[(0.5, 1.0)],
    &[
        (0.211324865405187118, 0.5),
        (0.788675134594812882, 0.5),
    ],
    &[
        (0.112701665379258311, 0.277777777777777778),
        (0.5, 0.444444444444444444),
        (0.887298334620741689, 0.277777777777777778),
    ],
    &[
        (0.0694318442029737124, 0.173927422568726929),
        (0.330009478207571868, 0.326072577431273071),
        (0.669990521792428132, 0.326072577431273071),
        (0.930568155797026288, 0.173927422568726929),
    ],
    &[
        (0.0469100770306680036, 0.118463442528094544),
        (0.230765344947158454, 0.239314335249683234),
        (0.5, 0.284444444444444444),
        (0.769234655052841546, 0.239314335249683234),
        (0.953089922969331996, 0.118463442528094544),
    ],
    &[
        (0.0337652428984239861, 0.0856622461895851725),
        (0.169395306766867743, 0.180380786524069304),
        (0.380690406958401546, 0.233956967286345524),
        (0.619309593041598454, 0.233956967286345524),
        (0.830604693233132257, 0.180380786524069304),
        (0.966234757101576014, 0.0856622461895851725),
    ],
];

/// Gauss-Jacobi nodes/weights for the weight (1-x) on [0,1], n = 1..6.
const GJ: [&[(f64, f64)]; 6] = [
    &[(0.333333333333333333, 0.5)],
    &[
        (0.155051025721682190, 0.318041381743977169),
        (0.644948974278317810, 0.181958618256022831),
    ],
    &[
        (0.0885879595127039474, 0.200931913738959631),
        (0.409466864440734711, 0.229241106359586247),
        (0.787659461760847056, 0.0698269799014541225),
    ],
    &[
        (0.0571041961145176822, 0.135506913431488116),
        (0.276843013638123828, 0.203464568010271361),
        (0.583590432368916820, 0.129847547608232441),
        (0.860240135656219448, 0.0311809709500080822),
    ],
    &[
        (0.0398098570514687423, 0.0967815902266516793),
        (0.198013417873608173, 0.167174638094369565),
        (0.437974810247386144, 0.146386987084669809),
        (0.695464273353636095, 0.0739088700726166704),
        (0.901464914201173574, 0.0157479145216922762),
    ],
    &[
        (0.0293164271597848920, 0.0723103307255086837),
        (0.148078599668484292, 0.135542497231518617),
        (0.336984690281154299, 0.140792553788198928),
        (0.558671518771550132, 0.0986611508906552641),
        (0.769233862030054501, 0.0439551655505089755),
        (0.926945671319741115, 0.00873830181360953176),
    ],
];

/// Builds a rule exact for the requested total polynomial degree
/// (1 <= degree <= 10).
pub fn quadrature_rule(degree: usize) -> Result<QuadratureRule> {
    if !(1..=10).contains(&degree) {
        return Err(Error::InvalidArgument(format!(
            "quadrature degree {degree} unsupported (expected 1..=10)"
        )));
    }
    let n = degree / 2 + 1; // smallest n with 2n-1 >= degree
    let gj = GJ[n - 1];
    let gl = GL[n - 1];
    let mut points = Vec::with_capacity(n * n);
    let mut weights = Vec::with_capacity(n * n);
    for &(xi, wj) in gj {
        for &(eta, wl) in gl {
            // Map the unit square onto the triangle: y spans [0, 1-x].
            points.push([xi, eta * (1.0 - xi)]);
            weights.push(wj * wl);
        }
    }
    Ok(QuadratureRule {
        points,
        weights,
        degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: over the reference triangle,
    /// integral of x^a y^b equals a! b! / (a+b+2)!.
    fn monomial_integral(a: u32, b: u32) -> f64 {
        fn fact(n: u32) -> f64 {
            (1..=n).map(|k| k as f64).product()
        }
        fact(a) * fact(b) / fact(a + b + 2)
    }

    #[test]
    fn degree_one_is_centroid_rule() {
        let rule = quadrature_rule(1).unwrap();
        assert_eq!(rule.points.len(), 1);
        assert!((rule.points[0][0] - 1.0 / 3.0).abs() < 1e-15);
        assert!((rule.points[0][1] - 1.0 / 3.0).abs() < 1e-15);
        assert!((rule.weights[0] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn weights_positive_and_sum_to_half() {
        for degree in 1..=10 {
            let rule = quadrature_rule(degree).unwrap();
            assert!(rule.weights.iter().all(|&w| w > 0.0));
            let sum: f64 = rule.weights.iter().sum();
            assert!((sum - 0.5).abs() < 1e-14, "degree {degree}: sum {sum}");
        }
    }

    #[test]
    fn exactness_against_factorial_oracle() {
        for degree in 1..=10u32 {
            let rule = quadrature_rule(degree as usize).unwrap();
            for a in 0..=degree {
                for b in 0..=(degree - a) {
                    let approx: f64 = rule
                        .points
                        .iter()
                        .zip(&rule.weights)
                        .map(|(p, w)| w * p[0].powi(a as i32) * p[1].powi(b as i32))
                        .sum();
                    let exact = monomial_integral(a, b);
                    assert!(
                        ((approx - exact) / exact).abs() <= 1e-13,
                        "degree {degree}, x^{a} y^{b}: {approx} vs {exact}"
                    );
                }
            }
        }
    }

    #[test]
    fn degree_six_example_x4y2() {
        // 4! 2! / 8! = 1/840, i.e. 1/420 of the reference area 1/2.
        let rule = quadrature_rule(6).unwrap();
        let approx: f64 = rule
            .points
            .iter()
            .zip(&rule.weights)
            .map(|(p, w)| w * p[0].powi(4) * p[1].powi(2))
            .sum();
        let exact = monomial_integral(4, 2);
        assert!((exact - 1.0 / 840.0).abs() < 1e-18);
        assert!(((approx - exact) / exact).abs() <= 1e-13);
    }

    #[test]
    fn unsupported_degrees_rejected() {
        assert!(quadrature_rule(0).is_err());
        assert!(quadrature_rule(11).is_err());
    }
}
