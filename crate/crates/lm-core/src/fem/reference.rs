//! Lagrange bases on the reference triangle with vertices (0,0), (1,0), (0,1).
//!
//! Local node ordering puts vertex dofs first. For P2 the edge dofs follow
//! in the order (0,1), (1,2), (0,2), i.e. midpoints (1/2,0), (1/2,1/2),
//! (0,1/2).

use crate::{Error, Result};

/// Element families supported by the solver: scalar P1 (pressure), scalar
/// P2, and the two-component P2 velocity space with interleaved components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    ScalarP1,
    ScalarP2,
    VectorP2,
}

impl Family {
    /// Number of scalar basis functions per cell.
    pub fn basis_size(self) -> usize {
        match self {
            Family::ScalarP1 => 3,
            Family::ScalarP2 | Family::VectorP2 => 6,
        }
    }

    /// Number of degrees of freedom per cell.
    pub fn dofs_per_cell(self) -> usize {
        match self {
            Family::ScalarP1 => 3,
            Family::ScalarP2 => 6,
            Family::VectorP2 => 12,
        }
    }

    pub fn components(self) -> usize {
        match self {
            Family::VectorP2 => 2,
            _ => 1,
        }
    }
}

/// P1 basis values and reference gradients at a local point.
pub fn p1_basis(p: [f64; 2]) -> ([f64; 3], [[f64; 2]; 3]) {
    let (x, y) = (p[0], p[1]);
    let values = [1.0 - x - y, x, y];
    let grads = [[-1.0, -1.0], [1.0, 0.0], [0.0, 1.0]];
    (values, grads)
}

/// P2 basis values and reference gradients at a local point.
pub fn p2_basis(p: [f64; 2]) -> ([f64; 6], [[f64; 2]; 6]) {
    let (x, y) = (p[0], p[1]);
    let l = [1.0 - x - y, x, y];
    let dl = [[-1.0f64, -1.0], [1.0, 0.0], [0.0, 1.0]];

    let mut values = [0.0; 6];
    let mut grads = [[0.0; 2]; 6];
    for i in 0..3 {
        values[i] = l[i] * (2.0 * l[i] - 1.0);
        grads[i] = [(4.0 * l[i] - 1.0) * dl[i][0], (4.0 * l[i] - 1.0) * dl[i][1]];
    }
    // Edge functions 4 l_a l_b for edges (0,1), (1,2), (0,2).
    const EDGES: [(usize, usize); 3] = [(0, 1), (1, 2), (0, 2)];
    for (e, &(a, b)) in EDGES.iter().enumerate() {
        values[3 + e] = 4.0 * l[a] * l[b];
        grads[3 + e] = [
            4.0 * (l[a] * dl[b][0] + l[b] * dl[a][0]),
            4.0 * (l[a] * dl[b][1] + l[b] * dl[a][1]),
        ];
    }
    (values, grads)
}

/// Basis values and reference gradients of the scalar basis of `family` at
/// `local_point`, which must lie inside the closed reference triangle.
pub fn reference_basis(family: Family, local_point: [f64; 2]) -> Result<(Vec<f64>, Vec<[f64; 2]>)> {
    let (x, y) = (local_point[0], local_point[1]);
    let tol = 1e-12;
    if x < -tol || y < -tol || x + y > 1.0 + tol {
        return Err(Error::InvalidArgument(format!(
            "point ({x}, {y}) lies outside the reference triangle"
        )));
    }
    Ok(match family {
        Family::ScalarP1 => {
            let (v, g) = p1_basis(local_point);
            (v.to_vec(), g.to_vec())
        }
        Family::ScalarP2 | Family::VectorP2 => {
            let (v, g) = p2_basis(local_point);
            (v.to_vec(), g.to_vec())
        }
    })
}

/// Local nodes of the scalar basis: vertices, then edge midpoints for P2.
pub fn local_nodes(family: Family) -> Vec<[f64; 2]> {
    match family {
        Family::ScalarP1 => vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
        Family::ScalarP2 | Family::VectorP2 => vec![
            [0.0, 0.0],
            [1.0, 0.0],
            [0.0, 1.0],
            [0.5, 0.0],
            [0.5, 0.5],
            [0.0, 0.5],
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn p2_vertex_kronecker() {
        let (v, _) = p2_basis([0.0, 0.0]);
        assert_eq!(v, [1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let (v, _) = p2_basis([1.0, 0.0]);
        assert_eq!(v, [0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        let (v, _) = p2_basis([0.5, 0.5]);
        assert_eq!(v, [0.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn p1_centroid() {
        let (v, _) = p1_basis([1.0 / 3.0, 1.0 / 3.0]);
        for x in v {
            assert!((x - 1.0 / 3.0).abs() < 1e-15);
        }
    }

    #[test]
    fn lagrange_property_all_nodes() {
        for family in [Family::ScalarP1, Family::ScalarP2] {
            let nodes = local_nodes(family);
            for (i, &node) in nodes.iter().enumerate() {
                let (v, _) = reference_basis(family, node).unwrap();
                for (j, &val) in v.iter().enumerate() {
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert!((val - expect).abs() < 1e-14, "{family:?} node {i} basis {j}");
                }
            }
        }
    }

    #[test]
    fn partition_of_unity_random_points() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let x: f64 = rng.gen_range(0.0..1.0);
            let y: f64 = rng.gen_range(0.0..(1.0 - x));
            for family in [Family::ScalarP1, Family::ScalarP2] {
                let (v, g) = reference_basis(family, [x, y]).unwrap();
                let sum: f64 = v.iter().sum();
                let gx: f64 = g.iter().map(|d| d[0]).sum();
                let gy: f64 = g.iter().map(|d| d[1]).sum();
                assert!((sum - 1.0).abs() < 1e-13);
                assert!(gx.abs() < 1e-13 && gy.abs() < 1e-13);
            }
        }
    }

    #[test]
    fn outside_point_rejected() {
        assert!(reference_basis(Family::ScalarP1, [0.7, 0.7]).is_err());
        assert!(reference_basis(Family::ScalarP2, [-0.1, 0.2]).is_err());
    }
}
