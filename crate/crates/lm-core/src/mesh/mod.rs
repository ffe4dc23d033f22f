//! Conforming triangular meshes of polygonal 2D domains with marked
//! boundary facets.
//!
//! A [`Mesh`] is immutable after construction and validated on every
//! construction path (generators and file loading alike): positive cell
//! orientation, the Euler relation for simply connected domains, facet/cell
//! incidence, finite coordinates and absence of duplicate vertices.

mod generate;
mod io;

pub use generate::{step_channel_mesh, step_channel_mesh_with_ceiling, unit_square_mesh};
pub use io::{load_mesh, save_mesh};

use crate::{Error, Result};
use std::collections::HashMap;

/// Two vertices closer than this (in both coordinates) are duplicates.
pub const DUPLICATE_VERTEX_TOL: f64 = 1e-12;

/// Classification of a boundary facet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundaryMarker {
    Wall,
    Inflow,
    Outflow,
}

impl BoundaryMarker {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundaryMarker::Wall => "wall",
            BoundaryMarker::Inflow => "inflow",
            BoundaryMarker::Outflow => "outflow",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "wall" => Some(BoundaryMarker::Wall),
            "inflow" => Some(BoundaryMarker::Inflow),
            "outflow" => Some(BoundaryMarker::Outflow),
            _ => None,
        }
    }
}

/// A conforming triangulation with marked boundary facets.
#[derive(Debug)]
pub struct Mesh {
    vertices: Vec<[f64; 2]>,
    cells: Vec<[usize; 3]>,
    boundary_facets: Vec<([usize; 2], BoundaryMarker)>,
    /// Unique edges as (lo, hi) vertex pairs, sorted lexicographically.
    edges: Vec<[usize; 2]>,
    /// Per cell, global edge index of the local edges (0,1), (1,2), (0,2).
    cell_edges: Vec<[usize; 3]>,
}

impl Mesh {
    /// Builds a mesh and checks every invariant. `boundary_facets` must
    /// list each boundary edge exactly once with its marker.
    pub fn new(
        vertices: Vec<[f64; 2]>,
        cells: Vec<[usize; 3]>,
        boundary_facets: Vec<([usize; 2], BoundaryMarker)>,
    ) -> Result<Self> {
        let (edges, cell_edges) =
            validate(&vertices, &cells, &boundary_facets)?;
        Ok(Mesh {
            vertices,
            cells,
            boundary_facets,
            edges,
            cell_edges,
        })
    }

    pub fn vertices(&self) -> &[[f64; 2]] {
        &self.vertices
    }

    pub fn cells(&self) -> &[[usize; 3]] {
        &self.cells
    }

    pub fn boundary_facets(&self) -> &[([usize; 2], BoundaryMarker)] {
        &self.boundary_facets
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn cell_edges(&self, cell: usize) -> [usize; 3] {
        self.cell_edges[cell]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Coordinates of the three vertices of `cell`.
    pub fn cell_vertices(&self, cell: usize) -> [[f64; 2]; 3] {
        let [i, j, k] = self.cells[cell];
        [self.vertices[i], self.vertices[j], self.vertices[k]]
    }

    /// Signed area of `cell` (positive for all valid meshes).
    pub fn cell_signed_area(&self, cell: usize) -> f64 {
        let [a, b, c] = self.cell_vertices(cell);
        signed_area(a, b, c)
    }

    /// Sum of all cell areas.
    pub fn total_area(&self) -> f64 {
        (0..self.cell_count())
            .map(|c| self.cell_signed_area(c))
            .sum()
    }

    /// Diameter of `cell` (its longest edge).
    pub fn cell_diameter(&self, cell: usize) -> f64 {
        let [a, b, c] = self.cell_vertices(cell);
        dist(a, b).max(dist(b, c)).max(dist(a, c))
    }

    pub fn min_cell_diameter(&self) -> f64 {
        (0..self.cell_count())
            .map(|c| self.cell_diameter(c))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn max_cell_diameter(&self) -> f64 {
        (0..self.cell_count())
            .map(|c| self.cell_diameter(c))
            .fold(0.0, f64::max)
    }

    /// True if any boundary facet carries `marker`.
    pub fn has_marker(&self, marker: BoundaryMarker) -> bool {
        self.boundary_facets.iter().any(|&(_, m)| m == marker)
    }
}

fn signed_area(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]))
}

fn dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Checks all mesh invariants; returns the derived edge list and the
/// per-cell edge indices.
fn validate(
    vertices: &[[f64; 2]],
    cells: &[[usize; 3]],
    boundary_facets: &[([usize; 2], BoundaryMarker)],
) -> Result<(Vec<[usize; 2]>, Vec<[usize; 3]>)> {
    let nv = vertices.len();
    if nv == 0 || cells.is_empty() {
        return Err(Error::MeshValidation("empty mesh".into()));
    }
    for (i, v) in vertices.iter().enumerate() {
        if !v[0].is_finite() || !v[1].is_finite() {
            return Err(Error::MeshValidation(format!(
                "vertex {i} has non-finite coordinates"
            )));
        }
    }

    // Duplicate detection: sort by coordinates, compare neighbours within
    // the tolerance window.
    let mut order: Vec<usize> = (0..nv).collect();
    order.sort_by(|&a, &b| {
        vertices[a]
            .partial_cmp(&vertices[b])
            .expect("finite coordinates")
    });
    for w in order.windows(2) {
        let (a, b) = (vertices[w[0]], vertices[w[1]]);
        if (a[0] - b[0]).abs() <= DUPLICATE_VERTEX_TOL
            && (a[1] - b[1]).abs() <= DUPLICATE_VERTEX_TOL
        {
            return Err(Error::MeshValidation(format!(
                "duplicate vertices {} and {}",
                w[0], w[1]
            )));
        }
    }

    for (c, cell) in cells.iter().enumerate() {
        for &v in cell {
            if v >= nv {
                return Err(Error::MeshValidation(format!(
                    "cell {c} references vertex {v} out of range"
                )));
            }
        }
        if cell[0] == cell[1] || cell[1] == cell[2] || cell[0] == cell[2] {
            return Err(Error::MeshValidation(format!(
                "cell {c} has repeated vertices"
            )));
        }
        let area = signed_area(
            vertices[cell[0]],
            vertices[cell[1]],
            vertices[cell[2]],
        );
        if area <= 0.0 {
            return Err(Error::MeshValidation(format!(
                "cell {c} is not positively oriented (signed area {area})"
            )));
        }
    }

    // Edge incidence counts.
    let mut counts: HashMap<(usize, usize), u32> = HashMap::new();
    for cell in cells {
        for (a, b) in [(cell[0], cell[1]), (cell[1], cell[2]), (cell[0], cell[2])] {
            let entry = counts.entry(key(a, b)).or_insert(0);
            *entry += 1;
            if *entry > 2 {
                return Err(Error::MeshValidation(format!(
                    "edge ({a},{b}) shared by more than two cells"
                )));
            }
        }
    }

    let mut edges: Vec<[usize; 2]> = counts.keys().map(|&(a, b)| [a, b]).collect();
    edges.sort_unstable();
    let edge_index: HashMap<(usize, usize), usize> = edges
        .iter()
        .enumerate()
        .map(|(i, e)| ((e[0], e[1]), i))
        .collect();

    // Boundary facets must coincide with the edges owned by exactly one cell.
    let mut seen: HashMap<(usize, usize), BoundaryMarker> = HashMap::new();
    for &(pair, marker) in boundary_facets {
        let k = key(pair[0], pair[1]);
        match counts.get(&k) {
            None => {
                return Err(Error::MeshValidation(format!(
                    "boundary facet ({},{}) is not a mesh edge",
                    pair[0], pair[1]
                )))
            }
            Some(2) => {
                return Err(Error::MeshValidation(format!(
                    "boundary facet ({},{}) is interior (two incident cells)",
                    pair[0], pair[1]
                )))
            }
            Some(_) => {}
        }
        if seen.insert(k, marker).is_some() {
            return Err(Error::MeshValidation(format!(
                "boundary facet ({},{}) listed twice",
                pair[0], pair[1]
            )));
        }
    }
    for (&k, &count) in &counts {
        if count == 1 && !seen.contains_key(&k) {
            return Err(Error::MeshValidation(format!(
                "edge ({},{}) lies on the boundary but has no marker",
                k.0, k.1
            )));
        }
    }

    // Euler relation V - E + F = 1 for a simply connected planar domain.
    let euler = nv as i64 - edges.len() as i64 + cells.len() as i64;
    if euler != 1 {
        return Err(Error::MeshValidation(format!(
            "Euler relation violated: V - E + F = {euler}, expected 1"
        )));
    }

    let cell_edges = cells
        .iter()
        .map(|cell| {
            [
                edge_index[&key(cell[0], cell[1])],
                edge_index[&key(cell[1], cell[2])],
                edge_index[&key(cell[0], cell[2])],
            ]
        })
        .collect();

    Ok((edges, cell_edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference_triangle() -> Mesh {
        Mesh::new(
            vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
            vec![[0, 1, 2]],
            vec![
                ([0, 1], BoundaryMarker::Wall),
                ([1, 2], BoundaryMarker::Wall),
                ([0, 2], BoundaryMarker::Wall),
            ],
        )
        .unwrap()
    }

    #[test]
    fn single_triangle_is_valid() {
        let mesh = reference_triangle();
        assert_eq!(mesh.vertex_count(), 3);
        assert_eq!(mesh.edge_count(), 3);
        assert!((mesh.total_area() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn negative_orientation_rejected() {
        let err = Mesh::new(
            vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
            vec![[0, 2, 1]],
            vec![
                ([0, 1], BoundaryMarker::Wall),
                ([1, 2], BoundaryMarker::Wall),
                ([0, 2], BoundaryMarker::Wall),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::MeshValidation(_)));
    }

    #[test]
    fn duplicate_vertices_rejected() {
        let err = Mesh::new(
            vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1e-13, 0.0]],
            vec![[0, 1, 2]],
            vec![],
        )
        .unwrap_err();
        assert!(matches!(err, Error::MeshValidation(_)));
    }

    #[test]
    fn missing_boundary_marker_rejected() {
        let err = Mesh::new(
            vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
            vec![[0, 1, 2]],
            vec![([0, 1], BoundaryMarker::Wall), ([1, 2], BoundaryMarker::Wall)],
        )
        .unwrap_err();
        assert!(matches!(err, Error::MeshValidation(_)));
    }

    #[test]
    fn out_of_range_cell_rejected() {
        let err = Mesh::new(
            vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
            vec![[0, 1, 7]],
            vec![],
        )
        .unwrap_err();
        assert!(matches!(err, Error::MeshValidation(_)));
    }
}
