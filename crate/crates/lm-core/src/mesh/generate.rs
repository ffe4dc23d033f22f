//! Mesh generators for the two benchmark domains.

use super::{BoundaryMarker, Mesh};
use crate::{Error, Result};

/// Default ceiling on the number of generated cells.
pub const DEFAULT_CELL_CEILING: usize = 2_000_000;

/// Uniform triangulation of the unit square with `m` subdivisions along each
/// edge: (m+1)^2 vertices and 2 m^2 triangles. Every square is split along
/// the lower-left to upper-right diagonal and all boundary facets are walls.
pub fn unit_square_mesh(m: usize) -> Result<Mesh> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "unit_square_mesh requires m >= 1".into(),
        ));
    }
    let n = m + 1;
    let mut vertices = Vec::with_capacity(n * n);
    for j in 0..n {
        for i in 0..n {
            vertices.push([i as f64 / m as f64, j as f64 / m as f64]);
        }
    }
    let v = |i: usize, j: usize| j * n + i;
    let mut cells = Vec::with_capacity(2 * m * m);
    for j in 0..m {
        for i in 0..m {
            let (a, b, c, d) = (v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1));
            cells.push([a, b, c]);
            cells.push([a, c, d]);
        }
    }
    let mut boundary = Vec::with_capacity(4 * m);
    for i in 0..m {
        boundary.push(([v(i, 0), v(i + 1, 0)], BoundaryMarker::Wall));
        boundary.push(([v(i, m), v(i + 1, m)], BoundaryMarker::Wall));
    }
    for j in 0..m {
        boundary.push(([v(0, j), v(0, j + 1)], BoundaryMarker::Wall));
        boundary.push(([v(m, j), v(m, j + 1)], BoundaryMarker::Wall));
    }
    Mesh::new(vertices, cells, boundary)
}

/// Conforming triangulation of the step channel
/// ([0,40] x [0,10]) \ ([5,6] x [0,1]) with the default cell ceiling.
///
/// Markers: inflow on x = 0, outflow on x = 40, walls elsewhere (top,
/// bottom, and the three exposed step sides). The maximum cell diameter is
/// at most `2 * h_target`; spacing is refined near the step.
pub fn step_channel_mesh(h_target: f64) -> Result<Mesh> {
    step_channel_mesh_with_ceiling(h_target, DEFAULT_CELL_CEILING)
}

/// [`step_channel_mesh`] with an explicit ceiling on the cell count.
pub fn step_channel_mesh_with_ceiling(h_target: f64, max_cells: usize) -> Result<Mesh> {
    if !(h_target > 0.0 && h_target <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "step_channel_mesh requires 0 < h_target <= 1, got {h_target}"
        )));
    }
    // Background spacing sqrt(2)*h would give cell diameters of exactly
    // 2h; stay slightly below. The band around the step corners uses half
    // the background spacing.
    let coarse = 1.4 * h_target;
    let fine = 0.7 * h_target;

    let xs = graded_axis(&[(0.0, 4.0, coarse), (4.0, 5.0, fine), (5.0, 6.0, fine), (6.0, 8.0, fine), (8.0, 40.0, coarse)]);
    let ys = graded_axis(&[(0.0, 1.0, fine), (1.0, 2.0, fine), (2.0, 10.0, coarse)]);

    let est_cells = 2 * (xs.len() - 1) * (ys.len() - 1);
    if est_cells > max_cells {
        return Err(Error::ResourceLimit(format!(
            "step channel at h_target = {h_target} needs about {est_cells} cells, ceiling is {max_cells}"
        )));
    }

    let inside_step = |x: f64, y: f64| x > 5.0 + 1e-9 && x < 6.0 - 1e-9 && y < 1.0 - 1e-9;

    // Tensor grid minus the step interior.
    let mut vertex_id = vec![vec![usize::MAX; ys.len()]; xs.len()];
    let mut vertices = Vec::new();
    for (i, &x) in xs.iter().enumerate() {
        for (j, &y) in ys.iter().enumerate() {
            if inside_step(x, y) {
                continue;
            }
            vertex_id[i][j] = vertices.len();
            vertices.push([x, y]);
        }
    }

    let mut cells = Vec::new();
    for i in 0..xs.len() - 1 {
        for j in 0..ys.len() - 1 {
            let cx = 0.5 * (xs[i] + xs[i + 1]);
            let cy = 0.5 * (ys[j] + ys[j + 1]);
            if cx > 5.0 && cx < 6.0 && cy < 1.0 {
                continue; // quad lies in the step
            }
            let a = vertex_id[i][j];
            let b = vertex_id[i + 1][j];
            let c = vertex_id[i + 1][j + 1];
            let d = vertex_id[i][j + 1];
            debug_assert!(a != usize::MAX && b != usize::MAX && c != usize::MAX && d != usize::MAX);
            cells.push([a, b, c]);
            cells.push([a, c, d]);
        }
    }

    // Boundary facets: edges owned by exactly one cell, classified by
    // position.
    let mut counts = std::collections::HashMap::new();
    for cell in &cells {
        for (a, b) in [(cell[0], cell[1]), (cell[1], cell[2]), (cell[0], cell[2])] {
            let k = if a < b { (a, b) } else { (b, a) };
            *counts.entry(k).or_insert(0u32) += 1;
        }
    }
    let mut boundary: Vec<([usize; 2], BoundaryMarker)> = Vec::new();
    for (&(a, b), &count) in &counts {
        if count != 1 {
            continue;
        }
        let (pa, pb) = (vertices[a], vertices[b]);
        let marker = if pa[0].abs() < 1e-9 && pb[0].abs() < 1e-9 {
            BoundaryMarker::Inflow
        } else if (pa[0] - 40.0).abs() < 1e-9 && (pb[0] - 40.0).abs() < 1e-9 {
            BoundaryMarker::Outflow
        } else {
            BoundaryMarker::Wall
        };
        boundary.push(([a, b], marker));
    }
    boundary.sort_unstable();

    Mesh::new(vertices, cells, boundary)
}

/// Subdivides each `(start, end, target)` segment uniformly with spacing at
/// most `target`; returns the merged, strictly increasing point list.
fn graded_axis(segments: &[(f64, f64, f64)]) -> Vec<f64> {
    let mut points = vec![segments[0].0];
    for &(a, b, target) in segments {
        let n = ((b - a) / target).ceil().max(1.0) as usize;
        for k in 1..=n {
            points.push(a + (b - a) * k as f64 / n as f64);
        }
    }
    points
}
