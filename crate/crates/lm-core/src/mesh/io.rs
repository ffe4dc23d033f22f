//! Plain text mesh format.
//!
//! ```text
//! lmmesh 1
//! vertices N
//! <x> <y>            (N lines, 17 significant digits)
//! cells M
//! <i> <j> <k>        (M lines)
//! boundary B
//! <i> <j> <marker>   (B lines, marker in {wall, inflow, outflow})
//! ```

use super::{BoundaryMarker, Mesh};
use crate::{Error, Result};
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

pub fn save_mesh(mesh: &Mesh, path: impl AsRef<Path>) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    writeln!(out, "lmmesh 1")?;
    writeln!(out, "vertices {}", mesh.vertex_count())?;
    for v in mesh.vertices() {
        writeln!(out, "{:.16e} {:.16e}", v[0], v[1])?;
    }
    writeln!(out, "cells {}", mesh.cell_count())?;
    for c in mesh.cells() {
        writeln!(out, "{} {} {}", c[0], c[1], c[2])?;
    }
    writeln!(out, "boundary {}", mesh.boundary_facets().len())?;
    for &(pair, marker) in mesh.boundary_facets() {
        writeln!(out, "{} {} {}", pair[0], pair[1], marker.as_str())?;
    }
    out.flush()?;
    Ok(())
}

pub fn load_mesh(path: impl AsRef<Path>) -> Result<Mesh> {
    let reader = BufReader::new(File::open(path)?);
    let mut lines = reader.lines().enumerate();

    let mut next_line = |what: &str| -> Result<(usize, String)> {
        loop {
            match lines.next() {
                Some((idx, line)) => {
                    let line = line?;
                    let trimmed = line.trim();
                    if trimmed.is_empty() || trimmed.starts_with('#') {
                        continue;
                    }
                    return Ok((idx + 1, trimmed.to_string()));
                }
                None => {
                    return Err(Error::MeshParse {
                        line: 0,
                        msg: format!("unexpected end of file, expected {what}"),
                    })
                }
            }
        }
    };

    let (lno, header) = next_line("header")?;
    if header != "lmmesh 1" {
        return Err(Error::MeshParse {
            line: lno,
            msg: format!("expected 'lmmesh 1' header, got '{header}'"),
        });
    }

    let parse_count = |line: &str, lno: usize, keyword: &str| -> Result<usize> {
        let mut it = line.split_whitespace();
        match (it.next(), it.next(), it.next()) {
            (Some(k), Some(n), None) if k == keyword => {
                n.parse::<usize>().map_err(|_| Error::MeshParse {
                    line: lno,
                    msg: format!("invalid count '{n}'"),
                })
            }
            _ => Err(Error::MeshParse {
                line: lno,
                msg: format!("expected '{keyword} <count>', got '{line}'"),
            }),
        }
    };

    let (lno, line) = next_line("vertices section")?;
    let nv = parse_count(&line, lno, "vertices")?;
    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let (lno, line) = next_line("vertex coordinates")?;
        let mut it = line.split_whitespace();
        let coords: Option<(f64, f64)> = (|| {
            let x = it.next()?.parse().ok()?;
            let y = it.next()?.parse().ok()?;
            if it.next().is_some() {
                return None;
            }
            Some((x, y))
        })();
        match coords {
            Some((x, y)) => vertices.push([x, y]),
            None => {
                return Err(Error::MeshParse {
                    line: lno,
                    msg: format!("expected 'x y', got '{line}'"),
                })
            }
        }
    }

    let (lno, line) = next_line("cells section")?;
    let nc = parse_count(&line, lno, "cells")?;
    let mut cells = Vec::with_capacity(nc);
    for _ in 0..nc {
        let (lno, line) = next_line("cell indices")?;
        let idx: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse().map_err(|_| Error::MeshParse {
                    line: lno,
                    msg: format!("invalid index '{t}'"),
                })
            })
            .collect::<Result<_>>()?;
        if idx.len() != 3 {
            return Err(Error::MeshParse {
                line: lno,
                msg: format!("expected 'i j k', got '{line}'"),
            });
        }
        for &v in &idx {
            if v >= nv {
                return Err(Error::MeshParse {
                    line: lno,
                    msg: format!("vertex index {v} out of range (mesh has {nv} vertices)"),
                });
            }
        }
        cells.push([idx[0], idx[1], idx[2]]);
    }

    let (lno, line) = next_line("boundary section")?;
    let nb = parse_count(&line, lno, "boundary")?;
    let mut boundary = Vec::with_capacity(nb);
    for _ in 0..nb {
        let (lno, line) = next_line("boundary facet")?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(Error::MeshParse {
                line: lno,
                msg: format!("expected 'i j marker', got '{line}'"),
            });
        }
        let parse_idx = |t: &str| -> Result<usize> {
            let v: usize = t.parse().map_err(|_| Error::MeshParse {
                line: lno,
                msg: format!("invalid index '{t}'"),
            })?;
            if v >= nv {
                return Err(Error::MeshParse {
                    line: lno,
                    msg: format!("vertex index {v} out of range (mesh has {nv} vertices)"),
                });
            }
            Ok(v)
        };
        let a = parse_idx(toks[0])?;
        let b = parse_idx(toks[1])?;
        let marker = BoundaryMarker::parse(toks[2]).ok_or_else(|| Error::MeshParse {
            line: lno,
            msg: format!("unknown marker '{}'", toks[2]),
        })?;
        boundary.push(([a, b], marker));
    }

    Mesh::new(vertices, cells, boundary)
}
