//! Marching squares on one component of a [`GridField`].

use std::collections::BTreeMap;

use super::grid::GridField;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveKind {
    ReZero,
    ImZero,
}

impl CurveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CurveKind::ReZero => "re_zero",
            CurveKind::ImZero => "im_zero",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    pub kind: CurveKind,
    pub points: Vec<(f64, f64)>,
}

/// A grid edge: `(i, j, horizontal)` joins `(i, j)` to `(i+1, j)` when
/// horizontal, to `(i, j+1)` otherwise.
type Edge = (usize, usize, bool);

fn crossing(field: &GridField, values: &[f64], e: Edge) -> (f64, f64) {
    let (i, j, horizontal) = e;
    let (i2, j2) = if horizontal { (i + 1, j) } else { (i, j + 1) };
    let a = values[field.index(i, j)];
    let b = values[field.index(i2, j2)];
    let w = a / (a - b);
    let (x1, y1) = (field.x(i), field.y(j));
    let (x2, y2) = (field.x(i2), field.y(j2));
    (x1 + w * (x2 - x1), y1 + w * (y2 - y1))
}

/// Segments of the zero set of `values`, as pairs of crossed edges.
fn segments(field: &GridField, values: &[f64]) -> Vec<(Edge, Edge)> {
    let mut out = Vec::new();
    for j in 0..field.ny - 1 {
        for i in 0..field.nx - 1 {
            let corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)];
            if corners.iter().any(|&(a, b)| field.is_masked(a, b)) {
                continue;
            }
            let v: Vec<f64> = corners.iter().map(|&(a, b)| values[field.index(a, b)]).collect();
            let pos: Vec<bool> = v.iter().map(|&x| x > 0.0).collect();
            // Edges in counter-clockwise order: bottom, right, top, left.
            let edges = [(i, j, true), (i + 1, j, false), (i, j + 1, true), (i, j, false)];
            let crossed: Vec<Edge> = (0..4)
                .filter(|&k| pos[k] != pos[(k + 1) % 4])
                .map(|k| edges[k])
                .collect();
            match crossed.len() {
                2 => out.push((crossed[0], crossed[1])),
                4 => {
                    // Saddle: the cell centre decides which corners connect.
                    let centre_pos = v.iter().sum::<f64>() / 4.0 > 0.0;
                    if centre_pos == pos[0] {
                        out.push((edges[0], edges[1]));
                        out.push((edges[2], edges[3]));
                    } else {
                        out.push((edges[3], edges[0]));
                        out.push((edges[1], edges[2]));
                    }
                }
                _ => {}
            }
        }
    }
    out
}

/// Chains segments that share an edge into polylines; open chains are
/// walked from an end, closed loops from their smallest edge.
fn chain(segs: &[(Edge, Edge)]) -> Vec<Vec<Edge>> {
    let mut incident: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for (k, &(a, b)) in segs.iter().enumerate() {
        incident.entry(a).or_default().push(k);
        incident.entry(b).or_default().push(k);
    }
    let mut used = vec![false; segs.len()];
    let mut chains = Vec::new();
    let ends: Vec<Edge> = incident.iter().filter(|(_, v)| v.len() == 1).map(|(&e, _)| e).collect();
    let starts = ends.into_iter().chain(incident.keys().copied().collect::<Vec<_>>());
    for start in starts {
        let mut current = start;
        let mut path = vec![current];
        while let Some(&k) = incident[&current].iter().find(|&&k| !used[k]) {
            used[k] = true;
            let (a, b) = segs[k];
            current = if a == current { b } else { a };
            path.push(current);
        }
        if path.len() > 1 {
            chains.push(path);
        }
    }
    chains
}

fn curves_for(field: &GridField, values: &[f64], kind: CurveKind) -> Vec<Polyline> {
    chain(&segments(field, values))
        .into_iter()
        .map(|edges| Polyline {
            kind,
            points: edges.into_iter().map(|e| crossing(field, values, e)).collect(),
        })
        .collect()
}

/// Zero curves of `re ζ` and of `im ζ`, re curves first.
pub fn extract_zero_curves(field: &GridField) -> Vec<Polyline> {
    let mut out = curves_for(field, &field.re_values, CurveKind::ReZero);
    out.extend(curves_for(field, &field.im_values, CurveKind::ImZero));
    out
}

fn segment_intersection(p1: (f64, f64), p2: (f64, f64), q1: (f64, f64), q2: (f64, f64)) -> Option<(f64, f64)> {
    let r = (p2.0 - p1.0, p2.1 - p1.1);
    let s = (q2.0 - q1.0, q2.1 - q1.1);
    let denom = r.0 * s.1 - r.1 * s.0;
    if denom == 0.0 {
        return None;
    }
    let d = (q1.0 - p1.0, q1.1 - p1.1);
    let t = (d.0 * s.1 - d.1 * s.0) / denom;
    let u = (d.0 * r.1 - d.1 * r.0) / denom;
    if (0.0..=1.0).contains(&t) && (0.0..=1.0).contains(&u) {
        Some((p1.0 + t * r.0, p1.1 + t * r.1))
    } else {
        None
    }
}

/// Points where a re-zero polyline crosses an im-zero polyline; these
/// approximate zeros of ζ.
pub fn curve_intersections(curves: &[Polyline]) -> Vec<(f64, f64)> {
    let of = |kind| curves.iter().filter(move |c| c.kind == kind);
    let mut out = Vec::new();
    for a in of(CurveKind::ReZero) {
        for b in of(CurveKind::ImZero) {
            for p in a.points.windows(2) {
                for q in b.points.windows(2) {
                    if let Some(x) = segment_intersection(p[0], p[1], q[0], q[1]) {
                        out.push(x);
                    }
                }
            }
        }
    }
    out
}
