//! Grid sampling of ζ, zero-curve extraction and output formats.

mod contour;
mod emit;
mod grid;

pub use contour::{curve_intersections, extract_zero_curves, CurveKind, Polyline};
pub use emit::{emit_csv, emit_svg, format_sig, parse_csv, SIG_DIGITS};
pub use grid::{grid_eval, GridField, Region, POLE_MASK};

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-10;

    #[test]
    fn format_examples() {
        assert_eq!(format_sig(14.134_725_141_734_693), "14.1347251417");
        assert_eq!(format_sig(PI_SQ_6), "1.64493406685");
        assert_eq!(format_sig(0.0), "0");
        assert_eq!(format_sig(-0.5), "-0.5");
        assert_eq!(format_sig(78_498.0), "78498");
        assert_eq!(format_sig(1.5e-9), "1.5e-09");
        assert_eq!(format_sig(123_456_789_012_345.0), "1.23456789012e+14");
        assert_eq!(format_sig(f64::NAN), "nan");
        assert_eq!(format_sig(9.999_999_999_999_9), "10");
    }

    const PI_SQ_6: f64 = std::f64::consts::PI * std::f64::consts::PI / 6.0;

    #[test]
    fn small_fields() {
        let f = grid_eval(Region::new(2.0, 3.0, 0.0, 0.0), 2, 2, TOL).unwrap();
        assert_eq!(f.re_values.len(), 4);
        assert!(f.re_values.iter().all(|&v| v > 1.0));
        assert!(f.im_values.iter().all(|&v| v.abs() < 1e-12));
        assert!((f.re_values[0] - PI_SQ_6).abs() < 1e-10);
        assert!(grid_eval(Region::new(2.0, 3.0, 0.0, 1.0), 1, 2, TOL).is_err());
    }

    #[test]
    fn pole_is_masked() {
        let f = grid_eval(Region::new(0.0, 2.0, -1.0, 1.0), 3, 3, TOL).unwrap();
        assert!(f.is_masked(1, 1));
        assert_eq!(f.index(1, 1), 4);
        assert_eq!(f.re_values.iter().filter(|v| v.is_nan()).count(), 1);
        // All four cells touch the masked centre.
        assert!(extract_zero_curves(&f).is_empty());
    }

    #[test]
    fn first_zero_crossing() {
        let f = grid_eval(Region::new(0.0, 1.0, 13.0, 15.0), 50, 50, TOL).unwrap();
        let curves = extract_zero_curves(&f);
        assert!(curves.iter().any(|c| c.kind == CurveKind::ReZero));
        assert!(curves.iter().any(|c| c.kind == CurveKind::ImZero));
        let hits = curve_intersections(&curves);
        assert!(
            hits.iter().any(|&(x, y)| (x - 0.5).hypot(y - 14.134_725) < f.cell_diagonal()),
            "{hits:?}"
        );
        let svg = String::from_utf8(emit_svg(&f, &curves)).unwrap();
        assert!(svg.matches("<path").count() >= 2);
        assert!(svg.contains("stroke-dasharray"));
    }

    #[test]
    fn positive_field_has_no_re_curves() {
        let f = grid_eval(Region::new(2.0, 4.0, -1.0, 1.0), 10, 10, TOL).unwrap();
        assert!(f.re_values.iter().all(|&v| v > 0.0));
        assert!(!extract_zero_curves(&f).iter().any(|c| c.kind == CurveKind::ReZero));
    }

    #[test]
    fn trivial_zero_at_minus_four() {
        let f = grid_eval(Region::new(-5.0, -3.0, -0.5, 0.5), 21, 11, TOL).unwrap();
        let curves = extract_zero_curves(&f);
        let near = curves
            .iter()
            .filter(|c| c.kind == CurveKind::ReZero)
            .flat_map(|c| c.points.iter())
            .any(|&(x, y)| (x + 4.0).hypot(y) < f.cell_diagonal());
        assert!(near);
    }

    #[test]
    fn polylines_are_cell_adjacent() {
        let f = grid_eval(Region::new(0.0, 1.0, 12.0, 16.0), 30, 60, TOL).unwrap();
        for c in extract_zero_curves(&f) {
            for w in c.points.windows(2) {
                assert!((w[0].0 - w[1].0).abs() <= f.cell_width() + 1e-12);
                assert!((w[0].1 - w[1].1).abs() <= f.cell_height() + 1e-12);
            }
        }
    }

    #[test]
    fn csv_shape() {
        let out = emit_csv(&["index", "t", "residual"], &[]).unwrap();
        assert_eq!(out, b"index,t,residual\n");
        let rows = vec![vec!["1".to_string(), format_sig(14.134_725), format_sig(1e-9)]];
        let out = emit_csv(&["index", "t", "residual"], &rows).unwrap();
        assert_eq!(String::from_utf8(out.clone()).unwrap(), "index,t,residual\n1,14.134725,1e-09\n");
        let (h, r) = parse_csv(&out).unwrap();
        assert_eq!(h, ["index", "t", "residual"]);
        assert_eq!(r, rows);
        assert!(matches!(
            emit_csv(&["a", "b"], &[vec!["1".into()]]),
            Err(crate::error::Error::Arity { expected: 2, found: 1, row: 1 })
        ));
    }
}
