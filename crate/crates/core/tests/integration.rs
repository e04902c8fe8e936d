use std::io::Write;

use zetawb::plot::{emit_csv, extract_zero_curves, format_sig, grid_eval, parse_csv, CurveKind, Region};
use zetawb::primes::{li, primes_up_to, sieve_pi, DEFAULT_ALPHA};
use zetawb::zeros::{compare_with_reference, ingest_zero_table, scan_zeros, xi_line_scaled, ScanConfig};
use zetawb::Error;

const REFERENCE: &str = "\
# first ten ordinates
14.134725141734693
21.022039638771555
25.010857580145688
30.424876125859513
32.935061587739189

37.586178158825671
40.918719012147495
43.327073280914999
48.005150881167159
49.773832477672302
";

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

#[test]
fn sieve_matches_trial_division() {
    let trial: Vec<u64> = (0..=10_000).filter(|&n| is_prime(n)).collect();
    assert_eq!(primes_up_to(1e4).unwrap(), trial);
    for x in [2.0, 2.9, 100.0, 7919.0, 7918.5, 10_000.0] {
        let expected = trial.iter().filter(|&&p| p as f64 <= x).count() as u64;
        assert_eq!(sieve_pi(x).unwrap(), expected, "π({x})");
    }
}

#[test]
fn sieve_across_segment_boundaries() {
    // 999983 is the largest prime below 10⁶, 1000003 the smallest above.
    assert_eq!(sieve_pi(999_982.0).unwrap() + 1, sieve_pi(999_983.0).unwrap());
    assert_eq!(sieve_pi(1_000_002.0).unwrap(), 78_498);
    assert_eq!(sieve_pi(1_000_003.0).unwrap(), 78_499);
}

#[test]
fn sieve_range_errors() {
    assert!(matches!(sieve_pi(-1.0), Err(Error::Range(_))));
    assert!(matches!(sieve_pi(2e8), Err(Error::Range(_))));
    assert_eq!(sieve_pi(1.5).unwrap(), 0);
}

#[test]
fn li_reference_values() {
    assert!((li(2.0, DEFAULT_ALPHA).unwrap() - 1.045_163_780_117_493).abs() < 1e-10);
    assert!((li(1e6, DEFAULT_ALPHA).unwrap() - 78_627.549_159_462_18).abs() < 1e-6);
    assert!((li(1.0001, DEFAULT_ALPHA).unwrap() + 8.633_074_707_491_413).abs() < 1e-9);
    assert!(matches!(li(1.0, DEFAULT_ALPHA), Err(Error::Domain(_))));
}

#[test]
fn zero_table_ingest_and_cross_check() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(REFERENCE.as_bytes()).unwrap();
    let table = ingest_zero_table(file.path()).unwrap();
    assert_eq!(table.len(), 10);

    let records = scan_zeros(&ScanConfig::new(50.0)).unwrap();
    let cmp = compare_with_reference(&records, &table, 50.0);
    assert_eq!(cmp.pairs.len(), 10);
    assert!(cmp.max_diff < 1e-6, "max diff {}", cmp.max_diff);
}

#[test]
fn zero_table_rejects_disorder() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(b"14.13\n21.02\n20.0\n").unwrap();
    match ingest_zero_table(file.path()) {
        Err(Error::Monotonicity { line, .. }) => assert_eq!(line, 3),
        other => panic!("expected monotonicity error, got {other:?}"),
    }
}

#[test]
fn scan_is_deterministic() {
    let config = ScanConfig::new(60.0);
    let a = scan_zeros(&config).unwrap();
    let b = scan_zeros(&config).unwrap();
    assert_eq!(a, b);
    assert!(a.windows(2).all(|w| w[0].t < w[1].t));
    assert!(a.iter().enumerate().all(|(k, r)| r.index == k + 1));
}

#[test]
fn brackets_contain_a_sign_change() {
    for r in scan_zeros(&ScanConfig::new(80.0)).unwrap() {
        let (lo, hi) = r.bracket;
        assert!(lo <= r.t && r.t <= hi);
        assert!(xi_line_scaled(lo).unwrap() * xi_line_scaled(hi).unwrap() <= 0.0, "bracket {lo}..{hi}");
    }
}

#[test]
fn halving_the_step_keeps_counts() {
    let coarse = scan_zeros(&ScanConfig::new(100.0)).unwrap();
    let fine = scan_zeros(&ScanConfig::new(100.0).with_step(0.05)).unwrap();
    assert_eq!(coarse.len(), fine.len());
    for (a, b) in coarse.iter().zip(&fine) {
        assert!((a.t - b.t).abs() < 1e-7);
    }
}

#[test]
fn csv_round_trip() {
    let rows = vec![
        vec!["1".to_string(), format_sig(14.134725141734693), format_sig(1.5e-9)],
        vec!["2".to_string(), format_sig(-0.0), format_sig(f64::NAN)],
    ];
    let bytes = emit_csv(&["index", "t", "residual"], &rows).unwrap();
    let (header, parsed) = parse_csv(&bytes).unwrap();
    assert_eq!(header, ["index", "t", "residual"]);
    assert_eq!(parsed, rows);
    assert!(!bytes.contains(&b'\r'));
}

#[test]
fn csv_rejects_ragged_rows() {
    let rows = vec![vec!["1".to_string()], vec!["1".to_string(), "2".to_string()]];
    assert!(matches!(emit_csv(&["a", "b"], &rows), Err(Error::Arity { .. })));
}

#[test]
fn polyline_vertices_interpolate_to_zero() {
    let field = grid_eval(Region::new(-1.0, 2.0, 10.0, 26.0), 31, 81, 1e-10).unwrap();
    let curves = extract_zero_curves(&field);
    assert!(curves.iter().any(|c| c.kind == CurveKind::ReZero));
    assert!(curves.iter().any(|c| c.kind == CurveKind::ImZero));
    let (w, h) = (field.cell_width(), field.cell_height());
    for c in &curves {
        let values = match c.kind {
            CurveKind::ReZero => &field.re_values,
            CurveKind::ImZero => &field.im_values,
        };
        for &(x, y) in &c.points {
            let fi = (x - field.x_min) / w;
            let fj = (y - field.y_min) / h;
            // Every vertex sits on a grid edge; interpolate along it.
            let (a, b, frac) = if (fi - fi.round()).abs() < 1e-9 {
                let i = fi.round() as usize;
                let j = (fj.floor() as usize).min(field.ny - 2);
                (field.index(i, j), field.index(i, j + 1), fj - j as f64)
            } else {
                assert!((fj - fj.round()).abs() < 1e-9, "vertex ({x}, {y}) off the grid lines");
                let j = fj.round() as usize;
                let i = (fi.floor() as usize).min(field.nx - 2);
                (field.index(i, j), field.index(i + 1, j), fi - i as f64)
            };
            let (va, vb) = (values[a], values[b]);
            assert!(va * vb <= 0.0, "no sign change across edge at ({x}, {y})");
            let interp = va + frac * (vb - va);
            assert!(interp.abs() <= 1e-9 * va.abs().max(vb.abs()), "interp {interp} at ({x}, {y})");
        }
    }
}
