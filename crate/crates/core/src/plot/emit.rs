//! Text emitters: CSV tables, SVG contour figures, number formatting.

use std::fmt::Write as _;

use super::contour::{CurveKind, Polyline};
use super::grid::GridField;
use crate::error::{Error, Result};

/// Significant digits in all text output.
pub const SIG_DIGITS: usize = 12;

/// `v` to [`SIG_DIGITS`] significant digits, `%g`-style: fixed notation
/// for exponents in `[−5, 12)`, scientific otherwise, trailing zeros cut.
pub fn format_sig(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..SIG_DIGITS as i32).contains(&exp) {
        let decimals = (SIG_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{v:.decimals$}"))
    } else {
        let m = trim_zeros(mantissa.to_string());
        format!("{m}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// A CSV table with a header row and LF line endings.
pub fn emit_csv(header: &[&str], rows: &[Vec<String>]) -> Result<Vec<u8>> {
    for (k, row) in rows.iter().enumerate() {
        if row.len() != header.len() {
            return Err(Error::Arity {
                expected: header.len(),
                found: row.len(),
                row: k + 1,
            });
        }
    }
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(row).map_err(io)?;
    }
    w.into_inner().map_err(|e| Error::Io(e.to_string()))
}

/// Reads back a table written by [`emit_csv`].
pub fn parse_csv(bytes: &[u8]) -> Result<(Vec<String>, Vec<Vec<String>>)> {
    let mut r = csv::ReaderBuilder::new().has_headers(true).from_reader(bytes);
    let header = r
        .headers()
        .map_err(|e| Error::Io(e.to_string()))?
        .iter()
        .map(str::to_string)
        .collect();
    let mut rows = Vec::new();
    for (k, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| Error::Parse {
            line: k + 2,
            msg: e.to_string(),
        })?;
        rows.push(rec.iter().map(str::to_string).collect());
    }
    Ok((header, rows))
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 640.0;
const MARGIN: f64 = 60.0;

/// A static figure of the zero curves over the field's region: re-zero
/// curves solid, im-zero curves dotted, a frame with corner labels and the
/// line `re(s) = 1/2` as a grey rule when it lies in range.
pub fn emit_svg(field: &GridField, curves: &[Polyline]) -> Vec<u8> {
    let span_x = (field.x_max - field.x_min).max(f64::MIN_POSITIVE);
    let span_y = (field.y_max - field.y_min).max(f64::MIN_POSITIVE);
    let plot_w = WIDTH - 2.0 * MARGIN;
    let plot_h = HEIGHT - 2.0 * MARGIN;
    let px = |x: f64| MARGIN + (x - field.x_min) / span_x * plot_w;
    let py = |y: f64| HEIGHT - MARGIN - (y - field.y_min) / span_y * plot_h;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<rect x="{MARGIN}" y="{MARGIN}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black" stroke-width="1"/>"#
    );
    if field.x_min <= 0.5 && 0.5 <= field.x_max {
        let x = px(0.5);
        let _ = writeln!(
            s,
            r#"<line x1="{x:.2}" y1="{MARGIN}" x2="{x:.2}" y2="{:.2}" stroke="grey" stroke-width="0.75"/>"#,
            HEIGHT - MARGIN
        );
    }
    let label = |s: &mut String, x: f64, y: f64, anchor: &str, text: String| {
        let _ = writeln!(
            s,
            r#"<text x="{x:.2}" y="{y:.2}" font-family="sans-serif" font-size="12" text-anchor="{anchor}">{text}</text>"#
        );
    };
    let bottom = HEIGHT - MARGIN + 18.0;
    label(&mut s, MARGIN, bottom, "start", format_sig(field.x_min));
    label(&mut s, WIDTH - MARGIN, bottom, "end", format_sig(field.x_max));
    label(&mut s, WIDTH / 2.0, HEIGHT - 15.0, "middle", "Re(s)".into());
    label(&mut s, MARGIN - 6.0, HEIGHT - MARGIN, "end", format_sig(field.y_min));
    label(&mut s, MARGIN - 6.0, MARGIN + 12.0, "end", format_sig(field.y_max));
    label(&mut s, 15.0, HEIGHT / 2.0, "middle", "Im(s)".into());

    for c in curves {
        if c.points.len() < 2 {
            continue;
        }
        let mut d = String::new();
        for (k, &(x, y)) in c.points.iter().enumerate() {
            let _ = write!(d, "{}{:.2},{:.2}", if k == 0 { "M" } else { " L" }, px(x), py(y));
        }
        let style = match c.kind {
            CurveKind::ReZero => r##"stroke="#1f3f8f" stroke-width="1.5""##,
            CurveKind::ImZero => r##"stroke="#b02020" stroke-width="1.5" stroke-dasharray="2,3""##,
        };
        let _ = writeln!(s, r#"<path class="{}" d="{d}" fill="none" {style}/>"#, c.kind.as_str());
    }
    let legend_y = MARGIN - 20.0;
    let _ = writeln!(
        s,
        r##"<line x1="{MARGIN}" y1="{legend_y}" x2="{:.1}" y2="{legend_y}" stroke="#1f3f8f" stroke-width="1.5"/>"##,
        MARGIN + 30.0
    );
    label(&mut s, MARGIN + 36.0, legend_y + 4.0, "start", "Re ζ = 0".into());
    let _ = writeln!(
        s,
        r##"<line x1="{:.1}" y1="{legend_y}" x2="{:.1}" y2="{legend_y}" stroke="#b02020" stroke-width="1.5" stroke-dasharray="2,3"/>"##,
        MARGIN + 140.0,
        MARGIN + 170.0
    );
    label(&mut s, MARGIN + 176.0, legend_y + 4.0, "start", "Im ζ = 0".into());
    s.push_str("</svg>\n");
    s.into_bytes()
}
