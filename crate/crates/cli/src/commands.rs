use serde_json::json;
use zetawb::plot::{emit_csv, emit_svg, extract_zero_curves, format_sig, grid_eval, Region};
use zetawb::primes::{pnt_stats, rh_bound_probe, table13};
use zetawb::symmetry::{branch_curves, xi_symmetry_scan};
use zetawb::zeros::{compare_with_reference, ingest_zero_table, scan_zeros, ScanConfig};
use zetawb::zeta::zeta_with;
use zetawb::{Complex, EvalMethod, Result};

use crate::json::{complex, num, to_bytes};
use crate::Command;

pub fn run(command: Command) -> Result<Vec<u8>> {
    match command {
        Command::Eval { re, im, method, tol } => eval(re, im, method, tol),
        Command::Zeros {
            tmax,
            step,
            refine_tol,
            reference,
        } => {
            let config = ScanConfig {
                t_max: tmax,
                step,
                refine_tol,
            };
            let records = scan_zeros(&config)?;
            match reference {
                None => {
                    let rows = records
                        .iter()
                        .map(|r| vec![r.index.to_string(), format_sig(r.t), format_sig(r.residual)])
                        .collect::<Vec<_>>();
                    emit_csv(&["index", "t", "residual"], &rows)
                }
                Some(path) => {
                    let table = ingest_zero_table(path)?;
                    let cmp = compare_with_reference(&records, &table, tmax);
                    let rows = records
                        .iter()
                        .map(|r| {
                            let reference = cmp.pairs.iter().find(|p| p.0 == r.index).map(|p| p.2);
                            vec![
                                r.index.to_string(),
                                format_sig(r.t),
                                format_sig(r.residual),
                                reference.map(format_sig).unwrap_or_default(),
                                reference.map(|t| format_sig(r.t - t)).unwrap_or_default(),
                            ]
                        })
                        .collect::<Vec<_>>();
                    emit_csv(&["index", "t", "residual", "reference", "diff"], &rows)
                }
            }
        }
        Command::Primes { x, rh_eps } => {
            let s = pnt_stats(x)?;
            let mut v = json!({
                "x": num(s.x),
                "pi_x": s.pi_x,
                "li_x": num(s.li_x),
                "x_over_ln_x": num(s.x_over_ln_x),
                "ratio_li": num(s.ratio_li),
                "ratio_pnt": num(s.ratio_pnt),
                "gap": num(s.gap),
            });
            if let Some(eps) = rh_eps {
                let p = rh_bound_probe(x, eps)?;
                v["rh_probe"] = json!({
                    "eps": num(eps),
                    "c_min": num(p.c_min),
                    "argmax_x": num(p.argmax_x),
                    "li_exceeds_pi": p.li_exceeds_pi,
                    "points": p.points,
                });
            }
            Ok(to_bytes(&v))
        }
        Command::XiCheck {
            re_min,
            re_max,
            im_min,
            im_max,
            n,
        } => {
            let scan = xi_symmetry_scan(re_min, re_max, im_min, im_max, n)?;
            Ok(to_bytes(&json!({
                "region": {
                    "re_min": num(re_min),
                    "re_max": num(re_max),
                    "im_min": num(im_min),
                    "im_max": num(im_max),
                },
                "points": scan.points,
                "max_residual": num(scan.max_residual),
                "mean_residual": num(scan.mean_residual),
                "argmax": complex(scan.argmax),
            })))
        }
        Command::Symmetry {
            family,
            c,
            n_phase,
            x_min,
            x_max,
            samples,
        } => {
            let curve = branch_curves(family, c, n_phase, x_min, x_max, samples)?;
            let rows = curve
                .samples
                .iter()
                .map(|p| vec![format_sig(p.x), format_sig(p.re), format_sig(p.im)])
                .collect::<Vec<_>>();
            emit_csv(&["x", "re", "im"], &rows)
        }
        Command::Grid {
            re_min,
            re_max,
            im_min,
            im_max,
            nx,
            ny,
            tol,
            svg,
        } => {
            let field = grid_eval(Region::new(re_min, re_max, im_min, im_max), nx, ny, tol)?;
            if let Some(path) = svg {
                let curves = extract_zero_curves(&field);
                std::fs::write(path, emit_svg(&field, &curves))?;
            }
            let rows = (0..field.ny)
                .flat_map(|j| (0..field.nx).map(move |i| (i, j)))
                .map(|(i, j)| {
                    let k = field.index(i, j);
                    vec![
                        i.to_string(),
                        j.to_string(),
                        format_sig(field.x(i)),
                        format_sig(field.y(j)),
                        format_sig(field.re_values[k]),
                        format_sig(field.im_values[k]),
                    ]
                })
                .collect::<Vec<_>>();
            emit_csv(&["i", "j", "re_s", "im_s", "re_zeta", "im_zeta"], &rows)
        }
        Command::Table13 { k, tmax, step } => {
            let rows = table13(k, &ScanConfig::new(tmax).with_step(step))?
                .into_iter()
                .map(|r| vec![r.k.to_string(), r.primes.to_string(), format!("{:.6}", r.t)])
                .collect::<Vec<_>>();
            emit_csv(&["k", "primes_up_to_t_k", "t_k"], &rows)
        }
    }
}

fn eval(re: f64, im: f64, method: EvalMethod, tol: f64) -> Result<Vec<u8>> {
    let s = Complex::new(re, im);
    let r = zeta_with(s, tol, method)?;
    Ok(to_bytes(&json!({
        "s": complex(s),
        "value": complex(r.value),
        "method": r.method.as_str(),
        "terms_used": r.terms_used,
        "est_error": num(r.est_error),
    })))
}
