//! One function per subcommand.

use crate::config::{parse_grid, Command, Format, RunConfig};
use crate::error::CliError;
use crate::output::{float_text, integer_json, poly_json, rational_json, Report};
use asymptotics::{octahedron_rate, v8_f64, volume_experiment, GrowthSeries};
use diagram_io::{Diagram, TwistTemplate};
use khovanov::{ckh_capped, euler_characteristic, homology, stable_range, BigradedGroups};
use rayon::prelude::*;
use serde_json::{json, Value};
use skein_bracket::{
    agreeing_coefficients, bracket_diagram, colored_bracket, colored_jones, jones_infinity,
    twist_normalized,
};
use spin_network::{fusion_expand, fusion_sum, reduce_to_theta, Ktg, Move};
use std::fmt::Write;
use std::path::Path;

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError {
        code: "cli::Io".into(),
        message: format!("cannot read {}: {e}", path.display()),
        exit: crate::error::EXIT_USAGE,
    })
}

fn load_template(path: &Path) -> Result<TwistTemplate, CliError> {
    Ok(TwistTemplate::parse(&read(path)?)?)
}

/// Twist counts for every slot; an empty list means zero twists.
fn twist_vector(t: &TwistTemplate, k: &[usize]) -> Result<Vec<usize>, CliError> {
    if k.is_empty() {
        return Ok(vec![0; t.slot_count()]);
    }
    if k.len() != t.slot_count() {
        return Err(CliError::usage(format!(
            "--k lists {} twist counts but the diagram has {} slots",
            k.len(),
            t.slot_count()
        )));
    }
    Ok(k.to_vec())
}

fn load_diagram(path: &Path, k: &[usize]) -> Result<Diagram, CliError> {
    let t = load_template(path)?;
    let k = twist_vector(&t, k)?;
    Ok(t.twist_fill(&k)?)
}

fn progress(cfg: &RunConfig, msg: impl AsRef<str>) {
    if cfg.verbose {
        eprintln!("{}", msg.as_ref());
    }
}

pub fn run(command: &Command, cfg: &RunConfig) -> Result<Report, CliError> {
    match command {
        Command::Bracket { file, k } => bracket(file, k),
        Command::Jones { file, n, unreduced, k } | Command::ColoredJones { file, n, unreduced, k } => {
            jones(file, *n, !*unreduced, k)
        }
        Command::Kh { file, k } => kh(file, k, cfg),
        Command::Stabilize { file, k, slot, jones, n } => stabilize(file, k, *slot, *jones, *n, cfg),
        Command::ReduceKtg { file } => reduce_ktg(file),
        Command::Asymptote { template, octahedron, n } => {
            asymptote(template.as_deref(), *octahedron, n, cfg)
        }
        Command::FusionCheck { file, n, k } => fusion_check(file, *n, k),
    }
}

fn bracket(file: &Path, k: &[usize]) -> Result<Report, CliError> {
    let d = load_diagram(file, k)?;
    let b = bracket_diagram(&d)?;
    Ok(Report {
        json: json!({
            "command": "bracket",
            "terms": poly_json(&b),
            "text": b.to_string(),
            "writhe": d.writhe(),
            "n": 1,
            "reduced": false,
        }),
        text: b.to_string(),
        csv: None,
        default_format: Format::Text,
        ok: true,
    })
}

fn jones(file: &Path, n: usize, reduced: bool, k: &[usize]) -> Result<Report, CliError> {
    if n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    let d = load_diagram(file, k)?;
    let j = colored_jones(&d, n, reduced)?;
    let mut json = json!({
        "command": "jones",
        "terms": poly_json(j.num()),
        "text": j.to_string(),
        "writhe": d.writhe(),
        "n": n,
        "reduced": reduced,
    });
    if !j.is_laurent() {
        json["den"] = poly_json(j.den());
    }
    Ok(Report {
        text: j.to_string(),
        json,
        csv: None,
        default_format: Format::Text,
        ok: true,
    })
}

fn groups_json(g: &BigradedGroups) -> Value {
    Value::Array(
        g.entries
            .iter()
            .map(|(&(i, j), grp)| {
                json!({
                    "i": i,
                    "j": j,
                    "rank": grp.rank,
                    "torsion": grp.torsion.iter().map(integer_json).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

fn kh(file: &Path, k: &[usize], cfg: &RunConfig) -> Result<Report, CliError> {
    let d = load_diagram(file, k)?;
    progress(cfg, format!("building the cube of {} crossings", d.crossing_count()));
    let c = ckh_capped(&d, cfg.crossing_cap)?;
    progress(cfg, format!("{} generators; reducing", c.generator_count()));
    let g = homology(&c);
    let euler = euler_characteristic(&g);
    let mut text = String::new();
    for (&(i, j), grp) in &g.entries {
        let mut parts = Vec::new();
        if grp.rank > 0 {
            parts.push(format!("Z^{}", grp.rank));
        }
        parts.extend(grp.torsion.iter().map(|t| format!("Z/{t}")));
        writeln!(text, "Kh[{i},{j}] = {}", parts.join(" + ")).unwrap();
    }
    writeln!(text, "euler = {euler}").unwrap();
    let mut csv = String::from("i,j,rank,torsion\n");
    for (&(i, j), grp) in &g.entries {
        let tors: Vec<String> = grp.torsion.iter().map(|t| t.to_string()).collect();
        writeln!(csv, "{i},{j},{},{}", grp.rank, tors.join(" ")).unwrap();
    }
    Ok(Report {
        json: json!({
            "command": "kh",
            "crossings": d.crossing_count(),
            "entries": groups_json(&g),
            "euler": poly_json(&euler),
        }),
        text,
        csv: Some(csv),
        default_format: Format::Json,
        ok: true,
    })
}

fn stabilize(
    file: &Path,
    ks: &str,
    slot: usize,
    use_jones: bool,
    n: usize,
    cfg: &RunConfig,
) -> Result<Report, CliError> {
    let t = load_template(file)?;
    let ks = parse_grid(ks)?;
    if slot == 0 || slot > t.slot_count() {
        return Err(CliError::usage(format!(
            "--slot must lie in 1..={}, got {slot}",
            t.slot_count()
        )));
    }
    if n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    let fill = |k: usize| {
        let mut v = vec![0; t.slot_count()];
        v[slot - 1] = k;
        v
    };
    let (header, rows): (&str, Vec<(usize, Option<i64>)>) = if use_jones {
        progress(cfg, "computing the limit");
        let limit = jones_infinity(&t, n)?;
        let values = ks
            .par_iter()
            .map(|&k| {
                let f = twist_normalized(&t, n, &fill(k))?;
                Ok((k, agreeing_coefficients(&f, &limit)))
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        ("k,agreeing", values)
    } else {
        let groups = ks
            .par_iter()
            .map(|&k| {
                let d = t.twist_fill(&fill(k))?;
                Ok(homology(&ckh_capped(&d, cfg.crossing_cap)?))
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        progress(cfg, "comparing consecutive groups");
        let m = stable_range(&groups)?;
        ("k,m", ks.iter().copied().zip(m).collect())
    };
    let key = if use_jones { "agreeing" } else { "m" };
    let mut csv = format!("{header}\n");
    for (k, v) in &rows {
        let v = v.map(|x| x.to_string()).unwrap_or_else(|| "none".into());
        writeln!(csv, "{k},{v}").unwrap();
    }
    let json_rows: Vec<Value> = rows.iter().map(|(k, v)| json!({ "k": k, key: v })).collect();
    Ok(Report {
        json: json!({
            "command": "stabilize",
            "mode": if use_jones { "jones" } else { "kh" },
            "slot": slot,
            "n": n,
            "rows": json_rows,
        }),
        text: csv.clone(),
        csv: Some(csv),
        default_format: Format::Csv,
        ok: true,
    })
}

fn move_json(m: &Move) -> Value {
    let mut v = json!({ "kind": m.name(), "text": m.to_string() });
    match m {
        Move::Triangle { legs, sides, .. } => {
            v["legs"] = json!(legs);
            v["sides"] = json!(sides);
        }
        Move::Bubble { leg, sides, .. } => {
            v["legs"] = json!([leg, leg]);
            v["sides"] = json!(sides);
        }
        Move::Untwist { color, twists, .. } => {
            v["color"] = json!(color);
            v["twists"] = json!(twists);
        }
        Move::Erase | Move::Vanish(_) => {}
    }
    v
}

fn reduce_ktg(file: &Path) -> Result<Report, CliError> {
    let g = Ktg::parse(&read(file)?)?;
    let trace = reduce_to_theta(&g)?;
    let value = trace.value()?;
    let mut text = String::new();
    for m in &trace.moves {
        writeln!(text, "{m}").unwrap();
    }
    writeln!(text, "T = {}", trace.triangles).unwrap();
    writeln!(text, "finals = {:?}", trace.finals).unwrap();
    writeln!(text, "value = {value}").unwrap();
    Ok(Report {
        json: json!({
            "command": "reduce-ktg",
            "T": trace.triangles,
            "moves": trace.moves.iter().map(move_json).collect::<Vec<_>>(),
            "finals": trace.finals,
            "loops": trace.loops,
            "value": rational_json(&value),
        }),
        text,
        csv: None,
        default_format: Format::Json,
        ok: true,
    })
}

fn asymptote(
    template: Option<&Path>,
    octahedron: bool,
    grid: &str,
    cfg: &RunConfig,
) -> Result<Report, CliError> {
    let ns = parse_grid(grid)?;
    let (series, target, triangles, formula): (GrowthSeries, f64, Option<usize>, Option<Vec<f64>>) =
        match (template, octahedron) {
            (Some(path), false) => {
                let t = load_template(path)?;
                progress(cfg, format!("volume experiment over n = {ns:?}"));
                let e = volume_experiment(&t, &ns, cfg.digits)?;
                (e.series, e.target, Some(e.triangles), Some(e.formula_rates))
            }
            (None, true) => {
                progress(cfg, format!("octahedral rates over n = {ns:?}"));
                (octahedron_rate(&ns, cfg.digits)?, v8_f64(), None, None)
            }
            _ => return Err(CliError::usage("give exactly one of --template and --octahedron")),
        };
    let mut csv = String::from("n,abs_value,rate,target,rate_without_1_over_n");
    if formula.is_some() {
        csv.push_str(",formula_rate");
    }
    csv.push('\n');
    let mut rows = Vec::new();
    for (i, r) in series.rows.iter().enumerate() {
        let abs = laurent_core::eval::format_decimal(&r.value.abs(), cfg.digits);
        write!(
            csv,
            "{},{abs},{},{},{}",
            r.n,
            float_text(r.rate),
            float_text(target),
            float_text(r.unscaled)
        )
        .unwrap();
        let mut row = json!({
            "n": r.n,
            "abs_value": abs,
            "rate": r.rate,
            "rate_without_1_over_n": r.unscaled,
        });
        if let Some(f) = &formula {
            write!(csv, ",{}", float_text(f[i])).unwrap();
            row["formula_rate"] = json!(f[i]);
        }
        csv.push('\n');
        rows.push(row);
    }
    let last = series.last_rate();
    let summary = json!({
        "T": triangles,
        "target": target,
        "last_rate": last,
        "gap": last.map(|r| target - r),
        "scale": series.scale,
    });
    let text = format!("{csv}# summary {summary}\n");
    Ok(Report {
        json: json!({ "command": "asymptote", "rows": rows, "summary": summary }),
        text,
        csv: Some(csv),
        default_format: Format::Csv,
        ok: true,
    })
}

fn fusion_check(file: &Path, n: usize, k: &[usize]) -> Result<Report, CliError> {
    if n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    let t = load_template(file)?;
    let k = twist_vector(&t, k)?;
    let terms = fusion_expand(&t, n, &k)?;
    let sum = fusion_sum(&t, n, &k)?;
    let direct = colored_bracket(&t.twist_fill(&k)?, n)?;
    let equal = sum == direct;
    let text = format!(
        "fusion terms = {}\nsum = {sum}\ndirect = {direct}\nequal = {equal}\n",
        terms.len()
    );
    Ok(Report {
        json: json!({
            "command": "fusion-check",
            "n": n,
            "k": k,
            "terms": terms.len(),
            "sum": rational_json(&sum),
            "direct": rational_json(&direct),
            "equal": equal,
        }),
        text,
        csv: None,
        default_format: Format::Json,
        ok: equal,
    })
}
