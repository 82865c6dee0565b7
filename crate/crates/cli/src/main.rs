//! rca: command line driver for the cherednik crate.
//!
//! Output is deterministic: identical configuration produces byte-identical
//! output.  Exact values are printed as rational or cyclotomic strings;
//! floating values are printed at a fixed precision of 15 significant
//! digits.  Exit codes: 0 success, 2 configuration error, 3 uncertified
//! result, 4 numerical failure.

use clap::{Parser, Subcommand};
use cherednik::cato;
use cherednik::config::{parse_group, parse_params};
use cherednik::error::Error;
use cherednik::group::ReflectionGroup;
use cherednik::hecke;
use cherednik::kz;
use cherednik::numeric::{eigenvalues, Cplx, Real, DD};
use cherednik::params::CherednikParams;
use num::Signed;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "rca",
    about = "Rational Cherednik algebra computations: category O and KZ monodromy",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// JSON config file; command line flags override its fields.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Group spec: Z/<e>, I2(<m>) or S<n>.
    #[arg(long, global = true)]
    group: Option<String>,
    /// Parameter spec: a rational like 1/5, or a JSON array
    /// [{"orbit": "H0", "k": ["1/5"]}, ...].
    #[arg(long, global = true)]
    param: Option<String>,
    /// Truncation degree for graded computations.
    #[arg(long = "N", global = true)]
    n: Option<u32>,
    /// Integrator tolerance for kz.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Working precision in mantissa bits (<= 53 native, <= 106 extended).
    #[arg(long, global = true)]
    precision: Option<u32>,
    #[arg(long, global = true, value_parser = ["json", "csv"])]
    format: Option<String>,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Report uncertified results instead of failing with exit code 3.
    #[arg(long, global = true)]
    allow_uncertified: bool,
    /// Restrict to one irreducible, by label.
    #[arg(long, global = true)]
    irrep: Option<String>,
    /// Braid words for kz, e.g. "e;0;1;0,1;0,1,0".
    #[arg(long, global = true)]
    words: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Group order, hyperplane orbits and character table.
    DescribeGroup,
    /// Exact c-function values per irreducible.
    CFunction,
    /// Block partition of category O with the order edges inside blocks.
    Blocks,
    /// Graded characters of the simple modules up to degree N.
    CharL,
    /// Decomposition matrices of the standard modules, per block.
    Decomp,
    /// KZ monodromy matrices with Hecke and braid relation residuals.
    Kz,
}

#[derive(serde::Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    group: Option<String>,
    param: Option<Value>,
    #[serde(rename = "N")]
    n: Option<u32>,
    tol: Option<f64>,
    precision: Option<u32>,
    format: Option<String>,
    out: Option<String>,
    allow_uncertified: Option<bool>,
    irrep: Option<String>,
    words: Option<String>,
}

struct Job {
    g: ReflectionGroup,
    p: CherednikParams,
    n: Option<u32>,
    tol: f64,
    precision: u32,
    format: String,
    out: Option<PathBuf>,
    allow_uncertified: bool,
    irrep: Option<String>,
    words: Option<String>,
}

fn resolve(cli: &Cli) -> Result<Job, Error> {
    let file: FileConfig = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("config file {}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| Error::Config(format!("config file {}: {e}", path.display())))?
        }
        None => FileConfig::default(),
    };
    let group_spec = cli
        .group
        .clone()
        .or(file.group)
        .ok_or_else(|| Error::Config("missing group: pass --group or a config file".into()))?;
    let param_spec = match cli.param.clone().or_else(|| {
        file.param.as_ref().map(|v| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        })
    }) {
        Some(s) => s,
        // The group description does not depend on the parameter.
        None if matches!(cli.cmd, Cmd::DescribeGroup) => "0".into(),
        None => return Err(Error::Config("missing param: pass --param or a config file".into())),
    };
    let g = parse_group(&group_spec)?;
    let p = parse_params(&g, &param_spec)?;
    let precision = cli.precision.or(file.precision).unwrap_or(106);
    if precision == 0 || precision > 106 {
        return Err(Error::Config(format!(
            "precision {precision} out of range 1..=106"
        )));
    }
    let format = cli.format.clone().or(file.format).unwrap_or_else(|| "json".into());
    if format != "json" && format != "csv" {
        return Err(Error::Config(format!("format {format:?} is not json or csv")));
    }
    if let Some(irrep) = cli.irrep.as_ref().or(file.irrep.as_ref()) {
        if g.irrep_by_label(irrep).is_none() {
            return Err(Error::Config(format!(
                "irrep {irrep:?} not in group {}; labels: {}",
                g.name,
                g.irreps.iter().map(|e| e.label.as_str()).collect::<Vec<_>>().join(", ")
            )));
        }
    }
    Ok(Job {
        g,
        p,
        n: cli.n.or(file.n),
        tol: cli.tol.or(file.tol).unwrap_or(1e-10),
        precision,
        format,
        out: cli.out.clone().or(file.out.map(PathBuf::from)),
        allow_uncertified: cli.allow_uncertified || file.allow_uncertified.unwrap_or(false),
        irrep: cli.irrep.clone().or(file.irrep),
        words: cli.words.clone().or(file.words),
    })
}

/// Fixed-precision rendering of floating values, for byte-stable output.
fn fx(x: f64) -> Value {
    Value::String(format!("{x:.15e}"))
}

fn cxv<R: Real>(z: Cplx<R>) -> Value {
    Value::Array(vec![fx(z.re.to_f64()), fx(z.im.to_f64())])
}

fn matv<R: Real>(m: &cherednik::linalg::Mat<Cplx<R>>) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|i| Value::Array((0..m.ncols()).map(|j| cxv(m[(i, j)])).collect()))
            .collect(),
    )
}

fn param_echo(p: &CherednikParams) -> Value {
    Value::Array(
        p.k.iter()
            .map(|o| Value::Array(o.iter().map(|k| Value::String(k.to_string())).collect()))
            .collect(),
    )
}

fn labels(g: &ReflectionGroup) -> Vec<String> {
    g.irreps.iter().map(|e| e.label.clone()).collect()
}

fn selected_irreps(job: &Job) -> Vec<usize> {
    match &job.irrep {
        Some(l) => vec![job.g.irrep_by_label(l).unwrap()],
        None => (0..job.g.irreps.len()).collect(),
    }
}

fn cmd_describe_group(job: &Job) -> Result<(Value, Option<String>), Error> {
    let g = &job.g;
    let orbits: Vec<Value> = g
        .orbits
        .iter()
        .enumerate()
        .map(|(i, o)| {
            json!({
                "label": format!("H{i}"),
                "e": g.hyperplanes[o[0]].e,
                "size": o.len(),
            })
        })
        .collect();
    let table: Vec<Value> = g
        .irreps
        .iter()
        .map(|e| Value::Array(e.chars.iter().map(|c| Value::String(c.to_string())).collect()))
        .collect();
    let v = json!({
        "group": g.name,
        "order": g.order(),
        "dim": g.dim,
        "elements": g.elem_names,
        "hyperplane_orbits": orbits,
        "irreps": g.irreps.iter().map(|e| json!({"label": e.label, "dim": e.dim})).collect::<Vec<_>>(),
        "character_table": table,
    });
    Ok((v, None))
}

fn cmd_c_function(job: &Job) -> Result<(Value, Option<String>), Error> {
    let c = job.p.c_all(&job.g)?;
    let ls = labels(&job.g);
    let mut map = serde_json::Map::new();
    for (e, v) in c.iter().enumerate() {
        map.insert(ls[e].clone(), Value::String(v.to_string()));
    }
    let v = json!({
        "group": job.g.name,
        "param": param_echo(&job.p),
        "order": ls,
        "c": Value::Object(map),
    });
    let mut csv = String::from("irrep,c\n");
    for (e, val) in c.iter().enumerate() {
        csv.push_str(&format!("{},{}\n", ls[e], val));
    }
    Ok((v, Some(csv)))
}

fn cmd_blocks(job: &Job) -> Result<(Value, Option<String>), Error> {
    let c = job.p.c_all(&job.g)?;
    let blocks = cato::blocks(&job.g, &job.p)?;
    let ls = labels(&job.g);
    let mut edges: Vec<Value> = Vec::new();
    for block in &blocks {
        for &f in block {
            for &e in block {
                let gap = &c[f] - &c[e];
                if gap.is_integer() && gap.is_positive() {
                    let gap_int = i64::try_from(gap.to_integer())
                        .map_err(|_| Error::Numerical("block gap overflow".into()))?;
                    edges.push(json!({"from": ls[f], "to": ls[e], "gap": gap_int}));
                }
            }
        }
    }
    let v = json!({
        "group": job.g.name,
        "param": param_echo(&job.p),
        "blocks": blocks
            .iter()
            .map(|b| b.iter().map(|&e| ls[e].clone()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "order_edges": edges,
    });
    Ok((v, None))
}

fn cmd_char_l(job: &Job) -> Result<(Value, Option<String>), Error> {
    let n = job.n.unwrap_or(8);
    let blocks = cato::blocks(&job.g, &job.p)?;
    let mut certified = vec![false; job.g.irreps.len()];
    for block in &blocks {
        let dm = cato::decomposition_matrix(
            &job.g,
            &job.p,
            block,
            Some(n),
            job.allow_uncertified,
        )?;
        for &e in block {
            certified[e] = dm.certified;
        }
    }
    let mut entries: Vec<Value> = Vec::new();
    let mut csv = String::new();
    for e_idx in selected_irreps(job) {
        let ch = cato::simple_character(&job.g, &job.p, e_idx, n)?;
        let (dim, stabilized) = cato::ch_variety_dim(&job.g, &ch);
        entries.push(json!({
            "irrep": job.g.irreps[e_idx].label,
            "certified": certified[e_idx],
            "support_dim": dim,
            "support_dim_stabilized": stabilized,
            "character": serde_json::to_value(&ch).map_err(|e| Error::Config(e.to_string()))?,
        }));
        csv.push_str(&format!(
            "# L({}) certified={}\ndegree,{}\n",
            job.g.irreps[e_idx].label,
            certified[e_idx],
            ch.irreps.join(",")
        ));
        for (d, row) in ch.mults.iter().enumerate() {
            csv.push_str(&format!(
                "{},{}\n",
                ch.degrees[d],
                row.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",")
            ));
        }
        csv.push('\n');
    }
    let v = json!({
        "group": job.g.name,
        "param": param_echo(&job.p),
        "N": n,
        "simples": entries,
    });
    Ok((v, Some(csv)))
}

fn cmd_decomp(job: &Job) -> Result<(Value, Option<String>), Error> {
    let blocks = cato::blocks(&job.g, &job.p)?;
    let mut out: Vec<Value> = Vec::new();
    let mut csv = String::new();
    for (bi, block) in blocks.iter().enumerate() {
        let dm = cato::decomposition_matrix(&job.g, &job.p, block, job.n, job.allow_uncertified)?;
        csv.push_str(&format!(
            "# block {bi} certified={} N={}\ndelta\\simple,{}\n",
            dm.certified,
            dm.n_used,
            dm.labels.join(",")
        ));
        for (r, row) in dm.entries.iter().enumerate() {
            csv.push_str(&format!(
                "{},{}\n",
                dm.labels[r],
                row.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",")
            ));
        }
        csv.push('\n');
        out.push(serde_json::to_value(&dm).map_err(|e| Error::Config(e.to_string()))?);
    }
    let v = json!({
        "group": job.g.name,
        "param": param_echo(&job.p),
        "blocks": out,
    });
    Ok((v, Some(csv)))
}

fn parse_words(spec: &str, n_gens: usize) -> Result<Vec<Vec<usize>>, Error> {
    let mut out = Vec::new();
    for w in spec.split(';') {
        let w = w.trim();
        if w.is_empty() || w == "e" {
            out.push(Vec::new());
            continue;
        }
        let mut word = Vec::new();
        for t in w.split(',') {
            let i: usize = t
                .trim()
                .parse()
                .map_err(|_| Error::Config(format!("words: bad generator index {t:?}")))?;
            if i >= n_gens {
                return Err(Error::Config(format!(
                    "words: index {i} out of range; the group has {n_gens} braid generators"
                )));
            }
            word.push(i);
        }
        out.push(word);
    }
    Ok(out)
}

fn default_words(n_gens: usize) -> Vec<Vec<usize>> {
    let mut w = vec![Vec::new()];
    for i in 0..n_gens {
        w.push(vec![i]);
    }
    if n_gens >= 2 {
        w.push(vec![0, 1]);
        w.push(vec![0, 1, 0]);
    }
    w
}

fn word_name(word: &[usize]) -> String {
    if word.is_empty() {
        "e".into()
    } else {
        word.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn kz_irrep_entry<R: Real>(job: &Job, e_idx: usize, words: &[Vec<usize>]) -> Result<Value, Error> {
    let g = &job.g;
    let conn = kz::assemble_connection::<R>(g, &job.p, e_idx)?;
    let rep = kz::monodromy_rep::<R>(g, &job.p, e_idx, job.tol).map_err(|e| match e {
        Error::Numerical(msg) => {
            Error::Numerical(format!("{msg} (irrep {})", g.irreps[e_idx].label))
        }
        other => other,
    })?;
    let mut gens: Vec<Value> = Vec::new();
    for (i, t) in rep.gens.iter().enumerate() {
        let eig = eigenvalues(t, 1e-9)?;
        gens.push(json!({
            "generator": i,
            "element": g.elem_names[rep.gen_elems[i]],
            "wall": format!("H{}", rep.walls[i]),
            "matrix": matv(t),
            "eigenvalues": eig.into_iter().map(cxv).collect::<Vec<_>>(),
            "hecke_residual": fx(kz::hecke_relation_residual(g, &job.p, t, rep.walls[i])),
        }));
    }
    let traces = kz::monodromy_character(&rep, words);
    let word_traces: Vec<Value> = words
        .iter()
        .zip(traces.iter())
        .map(|(w, t)| json!({"word": word_name(w), "trace": cxv(*t)}))
        .collect();
    let specht = match hecke::partition_for_irrep(g, e_idx) {
        Some(lambda) => {
            let q = Cplx::<R>::root_of_unity(&job.p.k_at(g, 0, 1));
            match hecke::specht_matrices(&lambda, q) {
                Ok(oracle) => {
                    let report = hecke::compare_with_monodromy(&rep, &oracle, words, 1e-5);
                    json!({
                        "available": true,
                        "lambda": lambda,
                        "pass": report.pass,
                        "dim_monodromy": report.dim_monodromy,
                        "dim_oracle": report.dim_oracle,
                        "max_trace_diff": fx(report.max_trace_diff),
                    })
                }
                Err(e) => json!({"available": false, "reason": e.to_string()}),
            }
        }
        None => json!({"available": false, "reason": "no Specht model for this group"}),
    };
    Ok(json!({
        "irrep": g.irreps[e_idx].label,
        "base_point": conn.x0_rat.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "flatness_residual": fx(conn.flatness_residual),
        "equivariance_residual": fx(conn.equivariance_residual),
        "generators": gens,
        "braid_residual": fx(kz::braid_relation_residual(g, &rep)),
        "word_traces": word_traces,
        "specht": specht,
    }))
}

fn cmd_kz(job: &Job) -> Result<(Value, Option<String>), Error> {
    let n_gens = job.g.braid_gens.len();
    let words = match &job.words {
        Some(spec) => parse_words(spec, n_gens)?,
        None => default_words(n_gens),
    };
    let mut entries: Vec<Value> = Vec::new();
    for e_idx in selected_irreps(job) {
        entries.push(if job.precision <= 53 {
            kz_irrep_entry::<f64>(job, e_idx, &words)?
        } else {
            kz_irrep_entry::<DD>(job, e_idx, &words)?
        });
    }
    let v = json!({
        "group": job.g.name,
        "param": param_echo(&job.p),
        "tol": fx(job.tol),
        "precision": job.precision,
        "irreps": entries,
    });
    Ok((v, None))
}

fn run(cli: &Cli) -> Result<(), Error> {
    let job = resolve(cli)?;
    let (value, csv) = match cli.cmd {
        Cmd::DescribeGroup => cmd_describe_group(&job)?,
        Cmd::CFunction => cmd_c_function(&job)?,
        Cmd::Blocks => cmd_blocks(&job)?,
        Cmd::CharL => cmd_char_l(&job)?,
        Cmd::Decomp => cmd_decomp(&job)?,
        Cmd::Kz => cmd_kz(&job)?,
    };
    let text = if job.format == "csv" {
        csv.ok_or_else(|| Error::Config("csv output is not available for this command".into()))?
    } else {
        let mut s = serde_json::to_string_pretty(&value)
            .map_err(|e| Error::Config(e.to_string()))?;
        s.push('\n');
        s
    };
    match &job.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Config(format!("writing {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rca: {e}");
            let code: u8 = match e {
                Error::Config(_) | Error::Parse(_) | Error::Unsupported(_) => 2,
                Error::Uncertified(_) => 3,
                _ => 4,
            };
            ExitCode::from(code)
        }
    }
}
