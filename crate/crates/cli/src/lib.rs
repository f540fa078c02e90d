//! Command implementations for the `jtgraph` binary.
//!
//! Each command renders its whole output to a `String` before anything is
//! written, so a failing run never leaves partial data behind.

pub mod args;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};

use jtgraph::fmt::g12;
use jtgraph::{
    density_matrix, jensen_tsallis_divergence, pairwise_matrix, parse_edge_list,
    parse_matrix_market, parse_off_mesh, renyi_entropy, spectrum, tsallis_entropy, validate,
    von_neumann_entropy, volume, DensityMatrix, EntropicIndex, Graph, Severity, WeightVector,
};

use args::{
    Cli, Command, DivergenceArgs, EntropyArgs, FigureArgs, Format, Measure, PairwiseArgs,
    ReadArgs, SpectrumArgs,
};

/// Runs one command; data goes to `--out` or is returned for standard output.
pub fn run(cli: Cli) -> Result<Option<String>> {
    let (text, out) = match cli.command {
        Command::Entropy(a) => (cmd_entropy(&a)?, a.output.out),
        Command::Divergence(a) => (cmd_divergence(&a)?, a.output.out),
        Command::Pairwise(a) => (cmd_pairwise(&a)?, a.output.out),
        Command::Spectrum(a) => (cmd_spectrum(&a)?, a.output.out),
        Command::Figure(a) => (cmd_figure(&a)?, a.output.out),
    };
    match out {
        Some(path) => {
            fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

pub fn resolve_format(path: &Path, format: Format) -> Result<Format> {
    if format != Format::Auto {
        return Ok(format);
    }
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    match ext.as_deref() {
        Some("edges" | "txt") => Ok(Format::Edges),
        Some("mtx") => Ok(Format::Mtx),
        Some("off") => Ok(Format::Off),
        _ => bail!(
            "{}: cannot infer the format from the file extension; pass --format",
            path.display()
        ),
    }
}

/// Reads and parses one graph file, reporting validation findings on stderr.
pub fn load_graph(path: &Path, read: &ReadArgs) -> Result<Graph> {
    let format = resolve_format(path, read.format)?;
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let parsed = match format {
        Format::Edges => parse_edge_list(&text, read.one_based),
        Format::Mtx => parse_matrix_market(&text),
        Format::Off => parse_off_mesh(&text),
        Format::Auto => unreachable!("resolved above"),
    }
    .with_context(|| format!("{}: parse error", path.display()))?;
    let mut report = parsed.report;
    report.extend(validate(&parsed.graph));
    for issue in &report.issues {
        if issue.severity != Severity::Error {
            eprintln!("{}: {}: {}", issue.severity, path.display(), issue.message);
        }
    }
    Ok(parsed.graph)
}

fn load_density(path: &Path, read: &ReadArgs) -> Result<(Graph, DensityMatrix)> {
    let g = load_graph(path, read)?;
    let rho = density_matrix(&g).with_context(|| format!("{}", path.display()))?;
    Ok((g, rho))
}

fn index(alpha: f64) -> Result<EntropicIndex> {
    Ok(EntropicIndex::new(alpha)?)
}

fn record(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{key}={value}");
}

pub fn cmd_entropy(a: &EntropyArgs) -> Result<String> {
    let alpha = match a.measure {
        Measure::VonNeumann => None,
        _ => Some(index(a.alpha)?),
    };
    let (g, rho) = load_density(&a.input, &a.read)?;
    let value = match (a.measure, alpha) {
        (Measure::Tsallis, Some(al)) => tsallis_entropy(&rho, al)?,
        (Measure::Renyi, Some(al)) => renyi_entropy(&rho, al)?,
        _ => von_neumann_entropy(&rho)?,
    };
    let mut out = String::new();
    record(&mut out, "file", a.input.display());
    record(&mut out, "m", g.vertex_count());
    record(&mut out, "edge_count", g.edge_count());
    record(&mut out, "volume", volume(&g));
    record(&mut out, "alpha", g12(alpha.map_or(1.0, EntropicIndex::value)));
    record(&mut out, "measure", a.measure.name());
    record(&mut out, "value", g12(value));
    Ok(out)
}

fn dimension_mismatch(names: &[String], dims: &[usize]) -> anyhow::Error {
    let listing: Vec<String> = names
        .iter()
        .zip(dims)
        .map(|(n, d)| format!("{n} has {d} vertices"))
        .collect();
    anyhow!("dimension mismatch ({}): {}", join_dims(dims), listing.join(", "))
}

fn join_dims(dims: &[usize]) -> String {
    dims.iter().map(usize::to_string).collect::<Vec<_>>().join(" vs ")
}

pub fn cmd_divergence(a: &DivergenceArgs) -> Result<String> {
    let alpha = index(a.alpha)?;
    if a.inputs.len() < 2 {
        bail!("divergence needs at least two inputs, got {}", a.inputs.len());
    }
    let weights = match &a.weights {
        Some(w) if w.len() != a.inputs.len() => {
            bail!("{} weights given for {} inputs", w.len(), a.inputs.len())
        }
        Some(w) => WeightVector::new(w.clone())?,
        None => WeightVector::uniform(a.inputs.len()),
    };
    let mut rhos = Vec::with_capacity(a.inputs.len());
    for path in &a.inputs {
        rhos.push(load_density(path, &a.read)?.1);
    }
    let dims: Vec<usize> = rhos.iter().map(DensityMatrix::dim).collect();
    if dims.iter().any(|&d| d != dims[0]) {
        let names: Vec<String> = a.inputs.iter().map(|p| p.display().to_string()).collect();
        return Err(dimension_mismatch(&names, &dims));
    }
    let d = jensen_tsallis_divergence(&rhos, &weights, alpha)?;
    let mut out = String::new();
    record(&mut out, "value", g12(d.value));
    record(&mut out, "upper_bound", g12(d.upper_bound));
    record(&mut out, "tight_bound", g12(d.tight_bound));
    record(&mut out, "normalized", g12(d.normalized));
    record(&mut out, "alpha", g12(alpha.value()));
    record(&mut out, "n", d.n);
    Ok(out)
}

fn corpus_paths(a: &PairwiseArgs) -> Result<Vec<PathBuf>> {
    let Some(dir) = &a.dir else {
        return Ok(a.inputs.clone());
    };
    let mut paths = Vec::new();
    for entry in fs::read_dir(dir).with_context(|| format!("listing {}", dir.display()))? {
        let path = entry?.path();
        if path.is_file() && resolve_format(&path, a.read.format).is_ok() {
            paths.push(path);
        }
    }
    paths.sort();
    if paths.is_empty() {
        bail!("{}: no graph files found", dir.display());
    }
    Ok(paths)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn identifier(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

pub fn cmd_pairwise(a: &PairwiseArgs) -> Result<String> {
    let alpha = index(a.alpha)?;
    let mut names: Vec<String> = Vec::new();
    let mut rhos: Vec<DensityMatrix> = Vec::new();
    for path in corpus_paths(a)? {
        let rho = match load_density(&path, &a.read) {
            Ok((_, rho)) => rho,
            Err(e) if a.skip_bad => {
                eprintln!("warning: skipping {}: {e:#}", path.display());
                continue;
            }
            Err(e) => return Err(e),
        };
        if let Some(first) = rhos.first() {
            if rho.dim() != first.dim() {
                if a.skip_bad {
                    eprintln!(
                        "warning: skipping {}: {} vertices, corpus has {}",
                        path.display(),
                        rho.dim(),
                        first.dim()
                    );
                    continue;
                }
                return Err(dimension_mismatch(
                    &[names[0].clone(), path.display().to_string()],
                    &[first.dim(), rho.dim()],
                ));
            }
        }
        names.push(path.display().to_string());
        rhos.push(rho);
    }
    if rhos.is_empty() {
        bail!("no usable inputs");
    }
    let mut matrix = pairwise_matrix(&rhos, alpha)?;
    if !a.normalized {
        let bound = jtgraph::upper_bound(&WeightVector::uniform(2), alpha);
        matrix = matrix.scaled(bound);
    }

    let ids: Vec<String> = names.iter().map(|n| csv_field(&identifier(Path::new(n)))).collect();
    let mut out = format!("id,{}\n", ids.join(","));
    for (i, id) in ids.iter().enumerate() {
        let row: Vec<String> = matrix.row(i).iter().map(|&x| g12(x)).collect();
        let _ = writeln!(out, "{id},{}", row.join(","));
    }
    Ok(out)
}

pub fn cmd_spectrum(a: &SpectrumArgs) -> Result<String> {
    let (_, rho) = load_density(&a.input, &a.read)?;
    let s = spectrum(&rho).with_context(|| format!("{}", a.input.display()))?;
    if let Some(path) = &a.dump_matrix {
        fs::write(path, rho.matrix().to_csv())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(s.to_csv())
}

/// `H_α(diag(p, 1 − p))`; `α = 0` evaluates `tr(ρ⁰) − 1` with `0⁰ = 0`.
pub fn binary_tsallis(p: f64, alpha: f64) -> Result<f64> {
    let rho = DensityMatrix::diagonal(&[p, 1.0 - p])?;
    if alpha == 0.0 {
        return Ok(spectrum(&rho)?.power_trace(0.0) - 1.0);
    }
    Ok(tsallis_entropy(&rho, index(alpha)?)?)
}

pub fn figure_csv(alphas: &[f64], grid: usize) -> Result<String> {
    if alphas.is_empty() {
        bail!("--alpha-list is empty");
    }
    if let Some(&bad) = alphas.iter().find(|a| !(**a >= 0.0 && a.is_finite())) {
        return Err(jtgraph::Error::InvalidAlpha(bad).into());
    }
    if grid < 2 {
        bail!("--grid must be at least 2, got {grid}");
    }
    let header: Vec<String> = alphas.iter().map(|&a| format!("H_{}", g12(a))).collect();
    let mut out = format!("p,{}\n", header.join(","));
    for i in 0..grid {
        let p = i as f64 / (grid - 1) as f64;
        let mut row = vec![g12(p)];
        for &a in alphas {
            row.push(g12(binary_tsallis(p, a)?));
        }
        let _ = writeln!(out, "{}", row.join(","));
    }
    Ok(out)
}

pub fn cmd_figure(a: &FigureArgs) -> Result<String> {
    figure_csv(&a.alpha_list, a.grid)
}
