use std::fs::{self, File};
use std::path::Path;

use rayon::prelude::*;
use serde_json::json;

use cbrauer::branching::{restriction_mult, restriction_row};
use cbrauer::cellular::cell_labels;
use cbrauer::combinatorics::Hasse;
use cbrauer::diagrams::DiagramJson;
use cbrauer::repcalc::{decomposition_matrix, semisimplicity_check, DecompositionMatrix};
use cbrauer::truncation::{
    decomposition_diff, decomposition_matrix_factorized, hom_direct, hom_factorized, ClassicalTables,
    TruncatedAlgebra,
};
use cbrauer::{Diagram, DiagramAlgebra, Error, MultiPartition, Params, Result};

use crate::args::{Command, DecompMode};
use crate::job::Job;
use crate::output::{csv_string, Output};

/// Largest basis listed or truncated from the command line.
const MAX_LISTED_BASIS: u128 = 50_000;

pub struct Outcome {
    pub output: Output,
    /// Set when the computation finished but a cross-check disagreed.
    pub mismatch: Option<String>,
}

impl From<Output> for Outcome {
    fn from(output: Output) -> Self {
        Outcome { output, mismatch: None }
    }
}

pub fn run(job: &Job, command: &Command) -> Result<Outcome> {
    match command {
        Command::Dim => dim(job).map(Into::into),
        Command::Basis => basis(job).map(Into::into),
        Command::Mul { left, right } => mul(job, left, right).map(Into::into),
        Command::Poset { component, down, display } => {
            poset(job, component.as_deref(), down.as_deref(), display.as_deref()).map(Into::into)
        }
        Command::RestrictMult { lambda, mu } => restrict_mult(job, lambda.as_deref(), mu.as_deref()),
        Command::Truncate { omega, all_pairs } => truncate(job, omega, *all_pairs).map(Into::into),
        Command::Hom { lambda, mu } => hom(job, lambda.as_deref(), mu.as_deref()),
        Command::Decomp { mode, tables, write_tables } => {
            decomp(job, *mode, tables.as_deref(), write_tables.as_deref())
        }
        Command::Semisimple => semisimple(job).map(Into::into),
        Command::Blocks => blocks(job).map(Into::into),
    }
}

fn parallel<T, R, F>(job: &Job, items: &[T], f: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R> + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(job.args.jobs)
        .build()
        .map_err(|e| Error::Validation(e.to_string()))?;
    pool.install(|| items.par_iter().map(&f).collect())
}

/// The algebra for commands whose answer does not depend on `δ`.
fn structural_algebra(job: &Job) -> Result<DiagramAlgebra> {
    if job.args.delta.is_some() || job.args.seed.is_some() {
        return job.algebra();
    }
    let ones = Params::from_ints(&vec![1; job.m() as usize]);
    Ok(DiagramAlgebra::cyclotomic(job.n(), &ones, job.oriented()))
}

fn guard_basis(job: &Job) -> Result<()> {
    let dim = DiagramAlgebra::expected_dim(job.m(), job.n());
    if dim > MAX_LISTED_BASIS {
        return Err(Error::Scale {
            what: "basis size",
            size: usize::try_from(dim).unwrap_or(usize::MAX),
            limit: MAX_LISTED_BASIS as usize,
        });
    }
    Ok(())
}

fn labels_or_all(job: &Job, alg: &DiagramAlgebra, given: Option<&str>) -> Result<Vec<MultiPartition>> {
    let all = cell_labels(alg);
    match given {
        None => Ok(all),
        Some(s) => {
            let l = job.label(s)?;
            if !all.contains(&l) {
                return Err(Error::Validation(format!("{l} is not a cell label for n = {}", job.n())));
            }
            Ok(vec![l])
        }
    }
}

fn dim(job: &Job) -> Result<Output> {
    let d = DiagramAlgebra::expected_dim(job.m(), job.n());
    Output::new("dim", d.to_string())
        .field("m", job.m())?
        .field("n", job.n())?
        .field("dim", d.to_string())
}

fn basis(job: &Job) -> Result<Output> {
    guard_basis(job)?;
    let alg = structural_algebra(job)?;
    let basis = alg.basis();
    let text: Vec<String> = basis.iter().map(|d| d.to_string()).collect();
    let json: Vec<DiagramJson> = basis.iter().map(|d| d.to_json(job.m())).collect();
    Output::new("basis", text.join("\n"))
        .field("m", job.m())?
        .field("n", job.n())?
        .field("dim", basis.len())?
        .field("basis", json)
}

fn read_diagram(path: &Path, alg: &DiagramAlgebra) -> Result<Diagram> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
    let j: DiagramJson = serde_json::from_str(&text)?;
    if j.n != alg.n() || j.m != alg.m() {
        return Err(Error::Validation(format!(
            "{} has n = {}, m = {}; expected n = {}, m = {}",
            path.display(),
            j.n,
            j.m,
            alg.n(),
            alg.m()
        )));
    }
    let d = Diagram::from_json(&j)?;
    alg.check(&d)?;
    Ok(d)
}

fn mul(job: &Job, left: &Path, right: &Path) -> Result<Output> {
    let alg = job.algebra()?;
    let x = read_diagram(left, &alg)?;
    let y = read_diagram(right, &alg)?;
    let (c, z) = alg.mul_diagrams(&x, &y);
    Output::new("mul", format!("({c}) {z}"))
        .field("params", job.params_json()?)?
        .field("coeff", c.to_string())?
        .field("coeff_exact", &c)?
        .field("diagram", z.to_json(job.m()))
}

fn parse_display(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::Validation(format!("bad display index {x:?}")))
        })
        .collect()
}

fn poset(job: &Job, component: Option<&str>, down: Option<&str>, display: Option<&str>) -> Result<Output> {
    let (m, n) = (job.m() as usize, job.n());
    let h = match (component, down) {
        (Some(c), _) => Hasse::component(m, n, &job.composition(c)?, job.variant())?,
        (None, Some(d)) => {
            let w = job.composition(d)?;
            if w.total() != n {
                return Err(Error::Validation(format!("{w} is not a composition of n = {n}")));
            }
            Hasse::down(&w, job.variant())
        }
        (None, None) => Hasse::full(m, n, job.variant()),
    };
    let perm = display.map(parse_display).transpose()?;
    let dot = h.to_dot(perm.as_deref())?;
    let show = |i: usize| {
        let v = &h.vertices[i];
        match &perm {
            Some(p) => {
                let e: Vec<String> = v.permuted(p).iter().map(|x| x.to_string()).collect();
                format!("({})", e.join(","))
            }
            None => v.to_string(),
        }
    };
    let mut vertices: Vec<String> = (0..h.vertices.len()).map(show).collect();
    vertices.sort();
    let mut edges: Vec<(String, String, String)> =
        h.edges.iter().map(|(a, b, s)| (show(*a), show(*b), s.label())).collect();
    edges.sort();
    let mut text = format!("{} vertices, {} edges\n", vertices.len(), edges.len());
    for (a, b, l) in &edges {
        text.push_str(&format!("{a} < {b}  [{l}]\n"));
    }
    let mut out = Output::new("poset", text)
        .field("m", m)?
        .field("n", n)?
        .field("vertices", &vertices)?
        .field(
            "edges",
            edges
                .iter()
                .map(|(a, b, l)| json!({"lower": a, "upper": b, "label": l}))
                .collect::<Vec<_>>(),
        )?;
    out.dot = Some(dot);
    Ok(out)
}

fn restrict_mult(job: &Job, lambda: Option<&str>, mu: Option<&str>) -> Result<Outcome> {
    let alg = structural_algebra(job)?;
    let lambdas = labels_or_all(job, &alg, lambda)?;
    let mus = match mu {
        Some(s) => {
            let l = job.label(s)?;
            if l.size() != job.n() {
                return Err(Error::Validation(format!("{l} is not an m-partition of {}", job.n())));
            }
            vec![l]
        }
        None => MultiPartition::all(job.m() as usize, job.n()),
    };
    let rows = parallel(job, &lambdas, |l| restriction_row(&alg, l))?;
    let mut cells = Vec::new();
    let mut csv_rows = Vec::new();
    let mut mismatches = 0;
    let mut text = String::new();
    for (l, row) in lambdas.iter().zip(&rows) {
        let mut csv_row = vec![l.to_string()];
        for u in &mus {
            let f = restriction_mult(l, u, job.variant())?;
            let o = row.get(u).copied().unwrap_or(0);
            if f != o {
                mismatches += 1;
                text.push_str(&format!("MISMATCH {l} -> {u}: formula {f}, oracle {o}\n"));
            } else if f != 0 {
                text.push_str(&format!("{l} -> {u}: {f}\n"));
            }
            csv_row.push(f.to_string());
            cells.push(json!({"lambda": l.to_string(), "mu": u.to_string(), "formula": f, "oracle": o}));
        }
        csv_rows.push(csv_row);
    }
    text.push_str(&format!("{} pairs, {mismatches} mismatches\n", cells.len()));
    let header: Vec<String> = std::iter::once("lambda".to_string())
        .chain(mus.iter().map(|u| u.to_string()))
        .collect();
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    let mut out = Output::new("restrict-mult", text)
        .field("m", job.m())?
        .field("n", job.n())?
        .field("unoriented", job.args.unoriented)?
        .field("cells", cells)?
        .field("mismatches", mismatches)?;
    out.csv = Some(csv_string(&header, &csv_rows)?);
    Ok(Outcome {
        output: out,
        mismatch: (mismatches > 0).then(|| format!("{mismatches} restriction multiplicities disagree")),
    })
}

fn truncate(job: &Job, omega: &str, all_pairs: bool) -> Result<Output> {
    guard_basis(job)?;
    let alg = job.algebra()?;
    let w = job.composition(omega)?;
    let t = TruncatedAlgebra::new(&alg, &w)?;
    let cert = t.certificate(all_pairs)?;
    let text = format!(
        "omega = {}\ndim B_omega = {}\nfactors: {}\nunit: {}\nproducts checked: {}\nstar checked: {}\nisomorphism verified\n",
        cert.omega,
        cert.truncated_dim,
        cert.factors.join(" x "),
        cert.unit,
        cert.products_checked,
        cert.star_checked
    );
    Output::new("truncate", text)
        .field("m", job.m())?
        .field("n", job.n())?
        .field("params", job.params_json()?)?
        .field("certificate", &cert)?
        .field("all_pairs", all_pairs)
}

fn hom(job: &Job, lambda: Option<&str>, mu: Option<&str>) -> Result<Outcome> {
    let alg = job.algebra()?;
    let lambdas = labels_or_all(job, &alg, lambda)?;
    let mus = labels_or_all(job, &alg, mu)?;
    let pairs: Vec<(MultiPartition, MultiPartition)> = lambdas
        .iter()
        .flat_map(|l| mus.iter().map(move |u| (l.clone(), u.clone())))
        .collect();
    let values = parallel(job, &pairs, |(l, u)| {
        Ok((hom_direct(&alg, l, u)?, hom_factorized(&alg, l, u)?))
    })?;
    let mut text = String::new();
    let mut cells = Vec::new();
    let mut rows = Vec::new();
    let mut mismatches = 0;
    for ((l, u), (d, f)) in pairs.iter().zip(&values) {
        if d != f {
            mismatches += 1;
            text.push_str(&format!("MISMATCH Hom({l}, {u}): direct {d}, factorized {f}\n"));
        } else if *d != 0 {
            text.push_str(&format!("Hom({l}, {u}) = {d}\n"));
        }
        cells.push(json!({"lambda": l.to_string(), "mu": u.to_string(), "direct": d, "factorized": f}));
        rows.push(vec![l.to_string(), u.to_string(), d.to_string(), f.to_string()]);
    }
    text.push_str(&format!("{} pairs, {mismatches} mismatches\n", pairs.len()));
    let mut out = Output::new("hom", text)
        .field("m", job.m())?
        .field("n", job.n())?
        .field("params", job.params_json()?)?
        .field("cells", cells)?
        .field("mismatches", mismatches)?;
    out.csv = Some(csv_string(&["lambda", "mu", "direct", "factorized"], &rows)?);
    Ok(Outcome {
        output: out,
        mismatch: (mismatches > 0).then(|| format!("{mismatches} Hom dimensions disagree")),
    })
}

fn matrix_text(d: &DecompositionMatrix) -> String {
    let names: Vec<String> = d.labels.iter().map(|l| l.to_string()).collect();
    let w = names.iter().map(String::len).max().unwrap_or(1).max(1);
    let mut s = format!("{:w$} |", "");
    for (j, _) in names.iter().enumerate() {
        s.push_str(&format!(" {j:>2}"));
    }
    s.push('\n');
    for (i, row) in d.entries.iter().enumerate() {
        s.push_str(&format!("{:w$} |", names[i]));
        for e in row {
            s.push_str(&format!(" {e:>2}"));
        }
        s.push_str(&format!("   ({i})\n"));
    }
    s
}

fn matrix_csv(d: &DecompositionMatrix) -> Result<String> {
    let mut rows = Vec::new();
    for (i, row) in d.entries.iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            if e != 0 {
                rows.push(vec![d.labels[i].to_string(), d.labels[j].to_string(), e.to_string()]);
            }
        }
    }
    csv_string(&["standard", "simple", "multiplicity"], &rows)
}

fn matrix_json(d: &DecompositionMatrix) -> serde_json::Value {
    json!({
        "labels": d.labels.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
        "simple": d.simple,
        "entries": d.entries,
    })
}

fn factorized_matrix(alg: &DiagramAlgebra, tables: Option<&Path>, write: Option<&Path>) -> Result<DecompositionMatrix> {
    let mut t = match tables {
        Some(p) => ClassicalTables::read_csv(
            File::open(p).map_err(|e| Error::Validation(format!("cannot read {}: {e}", p.display())))?,
        )?,
        None => ClassicalTables::new(),
    };
    let d = decomposition_matrix_factorized(alg, &mut t)?;
    if let Some(p) = write {
        t.write_csv(
            File::create(p).map_err(|e| Error::Validation(format!("cannot write {}: {e}", p.display())))?,
        )?;
    }
    Ok(d)
}

fn decomp(job: &Job, mode: DecompMode, tables: Option<&Path>, write: Option<&Path>) -> Result<Outcome> {
    let alg = job.algebra()?;
    let base = |name: &str, d: &DecompositionMatrix, text: String| -> Result<Output> {
        let mut out = Output::new("decomp", text)
            .field("m", job.m())?
            .field("n", job.n())?
            .field("params", job.params_json()?)?
            .field("mode", name)?
            .field("matrix", matrix_json(d))?;
        out.csv = Some(matrix_csv(d)?);
        Ok(out)
    };
    match mode {
        DecompMode::Direct => {
            let d = decomposition_matrix(&alg)?;
            Ok(base("direct", &d, matrix_text(&d))?.into())
        }
        DecompMode::Factorized => {
            let d = factorized_matrix(&alg, tables, write)?;
            Ok(base("factorized", &d, matrix_text(&d))?.into())
        }
        DecompMode::Diff => {
            let direct = decomposition_matrix(&alg)?;
            let fact = factorized_matrix(&alg, tables, write)?;
            let diff = decomposition_diff(&direct, &fact)?;
            let mut text = String::new();
            for e in &diff {
                text.push_str(&format!(
                    "[{} : L{}] direct {} factorized {}\n",
                    e.standard, e.simple, e.direct, e.factorized
                ));
            }
            text.push_str(&format!("{} differing entries\n", diff.len()));
            let rows: Vec<Vec<String>> = diff
                .iter()
                .map(|e| vec![e.standard.clone(), e.simple.clone(), e.direct.to_string(), e.factorized.to_string()])
                .collect();
            let mut out = base("diff", &direct, text)?.field("diff", &diff)?;
            out.csv = Some(csv_string(&["standard", "simple", "direct", "factorized"], &rows)?);
            let mismatch = (!diff.is_empty()).then(|| format!("{} decomposition numbers disagree", diff.len()));
            Ok(Outcome { output: out, mismatch })
        }
    }
}

fn semisimple(job: &Job) -> Result<Output> {
    let alg = job.algebra()?;
    let r = semisimplicity_check(&alg)?;
    let text = format!(
        "semisimple: {}\nradical dimension: {}\nalgebra dimension: {}\n",
        r.semisimple, r.radical_dim, r.algebra_dim
    );
    Output::new("semisimple", text)
        .field("m", job.m())?
        .field("n", job.n())?
        .field("params", job.params_json()?)?
        .field("report", &r)
}

fn blocks(job: &Job) -> Result<Output> {
    let alg = job.algebra()?;
    let d = decomposition_matrix(&alg)?;
    let blocks: Vec<Vec<String>> = d
        .blocks()
        .iter()
        .map(|b| b.iter().map(|l| l.to_string()).collect())
        .collect();
    let text: Vec<String> = blocks.iter().map(|b| format!("{{{}}}", b.join(", "))).collect();
    let mut out = Output::new("blocks", text.join("\n"))
        .field("m", job.m())?
        .field("n", job.n())?
        .field("params", job.params_json()?)?
        .field("blocks", &blocks)?;
    out.dot = Some(d.blocks_dot());
    Ok(out)
}
