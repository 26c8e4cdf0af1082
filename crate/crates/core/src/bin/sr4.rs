// SPDX-License-Identifier: MIT

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use sr4::algebra::{Label, RepHandle};
use sr4::io;
use sr4::multivariate as mv;
use sr4::racah::{racah_p, racah_p_table, RacahParams};
use sr4::representation::{build_rep, dimension, validate, Quintuplet};
use sr4::symmetry::{vertex_of, Graph, GroupElement};
use sr4::transitions::{orthogonality_residual, transition};
use sr4::verify::{self, Suite};
use sr4::Error;

#[derive(Parser, Debug)]
#[command(name = "sr4", version, about = "Representations, transition matrices and polynomials of sR(4)")]
struct Cli {
    /// Quintuplet j1,j2,j3,j4,j0 (rationals such as 3/2 are accepted).
    #[arg(long, global = true, allow_hyphen_values = true)]
    j: Option<String>,
    /// Residual tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Output file (or directory for `rep build`); stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build a representation.
    Rep {
        #[command(subcommand)]
        cmd: RepCmd,
    },
    /// Run a verification suite: algebra, casimir, group, transitions, cycles, tratnik, griffiths or all.
    Verify {
        suite: String,
        /// Add this amount to one off-diagonal entry of C23 before checking.
        #[arg(long, allow_hyphen_values = true)]
        perturb: Option<f64>,
        /// Check matrices written by `rep build` instead of building them.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Transition matrix between two group elements given as words over s, t, i, r.
    Transition {
        /// Source vertex, e.g. `e` or `ts`.
        #[arg(long)]
        from: String,
        /// Target vertex.
        #[arg(long)]
        to: String,
    },
    /// Tabulate a polynomial family.
    Poly {
        #[command(subcommand)]
        family: PolyCmd,
    },
    /// Connection graph.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
}

#[derive(Subcommand, Debug)]
enum RepCmd {
    Build,
}

#[derive(Subcommand, Debug)]
enum GraphCmd {
    /// Write the 15 vertices and 30 edges of the connection graph.
    Export,
}

#[derive(Args, Debug)]
struct Indices {
    /// Row index: `n` for racah, `n1,n2` otherwise.
    #[arg(long)]
    n: Option<String>,
    /// Column index: `m` for racah, `m1,m2` otherwise.
    #[arg(long)]
    m: Option<String>,
}

#[derive(Subcommand, Debug)]
enum PolyCmd {
    /// Normalized univariate Racah polynomials.
    Racah {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long)]
        big_n: usize,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        #[command(flatten)]
        idx: Indices,
    },
    /// Bivariate Tratnik functions for the quintuplet given by --j.
    Tratnik {
        #[command(flatten)]
        idx: Indices,
    },
    /// Bivariate Griffiths functions for the quintuplet given by --j.
    Griffiths {
        #[command(flatten)]
        idx: Indices,
    },
}

/// Invalid input (exit 2) or failed verification (exit 1).
enum Fail {
    Input(String),
    Verify(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail::Input(e.to_string())
    }
}

type Out<T> = std::result::Result<T, Fail>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Verify(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Fail::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn quintuplet(cli: &Cli) -> Out<Option<Quintuplet>> {
    cli.j.as_deref().map(io::parse_quintuplet).transpose().map_err(Fail::from)
}

fn need_quintuplet(cli: &Cli) -> Out<Quintuplet> {
    quintuplet(cli)?.ok_or_else(|| Fail::Input("this command needs --j".into()))
}

fn emit(cli: &Cli, text: &str) -> Out<()> {
    match &cli.out {
        Some(p) => fs::write(p, text).map_err(|e| Fail::Input(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Out<()> {
    if !(cli.tol > 0.0) {
        return Err(Fail::Input(format!("--tol must be positive, got {}", cli.tol)));
    }
    match &cli.cmd {
        Cmd::Rep { cmd: RepCmd::Build } => rep_build(cli),
        Cmd::Verify { suite, perturb, input } => cmd_verify(cli, suite, *perturb, input.as_deref()),
        Cmd::Transition { from, to } => cmd_transition(cli, from, to),
        Cmd::Poly { family } => cmd_poly(cli, family),
        Cmd::Graph { cmd: GraphCmd::Export } => cmd_graph(cli),
    }
}

#[derive(Serialize, Deserialize)]
struct Manifest {
    j: [f64; 5],
    big_n: usize,
    dim: usize,
    basis: String,
    format: Format,
    files: BTreeMap<String, String>,
}

fn rep_build(cli: &Cli) -> Out<()> {
    let j = need_quintuplet(cli)?;
    let rep = build_rep(&j)?;
    let dir = cli.out.clone().unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&dir).map_err(|e| Fail::Input(format!("cannot create {}: {e}", dir.display())))?;
    let ext = match cli.format {
        Format::Json => "json",
        Format::Csv => "csv",
    };
    let mut files = BTreeMap::new();
    for l in Label::contiguous() {
        let m = rep.rep.get(l).expect("contiguous generator");
        let name = format!("{l}.{ext}");
        let body = match cli.format {
            Format::Json => io::matrix_to_json(m, &j),
            Format::Csv => io::matrix_to_csv(m),
        };
        write_file(&dir.join(&name), &body)?;
        files.insert(l.to_string(), name);
    }
    let manifest = Manifest {
        j: j.to_array(),
        big_n: rep.big_n,
        dim: dimension(rep.big_n),
        basis: io::BASIS_TAG.into(),
        format: cli.format,
        files,
    };
    write_file(&dir.join("manifest.json"), &json(&manifest))?;
    eprintln!("wrote {} generators, dim {}, to {}", Label::contiguous().len(), manifest.dim, dir.display());
    Ok(())
}

fn write_file(p: &Path, body: &str) -> Out<()> {
    fs::write(p, body).map_err(|e| Fail::Input(format!("cannot write {}: {e}", p.display())))
}

fn read_file(p: &Path) -> Out<String> {
    fs::read_to_string(p).map_err(|e| Fail::Input(format!("cannot read {}: {e}", p.display())))
}

fn load_rep(dir: &Path) -> Out<(RepHandle, Quintuplet)> {
    let m: Manifest = serde_json::from_str(&read_file(&dir.join("manifest.json"))?)
        .map_err(|e| Fail::Input(format!("bad manifest: {e}")))?;
    let j = Quintuplet::from_array(m.j);
    let mut mats = BTreeMap::new();
    for (name, file) in &m.files {
        let body = read_file(&dir.join(file))?;
        let mat = match m.format {
            Format::Json => io::matrix_from_json(&body)?.0,
            Format::Csv => io::matrix_from_csv(&body)?,
        };
        mats.insert(Label::parse(name)?, mat);
    }
    Ok((RepHandle::new(mats, j.mu())?, j))
}

fn cmd_verify(cli: &Cli, suite: &str, perturb: Option<f64>, input: Option<&Path>) -> Out<()> {
    let suite: Suite = suite.parse()?;
    let mut j = quintuplet(cli)?;
    let mut rep = None;
    if let Some(dir) = input {
        let (r, jj) = load_rep(dir)?;
        j = j.or(Some(jj));
        rep = Some(r);
    }
    if let Some(eps) = perturb {
        if !matches!(suite, Suite::Algebra | Suite::Casimir | Suite::All) {
            return Err(Fail::Input(format!("--perturb applies to the algebra, casimir and all suites, not {suite}")));
        }
        if rep.is_none() {
            let jj = j.ok_or_else(|| Fail::Input("this command needs --j".into()))?;
            rep = Some(build_rep(&jj)?.rep);
        }
        let r = rep.as_mut().unwrap();
        if r.dim() < 2 {
            return Err(Fail::Input("no off-diagonal entry to perturb".into()));
        }
        verify::perturb(r, Label::parse("23")?, 0, 1, eps)?;
    }
    let report = verify::run(suite, j.as_ref(), rep.as_ref(), cli.tol)?;
    let body = match cli.format {
        Format::Json => json(&report),
        Format::Csv => io::report_to_csv(&report),
    };
    emit(cli, &body)?;
    if report.passed() {
        Ok(())
    } else {
        let names: Vec<String> = report.failures().iter().map(|c| format!("{}: {}", c.suite, c.name)).collect();
        Err(Fail::Verify(format!("{} check(s) failed: {}", names.len(), names.join("; "))))
    }
}

fn cmd_transition(cli: &Cli, from: &str, to: &str) -> Out<()> {
    let j = need_quintuplet(cli)?;
    validate(&j)?;
    let h = GroupElement::from_word(from)?;
    let g = GroupElement::from_word(to)?;
    let t = transition(&h, &g, &j)?;
    eprintln!(
        "T from {} to {}: dim {}, orthogonality residual {:e}",
        vertex_of(&h),
        vertex_of(&g),
        t.matrix.nrows(),
        orthogonality_residual(&t.matrix)
    );
    let body = match cli.format {
        Format::Json => io::matrix_to_json(&t.matrix, &j),
        Format::Csv => io::matrix_to_csv(&t.matrix),
    };
    emit(cli, &body)
}

fn pair(s: &str) -> Out<(usize, usize)> {
    let v: Vec<&str> = s.split(',').collect();
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| Fail::Input(format!("bad index {x:?}: {e}")));
    match v.as_slice() {
        [a, b] => Ok((parse(a)?, parse(b)?)),
        _ => Err(Fail::Input(format!("expected two comma-separated indices, got {s:?}"))),
    }
}

#[derive(Serialize)]
struct Value {
    family: &'static str,
    n: Vec<usize>,
    m: Vec<usize>,
    value: f64,
}

fn cmd_poly(cli: &Cli, family: &PolyCmd) -> Out<()> {
    match family {
        PolyCmd::Racah { alpha, beta, big_n, delta, idx } => {
            let p = RacahParams::new(
                io::parse_rational(alpha)?,
                io::parse_rational(beta)?,
                *big_n,
                io::parse_rational(delta)?,
            );
            if let (Some(n), Some(m)) = (&idx.n, &idx.m) {
                let parse =
                    |x: &str| x.trim().parse::<usize>().map_err(|e| Fail::Input(format!("bad index {x:?}: {e}")));
                let (n, m) = (parse(n)?, parse(m)?);
                let v = racah_p(n, m, &p)?;
                return emit(cli, &json(&Value { family: "racah", n: vec![n], m: vec![m], value: v }));
            }
            let t = racah_p_table(&p)?;
            let body = match cli.format {
                Format::Json => json(&t),
                Format::Csv => {
                    t.iter().map(|r| r.iter().map(|x| format!("{x:?}")).collect::<Vec<_>>().join(",") + "\n").collect()
                }
            };
            emit(cli, &body)
        }
        PolyCmd::Tratnik { idx } | PolyCmd::Griffiths { idx } => {
            let j = need_quintuplet(cli)?;
            validate(&j)?;
            let tratnik = matches!(family, PolyCmd::Tratnik { .. });
            let name = if tratnik { "tratnik" } else { "griffiths" };
            if let (Some(n), Some(m)) = (&idx.n, &idx.m) {
                let ((n1, n2), (m1, m2)) = (pair(n)?, pair(m)?);
                let v = if tratnik { mv::tratnik(n1, n2, m1, m2, &j)? } else { mv::griffiths(n1, n2, m1, m2, &j)? };
                return emit(cli, &json(&Value { family: name, n: vec![n1, n2], m: vec![m1, m2], value: v }));
            }
            if idx.n.is_some() || idx.m.is_some() {
                return Err(Fail::Input("--n and --m must be given together".into()));
            }
            let t = if tratnik { mv::tratnik_table(&j)? } else { mv::griffiths_table(&j)? };
            let body = match cli.format {
                Format::Json => io::table_to_json(&t),
                Format::Csv => io::table_to_csv(&t),
            };
            emit(cli, &body)
        }
    }
}

#[derive(Serialize)]
struct GraphFile {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

fn cmd_graph(cli: &Cli) -> Out<()> {
    let g = Graph::build();
    let body = match cli.format {
        Format::Json => {
            json(&GraphFile { vertices: g.vertices.iter().map(|v| v.to_string()).collect(), edges: g.edges.clone() })
        }
        Format::Csv => {
            let mut s = String::from("from,to\n");
            for &(a, b) in &g.edges {
                s.push_str(&format!("\"{}\",\"{}\"\n", g.vertices[a], g.vertices[b]));
            }
            s
        }
    };
    emit(cli, &body)
}
