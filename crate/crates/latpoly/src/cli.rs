//! The command-line surface. Each subcommand reads JSON polytope documents,
//! runs the corresponding library operation, and emits a report in human or
//! machine form. Exit codes: 0 on success, 1 when a verification check is
//! violated, 2 on input errors.

use std::ffi::OsString;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::adjunction::{adjoint_polytope, adjunction_profile, NefValue};
use crate::cayley::{cayley_decompose, cayley_sum};
use crate::defect::dual_defect;
use crate::document::{
    hrep_to_document, int_value, parse_polytope, rat_value, to_document,
};
use crate::faces::face_lattice;
use crate::polytope::LatticePolytope;
use crate::rat_string;
use crate::regularity::regularity_report;
use crate::report::{point_string, Format, Report};
use crate::verifier::{run_corpus, verify_equivalences, Check, ALL_CHECKS};
use crate::{parse_rat, Error, Rat, Result};

#[derive(Parser)]
#[command(
    name = "latpoly",
    about = "Exact lattice polytope toolkit: hulls, face sums, Cayley structures, adjunction",
    disable_help_subcommand = true
)]
struct Cli {
    /// report format
    #[arg(long, global = true, value_enum, default_value_t = CliFormat::Human)]
    format: CliFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliFormat {
    Human,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Convex hull: vertices and irredundant facet description
    Hull { file: PathBuf },
    /// Full face lattice with per-dimension counts
    Faces { file: PathBuf },
    /// Normalized lattice volume
    Volume { file: PathBuf },
    /// Simplicity, smoothness, edge lengths, jet level
    Regularity { file: PathBuf },
    /// Dual-defect report: alternating face sums and degree sequence
    Defect { file: PathBuf },
    /// Adjunction profile (mu, tau, cd, core); --s evaluates one adjoint
    Adjunction {
        /// adjoint parameter as `p/q`
        #[arg(long)]
        s: Option<String>,
        file: PathBuf,
    },
    /// Cayley sums: build from slices or detect decompositions
    Cayley {
        #[command(subcommand)]
        action: CayleyAction,
    },
    /// Smooth-polytope equivalence flags and their consistency
    Verify { file: PathBuf },
    /// Run checks over a line-delimited corpus file (`-` for stdin)
    Corpus {
        /// comma-separated subset of: equivalence,nonnegativity,order,roundtrip
        #[arg(long)]
        checks: Option<String>,
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum CayleyAction {
    /// Build the Cayley sum of two or more slice documents
    Build { files: Vec<PathBuf> },
    /// Detect decompositions onto the unimodular simplex of dimension t
    Detect {
        #[arg(long)]
        t: usize,
        file: PathBuf,
    },
}

struct Outcome {
    report: Report,
    violation: bool,
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn load_polytope(path: &Path) -> Result<(Option<String>, LatticePolytope)> {
    let text = read_input(path)?;
    let (name, parsed) = parse_polytope(&text)?;
    Ok((name, parsed.into_polytope()?))
}

fn nef_string(tau: &NefValue) -> String {
    match tau {
        NefValue::Finite(t) => rat_string(t),
        NefValue::Infinite => "infinity".into(),
    }
}

fn nef_value_json(tau: &NefValue) -> Value {
    match tau {
        NefValue::Finite(t) => rat_value(t),
        NefValue::Infinite => Value::String("infinity".into()),
    }
}

fn cmd_hull(file: &Path) -> Result<Outcome> {
    let text = read_input(file)?;
    let (name, parsed) = parse_polytope(&text)?;
    let p = parsed.into_polytope()?;
    let h = p.hrep();
    let mut report = Report::new(format!(
        "hull: {} vertices, {} facets, dimension {}",
        p.vertex_count(),
        h.a.rows(),
        p.dim()
    ));
    for v in p.vertices() {
        report.line(format!("  vertex {}", point_string(v)));
    }
    for i in 0..h.a.rows() {
        report.line(format!(
            "  facet {} . x >= {}",
            point_string(h.a.row(i)),
            rat_string(&h.b[i])
        ));
    }
    for i in 0..h.eq_a.rows() {
        report.line(format!(
            "  equality {} . x = {}",
            point_string(h.eq_a.row(i)),
            rat_string(&h.eq_b[i])
        ));
    }
    report.machine = json!({
        "dim": p.dim(),
        "polytope": to_document(&p, name.as_deref()),
        "hrep": hrep_to_document(&h, p.ambient_dim(), name.as_deref()),
    });
    Ok(Outcome {
        report,
        violation: false,
    })
}

fn cmd_faces(file: &Path) -> Result<Outcome> {
    let (name, p) = load_polytope(file)?;
    let lattice = face_lattice(&p);
    let counts = lattice.counts_by_dim();
    let mut report = Report::new(format!(
        "face lattice: counts by dimension {counts:?}"
    ));
    for f in &lattice.faces {
        report.line(format!("  dim {} vertices {:?}", f.dim, f.vertices));
    }
    let faces: Vec<Value> = lattice
        .faces
        .iter()
        .map(|f| {
            json!({
                "dim": f.dim,
                "vertices": f.vertices,
                "active_facets": f.active_facets,
            })
        })
        .collect();
    report.machine = json!({
        "name": name,
        "counts_by_dim": counts,
        "euler_characteristic": lattice.euler_characteristic(),
        "faces": faces,
    });
    Ok(Outcome {
        report,
        violation: false,
    })
}

fn cmd_volume(file: &Path) -> Result<Outcome> {
    let (name, p) = load_polytope(file)?;
    let vol = p.normalized_volume();
    let mut report = Report::new(format!("normalized volume: {vol}"));
    report.kv("dim", p.dim());
    report.machine = json!({
        "name": name,
        "dim": p.dim(),
        "normalized_volume": int_value(&vol),
    });
    Ok(Outcome {
        report,
        violation: false,
    })
}

fn cmd_regularity(file: &Path) -> Result<Outcome> {
    let (name, p) = load_polytope(file)?;
    let r = regularity_report(&p);
    let mut report = Report::new("regularity report");
    report.kv("simple", r.simple);
    report.kv("smooth", r.smooth);
    match &r.min_edge_length {
        Some(l) => report.kv("min_edge_length", l),
        None => report.kv("min_edge_length", "none (no edges)"),
    }
    if let Some(v) = r.offending_vertex {
        report.kv("offending_vertex", point_string(&p.vertices()[v]));
    }
    report.machine = json!({
        "name": name,
        "simple": r.simple,
        "smooth": r.smooth,
        "min_edge_length": r.min_edge_length.as_ref().map(int_value),
        "offending_vertex": r.offending_vertex,
    });
    Ok(Outcome {
        report,
        violation: false,
    })
}

fn cmd_defect(file: &Path) -> Result<Outcome> {
    let (name, p) = load_polytope(file)?;
    let r = dual_defect(&p)?;
    let mut report = Report::new("dual defect report");
    report.kv("chern_sum", &r.chern_sum);
    for (i, d) in &r.delta {
        report.kv(&format!("delta_{i}"), d);
    }
    report.kv("defective", r.defective);
    match (&r.codim, &r.degree) {
        (Some(c), Some(d)) => {
            report.kv("dual_codim", c);
            report.kv("dual_degree", d);
        }
        _ => report.kv("dual_codim", "undetermined"),
    }
    if r.degenerate_embedding_suspected {
        report.line("  note: first nonzero delta is negative; degenerate embedding suspected");
    }
    if r.euler_obstruction_warning {
        report.line("  warning: input is simple but not smooth; values assume trivial Euler obstructions");
    }
    let deltas: Value = Value::Object(
        r.delta
            .iter()
            .map(|(i, d)| (i.to_string(), int_value(d)))
            .collect(),
    );
    report.machine = json!({
        "name": name,
        "chern_sum": int_value(&r.chern_sum),
        "delta": deltas,
        "codim": r.codim,
        "degree": r.degree.as_ref().map(int_value),
        "defective": r.defective,
        "degenerate_embedding_suspected": r.degenerate_embedding_suspected,
        "euler_obstruction_warning": r.euler_obstruction_warning,
    });
    Ok(Outcome {
        report,
        violation: false,
    })
}

fn cmd_adjunction(s: Option<&str>, file: &Path) -> Result<Outcome> {
    let (name, p) = load_polytope(file)?;
    if let Some(s_text) = s {
        let s: Rat = parse_rat(s_text)?;
        let adj = adjoint_polytope(&p, &s)?;
        let mut report = Report::new(format!("adjoint polytope at s = {}", rat_string(&s)));
        report.kv("empty", adj.is_empty());
        if let Some(d) = adj.dim {
            report.kv("dim", d);
        }
        for v in &adj.vertices {
            report.line(format!(
                "  vertex {}",
                point_string(&v.iter().map(rat_string).collect::<Vec<_>>())
            ));
        }
        report.machine = json!({
            "name": name,
            "s": rat_value(&s),
            "empty": adj.is_empty(),
            "dim": adj.dim,
            "vertices": adj.vertices.iter()
                .map(|v| Value::Array(v.iter().map(rat_value).collect()))
                .collect::<Vec<_>>(),
            "facet_rows": adj.facet_rows,
        });
        return Ok(Outcome {
            report,
            violation: false,
        });
    }
    let profile = adjunction_profile(&p)?;
    let mut report = Report::new("adjunction profile");
    report.kv("q_codegree (mu)", rat_string(&profile.mu));
    report.kv("nef_value (tau)", nef_string(&profile.tau));
    report.kv("codegree (cd)", profile.cd);
    report.kv(
        "core",
        format!(
            "dim {} with {} vertices at s = {}",
            profile.core.dim.map_or("empty".into(), |d| d.to_string()),
            profile.core.vertices.len(),
            rat_string(&profile.core.s)
        ),
    );
    for v in &profile.core.vertices {
        report.line(format!(
            "  core vertex {}",
            point_string(&v.iter().map(rat_string).collect::<Vec<_>>())
        ));
    }
    report.machine = json!({
        "name": name,
        "mu": rat_value(&profile.mu),
        "tau": nef_value_json(&profile.tau),
        "cd": profile.cd,
        "core": {
            "s": rat_value(&profile.core.s),
            "dim": profile.core.dim,
            "vertices": profile.core.vertices.iter()
                .map(|v| Value::Array(v.iter().map(rat_value).collect()))
                .collect::<Vec<_>>(),
        },
    });
    Ok(Outcome {
        report,
        violation: false,
    })
}

fn cmd_cayley_build(files: &[PathBuf]) -> Result<Outcome> {
    if files.len() < 2 {
        return Err(Error::InvalidParameter(
            "cayley build needs at least two slice documents".into(),
        ));
    }
    let mut slices = Vec::with_capacity(files.len());
    for f in files {
        slices.push(load_polytope(f)?.1);
    }
    let sum = cayley_sum(&slices)?;
    let mut report = Report::new(format!(
        "Cayley sum of {} slices: dimension {}, {} vertices",
        slices.len(),
        sum.dim(),
        sum.vertex_count()
    ));
    for v in sum.vertices() {
        report.line(format!("  vertex {}", point_string(v)));
    }
    report.machine = to_document(&sum, None);
    Ok(Outcome {
        report,
        violation: false,
    })
}

fn cmd_cayley_detect(t: usize, file: &Path) -> Result<Outcome> {
    let (name, p) = load_polytope(file)?;
    let decs = cayley_decompose(&p, t)?;
    let mut report = Report::new(format!(
        "{} Cayley decomposition(s) of length {} found",
        decs.len(),
        t + 1
    ));
    for (i, d) in decs.iter().enumerate() {
        report.line(format!(
            "  [{}] fibers {:?}, normally equivalent slices: {}",
            i, d.fibers, d.slices_normally_equivalent
        ));
    }
    let machine_decs: Vec<Value> = decs
        .iter()
        .map(|d| {
            json!({
                "fibers": d.fibers,
                "slices_normally_equivalent": d.slices_normally_equivalent,
                "projection_rows": (0..d.projection.rows())
                    .map(|i| Value::Array(d.projection.row(i).iter().map(int_value).collect()))
                    .collect::<Vec<_>>(),
                "projection_offsets": d.offset.iter().map(int_value).collect::<Vec<_>>(),
                "slices": d.slices.iter().map(|s| to_document(s, None)).collect::<Vec<_>>(),
            })
        })
        .collect();
    report.machine = json!({
        "name": name,
        "t": t,
        "decompositions": machine_decs,
    });
    Ok(Outcome {
        report,
        violation: false,
    })
}

fn cmd_verify(file: &Path) -> Result<Outcome> {
    let (name, p) = load_polytope(file)?;
    let rep = verify_equivalences(&p)?;
    let mut report = Report::new(format!(
        "equivalence report: consistent = {}",
        rep.consistent
    ));
    report.kv("dim", rep.dim);
    report.kv("cd", rep.cd);
    report.kv("mu", rat_string(&rep.mu));
    report.kv("tau", nef_string(&rep.tau));
    report.kv("chern_sum", &rep.chern_sum);
    report.kv("flag_a (Cayley structure of length cd, t > n/2)", rep.flag_a);
    report.kv("flag_b (cd >= (n+3)/2 and tau = mu)", rep.flag_b);
    report.kv("flag_d (alternating face sum vanishes)", rep.flag_d);
    if let Some(w) = &rep.witness {
        report.line(format!("  witness fibers: {:?}", w.fibers));
    }
    report.machine = json!({
        "name": name,
        "dim": rep.dim,
        "cd": rep.cd,
        "mu": rat_value(&rep.mu),
        "tau": nef_value_json(&rep.tau),
        "chern_sum": int_value(&rep.chern_sum),
        "flag_a": rep.flag_a,
        "flag_b": rep.flag_b,
        "flag_d": rep.flag_d,
        "consistent": rep.consistent,
        "witness_fibers": rep.witness.as_ref().map(|w| w.fibers.clone()),
    });
    Ok(Outcome {
        report,
        violation: !rep.consistent,
    })
}

fn parse_checks(text: Option<&str>) -> Result<Vec<Check>> {
    let Some(text) = text else {
        return Ok(ALL_CHECKS.to_vec());
    };
    let mut checks = Vec::new();
    for part in text.split(',') {
        let check = match part.trim() {
            "equivalence" => Check::Equivalence,
            "nonnegativity" => Check::Nonnegativity,
            "order" => Check::OrderInvariants,
            "roundtrip" => Check::RoundTrips,
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown check `{other}` (expected equivalence, nonnegativity, order, roundtrip)"
                )))
            }
        };
        if !checks.contains(&check) {
            checks.push(check);
        }
    }
    Ok(checks)
}

fn cmd_corpus(checks: Option<&str>, file: &Path) -> Result<Outcome> {
    let checks = parse_checks(checks)?;
    // stream the line-delimited corpus: documents are parsed and realized
    // one line at a time, the raw text is never held in full
    let mut reader: Box<dyn std::io::BufRead> = if file.as_os_str() == "-" {
        Box::new(std::io::BufReader::new(std::io::stdin()))
    } else {
        Box::new(std::io::BufReader::new(std::fs::File::open(file)?))
    };
    let mut corpus = Vec::new();
    let mut names = Vec::new();
    for (lineno, line) in std::io::BufRead::lines(&mut reader).enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let (name, parsed) = parse_polytope(&line).map_err(|e| {
            Error::Document(format!("line {}: {e}", lineno + 1))
        })?;
        corpus.push(parsed.into_polytope().map_err(|e| {
            Error::Document(format!("line {}: {e}", lineno + 1))
        })?);
        names.push(name);
    }
    let report_data = run_corpus(&corpus, &checks);
    let violations = report_data.violations();
    let mut report = Report::new(format!(
        "corpus: {} members, {} violation(s)",
        corpus.len(),
        violations.len()
    ));
    let smooth_count = report_data.members.iter().filter(|m| m.smooth).count();
    report.kv("smooth members", smooth_count);
    for (idx, v) in &violations {
        let label = names[*idx].clone().unwrap_or_else(|| format!("#{idx}"));
        report.line(format!("  violation in {label}: {v}"));
    }
    let members: Vec<Value> = report_data
        .members
        .iter()
        .map(|m| {
            json!({
                "index": m.index,
                "name": names[m.index],
                "smooth": m.smooth,
                "violations": m.violations,
                "consistent": m.equivalence.as_ref().map(|e| e.consistent),
            })
        })
        .collect();
    report.machine = json!({
        "members": members,
        "violations": violations.len(),
    });
    Ok(Outcome {
        report,
        violation: !violations.is_empty(),
    })
}

/// Runs the CLI on explicit arguments, printing the report to stdout.
/// Returns the process exit code: 0 success, 1 check violation, 2 input
/// error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage; version/help requests are
            // successes, anything else is an input error
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let format = match cli.format {
        CliFormat::Human => Format::Human,
        CliFormat::Machine => Format::Machine,
    };
    let outcome = match &cli.command {
        Command::Hull { file } => cmd_hull(file),
        Command::Faces { file } => cmd_faces(file),
        Command::Volume { file } => cmd_volume(file),
        Command::Regularity { file } => cmd_regularity(file),
        Command::Defect { file } => cmd_defect(file),
        Command::Adjunction { s, file } => cmd_adjunction(s.as_deref(), file),
        Command::Cayley { action } => match action {
            CayleyAction::Build { files } => cmd_cayley_build(files),
            CayleyAction::Detect { t, file } => cmd_cayley_detect(*t, file),
        },
        Command::Verify { file } => cmd_verify(file),
        Command::Corpus { checks, file } => cmd_corpus(checks.as_deref(), file),
    };
    match outcome {
        Ok(out) => {
            print!("{}", out.report.render(format));
            if out.violation {
                1
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_doc(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn defect_subcommand_on_two_delta2() {
        let doc = write_doc(r#"{"ambient_dim": 2, "vertices": [[0,0],[2,0],[0,2]]}"#);
        let code = run([
            "latpoly",
            "defect",
            doc.path().to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
    }

    #[test]
    fn unknown_subcommand_exits_2() {
        assert_eq!(run(["latpoly", "bogus"]), 2);
        assert_eq!(run(["latpoly", "defect", "--no-such-flag", "x"]), 2);
    }

    #[test]
    fn missing_file_exits_2() {
        assert_eq!(run(["latpoly", "volume", "/nonexistent/path.json"]), 2);
    }

    #[test]
    fn verify_consistent_exits_0() {
        let doc = write_doc(
            r#"{"ambient_dim": 3,
                "vertices": [[0,0,0],[1,0,0],[0,1,0],[1,1,0],[0,0,1],[1,0,1]]}"#,
        );
        assert_eq!(run(["latpoly", "verify", doc.path().to_str().unwrap()]), 0);
    }

    #[test]
    fn corpus_subcommand_streams_lines() {
        let doc = write_doc(concat!(
            r#"{"name": "sq", "ambient_dim": 2, "vertices": [[0,0],[1,0],[0,1],[1,1]]}"#,
            "\n",
            r#"{"name": "tri", "ambient_dim": 2, "vertices": [[0,0],[1,0],[0,1]]}"#,
            "\n"
        ));
        assert_eq!(
            run([
                "latpoly",
                "corpus",
                "--checks",
                "order,roundtrip",
                doc.path().to_str().unwrap()
            ]),
            0
        );
    }
}
