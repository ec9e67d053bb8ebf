//! Argument definitions and command dispatch.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use forestep::erdosposa::{
    ep_duality, fpt_pw_deletion_with, Family, FptConfig, Mode, Oracle, DEFAULT_ORACLE_CAP, MAX_ORACLE_CAP,
};
use forestep::experiment::ratio_experiment;
use forestep::minors::{deletion_folio, find_model, find_rooted_model, q_folio, CanonicalRootedGraph, MinorModel};
use forestep::pathwidth::{PathDecomposition, PathwidthSolver};
use forestep::{ErdosPosaError, MinorError, PathwidthError};
use thiserror::Error;

use crate::document::CertificateDocument;
use crate::family_spec::{parse_family, Member, SpecError};
use crate::graph_file::{parse_graph_file, GraphFile, ParseError};

#[derive(Debug, Parser)]
#[command(name = "forestep", version, about = "Packing and covering certificates for excluded forest minors")]
pub struct Cli {
    /// Vertex cap of the exhaustive packing/covering oracles (default 12, at most 24).
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact pathwidth with a witness decomposition.
    Pathwidth {
        file: PathBuf,
        /// Only decide whether the pathwidth is at most this value.
        #[arg(long)]
        at_most: Option<usize>,
    },
    /// A packing and a transversal of comparable size.
    Duality {
        file: PathBuf,
        /// Comma-separated members, e.g. `K3,P4` or `2K2,@tree.txt`.
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "practical", value_parser = parse_mode)]
        mode: Mode,
        /// Write the certificate document here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Exact packing/covering ratios on the complete graph and random samples.
    Ratio {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the table here instead of standard output.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Whether PATTERN is a minor of HOST; rooted when both files list roots.
    Minor { pattern: PathBuf, host: PathBuf },
    /// Maximum packing by exhaustive search.
    Nu {
        file: PathBuf,
        #[arg(long)]
        family: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Minimum transversal by exhaustive search.
    Tau {
        file: PathBuf,
        #[arg(long)]
        family: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// At most K deletions that bring the pathwidth below T.
    Fpt {
        file: PathBuf,
        #[arg(short = 't', long = "below")]
        t: usize,
        #[arg(short = 'k', long = "budget")]
        k: usize,
        #[arg(long, default_value = "practical", value_parser = parse_mode)]
        mode: Mode,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Rooted minors on at most Q vertices, or the P-deletion folio.
    Folio {
        file: PathBuf,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        p: Option<usize>,
    },
    /// Re-check a certificate document against its graph.
    Verify { document: PathBuf, graph: PathBuf },
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

/// How a successful run ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    /// A definite "no": not a minor, no small deletion set, rejected document.
    Negative,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<ErdosPosaError> for CliError {
    fn from(e: ErdosPosaError) -> Self {
        if e.is_budget() {
            CliError::Budget(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<MinorError> for CliError {
    fn from(e: MinorError) -> Self {
        ErdosPosaError::from(e).into()
    }
}

impl From<PathwidthError> for CliError {
    fn from(e: PathwidthError) -> Self {
        ErdosPosaError::from(e).into()
    }
}

impl From<SpecError> for CliError {
    fn from(e: SpecError) -> Self {
        CliError::Input(format!("family: {e}"))
    }
}

fn io_error(path: &Path, e: std::io::Error) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| io_error(path, e))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| io_error(path, e))
}

fn read_graph(path: &Path) -> Result<GraphFile, CliError> {
    parse_graph_file(&read(path)?).map_err(|e: ParseError| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_family(spec: &str) -> Result<(Vec<Member>, Family), CliError> {
    let members = parse_family(spec, Path::new("."))?;
    let fam = Family::new(members.iter().map(|m| m.graph.clone()).collect())?;
    Ok((members, fam))
}

fn join(items: impl IntoIterator<Item = usize>) -> String {
    items.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn bags(pd: &PathDecomposition) -> String {
    let mut s = String::new();
    for (i, b) in pd.bags.iter().enumerate() {
        writeln!(s, "bag {}: {}", i + 1, join(b.iter().copied())).expect("writing to a string");
    }
    s
}

fn model_lines(m: &MinorModel) -> String {
    let mut s = String::new();
    for (i, b) in m.branch_sets.iter().enumerate() {
        writeln!(s, "  {i}: {}", join(b.iter().copied())).expect("writing to a string");
    }
    s
}

fn describe(c: &CanonicalRootedGraph) -> String {
    let rg = c.to_rooted_graph();
    let edges: Vec<String> = rg.graph().edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} roots=[{}] edges=[{}]", rg.n(), join(rg.roots().iter().copied()), edges.join(" "))
}

/// Runs one command, writing the report to `out` and warnings to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status, CliError> {
    let mut report = String::new();
    let mut warnings = String::new();
    let oracle = match cli.cap {
        Some(cap) => {
            writeln!(
                warnings,
                "warning: oracle cap set to {} (default {DEFAULT_ORACLE_CAP}); the exhaustive tables hold 2^n entries",
                cap.min(MAX_ORACLE_CAP)
            )
            .expect("writing to a string");
            if cap > MAX_ORACLE_CAP {
                writeln!(warnings, "warning: requested cap {cap} lowered to the hard limit {MAX_ORACLE_CAP}")
                    .expect("writing to a string");
            }
            Oracle::with_cap(cap)
        }
        None => Oracle::default(),
    };
    let status = dispatch(cli, &oracle, &mut report, &mut warnings);
    err.write_all(warnings.as_bytes()).map_err(|e| CliError::Input(e.to_string()))?;
    out.write_all(report.as_bytes()).map_err(|e| CliError::Input(e.to_string()))?;
    status
}

fn dispatch(cli: &Cli, oracle: &Oracle, report: &mut String, warnings: &mut String) -> Result<Status, CliError> {
    let w = |s: &mut String, text: String| s.push_str(&text);
    match &cli.command {
        Command::Pathwidth { file, at_most } => {
            let g = read_graph(file)?.graph;
            let solver = PathwidthSolver::default();
            match at_most {
                None => {
                    let (width, pd) = solver.exact(&g)?;
                    w(report, format!("pathwidth {width}\n{}", bags(&pd)));
                    Ok(Status::Success)
                }
                Some(t) => match solver.at_most(&g, *t)? {
                    Some(pd) => {
                        w(report, format!("yes\n{}", bags(&pd)));
                        Ok(Status::Success)
                    }
                    None => {
                        w(report, "no\n".into());
                        Ok(Status::Negative)
                    }
                },
            }
        }
        Command::Duality { file, family, mode, json } => {
            let g = read_graph(file)?.graph;
            let (members, fam) = read_family(family)?;
            let cert = ep_duality(&fam, &g, *mode)?;
            if cert.degraded {
                w(warnings, "warning: faithful mode fell back to practical steps for part of the run\n".into());
            }
            let doc = CertificateDocument::duality(&g, &members, &cert);
            let verdict = doc.verify(&g);
            w(
                report,
                format!(
                    "mode {}\npacking {}\ntransversal {}\nratio {:.6}\nconstant {}\n",
                    cert.mode,
                    cert.packing.size(),
                    cert.transversal.size(),
                    cert.ratio(),
                    cert.constant_used
                ),
            );
            finish(doc, verdict, json.as_deref(), report)
        }
        Command::Ratio { family, n, samples, seed, csv } => {
            let (_, fam) = read_family(family)?;
            let result = ratio_experiment(oracle, &fam, *n, *samples, *seed)?;
            let (hist, excluded) = result.histogram();
            let mut summary = match result.max_ratio() {
                Some(r) => format!("max ratio {r:.6} over {} rows\n", result.rows.len() - excluded),
                None => "max ratio undefined: every row has nu = 0\n".to_string(),
            };
            for ((tau, nu), count) in &hist {
                writeln!(summary, "tau/nu {tau}/{nu}: {count}").expect("writing to a string");
            }
            writeln!(summary, "excluded (nu = 0): {excluded}").expect("writing to a string");
            match csv {
                Some(path) => {
                    write_file(path, &result.to_csv())?;
                    w(report, summary);
                }
                None => {
                    w(report, result.to_csv());
                    w(warnings, summary);
                }
            }
            Ok(Status::Success)
        }
        Command::Minor { pattern, host } => {
            let (h, g) = (read_graph(pattern)?, read_graph(host)?);
            let found = match (h.rooted(), g.rooted()) {
                (Some(hr), Some(gr)) => find_rooted_model(&hr, &gr)?,
                (None, None) => find_model(&h.graph, &g.graph)?,
                _ => return Err(CliError::Input("either both files list roots or neither does".into())),
            };
            match found {
                Some(m) => {
                    w(report, format!("yes\n{}", model_lines(&m)));
                    Ok(Status::Success)
                }
                None => {
                    w(report, "no\n".into());
                    Ok(Status::Negative)
                }
            }
        }
        Command::Nu { file, family, json } => {
            let g = read_graph(file)?.graph;
            let (members, fam) = read_family(family)?;
            let (nu, packing) = oracle.nu(&fam, &g)?;
            w(report, format!("nu {nu}\n"));
            for (i, (member, m)) in packing.models.iter().enumerate() {
                w(report, format!("model {} of {}\n{}", i + 1, members[*member].name, model_lines(m)));
            }
            let doc = CertificateDocument::packing(&g, &members, &packing);
            let verdict = doc.verify(&g);
            finish(doc, verdict, json.as_deref(), report)
        }
        Command::Tau { file, family, json } => {
            let g = read_graph(file)?.graph;
            let (members, fam) = read_family(family)?;
            let (tau, x) = oracle.tau(&fam, &g)?;
            w(report, format!("tau {tau}\ntransversal {}\n", join(x.vertices.iter().copied())));
            let doc = CertificateDocument::transversal(&g, &members, &x);
            let verdict = doc.verify(&g);
            finish(doc, verdict, json.as_deref(), report)
        }
        Command::Fpt { file, t, k, mode, json } => {
            let g = read_graph(file)?.graph;
            let cfg = FptConfig::new(*mode);
            match fpt_pw_deletion_with(&cfg, &g, *t, *k)? {
                Some(x) => {
                    w(report, format!("yes\ndelete {}\n", join(x.iter().copied())));
                    let doc = CertificateDocument::fpt(&g, *t, *k, &x);
                    let verdict = doc.verify(&g);
                    finish(doc, verdict, json.as_deref(), report)
                }
                None => {
                    w(report, "no\n".into());
                    Ok(Status::Negative)
                }
            }
        }
        Command::Folio { file, q, p } => {
            let gf = read_graph(file)?;
            let rg = gf.rooted().ok_or_else(|| CliError::Input("folios need a roots line".into()))?;
            match p {
                None => {
                    let folio = q_folio(&rg, *q)?;
                    for (positions, minors) in &folio.entries {
                        w(report, format!("roots [{}]: {} minors\n", join(positions.iter().copied()), minors.len()));
                        for c in minors {
                            w(report, format!("  {}\n", describe(c)));
                        }
                    }
                }
                Some(p) => {
                    let df = deletion_folio(&rg, *p, *q)?;
                    for (i, layer) in df.layers.iter().enumerate() {
                        for (deleted, folios) in layer {
                            let sizes: Vec<usize> = folios.iter().map(|f| f.size()).collect();
                            w(
                                report,
                                format!(
                                    "layer {i} deleted roots [{}]: {} folios, sizes {}\n",
                                    join(deleted.iter().copied()),
                                    folios.len(),
                                    join(sizes)
                                ),
                            );
                        }
                    }
                }
            }
            Ok(Status::Success)
        }
        Command::Verify { document, graph } => {
            let doc = CertificateDocument::from_json(&read(document)?)
                .map_err(|e| CliError::Input(format!("{}: {e}", document.display())))?;
            let g = read_graph(graph)?.graph;
            match doc.verify(&g) {
                Ok(()) => {
                    w(report, "verified\n".into());
                    Ok(Status::Success)
                }
                Err(reason) => {
                    w(report, format!("rejected: {reason}\n"));
                    Ok(Status::Negative)
                }
            }
        }
    }
}

/// Self-check before writing; a document that fails its own check is never
/// written.
fn finish(
    doc: CertificateDocument,
    verdict: Result<(), String>,
    json: Option<&Path>,
    report: &mut String,
) -> Result<Status, CliError> {
    if let Err(reason) = verdict {
        writeln!(report, "self-check failed: {reason}").expect("writing to a string");
        return Ok(Status::Negative);
    }
    report.push_str("verified\n");
    if let Some(path) = json {
        write_file(path, &doc.to_json())?;
    }
    Ok(Status::Success)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn arguments_are_consistent() {
        Cli::command().debug_assert();
    }
}
