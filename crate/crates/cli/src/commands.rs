use std::io::Write;
use std::path::Path;

use chiforge_core::coloring::{
    chi_weighted_direct, chromatic_number, chromatic_number_weighted, clique_number, deletion_profile,
    ColoringCertificate, MAX_TOTAL_WEIGHT,
};
use chiforge_core::decompose::decompose_qp4;
use chiforge_core::patterns::{find_induced, GraphClass, Pattern};
use chiforge_core::{parse_graph6, write_graph6, Graph, VertexWeights};
use chiforge_harness::verify::{
    verify_c5_closed_form, verify_critical_structure, verify_decomposition, verify_dual_oracle, verify_p5c4_bound,
    verify_prime_dichotomy, verify_reduction, verify_reed_bound, verify_superadditivity, CriticalClass, ReductionPair,
};
use chiforge_harness::{CatalogSource, Extremal, HarnessError, Tally, VerificationReport};
use serde_json::json;
use thiserror::Error;

use crate::{Base, Cli, Command, VerifyArgs, WeightedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    Usage = 1,
    Malformed = 2,
    Failures = 3,
    Budget = 4,
    Internal = 5,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] chiforge_core::Error),
    #[error(transparent)]
    Harness(#[from] HarnessError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn status(&self) -> ExitStatus {
        use chiforge_core::Error as E;
        let core = match self {
            CliError::Usage(_) => return ExitStatus::Usage,
            CliError::Core(e) => e,
            CliError::Harness(HarnessError::Core(e)) | CliError::Harness(HarnessError::Catalog { source: e, .. }) => e,
            CliError::Harness(HarnessError::Io { .. }) => return ExitStatus::Malformed,
            CliError::Harness(HarnessError::Encode(_)) => return ExitStatus::Internal,
        };
        match core {
            E::Budget(_) => ExitStatus::Budget,
            E::Invariant(_) | E::Disagreement(_) => ExitStatus::Internal,
            _ => ExitStatus::Malformed,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Prints one block to stdout; a closed pipe is not an error.
fn say(text: &str) {
    let _ = writeln!(std::io::stdout(), "{text}");
}

fn emit(cli: &Cli, value: serde_json::Value, human: impl FnOnce() -> String) {
    if cli.json {
        say(&serde_json::to_string_pretty(&value).expect("JSON values serialize"));
    } else {
        say(&human());
    }
}

fn load(arg: &WeightedGraph) -> Result<(Graph, VertexWeights)> {
    let g = parse_graph6(arg.graph.trim())?;
    let q = match &arg.weights {
        Some(w) => VertexWeights::parse_csv(w)?,
        None => VertexWeights::ones(g.n()),
    };
    q.check_len(g.n())?;
    Ok((g, q))
}

fn colours_line(cert: &ColoringCertificate) -> String {
    cert.colours
        .iter()
        .enumerate()
        .map(|(u, c)| format!("{u}:{{{}}}", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn run(cli: &Cli) -> Result<ExitStatus> {
    match &cli.command {
        Command::Detect { graph, pattern } => {
            let g = parse_graph6(graph.trim())?;
            let p: Pattern = pattern.parse()?;
            let w = find_induced(&g, p.graph());
            emit(cli, json!({ "pattern": p.name(), "witness": w.as_ref().map(|w| &w.vertices) }), || match &w {
                Some(w) => format!("witness={w}"),
                None => "free".into(),
            });
        }
        Command::Color(arg) => {
            let (g, q) = load(arg)?;
            if arg.weights.is_none() {
                let (chi, cert) = chromatic_number(&g)?;
                emit(cli, json!({ "chi": chi, "certificate": cert }), || format!("chi={chi}\n{}", colours_line(&cert)));
            } else {
                let (chi, cert) = if q.total() <= MAX_TOTAL_WEIGHT {
                    chromatic_number_weighted(&g, &q)?
                } else {
                    chi_weighted_direct(&g, &q)?
                };
                emit(cli, json!({ "chi_q": chi, "certificate": cert }), || {
                    format!("chi_q={chi}\n{}", colours_line(&cert))
                });
            }
        }
        Command::Decompose(arg) => {
            let (g, q) = load(arg)?;
            let d = decompose_qp4(&g, &q)?;
            d.validate(&g, &q)?;
            emit(cli, serde_json::to_value(&d).expect("decomposition serializes"), || {
                let mut lines = vec![format!("parts={}", d.parts.len())];
                for p in &d.parts {
                    lines.push(format!(
                        "part {} quotient={} weights={:?}",
                        p.vertices,
                        write_graph6(&p.quotient),
                        p.weights.as_slice()
                    ));
                }
                lines.join("\n")
            });
        }
        Command::Critical { graph } => {
            let g = parse_graph6(graph.trim())?;
            if g.n() == 0 {
                return Err(chiforge_core::Error::InvalidArgument("criticality needs at least one vertex".into()).into());
            }
            let (chi, drops) = deletion_profile(&g)?;
            let critical = drops.iter().all(|&d| d < chi);
            emit(cli, json!({ "critical": critical, "chi": chi, "deletion_chi": drops }), || {
                let list: Vec<String> = drops.iter().map(|d| d.to_string()).collect();
                format!("critical={critical} chi={chi} deletion_chi={}", list.join(","))
            });
        }
        Command::Expand { base, weights } => {
            let b = match base {
                Base::C5 => Pattern::C5,
                Base::W5 => Pattern::W5,
            };
            let q = VertexWeights::parse_csv(weights)?;
            q.check_len(b.graph().n())?;
            let h = b.graph().expansion(&q)?;
            let text = write_graph6(&h);
            emit(cli, json!({ "graph6": text, "n": h.n() }), || text.clone());
        }
        Command::Verify(args) => return verify(cli, args),
        Command::Survey { source, class } => {
            let class: GraphClass = class.parse()?;
            let src = sources(source)?.with_class(class);
            let (tally, ext) = src.fold(
                || (Tally::default(), Extremal::default()),
                |(mut t, mut e), g| {
                    t.check();
                    if let Ok((chi, _)) = chromatic_number(g) {
                        e.observe(clique_number(g), chi, g);
                    }
                    (t, e)
                },
                |(t1, e1), (t2, e2)| (t1.merge(t2), e1.merge(e2)),
            )?;
            let id = format!("survey-{}", class.name());
            let report = VerificationReport::new(&id, src.to_string(), tally, ext.rows());
            return finish(cli, &report);
        }
    }
    Ok(ExitStatus::Ok)
}

fn sources(texts: &[String]) -> Result<CatalogSource> {
    let mut it = texts.iter();
    let first = it.next().ok_or_else(|| CliError::Usage("at least one --source is required".into()))?;
    it.try_fold(CatalogSource::parse(first)?, |acc, s| Ok(acc.and(CatalogSource::parse(s)?)))
}

fn verify(cli: &Cli, a: &VerifyArgs) -> Result<ExitStatus> {
    let id = a.theorem.trim();
    let report = match id {
        "c5-closed-form" => verify_c5_closed_form(a.max_total.unwrap_or(20))?,
        "dual-oracle" => verify_dual_oracle(a.seed, a.pairs, a.max_total.unwrap_or(18))?,
        "p5c4-bound" => verify_p5c4_bound(&sources(&a.source)?)?,
        "reed-bound" => verify_reed_bound(&sources(&a.source)?)?,
        "decomposition" => verify_decomposition(&sources(&a.source)?, a.seed)?,
        "prime-dichotomy" => verify_prime_dichotomy(&sources(&a.source)?)?,
        "superadditivity" => {
            let class = a
                .class
                .as_deref()
                .ok_or_else(|| CliError::Usage("superadditivity needs --class".into()))?
                .parse::<GraphClass>()?;
            verify_superadditivity(class, a.omega1, a.omega2, &sources(&a.source)?)?
        }
        _ => {
            if let Some(c) = CriticalClass::ALL.into_iter().find(|c| c.id() == id) {
                verify_critical_structure(c, &sources(&a.source)?)?
            } else if let Some(p) = ReductionPair::ALL.into_iter().find(|p| p.id() == id) {
                verify_reduction(p, &sources(&a.source)?)?
            } else {
                return Err(CliError::Usage(format!("unknown verifier {id:?}; known: {}", known_ids().join(", "))));
            }
        }
    };
    finish(cli, &report)
}

fn known_ids() -> Vec<&'static str> {
    let mut ids = vec!["c5-closed-form", "dual-oracle", "p5c4-bound", "reed-bound", "decomposition", "prime-dichotomy"];
    ids.extend(CriticalClass::ALL.map(|c| c.id()));
    ids.extend(ReductionPair::ALL.map(|p| p.id()));
    ids.push("superadditivity");
    ids
}

fn finish(cli: &Cli, report: &VerificationReport) -> Result<ExitStatus> {
    let (json_path, csv_path) = report.write_to(Path::new(&cli.out))?;
    if cli.json {
        say(&report.to_json()?);
    } else {
        say(&format!(
            "{}: {} checked, {} failures; wrote {} and {}",
            report.theorem,
            report.checked,
            report.failure_count,
            json_path.display(),
            csv_path.display()
        ));
    }
    Ok(if report.failures.is_empty() { ExitStatus::Ok } else { ExitStatus::Failures })
}
