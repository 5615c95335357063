use std::time::Instant;

use ccr::chordal::{solve_chordal_cj, solve_equal_size_cj};
use ccr::cograph::{is_cograph, solve_cograph_cs};
use ccr::generate::{generate_instance, GraphKind};
use ccr::oracle::{enumerate_states, export_dot, oracle_solve};
use ccr::path::{self, CompressedMove, PathLayout};
use ccr::rules::{expand_sequence_to_cs1, Violation};
use ccr::solution::reason;
use ccr::{verify_sequence, Answer, Graph, Rule, SizeMultiset, Solution};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, EXIT_NO, EXIT_UNKNOWN, EXIT_YES};
use crate::instance::{GraphJson, Instance, InstanceFile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Algorithm {
    Auto,
    Path,
    Cograph,
    Chordal,
    Oracle,
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub algorithm: Algorithm,
    pub fallback_oracle: bool,
    pub compressed: bool,
    pub state_cap: usize,
    pub check_chordal: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            algorithm: Algorithm::Auto,
            fallback_oracle: false,
            compressed: false,
            state_cap: ccr::oracle::DEFAULT_STATE_CAP,
            check_chordal: true,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub elapsed_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub states: Option<usize>,
}

/// Output of `solve` and `oracle`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub answer: Answer,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub rule: Rule,
    pub algorithm: String,
    /// Present only when the sequence is known to be shortest.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distance: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sequence: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub moves: Option<Vec<CompressedMove>>,
    pub stats: Stats,
}

impl Report {
    fn new(answer: Answer, reason: Option<&str>, rule: Rule, algorithm: &str) -> Self {
        Report {
            answer,
            reason: reason.map(str::to_owned),
            rule,
            algorithm: algorithm.to_owned(),
            distance: None,
            length: None,
            sequence: None,
            moves: None,
            stats: Stats::default(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.answer {
            Answer::Yes => EXIT_YES,
            Answer::No => EXIT_NO,
            Answer::Unknown => EXIT_UNKNOWN,
        }
    }
}

fn resolve_rule(inst: &Instance, rule: Option<Rule>) -> Result<Rule, CliError> {
    rule.or(inst.rule).ok_or_else(|| {
        CliError::invalid("invalid-instance", "no rule given (use --rule or \"rule\")")
    })
}

fn auto_algorithm(g: &Graph, rule: Rule, m: &SizeMultiset) -> Algorithm {
    if g.is_path() && matches!(rule, Rule::CS | Rule::CS1 | Rule::CJ) {
        Algorithm::Path
    } else if matches!(rule, Rule::CS | Rule::CS1) && is_cograph(g) {
        Algorithm::Cograph
    } else if rule == Rule::CJ && m.uniform_size().is_some() {
        Algorithm::Chordal
    } else {
        Algorithm::Oracle
    }
}

fn from_solution(
    inst: &Instance,
    rule: Rule,
    sol: Solution,
    algorithm: &str,
    shortest: bool,
) -> Result<Report, CliError> {
    let mut report = Report::new(sol.answer, sol.reason, rule, algorithm);
    if let Some(seq) = sol.sequence(&inst.graph, rule, &inst.a)? {
        report.length = Some(seq.len());
        report.distance = shortest.then_some(seq.len());
        report.sequence = Some(seq.vertex_sets());
    }
    Ok(report)
}

fn run_path(inst: &Instance, rule: Rule, compressed: bool) -> Result<Report, CliError> {
    let g = &inst.graph;
    let layout = PathLayout::new(g)?;
    let sol = match rule {
        Rule::CS | Rule::CS1 => path::solve_path_cs(g, &inst.a, &inst.b)?,
        Rule::CJ => path::solve_path_cj(g, &inst.a, &inst.b)?,
        _ => {
            return Err(CliError::invalid(
                "invalid-input",
                format!("the path solver handles CS, CS1 and CJ, not {rule}"),
            ))
        }
    };
    let mut report = Report::new(sol.answer, sol.reason, rule, "path");
    if !sol.is_yes() {
        return Ok(report);
    }
    if rule == Rule::CS1 {
        let cs = layout.expand(g, Rule::CS, &inst.a, &sol.moves)?;
        let seq = expand_sequence_to_cs1(g, &cs)?;
        report.length = Some(seq.len());
        if compressed {
            let moves = seq
                .moves()
                .iter()
                .map(|mv| compress(&layout, &mv.from, &mv.to))
                .collect::<Result<_, _>>()?;
            report.moves = Some(moves);
        } else {
            report.sequence = Some(seq.vertex_sets());
        }
        return Ok(report);
    }
    report.length = Some(sol.moves.len());
    if compressed {
        report.moves = Some(sol.moves);
    } else {
        report.sequence = Some(layout.expand(g, rule, &inst.a, &sol.moves)?.vertex_sets());
    }
    Ok(report)
}

fn compress(layout: &PathLayout, from: &[usize], to: &[usize]) -> Result<CompressedMove, CliError> {
    let (a, b) = (layout.blocks(from)?, layout.blocks(to)?);
    match (a.as_slice(), b.as_slice()) {
        ([(start, size)], [(end, _)]) => Ok(CompressedMove {
            size: *size,
            from: *start,
            to: *end,
        }),
        _ => Err(CliError::internal("a path move is not a single interval")),
    }
}

fn run_oracle(inst: &Instance, rule: Rule, cap: usize) -> Result<Report, CliError> {
    let ans = oracle_solve(&inst.graph, &inst.a, &inst.b, rule, cap)?;
    let mut report = match &ans.path {
        Some(p) => {
            let mut r = Report::new(Answer::Yes, None, rule, "oracle");
            r.distance = ans.distance;
            r.length = Some(p.len());
            r.sequence = Some(p.vertex_sets());
            r
        }
        None => Report::new(Answer::No, Some(reason::UNREACHABLE), rule, "oracle"),
    };
    report.stats.states = Some(ans.states);
    Ok(report)
}

fn require_rule(algorithm: &str, rule: Rule, allowed: &[Rule]) -> Result<(), CliError> {
    if allowed.contains(&rule) {
        Ok(())
    } else {
        Err(CliError::invalid(
            "invalid-input",
            format!("the {algorithm} solver does not handle rule {rule}"),
        ))
    }
}

/// Runs the requested (or automatically chosen) solver and checks any
/// sequence it emits before returning it.
pub fn solve(inst: &Instance, rule: Option<Rule>, opts: &SolveOptions) -> Result<Report, CliError> {
    let start = Instant::now();
    let rule = resolve_rule(inst, rule)?;
    let g = &inst.graph;
    let m = g.cc_multiset(&inst.a)?;
    let mut report = if m != g.cc_multiset(&inst.b)? {
        Report::new(
            Answer::No,
            Some(reason::MULTISET_MISMATCH),
            rule,
            "multiset-check",
        )
    } else {
        let algorithm = match opts.algorithm {
            Algorithm::Auto => auto_algorithm(g, rule, &m),
            forced => forced,
        };
        let forced = opts.algorithm != Algorithm::Auto;
        let mut report = match algorithm {
            Algorithm::Path => run_path(inst, rule, opts.compressed)?,
            Algorithm::Cograph => {
                require_rule("cograph", rule, &[Rule::CS, Rule::CS1])?;
                let sol = solve_cograph_cs(g, &inst.a, &inst.b, rule)?;
                from_solution(inst, rule, sol, "cograph", true)?
            }
            Algorithm::Chordal => {
                require_rule("chordal", rule, &[Rule::CJ])?;
                let sol = if forced {
                    solve_chordal_cj(g, &inst.a, &inst.b, opts.check_chordal)?
                } else {
                    solve_equal_size_cj(g, &inst.a, &inst.b)?
                };
                from_solution(inst, rule, sol, "chordal", true)?
            }
            Algorithm::Oracle | Algorithm::Auto => run_oracle(inst, rule, opts.state_cap)?,
        };
        if report.answer == Answer::Unknown && opts.fallback_oracle {
            report = run_oracle(inst, rule, opts.state_cap)?;
            report.algorithm = "oracle-fallback".into();
        }
        report
    };
    if let Some(seq) = &report.sequence {
        check_sequence(g, seq, &inst.a, &inst.b, &m, rule)?;
    }
    report.stats.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

fn check_sequence(
    g: &Graph,
    seq: &[Vec<usize>],
    a: &[usize],
    b: &[usize],
    m: &SizeMultiset,
    rule: Rule,
) -> Result<(), CliError> {
    if seq.first().map(Vec::as_slice) != Some(a) || seq.last().map(Vec::as_slice) != Some(b) {
        return Err(CliError::internal(
            "emitted sequence does not run from A to B",
        ));
    }
    if let Some(v) = verify_sequence(g, seq, m, rule)? {
        return Err(CliError::internal(format!(
            "emitted sequence fails verification: {v:?}"
        )));
    }
    Ok(())
}

/// Exhaustive search, optionally returning the DOT text of the whole
/// reconfiguration graph for the multiset of `A` (or the given multiset).
pub fn oracle(
    inst: &Instance,
    rule: Option<Rule>,
    cap: usize,
    dot: bool,
) -> Result<(Report, Option<String>), CliError> {
    let start = Instant::now();
    let rule = resolve_rule(inst, rule)?;
    let mut report = run_oracle(inst, rule, cap)?;
    if report.stats.states == Some(0) {
        report.reason = Some(reason::MULTISET_MISMATCH.into());
    }
    let dot = if dot {
        let m = match &inst.multiset {
            Some(m) => m.clone(),
            None => inst.graph.cc_multiset(&inst.a)?,
        };
        let space = enumerate_states(&inst.graph, &m, cap)?;
        Some(export_dot(&space.reconfiguration_graph(rule)))
    } else {
        None
    };
    report.stats.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok((report, dot))
}

/// Result of `verify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub valid: bool,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
}

/// A sequence file: either a bare list of states or a report carrying a
/// `"sequence"` (and possibly its `"rule"`).
pub fn parse_sequence(text: &str) -> Result<(Vec<Vec<usize>>, Option<Rule>), CliError> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum SequenceFile {
        States(Vec<Vec<usize>>),
        Report {
            sequence: Option<Vec<Vec<usize>>>,
            rule: Option<Rule>,
        },
    }
    match serde_json::from_str(text)? {
        SequenceFile::States(s) => Ok((s, None)),
        SequenceFile::Report {
            sequence: Some(s),
            rule,
        } => Ok((s, rule)),
        SequenceFile::Report { sequence: None, .. } => Err(CliError::invalid(
            "parse",
            "the file holds no \"sequence\" (compressed reports cannot be verified)",
        )),
    }
}

pub fn verify(
    g: &Graph,
    seq: &[Vec<usize>],
    rule: Rule,
    multiset: Option<&SizeMultiset>,
) -> Result<VerifyReport, CliError> {
    let first = seq
        .first()
        .ok_or_else(|| CliError::invalid("invalid-input", "the sequence is empty"))?;
    let m = match multiset {
        Some(m) => m.clone(),
        None => g.cc_multiset(first)?,
    };
    let violation = verify_sequence(g, seq, &m, rule)?;
    Ok(VerifyReport {
        valid: violation.is_none(),
        violation,
    })
}

/// A graph for `verify`: either the plain text format or an instance file.
pub fn parse_graph_or_instance(text: &str, base: &std::path::Path) -> Result<Graph, CliError> {
    if text.trim_start().starts_with('{') {
        Ok(Instance::parse(text, base)?.graph)
    } else {
        Ok(text.parse()?)
    }
}

pub fn gen(
    kind: GraphKind,
    n: usize,
    m: &SizeMultiset,
    seed: u64,
    rule: Option<Rule>,
) -> Result<InstanceFile, CliError> {
    let inst = generate_instance(kind, n, m, seed)?;
    let rule = rule.unwrap_or(match kind {
        GraphKind::Chordal => Rule::CJ,
        GraphKind::Path | GraphKind::Cograph => Rule::CS,
    });
    Ok(InstanceFile {
        graph: Some(GraphJson::from(&inst.graph)),
        graph_file: None,
        a: inst.a,
        b: inst.b,
        rule: Some(rule.to_string()),
        multiset: Some(m.sizes().to_vec()),
    })
}
