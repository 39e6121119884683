use std::fmt::Write as _;

use simlab::constructions::NarrownessReport;
use simlab::simcheck::{CandidateFailure, Counterexample, MemberReport, SimReport};

use crate::execute::RunOutput;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

/// Renders a run; both formats are deterministic.
pub fn render_output(out: &RunOutput, format: Format) -> String {
    match format {
        Format::Structured => structured(out),
        Format::Text => {
            let mut s = String::new();
            match out {
                RunOutput::Report { scenario, report } => {
                    let _ = writeln!(s, "scenario: {scenario}");
                    report_text(&mut s, report, 0);
                }
                RunOutput::Probe { scenario, verdict, reports } => {
                    let _ = writeln!(s, "scenario: {scenario}");
                    let _ = writeln!(s, "probe verdict: {verdict}");
                    for r in reports {
                        s.push('\n');
                        report_text(&mut s, r, 1);
                    }
                }
                RunOutput::Narrowness { scenario, narrow, report } => {
                    let _ = writeln!(s, "scenario: {scenario}");
                    narrowness_text(&mut s, report, *narrow);
                }
            }
            s
        }
    }
}

pub fn render_report(r: &SimReport, format: Format) -> String {
    match format {
        Format::Structured => structured(r),
        Format::Text => {
            let mut s = String::new();
            report_text(&mut s, r, 0);
            s
        }
    }
}

fn structured<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn failure_text(f: &CandidateFailure) -> String {
    format!("{} at {}: expected {}, got {}", f.candidate, f.input, f.expected, f.got)
}

fn counterexample_text(c: &Counterexample) -> Vec<String> {
    match c {
        Counterexample::NoWitness { failures } => {
            let mut lines = vec![format!("no witness among {} candidates", failures.len())];
            const SHOWN: usize = 5;
            lines.extend(failures.iter().take(SHOWN).map(failure_text));
            if failures.len() > SHOWN {
                lines.push(format!("... {} more", failures.len() - SHOWN));
            }
            lines
        }
        Counterexample::Uncovered { encoding, element } => vec![format!("{element} is not in the image of {encoding}")],
        Counterexample::Collision { encoding, first, second, image } => {
            vec![format!("{encoding} sends {first} and {second} to {image}")]
        }
        Counterexample::NotInverse { input, round_trip } => vec![format!("{input} comes back as {round_trip}")],
        Counterexample::LawMismatch { simulation, pullback } => {
            vec![format!("simulation side {simulation}, pullback side {pullback}")]
        }
    }
}

fn member_detail(m: &MemberReport) -> Vec<String> {
    if let Some(w) = &m.witness {
        return vec![format!("witness {w}")];
    }
    if let Some(c) = &m.counterexample {
        return counterexample_text(c);
    }
    match &m.tentative {
        Some(t) => vec![format!("tentative {t}, {} undecided points", m.undecided_points)],
        None => vec![format!("{} undecided points", m.undecided_points)],
    }
}

fn report_text(s: &mut String, r: &SimReport, depth: usize) {
    let pad = "  ".repeat(depth);
    let _ = writeln!(s, "{pad}claim: {}", r.claim);
    let _ = writeln!(s, "{pad}verdict: {}", r.aggregate);
    let _ = writeln!(
        s,
        "{pad}inputs: {}  comparisons: {}  undecided: {}  fuel spent: {}",
        r.stats.inputs_tested, r.stats.comparisons, r.stats.undecided_points, r.stats.fuel_spent
    );
    let width = r.members.iter().map(|m| m.member.chars().count()).max().unwrap_or(0).max(6);
    let _ = writeln!(s, "{pad}{:<width$}  {:<8}  detail", "member", "verdict");
    for m in &r.members {
        let detail = member_detail(m);
        let _ = writeln!(s, "{pad}{:<width$}  {:<8}  {}", m.member, m.verdict.to_string(), detail[0]);
        for extra in &detail[1..] {
            let _ = writeln!(s, "{pad}{:<width$}  {:<8}    {extra}", "", "");
        }
    }
    for n in &r.notes {
        let _ = writeln!(s, "{pad}note: {n}");
    }
    for p in &r.parts {
        let _ = writeln!(s, "{pad}part:");
        report_text(s, p, depth + 1);
    }
}

fn narrowness_text(s: &mut String, r: &NarrownessReport, narrow: bool) {
    let _ = writeln!(s, "encoding: {}", r.encoding);
    let _ = writeln!(s, "prefix: {}", r.prefix);
    let _ = writeln!(s, "narrow: {}", if narrow { "yes" } else { "no" });
    let _ = writeln!(s, "permutation on prefix: {}", r.is_permutation_on_prefix);
    let _ = writeln!(s, "max cycle length: {}", r.max_cycle_length);
    let _ = writeln!(s, "period: {}", r.period);
    let _ = writeln!(s, "escaping elements: {}", r.escaping_elements);
    let hist: Vec<String> = r.cycle_lengths_histogram.iter().map(|(len, n)| format!("{len}x{n}")).collect();
    let _ = writeln!(s, "cycle lengths: {}", hist.join(" "));
}
