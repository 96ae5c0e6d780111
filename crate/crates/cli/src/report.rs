//! Text and TSV rendering of results.

use std::fmt::Write as _;

use roget_core::{
    normalize, NotFoundPolicy, Outlier, PairReport, QuestionResult, Reference, StructureReport, SynonymQuestion, TestReport,
    Thesaurus, TreePath, WordDistance,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Tsv,
}

fn pos_of(t: &Thesaurus, r: Reference) -> String {
    t.entry(r).map(|e| e.pos().to_string()).unwrap_or_default()
}

/// `ode N. to poem N., length = 2, 2 path(s) of this length`
pub fn path_header(t: &Thesaurus, w1: &str, w2: &str, path: &TreePath, count: usize) -> String {
    format!(
        "{w1} {} to {w2} {}, length = {}, {count} path(s) of this length",
        pos_of(t, path.start()),
        pos_of(t, path.end()),
        path.edges()
    )
}

pub fn paths(t: &Thesaurus, w1: &str, w2: &str, found: &WordDistance, format: Format) -> String {
    let count = found.pair_count();
    let mut out = String::new();
    for &(a, b) in &found.pairs {
        let path = t.tree_path(a, b).expect("references come from this thesaurus");
        match format {
            Format::Text => {
                let _ = writeln!(out, "{}", path_header(t, w1, w2, &path, count));
                let _ = writeln!(out, "    {path}");
            }
            Format::Tsv => {
                let label = |r| t.reference_label(r).expect("own reference");
                let _ = writeln!(out, "{w1}\t{}\t{w2}\t{}\t{}\t{count}\t{path}", label(a), label(b), path.edges());
            }
        }
    }
    out
}

pub fn distance(w1: &str, w2: &str, found: &WordDistance, format: Format, similarity_first: bool) -> String {
    let d = found.distance.edges();
    let sim = roget_core::SimilarityScore::from_distance(found.distance);
    let n = found.pair_count();
    match (format, similarity_first) {
        (Format::Tsv, _) => format!("{w1}\t{w2}\t{d}\t{}\t{}\t{n}\n", sim.value(), sim.tier()),
        (Format::Text, true) => {
            format!("{} {}\ndistance {d}, {n} path(s) of this length\n", sim.value(), sim.tier())
        }
        (Format::Text, false) => {
            format!("{d}\nsimilarity {} ({}), {n} path(s) of this length\n", sim.value(), sim.tier())
        }
    }
}

pub fn structure(report: &StructureReport, format: Format) -> String {
    let c = &report.counts;
    let rows: [(&str, String); 11] = [
        ("classes", c.classes.to_string()),
        ("sections", c.sections.to_string()),
        ("sub-sections", c.sub_sections.to_string()),
        ("head groups", c.head_groups.to_string()),
        ("heads", c.heads.to_string()),
        ("POS paragraphs", c.pos_paragraphs.to_string()),
        ("paragraphs", c.paragraphs.to_string()),
        ("semicolon groups", c.semicolon_groups.to_string()),
        ("entries", c.entries.to_string()),
        ("full edition top levels", if report.matches_full_edition() { "yes" } else { "no" }.to_string()),
        ("violations", report.violations.len().to_string()),
    ];
    let mut out = table(&rows, format);
    for v in &report.violations {
        let _ = writeln!(out, "{v}");
    }
    out
}

fn table(rows: &[(&str, String)], format: Format) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let _ = match format {
            Format::Text => writeln!(out, "{k:<width$}  {v}"),
            Format::Tsv => writeln!(out, "{k}\t{v}"),
        };
    }
    out
}

pub fn question(q: &SynonymQuestion, r: &QuestionResult, number: usize, format: Format) -> String {
    if format == Format::Tsv {
        let distances: Vec<String> = r
            .per_choice
            .iter()
            .map(|c| c.distance.map_or("NA".to_string(), |d| d.to_string()))
            .collect();
        let chosen = r.chosen().map_or("NA", |i| q.choices[i].as_str());
        return format!(
            "{number}\t{}\t{chosen}\t{}\t{}\t{}\t{}\n",
            q.problem,
            q.choices[q.gold],
            r.verdict(),
            r.credit,
            if distances.is_empty() { "NA".to_string() } else { distances.join(",") }
        );
    }

    let mut out = String::new();
    for c in &r.per_choice {
        let choice = &q.choices[c.index];
        match (c.distance, &c.contributing_token, c.pos_pair) {
            (Some(d), Some(token), Some((p1, p2))) => {
                let _ = write!(
                    out,
                    "{} {p1} to {token} {p2}, length = {d}, {} path(s) of this length",
                    q.problem, c.pair_count
                );
                if *token != normalize(choice) {
                    let _ = write!(out, " (from \"{choice}\")");
                }
                out.push('\n');
            }
            _ => {
                let _ = writeln!(out, "{} to {choice}: not found", q.problem);
            }
        }
    }
    let _ = match r.chosen() {
        None if r.per_choice.is_empty() => writeln!(out, "→ Roget cannot find {}: NOT-FOUND", q.problem),
        None => writeln!(out, "→ Roget finds none of the choices for {}: NOT-FOUND", q.problem),
        Some(i) => {
            let _ = write!(out, "→ Roget thinks that {} means {}: {}", q.problem, q.choices[i], r.verdict());
            if r.is_tie() {
                let tied: Vec<&str> = r.tied_indices().iter().map(|&j| q.choices[j].as_str()).collect();
                let _ = write!(out, " between {}, credit {}", tied.join(", "), r.credit);
            } else if !r.correct {
                let _ = write!(out, " (answer: {})", q.choices[q.gold]);
            }
            writeln!(out)
        }
    };
    out
}

pub fn test_summary(report: &TestReport, format: Format) -> String {
    let rows = [
        ("Correct", report.correct.to_string()),
        ("Questions with ties", report.questions_with_ties.to_string()),
        ("Score", report.score.to_string()),
        ("Percent", report.percent.to_string()),
        ("Questions not found", report.questions_not_found.to_string()),
        ("Other words not found", report.other_words_not_found.to_string()),
    ];
    table(&rows, format)
}

fn pair_name(w1: &str, w2: &str) -> String {
    format!("{w1} – {w2}")
}

pub fn bench(report: &PairReport, format: Format) -> String {
    let mut rows: Vec<[String; 4]> = vec![["pair".into(), "human".into(), "system".into(), "tier".into()]];
    for row in &report.rows {
        rows.push([
            pair_name(&row.pair.word1, &row.pair.word2),
            format!("{:.3}", row.pair.human),
            match (row.system, report.policy) {
                (Some(s), _) => format!("{:.3}", f64::from(s.value())),
                (None, NotFoundPolicy::Zero) => format!("{:.3}", 0.0),
                (None, NotFoundPolicy::Skip) => "NA".to_string(),
            },
            row.tier().map_or("NA".to_string(), |t| t.to_string()),
        ]);
    }
    rows.push(["Correlation".into(), format!("{:.3}", 1.0), format!("{:.3}", report.correlation), String::new()]);
    grid(&rows, format)
}

pub fn outliers(outliers: &[Outlier<'_>], format: Format) -> String {
    let mut rows: Vec<[String; 4]> = vec![["outlier".into(), "human".into(), "system".into(), "discrepancy".into()]];
    for o in outliers {
        rows.push([
            pair_name(&o.row.pair.word1, &o.row.pair.word2),
            format!("{:.3}", o.row.pair.human),
            o.row.system.map_or("0.000".to_string(), |s| format!("{:.3}", f64::from(s.value()))),
            format!("{:.3}", o.discrepancy),
        ]);
    }
    grid(&rows, format)
}

fn grid(rows: &[[String; 4]], format: Format) -> String {
    let mut out = String::new();
    if format == Format::Tsv {
        for r in rows {
            let _ = writeln!(out, "{}", r.join("\t").trim_end());
        }
        return out;
    }
    let width = |i: usize| rows.iter().map(|r| r[i].chars().count()).max().unwrap_or(0);
    let (w0, w1, w2) = (width(0), width(1), width(2));
    for r in rows {
        let line = format!("{:<w0$}  {:>w1$}  {:>w2$}  {}", r[0], r[1], r[2], r[3]);
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}
