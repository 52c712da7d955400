use std::fmt::Write as _;
use std::fs;

use bettiforge::analysis::{
    check_subadditivity, search_open_questions, strand_report, verify_by_name, OpenQuestionReport,
    StrandReport, SubadditivityReport, VerificationReport,
};
use bettiforge::betti::{hochster_betti, hochster_betti_unchecked};
use bettiforge::graphs::{
    in_class_g, in_class_gprime, induced_matching_number, is_chordal, is_unicyclic,
    min_vertex_cover_size, parse_family,
};
use bettiforge::{BettiTable, Error, FieldSpec, Graph, Result, SquarefreeIdeal};
use serde_json::json;

use crate::args::{Cli, Command, Format, Input};

pub struct Outcome {
    pub output: String,
    /// A mathematical negative: a violation, gap, or counterexample.
    pub negative: bool,
}

fn ok(output: String) -> Result<Outcome> {
    Ok(Outcome {
        output,
        negative: false,
    })
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

enum Loaded {
    Graph(Graph),
    Ideal(SquarefreeIdeal),
}

impl Loaded {
    fn ideal(&self) -> SquarefreeIdeal {
        match self {
            Loaded::Graph(g) => g.edge_ideal(),
            Loaded::Ideal(i) => i.clone(),
        }
    }

    fn graph(self) -> Result<Graph> {
        match self {
            Loaded::Graph(g) => Ok(g),
            Loaded::Ideal(i) => Graph::from_edge_ideal(&i)
                .map_err(|_| usage("this command needs a graph; the ideal is not quadratic")),
        }
    }
}

fn read(path: &std::path::Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn load(input: &Input) -> Result<Loaded> {
    let src = &input.source;
    if let Some(spec) = &src.family {
        Ok(Loaded::Graph(parse_family(spec)?.build()?))
    } else if let Some(path) = &src.ideal {
        Ok(Loaded::Ideal(SquarefreeIdeal::parse(&read(path)?)?))
    } else if let Some(path) = &src.graph {
        Ok(Loaded::Graph(Graph::parse_edge_list(&read(path)?)?))
    } else {
        Err(usage("one of --family, --ideal, --graph is required"))
    }
}

fn table(input: &Input, field: FieldSpec) -> Result<BettiTable> {
    let ideal = load(input)?.ideal();
    if input.force {
        Ok(hochster_betti_unchecked(&ideal, field))
    } else {
        hochster_betti(&ideal, field)
    }
}

fn no_csv(format: Format, what: &str) -> Result<()> {
    if format == Format::Csv {
        return Err(usage(format!(
            "csv output is only available for betti, not {what}"
        )));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let field = FieldSpec::new(cli.characteristic)?;
    let format = cli.format;
    match &cli.command {
        Command::Betti { input, multigraded } => {
            ok(render_betti(&table(input, field)?, format, *multigraded))
        }
        Command::Strands { input } => {
            no_csv(format, "strands")?;
            let report = strand_report(&table(input, field)?);
            Ok(Outcome {
                negative: !report.all_connected(),
                output: render_strands(&report, format),
            })
        }
        Command::Subadd { input } => {
            no_csv(format, "subadd")?;
            let report = check_subadditivity(&table(input, field)?);
            Ok(Outcome {
                negative: !report.holds,
                output: render_subadd(&report, format),
            })
        }
        Command::Nu { input } => {
            no_csv(format, "nu")?;
            let b = table(input, field)?;
            let g = load(input)?.graph()?;
            let (nu, cover, reg) = (
                induced_matching_number(&g),
                min_vertex_cover_size(&g),
                b.reg(),
            );
            ok(match format {
                Format::Json => pretty(&json!({ "nu": nu, "min_vertex_cover": cover, "reg": reg })),
                _ => format!("nu: {nu}\nmin vertex cover: {cover}\nreg: {reg}\n"),
            })
        }
        Command::Classify { input } => {
            no_csv(format, "classify")?;
            let g = load(input)?.graph()?;
            let facts = [
                ("in_G", in_class_g(&g)),
                ("in_G_prime", in_class_gprime(&g)),
                ("chordal", is_chordal(&g)),
                ("unicyclic", is_unicyclic(&g)),
            ];
            ok(match format {
                Format::Json => pretty(
                    &facts
                        .iter()
                        .map(|&(k, v)| (k.to_string(), json!(v)))
                        .collect::<serde_json::Map<_, _>>(),
                ),
                _ => facts.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
            })
        }
        Command::Gen { family } => {
            no_csv(format, "gen")?;
            let g = parse_family(family)?.build()?;
            ok(match format {
                Format::Json => pretty(&json!({ "n": g.n(), "edges": g.edges() })),
                _ => g.to_edge_list(),
            })
        }
        Command::Verify { theorem, n_max } => {
            no_csv(format, "verify")?;
            let report = verify_by_name(theorem, *n_max, field)?;
            Ok(Outcome {
                negative: !report.passed(),
                output: render_verify(&report, format),
            })
        }
        Command::Search { n_max } => {
            no_csv(format, "search")?;
            let report = search_open_questions(*n_max, field)?;
            let negative = report
                .questions
                .iter()
                .any(|q| !q.counterexamples.is_empty());
            Ok(Outcome {
                negative,
                output: render_search(&report, format),
            })
        }
    }
}

fn render_betti(b: &BettiTable, format: Format, multigraded: bool) -> String {
    match format {
        Format::Json => {
            let mut v = b.to_json();
            if !multigraded {
                v["multigraded"] = json!([]);
            }
            pretty(&v)
        }
        Format::Csv if multigraded => b.to_csv(),
        Format::Csv => b.graded().to_csv(),
        Format::Diagram => {
            let mut s = b.graded().to_diagram();
            if multigraded {
                s.push('\n');
                for ((i, a), beta) in b.iter() {
                    let _ = writeln!(s, "beta_{i},{a} = {beta}");
                }
            }
            s
        }
    }
}

fn render_strands(r: &StrandReport, format: Format) -> String {
    if format == Format::Json {
        return pretty(&json!({ "connected": r.all_connected(), "strands": r.strands }));
    }
    let mut s = String::new();
    for st in &r.strands {
        let status = if st.is_connected() {
            "connected".to_string()
        } else {
            format!("gaps at {:?}", st.gaps)
        };
        let _ = writeln!(
            s,
            "{}-strand: [{}, {}] present {:?}, {status}",
            st.j, st.q, st.p, st.present
        );
    }
    let _ = writeln!(
        s,
        "{}",
        if r.all_connected() {
            "strand connected"
        } else {
            "not strand connected"
        }
    );
    s
}

fn render_subadd(r: &SubadditivityReport, format: Format) -> String {
    if format == Format::Json {
        return pretty(r);
    }
    let mut s = String::new();
    for v in &r.violations {
        let _ = writeln!(
            s,
            "violation: t_{} = {} > t_{} + t_{} = {} + {}",
            v.a + v.b,
            v.t_ab,
            v.a,
            v.b,
            v.t_a,
            v.t_b
        );
    }
    s.push_str(if r.holds {
        "subadditivity holds\n"
    } else {
        "subadditivity fails\n"
    });
    s
}

fn render_verify(r: &VerificationReport, format: Format) -> String {
    if format == Format::Json {
        return pretty(r);
    }
    let mut s = format!(
        "{}: {} instances up to n = {}, {} failures\n",
        r.theorem,
        r.instances,
        r.n_max,
        r.failures.len()
    );
    for f in &r.failures {
        let _ = writeln!(s, "  {}: {}", f.graph, f.detail);
    }
    s
}

fn render_search(r: &OpenQuestionReport, format: Format) -> String {
    if format == Format::Json {
        return pretty(r);
    }
    let mut s = String::new();
    for q in &r.questions {
        let _ = writeln!(
            s,
            "Q{}: {}\n  {} graphs checked: {}",
            q.id, q.question, q.graphs_checked, q.conclusion
        );
        for c in &q.counterexamples {
            let _ = writeln!(s, "  {c}");
        }
    }
    s
}
