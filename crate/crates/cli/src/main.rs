use clap::{Parser, Subcommand, ValueEnum};
use graphsym::algebra::{f_matrix, AlgebraError, LeavittAlgebra};
use graphsym::expr::eval_expr;
use graphsym::graph::{
    make_family, parse_graph, DirectedMultigraph, EnumerationBudget, GraphError, GraphFamily,
};
use graphsym::qaut::{verify_prop31, QautError};
use graphsym::symmetry::{
    admissible_permutation, aut_f_report, classify, maximal_perm_sym_bruteforce, verify_theorem,
    ClassificationVerdict, EdgePermutation, SymmetryError, DEFAULT_FACTORIAL_BUDGET,
};
use serde_json::{json, Value};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "graphsym",
    version,
    about = "Graph C*-algebra arithmetic and symmetry classification"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest edge count for brute-force permutation checks.
    #[arg(long, global = true, default_value_t = DEFAULT_FACTORIAL_BUDGET)]
    budget_factorial: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a graph by family and symmetry group.
    Classify { graph: PathBuf },
    /// Check whether an edge permutation lifts to a τ-preserving endomorphism.
    CheckPerm {
        graph: PathBuf,
        /// Cycles such as "(e12 e21)" or a one-line list of images.
        #[arg(required = true, num_args = 1..)]
        permutation: Vec<String>,
    },
    /// Check every edge permutation of a graph.
    Bruteforce { graph: PathBuf },
    /// Report on F^Γ and the universal group A_{u^t}(F^Γ).
    Autf { graph: PathBuf },
    /// Exhaustive verification: `et1 VMAX EMAX` or `prop31 N`.
    Verify {
        theorem: Option<String>,
        args: Vec<usize>,
        #[arg(long = "theorem", conflicts_with = "theorem")]
        theorem_flag: Option<String>,
        #[arg(long)]
        vmax: Option<usize>,
        #[arg(long)]
        emax: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Evaluate an expression and print its normal form.
    Eval { graph: PathBuf, expression: String },
    /// Print the diagonal of F^Γ.
    Fmatrix { graph: PathBuf },
    /// Print a member of a named family in the text format.
    Generate { family: String, n: usize },
}

enum Failure {
    Discrepancy(Value, String),
    Input(String),
    Budget(String),
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::BudgetExceeded(m) => Failure::Budget(m),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<SymmetryError> for Failure {
    fn from(e: SymmetryError) -> Self {
        match e {
            SymmetryError::BudgetExceeded(m) => Failure::Budget(m),
            SymmetryError::Graph(g) => g.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<QautError> for Failure {
    fn from(e: QautError) -> Self {
        match e {
            QautError::GuardExceeded(..) => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

/// A JSON payload and its text rendering.
struct Output {
    json: Value,
    text: String,
}

fn read_graph(path: &PathBuf) -> Result<DirectedMultigraph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    Ok(parse_graph(&text)?)
}

fn verdict_text(v: &ClassificationVerdict) -> String {
    let mut lines = vec![
        format!("family: {}", v.family),
        format!("group: {}", v.group),
        format!("edges: {}", v.n),
        format!("connected: {}", v.connected),
        format!(
            "F: diag({}){}",
            v.f_diag
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(", "),
            if v.f_scalar { " scalar" } else { " non-scalar" }
        ),
        format!("AutF possible: {}", v.autf_possible),
    ];
    if let Some(o) = &v.obstruction {
        lines.push(format!("obstruction: {o}"));
    }
    for w in &v.witnesses {
        lines.push(format!("witness: {}", w.identities.join("; ")));
    }
    for c in &v.coincidences {
        lines.push(format!("coincides with: {} {}", c.family, c.group));
    }
    lines.join("\n")
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Classify { graph } => {
            let g = read_graph(graph)?;
            let v = classify(&g)?;
            eprintln!("classified graph with {} edges", v.n);
            Ok(Output {
                text: verdict_text(&v),
                json: serde_json::to_value(&v).expect("serializable"),
            })
        }
        Command::CheckPerm { graph, permutation } => {
            let g = read_graph(graph)?;
            let sigma = EdgePermutation::parse(&g, &permutation.join(" "))?;
            let cert = admissible_permutation(&g, &sigma)?;
            let text = match &cert.failure {
                None => format!("{} admissible", cert.cycles),
                Some(f) => format!("{} inadmissible: {} ({})", cert.cycles, f.check, f.detail),
            };
            Ok(Output {
                text,
                json: serde_json::to_value(&cert).expect("serializable"),
            })
        }
        Command::Bruteforce { graph } => {
            let g = read_graph(graph)?;
            let r = maximal_perm_sym_bruteforce(&g, cli.budget_factorial)?;
            Ok(Output {
                text: format!(
                    "maximal: {} ({} permutations, {} inadmissible)",
                    r.maximal,
                    r.checked,
                    r.failures.len()
                ),
                json: serde_json::to_value(&r).expect("serializable"),
            })
        }
        Command::Autf { graph } => {
            let g = read_graph(graph)?;
            let r = aut_f_report(&g)?;
            let mut text = format!(
                "F: diag({}) {}\npossible: {}",
                r.f.diag
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(", "),
                if r.scalar { "scalar" } else { "non-scalar" },
                r.possible
            );
            if let Some(w) = &r.witness {
                text.push_str(&format!("\nwitness: {}", w.identities.join("; ")));
            }
            Ok(Output {
                text,
                json: serde_json::to_value(&r).expect("serializable"),
            })
        }
        Command::Verify {
            theorem,
            args,
            theorem_flag,
            vmax,
            emax,
            n,
        } => {
            let which = theorem
                .clone()
                .or_else(|| theorem_flag.clone())
                .ok_or_else(|| Failure::Input("missing theorem (et1 or prop31)".into()))?;
            match which.to_ascii_lowercase().as_str() {
                "et1" => {
                    let v_max = vmax.or(args.first().copied()).unwrap_or(3);
                    let e_max = emax.or(args.get(1).copied()).unwrap_or(3);
                    if e_max > cli.budget_factorial {
                        return Err(Failure::Budget(format!(
                            "{e_max} edges exceed the factorial budget {}",
                            cli.budget_factorial
                        )));
                    }
                    let r = verify_theorem(v_max, e_max, EnumerationBudget::default())?;
                    eprintln!("checked {} graphs", r.graphs);
                    let text = format!(
                        "{} graphs, {} with maximal permutational symmetry, {} discrepancies\nfamilies: {}",
                        r.graphs,
                        r.maximal,
                        r.discrepancies.len(),
                        r.families
                            .iter()
                            .map(|(k, v)| format!("{k}={v}"))
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                    let json = serde_json::to_value(&r).expect("serializable");
                    if r.ok() {
                        Ok(Output { json, text })
                    } else {
                        Err(Failure::Discrepancy(json, text))
                    }
                }
                "prop31" => {
                    let n = n.or(args.first().copied()).unwrap_or(3);
                    let r = verify_prop31(n)?;
                    let summary = format!("{} graphs with full symmetry", r.full_symmetry);
                    let text = format!("{} digraphs on {n} vertices, {summary}", r.digraphs);
                    let mut json = serde_json::to_value(&r).expect("serializable");
                    json["summary"] = json!(summary);
                    if r.ok() {
                        Ok(Output { json, text })
                    } else {
                        Err(Failure::Discrepancy(json, text))
                    }
                }
                other => Err(Failure::Input(format!("unknown theorem `{other}`"))),
            }
        }
        Command::Eval { graph, expression } => {
            let g = read_graph(graph)?;
            let alg = LeavittAlgebra::new(g);
            let x = eval_expr(&alg, expression).map_err(|e| Failure::Input(e.to_string()))?;
            let terms: Vec<Value> = x
                .terms()
                .iter()
                .map(|(m, c)| json!({"monomial": m.display(alg.graph()).to_string(), "coefficient": c.to_string()}))
                .collect();
            Ok(Output {
                text: x.to_string(),
                json: json!({"normal_form": x.to_string(), "terms": terms}),
            })
        }
        Command::Fmatrix { graph } => {
            let g = read_graph(graph)?;
            let f = f_matrix(&g)?;
            Ok(Output {
                text: format!(
                    "diag({}) {}",
                    f.diag
                        .iter()
                        .map(u64::to_string)
                        .collect::<Vec<_>>()
                        .join(", "),
                    if f.scalar { "scalar" } else { "non-scalar" }
                ),
                json: json!({"f_diag": f.diag, "f_scalar": f.scalar}),
            })
        }
        Command::Generate { family, n } => {
            let fam: GraphFamily = family.parse()?;
            let g = make_family(fam, *n)?;
            Ok(Output {
                text: g.to_text(),
                json: serde_json::to_value(g.to_json_doc()).expect("serializable"),
            })
        }
    }
}

fn emit(format: Format, out: &Output) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&out.json).expect("serializable")
        ),
        Format::Text => println!("{}", out.text),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            emit(cli.format, &out);
            ExitCode::SUCCESS
        }
        Err(Failure::Discrepancy(json, text)) => {
            emit(cli.format, &Output { json, text });
            eprintln!("error: verification found discrepancies");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: budget exceeded: {msg}");
            ExitCode::from(3)
        }
    }
}
