//! Command-line front end: clone and relation classification, the four
//! reasoners, the reductions and the complexity dispatcher.
//!
//! Exit codes: 0 on success, 1 when a decision question is answered
//! negatively, 2 on usage or input errors, 3 when an enumeration cap is
//! exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use nmlogic::abduction::ExplanationMode;
use nmlogic::ael::parse_ae_formula;
use nmlogic::dispatch::{predict_mode, Fragment, ProblemId};
use nmlogic::error::Error;
use nmlogic::files::{
    parse_abduction_file, parse_ae_file, parse_assignment_bits, parse_circ_file,
    parse_clone_name, parse_cnf3_file, parse_default_file, parse_function_spec, parse_qbf_file,
    parse_relations_file, parse_theory_file, render_ae_file, render_circ_file,
    render_default_file,
};
use nmlogic::formula::parse_formula;
use nmlogic::func::BooleanFunction;
use nmlogic::post::{clone_of, property_profile};
use nmlogic::relations::{classify_relation, classify_set};

#[derive(Parser)]
#[command(name = "nmlogic", version, about = "Exact reasoning for non-monotonic logics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify Boolean functions and the clone they generate
    Clone {
        /// Function names (and, or, ...) or inline declarations NAME/ARITY=BITS
        #[arg(required = true)]
        funcs: Vec<String>,
    },
    /// Classify the relations declared in a file
    ClassifyRelations { file: PathBuf },
    /// Stable-extension reasoning for default theories
    Default {
        #[command(subcommand)]
        op: DefaultOp,
    },
    /// Stable-expansion reasoning for autoepistemic theories
    Ael {
        #[command(subcommand)]
        op: AelOp,
    },
    /// Circumscriptive (minimal-model) reasoning
    Circ {
        #[command(subcommand)]
        op: CircOp,
    },
    /// Abductive explanation finding
    Abduce {
        #[command(subcommand)]
        op: AbduceOp,
    },
    /// The executable reductions
    Reduce {
        #[command(subcommand)]
        op: ReduceOp,
    },
    /// Complexity prediction for a problem over a fragment
    Predict {
        /// Problem id, e.g. default.extension_existence
        problem: String,
        /// Comma-separated function specs generating the fragment
        #[arg(long, value_delimiter = ',')]
        funcs: Vec<String>,
        /// A clone name, e.g. V2 or S0^2
        #[arg(long)]
        clone: Option<String>,
        /// A relations file defining the fragment
        #[arg(long)]
        rels: Option<PathBuf>,
        /// Count positive explanations instead of literal ones
        #[arg(long)]
        positive: bool,
        /// Structured output
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum DefaultOp {
    /// List the stable extensions
    Extensions { file: PathBuf },
    /// Count the stable extensions
    Count { file: PathBuf },
    /// Is the query in some stable extension?
    Credulous {
        file: PathBuf,
        #[arg(long)]
        query: String,
    },
    /// Is the query in every stable extension?
    Skeptical {
        file: PathBuf,
        #[arg(long)]
        query: String,
    },
}

#[derive(Subcommand)]
enum AelOp {
    /// List the stable expansions as signed belief sets
    Expansions { file: PathBuf },
    /// Count the stable expansions
    Count { file: PathBuf },
    /// Is the query in some stable expansion?
    Credulous {
        file: PathBuf,
        #[arg(long)]
        query: String,
    },
    /// Is the query in every stable expansion?
    Skeptical {
        file: PathBuf,
        #[arg(long)]
        query: String,
    },
}

#[derive(Subcommand)]
enum CircOp {
    /// Is the assignment a circumscriptive model?
    Check {
        file: PathBuf,
        /// Bits over the sorted universe, e.g. 101
        #[arg(long)]
        assign: String,
    },
    /// Does the theory circumscriptively entail the query?
    Infer {
        file: PathBuf,
        #[arg(long)]
        query: String,
    },
    /// List the minimal models
    Minmodels { file: PathBuf },
    /// Count the minimal models
    Count { file: PathBuf },
}

#[derive(Subcommand)]
enum AbduceOp {
    /// Does an explanation exist?
    Exists { file: PathBuf },
    /// List all explanations
    List { file: PathBuf },
    /// List the subset-minimal explanations
    Minimal { file: PathBuf },
    /// Count explanations and subset-minimal explanations
    Count { file: PathBuf },
}

#[derive(Subcommand)]
enum ReduceOp {
    /// 3CNF satisfiability to extension existence
    Sat2default { file: PathBuf },
    /// Exists-forall QBF validity to expansion existence
    Qbf2ael {
        file: PathBuf,
        /// Use the negation-free construction (matrix must be in NNF)
        #[arg(long)]
        monotone: bool,
    },
    /// Model counting to minimal-model counting
    Sat2minmodels { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn decision(answer: bool) -> ExitCode {
    println!("{}", if answer { "yes" } else { "no" });
    if answer {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Clone { funcs } => {
            let parsed: Vec<BooleanFunction> = funcs
                .iter()
                .map(|s| parse_function_spec(s))
                .collect::<Result<_, _>>()?;
            for f in &parsed {
                let p = property_profile(f)?;
                let single = clone_of(std::slice::from_ref(f))?;
                println!(
                    "{f}: clone={single} r0={} r1={} monotone={} selfdual={} affine={} \
                     unary={} conj={} disj={} proj={} sep0={} sep1={}",
                    p.reproducing0 as u8,
                    p.reproducing1 as u8,
                    p.monotone as u8,
                    p.self_dual as u8,
                    p.affine as u8,
                    p.essentially_unary as u8,
                    p.conjunction_or_constant as u8,
                    p.disjunction_or_constant as u8,
                    p.constant_or_projection as u8,
                    p.sep0_degree,
                    p.sep1_degree,
                );
            }
            println!("clone: {}", clone_of(&parsed)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::ClassifyRelations { file } => {
            let parsed = parse_relations_file(&read(&file)?)?;
            for r in &parsed.relations {
                let f = classify_relation(r)?;
                println!(
                    "{}/{}: horn={} dual_horn={} bijunctive={} affine={} valid0={} valid1={} \
                     definite_horn={} negative_horn={} ihsb+={} ihsb-={}",
                    r.name(),
                    r.arity(),
                    f.horn as u8,
                    f.dual_horn as u8,
                    f.bijunctive as u8,
                    f.affine as u8,
                    f.valid0 as u8,
                    f.valid1 as u8,
                    f.definite_horn as u8,
                    f.negative_horn as u8,
                    f.ihsb_plus as u8,
                    f.ihsb_minus as u8,
                );
            }
            println!("set: {}", classify_set(&parsed.relations)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Default { op } => run_default(op),
        Command::Ael { op } => run_ael(op),
        Command::Circ { op } => run_circ(op),
        Command::Abduce { op } => run_abduce(op),
        Command::Reduce { op } => run_reduce(op),
        Command::Predict {
            problem,
            funcs,
            clone,
            rels,
            positive,
            json,
        } => {
            let problem: ProblemId = problem.parse()?;
            let given = usize::from(!funcs.is_empty())
                + usize::from(clone.is_some())
                + usize::from(rels.is_some());
            if given != 1 {
                return Err(Error::Invalid(
                    "give exactly one of --funcs, --clone or --rels".to_string(),
                ));
            }
            let fragment = if !funcs.is_empty() {
                let parsed: Vec<BooleanFunction> = funcs
                    .iter()
                    .map(|s| parse_function_spec(s))
                    .collect::<Result<_, _>>()?;
                Fragment::Clone(clone_of(&parsed)?)
            } else if let Some(name) = clone {
                Fragment::Clone(parse_clone_name(&name)?)
            } else {
                let parsed = parse_relations_file(&read(&rels.unwrap())?)?;
                Fragment::Relations(classify_set(&parsed.relations)?)
            };
            let mode = if positive {
                ExplanationMode::Positive
            } else {
                ExplanationMode::Literal
            };
            let verdict = predict_mode(problem, &fragment, mode)?;
            let fragment_name = match &fragment {
                Fragment::Clone(c) => c.to_string(),
                Fragment::Relations(r) => r.to_string(),
            };
            if json {
                let value = serde_json::json!({
                    "problem": problem.to_string(),
                    "fragment": fragment_name,
                    "verdict": verdict.class_name,
                    "citation": verdict.citation(),
                });
                println!("{value}");
            } else {
                println!("{verdict}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_default(op: DefaultOp) -> Result<ExitCode, Error> {
    match op {
        DefaultOp::Extensions { file } => {
            let parsed = parse_default_file(&read(&file)?)?;
            let witnesses = parsed.theory.stable_extensions()?;
            println!("extensions: {}", witnesses.len());
            for (i, w) in witnesses.iter().enumerate() {
                let rules: Vec<String> =
                    w.generating.iter().map(|r| (r + 1).to_string()).collect();
                let base: Vec<String> = w
                    .closure_base
                    .formulas()
                    .iter()
                    .map(|f| f.to_string())
                    .collect();
                if w.inconsistent {
                    println!(
                        "E{}: generating={{{}}} inconsistent (full language)",
                        i + 1,
                        rules.join(",")
                    );
                } else {
                    println!(
                        "E{}: generating={{{}}} base={{{}}}",
                        i + 1,
                        rules.join(","),
                        base.join("; ")
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        DefaultOp::Count { file } => {
            let parsed = parse_default_file(&read(&file)?)?;
            println!("{}", parsed.theory.count_stable_extensions()?);
            Ok(ExitCode::SUCCESS)
        }
        DefaultOp::Credulous { file, query } => {
            let parsed = parse_default_file(&read(&file)?)?;
            let q = parse_formula(&query, &parsed.library)?;
            Ok(decision(parsed.theory.credulous(&q)?))
        }
        DefaultOp::Skeptical { file, query } => {
            let parsed = parse_default_file(&read(&file)?)?;
            let q = parse_formula(&query, &parsed.library)?;
            Ok(decision(parsed.theory.skeptical(&q)?))
        }
    }
}

fn run_ael(op: AelOp) -> Result<ExitCode, Error> {
    match op {
        AelOp::Expansions { file } => {
            let parsed = parse_ae_file(&read(&file)?)?;
            let expansions = parsed.theory.stable_expansions()?;
            println!("expansions: {}", expansions.len());
            for (i, fs) in expansions.iter().enumerate() {
                println!(
                    "X{}: {} ({})",
                    i + 1,
                    fs,
                    if fs.is_consistent() {
                        "consistent"
                    } else {
                        "inconsistent"
                    }
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        AelOp::Count { file } => {
            let parsed = parse_ae_file(&read(&file)?)?;
            println!("{}", parsed.theory.count_expansions()?);
            Ok(ExitCode::SUCCESS)
        }
        AelOp::Credulous { file, query } => {
            let parsed = parse_ae_file(&read(&file)?)?;
            let q = parse_ae_formula(&query, &parsed.library)?;
            Ok(decision(parsed.theory.credulous(&q)?))
        }
        AelOp::Skeptical { file, query } => {
            let parsed = parse_ae_file(&read(&file)?)?;
            let q = parse_ae_formula(&query, &parsed.library)?;
            Ok(decision(parsed.theory.skeptical(&q)?))
        }
    }
}

fn run_circ(op: CircOp) -> Result<ExitCode, Error> {
    match op {
        CircOp::Check { file, assign } => {
            let parsed = parse_circ_file(&read(&file)?)?;
            let sigma = parse_assignment_bits(parsed.problem.theory().universe(), &assign)?;
            Ok(decision(parsed.problem.is_circ_model(&sigma)?))
        }
        CircOp::Infer { file, query } => {
            let parsed = parse_circ_file(&read(&file)?)?;
            let q = parse_formula(&query, &parsed.library)?;
            Ok(decision(parsed.problem.circ_entails(&q)?))
        }
        CircOp::Minmodels { file } => {
            let parsed = parse_circ_file(&read(&file)?)?;
            let models = parsed.problem.minimal_models()?;
            println!("minimal models: {}", models.len());
            for m in models {
                println!("{m}");
            }
            Ok(ExitCode::SUCCESS)
        }
        CircOp::Count { file } => {
            let parsed = parse_circ_file(&read(&file)?)?;
            println!("{}", parsed.problem.count_minimal_models()?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_abduce(op: AbduceOp) -> Result<ExitCode, Error> {
    match op {
        AbduceOp::Exists { file } => {
            let parsed = parse_abduction_file(&read(&file)?)?;
            Ok(decision(parsed.instance.explanation_exists()?))
        }
        AbduceOp::List { file } => {
            let parsed = parse_abduction_file(&read(&file)?)?;
            let all = parsed.instance.explanations()?;
            println!("explanations: {}", all.len());
            for e in all {
                println!("{e}");
            }
            Ok(ExitCode::SUCCESS)
        }
        AbduceOp::Minimal { file } => {
            let parsed = parse_abduction_file(&read(&file)?)?;
            let minimal = parsed.instance.subset_minimal_explanations()?;
            println!("subset-minimal explanations: {}", minimal.len());
            for e in minimal {
                println!("{e}");
            }
            Ok(ExitCode::SUCCESS)
        }
        AbduceOp::Count { file } => {
            let parsed = parse_abduction_file(&read(&file)?)?;
            println!("explanations: {}", parsed.instance.count_explanations()?);
            println!(
                "subset-minimal: {}",
                parsed.instance.count_subset_minimal()?
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_reduce(op: ReduceOp) -> Result<ExitCode, Error> {
    match op {
        ReduceOp::Sat2default { file } => {
            let cnf = parse_cnf3_file(&read(&file)?)?;
            let theory = nmlogic::default_logic::sat_to_default(&cnf)?;
            print!("{}", render_default_file(&theory));
            Ok(ExitCode::SUCCESS)
        }
        ReduceOp::Qbf2ael { file, monotone } => {
            let qbf = parse_qbf_file(&read(&file)?)?;
            let theory = if monotone {
                nmlogic::ael::qbf_to_monotone_ael(&qbf)?
            } else {
                nmlogic::ael::qbf_to_ael(&qbf)?
            };
            print!("{}", render_ae_file(&theory));
            Ok(ExitCode::SUCCESS)
        }
        ReduceOp::Sat2minmodels { file } => {
            let parsed = parse_theory_file(&read(&file)?)?;
            let lib = &parsed.library;
            let and = lib.lookup("and")?;
            let mut formulas = parsed.theory.formulas().iter();
            let mut phi = formulas
                .next()
                .ok_or_else(|| Error::Invalid("empty formula file".to_string()))?
                .clone();
            for f in formulas {
                phi = nmlogic::formula::Formula::apply(and.clone(), vec![phi, f.clone()])?;
            }
            let problem = nmlogic::circ::sat_to_minmodels(&phi)?;
            print!("{}", render_circ_file(&problem));
            Ok(ExitCode::SUCCESS)
        }
    }
}
