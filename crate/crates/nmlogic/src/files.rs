//! Text formats for theories, problems and reductions.
//!
//! All formats are line based. Blank lines and lines starting with `#` are
//! skipped. A line `fun NAME/ARITY = BITS` declares a truth-table function
//! (bits indexed most significant input first) and `vars: a b c` adds
//! propositions to the universe; both may appear in any format.

use std::str::FromStr;
use std::sync::Arc;

use crate::abduction::{AbductionInstance, ExplanationMode, Query};
use crate::ael::{parse_ae_formula, AeTheory, QbfInstance};
use crate::circ::CircProblem;
use crate::default_logic::{Cnf3, DefaultRule, DefaultTheory};
use crate::error::{Error, Result};
use crate::formula::{is_prop_name, parse_formula, Formula};
use crate::func::{BooleanFunction, FunctionLibrary};
use crate::relations::{BooleanRelation, ConstraintApplication, ConstraintTheory};
use crate::theory::{Assignment, Theory};

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Parses `NAME/ARITY=BITS` (the `fun ` prefix already stripped).
pub fn parse_fun_decl(decl: &str) -> Result<BooleanFunction> {
    let (head, bits) = decl
        .split_once('=')
        .ok_or_else(|| Error::Invalid(format!("bad function declaration `{decl}`")))?;
    let (name, arity) = head
        .trim()
        .split_once('/')
        .ok_or_else(|| Error::Invalid(format!("bad function declaration `{decl}`")))?;
    let arity: usize = arity
        .trim()
        .parse()
        .map_err(|_| Error::Invalid(format!("bad arity in `{decl}`")))?;
    BooleanFunction::from_bits(name.trim(), arity, bits.trim())
}

fn parse_var_list(payload: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for v in payload.split_whitespace() {
        if !is_prop_name(v) {
            return Err(Error::Invalid(format!("bad proposition name `{v}`")));
        }
        out.push(v.to_string());
    }
    Ok(out)
}

// Shared preamble handling: function declarations and extra variables.
struct Preamble {
    library: FunctionLibrary,
    extra_vars: Vec<String>,
}

impl Preamble {
    fn new() -> Self {
        Preamble {
            library: FunctionLibrary::standard(),
            extra_vars: Vec::new(),
        }
    }

    /// Consumes the line if it is a preamble line.
    fn take(&mut self, line: &str) -> Result<bool> {
        if let Some(decl) = line.strip_prefix("fun ") {
            self.library.insert(parse_fun_decl(decl)?)?;
            return Ok(true);
        }
        if let Some(vars) = line.strip_prefix("vars:") {
            self.extra_vars.extend(parse_var_list(vars)?);
            return Ok(true);
        }
        Ok(false)
    }
}

/// A plain theory: formula lines.
pub struct TheoryFile {
    pub library: FunctionLibrary,
    pub theory: Theory,
}

pub fn parse_theory_file(text: &str) -> Result<TheoryFile> {
    let mut pre = Preamble::new();
    let mut formulas = Vec::new();
    for line in content_lines(text) {
        if pre.take(line)? {
            continue;
        }
        formulas.push(parse_formula(line, &pre.library)?);
    }
    Ok(TheoryFile {
        theory: Theory::new(formulas, pre.extra_vars),
        library: pre.library,
    })
}

/// A default theory: a `W:` section of formulas and a `D:` section of
/// `premise : justification / conclusion` lines.
pub struct DefaultFile {
    pub library: FunctionLibrary,
    pub theory: DefaultTheory,
}

pub fn parse_default_file(text: &str) -> Result<DefaultFile> {
    #[derive(PartialEq)]
    enum Section {
        Preamble,
        Facts,
        Rules,
    }
    let mut pre = Preamble::new();
    let mut section = Section::Preamble;
    let mut facts = Vec::new();
    let mut rules = Vec::new();
    for line in content_lines(text) {
        if pre.take(line)? {
            continue;
        }
        match line {
            "W:" => section = Section::Facts,
            "D:" => section = Section::Rules,
            _ => match section {
                Section::Preamble => {
                    return Err(Error::Invalid(format!(
                        "`{line}` appears before the W: or D: header"
                    )))
                }
                Section::Facts => facts.push(parse_formula(line, &pre.library)?),
                Section::Rules => {
                    let (premise, rest) = line.split_once(':').ok_or_else(|| {
                        Error::Invalid(format!("rule `{line}` lacks the `:` separator"))
                    })?;
                    let (justification, conclusion) =
                        rest.split_once('/').ok_or_else(|| {
                            Error::Invalid(format!("rule `{line}` lacks the `/` separator"))
                        })?;
                    rules.push(DefaultRule::new(
                        parse_formula(premise, &pre.library)?,
                        parse_formula(justification, &pre.library)?,
                        parse_formula(conclusion, &pre.library)?,
                    ));
                }
            },
        }
    }
    Ok(DefaultFile {
        theory: DefaultTheory::new(facts, rules, pre.extra_vars),
        library: pre.library,
    })
}

pub fn render_default_file(theory: &DefaultTheory) -> String {
    let mut out = String::new();
    let mut universe: Vec<&String> = theory.universe().iter().collect();
    universe.retain(|v| {
        !theory.facts().formulas().iter().any(|f| f.vars().contains(*v))
            && !theory.rules().iter().any(|r| {
                r.premise.vars().contains(*v)
                    || r.justification.vars().contains(*v)
                    || r.conclusion.vars().contains(*v)
            })
    });
    if !universe.is_empty() {
        out.push_str("vars:");
        for v in universe {
            out.push(' ');
            out.push_str(v);
        }
        out.push('\n');
    }
    out.push_str("W:\n");
    for f in theory.facts().formulas() {
        out.push_str(&f.to_string());
        out.push('\n');
    }
    out.push_str("D:\n");
    for r in theory.rules() {
        out.push_str(&format!(
            "{} : {} / {}\n",
            r.premise, r.justification, r.conclusion
        ));
    }
    out
}

/// An autoepistemic theory: formula lines in the `L(...)` dialect.
pub struct AeFile {
    pub library: FunctionLibrary,
    pub theory: AeTheory,
}

pub fn parse_ae_file(text: &str) -> Result<AeFile> {
    let mut pre = Preamble::new();
    let mut formulas = Vec::new();
    for line in content_lines(text) {
        if pre.take(line)? {
            continue;
        }
        formulas.push(parse_ae_formula(line, &pre.library)?);
    }
    Ok(AeFile {
        theory: AeTheory::new(formulas),
        library: pre.library,
    })
}

pub fn render_ae_file(theory: &AeTheory) -> String {
    let mut out = String::new();
    for f in theory.formulas() {
        out.push_str(&f.to_string());
        out.push('\n');
    }
    out
}

/// A circumscription problem: formula lines plus `P:` and `Z:` headers;
/// the fixed block Q is the rest of the universe.
pub struct CircFile {
    pub library: FunctionLibrary,
    pub problem: CircProblem,
}

pub fn parse_circ_file(text: &str) -> Result<CircFile> {
    let mut pre = Preamble::new();
    let mut formulas = Vec::new();
    let mut p = Vec::new();
    let mut z = Vec::new();
    for line in content_lines(text) {
        if pre.take(line)? {
            continue;
        }
        if let Some(payload) = line.strip_prefix("P:") {
            p.extend(parse_var_list(payload)?);
        } else if let Some(payload) = line.strip_prefix("Z:") {
            z.extend(parse_var_list(payload)?);
        } else {
            formulas.push(parse_formula(line, &pre.library)?);
        }
    }
    let theory = Theory::new(formulas, pre.extra_vars);
    Ok(CircFile {
        problem: CircProblem::from_p_z(theory, p, z)?,
        library: pre.library,
    })
}

pub fn render_circ_file(problem: &CircProblem) -> String {
    let mut out = String::new();
    let mentioned: std::collections::BTreeSet<String> = problem
        .theory()
        .formulas()
        .iter()
        .flat_map(|f| f.vars())
        .collect();
    let extra: Vec<&String> = problem
        .theory()
        .universe()
        .iter()
        .filter(|v| !mentioned.contains(*v))
        .collect();
    if !extra.is_empty() {
        out.push_str("vars:");
        for v in extra {
            out.push(' ');
            out.push_str(v);
        }
        out.push('\n');
    }
    for f in problem.theory().formulas() {
        out.push_str(&f.to_string());
        out.push('\n');
    }
    out.push_str("P:");
    for v in problem.partition().minimized() {
        out.push(' ');
        out.push_str(v);
    }
    out.push('\n');
    out.push_str("Z:");
    for v in problem.partition().floating() {
        out.push(' ');
        out.push_str(v);
    }
    out.push('\n');
    out
}

/// An abduction instance: formula lines, `A:` hypotheses, `Q:` observation
/// and an optional `mode:` line (literal by default).
pub struct AbductionFile {
    pub library: FunctionLibrary,
    pub instance: AbductionInstance,
}

pub fn parse_abduction_file(text: &str) -> Result<AbductionFile> {
    let mut pre = Preamble::new();
    let mut formulas = Vec::new();
    let mut hypotheses = Vec::new();
    let mut query = None;
    let mut mode = ExplanationMode::Literal;
    for line in content_lines(text) {
        if pre.take(line)? {
            continue;
        }
        if let Some(payload) = line.strip_prefix("A:") {
            hypotheses.extend(parse_var_list(payload)?);
        } else if let Some(payload) = line.strip_prefix("Q:") {
            query = Some(classify_query(parse_formula(payload, &pre.library)?));
        } else if let Some(payload) = line.strip_prefix("mode:") {
            mode = match payload.trim() {
                "literal" => ExplanationMode::Literal,
                "positive" => ExplanationMode::Positive,
                other => {
                    return Err(Error::Invalid(format!(
                        "mode must be literal or positive, got `{other}`"
                    )))
                }
            };
        } else {
            formulas.push(parse_formula(line, &pre.library)?);
        }
    }
    let query = query.ok_or_else(|| Error::Invalid("missing Q: line".to_string()))?;
    let knowledge = Theory::new(formulas, pre.extra_vars);
    Ok(AbductionFile {
        instance: AbductionInstance::new(knowledge, hypotheses, query, mode)?,
        library: pre.library,
    })
}

/// Syntactic classification of an observation formula into the query forms.
pub fn classify_query(f: Formula) -> Query {
    fn as_literal(f: &Formula) -> Option<(String, bool)> {
        match f {
            Formula::Prop(p) => Some((p.clone(), true)),
            Formula::Apply(func, args) if func.name() == "not" && args.len() == 1 => {
                match &args[0] {
                    Formula::Prop(p) => Some((p.clone(), false)),
                    _ => None,
                }
            }
            _ => None,
        }
    }
    fn flatten(f: &Formula, op: &str, out: &mut Vec<(String, bool)>) -> bool {
        if let Some(lit) = as_literal(f) {
            out.push(lit);
            return true;
        }
        match f {
            Formula::Apply(func, args) if func.name() == op && args.len() == 2 => {
                flatten(&args[0], op, out) && flatten(&args[1], op, out)
            }
            _ => false,
        }
    }
    if let Formula::Prop(p) = &f {
        return Query::Proposition(p.clone());
    }
    if let Some((v, pos)) = as_literal(&f) {
        return Query::Literal(v, pos);
    }
    let mut lits = Vec::new();
    if flatten(&f, "and", &mut lits) && lits.len() > 1 {
        return Query::Term(lits);
    }
    lits.clear();
    if flatten(&f, "or", &mut lits) && lits.len() > 1 {
        return Query::Clause(lits);
    }
    Query::Formula(f)
}

/// Relations and constraint applications: `rel NAME/ARITY = t1,t2,...`
/// declarations and `NAME(x, y, ...)` application lines.
pub struct RelationsFile {
    pub relations: Vec<Arc<BooleanRelation>>,
    pub constraints: ConstraintTheory,
}

pub fn parse_relations_file(text: &str) -> Result<RelationsFile> {
    let mut pre = Preamble::new();
    let mut relations: Vec<Arc<BooleanRelation>> = Vec::new();
    let mut applications = Vec::new();
    for line in content_lines(text) {
        if pre.take(line)? {
            continue;
        }
        if let Some(decl) = line.strip_prefix("rel ") {
            let (head, tuples) = decl
                .split_once('=')
                .ok_or_else(|| Error::Invalid(format!("bad relation declaration `{decl}`")))?;
            let (name, arity) = head
                .trim()
                .split_once('/')
                .ok_or_else(|| Error::Invalid(format!("bad relation declaration `{decl}`")))?;
            let arity: usize = arity
                .trim()
                .parse()
                .map_err(|_| Error::Invalid(format!("bad arity in `{decl}`")))?;
            let name = name.trim();
            if relations.iter().any(|r| r.name() == name) {
                return Err(Error::Invalid(format!("relation `{name}` declared twice")));
            }
            relations.push(Arc::new(BooleanRelation::from_bit_strings(
                name,
                arity,
                tuples.trim(),
            )?));
            continue;
        }
        // an application line NAME(x, y, ...)
        let (name, rest) = line
            .split_once('(')
            .ok_or_else(|| Error::Invalid(format!("expected a relation application: `{line}`")))?;
        let args = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Invalid(format!("missing `)` in `{line}`")))?;
        let relation = relations
            .iter()
            .find(|r| r.name() == name.trim())
            .ok_or_else(|| Error::Invalid(format!("unknown relation `{}`", name.trim())))?
            .clone();
        let vars: Vec<String> = args
            .split(',')
            .map(|v| v.trim().to_string())
            .filter(|v| !v.is_empty())
            .collect();
        for v in &vars {
            if !is_prop_name(v) {
                return Err(Error::Invalid(format!("bad proposition name `{v}`")));
            }
        }
        applications.push(ConstraintApplication::new(relation, vars)?);
    }
    Ok(RelationsFile {
        relations,
        constraints: ConstraintTheory::new(applications, pre.extra_vars),
    })
}

/// A prefixed formula `exists x1 x2; forall y1; MATRIX`; either block may
/// be omitted.
pub fn parse_qbf_file(text: &str) -> Result<QbfInstance> {
    let joined: String = content_lines(text).collect::<Vec<_>>().join(" ");
    let mut exists = Vec::new();
    let mut forall = Vec::new();
    let mut matrix = None;
    for segment in joined.split(';') {
        let segment = segment.trim();
        if segment.is_empty() {
            continue;
        }
        if let Some(payload) = segment.strip_prefix("exists ") {
            if matrix.is_some() || !forall.is_empty() {
                return Err(Error::MalformedPrefix(
                    "exists block out of order".to_string(),
                ));
            }
            exists.extend(parse_var_list(payload)?);
        } else if let Some(payload) = segment.strip_prefix("forall ") {
            if matrix.is_some() {
                return Err(Error::MalformedPrefix(
                    "forall block out of order".to_string(),
                ));
            }
            forall.extend(parse_var_list(payload)?);
        } else {
            if matrix.is_some() {
                return Err(Error::MalformedPrefix(
                    "more than one matrix segment".to_string(),
                ));
            }
            matrix = Some(parse_formula(segment, &FunctionLibrary::standard())?);
        }
    }
    let matrix = matrix.ok_or_else(|| Error::MalformedPrefix("missing matrix".to_string()))?;
    QbfInstance::new(exists, forall, matrix)
}

/// One clause per line, exactly three whitespace-separated literals each,
/// `!` for negation.
pub fn parse_cnf3_file(text: &str) -> Result<Cnf3> {
    let mut clauses = Vec::new();
    for line in content_lines(text) {
        let lits: Vec<(String, bool)> = line
            .split_whitespace()
            .map(|tok| match tok.strip_prefix('!') {
                Some(v) => (v.to_string(), false),
                None => (tok.to_string(), true),
            })
            .collect();
        if lits.len() != 3 {
            return Err(Error::NotCnf3(format!(
                "clause `{line}` has {} literals, expected 3",
                lits.len()
            )));
        }
        for (v, _) in &lits {
            if !is_prop_name(v) {
                return Err(Error::NotCnf3(format!("bad proposition name `{v}`")));
            }
        }
        clauses.push([lits[0].clone(), lits[1].clone(), lits[2].clone()]);
    }
    Ok(Cnf3 { clauses })
}

/// An assignment given as a bit string over the sorted universe.
pub fn parse_assignment_bits(
    universe: &std::collections::BTreeSet<String>,
    bits: &str,
) -> Result<Assignment> {
    if bits.len() != universe.len() {
        return Err(Error::Invalid(format!(
            "assignment `{bits}` has {} bits, universe has {} propositions",
            bits.len(),
            universe.len()
        )));
    }
    let mut sigma = Assignment::default();
    for (v, c) in universe.iter().zip(bits.chars()) {
        match c {
            '0' => sigma.set(v, false),
            '1' => sigma.set(v, true),
            _ => return Err(Error::Invalid(format!("bad assignment bit `{c}`"))),
        }
    }
    Ok(sigma)
}

/// Parses either a standard function name or an inline `NAME/ARITY=BITS`
/// declaration, for the clone and predict commands.
pub fn parse_function_spec(spec: &str) -> Result<BooleanFunction> {
    if spec.contains('=') {
        parse_fun_decl(spec)
    } else {
        let lib = FunctionLibrary::standard();
        Ok((*lib.lookup(spec.trim())?).clone())
    }
}

/// Parses a clone name such as `V2` or `S0^2`.
pub fn parse_clone_name(s: &str) -> Result<crate::post::CloneName> {
    crate::post::CloneName::from_str(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theory_files_carry_declarations_and_extra_vars() {
        let file = parse_theory_file(
            "# a comment\nfun T32/3 = 00010111\nvars: q\nx | y\nT32(x, y, z)\n",
        )
        .unwrap();
        assert_eq!(file.theory.formulas().len(), 2);
        assert!(file.theory.universe().contains("q"));
        assert!(file.library.get("T32").is_some());
    }

    #[test]
    fn default_files_have_sections() {
        let file = parse_default_file("W:\nx\nD:\nx : y / z\n").unwrap();
        assert_eq!(file.theory.facts().formulas().len(), 1);
        assert_eq!(file.theory.rules().len(), 1);
        assert_eq!(file.theory.rules()[0].conclusion.to_string(), "z");

        assert!(parse_default_file("x\nW:\n").is_err());
        assert!(parse_default_file("W:\nD:\nx y z\n").is_err());
    }

    #[test]
    fn default_files_round_trip() {
        let file = parse_default_file("W:\nx & !y\nD:\n1 : x / !y\nx : 1 / maj(x, y, z)\n").unwrap();
        let rendered = render_default_file(&file.theory);
        let again = parse_default_file(&rendered).unwrap();
        assert_eq!(
            file.theory.facts().formulas(),
            again.theory.facts().formulas()
        );
        assert_eq!(file.theory.rules(), again.theory.rules());
        assert_eq!(file.theory.universe(), again.theory.universe());
    }

    #[test]
    fn circ_files_split_the_universe() {
        let file = parse_circ_file("(x & !y) -> z\nP: x\nZ: y z\n").unwrap();
        assert_eq!(file.problem.partition().minimized().len(), 1);
        assert_eq!(file.problem.partition().floating().len(), 2);
        assert!(file.problem.partition().fixed().is_empty());

        let with_q = parse_circ_file("x | q\nP: x\nZ:\n").unwrap();
        assert!(with_q.problem.partition().fixed().contains("q"));

        let rendered = render_circ_file(&file.problem);
        let again = parse_circ_file(&rendered).unwrap();
        assert_eq!(
            file.problem.partition().minimized(),
            again.problem.partition().minimized()
        );
    }

    #[test]
    fn abduction_files_classify_queries() {
        let file = parse_abduction_file("a -> q\nA: a\nQ: q\n").unwrap();
        assert!(matches!(file.instance.query(), Query::Proposition(_)));
        assert_eq!(file.instance.mode(), ExplanationMode::Literal);

        let file =
            parse_abduction_file("a -> q1\na -> q2\nA: a\nQ: q1 & q2\nmode: positive\n").unwrap();
        assert!(matches!(file.instance.query(), Query::Term(_)));
        assert_eq!(file.instance.mode(), ExplanationMode::Positive);

        let file = parse_abduction_file("a -> q\nA: a\nQ: !q\n").unwrap();
        assert!(matches!(file.instance.query(), Query::Literal(_, false)));

        let file = parse_abduction_file("a -> q\nb -> q\nA: a b\nQ: q | !b\n").unwrap();
        assert!(matches!(file.instance.query(), Query::Clause(_)));

        let file = parse_abduction_file("a -> q\nA: a\nQ: q ^ a\n").unwrap();
        assert!(matches!(file.instance.query(), Query::Formula(_)));
    }

    #[test]
    fn relations_files_declare_and_apply() {
        let file = parse_relations_file(
            "rel impg/2 = 00,01,11\nrel xr/2 = 01,10\nimpg(x, y)\nxr(y, z)\n",
        )
        .unwrap();
        assert_eq!(file.relations.len(), 2);
        assert_eq!(file.constraints.applications.len(), 2);
        assert_eq!(file.constraints.universe.len(), 3);

        assert!(parse_relations_file("rel r/2 = 001\n").is_err());
        assert!(parse_relations_file("r(x, y)\n").is_err());
    }

    #[test]
    fn qbf_files_parse_prefixes() {
        let qbf = parse_qbf_file("exists x1 x2; forall y1; x1 | x2 | y1\n").unwrap();
        assert_eq!(qbf.exists.len(), 2);
        assert_eq!(qbf.forall.len(), 1);

        let no_forall = parse_qbf_file("exists x1; x1\n").unwrap();
        assert!(no_forall.forall.is_empty());

        assert!(parse_qbf_file("forall y; exists x; x | y").is_err());
        assert!(parse_qbf_file("exists x;").is_err());
    }

    #[test]
    fn cnf_files_require_three_literals() {
        let cnf = parse_cnf3_file("x y !z\n!x !y z\n").unwrap();
        assert_eq!(cnf.clauses.len(), 2);
        assert!(parse_cnf3_file("x y\n").is_err());
    }

    #[test]
    fn assignments_follow_the_sorted_universe() {
        let universe: std::collections::BTreeSet<String> =
            ["x".to_string(), "y".to_string(), "z".to_string()].into();
        let sigma = parse_assignment_bits(&universe, "101").unwrap();
        assert_eq!(sigma.get("x"), Some(true));
        assert_eq!(sigma.get("y"), Some(false));
        assert_eq!(sigma.get("z"), Some(true));
        assert!(parse_assignment_bits(&universe, "10").is_err());
    }

    #[test]
    fn function_specs_accept_names_and_inline_tables() {
        assert_eq!(parse_function_spec("and").unwrap().arity(), 2);
        let custom = parse_function_spec("nand/2=1110").unwrap();
        assert_eq!(custom.name(), "nand");
        assert!(parse_function_spec("nosuch").is_err());
    }
}
