//! Logic-based abduction: explanations for an observation against a
//! knowledge base, over a designated hypothesis set.
//!
//! An explanation is a consistent set of literals over the hypotheses that
//! is consistent with the knowledge base and makes it entail the
//! observation. Candidates are enumerated per hypothesis state (absent,
//! positive, negative - or absent/present in positive mode), so
//! contradictory literal pairs never arise during search.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::func::FunctionLibrary;
use crate::theory::{Bits, ModelSpace, Theory, DEFAULT_VAR_CAP};

/// Default cap on the number of hypotheses enumerated by candidate search.
pub const DEFAULT_HYPOTHESIS_CAP: usize = 12;

/// What kind of observation is being explained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Query {
    Proposition(String),
    Literal(String, bool),
    /// Conjunction of literals.
    Term(Vec<(String, bool)>),
    /// Disjunction of literals.
    Clause(Vec<(String, bool)>),
    Formula(Formula),
}

impl Query {
    /// The observation as one formula.
    pub fn to_formula(&self) -> Result<Formula> {
        let lib = FunctionLibrary::standard();
        let not = lib.lookup("not")?;
        let and = lib.lookup("and")?;
        let or = lib.lookup("or")?;
        let lit = |v: &str, pos: bool| -> Result<Formula> {
            let p = Formula::prop(v);
            if pos {
                Ok(p)
            } else {
                Formula::apply(not.clone(), vec![p])
            }
        };
        match self {
            Query::Proposition(v) => Ok(Formula::prop(v)),
            Query::Literal(v, pos) => lit(v, *pos),
            Query::Term(lits) => {
                let mut parts = lits.iter();
                let first = parts
                    .next()
                    .ok_or_else(|| Error::Invalid("empty term observation".to_string()))?;
                let mut out = lit(&first.0, first.1)?;
                for (v, pos) in parts {
                    out = Formula::apply(and.clone(), vec![out, lit(v, *pos)?])?;
                }
                Ok(out)
            }
            Query::Clause(lits) => {
                let mut parts = lits.iter();
                let first = parts
                    .next()
                    .ok_or_else(|| Error::Invalid("empty clause observation".to_string()))?;
                let mut out = lit(&first.0, first.1)?;
                for (v, pos) in parts {
                    out = Formula::apply(or.clone(), vec![out, lit(v, *pos)?])?;
                }
                Ok(out)
            }
            Query::Formula(f) => Ok(f.clone()),
        }
    }
}

/// Whether explanations may use both polarities or positive literals only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExplanationMode {
    Literal,
    Positive,
}

/// A set of literals over the hypotheses, with no complementary pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Explanation {
    literals: Vec<(String, bool)>,
}

impl Explanation {
    pub fn new(literals: impl IntoIterator<Item = (String, bool)>) -> Self {
        let set: BTreeSet<(String, bool)> = literals.into_iter().collect();
        Explanation {
            literals: set.into_iter().collect(),
        }
    }

    pub fn literals(&self) -> &[(String, bool)] {
        &self.literals
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    /// Set inclusion on literal sets.
    pub fn subset_of(&self, other: &Explanation) -> bool {
        self.literals.iter().all(|l| other.literals.contains(l))
    }
}

impl fmt::Display for Explanation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, pos)) in self.literals.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}{v}", if *pos { "" } else { "!" })?;
        }
        write!(f, "}}")
    }
}

/// Knowledge base, hypothesis set, observation and explanation mode.
#[derive(Debug, Clone)]
pub struct AbductionInstance {
    knowledge: Theory,
    hypotheses: BTreeSet<String>,
    query: Query,
    mode: ExplanationMode,
}

impl AbductionInstance {
    pub fn new(
        knowledge: Theory,
        hypotheses: impl IntoIterator<Item = String>,
        query: Query,
        mode: ExplanationMode,
    ) -> Result<Self> {
        let hypotheses: BTreeSet<String> = hypotheses.into_iter().collect();
        for h in &hypotheses {
            if !knowledge.universe().contains(h) {
                return Err(Error::Invalid(format!(
                    "hypothesis `{h}` does not occur in the knowledge base"
                )));
            }
        }
        if let Query::Proposition(q) = &query {
            if !knowledge.universe().contains(q) || hypotheses.contains(q) {
                return Err(Error::Invalid(format!(
                    "observation `{q}` must occur in the knowledge base outside the hypotheses"
                )));
            }
        }
        Ok(AbductionInstance {
            knowledge,
            hypotheses,
            query,
            mode,
        })
    }

    pub fn knowledge(&self) -> &Theory {
        &self.knowledge
    }

    pub fn hypotheses(&self) -> &BTreeSet<String> {
        &self.hypotheses
    }

    pub fn query(&self) -> &Query {
        &self.query
    }

    pub fn mode(&self) -> ExplanationMode {
        self.mode
    }

    fn engine(&self, var_cap: usize) -> Result<AbductionEngine> {
        AbductionEngine::new(self, var_cap)
    }

    /// Both conditions of the definition: the knowledge base stays
    /// consistent with `e`, and together they entail the observation.
    pub fn is_explanation(&self, e: &Explanation) -> Result<bool> {
        for (v, _) in e.literals() {
            if !self.hypotheses.contains(v) {
                return Err(Error::Invalid(format!(
                    "explanation literal over `{v}` lies outside the hypotheses"
                )));
            }
        }
        if let ExplanationMode::Positive = self.mode {
            if e.literals().iter().any(|(_, pos)| !pos) {
                return Err(Error::Invalid(
                    "negative literal in a positive-mode explanation".to_string(),
                ));
            }
        }
        // complementary pairs are consistent input, never an explanation
        for (v, pos) in e.literals() {
            if *pos && e.literals().contains(&(v.clone(), false)) {
                return Ok(false);
            }
        }
        let engine = self.engine(DEFAULT_VAR_CAP)?;
        Ok(engine.check_literals(e.literals()))
    }

    /// All explanations, in canonical order: hypotheses scanned in sorted
    /// order, each absent, positive or negative (absent or present in
    /// positive mode).
    pub fn explanations(&self) -> Result<Vec<Explanation>> {
        self.explanations_with_caps(DEFAULT_HYPOTHESIS_CAP, DEFAULT_VAR_CAP)
    }

    pub fn explanations_with_caps(
        &self,
        hypothesis_cap: usize,
        var_cap: usize,
    ) -> Result<Vec<Explanation>> {
        let hyps: Vec<String> = self.hypotheses.iter().cloned().collect();
        if hyps.len() > hypothesis_cap {
            return Err(Error::CapExceeded {
                what: "hypothesis enumeration",
                size: hyps.len(),
                cap: hypothesis_cap,
            });
        }
        let engine = self.engine(var_cap)?;
        let states: u64 = match self.mode {
            ExplanationMode::Literal => 3,
            ExplanationMode::Positive => 2,
        };
        let n = hyps.len() as u32;
        let total = states.pow(n);
        let mut out = Vec::new();
        for code in 0..total {
            let mut literals = Vec::new();
            let mut rest = code;
            for h in &hyps {
                let state = rest % states;
                rest /= states;
                match state {
                    0 => {}
                    1 => literals.push((h.clone(), true)),
                    _ => literals.push((h.clone(), false)),
                }
            }
            if engine.check_literals(&literals) {
                out.push(Explanation::new(literals));
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn explanation_exists(&self) -> Result<bool> {
        Ok(!self.explanations()?.is_empty())
    }

    /// Explanations with no proper sub-explanation.
    pub fn subset_minimal_explanations(&self) -> Result<Vec<Explanation>> {
        let all = self.explanations()?;
        Ok(all
            .iter()
            .filter(|e| {
                !all.iter()
                    .any(|other| other != *e && other.subset_of(e))
            })
            .cloned()
            .collect())
    }

    pub fn count_explanations(&self) -> Result<u64> {
        Ok(self.explanations()?.len() as u64)
    }

    pub fn count_subset_minimal(&self) -> Result<u64> {
        Ok(self.subset_minimal_explanations()?.len() as u64)
    }
}

// Precomputed masks: knowledge base, observation and per-literal masks.
struct AbductionEngine {
    knowledge: Bits,
    query: Bits,
    space: ModelSpace,
}

impl AbductionEngine {
    fn new(inst: &AbductionInstance, var_cap: usize) -> Result<Self> {
        let query = inst.query.to_formula()?;
        let mut universe = inst.knowledge.universe().clone();
        query.collect_vars(&mut universe);
        let space = ModelSpace::new(universe, var_cap)?;
        let knowledge = inst.knowledge.mask_in(&space);
        let query = space.mask(&query);
        Ok(AbductionEngine {
            knowledge,
            query,
            space,
        })
    }

    fn check_literals(&self, literals: &[(String, bool)]) -> bool {
        let mut base = self.knowledge.clone();
        for (v, pos) in literals {
            let m = self.space.mask(&Formula::Prop(v.clone()));
            if *pos {
                base.and_assign(&m);
            } else {
                base.and_not_assign(&m);
            }
        }
        !base.is_empty() && base.is_subset(&self.query)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;

    fn fml(s: &str) -> Formula {
        parse_formula(s, &FunctionLibrary::standard()).unwrap()
    }

    fn instance(
        knowledge: &[&str],
        hyps: &[&str],
        query: Query,
        mode: ExplanationMode,
    ) -> AbductionInstance {
        AbductionInstance::new(
            Theory::new(knowledge.iter().map(|s| fml(s)).collect(), []),
            hyps.iter().map(|s| s.to_string()),
            query,
            mode,
        )
        .unwrap()
    }

    fn expl(lits: &[(&str, bool)]) -> Explanation {
        Explanation::new(lits.iter().map(|(v, p)| (v.to_string(), *p)))
    }

    #[test]
    fn explanation_checking() {
        let inst = instance(
            &["a -> q"],
            &["a"],
            Query::Proposition("q".to_string()),
            ExplanationMode::Literal,
        );
        assert!(inst.is_explanation(&expl(&[("a", true)])).unwrap());
        // consistent but does not entail the observation
        assert!(!inst.is_explanation(&expl(&[("a", false)])).unwrap());
        // complementary pair: well-formed input, never an explanation
        assert!(!inst
            .is_explanation(&expl(&[("a", true), ("a", false)]))
            .unwrap());
        // literals outside the hypotheses are rejected loudly
        let bad = Explanation::new([("q".to_string(), true)]);
        assert!(inst.is_explanation(&bad).is_err());
    }

    #[test]
    fn enumeration_matches_the_hand_count() {
        let inst = instance(
            &["x -> q", "y -> q"],
            &["x", "y"],
            Query::Proposition("q".to_string()),
            ExplanationMode::Literal,
        );
        let all = inst.explanations().unwrap();
        assert_eq!(all.len(), 5);
        let expected: Vec<Explanation> = vec![
            expl(&[("x", false), ("y", true)]),
            expl(&[("x", true)]),
            expl(&[("x", true), ("y", false)]),
            expl(&[("x", true), ("y", true)]),
            expl(&[("y", true)]),
        ];
        assert_eq!(all, expected);
        let minimal = inst.subset_minimal_explanations().unwrap();
        assert_eq!(minimal, vec![expl(&[("x", true)]), expl(&[("y", true)])]);
        assert_eq!(inst.count_explanations().unwrap(), 5);
        assert_eq!(inst.count_subset_minimal().unwrap(), 2);
    }

    #[test]
    fn refuted_observation_has_no_explanation() {
        let inst = instance(
            &["!q", "a | 1"],
            &["a"],
            Query::Proposition("q".to_string()),
            ExplanationMode::Literal,
        );
        assert!(!inst.explanation_exists().unwrap());
        assert_eq!(inst.count_explanations().unwrap(), 0);
        assert_eq!(inst.count_subset_minimal().unwrap(), 0);
    }

    #[test]
    fn empty_explanation_is_admitted_when_knowledge_suffices() {
        let inst = instance(
            &["q", "a | 1"],
            &["a"],
            Query::Proposition("q".to_string()),
            ExplanationMode::Literal,
        );
        let all = inst.explanations().unwrap();
        assert!(all.iter().any(|e| e.is_empty()));
    }

    #[test]
    fn positive_mode_restricts_to_subsets() {
        let inst = instance(
            &["a -> q"],
            &["a"],
            Query::Proposition("q".to_string()),
            ExplanationMode::Positive,
        );
        assert_eq!(inst.count_explanations().unwrap(), 1);
        assert_eq!(inst.count_subset_minimal().unwrap(), 1);
        let literal = instance(
            &["a -> q"],
            &["a"],
            Query::Proposition("q".to_string()),
            ExplanationMode::Literal,
        );
        // every positive-mode explanation is a literal-mode explanation
        let pos = inst.explanations().unwrap();
        let lit = literal.explanations().unwrap();
        assert!(pos.iter().all(|e| lit.contains(e)));
    }

    #[test]
    fn query_variants() {
        let term = instance(
            &["a -> q1", "a -> q2"],
            &["a"],
            Query::Term(vec![("q1".to_string(), true), ("q2".to_string(), true)]),
            ExplanationMode::Literal,
        );
        assert!(term.is_explanation(&expl(&[("a", true)])).unwrap());

        let clause = instance(
            &["a -> q1", "q2 | 1"],
            &["a"],
            Query::Clause(vec![("q1".to_string(), true), ("q2".to_string(), true)]),
            ExplanationMode::Literal,
        );
        assert!(clause.is_explanation(&expl(&[("a", true)])).unwrap());

        let impossible = instance(
            &["a -> q"],
            &["a"],
            Query::Formula(fml("0")),
            ExplanationMode::Literal,
        );
        assert_eq!(impossible.count_explanations().unwrap(), 0);

        let literal = instance(
            &["a -> !q", "q | a | 1"],
            &["a"],
            Query::Literal("q".to_string(), false),
            ExplanationMode::Literal,
        );
        assert!(literal.is_explanation(&expl(&[("a", true)])).unwrap());
    }

    #[test]
    fn proposition_queries_must_avoid_the_hypotheses() {
        let theory = Theory::new(vec![fml("a -> q")], []);
        assert!(AbductionInstance::new(
            theory.clone(),
            ["a".to_string()],
            Query::Proposition("a".to_string()),
            ExplanationMode::Literal,
        )
        .is_err());
        assert!(AbductionInstance::new(
            theory,
            ["a".to_string()],
            Query::Proposition("zz".to_string()),
            ExplanationMode::Literal,
        )
        .is_err());
    }

    #[test]
    fn superset_closure_of_explanations() {
        let inst = instance(
            &["x -> q", "y -> q"],
            &["x", "y"],
            Query::Proposition("q".to_string()),
            ExplanationMode::Literal,
        );
        let all = inst.explanations().unwrap();
        for e in &all {
            for other in &all {
                if e.subset_of(other) {
                    assert!(inst.is_explanation(other).unwrap());
                }
            }
        }
    }
}
