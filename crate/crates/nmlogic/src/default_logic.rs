//! Stable-extension semantics for propositional default theories.
//!
//! Extensions are found by candidate checking: guess the generating rule
//! set, build the closure base, and replay the staged construction with the
//! closure as the consistency reference. A candidate passes when the stage
//! fixpoint is semantically equivalent to the closure and every guessed
//! rule actually fired. Candidates with equivalent closures are merged, so
//! the reported extensions are semantic equivalence classes.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::func::BooleanFunction;
use crate::post::is_monotone;
use crate::theory::{Assignment, Bits, ModelSpace, Theory, DEFAULT_VAR_CAP};

/// Default cap on the number of rules enumerated by subset search.
pub const DEFAULT_RULE_CAP: usize = 16;

/// An inference rule `premise : justification / conclusion`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefaultRule {
    pub premise: Formula,
    pub justification: Formula,
    pub conclusion: Formula,
}

impl DefaultRule {
    pub fn new(premise: Formula, justification: Formula, conclusion: Formula) -> Self {
        DefaultRule {
            premise,
            justification,
            conclusion,
        }
    }
}

/// A pair of facts and default rules over a shared universe.
#[derive(Debug, Clone)]
pub struct DefaultTheory {
    facts: Theory,
    rules: Vec<DefaultRule>,
}

impl DefaultTheory {
    /// The universe is Vars(W) u Vars(D) u `extra`.
    pub fn new(
        facts: Vec<Formula>,
        rules: Vec<DefaultRule>,
        extra: impl IntoIterator<Item = String>,
    ) -> Self {
        let mut universe: BTreeSet<String> = extra.into_iter().collect();
        for r in &rules {
            r.premise.collect_vars(&mut universe);
            r.justification.collect_vars(&mut universe);
            r.conclusion.collect_vars(&mut universe);
        }
        let facts = Theory::new(facts, universe);
        DefaultTheory { facts, rules }
    }

    pub fn facts(&self) -> &Theory {
        &self.facts
    }

    pub fn rules(&self) -> &[DefaultRule] {
        &self.rules
    }

    pub fn universe(&self) -> &BTreeSet<String> {
        self.facts.universe()
    }

    /// All distinct functions used anywhere in the theory.
    pub fn functions(&self) -> BTreeSet<Arc<BooleanFunction>> {
        let mut out = BTreeSet::new();
        for f in self.facts.formulas() {
            f.collect_functions(&mut out);
        }
        for r in &self.rules {
            r.premise.collect_functions(&mut out);
            r.justification.collect_functions(&mut out);
            r.conclusion.collect_functions(&mut out);
        }
        out
    }

    /// The closure base W u { conclusion(d) | d in `generating` }.
    pub fn closure_base(&self, generating: &[usize]) -> Theory {
        let mut formulas = self.facts.formulas().to_vec();
        for &i in generating {
            formulas.push(self.rules[i].conclusion.clone());
        }
        Theory::new(formulas, self.universe().iter().cloned())
    }

    fn engine(&self) -> Result<Engine> {
        Engine::new(self, DEFAULT_VAR_CAP)
    }

    /// Checks one candidate generating set against the staged construction.
    pub fn is_stable_extension(&self, generating: &[usize]) -> Result<bool> {
        if self.rules.len() > 63 {
            return Err(Error::CapExceeded {
                what: "default rule enumeration",
                size: self.rules.len(),
                cap: 63,
            });
        }
        for &i in generating {
            if i >= self.rules.len() {
                return Err(Error::Invalid(format!("rule index {i} out of range")));
            }
        }
        let engine = self.engine()?;
        let mut mask = 0u64;
        for &i in generating {
            mask |= 1 << i;
        }
        Ok(engine.check(mask))
    }

    /// One witness per semantically distinct stable extension, ordered by
    /// the generating-set index vector.
    pub fn stable_extensions(&self) -> Result<Vec<ExtensionWitness>> {
        self.stable_extensions_with_caps(DEFAULT_RULE_CAP, DEFAULT_VAR_CAP)
    }

    pub fn stable_extensions_with_caps(
        &self,
        rule_cap: usize,
        var_cap: usize,
    ) -> Result<Vec<ExtensionWitness>> {
        if self.rules.len() > rule_cap {
            return Err(Error::CapExceeded {
                what: "default rule enumeration",
                size: self.rules.len(),
                cap: rule_cap,
            });
        }
        let engine = Engine::new(self, var_cap)?;
        let n = self.rules.len();
        // subsets in lexicographic order of their index vectors
        let mut order: Vec<u64> = (0..1u64 << n).collect();
        order.sort_by_key(|&m| index_vector(m, n));
        let mut seen: Vec<Bits> = Vec::new();
        let mut out = Vec::new();
        for mask in order {
            if !engine.check(mask) {
                continue;
            }
            let closure = engine.closure_mask(mask);
            if seen.iter().any(|c| *c == closure) {
                continue;
            }
            let generating = index_vector(mask, n);
            let base = self.closure_base(&generating);
            out.push(ExtensionWitness {
                inconsistent: closure.is_empty(),
                generating,
                closure_base: base,
            });
            seen.push(closure);
        }
        Ok(out)
    }

    pub fn count_stable_extensions(&self) -> Result<usize> {
        Ok(self.stable_extensions()?.len())
    }

    /// Existence check with early exit, without materializing witnesses.
    pub fn has_stable_extension(&self) -> Result<bool> {
        self.has_stable_extension_with_caps(DEFAULT_RULE_CAP, DEFAULT_VAR_CAP)
    }

    pub fn has_stable_extension_with_caps(
        &self,
        rule_cap: usize,
        var_cap: usize,
    ) -> Result<bool> {
        if self.rules.len() > rule_cap {
            return Err(Error::CapExceeded {
                what: "default rule enumeration",
                size: self.rules.len(),
                cap: rule_cap,
            });
        }
        let engine = Engine::new(self, var_cap)?;
        Ok((0..1u64 << self.rules.len()).any(|mask| engine.check(mask)))
    }

    /// True iff some stable extension contains `query`.
    pub fn credulous(&self, query: &Formula) -> Result<bool> {
        for w in self.stable_extensions()? {
            if w.contains(query)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// True iff every stable extension contains `query`; vacuously true
    /// when there is none.
    pub fn skeptical(&self, query: &Formula) -> Result<bool> {
        for w in self.stable_extensions()? {
            if !w.contains(query)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Fast path for monotone theories: fire applicable rules iteratively.
    /// Such a theory has at most one extension; it has none exactly when a
    /// fired conclusion is equivalent to 0, which the all-ones assignment
    /// detects on monotone formulas.
    pub fn monotone_unique_extension(&self) -> Result<Option<ExtensionWitness>> {
        for f in self.functions() {
            if !is_monotone(&f) {
                return Err(Error::Precondition(format!(
                    "monotone fast path requires monotone functions, `{}` is not",
                    f.name()
                )));
            }
        }
        let all_ones = Assignment::constant(self.universe().iter(), true);
        let w_consistent = self
            .facts
            .formulas()
            .iter()
            .map(|f| f.evaluate(&all_ones))
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .all(|v| v);
        if !w_consistent {
            // inconsistent facts: the full language is the one extension
            return Ok(Some(ExtensionWitness {
                generating: Vec::new(),
                closure_base: self.closure_base(&[]),
                inconsistent: true,
            }));
        }
        let mut fired: Vec<usize> = Vec::new();
        let mut current = self.facts.clone();
        loop {
            let mut progressed = false;
            for (i, rule) in self.rules.iter().enumerate() {
                if fired.contains(&i) {
                    continue;
                }
                // a monotone justification is either 1-reproducing or
                // identically 0; only the latter blocks the rule here
                if !rule.justification.evaluate(&all_ones)? {
                    continue;
                }
                if current.entails(&rule.premise)? {
                    fired.push(i);
                    current = self.closure_base(&fired);
                    progressed = true;
                }
            }
            if !progressed {
                break;
            }
        }
        for &i in &fired {
            if !self.rules[i].conclusion.evaluate(&all_ones)? {
                return Ok(None);
            }
        }
        fired.sort_unstable();
        Ok(Some(ExtensionWitness {
            closure_base: self.closure_base(&fired),
            generating: fired,
            inconsistent: false,
        }))
    }
}

fn index_vector(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask & (1 << i) != 0).collect()
}

/// A CNF formula whose clauses hold exactly three literals (repeats allowed).
/// A literal is a proposition name with a polarity.
#[derive(Debug, Clone)]
pub struct Cnf3 {
    pub clauses: Vec<[(String, bool); 3]>,
}

impl Cnf3 {
    pub fn vars(&self) -> BTreeSet<String> {
        self.clauses
            .iter()
            .flat_map(|c| c.iter().map(|(v, _)| v.clone()))
            .collect()
    }

    pub fn is_satisfiable(&self) -> bool {
        let vars: Vec<String> = self.vars().into_iter().collect();
        let n = vars.len();
        (0..1usize << n).any(|m| {
            self.clauses.iter().all(|clause| {
                clause.iter().any(|(v, pos)| {
                    let j = vars.iter().position(|x| x == v).unwrap();
                    let val = (m >> (n - 1 - j)) & 1 == 1;
                    val == *pos
                })
            })
        })
    }
}

/// Reduction from 3CNF satisfiability to extension existence: guessing
/// rules `1 : x / x` and `1 : !x / !x` per variable, plus one rule
/// `~l1 : ~l2 / l3` per clause. The input is satisfiable iff the resulting
/// theory has a stable extension.
pub fn sat_to_default(cnf: &Cnf3) -> Result<DefaultTheory> {
    let lib = crate::func::FunctionLibrary::standard();
    let one = Formula::apply(lib.lookup("const1")?, vec![])?;
    let not = lib.lookup("not")?;
    let literal = |v: &str, pos: bool| -> Result<Formula> {
        let p = Formula::prop(v);
        if pos {
            Ok(p)
        } else {
            Formula::apply(not.clone(), vec![p])
        }
    };
    let mut rules = Vec::new();
    for v in cnf.vars() {
        rules.push(DefaultRule::new(
            one.clone(),
            literal(&v, true)?,
            literal(&v, true)?,
        ));
        rules.push(DefaultRule::new(
            one.clone(),
            literal(&v, false)?,
            literal(&v, false)?,
        ));
    }
    for clause in &cnf.clauses {
        let (v1, p1) = &clause[0];
        let (v2, p2) = &clause[1];
        let (v3, p3) = &clause[2];
        rules.push(DefaultRule::new(
            literal(v1, !p1)?,
            literal(v2, !p2)?,
            literal(v3, *p3)?,
        ));
    }
    Ok(DefaultTheory::new(Vec::new(), rules, []))
}

/// A stable extension, represented by its generating rules and closure base.
#[derive(Debug, Clone)]
pub struct ExtensionWitness {
    pub generating: Vec<usize>,
    pub closure_base: Theory,
    pub inconsistent: bool,
}

impl ExtensionWitness {
    /// Membership of `query` in the extension (the closure of the base).
    pub fn contains(&self, query: &Formula) -> Result<bool> {
        self.closure_base.entails(query)
    }
}

// Precomputed model masks for candidate checking.
struct Engine {
    premise: Vec<Bits>,
    justification: Vec<Bits>,
    conclusion: Vec<Bits>,
    facts: Bits,
}

impl Engine {
    fn new(theory: &DefaultTheory, var_cap: usize) -> Result<Self> {
        let space = ModelSpace::new(theory.universe().clone(), var_cap)?;
        Ok(Engine {
            premise: theory
                .rules
                .iter()
                .map(|r| space.mask(&r.premise))
                .collect(),
            justification: theory
                .rules
                .iter()
                .map(|r| space.mask(&r.justification))
                .collect(),
            conclusion: theory
                .rules
                .iter()
                .map(|r| space.mask(&r.conclusion))
                .collect(),
            facts: theory.facts.mask_in(&space),
        })
    }

    fn closure_mask(&self, generating: u64) -> Bits {
        let mut e = self.facts.clone();
        for (i, c) in self.conclusion.iter().enumerate() {
            if generating & (1 << i) != 0 {
                e.and_assign(c);
            }
        }
        e
    }

    /// Replays the staged construction with the candidate closure as the
    /// consistency reference; stable iff the stage fixpoint has exactly the
    /// candidate models and every guessed rule fired.
    fn check(&self, generating: u64) -> bool {
        let e = self.closure_mask(generating);
        let mut g = self.facts.clone();
        let mut fired = 0u64;
        loop {
            let mut progressed = false;
            for i in 0..self.premise.len() {
                if fired & (1 << i) != 0 {
                    continue;
                }
                // applicable: premise entailed by the stage so far and the
                // justification consistent with the candidate closure
                if g.is_subset(&self.premise[i]) && e.intersects(&self.justification[i]) {
                    g.and_assign(&self.conclusion[i]);
                    fired |= 1 << i;
                    progressed = true;
                }
            }
            if !progressed {
                break;
            }
        }
        g == e && generating & !fired == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;
    use crate::func::FunctionLibrary;

    fn lib() -> FunctionLibrary {
        FunctionLibrary::standard()
    }

    fn fml(s: &str) -> Formula {
        parse_formula(s, &lib()).unwrap()
    }

    fn rule(a: &str, b: &str, g: &str) -> DefaultRule {
        DefaultRule::new(fml(a), fml(b), fml(g))
    }

    // W = {x}, D = { x : y / z }
    fn example_one() -> DefaultTheory {
        DefaultTheory::new(vec![fml("x")], vec![rule("x", "y", "z")], [])
    }

    // W = {}, D = { 1 : x / !y, 1 : y / !x }
    fn example_two() -> DefaultTheory {
        DefaultTheory::new(
            vec![],
            vec![rule("1", "x", "!y"), rule("1", "y", "!x")],
            [],
        )
    }

    #[test]
    fn single_default_fires_and_derives_its_conclusion() {
        let t = example_one();
        assert!(t.is_stable_extension(&[0]).unwrap());
        assert!(!t.is_stable_extension(&[]).unwrap());
        let witnesses = t.stable_extensions().unwrap();
        assert_eq!(witnesses.len(), 1);
        assert!(witnesses[0].contains(&fml("z")).unwrap());
        assert!(t.credulous(&fml("z")).unwrap());
        assert!(t.skeptical(&fml("z")).unwrap());
    }

    #[test]
    fn contrary_fact_blocks_the_default() {
        let t = DefaultTheory::new(vec![fml("x"), fml("!y")], vec![rule("x", "y", "z")], []);
        assert!(!t.is_stable_extension(&[0]).unwrap());
        assert!(t.is_stable_extension(&[]).unwrap());
        let witnesses = t.stable_extensions().unwrap();
        assert_eq!(witnesses.len(), 1);
        assert!(!witnesses[0].contains(&fml("z")).unwrap());
    }

    #[test]
    fn mutually_blocking_defaults_give_two_extensions() {
        let t = example_two();
        assert!(t.is_stable_extension(&[0]).unwrap());
        assert!(t.is_stable_extension(&[1]).unwrap());
        assert!(!t.is_stable_extension(&[0, 1]).unwrap());
        assert!(!t.is_stable_extension(&[]).unwrap());
        assert_eq!(t.count_stable_extensions().unwrap(), 2);
        // !y holds in one extension but not the other
        assert!(t.credulous(&fml("!y")).unwrap());
        assert!(!t.skeptical(&fml("!y")).unwrap());
    }

    #[test]
    fn inconsistent_facts_yield_the_full_language_once() {
        let t = DefaultTheory::new(
            vec![fml("x"), fml("!x")],
            vec![rule("1", "y", "y"), rule("1", "z", "z")],
            [],
        );
        let witnesses = t.stable_extensions().unwrap();
        assert_eq!(witnesses.len(), 1);
        assert!(witnesses[0].inconsistent);
        assert!(witnesses[0].generating.is_empty());
        // the full language contains everything
        assert!(t.skeptical(&fml("q & !q")).unwrap());
    }

    #[test]
    fn empty_theory_has_one_extension() {
        let t = DefaultTheory::new(vec![], vec![], []);
        assert_eq!(t.count_stable_extensions().unwrap(), 1);
        assert!(!t.credulous(&fml("x")).unwrap());
        assert!(!t.skeptical(&fml("x")).unwrap());
    }

    #[test]
    fn conflicting_unconditional_defaults_destroy_all_extensions() {
        let t = DefaultTheory::new(vec![], vec![rule("1", "1", "x"), rule("1", "1", "!x")], []);
        assert_eq!(t.count_stable_extensions().unwrap(), 0);
        // skeptical reasoning is vacuously true with no extensions
        assert!(t.skeptical(&fml("x")).unwrap());
        assert!(!t.credulous(&fml("x")).unwrap());
    }

    #[test]
    fn monotone_fast_path_agrees_with_enumeration() {
        let t = DefaultTheory::new(vec![fml("x")], vec![rule("x", "1", "y")], []);
        let w = t.monotone_unique_extension().unwrap().unwrap();
        assert_eq!(w.generating, vec![0]);
        assert!(w.contains(&fml("y")).unwrap());
        assert_eq!(t.count_stable_extensions().unwrap(), 1);

        // justification 0 never fires
        let blocked = DefaultTheory::new(vec![fml("x")], vec![rule("x", "0", "y")], []);
        let w = blocked.monotone_unique_extension().unwrap().unwrap();
        assert!(w.generating.is_empty());
        assert_eq!(blocked.count_stable_extensions().unwrap(), 1);

        // a fired conclusion equivalent to 0 kills the extension
        let dead = DefaultTheory::new(vec![fml("x")], vec![rule("x", "1", "0")], []);
        assert!(dead.monotone_unique_extension().unwrap().is_none());
        assert_eq!(dead.count_stable_extensions().unwrap(), 0);

        let nonmono = example_two();
        assert!(matches!(
            nonmono.monotone_unique_extension(),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn firing_order_does_not_matter() {
        let rules = vec![
            rule("1", "1", "a"),
            rule("a", "b", "c"),
            rule("c", "1", "d"),
        ];
        let extension_models = |t: &DefaultTheory| -> BTreeSet<Vec<Assignment>> {
            t.stable_extensions()
                .unwrap()
                .iter()
                .map(|w| w.closure_base.models().unwrap())
                .collect()
        };
        let t = DefaultTheory::new(vec![], rules.clone(), []);
        let reference = extension_models(&t);
        for perm in [[2, 1, 0], [1, 2, 0], [2, 0, 1]] {
            let shuffled: Vec<DefaultRule> = perm.iter().map(|&i| rules[i].clone()).collect();
            let t2 = DefaultTheory::new(vec![], shuffled, []);
            assert_eq!(extension_models(&t2), reference);
            assert_eq!(
                t.credulous(&fml("d")).unwrap(),
                t2.credulous(&fml("d")).unwrap()
            );
        }
    }

    #[test]
    fn sat_reduction_examples() {
        let lit = |v: &str, p: bool| (v.to_string(), p);
        // (x | x | x): satisfiable, 2 variable rules + 1 clause rule
        let single = Cnf3 {
            clauses: vec![[lit("x", true), lit("x", true), lit("x", true)]],
        };
        let t = sat_to_default(&single).unwrap();
        assert_eq!(t.rules().len(), 3);
        assert!(single.is_satisfiable());
        assert!(t.count_stable_extensions().unwrap() > 0);

        // (x | x | x) & (!x | !x | !x): unsatisfiable, no extension
        let contradiction = Cnf3 {
            clauses: vec![
                [lit("x", true), lit("x", true), lit("x", true)],
                [lit("x", false), lit("x", false), lit("x", false)],
            ],
        };
        assert!(!contradiction.is_satisfiable());
        let t = sat_to_default(&contradiction).unwrap();
        assert_eq!(t.count_stable_extensions().unwrap(), 0);

        let wide = Cnf3 {
            clauses: vec![[lit("x", true), lit("y", true), lit("z", true)]],
        };
        let t = sat_to_default(&wide).unwrap();
        assert!(t.count_stable_extensions().unwrap() > 0);
    }

    #[test]
    fn rule_cap_is_enforced() {
        let rules: Vec<DefaultRule> = (0..17).map(|_| rule("1", "1", "x")).collect();
        let t = DefaultTheory::new(vec![], rules, []);
        assert!(matches!(
            t.stable_extensions(),
            Err(Error::CapExceeded { .. })
        ));
    }
}
