//! Stable-expansion semantics via full sets.
//!
//! Expansions are represented by total signings of the belief-prefixed
//! subformulas; the infinite expansion itself is never materialized. The
//! objective entailment relation treats each maximal belief node as one
//! fresh atom, with the signing contributing unit constraints on those
//! atoms. A signing is full when, for every belief subformula `L(psi)`,
//! the theory plus the signing entails `psi` exactly if the sign is
//! positive; full sets are in bijection with stable expansions.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::formula::{parse_ast, Ast, Formula};
use crate::func::{BooleanFunction, FunctionLibrary};
use crate::theory::{fresh_name, Bits, ModelSpace, DEFAULT_VAR_CAP};

/// Default cap on the number of belief subformulas enumerated by sign search.
pub const DEFAULT_SIGN_CAP: usize = 20;

/// A formula of the autoepistemic dialect: propositional structure plus the
/// belief operator, written `L(...)`. Belief nodes may nest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AeFormula {
    Prop(String),
    Apply(Arc<BooleanFunction>, Vec<AeFormula>),
    Belief(Box<AeFormula>),
}

impl AeFormula {
    pub fn prop(name: &str) -> AeFormula {
        AeFormula::Prop(name.to_string())
    }

    pub fn belief(inner: AeFormula) -> AeFormula {
        AeFormula::Belief(Box::new(inner))
    }

    pub fn apply(f: Arc<BooleanFunction>, args: Vec<AeFormula>) -> Result<AeFormula> {
        if args.len() != f.arity() {
            return Err(Error::ArityMismatch {
                name: f.name().to_string(),
                expected: f.arity(),
                got: args.len(),
            });
        }
        Ok(AeFormula::Apply(f, args))
    }

    /// Embeds a plain formula (no belief nodes appear).
    pub fn from_formula(f: &Formula) -> AeFormula {
        match f {
            Formula::Prop(p) => AeFormula::Prop(p.clone()),
            Formula::Apply(func, args) => AeFormula::Apply(
                func.clone(),
                args.iter().map(AeFormula::from_formula).collect(),
            ),
        }
    }

    /// All propositions, including those inside belief nodes.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            AeFormula::Prop(p) => {
                out.insert(p.clone());
            }
            AeFormula::Apply(_, args) => {
                for a in args {
                    a.collect_vars(out);
                }
            }
            AeFormula::Belief(inner) => inner.collect_vars(out),
        }
    }

    pub fn functions(&self) -> BTreeSet<Arc<BooleanFunction>> {
        let mut out = BTreeSet::new();
        self.collect_functions(&mut out);
        out
    }

    fn collect_functions(&self, out: &mut BTreeSet<Arc<BooleanFunction>>) {
        match self {
            AeFormula::Prop(_) => {}
            AeFormula::Apply(f, args) => {
                out.insert(f.clone());
                for a in args {
                    a.collect_functions(out);
                }
            }
            AeFormula::Belief(inner) => inner.collect_functions(out),
        }
    }

    pub fn mentions_nullary(&self, name: &str) -> bool {
        match self {
            AeFormula::Prop(_) => false,
            AeFormula::Apply(f, args) => {
                (f.arity() == 0 && f.name() == name)
                    || args.iter().any(|a| a.mentions_nullary(name))
            }
            AeFormula::Belief(inner) => inner.mentions_nullary(name),
        }
    }

    pub fn replace_nullary(&self, name: &str, with: &AeFormula) -> AeFormula {
        match self {
            AeFormula::Prop(_) => self.clone(),
            AeFormula::Apply(f, args) => {
                if f.arity() == 0 && f.name() == name {
                    with.clone()
                } else {
                    AeFormula::Apply(
                        f.clone(),
                        args.iter().map(|a| a.replace_nullary(name, with)).collect(),
                    )
                }
            }
            AeFormula::Belief(inner) => {
                AeFormula::belief(inner.replace_nullary(name, with))
            }
        }
    }

    fn collect_beliefs(&self, out: &mut Vec<AeFormula>) {
        match self {
            AeFormula::Prop(_) => {}
            AeFormula::Apply(_, args) => {
                for a in args {
                    a.collect_beliefs(out);
                }
            }
            AeFormula::Belief(inner) => {
                if !out.contains(self) {
                    out.push(self.clone());
                }
                inner.collect_beliefs(out);
            }
        }
    }

    /// Replaces each maximal belief node by its atom proposition.
    fn atomize(&self, atoms: &[(AeFormula, String)]) -> Result<Formula> {
        match self {
            AeFormula::Prop(p) => Ok(Formula::Prop(p.clone())),
            AeFormula::Apply(f, args) => Ok(Formula::Apply(
                f.clone(),
                args.iter()
                    .map(|a| a.atomize(atoms))
                    .collect::<Result<Vec<_>>>()?,
            )),
            AeFormula::Belief(_) => atoms
                .iter()
                .find(|(b, _)| b == self)
                .map(|(_, name)| Formula::Prop(name.clone()))
                .ok_or_else(|| Error::UnknownBeliefAtom(self.to_string())),
        }
    }
}

impl fmt::Display for AeFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // belief nodes print as L(...); the propositional part reuses the
        // plain printer by treating beliefs as placeholders is not possible,
        // so the structure is printed directly
        match self {
            AeFormula::Prop(p) => write!(f, "{p}"),
            AeFormula::Belief(inner) => write!(f, "L({inner})"),
            AeFormula::Apply(func, args) => match (func.name(), args.len()) {
                ("const0", 0) => write!(f, "0"),
                ("const1", 0) => write!(f, "1"),
                ("not", 1) => write!(f, "!({})", args[0]),
                ("and", 2) => write!(f, "({}) & ({})", args[0], args[1]),
                ("or", 2) => write!(f, "({}) | ({})", args[0], args[1]),
                ("xor", 2) => write!(f, "({}) ^ ({})", args[0], args[1]),
                ("imp", 2) => write!(f, "({}) -> ({})", args[0], args[1]),
                ("eq", 2) => write!(f, "({}) <-> ({})", args[0], args[1]),
                (name, _) => {
                    write!(f, "{name}(")?;
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            write!(f, ", ")?;
                        }
                        write!(f, "{a}")?;
                    }
                    write!(f, ")")
                }
            },
        }
    }
}

/// Parses a formula of the autoepistemic dialect.
pub fn parse_ae_formula(text: &str, library: &FunctionLibrary) -> Result<AeFormula> {
    fn convert(ast: Ast) -> AeFormula {
        match ast {
            Ast::Prop(p) => AeFormula::Prop(p),
            Ast::Apply(f, args) => {
                AeFormula::Apply(f, args.into_iter().map(convert).collect())
            }
            Ast::Belief(inner) => AeFormula::belief(convert(*inner)),
        }
    }
    Ok(convert(parse_ast(text, library, true)?))
}

/// An ordered set of autoepistemic formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AeTheory {
    formulas: Vec<AeFormula>,
}

impl AeTheory {
    pub fn new(formulas: Vec<AeFormula>) -> Self {
        let mut seen = BTreeSet::new();
        let mut members = Vec::new();
        for f in formulas {
            if seen.insert(f.clone()) {
                members.push(f);
            }
        }
        AeTheory { formulas: members }
    }

    pub fn formulas(&self) -> &[AeFormula] {
        &self.formulas
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for f in &self.formulas {
            f.collect_vars(&mut out);
        }
        out
    }

    pub fn functions(&self) -> BTreeSet<Arc<BooleanFunction>> {
        let mut out = BTreeSet::new();
        for f in &self.formulas {
            out.extend(f.functions());
        }
        out
    }

    /// The belief-prefixed subformulas, nested ones included, deduplicated
    /// structurally, in first-occurrence order.
    pub fn l_subformulas(&self) -> Vec<AeFormula> {
        let mut out = Vec::new();
        for f in &self.formulas {
            f.collect_beliefs(&mut out);
        }
        out
    }

    /// `theory u signing |= query` with maximal belief nodes read as atoms.
    /// Every maximal belief node of `query` must occur among the theory's
    /// belief subformulas.
    pub fn objective_entails(&self, signing: &FullSet, query: &AeFormula) -> Result<bool> {
        self.objective_entails_with_cap(signing, query, DEFAULT_VAR_CAP)
    }

    pub fn objective_entails_with_cap(
        &self,
        signing: &FullSet,
        query: &AeFormula,
        var_cap: usize,
    ) -> Result<bool> {
        let ctx = AtomContext::new(self, Some(query), var_cap)?;
        signing.check_alignment(&ctx.sf)?;
        let e = ctx.closure_mask(&signing.signs());
        Ok(e.is_subset(&ctx.mask_of(query)?))
    }

    /// Both biconditionals of the full-set condition, for every belief
    /// subformula.
    pub fn is_full_set(&self, signing: &FullSet) -> Result<bool> {
        self.is_full_set_with_cap(signing, DEFAULT_VAR_CAP)
    }

    pub fn is_full_set_with_cap(&self, signing: &FullSet, var_cap: usize) -> Result<bool> {
        let ctx = AtomContext::new(self, None, var_cap)?;
        signing.check_alignment(&ctx.sf)?;
        Ok(ctx.is_full(&signing.signs()))
    }

    /// All full sets, in the canonical sign-vector order (first subformula
    /// most significant, negative before positive).
    pub fn stable_expansions(&self) -> Result<Vec<FullSet>> {
        self.stable_expansions_with_caps(DEFAULT_SIGN_CAP, DEFAULT_VAR_CAP)
    }

    pub fn stable_expansions_with_caps(
        &self,
        sign_cap: usize,
        var_cap: usize,
    ) -> Result<Vec<FullSet>> {
        let ctx = AtomContext::new(self, None, var_cap)?;
        let m = ctx.sf.len();
        if m > sign_cap {
            return Err(Error::CapExceeded {
                what: "belief sign enumeration",
                size: m,
                cap: sign_cap,
            });
        }
        let mut out = Vec::new();
        for k in 0..1u64 << m {
            let signs: Vec<bool> = (0..m).map(|j| (k >> (m - 1 - j)) & 1 == 1).collect();
            if ctx.is_full(&signs) {
                let consistent = !ctx.closure_mask(&signs).is_empty();
                out.push(FullSet {
                    entries: ctx
                        .sf
                        .iter()
                        .cloned()
                        .zip(signs.iter().copied())
                        .collect(),
                    consistent,
                });
            }
        }
        Ok(out)
    }

    pub fn count_expansions(&self) -> Result<usize> {
        Ok(self.stable_expansions()?.len())
    }

    /// Existence check with early exit, without materializing full sets.
    pub fn expansion_exists(&self) -> Result<bool> {
        self.expansion_exists_with_caps(DEFAULT_SIGN_CAP, DEFAULT_VAR_CAP)
    }

    pub fn expansion_exists_with_caps(&self, sign_cap: usize, var_cap: usize) -> Result<bool> {
        let ctx = AtomContext::new(self, None, var_cap)?;
        let m = ctx.sf.len();
        if m > sign_cap {
            return Err(Error::CapExceeded {
                what: "belief sign enumeration",
                size: m,
                cap: sign_cap,
            });
        }
        Ok((0..1u64 << m).any(|k| {
            let signs: Vec<bool> = (0..m).map(|j| (k >> (m - 1 - j)) & 1 == 1).collect();
            ctx.is_full(&signs)
        }))
    }

    /// Membership of `query` in the expansion described by `signing`.
    pub fn expansion_member(&self, signing: &FullSet, query: &AeFormula) -> Result<bool> {
        self.objective_entails(signing, query)
    }

    pub fn credulous(&self, query: &AeFormula) -> Result<bool> {
        for fs in self.stable_expansions()? {
            if self.expansion_member(&fs, query)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Vacuously true when there is no expansion.
    pub fn skeptical(&self, query: &AeFormula) -> Result<bool> {
        for fs in self.stable_expansions()? {
            if !self.expansion_member(&fs, query)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Removes both constants: 1 through a fresh proposition that is added
    /// as a fact, 0 through the unprovable belief `L(f)` with `f` fresh.
    /// Consistent expansions correspond one to one across the rewrite.
    pub fn eliminate_constants(&self) -> AeTheory {
        let mut taken = self.vars();
        let mut formulas = self.formulas.clone();
        if formulas.iter().any(|f| f.mentions_nullary("const1")) {
            let t = fresh_name("t", &taken);
            taken.insert(t.clone());
            let t_prop = AeFormula::prop(&t);
            formulas = formulas
                .iter()
                .map(|f| f.replace_nullary("const1", &t_prop))
                .collect();
            formulas.push(t_prop);
        }
        if formulas.iter().any(|f| f.mentions_nullary("const0")) {
            let f_name = fresh_name("f", &taken);
            let belief_f = AeFormula::belief(AeFormula::prop(&f_name));
            formulas = formulas
                .iter()
                .map(|f| f.replace_nullary("const0", &belief_f))
                .collect();
        }
        AeTheory::new(formulas)
    }
}

/// A total signing of the belief subformulas of a theory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullSet {
    entries: Vec<(AeFormula, bool)>,
    consistent: bool,
}

impl FullSet {
    /// A candidate signing for `theory`, aligned with its subformula order.
    pub fn candidate(theory: &AeTheory, signs: &[bool]) -> Result<FullSet> {
        let sf = theory.l_subformulas();
        if signs.len() != sf.len() {
            return Err(Error::Invalid(format!(
                "signing has {} entries, theory has {} belief subformulas",
                signs.len(),
                sf.len()
            )));
        }
        Ok(FullSet {
            entries: sf.into_iter().zip(signs.iter().copied()).collect(),
            consistent: true,
        })
    }

    pub fn entries(&self) -> &[(AeFormula, bool)] {
        &self.entries
    }

    pub fn sign_of(&self, belief: &AeFormula) -> Option<bool> {
        self.entries
            .iter()
            .find(|(b, _)| b == belief)
            .map(|&(_, s)| s)
    }

    /// Whether the corresponding expansion is consistent. Only meaningful on
    /// values returned by `stable_expansions`.
    pub fn is_consistent(&self) -> bool {
        self.consistent
    }

    fn signs(&self) -> Vec<bool> {
        self.entries.iter().map(|&(_, s)| s).collect()
    }

    fn check_alignment(&self, sf: &[AeFormula]) -> Result<()> {
        if self.entries.len() != sf.len()
            || self.entries.iter().zip(sf).any(|((a, _), b)| a != b)
        {
            return Err(Error::Invalid(
                "signing does not match the theory's belief subformulas".to_string(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for FullSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (b, s)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}{}", if *s { "+" } else { "-" }, b)?;
        }
        write!(f, "}}")
    }
}

// Shared atomization context: the belief subformulas, their atom names and
// the model-space masks used by fullness and entailment checks.
struct AtomContext {
    sf: Vec<AeFormula>,
    atoms: Vec<(AeFormula, String)>,
    space: ModelSpace,
    sigma: Bits,
    queries: Vec<Bits>,
    atom_masks: Vec<Bits>,
}

impl AtomContext {
    fn new(theory: &AeTheory, extra_query: Option<&AeFormula>, var_cap: usize) -> Result<Self> {
        let sf = theory.l_subformulas();
        let mut taken: BTreeSet<String> = theory.vars();
        if let Some(q) = extra_query {
            q.collect_vars(&mut taken);
        }
        let mut atoms = Vec::new();
        for (i, b) in sf.iter().enumerate() {
            let name = fresh_name(&format!("_l{i}"), &taken);
            taken.insert(name.clone());
            atoms.push((b.clone(), name));
        }
        // the space holds the objective propositions plus the belief atoms
        let mut universe = BTreeSet::new();
        let mut objective: Vec<Formula> = Vec::new();
        for f in theory.formulas() {
            let g = f.atomize(&atoms)?;
            g.collect_vars(&mut universe);
            objective.push(g);
        }
        let mut query_forms = Vec::new();
        for b in &sf {
            let inner = match b {
                AeFormula::Belief(inner) => inner,
                _ => unreachable!(),
            };
            let g = inner.atomize(&atoms)?;
            g.collect_vars(&mut universe);
            query_forms.push(g);
        }
        if let Some(q) = extra_query {
            let g = q.atomize(&atoms)?;
            g.collect_vars(&mut universe);
        }
        for (_, name) in &atoms {
            universe.insert(name.clone());
        }
        let space = ModelSpace::new(universe, var_cap)?;
        let sigma = space.theory_mask(&objective);
        let queries = query_forms.iter().map(|q| space.mask(q)).collect();
        let atom_masks = atoms
            .iter()
            .map(|(_, name)| space.mask(&Formula::Prop(name.clone())))
            .collect();
        Ok(AtomContext {
            sf,
            atoms,
            space,
            sigma,
            queries,
            atom_masks,
        })
    }

    fn closure_mask(&self, signs: &[bool]) -> Bits {
        let mut e = self.sigma.clone();
        for (j, &s) in signs.iter().enumerate() {
            if s {
                e.and_assign(&self.atom_masks[j]);
            } else {
                e.and_not_assign(&self.atom_masks[j]);
            }
        }
        e
    }

    fn is_full(&self, signs: &[bool]) -> bool {
        let e = self.closure_mask(signs);
        self.queries
            .iter()
            .zip(signs)
            .all(|(q, &s)| e.is_subset(q) == s)
    }

    fn mask_of(&self, query: &AeFormula) -> Result<Bits> {
        let g = query.atomize(&self.atoms)?;
        Ok(self.space.mask(&g))
    }
}

// ---------------------------------------------------------------------------
// Quantified Boolean formulas and the two reductions
// ---------------------------------------------------------------------------

/// An exists-forall quantified Boolean formula.
#[derive(Debug, Clone)]
pub struct QbfInstance {
    pub exists: Vec<String>,
    pub forall: Vec<String>,
    pub matrix: Formula,
}

impl QbfInstance {
    pub fn new(exists: Vec<String>, forall: Vec<String>, matrix: Formula) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for v in exists.iter().chain(&forall) {
            if !seen.insert(v.clone()) {
                return Err(Error::MalformedPrefix(format!(
                    "variable `{v}` quantified twice"
                )));
            }
        }
        for v in matrix.vars() {
            if !seen.contains(&v) {
                return Err(Error::MalformedPrefix(format!(
                    "matrix variable `{v}` is not quantified"
                )));
            }
        }
        Ok(QbfInstance {
            exists,
            forall,
            matrix,
        })
    }

    /// Brute-force validity: some assignment of the existential block such
    /// that the matrix holds under all assignments of the universal block.
    pub fn is_valid(&self) -> Result<bool> {
        let ne = self.exists.len();
        let nf = self.forall.len();
        for e in 0..1usize << ne {
            let mut ok = true;
            for a in 0..1usize << nf {
                let sigma = crate::theory::Assignment::from_pairs(
                    self.exists
                        .iter()
                        .enumerate()
                        .map(|(i, v)| (v.as_str(), (e >> (ne - 1 - i)) & 1 == 1))
                        .chain(
                            self.forall
                                .iter()
                                .enumerate()
                                .map(|(i, v)| (v.as_str(), (a >> (nf - 1 - i)) & 1 == 1)),
                        ),
                );
                if !self.matrix.evaluate(&sigma)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Validity-preserving reduction to expansion existence:
/// `{ L(x_i) <-> x_i }` for the existential block plus `{ L(matrix) }`.
pub fn qbf_to_ael(qbf: &QbfInstance) -> Result<AeTheory> {
    let lib = FunctionLibrary::standard();
    let eq = lib.lookup("eq")?;
    let mut formulas = Vec::new();
    for x in &qbf.exists {
        formulas.push(AeFormula::apply(
            eq.clone(),
            vec![
                AeFormula::belief(AeFormula::prop(x)),
                AeFormula::prop(x),
            ],
        )?);
    }
    formulas.push(AeFormula::belief(AeFormula::from_formula(&qbf.matrix)));
    Ok(AeTheory::new(formulas))
}

/// The negation-free variant: negative literals of the matrix (which must
/// be in negation normal form) are renamed to primed propositions, and the
/// complementarity of each pair is enforced with disjunctions only.
pub fn qbf_to_monotone_ael(qbf: &QbfInstance) -> Result<AeTheory> {
    let lib = FunctionLibrary::standard();
    let or = lib.lookup("or")?;

    let mut taken: BTreeSet<String> = qbf.exists.iter().chain(&qbf.forall).cloned().collect();
    let mut primes = std::collections::BTreeMap::new();
    for v in qbf.exists.iter().chain(&qbf.forall) {
        let p = fresh_name(&format!("{v}_p"), &taken);
        taken.insert(p.clone());
        primes.insert(v.clone(), p);
    }

    let renamed = rename_nnf(&qbf.matrix, &primes)?;

    let mut formulas = vec![AeFormula::belief(AeFormula::from_formula(&renamed))];
    for x in &qbf.exists {
        let xp = &primes[x];
        formulas.push(AeFormula::apply(
            or.clone(),
            vec![
                AeFormula::belief(AeFormula::prop(x)),
                AeFormula::prop(xp),
            ],
        )?);
        formulas.push(AeFormula::apply(
            or.clone(),
            vec![
                AeFormula::prop(x),
                AeFormula::belief(AeFormula::prop(xp)),
            ],
        )?);
    }
    for y in &qbf.forall {
        let yp = &primes[y];
        formulas.push(AeFormula::apply(
            or.clone(),
            vec![AeFormula::prop(y), AeFormula::prop(yp)],
        )?);
    }
    Ok(AeTheory::new(formulas))
}

// Rewrites an NNF formula, replacing negative literals by primed names.
fn rename_nnf(
    f: &Formula,
    primes: &std::collections::BTreeMap<String, String>,
) -> Result<Formula> {
    match f {
        Formula::Prop(p) => Ok(Formula::Prop(p.clone())),
        Formula::Apply(func, args) => match (func.name(), args.len()) {
            ("not", 1) => match &args[0] {
                Formula::Prop(p) => Ok(Formula::Prop(primes[p].clone())),
                other => Err(Error::NotNnf(format!(
                    "negation of a non-atomic subformula `{other}`"
                ))),
            },
            ("and", 2) | ("or", 2) => Ok(Formula::Apply(
                func.clone(),
                args.iter()
                    .map(|a| rename_nnf(a, primes))
                    .collect::<Result<Vec<_>>>()?,
            )),
            _ => Err(Error::NotNnf(format!(
                "operator `{}` is not allowed in the matrix",
                func.name()
            ))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;

    fn lib() -> FunctionLibrary {
        FunctionLibrary::standard()
    }

    fn ae(s: &str) -> AeFormula {
        parse_ae_formula(s, &lib()).unwrap()
    }

    fn theory(texts: &[&str]) -> AeTheory {
        AeTheory::new(texts.iter().map(|t| ae(t)).collect())
    }

    // { L(x) | y, x | L(y), L(x | y) -> z }
    fn example_three() -> AeTheory {
        theory(&["L(x) | y", "x | L(y)", "L(x | y) -> z"])
    }

    // { L(p) -> p }
    fn example_four() -> AeTheory {
        theory(&["L(p) -> p"])
    }

    #[test]
    fn belief_subformulas_in_occurrence_order() {
        let sf = example_three().l_subformulas();
        let printed: Vec<String> = sf.iter().map(|b| b.to_string()).collect();
        assert_eq!(printed, vec!["L(x)", "L(y)", "L((x) | (y))"]);

        assert_eq!(example_four().l_subformulas().len(), 1);

        let nested = theory(&["L(L(q))"]);
        let printed: Vec<String> = nested
            .l_subformulas()
            .iter()
            .map(|b| b.to_string())
            .collect();
        assert_eq!(printed, vec!["L(L(q))", "L(q)"]);
    }

    #[test]
    fn objective_entailment_reads_beliefs_as_atoms() {
        let t = example_four();
        let pos = FullSet::candidate(&t, &[true]).unwrap();
        let neg = FullSet::candidate(&t, &[false]).unwrap();
        assert!(t.objective_entails(&pos, &ae("p")).unwrap());
        assert!(!t.objective_entails(&neg, &ae("p")).unwrap());
        let empty = AeTheory::new(vec![]);
        let no_signs = FullSet::candidate(&empty, &[]).unwrap();
        assert!(empty.objective_entails(&no_signs, &ae("1")).unwrap());
    }

    #[test]
    fn queries_with_unknown_beliefs_are_rejected() {
        let t = example_four();
        let pos = FullSet::candidate(&t, &[true]).unwrap();
        assert!(matches!(
            t.objective_entails(&pos, &ae("L(q)")),
            Err(Error::UnknownBeliefAtom(_))
        ));
    }

    #[test]
    fn full_sets_of_the_worked_examples() {
        let t4 = example_four();
        for signs in [[true], [false]] {
            let cand = FullSet::candidate(&t4, &signs).unwrap();
            assert!(t4.is_full_set(&cand).unwrap());
        }

        let t3 = example_three();
        // believing y and x|y but not x is full; believing everything is not
        let good = FullSet::candidate(&t3, &[false, true, true]).unwrap();
        assert!(t3.is_full_set(&good).unwrap());
        let bad = FullSet::candidate(&t3, &[true, true, true]).unwrap();
        assert!(!t3.is_full_set(&bad).unwrap());
    }

    #[test]
    fn expansion_counts_of_the_worked_examples() {
        assert_eq!(example_three().count_expansions().unwrap(), 2);
        assert_eq!(example_four().count_expansions().unwrap(), 2);
        assert_eq!(AeTheory::new(vec![]).count_expansions().unwrap(), 1);
    }

    #[test]
    fn example_three_expansions_derive_the_claimed_formulas() {
        let t = example_three();
        let expansions = t.stable_expansions().unwrap();
        assert_eq!(expansions.len(), 2);
        // z is in both expansions, x and y split between them
        assert!(t.skeptical(&ae("z")).unwrap());
        assert!(t.credulous(&ae("x")).unwrap());
        assert!(t.credulous(&ae("y")).unwrap());
        assert!(!t.skeptical(&ae("x")).unwrap());
        assert!(!t.skeptical(&ae("y")).unwrap());
        let derives_y = expansions
            .iter()
            .find(|fs| t.expansion_member(fs, &ae("y")).unwrap())
            .expect("one expansion derives y");
        assert!(t.expansion_member(derives_y, &ae("z")).unwrap());
        assert!(!t.expansion_member(derives_y, &ae("x")).unwrap());
        let derives_x = expansions
            .iter()
            .find(|fs| t.expansion_member(fs, &ae("x")).unwrap())
            .expect("one expansion derives x");
        assert!(t.expansion_member(derives_x, &ae("z")).unwrap());
        assert!(!t.expansion_member(derives_x, &ae("y")).unwrap());
    }

    #[test]
    fn example_four_reasoning() {
        let t = example_four();
        assert!(t.credulous(&ae("p")).unwrap());
        assert!(!t.skeptical(&ae("p")).unwrap());
        assert!(t.skeptical(&ae("1")).unwrap());
    }

    #[test]
    fn believed_but_refuted_proposition_has_no_expansion() {
        // For { L(p), !p } neither signing is full: with +L(p) the theory
        // stays consistent (the belief atom and p are independent) yet does
        // not entail p; with -L(p) it turns inconsistent and entails p
        // against the negative sign. Checked here against both candidates.
        let t = theory(&["L(p)", "!p"]);
        for signs in [[true], [false]] {
            let cand = FullSet::candidate(&t, &signs).unwrap();
            assert!(!t.is_full_set(&cand).unwrap());
        }
        assert_eq!(t.count_expansions().unwrap(), 0);
    }

    #[test]
    fn constant_elimination() {
        let t = theory(&["0 | x"]);
        let t2 = t.eliminate_constants();
        assert_eq!(t2.formulas().len(), 1);
        assert!(t2.formulas()[0].to_string().contains("L(f)"));
        // expansions agree on x: exactly one, containing neither x nor !x
        assert_eq!(t.count_expansions().unwrap(), 1);
        assert_eq!(t2.count_expansions().unwrap(), 1);
        let e1 = &t.stable_expansions().unwrap()[0];
        let e2 = &t2.stable_expansions().unwrap()[0];
        assert_eq!(
            t.expansion_member(e1, &ae("x")).unwrap(),
            t2.expansion_member(e2, &ae("x")).unwrap()
        );

        let plain = theory(&["x -> y"]);
        assert_eq!(plain.eliminate_constants(), plain);

        let unit = theory(&["1"]);
        let unit2 = unit.eliminate_constants();
        assert_eq!(unit2.formulas().len(), 1);
        assert_eq!(unit2.formulas()[0].to_string(), "t");
    }

    #[test]
    fn qbf_reduction_mirrors_validity() {
        let l = lib();
        let valid = QbfInstance::new(
            vec!["x".into()],
            vec!["y".into()],
            parse_formula("x | y", &l).unwrap(),
        )
        .unwrap();
        assert!(valid.is_valid().unwrap());
        assert!(qbf_to_ael(&valid).unwrap().expansion_exists().unwrap());

        let invalid = QbfInstance::new(
            vec!["x".into()],
            vec!["y".into()],
            parse_formula("x & y", &l).unwrap(),
        )
        .unwrap();
        assert!(!invalid.is_valid().unwrap());
        assert!(!qbf_to_ael(&invalid).unwrap().expansion_exists().unwrap());

        // no universal block
        let single = QbfInstance::new(vec!["x".into()], vec![], parse_formula("x", &l).unwrap())
            .unwrap();
        assert!(single.is_valid().unwrap());
        assert!(qbf_to_ael(&single).unwrap().expansion_exists().unwrap());
    }

    #[test]
    fn monotone_qbf_reduction_uses_only_and_or() {
        let l = lib();
        let cases = [
            ("x | y", true),
            ("x & !x", false),
            ("y | !y", true),
        ];
        for (matrix, expected) in cases {
            let qbf = QbfInstance::new(
                vec!["x".into()],
                vec!["y".into()],
                parse_formula(matrix, &l).unwrap(),
            )
            .unwrap();
            assert_eq!(qbf.is_valid().unwrap(), expected, "validity of {matrix}");
            let sigma = qbf_to_monotone_ael(&qbf).unwrap();
            for f in sigma.functions() {
                assert!(
                    matches!(f.name(), "and" | "or"),
                    "unexpected function {} in the monotone reduction",
                    f.name()
                );
            }
            assert_eq!(
                sigma.expansion_exists().unwrap(),
                expected,
                "expansion existence for {matrix}"
            );
        }
    }

    #[test]
    fn monotone_reduction_rejects_non_nnf_matrices() {
        let l = lib();
        let qbf = QbfInstance::new(
            vec!["x".into()],
            vec!["y".into()],
            parse_formula("!(x & y)", &l).unwrap(),
        )
        .unwrap();
        assert!(matches!(qbf_to_monotone_ael(&qbf), Err(Error::NotNnf(_))));
    }

    #[test]
    fn malformed_prefixes_are_rejected() {
        let l = lib();
        assert!(matches!(
            QbfInstance::new(
                vec!["x".into()],
                vec!["x".into()],
                parse_formula("x", &l).unwrap()
            ),
            Err(Error::MalformedPrefix(_))
        ));
        assert!(matches!(
            QbfInstance::new(vec!["x".into()], vec![], parse_formula("x | q", &l).unwrap()),
            Err(Error::MalformedPrefix(_))
        ));
    }
}
