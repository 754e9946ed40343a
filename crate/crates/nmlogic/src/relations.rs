//! Boolean relations, constraint theories and Schaefer-style classification.
//!
//! The four Schaefer classes are decided through polymorphisms (closure of
//! the tuple set under a function applied coordinatewise); the clausal-shape
//! classes (IHS-B+, IHS-B-, definite and negative Horn) are decided by a
//! bounded syntactic search: a relation lies in such a class iff the
//! conjunction of all class clauses it entails defines it exactly.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::func::{BooleanFunction, FunctionLibrary, ARITY_CAP};
use crate::theory::{Assignment, Theory};

/// A finite set of equal-length bit tuples.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BooleanRelation {
    name: String,
    arity: usize,
    tuples: BTreeSet<Vec<bool>>,
}

impl BooleanRelation {
    pub fn new(name: &str, arity: usize, tuples: impl IntoIterator<Item = Vec<bool>>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::BadRelation {
                name: name.to_string(),
                message: "arity must be positive".to_string(),
            });
        }
        let tuples: BTreeSet<Vec<bool>> = tuples.into_iter().collect();
        for t in &tuples {
            if t.len() != arity {
                return Err(Error::BadRelation {
                    name: name.to_string(),
                    message: format!("tuple of length {} in a relation of arity {arity}", t.len()),
                });
            }
        }
        Ok(BooleanRelation {
            name: name.to_string(),
            arity,
            tuples,
        })
    }

    /// Parses tuples given as bit strings, e.g. `00,01,11`.
    pub fn from_bit_strings(name: &str, arity: usize, tuples: &str) -> Result<Self> {
        let mut parsed = Vec::new();
        for t in tuples.split(',') {
            let t = t.trim();
            if t.is_empty() {
                continue;
            }
            let mut row = Vec::with_capacity(t.len());
            for c in t.chars() {
                match c {
                    '0' => row.push(false),
                    '1' => row.push(true),
                    _ => {
                        return Err(Error::BadRelation {
                            name: name.to_string(),
                            message: format!("bad tuple `{t}`"),
                        })
                    }
                }
            }
            parsed.push(row);
        }
        BooleanRelation::new(name, arity, parsed)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn tuples(&self) -> &BTreeSet<Vec<bool>> {
        &self.tuples
    }

    pub fn contains(&self, tuple: &[bool]) -> bool {
        self.tuples.contains(tuple)
    }

    fn check_arity_cap(&self) -> Result<()> {
        if self.arity > ARITY_CAP {
            return Err(Error::CapExceeded {
                what: "relation arity",
                size: self.arity,
                cap: ARITY_CAP,
            });
        }
        Ok(())
    }

    /// Membership by tuple index (bits most significant first).
    fn contains_index(&self, idx: usize) -> bool {
        let tuple: Vec<bool> = (0..self.arity)
            .map(|j| (idx >> (self.arity - 1 - j)) & 1 == 1)
            .collect();
        self.contains(&tuple)
    }
}

impl fmt::Display for BooleanRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} = ", self.name, self.arity)?;
        let mut first = true;
        for t in &self.tuples {
            if !first {
                write!(f, ",")?;
            }
            for &b in t {
                write!(f, "{}", b as u8)?;
            }
            first = false;
        }
        Ok(())
    }
}

/// One relation applied to a variable list (repeats allowed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintApplication {
    pub relation: Arc<BooleanRelation>,
    pub variables: Vec<String>,
}

impl ConstraintApplication {
    pub fn new(relation: Arc<BooleanRelation>, variables: Vec<String>) -> Result<Self> {
        if variables.len() != relation.arity() {
            return Err(Error::ArityMismatch {
                name: relation.name().to_string(),
                expected: relation.arity(),
                got: variables.len(),
            });
        }
        Ok(ConstraintApplication {
            relation,
            variables,
        })
    }
}

/// An ordered set of relation applications over a variable universe.
#[derive(Debug, Clone, Default)]
pub struct ConstraintTheory {
    pub applications: Vec<ConstraintApplication>,
    pub universe: BTreeSet<String>,
}

impl ConstraintTheory {
    pub fn new(
        applications: Vec<ConstraintApplication>,
        extra: impl IntoIterator<Item = String>,
    ) -> Self {
        let mut universe: BTreeSet<String> = extra.into_iter().collect();
        for app in &applications {
            universe.extend(app.variables.iter().cloned());
        }
        ConstraintTheory {
            applications,
            universe,
        }
    }
}

/// Membership check per application.
pub fn satisfies(sigma: &Assignment, theory: &ConstraintTheory) -> Result<bool> {
    for app in &theory.applications {
        let mut tuple = Vec::with_capacity(app.variables.len());
        for v in &app.variables {
            tuple.push(
                sigma
                    .get(v)
                    .ok_or_else(|| Error::UnboundProposition(v.clone()))?,
            );
        }
        if !app.relation.contains(&tuple) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff applying `f` coordinatewise to any `arity(f)` tuples of `r`
/// lands back in `r`.
pub fn is_polymorphism(r: &BooleanRelation, f: &BooleanFunction) -> bool {
    let tuples: Vec<&Vec<bool>> = r.tuples.iter().collect();
    if tuples.is_empty() {
        return true;
    }
    let k = f.arity();
    let mut pick = vec![0usize; k];
    loop {
        let image: Vec<bool> = (0..r.arity)
            .map(|coord| {
                let args: Vec<bool> = pick.iter().map(|&p| tuples[p][coord]).collect();
                f.eval(&args)
            })
            .collect();
        if !r.contains(&image) {
            return false;
        }
        // next selection with repetition
        let mut j = 0;
        loop {
            if j == k {
                return true;
            }
            pick[j] += 1;
            if pick[j] < tuples.len() {
                break;
            }
            pick[j] = 0;
            j += 1;
        }
    }
}

/// Per-relation classification flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RelationFlags {
    pub horn: bool,
    pub dual_horn: bool,
    pub bijunctive: bool,
    pub affine: bool,
    pub valid0: bool,
    pub valid1: bool,
    pub definite_horn: bool,
    pub negative_horn: bool,
    pub ihsb_plus: bool,
    pub ihsb_minus: bool,
}

/// Set-level classification: a flag holds when it holds for every relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchaeferReport {
    pub horn: bool,
    pub dual_horn: bool,
    pub bijunctive: bool,
    pub affine: bool,
    pub valid0: bool,
    pub valid1: bool,
    pub definite_horn: bool,
    pub negative_horn: bool,
    pub ihsb_plus: bool,
    pub ihsb_minus: bool,
    pub schaefer: bool,
}

impl fmt::Display for SchaeferReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "horn={} dual_horn={} bijunctive={} affine={} valid0={} valid1={} \
             definite_horn={} negative_horn={} ihsb+={} ihsb-={} schaefer={}",
            self.horn as u8,
            self.dual_horn as u8,
            self.bijunctive as u8,
            self.affine as u8,
            self.valid0 as u8,
            self.valid1 as u8,
            self.definite_horn as u8,
            self.negative_horn as u8,
            self.ihsb_plus as u8,
            self.ihsb_minus as u8,
            self.schaefer as u8,
        )
    }
}

// Clauses over the coordinates of a relation, as positive/negative variable
// masks. A tuple (read as its index bits) satisfies the clause when it meets
// a positive literal or misses a negative one.
#[derive(Clone, Copy)]
struct Clause {
    pos: u32,
    neg: u32,
}

fn tuple_index(t: &[bool]) -> usize {
    t.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize)
}

fn clause_satisfied(index: usize, arity: usize, cl: &Clause) -> bool {
    // coordinate j (0-based, most significant first) is bit arity-1-j
    let bits = index as u32;
    let ones = bits;
    let zeros = !bits;
    (cl.pos & ones_mask(ones, arity)) != 0 || (cl.neg & ones_mask(zeros, arity)) != 0
}

fn ones_mask(bits: u32, arity: usize) -> u32 {
    bits & ((1u32 << arity) - 1)
}

/// `r` is definable by a conjunction of clauses from `clauses` iff the
/// clauses entailed by `r` pin down exactly its tuple set.
fn definable_by(r: &BooleanRelation, clauses: &[Clause]) -> bool {
    let arity = r.arity();
    let mut models = vec![true; 1 << arity];
    for cl in clauses {
        let entailed = r
            .tuples()
            .iter()
            .all(|t| clause_satisfied(tuple_index(t), arity, cl));
        if entailed {
            for (idx, m) in models.iter_mut().enumerate() {
                if !clause_satisfied(idx, arity, cl) {
                    *m = false;
                }
            }
        }
    }
    models
        .iter()
        .enumerate()
        .all(|(idx, &m)| m == r.contains_index(idx))
}

fn subsets_nonempty(arity: usize) -> impl Iterator<Item = u32> {
    (1u32..1 << arity).into_iter()
}

fn coordinate_bit(j: usize, arity: usize) -> u32 {
    1 << (arity - 1 - j)
}

fn negative_horn_clauses(arity: usize) -> Vec<Clause> {
    subsets_nonempty(arity)
        .map(|neg| Clause { pos: 0, neg })
        .collect()
}

fn definite_horn_clauses(arity: usize) -> Vec<Clause> {
    let mut out = Vec::new();
    for j in 0..arity {
        let pos = coordinate_bit(j, arity);
        let others = ((1u32 << arity) - 1) & !pos;
        let mut neg_subsets = vec![0u32];
        for s in 1..1u32 << arity {
            if s & others == s && s != 0 {
                neg_subsets.push(s);
            }
        }
        for neg in neg_subsets {
            out.push(Clause { pos, neg });
        }
    }
    out
}

fn ihsb_minus_clauses(arity: usize) -> Vec<Clause> {
    let mut out = Vec::new();
    for j in 0..arity {
        out.push(Clause {
            pos: coordinate_bit(j, arity),
            neg: 0,
        });
    }
    for a in 0..arity {
        for b in 0..arity {
            if a != b {
                out.push(Clause {
                    pos: coordinate_bit(b, arity),
                    neg: coordinate_bit(a, arity),
                });
            }
        }
    }
    out.extend(negative_horn_clauses(arity));
    out
}

fn ihsb_plus_clauses(arity: usize) -> Vec<Clause> {
    let mut out = Vec::new();
    for j in 0..arity {
        out.push(Clause {
            pos: 0,
            neg: coordinate_bit(j, arity),
        });
    }
    for a in 0..arity {
        for b in 0..arity {
            if a != b {
                out.push(Clause {
                    pos: coordinate_bit(b, arity),
                    neg: coordinate_bit(a, arity),
                });
            }
        }
    }
    out.extend(subsets_nonempty(arity).map(|pos| Clause { pos, neg: 0 }));
    out
}

/// Classifies one relation. Polymorphism closure decides the Schaefer
/// classes, bounded clause search decides the syntactic ones.
pub fn classify_relation(r: &BooleanRelation) -> Result<RelationFlags> {
    r.check_arity_cap()?;
    let lib = FunctionLibrary::standard();
    let and = lib.lookup("and")?;
    let or = lib.lookup("or")?;
    let maj = lib.lookup("maj")?;
    let xor3 = BooleanFunction::from_bits("xor3", 3, "01101001")?;

    let all0 = vec![false; r.arity()];
    let all1 = vec![true; r.arity()];

    Ok(RelationFlags {
        horn: is_polymorphism(r, &and),
        dual_horn: is_polymorphism(r, &or),
        bijunctive: is_polymorphism(r, &maj),
        affine: is_polymorphism(r, &xor3),
        valid0: r.contains(&all0),
        valid1: r.contains(&all1),
        definite_horn: definable_by(r, &definite_horn_clauses(r.arity())),
        negative_horn: definable_by(r, &negative_horn_clauses(r.arity())),
        ihsb_plus: definable_by(r, &ihsb_plus_clauses(r.arity())),
        ihsb_minus: definable_by(r, &ihsb_minus_clauses(r.arity())),
    })
}

/// Setwise conjunction of the per-relation flags; `schaefer` holds when one
/// of the four closure properties is shared by every relation.
pub fn classify_set(relations: &[Arc<BooleanRelation>]) -> Result<SchaeferReport> {
    let mut horn = true;
    let mut dual_horn = true;
    let mut bijunctive = true;
    let mut affine = true;
    let mut valid0 = true;
    let mut valid1 = true;
    let mut definite_horn = true;
    let mut negative_horn = true;
    let mut ihsb_plus = true;
    let mut ihsb_minus = true;
    for r in relations {
        let f = classify_relation(r)?;
        horn &= f.horn;
        dual_horn &= f.dual_horn;
        bijunctive &= f.bijunctive;
        affine &= f.affine;
        valid0 &= f.valid0;
        valid1 &= f.valid1;
        definite_horn &= f.definite_horn;
        negative_horn &= f.negative_horn;
        ihsb_plus &= f.ihsb_plus;
        ihsb_minus &= f.ihsb_minus;
    }
    Ok(SchaeferReport {
        horn,
        dual_horn,
        bijunctive,
        affine,
        valid0,
        valid1,
        definite_horn,
        negative_horn,
        ihsb_plus,
        ihsb_minus,
        schaefer: horn || dual_horn || bijunctive || affine,
    })
}

/// Bridges a constraint theory to a plain theory: every application becomes
/// one formula whose models over its variables are exactly the relation.
pub fn constraint_to_theory(gamma: &ConstraintTheory) -> Result<Theory> {
    let mut formulas = Vec::new();
    for app in &gamma.applications {
        let r = &app.relation;
        r.check_arity_cap()?;
        let table: Vec<bool> = (0..1usize << r.arity())
            .map(|i| {
                let tuple: Vec<bool> = (0..r.arity())
                    .map(|j| (i >> (r.arity() - 1 - j)) & 1 == 1)
                    .collect();
                r.contains(&tuple)
            })
            .collect();
        let f = Arc::new(BooleanFunction::new(
            &format!("rel_{}", r.name()),
            r.arity(),
            table,
        )?);
        let args = app.variables.iter().map(|v| Formula::prop(v)).collect();
        formulas.push(Formula::apply(f, args)?);
    }
    Ok(Theory::new(formulas, gamma.universe.iter().cloned()))
}
