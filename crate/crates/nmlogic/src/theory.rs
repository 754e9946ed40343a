//! Finite theories, assignments and exact model enumeration.
//!
//! Deductive closure is never materialized; membership queries against a
//! closure are answered semantically by `entails` over the declared finite
//! universe. Model sets are computed as bitsets indexed by the numeric
//! encoding of the assignment over the sorted universe (first variable is
//! the most significant bit), which is also the canonical output order.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::formula::Formula;

/// Default cap on the number of enumerated variables.
pub const DEFAULT_VAR_CAP: usize = 20;

/// A total map from proposition names to truth values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Assignment {
    map: std::collections::BTreeMap<String, bool>,
}

impl Assignment {
    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, bool)>) -> Self {
        Assignment {
            map: pairs
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
        }
    }

    /// Assignment over `universe` whose true propositions are exactly `set`.
    pub fn from_true_set<'a>(
        universe: impl IntoIterator<Item = &'a String>,
        set: &BTreeSet<String>,
    ) -> Self {
        Assignment {
            map: universe
                .into_iter()
                .map(|v| (v.clone(), set.contains(v)))
                .collect(),
        }
    }

    /// Constant assignment over `universe`.
    pub fn constant<'a>(universe: impl IntoIterator<Item = &'a String>, value: bool) -> Self {
        Assignment {
            map: universe.into_iter().map(|v| (v.clone(), value)).collect(),
        }
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.map.get(name).copied()
    }

    pub fn set(&mut self, name: &str, value: bool) {
        self.map.insert(name.to_string(), value);
    }

    /// The set representation { p | sigma(p) = 1 }.
    pub fn true_set(&self) -> BTreeSet<String> {
        self.map
            .iter()
            .filter(|(_, &v)| v)
            .map(|(k, _)| k.clone())
            .collect()
    }

    pub fn domain(&self) -> impl Iterator<Item = &String> {
        self.map.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, bool)> {
        self.map.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for (k, v) in self.map.iter() {
            if *v {
                if !first {
                    write!(f, ", ")?;
                }
                write!(f, "{k}")?;
                first = false;
            }
        }
        write!(f, "}}")
    }
}

/// A finite ordered set of formulas together with a universe covering them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theory {
    formulas: Vec<Formula>,
    universe: BTreeSet<String>,
}

impl Theory {
    /// Builds a theory; duplicate members are dropped, insertion order kept.
    /// The universe is the union of all member variables and `extra`.
    pub fn new(formulas: Vec<Formula>, extra: impl IntoIterator<Item = String>) -> Self {
        let mut universe: BTreeSet<String> = extra.into_iter().collect();
        let mut seen = BTreeSet::new();
        let mut members = Vec::new();
        for f in formulas {
            f.collect_vars(&mut universe);
            if seen.insert(f.clone()) {
                members.push(f);
            }
        }
        Theory {
            formulas: members,
            universe,
        }
    }

    pub fn empty() -> Self {
        Theory::new(Vec::new(), [])
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn universe(&self) -> &BTreeSet<String> {
        &self.universe
    }

    /// All models over the universe, in canonical (numeric) order.
    pub fn models(&self) -> Result<Vec<Assignment>> {
        self.models_with_cap(DEFAULT_VAR_CAP)
    }

    pub fn models_with_cap(&self, cap: usize) -> Result<Vec<Assignment>> {
        let space = ModelSpace::new(self.universe.clone(), cap)?;
        let mask = space.theory_mask(&self.formulas);
        Ok(mask.iter_ones().map(|i| space.assignment(i)).collect())
    }

    /// True iff every model of the theory satisfies `query`; an inconsistent
    /// theory entails everything. The universe is extended by the query
    /// variables when needed.
    pub fn entails(&self, query: &Formula) -> Result<bool> {
        self.entails_with_cap(query, DEFAULT_VAR_CAP)
    }

    pub fn entails_with_cap(&self, query: &Formula, cap: usize) -> Result<bool> {
        let mut universe = self.universe.clone();
        query.collect_vars(&mut universe);
        let space = ModelSpace::new(universe, cap)?;
        let gamma = space.theory_mask(&self.formulas);
        let phi = space.mask(query);
        Ok(gamma.is_subset(&phi))
    }

    pub fn is_consistent(&self) -> Result<bool> {
        self.is_consistent_with_cap(DEFAULT_VAR_CAP)
    }

    pub fn is_consistent_with_cap(&self, cap: usize) -> Result<bool> {
        let space = ModelSpace::new(self.universe.clone(), cap)?;
        Ok(!self.mask_in(&space).is_empty())
    }

    pub fn count_models(&self) -> Result<u64> {
        self.count_models_with_cap(DEFAULT_VAR_CAP)
    }

    pub fn count_models_with_cap(&self, cap: usize) -> Result<u64> {
        let space = ModelSpace::new(self.universe.clone(), cap)?;
        Ok(self.mask_in(&space).count_ones())
    }

    /// Replaces the constant 1 by a fresh proposition `t` and adds `t` as a
    /// member, preserving the model count. Identity when 1 does not occur.
    pub fn eliminate_constant_one(&self) -> Theory {
        if !self.formulas.iter().any(|f| f.mentions_nullary("const1")) {
            return self.clone();
        }
        let t = fresh_name("t", &self.universe);
        let t_prop = Formula::prop(&t);
        let mut formulas: Vec<Formula> = self
            .formulas
            .iter()
            .map(|f| f.replace_nullary("const1", &t_prop))
            .collect();
        formulas.push(t_prop);
        let mut extra: Vec<String> = self.universe.iter().cloned().collect();
        extra.push(t);
        Theory::new(formulas, extra)
    }

    pub(crate) fn mask_in(&self, space: &ModelSpace) -> Bits {
        space.theory_mask(&self.formulas)
    }
}

/// Picks `base`, `base0`, `base1`, ... whichever first avoids `taken`.
pub(crate) fn fresh_name(base: &str, taken: &BTreeSet<String>) -> String {
    if !taken.contains(base) {
        return base.to_string();
    }
    for i in 0.. {
        let cand = format!("{base}{i}");
        if !taken.contains(&cand) {
            return cand;
        }
    }
    unreachable!()
}

// ---------------------------------------------------------------------------
// Bitset model engine
// ---------------------------------------------------------------------------

/// The assignment space over a sorted variable list. Assignment `i` maps
/// `vars[j]` to bit `n-1-j` of `i`, so `vars[0]` is the most significant bit
/// and ascending indices give the canonical model order.
#[derive(Debug, Clone)]
pub(crate) struct ModelSpace {
    vars: Vec<String>,
}

impl ModelSpace {
    pub(crate) fn new(universe: BTreeSet<String>, cap: usize) -> Result<Self> {
        if universe.len() > cap {
            return Err(Error::CapExceeded {
                what: "variable enumeration",
                size: universe.len(),
                cap,
            });
        }
        Ok(ModelSpace {
            vars: universe.into_iter().collect(),
        })
    }

    pub(crate) fn len(&self) -> usize {
        1usize << self.vars.len()
    }

    pub(crate) fn assignment(&self, index: usize) -> Assignment {
        let n = self.vars.len();
        Assignment::from_pairs(
            self.vars
                .iter()
                .enumerate()
                .map(|(j, v)| (v.as_str(), (index >> (n - 1 - j)) & 1 == 1)),
        )
    }

    /// Bitset of the assignments satisfying `formula`.
    pub(crate) fn mask(&self, formula: &Formula) -> Bits {
        match formula {
            Formula::Prop(p) => {
                let j = self
                    .vars
                    .iter()
                    .position(|v| v == p)
                    .unwrap_or_else(|| panic!("proposition `{p}` outside the model space"));
                self.var_mask(j)
            }
            Formula::Apply(f, args) => {
                let child: Vec<Bits> = args.iter().map(|a| self.mask(a)).collect();
                let k = args.len();
                let mut out = Bits::empty(self.len());
                for (t, &value) in f.table().iter().enumerate() {
                    if !value {
                        continue;
                    }
                    let mut term = Bits::full(self.len());
                    for (j, c) in child.iter().enumerate() {
                        if (t >> (k - 1 - j)) & 1 == 1 {
                            term.and_assign(c);
                        } else {
                            term.and_not_assign(c);
                        }
                    }
                    out.or_assign(&term);
                }
                out
            }
        }
    }

    pub(crate) fn theory_mask(&self, formulas: &[Formula]) -> Bits {
        let mut out = Bits::full(self.len());
        for f in formulas {
            out.and_assign(&self.mask(f));
        }
        out
    }

    fn var_mask(&self, j: usize) -> Bits {
        let n = self.vars.len();
        let mut bits = Bits::empty(self.len());
        // Variable j is true on indices whose bit n-1-j is set: blocks of
        // 2^(n-1-j) set bits alternating with equally long clear blocks.
        let block = 1usize << (n - 1 - j);
        let mut i = block;
        while i < self.len() {
            for b in i..i + block {
                bits.set(b);
            }
            i += 2 * block;
        }
        bits
    }
}

/// Fixed-length bitset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub(crate) fn empty(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub(crate) fn full(len: usize) -> Self {
        let mut b = Bits {
            words: vec![!0u64; len.div_ceil(64)],
            len,
        };
        b.trim();
        b
    }

    fn trim(&mut self) {
        let spare = self.words.len() * 64 - self.len;
        if spare > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= !0u64 >> spare;
            }
        }
    }

    pub(crate) fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub(crate) fn and_assign(&mut self, other: &Bits) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    pub(crate) fn and_not_assign(&mut self, other: &Bits) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
    }

    pub(crate) fn or_assign(&mut self, other: &Bits) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub(crate) fn is_subset(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).all(|(w, o)| w & !o == 0)
    }

    pub(crate) fn intersects(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).any(|(w, o)| w & o != 0)
    }

    pub(crate) fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub(crate) fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let tz = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * 64 + tz)
                }
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;
    use crate::func::FunctionLibrary;

    fn theory(texts: &[&str], extra: &[&str]) -> Theory {
        let lib = FunctionLibrary::standard();
        Theory::new(
            texts.iter().map(|t| parse_formula(t, &lib).unwrap()).collect(),
            extra.iter().map(|s| s.to_string()),
        )
    }

    #[test]
    fn models_are_enumerated_in_numeric_order() {
        let t = theory(&["x | y"], &[]);
        let models = t.models().unwrap();
        let sets: Vec<String> = models.iter().map(|m| m.to_string()).collect();
        assert_eq!(sets, vec!["{y}", "{x}", "{x, y}"]);
        assert_eq!(t.count_models().unwrap(), 3);
    }

    #[test]
    fn contradictions_have_no_models() {
        let t = theory(&["x", "!x"], &[]);
        assert!(t.models().unwrap().is_empty());
        assert!(!t.is_consistent().unwrap());
    }

    #[test]
    fn implication_theory_has_seven_models() {
        // (x & !y) -> z over {x, y, z} excludes exactly x=1, y=0, z=0
        let t = theory(&["(x & !y) -> z"], &[]);
        let models = t.models().unwrap();
        assert_eq!(models.len(), 7);
        let excluded = Assignment::from_pairs([("x", true), ("y", false), ("z", false)]);
        assert!(!models.contains(&excluded));
        assert!(t.is_consistent().unwrap());
        assert_eq!(t.count_models().unwrap(), 7);
    }

    #[test]
    fn entailment_over_extended_universe() {
        let lib = FunctionLibrary::standard();
        let t = theory(&["x"], &[]);
        assert!(t.entails(&parse_formula("x | y", &lib).unwrap()).unwrap());
        let empty = Theory::empty();
        assert!(!empty.entails(&parse_formula("x", &lib).unwrap()).unwrap());
        let inconsistent = theory(&["x", "!x"], &[]);
        assert!(inconsistent
            .entails(&parse_formula("y", &lib).unwrap())
            .unwrap());
    }

    #[test]
    fn empty_theory_counts_all_assignments() {
        let t = theory(&[], &["x"]);
        assert_eq!(t.count_models().unwrap(), 2);
    }

    #[test]
    fn constant_one_elimination_preserves_counts() {
        let t = theory(&["1 | x"], &[]);
        let t2 = t.eliminate_constant_one();
        assert_eq!(t.count_models().unwrap(), 2);
        assert_eq!(t2.count_models().unwrap(), 2);
        assert!(t2.universe().contains("t"));

        let unchanged = theory(&["x"], &[]);
        assert_eq!(unchanged.eliminate_constant_one(), unchanged);

        let unit = theory(&["1"], &[]);
        let unit2 = unit.eliminate_constant_one();
        assert_eq!(unit2.formulas().len(), 1, "duplicate members are merged");
        assert_eq!(unit.count_models().unwrap(), 1);
        assert_eq!(unit2.count_models().unwrap(), 1);
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let t = theory(&["1 & t"], &[]);
        let t2 = t.eliminate_constant_one();
        // t is taken, so the fresh proposition is t0
        assert!(t2.universe().contains("t0"));
        assert_eq!(t.count_models().unwrap(), t2.count_models().unwrap());
    }

    #[test]
    fn var_cap_is_a_hard_error() {
        let vars: Vec<String> = (0..21).map(|i| format!("v{i:02}")).collect();
        let t = Theory::new(Vec::new(), vars);
        match t.models() {
            Err(Error::CapExceeded { size, cap, .. }) => {
                assert_eq!(size, 21);
                assert_eq!(cap, 20);
            }
            other => panic!("expected cap error, got {other:?}"),
        }
        assert_eq!(t.count_models_with_cap(21).unwrap(), 1 << 21);
    }

    #[test]
    fn entails_agrees_with_negated_count() {
        let lib = FunctionLibrary::standard();
        let t = theory(&["x -> y", "x"], &[]);
        let q = parse_formula("y", &lib).unwrap();
        let neg = parse_formula("!(y)", &lib).unwrap();
        let mut with_neg = t.formulas().to_vec();
        with_neg.push(neg);
        let refuted = Theory::new(with_neg, t.universe().iter().cloned());
        assert!(t.entails(&q).unwrap());
        assert_eq!(refuted.count_models().unwrap(), 0);
    }
}
