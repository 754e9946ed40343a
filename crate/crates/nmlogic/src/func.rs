//! Boolean functions given by explicit truth tables, and named libraries of them.
//!
//! A function of arity `n` stores `2^n` bits; the entry at index `i` is the
//! value on the input whose bits, most significant first, encode `i`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Arity cap for truth-table functions (tables stay at most 256 bits).
pub const ARITY_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BooleanFunction {
    name: String,
    arity: usize,
    table: Vec<bool>,
}

impl BooleanFunction {
    pub fn new(name: &str, arity: usize, table: Vec<bool>) -> Result<Self> {
        if table.len() != 1 << arity {
            return Err(Error::BadTable {
                name: name.to_string(),
                expected: 1 << arity,
                got: table.len(),
            });
        }
        Ok(BooleanFunction {
            name: name.to_string(),
            arity,
            table,
        })
    }

    /// Parses a `0`/`1` string of length `2^arity` as the truth table.
    pub fn from_bits(name: &str, arity: usize, bits: &str) -> Result<Self> {
        let mut table = Vec::with_capacity(bits.len());
        for c in bits.chars() {
            match c {
                '0' => table.push(false),
                '1' => table.push(true),
                _ => {
                    return Err(Error::Invalid(format!(
                        "truth table for `{name}` may only contain 0 and 1"
                    )))
                }
            }
        }
        BooleanFunction::new(name, arity, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table(&self) -> &[bool] {
        &self.table
    }

    /// Value on the given argument vector (args[0] is the most significant bit).
    pub fn eval(&self, args: &[bool]) -> bool {
        debug_assert_eq!(args.len(), self.arity);
        let mut idx = 0usize;
        for &a in args {
            idx = (idx << 1) | (a as usize);
        }
        self.table[idx]
    }

    /// True when the two functions have the same arity and table, names aside.
    pub fn equivalent(&self, other: &BooleanFunction) -> bool {
        self.arity == other.arity && self.table == other.table
    }

    /// The `(n+1)`-ary threshold function that is 1 when at least `n` inputs are 1.
    pub fn threshold(n: usize) -> Result<Self> {
        let arity = n + 1;
        if arity > ARITY_CAP {
            return Err(Error::CapExceeded {
                what: "function arity",
                size: arity,
                cap: ARITY_CAP,
            });
        }
        let table = (0..1usize << arity)
            .map(|i| (i.count_ones() as usize) >= n)
            .collect();
        BooleanFunction::new(&format!("thr{}_{}", arity, n), arity, table)
    }
}

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.name, self.arity)
    }
}

/// A name-indexed set of Boolean functions.
#[derive(Debug, Clone, Default)]
pub struct FunctionLibrary {
    funcs: BTreeMap<String, Arc<BooleanFunction>>,
}

impl FunctionLibrary {
    pub fn empty() -> Self {
        FunctionLibrary::default()
    }

    /// The library the tools ship with: `and`, `or`, `not`, `xor`, `eq`,
    /// `imp`, `nimp`, `const0`, `const1`, `id` and `maj`.
    pub fn standard() -> Self {
        let mut lib = FunctionLibrary::empty();
        for (name, arity, bits) in [
            ("and", 2, "0001"),
            ("or", 2, "0111"),
            ("not", 1, "10"),
            ("xor", 2, "0110"),
            ("eq", 2, "1001"),
            ("imp", 2, "1101"),
            ("nimp", 2, "0010"),
            ("const0", 0, "0"),
            ("const1", 0, "1"),
            ("id", 1, "01"),
            ("maj", 3, "00010111"),
        ] {
            lib.insert(BooleanFunction::from_bits(name, arity, bits).unwrap())
                .unwrap();
        }
        lib
    }

    /// Adds a function. The name must be free.
    pub fn insert(&mut self, f: BooleanFunction) -> Result<Arc<BooleanFunction>> {
        if self.funcs.contains_key(f.name()) {
            return Err(Error::Invalid(format!(
                "function `{}` is already declared",
                f.name()
            )));
        }
        let f = Arc::new(f);
        self.funcs.insert(f.name().to_string(), f.clone());
        Ok(f)
    }

    pub fn get(&self, name: &str) -> Option<Arc<BooleanFunction>> {
        self.funcs.get(name).cloned()
    }

    pub fn lookup(&self, name: &str) -> Result<Arc<BooleanFunction>> {
        self.get(name)
            .ok_or_else(|| Error::UnknownFunction(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<BooleanFunction>> {
        self.funcs.values()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_length_is_validated() {
        assert!(BooleanFunction::from_bits("f", 2, "011").is_err());
        assert!(BooleanFunction::from_bits("f", 2, "0110").is_ok());
    }

    #[test]
    fn eval_uses_msb_first_indexing() {
        let imp = FunctionLibrary::standard().lookup("imp").unwrap();
        assert!(imp.eval(&[false, false]));
        assert!(imp.eval(&[false, true]));
        assert!(!imp.eval(&[true, false]));
        assert!(imp.eval(&[true, true]));
    }

    #[test]
    fn threshold_counts_ones() {
        // maj is the 3-ary threshold with threshold 2
        let t = BooleanFunction::threshold(2).unwrap();
        let maj = FunctionLibrary::standard().lookup("maj").unwrap();
        assert!(t.equivalent(&maj));
        assert!(t.eval(&[true, true, false]));
        assert!(!t.eval(&[true, false, false]));
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let mut lib = FunctionLibrary::standard();
        let dup = BooleanFunction::from_bits("and", 2, "1111").unwrap();
        assert!(lib.insert(dup).is_err());
    }
}
