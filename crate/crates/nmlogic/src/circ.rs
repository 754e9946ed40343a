//! Minimal-model semantics over the (P, Q, Z) preorder.
//!
//! An assignment is below another when its P-part is included in the
//! other's and the Q-parts agree; Z is unconstrained. Circumscriptive
//! models are the models minimal with respect to the strict part of this
//! preorder.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::func::{BooleanFunction, FunctionLibrary};
use crate::post::is_monotone;
use crate::theory::{fresh_name, Assignment, Theory, DEFAULT_VAR_CAP};

/// A partition of the universe into minimized (P), fixed (Q) and floating
/// (Z) propositions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarPartition {
    p: BTreeSet<String>,
    q: BTreeSet<String>,
    z: BTreeSet<String>,
}

impl VarPartition {
    pub fn new(
        p: impl IntoIterator<Item = String>,
        q: impl IntoIterator<Item = String>,
        z: impl IntoIterator<Item = String>,
    ) -> Result<Self> {
        let p: BTreeSet<String> = p.into_iter().collect();
        let q: BTreeSet<String> = q.into_iter().collect();
        let z: BTreeSet<String> = z.into_iter().collect();
        for v in p.intersection(&q).chain(p.intersection(&z)).chain(q.intersection(&z)) {
            return Err(Error::Invalid(format!(
                "proposition `{v}` occurs in two partition blocks"
            )));
        }
        Ok(VarPartition { p, q, z })
    }

    pub fn minimized(&self) -> &BTreeSet<String> {
        &self.p
    }

    pub fn fixed(&self) -> &BTreeSet<String> {
        &self.q
    }

    pub fn floating(&self) -> &BTreeSet<String> {
        &self.z
    }

    pub fn universe(&self) -> BTreeSet<String> {
        self.p.union(&self.q).cloned().chain(self.z.iter().cloned()).collect()
    }
}

/// sigma <= sigma' iff sigma's P-part is included in sigma''s and the
/// Q-parts coincide.
pub fn leq_pz(sigma: &Assignment, other: &Assignment, part: &VarPartition) -> bool {
    for v in &part.p {
        if sigma.get(v) == Some(true) && other.get(v) != Some(true) {
            return false;
        }
    }
    for v in &part.q {
        if sigma.get(v) != other.get(v) {
            return false;
        }
    }
    true
}

/// The strict part of the preorder: with equal Q-parts, a proper P-part
/// inclusion.
pub fn strictly_less(sigma: &Assignment, other: &Assignment, part: &VarPartition) -> bool {
    leq_pz(sigma, other, part) && !leq_pz(other, sigma, part)
}

/// A theory with a partition of its universe.
#[derive(Debug, Clone)]
pub struct CircProblem {
    theory: Theory,
    partition: VarPartition,
}

impl CircProblem {
    pub fn new(theory: Theory, partition: VarPartition) -> Result<Self> {
        let covered = partition.universe();
        if let Some(v) = theory.universe().iter().find(|v| !covered.contains(*v)) {
            return Err(Error::Invalid(format!(
                "proposition `{v}` of the theory is not covered by the partition"
            )));
        }
        Ok(CircProblem { theory, partition })
    }

    /// Splits the universe into P and Z as given, Q taking the remainder.
    pub fn from_p_z(
        theory: Theory,
        p: impl IntoIterator<Item = String>,
        z: impl IntoIterator<Item = String>,
    ) -> Result<Self> {
        let p: BTreeSet<String> = p.into_iter().collect();
        let z: BTreeSet<String> = z.into_iter().collect();
        let q: BTreeSet<String> = theory
            .universe()
            .iter()
            .filter(|v| !p.contains(*v) && !z.contains(*v))
            .cloned()
            .collect();
        let mut universe = theory.universe().clone();
        universe.extend(p.iter().cloned());
        universe.extend(z.iter().cloned());
        let theory = Theory::new(theory.formulas().to_vec(), universe);
        CircProblem::new(theory, VarPartition::new(p, q, z)?)
    }

    pub fn theory(&self) -> &Theory {
        &self.theory
    }

    pub fn partition(&self) -> &VarPartition {
        &self.partition
    }

    fn models_capped(&self, var_cap: usize) -> Result<Vec<Assignment>> {
        self.theory.models_with_cap(var_cap)
    }

    /// sigma is a circumscriptive model iff it models the theory and no
    /// model is strictly below it.
    pub fn is_circ_model(&self, sigma: &Assignment) -> Result<bool> {
        self.is_circ_model_with_cap(sigma, DEFAULT_VAR_CAP)
    }

    pub fn is_circ_model_with_cap(&self, sigma: &Assignment, var_cap: usize) -> Result<bool> {
        for v in self.theory.universe() {
            if sigma.get(v).is_none() {
                return Err(Error::UnboundProposition(v.clone()));
            }
        }
        let holds = self
            .theory
            .formulas()
            .iter()
            .map(|f| f.evaluate(sigma))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|v| v);
        if !holds {
            return Ok(false);
        }
        for m in self.models_capped(var_cap)? {
            if strictly_less(&m, sigma, &self.partition) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Monotone fast path: a model is minimal iff flipping any one true
    /// P-proposition to 0 while floating Z to 1 breaks the theory.
    pub fn monotone_circ_check(&self, sigma: &Assignment) -> Result<bool> {
        for f in self.functions() {
            if !is_monotone(&f) {
                return Err(Error::Precondition(format!(
                    "monotone fast path requires monotone functions, `{}` is not",
                    f.name()
                )));
            }
        }
        let holds = self
            .theory
            .formulas()
            .iter()
            .map(|f| f.evaluate(sigma))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|v| v);
        if !holds {
            return Err(Error::Precondition(
                "monotone minimality check expects a model of the theory".to_string(),
            ));
        }
        for flipped in &self.partition.p {
            if sigma.get(flipped) != Some(true) {
                continue;
            }
            let mut candidate = sigma.clone();
            for z in &self.partition.z {
                candidate.set(z, true);
            }
            candidate.set(flipped, false);
            let models = self
                .theory
                .formulas()
                .iter()
                .map(|f| f.evaluate(&candidate))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .all(|v| v);
            if models {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff every circumscriptive model satisfies `query` (vacuously
    /// true when the theory has no models).
    pub fn circ_entails(&self, query: &Formula) -> Result<bool> {
        self.circ_entails_with_cap(query, DEFAULT_VAR_CAP)
    }

    pub fn circ_entails_with_cap(&self, query: &Formula, var_cap: usize) -> Result<bool> {
        for v in query.vars() {
            if !self.partition.universe().contains(&v) {
                return Err(Error::UnboundProposition(v));
            }
        }
        for m in self.minimal_models_with_cap(var_cap)? {
            if !query.evaluate(&m)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The circumscriptive models, in canonical model order.
    pub fn minimal_models(&self) -> Result<Vec<Assignment>> {
        self.minimal_models_with_cap(DEFAULT_VAR_CAP)
    }

    pub fn minimal_models_with_cap(&self, var_cap: usize) -> Result<Vec<Assignment>> {
        let models = self.models_capped(var_cap)?;
        Ok(models
            .iter()
            .filter(|m| !models.iter().any(|o| strictly_less(o, m, &self.partition)))
            .cloned()
            .collect())
    }

    pub fn count_minimal_models(&self) -> Result<u64> {
        Ok(self.minimal_models()?.len() as u64)
    }

    pub fn functions(&self) -> BTreeSet<Arc<BooleanFunction>> {
        let mut out = BTreeSet::new();
        for f in self.theory.formulas() {
            f.collect_functions(&mut out);
        }
        out
    }
}

/// Parsimonious reduction from model counting to minimal-model counting:
/// conjoin one xor per variable with a fresh partner and minimize
/// everything. The models of the image are pairwise incomparable, so each
/// model of the input yields exactly one minimal model.
pub fn sat_to_minmodels(phi: &Formula) -> Result<CircProblem> {
    let lib = FunctionLibrary::standard();
    let xor = lib.lookup("xor")?;
    let and = lib.lookup("and")?;
    let vars = phi.vars();
    let mut taken = vars.clone();
    let mut formula = phi.clone();
    for v in &vars {
        let partner = fresh_name(&format!("{v}_m"), &taken);
        taken.insert(partner.clone());
        let pair = Formula::apply(
            xor.clone(),
            vec![Formula::prop(v), Formula::prop(&partner)],
        )?;
        formula = Formula::apply(and.clone(), vec![formula, pair])?;
    }
    let theory = Theory::new(vec![formula], []);
    let p: Vec<String> = theory.universe().iter().cloned().collect();
    CircProblem::from_p_z(theory, p, [])
}
