//! Complexity prediction for the reasoning problems over restricted
//! fragments, encoded as lookup tables of theorem cases.
//!
//! Each problem carries one case list per fragment kind (clone of allowed
//! functions, or set of allowed relations). Cases are evaluated top-down in
//! the printed order and the first match wins; the verdict carries the
//! class name and a citation tag. Conditions are encoded exactly as stated,
//! so the accompanying tests can assert that they are mutually exclusive
//! and total over the clone table.

use std::fmt;
use std::str::FromStr;

use crate::abduction::ExplanationMode;
use crate::error::{Error, Result};
use crate::func::BooleanFunction;
use crate::post::{clone_leq, clone_of, CloneName};
use crate::relations::SchaeferReport;

/// The classified reasoning problems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemId {
    DefaultExtensionExistence,
    DefaultCredulous,
    DefaultSkeptical,
    DefaultCount,
    AelExpansionExistence,
    AelCredulous,
    AelSkeptical,
    AelCount,
    CircModelCheck,
    CircInference,
    CircCountMinimal,
    AbductionExists,
    AbductionCount,
    AbductionCountMinimal,
}

impl ProblemId {
    pub const ALL: [ProblemId; 14] = [
        ProblemId::DefaultExtensionExistence,
        ProblemId::DefaultCredulous,
        ProblemId::DefaultSkeptical,
        ProblemId::DefaultCount,
        ProblemId::AelExpansionExistence,
        ProblemId::AelCredulous,
        ProblemId::AelSkeptical,
        ProblemId::AelCount,
        ProblemId::CircModelCheck,
        ProblemId::CircInference,
        ProblemId::CircCountMinimal,
        ProblemId::AbductionExists,
        ProblemId::AbductionCount,
        ProblemId::AbductionCountMinimal,
    ];
}

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ProblemId::DefaultExtensionExistence => "default.extension_existence",
            ProblemId::DefaultCredulous => "default.credulous",
            ProblemId::DefaultSkeptical => "default.skeptical",
            ProblemId::DefaultCount => "default.count",
            ProblemId::AelExpansionExistence => "ael.expansion_existence",
            ProblemId::AelCredulous => "ael.credulous",
            ProblemId::AelSkeptical => "ael.skeptical",
            ProblemId::AelCount => "ael.count",
            ProblemId::CircModelCheck => "circ.model_check",
            ProblemId::CircInference => "circ.inference",
            ProblemId::CircCountMinimal => "circ.count_minimal",
            ProblemId::AbductionExists => "abduction.exists",
            ProblemId::AbductionCount => "abduction.count",
            ProblemId::AbductionCountMinimal => "abduction.count_minimal",
        };
        write!(f, "{s}")
    }
}

impl FromStr for ProblemId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProblemId::ALL
            .into_iter()
            .find(|p| p.to_string() == s)
            .ok_or_else(|| Error::UnknownProblem(s.to_string()))
    }
}

/// Fragment under which a problem is classified.
#[derive(Debug, Clone)]
pub enum Fragment {
    Clone(CloneName),
    Relations(SchaeferReport),
}

/// A complexity verdict with its citation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub class_name: &'static str,
    pub theorem: &'static str,
    pub case: u32,
}

impl Verdict {
    pub fn citation(&self) -> String {
        format!("{}.{}", self.theorem, self.case)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}.{})", self.class_name, self.theorem, self.case)
    }
}

// ---------------------------------------------------------------------------
// Clone-side tables
// ---------------------------------------------------------------------------

/// Condition of one theorem case over the clone `[B]`.
#[derive(Debug, Clone)]
pub enum CloneCond {
    /// some X in the list with X <= [B]
    AnyLeq(Vec<CloneName>),
    /// some X in the first list with X <= [B], and [B] <= some Y in the second
    Between(Vec<CloneName>, Vec<CloneName>),
    /// [B] is one of the listed rows
    In(Vec<CloneName>),
    /// [B] <= some Y in the list
    LeqAny(Vec<CloneName>),
    Or(Vec<CloneCond>),
    /// first holds, second does not
    Except(Box<CloneCond>, Box<CloneCond>),
    /// "in all other cases" without a usable closed form
    Otherwise,
}

impl CloneCond {
    /// Raw condition evaluation; `Otherwise` is handled by the caller.
    pub fn eval(&self, b: &CloneName) -> Result<bool> {
        match self {
            CloneCond::AnyLeq(xs) => {
                for x in xs {
                    if clone_leq(x, b)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            CloneCond::Between(xs, ys) => {
                Ok(CloneCond::AnyLeq(xs.clone()).eval(b)?
                    && CloneCond::LeqAny(ys.clone()).eval(b)?)
            }
            CloneCond::In(xs) => Ok(xs.contains(b)),
            CloneCond::LeqAny(ys) => {
                for y in ys {
                    if clone_leq(b, y)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            CloneCond::Or(parts) => {
                for p in parts {
                    if p.eval(b)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            CloneCond::Except(yes, no) => Ok(yes.eval(b)? && !no.eval(b)?),
            CloneCond::Otherwise => Ok(false),
        }
    }

    pub fn is_otherwise(&self) -> bool {
        matches!(self, CloneCond::Otherwise)
    }
}

/// One case of a clone-side classification.
#[derive(Debug, Clone)]
pub struct CloneCase {
    pub case: u32,
    pub class_name: &'static str,
    pub cond: CloneCond,
}

/// The clone-side case list for a problem: citation tag plus cases in
/// printed order.
pub fn clone_table(problem: ProblemId, mode: ExplanationMode) -> (&'static str, Vec<CloneCase>) {
    use CloneCond::*;
    use CloneName::*;
    let case = |case: u32, class_name: &'static str, cond: CloneCond| CloneCase {
        case,
        class_name,
        cond,
    };
    match problem {
        ProblemId::DefaultExtensionExistence => (
            "Theorem 3",
            vec![
                case(1, "Sigma2P-complete", AnyLeq(vec![S1, D])),
                case(2, "Delta2P-complete", Between(vec![S11], vec![M])),
                case(3, "NP-complete", In(vec![N, N2, L, L0, L3])),
                case(4, "P-complete", In(vec![V, V0, E, E0])),
                case(5, "NL-complete", In(vec![I, I0])),
                case(6, "trivial", LeqAny(vec![R1])),
            ],
        ),
        ProblemId::DefaultCredulous | ProblemId::DefaultSkeptical => {
            let skeptical = problem == ProblemId::DefaultSkeptical;
            (
                "Theorem 5",
                vec![
                    case(
                        1,
                        if skeptical {
                            "Pi2P-complete"
                        } else {
                            "Sigma2P-complete"
                        },
                        AnyLeq(vec![S1, D]),
                    ),
                    case(2, "Delta2P-complete", Between(vec![S11], vec![M])),
                    case(3, "coNP-complete", Between(vec![S00, S10, D2], vec![R1])),
                    case(
                        4,
                        if skeptical {
                            "coNP-complete"
                        } else {
                            "NP-complete"
                        },
                        In(vec![N, N2, L, L0, L3]),
                    ),
                    case(
                        5,
                        "P-complete",
                        Or(vec![
                            Between(vec![V2], vec![V]),
                            Between(vec![E2], vec![E]),
                            In(vec![L1, L2]),
                        ]),
                    ),
                    case(6, "NL-complete", LeqAny(vec![I])),
                ],
            )
        }
        ProblemId::DefaultCount => (
            "Theorem 8",
            vec![
                case(1, "#coNP-complete", AnyLeq(vec![S1, D])),
                case(2, "Delta2P-complete(counting)", Between(vec![S11], vec![M])),
                case(3, "#P-complete", In(vec![N, N2, L, L0, L3])),
                case(4, "FP", LeqAny(vec![V, E, R1])),
            ],
        ),
        ProblemId::AelExpansionExistence | ProblemId::AelCredulous | ProblemId::AelSkeptical => {
            let skeptical = problem == ProblemId::AelSkeptical;
            (
                "Theorem 7",
                vec![
                    case(
                        1,
                        if skeptical {
                            "Pi2P-complete"
                        } else {
                            "Sigma2P-complete"
                        },
                        AnyLeq(vec![D2, S00, S10]),
                    ),
                    case(
                        2,
                        if skeptical {
                            "coNP-complete"
                        } else {
                            "NP-complete"
                        },
                        Between(vec![V2], vec![V]),
                    ),
                    case(3, "ParityL-hard-in-P", Between(vec![L2], vec![L])),
                    case(4, "L", Otherwise),
                ],
            )
        }
        ProblemId::AelCount => (
            "Theorem 9",
            vec![
                case(1, "#coNP-complete", AnyLeq(vec![D2, S00, S10])),
                case(2, "#P-complete", Between(vec![V2], vec![V])),
                case(3, "FP", LeqAny(vec![L, E])),
            ],
        ),
        ProblemId::CircModelCheck => (
            "Theorem 11",
            vec![
                case(1, "coNP-complete", AnyLeq(vec![S02, S12, D1])),
                case(2, "in-P", Otherwise),
            ],
        ),
        ProblemId::CircInference => (
            "Theorem 13",
            vec![
                case(1, "Pi2P-complete", AnyLeq(vec![S02, S12, D1])),
                case(
                    2,
                    "coNP-complete",
                    Between(vec![V2, S10, D2, L2], vec![M, L]),
                ),
                case(3, "in-P", LeqAny(vec![N, E])),
            ],
        ),
        ProblemId::CircCountMinimal => (
            "Theorem 13C",
            vec![
                case(1, "#coNP-complete", AnyLeq(vec![S02, S12, D1])),
                case(2, "#P-complete", Between(vec![S00, S10, D2], vec![M])),
                case(
                    3,
                    "#P-complete",
                    Or(vec![Between(vec![V2], vec![V]), Between(vec![L2], vec![L])]),
                ),
                case(4, "FP", LeqAny(vec![N, E])),
            ],
        ),
        ProblemId::AbductionExists => (
            "Theorem 15",
            vec![
                case(1, "Sigma2P-complete", AnyLeq(vec![S02, S12, D1])),
                case(2, "NP-complete", Between(vec![S00, S10, D2], vec![M])),
                case(3, "in-P", LeqAny(vec![E, V, L])),
            ],
        ),
        ProblemId::AbductionCount => match mode {
            ExplanationMode::Literal => (
                "Theorem 17",
                vec![
                    case(1, "#coNP-complete", AnyLeq(vec![S02, S12, D1])),
                    case(2, "#P-complete", Between(vec![V2, S10, D2], vec![M])),
                    case(3, "FP", LeqAny(vec![E, L])),
                ],
            ),
            ExplanationMode::Positive => (
                "Theorem 17",
                vec![
                    case(1, "#coNP-complete", AnyLeq(vec![S02, S12, D1])),
                    case(2, "FP", Between(vec![V2], vec![V])),
                    case(3, "open", Between(vec![L2], vec![L])),
                    case(
                        4,
                        "#P-complete",
                        Except(
                            Box::new(Between(vec![V2, S10, D2], vec![M])),
                            Box::new(LeqAny(vec![V])),
                        ),
                    ),
                    case(5, "FP", Otherwise),
                ],
            ),
        },
        ProblemId::AbductionCountMinimal => (
            "Theorem 16",
            vec![
                case(1, "#coNP-complete", In(vec![Bf])),
                case(2, "open", Otherwise),
            ],
        ),
    }
}

// ---------------------------------------------------------------------------
// Relation-side tables
// ---------------------------------------------------------------------------

struct RelCase {
    case: u32,
    class_name: &'static str,
    cond: fn(&SchaeferReport) -> bool,
}

fn relation_table(
    problem: ProblemId,
    mode: ExplanationMode,
) -> Option<(&'static str, Vec<RelCase>)> {
    let case = |case: u32, class_name: &'static str, cond: fn(&SchaeferReport) -> bool| RelCase {
        case,
        class_name,
        cond,
    };
    match problem {
        ProblemId::DefaultExtensionExistence => Some((
            "Theorem 4",
            vec![
                case(1, "Sigma2P-complete", |s| !s.schaefer),
                case(2, "NP-complete", |s| s.schaefer && !s.valid0 && !s.valid1),
                case(3, "in-P", |_| true),
            ],
        )),
        ProblemId::DefaultCredulous | ProblemId::DefaultSkeptical => Some((
            "Theorem 4",
            vec![
                case(1, "Sigma2P-complete", |s| !s.schaefer),
                case(
                    2,
                    if problem == ProblemId::DefaultSkeptical {
                        "coNP-complete"
                    } else {
                        "NP-complete"
                    },
                    |s| s.schaefer && !s.valid0 && !s.valid1,
                ),
                case(3, "coNP-complete", |s| (s.valid0 || s.valid1) && !s.schaefer),
                case(4, "in-P", |_| true),
            ],
        )),
        ProblemId::CircModelCheck => Some((
            "Theorem 10",
            vec![
                case(1, "coNP-complete", |s| !s.schaefer),
                case(2, "in-P", |_| true),
            ],
        )),
        ProblemId::CircInference => Some((
            "Theorem 12",
            vec![
                case(1, "Pi2P-complete", |s| !s.schaefer),
                case(2, "coNP-complete", |s| {
                    s.schaefer
                        && !s.negative_horn
                        && !(s.bijunctive && s.affine)
                        && !(s.horn && s.dual_horn)
                }),
                case(3, "in-P", |s| {
                    s.negative_horn || (s.bijunctive && s.affine) || (s.horn && s.dual_horn)
                }),
            ],
        )),
        ProblemId::AbductionExists => Some((
            "Theorem 14",
            vec![
                case(1, "Sigma2P-complete", |s| !s.schaefer),
                case(2, "NP-complete", |s| {
                    (s.horn || s.dual_horn)
                        && !s.bijunctive
                        && !s.affine
                        && !s.definite_horn
                        && !s.ihsb_plus
                        && !s.ihsb_minus
                }),
                case(3, "in-P", |s| {
                    s.bijunctive || s.affine || s.definite_horn || s.ihsb_plus || s.ihsb_minus
                }),
            ],
        )),
        ProblemId::AbductionCount => match mode {
            ExplanationMode::Literal => Some((
                "Theorem 16R",
                vec![
                    case(1, "#P-complete", |s| s.horn || s.dual_horn || s.bijunctive),
                    case(2, "FP", |s| s.affine),
                ],
            )),
            ExplanationMode::Positive => Some((
                "Theorem 16R",
                vec![case(1, "#P-complete", |s| {
                    s.horn || s.dual_horn || s.bijunctive
                })],
            )),
        },
        ProblemId::AbductionCountMinimal => match mode {
            ExplanationMode::Literal => Some((
                "Theorem 16R",
                vec![case(3, "#P-complete", |s| {
                    s.horn || s.dual_horn || s.bijunctive || s.affine
                })],
            )),
            ExplanationMode::Positive => Some((
                "Theorem 16R",
                vec![case(3, "#P-complete", |s| {
                    s.horn || s.dual_horn || s.bijunctive
                })],
            )),
        },
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Prediction
// ---------------------------------------------------------------------------

/// Verdict for a problem over a fragment, literal-explanation reading for
/// the abduction counting problems.
pub fn predict(problem: ProblemId, fragment: &Fragment) -> Result<Verdict> {
    predict_mode(problem, fragment, ExplanationMode::Literal)
}

pub fn predict_mode(
    problem: ProblemId,
    fragment: &Fragment,
    mode: ExplanationMode,
) -> Result<Verdict> {
    match fragment {
        Fragment::Clone(b) => {
            let (theorem, cases) = clone_table(problem, mode);
            for c in &cases {
                let hit = if c.cond.is_otherwise() {
                    true
                } else {
                    c.cond.eval(b)?
                };
                if hit {
                    return Ok(Verdict {
                        class_name: c.class_name,
                        theorem,
                        case: c.case,
                    });
                }
            }
            Err(Error::Invalid(format!(
                "no case of {problem} matches clone {b}"
            )))
        }
        Fragment::Relations(report) => {
            let (theorem, cases) = relation_table(problem, mode).ok_or_else(|| {
                Error::NoClassification {
                    problem: problem.to_string(),
                    fragment: "relation",
                }
            })?;
            for c in &cases {
                if (c.cond)(report) {
                    return Ok(Verdict {
                        class_name: c.class_name,
                        theorem,
                        case: c.case,
                    });
                }
            }
            Err(Error::NoClassification {
                problem: problem.to_string(),
                fragment: "relation",
            })
        }
    }
}

/// Classifies the clone generated by `functions`, then predicts.
pub fn predict_from_functions(
    problem: ProblemId,
    functions: &[BooleanFunction],
) -> Result<Verdict> {
    let clone = clone_of(functions)?;
    predict(problem, &Fragment::Clone(clone))
}

/// Case numbers whose condition holds for `b`, `Otherwise` counting only
/// when no explicit condition fires. Exactly one hit means the printed
/// conditions are mutually exclusive and total on `b`.
pub fn matching_clone_cases(
    problem: ProblemId,
    mode: ExplanationMode,
    b: &CloneName,
) -> Result<Vec<u32>> {
    let (_, cases) = clone_table(problem, mode);
    let mut hits = Vec::new();
    let mut explicit_hit = false;
    for c in &cases {
        if !c.cond.is_otherwise() && c.cond.eval(b)? {
            hits.push(c.case);
            explicit_hit = true;
        }
    }
    if !explicit_hit {
        for c in &cases {
            if c.cond.is_otherwise() {
                hits.push(c.case);
            }
        }
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::func::FunctionLibrary;
    use crate::relations::{classify_set, BooleanRelation};
    use std::sync::Arc;

    fn fragment(c: CloneName) -> Fragment {
        Fragment::Clone(c)
    }

    #[test]
    fn pinned_verdicts() {
        let v = predict(ProblemId::DefaultExtensionExistence, &fragment(CloneName::Bf)).unwrap();
        assert_eq!(v.to_string(), "Sigma2P-complete (Theorem 3.1)");

        let v = predict(ProblemId::DefaultExtensionExistence, &fragment(CloneName::V)).unwrap();
        assert_eq!(v.to_string(), "P-complete (Theorem 3.4)");

        let v = predict(ProblemId::AelExpansionExistence, &fragment(CloneName::E)).unwrap();
        assert_eq!(v.to_string(), "L (Theorem 7.4)");
    }

    #[test]
    fn predictions_from_function_sets() {
        let lib = FunctionLibrary::standard();
        let f = |n: &str| (*lib.lookup(n).unwrap()).clone();

        // [{or}] = V2 <= R1, so extension existence is trivial
        let v = predict_from_functions(ProblemId::DefaultExtensionExistence, &[f("or")]).unwrap();
        assert_eq!(v.to_string(), "trivial (Theorem 3.6)");

        let v =
            predict_from_functions(ProblemId::DefaultExtensionExistence, &[f("and"), f("not")])
                .unwrap();
        assert_eq!(v.class_name, "Sigma2P-complete");

        // [{xor}] = L0
        let v = predict_from_functions(ProblemId::DefaultExtensionExistence, &[f("xor")]).unwrap();
        assert_eq!(v.to_string(), "NP-complete (Theorem 3.3)");
    }

    #[test]
    fn skeptical_flips_the_nondeterministic_classes() {
        let v = predict(ProblemId::DefaultSkeptical, &fragment(CloneName::Bf)).unwrap();
        assert_eq!(v.class_name, "Pi2P-complete");
        let v = predict(ProblemId::DefaultSkeptical, &fragment(CloneName::L)).unwrap();
        assert_eq!(v.class_name, "coNP-complete");
        let v = predict(ProblemId::DefaultCredulous, &fragment(CloneName::L)).unwrap();
        assert_eq!(v.class_name, "NP-complete");
    }

    #[test]
    fn counting_tables() {
        let v = predict(ProblemId::DefaultCount, &fragment(CloneName::M)).unwrap();
        assert_eq!(v.to_string(), "Delta2P-complete(counting) (Theorem 8.2)");
        let v = predict(ProblemId::AelCount, &fragment(CloneName::N)).unwrap();
        assert_eq!(v.class_name, "FP");
        let v = predict(ProblemId::CircCountMinimal, &fragment(CloneName::L1)).unwrap();
        assert_eq!(v.to_string(), "#P-complete (Theorem 13C.3)");
        let v = predict(ProblemId::AbductionCountMinimal, &fragment(CloneName::Bf)).unwrap();
        assert_eq!(v.class_name, "#coNP-complete");
        let v = predict(ProblemId::AbductionCountMinimal, &fragment(CloneName::E)).unwrap();
        assert_eq!(v.class_name, "open");
    }

    #[test]
    fn positive_mode_changes_the_abduction_count_rows() {
        let lit = predict_mode(
            ProblemId::AbductionCount,
            &fragment(CloneName::V),
            ExplanationMode::Literal,
        )
        .unwrap();
        assert_eq!(lit.class_name, "#P-complete");
        let pos = predict_mode(
            ProblemId::AbductionCount,
            &fragment(CloneName::V),
            ExplanationMode::Positive,
        )
        .unwrap();
        assert_eq!(pos.class_name, "FP");
        let open = predict_mode(
            ProblemId::AbductionCount,
            &fragment(CloneName::L),
            ExplanationMode::Positive,
        )
        .unwrap();
        assert_eq!(open.class_name, "open");
    }

    #[test]
    fn verdict_totality_and_exclusivity_over_all_clones() {
        let clones = CloneName::all_instances(&[2, 3, 4]);
        for problem in ProblemId::ALL {
            for mode in [ExplanationMode::Literal, ExplanationMode::Positive] {
                for b in &clones {
                    let hits = matching_clone_cases(problem, mode, b).unwrap();
                    assert_eq!(
                        hits.len(),
                        1,
                        "{problem} on {b} matched cases {hits:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn relation_fragments() {
        let imp = Arc::new(BooleanRelation::from_bit_strings("imp", 2, "00,01,11").unwrap());
        let xor = Arc::new(BooleanRelation::from_bit_strings("xor", 2, "01,10").unwrap());
        let ternary = Arc::new(
            BooleanRelation::from_bit_strings("onein3", 3, "001,010,100").unwrap(),
        );

        // implication graph is Schaefer and 0-valid: tractable
        let rep = classify_set(&[imp.clone()]).unwrap();
        let v = predict(ProblemId::DefaultExtensionExistence, &Fragment::Relations(rep)).unwrap();
        assert_eq!(v.to_string(), "in-P (Theorem 4.3)");

        // xor is Schaefer but neither 0- nor 1-valid
        let rep = classify_set(&[xor]).unwrap();
        let v = predict(ProblemId::DefaultExtensionExistence, &Fragment::Relations(rep)).unwrap();
        assert_eq!(v.class_name, "NP-complete");

        // exactly-one-of-three is not Schaefer
        let rep = classify_set(&[ternary]).unwrap();
        assert!(!rep.schaefer);
        let v = predict(ProblemId::CircModelCheck, &Fragment::Relations(rep)).unwrap();
        assert_eq!(v.to_string(), "coNP-complete (Theorem 10.1)");
        let v = predict(ProblemId::CircInference, &Fragment::Relations(rep)).unwrap();
        assert_eq!(v.to_string(), "Pi2P-complete (Theorem 12.1)");
        let v = predict(ProblemId::AbductionExists, &Fragment::Relations(rep)).unwrap();
        assert_eq!(v.to_string(), "Sigma2P-complete (Theorem 14.1)");

        // problems without relation-side rows are rejected loudly
        let rep = classify_set(&[imp]).unwrap();
        assert!(matches!(
            predict(ProblemId::AelCount, &Fragment::Relations(rep)),
            Err(Error::NoClassification { .. })
        ));
        assert!(matches!(
            predict(ProblemId::DefaultCount, &Fragment::Relations(rep)),
            Err(Error::NoClassification { .. })
        ));
    }

    #[test]
    fn negative_horn_relations_make_inference_easy() {
        let neg = Arc::new(BooleanRelation::from_bit_strings("nand", 2, "00,01,10").unwrap());
        let rep = classify_set(&[neg]).unwrap();
        assert!(rep.negative_horn);
        let v = predict(ProblemId::CircInference, &Fragment::Relations(rep)).unwrap();
        assert_eq!(v.to_string(), "in-P (Theorem 12.3)");
    }

    #[test]
    fn problem_ids_parse_and_print() {
        for p in ProblemId::ALL {
            assert_eq!(p.to_string().parse::<ProblemId>().unwrap(), p);
        }
        assert!(matches!(
            "default.unknown".parse::<ProblemId>(),
            Err(Error::UnknownProblem(_))
        ));
    }
}
