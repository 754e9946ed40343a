//! Property tests: structural invariants of the parser, the model engine,
//! the clone machinery and the reasoners, on randomized small inputs.

use std::sync::Arc;

use proptest::prelude::*;

use nmlogic::circ::{strictly_less, CircProblem};
use nmlogic::default_logic::{DefaultRule, DefaultTheory};
use nmlogic::formula::{parse_formula, Formula};
use nmlogic::func::{BooleanFunction, FunctionLibrary};
use nmlogic::post::{
    clone_leq, clone_of, dual, is_monotone, property_profile, separating_degree, CloneName,
    SepDegree,
};
use nmlogic::relations::{
    classify_relation, constraint_to_theory, is_polymorphism, satisfies, BooleanRelation,
    ConstraintApplication, ConstraintTheory,
};
use nmlogic::theory::{Assignment, Theory};

fn lib() -> FunctionLibrary {
    FunctionLibrary::standard()
}

const VARS: [&str; 6] = ["a", "b", "c", "d", "e", "g"];

fn formula_strategy(num_vars: usize, with_constants: bool) -> BoxedStrategy<Formula> {
    let lib = lib();
    let mut leaves: Vec<Formula> = VARS[..num_vars]
        .iter()
        .map(|v| Formula::prop(v))
        .collect();
    if with_constants {
        leaves.push(Formula::apply(lib.lookup("const0").unwrap(), vec![]).unwrap());
        leaves.push(Formula::apply(lib.lookup("const1").unwrap(), vec![]).unwrap());
    }
    let leaf = proptest::sample::select(leaves);
    leaf.prop_recursive(4, 24, 3, move |inner| {
        let unary = {
            let not = lib.lookup("not").unwrap();
            inner
                .clone()
                .prop_map(move |f| Formula::apply(not.clone(), vec![f]).unwrap())
        };
        let binary = {
            let fns: Vec<Arc<BooleanFunction>> = ["and", "or", "xor", "imp", "eq"]
                .iter()
                .map(|n| lib.lookup(n).unwrap())
                .collect();
            (
                proptest::sample::select(fns),
                inner.clone(),
                inner.clone(),
            )
                .prop_map(|(f, a, b)| Formula::apply(f, vec![a, b]).unwrap())
        };
        let ternary = {
            let maj = lib.lookup("maj").unwrap();
            (inner.clone(), inner.clone(), inner).prop_map(move |(a, b, c)| {
                Formula::apply(maj.clone(), vec![a, b, c]).unwrap()
            })
        };
        prop_oneof![4 => unary, 8 => binary, 1 => ternary]
    })
    .boxed()
}

fn table_strategy(max_arity: usize) -> BoxedStrategy<BooleanFunction> {
    (0..=max_arity)
        .prop_flat_map(|arity| {
            proptest::collection::vec(any::<bool>(), 1 << arity)
                .prop_map(move |table| BooleanFunction::new("rnd", arity, table).unwrap())
        })
        .boxed()
}

fn relation_strategy(max_arity: usize) -> BoxedStrategy<BooleanRelation> {
    (1..=max_arity)
        .prop_flat_map(|arity| {
            proptest::collection::btree_set(
                proptest::collection::vec(any::<bool>(), arity),
                0..=(1 << arity),
            )
            .prop_map(move |tuples| BooleanRelation::new("rnd", arity, tuples).unwrap())
        })
        .boxed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn printer_round_trips(f in formula_strategy(4, true)) {
        let printed = f.to_string();
        let reparsed = parse_formula(&printed, &lib()).unwrap();
        prop_assert_eq!(f, reparsed);
    }

    #[test]
    fn count_matches_enumeration(fs in proptest::collection::vec(formula_strategy(4, true), 1..3)) {
        let theory = Theory::new(fs, []);
        let models = theory.models().unwrap();
        prop_assert_eq!(theory.count_models().unwrap(), models.len() as u64);
        prop_assert_eq!(theory.is_consistent().unwrap(), !models.is_empty());
    }

    #[test]
    fn constant_elimination_preserves_counts(
        fs in proptest::collection::vec(formula_strategy(5, true), 1..4)
    ) {
        let theory = Theory::new(fs, []);
        let rewritten = theory.eliminate_constant_one();
        prop_assert_eq!(
            theory.count_models().unwrap(),
            rewritten.count_models().unwrap()
        );
        prop_assert!(!rewritten
            .formulas()
            .iter()
            .any(|f| f.mentions_nullary("const1")));
    }

    #[test]
    fn entailment_agrees_with_refutation_count(
        fs in proptest::collection::vec(formula_strategy(3, false), 1..3),
        q in formula_strategy(3, false)
    ) {
        let theory = Theory::new(fs.clone(), []);
        let entails = theory.entails(&q).unwrap();
        let not = lib().lookup("not").unwrap();
        let mut refuted = fs;
        refuted.push(Formula::apply(not, vec![q]).unwrap());
        let mut universe = theory.universe().clone();
        for f in &refuted {
            universe.extend(f.vars());
        }
        let refutation = Theory::new(refuted, universe);
        prop_assert_eq!(entails, refutation.count_models().unwrap() == 0);
    }

    #[test]
    fn dual_is_an_involution(f in table_strategy(4)) {
        prop_assert!(dual(&dual(&f)).equivalent(&f));
    }

    #[test]
    fn monotone_functions_generate_below_m(f in table_strategy(4)) {
        let profile = property_profile(&f).unwrap();
        if profile.monotone {
            let c = clone_of(std::slice::from_ref(&f)).unwrap();
            prop_assert!(clone_leq(&c, &CloneName::M).unwrap());
        }
    }

    #[test]
    fn separating_degree_matches_the_subset_oracle(f in table_strategy(4)) {
        for c in [false, true] {
            let claimed = separating_degree(&f, c).unwrap();
            if let Some(expected) = oracle_degree(&f, c) {
                prop_assert_eq!(claimed, expected, "function {:?} value {}", f.table(), c);
            }
        }
    }

    #[test]
    fn bridged_constraints_agree_with_direct_satisfaction(
        r in relation_strategy(3),
        picks in proptest::collection::vec(0usize..4, 1..4),
        bits in proptest::collection::vec(any::<bool>(), 4)
    ) {
        let r = Arc::new(r);
        let vars = ["p", "q", "r", "s"];
        let apps: Vec<ConstraintApplication> = picks
            .iter()
            .map(|&start| {
                let chosen: Vec<String> = (0..r.arity())
                    .map(|i| vars[(start + i) % 4].to_string())
                    .collect();
                ConstraintApplication::new(r.clone(), chosen).unwrap()
            })
            .collect();
        let gamma = ConstraintTheory::new(apps, vars.iter().map(|v| v.to_string()));
        let theory = constraint_to_theory(&gamma).unwrap();
        let sigma = Assignment::from_pairs(vars.iter().zip(&bits).map(|(v, &b)| (*v, b)));
        let direct = satisfies(&sigma, &gamma).unwrap();
        let bridged = theory
            .formulas()
            .iter()
            .all(|f| f.evaluate(&sigma).unwrap());
        prop_assert_eq!(direct, bridged);
    }

    #[test]
    fn horn_closure_flag_matches_pairwise_meets(r in relation_strategy(3)) {
        let flags = classify_relation(&r).unwrap();
        let and = lib().lookup("and").unwrap();
        prop_assert_eq!(flags.horn, is_polymorphism(&r, &and));
        // the closure property spelled out directly
        let direct = r.tuples().iter().all(|a| {
            r.tuples().iter().all(|b| {
                let meet: Vec<bool> = a.iter().zip(b).map(|(&x, &y)| x && y).collect();
                r.contains(&meet)
            })
        });
        prop_assert_eq!(flags.horn, direct);
    }

    #[test]
    fn minimal_models_form_an_antichain_below_all_models(
        fs in proptest::collection::vec(formula_strategy(4, false), 1..3),
        p_bits in proptest::collection::vec(any::<bool>(), 4),
        z_bits in proptest::collection::vec(any::<bool>(), 4)
    ) {
        let theory = Theory::new(fs, VARS[..4].iter().map(|v| v.to_string()));
        let p: Vec<String> = VARS[..4]
            .iter()
            .zip(&p_bits)
            .filter(|(_, &b)| b)
            .map(|(v, _)| v.to_string())
            .collect();
        let z: Vec<String> = VARS[..4]
            .iter()
            .zip(&z_bits)
            .zip(&p_bits)
            .filter(|((_, &zb), &pb)| zb && !pb)
            .map(|((v, _), _)| v.to_string())
            .collect();
        let problem = CircProblem::from_p_z(theory.clone(), p, z).unwrap();
        let models = theory.models().unwrap();
        let minimal = problem.minimal_models().unwrap();
        for m in &minimal {
            prop_assert!(models.contains(m));
            prop_assert!(problem.is_circ_model(m).unwrap());
        }
        for a in &minimal {
            for b in &minimal {
                prop_assert!(!strictly_less(a, b, problem.partition()));
            }
        }
        // well-foundedness: every model sits above some minimal model
        for m in &models {
            prop_assert!(minimal
                .iter()
                .any(|min| nmlogic::circ::leq_pz(min, m, problem.partition())));
        }
    }

    #[test]
    fn accepted_generating_sets_are_exactly_the_witness_classes(
        alphas in proptest::collection::vec(formula_strategy(3, true), 1..4),
        betas in proptest::collection::vec(formula_strategy(3, true), 1..4),
        gammas in proptest::collection::vec(formula_strategy(3, true), 1..4),
        w in proptest::collection::vec(formula_strategy(3, true), 0..2)
    ) {
        let n = alphas.len().min(betas.len()).min(gammas.len());
        let rules: Vec<DefaultRule> = (0..n)
            .map(|i| DefaultRule::new(alphas[i].clone(), betas[i].clone(), gammas[i].clone()))
            .collect();
        let theory = DefaultTheory::new(w, rules, []);
        let witnesses = theory.stable_extensions().unwrap();
        let witness_closures: Vec<Vec<Assignment>> = witnesses
            .iter()
            .map(|w| w.closure_base.models().unwrap())
            .collect();
        for w in &witnesses {
            prop_assert!(theory.is_stable_extension(&w.generating).unwrap());
        }
        // every accepted candidate lands in some witness class; candidates
        // whose closure matches no witness are all rejected
        for mask in 0u32..1 << n {
            let subset: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let accepted = theory.is_stable_extension(&subset).unwrap();
            let closure = theory.closure_base(&subset).models().unwrap();
            if accepted {
                prop_assert!(witness_closures.contains(&closure));
            }
        }
    }
}

// Literal reading of the separating definition, by subset enumeration.
// Returns None when the preimage is too large to enumerate.
fn oracle_degree(f: &BooleanFunction, c: bool) -> Option<SepDegree> {
    let n = f.arity();
    let preimage: Vec<usize> = (0..1usize << n).filter(|&i| f.table()[i] == c).collect();
    if preimage.len() > 12 {
        return None;
    }
    let separating = |subset: &[usize]| -> bool {
        if subset.is_empty() {
            return true;
        }
        (0..n).any(|j| {
            subset
                .iter()
                .all(|&t| ((t >> (n - 1 - j)) & 1 == 1) == c)
        })
    };
    if separating(&preimage) {
        return Some(SepDegree::Infinite);
    }
    // the largest m such that every subset of size at most m separates
    let mut best: Option<u32> = None;
    'outer: for m in 1..=preimage.len() {
        for mask in 0u32..1 << preimage.len() {
            if mask.count_ones() as usize != m {
                continue;
            }
            let subset: Vec<usize> = (0..preimage.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| preimage[i])
                .collect();
            if !separating(&subset) {
                break 'outer;
            }
        }
        best = Some(m as u32);
    }
    match best {
        Some(m) if m >= 2 => Some(SepDegree::Finite(m)),
        _ => Some(SepDegree::None),
    }
}

#[test]
fn separating_degree_oracle_exhaustive_small_arities() {
    for arity in 0..=3usize {
        for bits in 0..1u32 << (1 << arity) {
            let table: Vec<bool> = (0..1 << arity).map(|i| bits & (1 << i) != 0).collect();
            let f = BooleanFunction::new("g", arity, table).unwrap();
            for c in [false, true] {
                assert_eq!(
                    separating_degree(&f, c).unwrap(),
                    oracle_degree(&f, c).unwrap(),
                    "arity {arity} bits {bits:b} value {c}"
                );
            }
        }
    }
}
