use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::strategy::Union;
use wcs_asp_core::asp::{is_answer_set, n_theory_of_reduct};
use wcs_asp_core::syntax::regularize_program;
use wcs_asp_core::*;

const NAMES: [&str; 5] = ["a", "b", "c", "d", "e"];

fn leaf(atoms: usize) -> BoxedStrategy<Formula> {
    prop_oneof![
        4 => (0..atoms).prop_map(|i| Formula::atom(NAMES[i]).unwrap()),
        1 => prop::sample::select(TruthValue::ALL.to_vec()).prop_map(Formula::Const),
    ]
    .boxed()
}

/// Formulas over the first `atoms` names with `∼ ∧ ∨`, plus `¬` and `←CL`
/// when asked for.
fn formula(atoms: usize, weak: bool, classical: bool) -> BoxedStrategy<Formula> {
    leaf(atoms)
        .prop_recursive(4, 24, 2, move |inner| {
            let mut options: Vec<BoxedStrategy<Formula>> = vec![
                inner.clone().prop_map(Formula::strong_neg).boxed(),
                (inner.clone(), inner.clone())
                    .prop_map(|(l, r)| Formula::and(l, r))
                    .boxed(),
                (inner.clone(), inner.clone())
                    .prop_map(|(l, r)| Formula::or(l, r))
                    .boxed(),
            ];
            if weak {
                options.push(inner.clone().prop_map(Formula::weak_neg).boxed());
            }
            if classical {
                options.push(
                    (inner.clone(), inner)
                        .prop_map(|(h, b)| Formula::implies(ImplKind::Classical, h, b))
                        .boxed(),
                );
            }
            Union::new(options)
        })
        .boxed()
}

fn all_interpretations(atoms: &BTreeSet<Atom>) -> Vec<Interpretation> {
    let empty = Theory::new(Vec::new(), Logic::Classical).unwrap();
    enumerate_models(&empty, atoms, Limits::default()).unwrap()
}

fn alphabet(n: usize) -> BTreeSet<Atom> {
    NAMES[..n].iter().map(|s| Atom::new(s).unwrap()).collect()
}

fn n_value(f: &Formula, i: &Interpretation) -> TruthValue {
    eval(f, i, Logic::Classical).unwrap()
}

fn program(
    class: ProgramClass,
    max_atoms: usize,
    max_rules: usize,
) -> impl Strategy<Value = Program> {
    (1..=max_atoms, 0..=max_rules, any::<u64>()).prop_map(move |(atoms, rules, seed)| {
        generate_program(GenSpec::new(atoms, rules, class, seed)).unwrap()
    })
}

fn any_class() -> impl Strategy<Value = ProgramClass> {
    prop::sample::select(ProgramClass::ALL.to_vec())
}

proptest! {
    #[test]
    fn regularize_is_idempotent(f in formula(5, true, true)) {
        let r = regularize(&f).unwrap();
        prop_assert!(r.is_regular());
        prop_assert_eq!(regularize(&r).unwrap(), r);
    }

    #[test]
    fn regularize_preserves_satisfaction(f in formula(5, true, true)) {
        let r = regularize(&f).unwrap();
        for i in all_interpretations(&alphabet(5)) {
            prop_assert_eq!(n_value(&f, &i).is_true(), n_value(&r, &i).is_true(), "{} vs {} at {}", f, r, i);
        }
    }

    #[test]
    fn regularize_preserves_values_of_basic_formulas(f in formula(5, false, false)) {
        let r = regularize(&f).unwrap();
        for i in all_interpretations(&alphabet(5)) {
            prop_assert_eq!(n_value(&f, &i), n_value(&r, &i));
        }
    }

    #[test]
    fn basic_formulas_are_monotone(f in formula(4, false, false)) {
        let all = all_interpretations(&alphabet(4));
        for j in all.iter().filter(|j| n_value(&f, j).is_true()) {
            for i in all.iter().filter(|i| knowledge_leq(j, i)) {
                prop_assert!(n_value(&f, i).is_true(), "{} true at {} but not at {}", f, j, i);
            }
        }
    }

    #[test]
    fn weak_negation_is_implication_into_bottom(f in formula(4, true, true)) {
        let weak = Formula::weak_neg(f.clone());
        let classical = Formula::implies(ImplKind::Classical, Formula::bottom(), f);
        for i in all_interpretations(&alphabet(4)) {
            prop_assert_eq!(n_value(&weak, &i), n_value(&classical, &i));
        }
    }

    #[test]
    fn formulas_round_trip_through_text(f in formula(5, true, false)) {
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn programs_round_trip_through_text(class in any_class(), atoms in 1..6usize, rules in 0..8usize, seed: u64) {
        let p = generate_program(GenSpec::new(atoms, rules, class, seed)).unwrap();
        prop_assert_eq!(parse_program(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn classification_is_ordered(class in any_class(), atoms in 1..5usize, rules in 0..6usize, seed: u64) {
        let c = generate_program(GenSpec::new(atoms, rules, class, seed)).unwrap().classify();
        prop_assert!(!c.basic || c.implication_free);
        prop_assert!(!c.normal || c.extended);
        prop_assert!(!c.extended || c.normal_nested);
        prop_assert!(!c.wc_normal || (c.basic && c.normal_nested));
    }

    #[test]
    fn least_model_is_below_every_model(p in program(ProgramClass::Basic, 4, 5)) {
        let n = as_n_theory(&p);
        if let LeastModel::Least(m) = least_model(&n, &p.atoms(), Limits::default()).unwrap() {
            for other in enumerate_models(&n, &p.atoms(), Limits::default()).unwrap() {
                prop_assert!(knowledge_leq(&m, &other));
            }
        }
    }

    #[test]
    fn vakarelov_translation_preserves_models(atoms in 1..=5usize, seed: u64) {
        let f = generate_lukasiewicz_formula(atoms, 4, seed).unwrap();
        let t = Theory::new(vec![f], Logic::Lukasiewicz).unwrap();
        let translated = vakarelov_translate(&t).unwrap();
        for i in all_interpretations(&alphabet(atoms)) {
            prop_assert_eq!(satisfies(&i, &t), satisfies(&i, &translated));
        }
    }

    #[test]
    fn answer_sets_are_minimal_models_of_the_reduct(p in program(ProgramClass::Regular, 3, 4)) {
        // The generator only draws regular programs here.
        let atoms = p.atoms();
        let answers = answer_sets(&p, Limits::default()).unwrap();
        for i in all_interpretations(&atoms) {
            let reduct = n_theory_of_reduct(&p, &i).unwrap();
            let minimal = minimal_models(&reduct, &atoms, Limits::default()).unwrap();
            prop_assert_eq!(answers.contains(&i), minimal.contains(&i), "at {}", i);
            prop_assert_eq!(answers.contains(&i), is_answer_set(&i, &p));
        }
    }

    #[test]
    fn pdisj_ignores_rule_order(
        (p, q) in program(ProgramClass::Basic, 4, 6).prop_flat_map(|p| {
            let rules = Just(p.rules().to_vec()).prop_shuffle();
            (Just(p.clone()), rules.prop_map(move |r| p.with_rules(r)))
        })
    ) {
        let l = Limits::default();
        let lp = as_l_theory(&weak_completion(&p).unwrap()).unwrap();
        let lq = as_l_theory(&weak_completion(&q).unwrap()).unwrap();
        prop_assert_eq!(enumerate_models(&lp, &p.atoms(), l).unwrap(), enumerate_models(&lq, &q.atoms(), l).unwrap());
        prop_assert_eq!(wc_models(&p, l).unwrap(), wc_models(&q, l).unwrap());
        prop_assert_eq!(
            answer_sets(&definition_completion(&p).unwrap(), l).unwrap(),
            answer_sets(&definition_completion(&q).unwrap(), l).unwrap()
        );
    }

    #[test]
    fn completions_keep_the_alphabet(p in program(ProgramClass::NormalNested, 5, 6)) {
        prop_assert_eq!(weak_completion(&p).unwrap().atoms(), p.atoms());
        prop_assert_eq!(definition_completion(&p).unwrap().atoms(), p.atoms());
    }

    #[test]
    fn dc_answer_sets_are_models_of_the_weak_completion(atoms in 1..=4usize, rules in 0..6usize, seed: u64) {
        let spec = GenSpec { one_sign_per_atom: true, ..GenSpec::new(atoms, rules, ProgramClass::Basic, seed) };
        let p = generate_program(spec).unwrap();
        let l = as_l_theory(&weak_completion(&p).unwrap()).unwrap();
        for i in answer_sets(&definition_completion(&p).unwrap(), Limits::default()).unwrap() {
            prop_assert!(satisfies(&i, &l), "{} is not a model of the weak completion", i);
        }
    }

    #[test]
    fn wc_normal_programs_have_one_wc_model(p in program(ProgramClass::WcNormal, 8, 12)) {
        let models = wc_models(&p, Limits::default()).unwrap();
        prop_assert_eq!(models, vec![phi_fixpoint(&p).unwrap()]);
    }

    #[test]
    fn completed_programs_match_weak_completion_with_one_sign_per_atom(atoms in 1..=5usize, rules in 0..6usize, seed: u64) {
        let spec = GenSpec { one_sign_per_atom: true, ..GenSpec::new(atoms, rules, ProgramClass::Basic, seed) };
        let p = generate_program(spec).unwrap();
        let report = check_program(Property::Lemma2ModelEquality, &p, Limits::default()).unwrap();
        prop_assert!(report.passed, "{}", report);
    }
}

#[test]
fn regularization_changes_values_but_not_satisfaction() {
    // ∼¬p is U at p = U, while its regular form p stays U; ∼¬p is ⊥ there.
    let f = parse_formula("-not p").unwrap();
    let r = regularize(&f).unwrap();
    assert_eq!(r, parse_formula("p").unwrap());
    let i = Interpretation::empty();
    assert_eq!(n_value(&f, &i), TruthValue::False);
    assert_eq!(n_value(&r, &i), TruthValue::Unknown);
}

#[test]
fn model_equality_fails_when_both_signs_are_defined() {
    let p = parse_program("a :- b. -a :- c.").unwrap();
    let n = as_n_theory(
        &weak_completion(&regularize_program(&definition_completion(&p).unwrap())).unwrap(),
    );
    let l = as_l_theory(&weak_completion(&p).unwrap()).unwrap();
    let i = Interpretation::of(&["a", "b"], &[]);
    assert!(satisfies(&i, &n));
    // c ↔ ∼a is U ↔ ⊥ under Łukasiewicz, which is U.
    assert!(!satisfies(&i, &l));
}

#[test]
fn dc_answer_sets_can_violate_the_weak_completion_when_both_signs_are_defined() {
    // dc adds c ← ∼⊥ for the rule ∼c ← ⊥, so c is true in the answer set,
    // while c ↔ a is U under Łukasiewicz with a unknown.
    let p = parse_program("-c :- false. c :- a.").unwrap();
    let answers = answer_sets(&definition_completion(&p).unwrap(), Limits::default()).unwrap();
    assert_eq!(answers, [Interpretation::of(&["c"], &[])]);
    let l = as_l_theory(&weak_completion(&p).unwrap()).unwrap();
    assert!(!satisfies(&answers[0], &l));
}
