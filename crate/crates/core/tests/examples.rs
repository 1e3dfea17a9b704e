//! Worked examples of the suppression task and its answer-set encoding.

use wcs_asp_core::asp::{is_closed, reduct_program};
use wcs_asp_core::text::{models_json, theory_text};
use wcs_asp_core::transform::{defined, undef};
use wcs_asp_core::*;

const P1: &str = "l :- e, -ab1.  e :- false.  ab1 :- false.";
const P2: &str = "l :- e, -ab1.  e :- false.  ab1 :- false.  e.";
const P3: &str = "l :- e, -ab1.  l :- t, -ab2.  e :- false.  ab1 :- false.  ab2 :- false.";
const P4: &str = "l :- e, -ab1.  -e.  -ab1.";

fn prog(s: &str) -> Program {
    parse_program(s).unwrap()
}

fn f(s: &str) -> Formula {
    parse_formula(s).unwrap()
}

fn limits() -> Limits {
    Limits::default()
}

#[test]
fn formula_classes() {
    let c = f("-(-p, q) ; not r").classify();
    assert!(c.implication_free && !c.basic && !c.regular);
    let c = f("-(-p, q)").classify();
    assert!(c.basic && !c.regular);
    let c = f("not (-p, q)").classify();
    assert!(c.regular && !c.basic);
    assert!(prog(P1).classify().wc_normal);
    assert!(!prog(P4).classify().wc_normal);
}

#[test]
fn vorobev_rewrites() {
    assert_eq!(regularize(&f("--p")).unwrap(), f("p"));
    assert_eq!(regularize(&f("-not p")).unwrap(), f("p"));
    assert_eq!(regularize(&f("-(p, q)")).unwrap(), f("-p ; -q"));
    let imp = Formula::implies(ImplKind::Classical, f("p"), f("q"));
    assert_eq!(regularize(&Formula::strong_neg(imp)).unwrap(), f("-p, q"));
    assert_eq!(regularize(&f("-true")).unwrap(), Formula::bottom());
}

#[test]
fn program_alphabets() {
    let names = |p: &Program| {
        p.atoms()
            .iter()
            .map(|a| a.name().to_owned())
            .collect::<Vec<_>>()
    };
    assert_eq!(names(&prog(P1)), ["ab1", "e", "l"]);
    assert_eq!(names(&prog("#atoms a, b. a.")), ["a", "b"]);
    assert!(prog("").atoms().is_empty());
    let heads: Vec<String> = prog(P4)
        .head_literals()
        .iter()
        .map(|l| l.to_string())
        .collect();
    assert_eq!(heads, ["-ab1", "-e", "l"]);
    let bodies: Vec<String> = prog(P1)
        .body_literals()
        .iter()
        .map(|l| l.to_string())
        .collect();
    assert_eq!(bodies, ["-ab1", "e"]);
}

#[test]
fn truth_table_cells() {
    let i = Interpretation::empty();
    let luk = Formula::implies(ImplKind::Lukasiewicz, f("q"), f("p"));
    assert_eq!(
        eval(&luk, &i, Logic::Lukasiewicz).unwrap(),
        TruthValue::True
    );
    let cl = Formula::implies(ImplKind::Classical, f("q"), f("p"));
    assert_eq!(
        eval(&cl, &Interpretation::of(&[], &["p"]), Logic::Classical).unwrap(),
        TruthValue::True
    );
    assert_eq!(
        eval(&f("not p"), &i, Logic::Classical).unwrap(),
        TruthValue::True
    );
    assert_eq!(
        eval(&f("-p"), &i, Logic::Lukasiewicz).unwrap(),
        TruthValue::Unknown
    );
    assert_eq!(
        eval(
            &f("p ; q"),
            &Interpretation::of(&["p"], &[]),
            Logic::Classical
        )
        .unwrap(),
        TruthValue::True
    );
}

#[test]
fn orders() {
    let below = Interpretation::of(&[], &["e", "ab1"]);
    let above = Interpretation::of(&[], &["e", "ab1", "l"]);
    assert!(knowledge_leq(&Interpretation::empty(), &above));
    assert!(knowledge_leq(&below, &above));
    let f = Interpretation::of(&[], &["p"]);
    let t = Interpretation::of(&["p"], &[]);
    assert!(truth_leq(&f, &t));
    assert!(!knowledge_leq(&f, &t));
}

#[test]
fn weak_completion_of_p1_as_lukasiewicz_theory() {
    let wc = weak_completion(&prog(P1)).unwrap();
    assert_eq!(
        wc.to_string(),
        "l <-> e, -ab1.\ne <-> false.\nab1 <-> false.\n"
    );
    let t = as_l_theory(&wc).unwrap();
    assert_eq!(t.formulas().len(), 3);
    assert!(satisfies(&Interpretation::of(&[], &["e", "l", "ab1"]), &t));
    let translated = vakarelov_translate(&t).unwrap();
    assert!(satisfies(
        &Interpretation::of(&[], &["e", "l", "ab1"]),
        &translated
    ));
}

#[test]
fn weak_completion_of_p2_and_p3() {
    let wc2 = weak_completion(&prog(P2)).unwrap().to_string();
    assert!(wc2.contains("e <-> false ; true."), "{wc2}");
    let p3 = prog(P3);
    let l = Literal::positive(Atom::new("l").unwrap());
    assert_eq!(defined(&p3, &l).unwrap().len(), 2);
    assert!(pdisj(&p3)
        .unwrap()
        .to_string()
        .starts_with("l :- e, -ab1 ; t, -ab2.\n"));
    assert_eq!(pdisj(&prog(P1)).unwrap(), prog(P1));
    let undefined: Vec<String> = undef(&prog(P1))
        .unwrap()
        .iter()
        .map(|l| l.to_string())
        .collect();
    assert_eq!(undefined, ["-ab1", "-e", "-l"]);
}

#[test]
fn suppression_task_wc_models() {
    assert_eq!(
        wc_models(&prog(P1), limits()).unwrap(),
        [Interpretation::of(&[], &["e", "l", "ab1"])]
    );
    assert_eq!(
        wc_models(&prog(P2), limits()).unwrap(),
        [Interpretation::of(&["e", "l"], &["ab1"])]
    );
    assert_eq!(
        wc_models(&prog(P3), limits()).unwrap(),
        [Interpretation::of(&[], &["e", "ab1", "ab2"])]
    );
    let chain = phi_iterates(&prog(P1)).unwrap();
    assert_eq!(chain.len(), 3);
}

#[test]
fn strongly_negated_head_has_other_models() {
    let p = prog("-p :- q.");
    assert_eq!(theory_text(&as_n_theory(&p)), "(-p <-cl q)\n");
    assert_eq!(
        answer_sets(&p, limits()).unwrap(),
        [Interpretation::empty()]
    );
    assert!(is_closed(&Interpretation::empty(), &p).unwrap());
    let other = Interpretation::of(&["p"], &["q"]);
    assert!(satisfies(&other, &as_n_theory(&p)));
    assert!(!is_answer_set(&other, &p));
    assert_eq!(
        enumerate_models(&as_n_theory(&p), &p.atoms(), limits())
            .unwrap()
            .len(),
        7
    );
}

#[test]
fn p4_answer_set() {
    let p4 = prog(P4);
    let answers = answer_sets(&p4, limits()).unwrap();
    assert_eq!(answers, [Interpretation::of(&[], &["e", "ab1"])]);
    assert_eq!(reduct_program(&p4, &answers[0]).unwrap(), p4);
    assert_eq!(
        models_json("answer_sets", &answers, &p4.atoms()).to_string(),
        r#"{"answer_sets":[["-ab1","-e"]],"unknown":[["l"]]}"#
    );
}

#[test]
fn definition_completion_of_p4() {
    let dc = definition_completion(&prog(P4)).unwrap();
    assert_eq!(
        dc.to_string(),
        "l :- e, -ab1.\n-e.\n-ab1.\n-l :- -(e, -ab1).\n--e :- -true.\n--ab1 :- -true.\n"
    );
    let reg = dc.regularized();
    assert_eq!(
        reg.rules()[3..],
        prog("-l :- -e ; ab1. e :- false. ab1 :- false.").rules()[..]
    );
    assert!(!is_closed(&Interpretation::of(&[], &["e", "ab1"]), &reg).unwrap());
    let expected = Interpretation::of(&[], &["e", "l", "ab1"]);
    assert_eq!(
        answer_sets(&dc, limits()).unwrap(),
        std::slice::from_ref(&expected)
    );
    assert_eq!(
        wc_models(&prog(P1), limits()).unwrap(),
        std::slice::from_ref(&expected)
    );
    let n = as_n_theory(&weak_completion(&reg).unwrap());
    assert_eq!(
        least_model(&n, &reg.atoms(), limits()).unwrap(),
        LeastModel::Least(expected)
    );
}

#[test]
fn inconsistent_facts() {
    let p = prog("a. -a.");
    assert!(answer_sets(&p, limits()).unwrap().is_empty());
    assert_eq!(
        least_model(&as_n_theory(&p), &p.atoms(), limits()).unwrap(),
        LeastModel::NoModel
    );
}
