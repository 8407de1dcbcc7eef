use pnd_core::engine::{check_script, explicit_rewrite, run_goal, Report};
use pnd_core::parser::{parse_script, GoalItem, ItemKind, ProofStep, StepKind};
use pnd_core::prover::{decide, metaprop_to_prop, truth_table_valid};
use pnd_core::stdlib::{base_context, classical_context, TheoryFile};
use pnd_core::{MetaProp, TheoryContext};

fn statements(report: &Report, ctx: &TheoryContext) -> Vec<(String, String)> {
    report
        .theorems
        .iter()
        .map(|t| (t.name().to_string(), ctx.pretty(t.statement())))
        .collect()
}

fn context_for(file: TheoryFile) -> TheoryContext {
    match file {
        TheoryFile::Base => TheoryContext::new(),
        TheoryFile::ClassicalExamples => classical_context(),
        TheoryFile::Classical | TheoryFile::Examples | TheoryFile::Exercises => base_context(),
    }
}

#[test]
fn explicit_rule_names_give_the_same_theorems() {
    for file in [
        TheoryFile::Base,
        TheoryFile::Examples,
        TheoryFile::Classical,
        TheoryFile::ClassicalExamples,
    ] {
        let mut ctx = context_for(file);
        let report = check_script(&mut ctx, file.text()).unwrap();
        assert!(!report.choices.is_empty(), "{}", file.file_name());
        let explicit = explicit_rewrite(file.text(), &report.choices);
        assert!(!explicit.contains(".."), "{explicit}");
        let mut ctx2 = context_for(file);
        let report2 = check_script(&mut ctx2, &explicit)
            .unwrap_or_else(|d| panic!("{}: {d}\n{explicit}", file.file_name()));
        assert_eq!(statements(&report, &ctx), statements(&report2, &ctx2));
        assert!(report2.choices.is_empty());
    }
}

#[test]
fn fig2_explicit_form_matches_the_engine_choice() {
    let mut ctx = base_context();
    let text = TheoryFile::Examples.text();
    let report = check_script(&mut ctx, text).unwrap();
    let rewritten = explicit_rewrite(text, &report.choices);
    assert!(rewritten
        .contains("proposition double_negation_intro: \"p --> ~ ~ p\"\nproof (rule Imp_I)"));
    assert!(rewritten.contains("show \"F\" by (rule Neg_E)"));
}

#[test]
fn rechecking_is_deterministic() {
    let run = || {
        let mut ctx = base_context();
        let r = check_script(&mut ctx, TheoryFile::Examples.text()).unwrap();
        (statements(&r, &ctx), r.choices)
    };
    assert_eq!(run(), run());
}

#[test]
fn bundled_theorems_agree_with_the_oracles() {
    let mut ctx = TheoryContext::new();
    let mut intuitionistic = check_script(&mut ctx, TheoryFile::Base.text())
        .unwrap()
        .theorems;
    intuitionistic.extend(
        check_script(&mut ctx, TheoryFile::Examples.text())
            .unwrap()
            .theorems,
    );
    let mut classical = check_script(&mut ctx, TheoryFile::Classical.text())
        .unwrap()
        .theorems;
    classical.extend(
        check_script(&mut ctx, TheoryFile::ClassicalExamples.text())
            .unwrap()
            .theorems,
    );
    assert!(intuitionistic.len() >= 19);
    for t in &intuitionistic {
        let p = metaprop_to_prop(t.statement(), &ctx).unwrap();
        assert!(decide(&[], &p).is_provable(), "{}", t.name());
    }
    for t in intuitionistic.iter().chain(&classical) {
        assert!(
            truth_table_valid(t.statement(), &ctx).unwrap(),
            "{}",
            t.name()
        );
    }
    let peirce = metaprop_to_prop(ctx.theorem("Peirce").unwrap().statement(), &ctx).unwrap();
    assert!(!decide(&[], &peirce).is_provable());
}

// Every variant of a proof with one `show` (and its chaining command) removed.
fn without_one_show(steps: &[ProofStep]) -> Vec<Vec<ProofStep>> {
    let mut out = Vec::new();
    for (i, s) in steps.iter().enumerate() {
        if let StepKind::Show { .. } = &s.kind {
            {
                let chained = i > 0
                    && matches!(
                        steps[i - 1].kind,
                        StepKind::Then | StepKind::From(_) | StepKind::With(_)
                    );
                let mut v = steps.to_vec();
                v.remove(i);
                if chained {
                    v.remove(i - 1);
                }
                out.push(v);
            }
        }
        if let StepKind::Have { body, .. } | StepKind::Show { body, .. } = &s.kind {
            for inner in without_one_show(body) {
                let mut v = steps.to_vec();
                match &mut v[i].kind {
                    StepKind::Have { body, .. } | StepKind::Show { body, .. } => *body = inner,
                    _ => unreachable!(),
                }
                out.push(v);
            }
        }
    }
    out
}

#[test]
fn removing_any_show_leaves_an_open_goal() {
    let ctx = base_context();
    let items = parse_script(TheoryFile::Examples.text(), ctx.signature()).unwrap();
    let mut variants = 0;
    for item in items {
        let ItemKind::Goal(goal) = item.kind else {
            continue;
        };
        for proof in without_one_show(&goal.proof) {
            let mut ctx = ctx.clone();
            let broken = GoalItem {
                proof,
                ..goal.clone()
            };
            let e = run_goal(&mut ctx, &broken).expect_err("proof without a show must fail");
            assert!(e.goal.is_some());
            variants += 1;
        }
    }
    assert!(variants >= 10);
}

fn check_goal(ctx: &TheoryContext, text: &str) -> Result<(), pnd_core::Diagnostic> {
    let mut ctx = ctx.clone();
    check_script(&mut ctx, text).map(|_| ())
}

#[test]
fn assume_follows_goal_hypotheses_in_order() {
    let ctx = base_context();
    check_goal(
        &ctx,
        "proposition: \"a ==> a\" proof - assume \"a\" then show \"a\" . qed",
    )
    .unwrap();
    let e = check_goal(&ctx, "proposition: \"p\" proof - assume \"q\" qed").unwrap_err();
    assert!(e.message.contains("no further hypotheses"), "{}", e.message);
    let e = check_goal(
        &ctx,
        "proposition: \"a ==> b ==> a\" proof - assume \"b\" qed",
    )
    .unwrap_err();
    assert!(
        e.message.contains("next hypothesis of the goal is `a`"),
        "{}",
        e.message
    );
}

#[test]
fn chaining_orders_named_facts_before_this() {
    let ctx = base_context();
    // Imp_E needs the implication first: `with` must put the named fact ahead of `this`.
    check_goal(&ctx, "proposition: \"a --> b ==> a ==> b\" proof - assume \"a --> b\" and \"a\" then show \"b\" .. qed").unwrap();
    check_goal(
        &ctx,
        "proposition: \"a --> b ==> a ==> b\" proof - assume \"a\" and \"a --> b\" qed",
    )
    .unwrap_err();
    check_goal(
        &ctx,
        "proposition: \"a ==> a --> b ==> b\" proof - assume \"a\" and \"a --> b\" from this show \"b\" by (rule Imp_E) qed",
    )
    .unwrap_err();
}

#[test]
fn next_resets_the_local_context() {
    let ctx = base_context();
    check_goal(
        &ctx,
        "proposition: \"a --> a\" proof assume \"a\" show \"a\" . next next qed",
    )
    .unwrap();
    let proof = |second: &str| {
        format!(
            "proposition: \"a --> b ==> b --> a ==> a <-> b\"
             proof - assume \"a --> b\" and \"b --> a\" show \"a <-> b\"
             proof
               have k: \"b --> b\" proof assume \"b\" then show \"b\" . qed
               assume \"a\" have h: \"a\" . with `a --> b` show \"b\" ..
             next
               assume \"b\" {second}
             qed qed"
        )
    };
    check_goal(&ctx, &proof("with `b --> a` show \"a\" ..")).unwrap();
    let e = check_goal(&ctx, &proof("from h show \"a\" .")).unwrap_err();
    assert!(e.message.contains("unknown fact `h`"), "{}", e.message);
    let e = check_goal(&ctx, &proof("from `a` show \"a\" .")).unwrap_err();
    assert!(e.message.contains("not an available fact"), "{}", e.message);
    // named and derived without block assumptions: survives
    check_goal(
        &ctx,
        &proof("from k and `b` have \"b\" .. with `b --> a` show \"a\" .."),
    )
    .unwrap();
}

#[test]
fn show_requires_a_matching_pending_goal() {
    let ctx = base_context();
    let e = check_goal(
        &ctx,
        "proposition: \"a --> a\" proof assume \"a\" show \"b\" . qed",
    )
    .unwrap_err();
    assert!(e.message.starts_with("Failed to refine any pending goal"));
    assert_eq!(e.goal.as_deref(), Some("a ==> a"));
}

#[test]
fn qed_requires_no_remaining_goals() {
    let ctx = base_context();
    let e = check_goal(&ctx, "proposition: \"a /\\ b ==> b /\\ a\" proof - assume \"a /\\ b\" show \"b /\\ a\" proof qed qed").unwrap_err();
    assert!(e.message.contains("no remaining goals"), "{}", e.message);
    assert_eq!(e.goal.as_deref(), Some("b"));
    assert_eq!(e.chained, Vec::<String>::new());
}

#[test]
fn exported_statements_are_generalized() {
    let mut ctx = base_context();
    check_script(&mut ctx, "lemma swap: \"a /\\ b ==> b /\\ a\" proof - assume \"a /\\ b\" then have \"a\" .. from `a /\\ b` have \"b\" .. with `a` show \"b /\\ a\" .. qed").unwrap();
    let thm = ctx.theorem("swap").unwrap();
    assert!(thm.statement().atoms().is_empty());
    assert_eq!(
        thm.statement().schematics().into_iter().collect::<Vec<_>>(),
        ["a", "b"]
    );
    // usable at another instance
    check_script(
        &mut ctx,
        "proposition: \"(p --> q) /\\ r ==> r /\\ (p --> q)\" by (rule swap)",
    )
    .unwrap();
    let lit = MetaProp::judg(pnd_core::Formula::atom("x"));
    assert!(!lit.generalize().is_ground());
}
