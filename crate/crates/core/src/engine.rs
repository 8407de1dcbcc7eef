//! Interpreter for structured proofs.
//!
//! A proof is run against a stack of frames, one per open `proof ... qed`
//! block. Each frame holds its pending goals, block assumptions, local facts
//! and the `this` register. All logical steps go through the kernel.

use crate::diag::{Diagnostic, Span, Spanned};
use crate::kernel::{
    apply_rule_elim, apply_rule_intro, close_by_assumption, unfold, DefEq, Discharged, Goal,
    Theorem, TheoryContext,
};
use crate::parser::{
    parse_script, FactRef, GoalItem, ItemKind, Method, MethodKind, MethodStyle, ProofStep, StepKind,
};
use crate::syntax::MetaProp;

/// A `standard` method resolved to a concrete rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MethodChoice {
    pub span: Span,
    pub style: MethodStyle,
    pub rule: String,
}

/// What a checked script added to the context.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub theorems: Vec<Theorem>,
    pub definitions: Vec<String>,
    pub choices: Vec<MethodChoice>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Intro,
    Elim,
}

struct Fact {
    name: Option<String>,
    prop: MetaProp,
    // derived under block assumptions, so `next` discards it
    scoped: bool,
}

#[derive(Default)]
struct Frame {
    pending: Vec<Goal>,
    assumptions: Vec<MetaProp>,
    facts: Vec<Fact>,
    this: Vec<MetaProp>,
}

struct Engine<'c> {
    ctx: &'c TheoryContext,
    frames: Vec<Frame>,
    choices: Vec<MethodChoice>,
}

/// Checks every item of `text` in order, extending `ctx`.
pub fn check_script(ctx: &mut TheoryContext, text: &str) -> Result<Report, Diagnostic> {
    let items = parse_script(text, ctx.signature())?;
    let mut report = Report::default();
    for item in items {
        match item.kind {
            ItemKind::Axiomatization(ax) => {
                for d in ax.decls {
                    ctx.declare(d.node)
                        .map_err(|e| Diagnostic::new(d.span, e.to_string()))?;
                }
                for r in ax.rules {
                    let thm = ctx
                        .register_axiom(&r.name.node, &r.attrs, &r.statement.node)
                        .map_err(|e| Diagnostic::new(r.name.span, e.to_string()))?;
                    report.theorems.push(thm.clone());
                }
            }
            ItemKind::Definition(def) => {
                let d = ctx
                    .register_definition(def.decl.node, &def.lhs, &def.rhs)
                    .map_err(|e| Diagnostic::new(def.equation_span, e.to_string()))?;
                report.definitions.push(d.name.clone());
            }
            ItemKind::Goal(goal) => {
                let (thm, choices) = run_goal(ctx, &goal)?;
                report.theorems.push(thm);
                report.choices.extend(choices);
            }
        }
    }
    Ok(report)
}

/// Proves one goal item and exports its original statement.
pub fn run_goal(
    ctx: &mut TheoryContext,
    item: &GoalItem,
) -> Result<(Theorem, Vec<MethodChoice>), Diagnostic> {
    let statement = &item.statement.node;
    if let Some(name) = &item.name {
        if let Err(e) = ctx.check_fresh(&name.node) {
            return Err(Diagnostic::new(name.span, e.to_string())
                .with_goal(ctx.pretty(statement), Vec::new()));
        }
    }
    let mut engine = Engine {
        ctx,
        frames: Vec::new(),
        choices: Vec::new(),
    };
    engine.body(Goal::from_prop(statement), Vec::new(), &item.proof)?;
    let choices = engine.choices;
    let name = item.name.as_ref().map(|n| n.node.as_str());
    let span = item.name.as_ref().map_or(item.statement.span, |n| n.span);
    let thm = ctx
        .export(
            name,
            &item.attrs,
            statement,
            Discharged::new(statement.clone()),
        )
        .map_err(|e| Diagnostic::new(span, e.to_string()))?;
    Ok((thm, choices))
}

/// Replaces each resolved `standard` method with the rule it selected.
pub fn explicit_rewrite(text: &str, choices: &[MethodChoice]) -> String {
    let mut sorted: Vec<&MethodChoice> = choices.iter().collect();
    sorted.sort_by_key(|c| c.span.start);
    let mut out = String::with_capacity(text.len());
    let mut at = 0;
    for c in sorted {
        out.push_str(&text[at..c.span.start]);
        match c.style {
            MethodStyle::DotDot => out.push_str(&format!("by (rule {})", c.rule)),
            MethodStyle::Implicit => out.push_str(&format!(" (rule {})", c.rule)),
            MethodStyle::Written | MethodStyle::Dot => out.push_str(&format!("(rule {})", c.rule)),
        }
        at = c.span.end;
    }
    out.push_str(&text[at..]);
    out
}

fn describe(m: &Method) -> String {
    match (&m.style, &m.kind) {
        (MethodStyle::Dot, _) => "`.`".into(),
        (MethodStyle::DotDot, _) => "`..`".into(),
        (MethodStyle::Implicit, _) => "`proof`".into(),
        (_, MethodKind::This) => "`this`".into(),
        (_, MethodKind::Standard) => "`standard`".into(),
        (_, MethodKind::Rule(r)) => format!("`rule {r}`"),
    }
}

impl<'c> Engine<'c> {
    fn frame(&mut self) -> &mut Frame {
        self.frames.last_mut().expect("proof block is open")
    }

    fn pretty_all(&self, props: &[MetaProp]) -> Vec<String> {
        props.iter().map(|p| self.ctx.pretty(p)).collect()
    }

    fn fail(
        &self,
        span: Span,
        msg: impl Into<String>,
        goal: Option<&Goal>,
        chained: &[MetaProp],
    ) -> Diagnostic {
        let d = Diagnostic::new(span, msg);
        match goal {
            Some(g) => d.with_goal(self.ctx.pretty(&g.to_prop()), self.pretty_all(chained)),
            None => d,
        }
    }

    // Error in the middle of a block: report the first pending goal.
    fn fail_here(&self, span: Span, msg: impl Into<String>, chained: &[MetaProp]) -> Diagnostic {
        let goal = self.frames.last().and_then(|f| f.pending.first());
        self.fail(span, msg, goal, chained)
    }

    fn assumptions(&self) -> Vec<MetaProp> {
        self.frames
            .iter()
            .flat_map(|f| f.assumptions.iter().cloned())
            .collect()
    }

    fn closure_facts(&self, chained: &[MetaProp]) -> Vec<MetaProp> {
        let mut facts = chained.to_vec();
        facts.extend(self.assumptions());
        facts
    }

    fn body(
        &mut self,
        goal: Goal,
        chained: Vec<MetaProp>,
        steps: &[ProofStep],
    ) -> Result<(), Diagnostic> {
        let mut goal = goal;
        let mut chained = chained;
        let mut steps = steps;
        if let Some(ProofStep {
            kind: StepKind::Unfolding(names),
            ..
        }) = steps.first()
        {
            let defs = names
                .iter()
                .map(|n| {
                    self.ctx.definition(&n.node).ok_or_else(|| {
                        self.fail(
                            n.span,
                            format!("unknown definition `{}`", n.node),
                            Some(&goal),
                            &chained,
                        )
                    })
                })
                .collect::<Result<Vec<&DefEq>, _>>()?;
            goal = Goal::from_prop(&unfold(&defs, &goal.to_prop()));
            chained = chained.iter().map(|c| unfold(&defs, c)).collect();
            steps = &steps[1..];
        }
        let Some((first, rest)) = steps.split_first() else {
            return Err(self.fail(Span::point(0), "missing proof", Some(&goal), &chained));
        };
        match &first.kind {
            StepKind::Terminal(m) => self.terminal(m, &goal, &chained),
            StepKind::ProofOpen(m) => {
                let mut frame = Frame::default();
                match m {
                    None => {
                        frame.pending.push(goal);
                        frame.facts.extend(chained.iter().map(|c| Fact {
                            name: None,
                            prop: c.clone(),
                            scoped: false,
                        }));
                        frame.this = chained;
                    }
                    Some(m) => frame.pending = self.opening(m, &goal, &chained)?,
                }
                self.frames.push(frame);
                let result = self.block(rest);
                self.frames.pop();
                result
            }
            _ => Err(self.fail(first.span, "expected a proof", Some(&goal), &chained)),
        }
    }

    fn block(&mut self, steps: &[ProofStep]) -> Result<(), Diagnostic> {
        let mut chained: Option<Vec<MetaProp>> = None;
        for step in steps {
            match &step.kind {
                StepKind::Assume(props) => self.assume(step.span, props)?,
                StepKind::Then => {
                    let this = self.frame().this.clone();
                    if this.is_empty() {
                        return Err(self.fail_here(
                            step.span,
                            "nothing to chain: `this` is empty",
                            &[],
                        ));
                    }
                    chained = Some(this);
                }
                StepKind::From(refs) => chained = Some(self.resolve(refs)?),
                StepKind::With(refs) => {
                    let mut facts = self.resolve(refs)?;
                    facts.extend(self.frame().this.clone());
                    chained = Some(facts);
                }
                StepKind::Have {
                    label,
                    statement,
                    body,
                } => {
                    let chained = chained.take().unwrap_or_default();
                    self.have(label.as_deref(), statement, body, chained)?;
                }
                StepKind::Show { statement, body } => {
                    let chained = chained.take().unwrap_or_default();
                    self.show(step.span, statement, body, chained)?;
                }
                StepKind::Next => {
                    let f = self.frame();
                    f.assumptions.clear();
                    f.this.clear();
                    f.facts.retain(|fact| fact.name.is_some() && !fact.scoped);
                }
                StepKind::Qed => {
                    let pending = self.frame().pending.len();
                    if pending > 0 {
                        return Err(self.fail_here(
                            step.span,
                            format!(
                                "proof is incomplete: `qed` requires no remaining goals, but {pending} goal{} remain{}",
                                if pending == 1 { "" } else { "s" },
                                if pending == 1 { "s" } else { "" },
                            ),
                            &[],
                        ));
                    }
                    return Ok(());
                }
                StepKind::Unfolding(_) | StepKind::ProofOpen(_) | StepKind::Terminal(_) => {
                    return Err(self.fail_here(
                        step.span,
                        "unexpected proof method inside a block",
                        &[],
                    ));
                }
            }
        }
        Ok(())
    }

    fn assume(&mut self, span: Span, props: &[Spanned<MetaProp>]) -> Result<(), Diagnostic> {
        let frame = self.frames.last().expect("proof block is open");
        let Some(goal) = frame.pending.first() else {
            return Err(self.fail_here(span, "nothing to assume: no pending goal", &[]));
        };
        let offset = frame.assumptions.len();
        for (i, p) in props.iter().enumerate() {
            match goal.hyps.get(offset + i) {
                Some(h) if h == &p.node => {}
                Some(h) => {
                    return Err(self.fail_here(
                        p.span,
                        format!(
                            "cannot assume `{}`: the next hypothesis of the goal is `{}`",
                            self.ctx.pretty(&p.node),
                            self.ctx.pretty(h)
                        ),
                        &[],
                    ))
                }
                None => {
                    return Err(self.fail_here(
                        p.span,
                        format!(
                            "cannot assume `{}`: the goal has no further hypotheses",
                            self.ctx.pretty(&p.node)
                        ),
                        &[],
                    ))
                }
            }
        }
        let assumed: Vec<MetaProp> = props.iter().map(|p| p.node.clone()).collect();
        let f = self.frame();
        f.assumptions.extend(assumed.iter().cloned());
        f.this = assumed;
        Ok(())
    }

    fn resolve(&self, refs: &[Spanned<FactRef>]) -> Result<Vec<MetaProp>, Diagnostic> {
        let mut out = Vec::new();
        for r in refs {
            match &r.node {
                FactRef::This => out.extend(
                    self.frames
                        .last()
                        .map(|f| f.this.clone())
                        .unwrap_or_default(),
                ),
                FactRef::Name(n) => {
                    let local =
                        self.frames.iter().rev().find_map(|f| {
                            f.facts.iter().rev().find(|x| x.name.as_deref() == Some(n))
                        });
                    match (local, self.ctx.theorem(n)) {
                        (Some(fact), _) => out.push(fact.prop.clone()),
                        (None, Some(thm)) => out.push(thm.statement().fix()),
                        (None, None) => {
                            return Err(self.fail_here(r.span, format!("unknown fact `{n}`"), &[]))
                        }
                    }
                }
                FactRef::Literal(p) => {
                    let visible = self.frames.iter().any(|f| {
                        f.assumptions.contains(p)
                            || f.this.contains(p)
                            || f.facts.iter().any(|x| &x.prop == p)
                    });
                    if !visible {
                        return Err(self.fail_here(
                            r.span,
                            format!("`{}` is not an available fact", self.ctx.pretty(p)),
                            &[],
                        ));
                    }
                    out.push(p.clone());
                }
            }
        }
        Ok(out)
    }

    fn have(
        &mut self,
        label: Option<&str>,
        statement: &Spanned<MetaProp>,
        body: &[ProofStep],
        chained: Vec<MetaProp>,
    ) -> Result<(), Diagnostic> {
        self.body(Goal::from_prop(&statement.node), chained, body)?;
        let f = self.frame();
        let scoped = !f.assumptions.is_empty();
        f.facts.push(Fact {
            name: label.map(str::to_string),
            prop: statement.node.clone(),
            scoped,
        });
        f.this = vec![statement.node.clone()];
        Ok(())
    }

    fn show(
        &mut self,
        span: Span,
        statement: &Spanned<MetaProp>,
        body: &[ProofStep],
        chained: Vec<MetaProp>,
    ) -> Result<(), Diagnostic> {
        let frame = self.frames.last().expect("proof block is open");
        let stated = Goal::from_prop(&statement.node);
        let Some(index) = frame.pending.iter().position(|g| g.concl == stated.concl) else {
            let msg = format!(
                "Failed to refine any pending goal: no pending goal has conclusion `{}`",
                self.ctx.pretty_formula(&stated.concl)
            );
            return Err(self.fail_here(span, msg, &chained));
        };
        let target = frame.pending[index].clone();
        for a in &frame.assumptions {
            if !target.hyps.contains(a) {
                return Err(self.fail(
                    span,
                    format!(
                        "assumption `{}` is not a hypothesis of the goal being shown",
                        self.ctx.pretty(a)
                    ),
                    Some(&target),
                    &chained,
                ));
            }
        }
        for p in &stated.hyps {
            let premise = Goal::from_prop(p);
            let mut hyps = target.hyps.clone();
            hyps.extend(premise.hyps);
            if !close_by_assumption(&Goal::new(hyps, premise.concl), &[]) {
                return Err(self.fail(
                    span,
                    format!(
                        "premise `{}` is not a hypothesis of the goal being shown",
                        self.ctx.pretty(p)
                    ),
                    Some(&target),
                    &chained,
                ));
            }
        }
        if let Err(mut d) = self.body(stated, chained, body) {
            let assumed = &self.frames.last().expect("proof block is open").assumptions;
            let open: Vec<String> = target
                .hyps
                .iter()
                .filter(|h| {
                    !assumed.contains(h) && !statement.node.premises_and_conclusion().0.contains(h)
                })
                .map(|h| format!("`{}`", self.ctx.pretty(h)))
                .collect();
            if !open.is_empty() {
                d.message
                    .push_str(&format!(" (hypotheses not assumed: {})", open.join(", ")));
                d.goal = Some(self.ctx.pretty(&target.to_prop()));
            }
            return Err(d);
        }
        let f = self.frame();
        f.pending.remove(index);
        f.this = vec![statement.node.clone()];
        Ok(())
    }

    fn candidates(
        &self,
        method: &Method,
        chained: &[MetaProp],
        goal: &Goal,
    ) -> Result<Vec<(&'c Theorem, Mode)>, Diagnostic> {
        let ctx = self.ctx;
        Ok(match &method.kind {
            MethodKind::This => Vec::new(),
            MethodKind::Standard => {
                let mut c = Vec::new();
                if !chained.is_empty() {
                    c.extend(ctx.elim_rules().map(|t| (t, Mode::Elim)));
                }
                c.extend(ctx.intro_rules().map(|t| (t, Mode::Intro)));
                c
            }
            MethodKind::Rule(name) => {
                let Some(thm) = ctx.theorem(name) else {
                    return Err(self.fail(
                        method.span,
                        format!("unknown rule `{name}`"),
                        Some(goal),
                        chained,
                    ));
                };
                if chained.is_empty() {
                    vec![(thm, Mode::Intro)]
                } else {
                    vec![(thm, Mode::Elim), (thm, Mode::Intro)]
                }
            }
        })
    }

    fn apply(rule: &Theorem, mode: Mode, chained: &[MetaProp], goal: &Goal) -> Option<Vec<Goal>> {
        match mode {
            Mode::Intro => apply_rule_intro(rule, goal).ok(),
            Mode::Elim => apply_rule_elim(rule, chained, goal).ok(),
        }
    }

    fn record(&mut self, method: &Method, rule: &Theorem) {
        if method.kind == MethodKind::Standard {
            self.choices.push(MethodChoice {
                span: method.span,
                style: method.style,
                rule: rule.name().to_string(),
            });
        }
    }

    fn tried(cands: &[(&Theorem, Mode)]) -> String {
        if cands.is_empty() {
            return "no rules available".into();
        }
        let names: Vec<&str> = cands.iter().map(|(t, _)| t.name()).collect();
        format!("tried {}", names.join(", "))
    }

    fn terminal(
        &mut self,
        method: &Method,
        goal: &Goal,
        chained: &[MetaProp],
    ) -> Result<(), Diagnostic> {
        let facts = self.closure_facts(chained);
        if method.kind == MethodKind::This {
            return if close_by_assumption(goal, &facts) {
                Ok(())
            } else {
                Err(self.fail(
                    method.span,
                    format!(
                        "{} failed: the goal is not an immediate consequence of the chained facts",
                        describe(method)
                    ),
                    Some(goal),
                    chained,
                ))
            };
        }
        let cands = self.candidates(method, chained, goal)?;
        for (rule, mode) in &cands {
            if let Some(residuals) = Self::apply(rule, *mode, chained, goal) {
                if residuals.iter().all(|r| close_by_assumption(r, &facts)) {
                    self.record(method, rule);
                    return Ok(());
                }
            }
        }
        Err(self.fail(
            method.span,
            format!(
                "{} failed: no rule closes the goal ({})",
                describe(method),
                Self::tried(&cands)
            ),
            Some(goal),
            chained,
        ))
    }

    fn opening(
        &mut self,
        method: &Method,
        goal: &Goal,
        chained: &[MetaProp],
    ) -> Result<Vec<Goal>, Diagnostic> {
        if method.kind == MethodKind::This {
            let facts = self.closure_facts(chained);
            return if close_by_assumption(goal, &facts) {
                Ok(Vec::new())
            } else {
                Err(self.fail(
                    method.span,
                    "`this` failed to close the goal",
                    Some(goal),
                    chained,
                ))
            };
        }
        let cands = self.candidates(method, chained, goal)?;
        for (rule, mode) in &cands {
            if let Some(mut residuals) = Self::apply(rule, *mode, chained, goal) {
                if *mode == Mode::Intro && !chained.is_empty() {
                    residuals.retain(|r| {
                        close_by_assumption(r, &[]) || !close_by_assumption(r, chained)
                    });
                }
                self.record(method, rule);
                return Ok(residuals);
            }
        }
        Err(self.fail(
            method.span,
            format!(
                "{} failed: no rule applies ({})",
                describe(method),
                Self::tried(&cands)
            ),
            Some(goal),
            chained,
        ))
    }
}
