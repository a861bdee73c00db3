use std::fmt;
use std::path::Path;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;
use serde_json::json;

use skewpart::catalog::{eulerian_multigraphs, named};
use skewpart::connection::{
    catalan_rank, connection_submatrix, matching_matrix, verify_fragment_gram, verify_skew_relation,
};
use skewpart::martin::{
    circuit_partition_polynomial, eval_negative_even, eval_positive, evaluate_checked,
};
use skewpart::matchdir::{gram_check, v0_annihilation, verify_sign_identity};
use skewpart::{
    build_double_factorial_model, build_martin_model, partition_function, skew_partition,
    verify_invariance, CheckReport, Error, Fragment, InvarianceOptions, Limits, Multigraph,
    Rational, SkewTensorQ,
};

use crate::{Format, ModelArgs, VerifyCommand};

pub struct Context {
    pub limits: Limits,
    pub format: Format,
    pub seed: u64,
}

#[derive(Debug)]
pub enum Failure {
    Check(String),
    Input(String),
    Bound(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Input(_) => 2,
            Failure::Bound(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Check(m) | Failure::Input(m) | Failure::Bound(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLarge { .. } => Failure::Bound(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(name: &str) -> Result<Multigraph, Failure> {
    let path = Path::new(name);
    if path.is_file() {
        return Ok(Multigraph::parse(&read(path)?)?);
    }
    named(name).ok_or_else(|| {
        Failure::Input(format!(
            "`{name}` is neither a readable file nor a built-in graph"
        ))
    })
}

fn load_model(model: &ModelArgs) -> Result<SkewTensorQ, Failure> {
    match (&model.martin, &model.tensor) {
        (Some(0), _) => Err(Failure::Input("ℓ must be positive".into())),
        (Some(ell), _) => Ok(build_martin_model(*ell)),
        (None, Some(path)) => Ok(SkewTensorQ::parse(&read(path)?)?),
        (None, None) => Err(Failure::Input("give --martin or --tensor".into())),
    }
}

fn emit(ctx: &Context, text: impl fmt::Display, value: serde_json::Value) {
    match ctx.format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{value}"),
    }
}

#[derive(Serialize)]
struct ReportJson<'a> {
    check: &'a str,
    instances: u64,
    failures: &'a [String],
    elapsed_ms: u128,
}

fn finish(ctx: &Context, report: CheckReport, started: Instant) -> Outcome {
    let elapsed_ms = started.elapsed().as_millis();
    match ctx.format {
        Format::Json => {
            let out = ReportJson {
                check: &report.check,
                instances: report.instances,
                failures: &report.failures,
                elapsed_ms,
            };
            println!(
                "{}",
                serde_json::to_string(&out).expect("report serializes")
            );
        }
        Format::Text => {
            if report.passed() {
                println!(
                    "PASS {}: {} instances ({elapsed_ms} ms)",
                    report.check, report.instances
                );
            } else {
                println!(
                    "FAIL {}: {} of {} instances failed ({elapsed_ms} ms)",
                    report.check,
                    report.failures.len(),
                    report.instances
                );
                for f in &report.failures {
                    println!("  {f}");
                }
            }
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} failed", report.check)))
    }
}

pub fn skew_eval(ctx: &Context, graph: &str, model: &ModelArgs) -> Outcome {
    let g = load_graph(graph)?;
    let h = load_model(model)?;
    let value = skew_partition(&h, &g, &ctx.limits)?;
    emit(ctx, &value, json!({ "value": value.to_string() }));
    Ok(())
}

pub fn martin(ctx: &Context, graph: &str, poly: bool, at: Option<&str>) -> Outcome {
    let g = load_graph(graph)?;
    if poly {
        let p = circuit_partition_polynomial(&g, &ctx.limits)?;
        let coeffs: Vec<String> = p.coeffs().iter().map(BigInt::to_string).collect();
        emit(ctx, &p, json!({ "coefficients": coeffs }));
        return Ok(());
    }
    let raw = at.ok_or_else(|| Failure::Input("give --poly or --at".into()))?;
    let x: BigInt = raw
        .parse()
        .map_err(|_| Failure::Input(format!("--at expects an integer, got `{raw}`")))?;
    let (by_transitions, closed) = evaluate_checked(&g, &x, &ctx.limits)?;
    if let Some(c) = &closed {
        if *c != by_transitions {
            return Err(Failure::Check(format!(
                "J({x}) disagrees: transition systems give {by_transitions}, the closed form gives {c}"
            )));
        }
    }
    emit(
        ctx,
        &by_transitions,
        json!({
            "x": x.to_string(),
            "value": by_transitions.to_string(),
            "cross_checked": closed.is_some(),
        }),
    );
    Ok(())
}

pub fn verify(ctx: &Context, check: VerifyCommand) -> Outcome {
    let started = Instant::now();
    let lim = &ctx.limits;
    let report = match check {
        VerifyCommand::Invariance {
            model,
            graph,
            budget,
        } => {
            let h = load_model(&model)?;
            let g = load_graph(&graph)?;
            let opts = InvarianceOptions {
                budget,
                seed: ctx.seed,
                ..InvarianceOptions::default()
            };
            verify_invariance(&h, &g, &opts, lim)?
        }
        VerifyCommand::Relation { model, graph, u } => {
            let h = load_model(&model)?;
            let g = load_graph(&graph)?;
            let f = |g: &Multigraph| skew_partition(&h, g, lim);
            verify_skew_relation(&f, &g, &u, lim)?
        }
        VerifyCommand::Gram { ell, m, fragments } => match fragments {
            Some(path) => {
                let frags = Fragment::parse_many(&read(&path)?)?;
                verify_fragment_gram(&build_martin_model::<Rational>(ell), &frags, lim)?
            }
            None => gram_check::<Rational>(ell, m, lim)?,
        },
        VerifyCommand::V0 { ell, m } => v0_annihilation::<Rational>(ell, m, lim)?,
        VerifyCommand::Signid { m } => verify_sign_identity(m, lim)?,
        VerifyCommand::Agree { max_edges } => agree(max_edges, lim)?,
    };
    finish(ctx, report, started)
}

/// Transition systems, the closed forms and both partition functions must
/// give the same J(G, x) wherever they apply.
fn agree(max_edges: usize, lim: &Limits) -> Result<CheckReport, Failure> {
    let mut report = CheckReport::new("agree");
    for g in eulerian_multigraphs(max_edges) {
        let poly = circuit_partition_polynomial(&g, lim)?;
        for k in 1..=3usize {
            let x = BigInt::from(k);
            let a = poly.eval(&x);
            let b = eval_positive(&g, k, lim)?;
            let c = partition_function(&build_double_factorial_model::<Rational>(k), &g, lim)?;
            let ok = a == b && Rational::from_integer(a.clone()) == c;
            report.record(ok, || format!("{g:?} at {k}: {a}, {b}, {c}"));
        }
        for ell in 1..=2usize {
            let x = BigInt::from(-2 * ell as i64);
            let a = poly.eval(&x);
            let b = eval_negative_even(&g, ell, lim)?;
            let c = skew_partition(&build_martin_model::<Rational>(ell), &g, lim)?;
            let ok = a == b && Rational::from_integer(a.clone()) == c;
            report.record(ok, || format!("{g:?} at {x}: {a}, {b}, {c}"));
        }
    }
    Ok(report)
}

fn rank_output(ctx: &Context, summary: String, value: serde_json::Value, ok: bool) -> Outcome {
    emit(ctx, &summary, value);
    if ok {
        Ok(())
    } else {
        Err(Failure::Check(summary))
    }
}

pub fn rank_matching(ctx: &Context, b: i64, k: i64) -> Outcome {
    let k = usize::try_from(k).map_err(|_| Failure::Input("k must be nonnegative".into()))?;
    let matrix = matching_matrix::<Rational>(b, k, &ctx.limits)?;
    let cert = matrix.rank_certificate();
    // the τ vectors span at most (2ℓ)^{2k} dimensions when b = -2ℓ
    let bound = (b < 0 && b % 2 == 0).then(|| BigUint::from(b.unsigned_abs()).pow(2 * k as u32));
    let catalan = (b == -2).then(|| catalan_rank(k));
    let within = bound
        .as_ref()
        .is_none_or(|bd| BigUint::from(cert.rank) <= *bd);
    let exact = catalan
        .as_ref()
        .is_none_or(|c| BigUint::from(cert.rank) == *c);
    let mut summary = format!("rank {} of {}x{}", cert.rank, cert.rows, cert.cols);
    if let Some(bd) = &bound {
        summary += &format!(", bound {bd}");
    }
    if let Some(c) = &catalan {
        summary += &format!(", Catalan {c}");
    }
    let value = json!({
        "matrix": "matching",
        "b": b,
        "k": k,
        "rows": cert.rows,
        "cols": cert.cols,
        "rank": cert.rank,
        "pivot_rows": cert.pivot_rows,
        "pivot_cols": cert.pivot_cols,
        "bound": bound.map(|x| x.to_string()),
        "catalan": catalan.map(|x| x.to_string()),
        "within_bound": within && exact,
    });
    rank_output(ctx, summary, value, within && exact)
}

pub fn rank_connection(ctx: &Context, path: &Path, ell: usize) -> Outcome {
    if ell == 0 {
        return Err(Failure::Input("ℓ must be positive".into()));
    }
    let fragments = Fragment::parse_many(&read(path)?)?;
    if fragments.is_empty() {
        return Err(Failure::Input(format!("{}: no fragments", path.display())));
    }
    let h = build_martin_model::<Rational>(ell);
    let lim = &ctx.limits;
    let matrix = connection_submatrix(|g: &Multigraph| skew_partition(&h, g, lim), &fragments)?;
    let cert = matrix.rank_certificate();
    let open_ends = fragments[0].k();
    let bound = BigUint::from(2 * ell).pow(open_ends as u32);
    let ok = BigUint::from(cert.rank) <= bound;
    let summary = format!(
        "rank {} of {}x{} ({} open ends), bound {bound}",
        cert.rank, cert.rows, cert.cols, open_ends
    );
    let value = json!({
        "matrix": "connection",
        "ell": ell,
        "open_ends": open_ends,
        "rows": cert.rows,
        "cols": cert.cols,
        "rank": cert.rank,
        "pivot_rows": cert.pivot_rows,
        "pivot_cols": cert.pivot_cols,
        "bound": bound.to_string(),
        "within_bound": ok,
    });
    rank_output(ctx, summary, value, ok)
}
