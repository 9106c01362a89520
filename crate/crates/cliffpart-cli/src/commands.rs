use cliffpart::dense::rel_diff;
use cliffpart::gca::{trace_theorem, trace_word_matrix, trace_word_normal_form, AlgebraSignature};
use cliffpart::potts::{
    brute_force_partition, closed_form_partition, decomposed_partition, multisum_partition,
    transfer_partition, Method, PartitionResult,
};
use cliffpart::tolerances;
use num_complex::Complex64;

use crate::config::{MethodSelector, RunConfig};
use crate::report::{
    Deviation, Environment, MethodRecord, PartitionReport, Skipped, TraceEvaluation, TraceReport,
};
use crate::CliError;

fn run_method(method: Method, cfg: &RunConfig) -> cliffpart::Result<PartitionResult> {
    let model = cfg.model.model().map_err(|e| cliffpart::Error::InvalidInput(e.to_string()))?;
    let guards = cfg.guards.to_guards();
    match method {
        Method::Brute => brute_force_partition(&model, &guards),
        Method::Transfer => transfer_partition(&model, &guards),
        Method::Decomposed => decomposed_partition(&model, &guards),
        Method::Multisum => multisum_partition(&model, &guards),
        Method::ClosedForm => closed_form_partition(&model),
    }
}

/// Runs the selected routes and compares every pair.
///
/// With a single method any error is returned; under `all` a route that
/// cannot run is listed as skipped.
pub fn partition(cfg: &RunConfig) -> Result<PartitionReport, CliError> {
    cfg.model.model()?;
    let mut results = Vec::new();
    let mut skipped = Vec::new();
    for method in cfg.method.methods() {
        match run_method(method, cfg) {
            Ok(r) => results.push(r),
            Err(e) if cfg.method == MethodSelector::All => skipped.push(Skipped {
                method: method.as_str().to_string(),
                reason: e.to_string(),
            }),
            Err(e) => return Err(e.into()),
        }
    }
    let mut deviations = Vec::new();
    for (i, x) in results.iter().enumerate() {
        for y in &results[i + 1..] {
            let tolerance = if x.method == Method::ClosedForm || y.method == Method::ClosedForm {
                cfg.tolerances.closed_form_rel
            } else {
                cfg.tolerances.pipeline_rel
            };
            let relative = rel_diff(x.z, y.z);
            deviations.push(Deviation {
                left: x.method.as_str().to_string(),
                right: y.method.as_str().to_string(),
                relative,
                tolerance,
                pass: relative < tolerance,
            });
        }
    }
    let max_imaginary_rel = results
        .iter()
        .map(|r| if r.z.norm() > 0.0 { r.z.im.abs() / r.z.norm() } else { 0.0 })
        .fold(0.0, f64::max);
    let passed = deviations.iter().all(|d| d.pass) && max_imaginary_rel < cfg.tolerances.pipeline_rel;
    Ok(PartitionReport {
        model: cfg.model,
        method: cfg.method.as_str().to_string(),
        results: results
            .iter()
            .map(|r| MethodRecord {
                method: r.method.as_str().to_string(),
                z_re: r.z.re,
                z_im: r.z.im,
                terms: u64::try_from(r.terms).unwrap_or(u64::MAX),
                wall_ms: cfg.timings.then_some(r.wall_time.as_secs_f64() * 1e3),
            })
            .collect(),
        skipped,
        deviations,
        max_imaginary_rel,
        passed,
        environment: Environment::from_config(cfg),
    })
}

/// Evaluates one word three ways.
pub fn trace(cfg: &RunConfig, labels: &[String]) -> Result<TraceReport, CliError> {
    let guards = cfg.guards.to_guards();
    let sig = AlgebraSignature::new(cfg.model.n, cfg.model.p, &guards)?;
    let word = labels
        .iter()
        .map(|l| sig.parse_label(l))
        .collect::<cliffpart::Result<Vec<usize>>>()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let normal = trace_word_normal_form(&sig, &word)?;
    let theorem = trace_theorem(&sig, &word, &guards)?;
    let matrix = trace_word_matrix(&sig, &word)?;
    let exact = |route: &str, t: cliffpart::gca::TraceValue| {
        let z = t.to_complex();
        TraceEvaluation { route: route.into(), phase: Some(t.to_string()), re: z.re, im: z.im }
    };
    let evaluations = vec![
        exact("normal-form", normal),
        exact("theorem", theorem),
        TraceEvaluation { route: "matrix".into(), phase: None, re: matrix.re, im: matrix.im },
    ];
    let values: Vec<Complex64> = evaluations.iter().map(|e| Complex64::new(e.re, e.im)).collect();
    let max_deviation = values
        .iter()
        .flat_map(|x| values.iter().map(move |y| (x - y).norm()))
        .fold(0.0, f64::max);
    Ok(TraceReport {
        n: sig.n,
        p: sig.p,
        word: labels.to_vec(),
        evaluations,
        max_deviation,
        agree: normal == theorem && max_deviation < tolerances::FORMULA,
    })
}
