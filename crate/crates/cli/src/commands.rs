//! Command implementations. Each command yields an [`Outcome`]: a JSON
//! report (the stable contract), a text rendering, and whether every check
//! passed.

use std::fmt::{self, Write as _};
use std::fs;
use std::path::{Path, PathBuf};

use mnewton::charcoeff::{coeffs_from_spectrum, newton_check, normalized_coeffs, CoeffVector};
use mnewton::forms::{
    binomial_identity_sum, build_form, positive_eigenvalue_count, psd_check, structure_checks,
    FormKind,
};
use mnewton::io::{form_to_csv, form_to_json, matrix_to_json, parse_matrix, parse_poly, parse_spectrum, spectrum_to_json};
use mnewton::linalg::poly_roots;
use mnewton::mclass::{classify, generate, GeneratorSpec};
use mnewton::niep::{screen, ConditionResult, ScreenParams, ScreeningReport};
use mnewton::sfunc::{
    expansion_from_table, feasible_genimm_params, genimm_from_table, pointwise_from_table,
    InequalityReport, MinorTable,
};
use mnewton::{Matrix, Spectrum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::{Cli, Command, Common, Export, Format, Source};

/// Why a run could not be carried out (exit status 2).
#[derive(Debug)]
pub enum CliError {
    Usage { field: String, reason: String },
    Read { flag: &'static str, path: PathBuf, reason: String },
    Core { context: String, source: mnewton::Error },
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage { field, reason } => write!(f, "invalid `{field}`: {reason}"),
            CliError::Read { flag, path, reason } => {
                write!(f, "cannot read `{flag}` {}: {reason}", path.display())
            }
            CliError::Core { context, source } => write!(f, "{context}: {source}"),
        }
    }
}

fn usage(field: &str, reason: impl Into<String>) -> CliError {
    CliError::Usage {
        field: field.into(),
        reason: reason.into(),
    }
}

fn core(context: impl fmt::Display) -> impl FnOnce(mnewton::Error) -> CliError {
    let context = context.to_string();
    move |source| CliError::Core { context, source }
}

pub enum Body {
    Report { json: Value, text: String },
    Raw { json: String, text: String },
}

pub struct Outcome {
    pub body: Body,
    pub pass: bool,
}

impl Outcome {
    fn report(json: Value, text: String, pass: bool) -> Self {
        Outcome {
            body: Body::Report { json, text },
            pass,
        }
    }

    fn raw(json: String, text: String) -> Self {
        Outcome {
            body: Body::Raw { json, text },
            pass: true,
        }
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = match (&self.body, format) {
            (Body::Report { json, .. }, Format::Json) => {
                serde_json::to_string_pretty(json).expect("report serializes")
            }
            (Body::Report { text, .. }, Format::Text) => text.clone(),
            (Body::Raw { json, .. }, Format::Json) => json.clone(),
            (Body::Raw { text, .. }, Format::Text) => text.clone(),
        };
        if !out.ends_with('\n') {
            out.push('\n');
        }
        out
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report serializes")
}

fn read(flag: &'static str, path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Read {
        flag,
        path: path.to_owned(),
        reason: e.to_string(),
    })
}

fn load_matrix(path: &Path) -> Result<Matrix, CliError> {
    parse_matrix(&read("--input", path)?).map_err(core(path.display()))
}

fn load_spectrum(path: &Path) -> Result<Spectrum, CliError> {
    parse_spectrum(&read("--spectrum", path)?).map_err(core(path.display()))
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let common = &cli.common;
    if !(common.tol > 0.0 && common.tol.is_finite()) {
        return Err(usage("tol", "tolerance must be a positive finite real"));
    }
    match &cli.command {
        Command::Classify { input } => run_classify(common, input),
        Command::Coeffs { source } => run_coeffs(source),
        Command::Newton { source } => run_newton(common, source),
        Command::Sfunc { input, m, k } => run_sfunc(common, input, *m, *k),
        Command::Forms { n, m, kind, export } => run_forms(common, *n, *m, *kind, *export),
        Command::Identity { n, m } => run_identity(*n, *m),
        Command::NiepScreen {
            spectrum,
            jll_bound,
            moment_k,
        } => {
            let params = ScreenParams {
                moment_k: *moment_k,
                jll_bound: *jll_bound,
                tol: common.tol,
            };
            run_screen(spectrum, &params)
        }
        Command::Gen { kind, n, seed, margin } => {
            let spec = GeneratorSpec {
                kind: *kind,
                n: *n,
                seed: *seed,
                margin: *margin,
            };
            let a = generate(&spec).map_err(core("gen"))?;
            Ok(Outcome::raw(matrix_to_json(&a), matrix_text(&a)))
        }
        Command::Roots { input } => {
            let p = parse_poly(&read("--input", input)?).map_err(core(input.display()))?;
            let roots = poly_roots(&p).map_err(core("roots"))?;
            let s = Spectrum::new(roots).map_err(core("roots"))?;
            let text = s
                .values()
                .iter()
                .map(|z| format!("{} {}\n", z.re, z.im))
                .collect();
            Ok(Outcome::raw(spectrum_to_json(&s), text))
        }
    }
}

fn matrix_text(a: &Matrix) -> String {
    a.to_rows()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            cells.join(" ") + "\n"
        })
        .collect()
}

fn run_classify(common: &Common, input: &Path) -> Result<Outcome, CliError> {
    let a = load_matrix(input)?;
    let r = classify(&a, common.tol);
    let json = json!({
        "command": "classify",
        "n": a.order(),
        "report": to_value(&r),
        "pass": true,
    });
    let text = format!(
        "Z-matrix: {}\nP-matrix: {:?}\nM-class: {:?}\ninverse M: {}\n",
        r.is_z, r.is_p, r.m_class, r.is_inverse_m
    );
    Ok(Outcome::report(json, text, true))
}

fn load_coeffs(source: &Source) -> Result<(&'static str, CoeffVector), CliError> {
    match (&source.input, &source.spectrum) {
        (Some(path), _) => Ok(("matrix", normalized_coeffs(&load_matrix(path)?))),
        (None, Some(path)) => {
            let s = load_spectrum(path)?;
            Ok(("spectrum", coeffs_from_spectrum(&s).map_err(core(path.display()))?))
        }
        (None, None) => Err(usage("input", "one of --input or --spectrum is required")),
    }
}

fn run_coeffs(source: &Source) -> Result<Outcome, CliError> {
    let (from, c) = load_coeffs(source)?;
    let json = json!({"command": "coeffs", "source": from, "n": c.n, "c": c.c, "pass": true});
    let text = c
        .c
        .iter()
        .enumerate()
        .map(|(j, x)| format!("c_{j} = {x}\n"))
        .collect();
    Ok(Outcome::report(json, text, true))
}

fn run_newton(common: &Common, source: &Source) -> Result<Outcome, CliError> {
    let (from, c) = load_coeffs(source)?;
    let r = newton_check(&c, common.tol);
    let json = json!({
        "command": "newton",
        "source": from,
        "n": c.n,
        "c": c.c,
        "report": to_value(&r),
        "pass": r.holds,
    });
    let mut text = String::new();
    for (i, mu) in r.margins.iter().enumerate() {
        let _ = writeln!(text, "mu_{} = {mu}", i + 1);
    }
    let _ = writeln!(
        text,
        "{} (worst j = {})",
        if r.holds { "holds" } else { "VIOLATED" },
        r.worst_j.map_or("-".into(), |j| j.to_string())
    );
    Ok(Outcome::report(json, text, r.holds))
}

/// `margin / scale`, with zero-scale reports counted as exact.
fn normalized(r: &InequalityReport) -> f64 {
    if r.scale > 0.0 {
        r.margin / r.scale
    } else {
        0.0
    }
}

fn worst_of(reports: &[InequalityReport]) -> Option<Value> {
    reports
        .iter()
        .min_by(|a, b| normalized(a).total_cmp(&normalized(b)))
        .map(|r| json!({"m": r.m, "k": r.k, "margin": r.margin, "relative_margin": normalized(r)}))
}

fn run_sfunc(common: &Common, input: &Path, m: Option<usize>, k: Option<usize>) -> Result<Outcome, CliError> {
    let a = load_matrix(input)?;
    let n = a.order();
    let table = MinorTable::new(&a, common.override_caps).map_err(core("sfunc"))?;
    let params: Vec<(usize, usize)> = match (m, k) {
        (Some(m), Some(k)) => vec![(m, k)],
        _ => feasible_genimm_params(n)
            .into_iter()
            .filter(|&(pm, pk)| m.is_none_or(|m| m == pm) && k.is_none_or(|k| k == pk))
            .collect(),
    };
    if params.is_empty() {
        let field = if m.is_some() { "m" } else { "k" };
        return Err(usage(field, format!("no feasible (m, k) with 1 ≤ m < n = {n}, k < m, 2m − k ≤ n")));
    }
    let mut genimm = Vec::new();
    let mut pointwise = Vec::new();
    for &(pm, pk) in &params {
        genimm.push(genimm_from_table(&table, pm, pk, common.tol).map_err(core("sfunc"))?);
        pointwise.push(pointwise_from_table(&table, pm, pk, common.tol).map_err(core("sfunc"))?);
    }
    let mut ms: Vec<usize> = params.iter().map(|&(pm, _)| pm).collect();
    ms.dedup();
    let expansion = ms
        .iter()
        .map(|&pm| expansion_from_table(&a, &table, pm, common.tol))
        .collect::<Result<Vec<_>, _>>()
        .map_err(core("sfunc"))?;

    let pass = genimm.iter().chain(&pointwise).all(|r| r.holds) && expansion.iter().all(|r| r.holds);
    let json = json!({
        "command": "sfunc",
        "n": n,
        "genimm": to_value(&genimm),
        "pointwise": to_value(&pointwise),
        "expansion": to_value(&expansion),
        "worst_genimm": worst_of(&genimm),
        "worst_pointwise": worst_of(&pointwise),
        "pass": pass,
    });
    let mut text = String::new();
    for (g, p) in genimm.iter().zip(&pointwise) {
        let _ = writeln!(
            text,
            "m={} k={}: normalized margin {} [{}], pointwise margin {} [{}]",
            g.m,
            g.k,
            g.margin,
            if g.holds { "ok" } else { "FAIL" },
            p.margin,
            if p.holds { "ok" } else { "FAIL" },
        );
    }
    for e in &expansion {
        let _ = writeln!(
            text,
            "m={}: expansion rel. errors {:e}, {:e} [{}]",
            e.m,
            e.square_rel_err,
            e.product_rel_err,
            if e.holds { "ok" } else { "FAIL" }
        );
    }
    Ok(Outcome::report(json, text, pass))
}

fn run_forms(common: &Common, n: usize, m: usize, kind: FormKind, export: Option<Export>) -> Result<Outcome, CliError> {
    let form = build_form(n, m, kind, common.override_caps).map_err(core("forms"))?;
    match export {
        Some(Export::Csv) => {
            let csv = form_to_csv(&form);
            return Ok(Outcome::raw(csv.clone(), csv));
        }
        Some(Export::Json) => {
            let js = form_to_json(&form);
            return Ok(Outcome::raw(js.clone(), js));
        }
        None => {}
    }
    let psd = psd_check(&form, common.tol).map_err(core("forms"))?;
    let positive = positive_eigenvalue_count(&form, common.tol).map_err(core("forms"))?;
    let structure = structure_checks(n, m, common.tol, common.override_caps).map_err(core("forms"))?;
    let pass = structure.holds && (kind != FormKind::Psi || psd.psd);
    let json = json!({
        "command": "forms",
        "n": n,
        "m": m,
        "kind": to_value(&kind),
        "dim": form.dim(),
        "psd": to_value(&psd),
        "positive_eigenvalues": positive,
        "structure": to_value(&structure),
        "pass": pass,
    });
    let text = format!(
        "{kind:?} on {m}-subsets of {n} (dimension {}): min eigenvalue {}, psd {}, {positive} positive eigenvalue(s)\nstructure identities: {}\n",
        form.dim(),
        psd.min_eigenvalue,
        psd.psd,
        if structure.holds { "hold" } else { "FAIL" },
    );
    Ok(Outcome::report(json, text, pass))
}

fn run_identity(n: usize, m: Option<usize>) -> Result<Outcome, CliError> {
    let ms: Vec<usize> = match m {
        Some(m) => vec![m],
        None => (1..n).collect(),
    };
    if ms.is_empty() {
        return Err(usage("n", "need n ≥ 2"));
    }
    let mut sums = Vec::new();
    for &m in &ms {
        let s = binomial_identity_sum(n, m).map_err(core("identity"))?;
        sums.push((m, s.to_string()));
    }
    let pass = sums.iter().all(|(_, s)| s == "0");
    let json = match m {
        Some(m) => json!({"command": "identity", "n": n, "m": m, "sum": sums[0].1, "pass": pass}),
        None => json!({
            "command": "identity",
            "n": n,
            "sums": sums.iter().map(|(m, s)| json!({"m": m, "sum": s})).collect::<Vec<_>>(),
            "pass": pass,
        }),
    };
    let text = sums.iter().map(|(m, s)| format!("n={n} m={m}: {s}\n")).collect();
    Ok(Outcome::report(json, text, pass))
}

fn condition_text(name: &str, c: &ConditionResult) -> String {
    let mut line = format!("  {name}: {:?}", c.status);
    if let Some(margin) = c.margin {
        let _ = write!(line, ", margin {margin}");
    }
    if let Some(exact) = c.exact_margin {
        let _ = write!(line, " (exact {exact})");
    }
    if let Some(w) = &c.witness {
        let _ = write!(line, ", witness {w:?}");
    }
    if let Some(note) = &c.note {
        let _ = write!(line, " [{note}]");
    }
    line + "\n"
}

fn screening_text(label: &str, r: &ScreeningReport) -> String {
    let mut text = format!("{label} (n = {})\n", r.n);
    for (name, c) in r.conditions() {
        text.push_str(&condition_text(name, c));
    }
    text
}

fn screen_file(path: &Path, params: &ScreenParams) -> Result<ScreeningReport, CliError> {
    let s = load_spectrum(path)?;
    screen(&s, params).map_err(core(path.display()))
}

fn run_screen(path: &Path, params: &ScreenParams) -> Result<Outcome, CliError> {
    if !path.is_dir() {
        let r = screen_file(path, params)?;
        let pass = r.all_pass();
        let json = json!({
            "command": "niep-screen",
            "spectrum": path.display().to_string(),
            "report": to_value(&r),
            "pass": pass,
        });
        return Ok(Outcome::report(json, screening_text(&path.display().to_string(), &r), pass));
    }

    let entries = fs::read_dir(path).map_err(|e| CliError::Read {
        flag: "--spectrum",
        path: path.to_owned(),
        reason: e.to_string(),
    })?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
    if files.is_empty() {
        return Err(usage("spectrum", format!("no *.json files in {}", path.display())));
    }

    // results come back in input order, so the report is independent of scheduling
    let results: Vec<Result<ScreeningReport, CliError>> =
        files.par_iter().map(|f| screen_file(f, params)).collect();
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut pass = true;
    for (file, result) in files.iter().zip(results) {
        let r = result?;
        let name = file.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        pass &= r.all_pass();
        text.push_str(&screening_text(&name, &r));
        rows.push(json!({"file": name, "report": to_value(&r), "pass": r.all_pass()}));
    }
    let json = json!({"command": "niep-screen", "results": rows, "pass": pass});
    Ok(Outcome::report(json, text, pass))
}
