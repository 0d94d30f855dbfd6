//! Command dispatch, built-in corpora, and the law-verification harness.
//!
//! Exit-code contract of the binary built on this module: 0 success,
//! 2 parse error, 3 degenerate-sampling failure, 4 law-suite violation,
//! 1 other errors.

use crate::catlin::{build_cylinder, catlin_q_estimate, catlin_q_hypersurface, slice_cylinder,
    tau_generic, tau_slice, CylinderVariety};
use crate::contact::{q_positivity, CurveGerm, LinearSlice};
use crate::error::Error;
use crate::ideal::IdealPresentation;
use crate::linalg::Matrix;
use crate::local::{generic_multiplicity, standard_basis, Limits};
use crate::parse::{parse_document, parse_matrix, DocBody, ParseError, SourceDocument};
use crate::poly::{exponent_degree, PolyC};
use crate::report::{envelope, generic_report_text, value_text};
use crate::sampler::SliceSampler;
use crate::scalar::GaussianRational;
use crate::series::UniPoly;
use crate::types::{delta1_bounds, deltaq_sampled_inf, tilde_deltaq};
use crate::value::ExtendedRational;
use num::rational::BigRational;
use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt;
use std::path::{Path, PathBuf};

// ---------------------------------------------------------------------------
// configuration and commands

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Clone, Debug, Serialize)]
pub struct SessionConfig {
    pub seed: u64,
    pub samples: usize,
    pub truncation: usize,
    pub budget: u32,
    pub coefficient_range: i64,
    pub format: OutputFormat,
}

impl Default for SessionConfig {
    fn default() -> Self {
        SessionConfig {
            seed: 1729,
            samples: 100,
            truncation: 64,
            budget: 8,
            coefficient_range: 10_000,
            format: OutputFormat::Text,
        }
    }
}

impl SessionConfig {
    pub fn sampler(&self, q: usize) -> SliceSampler {
        SliceSampler::new(self.seed, self.samples, self.coefficient_range, q)
    }
}

#[derive(Clone, Debug)]
pub enum Command {
    Mult {
        input: PathBuf,
    },
    Delta1 {
        input: PathBuf,
    },
    DeltaQ {
        input: PathBuf,
        q: usize,
    },
    TDeltaQ {
        input: PathBuf,
        q: usize,
    },
    CatlinQ {
        input: PathBuf,
        q: usize,
    },
    Cylinder {
        curve: PathBuf,
        directrix: PathBuf,
        q: usize,
    },
    Slice {
        curve: PathBuf,
        directrix: PathBuf,
        q: usize,
        forms: PathBuf,
        ideal: Option<PathBuf>,
    },
    QPos {
        hypersurface: PathBuf,
        curve: PathBuf,
        forms: PathBuf,
    },
    Verify {
        corpus: String,
    },
}

#[derive(Debug)]
pub enum RunError {
    Io(PathBuf, std::io::Error),
    Parse(PathBuf, ParseError),
    BadInput(String),
    Engine(Error),
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Io(p, e) => write!(f, "cannot read {}: {}", p.display(), e),
            RunError::Parse(p, e) => write!(f, "{}: {}", p.display(), e),
            RunError::BadInput(m) => write!(f, "{}", m),
            RunError::Engine(e) => write!(f, "{}", e),
        }
    }
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Engine(e)
    }
}

impl RunError {
    /// Exit-code contract: 2 parse, 3 degenerate sampling, 1 other.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Parse(..) => 2,
            RunError::Engine(Error::AllSamplesDegenerate { .. })
            | RunError::Engine(Error::DegenerateSlice) => 3,
            _ => 1,
        }
    }

    pub fn machine_code(&self) -> &'static str {
        match self {
            RunError::Io(..) => "io",
            RunError::Parse(..) => "parse",
            RunError::BadInput(..) => "bad-input",
            RunError::Engine(Error::AllSamplesDegenerate { .. }) => "all-samples-degenerate",
            RunError::Engine(Error::DegenerateSlice) => "degenerate-slice",
            RunError::Engine(Error::BudgetExceeded { .. }) => "budget-exceeded",
            RunError::Engine(..) => "engine",
        }
    }
}

pub struct RunOutput {
    pub text: String,
    pub json: Value,
    /// Set when a verify run had at least one failing law instance.
    pub verify_failed: bool,
}

// ---------------------------------------------------------------------------
// input loading

fn load_document(path: &Path) -> Result<SourceDocument, RunError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| RunError::Io(path.to_path_buf(), e))?;
    parse_document(&text).map_err(|e| RunError::Parse(path.to_path_buf(), e))
}

fn load_ideal(path: &Path) -> Result<(SourceDocument, IdealPresentation), RunError> {
    let doc = load_document(path)?;
    match &doc.body {
        DocBody::Ideal { generators } => {
            let ideal = IdealPresentation::new(
                doc.variables.len(),
                generators.clone(),
                doc.base_point.clone(),
            )?;
            Ok((doc, ideal))
        }
        _ => Err(RunError::BadInput(format!(
            "{}: expected an ideal document, found a {}",
            path.display(),
            doc.kind()
        ))),
    }
}

fn load_curve(path: &Path, truncation: usize) -> Result<CurveGerm, RunError> {
    let doc = load_document(path)?;
    match &doc.body {
        DocBody::Curve { components } => Ok(CurveGerm::from_polynomials(
            components.clone(),
            doc.base_point.clone(),
            truncation,
        )?),
        _ => Err(RunError::BadInput(format!(
            "{}: expected a curve document, found a {}",
            path.display(),
            doc.kind()
        ))),
    }
}

fn load_forms(path: &Path) -> Result<LinearSlice, RunError> {
    let doc = load_document(path)?;
    match &doc.body {
        DocBody::Ideal { generators } => Ok(LinearSlice::new(generators.clone())?),
        _ => Err(RunError::BadInput(format!(
            "{}: expected a file of linear forms, found a {}",
            path.display(),
            doc.kind()
        ))),
    }
}

fn load_directrix(path: &Path) -> Result<Matrix, RunError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| RunError::Io(path.to_path_buf(), e))?;
    let rows = parse_matrix(&text).map_err(|e| RunError::Parse(path.to_path_buf(), e))?;
    // rows of the file are the directrix basis vectors; columns of the
    // matrix passed to the cylinder builder
    let n = rows[0].len();
    let k = rows.len();
    let mut m = Matrix::zeros(n, k);
    for (c, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            m.set(j, c, v.clone());
        }
    }
    Ok(m)
}

// ---------------------------------------------------------------------------
// dispatch

pub fn run(command: &Command, config: &SessionConfig) -> Result<RunOutput, RunError> {
    match command {
        Command::Mult { input } => run_mult(input, config),
        Command::Delta1 { input } => run_delta1(input, config),
        Command::DeltaQ { input, q } => run_qtype(input, *q, config, false),
        Command::TDeltaQ { input, q } => run_qtype(input, *q, config, true),
        Command::CatlinQ { input, q } => run_catlinq(input, *q, config),
        Command::Cylinder {
            curve,
            directrix,
            q,
        } => run_cylinder(curve, directrix, *q, config),
        Command::Slice {
            curve,
            directrix,
            q,
            forms,
            ideal,
        } => run_slice(curve, directrix, *q, forms, ideal.as_deref(), config),
        Command::QPos {
            hypersurface,
            curve,
            forms,
        } => run_qpos(hypersurface, curve, forms, config),
        Command::Verify { corpus } => run_verify(corpus, config),
    }
}

fn poly_strings(polys: &[PolyC], names: &[String]) -> Vec<String> {
    polys.iter().map(|p| p.display_with(names).to_string()).collect()
}

fn run_mult(input: &Path, config: &SessionConfig) -> Result<RunOutput, RunError> {
    let (doc, ideal) = load_ideal(input)?;
    let sb = standard_basis(&ideal, &Limits::default())?;
    let staircase = sb.staircase(ideal.nvars());
    let value = match &staircase {
        Some(s) => ExtendedRational::finite_int(s.len() as u64),
        None => ExtendedRational::Infinite,
    };
    let json = envelope(
        "mult",
        config,
        json!({
            "multiplicity": value,
            "zero_dimensional": staircase.is_some(),
            "standard_basis": poly_strings(&sb.basis, &doc.variables),
            "leading_exponents": sb.leading_exponents,
            "order": sb.order_spec,
        }),
    );
    let mut text = format!("multiplicity: {}\n", value_text(&value));
    text.push_str(&format!(
        "standard basis ({} elements, {} order):\n",
        sb.basis.len(),
        sb.order_spec
    ));
    for p in &sb.basis {
        text.push_str(&format!("  {}\n", p.display_with(&doc.variables)));
    }
    if let Some(s) = &staircase {
        text.push_str(&format!("staircase monomials: {}\n", s.len()));
    } else {
        text.push_str("ideal is not zero-dimensional\n");
    }
    Ok(RunOutput {
        text,
        json,
        verify_failed: false,
    })
}

fn run_delta1(input: &Path, config: &SessionConfig) -> Result<RunOutput, RunError> {
    let (doc, ideal) = load_ideal(input)?;
    let rep = delta1_bounds(&ideal, config.budget)?;
    let json = envelope("delta1", config, serde_json::to_value(&rep).unwrap());
    let mut text = String::new();
    if rep.exact {
        text.push_str(&format!("type (exact): {}\n", value_text(&rep.lower)));
    } else {
        text.push_str(&format!(
            "type bounds: {} <= type <= {}\n",
            value_text(&rep.lower),
            value_text(&rep.upper)
        ));
    }
    if let Some(m) = &rep.multiplicity {
        text.push_str(&format!("multiplicity: {}\n", value_text(m)));
    }
    text.push_str(&format!(
        "linear forms detected: {}\nprovenance: {:?} / {:?}\n",
        rep.linear_rank, rep.lower_provenance, rep.upper_provenance
    ));
    if let Some(w) = &rep.witness {
        let comps: Vec<String> = w
            .exact_components()
            .map(|cs| cs.iter().map(|c| c.to_string()).collect())
            .unwrap_or_default();
        text.push_str(&format!("witness curve: ({})\n", comps.join(", ")));
    }
    let _ = &doc;
    Ok(RunOutput {
        text,
        json,
        verify_failed: false,
    })
}

fn run_qtype(
    input: &Path,
    q: usize,
    config: &SessionConfig,
    generic_value: bool,
) -> Result<RunOutput, RunError> {
    let (_, ideal) = load_ideal(input)?;
    let sampler = config.sampler(q);
    let rep = if generic_value {
        tilde_deltaq(&ideal, &sampler, config.budget)?
    } else {
        deltaq_sampled_inf(&ideal, &sampler, config.budget)?
    };
    let (name, label, headline) = if generic_value {
        ("tdeltaq", "generic-value q-type", rep.modal_value.clone())
    } else {
        (
            "deltaq",
            "sampled-infimum q-type (upper estimate of the infimum)",
            rep.min_value.clone(),
        )
    };
    let json = envelope(
        name,
        config,
        json!({
            "q": q,
            "value": headline,
            "report": rep,
        }),
    );
    let text = format!(
        "{} (q = {}): {}\n{}",
        label,
        q,
        value_text(&headline),
        generic_report_text("sampling", &rep)
    );
    Ok(RunOutput {
        text,
        json,
        verify_failed: false,
    })
}

fn run_catlinq(input: &Path, q: usize, config: &SessionConfig) -> Result<RunOutput, RunError> {
    let doc = load_document(input)?;
    let sampler = config.sampler(q);
    let rep = match &doc.body {
        DocBody::Ideal { generators } => {
            let ideal = IdealPresentation::new(
                doc.variables.len(),
                generators.clone(),
                doc.base_point.clone(),
            )?;
            catlin_q_estimate(&ideal, &sampler, config.budget)?
        }
        DocBody::Hypersurface { .. } => {
            let hs = doc
                .to_hypersurface()
                .ok_or_else(|| RunError::BadInput("invalid hypersurface".into()))?;
            catlin_q_hypersurface(&hs, &sampler, config.budget)?
        }
        DocBody::Curve { .. } => {
            return Err(RunError::BadInput(format!(
                "{}: catlinq expects an ideal or hypersurface document",
                input.display()
            )))
        }
    };
    let json = envelope(
        "catlinq",
        config,
        json!({
            "q": q,
            "value": rep.modal_value,
            "report": rep,
        }),
    );
    let text = format!(
        "cylinder q-type estimate (q = {}): {}\n{}",
        q,
        value_text(&rep.modal_value),
        generic_report_text("sampling", &rep)
    );
    Ok(RunOutput {
        text,
        json,
        verify_failed: false,
    })
}

fn run_cylinder(
    curve: &Path,
    directrix: &Path,
    q: usize,
    config: &SessionConfig,
) -> Result<RunOutput, RunError> {
    let gamma = load_curve(curve, config.truncation)?;
    let u = load_directrix(directrix)?;
    let cyl = build_cylinder(&gamma, &u, q)?;
    let comps: Vec<String> = gamma
        .exact_components()
        .unwrap()
        .iter()
        .map(|c| c.to_string())
        .collect();
    let dir_rows: Vec<Vec<String>> = (0..u.ncols())
        .map(|c| u.column(c).iter().map(|v| v.to_string()).collect())
        .collect();
    let tangent: Vec<String> = gamma.tangent_direction().iter().map(|c| c.to_string()).collect();
    let json = envelope(
        "cylinder",
        config,
        json!({
            "q": q,
            "curve": comps,
            "directrix_basis": dir_rows,
            "tangent_direction": tangent,
            "valid": true,
        }),
    );
    let text = format!(
        "cylinder of dimension {} over ({})\ndirectrix basis rows: {:?}\ntangent direction: ({})\nparametrization: psi(t, u) = curve(t) + directrix * u\n",
        q,
        comps.join(", "),
        dir_rows,
        tangent.join(", ")
    );
    let _ = cyl;
    Ok(RunOutput {
        text,
        json,
        verify_failed: false,
    })
}

fn run_slice(
    curve: &Path,
    directrix: &Path,
    q: usize,
    forms: &Path,
    ideal: Option<&Path>,
    config: &SessionConfig,
) -> Result<RunOutput, RunError> {
    let gamma = load_curve(curve, config.truncation)?;
    let u = load_directrix(directrix)?;
    let cyl = build_cylinder(&gamma, &u, q)?;
    let slice = load_forms(forms)?;
    let cut = slice_cylinder(&cyl, &slice)?;
    let delta_comps: Vec<String> = cut
        .delta
        .exact_components()
        .unwrap()
        .iter()
        .map(|c| c.to_string())
        .collect();
    let params: Vec<String> = cut.parameters_solution.iter().map(|p| p.to_string()).collect();
    let mut result = json!({
        "q": q,
        "delta": delta_comps,
        "parameters_solution": params,
    });
    let mut text = format!(
        "intersection curve delta(t) = ({})\nsolved sweep parameters u(t) = ({})\n",
        delta_comps.join(", "),
        params.join(", ")
    );
    if let Some(ideal_path) = ideal {
        let (doc, ideal) = load_ideal(ideal_path)?;
        let tau = tau_slice(&ideal, &cyl, &slice)?;
        let gens = poly_strings(ideal.generators(), &doc.variables);
        text.push_str(&format!("tau(ideal) = {}\n", value_text(&tau.tau_ideal)));
        for (g, v) in gens.iter().zip(&tau.per_generator) {
            text.push_str(&format!("  contact with {}: {}\n", g, value_text(v)));
        }
        result["tau"] = serde_json::to_value(&tau).unwrap();
        result["generators"] = json!(gens);
    }
    Ok(RunOutput {
        text,
        json: envelope("slice", config, result),
        verify_failed: false,
    })
}

fn run_qpos(
    hypersurface: &Path,
    curve: &Path,
    forms: &Path,
    config: &SessionConfig,
) -> Result<RunOutput, RunError> {
    let doc = load_document(hypersurface)?;
    let hs = doc.to_hypersurface().ok_or_else(|| {
        RunError::BadInput(format!(
            "{}: expected a hypersurface document, found a {}",
            hypersurface.display(),
            doc.kind()
        ))
    })?;
    let phi = load_curve(curve, config.truncation)?;
    let slice = load_forms(forms)?;
    let rep = q_positivity(&phi, &hs, &slice)?;
    let json = envelope("qpos", config, serde_json::to_value(&rep).unwrap());
    let text = format!(
        "applicable: {}\npullback order: {}\nconditions: even order {}, balanced coefficient nonzero {}\nverdict: {:?}\n",
        rep.applicable,
        value_text(&rep.order),
        rep.condition_even,
        rep.condition_balanced,
        rep.verdict
    );
    Ok(RunOutput {
        text,
        json,
        verify_failed: false,
    })
}

// ---------------------------------------------------------------------------
// corpora

pub struct CorpusInstance {
    pub name: String,
    pub ideal: IdealPresentation,
    pub qs: Vec<usize>,
}

pub struct CylinderFixture {
    pub name: String,
    pub cylinder: CylinderVariety,
    pub ideal: IdealPresentation,
}

pub struct Corpus {
    pub name: &'static str,
    pub ideals: Vec<CorpusInstance>,
    pub cylinders: Vec<CylinderFixture>,
}

fn p(src: &str, vars: &[&str]) -> PolyC {
    crate::parse::parse_poly(src, vars).expect("corpus polynomial parses")
}

fn inst(name: &str, vars: &[&str], gens: &[&str], qs: &[usize]) -> CorpusInstance {
    let polys: Vec<PolyC> = gens.iter().map(|g| p(g, vars)).collect();
    CorpusInstance {
        name: name.to_string(),
        ideal: IdealPresentation::origin(vars.len(), polys).expect("corpus ideal is proper"),
        qs: qs.to_vec(),
    }
}

fn mono_curve_fixture(exps: &[usize], axis: usize, n: usize) -> (CurveGerm, Matrix) {
    let coeffs = vec![GaussianRational::one(); exps.len()];
    let curve = CurveGerm::monomial_origin(exps, &coeffs).unwrap();
    let mut u = Matrix::zeros(n, 1);
    u.set(axis, 0, GaussianRational::one());
    (curve, u)
}

/// The certified monomial suite: zero-dimensional monomial ideals in two
/// and three variables whose restricted types are solved exactly by
/// direction analysis.
pub fn monomial_small() -> Corpus {
    let v3 = &["z1", "z2", "z3"];
    let v2 = &["z1", "z2"];
    let ideals = vec![
        inst("max-ideal-3", v3, &["z1", "z2", "z3"], &[2, 3]),
        inst("quadrics-3", v3, &["z1^2", "z2^2", "z3^2"], &[2, 3]),
        inst("cubes-3", v3, &["z1^3", "z2^3", "z3^3"], &[2, 3]),
        inst("quartics-3", v3, &["z1^4", "z2^4", "z3^4"], &[2, 3]),
        inst(
            "quadrics-plus-cross",
            v3,
            &["z1^2", "z2^2", "z3^2", "z1*z2"],
            &[2, 3],
        ),
        inst(
            "cubes-plus-cross",
            v3,
            &["z1^3", "z2^3", "z3^3", "z1*z2*z3"],
            &[2, 3],
        ),
        inst(
            "cubes-plus-mixed",
            v3,
            &["z1^3", "z2^3", "z3^3", "z1^2*z2"],
            &[2, 3],
        ),
        inst("mixed-234", v3, &["z1^2", "z2^3", "z3^4"], &[2, 3]),
        inst("mixed-223", v3, &["z1^2", "z2^2", "z3^3"], &[2, 3]),
        inst("mixed-334", v3, &["z1^3", "z2^3", "z3^4"], &[2, 3]),
        inst("mixed-245", v3, &["z1^2", "z2^4", "z3^5"], &[2, 3]),
        inst("two-cubes", v3, &["z2^3", "z3^3"], &[2]),
        inst("two-quadrics", v3, &["z2^2", "z3^2"], &[2]),
        inst("line-and-powers", v3, &["z1", "z2^2", "z3^3"], &[2, 3]),
        inst("plane-pair-23", v2, &["z1^2", "z2^3"], &[2]),
        inst("plane-pair-25", v2, &["z1^2", "z2^5"], &[2]),
        inst("plane-matrix", v2, &["z1^2", "z1*z2", "z2^2"], &[2]),
        inst("plane-max", v2, &["z1", "z2"], &[2]),
        inst("plane-cubes", v2, &["z1^3", "z2^3"], &[2]),
        inst("mixed-355", v3, &["z1^3", "z2^5", "z3^5"], &[2, 3]),
    ];
    let (c1, u1) = mono_curve_fixture(&[2, 3, 0], 2, 3);
    let (c2, u2) = mono_curve_fixture(&[1, 2, 3], 1, 3);
    let cylinders = vec![
        CylinderFixture {
            name: "cusp-sweep-z3".into(),
            cylinder: build_cylinder(&c1, &u1, 2).unwrap(),
            ideal: IdealPresentation::origin(
                3,
                vec![p("z2", &["z1", "z2", "z3"])],
            )
            .unwrap(),
        },
        CylinderFixture {
            name: "twisted-sweep-z2".into(),
            cylinder: build_cylinder(&c2, &u2, 2).unwrap(),
            ideal: IdealPresentation::origin(
                3,
                vec![p("z3", &["z1", "z2", "z3"]), p("z1^2", &["z1", "z2", "z3"])],
            )
            .unwrap(),
        },
    ];
    Corpus {
        name: "monomial-small",
        ideals,
        cylinders,
    }
}

/// Perturbed and linear-form instances exercising the bound machinery on
/// non-monomial data.
pub fn mixed_small() -> Corpus {
    let v3 = &["z1", "z2", "z3"];
    let v2 = &["z1", "z2"];
    let ideals = vec![
        inst("cusp-pair", v2, &["z1^2 + z2^3", "z2^2"], &[2]),
        inst("perturbed-quadrics", v3, &["z1^2 + z2^3", "z2^2", "z3^2"], &[2, 3]),
        inst("with-line", v3, &["z1^2", "z2^3", "z3"], &[2, 3]),
        inst("two-lines", v3, &["z1 + z2", "z2 + z3", "z3^2"], &[2, 3]),
        inst("shifted-cross", v2, &["z1*z2 + z2^3", "z1^3", "z2^4"], &[2]),
        inst("complex-coeff", v2, &["z1^2 + i*z2^3", "z2^2"], &[2]),
    ];
    let (c1, u1) = mono_curve_fixture(&[2, 3, 0], 2, 3);
    let cylinders = vec![CylinderFixture {
        name: "cusp-sweep-z3".into(),
        cylinder: build_cylinder(&c1, &u1, 2).unwrap(),
        ideal: IdealPresentation::origin(3, vec![p("z2^2 - z1^3", v3)]).unwrap(),
    }];
    Corpus {
        name: "mixed-small",
        ideals,
        cylinders,
    }
}

pub fn corpus_by_name(name: &str) -> Option<Corpus> {
    match name {
        "monomial-small" => Some(monomial_small()),
        "mixed-small" => Some(mixed_small()),
        _ => None,
    }
}

pub const CORPUS_NAMES: &[&str] = &["monomial-small", "mixed-small"];

/// The known separation example cannot be replayed here, and the harness
/// records why instead of silently not testing it.
pub const SEPARATION_NOTE: &str = "note: the q-type families genuinely differ on some ideals: \
in Fassina's example the D'Angelo 2-type is 3 while the generic-value and Catlin 2-types are \
both 4. Reproducing it requires the explicit ideal from that work, which is not part of these \
corpora; the equality law below checks the Catlin vs generic-value identity, not the strict \
inequality.";

// ---------------------------------------------------------------------------
// law verification

#[derive(Clone, Debug, Serialize)]
pub struct LawResult {
    pub law: &'static str,
    pub instance: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub corpus: String,
    pub results: Vec<LawResult>,
    pub passed: usize,
    pub failed: usize,
    pub note: &'static str,
}

fn big(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Run every law over the named corpus.
pub fn verify_corpus(name: &str, config: &SessionConfig) -> Result<VerifyReport, RunError> {
    let corpus = corpus_by_name(name)
        .ok_or_else(|| RunError::BadInput(format!(
            "unknown corpus {:?}; available: {}",
            name,
            CORPUS_NAMES.join(", ")
        )))?;
    let mut results: Vec<LawResult> = Vec::new();

    for instance in &corpus.ideals {
        let n = instance.ideal.nvars();
        law_type_multiplicity_chain(instance, config, &mut results)?;
        for &q in &instance.qs {
            law_qtype_sandwich(instance, q, config, &mut results)?;
            law_generic_mult_min_is_mode(instance, q, config, &mut results)?;
            if q <= n.saturating_sub(1) {
                law_catlin_vs_generic(instance, q, config, &mut results)?;
            }
        }
    }

    law_cylinder_postconditions(config, &mut results)?;
    for fixture in &corpus.cylinders {
        law_tau_stability(fixture, config, &mut results)?;
    }

    let passed = results.iter().filter(|r| r.passed).count();
    let failed = results.len() - passed;
    Ok(VerifyReport {
        corpus: name.to_string(),
        results,
        passed,
        failed,
        note: SEPARATION_NOTE,
    })
}

/// type <= multiplicity <= type^(n-k) for certified types with k detected
/// linear forms (right side only when k >= 1, matching the theorem's
/// hypothesis).
fn law_type_multiplicity_chain(
    instance: &CorpusInstance,
    config: &SessionConfig,
    out: &mut Vec<LawResult>,
) -> Result<(), RunError> {
    let rep = delta1_bounds(&instance.ideal, config.budget)?;
    let n = instance.ideal.nvars();
    let (passed, detail) = if !rep.exact {
        (
            true,
            format!(
                "type not certified (bounds {} .. {}); chain not asserted",
                value_text(&rep.lower),
                value_text(&rep.upper)
            ),
        )
    } else {
        let t = rep.lower.clone();
        let d = rep.multiplicity.clone().unwrap_or(ExtendedRational::Infinite);
        let left = t <= d;
        let right = if rep.linear_rank >= 1 && t.is_finite() {
            d <= t.pow((n - rep.linear_rank) as u32)
        } else {
            true
        };
        (
            left && right,
            format!(
                "type {} , multiplicity {}, k = {}",
                value_text(&t),
                value_text(&d),
                rep.linear_rank
            ),
        )
    };
    out.push(LawResult {
        law: "type_multiplicity_chain",
        instance: instance.name.clone(),
        passed,
        detail,
    });
    Ok(())
}

/// sampled-inf <= generic value <= sampled-inf^(n-q+1) on certified
/// instances.
fn law_qtype_sandwich(
    instance: &CorpusInstance,
    q: usize,
    config: &SessionConfig,
    out: &mut Vec<LawResult>,
) -> Result<(), RunError> {
    let rep = tilde_deltaq(&instance.ideal, &config.sampler(q), config.budget)?;
    let n = instance.ideal.nvars();
    let (passed, detail) = if !rep.exact {
        (true, "per-sample values not certified; not asserted".into())
    } else {
        let inf = &rep.min_value;
        let mode = &rep.modal_value;
        let ok = inf <= mode
            && (!inf.is_finite() || *mode <= inf.pow((n - q + 1) as u32));
        (
            ok,
            format!(
                "inf-estimate {}, generic {}, exponent {}",
                value_text(inf),
                value_text(mode),
                n - q + 1
            ),
        )
    };
    out.push(LawResult {
        law: "qtype_sandwich",
        instance: format!("{} (q={})", instance.name, q),
        passed,
        detail,
    });
    Ok(())
}

/// Catlin estimate below the generic value always; equal on certified
/// instances.
fn law_catlin_vs_generic(
    instance: &CorpusInstance,
    q: usize,
    config: &SessionConfig,
    out: &mut Vec<LawResult>,
) -> Result<(), RunError> {
    let sampler = config.sampler(q);
    let tdq = tilde_deltaq(&instance.ideal, &sampler, config.budget)?;
    let cat = catlin_q_estimate(&instance.ideal, &sampler, config.budget)?;
    let below = cat.modal_value <= tdq.modal_value;
    out.push(LawResult {
        law: "catlin_below_generic",
        instance: format!("{} (q={})", instance.name, q),
        passed: below,
        detail: format!(
            "cylinder estimate {}, generic value {}",
            value_text(&cat.modal_value),
            value_text(&tdq.modal_value)
        ),
    });
    let (passed, detail) = if !(cat.exact && tdq.exact) {
        (true, "not certified on both sides; equality not asserted".into())
    } else {
        (
            cat.modal_value == tdq.modal_value,
            format!(
                "cylinder estimate {}, generic value {}",
                value_text(&cat.modal_value),
                value_text(&tdq.modal_value)
            ),
        )
    };
    out.push(LawResult {
        law: "catlin_equals_generic",
        instance: format!("{} (q={})", instance.name, q),
        passed,
        detail,
    });
    Ok(())
}

/// Sampled multiplicity of the augmented ideal: minimum equals mode.
fn law_generic_mult_min_is_mode(
    instance: &CorpusInstance,
    q: usize,
    config: &SessionConfig,
    out: &mut Vec<LawResult>,
) -> Result<(), RunError> {
    let rep = generic_multiplicity(&instance.ideal, &config.sampler(q))?;
    out.push(LawResult {
        law: "generic_multiplicity_min_is_mode",
        instance: format!("{} (q={})", instance.name, q),
        passed: rep.min_value == rep.modal_value,
        detail: format!(
            "min {}, mode {} (frequency {})",
            value_text(&rep.min_value),
            value_text(&rep.modal_value),
            rep.frequency
        ),
    });
    Ok(())
}

/// Random (curve, directrix) pairs: the cylinder reproduces its curve, the
/// tangent spans check out, and invalid inputs are rejected.
fn law_cylinder_postconditions(
    config: &SessionConfig,
    out: &mut Vec<LawResult>,
) -> Result<(), RunError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ xcy_seed());
    let n = 3;
    let mut failures = Vec::new();
    for trial in 0..100 {
        // random polynomial curve with two terms per component
        let comps: Vec<UniPoly> = (0..n)
            .map(|_| {
                let a = rng.gen_range(0..=4u32);
                if a == 0 {
                    UniPoly::zero()
                } else {
                    let c1 = GaussianRational::from_int(rng.gen_range(-3..=3i64));
                    let e2 = rng.gen_range(a + 1..=a + 3);
                    let c2 = GaussianRational::from_int(rng.gen_range(-3..=3i64));
                    UniPoly::monomial(c1, a as usize)
                        .add(&UniPoly::monomial(c2, e2 as usize))
                }
            })
            .collect();
        let Ok(curve) = CurveGerm::polynomial_origin(comps) else {
            continue; // all components vanished: not a germ, skip the draw
        };
        let mut u = Matrix::zeros(n, 1);
        for j in 0..n {
            u.set(j, 0, GaussianRational::from_int(rng.gen_range(-3..=3i64)));
        }
        let tangent = curve.tangent_direction();
        let u_rank = u.rank();
        let mut rows: Vec<Vec<GaussianRational>> = (0..1).map(|c| u.column(c)).collect();
        rows.push(tangent.clone());
        let independent = Matrix::from_rows(rows).rank() == 2;
        match build_cylinder(&curve, &u, 2) {
            Ok(cyl) => {
                if u_rank != 1 || !independent {
                    failures.push(format!("trial {}: accepted invalid directrix", trial));
                    continue;
                }
                // psi(t, 0) reproduces the curve exactly
                let swept = cyl.sweep(&[GaussianRational::zero()])?;
                if swept != *cyl.curve() {
                    failures.push(format!("trial {}: sweep at 0 differs", trial));
                }
                // tangent space spans the directrix
                let mut rows: Vec<Vec<GaussianRational>> = vec![cyl.curve().tangent_direction()];
                rows.push(u.column(0));
                if Matrix::from_rows(rows).rank() != 2 {
                    failures.push(format!("trial {}: tangent space does not span", trial));
                }
            }
            Err(Error::RankDeficient { .. }) => {
                if u_rank == 1 {
                    failures.push(format!("trial {}: spurious rank rejection", trial));
                }
            }
            Err(Error::TangentInDirectrix) => {
                if independent {
                    failures.push(format!("trial {}: spurious tangent rejection", trial));
                }
            }
            Err(e) => failures.push(format!("trial {}: unexpected error {}", trial, e)),
        }
        // a directrix containing the tangent must always be rejected
        if trial % 10 == 0 {
            let mut bad = Matrix::zeros(n, 1);
            for (j, c) in curve.tangent_direction().into_iter().enumerate() {
                bad.set(j, 0, c);
            }
            if bad.rank() == 1 && !matches!(
                build_cylinder(&curve, &bad, 2),
                Err(Error::TangentInDirectrix)
            ) {
                failures.push(format!("trial {}: tangent directrix accepted", trial));
            }
        }
    }
    out.push(LawResult {
        law: "cylinder_postconditions",
        instance: "random-pairs".into(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            "100 random pairs validated".into()
        } else {
            failures.join("; ")
        },
    });
    Ok(())
}

#[allow(non_snake_case)]
fn xcy_seed() -> u64 {
    0x63796c696e646572 // "cylinder"
}

/// Modal tau frequency at least 99/100 over 200 sampled slices, with a
/// rejection rate below 1%.
fn law_tau_stability(
    fixture: &CylinderFixture,
    config: &SessionConfig,
    out: &mut Vec<LawResult>,
) -> Result<(), RunError> {
    let sampler = SliceSampler::new(
        config.seed,
        200,
        config.coefficient_range,
        fixture.cylinder.q(),
    );
    let rep = tau_generic(&fixture.ideal, &fixture.cylinder, &sampler)?;
    let freq_ok = rep.frequency >= BigRational::new(BigInt::from(99), BigInt::from(100));
    let reject_ok = big(rep.rejected as u64) * big(100)
        < big((rep.samples_used + rep.rejected) as u64);
    out.push(LawResult {
        law: "tau_slice_stability",
        instance: fixture.name.clone(),
        passed: freq_ok && reject_ok,
        detail: format!(
            "modal {} with frequency {}, {} rejected of {}",
            value_text(&rep.modal_value),
            rep.frequency,
            rep.rejected,
            rep.samples_used + rep.rejected
        ),
    });
    Ok(())
}

fn run_verify(corpus: &str, config: &SessionConfig) -> Result<RunOutput, RunError> {
    let report = verify_corpus(corpus, config)?;
    let mut text = format!("corpus: {}\n", report.corpus);
    for r in &report.results {
        text.push_str(&format!(
            "{} {:<34} {:<28} {}\n",
            if r.passed { "PASS" } else { "FAIL" },
            r.law,
            r.instance,
            r.detail
        ));
    }
    text.push_str(&format!(
        "{} passed, {} failed\n{}\n",
        report.passed, report.failed, report.note
    ));
    let failed = report.failed > 0;
    Ok(RunOutput {
        text,
        json: envelope("verify", config, serde_json::to_value(&report).unwrap()),
        verify_failed: failed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpora_are_wellformed() {
        for name in CORPUS_NAMES {
            let c = corpus_by_name(name).unwrap();
            assert!(!c.ideals.is_empty());
            for i in &c.ideals {
                assert!(!i.qs.is_empty());
                for &q in &i.qs {
                    assert!(q >= 2 && q <= i.ideal.nvars());
                }
            }
        }
        assert!(corpus_by_name("nope").is_none());
    }

    #[test]
    fn monomial_corpus_has_enough_certified_instances() {
        let c = monomial_small();
        assert!(c.ideals.len() >= 15);
    }
}
