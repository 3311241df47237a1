use gamma2d::{
    bilinear_scalar, boost_operator, boost_spinor, build_representation, covariance_check,
    find_intertwiner, full_check, mat2, normalization_denominator, parity_apply, parity_check,
    parity_momentum, parity_operator, preset_standard, so3_from_euler, so3_from_matrix,
    so3_from_quaternion, so3_random, spinor as solve_spinor, verify_intertwiner, Admission,
    BoostAxis, Branch, Complex64, GammaRep, Momentum, Normalization, PlaneWaveSolution, Spinor,
    VerificationReport,
};
use serde::Serialize;
use serde_json::json;

use crate::document::{
    complex_to_json, mat_to_json, JsonComplex, JsonMat2, Provenance, RepDocument,
};
use crate::output::{fmt_f64, to_json_pretty, write_csv, CliError, Outcome, EXIT_NEGATIVE};
use crate::{
    parse_numbers, read_input, BoostArgs, BuildArgs, CheckArgs, IntertwineArgs, MomentumArgs,
    OutputFormat, ParityArgs, Preset, Settings, SpinorArgs,
};

pub const DEFAULT_TOL: f64 = gamma2d::DEFAULT_TOL;

pub fn load_document(path: &str) -> Result<RepDocument, CliError> {
    RepDocument::parse(&read_input(path)?)
}

pub fn load_rep(path: &str) -> Result<GammaRep, CliError> {
    load_document(path)?.validated_rep()
}

fn warning(settings: &Settings, code: &str, message: String) -> String {
    if settings.quiet {
        return String::new();
    }
    let mut s = serde_json::to_string(&json!({ "warning": code, "message": message }))
        .expect("warning serializes");
    s.push('\n');
    s
}

pub fn rep_build(settings: &Settings, args: &BuildArgs) -> Result<Outcome, CliError> {
    settings.json_only()?;
    let mut stderr = String::new();
    let (params, provenance) = if let Some(Preset::Standard) = args.preset {
        (
            preset_standard(),
            Provenance::Preset {
                name: "standard".into(),
            },
        )
    } else if let Some(text) = &args.euler {
        let v = parse_numbers(text, 3, "--euler")?;
        (
            so3_from_euler(v[0], v[1], v[2])?,
            Provenance::Euler {
                angles: [v[0], v[1], v[2]],
            },
        )
    } else if let Some(text) = &args.quaternion {
        let v = parse_numbers(text, 4, "--quaternion")?;
        (
            so3_from_quaternion(v[0], v[1], v[2], v[3])?,
            Provenance::Quaternion {
                components: [v[0], v[1], v[2], v[3]],
            },
        )
    } else if let Some(text) = &args.explicit {
        let v = parse_numbers(text, 9, "--explicit")?;
        let rows = [[v[0], v[1], v[2]], [v[3], v[4], v[5]], [v[6], v[7], v[8]]];
        let (params, how) = so3_from_matrix(rows)?;
        let reprojected = matches!(how, Admission::Reprojected { .. });
        if let Admission::Reprojected { residual } = how {
            stderr.push_str(&warning(
                settings,
                "so3-reprojected",
                format!("input off SO(3) by {residual:e}; replaced by the nearest rotation"),
            ));
        }
        (params, Provenance::Explicit { reprojected })
    } else if args.random {
        (
            so3_random(settings.seed),
            Provenance::Random {
                seed: settings.seed,
            },
        )
    } else {
        return Err(CliError::input(
            "invalid-argument",
            "no representation source given",
        ));
    };
    let rep = build_representation(&params)?;
    let mut outcome = Outcome::ok(RepDocument::from_rep(&rep, provenance).to_canonical_json());
    outcome.stderr = stderr;
    Ok(outcome)
}

/// Every property check plus consistency between stored matrices and `so3`.
pub fn document_report(doc: &RepDocument, tol: f64) -> VerificationReport {
    let mut report = full_check(&doc.raw_rep(), tol);
    report.record(
        "rebuild-consistency",
        doc.rebuild_residual().unwrap_or(f64::INFINITY),
        tol,
    );
    report
}

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
struct CheckOutput {
    passed: bool,
    tolerance: f64,
    max_residual: f64,
    report: VerificationReport,
}

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
struct BatchRow {
    seed: u64,
    passed: bool,
    max_residual: f64,
    worst_check: String,
}

pub fn rep_check(settings: &Settings, args: &CheckArgs) -> Result<Outcome, CliError> {
    let tol = settings.tol_or(DEFAULT_TOL)?;
    if let Some(n) = args.batch {
        return rep_check_batch(settings, n, tol);
    }
    settings.json_only()?;
    let doc = load_document(args.document.as_deref().unwrap_or("-"))?;
    let report = document_report(&doc, tol);
    let passed = report.passed();
    let out = CheckOutput {
        passed,
        tolerance: tol,
        max_residual: report.max_residual(),
        report,
    };
    let mut outcome = Outcome::ok(to_json_pretty(&out));
    if !passed {
        outcome.exit = EXIT_NEGATIVE;
    }
    Ok(outcome)
}

fn rep_check_batch(settings: &Settings, n: u64, tol: f64) -> Result<Outcome, CliError> {
    if n == 0 {
        return Err(CliError::input("empty-range", "--batch must be at least 1"));
    }
    let rows: Vec<BatchRow> = (settings.seed..settings.seed + n)
        .map(|seed| {
            let rep = build_representation(&so3_random(seed)).expect("random rotations are valid");
            let doc = RepDocument::from_rep(&rep, Provenance::Random { seed });
            let report = document_report(&doc, tol);
            let worst = report
                .checks
                .iter()
                .max_by(|a, b| a.max_residual.total_cmp(&b.max_residual))
                .map(|c| c.name.clone())
                .unwrap_or_default();
            BatchRow {
                seed,
                passed: report.passed(),
                max_residual: report.max_residual(),
                worst_check: worst,
            }
        })
        .collect();
    let all_passed = rows.iter().all(|r| r.passed);
    let stdout = match settings.output {
        Some(OutputFormat::Csv) => write_csv(
            &["seed", "passed", "max_residual", "worst_check"],
            &rows
                .iter()
                .map(|r| {
                    vec![
                        r.seed.to_string(),
                        r.passed.to_string(),
                        fmt_f64(r.max_residual),
                        r.worst_check.clone(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
        _ => to_json_pretty(&rows),
    };
    let mut outcome = Outcome::ok(stdout);
    if !all_passed {
        outcome.exit = EXIT_NEGATIVE;
    }
    Ok(outcome)
}

fn momentum_from(args: &MomentumArgs) -> Result<(Momentum, Branch), CliError> {
    let mom = Momentum::new(
        args.k1.unwrap_or(0.0),
        args.k2.unwrap_or(0.0),
        args.m.unwrap_or(0.0),
    )?;
    Ok((mom, args.branch.map(Into::into).unwrap_or(Branch::Positive)))
}

fn spinor_to_json(u: &Spinor) -> [JsonComplex; 2] {
    [complex_to_json(u[0]), complex_to_json(u[1])]
}

fn branch_symbol(b: Branch) -> &'static str {
    match b {
        Branch::Positive => "+",
        Branch::Negative => "-",
    }
}

fn normalization_name(n: Normalization) -> &'static str {
    match n {
        Normalization::ClosedForm => "closed-form",
        Normalization::NumericFallback => "numeric-fallback",
        Normalization::Transformed => "transformed",
    }
}

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct SolutionJson {
    k1: f64,
    k2: f64,
    m: f64,
    branch: &'static str,
    energy: f64,
    signed_energy: f64,
    spinor: [JsonComplex; 2],
    normalization: &'static str,
    norm: f64,
    dirac_residual: f64,
}

impl SolutionJson {
    fn new(sol: &PlaneWaveSolution, rep: &GammaRep) -> Self {
        SolutionJson {
            k1: sol.momentum.k1,
            k2: sol.momentum.k2,
            m: sol.momentum.m,
            branch: branch_symbol(sol.branch),
            energy: sol.energy,
            signed_energy: sol.signed_energy(),
            spinor: spinor_to_json(&sol.spinor),
            normalization: normalization_name(sol.normalization),
            norm: mat2::norm(&sol.spinor),
            dirac_residual: sol.dirac_residual(rep),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
struct SpinorOutput {
    #[serde(flatten)]
    solution: SolutionJson,
    denominator: f64,
}

pub fn spinor(settings: &Settings, args: &SpinorArgs) -> Result<Outcome, CliError> {
    settings.json_only()?;
    let rep = load_rep(&args.document)?;
    let (mom, branch) = momentum_from(&args.momentum)?;
    let sol = solve_spinor(&rep, &mom, branch)?;
    let out = SpinorOutput {
        solution: SolutionJson::new(&sol, &rep),
        denominator: normalization_denominator(&rep, &mom),
    };
    Ok(Outcome::ok(to_json_pretty(&out)))
}

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
struct BoostedSolution {
    input: SolutionJson,
    output: SolutionJson,
    scalar_bilinear_before: JsonComplex,
    scalar_bilinear_after: JsonComplex,
}

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
struct BoostOutput {
    axis: usize,
    theta: f64,
    velocity: f64,
    s: JsonMat2,
    s_inverse: JsonMat2,
    lambda: [[f64; 2]; 2],
    tolerance: f64,
    covariance: VerificationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    solution: Option<BoostedSolution>,
}

fn scalar(u: &Spinor, rep: &GammaRep) -> Complex64 {
    bilinear_scalar(u, u, rep)
}

pub fn boost(settings: &Settings, args: &BoostArgs) -> Result<Outcome, CliError> {
    settings.json_only()?;
    let rep = load_rep(&args.document)?;
    let axis = BoostAxis::from_index(args.axis)?;
    let b = boost_operator(&rep, args.theta, axis)?;
    // Residuals grow with the entries of Lambda, so the tolerance does too.
    let tol = settings.tol_or(DEFAULT_TOL)? * b.theta.cosh();
    let covariance = covariance_check(&rep, &b, tol);
    let passed = covariance.passed();
    let solution = if args.momentum.given() {
        let (mom, branch) = momentum_from(&args.momentum)?;
        let sol = solve_spinor(&rep, &mom, branch)?;
        let out = boost_spinor(&b, &sol);
        Some(BoostedSolution {
            input: SolutionJson::new(&sol, &rep),
            output: SolutionJson::new(&out, &rep),
            scalar_bilinear_before: complex_to_json(scalar(&sol.spinor, &rep)),
            scalar_bilinear_after: complex_to_json(scalar(&out.spinor, &rep)),
        })
    } else {
        None
    };
    let out = BoostOutput {
        axis: args.axis,
        theta: b.theta,
        velocity: b.theta.tanh(),
        s: mat_to_json(&b.s),
        s_inverse: mat_to_json(&b.s_inv),
        lambda: b.lambda,
        tolerance: tol,
        covariance,
        solution,
    };
    let mut outcome = Outcome::ok(to_json_pretty(&out));
    if !passed {
        outcome.exit = EXIT_NEGATIVE;
    }
    Ok(outcome)
}

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
struct ParityOutput {
    phi: f64,
    p: JsonMat2,
    lambda: [[f64; 2]; 2],
    conjugation: VerificationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<[JsonComplex; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    output: Option<[JsonComplex; 2]>,
    /// Momentum at which the output solves the Dirac equation.
    #[serde(skip_serializing_if = "Option::is_none")]
    reflected_momentum: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reflected_dirac_residual: Option<f64>,
}

pub fn parity(settings: &Settings, args: &ParityArgs) -> Result<Outcome, CliError> {
    settings.json_only()?;
    let rep = load_rep(&args.document)?;
    let tol = settings.tol_or(DEFAULT_TOL)?;
    let p = parity_operator(&rep, args.phi)?;
    let conjugation = parity_check(&rep, &p, tol);
    let passed = conjugation.passed();
    let mut out = ParityOutput {
        phi: p.phi,
        p: mat_to_json(&p.p),
        lambda: p.lambda,
        conjugation,
        input: None,
        output: None,
        reflected_momentum: None,
        reflected_dirac_residual: None,
    };
    if let Some(text) = &args.spinor {
        let v = parse_numbers(text, 4, "--spinor")?;
        let u = [Complex64::new(v[0], v[1]), Complex64::new(v[2], v[3])];
        out.input = Some(spinor_to_json(&u));
        out.output = Some(spinor_to_json(&p.p.apply(&u)));
    } else if args.momentum.given() {
        let (mom, branch) = momentum_from(&args.momentum)?;
        let sol = solve_spinor(&rep, &mom, branch)?;
        let pu = parity_apply(&p, &sol);
        let reflected = parity_momentum(&mom);
        let image = PlaneWaveSolution {
            momentum: reflected,
            spinor: pu,
            ..sol
        };
        out.input = Some(spinor_to_json(&sol.spinor));
        out.output = Some(spinor_to_json(&pu));
        out.reflected_momentum = Some([reflected.k1, reflected.k2]);
        out.reflected_dirac_residual = Some(image.dirac_residual(&rep));
    }
    let mut outcome = Outcome::ok(to_json_pretty(&out));
    if !passed {
        outcome.exit = EXIT_NEGATIVE;
    }
    Ok(outcome)
}

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
struct IntertwineOutput {
    m: JsonMat2,
    residual: f64,
    commutant_dimension: usize,
    normalized: bool,
    singular_values: Vec<f64>,
    verification: VerificationReport,
}

pub fn intertwine(settings: &Settings, args: &IntertwineArgs) -> Result<Outcome, CliError> {
    settings.json_only()?;
    let tol = settings.tol_or(gamma2d::intertwiner::DEFAULT_TOL)?;
    // Both documents must parse; their stored matrices are used as given so
    // that conjugated (non-SO(3)-form) sets can be compared too.
    let rep_a = load_document(&args.document_a)?.raw_rep();
    let rep_b = load_document(&args.document_b)?.raw_rep();
    let spectrum = gamma2d::intertwiner::system_spectrum(&rep_a, &rep_b);
    let res = match find_intertwiner(&rep_a, &rep_b, tol) {
        Ok(res) => res,
        Err(gamma2d::Error::Inconsistent(msg)) => {
            return Err(CliError::negative("inequivalent", msg)
                .with_details(serde_json::to_value(&spectrum).ok()))
        }
        Err(e) => return Err(e.into()),
    };
    let verification = verify_intertwiner(&res, &rep_a, &rep_b, tol);
    let out = IntertwineOutput {
        m: mat_to_json(&res.m),
        residual: res.residual,
        commutant_dimension: res.commutant_dim,
        normalized: res.normalized,
        singular_values: spectrum.singular_values,
        verification,
    };
    Ok(Outcome::ok(to_json_pretty(&out)))
}
