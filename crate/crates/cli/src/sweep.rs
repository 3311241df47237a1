//! Grid sweeps. Rows are emitted in row-major order over the axes in the
//! order each sweep declares them.

use gamma2d::{
    boost_operator, build_representation, covariance_check, dirac_matrix, dispersion, mat2,
    normalization_denominator, preset_standard, so3_random, spinor, BoostAxis, Branch, GammaRep,
    Momentum, Normalization, SO3Params,
};
use serde::Serialize;

use crate::commands::load_rep;
use crate::output::{fmt_f64, to_json_pretty, write_csv, CliError, Outcome, EXIT_NEGATIVE};
use crate::{OutputFormat, Settings, SweepArgs, SweepKind};

/// One-dimensional sample set parsed from `v`, `a:b:n` or `a:b:n:log`.
#[derive(Debug, Clone, PartialEq)]
pub struct Range(pub Vec<f64>);

impl Range {
    pub fn parse(text: &str, what: &str) -> Result<Self, CliError> {
        let bad = |msg: String| CliError::input("invalid-argument", format!("{what}: {msg}"));
        let parts: Vec<&str> = text.split(':').map(str::trim).collect();
        let num = |s: &str| -> Result<f64, CliError> {
            let v: f64 = s.parse().map_err(|e| bad(format!("{s:?}: {e}")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(bad(format!("{s:?} is not finite")))
            }
        };
        let (start, stop, count, log) = match parts.as_slice() {
            [v] => return Ok(Range(vec![num(v)?])),
            [a, b, n] => (num(a)?, num(b)?, *n, false),
            [a, b, n, "log"] => (num(a)?, num(b)?, *n, true),
            _ => return Err(bad(format!("cannot read range {text:?}"))),
        };
        let n: usize = count
            .parse()
            .map_err(|e| bad(format!("count {count:?}: {e}")))?;
        if n == 0 {
            return Err(CliError::input(
                "empty-range",
                format!("{what}: range has no points"),
            ));
        }
        if log && !(start > 0.0 && stop > 0.0) {
            return Err(bad("log ranges need positive endpoints".into()));
        }
        if n == 1 {
            return Ok(Range(vec![start]));
        }
        let (lo, hi) = if log {
            (start.ln(), stop.ln())
        } else {
            (start, stop)
        };
        let values = (0..n)
            .map(|i| {
                if i == 0 {
                    return start;
                }
                if i == n - 1 {
                    return stop;
                }
                let x = lo + (hi - lo) * (i as f64) / ((n - 1) as f64);
                if log {
                    x.exp()
                } else {
                    x
                }
            })
            .collect();
        Ok(Range(values))
    }

    fn parse_or(text: Option<&str>, default: &str, what: &str) -> Result<Self, CliError> {
        Self::parse(text.unwrap_or(default), what)
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
#[serde(untagged)]
pub enum Cell {
    F(f64),
    U(u64),
    B(bool),
}

impl Cell {
    fn text(self) -> String {
        match self {
            Cell::F(x) => fmt_f64(x),
            Cell::U(n) => n.to_string(),
            Cell::B(b) => b.to_string(),
        }
    }
}

/// A rectangular result: named columns and rows of cells.
#[derive(Debug, Clone, Serialize)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    fn render(&self, format: Option<OutputFormat>) -> String {
        match format {
            Some(OutputFormat::Json) => to_json_pretty(self),
            _ => write_csv(
                &self.columns,
                &self
                    .rows
                    .iter()
                    .map(|r| r.iter().map(|c| c.text()).collect())
                    .collect::<Vec<_>>(),
            ),
        }
    }
}

pub fn run(settings: &Settings, args: &SweepArgs) -> Result<Outcome, CliError> {
    let (table, all_passed) = match args.kind {
        SweepKind::Dispersion => (dispersion_sweep(args)?, true),
        SweepKind::Covariance => covariance_sweep(settings, args)?,
        SweepKind::NormalizationDegeneracy => (degeneracy_sweep(args)?, true),
    };
    let mut outcome = Outcome::ok(table.render(settings.output));
    if !all_passed {
        outcome.exit = EXIT_NEGATIVE;
    }
    Ok(outcome)
}

pub fn dispersion_sweep(args: &SweepArgs) -> Result<Table, CliError> {
    let rep = match &args.rep {
        Some(path) => load_rep(path)?,
        None => build_representation(&preset_standard())?,
    };
    let k1s = Range::parse_or(args.k1.as_deref(), "-2:2:5", "--k1")?;
    let k2s = Range::parse_or(args.k2.as_deref(), "-2:2:5", "--k2")?;
    let ms = Range::parse_or(args.m.as_deref(), "1", "--m")?;
    let mut rows = Vec::new();
    for &k1 in &k1s.0 {
        for &k2 in &k2s.0 {
            for &m in &ms.0 {
                let mom = Momentum::new(k1, k2, m)?;
                let (ep, en) = dispersion(&mom);
                let det = dirac_matrix(&rep, ep, &mom)
                    .det()
                    .norm()
                    .max(dirac_matrix(&rep, en, &mom).det().norm());
                rows.push(vec![
                    Cell::F(k1),
                    Cell::F(k2),
                    Cell::F(m),
                    Cell::F(ep),
                    Cell::F(en),
                    Cell::F(det),
                ]);
            }
        }
    }
    Ok(Table {
        columns: vec!["k1", "k2", "m", "energy-pos", "energy-neg", "onshell-det"],
        rows,
    })
}

pub fn covariance_sweep(settings: &Settings, args: &SweepArgs) -> Result<(Table, bool), CliError> {
    let thetas = Range::parse_or(args.theta.as_deref(), "-3:3:61", "--theta")?;
    if args.seeds == 0 {
        return Err(CliError::input("empty-range", "--seeds must be at least 1"));
    }
    let base_tol = settings.tol_or(gamma2d::DEFAULT_TOL)?;
    let mut rows = Vec::new();
    let mut all_passed = true;
    for seed in settings.seed..settings.seed + args.seeds {
        let rep = build_representation(&so3_random(seed))?;
        for &theta in &thetas.0 {
            for axis in [BoostAxis::X1, BoostAxis::X2] {
                let b = boost_operator(&rep, theta, axis)?;
                let report = covariance_check(&rep, &b, base_tol * theta.cosh());
                all_passed &= report.passed();
                rows.push(vec![
                    Cell::U(seed),
                    Cell::F(theta),
                    Cell::U(axis.index() as u64),
                    Cell::F(report.max_residual()),
                    Cell::B(report.passed()),
                ]);
            }
        }
    }
    Ok((
        Table {
            columns: vec!["seed", "theta", "axis", "max_residual", "passed"],
            rows,
        },
        all_passed,
    ))
}

/// Representation whose positive-branch denominator vanishes at zero
/// momentum: `2E(E - m)`, which is about `k1^2` for small `k1`.
pub fn degeneracy_rep() -> GammaRep {
    let params =
        SO3Params::from_rows_unchecked([-1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]);
    build_representation(&params).expect("fixed rotation is proper")
}

pub fn degeneracy_sweep(args: &SweepArgs) -> Result<Table, CliError> {
    let rep = degeneracy_rep();
    let ts = Range::parse_or(args.t.as_deref(), "1e-7:1e-1:61:log", "--t")?;
    let m = 1.0;
    let mut rows = Vec::new();
    for &t in &ts.0 {
        let mom = Momentum::new(t, 0.0, m)?;
        let sol = spinor(&rep, &mom, Branch::Positive)?;
        rows.push(vec![
            Cell::F(t),
            Cell::F(t),
            Cell::F(0.0),
            Cell::F(m),
            Cell::F(sol.energy),
            Cell::F(normalization_denominator(&rep, &mom)),
            Cell::B(sol.normalization == Normalization::NumericFallback),
            Cell::F(sol.dirac_residual(&rep)),
            Cell::F((mat2::norm(&sol.spinor) - 1.0).abs()),
        ]);
    }
    Ok(Table {
        columns: vec![
            "t",
            "k1",
            "k2",
            "m",
            "energy",
            "denominator",
            "fallback",
            "dirac_residual",
            "norm_error",
        ],
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(Range::parse("2.5", "x").unwrap().0, vec![2.5]);
        assert_eq!(Range::parse("0:1:3", "x").unwrap().0, vec![0.0, 0.5, 1.0]);
        let log = Range::parse("1e-2:1e2:5:log", "x").unwrap().0;
        assert_eq!(log.len(), 5);
        assert_eq!((log[0], log[4]), (1e-2, 1e2));
        assert!((log[2] - 1.0).abs() < 1e-14);
        assert_eq!(Range::parse("0:1:0", "x").unwrap_err().code, "empty-range");
        assert_eq!(
            Range::parse("-1:1:3:log", "x").unwrap_err().code,
            "invalid-argument"
        );
        assert_eq!(
            Range::parse("a:b", "x").unwrap_err().code,
            "invalid-argument"
        );
    }

    #[test]
    fn degeneracy_family_denominator() {
        let rep = degeneracy_rep();
        let mom = Momentum::new(1e-3, 0.0, 1.0).unwrap();
        let d = normalization_denominator(&rep, &mom);
        assert!((d / 1e-6 - 1.0).abs() < 1e-5);
    }
}
