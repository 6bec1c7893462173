use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde_json::{json, Value};
use solvlat_core::combinatorics::betti_formula;
use solvlat_core::exterior::{adapted_betti_direct, betti_direct};
use solvlat_core::lattice::{
    a_sequence, b_values, bock_certificate, char_poly_integer, companion_matrix, cubic_roots, fi_family,
    nolattice_scan, pisot_check, raices_oracle, sigma_region, t_parameter, TOLERANCE,
};
use solvlat_core::lcs::table1::check_table1;
use solvlat_core::lcs::{dtheta_exact, lcs_search_with_stats, lee_form_solve, verify_and_classify, DEFAULT_TRIALS};
use solvlat_core::models::m6_family;
use solvlat_core::scalar::{self, ExactScalar};
use solvlat_core::{BettiVector, Kind, LcsStructure};

use crate::builtins::{builtins, lookup};
use crate::document::AlgebraDocument;
use crate::error::CliError;
use crate::output::{csv_string, float, float_str, floats, form, integers, rational, ResultDocument};

/// What a command produced: the rendered output and whether it reports a
/// mathematical mismatch.
pub struct Report {
    pub text: String,
    pub mismatch: bool,
}

impl Report {
    fn json(doc: &ResultDocument) -> Self {
        Report {
            text: doc.to_json(),
            mismatch: doc.status != "ok" && doc.status != "no_witness",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    Formula,
    Both,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Algebra document (JSON).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Built-in dataset id, see `dump-builtins`.
    #[arg(long)]
    pub builtin: Option<String>,
    /// The diagonal unimodular family of dimension 2n+2.
    #[arg(long, value_name = "N")]
    pub m6: Option<usize>,
}

impl Source {
    fn describe(&self) -> String {
        match (&self.input, &self.builtin, self.m6) {
            (Some(p), _, _) => format!("input:{}", p.display()),
            (_, Some(b), _) => format!("builtin:{b}"),
            (_, _, Some(n)) => format!("m6/{n}"),
            _ => unreachable!("clap enforces one source"),
        }
    }

    fn load(&self) -> Result<AlgebraDocument, CliError> {
        if let Some(p) = &self.input {
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Parse(format!("{}: {e}", p.display())))?;
            return AlgebraDocument::from_json(&text);
        }
        if let Some(b) = &self.builtin {
            return lookup(b);
        }
        let n = self.m6.expect("clap enforces one source");
        lookup(&format!("m6/{n}"))
    }
}

fn betti_json(b: &BettiVector) -> Value {
    json!(b.values())
}

pub fn betti(source: &Source, adapted: bool, method: Method, format: Format) -> Result<Report, CliError> {
    let mut doc = ResultDocument::new("betti");
    doc.input("source", source.describe())
        .input("adapted", adapted)
        .input("method", format!("{method:?}").to_lowercase());
    let mut results: Vec<(&str, BettiVector)> = Vec::new();
    if method != Method::Formula {
        let d = source.load()?;
        let g = d.algebra()?;
        let b = if adapted {
            let theta = d
                .theta(g.dim())?
                .ok_or_else(|| CliError::Precondition("adapted Betti numbers need `theta`".into()))?;
            adapted_betti_direct(&g, &theta)?
        } else {
            betti_direct(&g)?
        };
        results.push(("direct", b));
    }
    if method != Method::Direct {
        let n = source
            .m6
            .ok_or_else(|| CliError::Precondition("formula mode needs --m6 N".into()))?;
        results.push(("formula", betti_formula(n, adapted)?));
    }
    if results.len() == 2 && results[0].1 != results[1].1 {
        doc.status = "mismatch".into();
        doc.diagnostics
            .push(format!("direct {} differs from formula {}", results[0].1, results[1].1));
    }
    for (k, b) in &results {
        doc.output(k, betti_json(b));
    }
    match format {
        Format::Json => Ok(Report::json(&doc)),
        Format::Csv => {
            let rows: Vec<Vec<String>> = results
                .iter()
                .flat_map(|(m, b)| {
                    b.values()
                        .iter()
                        .enumerate()
                        .map(move |(k, v)| vec![m.to_string(), k.to_string(), v.to_string()])
                })
                .collect();
            Ok(Report {
                text: csv_string(&["method", "k", "betti"], &rows),
                mismatch: doc.status != "ok",
            })
        }
    }
}

pub fn table1(verify_only: bool, format: Format) -> Result<Report, CliError> {
    let checks = check_table1()?;
    let mut doc = ResultDocument::new("table1");
    doc.input("verify_only", verify_only);
    let failed = checks.iter().filter(|c| !c.passed()).count();
    let mut cells = Vec::new();
    let mut rows = Vec::new();
    for c in &checks {
        let s = &c.structure;
        let mut cell = json!({
            "row": c.row,
            "expected": c.expected.to_string(),
            "kind": s.kind.to_string(),
            "theta_closed": s.theta_closed,
            "lcs_equation": s.lcs_equation,
            "nondegenerate": s.nondegenerate,
            "passed": c.passed(),
        });
        if !verify_only {
            cell["omega"] = form(&s.omega);
            cell["theta"] = form(&s.theta);
        }
        cells.push(cell);
        rows.push(vec![
            c.row.to_string(),
            c.expected.to_string(),
            s.kind.to_string(),
            s.theta_closed.to_string(),
            s.lcs_equation.to_string(),
            s.nondegenerate.to_string(),
            c.passed().to_string(),
        ]);
    }
    doc.output("cells", cells)
        .output("passed", checks.len() - failed)
        .output("total", checks.len());
    if failed > 0 {
        doc.status = "mismatch".into();
    }
    match format {
        Format::Json => Ok(Report::json(&doc)),
        Format::Csv => Ok(Report {
            text: csv_string(
                &["row", "expected", "kind", "theta_closed", "lcs_equation", "nondegenerate", "passed"],
                &rows,
            ),
            mismatch: failed > 0,
        }),
    }
}

pub fn lattice4d(bound: i64, k_min: i64, k_max: i64, format: Format) -> Result<Report, CliError> {
    if k_min > k_max {
        return Err(CliError::Parse(format!("empty k range {k_min}..={k_max}")));
    }
    let mut rows = Vec::new();
    let mut records = Vec::new();
    let mut worst = 0.0f64;
    for p in sigma_region(bound) {
        let r = cubic_roots(p.m, p.n)?;
        let base = vec![
            p.m.to_string(),
            p.n.to_string(),
            p.in_sigma_prime.to_string(),
            float_str(r.c),
            float_str(r.phi),
        ];
        if !p.in_sigma_prime {
            let mut row = base.clone();
            row.extend([String::new(), String::new(), String::new(), String::new()]);
            rows.push(row);
            records.push(json!({
                "m": p.m, "n": p.n, "in_sigma_prime": false, "c": float(r.c), "phi": float(r.phi),
            }));
            continue;
        }
        let class = pisot_check(p.m, p.n)?.as_str();
        for b in b_values(p.m, p.n, k_min..=k_max)? {
            worst = worst.max(b.residual);
            let mut row = base.clone();
            row.extend([b.k.to_string(), float_str(b.h), float_str(b.residual), class.to_string()]);
            rows.push(row);
            records.push(json!({
                "m": p.m, "n": p.n, "in_sigma_prime": true, "c": float(r.c), "phi": float(r.phi),
                "k": b.k, "h_k": float(b.h), "self_consistency_residual": float(b.residual),
                "pisot_class": class,
            }));
        }
    }
    let mismatch = worst > TOLERANCE;
    match format {
        Format::Csv => Ok(Report {
            text: csv_string(
                &["m", "n", "in_sigma_prime", "c", "phi", "k", "h_k", "self_consistency_residual", "pisot_class"],
                &rows,
            ),
            mismatch,
        }),
        Format::Json => {
            let mut doc = ResultDocument::new("lattice4d");
            doc.input("bound", bound).input("k_min", k_min).input("k_max", k_max);
            doc.output("rows", records).output("max_residual", float(worst));
            if mismatch {
                doc.status = "mismatch".into();
            }
            Ok(Report::json(&doc))
        }
    }
}

pub fn lattice_build(n: usize, m: i64) -> Result<Report, CliError> {
    let mut doc = ResultDocument::new("lattice-build");
    doc.input("n", n).input("m", m);
    let rec = a_sequence(m, n as i64)?;
    let p = char_poly_integer(n as i64, m)?;
    let c = companion_matrix(&p)?;
    let fam = m6_family(n)?;
    let t = t_parameter(n as i64, m)?;
    let cert = bock_certificate(&fam.spec, t, &c)?;
    let matrix_of_floats =
        |rows: &[Vec<f64>]| Value::Array(rows.iter().map(|r| floats(r.iter().copied())).collect());
    doc.output("t_m", float(rec.t_m))
        .output("rho", float(rec.rho))
        .output("a", integers(&rec.a))
        .output("a_max_relative_residual", float(rec.max_relative_residual))
        .output("char_poly", integers(&p))
        .output("companion", Value::Array(c.iter().map(|r| integers(r)).collect()))
        .output(
            "certificate",
            json!({
                "t0": float(cert.t0),
                "coefficient_residual": float(cert.coefficient_residual),
                "spectrum_residual": float(cert.spectrum_residual),
                "min_separation": float(cert.min_separation),
                "distinct_spectrum": cert.distinct_spectrum,
                "certified": cert.certified,
                "conjugator": cert.conjugator.as_ref().map(|p| json!({
                    "matrix": matrix_of_floats(&p.matrix),
                    "residual": float(p.residual),
                })),
            }),
        );
    if !cert.certified {
        doc.status = "mismatch".into();
        doc.diagnostics.push("e^{t_m M} is not certified conjugate to the companion matrix".into());
    }
    Ok(Report::json(&doc))
}

#[derive(Args, Debug)]
pub struct SearchFlags {
    /// Solve for the Lee form of the document's omega instead of using its theta.
    #[arg(long)]
    pub solve_lee: bool,
    /// Randomized search for an LCS structure with θ ≠ 0.
    #[arg(long)]
    pub search: bool,
    /// Let --search accept symplectic structures (θ = 0).
    #[arg(long, requires = "search")]
    pub allow_symplectic: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
}

fn structure_json(s: &LcsStructure) -> Value {
    json!({
        "omega": form(&s.omega),
        "theta": form(&s.theta),
        "theta_closed": s.theta_closed,
        "lcs_equation": s.lcs_equation,
        "nondegenerate": s.nondegenerate,
        "verified": s.verified,
        "symplectic": s.symplectic,
        "kind": s.kind.to_string(),
    })
}

pub fn check(source: &Source, flags: &SearchFlags) -> Result<Report, CliError> {
    let mut doc = ResultDocument::new("check");
    doc.input("source", source.describe());
    let d = source.load()?;
    let g = d.algebra()?;
    g.require_jacobi()?;
    if flags.search {
        doc.input("seed", flags.seed)
            .input("trials", flags.trials)
            .input("allow_symplectic", flags.allow_symplectic);
        let out = lcs_search_with_stats(&g, flags.trials, flags.seed, !flags.allow_symplectic)?;
        doc.output("trials_used", out.trials_used)
            .output("theta_candidates", out.theta_candidates);
        match out.found {
            Some(s) => {
                doc.output("structure", structure_json(&s));
            }
            None => {
                doc.status = "no_witness".into();
                doc.output("structure", Value::Null);
            }
        }
        return Ok(Report::json(&doc));
    }
    let omega = d
        .omega(g.dim())?
        .ok_or_else(|| CliError::Precondition("the document has no `omega`".into()))?;
    let theta = match (flags.solve_lee, d.theta(g.dim())?) {
        (false, Some(t)) => t,
        _ => match lee_form_solve(&g, &omega)? {
            Some(lee) => {
                doc.output("lee_form", form(&lee.theta));
                lee.theta
            }
            None => {
                doc.status = "mismatch".into();
                doc.diagnostics.push("no 1-form θ satisfies dω = θ∧ω".into());
                doc.output("lee_form", Value::Null);
                return Ok(Report::json(&doc));
            }
        },
    };
    let s = verify_and_classify(&g, &omega, &theta)?;
    doc.output("structure", structure_json(&s));
    if !s.verified {
        doc.status = "mismatch".into();
        doc.diagnostics.push("the structure does not verify".into());
    } else if s.kind == Kind::FirstKind {
        let eta = dtheta_exact(&g, &omega, &theta)?;
        doc.output("dtheta_witness", eta.as_ref().map(form).unwrap_or(Value::Null));
    }
    Ok(Report::json(&doc))
}

pub fn raices_scan(n: usize, bound: i64, tol: f64) -> Result<Report, CliError> {
    let r = raices_oracle(n, bound, tol)?;
    let mut doc = ResultDocument::new("raices-scan");
    doc.input("n", n).input("bound", bound).input("tol", float(tol));
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| json!({ "m": v.m, "x0": float(v.x0), "moduli": floats(v.moduli.iter().copied()) }))
        .collect();
    doc.output("polynomials", r.polynomials)
        .output("repeated_real", r.repeated_real)
        .output("hypothesis", r.hypothesis)
        .output("violations", violations);
    if !r.violations.is_empty() {
        doc.status = "mismatch".into();
    }
    Ok(Report::json(&doc))
}

fn parse_rationals(s: &str) -> Result<Vec<ExactScalar>, CliError> {
    s.split(',').map(|x| scalar::parse(x).map_err(CliError::from)).collect()
}

pub const DEFAULT_ANGLES: [&str; 3] = ["1,2", "1/2,3/2", "1,0"];

pub fn nolattice(mu: &str, angles: &[String], step: f64, t_max: f64, floor: f64) -> Result<Report, CliError> {
    let mu = scalar::parse(mu)?;
    let mut doc = ResultDocument::new("nolattice-scan");
    doc.input("mu", rational(&mu))
        .input("angles", angles.to_vec())
        .input("step", float(step))
        .input("t_max", float(t_max))
        .input("floor", float(floor));
    let mut scans = Vec::new();
    let mut below = false;
    for a in angles {
        let spec = fi_family(&mu, &parse_rationals(a)?)?;
        let s = nolattice_scan(&spec, step, t_max)?;
        below |= s.min_residual <= floor;
        scans.push(json!({
            "family": s.label,
            "samples": s.samples,
            "min_residual": float(s.min_residual),
            "t_at_min": float(s.t_at_min),
            "min_residual_t_ge_0_1": float(s.min_residual_away_from_zero),
            "above_floor": s.min_residual > floor,
        }));
    }
    doc.output("scans", scans);
    if below {
        doc.status = "below_floor".into();
        doc.diagnostics
            .push("e^{tM} tends to the identity as t → 0, so the residual vanishes near t = 0".into());
    }
    Ok(Report::json(&doc))
}

pub fn dump_builtins() -> Report {
    let list: Vec<Value> = builtins()
        .into_iter()
        .map(|b| {
            json!({
                "id": b.id,
                "description": b.description,
                "document": serde_json::to_value(&b.document).expect("serializable"),
            })
        })
        .collect();
    let mut doc = ResultDocument::new("dump-builtins");
    doc.output("builtins", list);
    Report::json(&doc)
}
