use solvlat_core::lcs::table1::table1;
use solvlat_core::models::{m6_family, named_4d, NAMED_4D_LABELS};
use solvlat_core::scalar::{self, frac, ExactScalar};

use crate::document::AlgebraDocument;
use crate::error::CliError;

pub struct Builtin {
    pub id: String,
    pub description: String,
    pub document: AlgebraDocument,
}

/// `r'4,μ,λ` becomes `rprime4_mu_lambda`.
pub fn slug(name: &str) -> String {
    name.chars()
        .map(|c| match c {
            'λ' => "lambda".to_string(),
            'μ' => "mu".to_string(),
            '\'' => "prime".to_string(),
            ',' => "_".to_string(),
            c => c.to_string(),
        })
        .collect()
}

fn default_params(arity: usize) -> Vec<ExactScalar> {
    [frac(1, 2), frac(1, 3)].into_iter().take(arity).collect()
}

fn table1_builtins() -> Vec<Builtin> {
    let mut out = Vec::new();
    for row in table1() {
        let g = row.algebra().expect("table algebra builds");
        for (i, c) in row.cells.iter().enumerate() {
            let id = format!("table1/{}/{i}", slug(row.name));
            out.push(Builtin {
                description: format!("{} with a {} structure", row.name, c.expected),
                document: AlgebraDocument::from_algebra(&id, &g, Some(&c.omega), Some(&c.theta)),
                id,
            });
        }
    }
    out
}

fn m6_builtin(n: usize) -> Result<Builtin, CliError> {
    let f = m6_family(n)?;
    let id = format!("m6/{n}");
    Ok(Builtin {
        description: format!("diagonal unimodular family, n = {n}, with ω and θ = (1/{n})f¹"),
        document: AlgebraDocument::from_spec(&id, &f.spec, Some(&f.omega), Some(&f.theta)),
        id,
    })
}

fn named_builtin(label: &str, params: &[ExactScalar]) -> Result<Builtin, CliError> {
    let g = named_4d(label, params)?;
    let p: Vec<String> = params.iter().map(scalar::format).collect();
    let id = if p.is_empty() {
        format!("named/{label}")
    } else {
        format!("named/{label}:{}", p.join(","))
    };
    Ok(Builtin {
        description: format!("4-dimensional algebra {label}"),
        document: AlgebraDocument::from_algebra(&id, &g, None, None),
        id,
    })
}

/// Every built-in dataset with sample parameters.
pub fn builtins() -> Vec<Builtin> {
    let mut out = table1_builtins();
    for n in 2..=6 {
        out.push(m6_builtin(n).expect("n ≥ 2"));
    }
    for (label, arity) in NAMED_4D_LABELS {
        if let Ok(b) = named_builtin(label, &default_params(arity)) {
            out.push(b);
        }
    }
    out
}

/// Resolves `table1/<row>/<cell>`, `m6/<n>` or `named/<label>[:p1,p2]`.
pub fn lookup(id: &str) -> Result<AlgebraDocument, CliError> {
    if let Some(n) = id.strip_prefix("m6/") {
        let n: usize = n.parse().map_err(|_| CliError::Parse(format!("bad m6 size in `{id}`")))?;
        return Ok(m6_builtin(n)?.document);
    }
    if let Some(rest) = id.strip_prefix("named/") {
        let (label, params) = match rest.split_once(':') {
            Some((l, p)) => (
                l,
                p.split(',').map(scalar::parse).collect::<Result<Vec<_>, _>>()?,
            ),
            None => (rest, Vec::new()),
        };
        return Ok(named_builtin(label, &params)?.document);
    }
    table1_builtins()
        .into_iter()
        .find(|b| b.id == id)
        .map(|b| b.document)
        .ok_or_else(|| CliError::Parse(format!("unknown builtin `{id}` (see dump-builtins)")))
}
