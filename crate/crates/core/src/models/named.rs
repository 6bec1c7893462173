use crate::exterior::LieAlgebra;
use crate::scalar::{int, ExactScalar};
use crate::{Error, Result};

/// Canonical labels of the 4-dimensional almost abelian algebras carrying
/// LCS structures, with the number of rational parameters each takes.
pub const NAMED_4D_LABELS: [(&str, usize); 9] = [
    ("h3xR", 0),
    ("n4", 0),
    ("r3_lambda_xR", 1),
    ("r4_mu_lambda", 2),
    ("r3xR", 0),
    ("r4_lambda", 1),
    ("r4", 0),
    ("r3prime_lambda_xR", 1),
    ("r4prime_mu_lambda", 2),
];

fn canonical(label: &str) -> Option<&'static str> {
    let key: String = label
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .replace('⊕', "x")
        .replace('×', "x")
        .replace('\'', "prime")
        .replace('′', "prime")
        .to_ascii_lowercase();
    let key = key.replace("+r", "xr");
    let found = match key.as_str() {
        "h3xr" => "h3xR",
        "n4" => "n4",
        "r3_lambda_xr" | "r3lambdaxr" | "r3λxr" | "r3,λxr" => "r3_lambda_xR",
        "r4_mu_lambda" | "r4mulambda" | "r4μλ" | "r4,μ,λ" => "r4_mu_lambda",
        "r3xr" => "r3xR",
        "r4_lambda" | "r4lambda" | "r4λ" | "r4,λ" => "r4_lambda",
        "r4" => "r4",
        "r3prime_lambda_xr" | "r3primelambdaxr" | "r3primeλxr" | "r3prime,λxr" => "r3prime_lambda_xR",
        "r4prime_mu_lambda" | "r4primemulambda" | "r4primeμλ" | "r4prime,μ,λ" => "r4prime_mu_lambda",
        _ => return None,
    };
    Some(found)
}

/// Builds one of the named 4-dimensional algebras. Basis `e₁..e₄` is
/// `0..4`, with `e₁` acting on the abelian ideal.
pub fn named_4d(label: &str, params: &[ExactScalar]) -> Result<LieAlgebra> {
    let name = canonical(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
    let arity = NAMED_4D_LABELS.iter().find(|(l, _)| *l == name).map(|(_, a)| *a).unwrap();
    if params.len() != arity {
        return Err(Error::Precondition(format!(
            "{name} takes {arity} parameter(s), got {}",
            params.len()
        )));
    }
    let p = |i: usize| params[i].clone();
    let one = || int(1);
    // (i, j, k, c): [e_i, e_j] gets c e_k, 1-based as in the usual tables
    let entries: Vec<(usize, usize, usize, ExactScalar)> = match name {
        "h3xR" => vec![(1, 2, 3, one())],
        "n4" => vec![(1, 2, 3, one()), (1, 3, 4, one())],
        "r3_lambda_xR" => vec![(1, 2, 2, one()), (1, 3, 3, p(0))],
        "r4_mu_lambda" => vec![(1, 2, 2, one()), (1, 3, 3, p(0)), (1, 4, 4, p(1))],
        "r3xR" => vec![(1, 2, 2, one()), (1, 3, 2, one()), (1, 3, 3, one())],
        "r4_lambda" => vec![(1, 2, 2, one()), (1, 3, 3, p(0)), (1, 4, 3, one()), (1, 4, 4, p(0))],
        "r4" => vec![
            (1, 2, 2, one()),
            (1, 3, 2, one()),
            (1, 3, 3, one()),
            (1, 4, 3, one()),
            (1, 4, 4, one()),
        ],
        "r3prime_lambda_xR" => vec![(1, 2, 2, p(0)), (1, 2, 3, -one()), (1, 3, 2, one()), (1, 3, 3, p(0))],
        "r4prime_mu_lambda" => vec![
            (1, 2, 2, p(0)),
            (1, 3, 3, p(1)),
            (1, 3, 4, -one()),
            (1, 4, 3, one()),
            (1, 4, 4, p(1)),
        ],
        _ => unreachable!(),
    };
    LieAlgebra::from_structure_constants(4, entries.into_iter().map(|(i, j, k, c)| (i - 1, j - 1, k - 1, c)))?
        .with_labels((1..=4).map(|i| format!("e{i}")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    #[test]
    fn n4_brackets() {
        let g = named_4d("n4", &[]).unwrap();
        assert_eq!(g.bracket_basis(0, 1), vec![int(0), int(0), int(1), int(0)]);
        assert_eq!(g.bracket_basis(0, 2), vec![int(0), int(0), int(0), int(1)]);
        assert_eq!(g.brackets().len(), 2);
    }

    #[test]
    fn all_labels_are_valid_algebras() {
        for (label, arity) in NAMED_4D_LABELS {
            let params = vec![frac(1, 3); arity];
            let g = named_4d(label, &params).unwrap();
            assert!(g.validate().jacobi_ok, "{label}");
        }
    }

    #[test]
    fn aliases_and_errors() {
        assert!(named_4d("h3⊕R", &[]).is_ok());
        assert!(named_4d("r3'λ⊕R", &[int(1)]).is_ok());
        assert!(matches!(named_4d("sl2", &[]), Err(Error::UnknownLabel(_))));
        assert!(named_4d("r4", &[int(1)]).is_err());
    }

    #[test]
    fn r3_minus_one_unimodular() {
        assert!(named_4d("r3_lambda_xR", &[int(-1)]).unwrap().validate().unimodular);
        assert!(!named_4d("r3_lambda_xR", &[int(2)]).unwrap().validate().unimodular);
    }

    #[test]
    fn r4_mu_lambda_unimodular_iff() {
        for (mu, lambda) in [(frac(1, 2), frac(-3, 2)), (frac(1, 2), frac(1, 2)), (int(-1), int(0))] {
            let g = named_4d("r4_mu_lambda", &[mu.clone(), lambda.clone()]).unwrap();
            let expected = lambda == -(int(1) + &mu);
            assert_eq!(g.validate().unimodular, expected);
        }
    }
}
