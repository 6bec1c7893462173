//! Built-in list of LCS structures on the 4-dimensional almost abelian
//! algebras, one row per algebra with first and/or second kind witnesses.

use num_traits::One;

use super::{verify_and_classify, Kind, LcsStructure};
use crate::exterior::{KForm, LieAlgebra};
use crate::models::named_4d;
use crate::scalar::{frac, int, ExactScalar};
use crate::Result;

#[derive(Clone, Debug)]
pub struct Table1Cell {
    pub expected: Kind,
    pub omega: KForm,
    pub theta: KForm,
}

#[derive(Clone, Debug)]
pub struct Table1Row {
    /// Display name, e.g. `r4,μ,-1`.
    pub name: &'static str,
    /// Label understood by [`named_4d`].
    pub label: &'static str,
    pub params: Vec<ExactScalar>,
    pub cells: Vec<Table1Cell>,
}

impl Table1Row {
    pub fn algebra(&self) -> Result<LieAlgebra> {
        named_4d(self.label, &self.params)
    }
}

/// Per-cell outcome of [`check_table1`].
#[derive(Clone, Debug)]
pub struct CellCheck {
    pub row: &'static str,
    pub expected: Kind,
    pub structure: LcsStructure,
}

impl CellCheck {
    pub fn passed(&self) -> bool {
        self.structure.verified && self.structure.kind == self.expected
    }
}

// 1-based (i, j, c) terms of c e^i∧e^j
fn omega(terms: &[(usize, usize, ExactScalar)]) -> KForm {
    KForm::from_terms(4, 2, terms.iter().map(|(i, j, c)| (vec![i - 1, j - 1], c.clone()))).expect("valid 2-form")
}

fn theta(terms: &[(usize, ExactScalar)]) -> KForm {
    KForm::from_terms(4, 1, terms.iter().map(|(i, c)| (vec![i - 1], c.clone()))).expect("valid 1-form")
}

fn cell(expected: Kind, w: KForm, t: KForm) -> Table1Cell {
    Table1Cell {
        expected,
        omega: w,
        theta: t,
    }
}

/// The dataset with default sample parameters.
pub fn table1() -> Vec<Table1Row> {
    table1_with(&frac(1, 2), &frac(1, 3), &int(2))
}

/// The dataset for given sample parameters: `lambda` is used for the
/// one-parameter families, `(mu, lambda_pair)` for the two-parameter ones.
/// Callers must respect the side conditions of each row (for instance
/// `λ ≠ −1` for `r3,λ×R`).
pub fn table1_with(lambda: &ExactScalar, mu: &ExactScalar, lambda_pair: &ExactScalar) -> Vec<Table1Row> {
    use Kind::{FirstKind as I, SecondKind as II};
    let o = ExactScalar::one;
    let l = lambda.clone();
    let m = mu.clone();
    let lp = lambda_pair.clone();
    vec![
        Table1Row {
            name: "h3xR",
            label: "h3xR",
            params: vec![],
            cells: vec![cell(I, omega(&[(1, 2, o()), (3, 4, o())]), theta(&[(4, -o())]))],
        },
        Table1Row {
            name: "n4",
            label: "n4",
            params: vec![],
            cells: vec![cell(I, omega(&[(1, 3, o()), (2, 4, o())]), theta(&[(2, o())]))],
        },
        Table1Row {
            name: "r3,λxR",
            label: "r3_lambda_xR",
            params: vec![l.clone()],
            cells: vec![
                cell(
                    I,
                    omega(&[(1, 2, int(2)), (1, 3, o() + &l), (2, 4, -o()), (3, 4, -o())]),
                    theta(&[(1, o()), (4, o())]),
                ),
                cell(II, omega(&[(1, 4, o()), (2, 3, -o())]), theta(&[(1, -(o() + &l))])),
            ],
        },
        Table1Row {
            name: "r3,-1xR",
            label: "r3_lambda_xR",
            params: vec![-o()],
            cells: vec![
                cell(I, omega(&[(1, 2, int(2)), (2, 4, -o()), (3, 4, -o())]), theta(&[(1, o()), (4, o())])),
                cell(II, omega(&[(1, 2, o()), (3, 4, -o())]), theta(&[(1, o())])),
            ],
        },
        Table1Row {
            name: "r4,μ,λ",
            label: "r4_mu_lambda",
            params: vec![m.clone(), lp.clone()],
            cells: vec![cell(II, omega(&[(1, 3, o()), (2, 4, o())]), theta(&[(1, -(&lp + o()))]))],
        },
        Table1Row {
            name: "r4,μ,-1",
            label: "r4_mu_lambda",
            params: vec![m.clone(), -o()],
            cells: vec![cell(II, omega(&[(1, 2, o()), (3, 4, o())]), theta(&[(1, o() - &m)]))],
        },
        Table1Row {
            name: "r4,1,-1",
            label: "r4_mu_lambda",
            params: vec![o(), -o()],
            cells: vec![cell(II, omega(&[(1, 4, o()), (2, 3, o())]), theta(&[(1, int(-2))]))],
        },
        Table1Row {
            name: "r3xR",
            label: "r3xR",
            params: vec![],
            cells: vec![
                cell(
                    I,
                    omega(&[(1, 2, o()), (1, 3, int(2)), (2, 4, -o()), (3, 4, -o())]),
                    theta(&[(4, o())]),
                ),
                cell(II, omega(&[(1, 4, o()), (2, 3, -o())]), theta(&[(1, int(-2))])),
            ],
        },
        Table1Row {
            name: "r4,λ",
            label: "r4_lambda",
            params: vec![l.clone()],
            cells: vec![cell(II, omega(&[(1, 2, o()), (3, 4, -o())]), theta(&[(1, int(-2) * &l)]))],
        },
        Table1Row {
            name: "r4,0",
            label: "r4_lambda",
            params: vec![int(0)],
            cells: vec![
                cell(I, omega(&[(1, 2, -o()), (2, 4, o()), (3, 4, o())]), theta(&[(4, o())])),
                cell(II, omega(&[(1, 3, o()), (2, 4, o())]), theta(&[(1, -o())])),
            ],
        },
        Table1Row {
            name: "r4",
            label: "r4",
            params: vec![],
            cells: vec![cell(II, omega(&[(1, 2, o()), (3, 4, o())]), theta(&[(1, int(-2))]))],
        },
        Table1Row {
            name: "r'3,λxR",
            label: "r3prime_lambda_xR",
            params: vec![l.clone()],
            cells: vec![
                cell(
                    I,
                    omega(&[(1, 2, -o()), (1, 3, int(2) * &l), (3, 4, -o())]),
                    theta(&[(1, l.clone()), (4, o())]),
                ),
                cell(II, omega(&[(1, 4, o()), (2, 3, -o())]), theta(&[(1, int(-2) * &l)])),
            ],
        },
        Table1Row {
            name: "r'3,0xR",
            label: "r3prime_lambda_xR",
            params: vec![int(0)],
            cells: vec![cell(I, omega(&[(1, 2, o()), (3, 4, o())]), theta(&[(4, o())]))],
        },
        Table1Row {
            name: "r'4,μ,λ",
            label: "r4prime_mu_lambda",
            params: vec![m, lp.clone()],
            cells: vec![cell(II, omega(&[(1, 2, o()), (3, 4, o())]), theta(&[(1, int(-2) * &lp)]))],
        },
    ]
}

/// Verifies and classifies every populated cell.
pub fn check_table1_rows(rows: &[Table1Row]) -> Result<Vec<CellCheck>> {
    let mut out = Vec::new();
    for row in rows {
        let g = row.algebra()?;
        for c in &row.cells {
            out.push(CellCheck {
                row: row.name,
                expected: c.expected,
                structure: verify_and_classify(&g, &c.omega, &c.theta)?,
            });
        }
    }
    Ok(out)
}

pub fn check_table1() -> Result<Vec<CellCheck>> {
    check_table1_rows(&table1())
}
