//! Summary table of root generated subalgebras: one row per concrete pi-system
//! `Σ_{j,k}` with its derived matrix written through `ξ`, `ζ`, `γ`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::iso::sigma_matrix;
use super::predicates::require_standing;
use super::recurrences::eta_sequences;
use crate::error::{Error, Result};
use crate::pi_systems::determinant;
use crate::root_core::{CartanType, Gcm2};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    /// `ab>=5` or `a=b=2`.
    pub case: String,
    /// Shape of the pi-system, e.g. `Σ_{2j+1,0}`.
    pub pattern: String,
    /// `any`, `a=b` or `a≠b`.
    pub subcase: String,
    pub j: usize,
    /// The concrete `(j, k)` of `Σ_{j,k}`.
    pub system: (usize, usize),
    pub symmetric: bool,
    #[serde(with = "crate::serde_int::matrix")]
    pub matrix: Vec<Vec<BigInt>>,
    pub cartan_type: CartanType,
}

fn gcm_matrix(c1: &BigInt, c2: &BigInt) -> Vec<Vec<BigInt>> {
    vec![vec![BigInt::from(2), -c1], vec![-c2, BigInt::from(2)]]
}

/// Rows for `j <= rows`: first every `Σ_{2j+1,0}`, then every `Σ_{2j,0}`.
///
/// For `a = b = 2` the table has exactly the two rows `Σ_{1,0}` and `Σ_{0,0}`.
/// For `b = 1` the pair `Σ_{1,0}` is not a pi-system and the first odd row is
/// realized by `Σ_{0,1}`, which has the same matrix.
///
/// Each matrix is built from the sequences and then compared with the one
/// computed from pairings, and each declared type with the determinant sign.
pub fn summary_table(g: &Gcm2, rows: usize) -> Result<Vec<TableRow>> {
    require_standing(g, "summary_table")?;
    let affine = g.ab() == 4;
    let rows = if affine { 0 } else { rows };
    let seq = eta_sequences(g, rows)?;
    let (case, declared) = if affine {
        ("a=b=2", CartanType::Affine)
    } else {
        ("ab>=5", CartanType::Hyperbolic)
    };

    let mut out = Vec::with_capacity(2 * (rows + 1));
    for j in 0..=rows {
        let system = if g.b() == 1 && j == 0 {
            (0, 1)
        } else {
            (2 * j + 1, 0)
        };
        out.push(TableRow {
            case: case.into(),
            pattern: "Σ_{2j+1,0}".into(),
            subcase: "any".into(),
            j,
            system,
            symmetric: true,
            matrix: gcm_matrix(&seq.zeta[j], &seq.zeta[j]),
            cartan_type: declared,
        });
    }
    let equal = g.a() == g.b();
    for j in 0..=rows {
        out.push(TableRow {
            case: case.into(),
            pattern: "Σ_{2j,0}".into(),
            subcase: if affine {
                "any"
            } else if equal {
                "a=b"
            } else {
                "a≠b"
            }
            .into(),
            j,
            system: (2 * j, 0),
            symmetric: equal,
            matrix: gcm_matrix(&seq.gamma[j], &seq.xi[j]),
            cartan_type: declared,
        });
    }

    for row in &out {
        let direct = sigma_matrix(g, row.system.0, row.system.1)?;
        if direct.entries != row.matrix {
            return Err(Error::Inconsistent(format!(
                "table row Σ_{{{},{}}} for {g} disagrees with its pairing matrix",
                row.system.0, row.system.1
            )));
        }
        let symmetric = row.matrix[0][1] == row.matrix[1][0];
        let from_det = CartanType::from_determinant(&determinant(&row.matrix));
        if symmetric != row.symmetric || from_det != row.cartan_type {
            return Err(Error::Inconsistent(format!(
                "table row Σ_{{{},{}}} for {g}: declared ({}, {}) but matrix gives ({}, {})",
                row.system.0, row.system.1, row.symmetric, row.cartan_type, symmetric, from_det
            )));
        }
    }
    Ok(out)
}
