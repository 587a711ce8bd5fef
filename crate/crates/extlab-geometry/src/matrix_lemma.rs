//! Row selection for full-column-rank matrices with an all-ones last row:
//! for any distinguished column j there are k-1 rows and a bijection onto
//! the other columns such that the selected row's entry differs between
//! column j and its paired column. Existence follows from the rank
//! hypothesis; the construction is a bipartite matching.

use num::One;

use crate::error::GeomError;
use crate::matching::maximum_matching;
use crate::matrix::RationalMatrix;

/// Rows paired with the columns other than `column`; pairs are emitted in
/// ascending paired-column order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixLemmaRows {
    pub column: usize,
    /// (row index, paired column index); entry (r, c) satisfies
    /// M[r][column] != M[r][c], rows pairwise distinct.
    pub pairs: Vec<(usize, usize)>,
}

impl MatrixLemmaRows {
    pub fn rows(&self) -> Vec<usize> {
        self.pairs.iter().map(|&(r, _)| r).collect()
    }

    /// Re-checks distinctness of rows and the entry inequalities.
    pub fn verify(&self, m: &RationalMatrix) -> bool {
        let mut seen = std::collections::HashSet::new();
        let mut cols = std::collections::HashSet::new();
        for &(r, c) in &self.pairs {
            if r >= m.rows() || c >= m.cols() || c == self.column {
                return false;
            }
            if !seen.insert(r) || !cols.insert(c) {
                return false;
            }
            if m.get(r, self.column) == m.get(r, c) {
                return false;
            }
        }
        self.pairs.len() == m.cols() - 1
    }
}

pub fn matrix_lemma_rows(m: &RationalMatrix, column: usize) -> Result<MatrixLemmaRows, GeomError> {
    let k = m.cols();
    if column >= k {
        return Err(GeomError::CubeIndexOutOfRange { index: column, len: k });
    }
    if m.rows() == 0 || !(0..k).all(|j| m.get(m.rows() - 1, j).is_one()) {
        return Err(GeomError::MissingOnesRow);
    }
    if m.rank() < k {
        return Err(GeomError::RankDeficient);
    }
    let others: Vec<usize> = (0..k).filter(|&c| c != column).collect();
    // The ones row never differs from column j, so it contributes no edges;
    // the remaining rows always suffice when the rank hypothesis holds.
    let adj: Vec<Vec<usize>> = others
        .iter()
        .map(|&c| {
            (0..m.rows())
                .filter(|&r| m.get(r, column) != m.get(r, c))
                .collect()
        })
        .collect();
    let matched = maximum_matching(m.rows(), &adj);
    if matched.iter().any(Option::is_none) {
        return Err(GeomError::Internal(
            "no row system despite full column rank".into(),
        ));
    }
    let pairs = others
        .iter()
        .zip(&matched)
        .map(|(&c, r)| (r.unwrap(), c))
        .collect();
    Ok(MatrixLemmaRows { column, pairs })
}
