//! Robinson–Schensted row insertion and its inverse.

use super::tableau::Tableau;
use crate::composition::Permutation;
use crate::error::{Error, Result};

/// Inserts `x` into `rows`, returning the row where a new cell was created.
fn row_insert(rows: &mut Vec<Vec<usize>>, mut x: usize) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        let pos = row.partition_point(|&v| v < x);
        if pos == row.len() {
            row.push(x);
            return r;
        }
        std::mem::swap(&mut row[pos], &mut x);
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// `(P(σ), Q(σ))`: insertion and recording tableaux.
pub fn rsk(sigma: &Permutation) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (i, &x) in sigma.word().iter().enumerate() {
        let r = row_insert(&mut p, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(i + 1);
    }
    (
        Tableau::from_rows_unchecked(p),
        Tableau::from_rows_unchecked(q),
    )
}

/// Insertion tableau only.
pub fn insertion_tableau(word: &[usize]) -> Tableau {
    let mut p: Vec<Vec<usize>> = Vec::new();
    for &x in word {
        row_insert(&mut p, x);
    }
    Tableau::from_rows_unchecked(p)
}

/// The unique `σ` with `rsk(σ) = (p, q)`.
pub fn inverse_rsk(p: &Tableau, q: &Tableau) -> Result<Permutation> {
    // revalidate: callers may build tableaux through deserialization
    let p = Tableau::new(p.rows().to_vec())?;
    let q = Tableau::new(q.rows().to_vec())?;
    if p.shape() != q.shape() {
        return Err(Error::InvalidTableau(format!(
            "shapes differ: {:?} vs {:?}",
            p.shape(),
            q.shape()
        )));
    }
    let n = p.size();
    let mut rows = p.rows().to_vec();
    let q_rows = q.row_of();
    let mut word = vec![0; n];
    for k in (1..=n).rev() {
        let mut r = q_rows[k];
        let mut x = rows[r].pop().expect("recorded cell exists");
        if rows[r].is_empty() {
            rows.pop();
        }
        while r > 0 {
            r -= 1;
            let row = &mut rows[r];
            // largest entry smaller than x gets bumped back up
            let pos = row.partition_point(|&v| v < x) - 1;
            std::mem::swap(&mut row[pos], &mut x);
        }
        word[k - 1] = x;
    }
    Permutation::new(word)
}
