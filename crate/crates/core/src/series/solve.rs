//! Exact linear solves over `Q[p, 1/p]` by fraction-free (Bareiss)
//! elimination, with back substitution in the fraction field.

use crate::algebra::{PrimeLaurent, PrimeRat};
use crate::error::{Error, Result};

/// Row-echelon form of `[a | b]` after fraction-free elimination.
struct Echelon {
    rows: Vec<Vec<PrimeLaurent>>,
    /// Pivot column of each of the first `rank` rows.
    pivots: Vec<usize>,
}

fn eliminate(mut rows: Vec<Vec<PrimeLaurent>>, ncols: usize) -> Result<Echelon> {
    let mut pivots = Vec::new();
    let mut prev = PrimeLaurent::one();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, piv);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..pivot_row.len() {
                let num = &(&pivot_row[c] * &row[j]) - &(&factor * &pivot_row[j]);
                row[j] = num.div_exact(&prev)?;
            }
            row[c] = PrimeLaurent::zero();
        }
        prev = rows[r][c].clone();
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Ok(Echelon { rows, pivots })
}

/// Rank of a matrix over `Q(p)`.
pub fn rank(a: &[Vec<PrimeLaurent>]) -> Result<usize> {
    let ncols = a.first().map_or(0, Vec::len);
    Ok(eliminate(a.to_vec(), ncols)?.pivots.len())
}

/// The unique `x` with `a x = b`, every entry of which must lie in `Q[p, 1/p]`.
///
/// `a` is given row by row; all rows have the same length.
pub fn solve_unique(a: &[Vec<PrimeLaurent>], b: &[PrimeLaurent]) -> Result<Vec<PrimeLaurent>> {
    assert_eq!(a.len(), b.len(), "one right-hand side per row");
    let unknowns = a.first().map_or(0, Vec::len);
    let rows: Vec<Vec<PrimeLaurent>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), unknowns, "ragged matrix");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let ech = eliminate(rows, unknowns)?;
    let rank = ech.pivots.len();
    if ech.rows[rank..].iter().any(|row| !row[unknowns].is_zero()) {
        return Err(Error::NoSolution);
    }
    if rank < unknowns {
        return Err(Error::NonUniqueSolution { rank, unknowns });
    }
    let mut x = vec![PrimeRat::zero(); unknowns];
    for i in (0..rank).rev() {
        let row = &ech.rows[i];
        let mut acc = PrimeRat::from(row[unknowns].clone());
        for j in i + 1..unknowns {
            if !row[j].is_zero() {
                acc = &acc - &(&PrimeRat::from(row[j].clone()) * &x[j]);
            }
        }
        x[i] = acc.checked_div(&PrimeRat::from(row[i].clone()))?;
    }
    x.iter().map(PrimeRat::to_laurent).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(c: &[i64]) -> PrimeLaurent {
        PrimeLaurent::from_int_coeffs(c)
    }

    #[test]
    fn two_by_two() {
        // [p 1; 1 p] x = [p^2 + 1, 2p]  ->  x = (p, 1)
        let a = vec![vec![lp(&[0, 1]), lp(&[1])], vec![lp(&[1]), lp(&[0, 1])]];
        let b = vec![lp(&[1, 0, 1]), lp(&[0, 2])];
        assert_eq!(solve_unique(&a, &b).unwrap(), vec![lp(&[0, 1]), lp(&[1])]);
    }

    #[test]
    fn overdetermined_consistent_and_not() {
        let a = vec![vec![lp(&[1])], vec![lp(&[0, 1])], vec![lp(&[-1, 1])]];
        let x = lp(&[3, 0, 1]);
        let b: Vec<_> = a.iter().map(|r| &r[0] * &x).collect();
        assert_eq!(solve_unique(&a, &b).unwrap(), vec![x]);
        let mut bad = b.clone();
        bad[2] = &bad[2] + &PrimeLaurent::one();
        assert_eq!(solve_unique(&a, &bad), Err(Error::NoSolution));
    }

    #[test]
    fn rank_deficient() {
        let a = vec![vec![lp(&[1]), lp(&[0, 1])], vec![lp(&[0, 2]), lp(&[0, 0, 2])]];
        let b = vec![lp(&[1]), lp(&[0, 2])];
        assert_eq!(solve_unique(&a, &b), Err(Error::NonUniqueSolution { rank: 1, unknowns: 2 }));
        assert_eq!(rank(&a).unwrap(), 1);
    }

    #[test]
    fn non_laurent_solution() {
        // (p - 1) x = 1
        let a = vec![vec![lp(&[-1, 1])]];
        assert_eq!(solve_unique(&a, &[PrimeLaurent::one()]), Err(Error::NotLaurent));
    }

    #[test]
    fn solution_with_negative_powers() {
        let a = vec![vec![lp(&[0, 0, 1])]];
        let b = vec![PrimeLaurent::one()];
        assert_eq!(solve_unique(&a, &b).unwrap(), vec![PrimeLaurent::p_pow(-2)]);
    }
}
