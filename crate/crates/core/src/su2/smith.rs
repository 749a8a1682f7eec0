//! Abelianization via the Smith normal form of the exponent-sum matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::presentation::GroupPresentation;

/// Diagonal of the Smith normal form of `m` (nonnegative, each dividing
/// the next), of length `min(rows, cols)`.
pub fn smith_diagonal(m: &[Vec<i64>], cols: usize) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| {
            assert_eq!(r.len(), cols);
            r.iter().map(|&v| BigInt::from(v)).collect()
        })
        .collect();
    let rows = a.len();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // pivot: smallest nonzero |entry| in the remaining block
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| a[i][j].abs())
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                let f = a[i][t].div_floor(&a[t][t]);
                if !f.is_zero() {
                    for j in t..cols {
                        let d = &f * &a[t][j];
                        a[i][j] -= d;
                    }
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let f = a[t][j].div_floor(&a[t][t]);
                if !f.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        let d = &f * &row[t];
                        row[j] -= d;
                    }
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        diag.push(a[t][t].abs());
    }
    // a diagonal matrix has the same Smith form after gcd/lcm normalization
    let n = diag.len();
    for i in 0..n {
        for j in i + 1..n {
            let (g, l) = (diag[i].gcd(&diag[j]), diag[i].lcm(&diag[j]));
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag.resize(rows.min(cols).max(n), BigInt::zero());
    diag
}

/// Invariant factors of `H_1`: unit factors dropped, one `0` per free
/// rank, and `[1]` for the trivial group.
pub fn abelianization_smith(pres: &GroupPresentation) -> Vec<u64> {
    let cols = pres.generator_count;
    let diag = smith_diagonal(&pres.exponent_matrix(), cols);
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let mut out: Vec<u64> = diag
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .map(|d| d.to_u64().expect("invariant factor fits in u64"))
        .collect();
    out.extend(std::iter::repeat_n(0, cols - rank));
    if out.is_empty() {
        out.push(1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(n: usize, rels: &[&[i32]]) -> GroupPresentation {
        GroupPresentation::new(n, rels.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn known_smith_forms() {
        assert_eq!(abelianization_smith(&pres(1, &[&[1; 5]])), vec![5]);
        assert_eq!(
            abelianization_smith(&pres(2, &[&[1, 1, 1, 1, 1, -2, -2]])),
            vec![0]
        );
        assert_eq!(abelianization_smith(&pres(2, &[])), vec![0, 0]);
        assert_eq!(abelianization_smith(&pres(1, &[&[1]])), vec![1]);
    }

    #[test]
    fn known_diagonals() {
        let d = smith_diagonal(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3);
        assert_eq!(d, vec![2.into(), 6.into(), 12.into()]);
        // Z/2 + Z/3 = Z/6
        assert_eq!(
            abelianization_smith(&pres(2, &[&[1, 1], &[2, 2, 2]])),
            vec![6]
        );
        // Z/2 + Z/4 keeps both factors
        assert_eq!(
            abelianization_smith(&pres(2, &[&[1, 1], &[2, 2, 2, 2]])),
            vec![2, 4]
        );
        // commutator relator: Z^2
        assert_eq!(
            abelianization_smith(&pres(2, &[&[1, 2, -1, -2]])),
            vec![0, 0]
        );
    }
}
