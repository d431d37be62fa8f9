//! Independent exact linear algebra used to cross-check the factorization:
//! fraction-free elimination over the integers and elimination mod 2.

use ndarray::Array2;

/// Determinant by fraction-free (Bareiss) elimination.
pub fn bareiss_det(m: &Array2<i64>) -> Option<i128> {
    let n = m.nrows();
    if n != m.ncols() {
        return None;
    }
    if n == 0 {
        return Some(1);
    }
    let mut a: Vec<Vec<i128>> = m.rows().into_iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    Some(sign * a[n - 1][n - 1])
}

/// Rank over the rationals by integer row reduction, dividing each reduced
/// row by the gcd of its entries to keep numbers small.
pub fn rational_rank(m: &Array2<i64>) -> usize {
    let mut a: Vec<Vec<i128>> = m.rows().into_iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(p, rank);
        for i in rank + 1..rows {
            if a[i][c] == 0 {
                continue;
            }
            let (pivot, factor) = (a[rank][c], a[i][c]);
            for j in c..cols {
                a[i][j] = a[i][j] * pivot - a[rank][j] * factor;
            }
            let g = a[i].iter().fold(0i128, |g, &x| gcd(g, x));
            if g > 1 {
                a[i].iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Rank over the field with two elements.
pub fn rank_mod2(m: &Array2<i64>) -> usize {
    let mut a: Vec<Vec<bool>> =
        m.rows().into_iter().map(|r| r.iter().map(|&x| x.rem_euclid(2) == 1).collect()).collect();
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| a[i][c]) else { continue };
        a.swap(p, rank);
        for i in 0..rows {
            if i != rank && a[i][c] {
                for j in c..cols {
                    let bit = a[rank][j];
                    a[i][j] ^= bit;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Whether `m x = v` has a rational solution.
pub fn rationally_solvable(m: &Array2<i64>, v: &[i64]) -> bool {
    let mut aug = Array2::zeros((m.nrows(), m.ncols() + 1));
    aug.slice_mut(ndarray::s![.., ..m.ncols()]).assign(m);
    for (i, &x) in v.iter().enumerate() {
        aug[[i, m.ncols()]] = x;
    }
    rational_rank(m) == rational_rank(&aug)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn determinants() {
        assert_eq!(bareiss_det(&array![[2, 1], [1, 1]]), Some(1));
        assert_eq!(bareiss_det(&array![[0, 1], [1, 0]]), Some(-1));
        assert_eq!(bareiss_det(&array![[1, 2, 3], [4, 5, 6], [7, 8, 10]]), Some(-3));
        assert_eq!(bareiss_det(&array![[1, 1], [1, 1]]), Some(0));
        assert_eq!(bareiss_det(&Array2::<i64>::zeros((2, 3))), None);
    }

    #[test]
    fn ranks() {
        let m = array![[1, 1, 0], [0, 1, 1], [1, 0, 1]];
        assert_eq!(rational_rank(&m), 3);
        assert_eq!(rank_mod2(&m), 2);
        assert_eq!(rational_rank(&array![[2, 4], [1, 2]]), 1);
        assert_eq!(rational_rank(&Array2::<i64>::zeros((0, 3))), 0);
    }

    #[test]
    fn solvability() {
        let m = array![[1, 1], [1, 1]];
        assert!(rationally_solvable(&m, &[1, 1]));
        assert!(!rationally_solvable(&m, &[1, 0]));
    }
}
