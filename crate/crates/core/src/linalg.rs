use num_bigint::BigInt;
use num_traits::Zero;

/// Rank over the rationals of a list of integer row vectors, by fraction-free
/// (Bareiss) elimination on arbitrary-precision integers.
pub fn rank<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| row.iter().map(|&x| x.into()).collect())
        .collect();
    let Some(cols) = m.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    let mut prev_pivot = BigInt::from(1);
    for col in 0..cols {
        let Some(pivot_row) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for i in rank + 1..m.len() {
            let factor = m[i][col].clone();
            for j in col..cols {
                let v = (&pivot * &m[i][j] - &factor * &m[rank][j]) / &prev_pivot;
                m[i][j] = v;
            }
        }
        prev_pivot = pivot;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
