//! Arrangements shared by the benchmarks.

use linfold_core::Arrangement;

/// Three concurrent lines and a fourth line in general position.
pub fn example() -> Arrangement {
    Arrangement::from_int_rows(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).unwrap()
}

pub fn generic(k: usize, n: usize) -> Arrangement {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            if i < k {
                (0..k).map(|j| (i == j) as i64).collect()
            } else {
                (0..k).map(|j| ((i - k + 1) * (j + 1)).pow(j as u32) as i64).collect()
            }
        })
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    Arrangement::from_int_rows(k, &refs).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_is_reduced_and_essential() {
        for (k, n) in [(3, 5), (3, 6), (4, 6)] {
            let a = generic(k, n);
            assert!(a.is_reduced() && a.is_essential(), "{k} {n}");
        }
    }
}
