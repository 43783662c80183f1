use super::Arrangement;
use crate::error::{Error, Result};
use crate::linalg;

/// Minimum Hamming distance of the length-`n`, dimension-`k` code whose
/// generator matrix has the forms as columns.
///
/// A codeword is a linear functional evaluated on the forms, so its weight is
/// `n` minus the number of forms it kills; the kernel is a hyperplane of the
/// dual space. Hence `d = n - max |{i : l_i in H}|` over hyperplanes `H`
/// spanned by forms, and it suffices to scan the spans of independent
/// `(k-1)`-subsets of the reduced support.
pub fn min_distance(s: &Arrangement) -> Result<usize> {
    let n = s.len();
    let k = s.nvars();
    if n == 0 || k == 0 {
        return Err(Error::InvalidInput("minimum distance needs n >= 1 and k >= 1".into()));
    }
    let rank = s.rank();
    if rank < k {
        return Err(Error::NotEssential { rank, nvars: k });
    }
    if k == 1 {
        return Ok(n);
    }
    let support = s.reduced_support();
    let forms = support.support.forms();
    let m = forms.len();
    let mut best = 0usize;
    let mut chosen = Vec::with_capacity(k - 1);
    fn rec(
        start: usize,
        need: usize,
        chosen: &mut Vec<usize>,
        forms: &[crate::exactalg::LinearForm],
        mult: &[usize],
        best: &mut usize,
    ) {
        if need == 0 {
            let rows: Vec<_> = chosen.iter().map(|&i| forms[i].coeffs().to_vec()).collect();
            let base = linalg::rank(&rows);
            if base != chosen.len() {
                return;
            }
            let mut count = 0;
            for (j, f) in forms.iter().enumerate() {
                let mut r2 = rows.clone();
                r2.push(f.coeffs().to_vec());
                if linalg::rank(&r2) == base {
                    count += mult[j];
                }
            }
            *best = (*best).max(count);
            return;
        }
        for i in start..forms.len() {
            if forms.len() - i < need {
                break;
            }
            chosen.push(i);
            // prune dependent prefixes early
            let rows: Vec<_> = chosen.iter().map(|&c| forms[c].coeffs().to_vec()).collect();
            if linalg::rank(&rows) == chosen.len() {
                rec(i + 1, need - 1, chosen, forms, mult, best);
            }
            chosen.pop();
        }
    }
    rec(0, k - 1, &mut chosen, forms, &support.multiplicities, &mut best);
    debug_assert!(m >= k);
    Ok(n - best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{LinearForm, Ring};

    /// Brute force over all subsets: the largest subset of rank <= k-1.
    fn min_distance_brute(s: &Arrangement) -> usize {
        let n = s.len();
        let k = s.nvars();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let rows: Vec<_> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| s.forms()[i].coeffs().to_vec()).collect();
            if linalg::rank(&rows) < k {
                best = best.max(rows.len());
            }
        }
        n - best
    }

    #[test]
    fn rank_two_reduced_gives_m_minus_one() {
        for m in 2..=6i64 {
            let rows: Vec<Vec<i64>> = (0..m).map(|i| vec![1, i]).collect();
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let a = Arrangement::from_int_rows(2, &refs).unwrap();
            assert_eq!(min_distance(&a).unwrap(), m as usize - 1);
        }
    }

    #[test]
    fn generic_rank_three_gives_n_minus_two() {
        let a = Arrangement::from_int_rows(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[1, 2, 3]]).unwrap();
        assert_eq!(min_distance(&a).unwrap(), 3);
        assert_eq!(min_distance_brute(&a), 3);
    }

    #[test]
    fn repeated_form() {
        let a = Arrangement::from_int_rows(2, &[&[1, 0], &[1, 0], &[0, 1]]).unwrap();
        assert_eq!(min_distance(&a).unwrap(), 1);
    }

    #[test]
    fn matches_brute_force_on_mixed_examples() {
        let cases: Vec<Vec<&[i64]>> = vec![
            vec![&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]],
            vec![&[1, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]],
            vec![&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 1, 0, 0], &[0, 0, 1, 1]],
        ];
        for rows in cases {
            let a = Arrangement::from_int_rows(rows[0].len(), &rows).unwrap();
            assert_eq!(min_distance(&a).unwrap(), min_distance_brute(&a), "{rows:?}");
        }
    }

    #[test]
    fn non_essential_rejected() {
        let a = Arrangement::new(
            Ring::standard(3),
            vec![LinearForm::from_ints(&[1, 0, 0]), LinearForm::from_ints(&[0, 1, 0])],
        )
        .unwrap();
        assert!(matches!(min_distance(&a), Err(Error::NotEssential { rank: 2, nvars: 3 })));
    }
}
