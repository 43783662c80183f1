//! Checkers for Betti tables, the kernel of `φ_A`, Cohen-Macaulayness,
//! primary decompositions of line arrangements and linearity scans.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::arrangement::{circuits3, p_of_arrangement, random_arrangement, rank2_flats, Arrangement, RandomSpec};
use crate::error::{Error, Result};
use crate::exactalg::{serialize_rationals, LinearForm, Polynomial, Rational};
use crate::fold::fold_ideal;
use crate::groebner::{minimal_free_resolution, BettiTable, Ideal};
use crate::linalg;

fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim_ℚ ℚ[z_1..z_v]_d`.
fn poly_dim(v: usize, d: u32) -> u64 {
    if v == 0 {
        return u64::from(d == 0);
    }
    binomial(d as usize + v - 1, v - 1) as u64
}

/// Ranks of the linear resolution of `R/I_{n-2}(A)` given by the formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredictedBetti {
    pub n: usize,
    pub m: usize,
    pub p: usize,
    pub k: usize,
    /// At degree `n - 2`.
    pub b1: usize,
    /// At degree `n - 1`.
    pub b2: usize,
    /// At degree `n`.
    pub b3: usize,
}

impl PredictedBetti {
    pub fn table(&self) -> BettiTable {
        let n = self.n as u32;
        BettiTable::from_entries([((0, 0), 1), ((1, n - 2), self.b1), ((2, n - 1), self.b2), ((3, n), self.b3)])
    }

    /// `b1 - b2 + b3`; equals 1 because the Hilbert numerator vanishes at `T = 1`.
    pub fn alternating_sum(&self) -> i64 {
        self.b1 as i64 - self.b2 as i64 + self.b3 as i64
    }
}

pub fn predicted_betti(a: &Arrangement) -> Result<PredictedBetti> {
    a.require_reduced()?;
    let n = a.len();
    if n < 2 {
        return Err(Error::InvalidInput("need at least two forms".into()));
    }
    let m = binomial(n, 2);
    let p = p_of_arrangement(a)?;
    let (mi, ni, pi) = (m as i64, n as i64, p as i64);
    let b = [mi - pi, 2 * mi - ni - 2 * pi, mi - ni - pi + 1];
    if b.iter().any(|&x| x < 0) {
        return Err(Error::InvalidInput(format!("negative predicted rank {b:?}")));
    }
    Ok(PredictedBetti { n, m, p, k: a.nvars(), b1: b[0] as usize, b2: b[1] as usize, b3: b[2] as usize })
}

#[derive(Clone, Debug, Serialize)]
pub struct MainTheoremReport {
    pub predicted: PredictedBetti,
    pub computed: BettiTable,
    pub linear: bool,
    pub regularity: Option<i64>,
    pub ranks_match: bool,
    /// Hilbert function from the predicted ranks against the ideal, degrees `0..=n+2`.
    pub hilbert_match: bool,
    pub complex_ok: bool,
    pub pass: bool,
}

/// Resolves `R/I_{n-2}(A)` and compares it with [`predicted_betti`].
pub fn verify_main_theorem(a: &Arrangement) -> Result<MainTheoremReport> {
    let predicted = predicted_betti(a)?;
    let n = a.len();
    let ideal = fold_ideal(a, n - 2).ideal;
    if n == 2 {
        let unit = ideal.is_unit()?;
        return Ok(MainTheoremReport {
            predicted,
            computed: BettiTable::default(),
            linear: true,
            regularity: None,
            ranks_match: unit,
            hilbert_match: unit,
            complex_ok: true,
            pass: unit,
        });
    }
    let (res, computed) = minimal_free_resolution(&ideal)?;
    let shift = n as u32 - 3;
    let linear = computed.is_single_strand(shift);
    let regularity = computed.regularity();
    let ranks_match = computed == predicted.table();
    let d_max = n as u32 + 2;
    let hf: Vec<BigInt> = ideal.hilbert_function(d_max)?.into_iter().map(BigInt::from).collect();
    let hilbert_match = predicted.table().hilbert_function(a.nvars(), d_max) == hf;
    let complex_ok = res.is_complex() && res.is_minimal();
    let pass = linear && ranks_match && hilbert_match && complex_ok && regularity == Some(n as i64 - 3);
    Ok(MainTheoremReport { predicted, computed, linear, regularity, ranks_match, hilbert_match, complex_ok, pass })
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiKernelReport {
    pub d_max: u32,
    /// `dim Λ(A)_d`.
    pub lambda: Vec<u64>,
    /// `dim (I_{n-2}/I_{n-1})_{d+n-2}`.
    pub image: Vec<u64>,
    pub kernel: Vec<i64>,
    /// `p(A) · dim ℚ[k-2 vars]_d`.
    pub expected: Vec<u64>,
    /// Every circuit tuple maps to zero exactly.
    pub circuits_in_kernel: bool,
    pub certified: String,
    pub pass: bool,
}

/// Degree-wise comparison of `ker φ_A` with `Λ_3(A)`, `d = 0..=d_max`
/// (default `2n`).
pub fn phi_kernel_check(a: &Arrangement, d_max: Option<u32>) -> Result<PhiKernelReport> {
    a.require_reduced()?;
    let n = a.len();
    let k = a.nvars();
    if n < 2 || k < 2 {
        return Err(Error::InvalidInput("need n >= 2 and k >= 2".into()));
    }
    let d_max = d_max.unwrap_or(2 * n as u32);
    let p = p_of_arrangement(a)?;
    let m = binomial(n, 2) as u64;
    let top = d_max + n as u32 - 2;
    let hf_low = fold_ideal(a, n - 2).ideal.hilbert_function(top)?;
    let hf_high = fold_ideal(a, n - 1).ideal.hilbert_function(top)?;
    let mut lambda = Vec::new();
    let mut image = Vec::new();
    let mut kernel = Vec::new();
    let mut expected = Vec::new();
    for d in 0..=d_max {
        let e = (d + n as u32 - 2) as usize;
        let t = poly_dim(k - 2, d);
        lambda.push(m * t);
        image.push(hf_high[e] - hf_low[e]);
        kernel.push((m * t) as i64 - (hf_high[e] - hf_low[e]) as i64);
        expected.push(p as u64 * t);
    }
    let circuits_in_kernel = circuit_elements_vanish(a)?;
    let pass = circuits_in_kernel && kernel.iter().zip(&expected).all(|(&x, &y)| x == y as i64);
    Ok(PhiKernelReport {
        d_max,
        lambda,
        image,
        kernel,
        expected,
        circuits_in_kernel,
        certified: format!("HF-certified up to degree {d_max}"),
        pass,
    })
}

/// `f_{ij} = Π_{u ∉ {i,j}} ℓ_u`.
pub(crate) fn complement_product(a: &Arrangement, skip: &[usize]) -> Polynomial {
    let ring = a.ring();
    a.forms()
        .iter()
        .enumerate()
        .filter(|(u, _)| !skip.contains(u))
        .fold(Polynomial::one(ring), |acc, (_, f)| acc.mul_unchecked(&f.to_polynomial(ring)))
}

/// `c_{i3} f_{i1 i2} + c_{i2} f_{i1 i3} + c_{i1} f_{i2 i3} = 0` for every circuit.
fn circuit_elements_vanish(a: &Arrangement) -> Result<bool> {
    for c in circuits3(a)? {
        let [i1, i2, i3] = c.indices;
        let [c1, c2, c3] = &c.coeffs;
        let sum = complement_product(a, &[i1, i2])
            .scale(c3)
            .add_scaled(&complement_product(a, &[i1, i3]), c2, None)
            .add_scaled(&complement_product(a, &[i2, i3]), c1, None);
        if !sum.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct CmReport {
    pub rank: usize,
    pub p: usize,
    pub cm_predicted: bool,
    pub pdim_predicted: usize,
    pub pdim_computed: Option<usize>,
    pub height: usize,
    pub cm_computed: bool,
    pub pass: bool,
}

/// Predicts Cohen-Macaulayness of `R/I_{n-2}(A)` from `rank` and `p(A)` and
/// compares with the computed projective dimension and height. Needs `n >= 3`.
pub fn cm_criterion(a: &Arrangement) -> Result<CmReport> {
    let n = a.len();
    if n < 3 {
        return Err(Error::InvalidInput("CM criterion needs n >= 3".into()));
    }
    let pb = predicted_betti(a)?;
    let rank = a.rank();
    let full = binomial(n - 1, 2);
    let cm_predicted = if rank == 2 { pb.p == full } else { pb.p == 0 };
    let pdim_predicted = if pb.p == full { 2 } else { 3 };
    let ideal = fold_ideal(a, n - 2).ideal;
    let (_, table) = minimal_free_resolution(&ideal)?;
    let pdim_computed = table.projective_dimension();
    let height = a.nvars() - ideal.krull_dimension()?;
    let cm_computed = pdim_computed == Some(height);
    let pass = cm_predicted == cm_computed && pdim_computed == Some(pdim_predicted);
    Ok(CmReport { rank, p: pb.p, cm_predicted, pdim_predicted, pdim_computed, height, cm_computed, pass })
}

#[derive(Clone, Debug, Serialize)]
pub struct TopFoldReport {
    pub n: usize,
    /// Number of distinct forms up to proportionality.
    pub s: usize,
    pub expected: BettiTable,
    pub computed: BettiTable,
    pub pass: bool,
}

/// `R/I_{n-1}(Σ)` has ranks `s` at degree `n-1` and `s-1` at degree `n`.
pub fn verify_a_n_minus_1(s: &Arrangement) -> Result<TopFoldReport> {
    let n = s.len();
    if n < 2 {
        return Err(Error::InvalidInput("need at least two forms".into()));
    }
    let sn = s.reduced_support().support.len();
    let expected = BettiTable::from_entries([((0, 0), 1), ((1, n as u32 - 1), sn), ((2, n as u32), sn - 1)]);
    let (_, computed) = minimal_free_resolution(&fold_ideal(s, n - 1).ideal)?;
    let pass = computed == expected;
    Ok(TopFoldReport { n, s: sn, expected, computed, pass })
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim4Report {
    pub rank: usize,
    /// `Σ n_u - r` over all rank-2 flats.
    pub flat_sum: usize,
    pub n: usize,
    pub pass: bool,
}

/// For rank at least 3: `Σ_u n_u - r >= n` over the rank-2 flats.
pub fn claim4_check(a: &Arrangement) -> Result<Claim4Report> {
    let rank = a.rank();
    if rank < 3 {
        return Err(Error::InvalidInput(format!("needs rank >= 3, got {rank}")));
    }
    let flats = rank2_flats(a)?;
    let flat_sum = flats.iter().map(|f| f.size()).sum::<usize>() - flats.len();
    Ok(Claim4Report { rank, flat_sum, n: a.len(), pass: flat_sum >= a.len() })
}

/// Intersection point of at least two lines of a line arrangement in `P^2`.
#[derive(Clone, Debug, Serialize)]
pub struct SingularPoint {
    /// First nonzero coordinate is 1.
    #[serde(serialize_with = "serialize_rationals")]
    pub point: Vec<Rational>,
    pub lines: Vec<usize>,
    pub multiplicity: usize,
    /// Two independent forms vanishing at the point.
    pub forms: [LinearForm; 2],
}

impl SingularPoint {
    pub fn ideal(&self, a: &Arrangement) -> Ideal {
        let ring = a.ring();
        Ideal::new(ring, self.forms.iter().map(|f| f.to_polynomial(ring)).collect())
    }
}

fn require_plane(a: &Arrangement) -> Result<()> {
    if a.nvars() != 3 {
        return Err(Error::InvalidInput(format!("needs 3 variables, got {}", a.nvars())));
    }
    a.require_reduced()?;
    a.require_essential()
}

/// Intersection points of the lines, one per rank-2 flat.
pub fn singular_locus(a: &Arrangement) -> Result<Vec<SingularPoint>> {
    require_plane(a)?;
    let mut out = Vec::new();
    for flat in rank2_flats(a)? {
        let rows: Vec<Vec<Rational>> = flat.witness.iter().map(|f| f.coeffs().to_vec()).collect();
        let ns = linalg::nullspace(&rows, 3);
        debug_assert_eq!(ns.len(), 1);
        let v = &ns[0];
        let lead = v.iter().find(|c| !num_traits::Zero::is_zero(*c)).cloned().unwrap();
        let point = v.iter().map(|c| c / &lead).collect();
        out.push(SingularPoint { point, multiplicity: flat.size(), lines: flat.members, forms: flat.witness });
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimaryDecompositionReport {
    pub points: Vec<SingularPoint>,
    /// Exponents `n_j - 2` of the nontrivial components.
    pub exponents: Vec<usize>,
    pub components_contain_ideal: bool,
    pub decomposition_holds: bool,
    pub saturation_holds: bool,
    pub pass: bool,
}

/// `I_{n-2}(A) = ∩ I(P_j)^{n_j-2} ∩ m^{n-2}` and `I_{n-2}(A)^sat = ∩ I(P_j)^{n_j-2}`.
pub fn primary_decomposition_check(a: &Arrangement) -> Result<PrimaryDecompositionReport> {
    let points = singular_locus(a)?;
    let n = a.len();
    if n < 3 {
        return Err(Error::InvalidInput("needs at least three lines".into()));
    }
    let ring = a.ring();
    let ideal = fold_ideal(a, n - 2).ideal;
    let mut sat = Ideal::unit(ring);
    let mut exponents = Vec::new();
    let mut components_contain_ideal = true;
    for pt in &points {
        let e = pt.multiplicity - 2;
        exponents.push(e);
        if e == 0 {
            continue;
        }
        let base = pt.ideal(a);
        let comp = (1..e).fold(base.clone(), |acc, _| acc.product(&base));
        components_contain_ideal &= comp.contains_ideal(&ideal)?;
        sat = sat.intersect(&comp)?;
    }
    let mpow = Ideal::maximal_power(ring, n as u32 - 2);
    components_contain_ideal &= mpow.contains_ideal(&ideal)?;
    let decomposition_holds = sat.intersect(&mpow)?.equals(&ideal)?;
    let saturation_holds = ideal.saturate()?.equals(&sat)?;
    let pass = components_contain_ideal && decomposition_holds && saturation_holds;
    Ok(PrimaryDecompositionReport {
        points,
        exponents,
        components_contain_ideal,
        decomposition_holds,
        saturation_holds,
        pass,
    })
}

/// Which arrangements a scan visits.
#[derive(Clone, Debug)]
pub enum Family {
    /// All multisets of size `1..=max_n` drawn from the given forms.
    Multisets {
        base: Arrangement,
        max_n: usize,
    },
    /// `count` seeded random arrangements; case `i` uses seed `seed + i`.
    Random {
        spec: RandomSpec,
        count: usize,
        seed: u64,
    },
    Explicit(Vec<Arrangement>),
}

impl Family {
    pub fn members(&self) -> Vec<Arrangement> {
        match self {
            Family::Multisets { base, max_n } => {
                let mut out = Vec::new();
                for n in 1..=*max_n {
                    let mut idx = vec![0usize; n];
                    loop {
                        out.push(base.select(&idx));
                        let Some(p) = (0..n).rev().find(|&p| idx[p] + 1 < base.len()) else {
                            break;
                        };
                        let v = idx[p] + 1;
                        for q in idx.iter_mut().skip(p) {
                            *q = v;
                        }
                    }
                }
                out
            }
            Family::Random { spec, count, seed } => {
                (0..*count as u64).map(|i| random_arrangement(spec, seed + i)).collect()
            }
            Family::Explicit(v) => v.clone(),
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Family::Random { seed, .. } => Some(*seed),
            _ => None,
        }
    }
}

/// Fold indices scanned for each arrangement of size `n`.
#[derive(Clone, Copy, Debug)]
pub enum FoldRange {
    /// `1..=n`.
    All,
    /// `a` with `lo <= a <= hi`, clipped to `1..=n`.
    Between(usize, usize),
    /// The single index `n - c`.
    TopMinus(usize),
}

impl FoldRange {
    fn values(self, n: usize) -> Vec<usize> {
        match self {
            FoldRange::All => (1..=n).collect(),
            FoldRange::Between(lo, hi) => (lo.max(1)..=hi.min(n)).collect(),
            FoldRange::TopMinus(c) if c < n => vec![n - c],
            FoldRange::TopMinus(_) => Vec::new(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanCase {
    pub index: usize,
    pub forms: Vec<LinearForm>,
    pub a: usize,
    pub betti: Option<BettiTable>,
    pub linear: Option<bool>,
    /// Two-variable cases must be linear.
    pub asserted: bool,
    /// Flat inequality for rank >= 3 reduced inputs.
    pub claim4: Option<bool>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub seed: Option<u64>,
    pub cases: Vec<ScanCase>,
    pub nonlinear: usize,
    pub errors: usize,
    pub pass: bool,
}

fn scan_case(index: usize, s: &Arrangement, a: usize) -> ScanCase {
    let claim4 = (s.is_reduced() && s.rank() >= 3).then(|| claim4_check(s).map(|r| r.pass).unwrap_or(false));
    let mut case = ScanCase {
        index,
        forms: s.forms().to_vec(),
        a,
        betti: None,
        linear: None,
        asserted: s.nvars() == 2,
        claim4,
        error: None,
    };
    match minimal_free_resolution(&fold_ideal(s, a).ideal) {
        Ok((_, t)) => {
            case.linear = Some(t.is_single_strand(a as u32 - 1));
            case.betti = Some(t);
        }
        Err(e) => case.error = Some(e.to_string()),
    }
    case
}

/// Resolves `I_a(Σ)` for every member and fold index, in parallel; cases
/// keep their enumeration order.
pub fn conjecture_scan(family: &Family, range: FoldRange) -> ScanReport {
    let work: Vec<(Arrangement, usize)> = family
        .members()
        .into_iter()
        .flat_map(|s| {
            let n = s.len();
            range.values(n).into_iter().map(move |a| (s.clone(), a))
        })
        .collect();
    let cases: Vec<ScanCase> = work.par_iter().enumerate().map(|(i, (s, a))| scan_case(i, s, *a)).collect();
    let nonlinear = cases.iter().filter(|c| c.linear == Some(false)).count();
    let errors = cases.iter().filter(|c| c.error.is_some()).count();
    let pass = cases.iter().all(|c| (!c.asserted || c.linear == Some(true)) && c.claim4 != Some(false));
    ScanReport { seed: family.seed(), cases, nonlinear, errors, pass }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn arr(k: usize, rows: &[&[i64]]) -> Arrangement {
        Arrangement::from_int_rows(k, rows).unwrap()
    }

    fn example() -> Arrangement {
        arr(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]])
    }

    fn generic4() -> Arrangement {
        arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]])
    }

    fn pencil() -> Arrangement {
        arr(2, &[&[1, 0], &[0, 1], &[1, 1]])
    }

    #[test]
    fn predicted_examples() {
        let p = predicted_betti(&pencil()).unwrap();
        assert_eq!((p.b1, p.b2, p.b3), (2, 1, 0));
        let p = predicted_betti(&example()).unwrap();
        assert_eq!((p.b1, p.b2, p.b3), (5, 6, 2));
        let p = predicted_betti(&generic4()).unwrap();
        assert_eq!((p.b1, p.b2, p.b3), (6, 8, 3));
        for a in [pencil(), example(), generic4()] {
            assert_eq!(predicted_betti(&a).unwrap().alternating_sum(), 1);
        }
    }

    #[test]
    fn main_theorem_examples() {
        for a in [pencil(), example(), generic4()] {
            let r = verify_main_theorem(&a).unwrap();
            assert!(r.pass, "{a:?}: {r:?}");
        }
        let g5 = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[1, 2, 3]]);
        let r = verify_main_theorem(&g5).unwrap();
        assert!(r.pass);
        assert_eq!((r.computed.get(1, 3), r.computed.get(2, 4), r.computed.get(3, 5)), (10, 15, 6));
    }

    #[test]
    fn kernel_examples() {
        let r = phi_kernel_check(&example(), Some(3)).unwrap();
        assert!(r.pass);
        assert_eq!(r.kernel, vec![1, 1, 1, 1]);
        let r = phi_kernel_check(&generic4(), None).unwrap();
        assert!(r.pass);
        assert!(r.kernel.iter().all(|&x| x == 0));
        let r2 = arr(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]]);
        let r = phi_kernel_check(&r2, None).unwrap();
        assert!(r.pass);
        assert_eq!(r.kernel[0], 3);
        assert!(r.kernel[1..].iter().all(|&x| x == 0));
    }

    #[test]
    fn cm_examples() {
        let r = cm_criterion(&arr(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]])).unwrap();
        assert!(r.pass && r.cm_predicted && r.pdim_computed == Some(2));
        let r = cm_criterion(&generic4()).unwrap();
        assert!(r.pass && r.cm_predicted && r.pdim_computed == Some(3) && r.height == 3);
        let r = cm_criterion(&example()).unwrap();
        assert!(r.pass && !r.cm_predicted && r.pdim_computed == Some(3) && r.height == 2);
    }

    #[test]
    fn top_fold_examples() {
        let r = verify_a_n_minus_1(&arr(2, &[&[1, 0], &[1, 0], &[0, 1]])).unwrap();
        assert!(r.pass);
        assert_eq!(r.computed.get(1, 2), 2);
        assert_eq!(r.computed.get(2, 3), 1);
        assert!(verify_a_n_minus_1(&pencil()).unwrap().pass);
        let r = verify_a_n_minus_1(&arr(2, &[&[1, 0], &[1, 0]])).unwrap();
        assert!(r.pass);
        assert_eq!(r.computed.projective_dimension(), Some(1));
    }

    #[test]
    fn claim4_examples() {
        assert!(claim4_check(&example()).unwrap().pass);
        assert_eq!(claim4_check(&arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap().flat_sum, 3);
        assert!(claim4_check(&pencil()).is_err());
    }

    #[test]
    fn singular_locus_example() {
        let pts = singular_locus(&example()).unwrap();
        let mut got: Vec<(Vec<Rational>, usize)> = pts.iter().map(|p| (p.point.clone(), p.multiplicity)).collect();
        got.sort();
        let mut want = vec![
            (vec![rat(0), rat(0), rat(1)], 3),
            (vec![rat(0), rat(1), rat(0)], 2),
            (vec![rat(1), rat(0), rat(0)], 2),
            (vec![rat(1), rat(-1), rat(0)], 2),
        ];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(singular_locus(&generic4()).unwrap().len(), 6);
        assert!(singular_locus(&pencil()).is_err());
    }

    #[test]
    fn primary_decomposition_examples() {
        let r = primary_decomposition_check(&example()).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(primary_decomposition_check(&generic4()).unwrap().pass);
        let triple5 = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1], &[1, 2, 3]]);
        let r = primary_decomposition_check(&triple5).unwrap();
        assert!(r.pass);
        assert_eq!(r.exponents.iter().filter(|&&e| e > 0).count(), 1);
    }

    #[test]
    fn multiset_family_counts() {
        let f = Family::Multisets { base: pencil(), max_n: 3 };
        // multisets of size 1, 2, 3 from 3 forms: 3 + 6 + 10
        assert_eq!(f.members().len(), 19);
    }

    #[test]
    fn scan_two_variables_is_linear() {
        let base = arr(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]]);
        let r = conjecture_scan(&Family::Multisets { base, max_n: 4 }, FoldRange::All);
        assert!(r.pass);
        assert_eq!(r.nonlinear, 0);
        assert_eq!(r.errors, 0);
    }
}
