use serde_json::json;

use linfold_core::arrangement::{circuits3, min_distance, p_of_arrangement, rank2_flats, RandomSpec};
use linfold_core::exactalg::{format_rational, rat};
use linfold_core::fold::{check_power_identity, fold_ideal, top_factorization_check};
use linfold_core::ot2::{circuits, ot2_report, sylvester_form, sym_check, sym_ideal, FiberRing};
use linfold_core::verify::{
    cm_criterion, conjecture_scan, phi_kernel_check, primary_decomposition_check, verify_a_n_minus_1,
    verify_main_theorem, Family, FoldRange,
};
use linfold_core::{minimal_free_resolution, Arrangement, Error, LinearForm, Polynomial, Result};

use crate::report::{forms_text, one_based, poly_json, polys_json, Report};

pub fn flats(a: &Arrangement, r: &mut Report) -> Result<()> {
    let flats = rank2_flats(a)?;
    let p = p_of_arrangement(a)?;
    for f in &flats {
        r.line(format!("flat {:?} size {}", one_based(&f.members), f.size()));
    }
    r.line(format!("p = {p}"));
    let members: Vec<Vec<usize>> = flats.iter().map(|f| one_based(&f.members)).collect();
    r.set("flats", members);
    r.set("p", p);
    Ok(())
}

pub fn circuits_cmd(a: &Arrangement, r: &mut Report) -> Result<()> {
    let three: Vec<_> = circuits3(a)?
        .into_iter()
        .map(|c| {
            let coeffs: Vec<String> = c.coeffs.iter().map(format_rational).collect();
            r.line(format!("circuit {:?} coefficients {:?}", one_based(&c.indices), coeffs));
            json!({ "indices": one_based(&c.indices), "coefficients": coeffs })
        })
        .collect();
    let all: Vec<_> = circuits(a)?
        .into_iter()
        .map(|(idx, c)| json!({ "indices": one_based(&idx), "coefficients": c.iter().map(format_rational).collect::<Vec<_>>() }))
        .collect();
    r.line(format!("{} circuits of size 3, {} in total", three.len(), all.len()));
    r.set("circuits3", three);
    r.set("circuits", all);
    Ok(())
}

pub fn fold(a: &Arrangement, k: usize, r: &mut Report) -> Result<()> {
    let f = fold_ideal(a, k);
    for (sub, g) in f.subsets.iter().zip(f.gens()) {
        r.line(format!("f{:?} = {}", one_based(sub), g.render()));
    }
    let gens: Vec<_> = f
        .subsets
        .iter()
        .zip(f.gens())
        .map(|(s, g)| json!({ "subset": one_based(s), "generator": poly_json(g) }))
        .collect();
    r.set("a", k);
    r.set("generators", gens);
    Ok(())
}

pub fn betti(a: &Arrangement, k: usize, r: &mut Report) -> Result<()> {
    let ideal = fold_ideal(a, k).ideal;
    let (_, table) = minimal_free_resolution(&ideal)?;
    let linear = k == 0 || table.is_single_strand(k as u32 - 1);
    r.line(table.render());
    r.line(format!("linear: {linear}"));
    r.set("a", k);
    r.set("betti", &table);
    r.set("linear", linear);
    r.set("regularity", table.regularity());
    Ok(())
}

pub fn verify_main(a: &Arrangement, r: &mut Report) -> Result<()> {
    let rep = verify_main_theorem(a)?;
    let p = &rep.predicted;
    r.line(format!("n = {}, m = {}, p = {}", p.n, p.m, p.p));
    r.line(format!("predicted ranks ({}, {}, {})", p.b1, p.b2, p.b3));
    r.line(rep.computed.render());
    r.assert("linear resolution", rep.linear);
    r.assert("ranks match prediction", rep.ranks_match);
    r.assert("hilbert function matches", rep.hilbert_match);
    r.assert("resolution is a minimal complex", rep.complex_ok);
    r.assert("theorem holds", rep.pass);
    r.set("report", &rep);
    Ok(())
}

pub fn verify_k2(a: &Arrangement, only: Option<usize>, r: &mut Report) -> Result<()> {
    if a.nvars() != 2 {
        return Err(Error::InvalidInput(format!("verify-k2 needs 2 variables, got {}", a.nvars())));
    }
    let range = match only {
        Some(k) => FoldRange::Between(k, k),
        None => FoldRange::All,
    };
    let scan = conjecture_scan(&Family::Explicit(vec![a.clone()]), range);
    for c in &scan.cases {
        r.line(format!("a = {}: linear {}", c.a, c.linear == Some(true)));
        r.assert(&format!("I_{} has a linear resolution", c.a), c.linear == Some(true));
    }
    r.set("cases", &scan.cases);
    if a.is_reduced() && a.len() >= 2 {
        let d = min_distance(a)?;
        let pw = check_power_identity(a)?;
        r.line(format!("minimum distance {d}"));
        r.assert("minimum distance is n - 1", d == a.len() - 1);
        r.assert("I_b equals m^b for b <= n - 1", pw.pass);
        r.set("power_identity", &pw);
    }
    Ok(())
}

pub fn verify_top(a: &Arrangement, r: &mut Report) -> Result<()> {
    let rep = verify_a_n_minus_1(a)?;
    r.line(rep.computed.render());
    r.assert("ranks (s, s-1) at twists (n-1, n)", rep.pass);
    r.assert("top fold factors through the reduced support", top_factorization_check(a)?);
    r.set("report", &rep);
    Ok(())
}

pub fn kernel(a: &Arrangement, dmax: Option<u32>, r: &mut Report) -> Result<()> {
    let rep = phi_kernel_check(a, dmax)?;
    r.line(format!("kernel   {:?}", rep.kernel));
    r.line(format!("expected {:?}", rep.expected));
    r.line(rep.certified.clone());
    r.assert("circuit tuples lie in the kernel", rep.circuits_in_kernel);
    r.assert("kernel dimensions match", rep.pass);
    r.set("report", &rep);
    Ok(())
}

pub fn cm(a: &Arrangement, r: &mut Report) -> Result<()> {
    let rep = cm_criterion(a)?;
    r.line(format!(
        "rank {}, p = {}: predicted CM {}, computed pdim {:?}, height {}",
        rep.rank, rep.p, rep.cm_predicted, rep.pdim_computed, rep.height
    ));
    r.assert("criterion agrees with computation", rep.pass);
    r.set("report", &rep);
    Ok(())
}

pub fn primary(a: &Arrangement, r: &mut Report) -> Result<()> {
    let rep = primary_decomposition_check(a)?;
    for (p, e) in rep.points.iter().zip(&rep.exponents) {
        let coords: Vec<String> = p.point.iter().map(format_rational).collect();
        r.line(format!("point ({}) on lines {:?}, exponent {e}", coords.join(" : "), one_based(&p.lines)));
    }
    r.assert("components contain the ideal", rep.components_contain_ideal);
    r.assert("intersection equals the ideal", rep.decomposition_holds);
    r.assert("saturation equals the point part", rep.saturation_holds);
    r.set("report", &rep);
    Ok(())
}

pub fn ot2(a: &Arrangement, r: &mut Report) -> Result<()> {
    let rep = ot2_report(a)?;
    for g in &rep.minimal_generators {
        r.line(g.render());
    }
    r.line(format!("matches_standard_plus_pairings: {}", rep.matches_standard_plus_pairings));
    r.assert("standard generators lie in the ideal", rep.standard_in_ideal);
    r.assert("paired circuit elements lie in the ideal", rep.pairings_in_ideal);
    r.set("minimal_generators", polys_json(&rep.minimal_generators));
    r.set("linear", polys_json(&rep.linear));
    r.set("quadratic", polys_json(&rep.quadratic));
    r.set("pairings", polys_json(&rep.pairings));
    r.set("matches_standard_plus_pairings", rep.matches_standard_plus_pairings);
    r.set("variables", rep.ideal.ring().names());
    Ok(())
}

pub fn sym(a: &Arrangement, r: &mut Report) -> Result<()> {
    let rep = sym_check(a)?;
    r.line(format!("minimal generators {} (expected {})", rep.minimal_count, rep.expected_count));
    r.assert("generators vanish under t -> f", rep.all_vanish);
    r.assert("generators have t-degree one", rep.t_degree_one);
    r.assert("minimal count is n(n-2) - p", rep.minimal_count == rep.expected_count);
    r.assert("linear syzygies are generated", rep.strand_generated);
    r.set("report", &rep);
    Ok(())
}

/// `kind` is one of L, A, B, C and `triple` is one-based.
#[derive(Clone, Debug)]
pub struct RowSpec {
    pub kind: char,
    pub triple: [usize; 3],
}

pub fn parse_row(s: &str) -> std::result::Result<RowSpec, String> {
    let (kind, rest) = s.split_once(':').ok_or_else(|| format!("row `{s}`: expected KIND:i,j,k"))?;
    let kind = match kind.trim() {
        "L" | "A" | "B" | "C" => kind.trim().chars().next().unwrap(),
        other => return Err(format!("row kind `{other}` is not one of L, A, B, C")),
    };
    let idx = parse_indices(rest)?;
    let triple: [usize; 3] = idx.try_into().map_err(|_| format!("row `{s}`: need three indices"))?;
    Ok(RowSpec { kind, triple })
}

fn parse_indices(s: &str) -> std::result::Result<Vec<usize>, String> {
    s.split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(0) | Err(_) => Err(format!("`{t}` is not a positive index")),
            Ok(i) => Ok(i),
        })
        .collect()
}

pub fn sylvester(a: &Arrangement, rows: &[RowSpec], seq: &[usize], r: &mut Report) -> Result<()> {
    let n = a.len();
    if seq.iter().chain(rows.iter().flat_map(|x| x.triple.iter())).any(|&i| i == 0 || i > n) {
        return Err(Error::InvalidInput(format!("index out of range 1..={n}")));
    }
    let g = sym_ideal(a)?;
    let mut polys: Vec<Polynomial> = Vec::new();
    for row in rows {
        let mut t = row.triple.map(|i| i - 1);
        t.sort_unstable();
        let found = match row.kind {
            'L' => g.linear.iter().find(|(k, _)| *k == t).map(|(_, p)| p),
            'A' => g.a.get(&t),
            'B' => g.b.get(&t),
            _ => g.c.get(&t),
        };
        let p = found.ok_or_else(|| Error::InvalidInput(format!("no {} generator for {:?}", row.kind, row.triple)))?;
        polys.push(p.clone());
    }
    let forms: Vec<LinearForm> = seq.iter().map(|&i| a.forms()[i - 1].clone()).collect();
    let f = sylvester_form(a, &polys, &forms)?;
    let fr = FiberRing::new(n);
    r.line(format!("determinant = {}", f.determinant.render()));
    r.line(format!("monomial factor = {}", Polynomial::monomial(&fr.t, f.monomial_factor.clone(), rat(1)).render()));
    r.line(format!("cofactor = {}", f.cofactor.render()));
    r.assert("determinant vanishes under t -> f", f.determinant_in_ideal);
    r.set("content", f.content.iter().map(|row| polys_json(row)).collect::<Vec<_>>());
    r.set("determinant", poly_json(&f.determinant));
    r.set("monomial_factor", f.monomial_factor.exponents());
    r.set("cofactor", poly_json(&f.cofactor));
    r.set("cofactor_in_ideal", f.cofactor_in_ideal);
    Ok(())
}

pub enum ScanFamily {
    Multisets { base: Arrangement, max_n: usize },
    Random { k: usize, n: usize, count: usize, seed: u64 },
}

pub fn parse_range(s: &str) -> std::result::Result<FoldRange, String> {
    let bad = || format!("range `{s}`: expected all, top-minus:C or between:LO:HI");
    let parts: Vec<&str> = s.split(':').collect();
    let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
    match parts.as_slice() {
        ["all"] => Ok(FoldRange::All),
        ["top-minus", c] => Ok(FoldRange::TopMinus(num(c)?)),
        ["between", lo, hi] => Ok(FoldRange::Between(num(lo)?, num(hi)?)),
        _ => Err(bad()),
    }
}

pub fn scan(family: ScanFamily, range: FoldRange, r: &mut Report) -> Result<()> {
    let fam = match family {
        ScanFamily::Multisets { base, max_n } => Family::Multisets { base, max_n },
        ScanFamily::Random { k, n, count, seed } => {
            if k == 0 || n == 0 {
                return Err(Error::InvalidInput("random scans need k >= 1 and n >= 1".into()));
            }
            r.seed = Some(seed);
            Family::Random { spec: RandomSpec::new(k, n), count, seed }
        }
    };
    let rep = conjecture_scan(&fam, range);
    r.line(format!("{} cases, {} nonlinear, {} errors", rep.cases.len(), rep.nonlinear, rep.errors));
    for c in rep.cases.iter().filter(|c| c.linear == Some(false) || c.error.is_some()) {
        let forms: Vec<String> = c.forms.iter().map(|f| f.render_vector()).collect();
        r.line(format!(
            "case {}: a = {}, forms [{}], linear {:?}, error {:?}",
            c.index,
            c.a,
            forms.join("; "),
            c.linear,
            c.error
        ));
    }
    if let Some(e) = rep.cases.iter().find_map(|c| c.error.as_ref()) {
        if e.contains("budget") {
            return Err(Error::Budget(e.clone()));
        }
    }
    r.assert("two-variable cases are linear and flat inequality holds", rep.pass);
    r.set("report", &rep);
    Ok(())
}

pub fn describe(a: &Arrangement, r: &mut Report) {
    r.set("forms", forms_text(a));
    r.set("n", a.len());
    r.set("k", a.nvars());
}
