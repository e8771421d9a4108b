//! Shared checks for the integration, property and acceptance targets.
//!
//! Every check returns `Ok(count)` with the number of identities verified, or
//! `Err(description)` naming the first failing instance, so the same code can
//! drive `#[test]` functions, proptest bodies and the acceptance report.

#![allow(dead_code)]

use std::path::{Path, PathBuf};

use hypersurface_hh::cochain::{
    fermat_primitive, hoch_diff_eval, zeta_rules_check, BasicOp, Cochain, CochainExpr, LocalAlgebra,
};
use hypersurface_hh::exactla::int;
use hypersurface_hh::koszul::{
    alternating_variables, contract_diff, contraction_cohomology, contraction_op, full_universe, inclusion,
    operator_map, pi_iota_zeta, wedge_diff, wedge_op, FilteredChart, GradedMap, PolyRing, Pos,
    Quotient, Slot,
};
use hypersurface_hh::poly::{monomials_of_degree, partial, Monomial, Poly, RingDesc};
use proptest::prelude::*;

/// A polynomial from the fixture corpus.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub polynomial: String,
    pub n: usize,
}

impl CorpusEntry {
    pub fn ring(&self) -> RingDesc {
        RingDesc::parse(&self.polynomial, self.n).unwrap_or_else(|e| panic!("{}: {e}", self.name))
    }
}

pub fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// Polynomials of one fixture file, in file order.
pub fn corpus_file(file: &str) -> Vec<CorpusEntry> {
    let path = fixture_dir().join(file);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let doc: serde_json::Value = serde_json::from_str(&text).expect("fixture file is JSON");
    doc.as_array()
        .expect("fixture file is a list")
        .iter()
        .map(|f| CorpusEntry {
            name: f["name"].as_str().expect("name").to_string(),
            polynomial: f["polynomial"].as_str().expect("polynomial").to_string(),
            n: f["n"].as_u64().expect("n") as usize,
        })
        .collect()
}

/// The whole fixture corpus (all files), each polynomial once.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut seen = std::collections::BTreeSet::new();
    ["table1.json", "examples56.json", "singular.json"]
        .iter()
        .flat_map(|f| corpus_file(f))
        .filter(|e| seen.insert((e.polynomial.clone(), e.n)))
        .collect()
}

fn agree(a: &GradedMap, b: &GradedMap) -> bool {
    a.domain == b.domain
        && a.codomain == b.codomain
        && a.matrix.add(&b.matrix.scale(&int(-1))).map(|m| m.is_zero()).unwrap_or(false)
}

fn slots(n: usize, max_degree: i32) -> Vec<Slot> {
    let mut out = Vec::new();
    for p in -(n as i32 + 1)..=0 {
        for m in 0..=max_degree {
            out.push(Slot::new(p, m));
        }
    }
    out
}

/// `∂^c_u ∘ ∂^c_u = 0` and `∂^∧_v ∘ ∂^∧_v = 0` on `K(u; S)` for the canonical pair.
pub fn check_square_zero(ring: &RingDesc, max_degree: i32) -> Result<usize, String> {
    let ctx = Quotient { ring };
    let pos = Pos::canonical(ring);
    let uni = full_universe(ring.n);
    let g = ring.d - 1;
    let mut count = 0;
    for s in slots(ring.n, max_degree) {
        if s.position + 2 <= 0 {
            let first = contract_diff(&ctx, &pos.u, &uni, s);
            let second = contract_diff(&ctx, &pos.u, &uni, Slot::new(s.position + 1, s.degree + g));
            if !second.after(&first).is_zero() {
                return Err(format!("contraction squared is nonzero at {s:?}"));
            }
            count += 1;
        }
        if s.position - 2 >= -(ring.n as i32 + 1) {
            let first = wedge_diff(&ctx, &pos.v, &uni, s);
            let second = wedge_diff(&ctx, &pos.v, &uni, Slot::new(s.position - 1, s.degree + 1));
            if !second.after(&first).is_zero() {
                return Err(format!("wedge squared is nonzero at {s:?}"));
            }
            count += 1;
        }
    }
    Ok(count)
}

/// `∂^c_u ∂^∧_v + ∂^∧_v ∂^c_u = 0` on `K(u; S)` for the canonical pair.
pub fn check_mixed_anticommutation(ring: &RingDesc, max_degree: i32) -> Result<usize, String> {
    let ctx = Quotient { ring };
    let pos = Pos::canonical(ring);
    let uni = full_universe(ring.n);
    let g = ring.d - 1;
    let mut count = 0;
    for s in slots(ring.n, max_degree) {
        let cu = contract_diff(&ctx, &pos.u, &uni, s);
        let wv = wedge_diff(&ctx, &pos.v, &uni, s);
        let a = wedge_diff(&ctx, &pos.v, &uni, cu.codomain).after(&cu);
        let b = contract_diff(&ctx, &pos.u, &uni, wv.codomain).after(&wv);
        debug_assert_eq!(a.codomain, Slot::new(s.position, s.degree + g + 1));
        if !a.plus(&b).is_zero() {
            return Err(format!("mixed anticommutator is nonzero at {s:?}"));
        }
        count += 1;
    }
    Ok(count)
}

/// Chart pair data with explicit degree shifts (chart partials need not be
/// homogeneous, so the contraction raises the degree bound by `d − 1`).
struct ChartData {
    ctx: FilteredChart,
    pos: Pos,
    t: usize,
    g: i32,
    uni_u: Vec<usize>,
    uni_w: Vec<usize>,
}

fn chart_data(ring: &RingDesc, t: usize) -> ChartData {
    let (ctx, pos) = Pos::chart(ring, t);
    let uni_u = full_universe(ring.n);
    let uni_w = uni_u.iter().copied().filter(|&i| i != t).collect();
    ChartData { ctx, pos, t, g: ring.d - 1, uni_u, uni_w }
}

fn contract_on(c: &ChartData, universe: &[usize], s: Slot) -> GradedMap {
    let op = contraction_op(&c.pos.u);
    operator_map(&c.ctx, universe, s, universe, Slot::new(s.position + 1, s.degree + c.g), &op).expect("contraction stays in its bound")
}

fn wedge_on(c: &ChartData, universe: &[usize], s: Slot) -> GradedMap {
    let op = wedge_op(&c.pos.v, universe);
    operator_map(&c.ctx, universe, s, universe, Slot::new(s.position - 1, s.degree + 1), &op).expect("wedge stays in its bound")
}

/// `∂_u ∘ π = π ∘ ∂_u` for the chart pair on chart `t`.
pub fn check_pi_chain_map(ring: &RingDesc, t: usize, max_degree: i32) -> Result<usize, String> {
    let c = chart_data(ring, t);
    let mut count = 0;
    for s in slots(ring.n, max_degree) {
        if s.position == 0 {
            continue;
        }
        let pi_here = pi_iota_zeta(&c.ctx, &c.pos, s).map_err(|e| e.to_string())?.pi;
        let lhs = contract_on(&c, &c.uni_w, pi_here.codomain).after(&pi_here);
        let du = contract_on(&c, &c.uni_u, s);
        let pi_next = pi_iota_zeta(&c.ctx, &c.pos, du.codomain).map_err(|e| e.to_string())?.pi;
        let rhs = pi_next.after(&du);
        if !agree(&lhs, &rhs) {
            return Err(format!("π is not a chain map at {s:?} on chart {t}"));
        }
        count += 1;
    }
    Ok(count)
}

/// `πι = incl`, `ζ∂_vι = incl` on `K(w)`, and `∂_vιζ + ιπ = incl` on `K(u)`,
/// where `incl` raises the degree bound by one.
pub fn check_split_exactness(ring: &RingDesc, t: usize, max_degree: i32) -> Result<usize, String> {
    let c = chart_data(ring, t);
    let mut count = 0;
    for s in slots(ring.n, max_degree) {
        let here = pi_iota_zeta(&c.ctx, &c.pos, s).map_err(|e| e.to_string())?;
        let up = Slot::new(s.position, s.degree + 1);
        let incl_w = inclusion(&c.ctx, &c.uni_w, s, up);
        let incl_u = inclusion(&c.ctx, &c.uni_u, s, up);

        // πι on K(w): ι at s, then π at s.
        if s.position >= -(ring.n as i32) {
            if !agree(&here.pi.after(&here.iota), &incl_w) {
                return Err(format!("πι ≠ id at {s:?} on chart {}", c.t));
            }
            count += 1;

            // ζ ∂_v ι on K(w).
            if s.position > -(ring.n as i32 + 1) {
                let dv = wedge_on(&c, &c.uni_u, s);
                let zeta_low = pi_iota_zeta(&c.ctx, &c.pos, dv.codomain).map_err(|e| e.to_string())?.zeta;
                if !agree(&zeta_low.after(&dv).after(&here.iota), &incl_w) {
                    return Err(format!("ζ∂_vι ≠ id at {s:?} on chart {}", c.t));
                }
                count += 1;
            }
        }

        // ∂_v ι ζ + ι π on K(u).
        let mut total = pi_iota_zeta(&c.ctx, &c.pos, here.pi.codomain).map_err(|e| e.to_string())?.iota.after(&here.pi);
        if s.position < 0 {
            let above = pi_iota_zeta(&c.ctx, &c.pos, here.zeta.codomain).map_err(|e| e.to_string())?;
            let dv = wedge_on(&c, &c.uni_u, here.zeta.codomain);
            total = total.plus(&dv.after(&above.iota).after(&here.zeta));
        }
        if !agree(&total, &incl_u) {
            return Err(format!("∂_vιζ + ιπ ≠ id at {s:?} on chart {}", c.t));
        }
        count += 1;
    }
    Ok(count)
}

/// The contraction complex of the variables over `R` is exact except for
/// `k` at position 0, degree 0.
pub fn check_koszul_acyclicity(n: usize, max_degree: i32) -> Result<usize, String> {
    let ctx = PolyRing { n };
    let vars: Vec<Poly> = (0..=n).map(|i| Poly::var(n + 1, i)).collect();
    let mut count = 0;
    for s in slots(n, max_degree) {
        let h = contraction_cohomology(&ctx, &vars, s.position, s.degree);
        let expected = usize::from(s.position == 0 && s.degree == 0);
        if h != expected {
            return Err(format!("n = {n}: H at {s:?} has dimension {h}, expected {expected}"));
        }
        count += 1;
    }
    Ok(count)
}

/// Contraction by the sign-altered variables over `S`: `H^0 = k` in degree
/// 0, `H^{−1} = k` in degree `d − 1`, and zero elsewhere.
pub fn check_variable_complex_over_s(ring: &RingDesc, max_degree: i32) -> Result<usize, String> {
    let ctx = Quotient { ring };
    let seq = alternating_variables(ring.nvars());
    let mut count = 0;
    for s in slots(ring.n, max_degree) {
        let h = contraction_cohomology(&ctx, &seq, s.position, s.degree);
        let expected = usize::from(
            (s.position == 0 && s.degree == 0) || (s.position == -1 && s.degree == ring.d - 1),
        );
        if h != expected {
            return Err(format!("H at {s:?} has dimension {h}, expected {expected}"));
        }
        count += 1;
    }
    Ok(count)
}

pub fn mu_cochain(alg: &LocalAlgebra) -> CochainExpr {
    CochainExpr::new(alg, 2, vec![(Poly::one(alg.nvars()), vec![BasicOp::Mu])])
}

fn tuples(basis: &[Monomial], k: usize) -> Vec<Vec<Monomial>> {
    let mut out: Vec<Vec<Monomial>> = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                basis.iter().map(move |m| {
                    let mut t2 = t.clone();
                    t2.push(m.clone());
                    t2
                })
            })
            .collect();
    }
    out
}

/// Charts of the cover (the relation variable `x_0` never serves as a chart).
pub fn charts(ring: &RingDesc) -> std::ops::RangeInclusive<usize> {
    1..=ring.n
}

/// Whether the lower-order part of `F` involves `x_0` (then the chart
/// relations reduce `y_0^d` in several steps).
pub fn tail_has_relation_variable(ring: &RingDesc) -> bool {
    ring.tail().max_exp(0).is_some_and(|e| e > 0)
}

/// `d_Hoch(°μ) = 0` on every triple of sampled basis monomials of every chart
/// (with the other cover variables inverted down to exponent `−neg`).
pub fn check_mu_cocycle(ring: &RingDesc, bound: i32, neg: i32) -> Result<usize, String> {
    let mut count = 0;
    for t in charts(ring) {
        let others: Vec<usize> = charts(ring).filter(|&s| s != t).collect();
        let alg = ring.dehomogenize(t, &others);
        let mu = mu_cochain(&alg);
        for args in tuples(&alg.sample_basis(bound, neg), 3) {
            let v = hoch_diff_eval(&mu, &alg, &alg, &args).map_err(|e| e.to_string())?;
            if !v.is_zero() {
                return Err(format!("d(°μ) on chart {t} at {args:?} = {}", alg.render(&v)));
            }
            count += 1;
        }
    }
    Ok(count)
}

/// The three chart-change rules for every ordered pair of distinct charts.
pub fn check_zeta_rules(ring: &RingDesc, bound: i32, neg: i32) -> Result<usize, String> {
    let mut count = 0;
    for t in charts(ring) {
        for s in charts(ring) {
            if s == t {
                continue;
            }
            let rep = zeta_rules_check(ring, t, s, bound, neg);
            if !rep.passed() {
                return Err(format!("charts ({t}, {s}): {}", rep.failures.join("; ")));
            }
            count += rep.evaluations;
        }
    }
    Ok(count)
}

/// On a Fermat chart, `d(s) = °μ` for `s = −(1/d) Σ_l y_l °∂_l`.
pub fn check_fermat_primitives(ring: &RingDesc, bound: i32) -> Result<usize, String> {
    let mut count = 0;
    for t in charts(ring) {
        let alg = ring.dehomogenize(t, &[]);
        let s = fermat_primitive(&alg);
        let mu = mu_cochain(&alg);
        for args in tuples(&alg.sample_basis(bound, 0), 2) {
            let lhs = hoch_diff_eval(&s, &alg, &alg, &args).map_err(|e| e.to_string())?;
            let rhs = mu.eval_basis(&args).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return Err(format!("d(s) ≠ °μ on chart {t} at {args:?}"));
            }
            count += 1;
        }
    }
    Ok(count)
}

/// Random homogeneous polynomial of degree `d` in `nvars` variables with
/// small integer coefficients (many of them zero).
pub fn homogeneous(nvars: usize, d: i32) -> impl Strategy<Value = Poly> {
    let monos = monomials_of_degree(nvars, d);
    let len = monos.len();
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], len).prop_map(move |coeffs| {
        Poly::from_terms(nvars, monos.iter().cloned().zip(coeffs).map(|(m, c)| (m, int(c))))
    })
}

/// Random homogeneous polynomial of random shape.
pub fn any_homogeneous() -> impl Strategy<Value = Poly> {
    (1usize..=4, 0i32..=6).prop_flat_map(|(nv, d)| homogeneous(nv, d))
}

/// Random quartic surface with at least two nonzero partials: either a
/// dense quartic (generically smooth) or a sum of a few monomials (mostly
/// singular), so the whole admissible range of dimensions is exercised.
pub fn quartic_surface() -> impl Strategy<Value = Poly> {
    let monos = monomials_of_degree(4, 4);
    let sparse = prop::collection::vec((0..monos.len(), prop_oneof![-3i64..=-1, 1i64..=3]), 1..=5)
        .prop_map(move |terms| Poly::from_terms(4, terms.into_iter().map(|(k, c)| (monos[k].clone(), int(c)))));
    prop_oneof![1 => homogeneous(4, 4), 3 => sparse]
        .prop_filter("needs two nonzero partials", |f| (0..4).filter(|&i| !partial(f, i).is_zero()).count() >= 2)
}
