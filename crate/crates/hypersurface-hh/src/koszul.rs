//! Graded slices of Koszul-type complexes and their cohomology dimensions.
//!
//! A slot `(p, m)` addresses the free module spanned by wedge words of length
//! `-p` with coefficients of degree `m` in a coefficient ring (`R`, `S = R/(F)`,
//! or a degree-filtered chart algebra). Differentials become exact sparse
//! matrices between slot bases; the quotient complex `K(u;S)/im ∂^∧_v` is
//! never materialized, its cohomology flows through
//! [`induced_quotient_map`](crate::exactla::induced_quotient_map).
//!
//! Grading: the contraction by the partials maps `(p, m) → (p+1, m+d−1)`, the
//! wedge by the variables maps `(p, m) → (p−1, m+1)`, and the contraction by
//! the variables over `R` maps `(p, m) → (p+1, m+1)`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactla::{induced_quotient_map, kernel, rank, LabeledBasis, Rational, SparseMatrix, SparseVec, Subspace};
use crate::poly::{monomial_basis_r, ChartAlgebra, Monomial, Poly, RingDesc};

/// Errors from Koszul constructions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KoszulError {
    #[error("sequence entry {0} is not invertible: no unit slot")]
    NoUnitSlot(usize),
    #[error("sequences are not orthogonal: Σ u_i v_i = {0}")]
    NotOrthogonal(String),
    #[error("coefficient {0} escapes the target slot basis")]
    OutsideTarget(String),
}

// ---------------------------------------------------------------------------
// Coefficient contexts
// ---------------------------------------------------------------------------

/// A coefficient ring sliced into finite pieces indexed by an integer degree.
pub trait CoeffContext {
    fn nvars(&self) -> usize;
    /// Basis monomials of the slice `m` (empty for `m < 0`).
    fn slice(&self, m: i32) -> Vec<Monomial>;
    /// Normal form of a polynomial in this ring.
    fn reduce(&self, p: &Poly) -> Poly;
}

/// The polynomial ring `R = Q[x_0..x_n]`, graded by total degree.
#[derive(Debug, Clone, Copy)]
pub struct PolyRing {
    pub n: usize,
}

impl CoeffContext for PolyRing {
    fn nvars(&self) -> usize {
        self.n + 1
    }
    fn slice(&self, m: i32) -> Vec<Monomial> {
        monomial_basis_r(self.n, m)
    }
    fn reduce(&self, p: &Poly) -> Poly {
        p.clone()
    }
}

/// The graded quotient `S = R/(F)`.
#[derive(Debug, Clone, Copy)]
pub struct Quotient<'a> {
    pub ring: &'a RingDesc,
}

impl CoeffContext for Quotient<'_> {
    fn nvars(&self) -> usize {
        self.ring.n + 1
    }
    fn slice(&self, m: i32) -> Vec<Monomial> {
        self.ring.s_basis(m)
    }
    fn reduce(&self, p: &Poly) -> Poly {
        self.ring.s_normal_form(p)
    }
}

/// A chart algebra without inverted variables, filtered by total degree:
/// slice `m` holds the basis monomials of degree at most `m`. Reduction never
/// raises degree, so maps of degree `g` send slice `m` into slice `m + g`.
#[derive(Debug, Clone)]
pub struct FilteredChart {
    pub algebra: ChartAlgebra,
}

impl CoeffContext for FilteredChart {
    fn nvars(&self) -> usize {
        self.algebra.nvars()
    }
    fn slice(&self, m: i32) -> Vec<Monomial> {
        if m < 0 {
            return Vec::new();
        }
        self.algebra.sample_basis(m, 0)
    }
    fn reduce(&self, p: &Poly) -> Poly {
        self.algebra.reduce(p)
    }
}

// ---------------------------------------------------------------------------
// Wedge words, slots and slot spaces
// ---------------------------------------------------------------------------

/// Strictly increasing index list `e_{i_1} ∧ … ∧ e_{i_p}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgeWord(pub Vec<usize>);

impl WedgeWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// `e_j ∧ self` as a sign and sorted word, or `None` when `j` already occurs.
    pub fn wedge_front(&self, j: usize) -> Option<(i64, WedgeWord)> {
        match self.0.binary_search(&j) {
            Ok(_) => None,
            Err(pos) => {
                let mut w = self.0.clone();
                w.insert(pos, j);
                Some((if pos % 2 == 0 { 1 } else { -1 }, WedgeWord(w)))
            }
        }
    }

    /// The word with its `l`-th entry (0-based) removed.
    pub fn remove_at(&self, l: usize) -> WedgeWord {
        let mut w = self.0.clone();
        w.remove(l);
        WedgeWord(w)
    }

    /// All words of length `p` over `universe` (sorted), lexicographic order.
    pub fn all(universe: &[usize], p: usize) -> Vec<WedgeWord> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(u: &[usize], start: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<WedgeWord>) {
            if cur.len() == p {
                out.push(WedgeWord(cur.clone()));
                return;
            }
            for k in start..u.len() {
                cur.push(u[k]);
                rec(u, k + 1, p, cur, out);
                cur.pop();
            }
        }
        rec(universe, 0, p, &mut cur, &mut out);
        out
    }
}

/// Address in a Koszul-type complex: position `p ≤ 0` (word length `-p`) and
/// coefficient degree (or filtration bound) `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub position: i32,
    pub degree: i32,
}

impl Slot {
    pub fn new(position: i32, degree: i32) -> Self {
        Slot { position, degree }
    }
}

/// Finite basis `(word, monomial)` of one slot.
#[derive(Debug, Clone)]
pub struct GradedSlotSpace {
    pub slot: Slot,
    pub universe: Vec<usize>,
    pub basis: LabeledBasis<(WedgeWord, Monomial)>,
}

impl GradedSlotSpace {
    /// Builds the slot space; empty when the slot is out of range.
    pub fn new<C: CoeffContext + ?Sized>(ctx: &C, universe: &[usize], slot: Slot) -> Self {
        let mut labels = Vec::new();
        let len = -slot.position;
        if len >= 0 && len as usize <= universe.len() && slot.degree >= 0 {
            let monos = ctx.slice(slot.degree);
            for w in WedgeWord::all(universe, len as usize) {
                for m in &monos {
                    labels.push((w.clone(), m.clone()));
                }
            }
        }
        GradedSlotSpace { slot, universe: universe.to_vec(), basis: LabeledBasis::new(labels) }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Exact sparse matrix between two slot spaces.
#[derive(Debug, Clone)]
pub struct GradedMap {
    pub domain: Slot,
    pub codomain: Slot,
    pub matrix: SparseMatrix,
}

impl GradedMap {
    /// Composition `self ∘ first`.
    pub fn after(&self, first: &GradedMap) -> GradedMap {
        assert_eq!(first.codomain, self.domain, "slot mismatch in composition");
        GradedMap {
            domain: first.domain,
            codomain: self.codomain,
            matrix: self.matrix.mul(&first.matrix).expect("compatible sizes"),
        }
    }

    pub fn plus(&self, other: &GradedMap) -> GradedMap {
        assert_eq!((self.domain, self.codomain), (other.domain, other.codomain), "slot mismatch in sum");
        GradedMap { domain: self.domain, codomain: self.codomain, matrix: self.matrix.add(&other.matrix).expect("same shape") }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// Word-level operator: image of a basis word as `(coefficient, word)` pairs.
pub type WordOp<'a> = dyn Fn(&WedgeWord) -> Vec<(Poly, WedgeWord)> + 'a;

/// Assembles the matrix of a coefficient-linear operator between slot spaces.
pub fn assemble<C: CoeffContext + ?Sized>(
    ctx: &C,
    src: &GradedSlotSpace,
    dst: &GradedSlotSpace,
    op: &WordOp<'_>,
) -> Result<GradedMap, KoszulError> {
    let mut cols: Vec<SparseVec> = Vec::with_capacity(src.dim());
    let mut cache: Option<(WedgeWord, Vec<(Poly, WedgeWord)>)> = None;
    for (w, mono) in src.basis.labels() {
        if cache.as_ref().is_none_or(|(cw, _)| cw != w) {
            cache = Some((w.clone(), op(w)));
        }
        let images = &cache.as_ref().expect("cached").1;
        let mut col: SparseVec = Vec::new();
        for (coef, w2) in images {
            let prod = ctx.reduce(&coef.mul_term(&Rational::one(), mono));
            for (m2, c) in prod.terms() {
                let key = (w2.clone(), m2.clone());
                match dst.basis.position(&key) {
                    Some(i) => col.push((i, c.clone())),
                    None => {
                        return Err(KoszulError::OutsideTarget(format!("{:?} {:?}", w2.0, m2)));
                    }
                }
            }
        }
        cols.push(col);
    }
    Ok(GradedMap { domain: src.slot, codomain: dst.slot, matrix: SparseMatrix::from_columns(dst.dim(), cols) })
}

/// Contraction `e_{i_1..i_p} ↦ Σ_l (−1)^{l−1} seq_{i_l} e_{..î_l..}`.
pub fn contraction_op(seq: &[Poly]) -> impl Fn(&WedgeWord) -> Vec<(Poly, WedgeWord)> + '_ {
    move |w: &WedgeWord| {
        w.0.iter()
            .enumerate()
            .filter(|(_, &i)| !seq[i].is_zero())
            .map(|(l, &i)| {
                let c = if l % 2 == 0 { seq[i].clone() } else { seq[i].neg() };
                (c, w.remove_at(l))
            })
            .collect()
    }
}

/// Wedge multiplication `e ↦ Σ_j seq_j e_j ∧ e` over indices in `universe`.
pub fn wedge_op<'a>(seq: &'a [Poly], universe: &'a [usize]) -> impl Fn(&WedgeWord) -> Vec<(Poly, WedgeWord)> + 'a {
    move |w: &WedgeWord| {
        universe
            .iter()
            .filter(|&&j| !seq[j].is_zero())
            .filter_map(|&j| {
                w.wedge_front(j).map(|(s, w2)| (if s == 1 { seq[j].clone() } else { seq[j].neg() }, w2))
            })
            .collect()
    }
}

/// Full index universe `0..=n`.
pub fn full_universe(n: usize) -> Vec<usize> {
    (0..=n).collect()
}

/// Common degree of a sequence (ignoring zero entries); 0 for an all-zero sequence.
pub fn sequence_degree(seq: &[Poly]) -> i32 {
    seq.iter().find_map(Poly::homogeneous_degree).unwrap_or(0)
}

/// Matrix of the contraction differential from `slot` to `(p+1, m+g)`.
pub fn contract_diff<C: CoeffContext + ?Sized>(ctx: &C, seq: &[Poly], universe: &[usize], slot: Slot) -> GradedMap {
    let g = sequence_degree(seq);
    let src = GradedSlotSpace::new(ctx, universe, slot);
    let dst = GradedSlotSpace::new(ctx, universe, Slot::new(slot.position + 1, slot.degree + g));
    assemble(ctx, &src, &dst, &contraction_op(seq)).expect("contraction stays in its target slot")
}

/// Matrix of the wedge differential from `slot` to `(p−1, m+g)`.
pub fn wedge_diff<C: CoeffContext + ?Sized>(ctx: &C, seq: &[Poly], universe: &[usize], slot: Slot) -> GradedMap {
    let g = sequence_degree(seq);
    let src = GradedSlotSpace::new(ctx, universe, slot);
    let dst = GradedSlotSpace::new(ctx, universe, Slot::new(slot.position - 1, slot.degree + g));
    assemble(ctx, &src, &dst, &wedge_op(seq, universe)).expect("wedge stays in its target slot")
}

// ---------------------------------------------------------------------------
// Pairs of orthogonal sequences
// ---------------------------------------------------------------------------

/// Pair of orthogonal sequences: `Σ u_i v_i = 0` in the coefficient ring.
#[derive(Debug, Clone)]
pub struct Pos {
    pub u: Vec<Poly>,
    pub v: Vec<Poly>,
}

impl Pos {
    /// Checks orthogonality in the given context.
    pub fn new<C: CoeffContext + ?Sized>(ctx: &C, u: Vec<Poly>, v: Vec<Poly>) -> Result<Self, KoszulError> {
        let mut s = Poly::zero(ctx.nvars());
        for (a, b) in u.iter().zip(&v) {
            s = s.add(&a.mul(b));
        }
        let s = ctx.reduce(&s);
        if !s.is_zero() {
            return Err(KoszulError::NotOrthogonal(s.render()));
        }
        Ok(Pos { u, v })
    }

    /// Canonical pair over `S`: partials of `F` and the variables.
    pub fn canonical(ring: &RingDesc) -> Self {
        let nv = ring.nvars();
        Pos::new(&Quotient { ring }, ring.partials().to_vec(), (0..nv).map(|i| Poly::var(nv, i)).collect())
            .expect("Euler's identity makes the canonical pair orthogonal")
    }

    /// Chart pair on `A_t`: `u` = partials of `G_t` with `∂F/∂x_t|_{x_t=1}` at
    /// slot `t`, `v` = chart variables with the constant 1 at slot `t`.
    pub fn chart(ring: &RingDesc, t: usize) -> (FilteredChart, Self) {
        let ctx = FilteredChart { algebra: ring.dehomogenize(t, &[]) };
        let nv = ring.nvars();
        let u: Vec<Poly> = (0..nv).map(|j| ring.partial(j).set_var_to_one(t)).collect();
        let v: Vec<Poly> = (0..nv).map(|j| if j == t { Poly::one(nv) } else { Poly::var(nv, j) }).collect();
        let pos = Pos::new(&ctx, u, v).expect("Euler's identity makes the chart pair orthogonal");
        (ctx, pos)
    }

    /// Index of a slot whose `v` entry is a nonzero constant.
    pub fn unit_slot(&self) -> Option<usize> {
        self.v.iter().position(|p| p.len() == 1 && p.homogeneous_degree() == Some(0))
    }
}

/// The maps π, ι, ζ at a given filtered slot, together with the slot spaces used.
#[derive(Debug, Clone)]
pub struct SplitMaps {
    /// π: K^{p}(u) at bound m → K^{p}(w) at bound m+1.
    pub pi: GradedMap,
    /// ι: K^{p}(w) at bound m → K^{p}(u) at bound m.
    pub iota: GradedMap,
    /// ζ: K^{p}(u) at bound m → K^{p+1}(w) at bound m.
    pub zeta: GradedMap,
}

/// Word-level π for unit slot `t` (with `v_t^{-1} v` precomputed as `scaled`).
fn pi_op<'a>(t: usize, scaled: &'a [Poly]) -> impl Fn(&WedgeWord) -> Vec<(Poly, WedgeWord)> + 'a {
    move |w: &WedgeWord| {
        let Some(j) = w.0.iter().position(|&i| i == t) else {
            return vec![(Poly::one(scaled[0].nvars()), w.clone())];
        };
        let mut out = Vec::new();
        for (k, vk) in scaled.iter().enumerate() {
            if k == t || vk.is_zero() || w.contains(k) {
                continue;
            }
            // Replace e_t at position j by e_k, then sort.
            let mut raw = w.0.clone();
            raw[j] = k;
            let (sign, sorted) = sort_with_sign(raw);
            let c = if sign == 1 { vk.neg() } else { vk.clone() };
            out.push((c, WedgeWord(sorted)));
        }
        out
    }
}

fn zeta_op(t: usize, vt_inv: &Poly) -> impl Fn(&WedgeWord) -> Vec<(Poly, WedgeWord)> + '_ {
    move |w: &WedgeWord| match w.0.iter().position(|&i| i == t) {
        None => Vec::new(),
        Some(j) => {
            let c = if j % 2 == 0 { vt_inv.clone() } else { vt_inv.neg() };
            vec![(c, w.remove_at(j))]
        }
    }
}

/// Sorts distinct indices, returning the permutation sign.
pub fn sort_with_sign(mut v: Vec<usize>) -> (i64, Vec<usize>) {
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    (sign, v)
}

/// Builds π, ι, ζ at slot `(p, m)` for a pair whose `v` has a constant unit entry.
pub fn pi_iota_zeta<C: CoeffContext + ?Sized>(ctx: &C, pos: &Pos, slot: Slot) -> Result<SplitMaps, KoszulError> {
    let t = pos.unit_slot().ok_or(KoszulError::NoUnitSlot(pos.v.len()))?;
    let nv = ctx.nvars();
    let vt = pos.v[t].terms().next().map(|(_, c)| c.clone()).expect("unit entry is nonzero");
    let vt_inv = Rational::one() / vt;
    let scaled: Vec<Poly> = pos.v.iter().map(|p| p.scale(&vt_inv)).collect();
    let vt_inv_poly = Poly::constant(nv, vt_inv);
    let uni_u = full_universe(nv - 1);
    let uni_w: Vec<usize> = uni_u.iter().copied().filter(|&i| i != t).collect();
    let vdeg = sequence_degree(&pos.v).max(0);

    let ku = GradedSlotSpace::new(ctx, &uni_u, slot);
    let kw_up = GradedSlotSpace::new(ctx, &uni_w, Slot::new(slot.position, slot.degree + vdeg));
    let pi = assemble(ctx, &ku, &kw_up, &pi_op(t, &scaled))?;
    let kw = GradedSlotSpace::new(ctx, &uni_w, slot);
    let ku_same = GradedSlotSpace::new(ctx, &uni_u, slot);
    let iota = assemble(ctx, &kw, &ku_same, &|w: &WedgeWord| vec![(Poly::one(nv), w.clone())])?;
    let kw_next = GradedSlotSpace::new(ctx, &uni_w, Slot::new(slot.position + 1, slot.degree));
    let zeta = assemble(ctx, &ku, &kw_next, &zeta_op(t, &vt_inv_poly))?;
    Ok(SplitMaps { pi, iota, zeta })
}

/// Inclusion of slot `(p, m)` into `(p, m')` for `m' ≥ m` (filtered contexts),
/// or the identity when `m' = m`.
pub fn inclusion<C: CoeffContext + ?Sized>(ctx: &C, universe: &[usize], from: Slot, to: Slot) -> GradedMap {
    let src = GradedSlotSpace::new(ctx, universe, from);
    let dst = GradedSlotSpace::new(ctx, universe, to);
    let nv = ctx.nvars();
    assemble(ctx, &src, &dst, &|w: &WedgeWord| vec![(Poly::one(nv), w.clone())]).expect("inclusion target contains source")
}

/// Generic operator matrix on a given universe between two slots.
pub fn operator_map<C: CoeffContext + ?Sized>(
    ctx: &C,
    src_universe: &[usize],
    from: Slot,
    dst_universe: &[usize],
    to: Slot,
    op: &WordOp<'_>,
) -> Result<GradedMap, KoszulError> {
    let src = GradedSlotSpace::new(ctx, src_universe, from);
    let dst = GradedSlotSpace::new(ctx, dst_universe, to);
    assemble(ctx, &src, &dst, op)
}

/// Diagonal isomorphism for a proportional pair `(λu, μv)`: on the double
/// complex entry `(p, q)` (which is `K^{p−q}`), multiplication by `λ^p μ^q`.
pub fn scale_iso<C: CoeffContext + ?Sized>(
    ctx: &C,
    universe: &[usize],
    lambda: &Rational,
    mu: &Rational,
    pq: (i32, i32),
    degree: i32,
) -> GradedMap {
    let (p, q) = pq;
    let slot = Slot::new(p - q, degree);
    let space = GradedSlotSpace::new(ctx, universe, slot);
    let factor = pow_i(lambda, p) * pow_i(mu, q);
    GradedMap { domain: slot, codomain: slot, matrix: SparseMatrix::identity(space.dim()).scale(&factor) }
}

fn pow_i(x: &Rational, e: i32) -> Rational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        Rational::one() / num_traits::pow(x.clone(), (-e) as usize)
    }
}

// ---------------------------------------------------------------------------
// Dimension engines
// ---------------------------------------------------------------------------

fn variables(nv: usize) -> Vec<Poly> {
    (0..nv).map(|i| Poly::var(nv, i)).collect()
}

fn slot_in_range(n: usize, j: i32, m: i32) -> bool {
    j <= 0 && j >= -(n as i32 + 1) && m >= 0
}

/// Image of `∂^∧_v` landing in slot `(j, m)` of `K(u;S)`, i.e. coming from `(j+1, m−1)`.
pub fn wedge_image(ring: &RingDesc, j: i32, m: i32) -> Subspace {
    let ctx = Quotient { ring };
    let uni = full_universe(ring.n);
    let ambient = GradedSlotSpace::new(&ctx, &uni, Slot::new(j, m)).dim();
    if j + 1 > 0 || m - 1 < 0 || !slot_in_range(ring.n, j, m) {
        return Subspace::zero(ambient);
    }
    let vars = variables(ring.nvars());
    let w = wedge_diff(&ctx, &vars, &uni, Slot::new(j + 1, m - 1));
    Subspace::image(&w.matrix)
}

/// The induced differential `C^j_m → C^{j+1}_{m+d−1}` of the quotient complex:
/// (rank, kernel dimension).
fn quotient_step(ring: &RingDesc, j: i32, m: i32) -> (usize, usize) {
    let ctx = Quotient { ring };
    let uni = full_universe(ring.n);
    let pos = Pos { u: ring.partials().to_vec(), v: variables(ring.nvars()) };
    let du = contract_diff(&ctx, &pos.u, &uni, Slot::new(j, m));
    let u = wedge_image(ring, j, m);
    let v = wedge_image(ring, j + 1, m + ring.d - 1);
    induced_quotient_map(&du.matrix, &u, &v).expect("∂_u preserves the image of ∂_v")
}

/// Dimension of the cocycles of the quotient complex at `(j, m)`.
pub fn q_dim(ring: &RingDesc, j: i32, m: i32) -> usize {
    if !slot_in_range(ring.n, j, m) {
        return 0;
    }
    if j == 0 {
        return ring.s_dim(m);
    }
    quotient_step(ring, j, m).1
}

/// Rank of the induced differential arriving at `(j, m)` from `(j−1, m−d+1)`.
pub fn incoming_rank(ring: &RingDesc, j: i32, m: i32) -> usize {
    let (js, ms) = (j - 1, m - ring.d + 1);
    if !slot_in_range(ring.n, js, ms) || !slot_in_range(ring.n, j, m) {
        return 0;
    }
    quotient_step(ring, js, ms).0
}

/// Dimension of the cohomology of the quotient complex at `(j, m)`.
pub fn p_dim(ring: &RingDesc, j: i32, m: i32) -> usize {
    if !slot_in_range(ring.n, j, m) {
        return 0;
    }
    q_dim(ring, j, m) - incoming_rank(ring, j, m)
}

/// Dimension of the cocycles of the Koszul complex of the variables over `R` at `(j, m)`.
pub fn z_dim(n: usize, j: i32, m: i32) -> usize {
    if !slot_in_range(n, j, m) {
        return 0;
    }
    let ctx = PolyRing { n };
    let uni = full_universe(n);
    if j == 0 {
        return monomial_basis_r(n, m).len();
    }
    let d = contract_diff(&ctx, &variables(n + 1), &uni, Slot::new(j, m));
    d.matrix.ncols() - rank(&d.matrix)
}

/// Cohomology dimension at `(j, m)` of the contraction complex of a
/// homogeneous sequence of degree `g` over a graded context.
pub fn contraction_cohomology<C: CoeffContext + ?Sized>(ctx: &C, seq: &[Poly], j: i32, m: i32) -> usize {
    let n = ctx.nvars() - 1;
    if !slot_in_range(n, j, m) {
        return 0;
    }
    let g = sequence_degree(seq);
    let uni = full_universe(n);
    let out = contract_diff(ctx, seq, &uni, Slot::new(j, m));
    let cocycles = if j == 0 { out.matrix.ncols() } else { kernel(&out.matrix).dim() };
    let incoming = if slot_in_range(n, j - 1, m - g) {
        rank(&contract_diff(ctx, seq, &uni, Slot::new(j - 1, m - g)).matrix)
    } else {
        0
    };
    cocycles - incoming
}

/// The sign-altered variables `(x_0, −x_1, x_2, …)`.
pub fn alternating_variables(nv: usize) -> Vec<Poly> {
    (0..nv).map(|i| if i % 2 == 0 { Poly::var(nv, i) } else { Poly::var(nv, i).neg() }).collect()
}

/// Set of positions `j` with `-(n+1) ≤ j ≤ 0`.
pub fn positions(n: usize) -> BTreeSet<i32> {
    (-(n as i32 + 1)..=0).collect()
}

/// Checks `Σ u_i v_i = 0` for the canonical pair of a ring.
pub fn canonical_pair_is_orthogonal(ring: &RingDesc) -> bool {
    let ctx = Quotient { ring };
    Pos::new(&ctx, ring.partials().to_vec(), variables(ring.nvars())).is_ok()
}

/// Matrix identity helper: whether two maps are equal.
pub fn same_map(a: &GradedMap, b: &GradedMap) -> bool {
    a.domain == b.domain && a.codomain == b.codomain && a.matrix == b.matrix
}

/// Returns the zero scalar (helper for callers constructing scale factors).
pub fn zero_scalar() -> Rational {
    Rational::zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn fermat() -> RingDesc {
        RingDesc::parse("x0^4+x1^4+x2^4+x3^4", 3).unwrap()
    }

    #[test]
    fn contraction_on_top_word_n1() {
        // Over R with n = 1: ∂(e_0 ∧ e_1) = u_0 e_1 − u_1 e_0 for u = (x0, 2*x1).
        let ctx = PolyRing { n: 1 };
        let u = vec![parse_poly("x0", 1).unwrap(), parse_poly("2*x1", 1).unwrap()];
        let m = contract_diff(&ctx, &u, &[0, 1], Slot::new(-2, 0));
        assert_eq!(m.matrix.ncols(), 1);
        // Target basis: (e0, x1), (e0, x0), (e1, x1), (e1, x0) in that order.
        let col = m.matrix.column(0);
        assert_eq!(col, &vec![(0, crate::exactla::int(-2)), (3, crate::exactla::int(1))]);
    }

    #[test]
    fn variable_contraction_degree_zero_is_injective() {
        let ctx = PolyRing { n: 2 };
        let m = contract_diff(&ctx, &variables(3), &[0, 1, 2], Slot::new(-1, 0));
        assert_eq!(kernel(&m.matrix).dim(), 0);
    }

    #[test]
    fn wedge_of_unit() {
        let ctx = PolyRing { n: 2 };
        let m = wedge_diff(&ctx, &variables(3), &[0, 1, 2], Slot::new(0, 0));
        assert_eq!(m.matrix.nrows(), 3 * 3);
        assert_eq!(m.matrix.nnz(), 3);
    }

    #[test]
    fn q_and_p_small_values() {
        let r = fermat();
        assert_eq!(q_dim(&r, 0, 0), 1);
        assert_eq!(p_dim(&r, 0, 4), 19);
        assert_eq!(p_dim(&r, 1, 4), 0);
        assert_eq!(q_dim(&r, -2, 2), 0);
    }

    #[test]
    fn z_examples() {
        assert_eq!(z_dim(2, -1, 1), 3);
        assert_eq!(z_dim(2, -1, 0), 0);
        for m in 0..5 {
            assert_eq!(z_dim(2, 0, m), crate::poly::binomial(m as i64 + 2, 2));
        }
    }

    #[test]
    fn sort_sign() {
        assert_eq!(sort_with_sign(vec![2, 0, 1]), (1, vec![0, 1, 2]));
        assert_eq!(sort_with_sign(vec![1, 0]), (-1, vec![0, 1]));
    }

    #[test]
    fn pi_and_zeta_on_words() {
        let r = fermat();
        let (ctx, pos) = Pos::chart(&r, 2);
        let maps = pi_iota_zeta(&ctx, &pos, Slot::new(-1, 0)).unwrap();
        // ζ(e_2) = 1 (empty word), ζ(e_0) = 0.
        let ku = GradedSlotSpace::new(&ctx, &[0, 1, 2, 3], Slot::new(-1, 0));
        let e2 = ku.basis.position(&(WedgeWord(vec![2]), Monomial::one(4))).unwrap();
        let e0 = ku.basis.position(&(WedgeWord(vec![0]), Monomial::one(4))).unwrap();
        assert_eq!(maps.zeta.matrix.column(e2).len(), 1);
        assert!(maps.zeta.matrix.column(e0).is_empty());
        // π(e_0) = e_0; π(e_2) = −y_0 e_0 − y_1 e_1 − y_3 e_3.
        assert_eq!(maps.pi.matrix.column(e0).len(), 1);
        assert_eq!(maps.pi.matrix.column(e2).len(), 3);
    }
}
