//! Normalized Hochschild cochains on chart algebras and explicit
//! Gerstenhaber–Schack deformation cocycles.
//!
//! Chart algebras are infinite-dimensional, so cochains are never stored as
//! matrices: a [`CochainExpr`] is a finite formal sum `Σ coeff · (P_1 ∪ … ∪ P_k)`
//! with `P_i ∈ {°∂/∂y_l, °μ}`, evaluated pointwise on normal-form basis
//! monomials. Every identity checked here is checked on a finite sample of
//! basis monomials (see [`ChartAlgebra::sample_basis`]).
//!
//! Conventions:
//! * the cover consists of the opens `V_I = ∩_{i∈I} U_i`, `∅ ≠ I ⊆ {1..n}`;
//!   `V_I` is written in the chart of its largest index, the other indices of
//!   `I` are inverted;
//! * `V ⊆ W` as opens means `I(W) ⊆ I(V)`; the restriction `ρ^W_V` is the
//!   monomial chart change from the chart of `W` to the chart of `V`;
//! * the simplicial differential is `(d φ)_{V_0⊆…⊆V_p} = Σ_k (−1)^k ∂_k φ` with
//!   `∂_0` restricting from the second-smallest open and `∂_p` precomposing
//!   with the largest restriction; the total differential on `C^{p,q}` is
//!   `d_simp + (−1)^p d_Hoch`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::One;
use serde_json::{json, Value};
use thiserror::Error;

use crate::exactla::{int, rat, Rational};
use crate::poly::{parse_poly, ChartAlgebra, Monomial, Poly, RingDesc};

/// A chart algebra `A(V, t)` with Laurent normal forms.
pub type LocalAlgebra = ChartAlgebra;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CochainError {
    #[error("°∂/∂y_{var} is undefined on chart {chart}")]
    ChartVariable { var: usize, chart: usize },
    #[error("arity mismatch: expected {expected} arguments, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("{0} is not a normal-form basis monomial of the chart algebra")]
    NotBasis(String),
    #[error("unsupported class: {0}")]
    Unsupported(String),
}

// ---------------------------------------------------------------------------
// Basic operators
// ---------------------------------------------------------------------------

/// The two building blocks: `°∂/∂y_l` (arity 1) and `°μ` (arity 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasicOp {
    Partial(usize),
    Mu,
}

impl BasicOp {
    pub fn arity(self) -> usize {
        match self {
            BasicOp::Partial(_) => 1,
            BasicOp::Mu => 2,
        }
    }

    pub fn render(self) -> String {
        match self {
            BasicOp::Partial(l) => format!("d°/dy_{l}"),
            BasicOp::Mu => "mu°".to_string(),
        }
    }
}

fn check_basis(alg: &LocalAlgebra, m: &Monomial) -> Result<(), CochainError> {
    if alg.is_basis_monomial(m) {
        Ok(())
    } else {
        Err(CochainError::NotBasis(m.render_with("y")))
    }
}

/// `°∂/∂y_l` on a basis monomial: `p_l · y^{p − e_l}`.
pub fn circ_partial_eval(alg: &LocalAlgebra, l: usize, f: &Monomial) -> Result<Poly, CochainError> {
    if l == alg.chart || l > alg.n {
        return Err(CochainError::ChartVariable { var: l, chart: alg.chart });
    }
    check_basis(alg, f)?;
    let p = f.exp(l);
    if p == 0 {
        return Ok(Poly::zero(alg.nvars()));
    }
    Ok(Poly::term(int(p as i64), f.with_exp(l, p - 1)))
}

/// `°μ` on basis monomials: zero unless the `y_0`-exponents overflow `d`, in
/// which case the product with `y_0`-exponent `p_0 + q_0 − d`.
pub fn circ_mu_eval(alg: &LocalAlgebra, f: &Monomial, g: &Monomial) -> Result<Poly, CochainError> {
    check_basis(alg, f)?;
    check_basis(alg, g)?;
    let s = f.exp(0) + g.exp(0);
    if s < alg.d {
        return Ok(Poly::zero(alg.nvars()));
    }
    Ok(Poly::monomial(f.mul(g).with_exp(0, s - alg.d)))
}

fn basic_eval(alg: &LocalAlgebra, op: BasicOp, args: &[Monomial]) -> Result<Poly, CochainError> {
    match op {
        BasicOp::Partial(l) => circ_partial_eval(alg, l, &args[0]),
        BasicOp::Mu => circ_mu_eval(alg, &args[0], &args[1]),
    }
}

// ---------------------------------------------------------------------------
// Cochains and the cup product
// ---------------------------------------------------------------------------

/// A multilinear map evaluated on basis monomials of a source chart algebra,
/// with values in the normal form of a target chart algebra.
pub trait Cochain {
    fn arity(&self) -> usize;
    fn eval_basis(&self, args: &[Monomial]) -> Result<Poly, CochainError>;
}

/// Extends a cochain multilinearly to normal-form arguments.
pub fn eval_multilinear(phi: &dyn Cochain, nvars: usize, args: &[Poly]) -> Result<Poly, CochainError> {
    fn rec(
        phi: &dyn Cochain,
        args: &[Poly],
        k: usize,
        scale: &Rational,
        cur: &mut Vec<Monomial>,
        acc: &mut Poly,
    ) -> Result<(), CochainError> {
        if k == args.len() {
            *acc = acc.add(&phi.eval_basis(cur)?.scale(scale));
            return Ok(());
        }
        for (m, c) in args[k].terms() {
            cur.push(m.clone());
            rec(phi, args, k + 1, &(scale * c), cur, acc)?;
            cur.pop();
        }
        Ok(())
    }
    if args.len() != phi.arity() {
        return Err(CochainError::Arity { expected: phi.arity(), got: args.len() });
    }
    let mut acc = Poly::zero(nvars);
    rec(phi, args, 0, &Rational::one(), &mut Vec::new(), &mut acc)?;
    Ok(acc)
}

/// All permutations of `0..m` in lexicographic order.
fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(m - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, m - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn factorial(m: usize) -> i64 {
    (1..=m as i64).product()
}

/// Symmetrized cup product `(1/m!) Σ_σ (−1)^c μ∘(P_{σ(1)} ⊗ … ⊗ P_{σ(m)})`,
/// where `c` counts the inversions of `σ` between odd-arity factors.
fn cup_core(
    alg: &LocalAlgebra,
    arities: &[usize],
    args: &[Monomial],
    eval_factor: &dyn Fn(usize, &[Monomial]) -> Result<Poly, CochainError>,
) -> Result<Poly, CochainError> {
    let total: usize = arities.iter().sum();
    if total != args.len() {
        return Err(CochainError::Arity { expected: total, got: args.len() });
    }
    let m = arities.len();
    let mut acc = Poly::zero(alg.nvars());
    for order in permutations(m) {
        let mut inversions = 0;
        for a in 0..m {
            for b in a + 1..m {
                if order[a] > order[b] && arities[order[a]] % 2 == 1 && arities[order[b]] % 2 == 1 {
                    inversions += 1;
                }
            }
        }
        let mut value = Poly::one(alg.nvars());
        let mut at = 0;
        for &k in &order {
            let part = eval_factor(k, &args[at..at + arities[k]])?;
            at += arities[k];
            value = alg.mul(&value, &part);
            if value.is_zero() {
                break;
            }
        }
        acc = if inversions % 2 == 0 { acc.add(&value) } else { acc.sub(&value) };
    }
    Ok(acc.scale(&rat(1, factorial(m))))
}

/// Cup product of arbitrary cochains on one chart algebra.
pub fn cup_eval(alg: &LocalAlgebra, factors: &[&dyn Cochain], args: &[Monomial]) -> Result<Poly, CochainError> {
    let arities: Vec<usize> = factors.iter().map(|f| f.arity()).collect();
    cup_core(alg, &arities, args, &|k, a| factors[k].eval_basis(a))
}

/// Cup product of a word of basic operators.
pub fn word_eval(alg: &LocalAlgebra, word: &[BasicOp], args: &[Monomial]) -> Result<Poly, CochainError> {
    let arities: Vec<usize> = word.iter().map(|op| op.arity()).collect();
    cup_core(alg, &arities, args, &|k, a| basic_eval(alg, word[k], a))
}

/// `β(𝔢_{i_1…i_k} 𝔰^{(j)}) = (−1)^{C(k,2)} °∂_{i_1} ∪ … ∪ °∂_{i_k} ∪ °μ^{∪j}`.
pub fn beta_word(indices: &[usize], j: usize) -> (Rational, Vec<BasicOp>) {
    let k = indices.len();
    let sign = if (k * k.saturating_sub(1) / 2).is_multiple_of(2) { int(1) } else { int(-1) };
    let mut word: Vec<BasicOp> = indices.iter().map(|&i| BasicOp::Partial(i)).collect();
    word.extend(std::iter::repeat_n(BasicOp::Mu, j));
    (sign, word)
}

/// Evaluates `β(𝔢_{indices} 𝔰^{(j)})` on basis monomials.
pub fn beta_eval(alg: &LocalAlgebra, indices: &[usize], j: usize, args: &[Monomial]) -> Result<Poly, CochainError> {
    let (sign, word) = beta_word(indices, j);
    Ok(word_eval(alg, &word, args)?.scale(&sign))
}

/// One summand `coeff · (P_1 ∪ … ∪ P_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainTerm {
    pub coeff: Poly,
    pub word: Vec<BasicOp>,
}

/// A formal sum of terms on one chart algebra, all of the same arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainExpr {
    pub alg: LocalAlgebra,
    pub arity: usize,
    pub terms: Vec<CochainTerm>,
}

impl CochainExpr {
    pub fn zero(alg: &LocalAlgebra, arity: usize) -> Self {
        CochainExpr { alg: alg.clone(), arity, terms: Vec::new() }
    }

    /// Builds from `(coefficient, word)` pairs: coefficients are reduced to
    /// normal form, equal words are merged, zero terms dropped.
    pub fn new(alg: &LocalAlgebra, arity: usize, terms: Vec<(Poly, Vec<BasicOp>)>) -> Self {
        let mut merged: BTreeMap<Vec<BasicOp>, Poly> = BTreeMap::new();
        for (c, w) in terms {
            assert_eq!(w.iter().map(|op| op.arity()).sum::<usize>(), arity, "word arity");
            let e = merged.entry(w).or_insert_with(|| Poly::zero(alg.nvars()));
            *e = e.add(&alg.reduce(&c));
        }
        let terms = merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(word, coeff)| CochainTerm { coeff, word })
            .collect();
        CochainExpr { alg: alg.clone(), arity, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let terms = self.terms.iter().map(|t| (t.coeff.scale(s), t.word.clone())).collect();
        CochainExpr::new(&self.alg, self.arity, terms)
    }

    /// Multiplies every coefficient by an element of the algebra.
    pub fn times(&self, g: &Poly) -> Self {
        let terms = self.terms.iter().map(|t| (self.alg.mul(g, &t.coeff), t.word.clone())).collect();
        CochainExpr::new(&self.alg, self.arity, terms)
    }

    /// Deterministic text form, e.g. `(y0^3)*d°/dy_0 ∪ d°/dy_2 + (-y1)*mu°`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|t| {
                let word: Vec<String> = t.word.iter().map(|op| op.render()).collect();
                format!("({})*{}", self.alg.render(&t.coeff), word.join(" ∪ "))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// `(chart, coefficient, operator word)` triples.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|t| {
                    json!({
                        "chart": self.alg.chart,
                        "coefficient": self.alg.render(&t.coeff),
                        "operators": t.word.iter().map(|op| op.render()).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }
}

impl Cochain for CochainExpr {
    fn arity(&self) -> usize {
        self.arity
    }

    fn eval_basis(&self, args: &[Monomial]) -> Result<Poly, CochainError> {
        if args.len() != self.arity {
            return Err(CochainError::Arity { expected: self.arity, got: args.len() });
        }
        let mut acc = Poly::zero(self.alg.nvars());
        for t in &self.terms {
            let v = word_eval(&self.alg, &t.word, args)?;
            acc = acc.add(&self.alg.mul(&t.coeff, &v));
        }
        Ok(acc)
    }
}

// ---------------------------------------------------------------------------
// Chart changes and restrictions
// ---------------------------------------------------------------------------

/// Rewrites a chart-`t` monomial in chart `s`: `y_j ↦ y_j/y_t` (`j ≠ t, s`),
/// `y_s ↦ 1/y_t`. The `y_0`-exponent is preserved, so basis monomials map to
/// basis monomials.
pub fn change_chart(m: &Monomial, t: usize, s: usize) -> Monomial {
    if t == s {
        return m.clone();
    }
    let deg = m.degree() - m.exp(t);
    m.with_exp(t, -deg).with_exp(s, 0)
}

/// The restriction (or chart change) `from → to`, applied termwise.
pub fn restrict(from: &LocalAlgebra, to: &LocalAlgebra, p: &Poly) -> Poly {
    Poly::from_terms(p.nvars(), p.terms().map(|(m, c)| (change_chart(m, from.chart, to.chart), c.clone())))
}

/// The normalized Hochschild differential of `φ: A_src^{⊗q} → A_dst`, where
/// `A_dst` is an `A_src`-bimodule through the restriction `src → dst`:
/// `dφ(a_0..a_q) = ρ(a_0)φ(a_1..) + Σ_i (−1)^{i+1} φ(.., a_i a_{i+1}, ..) + (−1)^{q+1} φ(..a_{q−1})ρ(a_q)`.
pub fn hoch_diff_eval(
    phi: &dyn Cochain,
    src: &LocalAlgebra,
    dst: &LocalAlgebra,
    args: &[Monomial],
) -> Result<Poly, CochainError> {
    let q = phi.arity();
    if args.len() != q + 1 {
        return Err(CochainError::Arity { expected: q + 1, got: args.len() });
    }
    let nv = dst.nvars();
    let rho = |m: &Monomial| restrict(src, dst, &Poly::monomial(m.clone()));
    let mut acc = dst.mul(&rho(&args[0]), &phi.eval_basis(&args[1..])?);
    for i in 0..q {
        let mut polys: Vec<Poly> = Vec::with_capacity(q);
        for (k, a) in args.iter().enumerate() {
            if k == i + 1 {
                continue;
            }
            if k == i {
                polys.push(src.mul(&Poly::monomial(a.clone()), &Poly::monomial(args[i + 1].clone())));
            } else {
                polys.push(Poly::monomial(a.clone()));
            }
        }
        let v = eval_multilinear(phi, nv, &polys)?;
        acc = if i % 2 == 0 { acc.sub(&v) } else { acc.add(&v) };
    }
    let last = dst.mul(&phi.eval_basis(&args[..q])?, &rho(&args[q]));
    acc = if q.is_multiple_of(2) { acc.sub(&last) } else { acc.add(&last) };
    Ok(acc)
}

// ---------------------------------------------------------------------------
// ζ′ transformation rules
// ---------------------------------------------------------------------------

/// `ζ′_{t,s}(φ) = ζ_{t,s} ∘ φ ∘ ζ_{s,t}^{⊗q}` for a cochain `φ` on chart `t`.
struct ZetaConjugate<'a> {
    inner: &'a dyn Cochain,
    alg_t: &'a LocalAlgebra,
    alg_s: &'a LocalAlgebra,
}

impl Cochain for ZetaConjugate<'_> {
    fn arity(&self) -> usize {
        self.inner.arity()
    }

    fn eval_basis(&self, args: &[Monomial]) -> Result<Poly, CochainError> {
        let moved: Vec<Monomial> = args.iter().map(|m| change_chart(m, self.alg_s.chart, self.alg_t.chart)).collect();
        Ok(restrict(self.alg_t, self.alg_s, &self.inner.eval_basis(&moved)?))
    }
}

/// Outcome of checking the three chart-change rules on a sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaReport {
    pub t: usize,
    pub s: usize,
    pub rule1: bool,
    pub rule2: bool,
    pub rule3: bool,
    pub evaluations: usize,
    pub failures: Vec<String>,
}

impl ZetaReport {
    pub fn passed(&self) -> bool {
        self.rule1 && self.rule2 && self.rule3
    }
}

/// Checks, on the overlap of charts `t` and `s`:
/// (1) `ζ′(°∂^t_i) = y_t °∂^s_i` for `i ≠ t, s`;
/// (2) `ζ′(°∂^t_s) = −Σ_{i≠s} y_t y_i °∂^s_i`;
/// (3) `ζ′(°μ_t) = y_t^d °μ_s`,
/// evaluating both sides on all sampled basis monomials (pairs for rule 3).
pub fn zeta_rules_check(ring: &RingDesc, t: usize, s: usize, bound: i32, neg: i32) -> ZetaReport {
    assert!(t != s, "charts must differ");
    let alg_t = ring.dehomogenize(t, &[s]);
    let alg_s = ring.dehomogenize(s, &[t]);
    let nv = ring.nvars();
    let sample = alg_s.sample_basis(bound, neg);
    let mut report = ZetaReport { t, s, rule1: true, rule2: true, rule3: true, evaluations: 0, failures: Vec::new() };
    let y = |i: usize| Poly::var(nv, i);
    let conj = |e: &CochainExpr, args: &[Monomial]| {
        ZetaConjugate { inner: e, alg_t: &alg_t, alg_s: &alg_s }.eval_basis(args).expect("sampled basis")
    };

    for i in (0..=ring.n).filter(|&i| i != t && i != s) {
        let lhs_op = CochainExpr::new(&alg_t, 1, vec![(Poly::one(nv), vec![BasicOp::Partial(i)])]);
        let rhs_op = CochainExpr::new(&alg_s, 1, vec![(y(t), vec![BasicOp::Partial(i)])]);
        for f in &sample {
            report.evaluations += 1;
            let args = std::slice::from_ref(f);
            if conj(&lhs_op, args) != rhs_op.eval_basis(args).expect("sampled basis") {
                report.rule1 = false;
                report.failures.push(format!("rule 1, i={i}, f={}", f.render_with("y")));
            }
        }
    }

    let lhs_op = CochainExpr::new(&alg_t, 1, vec![(Poly::one(nv), vec![BasicOp::Partial(s)])]);
    let rhs_terms = (0..=ring.n)
        .filter(|&i| i != s)
        .map(|i| (y(t).mul(&y(i)).neg(), vec![BasicOp::Partial(i)]))
        .collect();
    let rhs_op = CochainExpr::new(&alg_s, 1, rhs_terms);
    for f in &sample {
        report.evaluations += 1;
        let args = std::slice::from_ref(f);
        if conj(&lhs_op, args) != rhs_op.eval_basis(args).expect("sampled basis") {
            report.rule2 = false;
            report.failures.push(format!("rule 2, f={}", f.render_with("y")));
        }
    }

    let lhs_op = CochainExpr::new(&alg_t, 2, vec![(Poly::one(nv), vec![BasicOp::Mu])]);
    let rhs_op = CochainExpr::new(&alg_s, 2, vec![(y(t).pow(ring.d as u32), vec![BasicOp::Mu])]);
    for f in &sample {
        for g in &sample {
            report.evaluations += 1;
            let args = [f.clone(), g.clone()];
            if conj(&lhs_op, &args) != rhs_op.eval_basis(&args).expect("sampled basis") {
                report.rule3 = false;
                report.failures.push(format!("rule 3, f={}, g={}", f.render_with("y"), g.render_with("y")));
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// The cover and Gerstenhaber–Schack cochains
// ---------------------------------------------------------------------------

/// `V_I = ∩_{i∈I} U_i` for a nonempty sorted index set `I ⊆ {1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OpenSet(pub Vec<usize>);

impl OpenSet {
    /// The chart `λ(V_I) = max I`.
    pub fn chart(&self) -> usize {
        *self.0.last().expect("nonempty index set")
    }

    pub fn inverted(&self) -> Vec<usize> {
        self.0[..self.0.len() - 1].to_vec()
    }

    /// `V ⊆ W` as open sets.
    pub fn is_open_subset_of(&self, w: &OpenSet) -> bool {
        w.0.iter().all(|i| self.0.contains(i))
    }

    pub fn label(&self) -> String {
        let digits: String = self.0.iter().map(|i| i.to_string()).collect();
        format!("V{digits}")
    }

    pub fn algebra(&self, ring: &RingDesc) -> LocalAlgebra {
        ring.dehomogenize(self.chart(), &self.inverted())
    }
}

/// All opens of the cover, ordered by index-set size, then lexicographically.
pub fn cover(n: usize) -> Vec<OpenSet> {
    let mut out: Vec<OpenSet> = (1u32..(1 << n))
        .map(|mask| OpenSet((1..=n).filter(|&i| mask & (1 << (i - 1)) != 0).collect()))
        .collect();
    out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    out
}

/// Strict chains `V_0 ⊂ V_1 ⊂ … ⊂ V_p` of opens of the cover.
pub fn chains(n: usize, p: usize) -> Vec<Vec<OpenSet>> {
    let opens = cover(n);
    let mut out: Vec<Vec<OpenSet>> = opens.iter().map(|v| vec![v.clone()]).collect();
    for _ in 0..p {
        let mut next = Vec::new();
        for ch in &out {
            let top = ch.last().expect("nonempty chain");
            for w in &opens {
                if w != top && top.is_open_subset_of(w) {
                    let mut c = ch.clone();
                    c.push(w.clone());
                    next.push(c);
                }
            }
        }
        out = next;
    }
    out
}

fn chain_label(chain: &[OpenSet]) -> String {
    chain.iter().map(OpenSet::label).collect::<Vec<_>>().join("⊂")
}

/// A component `f_{V⊆W}: A_W → A_V` of the form `pre ∘ ρ + ρ ∘ post`, where
/// `pre` lives on `A_V` and `post` on `A_W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionComponent {
    pub source: LocalAlgebra,
    pub target: LocalAlgebra,
    pub pre: CochainExpr,
    pub post: CochainExpr,
}

impl RestrictionComponent {
    pub fn is_zero(&self) -> bool {
        self.pre.is_zero() && self.post.is_zero()
    }

    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        if !self.pre.is_zero() {
            parts.push(format!("({}) ∘ ρ", self.pre.render()));
        }
        if !self.post.is_zero() {
            parts.push(format!("ρ ∘ ({})", self.post.render()));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl Cochain for RestrictionComponent {
    fn arity(&self) -> usize {
        self.pre.arity
    }

    fn eval_basis(&self, args: &[Monomial]) -> Result<Poly, CochainError> {
        let moved: Vec<Monomial> =
            args.iter().map(|m| change_chart(m, self.source.chart, self.target.chart)).collect();
        let a = self.pre.eval_basis(&moved)?;
        let b = restrict(&self.source, &self.target, &self.post.eval_basis(args)?);
        Ok(a.add(&b))
    }
}

/// A component `c_{V_0⊂V_1⊂V_2} ∈ A_{V_0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistComponent {
    pub alg: LocalAlgebra,
    pub value: Poly,
}

/// A degree-2 Gerstenhaber–Schack cochain `(m, f, c)`; absent components are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GSCochain {
    pub n: usize,
    pub d: i32,
    pub m: BTreeMap<OpenSet, CochainExpr>,
    pub f: BTreeMap<(OpenSet, OpenSet), RestrictionComponent>,
    pub c: BTreeMap<Vec<OpenSet>, TwistComponent>,
}

fn cover_order(n: usize) -> impl Fn(&OpenSet) -> usize {
    let opens = cover(n);
    move |v: &OpenSet| opens.iter().position(|w| w == v).expect("open of the cover")
}

impl GSCochain {
    pub fn zero(ring: &RingDesc) -> Self {
        GSCochain { n: ring.n, d: ring.d, m: BTreeMap::new(), f: BTreeMap::new(), c: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_empty() && self.f.is_empty() && self.c.is_empty()
    }

    fn ordered_m(&self) -> Vec<(&OpenSet, &CochainExpr)> {
        let key = cover_order(self.n);
        let mut v: Vec<_> = self.m.iter().collect();
        v.sort_by_key(|(o, _)| key(o));
        v
    }

    fn ordered_f(&self) -> Vec<(&(OpenSet, OpenSet), &RestrictionComponent)> {
        let key = cover_order(self.n);
        let mut v: Vec<_> = self.f.iter().collect();
        v.sort_by_key(|((a, b), _)| (key(b), key(a)));
        v
    }

    fn ordered_c(&self) -> Vec<(&Vec<OpenSet>, &TwistComponent)> {
        let key = cover_order(self.n);
        let mut v: Vec<_> = self.c.iter().collect();
        v.sort_by_key(|(ch, _)| ch.iter().rev().map(&key).collect::<Vec<_>>());
        v
    }

    /// Deterministic multi-line text; zero components are omitted.
    pub fn render(&self) -> String {
        let mut lines = Vec::new();
        for (v, e) in self.ordered_m() {
            lines.push(format!("m[{}] = {}", v.label(), e.render()));
        }
        for ((v, w), comp) in self.ordered_f() {
            lines.push(format!("f[{}⊂{}] = {}", v.label(), w.label(), comp.render()));
        }
        for (ch, comp) in self.ordered_c() {
            lines.push(format!("c[{}] = {}", chain_label(ch), comp.alg.render(&comp.value)));
        }
        if lines.is_empty() {
            lines.push("0".to_string());
        }
        lines.join("\n")
    }

    /// JSON form: lists of components with `(chart, coefficient, operators)` triples.
    pub fn to_json(&self) -> Value {
        let m: Vec<Value> = self
            .ordered_m()
            .into_iter()
            .map(|(v, e)| json!({"open": v.label(), "terms": e.to_json()}))
            .collect();
        let f: Vec<Value> = self
            .ordered_f()
            .into_iter()
            .map(|((v, w), comp)| {
                json!({
                    "inclusion": format!("{}⊂{}", v.label(), w.label()),
                    "after_restriction": comp.pre.to_json(),
                    "before_restriction": comp.post.to_json(),
                })
            })
            .collect();
        let c: Vec<Value> = self
            .ordered_c()
            .into_iter()
            .map(|(ch, comp)| {
                json!({
                    "chain": chain_label(ch),
                    "chart": comp.alg.chart,
                    "coefficient": comp.alg.render(&comp.value),
                })
            })
            .collect();
        json!({"n": self.n, "d": self.d, "m": m, "f": f, "c": c})
    }
}

// ---------------------------------------------------------------------------
// Cocycle checks
// ---------------------------------------------------------------------------

/// Sampling parameters for evaluation checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampling {
    /// Bound on the non-negative part of the degree of sampled monomials.
    pub bound: i32,
    /// Lower bound `−neg` on the exponents of inverted variables.
    pub neg: i32,
    /// Degree bound for argument triples (2-cochain differentials), whose
    /// count grows cubically.
    pub triple_bound: i32,
}

impl Sampling {
    /// The default: degree at most `d + 2`, Laurent exponents at least `−2`,
    /// triples of degree at most `d − 1` (enough for every `y_0` overflow).
    pub fn default_for(d: i32) -> Self {
        Sampling { bound: d + 2, neg: 2, triple_bound: d - 1 }
    }
}

/// Result of evaluating the GS cocycle conditions on samples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleCheck {
    /// `d_Hoch m_V = 0` for every open.
    pub hoch_m: bool,
    /// `(d_simp m)_{V⊆W} = d_Hoch f_{V⊆W}` for every inclusion.
    pub mixed: bool,
    /// `d_simp f = 0` on every 2-simplex (the Hochschild part of `c` vanishes
    /// because the algebras are commutative).
    pub simp_f: bool,
    /// `d_simp c = 0` on every 3-simplex.
    pub simp_c: bool,
    pub evaluations: usize,
    pub failures: Vec<String>,
}

impl CocycleCheck {
    pub fn passed(&self) -> bool {
        self.hoch_m && self.mixed && self.simp_f && self.simp_c
    }
}

fn tuples(sample: &[Monomial], k: usize) -> Vec<Vec<Monomial>> {
    let mut out: Vec<Vec<Monomial>> = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                sample.iter().map(move |m| {
                    let mut u = t.clone();
                    u.push(m.clone());
                    u
                })
            })
            .collect();
    }
    out
}

fn triple_sample(alg: &LocalAlgebra, sampling: Sampling) -> Vec<Monomial> {
    alg.sample_basis(sampling.triple_bound, sampling.neg.min(1))
}

/// Evaluates the cocycle conditions of a degree-2 GS cochain.
pub fn check_gs_cocycle(ring: &RingDesc, x: &GSCochain, sampling: Sampling) -> CocycleCheck {
    let mut out = CocycleCheck {
        hoch_m: true,
        mixed: true,
        simp_f: true,
        simp_c: true,
        evaluations: 0,
        failures: Vec::new(),
    };
    let opens = cover(ring.n);
    let nv = ring.nvars();
    let m_of = |v: &OpenSet| x.m.get(v).cloned().unwrap_or_else(|| CochainExpr::zero(&v.algebra(ring), 2));
    let f_of = |v: &OpenSet, w: &OpenSet| {
        x.f.get(&(v.clone(), w.clone())).cloned().unwrap_or_else(|| RestrictionComponent {
            source: w.algebra(ring),
            target: v.algebra(ring),
            pre: CochainExpr::zero(&v.algebra(ring), 1),
            post: CochainExpr::zero(&w.algebra(ring), 1),
        })
    };

    for v in &opens {
        let Some(m) = x.m.get(v) else { continue };
        let alg = v.algebra(ring);
        for args in tuples(&triple_sample(&alg, sampling), 3) {
            out.evaluations += 1;
            let val = hoch_diff_eval(m, &alg, &alg, &args).expect("sampled basis");
            if !val.is_zero() {
                out.hoch_m = false;
                out.failures.push(format!("d_Hoch m[{}] at {:?} = {}", v.label(), args, alg.render(&val)));
                break;
            }
        }
    }

    for ch in chains(ring.n, 1) {
        let (v, w) = (&ch[0], &ch[1]);
        let (mv, mw, f) = (m_of(v), m_of(w), f_of(v, w));
        if mv.is_zero() && mw.is_zero() && f.is_zero() {
            continue;
        }
        let (av, aw) = (v.algebra(ring), w.algebra(ring));
        let sample = aw.sample_basis(sampling.bound, sampling.neg);
        for args in tuples(&sample, 2) {
            out.evaluations += 1;
            let moved: Vec<Monomial> = args.iter().map(|a| change_chart(a, aw.chart, av.chart)).collect();
            let simp = restrict(&aw, &av, &mw.eval_basis(&args).expect("sampled basis"))
                .sub(&mv.eval_basis(&moved).expect("sampled basis"));
            let hoch = hoch_diff_eval(&f, &aw, &av, &args).expect("sampled basis");
            let val = simp.sub(&hoch);
            if !val.is_zero() {
                out.mixed = false;
                out.failures.push(format!(
                    "(d_simp m − d_Hoch f)[{}⊂{}] at {:?} = {}",
                    v.label(),
                    w.label(),
                    args,
                    av.render(&val)
                ));
                break;
            }
        }
    }

    for ch in chains(ring.n, 2) {
        let (v0, v1, v2) = (&ch[0], &ch[1], &ch[2]);
        let (f01, f02, f12) = (f_of(v0, v1), f_of(v0, v2), f_of(v1, v2));
        if f01.is_zero() && f02.is_zero() && f12.is_zero() {
            continue;
        }
        let (a0, a1, a2) = (v0.algebra(ring), v1.algebra(ring), v2.algebra(ring));
        for a in a2.sample_basis(sampling.bound, sampling.neg) {
            out.evaluations += 1;
            let term0 = restrict(&a1, &a0, &f12.eval_basis(std::slice::from_ref(&a)).expect("sampled basis"));
            let term1 = f02.eval_basis(std::slice::from_ref(&a)).expect("sampled basis");
            let moved = change_chart(&a, a2.chart, a1.chart);
            let term2 = f01.eval_basis(&[moved]).expect("sampled basis");
            let val = term0.sub(&term1).add(&term2);
            if !val.is_zero() {
                out.simp_f = false;
                out.failures.push(format!("d_simp f[{}] at {:?} = {}", chain_label(&ch), a, a0.render(&val)));
                break;
            }
        }
    }

    for ch in chains(ring.n, 3) {
        let val_of = |c: &[OpenSet]| x.c.get(c).map(|t| t.value.clone()).unwrap_or_else(|| Poly::zero(nv));
        let a0 = ch[0].algebra(ring);
        let a1 = ch[1].algebra(ring);
        let mut acc = restrict(&a1, &a0, &val_of(&ch[1..]));
        for k in 1..4 {
            let mut face = ch.clone();
            face.remove(k);
            let v = val_of(&face);
            acc = if k % 2 == 1 { acc.sub(&v) } else { acc.add(&v) };
        }
        out.evaluations += 1;
        if !a0.reduce(&acc).is_zero() {
            out.simp_c = false;
            out.failures.push(format!("d_simp c[{}] = {}", chain_label(&ch), a0.render(&acc)));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Representatives
// ---------------------------------------------------------------------------

/// Which degree-2 class to emit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassSpec {
    /// `(t̄ ∘ °μ, 0, 0)` for a degree-`d` form `t` (an element of `P^0_d`).
    Multiplication(Poly),
    /// The leftmost-column cocycle of the given Hodge weight (`d = n+1 = 4`).
    HodgeK(usize),
}

impl ClassSpec {
    /// Parses `hodge0-k`, `hodge1-k`, `hodge2-k`, or a degree-`d` polynomial.
    pub fn parse(text: &str, ring: &RingDesc) -> Result<Self, CochainError> {
        match text.trim() {
            "hodge0-k" => Ok(ClassSpec::HodgeK(0)),
            "hodge1-k" => Ok(ClassSpec::HodgeK(1)),
            "hodge2-k" => Ok(ClassSpec::HodgeK(2)),
            other => {
                let t = parse_poly(other, ring.n).map_err(|e| CochainError::Unsupported(e.to_string()))?;
                Ok(ClassSpec::Multiplication(t))
            }
        }
    }
}

/// Sign of the permutation sorting `v` (which must have distinct entries).
fn sort_sign(v: &[usize]) -> i64 {
    let mut inv = 0;
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            if v[a] > v[b] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The leftmost-column Čech component `c_{i_1…i_s}` (indices increasing) of
/// the Hodge representative for `d = n + 1`: a list of homogeneous Laurent
/// coefficients paired with index words `𝔣_{…}`:
/// `(−1)^{℘+n−s} x_{i_1}^{-1}…x_{i_s}^{-1} Σ_m (−1)^m ∂F/∂x_{j_m} 𝔣_{j_0…ĵ_m…j_{n−s}}`,
/// where `j_0 = 0 < j_1 < …` enumerate `{0} ∪ ({1..n} ∖ I)` and
/// `℘ = (n² − s² + n − s)/2 − Σ_{k≥1} j_k`.
pub fn left_cech_component(ring: &RingDesc, is: &[usize]) -> Vec<(Poly, Vec<usize>)> {
    let n = ring.n;
    let nv = ring.nvars();
    let s = is.len();
    let mut js: Vec<usize> = vec![0];
    js.extend((1..=n).filter(|j| !is.contains(j)));
    let wp = (n * n - s * s + n - s) as i64 / 2 - js.iter().sum::<usize>() as i64;
    let sign0 = if (wp + (n - s) as i64).rem_euclid(2) == 0 { 1 } else { -1 };
    let mut inv = Monomial::one(nv);
    for &i in is {
        inv = inv.with_exp(i, -1);
    }
    (0..js.len())
        .map(|m| {
            let sign = if m % 2 == 0 { sign0 } else { -sign0 };
            let coeff = ring.partial(js[m]).mul_term(&int(sign), &inv);
            let word: Vec<usize> = js.iter().enumerate().filter(|&(k, _)| k != m).map(|(_, &j)| j).collect();
            (coeff, word)
        })
        .collect()
}

/// The simplicial component on a chain `V_0 ⊂ … ⊂ V_p` obtained from the
/// alternating Čech cochain through `λ`: `c_{λ(V_0)…λ(V_p)}` restricted to `V_0`.
fn simplicial_component(ring: &RingDesc, chain: &[OpenSet]) -> Option<CochainExpr> {
    let lambdas: Vec<usize> = chain.iter().map(OpenSet::chart).collect();
    let distinct: BTreeSet<usize> = lambdas.iter().copied().collect();
    if distinct.len() != lambdas.len() {
        return None;
    }
    let mut sorted = lambdas.clone();
    sorted.sort_unstable();
    let sign = int(sort_sign(&lambdas));
    let alg = chain[0].algebra(ring);
    let arity = ring.n - 1 - (chain.len() - 1);
    let terms = left_cech_component(ring, &sorted)
        .into_iter()
        .map(|(coeff, word)| {
            assert!(!word.contains(&alg.chart), "chart direction in a leftmost component");
            let c = coeff.set_var_to_one(alg.chart).scale(&sign);
            (c, word.into_iter().map(BasicOp::Partial).collect())
        })
        .collect();
    Some(CochainExpr::new(&alg, arity, terms))
}

/// Emits a GS 2-cocycle for the requested class.
pub fn emit_h2_representative(ring: &RingDesc, spec: &ClassSpec) -> Result<GSCochain, CochainError> {
    let mut out = GSCochain::zero(ring);
    match spec {
        ClassSpec::Multiplication(t) => {
            if !t.is_zero() && (t.homogeneous_degree() != Some(ring.d) || t.nvars() != ring.nvars()) {
                return Err(CochainError::Unsupported(format!("{t} is not a form of degree {}", ring.d)));
            }
            for v in cover(ring.n) {
                let alg = v.algebra(&ring.clone());
                let e = CochainExpr::new(&alg, 2, vec![(t.set_var_to_one(v.chart()), vec![BasicOp::Mu])]);
                if !e.is_zero() {
                    out.m.insert(v, e);
                }
            }
        }
        ClassSpec::HodgeK(r) => {
            if ring.n != 3 || ring.d != 4 {
                return Err(CochainError::Unsupported(format!(
                    "hodge{r}-k representatives are emitted for quartic surfaces (n = 3, d = 4), got n = {}, d = {}",
                    ring.n, ring.d
                )));
            }
            let p = ring.n - 1 - r;
            for ch in chains(ring.n, p) {
                let Some(e) = simplicial_component(ring, &ch) else { continue };
                if e.is_zero() {
                    continue;
                }
                match p {
                    0 => {
                        out.m.insert(ch[0].clone(), e);
                    }
                    1 => {
                        let comp = RestrictionComponent {
                            source: ch[1].algebra(ring),
                            target: ch[0].algebra(ring),
                            post: CochainExpr::zero(&ch[1].algebra(ring), 1),
                            pre: e,
                        };
                        out.f.insert((ch[0].clone(), ch[1].clone()), comp);
                    }
                    _ => {
                        let value = e.terms.iter().fold(Poly::zero(ring.nvars()), |acc, t| acc.add(&t.coeff));
                        out.c.insert(ch.clone(), TwistComponent { alg: e.alg.clone(), value });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `s_t = −(1/d) Σ_{l ≠ t} y_l °∂/∂y_l` on chart algebra `alg`.
pub fn fermat_primitive(alg: &LocalAlgebra) -> CochainExpr {
    let nv = alg.nvars();
    let scale = rat(-1, alg.d as i64);
    let terms = alg.variables().into_iter().map(|l| (Poly::var(nv, l).scale(&scale), vec![BasicOp::Partial(l)])).collect();
    CochainExpr::new(alg, 1, terms)
}

/// Whether `F` is the Fermat form `Σ x_i^d`.
pub fn is_fermat(ring: &RingDesc) -> bool {
    let nv = ring.nvars();
    let fermat = (0..nv).fold(Poly::zero(nv), |acc, i| acc.add(&Poly::monomial(Monomial::var_pow(nv, i, ring.d))));
    ring.f == fermat
}

/// The equivalent pair `(m,0,0)` and `(0,f,0)` for the Fermat quartic and a
/// degree-4 form `t`: `m_V = t|_V °μ`, `f_{V⊆W} = t|_V s_{λV} ∘ ρ − ρ ∘ t|_W s_{λW}`.
pub fn fermat_equivalence_pair(ring: &RingDesc, t: &Poly) -> Result<(GSCochain, GSCochain), CochainError> {
    if ring.n != 3 || ring.d != 4 || !is_fermat(ring) {
        return Err(CochainError::Unsupported("equivalence pairs are emitted for the Fermat quartic only".into()));
    }
    let m = emit_h2_representative(ring, &ClassSpec::Multiplication(t.clone()))?;
    let mut f = GSCochain::zero(ring);
    if !t.is_zero() {
        for ch in chains(ring.n, 1) {
            let (v, w) = (&ch[0], &ch[1]);
            if v.chart() == w.chart() {
                continue;
            }
            let (av, aw) = (v.algebra(ring), w.algebra(ring));
            let pre = fermat_primitive(&av).times(&t.set_var_to_one(av.chart));
            let post = fermat_primitive(&aw).times(&t.set_var_to_one(aw.chart)).scale(&int(-1));
            f.f.insert((v.clone(), w.clone()), RestrictionComponent { source: aw, target: av, pre, post });
        }
    }
    Ok((m, f))
}

/// Outcome of the evaluation checks on a Fermat equivalence pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCheck {
    /// `m_V = d_Hoch(t|_V s_{λV})` on sampled pairs of every open.
    pub m_is_coboundary: bool,
    /// `f_{V⊆W}(a) = t|_V s(ρa) − ρ(t|_W s(a))` with `s(y^p) = −(|p|/4) y^p`.
    pub f_matches_formula: bool,
    pub m_cocycle: CocycleCheck,
    pub f_cocycle: CocycleCheck,
    pub evaluations: usize,
}

impl PairCheck {
    pub fn passed(&self) -> bool {
        self.m_is_coboundary && self.f_matches_formula && self.m_cocycle.passed() && self.f_cocycle.passed()
    }
}

/// Evaluates the equivalence `(m,0,0) − (0,f,0) = d_GS(s)` on samples.
pub fn check_fermat_pair(ring: &RingDesc, t: &Poly, sampling: Sampling) -> Result<PairCheck, CochainError> {
    let (m, f) = fermat_equivalence_pair(ring, t)?;
    let mut evaluations = 0;
    let mut m_is_coboundary = true;
    for v in cover(ring.n) {
        let alg = v.algebra(ring);
        let s = fermat_primitive(&alg).times(&t.set_var_to_one(alg.chart));
        let mv = m.m.get(&v).cloned().unwrap_or_else(|| CochainExpr::zero(&alg, 2));
        for args in tuples(&alg.sample_basis(sampling.bound, sampling.neg), 2) {
            evaluations += 1;
            if hoch_diff_eval(&s, &alg, &alg, &args)? != mv.eval_basis(&args)? {
                m_is_coboundary = false;
            }
        }
    }
    // Closed form of s_t on a basis monomial: minus its chart degree over d, times the monomial.
    let s_closed = |alg: &LocalAlgebra, a: &Monomial| -> Poly {
        let deg = a.degree() - a.exp(alg.chart);
        alg.mul(&t.set_var_to_one(alg.chart), &Poly::term(rat(-(deg as i64), ring.d as i64), a.clone()))
    };
    let mut f_matches_formula = true;
    for ch in chains(ring.n, 1) {
        let (v, w) = (&ch[0], &ch[1]);
        let (av, aw) = (v.algebra(ring), w.algebra(ring));
        for a in aw.sample_basis(sampling.bound, sampling.neg) {
            evaluations += 1;
            let got = f.f.get(&(v.clone(), w.clone())).map(|c| c.eval_basis(std::slice::from_ref(&a)));
            let got = match got {
                Some(r) => r?,
                None => Poly::zero(ring.nvars()),
            };
            let want = s_closed(&av, &change_chart(&a, aw.chart, av.chart)).sub(&restrict(&aw, &av, &s_closed(&aw, &a)));
            if got != want {
                f_matches_formula = false;
            }
        }
    }
    let m_cocycle = check_gs_cocycle(ring, &m, sampling);
    let f_cocycle = check_gs_cocycle(ring, &f, sampling);
    evaluations += m_cocycle.evaluations + f_cocycle.evaluations;
    Ok(PairCheck { m_is_coboundary, f_matches_formula, m_cocycle, f_cocycle, evaluations })
}

/// The ring `x_0^6 + x_1^5 x_2` of the intertwined family at `d = 6`.
pub fn intertwined_ring() -> RingDesc {
    RingDesc::parse("x0^6 + x1^5*x2", 2).expect("valid family")
}

/// The intertwined cocycle `(m, f, 0)` for `x_0^6 + x_1^5 x_2`:
/// `m_{V_2} = m_{V_12} = −4 y_0^4 y_1^3 °μ`,
/// `f_{V_12⊂V_1} = (y_0^5 y_1^{-2} °∂/∂y_0 + 2 y_0^4 y_1^{-1} °∂/∂y_1) ∘ ρ`,
/// all other components zero.
pub fn emit_intertwined_representative(d: i32) -> Result<GSCochain, CochainError> {
    if d != 6 {
        return Err(CochainError::Unsupported(format!("intertwined representatives are emitted for d = 6, got {d}")));
    }
    let ring = intertwined_ring();
    let nv = ring.nvars();
    let mono = |e: [i32; 3]| Poly::monomial(Monomial(e.to_vec()));
    let mut out = GSCochain::zero(&ring);
    let (v1, v2, v12) = (OpenSet(vec![1]), OpenSet(vec![2]), OpenSet(vec![1, 2]));
    for v in [&v2, &v12] {
        let alg = v.algebra(&ring);
        let coeff = mono([4, 3, 0]).scale(&int(-4));
        out.m.insert(v.clone(), CochainExpr::new(&alg, 2, vec![(coeff, vec![BasicOp::Mu])]));
    }
    let a12 = v12.algebra(&ring);
    let pre = CochainExpr::new(
        &a12,
        1,
        vec![
            (mono([5, -2, 0]), vec![BasicOp::Partial(0)]),
            (mono([4, -1, 0]).scale(&int(2)), vec![BasicOp::Partial(1)]),
        ],
    );
    let comp = RestrictionComponent {
        source: v1.algebra(&ring),
        target: a12.clone(),
        post: CochainExpr::zero(&v1.algebra(&ring), 1),
        pre,
    };
    out.f.insert((v12, v1), comp);
    debug_assert_eq!(nv, 3);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly_any;

    fn mono(e: &[i32]) -> Monomial {
        Monomial(e.to_vec())
    }

    fn fermat() -> RingDesc {
        RingDesc::parse("x0^4+x1^4+x2^4+x3^4", 3).unwrap()
    }

    #[test]
    fn partial_examples() {
        let r = fermat();
        let a1 = r.dehomogenize(1, &[]);
        assert_eq!(
            circ_partial_eval(&a1, 2, &mono(&[1, 0, 3, 0])).unwrap(),
            Poly::term(int(3), mono(&[1, 0, 2, 0]))
        );
        let a3 = r.dehomogenize(3, &[]);
        assert!(circ_partial_eval(&a3, 1, &mono(&[2, 0, 0, 0])).unwrap().is_zero());
        let a21 = r.dehomogenize(2, &[1]);
        assert_eq!(circ_partial_eval(&a21, 1, &mono(&[0, -2, 0, 0])).unwrap(), Poly::term(int(-2), mono(&[0, -3, 0, 0])));
        assert_eq!(
            circ_partial_eval(&a1, 1, &mono(&[0, 0, 1, 0])),
            Err(CochainError::ChartVariable { var: 1, chart: 1 })
        );
    }

    #[test]
    fn mu_examples() {
        let r = fermat();
        let a1 = r.dehomogenize(1, &[]);
        assert_eq!(circ_mu_eval(&a1, &mono(&[3, 0, 0, 0]), &mono(&[2, 0, 0, 0])).unwrap(), Poly::var(4, 0));
        assert!(circ_mu_eval(&a1, &mono(&[1, 0, 0, 0]), &mono(&[0, 0, 3, 0])).unwrap().is_zero());
        let mu = CochainExpr::new(&a1, 2, vec![(Poly::one(4), vec![BasicOp::Mu])]);
        let args = [mono(&[3, 0, 0, 0]), mono(&[3, 0, 0, 0]), mono(&[2, 0, 0, 0])];
        assert!(hoch_diff_eval(&mu, &a1, &a1, &args).unwrap().is_zero());
    }

    #[test]
    fn product_of_basis_monomials_splits_through_mu() {
        // For a tail without y_0: f·g = (f·g without overflow) − tail·°μ(f,g).
        let r = fermat();
        let a1 = r.dehomogenize(1, &[]);
        let sample = a1.sample_basis(4, 0);
        for f in &sample {
            for g in &sample {
                let prod = a1.mul(&Poly::monomial(f.clone()), &Poly::monomial(g.clone()));
                let mu = circ_mu_eval(&a1, f, g).unwrap();
                let expected = if mu.is_zero() {
                    Poly::monomial(f.mul(g))
                } else {
                    a1.tail().mul(&mu).neg()
                };
                assert_eq!(prod, expected);
            }
        }
    }

    #[test]
    fn identity_like_cochain_differential() {
        let r = fermat();
        let a1 = r.dehomogenize(1, &[]);
        let e = CochainExpr::new(&a1, 1, vec![(Poly::var(4, 0), vec![BasicOp::Partial(0)])]);
        let y0 = mono(&[1, 0, 0, 0]);
        // d(e)(y0, y0) = y0·e(y0) − e(y0²) + e(y0)·y0 = y0² − 2y0² + y0² = 0.
        assert!(hoch_diff_eval(&e, &a1, &a1, &[y0.clone(), y0]).unwrap().is_zero());
    }

    #[test]
    fn cup_supercommutativity() {
        let r = fermat();
        let a1 = r.dehomogenize(1, &[]);
        let sample = a1.sample_basis(4, 0);
        let (p0, p2, mu) = (BasicOp::Partial(0), BasicOp::Partial(2), BasicOp::Mu);
        for f in &sample {
            for g in &sample {
                let args = [f.clone(), g.clone()];
                assert_eq!(word_eval(&a1, &[p0, p2], &args).unwrap(), word_eval(&a1, &[p2, p0], &args).unwrap().neg());
            }
        }
        for f in sample.iter().take(12) {
            for g in sample.iter().take(12) {
                for h in sample.iter().rev().take(12) {
                    let args = [f.clone(), g.clone(), h.clone()];
                    assert_eq!(word_eval(&a1, &[p0, mu], &args).unwrap(), word_eval(&a1, &[mu, p0], &args).unwrap());
                }
            }
        }
        let one = word_eval(&a1, &[p2], &[mono(&[0, 0, 2, 0])]).unwrap();
        assert_eq!(one, circ_partial_eval(&a1, 2, &mono(&[0, 0, 2, 0])).unwrap());
        assert!(matches!(word_eval(&a1, &[p0, p2], &[mono(&[0, 0, 0, 0])]), Err(CochainError::Arity { .. })));
    }

    #[test]
    fn beta_words_and_signs() {
        assert_eq!(beta_word(&[1], 0), (int(1), vec![BasicOp::Partial(1)]));
        assert_eq!(beta_word(&[], 1), (int(1), vec![BasicOp::Mu]));
        assert_eq!(beta_word(&[0, 2], 0).0, int(-1));
        assert_eq!(beta_word(&[0, 1, 2], 0).0, int(-1));
        assert_eq!(beta_word(&[0, 1, 2, 3], 0).0, int(1));
    }

    #[test]
    fn beta_chain_map_spot_check() {
        // d_Hoch(β(𝔢_i)) = β(∂𝔢_i) = ∂G/∂y_i · °μ on a chart whose tail avoids y_0.
        let r = fermat();
        for t in 1..=3 {
            let alg = r.dehomogenize(t, &[]);
            let sample = alg.sample_basis(5, 0);
            for i in alg.variables() {
                let dg = crate::poly::partial(&alg.relation, i);
                let (sign, word) = beta_word(&[i], 0);
                let e = CochainExpr::new(&alg, 1, vec![(Poly::constant(4, sign), word)]);
                for f in &sample {
                    for g in &sample {
                        let args = [f.clone(), g.clone()];
                        let lhs = hoch_diff_eval(&e, &alg, &alg, &args).unwrap();
                        let rhs = alg.mul(&dg, &beta_eval(&alg, &[], 1, &args).unwrap());
                        assert_eq!(lhs, rhs, "chart {t}, i={i}, args {args:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn chart_change_round_trip() {
        let m = mono(&[2, -1, 3, 0]);
        let moved = change_chart(&m, 3, 2);
        assert_eq!(moved, mono(&[2, -1, 0, -4]));
        assert_eq!(change_chart(&moved, 2, 3), m);
    }

    #[test]
    fn zeta_rules_on_fermat() {
        let r = fermat();
        for (t, s) in [(1, 2), (2, 1), (1, 3), (3, 2)] {
            let rep = zeta_rules_check(&r, t, s, 4, 1);
            assert!(rep.passed(), "{:?}", rep.failures);
        }
    }

    #[test]
    fn fermat_primitives_bound_mu() {
        let r = fermat();
        for t in 1..=3 {
            let alg = r.dehomogenize(t, &[]);
            let s = fermat_primitive(&alg);
            let mu = CochainExpr::new(&alg, 2, vec![(Poly::one(4), vec![BasicOp::Mu])]);
            for args in tuples(&alg.sample_basis(6, 0), 2) {
                assert_eq!(hoch_diff_eval(&s, &alg, &alg, &args).unwrap(), mu.eval_basis(&args).unwrap());
            }
        }
    }

    #[test]
    fn cover_and_chains() {
        assert_eq!(cover(3).len(), 7);
        assert_eq!(cover(3)[3], OpenSet(vec![1, 2]));
        let one_chains = chains(3, 1);
        // Each V_I ⊂ V_J with ∅ ≠ J ⊊ I.
        assert_eq!(one_chains.len(), 12);
        assert_eq!(chains(3, 2).len(), 6);
        assert!(chains(3, 3).is_empty());
        assert!(OpenSet(vec![1, 2]).is_open_subset_of(&OpenSet(vec![1])));
        assert_eq!(OpenSet(vec![1, 2, 3]).label(), "V123");
    }

    #[test]
    fn left_components_of_quartic() {
        let r = RingDesc::parse("x0^4+x1^4+x2^4+x3^4", 3).unwrap();
        let c123 = left_cech_component(&r, &[1, 2, 3]);
        assert_eq!(c123.len(), 1);
        assert_eq!(c123[0].1, Vec::<usize>::new());
        assert_eq!(c123[0].0, parse_poly_any("4*x0^3", 3).unwrap().mul_term(&int(1), &mono(&[0, -1, -1, -1])));
        // c_23 = x2^{-1} x3^{-1}(∂_1F 𝔣_0 − ∂_0F 𝔣_1).
        let c23 = left_cech_component(&r, &[2, 3]);
        assert_eq!(c23[0].1, vec![1]);
        assert_eq!(c23[0].0, Poly::term(int(-4), mono(&[3, 0, -1, -1])));
        assert_eq!(c23[1].1, vec![0]);
        assert_eq!(c23[1].0, Poly::term(int(4), mono(&[0, 3, -1, -1])));
    }

    #[test]
    fn hodge0_twist_component() {
        let r = fermat();
        let x = emit_h2_representative(&r, &ClassSpec::HodgeK(0)).unwrap();
        assert!(x.m.is_empty() && x.f.is_empty());
        assert_eq!(x.c.len(), 1);
        assert_eq!(x.render(), "c[V123⊂V12⊂V1] = -4*y0^3*y1^-1*y2^-1");
    }

    #[test]
    fn quartic_hodge_representatives_are_cocycles() {
        let r = fermat();
        let sampling = Sampling { bound: 4, neg: 1, triple_bound: 3 };
        for k in 0..3 {
            let x = emit_h2_representative(&r, &ClassSpec::HodgeK(k)).unwrap();
            let check = check_gs_cocycle(&r, &x, sampling);
            assert!(check.passed(), "hodge{k}: {:?}", check.failures);
        }
        let x = emit_h2_representative(&r, &ClassSpec::HodgeK(1)).unwrap();
        assert_eq!(x.f.len(), 6);
        let x = emit_h2_representative(&r, &ClassSpec::HodgeK(2)).unwrap();
        assert_eq!(x.m.len(), 7);
    }

    #[test]
    fn multiplication_class_and_pair() {
        let r = fermat();
        let t = parse_poly("x0^2*x1^2", 3).unwrap();
        let x = emit_h2_representative(&r, &ClassSpec::Multiplication(t.clone())).unwrap();
        assert_eq!(x.m.len(), 7);
        assert_eq!(x.m[&OpenSet(vec![1])].render(), "(y0^2)*mu°");
        assert_eq!(x.m[&OpenSet(vec![2])].render(), "(y0^2*y1^2)*mu°");
        let (m, f) = fermat_equivalence_pair(&r, &t).unwrap();
        assert_eq!(m, x);
        assert_eq!(f.f.len(), 6);
        let check = check_fermat_pair(&r, &t, Sampling { bound: 4, neg: 1, triple_bound: 3 }).unwrap();
        assert!(check.passed(), "{check:?}");
        let (m0, f0) = fermat_equivalence_pair(&r, &Poly::zero(4)).unwrap();
        assert!(m0.is_zero() && f0.is_zero());
        let other = RingDesc::parse("x0^4+x1^4+x2^4+x3^4+x1*x2^3", 3).unwrap();
        assert!(fermat_equivalence_pair(&other, &t).is_err());
    }

    #[test]
    fn intertwined_representative_is_a_cocycle() {
        let ring = intertwined_ring();
        let x = emit_intertwined_representative(6).unwrap();
        let check = check_gs_cocycle(&ring, &x, Sampling::default_for(6));
        assert!(check.passed(), "{:?}", check.failures);
        assert!(emit_intertwined_representative(5).is_err());
        assert_eq!(x.render(), emit_intertwined_representative(6).unwrap().render());
    }

    #[test]
    fn degree_inconsistent_variant_fails_cocycle_check() {
        // With the y_0^5 coefficient on m and only a y_0-derivation on f the
        // mixed condition (d_simp m = d_Hoch f) fails.
        let ring = intertwined_ring();
        let mut x = emit_intertwined_representative(6).unwrap();
        for v in [OpenSet(vec![2]), OpenSet(vec![1, 2])] {
            let alg = v.algebra(&ring);
            x.m.insert(v, CochainExpr::new(&alg, 2, vec![(Poly::term(int(-4), mono(&[5, 3, 0])), vec![BasicOp::Mu])]));
        }
        let a12 = OpenSet(vec![1, 2]).algebra(&ring);
        let comp = x.f.get_mut(&(OpenSet(vec![1, 2]), OpenSet(vec![1]))).unwrap();
        comp.pre = CochainExpr::new(&a12, 1, vec![(Poly::term(int(-1), mono(&[5, -2, 0])), vec![BasicOp::Partial(0)])]);
        let check = check_gs_cocycle(&ring, &x, Sampling::default_for(6));
        assert!(!check.mixed);
    }

    #[test]
    fn unsupported_classes() {
        let cubic = RingDesc::parse("x0^3+x1^3+x2^3", 2).unwrap();
        assert!(emit_h2_representative(&cubic, &ClassSpec::HodgeK(1)).is_err());
        let r = fermat();
        assert!(ClassSpec::parse("x0^3", &r).map(|s| emit_h2_representative(&r, &s)).unwrap().is_err());
        assert_eq!(ClassSpec::parse("hodge2-k", &r).unwrap(), ClassSpec::HodgeK(2));
    }
}
