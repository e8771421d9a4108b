//! Monomials and polynomials with exact rational coefficients.
//!
//! A [`Monomial`] is an exponent vector over `x_0..x_n`; negative exponents
//! are only produced inside localized chart contexts. The graded rings
//! `R = Q[x_0..x_n]` and `S = R/(F)` are described by a [`RingDesc`], whose
//! normal form rewrites `x_0^d` through the monic `x_0^d` summand of `F`.
//! Chart algebras obtained by setting one variable to 1 are [`ChartAlgebra`]s.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactla::{int, Rational};

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

/// Exponent vector. Ordered by degree, then lexicographically with `x_0`
/// largest (graded lex, `x_0 > x_1 > … > x_n`); the largest monomial sorts last.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// `x_i^e` in `nvars` variables.
    pub fn var_pow(nvars: usize, i: usize, e: i32) -> Self {
        let mut v = vec![0; nvars];
        v[i] = e;
        Monomial(v)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Quotient `self / other` (exponents may go negative).
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn with_exp(&self, i: usize, e: i32) -> Monomial {
        let mut v = self.0.clone();
        v[i] = e;
        Monomial(v)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Renders with a variable prefix, e.g. `x0^2*x3` or `1`.
    pub fn render_with(&self, prefix: &str) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| if e == 1 { format!("{prefix}{i}") } else { format!("{prefix}{i}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_with("x"))
    }
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

/// Sparse polynomial (Laurent-capable) with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

/// A polynomial whose terms share one total degree.
pub type HomogeneousPoly = Poly;

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Poly::term(c, Monomial::one(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rational::one())
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { nvars, terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Poly::term(Rational::one(), m)
    }

    /// `x_i` in `nvars` variables.
    pub fn var(nvars: usize, i: usize) -> Self {
        Poly::monomial(Monomial::var_pow(nvars, i, 1))
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), -c.clone());
        }
        p
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                p.add_term(m1.mul(m2), c1 * c2);
            }
        }
        p
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Total degree when homogeneous; `None` for the zero polynomial or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<i32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Largest exponent of variable `i` among the terms.
    pub fn max_exp(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(i)).max()
    }

    /// Substitutes `x_i = 1`, keeping the slot (its exponent becomes 0).
    pub fn set_var_to_one(&self, i: usize) -> Poly {
        Poly::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.with_exp(i, 0), c.clone())))
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e >= 0 {
                    t *= num_traits::pow(point[i].clone(), e as usize);
                } else {
                    t /= num_traits::pow(point[i].clone(), (-e) as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Canonical text form in the input grammar (leading terms first).
    pub fn render(&self) -> String {
        self.render_with("x")
    }

    /// Canonical text with a chosen variable prefix.
    pub fn render_with(&self, prefix: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.render_with(prefix);
            if mono == "1" {
                out.push_str(&render_rational(&a));
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&render_rational(&a));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Renders `p/q` or `p`.
pub fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// Errors from polynomial parsing and ring construction.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable x{index} at position {pos} exceeds x{n}")]
    VariableOutOfRange { index: usize, n: usize, pos: usize },
    #[error("polynomial is not homogeneous: found terms of degree {first} and {other}")]
    NotHomogeneous { first: i32, other: i32 },
    #[error("polynomial must be nonzero of degree at least 2 (got {0})")]
    BadDegree(String),
}

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    _src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Lexer { chars, pos: 0, _src: src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or_else(|| self.chars.last().map_or(0, |&(i, c)| i + c.len_utf8()), |&(i, _)| i)
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn uint(&mut self) -> Result<BigInt, PolyError> {
        let start = self.offset();
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.bump();
        }
        if s.is_empty() {
            return Err(PolyError::Syntax { pos: start, msg: "expected an unsigned integer".into() });
        }
        Ok(s.parse().expect("digits parse"))
    }
}

/// Parses a polynomial in `x0..xn` and checks homogeneity.
pub fn parse_poly(text: &str, n: usize) -> Result<HomogeneousPoly, PolyError> {
    let p = parse_poly_any(text, n)?;
    if let Some((first, _)) = p.terms().next_back() {
        let d0 = first.degree();
        if let Some((m, _)) = p.terms().find(|(m, _)| m.degree() != d0) {
            return Err(PolyError::NotHomogeneous { first: d0, other: m.degree() });
        }
    }
    Ok(p)
}

/// Parses a polynomial in `x0..xn` without a homogeneity requirement.
pub fn parse_poly_any(text: &str, n: usize) -> Result<Poly, PolyError> {
    let mut lx = Lexer::new(text);
    let p = parse_sum(&mut lx, n)?;
    match lx.peek() {
        None => Ok(p),
        Some(c) => Err(PolyError::Syntax { pos: lx.offset(), msg: format!("unexpected character '{c}'") }),
    }
}

/// `sum := ('+'|'-')? product (('+'|'-') product)*`
fn parse_sum(lx: &mut Lexer<'_>, n: usize) -> Result<Poly, PolyError> {
    let mut acc = Poly::zero(n + 1);
    let mut negative = false;
    if let Some(c @ ('+' | '-')) = lx.peek() {
        negative = c == '-';
        lx.bump();
    }
    loop {
        let t = parse_product(lx, n)?;
        acc = if negative { acc.sub(&t) } else { acc.add(&t) };
        match lx.peek() {
            Some(c @ ('+' | '-')) => {
                negative = c == '-';
                lx.bump();
            }
            _ => return Ok(acc),
        }
    }
}

/// `product := power ('*'? power)*` where juxtaposition is allowed before a variable or a group.
fn parse_product(lx: &mut Lexer<'_>, n: usize) -> Result<Poly, PolyError> {
    let mut acc = parse_power(lx, n)?;
    loop {
        match lx.peek() {
            Some('*') => {
                lx.bump();
                if !matches!(lx.peek(), Some(c) if c == 'x' || c == '(' || c.is_ascii_digit()) {
                    return Err(PolyError::Syntax { pos: lx.offset(), msg: "expected a factor after '*'".into() });
                }
            }
            Some('x' | '(') => {}
            _ => return Ok(acc),
        }
        let f = parse_power(lx, n)?;
        acc = acc.mul(&f);
    }
}

/// `power := atom ('^' uint)?`
fn parse_power(lx: &mut Lexer<'_>, n: usize) -> Result<Poly, PolyError> {
    let base = parse_atom(lx, n)?;
    if lx.peek() != Some('^') {
        return Ok(base);
    }
    lx.bump();
    let p = lx.offset();
    let e = lx.uint()?.to_u32().ok_or(PolyError::Syntax { pos: p, msg: "exponent too large".into() })?;
    Ok(base.pow(e))
}

/// `atom := int ('/' uint)? | 'x' uint | '(' sum ')'`
fn parse_atom(lx: &mut Lexer<'_>, n: usize) -> Result<Poly, PolyError> {
    let nvars = n + 1;
    match lx.peek() {
        Some(c) if c.is_ascii_digit() => {
            let mut c = Rational::from_integer(lx.uint()?);
            if lx.peek() == Some('/') {
                lx.bump();
                let den_pos = lx.offset();
                let den = lx.uint()?;
                if den.is_zero() {
                    return Err(PolyError::Syntax { pos: den_pos, msg: "zero denominator".into() });
                }
                c /= Rational::from_integer(den);
            }
            Ok(Poly::constant(nvars, c))
        }
        Some('x') => {
            let var_pos = lx.offset();
            lx.bump();
            let idx = lx.uint()?.to_usize().unwrap_or(usize::MAX);
            if idx > n {
                return Err(PolyError::VariableOutOfRange { index: idx, n, pos: var_pos });
            }
            Ok(Poly::var(nvars, idx))
        }
        Some('(') => {
            lx.bump();
            let inner = parse_sum(lx, n)?;
            if lx.peek() != Some(')') {
                return Err(PolyError::Syntax { pos: lx.offset(), msg: "expected ')'".into() });
            }
            lx.bump();
            Ok(inner)
        }
        _ => Err(PolyError::Syntax { pos: lx.offset(), msg: "expected a coefficient, a variable or '('".into() }),
    }
}

// ---------------------------------------------------------------------------
// Derivatives and the Euler identity
// ---------------------------------------------------------------------------

/// Formal partial derivative with respect to `x_i`.
pub fn partial(f: &Poly, i: usize) -> Poly {
    Poly::from_terms(
        f.nvars(),
        f.terms().filter(|(m, _)| m.exp(i) != 0).map(|(m, c)| (m.with_exp(i, m.exp(i) - 1), c * int(m.exp(i) as i64))),
    )
}

/// `Σ x_i ∂F/∂x_i − d·F`, identically zero for homogeneous `F` of degree `d`.
pub fn euler_defect(f: &Poly) -> Poly {
    let d = f.homogeneous_degree().unwrap_or(0);
    let mut acc = f.scale(&int(-(d as i64)));
    for i in 0..f.nvars() {
        acc = acc.add(&partial(f, i).mul(&Poly::var(f.nvars(), i)));
    }
    acc
}

// ---------------------------------------------------------------------------
// Monomial bases
// ---------------------------------------------------------------------------

/// All monomials of degree `m` in `nvars` variables, increasing in the monomial order.
pub fn monomials_of_degree(nvars: usize, m: i32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if m < 0 || nvars == 0 {
        return out;
    }
    let mut cur = vec![0i32; nvars];
    fn rec(i: usize, left: i32, cur: &mut Vec<i32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, m, &mut cur, &mut out);
    out.sort();
    out
}

/// Basis of `R_m` for `R = Q[x_0..x_n]`.
pub fn monomial_basis_r(n: usize, m: i32) -> Vec<Monomial> {
    monomials_of_degree(n + 1, m)
}

/// Binomial coefficient as `usize` (zero for negative arguments).
pub fn binomial(a: i64, b: i64) -> usize {
    if b < 0 || a < b || a < 0 {
        return 0;
    }
    let mut r: u128 = 1;
    for k in 0..b as u128 {
        r = r * (a as u128 - k) / (k + 1);
    }
    r as usize
}

// ---------------------------------------------------------------------------
// Rings
// ---------------------------------------------------------------------------

/// Record of the coordinate change applied to reach a monic `x_0^d` summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Substitution {
    /// Only a global rescaling by a nonzero constant (possibly 1) was applied.
    Identity { scale: Rational },
    /// `x_j ↦ x_j + λ_j x_0` for `j ≥ 1`, then the rescaling.
    Shift { lambdas: Vec<Rational>, scale: Rational },
}

impl Substitution {
    /// Human-readable note; `None` when the input was used verbatim.
    pub fn note(&self) -> Option<String> {
        match self {
            Substitution::Identity { scale } if scale.is_one() => None,
            Substitution::Identity { scale } => {
                Some(format!("rescaled by {} to make the x0^d coefficient 1", render_rational(scale)))
            }
            Substitution::Shift { lambdas, scale } => {
                let parts: Vec<String> = lambdas
                    .iter()
                    .enumerate()
                    .filter(|(_, l)| !l.is_zero())
                    .map(|(j, l)| format!("x{} -> x{} + ({})*x0", j + 1, j + 1, render_rational(l)))
                    .collect();
                Some(format!(
                    "results are for the isomorphic hypersurface obtained by {}, rescaled by {}",
                    parts.join(", "),
                    render_rational(scale)
                ))
            }
        }
    }
}

/// Applies `x_j ↦ x_j + λ_j x_0` (`j ≥ 1`) and rescales so the `x_0^d`
/// coefficient is exactly 1.
pub fn ensure_x0_summand(f: &Poly) -> Result<(Poly, Substitution), PolyError> {
    let d = f.homogeneous_degree().ok_or_else(|| PolyError::BadDegree("zero or inhomogeneous".into()))?;
    let nvars = f.nvars();
    let lead = Monomial::var_pow(nvars, 0, d);
    let c = f.coeff(&lead);
    if !c.is_zero() {
        let scale = Rational::one() / &c;
        return Ok((f.scale(&scale), Substitution::Identity { scale }));
    }
    // The x_0^d coefficient after the shift is F(1, λ_1, …, λ_n).
    let mut radius: i64 = 1;
    loop {
        for lambdas in spiral_shell(nvars - 1, radius) {
            let mut point = vec![Rational::one()];
            point.extend(lambdas.iter().cloned());
            let value = f.eval(&point);
            if !value.is_zero() {
                let shifted = shift_variables(f, &lambdas);
                let scale = Rational::one() / &value;
                debug_assert_eq!(shifted.coeff(&lead), value);
                return Ok((shifted.scale(&scale), Substitution::Shift { lambdas, scale }));
            }
        }
        radius += 1;
    }
}

/// Integer vectors with max-norm exactly `radius`, in a fixed order
/// (coordinates enumerated as 0, 1, −1, 2, −2, …).
fn spiral_shell(len: usize, radius: i64) -> Vec<Vec<Rational>> {
    let values: Vec<i64> = std::iter::once(0)
        .chain((1..=radius).flat_map(|k| [k, -k]))
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; len];
    loop {
        let v: Vec<i64> = idx.iter().map(|&i| values[i]).collect();
        if v.iter().map(|x| x.abs()).max().unwrap_or(0) == radius {
            out.push(v.iter().map(|&x| int(x)).collect());
        }
        let mut k = 0;
        loop {
            if k == len {
                return out;
            }
            idx[k] += 1;
            if idx[k] < values.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn shift_variables(f: &Poly, lambdas: &[Rational]) -> Poly {
    let nvars = f.nvars();
    let images: Vec<Poly> = (0..nvars)
        .map(|j| {
            if j == 0 {
                Poly::var(nvars, 0)
            } else {
                Poly::var(nvars, j).add(&Poly::var(nvars, 0).scale(&lambdas[j - 1]))
            }
        })
        .collect();
    let mut acc = Poly::zero(nvars);
    for (m, c) in f.terms() {
        let mut t = Poly::constant(nvars, c.clone());
        for (j, &e) in m.0.iter().enumerate() {
            if e > 0 {
                t = t.mul(&images[j].pow(e as u32));
            }
        }
        acc = acc.add(&t);
    }
    acc
}

/// Rewrites every term whose `var`-exponent is at least `d` using
/// `var^d = −tail`, until all such exponents are below `d`.
/// Terminates because `tail` has `var`-exponents below `d`.
pub fn reduce_monic(p: &Poly, var: usize, d: i32, tail: &Poly) -> Poly {
    let mut p = p.clone();
    loop {
        let Some(top) = p.max_exp(var) else { return p };
        if top < d {
            return p;
        }
        let heavy: Vec<(Monomial, Rational)> =
            p.terms().filter(|(m, _)| m.exp(var) == top).map(|(m, c)| (m.clone(), c.clone())).collect();
        for (m, c) in heavy {
            p.add_term(m.clone(), -c.clone());
            let rest = m.with_exp(var, top - d);
            for (tm, tc) in tail.terms() {
                p.add_term(rest.mul(tm), -(c.clone() * tc));
            }
        }
    }
}

/// A hypersurface ring: `R = Q[x_0..x_n]`, `S = R/(F)` with `F` monic in `x_0^d`.
#[derive(Debug, Clone)]
pub struct RingDesc {
    pub n: usize,
    pub d: i32,
    pub f: Poly,
    pub substitution: Substitution,
    tail: Poly,
    partials: Vec<Poly>,
}

impl RingDesc {
    /// Normalizes `F` (monic `x_0^d` summand) and precomputes its partials.
    pub fn new(f: &Poly) -> Result<Self, PolyError> {
        let d = f.homogeneous_degree().ok_or_else(|| PolyError::BadDegree("zero or inhomogeneous".into()))?;
        if d < 2 {
            return Err(PolyError::BadDegree(format!("degree {d}")));
        }
        let (f, substitution) = ensure_x0_summand(f)?;
        let n = f.nvars() - 1;
        let tail = f.sub(&Poly::monomial(Monomial::var_pow(n + 1, 0, d)));
        let partials = (0..=n).map(|i| partial(&f, i)).collect();
        Ok(RingDesc { n, d, f, substitution, tail, partials })
    }

    /// Parses and normalizes in one step.
    pub fn parse(text: &str, n: usize) -> Result<Self, PolyError> {
        RingDesc::new(&parse_poly(text, n)?)
    }

    pub fn nvars(&self) -> usize {
        self.n + 1
    }

    /// `∂F/∂x_i`.
    pub fn partial(&self, i: usize) -> &Poly {
        &self.partials[i]
    }

    pub fn partials(&self) -> &[Poly] {
        &self.partials
    }

    /// `F − x_0^d`.
    pub fn tail(&self) -> &Poly {
        &self.tail
    }

    /// Normal form modulo `F`: all `x_0`-exponents below `d`.
    pub fn s_normal_form(&self, p: &Poly) -> Poly {
        reduce_monic(p, 0, self.d, &self.tail)
    }

    /// Basis of `S_m`: degree-`m` monomials with `x_0`-exponent below `d`.
    pub fn s_basis(&self, m: i32) -> Vec<Monomial> {
        monomial_basis_r(self.n, m).into_iter().filter(|mono| mono.exp(0) < self.d).collect()
    }

    /// `dim S_m = C(m+n, n) − C(m−d+n, n)`.
    pub fn s_dim(&self, m: i32) -> usize {
        if m < 0 {
            return 0;
        }
        let n = self.n as i64;
        binomial(m as i64 + n, n) - binomial(m as i64 - self.d as i64 + n, n)
    }

    /// The chart algebra `A(V, t)` with relation `G_t = F(x_t = 1)`, inverting `inverted`.
    pub fn dehomogenize(&self, t: usize, inverted: &[usize]) -> ChartAlgebra {
        ChartAlgebra::new(self, t, inverted)
    }
}

// ---------------------------------------------------------------------------
// Chart algebras
// ---------------------------------------------------------------------------

/// `Q[y_0..ŷ_t..y_n][y_s^{-1} : s ∈ inverted]/(G_t)`, with elements written in
/// the `n+1` slots of the projective coordinates (slot `t` stays 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartAlgebra {
    pub n: usize,
    pub d: i32,
    pub chart: usize,
    pub inverted: BTreeSet<usize>,
    pub relation: Poly,
    tail: Poly,
}

impl ChartAlgebra {
    fn new(ring: &RingDesc, t: usize, inverted: &[usize]) -> Self {
        assert!(t >= 1 && t <= ring.n, "chart index {t} out of range 1..={}", ring.n);
        let inverted: BTreeSet<usize> = inverted.iter().copied().filter(|&s| s != t).collect();
        assert!(inverted.iter().all(|&s| s >= 1 && s <= ring.n), "inverted variables must lie in 1..=n");
        let relation = ring.f.set_var_to_one(t);
        let tail = relation.sub(&Poly::monomial(Monomial::var_pow(ring.n + 1, 0, ring.d)));
        debug_assert!(tail.max_exp(0).is_none_or(|e| e < ring.d));
        ChartAlgebra { n: ring.n, d: ring.d, chart: t, inverted, relation, tail }
    }

    pub fn nvars(&self) -> usize {
        self.n + 1
    }

    /// Chart variables in order (all slots except the chart index).
    pub fn variables(&self) -> Vec<usize> {
        (0..=self.n).filter(|&i| i != self.chart).collect()
    }

    /// `G_t − y_0^d`.
    pub fn tail(&self) -> &Poly {
        &self.tail
    }

    /// Whether a monomial is a normal-form basis element of this algebra.
    pub fn is_basis_monomial(&self, m: &Monomial) -> bool {
        m.exp(self.chart) == 0
            && m.exp(0) >= 0
            && m.exp(0) < self.d
            && (1..=self.n).all(|i| i == self.chart || m.exp(i) >= 0 || self.inverted.contains(&i))
    }

    pub fn reduce(&self, p: &Poly) -> Poly {
        reduce_monic(p, 0, self.d, &self.tail)
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&a.mul(b))
    }

    /// Basis monomials with positive-part degree at most `bound` and inverted
    /// exponents at least `-neg`, increasing in the monomial order.
    pub fn sample_basis(&self, bound: i32, neg: i32) -> Vec<Monomial> {
        let vars = self.variables();
        let mut out = Vec::new();
        let mut cur = vec![0i32; self.n + 1];
        self.sample_rec(&vars, 0, bound, neg, &mut cur, &mut out);
        out.sort();
        out
    }

    fn sample_rec(&self, vars: &[usize], k: usize, left: i32, neg: i32, cur: &mut Vec<i32>, out: &mut Vec<Monomial>) {
        if k == vars.len() {
            out.push(Monomial(cur.clone()));
            return;
        }
        let v = vars[k];
        let lo = if v != 0 && self.inverted.contains(&v) { -neg } else { 0 };
        let hi = if v == 0 { left.min(self.d - 1) } else { left };
        for e in lo..=hi {
            cur[v] = e;
            self.sample_rec(vars, k + 1, left - e.max(0), neg, cur, out);
        }
        cur[v] = 0;
    }

    /// Renders an element in chart variables `y_i`.
    pub fn render(&self, p: &Poly) -> String {
        p.render_with("y")
    }
}

/// Least common multiple of coefficient denominators (helper for integral views).
pub fn denominator_lcm(p: &Poly) -> BigInt {
    p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()))
}
