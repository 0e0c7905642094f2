//! Schubert calculus: the Littlewood-Richardson rule on Grassmannians,
//! Schubert polynomials for flag manifolds, and the doubled real ring
//! obtained by transporting complex structure constants.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::osp::{DimVector, OrderedSetPartition, YoungDiagram};

/// Largest `N` accepted by the Schubert polynomial route.
pub const MAX_FLAG_N: usize = 7;

/// A rectangle `height x width`; `Gr_K(C^N)` has box `K x (N-K)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GrassBox {
    pub height: usize,
    pub width: usize,
}

impl GrassBox {
    pub fn new(height: usize, width: usize) -> Self {
        GrassBox { height, width }
    }

    pub fn area(&self) -> usize {
        self.height * self.width
    }

    pub fn full(&self) -> YoungDiagram {
        YoungDiagram::new(vec![self.width; self.height]).unwrap()
    }

    pub fn check(&self, lambda: &YoungDiagram) -> Result<()> {
        if lambda.fits(self.height, self.width) {
            Ok(())
        } else {
            Err(Error::InvalidDiagram(format!(
                "{} does not fit in {} x {}",
                lambda, self.height, self.width
            )))
        }
    }

    /// `λ^c`, the complement rotated by 180 degrees.
    pub fn complement(&self, lambda: &YoungDiagram) -> Result<YoungDiagram> {
        self.check(lambda)?;
        YoungDiagram::new(
            (1..=self.height)
                .rev()
                .map(|j| self.width - lambda.row(j))
                .collect(),
        )
    }
}

impl fmt::Display for GrassBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.height, self.width)
    }
}

/// Basis label of a ring element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// `σ_λ` in a complex Grassmannian.
    Complex(YoungDiagram),
    /// A real Grassmannian class `σ_{Dλ}` or `σ_{L(Dλ)}`, stored at full size.
    Real(YoungDiagram),
    /// `σ_I` in a complex flag manifold, codimension `ℓ(I)`.
    Flag(OrderedSetPartition),
    /// `σ_{DI}` in an even real flag manifold.
    RealFlag(OrderedSetPartition),
}

impl Label {
    fn kind(&self) -> &'static str {
        match self {
            Label::Complex(_) => "complex",
            Label::Real(_) => "real",
            Label::Flag(_) => "flag",
            Label::RealFlag(_) => "real-flag",
        }
    }

    fn body(&self) -> String {
        match self {
            Label::Complex(l) | Label::Real(l) => l.to_string(),
            Label::Flag(p) | Label::RealFlag(p) => p.to_string(),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Complex(l) => write!(f, "σ({})", l),
            Label::Real(l) => write!(f, "σR({})", l),
            Label::Flag(p) => write!(f, "σ[{}]", p),
            Label::RealFlag(p) => write!(f, "σR[{}]", p),
        }
    }
}

/// Finite `Z`-linear combination of basis labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RingElement {
    terms: BTreeMap<Label, i64>,
}

fn checked(x: Option<i64>) -> i64 {
    x.expect("structure constant overflows i64")
}

impl RingElement {
    pub fn zero() -> Self {
        RingElement::default()
    }

    pub fn basis(label: Label) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(label, 1);
        RingElement { terms }
    }

    pub fn complex(lambda: YoungDiagram) -> Self {
        RingElement::basis(Label::Complex(lambda))
    }

    pub fn real(lambda: YoungDiagram) -> Self {
        RingElement::basis(Label::Real(lambda))
    }

    pub fn from_terms<I: IntoIterator<Item = (Label, i64)>>(terms: I) -> Self {
        let mut out = RingElement::zero();
        for (l, c) in terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn add_term(&mut self, label: Label, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry(label.clone()).or_insert(0);
        *e = checked(e.checked_add(coeff));
        if *e == 0 {
            self.terms.remove(&label);
        }
    }

    pub fn add_scaled(&mut self, other: &RingElement, scale: i64) {
        for (l, &c) in &other.terms {
            self.add_term(l.clone(), checked(c.checked_mul(scale)));
        }
    }

    pub fn coefficient(&self, label: &Label) -> i64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Label, i64)> {
        self.terms.iter().map(|(l, &c)| (l, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (l, &c)) in self.terms.iter().enumerate() {
            let sep = match (idx, c < 0) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            f.write_str(sep)?;
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermRecord<'a> {
    kind: &'static str,
    label: String,
    coefficient: &'a i64,
}

impl Serialize for RingElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (l, c) in &self.terms {
            seq.serialize_element(&TermRecord {
                kind: l.kind(),
                label: l.body(),
                coefficient: c,
            })?;
        }
        seq.end()
    }
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson rule

/// `c^ν_{λμ}` for all `ν` in the box, by filling `ν/λ` with `μ_i` copies of
/// each label `i`, one horizontal strip at a time, keeping the reverse
/// reading word a lattice word.
pub fn lr_coefficients(
    lambda: &YoungDiagram,
    mu: &YoungDiagram,
    bx: GrassBox,
) -> Result<BTreeMap<YoungDiagram, i64>> {
    bx.check(lambda)?;
    bx.check(mu)?;
    let mut out = BTreeMap::new();
    if lambda.size() + mu.size() > bx.area() {
        return Ok(out);
    }
    let mut shape: Vec<usize> = (1..=bx.height).map(|j| lambda.row(j)).collect();
    add_label(mu.rows(), 0, &mut shape, None, bx.width, &mut out);
    Ok(out)
}

fn add_label(
    mu: &[usize],
    i: usize,
    shape: &mut Vec<usize>,
    prev: Option<&[usize]>,
    width: usize,
    out: &mut BTreeMap<YoungDiagram, i64>,
) {
    if i == mu.len() {
        *out.entry(YoungDiagram::new(shape.clone()).unwrap()).or_insert(0) += 1;
        return;
    }
    let old = shape.clone();
    let mut cnt = vec![0; shape.len()];
    let mut st = Strip {
        mu,
        i,
        old: &old,
        prev,
        width,
    };
    st.place(0, mu[i], shape, &mut cnt, 0, 0, out);
}

struct Strip<'a> {
    mu: &'a [usize],
    i: usize,
    old: &'a [usize],
    prev: Option<&'a [usize]>,
    width: usize,
}

impl Strip<'_> {
    /// Places the remaining copies of label `i` in rows `r..`; `cur` counts
    /// copies of `i` in rows `< r`, `before` copies of `i - 1` in rows `< r`.
    #[allow(clippy::too_many_arguments)]
    fn place(
        &mut self,
        r: usize,
        remaining: usize,
        shape: &mut Vec<usize>,
        cnt: &mut Vec<usize>,
        cur: usize,
        before: usize,
        out: &mut BTreeMap<YoungDiagram, i64>,
    ) {
        if remaining == 0 {
            let counts = cnt.clone();
            add_label(self.mu, self.i + 1, shape, Some(&counts), self.width, out);
            return;
        }
        if r == shape.len() {
            return;
        }
        let cap = if r == 0 { self.width } else { self.old[r - 1] };
        let mut allow = cap.saturating_sub(self.old[r]).min(remaining);
        if self.prev.is_some() {
            allow = allow.min(before.saturating_sub(cur));
        }
        let next_before = before + self.prev.map_or(0, |p| p[r]);
        for t in 0..=allow {
            shape[r] = self.old[r] + t;
            cnt[r] = t;
            self.place(r + 1, remaining - t, shape, cnt, cur + t, next_before, out);
        }
        shape[r] = self.old[r];
        cnt[r] = 0;
    }
}

/// `σ_λ · σ_μ` in `H^*(Gr_K(C^N))` with box `K x (N-K)`.
pub fn lr_product(lambda: &YoungDiagram, mu: &YoungDiagram, bx: GrassBox) -> Result<RingElement> {
    Ok(RingElement::from_terms(
        lr_coefficients(lambda, mu, bx)?
            .into_iter()
            .map(|(nu, c)| (Label::Complex(nu), c)),
    ))
}

/// `σ_λ · σ_r`: all `ν` in the box with `ν/λ` a horizontal strip of size `r`.
pub fn pieri(lambda: &YoungDiagram, r: usize, bx: GrassBox) -> Result<RingElement> {
    bx.check(lambda)?;
    let mut out = RingElement::zero();
    let mut rows = Vec::with_capacity(bx.height);
    pieri_rec(lambda, r, bx, &mut rows, &mut out);
    Ok(out)
}

fn pieri_rec(
    lambda: &YoungDiagram,
    remaining: usize,
    bx: GrassBox,
    rows: &mut Vec<usize>,
    out: &mut RingElement,
) {
    let j = rows.len() + 1;
    if j > bx.height {
        if remaining == 0 {
            out.add_term(Label::Complex(YoungDiagram::new(rows.clone()).unwrap()), 1);
        }
        return;
    }
    let lo = lambda.row(j);
    let hi = if j == 1 { bx.width } else { lambda.row(j - 1) };
    for v in lo..=hi.min(lo + remaining) {
        rows.push(v);
        pieri_rec(lambda, remaining - (v - lo), bx, rows, out);
        rows.pop();
    }
}

/// Bilinear extension of [`lr_product`] to `Complex`-labelled elements.
pub fn multiply(x: &RingElement, y: &RingElement, bx: GrassBox) -> Result<RingElement> {
    let mut out = RingElement::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            let (Label::Complex(l), Label::Complex(m)) = (a, b) else {
                return Err(Error::InvalidDiagram(format!("{} * {} is not a complex product", a, b)));
            };
            out.add_scaled(&lr_product(l, m, bx)?, checked(ca.checked_mul(cb)));
        }
    }
    Ok(out)
}

/// Product of a list of classes; the empty product is `σ_∅`.
pub fn product_of(diagrams: &[YoungDiagram], bx: GrassBox) -> Result<RingElement> {
    let mut acc = RingElement::complex(YoungDiagram::empty());
    for d in diagrams {
        acc = multiply(&acc, &RingElement::complex(d.clone()), bx)?;
    }
    Ok(acc)
}

/// The intersection number `∫ Π σ_{λ_i}`; needs `Σ|λ_i| = K(N-K)`.
pub fn intersection_number(diagrams: &[YoungDiagram], bx: GrassBox) -> Result<i64> {
    let total: usize = diagrams.iter().map(|d| d.size()).sum();
    if total != bx.area() {
        return Err(Error::CodimensionMismatch {
            expected: bx.area(),
            found: total,
        });
    }
    Ok(product_of(diagrams, bx)?.coefficient(&Label::Complex(bx.full())))
}

/// Expands `det(σ_{λ_i + j - i})` with Pieri products and compares with `σ_λ`.
pub fn giambelli_check(lambda: &YoungDiagram, bx: GrassBox) -> Result<bool> {
    bx.check(lambda)?;
    let l = lambda.len();
    let mut det = RingElement::zero();
    let mut used = vec![false; l];
    giambelli_rec(
        lambda,
        bx,
        0,
        &mut used,
        1,
        RingElement::complex(YoungDiagram::empty()),
        &mut det,
    )?;
    Ok(det == RingElement::complex(lambda.clone()))
}

fn giambelli_rec(
    lambda: &YoungDiagram,
    bx: GrassBox,
    i: usize,
    used: &mut [bool],
    sign: i64,
    acc: RingElement,
    det: &mut RingElement,
) -> Result<()> {
    let l = used.len();
    if i == l {
        det.add_scaled(&acc, sign);
        return Ok(());
    }
    let mut inversions_to_right = 0;
    for j in (0..l).rev() {
        if used[j] {
            inversions_to_right += 1;
            continue;
        }
        let idx = lambda.row(i + 1) as i64 + j as i64 - i as i64;
        if idx < 0 || idx as usize > bx.width {
            continue;
        }
        let mut next = RingElement::zero();
        for (lab, c) in acc.terms() {
            let Label::Complex(nu) = lab else { unreachable!() };
            next.add_scaled(&pieri(nu, idx as usize, bx)?, c);
        }
        used[j] = true;
        let s = if inversions_to_right % 2 == 0 { sign } else { -sign };
        giambelli_rec(lambda, bx, i + 1, used, s, next, det)?;
        used[j] = false;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Polynomials and Schubert polynomials

/// Integer polynomial in `x_1, ..., x_n`, keyed by exponent vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u8>, i64>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::monomial(vec![0; nvars], 1)
    }

    pub fn monomial(exps: Vec<u8>, coeff: i64) -> Self {
        let mut p = MultiPoly::zero(exps.len());
        p.add_term(exps, coeff);
        p
    }

    /// `x_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        MultiPoly::monomial(e, 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], i64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exps: &[u8]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u8>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry(exps.clone()).or_insert(0);
        *e = checked(e.checked_add(coeff));
        if *e == 0 {
            self.terms.remove(&exps);
        }
    }

    pub fn add_scaled(&mut self, other: &MultiPoly, scale: i64) {
        for (e, &c) in &other.terms {
            self.add_term(e.clone(), checked(c.checked_mul(scale)));
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars.max(other.nvars));
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let e: Vec<u8> = (0..out.nvars)
                    .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
                    .collect();
                out.add_term(e, checked(ca.checked_mul(cb)));
            }
        }
        out
    }

    /// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`, 1-based `i`.
    pub fn divided_difference(&self, i: usize) -> MultiPoly {
        let (a, b) = (i - 1, i);
        let mut out = MultiPoly::zero(self.nvars);
        for (e, &c) in &self.terms {
            let (p, q) = (e[a], e[b]);
            if p == q {
                continue;
            }
            let (hi, lo, s) = if p > q { (p, q, c) } else { (q, p, -c) };
            for j in 0..hi - lo {
                let mut m = e.clone();
                m[a] = lo + j;
                m[b] = lo + (hi - lo - 1 - j);
                out.add_term(m, s);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, &c) in self.terms.iter().rev() {
            let sep = match (first, c < 0) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            f.write_str(sep)?;
            first = false;
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, p)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", c.abs())?;
            } else {
                if c.abs() != 1 {
                    write!(f, "{}*", c.abs())?;
                }
                f.write_str(&vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Lehmer code `c_i = #{j > i : w(j) < w(i)}` of a one-line permutation.
pub fn lehmer_code(w: &[usize]) -> Vec<u8> {
    (0..w.len())
        .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count() as u8)
        .collect()
}

/// The permutation of `S_n` with the given code, if there is one.
pub fn from_lehmer_code(code: &[u8], n: usize) -> Option<Vec<usize>> {
    let mut free: Vec<usize> = (1..=n).collect();
    let mut w = Vec::with_capacity(n);
    for i in 0..n {
        let c = code.get(i).copied().unwrap_or(0) as usize;
        if c >= free.len() {
            return None;
        }
        w.push(free.remove(c));
    }
    Some(w)
}

/// The Schubert polynomials `S_w`, `w ∈ S_n`, with arithmetic in
/// `H^*(Fl(C^n)) = Z[x]/(e_1, ..., e_n)`.
pub struct SchubertBasis {
    n: usize,
    polys: HashMap<Vec<usize>, MultiPoly>,
    /// `h_{n-j+1}(x_1..x_j)` minus its leading term `x_j^{n-j+1}`.
    tails: Vec<MultiPoly>,
}

impl SchubertBasis {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_FLAG_N {
            return Err(Error::SizeLimit { n, limit: MAX_FLAG_N });
        }
        let w0: Vec<usize> = (1..=n).rev().collect();
        let top: Vec<u8> = (0..n).map(|i| (n - 1 - i) as u8).collect();
        let mut polys = HashMap::new();
        polys.insert(w0.clone(), MultiPoly::monomial(top, 1));
        let mut frontier = vec![w0];
        while let Some(w) = frontier.pop() {
            for i in 1..n {
                if w[i - 1] > w[i] {
                    let mut v = w.clone();
                    v.swap(i - 1, i);
                    if !polys.contains_key(&v) {
                        let p = polys[&w].divided_difference(i);
                        polys.insert(v.clone(), p);
                        frontier.push(v);
                    }
                }
            }
        }
        let tails = (1..=n)
            .map(|j| {
                let mut t = complete_homogeneous(n, j, n - j + 1);
                let mut lead = vec![0u8; n];
                lead[j - 1] = (n - j + 1) as u8;
                t.add_term(lead, -1);
                t
            })
            .collect();
        Ok(SchubertBasis { n, polys, tails })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn polynomial(&self, w: &[usize]) -> Option<&MultiPoly> {
        self.polys.get(w)
    }

    /// Normal form modulo the coinvariant ideal: monomials with `a_j <= n - j`.
    pub fn reduce(&self, f: &MultiPoly) -> MultiPoly {
        let n = self.n;
        // key: reversed exponents, so the maximum is the leading monomial for
        // lex order with x_n > ... > x_1
        let mut work: BTreeMap<Vec<u8>, i64> = f
            .terms
            .iter()
            .map(|(e, &c)| (e.iter().rev().copied().collect(), c))
            .collect();
        let mut out = MultiPoly::zero(n);
        while let Some((key, c)) = work.pop_last() {
            let e: Vec<u8> = key.iter().rev().copied().collect();
            match (1..=n).find(|&j| e[j - 1] as usize > n - j) {
                None => out.add_term(e, c),
                Some(j) => {
                    let mut rest = e.clone();
                    rest[j - 1] -= (n - j + 1) as u8;
                    for (t, &tc) in &self.tails[j - 1].terms {
                        let m: Vec<u8> = rest.iter().zip(t).map(|(x, y)| x + y).collect();
                        let k: Vec<u8> = m.iter().rev().copied().collect();
                        let v = work.entry(k.clone()).or_insert(0);
                        *v = checked(v.checked_sub(checked(c.checked_mul(tc))));
                        if *v == 0 {
                            work.remove(&k);
                        }
                    }
                }
            }
        }
        out
    }

    /// Coordinates of a reduced polynomial in the Schubert basis, by
    /// repeatedly removing the lex-smallest monomial `x^{code(w)}`.
    pub fn expand(&self, f: &MultiPoly) -> Result<BTreeMap<Vec<usize>, i64>> {
        let mut rest = self.reduce(f);
        let mut out = BTreeMap::new();
        while let Some((code, &c)) = rest.terms.iter().next() {
            let w = from_lehmer_code(code, self.n).ok_or(Error::InexactDivision)?;
            let s = self.polys.get(&w).ok_or(Error::InexactDivision)?;
            if s.coefficient(code) != 1 {
                return Err(Error::InexactDivision);
            }
            rest.add_scaled(s, -c);
            out.insert(w, c);
        }
        Ok(out)
    }

    /// `S_u S_v = Σ c^w_{uv} S_w` in `H^*(Fl(C^n))`.
    pub fn product(&self, u: &[usize], v: &[usize]) -> Result<BTreeMap<Vec<usize>, i64>> {
        let su = self.polys.get(u).ok_or_else(|| bad_perm(u))?;
        let sv = self.polys.get(v).ok_or_else(|| bad_perm(v))?;
        self.expand(&su.mul(sv))
    }
}

fn bad_perm(w: &[usize]) -> Error {
    Error::InvalidPartition(format!("{:?} is not a permutation", w))
}

/// `h_d(x_1, ..., x_j)` in `n` variables.
fn complete_homogeneous(n: usize, j: usize, d: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(n);
    let mut e = vec![0u8; n];
    fn rec(i: usize, j: usize, left: usize, e: &mut Vec<u8>, out: &mut MultiPoly) {
        if i == j - 1 {
            e[i] = left as u8;
            out.add_term(e.clone(), 1);
            e[i] = 0;
            return;
        }
        for t in 0..=left {
            e[i] = t as u8;
            rec(i + 1, j, left - t, e, out);
        }
        e[i] = 0;
    }
    rec(0, j, d, &mut e, &mut out);
    out
}

/// `S_w` for a one-line permutation `w`.
pub fn schubert_polynomial(w: &[usize]) -> Result<MultiPoly> {
    let basis = SchubertBasis::new(w.len())?;
    basis.polynomial(w).cloned().ok_or_else(|| bad_perm(w))
}

/// `σ_u · σ_v` in `H^*(Fl_D(C^N))`; cells are labelled by their minimal
/// coset representatives, the one-line words of the partitions.
pub fn flag_structure_constants(
    u: &OrderedSetPartition,
    v: &OrderedSetPartition,
) -> Result<RingElement> {
    let basis = SchubertBasis::new(u.n())?;
    flag_product_with(&basis, u, v)
}

/// [`flag_structure_constants`] with a prebuilt basis.
pub fn flag_product_with(
    basis: &SchubertBasis,
    u: &OrderedSetPartition,
    v: &OrderedSetPartition,
) -> Result<RingElement> {
    let dims = u.dims();
    if v.dims() != dims || u.n() != basis.n() {
        return Err(Error::DimensionMismatch(format!("{} vs {}", u, v)));
    }
    let mut out = RingElement::zero();
    for (w, c) in basis.product(&u.one_line(), &v.one_line())? {
        out.add_term(Label::Flag(OrderedSetPartition::from_one_line(&w, &dims)?), c);
    }
    Ok(out)
}

/// The Grassmannian cell of codimension `|λ|` in the labelling used by
/// [`flag_structure_constants`].
pub fn grassmannian_cell(lambda: &YoungDiagram, bx: GrassBox) -> Result<OrderedSetPartition> {
    Ok(lambda.to_osp(bx.height, bx.height + bx.width)?.dual())
}

// ---------------------------------------------------------------------------
// The doubled real ring

/// Doubled classes of `Gr_K(R^N)`: half box `k x (n-k)` with `k = ⌊K/2⌋`,
/// `n = ⌊N/2⌋`, except `k x (n-1-k)` plus the `L`-classes when `K` is odd
/// and `N` is even.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RealGrassmannian {
    k: usize,
    n: usize,
}

/// A rational basis class of a real Grassmannian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealClass {
    Doubled(YoungDiagram),
    LDoubled(YoungDiagram),
}

impl RealGrassmannian {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidDimVector(format!("Gr_{}(R^{})", k, n)));
        }
        Ok(RealGrassmannian { k, n })
    }

    pub fn full_box(&self) -> GrassBox {
        GrassBox::new(self.k, self.n - self.k)
    }

    pub fn has_l_classes(&self) -> bool {
        self.k % 2 == 1 && self.n % 2 == 0
    }

    pub fn half_box(&self) -> GrassBox {
        let (k, n) = (self.k / 2, self.n / 2);
        if self.has_l_classes() {
            GrassBox::new(k, n - 1 - k)
        } else {
            GrassBox::new(k, n - k)
        }
    }

    /// `L0 = L(D∅)`, defined when `K` is odd and `N` even.
    pub fn l0(&self) -> Option<YoungDiagram> {
        self.has_l_classes()
            .then(|| self.l_of(&YoungDiagram::empty()).unwrap())
    }

    /// `L(Dλ)` for `λ` in the half box.
    pub fn l_of(&self, lambda: &YoungDiagram) -> Result<YoungDiagram> {
        let hb = self.half_box();
        hb.check(lambda)?;
        lambda.double().l_operation(2 * hb.height, 2 * hb.height + 2 * hb.width)
    }

    /// Labels `Dλ` (and `L(Dλ)`) of the rational basis.
    pub fn basis(&self) -> Vec<YoungDiagram> {
        let hb = self.half_box();
        let halves = YoungDiagram::in_box(hb.height, hb.width);
        let mut out: Vec<YoungDiagram> = halves.iter().map(|l| l.double()).collect();
        if self.has_l_classes() {
            out.extend(halves.iter().map(|l| self.l_of(l).unwrap()));
        }
        out.sort();
        out
    }

    pub fn classify(&self, mu: &YoungDiagram) -> Result<RealClass> {
        let hb = self.half_box();
        if let Some(l) = mu.halve() {
            if l.fits(hb.height, hb.width) {
                return Ok(RealClass::Doubled(l));
            }
        }
        if self.has_l_classes() {
            if let Some(d) = mu.l_inverse(2 * hb.height, 2 * hb.height + 2 * hb.width) {
                if let Some(l) = d.halve() {
                    if l.fits(hb.height, hb.width) {
                        return Ok(RealClass::LDoubled(l));
                    }
                }
            }
        }
        Err(Error::NotDoubled(format!("{} in Gr_{}(R^{})", mu, self.k, self.n)))
    }

    fn class_label(&self, c: RealClass) -> Result<Label> {
        Ok(Label::Real(match c {
            RealClass::Doubled(l) => l.double(),
            RealClass::LDoubled(l) => self.l_of(&l)?,
        }))
    }

    /// Product of two basis classes: half-size Littlewood-Richardson on the
    /// doubled part, `Dλ · L0 = L(Dλ)` and `L0² = 0`.
    pub fn product_classes(&self, a: &YoungDiagram, b: &YoungDiagram) -> Result<RingElement> {
        use RealClass::*;
        let (x, y) = (self.classify(a)?, self.classify(b)?);
        let (l, m, l_count) = match (x, y) {
            (Doubled(l), Doubled(m)) => (l, m, 0),
            (Doubled(l), LDoubled(m)) | (LDoubled(l), Doubled(m)) => (l, m, 1),
            (LDoubled(_), LDoubled(_)) => return Ok(RingElement::zero()),
        };
        let mut out = RingElement::zero();
        for (nu, c) in lr_coefficients(&l, &m, self.half_box())? {
            let cls = if l_count == 0 { Doubled(nu) } else { LDoubled(nu) };
            out.add_term(self.class_label(cls)?, c);
        }
        Ok(out)
    }

    pub fn product(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        let mut out = RingElement::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let (Label::Real(l), Label::Real(m)) = (a, b) else {
                    return Err(Error::NotDoubled(format!("{} * {}", a, b)));
                };
                out.add_scaled(&self.product_classes(l, m)?, checked(ca.checked_mul(cb)));
            }
        }
        Ok(out)
    }

    /// Lower bound for the real Schubert problem `(Dλ_j)`: the half-size
    /// complex intersection number.
    pub fn lower_bound(&self, diagrams: &[YoungDiagram]) -> Result<i64> {
        let total: usize = diagrams.iter().map(|d| d.size()).sum();
        let dim = self.k * (self.n - self.k);
        if total != dim {
            return Err(Error::CodimensionMismatch {
                expected: dim,
                found: total,
            });
        }
        let halves = diagrams
            .iter()
            .map(|d| match self.classify(d)? {
                RealClass::Doubled(l) => Ok(l),
                RealClass::LDoubled(_) => Err(Error::NotDoubled(d.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        intersection_number(&halves, self.half_box())
    }

    /// Number of solutions of the complex problem of the same size.
    pub fn complex_count(&self, diagrams: &[YoungDiagram]) -> Result<i64> {
        intersection_number(diagrams, self.full_box())
    }
}

/// `[σ_{DI}] · [σ_{DJ}] = Σ c^K_{IJ} [σ_{DK}]` in an even real flag manifold
/// with dimension vector `dims`; Grassmannian elements may use `Real`
/// diagram labels.
pub fn doubled_product(x: &RingElement, y: &RingElement, dims: &DimVector) -> Result<RingElement> {
    let half = dims
        .half()
        .ok_or_else(|| Error::NotDoubled(format!("dimension vector {}", dims)))?;
    let mut out = RingElement::zero();
    let mut basis: Option<SchubertBasis> = None;
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            let c = checked(ca.checked_mul(cb));
            match (a, b) {
                (Label::Real(_), Label::Real(_)) if dims.num_blocks() == 2 => {
                    let gr = RealGrassmannian::new(dims.parts()[0], dims.n())?;
                    out.add_scaled(&gr.product(&RingElement::basis(a.clone()), &RingElement::basis(b.clone()))?, c);
                }
                (Label::RealFlag(p), Label::RealFlag(q)) => {
                    let hp = halve_cell(p, &half)?;
                    let hq = halve_cell(q, &half)?;
                    if basis.is_none() {
                        basis = Some(SchubertBasis::new(half.n())?);
                    }
                    let prod = flag_product_with(basis.as_ref().unwrap(), &hp, &hq)?;
                    for (l, k) in prod.terms() {
                        let Label::Flag(r) = l else { unreachable!() };
                        out.add_term(Label::RealFlag(r.double()), checked(k.checked_mul(c)));
                    }
                }
                _ => return Err(Error::NotDoubled(format!("{} * {}", a, b))),
            }
        }
    }
    Ok(out)
}

fn halve_cell(p: &OrderedSetPartition, half: &DimVector) -> Result<OrderedSetPartition> {
    match p.halve() {
        Some(h) if h.dims() == *half => Ok(h),
        _ => Err(Error::NotDoubled(p.to_string())),
    }
}

/// Products in `H^*(Gr_K(R^N); Q)` for `K` odd, `N` even, where the basis
/// has doubled classes and `L`-classes.
pub fn l_class_product(x: &RingElement, y: &RingElement, gr: &RealGrassmannian) -> Result<RingElement> {
    if !gr.has_l_classes() {
        return Err(Error::InvalidDimVector(format!(
            "Gr_{}(R^{}) has no L-classes",
            gr.k, gr.n
        )));
    }
    gr.product(x, y)
}

/// Lower bound for a doubled Schubert problem in `Gr_K(R^N)`.
pub fn schubert_problem_lower_bound(diagrams: &[YoungDiagram], k: usize, n: usize) -> Result<i64> {
    RealGrassmannian::new(k, n)?.lower_bound(diagrams)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn pieri_base_case() {
        let bx = GrassBox::new(2, 2);
        let p = lr_product(&yd("1"), &yd("1"), bx).unwrap();
        assert_eq!(p, RingElement::from_terms([(Label::Complex(yd("2")), 1), (Label::Complex(yd("1,1")), 1)]));
        assert_eq!(pieri(&yd("1"), 1, bx).unwrap(), p);
    }

    #[test]
    fn degree_of_gr36() {
        let bx = GrassBox::new(3, 3);
        assert_eq!(intersection_number(&vec![yd("1"); 9], bx).unwrap(), 42);
    }

    #[test]
    fn complement_pairs_to_one() {
        let bx = GrassBox::new(2, 3);
        for l in YoungDiagram::in_box(2, 3) {
            let c = bx.complement(&l).unwrap();
            assert_eq!(intersection_number(&[l, c], bx).unwrap(), 1);
        }
    }

    #[test]
    fn small_schubert_polynomials() {
        let b = SchubertBasis::new(3).unwrap();
        assert_eq!(b.polynomial(&[1, 2, 3]).unwrap(), &MultiPoly::one(3));
        assert_eq!(b.polynomial(&[2, 1, 3]).unwrap(), &MultiPoly::var(3, 1));
        let p = b.product(&[2, 1, 3], &[2, 1, 3]).unwrap();
        assert_eq!(p.into_iter().collect::<Vec<_>>(), vec![(vec![3, 1, 2], 1)]);
    }

    #[test]
    fn lehmer_roundtrip() {
        let w = vec![3, 1, 4, 2];
        assert_eq!(lehmer_code(&w), vec![2, 0, 1, 0]);
        assert_eq!(from_lehmer_code(&lehmer_code(&w), 4).unwrap(), w);
    }

    #[test]
    fn l_rules() {
        let gr = RealGrassmannian::new(5, 12).unwrap();
        let l0 = RingElement::real(gr.l0().unwrap());
        assert!(gr.product(&l0, &l0).unwrap().is_zero());
        let unit = RingElement::real(YoungDiagram::empty());
        assert_eq!(gr.product(&unit, &l0).unwrap(), l0);
    }
}
