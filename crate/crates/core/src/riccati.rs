//! The algebra generated by ∇, Υ and a central g subject to
//! `∇Υ = Υ∇ + g + Υ²`.
//!
//! Every element has a unique normal form `Σ c Υ^ℓ g^m ∇^p`, stored as a map
//! from `(ℓ, m, p)` to a nonzero rational. Setting `g = 1` gives the algebra
//! realized on the circle by `∇ = d/dθ`, `Υ = tan θ`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{fmt_q, q, qf, Q};

/// Exponents `(ℓ, m, p)` of `Υ^ℓ g^m ∇^p`.
pub type MonomialKey = (u32, u32, u32);

/// Which algebra a product is normal-ordered in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    /// g kept as a central generator of degree 2.
    Graded,
    /// g replaced by 1 throughout.
    GEqualsOne,
}

#[derive(Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NCOp {
    terms: BTreeMap<MonomialKey, Q>,
}

impl NCOp {
    pub fn zero() -> Self {
        NCOp::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 0, q(1))
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(0, 0, 0, c)
    }

    pub fn nabla() -> Self {
        Self::monomial(0, 0, 1, q(1))
    }

    pub fn upsilon() -> Self {
        Self::monomial(1, 0, 0, q(1))
    }

    pub fn g() -> Self {
        Self::monomial(0, 1, 0, q(1))
    }

    pub fn monomial(upsilon: u32, g: u32, nabla: u32, c: Q) -> Self {
        let mut op = NCOp::zero();
        op.add_term((upsilon, g, nabla), c);
        op
    }

    fn add_term(&mut self, key: MonomialKey, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MonomialKey, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, upsilon: u32, g: u32, nabla: u32) -> Q {
        self.terms
            .get(&(upsilon, g, nabla))
            .cloned()
            .unwrap_or_else(Q::zero)
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

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = NCOp::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, v * c);
        }
        out
    }

    /// The degree `ℓ + 2m + p` if every term has the same one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|(l, m, p)| l + 2 * m + p);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn max_nabla_power(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.2).max()
    }

    /// The coefficient of `∇^p` (a polynomial in Υ and g), as an operator.
    pub fn nabla_coefficient(&self, p: u32) -> NCOp {
        let mut out = NCOp::zero();
        for ((l, m, pp), c) in &self.terms {
            if *pp == p {
                out.add_term((*l, *m, 0), c.clone());
            }
        }
        out
    }

    /// Substitutes `g = 1`.
    pub fn specialize_g_one(&self) -> NCOp {
        let mut out = NCOp::zero();
        for ((l, _, p), c) in &self.terms {
            out.add_term((*l, 0, *p), c.clone());
        }
        out
    }

    pub fn has_g(&self) -> bool {
        self.terms.keys().any(|k| k.1 > 0)
    }

    /// Product in the chosen algebra.
    pub fn multiply(&self, other: &NCOp, spec: Specialization) -> NCOp {
        let mut cache: HashMap<(u32, u32), NCOp> = HashMap::new();
        let mut out = NCOp::zero();
        for ((l1, m1, p1), c1) in &self.terms {
            for ((l2, m2, p2), c2) in &other.terms {
                let middle = cache
                    .entry((*p1, *l2))
                    .or_insert_with(|| nabla_pow_upsilon_pow_in(*p1, *l2, spec));
                let c = c1 * c2;
                for ((l, m, p), cm) in &middle.terms {
                    let g_pow = match spec {
                        Specialization::Graded => m1 + m + m2,
                        Specialization::GEqualsOne => 0,
                    };
                    out.add_term((l1 + l, g_pow, p + p2), &c * cm);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32, spec: Specialization) -> NCOp {
        (0..e).fold(NCOp::one(), |acc, _| acc.multiply(self, spec))
    }

    /// Ordered product `f_0 f_1 ... f_k`.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a NCOp>, spec: Specialization) -> NCOp {
        factors
            .into_iter()
            .fold(NCOp::one(), |acc, f| acc.multiply(f, spec))
    }

    fn sorted_terms(&self) -> Vec<(&MonomialKey, &Q)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        // highest ∇ power first, then by degree, then Υ power
        t.sort_by(|(a, _), (b, _)| {
            b.2.cmp(&a.2)
                .then_with(|| (b.0 + 2 * b.1).cmp(&(a.0 + 2 * a.1)))
                .then_with(|| b.0.cmp(&a.0))
        });
        t
    }

    fn render(&self, sym: &Symbols) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, ((l, m, p), c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let body = render_factors(*l, *m, *p, sym);
            if body.is_empty() {
                out.push_str(&fmt_q(&mag));
            } else if mag.is_one() {
                out.push_str(&body);
            } else {
                out.push_str(&fmt_q(&mag));
                out.push_str(sym.coeff_sep);
                out.push_str(&body);
            }
        }
        out
    }

    /// Plain ASCII: `nabla`, `Y` for Υ, `g`.
    pub fn to_ascii(&self) -> String {
        self.render(&ASCII)
    }

    pub fn to_latex(&self) -> String {
        self.render(&LATEX)
    }
}

fn render_factors(l: u32, m: u32, p: u32, sym: &Symbols) -> String {
    let mut parts = Vec::new();
    for (s, e) in [(sym.g, m), (sym.upsilon, l), (sym.nabla, p)] {
        match e {
            0 => {}
            1 => parts.push(s.to_string()),
            e => parts.push(format!("{s}^{}", (sym.exponent)(e))),
        }
    }
    parts.join(sym.factor_sep)
}

struct Symbols {
    nabla: &'static str,
    upsilon: &'static str,
    g: &'static str,
    factor_sep: &'static str,
    coeff_sep: &'static str,
    exponent: fn(u32) -> String,
}

const ASCII: Symbols = Symbols {
    nabla: "nabla",
    upsilon: "Y",
    g: "g",
    factor_sep: " ",
    coeff_sep: " ",
    exponent: plain_exponent,
};

const UNICODE: Symbols = Symbols {
    nabla: "∇",
    upsilon: "Υ",
    g: "g",
    factor_sep: "",
    coeff_sep: "",
    exponent: plain_exponent,
};

const LATEX: Symbols = Symbols {
    nabla: "\\nabla",
    upsilon: "\\Upsilon",
    g: "g",
    factor_sep: " ",
    coeff_sep: " ",
    exponent: braced_exponent,
};

fn plain_exponent(e: u32) -> String {
    e.to_string()
}

fn braced_exponent(e: u32) -> String {
    if e < 10 {
        e.to_string()
    } else {
        format!("{{{e}}}")
    }
}

impl fmt::Display for NCOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&UNICODE))
    }
}

impl fmt::Debug for NCOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCOp({self})")
    }
}

impl Add for &NCOp {
    type Output = NCOp;
    fn add(self, rhs: &NCOp) -> NCOp {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, v.clone());
        }
        out
    }
}

impl Sub for &NCOp {
    type Output = NCOp;
    fn sub(self, rhs: &NCOp) -> NCOp {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, -v.clone());
        }
        out
    }
}

impl Neg for &NCOp {
    type Output = NCOp;
    fn neg(self) -> NCOp {
        self.scale(&q(-1))
    }
}

/// Graded product.
impl Mul for &NCOp {
    type Output = NCOp;
    fn mul(self, rhs: &NCOp) -> NCOp {
        self.multiply(rhs, Specialization::Graded)
    }
}

/// Left multiplication by ∇: `∇ Υ^a g^b ∇^p = Υ^a g^b ∇^{p+1} + a Υ^{a-1} g^{b+1} ∇^p + a Υ^{a+1} g^b ∇^p`.
fn left_nabla(op: &NCOp, spec: Specialization) -> NCOp {
    let mut out = NCOp::zero();
    let bump = |m: u32| match spec {
        Specialization::Graded => m + 1,
        Specialization::GEqualsOne => 0,
    };
    for ((a, b, p), c) in &op.terms {
        out.add_term((*a, *b, p + 1), c.clone());
        if *a > 0 {
            let ca = c * q(*a as i64);
            out.add_term((a - 1, bump(*b), *p), ca.clone());
            out.add_term((a + 1, *b, *p), ca);
        }
    }
    out
}

fn nabla_pow_upsilon_pow_in(k: u32, l: u32, spec: Specialization) -> NCOp {
    let mut op = NCOp::monomial(l, 0, 0, q(1));
    for _ in 0..k {
        op = left_nabla(&op, spec);
    }
    op
}

/// Normal form of `∇^k Υ^ℓ`.
pub fn nabla_pow_upsilon_pow(k: u32, l: u32) -> NCOp {
    nabla_pow_upsilon_pow_in(k, l, Specialization::Graded)
}

/// Compares the `∇^k`, `∇^{k-1}` and `∇^{k-2}` coefficients of `∇^k Υ^ℓ`
/// with their closed forms.
pub fn leading_terms_match(k: u32, l: u32) -> bool {
    let op = nabla_pow_upsilon_pow(k, l);
    let (ki, li) = (k as i64, l as i64);
    let y = |e: u32, m: u32, c: Q| NCOp::monomial(e, m, 0, c);

    let top = y(l, 0, q(1));
    let mut second = NCOp::zero();
    if k >= 1 && l >= 1 {
        second = &y(l - 1, 1, q(ki * li)) + &y(l + 1, 0, q(ki * li));
    }
    let mut third = NCOp::zero();
    if k >= 2 && l >= 1 {
        let base = qf(ki * (ki - 1) * li, 2);
        if l >= 2 {
            third = &third + &y(l - 2, 2, &base * q(li - 1));
        }
        third = &third + &y(l, 1, &base * q(2 * li));
        third = &third + &y(l + 2, 0, &base * q(li + 1));
    }
    let mut ok = op.nabla_coefficient(k) == top;
    if k >= 1 {
        ok &= op.nabla_coefficient(k - 1) == second;
    }
    if k >= 2 {
        ok &= op.nabla_coefficient(k - 2) == third;
    }
    ok
}

/// `∇ + jΥ`.
pub fn shifted_nabla(j: i64) -> NCOp {
    &NCOp::nabla() + &NCOp::monomial(1, 0, 0, q(j))
}

/// The factors `∇ - kΥ, ∇ - (k-2)Υ, ..., ∇ + kΥ`, left to right.
pub fn bgg_factors(k: u32) -> Vec<NCOp> {
    let k = k as i64;
    (0..=k).map(|i| shifted_nabla(-k + 2 * i)).collect()
}

pub fn bgg_product(k: u32) -> NCOp {
    NCOp::product(&bgg_factors(k), Specialization::Graded)
}

/// The factors `∇² + k²g, ∇² + (k-2)²g, ...`, ending in `∇² + 4g, ∇` for even
/// k and in `∇² + g` for odd k.
pub fn rhs_factors(k: u32) -> Vec<NCOp> {
    let nabla2 = NCOp::monomial(0, 0, 2, q(1));
    let mut out: Vec<NCOp> = (0..k / 2 + k % 2)
        .map(|i| {
            let j = (k - 2 * i) as i64;
            &nabla2 + &NCOp::monomial(0, 1, 0, q(j * j))
        })
        .collect();
    if k.is_multiple_of(2) {
        out.push(NCOp::nabla());
    }
    out
}

pub fn rhs_product(k: u32) -> NCOp {
    NCOp::product(&rhs_factors(k), Specialization::Graded)
}

/// The factorization identity for `k`, in the graded algebra and at `g = 1`.
pub fn verify_identity(k: u32) -> bool {
    let graded = bgg_product(k) == rhs_product(k);
    let lhs_one = NCOp::product(&bgg_factors(k), Specialization::GEqualsOne);
    let rhs_one = NCOp::product(&rhs_factors(k), Specialization::GEqualsOne);
    let at_one = lhs_one == rhs_one && lhs_one == bgg_product(k).specialize_g_one();
    graded && at_one
}

/// Renders a list of factors as a product, parenthesizing sums.
pub fn factored_string(factors: &[NCOp], latex: bool) -> String {
    let parts: Vec<String> = factors
        .iter()
        .map(|f| {
            let s = if latex { f.to_latex() } else { f.to_ascii() };
            if f.len() > 1 {
                if latex {
                    format!("\\left({s}\\right)")
                } else {
                    format!("({s})")
                }
            } else {
                s
            }
        })
        .collect();
    parts.join(" ")
}
