//! Canonical expressions in the free graded commutative algebra.
//!
//! A [`SuperExpr`] is a finite sum of monomials. Each monomial is stored as
//! a [`Term`] (its factor part) mapped to a nonzero [`Coeff`]. Odd factors
//! are kept strictly increasing in the generator order; moving them into
//! that order produces the Koszul sign, and a repeated odd factor kills the
//! monomial. Even factors carry positive exponents.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::coeff::Coeff;
use crate::error::KernelError;
use crate::generator::{GenKind, Generator, Parity};

/// Name of the even coordinate that function symbols depend on.
pub const TIME: &str = "t";

/// Factor part of a monomial. Ordering compares the odd sequence first,
/// then the even multiset; this is also the printing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Term {
    odd: Vec<Generator>,
    even: Vec<(Generator, u32)>,
}

impl Term {
    /// Build from already sorted, duplicate-free factor lists.
    pub(crate) fn from_parts(odd: Vec<Generator>, even: Vec<(Generator, u32)>) -> Self {
        Term { odd, even }
    }

    pub fn one() -> Self {
        Term::default()
    }

    pub fn odd_factors(&self) -> &[Generator] {
        &self.odd
    }

    pub fn even_factors(&self) -> &[(Generator, u32)] {
        &self.even
    }

    pub fn is_one(&self) -> bool {
        self.odd.is_empty() && self.even.is_empty()
    }

    pub fn parity(&self) -> Parity {
        Parity::from_count(self.odd.len())
    }

    pub fn degree_in(&self, g: &Generator) -> u32 {
        if g.is_odd() {
            u32::from(self.odd.binary_search(g).is_ok())
        } else {
            self.even
                .iter()
                .find(|(h, _)| h == g)
                .map(|(_, e)| *e)
                .unwrap_or(0)
        }
    }

    pub fn generators(&self) -> impl Iterator<Item = &Generator> {
        self.even.iter().map(|(g, _)| g).chain(self.odd.iter())
    }

    /// Product of two canonical terms. Returns `None` when an odd factor
    /// repeats, otherwise the sign flag (true = negate) and the product.
    pub fn mul(&self, other: &Term) -> Option<(bool, Term)> {
        let mut odd = Vec::with_capacity(self.odd.len() + other.odd.len());
        let mut negate = false;
        let (mut i, mut j) = (0, 0);
        while i < self.odd.len() && j < other.odd.len() {
            match self.odd[i].cmp(&other.odd[j]) {
                std::cmp::Ordering::Less => {
                    odd.push(self.odd[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    // other.odd[j] jumps over every remaining factor of self
                    if (self.odd.len() - i) % 2 == 1 {
                        negate = !negate;
                    }
                    odd.push(other.odd[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => return None,
            }
        }
        odd.extend_from_slice(&self.odd[i..]);
        odd.extend_from_slice(&other.odd[j..]);

        let mut even = self.even.clone();
        for (g, e) in &other.even {
            match even.binary_search_by(|(h, _)| h.cmp(g)) {
                Ok(pos) => even[pos].1 += e,
                Err(pos) => even.insert(pos, (g.clone(), *e)),
            }
        }
        Some((negate, Term { odd, even }))
    }
}

/// A canonical element of the graded commutative algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SuperExpr {
    terms: BTreeMap<Term, Coeff>,
}

/// Parity of an expression: every term agrees, or not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExprParity {
    Even,
    Odd,
    Mixed,
}

impl ExprParity {
    pub fn homogeneous(self) -> Option<Parity> {
        match self {
            ExprParity::Even => Some(Parity::Even),
            ExprParity::Odd => Some(Parity::Odd),
            ExprParity::Mixed => None,
        }
    }
}

/// An un-normalised term tree over coefficients and generators.
#[derive(Clone, Debug, PartialEq)]
pub enum RawExpr {
    Num(Coeff),
    Gen(Generator),
    Add(Vec<RawExpr>),
    Mul(Vec<RawExpr>),
    Neg(Box<RawExpr>),
}

/// Reduce a term tree to its unique canonical form.
pub fn canonicalize(raw: &RawExpr) -> SuperExpr {
    match raw {
        RawExpr::Num(c) => SuperExpr::constant(c.clone()),
        RawExpr::Gen(g) => SuperExpr::gen(g.clone()),
        RawExpr::Add(items) => items
            .iter()
            .fold(SuperExpr::zero(), |acc, x| acc + canonicalize(x)),
        RawExpr::Mul(items) => items
            .iter()
            .fold(SuperExpr::one(), |acc, x| &acc * &canonicalize(x)),
        RawExpr::Neg(x) => -canonicalize(x),
    }
}

impl SuperExpr {
    pub fn zero() -> Self {
        SuperExpr::default()
    }

    pub fn one() -> Self {
        SuperExpr::constant(Coeff::one())
    }

    pub fn i() -> Self {
        SuperExpr::constant(Coeff::i())
    }

    pub fn int(n: i64) -> Self {
        SuperExpr::constant(Coeff::int(n))
    }

    pub fn constant(c: Coeff) -> Self {
        SuperExpr::monomial(c, Term::one())
    }

    pub fn gen(g: Generator) -> Self {
        let term = if g.is_odd() {
            Term {
                odd: vec![g],
                even: vec![],
            }
        } else {
            Term {
                odd: vec![],
                even: vec![(g, 1)],
            }
        };
        SuperExpr::monomial(Coeff::one(), term)
    }

    pub fn monomial(c: Coeff, term: Term) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(term, c);
        }
        SuperExpr { terms }
    }

    /// Product of generators in the given order, canonicalized.
    pub fn product(gens: &[Generator]) -> Self {
        gens.iter()
            .fold(SuperExpr::one(), |acc, g| &acc * &SuperExpr::gen(g.clone()))
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

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, term: &Term) -> Coeff {
        self.terms.get(term).cloned().unwrap_or_default()
    }

    /// The value if this expression is a bare constant (zero included).
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(Coeff::zero()),
            1 => {
                let (t, c) = self.terms.iter().next().unwrap();
                t.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &Coeff) -> SuperExpr {
        if c.is_zero() {
            return SuperExpr::zero();
        }
        SuperExpr {
            terms: self.terms.iter().map(|(t, k)| (t.clone(), k * c)).collect(),
        }
    }

    fn add_term(&mut self, term: Term, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(term) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn parity_of(&self) -> ExprParity {
        let mut seen: Option<Parity> = None;
        for t in self.terms.keys() {
            match seen {
                None => seen = Some(t.parity()),
                Some(p) if p != t.parity() => return ExprParity::Mixed,
                _ => {}
            }
        }
        match seen.unwrap_or(Parity::Even) {
            Parity::Even => ExprParity::Even,
            Parity::Odd => ExprParity::Odd,
        }
    }

    /// True for zero and for expressions whose terms all have parity `p`.
    pub fn has_parity(&self, p: Parity) -> bool {
        self.terms.keys().all(|t| t.parity() == p)
    }

    pub fn part(&self, p: Parity) -> SuperExpr {
        SuperExpr {
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| t.parity() == p)
                .map(|(t, c)| (t.clone(), c.clone()))
                .collect(),
        }
    }

    /// The parity automorphism: even part minus odd part.
    pub fn parity_twist(&self) -> SuperExpr {
        SuperExpr {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.clone(), if t.parity().is_odd() { -c } else { c.clone() }))
                .collect(),
        }
    }

    pub fn generators(&self) -> BTreeSet<Generator> {
        self.terms
            .keys()
            .flat_map(|t| t.generators().cloned())
            .collect()
    }

    pub fn contains(&self, pred: impl Fn(&Generator) -> bool) -> bool {
        self.terms.keys().any(|t| t.generators().any(&pred))
    }

    pub fn contains_differentials(&self) -> bool {
        self.contains(Generator::is_differential)
    }

    /// Keep only the terms satisfying `keep`.
    pub fn filter_terms(&self, keep: impl Fn(&Term) -> bool) -> SuperExpr {
        SuperExpr {
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| keep(t))
                .map(|(t, c)| (t.clone(), c.clone()))
                .collect(),
        }
    }

    /// Apply a graded derivation of parity `parity`, given by its values on
    /// generators (`None` means zero). Uses the left Leibniz rule
    /// `D(xy) = D(x)y + (-1)^{|D||x|} x D(y)`.
    pub fn derivation<F>(&self, parity: Parity, image: F) -> SuperExpr
    where
        F: Fn(&Generator) -> Option<SuperExpr>,
    {
        let mut out = SuperExpr::zero();
        for (term, c) in &self.terms {
            let odd_tail = SuperExpr::monomial(
                Coeff::one(),
                Term {
                    odd: term.odd.clone(),
                    even: vec![],
                },
            );
            for (idx, (g, e)) in term.even.iter().enumerate() {
                let Some(img) = image(g) else { continue };
                if img.is_zero() {
                    continue;
                }
                let mut even = term.even.clone();
                if *e == 1 {
                    even.remove(idx);
                } else {
                    even[idx].1 -= 1;
                }
                let head =
                    SuperExpr::monomial(c.scale_int(i64::from(*e)), Term { odd: vec![], even });
                out += &(&(&head * &img) * &odd_tail);
            }
            for k in 0..term.odd.len() {
                let Some(img) = image(&term.odd[k]) else {
                    continue;
                };
                if img.is_zero() {
                    continue;
                }
                let sign = if parity.is_odd() && k % 2 == 1 {
                    -c
                } else {
                    c.clone()
                };
                let head = SuperExpr::monomial(
                    sign,
                    Term {
                        odd: term.odd[..k].to_vec(),
                        even: term.even.clone(),
                    },
                );
                let tail = SuperExpr::monomial(
                    Coeff::one(),
                    Term {
                        odd: term.odd[k + 1..].to_vec(),
                        even: vec![],
                    },
                );
                out += &(&(&head * &img) * &tail);
            }
        }
        out
    }

    /// Left partial derivative with respect to `g`. Function-of-t symbols
    /// are independent of `t` here; see [`SuperExpr::time_derivative`].
    pub fn left_partial(&self, g: &Generator) -> SuperExpr {
        let mut out = SuperExpr::zero();
        for (term, c) in &self.terms {
            if g.is_odd() {
                if let Ok(pos) = term.odd.binary_search(g) {
                    let mut odd = term.odd.clone();
                    odd.remove(pos);
                    let coeff = if pos % 2 == 1 { -c } else { c.clone() };
                    out.add_term(
                        Term {
                            odd,
                            even: term.even.clone(),
                        },
                        coeff,
                    );
                }
            } else if let Some(idx) = term.even.iter().position(|(h, _)| h == g) {
                let mut even = term.even.clone();
                let e = even[idx].1;
                if e == 1 {
                    even.remove(idx);
                } else {
                    even[idx].1 -= 1;
                }
                out.add_term(
                    Term {
                        odd: term.odd.clone(),
                        even,
                    },
                    c.scale_int(i64::from(e)),
                );
            }
        }
        out
    }

    /// Total time derivative: `t -> 1`, each function symbol to its next
    /// derivative, everything else constant.
    pub fn time_derivative(&self) -> SuperExpr {
        self.derivation(Parity::Even, |g| match g.kind() {
            GenKind::Coordinate(Parity::Even) if g.name() == TIME => Some(SuperExpr::one()),
            GenKind::Function { .. } => g.time_derivative().map(SuperExpr::gen),
            _ => None,
        })
    }

    /// Set every odd generator to zero.
    pub fn body(&self) -> SuperExpr {
        self.filter_terms(|t| t.odd.is_empty())
    }

    /// Inverse of an even element with constant nonzero body, via the
    /// terminating geometric series in the nilpotent part.
    pub fn invert(&self) -> Result<SuperExpr, KernelError> {
        if !self.has_parity(Parity::Even) {
            return Err(KernelError::BodyNotInvertible);
        }
        let body = self
            .body()
            .as_constant()
            .ok_or(KernelError::BodyNotInvertible)?;
        let inv = body.inv().ok_or(KernelError::BodyNotInvertible)?;
        let nil = self - &SuperExpr::constant(body);
        let step = nil.scale(&-&inv);
        let mut power = SuperExpr::one();
        let mut sum = SuperExpr::zero();
        while !power.is_zero() {
            sum += &power;
            power = &power * &step;
        }
        Ok(sum.scale(&inv))
    }

    /// Simultaneous substitution of generators. Images must be homogeneous
    /// of the generator's parity (zero is always accepted).
    pub fn substitute(
        &self,
        map: &BTreeMap<Generator, SuperExpr>,
    ) -> Result<SuperExpr, KernelError> {
        for (g, img) in map {
            if !img.has_parity(g.parity()) {
                return Err(KernelError::ParityMismatch {
                    generator: g.to_string(),
                    expected: g.parity(),
                });
            }
        }
        let image = |g: &Generator| {
            map.get(g)
                .cloned()
                .unwrap_or_else(|| SuperExpr::gen(g.clone()))
        };
        let mut out = SuperExpr::zero();
        for (term, c) in &self.terms {
            let mut acc = SuperExpr::constant(c.clone());
            for (g, e) in &term.even {
                let img = image(g);
                for _ in 0..*e {
                    acc = &acc * &img;
                }
                if acc.is_zero() {
                    break;
                }
            }
            for g in &term.odd {
                if acc.is_zero() {
                    break;
                }
                acc = &acc * &image(g);
            }
            out += &acc;
        }
        Ok(out)
    }

    /// Decompose as `sum_n s_n * n` where each `n` is a product of "frame"
    /// generators (those satisfying `is_frame`) and each scalar `s_n` is
    /// free of frame generators and sits to the left.
    pub fn split_frame(&self, is_frame: impl Fn(&Generator) -> bool) -> BTreeMap<Term, SuperExpr> {
        let mut out: BTreeMap<Term, SuperExpr> = BTreeMap::new();
        for (term, c) in &self.terms {
            let (f_even, s_even): (Vec<_>, Vec<_>) =
                term.even.iter().cloned().partition(|(g, _)| is_frame(g));
            let mut s_odd = Vec::new();
            let mut f_odd = Vec::new();
            let mut negate = false;
            for g in &term.odd {
                if is_frame(g) {
                    f_odd.push(g.clone());
                } else {
                    // a scalar factor moves left past every frame factor already seen
                    if f_odd.len() % 2 == 1 {
                        negate = !negate;
                    }
                    s_odd.push(g.clone());
                }
            }
            let coeff = if negate { -c } else { c.clone() };
            let frame = Term {
                odd: f_odd,
                even: f_even,
            };
            out.entry(frame).or_default().add_term(
                Term {
                    odd: s_odd,
                    even: s_even,
                },
                coeff,
            );
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

impl From<Coeff> for SuperExpr {
    fn from(c: Coeff) -> Self {
        SuperExpr::constant(c)
    }
}

impl From<Generator> for SuperExpr {
    fn from(g: Generator) -> Self {
        SuperExpr::gen(g)
    }
}

impl AddAssign<&SuperExpr> for SuperExpr {
    fn add_assign(&mut self, rhs: &SuperExpr) {
        for (t, c) in &rhs.terms {
            self.add_term(t.clone(), c.clone());
        }
    }
}

impl Add for &SuperExpr {
    type Output = SuperExpr;
    fn add(self, rhs: &SuperExpr) -> SuperExpr {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for SuperExpr {
    type Output = SuperExpr;
    fn add(mut self, rhs: SuperExpr) -> SuperExpr {
        self += &rhs;
        self
    }
}

impl Add<&SuperExpr> for SuperExpr {
    type Output = SuperExpr;
    fn add(mut self, rhs: &SuperExpr) -> SuperExpr {
        self += rhs;
        self
    }
}

impl Neg for &SuperExpr {
    type Output = SuperExpr;
    fn neg(self) -> SuperExpr {
        SuperExpr {
            terms: self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect(),
        }
    }
}

impl Neg for SuperExpr {
    type Output = SuperExpr;
    fn neg(self) -> SuperExpr {
        -&self
    }
}

impl Sub for &SuperExpr {
    type Output = SuperExpr;
    fn sub(self, rhs: &SuperExpr) -> SuperExpr {
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.clone(), -c);
        }
        out
    }
}

impl Sub for SuperExpr {
    type Output = SuperExpr;
    fn sub(self, rhs: SuperExpr) -> SuperExpr {
        &self - &rhs
    }
}

impl Sub<&SuperExpr> for SuperExpr {
    type Output = SuperExpr;
    fn sub(self, rhs: &SuperExpr) -> SuperExpr {
        &self - rhs
    }
}

impl Mul for &SuperExpr {
    type Output = SuperExpr;
    fn mul(self, rhs: &SuperExpr) -> SuperExpr {
        let mut out = SuperExpr::zero();
        for (ta, ca) in &self.terms {
            for (tb, cb) in &rhs.terms {
                if let Some((negate, t)) = ta.mul(tb) {
                    let c = ca * cb;
                    out.add_term(t, if negate { -c } else { c });
                }
            }
        }
        out
    }
}

impl Mul for SuperExpr {
    type Output = SuperExpr;
    fn mul(self, rhs: SuperExpr) -> SuperExpr {
        &self * &rhs
    }
}
