//! Finite graded Lie algebras by structure constants, Lie-valued
//! expressions `sum_a f_a (x) e_a`, and the Maurer-Cartan form of a
//! formal exponential through the Hadamard series.
//!
//! Coefficients sit to the left of basis elements and brackets follow
//! `[f (x) a, g (x) b] = (-1)^{|a||g|} (f g) (x) [a, b]`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::calculus::{exterior_derivative, Chart, VectorField};
use crate::coeff::Coeff;
use crate::error::LieError;
use crate::expr::SuperExpr;
use crate::generator::Parity;

/// `[e_a, e_b] = sum_d c^{ab}_d e_d` as a sparse list of `(d, c)`.
pub type BracketValue = Vec<(usize, Coeff)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraPresentation {
    name: String,
    basis: Vec<(String, Parity)>,
    table: BTreeMap<(usize, usize), BracketValue>,
}

impl LieAlgebraPresentation {
    /// Brackets not listed (in either order) are zero; a listed pair fixes
    /// its reverse by graded antisymmetry. Parity, antisymmetry and the
    /// graded Jacobi identity are checked.
    pub fn new(
        name: &str,
        basis: Vec<(String, Parity)>,
        brackets: Vec<((String, String), Vec<(String, Coeff)>)>,
    ) -> Result<Self, LieError> {
        for (k, (n, _)) in basis.iter().enumerate() {
            if basis[..k].iter().any(|(m, _)| m == n) {
                return Err(LieError::DuplicateBasis(n.clone()));
            }
        }
        let idx = |n: &str| {
            basis
                .iter()
                .position(|(m, _)| m == n)
                .ok_or_else(|| LieError::UnknownBasis(n.to_string()))
        };
        let mut alg = LieAlgebraPresentation {
            name: name.to_string(),
            basis: basis.clone(),
            table: BTreeMap::new(),
        };
        for ((a, b), value) in brackets {
            let (ia, ib) = (idx(&a)?, idx(&b)?);
            let mut v: BTreeMap<usize, Coeff> = BTreeMap::new();
            for (d, c) in value {
                let id = idx(&d)?;
                if basis[id].1 != basis[ia].1 + basis[ib].1 {
                    return Err(LieError::BracketParity(a.clone(), b.clone()));
                }
                *v.entry(id).or_default() += &c;
            }
            let v: BracketValue = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            let sign_flip = !basis[ia].1.koszul(basis[ib].1);
            let rev: BracketValue = v
                .iter()
                .map(|(d, c)| (*d, if sign_flip { -c } else { c.clone() }))
                .collect();
            for (key, val) in [((ia, ib), v), ((ib, ia), rev)] {
                match alg.table.get(&key) {
                    Some(old) if *old != val => {
                        return Err(LieError::Antisymmetry(a.clone(), b.clone()))
                    }
                    _ => {
                        alg.table.insert(key, val);
                    }
                }
            }
        }
        alg.table.retain(|_, v| !v.is_empty());
        alg.check_jacobi()?;
        Ok(alg)
    }

    /// `P` even, `Q`, `Qb` odd with `[Q,Qb] = 2i P`.
    pub fn n2() -> Self {
        Self::new(
            "n2",
            vec![
                ("P".into(), Parity::Even),
                ("Q".into(), Parity::Odd),
                ("Qb".into(), Parity::Odd),
            ],
            vec![(
                ("Q".into(), "Qb".into()),
                vec![("P".into(), Coeff::gaussian(0, 2))],
            )],
        )
        .expect("valid presentation")
    }

    /// `P` even, `Q` odd with `[Q,Q] = 2i P`.
    pub fn n1() -> Self {
        Self::new(
            "n1",
            vec![("P".into(), Parity::Even), ("Q".into(), Parity::Odd)],
            vec![(
                ("Q".into(), "Q".into()),
                vec![("P".into(), Coeff::gaussian(0, 2))],
            )],
        )
        .expect("valid presentation")
    }

    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "n1" => Some(Self::n1()),
            "n2" => Some(Self::n2()),
            _ => None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis(&self) -> &[(String, Parity)] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|(n, _)| n == name)
    }

    pub fn parity(&self, a: usize) -> Parity {
        self.basis[a].1
    }

    pub fn bracket_basis(&self, a: usize, b: usize) -> &[(usize, Coeff)] {
        self.table.get(&(a, b)).map(Vec::as_slice).unwrap_or(&[])
    }

    fn bracket_vec(&self, x: &[Coeff], b: usize) -> Vec<Coeff> {
        let mut out = vec![Coeff::zero(); self.dim()];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (d, c) in self.bracket_basis(a, b) {
                out[*d] += &(xa * c);
            }
        }
        out
    }

    fn check_jacobi(&self) -> Result<(), LieError> {
        let n = self.dim();
        let unit = |a: usize| {
            let mut v = vec![Coeff::zero(); n];
            v[a] = Coeff::one();
            v
        };
        // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
        let left_bracket = |a: usize, v: &[Coeff]| {
            let mut out = vec![Coeff::zero(); n];
            for (d, vd) in v.iter().enumerate() {
                if vd.is_zero() {
                    continue;
                }
                for (e, c) in self.bracket_basis(a, d) {
                    out[*e] += &(vd * c);
                }
            }
            out
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let bc = self.bracket_vec(&unit(b), c);
                    let lhs = left_bracket(a, &bc);
                    let ab = self.bracket_vec(&unit(a), b);
                    let first = self.bracket_vec(&ab, c);
                    let ac = self.bracket_vec(&unit(a), c);
                    let mut second = left_bracket(b, &ac);
                    if self.parity(a).koszul(self.parity(b)) {
                        second = second.iter().map(|x| -x).collect();
                    }
                    let ok = (0..n).all(|e| lhs[e] == &first[e] + &second[e]);
                    if !ok {
                        let nm = |k: usize| self.basis[k].0.clone();
                        return Err(LieError::Jacobi(nm(a), nm(b), nm(c)));
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether the concrete vector fields (one per basis symbol) satisfy
    /// exactly the structure constants of this presentation.
    pub fn matches_vector_fields(&self, fields: &[VectorField]) -> bool {
        if fields.len() != self.dim() {
            return false;
        }
        for a in 0..self.dim() {
            for b in 0..self.dim() {
                let Ok(lhs) = fields[a].graded_commutator(&fields[b]) else {
                    return false;
                };
                let chart = fields[a].chart().clone();
                let mut rhs = VectorField::zero(chart);
                for (d, c) in self.bracket_basis(a, b) {
                    rhs = &rhs + &fields[*d].scale_left(&SuperExpr::constant(c.clone()));
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// `sum_a f_a (x) e_a`; used both for exponents and for Lie-valued forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieValued {
    algebra: Arc<LieAlgebraPresentation>,
    coeffs: Vec<SuperExpr>,
}

pub type LieValuedExpr = LieValued;
pub type LieValuedForm = LieValued;

impl LieValued {
    pub fn zero(algebra: Arc<LieAlgebraPresentation>) -> Self {
        let n = algebra.dim();
        LieValued {
            algebra,
            coeffs: vec![SuperExpr::zero(); n],
        }
    }

    pub fn from_pairs(
        algebra: Arc<LieAlgebraPresentation>,
        pairs: &[(&str, SuperExpr)],
    ) -> Result<Self, LieError> {
        let mut v = LieValued::zero(algebra);
        for (name, f) in pairs {
            let a = v
                .algebra
                .index_of(name)
                .ok_or_else(|| LieError::UnknownBasis(name.to_string()))?;
            v.coeffs[a] = &v.coeffs[a] + f;
        }
        Ok(v)
    }

    pub fn algebra(&self) -> &Arc<LieAlgebraPresentation> {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[SuperExpr] {
        &self.coeffs
    }

    pub fn coefficient(&self, name: &str) -> Option<&SuperExpr> {
        self.algebra.index_of(name).map(|a| &self.coeffs[a])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(SuperExpr::is_zero)
    }

    /// Total parity is even iff every `f_a` has parity `|e_a|`.
    pub fn is_even(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(a, f)| f.has_parity(self.algebra.parity(a)))
    }

    pub fn map(&self, f: impl Fn(&SuperExpr) -> SuperExpr) -> Self {
        LieValued {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale_left(&self, s: &SuperExpr) -> Self {
        self.map(|f| s * f)
    }

    pub fn add(&self, other: &LieValued) -> Self {
        LieValued {
            algebra: self.algebra.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `d` applied to each coefficient.
    pub fn d(&self, chart: &Chart) -> Self {
        self.map(|f| exterior_derivative(chart, f))
    }
}

/// Bilinear bracket with the Koszul rule of the module docs.
pub fn lie_bracket(x: &LieValued, y: &LieValued) -> LieValued {
    let alg = x.algebra.clone();
    let mut out = LieValued::zero(alg.clone());
    for (a, f) in x.coeffs.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        for (b, g) in y.coeffs.iter().enumerate() {
            let value = alg.bracket_basis(a, b);
            if g.is_zero() || value.is_empty() {
                continue;
            }
            let g_signed = if alg.parity(a).is_odd() {
                g.parity_twist()
            } else {
                g.clone()
            };
            let fg = f * &g_signed;
            for (d, c) in value {
                out.coeffs[*d] = &out.coeffs[*d] + &fg.scale(c);
            }
        }
    }
    out
}

/// `iOmega = e^{-X} d(e^X)` together with `Omega = -i * iOmega` and the
/// index of the first vanishing series term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaurerCartan {
    pub i_omega: LieValued,
    pub omega: LieValued,
    pub order: usize,
}

pub const DEFAULT_ORDER_CAP: usize = 16;

/// Sum of `(-ad_X)^n dX / (n+1)!`, stopping at the first zero term.
pub fn maurer_cartan(chart: &Chart, x: &LieValued, cap: usize) -> Result<MaurerCartan, LieError> {
    if !x.is_even() {
        return Err(LieError::ExponentNotEven);
    }
    let mut power = x.d(chart);
    let mut sum = LieValued::zero(x.algebra.clone());
    let mut factorial = Coeff::one();
    for n in 0..=cap {
        if power.is_zero() {
            let omega = sum.scale_left(&-SuperExpr::i());
            return Ok(MaurerCartan {
                i_omega: sum,
                omega,
                order: n,
            });
        }
        factorial = factorial.scale_int(n as i64 + 1);
        let inv = factorial.inv().expect("nonzero factorial");
        sum = sum.add(&power.map(|f| f.scale(&inv)));
        power = lie_bracket(x, &power).map(|f| -f);
    }
    Err(LieError::NoTermination(cap))
}

/// `d(A) + 1/2 [A, A]` for a Lie-valued one-form `A`.
pub fn flatness_defect(chart: &Chart, a: &LieValued) -> LieValued {
    let half = SuperExpr::constant(Coeff::ratio(1, 2));
    a.d(chart).add(&lie_bracket(a, a).scale_left(&half))
}

/// Stabilizer part and coset part of a Lie-valued form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McSplit {
    pub stabilizer: LieValued,
    pub coset: LieValued,
}

pub fn decompose_mc(omega: &LieValued, stabilizer: &[&str]) -> Result<McSplit, LieError> {
    let alg = omega.algebra.clone();
    let mut keep = vec![false; alg.dim()];
    for s in stabilizer {
        keep[alg
            .index_of(s)
            .ok_or_else(|| LieError::UnknownBasis(s.to_string()))?] = true;
    }
    let pick = |want: bool| LieValued {
        algebra: alg.clone(),
        coeffs: omega
            .coeffs
            .iter()
            .enumerate()
            .map(|(a, f)| {
                if keep[a] == want {
                    f.clone()
                } else {
                    SuperExpr::zero()
                }
            })
            .collect(),
    };
    Ok(McSplit {
        stabilizer: pick(true),
        coset: pick(false),
    })
}

/// `i(t P + th Q + thb Qb)` for `n2` on `r1n2`, `i(t P + th Q)` for `n1`
/// on `r1n1`.
pub fn standard_coset(algebra: &Arc<LieAlgebraPresentation>) -> Option<(Arc<Chart>, LieValued)> {
    let i = SuperExpr::i();
    let (chart, pairs) = match algebra.name() {
        "n2" => {
            let c = Chart::r1n2();
            let p = vec![
                ("P", &i * &c.coord_expr(0)),
                ("Q", &i * &c.coord_expr(1)),
                ("Qb", &i * &c.coord_expr(2)),
            ];
            (c, p)
        }
        "n1" => {
            let c = Chart::r1n1();
            let p = vec![("P", &i * &c.coord_expr(0)), ("Q", &i * &c.coord_expr(1))];
            (c, p)
        }
        _ => return None,
    };
    let x = LieValued::from_pairs(algebra.clone(), &pairs).ok()?;
    Some((chart, x))
}
