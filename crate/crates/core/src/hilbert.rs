//! Constrained interpolation of `P_A(t) = chi(K_X + tA)` for Fano `X` with
//! `K_X = -rA`, `H = sA`.
//!
//! `P_A` is written `u * prod (t - rho) * C(t)` with `u = A^n/n!` and `C`
//! monic with unknown lower coefficients. Everything is linear in the
//! scaled unknowns `y = (u, u*c_1, ..., u*c_m[, Y])` where `Y = A^{n-2} c_2`,
//! so each case reduces to one exact linear solve.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::qexact::{elem_symmetric, int, rat, solve_linear, Affine, LinearSolution, QMatrix, QPoly, Rational};
use crate::trace::{trace_op, Op};
use crate::ulrich::{c2_identity_check, proportional_case, ContradictionKind, VarietyParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CaseId {
    /// `n = 8`, `k = 4`
    D3,
    /// `n = 10`, `k = 4`
    D4,
    /// `n = 10`, `k = 5`
    E4,
}

impl CaseId {
    pub const ALL: [CaseId; 3] = [CaseId::D3, CaseId::D4, CaseId::E4];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::D3 => "3d",
            CaseId::D4 => "4d",
            CaseId::E4 => "4e",
        }
    }

    fn data(self) -> (i64, i64, &'static [i64], usize) {
        // (m, k, roots, cofactor degree)
        match self {
            CaseId::D3 => (4, 4, &[1, 2, 3, 5, 10, 15], 2),
            CaseId::D4 => (5, 4, &[1, 2, 3, 4, 6, 8, 10], 3),
            CaseId::E4 => (5, 5, &[1, 2, 3, 4, 6, 12, 18, 24], 2),
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        CaseId::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| Error::UnknownCase(s.into()))
    }
}

/// Value of an interpolation coefficient as `u_mult * u + c2_mult * Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RrCoefficient {
    pub u_mult: Rational,
    pub c2_mult: Rational,
}

/// Coefficients of `t^n`, `t^{n-1}`, `t^{n-2}` in the Riemann-Roch
/// expansion when `K_X = -rA`, keyed by the power of `t`.
pub fn rr_top_coefficients(n: usize, r: i64) -> Result<BTreeMap<usize, RrCoefficient>, Error> {
    trace_op(Op::RrTopCoefficients);
    if n < 2 {
        return Err(Error::InvalidParameter("interpolation needs n >= 2".into()));
    }
    let ni = n as i64;
    let fact_n2: BigInt = (1..=ni - 2).map(BigInt::from).product();
    let mut out = BTreeMap::new();
    out.insert(n, RrCoefficient { u_mult: int(1), c2_mult: int(0) });
    out.insert(n - 1, RrCoefficient { u_mult: rat(-r * ni, 2), c2_mult: int(0) });
    out.insert(
        n - 2,
        RrCoefficient { u_mult: rat(r * r * ni * (ni - 1), 12), c2_mult: Rational::new(BigInt::one(), fact_n2 * 12) },
    );
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RrConstraint {
    /// `P(t0) = value`
    Value { t0: i64, value: Rational },
    /// Coefficient of `t^power` equals the given multiple of `u` and `Y`.
    TopCoeff { power: usize, rhs: RrCoefficient },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstrainedPoly {
    pub case: CaseId,
    pub n: usize,
    pub known_roots: Vec<i64>,
    /// Degree of the unknown monic cofactor.
    pub cofactor_degree: usize,
    /// Fano index multiplier: `K_X = -rA`.
    pub r: i64,
    /// `H = sA`.
    pub s: i64,
    pub k: i64,
}

impl ConstrainedPoly {
    pub fn root_poly(&self) -> QPoly {
        QPoly::from_roots(&self.known_roots)
    }

    /// Whether `Y = A^{n-2} c_2` enters as an unknown.
    pub fn uses_c2(&self, constraints: &[RrConstraint]) -> bool {
        constraints.iter().any(|c| matches!(c, RrConstraint::TopCoeff { rhs, .. } if !rhs.c2_mult.is_zero()))
    }

    fn unknowns(&self, with_c2: bool) -> usize {
        1 + self.cofactor_degree + usize::from(with_c2)
    }

    /// `P(t0)` as a linear form in `y`.
    fn value_row(&self, t0: i64, vars: usize) -> Vec<Rational> {
        let rt = self.root_poly().eval(&int(t0));
        let m = self.cofactor_degree;
        let mut row: Vec<Rational> = (0..vars).map(|_| Rational::zero()).collect();
        let mut pow = int(1);
        for i in (0..=m).rev() {
            row[i] = &rt * &pow;
            pow *= int(t0);
        }
        row
    }

    /// Coefficient of `t^{n-j}` as a linear form in `y`.
    fn coeff_row(&self, j: usize, vars: usize) -> Vec<Rational> {
        let mut row: Vec<Rational> = (0..vars).map(|_| Rational::zero()).collect();
        let len = self.known_roots.len();
        for (i, slot) in row.iter_mut().enumerate().take(j.min(self.cofactor_degree) + 1) {
            let l = j - i;
            if l > len {
                continue;
            }
            let e = Rational::from_integer(elem_symmetric(&self.known_roots, l));
            *slot = if l.is_multiple_of(2) { e } else { -e };
        }
        row
    }
}

/// The interpolation data of one case.
pub fn build_case(case: CaseId) -> Result<(ConstrainedPoly, Vec<RrConstraint>), Error> {
    trace_op(Op::BuildCase);
    let (m, k, roots, cof) = case.data();
    let ps = proportional_case(m, k)?;
    let n = (2 * m) as usize;
    let poly = ConstrainedPoly { case, n, known_roots: roots.to_vec(), cofactor_degree: cof, r: ps.r, s: ps.s, k };
    let top = rr_top_coefficients(n, ps.r)?;
    let mut constraints = alloc::vec![
        // chi(K_X) = chi(O_X) = 1 by Serre duality with n even
        RrConstraint::Value { t0: 0, value: int(1) },
        // P(r) = chi(O_X)
        RrConstraint::Value { t0: ps.r, value: int(1) },
        RrConstraint::TopCoeff { power: n - 1, rhs: top[&(n - 1)].clone() },
    ];
    if cof >= 3 {
        constraints.push(RrConstraint::TopCoeff { power: n - 2, rhs: top[&(n - 2)].clone() });
    }
    Ok((poly, constraints))
}

/// `A^{n-2} c_2 = factor * A^n`, the relation forced by the second Chern
/// identity with `H = sA`, `K_X = -rA`.
pub fn c2_relation(poly: &ConstrainedPoly) -> Result<Rational, Error> {
    let (n, r, s) = (poly.n as i64, poly.r, poly.s);
    let sn = s.pow(n as u32);
    let sn2 = s.pow(n as u32 - 2);
    // residual is linear and homogeneous in (X, Y) = (A^n, A^{n-2} c_2)
    let probe = |x: i64, y: i64| -> Result<Rational, Error> {
        let p = VarietyParams::new(n, sn * x, 0, poly.k)?.with_k2(r * r * sn2 * x).with_c2(sn2 * y);
        c2_identity_check(&p)
    };
    let alpha = probe(1, 0)?;
    let beta = probe(1, 1)? - &alpha;
    if probe(2, 0)? != &alpha * int(2) || beta.is_zero() {
        return Err(Error::Inconsistent);
    }
    Ok(-alpha / beta)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseSolution {
    pub case: CaseId,
    pub a: Rational,
    /// `u = A^n / n!`
    pub u: Rational,
    /// `A^n`
    pub a_to_n: Rational,
    /// Named exact values such as `u*b`.
    pub values: Vec<(String, Rational)>,
    /// Named derived identities, rendered.
    pub identities: Vec<(String, String)>,
    pub contradiction: ContradictionKind,
    pub statement: String,
}

impl CaseSolution {
    pub fn value(&self, name: &str) -> Option<&Rational> {
        self.values.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn identity(&self, name: &str) -> Option<&str> {
        self.identities.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_str())
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n as i64).map(BigInt::from).product()
}

fn constraint_rows(
    poly: &ConstrainedPoly,
    constraints: &[RrConstraint],
    vars: usize,
) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    // value constraints first, in order, then coefficients
    for c in constraints {
        if let RrConstraint::Value { t0, value } = c {
            rows.push(poly.value_row(*t0, vars));
            rhs.push(value.clone());
        }
    }
    for c in constraints {
        if let RrConstraint::TopCoeff { power, rhs: want } = c {
            let mut row = poly.coeff_row(poly.n - power, vars);
            row[0] -= &want.u_mult;
            if !want.c2_mult.is_zero() {
                row[vars - 1] -= &want.c2_mult;
            }
            rows.push(row);
            rhs.push(int(0));
        }
    }
    (rows, rhs)
}

const COEFF_NAMES: [&str; 3] = ["a", "b", "c"];

/// Eliminates every unknown and reports the terminal contradiction.
pub fn solve_case(case: CaseId) -> Result<CaseSolution, Error> {
    trace_op(Op::SolveCase);
    let (poly, constraints) = build_case(case)?;
    let with_c2 = poly.uses_c2(&constraints);
    let vars = poly.unknowns(with_c2);
    let nfact = Rational::from_integer(factorial(poly.n));
    let (mut rows, mut rhs) = constraint_rows(&poly, &constraints, vars);
    let mut identities = Vec::new();
    let mut values = Vec::new();

    if with_c2 {
        // first keep Y free to expose the relation between A^n and A^{n-2} c_2
        let m = QMatrix::from_rows(rows.clone())?;
        let LinearSolution::Parametric(p) = solve_linear(&m, &rhs)? else {
            return Err(Error::Inconsistent);
        };
        let u_of_y: &Affine = &p.values[0];
        // A^n = n! u = n! (alpha Y + beta)  ->  A^n - n! alpha Y - n! beta = 0
        let cx = int(1);
        let cy = -(u_of_y.coeff(0) * &nfact);
        let c0 = -(u_of_y.constant_term() * &nfact);
        let scale = primitive_scale(&[cx.clone(), cy.clone(), c0.clone()]);
        let rel = Affine::from_parts(alloc::vec![cx * &scale, cy * &scale], c0 * &scale);
        identities.push(("A^n vs A^(n-2)c2".into(), format!("{} = 0", rel.display_with(&["X", "Y"]))));

        let factor = c2_relation(&poly)?;
        identities.push(("A^(n-2)c2".into(), format!("{factor}*X")));
        values.push(("A^(n-2)c2 / A^n".into(), factor.clone()));
        let combined = rel.coeff(0) + rel.coeff(1) * &factor;
        identities.push(("combined".into(), format!("{combined}*X = {}", -rel.constant_term())));

        // Y - factor * n! u = 0
        let mut row: Vec<Rational> = (0..vars).map(|_| Rational::zero()).collect();
        row[0] = -(&factor * &nfact);
        row[vars - 1] = int(1);
        rows.push(row);
        rhs.push(int(0));
    }

    let m = QMatrix::from_rows(rows)?;
    let LinearSolution::Unique(y) = solve_linear(&m, &rhs)? else {
        return Err(Error::Inconsistent);
    };
    let u = y[0].clone();
    let a = &y[1] / &u;
    for i in 1..=poly.cofactor_degree {
        values.push((format!("u*{}", COEFF_NAMES[i - 1]), y[i].clone()));
    }
    if with_c2 {
        values.push(("A^(n-2)c2".into(), y[vars - 1].clone()));
    }
    let a_to_n = &u * &nfact;

    // the last value constraint with the solved lower coefficients substituted
    let t0 = poly.r;
    let rt = poly.root_poly().eval(&int(t0));
    let m = poly.cofactor_degree;
    let mut lead = int(0);
    let mut pow = int(1);
    let mut pows = Vec::new();
    for _ in 0..=m {
        pows.push(pow.clone());
        pow *= int(t0);
    }
    // leading part involves u times (t0^m + a t0^{m-1}); the rest is already scaled by u
    lead += &pows[m] + &a * &pows[m - 1];
    let mut rest = int(0);
    for i in 2..=m {
        rest += &y[i] * &pows[m - i];
    }
    let u_coeff = &rt * &lead;
    let rhs_val = int(1) - &rt * &rest;
    values.push(("P(r) root factor".into(), rt.clone()));
    identities.push(("P(r) = 1".into(), format!("{u_coeff}*u = {rhs_val}")));
    values.push(("P(r) u-coefficient".into(), u_coeff));
    values.push(("P(r) right-hand side".into(), rhs_val));

    let (contradiction, statement) = if !a_to_n.is_positive() {
        (ContradictionKind::Sign, format!("A^{} = {a_to_n} is not positive", poly.n))
    } else if !a_to_n.is_integer() {
        (ContradictionKind::Integrality, format!("A^{} = {a_to_n} is not an integer", poly.n))
    } else {
        return Err(Error::Inconsistent);
    };
    Ok(CaseSolution { case, a, u, a_to_n, values, identities, contradiction, statement })
}

/// Factor turning a rational vector into a primitive integer vector whose
/// first nonzero entry is positive.
fn primitive_scale(v: &[Rational]) -> Rational {
    use num_integer::Integer;
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let gcd = v
        .iter()
        .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
        .fold(BigInt::zero(), |acc, x| acc.gcd(&x));
    if gcd.is_zero() {
        return int(1);
    }
    let sign = v.iter().find(|x| !x.is_zero()).map_or(1, |x| if x.is_negative() { -1 } else { 1 });
    Rational::new(lcm, gcd) * int(sign)
}

/// `((n-2)k - 2)/(n+2)`, the strict lower bound on `m(H, A)` when `H = mA`
/// in the proportional setting.
pub fn proportional_multiple_bound(n: i64, k: i64) -> Rational {
    rat((n - 2) * k - 2, n + 2)
}
