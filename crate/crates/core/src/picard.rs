//! Intersection theory on the blowup of the plane at `r` general points.
//!
//! A class `(a; b_1, ..., b_r)` stands for `aL - sum b_i E_i`; the form is
//! `D.D' = aa' - sum b_i b_i'` and `K = (-3; -1, ..., -1)`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::certificate::{Certificate, CertificateBuilder};
use crate::diophantine::{solve_632num, solve_conto};
use crate::error::Error;
use crate::qexact::{rat, Rational};
use crate::trace::{trace_op, Op};

pub const MAX_POINTS: usize = 8;
/// Effectivity and positivity are decided for `2 <= r <= EFFECTIVE_MAX`.
pub const EFFECTIVE_MIN: usize = 2;
pub const EFFECTIVE_MAX: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PicardClass {
    pub a: i64,
    pub b: Vec<i64>,
}

impl PicardClass {
    pub fn new(a: i64, b: Vec<i64>) -> Self {
        PicardClass { a, b }
    }

    pub fn r(&self) -> usize {
        self.b.len()
    }

    pub fn zero(r: usize) -> Self {
        PicardClass { a: 0, b: alloc::vec![0; r] }
    }

    pub fn line(r: usize) -> Self {
        PicardClass { a: 1, b: alloc::vec![0; r] }
    }

    /// Exceptional curve over the `i`-th point (zero-based).
    pub fn exceptional(r: usize, i: usize) -> Self {
        let mut b = alloc::vec![0; r];
        b[i] = -1;
        PicardClass { a: 0, b }
    }

    pub fn canonical(r: usize) -> Self {
        PicardClass { a: -3, b: alloc::vec![-1; r] }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b.iter().all(|&x| x == 0)
    }

    pub fn scale(&self, s: i64) -> Self {
        PicardClass { a: self.a * s, b: self.b.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        same_r(self, other)?;
        Ok(PicardClass { a: self.a + other.a, b: self.b.iter().zip(&other.b).map(|(x, y)| x + y).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.scale(-1))
    }

    /// `D . (-K) = 3a - sum b_i`, the anticanonical degree.
    pub fn anticanonical_degree(&self) -> i64 {
        3 * self.a - self.b.iter().sum::<i64>()
    }
}

impl fmt::Display for PicardClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.a)?;
        for (i, x) in self.b.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

fn same_r(d: &PicardClass, e: &PicardClass) -> Result<(), Error> {
    if d.r() != e.r() {
        return Err(Error::RankMismatch { left: d.r(), right: e.r() });
    }
    Ok(())
}

fn dot(d: &PicardClass, e: &PicardClass) -> i64 {
    d.a * e.a - d.b.iter().zip(&e.b).map(|(x, y)| x * y).sum::<i64>()
}

pub fn intersect(d: &PicardClass, e: &PicardClass) -> Result<i64, Error> {
    trace_op(Op::Intersect);
    same_r(d, e)?;
    Ok(dot(d, e))
}

pub fn self_int(d: &PicardClass) -> i64 {
    trace_op(Op::SelfInt);
    dot(d, d)
}

/// Arithmetic genus `D(D+K)/2 + 1`.
pub fn pa(d: &PicardClass) -> Rational {
    trace_op(Op::ArithmeticGenus);
    let k = PicardClass::canonical(d.r());
    rat(dot(d, d) + dot(d, &k), 2) + rat(1, 1)
}

fn check_range(r: usize, min: usize, max: usize) -> Result<(), Error> {
    if r < min || r > max {
        return Err(Error::UnsupportedRank { r, min, max });
    }
    Ok(())
}

/// All classes with `E^2 = -1` and `E.K = -1`, sorted.
pub fn minus_one_curves(r: usize) -> Result<Vec<PicardClass>, Error> {
    trace_op(Op::MinusOneCurves);
    check_range(r, 2, MAX_POINTS)?;
    Ok(minus_one_curves_upto(r, 6))
}

/// Search for `(-1)`-classes with `0 <= a <= a_max`, entries in `[-1, a]`.
pub fn minus_one_curves_upto(r: usize, a_max: i64) -> Vec<PicardClass> {
    let mut out = Vec::new();
    let mut b = alloc::vec![0i64; r];
    for a in 0..=a_max {
        // sum b = 3a - 1, sum b^2 = a^2 + 1
        curve_dfs(a, 0, 3 * a - 1, a * a + 1, &mut b, &mut out);
    }
    out.sort();
    out
}

fn curve_dfs(a: i64, pos: usize, sum_left: i64, sq_left: i64, b: &mut Vec<i64>, out: &mut Vec<PicardClass>) {
    let slots = (b.len() - pos) as i64;
    if slots == 0 {
        if sum_left == 0 && sq_left == 0 {
            out.push(PicardClass { a, b: b.clone() });
        }
        return;
    }
    if sq_left < 0 || sum_left * sum_left > slots * sq_left || sum_left < -slots || sum_left > slots * a {
        return;
    }
    for v in -1..=a {
        if v * v > sq_left {
            continue;
        }
        b[pos] = v;
        curve_dfs(a, pos + 1, sum_left - v, sq_left - v * v, b, out);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EffectivityVerdict {
    pub effective: bool,
    /// `h^0(D)`; zero when not effective.
    pub h0: i64,
    /// `(-1)`-curves subtracted during the reduction, in order.
    pub trace: Vec<PicardClass>,
}

/// Decides effectivity by stripping `(-1)`-curves that meet `D` negatively.
pub fn decide_effective(d: &PicardClass) -> Result<EffectivityVerdict, Error> {
    trace_op(Op::DecideEffective);
    let r = d.r();
    check_range(r, EFFECTIVE_MIN, EFFECTIVE_MAX)?;
    let curves = minus_one_curves_upto(r, 3);
    let k = PicardClass::canonical(r);
    let mut cur = d.clone();
    let mut trace = Vec::new();
    loop {
        if cur.is_zero() {
            return Ok(EffectivityVerdict { effective: true, h0: 1, trace });
        }
        if cur.anticanonical_degree() <= 0 {
            return Ok(EffectivityVerdict { effective: false, h0: 0, trace });
        }
        // curves are sorted, so the first hit is the lexicographically smallest
        match curves.iter().find(|e| dot(&cur, e) < 0) {
            Some(e) => {
                cur = cur.sub(e)?;
                trace.push(e.clone());
            }
            None => {
                // nef: h^0 = chi = D(D-K)/2 + 1
                let h0 = (dot(&cur, &cur) - dot(&cur, &k)) / 2 + 1;
                return Ok(EffectivityVerdict { effective: true, h0, trace });
            }
        }
    }
}

pub fn is_nef(d: &PicardClass) -> Result<bool, Error> {
    trace_op(Op::IsNef);
    check_range(d.r(), EFFECTIVE_MIN, EFFECTIVE_MAX)?;
    Ok(minus_one_curves_upto(d.r(), 3).iter().all(|e| dot(d, e) >= 0))
}

/// Kleiman test against the `(-1)`-curves, which span the cone of curves
/// for `r <= 6`.
pub fn is_ample(d: &PicardClass) -> Result<bool, Error> {
    trace_op(Op::IsAmple);
    check_range(d.r(), EFFECTIVE_MIN, EFFECTIVE_MAX)?;
    Ok(minus_one_curves_upto(d.r(), 3).iter().all(|e| dot(d, e) > 0))
}

/// `h^0(Omega^1_{P^2}(t))` from the Euler sequence.
pub fn h0_omega_p2(t: i64) -> i64 {
    trace_op(Op::H0OmegaP2);
    if t <= 1 {
        return 0;
    }
    let c2 = |m: i64| m * (m - 1) / 2;
    3 * c2(t + 1) - c2(t + 2)
}

/// Sextics of genus 3 on the cubic surface: every solution class `X` must
/// have degree 6, `X^2 = 10`, genus 3, and `3K + 2X` not effective.
pub fn certify_632() -> Certificate {
    trace_op(Op::Certify632);
    let mut b = CertificateBuilder::new("632", false);
    let sols = solve_632num();
    b.check_eq("class count", 5, sols.len());
    let k = PicardClass::canonical(6);
    for s in &sols {
        let x = PicardClass::new(s.a, s.b.to_vec());
        let name = format!("{x}");
        b.check_eq(format!("{name} degree"), 6, x.anticanonical_degree());
        b.check_eq(format!("{name} self-intersection"), 10, self_int(&x));
        b.check_eq(format!("{name} genus"), rat(3, 1), pa(&x));
        let adj = match k.scale(3).add(&x.scale(2)) {
            Ok(c) => c,
            Err(e) => return Certificate::error("632", e),
        };
        match decide_effective(&adj) {
            Ok(v) => {
                b.check_eq(format!("{name} 3K+2X={adj} effective"), false, v.effective);
            }
            Err(e) => return Certificate::error("632", e),
        }
        b.witness(format!("T_X(2) Ulrich for {name}"), true);
    }
    b.finish()
}

/// The four polarizations `H = (a; c_i + 1)` of the quintic del Pezzo
/// candidates for `T_X(1)` Ulrich.
pub fn certify_k1_candidates(a_max: i64) -> Certificate {
    trace_op(Op::CertifyK1Candidates);
    let id = "k1-surface";
    let mut b = CertificateBuilder::new(id, false);
    let sols = match solve_conto(a_max) {
        Ok(s) => s,
        Err(e) => return Certificate::error(id, e),
    };
    let k = PicardClass::canonical(4);
    let mut got = BTreeSet::new();
    for s in &sols {
        let h = PicardClass::new(s.a, s.c.iter().map(|c| c + 1).collect());
        let name = format!("{h}");
        let h2 = self_int(&h);
        let hk = dot(&h, &k);
        b.check_eq(format!("{name} H^2+2HK"), 0, h2 + 2 * hk);
        b.check_true(format!("{name} normalized"), h.b.windows(2).all(|w| w[0] >= w[1]) && h.b[3] >= 1);
        b.check_true(format!("{name} a >= b1+b2+1"), h.a > h.b[0] + h.b[1]);
        b.witness(format!("{name} degree"), h2);
        got.insert(h);
    }
    let want: BTreeSet<PicardClass> = [(6, [3, 1, 1, 1]), (6, [2, 2, 2, 2]), (7, [4, 2, 2, 1]), (9, [4, 4, 4, 3])]
        .into_iter()
        .map(|(a, bs)| PicardClass::new(a, bs.to_vec()))
        .collect();
    let render = |s: &BTreeSet<PicardClass>| s.iter().map(|c| format!("{c}")).collect::<Vec<_>>().join(" ");
    b.check("candidate set", render(&want), render(&got), want == got);
    let anti2 = k.scale(-2);
    b.check_true("(6;2,2,2,2) = -2K", got.contains(&anti2) && anti2 == PicardClass::new(6, alloc::vec![2; 4]));
    let extra = h0_omega_p2(3) - 6;
    b.check_eq("h0(Omega(3)) - 6", 2, extra);
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::Status;

    fn c(a: i64, b: &[i64]) -> PicardClass {
        PicardClass::new(a, b.to_vec())
    }

    #[test]
    fn intersection_examples() {
        let x = c(4, &[1, 1, 1, 1, 1, 1]);
        assert_eq!(self_int(&x), 10);
        assert_eq!(intersect(&PicardClass::canonical(6).scale(-1), &x).unwrap(), 6);
        assert_eq!(pa(&PicardClass::exceptional(6, 2)), rat(0, 1));
        assert_eq!(pa(&c(7, &[3, 3, 3, 3, 3, 3])), rat(-3, 1));
        assert!(matches!(intersect(&x, &PicardClass::line(4)), Err(Error::RankMismatch { .. })));
        assert_eq!(self_int(&PicardClass::canonical(5)), 4);
    }

    #[test]
    fn minus_one_counts() {
        for (r, n) in [(2, 3), (3, 6), (4, 10), (5, 16), (6, 27), (7, 56), (8, 240)] {
            let curves = minus_one_curves(r).unwrap();
            assert_eq!(curves.len(), n, "r = {r}");
            for e in &curves {
                assert_eq!(self_int(e), -1);
                assert_eq!(e.anticanonical_degree(), 1);
                assert_eq!(pa(e), rat(0, 1));
            }
        }
        assert!(minus_one_curves(1).is_err());
        assert!(minus_one_curves(9).is_err());
        // effectivity uses a <= 3, enough for r <= 6
        assert_eq!(minus_one_curves_upto(6, 3), minus_one_curves(6).unwrap());
    }

    #[test]
    fn effectivity_examples() {
        let v = decide_effective(&c(-1, &[1, 1, 1, 1, 1, 1])).unwrap();
        assert!(!v.effective);
        assert_eq!(v.h0, 0);
        let v = decide_effective(&c(7, &[3, 3, 3, 3, 3, 3])).unwrap();
        assert!(!v.effective);
        let v = decide_effective(&c(1, &[1, 1, 0, 0, 0, 0])).unwrap();
        assert!(v.effective);
        assert_eq!(v.h0, 1);
        assert_eq!(v.trace, [c(1, &[1, 1, 0, 0, 0, 0])]);
        assert!(decide_effective(&c(1, &[0; 7])).is_err());
        assert_eq!(decide_effective(&PicardClass::zero(3)).unwrap().h0, 1);
        // 3K + 2X for X = (5;2,2,2,1,1,1)
        assert!(!decide_effective(&c(1, &[-1, -1, -1, 1, 1, 1])).unwrap().effective);
        // h0 of -K on the cubic surface is 4
        assert_eq!(decide_effective(&PicardClass::canonical(6).scale(-1)).unwrap().h0, 4);
    }

    #[test]
    fn positivity_examples() {
        assert!(is_ample(&PicardClass::canonical(6).scale(-1)).unwrap());
        assert!(!is_nef(&PicardClass::exceptional(6, 0)).unwrap());
        let h = c(6, &[2, 2, 2, 2]);
        assert!(is_ample(&h).unwrap());
        assert_eq!(minus_one_curves(4).unwrap().iter().map(|e| dot(&h, e)).min(), Some(2));
        assert!(is_nef(&PicardClass::line(4)).unwrap());
        assert!(!is_ample(&PicardClass::line(4)).unwrap());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(h0_omega_p2(3), 8);
        assert_eq!(h0_omega_p2(1), 0);
        assert_eq!(h0_omega_p2(0), 0);
        assert_eq!(h0_omega_p2(2), 3);
        assert_eq!(h0_omega_p2(-4), 0);
    }

    #[test]
    fn certificates() {
        let c632 = certify_632();
        assert_eq!(c632.status, Status::Verified, "{c632:?}");
        let ck1 = certify_k1_candidates(64);
        assert_eq!(ck1.status, Status::Verified, "{ck1:?}");
        assert_eq!(self_int(&c(6, &[3, 2, 2, 2, 2, 1])), 10);
        let h = c(9, &[4, 4, 4, 3]);
        assert_eq!((self_int(&h), dot(&h, &PicardClass::canonical(4))), (24, -12));
    }
}
