//! Curves: line-bundle cohomology on `P^1 x P^1` and `E x P^1`, curves on a
//! smooth quadric, and the genus and degree thresholds for `T_X(k)` Ulrich.

use alloc::format;

use crate::certificate::{Certificate, CertificateBuilder};
use crate::error::{invalid, Error};
use crate::qexact::{int, isqrt_exact, rat, Rational};
use crate::trace::{trace_op, Op};
use crate::ulrich::degree_from_genus;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    RationalLine,
    Elliptic,
}

/// A line bundle on one factor of a product surface, known by its degree.
///
/// On an elliptic curve a degree-zero bundle is either trivial or not;
/// nothing finer is tracked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorBundle {
    pub kind: FactorKind,
    pub degree: i64,
    pub nontrivial: bool,
}

impl FactorBundle {
    pub fn line(degree: i64) -> Self {
        FactorBundle { kind: FactorKind::RationalLine, degree, nontrivial: false }
    }

    pub fn elliptic(degree: i64, nontrivial: bool) -> Self {
        FactorBundle { kind: FactorKind::Elliptic, degree, nontrivial: degree == 0 && nontrivial }
    }

    /// `(h^0, h^1)`.
    pub fn cohomology(&self) -> (i64, i64) {
        let a = self.degree;
        match self.kind {
            FactorKind::RationalLine => ((a + 1).max(0), (-a - 1).max(0)),
            FactorKind::Elliptic if a > 0 => (a, 0),
            FactorKind::Elliptic if a < 0 => (0, -a),
            FactorKind::Elliptic if self.nontrivial => (0, 0),
            FactorKind::Elliptic => (1, 1),
        }
    }
}

/// `h^i` of the exterior product, by the Kunneth formula.
pub fn kunneth_h(f1: &FactorBundle, f2: &FactorBundle) -> [i64; 3] {
    trace_op(Op::KunnethH);
    let (a0, a1) = f1.cohomology();
    let (b0, b1) = f2.cohomology();
    [a0 * b0, a0 * b1 + a1 * b0, a1 * b1]
}

/// `O_Q(x, y)` on the smooth quadric.
pub fn quadric_h(x: i64, y: i64) -> [i64; 3] {
    kunneth_h(&FactorBundle::line(x), &FactorBundle::line(y))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadricCurve {
    pub a: i64,
    pub b: i64,
}

impl QuadricCurve {
    pub fn new(a: i64, b: i64) -> Result<Self, Error> {
        if a < 1 || b < 1 {
            return Err(invalid("curve type must be positive"));
        }
        Ok(QuadricCurve { a, b })
    }

    pub fn degree(&self) -> i64 {
        self.a + self.b
    }

    pub fn genus(&self) -> i64 {
        (self.a - 1) * (self.b - 1)
    }

    /// `T_X(k-1) = O_Q(k+1-a, k+1-b)|_X`.
    pub fn twisted_tangent(&self, k: i64) -> (i64, i64) {
        (k + 1 - self.a, k + 1 - self.b)
    }

    /// Kernel of restriction to `X`: `O_Q(k+1-2a, k+1-2b)`.
    pub fn twisted_kernel(&self, k: i64) -> (i64, i64) {
        (k + 1 - 2 * self.a, k + 1 - 2 * self.b)
    }
}

/// `(sqrt(8g+1) - 1)/2` when `8g + 1` is a perfect square.
pub fn genus_twist_bound_exact(g: i64) -> Option<i64> {
    let x = u64::try_from(8 * g + 1).ok()?;
    isqrt_exact(x).map(|s| (s as i64 - 1) / 2)
}

/// Type `(c+1, 2c+2)` curves on the quadric with `T_X(2c)` Ulrich.
pub fn certify_quadric_ulrich(c: i64) -> Result<Certificate, Error> {
    trace_op(Op::CertifyQuadricUlrich);
    if c < 1 {
        return Err(invalid("c must be at least 1"));
    }
    let curve = QuadricCurve::new(c + 1, 2 * c + 2)?;
    let k = 2 * c;
    let (g, d) = (curve.genus(), curve.degree());
    let mut b = CertificateBuilder::new("quadric-curves", false);
    b.check_eq(format!("c={c} genus"), c * (2 * c + 1), g);
    b.check_eq(format!("c={c} degree"), 3 * (c + 1), d);
    let dg = degree_from_genus(1, g, k);
    b.check(format!("c={c} degree from genus"), format!("{d}"), format!("{dg:?}"), dg == Some(int(d)));
    let root = isqrt_exact((8 * g + 1) as u64);
    b.check(
        format!("c={c} 8g+1 root"),
        format!("{}", 4 * c + 1),
        format!("{root:?}"),
        root == Some((4 * c + 1) as u64),
    );
    let kb = genus_twist_bound_exact(g);
    b.check(format!("c={c} bound equality"), format!("{k}"), format!("{kb:?}"), kb == Some(k));
    b.check_eq(format!("c={c} type from k"), int(curve.a), quadric_type_from_k(k, curve.b)?);
    b.check_eq(format!("c={c} genus at threshold"), int(g), thresholds(d).bd_curve);
    let tw = curve.twisted_tangent(k);
    let ker = curve.twisted_kernel(k);
    b.check(format!("c={c} T_X(k-1) on Q"), format!("{:?}", (c, -1)), format!("{tw:?}"), tw == (c, -1));
    b.check(
        format!("c={c} kernel on Q"),
        format!("{:?}", (-1, -2 * c - 3)),
        format!("{ker:?}"),
        ker == (-1, -2 * c - 3),
    );
    for (label, (x, y)) in [("O_Q(c,-1)", tw), ("O_Q(-1,-2c-3)", ker)] {
        let h = quadric_h(x, y);
        for (i, hi) in h.iter().enumerate() {
            b.check_eq(format!("c={c} h{i} {label}"), 0, *hi);
        }
    }
    b.witness(format!("c={c} T_X({k}) Ulrich"), true);
    Ok(b.finish())
}

/// A class `c0 C_0 + pi^*(dm D + mm M)` on `E x P^1`, with `D` of degree 3
/// and `M` of degree 0, not 2-torsion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EllipticProductClass {
    pub c0: i64,
    pub d_mult: i64,
    pub m_mult: i64,
}

impl EllipticProductClass {
    fn minus(self, o: Self, p: i64) -> Self {
        EllipticProductClass {
            c0: self.c0 - p * o.c0,
            d_mult: self.d_mult - p * o.d_mult,
            m_mult: self.m_mult - p * o.m_mult,
        }
    }

    /// Factor bundles `(P^1 part, E part)`. Degree-zero parts that are a
    /// multiple of `M` other than `0, +-1, +-2` are not decided.
    pub fn factors(self) -> Result<(FactorBundle, FactorBundle), Error> {
        let deg = 3 * self.d_mult;
        if deg == 0 && self.m_mult.abs() > 2 {
            return Err(invalid("torsion order of the degree-zero part is not modeled"));
        }
        Ok((FactorBundle::line(self.c0), FactorBundle::elliptic(deg, self.m_mult != 0)))
    }
}

/// Odd `k >= 3` on a curve `X` in `|H_1|` on `E x P^1`.
pub fn certify_elliptic_product(k: i64) -> Result<Certificate, Error> {
    trace_op(Op::CertifyEllipticProduct);
    if k < 3 || k % 2 == 0 {
        return Err(invalid("k must be odd and at least 3"));
    }
    let half = (k - 1) / 2;
    // L = -K_S + (k-1)H with K_S = -2C_0, H = C_0 + D
    let l = EllipticProductClass { c0: 2 + (k - 1), d_mult: k - 1, m_mult: 0 };
    // H_1 = (k+2)C_0 + B, B = (k-1)/2 D + M
    let h1 = EllipticProductClass { c0: k + 2, d_mult: half, m_mult: 1 };
    let mut b = CertificateBuilder::new("elliptic-product", false);
    for p in 1..=2 {
        let cls = l.minus(h1, p);
        let (f1, f2) = cls.factors()?;
        b.witness(format!("k={k} L-{p}H1"), format!("{}C0 + {}D + {}M", cls.c0, cls.d_mult, cls.m_mult));
        let h = kunneth_h(&f1, &f2);
        for (i, hi) in h.iter().enumerate() {
            b.check_eq(format!("k={k} h{i}(L-{p}H1)"), 0, *hi);
        }
    }
    b.check_eq(format!("k={k} L-H1 P1 degree"), -1, l.minus(h1, 1).c0);
    b.check_eq(format!("k={k} L-2H1 P1 degree"), -(k + 3), l.minus(h1, 2).c0);
    b.witness(format!("k={k} T_X({k}) Ulrich"), true);
    Ok(b.finish())
}

/// `a = b(k+2)/(3b-k-2)` for a type `(a, b)` curve with `T_X(k)` Ulrich.
pub fn quadric_type_from_k(k: i64, b: i64) -> Result<Rational, Error> {
    trace_op(Op::QuadricTypeFromK);
    let den = 3 * b - k - 2;
    if den == 0 {
        return Err(invalid("pole at 3b = k + 2"));
    }
    Ok(rat(b * (k + 2), den))
}

/// `rho(g, r, d) = g - (r+1)(g - d + r)`.
pub fn brill_noether_rho(g: i64, r: i64, d: i64) -> i64 {
    trace_op(Op::BrillNoetherRho);
    g - (r + 1) * (g - d + r)
}

/// Largest `k` allowed by `rho(g, 3, d) >= 0` with `(k-1)d = 3(g-1)`.
pub fn general_moduli_max_k(g: i64) -> i64 {
    // 3(g-1)/(k-1) >= (3g+12)/4  <=>  k - 1 <= 12(g-1)/(3g+12)
    (12 * (g - 1)).div_euclid(3 * g + 12) + 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thresholds {
    /// Castelnuovo: `g <= d(d-4)/4 + 1` for space curves.
    pub castelnuovo_p3: Rational,
    /// Genus above which a space curve of degree `d` lies on a quadric.
    pub quadric_forcing: Rational,
    /// `2d^2/9 - d + 1`.
    pub bd_curve: Rational,
    /// `(9, 10)` is excluded from the quadric forcing.
    pub exception: Option<(i64, i64)>,
}

pub fn thresholds(d: i64) -> Thresholds {
    trace_op(Op::Thresholds);
    let tail = if d % 3 == 0 { int(1) } else { rat(1, 3) };
    Thresholds {
        castelnuovo_p3: rat(d * (d - 4), 4) + int(1),
        quadric_forcing: rat(d * (d - 3), 6) + tail,
        bd_curve: rat(2 * d * d, 9) - int(d) + int(1),
        exception: (d == 9).then_some((9, 10)),
    }
}

/// Whether some integer `k` solves `4(k-1) = 6b - 9 - 3/(2b+1)`, the
/// degree relation for a curve on a quadric cone with `d = 2b+1`,
/// `g = b^2 - b`.
pub fn cone_case_check(b: i64) -> bool {
    trace_op(Op::ConeCaseCheck);
    let rhs = int(6 * b - 9) - rat(3, 2 * b + 1);
    let k_minus_1 = rhs / int(4);
    k_minus_1.is_integer()
}

/// `T_X(2)` Ulrich occurs on a curve of genus `g` iff `g >= 3`.
pub fn existence_k2(g: i64) -> bool {
    trace_op(Op::ExistenceK2);
    g >= 3
}

/// `T_X(3)` Ulrich occurs on any curve of odd genus `g >= 9`, with
/// `d = 3(g-1)/2`.
pub fn existence_k3(g: i64) -> bool {
    trace_op(Op::ExistenceK3);
    g >= 9 && (3 * (g - 1)) % 2 == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::Status;

    #[test]
    fn kunneth_examples() {
        for c in 0..10 {
            assert_eq!(quadric_h(c, -1), [0, 0, 0]);
        }
        assert_eq!(quadric_h(1, 1), [4, 0, 0]);
        let zero = FactorBundle::elliptic(0, true);
        for a in -5..5 {
            assert_eq!(kunneth_h(&FactorBundle::line(a), &zero), [0, 0, 0]);
        }
        assert_eq!(FactorBundle::elliptic(0, false).cohomology(), (1, 1));
        assert_eq!(FactorBundle::elliptic(-3, true).cohomology(), (0, 3));
        assert!(!FactorBundle::elliptic(2, true).nontrivial);
    }

    #[test]
    fn quadric_certificate() {
        let c = certify_quadric_ulrich(1).unwrap();
        assert_eq!(c.status, Status::Verified, "{c:?}");
        let q = QuadricCurve::new(2, 4).unwrap();
        assert_eq!((q.degree(), q.genus()), (6, 3));
        assert_eq!(genus_twist_bound_exact(3), Some(2));
        let c = certify_quadric_ulrich(3).unwrap();
        assert_eq!(c.status, Status::Verified);
        assert_eq!(c.checks.iter().filter(|ch| ch.name.starts_with("c=3 h")).count(), 6);
        assert!(certify_quadric_ulrich(0).is_err());
    }

    #[test]
    fn elliptic_certificate() {
        for k in (3..=21).step_by(2) {
            assert_eq!(certify_elliptic_product(k).unwrap().status, Status::Verified);
        }
        assert!(certify_elliptic_product(4).is_err());
        assert!(certify_elliptic_product(1).is_err());
        let bad = EllipticProductClass { c0: 0, d_mult: 0, m_mult: 3 };
        assert!(bad.factors().is_err());
    }

    #[test]
    fn quadric_type_examples() {
        assert_eq!(quadric_type_from_k(2, 4).unwrap(), int(2));
        for c in 1..=50 {
            assert_eq!(quadric_type_from_k(2 * c, 2 * c + 2).unwrap(), int(c + 1));
        }
        assert_eq!(quadric_type_from_k(6, 8).unwrap(), int(4));
        assert!(quadric_type_from_k(1, 1).is_err());
        // b >= k+2 iff a <= k/2 + 1, on the branch 3b > k + 2
        for k in 2..20 {
            for b in (k + 2) / 3 + 1..60 {
                let a = quadric_type_from_k(k, b).unwrap();
                assert_eq!(b >= k + 2, a <= rat(k, 2) + int(1), "k={k} b={b}");
            }
        }
    }

    #[test]
    fn brill_noether_examples() {
        assert_eq!(brill_noether_rho(3, 3, 6), 3);
        for g in 0..60 {
            for d in 0..80 {
                assert_eq!(brill_noether_rho(g, 3, d) >= 0, 4 * d >= 3 * g + 12);
            }
        }
        for r in 0..6 {
            for d in r..20 {
                assert!(brill_noether_rho(0, r, d) >= 0);
            }
        }
        for g in 2..2000 {
            assert!(general_moduli_max_k(g) <= 4);
        }
        assert_eq!(general_moduli_max_k(1000), 4);
    }

    #[test]
    fn threshold_examples() {
        let t = thresholds(6);
        assert_eq!(t.bd_curve, int(3));
        assert_eq!(thresholds(9).exception, Some((9, 10)));
        assert_eq!(thresholds(8).exception, None);
        assert_eq!(thresholds(8).castelnuovo_p3, int(9));
        assert_eq!(thresholds(9).quadric_forcing, int(10));
        assert_eq!(thresholds(7).quadric_forcing, rat(28, 6) + rat(1, 3));
    }

    #[test]
    fn cone_examples() {
        assert!(cone_case_check(1));
        assert!(!cone_case_check(2));
        assert!(!cone_case_check(10));
        for b in 2..500 {
            assert!(!cone_case_check(b));
        }
    }

    #[test]
    fn existence_examples() {
        assert!(!existence_k2(2));
        assert!(existence_k2(3));
        assert!(existence_k3(9));
        assert_eq!(degree_from_genus(1, 9, 3), Some(int(12)));
        assert!(!existence_k3(8));
        assert!(!existence_k3(7));
        for g in 2..100 {
            let d = degree_from_genus(1, g, 2).unwrap();
            assert_eq!(d, int(3 * (g - 1)));
            // very ample by degree alone iff g >= 4; g = 3 is decided separately
            assert_eq!(d >= int(2 * g + 1), g >= 4);
            if g >= 4 {
                assert!(existence_k2(g));
            }
        }
    }

    #[test]
    fn serre_duality_and_euler_on_quadric() {
        for x in -10..=10 {
            for y in -10..=10 {
                let h = quadric_h(x, y);
                let dual = quadric_h(-2 - x, -2 - y);
                assert_eq!(h, [dual[2], dual[1], dual[0]]);
                assert_eq!(h[0] - h[1] + h[2], (x + 1) * (y + 1));
            }
        }
    }
}
