//! Closed-form contradictions for fourfolds where `K_X + 2H` is ample and
//! gives a quadric fibration over a curve or a linear plane bundle over a
//! surface, both with `T_X(2)` Ulrich.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{Signed, Zero};

use super::kh_from_k;
use crate::certificate::{Certificate, CertificateBuilder};
use crate::error::Error;
use crate::qexact::{int, rat, solve_linear, Affine, LinearSolution, QMatrix, Rational};
use crate::trace::{trace_op, Op};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContradictionKind {
    Sign,
    Integrality,
    Divisibility,
    IntervalEmpty,
}

impl ContradictionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ContradictionKind::Sign => "sign",
            ContradictionKind::Integrality => "integrality",
            ContradictionKind::Divisibility => "divisibility",
            ContradictionKind::IntervalEmpty => "interval-empty",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contradiction {
    pub kind: ContradictionKind,
    pub statement: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationCertificate {
    pub id: &'static str,
    pub identities: Vec<Identity>,
    pub contradiction: Contradiction,
    pub witnesses: Vec<(String, Rational)>,
}

impl FibrationCertificate {
    pub fn identity(&self, name: &str) -> Option<&str> {
        self.identities.iter().find(|i| i.name == name).map(|i| i.value.as_str())
    }

    pub fn witness(&self, name: &str) -> Option<&Rational> {
        self.witnesses.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    /// Certificate whose checks compare the identities against `expected`
    /// (name, rendered value) pairs.
    pub fn to_certificate(&self, expected: &[(&str, &str)]) -> Certificate {
        let mut b = CertificateBuilder::new(self.id, true);
        for (name, want) in expected {
            let got = self.identity(name).unwrap_or("<missing>");
            b.check(*name, (*want).into(), got.into(), got == *want);
        }
        b.witness("contradiction", self.contradiction.kind.as_str());
        b.witness("statement", &self.contradiction.statement);
        for (name, v) in &self.witnesses {
            b.witness(name.as_str(), v);
        }
        b.finish()
    }
}

fn push(ids: &mut Vec<Identity>, name: &str, value: String) {
    ids.push(Identity { name: name.into(), value });
}

/// Quadric fibration case.
///
/// Unknowns are the monomials `x_j = K^{4-j} H^j`; the five intersection
/// equations `K^i (K+2H)^{4-i}` are stated in terms of `e`, `b`, with `d`
/// carried as a third symbol.
pub fn noqf4_certify() -> Result<FibrationCertificate, Error> {
    trace_op(Op::Noqf4Certify);
    const E: usize = 0;
    const B: usize = 1;
    const D: usize = 2;
    let names = ["e", "b", "d"];
    let sym = |i| Affine::var(3, i);
    let cst = |c: i64| Affine::constant(3, int(c));

    // columns x_0..x_4 then e, b (moved to the left-hand side)
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..=4u32 {
        let mut row: Vec<Rational> = (0..5).map(|_| Rational::zero()).collect();
        for j in 0..=(4 - i) {
            row[j as usize] = int(binomial(4 - i as i64, j as i64) * 2i64.pow(j));
        }
        let value = if i == 0 {
            &sym(E).scale(&int(2)) - &sym(B)
        } else {
            let p = (-3i64).pow(i);
            let q = (-3i64).pow(i - 1);
            let ii = i as i64;
            let inner = &(&sym(E).scale(&int(2 * ii)) + &sym(B).scale(&int(3 - 2 * ii))) - &cst(4 * ii);
            &sym(E).scale(&int(2 * p)) + &inner.scale(&int(q))
        };
        row.push(-value.coeff(E).clone());
        row.push(-value.coeff(B).clone());
        rows.push(row);
        rhs.push(value.constant_term().clone());
    }
    let m = QMatrix::from_rows(rows)?;
    let LinearSolution::Parametric(sol) = solve_linear(&m, &rhs)? else {
        return Err(Error::Inconsistent);
    };
    // free symbols are (e, b); lift into (e, b, d)
    let lift = |a: &Affine| {
        Affine::from_parts(
            alloc::vec![a.coeff(0).clone(), a.coeff(1).clone(), Rational::zero()],
            a.constant_term().clone(),
        )
    };
    let kh3 = lift(&sol.values[3]);
    let h4 = lift(&sol.values[4]);

    let mut ids = Vec::new();
    push(&mut ids, "KH^3", format!("{}", kh3.display_with(&names)));
    push(&mut ids, "H^4", format!("{}", h4.display_with(&names)));

    // KH^3 = -2d/3 at n = 4, k = 2, and b from d = H^4
    let kh_rel = &kh3 - &sym(D).scale(&kh_from_k(4, 1, 2));
    let b_coeff = h4.coeff(B).clone();
    let b_of_d = (&sym(D)
        - &Affine::from_parts(
            alloc::vec![h4.coeff(E).clone(), Rational::zero(), Rational::zero()],
            h4.constant_term().clone(),
        ))
        .scale(&b_coeff.recip());
    let relation = kh_rel.substitute(B, &b_of_d);
    // normalize so that d has coefficient 13 when the relation is 13d = 48(e+2)
    let normalized = relation.scale(&(int(13) / relation.coeff(D)));
    push(&mut ids, "relation", format!("{} = 0", normalized.display_with(&names)));

    // e = sum a_i with each a_i <= 1 gives e <= 5; 13d = ce(e + shift) with d > 0
    let e_max = 5i64;
    let ce = -normalized.coeff(E).clone();
    let c0 = -normalized.constant_term().clone();
    let shift = &c0 / &ce;
    let modulus = BigInt::from(13) / BigInt::from(13).gcd(ce.numer());
    push(&mut ids, "divisibility", format!("{modulus} | e + {shift}"));
    let hi = (int(e_max) + &shift).floor().to_integer();
    let mut multiples = Vec::new();
    let mut t = BigInt::from(1);
    while t <= hi {
        if t.is_multiple_of(&modulus) {
            multiples.push(t.clone());
        }
        t += 1;
    }
    push(&mut ids, "window", format!("1 <= e + {shift} <= {hi}"));

    let at_b0_d = h4.eval(&[int(0), int(0), int(0)]);
    let at_b0_e = (int(13) * &at_b0_d - &c0) / &ce;
    let witnesses = alloc::vec![
        ("d at b=0".into(), at_b0_d),
        ("e at b=0".into(), at_b0_e),
        ("KH^3 at e=5,b=1".into(), kh3.eval(&[int(5), int(1), int(0)])),
        ("multiples of 13 in window".into(), int(multiples.len() as i64)),
    ];
    let statement = if multiples.is_empty() {
        format!("no integer e with 1 <= e + {shift} <= {hi} has 13 | e + {shift}")
    } else {
        format!("window contains multiples of 13: {multiples:?}")
    };
    let kind = if multiples.is_empty() { ContradictionKind::IntervalEmpty } else { ContradictionKind::Divisibility };
    Ok(FibrationCertificate {
        id: "noqf4",
        identities: ids,
        contradiction: Contradiction { kind, statement },
        witnesses,
    })
}

/// Linear plane bundle case.
pub fn nosc4_certify() -> Result<FibrationCertificate, Error> {
    trace_op(Op::Nosc4Certify);
    // columns: K_B^2, K_B c1, c1^2, c2, chi(O_S), d
    let q = |n: i64, dd: i64| rat(n, dd);
    let z = || int(0);
    let rows = alloc::vec![
        alloc::vec![int(-6), int(4), int(-6), int(16), z(), int(1)],
        alloc::vec![z(), int(1), int(-1), int(2), int(2), z()],
        alloc::vec![int(1), z(), int(1), int(-3), z(), z()],
        alloc::vec![int(3), z(), int(1), int(-2), z(), z()],
        alloc::vec![q(9, 4), int(-1), q(7, 4), int(-5), int(-1), q(1, 6)],
    ];
    let rhs = alloc::vec![int(0), int(8), int(1), int(30), int(-4)];
    let m = QMatrix::from_rows(rows)?;
    let LinearSolution::Parametric(sol) = solve_linear(&m, &rhs)? else {
        return Err(Error::Inconsistent);
    };
    if sol.free != [5] {
        return Err(Error::Inconsistent);
    }
    let names = ["d"];
    let labels = ["K_B^2", "K_B c1", "c1^2", "c2", "chi(O_S)"];
    let mut ids = Vec::new();
    for (label, v) in labels.iter().zip(&sol.values) {
        push(&mut ids, label, format!("{}", v.display_with(&names)));
    }
    let kb2 = &sol.values[0];
    let kbc1 = &sol.values[1];

    // slopes against H: mu(T_X) = -KH^3/4, mu(pi^* T_B) = -K_B c1 + 3 K_B^2
    let kh3 = Affine::from_parts(alloc::vec![kh_from_k(4, 1, 2)], int(0));
    let mu_tx = (-&kh3).scale(&rat(1, 4));
    let mu_tb = &kb2.scale(&int(3)) - kbc1;
    push(&mut ids, "KH^3", format!("{}", kh3.display_with(&names)));
    push(&mut ids, "mu(T_X)", format!("{}", mu_tx.display_with(&names)));
    push(&mut ids, "mu(pi^* T_B)", format!("{}", mu_tb.display_with(&names)));

    // integrality of the solution: every coefficient of d must land in Z
    let step =
        sol.values[..5].iter().map(|v| v.coeff(0).denom().clone()).fold(BigInt::from(1), |acc, den| acc.lcm(&den));
    let d_min = step.clone();
    // mu_tx <= mu_tb  <=>  (mu_tb - mu_tx) >= 0, affine in d with negative slope
    let gap = &mu_tb - &mu_tx;
    let d_max = -gap.constant_term() / gap.coeff(0);
    push(&mut ids, "integrality", format!("{step} | d"));
    push(&mut ids, "semistability", format!("d <= {d_max}"));

    let disjoint = gap.coeff(0).is_negative() && int(0) < d_max && d_max < Rational::from_integer(d_min.clone());
    let witnesses = alloc::vec![
        ("d_min".into(), Rational::from_integer(d_min.clone())),
        ("d_max".into(), d_max.clone()),
        ("K_B^2 at d=48".into(), kb2.eval(&[int(48)])),
        ("KH^3 at d=48".into(), kh3.eval(&[int(48)])),
    ];
    let statement = format!("integrality forces d >= {d_min}, semistability forces d <= {d_max}");
    let kind = if disjoint { ContradictionKind::IntervalEmpty } else { ContradictionKind::Integrality };
    Ok(FibrationCertificate {
        id: "nosc4",
        identities: ids,
        contradiction: Contradiction { kind, statement },
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn noqf4_identities() {
        let c = noqf4_certify().unwrap();
        assert_eq!(c.identity("KH^3"), Some("4*e - 28*b - 104"));
        assert_eq!(c.identity("H^4"), Some("16*b + 64"));
        assert_eq!(c.identity("relation"), Some("-48*e + 13*d - 96 = 0"));
        assert_eq!(c.witness("d at b=0"), Some(&int(64)));
        assert_eq!(c.witness("e at b=0"), Some(&rat(46, 3)));
        assert_eq!(c.witness("KH^3 at e=5,b=1"), Some(&int(-112)));
        assert_eq!(c.contradiction.kind, ContradictionKind::IntervalEmpty);
        assert_eq!(c, noqf4_certify().unwrap());
    }

    #[test]
    fn noqf4_monomials_match_hand_expansion() {
        // M_i = K^i (K+2H)^{4-i} recomputed from the solved monomials at a sample point
        let (e, b) = (int(3), int(-2));
        let kh3 = int(4) * &e - int(28) * &b - int(104);
        let h4 = int(16) * &b + int(64);
        let c = noqf4_certify().unwrap();
        assert_eq!(c.identity("KH^3").unwrap(), "4*e - 28*b - 104");
        // H = (L - K)/2 with L = K + 2H: H^4 = (M0 - 4M1 + 6M2 - 4M3 + M4)/16
        let m = |i: i64| -> Rational {
            if i == 0 {
                int(2) * &e - &b
            } else {
                let p = (-3i64).pow(i as u32);
                let q = (-3i64).pow(i as u32 - 1);
                int(p * 2) * &e + int(q) * (int(-4 * i) + int(2 * i) * &e + int(3 - 2 * i) * &b)
            }
        };
        assert_eq!((m(0) - int(4) * m(1) + int(6) * m(2) - int(4) * m(3) + m(4)) / int(16), h4);
        assert_eq!((m(1) - int(3) * m(2) + int(3) * m(3) - m(4)) / int(8), kh3);
    }

    #[test]
    fn nosc4_identities() {
        let c = nosc4_certify().unwrap();
        assert_eq!(c.identity("K_B^2"), Some("-7/48*d + 7"));
        assert_eq!(c.identity("K_B c1"), Some("-5/48*d + 9"));
        assert_eq!(c.identity("mu(T_X)"), Some("1/6*d"));
        assert_eq!(c.identity("mu(pi^* T_B)"), Some("-1/3*d + 12"));
        assert_eq!(c.witness("K_B^2 at d=48"), Some(&int(0)));
        assert_eq!(c.witness("KH^3 at d=48"), Some(&int(-32)));
        assert_eq!(c.witness("d_min"), Some(&int(48)));
        assert_eq!(c.witness("d_max"), Some(&int(24)));
        assert_eq!(c.contradiction.kind, ContradictionKind::IntervalEmpty);
        assert_eq!(c, nosc4_certify().unwrap());
    }

    #[test]
    fn nosc4_solution_satisfies_system_at_sample_d() {
        // independent substitution into the five displayed identities
        let d = rat(7, 5);
        let kb2 = rat(-7, 48) * &d + int(7);
        let kbc = rat(-5, 48) * &d + int(9);
        let c1 = rat(49, 48) * &d + int(39);
        let c2 = rat(7, 24) * &d + int(15);
        let chi = rat(13, 48) * &d + int(4);
        assert_eq!(&d - int(6) * &c1 + int(16) * &c2 - int(6) * &kb2 + int(4) * &kbc, int(0));
        assert_eq!(&kbc - int(8) + int(2) * &chi - &c1 + int(2) * &c2, int(0));
        assert_eq!(&kb2 - int(1) + &c1 - int(3) * &c2, int(0));
        assert_eq!(int(3) * &kb2 + &c1 - int(2) * &c2 - int(30), int(0));
        assert_eq!(int(4) - &kbc + rat(9, 4) * &kb2 + rat(7, 4) * &c1 - int(5) * &c2 - &chi + rat(1, 6) * &d, int(0));
        let c = nosc4_certify().unwrap();
        assert_eq!(c.identity("c1^2"), Some("49/48*d + 39"));
        assert_eq!(c.identity("c2"), Some("7/24*d + 15"));
        assert_eq!(c.identity("chi(O_S)"), Some("13/48*d + 4"));
    }
}
