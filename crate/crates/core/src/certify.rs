//! The certificate catalogue: one named, replayable certificate per result.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Signed;

use crate::certificate::{Certificate, CertificateBuilder};
use crate::curves::{
    brill_noether_rho, certify_elliptic_product, certify_quadric_ulrich, cone_case_check, existence_k2, existence_k3,
    general_moduli_max_k, thresholds,
};
use crate::diophantine::{feasible_params, solve_632num, solve_conto, DEFAULT_A_MAX};
use crate::error::Error;
use crate::hilbert::{proportional_multiple_bound, solve_case, CaseId};
use crate::picard::{
    certify_632, certify_k1_candidates, decide_effective, intersect, is_ample, is_nef, minus_one_curves, PicardClass,
};
use crate::qexact::{int, poly_eval, rat, QPoly, Rational};
use crate::ulrich::fibration::{noqf4_certify, nosc4_certify};
use crate::ulrich::{
    bigbound_k, bou_max_k, bou_quadratic, c2_identity_check, coh_k_bound, coh_vanishing_twist, degree_from_genus,
    hypersurface_exclude, k_from_intersections, proportional_case, surface_chi_window, surface_conditions,
    tangent_twist_c2, tangent_twist_first_chern, ulrich_chern, ulrich_euler, SurfaceInputs, VarietyParams,
};

/// Every certificate id with a one-line description, in catalogue order.
pub const IDS: [(&str, &str); 14] = [
    ("conto", "sums of four squares for quintic del Pezzo polarizations"),
    ("632num", "classes of degree 6 and genus 3 on the cubic surface"),
    ("632", "T_X(2) Ulrich for every sextic of genus 3 on the cubic surface"),
    ("k1-surface", "candidate polarizations of the quintic del Pezzo with T_X(1) Ulrich"),
    ("hilbert-3d", "Hilbert polynomial contradiction, 8-folds with k = 4"),
    ("hilbert-4d", "Hilbert polynomial contradiction, 10-folds with k = 4"),
    ("hilbert-4e", "Hilbert polynomial contradiction, 10-folds with k = 5"),
    ("noqf4", "no quadric fibration fourfold with T_X(2) Ulrich"),
    ("nosc4", "no linear plane bundle fourfold with T_X(2) Ulrich"),
    ("bound", "k <= n + 1 for n <= 12 and the auxiliary twist bounds"),
    ("quadric-curves", "curves of type (c+1, 2c+2) on a quadric with T_X(2c) Ulrich"),
    ("elliptic-product", "curves on E x P^1 with T_X(k) Ulrich for odd k"),
    ("grado", "numerically feasible (n, d, g) of small degree"),
    ("surfaces", "numeric surface conditions on the quintic del Pezzo and (P^2, O(2))"),
];

/// Bounds and ranges used by the certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub a_max: i64,
    pub max_c: i64,
    pub d_max: i64,
    /// Odd `k` from 3 up to this value.
    pub elliptic_k_max: i64,
}

impl Default for Options {
    fn default() -> Self {
        Options { a_max: DEFAULT_A_MAX, max_c: 20, d_max: 8, elliptic_k_max: 21 }
    }
}

pub fn is_known(id: &str) -> bool {
    IDS.iter().any(|(i, _)| *i == id)
}

/// Runs one certificate. Failures inside a certificate are reported in it;
/// only an unknown id is an `Err`.
pub fn certify(id: &str, opts: &Options) -> Result<Certificate, Error> {
    let cert = match id {
        "conto" => conto(opts),
        "632num" => sextics(),
        "632" => cubic_sextics(),
        "k1-surface" => Ok(certify_k1_candidates(opts.a_max)),
        "hilbert-3d" => hilbert(CaseId::D3),
        "hilbert-4d" => hilbert(CaseId::D4),
        "hilbert-4e" => hilbert(CaseId::E4),
        "noqf4" => noqf4(),
        "nosc4" => nosc4(),
        "bound" => bound(),
        "quadric-curves" => quadric_curves(opts),
        "elliptic-product" => elliptic_product(opts),
        "grado" => grado(opts),
        "surfaces" => surfaces(),
        _ => return Err(Error::UnknownCase(id.into())),
    };
    Ok(cert.unwrap_or_else(|e| Certificate::error(id, e)))
}

/// Every certificate, in catalogue order.
pub fn certify_all(opts: &Options) -> Vec<Certificate> {
    IDS.iter().filter_map(|(id, _)| certify(id, opts).ok()).collect()
}

fn render<T: core::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(" ")
}

fn conto(opts: &Options) -> Result<Certificate, Error> {
    let mut b = CertificateBuilder::new("conto", false);
    let sols = solve_conto(opts.a_max)?;
    let want = [(6, [2, 0, 0, 0]), (6, [1, 1, 1, 1]), (7, [3, 1, 1, 0]), (9, [3, 3, 3, 2])];
    let fmt = |a: i64, c: &[i64; 4]| format!("({a};{},{},{},{})", c[0], c[1], c[2], c[3]);
    let got: BTreeSet<String> = sols.iter().map(|s| fmt(s.a, &s.c)).collect();
    let exp: BTreeSet<String> = want.iter().map(|(a, c)| fmt(*a, c)).collect();
    b.check("solution set", render(&exp), render(&got), got == exp);
    b.check_eq("solution count", 4, sols.len());
    for s in &sols {
        b.check_true(format!("{} satisfies the system", fmt(s.a, &s.c)), s.is_valid());
        b.witness("solution", fmt(s.a, &s.c));
    }
    let wide = solve_conto(opts.a_max.max(256))?;
    b.check("extended scan to 256", render(&exp), render(wide.iter().map(|s| fmt(s.a, &s.c))), wide == sols);
    Ok(b.finish())
}

fn sextics() -> Result<Certificate, Error> {
    let mut b = CertificateBuilder::new("632num", false);
    let sols = solve_632num();
    let want = [
        (4, [1, 1, 1, 1, 1, 1]),
        (5, [2, 2, 2, 1, 1, 1]),
        (6, [3, 2, 2, 2, 2, 1]),
        (7, [3, 3, 3, 2, 2, 2]),
        (8, [3, 3, 3, 3, 3, 3]),
    ];
    let classes = |it: &mut dyn Iterator<Item = (i64, [i64; 6])>| {
        it.map(|(a, bs)| PicardClass::new(a, bs.to_vec())).collect::<BTreeSet<_>>()
    };
    let got = classes(&mut sols.iter().map(|s| (s.a, s.b)));
    let exp = classes(&mut want.into_iter());
    b.check("class set", render(&exp), render(&got), got == exp);
    for s in &sols {
        let x = PicardClass::new(s.a, s.b.to_vec());
        let sq: i64 = s.b.iter().map(|v| v * v).sum();
        let sum: i64 = s.b.iter().sum();
        b.check_eq(format!("{x} a^2 - sum b^2"), 10, s.a * s.a - sq);
        b.check_eq(format!("{x} 3a - sum b"), 6, 3 * s.a - sum);
        b.witness("class", x);
    }
    Ok(b.finish())
}

fn cubic_sextics() -> Result<Certificate, Error> {
    let mut b = CertificateBuilder::new("632", false);
    b.absorb(&certify_632());
    let anti = PicardClass::canonical(6).scale(-1);
    b.check_true("-K ample", is_ample(&anti)?);
    b.check_eq("27 lines", 27, minus_one_curves(6)?.len());
    for s in solve_632num() {
        let x = PicardClass::new(s.a, s.b.to_vec());
        b.check_eq(format!("{x} -K.X"), 6, intersect(&anti, &x)?);
        b.check_true(format!("{x} nef"), is_nef(&x)?);
    }
    let obvious = PicardClass::new(-1, alloc::vec![1; 6]);
    b.check_eq(format!("{obvious} effective"), false, decide_effective(&obvious)?.effective);
    Ok(b.finish())
}

fn hilbert(case: CaseId) -> Result<Certificate, Error> {
    let id = format!("hilbert-{case}");
    let mut b = CertificateBuilder::new(&id, true);
    let s = solve_case(case)?;
    let value = |name: &str| s.value(name).cloned().ok_or(Error::MissingInput("case value"));
    match case {
        CaseId::D3 => {
            b.check_eq("a", int(20), s.a.clone());
            b.check_eq("u*b", rat(1, 4500), value("u*b")?);
            b.check_eq("P(r) u-coefficient", int(-38016), value("P(r) u-coefficient")?);
            b.check_eq("P(r) right-hand side", int(1) + rat(396, 4500), value("P(r) right-hand side")?);
            b.check_true("u < 0", s.u.is_negative());
        }
        CaseId::D4 => {
            b.check_eq("a", int(9), s.a.clone());
            b.check_eq("u*c", rat(-1, 11520), value("u*c")?);
            b.check_eq("A^8 c2 / A^10", int(115), value("A^(n-2)c2 / A^n")?);
            let combined = s.identity("combined").unwrap_or("");
            b.check("combined relation", "642*X = -1302".into(), combined.into(), combined == "642*X = -1302");
            b.check_eq("A^10", rat(-1302, 642), s.a_to_n.clone());
            b.check_true("A^10 < 0", s.a_to_n.is_negative());
        }
        CaseId::E4 => {
            b.check_eq("a", int(45), s.a.clone());
            b.check_eq("u*b", rat(1, 746496), value("u*b")?);
            b.check_true("0 < A^10 < 1", s.a_to_n.is_positive() && s.a_to_n < int(1));
            b.check_true("A^10 not an integer", !s.a_to_n.is_integer());
        }
    }
    b.witness("contradiction", s.contradiction.as_str());
    b.witness("statement", &s.statement);
    b.witness("a", &s.a);
    b.witness("u", &s.u);
    b.witness("A^n", &s.a_to_n);
    for (name, v) in &s.values {
        b.witness(name.as_str(), v);
    }
    for (name, v) in &s.identities {
        b.witness(name.as_str(), v);
    }
    Ok(b.finish())
}

fn noqf4() -> Result<Certificate, Error> {
    let c = noqf4_certify()?;
    Ok(c.to_certificate(&[
        ("KH^3", "4*e - 28*b - 104"),
        ("H^4", "16*b + 64"),
        ("relation", "-48*e + 13*d - 96 = 0"),
        ("divisibility", "13 | e + 2"),
        ("window", "1 <= e + 2 <= 7"),
    ]))
}

fn nosc4() -> Result<Certificate, Error> {
    let c = nosc4_certify()?;
    Ok(c.to_certificate(&[
        ("K_B^2", "-7/48*d + 7"),
        ("K_B c1", "-5/48*d + 9"),
        ("mu(T_X)", "1/6*d"),
        ("mu(pi^* T_B)", "-1/3*d + 12"),
        ("integrality", "48 | d"),
        ("semistability", "d <= 24"),
    ]))
}

fn bound() -> Result<Certificate, Error> {
    let mut b = CertificateBuilder::new("bound", false);
    for n in 2..=12 {
        let bb = bou_max_k(n)?;
        b.check_true(format!("n={n} kmax <= n+1"), bb.kmax <= n + 1);
        b.check_true(format!("n={n} derivation valid"), bb.derivation_valid);
        let at = bou_quadratic(n, bb.kmax);
        let next = bou_quadratic(n, bb.kmax + 1);
        b.check_true(format!("n={n} quadratic at kmax <= 0"), !at.is_positive());
        b.check_true(format!("n={n} quadratic at kmax+1 > 0"), next.is_positive());
        b.witness(format!("n={n} kmax"), bb.kmax);
    }
    b.check_eq("n=2 kmax", 3, bou_max_k(2)?.kmax);
    b.check_eq("n=13 derivation valid", false, bou_max_k(13)?.derivation_valid);

    b.check_eq("bigbound (1,1)", rat(-5, 4), bigbound_k(1, 1));
    b.check_true("k=-2 within bigbound (1,1)", int(-2) <= bigbound_k(1, 1));
    b.check_true("k=2 within bigbound (1,6)", int(2) <= bigbound_k(1, 6));
    b.check_true("k=0 within bigbound (2,4)", int(0) <= bigbound_k(2, 4));

    for n in 1..=12 {
        let w = hypersurface_exclude(n)?;
        b.check_eq(format!("hypersurface n={n} satisfiable"), false, w.is_satisfiable());
    }
    for (case, m, k) in [(CaseId::D3, 4, 4), (CaseId::D4, 5, 4), (CaseId::E4, 5, 5)] {
        let p = proportional_case(m, k)?;
        b.check_true(format!("{case} proportional index admissible"), p.admissible);
        b.witness(format!("{case} (r, s)"), format!("({}, {})", p.r, p.s));
        b.witness(format!("{case} m(H,A) lower bound"), proportional_multiple_bound(2 * m, k));
    }
    b.witness("coh k bound (n=2, a=1)", coh_k_bound(2, 1));
    b.witness("coh vanishing twist (n=4, k=2)", coh_vanishing_twist(4, 2));
    Ok(b.finish())
}

fn quadric_curves(opts: &Options) -> Result<Certificate, Error> {
    let mut b = CertificateBuilder::new("quadric-curves", false);
    for c in 1..=opts.max_c {
        b.absorb(&certify_quadric_ulrich(c)?);
    }
    b.check_eq("castelnuovo d=8", int(9), thresholds(8).castelnuovo_p3);
    b.check_true("quadric forcing exception at d=9", thresholds(9).exception == Some((9, 10)));
    b.check_true("cone case integral at b=1", cone_case_check(1));
    b.check_true("cone case not integral for 2 <= b <= 200", !(2..=200).any(cone_case_check));
    b.check_true("general moduli k <= 4 for g <= 500", (2..=500).all(|g| general_moduli_max_k(g) <= 4));
    b.check_eq("rho(3, 3, 6)", 3, brill_noether_rho(3, 3, 6));
    b.check_true("T_X(2) on genus 3", existence_k2(3));
    b.check_true("no T_X(2) on genus 2", !existence_k2(2));
    b.check_true("T_X(3) on genus 9", existence_k3(9));
    b.check_true("degree 12 for genus 9, k=3", degree_from_genus(1, 9, 3) == Some(int(12)));
    Ok(b.finish())
}

fn elliptic_product(opts: &Options) -> Result<Certificate, Error> {
    let mut b = CertificateBuilder::new("elliptic-product", false);
    for k in (3..=opts.elliptic_k_max).step_by(2) {
        b.absorb(&certify_elliptic_product(k)?);
    }
    Ok(b.finish())
}

fn grado(opts: &Options) -> Result<Certificate, Error> {
    let mut b = CertificateBuilder::new("grado", false);
    let got = feasible_params(opts.d_max);
    let fmt = |(n, d, g): &(i64, i64, i64)| format!("(n={n},d={d},g={g})");
    for t in &got {
        let (n, d, g) = *t;
        b.check_true(format!("{} degree relation", fmt(t)), (n - 1) * d == (n + 2) * (g - 1));
        b.witness("triple", fmt(t));
    }
    let below9: Vec<_> = got.iter().filter(|t| t.1 <= 8).collect();
    let want = [(4, 8, 5)];
    let exp: Vec<_> = want.iter().filter(|t| t.1 <= opts.d_max).collect();
    b.check(
        "triples with d <= 8",
        render(exp.iter().map(|t| fmt(t))),
        render(below9.iter().map(|t| fmt(t))),
        below9 == exp,
    );
    Ok(b.finish())
}

fn surfaces() -> Result<Certificate, Error> {
    let mut b = CertificateBuilder::new("surfaces", false);
    // quintic del Pezzo with H = -2K, and the plane with conics
    let cases = [("S5", 20, 6, 1, 1, 5, -10, 7), ("(P2,O(2))", 4, 0, 0, 1, 9, -6, 3)];
    for (name, d, g, k, chi, k2, hk, c2) in cases {
        let s = SurfaceInputs { d, g, k, chi, k2, hk };
        for (cond, res) in surface_conditions(&s) {
            b.check_eq(format!("{name} {cond}"), int(0), res);
        }
        b.check_true(format!("{name} degree from genus"), degree_from_genus(2, g, k) == Some(int(d)));
        b.check_eq(format!("{name} k from KH"), int(k), k_from_intersections(2, d, hk));
        let p = VarietyParams::new(2, d, g, k)?.with_kh(hk).with_k2(k2).with_c2(c2).with_chi(chi);
        b.check_eq(format!("{name} c2 identity"), int(0), c2_identity_check(&p)?);
        let fc = tangent_twist_first_chern(&p)?;
        let uc = ulrich_chern(&p, 2, Some(&fc))?;
        b.check_eq(format!("{name} c1(T_X(k)).H"), int(2 * (d + g - 1)), uc.c1h);
        let direct = tangent_twist_c2(&p)?;
        b.check(
            format!("{name} c2(T_X(k)) matches Ulrich value"),
            format!("{direct}"),
            format!("{:?}", uc.c2h),
            uc.c2h.as_ref() == Some(&direct),
        );
        b.check_eq(format!("{name} h0 = rd"), int(2 * d), ulrich_euler(2, d, 2, 0));
        b.check_eq(format!("{name} chi(E(-1))"), int(0), ulrich_euler(2, d, 2, -1));
    }
    let window_empty = (4..=100).all(|k| {
        (1..=200).all(|d| {
            let (lo, hi) = surface_chi_window(d, k);
            lo > hi
        })
    });
    b.check_true("chi window empty for 4 <= k <= 100, d <= 200", window_empty);
    // k = 3 forces K^2 = 9d/4 and chi = d/4
    let ball = SurfaceInputs { d: 20, g: 26, k: 3, chi: 5, k2: 45, hk: 30 };
    b.check_true("k=3 ball quotient shape", surface_conditions(&ball).iter().all(|(_, r)| *r == int(0)));
    b.check_eq("k=3 ball quotient K^2 = 9 chi", 9 * ball.chi, ball.k2);
    let p = QPoly::from_roots(&[1, 2]);
    b.check_eq("(t-1)(t-2) at 0", int(2), poly_eval(&p, &Rational::from_integer(0.into())));
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::Status;

    #[test]
    fn every_certificate_succeeds() {
        let opts = Options::default();
        for (id, _) in IDS {
            let c = certify(id, &opts).unwrap();
            let failed: Vec<_> = c.failed_checks().collect();
            assert!(c.status.is_success(), "{id}: {:?} {failed:?} {:?}", c.status, c.witnesses);
            assert_eq!(c.id, id);
        }
        assert!(certify("nope", &opts).is_err());
    }

    #[test]
    fn refutations_are_marked() {
        let opts = Options::default();
        for id in ["hilbert-3d", "hilbert-4d", "hilbert-4e", "noqf4", "nosc4"] {
            assert_eq!(certify(id, &opts).unwrap().status, Status::RefutedAsExpected, "{id}");
        }
        assert_eq!(certify("conto", &opts).unwrap().status, Status::Verified);
    }

    #[test]
    fn options_change_outputs() {
        let opts = Options { max_c: 3, elliptic_k_max: 5, d_max: 20, ..Options::default() };
        let c = certify("quadric-curves", &opts).unwrap();
        assert!(c.checks.iter().any(|ch| ch.name.starts_with("c=3 ")));
        assert!(!c.checks.iter().any(|ch| ch.name.starts_with("c=4 ")));
        let c = certify("grado", &opts).unwrap();
        assert!(c.status.is_success());
        assert!(c.witnesses.len() > 1);
        let c = certify("conto", &Options { a_max: 5, ..Options::default() }).unwrap();
        assert_eq!(c.status, Status::Error);
    }

    #[test]
    fn deterministic() {
        let opts = Options::default();
        assert_eq!(certify_all(&opts), certify_all(&opts));
    }
}
