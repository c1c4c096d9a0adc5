//! Optional record of which public operations have run in this process.
//!
//! Compiled to nothing unless the `op-trace` feature is enabled. The flags
//! are process-global and only ever go from unset to set.

/// Public operations of the library, one variant per entry point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
#[repr(u8)]
pub enum Op {
    IsqrtExact,
    PolyEval,
    ElemSymmetric,
    SolveLinear,
    DegreeFromGenus,
    KFromIntersections,
    UlrichChern,
    UlrichEuler,
    C2IdentityCheck,
    BouMaxK,
    BigboundK,
    SurfaceConditions,
    SurfaceChiWindow,
    HypersurfaceExclude,
    ProportionalCase,
    Noqf4Certify,
    Nosc4Certify,
    BuildCase,
    SolveCase,
    RrTopCoefficients,
    Intersect,
    SelfInt,
    ArithmeticGenus,
    MinusOneCurves,
    DecideEffective,
    IsNef,
    IsAmple,
    Certify632,
    CertifyK1Candidates,
    H0OmegaP2,
    SolveConto,
    Solve632num,
    FeasibleParams,
    KunnethH,
    CertifyQuadricUlrich,
    CertifyEllipticProduct,
    QuadricTypeFromK,
    BrillNoetherRho,
    Thresholds,
    ConeCaseCheck,
    ExistenceK2,
    ExistenceK3,
}

impl Op {
    pub const ALL: [Op; 42] = [
        Op::IsqrtExact,
        Op::PolyEval,
        Op::ElemSymmetric,
        Op::SolveLinear,
        Op::DegreeFromGenus,
        Op::KFromIntersections,
        Op::UlrichChern,
        Op::UlrichEuler,
        Op::C2IdentityCheck,
        Op::BouMaxK,
        Op::BigboundK,
        Op::SurfaceConditions,
        Op::SurfaceChiWindow,
        Op::HypersurfaceExclude,
        Op::ProportionalCase,
        Op::Noqf4Certify,
        Op::Nosc4Certify,
        Op::BuildCase,
        Op::SolveCase,
        Op::RrTopCoefficients,
        Op::Intersect,
        Op::SelfInt,
        Op::ArithmeticGenus,
        Op::MinusOneCurves,
        Op::DecideEffective,
        Op::IsNef,
        Op::IsAmple,
        Op::Certify632,
        Op::CertifyK1Candidates,
        Op::H0OmegaP2,
        Op::SolveConto,
        Op::Solve632num,
        Op::FeasibleParams,
        Op::KunnethH,
        Op::CertifyQuadricUlrich,
        Op::CertifyEllipticProduct,
        Op::QuadricTypeFromK,
        Op::BrillNoetherRho,
        Op::Thresholds,
        Op::ConeCaseCheck,
        Op::ExistenceK2,
        Op::ExistenceK3,
    ];
}

#[cfg(feature = "op-trace")]
mod imp {
    use super::Op;
    use core::sync::atomic::{AtomicBool, Ordering};

    #[allow(clippy::declare_interior_mutable_const)]
    const UNSET: AtomicBool = AtomicBool::new(false);
    static SEEN: [AtomicBool; Op::ALL.len()] = [UNSET; Op::ALL.len()];

    pub fn mark(op: Op) {
        SEEN[op as usize].store(true, Ordering::Relaxed);
    }

    pub fn seen(op: Op) -> bool {
        SEEN[op as usize].load(Ordering::Relaxed)
    }
}

#[inline(always)]
pub(crate) fn trace_op(_op: Op) {
    #[cfg(feature = "op-trace")]
    imp::mark(_op);
}

/// Whether `op` has run since process start. Always `false` without the
/// `op-trace` feature.
pub fn seen(op: Op) -> bool {
    #[cfg(feature = "op-trace")]
    {
        imp::seen(op)
    }
    #[cfg(not(feature = "op-trace"))]
    {
        let _ = op;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::Op;

    #[test]
    fn discriminants_index_all() {
        for (i, op) in Op::ALL.iter().enumerate() {
            assert_eq!(*op as usize, i);
        }
    }
}
