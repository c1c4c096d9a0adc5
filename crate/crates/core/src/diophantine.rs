//! Exhaustive enumerators for the small Diophantine systems behind the
//! surface classifications.
//!
//! Every solution is emitted once, in descending normal form.

use alloc::vec::Vec;

use num_integer::Roots;

use crate::error::{invalid, Error};
use crate::qexact::isqrt_exact;
use crate::trace::{trace_op, Op};

pub const DEFAULT_A_MAX: i64 = 64;

/// `a^2 - 6a + 4 = sum c_i^2` with `c_1 >= ... >= c_4 >= 0` and
/// `a >= c_1 + c_2 + 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ContoSolution {
    pub a: i64,
    pub c: [i64; 4],
}

impl ContoSolution {
    pub fn is_valid(&self) -> bool {
        let c = self.c;
        self.a * self.a - 6 * self.a + 4 == c.iter().map(|x| x * x).sum::<i64>()
            && c.windows(2).all(|w| w[0] >= w[1])
            && c[3] >= 0
            && self.a >= c[0] + c[1] + 3
    }
}

/// `a^2 - sum b_i^2 = 10` and `3a - sum b_i = 6` with `b_1 >= ... >= b_6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SexticSolution {
    pub a: i64,
    pub b: [i64; 6],
}

impl SexticSolution {
    pub fn is_valid(&self) -> bool {
        let b = self.b;
        self.a * self.a - b.iter().map(|x| x * x).sum::<i64>() == 10
            && 3 * self.a - b.iter().sum::<i64>() == 6
            && b.windows(2).all(|w| w[0] >= w[1])
    }
}

fn isqrt_floor(x: i64) -> i64 {
    if x <= 0 {
        0
    } else {
        x.sqrt()
    }
}

/// Solutions with first entry exactly `a`.
pub fn conto_slice(a: i64) -> Vec<ContoSolution> {
    let mut out = Vec::new();
    let rhs = a * a - 6 * a + 4;
    if rhs < 0 || a < 3 {
        return out;
    }
    // c_1 is the largest of four squares summing to rhs, so 4 c_1^2 >= rhs
    let mut c1 = isqrt_floor(rhs).min(a - 3);
    while c1 >= 0 && 4 * c1 * c1 >= rhs {
        let r1 = rhs - c1 * c1;
        let mut c2 = isqrt_floor(r1).min(c1).min(a - 3 - c1);
        while c2 >= 0 && 3 * c2 * c2 >= r1 {
            let r2 = r1 - c2 * c2;
            let mut c3 = isqrt_floor(r2).min(c2);
            while c3 >= 0 && 2 * c3 * c3 >= r2 {
                let rest = r2 - c3 * c3;
                if let Some(c4) = isqrt_exact(rest as u64) {
                    let c4 = c4 as i64;
                    if c4 <= c3 {
                        out.push(ContoSolution { a, c: [c1, c2, c3, c4] });
                    }
                }
                c3 -= 1;
            }
            c2 -= 1;
        }
        c1 -= 1;
    }
    out
}

/// All [`ContoSolution`]s with `a <= a_max`.
pub fn solve_conto(a_max: i64) -> Result<Vec<ContoSolution>, Error> {
    trace_op(Op::SolveConto);
    if a_max < 9 {
        return Err(invalid("a_max must be at least 9"));
    }
    Ok((0..=a_max).flat_map(conto_slice).collect())
}

/// Integer range of `a` allowed by `(3a - 6)^2 <= 6(a^2 - 10)`, i.e.
/// `a^2 - 12a + 32 <= 0`.
pub fn sextic_a_range() -> (i64, i64) {
    // roots of a^2 - 12a + 32
    let disc = 12 * 12 - 4 * 32;
    let s = isqrt_floor(disc);
    let lo = (12 - s + 1) / 2;
    let hi = (12 + s) / 2;
    let q = |a: i64| a * a - 12 * a + 32;
    let lo = (lo - 1..=lo + 1).find(|&a| q(a) <= 0).unwrap_or(lo);
    let hi = (hi - 1..=hi + 1).rev().find(|&a| q(a) <= 0).unwrap_or(hi);
    (lo, hi)
}

/// All [`SexticSolution`]s.
pub fn solve_632num() -> Vec<SexticSolution> {
    trace_op(Op::Solve632num);
    let (lo, hi) = sextic_a_range();
    let mut out = Vec::new();
    for a in lo..=hi {
        let sq = a * a - 10;
        if sq < 0 {
            continue;
        }
        let bound = isqrt_floor(sq);
        let mut b = [0i64; 6];
        sextic_dfs(a, 0, bound, 3 * a - 6, sq, &mut b, &mut out);
    }
    out
}

fn sextic_dfs(
    a: i64,
    pos: usize,
    upper: i64,
    sum_left: i64,
    sq_left: i64,
    b: &mut [i64; 6],
    out: &mut Vec<SexticSolution>,
) {
    let slots = (6 - pos) as i64;
    if slots == 0 {
        if sum_left == 0 && sq_left == 0 {
            out.push(SexticSolution { a, b: *b });
        }
        return;
    }
    // Cauchy-Schwarz on the remaining entries
    if sum_left * sum_left > slots * sq_left {
        return;
    }
    let lim = isqrt_floor(sq_left);
    let mut v = upper.min(lim);
    while v >= -lim {
        // remaining entries are all <= v
        if sum_left - v > (slots - 1) * v {
            break;
        }
        b[pos] = v;
        sextic_dfs(a, pos + 1, v, sum_left - v, sq_left - v * v, b, out);
        v -= 1;
    }
}

/// Triples `(n, d, g)` with `n >= 3`, `d <= d_max`, `(n-1)d = (n+2)(g-1)`
/// and `2 <= g <= d - 3`.
pub fn feasible_params(d_max: i64) -> Vec<(i64, i64, i64)> {
    trace_op(Op::FeasibleParams);
    let mut out = Vec::new();
    for d in 1..=d_max {
        // g <= d - 3 with the degree relation forces 4(n+2) <= 3d
        let n_max = (3 * d - 8).div_euclid(4);
        for n in 3..=n_max {
            let num = (n - 1) * d;
            if num % (n + 2) != 0 {
                continue;
            }
            let g = num / (n + 2) + 1;
            if (2..=d - 3).contains(&g) {
                out.push((n, d, g));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conto_examples() {
        let sols = solve_conto(DEFAULT_A_MAX).unwrap();
        let got: Vec<(i64, [i64; 4])> = sols.iter().map(|s| (s.a, s.c)).collect();
        assert_eq!(got, [(6, [2, 0, 0, 0]), (6, [1, 1, 1, 1]), (7, [3, 1, 1, 0]), (9, [3, 3, 3, 2])]);
        assert!(conto_slice(5).is_empty());
        assert_eq!(conto_slice(9), [ContoSolution { a: 9, c: [3, 3, 3, 2] }]);
        assert!(solve_conto(8).is_err());
    }

    #[test]
    fn conto_stable_to_256() {
        assert_eq!(solve_conto(256).unwrap(), solve_conto(64).unwrap());
    }

    #[test]
    fn sextic_examples() {
        assert_eq!(sextic_a_range(), (4, 8));
        let sols = solve_632num();
        assert_eq!(sols.len(), 5);
        assert!(sols.iter().all(SexticSolution::is_valid));
        let at = |a| sols.iter().filter(|s| s.a == a).map(|s| s.b).collect::<Vec<_>>();
        assert_eq!(at(4), [[1, 1, 1, 1, 1, 1]]);
        assert_eq!(at(5), [[2, 2, 2, 1, 1, 1]]);
    }

    #[test]
    fn feasible_examples() {
        assert_eq!(feasible_params(8), [(4, 8, 5)]);
        assert!(feasible_params(4).is_empty());
        for (n, d, _) in feasible_params(60) {
            assert!(d >= n + 3);
        }
    }
}
