use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::{int, Rational};

/// Affine form `constant + sum_i coeffs[i] * x_i` over a fixed number of
/// symbolic variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine {
    coeffs: Vec<Rational>,
    constant: Rational,
}

impl Affine {
    pub fn constant(vars: usize, c: Rational) -> Self {
        Affine { coeffs: alloc::vec![Rational::zero(); vars], constant: c }
    }

    pub fn zero(vars: usize) -> Self {
        Self::constant(vars, Rational::zero())
    }

    /// The variable `x_i` itself.
    pub fn var(vars: usize, i: usize) -> Self {
        let mut a = Self::zero(vars);
        a.coeffs[i] = int(1);
        a
    }

    pub fn from_parts(coeffs: Vec<Rational>, constant: Rational) -> Self {
        Affine { coeffs, constant }
    }

    pub fn vars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &Rational {
        &self.constant
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.is_constant() && self.constant.is_zero()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Affine { coeffs: self.coeffs.iter().map(|c| c * s).collect(), constant: &self.constant * s }
    }

    pub fn eval(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.coeffs.len(), "affine arity mismatch");
        self.coeffs.iter().zip(values).fold(self.constant.clone(), |acc, (c, v)| acc + c * v)
    }

    /// Replaces `x_var` by `with`; `with` must live over the same variables.
    pub fn substitute(&self, var: usize, with: &Affine) -> Self {
        assert_eq!(with.vars(), self.vars(), "affine arity mismatch");
        let c = self.coeffs[var].clone();
        let mut base = self.clone();
        base.coeffs[var] = Rational::zero();
        base + with.scale(&c)
    }

    /// Renders with the given variable names, e.g. `-7/48*d + 7`.
    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> impl fmt::Display + 'a {
        AffineDisplay { a: self, names }
    }
}

struct AffineDisplay<'a> {
    a: &'a Affine,
    names: &'a [&'a str],
}

impl fmt::Display for AffineDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = self.names.get(i).copied().unwrap_or("?");
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mag == int(1) {
                write!(f, "{name}")?;
            } else {
                write!(f, "{mag}*{name}")?;
            }
            first = false;
        }
        let k = &self.a.constant;
        if first {
            write!(f, "{k}")
        } else if !k.is_zero() {
            let sign = if k.is_negative() { "-" } else { "+" };
            write!(f, " {sign} {}", k.abs())
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 8] = ["x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7"];
        write!(f, "{}", self.display_with(&NAMES))
    }
}

impl Add for Affine {
    type Output = Affine;
    fn add(self, rhs: Affine) -> Affine {
        &self + &rhs
    }
}

impl Add<&Affine> for &Affine {
    type Output = Affine;
    fn add(self, rhs: &Affine) -> Affine {
        assert_eq!(self.vars(), rhs.vars(), "affine arity mismatch");
        Affine {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
            constant: &self.constant + &rhs.constant,
        }
    }
}

impl Sub for Affine {
    type Output = Affine;
    fn sub(self, rhs: Affine) -> Affine {
        &self - &rhs
    }
}

impl Sub<&Affine> for &Affine {
    type Output = Affine;
    fn sub(self, rhs: &Affine) -> Affine {
        self + &(-rhs)
    }
}

impl Neg for &Affine {
    type Output = Affine;
    fn neg(self) -> Affine {
        self.scale(&int(-1))
    }
}

impl Mul<&Rational> for &Affine {
    type Output = Affine;
    fn mul(self, rhs: &Rational) -> Affine {
        self.scale(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qexact::rat;
    use alloc::string::ToString;

    #[test]
    fn substitution_and_eval() {
        // 4e - 28b - 104 with b := d/16 - 4 over (e, b, d)
        let e = Affine::var(3, 0);
        let b = Affine::var(3, 1);
        let d = Affine::var(3, 2);
        let kh = &(&e.scale(&int(4)) - &b.scale(&int(28))) - &Affine::constant(3, int(104));
        let b_of_d = &d.scale(&rat(1, 16)) - &Affine::constant(3, int(4));
        let sub = kh.substitute(1, &b_of_d);
        assert_eq!(*sub.coeff(1), int(0));
        assert_eq!(*sub.coeff(2), rat(-7, 4));
        assert_eq!(sub.eval(&[int(5), int(0), int(80)]), int(20 - 140 + 112 - 104));
    }

    #[test]
    fn display() {
        let a = Affine::from_parts(alloc::vec![rat(-7, 48)], int(7));
        assert_eq!(a.display_with(&["d"]).to_string(), "-7/48*d + 7");
        let z = Affine::zero(2);
        assert_eq!(z.to_string(), "0");
        let b = Affine::from_parts(alloc::vec![int(1), int(-1)], int(-3));
        assert_eq!(b.display_with(&["e", "b"]).to_string(), "e - b - 3");
    }
}
