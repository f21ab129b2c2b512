//! Double-double arithmetic for the expanded quartic polynomials.
//!
//! The orthonormal-basis quartics cancel heavily near the light cone, so
//! their monomials are accumulated with error-free transformations and
//! rounded once at the end.

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    Dd { hi: s, lo: err }
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd {
        hi: s,
        lo: b - (s - a),
    }
}

#[inline]
fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    Dd {
        hi: p,
        lo: a.mul_add(b, -p),
    }
}

impl Dd {
    pub(crate) const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    pub(crate) fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact square of a double.
    pub(crate) fn square(x: f64) -> Dd {
        two_prod(x, x)
    }

    /// Exact product of two doubles.
    pub(crate) fn prod(a: f64, b: f64) -> Dd {
        two_prod(a, b)
    }

    pub(crate) fn add(self, o: Dd) -> Dd {
        let s = two_sum(self.hi, o.hi);
        let t = two_sum(self.lo, o.lo);
        let s = quick_two_sum(s.hi, s.lo + t.hi);
        quick_two_sum(s.hi, s.lo + t.lo)
    }

    pub(crate) fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub(crate) fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    pub(crate) fn mul(self, o: Dd) -> Dd {
        let p = two_prod(self.hi, o.hi);
        let lo = p.lo + (self.hi * o.lo + self.lo * o.hi);
        quick_two_sum(p.hi, lo)
    }

    /// Multiplication by a small power of two or integer; exact for powers of two.
    pub(crate) fn scale(self, k: f64) -> Dd {
        self.mul(Dd::from_f64(k))
    }

    pub(crate) fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    /// Nearest double and the sign of the remainder.
    pub(crate) fn round_with_side(self) -> (f64, f64) {
        let r = quick_two_sum(self.hi, self.lo);
        (r.hi, r.lo)
    }
}

/// `a + b + c + d` rounded once.
pub(crate) fn sum4(a: f64, b: f64, c: f64, d: f64) -> f64 {
    two_sum(a, b).add(two_sum(c, d)).to_f64()
}

impl std::iter::Sum for Dd {
    fn sum<I: Iterator<Item = Dd>>(iter: I) -> Dd {
        iter.fold(Dd::ZERO, Dd::add)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_catastrophic_cancellation() {
        // (1 + 2^-52)^2 - 1 = 2^-51 + 2^-104
        let x = 1.0 + 2f64.powi(-52);
        let d = Dd::square(x).sub(Dd::from_f64(1.0));
        assert_eq!(d.to_f64(), 2f64.powi(-51) + 2f64.powi(-104));
    }

    #[test]
    fn sum_of_cancelling_terms() {
        let terms = [1e16, 1.0, -1e16, 1.0];
        let s: Dd = terms.iter().map(|&t| Dd::from_f64(t)).sum();
        assert_eq!(s.to_f64(), 2.0);
    }
}
