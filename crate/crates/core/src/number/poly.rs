//! Dense univariate polynomials over `Q`, lowest degree first. The zero
//! polynomial is the empty vector; other values carry no trailing zeros.

use num_traits::Zero;

use super::Rational;

pub(crate) type Poly = Vec<Rational>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn sub(a: &[Rational], b: &[Rational]) -> Poly {
    let mut out: Poly = (0..a.len().max(b.len()))
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x - y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => -y,
            (None, None) => unreachable!(),
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[Rational], b: &[Rational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `d` must be nonzero.
pub(crate) fn divrem(a: &[Rational], d: &[Rational]) -> (Poly, Poly) {
    assert!(!d.is_empty(), "polynomial division by zero");
    let mut rem: Poly = a.to_vec();
    trim(&mut rem);
    if rem.len() < d.len() {
        return (Vec::new(), rem);
    }
    let lead = d.last().unwrap();
    let mut quot = vec![Rational::zero(); rem.len() - d.len() + 1];
    while rem.len() >= d.len() {
        let shift = rem.len() - d.len();
        let c = rem.last().unwrap() / lead;
        for (i, y) in d.iter().enumerate() {
            rem[shift + i] -= &c * y;
        }
        quot[shift] = c;
        // The leading term cancels exactly.
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// `s` with `s * a ≡ g (mod m)` where `g = gcd(a, m)` is returned monic.
pub(crate) fn inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Poly> {
    let (mut r0, mut r1): (Poly, Poly) = (m.to_vec(), a.to_vec());
    trim(&mut r1);
    let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![num_traits::One::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is the gcd; invertible iff it is a nonzero constant.
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let (_, s) = divrem(&s0.iter().map(|x| x / &c).collect::<Vec<_>>(), m);
    Some(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::rational;

    fn p(v: &[i64]) -> Poly {
        let mut out: Poly = v.iter().map(|&x| rational(x, 1)).collect();
        trim(&mut out);
        out
    }

    #[test]
    fn division() {
        // x^3 - 1 = (x - 1)(x^2 + x + 1)
        let (q, r) = divrem(&p(&[-1, 0, 0, 1]), &p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_empty());
        let (q, r) = divrem(&p(&[1, 2]), &p(&[0, 0, 1]));
        assert!(q.is_empty());
        assert_eq!(r, p(&[1, 2]));
    }

    #[test]
    fn modular_inverse() {
        let m = p(&[1, 1, 1]);
        let a = p(&[1, -1]); // 1 - x
        let inv = inverse_mod(&a, &m).unwrap();
        let (_, r) = divrem(&mul(&a, &inv), &m);
        assert_eq!(r, p(&[1]));
        // x - 1 shares the factor with x^2 - 1.
        assert!(inverse_mod(&p(&[-1, 1]), &p(&[-1, 0, 1])).is_none());
    }
}
