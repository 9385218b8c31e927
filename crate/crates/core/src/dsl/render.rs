use num_traits::{One, Signed, Zero};

use super::{MapDef, MapExpr};
use crate::affine::AffineMapSpec;
use crate::number::{CyclotomicNumber, Rational};

/// Builds `± t_1 ± t_2 ..` from signed terms; `0` when empty.
fn signed_sum(terms: Vec<(bool, MapExpr)>) -> MapExpr {
    let mut iter = terms.into_iter();
    let Some((neg, first)) = iter.next() else {
        return MapExpr::Rational(Rational::zero());
    };
    let mut acc = if neg { MapExpr::negation(first) } else { first };
    for (neg, t) in iter {
        acc = if neg { MapExpr::minus(acc, t) } else { MapExpr::plus(acc, t) };
    }
    acc
}

fn signed_terms(c: &CyclotomicNumber) -> Vec<(bool, MapExpr)> {
    let order = c.order();
    c.coefficients()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, q)| !q.is_zero())
        .map(|(p, q)| {
            let mag = MapExpr::Rational(q.abs());
            let term = match (p, q.abs().is_one()) {
                (0, _) => mag,
                (_, true) => MapExpr::Zeta { order, power: p as u64 },
                (_, false) => MapExpr::times(mag, MapExpr::Zeta { order, power: p as u64 }),
            };
            (q.is_negative(), term)
        })
        .collect()
}

/// A field element in definition syntax, e.g. `-1/2*zeta(3) + 1`.
pub fn scalar_expr(c: &CyclotomicNumber) -> MapExpr {
    signed_sum(signed_terms(c))
}

pub fn format_scalar(c: &CyclotomicNumber) -> String {
    scalar_expr(c).to_string()
}

/// `Σ a_i x_i + A` as a definition.
pub fn affine_def(spec: &AffineMapSpec<CyclotomicNumber>) -> MapDef {
    let mut terms = Vec::new();
    for (i, a) in spec.coefficients().iter().enumerate() {
        let x = MapExpr::Var(i + 1);
        let mut parts = signed_terms(a);
        match parts.len() {
            0 => {}
            1 => {
                let (neg, t) = parts.pop().expect("one term");
                let is_one = matches!(&t, MapExpr::Rational(q) if q.is_one());
                terms.push((neg, if is_one { x } else { MapExpr::times(t, x) }));
            }
            _ => terms.push((false, MapExpr::times(MapExpr::group(signed_sum(parts)), x))),
        }
    }
    terms.extend(signed_terms(spec.constant()));
    MapDef {
        arity: spec.arity(),
        expr: signed_sum(terms),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::{eval_scalars, parse_map_def, parse_scalars, CompiledMap};
    use crate::number::{rational, CycloField};

    #[test]
    fn scalars() {
        let f = CycloField::new(3).unwrap();
        let z = CyclotomicNumber::zeta(&f);
        let c = CyclotomicNumber::from_rational(&f, rational(-1, 2)) * z.clone() + CyclotomicNumber::one(&f);
        assert_eq!(format_scalar(&c), "-1/2*zeta(3) + 1");
        assert_eq!(format_scalar(&(z.clone() * z)), "-zeta(3) - 1");
        assert_eq!(format_scalar(&CyclotomicNumber::zero(&f)), "0");
        let q = CycloField::rationals();
        assert_eq!(format_scalar(&CyclotomicNumber::from_rational(&q, rational(-7, 3))), "-7/3");
    }

    #[test]
    fn scalars_reparse() {
        let f = CycloField::new(12).unwrap();
        for e in -12..12 {
            let c = CyclotomicNumber::zeta_pow(&f, e) * CyclotomicNumber::from_rational(&f, rational(e, 5))
                + CyclotomicNumber::from_rational(&f, rational(1, 3));
            let back = eval_scalars(&parse_scalars(&format_scalar(&c)).unwrap(), &f).unwrap();
            assert_eq!(back[0], c);
        }
    }

    #[test]
    fn definitions() {
        let cases = [
            ("f(x1,x2,x3) = 5 - x1 - x2 - x3", "f(x1, x2, x3) = -x1 - x2 - x3 + 5"),
            ("f(x1,x2) = zeta(3)*x1 + zeta(3)^2*x2", "f(x1, x2) = zeta(3)*x1 + (-zeta(3) - 1)*x2"),
            ("f(x1,x2) = 0*x1", "f(x1, x2) = 0"),
            ("f(x1) = 2/3*x1 - 1", "f(x1) = 2/3*x1 - 1"),
        ];
        for (src, want) in cases {
            let map = CompiledMap::new(parse_map_def(src).unwrap()).unwrap();
            let def = affine_def(&map.to_affine().unwrap());
            assert_eq!(def.to_string(), want);
            let back = CompiledMap::with_field(parse_map_def(want).unwrap(), map.field()).unwrap();
            assert_eq!(back.to_affine().unwrap(), map.to_affine().unwrap());
        }
    }
}
