//! Coefficient domains, polynomials in `z` over them, and their text syntax.

mod bipoly;
mod frac;
mod parse;
mod poly;
mod render;
mod ring;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use bipoly::BiPoly;
pub use frac::{reduce_frac, BiFrac, Frac, FpRatFunc, GcdDomain, UniRatFunc};
pub use parse::{parse_poly_in, Coefficient, ParseError, ParseErrorKind};
pub use poly::Poly;
pub use render::Render;
pub use ring::{is_prime, Field, Fp, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("coefficient domains differ: {0} vs {1}")]
    DomainMismatch(String, String),
    #[error("unknown domain tag {0:?} (expected Q, Q(x), F(x,y):Q or F(x,y):p=<prime>)")]
    UnknownTag(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Coefficient for Rational {
    fn variable(_: &(), _: char) -> Option<Self> {
        None
    }
}

impl Coefficient for UniRatFunc {
    fn variable(ctx: &(), name: char) -> Option<Self> {
        (name == 'x').then(|| Frac::from_numer(Poly::var(ctx)))
    }
}

impl<K: Field> Coefficient for BiFrac<K> {
    fn variable(ctx: &K::Ctx, name: char) -> Option<Self> {
        match name {
            'x' => Some(Frac::from_numer(BiPoly::x(ctx))),
            'y' => Some(Frac::from_numer(BiPoly::y(ctx))),
            _ => None,
        }
    }
}

/// Which coefficient domain a polynomial lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainTag {
    /// The rationals.
    Q,
    /// Rational functions `Q(x)`.
    Qx,
    /// Rational functions `Q(x, y)`.
    BivariateQ,
    /// Rational functions `F_p(x, y)`.
    BivariateFp(u64),
}

impl FromStr for DomainTag {
    type Err = DomainError;

    fn from_str(s: &str) -> Result<Self, DomainError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match compact.as_str() {
            "Q" => return Ok(DomainTag::Q),
            "Q(x)" => return Ok(DomainTag::Qx),
            "F(x,y):Q" => return Ok(DomainTag::BivariateQ),
            _ => {}
        }
        let p = compact
            .strip_prefix("F(x,y):p=")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| DomainError::UnknownTag(s.to_string()))?;
        // Products of residues are computed in u128; keep p well inside u64.
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(DomainError::NotPrime(p));
        }
        Ok(DomainTag::BivariateFp(p))
    }
}

impl fmt::Display for DomainTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainTag::Q => write!(f, "Q"),
            DomainTag::Qx => write!(f, "Q(x)"),
            DomainTag::BivariateQ => write!(f, "F(x,y):Q"),
            DomainTag::BivariateFp(p) => write!(f, "F(x,y):p={p}"),
        }
    }
}

/// A polynomial in `z` over any of the built-in coefficient domains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyPoly {
    Q(Poly<Rational>),
    Qx(Poly<UniRatFunc>),
    BivariateQ(Poly<BiFrac<Rational>>),
    BivariateFp(Poly<BiFrac<Fp>>),
}

impl AnyPoly {
    pub fn tag(&self) -> DomainTag {
        match self {
            AnyPoly::Q(_) => DomainTag::Q,
            AnyPoly::Qx(_) => DomainTag::Qx,
            AnyPoly::BivariateQ(_) => DomainTag::BivariateQ,
            AnyPoly::BivariateFp(f) => DomainTag::BivariateFp(*f.context()),
        }
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            AnyPoly::Q(f) => f.degree(),
            AnyPoly::Qx(f) => f.degree(),
            AnyPoly::BivariateQ(f) => f.degree(),
            AnyPoly::BivariateFp(f) => f.degree(),
        }
    }

    /// Canonical text form in the polynomial grammar.
    pub fn render(&self) -> String {
        match self {
            AnyPoly::Q(f) => f.render_in("z"),
            AnyPoly::Qx(f) => f.render_in("z"),
            AnyPoly::BivariateQ(f) => f.render_in("z"),
            AnyPoly::BivariateFp(f) => f.render_in("z"),
        }
    }
}

/// Parses `text` over the domain named by `tag`.
pub fn parse_poly(text: &str, tag: DomainTag) -> Result<AnyPoly, DomainError> {
    Ok(match tag {
        DomainTag::Q => AnyPoly::Q(parse_poly_in(text, &())?),
        DomainTag::Qx => AnyPoly::Qx(parse_poly_in(text, &())?),
        DomainTag::BivariateQ => AnyPoly::BivariateQ(parse_poly_in(text, &())?),
        DomainTag::BivariateFp(p) => AnyPoly::BivariateFp(parse_poly_in(text, &p)?),
    })
}

/// Product of two polynomials over the same domain.
pub fn poly_mul(f: &AnyPoly, g: &AnyPoly) -> Result<AnyPoly, DomainError> {
    Ok(match (f, g) {
        (AnyPoly::Q(a), AnyPoly::Q(b)) => AnyPoly::Q(a.times(b)),
        (AnyPoly::Qx(a), AnyPoly::Qx(b)) => AnyPoly::Qx(a.times(b)),
        (AnyPoly::BivariateQ(a), AnyPoly::BivariateQ(b)) => AnyPoly::BivariateQ(a.times(b)),
        (AnyPoly::BivariateFp(a), AnyPoly::BivariateFp(b)) if a.context() == b.context() => {
            AnyPoly::BivariateFp(a.times(b))
        }
        _ => {
            return Err(DomainError::DomainMismatch(
                f.tag().to_string(),
                g.tag().to_string(),
            ))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const P1: &str = "(1+4*x^4)*x + 4*x*z + (1+4*x^4)*2*x*z^2 + 8*x*z^3 + (1+4*x^4)*2*x^2*z^4 + (1+8*x^2+4*x^4)*z^5 + 4*z^6";
    const P2: &str = "x*y^2 - (1-x^2)*y*z - (1-y-x*y)*x*z^2 - (1-x-x*y^2)*x*z^3 + (x-y+y^2)*x*z^4 - (1-x-x^2)*y*z^5 - (1-x*y)*z^6 + x*z^7";

    #[test]
    fn domain_tags() {
        for s in ["Q", "Q(x)", "F(x,y):Q", "F(x,y):p=7"] {
            let tag: DomainTag = s.parse().unwrap();
            assert_eq!(tag.to_string(), s);
        }
        assert_eq!("F(x, y) : p = 5".parse::<DomainTag>().unwrap(), DomainTag::BivariateFp(5));
        assert_eq!("F(x,y):p=6".parse::<DomainTag>(), Err(DomainError::NotPrime(6)));
        assert!(matches!("R".parse::<DomainTag>(), Err(DomainError::UnknownTag(_))));
    }

    #[test]
    fn p1_factorization() {
        let g = parse_poly("1+4*x^4+4*z", DomainTag::Qx).unwrap();
        let h = parse_poly("x+2*x*z^2+2*x^2*z^4+z^5", DomainTag::Qx).unwrap();
        assert_eq!(poly_mul(&g, &h).unwrap(), parse_poly(P1, DomainTag::Qx).unwrap());
    }

    #[test]
    fn p2_factorization() {
        let g = parse_poly("x*y-z+x*z^2", DomainTag::BivariateQ).unwrap();
        let h = parse_poly("y+x*z+x*z^2+x*y*z^3+y*z^4+z^5", DomainTag::BivariateQ).unwrap();
        assert_eq!(poly_mul(&g, &h).unwrap(), parse_poly(P2, DomainTag::BivariateQ).unwrap());
    }

    #[test]
    fn p3_coefficients() {
        let f = parse_poly("y + x*z + (1+x*y^2)*z^2 + x^2*y*z^3 + x*y*z^4", DomainTag::BivariateQ).unwrap();
        let AnyPoly::BivariateQ(f) = f else { unreachable!() };
        let rendered: Vec<String> = f.coeffs().iter().map(Render::render).collect();
        assert_eq!(rendered, vec!["y", "x", "1 + x*y^2", "x^2*y", "x*y"]);
    }

    #[test]
    fn identity_product() {
        let f = parse_poly(P1, DomainTag::Qx).unwrap();
        let one = parse_poly("1", DomainTag::Qx).unwrap();
        assert_eq!(poly_mul(&f, &one).unwrap(), f);
        let other = parse_poly("z", DomainTag::Q).unwrap();
        assert!(matches!(poly_mul(&f, &other), Err(DomainError::DomainMismatch(..))));
    }

    #[test]
    fn variables_are_checked_against_the_domain() {
        let err = parse_poly("y*z + 1", DomainTag::Qx).unwrap_err();
        let DomainError::Parse(e) = err else { panic!("expected parse error") };
        assert_eq!(e.kind, ParseErrorKind::VariableNotPermitted('y'));
        assert_eq!(e.column, 1);
        assert!(parse_poly("x*z", DomainTag::Q).is_err());
    }

    #[test]
    fn rational_function_coefficients() {
        let f = parse_poly("z/(x+1) + (x^2-1)/(x-1)", DomainTag::Qx).unwrap();
        assert_eq!(f.render(), "1 + x + 1/(1 + x)*z");
        let g = parse_poly("(x*y)/(2*y)*z", DomainTag::BivariateQ).unwrap();
        assert_eq!(g.render(), "1/2*x*z");
        let h = parse_poly("3*x*z + 4", DomainTag::BivariateFp(3)).unwrap();
        assert_eq!(h.render(), "1");
    }

    #[test]
    fn render_reparses() {
        for (s, tag) in [
            (P1, DomainTag::Qx),
            (P2, DomainTag::BivariateQ),
            (P2, DomainTag::BivariateFp(5)),
            ("-1/2*z^3 + 7/3 - z", DomainTag::Q),
            ("z^2/(x^2 - 2*x + 3) - x/(x+1)*z", DomainTag::Qx),
            ("(x - y)/(x*y + 1)*z^2 - y/(x^2)", DomainTag::BivariateQ),
        ] {
            let f = parse_poly(s, tag).unwrap();
            let again = parse_poly(&f.render(), tag).unwrap();
            assert_eq!(f, again, "{}", f.render());
        }
    }
}
