//! Canonical text forms. Everything rendered here re-parses to the same value.

use super::ring::{Fp, Rational};

pub trait Render {
    fn render(&self) -> String;
}

impl Render for Rational {
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Render for Fp {
    fn render(&self) -> String {
        self.value().to_string()
    }
}

/// True when `s` has a `+`, a binary `-`, or any operator in `ops` outside parentheses.
fn has_top_level(s: &str, ops: &[char]) -> bool {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => return true,
            '-' if depth == 0 && i > 0 => return true,
            c if depth == 0 && ops.contains(&c) => return true,
            _ => {}
        }
    }
    false
}

/// Parenthesizes a sum so it can appear as a factor of a product.
pub fn wrap_product_factor(s: &str) -> String {
    if has_top_level(s, &[]) {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// Parenthesizes anything that is not a single atom or power, for use after `/`.
pub fn wrap_divisor(s: &str) -> String {
    if has_top_level(s, &['*', '/']) || s.starts_with('-') {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// Joins rendered terms with ` + ` / ` - `; the empty sum is `0`.
pub fn join_terms(terms: impl IntoIterator<Item = String>) -> String {
    let mut out = String::new();
    for t in terms {
        if out.is_empty() {
            out = t;
        } else if let Some(rest) = t.strip_prefix('-').filter(|r| !has_top_level(r, &[])) {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrapping() {
        assert_eq!(wrap_product_factor("x + 1"), "(x + 1)");
        assert_eq!(wrap_product_factor("-x"), "-x");
        assert_eq!(wrap_product_factor("(x + 1)/x"), "(x + 1)/x");
        assert_eq!(wrap_divisor("x*y"), "(x*y)");
        assert_eq!(wrap_divisor("x^2"), "x^2");
        assert_eq!(join_terms(vec!["1".into(), "-x".into(), "-(x + 1)*z".into()]), "1 - x - (x + 1)*z");
        assert_eq!(join_terms(Vec::<String>::new()), "0");
    }
}
