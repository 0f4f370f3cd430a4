//! Plain-text polynomial format: one term per line as
//! `coeff e0 e1 ... e{n-1}`, blank lines and `#` comments ignored.
//!
//! ```text
//! # x0^2 - 3/2 x1 x2
//! 1 2 0 0
//! -3/2 0 1 1
//! ```

use super::poly::{Monomial, MultiPoly};
use super::ring::Ring;
use super::AlgebraError;

/// Parses a polynomial in `nvars` variables. Repeated monomials are summed.
pub fn parse_scs<R: Ring>(ring: R, nvars: usize, text: &str) -> Result<MultiPoly<R>, AlgebraError> {
    let mut out = MultiPoly::zero(ring.clone(), nvars);
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != nvars + 1 {
            return Err(AlgebraError::Parse(format!(
                "line {}: expected coefficient and {} exponents, found {} fields",
                lineno + 1,
                nvars,
                fields.len()
            )));
        }
        let c = ring
            .parse_elem(fields[0])
            .map_err(|e| AlgebraError::Parse(format!("line {}: {e}", lineno + 1)))?;
        let exps = fields[1..]
            .iter()
            .map(|s| {
                s.parse::<u32>().map_err(|_| {
                    AlgebraError::Parse(format!("line {}: invalid exponent '{s}'", lineno + 1))
                })
            })
            .collect::<Result<Vec<u32>, _>>()?;
        out.add_term(Monomial::new(exps), c);
    }
    Ok(out)
}

/// Prints terms in decreasing grevlex order, one per line. The zero
/// polynomial prints as the empty string.
pub fn to_scs<R: Ring>(f: &MultiPoly<R>) -> String {
    let mut s = String::new();
    for (m, c) in f.terms() {
        s.push_str(&f.ring().fmt_elem(c));
        for e in m.exps() {
            s.push(' ');
            s.push_str(&e.to_string());
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::{rat, PrimeField, RationalField};

    #[test]
    fn parses_comments_and_fractions() {
        let text = "# a comment\n1 2 0 0\n\n-3/2 0 1 1  # trailing\n";
        let f = parse_scs(RationalField, 3, text).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.coeff(&Monomial::new(vec![0, 1, 1])), rat(-3, 2));
        assert_eq!(to_scs(&f), "1 2 0 0\n-3/2 0 1 1\n");
    }

    #[test]
    fn round_trip_over_prime_field() {
        let k = PrimeField::new(101).unwrap();
        let text = "5 1 1\n100 0 2\n7 0 0\n";
        let f = parse_scs(k, 2, text).unwrap();
        assert_eq!(to_scs(&f), text);
        assert_eq!(parse_scs(k, 2, &to_scs(&f)).unwrap(), f);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(
            parse_scs(RationalField, 2, "1 2"),
            Err(AlgebraError::Parse(_))
        ));
        assert!(matches!(
            parse_scs(RationalField, 1, "1 -2"),
            Err(AlgebraError::Parse(_))
        ));
        assert!(matches!(
            parse_scs(RationalField, 1, "x 2"),
            Err(AlgebraError::Parse(_))
        ));
    }

    #[test]
    fn zero_polynomial() {
        let f = parse_scs(RationalField, 2, "# nothing\n0 1 1\n").unwrap();
        assert!(f.is_zero());
        assert_eq!(to_scs(&f), "");
    }
}
