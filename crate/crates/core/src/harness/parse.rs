use crate::error::{Error, Result};
use crate::pairing::FPBWDMonomial;
use crate::shuffle::{Decomposition, EFactor, EPBWDMonomial, Root};

fn bad(s: &str, why: &str) -> Error {
    Error::Parse(format!("{s:?}: {why}"))
}

fn int<T: std::str::FromStr>(s: &str, whole: &str) -> Result<T> {
    s.trim().parse().map_err(|_| bad(whole, "expected an integer"))
}

/// `[j..i]` followed by the rest of the string.
fn root_prefix<'a>(s: &'a str, whole: &str) -> Result<(Root, &'a str)> {
    let s = s.strip_prefix('[').ok_or_else(|| bad(whole, "expected '['"))?;
    let close = s.find(']').ok_or_else(|| bad(whole, "expected ']'"))?;
    let (j, i) = s[..close].split_once("..").ok_or_else(|| bad(whole, "expected j..i"))?;
    Ok((Root::new(int(j, whole)?, int(i, whole)?)?, &s[close + 1..]))
}

/// Parses `e[j..i]@r^k` factors joined by `*`; the power defaults to 1.
pub fn parse_e_monomial(s: &str) -> Result<EPBWDMonomial> {
    let mut factors = Vec::new();
    for part in s.split('*').map(str::trim) {
        let rest = part.strip_prefix('e').ok_or_else(|| bad(part, "expected 'e'"))?;
        let (root, rest) = root_prefix(rest, part)?;
        let rest = rest.strip_prefix('@').ok_or_else(|| bad(part, "expected '@'"))?;
        let (mode, power) = match rest.split_once('^') {
            Some((m, k)) => (int(m, part)?, int(k, part)?),
            None => (int(rest, part)?, 1),
        };
        factors.push(EFactor::new(root, mode, power));
    }
    EPBWDMonomial::new(factors)
}

/// Parses `f[j..i]@(r_j,...,r_i)` factors joined by `*`, in any order.
pub fn parse_f_monomial(s: &str) -> Result<FPBWDMonomial> {
    let mut factors = Vec::new();
    for part in s.split('*').map(str::trim) {
        let rest = part.strip_prefix('f').ok_or_else(|| bad(part, "expected 'f'"))?;
        let (root, rest) = root_prefix(rest, part)?;
        let inner = rest
            .strip_prefix("@(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| bad(part, "expected @(...)"))?;
        let r = inner.split(',').map(|t| int(t, part)).collect::<Result<Vec<i64>>>()?;
        factors.push(Decomposition::new(root, r)?);
    }
    Ok(FPBWDMonomial::new_unchecked(factors))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for s in ["e[1..2]@0^1", "e[1..1]@-1^1*e[1..1]@1^2", "e[2..3]@-4^3"] {
            assert_eq!(parse_e_monomial(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_e_monomial("e[1..1]@3").unwrap().to_string(), "e[1..1]@3^1");
        for s in ["f[1..2]@(0,0)", "f[2..2]@(1)*f[1..1]@(-1)", "f[1..3]@(-1,0,-4)"] {
            assert_eq!(parse_f_monomial(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn rejects_malformed() {
        for s in ["e[1..2]", "e[2..1]@0", "x[1..1]@0", "e[1..1]@1*e[1..1]@0"] {
            assert!(parse_e_monomial(s).is_err(), "{s}");
        }
        for s in ["f[1..2]@(0)", "f[1..1]@0", "f[1..1]@(a)"] {
            assert!(parse_f_monomial(s).is_err(), "{s}");
        }
    }
}
