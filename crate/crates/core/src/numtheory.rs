//! Small integer helpers: primality, prime-power decomposition, checked
//! 128-bit arithmetic and parsing of `q` arguments.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseQError {
    #[error("cannot parse `{0}` as q (expected an integer or `p^k`)")]
    Syntax(String),
    #[error("`{0}` does not fit in 64 bits")]
    TooLarge(String),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Writes `q = p^k` with `p` prime and `k >= 1`, or returns `None`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= q {
        if q % p == 0 {
            break;
        }
        p += 1;
    }
    if q % p != 0 || p.saturating_mul(p) > q {
        // no factor up to sqrt(q): q itself is prime
        return Some((q, 1));
    }
    let mut rest = q;
    let mut k = 0u32;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn checked_mul(a: u128, b: u128, what: &'static str) -> Result<u128, ArithmeticError> {
    a.checked_mul(b).ok_or(ArithmeticError::Overflow(what))
}

pub(crate) fn checked_add(a: u128, b: u128, what: &'static str) -> Result<u128, ArithmeticError> {
    a.checked_add(b).ok_or(ArithmeticError::Overflow(what))
}

/// Parses `q` given either literally (`49`) or as a power (`7^2`).
pub fn parse_q(text: &str) -> Result<u64, ParseQError> {
    let text = text.trim();
    let syntax = || ParseQError::Syntax(text.to_string());
    let parse = |s: &str| -> Result<u64, ParseQError> {
        let s = s.trim();
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(syntax());
        }
        s.parse::<u64>().map_err(|_| ParseQError::TooLarge(text.to_string()))
    };
    match text.split_once('^') {
        None => parse(text),
        Some((base, exp)) => {
            let base = parse(base)?;
            let exp = parse(exp)?;
            let exp = u32::try_from(exp).map_err(|_| ParseQError::TooLarge(text.to_string()))?;
            base.checked_pow(exp)
                .ok_or_else(|| ParseQError::TooLarge(text.to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_below_50() {
        let primes: Vec<u64> = (0..50).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
        );
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(961), Some((31, 2)));
        assert_eq!(prime_power(997), Some((997, 1)));
        assert_eq!(prime_power(1 << 20), Some((2, 20)));
    }

    #[test]
    fn prime_power_agrees_with_brute_force() {
        for q in 2..=2000u64 {
            let brute = (2..=q).filter(|&p| is_prime(p)).find_map(|p| {
                let mut x = 1u64;
                let mut k = 0;
                while x < q {
                    x *= p;
                    k += 1;
                }
                (x == q).then_some((p, k))
            });
            assert_eq!(prime_power(q), brute, "q = {q}");
        }
    }

    #[test]
    fn q_syntax() {
        assert_eq!(parse_q("49"), Ok(49));
        assert_eq!(parse_q("7^2"), Ok(49));
        assert_eq!(parse_q(" 2^13 "), Ok(8192));
        assert!(matches!(parse_q("2^"), Err(ParseQError::Syntax(_))));
        assert!(matches!(parse_q("x"), Err(ParseQError::Syntax(_))));
        assert!(matches!(parse_q("-3"), Err(ParseQError::Syntax(_))));
        assert!(matches!(parse_q("2^64"), Err(ParseQError::TooLarge(_))));
    }

    #[test]
    fn checked_ops_report_overflow() {
        assert!(checked_mul(u128::MAX, 2, "x").is_err());
        assert!(checked_add(u128::MAX, 1, "x").is_err());
        assert_eq!(checked_mul(3, 4, "x"), Ok(12));
    }
}
