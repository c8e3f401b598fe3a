//! The shared text grammar for words: whitespace-separated tokens
//! `s3`, `s3'`, `x2`, `a(4,2)`, `a'(4,2)`, `b(4,2)`, `e2`, `t`, `t'`,
//! with an optional header token `n=<int>` fixing the strand count.

use crate::band::{BandGen, BandWord};
use crate::error::{Error, Result};
use crate::inverse::{IBGen, IBWord};
use crate::singular::{SBandGen, SBandWord, SingularGen, SingularWord};
use crate::word::{BraidGen, BraidWord};

/// One parsed token of the shared grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Token {
    Sigma { i: usize, sign: i8 },
    X { i: usize },
    A { t: usize, s: usize, sign: i8 },
    B { q: usize, p: usize },
    Eps { i: usize },
    Tau { sign: i8 },
}

fn parse_err(index: usize, token: &str, reason: &str) -> Error {
    Error::Parse {
        index,
        token: token.to_string(),
        reason: reason.to_string(),
    }
}

fn parse_index(index: usize, token: &str, digits: &str) -> Result<usize> {
    digits
        .parse::<usize>()
        .ok()
        .filter(|&v| v >= 1)
        .ok_or_else(|| parse_err(index, token, "expected a positive integer index"))
}

fn parse_pair(index: usize, token: &str, body: &str) -> Result<(usize, usize)> {
    let inner = body
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| parse_err(index, token, "expected (hi,lo)"))?;
    let mut parts = inner.splitn(2, ',');
    let hi = parse_index(index, token, parts.next().unwrap_or("").trim())?;
    let lo = parse_index(
        index,
        token,
        parts
            .next()
            .ok_or_else(|| parse_err(index, token, "expected two indices"))?
            .trim(),
    )?;
    if lo >= hi {
        return Err(parse_err(index, token, "indices must satisfy hi > lo"));
    }
    Ok((hi, lo))
}

fn parse_token(index: usize, token: &str) -> Result<Token> {
    if token == "t" {
        return Ok(Token::Tau { sign: 1 });
    }
    if token == "t'" {
        return Ok(Token::Tau { sign: -1 });
    }
    if let Some(rest) = token.strip_prefix("a'") {
        let (t, s) = parse_pair(index, token, rest)?;
        return Ok(Token::A { t, s, sign: -1 });
    }
    if let Some(rest) = token.strip_prefix('a') {
        let (t, s) = parse_pair(index, token, rest)?;
        return Ok(Token::A { t, s, sign: 1 });
    }
    if let Some(rest) = token.strip_prefix('b') {
        let (q, p) = parse_pair(index, token, rest)?;
        return Ok(Token::B { q, p });
    }
    if let Some(rest) = token.strip_prefix('s') {
        if let Some(digits) = rest.strip_suffix('\'') {
            return Ok(Token::Sigma {
                i: parse_index(index, token, digits)?,
                sign: -1,
            });
        }
        return Ok(Token::Sigma {
            i: parse_index(index, token, rest)?,
            sign: 1,
        });
    }
    if let Some(rest) = token.strip_prefix('x') {
        return Ok(Token::X {
            i: parse_index(index, token, rest)?,
        });
    }
    if let Some(rest) = token.strip_prefix('e') {
        return Ok(Token::Eps {
            i: parse_index(index, token, rest)?,
        });
    }
    Err(parse_err(index, token, "unknown token"))
}

/// Tokenizes an input string, extracting a leading (or embedded) `n=` header.
/// Returns the declared strand count, if any, and the letter tokens.
pub fn tokenize(input: &str) -> Result<(Option<usize>, Vec<Token>)> {
    let mut n = None;
    let mut tokens = Vec::new();
    for (index, raw) in input.split_whitespace().enumerate() {
        if let Some(v) = raw.strip_prefix("n=") {
            let parsed = v
                .parse::<usize>()
                .map_err(|_| parse_err(index, raw, "expected n=<integer>"))?;
            if n.replace(parsed).is_some() {
                return Err(parse_err(index, raw, "duplicate strand-count header"));
            }
            continue;
        }
        tokens.push(parse_token(index, raw)?);
    }
    Ok((n, tokens))
}

/// Parses a braid word (σ letters only).
pub fn parse_braid_word(n: usize, input: &str) -> Result<BraidWord> {
    let (_, tokens) = tokenize(input)?;
    let mut letters = Vec::with_capacity(tokens.len());
    for (index, tok) in tokens.iter().enumerate() {
        match *tok {
            Token::Sigma { i, sign } => letters.push(BraidGen::new(i, sign)),
            _ => return Err(parse_err(index, &format!("{tok:?}"), "expected s tokens only")),
        }
    }
    BraidWord::from_letters(n, letters)
}

/// Parses a band word (a letters only).
pub fn parse_band_word(n: usize, input: &str) -> Result<BandWord> {
    let (_, tokens) = tokenize(input)?;
    let mut letters = Vec::with_capacity(tokens.len());
    for (index, tok) in tokens.iter().enumerate() {
        match *tok {
            Token::A { t, s, sign } => letters.push(BandGen::new(t, s, sign)),
            Token::Sigma { i, sign } => letters.push(BandGen::new(i + 1, i, sign)),
            _ => {
                return Err(parse_err(
                    index,
                    &format!("{tok:?}"),
                    "expected a/s tokens only",
                ))
            }
        }
    }
    BandWord::from_letters(n, letters)
}

/// Parses a singular band word (a and b letters; s/x accepted as shorthand).
pub fn parse_sband_word(n: usize, input: &str) -> Result<SBandWord> {
    let (_, tokens) = tokenize(input)?;
    let mut letters = Vec::with_capacity(tokens.len());
    for (index, tok) in tokens.iter().enumerate() {
        match *tok {
            Token::A { t, s, sign } => letters.push(SBandGen::A { t, s, sign }),
            Token::B { q, p } => letters.push(SBandGen::B { q, p }),
            Token::Sigma { i, sign } => letters.push(SBandGen::A {
                t: i + 1,
                s: i,
                sign,
            }),
            Token::X { i } => letters.push(SBandGen::B { q: i + 1, p: i }),
            _ => {
                return Err(parse_err(
                    index,
                    &format!("{tok:?}"),
                    "expected a/b/s/x tokens only",
                ))
            }
        }
    }
    SBandWord::from_letters(n, letters)
}

/// Parses a classical singular word (σ and x letters).
pub fn parse_singular_word(n: usize, input: &str) -> Result<SingularWord> {
    let (_, tokens) = tokenize(input)?;
    let mut letters = Vec::with_capacity(tokens.len());
    for (index, tok) in tokens.iter().enumerate() {
        match *tok {
            Token::Sigma { i, sign } => letters.push(SingularGen::Sigma { i, sign }),
            Token::X { i } => letters.push(SingularGen::X { i }),
            _ => {
                return Err(parse_err(
                    index,
                    &format!("{tok:?}"),
                    "expected s/x tokens only",
                ))
            }
        }
    }
    SingularWord::from_letters(n, letters)
}

/// Parses an inverse-braid word (σ, ε; τ admitted for the type-B variant).
pub fn parse_ib_word(n: usize, input: &str) -> Result<IBWord> {
    let (_, tokens) = tokenize(input)?;
    let mut letters = Vec::with_capacity(tokens.len());
    for (index, tok) in tokens.iter().enumerate() {
        match *tok {
            Token::Sigma { i, sign } => letters.push(IBGen::Sigma { i, sign }),
            Token::Eps { i } => letters.push(IBGen::Eps { i }),
            Token::Tau { sign } => letters.push(IBGen::Tau { sign }),
            _ => {
                return Err(parse_err(
                    index,
                    &format!("{tok:?}"),
                    "expected s/e/t tokens only",
                ))
            }
        }
    }
    IBWord::from_letters(n, letters)
}

pub fn print_braid_word(w: &BraidWord) -> String {
    w.letters()
        .iter()
        .map(|l| format!("s{}{}", l.index, if l.sign < 0 { "'" } else { "" }))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn print_band_word(w: &BandWord) -> String {
    w.letters()
        .iter()
        .map(|l| format!("a{}({},{})", if l.sign < 0 { "'" } else { "" }, l.t, l.s))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn print_sband_word(w: &SBandWord) -> String {
    w.letters()
        .iter()
        .map(|l| match l {
            SBandGen::A { t, s, sign } => {
                format!("a{}({},{})", if *sign < 0 { "'" } else { "" }, t, s)
            }
            SBandGen::B { q, p } => format!("b({},{})", q, p),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn print_singular_word(w: &SingularWord) -> String {
    w.letters()
        .iter()
        .map(|l| match l {
            SingularGen::Sigma { i, sign } => {
                format!("s{}{}", i, if *sign < 0 { "'" } else { "" })
            }
            SingularGen::X { i } => format!("x{i}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn print_ib_word(w: &IBWord) -> String {
    w.letters()
        .iter()
        .map(|l| match l {
            IBGen::Sigma { i, sign } => format!("s{}{}", i, if *sign < 0 { "'" } else { "" }),
            IBGen::Eps { i } => format!("e{i}"),
            IBGen::Tau { sign } => {
                if *sign < 0 {
                    "t'".to_string()
                } else {
                    "t".to_string()
                }
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_and_tokens() {
        let (n, toks) = tokenize("n=3 s1 s2' x1 a(3,1) a'(3,2) b(2,1) e2 t t'").unwrap();
        assert_eq!(n, Some(3));
        assert_eq!(toks.len(), 9);
        assert_eq!(toks[0], Token::Sigma { i: 1, sign: 1 });
        assert_eq!(toks[1], Token::Sigma { i: 2, sign: -1 });
        assert_eq!(toks[2], Token::X { i: 1 });
        assert_eq!(toks[3], Token::A { t: 3, s: 1, sign: 1 });
        assert_eq!(toks[4], Token::A { t: 3, s: 2, sign: -1 });
        assert_eq!(toks[5], Token::B { q: 2, p: 1 });
        assert_eq!(toks[6], Token::Eps { i: 2 });
        assert_eq!(toks[7], Token::Tau { sign: 1 });
        assert_eq!(toks[8], Token::Tau { sign: -1 });
    }

    #[test]
    fn errors_carry_token_and_position() {
        let err = tokenize("s1 q7").unwrap_err();
        match err {
            Error::Parse { index, token, .. } => {
                assert_eq!(index, 1);
                assert_eq!(token, "q7");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn braid_word_round_trip() {
        let w = parse_braid_word(3, "s1 s2' s1").unwrap();
        assert_eq!(print_braid_word(&w), "s1 s2' s1");
        assert_eq!(parse_braid_word(3, &print_braid_word(&w)).unwrap(), w);
    }

    #[test]
    fn sband_round_trip() {
        let w = parse_sband_word(3, "a(3,1) b(2,1) a'(3,2)").unwrap();
        assert_eq!(print_sband_word(&w), "a(3,1) b(2,1) a'(3,2)");
    }

    #[test]
    fn bad_pair_is_rejected() {
        assert!(parse_sband_word(3, "a(1,2)").is_err());
        assert!(parse_sband_word(3, "b'(2,1)").is_err());
    }
}
