use std::str::FromStr;

use crate::racah::Name;

use super::ExprError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Int,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Slash,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    /// Byte offset of the first byte of the token.
    pub position: usize,
}

/// Split `input` into tokens. Identifiers must be one of the twelve named
/// elements (case-sensitive); anything else is a lex error at its offset.
pub fn tokenize(input: &str) -> Result<Vec<Token>, ExprError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut at = 0;
    while at < bytes.len() {
        let b = bytes[at];
        if b.is_ascii_whitespace() {
            at += 1;
            continue;
        }
        let single = match b {
            b'+' => Some(TokenKind::Plus),
            b'-' => Some(TokenKind::Minus),
            b'*' => Some(TokenKind::Star),
            b'^' => Some(TokenKind::Caret),
            b'(' => Some(TokenKind::LParen),
            b')' => Some(TokenKind::RParen),
            b'[' => Some(TokenKind::LBracket),
            b']' => Some(TokenKind::RBracket),
            b'{' => Some(TokenKind::LBrace),
            b'}' => Some(TokenKind::RBrace),
            b',' => Some(TokenKind::Comma),
            b'/' => Some(TokenKind::Slash),
            _ => None,
        };
        if let Some(kind) = single {
            tokens.push(Token {
                kind,
                text: (b as char).to_string(),
                position: at,
            });
            at += 1;
            continue;
        }
        if b.is_ascii_digit() {
            let start = at;
            while at < bytes.len() && bytes[at].is_ascii_digit() {
                at += 1;
            }
            tokens.push(Token {
                kind: TokenKind::Int,
                text: input[start..at].to_string(),
                position: start,
            });
            continue;
        }
        if b.is_ascii_alphabetic() || b == b'_' {
            let start = at;
            while at < bytes.len() && (bytes[at].is_ascii_alphanumeric() || bytes[at] == b'_') {
                at += 1;
            }
            let text = &input[start..at];
            if Name::from_str(text).is_err() {
                return Err(ExprError::Lex {
                    position: start,
                    message: format!("unknown identifier `{text}`"),
                });
            }
            tokens.push(Token {
                kind: TokenKind::Ident,
                text: text.to_string(),
                position: start,
            });
            continue;
        }
        return Err(ExprError::Lex {
            position: at,
            message: format!("unexpected character `{}`", &input[at..].chars().next().unwrap()),
        });
    }
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_carry_offsets() {
        let toks = tokenize("1/2*{A,B}").unwrap();
        let kinds: Vec<TokenKind> = toks.iter().map(|t| t.kind).collect();
        assert_eq!(
            kinds,
            vec![
                TokenKind::Int,
                TokenKind::Slash,
                TokenKind::Int,
                TokenKind::Star,
                TokenKind::LBrace,
                TokenKind::Ident,
                TokenKind::Comma,
                TokenKind::Ident,
                TokenKind::RBrace,
            ]
        );
        assert_eq!(toks[4].position, 4);
        assert_eq!(toks[7].text, "B");
    }

    #[test]
    fn bad_character_offset() {
        let err = tokenize("A + $").unwrap_err();
        assert_eq!(
            err,
            ExprError::Lex {
                position: 4,
                message: "unexpected character `$`".into()
            }
        );
    }

    #[test]
    fn unknown_identifier_offset() {
        let err = tokenize("A + Omega_D").unwrap_err();
        assert_eq!(err.position(), 4);
        assert!(matches!(err, ExprError::Lex { .. }));
        // case-sensitive
        assert!(tokenize("Alpha").is_err());
        assert!(tokenize("alpha").is_ok());
    }
}
