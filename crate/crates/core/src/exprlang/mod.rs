//! A small expression language for elements of the algebra.
//!
//! Grammar (whitespace-insensitive, byte offsets in errors):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | juxtaposition) factor)*
//! factor := '-' factor | atom ('^' INT)?
//! atom   := IDENT | INT ('/' INT)? | '(' expr ')'
//!         | '[' expr ',' expr ']' | '{' expr ',' expr '}'
//! ```
//!
//! Juxtaposition multiplies (`2 A B` is `2*A*B`) but never binds a leading
//! `-`, so `A - B` is subtraction. `^` binds tighter than both, and unary
//! minus binds looser than `^` (`-A^2` is `-(A^2)`). Identifiers are the
//! twelve named elements; `C` and `gamma` expand through their dictionary,
//! so parsing yields a plain free-algebra polynomial, unreduced.

mod lexer;
mod parser;
mod printer;

use std::error::Error;
use std::fmt;

use crate::freealg::{NcPoly, Scalar};
use crate::racah::{Name, Racah};

pub use lexer::{tokenize, Token, TokenKind};
pub use printer::print_canonical;

/// Parse tree over the node set the language supports.
#[derive(Clone, Debug, PartialEq)]
pub enum ExprAst {
    Sum(Vec<ExprAst>),
    Product(Vec<ExprAst>),
    Power(Box<ExprAst>, u32),
    Neg(Box<ExprAst>),
    Commutator(Box<ExprAst>, Box<ExprAst>),
    Anticommutator(Box<ExprAst>, Box<ExprAst>),
    Scalar(Scalar),
    Named(Name),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprError {
    /// Bad character or unknown identifier; `position` is the byte offset
    /// of the first offending byte.
    Lex { position: usize, message: String },
    /// Grammar violation at `position`.
    Parse { position: usize, message: String },
    /// Rational literal with denominator zero.
    ZeroDenominator { position: usize },
}

impl ExprError {
    pub fn position(&self) -> usize {
        match self {
            ExprError::Lex { position, .. }
            | ExprError::Parse { position, .. }
            | ExprError::ZeroDenominator { position } => *position,
        }
    }
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::Lex { position, message } => {
                write!(f, "lex error at byte {position}: {message}")
            }
            ExprError::Parse { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
            ExprError::ZeroDenominator { position } => {
                write!(f, "zero denominator at byte {position}")
            }
        }
    }
}

impl Error for ExprError {}

/// Parse `input` to a syntax tree.
pub fn parse_ast(input: &str) -> Result<ExprAst, ExprError> {
    let tokens = tokenize(input)?;
    parser::parse_tokens(&tokens, input.len())
}

/// Evaluate a tree to an unreduced free-algebra polynomial. Named
/// identifiers expand to their canonical values.
pub fn eval(cx: &Racah, ast: &ExprAst) -> NcPoly {
    use crate::freealg::{anticommutator, commutator, Word};
    match ast {
        ExprAst::Sum(items) => items
            .iter()
            .fold(NcPoly::zero(), |acc, item| acc + eval(cx, item)),
        ExprAst::Product(items) => items
            .iter()
            .fold(NcPoly::one(), |acc, item| acc * eval(cx, item)),
        ExprAst::Power(base, n) => eval(cx, base).pow(*n),
        ExprAst::Neg(inner) => -eval(cx, inner),
        ExprAst::Commutator(l, r) => commutator(&eval(cx, l), &eval(cx, r)),
        ExprAst::Anticommutator(l, r) => anticommutator(&eval(cx, l), &eval(cx, r)),
        ExprAst::Scalar(c) => NcPoly::term(Word::empty(), c.clone()),
        ExprAst::Named(name) => cx.named(*name).clone(),
    }
}

/// Parse `input` to an unreduced free-algebra polynomial.
pub fn parse(cx: &Racah, input: &str) -> Result<NcPoly, ExprError> {
    Ok(eval(cx, &parse_ast(input)?))
}
