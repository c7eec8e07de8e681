//! A small expression language for nets and set predicates.
//!
//! ```text
//! expr    := "if" expr "then" expr "else" expr | or
//! or      := and ("||" and)*
//! and     := cmp ("&&" cmp)*
//! cmp     := add (("==" | "!=" | "<" | "<=" | ">" | ">=") add)?
//! add     := mul (("+" | "-") mul)*
//! mul     := unary (("*" | "/" | "%") unary)*
//! unary   := ("!" | "-") unary | primary
//! primary := number | coord | name "(" expr ("," expr)* ")" | "(" expr ")"
//! ```
//!
//! Coordinates are `x1 … xd`; on one-dimensional families `n` is an alias for
//! `x1`. Functions: `abs`, `min`, `max`, `pow`, `sin`, and the predicate
//! `divides(b, a)` (true when `b` divides `a`).
//!
//! Integers stay exact under `+ - * %`, `abs`, `min`, `max` and `pow` with a
//! non-negative integer exponent, so divisibility and equality tests are exact.
//! `/` and `sin` produce doubles; integer overflow falls back to doubles.

use std::fmt;

use thiserror::Error;

use crate::directed::Element;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Type {
    Num,
    Bool,
}

impl fmt::Display for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Type::Num => "number",
            Type::Bool => "boolean",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Rem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmpOp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LogicOp {
    And,
    Or,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Abs,
    Min,
    Max,
    Pow,
    Sin,
    Divides,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "abs" => Func::Abs,
            "min" => Func::Min,
            "max" => Func::Max,
            "pow" => Func::Pow,
            "sin" => Func::Sin,
            "divides" => Func::Divides,
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            Func::Abs => "abs",
            Func::Min => "min",
            Func::Max => "max",
            Func::Pow => "pow",
            Func::Sin => "sin",
            Func::Divides => "divides",
        }
    }

    fn arity(self) -> usize {
        match self {
            Func::Abs | Func::Sin => 1,
            Func::Min | Func::Max | Func::Pow | Func::Divides => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(i64),
    Real(f64),
    /// Zero-based coordinate index.
    Coord(usize),
    Neg(Box<Expr>),
    Not(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Compare(CmpOp, Box<Expr>, Box<Expr>),
    Logic(LogicOp, Box<Expr>, Box<Expr>),
    If(Box<Expr>, Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
}

impl Expr {
    pub fn ty(&self) -> Type {
        match self {
            Expr::Not(_) | Expr::Compare(..) | Expr::Logic(..) => Type::Bool,
            Expr::Call(Func::Divides, _) => Type::Bool,
            Expr::If(_, then, _) => then.ty(),
            _ => Type::Num,
        }
    }
}

/// Fully parenthesized rendering; parsing it yields the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(i) => write!(f, "{i}"),
            Expr::Real(r) => write!(f, "{r:?}"),
            Expr::Coord(i) => write!(f, "x{}", i + 1),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Not(e) => write!(f, "(!{e})"),
            Expr::Binary(op, l, r) => {
                let s = match op {
                    BinOp::Add => "+",
                    BinOp::Sub => "-",
                    BinOp::Mul => "*",
                    BinOp::Div => "/",
                    BinOp::Rem => "%",
                };
                write!(f, "({l} {s} {r})")
            }
            Expr::Compare(op, l, r) => {
                let s = match op {
                    CmpOp::Eq => "==",
                    CmpOp::Ne => "!=",
                    CmpOp::Lt => "<",
                    CmpOp::Le => "<=",
                    CmpOp::Gt => ">",
                    CmpOp::Ge => ">=",
                };
                write!(f, "({l} {s} {r})")
            }
            Expr::Logic(op, l, r) => {
                let s = match op {
                    LogicOp::And => "&&",
                    LogicOp::Or => "||",
                };
                write!(f, "({l} {s} {r})")
            }
            Expr::If(c, a, b) => write!(f, "(if {c} then {a} else {b})"),
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {line}:{col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("type error at {line}:{col}: {message}")]
    Type { line: usize, col: usize, message: String },
    #[error("unknown identifier `{name}` at {line}:{col}")]
    UnknownIdentifier { line: usize, col: usize, name: String },
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum EvalError {
    #[error("division by zero at {element}")]
    DivisionByZero { element: String },
    #[error("value out of double range at {element}")]
    Overflow { element: String },
    #[error("undefined value at {element}")]
    Undefined { element: String },
    #[error("expression uses coordinate x{needed} but the element {element} has arity {arity}")]
    Arity { needed: usize, arity: usize, element: String },
}

// ---------------------------------------------------------------------------
// Lexer

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Real(f64),
    Ident(String),
    If,
    Then,
    Else,
    Plus,
    Minus,
    Star,
    Slash,
    Percent,
    LParen,
    RParen,
    Comma,
    EqEq,
    NotEq,
    Lt,
    Le,
    Gt,
    Ge,
    AndAnd,
    OrOr,
    Bang,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Int(i) => return write!(f, "`{i}`"),
            Tok::Real(r) => return write!(f, "`{r}`"),
            Tok::Ident(s) => return write!(f, "`{s}`"),
            Tok::If => "`if`",
            Tok::Then => "`then`",
            Tok::Else => "`else`",
            Tok::Plus => "`+`",
            Tok::Minus => "`-`",
            Tok::Star => "`*`",
            Tok::Slash => "`/`",
            Tok::Percent => "`%`",
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
            Tok::Comma => "`,`",
            Tok::EqEq => "`==`",
            Tok::NotEq => "`!=`",
            Tok::Lt => "`<`",
            Tok::Le => "`<=`",
            Tok::Gt => "`>`",
            Tok::Ge => "`>=`",
            Tok::AndAnd => "`&&`",
            Tok::OrOr => "`||`",
            Tok::Bang => "`!`",
            Tok::Eof => "end of input",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    col: usize,
}

fn syntax(pos: Pos, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line: pos.line,
        col: pos.col,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            let mut real = false;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                real = true;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    real = true;
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let text: String = chars[start..i].iter().collect();
            if real {
                Tok::Real(text.parse().map_err(|_| syntax(pos, format!("malformed number `{text}`")))?)
            } else {
                Tok::Int(text.parse().map_err(|_| syntax(pos, format!("integer `{text}` is too large")))?)
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            match word.as_str() {
                "if" => Tok::If,
                "then" => Tok::Then,
                "else" => Tok::Else,
                _ => Tok::Ident(word),
            }
        } else {
            let next = chars.get(i + 1).copied();
            let (tok, width) = match (c, next) {
                ('=', Some('=')) => (Tok::EqEq, 2),
                ('!', Some('=')) => (Tok::NotEq, 2),
                ('<', Some('=')) => (Tok::Le, 2),
                ('>', Some('=')) => (Tok::Ge, 2),
                ('&', Some('&')) => (Tok::AndAnd, 2),
                ('|', Some('|')) => (Tok::OrOr, 2),
                ('<', _) => (Tok::Lt, 1),
                ('>', _) => (Tok::Gt, 1),
                ('!', _) => (Tok::Bang, 1),
                ('+', _) => (Tok::Plus, 1),
                ('-', _) => (Tok::Minus, 1),
                ('*', _) => (Tok::Star, 1),
                ('/', _) => (Tok::Slash, 1),
                ('%', _) => (Tok::Percent, 1),
                ('(', _) => (Tok::LParen, 1),
                (')', _) => (Tok::RParen, 1),
                (',', _) => (Tok::Comma, 1),
                _ => return Err(syntax(pos, format!("unexpected character `{c}`"))),
            };
            i += width;
            tok
        };
        col += i - start;
        out.push((tok, pos));
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

// ---------------------------------------------------------------------------
// Parser

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    arity: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(self.pos(), format!("expected {want}, found {}", self.peek())))
        }
    }

    fn require(&self, e: &Expr, pos: Pos, want: Type, context: &str) -> Result<(), ParseError> {
        if e.ty() == want {
            Ok(())
        } else {
            Err(ParseError::Type {
                line: pos.line,
                col: pos.col,
                message: format!("{context} expects a {want}, found a {}", e.ty()),
            })
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::If {
            self.bump();
            let cpos = self.pos();
            let cond = self.expr()?;
            self.require(&cond, cpos, Type::Bool, "`if` condition")?;
            self.expect(Tok::Then)?;
            let then = self.expr()?;
            self.expect(Tok::Else)?;
            let epos = self.pos();
            let other = self.expr()?;
            self.require(&other, epos, then.ty(), "`else` branch")?;
            return Ok(Expr::If(Box::new(cond), Box::new(then), Box::new(other)));
        }
        self.or()
    }

    fn logic_chain(
        &mut self,
        tok: Tok,
        op: LogicOp,
        next: fn(&mut Self) -> Result<Expr, ParseError>,
    ) -> Result<Expr, ParseError> {
        let lpos = self.pos();
        let mut lhs = next(self)?;
        while *self.peek() == tok {
            self.require(&lhs, lpos, Type::Bool, &format!("{tok}"))?;
            self.bump();
            let rpos = self.pos();
            let rhs = next(self)?;
            self.require(&rhs, rpos, Type::Bool, &format!("{tok}"))?;
            lhs = Expr::Logic(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Expr, ParseError> {
        self.logic_chain(Tok::OrOr, LogicOp::Or, Self::and)
    }

    fn and(&mut self) -> Result<Expr, ParseError> {
        self.logic_chain(Tok::AndAnd, LogicOp::And, Self::cmp)
    }

    fn cmp_op(&self) -> Option<CmpOp> {
        Some(match self.peek() {
            Tok::EqEq => CmpOp::Eq,
            Tok::NotEq => CmpOp::Ne,
            Tok::Lt => CmpOp::Lt,
            Tok::Le => CmpOp::Le,
            Tok::Gt => CmpOp::Gt,
            Tok::Ge => CmpOp::Ge,
            _ => return None,
        })
    }

    fn cmp(&mut self) -> Result<Expr, ParseError> {
        let lpos = self.pos();
        let lhs = self.add()?;
        let Some(op) = self.cmp_op() else {
            return Ok(lhs);
        };
        self.require(&lhs, lpos, Type::Num, "comparison")?;
        self.bump();
        let rpos = self.pos();
        let rhs = self.add()?;
        self.require(&rhs, rpos, Type::Num, "comparison")?;
        if self.cmp_op().is_some() {
            return Err(syntax(self.pos(), "comparisons do not chain; combine them with `&&`"));
        }
        Ok(Expr::Compare(op, Box::new(lhs), Box::new(rhs)))
    }

    fn arith_chain(
        &mut self,
        ops: &[(Tok, BinOp)],
        next: fn(&mut Self) -> Result<Expr, ParseError>,
    ) -> Result<Expr, ParseError> {
        let lpos = self.pos();
        let mut lhs = next(self)?;
        while let Some(&(_, op)) = ops.iter().find(|(t, _)| t == self.peek()) {
            let tok = self.bump();
            self.require(&lhs, lpos, Type::Num, &format!("{tok}"))?;
            let rpos = self.pos();
            let rhs = next(self)?;
            self.require(&rhs, rpos, Type::Num, &format!("{tok}"))?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn add(&mut self) -> Result<Expr, ParseError> {
        self.arith_chain(&[(Tok::Plus, BinOp::Add), (Tok::Minus, BinOp::Sub)], Self::mul)
    }

    fn mul(&mut self) -> Result<Expr, ParseError> {
        self.arith_chain(
            &[(Tok::Star, BinOp::Mul), (Tok::Slash, BinOp::Div), (Tok::Percent, BinOp::Rem)],
            Self::unary,
        )
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Tok::Bang => {
                self.bump();
                let pos = self.pos();
                let e = self.unary()?;
                self.require(&e, pos, Type::Bool, "`!`")?;
                Ok(Expr::Not(Box::new(e)))
            }
            Tok::Minus => {
                self.bump();
                let pos = self.pos();
                let e = self.unary()?;
                self.require(&e, pos, Type::Num, "unary `-`")?;
                Ok(Expr::Neg(Box::new(e)))
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(i) => Ok(Expr::Int(i)),
            Tok::Real(r) => Ok(Expr::Real(r)),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                if *self.peek() == Tok::LParen {
                    return self.call(name, pos);
                }
                self.coordinate(&name)
                    .map(Expr::Coord)
                    .ok_or(ParseError::UnknownIdentifier {
                        line: pos.line,
                        col: pos.col,
                        name,
                    })
            }
            other => Err(syntax(pos, format!("expected an expression, found {other}"))),
        }
    }

    fn coordinate(&self, name: &str) -> Option<usize> {
        if name == "n" && self.arity == 1 {
            return Some(0);
        }
        let k: usize = name.strip_prefix('x')?.parse().ok()?;
        (1..=self.arity).contains(&k).then(|| k - 1)
    }

    fn call(&mut self, name: String, pos: Pos) -> Result<Expr, ParseError> {
        let func = Func::from_name(&name).ok_or_else(|| ParseError::UnknownIdentifier {
            line: pos.line,
            col: pos.col,
            name: name.clone(),
        })?;
        self.expect(Tok::LParen)?;
        let mut args = Vec::new();
        loop {
            let apos = self.pos();
            let a = self.expr()?;
            self.require(&a, apos, Type::Num, &format!("argument of `{name}`"))?;
            args.push(a);
            if *self.peek() == Tok::Comma {
                self.bump();
            } else {
                break;
            }
        }
        self.expect(Tok::RParen)?;
        if args.len() != func.arity() {
            return Err(syntax(
                pos,
                format!("`{name}` takes {} argument(s), found {}", func.arity(), args.len()),
            ));
        }
        Ok(Expr::Call(func, args))
    }
}

/// Parses an expression over elements of the given arity.
pub fn parse_expr(src: &str, arity: usize) -> Result<Expr, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, at: 0, arity };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return Err(syntax(p.pos(), format!("unexpected {} after expression", p.peek())));
    }
    Ok(e)
}

/// Parses and checks the expression has the wanted type.
pub fn parse_typed(src: &str, arity: usize, want: Type) -> Result<Expr, ParseError> {
    let e = parse_expr(src, arity)?;
    if e.ty() != want {
        return Err(ParseError::Type {
            line: 1,
            col: 1,
            message: format!("expected a {want} expression, found a {}", e.ty()),
        });
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// Evaluation

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Value {
    Int(i64),
    Real(f64),
    Bool(bool),
}

impl Value {
    pub fn as_f64(self) -> f64 {
        match self {
            Value::Int(i) => i as f64,
            Value::Real(r) => r,
            Value::Bool(b) => f64::from(u8::from(b)),
        }
    }

    pub fn as_bool(self) -> bool {
        match self {
            Value::Bool(b) => b,
            other => other.as_f64() != 0.0,
        }
    }
}

struct Eval<'a> {
    coords: &'a [u64],
    elem: &'a Element,
}

impl Eval<'_> {
    fn at(&self) -> String {
        self.elem.to_string()
    }

    fn real(&self, r: f64) -> Result<Value, EvalError> {
        if r.is_nan() {
            Err(EvalError::Undefined { element: self.at() })
        } else if r.is_infinite() {
            Err(EvalError::Overflow { element: self.at() })
        } else {
            Ok(Value::Real(r))
        }
    }

    fn num(&self, e: &Expr) -> Result<Value, EvalError> {
        self.eval(e)
    }

    fn eval(&self, e: &Expr) -> Result<Value, EvalError> {
        match e {
            Expr::Int(i) => Ok(Value::Int(*i)),
            Expr::Real(r) => Ok(Value::Real(*r)),
            Expr::Coord(k) => {
                let c = *self.coords.get(*k).ok_or(EvalError::Arity {
                    needed: k + 1,
                    arity: self.coords.len(),
                    element: self.at(),
                })?;
                Ok(i64::try_from(c).map_or(Value::Real(c as f64), Value::Int))
            }
            Expr::Neg(a) => match self.num(a)? {
                Value::Int(i) => Ok(i.checked_neg().map_or(Value::Real(-(i as f64)), Value::Int)),
                v => self.real(-v.as_f64()),
            },
            Expr::Not(a) => Ok(Value::Bool(!self.eval(a)?.as_bool())),
            Expr::Binary(op, a, b) => {
                let (x, y) = (self.num(a)?, self.num(b)?);
                self.binary(*op, x, y)
            }
            Expr::Compare(op, a, b) => {
                let (x, y) = (self.num(a)?, self.num(b)?);
                let ord = match (x, y) {
                    (Value::Int(i), Value::Int(j)) => i.partial_cmp(&j),
                    _ => x.as_f64().partial_cmp(&y.as_f64()),
                };
                let Some(ord) = ord else {
                    return Err(EvalError::Undefined { element: self.at() });
                };
                use std::cmp::Ordering::*;
                Ok(Value::Bool(match op {
                    CmpOp::Eq => ord == Equal,
                    CmpOp::Ne => ord != Equal,
                    CmpOp::Lt => ord == Less,
                    CmpOp::Le => ord != Greater,
                    CmpOp::Gt => ord == Greater,
                    CmpOp::Ge => ord != Less,
                }))
            }
            Expr::Logic(op, a, b) => {
                let x = self.eval(a)?.as_bool();
                Ok(Value::Bool(match op {
                    LogicOp::And => x && self.eval(b)?.as_bool(),
                    LogicOp::Or => x || self.eval(b)?.as_bool(),
                }))
            }
            Expr::If(c, a, b) => {
                if self.eval(c)?.as_bool() {
                    self.eval(a)
                } else {
                    self.eval(b)
                }
            }
            Expr::Call(func, args) => {
                let vals = args.iter().map(|a| self.num(a)).collect::<Result<Vec<_>, _>>()?;
                self.call(*func, &vals)
            }
        }
    }

    fn binary(&self, op: BinOp, x: Value, y: Value) -> Result<Value, EvalError> {
        if let (Value::Int(i), Value::Int(j)) = (x, y) {
            let exact = match op {
                BinOp::Add => i.checked_add(j),
                BinOp::Sub => i.checked_sub(j),
                BinOp::Mul => i.checked_mul(j),
                BinOp::Rem => {
                    if j == 0 {
                        return Err(EvalError::DivisionByZero { element: self.at() });
                    }
                    i.checked_rem_euclid(j)
                }
                BinOp::Div => None,
            };
            if let Some(v) = exact {
                return Ok(Value::Int(v));
            }
        }
        let (a, b) = (x.as_f64(), y.as_f64());
        let r = match op {
            BinOp::Add => a + b,
            BinOp::Sub => a - b,
            BinOp::Mul => a * b,
            BinOp::Div | BinOp::Rem if b == 0.0 => {
                return Err(EvalError::DivisionByZero { element: self.at() });
            }
            BinOp::Div => a / b,
            BinOp::Rem => a.rem_euclid(b),
        };
        self.real(r)
    }

    fn call(&self, func: Func, v: &[Value]) -> Result<Value, EvalError> {
        match (func, v) {
            (Func::Abs, [Value::Int(i)]) => Ok(i.checked_abs().map_or(Value::Real((*i as f64).abs()), Value::Int)),
            (Func::Abs, [x]) => self.real(x.as_f64().abs()),
            (Func::Min, [Value::Int(i), Value::Int(j)]) => Ok(Value::Int(*i.min(j))),
            (Func::Max, [Value::Int(i), Value::Int(j)]) => Ok(Value::Int(*i.max(j))),
            (Func::Min, [x, y]) => self.real(x.as_f64().min(y.as_f64())),
            (Func::Max, [x, y]) => self.real(x.as_f64().max(y.as_f64())),
            (Func::Pow, [Value::Int(b), Value::Int(e)]) if *e >= 0 => {
                let exact = u32::try_from(*e).ok().and_then(|e| b.checked_pow(e));
                match exact {
                    Some(p) => Ok(Value::Int(p)),
                    None => self.real((*b as f64).powf(*e as f64)),
                }
            }
            (Func::Pow, [x, y]) => self.real(x.as_f64().powf(y.as_f64())),
            (Func::Sin, [x]) => self.real(x.as_f64().sin()),
            (Func::Divides, [b, a]) => {
                if b.as_f64() == 0.0 {
                    return Err(EvalError::DivisionByZero { element: self.at() });
                }
                match (b, a) {
                    (Value::Int(b), Value::Int(a)) => Ok(Value::Bool(a.rem_euclid(*b) == 0)),
                    _ => Ok(Value::Bool(a.as_f64().rem_euclid(b.as_f64()) == 0.0)),
                }
            }
            _ => unreachable!("arity checked at parse time"),
        }
    }
}

pub fn eval_expr(e: &Expr, elem: &Element) -> Result<Value, EvalError> {
    Eval {
        coords: elem.coords(),
        elem,
    }
    .eval(e)
}
