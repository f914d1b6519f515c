//! The expression language: lexer, LL(1) parser and pretty-printer.
//!
//! ```text
//! expr   := NUMBER | STRING | IDENT | call | record
//! call   := KEYWORD [ '[' IDENT ']' ] '(' [ expr { ',' expr } ] ')'
//! record := '{' [ key ':' expr { ',' key ':' expr } ] '}'
//! key    := IDENT | STRING
//! ```

use std::fmt;

/// 1-based position in the source text.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Code {
    Lex,
    Syntax,
    Arity,
    Unbound,
    Eval,
}

impl Code {
    pub fn as_str(self) -> &'static str {
        match self {
            Code::Lex => "E-LEX",
            Code::Syntax => "E-SYN",
            Code::Arity => "E-ARITY",
            Code::Unbound => "E-UNBOUND",
            Code::Eval => "E-EVAL",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub code: Code,
    pub pos: Pos,
    pub message: String,
    /// Tokens that would have been accepted, for syntax errors.
    pub expected: Vec<String>,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.code.as_str(), self.pos, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for Diagnostic {}

fn diag(code: Code, pos: Pos, message: impl Into<String>) -> Diagnostic {
    Diagnostic { code, pos, message: message.into(), expected: Vec::new() }
}

/// Reserved words, each with the argument counts it accepts.
pub const KEYWORDS: &[(&str, &[usize])] = &[
    ("simplex", &[1]),
    ("boundary", &[1]),
    ("horn", &[2]),
    ("point", &[0]),
    ("nerve", &[1]),
    ("terminal", &[0]),
    ("arrow", &[0]),
    ("span", &[0]),
    ("cyclic", &[1]),
    ("opposite", &[1]),
    ("product", &[2]),
    ("coproduct", &[2]),
    ("exponential", &[2]),
    ("quotient", &[2]),
    ("identity", &[1]),
    ("to_point", &[1]),
    ("compose", &[2]),
    ("comparison", &[1]),
    ("diagram", &[2]),
    ("constant", &[2]),
    ("full", &[1]),
    ("overcat", &[2]),
    ("resolution", &[1]),
    ("constant_resolution", &[1]),
    ("hocolim", &[1, 2]),
    ("canonical_hocolim", &[2, 3]),
    ("re_q_sing", &[2]),
    ("colim", &[1]),
    ("homology", &[1]),
    ("check_we", &[1]),
    ("hocored_check", &[1]),
    ("verify", &[1]),
];

/// Keywords that take a `[method]` suffix.
pub const WITH_METHOD: &[&str] = &["hocolim", "canonical_hocolim"];

pub fn arities(keyword: &str) -> Option<&'static [usize]> {
    KEYWORDS.iter().find(|(k, _)| *k == keyword).map(|(_, a)| *a)
}

#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

/// Positions are ignored by equality.
impl PartialEq for Expr {
    fn eq(&self, other: &Expr) -> bool {
        self.kind == other.kind
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Number(u64),
    Str(String),
    Ident(String),
    Call { op: String, method: Option<String>, args: Vec<Expr> },
    Record(Vec<(String, Expr)>),
}

impl Expr {
    pub fn new(kind: ExprKind) -> Expr {
        Expr { kind, pos: Pos::default() }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Number(u64),
    Str(String),
    Ident(String),
    Keyword(String),
    Punct(char),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Number(n) => format!("number {n}"),
            Tok::Str(s) => format!("string {s:?}"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Keyword(s) => format!("keyword `{s}`"),
            Tok::Punct(c) => format!("`{c}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

pub fn is_keyword(s: &str) -> bool {
    arities(s).is_some()
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, Diagnostic> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    let advance = |c: char, line: &mut usize, column: &mut usize| {
        if c == '\n' {
            *line += 1;
            *column = 1;
        } else {
            *column += 1;
        }
    };
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        if c.is_whitespace() {
            chars.next();
            advance(c, &mut line, &mut column);
        } else if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
                advance(c, &mut line, &mut column);
            }
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                chars.next();
                advance(d, &mut line, &mut column);
            }
            if chars.peek().is_some_and(|&d| is_ident_start(d)) {
                return Err(diag(Code::Lex, pos, format!("malformed number `{s}{}`", chars.peek().unwrap())));
            }
            let n = s.parse().map_err(|_| diag(Code::Lex, pos, format!("number `{s}` is too large")))?;
            out.push((Tok::Number(n), pos));
        } else if is_ident_start(c) {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !is_ident_char(d) {
                    break;
                }
                s.push(d);
                chars.next();
                advance(d, &mut line, &mut column);
            }
            out.push((if is_keyword(&s) { Tok::Keyword(s) } else { Tok::Ident(s) }, pos));
        } else if c == '"' {
            chars.next();
            advance(c, &mut line, &mut column);
            let mut s = String::new();
            loop {
                match chars.next() {
                    None | Some('\n') => return Err(diag(Code::Lex, pos, "unterminated string")),
                    Some('"') => {
                        advance('"', &mut line, &mut column);
                        break;
                    }
                    Some('\\') => {
                        advance('\\', &mut line, &mut column);
                        match chars.next() {
                            Some(e @ ('"' | '\\')) => {
                                advance(e, &mut line, &mut column);
                                s.push(e);
                            }
                            _ => return Err(diag(Code::Lex, Pos { line, column }, "bad escape in string")),
                        }
                    }
                    Some(d) => {
                        advance(d, &mut line, &mut column);
                        s.push(d);
                    }
                }
            }
            out.push((Tok::Str(s), pos));
        } else if "()[]{},:".contains(c) {
            chars.next();
            advance(c, &mut line, &mut column);
            out.push((Tok::Punct(c), pos));
        } else {
            return Err(diag(Code::Lex, pos, format!("unexpected character `{c}`")));
        }
    }
    out.push((Tok::Eof, Pos { line, column }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &(Tok, Pos) {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&str]) -> Diagnostic {
        let (t, pos) = self.peek();
        Diagnostic {
            code: Code::Syntax,
            pos: *pos,
            message: format!("unexpected {}", t.describe()),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect(&mut self, c: char) -> Result<Pos, Diagnostic> {
        match self.peek() {
            (Tok::Punct(d), pos) if *d == c => {
                let pos = *pos;
                self.bump();
                Ok(pos)
            }
            _ => Err(self.unexpected(&[&format!("`{c}`")])),
        }
    }

    fn expr(&mut self) -> Result<Expr, Diagnostic> {
        let (tok, pos) = self.peek().clone();
        match tok {
            Tok::Number(n) => {
                self.bump();
                Ok(Expr { kind: ExprKind::Number(n), pos })
            }
            Tok::Str(s) => {
                self.bump();
                Ok(Expr { kind: ExprKind::Str(s), pos })
            }
            Tok::Ident(s) => {
                self.bump();
                Ok(Expr { kind: ExprKind::Ident(s), pos })
            }
            Tok::Keyword(op) => {
                self.bump();
                self.call(op, pos)
            }
            Tok::Punct('{') => {
                self.bump();
                self.record(pos)
            }
            _ => Err(self.unexpected(&["number", "string", "identifier", "keyword", "`{`"])),
        }
    }

    fn call(&mut self, op: String, pos: Pos) -> Result<Expr, Diagnostic> {
        let mut method = None;
        if let (Tok::Punct('['), bpos) = self.peek().clone() {
            if !WITH_METHOD.contains(&op.as_str()) {
                return Err(diag(Code::Syntax, bpos, format!("`{op}` takes no method")));
            }
            self.bump();
            match self.bump() {
                (Tok::Ident(m), _) => method = Some(m),
                (t, p) => return Err(Diagnostic { code: Code::Syntax, pos: p, message: format!("unexpected {}", t.describe()), expected: vec!["method name".into()] }),
            }
            self.expect(']')?;
        }
        if !matches!(self.peek().0, Tok::Punct('(')) {
            let mut expected = vec!["`(`"];
            if method.is_none() && WITH_METHOD.contains(&op.as_str()) {
                expected.insert(0, "`[`");
            }
            return Err(self.unexpected(&expected));
        }
        self.bump();
        let mut args = Vec::new();
        if !matches!(self.peek().0, Tok::Punct(')')) {
            loop {
                args.push(self.expr()?);
                match self.peek().0 {
                    Tok::Punct(',') => {
                        self.bump();
                    }
                    Tok::Punct(')') => break,
                    _ => return Err(self.unexpected(&["`,`", "`)`"])),
                }
            }
        }
        self.bump();
        let allowed = arities(&op).expect("keyword");
        if !allowed.contains(&args.len()) {
            let want = allowed.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" or ");
            return Err(diag(Code::Arity, pos, format!("`{op}` takes {want} argument(s), got {}", args.len())));
        }
        Ok(Expr { kind: ExprKind::Call { op, method, args }, pos })
    }

    fn record(&mut self, pos: Pos) -> Result<Expr, Diagnostic> {
        let mut entries = Vec::new();
        if !matches!(self.peek().0, Tok::Punct('}')) {
            loop {
                let key = match self.bump() {
                    (Tok::Ident(k) | Tok::Str(k), _) => k,
                    (t, p) => return Err(Diagnostic { code: Code::Syntax, pos: p, message: format!("unexpected {}", t.describe()), expected: vec!["identifier".into(), "string".into()] }),
                };
                self.expect(':')?;
                entries.push((key, self.expr()?));
                match self.peek().0 {
                    Tok::Punct(',') => {
                        self.bump();
                    }
                    Tok::Punct('}') => break,
                    _ => return Err(self.unexpected(&["`,`", "`}`"])),
                }
            }
        }
        self.bump();
        Ok(Expr { kind: ExprKind::Record(entries), pos })
    }
}

pub fn parse(text: &str) -> Result<Expr, Diagnostic> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let e = p.expr()?;
    if p.peek().0 != Tok::Eof {
        return Err(p.unexpected(&["end of input"]));
    }
    Ok(e)
}

fn is_plain_ident(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(is_ident_start) && cs.all(is_ident_char) && !is_keyword(s)
}

fn write_str(s: &str, out: &mut String) {
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
}

fn write_expr(e: &Expr, out: &mut String) {
    match &e.kind {
        ExprKind::Number(n) => out.push_str(&n.to_string()),
        ExprKind::Str(s) => write_str(s, out),
        ExprKind::Ident(s) => out.push_str(s),
        ExprKind::Call { op, method, args } => {
            out.push_str(op);
            if let Some(m) = method {
                out.push('[');
                out.push_str(m);
                out.push(']');
            }
            out.push('(');
            for (k, a) in args.iter().enumerate() {
                if k > 0 {
                    out.push_str(", ");
                }
                write_expr(a, out);
            }
            out.push(')');
        }
        ExprKind::Record(entries) => {
            out.push('{');
            for (k, (key, v)) in entries.iter().enumerate() {
                if k > 0 {
                    out.push_str(", ");
                }
                if is_plain_ident(key) {
                    out.push_str(key);
                } else {
                    write_str(key, out);
                }
                out.push_str(": ");
                write_expr(v, out);
            }
            out.push('}');
        }
    }
}

/// Canonical one-line rendering; `parse(&print(e)) == e`.
pub fn print(e: &Expr) -> String {
    let mut s = String::new();
    write_expr(e, &mut s);
    s
}

/// Identifiers in `e` that `bound` rejects, as unbound-identifier diagnostics.
pub fn check_bound(e: &Expr, bound: &dyn Fn(&str) -> bool) -> Result<(), Diagnostic> {
    match &e.kind {
        ExprKind::Ident(s) if !bound(s) => Err(diag(Code::Unbound, e.pos, format!("unbound identifier `{s}`"))),
        ExprKind::Call { args, .. } => args.iter().try_for_each(|a| check_bound(a, bound)),
        ExprKind::Record(entries) => entries.iter().try_for_each(|(_, v)| check_bound(v, bound)),
        _ => Ok(()),
    }
}

pub fn eval_error(pos: Pos, message: impl Into<String>) -> Diagnostic {
    diag(Code::Eval, pos, message)
}
