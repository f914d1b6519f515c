//! Line-oriented document blocks shared by the file formats.
//!
//! A document starts with `<kind> <name>` and ends with `end`. Tokens are
//! separated by whitespace; `#` starts a comment.

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Line {
    pub no: usize,
    pub tokens: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Block {
    pub kind: String,
    pub name: String,
    pub line: usize,
    pub body: Vec<Line>,
}

pub const KINDS: [&str; 5] = ["category", "sset", "map", "diagram", "cosimplicial"];

pub fn parse_error<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

/// Identifiers: nonempty, no whitespace, no `@` or `#`.
pub fn valid_name(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(|c| c.is_whitespace() || c == '@' || c == '#')
}

pub fn blocks(text: &str) -> Result<Vec<Block>> {
    let mut out = Vec::new();
    let mut cur: Option<Block> = None;
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<String> = content.split_whitespace().map(str::to_string).collect();
        if tokens.is_empty() {
            continue;
        }
        match cur.as_mut() {
            None => {
                if !KINDS.contains(&tokens[0].as_str()) {
                    return parse_error(no, format!("expected a document header, found `{}`", tokens[0]));
                }
                if tokens.len() != 2 || !valid_name(&tokens[1]) {
                    return parse_error(no, "header must be `<kind> <name>`");
                }
                cur = Some(Block { kind: tokens[0].clone(), name: tokens[1].clone(), line: no, body: Vec::new() });
            }
            Some(b) => {
                if tokens.len() == 1 && tokens[0] == "end" {
                    out.push(cur.take().unwrap());
                } else {
                    b.body.push(Line { no, tokens });
                }
            }
        }
    }
    if let Some(b) = cur {
        return parse_error(b.line, format!("document `{}` is missing `end`", b.name));
    }
    Ok(out)
}

pub fn parse_usize(line: &Line, tok: &str) -> Result<usize> {
    tok.parse().or_else(|_| parse_error(line.no, format!("expected a number, found `{tok}`")))
}
