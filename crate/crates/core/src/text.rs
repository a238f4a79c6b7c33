//! Text literals for matrices, super matrices and polynomials.
//!
//! ```text
//! [6 1 2;0 3 4;2 1 0]                  plain matrix
//! [9 0 2 | 0 1;0 1 0 | 5 0;--;1 0 0 | 2 0]   column cut after 3, row cut after 2
//! [1 2] + [0 1] * x + [3 3] * x^4      polynomial
//! ```
//!
//! Inside brackets a newline also separates rows.

use num_rational::BigRational;

use crate::error::{AlgebraError, Result};
use crate::matpoly::MatPoly;
use crate::matrix::{Matrix, Shape};
use crate::scalar::{parse_rational, render_rational, Domain};
use crate::supermatrix::{PartitionType, SuperMatrix};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Open,
    Close,
    RowSep,
    Bar,
    RowCut,
    Star,
    Plus,
    Minus,
    Word(String),
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse { line, col, msg: msg.into() }
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut depth = 0usize;
    let mut i = 0;
    let is_word = |c: char| c.is_ascii_alphanumeric() || matches!(c, '/' | '^' | '.' | '_');
    while i < chars.len() {
        let c = chars[i];
        let (l, cl) = (line, col);
        let mut push = |tok| out.push(Spanned { tok, line: l, col: cl });
        let mut width = 1;
        match c {
            '\n' => {
                if depth > 0 {
                    push(Tok::RowSep);
                }
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => {}
            '[' => {
                depth += 1;
                push(Tok::Open);
            }
            ']' => {
                if depth == 0 {
                    return Err(err(l, cl, "unmatched `]`"));
                }
                depth -= 1;
                push(Tok::Close);
            }
            ';' => push(Tok::RowSep),
            '|' => push(Tok::Bar),
            '*' => push(Tok::Star),
            '-' if chars.get(i + 1) == Some(&'-') => {
                push(Tok::RowCut);
                width = 2;
            }
            '-' | '+' if depth > 0 && chars.get(i + 1).is_some_and(|c| c.is_ascii_digit()) => {
                let mut j = i + 1;
                while j < chars.len() && is_word(chars[j]) {
                    j += 1;
                }
                push(Tok::Word(chars[i..j].iter().collect()));
                width = j - i;
            }
            '-' => push(Tok::Minus),
            '+' => push(Tok::Plus),
            c if is_word(c) => {
                let mut j = i;
                while j < chars.len() && is_word(chars[j]) {
                    j += 1;
                }
                push(Tok::Word(chars[i..j].iter().collect()));
                width = j - i;
            }
            other => return Err(err(l, cl, format!("unexpected character `{other}`"))),
        }
        i += width;
        col += width;
    }
    if depth > 0 {
        return Err(err(line, col, "missing `]`"));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

enum Item {
    Entry(BigRational),
    Bar(usize, usize),
}

impl Parser {
    fn new(text: &str) -> Result<Parser> {
        let toks = lex(text)?;
        let lines = text.lines().count().max(1);
        let last = text.lines().last().map_or(0, |l| l.chars().count());
        Ok(Parser { toks, pos: 0, end: (lines, last + 1) })
    }

    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map_or(self.end, |s| (s.line, s.col))
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect_end(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(s) => Err(err(s.line, s.col, format!("unexpected {:?} after literal", s.tok))),
        }
    }

    fn super_literal(&mut self, domain: Domain) -> Result<SuperMatrix> {
        let (l0, c0) = self.here();
        match self.next() {
            Some(Spanned { tok: Tok::Open, .. }) => {}
            _ => return Err(err(l0, c0, "expected `[`")),
        }
        // rows of items; `None` marks a `--` pseudo-row
        let mut rows: Vec<Option<Vec<Item>>> = Vec::new();
        let mut current: Vec<Item> = Vec::new();
        let mut cut_row: Option<(usize, usize)> = None;
        let flush = |rows: &mut Vec<Option<Vec<Item>>>, current: &mut Vec<Item>, cut: &mut Option<(usize, usize)>| {
            if cut.take().is_some() {
                rows.push(None);
            } else if !current.is_empty() {
                rows.push(Some(std::mem::take(current)));
            }
        };
        loop {
            let Some(s) = self.next() else {
                return Err(err(self.end.0, self.end.1, "missing `]`"));
            };
            match s.tok {
                Tok::Close => {
                    flush(&mut rows, &mut current, &mut cut_row);
                    break;
                }
                Tok::RowSep => flush(&mut rows, &mut current, &mut cut_row),
                Tok::RowCut => {
                    if !current.is_empty() || cut_row.is_some() {
                        return Err(err(s.line, s.col, "`--` must stand alone on its row"));
                    }
                    cut_row = Some((s.line, s.col));
                }
                Tok::Bar => {
                    if cut_row.is_some() {
                        return Err(err(s.line, s.col, "`--` must stand alone on its row"));
                    }
                    current.push(Item::Bar(s.line, s.col));
                }
                Tok::Word(w) => {
                    if cut_row.is_some() {
                        return Err(err(s.line, s.col, "`--` must stand alone on its row"));
                    }
                    let v = parse_rational(&w).ok_or_else(|| err(s.line, s.col, format!("invalid scalar `{w}`")))?;
                    let v = domain.normalize(v).map_err(|e| err(s.line, s.col, e.to_string()))?;
                    current.push(Item::Entry(v));
                }
                other => return Err(err(s.line, s.col, format!("unexpected {other:?} inside matrix"))),
            }
        }

        let mut values = Vec::new();
        let mut row_cuts = Vec::new();
        let mut col_cuts: Option<Vec<usize>> = None;
        let mut width: Option<usize> = None;
        let mut data_rows = 0usize;
        let mut last_was_cut = false;
        for row in rows {
            let Some(items) = row else {
                if data_rows == 0 || last_was_cut {
                    return Err(AlgebraError::InvalidPartition("row cut must lie between data rows".into()));
                }
                row_cuts.push(data_rows);
                last_was_cut = true;
                continue;
            };
            last_was_cut = false;
            let mut cuts = Vec::new();
            let mut count = 0usize;
            let mut prev_bar = true;
            for item in &items {
                match item {
                    Item::Entry(v) => {
                        values.push(v.clone());
                        count += 1;
                        prev_bar = false;
                    }
                    Item::Bar(l, c) => {
                        if prev_bar {
                            return Err(err(*l, *c, "`|` must sit between two entries"));
                        }
                        cuts.push(count);
                        prev_bar = true;
                    }
                }
            }
            if prev_bar {
                if let Some(Item::Bar(l, c)) = items.last() {
                    return Err(err(*l, *c, "`|` must sit between two entries"));
                }
            }
            data_rows += 1;
            match width {
                None => width = Some(count),
                Some(w) if w != count => {
                    return Err(err(l0, c0, format!("row {data_rows} has {count} entries, expected {w}")));
                }
                _ => {}
            }
            match &col_cuts {
                None => col_cuts = Some(cuts),
                Some(first) if *first != cuts => return Err(AlgebraError::RaggedCuts { row: data_rows }),
                _ => {}
            }
        }
        if last_was_cut {
            return Err(AlgebraError::InvalidPartition("row cut must lie between data rows".into()));
        }
        let shape = Shape::new(data_rows, width.unwrap_or(0))?;
        let base = Matrix::new(shape, domain, values)?;
        SuperMatrix::with_cuts(base, row_cuts, col_cuts.unwrap_or_default())
    }

    fn exponent(&mut self) -> Result<usize> {
        let (l, c) = self.here();
        match self.next() {
            Some(Spanned { tok: Tok::Word(w), .. }) => {
                if w == "x" {
                    return Ok(1);
                }
                w.strip_prefix("x^")
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| err(l, c, format!("expected `x` or `x^K`, found `{w}`")))
            }
            _ => Err(err(l, c, "expected `x` or `x^K`")),
        }
    }

    fn poly(&mut self, domain: Domain) -> Result<MatPoly> {
        let mut terms: Vec<(usize, SuperMatrix, bool)> = Vec::new();
        let mut negate = false;
        if matches!(self.peek().map(|s| &s.tok), Some(Tok::Minus)) {
            self.next();
            negate = true;
        }
        loop {
            let coeff = self.super_literal(domain)?;
            let mut deg = 0;
            if matches!(self.peek().map(|s| &s.tok), Some(Tok::Star)) {
                self.next();
                deg = self.exponent()?;
            }
            terms.push((deg, coeff, negate));
            match self.peek().map(|s| s.tok.clone()) {
                None => break,
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                Some(other) => {
                    let (l, c) = self.here();
                    return Err(err(l, c, format!("expected `+` or `-`, found {other:?}")));
                }
            }
            self.next();
        }
        let first = &terms[0].1;
        let ptype = first.ptype().clone();
        let shape = first.shape();
        let mut coeffs = Vec::with_capacity(terms.len());
        for (deg, coeff, neg) in terms {
            if coeff.shape() != shape {
                return Err(AlgebraError::ShapeMismatch(shape, coeff.shape()));
            }
            if coeff.ptype() != &ptype {
                return Err(AlgebraError::TypeMismatch(format!("{} vs {}", ptype, coeff.ptype())));
            }
            let m = coeff.into_base();
            coeffs.push((deg, if neg { m.neg()? } else { m }));
        }
        MatPoly::from_terms(shape, domain, Some(ptype), coeffs)
    }
}

pub fn parse_super(text: &str, domain: Domain) -> Result<SuperMatrix> {
    let mut p = Parser::new(text)?;
    let s = p.super_literal(domain)?;
    p.expect_end()?;
    Ok(s)
}

/// A plain matrix literal; partition marks are rejected.
pub fn parse_matrix(text: &str, domain: Domain) -> Result<Matrix> {
    let s = parse_super(text, domain)?;
    if !s.ptype().is_trivial() {
        return Err(AlgebraError::InvalidPartition("expected a matrix without cuts".into()));
    }
    Ok(s.into_base())
}

pub fn parse_poly(text: &str, domain: Domain) -> Result<MatPoly> {
    let mut p = Parser::new(text)?;
    if p.peek().is_none() {
        return Err(err(1, 1, "empty polynomial"));
    }
    let poly = p.poly(domain)?;
    p.expect_end()?;
    Ok(poly)
}

fn render_rows(m: &Matrix, ptype: Option<&PartitionType>) -> String {
    let mut rows = Vec::new();
    for i in 0..m.rows() {
        if ptype.is_some_and(|p| p.row_cuts().contains(&i)) {
            rows.push("--".to_string());
        }
        let mut cells = Vec::new();
        for (j, v) in m.row_values(i).iter().enumerate() {
            if ptype.is_some_and(|p| p.col_cuts().contains(&j)) {
                cells.push("|".to_string());
            }
            cells.push(render_rational(v));
        }
        rows.push(cells.join(" "));
    }
    format!("[{}]", rows.join(";"))
}

pub fn render_matrix(m: &Matrix) -> String {
    render_rows(m, None)
}

pub fn render_super(s: &SuperMatrix) -> String {
    render_rows(s.base(), Some(s.ptype()))
}

/// Ascending degrees; the zero polynomial prints as a zero matrix.
pub fn render_poly(p: &MatPoly) -> String {
    if p.is_zero() {
        return render_rows(&Matrix::zeros(p.shape(), p.domain()), p.ptype());
    }
    p.terms()
        .iter()
        .map(|(&k, m)| {
            let c = render_rows(m, p.ptype());
            match k {
                0 => c,
                1 => format!("{c} * x"),
                k => format!("{c} * x^{k}"),
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}
