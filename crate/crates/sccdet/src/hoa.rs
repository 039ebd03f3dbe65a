//! Reading and writing automata in the HOA v1 text format.
//!
//! Edge labels over atomic propositions are expanded to an explicit alphabet
//! where letter `i` assigns AP `j` the value of bit `j` of `i`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use sccdet_core::{normalize, Acceptance, BitSet, Dela, Nba, RawBuchi};

/// Largest number of atomic propositions accepted by [`explicit_alphabet`].
pub const AP_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HoaError {
    #[error("{line}:{col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("missing mandatory header `{0}:`")]
    MissingHeader(&'static str),
    #[error("multiple start states are not supported")]
    MultipleStart,
    #[error("{count} atomic propositions exceed the cap of {cap}")]
    ApCap { count: usize, cap: usize },
    #[error("acceptance `{0}` is not Buchi")]
    NotBuchi(String),
    #[error("state {state} has {count} successors on letter {letter}, expected exactly one")]
    NotDeterministic {
        state: u32,
        letter: u32,
        count: usize,
    },
    #[error("alphabet of size {alphabet_size} does not match {ap_count} atomic propositions")]
    AlphabetMismatch {
        alphabet_size: usize,
        ap_count: usize,
    },
}

/// Boolean formula over AP indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Label {
    True,
    False,
    Ap(u32),
    Not(Box<Label>),
    And(Box<Label>, Box<Label>),
    Or(Box<Label>, Box<Label>),
}

impl Label {
    /// Value under the assignment encoded by `letter`.
    pub fn eval(&self, letter: u32) -> bool {
        match self {
            Label::True => true,
            Label::False => false,
            Label::Ap(j) => letter >> j & 1 == 1,
            Label::Not(x) => !x.eval(letter),
            Label::And(x, y) => x.eval(letter) && y.eval(letter),
            Label::Or(x, y) => x.eval(letter) || y.eval(letter),
        }
    }

    fn max_ap(&self) -> Option<u32> {
        match self {
            Label::True | Label::False => None,
            Label::Ap(j) => Some(*j),
            Label::Not(x) => x.max_ap(),
            Label::And(x, y) | Label::Or(x, y) => x.max_ap().max(y.max_ap()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoaEdge {
    pub source: u32,
    pub label: Label,
    pub target: u32,
    pub colors: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoaDocument {
    pub version: String,
    pub state_count: usize,
    pub start_states: Vec<u32>,
    pub aps: Vec<String>,
    pub acceptance_colors: usize,
    pub acceptance: Acceptance,
    pub acc_name: Option<String>,
    pub properties: Vec<String>,
    /// `tool`, `name` and unrecognized headers, values re-rendered from tokens.
    pub other_headers: Vec<(String, String)>,
    pub edges: Vec<HoaEdge>,
    /// Marks given on `State:` lines.
    pub state_colors: Vec<Option<Vec<u32>>>,
}

impl HoaDocument {
    pub fn acceptance_text(&self) -> String {
        self.acceptance.to_string()
    }

    /// Copy with body edges sorted, for structural comparison.
    pub fn canonical(&self) -> HoaDocument {
        let mut doc = self.clone();
        doc.edges.sort_by(|x, y| {
            (x.source, x.target, &x.label, &x.colors)
                .cmp(&(y.source, y.target, &y.label, &y.colors))
        });
        doc
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Header(String),
    Ident(String),
    Int(u32),
    Str(String),
    Body,
    End,
    Abort,
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, HoaError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let err = |line, col, msg: &str| HoaError::Syntax {
        line,
        col,
        msg: msg.to_string(),
    };
    macro_rules! bump {
        () => {{
            if chars[i] == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            i += 1;
        }};
    }
    while i < chars.len() {
        let c = chars[i];
        let (l, k) = (line, col);
        if c.is_whitespace() {
            bump!();
        } else if c == '/' && chars.get(i + 1) == Some(&'*') {
            // comments nest
            let mut depth = 0usize;
            loop {
                if i + 1 >= chars.len() {
                    return Err(err(l, k, "unterminated comment"));
                }
                if chars[i] == '/' && chars[i + 1] == '*' {
                    depth += 1;
                    bump!();
                    bump!();
                } else if chars[i] == '*' && chars[i + 1] == '/' {
                    depth -= 1;
                    bump!();
                    bump!();
                    if depth == 0 {
                        break;
                    }
                } else {
                    bump!();
                }
            }
        } else if c == '"' {
            bump!();
            let mut s = String::new();
            loop {
                match chars.get(i) {
                    None => return Err(err(l, k, "unterminated string")),
                    Some('"') => {
                        bump!();
                        break;
                    }
                    Some('\\') => {
                        bump!();
                        let Some(&e) = chars.get(i) else {
                            return Err(err(l, k, "unterminated string"));
                        };
                        s.push(e);
                        bump!();
                    }
                    Some(&ch) => {
                        s.push(ch);
                        bump!();
                    }
                }
            }
            out.push(Token {
                tok: Tok::Str(s),
                line: l,
                col: k,
            });
        } else if c.is_ascii_digit() {
            let mut v: u64 = 0;
            while i < chars.len() && chars[i].is_ascii_digit() {
                v = v * 10 + chars[i].to_digit(10).unwrap() as u64;
                if v > u32::MAX as u64 {
                    return Err(err(l, k, "integer too large"));
                }
                bump!();
            }
            out.push(Token {
                tok: Tok::Int(v as u32),
                line: l,
                col: k,
            });
        } else if c == '-' && chars.get(i + 1) == Some(&'-') {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '-') {
                s.push(chars[i]);
                bump!();
            }
            let tok = match s.as_str() {
                "--BODY--" => Tok::Body,
                "--END--" => Tok::End,
                "--ABORT--" => Tok::Abort,
                _ => return Err(err(l, k, &format!("unexpected `{s}`"))),
            };
            out.push(Token {
                tok,
                line: l,
                col: k,
            });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while i < chars.len()
                && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '-')
            {
                s.push(chars[i]);
                bump!();
            }
            if chars.get(i) == Some(&':') {
                bump!();
                out.push(Token {
                    tok: Tok::Header(s),
                    line: l,
                    col: k,
                });
            } else {
                out.push(Token {
                    tok: Tok::Ident(s),
                    line: l,
                    col: k,
                });
            }
        } else if "!&|()[]{}@".contains(c) {
            bump!();
            out.push(Token {
                tok: Tok::Sym(c),
                line: l,
                col: k,
            });
        } else {
            return Err(err(l, k, &format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

fn render(tok: &Tok) -> String {
    match tok {
        Tok::Header(h) => format!("{h}:"),
        Tok::Ident(s) => s.clone(),
        Tok::Int(v) => v.to_string(),
        Tok::Str(s) => format!("{s:?}"),
        Tok::Body => "--BODY--".into(),
        Tok::End => "--END--".into(),
        Tok::Abort => "--ABORT--".into(),
        Tok::Sym(c) => c.to_string(),
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    eof: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn at(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map_or(self.eof, |t| (t.line, t.col))
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, HoaError> {
        let (line, col) = self.at();
        Err(HoaError::Syntax {
            line,
            col,
            msg: msg.into(),
        })
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|t| t.tok.clone());
        self.pos += 1;
        t
    }

    fn expect_sym(&mut self, c: char) -> Result<(), HoaError> {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected `{c}`"))
        }
    }

    fn int(&mut self, what: &str) -> Result<u32, HoaError> {
        match self.peek() {
            Some(&Tok::Int(v)) => {
                self.pos += 1;
                Ok(v)
            }
            _ => self.error(format!("expected {what}")),
        }
    }

    fn eat_sym(&mut self, c: char) -> bool {
        let hit = self.peek() == Some(&Tok::Sym(c));
        if hit {
            self.pos += 1;
        }
        hit
    }

    fn label_or(&mut self) -> Result<Label, HoaError> {
        let mut x = self.label_and()?;
        while self.eat_sym('|') {
            x = Label::Or(Box::new(x), Box::new(self.label_and()?));
        }
        Ok(x)
    }

    fn label_and(&mut self) -> Result<Label, HoaError> {
        let mut x = self.label_not()?;
        while self.eat_sym('&') {
            x = Label::And(Box::new(x), Box::new(self.label_not()?));
        }
        Ok(x)
    }

    fn label_not(&mut self) -> Result<Label, HoaError> {
        if self.eat_sym('!') {
            return Ok(Label::Not(Box::new(self.label_not()?)));
        }
        match self.peek().cloned() {
            Some(Tok::Ident(s)) if s == "t" => {
                self.pos += 1;
                Ok(Label::True)
            }
            Some(Tok::Ident(s)) if s == "f" => {
                self.pos += 1;
                Ok(Label::False)
            }
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(Label::Ap(v))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let x = self.label_or()?;
                self.expect_sym(')')?;
                Ok(x)
            }
            Some(Tok::Sym('@')) => self.error("aliases are not supported"),
            _ => self.error("expected label expression"),
        }
    }

    fn acc_or(&mut self) -> Result<Acceptance, HoaError> {
        let mut x = self.acc_and()?;
        while self.eat_sym('|') {
            x = x.or(self.acc_and()?);
        }
        Ok(x)
    }

    fn acc_and(&mut self) -> Result<Acceptance, HoaError> {
        let mut x = self.acc_atom()?;
        while self.eat_sym('&') {
            x = x.and(self.acc_atom()?);
        }
        Ok(x)
    }

    fn acc_atom(&mut self) -> Result<Acceptance, HoaError> {
        match self.peek().cloned() {
            Some(Tok::Ident(s)) if s == "t" => {
                self.pos += 1;
                Ok(Acceptance::True)
            }
            Some(Tok::Ident(s)) if s == "f" => {
                self.pos += 1;
                Ok(Acceptance::False)
            }
            Some(Tok::Ident(s)) if s == "Fin" || s == "Inf" => {
                self.pos += 1;
                self.expect_sym('(')?;
                if self.peek() == Some(&Tok::Sym('!')) {
                    return self.error("complemented acceptance sets are not supported");
                }
                let c = self.int("acceptance set index")?;
                self.expect_sym(')')?;
                Ok(if s == "Fin" {
                    Acceptance::Fin(c)
                } else {
                    Acceptance::Inf(c)
                })
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let x = self.acc_or()?;
                self.expect_sym(')')?;
                Ok(x)
            }
            _ => self.error("expected acceptance condition"),
        }
    }

    fn colors(&mut self, limit: usize) -> Result<Vec<u32>, HoaError> {
        let mut out = BTreeSet::new();
        if self.eat_sym('{') {
            while !self.eat_sym('}') {
                if self.peek().is_none() {
                    return self.error("unterminated acceptance set list");
                }
                let c = self.int("acceptance set index")?;
                if c as usize >= limit {
                    self.pos -= 1;
                    return self.error(format!("acceptance set index out of range: {c}"));
                }
                out.insert(c);
            }
        }
        Ok(out.into_iter().collect())
    }

    fn state_index(&mut self, count: usize) -> Result<u32, HoaError> {
        let q = self.int("state index")?;
        if q as usize >= count {
            self.pos -= 1;
            return self.error(format!("state index out of range: {q} (States: {count})"));
        }
        Ok(q)
    }

    fn at_header_end(&self) -> bool {
        matches!(self.peek(), None | Some(Tok::Header(_)) | Some(Tok::Body))
    }
}

/// Parses a single HOA automaton.
pub fn parse_hoa(text: &str) -> Result<HoaDocument, HoaError> {
    let tokens = tokenize(text)?;
    let lines = text.split('\n').count();
    let eof = (
        lines,
        text.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1,
    );
    let mut p = Parser {
        tokens,
        pos: 0,
        eof,
    };

    let mut version = None;
    let mut state_count = None;
    let mut start_states: Vec<u32> = Vec::new();
    let mut start_seen = false;
    let mut aps = Vec::new();
    let mut acceptance = None;
    let mut acc_name = None;
    let mut properties = Vec::new();
    let mut other_headers = Vec::new();
    let mut start_pos = (0, 0);

    loop {
        let header = match p.next() {
            Some(Tok::Header(h)) => h,
            Some(Tok::Body) => break,
            Some(_) => {
                p.pos -= 1;
                return p.error("expected header");
            }
            None => return p.error("missing `--BODY--`"),
        };
        if version.is_none() && header != "HOA" {
            p.pos -= 1;
            return p.error("document must start with `HOA:`");
        }
        match header.as_str() {
            "HOA" => match p.next() {
                Some(Tok::Ident(v)) if version.is_none() => version = Some(v),
                _ => {
                    p.pos -= 1;
                    return p.error("expected format version after `HOA:`");
                }
            },
            "States" => state_count = Some(p.int("state count")? as usize),
            "Start" => {
                if start_seen {
                    return Err(HoaError::MultipleStart);
                }
                start_seen = true;
                start_pos = p.at();
                start_states.push(p.int("start state")?);
                if p.peek() == Some(&Tok::Sym('&')) {
                    return p.error("universal start states are not supported");
                }
            }
            "AP" => {
                let n = p.int("AP count")? as usize;
                for _ in 0..n {
                    match p.next() {
                        Some(Tok::Str(s)) => aps.push(s),
                        _ => {
                            p.pos -= 1;
                            return p.error("expected AP name");
                        }
                    }
                }
            }
            "Acceptance" => {
                let n = p.int("acceptance set count")? as usize;
                let acc = p.acc_or()?;
                if acc.max_color().is_some_and(|c| c as usize >= n) {
                    return p.error("acceptance set index out of range in `Acceptance:`");
                }
                acceptance = Some((n, acc));
            }
            "acc-name" => {
                let mut parts = Vec::new();
                while !p.at_header_end() {
                    parts.push(render(&p.next().unwrap()));
                }
                acc_name = Some(parts.join(" "));
            }
            "properties" => {
                while !p.at_header_end() {
                    match p.next() {
                        Some(Tok::Ident(s)) => properties.push(s),
                        _ => {
                            p.pos -= 1;
                            return p.error("expected property name");
                        }
                    }
                }
            }
            "Alias" => return p.error("aliases are not supported"),
            _ => {
                let mut parts = Vec::new();
                while !p.at_header_end() {
                    parts.push(render(&p.next().unwrap()));
                }
                other_headers.push((header.clone(), parts.join(" ")));
            }
        }
        if !p.at_header_end() {
            return p.error(format!("unexpected token after `{header}:` value"));
        }
    }

    let version = version.ok_or(HoaError::MissingHeader("HOA"))?;
    let state_count = state_count.ok_or(HoaError::MissingHeader("States"))?;
    let (acceptance_colors, acceptance) =
        acceptance.ok_or(HoaError::MissingHeader("Acceptance"))?;
    if !start_seen {
        return Err(HoaError::MissingHeader("Start"));
    }
    if start_states.iter().any(|&q| q as usize >= state_count) {
        let (line, col) = start_pos;
        return Err(HoaError::Syntax {
            line,
            col,
            msg: "state index out of range in `Start:`".into(),
        });
    }

    let mut edges = Vec::new();
    let mut state_colors = vec![None; state_count];
    let mut declared = vec![false; state_count];
    loop {
        match p.next() {
            Some(Tok::End) => break,
            Some(Tok::Abort) => {
                p.pos -= 1;
                return p.error("automaton aborted");
            }
            Some(Tok::Header(h)) if h == "State" => {}
            Some(_) => {
                p.pos -= 1;
                return p.error("expected `State:` or `--END--`");
            }
            None => return p.error("missing `--END--`"),
        }
        if p.peek() == Some(&Tok::Sym('[')) {
            return p.error("state labels are not supported");
        }
        let q = p.state_index(state_count)?;
        if std::mem::replace(&mut declared[q as usize], true) {
            p.pos -= 1;
            return p.error(format!("state {q} declared twice"));
        }
        if let Some(Tok::Str(_)) = p.peek() {
            p.pos += 1;
        }
        if p.peek() == Some(&Tok::Sym('{')) {
            state_colors[q as usize] = Some(p.colors(acceptance_colors)?);
        }
        loop {
            match p.peek() {
                Some(Tok::Sym('[')) => {}
                Some(Tok::Int(_)) => return p.error("implicit labels are not supported"),
                _ => break,
            }
            p.pos += 1;
            let label_pos = p.pos;
            let label = p.label_or()?;
            p.expect_sym(']')?;
            if let Some(j) = label.max_ap() {
                if j as usize >= aps.len() {
                    p.pos = label_pos;
                    return p.error(format!("AP index out of range: {j}"));
                }
            }
            let target = p.state_index(state_count)?;
            if p.peek() == Some(&Tok::Sym('&')) {
                return p.error("universal branching is not supported");
            }
            let colors = p.colors(acceptance_colors)?;
            edges.push(HoaEdge {
                source: q,
                label,
                target,
                colors,
            });
        }
    }
    if p.peek().is_some() {
        return p.error("trailing input after `--END--`");
    }

    Ok(HoaDocument {
        version,
        state_count,
        start_states,
        aps,
        acceptance_colors,
        acceptance,
        acc_name,
        properties,
        other_headers,
        edges,
        state_colors,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitEdge {
    pub source: u32,
    pub letter: u32,
    pub target: u32,
    pub colors: Vec<u32>,
}

/// The document's edges over the explicit alphabet `0 .. 2^|AP|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Explicit {
    pub alphabet_size: usize,
    pub edges: Vec<ExplicitEdge>,
}

pub fn explicit_alphabet(doc: &HoaDocument) -> Result<Explicit, HoaError> {
    explicit_alphabet_capped(doc, AP_CAP)
}

pub fn explicit_alphabet_capped(doc: &HoaDocument, cap: usize) -> Result<Explicit, HoaError> {
    if doc.aps.len() > cap {
        return Err(HoaError::ApCap {
            count: doc.aps.len(),
            cap,
        });
    }
    let alphabet_size = 1usize << doc.aps.len();
    let mut edges = Vec::new();
    for e in &doc.edges {
        for letter in (0..alphabet_size as u32).filter(|&a| e.label.eval(a)) {
            edges.push(ExplicitEdge {
                source: e.source,
                letter,
                target: e.target,
                colors: e.colors.clone(),
            });
        }
    }
    Ok(Explicit {
        alphabet_size,
        edges,
    })
}

/// Interprets a Büchi document (`Inf(0)`, or `t`/`f`) as a complete NBA.
pub fn to_nba(doc: &HoaDocument) -> Result<Nba, HoaError> {
    let all_accepting = match &doc.acceptance {
        Acceptance::Inf(0) => false,
        Acceptance::True => true,
        Acceptance::False => {
            return to_nba_with(doc, |_| false);
        }
        other => return Err(HoaError::NotBuchi(other.to_string())),
    };
    to_nba_with(doc, |colors| all_accepting || colors.contains(&0))
}

fn to_nba_with(doc: &HoaDocument, accepting: impl Fn(&[u32]) -> bool) -> Result<Nba, HoaError> {
    let explicit = explicit_alphabet(doc)?;
    let marked_states: BitSet = doc
        .state_colors
        .iter()
        .enumerate()
        .filter(|(_, c)| c.as_deref().is_some_and(&accepting))
        .map(|(q, _)| q as u32)
        .collect();
    let raw = RawBuchi {
        state_count: doc.state_count,
        initial: doc.start_states[0],
        alphabet_size: explicit.alphabet_size,
        edges: explicit
            .edges
            .iter()
            .map(|e| (e.source, e.letter, e.target, accepting(&e.colors)))
            .collect(),
        marked_states,
    };
    Ok(normalize(&raw))
}

/// Interprets a deterministic complete document as a DELA. State marks are
/// moved onto the outgoing edges.
pub fn to_dela(doc: &HoaDocument) -> Result<Dela, HoaError> {
    let explicit = explicit_alphabet(doc)?;
    let alpha = explicit.alphabet_size;
    let mut slots: Vec<Vec<&ExplicitEdge>> = vec![Vec::new(); doc.state_count * alpha];
    for e in &explicit.edges {
        slots[e.source as usize * alpha + e.letter as usize].push(e);
    }
    let mut successor = Vec::with_capacity(slots.len());
    let mut edge_colors = Vec::with_capacity(slots.len());
    for (i, slot) in slots.iter().enumerate() {
        let (state, letter) = ((i / alpha) as u32, (i % alpha) as u32);
        let [e] = slot.as_slice() else {
            return Err(HoaError::NotDeterministic {
                state,
                letter,
                count: slot.len(),
            });
        };
        let mut colors: BitSet = e.colors.iter().copied().collect();
        if let Some(marks) = &doc.state_colors[state as usize] {
            colors.extend(marks.iter().copied());
        }
        successor.push(e.target);
        edge_colors.push(colors);
    }
    Ok(Dela {
        state_count: doc.state_count,
        initial: doc.start_states[0],
        alphabet_size: alpha,
        successor,
        edge_colors,
        color_count: doc.acceptance_colors,
        acceptance: doc.acceptance.clone(),
    })
}

/// Whether the document should be read as an NBA rather than a DELA.
pub fn is_buchi(doc: &HoaDocument) -> bool {
    doc.acceptance_colors == 1 && doc.acceptance == Acceptance::Inf(0)
}

/// Default AP names `p0, p1, ...` for an alphabet of `alphabet_size` letters.
pub fn default_aps(alphabet_size: usize) -> Result<Vec<String>, HoaError> {
    let count = ap_count(alphabet_size, None)?;
    Ok((0..count).map(|j| format!("p{j}")).collect())
}

fn ap_count(alphabet_size: usize, names: Option<&[String]>) -> Result<usize, HoaError> {
    let count = alphabet_size.trailing_zeros() as usize;
    let ok = alphabet_size.is_power_of_two() && names.is_none_or(|n| n.len() == count);
    if !ok {
        let ap_count = names.map_or(count, <[String]>::len);
        return Err(HoaError::AlphabetMismatch {
            alphabet_size,
            ap_count,
        });
    }
    Ok(count)
}

/// Full conjunction of AP literals describing `letter`.
pub fn letter_label(letter: u32, ap_count: usize) -> String {
    if ap_count == 0 {
        return "t".into();
    }
    let lits: Vec<String> = (0..ap_count)
        .map(|j| {
            if letter >> j & 1 == 1 {
                j.to_string()
            } else {
                format!("!{j}")
            }
        })
        .collect();
    lits.join("&")
}

fn write_header(out: &mut String, states: usize, initial: u32, aps: &[String]) {
    let _ = writeln!(out, "HOA: v1");
    let _ = writeln!(out, "States: {states}");
    let _ = writeln!(out, "Start: {initial}");
    let _ = write!(out, "AP: {}", aps.len());
    for ap in aps {
        let _ = write!(out, " {ap:?}");
    }
    out.push('\n');
}

fn write_colors(out: &mut String, colors: impl IntoIterator<Item = u32>) {
    let colors: Vec<String> = colors.into_iter().map(|c| c.to_string()).collect();
    if !colors.is_empty() {
        let _ = write!(out, " {{{}}}", colors.join(" "));
    }
}

pub fn serialize_nba(nba: &Nba, aps: &[String]) -> Result<String, HoaError> {
    let ap_count = ap_count(nba.alphabet_size(), Some(aps))?;
    let mut out = String::new();
    write_header(&mut out, nba.state_count(), nba.initial(), aps);
    out.push_str("acc-name: Buchi\nAcceptance: 1 Inf(0)\nproperties: trans-labels explicit-labels trans-acc\n");
    out.push_str("--BODY--\n");
    for q in 0..nba.state_count() as u32 {
        let _ = writeln!(out, "State: {q}");
        for a in 0..nba.alphabet_size() as u32 {
            for e in nba.successors(q, a) {
                let _ = write!(out, "[{}] {}", letter_label(a, ap_count), e.target);
                if e.accepting {
                    out.push_str(" {0}");
                }
                out.push('\n');
            }
        }
    }
    out.push_str("--END--\n");
    Ok(out)
}

/// Writes a deterministic automaton; `acc_name` defaults to `generic`.
pub fn serialize_dela(
    dela: &Dela,
    aps: &[String],
    acc_name: Option<&str>,
) -> Result<String, HoaError> {
    let ap_count = ap_count(dela.alphabet_size, Some(aps))?;
    let mut out = String::new();
    write_header(&mut out, dela.state_count, dela.initial, aps);
    let _ = writeln!(out, "acc-name: {}", acc_name.unwrap_or("generic"));
    let _ = writeln!(out, "Acceptance: {} {}", dela.color_count, dela.acceptance);
    out.push_str("properties: trans-labels explicit-labels trans-acc deterministic complete\n");
    out.push_str("--BODY--\n");
    for q in 0..dela.state_count as u32 {
        let _ = writeln!(out, "State: {q}");
        for a in 0..dela.alphabet_size as u32 {
            let _ = write!(out, "[{}] {}", letter_label(a, ap_count), dela.succ(q, a));
            write_colors(&mut out, dela.colors(q, a).iter());
            out.push('\n');
        }
    }
    out.push_str("--END--\n");
    Ok(out)
}

/// Transition graph of a deterministic automaton in Graphviz syntax.
pub fn dela_to_dot(dela: &Dela, aps: &[String]) -> Result<String, HoaError> {
    let ap_count = ap_count(dela.alphabet_size, Some(aps))?;
    let mut out = String::from("digraph dela {\n  rankdir=LR;\n  init [shape=point];\n");
    let _ = writeln!(out, "  init -> {};", dela.initial);
    for q in 0..dela.state_count as u32 {
        for a in 0..dela.alphabet_size as u32 {
            let colors: Vec<String> = dela.colors(q, a).iter().map(|c| c.to_string()).collect();
            let _ = writeln!(
                out,
                "  {} -> {} [label=\"{} {{{}}}\"];",
                q,
                dela.succ(q, a),
                letter_label(a, ap_count),
                colors.join(" ")
            );
        }
    }
    out.push_str("}\n");
    Ok(out)
}
