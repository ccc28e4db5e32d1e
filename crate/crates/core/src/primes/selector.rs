//! Describable sets of primes, with residue degrees and norms attached.
//!
//! Text form (`or` binds loosest, then `and`, then `not`):
//!
//! ```text
//! all | none
//! mod:N:r1,r2,...        primes congruent to one of the residues
//! degree:<field>:j       primes of residue degree j in a field
//! list:<file or p1,p2>   explicit primes
//! not X | X and Y | X or Y | ( X )
//! ```
//!
//! `<field>` is a path to a field file, or an inline spec such as
//! `N=7;H=6`.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use num_integer::Integer;
use num_rational::Rational64;
use serde::Serialize;

use super::field::FieldSpec;
use super::sieve::{is_prime, prime_divisors};
use super::PrimesError;

/// Largest modulus enumerated by [`PrimeSelector::exact_density`].
pub const DENSITY_MODULUS_CAP: u64 = 10_000_000;

/// A prime of a selector, seen as a prime (or set of primes) of the field it
/// comes from.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PrimeItem {
    pub p: u64,
    /// Residue degree.
    pub f: u32,
    /// Norm `p^f`.
    pub q: f64,
    /// Number of primes above `p` with this norm.
    pub multiplicity: u32,
}

impl PrimeItem {
    pub fn rational(p: u64) -> Self {
        PrimeItem {
            p,
            f: 1,
            q: p as f64,
            multiplicity: 1,
        }
    }

    fn with_degree(p: u64, f: u32, multiplicity: u32) -> Self {
        PrimeItem {
            p,
            f,
            q: (p as f64).powi(f as i32),
            multiplicity,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SelectorKind {
    All,
    Congruence { modulus: u64, residues: Vec<u64> },
    DegreeEquals { field: Arc<FieldSpec>, j: u32 },
    Explicit(Vec<u64>),
    Complement(Box<PrimeSelector>),
    Intersection(Vec<PrimeSelector>),
    Union(Vec<PrimeSelector>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct PrimeSelector {
    kind: SelectorKind,
    /// Primes excluded everywhere: divisors of every modulus involved plus
    /// any explicit exclusions.
    excluded: Vec<u64>,
}

impl PrimeSelector {
    fn from_kind(kind: SelectorKind) -> Self {
        let mut excluded = Vec::new();
        match &kind {
            SelectorKind::Congruence { modulus, .. } => excluded = prime_divisors(*modulus),
            SelectorKind::DegreeEquals { field, .. } => excluded = prime_divisors(field.modulus()),
            SelectorKind::Complement(s) => excluded = s.excluded.clone(),
            SelectorKind::Intersection(v) | SelectorKind::Union(v) => {
                excluded = v.iter().flat_map(|s| s.excluded.iter().copied()).collect()
            }
            SelectorKind::All | SelectorKind::Explicit(_) => {}
        }
        excluded.sort_unstable();
        excluded.dedup();
        PrimeSelector { kind, excluded }
    }

    pub fn all() -> Self {
        Self::from_kind(SelectorKind::All)
    }

    pub fn none() -> Self {
        Self::explicit(Vec::new())
    }

    pub fn congruence(modulus: u64, residues: &[u64]) -> Result<Self, PrimesError> {
        if modulus == 0 || modulus > DENSITY_MODULUS_CAP {
            return Err(PrimesError::Selector(format!("bad modulus {modulus}")));
        }
        let mut residues: Vec<u64> = residues.iter().map(|r| r % modulus).collect();
        residues.sort_unstable();
        residues.dedup();
        Ok(Self::from_kind(SelectorKind::Congruence { modulus, residues }))
    }

    pub fn degree_equals(field: Arc<FieldSpec>, j: u32) -> Self {
        Self::from_kind(SelectorKind::DegreeEquals { field, j })
    }

    pub fn explicit(mut primes: Vec<u64>) -> Self {
        primes.sort_unstable();
        primes.dedup();
        Self::from_kind(SelectorKind::Explicit(primes))
    }

    pub fn complement(self) -> Self {
        Self::from_kind(SelectorKind::Complement(Box::new(self)))
    }

    pub fn intersection(parts: Vec<PrimeSelector>) -> Self {
        Self::from_kind(SelectorKind::Intersection(parts))
    }

    pub fn union(parts: Vec<PrimeSelector>) -> Self {
        Self::from_kind(SelectorKind::Union(parts))
    }

    /// Adds primes that are always excluded.
    pub fn excluding(mut self, primes: &[u64]) -> Self {
        self.excluded.extend_from_slice(primes);
        self.excluded.sort_unstable();
        self.excluded.dedup();
        self
    }

    pub fn kind(&self) -> &SelectorKind {
        &self.kind
    }

    pub fn excluded(&self) -> &[u64] {
        &self.excluded
    }

    pub fn is_excluded(&self, p: u64) -> bool {
        self.excluded.binary_search(&p).is_ok()
    }

    /// Item for `p`, or `None` if `p` is not selected. `p` must be prime.
    pub fn item(&self, p: u64) -> Option<PrimeItem> {
        if self.is_excluded(p) {
            return None;
        }
        self.resolve(p, false)
    }

    pub fn contains(&self, p: u64) -> bool {
        self.item(p).is_some()
    }

    /// Evaluation at a prime, or at a unit residue class when `residue` is
    /// set (explicit lists then count as empty).
    fn resolve(&self, p: u64, residue: bool) -> Option<PrimeItem> {
        match &self.kind {
            SelectorKind::All => Some(PrimeItem::rational(p)),
            SelectorKind::Congruence { modulus, residues } => residues
                .binary_search(&(p % modulus))
                .is_ok()
                .then(|| PrimeItem::rational(p)),
            SelectorKind::DegreeEquals { field, j } => {
                let f = field.coset_of(p).map(|c| field.coset_orders()[c])?;
                (f == *j).then(|| PrimeItem::with_degree(p, f, field.degree() / f))
            }
            SelectorKind::Explicit(list) => {
                (!residue && list.binary_search(&p).is_ok()).then(|| PrimeItem::rational(p))
            }
            SelectorKind::Complement(inner) => {
                let hit = if residue {
                    inner.resolve(p, true).is_some()
                } else {
                    inner.item(p).is_some()
                };
                (!hit).then(|| PrimeItem::rational(p))
            }
            SelectorKind::Intersection(parts) => {
                let mut first = None;
                for s in parts {
                    let it = s.resolve(p, residue)?;
                    first.get_or_insert(it);
                }
                first.or_else(|| Some(PrimeItem::rational(p)))
            }
            SelectorKind::Union(parts) => parts.iter().find_map(|s| s.resolve(p, residue)),
        }
    }

    /// Least common multiple of all moduli involved (1 if none).
    pub fn modulus(&self) -> u64 {
        match &self.kind {
            SelectorKind::All | SelectorKind::Explicit(_) => 1,
            SelectorKind::Congruence { modulus, .. } => *modulus,
            SelectorKind::DegreeEquals { field, .. } => field.modulus(),
            SelectorKind::Complement(s) => s.modulus(),
            SelectorKind::Intersection(v) | SelectorKind::Union(v) => v
                .iter()
                .fold(1u64, |acc, s| lcm_capped(acc, s.modulus())),
        }
    }

    /// Whether the selector is a finite set of primes.
    pub fn is_finite(&self) -> bool {
        match &self.kind {
            SelectorKind::Explicit(_) => true,
            SelectorKind::All
            | SelectorKind::Congruence { .. }
            | SelectorKind::DegreeEquals { .. }
            | SelectorKind::Complement(_) => false,
            SelectorKind::Intersection(v) => v.iter().any(PrimeSelector::is_finite),
            SelectorKind::Union(v) => v.iter().all(PrimeSelector::is_finite),
        }
    }

    /// Combined modulus and the items of all selected unit residue classes,
    /// `None` above [`DENSITY_MODULUS_CAP`].
    pub fn residue_classes(&self) -> Option<(u64, Vec<PrimeItem>)> {
        let l = self.modulus();
        if l > DENSITY_MODULUS_CAP {
            return None;
        }
        let items = (1..=l.max(1))
            .filter(|r| r.gcd(&l) == 1)
            .filter_map(|r| self.resolve(r % l.max(1), true))
            .collect();
        Some((l, items))
    }

    /// Dirichlet density of the selected primes counted as primes of their
    /// field: each unramified class contributes its multiplicity when the
    /// residue degree is 1 and nothing otherwise. `None` when the combined
    /// modulus exceeds [`DENSITY_MODULUS_CAP`].
    pub fn exact_density(&self) -> Option<Rational64> {
        let (l, items) = self.residue_classes()?;
        let phi = (1..=l).filter(|r| r.gcd(&l) == 1).count() as i64;
        let num: i64 = items
            .iter()
            .filter(|it| it.f == 1)
            .map(|it| it.multiplicity as i64)
            .sum();
        Some(Rational64::new(num, phi))
    }

    /// Density of the underlying rational primes.
    pub fn exact_rational_density(&self) -> Option<Rational64> {
        let (l, items) = self.residue_classes()?;
        let phi = (1..=l).filter(|r| r.gcd(&l) == 1).count() as i64;
        Some(Rational64::new(items.len() as i64, phi))
    }

    /// Residue degrees occurring among selected primes (by residue class).
    pub fn residue_degrees(&self) -> Option<Vec<u32>> {
        let (_, items) = self.residue_classes()?;
        let mut fs: Vec<u32> = items.iter().map(|it| it.f).collect();
        fs.sort_unstable();
        fs.dedup();
        Some(fs)
    }
}

fn lcm_capped(a: u64, b: u64) -> u64 {
    let g = a.gcd(&b);
    let l = (a / g) as u128 * b as u128;
    l.min(u64::MAX as u128 / 2) as u64
}

/// Parsed selector expression with file references left unresolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SelectorExpr {
    All,
    None,
    Mod { modulus: u64, residues: Vec<u64> },
    Degree { field: String, j: u32 },
    List(String),
    Not(Box<SelectorExpr>),
    And(Box<SelectorExpr>, Box<SelectorExpr>),
    Or(Box<SelectorExpr>, Box<SelectorExpr>),
}

impl fmt::Display for SelectorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SelectorExpr::All => f.write_str("all"),
            SelectorExpr::None => f.write_str("none"),
            SelectorExpr::Mod { modulus, residues } => {
                let r: Vec<String> = residues.iter().map(u64::to_string).collect();
                write!(f, "mod:{modulus}:{}", r.join(","))
            }
            SelectorExpr::Degree { field, j } => write!(f, "degree:{field}:{j}"),
            SelectorExpr::List(src) => write!(f, "list:{src}"),
            SelectorExpr::Not(e) => write!(f, "not ({e})"),
            SelectorExpr::And(a, b) => write!(f, "({a}) and ({b})"),
            SelectorExpr::Or(a, b) => write!(f, "({a}) or ({b})"),
        }
    }
}

const MAX_EXPR_LEN: usize = 4096;
const MAX_EXPR_DEPTH: usize = 32;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    LParen,
    RParen,
    And,
    Or,
    Not,
    Atom(String),
}

fn tokenize(text: &str) -> Result<Vec<Token>, PrimesError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '(' {
            out.push(Token::LParen);
            chars.next();
        } else if c == ')' {
            out.push(Token::RParen);
            chars.next();
        } else {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if d.is_whitespace() || d == '(' || d == ')' {
                    break;
                }
                end = j + d.len_utf8();
                chars.next();
            }
            let word = &text[i..end];
            out.push(match word.to_ascii_lowercase().as_str() {
                "and" | "&" => Token::And,
                "or" | "|" => Token::Or,
                "not" | "!" => Token::Not,
                _ => Token::Atom(word.to_string()),
            });
        }
    }
    Ok(out)
}

fn parse_u64_list(text: &str) -> Result<Vec<u64>, PrimesError> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| PrimesError::Selector(format!("bad integer {t:?}")))
        })
        .collect()
}

fn parse_atom(word: &str) -> Result<SelectorExpr, PrimesError> {
    let bad = || PrimesError::Selector(format!("unrecognised selector atom {word:?}"));
    match word.to_ascii_lowercase().as_str() {
        "all" => return Ok(SelectorExpr::All),
        "none" => return Ok(SelectorExpr::None),
        _ => {}
    }
    let (head, rest) = word.split_once(':').ok_or_else(bad)?;
    match head {
        "mod" => {
            let (n, rs) = rest.split_once(':').ok_or_else(bad)?;
            let modulus: u64 = n.parse().map_err(|_| bad())?;
            if modulus == 0 || modulus > DENSITY_MODULUS_CAP {
                return Err(PrimesError::Selector(format!("bad modulus {n:?}")));
            }
            let residues = parse_u64_list(rs)?;
            Ok(SelectorExpr::Mod { modulus, residues })
        }
        "degree" => {
            let (field, j) = rest.rsplit_once(':').ok_or_else(bad)?;
            let j: u32 = j.parse().map_err(|_| bad())?;
            if field.is_empty() || j == 0 {
                return Err(bad());
            }
            Ok(SelectorExpr::Degree {
                field: field.to_string(),
                j,
            })
        }
        "list" => Ok(SelectorExpr::List(rest.to_string())),
        _ => Err(bad()),
    }
}

struct ExprParser {
    tokens: Vec<Token>,
    pos: usize,
}

impl ExprParser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn or(&mut self, depth: usize) -> Result<SelectorExpr, PrimesError> {
        let mut left = self.and(depth)?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            let right = self.and(depth)?;
            left = SelectorExpr::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn and(&mut self, depth: usize) -> Result<SelectorExpr, PrimesError> {
        let mut left = self.unary(depth)?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            let right = self.unary(depth)?;
            left = SelectorExpr::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn unary(&mut self, depth: usize) -> Result<SelectorExpr, PrimesError> {
        if depth > MAX_EXPR_DEPTH {
            return Err(PrimesError::Selector("expression nested too deeply".into()));
        }
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Not) => {
                self.pos += 1;
                Ok(SelectorExpr::Not(Box::new(self.unary(depth + 1)?)))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let e = self.or(depth + 1)?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(PrimesError::Selector("expected ')'".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Token::Atom(w)) => {
                self.pos += 1;
                parse_atom(&w)
            }
            Some(t) => Err(PrimesError::Selector(format!("unexpected {t:?}"))),
            None => Err(PrimesError::Selector("unexpected end of expression".into())),
        }
    }
}

pub fn parse_selector_expr(text: &str) -> Result<SelectorExpr, PrimesError> {
    if text.len() > MAX_EXPR_LEN {
        return Err(PrimesError::Selector("expression too long".into()));
    }
    let tokens = tokenize(text)?;
    let mut p = ExprParser { tokens, pos: 0 };
    let e = p.or(0)?;
    if p.pos != p.tokens.len() {
        return Err(PrimesError::Selector(format!(
            "trailing input at token {}",
            p.pos + 1
        )));
    }
    Ok(e)
}

/// Parses a list of primes: integers separated by commas or whitespace,
/// `#` comments. Non-primes are rejected.
pub fn parse_prime_list(text: &str) -> Result<Vec<u64>, PrimesError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        for tok in line.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let p: u64 = tok.parse().map_err(|_| PrimesError::Parse {
                line: i + 1,
                msg: format!("bad integer {tok:?}"),
            })?;
            if !is_prime(p) {
                return Err(PrimesError::Parse {
                    line: i + 1,
                    msg: format!("{p} is not prime"),
                });
            }
            out.push(p);
        }
    }
    Ok(out)
}

impl SelectorExpr {
    /// Resolves file references through `read`.
    pub fn resolve_with(
        &self,
        read: &mut dyn FnMut(&str) -> Result<String, PrimesError>,
    ) -> Result<PrimeSelector, PrimesError> {
        Ok(match self {
            SelectorExpr::All => PrimeSelector::all(),
            SelectorExpr::None => PrimeSelector::none(),
            SelectorExpr::Mod { modulus, residues } => PrimeSelector::congruence(*modulus, residues)?,
            SelectorExpr::Degree { field, j } => {
                let text = if field.starts_with("N=") {
                    field.clone()
                } else {
                    read(field)?
                };
                PrimeSelector::degree_equals(Arc::new(FieldSpec::parse(&text)?), *j)
            }
            SelectorExpr::List(src) => {
                let inline = src.chars().all(|c| c.is_ascii_digit() || c == ',');
                let text = if inline { src.clone() } else { read(src)? };
                PrimeSelector::explicit(parse_prime_list(&text)?)
            }
            SelectorExpr::Not(e) => e.resolve_with(read)?.complement(),
            SelectorExpr::And(a, b) => {
                PrimeSelector::intersection(vec![a.resolve_with(read)?, b.resolve_with(read)?])
            }
            SelectorExpr::Or(a, b) => {
                PrimeSelector::union(vec![a.resolve_with(read)?, b.resolve_with(read)?])
            }
        })
    }

    /// Resolves file references relative to `base`.
    pub fn resolve(&self, base: &Path) -> Result<PrimeSelector, PrimesError> {
        self.resolve_with(&mut |name| {
            let path = base.join(name);
            std::fs::read_to_string(&path).map_err(|e| PrimesError::Io {
                path: path.display().to_string(),
                msg: e.to_string(),
            })
        })
    }
}

/// Parses and resolves a selector with files relative to the working
/// directory.
pub fn selector_from_str(text: &str) -> Result<PrimeSelector, PrimesError> {
    parse_selector_expr(text)?.resolve(Path::new("."))
}
