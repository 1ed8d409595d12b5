//! Free-group words, finite presentations and endomorphisms given by
//! generator images.

use std::fmt;

use thiserror::Error;

/// A generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

/// A freely reduced word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word(Vec<Letter>);

/// Freely reduces an arbitrary letter sequence.
pub fn free_reduce(letters: &[Letter]) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Word(out)
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn generator(g: usize) -> Self {
        Word(vec![Letter::new(g, false)])
    }

    /// `g^k`.
    pub fn power(g: usize, k: i64) -> Self {
        Word(vec![Letter::new(g, k < 0); k.unsigned_abs() as usize])
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        free_reduce(letters)
    }

    /// Builds a word from `(generator, exponent)` pairs.
    pub fn from_powers(powers: &[(usize, i64)]) -> Self {
        powers
            .iter()
            .fold(Word::empty(), |w, &(g, k)| w.concat(&Word::power(g, k)))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        for &l in &other.0 {
            if letters.last() == Some(&l.inv()) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Word(letters)
    }

    pub fn product<'a>(words: impl IntoIterator<Item = &'a Word>) -> Word {
        words.into_iter().fold(Word::empty(), |acc, w| acc.concat(w))
    }

    /// `c·self·c⁻¹`.
    pub fn conjugate_by(&self, c: &Word) -> Word {
        c.concat(self).concat(&c.inverse())
    }

    /// `a·b·a⁻¹·b⁻¹`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.generator).max()
    }

    /// Image under an endomorphism.
    pub fn substitute(&self, e: &Endomorphism) -> Word {
        let mut letters = Vec::new();
        for l in &self.0 {
            let img = &e.images[l.generator];
            if l.inverse {
                letters.extend(img.0.iter().rev().map(|x| x.inv()));
            } else {
                letters.extend_from_slice(&img.0);
            }
        }
        free_reduce(&letters)
    }

    /// Renders with run-length exponents, e.g. `x^3 y^-2`; `1` if empty.
    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            let k = (j - i) as i64 * if l.inverse { -1 } else { 1 };
            let name = &names[l.generator];
            parts.push(if k == 1 { name.clone() } else { format!("{name}^{k}") });
            i = j;
        }
        parts.join(" ")
    }
}

/// Presentation or endomorphism text that failed to parse.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("relator uses generator {0}, but only {1} generators exist")]
    GeneratorOutOfRange(usize, usize),
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("endomorphism has {0} images for {1} generators")]
    ImageCount(usize, usize),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A finitely presented group: generators and relators equal to 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PresentationError::DuplicateName(n.clone()));
            }
        }
        let p = Presentation {
            names,
            relators: Vec::new(),
        };
        p.with_relators(relators)
    }

    pub fn with_relators(mut self, relators: Vec<Word>) -> Result<Self, PresentationError> {
        for r in relators {
            self.add_relator(r)?;
        }
        Ok(self)
    }

    pub fn add_relator(&mut self, r: Word) -> Result<(), PresentationError> {
        if let Some(g) = r.max_generator() {
            if g >= self.names.len() {
                return Err(PresentationError::GeneratorOutOfRange(g, self.names.len()));
            }
        }
        self.relators.push(r);
        Ok(())
    }

    /// Free group on the given names.
    pub fn free(names: &[&str]) -> Self {
        Self::new(names.iter().map(|s| s.to_string()).collect(), Vec::new()).expect("distinct names")
    }

    /// ⟨a⟩.
    pub fn circle() -> Self {
        Self::free(&["a"])
    }

    /// The trivial presentation ⟨ | ⟩.
    pub fn sphere() -> Self {
        Self::free(&[])
    }

    /// ⟨a, b | [a, b]⟩.
    pub fn torus() -> Self {
        Self::torus_dim(2)
    }

    /// T^d: d generators with all pairwise commutators.
    pub fn torus_dim(d: usize) -> Self {
        let names: Vec<&str> = ["a", "b", "c", "d", "e", "f"][..d].to_vec();
        let mut p = Self::free(&names);
        for i in 0..d {
            for j in i + 1..d {
                p.relators
                    .push(Word::commutator(&Word::generator(i), &Word::generator(j)));
            }
        }
        p
    }

    /// Closed orientable surface of genus g: ⟨a1,b1,…| Π [ai,bi]⟩.
    pub fn closed_surface(genus: usize) -> Self {
        let names: Vec<String> = (1..=genus)
            .flat_map(|i| [format!("a{i}"), format!("b{i}")])
            .collect();
        let rel = Word::product(
            (0..genus)
                .map(|i| Word::commutator(&Word::generator(2 * i), &Word::generator(2 * i + 1)))
                .collect::<Vec<_>>()
                .iter(),
        );
        let relators = if genus == 0 { Vec::new() } else { vec![rel] };
        Self::new(names, relators).expect("surface presentation")
    }

    /// Product with a circle: adds a generator `t` commuting with every
    /// existing generator.
    pub fn times_circle(&self) -> Self {
        let mut names = self.names.clone();
        let mut t = "t".to_string();
        while names.contains(&t) {
            t.push('\'');
        }
        names.push(t);
        let t_idx = self.names.len();
        let mut relators = self.relators.clone();
        for g in 0..self.names.len() {
            relators.push(Word::commutator(&Word::generator(t_idx), &Word::generator(g)));
        }
        Presentation { names, relators }
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Parses a product of `name` / `name^k` tokens over these generators.
    pub fn word(&self, text: &str) -> Result<Word, ParseError> {
        parse_tokens(&self.names, text, 1, 1)
    }

    pub fn render(&self, w: &Word) -> String {
        w.render(&self.names)
    }

    /// Parses the text format: a `gens:` line, then `rel:` lines.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut names: Option<Vec<String>> = None;
        let mut relators = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line_no = ln + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let indent = content.len() - content.trim_start().len();
            let body = content.trim_start();
            let err = |column: usize, message: String| ParseError {
                line: line_no,
                column,
                message,
            };
            if let Some(rest) = body.strip_prefix("gens:") {
                if names.is_some() {
                    return Err(err(indent + 1, "second `gens:` line".into()));
                }
                let mut list: Vec<String> = Vec::new();
                for (col, tok) in tokens_with_columns(rest, indent + 6) {
                    if !valid_name(tok) {
                        return Err(err(col, format!("invalid generator name `{tok}`")));
                    }
                    if list.iter().any(|n| n == tok) {
                        return Err(err(col, format!("duplicate generator `{tok}`")));
                    }
                    list.push(tok.to_string());
                }
                names = Some(list);
            } else if let Some(rest) = body.strip_prefix("rel:") {
                let Some(gens) = names.as_ref() else {
                    return Err(err(indent + 1, "`rel:` before `gens:`".into()));
                };
                relators.push(parse_tokens(gens, rest, line_no, indent + 5)?);
            } else {
                return Err(err(indent + 1, "expected `gens:` or `rel:`".into()));
            }
        }
        let names = names.ok_or(ParseError {
            line: 1,
            column: 1,
            message: "missing `gens:` line".into(),
        })?;
        Ok(Presentation { names, relators })
    }

    /// Serializes to the text format; `parse` inverts this.
    pub fn to_text(&self) -> String {
        let mut out = format!("gens: {}\n", self.names.join(" "));
        for r in &self.relators {
            if r.is_empty() {
                out.push_str("rel:\n");
            } else {
                out.push_str(&format!("rel: {}\n", r.render(&self.names)));
            }
        }
        out
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| r.render(&self.names)).collect();
        write!(f, "⟨{} | {}⟩", self.names.join(", "), rels.join(", "))
    }
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

fn tokens_with_columns(s: &str, base_col: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(st)) => {
                out.push((base_col + st, &s[st..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(st) = start {
        out.push((base_col + st, &s[st..]));
    }
    out
}

fn parse_tokens(names: &[String], s: &str, line: usize, base_col: usize) -> Result<Word, ParseError> {
    let mut w = Word::empty();
    for (col, tok) in tokens_with_columns(s, base_col) {
        let err = |message: String| ParseError {
            line,
            column: col,
            message,
        };
        let (name, exp) = match tok.split_once('^') {
            Some((n, e)) => {
                let k: i64 = e.parse().map_err(|_| err(format!("bad exponent in `{tok}`")))?;
                if k == 0 {
                    return Err(err(format!("zero exponent in `{tok}`")));
                }
                (n, k)
            }
            None => (tok, 1),
        };
        let g = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| err(format!("unknown generator `{name}`")))?;
        w = w.concat(&Word::power(g, exp));
    }
    Ok(w)
}

/// An endomorphism of a free group, one image word per generator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Endomorphism {
    images: Vec<Word>,
}

impl Endomorphism {
    pub fn new(images: Vec<Word>) -> Result<Self, PresentationError> {
        let n = images.len();
        for w in &images {
            if let Some(g) = w.max_generator() {
                if g >= n {
                    return Err(PresentationError::GeneratorOutOfRange(g, n));
                }
            }
        }
        Ok(Endomorphism { images })
    }

    pub fn identity(n: usize) -> Self {
        Endomorphism {
            images: (0..n).map(Word::generator).collect(),
        }
    }

    /// Identity except on the listed generators.
    pub fn with_images(n: usize, changes: &[(usize, Word)]) -> Result<Self, PresentationError> {
        let mut images: Vec<Word> = (0..n).map(Word::generator).collect();
        for (g, w) in changes {
            images[*g] = w.clone();
        }
        Self::new(images)
    }

    /// Endomorphism of T^d induced by an integer matrix: generator j maps to
    /// Π_i gen_i^{A[i][j]}, so a hom φ pulls back to the row vector φ·A.
    pub fn from_matrix(a: &[Vec<i64>]) -> Self {
        let d = a.len();
        let images = (0..d)
            .map(|j| Word::from_powers(&(0..d).map(|i| (i, a[i][j])).collect::<Vec<_>>()))
            .collect();
        Endomorphism { images }
    }

    pub fn generator_count(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, g: usize) -> &Word {
        &self.images[g]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(self)
    }

    /// `self ∘ other`: `(self∘other)(g) = self(other(g))`.
    pub fn compose(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism {
            images: other.images.iter().map(|w| w.substitute(self)).collect(),
        }
    }

    /// Extends by fixing `extra` further generators, e.g. `f × id`.
    pub fn extend_identity(&self, extra: usize) -> Endomorphism {
        let n = self.images.len();
        let mut images = self.images.clone();
        images.extend((n..n + extra).map(Word::generator));
        Endomorphism { images }
    }

    /// Parses lines `gen -> tokens` over the presentation's generators;
    /// unlisted generators map to themselves.
    pub fn parse(p: &Presentation, text: &str) -> Result<Self, ParseError> {
        let mut images: Vec<Word> = (0..p.generator_count()).map(Word::generator).collect();
        for (ln, raw) in text.lines().enumerate() {
            let line = ln + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let Some((lhs, rhs)) = content.split_once("->") else {
                return Err(ParseError {
                    line,
                    column: 1,
                    message: "expected `gen -> word`".into(),
                });
            };
            let name = lhs.trim();
            let g = p.generator_index(name).ok_or_else(|| ParseError {
                line,
                column: lhs.len() - lhs.trim_start().len() + 1,
                message: format!("unknown generator `{name}`"),
            })?;
            images[g] = parse_tokens(p.generator_names(), rhs, line, lhs.len() + 3)?;
        }
        Ok(Endomorphism { images })
    }

    pub fn render(&self, p: &Presentation) -> String {
        self.images
            .iter()
            .enumerate()
            .map(|(g, w)| format!("{} -> {}\n", p.generator_names()[g], p.render(w)))
            .collect()
    }
}
