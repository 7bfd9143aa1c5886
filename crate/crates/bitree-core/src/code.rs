//! The contour code of a rooted plane tree: lexing, printing, encoding,
//! decoding, and canonical keys.
//!
//! A code is a string of vertex labels and closing brackets produced by
//! walking the tree boundary counterclockwise from a white root vertex,
//! keeping the chosen root edge first: a vertex's label is written on its
//! first visit and `)` on its last. Grammar (greedy lexing):
//!
//! ```text
//! code  := label token*
//! token := label | ')'
//! label := ('v' | 'u') digit+
//! ```

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::tree::{Color, PlaneTree, TreeError, VertexRef};

/// One lexical unit of a code: a white label, a black label, or `)`.
///
/// The derived order — white labels by index, then black labels by index,
/// then `Close` — is the order used for canonical-code comparisons.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Token {
    White(usize),
    Black(usize),
    Close,
}

impl Token {
    pub fn from_vertex(v: VertexRef) -> Token {
        match v.color() {
            Color::White => Token::White(v.index()),
            Color::Black => Token::Black(v.index()),
        }
    }

    /// The vertex a label token names; `None` for `Close`.
    pub fn vertex(self) -> Option<VertexRef> {
        match self {
            Token::White(i) => Some(VertexRef::white(i)),
            Token::Black(j) => Some(VertexRef::black(j)),
            Token::Close => None,
        }
    }

    pub fn is_label(self) -> bool {
        !matches!(self, Token::Close)
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::White(i) => write!(f, "v{i}"),
            Token::Black(j) => write!(f, "u{j}"),
            Token::Close => write!(f, ")"),
        }
    }
}

impl fmt::Debug for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Errors raised while lexing, validating, or translating codes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("empty code")]
    EmptyCode,
    #[error("unexpected character {ch:?} at byte {pos}")]
    BadCharacter { pos: usize, ch: char },
    #[error("label at byte {pos} has no digits")]
    MissingIndex { pos: usize },
    #[error("label index 0 at position {pos}; indices start at 1")]
    IndexZero { pos: usize },
    #[error("label index at byte {pos} does not fit in a machine word")]
    IndexOverflow { pos: usize },
    #[error("unbalanced code: {labels} labels against {closes} closing brackets")]
    UnbalancedBrackets { labels: usize, closes: usize },
    #[error("prefix violation at token {pos}: the root closes before the end")]
    PrefixViolation { pos: usize },
    #[error("duplicate label {0}")]
    DuplicateLabel(VertexRef),
    #[error("colour alternation violated at token {pos}: {child} nested under {parent}")]
    ColorAlternationViolation {
        pos: usize,
        parent: VertexRef,
        child: VertexRef,
    },
    #[error("root vertex {0} is not white")]
    RootNotWhite(VertexRef),
    #[error("root edge towards {edge} is not incident to root vertex {vertex}")]
    RootEdgeNotIncident { vertex: VertexRef, edge: VertexRef },
    #[error("vertex {0} does not exist in the tree")]
    UnknownVertex(VertexRef),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// A validated token sequence describing one rooted plane tree.
///
/// Invariants: the sequence is non-empty and starts with a label; labels and
/// closing brackets balance, with every proper prefix containing strictly
/// more labels than brackets (so the root closes exactly at the end); each
/// label occurs once per colour class; and every nested label has the colour
/// opposite to its enclosing label.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CodeString {
    tokens: Vec<Token>,
}

impl CodeString {
    /// Validates a raw token sequence. Violations are reported in a fixed
    /// order: emptiness, total balance, prefix property, zero indices,
    /// duplicate labels, colour alternation.
    pub fn from_tokens(tokens: Vec<Token>) -> Result<Self, CodeError> {
        if tokens.is_empty() {
            return Err(CodeError::EmptyCode);
        }
        let labels = tokens.iter().filter(|t| t.is_label()).count();
        let closes = tokens.len() - labels;
        if labels != closes {
            return Err(CodeError::UnbalancedBrackets { labels, closes });
        }
        let mut balance: i64 = 0;
        for (pos, tok) in tokens.iter().enumerate() {
            balance += if tok.is_label() { 1 } else { -1 };
            if balance <= 0 && pos + 1 < tokens.len() {
                return Err(CodeError::PrefixViolation { pos });
            }
        }
        for (pos, tok) in tokens.iter().enumerate() {
            if matches!(tok, Token::White(0) | Token::Black(0)) {
                return Err(CodeError::IndexZero { pos });
            }
        }
        let mut seen = BTreeSet::new();
        for tok in &tokens {
            if let Some(v) = tok.vertex() {
                if !seen.insert(v) {
                    return Err(CodeError::DuplicateLabel(v));
                }
            }
        }
        let mut stack: Vec<VertexRef> = Vec::new();
        for (pos, tok) in tokens.iter().enumerate() {
            match tok.vertex() {
                Some(child) => {
                    if let Some(&parent) = stack.last() {
                        if parent.color() == child.color() {
                            return Err(CodeError::ColorAlternationViolation {
                                pos,
                                parent,
                                child,
                            });
                        }
                    }
                    stack.push(child);
                }
                None => {
                    stack.pop();
                }
            }
        }
        Ok(CodeString { tokens })
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Number of white labels; the `n` of the encoded tree.
    pub fn white_label_count(&self) -> usize {
        self.tokens
            .iter()
            .filter(|t| matches!(t, Token::White(_)))
            .count()
    }

    /// Number of black labels; the `m` of the encoded tree.
    pub fn black_label_count(&self) -> usize {
        self.tokens
            .iter()
            .filter(|t| matches!(t, Token::Black(_)))
            .count()
    }

    pub fn vertex_count(&self) -> usize {
        self.tokens.len() / 2
    }

    /// Erases label indices, keeping only colours and brackets.
    pub fn erase(&self) -> ShapeCode {
        ShapeCode(
            self.tokens
                .iter()
                .map(|t| match t {
                    Token::White(_) => ShapeToken::White,
                    Token::Black(_) => ShapeToken::Black,
                    Token::Close => ShapeToken::Close,
                })
                .collect(),
        )
    }
}

impl fmt::Display for CodeString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for tok in &self.tokens {
            write!(f, "{tok}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CodeString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_string())
    }
}

impl FromStr for CodeString {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        lex(s)
    }
}

/// Tokenises a code string and validates it.
///
/// `v` or `u` followed by a maximal digit run is a label (so `v12` is one
/// label), `)` closes, whitespace separates and is otherwise ignored.
pub fn lex(text: &str) -> Result<CodeString, CodeError> {
    let mut tokens = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some((pos, ch)) = it.next() {
        match ch {
            c if c.is_whitespace() => {}
            ')' => tokens.push(Token::Close),
            'v' | 'u' => {
                let mut digits = String::new();
                while let Some(&(_, d)) = it.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                if digits.is_empty() {
                    return Err(CodeError::MissingIndex { pos });
                }
                let index: usize = digits
                    .parse()
                    .map_err(|_| CodeError::IndexOverflow { pos })?;
                if index == 0 {
                    return Err(CodeError::IndexZero { pos });
                }
                tokens.push(match ch {
                    'v' => Token::White(index),
                    _ => Token::Black(index),
                });
            }
            _ => return Err(CodeError::BadCharacter { pos, ch }),
        }
    }
    CodeString::from_tokens(tokens)
}

/// The root choice that fixes an encoding: a white root vertex together with
/// one of its incident edges, named by the black endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EncodingRoot {
    pub vertex: VertexRef,
    pub edge: VertexRef,
}

/// Writes the contour code of `tree` rooted at `root`.
///
/// Depth-first: emit the vertex label, recurse into the children ordered by
/// the counterclockwise rotation starting after the arrival edge (the root's
/// children start at the root edge), then emit `)`. The output has length
/// `2 * (n + m)`.
pub fn encode(tree: &PlaneTree, root: EncodingRoot) -> Result<CodeString, CodeError> {
    if !tree.contains(root.vertex) {
        return Err(CodeError::UnknownVertex(root.vertex));
    }
    if root.vertex.color() != Color::White {
        return Err(CodeError::RootNotWhite(root.vertex));
    }
    let base = tree
        .rotation_position(root.vertex, root.edge)
        .ok_or(CodeError::RootEdgeNotIncident {
            vertex: root.vertex,
            edge: root.edge,
        })?;

    struct Frame {
        vertex: VertexRef,
        base: usize,
        next: usize,
        children: usize,
    }

    let mut tokens = Vec::with_capacity(2 * tree.vertex_count());
    tokens.push(Token::from_vertex(root.vertex));
    let mut stack = vec![Frame {
        vertex: root.vertex,
        base,
        next: 0,
        children: tree.degree(root.vertex),
    }];
    while let Some(frame) = stack.last_mut() {
        if frame.next == frame.children {
            tokens.push(Token::Close);
            stack.pop();
            continue;
        }
        let rot = tree.rotation(frame.vertex);
        let child = rot[(frame.base + frame.next) % rot.len()];
        frame.next += 1;
        tokens.push(Token::from_vertex(child));
        let back = tree
            .rotation_position(child, frame.vertex)
            .expect("adjacency is symmetric");
        stack.push(Frame {
            vertex: child,
            base: back + 1,
            next: 0,
            children: tree.degree(child) - 1,
        });
    }
    CodeString::from_tokens(tokens)
}

/// Rebuilds the plane tree a code describes, together with the root choice
/// under which [`encode`] reproduces the code exactly.
pub fn decode(code: &CodeString) -> Result<(PlaneTree, EncodingRoot), CodeError> {
    let root = code.tokens()[0]
        .vertex()
        .expect("a valid code starts with a label");
    if root.color() != Color::White {
        return Err(CodeError::RootNotWhite(root));
    }
    let mut rotations: Vec<(VertexRef, Vec<VertexRef>)> = Vec::new();
    let mut slot_of: std::collections::BTreeMap<VertexRef, usize> = std::collections::BTreeMap::new();
    let mut stack: Vec<VertexRef> = Vec::new();
    for tok in code.tokens() {
        match tok.vertex() {
            Some(vertex) => {
                let initial = match stack.last() {
                    Some(&parent) => {
                        let p = slot_of[&parent];
                        rotations[p].1.push(vertex);
                        vec![parent]
                    }
                    None => Vec::new(),
                };
                slot_of.insert(vertex, rotations.len());
                rotations.push((vertex, initial));
                stack.push(vertex);
            }
            None => {
                stack.pop();
            }
        }
    }
    let n = code.white_label_count();
    let m = code.black_label_count();
    let root_children_start = rotations[slot_of[&root]].1.first().copied();
    let tree = PlaneTree::new(n, m, rotations)?;
    let edge = root_children_start.expect("a valid tree root has at least one child");
    Ok((tree, EncodingRoot { vertex: root, edge }))
}

/// The canonical code of a tree: the smallest encoding rooted at `v1`,
/// minimised over the root-edge choice under the token order.
///
/// Equal canonical codes identify equal plane labelled trees.
pub fn canonical_code(tree: &PlaneTree) -> CodeString {
    let v1 = VertexRef::white(1);
    tree.rotation(v1)
        .iter()
        .map(|&edge| {
            encode(tree, EncodingRoot { vertex: v1, edge })
                .expect("v1 with an incident edge is a valid root")
        })
        .min()
        .expect("every tree has at least one edge")
}

/// Label-free shape tokens: `v`, `u`, `)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ShapeToken {
    White,
    Black,
    Close,
}

/// A colour-and-bracket key identifying a plane tree up to colour-preserving
/// relabelling.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShapeCode(Vec<ShapeToken>);

impl ShapeCode {
    pub fn tokens(&self) -> &[ShapeToken] {
        &self.0
    }
}

impl fmt::Display for ShapeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.0 {
            f.write_str(match t {
                ShapeToken::White => "v",
                ShapeToken::Black => "u",
                ShapeToken::Close => ")",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for ShapeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_string())
    }
}

/// The unlabelled canonical form: labels erased to colours, minimised over
/// every white-rooted (vertex, edge) choice.
pub fn shape_code(tree: &PlaneTree) -> ShapeCode {
    shape_code_with_multiplicity(tree).0
}

/// The shape code together with the number of white darts realising it.
///
/// Colour-preserving plane automorphisms act freely on white darts, so the
/// multiplicity is the order of the automorphism group.
pub fn shape_code_with_multiplicity(tree: &PlaneTree) -> (ShapeCode, usize) {
    let mut best: Option<(ShapeCode, usize)> = None;
    for vertex in tree.white_vertices() {
        for &edge in tree.rotation(vertex) {
            let shape = encode(tree, EncodingRoot { vertex, edge })
                .expect("white dart roots are valid")
                .erase();
            best = Some(match best.take() {
                None => (shape, 1),
                Some((min, count)) => {
                    if shape < min {
                        (shape, 1)
                    } else if shape == min {
                        (min, count + 1)
                    } else {
                        (min, count)
                    }
                }
            });
        }
    }
    best.expect("every tree has a white dart")
}
