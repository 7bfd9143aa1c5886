//! Plane labelled bipartite trees stored as rotation systems.
//!
//! Every vertex carries the counterclockwise cyclic list of its neighbours;
//! those lists are the planar embedding. White vertices are labelled
//! `v1, v2, ...`, black vertices `u1, u2, ...`, and every edge joins the two
//! colour classes. A [`PlaneTree`] is immutable once validated, so values can
//! be shared freely across threads.

use std::collections::VecDeque;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The two sides of the bipartition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    White,
    Black,
}

impl Color {
    /// The other colour class.
    pub fn opposite(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }

    fn prefix(self) -> char {
        match self {
            Color::White => 'v',
            Color::Black => 'u',
        }
    }
}

/// A labelled vertex: a colour class plus a 1-based index.
///
/// White vertices render as `v1, v2, ...` and black vertices as `u1, u2, ...`.
/// The derived order (colour first, then index) is the one used wherever a
/// "smallest neighbour" is needed.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexRef {
    color: Color,
    index: usize,
}

impl VertexRef {
    /// Builds a vertex reference.
    ///
    /// Panics if `index` is zero; labels are 1-based.
    pub fn new(color: Color, index: usize) -> Self {
        assert!(index >= 1, "vertex indices are 1-based");
        VertexRef { color, index }
    }

    pub fn white(index: usize) -> Self {
        Self::new(Color::White, index)
    }

    pub fn black(index: usize) -> Self {
        Self::new(Color::Black, index)
    }

    pub fn color(self) -> Color {
        self.color
    }

    pub fn index(self) -> usize {
        self.index
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.color.prefix(), self.index)
    }
}

impl fmt::Debug for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error for vertex names that are not `v<digits>` or `u<digits>`.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid vertex name {0:?}: expected 'v' or 'u' followed by a positive integer")]
pub struct ParseVertexError(pub String);

impl FromStr for VertexRef {
    type Err = ParseVertexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseVertexError(s.to_string());
        let mut chars = s.chars();
        let color = match chars.next() {
            Some('v') => Color::White,
            Some('u') => Color::Black,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index: usize = rest.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(VertexRef { color, index })
    }
}

/// Validation errors for candidate rotation systems.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("tree must have at least one edge (got {white} white and {black} black vertices)")]
    EmptyTree { white: usize, black: usize },
    #[error("duplicate rotation entry for vertex {0}")]
    DuplicateLabel(VertexRef),
    #[error("vertex {0} is outside the declared label range")]
    LabelOutOfRange(VertexRef),
    #[error("missing rotation entry for vertex {0}")]
    MissingVertex(VertexRef),
    #[error("edge {0} -- {1} joins two vertices of the same colour")]
    NonBipartiteEdge(VertexRef, VertexRef),
    #[error("vertex {0} lists neighbour {1} more than once")]
    DuplicateNeighbor(VertexRef, VertexRef),
    #[error("adjacency is not symmetric: {0} lists {1} but not conversely")]
    AsymmetricAdjacency(VertexRef, VertexRef),
    #[error("graph is not connected: {0} is unreachable from v1")]
    Disconnected(VertexRef),
    #[error("graph is not a tree: {edges} edges on {vertices} vertices")]
    HasCycle { edges: usize, vertices: usize },
    #[error(transparent)]
    BadVertexName(#[from] ParseVertexError),
}

/// A corner of the embedding: the wedge at `vertex` swept between the
/// neighbour it was entered from and the next neighbour counterclockwise.
///
/// `arrival` is the position, in `rotation(vertex)`, of the neighbour the
/// contour walk arrives from; the walk leaves towards
/// `rotation(vertex)[(arrival + 1) % degree]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Corner {
    pub vertex: VertexRef,
    pub arrival: usize,
}

/// A plane labelled bipartite tree.
///
/// Stored as one counterclockwise neighbour list per vertex. Rotation lists
/// are cyclic; the constructor normalises each list to start at its smallest
/// neighbour, so derived equality and hashing compare trees structurally.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TreeDoc", into = "TreeDoc")]
pub struct PlaneTree {
    white_rot: Vec<Vec<VertexRef>>,
    black_rot: Vec<Vec<VertexRef>>,
}

impl PlaneTree {
    /// Validates a candidate rotation system and builds the tree.
    ///
    /// `white` and `black` declare the label ranges `v1..=v{white}` and
    /// `u1..=u{black}`; `rotations` must list every vertex exactly once with
    /// its counterclockwise neighbour order. The candidate is rejected unless
    /// it is a connected, acyclic, properly two-coloured simple graph with at
    /// least one edge.
    pub fn new(
        white: usize,
        black: usize,
        rotations: impl IntoIterator<Item = (VertexRef, Vec<VertexRef>)>,
    ) -> Result<Self, TreeError> {
        if white == 0 || black == 0 {
            return Err(TreeError::EmptyTree { white, black });
        }
        let mut white_rot: Vec<Option<Vec<VertexRef>>> = vec![None; white];
        let mut black_rot: Vec<Option<Vec<VertexRef>>> = vec![None; black];
        for (v, nbrs) in rotations {
            let cap = match v.color() {
                Color::White => white,
                Color::Black => black,
            };
            if v.index() > cap {
                return Err(TreeError::LabelOutOfRange(v));
            }
            for &nb in &nbrs {
                if nb.color() == v.color() {
                    return Err(TreeError::NonBipartiteEdge(v, nb));
                }
                let ncap = match nb.color() {
                    Color::White => white,
                    Color::Black => black,
                };
                if nb.index() > ncap {
                    return Err(TreeError::LabelOutOfRange(nb));
                }
            }
            let mut sorted = nbrs.clone();
            sorted.sort_unstable();
            if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Err(TreeError::DuplicateNeighbor(v, w[0]));
            }
            let slot = match v.color() {
                Color::White => &mut white_rot[v.index() - 1],
                Color::Black => &mut black_rot[v.index() - 1],
            };
            if slot.is_some() {
                return Err(TreeError::DuplicateLabel(v));
            }
            *slot = Some(nbrs);
        }
        for (i, slot) in white_rot.iter().enumerate() {
            if slot.is_none() {
                return Err(TreeError::MissingVertex(VertexRef::white(i + 1)));
            }
        }
        for (j, slot) in black_rot.iter().enumerate() {
            if slot.is_none() {
                return Err(TreeError::MissingVertex(VertexRef::black(j + 1)));
            }
        }
        let mut tree = PlaneTree {
            white_rot: white_rot.into_iter().map(Option::unwrap).collect(),
            black_rot: black_rot.into_iter().map(Option::unwrap).collect(),
        };
        for v in tree.vertices().collect::<Vec<_>>() {
            for &nb in tree.rotation(v) {
                if !tree.rotation(nb).contains(&v) {
                    return Err(TreeError::AsymmetricAdjacency(v, nb));
                }
            }
        }
        tree.check_connected()?;
        let edges = tree.edge_count();
        if edges != white + black - 1 {
            return Err(TreeError::HasCycle {
                edges,
                vertices: white + black,
            });
        }
        for list in tree.white_rot.iter_mut().chain(tree.black_rot.iter_mut()) {
            rotate_to_min(list);
        }
        Ok(tree)
    }

    fn check_connected(&self) -> Result<(), TreeError> {
        let mut seen_w = vec![false; self.white_count()];
        let mut seen_b = vec![false; self.black_count()];
        let mut queue = VecDeque::from([VertexRef::white(1)]);
        seen_w[0] = true;
        while let Some(v) = queue.pop_front() {
            for &nb in self.rotation(v) {
                let seen = match nb.color() {
                    Color::White => &mut seen_w[nb.index() - 1],
                    Color::Black => &mut seen_b[nb.index() - 1],
                };
                if !*seen {
                    *seen = true;
                    queue.push_back(nb);
                }
            }
        }
        if let Some(i) = seen_w.iter().position(|&s| !s) {
            return Err(TreeError::Disconnected(VertexRef::white(i + 1)));
        }
        if let Some(j) = seen_b.iter().position(|&s| !s) {
            return Err(TreeError::Disconnected(VertexRef::black(j + 1)));
        }
        Ok(())
    }

    pub fn white_count(&self) -> usize {
        self.white_rot.len()
    }

    pub fn black_count(&self) -> usize {
        self.black_rot.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.white_count() + self.black_count()
    }

    /// Number of edges; always `white_count + black_count - 1`.
    pub fn edge_count(&self) -> usize {
        self.white_rot.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, v: VertexRef) -> bool {
        let cap = match v.color() {
            Color::White => self.white_count(),
            Color::Black => self.black_count(),
        };
        v.index() <= cap
    }

    /// Counterclockwise neighbour list of `v`. Panics if `v` is not a vertex.
    pub fn rotation(&self, v: VertexRef) -> &[VertexRef] {
        assert!(self.contains(v), "vertex {v} is not in the tree");
        match v.color() {
            Color::White => &self.white_rot[v.index() - 1],
            Color::Black => &self.black_rot[v.index() - 1],
        }
    }

    pub fn degree(&self, v: VertexRef) -> usize {
        self.rotation(v).len()
    }

    pub fn is_leaf(&self, v: VertexRef) -> bool {
        self.degree(v) == 1
    }

    /// Position of `neighbor` in the rotation of `v`, if the edge exists.
    pub fn rotation_position(&self, v: VertexRef, neighbor: VertexRef) -> Option<usize> {
        self.rotation(v).iter().position(|&nb| nb == neighbor)
    }

    pub fn white_vertices(&self) -> impl Iterator<Item = VertexRef> {
        (1..=self.white_count()).map(VertexRef::white)
    }

    pub fn black_vertices(&self) -> impl Iterator<Item = VertexRef> {
        (1..=self.black_count()).map(VertexRef::black)
    }

    /// All vertices, whites first.
    pub fn vertices(&self) -> impl Iterator<Item = VertexRef> {
        self.white_vertices().chain(self.black_vertices())
    }

    pub fn leaves(&self) -> Vec<VertexRef> {
        self.vertices().filter(|&v| self.is_leaf(v)).collect()
    }

    /// Degree sequences sorted non-increasingly, white side then black.
    pub fn passport(&self) -> Passport {
        let white = self.white_rot.iter().map(Vec::len).collect();
        let black = self.black_rot.iter().map(Vec::len).collect();
        Passport::new(white, black).expect("a valid tree always has a valid passport")
    }

    /// The corner reached after `c` on the counterclockwise boundary walk.
    pub fn next_corner(&self, c: Corner) -> Corner {
        let rot = self.rotation(c.vertex);
        let towards = rot[(c.arrival + 1) % rot.len()];
        let arrival = self
            .rotation_position(towards, c.vertex)
            .expect("adjacency is symmetric");
        Corner {
            vertex: towards,
            arrival,
        }
    }

    /// Inverse of [`next_corner`](Self::next_corner).
    pub fn prev_corner(&self, c: Corner) -> Corner {
        let from = self.rotation(c.vertex)[c.arrival];
        let deg = self.degree(from);
        let back = self
            .rotation_position(from, c.vertex)
            .expect("adjacency is symmetric");
        Corner {
            vertex: from,
            arrival: (back + deg - 1) % deg,
        }
    }

    /// The full counterclockwise boundary walk starting at `start`.
    ///
    /// The tree has a single face, so the walk visits every corner exactly
    /// once: `deg(w)` corners per vertex `w`, `2 * edge_count()` in total,
    /// with consecutive corners on vertices of alternating colour. Panics if
    /// `start` is not a corner of this tree.
    pub fn contour(&self, start: Corner) -> Vec<Corner> {
        assert!(
            self.contains(start.vertex) && start.arrival < self.degree(start.vertex),
            "invalid start corner"
        );
        let mut corners = Vec::with_capacity(2 * self.edge_count());
        let mut c = start;
        loop {
            corners.push(c);
            c = self.next_corner(c);
            if c == start {
                break;
            }
        }
        corners
    }

    /// Graphviz rendering: white vertices as open circles, black vertices as
    /// filled dots, each edge end annotated with its 1-based position in the
    /// incident rotation.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "graph {name} {{").unwrap();
        for v in self.white_vertices() {
            writeln!(out, "  {v} [shape=circle];").unwrap();
        }
        for u in self.black_vertices() {
            writeln!(
                out,
                "  {u} [shape=circle, style=filled, fillcolor=black, fontcolor=white];"
            )
            .unwrap();
        }
        for v in self.white_vertices() {
            for (k, &u) in self.rotation(v).iter().enumerate() {
                let back = self.rotation_position(u, v).expect("symmetric") + 1;
                writeln!(
                    out,
                    "  {v} -- {u} [taillabel=\"{}\", headlabel=\"{back}\"];",
                    k + 1
                )
                .unwrap();
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tree serialisation is infallible")
    }
}

impl fmt::Debug for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut map = f.debug_map();
        for v in self.vertices() {
            map.entry(&v, &self.rotation(v));
        }
        map.finish()
    }
}

fn rotate_to_min(list: &mut [VertexRef]) {
    if list.len() > 1 {
        let k = list
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| v)
            .map(|(k, _)| k)
            .unwrap();
        list.rotate_left(k);
    }
}

/// JSON wire form of a tree:
/// `{"white": n, "black": m, "rotation": [{"vertex": "v1", "ccw": ["u2", ...]}, ...]}`.
#[derive(Clone, Serialize, Deserialize)]
struct TreeDoc {
    white: usize,
    black: usize,
    rotation: Vec<RotationEntry>,
}

#[derive(Clone, Serialize, Deserialize)]
struct RotationEntry {
    vertex: String,
    ccw: Vec<String>,
}

impl TryFrom<TreeDoc> for PlaneTree {
    type Error = TreeError;

    fn try_from(doc: TreeDoc) -> Result<Self, Self::Error> {
        let mut rotations = Vec::with_capacity(doc.rotation.len());
        for entry in doc.rotation {
            let v: VertexRef = entry.vertex.parse()?;
            let nbrs = entry
                .ccw
                .iter()
                .map(|s| s.parse())
                .collect::<Result<Vec<VertexRef>, _>>()?;
            rotations.push((v, nbrs));
        }
        PlaneTree::new(doc.white, doc.black, rotations)
    }
}

impl From<PlaneTree> for TreeDoc {
    fn from(tree: PlaneTree) -> Self {
        let rotation = tree
            .vertices()
            .map(|v| RotationEntry {
                vertex: v.to_string(),
                ccw: tree.rotation(v).iter().map(|nb| nb.to_string()).collect(),
            })
            .collect();
        TreeDoc {
            white: tree.white_count(),
            black: tree.black_count(),
            rotation,
        }
    }
}

/// Error for malformed passports.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid passport: {0}")]
pub struct InvalidPassport(pub String);

/// Non-increasing degree sequences of the white and black vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Passport {
    white: Vec<usize>,
    black: Vec<usize>,
}

impl Passport {
    /// Sorts both sides non-increasingly and checks realisability: both
    /// sides non-empty with positive degrees, and both sums equal to the
    /// edge count `len(white) + len(black) - 1`.
    pub fn new(mut white: Vec<usize>, mut black: Vec<usize>) -> Result<Self, InvalidPassport> {
        if white.is_empty() || black.is_empty() {
            return Err(InvalidPassport("both colour classes must be non-empty".into()));
        }
        if white.iter().chain(black.iter()).any(|&d| d == 0) {
            return Err(InvalidPassport("degrees must be positive".into()));
        }
        let (sw, sb): (usize, usize) = (white.iter().sum(), black.iter().sum());
        if sw != sb {
            return Err(InvalidPassport(format!(
                "degree sums differ: {sw} white vs {sb} black"
            )));
        }
        let edges = white.len() + black.len() - 1;
        if sw != edges {
            return Err(InvalidPassport(format!(
                "degree sum {sw} does not match the tree edge count {edges}"
            )));
        }
        white.sort_unstable_by(|a, b| b.cmp(a));
        black.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Passport { white, black })
    }

    pub fn white_degrees(&self) -> &[usize] {
        &self.white
    }

    pub fn black_degrees(&self) -> &[usize] {
        &self.black
    }

    /// Common degree sum of either side; the number of edges.
    pub fn edge_count(&self) -> usize {
        self.white.iter().sum()
    }

    /// Multiplicity form: how many vertices of each degree per colour.
    pub fn dual(&self) -> DualPassport {
        DualPassport::from_passport(self)
    }
}

impl fmt::Display for Passport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |ds: &[usize]| {
            ds.iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{}|{}", join(&self.white), join(&self.black))
    }
}

impl FromStr for Passport {
    type Err = InvalidPassport;

    /// Parses the `"3,1|2,1,1"` form.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (w, b) = s
            .split_once('|')
            .ok_or_else(|| InvalidPassport(format!("{s:?}: missing '|'")))?;
        let side = |part: &str| -> Result<Vec<usize>, InvalidPassport> {
            part.split(',')
                .map(|d| {
                    d.trim()
                        .parse::<usize>()
                        .map_err(|_| InvalidPassport(format!("bad degree {d:?}")))
                })
                .collect()
        };
        Passport::new(side(w)?, side(b)?)
    }
}

/// The multiplicity form of a passport: maps degree -> number of vertices of
/// that degree, per colour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPassport {
    white_mult: std::collections::BTreeMap<usize, usize>,
    black_mult: std::collections::BTreeMap<usize, usize>,
}

impl DualPassport {
    pub fn from_passport(p: &Passport) -> Self {
        let count = |ds: &[usize]| {
            let mut map = std::collections::BTreeMap::new();
            for &d in ds {
                *map.entry(d).or_insert(0) += 1;
            }
            map
        };
        DualPassport {
            white_mult: count(p.white_degrees()),
            black_mult: count(p.black_degrees()),
        }
    }

    pub fn white_multiplicities(&self) -> &std::collections::BTreeMap<usize, usize> {
        &self.white_mult
    }

    pub fn black_multiplicities(&self) -> &std::collections::BTreeMap<usize, usize> {
        &self.black_mult
    }

    /// Expands back to the degree-sequence form.
    pub fn to_passport(&self) -> Passport {
        let expand = |map: &std::collections::BTreeMap<usize, usize>| {
            let mut ds = Vec::new();
            for (&deg, &mult) in map {
                ds.resize(ds.len() + mult, deg);
            }
            ds
        };
        Passport::new(expand(&self.white_mult), expand(&self.black_mult))
            .expect("a dual passport always expands to a valid passport")
    }
}

impl fmt::Display for DualPassport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |map: &std::collections::BTreeMap<usize, usize>| {
            map.iter()
                .map(|(d, m)| format!("{d}^{m}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "({} | {})", side(&self.white_mult), side(&self.black_mult))
    }
}
