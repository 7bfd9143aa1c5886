//! Leaf movements: detach a leaf, slide its attachment corner along the
//! contour of the remaining tree, and reattach.
//!
//! One elementary step carries the insertion corner to the next corner of an
//! opposite-colour vertex, bypassing exactly one vertex of the leaf's own
//! colour (contour corners alternate colours). `Ccw` follows the orientation
//! of the encoding contour; `Cw` is its exact reversal, so the two directions
//! undo each other.

use std::fmt;

use thiserror::Error;

use crate::tree::{Color, Corner, PlaneTree, VertexRef};

/// Transport direction along the contour of the reduced tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Ccw,
    Cw,
}

impl Direction {
    pub fn reversed(self) -> Direction {
        match self {
            Direction::Ccw => Direction::Cw,
            Direction::Cw => Direction::Ccw,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Ccw => "ccw",
            Direction::Cw => "cw",
        })
    }
}

/// Parity of a movement: even when an even number of same-colour vertices
/// was bypassed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MovementParity {
    Even,
    Odd,
}

impl MovementParity {
    fn of(count: usize) -> Self {
        if count % 2 == 0 {
            MovementParity::Even
        } else {
            MovementParity::Odd
        }
    }
}

impl fmt::Display for MovementParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MovementParity::Even => "even",
            MovementParity::Odd => "odd",
        })
    }
}

/// A movement request: which leaf, which direction, how many elementary
/// steps (must be positive).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MovementSpec {
    pub leaf: VertexRef,
    pub direction: Direction,
    pub steps: usize,
}

/// The result of a movement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MovementOutcome {
    pub tree: PlaneTree,
    /// Vertices of the leaf's own colour bypassed, with multiplicity; equals
    /// the step count except for the two-vertex tree, where no move exists
    /// and the outcome is the identity with count zero.
    pub bypassed_same_color: usize,
    pub movement_parity: MovementParity,
}

impl MovementOutcome {
    /// True for the degenerate two-vertex case where nothing moved.
    pub fn is_identity(&self) -> bool {
        self.bypassed_same_color == 0
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("vertex {0} does not exist in the tree")]
    UnknownVertex(VertexRef),
    #[error("vertex {0} has degree other than one; only leaves move")]
    NotALeaf(VertexRef),
    #[error("movements take at least one step")]
    ZeroSteps,
}

/// The tree with one leaf detached, kept as raw rotation lists so the walk
/// can run even though the remaining labels are no longer dense.
struct Detached {
    white_rot: Vec<Vec<VertexRef>>,
    black_rot: Vec<Vec<VertexRef>>,
    leaf: VertexRef,
}

impl Detached {
    fn new(tree: &PlaneTree, leaf: VertexRef) -> (Self, Corner) {
        let mut white_rot: Vec<Vec<VertexRef>> =
            tree.white_vertices().map(|v| tree.rotation(v).to_vec()).collect();
        let mut black_rot: Vec<Vec<VertexRef>> =
            tree.black_vertices().map(|v| tree.rotation(v).to_vec()).collect();
        let anchor = tree.rotation(leaf)[0];
        match leaf.color() {
            Color::White => white_rot[leaf.index() - 1].clear(),
            Color::Black => black_rot[leaf.index() - 1].clear(),
        }
        let slot = match anchor.color() {
            Color::White => &mut white_rot[anchor.index() - 1],
            Color::Black => &mut black_rot[anchor.index() - 1],
        };
        let pos = slot.iter().position(|&v| v == leaf).expect("leaf edge");
        slot.remove(pos);
        // The removal corner: arrive from the leaf's predecessor, leave
        // towards its successor in the anchor's rotation.
        let reduced_degree = slot.len();
        let corner = Corner {
            vertex: anchor,
            arrival: (pos + reduced_degree - 1) % reduced_degree,
        };
        (
            Detached {
                white_rot,
                black_rot,
                leaf,
            },
            corner,
        )
    }

    fn rotation(&self, v: VertexRef) -> &[VertexRef] {
        match v.color() {
            Color::White => &self.white_rot[v.index() - 1],
            Color::Black => &self.black_rot[v.index() - 1],
        }
    }

    fn position(&self, v: VertexRef, neighbor: VertexRef) -> usize {
        self.rotation(v)
            .iter()
            .position(|&nb| nb == neighbor)
            .expect("adjacency is symmetric")
    }

    fn advance(&self, c: Corner, direction: Direction) -> Corner {
        match direction {
            Direction::Ccw => {
                let rot = self.rotation(c.vertex);
                let towards = rot[(c.arrival + 1) % rot.len()];
                Corner {
                    vertex: towards,
                    arrival: self.position(towards, c.vertex),
                }
            }
            Direction::Cw => {
                let from = self.rotation(c.vertex)[c.arrival];
                let deg = self.rotation(from).len();
                Corner {
                    vertex: from,
                    arrival: (self.position(from, c.vertex) + deg - 1) % deg,
                }
            }
        }
    }

    /// Reattaches the leaf inside corner `at` and rebuilds a full tree.
    fn attach(&self, at: Corner) -> PlaneTree {
        let mut white_rot = self.white_rot.clone();
        let mut black_rot = self.black_rot.clone();
        let slot = match at.vertex.color() {
            Color::White => &mut white_rot[at.vertex.index() - 1],
            Color::Black => &mut black_rot[at.vertex.index() - 1],
        };
        slot.insert(at.arrival + 1, self.leaf);
        match self.leaf.color() {
            Color::White => white_rot[self.leaf.index() - 1] = vec![at.vertex],
            Color::Black => black_rot[self.leaf.index() - 1] = vec![at.vertex],
        }
        let n = white_rot.len();
        let m = black_rot.len();
        let rotations = white_rot
            .into_iter()
            .enumerate()
            .map(|(i, rot)| (VertexRef::white(i + 1), rot))
            .chain(
                black_rot
                    .into_iter()
                    .enumerate()
                    .map(|(j, rot)| (VertexRef::black(j + 1), rot)),
            );
        PlaneTree::new(n, m, rotations).expect("moving a leaf preserves validity")
    }
}

fn check_leaf(tree: &PlaneTree, leaf: VertexRef) -> Result<(), MoveError> {
    if !tree.contains(leaf) {
        return Err(MoveError::UnknownVertex(leaf));
    }
    if !tree.is_leaf(leaf) {
        return Err(MoveError::NotALeaf(leaf));
    }
    Ok(())
}

/// One elementary movement of `leaf` in `direction`.
pub fn elementary_move(
    tree: &PlaneTree,
    leaf: VertexRef,
    direction: Direction,
) -> Result<MovementOutcome, MoveError> {
    move_leaf(
        tree,
        MovementSpec {
            leaf,
            direction,
            steps: 1,
        },
    )
}

/// Composes `spec.steps` elementary movements of `spec.leaf`.
///
/// On the two-vertex tree there is no same-colour vertex to bypass; the
/// outcome is the unchanged tree with a bypass count of zero.
pub fn move_leaf(tree: &PlaneTree, spec: MovementSpec) -> Result<MovementOutcome, MoveError> {
    if spec.steps == 0 {
        return Err(MoveError::ZeroSteps);
    }
    check_leaf(tree, spec.leaf)?;
    if tree.vertex_count() == 2 {
        return Ok(MovementOutcome {
            tree: tree.clone(),
            bypassed_same_color: 0,
            movement_parity: MovementParity::Even,
        });
    }
    let (detached, mut corner) = Detached::new(tree, spec.leaf);
    for _ in 0..spec.steps {
        corner = detached.advance(corner, spec.direction);
        debug_assert_eq!(corner.vertex.color(), spec.leaf.color());
        corner = detached.advance(corner, spec.direction);
        debug_assert_ne!(corner.vertex.color(), spec.leaf.color());
    }
    Ok(MovementOutcome {
        tree: detached.attach(corner),
        bypassed_same_color: spec.steps,
        movement_parity: MovementParity::of(spec.steps),
    })
}

/// The trees reached by 1, 2, ..., L elementary movements of `leaf`, where
/// L is the edge count of the tree with the leaf removed. The L-th entry is
/// the starting tree again.
pub fn orbit(
    tree: &PlaneTree,
    leaf: VertexRef,
    direction: Direction,
) -> Result<Vec<PlaneTree>, MoveError> {
    check_leaf(tree, leaf)?;
    if tree.vertex_count() == 2 {
        return Ok(Vec::new());
    }
    let (detached, mut corner) = Detached::new(tree, leaf);
    let length = tree.edge_count() - 1;
    let mut trees = Vec::with_capacity(length);
    for _ in 0..length {
        corner = detached.advance(corner, direction);
        corner = detached.advance(corner, direction);
        trees.push(detached.attach(corner));
    }
    debug_assert_eq!(trees.last(), Some(tree));
    Ok(trees)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{canonical_code, decode, lex};
    use crate::parity::invariant;
    use crate::tree::PlaneTree;

    fn w(i: usize) -> VertexRef {
        VertexRef::white(i)
    }

    fn b(j: usize) -> VertexRef {
        VertexRef::black(j)
    }

    fn tree_of(text: &str) -> PlaneTree {
        decode(&lex(text).unwrap()).unwrap().0
    }

    #[test]
    fn path_end_leaf_moves_to_the_far_end() {
        let path = tree_of("v1u1v2u2))))");
        let out = elementary_move(&path, b(2), Direction::Ccw).unwrap();
        assert_eq!(out.tree, tree_of("v1u1v2))u2))"));
        assert_eq!(out.bypassed_same_color, 1);
        assert_eq!(out.movement_parity, MovementParity::Odd);
        assert_eq!(invariant(&path).unwrap(), 1);
        assert_eq!(invariant(&out.tree).unwrap(), 0);
    }

    #[test]
    fn star_leaf_swaps_the_rotation() {
        let star = tree_of("v1u1)u2)u3))");
        let out = elementary_move(&star, b(3), Direction::Ccw).unwrap();
        assert_eq!(out.tree, tree_of("v1u1)u3)u2))"));
        assert_eq!(out.bypassed_same_color, 1);
        assert_eq!(invariant(&star).unwrap(), 0);
        assert_eq!(invariant(&out.tree).unwrap(), 1);
    }

    #[test]
    fn two_vertex_tree_moves_are_the_identity() {
        let single = tree_of("v1u1))");
        let out = elementary_move(&single, b(1), Direction::Ccw).unwrap();
        assert_eq!(out.tree, single);
        assert_eq!(out.bypassed_same_color, 0);
        assert!(out.is_identity());
        assert_eq!(out.movement_parity, MovementParity::Even);
        assert_eq!(orbit(&single, b(1), Direction::Ccw).unwrap(), vec![]);
    }

    #[test]
    fn rejects_non_leaves_and_unknown_vertices() {
        let path = tree_of("v1u1v2u2))))");
        assert_eq!(
            elementary_move(&path, b(1), Direction::Ccw).unwrap_err(),
            MoveError::NotALeaf(b(1))
        );
        assert_eq!(
            elementary_move(&path, b(7), Direction::Ccw).unwrap_err(),
            MoveError::UnknownVertex(b(7))
        );
        assert_eq!(
            move_leaf(
                &path,
                MovementSpec {
                    leaf: b(2),
                    direction: Direction::Ccw,
                    steps: 0
                }
            )
            .unwrap_err(),
            MoveError::ZeroSteps
        );
    }

    #[test]
    fn cw_undoes_ccw() {
        let trees = [
            tree_of("v1u1v2u2))))"),
            tree_of("v1u1)u2)u3))"),
            tree_of("v1u2v2u1))v3)v4u3))))"),
        ];
        for tree in &trees {
            for leaf in tree.leaves() {
                let there = elementary_move(tree, leaf, Direction::Ccw).unwrap();
                let back = elementary_move(&there.tree, leaf, Direction::Cw).unwrap();
                assert_eq!(&back.tree, tree);
            }
        }
    }

    /// The five-vertex configuration with a black leaf on one outer white
    /// vertex and a degree-3 black vertex carrying the other two whites.
    /// Moving the leaf two steps to the far white vertex bypasses the
    /// degree-3 black vertex twice: an even movement.
    #[test]
    fn two_step_transfer_is_even() {
        let tree = PlaneTree::new(
            3,
            2,
            [
                (w(1), vec![b(2), b(1)]),
                (w(2), vec![b(2)]),
                (w(3), vec![b(2)]),
                (b(1), vec![w(1)]),
                (b(2), vec![w(3), w(2), w(1)]),
            ],
        )
        .unwrap();
        let expected = PlaneTree::new(
            3,
            2,
            [
                (w(1), vec![b(2)]),
                (w(2), vec![b(2)]),
                (w(3), vec![b(2), b(1)]),
                (b(1), vec![w(3)]),
                (b(2), vec![w(3), w(2), w(1)]),
            ],
        )
        .unwrap();
        let out = move_leaf(
            &tree,
            MovementSpec {
                leaf: b(1),
                direction: Direction::Cw,
                steps: 2,
            },
        )
        .unwrap();
        assert_eq!(out.tree, expected);
        assert_eq!(out.bypassed_same_color, 2);
        assert_eq!(out.movement_parity, MovementParity::Even);

        // One step lands on the middle white vertex instead.
        let middle = move_leaf(
            &tree,
            MovementSpec {
                leaf: b(1),
                direction: Direction::Cw,
                steps: 1,
            },
        )
        .unwrap();
        assert!(middle.tree.rotation(w(2)).contains(&b(1)));
        assert_eq!(middle.tree.degree(w(2)), 2);
        assert_eq!(middle.movement_parity, MovementParity::Odd);

        // The single ccw step reaches the same far vertex with odd parity:
        // with five vertices the two directions to one spot disagree.
        let other_way = elementary_move(&tree, b(1), Direction::Ccw).unwrap();
        assert_eq!(other_way.tree, expected);
        assert_eq!(other_way.movement_parity, MovementParity::Odd);
    }

    #[test]
    fn orbit_lengths_match_reduced_edge_counts() {
        let star = tree_of("v1u1)u2)u3))");
        let orb = orbit(&star, b(3), Direction::Ccw).unwrap();
        assert_eq!(orb.len(), 2);
        assert_eq!(orb[0], tree_of("v1u1)u3)u2))"));
        assert_eq!(orb[1], star);

        let path = tree_of("v1u1v2u2))))");
        let orb = orbit(&path, b(2), Direction::Ccw).unwrap();
        assert_eq!(orb.len(), 2);
        assert_eq!(orb[0], tree_of("v1u1v2))u2))"));
        assert_eq!(orb[1], path);
    }

    #[test]
    fn multi_step_moves_wrap_around_the_orbit() {
        let star = tree_of("v1u1)u2)u3))");
        let three = move_leaf(
            &star,
            MovementSpec {
                leaf: b(3),
                direction: Direction::Ccw,
                steps: 3,
            },
        )
        .unwrap();
        let one = elementary_move(&star, b(3), Direction::Ccw).unwrap();
        assert_eq!(three.tree, one.tree);
        assert_eq!(three.bypassed_same_color, 3);
        assert_eq!(three.movement_parity, MovementParity::Odd);
    }

    #[test]
    fn moves_preserve_vertex_sets_and_canonical_codes_differ() {
        let path = tree_of("v1u1v2u2))))");
        let out = elementary_move(&path, b(2), Direction::Ccw).unwrap();
        assert_eq!(out.tree.white_count(), path.white_count());
        assert_eq!(out.tree.black_count(), path.black_count());
        assert_eq!(out.tree.edge_count(), path.edge_count());
        assert_ne!(canonical_code(&out.tree), canonical_code(&path));
    }
}
