//! Plane labelled bipartite trees: rotation-system model, contour codes,
//! the inversion parity invariant, leaf movements, and exact censuses.
//!
//! A tree is a rotation system over white vertices `v1..vn` and black
//! vertices `u1..um`. Rooting it at a white vertex and walking the boundary
//! counterclockwise yields a code of labels and closing brackets; codes
//! carry a parity invariant that is independent of the root choice and flips
//! under every elementary leaf movement. The census module enumerates all
//! `(n, m)`-trees exactly and verifies the closed-form counts and the
//! automorphism-sum identity.
//!
//! ```
//! use bitree_core::{decode, invariant, lex};
//!
//! let (tree, _root) = decode(&lex("v1u1v2u2))))").unwrap()).unwrap();
//! assert_eq!(tree.passport().to_string(), "2,1|2,1");
//! assert_eq!(invariant(&tree).unwrap(), 1);
//! ```

pub mod census;
pub mod code;
pub mod moves;
pub mod parity;
pub mod tree;
pub mod verify;

pub use census::{
    aut_order, count_passport, count_total, enumerate_all, factorial, for_each_tree, gj_check,
    movement_graph, parity_census, sample_random, shapes, BigCount, CensusError, CensusReport,
    ExactRational, GjCheck, MovementGraphSummary, ShapeRecord, DEFAULT_MAX_TREES,
};
pub use code::{
    canonical_code, decode, encode, lex, shape_code, shape_code_with_multiplicity, CodeError,
    CodeString, EncodingRoot, ShapeCode, ShapeToken, Token,
};
pub use moves::{
    elementary_move, move_leaf, orbit, Direction, MoveError, MovementOutcome, MovementParity,
    MovementSpec,
};
pub use parity::{breakdown, invariant, root_sweep, InvariantBreakdown, ParityError};
pub use tree::{
    Color, Corner, DualPassport, InvalidPassport, ParseVertexError, Passport, PlaneTree,
    TreeError, VertexRef,
};
pub use verify::{run as run_verification, Claim, VerificationReport};
