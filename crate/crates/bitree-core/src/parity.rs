//! The inversion-count parity invariant of contour codes.
//!
//! For a code of a tree with an even vertex count the invariant is
//! `i = (a + b + c + (d + e_half)/2) mod 2`, where `a` and `b` count label
//! inversions within the white and black classes, `c` counts black-label
//! positions preceding white-label positions, `d` counts closing brackets
//! preceding labels, and `e_half = |n - m| / 2`. The value does not depend
//! on the root choice, so it is an invariant of the tree itself.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::code::{canonical_code, encode, CodeString, EncodingRoot, Token};
use crate::tree::PlaneTree;

/// The five counts of the invariant and the resulting parity bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantBreakdown {
    /// White-label inversions: pairs with the larger index first.
    pub a: u64,
    /// Black-label inversions.
    pub b: u64,
    /// Position pairs with a black label before a white label.
    pub c: u64,
    /// Position pairs with a closing bracket before a label.
    pub d: u64,
    /// `|n - m| / 2`.
    pub e_half: u64,
    /// `(a + b + c + (d + e_half)/2) mod 2`.
    pub i: u8,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParityError {
    #[error("the parity invariant needs an even vertex count, got {n} white + {m} black")]
    OddVertexCount { n: usize, m: usize },
    /// `d + e_half` is always even for codes of even-vertex trees; seeing an
    /// odd sum means the code or the counting is corrupted.
    #[error("d + e_half = {d} + {e_half} is odd; the invariant is undefined")]
    HalfParityViolation { d: u64, e_half: u64 },
}

/// Computes the invariant counts of a code.
///
/// All pair counts range over ordered position pairs of the whole code, not
/// just adjacent ones. Requires an even total vertex count.
pub fn breakdown(code: &CodeString) -> Result<InvariantBreakdown, ParityError> {
    let n = code.white_label_count();
    let m = code.black_label_count();
    if (n + m) % 2 != 0 {
        return Err(ParityError::OddVertexCount { n, m });
    }
    let mut whites_seen: Vec<usize> = Vec::with_capacity(n);
    let mut blacks_seen: Vec<usize> = Vec::with_capacity(m);
    let mut closes_seen: u64 = 0;
    let (mut a, mut b, mut c, mut d) = (0u64, 0u64, 0u64, 0u64);
    for tok in code.tokens() {
        match *tok {
            Token::White(k) => {
                a += whites_seen.iter().filter(|&&x| x > k).count() as u64;
                c += blacks_seen.len() as u64;
                d += closes_seen;
                whites_seen.push(k);
            }
            Token::Black(k) => {
                b += blacks_seen.iter().filter(|&&x| x > k).count() as u64;
                d += closes_seen;
                blacks_seen.push(k);
            }
            Token::Close => closes_seen += 1,
        }
    }
    let e_half = (n.abs_diff(m) / 2) as u64;
    if (d + e_half) % 2 != 0 {
        return Err(ParityError::HalfParityViolation { d, e_half });
    }
    let i = ((a + b + c + (d + e_half) / 2) % 2) as u8;
    Ok(InvariantBreakdown { a, b, c, d, e_half, i })
}

/// The parity invariant of a tree, evaluated on its canonical code.
///
/// Root independence makes any root choice equivalent; the canonical code
/// keeps the result deterministic.
pub fn invariant(tree: &PlaneTree) -> Result<u8, ParityError> {
    if tree.vertex_count() % 2 != 0 {
        return Err(ParityError::OddVertexCount {
            n: tree.white_count(),
            m: tree.black_count(),
        });
    }
    Ok(breakdown(&canonical_code(tree))?.i)
}

/// Evaluates the invariant for every white root vertex and every incident
/// root edge. Root independence predicts a singleton set.
pub fn root_sweep(tree: &PlaneTree) -> Result<BTreeSet<u8>, ParityError> {
    if tree.vertex_count() % 2 != 0 {
        return Err(ParityError::OddVertexCount {
            n: tree.white_count(),
            m: tree.black_count(),
        });
    }
    let mut values = BTreeSet::new();
    for vertex in tree.white_vertices() {
        for &edge in tree.rotation(vertex) {
            let code = encode(tree, EncodingRoot { vertex, edge })
                .expect("white dart roots are valid");
            values.insert(breakdown(&code)?.i);
        }
    }
    Ok(values)
}
