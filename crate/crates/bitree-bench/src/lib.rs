//! Fixture builders shared by the benchmarks.

use bitree_core::{decode, lex, PlaneTree};

/// A path on `2 * half` vertices: `v1-u1-v2-u2-...`, as a code string.
pub fn long_path_code(half: usize) -> String {
    assert!(half >= 1);
    let mut code = String::new();
    for k in 1..=half {
        code.push_str(&format!("v{k}u{k}"));
    }
    code.push_str(&")".repeat(2 * half));
    code
}

/// The decoded fixture tree for [`long_path_code`].
pub fn long_path(half: usize) -> PlaneTree {
    decode(&lex(&long_path_code(half)).expect("fixture code lexes"))
        .expect("fixture code decodes")
        .0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        assert_eq!(long_path_code(2), "v1u1v2u2))))");
        let tree = long_path(10);
        assert_eq!(tree.vertex_count(), 20);
        assert_eq!(tree.passport().to_string(), "2,2,2,2,2,2,2,2,2,1|2,2,2,2,2,2,2,2,2,1");
    }
}
