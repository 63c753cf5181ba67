//! Coloring an induced C5 so that it reads a, b, a, b, c.
//!
//! A proper 3-coloring of a 5-cycle uses one color exactly once and the
//! other two twice each, alternating along the remaining path. Rotating
//! the cycle so the lone color sits last and renaming colors (first color
//! to a, second to b, lone color to c) turns every such coloring into the
//! canonical one. With arbitrary lists each of the 30 colorings the lists
//! allow is tried. With all lists full the renaming is a symmetry of the
//! instance but the rotation is not, since the rest of the graph tells the
//! cycle positions apart; the five rotations are tried.

use crate::lists::ListAssignment;
use crate::palette::{Color, ColorSet, PalettePerm};
use crate::two_list::Coloring;

pub const CANONICAL: [Color; 5] = [Color::A, Color::B, Color::A, Color::B, Color::C];

/// One C5 coloring in normalized form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Anchoring {
    /// The cycle rotated so that `CANONICAL[k]` is the color of `c5[k]`.
    pub c5: [usize; 5],
    /// Renaming from input colors to normalized colors.
    pub perm: PalettePerm,
}

impl Anchoring {
    /// Renames the lists and colors the cycle canonically.
    pub fn apply(&self, lists: &ListAssignment) -> ListAssignment {
        let mut out = lists.permuted(self.perm);
        for (k, &v) in self.c5.iter().enumerate() {
            out.set(v, ColorSet::single(CANONICAL[k]));
        }
        out
    }

    /// Maps a coloring of the normalized instance back to input colors.
    pub fn restore(&self, c: &Coloring) -> Coloring {
        let back = self.perm.inverse();
        Coloring(c.as_slice().iter().map(|&x| back.apply(x)).collect())
    }
}

/// Every proper coloring of `c5` allowed by `lists`, normalized, up to
/// renaming colors when all lists are full. The identity anchoring comes
/// first when it is allowed.
pub fn anchorings(c5: [usize; 5], lists: &ListAssignment) -> Vec<Anchoring> {
    let renamings: &[[Color; 3]] = if lists.as_slice().iter().all(|&s| s == ColorSet::FULL) {
        &PERMUTATIONS[..1]
    } else {
        &PERMUTATIONS
    };
    let mut out = Vec::new();
    // `lone` is the position of the color used once.
    for lone in [4, 0, 1, 2, 3] {
        let rotated: [usize; 5] = std::array::from_fn(|k| c5[(lone + 1 + k) % 5]);
        for &[x, y, z] in renamings {
            let colors = [x, y, x, y, z];
            if rotated
                .iter()
                .zip(colors)
                .all(|(&v, c)| lists.get(v).contains(c))
            {
                let perm = PalettePerm::sending(x, y, z).expect("distinct colors");
                out.push(Anchoring { c5: rotated, perm });
            }
        }
    }
    out
}

const PERMUTATIONS: [[Color; 3]; 6] = {
    use Color::*;
    [
        [A, B, C],
        [A, C, B],
        [B, A, C],
        [B, C, A],
        [C, A, B],
        [C, B, A],
    ]
};
