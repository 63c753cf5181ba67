//! The three-color palette `{a, b, c}` and its subsets as 3-bit masks.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    A = 0,
    B = 1,
    C = 2,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::A, Color::B, Color::C];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Color> {
        Color::ALL.get(i).copied()
    }

    pub fn letter(self) -> char {
        match self {
            Color::A => 'a',
            Color::B => 'b',
            Color::C => 'c',
        }
    }

    pub fn from_letter(ch: char) -> Option<Color> {
        match ch {
            'a' => Some(Color::A),
            'b' => Some(Color::B),
            'c' => Some(Color::C),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A subset of the palette.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);
    pub const FULL: ColorSet = ColorSet(0b111);

    /// Builds a set from a mask; bits above the palette are rejected.
    pub fn from_bits(bits: u8) -> Option<ColorSet> {
        (bits & !0b111 == 0).then_some(ColorSet(bits))
    }

    #[inline]
    pub fn bits(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn single(c: Color) -> ColorSet {
        ColorSet(1 << c.index())
    }

    pub fn of(colors: &[Color]) -> ColorSet {
        colors.iter().fold(ColorSet::EMPTY, |s, &c| s.with(c))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, c: Color) -> bool {
        self.0 >> c.index() & 1 == 1
    }

    #[inline]
    pub fn with(self, c: Color) -> ColorSet {
        ColorSet(self.0 | 1 << c.index())
    }

    #[inline]
    pub fn intersect(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    #[inline]
    pub fn minus(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    #[inline]
    pub fn complement(self) -> ColorSet {
        ColorSet(!self.0 & 0b111)
    }

    #[inline]
    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// The only color of a singleton set.
    pub fn the_color(self) -> Option<Color> {
        (self.len() == 1)
            .then(|| Color::from_index(self.0.trailing_zeros() as usize).expect("palette bit"))
    }

    /// Members in palette order.
    pub fn iter(self) -> impl Iterator<Item = Color> {
        Color::ALL.into_iter().filter(move |&c| self.contains(c))
    }

    /// Parses a nonempty string over `{a, b, c}`; repeated letters are allowed.
    pub fn parse(s: &str) -> Option<ColorSet> {
        if s.is_empty() {
            return None;
        }
        s.chars().try_fold(ColorSet::EMPTY, |set, ch| {
            Color::from_letter(ch).map(|c| set.with(c))
        })
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.iter() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// A renaming of the palette, stored as the image of each color.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PalettePerm([Color; 3]);

impl PalettePerm {
    pub const IDENTITY: PalettePerm = PalettePerm([Color::A, Color::B, Color::C]);

    /// The renaming sending `x -> a`, `y -> b`, `z -> c`.
    pub fn sending(x: Color, y: Color, z: Color) -> Option<PalettePerm> {
        if x == y || y == z || x == z {
            return None;
        }
        let mut img = [Color::A; 3];
        img[x.index()] = Color::A;
        img[y.index()] = Color::B;
        img[z.index()] = Color::C;
        Some(PalettePerm(img))
    }

    #[inline]
    pub fn apply(self, c: Color) -> Color {
        self.0[c.index()]
    }

    pub fn apply_set(self, s: ColorSet) -> ColorSet {
        s.iter()
            .fold(ColorSet::EMPTY, |acc, c| acc.with(self.apply(c)))
    }

    pub fn inverse(self) -> PalettePerm {
        let mut img = [Color::A; 3];
        for c in Color::ALL {
            img[self.apply(c).index()] = c;
        }
        PalettePerm(img)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let bc = ColorSet::of(&[Color::B, Color::C]);
        assert_eq!(bc.len(), 2);
        assert_eq!(bc.complement(), ColorSet::single(Color::A));
        assert_eq!(ColorSet::FULL.minus(bc), ColorSet::single(Color::A));
        assert_eq!(bc.to_string(), "bc");
        assert_eq!(ColorSet::parse("cba"), Some(ColorSet::FULL));
        assert_eq!(ColorSet::parse(""), None);
        assert_eq!(ColorSet::parse("ad"), None);
        assert_eq!(ColorSet::from_bits(8), None);
    }

    #[test]
    fn perm_roundtrip() {
        let p = PalettePerm::sending(Color::C, Color::A, Color::B).unwrap();
        assert_eq!(p.apply(Color::C), Color::A);
        assert_eq!(p.apply(Color::A), Color::B);
        for c in Color::ALL {
            assert_eq!(p.inverse().apply(p.apply(c)), c);
        }
        assert!(PalettePerm::sending(Color::A, Color::A, Color::B).is_none());
    }
}
