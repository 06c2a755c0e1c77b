use std::cmp::Ordering;
use std::fmt;

/// A jet variable `x_j^{(i)}`: coordinate `j` (1-based) at level `i`.
///
/// The single-coordinate variable `y_i` is `x_1^{(i)}`. Variables are
/// linearized by `(level, coord)` ascending; this is the order used by the
/// reverse-lexicographic tie-break and by canonical printing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarId {
    coord: u32,
    level: u32,
}

impl VarId {
    /// Panics if `coord == 0`; coordinates are 1-based.
    pub fn new(coord: u32, level: u32) -> Self {
        assert!(coord >= 1, "coordinates are numbered from 1");
        VarId { coord, level }
    }

    /// `y_level`, i.e. coordinate 1.
    pub fn y(level: u32) -> Self {
        VarId { coord: 1, level }
    }

    pub fn coord(self) -> u32 {
        self.coord
    }

    pub fn level(self) -> u32 {
        self.level
    }

    /// The weight of a variable is its level.
    pub fn weight(self) -> u64 {
        u64::from(self.level)
    }

    /// The image under the derivation `D`: same coordinate, one level up.
    pub fn raised(self) -> Self {
        VarId {
            coord: self.coord,
            level: self.level + 1,
        }
    }
}

impl Ord for VarId {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.level, self.coord).cmp(&(other.level, other.coord))
    }
}

impl PartialOrd for VarId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coord == 1 {
            write!(f, "y{}", self.level)
        } else {
            write!(f, "x{}_{}", self.coord, self.level)
        }
    }
}
