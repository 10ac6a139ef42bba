//! S-packing colorings and the four-class (1,1,2,2) instance.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("a packing spec needs at least one class")]
    Empty,
    #[error("radii must be positive")]
    ZeroRadius,
    #[error("radii must be non-decreasing")]
    Decreasing,
    #[error("cannot parse radius `{0}`")]
    Parse(String),
}

/// Non-decreasing exclusion radii `(a_1, ..., a_r)`: two vertices of class
/// `i` must be more than `a_i` apart.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SPackingSpec(Vec<u32>);

impl SPackingSpec {
    pub fn new(radii: Vec<u32>) -> Result<Self, SpecError> {
        if radii.is_empty() {
            return Err(SpecError::Empty);
        }
        if radii.contains(&0) {
            return Err(SpecError::ZeroRadius);
        }
        if radii.windows(2).any(|w| w[0] > w[1]) {
            return Err(SpecError::Decreasing);
        }
        Ok(SPackingSpec(radii))
    }

    /// The (1,1,2,2) spec: two independent sets and two 2-packings.
    pub fn s1122() -> Self {
        SPackingSpec(vec![1, 1, 2, 2])
    }

    /// The packing-coloring spec (1,2,...,r).
    pub fn packing(r: u32) -> Self {
        SPackingSpec((1..=r).collect())
    }

    pub fn radii(&self) -> &[u32] {
        &self.0
    }

    pub fn radius(&self, class: usize) -> u32 {
        self.0[class]
    }

    pub fn classes(&self) -> usize {
        self.0.len()
    }

    pub fn is_1122(&self) -> bool {
        self.0 == [1, 1, 2, 2]
    }

    /// Display label of a class: `1a 1b 2a 2b` for (1,1,2,2), `c1..cr` otherwise.
    pub fn label(&self, class: usize) -> String {
        if self.is_1122() {
            Color22::ALL[class].to_string()
        } else {
            format!("c{}", class + 1)
        }
    }

    pub fn parse_label(&self, label: &str) -> Option<usize> {
        if self.is_1122() {
            if let Ok(c) = label.parse::<Color22>() {
                return Some(c.index());
            }
        }
        let i: usize = label.strip_prefix('c')?.parse().ok()?;
        (1..=self.classes()).contains(&i).then(|| i - 1)
    }
}

impl FromStr for SPackingSpec {
    type Err = SpecError;

    /// Accepts `1,1,2,2` and the displayed form `(1,1,2,2)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        let radii = s
            .split(',')
            .map(|p| {
                let p = p.trim();
                p.parse::<u32>()
                    .map_err(|_| SpecError::Parse(p.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        SPackingSpec::new(radii)
    }
}

impl fmt::Display for SPackingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The four classes of a (1,1,2,2)-coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color22 {
    OneA,
    OneB,
    TwoA,
    TwoB,
}

impl Color22 {
    pub const ALL: [Color22; 4] = [Color22::OneA, Color22::OneB, Color22::TwoA, Color22::TwoB];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Color22 {
        Color22::ALL[i]
    }

    pub fn is_two(self) -> bool {
        matches!(self, Color22::TwoA | Color22::TwoB)
    }

    pub fn is_one(self) -> bool {
        !self.is_two()
    }

    /// The other class of the same radius.
    pub fn partner(self) -> Color22 {
        match self {
            Color22::OneA => Color22::OneB,
            Color22::OneB => Color22::OneA,
            Color22::TwoA => Color22::TwoB,
            Color22::TwoB => Color22::TwoA,
        }
    }
}

impl fmt::Display for Color22 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color22::OneA => "1a",
            Color22::OneB => "1b",
            Color22::TwoA => "2a",
            Color22::TwoB => "2b",
        })
    }
}

impl FromStr for Color22 {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "1a" => Ok(Color22::OneA),
            "1b" => Ok(Color22::OneB),
            "2a" => Ok(Color22::TwoA),
            "2b" => Ok(Color22::TwoB),
            other => Err(format!("unknown color `{other}`")),
        }
    }
}

/// Which of the two same-radius class pairs a transposition swaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transposition {
    Ones,
    Twos,
}

impl Transposition {
    pub fn apply(self, c: Color22) -> Color22 {
        match (self, c) {
            (Transposition::Ones, c) if c.is_one() => c.partner(),
            (Transposition::Twos, c) if c.is_two() => c.partner(),
            (_, c) => c,
        }
    }
}

/// Swaps `1a <-> 1b` or `2a <-> 2b` throughout a color slice.
pub fn transpose(colors: &mut [Color22], t: Transposition) {
    for c in colors {
        *c = t.apply(*c);
    }
}

/// A total assignment of vertices to the classes of a spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingColoring {
    spec: SPackingSpec,
    classes: Vec<usize>,
}

impl PackingColoring {
    /// # Panics
    /// If some class index is out of range for `spec`.
    pub fn new(spec: SPackingSpec, classes: Vec<usize>) -> Self {
        assert!(classes.iter().all(|&c| c < spec.classes()));
        PackingColoring { spec, classes }
    }

    pub fn from_colors(colors: &[Color22]) -> Self {
        PackingColoring {
            spec: SPackingSpec::s1122(),
            classes: colors.iter().map(|c| c.index()).collect(),
        }
    }

    pub fn spec(&self) -> &SPackingSpec {
        &self.spec
    }

    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.classes[v]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Colors as [`Color22`]; `None` unless the spec is (1,1,2,2).
    pub fn colors22(&self) -> Option<Vec<Color22>> {
        self.spec.is_1122().then(|| {
            self.classes
                .iter()
                .map(|&c| Color22::from_index(c))
                .collect()
        })
    }

    pub fn label(&self, v: usize) -> String {
        self.spec.label(self.classes[v])
    }

    /// The coloring of the graph relabeled by `perm` (vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> PackingColoring {
        let mut classes = vec![0; self.classes.len()];
        for (v, &c) in self.classes.iter().enumerate() {
            classes[perm[v]] = c;
        }
        PackingColoring {
            spec: self.spec.clone(),
            classes,
        }
    }

    /// `vertex label` lines, one per vertex.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for v in 0..self.classes.len() {
            out.push_str(&format!("{v} {}\n", self.label(v)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_parsing() {
        assert_eq!(
            "1,1,2,2".parse::<SPackingSpec>().unwrap(),
            SPackingSpec::s1122()
        );
        let spec = SPackingSpec::new(vec![1, 2, 3]).unwrap();
        assert_eq!(spec.to_string().parse::<SPackingSpec>(), Ok(spec));
        assert_eq!("2,1".parse::<SPackingSpec>(), Err(SpecError::Decreasing));
        assert_eq!("0,1".parse::<SPackingSpec>(), Err(SpecError::ZeroRadius));
        assert!(matches!(
            "1,x".parse::<SPackingSpec>(),
            Err(SpecError::Parse(_))
        ));
        assert_eq!(SPackingSpec::packing(5).radii(), &[1, 2, 3, 4, 5]);
    }

    #[test]
    fn labels() {
        let s = SPackingSpec::s1122();
        assert_eq!(s.label(2), "2a");
        assert_eq!(s.parse_label("1b"), Some(1));
        assert_eq!(s.parse_label("c4"), Some(3));
        let p = SPackingSpec::packing(3);
        assert_eq!(p.label(0), "c1");
        assert_eq!(p.parse_label("c3"), Some(2));
        assert_eq!(p.parse_label("c4"), None);
        assert_eq!(p.parse_label("1a"), None);
    }

    #[test]
    fn transpositions_only_touch_their_radius() {
        let mut cs = Color22::ALL.to_vec();
        transpose(&mut cs, Transposition::Twos);
        assert_eq!(
            cs,
            [Color22::OneA, Color22::OneB, Color22::TwoB, Color22::TwoA]
        );
        transpose(&mut cs, Transposition::Ones);
        assert_eq!(
            cs,
            [Color22::OneB, Color22::OneA, Color22::TwoB, Color22::TwoA]
        );
    }
}
