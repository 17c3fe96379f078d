use std::cmp::Ordering;
use std::fmt;

/// A monomial of the free algebra: a sequence of generator indices.
///
/// Ordered graded-lexicographically: shorter words first, then letter by
/// letter with generator 0 smallest.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letter(g: usize) -> Self {
        Self(vec![g])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Position of the word among all words of its degree over `gens`
    /// generators, in increasing order. Equal to the word read as a base
    /// `gens` numeral.
    pub fn index(&self, gens: usize) -> usize {
        self.0.iter().fold(0, |acc, &a| acc * gens + a)
    }

    pub fn from_index(mut index: usize, degree: usize, gens: usize) -> Word {
        let mut v = vec![0; degree];
        for slot in v.iter_mut().rev() {
            *slot = index % gens;
            index /= gens;
        }
        Word(v)
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.0.iter().copied().max()
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        self.0
            .iter()
            .map(|&g| names.get(g).map_or_else(|| format!("x{g}"), Clone::clone))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let x = Word::letter(0);
        let yx = Word::new(vec![1, 0]);
        let xy = Word::new(vec![0, 1]);
        assert!(x < xy);
        assert!(xy < yx);
        assert!(Word::new(vec![1]) < Word::new(vec![0, 0]));
    }

    #[test]
    fn index_matches_order() {
        for d in 0..4 {
            let words: Vec<Word> = (0..3usize.pow(d)).map(|i| Word::from_index(i, d as usize, 3)).collect();
            for (i, w) in words.iter().enumerate() {
                assert_eq!(w.index(3), i);
            }
            assert!(words.windows(2).all(|p| p[0] < p[1]));
        }
    }
}
