use std::cmp::Ordering;
use std::fmt;

/// One of the six primitive letters, in the fixed normal-form order
/// `A < D < B < alpha < delta < beta`.
///
/// `C` and `gamma` are not letters; they are abbreviations expanded by the
/// named-element layer (`C = delta - A - B`, `gamma = -alpha - beta`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Letter {
    A = 0,
    D = 1,
    B = 2,
    Alpha = 3,
    Delta = 4,
    Beta = 5,
}

impl Letter {
    /// All six letters in rank order.
    pub const ALL: [Letter; 6] = [
        Letter::A,
        Letter::D,
        Letter::B,
        Letter::Alpha,
        Letter::Delta,
        Letter::Beta,
    ];

    /// Position in the normal-form order, 0 through 5.
    pub fn rank(self) -> usize {
        self as usize
    }

    pub fn from_rank(rank: usize) -> Letter {
        Self::ALL[rank]
    }

    /// Whether the letter lies in the commutative subalgebra generators
    /// `{alpha, delta, beta}`.
    pub fn is_central(self) -> bool {
        self.rank() >= 3
    }

    /// Filtration weight of the letter: `D` counts 2, every other letter 1.
    pub fn weight(self) -> u32 {
        if self == Letter::D {
            2
        } else {
            1
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Letter::A => "A",
            Letter::D => "D",
            Letter::B => "B",
            Letter::Alpha => "alpha",
            Letter::Delta => "delta",
            Letter::Beta => "beta",
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finite sequence of letters: an element of the free monoid.
///
/// The empty word is the multiplicative identity. A word is *normal* when
/// its letter ranks are nondecreasing left to right; normal words are in
/// bijection with [`ExponentTuple`]s.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word { letters: Vec::new() }
    }

    pub fn letter(l: Letter) -> Word {
        Word { letters: vec![l] }
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        Word {
            letters: letters.into_iter().collect(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Ranks nondecreasing left to right.
    pub fn is_normal(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] <= w[1])
    }

    /// Filtration weight `i + 2j + k + r + s + t`, valid for any word since
    /// it only counts letters (`D` twice).
    pub fn weight(&self) -> u32 {
        self.letters.iter().map(|l| l.weight()).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Index of the leftmost adjacent pair in strictly decreasing rank
    /// order, if any. `None` exactly when the word is normal.
    pub fn first_inversion(&self) -> Option<usize> {
        self.letters.windows(2).position(|w| w[0] > w[1])
    }

    /// Rightmost counterpart of [`Word::first_inversion`].
    pub fn last_inversion(&self) -> Option<usize> {
        (0..self.letters.len().saturating_sub(1))
            .rev()
            .find(|&i| self.letters[i] > self.letters[i + 1])
    }

    /// Replace the two letters at `at` by `replacement`, keeping the rest.
    pub(crate) fn splice_pair(&self, at: usize, replacement: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() - 2 + replacement.len());
        letters.extend_from_slice(&self.letters[..at]);
        letters.extend_from_slice(&replacement.letters);
        letters.extend_from_slice(&self.letters[at + 2..]);
        Word { letters }
    }
}

/// Canonical term order: length first, then rank-lexicographic.
impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders with exponents collapsed, e.g. `A^2 B alpha`; the empty word
/// renders as `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut run: Option<(Letter, u32)> = None;
        let mut emit = |f: &mut fmt::Formatter<'_>, l: Letter, count: u32| -> fmt::Result {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if count == 1 {
                write!(f, "{l}")
            } else {
                write!(f, "{l}^{count}")
            }
        };
        for &l in &self.letters {
            match run {
                Some((prev, count)) if prev == l => run = Some((prev, count + 1)),
                Some((prev, count)) => {
                    emit(f, prev, count)?;
                    run = Some((l, 1));
                }
                None => run = Some((l, 1)),
            }
        }
        if let Some((prev, count)) = run {
            emit(f, prev, count)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Exponents `(i, j, k, r, s, t)` of a normal word
/// `A^i D^j B^k alpha^r delta^s beta^t`, indexed by letter rank.
///
/// The derived ordering is lexicographic on `(i, j, k, r, s, t)`, which is
/// the order used for leading terms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentTuple(pub [u32; 6]);

impl ExponentTuple {
    /// Filtration weight `i + 2j + k + r + s + t`.
    pub fn degree(&self) -> u32 {
        let [i, j, k, r, s, t] = self.0;
        i + 2 * j + k + r + s + t
    }

    /// The normal word with these exponents.
    pub fn word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.0.iter().sum::<u32>() as usize);
        for (rank, &count) in self.0.iter().enumerate() {
            letters.extend(std::iter::repeat(Letter::from_rank(rank)).take(count as usize));
        }
        Word { letters }
    }

    /// Exponents of a normal word; `None` if the word is not normal.
    pub fn from_word(w: &Word) -> Option<ExponentTuple> {
        if !w.is_normal() {
            return None;
        }
        let mut exps = [0u32; 6];
        for l in w.letters() {
            exps[l.rank()] += 1;
        }
        Some(ExponentTuple(exps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_is_a_bijection_in_order() {
        for (rank, l) in Letter::ALL.iter().enumerate() {
            assert_eq!(l.rank(), rank);
            assert_eq!(Letter::from_rank(rank), *l);
        }
        assert!(Letter::A < Letter::D);
        assert!(Letter::D < Letter::B);
        assert!(Letter::B < Letter::Alpha);
        assert!(Letter::Alpha < Letter::Delta);
        assert!(Letter::Delta < Letter::Beta);
    }

    #[test]
    fn normality_and_inversions() {
        let ab = Word::from_letters([Letter::A, Letter::B]);
        let ba = Word::from_letters([Letter::B, Letter::A]);
        assert!(ab.is_normal());
        assert!(!ba.is_normal());
        assert!(Word::empty().is_normal());
        assert_eq!(ba.first_inversion(), Some(0));
        assert_eq!(ab.first_inversion(), None);

        let bda = Word::from_letters([Letter::B, Letter::D, Letter::A]);
        assert_eq!(bda.first_inversion(), Some(0));
        assert_eq!(bda.last_inversion(), Some(1));
    }

    #[test]
    fn word_order_is_length_then_rank_lex() {
        let d = Word::letter(Letter::D);
        let ab = Word::from_letters([Letter::A, Letter::B]);
        let ad = Word::from_letters([Letter::A, Letter::D]);
        assert!(d < ab, "shorter words come first");
        assert!(ab > ad, "B ranks above D");
        assert!(Word::empty() < d);
    }

    #[test]
    fn tuple_round_trip_on_all_normal_words_up_to_len_8() {
        fn rec(prefix: &mut Vec<Letter>, min_rank: usize, remaining: usize, count: &mut usize) {
            let w = Word::from_letters(prefix.iter().copied());
            let t = ExponentTuple::from_word(&w).expect("constructed normal");
            assert_eq!(t.word(), w);
            *count += 1;
            if remaining == 0 {
                return;
            }
            for rank in min_rank..6 {
                prefix.push(Letter::from_rank(rank));
                rec(prefix, rank, remaining - 1, count);
                prefix.pop();
            }
        }
        let mut count = 0;
        rec(&mut Vec::new(), 0, 8, &mut count);
        // nondecreasing sequences of length <= 8 over 6 letters
        assert_eq!(count, 3003);
    }

    #[test]
    fn display_collapses_exponents() {
        let w = Word::from_letters([Letter::A, Letter::A, Letter::B, Letter::Alpha]);
        assert_eq!(w.to_string(), "A^2 B alpha");
        assert_eq!(Word::empty().to_string(), "1");
        assert_eq!(Word::letter(Letter::Delta).to_string(), "delta");
    }

    #[test]
    fn weight_counts_d_twice() {
        let w = Word::from_letters([Letter::A, Letter::D, Letter::D, Letter::Beta]);
        assert_eq!(w.weight(), 6);
        assert_eq!(ExponentTuple([0, 2, 0, 0, 0, 1]).degree(), 5);
    }
}
