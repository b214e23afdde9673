//! Braid words in Artin generators and their underlying permutations.

use crate::error::{Error, Result};
use num_integer::Integer;

/// Word in the Artin generators of the braid group on `strands` strands.
///
/// Letter i > 0 means the generator crossing strands i and i+1 positively,
/// i < 0 its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::input("braid must have at least 1 strand"));
        }
        for &l in &letters {
            if l == 0 {
                return Err(Error::input("braid letter 0 is not a generator"));
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(Error::input(format!(
                    "braid letter {l} out of range for {strands} strands"
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::input("cannot concatenate braids on different strand counts"));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord::new(self.strands, letters)
    }

    /// Parses the text format `n: l1 l2 l3 ...` (colon optional).
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let mut tokens = text.split_whitespace();
        let first = tokens
            .next()
            .ok_or_else(|| Error::input("empty braid text"))?;
        let strands: usize = first
            .trim_end_matches(':')
            .parse()
            .map_err(|_| Error::input(format!("bad strand count '{first}'")))?;
        let mut letters = Vec::new();
        for tok in tokens {
            let l: i32 = tok
                .parse()
                .map_err(|_| Error::input(format!("bad braid letter '{tok}'")))?;
            letters.push(l);
        }
        BraidWord::new(strands, letters)
    }

    pub fn render(&self) -> String {
        let mut s = format!("{}:", self.strands);
        for l in &self.letters {
            s.push(' ');
            s.push_str(&l.to_string());
        }
        s
    }
}

/// The q-strand braid (sigma_1 ... sigma_{q-1})^p whose closure is T(p,q).
pub fn torus_braid(p: u64, q: u64) -> Result<BraidWord> {
    if p < 2 || q < 2 {
        return Err(Error::input(format!(
            "torus braid requires p, q >= 2, got ({p}, {q})"
        )));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::input(format!(
            "torus braid requires gcd(p, q) = 1, got gcd({p}, {q}) = {}",
            p.gcd(&q)
        )));
    }
    let mut letters = Vec::with_capacity((p * (q - 1)) as usize);
    for _ in 0..p {
        for i in 1..q {
            letters.push(i as i32);
        }
    }
    BraidWord::new(q as usize, letters)
}

/// Bijection on {1..n}, stored as 0-based images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::input("image sequence is not a permutation"));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based image of a 0-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// self then other.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
            }
        }
        cycles
    }
}

/// Underlying permutation of a braid word; its cycle count is the component
/// count of the closure.
pub fn braid_permutation(b: &BraidWord) -> Permutation {
    let n = b.strands();
    let mut images: Vec<usize> = (0..n).collect();
    // images[s] = where the strand entering at bottom position s currently is.
    // A letter |i| swaps positions i-1 and i.
    let mut at: Vec<usize> = (0..n).collect(); // position -> strand
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize - 1;
        at.swap(i, i + 1);
    }
    for (pos, &strand) in at.iter().enumerate() {
        images[strand] = pos;
    }
    Permutation { images }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_braid_examples() {
        let b = torus_braid(3, 2).unwrap();
        assert_eq!(b.strands(), 2);
        assert_eq!(b.letters(), &[1, 1, 1]);

        let b = torus_braid(9, 4).unwrap();
        assert_eq!(b.strands(), 4);
        assert_eq!(b.len(), 27);
        let period: Vec<i32> = vec![1, 2, 3];
        for chunk in b.letters().chunks(3) {
            assert_eq!(chunk, &period[..]);
        }
    }

    #[test]
    fn torus_braid_rejects_bad_input() {
        assert!(torus_braid(4, 4).is_err());
        assert!(torus_braid(1, 2).is_err());
        assert!(torus_braid(6, 3).is_err());
    }

    #[test]
    fn permutation_of_torus_braids() {
        let id = BraidWord::identity(3);
        assert_eq!(braid_permutation(&id), Permutation::identity(3));
        assert_eq!(braid_permutation(&id).cycle_count(), 3);

        let b = torus_braid(9, 4).unwrap();
        assert_eq!(braid_permutation(&b).cycle_count(), 1);

        // sigma_1^3 on 2 strands is the transposition
        let b = torus_braid(3, 2).unwrap();
        let p = braid_permutation(&b);
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(1), 0);
        assert_eq!(p.cycle_count(), 1);
    }

    #[test]
    fn parse_render_round_trip() {
        let b = BraidWord::parse("4: 1 2 3 -1 -2").unwrap();
        assert_eq!(b.strands(), 4);
        assert_eq!(b.letters(), &[1, 2, 3, -1, -2]);
        assert_eq!(BraidWord::parse(&b.render()).unwrap(), b);
        assert!(BraidWord::parse("4: 0").is_err());
        assert!(BraidWord::parse("4: 4").is_err());
        assert!(BraidWord::parse("").is_err());
    }
}
