use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// How a [`SignSeq`] word is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `s_1 … s_{n−1}` of a primitive zero `s_1√(1 + s_2√(1 + … + s_{n−1}√2))`,
    /// outermost sign first.
    Address,
    /// `σ_1 … σ_L` of an eventually-`+1` sequence, innermost sign first;
    /// every position past the word is `+1`.
    Sigma,
}

/// A finite word of signs.
///
/// Sigma words are canonical: they end at the last `−1` (or are empty for
/// the all-`+1` sequence), so equality of words is equality of sequences.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignSeq {
    word: Vec<Sign>,
    convention: Convention,
}

impl SignSeq {
    pub fn address(word: Vec<Sign>) -> Self {
        SignSeq {
            word,
            convention: Convention::Address,
        }
    }

    /// Sigma sequence from a prefix; trailing `+1` entries are dropped.
    pub fn sigma(mut word: Vec<Sign>) -> Self {
        while word.last() == Some(&Sign::Plus) {
            word.pop();
        }
        SignSeq {
            word,
            convention: Convention::Sigma,
        }
    }

    /// The all-`+1` sequence.
    pub fn all_plus() -> Self {
        Self::sigma(Vec::new())
    }

    pub fn word(&self) -> &[Sign] {
        &self.word
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Position of the last `−1` (0 for the all-`+1` sequence).
    pub fn generation(&self) -> usize {
        match self.convention {
            Convention::Sigma => self.word.len(),
            Convention::Address => self.to_sigma().word.len(),
        }
    }

    /// 1-based entry; positions past the word read as `+1`.
    pub fn sign_at(&self, i: usize) -> Sign {
        assert!(i >= 1, "sign positions are 1-based");
        self.word.get(i - 1).copied().unwrap_or(Sign::Plus)
    }

    /// Σ form: an address `s` maps to `σ_{n−k} = s_k`, i.e. the reversed word.
    pub fn to_sigma(&self) -> SignSeq {
        match self.convention {
            Convention::Sigma => self.clone(),
            Convention::Address => SignSeq::sigma(self.word.iter().rev().copied().collect()),
        }
    }

    /// Address of a primitive zero of `P_n`: pad to length `n − 1` with `+1`
    /// and reverse. Fails if the sigma word does not fit.
    pub fn to_address(&self, n: usize) -> Result<SignSeq> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("address needs n >= 2, got {n}")));
        }
        let sigma = self.to_sigma();
        if sigma.word.len() > n - 1 {
            return Err(Error::InvalidArgument(format!(
                "sigma {sigma} does not fit an address of P_{n}"
            )));
        }
        let mut padded = sigma.word;
        padded.resize(n - 1, Sign::Plus);
        padded.reverse();
        Ok(SignSeq::address(padded))
    }

    /// Sign sequence of the complex-conjugate zero.
    ///
    /// Up to the first `−1` (at position `j`) every radical is real; the
    /// radicand at position `j + 1` is a negative real, where the principal
    /// root is `+i·…`. Conjugation therefore flips exactly `σ_{j+1}`.
    pub fn conjugate(&self) -> SignSeq {
        let sigma = self.to_sigma();
        let Some(j) = sigma.word.iter().position(|s| s.is_minus()) else {
            return sigma;
        };
        let mut word = sigma.word;
        if j + 1 < word.len() {
            word[j + 1] = word[j + 1].flip();
        } else {
            word.push(Sign::Minus);
        }
        SignSeq::sigma(word)
    }

    /// All sigma sequences whose last `−1` is at position `g`, in
    /// lexicographic order with `+ < −`.
    pub fn generation_members(g: usize) -> Vec<SignSeq> {
        if g == 0 {
            return vec![SignSeq::all_plus()];
        }
        assert!(g <= 40, "generation {g} is too large to enumerate");
        let free = g - 1;
        (0u64..1 << free)
            .map(|bits| {
                let mut word: Vec<Sign> = (0..free)
                    .map(|i| {
                        if bits >> (free - 1 - i) & 1 == 1 {
                            Sign::Minus
                        } else {
                            Sign::Plus
                        }
                    })
                    .collect();
                word.push(Sign::Minus);
                SignSeq::sigma(word)
            })
            .collect()
    }

    /// Every sigma sequence with last `−1` at position `≤ depth`, ordered
    /// by generation then lexicographically. There are `2^depth` of them.
    pub fn up_to(depth: usize) -> Vec<SignSeq> {
        (0..=depth).flat_map(Self::generation_members).collect()
    }
}

impl fmt::Display for SignSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for s in &self.word {
            write!(f, "{}", s.as_char())?;
        }
        f.write_str("]")
    }
}

/// Parses `[+-+]`-style words (brackets optional) as sigma sequences.
impl FromStr for SignSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .unwrap_or(body);
        let word = body
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(Error::Parse(format!("unexpected {other:?} in sign word"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SignSeq::sigma(word))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word() -> impl Strategy<Value = Vec<Sign>> {
        proptest::collection::vec(prop_oneof![Just(Sign::Plus), Just(Sign::Minus)], 0..24)
    }

    #[test]
    fn canonical_form_drops_plus_tail() {
        let s = SignSeq::sigma(vec![Sign::Minus, Sign::Plus, Sign::Plus]);
        assert_eq!(s.word(), &[Sign::Minus]);
        assert_eq!(s.generation(), 1);
        assert_eq!(SignSeq::sigma(vec![Sign::Plus]), SignSeq::all_plus());
        assert_eq!(s.sign_at(7), Sign::Plus);
    }

    #[test]
    fn address_to_sigma_reverses() {
        // s = (+, +, -) as an address of P_4 means σ_3 = +, σ_2 = +, σ_1 = -
        let a = SignSeq::address(vec![Sign::Plus, Sign::Plus, Sign::Minus]);
        assert_eq!(a.to_sigma().word(), &[Sign::Minus]);
        assert_eq!(a.to_sigma().to_address(4).unwrap(), a);
        assert!(SignSeq::sigma(vec![Sign::Minus; 4]).to_address(4).is_err());
    }

    #[test]
    fn generations_have_expected_sizes() {
        assert_eq!(SignSeq::generation_members(0).len(), 1);
        assert_eq!(SignSeq::generation_members(1).len(), 1);
        assert_eq!(SignSeq::generation_members(5).len(), 16);
        let all = SignSeq::up_to(6);
        assert_eq!(all.len(), 64);
        let mut dedup = all.clone();
        dedup.sort_by_key(|s| s.to_string());
        dedup.dedup();
        assert_eq!(dedup.len(), 64);
        let g3: Vec<String> = SignSeq::generation_members(3).iter().map(|s| s.to_string()).collect();
        assert_eq!(g3, ["[++-]", "[+--]", "[-+-]", "[---]"]);
    }

    #[test]
    fn conjugation_rule() {
        assert_eq!(SignSeq::all_plus().conjugate(), SignSeq::all_plus());
        let s: SignSeq = "-".parse().unwrap();
        assert_eq!(s.conjugate().to_string(), "[--]");
        assert_eq!(s.conjugate().conjugate(), s);
        let s: SignSeq = "+-+-".parse().unwrap();
        assert_eq!(s.conjugate().to_string(), "[+---]");
    }

    #[test]
    fn parse_display() {
        let s: SignSeq = "[+-]".parse().unwrap();
        assert_eq!(s.to_string(), "[+-]");
        assert_eq!("".parse::<SignSeq>().unwrap(), SignSeq::all_plus());
        assert!("+x".parse::<SignSeq>().is_err());
    }

    proptest! {
        #[test]
        fn conventions_round_trip(w in word(), extra in 0usize..4) {
            let sigma = SignSeq::sigma(w);
            let n = (sigma.len() + 1 + extra).max(2);
            let addr = sigma.to_address(n).unwrap();
            prop_assert_eq!(addr.len(), n - 1);
            prop_assert_eq!(addr.to_sigma(), sigma.clone());
            prop_assert_eq!(addr.to_sigma().to_address(n).unwrap(), addr);
        }

        #[test]
        fn conjugation_is_an_involution(w in word()) {
            let s = SignSeq::sigma(w);
            prop_assert_eq!(s.conjugate().conjugate(), s);
        }
    }
}
