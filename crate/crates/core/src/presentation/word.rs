//! Generators and free-group words.

use std::fmt;

/// A generator of an Artin group or of one of its co-cyclic subgroups.
///
/// `Copy(w, j)` is the conjugate `u^j w u^-j` and `Bar(u)` is `u^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    Vertex(String),
    Copy(String, u32),
    Bar(String),
}

impl Gen {
    pub fn vertex(s: &str) -> Gen {
        Gen::Vertex(s.to_string())
    }

    pub fn copy(s: &str, j: u32) -> Gen {
        Gen::Copy(s.to_string(), j)
    }

    pub fn bar(s: &str) -> Gen {
        Gen::Bar(s.to_string())
    }

    pub fn parse(s: &str) -> Option<Gen> {
        match s.split_once('.') {
            None => Some(Gen::vertex(s)),
            Some((v, "bar")) => Some(Gen::bar(v)),
            Some((v, j)) => j.parse().ok().map(|j| Gen::copy(v, j)),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::Vertex(v) => write!(f, "{v}"),
            Gen::Copy(v, j) => write!(f, "{v}.{j}"),
            Gen::Bar(v) => write!(f, "{v}.bar"),
        }
    }
}

/// A word as syllables `(generator, nonzero exponent)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<(Gen, i64)>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word and reduces it freely.
    pub fn new(syllables: impl IntoIterator<Item = (Gen, i64)>) -> Self {
        let mut out: Vec<(Gen, i64)> = Vec::new();
        for (g, e) in syllables {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some((h, f)) if *h == g => {
                    *f += e;
                    if *f == 0 {
                        out.pop();
                    }
                }
                _ => out.push((g, e)),
            }
        }
        Word(out)
    }

    pub fn letter(g: Gen) -> Self {
        Word(vec![(g, 1)])
    }

    pub fn syllables(&self) -> &[(Gen, i64)] {
        &self.0
    }

    /// Letters with signs `+1`/`-1`, left to right.
    pub fn letters(&self) -> impl Iterator<Item = (&Gen, i64)> + '_ {
        self.0.iter().flat_map(|(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|(g, e)| (g.clone(), -e)).collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        Word::new(self.0.iter().chain(&other.0).cloned())
    }

    pub fn pow(&self, n: u32) -> Self {
        Word::new((0..n).flat_map(|_| self.0.iter().cloned()))
    }

    pub fn exponent_sum(&self, g: &Gen) -> i64 {
        self.0.iter().filter(|(h, _)| h == g).map(|(_, e)| e).sum()
    }

    pub fn generators(&self) -> impl Iterator<Item = &Gen> + '_ {
        self.0.iter().map(|(g, _)| g)
    }

    /// Cyclically reduced form.
    pub fn cyclic_reduce(&self) -> Self {
        let mut s = self.0.clone();
        while s.len() >= 2 && s[0].0 == s[s.len() - 1].0 {
            let (_, e) = s.pop().unwrap();
            s[0].1 += e;
            if s[0].1 == 0 {
                s.remove(0);
            }
        }
        Word(s)
    }

    /// A representative of the class of this word under cyclic permutation
    /// and inversion; equal for two relators iff they define the same
    /// normal-closure generator up to those moves.
    pub fn cyclic_canonical(&self) -> Vec<(Gen, i64)> {
        let w = self.cyclic_reduce();
        let mut best: Option<Vec<(Gen, i64)>> = None;
        for cand in [w.clone(), w.inverse()] {
            let letters: Vec<(Gen, i64)> = cand.letters().map(|(g, s)| (g.clone(), s)).collect();
            let n = letters.len();
            for r in 0..n.max(1) {
                let rot: Vec<(Gen, i64)> = letters[r..].iter().chain(&letters[..r]).cloned().collect();
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        best.unwrap_or_default()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (g, e) in &self.0 {
            // expand positive powers so braid words stay readable
            let (reps, shown) = if *e > 0 { (*e as usize, 1) } else { (1, *e) };
            for _ in 0..reps {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                if shown == 1 {
                    write!(f, "{g}")?;
                } else {
                    write!(f, "{g}^{shown}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Gen {
        Gen::vertex("a")
    }
    fn b() -> Gen {
        Gen::vertex("b")
    }

    #[test]
    fn reduction() {
        let w = Word::new([(a(), 1), (b(), 2), (b(), -2), (a(), 1)]);
        assert_eq!(w.syllables(), &[(a(), 2)]);
        assert!(Word::new([(a(), 1), (a(), -1)]).is_empty());
    }

    #[test]
    fn cyclic_classes() {
        let w1 = Word::new([(a(), 1), (b(), 1), (a(), -1), (b(), -1)]);
        let w2 = Word::new([(b(), 1), (a(), -1), (b(), -1), (a(), 1)]);
        let w3 = w1.inverse();
        assert_eq!(w1.cyclic_canonical(), w2.cyclic_canonical());
        assert_eq!(w1.cyclic_canonical(), w3.cyclic_canonical());
        let conj = Word::new([(b(), 1), (a(), 1), (b(), -1)]);
        assert_eq!(conj.cyclic_reduce(), Word::letter(a()));
    }

    #[test]
    fn display_and_parse() {
        let w = Word::new([(Gen::copy("w", 0), 1), (Gen::bar("u"), -2), (a(), 2)]);
        assert_eq!(w.to_string(), "w.0*u.bar^-2*a*a");
        assert_eq!(Gen::parse("w.3"), Some(Gen::copy("w", 3)));
        assert_eq!(Gen::parse("u.bar"), Some(Gen::bar("u")));
        assert_eq!(Gen::parse("x"), Some(Gen::vertex("x")));
    }
}
