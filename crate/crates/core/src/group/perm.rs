//! Permutations of `{0, .., k-1}` and their 1-based cycle notation.

use std::fmt;

use crate::error::{Error, Result};

/// Largest point set a permutation generator may act on.
pub const MAX_POINTS: usize = 64;

/// A bijection of `{0, .., degree-1}` stored as its image list.
///
/// Products compose left to right: `p.then(&q)` applies `p` first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u8).collect())
    }

    /// Builds a permutation from 0-based images, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        if images.len() > MAX_POINTS {
            return Err(Error::InvalidPermutation(format!(
                "acts on {} points, at most {MAX_POINTS} supported",
                images.len()
            )));
        }
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "images {images:?} do not form a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Perm(images.into_iter().map(|i| i as u8).collect()))
    }

    /// Builds a permutation of `degree` points from disjoint 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} outside 1..={degree}",
                        a + 1
                    )));
                }
                if used[a] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} appears twice",
                        a + 1
                    )));
                }
                used[a] = true;
                images[a] = cycle[(i + 1) % cycle.len()];
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.0.get(point).map_or(point, |&p| p as usize)
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&p| p as usize)
    }

    /// Extends the point set with fixed points.
    pub fn padded(&self, degree: usize) -> Self {
        let mut v = self.0.clone();
        v.extend(self.0.len() as u8..degree as u8);
        Perm(v)
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        let n = self.degree().max(other.degree());
        Perm((0..n).map(|i| other.image(self.image(i)) as u8).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0u8; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            v[p as usize] = i as u8;
        }
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// Non-trivial cycles, 0-based, each starting at its smallest point and
    /// ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.image(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.image(p);
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1, |acc, c| crate::arith::lcm(acc, c.len() as u64))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }
}

impl fmt::Display for Perm {
    /// Canonical 1-based cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Parses comma-separated generators written as products of disjoint cycles,
/// e.g. `"(1 2 3), (1 2)"`. Points are 1-based; `()` is the identity.
///
/// All returned permutations act on the same point set `{1..k}` where `k` is
/// the largest point moved by any generator.
pub fn parse_cycle_notation(text: &str) -> Result<Vec<Perm>> {
    let mut parser = CycleParser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut generators: Vec<Vec<Vec<usize>>> = Vec::new();
    parser.skip_ws();
    if parser.at_end() {
        return Ok(Vec::new());
    }
    loop {
        generators.push(parser.generator()?);
        parser.skip_ws();
        match parser.peek() {
            None => break,
            Some(b',') => {
                parser.pos += 1;
                parser.skip_ws();
            }
            Some(c) => {
                return Err(parser.error(format!("expected ',' or end, found {:?}", c as char)))
            }
        }
    }
    // fixed points written as 1-cycles do not enlarge the point set
    for cycles in &mut generators {
        cycles.retain(|c| c.len() > 1);
    }
    let degree = generators
        .iter()
        .flatten()
        .flatten()
        .map(|&p| p + 1)
        .max()
        .unwrap_or(0);
    if degree > MAX_POINTS {
        return Err(Error::InvalidPermutation(format!(
            "point {degree} exceeds the {MAX_POINTS}-point limit"
        )));
    }
    generators
        .iter()
        .map(|cycles| Perm::from_cycles(degree, cycles))
        .collect()
}

/// Renders generators in the form accepted by [`parse_cycle_notation`].
pub fn print_cycle_notation(perms: &[Perm]) -> String {
    perms
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

struct CycleParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl CycleParser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, msg: String) -> Error {
        Error::Syntax { pos: self.pos, msg }
    }

    /// generator := cycle+ ; each point may appear once per generator.
    fn generator(&mut self) -> Result<Vec<Vec<usize>>> {
        let mut cycles = Vec::new();
        let mut used: Vec<usize> = Vec::new();
        loop {
            self.skip_ws();
            if self.peek() != Some(b'(') {
                if cycles.is_empty() {
                    return Err(self.error("expected '('".into()));
                }
                return Ok(cycles);
            }
            self.pos += 1;
            let mut cycle = Vec::new();
            loop {
                self.skip_ws();
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    Some(c) if c.is_ascii_digit() => {
                        let start = self.pos;
                        let point = self.number()?;
                        if used.contains(&point) {
                            return Err(Error::RepeatedPoint { point, pos: start });
                        }
                        used.push(point);
                        cycle.push(point - 1);
                        self.skip_ws();
                        if self.peek() == Some(b',') {
                            // GAP-style "(1,2,3)" is tolerated inside a cycle
                            self.pos += 1;
                        }
                    }
                    Some(c) => return Err(self.error(format!("unexpected {:?}", c as char))),
                    None => return Err(self.error("unterminated cycle".into())),
                }
            }
            cycles.push(cycle);
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let value: usize = text.parse().map_err(|_| Error::Syntax {
            pos: start,
            msg: format!("bad integer {text:?}"),
        })?;
        if value == 0 {
            return Err(Error::Syntax {
                pos: start,
                msg: "points are 1-based".into(),
            });
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_two_generators_on_three_points() {
        let gens = parse_cycle_notation("(1 2 3), (1 2)").unwrap();
        assert_eq!(gens.len(), 2);
        assert!(gens.iter().all(|g| g.degree() == 3));
        assert_eq!(gens[0].order(), 3);
        assert_eq!(gens[1].order(), 2);
    }

    #[test]
    fn empty_cycle_is_identity() {
        let gens = parse_cycle_notation("()").unwrap();
        assert_eq!(gens.len(), 1);
        assert!(gens[0].is_identity());
        assert_eq!(gens[0].to_string(), "()");
    }

    #[test]
    fn repeated_point_rejected() {
        let err = parse_cycle_notation("(1 2)(2 3)").unwrap_err();
        assert!(
            matches!(err, Error::RepeatedPoint { point: 2, .. }),
            "{err:?}"
        );
        assert!(matches!(
            parse_cycle_notation("(1 1)").unwrap_err(),
            Error::RepeatedPoint { point: 1, .. }
        ));
    }

    #[test]
    fn syntax_errors_report_position() {
        match parse_cycle_notation("(1 2) x").unwrap_err() {
            Error::Syntax { pos, .. } => assert_eq!(pos, 6),
            e => panic!("unexpected {e:?}"),
        }
        assert!(matches!(
            parse_cycle_notation("(1 2"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_cycle_notation("(0 1)"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn whitespace_tolerant() {
        let a = parse_cycle_notation("  ( 1  2 3 )(4 5) ,(1 2)  ").unwrap();
        assert_eq!(a[0].to_string(), "(1 2 3)(4 5)");
    }

    #[test]
    fn composition_is_left_to_right() {
        let g = parse_cycle_notation("(1 2 3), (1 2)").unwrap();
        // 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
        assert_eq!(g[0].then(&g[1]).to_string(), "(2 3)");
        assert!(g[0].then(&g[0].inverse()).is_identity());
    }
}
