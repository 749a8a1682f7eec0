//! Finite group presentations and the torus-knot surgery groups.
//!
//! Words are lists of signed 1-based generator indices: `2` is `x2`, `-2`
//! is `X2 = x2^{-1}`. The text format is
//!
//! ```text
//! gens 2
//! rel x1 x1 X2 X2 X2
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::smith::abelianization_smith;
use crate::error::{Error, Result};
use crate::slope::Slope;

pub type Word = Vec<i32>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub generator_count: usize,
    pub relators: Vec<Word>,
}

/// Cancels adjacent inverse pairs.
pub fn free_reduce(word: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn inverse(word: &[i32]) -> Word {
    word.iter().rev().map(|l| -l).collect()
}

/// `word^n` for any integer `n`.
pub fn power(word: &[i32], n: i64) -> Word {
    let base = if n < 0 { inverse(word) } else { word.to_vec() };
    let mut out = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
    for _ in 0..n.unsigned_abs() {
        out.extend_from_slice(&base);
    }
    free_reduce(&out)
}

fn concat(parts: &[&[i32]]) -> Word {
    free_reduce(&parts.concat())
}

impl GroupPresentation {
    pub fn new(generator_count: usize, relators: Vec<Word>) -> Result<Self> {
        for (k, r) in relators.iter().enumerate() {
            if let Some(bad) = r
                .iter()
                .find(|l| **l == 0 || l.unsigned_abs() as usize > generator_count)
            {
                return Err(Error::invalid(format!(
                    "relator {} uses generator index {bad}, outside 1..={generator_count}",
                    k + 1
                )));
            }
        }
        Ok(GroupPresentation {
            generator_count,
            relators,
        })
    }

    /// Relators × generators matrix of exponent sums.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; self.generator_count];
                for &l in r {
                    row[l.unsigned_abs() as usize - 1] += l.signum() as i64;
                }
                row
            })
            .collect()
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Vec::len).sum()
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens {}", self.generator_count)?;
        for r in &self.relators {
            f.write_str("rel")?;
            for &l in r {
                let c = if l > 0 { 'x' } else { 'X' };
                write!(f, " {c}{}", l.unsigned_abs())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for GroupPresentation {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut gens: Option<usize> = None;
        let mut relators = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let start = offset;
            offset += line.len();
            let mut tokens = tokens_with_offsets(line).map(|(o, t)| (start + o, t));
            let Some((kw_pos, kw)) = tokens.next() else {
                continue;
            };
            if kw.starts_with('#') {
                continue;
            }
            match (kw, gens) {
                ("gens", None) => {
                    let (pos, n) = tokens.next().ok_or_else(|| {
                        Error::parse(start + line.trim_end().len(), "expected a generator count")
                    })?;
                    let n = n
                        .parse()
                        .map_err(|_| Error::parse(pos, format!("bad generator count {n:?}")))?;
                    if let Some((pos, t)) = tokens.next() {
                        return Err(Error::parse(
                            pos,
                            format!("unexpected {t:?} after generator count"),
                        ));
                    }
                    gens = Some(n);
                }
                ("gens", Some(_)) => return Err(Error::parse(kw_pos, "duplicate 'gens' line")),
                (_, None) => {
                    return Err(Error::parse(
                        kw_pos,
                        format!("expected 'gens', found {kw:?}"),
                    ))
                }
                ("rel", Some(n)) => {
                    let word = tokens
                        .map(|(pos, t)| parse_letter(pos, t, n))
                        .collect::<Result<Word>>()?;
                    relators.push(word);
                }
                (_, Some(_)) => {
                    return Err(Error::parse(
                        kw_pos,
                        format!("expected 'rel', found {kw:?}"),
                    ))
                }
            }
        }
        let n = gens.ok_or_else(|| Error::parse(text.len(), "missing 'gens' line"))?;
        GroupPresentation::new(n, relators)
    }
}

fn tokens_with_offsets(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace()
        .map(move |t| (t.as_ptr() as usize - line.as_ptr() as usize, t))
}

fn parse_letter(pos: usize, tok: &str, gens: usize) -> Result<i32> {
    let sign = match tok.chars().next() {
        Some('x') => 1,
        Some('X') => -1,
        _ => {
            return Err(Error::parse(
                pos,
                format!("expected x<k> or X<k>, found {tok:?}"),
            ))
        }
    };
    let idx: usize = tok[1..]
        .parse()
        .map_err(|_| Error::parse(pos + 1, format!("bad generator index in {tok:?}")))?;
    if idx == 0 || idx > gens {
        return Err(Error::parse(
            pos + 1,
            format!("generator index {idx} outside 1..={gens}"),
        ));
    }
    Ok(sign * idx as i32)
}

/// Meridian and longitude words in `⟨x, y | x^a = y^b⟩`.
///
/// `μ = x^{-s} y^r` with `ra - sb = 1` and the least nonnegative `r`;
/// `λ = x^a μ^{-ab}`, which commutes with `μ` since `x^a` is central.
pub fn torus_peripheral_words(a: u64, b: u64) -> Result<(Word, Word)> {
    validate_torus(a, b)?;
    let (a_i, b_i) = (a as i64, b as i64);
    let r = if b == 1 {
        0
    } else {
        // a^{-1} mod b
        let e = a_i.extended_gcd(&b_i);
        e.x.rem_euclid(b_i)
    };
    let s = (r * a_i - 1) / b_i;
    debug_assert_eq!(r * a_i - s * b_i, 1);
    let mu = concat(&[&power(&[1], -s), &power(&[2], r)]);
    let lambda = concat(&[&power(&[1], a_i), &power(&mu, -a_i * b_i)]);
    Ok((mu, lambda))
}

fn validate_torus(a: u64, b: u64) -> Result<()> {
    if a == 0 || b == 0 || a.gcd(&b) != 1 {
        return Err(Error::invalid(format!(
            "torus parameters ({a}, {b}) must be positive and coprime"
        )));
    }
    if a > 1000 || b > 1000 {
        return Err(Error::invalid(
            "torus parameters above 1000 are not supported",
        ));
    }
    Ok(())
}

/// `π_1` of the torus-knot complement: `⟨x, y | x^a y^{-b}⟩`.
pub fn torus_knot_group(a: u64, b: u64) -> Result<GroupPresentation> {
    validate_torus(a, b)?;
    let rel = concat(&[&power(&[1], a as i64), &power(&[2], -(b as i64))]);
    let pres = GroupPresentation::new(2, vec![rel])?;
    assert_eq!(
        abelianization_smith(&pres),
        vec![0],
        "knot group must have H_1 = Z"
    );
    Ok(pres)
}

/// `π_1(S^3_{p/q}(T(a,b)))`; the filling relator is `μ^p λ^q`.
pub fn surgery_presentation(a: u64, b: u64, slope: Slope) -> Result<GroupPresentation> {
    let (mu, lambda) = torus_peripheral_words(a, b)?;
    let (p, q) = (slope.p(), slope.q());
    if (p as u128 * mu.len() as u128 + q as u128 * lambda.len() as u128) > 1 << 22 {
        return Err(Error::invalid(format!(
            "surgery relator for {slope} is too long"
        )));
    }
    let mut pres = torus_knot_group(a, b)?;
    pres.relators
        .push(concat(&[&power(&mu, p as i64), &power(&lambda, q as i64)]));
    assert_eq!(
        abelianization_smith(&pres),
        vec![p],
        "H_1 of {slope}-surgery on T({a},{b}) must be Z/{p}"
    );
    Ok(pres)
}

/// `⟨x | x^p⟩`, the fundamental group of `L(p, q)`.
pub fn lens_presentation(p: u64) -> Result<GroupPresentation> {
    if p == 0 || p > 1 << 20 {
        return Err(Error::invalid(format!(
            "lens order {p} must be in 1..=2^20"
        )));
    }
    GroupPresentation::new(1, vec![power(&[1], p as i64)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let pres = surgery_presentation(2, 3, Slope::integer(5)).unwrap();
        let text = pres.to_string();
        assert!(text.starts_with("gens 2\nrel x1 x1 X2 X2 X2\nrel "));
        assert_eq!(text.parse::<GroupPresentation>().unwrap(), pres);
        let parsed: GroupPresentation = "# comment\n\ngens 1\nrel x1 x1 x1\n".parse().unwrap();
        assert_eq!(parsed, lens_presentation(3).unwrap());
        let free: GroupPresentation = "gens 2".parse().unwrap();
        assert!(free.relators.is_empty());
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = "gens 2\nrel x1 y2"
            .parse::<GroupPresentation>()
            .unwrap_err();
        assert_eq!(e, Error::parse(14, "expected x<k> or X<k>, found \"y2\""));
        let e = "gens 2\nrel x3".parse::<GroupPresentation>().unwrap_err();
        assert!(matches!(e, Error::Parse { pos: 12, .. }));
        let e = "rel x1".parse::<GroupPresentation>().unwrap_err();
        assert!(matches!(e, Error::Parse { pos: 0, .. }));
        assert!(matches!(
            "".parse::<GroupPresentation>(),
            Err(Error::Parse { .. })
        ));
        assert!("gens two".parse::<GroupPresentation>().is_err());
        assert!("gens 1\ngens 1".parse::<GroupPresentation>().is_err());
    }

    #[test]
    fn word_helpers() {
        assert_eq!(free_reduce(&[1, 2, -2, -1, 1]), vec![1]);
        assert_eq!(power(&[1, 2], -2), vec![-2, -1, -2, -1]);
        assert_eq!(power(&[1, 2], 0), Vec::<i32>::new());
    }

    #[test]
    fn trefoil_peripheral_words() {
        let (mu, lambda) = torus_peripheral_words(2, 3).unwrap();
        // 2r - 3s = 1 with r = 2, s = 1
        assert_eq!(mu, vec![-1, 2, 2]);
        let sums = |w: &[i32]| {
            let m = GroupPresentation::new(2, vec![w.to_vec()])
                .unwrap()
                .exponent_matrix();
            (m[0][0], m[0][1])
        };
        // x ↦ t^3, y ↦ t^2 in H_1 = Z
        let (ex, ey) = sums(&mu);
        assert_eq!(3 * ex + 2 * ey, 1);
        let (ex, ey) = sums(&lambda);
        assert_eq!(3 * ex + 2 * ey, 0);
        assert!(torus_peripheral_words(2, 4).is_err());
        let (mu, _) = torus_peripheral_words(3, 1).unwrap();
        assert_eq!(mu, vec![1]);
    }

    #[test]
    fn known_abelianizations() {
        use super::abelianization_smith as ab;
        assert_eq!(
            ab(&surgery_presentation(2, 3, Slope::integer(5)).unwrap()),
            vec![5]
        );
        assert_eq!(
            ab(&surgery_presentation(2, 3, Slope::integer(1)).unwrap()),
            vec![1]
        );
        assert_eq!(ab(&torus_knot_group(5, 2).unwrap()), vec![0]);
        assert_eq!(ab(&lens_presentation(5).unwrap()), vec![5]);
        assert_eq!(ab(&lens_presentation(1).unwrap()), vec![1]);
        assert_eq!(ab(&lens_presentation(3).unwrap()), vec![3]);
        assert_eq!(
            ab(&surgery_presentation(3, 4, Slope::integer(0)).unwrap()),
            vec![0]
        );
    }
}
