//! Integer partitions and the box statistics (hooks, contents, `κ`, `n(μ)`,
//! `z_μ`) that every other module indexes by.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;

/// A weakly decreasing sequence of positive parts. The empty sequence is the
/// empty partition.
///
/// Ordering is by size first, then reverse lexicographic within a size, so a
/// `BTreeMap<Partition, _>` iterates degree by degree in the same order
/// [`enumerate`] produces.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::NonPositivePart(parts));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|μ|`
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `l(μ)`
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (0..first)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Boxes of the Young diagram as 1-based `(row, column)` pairs.
    pub fn boxes(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i as u32 + 1, j)))
    }

    /// Multiplicity of each distinct part.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == part).count() as u32
    }

    /// Multiset union of parts; realizes `p_μ · p_ν = p_{μ∪ν}`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.parts.iter().peekable(), other.parts.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x >= y {
                        parts.push(x);
                        a.next();
                    } else {
                        parts.push(y);
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    parts.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    parts.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Partition { parts }
    }

    pub fn with_part(&self, part: u32) -> Partition {
        self.union(&Partition { parts: vec![part] })
    }

    /// Removes one copy of `part`, if present.
    pub fn without_part(&self, part: u32) -> Option<Partition> {
        let idx = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(idx);
        Some(Partition { parts })
    }

    /// `κ_μ = Σ μ_i (μ_i − 2i + 1)`; always even.
    pub fn kappa(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let (p, i) = (p as i64, i as i64 + 1);
                p * (p - 2 * i + 1)
            })
            .sum()
    }

    /// `n(μ) = Σ (i − 1) μ_i`
    pub fn n(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as i64 * p as i64)
            .sum()
    }

    /// `|Aut(μ)| = Π_k m_k(μ)!`
    pub fn aut(&self) -> BigInt {
        self.multiplicities()
            .values()
            .map(|&m| factorial(m))
            .product()
    }

    /// `z_μ = Π μ_i · |Aut(μ)|`, the centralizer order of cycle type `μ`.
    pub fn z(&self) -> BigInt {
        let prod: BigInt = self.parts.iter().map(|&p| BigInt::from(p)).product();
        prod * self.aut()
    }

    /// Hook lengths `h(x) = μ_i + μ^t_j − i − j + 1`, in box order.
    pub fn hooks(&self) -> Vec<u32> {
        let t = self.conjugate();
        self.boxes()
            .map(|(i, j)| self.parts[i as usize - 1] + t.parts[j as usize - 1] + 1 - i - j)
            .collect()
    }

    /// Contents `c(x) = j − i`, in box order.
    pub fn contents(&self) -> Vec<i64> {
        self.boxes().map(|(i, j)| j as i64 - i as i64).collect()
    }

    pub fn stats(&self) -> PartitionStats {
        let mut hooks = self.hooks();
        hooks.sort_unstable();
        let mut contents = self.contents();
        contents.sort_unstable();
        PartitionStats {
            kappa: self.kappa(),
            n_mu: self.n(),
            n_mu_t: self.conjugate().n(),
            z_mu: self.z(),
            aut: self.aut(),
            hooks,
            contents,
        }
    }
}

fn factorial(m: u32) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, k| acc * k)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders as `[3,1]`; the empty partition is `[]`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Syntax(s.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::Syntax(s.to_string()))?;
        Partition::new(parts)
    }
}

/// Box statistics of a partition. Multisets are stored sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    pub kappa: i64,
    pub n_mu: i64,
    pub n_mu_t: i64,
    pub z_mu: BigInt,
    pub aut: BigInt,
    pub hooks: Vec<u32>,
    pub contents: Vec<i64>,
}

/// All partitions of `d`, in reverse lexicographic order (`[d]` first,
/// `[1,…,1]` last).
pub fn enumerate(d: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(d, d, &mut current, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=remaining.min(max_part)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

/// All partitions of size at most `d`, degree by degree.
pub fn enumerate_up_to(d: u32) -> Vec<Partition> {
    (0..=d).flat_map(enumerate).collect()
}

/// Exponent multisets of the two sides of Macdonald's identity
///
/// `Σ_{x∈μ} t^{h(x)} + Σ_{i<j} t^{μ_i−μ_j+j−i} = Σ_i Σ_{j=1}^{μ_i−i+l(μ)} t^j`,
///
/// each returned sorted ascending.
pub fn hook_shift_multisets(mu: &Partition) -> (Vec<i64>, Vec<i64>) {
    let parts: Vec<i64> = mu.parts.iter().map(|&p| p as i64).collect();
    let l = parts.len() as i64;
    let mut left: Vec<i64> = mu.hooks().into_iter().map(i64::from).collect();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            left.push(parts[i] - parts[j] + (j - i) as i64);
        }
    }
    let mut right = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        right.extend(1..=p - (i as i64 + 1) + l);
    }
    left.sort_unstable();
    right.sort_unstable();
    (left, right)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate(0), vec![Partition::empty()]);
        assert_eq!(enumerate(4).len(), 5);
        assert_eq!(enumerate(6).len(), 11);
        assert_eq!(
            enumerate(4),
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
        // sorted order agrees with enumeration order
        let mut all = enumerate_up_to(6);
        let copy = all.clone();
        all.sort();
        assert_eq!(all, copy);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn stats_of_small_shapes() {
        let s = p(&[3, 1]).stats();
        assert_eq!(s.kappa, 4);
        assert_eq!(s.n_mu, 1);
        assert_eq!(s.n_mu_t, 3);
        assert_eq!(s.z_mu, BigInt::from(3));
        assert_eq!(s.hooks, vec![1, 1, 2, 4]);
        assert_eq!(s.contents, vec![-1, 0, 1, 2]);

        let s = p(&[1]).stats();
        assert_eq!((s.kappa, s.z_mu.clone()), (0, BigInt::from(1)));
        assert_eq!(s.hooks, vec![1]);
        assert_eq!(s.contents, vec![0]);

        assert_eq!(p(&[2, 2, 1]).z(), BigInt::from(8));

        let e = Partition::empty().stats();
        assert_eq!(e.kappa, 0);
        assert_eq!(e.z_mu, BigInt::from(1));
        assert!(e.hooks.is_empty() && e.contents.is_empty());
    }

    #[test]
    fn macdonald_multisets_small() {
        assert_eq!(
            hook_shift_multisets(&p(&[2, 1])),
            (vec![1, 1, 2, 3], vec![1, 1, 2, 3])
        );
        assert_eq!(hook_shift_multisets(&p(&[1])), (vec![1], vec![1]));
        let (l, r) = hook_shift_multisets(&p(&[2, 2]));
        assert_eq!(l, vec![1, 1, 2, 2, 3]);
        assert_eq!(l, r);
    }

    #[test]
    fn parse_and_render() {
        assert_eq!("[3,1]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!(" [ 2, 2 ,1] ".parse::<Partition>().unwrap(), p(&[2, 2, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 1]).to_string(), "[3,1]");
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[0]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
    }

    #[test]
    fn part_surgery() {
        let mu = p(&[3, 1, 1]);
        assert_eq!(mu.without_part(1), Some(p(&[3, 1])));
        assert_eq!(mu.without_part(2), None);
        assert_eq!(mu.with_part(2), p(&[3, 2, 1, 1]));
        assert_eq!(p(&[2]).union(&p(&[1])), p(&[2, 1]));
    }
}
