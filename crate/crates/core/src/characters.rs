//! Irreducible characters `χ_ν(μ)` of the symmetric groups.
//!
//! [`chi`] runs the Murnaghan–Nakayama border-strip recursion on beta-sets
//! (first-column hook lengths), memoized per `(ν, remaining class)`.
//! [`char_oracle`] computes the same numbers by a route that never touches
//! border strips: it writes `p_μ` and every `s_ν` in the monomial basis of
//! `|μ|` variables and solves the unitriangular Kostka system.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::partitions::{enumerate, Partition};

/// Largest symmetric-group degree for which tables are built.
pub const DEFAULT_MAX_N: u32 = 12;

/// Largest degree [`char_oracle`] accepts.
pub const ORACLE_MAX_N: u32 = 8;

type ChiMemo = RwLock<HashMap<(Partition, Partition), BigInt>>;

fn chi_memo() -> &'static ChiMemo {
    static MEMO: OnceLock<ChiMemo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `χ_ν(μ)`. Errors when the sizes differ.
pub fn chi(nu: &Partition, mu: &Partition) -> Result<BigInt, Error> {
    if nu.size() != mu.size() {
        return Err(Error::SizeMismatch {
            nu: nu.clone(),
            mu: mu.clone(),
        });
    }
    Ok(mn(nu, mu.parts()))
}

fn mn(nu: &Partition, class: &[u32]) -> BigInt {
    let Some((&k, rest)) = class.split_first() else {
        return BigInt::one();
    };
    let key = (nu.clone(), Partition::from_unsorted(class.to_vec()));
    if let Some(v) = chi_memo().read().unwrap().get(&key) {
        return v.clone();
    }

    // beta_i = ν_i + l − i, strictly decreasing; a border strip of length k
    // is a move beta -> beta − k onto a free position, with sign given by
    // the number of beta-numbers jumped over.
    let l = nu.len() as i64;
    let beta: Vec<i64> = nu
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + l - 1 - i as i64)
        .collect();
    let k = k as i64;
    let mut total = BigInt::zero();
    for (idx, &b) in beta.iter().enumerate() {
        let target = b - k;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&c| target < c && c < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let len = moved.len() as i64;
        let parts: Vec<u32> = moved
            .iter()
            .enumerate()
            .map(|(i, &c)| (c - (len - 1 - i as i64)) as u32)
            .collect();
        let smaller = Partition::from_unsorted(parts);
        let v = mn(&smaller, rest);
        if jumped % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    chi_memo().write().unwrap().insert(key, total.clone());
    total
}

/// Full character table of `S_n`; rows are irreducibles `ν`, columns are
/// classes `μ`, both in canonical partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    n: u32,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<BigInt>>,
}

impl CharTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, mu: &Partition) -> Option<usize> {
        self.index.get(mu).copied()
    }

    pub fn row(&self, nu: &Partition) -> Option<&[BigInt]> {
        self.index_of(nu).map(|i| self.values[i].as_slice())
    }

    /// `χ_ν(μ)`; panics if either partition is not of size `n`.
    pub fn get(&self, nu: &Partition, mu: &Partition) -> &BigInt {
        &self.values[self.index[nu]][self.index[mu]]
    }

    pub fn values(&self) -> &[Vec<BigInt>] {
        &self.values
    }
}

/// Builds the table for `S_n`, refusing degrees above [`DEFAULT_MAX_N`].
pub fn char_table(n: u32) -> Result<CharTable, Error> {
    char_table_with_limit(n, DEFAULT_MAX_N)
}

pub fn char_table_with_limit(n: u32, max: u32) -> Result<CharTable, Error> {
    if n > max {
        return Err(Error::ResourceLimit { n, max });
    }
    let partitions = enumerate(n);
    let values = partitions
        .iter()
        .map(|nu| partitions.iter().map(|mu| mn(nu, mu.parts())).collect())
        .collect();
    let index = partitions
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    Ok(CharTable {
        n,
        partitions,
        index,
        values,
    })
}

/// Process-wide immutable tables, built once per degree.
pub fn shared_table(n: u32) -> Result<Arc<CharTable>, Error> {
    static TABLES: OnceLock<RwLock<HashMap<u32, Arc<CharTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(Default::default);
    if let Some(t) = tables.read().unwrap().get(&n) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(char_table(n)?);
    let mut guard = tables.write().unwrap();
    Ok(Arc::clone(guard.entry(n).or_insert(table)))
}

/// `χ_ν(μ)` from monomial expansions, independent of the border-strip rule.
pub fn char_oracle(nu: &Partition, mu: &Partition) -> Result<BigInt, Error> {
    if nu.size() != mu.size() {
        return Err(Error::SizeMismatch {
            nu: nu.clone(),
            mu: mu.clone(),
        });
    }
    let n = mu.size();
    if n > ORACLE_MAX_N {
        return Err(Error::ResourceLimit {
            n,
            max: ORACLE_MAX_N,
        });
    }
    let column = oracle_column(mu);
    Ok(column
        .into_iter()
        .find(|(p, _)| p == nu)
        .map(|(_, v)| v)
        .unwrap_or_default())
}

/// Solves `Σ_ν χ_ν(μ) K_{νλ} = [x^λ] p_μ` for all `ν`, largest in dominance
/// first. Reverse lexicographic order refines dominance, and `K` is
/// unitriangular.
fn oracle_column(mu: &Partition) -> Vec<(Partition, BigInt)> {
    let shapes = enumerate(mu.size());
    let mut solved: Vec<(Partition, BigInt)> = Vec::with_capacity(shapes.len());
    for lambda in &shapes {
        let mut value = power_sum_monomial_coeff(mu, lambda);
        for (nu, chi_nu) in &solved {
            value -= chi_nu * kostka(nu, lambda);
        }
        solved.push((lambda.clone(), value));
    }
    solved
}

/// Coefficient of `x_1^{λ_1} x_2^{λ_2} …` in `p_μ`: the number of ways to
/// send each (labelled) part of `μ` to a variable so the exponents add up.
fn power_sum_monomial_coeff(mu: &Partition, lambda: &Partition) -> BigInt {
    fn go(parts: &[u32], room: &mut [u32]) -> BigInt {
        let Some((&p, rest)) = parts.split_first() else {
            return if room.iter().all(|&r| r == 0) {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        };
        let mut total = BigInt::zero();
        for j in 0..room.len() {
            if room[j] >= p {
                room[j] -= p;
                total += go(rest, room);
                room[j] += p;
            }
        }
        total
    }
    let mut room = lambda.parts().to_vec();
    go(mu.parts(), &mut room)
}

/// Kostka number: semistandard tableaux of shape `ν` and content `λ`,
/// counted as chains of horizontal strips.
pub(crate) fn kostka(nu: &Partition, lambda: &Partition) -> BigInt {
    fn go(shape: &[u32], content: &[u32]) -> BigInt {
        // peel the largest letter off as a horizontal strip
        let Some((&last, rest)) = content.split_last() else {
            return if shape.iter().all(|&s| s == 0) {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        };
        let mut total = BigInt::zero();
        let mut inner = shape.to_vec();
        strips(shape, &mut inner, 0, last, &mut |inner| {
            total += go(inner, rest);
        });
        total
    }
    // enumerate inner shapes `inner ⊆ shape` with shape/inner a horizontal
    // strip of `size` boxes: shape_{i+1} <= inner_i <= shape_i
    fn strips(
        shape: &[u32],
        inner: &mut Vec<u32>,
        row: usize,
        size: u32,
        emit: &mut dyn FnMut(&[u32]),
    ) {
        if row == shape.len() {
            if size == 0 {
                emit(inner);
            }
            return;
        }
        let lower = shape.get(row + 1).copied().unwrap_or(0);
        for keep in (lower..=shape[row]).rev() {
            let removed = shape[row] - keep;
            if removed > size {
                break;
            }
            inner[row] = keep;
            strips(shape, inner, row + 1, size - removed, emit);
        }
        inner[row] = shape[row];
    }
    if nu.size() != lambda.size() {
        return BigInt::zero();
    }
    go(nu.parts(), lambda.parts())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_values() {
        assert_eq!(chi(&p(&[1, 1]), &p(&[2])).unwrap(), BigInt::from(-1));
        assert_eq!(chi(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), BigInt::from(2));
        assert_eq!(
            chi(&Partition::empty(), &Partition::empty()).unwrap(),
            BigInt::one()
        );
        assert!(matches!(
            chi(&p(&[2]), &p(&[1])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn tables_by_hand() {
        let t2 = char_table(2).unwrap();
        assert_eq!(t2.partitions(), &[p(&[2]), p(&[1, 1])]);
        assert_eq!(t2.values(), &[ints(&[1, 1]), ints(&[-1, 1])]);

        let t3 = char_table(3).unwrap();
        // columns in canonical order (3), (2,1), (1,1,1)
        assert_eq!(t3.row(&p(&[2, 1])).unwrap(), ints(&[-1, 0, 2]).as_slice());

        assert_eq!(char_table(1).unwrap().values(), &[ints(&[1])]);
        assert!(matches!(char_table(13), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn oracle_small_values() {
        assert_eq!(
            char_oracle(&p(&[2, 1]), &p(&[3])).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            char_oracle(&p(&[1, 1]), &p(&[1, 1])).unwrap(),
            BigInt::one()
        );
        for n in 1..=6 {
            for mu in enumerate(n) {
                assert_eq!(char_oracle(&p(&[n]), &mu).unwrap(), BigInt::one());
            }
        }
        assert!(char_oracle(&p(&[9]), &p(&[9])).is_err());
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])), BigInt::from(2));
        assert_eq!(kostka(&p(&[3, 2]), &p(&[2, 2, 1])), BigInt::from(2));
        assert_eq!(kostka(&p(&[2, 2]), &p(&[3, 1])), BigInt::zero());
        assert_eq!(kostka(&p(&[4]), &p(&[2, 1, 1])), BigInt::one());
    }

    #[test]
    fn dimension_is_hook_length_count() {
        for n in 1..=8u32 {
            let fact: BigInt = (1..=n).map(BigInt::from).product();
            let ones = Partition::new(vec![1; n as usize]).unwrap();
            for nu in enumerate(n) {
                let hooks: BigInt = nu.hooks().into_iter().map(BigInt::from).product();
                assert_eq!(chi(&nu, &ones).unwrap(), &fact / hooks, "{nu}");
            }
        }
    }
}
