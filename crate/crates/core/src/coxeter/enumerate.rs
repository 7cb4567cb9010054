//! Element enumeration backends.
//!
//! Both backends produce a [`RawTable`]: elements numbered in breadth-first
//! (length) order together with the right-multiplication table. The native
//! backends hash (signed) permutations; the generic backend works purely
//! from the Coxeter matrix by identifying `y·s = y'·s'` exactly when both
//! are reached through the two sides of a dihedral longest element.

use std::collections::HashMap;

use super::matrix::CoxeterMatrix;
use crate::error::{Error, Result};

pub(crate) const NONE: u32 = u32::MAX;

pub(crate) struct RawTable {
    pub rank: usize,
    pub lengths: Vec<u32>,
    /// `right[w * rank + s]`, `NONE` when beyond the cap.
    pub right: Vec<u32>,
    pub native: Option<Vec<Vec<i8>>>,
    /// True when no element was cut off by the cap.
    pub complete: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum NativeKind {
    Permutation,
    Signed,
    EvenSigned,
}

impl NativeKind {
    pub fn identity(self, rank: usize) -> Vec<i8> {
        let points = match self {
            NativeKind::Permutation => rank + 1,
            NativeKind::Signed | NativeKind::EvenSigned => rank,
        };
        (1..=points as i8).collect()
    }

    /// Right action of generator `s` on one-line notation (acts on positions).
    pub fn apply(self, data: &mut [i8], s: usize) {
        let n = data.len();
        match self {
            NativeKind::Permutation => data.swap(s, s + 1),
            NativeKind::Signed => {
                if s + 1 < n {
                    data.swap(s, s + 1);
                } else {
                    data[n - 1] = -data[n - 1];
                }
            }
            NativeKind::EvenSigned => {
                if s + 1 < n {
                    data.swap(s, s + 1);
                } else {
                    data.swap(n - 2, n - 1);
                    data[n - 2] = -data[n - 2];
                    data[n - 1] = -data[n - 1];
                }
            }
        }
    }
}

pub(crate) fn enumerate_native(
    kind: NativeKind,
    rank: usize,
    cap: Option<u32>,
    limit: usize,
) -> Result<RawTable> {
    let identity = kind.identity(rank);
    let mut index: HashMap<Vec<i8>, u32> = HashMap::new();
    index.insert(identity.clone(), 0);
    let mut data = vec![identity];
    let mut lengths = vec![0u32];
    let mut right: Vec<u32> = vec![NONE; rank];
    let mut level = 0..1usize;
    let mut complete = true;
    let mut depth = 0u32;
    while !level.is_empty() {
        let next_start = data.len();
        let at_cap = cap == Some(depth);
        for w in level.clone() {
            for s in 0..rank {
                if right[w * rank + s] != NONE {
                    continue;
                }
                let mut image = data[w].clone();
                kind.apply(&mut image, s);
                let id = match index.get(&image) {
                    Some(&id) => id,
                    None if at_cap => {
                        complete = false;
                        continue;
                    }
                    None => {
                        let id = data.len() as u32;
                        if data.len() >= limit {
                            return Err(Error::TooLarge { limit });
                        }
                        index.insert(image.clone(), id);
                        data.push(image);
                        lengths.push(depth + 1);
                        right.extend(std::iter::repeat_n(NONE, rank));
                        id
                    }
                };
                right[w * rank + s] = id;
                right[id as usize * rank + s] = w as u32;
            }
        }
        level = next_start..data.len();
        depth += 1;
    }
    Ok(RawTable { rank, lengths, right, native: Some(data), complete })
}

/// Alternating word of length `len` in `{a, b}` whose last letter is `last`.
fn alternating_ending(a: usize, b: usize, last: usize, len: usize) -> Vec<usize> {
    let other = if last == a { b } else { a };
    let mut w: Vec<usize> = (0..len).map(|i| if i % 2 == 0 { last } else { other }).collect();
    w.reverse();
    w
}

pub(crate) fn enumerate_generic(
    matrix: &CoxeterMatrix,
    cap: Option<u32>,
    limit: usize,
) -> Result<RawTable> {
    let rank = matrix.rank();
    let mut lengths = vec![0u32];
    let mut right: Vec<u32> = vec![NONE; rank];
    let mut level = 0..1usize;
    let mut complete = true;
    let mut depth = 0u32;

    let down = |right: &[u32], lengths: &[u32], z: usize, t: usize| -> Option<usize> {
        let r = right[z * rank + t];
        (r != NONE && lengths[r as usize] < lengths[z]).then_some(r as usize)
    };

    while !level.is_empty() {
        let next_start = lengths.len();
        let at_cap = cap == Some(depth);
        for y in level.clone() {
            for s in 0..rank {
                if right[y * rank + s] != NONE {
                    continue;
                }
                let mut found = None;
                for s2 in (0..rank).filter(|&t| t != s) {
                    let Some(m) = matrix.order(s, s2) else { continue };
                    let m = m as usize;
                    // y = z·a with a alternating of length m-1 ending in s2.
                    let a = alternating_ending(s, s2, s2, m - 1);
                    let mut z = y;
                    let mut ok = true;
                    for &t in a.iter().rev() {
                        match down(&right, &lengths, z, t) {
                            Some(next) => z = next,
                            None => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if !ok {
                        continue;
                    }
                    let b = alternating_ending(s, s2, s, m - 1);
                    let mut y2 = z;
                    for &t in &b {
                        debug_assert_ne!(right[y2 * rank + t], NONE);
                        y2 = right[y2 * rank + t] as usize;
                    }
                    let w = right[y2 * rank + s2];
                    if w != NONE {
                        found = Some(w);
                        break;
                    }
                }
                let id = match found {
                    Some(w) => w,
                    None if at_cap => {
                        complete = false;
                        continue;
                    }
                    None => {
                        if lengths.len() >= limit {
                            return Err(Error::TooLarge { limit });
                        }
                        let id = lengths.len() as u32;
                        lengths.push(depth + 1);
                        right.extend(std::iter::repeat_n(NONE, rank));
                        id
                    }
                };
                right[y * rank + s] = id;
                right[id as usize * rank + s] = y as u32;
            }
        }
        level = next_start..lengths.len();
        depth += 1;
    }
    Ok(RawTable { rank, lengths, right, native: None, complete })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_words() {
        assert_eq!(alternating_ending(0, 1, 1, 3), vec![1, 0, 1]);
        assert_eq!(alternating_ending(0, 1, 0, 2), vec![1, 0]);
        assert_eq!(alternating_ending(0, 1, 0, 1), vec![0]);
    }

    #[test]
    fn generic_orders_of_finite_groups() {
        let cases = [
            (CoxeterMatrix::type_a(3), 24),
            (CoxeterMatrix::type_b(3), 48),
            (CoxeterMatrix::type_d(4), 192),
            (CoxeterMatrix::type_h(3), 120),
            (CoxeterMatrix::type_f4(), 1152),
        ];
        for (m, order) in cases {
            let t = enumerate_generic(&m, None, 1 << 20).unwrap();
            assert_eq!(t.lengths.len(), order);
            assert!(t.complete);
        }
    }

    #[test]
    fn native_orders() {
        let a = enumerate_native(NativeKind::Permutation, 4, None, 1 << 20).unwrap();
        assert_eq!(a.lengths.len(), 120);
        let b = enumerate_native(NativeKind::Signed, 3, None, 1 << 20).unwrap();
        assert_eq!(b.lengths.len(), 48);
        let d = enumerate_native(NativeKind::EvenSigned, 4, None, 1 << 20).unwrap();
        assert_eq!(d.lengths.len(), 192);
    }

    #[test]
    fn capped_affine_growth() {
        // affine A2: 1, 3, 6, 9, 12, ... elements per length
        let m = CoxeterMatrix::from_rows(&[vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]).unwrap();
        let t = enumerate_generic(&m, Some(4), 1 << 20).unwrap();
        assert!(!t.complete);
        let mut per_len = [0usize; 5];
        for &l in &t.lengths {
            per_len[l as usize] += 1;
        }
        assert_eq!(per_len, [1, 3, 6, 9, 12]);
    }

    #[test]
    fn size_limit_is_enforced() {
        let r = enumerate_generic(&CoxeterMatrix::type_a(5), None, 100);
        assert!(matches!(r, Err(Error::TooLarge { limit: 100 })));
    }
}
