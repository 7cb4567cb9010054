//! Coxeter systems and exact element arithmetic.
//!
//! A [`CoxeterSystem`] enumerates its elements once (up to the length cap for
//! infinite groups) into a table with left/right multiplication by generators,
//! lengths, descent sets, inverses and shortlex-minimal reduced words. Element
//! ids are ordered by `(length, canonical word)`.

mod enumerate;
mod matrix;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use self::enumerate::{enumerate_generic, enumerate_native, NativeKind, RawTable, NONE};
pub use self::matrix::{CoxeterMatrix, MAX_RANK};
use crate::error::{Error, Result};

/// Upper bound on enumerated elements; larger groups need a length cap.
pub const DEFAULT_ELEMENT_LIMIT: usize = 1 << 21;

/// Handle to an element of a particular [`CoxeterSystem`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Element(pub(crate) u32);

impl Element {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A subset `J` of the simple generators, as a bitmask over 0-based indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GeneratorSet(u32);

impl GeneratorSet {
    pub const EMPTY: GeneratorSet = GeneratorSet(0);

    pub fn from_bits(bits: u32) -> Self {
        GeneratorSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn all(rank: usize) -> Self {
        if rank >= 32 {
            GeneratorSet(u32::MAX)
        } else {
            GeneratorSet((1u32 << rank) - 1)
        }
    }

    pub fn singleton(s: usize) -> Self {
        GeneratorSet(1 << s)
    }

    pub fn contains(self, s: usize) -> bool {
        s < 32 && self.0 & (1 << s) != 0
    }

    pub fn insert(&mut self, s: usize) {
        self.0 |= 1 << s;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn intersection(self, other: GeneratorSet) -> GeneratorSet {
        GeneratorSet(self.0 & other.0)
    }

    pub fn is_disjoint(self, other: GeneratorSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&s| self.contains(s))
    }

    /// Every subset of `{0, .., rank-1}`, in increasing bitmask order.
    pub fn all_subsets(rank: usize) -> impl Iterator<Item = GeneratorSet> {
        (0..=GeneratorSet::all(rank).0).map(GeneratorSet)
    }

    /// Parses a comma-separated list of 1-based generator indices.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let mut set = GeneratorSet::EMPTY;
        for s in parse_word(text)? {
            if s >= rank {
                return Err(Error::GeneratorOutOfRange { generator: s + 1, rank });
            }
            set.insert(s);
        }
        Ok(set)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = GeneratorSet::EMPTY;
        for s in indices {
            set.insert(s);
        }
        set
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.iter().map(|s| format!("s{}", s + 1)).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// Parses a word given as comma-separated 1-based generator indices into
/// 0-based indices. `e` and the empty string denote the identity.
pub fn parse_word(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() || text == "e" {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| match tok.trim().parse::<usize>() {
            Ok(s) if s >= 1 => Ok(s - 1),
            _ => Err(Error::InvalidWord(text.to_string())),
        })
        .collect()
}

/// Element arithmetic backend.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Backend {
    /// Permutations of `n+1` points (type A_n).
    Permutation,
    /// Signed permutations (type B_n).
    SignedPermutation,
    /// Signed permutations with an even number of sign changes (type D_n).
    EvenSignedPermutation,
    /// Any Coxeter matrix, enumerated from the braid relations alone.
    GenericWord,
}

impl Backend {
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "permutation" => Ok(Backend::Permutation),
            "signed-permutation" => Ok(Backend::SignedPermutation),
            "even-signed-permutation" => Ok(Backend::EvenSignedPermutation),
            "generic" | "generic-word" => Ok(Backend::GenericWord),
            other => Err(Error::BackendMismatch {
                backend: other.to_string(),
                reason: "unknown backend".into(),
            }),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Backend::Permutation => "permutation",
            Backend::SignedPermutation => "signed-permutation",
            Backend::EvenSignedPermutation => "even-signed-permutation",
            Backend::GenericWord => "generic-word",
        }
    }

    fn native_kind(self) -> Option<NativeKind> {
        match self {
            Backend::Permutation => Some(NativeKind::Permutation),
            Backend::SignedPermutation => Some(NativeKind::Signed),
            Backend::EvenSignedPermutation => Some(NativeKind::EvenSigned),
            Backend::GenericWord => None,
        }
    }
}

/// Row-major matrix as nested rows or a flat list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixRows {
    Rows(Vec<Vec<u32>>),
    Flat(Vec<u32>),
}

/// User-facing description of a Coxeter system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDescription {
    /// `A3`, `B3`, `D4`, `E6`, `F4`, `H3`, ... or `matrix`.
    #[serde(rename = "type")]
    pub type_name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixRows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length_cap: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub backend: Option<String>,
}

impl SystemDescription {
    pub fn named(type_name: &str) -> Self {
        SystemDescription {
            type_name: type_name.to_string(),
            matrix: None,
            length_cap: None,
            backend: None,
        }
    }

    pub fn from_matrix(rows: Vec<Vec<u32>>, length_cap: Option<u32>) -> Self {
        SystemDescription {
            type_name: "matrix".into(),
            matrix: Some(MatrixRows::Rows(rows)),
            length_cap,
            backend: None,
        }
    }

    pub fn with_cap(mut self, cap: u32) -> Self {
        self.length_cap = Some(cap);
        self
    }

    pub fn with_backend(mut self, backend: Backend) -> Self {
        self.backend = Some(backend.name().to_string());
        self
    }
}

fn parse_named_type(name: &str) -> Result<(CoxeterMatrix, Backend)> {
    let unknown = || Error::UnknownType(name.to_string());
    let mut chars = name.chars();
    let letter = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
    let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
    let ok = |cond: bool| if cond { Ok(()) } else { Err(unknown()) };
    match letter {
        'A' => {
            ok((1..MAX_RANK).contains(&n))?;
            Ok((CoxeterMatrix::type_a(n), Backend::Permutation))
        }
        'B' | 'C' => {
            ok((2..=MAX_RANK).contains(&n))?;
            Ok((CoxeterMatrix::type_b(n), Backend::SignedPermutation))
        }
        'D' => {
            ok((2..=MAX_RANK).contains(&n))?;
            Ok((CoxeterMatrix::type_d(n), Backend::EvenSignedPermutation))
        }
        'E' => {
            ok((6..=8).contains(&n))?;
            Ok((CoxeterMatrix::type_e(n), Backend::GenericWord))
        }
        'F' => {
            ok(n == 4)?;
            Ok((CoxeterMatrix::type_f4(), Backend::GenericWord))
        }
        'H' => {
            ok((3..=4).contains(&n))?;
            Ok((CoxeterMatrix::type_h(n), Backend::GenericWord))
        }
        _ => Err(unknown()),
    }
}

fn check_backend(backend: Backend, matrix: &CoxeterMatrix) -> Result<()> {
    let n = matrix.rank();
    let expected = match backend {
        Backend::GenericWord => return Ok(()),
        Backend::Permutation => CoxeterMatrix::type_a(n),
        Backend::SignedPermutation if n >= 2 => CoxeterMatrix::type_b(n),
        Backend::EvenSignedPermutation if n >= 2 => CoxeterMatrix::type_d(n),
        _ => {
            return Err(Error::BackendMismatch {
                backend: backend.name().into(),
                reason: "rank too small".into(),
            })
        }
    };
    if &expected == matrix {
        Ok(())
    } else {
        Err(Error::BackendMismatch {
            backend: backend.name().into(),
            reason: "matrix does not match the backend's Coxeter type".into(),
        })
    }
}

/// A Coxeter system `(W, S)` together with its enumerated element table.
#[derive(Clone, Debug)]
pub struct CoxeterSystem {
    name: String,
    matrix: CoxeterMatrix,
    backend: Backend,
    length_cap: Option<u32>,
    finite: bool,
    table: ElementTable,
}

#[derive(Clone, Debug)]
struct ElementTable {
    rank: usize,
    lengths: Vec<u32>,
    right: Vec<u32>,
    left: Vec<u32>,
    words: Vec<Box<[u8]>>,
    right_descents: Vec<GeneratorSet>,
    left_descents: Vec<GeneratorSet>,
    inverse: Vec<u32>,
    complete: bool,
    native: Option<Vec<Vec<i8>>>,
    native_index: HashMap<Vec<i8>, u32>,
}

impl CoxeterSystem {
    pub fn build(desc: &SystemDescription) -> Result<Self> {
        Self::build_with_limit(desc, DEFAULT_ELEMENT_LIMIT)
    }

    pub fn build_with_limit(desc: &SystemDescription, limit: usize) -> Result<Self> {
        let (matrix, default_backend, name) = if desc.type_name.eq_ignore_ascii_case("matrix") {
            let matrix = match &desc.matrix {
                Some(MatrixRows::Rows(rows)) => CoxeterMatrix::from_rows(rows)?,
                Some(MatrixRows::Flat(flat)) => {
                    let rank = (flat.len() as f64).sqrt().round() as usize;
                    CoxeterMatrix::from_flat(rank, flat.clone())?
                }
                None => {
                    return Err(Error::MalformedMatrix("type `matrix` requires a matrix".into()))
                }
            };
            (matrix, Backend::GenericWord, "matrix".to_string())
        } else {
            if desc.matrix.is_some() {
                return Err(Error::MalformedMatrix(format!(
                    "type `{}` does not take an explicit matrix",
                    desc.type_name
                )));
            }
            let (m, b) = parse_named_type(&desc.type_name)?;
            (m, b, desc.type_name.to_ascii_uppercase())
        };
        let backend = match &desc.backend {
            Some(b) => Backend::parse(b)?,
            None => default_backend,
        };
        check_backend(backend, &matrix)?;
        let finite = matrix.is_finite_group();
        if !finite && desc.length_cap.is_none() {
            return Err(Error::InfiniteWithoutCap);
        }
        let raw = match backend.native_kind() {
            Some(kind) => enumerate_native(kind, matrix.rank(), desc.length_cap, limit)?,
            None => enumerate_generic(&matrix, desc.length_cap, limit)?,
        };
        Ok(CoxeterSystem {
            name,
            matrix,
            backend,
            length_cap: desc.length_cap,
            finite,
            table: ElementTable::finish(raw),
        })
    }

    /// Shorthand for a named finite type such as `"A3"`.
    pub fn named(type_name: &str) -> Result<Self> {
        Self::build(&SystemDescription::named(type_name))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.table.rank
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn length_cap(&self) -> Option<u32> {
        self.length_cap
    }

    /// Whether `W` itself is finite (independent of any cap).
    pub fn is_finite_group(&self) -> bool {
        self.finite
    }

    /// Whether the table holds every element of `W`.
    pub fn is_complete(&self) -> bool {
        self.table.complete
    }

    /// Number of enumerated elements.
    pub fn len(&self) -> usize {
        self.table.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max_length(&self) -> u32 {
        *self.table.lengths.last().unwrap_or(&0)
    }

    pub fn identity(&self) -> Element {
        Element(0)
    }

    pub fn generator(&self, s: usize) -> Result<Element> {
        self.check_generator(s)?;
        self.mul_gen(self.identity(), s, Side::Right)
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Element> + ExactSizeIterator {
        (0..self.len() as u32).map(Element)
    }

    pub fn element_at(&self, index: usize) -> Option<Element> {
        (index < self.len()).then_some(Element(index as u32))
    }

    /// Elements of one length, in id order.
    pub fn elements_of_length(&self, len: u32) -> impl Iterator<Item = Element> {
        let lengths = &self.table.lengths;
        let start = lengths.partition_point(|&l| l < len);
        let end = lengths.partition_point(|&l| l <= len);
        (start as u32..end as u32).map(Element)
    }

    pub fn length(&self, w: Element) -> u32 {
        self.table.lengths[w.index()]
    }

    /// Shortlex-minimal reduced word (0-based generator indices).
    pub fn word(&self, w: Element) -> &[u8] {
        &self.table.words[w.index()]
    }

    /// The canonical word as comma-separated 1-based indices, `e` for the identity.
    pub fn word_string(&self, w: Element) -> String {
        let word = self.word(w);
        if word.is_empty() {
            return "e".into();
        }
        word.iter().map(|s| (s + 1).to_string()).collect::<Vec<_>>().join(",")
    }

    /// Compact form such as `s1s2s3`.
    pub fn display(&self, w: Element) -> String {
        let word = self.word(w);
        if word.is_empty() {
            return "e".into();
        }
        word.iter().map(|s| format!("s{}", s + 1)).collect()
    }

    fn check_generator(&self, s: usize) -> Result<()> {
        if s >= self.rank() {
            Err(Error::GeneratorOutOfRange { generator: s + 1, rank: self.rank() })
        } else {
            Ok(())
        }
    }

    /// `s·w` or `w·s`; `None` when the product lies beyond the cap.
    pub fn try_mul_gen(&self, w: Element, s: usize, side: Side) -> Option<Element> {
        let table = match side {
            Side::Left => &self.table.left,
            Side::Right => &self.table.right,
        };
        let r = table[w.index() * self.table.rank + s];
        (r != NONE).then_some(Element(r))
    }

    pub fn mul_gen(&self, w: Element, s: usize, side: Side) -> Result<Element> {
        self.check_generator(s)?;
        self.try_mul_gen(w, s, side).ok_or(Error::BeyondCap { cap: self.length_cap.unwrap_or(0) })
    }

    /// Right-multiplies `start` by the letters of `word` in order.
    pub fn apply_word(&self, start: Element, word: &[usize]) -> Result<Element> {
        word.iter().try_fold(start, |w, &s| self.mul_gen(w, s, Side::Right))
    }

    pub fn element_from_word(&self, word: &[usize]) -> Result<Element> {
        self.apply_word(self.identity(), word)
    }

    /// Parses a comma-separated 1-based word and evaluates it.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        self.element_from_word(&parse_word(text)?)
    }

    pub fn multiply(&self, a: Element, b: Element) -> Result<Element> {
        self.word(b).iter().try_fold(a, |w, &s| self.mul_gen(w, usize::from(s), Side::Right))
    }

    pub fn inverse(&self, w: Element) -> Element {
        Element(self.table.inverse[w.index()])
    }

    pub fn descents(&self, w: Element, side: Side) -> GeneratorSet {
        match side {
            Side::Left => self.table.left_descents[w.index()],
            Side::Right => self.table.right_descents[w.index()],
        }
    }

    pub fn right_descents(&self, w: Element) -> GeneratorSet {
        self.table.right_descents[w.index()]
    }

    pub fn left_descents(&self, w: Element) -> GeneratorSet {
        self.table.left_descents[w.index()]
    }

    /// Whether `w` is the minimal-length representative of `wW_J`.
    pub fn is_min_coset_rep(&self, w: Element, j: GeneratorSet) -> bool {
        self.right_descents(w).is_disjoint(j)
    }

    /// `w = w^J · w_J` with `w^J ∈ W^J`, `w_J ∈ W_J` and lengths adding.
    pub fn parabolic_decompose(&self, w: Element, j: GeneratorSet) -> (Element, Element) {
        let mut head = w;
        let mut stripped = Vec::new();
        while let Some(s) = self.right_descents(head).intersection(j).first() {
            head = self.try_mul_gen(head, s, Side::Right).expect("descents stay in the table");
            stripped.push(s);
        }
        stripped.reverse();
        let tail = self
            .element_from_word(&stripped)
            .expect("a subword of a reduced word stays in the table");
        (head, tail)
    }

    /// The minimal coset representative `w^J`.
    pub fn project(&self, w: Element, j: GeneratorSet) -> Element {
        self.parabolic_decompose(w, j).0
    }

    /// All elements of length at most `max_len`, in id order.
    pub fn enumerate_up_to_length(&self, max_len: u32) -> Result<Vec<Element>> {
        if !self.is_complete() && max_len > self.length_cap.unwrap_or(0) {
            return Err(Error::BeyondCap { cap: self.length_cap.unwrap_or(0) });
        }
        Ok(self.elements().take_while(|&w| self.length(w) <= max_len).collect())
    }

    /// Elements of the parabolic subgroup `W_J` of length at most `max_len`.
    pub fn parabolic_subgroup(&self, j: GeneratorSet, max_len: u32) -> Vec<Element> {
        let mut seen = vec![self.identity()];
        let mut frontier = vec![self.identity()];
        let mut depth = 0;
        while depth < max_len && !frontier.is_empty() {
            let mut next = Vec::new();
            for &w in &frontier {
                for s in j.iter() {
                    if self.right_descents(w).contains(s) {
                        continue;
                    }
                    if let Some(ws) = self.try_mul_gen(w, s, Side::Right) {
                        next.push(ws);
                    }
                }
            }
            next.sort_unstable();
            next.dedup();
            seen.extend_from_slice(&next);
            frontier = next;
            depth += 1;
        }
        seen.sort_unstable();
        seen
    }

    /// The longest element, when the table holds the whole finite group.
    pub fn longest_element(&self) -> Option<Element> {
        (self.is_complete()).then(|| Element(self.len() as u32 - 1))
    }

    /// One-line notation for native backends (values 1-based, signed for B/D).
    pub fn permutation(&self, w: Element) -> Option<&[i8]> {
        self.table.native.as_ref().map(|d| d[w.index()].as_slice())
    }

    pub fn element_from_permutation(&self, perm: &[i8]) -> Option<Element> {
        self.table.native_index.get(perm).map(|&i| Element(i))
    }

    /// Stable description of the group used for cache keys and corpus checksums.
    pub fn fingerprint_text(&self) -> String {
        format!(
            "rank={};matrix={:?};cap={:?};elements={}",
            self.rank(),
            self.matrix.entries(),
            self.length_cap,
            self.len()
        )
    }
}

impl ElementTable {
    fn finish(raw: RawTable) -> Self {
        let RawTable { rank, lengths, right, native, complete } = raw;
        let n = lengths.len();
        let is_down = |w: usize, s: usize| {
            let r = right[w * rank + s];
            r != NONE && lengths[r as usize] < lengths[w]
        };

        // Left multiplication, via w = x·t: s·w = (s·x)·t.
        let mut left = vec![NONE; n * rank];
        left[..rank].copy_from_slice(&right[..rank]);
        for w in 1..n {
            let t = (0..rank).find(|&t| is_down(w, t)).expect("non-identity has a descent");
            let x = right[w * rank + t] as usize;
            for s in 0..rank {
                let sx = left[x * rank + s];
                if sx != NONE {
                    left[w * rank + s] = right[sx as usize * rank + t];
                }
            }
        }

        // Shortlex-minimal reduced words: peel off the smallest left descent.
        let mut words: Vec<Vec<u8>> = vec![Vec::new(); n];
        for w in 1..n {
            let s = (0..rank)
                .find(|&s| {
                    let r = left[w * rank + s];
                    r != NONE && lengths[r as usize] < lengths[w]
                })
                .expect("non-identity has a left descent");
            let rest = left[w * rank + s] as usize;
            let mut word = Vec::with_capacity(lengths[w] as usize);
            word.push(s as u8);
            word.extend_from_slice(&words[rest]);
            words[w] = word;
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| lengths[a].cmp(&lengths[b]).then_with(|| words[a].cmp(&words[b])));
        let mut new_id = vec![0u32; n];
        for (pos, &old) in order.iter().enumerate() {
            new_id[old] = pos as u32;
        }
        let remap = |table: &[u32]| -> Vec<u32> {
            let mut out = vec![NONE; n * rank];
            for (pos, &old) in order.iter().enumerate() {
                for s in 0..rank {
                    let r = table[old * rank + s];
                    out[pos * rank + s] = if r == NONE { NONE } else { new_id[r as usize] };
                }
            }
            out
        };
        let right = remap(&right);
        let left = remap(&left);
        let lengths: Vec<u32> = order.iter().map(|&o| lengths[o]).collect();
        let words: Vec<Box<[u8]>> =
            order.iter().map(|&o| std::mem::take(&mut words[o]).into_boxed_slice()).collect();
        let native = native.map(|mut d| {
            order.iter().map(|&o| std::mem::take(&mut d[o])).collect::<Vec<_>>()
        });
        let native_index = native
            .as_ref()
            .map(|d| d.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect())
            .unwrap_or_default();

        let descents = |table: &[u32]| -> Vec<GeneratorSet> {
            (0..n)
                .map(|w| {
                    GeneratorSet::from_indices((0..rank).filter(|&s| {
                        let r = table[w * rank + s];
                        r != NONE && lengths[r as usize] < lengths[w]
                    }))
                })
                .collect()
        };
        let right_descents = descents(&right);
        let left_descents = descents(&left);

        let inverse = (0..n)
            .map(|w| {
                words[w].iter().rev().fold(0u32, |acc, &s| right[acc as usize * rank + s as usize])
            })
            .collect();

        ElementTable {
            rank,
            lengths,
            right,
            left,
            words,
            right_descents,
            left_descents,
            inverse,
            complete,
            native,
            native_index,
        }
    }
}
