//! Permutations of `[k] = {1, .., k}`, cycle notation, permutation sets and
//! finite group tables, plus the block encoding that turns group gains into
//! permutation labels.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest alphabet accepted by [`symmetric_group`].
pub const MAX_SYMMETRIC_K: usize = 8;

/// Largest alphabet produced by [`gain_encode`]; also the solver's colour cap.
pub const MAX_ALPHABET: usize = 128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("alphabet size must be at least 1")]
    InvalidSize,
    #[error("alphabet size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("images {0:?} are not a bijection of [{1}]")]
    NotBijection(Vec<usize>, usize),
    #[error("identity has no conjugacy class representative")]
    NoRepresentative,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
}

/// A bijection of `[k]`. `images[i]` is the image of `i + 1`; values are `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from 1-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        if images.is_empty() {
            return Err(PermError::InvalidSize);
        }
        let k = images.len();
        let mut seen = vec![false; k];
        for &v in &images {
            if v < 1 || v > k || seen[v - 1] {
                return Err(PermError::NotBijection(images.clone(), k));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn k(&self) -> usize {
        self.images.len()
    }

    /// Image of colour `i` (1-based).
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Composition with the [`compose`] convention; `self` applied last.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        compose(self, other)
    }

    pub fn inverse(&self) -> Permutation {
        inverse(self)
    }

    /// `self ∘ other ∘ self⁻¹`.
    pub fn conjugate(&self, other: &Permutation) -> Result<Permutation, PermError> {
        compose(self, &compose(other, &self.inverse())?)
    }

    /// Disjoint cycles of length >= 2, each starting at its least element,
    /// sorted by least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let k = self.k();
        let mut seen = vec![false; k];
        let mut out = Vec::new();
        for start in 1..=k {
            if seen[start - 1] || self.apply(start) == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start - 1] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur - 1] = true;
                cyc.push(cur);
                cur = self.apply(cur);
            }
            out.push(cyc);
        }
        out
    }

    /// Multiset of cycle lengths including fixed points, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let k = self.k();
        let mut seen = vec![false; k];
        let mut lens = Vec::new();
        for start in 1..=k {
            if seen[start - 1] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            loop {
                seen[cur - 1] = true;
                len += 1;
                cur = self.apply(cur);
                if cur == start {
                    break;
                }
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_cycles(self))
    }
}

/// The identity permutation on `[k]`.
pub fn identity(k: usize) -> Result<Permutation, PermError> {
    if k == 0 {
        return Err(PermError::InvalidSize);
    }
    Ok(Permutation {
        images: (1..=k).collect(),
    })
}

/// `result(i) = p(q(i))`: apply `q` first, then `p`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation, PermError> {
    if p.k() != q.k() {
        return Err(PermError::SizeMismatch(p.k(), q.k()));
    }
    let images = (1..=p.k()).map(|i| p.apply(q.apply(i))).collect();
    Ok(Permutation { images })
}

pub fn inverse(p: &Permutation) -> Permutation {
    let mut images = vec![0; p.k()];
    for i in 1..=p.k() {
        images[p.apply(i) - 1] = i;
    }
    Permutation { images }
}

/// Parses `"id"` or disjoint cycles such as `"(123)"` or `"(12)(34)"` over `[k]`.
///
/// Single-character symbols are digits; multi-digit symbols must be separated
/// by commas inside a cycle, e.g. `"(1,12)"`.
pub fn parse_cycles(text: &str, k: usize) -> Result<Permutation, PermError> {
    if k == 0 {
        return Err(PermError::InvalidSize);
    }
    if text == "id" {
        return identity(k);
    }
    let err = |position: usize, message: &str| PermError::Parse {
        position,
        message: message.to_string(),
    };
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty permutation"));
    }
    let mut images: Vec<usize> = (1..=k).collect();
    let mut used = vec![false; k];
    let mut pos = 0;
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(err(pos, "expected '('"));
        }
        let open = pos;
        pos += 1;
        let close = text[pos..]
            .find(')')
            .map(|off| pos + off)
            .ok_or_else(|| err(open, "unclosed '('"))?;
        let body = &text[pos..close];
        if body.is_empty() {
            return Err(err(open, "empty cycle"));
        }
        let mut symbols: Vec<(usize, usize)> = Vec::new(); // (value, byte position)
        if body.contains(',') {
            let mut at = pos;
            for tok in body.split(',') {
                let val: usize = tok
                    .parse()
                    .map_err(|_| err(at, "expected an integer symbol"))?;
                symbols.push((val, at));
                at += tok.len() + 1;
            }
        } else {
            for (off, ch) in body.char_indices() {
                let d = ch
                    .to_digit(10)
                    .ok_or_else(|| err(pos + off, "expected a digit"))?;
                symbols.push((d as usize, pos + off));
            }
        }
        for &(val, at) in &symbols {
            if val < 1 || val > k {
                return Err(err(at, &format!("symbol {val} out of range 1..={k}")));
            }
            if used[val - 1] {
                return Err(err(at, &format!("symbol {val} repeated")));
            }
            used[val - 1] = true;
        }
        for (idx, &(val, _)) in symbols.iter().enumerate() {
            let next = symbols[(idx + 1) % symbols.len()].0;
            images[val - 1] = next;
        }
        pos = close + 1;
    }
    Permutation::from_images(images)
}

/// Canonical cycle notation; fixed points omitted, identity printed as `"id"`.
pub fn print_cycles(p: &Permutation) -> String {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return "id".to_string();
    }
    let mut out = String::new();
    for cyc in cycles {
        out.push('(');
        // Comma-separate as soon as any symbol would be ambiguous as digits.
        let commas = cyc.iter().any(|&v| v > 9);
        for (i, v) in cyc.iter().enumerate() {
            if i > 0 && commas {
                out.push(',');
            }
            out.push_str(&v.to_string());
        }
        out.push(')');
    }
    out
}

/// A finite set of permutations sharing one alphabet `[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermSet {
    k: usize,
    members: Vec<Permutation>,
}

impl PermSet {
    pub fn new(k: usize, members: impl IntoIterator<Item = Permutation>) -> Result<Self, PermError> {
        if k == 0 {
            return Err(PermError::InvalidSize);
        }
        let mut members: Vec<Permutation> = members.into_iter().collect();
        for m in &members {
            if m.k() != k {
                return Err(PermError::SizeMismatch(k, m.k()));
            }
        }
        members.sort();
        members.dedup();
        Ok(PermSet { k, members })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.members.binary_search(p).is_ok()
    }

    pub fn contains_id(&self) -> bool {
        self.members.iter().any(|p| p.is_identity())
    }

    pub fn is_subset_of(&self, other: &PermSet) -> bool {
        self.k == other.k && self.members.iter().all(|p| other.contains(p))
    }
}

/// `{pi sigma pi^-1 : sigma in S}`; preserves cardinality.
pub fn conjugate_set(s: &PermSet, pi: &Permutation) -> Result<PermSet, PermError> {
    if pi.k() != s.k() {
        return Err(PermError::SizeMismatch(pi.k(), s.k()));
    }
    let members = s
        .members()
        .iter()
        .map(|sigma| pi.conjugate(sigma))
        .collect::<Result<Vec<_>, _>>()?;
    let set = PermSet::new(s.k(), members)?;
    debug_assert_eq!(set.len(), s.len());
    Ok(set)
}

/// Canonical representative of a non-identity element of `S_4`, by cycle type:
/// `(12)`, `(12)(34)`, `(123)` or `(1234)`.
pub fn conjugacy_class_rep(p: &Permutation) -> Result<Permutation, PermError> {
    if p.k() != 4 {
        return Err(PermError::SizeMismatch(p.k(), 4));
    }
    if p.is_identity() {
        return Err(PermError::NoRepresentative);
    }
    let text = match p.cycle_type().as_slice() {
        [2, 1, 1] => "(12)",
        [2, 2] => "(12)(34)",
        [3, 1] => "(123)",
        [4] => "(1234)",
        other => unreachable!("impossible cycle type {other:?} in S_4"),
    };
    parse_cycles(text, 4)
}

/// All `k!` permutations of `[k]`, ascending by image vector.
pub fn symmetric_group(k: usize) -> Result<PermSet, PermError> {
    if k == 0 {
        return Err(PermError::InvalidSize);
    }
    if k > MAX_SYMMETRIC_K {
        return Err(PermError::ResourceLimit(format!(
            "symmetric group capped at k <= {MAX_SYMMETRIC_K}, got {k}"
        )));
    }
    let mut members = Vec::new();
    let mut images: Vec<usize> = (1..=k).collect();
    loop {
        members.push(Permutation {
            images: images.clone(),
        });
        if !next_permutation(&mut images) {
            break;
        }
    }
    PermSet::new(k, members)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The `k` cyclic shifts `pi_a(i) = ((i - 1 + a) mod k) + 1`, `a = 0..k-1`.
pub fn cyclic_shift_set(k: usize) -> Result<PermSet, PermError> {
    let members = (0..k)
        .map(|a| cyclic_shift(k, a))
        .collect::<Result<Vec<_>, _>>()?;
    PermSet::new(k, members)
}

/// The single shift by `a`.
pub fn cyclic_shift(k: usize, a: usize) -> Result<Permutation, PermError> {
    if k == 0 {
        return Err(PermError::InvalidSize);
    }
    let images = (1..=k).map(|i| ((i - 1 + a) % k) + 1).collect();
    Permutation::from_images(images)
}

/// Which signed-colouring flavour a negation permutation encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignedMode {
    /// Colour set of q positive and q negative values (plus 0 when k is odd).
    #[serde(rename = "signed-Nk")]
    Nk,
    /// Colour set Z_k with arithmetic negation.
    #[serde(rename = "signed-Zk")]
    Zk,
}

impl fmt::Display for SignedMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignedMode::Nk => f.write_str("signed-Nk"),
            SignedMode::Zk => f.write_str("signed-Zk"),
        }
    }
}

/// The product of transpositions `(12)(34)..((2q-1) 2q)` where `q` depends on
/// the mode: `floor(k/2)` for `Nk`, `ceil(k/2) - 1` for `Zk`.
pub fn negation_permutation(k: usize, mode: SignedMode) -> Result<Permutation, PermError> {
    if k == 0 {
        return Err(PermError::InvalidSize);
    }
    let q = match mode {
        SignedMode::Nk => k / 2,
        SignedMode::Zk => k.div_ceil(2) - 1,
    };
    let mut images: Vec<usize> = (1..=k).collect();
    for t in 0..q {
        images[2 * t] = 2 * t + 2;
        images[2 * t + 1] = 2 * t + 1;
    }
    Permutation::from_images(images)
}

/// A finite group given by its multiplication table over element indices
/// `0..n`. `product[x][y]` is the index of `x ∘ y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    pub n: usize,
    pub product: Vec<Vec<usize>>,
    pub identity: usize,
}

impl GroupTable {
    /// Validates the table: closure, identity, inverses, associativity
    /// (checked exhaustively).
    pub fn new(product: Vec<Vec<usize>>, identity: usize) -> Result<Self, PermError> {
        let n = product.len();
        if n == 0 {
            return Err(PermError::InvalidGroup("empty table".into()));
        }
        if identity >= n {
            return Err(PermError::InvalidGroup("identity index out of range".into()));
        }
        for row in &product {
            if row.len() != n || row.iter().any(|&v| v >= n) {
                return Err(PermError::InvalidGroup("table is not n x n over 0..n".into()));
            }
        }
        let g = GroupTable {
            n,
            product,
            identity,
        };
        for x in 0..n {
            if g.mul(g.identity, x) != x || g.mul(x, g.identity) != x {
                return Err(PermError::InvalidGroup(format!(
                    "element {identity} is not an identity"
                )));
            }
            if !(0..n).any(|y| g.mul(x, y) == g.identity && g.mul(y, x) == g.identity) {
                return Err(PermError::InvalidGroup(format!("element {x} has no inverse")));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)) {
                        return Err(PermError::InvalidGroup(format!(
                            "not associative at ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.product[x][y]
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The cyclic group Z_n under addition.
    pub fn cyclic(n: usize) -> Result<Self, PermError> {
        if n == 0 {
            return Err(PermError::InvalidGroup("order must be positive".into()));
        }
        let product = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
        GroupTable::new(product, 0)
    }

    /// Direct product; element `i * b.n + j` pairs `(i, j)`.
    pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Result<Self, PermError> {
        let n = a.n * b.n;
        let mut product = vec![vec![0; n]; n];
        for i1 in 0..a.n {
            for j1 in 0..b.n {
                for i2 in 0..a.n {
                    for j2 in 0..b.n {
                        let x = i1 * b.n + j1;
                        let y = i2 * b.n + j2;
                        product[x][y] = a.mul(i1, i2) * b.n + b.mul(j1, j2);
                    }
                }
            }
        }
        GroupTable::new(product, a.identity * b.n + b.identity)
    }

    /// The symmetric group on `[k]` as a table; elements are indexed by the
    /// ascending image-vector order of [`symmetric_group`], multiplication is
    /// [`compose`].
    pub fn symmetric(k: usize) -> Result<Self, PermError> {
        if k > 4 {
            return Err(PermError::ResourceLimit(
                "symmetric group table capped at k <= 4".into(),
            ));
        }
        let elems = symmetric_group(k)?;
        let elems = elems.members();
        let index_of = |p: &Permutation| elems.binary_search(p).expect("closed under compose");
        let mut product = vec![vec![0; elems.len()]; elems.len()];
        for (i, p) in elems.iter().enumerate() {
            for (j, q) in elems.iter().enumerate() {
                product[i][j] = index_of(&compose(p, q).expect("equal k"));
            }
        }
        let id = identity(k)?;
        GroupTable::new(product, index_of(&id))
    }
}

/// Block encoding of a group element as a permutation of `[k*n + 1]`.
///
/// With `tau(e) = e + 1` indexing the elements, the image of `n*j + r` is
/// `n*j + tau(tau^-1(r) ∘ pi)` for `r in [n]`, `j in 0..k`, and the last point
/// `k*n + 1` is fixed. The identity element maps to the identity permutation.
pub fn gain_encode(group: &GroupTable, k: usize, pi_index: usize) -> Result<Permutation, PermError> {
    if k == 0 {
        return Err(PermError::InvalidSize);
    }
    if pi_index >= group.n {
        return Err(PermError::InvalidGroup(format!(
            "element index {pi_index} out of range 0..{}",
            group.n
        )));
    }
    let kp = k * group.n + 1;
    if kp > MAX_ALPHABET {
        return Err(PermError::ResourceLimit(format!(
            "encoded alphabet {kp} exceeds cap {MAX_ALPHABET}"
        )));
    }
    let mut images = vec![0; kp];
    for j in 0..k {
        for r in 1..=group.n {
            images[group.n * j + r - 1] = group.n * j + group.mul(r - 1, pi_index) + 1;
        }
    }
    images[kp - 1] = kp;
    Permutation::from_images(images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, k: usize) -> Permutation {
        parse_cycles(text, k).unwrap()
    }

    #[test]
    fn identity_images() {
        assert_eq!(identity(4).unwrap().images(), &[1, 2, 3, 4]);
        assert_eq!(identity(1).unwrap().images(), &[1]);
        assert!(matches!(identity(0), Err(PermError::InvalidSize)));
        let q = p("(123)", 4);
        assert_eq!(compose(&identity(4).unwrap(), &q).unwrap(), q);
    }

    #[test]
    fn parse_basics() {
        assert_eq!(p("(123)", 4).images(), &[2, 3, 1, 4]);
        assert_eq!(p("id", 4).images(), &[1, 2, 3, 4]);
        assert_eq!(p("(12)(34)", 4).images(), &[2, 1, 4, 3]);
        assert_eq!(p("(1,12)", 12).apply(1), 12);
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_cycles("(15)", 4) {
            Err(PermError::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_cycles("(12)(21)", 4).is_err()); // repeated symbol
        assert!(parse_cycles("(12", 4).is_err());
        assert!(parse_cycles("12)", 4).is_err());
        assert!(parse_cycles("(1x)", 4).is_err());
    }

    #[test]
    fn compose_pointwise() {
        // Oracle: apply the two mappings by hand, point by point.
        let a = p("(123)", 4);
        let sq = compose(&a, &a).unwrap();
        for i in 1..=4 {
            assert_eq!(sq.apply(i), a.apply(a.apply(i)));
        }
        assert_eq!(sq, p("(132)", 4));
        assert_eq!(compose(&p("(12)", 4), &p("(34)", 4)).unwrap(), p("(12)(34)", 4));
        assert!(compose(&p("(12)", 3), &p("(12)", 4)).is_err());
    }

    #[test]
    fn inverse_basics() {
        assert_eq!(inverse(&p("(1234)", 4)), p("(1432)", 4));
        assert_eq!(inverse(&p("id", 4)), p("id", 4));
        assert_eq!(inverse(&p("(12)(34)", 4)), p("(12)(34)", 4));
        let q = p("(1234)", 4);
        assert!(compose(&q, &inverse(&q)).unwrap().is_identity());
    }

    #[test]
    fn conjugation() {
        let s = PermSet::new(4, [p("id", 4), p("(123)", 4)]).unwrap();
        let conj = conjugate_set(&s, &p("(12)", 4)).unwrap();
        assert_eq!(conj, PermSet::new(4, [p("id", 4), p("(132)", 4)]).unwrap());

        let only_id = PermSet::new(4, [p("id", 4)]).unwrap();
        assert_eq!(conjugate_set(&only_id, &p("(1234)", 4)).unwrap(), only_id);

        let s = PermSet::new(4, [p("id", 4), p("(1234)", 4)]).unwrap();
        let conj = conjugate_set(&s, &p("(13)", 4)).unwrap();
        assert_eq!(conj, PermSet::new(4, [p("id", 4), p("(1432)", 4)]).unwrap());
    }

    #[test]
    fn class_reps() {
        assert_eq!(conjugacy_class_rep(&p("(13)", 4)).unwrap(), p("(12)", 4));
        assert_eq!(conjugacy_class_rep(&p("(1432)", 4)).unwrap(), p("(1234)", 4));
        assert_eq!(conjugacy_class_rep(&p("(14)(23)", 4)).unwrap(), p("(12)(34)", 4));
        assert!(matches!(
            conjugacy_class_rep(&p("id", 4)),
            Err(PermError::NoRepresentative)
        ));
    }

    #[test]
    fn rep_constant_on_classes() {
        let s4 = symmetric_group(4).unwrap();
        for pi in s4.members() {
            if pi.is_identity() {
                continue;
            }
            let rep = conjugacy_class_rep(pi).unwrap();
            for rho in s4.members() {
                let conj = rho.conjugate(pi).unwrap();
                assert_eq!(conjugacy_class_rep(&conj).unwrap(), rep);
            }
        }
    }

    #[test]
    fn symmetric_group_sizes() {
        assert_eq!(symmetric_group(1).unwrap().len(), 1);
        assert_eq!(symmetric_group(3).unwrap().len(), 6);
        let s4 = symmetric_group(4).unwrap();
        assert_eq!(s4.len(), 24);
        assert!(s4.contains(&p("(123)", 4)));
        assert!(s4.contains(&p("(1234)", 4)));
        assert!(matches!(symmetric_group(9), Err(PermError::ResourceLimit(_))));
    }

    #[test]
    fn cyclic_shifts() {
        assert_eq!(
            cyclic_shift_set(2).unwrap(),
            PermSet::new(2, [p("id", 2), p("(12)", 2)]).unwrap()
        );
        assert!(cyclic_shift_set(4).unwrap().contains(&p("(1234)", 4)));
        assert!(cyclic_shift(5, 0).unwrap().is_identity());
    }

    #[test]
    fn negation_permutations() {
        assert_eq!(negation_permutation(4, SignedMode::Nk).unwrap(), p("(12)(34)", 4));
        assert_eq!(negation_permutation(4, SignedMode::Zk).unwrap(), p("(12)", 4));
        assert_eq!(negation_permutation(3, SignedMode::Nk).unwrap(), p("(12)", 3));
        assert_eq!(negation_permutation(3, SignedMode::Zk).unwrap(), p("(12)", 3));
    }

    #[test]
    fn gain_encoding_z2() {
        let z2 = GroupTable::cyclic(2).unwrap();
        // k = 1: blocks of size 2, one block, last point fixed.
        assert_eq!(gain_encode(&z2, 1, 1).unwrap(), p("(12)", 3));
        assert!(gain_encode(&z2, 1, 0).unwrap().is_identity());
        assert_eq!(gain_encode(&z2, 2, 1).unwrap(), p("(12)(34)", 5));
    }

    #[test]
    fn gain_encode_antihomomorphism() {
        let z6 = GroupTable::cyclic(6).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                let lhs = gain_encode(&z6, 2, z6.mul(x, y)).unwrap();
                let rhs = compose(
                    &gain_encode(&z6, 2, y).unwrap(),
                    &gain_encode(&z6, 2, x).unwrap(),
                )
                .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn gain_encode_caps_alphabet() {
        let z6 = GroupTable::cyclic(6).unwrap();
        assert!(matches!(
            gain_encode(&z6, 1000, 1),
            Err(PermError::ResourceLimit(_))
        ));
    }

    #[test]
    fn group_table_validation() {
        assert!(GroupTable::new(vec![vec![0, 1], vec![1, 1]], 0).is_err());
        assert!(GroupTable::cyclic(5).is_ok());
        assert!(GroupTable::symmetric(3).is_ok());
        let k4 = GroupTable::direct_product(
            &GroupTable::cyclic(2).unwrap(),
            &GroupTable::cyclic(2).unwrap(),
        )
        .unwrap();
        assert_eq!(k4.order(), 4);
    }

    #[test]
    fn print_parse_round_trip() {
        for text in ["id", "(123)", "(12)(34)", "(1234)", "(13)"] {
            let q = p(text, 4);
            assert_eq!(parse_cycles(&print_cycles(&q), 4).unwrap(), q);
        }
        let big = cyclic_shift(12, 5).unwrap();
        assert_eq!(parse_cycles(&print_cycles(&big), 12).unwrap(), big);
    }
}
