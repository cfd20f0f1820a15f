//! Squarefree monomials and formal integer combinations of them.
//!
//! All monomials in this crate are squarefree, so a monomial is just the set
//! of vertices (variables) dividing it. [`VertexSet`] is a small bitset over
//! vertex indices; [`Poly`] is a sparse map from monomials to integer
//! multiplicities.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg};

/// Set of vertex indices, stored as a bitset with trailing zero words trimmed
/// so that equal sets compare equal regardless of construction history.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut set = Self::new();
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub fn insert(&mut self, v: usize) {
        let (w, b) = (v / 64, v % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn contains(&self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        self.words.get(w).is_some_and(|word| word & (1 << b) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(&short.words) {
            *w |= o;
        }
        Self { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        Self::trimmed(words)
    }

    /// Elements of `self` not in `other`.
    pub fn difference(&self, other: &Self) -> Self {
        let words = self
            .words
            .iter()
            .enumerate()
            .map(|(i, w)| w & !other.words.get(i).copied().unwrap_or(0))
            .collect();
        Self::trimmed(words)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Vertex indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            (0..64)
                .filter(move |b| word & (1 << b) != 0)
                .map(move |b| i * 64 + b)
        })
    }

    fn trimmed(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        Self { words }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_vertices(iter)
    }
}

/// `sign * x^exponent` with `sign` in {+1, -1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedMonomial {
    pub sign: i64,
    pub exponent: VertexSet,
}

impl SignedMonomial {
    pub fn new(sign: i64, exponent: VertexSet) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        Self { sign, exponent }
    }

    pub fn one() -> Self {
        Self::new(1, VertexSet::new())
    }

    /// Product of two signed monomials. The supports are expected to be
    /// disjoint (as along gradient paths); overlapping supports would leave
    /// the squarefree world and are rejected in debug builds.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.exponent.is_disjoint(&other.exponent));
        Self::new(self.sign * other.sign, self.exponent.union(&other.exponent))
    }

    pub fn negated(&self) -> Self {
        Self::new(-self.sign, self.exponent.clone())
    }

    pub fn is_unit(&self) -> bool {
        self.exponent.is_empty()
    }
}

/// Formal integer combination of squarefree monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<VertexSet, i64>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coeff: i64, exponent: VertexSet) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff, exponent);
        p
    }

    pub fn add_term(&mut self, coeff: i64, exponent: VertexSet) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(exponent) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if *slot.get() == 0 {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&VertexSet, i64)> {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> i64 {
        self.terms.get(&VertexSet::new()).copied().unwrap_or(0)
    }

    /// Largest absolute coefficient; 0 for the zero polynomial.
    pub fn max_multiplicity(&self) -> i64 {
        self.terms.values().map(|c| c.abs()).max().unwrap_or(0)
    }

    /// Multiply by a signed monomial with support disjoint from every term.
    pub fn scale(&self, m: &SignedMonomial) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            assert!(e.is_disjoint(&m.exponent), "non-squarefree product");
            out.add_term(c * m.sign, e.union(&m.exponent));
        }
        out
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (e, c) in &rhs.terms {
            self.add_term(*c, e.clone());
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                assert!(e1.is_disjoint(e2), "non-squarefree product");
                out.add_term(c1 * c2, e1.union(e2));
            }
        }
        out
    }
}
