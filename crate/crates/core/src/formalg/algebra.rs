//! Generators, words and elements of the free graded algebra over `Q(v)`.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Mutex;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qring::{quantum_factorial, LaurentPolynomial, RationalFunction};
use crate::quiverlab::{cartan_matrix, CartanMatrix, DimensionVector, Quiver};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    /// `F_i` at a vertex without loops.
    Real,
    /// `F_i` at a vertex with loops.
    Imaginary,
    /// `z_(i,n)` of degree `n e_i`, `i` imaginary.
    Extended,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub label: String,
    pub vertex: usize,
    pub n: u32,
    pub degree: DimensionVector,
    pub kind: GeneratorKind,
    pub c: RationalFunction,
}

/// `(1 - v^-2)^-1`.
pub fn real_constant() -> RationalFunction {
    RationalFunction::from_laurent(LaurentPolynomial::from_terms([(0, 1), (-2, -1)]))
        .inv()
        .unwrap()
}

/// Memoized word pairings, keyed by the two words.
pub(crate) type PairMemo = Mutex<HashMap<(Vec<usize>, Vec<usize>), RationalFunction>>;

/// A generator list together with the vertex Cartan matrix that defines the
/// form `(deg, deg')` used by the coproduct and the pairing.
#[derive(Debug)]
pub struct GeneratorSet {
    gens: Vec<Generator>,
    cartan: Vec<Vec<i64>>,
    id: u64,
    memo: PairMemo,
}

impl Clone for GeneratorSet {
    fn clone(&self) -> Self {
        Self::build(self.gens.clone(), self.cartan.clone())
    }
}

impl GeneratorSet {
    fn build(gens: Vec<Generator>, cartan: Vec<Vec<i64>>) -> Self {
        let mut h = DefaultHasher::new();
        gens.hash(&mut h);
        cartan.hash(&mut h);
        Self {
            gens,
            cartan,
            id: h.finish(),
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// `F_i` for every vertex.
    pub fn standard(q: &Quiver) -> Self {
        let n = q.vertex_count();
        let gens = (0..n)
            .map(|i| {
                let real = !q.is_imaginary(i);
                Generator {
                    label: q.label(i).to_string(),
                    vertex: i,
                    n: 1,
                    degree: DimensionVector::unit(n, i),
                    kind: if real { GeneratorKind::Real } else { GeneratorKind::Imaginary },
                    c: if real { real_constant() } else { RationalFunction::one() },
                }
            })
            .collect();
        Self::build(gens, cartan_matrix(q).entries)
    }

    /// `F_i` for real `i` and `z_(i,n)` for imaginary `i`, `n <= cutoff`.
    /// Ordered like the extended Cartan matrix, labelled `i[n]`.
    pub fn extended(q: &Quiver, cutoff: u32) -> Self {
        let nv = q.vertex_count();
        let mut gens = Vec::new();
        for i in 0..nv {
            if q.is_imaginary(i) {
                for n in 1..=cutoff {
                    gens.push(Generator {
                        label: format!("{}[{n}]", q.label(i)),
                        vertex: i,
                        n,
                        degree: DimensionVector::unit(nv, i).scaled(n),
                        kind: GeneratorKind::Extended,
                        c: RationalFunction::one(),
                    });
                }
            } else {
                gens.push(Generator {
                    label: q.label(i).to_string(),
                    vertex: i,
                    n: 1,
                    degree: DimensionVector::unit(nv, i),
                    kind: GeneratorKind::Real,
                    c: real_constant(),
                });
            }
        }
        Self::build(gens, cartan_matrix(q).entries)
    }

    /// Same generators, form taken from another vertex-indexed matrix.
    pub fn with_cartan(&self, c: &CartanMatrix) -> Result<Self> {
        if c.size() != self.cartan.len() {
            return Err(Error::IndexMismatch);
        }
        Ok(Self::build(self.gens.clone(), c.entries.clone()))
    }

    /// Same generators with new pairing constants.
    pub fn with_constants(&self, cs: Vec<RationalFunction>) -> Result<Self> {
        if cs.len() != self.gens.len() {
            return Err(Error::DimensionMismatch {
                expected: self.gens.len(),
                got: cs.len(),
            });
        }
        let gens = self
            .gens
            .iter()
            .zip(cs)
            .map(|(g, c)| Generator { c, ..g.clone() })
            .collect();
        Ok(Self::build(gens, self.cartan.clone()))
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.gens
            .iter()
            .position(|g| g.label == label)
            .ok_or_else(|| Error::UnknownGenerator(label.to_string()))
    }

    /// `(a, b) = sum_ij a_i b_j c_ij`.
    pub fn form(&self, a: &DimensionVector, b: &DimensionVector) -> i64 {
        let n = self.cartan.len();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += (a[i] * b[j]) as i64 * self.cartan[i][j];
            }
        }
        s
    }

    pub fn gen_form(&self, g: usize, h: usize) -> i64 {
        self.form(&self.gens[g].degree, &self.gens[h].degree)
    }

    pub fn word_degree(&self, w: &Word) -> DimensionVector {
        w.0.iter()
            .fold(DimensionVector::zero(self.vertex_count()), |d, &g| d.add(&self.gens[g].degree))
    }

    /// All words of degree `nu`, lexicographic in generator order.
    pub fn words_of_degree(&self, nu: &DimensionVector) -> Vec<Word> {
        fn go(gs: &GeneratorSet, rest: &DimensionVector, prefix: &mut Vec<usize>, out: &mut Vec<Word>) {
            if rest.is_zero() {
                out.push(Word(prefix.clone()));
                return;
            }
            for (k, g) in gs.gens.iter().enumerate() {
                if let Some(r) = rest.checked_sub(&g.degree) {
                    prefix.push(k);
                    go(gs, &r, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(self, nu, &mut Vec::new(), &mut out);
        out
    }

    pub fn generator(&self, k: usize) -> AlgebraElement {
        AlgebraElement::word(self, Word(vec![k]))
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::word(self, Word(vec![]))
    }

    pub(crate) fn memo(&self) -> &PairMemo {
        &self.memo
    }

    pub fn display_word(&self, w: &Word) -> String {
        if w.0.is_empty() {
            return "1".into();
        }
        w.0.iter()
            .map(|&g| format!("F{}", self.gens[g].label))
            .collect::<Vec<_>>()
            .join("")
    }
}

/// A sequence of generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Formal linear combination of words; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    pub(crate) gens_id: u64,
    pub(crate) terms: BTreeMap<Word, RationalFunction>,
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, RationalFunction>, k: K, c: RationalFunction) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

impl AlgebraElement {
    pub fn zero(gs: &GeneratorSet) -> Self {
        Self {
            gens_id: gs.id,
            terms: BTreeMap::new(),
        }
    }

    pub fn word(gs: &GeneratorSet, w: Word) -> Self {
        Self::from_terms(gs, [(w, RationalFunction::one())])
    }

    pub fn from_terms(gs: &GeneratorSet, terms: impl IntoIterator<Item = (Word, RationalFunction)>) -> Self {
        let mut map = BTreeMap::new();
        for (w, c) in terms {
            accumulate(&mut map, w, c);
        }
        Self {
            gens_id: gs.id,
            terms: map,
        }
    }

    pub fn terms(&self) -> &BTreeMap<Word, RationalFunction> {
        &self.terms
    }

    pub fn coefficient(&self, w: &Word) -> RationalFunction {
        self.terms.get(w).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms; `Ok(None)` for zero.
    pub fn degree(&self, gs: &GeneratorSet) -> Result<Option<DimensionVector>> {
        self.check(gs)?;
        let mut deg = None;
        for w in self.terms.keys() {
            let d = gs.word_degree(w);
            match &deg {
                None => deg = Some(d),
                Some(e) if *e != d => return Err(Error::Inhomogeneous),
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn check(&self, gs: &GeneratorSet) -> Result<()> {
        if self.gens_id != gs.id {
            return Err(Error::GeneratorSetMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.gens_id != other.gens_id {
            return Err(Error::GeneratorSetMismatch);
        }
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            accumulate(&mut terms, w.clone(), c.clone());
        }
        Ok(Self {
            gens_id: self.gens_id,
            terms,
        })
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut terms = BTreeMap::new();
        for (w, d) in &self.terms {
            accumulate(&mut terms, w.clone(), d * c);
        }
        Self {
            gens_id: self.gens_id,
            terms,
        }
    }

    pub fn display(&self, gs: &GeneratorSet) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(w, c)| {
                if c.is_one() {
                    gs.display_word(w)
                } else {
                    format!("({c})*{}", gs.display_word(w))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Bilinear extension of concatenation.
pub fn multiply(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    if x.gens_id != y.gens_id {
        return Err(Error::GeneratorSetMismatch);
    }
    let mut terms = BTreeMap::new();
    for (a, c) in &x.terms {
        for (b, d) in &y.terms {
            accumulate(&mut terms, a.concat(b), c * d);
        }
    }
    Ok(AlgebraElement {
        gens_id: x.gens_id,
        terms,
    })
}

/// `F_g^(n) = F_g^n / [n]!`.
pub fn divided_power(gs: &GeneratorSet, g: usize, n: u32) -> AlgebraElement {
    let c = RationalFunction::from_laurent(quantum_factorial(n)).inv().unwrap();
    AlgebraElement::from_terms(gs, [(Word(vec![g; n as usize]), c)])
}

/// Linear combination of `Word ⊗ Word`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    pub(crate) gens_id: u64,
    pub(crate) terms: BTreeMap<(Word, Word), RationalFunction>,
}

impl TensorElement {
    pub fn terms(&self) -> &BTreeMap<(Word, Word), RationalFunction> {
        &self.terms
    }

    pub fn coefficient(&self, a: &Word, b: &Word) -> RationalFunction {
        self.terms
            .get(&(a.clone(), b.clone()))
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    pub fn from_terms(gs: &GeneratorSet, terms: impl IntoIterator<Item = ((Word, Word), RationalFunction)>) -> Self {
        let mut map = BTreeMap::new();
        for (k, c) in terms {
            accumulate(&mut map, k, c);
        }
        Self {
            gens_id: gs.id,
            terms: map,
        }
    }
}

/// The twisted coproduct: `r(w) = sum_S v^e(S) w_S ⊗ w_(S^c)` with
/// `e(S) = sum_(l ∉ S, m ∈ S, l < m) (deg w_l, deg w_m)`.
pub fn coproduct_r(gs: &GeneratorSet, x: &AlgebraElement) -> Result<TensorElement> {
    x.degree(gs)?;
    let mut terms = BTreeMap::new();
    for (w, c) in &x.terms {
        let n = w.len();
        for mask in 0u32..(1 << n) {
            let mut e = 0;
            for m in 0..n {
                if mask >> m & 1 == 0 {
                    continue;
                }
                for l in 0..m {
                    if mask >> l & 1 == 0 {
                        e += gs.gen_form(w.0[l], w.0[m]);
                    }
                }
            }
            let left = Word((0..n).filter(|k| mask >> k & 1 == 1).map(|k| w.0[k]).collect());
            let right = Word((0..n).filter(|k| mask >> k & 1 == 0).map(|k| w.0[k]).collect());
            accumulate(&mut terms, (left, right), c * &RationalFunction::v_pow(e));
        }
    }
    Ok(TensorElement {
        gens_id: x.gens_id,
        terms,
    })
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
