//! The bilinear form, Gram matrices, radical and Serre-ideal quotients.

use crate::error::{Error, Result};
use crate::qring::{ExactMatrix, RationalFunction};
use crate::quiverlab::{CartanMatrix, DimensionVector};

use super::algebra::{divided_power, multiply, AlgebraElement, GeneratorKind, GeneratorSet, TensorElement, Word};

/// `(w, u)` on words, via `(w, g u') = (r(w), g ⊗ u')`. Only the one-letter
/// pieces of `r(w)` pair nontrivially with a generator, which gives
/// `(w, g u') = sum_(p : w_p = g) v^(sum_(l<p) (deg w_l, deg g)) c_g (w \ p, u')`.
pub fn pair_words(gs: &GeneratorSet, w: &[usize], u: &[usize]) -> RationalFunction {
    if w.is_empty() && u.is_empty() {
        return RationalFunction::one();
    }
    if w.is_empty() || u.is_empty() {
        return RationalFunction::zero();
    }
    let key = (w.to_vec(), u.to_vec());
    if let Some(v) = gs.memo().lock().unwrap().get(&key) {
        return v.clone();
    }
    let value = if gs.word_degree(&Word(w.to_vec())) != gs.word_degree(&Word(u.to_vec())) {
        RationalFunction::zero()
    } else {
        let g = u[0];
        let rest = &u[1..];
        let mut acc = RationalFunction::zero();
        let mut e = 0;
        for p in 0..w.len() {
            if w[p] == g {
                let mut shorter = w.to_vec();
                shorter.remove(p);
                let inner = pair_words(gs, &shorter, rest);
                if !inner.is_zero() {
                    acc = &acc + &(&inner * &RationalFunction::v_pow(e));
                }
            }
            e += gs.gen_form(w[p], g);
        }
        &acc * &gs.generators()[g].c
    };
    gs.memo().lock().unwrap().insert(key, value.clone());
    value
}

pub fn pair(gs: &GeneratorSet, x: &AlgebraElement, y: &AlgebraElement) -> Result<RationalFunction> {
    x.check(gs)?;
    y.check(gs)?;
    let mut acc = RationalFunction::zero();
    for (a, c) in x.terms() {
        for (b, d) in y.terms() {
            let p = pair_words(gs, &a.0, &b.0);
            if !p.is_zero() {
                acc = &acc + &(&p * &(c * d));
            }
        }
    }
    Ok(acc)
}

/// `(x1 ⊗ x2, y ⊗ z) = (x1, y)(x2, z)`.
pub fn pair_tensor(gs: &GeneratorSet, t: &TensorElement, y: &AlgebraElement, z: &AlgebraElement) -> Result<RationalFunction> {
    y.check(gs)?;
    z.check(gs)?;
    if t.gens_id != gs.id() {
        return Err(Error::GeneratorSetMismatch);
    }
    let mut acc = RationalFunction::zero();
    for ((a, b), c) in t.terms() {
        let left = pair(gs, &AlgebraElement::word(gs, a.clone()), y)?;
        if left.is_zero() {
            continue;
        }
        let right = pair(gs, &AlgebraElement::word(gs, b.clone()), z)?;
        acc = &acc + &(&(&left * &right) * c);
    }
    Ok(acc)
}

/// Pairings of all words of one degree.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub degree: DimensionVector,
    pub words: Vec<Word>,
    pub matrix: ExactMatrix<RationalFunction>,
}

pub fn gram_matrix(gs: &GeneratorSet, nu: &DimensionVector) -> GramMatrix {
    let words = gs.words_of_degree(nu);
    let n = words.len();
    let mut m = ExactMatrix::zeros(n, n, &RationalFunction::one());
    for a in 0..n {
        for b in a..n {
            let p = pair_words(gs, &words[a].0, &words[b].0);
            m.set(b, a, p.clone());
            m.set(a, b, p);
        }
    }
    GramMatrix {
        degree: nu.clone(),
        words,
        matrix: m,
    }
}

fn vector_to_element(gs: &GeneratorSet, words: &[Word], v: &[RationalFunction]) -> AlgebraElement {
    AlgebraElement::from_terms(gs, words.iter().cloned().zip(v.iter().cloned()))
}

/// Dimension of the quotient by the radical of the form, and a basis of the
/// radical at this degree.
pub fn radical_quotient_dim(gs: &GeneratorSet, nu: &DimensionVector) -> (usize, Vec<AlgebraElement>) {
    let g = gram_matrix(gs, nu);
    let kernel = g.matrix.kernel();
    let basis = kernel.iter().map(|k| vector_to_element(gs, &g.words, k)).collect();
    (g.words.len() - kernel.len(), basis)
}

fn cartan_entry(gs: &GeneratorSet, c: &CartanMatrix, g: usize, h: usize) -> Result<i64> {
    let idx = |k: usize| {
        let label = &gs.generators()[k].label;
        c.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownGenerator(label.clone()))
    };
    Ok(c.get(idx(g)?, idx(h)?))
}

/// `sum_(p=0)^(1-c_ij) (-1)^p F_i^(p) F_j F_i^(1-c_ij-p)`; `i`, `j` are
/// generator labels and `c` is indexed by the same labels.
pub fn serre_element(gs: &GeneratorSet, i: &str, j: &str, c: &CartanMatrix) -> Result<AlgebraElement> {
    let gi = gs.index_of(i)?;
    let gj = gs.index_of(j)?;
    if gs.generators()[gi].kind != GeneratorKind::Real {
        return Err(Error::ImaginaryGenerator(i.to_string()));
    }
    let cij = cartan_entry(gs, c, gi, gj)?;
    Ok(serre_by_index(gs, gi, gj, cij))
}

fn serre_by_index(gs: &GeneratorSet, gi: usize, gj: usize, cij: i64) -> AlgebraElement {
    let top = (1 - cij) as u32;
    let fj = gs.generator(gj);
    let mut acc = AlgebraElement::zero(gs);
    for p in 0..=top {
        let left = divided_power(gs, gi, p);
        let right = divided_power(gs, gi, top - p);
        let term = multiply(&multiply(&left, &fj).unwrap(), &right).unwrap();
        let sign = RationalFunction::from_int(if p % 2 == 0 { 1 } else { -1 });
        acc = acc.add(&term.scale(&sign)).unwrap();
    }
    acc
}

/// The defining relations: Serre elements for real `i` and every `j != i`,
/// commutators for pairs with vanishing Cartan entry.
pub fn relations(gs: &GeneratorSet, c: &CartanMatrix) -> Result<Vec<AlgebraElement>> {
    let n = gs.len();
    let mut out = Vec::new();
    for g in 0..n {
        let real = c
            .labels
            .iter()
            .position(|l| *l == gs.generators()[g].label)
            .map(|k| c.real[k])
            .ok_or_else(|| Error::UnknownGenerator(gs.generators()[g].label.clone()))?;
        for h in 0..n {
            if g == h {
                continue;
            }
            let cgh = cartan_entry(gs, c, g, h)?;
            if real {
                out.push(serre_by_index(gs, g, h, cgh));
            } else if cgh == 0 && g < h {
                let gh = multiply(&gs.generator(g), &gs.generator(h))?;
                let hg = multiply(&gs.generator(h), &gs.generator(g))?;
                out.push(gh.add(&hg.scale(&RationalFunction::from_int(-1)))?);
            }
        }
    }
    Ok(out)
}

/// Dimension of the degree-`nu` part of the free algebra modulo the two-sided
/// ideal generated by [`relations`].
pub fn serre_ideal_dim(gs: &GeneratorSet, c: &CartanMatrix, nu: &DimensionVector) -> Result<usize> {
    let words = gs.words_of_degree(nu);
    let index: std::collections::HashMap<&Word, usize> = words.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut rows: Vec<Vec<RationalFunction>> = Vec::new();
    for rho in relations(gs, c)? {
        let Some(d) = rho.degree(gs)? else { continue };
        let Some(rest) = nu.checked_sub(&d) else { continue };
        let mut left_degrees = rest.nonzero_below();
        left_degrees.insert(0, DimensionVector::zero(nu.len()));
        for dl in &left_degrees {
            let dr = rest.checked_sub(dl).unwrap();
            let lefts = if dl.is_zero() { vec![Word(vec![])] } else { gs.words_of_degree(dl) };
            let rights = if dr.is_zero() { vec![Word(vec![])] } else { gs.words_of_degree(&dr) };
            for u in &lefts {
                for w in &rights {
                    let mut row = vec![RationalFunction::zero(); words.len()];
                    for (word, coeff) in rho.terms() {
                        let full = u.concat(word).concat(w);
                        row[index[&full]] = coeff.clone();
                    }
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return Ok(words.len());
    }
    let m = ExactMatrix::from_rows(rows, words.len(), &RationalFunction::one())?;
    Ok(words.len() - m.rank())
}

/// Result of a primitive-space computation.
#[derive(Clone, Debug)]
pub struct PrimitiveSpace {
    pub dim: usize,
    pub words: Vec<Word>,
    /// Normalized so the coefficient of the single-letter word is one.
    pub xi: AlgebraElement,
}

/// Elements of degree `m e_i` orthogonal to every product of lower-degree
/// pieces, modulo the radical. `gs` must contain `z_(i,m)`.
pub fn primitive_space_symbolic(gs: &GeneratorSet, vertex: &str, m: i64) -> Result<PrimitiveSpace> {
    if m <= 0 {
        return Err(Error::NonPositive(m));
    }
    let top = gs
        .generators()
        .iter()
        .position(|g| g.kind == GeneratorKind::Extended && g.n == m as u32 && gs_vertex_label(gs, g.vertex, vertex))
        .ok_or_else(|| Error::NotImaginary(vertex.to_string()))?;
    let nu = gs.generators()[top].degree.clone();
    let g = gram_matrix(gs, &nu);
    let single = g.words.iter().position(|w| w.0 == [top]).unwrap();
    let multi: Vec<usize> = (0..g.words.len()).filter(|&k| g.words[k].len() >= 2).collect();
    let restricted = g.matrix.select_rows(&multi);
    let k_multi = restricted.kernel();
    let nullity = g.matrix.kernel().len();
    let xi_vec = k_multi
        .iter()
        .find(|v| !v[single].is_zero())
        .ok_or_else(|| Error::Parse("no primitive vector found".into()))?;
    let scale = xi_vec[single].inv().unwrap();
    let normalized: Vec<RationalFunction> = xi_vec.iter().map(|x| x * &scale).collect();
    Ok(PrimitiveSpace {
        dim: k_multi.len() - nullity,
        xi: vector_to_element(gs, &g.words, &normalized),
        words: g.words,
    })
}

fn gs_vertex_label(gs: &GeneratorSet, vertex: usize, label: &str) -> bool {
    gs.generators()
        .iter()
        .find(|g| g.vertex == vertex)
        .map(|g| g.label == label || g.label.strip_suffix(&format!("[{}]", g.n)) == Some(label))
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::LaurentPolynomial;
    use crate::quiverlab::{cartan_matrix, extend_cartan, presets};

    fn dv(v: &[u32]) -> DimensionVector {
        DimensionVector::new(v.to_vec())
    }

    #[test]
    fn base_cases() {
        let gs = GeneratorSet::standard(&presets::a2());
        let c = &gs.generators()[0].c;
        assert_eq!(pair(&gs, &gs.generator(0), &gs.generator(0)).unwrap(), *c);
        assert!(pair(&gs, &gs.generator(0), &gs.generator(1)).unwrap().is_zero());
        let f2 = AlgebraElement::word(&gs, Word(vec![0, 0]));
        let expected = &RationalFunction::from_laurent(LaurentPolynomial::from_terms([(0, 1), (2, 1)])) * &(c * c);
        assert_eq!(pair(&gs, &f2, &f2).unwrap(), expected);
    }

    #[test]
    fn a2_serre_is_the_kernel() {
        let q = presets::a2();
        let gs = GeneratorSet::standard(&q);
        let (dim, kernel) = radical_quotient_dim(&gs, &dv(&[2, 1]));
        assert_eq!(dim, 2);
        assert_eq!(kernel.len(), 1);
        let s = serre_element(&gs, "1", "2", &cartan_matrix(&q)).unwrap();
        // the kernel vector is a rescaled Serre element
        let k = &kernel[0];
        let w = Word(vec![0, 0, 1]);
        let ratio = &k.coefficient(&w) / &s.coefficient(&w);
        assert_eq!(s.scale(&ratio), *k);
        for word in gs.words_of_degree(&dv(&[2, 1])) {
            assert!(pair(&gs, &s, &AlgebraElement::word(&gs, word)).unwrap().is_zero());
        }
        assert_eq!(serre_ideal_dim(&gs, &cartan_matrix(&q), &dv(&[2, 1])).unwrap(), 2);
    }

    #[test]
    fn serre_shapes() {
        let q = presets::a2();
        let gs = GeneratorSet::standard(&q);
        let s = serre_element(&gs, "1", "2", &cartan_matrix(&q)).unwrap();
        assert_eq!(s.terms().len(), 3);
        assert_eq!(s.coefficient(&Word(vec![0, 1, 0])), RationalFunction::from_int(-1));
        let c0 = cartan_matrix(&q).with_entry(0, 1, 0);
        let comm = serre_element(&gs, "1", "2", &c0).unwrap();
        // the alternating sum gives F_j F_i - F_i F_j, the commutator up to sign
        assert_eq!(comm.coefficient(&Word(vec![0, 1])), RationalFunction::from_int(-1));
        assert_eq!(comm.coefficient(&Word(vec![1, 0])), RationalFunction::one());
        assert_eq!(comm.terms().len(), 2);
        let j = presets::mixed(1);
        let gj = GeneratorSet::standard(&j);
        assert!(matches!(
            serre_element(&gj, "2", "1", &cartan_matrix(&j)),
            Err(Error::ImaginaryGenerator(_))
        ));
    }

    #[test]
    fn free_and_commutative_cases() {
        for q in [presets::jordan(), presets::two_loop()] {
            let gs = GeneratorSet::standard(&q);
            for n in 1..=3 {
                assert_eq!(radical_quotient_dim(&gs, &dv(&[n])).0, 1);
            }
        }
        let j = presets::jordan();
        let ext = GeneratorSet::extended(&j, 3);
        assert_eq!(serre_ideal_dim(&ext, &extend_cartan(&j, 3), &dv(&[3])).unwrap(), 3);
        let t = presets::two_loop();
        let ext = GeneratorSet::extended(&t, 3);
        assert_eq!(serre_ideal_dim(&ext, &extend_cartan(&t, 3), &dv(&[3])).unwrap(), 4);
    }

    #[test]
    fn primitives() {
        for q in [presets::jordan(), presets::two_loop()] {
            for m in 1..=3 {
                let ext = GeneratorSet::extended(&q, m as u32);
                let p = primitive_space_symbolic(&ext, "1", m).unwrap();
                assert_eq!(p.dim, 1, "m = {m}");
                let z = ext.index_of(&format!("1[{m}]")).unwrap();
                assert!(p.xi.coefficient(&Word(vec![z])).is_one());
            }
        }
        let ext = GeneratorSet::extended(&presets::jordan(), 2);
        assert!(matches!(primitive_space_symbolic(&ext, "1", 0), Err(Error::NonPositive(0))));
    }
}
