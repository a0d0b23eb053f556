use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{AlgebraElement, ExtIndex, GroupElement, Monomial, SkewElement};
use crate::scalar::Scalar;

/// A cochain `Σ c x^a ⊗ dx_b` in `A ⊗ Λ_{q^-1}(V*)` of degree `m = |b|`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KoszulCochain {
    degree: usize,
    terms: BTreeMap<(Monomial, ExtIndex), Scalar>,
}

impl KoszulCochain {
    pub fn zero(degree: usize) -> Self {
        KoszulCochain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `c x^a ⊗ dx_b`.
    pub fn term(c: Scalar, a: Monomial, b: ExtIndex) -> Self {
        let mut x = KoszulCochain::zero(b.len());
        x.add_term(a, b, c);
        x
    }

    pub fn basis(a: Monomial, b: ExtIndex) -> Self {
        KoszulCochain::term(Scalar::one(), a, b)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn add_term(&mut self, a: Monomial, b: ExtIndex, c: Scalar) {
        debug_assert_eq!(b.len(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, ExtIndex), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &Monomial, b: ExtIndex) -> Scalar {
        self.terms.get(&(a.clone(), b)).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, other: &KoszulCochain, c: &Scalar) {
        for ((a, b), d) in &other.terms {
            self.add_term(a.clone(), *b, d.mul(c));
        }
    }

    pub fn add(&self, other: &KoszulCochain) -> KoszulCochain {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &KoszulCochain) -> KoszulCochain {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_int(-1));
        out
    }

    pub fn scale(&self, c: &Scalar) -> KoszulCochain {
        let mut out = KoszulCochain::zero(self.degree);
        out.add_scaled(self, c);
        out
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> KoszulCochain {
        let mut out = KoszulCochain::zero(self.degree);
        for ((a, b), c) in &self.terms {
            out.add_term(a.clone(), *b, f(c));
        }
        out
    }

    /// The single term of a basis element `x^a ⊗ dx_b`, if this is one.
    pub fn as_basis(&self) -> Option<(&Monomial, ExtIndex)> {
        if self.terms.len() != 1 {
            return None;
        }
        let ((a, b), c) = self.terms.iter().next()?;
        c.is_one().then_some((a, *b))
    }
}

impl fmt::Display for KoszulCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((a, b), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{a} ^ {}", b.dx_string())?;
        }
        Ok(())
    }
}

impl fmt::Debug for KoszulCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Values of bar cochains: `A` for `S_q(V)` and `A ⋊ G` for its group extension.
pub trait CochainValue: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    /// A basis element of the argument space (`x^l`, or `x^l ♯ g`).
    type Entry: Clone + fmt::Debug + Send + Sync + 'static;

    fn zero() -> Self;

    fn add_scaled(&mut self, other: &Self, c: &Scalar);

    /// The value as a combination of entries, projected to `Ā` (terms whose
    /// algebra part is constant are dropped).
    fn bar_entries(&self) -> Vec<(Self::Entry, Scalar)>;
}

impl CochainValue for AlgebraElement {
    type Entry = Monomial;

    fn zero() -> Self {
        AlgebraElement::zero()
    }

    fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        for (m, d) in other.terms() {
            self.add_term(m.clone(), d.mul(c));
        }
    }

    fn bar_entries(&self) -> Vec<(Monomial, Scalar)> {
        self.terms().filter(|(m, _)| !m.is_one()).map(|(m, c)| (m.clone(), c.clone())).collect()
    }
}

impl CochainValue for SkewElement {
    type Entry = (Monomial, GroupElement);

    fn zero() -> Self {
        SkewElement::zero()
    }

    fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        for ((m, g), d) in other.terms() {
            self.add_term(m.clone(), g.clone(), d.mul(c));
        }
    }

    fn bar_entries(&self) -> Vec<((Monomial, GroupElement), Scalar)> {
        self.terms().filter(|((m, _), _)| !m.is_one()).map(|(k, c)| (k.clone(), c.clone())).collect()
    }
}

type Evaluator<V> = dyn Fn(&[<V as CochainValue>::Entry]) -> V + Send + Sync;

/// A normalized bar cochain `A ⊗ Ā^{⊗p} ⊗ A → V`, given by its values on
/// words of basis entries.
pub struct BarCochain<V: CochainValue> {
    degree: usize,
    eval: Arc<Evaluator<V>>,
}

impl<V: CochainValue> Clone for BarCochain<V> {
    fn clone(&self) -> Self {
        BarCochain {
            degree: self.degree,
            eval: Arc::clone(&self.eval),
        }
    }
}

impl<V: CochainValue> fmt::Debug for BarCochain<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BarCochain(degree {})", self.degree)
    }
}

impl<V: CochainValue> BarCochain<V> {
    pub fn new(degree: usize, eval: impl Fn(&[V::Entry]) -> V + Send + Sync + 'static) -> Self {
        BarCochain {
            degree,
            eval: Arc::new(eval),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn eval(&self, word: &[V::Entry]) -> V {
        debug_assert_eq!(word.len(), self.degree);
        (self.eval)(word)
    }

    /// `Σ c_i f_i` for cochains of equal degree.
    pub fn combination(degree: usize, parts: Vec<(Scalar, BarCochain<V>)>) -> Self {
        assert!(parts.iter().all(|(_, f)| f.degree == degree), "mixed degrees");
        BarCochain::new(degree, move |w| {
            let mut out = V::zero();
            for (c, f) in &parts {
                out.add_scaled(&f.eval(w), c);
            }
            out
        })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        BarCochain::combination(self.degree, vec![(c.clone(), self.clone())])
    }

    pub fn sub(&self, other: &BarCochain<V>) -> Self {
        BarCochain::combination(
            self.degree,
            vec![(Scalar::one(), self.clone()), (Scalar::from_int(-1), other.clone())],
        )
    }
}

/// `f ∘_k g` (`k` is 1-based): `g` is evaluated on `a_k, ..., a_{k+q-1}` and its
/// value, read in `Ā`, is inserted into slot `k` of `f`.
pub fn circle<V: CochainValue>(f: &BarCochain<V>, g: &BarCochain<V>, k: usize) -> BarCochain<V> {
    let (p, q) = (f.degree, g.degree);
    assert!(1 <= k && k <= p, "slot {k} out of range for degree {p}");
    let (f, g) = (f.clone(), g.clone());
    BarCochain::new(p + q - 1, move |w| {
        let inner = g.eval(&w[k - 1..k - 1 + q]);
        let mut out = V::zero();
        let mut word: Vec<V::Entry> = Vec::with_capacity(p);
        for (e, c) in inner.bar_entries() {
            word.clear();
            word.extend_from_slice(&w[..k - 1]);
            word.push(e);
            word.extend_from_slice(&w[k - 1 + q..]);
            out.add_scaled(&f.eval(&word), &c);
        }
        out
    })
}

fn sign(e: usize) -> Scalar {
    Scalar::from_int(if e.is_multiple_of(2) { 1 } else { -1 })
}

/// The Gerstenhaber bracket
/// `[f, g] = Σ_k (-1)^{(q-1)(k-1)} f ∘_k g - (-1)^{(p-1)(q-1)} Σ_k (-1)^{(p-1)(k-1)} g ∘_k f`.
pub fn bracket_bar<V: CochainValue>(f: &BarCochain<V>, g: &BarCochain<V>) -> BarCochain<V> {
    let (p, q) = (f.degree, g.degree);
    if p + q == 0 {
        return BarCochain::new(0, |_| V::zero());
    }
    let mut parts = Vec::new();
    for k in 1..=p {
        parts.push((sign((q + 1) * (k + 1)), circle(f, g, k)));
    }
    let outer = sign((p + 1) * (q + 1)).neg();
    for k in 1..=q {
        parts.push((outer.mul(&sign((p + 1) * (k + 1))), circle(g, f, k)));
    }
    BarCochain::combination(p + q - 1, parts)
}
