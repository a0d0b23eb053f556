//! The parameter tuple `q` and the normal-ordering engine.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{pair_slot, Cyc, QExp, Scalar, MAX_ORDER};

use super::monomial::Monomial;

/// Parameters of `S_q(V)`: the number of generators, the order of the fixed
/// root of unity `zeta`, and either symbolic `q_ij` or a table of values.
#[derive(Clone, PartialEq, Eq)]
pub struct QContext {
    n: usize,
    order: u32,
    /// Value of `q_ij` (`i < j`) per pair slot when specialized.
    values: Option<Vec<Cyc>>,
    inverses: Option<Vec<Cyc>>,
    classical: bool,
}

impl QContext {
    pub fn symbolic(n: usize, order: u32) -> Result<Self> {
        check_shape(n, order)?;
        Ok(QContext {
            n,
            order,
            values: None,
            inverses: None,
            classical: false,
        })
    }

    /// The polynomial ring: every `q_ij = 1`.
    pub fn classical(n: usize) -> Self {
        QContext::specialized(n, 1, &[]).expect("trivial table is valid")
    }

    /// Specialized parameters. Entries may be given for either `(i, j)` or
    /// `(j, i)`; unlisted pairs default to 1.
    pub fn specialized(n: usize, order: u32, entries: &[((usize, usize), Cyc)]) -> Result<Self> {
        check_shape(n, order)?;
        let slots = n * n.saturating_sub(1) / 2;
        let mut table: Vec<Option<Cyc>> = vec![None; slots];
        for ((i, j), v) in entries {
            let (i, j) = (*i, *j);
            for k in [i, j] {
                if k == 0 || k > n {
                    return Err(Error::IndexOutOfRange { index: k, n });
                }
            }
            if v.order() != 1 && v.order() != order {
                return Err(Error::InvalidParameters(format!(
                    "q{i}{j} = {v} does not lie in Q(zeta_{order})"
                )));
            }
            if i == j {
                if !v.is_one() {
                    return Err(Error::InvalidParameters(format!("q{i}{i} must be 1, got {v}")));
                }
                continue;
            }
            let val = if i < j {
                v.clone()
            } else {
                v.inv()
                    .ok_or_else(|| Error::InvalidParameters(format!("q{i}{j} must be nonzero")))?
            };
            if val.is_zero() {
                return Err(Error::InvalidParameters(format!("q{i}{j} must be nonzero")));
            }
            let slot = pair_slot(i.min(j), i.max(j));
            match &table[slot] {
                Some(prev) if *prev != val => {
                    return Err(Error::InvalidParameters(format!(
                        "q{i}{j} * q{j}{i} != 1 for the given table"
                    )));
                }
                _ => table[slot] = Some(val),
            }
        }
        let values: Vec<Cyc> = table.into_iter().map(|v| v.unwrap_or_else(Cyc::one)).collect();
        let inverses = values.iter().map(|v| v.inv().expect("nonzero")).collect();
        let classical = values.iter().all(Cyc::is_one);
        Ok(QContext {
            n,
            order,
            values: Some(values),
            inverses: Some(inverses),
            classical,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_symbolic(&self) -> bool {
        self.values.is_none()
    }

    pub fn is_classical(&self) -> bool {
        self.classical
    }

    pub fn slot_count(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// `zeta^k` in this context's field.
    pub fn zeta_pow(&self, k: i64) -> Cyc {
        Cyc::zeta_pow(self.order, k)
    }

    /// `q_ij` for any `1 <= i, j <= N`.
    pub fn q(&self, i: usize, j: usize) -> Scalar {
        let mut e = vec![0i32; self.slot_count()];
        add_q(&mut e, i, j, 1);
        self.twist(&e)
    }

    /// The scalar `prod q_slot^e_slot` for an exponent vector over pair slots.
    pub fn twist(&self, exps: &[i32]) -> Scalar {
        if self.classical {
            return Scalar::one();
        }
        match (&self.values, &self.inverses) {
            (Some(vals), Some(invs)) => {
                let mut acc = Cyc::one();
                for (s, &e) in exps.iter().enumerate() {
                    let base = if e > 0 { &vals[s] } else { &invs[s] };
                    if base.is_one() {
                        continue;
                    }
                    for _ in 0..e.unsigned_abs() {
                        acc = acc.mul(base);
                    }
                }
                Scalar::from_cyc(acc)
            }
            _ => Scalar::q_monomial(QExp::from_slots(exps)),
        }
    }

    /// Evaluates a symbolic scalar at this context's parameter values.
    pub fn specialize(&self, s: &Scalar) -> Result<Scalar> {
        if self.is_symbolic() {
            return Err(Error::SymbolicUnsupported);
        }
        let mut acc = Scalar::zero();
        for (e, c) in s.terms() {
            let mut slots = e.slots().to_vec();
            if slots.len() > self.slot_count() {
                if slots[self.slot_count()..].iter().any(|&x| x != 0) {
                    return Err(Error::InvalidParameters(format!(
                        "scalar {s} mentions parameters beyond N = {}",
                        self.n
                    )));
                }
                slots.truncate(self.slot_count());
            }
            acc = acc.add(&self.twist(&slots).scale_cyc(c));
        }
        Ok(acc)
    }

    /// Whether a symbolic exponent vector evaluates to 1 in this context.
    pub fn twist_is_one(&self, exps: &[i32]) -> bool {
        if self.is_symbolic() {
            exps.iter().all(|&e| e == 0)
        } else {
            self.twist(exps).is_one()
        }
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            Err(Error::IndexOutOfRange { index: i, n: self.n })
        } else {
            Ok(())
        }
    }
}

fn check_shape(n: usize, order: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameters("need at least one generator".into()));
    }
    if n > 64 {
        return Err(Error::InvalidParameters("at most 64 generators are supported".into()));
    }
    if order == 0 || order > MAX_ORDER {
        return Err(Error::InvalidParameters(format!(
            "cyclotomic order must lie in 1..={MAX_ORDER}"
        )));
    }
    Ok(())
}

impl fmt::Debug for QContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QContext(N={}, zeta order {}", self.n, self.order)?;
        match &self.values {
            None => write!(f, ", symbolic)"),
            Some(v) => write!(f, ", q = {v:?})"),
        }
    }
}

/// Adds `k` to the exponent of `q_ij` (with `q_ji = q_ij^-1`, `q_ii = 1`).
pub fn add_q(exps: &mut [i32], i: usize, j: usize, k: i32) {
    if i < j {
        exps[pair_slot(i, j)] += k;
    } else if j < i {
        exps[pair_slot(j, i)] -= k;
    }
}

/// Streams the blocks of a word in the generators left to right and records
/// the coefficient `c(W)` with `W = c(W) * (normal-ordered monomial)`.
///
/// Every twisting coefficient in the crate is a ratio `c(old) / c(new)` of
/// two such words with the same letters.
#[derive(Clone, Debug)]
pub struct Twister {
    exps: Vec<i32>,
    counts: Vec<u32>,
}

impl Twister {
    pub fn new(n: usize) -> Self {
        Twister {
            exps: vec![0; n * (n - 1) / 2],
            counts: vec![0; n],
        }
    }

    /// Appends `x_i^k`.
    pub fn push_power(&mut self, i: usize, k: u32) {
        if k == 0 {
            return;
        }
        let n = self.counts.len();
        for a in i + 1..=n {
            let c = self.counts[a - 1];
            if c != 0 {
                // x_a x_i = q_ai x_i x_a with a > i
                add_q(&mut self.exps, a, i, (c * k) as i32);
            }
        }
        self.counts[i - 1] += k;
    }

    pub fn push_letter(&mut self, i: usize) {
        self.push_power(i, 1);
    }

    pub fn push_monomial(&mut self, m: &Monomial) {
        for (idx, &k) in m.exps().iter().enumerate() {
            self.push_power(idx + 1, k);
        }
    }

    pub fn push_letters(&mut self, letters: impl IntoIterator<Item = usize>) {
        for i in letters {
            self.push_letter(i);
        }
    }

    pub fn exps(&self) -> &[i32] {
        &self.exps
    }

    pub fn monomial(&self) -> Monomial {
        Monomial::from_exps(&self.counts)
    }

    /// Exponents of `c(self) / c(other)`.
    pub fn ratio_exps(&self, other: &Twister) -> Vec<i32> {
        debug_assert_eq!(self.counts, other.counts, "words with different letters");
        self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect()
    }
}

/// `c(old) / c(new)` for two words with the same letters.
pub fn twist_ratio(ctx: &QContext, old: &Twister, new: &Twister) -> Scalar {
    ctx.twist(&old.ratio_exps(new))
}
