//! Verification suites over the configured bounds.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{ExtIndex, Monomial, QContext};
use crate::brackets::{bracket_closed, bracket_pipeline, hh_basis, schouten_classical, KoszulCochain};
use crate::chainmaps::{extend, phi, phi_chain, psi, LiftEngine};
use crate::complexes::{bar_words, koszul_left_basis, Bar, BarElem, Chain, Koszul, KoszulElem, Resolution, Word};
use crate::group_ext::{
    bracket_skew_closed, bracket_skew_pipeline, gamma, hh_skew_basis, reynolds, skew_diff, theta, SkewKoszulCochain,
};
use crate::scalar::Scalar;

use super::config::{Config, Fault};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Koszul,
    Homotopy,
    Chainmaps,
    Bracket,
    Skew,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Koszul => "koszul",
            Suite::Homotopy => "homotopy",
            Suite::Chainmaps => "chainmaps",
            Suite::Bracket => "bracket",
            Suite::Skew => "skew",
            Suite::All => "all",
        }
    }

    pub fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Koszul, Suite::Homotopy, Suite::Chainmaps, Suite::Bracket, Suite::Skew],
            s => vec![s],
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub status: &'static str,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl SuiteReport {
    fn pass(cases: usize) -> Self {
        SuiteReport {
            status: "pass",
            cases,
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    fn then(self, next: impl FnOnce() -> SuiteReport) -> SuiteReport {
        if !self.passed() {
            return self;
        }
        let r = next();
        SuiteReport {
            cases: self.cases + r.cases,
            ..r
        }
    }
}

fn check_all<T: Sync>(items: &[T], check: impl Fn(&T) -> Option<String> + Sync + Send) -> SuiteReport {
    match items.par_iter().find_map_first(check) {
        None => SuiteReport::pass(items.len()),
        Some(c) => SuiteReport {
            status: "fail",
            cases: items.len(),
            counterexample: Some(c),
        },
    }
}

pub fn run_suite(cfg: &Config, suite: Suite) -> SuiteReport {
    match suite {
        Suite::Koszul => koszul_suite(cfg),
        Suite::Homotopy => homotopy_suite(cfg),
        Suite::Chainmaps => chainmaps_suite(cfg),
        Suite::Bracket => bracket_suite(cfg),
        Suite::Skew => skew_suite(cfg),
        Suite::All => unreachable!("expanded by the caller"),
    }
}

fn koszul_items(cfg: &Config) -> Vec<KoszulElem> {
    let n = cfg.ctx.n();
    let k = Koszul::new(&cfg.ctx);
    (0..=cfg.bounds.max_p.min(n))
        .flat_map(|p| koszul_left_basis(n, p, cfg.bounds.degree_cap))
        .map(|(j, m)| k.element(j, m))
        .collect()
}

fn bar_items(cfg: &Config) -> Vec<BarElem> {
    let n = cfg.ctx.n();
    let b = Bar::new(&cfg.ctx);
    let mut out = Vec::new();
    for p in 0..=cfg.bounds.max_p {
        for w in bar_words(n, p, cfg.bounds.max_entry_degree) {
            for v in Monomial::up_to_degree(n, 0, cfg.bounds.max_entry_degree) {
                out.push(b.element(w.clone(), v));
            }
        }
    }
    out
}

fn koszul_suite(cfg: &Config) -> SuiteReport {
    let k = Koszul::new(&cfg.ctx);
    let b = Bar::new(&cfg.ctx);
    let ks = koszul_items(cfg);
    let bs = bar_items(cfg);
    check_all(&ks, |x| (x.degree() >= 1 && !k.d(&k.d(x)).is_zero()).then(|| format!("koszul d^2 != 0 on {x}")))
        .then(|| check_all(&bs, |x| (x.degree() >= 1 && !b.d(&b.d(x)).is_zero()).then(|| format!("bar d^2 != 0 on {x}"))))
}

fn homotopy_suite(cfg: &Config) -> SuiteReport {
    let k = Koszul::new(&cfg.ctx);
    let b = Bar::new(&cfg.ctx);
    let ks = koszul_items(cfg);
    let bs = bar_items(cfg);
    check_all(&ks, |x| {
        let r = k.homotopy_residual(x);
        (!r.is_zero()).then(|| format!("td + dt - id = {r} on {x}"))
    })
    .then(|| {
        check_all(&bs, |x| {
            let r = b.homotopy_residual(x);
            (!r.is_zero()).then(|| format!("sd + ds - id = {r} on {x}"))
        })
    })
}

/// `Ψ` with the configured fault applied.
fn psi_with(cfg: &Config, w: &[Monomial]) -> KoszulElem {
    let out = psi(&cfg.ctx, w);
    match cfg.fault {
        None => out,
        Some(Fault::PsiMu) => {
            let mut bad = Chain::zero(out.n(), out.degree());
            for ((u, j, v), c) in out.terms() {
                let c = if u.is_one() { c.clone() } else { c.mul(&Scalar::from_int(2)) };
                bad.add_term(u.clone(), *j, v.clone(), c);
            }
            bad
        }
    }
}

fn psi_chain_with(cfg: &Config, x: &BarElem) -> KoszulElem {
    extend(&cfg.ctx, x, |w| psi_with(cfg, w))
}

fn chainmaps_suite(cfg: &Config) -> SuiteReport {
    let ctx = &cfg.ctx;
    let n = ctx.n();
    let k = Koszul::new(ctx);
    let b = Bar::new(ctx);
    let wedges: Vec<ExtIndex> = (0..=cfg.bounds.max_p.min(n)).flat_map(|p| ExtIndex::all_of_len(n, p)).collect();
    let words: Vec<Word> = (0..=cfg.bounds.max_p)
        .flat_map(|p| bar_words(n, p, cfg.bounds.max_entry_degree))
        .collect();
    let phi_ok = check_all(&wedges, |j| {
        let x = Chain::basis(n, j.len() as i32, *j);
        (b.d(&phi(ctx, *j)) != phi_chain(ctx, &k.d(&x))).then(|| format!("phi is not a chain map on {}", j.dx_string()))
    });
    let psi_phi = || {
        check_all(&wedges, |j| {
            let back = psi_chain_with(cfg, &phi(ctx, *j));
            (back != Chain::basis(n, j.len() as i32, *j)).then(|| format!("psi(phi({})) = {back}", j.dx_string()))
        })
    };
    let psi_ok = || {
        check_all(&words, |w| {
            let x = Chain::basis(n, w.len() as i32, w.clone());
            let lhs = k.d(&psi_with(cfg, w));
            let rhs = psi_chain_with(cfg, &b.d(&x));
            (lhs != rhs).then(|| format!("psi is not a chain map on {x}: d psi = {lhs}, psi d = {rhs}"))
        })
    };
    let lifts = || {
        let mut up = LiftEngine::new(Koszul::new(ctx), Bar::new(ctx)).without_checks();
        let mut down = LiftEngine::new(Bar::new(ctx), Koszul::new(ctx)).without_checks();
        let mut cases = 0;
        for j in &wedges {
            cases += 1;
            match up.lift(j.len() as i32, j) {
                Ok(f) if f == phi(ctx, *j) => {}
                _ => return fail(cases, format!("lifted phi differs on {}", j.dx_string())),
            }
        }
        for w in &words {
            cases += 1;
            match down.lift(w.len() as i32, w) {
                Ok(f) if f == psi_with(cfg, w) => {}
                _ => return fail(cases, format!("lifted psi differs on {}", Chain::basis(n, w.len() as i32, w.clone()))),
            }
        }
        SuiteReport::pass(cases)
    };
    phi_ok.then(psi_ok).then(psi_phi).then(lifts)
}

fn fail(cases: usize, msg: String) -> SuiteReport {
    SuiteReport {
        status: "fail",
        cases,
        counterexample: Some(msg),
    }
}

fn pairs<T: Clone>(bases: &[Vec<T>], max_sum: usize) -> Vec<(T, T)> {
    let mut out = Vec::new();
    for p in 0..bases.len() {
        for q in 0..bases.len() {
            if p + q > max_sum || p + q == 0 {
                continue;
            }
            for x in &bases[p] {
                for y in &bases[q] {
                    out.push((x.clone(), y.clone()));
                }
            }
        }
    }
    out
}

fn sign(e: usize) -> Scalar {
    Scalar::from_int(if e.is_multiple_of(2) { 1 } else { -1 })
}

fn bracket_suite(cfg: &Config) -> SuiteReport {
    let ctx = &cfg.ctx;
    let max = cfg.bounds.max_p.min(ctx.n() + 1);
    let bases: Vec<Vec<KoszulCochain>> = (0..=max.min(ctx.n())).map(|m| hh_basis(ctx, m, cfg.bounds.degree_cap)).collect();
    let items = pairs(&bases, max);
    check_all(&items, |(a, b)| {
        let closed = bracket_closed(ctx, a, b);
        let pipe = bracket_pipeline(ctx, a, b);
        if closed != pipe {
            return Some(format!("[{a}, {b}]: closed {closed}, pipeline {pipe}"));
        }
        let (p, q) = (a.degree(), b.degree());
        let swapped = bracket_closed(ctx, b, a).scale(&sign((p + 1) * (q + 1)).neg());
        if swapped != closed {
            return Some(format!("[{a}, {b}] is not graded antisymmetric"));
        }
        if ctx.is_classical() {
            let s = schouten_classical(ctx, a, b).expect("classical");
            if s != closed {
                return Some(format!("[{a}, {b}]: closed {closed}, Schouten {s}"));
            }
        }
        None
    })
}

/// Cocycles to test the group-extension bracket on: Reynolds images of the
/// `C_g` basis (diagonal), or of unit cocycles `1 ♯ g ⊗ dx_J` otherwise.
fn skew_cocycles(cfg: &Config) -> Vec<Vec<(SkewKoszulCochain, SkewKoszulCochain)>> {
    let ctx = &cfg.ctx;
    let act = &cfg.action;
    let n = ctx.n();
    (0..=cfg.bounds.max_p.min(n))
        .map(|m| {
            let raw: Vec<SkewKoszulCochain> = if act.is_diagonal() {
                hh_skew_basis(ctx, act, m, cfg.bounds.degree_cap).expect("diagonal")
            } else {
                act.elements()
                    .iter()
                    .flat_map(|g| {
                        ExtIndex::all_of_len(n, m).into_iter().map(move |j| SkewKoszulCochain::basis(Monomial::one(n), g.clone(), j))
                    })
                    .collect()
            };
            raw.into_iter()
                .map(|x| {
                    let r = reynolds(ctx, act, &x);
                    (x, r)
                })
                .filter(|(_, r)| !r.is_zero() && skew_diff(ctx, act, r).is_zero())
                .collect()
        })
        .collect()
}

fn skew_suite(cfg: &Config) -> SuiteReport {
    let ctx: &QContext = &cfg.ctx;
    let act = &cfg.action;
    let bases = skew_cocycles(cfg);
    let singles: Vec<(SkewKoszulCochain, SkewKoszulCochain)> = bases.iter().flatten().cloned().collect();
    let max = cfg.bounds.max_p.min(ctx.n() + 1);
    let items = pairs(&bases, max);
    check_all(&singles, |(_, r)| {
        let f = theta(ctx, act, r).ok()?;
        let back = gamma(ctx, act, &f);
        (back != *r).then(|| format!("gamma(theta({r})) = {back}"))
    })
    .then(|| {
        check_all(&items, |((x, rx), (y, ry))| {
            let pipe = match bracket_skew_pipeline(ctx, act, rx, ry) {
                Ok(p) => p,
                Err(e) => return Some(format!("[{rx}, {ry}]: {e}")),
            };
            if act.is_diagonal() {
                let closed = bracket_skew_closed(ctx, act, x, y).expect("diagonal");
                (closed != pipe).then(|| format!("[R({x}), R({y})]: closed {closed}, pipeline {pipe}"))
            } else {
                (!pipe.is_zero()).then(|| format!("[{rx}, {ry}] = {pipe}, expected 0"))
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_passes() {
        let cfg = Config::default();
        for s in Suite::All.members() {
            assert!(run_suite(&cfg, s).passed(), "{}", s.name());
        }
    }

    #[test]
    fn fault_is_detected() {
        let cfg = Config {
            fault: Some(Fault::PsiMu),
            ..Config::default()
        };
        let r = run_suite(&cfg, Suite::Chainmaps);
        assert!(!r.passed());
        assert!(r.counterexample.unwrap().contains("psi"));
    }
}
