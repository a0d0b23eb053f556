//! The JSON configuration file.
//!
//! ```json
//! {
//!   "n": 2,
//!   "q": "symbolic" | "classical" | {"q12": "zeta", "q(1,12)": "-1"},
//!   "cyclotomic_order": 3,
//!   "group": {"orders": [3], "action": "diagonal", "characters": [[1], [2]]},
//!   "bounds": {"degree_cap": 3, "max_p": 3, "max_entry_degree": 2},
//!   "inject_fault": "psi_mu"
//! }
//! ```
//!
//! `characters[i][k]` is the exponent `e` with `chi_i(g_k) = zeta^e`. A
//! monomial action lists, per generator, the image of each `x_i`:
//! `{"orders": [2], "action": "monomial", "generators": [["x2", "x1"]]}`.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::algebra::{ActionSpec, GroupAction, GroupSpec, Monomial, QContext};
use crate::scalar::Cyc;

use super::expr::{parse_polynomial, parse_scalar, Env};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub n: usize,
    #[serde(default)]
    pub q: QSpec,
    #[serde(default = "default_order")]
    pub cyclotomic_order: u32,
    #[serde(default)]
    pub group: Option<GroupFile>,
    #[serde(default)]
    pub bounds: Bounds,
    #[serde(default)]
    pub inject_fault: Option<Fault>,
}

fn default_order() -> u32 {
    1
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum QSpec {
    Mode(String),
    Table(BTreeMap<String, String>),
}

impl Default for QSpec {
    fn default() -> Self {
        QSpec::Mode("symbolic".into())
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub orders: Vec<u32>,
    pub action: String,
    #[serde(default)]
    pub characters: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub generators: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Bounds {
    pub degree_cap: u32,
    pub max_p: usize,
    pub max_entry_degree: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            degree_cap: 3,
            max_p: 3,
            max_entry_degree: 2,
        }
    }
}

/// Deliberate corruptions used to check that the verify suites can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Fault {
    /// Doubles the `Ψ` coefficients of terms with a nontrivial left factor.
    PsiMu,
}

/// A validated configuration.
#[derive(Debug, Clone)]
pub struct Config {
    pub ctx: QContext,
    pub action: GroupAction,
    pub has_group: bool,
    pub bounds: Bounds,
    pub fault: Option<Fault>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            ctx: QContext::symbolic(2, 1).expect("valid"),
            action: GroupAction::trivial(2),
            has_group: false,
            bounds: Bounds::default(),
            fault: None,
        }
    }
}

fn pair_key(key: &str) -> Result<(usize, usize), String> {
    let bad = || format!("bad parameter name '{key}'; use q<i><j> or q(i,j)");
    let body = key.strip_prefix('q').ok_or_else(bad)?;
    let (i, j) = if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)
    } else if body.len() == 2 && body.bytes().all(|c| c.is_ascii_digit()) {
        ((body.as_bytes()[0] - b'0') as usize, (body.as_bytes()[1] - b'0') as usize)
    } else {
        return Err(bad());
    };
    Ok((i, j))
}

impl Config {
    pub fn from_json(text: &str) -> Result<Config, String> {
        let file: ConfigFile = serde_json::from_str(text).map_err(|e| format!("config: {e}"))?;
        Config::from_file(&file)
    }

    pub fn from_file(file: &ConfigFile) -> Result<Config, String> {
        let n = file.n;
        let order = file.cyclotomic_order;
        let ctx = match &file.q {
            QSpec::Mode(m) if m == "symbolic" => QContext::symbolic(n, order),
            QSpec::Mode(m) if m == "classical" => QContext::specialized(n, order, &[]),
            QSpec::Mode(m) => return Err(format!("config: unknown q mode '{m}'")),
            QSpec::Table(table) => {
                let env = Env {
                    n,
                    order,
                    ctx: None,
                    group: None,
                };
                let mut entries = Vec::new();
                for (k, v) in table {
                    let pair = pair_key(k)?;
                    let s = parse_scalar(env, v).map_err(|e| format!("config: {k} = '{v}': {e}"))?;
                    let c = s.as_cyc().ok_or_else(|| format!("config: {k} must be a number"))?;
                    entries.push((pair, c));
                }
                QContext::specialized(n, order, &entries)
            }
        }
        .map_err(|e| format!("config: {e}"))?;
        let (action, has_group) = match &file.group {
            None => (GroupAction::trivial(n), false),
            Some(g) => (build_action(&ctx, g)?, true),
        };
        Ok(Config {
            ctx,
            action,
            has_group,
            bounds: file.bounds,
            fault: file.inject_fault,
        })
    }

    pub fn group(&self) -> Option<&GroupSpec> {
        self.has_group.then(|| self.action.group())
    }

    pub fn env(&self) -> Env<'_> {
        Env::new(&self.ctx, self.group())
    }
}

fn build_action(ctx: &QContext, g: &GroupFile) -> Result<GroupAction, String> {
    let group = GroupSpec::new(g.orders.clone()).map_err(|e| format!("config: {e}"))?;
    let spec = match g.action.as_str() {
        "diagonal" => {
            let chars = g.characters.clone().ok_or("config: diagonal action needs 'characters'")?;
            ActionSpec::Diagonal(chars)
        }
        "monomial" => {
            let gens = g.generators.as_ref().ok_or("config: monomial action needs 'generators'")?;
            let env = Env::new(ctx, None);
            let mut images = Vec::new();
            for gen in gens {
                let mut row = Vec::new();
                for img in gen {
                    row.push(parse_image(env, img)?);
                }
                images.push(row);
            }
            ActionSpec::MonomialMatrix(images)
        }
        other => return Err(format!("config: unknown action type '{other}'")),
    };
    GroupAction::new(ctx, group, &spec).map_err(|e| format!("config: {e}"))
}

/// `c * x_j` with `c` a number.
fn parse_image(env: Env<'_>, text: &str) -> Result<(Cyc, usize), String> {
    let bad = || format!("config: generator image '{text}' must be a multiple of one variable");
    let p = parse_polynomial(env, text).map_err(|e| format!("config: '{text}': {e}"))?;
    let mut terms = p.terms();
    let (m, c) = terms.next().ok_or_else(bad)?;
    if terms.next().is_some() || m.degree() != 1 {
        return Err(bad());
    }
    let j = m.support().next().ok_or_else(bad)?;
    debug_assert_eq!(*m, Monomial::var(env.n, j));
    Ok((c.as_cyc().ok_or_else(bad)?, j))
}
