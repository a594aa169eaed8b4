//! Homomorphisms to symmetric and abelian targets: the family φ_ε, relation
//! checking for arbitrary generator images, the abelianization, the parity
//! characters χ_t and exhaustive enumeration of maps into small `S_m`.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::perms::Perm;
use crate::words::{defining_relations, Generator, Letter, Params, Sign, UVWord};

/// Bits (ε_1, …, ε_{c+1}): σ_{i,t} ↦ (i i+1)^{ε_t}, ρ_i ↦ (i i+1)^{ε_{c+1}}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EpsTuple(Vec<bool>);

impl EpsTuple {
    pub fn new(bits: Vec<bool>) -> Result<EpsTuple> {
        if bits.len() < 2 {
            return Err(Error::Invalid(format!("an ε tuple has c + 1 >= 2 entries, got {}", bits.len())));
        }
        Ok(EpsTuple(bits))
    }

    /// All 2^{c+1} tuples, counting up in binary with ε_1 as the high bit.
    pub fn all(c: usize) -> Vec<EpsTuple> {
        let len = c + 1;
        (0..1u64 << len).map(|mask| EpsTuple((0..len).map(|k| mask >> (len - 1 - k) & 1 == 1).collect())).collect()
    }

    pub fn c(&self) -> usize {
        self.0.len() - 1
    }

    pub fn sigma_bit(&self, t: usize) -> bool {
        self.0[t - 1]
    }

    pub fn rho_bit(&self) -> bool {
        *self.0.last().unwrap()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    /// The `HomSpec` of φ_ε into `S_n`.
    pub fn homspec(&self, n: usize) -> HomSpec {
        let power = |bit: bool, i: usize| if bit { Perm::adjacent(n, i) } else { Perm::identity(n) };
        HomSpec {
            m: n,
            image_sigma: (1..n).map(|i| (1..=self.c()).map(|t| power(self.sigma_bit(t), i)).collect()).collect(),
            image_rho: (1..n).map(|i| power(self.rho_bit(), i)).collect(),
        }
    }
}

impl FromStr for EpsTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<EpsTuple> {
        let bits = s
            .split(',')
            .map(|b| match b.trim() {
                "0" => Ok(false),
                "1" => Ok(true),
                other => Err(Error::Invalid(format!("ε entries are 0 or 1, got `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        EpsTuple::new(bits)
    }
}

impl fmt::Display for EpsTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: Vec<&str> = self.0.iter().map(|&b| if b { "1" } else { "0" }).collect();
        write!(f, "({})", bits.join(","))
    }
}

/// Images of the generators in `S_m`: `image_sigma[i-1][t-1]`, `image_rho[i-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomSpec {
    pub m: usize,
    pub image_sigma: Vec<Vec<Perm>>,
    pub image_rho: Vec<Perm>,
}

impl HomSpec {
    /// Rejects specs whose shape or degrees do not fit `params`.
    pub fn check_shape(&self, params: Params) -> Result<()> {
        let strands = params.n.saturating_sub(1);
        let bad = |msg: String| Err(Error::Invalid(msg));
        if self.image_rho.len() != strands || self.image_sigma.len() != strands {
            return bad(format!("expected {strands} ρ images and {strands} σ rows for {params}"));
        }
        if self.image_sigma.iter().any(|row| row.len() != params.c) {
            return bad(format!("every σ row needs c = {} images", params.c));
        }
        if self.image_rho.iter().chain(self.image_sigma.iter().flatten()).any(|p| p.degree() != self.m) {
            return bad(format!("all images must lie in S_{}", self.m));
        }
        Ok(())
    }

    pub fn image(&self, g: Generator) -> &Perm {
        match g {
            Generator::Rho(i) => &self.image_rho[i - 1],
            Generator::Sigma(i, t) => &self.image_sigma[i - 1][t - 1],
        }
    }

    pub fn eval_letters(&self, letters: &[Letter]) -> Perm {
        letters.iter().fold(Perm::identity(self.m), |acc, &letter| {
            let img = self.image(letter.generator());
            match letter {
                Letter::Sigma { sign: Sign::Neg, .. } => acc.mul(&img.inverse()),
                _ => acc.mul(img),
            }
        })
    }

    pub fn evaluate(&self, w: &UVWord) -> Result<Perm> {
        self.check_shape(w.params())?;
        Ok(self.eval_letters(w.letters()))
    }

    /// True when all generator images pairwise commute.
    pub fn has_abelian_image(&self) -> bool {
        let images: Vec<&Perm> = self.image_rho.iter().chain(self.image_sigma.iter().flatten()).collect();
        images.iter().enumerate().all(|(k, a)| images[k + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Generator images in generator order; the sort key for enumeration output.
    fn key(&self, params: Params) -> Vec<&Perm> {
        params.generators().into_iter().map(|g| self.image(g)).collect()
    }
}

/// Outcome of checking every defining relation under a `HomSpec`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub ok: bool,
    pub failing_relation: Option<String>,
}

pub fn verify_homspec(h: &HomSpec, params: Params) -> Result<Verification> {
    h.check_shape(params)?;
    let failing = defining_relations(params).into_iter().find(|rel| !h.eval_letters(&rel.relator()).is_identity());
    Ok(Verification { ok: failing.is_none(), failing_relation: failing.map(|r| r.label()) })
}

/// φ_ε evaluated on `w`.
pub fn phi_eps(e: &EpsTuple, w: &UVWord) -> Result<Perm> {
    let params = w.params();
    if e.c() != params.c {
        return Err(Error::Mismatch(format!("ε tuple for c = {} applied to a word over {params}", e.c())));
    }
    if params.n < 2 {
        return Err(Error::InvalidParams("φ_ε needs n >= 2".into()));
    }
    e.homspec(params.n).evaluate(w)
}

/// Whether φ_ε is a homomorphism onto a non-abelian subgroup of `S_n`,
/// decided by evaluating every relator and testing commutation of the
/// generator images.
pub fn is_admissible(e: &EpsTuple, n: usize) -> Result<bool> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("admissibility is defined for n >= 3, got n = {n}")));
    }
    let params = Params::new(n, e.c())?;
    let spec = e.homspec(n);
    Ok(verify_homspec(&spec, params)?.ok && !spec.has_abelian_image())
}

/// Image in `Z^c ⊕ Z/2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AbelImage {
    pub sigma_exponents: Vec<i64>,
    pub rho_parity: u8,
}

impl AbelImage {
    pub fn is_zero(&self) -> bool {
        self.rho_parity == 0 && self.sigma_exponents.iter().all(|&e| e == 0)
    }
}

pub fn abelianize(w: &UVWord) -> AbelImage {
    let mut sigma_exponents = vec![0i64; w.params().c];
    let mut rho_parity = 0u8;
    for letter in w.letters() {
        match *letter {
            Letter::Rho(_) => rho_parity ^= 1,
            Letter::Sigma { t, sign, .. } => sigma_exponents[t - 1] += sign.as_i64(),
        }
    }
    AbelImage { sigma_exponents, rho_parity }
}

/// χ_t: parity of the colour-t exponent sum.
pub fn chi_t(t: usize, w: &UVWord) -> Result<u8> {
    let c = w.params().c;
    if t == 0 || t > c {
        return Err(Error::Invalid(format!("crossing type {t} outside 1..={c}")));
    }
    Ok(abelianize(w).sigma_exponents[t - 1].rem_euclid(2) as u8)
}

/// Node and wall-clock limits for [`enumerate_homs`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: 50_000_000, max_time: Duration::from_secs(300) }
    }
}

// a relator as (generator position, inverted) pairs
type CompiledRelator = Vec<(usize, bool)>;

struct Plan {
    gen_count: usize,
    // relators whose last generator (in generator order) sits at each position
    closing: Vec<Vec<CompiledRelator>>,
    candidates: Vec<Perm>,
    m: usize,
}

impl Plan {
    fn new(params: Params, m: usize) -> Plan {
        let gens = params.generators();
        let pos = |g: Generator| gens.iter().position(|&h| h == g).unwrap();
        let mut closing = vec![Vec::new(); gens.len()];
        for rel in defining_relations(params) {
            let compiled: CompiledRelator = rel
                .relator()
                .iter()
                .map(|l| (pos(l.generator()), matches!(l, Letter::Sigma { sign: Sign::Neg, .. })))
                .collect();
            let last = compiled.iter().map(|&(p, _)| p).max().unwrap();
            closing[last].push(compiled);
        }
        Plan { gen_count: gens.len(), closing, candidates: Perm::all(m), m }
    }

    fn holds(&self, assigned: &[Perm], rel: &CompiledRelator) -> bool {
        rel.iter()
            .fold(
                Perm::identity(self.m),
                |acc, &(p, inv)| {
                    if inv {
                        acc.mul(&assigned[p].inverse())
                    } else {
                        acc.mul(&assigned[p])
                    }
                },
            )
            .is_identity()
    }
}

struct Limits<'a> {
    budget: Budget,
    start: Instant,
    nodes: &'a AtomicU64,
    aborted: &'a AtomicBool,
}

impl Limits<'_> {
    fn tick(&self) -> bool {
        let nodes = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if nodes > self.budget.max_nodes || (nodes.is_multiple_of(4096) && self.start.elapsed() > self.budget.max_time)
        {
            self.aborted.store(true, Ordering::Relaxed);
        }
        !self.aborted.load(Ordering::Relaxed)
    }
}

fn extend(plan: &Plan, assigned: &mut Vec<Perm>, stop_at: usize, limits: &Limits, out: &mut Vec<Vec<Perm>>) {
    let k = assigned.len();
    if k == stop_at {
        out.push(assigned.clone());
        return;
    }
    for cand in &plan.candidates {
        if !limits.tick() {
            return;
        }
        assigned.push(cand.clone());
        if plan.closing[k].iter().all(|rel| plan.holds(assigned, rel)) {
            extend(plan, assigned, stop_at, limits, out);
        }
        assigned.pop();
    }
}

/// Every homomorphism `UV_n(c) → S_m` (not up to conjugacy), by
/// backtracking over generator images with relators checked as soon as all
/// their generators are assigned. ρ images are fixed first; the branches
/// below distinct ρ assignments are independent tasks.
pub fn enumerate_homs(params: Params, m: usize, budget: Budget, exec: Execution) -> Result<Vec<HomSpec>> {
    if m == 0 {
        return Err(Error::InvalidParams("target degree m must be >= 1".into()));
    }
    let plan = Plan::new(params, m);
    let rho_count = params.n.saturating_sub(1);
    let nodes = AtomicU64::new(0);
    let aborted = AtomicBool::new(false);
    let limits = Limits { budget, start: Instant::now(), nodes: &nodes, aborted: &aborted };

    let mut rho_branches = Vec::new();
    extend(&plan, &mut Vec::new(), rho_count, &limits, &mut rho_branches);
    let full: Vec<Vec<Perm>> = exec.flat_map(&rho_branches, |prefix| {
        let mut out = Vec::new();
        extend(&plan, &mut prefix.clone(), plan.gen_count, &limits, &mut out);
        out
    });

    let mut homs: Vec<HomSpec> = full
        .into_iter()
        .map(|images| {
            let strands = params.n.saturating_sub(1);
            let mut image_sigma = vec![Vec::with_capacity(params.c); strands];
            for (g, img) in params.generators().iter().zip(&images).skip(strands) {
                if let Generator::Sigma(i, _) = *g {
                    image_sigma[i - 1].push(img.clone());
                }
            }
            HomSpec { m, image_sigma, image_rho: images[..strands].to_vec() }
        })
        .collect();
    if aborted.load(Ordering::Relaxed) {
        return Err(Error::BudgetExceeded { nodes: nodes.load(Ordering::Relaxed), found: homs.len() });
    }
    homs.sort_by(|a, b| a.key(params).cmp(&b.key(params)));
    Ok(homs)
}
