use std::fmt::Write as _;
use std::time::Duration;

use serde_json::{json, Value};
use uvbraid::claims::{run_all, ClaimConfig};
use uvbraid::homs::{
    abelianize, chi_t, enumerate_homs, is_admissible, phi_eps, verify_homspec, Budget, EpsTuple, HomSpec,
};
use uvbraid::oracle::{bfs_equal_with, OracleBudget, Verdict};
use uvbraid::perms::{iota, pi_k, pi_p};
use uvbraid::quotients::{quotient_order, FiniteQuotient};
use uvbraid::raag::{
    build_graph, clique_number_with, dominating_vertices, f2xf2_witness, is_p3_free, maximum_clique_with, CommGraph,
};
use uvbraid::semidirect::is_pure;
use uvbraid::{Execution, Params, UVNormalForm, UVWord, WordProblem, SCHEMA_VERSION};

use crate::Global;

pub struct Output {
    pub json: Value,
    pub text: String,
    pub code: u8,
}

type Res = Result<Output, String>;

fn output(mut json: Value, text: String) -> Res {
    if let Value::Object(map) = &mut json {
        map.insert("schema".into(), json!(SCHEMA_VERSION));
    }
    Ok(Output { json, text, code: 0 })
}

fn err(e: uvbraid::Error) -> String {
    e.to_string()
}

impl Global {
    fn params(&self) -> Result<Params, String> {
        let n = self.n.ok_or("--n is required")?;
        let c = self.c.ok_or("--c is required")?;
        Params::new(n, c).map_err(err)
    }

    fn exec(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        }
    }

    fn word(&self) -> Result<UVWord, String> {
        let text = self.word.as_deref().ok_or("--word is required")?;
        UVWord::parse(text, self.params()?).map_err(err)
    }

    fn graph(&self) -> Result<CommGraph, String> {
        build_graph(self.params()?).map_err(err)
    }
}

fn nf_text(nf: &UVNormalForm) -> String {
    let delta = if nf.delta_nf.is_empty() { "1".to_string() } else { nf.delta_nf.to_string() };
    format!("{delta} | {}", nf.perm)
}

pub fn nf(g: &Global) -> Res {
    let w = g.word()?;
    let nf = WordProblem::new(w.params()).to_normal_form(&w).map_err(err)?;
    output(serde_json::to_value(&nf).unwrap(), format!("{}\n", nf_text(&nf)))
}

pub fn eq(g: &Global, u: &str, v: &str) -> Res {
    let p = g.params()?;
    let u = UVWord::parse(u, p).map_err(err)?;
    let v = UVWord::parse(v, p).map_err(err)?;
    let wp = WordProblem::new(p);
    let (nu, nv) = (wp.to_normal_form(&u).map_err(err)?, wp.to_normal_form(&v).map_err(err)?);
    let equal = nu == nv;
    output(
        json!({"equal": equal, "nf_u": nu, "nf_v": nv}),
        format!("equal: {equal}\nu: {}\nv: {}\n", nf_text(&nu), nf_text(&nv)),
    )
}

pub fn trivial(g: &Global) -> Res {
    let w = g.word()?;
    let nf = WordProblem::new(w.params()).to_normal_form(&w).map_err(err)?;
    let trivial = nf.is_identity();
    output(json!({"trivial": trivial, "nf": nf}), format!("trivial: {trivial}\nnf: {}\n", nf_text(&nf)))
}

pub fn pure(g: &Global) -> Res {
    let w = g.word()?;
    let nf = WordProblem::new(w.params()).to_normal_form(&w).map_err(err)?;
    let pure = is_pure(&w);
    let image = pi_p(&w);
    output(
        json!({"pure": pure, "pi_p": image, "nf": nf}),
        format!("pure: {pure}\npi_P: {image}\nnf: {}\n", nf_text(&nf)),
    )
}

pub fn perm(g: &Global) -> Res {
    let w = g.word()?;
    let (k, p) = (pi_k(&w), pi_p(&w));
    let section = iota(&k, w.params()).map_err(err)?;
    output(
        json!({"pi_k": k, "pi_p": p, "iota_pi_k": section.to_string()}),
        format!("pi_K: {k}\npi_P: {p}\niota(pi_K): {section}\n"),
    )
}

pub fn graph_dot(g: &Global) -> Res {
    let dot = g.graph()?.to_dot();
    output(json!({"dot": dot}), dot)
}

pub fn graph_stats(g: &Global) -> Res {
    let graph = g.graph()?;
    let omega = clique_number_with(&graph, g.exec());
    let (p3_free, _) = is_p3_free(&graph);
    let square = f2xf2_witness(&graph).is_some();
    let (v, e) = (graph.vertex_count(), graph.edge_count());
    output(
        json!({"vertices": v, "edges": e, "clique_number": omega, "p3_free": p3_free, "induced_square": square}),
        format!("vertices: {v}\nedges: {e}\nclique number: {omega}\nP3-free: {p3_free}\ninduced square: {square}\n"),
    )
}

pub fn vcd(g: &Global) -> Res {
    let graph = g.graph()?;
    let omega = clique_number_with(&graph, g.exec());
    let clique = maximum_clique_with(&graph, g.exec());
    let labels: Vec<String> = clique.iter().map(ToString::to_string).collect();
    output(
        json!({"clique_number": omega, "vcd": omega, "maximum_clique": clique}),
        format!("clique number: {omega}\nvcd: {omega}\nmaximum clique: {}\n", labels.join(" ")),
    )
}

pub fn howson(g: &Global) -> Res {
    let graph = g.graph()?;
    let (p3_free, witness) = is_p3_free(&graph);
    let mut text = format!("howson: {p3_free}\n");
    if let Some(w) = witness {
        writeln!(text, "induced path: {} - {} - {}", w.0, w.1, w.2).unwrap();
    }
    output(json!({"howson": p3_free, "p3_witness": witness.map(|w| [w.0, w.1, w.2])}), text)
}

pub fn lerf_witness(g: &Global) -> Res {
    let graph = g.graph()?;
    let witness = f2xf2_witness(&graph);
    let text = match &witness {
        Some(q) => format!("induced square: {} {} | {} {}\n", q.x1, q.x2, q.y1, q.y2),
        None => "no induced square\n".to_string(),
    };
    output(json!({"subgroup_separable": witness.is_none(), "f2xf2_witness": witness}), text)
}

pub fn center_witness(g: &Global) -> Res {
    let graph = g.graph()?;
    let p = graph.params();
    let dominating = dominating_vertices(&graph);
    let mut json = json!({"dominating_vertices": dominating, "kuv_centre_trivial": dominating.is_empty()});
    let mut text = format!("dominating vertices: {}\n", dominating.len());
    if p.n >= 3 {
        // ρ_1 and σ_{1,1} do not commute, so neither is central
        let u = UVWord::parse("r1 s1.1", p).map_err(err)?;
        let v = UVWord::parse("s1.1 r1", p).map_err(err)?;
        let equal = WordProblem::new(p).are_equal(&u, &v).map_err(err)?;
        json["noncommuting_pair"] = json!({"u": u.to_string(), "v": v.to_string(), "equal": equal});
        writeln!(text, "{u} = {v}: {equal}").unwrap();
    }
    output(json, text)
}

fn verification_json(spec: &HomSpec, p: Params) -> Result<(Value, String), String> {
    let v = verify_homspec(spec, p).map_err(err)?;
    let abelian = spec.has_abelian_image();
    let mut text = format!("homomorphism: {}\n", v.ok);
    if let Some(rel) = &v.failing_relation {
        writeln!(text, "fails: {rel}").unwrap();
    }
    writeln!(text, "abelian image: {abelian}").unwrap();
    Ok((json!({"homomorphism": v.ok, "failing_relation": v.failing_relation, "abelian_image": abelian}), text))
}

pub fn hom_check(g: &Global, file: Option<&str>) -> Res {
    let p = g.params()?;
    let raw = match file {
        Some(path) if path != "-" => std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?,
        _ => std::io::read_to_string(std::io::stdin()).map_err(|e| format!("stdin: {e}"))?,
    };
    let spec: HomSpec = serde_json::from_str(&raw).map_err(|e| format!("invalid HomSpec JSON: {e}"))?;
    let (json, text) = verification_json(&spec, p)?;
    output(json, text)
}

pub fn hom_phi(g: &Global) -> Res {
    let p = g.params()?;
    let e: EpsTuple = g.eps.as_deref().ok_or("--eps is required")?.parse().map_err(err)?;
    if e.c() != p.c {
        return Err(format!("--eps needs c + 1 = {} entries, got {}", p.c + 1, e.bits().len()));
    }
    let spec = e.homspec(p.n);
    let (mut json, mut text) = verification_json(&spec, p)?;
    let admissible = if p.n >= 3 { Some(is_admissible(&e, p.n).map_err(err)?) } else { None };
    json["eps"] = json!(e.to_string());
    json["homspec"] = serde_json::to_value(&spec).unwrap();
    json["admissible"] = json!(admissible);
    if let Some(a) = admissible {
        writeln!(text, "admissible: {a}").unwrap();
    }
    if g.word.is_some() {
        let image = phi_eps(&e, &g.word()?).map_err(err)?;
        writeln!(text, "image: {image}").unwrap();
        json["image"] = json!(image);
    }
    output(json, text)
}

pub fn hom_enumerate(g: &Global, max_nodes: u64, max_seconds: u64) -> Res {
    let p = g.params()?;
    let m = g.m.ok_or("--m is required")?;
    let budget = Budget { max_nodes, max_time: Duration::from_secs(max_seconds) };
    let homs = enumerate_homs(p, m, budget, g.exec()).map_err(err)?;
    let non_abelian = homs.iter().filter(|h| !h.has_abelian_image()).count();
    output(
        json!({"m": m, "count": homs.len(), "non_abelian": non_abelian, "homs": homs}),
        format!("homomorphisms into S_{m}: {}\nnon-abelian images: {non_abelian}\n", homs.len()),
    )
}

pub fn ab(g: &Global) -> Res {
    let a = abelianize(&g.word()?);
    let exps: Vec<String> = a.sigma_exponents.iter().map(ToString::to_string).collect();
    let text = format!("({}; {})\n", exps.join(", "), a.rho_parity);
    output(serde_json::to_value(&a).unwrap(), text)
}

pub fn chi(g: &Global) -> Res {
    let t = g.t.ok_or("--t is required")?;
    let value = chi_t(t, &g.word()?).map_err(err)?;
    output(json!({"t": t, "chi": value}), format!("{value}\n"))
}

fn quotient(g: &Global) -> Result<(Params, u64), String> {
    let p = g.params()?;
    let d = g.d.ok_or("--d is required")?;
    if d < 2 {
        return Err(format!("--d must be at least 2, got {d}"));
    }
    Ok((p, d))
}

// a number when it fits in u64, a decimal string otherwise
fn big_json(x: &str) -> Value {
    match x.parse::<u64>() {
        Ok(v) => json!(v),
        Err(_) => json!(x),
    }
}

pub fn quot_eval(g: &Global) -> Res {
    let (p, d) = quotient(g)?;
    let q = FiniteQuotient::new(p, d).map_err(err)?;
    let image = q.theta(&g.word()?).map_err(err)?;
    let order = q.order().map(|o| o.to_string()).unwrap_or_default();
    output(
        json!({"d": d, "vec": image.vec, "perm": image.perm, "order": big_json(&order)}),
        format!("vec: {:?}\nperm: {}\norder: {order}\n", image.vec, image.perm),
    )
}

pub fn quot_order(g: &Global) -> Res {
    let (p, d) = quotient(g)?;
    let q = quotient_order(p, d).map_err(err)?;
    let (order, nfact) = (q.order.to_string(), q.n_factorial.to_string());
    let exceeds = q.exceeds_n_factorial();
    let onto = q.certificate.is_some();
    output(
        json!({
            "d": d,
            "order": big_json(&order),
            "n_factorial": big_json(&nfact),
            "exceeds_n_factorial": exceeds,
            "surjective": onto,
            "certificate": q.certificate,
        }),
        format!("order: {order}\nn!: {nfact}\nexceeds n!: {exceeds}\nsurjective: {onto}\n"),
    )
}

pub fn oracle_eq(g: &Global, u: &str, v: &str) -> Res {
    let p = g.params()?;
    let u = UVWord::parse(u, p).map_err(err)?;
    let v = UVWord::parse(v, p).map_err(err)?;
    let defaults = OracleBudget::default();
    let budget = OracleBudget {
        max_depth: g.depth.unwrap_or(defaults.max_depth),
        max_width: g.width.unwrap_or(defaults.max_width),
        ..defaults
    };
    let r = bfs_equal_with(&u, &v, budget, g.exec()).map_err(err)?;
    let verdict = match r.verdict {
        Verdict::ProvenEqual => "proven equal",
        Verdict::Unknown => "unknown",
    };
    let steps = r.path.as_ref().map_or(0, Vec::len);
    output(serde_json::to_value(&r).unwrap(), format!("verdict: {verdict}\nsteps: {steps}\nexplored: {}\n", r.explored))
}

pub fn verify_paper(g: &Global) -> Res {
    let cfg = ClaimConfig { seed: g.seed.unwrap_or(ClaimConfig::default().seed), exec: g.exec() };
    let reports = run_all(&cfg);
    let passed = reports.iter().all(|r| r.passed);
    let mut text = String::new();
    for r in &reports {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        writeln!(text, "[{tag}] {:>2} {} ({} ms)\n     {}", r.id, r.claim, r.millis, r.detail).unwrap();
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    writeln!(text, "{} of {} claims hold", reports.len() - failed, reports.len()).unwrap();
    let mut out = output(json!({"seed": cfg.seed, "passed": passed, "claims": reports}), text)?;
    out.code = if passed { 0 } else { 1 };
    Ok(out)
}
