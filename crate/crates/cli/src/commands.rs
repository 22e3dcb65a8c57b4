use std::fmt::Write as _;

use minplus::io::{matrix_to_json, Input};
use minplus::{
    charpoly_flv, charpoly_tropdet, coefficient_check, eigenvalue_from_charpoly,
    enumerate_circuits, min_cycle_mean, separated_check, tropdet_assignment, tropdet_bruteforce,
    verify_corollary_equivalence, verify_separated_factorization, Caps, MinPlus, MinPlusMatrix,
    MinPlusPolynomial, Network, Rational, Report,
};
use serde_json::{json, Value};

use crate::{Failure, Method};

/// One command's result in every output format, plus whether the run
/// should exit cleanly.
pub struct Rendered {
    pub json: Value,
    pub text: String,
    pub tsv: String,
    pub ok: bool,
}

fn show(v: &MinPlus) -> String {
    v.to_string()
}

fn show_q(q: &Rational) -> String {
    MinPlus::Finite(q.clone()).to_string()
}

fn joined(coeffs: &[MinPlus]) -> String {
    coeffs.iter().map(show).collect::<Vec<_>>().join(" ")
}

fn bad_method(command: &str, method: Method, allowed: &str) -> Failure {
    let name = format!("{method:?}").to_lowercase();
    Failure::Input(format!("{command} does not take --method {name} (use {allowed})"))
}

fn require_matrix<'a>(input: &'a Input, command: &str) -> Result<&'a MinPlusMatrix, Failure> {
    match input {
        Input::Matrix(a) => Ok(a),
        Input::Polynomial(_) => Err(Failure::Input(format!("{command} needs a matrix input"))),
    }
}

/// The polynomials a command works on: `g_A`, `ĝ_A` or both for a matrix,
/// the file's own polynomial otherwise.
fn polynomials(
    input: &Input,
    command: &str,
    method: Option<Method>,
    default: Method,
    caps: &Caps,
) -> Result<Vec<(&'static str, MinPlusPolynomial)>, Failure> {
    let a = match input {
        Input::Polynomial(p) => {
            if let Some(m) = method {
                return Err(bad_method(command, m, "no method with a polynomial input"));
            }
            return Ok(vec![("input", p.clone())]);
        }
        Input::Matrix(a) => a,
    };
    let method = method.unwrap_or(default);
    let (tropdet, flv) = match method {
        Method::Tropdet => (true, false),
        Method::Flv => (false, true),
        Method::Both => (true, true),
        other => return Err(bad_method(command, other, "tropdet, flv or both")),
    };
    let mut out = Vec::new();
    if tropdet {
        out.push(("tropdet", charpoly_tropdet(a, caps.subsets)?));
    }
    if flv {
        out.push(("flv", charpoly_flv(a)));
    }
    Ok(out)
}

pub fn charpoly(
    input: &Input,
    method: Option<Method>,
    canonical: bool,
    caps: &Caps,
) -> Result<Rendered, Failure> {
    require_matrix(input, "charpoly")?;
    let polys = polynomials(input, "charpoly", method, Method::Both, caps)?;
    let mut json = Vec::new();
    let mut text = String::new();
    let mut tsv = String::from("method\tform\tj\tcoefficient\n");
    for (name, p) in &polys {
        let mut entry = json!({
            "method": name,
            "polynomial": p.to_string(),
            "degree": p.degree(),
            "coeffs": p.coeffs(),
        });
        writeln!(text, "{name}: {p}").unwrap();
        writeln!(text, "  coefficients: {}", joined(p.coeffs())).unwrap();
        let mut forms = vec![("raw", p.clone())];
        if canonical {
            let c = p.canonicalize()?;
            writeln!(text, "  canonical: {}", joined(c.coeffs())).unwrap();
            entry["canonical"] = json!(c.coeffs());
            forms.push(("canonical", c));
        }
        for (form, q) in forms {
            for (j, c) in q.coeffs().iter().enumerate() {
                writeln!(tsv, "{name}\t{form}\t{j}\t{}", show(c)).unwrap();
            }
        }
        json.push(entry);
    }
    Ok(Rendered { json: Value::Array(json), text, tsv, ok: true })
}

pub fn factor(input: &Input, method: Option<Method>, caps: &Caps) -> Result<Rendered, Failure> {
    let polys = polynomials(input, "factor", method, Method::Both, caps)?;
    let mut json = Vec::new();
    let mut text = String::new();
    let mut tsv = String::from("method\troot\tmultiplicity\n");
    for (name, p) in &polys {
        let f = p.factorize()?;
        writeln!(text, "{name}: {f}").unwrap();
        for (r, m) in f.factors() {
            writeln!(tsv, "{name}\t{}\t{m}", show_q(r)).unwrap();
        }
        if f.xpower() > 0 {
            writeln!(tsv, "{name}\tinf\t{}", f.xpower()).unwrap();
        }
        json.push(json!({
            "method": name,
            "factorization": f.to_string(),
            "factors": f,
        }));
    }
    Ok(Rendered { json: Value::Array(json), text, tsv, ok: true })
}

pub fn roots(input: &Input, method: Option<Method>, caps: &Caps) -> Result<Rendered, Failure> {
    let polys = polynomials(input, "roots", method, Method::Both, caps)?;
    let mut json = Vec::new();
    let mut text = String::new();
    let mut tsv = String::from("method\tindex\troot\n");
    for (name, p) in &polys {
        let f = p.factorize()?;
        let all: Vec<MinPlus> = f
            .factors()
            .iter()
            .flat_map(|(r, m)| std::iter::repeat_n(MinPlus::Finite(r.clone()), *m))
            .chain(std::iter::repeat_n(MinPlus::Epsilon, f.xpower()))
            .collect();
        writeln!(text, "{name}: {} (minimum {})", joined(&all), show(&f.min_root())).unwrap();
        for (i, r) in all.iter().enumerate() {
            writeln!(tsv, "{name}\t{}\t{}", i + 1, show(r)).unwrap();
        }
        json.push(json!({ "method": name, "roots": all, "min_root": f.min_root() }));
    }
    Ok(Rendered { json: Value::Array(json), text, tsv, ok: true })
}

pub fn eigenvalue(input: &Input, method: Option<Method>, caps: &Caps) -> Result<Rendered, Failure> {
    let a = require_matrix(input, "eigenvalue")?;
    let method = method.unwrap_or(Method::All);
    let wanted: &[&str] = match method {
        Method::Karp => &["karp"],
        Method::Tropdet => &["tropdet"],
        Method::Flv => &["flv"],
        Method::All => &["karp", "tropdet", "flv"],
        Method::Both => return Err(bad_method("eigenvalue", method, "karp, tropdet, flv or all")),
    };
    let mut values = Vec::new();
    for &name in wanted {
        let v = match name {
            "karp" => min_cycle_mean(&Network::from_matrix(a)),
            "tropdet" => eigenvalue_from_charpoly(&charpoly_tropdet(a, caps.subsets)?)?,
            _ => eigenvalue_from_charpoly(&charpoly_flv(a))?,
        };
        values.push((name, v));
    }
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    let mut text = String::new();
    let mut tsv = String::from("method\teigenvalue\n");
    for (name, v) in &values {
        writeln!(text, "{name}: {}", show(v)).unwrap();
        writeln!(tsv, "{name}\t{}", show(v)).unwrap();
    }
    let mut json = json!({
        "eigenvalues": values
            .iter()
            .map(|(name, v)| json!({ "method": name, "eigenvalue": v }))
            .collect::<Vec<_>>(),
    });
    if method == Method::All {
        writeln!(text, "agree: {agree}").unwrap();
        writeln!(tsv, "agree\t{agree}").unwrap();
        json["agree"] = json!(agree);
    }
    Ok(Rendered { json, text, tsv, ok: agree })
}

pub fn circuits(input: &Input, method: Option<Method>, caps: &Caps) -> Result<Rendered, Failure> {
    let a = require_matrix(input, "circuits")?;
    if let Some(m) = method {
        return Err(bad_method("circuits", m, "no method"));
    }
    let net = Network::from_matrix(a);
    let found = enumerate_circuits(&net, caps.circuits)?;
    let separated = separated_check(&net, caps.circuits)?;
    let mean = min_cycle_mean(&net);
    let mut text = String::new();
    let mut tsv = String::from("index\tvertices\tlength\tweight\taverage\n");
    for (i, c) in found.iter().enumerate() {
        writeln!(text, "{c}").unwrap();
        let vs: Vec<String> = c.vertices().iter().map(|v| (v + 1).to_string()).collect();
        writeln!(
            tsv,
            "{}\t{}\t{}\t{}\t{}",
            i + 1,
            vs.join(" "),
            c.length(),
            show_q(c.weight()),
            show_q(&c.average())
        )
        .unwrap();
    }
    writeln!(text, "circuits: {}", found.len()).unwrap();
    writeln!(text, "separated: {separated}").unwrap();
    writeln!(text, "minimum cycle mean: {}", show(&mean)).unwrap();
    let json = json!({
        "circuits": found,
        "separated": separated,
        "min_cycle_mean": mean,
    });
    Ok(Rendered { json, text, tsv, ok: true })
}

fn determinant_check(a: &MinPlusMatrix, caps: &Caps) -> Result<Report<Value>, Failure> {
    let brute = tropdet_bruteforce(a, caps.perms)?;
    let assignment = tropdet_assignment(a);
    Ok(Report {
        check: "determinant",
        hypothesis_met: true,
        pass: brute == assignment,
        details: json!({ "permutations": brute, "assignment": assignment }),
    })
}

fn summary<D: serde::Serialize>(r: &Report<D>) -> (Value, String, String) {
    let verdict = if r.pass { "pass" } else { "FAIL" };
    let hypothesis = if r.hypothesis_met { "hypothesis met" } else { "hypothesis not met" };
    (
        serde_json::to_value(r).expect("reports serialize"),
        format!("{}: {verdict} ({hypothesis})\n", r.check),
        format!("{}\t{}\t{}\n", r.check, r.hypothesis_met, r.pass),
    )
}

pub fn verify(input: &Input, method: Option<Method>, caps: &Caps) -> Result<Rendered, Failure> {
    let a = require_matrix(input, "verify")?;
    if let Some(m) = method {
        return Err(bad_method("verify", m, "no method"));
    }
    let separated = separated_check(&Network::from_matrix(a), caps.circuits)?;
    let det = determinant_check(a, caps)?;
    let coeffs = coefficient_check(a, caps)?;
    let fact = verify_separated_factorization(a, caps)?;
    let corollary = verify_corollary_equivalence(a, caps)?;
    let pass = det.pass && coeffs.pass && fact.pass && corollary.pass;

    let mut text = format!("separated: {separated}\n");
    let mut tsv = String::from("check\thypothesis_met\tpass\n");
    let mut checks = Vec::new();
    for (j, t, s) in [summary(&det), summary(&coeffs), summary(&fact), summary(&corollary)] {
        checks.push(j);
        text += &t;
        tsv += &s;
    }
    if let (Some(p), Some(c)) = (&fact.details.predicted, &fact.details.computed) {
        writeln!(text, "  predicted: {p}").unwrap();
        writeln!(text, "  computed:  {c}").unwrap();
    }
    writeln!(text, "  tropdet: {}", corollary.details.tropdet_factors).unwrap();
    writeln!(text, "  flv:     {}", corollary.details.flv_factors).unwrap();
    writeln!(text, "overall: {}", if pass { "pass" } else { "FAIL" }).unwrap();
    writeln!(tsv, "overall\ttrue\t{pass}").unwrap();
    let json = json!({
        "matrix": matrix_to_json(a),
        "separated": separated,
        "checks": checks,
        "pass": pass,
    });
    Ok(Rendered { json, text, tsv, ok: pass })
}

pub fn plot_data(input: &Input, method: Option<Method>, caps: &Caps) -> Result<Rendered, Failure> {
    let polys = polynomials(input, "plot-data", method, Method::Tropdet, caps)?;
    let mut json = Vec::new();
    let mut text = String::new();
    let mut tsv = String::from("method\tkind\tx\ty\n");
    for (name, p) in &polys {
        let breaks = p.breakpoints();
        let points = p.plot_points();
        writeln!(text, "{name}: {p}").unwrap();
        let last = points.len().saturating_sub(1);
        for (i, (x, y)) in points.iter().enumerate() {
            let kind = if i == 0 || i == last { "anchor" } else { "breakpoint" };
            writeln!(text, "  {kind} {} {}", show_q(x), show_q(y)).unwrap();
            writeln!(tsv, "{name}\t{kind}\t{}\t{}", show_q(x), show_q(y)).unwrap();
        }
        let pairs: Vec<[MinPlus; 2]> = points
            .iter()
            .map(|(x, y)| [MinPlus::Finite(x.clone()), MinPlus::Finite(y.clone())])
            .collect();
        json.push(json!({ "method": name, "breakpoints": breaks, "points": pairs }));
    }
    Ok(Rendered { json: Value::Array(json), text, tsv, ok: true })
}
