use std::path::Path;

use serde_json::{json, Value};

use borel_core::duality::{dual, dual_via_intersection, verify_double_dual};
use borel_core::fixture::{check_fixture, parse_fixture, PD1, PD2};
use borel_core::json::{
    betti_to_entries, complex_from_json, complex_to_json, module_from_json, module_to_json,
    IdealJson,
};
use borel_core::monomial::{degree_map, parse_monomial};
use borel_core::oracle::{box_involution, duality_complement};
use borel_core::resolution::{
    ek_betti_closed_form, ek_resolution_sst, koszul_shift_resolution, minimal_shift_resolution,
    KoszulMode, ShiftComplex,
};
use borel_core::sample::{random_ideals, IdealShape};
use borel_core::shift_module::{dual_module, expand, from_sst_ideal};
use borel_core::ulex::{ulex, UlexMode, UlexSide};
use borel_core::{
    Alphabet, Error, Field, FieldConfig, FiniteBox, IsotoneMap, PrimeField, RationalField, SstIdeal,
};

use crate::cli::{
    Cli, Command, Engine, IdealInput, IsotoneOp, OracleOp, ResolveArgs, ShiftmodOp, Side,
};

/// What a verb produced. `ok` is false when a check it ran failed.
pub struct Report {
    pub text: String,
    pub json: String,
    pub ok: bool,
}

impl Report {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Self::check(text, json, true)
    }

    fn check(text: impl Into<String>, json: Value, ok: bool) -> Self {
        Self {
            text: text.into(),
            json: json.to_string(),
            ok,
        }
    }

    /// A report whose JSON is already serialized by the core library.
    fn raw(text: impl Into<String>, json: String) -> Self {
        Self {
            text: text.into(),
            json,
            ok: true,
        }
    }
}

type Result<T> = std::result::Result<T, Error>;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn read_source(s: &str) -> Result<String> {
    if Path::new(s).is_file() {
        std::fs::read_to_string(s).map_err(|e| invalid(format!("cannot read {s}: {e}")))
    } else {
        Ok(s.to_string())
    }
}

fn parse_ideal(s: &str) -> Result<SstIdeal> {
    let text = read_source(s)?;
    if text.trim_start().starts_with('{') {
        let parsed: IdealJson =
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("ideal json: {e}")))?;
        parsed.to_ideal()
    } else {
        SstIdeal::parse(&text)
    }
}

fn load_ideal(input: &IdealInput) -> Result<SstIdeal> {
    match (&input.input, &input.gens) {
        (Some(s), None) | (None, Some(s)) => parse_ideal(s),
        (Some(_), Some(_)) => Err(invalid("give the ideal either positionally or with --gens")),
        (None, None) => Err(invalid(
            "missing ideal: pass it positionally or with --gens",
        )),
    }
}

fn ideal_value(i: &SstIdeal) -> Value {
    serde_json::to_value(IdealJson::from_ideal(i)).expect("plain data")
}

fn parse_map(s: &str) -> Result<IsotoneMap> {
    s.parse()
}

fn field_config(cli: &Cli) -> Result<FieldConfig> {
    cli.field.parse()
}

fn box_arg(bx: &[usize]) -> Result<FiniteBox> {
    match bx {
        [m, n] => FiniteBox::new(*m, *n),
        _ => Err(invalid("--box takes m,n")),
    }
}

pub fn run(cli: &Cli) -> Result<Report> {
    if let Some(limit) = cli.max_candidates {
        borel_core::limits::set_max_candidates(limit);
    }
    let config = field_config(cli)?;
    match &cli.command {
        Command::Dual { ideal, check } => run_dual(&load_ideal(ideal)?, *check),
        Command::Gens {
            ideal, monomial, ..
        } => run_gens(&load_ideal(ideal)?, *monomial),
        Command::Member { ideal, monomial } => run_member(&load_ideal(ideal)?, monomial),
        Command::Hilb {
            ideal,
            max_deg,
            vars,
        } => run_hilb(&load_ideal(ideal)?, *max_deg, *vars),
        Command::Betti(args) => with_field(config, |f| run_resolve(f, args, true)),
        Command::Resolve(args) => with_field(config, |f| run_resolve(f, args, false)),
        Command::Verify {
            complex,
            gens,
            quotient,
            bound,
            fixture,
        } => match (complex, fixture) {
            (_, Some(name)) => with_field(config, |f| run_fixture(f, name)),
            (Some(path), None) => {
                let ideal = parse_ideal(gens.as_deref().expect("clap requires --gens"))?;
                let text = read_source(path)?;
                with_field(config, |f| run_verify(f, &text, &ideal, *quotient, *bound))
            }
            (None, None) => Err(invalid("verify needs --complex or --fixture")),
        },
        Command::Ulex {
            values,
            side,
            truncate,
        } => run_ulex(values, *side, *truncate),
        Command::Isotone { op } => run_isotone(op),
        Command::DegreeMap { delta, value } => run_degree_map(delta, value),
        Command::Shiftmod { op } => with_field(config, |f| f.shiftmod(op)),
        Command::Oracle { op } => with_field(config, |f| run_oracle(f, op, cli.seed)),
    }
}

/// Runs `body` with the configured field.
fn with_field(
    config: FieldConfig,
    body: impl FnOnce(&dyn FieldAny) -> Result<Report>,
) -> Result<Report> {
    match config {
        FieldConfig::Prime(p) => body(&PrimeField::new(p)?),
        FieldConfig::Rational => body(&RationalField),
    }
}

/// Object-safe view of a field, so one closure serves every field type.
pub trait FieldAny {
    fn resolve(&self, ideal: &SstIdeal, engine: Engine, quotient: bool) -> Result<ComplexOut>;
    fn verify(
        &self,
        text: &str,
        ideal: &SstIdeal,
        quotient: bool,
        bound: Option<u32>,
    ) -> Result<Report>;
    fn fixture(&self, text: &str) -> Result<Report>;
    fn shiftmod(&self, op: &ShiftmodOp) -> Result<Report>;
    fn ek_betti(&self, ideal: &SstIdeal) -> Result<Report>;
}

pub struct ComplexOut {
    pub json: String,
    pub betti: borel_core::resolution::BettiTable,
    pub terms: Vec<Vec<String>>,
}

impl<F: Field> FieldAny for F {
    fn resolve(&self, ideal: &SstIdeal, engine: Engine, quotient: bool) -> Result<ComplexOut> {
        if quotient && engine != Engine::Koszul {
            return Err(invalid("--quotient is only available with --engine koszul"));
        }
        let c: ShiftComplex<F> = match engine {
            Engine::Koszul => {
                let mode = if quotient {
                    KoszulMode::Quotient
                } else {
                    KoszulMode::Ideal
                };
                koszul_shift_resolution(self.clone(), ideal.gens(), mode)?
            }
            Engine::MinimalShift => {
                let (m, n) = (ideal.max_var().max(1) as usize, ideal.max_degree() as usize);
                minimal_shift_resolution(self.clone(), ideal, m, n)?
            }
            Engine::Ek => ek_resolution_sst(self.clone(), ideal)?.complex,
        };
        Ok(ComplexOut {
            json: complex_to_json(engine.name(), &c),
            betti: c.betti(),
            terms: c
                .term_monomials()
                .iter()
                .map(|t| t.iter().map(ToString::to_string).collect())
                .collect(),
        })
    }

    fn verify(
        &self,
        text: &str,
        ideal: &SstIdeal,
        quotient: bool,
        bound: Option<u32>,
    ) -> Result<Report> {
        let c = complex_from_json(self.clone(), text)?;
        let bound = bound.unwrap_or(ideal.max_degree() + 3);
        let target = |e: &[u32]| {
            let inside = ideal.member(&c.grading.monomial(e));
            usize::from(inside != quotient)
        };
        let r = c.verify(&target, bound)?;
        let ok = r.is_resolution();
        let text = format!(
            "{}: {} degrees checked, d^2 failures {}, homology {}, H0 mismatches {}, minimal {}",
            if ok { "pass" } else { "fail" },
            r.degrees_checked,
            r.d_squared.len(),
            r.homology.len(),
            r.h0.len(),
            r.minimal
        );
        let json = json!({
            "pass": ok,
            "degrees_checked": r.degrees_checked,
            "d_squared": r.d_squared,
            "homology": r.homology,
            "h0": r.h0,
            "minimal": r.minimal,
        });
        Ok(Report::check(text, json, ok))
    }

    fn fixture(&self, text: &str) -> Result<Report> {
        let file = parse_fixture(text)?;
        let reports = check_fixture(self, &file)?;
        let ok = reports.iter().all(|r| r.passed());
        let mut lines = Vec::new();
        for r in &reports {
            if r.passed() {
                lines.push(format!("PASS {}", r.name));
            } else {
                lines.push(format!("FAIL {}: {}", r.name, r.failures.join("; ")));
            }
        }
        let passed = reports.iter().filter(|r| r.passed()).count();
        lines.push(format!("{passed} of {} instances pass", reports.len()));
        let json = json!({
            "family": file.family,
            "pass": ok,
            "instances": reports
                .iter()
                .map(|r| json!({"name": r.name, "pass": r.passed(), "failures": r.failures}))
                .collect::<Vec<_>>(),
        });
        Ok(Report::check(lines.join("\n"), json, ok))
    }

    fn shiftmod(&self, op: &ShiftmodOp) -> Result<Report> {
        let load = |s: &str| module_from_json(self.clone(), &read_source(s)?);
        match op {
            ShiftmodOp::Validate { module } => {
                let v = load(module)?;
                let r = v.validate();
                let ok = r.is_valid();
                let problems: Vec<String> = r.violations.iter().map(|x| format!("{x:?}")).collect();
                let text = if ok {
                    format!(
                        "valid: {} squares checked, total dimension {}",
                        r.squares_checked,
                        v.total_dim()
                    )
                } else {
                    format!("invalid: {}", problems.join("; "))
                };
                let json = json!({
                    "valid": ok,
                    "squares_checked": r.squares_checked,
                    "total_dim": v.total_dim(),
                    "violations": problems,
                });
                Ok(Report::check(text, json, ok))
            }
            ShiftmodOp::Dual { module } => {
                let w = dual_module(&load(module)?)?;
                module_report(&module_to_json(&w))
            }
            ShiftmodOp::Expand { module, bound } => {
                let t = expand(&load(module)?, *bound)?;
                let dims: Vec<(Vec<u32>, usize)> = t
                    .dims()
                    .iter()
                    .filter(|(_, &d)| d > 0)
                    .map(|(a, &d)| (a.clone(), d))
                    .collect();
                let text = dims
                    .iter()
                    .map(|(a, d)| format!("{}: {d}", join(a)))
                    .collect::<Vec<_>>()
                    .join("\n");
                Ok(Report::new(text, json!({"bound": bound, "dims": dims})))
            }
            ShiftmodOp::DegreeMap { module } => {
                let v = load(module)?;
                let (m, n) = (v.m(), v.n());
                let mut rows = Vec::new();
                for (d, &dim) in v.dims() {
                    if dim > 0 {
                        rows.push((d.clone(), degree_map(d, m, n)?, dim));
                    }
                }
                let text = rows
                    .iter()
                    .map(|(d, e, dim)| format!("{} -> {} (dim {dim})", join(d), join(e)))
                    .collect::<Vec<_>>()
                    .join("\n");
                let json = json!(rows
                    .iter()
                    .map(|(d, e, dim)| json!({"degree": d, "dual_degree": e, "dim": dim}))
                    .collect::<Vec<_>>());
                Ok(Report::new(text, json))
            }
            ShiftmodOp::FromIdeal { ideal, m, n } => {
                let v = from_sst_ideal(self.clone(), &load_ideal(ideal)?, *m, *n)?;
                module_report(&module_to_json(&v))
            }
        }
    }

    fn ek_betti(&self, ideal: &SstIdeal) -> Result<Report> {
        let c = ek_resolution_sst(self.clone(), ideal)?.complex;
        let got = c.betti();
        let want = ek_betti_closed_form(ideal)?;
        let ok = got == want;
        let text = format!(
            "{}: complex Betti {:?}, closed form {:?}\n{got}",
            if ok { "pass" } else { "fail" },
            got.totals(),
            want.totals()
        );
        let json = json!({
            "property": "ek-betti",
            "pass": ok,
            "complex": betti_to_entries(&got),
            "closed_form": betti_to_entries(&want),
        });
        Ok(Report::check(text, json, ok))
    }
}

fn module_report(s: &str) -> Result<Report> {
    Ok(Report::raw(s, s.to_string()))
}

fn join(v: &[u32]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn run_dual(ideal: &SstIdeal, check: bool) -> Result<Report> {
    let j = dual(ideal)?;
    if !check {
        return Ok(Report::new(j.gens_string(), ideal_value(&j)));
    }
    let agree = dual_via_intersection(ideal)? == j;
    let double = verify_double_dual(ideal)?;
    let ok = agree && double;
    let text = format!(
        "{}\nengine agreement: {}\ndouble dual: {}",
        j.gens_string(),
        if agree { "pass" } else { "fail" },
        if double { "pass" } else { "fail" }
    );
    let json = json!({"dual": ideal_value(&j), "engine_agreement": agree, "double_dual": double});
    Ok(Report::check(text, json, ok))
}

fn run_gens(ideal: &SstIdeal, monomial: bool) -> Result<Report> {
    if !monomial {
        return Ok(Report::new(ideal.gens_string(), ideal_value(ideal)));
    }
    let a = ideal.alphabet();
    let gens: Vec<String> = ideal
        .monomial_min_gens()?
        .iter()
        .map(|g| g.display(a))
        .collect();
    let text = if gens.is_empty() {
        "0".to_string()
    } else {
        gens.join(", ")
    };
    Ok(Report::new(
        text,
        json!({"alphabet": a.letter().to_string(), "gens": gens}),
    ))
}

fn run_member(ideal: &SstIdeal, monomial: &str) -> Result<Report> {
    let (u, seen) = parse_monomial(monomial)?;
    if let Some(a) = seen {
        if a != ideal.alphabet() && !ideal.gens().is_empty() {
            return Err(Error::AlphabetMismatch {
                left: ideal.alphabet().letter(),
                right: a.letter(),
            });
        }
    }
    let inside = ideal.member(&u);
    Ok(Report::new(inside.to_string(), json!({"member": inside})))
}

fn run_hilb(ideal: &SstIdeal, max_deg: u32, vars: Option<usize>) -> Result<Report> {
    let top = ideal.max_var().max(1) as usize;
    let m = vars.unwrap_or(top);
    if m < ideal.max_var() as usize {
        return Err(invalid(format!(
            "--vars {m} is below the largest index {top}"
        )));
    }
    let h = ideal.hilbert_function(max_deg, m)?;
    let text = h
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    Ok(Report::new(text, json!({"vars": m, "values": h})))
}

fn run_resolve(f: &dyn FieldAny, args: &ResolveArgs, betti_only: bool) -> Result<Report> {
    let ideal = load_ideal(&args.ideal)?;
    let out = f.resolve(&ideal, args.engine, args.quotient)?;
    if betti_only {
        let json = json!({"engine": args.engine.name(), "betti": betti_to_entries(&out.betti)});
        return Ok(Report::new(
            out.betti.to_string().trim_end().to_string(),
            json,
        ));
    }
    let mut lines: Vec<String> = out
        .terms
        .iter()
        .enumerate()
        .map(|(p, t)| {
            format!(
                "F{p}: {}",
                if t.is_empty() {
                    "0".into()
                } else {
                    t.join(", ")
                }
            )
        })
        .collect();
    lines.push(out.betti.to_string().trim_end().to_string());
    Ok(Report::raw(lines.join("\n"), out.json))
}

fn run_verify(
    f: &dyn FieldAny,
    text: &str,
    ideal: &SstIdeal,
    quotient: bool,
    bound: Option<u32>,
) -> Result<Report> {
    f.verify(text, ideal, quotient, bound)
}

fn run_fixture(f: &dyn FieldAny, name: &str) -> Result<Report> {
    let text = match name {
        "pd1" => PD1.to_string(),
        "pd2" => PD2.to_string(),
        path => read_source(path)?,
    };
    f.fixture(&text)
}

fn run_ulex(values: &[u32], side: Side, truncate: Option<usize>) -> Result<Report> {
    let side = match side {
        Side::Gamma => UlexSide::Gamma,
        Side::Lambda => UlexSide::Lambda,
    };
    let mode = truncate.map_or(UlexMode::Finite, UlexMode::TruncatedInfinite);
    let mut i = ulex(values, side, mode)?;
    if side == UlexSide::Lambda {
        i = i.with_alphabet(Alphabet::Y);
    }
    Ok(Report::new(i.gens_string(), ideal_value(&i)))
}

fn run_isotone(op: &IsotoneOp) -> Result<Report> {
    match op {
        IsotoneOp::Dual { map } => {
            let d = parse_map(map)?.dual();
            Ok(Report::new(d.to_string(), json!({"map": d.to_string()})))
        }
        IsotoneOp::Leq { f, g } => {
            let b = parse_map(f)?.leq(&parse_map(g)?)?;
            Ok(Report::new(b.to_string(), json!({"leq": b})))
        }
        IsotoneOp::Lex { f, g } => {
            let o = match parse_map(f)?.lex_cmp(&parse_map(g)?)? {
                std::cmp::Ordering::Less => "less",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "greater",
            };
            Ok(Report::new(o, json!({"lex": o})))
        }
        IsotoneOp::Meet { f, g } => {
            let h = parse_map(f)?.meet(&parse_map(g)?)?;
            Ok(Report::new(h.to_string(), json!({"map": h.to_string()})))
        }
    }
}

fn run_degree_map(delta: &[usize], value: &[u32]) -> Result<Report> {
    let [m1, n] = delta else {
        return Err(invalid("--delta takes m+1,n"));
    };
    if *m1 == 0 {
        return Err(invalid("--delta needs m+1 >= 1"));
    }
    let d = degree_map(value, m1 - 1, *n)?;
    Ok(Report::new(join(&d), json!({"degree": d})))
}

fn run_oracle(f: &dyn FieldAny, op: &OracleOp, seed: u64) -> Result<Report> {
    match op {
        OracleOp::DualityComplement { ideal, bx } => {
            let ideal = load_ideal(ideal)?;
            let b = box_arg(bx)?;
            if ideal.max_degree() as usize > b.m || ideal.max_var() as usize > b.n {
                return Err(invalid(format!(
                    "generators need at most {} factors and indices at most {}",
                    b.m, b.n
                )));
            }
            let found = duality_complement(&ideal, b.m, b.n)?;
            let checked = b.cardinality() as u64;
            Ok(oracle_report(
                "duality-complement",
                checked,
                found.map(|v| json!(v)),
            ))
        }
        OracleOp::Involution { bx } => {
            let b = box_arg(bx)?;
            Ok(match box_involution(b.m, b.n)? {
                Ok(n) => oracle_report("involution", n as u64, None),
                Err(v) => oracle_report("involution", b.cardinality() as u64, Some(json!(v))),
            })
        }
        OracleOp::EkBetti { ideal } => f.ek_betti(&load_ideal(ideal)?),
        OracleOp::DoubleDual { count } => {
            let ideals = random_ideals(seed, *count, IdealShape::default(), Alphabet::X);
            for i in &ideals {
                let j = dual(i)?;
                if dual(&j)? != *i || dual_via_intersection(i)? != j {
                    return Ok(oracle_report(
                        "double-dual",
                        ideals.len() as u64,
                        Some(ideal_value(i)),
                    ));
                }
            }
            Ok(oracle_report("double-dual", ideals.len() as u64, None))
        }
    }
}

fn oracle_report(property: &str, checked: u64, counterexample: Option<Value>) -> Report {
    let ok = counterexample.is_none();
    let text = match &counterexample {
        None => format!("{property}: pass ({checked} checked)"),
        Some(c) => format!("{property}: fail, counterexample {c}"),
    };
    let json = json!({
        "property": property,
        "pass": ok,
        "checked": checked,
        "counterexample": counterexample,
    });
    Report::check(text, json, ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use borel_core::json::ideal_to_json;
    use clap::Parser;

    fn report(args: &[&str]) -> Report {
        let cli =
            Cli::try_parse_from(std::iter::once("borel").chain(args.iter().copied())).unwrap();
        run(&cli).unwrap()
    }

    #[test]
    fn dual_of_principal_ideal() {
        assert_eq!(report(&["dual", "--gens", "y2*y3"]).text, "x1^2, x2^3");
    }

    #[test]
    fn ideal_json_input() {
        let text = ideal_to_json(&SstIdeal::parse("y2*y3").unwrap());
        assert_eq!(report(&["dual", &text]).text, "x1^2, x2^3");
    }

    #[test]
    fn degree_map_example() {
        let r = report(&["degree-map", "--delta", "5,7", "--value", "2,1,0,3,1"]);
        assert_eq!(r.text, "0,0,1,2,0,0,1,0");
    }

    #[test]
    fn quotient_needs_koszul() {
        let cli = Cli::try_parse_from(["borel", "resolve", "--gens", "x1", "--quotient"]).unwrap();
        assert!(run(&cli).is_err());
    }
}
