use std::fs;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use supercontact_core::calculus::susy::{alpha_n1, alpha_std};
use supercontact_core::calculus::{exterior_derivative, interior_product, lie_derivative};
use supercontact_core::components::collect_components;
use supercontact_core::contact::{
    classify_contact_vf, hamiltonian_vf, infinitesimal_transformations, kernel_basis,
    nondegenerate_on, reeb, OneForm,
};
use supercontact_core::lie::{
    decompose_mc, flatness_defect, maurer_cartan, standard_coset, LieAlgebraPresentation,
};
use supercontact_core::parse::{
    parse_document, parse_expr, parse_name_list, parse_vf, print_canonical, print_vf, AlgebraDecl,
    ParserContext,
};
use supercontact_core::verify::verify_paper;
use supercontact_core::{Chart, Parity, SuperExpr, VectorField};

#[derive(Parser)]
#[command(
    name = "supercontact",
    version,
    about = "Exact super contact geometry on R^{1|1} and R^{1|2}"
)]
struct Cli {
    /// r1n1, r1n2 or a chart file
    #[arg(long, global = true, default_value = "r1n2")]
    chart: String,
    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,
    /// Odd function-of-t symbols, comma separated
    #[arg(long, global = true, value_name = "LIST")]
    odd_fns: Option<String>,
    /// Even function-of-t symbols, comma separated
    #[arg(long, global = true, value_name = "LIST")]
    even_fns: Option<String>,
    /// Extra odd constants, comma separated
    #[arg(long, global = true, value_name = "LIST")]
    odd_consts: Option<String>,
    /// Extra even parameters, comma separated
    #[arg(long, global = true, value_name = "LIST")]
    params: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical form of an expression
    Eval { expr: String },
    /// Exterior derivative
    D { form: String },
    /// Interior product i_X
    Ip { vf: String, form: String },
    /// Lie derivative L_X
    Lie { vf: String, form: String },
    /// Graded commutator of two vector fields
    Bracket { x: String, y: String },
    /// Basis of the kernel distribution of a one-form
    Kernel { form: String },
    /// Reeb vector field
    Reeb { form: String },
    /// Contact Hamiltonian vector field of an even superfield
    Ham {
        superfield: String,
        #[arg(long)]
        form: Option<String>,
    },
    /// Strict / contact / neither
    Classify {
        vf: String,
        #[arg(long)]
        form: String,
    },
    /// Pull a form back along a coordinate map from a file
    Pullback {
        #[arg(long)]
        map: String,
        form: String,
    },
    /// Components of a superfield's variation along a vector field
    Components {
        superfield: String,
        #[arg(long)]
        vf: String,
    },
    /// Maurer-Cartan form of a coset exponential
    Mc {
        #[arg(long)]
        algebra: String,
    },
    /// Run the fixed list of identity checks
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
}

#[derive(Subcommand)]
enum VerifyWhat {
    /// Replay every identity
    Paper {
        /// Replace the r1n2 contact form used by the checks
        #[arg(long)]
        form: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
    Checks,
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn compute(e: impl std::fmt::Display) -> Failure {
    Failure::Compute(e.to_string())
}

fn read_file(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))
}

fn context(cli: &Cli) -> Result<ParserContext, Failure> {
    let mut ctx = match cli.chart.as_str() {
        "r1n1" => ParserContext::new(Chart::r1n1()),
        "r1n2" => ParserContext::new(Chart::r1n2()),
        path => {
            let src = read_file(path)?;
            let doc = parse_document(&src, &ParserContext::new(Chart::r1n2())).map_err(usage)?;
            if doc.charts.is_empty() {
                return Err(Failure::Usage(format!("{path} declares no chart")));
            }
            doc.context
        }
    };
    let lists = [
        (&cli.odd_fns, 0),
        (&cli.even_fns, 1),
        (&cli.odd_consts, 2),
        (&cli.params, 3),
    ];
    for (list, kind) in lists {
        for name in list.as_deref().map(parse_name_list).unwrap_or_default() {
            match kind {
                0 => ctx.declare_function(&name, Parity::Odd),
                1 => ctx.declare_function(&name, Parity::Even),
                2 => ctx.declare_odd_constant(&name),
                _ => ctx.declare_parameter(&name),
            }
        }
    }
    Ok(ctx)
}

fn default_form(chart: &Arc<Chart>) -> Result<SuperExpr, Failure> {
    match chart.name() {
        "r1n2" if **chart == *Chart::r1n2() => Ok(alpha_std()),
        "r1n1" if **chart == *Chart::r1n1() => Ok(alpha_n1()),
        _ => Err(Failure::Usage(
            "no standard contact form on this chart; pass --form".into(),
        )),
    }
}

struct Output {
    text: String,
    json: Value,
}

fn single(s: String) -> Output {
    Output {
        json: json!({ "result": s }),
        text: s,
    }
}

fn one_form(ctx: &ParserContext, src: &str) -> Result<OneForm, Failure> {
    let e = parse_expr(src, ctx).map_err(usage)?;
    OneForm::new(ctx.chart().clone(), e).map_err(compute)
}

fn vf(ctx: &ParserContext, src: &str) -> Result<VectorField, Failure> {
    parse_vf(src, ctx).map_err(usage)
}

fn algebra(ctx: &ParserContext, spec: &str) -> Result<(AlgebraDecl, Arc<Chart>), Failure> {
    if let Some(p) = LieAlgebraPresentation::builtin(spec) {
        let p = Arc::new(p);
        let (chart, x) = standard_coset(&p).expect("built-in coset");
        let decl = AlgebraDecl {
            presentation: p,
            coset: Some((chart.clone(), x)),
            stabilizer: vec!["P".into()],
        };
        return Ok((decl, chart));
    }
    let doc = parse_document(&read_file(spec)?, ctx).map_err(usage)?;
    let decl = doc
        .algebras
        .into_iter()
        .next()
        .ok_or_else(|| Failure::Usage(format!("{spec} declares no algebra")))?;
    let chart = match &decl.coset {
        Some((c, _)) => c.clone(),
        None => {
            return Err(Failure::Usage(format!(
                "{spec}: algebra has no coset exponent"
            )))
        }
    };
    Ok((decl, chart))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let ctx = context(cli)?;
    let chart = ctx.chart().clone();
    let expr = |s: &str| parse_expr(s, &ctx).map_err(usage);
    Ok(match &cli.command {
        Command::Eval { expr: e } => single(print_canonical(&expr(e)?)),
        Command::D { form } => single(print_canonical(&exterior_derivative(&chart, &expr(form)?))),
        Command::Ip { vf: x, form } => single(print_canonical(&interior_product(
            &vf(&ctx, x)?,
            &expr(form)?,
        ))),
        Command::Lie { vf: x, form } => single(print_canonical(&lie_derivative(
            &vf(&ctx, x)?,
            &expr(form)?,
        ))),
        Command::Bracket { x, y } => {
            let z = vf(&ctx, x)?
                .graded_commutator(&vf(&ctx, y)?)
                .map_err(compute)?;
            single(print_vf(&z))
        }
        Command::Kernel { form } => {
            let a = one_form(&ctx, form)?;
            let k = kernel_basis(&a).map_err(compute)?;
            let basis: Vec<String> = k.basis.iter().map(print_vf).collect();
            let nondeg = nondegenerate_on(&a, &k).map_err(compute)?;
            let mut text = basis.join("\n");
            text.push_str(&format!(
                "\ncorank ({}|{})\nnondegenerate {nondeg}",
                k.corank.0, k.corank.1
            ));
            Output {
                text,
                json: json!({ "basis": basis, "corank": [k.corank.0, k.corank.1], "nondegenerate": nondeg }),
            }
        }
        Command::Reeb { form } => single(print_vf(&reeb(&one_form(&ctx, form)?).map_err(compute)?)),
        Command::Ham { superfield, form } => {
            let a = match form {
                Some(f) => one_form(&ctx, f)?,
                None => OneForm::new(chart.clone(), default_form(&chart)?).map_err(compute)?,
            };
            let x = hamiltonian_vf(&a, &expr(superfield)?).map_err(compute)?;
            let table: Vec<(String, String)> = infinitesimal_transformations(&x)
                .into_iter()
                .map(|(n, e)| (n, print_canonical(&e)))
                .collect();
            let mut text = print_vf(&x);
            for (n, e) in &table {
                text.push_str(&format!("\nd{n} = {e}"));
            }
            let deltas: serde_json::Map<String, Value> = table
                .into_iter()
                .map(|(n, e)| (n, Value::String(e)))
                .collect();
            Output {
                json: json!({ "result": print_vf(&x), "delta": deltas }),
                text,
            }
        }
        Command::Classify { vf: x, form } => {
            let cl = classify_contact_vf(&vf(&ctx, x)?, &one_form(&ctx, form)?);
            let kind = serde_json::to_value(cl.kind).expect("serializable");
            let kind = kind.as_str().unwrap_or_default().to_string();
            let mult = cl.multiplier.as_ref().map(print_canonical);
            let body = cl.body.map(|b| {
                serde_json::to_value(b)
                    .expect("serializable")
                    .as_str()
                    .unwrap_or_default()
                    .to_string()
            });
            let mut text = kind.clone();
            if let Some(m) = &mult {
                text.push_str(&format!("\nmultiplier {m}"));
            }
            if let Some(b) = &body {
                text.push_str(&format!("\nbody {b}"));
            }
            Output {
                text,
                json: json!({ "kind": kind, "multiplier": mult, "body": body }),
            }
        }
        Command::Pullback { map, form } => {
            let doc = parse_document(&read_file(map)?, &ctx).map_err(usage)?;
            let w = parse_expr(form, &doc.context).map_err(usage)?;
            let (_, m) = doc
                .maps
                .into_iter()
                .next()
                .ok_or_else(|| Failure::Usage(format!("{map} declares no map")))?;
            single(print_canonical(&m.pullback(&w).map_err(compute)?))
        }
        Command::Components { superfield, vf: x } => {
            if *chart != *Chart::r1n2() {
                return Err(Failure::Usage("components needs the r1n2 chart".into()));
            }
            let phi = expr(superfield)?;
            let delta = vf(&ctx, x)?.apply(&phi);
            let c = collect_components(&delta).map_err(compute)?;
            let minus_i = -SuperExpr::i();
            let rows = [
                ("1", c.f0.clone()),
                ("th", &minus_i * &c.f1),
                ("thb", &minus_i * &c.f2),
                ("th*thb", &minus_i * &c.f3),
            ];
            let text = rows
                .iter()
                .map(|(k, e)| format!("delta[{k}] = {}", print_canonical(e)))
                .collect::<Vec<_>>()
                .join("\n");
            let obj: serde_json::Map<String, Value> = rows
                .iter()
                .map(|(k, e)| (k.to_string(), Value::String(print_canonical(e))))
                .collect();
            Output {
                text,
                json: json!({ "delta": obj }),
            }
        }
        Command::Mc { algebra: spec } => {
            let (decl, mc_chart) = algebra(&ctx, spec)?;
            let (_, x) = decl.coset.as_ref().expect("checked");
            let mc = maurer_cartan(&mc_chart, x, supercontact_core::lie::DEFAULT_ORDER_CAP)
                .map_err(compute)?;
            let names: Vec<&str> = decl
                .presentation
                .basis()
                .iter()
                .map(|(n, _)| n.as_str())
                .collect();
            let stab: Vec<&str> = decl.stabilizer.iter().map(String::as_str).collect();
            let split = decompose_mc(&mc.omega, &stab).map_err(compute)?;
            let flat = flatness_defect(&mc_chart, &mc.i_omega).is_zero();
            let mut text = format!("order {}", mc.order);
            let mut omega = serde_json::Map::new();
            for (n, f) in names.iter().zip(mc.omega.coeffs()) {
                text.push_str(&format!("\nOmega[{n}] = {}", print_canonical(f)));
                omega.insert(n.to_string(), Value::String(print_canonical(f)));
            }
            let mut stab_json = serde_json::Map::new();
            for n in &stab {
                let f = split.stabilizer.coefficient(n).expect("known symbol");
                text.push_str(&format!("\nstabilizer[{n}] = {}", print_canonical(f)));
                stab_json.insert(n.to_string(), Value::String(print_canonical(f)));
            }
            text.push_str(&format!("\nflat {flat}"));
            Output {
                text,
                json: json!({ "order": mc.order, "omega": omega, "stabilizer": stab_json, "flat": flat }),
            }
        }
        Command::Verify {
            what: VerifyWhat::Paper { form },
        } => {
            let alpha = match form {
                Some(f) => Some(parse_expr(f, &ParserContext::new(Chart::r1n2())).map_err(usage)?),
                None => None,
            };
            let report = verify_paper(alpha.as_ref());
            let out = Output {
                text: report.to_text(),
                json: serde_json::to_value(&report).expect("serializable"),
            };
            emit(cli, &out);
            return if report.passed() {
                Ok(Output {
                    text: String::new(),
                    json: Value::Null,
                })
            } else {
                Err(Failure::Checks)
            };
        }
    })
}

fn emit(cli: &Cli, out: &Output) {
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&out.json).expect("serializable")
        );
    } else {
        print!("{}", out.text);
        if !out.text.ends_with('\n') {
            println!();
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if !out.json.is_null() {
                emit(&cli, &out);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
