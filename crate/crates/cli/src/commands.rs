//! One function per verb; each returns JSON, text and an optional pass flag.

use std::fmt;

use qroot_core::duality::{self, Side};
use qroot_core::envalg::{self, EnvElement};
use qroot_core::funalg::{self, FunElement};
use qroot_core::integral::{self, Form};
use qroot_core::report::Report;
use qroot_core::reps::{self, RepFamily};
use qroot_core::{Error, Field, Scalar};
use serde_json::{json, Value};

use crate::app::{ActSide, Common, ExprArgs, IntegralSide, Mode, RepArgs, SignatureSide, Verb};
use crate::json::{self, SchemaError};
use crate::parse::{self, ParseError, ParseErrorKind};
use crate::text;
use crate::verify::{self, Params};

#[derive(Debug)]
pub enum CliError {
    Parse(ParseError),
    Schema(SchemaError),
    Core(Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "parse error {}", e),
            CliError::Schema(e) => write!(f, "{}", e),
            CliError::Core(e) => write!(f, "{}", e),
            CliError::Usage(s) => write!(f, "{}", s),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<SchemaError> for CliError {
    fn from(e: SchemaError) -> Self {
        CliError::Schema(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type CResult<T> = Result<T, CliError>;

/// What a verb produced.
pub struct Output {
    pub json: Value,
    pub text: String,
    /// `Some(false)` makes the process exit with status 1.
    pub passed: Option<bool>,
}

fn plain(json: Value, text: String) -> Output {
    Output { json, text, passed: None }
}

fn from_report(r: &Report, f: Field) -> Output {
    Output { json: json::report_to(r, f.p()), text: text::report(r), passed: Some(r.passed()) }
}

pub fn field(c: &Common) -> CResult<Field> {
    match c.mode {
        Mode::Root => Ok(Field::root(c.p)?),
        Mode::Generic => Ok(Field::Generic),
    }
}

/// An element of either algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Any {
    Fun(FunElement),
    Env(EnvElement),
}

fn read_source(src: &str) -> CResult<String> {
    match src.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {}", path, e))),
        None => Ok(src.to_string()),
    }
}

fn check_field(got: Field, want: Field) -> CResult<()> {
    if got != want {
        return Err(SchemaError { pointer: "/p".into(), message: format!("element is over {:?}, command runs over {:?}", got, want) }.into());
    }
    Ok(())
}

/// Text in the expression grammar or a JSON element; the algebra is inferred.
pub fn load(src: &str, f: Field) -> CResult<Any> {
    let body = read_source(src)?;
    let trimmed = body.trim_start();
    if trimmed.starts_with('{') {
        let v: Value = serde_json::from_str(trimmed)
            .map_err(|e| SchemaError { pointer: String::new(), message: format!("invalid JSON: {}", e) })?;
        let is_env = v["terms"].as_array().and_then(|t| t.first()).is_some_and(|t| t.get("kk").is_some());
        let a = if is_env { Any::Env(json::env_from(&v)?) } else { Any::Fun(json::fun_from(&v)?) };
        let got = match &a {
            Any::Fun(e) => e.field(),
            Any::Env(e) => e.field(),
        };
        check_field(got, f)?;
        return Ok(a);
    }
    match parse::parse_fun(&body, f) {
        Ok(e) => Ok(Any::Fun(e)),
        Err(fe) if matches!(fe.kind, ParseErrorKind::UndefinedAtom(_)) => match parse::parse_env(&body, f) {
            Ok(e) => Ok(Any::Env(e)),
            Err(ee) if ee.offset > fe.offset => Err(ee.into()),
            Err(_) => Err(fe.into()),
        },
        Err(fe) => Err(fe.into()),
    }
}

fn load_fun(src: &str, f: Field) -> CResult<FunElement> {
    match load(src, f)? {
        Any::Fun(e) => Ok(e),
        Any::Env(_) => Err(CliError::Usage(format!("`{}` is an element of U, expected an element of A", src))),
    }
}

fn load_env(src: &str, f: Field) -> CResult<EnvElement> {
    match load(src, f)? {
        Any::Env(e) => Ok(e),
        Any::Fun(e) if e.iter().all(|(m, _)| *m == funalg::FunMonomial::new(0, 0, 0)) => {
            // a pure scalar parses as an element of A
            Ok(qroot_core::Elem::scalar(f, e.constant_term()))
        }
        Any::Fun(_) => Err(CliError::Usage(format!("`{}` is an element of A, expected an element of U", src))),
    }
}

fn any_out(a: &Any) -> Output {
    match a {
        Any::Fun(e) => plain(json::fun_to(e), text::fun(e)),
        Any::Env(e) => plain(json::env_to(e), text::env(e)),
    }
}

fn scalar_out(x: &Scalar) -> Output {
    plain(json::scalar_to(x), text::scalar(x))
}

fn require_root(f: Field, what: &'static str) -> CResult<u32> {
    f.p().ok_or(CliError::Core(Error::GenericModeUnsupported(what)))
}

fn parse_param(src: &str, f: Field, name: &str) -> CResult<Scalar> {
    parse::parse_scalar(src, f).map_err(|e| CliError::Usage(format!("--{}: {}", name, e)))
}

fn cyclic(r: &RepArgs, f: Field) -> CResult<RepFamily> {
    let lp = r.lambda_plus.as_deref().ok_or_else(|| CliError::Usage("--lambda-plus is required".into()))?;
    let a = r.a.as_deref().ok_or_else(|| CliError::Usage("--a is required".into()))?;
    Ok(reps::cyclic_rep(f, parse_param(lp, f, "lambda-plus")?, parse_param(a, f, "a")?)?)
}

fn act(common: &Common, exprs: &[String], side: ActSide) -> CResult<Output> {
    let f = field(common)?;
    require_root(f, "regular action")?;
    let [phi, g] = exprs else {
        return Err(CliError::Usage("act takes two --expr: the U element, then the A element".into()));
    };
    let phi = load_env(phi, f)?;
    let g = load_fun(g, f)?;
    let side = match side {
        ActSide::Right => Side::Right,
        ActSide::Left => Side::Left,
    };
    let r = duality::regular_action(&phi, &g, side);
    Ok(plain(json::fun_to(&r), text::fun(&r)))
}

fn pair(common: &Common, exprs: &[String]) -> CResult<Output> {
    let f = field(common)?;
    let [phi, a] = exprs else {
        return Err(CliError::Usage("pair takes two --expr: the U element, then the A element".into()));
    };
    let phi = load_env(phi, f)?;
    let a = load_fun(a, f)?;
    let v = if f == Field::Generic {
        duality::pair_generic(&phi, &a)?
    } else if a.iter().any(|(m, _)| m.freq.is_some()) {
        duality::pair_ext(&phi, &a)
    } else {
        duality::pair(&phi, &a)?
    };
    Ok(scalar_out(&v))
}

fn unary(verb: &str, args: &ExprArgs) -> CResult<Output> {
    let f = field(&args.common)?;
    let x = load(&args.expr, f)?;
    Ok(match (verb, &x) {
        ("normal-form", _) => any_out(&x),
        ("coproduct", Any::Fun(e)) => {
            let trunc = if f == Field::Generic { args.max_deg } else { 0 };
            let t = funalg::try_coproduct(e, trunc)?;
            plain(json::fun_tensor_to(&t), text::fun_tensor(&t))
        }
        ("coproduct", Any::Env(e)) => {
            let t = envalg::coproduct(e);
            plain(json::env_tensor_to(&t), text::env_tensor(&t))
        }
        ("antipode", Any::Fun(e)) => any_out(&Any::Fun(funalg::antipode(e)?)),
        ("antipode", Any::Env(e)) => any_out(&Any::Env(envalg::antipode(e))),
        ("counit", Any::Fun(e)) => scalar_out(&funalg::counit(e)),
        ("counit", Any::Env(e)) => scalar_out(&envalg::counit(e)),
        ("star", Any::Fun(e)) => any_out(&Any::Fun(funalg::star(e))),
        ("star", Any::Env(e)) => any_out(&Any::Env(envalg::star(e))),
        _ => unreachable!("unary verbs are listed above"),
    })
}

fn rep(common: &Common, r: &RepArgs, l: Option<u32>) -> CResult<Output> {
    let f = field(common)?;
    require_root(f, "representations")?;
    if let Some(l) = l {
        let a = reps::a_type_rep(f, l)?;
        let j = json!({"l": l, "E+": json::matrix_to(&a.e_plus), "E-": json::matrix_to(&a.e_minus), "K": json::matrix_to(&a.k)});
        let t = format!("E+\n{}\nE-\n{}\nK\n{}", text::matrix(&a.e_plus), text::matrix(&a.e_minus), text::matrix(&a.k));
        return Ok(plain(j, t));
    }
    let rep = cyclic(r, f)?;
    let j = json!({
        "lambda_plus": json::scalar_to(&rep.lambda_plus),
        "a": json::scalar_to(&rep.a),
        "lambda_minus": json::scalar_to(&rep.lambda_minus),
        "M": rep.m.iter().map(json::scalar_to).collect::<Vec<_>>(),
        "Ecal+": json::scalar_to(&rep.ecal_plus),
        "Ecal-": json::scalar_to(&rep.ecal_minus),
        "K": json::matrix_to(&rep.k),
        "E+": json::matrix_to(&rep.e_plus),
        "E-": json::matrix_to(&rep.e_minus),
    });
    let t = format!(
        "lambda_minus = {}\nEcal+ = {}\nEcal- = {}\nK\n{}\nE+\n{}\nE-\n{}",
        text::scalar(&rep.lambda_minus),
        text::scalar(&rep.ecal_plus),
        text::scalar(&rep.ecal_minus),
        text::matrix(&rep.k),
        text::matrix(&rep.e_plus),
        text::matrix(&rep.e_minus)
    );
    Ok(plain(j, t))
}

fn tmatrix(common: &Common) -> CResult<Output> {
    let f = field(common)?;
    let t = reps::universal_t_sum(f)?;
    let agree = match reps::universal_t(f) {
        Ok(_) => Value::Bool(true),
        Err(Error::FormMismatch(_)) => Value::Bool(false),
        Err(e) => return Err(e.into()),
    };
    let j = json!({"sum": json::ua_tensor_to(&t), "forms_agree": agree});
    let txt = format!("{}\nforms_agree = {}", text::ua_tensor(&t), agree);
    Ok(plain(j, txt))
}

fn dmatrix(common: &Common, r: &RepArgs, n: Option<usize>, m: Option<usize>) -> CResult<Output> {
    let f = field(common)?;
    let p = require_root(f, "corepresentation matrix elements")? as usize;
    let rep = cyclic(r, f)?;
    let t = reps::universal_t_sum(f)?;
    for (name, v) in [("n", n), ("m", m)] {
        if v.is_some_and(|v| v >= p) {
            return Err(CliError::Usage(format!("--{} must be below p = {}", name, p)));
        }
    }
    match (m, n) {
        (Some(m), Some(n)) => {
            let d = reps::d_matrix(&rep, &t, m, n)?;
            Ok(plain(json::fun_to(&d), text::fun(&d)))
        }
        (None, None) => {
            let all = reps::d_all(&rep, &t)?;
            let j: Vec<Value> = all.iter().map(|row| Value::Array(row.iter().map(json::fun_to).collect())).collect();
            let mut txt = String::new();
            for (i, row) in all.iter().enumerate() {
                for (k, d) in row.iter().enumerate() {
                    txt.push_str(&format!("D[{}][{}] = {}\n", i, k, text::fun(d)));
                }
            }
            Ok(plain(Value::Array(j), txt))
        }
        _ => Err(CliError::Usage("give both --m and --n, or neither".into())),
    }
}

fn integral_cmd(common: &Common, expr: &str, side: IntegralSide) -> CResult<Output> {
    let f = field(common)?;
    require_root(f, "integrals")?;
    let a = load_fun(expr, f)?;
    Ok(match side {
        IntegralSide::T => scalar_out(&integral::i_t(&a)?),
        IntegralSide::P => scalar_out(&integral::i_p(&a)?),
        IntegralSide::C => {
            let d = integral::i_c(&a)?;
            plain(json::dist_to(&d), text::dist(&d))
        }
        IntegralSide::W => {
            let d = integral::i_w(&a)?;
            plain(json::dist_to(&d), text::dist(&d))
        }
    })
}

fn signature(common: &Common, side: SignatureSide) -> CResult<Output> {
    let f = field(common)?;
    require_root(f, "signatures")?;
    let s = match side {
        SignatureSide::Coset => integral::gram_signature(&integral::coset_gram_basis(f)?, Form::P)?,
        SignatureSide::Torus => integral::gram_signature(&integral::torus_basis(f), Form::T)?,
    };
    Ok(plain(json::signature_to(&s), text::signature(&s)))
}

/// Run one parsed command line.
pub fn execute(verb: &Verb) -> CResult<(Output, Common)> {
    let (out, common) = match verb {
        Verb::NormalForm(a) => (unary("normal-form", a)?, &a.common),
        Verb::Coproduct(a) => (unary("coproduct", a)?, &a.common),
        Verb::Antipode(a) => (unary("antipode", a)?, &a.common),
        Verb::Counit(a) => (unary("counit", a)?, &a.common),
        Verb::Star(a) => (unary("star", a)?, &a.common),
        Verb::Pair { common, expr } => (pair(common, expr)?, common),
        Verb::Act { common, expr, side } => (act(common, expr, *side)?, common),
        Verb::Rep { common, rep: r, l } => (rep(common, r, *l)?, common),
        Verb::Tmatrix { common } => (tmatrix(common)?, common),
        Verb::Dmatrix { common, rep: r, n, m } => (dmatrix(common, r, *n, *m)?, common),
        Verb::Integral { common, expr, side } => (integral_cmd(common, expr, *side)?, common),
        Verb::Signature { common, side } => (signature(common, *side)?, common),
        Verb::Orthogonality { common, seed, samples } => {
            let f = field(common)?;
            let r = verify::orthogonality_suite(f, Params { seed: *seed, samples: Some(*samples), max_deg: None })?;
            (from_report(&r, f), common)
        }
        Verb::Verify { suite, common, seed, samples, max_deg } => {
            let f = field(common)?;
            let r = verify::run(*suite, f, Params { seed: *seed, samples: *samples, max_deg: *max_deg })?;
            (from_report(&r, f), common)
        }
    };
    Ok((out, common.clone()))
}
