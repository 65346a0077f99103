//! Categorical expressions: parse, elaborate against a model, evaluate.
//!
//! Composition is written in diagrammatic order with `;`, so `f ; g` first
//! does `f` then `g`. Structural maps take their objects explicitly:
//! `id(X)`, `t(X)`, `z(X)`, `zero(X,Y)`, `inj(0, X + Y)`, `proj(1, X * Y)`,
//! `p0(A,B)`. Everything else takes maps: `rest(f)`, `comp(e)`,
//! `pair(f,g)`, `cpair(f,g)`, `copair(f,g,...)`, `join(f,g)`, `rc(g,f)`,
//! `dec(f)`, `classify(f)`, `kleisli(f)`, `unkleisli(k)`, `split(e)`.

use std::collections::BTreeMap;

use rcwb_core::calg::{calg_classify, calg_complement, calg_join, calg_relative_complement, CalgMap, CalgModel};
use rcwb_core::classical;
use rcwb_core::finpar::{FinParModel, FinSet, PartialMap};
use rcwb_core::kleisli::{from_kleisli, to_kleisli, KleisliMap, KleisliModel};
use rcwb_core::rescat::Model;
use rcwb_core::splitting::{
    restriction_coproduct_from_amp, restriction_product_from_amp, split_idempotent, Splitting,
};

use crate::lex::{tokenize, Cursor, Span, Tok};
use crate::model_file::parse_obj_expr;
use crate::CliError;

#[derive(Clone, Debug)]
pub enum Value {
    Par(PartialMap),
    Kle(KleisliMap),
    Split(Splitting),
    Bridge {
        kind: &'static str,
        mid: FinSet,
        first: PartialMap,
        second: PartialMap,
    },
    Calg(CalgMap),
}

impl Value {
    pub fn render(&self) -> String {
        match self {
            Value::Par(f) => format!("{} : {} -> {}", f, f.dom().name(), f.cod().name()),
            Value::Kle(k) => format!("{} : {} -> {}", k, k.dom().name(), k.cod().name()),
            Value::Split(s) => format!(
                "split through {} with r = {}, s = {}",
                s.mid.name(),
                s.retraction,
                s.section
            ),
            Value::Bridge { kind, mid, first, second } => format!(
                "{kind} {} with legs {} and {}",
                mid.name(),
                first,
                second
            ),
            Value::Calg(h) => format!("{} : {} -> {}", h, h.dom(), h.cod()),
        }
    }
}

#[derive(Clone, Debug)]
enum Ast {
    Name(String, Span),
    Seq(Box<Ast>, Box<Ast>, Span),
    Call(String, Vec<Arg>, Span),
}

#[derive(Clone, Debug)]
enum Arg {
    Map(Ast),
    Obj(FinSet),
    Index(usize),
}

/// Which argument shapes each builtin takes: objects, an index, or maps.
fn arity(func: &str) -> Option<(&'static [u8], bool)> {
    // encoding per argument: 0 = object expression, 1 = map, 2 = index
    const OBJ1: &[u8] = &[0];
    const OBJ2: &[u8] = &[0, 0];
    const MAP1: &[u8] = &[1];
    const MAP2: &[u8] = &[1, 1];
    const IDX_OBJ: &[u8] = &[2, 0];
    match func {
        "id" | "t" | "z" => Some((OBJ1, false)),
        "zero" => Some((OBJ2, false)),
        "p0" | "p1" | "prod_from_amp" | "coprod_from_amp" => Some((OBJ2, false)),
        "rest" | "comp" | "dec" | "classify" | "kleisli" | "unkleisli" | "split" => {
            Some((MAP1, false))
        }
        "pair" | "cpair" | "rc" => Some((MAP2, false)),
        "join" | "copair" => Some((MAP1, true)),
        "inj" | "qproj" | "proj" => Some((IDX_OBJ, false)),
        _ => None,
    }
}

pub struct Evaluator<'a> {
    pub finpar: &'a FinParModel,
    pub atoms: BTreeMap<String, FinSet>,
}

impl<'a> Evaluator<'a> {
    pub fn new(finpar: &'a FinParModel) -> Evaluator<'a> {
        let atoms = finpar
            .atoms()
            .iter()
            .map(|a| (a.name().to_string(), a.clone()))
            .collect();
        Evaluator { finpar, atoms }
    }

    pub fn eval_text(&self, text: &str) -> Result<Value, CliError> {
        let mut cur = Cursor::new(tokenize(text)?);
        let ast = self.parse_seq(&mut cur)?;
        if !cur.at_end() {
            return Err(CliError::parse(cur.span(), "trailing input after expression".into()));
        }
        self.eval(&ast)
    }

    fn parse_seq(&self, cur: &mut Cursor) -> Result<Ast, CliError> {
        let mut acc = self.parse_atom(cur)?;
        while cur.peek() == Some(&Tok::Semi) {
            let (_, span) = cur.next().expect("peeked");
            let rhs = self.parse_atom(cur)?;
            acc = Ast::Seq(Box::new(acc), Box::new(rhs), span);
        }
        Ok(acc)
    }

    fn parse_atom(&self, cur: &mut Cursor) -> Result<Ast, CliError> {
        let span = cur.span();
        match cur.next() {
            Some((Tok::LParen, _)) => {
                let inner = self.parse_seq(cur)?;
                cur.expect(&Tok::RParen)?;
                Ok(inner)
            }
            Some((Tok::Ident(name), sp)) => {
                if cur.peek() == Some(&Tok::LParen) {
                    if let Some((shape, variadic)) = arity(&name) {
                        cur.next();
                        let args = self.parse_args(cur, shape, variadic, sp)?;
                        cur.expect(&Tok::RParen)?;
                        return Ok(Ast::Call(name, args, sp));
                    }
                    return Err(CliError::parse(sp, format!("unknown operation `{name}`")));
                }
                Ok(Ast::Name(name, sp))
            }
            Some((tok, sp)) => Err(CliError::parse(sp, format!("expected an expression, found {tok}"))),
            None => Err(CliError::parse(span, "expected an expression, found end of input".into())),
        }
    }

    fn parse_args(
        &self,
        cur: &mut Cursor,
        shape: &[u8],
        variadic: bool,
        span: Span,
    ) -> Result<Vec<Arg>, CliError> {
        let mut args = Vec::new();
        let mut i = 0;
        loop {
            let kind = if i < shape.len() {
                shape[i]
            } else if variadic {
                *shape.last().expect("shape nonempty")
            } else {
                return Err(CliError::parse(cur.span(), "too many arguments".into()));
            };
            let arg = match kind {
                0 => Arg::Obj(parse_obj_expr(cur, &self.atoms)?),
                1 => Arg::Map(self.parse_seq(cur)?),
                _ => {
                    let sp = cur.span();
                    match cur.next() {
                        Some((Tok::Digits(d), _)) => Arg::Index(d.parse().map_err(|_| {
                            CliError::parse(sp, format!("bad index `{d}`"))
                        })?),
                        Some((tok, sp)) => {
                            return Err(CliError::parse(sp, format!("expected an index, found {tok}")))
                        }
                        None => return Err(CliError::parse(sp, "expected an index".into())),
                    }
                }
            };
            args.push(arg);
            i += 1;
            if cur.peek() == Some(&Tok::Comma) {
                cur.next();
            } else {
                break;
            }
        }
        if args.len() < shape.len() {
            return Err(CliError::parse(span, "too few arguments".into()));
        }
        Ok(args)
    }

    fn eval(&self, ast: &Ast) -> Result<Value, CliError> {
        match ast {
            Ast::Name(name, span) => self
                .finpar
                .lookup_map(name)
                .cloned()
                .map(Value::Par)
                .ok_or_else(|| CliError::eval(*span, format!("unknown map `{name}`"))),
            Ast::Seq(lhs, rhs, span) => {
                let l = self.eval(lhs)?;
                let r = self.eval(rhs)?;
                match (l, r) {
                    (Value::Par(f), Value::Par(g)) => f
                        .compose(&g)
                        .map(Value::Par)
                        .map_err(|e| CliError::eval(*span, e.to_string())),
                    (Value::Kle(f), Value::Kle(g)) => {
                        let km = KleisliModel::new(self.finpar.clone());
                        km.compose(&f, &g)
                            .map(Value::Kle)
                            .map_err(|e| CliError::eval(*span, e.to_string()))
                    }
                    _ => Err(CliError::eval(
                        *span,
                        "composition needs two maps of the same kind".into(),
                    )),
                }
            }
            Ast::Call(func, args, span) => self.eval_call(func, args, *span),
        }
    }

    fn map_arg(&self, args: &[Arg], i: usize, span: Span) -> Result<PartialMap, CliError> {
        match &args[i] {
            Arg::Map(ast) => match self.eval(ast)? {
                Value::Par(f) => Ok(f),
                other => Err(CliError::eval(
                    span,
                    format!("expected a partial map, found {}", other.render()),
                )),
            },
            _ => Err(CliError::eval(span, "expected a map argument".into())),
        }
    }

    fn obj_arg(&self, args: &[Arg], i: usize, span: Span) -> Result<FinSet, CliError> {
        match &args[i] {
            Arg::Obj(o) => Ok(o.clone()),
            _ => Err(CliError::eval(span, "expected an object argument".into())),
        }
    }

    fn eval_call(&self, func: &str, args: &[Arg], span: Span) -> Result<Value, CliError> {
        let m = self.finpar;
        let fail = |e: rcwb_core::Error| CliError::eval(span, e.to_string());
        match func {
            "id" => Ok(Value::Par(PartialMap::identity(&self.obj_arg(args, 0, span)?))),
            "t" => Ok(Value::Par(PartialMap::terminal(&self.obj_arg(args, 0, span)?))),
            "z" => Ok(Value::Par(PartialMap::from_initial(&self.obj_arg(args, 0, span)?))),
            "zero" => Ok(Value::Par(PartialMap::zero(
                &self.obj_arg(args, 0, span)?,
                &self.obj_arg(args, 1, span)?,
            ))),
            "rest" => Ok(match self.any_map(args, 0, span)? {
                Value::Par(f) => Value::Par(f.restriction()),
                Value::Kle(k) => {
                    let km = KleisliModel::new(m.clone());
                    Value::Kle(km.restriction(&k))
                }
                other => {
                    return Err(CliError::eval(
                        span,
                        format!("rest needs a map, found {}", other.render()),
                    ))
                }
            }),
            "comp" => {
                let e = self.map_arg(args, 0, span)?;
                classical::complement(m, &e).map(Value::Par).map_err(fail)
            }
            "pair" => {
                let f = self.map_arg(args, 0, span)?;
                let g = self.map_arg(args, 1, span)?;
                f.pair(&g).map(Value::Par).map_err(fail)
            }
            "cpair" => {
                let f = self.map_arg(args, 0, span)?;
                let g = self.map_arg(args, 1, span)?;
                classical::classical_pair(m, &f, &g).map(Value::Par).map_err(fail)
            }
            "copair" => {
                let fs: Vec<PartialMap> = (0..args.len())
                    .map(|i| self.map_arg(args, i, span))
                    .collect::<Result<_, _>>()?;
                PartialMap::copair(&fs).map(Value::Par).map_err(fail)
            }
            "join" => {
                let fs: Vec<PartialMap> = (0..args.len())
                    .map(|i| self.map_arg(args, i, span))
                    .collect::<Result<_, _>>()?;
                if fs.is_empty() {
                    return Err(CliError::eval(span, "join needs at least one map".into()));
                }
                PartialMap::join_family(&fs, fs[0].dom(), fs[0].cod())
                    .map(Value::Par)
                    .map_err(fail)
            }
            "rc" => {
                let g = self.map_arg(args, 0, span)?;
                let f = self.map_arg(args, 1, span)?;
                g.relative_complement(&f).map(Value::Par).map_err(fail)
            }
            "dec" => {
                let f = self.map_arg(args, 0, span)?;
                f.decision().map(Value::Par).map_err(fail)
            }
            "classify" => {
                let f = self.map_arg(args, 0, span)?;
                classical::classify(m, &f).map(Value::Par).map_err(fail)
            }
            "kleisli" => {
                let f = self.map_arg(args, 0, span)?;
                Ok(Value::Kle(to_kleisli(&f)))
            }
            "unkleisli" => match self.any_map(args, 0, span)? {
                Value::Kle(k) => Ok(Value::Par(from_kleisli(&k))),
                other => Err(CliError::eval(
                    span,
                    format!("unkleisli needs a kleisli map, found {}", other.render()),
                )),
            },
            "split" => {
                let e = self.map_arg(args, 0, span)?;
                split_idempotent(&e).map(Value::Split).map_err(fail)
            }
            "prod_from_amp" => {
                let a = self.obj_arg(args, 0, span)?;
                let b = self.obj_arg(args, 1, span)?;
                let (mid, first, second) =
                    restriction_product_from_amp(m, &a, &b).map_err(fail)?;
                Ok(Value::Bridge { kind: "restriction product", mid, first, second })
            }
            "coprod_from_amp" => {
                let a = self.obj_arg(args, 0, span)?;
                let b = self.obj_arg(args, 1, span)?;
                let (mid, first, second) =
                    restriction_coproduct_from_amp(m, &a, &b).map_err(fail)?;
                Ok(Value::Bridge { kind: "restriction coproduct", mid, first, second })
            }
            "p0" | "p1" => {
                let a = self.obj_arg(args, 0, span)?;
                let b = self.obj_arg(args, 1, span)?;
                let i = if func == "p0" { 0 } else { 1 };
                classical::classical_projection(m, &a, &b, i)
                    .map(Value::Par)
                    .map_err(fail)
            }
            "inj" | "qproj" => {
                let j = self.idx_arg(args, 0, span)?;
                let o = self.obj_arg(args, 1, span)?;
                let parts = o
                    .summands()
                    .ok_or_else(|| CliError::eval(span, format!("{} is not a coproduct", o.name())))?
                    .to_vec();
                let built = if func == "inj" {
                    PartialMap::inj(&parts, j)
                } else {
                    PartialMap::qproj(&parts, j)
                };
                built.map(Value::Par).map_err(fail)
            }
            "proj" => {
                let i = self.idx_arg(args, 0, span)?;
                let o = self.obj_arg(args, 1, span)?;
                let (a, b) = o
                    .factors()
                    .ok_or_else(|| CliError::eval(span, format!("{} is not a product", o.name())))?;
                PartialMap::proj(a, b, i).map(Value::Par).map_err(fail)
            }
            other => Err(CliError::eval(span, format!("unknown operation `{other}`"))),
        }
    }

    fn any_map(&self, args: &[Arg], i: usize, span: Span) -> Result<Value, CliError> {
        match &args[i] {
            Arg::Map(ast) => self.eval(ast),
            _ => Err(CliError::eval(span, "expected a map argument".into())),
        }
    }

    fn idx_arg(&self, args: &[Arg], i: usize, span: Span) -> Result<usize, CliError> {
        match &args[i] {
            Arg::Index(j) => Ok(*j),
            _ => Err(CliError::eval(span, "expected an index argument".into())),
        }
    }
}

/// Expression evaluation for the ring model: named homs with the formula
/// operations.
pub struct CalgEvaluator<'a> {
    pub maps: &'a BTreeMap<String, CalgMap>,
}

impl<'a> CalgEvaluator<'a> {
    pub fn eval_text(&self, text: &str) -> Result<Value, CliError> {
        let mut cur = Cursor::new(tokenize(text)?);
        let v = self.parse_seq(&mut cur)?;
        if !cur.at_end() {
            return Err(CliError::parse(cur.span(), "trailing input after expression".into()));
        }
        Ok(Value::Calg(v))
    }

    fn parse_seq(&self, cur: &mut Cursor) -> Result<CalgMap, CliError> {
        let mut acc = self.parse_atom(cur)?;
        let cm = CalgModel::new(8);
        while cur.peek() == Some(&Tok::Semi) {
            let (_, span) = cur.next().expect("peeked");
            let rhs = self.parse_atom(cur)?;
            acc = cm
                .compose(&acc, &rhs)
                .map_err(|e| CliError::eval(span, e.to_string()))?;
        }
        Ok(acc)
    }

    fn parse_atom(&self, cur: &mut Cursor) -> Result<CalgMap, CliError> {
        let span = cur.span();
        match cur.next() {
            Some((Tok::LParen, _)) => {
                let inner = self.parse_seq(cur)?;
                cur.expect(&Tok::RParen)?;
                Ok(inner)
            }
            Some((Tok::Ident(name), sp)) => {
                if cur.peek() == Some(&Tok::LParen) {
                    cur.next();
                    let out = self.call(&name, cur, sp)?;
                    cur.expect(&Tok::RParen)?;
                    return Ok(out);
                }
                self.maps
                    .get(&name)
                    .cloned()
                    .ok_or_else(|| CliError::eval(sp, format!("unknown map `{name}`")))
            }
            Some((tok, sp)) => Err(CliError::parse(sp, format!("expected an expression, found {tok}"))),
            None => Err(CliError::parse(span, "expected an expression".into())),
        }
    }

    fn call(&self, func: &str, cur: &mut Cursor, span: Span) -> Result<CalgMap, CliError> {
        let fail = |e: rcwb_core::Error| CliError::eval(span, e.to_string());
        match func {
            "rest" => {
                let f = self.parse_seq(cur)?;
                Ok(rcwb_core::calg::corestriction(&f))
            }
            "comp" => {
                let e = self.parse_seq(cur)?;
                calg_complement(&e).map_err(fail)
            }
            "join" => {
                let f = self.parse_seq(cur)?;
                cur.expect(&Tok::Comma)?;
                let g = self.parse_seq(cur)?;
                calg_join(&f, &g).map_err(fail)
            }
            "rc" => {
                let g = self.parse_seq(cur)?;
                cur.expect(&Tok::Comma)?;
                let f = self.parse_seq(cur)?;
                calg_relative_complement(&g, &f).map_err(fail)
            }
            "classify" => {
                let f = self.parse_seq(cur)?;
                Ok(calg_classify(&f))
            }
            other => Err(CliError::eval(span, format!("unknown ring operation `{other}`"))),
        }
    }
}
