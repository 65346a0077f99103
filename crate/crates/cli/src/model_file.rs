//! The model text format.
//!
//! ```text
//! # comments run to the end of the line
//! object X = { x0, x1 }
//! object Y = { y0 }
//! map f : X -> Y { x0 -> y0 }
//! map g : X * Y -> X { (x0,y0) -> x0 }
//! ```
//!
//! Omitted elements are undefined. Constructed objects are referenced in
//! type positions with `X * Y`, `X + Y`, `amp(X,Y)`, `one` and `zero`. In
//! ring mode, objects are declared as `object A = bring(2)` and map tables
//! use bit-vector literals over the full carrier.

use std::collections::BTreeMap;

use rcwb_core::calg::{BoolRing, CalgMap};
use rcwb_core::finpar::{Elem, FinParModel, FinSet, PartialMap};

use crate::lex::{tokenize, Cursor, Tok};
use crate::CliError;

/// Parse an object expression against a set of declared atoms.
pub fn parse_obj_expr(
    cur: &mut Cursor,
    atoms: &BTreeMap<String, FinSet>,
) -> Result<FinSet, CliError> {
    let first = parse_obj_term(cur, atoms)?;
    let mut parts = vec![first];
    while cur.peek() == Some(&Tok::Plus) {
        cur.next();
        parts.push(parse_obj_term(cur, atoms)?);
    }
    if parts.len() == 1 {
        Ok(parts.pop().expect("one part"))
    } else {
        Ok(FinSet::coprod(&parts))
    }
}

fn parse_obj_term(
    cur: &mut Cursor,
    atoms: &BTreeMap<String, FinSet>,
) -> Result<FinSet, CliError> {
    let mut acc = parse_obj_factor(cur, atoms)?;
    while cur.peek() == Some(&Tok::Star) {
        cur.next();
        let rhs = parse_obj_factor(cur, atoms)?;
        acc = acc.prod(&rhs);
    }
    Ok(acc)
}

fn parse_obj_factor(
    cur: &mut Cursor,
    atoms: &BTreeMap<String, FinSet>,
) -> Result<FinSet, CliError> {
    let span = cur.span();
    match cur.next() {
        Some((Tok::LParen, _)) => {
            let inner = parse_obj_expr(cur, atoms)?;
            cur.expect(&Tok::RParen)?;
            Ok(inner)
        }
        Some((Tok::Ident(name), sp)) => match name.as_str() {
            "one" => Ok(FinSet::one()),
            "zero" => Ok(FinSet::zero()),
            "amp" => {
                cur.expect(&Tok::LParen)?;
                let a = parse_obj_expr(cur, atoms)?;
                cur.expect(&Tok::Comma)?;
                let b = parse_obj_expr(cur, atoms)?;
                cur.expect(&Tok::RParen)?;
                Ok(a.amp(&b))
            }
            _ => atoms.get(&name).cloned().ok_or_else(|| {
                CliError::parse(sp, format!("unknown object `{name}`"))
            }),
        },
        Some((tok, sp)) => Err(CliError::parse(sp, format!("expected an object, found {tok}"))),
        None => Err(CliError::parse(span, "expected an object, found end of input".into())),
    }
}

/// Parse an element literal: `x0`, `*`, `(x0,y0)`, `1:x0`.
pub fn parse_elem(cur: &mut Cursor) -> Result<Elem, CliError> {
    let span = cur.span();
    match cur.next() {
        Some((Tok::Star, _)) => Ok(Elem::Unit),
        Some((Tok::LParen, _)) => {
            let a = parse_elem(cur)?;
            cur.expect(&Tok::Comma)?;
            let b = parse_elem(cur)?;
            cur.expect(&Tok::RParen)?;
            Ok(Elem::pair(a, b))
        }
        Some((Tok::Digits(d), sp)) => {
            if cur.peek() == Some(&Tok::Colon) {
                cur.next();
                let inner = parse_elem(cur)?;
                let j: usize = d
                    .parse()
                    .map_err(|_| CliError::parse(sp, format!("bad summand index `{d}`")))?;
                Ok(Elem::tagged(j, inner))
            } else {
                Ok(Elem::Label(d))
            }
        }
        Some((Tok::Ident(s), _)) => Ok(Elem::Label(s)),
        Some((tok, sp)) => Err(CliError::parse(sp, format!("expected an element, found {tok}"))),
        None => Err(CliError::parse(span, "expected an element, found end of input".into())),
    }
}

/// A parsed model file in partial-function mode.
pub fn parse_model(text: &str) -> Result<FinParModel, CliError> {
    let mut cur = Cursor::new(tokenize(text)?);
    let mut atoms: BTreeMap<String, FinSet> = BTreeMap::new();
    let mut order: Vec<FinSet> = Vec::new();
    let mut maps: Vec<(String, PartialMap)> = Vec::new();
    let mut map_names: Vec<String> = Vec::new();
    while !cur.at_end() {
        let (kw, kw_span) = cur.expect_ident()?;
        match kw.as_str() {
            "object" => {
                let (name, name_span) = cur.expect_ident()?;
                if atoms.contains_key(&name) || matches!(name.as_str(), "one" | "zero" | "amp") {
                    return Err(CliError::validation(
                        &name,
                        "object name is already taken",
                        name_span,
                    ));
                }
                cur.expect(&Tok::Eq)?;
                cur.expect(&Tok::LBrace)?;
                let mut labels: Vec<String> = Vec::new();
                if cur.peek() != Some(&Tok::RBrace) {
                    loop {
                        let span = cur.span();
                        match cur.next() {
                            Some((Tok::Ident(l), _)) => labels.push(l),
                            Some((Tok::Digits(l), _)) => labels.push(l),
                            Some((tok, sp)) => {
                                return Err(CliError::parse(
                                    sp,
                                    format!("expected an element label, found {tok}"),
                                ))
                            }
                            None => {
                                return Err(CliError::parse(span, "unterminated object".into()))
                            }
                        }
                        if cur.peek() == Some(&Tok::Comma) {
                            cur.next();
                        } else {
                            break;
                        }
                    }
                }
                cur.expect(&Tok::RBrace)?;
                let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
                let atom = FinSet::atom(&name, &refs)
                    .map_err(|e| CliError::validation(&name, &e.to_string(), name_span))?;
                atoms.insert(name, atom.clone());
                order.push(atom);
            }
            "map" => {
                let (name, name_span) = cur.expect_ident()?;
                if map_names.contains(&name) {
                    return Err(CliError::validation(&name, "map name is already taken", name_span));
                }
                cur.expect(&Tok::Colon)?;
                let dom = parse_obj_expr(&mut cur, &atoms)?;
                cur.expect(&Tok::Arrow)?;
                let cod = parse_obj_expr(&mut cur, &atoms)?;
                cur.expect(&Tok::LBrace)?;
                let mut pairs: Vec<(Elem, Elem)> = Vec::new();
                if cur.peek() != Some(&Tok::RBrace) {
                    loop {
                        let k = parse_elem(&mut cur)?;
                        cur.expect(&Tok::Arrow)?;
                        let v = parse_elem(&mut cur)?;
                        pairs.push((k, v));
                        if cur.peek() == Some(&Tok::Comma) {
                            cur.next();
                        } else {
                            break;
                        }
                    }
                }
                cur.expect(&Tok::RBrace)?;
                let map = PartialMap::from_pairs(dom, cod, &pairs)
                    .map_err(|e| CliError::validation(&name, &e.to_string(), name_span))?;
                map_names.push(name.clone());
                maps.push((name, map));
            }
            other => {
                return Err(CliError::parse(
                    kw_span,
                    format!("expected `object` or `map`, found `{other}`"),
                ));
            }
        }
    }
    let mut model = FinParModel::new(order);
    for (name, map) in maps {
        model.insert_map(&name, map);
    }
    Ok(model)
}

/// Print a model in the text format; parsing the output again yields an
/// equal model.
pub fn print_model(model: &FinParModel) -> String {
    let mut out = String::new();
    for atom in model.atoms() {
        let labels: Vec<String> = atom.elements().iter().map(|e| e.to_string()).collect();
        out.push_str(&format!("object {} = {{ {} }}\n", atom.name(), labels.join(", ")));
    }
    for (name, map) in model.named_maps() {
        out.push_str(&map.printed(name));
        out.push('\n');
    }
    out
}

/// A parsed model file in ring mode: named rings and named homomorphisms.
pub struct CalgFile {
    pub rings: BTreeMap<String, BoolRing>,
    pub maps: BTreeMap<String, CalgMap>,
    pub max_rank: u8,
}

pub fn parse_calg_model(text: &str) -> Result<CalgFile, CliError> {
    let mut cur = Cursor::new(tokenize(text)?);
    let mut rings: BTreeMap<String, BoolRing> = BTreeMap::new();
    let mut maps: BTreeMap<String, CalgMap> = BTreeMap::new();
    let mut max_rank = 0u8;
    while !cur.at_end() {
        let (kw, kw_span) = cur.expect_ident()?;
        match kw.as_str() {
            "object" => {
                let (name, name_span) = cur.expect_ident()?;
                if rings.contains_key(&name) {
                    return Err(CliError::validation(&name, "object name is already taken", name_span));
                }
                cur.expect(&Tok::Eq)?;
                let (bkw, bsp) = cur.expect_ident()?;
                if bkw != "bring" {
                    return Err(CliError::parse(bsp, "ring objects are declared as bring(n)".into()));
                }
                cur.expect(&Tok::LParen)?;
                let rank = expect_digits(&mut cur)?;
                cur.expect(&Tok::RParen)?;
                if rank > 8 {
                    return Err(CliError::validation(&name, "rank is too large", name_span));
                }
                let ring = BoolRing::new(rank as u8);
                max_rank = max_rank.max(rank as u8);
                rings.insert(name, ring);
            }
            "map" => {
                let (name, name_span) = cur.expect_ident()?;
                cur.expect(&Tok::Colon)?;
                let (dn, dsp) = cur.expect_ident()?;
                let dom = *rings
                    .get(&dn)
                    .ok_or_else(|| CliError::parse(dsp, format!("unknown object `{dn}`")))?;
                cur.expect(&Tok::Arrow)?;
                let (cn, csp) = cur.expect_ident()?;
                let cod = *rings
                    .get(&cn)
                    .ok_or_else(|| CliError::parse(csp, format!("unknown object `{cn}`")))?;
                cur.expect(&Tok::LBrace)?;
                let mut table = vec![None; cod.carrier_size()];
                if cur.peek() != Some(&Tok::RBrace) {
                    loop {
                        let (k, ksp) = expect_bits(&mut cur, cod.rank())?;
                        cur.expect(&Tok::Arrow)?;
                        let (v, _) = expect_bits(&mut cur, dom.rank())?;
                        if table[k as usize].is_some() {
                            return Err(CliError::parse(ksp, "carrier element mapped twice".into()));
                        }
                        table[k as usize] = Some(v);
                        if cur.peek() == Some(&Tok::Comma) {
                            cur.next();
                        } else {
                            break;
                        }
                    }
                }
                cur.expect(&Tok::RBrace)?;
                let table: Vec<u16> = table
                    .into_iter()
                    .enumerate()
                    .map(|(i, v)| {
                        v.ok_or_else(|| {
                            CliError::validation(
                                &name,
                                &format!("table misses carrier element {i:0width$b}", width = cod.rank() as usize),
                                name_span,
                            )
                        })
                    })
                    .collect::<Result<_, _>>()?;
                let map = CalgMap::new(dom, cod, table)
                    .map_err(|e| CliError::validation(&name, &e.to_string(), name_span))?;
                maps.insert(name, map);
            }
            other => {
                return Err(CliError::parse(
                    kw_span,
                    format!("expected `object` or `map`, found `{other}`"),
                ));
            }
        }
    }
    Ok(CalgFile { rings, maps, max_rank })
}

fn expect_digits(cur: &mut Cursor) -> Result<usize, CliError> {
    let span = cur.span();
    match cur.next() {
        Some((Tok::Digits(d), sp)) => d
            .parse()
            .map_err(|_| CliError::parse(sp, format!("bad number `{d}`"))),
        Some((tok, sp)) => Err(CliError::parse(sp, format!("expected a number, found {tok}"))),
        None => Err(CliError::parse(span, "expected a number".into())),
    }
}

/// A bit-vector literal of exactly `rank` binary digits, least significant
/// bit first.
fn expect_bits(cur: &mut Cursor, rank: u8) -> Result<(u16, crate::lex::Span), CliError> {
    let span = cur.span();
    match cur.next() {
        Some((Tok::Digits(d), sp)) => {
            if d.len() != rank as usize || !d.chars().all(|c| c == '0' || c == '1') {
                return Err(CliError::parse(
                    sp,
                    format!("expected a bit-vector of length {rank}, found `{d}`"),
                ));
            }
            let mut v = 0u16;
            for (i, c) in d.chars().enumerate() {
                if c == '1' {
                    v |= 1 << i;
                }
            }
            Ok((v, sp))
        }
        Some((Tok::Ident(d), sp)) if rank == 0 && d.is_empty() => {
            Err(CliError::parse(sp, "empty bit-vector".into()))
        }
        Some((tok, sp)) => Err(CliError::parse(sp, format!("expected a bit-vector, found {tok}"))),
        None => Err(CliError::parse(span, "expected a bit-vector".into())),
    }
}
