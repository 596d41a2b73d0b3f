use std::fs;
use std::path::Path;
use std::sync::Arc;

use clap::ValueEnum;
use cwfkit_core::catalog::{self, skeletonize};
use cwfkit_core::io::{self, Kind};
use cwfkit_core::relu::{cwf_from_rep_gaunt, cwf_to_relu, forget, relu_to_cwf, rep_map_check, transfer_universe_split};
use cwfkit_core::structures::{cwf_to_split_typecat, split_typecat_to_cwf, term_structure_iso};
use cwfkit_core::{Error, FinCat, Finding, Presheaf, Result};
use serde::Deserialize;

use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    CwfToSty,
    StyToCwf,
    CwfToRelu,
    ReluToCwf,
    RepToCwfGaunt,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Malformed(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Malformed(format!("cannot write {}: {e}", path.display())))
}

fn finish(report: Report, body: impl FnOnce(Report) -> Result<Report>) -> Report {
    let fallback = report.clone();
    body(report).unwrap_or_else(|e| fallback.error(&e))
}

/// Category laws first, then presheaf laws.
fn layered(c: &FinCat, presheaves: &[&Presheaf]) -> Vec<Finding> {
    let out = c.check();
    if !out.is_empty() {
        return out;
    }
    presheaves.iter().flat_map(|p| p.check()).collect()
}

fn first_nonempty(layers: Vec<Vec<Finding>>) -> Vec<Finding> {
    layers.into_iter().find(|l| !l.is_empty()).unwrap_or_default()
}

pub fn check(kind: &str, file: &Path) -> Report {
    let report = Report::new("check", format!("{kind} {}", file.display()));
    finish(report, |report| {
        let kind = Kind::parse(kind)?;
        let text = read(file)?;
        let findings = match kind {
            Kind::Category => io::read_category(&text)?.check(),
            Kind::Presheaf => {
                let p = io::read_presheaf(&text)?;
                layered(p.base(), &[&p])
            }
            Kind::ObjExt => {
                let o = io::read_obj_ext(&text)?;
                first_nonempty(vec![layered(o.base(), &[o.ty()]), o.check()])
            }
            Kind::Term => {
                let y = io::read_term(&text)?;
                let o = y.over();
                first_nonempty(vec![layered(o.base(), &[o.ty(), y.tm()]), o.check(), y.check()])
            }
            Kind::Cwf => {
                let w = io::read_cwf(&text)?;
                let (o, y) = (w.obj_ext(), w.term());
                first_nonempty(vec![layered(o.base(), &[o.ty(), y.tm()]), w.check()])
            }
            Kind::Qq => {
                let z = io::read_qq(&text)?;
                let o = z.over();
                first_nonempty(vec![layered(o.base(), &[o.ty()]), o.check(), z.check()])
            }
            Kind::SplitTypecat => {
                let t = io::read_split_typecat(&text)?;
                let o = t.obj_ext();
                first_nonempty(vec![layered(o.base(), &[o.ty()]), t.check()])
            }
            Kind::RepMap => {
                let p = io::read_rep_map(&text)?;
                first_nonempty(vec![p.target().base().check(), rep_map_check(&p)])
            }
            Kind::RelUniverse => {
                let u = io::read_rel_universe(&text)?;
                let p = &u.data.p;
                let base = p.target().base();
                let pre = first_nonempty(vec![layered(base, &[p.source(), p.target()]), p.check()]);
                if pre.is_empty() {
                    u.check()?
                } else {
                    pre
                }
            }
            Kind::Square => {
                let square_doc = io::read_square(&text)?;
                let found = square_doc.base.check();
                if found.is_empty() {
                    square_doc.build()?.check_alpha()?;
                }
                found
            }
            Kind::Skeleton => {
                let sk = io::read_skeleton(&text)?;
                first_nonempty(vec![sk.original.check(), sk.check()])
            }
        };
        Ok(report.findings(&findings))
    })
}

pub fn convert(direction: Direction, input: &Path, output: &Path, roundtrip: bool) -> Report {
    let name = direction.to_possible_value().expect("no skipped variants").get_name().to_string();
    let report = Report::new("convert", format!("{name} {}", input.display()));
    finish(report, |mut report| {
        let text = read(input)?;
        let (out_text, trip) = match direction {
            Direction::CwfToSty => {
                let w = io::read_cwf(&text)?;
                let bad = w.check();
                if !bad.is_empty() {
                    return Ok(report.findings(&bad));
                }
                let t = cwf_to_split_typecat(&w)?;
                let trip = if roundtrip {
                    let back = split_typecat_to_cwf(&t)?;
                    Some(if back == w {
                        "exact"
                    } else if term_structure_iso(w.term(), back.term())?.is_some() {
                        "iso"
                    } else {
                        return Err(Error::Inconsistent("round trip is not isomorphic to the input".into()));
                    })
                } else {
                    None
                };
                (io::write_split_typecat(&t), trip)
            }
            Direction::StyToCwf => {
                let t = io::read_split_typecat(&text)?;
                let bad = t.check();
                if !bad.is_empty() {
                    return Ok(report.findings(&bad));
                }
                let w = split_typecat_to_cwf(&t)?;
                let trip = roundtrip.then(|| exact(cwf_to_split_typecat(&w)? == t)).transpose()?;
                (io::write_cwf(&w), trip)
            }
            Direction::CwfToRelu => {
                let w = io::read_cwf(&text)?;
                let bad = w.check();
                if !bad.is_empty() {
                    return Ok(report.findings(&bad));
                }
                let u = cwf_to_relu(&w)?;
                let trip = roundtrip.then(|| exact(relu_to_cwf(&u)? == w)).transpose()?;
                (io::write_rel_universe(&u)?, trip)
            }
            Direction::ReluToCwf => {
                let u = io::read_rel_universe(&text)?;
                let bad = u.check()?;
                if !bad.is_empty() {
                    return Ok(report.findings(&bad));
                }
                let w = relu_to_cwf(&u)?;
                let trip = roundtrip.then(|| exact(cwf_to_relu(&w)? == u)).transpose()?;
                (io::write_cwf(&w), trip)
            }
            Direction::RepToCwfGaunt => {
                let p = io::read_rep_map(&text)?;
                let bad = rep_map_check(&p);
                if !bad.is_empty() {
                    return Ok(report.findings(&bad));
                }
                let w = cwf_from_rep_gaunt(&p)?;
                let trip = roundtrip.then(|| exact(forget(&w) == p)).transpose()?;
                (io::write_cwf(&w), trip)
            }
        };
        write(output, &out_text)?;
        report.note(format!("wrote {}", output.display()));
        if let Some(t) = trip {
            report.note(format!("round trip: {t}"));
        }
        Ok(report)
    })
}

fn exact(same: bool) -> Result<&'static str> {
    if same {
        Ok("exact")
    } else {
        Err(Error::Inconsistent("round trip does not reproduce the input".into()))
    }
}

pub fn transfer(square: &Path, universe: &Path, output: &Path) -> Report {
    let report = Report::new("transfer", format!("{} along {}", universe.display(), square.display()));
    finish(report, |mut report| {
        let square_doc = io::read_square(&read(square)?)?;
        let u = io::read_rel_universe(&read(universe)?)?;
        let bad = square_doc.base.check();
        if !bad.is_empty() {
            return Ok(report.findings(&bad));
        }
        let bad = u.check()?;
        if !bad.is_empty() {
            return Ok(report.findings(&bad));
        }
        let sq = square_doc.build()?;
        let moved = transfer_universe_split(&sq, &u)?;
        if let Some(f) = moved.check()?.first() {
            return Err(Error::Inconsistent(format!("transferred universe fails: {f}")));
        }
        write(output, &io::write_rel_universe(&moved)?)?;
        report.note(format!(
            "transferred {} J-pullbacks onto a base with {} objects",
            moved.table.len(),
            sq.r.target().objects()
        ));
        report.note(format!("wrote {}", output.display()));
        Ok(report)
    })
}

pub fn skeletonize_cmd(input: &Path, output: &Path) -> Report {
    let report = Report::new("skeletonize", input.display().to_string());
    finish(report, |mut report| {
        let c = io::read_category(&read(input)?)?;
        let bad = c.check();
        if !bad.is_empty() {
            return Ok(report.findings(&bad));
        }
        let sk = skeletonize(&c);
        if let Some(f) = sk.check().first() {
            return Err(Error::Inconsistent(format!("skeleton data fails: {f}")));
        }
        write(output, &io::write_skeleton(&sk))?;
        report.note(format!(
            "{} objects collapse to {}",
            c.objects(),
            sk.skeleton.objects()
        ));
        match sk.gaunt_completion() {
            Ok(_) => report.note("skeleton is gaunt"),
            Err(e) => report.note(e.to_string()),
        }
        report.note(format!("wrote {}", output.display()));
        Ok(report)
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DagSpec {
    objects: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PreorderSpec {
    objects: usize,
    relations: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MonoidSpec {
    table: Vec<Vec<usize>>,
}

fn param_file<T: for<'de> Deserialize<'de>>(name: &str, params: &[String]) -> Result<T> {
    let [path] = params else {
        return Err(Error::Malformed(format!("catalog {name} takes one parameter file")));
    };
    serde_json::from_str(&read(Path::new(path))?).map_err(|e| Error::Malformed(format!("{name} parameters: {e}")))
}

fn catalog_entry(name: &str, params: &[String]) -> Result<FinCat> {
    match name {
        "dag" => {
            let d: DagSpec = param_file(name, params)?;
            catalog::free_category(d.objects, &d.edges)
        }
        "preorder" => {
            let d: PreorderSpec = param_file(name, params)?;
            catalog::preorder(d.objects, &d.relations)
        }
        "monoid" => {
            let d: MonoidSpec = param_file(name, params)?;
            catalog::monoid(&d.table)
        }
        _ => {
            let param = match params {
                [] => None,
                [n] => Some(
                    n.parse::<usize>()
                        .map_err(|_| Error::Malformed(format!("catalog parameter {n} is not a number")))?,
                ),
                _ => return Err(Error::Malformed(format!("catalog {name} takes at most one parameter"))),
            };
            catalog::builtin(name, param)
        }
    }
}

/// `args` is the parameter list followed by the output path.
pub fn catalog_cmd(name: &str, args: &[String]) -> Report {
    let report = Report::new("catalog", name.to_string());
    finish(report, |mut report| {
        let (output, params) = args
            .split_last()
            .ok_or_else(|| Error::Malformed("catalog needs an output path".into()))?;
        let c = Arc::new(catalog_entry(name, params)?);
        if let Some(f) = c.check().first() {
            return Err(Error::Inconsistent(format!("catalog entry {name} fails: {f}")));
        }
        write(Path::new(output), &io::write_category(&c))?;
        report.note(format!("{} objects, {} arrows", c.objects(), c.arrow_count()));
        report.note(format!("wrote {output}"));
        Ok(report)
    })
}
