use std::fs;
use std::io::{self, Write};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use quiddity::dissection::{
    build_dissection, find_triangulation, quad_elimination_rewrite, random_dissection, render_svg,
    triangulate, Cell, Dissection, Kind,
};
use quiddity::enumerate::{
    classify, classify_parallel, default_evidence_bound, evidence_scan, for_each_solution,
    work_estimate, ClassificationReport, SearchConfig, Shard, DEFAULT_WORK_BOUND,
};
use quiddity::expected::{expected_entries, parse_expected, verify_against};
use quiddity::monomial::{
    all_twos_closed_form, all_twos_product, irreducibility_theorem_check, minimal_monomial,
    perfect_square_family, prime_power_experiment,
};
use quiddity::seq::{canonical_transform, format_seq, parse_bigints, parse_residues};
use quiddity::solution::{check_solution_integer, is_integer_irreducible};
use quiddity::{
    check_solution, eval_mn, find_decomposition, oplus, DecompositionWitness, Dihedral, Error,
    Integers, Modulus, Sign, Solution, Zn,
};

use crate::{Command, Failure, Format, Global, ShardArgs};

type Run = Result<bool, Failure>;

pub fn run(g: &Global, command: &Command, out: &mut Vec<u8>) -> Run {
    match command {
        Command::Check { seq } => check(g, out, seq),
        Command::Sum { a, b } => sum(g, out, a, b),
        Command::Canon { seq } => canon(g, out, seq),
        Command::Reduce { seq } => reduce(g, out, seq),
        Command::Enumerate { sizes, shard } => enumerate(g, out, sizes, shard),
        Command::Classify {
            sizes,
            irreducible_only,
            witnesses,
            compare,
            shard,
        } => classify_cmd(
            g,
            out,
            sizes,
            *irreducible_only,
            *witnesses,
            compare.as_deref(),
            shard,
        ),
        Command::Verify { list } => verify(g, out, list.as_deref()),
        Command::Monomial {
            k,
            square,
            power,
            all_twos,
        } => monomial(g, out, *k, *square, power.as_deref(), *all_twos),
        Command::Dissect {
            seq,
            random,
            seed,
            rewrite,
        } => dissect(g, out, seq.as_deref(), *random, *seed, *rewrite),
        Command::Triangulate { seq } => triangulate_cmd(g, out, seq),
        Command::Evidence { n_max } => evidence(g, out, *n_max),
    }
}

fn formats(g: &Global, name: &str, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&g.format) {
        Ok(())
    } else {
        let f = format!("{:?}", g.format).to_lowercase();
        Err(Failure::usage(format!(
            "--format {f} is not supported by `{name}`"
        )))
    }
}

fn modulus(g: &Global) -> Result<Modulus, Failure> {
    let n = g
        .modulus
        .ok_or_else(|| Failure::usage("missing --modulus (or QUIDDITY_MODULUS)"))?;
    Ok(Modulus::new(n)?)
}

fn ring(g: &Global) -> Result<Zn, Failure> {
    Ok(modulus(g)?.modular()?)
}

fn work_bound(g: &Global) -> u128 {
    match g.work_bound {
        Some(b) => {
            eprintln!("warning: work bound overridden to {b} (default {DEFAULT_WORK_BOUND}); runs may take long");
            b
        }
        None => DEFAULT_WORK_BOUND,
    }
}

fn residues(ring: &Zn, text: &str) -> Result<Vec<u32>, Failure> {
    let seq = parse_residues(ring, text)?;
    if seq.is_empty() {
        return Err(Error::EmptySequence.into());
    }
    Ok(seq)
}

fn integers(text: &str) -> Result<Vec<BigInt>, Failure> {
    let seq = parse_bigints(text)?;
    if seq.is_empty() {
        return Err(Error::EmptySequence.into());
    }
    Ok(seq)
}

fn parse_sizes(text: &str) -> Result<Vec<usize>, Failure> {
    let bad = || Failure::usage(format!("bad size `{text}`: expected `n` or `a-b`"));
    let (lo, hi) = match text.split_once('-') {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let n = text.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

fn shard(args: &ShardArgs) -> Result<Option<Shard>, Failure> {
    match (args.shard_index, args.shard_count) {
        (Some(i), Some(c)) => Ok(Some(Shard::new(args.shard_depth, i, c)?)),
        _ => Ok(None),
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::usage(e.to_string()))
}

fn print_json(out: &mut Vec<u8>, v: &impl serde::Serialize) {
    out.extend(
        serde_json::to_string_pretty(v)
            .expect("serializable")
            .into_bytes(),
    );
    out.push(b'\n');
}

fn csv_out(out: &mut Vec<u8>) -> csv::Writer<&mut Vec<u8>> {
    csv::Writer::from_writer(out)
}

fn flush(mut w: csv::Writer<&mut Vec<u8>>) -> Result<(), Failure> {
    w.flush()?;
    Ok(())
}

fn csv_err(e: csv::Error) -> Failure {
    Failure {
        code: 2,
        message: e.to_string(),
    }
}

fn tuple<T: std::fmt::Display>(seq: &[T]) -> String {
    format!("({})", format_seq(seq))
}

fn sign_text(sign: Option<Sign>) -> String {
    match sign {
        Some(s) => format!("solution, sign={:+}", s.value()),
        None => "not a solution".to_string(),
    }
}

fn big_json(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn bigs_json(seq: &[BigInt]) -> Value {
    Value::Array(seq.iter().map(big_json).collect())
}

fn transform_text(t: Dihedral) -> String {
    format!(
        "rotation {}{}",
        t.rotation,
        if t.reflected { ", reflected" } else { "" }
    )
}

fn witness_text(w: &DecompositionWitness) -> String {
    format!(
        "{} ⊕ {} after {}",
        tuple(&w.left.seq),
        tuple(&w.right.seq),
        transform_text(w.transform)
    )
}

fn check(g: &Global, out: &mut Vec<u8>, text: &str) -> Run {
    formats(g, "check", &[Format::Text, Format::Json])?;
    let m = modulus(g)?;
    if m.is_integer() {
        let seq = integers(text)?;
        let sign = check_solution_integer(&seq);
        let irreducible = sign.is_some() && is_integer_irreducible(&seq);
        match g.format {
            Format::Json => print_json(
                out,
                &json!({
                    "modulus": 0,
                    "seq": bigs_json(&seq),
                    "solution": sign.is_some(),
                    "sign": sign,
                    "irreducible": irreducible,
                }),
            ),
            _ => {
                writeln!(out, "{}", sign_text(sign))?;
                writeln!(out, "M_n = {}", eval_mn(&Integers, &seq))?;
                if sign.is_some() {
                    writeln!(
                        out,
                        "{}",
                        if irreducible {
                            "irreducible over Z"
                        } else {
                            "reducible over Z"
                        }
                    )?;
                }
            }
        }
        return Ok(sign.is_some());
    }
    let ring = m.modular()?;
    let seq = residues(&ring, text)?;
    let sign = check_solution(&ring, &seq);
    match g.format {
        Format::Json => print_json(
            out,
            &json!({
                "modulus": ring.modulus(),
                "seq": seq,
                "solution": sign.is_some(),
                "sign": sign,
            }),
        ),
        _ => {
            writeln!(out, "{}", sign_text(sign))?;
            writeln!(out, "M_n = {}", eval_mn(&ring, &seq))?;
        }
    }
    Ok(sign.is_some())
}

fn sum(g: &Global, out: &mut Vec<u8>, a: &str, b: &str) -> Run {
    formats(g, "sum", &[Format::Text, Format::Json])?;
    let m = modulus(g)?;
    if m.is_integer() {
        let (a, b) = (integers(a)?, integers(b)?);
        let s = oplus(&Integers, &a, &b)?;
        let sign = check_solution_integer(&s);
        match g.format {
            Format::Json => print_json(
                out,
                &json!({
                    "modulus": 0, "a": bigs_json(&a), "b": bigs_json(&b), "sum": bigs_json(&s), "sign": sign,
                }),
            ),
            _ => writeln!(out, "{}\n{}", tuple(&s), sign_text(sign))?,
        }
        return Ok(true);
    }
    let ring = m.modular()?;
    let (a, b) = (residues(&ring, a)?, residues(&ring, b)?);
    let s = oplus(&ring, &a, &b)?;
    let sign = check_solution(&ring, &s);
    match g.format {
        Format::Json => print_json(
            out,
            &json!({
                "modulus": ring.modulus(), "a": a, "b": b, "sum": s, "sign": sign,
            }),
        ),
        _ => writeln!(out, "{}\n{}", tuple(&s), sign_text(sign))?,
    }
    Ok(true)
}

fn canon(g: &Global, out: &mut Vec<u8>, text: &str) -> Run {
    formats(g, "canon", &[Format::Text, Format::Json])?;
    let m = modulus(g)?;
    let (t, rep) = if m.is_integer() {
        let seq = integers(text)?;
        let (t, rep) = canonical_transform(&seq);
        (t, bigs_json(&rep))
    } else {
        let seq = residues(&m.modular()?, text)?;
        let (t, rep) = canonical_transform(&seq);
        (t, json!(rep))
    };
    match g.format {
        Format::Json => print_json(out, &json!({ "canonical": rep, "transform": t })),
        _ => {
            let entries: Vec<String> = rep
                .as_array()
                .unwrap()
                .iter()
                .map(|v| v.to_string().replace('"', ""))
                .collect();
            writeln!(out, "({})", entries.join(","))?;
            writeln!(out, "{}", transform_text(t))?;
        }
    }
    Ok(true)
}

fn reduce(g: &Global, out: &mut Vec<u8>, text: &str) -> Run {
    formats(g, "reduce", &[Format::Text, Format::Json])?;
    let ring = ring(g)?;
    let seq = residues(&ring, text)?;
    let w = find_decomposition(&ring, &seq, None)?;
    match g.format {
        Format::Json => print_json(
            out,
            &json!({
                "modulus": ring.modulus(),
                "seq": seq,
                "irreducible": w.is_none(),
                "witness": w,
            }),
        ),
        _ => match &w {
            Some(w) => writeln!(out, "reducible: {}", witness_text(w))?,
            None => writeln!(out, "irreducible")?,
        },
    }
    Ok(true)
}

fn collect_solutions(
    ring: &Zn,
    n: usize,
    shard: Option<Shard>,
    args: &ShardArgs,
) -> Result<Vec<Solution>, Failure> {
    let run = |s: Option<&Shard>| {
        let mut out = Vec::new();
        for_each_solution(ring, n, s, |seq, sign| {
            out.push(Solution {
                seq: seq.to_vec(),
                sign,
            })
        });
        out
    };
    if shard.is_some() || args.jobs <= 1 {
        return Ok(run(shard.as_ref()));
    }
    let count = args.jobs * 4;
    let shards = (0..count)
        .map(|i| Shard::new(args.shard_depth, i, count))
        .collect::<Result<Vec<_>, _>>()?;
    let mut all: Vec<Solution> =
        pool(args.jobs)?.install(|| shards.par_iter().flat_map(|s| run(Some(s))).collect());
    all.sort_by(|a, b| a.seq.cmp(&b.seq));
    Ok(all)
}

fn enumerate(g: &Global, out: &mut Vec<u8>, sizes: &str, args: &ShardArgs) -> Run {
    formats(g, "enumerate", &[Format::Text, Format::Json, Format::Csv])?;
    let ring = ring(g)?;
    let sizes = parse_sizes(sizes)?;
    let bound = work_bound(g);
    let estimate: u128 = sizes
        .iter()
        .map(|&n| work_estimate(ring.modulus(), n))
        .sum();
    if estimate > bound {
        return Err(Error::WorkBound { estimate, bound }.into());
    }
    let shard = shard(args)?;
    let mut per_size = Vec::new();
    for &n in &sizes {
        let sols = collect_solutions(&ring, n, shard, args)?;
        eprintln!("n={n}: {} solutions", sols.len());
        per_size.push((n, sols));
    }
    match g.format {
        Format::Json => print_json(
            out,
            &json!({
                "modulus": ring.modulus(),
                "shard": shard,
                "sizes": per_size.iter().map(|(n, s)| json!({ "n": n, "count": s.len(), "solutions": s })).collect::<Vec<_>>(),
            }),
        ),
        Format::Csv => {
            let mut w = csv_out(out);
            w.write_record(["n", "sign", "seq"]).map_err(csv_err)?;
            for (n, sols) in &per_size {
                for s in sols {
                    w.write_record([
                        n.to_string(),
                        s.sign.value().to_string(),
                        format_seq(&s.seq),
                    ])
                    .map_err(csv_err)?;
                }
            }
            flush(w)?;
        }
        _ => {
            for (_, sols) in &per_size {
                for s in sols {
                    writeln!(out, "{} {:+}", tuple(&s.seq), s.sign.value())?;
                }
            }
        }
    }
    Ok(true)
}

fn classify_cmd(
    g: &Global,
    out: &mut Vec<u8>,
    sizes: &str,
    irreducible_only: bool,
    witnesses: bool,
    compare: Option<&std::path::Path>,
    args: &ShardArgs,
) -> Run {
    formats(g, "classify", &[Format::Text, Format::Json, Format::Csv])?;
    let ring = ring(g)?;
    let mut config = SearchConfig::new(ring, parse_sizes(sizes)?);
    config.irreducible_only = irreducible_only;
    config.keep_witnesses = witnesses;
    config.work_bound = work_bound(g);
    config.shard = shard(args)?;
    let report = if config.shard.is_none() && args.jobs > 1 {
        pool(args.jobs)?.install(|| classify_parallel(&config, args.shard_depth, args.jobs * 4))?
    } else {
        classify(&config)?
    };
    eprintln!("classified in {:.2}s", report.elapsed);
    let report = report.without_timing();
    match g.format {
        Format::Json => print_json(out, &report),
        Format::Csv => {
            let mut w = csv_out(out);
            w.write_record(["n", "class", "rep", "left", "right"])
                .map_err(csv_err)?;
            for s in &report.sizes {
                for r in &s.irreducible {
                    w.write_record([
                        s.n.to_string(),
                        "irreducible".into(),
                        format_seq(r),
                        String::new(),
                        String::new(),
                    ])
                    .map_err(csv_err)?;
                }
                for r in &s.reducible {
                    let (l, rt) = match &r.witness {
                        Some(w) => (format_seq(&w.left.seq), format_seq(&w.right.seq)),
                        None => (String::new(), String::new()),
                    };
                    w.write_record([
                        s.n.to_string(),
                        "reducible".into(),
                        format_seq(&r.rep),
                        l,
                        rt,
                    ])
                    .map_err(csv_err)?;
                }
            }
            flush(w)?;
        }
        _ => {
            for s in &report.sizes {
                writeln!(
                    out,
                    "n={}: {} solutions, {} classes, {} irreducible ({} up to rotation), {} reducible",
                    s.n,
                    s.solution_count,
                    s.total_classes,
                    s.irreducible.len(),
                    s.irreducible_rotation_classes,
                    s.reducible_count
                )?;
                for r in &s.irreducible {
                    writeln!(out, "  irreducible {}", tuple(r))?;
                }
                for r in &s.reducible {
                    match &r.witness {
                        Some(w) => {
                            writeln!(out, "  reducible   {} = {}", tuple(&r.rep), witness_text(w))?
                        }
                        None => writeln!(out, "  reducible   {}", tuple(&r.rep))?,
                    }
                }
            }
        }
    }
    let Some(path) = compare else {
        return Ok(true);
    };
    let saved: ClassificationReport = serde_json::from_str(&fs::read_to_string(path)?)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let saved = saved.without_timing();
    if saved == report {
        eprintln!("matches {}", path.display());
        return Ok(true);
    }
    if saved.modulus != report.modulus {
        eprintln!("mismatch: modulus {} vs {}", report.modulus, saved.modulus);
    }
    for s in &report.sizes {
        match saved.size(s.n) {
            Some(t) if t == s => {}
            Some(_) => eprintln!("mismatch at n={}", s.n),
            None => eprintln!("mismatch: n={} not in {}", s.n, path.display()),
        }
    }
    for t in &saved.sizes {
        if report.size(t.n).is_none() {
            eprintln!("mismatch: n={} only in {}", t.n, path.display());
        }
    }
    Ok(false)
}

fn verify(g: &Global, out: &mut Vec<u8>, list: Option<&std::path::Path>) -> Run {
    formats(g, "verify", &[Format::Text, Format::Json, Format::Csv])?;
    let ring = ring(g)?;
    let entries = match list {
        Some(p) => parse_expected(&ring, &fs::read_to_string(p)?)?,
        None => expected_entries(ring.modulus())?,
    };
    let mut r = verify_against(&ring, &entries, work_bound(g))?;
    eprintln!("verified in {:.2}s", r.elapsed);
    r.elapsed = 0.0;
    match g.format {
        Format::Json => print_json(out, &r),
        Format::Csv => {
            let mut w = csv_out(out);
            w.write_record(["n", "listed", "classes", "rotation_classes"])
                .map_err(csv_err)?;
            for s in &r.per_size {
                w.write_record(
                    [s.n, s.listed, s.classes, s.rotation_classes].map(|x| x.to_string()),
                )
                .map_err(csv_err)?;
            }
            flush(w)?;
        }
        _ => {
            writeln!(out, "{}", r.summary())?;
            for s in &r.per_size {
                writeln!(
                    out,
                    "  n={}: {} classes ({} up to rotation), {} listed",
                    s.n, s.classes, s.rotation_classes, s.listed
                )?;
            }
        }
    }
    Ok(r.pass)
}

fn monomial(
    g: &Global,
    out: &mut Vec<u8>,
    k: Option<i64>,
    square: Option<u32>,
    power: Option<&str>,
    all_twos: Option<usize>,
) -> Run {
    if let Some(n) = all_twos {
        formats(g, "monomial --all-twos", &[Format::Text, Format::Json])?;
        let m = all_twos_product(n);
        let closed = all_twos_closed_form(n as u64);
        let ok = m == closed;
        match g.format {
            Format::Json => print_json(
                out,
                &json!({
                    "n": n,
                    "product": [[big_json(&m.a), big_json(&m.b)], [big_json(&m.c), big_json(&m.d)]],
                    "matches_closed_form": ok,
                }),
            ),
            _ => writeln!(
                out,
                "M_{n}(2,...,2) = {m}; {}",
                if ok {
                    "matches [[n+1,-n],[n,1-n]]"
                } else {
                    "MISMATCH"
                }
            )?,
        }
        return Ok(ok);
    }
    if let Some(l) = square {
        formats(g, "monomial --square", &[Format::Text, Format::Json])?;
        let (ring, sol) = perfect_square_family(l)?;
        match g.format {
            Format::Json => print_json(
                out,
                &json!({ "l": l, "modulus": ring.modulus(), "solution": sol }),
            ),
            _ => writeln!(
                out,
                "({l},...,{l}) of length {} is a solution mod {}, sign={:+}",
                sol.len(),
                ring.modulus(),
                sol.sign.value()
            )?,
        }
        return Ok(true);
    }
    if let Some(p) = power {
        formats(g, "monomial --power", &[Format::Text, Format::Json])?;
        let bad = || Failure::usage(format!("bad --power `{p}`: expected `l^e`"));
        let (l, e) = p.split_once('^').ok_or_else(bad)?;
        let (l, e): (u32, u32) = (
            l.trim().parse().map_err(|_| bad())?,
            e.trim().parse().map_err(|_| bad())?,
        );
        let o = prime_power_experiment(l, e, work_bound(g))?;
        match g.format {
            Format::Json => print_json(out, &o),
            _ => {
                writeln!(
                    out,
                    "experimental: ({l},...,{l}) of length {} mod {}",
                    o.length, o.modulus
                )?;
                writeln!(
                    out,
                    "  minimal {l}-constant solution has size {} ({})",
                    o.minimal_size,
                    if o.is_minimal { "this one" } else { "shorter" }
                )?;
                let irr = match o.irreducible {
                    Some(true) => "irreducible",
                    Some(false) => "reducible",
                    None => "not decided within the work bound",
                };
                writeln!(out, "  {irr}")?;
            }
        }
        return Ok(true);
    }
    let ring = ring(g)?;
    if let Some(k) = k {
        formats(g, "monomial --k", &[Format::Text, Format::Json])?;
        let r = minimal_monomial(&ring, ring.reduce(k))?;
        match g.format {
            Format::Json => print_json(out, &r),
            _ => {
                let status = match &r.witness {
                    Some(w) => format!("reducible: {}", witness_text(w)),
                    None if r.irreducible => "irreducible".into(),
                    None => "size < 3".into(),
                };
                writeln!(
                    out,
                    "k={} mod {}: minimal size {}, {status}",
                    r.k, r.modulus, r.minimal_size
                )?;
            }
        }
        return Ok(true);
    }
    formats(g, "monomial", &[Format::Text, Format::Json, Format::Csv])?;
    let c = irreducibility_theorem_check(&ring)?;
    match g.format {
        Format::Json => print_json(out, &c),
        Format::Csv => {
            let mut w = csv_out(out);
            w.write_record(["k", "minimal_size", "irreducible"])
                .map_err(csv_err)?;
            for r in &c.records {
                w.write_record([
                    r.k.to_string(),
                    r.minimal_size.to_string(),
                    r.irreducible.to_string(),
                ])
                .map_err(csv_err)?;
            }
            flush(w)?;
        }
        _ => {
            for r in &c.records {
                let status = if r.irreducible {
                    "irreducible"
                } else {
                    "reducible"
                };
                writeln!(out, "k={}: minimal size {}, {status}", r.k, r.minimal_size)?;
            }
            for l in &c.lines {
                writeln!(
                    out,
                    "{} {}",
                    if l.pass { "PASS" } else { "FAIL" },
                    l.statement
                )?;
            }
        }
    }
    Ok(c.pass)
}

fn print_dissection(g: &Global, out: &mut Vec<u8>, d: &Dissection) -> Result<(), Failure> {
    match g.format {
        Format::Json => print_json(out, d),
        Format::Svg => write!(out, "{}", render_svg(d))?,
        _ => {
            writeln!(
                out,
                "{} dissection of the {}-gon: {} triangles, {} quadrilaterals",
                d.kind,
                d.n,
                d.triangle_count(),
                d.quad_count()
            )?;
            writeln!(out, "quiddity {}", tuple(&d.quiddity()?))?;
            print_cells(out, &d.cells)?;
            for [i, j] in &d.pairs {
                writeln!(out, "  cells {i} and {j} form a split quadrilateral")?;
            }
        }
    }
    Ok(())
}

fn print_cells(out: &mut Vec<u8>, cells: &[Cell]) -> io::Result<()> {
    for (i, c) in cells.iter().enumerate() {
        match c.weight {
            Some(w) => writeln!(out, "  {i}: {} weight {w}", tuple(&c.vertices))?,
            None => writeln!(out, "  {i}: {}", tuple(&c.vertices))?,
        }
    }
    Ok(())
}

fn dissect(
    g: &Global,
    out: &mut Vec<u8>,
    seq: Option<&str>,
    random: Option<usize>,
    seed: u64,
    rewrite: bool,
) -> Run {
    formats(g, "dissect", &[Format::Text, Format::Json, Format::Svg])?;
    let ring = ring(g)?;
    let kind = Kind::for_modulus(ring.modulus())?;
    let mut d = match (random, seq) {
        (Some(n), _) => {
            if n < 3 {
                return Err(Failure::usage("--random needs at least 3 vertices"));
            }
            random_dissection(n, kind, seed)
        }
        (None, Some(text)) => build_dissection(kind, &residues(&ring, text)?)?,
        (None, None) => return Err(Failure::usage("give a sequence or --random")),
    };
    if rewrite {
        d = quad_elimination_rewrite(&d)?;
    }
    print_dissection(g, out, &d)?;
    Ok(true)
}

fn triangulate_cmd(g: &Global, out: &mut Vec<u8>, text: &str) -> Run {
    let ring = ring(g)?;
    let seq = residues(&ring, text)?;
    if let Ok(kind) = Kind::for_modulus(ring.modulus()) {
        formats(g, "triangulate", &[Format::Text, Format::Json, Format::Svg])?;
        let d = triangulate(kind, &seq)?;
        print_dissection(g, out, &d)?;
        return Ok(true);
    }
    formats(g, "triangulate", &[Format::Text, Format::Json])?;
    eprintln!("experimental: exhaustive search over triangulations with weights ±1");
    let found = find_triangulation(&ring, &seq)?;
    match g.format {
        Format::Json => print_json(
            out,
            &json!({ "modulus": ring.modulus(), "seq": seq, "cells": found }),
        ),
        _ => match &found {
            Some(cells) => {
                writeln!(out, "triangulation with {} triangles", cells.len())?;
                print_cells(out, cells)?;
            }
            None => writeln!(out, "no triangulation found")?,
        },
    }
    Ok(found.is_some())
}

fn evidence(g: &Global, out: &mut Vec<u8>, n_max: Option<usize>) -> Run {
    formats(g, "evidence", &[Format::Text, Format::Json, Format::Csv])?;
    let ring = ring(g)?;
    let n_max = n_max.unwrap_or_else(|| default_evidence_bound(ring.modulus()));
    let r = evidence_scan(&ring, n_max, work_bound(g))?;
    match g.format {
        Format::Json => print_json(out, &r),
        Format::Csv => {
            let mut w = csv_out(out);
            w.write_record(["n", "irreducible_classes"])
                .map_err(csv_err)?;
            for (n, c) in &r.counts {
                w.write_record([n.to_string(), c.to_string()])
                    .map_err(csv_err)?;
            }
            flush(w)?;
        }
        _ => {
            writeln!(out, "{}", r.note)?;
            for (n, c) in &r.counts {
                writeln!(out, "  n={n}: {c} irreducible classes")?;
            }
            match r.max_irreducible_size {
                Some(m) => writeln!(out, "largest irreducible size seen: {m}")?,
                None => writeln!(out, "no irreducible class seen")?,
            }
            writeln!(
                out,
                "irreducible class above size N={}: {}",
                r.modulus,
                if r.above_modulus { "seen" } else { "not seen" }
            )?;
        }
    }
    Ok(true)
}
