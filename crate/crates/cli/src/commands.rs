use std::fmt::Write as _;
use std::io::Read as _;
use std::path::Path;

use clap::ValueEnum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use steiner_ecc::census::{
    enumerate_free_trees, group_trees, verify, verify_random, Claim, GroupKey, RandomUniverse,
    VerificationReport,
};
use steiner_ecc::extremal::{self, compare_extremal, majorizes, MaxFamily};
use steiner_ecc::num::{format_decimal, format_ratio};
use steiner_ecc::steiner::{aecc3, aecc_k, ecc3_profile};
use steiner_ecc::transforms::{self, TransformOutcome};
use steiner_ecc::tree::{parse_edge_list, parse_prufer, random_tree, write_edge_list};
use steiner_ecc::{DegreeSequence, Error, Rational, SegmentSequence, Tree};

use crate::args::{BoundFamily, Command, Family, Format, OutputOpts, TransformKind, TreeSource};
use crate::Failure;

type Outcome = Result<(), Failure>;

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Compute { tree, k, out } => compute(&tree, k, &out),
        Command::Construct { family, n, m, k, delta, pi, spine, segments, out } => {
            let tree = construct(family, Params { n, m, k, delta, pi, spine, segments })?;
            emit_tree(&tree, &value_name(&family), &out)
        }
        Command::Transform { kind, tree, site_index, out } => transform(kind, &tree, site_index, &out),
        Command::Bound { pi, family, n, k, delta, out } => bound(pi, family, Params::sizes(n, k, delta), &out),
        Command::Majorize { first, second, out } => majorize(&first, &second, &out),
        Command::Enumerate { n, group, cap, out } => enumerate(n, group.as_deref(), cap, &out),
        Command::Verify { theorem, n, random_trees, min_n, max_n, seed, cap, out } => {
            let universe =
                random_trees.map(|count| RandomUniverse { seed, count, min_order: min_n, max_order: max_n });
            run_verify(&theorem, n, universe, cap, &out)
        }
    }
}

/// The command-line spelling of a value-enum variant.
fn value_name<V: ValueEnum>(v: &V) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn write_out(text: &str, out: &OutputOpts) -> Outcome {
    match &out.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

/// The tree and a short note on where it came from.
fn load_tree(src: &TreeSource) -> Result<(Tree, String), Failure> {
    let pick = &src.pick;
    if let Some(path) = &pick.input {
        let tree = parse_edge_list(&read_input(path)?)?;
        return Ok((tree, format!("file {}", path.display())));
    }
    if let Some(code) = &pick.prufer {
        let tree = Tree::from_prufer(&parse_prufer(code)?)?;
        return Ok((tree, format!("prufer {code}")));
    }
    let n = pick.random.expect("clap requires one source");
    if n == 0 {
        return Err(Failure::Usage("--random needs at least one vertex".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(src.seed);
    Ok((random_tree(n, &mut rng), format!("random n={n} seed={}", src.seed)))
}

fn seq_string(v: &[usize]) -> String {
    let parts: Vec<_> = v.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

fn parse_list(text: &str, what: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|x| x.trim().parse().map_err(|_| Failure::Usage(format!("{what}: bad entry {:?}", x.trim()))))
        .collect()
}

fn compute(src: &TreeSource, k: Option<usize>, out: &OutputOpts) -> Outcome {
    let (tree, source) = load_tree(src)?;
    let n = tree.order();
    let degrees = tree.degree_sequence();
    let segments = tree.segment_sequence().ok();
    let (ecc3, avg) = if n >= 3 { (Some(ecc3_profile(&tree)?), Some(aecc3(&tree)?)) } else { (None, None) };
    let avg_k = k.map(|k| aecc_k(&tree, k)).transpose()?;

    let text = match out.format {
        Format::Json => json_text(&json!({
            "source": source,
            "n": n,
            "degree_sequence": degrees.values(),
            "segment_sequence": segments.as_ref().map(|s| s.values()),
            "diameter": tree.diameter(),
            "radius": tree.radius(),
            "ecc3": ecc3,
            "aecc3": avg.map(|a| format_ratio(&a)),
            "aecc3_decimal": avg.map(|a| format_decimal(&a)),
            "aecc_k": avg_k.map(|a| json!({"k": k, "value": format_ratio(&a)})),
        })),
        Format::Csv => {
            let mut s = String::from("vertex,degree,ecc3\n");
            for v in tree.vertices() {
                let e = ecc3.as_ref().map(|e| e[v].to_string()).unwrap_or_default();
                writeln!(s, "{v},{},{e}", tree.degree(v)).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "source: {source}").unwrap();
            writeln!(s, "n: {n}").unwrap();
            writeln!(s, "degree sequence: {degrees}").unwrap();
            match &segments {
                Some(seg) => writeln!(s, "segment sequence: {seg}").unwrap(),
                None => writeln!(s, "segment sequence: ()").unwrap(),
            }
            writeln!(s, "diameter: {}", tree.diameter()).unwrap();
            writeln!(s, "radius: {}", tree.radius()).unwrap();
            match (&ecc3, &avg) {
                (Some(e), Some(a)) => {
                    let per: Vec<_> = e.iter().enumerate().map(|(v, x)| format!("{v}:{x}")).collect();
                    writeln!(s, "ecc3: {}", per.join(" ")).unwrap();
                    writeln!(s, "aecc3: {} ({})", format_ratio(a), format_decimal(a)).unwrap();
                }
                _ => writeln!(s, "ecc3: undefined for fewer than 3 vertices").unwrap(),
            }
            if let (Some(k), Some(a)) = (k, avg_k) {
                writeln!(s, "aecc{k}: {} ({})", format_ratio(&a), format_decimal(&a)).unwrap();
            }
            s
        }
    };
    write_out(&text, out)
}

struct Params {
    n: Option<usize>,
    m: Option<usize>,
    k: Option<usize>,
    delta: Option<usize>,
    pi: Option<String>,
    spine: Option<String>,
    segments: Option<String>,
}

impl Params {
    fn sizes(n: Option<usize>, k: Option<usize>, delta: Option<usize>) -> Self {
        Params { n, m: None, k, delta, pi: None, spine: None, segments: None }
    }
}

fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T, Failure> {
    v.clone().ok_or_else(|| Failure::Usage(format!("--{flag} is required here")))
}

fn construct(family: Family, p: Params) -> Result<Tree, Failure> {
    let tree = match family {
        Family::Path => Tree::path_graph(need(&p.n, "n")?.max(1)),
        Family::Star => Tree::star(need(&p.n, "n")?.max(1)),
        Family::Caterpillar => {
            let pi: DegreeSequence = need(&p.pi, "pi")?.parse()?;
            match &p.spine {
                Some(spine) => extremal::caterpillar_with_spine_order(&pi, &parse_list(spine, "--spine")?)?,
                None => extremal::caterpillar_from_degree_sequence(&pi)?,
            }
        }
        Family::GeneralizedStar => {
            let legs: SegmentSequence = need(&p.segments, "segments")?.parse()?;
            extremal::generalized_star(&legs)
        }
        Family::BalancedStar => extremal::balanced_star(need(&p.n, "n")?, need(&p.m, "m")?)?,
        Family::Broom => extremal::broom(need(&p.n, "n")?, need(&p.delta, "delta")?)?,
        Family::Cnk => extremal::caterpillar_cnk(need(&p.n, "n")?, need(&p.k, "k")?)?,
        Family::CnDeltaK => {
            extremal::caterpillar_cn_delta_k(need(&p.n, "n")?, need(&p.delta, "delta")?, need(&p.k, "k")?)?
        }
    };
    Ok(tree)
}

fn emit_tree(tree: &Tree, label: &str, out: &OutputOpts) -> Outcome {
    let text = match out.format {
        Format::Json => json_text(&json!({
            "family": label,
            "n": tree.order(),
            "edges": tree.edges(),
        })),
        Format::Csv => {
            let mut s = String::from("u,v\n");
            for (u, v) in tree.edges() {
                writeln!(s, "{u},{v}").unwrap();
            }
            s
        }
        Format::Text => write_edge_list(tree),
    };
    write_out(&text, out)
}

fn single_step(kind: TransformKind, tree: &Tree, site_index: usize) -> Result<TransformOutcome, Failure> {
    let missing = |what: &str, count: usize| {
        Failure::Core(Error::InvalidSite(format!(
            "site index {site_index} out of range: the tree has {count} {what} site(s)"
        )))
    };
    match kind {
        TransformKind::Sigma => {
            let sites = transforms::find_sigma_sites(tree);
            let site = sites.get(site_index).ok_or_else(|| missing("sigma", sites.len()))?;
            Ok(transforms::sigma_transform(tree, site)?)
        }
        TransformKind::Pi => {
            let sites = transforms::find_pi_sites(tree);
            let site = sites.get(site_index).ok_or_else(|| missing("pi", sites.len()))?;
            Ok(transforms::pi_transform(tree, site)?)
        }
        _ => Ok(transforms::rebalance_step(tree)?),
    }
}

fn transform(kind: TransformKind, src: &TreeSource, site_index: usize, out: &OutputOpts) -> Outcome {
    let (tree, source) = load_tree(src)?;
    let chain = match kind {
        TransformKind::Sigma | TransformKind::Pi | TransformKind::Rebalance => {
            vec![single_step(kind, &tree, site_index)?]
        }
        TransformKind::SigmaReduce => transforms::reduce_to_caterpillar(&tree)?,
        TransformKind::StarReduce => transforms::reduce_to_generalized_star(&tree)?,
        TransformKind::Balance => transforms::balance_generalized_star(&tree)?,
    };
    let start = aecc3(&tree)?;
    let last = chain.last().map_or(&tree, |o| &o.after);
    let end = aecc3(last)?;
    let kind_name = value_name(&kind);

    let text = match out.format {
        Format::Json => {
            let steps: Vec<Value> = chain
                .iter()
                .enumerate()
                .map(|(i, o)| {
                    json!({
                        "step": i + 1,
                        "move": o.step,
                        "aecc3_before": format_ratio(&o.aecc3_before),
                        "aecc3_after": format_ratio(&o.aecc3_after),
                        "cumulative_delta": format_ratio(&(o.aecc3_after - start)),
                    })
                })
                .collect();
            json_text(&json!({
                "kind": kind_name,
                "source": source,
                "initial_aecc3": format_ratio(&start),
                "final_aecc3": format_ratio(&end),
                "steps": steps,
                "final_edges": last.edges(),
                "final_is_caterpillar": last.is_caterpillar(),
                "final_is_generalized_star": last.is_generalized_star(),
            }))
        }
        Format::Csv => {
            let mut s = String::from("step,move,aecc3_before,aecc3_after,cumulative_delta\n");
            for (i, o) in chain.iter().enumerate() {
                let mv = describe_move(o);
                let delta = format_ratio(&(o.aecc3_after - start));
                writeln!(
                    s,
                    "{},\"{mv}\",{},{},{delta}",
                    i + 1,
                    format_ratio(&o.aecc3_before),
                    format_ratio(&o.aecc3_after)
                )
                .unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "source: {source}").unwrap();
            writeln!(s, "initial aecc3: {} ({})", format_ratio(&start), format_decimal(&start)).unwrap();
            for (i, o) in chain.iter().enumerate() {
                writeln!(
                    s,
                    "step {}: {}  aecc3 {} -> {}  cumulative {}",
                    i + 1,
                    describe_move(o),
                    format_ratio(&o.aecc3_before),
                    format_ratio(&o.aecc3_after),
                    format_ratio(&(o.aecc3_after - start)),
                )
                .unwrap();
            }
            if chain.is_empty() {
                writeln!(s, "no move applies").unwrap();
            }
            writeln!(s, "final aecc3: {} ({})", format_ratio(&end), format_decimal(&end)).unwrap();
            writeln!(s, "final tree:").unwrap();
            s.push_str(&write_edge_list(last));
            s
        }
    };
    write_out(&text, out)
}

fn path_string(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join("-")
}

fn describe_move(o: &TransformOutcome) -> String {
    match &o.step {
        transforms::Move::Sigma(site) => format!(
            "sigma path={} attach={} moved-below={}",
            path_string(site.path.vertices()),
            site.attach_index,
            site.off_path_vertex
        ),
        transforms::Move::Pi(site) => format!("pi path={}", path_string(site.path.vertices())),
        transforms::Move::Rebalance { center, moved_tip, receiver_tip } => {
            format!("rebalance center={center} tip {moved_tip} -> under {receiver_tip}")
        }
    }
}

fn bound(pi: Option<String>, family: Option<BoundFamily>, p: Params, out: &OutputOpts) -> Outcome {
    let (label, value): (String, Rational) = match (pi, family) {
        (Some(pi), _) => {
            let pi: DegreeSequence = pi.parse()?;
            (pi.to_string(), extremal::degree_sequence_bound(&pi)?)
        }
        (None, Some(f)) => {
            let n = need(&p.n, "n")?;
            let family = match f {
                BoundFamily::AllTrees => MaxFamily::AllTrees,
                BoundFamily::MaxDegree => MaxFamily::MaxDegree { delta: need(&p.delta, "delta")? },
                BoundFamily::MaxDegreeCount => MaxFamily::MaxDegreeCount { k: need(&p.k, "k")? },
                BoundFamily::MaxDegreeWithCount => {
                    MaxFamily::MaxDegreeWithCount { delta: need(&p.delta, "delta")?, k: need(&p.k, "k")? }
                }
            };
            (format!("{family:?} n={n}"), family.bound(n)?)
        }
        (None, None) => return Err(Failure::Usage("give --pi or --family".into())),
    };
    let text = match out.format {
        Format::Json => json_text(&json!({
            "input": label,
            "bound": format_ratio(&value),
            "decimal": format_decimal(&value),
        })),
        Format::Csv => format!("input,bound,decimal\n\"{label}\",{},{}\n", format_ratio(&value), format_decimal(&value)),
        Format::Text => format!("{label}: {} ({})\n", format_ratio(&value), format_decimal(&value)),
    };
    write_out(&text, out)
}

fn majorize(first: &str, second: &str, out: &OutputOpts) -> Outcome {
    let a = parse_list(first, "first sequence")?;
    let b = parse_list(second, "second sequence")?;
    let forward = majorizes(&a, &b)?;
    let backward = majorizes(&b, &a)?;
    // the extremal comparison only applies to tree degree sequences with a
    // vertex of degree at least 3
    let extremal = match (DegreeSequence::from_unsorted(a.clone()), DegreeSequence::from_unsorted(b.clone())) {
        (Ok(x), Ok(y)) => match compare_extremal(&x, &y) {
            Ok(ord) => Some((ord, extremal::degree_sequence_bound(&x)?, extremal::degree_sequence_bound(&y)?)),
            Err(_) => None,
        },
        _ => None,
    };
    let (sa, sb) = (seq_string(&a), seq_string(&b));
    let text = match out.format {
        Format::Json => json_text(&json!({
            "first": a,
            "second": b,
            "first_majorizes_second": forward,
            "second_majorizes_first": backward,
            "extremal": extremal.map(|(ord, x, y)| json!({
                "first_bound": format_ratio(&x),
                "second_bound": format_ratio(&y),
                "order": format!("{ord:?}").to_lowercase(),
            })),
        })),
        Format::Csv => format!(
            "first,second,first_majorizes_second,second_majorizes_first\n\"{sa}\",\"{sb}\",{forward},{backward}\n"
        ),
        Format::Text => {
            let yes = |b: bool| if b { "yes" } else { "no" };
            let mut s = format!("{sa} majorizes {sb}: {}\n{sb} majorizes {sa}: {}\n", yes(forward), yes(backward));
            if let Some((ord, x, y)) = extremal {
                writeln!(s, "extremal aecc3: {} vs {} ({ord:?})", format_ratio(&x), format_ratio(&y)).unwrap();
            }
            s
        }
    };
    write_out(&text, out)
}

fn enumerate(n: usize, group: Option<&str>, cap: usize, out: &OutputOpts) -> Outcome {
    let trees = enumerate_free_trees(n, cap)?;
    let text = match group {
        Some(g) => {
            let key: GroupKey = g.parse()?;
            let groups = group_trees(&trees, key);
            match out.format {
                Format::Json => {
                    let classes: Vec<Value> = groups
                        .iter()
                        .map(|(k, ts)| {
                            let edges: Vec<_> = ts.iter().map(Tree::edges).collect();
                            json!({"key": k.to_string(), "size": ts.len(), "trees": edges})
                        })
                        .collect();
                    json_text(&json!({"n": n, "group": key.name(), "total": trees.len(), "classes": classes}))
                }
                Format::Csv => {
                    let mut s = String::from("key,size\n");
                    for (k, ts) in &groups {
                        writeln!(s, "\"{k}\",{}", ts.len()).unwrap();
                    }
                    s
                }
                Format::Text => {
                    let mut s = String::new();
                    for (k, ts) in &groups {
                        writeln!(s, "{}={k}\t{}", key.name(), ts.len()).unwrap();
                    }
                    writeln!(s, "total\t{}", trees.len()).unwrap();
                    s
                }
            }
        }
        None => match out.format {
            Format::Json => {
                let list: Vec<Value> = trees
                    .iter()
                    .map(|t| {
                        json!({
                            "canonical": t.canonical_form(),
                            "degree_sequence": t.degree_sequence().values(),
                            "edges": t.edges(),
                        })
                    })
                    .collect();
                json_text(&json!({"n": n, "count": trees.len(), "trees": list}))
            }
            Format::Csv => {
                let mut s = String::from("index,canonical,degree_sequence,edges\n");
                for (i, t) in trees.iter().enumerate() {
                    let edges: Vec<_> = t.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                    writeln!(s, "{i},{},\"{}\",{}", t.canonical_form(), t.degree_sequence(), edges.join(" ")).unwrap();
                }
                s
            }
            Format::Text => {
                let mut s = String::new();
                for (i, t) in trees.iter().enumerate() {
                    writeln!(s, "# tree {i} {}", t.degree_sequence()).unwrap();
                    s.push_str(&write_edge_list(t));
                }
                s
            }
        },
    };
    write_out(&text, out)
}

fn run_verify(theorem: &str, n: Option<usize>, universe: Option<RandomUniverse>, cap: usize, out: &OutputOpts) -> Outcome {
    let claims: Vec<Claim> = if theorem.trim() == "all" {
        Claim::ALL.into_iter().filter(|c| universe.is_none() || c.is_move_check()).collect()
    } else {
        vec![theorem.parse()?]
    };
    let mut reports: Vec<VerificationReport> = vec![];
    for claim in claims {
        reports.push(match (&universe, n) {
            (Some(u), _) => verify_random(claim, u)?,
            (None, Some(n)) => verify(claim, n, cap)?,
            (None, None) => return Err(Failure::Usage("give --n or --random-trees".into())),
        });
    }
    let text = match out.format {
        Format::Json if reports.len() == 1 => reports[0].to_json() + "\n",
        Format::Json => json_text(&serde_json::to_value(&reports).expect("reports serialize")),
        Format::Csv => {
            let mut s = String::new();
            for (i, r) in reports.iter().enumerate() {
                let csv = r.to_csv();
                // one header for the whole stream
                let body = if i == 0 { csv.as_str() } else { csv.split_once('\n').map_or("", |x| x.1) };
                s.push_str(body);
            }
            s
        }
        Format::Text => reports.iter().map(summarize).collect(),
    };
    write_out(&text, out)?;
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        return Err(Failure::VerifyFailed(failed));
    }
    Ok(())
}

fn summarize(r: &VerificationReport) -> String {
    use steiner_ecc::census::Status;
    let count = |s: Status| {
        r.classes.iter().filter(|c| c.status == s).count() + r.comparisons.iter().filter(|c| c.status == s).count()
    };
    let scope = match (&r.n, &r.universe) {
        (Some(n), _) => format!("n={n}"),
        (None, Some(u)) => format!("{} random trees, n in {}..={}, seed {}", u.count, u.min_order, u.max_order, u.seed),
        _ => String::new(),
    };
    let mut s = format!(
        "{} {scope}: {} ({} trees; {} pass, {} vacuous, {} fail)\n",
        r.claim,
        r.status.as_str(),
        r.trees_examined,
        count(Status::Pass),
        count(Status::VacuousPass),
        count(Status::Fail),
    );
    for c in r.classes.iter().filter(|c| c.status == Status::Fail) {
        writeln!(
            s,
            "  FAIL {}: observed {} claimed {}",
            c.key,
            c.extremal_value.as_deref().unwrap_or("-"),
            c.claimed_value.as_deref().unwrap_or("-")
        )
        .unwrap();
        for t in &c.counterexamples {
            writeln!(s, "    counterexample {} aecc3 {} edges {:?}", t.canonical, t.aecc3, t.edges).unwrap();
        }
    }
    for c in r.comparisons.iter().filter(|c| c.status == Status::Fail) {
        writeln!(
            s,
            "  FAIL {} {} {}: observed {} vs {}, formula {} vs {}",
            c.left,
            c.expected.symbol(),
            c.right,
            c.left_observed,
            c.right_observed,
            c.left_formula,
            c.right_formula
        )
        .unwrap();
    }
    for f in &r.findings {
        writeln!(s, "  note: {f}").unwrap();
    }
    s
}
