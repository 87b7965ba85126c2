//! Subcommand implementations.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::path::Path;

use num_rational::Ratio;
use serde::{de::DeserializeOwned, Serialize};
use serde_json::{json, Value};

use hyperconifold::classify::{canonical_form, diagram_of, exceptional_scan, identify_from_matrix, HyperconifoldClass};
use hyperconifold::fan::{PointKind, ToricDiagram};
use hyperconifold::mirror::{
    factor_singularities_excluded, format_complex, independent_node_search, mirror_nodes, mirror_polynomial, Complex64,
};
use hyperconifold::resolve::{crepant_resolution, enumerate_crepant_resolutions, Resolution};
use hyperconifold::transition::{transition_report, HodgeData};

use crate::input::{parse_seed, GroupSpec, MatrixFile};
use crate::report::*;
use crate::{ClassArgs, CliError, Command, Format, GlobalArgs};

const SIG_DIGITS: usize = 12;

pub fn dispatch(global: &GlobalArgs, command: &Command) -> Result<String, CliError> {
    if global.format == Format::Svg && !matches!(command, Command::Diagram { .. }) {
        return Err(CliError::invalid("svg output is only available for the diagram command"));
    }
    match command {
        Command::Classify(c) => classify(global, *c),
        Command::Diagram { class, resolve } => diagram(global, *class, resolve.as_deref()),
        Command::Resolve { class, enumerate } => resolve(global, *class, *enumerate),
        Command::Mirror { class, grid } => mirror(global, *class, *grid),
        Command::Transition { class, h11, h21, group, seeds } => {
            transition(global, *class, HodgeData::new(*h11, *h21), group, seeds)
        }
        Command::Identify { matrix } => identify(global, matrix),
        Command::ScanExceptional { n_max } => scan(global, *n_max),
    }
}

fn class_inputs(c: ClassArgs) -> BTreeMap<String, Value> {
    BTreeMap::from([("n".to_string(), json!(c.n)), ("k".to_string(), json!(c.k))])
}

fn emit<P: Serialize + DeserializeOwned>(
    global: &GlobalArgs,
    command: &str,
    inputs: BTreeMap<String, Value>,
    payload: P,
    warnings: Vec<String>,
    text: impl FnOnce(&P) -> String,
) -> String {
    match global.format {
        Format::Text => text(&payload),
        _ => {
            let mut env = Envelope::new(command, inputs, payload);
            env.warnings = warnings;
            env.to_json()
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::invalid(format!("cannot read {}: {e}", path.display())))
}

fn star_resolution(global: &GlobalArgs, c: &HyperconifoldClass) -> Result<Resolution, CliError> {
    Ok(crepant_resolution(c, global.seed_order.as_deref())?)
}

fn classify(global: &GlobalArgs, args: ClassArgs) -> Result<String, CliError> {
    let c = canonical_form(args.n, args.k)?;
    let payload = ClassifyPayload {
        input: ClassPair { n: args.n as u64, k: args.k.rem_euclid(args.n) as u64 },
        canonical: ClassPair::from(&c),
        label: class_label(&c),
        orbit: c.orbit().to_vec(),
        lens_space: c.lens_label(),
        conifold: c.is_conifold(),
        diagram_vertices: c.diagram().vertices().iter().map(point).collect(),
    };
    Ok(emit(global, "classify", class_inputs(args), payload, Vec::new(), |p| {
        format!(
            "{} (canonical ({}, {})), orbit {:?}, lens space {}\n",
            p.label, p.canonical.n, p.canonical.k, p.orbit, p.lens_space
        )
    }))
}

fn resolution_by_choice(global: &GlobalArgs, c: &HyperconifoldClass, choice: &str) -> Result<Resolution, CliError> {
    if choice == "star" {
        return star_resolution(global, c);
    }
    let index: usize = choice
        .parse()
        .map_err(|_| CliError::invalid(format!("--resolve takes a 1-based index or \"star\", got {choice:?}")))?;
    let all = enumerate_crepant_resolutions(c, global.enum_bound)?;
    if index == 0 || index > all.len() {
        return Err(CliError::invalid(format!("resolution index {index} out of range 1..={}", all.len())));
    }
    Ok(all[index - 1].clone())
}

fn diagram(global: &GlobalArgs, args: ClassArgs, resolve: Option<&str>) -> Result<String, CliError> {
    let c = canonical_form(args.n, args.k)?;
    let mut d: ToricDiagram = diagram_of(c.n() as i64, c.k() as i64)?;
    let mut warnings = Vec::new();
    if c.k() as i64 != args.k.rem_euclid(args.n) {
        warnings.push(format!("drawing the canonical form ({}, {})", c.n(), c.k()));
    }
    if let Some(choice) = resolve {
        let r = resolution_by_choice(global, &c, choice)?;
        d.set_triangles(r.triangles().to_vec());
    }
    if global.format == Format::Svg {
        return Ok(crate::svg::render(&d)?);
    }
    let edges: Vec<[[i64; 2]; 2]> = if d.triangles().is_some() {
        d.edges().iter().map(|(a, b)| [point(a), point(b)]).collect()
    } else {
        let v = d.vertices();
        (0..v.len()).map(|i| [point(&v[i]), point(&v[(i + 1) % v.len()])]).collect()
    };
    let payload = DiagramPayload {
        class: ClassPair::from(&c),
        vertices: d.vertices().iter().map(point).collect(),
        points: d
            .points()
            .iter()
            .map(|p| {
                let [x, y] = point(&p.point);
                let kind = match p.kind {
                    PointKind::Vertex => "vertex",
                    PointKind::Boundary => "boundary",
                    PointKind::Interior => "interior",
                };
                DiagramPointDto { x, y, kind: kind.into() }
            })
            .collect(),
        edges,
        triangles: d.triangles().map(|ts| ts.iter().map(|t| [point(&t[0]), point(&t[1]), point(&t[2])]).collect()),
        resolution: resolve.map(String::from),
        twice_area: d.twice_area().try_into().expect("small area"),
    };
    let mut inputs = class_inputs(args);
    inputs.insert("resolve".into(), json!(resolve));
    Ok(emit(global, "diagram", inputs, payload, warnings, |p| {
        let mut s = format!("diagram of C_{{{},{}}}: vertices {:?}\n", p.class.n, p.class.k, p.vertices);
        let interior: Vec<[i64; 2]> = p.points.iter().filter(|q| q.kind == "interior").map(|q| [q.x, q.y]).collect();
        writeln!(s, "interior points {interior:?}").unwrap();
        if let Some(ts) = &p.triangles {
            writeln!(s, "{} triangles", ts.len()).unwrap();
        }
        s
    }))
}

/// `-2·t1 + t2`, `t1 - 2·t2`.
fn linear_form(coefficients: &[i64], variables: &[String]) -> String {
    let mut s = String::new();
    for (&c, v) in coefficients.iter().zip(variables).filter(|(c, _)| **c != 0) {
        let sign = match (s.is_empty(), c < 0) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let m = c.unsigned_abs();
        s += &if m == 1 { format!("{sign}{v}") } else { format!("{sign}{m}·{v}") };
    }
    s
}

fn resolution_text(r: &ResolutionDto) -> String {
    let mut s = format!(
        "resolution {}: {} cones, {}{}\n",
        r.index,
        r.cone_count,
        r.verdict,
        if r.built_by_star_sequence { " (star subdivisions)" } else { "" }
    );
    if r.ample_cone.no_local_divisors {
        s.push_str("  no exceptional divisors\n");
    }
    let mut seen = Vec::new();
    for i in r.ample_cone.inequalities.iter().filter(|_| !r.ample_cone.no_local_divisors) {
        if seen.contains(&&i.coefficients) {
            continue;
        }
        seen.push(&i.coefficients);
        writeln!(s, "  {} > 0", linear_form(&i.coefficients, &r.ample_cone.variables)).unwrap();
    }
    for surf in &r.surfaces {
        let glued = if surf.glued_to.is_empty() {
            "disjoint".to_string()
        } else {
            format!("glued to {}", surf.glued_to.join(", "))
        };
        writeln!(s, "  {} = {:?}: {}, {}", surf.divisor, surf.generator, surf.label, glued).unwrap();
    }
    for e in &r.triple_intersections {
        writeln!(s, "  d{:?} = {}", e.divisors, e.value).unwrap();
    }
    s
}

fn resolve(global: &GlobalArgs, args: ClassArgs, enumerate: bool) -> Result<String, CliError> {
    let c = canonical_form(args.n, args.k)?;
    let resolutions: Vec<Resolution> = if enumerate {
        enumerate_crepant_resolutions(&c, global.enum_bound)?
    } else {
        vec![star_resolution(global, &c)?]
    };
    let dtos: Vec<ResolutionDto> = resolutions.iter().enumerate().map(|(i, r)| resolution_dto(i + 1, r)).collect();
    let payload = ResolvePayload {
        class: ClassPair::from(&c),
        enumerated: enumerate,
        enum_bound: enumerate.then_some(global.enum_bound),
        resolution_count: dtos.len(),
        projective_count: dtos.iter().filter(|r| r.projective).count(),
        resolutions: dtos,
    };
    let mut inputs = class_inputs(args);
    inputs.insert("enumerate".into(), json!(enumerate));
    if enumerate {
        inputs.insert("enum_bound".into(), json!(global.enum_bound));
    } else {
        inputs.insert("seed_order".into(), json!(global.seed_order));
    }
    Ok(emit(global, "resolve", inputs, payload, Vec::new(), |p| {
        let mut s = format!(
            "C_{{{},{}}}: {} resolution(s), {} projective\n",
            p.class.n, p.class.k, p.resolution_count, p.projective_count
        );
        for r in &p.resolutions {
            s.push_str(&resolution_text(r));
        }
        s
    }))
}

fn complex_dto(z: Complex64) -> ComplexDto {
    let (re, im) = format_complex(z, SIG_DIGITS);
    ComplexDto { re, im }
}

fn mirror(global: &GlobalArgs, args: ClassArgs, grid: usize) -> Result<String, CliError> {
    let c = canonical_form(args.n, args.k)?;
    if grid < 16 {
        return Err(CliError::invalid("--grid must be at least 16"));
    }
    let g = mirror_polynomial(&c);
    let nodes = mirror_nodes(&g);
    let search = independent_node_search(&g, grid);
    let mut warnings = Vec::new();
    if search.clusters.is_empty() {
        warnings.push("independent node search did not converge from any start".into());
    }
    let matches = search.clusters.len() == nodes.len();
    if !search.clusters.is_empty() && !matches {
        warnings.push(format!("independent node search found {} clusters", search.clusters.len()));
    }
    let payload = MirrorPayload {
        class: ClassPair::from(&c),
        polynomial: g.f.to_string(),
        terms: g.f.terms().iter().map(|&(coefficient, x, y)| TermDto { coefficient, x, y }).collect(),
        factors: [g.f1.to_string(), g.f2.to_string()],
        newton_polygon: g.newton_polygon().iter().map(point).collect(),
        factor_singularities_excluded: factor_singularities_excluded(&g),
        node_count: nodes.len(),
        nodes: nodes
            .iter()
            .map(|node| NodeDto {
                index: node.root_index + 1,
                y_phase: rational(*node.y_phase.numer(), *node.y_phase.denom()),
                u: 0,
                v: 0,
                x: -1,
                y: complex_dto(node.point[3]),
                factors_vanish_exactly: node.factors_vanish_exactly,
                hessian_det: complex_dto(node.hessian_det),
                hessian_abs: format_complex(node.hessian_det.norm().into(), SIG_DIGITS).0,
                nondegenerate: node.nondegenerate,
            })
            .collect(),
        independent_search: NodeSearchDto {
            grid,
            starts: search.starts,
            converged: search.converged,
            clusters: search.clusters.len(),
            matches_certificates: matches,
        },
    };
    let mut inputs = class_inputs(args);
    inputs.insert("grid".into(), json!(grid));
    Ok(emit(global, "mirror", inputs, payload, warnings, |p| {
        let mut s = format!("f = {} = ({})({})\n", p.polynomial, p.factors[0], p.factors[1]);
        writeln!(s, "{} nodes", p.node_count).unwrap();
        for node in &p.nodes {
            writeln!(
                s,
                "  node {}: x = -1, y = exp(2πi·{}), |Hessian det| = {}",
                node.index, node.y_phase, node.hessian_abs
            )
            .unwrap();
        }
        writeln!(
            s,
            "independent search: {} clusters ({})",
            p.independent_search.clusters,
            if p.independent_search.matches_certificates { "matches" } else { "mismatch" }
        )
        .unwrap();
        s
    }))
}

fn transition(
    global: &GlobalArgs,
    args: ClassArgs,
    before: HodgeData,
    group_file: &Path,
    seeds: &[String],
) -> Result<String, CliError> {
    let c = canonical_form(args.n, args.k)?;
    let spec = GroupSpec::parse(&read_file(group_file)?)?;
    let group = spec.build()?;
    let seed_elements: Vec<usize> = seeds.iter().map(|s| parse_seed(&group, s)).collect::<Result<_, _>>()?;
    let r = star_resolution(global, &c)?;
    let report = transition_report(&c, before, &group, &seed_elements, &r)?;
    let names = group.element_names();
    let payload = TransitionPayload {
        class: ClassPair::from(&c),
        before: report.before.into(),
        after: report.after.into(),
        euler_change: report.euler_change,
        group_before: GroupDto::from(&report.group_before),
        seeds: seed_elements.iter().map(|&s| names[s].clone()).collect(),
        normal_closure: report.normal_closure.iter().map(|&e| names[e].clone()).collect(),
        fundamental_group_after: GroupDto::from(&report.group_after),
        quotient_cayley: cayley_one_based(&report.quotient),
        resolution: resolution_dto(1, &report.resolution),
        mixed_intersections: report.mixed_statements.clone(),
    };
    let mut inputs = class_inputs(args);
    inputs.insert("h11".into(), json!(before.h11));
    inputs.insert("h21".into(), json!(before.h21));
    inputs.insert("group".into(), json!(group_file.display().to_string()));
    inputs.insert("seeds".into(), json!(seeds));
    inputs.insert("seed_order".into(), json!(global.seed_order));
    Ok(emit(global, "transition", inputs, payload, Vec::new(), |p| {
        format!(
            "C_{{{},{}}}: (h11, h21) = ({}, {}) -> ({}, {}), Euler change {}\nG = {}, N = normal closure of {:?} (order {}), fundamental group after: {}\n",
            p.class.n,
            p.class.k,
            p.before.h11,
            p.before.h21,
            p.after.h11,
            p.after.h21,
            p.euler_change,
            p.group_before.label,
            p.seeds,
            p.normal_closure.len(),
            p.fundamental_group_after.label
        )
    }))
}

fn identify(global: &GlobalArgs, path: &Path) -> Result<String, CliError> {
    let file = MatrixFile::parse(&read_file(path)?)?;
    let id = identify_from_matrix(&file.matrix)?;
    let payload = IdentifyPayload {
        matrix: file.matrix,
        order: id.order,
        exponents: id.exponents,
        weights: id.weights,
        cyclotomic_factors: id.cyclotomic_factors.iter().map(|&(d, m)| [d, m as u64]).collect(),
        class: ClassPair::from(&id.class),
        label: class_label(&id.class),
    };
    let inputs = BTreeMap::from([("matrix".to_string(), json!(path.display().to_string()))]);
    Ok(emit(global, "identify", inputs, payload, Vec::new(), |p| {
        format!("order {}, eigenvalue exponents {:?}, class {}\n", p.order, p.exponents, p.label)
    }))
}

fn scan(global: &GlobalArgs, n_max: u64) -> Result<String, CliError> {
    let s = exceptional_scan(n_max);
    let phase = |p: &Ratio<i64>| rational(*p.numer(), *p.denom());
    let payload = ScanPayload {
        n_max: s.n_max,
        candidates: s.candidates,
        survivors: s.survivors.iter().map(|g| [g.n, g.k]).collect(),
        classes: s
            .classes
            .iter()
            .map(|c| ExceptionalClassDto {
                representative: [c.representative.n, c.representative.k],
                members: c.members.iter().map(|g| [g.n, g.k]).collect(),
                action: c.description.clone(),
                order: c.order,
                p_phase: phase(&c.p_phase),
                omega_phase: phase(&c.omega_phase),
                p_sign: c.p_sign(),
                omega_sign: c.omega_sign(),
            })
            .collect(),
    };
    let inputs = BTreeMap::from([("n_max".to_string(), json!(n_max))]);
    Ok(emit(global, "scan-exceptional", inputs, payload, Vec::new(), |p| {
        let mut out = format!("{} candidates, {} class(es)\n", p.candidates, p.classes.len());
        for c in &p.classes {
            writeln!(out, "  {} of order {}, p -> {} p, Ω -> {} Ω", c.action, c.order, c.p_sign, c.omega_sign).unwrap();
        }
        out
    }))
}
