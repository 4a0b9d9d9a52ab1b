use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use quadmap::census::{isomorphism_classes, OrbitOptions};
use quadmap::complete::{decode as decode_code, is_stable, parse_code, rotation_text, witness_map, CompleteFlagUniverse};
use quadmap::map::{automorphism_group, find_isomorphism, parse_map, surface_of, write_map};
use quadmap::{CensusError, CycleType, Map, MapMorphism, Mode, ModeFilter};
use serde_json::json;

use crate::{AutArgs, CatalogArgs, CliResult, DecodeArgs, Failure, Format, IsoArgs, ModeArg, WitnessArgs};

fn read_map(path: &Path) -> Result<Map, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_map(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_out(path: &Path, text: &str) -> CliResult {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

pub fn iso(a: &IsoArgs, format: Format) -> CliResult {
    let m1 = read_map(&a.first)?;
    let m2 = read_map(&a.second)?;
    let filter = match a.mode {
        ModeArg::Preserving => ModeFilter::Preserving,
        ModeArg::Reversing => ModeFilter::Reversing,
        ModeArg::Either => ModeFilter::Either,
    };
    let found = find_isomorphism(&m1, &m2, filter);
    match format {
        Format::Json => print_json(&match &found {
            Some(t) => json!({
                "isomorphic": true,
                "mode": t.mode,
                "bijection": t.bijection.images(),
            }),
            None => json!({ "isomorphic": false }),
        }),
        _ => match &found {
            Some(t) => {
                println!("mode: {}", t.mode);
                println!("bijection: {}", t.bijection);
            }
            None => println!("none"),
        },
    }
    Ok(())
}

/// A generating set picked greedily: each element is kept when it is not in
/// the subgroup the earlier ones generate.
fn generators(group: &[MapMorphism]) -> Vec<MapMorphism> {
    let mut gens: Vec<MapMorphism> = Vec::new();
    let mut span: HashSet<Vec<usize>> = HashSet::new();
    if let Some(first) = group.first() {
        span.insert(MapMorphism::identity(first.bijection.len()).bijection.images().to_vec());
    }
    for g in group {
        if span.contains(g.bijection.images()) {
            continue;
        }
        gens.push(g.clone());
        let mut elems: Vec<MapMorphism> = group.iter().filter(|h| span.contains(h.bijection.images())).cloned().collect();
        let mut i = 0;
        while i < elems.len() {
            for s in &gens {
                let c = elems[i].compose(s);
                if span.insert(c.bijection.images().to_vec()) {
                    elems.push(c);
                }
            }
            i += 1;
        }
    }
    gens
}

pub fn aut(a: &AutArgs, format: Format) -> CliResult {
    let m = read_map(&a.file)?;
    let group = automorphism_group(&m);
    let preserving = group.iter().filter(|t| t.mode == Mode::Preserving).count();
    let gens = generators(&group);
    match format {
        Format::Json => print_json(&json!({
            "order": group.len(),
            "preserving": preserving,
            "reversing": group.len() - preserving,
            "generators": gens
                .iter()
                .map(|g| json!({ "mode": g.mode, "bijection": g.bijection.images() }))
                .collect::<Vec<_>>(),
        })),
        _ => {
            println!("order: {}", group.len());
            println!("order-preserving: {preserving}");
            println!("order-reversing: {}", group.len() - preserving);
            for g in &gens {
                println!("generator ({}): {}", g.mode, g.bijection);
            }
        }
    }
    Ok(())
}

pub fn witness(a: &WitnessArgs, format: Format) -> CliResult {
    let class: CycleType = a.class.parse().map_err(|e| Failure::Input(format!("--class: {e}")))?;
    let w = witness_map(a.n, &class, a.reversing, a.kind).map_err(|e| Failure::Input(e.to_string()))?;

    let mut cert = String::new();
    let rev = if a.reversing { " composed with alpha" } else { "" };
    writeln!(cert, "# K_{} map stable under class {class}{rev}", a.n).unwrap();
    writeln!(cert, "# source: {}", w.source).unwrap();
    writeln!(cert, "# surface: {} ({})", w.surface, w.surface.label()).unwrap();
    writeln!(cert, "# action: {}", w.action).unwrap();
    writeln!(cert, "# code: {}", w.code.to_text()).unwrap();
    let mut all_ok = true;
    for v in 0..a.n {
        let gv = w.action.base.apply(v);
        let image = w.action.image_rotation(w.code.rotation(v), v);
        let ok = &image == w.code.rotation(gv);
        all_ok &= ok;
        writeln!(
            cert,
            "# rot[{}] = {}  ->  {}  vs rot[{}] = {}  {}",
            v + 1,
            rotation_text(w.code.rotation(v)),
            rotation_text(&image),
            gv + 1,
            rotation_text(w.code.rotation(gv)),
            if ok { "ok" } else { "MISMATCH" }
        )
        .unwrap();
    }
    let stable = is_stable(&w.map, &w.action).map_err(|e| Failure::Input(e.to_string()))?;
    let u = CompleteFlagUniverse::new(a.n).map_err(|e| Failure::Input(e.to_string()))?;
    let tau = w.action.flag_permutation(&u).map_err(|e| Failure::Input(e.to_string()))?;
    let conj = w.map.rotation().conjugate_by(&tau);
    writeln!(
        cert,
        "# flag action commutes with P: {}",
        if stable && &conj == w.map.rotation() { "yes" } else { "NO" }
    )
    .unwrap();
    let text = format!("{cert}{}", write_map(&w.map));

    if let Some(path) = &a.out {
        write_out(path, &text)?;
    }
    match format {
        Format::Json => print_json(&json!({
            "n": a.n,
            "class": class.to_string(),
            "reversing": a.reversing,
            "kind": a.kind,
            "source": w.source.to_string(),
            "surface": w.surface.label(),
            "action": w.action.to_string(),
            "code": w.code.to_text(),
            "stable": stable && all_ok,
        })),
        _ if a.out.is_none() => print!("{text}"),
        _ => print!("{cert}"),
    }
    if stable && all_ok {
        Ok(())
    } else {
        Err(Failure::Verify("stability certificate does not check".into()))
    }
}

pub fn catalog(a: &CatalogArgs, format: Format) -> CliResult {
    let opts = OrbitOptions {
        long_run: a.long_run,
        budget: a.budget,
    };
    let classes = isomorphism_classes(a.n, a.kind, &opts).map_err(|e| match e {
        CensusError::Budget { .. } => Failure::Budget(e.to_string()),
        e => Failure::Input(e.to_string()),
    })?;
    fs::create_dir_all(&a.out_dir).map_err(|e| Failure::Input(format!("{}: {e}", a.out_dir.display())))?;
    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    let mut files = Vec::new();
    for (i, c) in classes.iter().enumerate() {
        let m = decode_code(&c.code);
        let group = automorphism_group(&m);
        let preserving = group.iter().filter(|t| t.mode == Mode::Preserving).count();
        let name = format!("k{}-{:04}-{}.map", a.n, i + 1, c.surface.label());
        let text = format!(
            "# K_{} class {} of {}\n# surface: {} ({}), euler characteristic {}\n# code: {}\n# automorphisms: {} ({} order-preserving)\n{}",
            a.n,
            i + 1,
            classes.len(),
            c.surface,
            c.surface.label(),
            c.surface.euler_characteristic,
            c.code.to_text(),
            group.len(),
            preserving,
            write_map(&m)
        );
        write_out(&a.out_dir.join(&name), &text)?;
        *tally.entry(c.surface.label()).or_default() += 1;
        files.push(name);
    }
    let orientable = classes.iter().filter(|c| c.surface.orientable).count();
    match format {
        Format::Json => print_json(&json!({
            "n": a.n,
            "kind": a.kind,
            "classes": classes.len(),
            "orientable": orientable,
            "non_orientable": classes.len() - orientable,
            "surfaces": tally,
            "files": files,
        })),
        _ => {
            println!("{} classes written to {}", classes.len(), a.out_dir.display());
            println!("orientable: {orientable}, non-orientable: {}", classes.len() - orientable);
            for (label, count) in &tally {
                println!("{label}: {count}");
            }
        }
    }
    Ok(())
}

pub fn decode(a: &DecodeArgs) -> CliResult {
    let path = Path::new(&a.code);
    let text = if !a.code.trim_start().starts_with("kn v1") && path.exists() {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    } else {
        a.code.clone()
    };
    let code = parse_code(&text).map_err(|e| Failure::Input(e.to_string()))?;
    let m = decode_code(&code);
    let surface = surface_of(&m).map_err(|e| Failure::Input(e.to_string()))?;
    print!("# surface: {} ({})\n{}", surface, surface.label(), write_map(&m));
    Ok(())
}
