//! JSON documents: solutions and generator metadata. Keys come out sorted
//! because `serde_json` maps are ordered; vertices are 1-indexed.

use serde_json::{json, Map, Value};
use updom_core::reductions::{CspConstraint, CspInstance, CspReductionOutput, IsReductionOutput};
use updom_core::UpperDomSolution;

fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

pub fn solution_json(s: &UpperDomSolution) -> Value {
    let witness: Map<String, Value> = s
        .witness
        .iter()
        .map(|(u, p)| ((u + 1).to_string(), json!(p + 1)))
        .collect();
    json!({
        "size": s.size(),
        "set": one_based(&s.set),
        "independent": one_based(&s.independent),
        "supported": one_based(&s.supported),
        "witness": witness,
    })
}

/// Pretty-printed with a trailing newline; the byte format of every JSON file.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// A solution read back from a file: the member set, plus the claimed split
/// when the file is a full solution document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionFile {
    pub set: Vec<usize>,
    pub claimed: Option<UpperDomSolution>,
}

fn vertex_array(v: &Value, key: &str, n: usize) -> Result<Vec<usize>, String> {
    let items = v
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| format!("missing array `{key}`"))?;
    let mut out = Vec::with_capacity(items.len());
    for item in items {
        match item.as_u64() {
            Some(x) if x >= 1 && (x as usize) <= n => out.push(x as usize - 1),
            _ => return Err(format!("`{key}` holds {item}, not a vertex in 1..={n}")),
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Parses a solution document. Only `set` is required; if `independent`,
/// `supported` and `witness` are all present they are returned as the claim.
pub fn parse_solution_json(text: &str, n: usize) -> Result<SolutionFile, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let set = vertex_array(&v, "set", n)?;
    if let Some(size) = v.get("size") {
        if size.as_u64() != Some(set.len() as u64) {
            return Err(format!("`size` is {size} but `set` has {} vertices", set.len()));
        }
    }
    let claimed = match (v.get("independent"), v.get("supported"), v.get("witness")) {
        (Some(_), Some(_), Some(w)) => {
            let mut claim = UpperDomSolution {
                set: set.clone(),
                independent: vertex_array(&v, "independent", n)?,
                supported: vertex_array(&v, "supported", n)?,
                ..UpperDomSolution::default()
            };
            let w = w.as_object().ok_or("`witness` is not an object")?;
            for (key, value) in w {
                let u: usize = key.parse().map_err(|_| format!("witness key {key:?} is not a vertex"))?;
                let p = value.as_u64().ok_or(format!("witness of {key} is not a vertex"))? as usize;
                if u == 0 || u > n || p == 0 || p > n {
                    return Err(format!("witness {u} -> {p} out of range"));
                }
                claim.witness.insert(u - 1, p - 1);
            }
            Some(claim)
        }
        _ => None,
    };
    Ok(SolutionFile { set, claimed })
}

fn range_json(r: std::ops::Range<usize>) -> Value {
    json!([r.start + 1, r.end])
}

pub fn is_metadata(out: &IsReductionOutput, k: usize) -> Value {
    json!({
        "kind": "is",
        "a": out.a,
        "k": k,
        "budget": out.budget,
        "vertices": out.graph.n(),
        "edges": out.graph.edge_count(),
        "source_vertices": out.source_n,
        "blocks": (0..out.source_n).map(|u| range_json(out.block(u))).collect::<Vec<_>>(),
        "apexes": one_based(&out.apexes),
    })
}

fn csp_json(inst: &CspInstance) -> Value {
    let constraints: Vec<Value> = inst
        .constraints
        .iter()
        .map(|c| json!({ "vars": one_based(&c.vars), "accepted": c.accepted }))
        .collect();
    json!({ "n": inst.n, "q": inst.q, "m": inst.m(), "constraints": constraints })
}

/// Layout of a gadget graph. Ranges are inclusive `[first, last]`.
pub fn csp_metadata(out: &CspReductionOutput) -> Value {
    let n = out.instance.n;
    let paths: Vec<Value> = (0..n)
        .map(|i| range_json(i * out.path_len..(i + 1) * out.path_len))
        .collect();
    let sections: Vec<Value> = out
        .sections
        .iter()
        .map(|s| {
            json!({
                "constraint": s.constraint + 1,
                "accepted": s.accepted,
                "K": (0..s.accepted).map(|l| range_json(s.k_block(l))).collect::<Vec<_>>(),
                "L": (0..s.accepted).map(|l| range_json(s.l_block(l))).collect::<Vec<_>>(),
                "w": s.apex + 1,
            })
        })
        .collect();
    json!({
        "kind": "csp",
        "A": out.a,
        "F": out.f,
        "budget": out.budget,
        "vertices": out.graph.n(),
        "edges": out.graph.edge_count(),
        "path_len": out.path_len,
        "path_offset": 3,
        "paths": paths,
        "sections": sections,
        "instance": csp_json(&out.instance),
    })
}

/// The CSP embedded in gadget metadata.
pub fn csp_from_metadata(v: &Value) -> Result<CspInstance, String> {
    if v.get("kind").and_then(Value::as_str) != Some("csp") {
        return Err("metadata is not for a csp reduction".into());
    }
    let inst = v.get("instance").ok_or("metadata has no `instance`")?;
    let field = |key: &str| {
        inst.get(key)
            .and_then(Value::as_u64)
            .map(|x| x as usize)
            .ok_or(format!("instance has no integer `{key}`"))
    };
    let (n, q) = (field("n")?, field("q")?);
    let list = inst
        .get("constraints")
        .and_then(Value::as_array)
        .ok_or("instance has no `constraints`")?;
    let mut constraints = Vec::with_capacity(list.len());
    for c in list {
        let vars = c
            .get("vars")
            .and_then(Value::as_array)
            .ok_or("constraint has no `vars`")?
            .iter()
            .map(|x| match x.as_u64() {
                Some(x) if x >= 1 => Ok(x as usize - 1),
                _ => Err(format!("bad variable {x}")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let accepted = c
            .get("accepted")
            .and_then(Value::as_array)
            .ok_or("constraint has no `accepted`")?
            .iter()
            .map(|t| {
                t.as_array()
                    .ok_or(format!("bad tuple {t}"))?
                    .iter()
                    .map(|x| x.as_u64().filter(|&x| x < 6).map(|x| x as u8).ok_or(format!("bad value {x}")))
                    .collect::<Result<Vec<u8>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        constraints.push(CspConstraint { vars, accepted });
    }
    let inst = CspInstance { n, q, constraints };
    inst.validate().map_err(|e| e.to_string())?;
    Ok(inst)
}
