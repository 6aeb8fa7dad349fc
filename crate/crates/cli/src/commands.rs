use std::fs;

use klp_core::arrangement::{
    check_conjecture_rgin, conjecture_search, is_free_rgin, shape_check_rgin, SearchConfig, SearchSummary,
};
use klp_core::groebner::initial_ideal;
use klp_core::lefschetz::{has_k_slp_stable, has_k_wlp_stable};
use klp_core::{rgin, GinConfig, GinResult, LefschetzMode, LefschetzReport, MonomialIdeal, QIdeal, SectionalMatrix};
use serde_json::{json, Map, Value};

use crate::input::{parse_arrangement, parse_ideal, read_source};
use crate::{ArrangementAction, Cli, Command, Failure, Output};

type Outcome = Result<bool, Failure>;

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Gin { input } => gin(cli, input),
        Command::Hilbert { input, max_degree } => hilbert(cli, input, *max_degree),
        Command::Sectional { input } => sectional(cli, input),
        Command::Lefschetz { input, mode, k, assert } => lefschetz(cli, input, (*mode).into(), *k, *assert),
        Command::Arrangement { action: ArrangementAction::Analyze { input, assert } } => analyze(cli, input, *assert),
        Command::ConjectureSearch { num_vars, n_min, n_max, count, coeff_bound, dump_dir, assert } => {
            let config = SearchConfig {
                num_vars: *num_vars,
                n_min: *n_min,
                n_max: *n_max,
                count: *count,
                seed: cli.seed,
                workers: cli.workers.max(1),
                coeff_bound: *coeff_bound,
                gin: gin_config(cli),
            };
            search(cli, &config, dump_dir.as_deref(), *assert)
        }
    }
}

fn gin_config(cli: &Cli) -> GinConfig {
    GinConfig { seed: cli.seed, bound: cli.bound.clone(), trials: cli.trials, parallel: cli.workers > 1 }
}

fn load_ideal(cli: &Cli, input: &str) -> Result<QIdeal, Failure> {
    Ok(parse_ideal(&read_source(input)?, cli.vars.as_deref())?)
}

fn generators(ideal: &MonomialIdeal) -> Vec<String> {
    ideal.generators().iter().map(|g| g.display(ideal.ring()).to_string()).collect()
}

fn emit(cli: &Cli, command: &str, text: String, fields: Value) {
    match cli.output {
        Output::Text => print!("{text}"),
        Output::Json => {
            let mut out = Map::new();
            out.insert("command".into(), json!(command));
            out.insert("seed".into(), json!(cli.seed));
            out.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
            if let Value::Object(extra) = fields {
                out.extend(extra);
            }
            println!("{}", serde_json::to_string_pretty(&Value::Object(out)).expect("serializable"));
        }
    }
}

fn gin_fields(gin: &GinResult) -> Value {
    json!({
        "vars": gin.ideal.ring().names(),
        "rgin": generators(&gin.ideal),
        "trials_used": gin.trials_used,
        "bound": gin.bound.to_string(),
    })
}

fn gin(cli: &Cli, input: &str) -> Outcome {
    let ideal = load_ideal(cli, input)?;
    let gin = rgin(&ideal, &gin_config(cli))?;
    let text = format!(
        "rgin: {}\ntrials: {}\nbound: {}\nseed: {}\n",
        gin.ideal, gin.trials_used, gin.bound, cli.seed
    );
    emit(cli, "gin", text, gin_fields(&gin));
    Ok(true)
}

fn hilbert(cli: &Cli, input: &str, max_degree: Option<u32>) -> Outcome {
    let ideal = load_ideal(cli, input)?;
    let lt = initial_ideal(&ideal);
    let top = max_degree.unwrap_or(lt.max_generator_degree() + 2);
    let values = lt.hilbert_values(top);
    let text = format!(
        "d:  {}\nHF: {}\n",
        (0..=top).map(|d| d.to_string()).collect::<Vec<_>>().join(" "),
        values.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
    );
    emit(cli, "hilbert", text, json!({ "vars": ideal.ring().names(), "hilbert": values }));
    Ok(true)
}

fn sectional(cli: &Cli, input: &str) -> Outcome {
    let ideal = load_ideal(cli, input)?;
    let gin = rgin(&ideal, &gin_config(cli))?;
    let m = SectionalMatrix::from_rgin(&gin.ideal)?;
    let text = format!("rgin: {}\nreg: {}\n{}", gin.ideal, m.reg, m.to_table());
    let mut fields = gin_fields(&gin);
    fields["sectional"] = serde_json::to_value(&m).expect("serializable");
    emit(cli, "sectional", text, fields);
    Ok(true)
}

fn lefschetz(cli: &Cli, input: &str, mode: LefschetzMode, k: Option<usize>, assert: bool) -> Outcome {
    let ideal = load_ideal(cli, input)?;
    let l = ideal.num_vars();
    let k = k.unwrap_or(l);
    if k > l {
        return Err(Failure::Input(format!("k = {k} exceeds the number of variables {l}")));
    }
    let gin = rgin(&ideal, &gin_config(cli))?;
    let decide = |k| match mode {
        LefschetzMode::Wlp => has_k_wlp_stable(&gin.ideal, k),
        LefschetzMode::Slp => has_k_slp_stable(&gin.ideal, k),
    };
    let verdict = decide(k)?;
    let k_max = decide(l)?.witness.map_or(l, |w| w.level);
    let mut text = format!(
        "mode: {mode}\nk: {k}\nholds: {}\nelements: {}\nk_max: {k_max}\n",
        verdict.holds,
        verdict.elements.join(", ")
    );
    if let Some(w) = &verdict.witness {
        text.push_str(&format!("witness: {w}\n"));
    }
    text.push_str(&format!("rgin: {}\n", gin.ideal));
    let mut fields = gin_fields(&gin);
    fields["verdict"] = serde_json::to_value(&verdict).expect("serializable");
    fields["k_max"] = json!(k_max);
    emit(cli, "lefschetz", text, fields);
    Ok(!assert || verdict.holds)
}

fn analyze(cli: &Cli, input: &str, assert: bool) -> Outcome {
    let arrangement = parse_arrangement(&read_source(input)?)?;
    let ring = arrangement.ring().clone();
    let q = arrangement.defining_polynomial();
    let gin = rgin(&arrangement.jacobian_ideal()?, &gin_config(cli))?;
    let n = arrangement.len();
    let shape = shape_check_rgin(&gin.ideal, n);
    if !shape.passed {
        return Err(Failure::Internal(format!("rgin shape check failed: {}", shape.problems.join("; "))));
    }
    let free = is_free_rgin(&gin.ideal, n);
    let conjecture = if ring.num_vars() >= 3 { Some(check_conjecture_rgin(&gin.ideal)?) } else { None };
    let report = LefschetzReport::from_rgin(&gin.ideal)?;

    let mut text = format!("hyperplanes: {n}\nring: {ring}\nQ: {}\nrgin: {}\nfree: {}\n", q.display(&ring), gin.ideal, free.free);
    if free.free {
        text.push_str(&format!("ladder: {:?}\n", free.ladder));
    }
    if let Some(v) = &free.violation {
        text.push_str(&format!("violation: {}\n", v.describe(&ring)));
    }
    if let Some(c) = &conjecture {
        text.push_str(&format!("degree bound: {}\n", c.describe(&ring)));
    }
    text.push_str(&format!("k_wlp_max: {}\nk_slp_max: {}\n", report.k_wlp_max, report.k_slp_max));
    if let Some(w) = &report.wlp_witness {
        text.push_str(&format!("wlp witness: {w}\n"));
    }
    if let Some(w) = &report.slp_witness {
        text.push_str(&format!("slp witness: {w}\n"));
    }

    let mut fields = gin_fields(&gin);
    fields["hyperplanes"] = json!(n);
    fields["defining_polynomial"] = json!(q.display(&ring).to_string());
    fields["free"] = json!(free.free);
    fields["ladder"] = json!(free.ladder);
    fields["violation"] = json!(free.violation.as_ref().map(|v| v.describe(&ring)));
    fields["conjecture"] = match &conjecture {
        Some(c) => json!({
            "d0": c.d0,
            "holds": c.holds,
            "vacuous": c.vacuous,
            "offenders": c.offenders.iter().map(|g| g.display(&ring).to_string()).collect::<Vec<_>>(),
        }),
        None => Value::Null,
    };
    fields["lefschetz"] = serde_json::to_value(&report).expect("serializable");
    emit(cli, "arrangement", text, fields);
    Ok(!assert || free.free)
}

fn search(cli: &Cli, config: &SearchConfig, dump_dir: Option<&std::path::Path>, assert: bool) -> Outcome {
    let summary: SearchSummary = conjecture_search(config)?;
    let mut dumped = Vec::new();
    for s in summary.samples.iter().filter(|s| s.report.as_ref().is_some_and(|r| !r.holds)) {
        let mut entry = json!({ "index": s.index, "seed": s.seed, "arrangement": s.arrangement.to_string() });
        if let Some(dir) = dump_dir {
            fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("cannot create {}: {e}", dir.display())))?;
            let path = dir.join(format!("counterexample-{:04}.arr", s.index));
            fs::write(&path, s.replay_file())
                .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
            entry["file"] = json!(path.display().to_string());
        }
        dumped.push(entry);
    }
    let text = format!(
        "samples: {}\nholds: {}\nvacuous: {}\ncounterexample: {}\ngin-failure: {}\n",
        summary.samples.len(),
        summary.holds,
        summary.vacuous,
        summary.counterexamples,
        summary.gin_failures
    );
    let fields = json!({
        "samples": summary.samples.len(),
        "tally": {
            "holds": summary.holds,
            "vacuous": summary.vacuous,
            "counterexample": summary.counterexamples,
            "gin-failure": summary.gin_failures,
        },
        "counterexamples": dumped,
    });
    emit(cli, "conjecture-search", text, fields);
    Ok(!assert || summary.counterexamples == 0)
}
