use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use canrep::approx::{endolength, kronecker_generic, left_omega_approx, peg_hom_growth, right_omega_approx, TruncationParams};
use canrep::exactla::Field;
use canrep::format::{dims_json, morphism_json, representation_json, AlgebraRef, AlgebraSpec, RepFile, FORMAT_VERSION};
use canrep::homology::{ext1_dim, ext2_dim, tau, tau_inverse};
use canrep::repcat::{decompose, hom_basis, hom_dim, Representation};
use canrep::slopes::{chain_pool, chain_toward_slope, slope_order_check, Slope, TubularAlgebra};
use canrep::trisection::{classify, partition_by_tubes, regular_simples, s_bracket, split_trisect, tube_position, TubeId};
use canrep::Algebra;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::{Cli, Command, PairInput, RepInput, TubeInput};

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Usage(String),
    Domain(canrep::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(canrep::Error::Parse(_)) | CliError::Io(_) | CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Io(_) => "io",
            CliError::Usage(_) => "usage",
            CliError::Domain(e) => e.code(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(s) | CliError::Usage(s) => f.write_str(s),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<canrep::Error> for CliError {
    fn from(e: canrep::Error) -> Self {
        CliError::Domain(e)
    }
}

type Res<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> Res<Arc<Algebra>> {
    Ok(AlgebraSpec::from_json(&read(path)?)?.build()?)
}

fn resolve(base: &Path, rel: &str) -> PathBuf {
    let p = PathBuf::from(rel);
    if p.is_absolute() {
        p
    } else {
        base.parent().unwrap_or(Path::new(".")).join(p)
    }
}

/// Loads a representation; its own algebra entry and the flag must agree.
fn load_rep(path: &Path, flag: Option<&Arc<Algebra>>) -> Res<Representation> {
    let file = RepFile::from_json(&read(path)?)?;
    let own = match &file.algebra {
        Some(AlgebraRef::Inline(spec)) => Some(spec.build()?),
        Some(AlgebraRef::Path(p)) => Some(load_algebra(&resolve(path, p))?),
        None => None,
    };
    let alg = match (own, flag) {
        (Some(a), Some(b)) if *a != **b => {
            return Err(CliError::Usage(format!("{} names a different algebra than --algebra", path.display())))
        }
        (_, Some(b)) => b.clone(),
        (Some(a), None) => a,
        (None, None) => return Err(CliError::Usage(format!("{} names no algebra and --algebra is missing", path.display()))),
    };
    Ok(file.build(&alg)?)
}

fn input_rep(input: &RepInput) -> Res<Representation> {
    let alg = input.algebra.as_deref().map(load_algebra).transpose()?;
    load_rep(&input.rep, alg.as_ref())
}

fn input_pair(input: &PairInput) -> Res<(Representation, Representation)> {
    let alg = match &input.algebra {
        Some(p) => Some(load_algebra(p)?),
        None => None,
    };
    let a = load_rep(&input.rep, alg.as_ref())?;
    let b = load_rep(&input.target, Some(alg.as_ref().unwrap_or(a.algebra())))?;
    Ok((a, b))
}

fn parse_tube(alg: &Algebra, s: &str) -> Res<TubeId> {
    let t = TubeId::parse(alg.field(), s)?;
    t.validate(alg)?;
    Ok(t)
}

fn tube_input(input: &TubeInput) -> Res<(Arc<Algebra>, TubeId)> {
    let alg = load_algebra(&input.algebra)?;
    let tube = parse_tube(&alg, &input.tube)?;
    Ok((alg, tube))
}

fn rng(cli: &Cli) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cli.seed.unwrap_or(0))
}

fn seeded(cli: &Cli, name: &str) -> Res<ChaCha8Rng> {
    match cli.seed {
        Some(s) => Ok(ChaCha8Rng::seed_from_u64(s)),
        None => Err(CliError::Usage(format!("{name} needs --seed"))),
    }
}

fn rep(m: &Representation) -> Res<Value> {
    Ok(representation_json(m)?)
}

fn reps(ms: &[Representation]) -> Res<Value> {
    Ok(Value::Array(ms.iter().map(rep).collect::<Res<Vec<_>>>()?))
}

fn report(fields: Value) -> Value {
    let mut out = Map::new();
    out.insert("canrep_format".into(), json!(FORMAT_VERSION));
    if let Value::Object(m) = fields {
        out.extend(m);
    }
    Value::Object(out)
}

fn truncation(alg: &Algebra, tubes: &[String], depth: usize) -> Res<TruncationParams> {
    let ids = tubes.iter().map(|s| parse_tube(alg, s)).collect::<Res<Vec<_>>>()?;
    Ok(TruncationParams::new(ids, depth)?)
}

fn parse_base(s: &str) -> Res<Field> {
    let s = s.trim();
    if s == "Q" {
        return Ok(Field::Rational);
    }
    let p = s
        .strip_prefix('F')
        .and_then(|p| p.parse::<u32>().ok())
        .ok_or_else(|| CliError::Usage(format!("base field {s:?} is neither Q nor F<p>")))?;
    Ok(Field::prime(p)?)
}

fn slope_row(tub: &TubularAlgebra, m: &Representation) -> Value {
    let d = m.dims();
    let fam = tub.family(d);
    json!({
        "dims": dims_json(m.algebra(), d),
        "delta0": tub.delta_zero(d),
        "delta_inf": tub.delta_infty(d),
        "slope": fam.slope().map(ToString::to_string).or(match fam {
            canrep::slopes::Family::T0 => Some("0".into()),
            canrep::slopes::Family::TInfinity => Some("inf".into()),
            _ => None,
        }),
        "family": fam.tag(),
    })
}

pub fn run(cli: &Cli) -> Res<Value> {
    let out = match &cli.command {
        Command::Classify(input) => {
            let m = input_rep(input)?;
            let label = classify(&m, &mut rng(cli))?;
            json!({ "label": label.to_string(), "defect": m.defect()? })
        }
        Command::Defect(input) => {
            let m = input_rep(input)?;
            json!({ "defect": m.defect()?, "dims": dims_json(m.algebra(), m.dims()) })
        }
        Command::Decompose(input) => {
            let m = input_rep(input)?;
            let mut r = seeded(cli, "decompose")?;
            let d = decompose(&m, &mut r)?;
            let summands = d
                .summands()?
                .iter()
                .map(|(s, k)| Ok(json!({ "multiplicity": k, "representation": rep(s)? })))
                .collect::<Res<Vec<_>>>()?;
            json!({ "parts": d.parts().len(), "summands": summands, "verified": d.verify() })
        }
        Command::Hom(input) => {
            let (a, b) = input_pair(input)?;
            let basis = hom_basis(&a, &b)?;
            json!({ "dim": basis.len(), "basis": basis.iter().map(morphism_json).collect::<Vec<_>>() })
        }
        Command::Ext(input) => {
            let (a, b) = input_pair(input)?;
            let (h, e1, e2) = (hom_dim(&a, &b)?, ext1_dim(&a, &b)?, ext2_dim(&a, &b)?);
            let euler = a.algebra().euler(a.dims(), b.dims());
            json!({ "hom": h, "ext1": e1, "ext2": e2, "euler": euler, "euler_consistent": h as i64 - e1 as i64 + e2 as i64 == euler })
        }
        Command::Tau { input, inverse } => {
            let m = input_rep(input)?;
            let t = if *inverse { tau_inverse(&m)? } else { tau(&m)? };
            let alg = m.algebra();
            let dropped: Vec<Value> =
                t.dropped.iter().map(|(v, k)| json!({ "vertex": alg.vertices()[*v], "multiplicity": k })).collect();
            json!({ "inverse": inverse, "module": rep(&t.module)?, "dropped": dropped })
        }
        Command::TubeSimples(input) => {
            let (alg, tube) = tube_input(input)?;
            let simples = regular_simples(&alg, &tube)?;
            json!({ "tube": tube.to_string(), "rank": simples.len(), "simples": reps(&simples)? })
        }
        Command::Sbracket { tube, socle, depth } => {
            let (alg, id) = tube_input(tube)?;
            let simples = regular_simples(&alg, &id)?;
            let s = simples
                .get(*socle)
                .ok_or_else(|| CliError::Usage(format!("tube {id} has only {} regular simples", simples.len())))?;
            let m = s_bracket(s, *depth)?;
            let pos = tube_position(&m)?;
            json!({ "tube": pos.tube.to_string(), "socle": pos.socle, "regular_length": pos.rlen, "module": rep(&m)? })
        }
        Command::SplitTrisect(input) => {
            let m = input_rep(input)?;
            let mut r = seeded(cli, "split-trisect")?;
            let s = split_trisect(&m, &mut r)?;
            json!({ "p": rep(&s.p)?, "t": rep(&s.t)?, "q": rep(&s.q)?, "iso_verified": s.iso.is_iso() })
        }
        Command::PartitionTubes { input, tubes } => {
            let m = input_rep(input)?;
            let mut r = seeded(cli, "partition-tubes")?;
            let ids = tubes.iter().map(|s| parse_tube(m.algebra(), s)).collect::<Res<Vec<_>>>()?;
            let p = partition_by_tubes(&m, &ids, &mut r)?;
            json!({
                "tubes": ids.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "inside": rep(&p.inside)?,
                "outside": rep(&p.outside)?,
                "iso_verified": p.iso.is_iso(),
            })
        }
        Command::OmegaLeft { input, trunc } => {
            let m = input_rep(input)?;
            let mut r = seeded(cli, "omega-left")?;
            let params = truncation(m.algebra(), &trunc.tubes, trunc.depth)?;
            let a = left_omega_approx(&m, &params, &mut r)?;
            let s = &a.sequence;
            let mults: Vec<Value> = a
                .multiplicities
                .iter()
                .map(|(t, simple, d)| json!({ "tube": t.to_string(), "socle_dims": dims_json(m.algebra(), simple.dims()), "multiplicity": d }))
                .collect();
            json!({
                "sub": rep(s.a())?, "middle": rep(s.b())?, "quotient": rep(s.c())?,
                "iota": morphism_json(s.iota()), "pi": morphism_json(s.pi()),
                "stripped": rep(&a.stripped)?,
                "multiplicities": mults,
                "certificates": { "exact": s.verify(), "ext_killed": a.ext_killed, "torsionfree_preserved": a.torsionfree_preserved },
            })
        }
        Command::OmegaRight { input, trunc } => {
            let m = input_rep(input)?;
            let mut r = seeded(cli, "omega-right")?;
            let params = truncation(m.algebra(), &trunc.tubes, trunc.depth)?;
            let a = right_omega_approx(&m, &params, &mut r)?;
            let s = &a.sequence;
            let cover: Vec<Value> =
                a.cover.iter().map(|(t, k, j)| json!({ "tube": t.to_string(), "socle": k, "depth": j })).collect();
            json!({
                "kernel": rep(s.a())?, "cover": rep(s.b())?, "module": rep(s.c())?,
                "iota": morphism_json(s.iota()), "pi": morphism_json(s.pi()),
                "summands": cover,
                "certificates": { "exact": s.verify(), "kernel_torsionfree": a.kernel_torsionfree },
            })
        }
        Command::Generic { base } => {
            let g = kronecker_generic(&parse_base(base)?)?;
            json!({ "module": rep(&g)?, "end_dim": hom_dim(&g, &g)?, "endolength": endolength(&g)? })
        }
        Command::Endolength(input) => {
            let m = input_rep(input)?;
            json!({ "total_dim": m.total_dim(), "end_dim": hom_dim(&m, &m)?, "endolength": endolength(&m)? })
        }
        Command::PegGrowth { tube, socle, depth, peg } => {
            let (alg, id) = tube_input(tube)?;
            let v = match peg {
                Some(label) => alg
                    .vertex_index(label)
                    .ok_or_else(|| CliError::Usage(format!("unknown vertex {label:?}")))?,
                None => alg.vertex_count() - 1,
            };
            let simples = regular_simples(&alg, &id)?;
            let s = simples
                .get(*socle)
                .ok_or_else(|| CliError::Usage(format!("tube {id} has only {} regular simples", simples.len())))?;
            let g = peg_hom_growth(&Representation::projective(&alg, v), s, *depth)?;
            json!({
                "peg": alg.vertices()[v],
                "tube": id.to_string(),
                "dims": g.dims,
                "monomorphisms": g.witnesses.iter().map(Option::is_some).collect::<Vec<_>>(),
            })
        }
        Command::Slope { algebra, rep: paths } => {
            let alg = algebra.as_deref().map(load_algebra).transpose()?;
            let mods = paths.iter().map(|p| load_rep(p, alg.as_ref())).collect::<Res<Vec<_>>>()?;
            let tub = TubularAlgebra::new(mods[0].algebra())?;
            let mut r = rng(cli);
            let mut rows = Vec::new();
            for m in &mods {
                if !canrep::repcat::is_indecomposable(m, &mut r)? {
                    return Err(canrep::Error::NotIndecomposable.into());
                }
                rows.push(slope_row(&tub, m));
            }
            json!({ "modules": rows })
        }
        Command::SlopeCheck(input) => {
            let (a, b) = input_pair(input)?;
            let tub = TubularAlgebra::new(a.algebra())?;
            let v = slope_order_check(&tub, &a, &b)?;
            json!({
                "slopes": [v.slopes.0.to_string(), v.slopes.1.to_string()],
                "hom_dim": v.hom_dim,
                "consistent": v.consistent,
                "witness": v.witness.as_ref().map(morphism_json),
            })
        }
        Command::Chain { algebra, ratios, budget } => {
            let alg = load_algebra(algebra)?;
            let tub = TubularAlgebra::new(&alg)?;
            let ratios = ratios.iter().map(|s| Slope::parse(s)).collect::<canrep::Result<Vec<_>>>()?;
            let seed = cli.seed.unwrap_or(0);
            let pool = chain_pool(&tub, seed)?;
            let chain = chain_toward_slope(&tub, &ratios, &pool, *budget, &mut ChaCha8Rng::seed_from_u64(seed))?;
            json!({
                "slopes": chain.slopes.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "modules": reps(&chain.modules)?,
                "inclusions": chain.inclusions.iter().map(morphism_json).collect::<Vec<_>>(),
                "cokernel_dims": chain.cokernels.iter().map(|c| dims_json(&alg, c.dims())).collect::<Vec<_>>(),
                "monomorphisms": chain.inclusions.iter().all(|g| g.is_injective()),
            })
        }
    };
    Ok(report(out))
}
