//! Subcommand implementations.

use superrep::algebra::{builtin, check_jacobi, ShiftedContext};
use superrep::classify::{
    classify_irreducible, clifford_irreducibles, composition_factors_seeded, InvolutionTag, IrreducibleTag,
    RealDivision, SuperType,
};
use superrep::exactnum::{field_sqrt, format_gaussian, parse_gaussian, FieldTag, Gaussian, IntegerMatrix};
use superrep::kring::{
    build_sequence, build_tower, check_exactness, is_surjective, ExactSequence, IrrepProvider, KringError, Variant,
};
use superrep::supermodule::samples::{q1_c, q1_even_trivial, q1_l, q1_odd_trivial};
use superrep::supermodule::SuperModule;

use crate::report::{
    AbsRow, AbsTableBody, ArrowEntry, Body, Check, ClassifyBody, DegreeEntry, ExactseqBody, Factor, Group,
    KgroupsBody, ModuleEntry, NodeEntry, Report, SequenceEntry, SplitEntry, Tag, ValidateBody,
};
use crate::specfile::{load, parse_field, read_spec, NamedModule};
use crate::{parse_degrees, CliError, CommandKind, FieldArg, Options, VariantArg};

/// The algebra, its modules and where registries get their irreducibles.
pub struct Setup {
    pub label: String,
    pub context: ShiftedContext,
    pub modules: Vec<NamedModule>,
    provider: Result<IrrepProvider, String>,
}

impl Setup {
    pub fn provider(&self) -> Result<&IrrepProvider, CliError> {
        self.provider.as_ref().map_err(|e| CliError::Input(e.clone()))
    }
}

fn field_of(arg: Option<FieldArg>) -> FieldTag {
    match arg {
        Some(FieldArg::R) => FieldTag::RealQ,
        Some(FieldArg::C) | None => FieldTag::ComplexQi,
    }
}

pub fn parse_samples(s: &str) -> Result<Vec<Gaussian>, CliError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| parse_gaussian(t).map_err(|e| CliError::Input(format!("sample {t:?}: {e}"))))
        .collect()
}

fn named(prefix: &str, modules: Vec<SuperModule>) -> Vec<NamedModule> {
    modules
        .into_iter()
        .enumerate()
        .map(|(k, module)| NamedModule { name: format!("{prefix}{}", k + 1), module })
        .collect()
}

/// `I`, `Π`, `L[λ]` and `C[μ]` for every sample with a square root.
pub fn q1_modules(ctx: &ShiftedContext, samples: &[Gaussian]) -> Vec<NamedModule> {
    let mut out = vec![
        NamedModule { name: "I".into(), module: q1_even_trivial(ctx) },
        NamedModule { name: "Pi".into(), module: q1_odd_trivial(ctx) },
    ];
    for l in samples {
        if let Some(m) = q1_l(ctx, l) {
            out.push(NamedModule { name: format!("L[{}]", format_gaussian(l)), module: m });
        }
    }
    for l in samples {
        if let Some(s) = field_sqrt(ctx.field(), l) {
            for mu in [s.clone(), -s] {
                out.push(NamedModule { name: format!("C[{}]", format_gaussian(&mu)), module: q1_c(ctx, &mu) });
            }
        }
    }
    out
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

fn kring(e: KringError) -> CliError {
    match e {
        KringError::Inconsistent(_) | KringError::NotInLattice(_) => CliError::Math(e.to_string()),
        other => CliError::Input(other.to_string()),
    }
}

/// Modules of a file are validated unless `strict` is off.
pub fn setup(opts: &Options, strict: bool) -> Result<Setup, CliError> {
    if let Some(path) = &opts.spec {
        let spec = read_spec(path)?;
        let file_field = parse_field(&spec.field)?;
        if opts.field.is_some() && field_of(opts.field) != file_field {
            return Err(CliError::Input(format!("--field disagrees with the field of {}", path.display())));
        }
        let mut loaded = load(&spec)?;
        if strict {
            loaded = loaded.validated()?;
        }
        let base = loaded.context.signature;
        let seeds: Vec<SuperModule> = loaded
            .modules
            .iter()
            .filter(|m| m.module.graded && m.module.context.signature == base)
            .map(|m| m.module.clone())
            .collect();
        let provider = if !seeds.is_empty() {
            Ok(IrrepProvider::seeds(&loaded.context, seeds))
        } else if loaded.context.algebra.dim() == 0 {
            Ok(IrrepProvider::clifford(&loaded.context))
        } else {
            Err(format!("{} lists no graded modules to seed the registries", path.display()))
        };
        return Ok(Setup {
            label: format!("{}, field {}", path.display(), file_field.name()),
            context: loaded.context,
            modules: loaded.modules,
            provider,
        });
    }
    let name = opts.builtin.as_deref().unwrap_or("trivial");
    let field = field_of(opts.field);
    let context = builtin(name, field).map_err(input)?;
    let label = format!("{name}, field {}", field.name());
    if name == "q1" {
        let samples = parse_samples(&opts.samples)?;
        let label = format!(
            "{label}, samples {}",
            samples.iter().map(format_gaussian).collect::<Vec<_>>().join(", ")
        );
        return Ok(Setup {
            label,
            modules: q1_modules(&context, &samples),
            provider: Ok(IrrepProvider::q1(&context, &samples)),
            context,
        });
    }
    let sig = context.signature;
    let retag = |mut list: Vec<SuperModule>| {
        for m in &mut list {
            m.context = context.clone();
        }
        list
    };
    let mut modules = named("V", retag(clifford_irreducibles(sig.p, sig.q, field, true).map_err(input)?));
    modules.extend(named("U", retag(clifford_irreducibles(sig.p, sig.q, field, false).map_err(input)?)));
    Ok(Setup { label, provider: Ok(IrrepProvider::clifford(&context)), context, modules })
}

pub fn execute(kind: CommandKind, opts: &Options) -> Result<Report, CliError> {
    let strict = kind != CommandKind::Validate;
    let setup = setup(opts, strict)?;
    let (passed, body) = match kind {
        CommandKind::Validate => validate(&setup),
        CommandKind::Classify => classify(&setup, opts.seed),
        CommandKind::Kgroups => kgroups(&setup, opts),
        CommandKind::Exactseq => exactseq(&setup, opts),
        CommandKind::AbsTable => abs_table(&setup, opts),
    }?;
    Ok(Report { command: name(kind).into(), context: setup.label, passed, body })
}

fn name(kind: CommandKind) -> &'static str {
    match kind {
        CommandKind::Validate => "validate",
        CommandKind::Classify => "classify",
        CommandKind::Kgroups => "kgroups",
        CommandKind::Exactseq => "exactseq",
        CommandKind::AbsTable => "abs-table",
    }
}

type Outcome = Result<(bool, Body), CliError>;

fn validate(setup: &Setup) -> Outcome {
    let mut checks = vec![match check_jacobi(&setup.context.algebra) {
        Ok(()) => Check { name: "algebra".into(), ok: true, message: None },
        Err(v) => Check { name: "algebra".into(), ok: false, message: Some(v.to_string()) },
    }];
    for m in &setup.modules {
        checks.push(match m.module.validate() {
            Ok(()) => Check { name: format!("module {}", m.name), ok: true, message: None },
            Err(v) => Check { name: format!("module {}", m.name), ok: false, message: Some(v.to_string()) },
        });
    }
    Ok((checks.iter().all(|c| c.ok), Body::Validate(ValidateBody { checks })))
}

fn dim_text(m: &SuperModule) -> String {
    if m.graded {
        format!("{}|{}", m.space.even, m.space.odd)
    } else {
        m.dim().to_string()
    }
}

fn tag(t: &IrreducibleTag) -> Tag {
    Tag {
        kind: match t.kind {
            SuperType::M => "M",
            SuperType::Q => "Q",
        }
        .into(),
        real_division: match t.real_division {
            RealDivision::R => "R",
            RealDivision::C => "C",
            RealDivision::H => "H",
            RealDivision::NotApplicable => "-",
        }
        .into(),
        self_dual: t.self_dual,
        involution: match t.involution {
            InvolutionTag::Yes => "yes",
            InvolutionTag::No => "no",
            InvolutionTag::Undecided => "undecided",
            InvolutionTag::NotApplicable => "-",
        }
        .into(),
        alpha_square: t.alpha_square.as_ref().map(format_gaussian),
    }
}

fn classify(setup: &Setup, seed: u64) -> Outcome {
    let mut modules = Vec::new();
    for m in &setup.modules {
        let report = composition_factors_seeded(&m.module, seed);
        let factors = report
            .factors
            .iter()
            .zip(&report.multiplicities)
            .zip(&report.certified)
            .map(|((f, &multiplicity), &certified)| {
                let (tag, tag_error) = match classify_irreducible(f) {
                    Ok(t) => (Some(tag(&t)), None),
                    Err(e) => (None, Some(e.to_string())),
                };
                Factor { dim: dim_text(f), multiplicity, certified, tag, tag_error }
            })
            .collect();
        modules.push(ModuleEntry { name: m.name.clone(), dim: dim_text(&m.module), factors });
    }
    Ok((true, Body::Classify(ClassifyBody { seed, modules })))
}

fn degree_label(n: usize) -> String {
    if n == 0 {
        "0".into()
    } else {
        format!("-{n}")
    }
}

fn kgroups(setup: &Setup, opts: &Options) -> Outcome {
    let range = parse_degrees(opts.degrees.as_deref().unwrap_or("0..1"))?;
    let tower = build_tower(setup.provider()?, *range.end()).map_err(kring)?;
    let mut degrees = Vec::new();
    for n in range {
        let level = &tower.levels[n];
        degrees.push(DegreeEntry {
            degree: degree_label(n),
            irreducibles: level.registry.len(),
            graded: Group::from(&level.graded_group()),
            plus: Group::from(&level.plus_group()),
            minus: Group::from(&level.minus_group()),
            sr: Group::from(&level.sr),
            restriction_cokernel: Group::from(&level.restriction_cokernel().map_err(kring)?),
        });
    }
    Ok((true, Body::Kgroups(KgroupsBody { degrees })))
}

fn int_rows(m: &IntegerMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|z| z.to_string()).collect()).collect()
}

fn sequence_entry(seq: &ExactSequence, degree: Option<String>) -> SequenceEntry {
    let verdicts = check_exactness(seq);
    let mut nodes: Vec<NodeEntry> = seq
        .nodes
        .iter()
        .map(|n| NodeEntry {
            label: n.label.clone(),
            group: Group::from(&n.group),
            exact: None,
            composite_zero: None,
            image_vs_kernel: None,
        })
        .collect();
    for v in &verdicts {
        let e = &mut nodes[v.node];
        e.exact = Some(v.is_exact());
        e.composite_zero = Some(v.composite_zero);
        e.image_vs_kernel = Some(format!("{:?}", v.relation).to_lowercase());
    }
    let arrows: Vec<ArrowEntry> = seq
        .arrows
        .iter()
        .enumerate()
        .map(|(k, a)| ArrowEntry {
            label: a.label.clone(),
            from: seq.nodes[k].label.clone(),
            to: seq.nodes[seq.target(k)].label.clone(),
            matrix: int_rows(&a.matrix),
        })
        .collect();
    let split = if seq.variant == Variant::SixComplex {
        seq.arrows
            .iter()
            .enumerate()
            .filter(|(_, a)| a.label == "i*")
            .map(|(k, a)| SplitEntry {
                from: seq.nodes[k].label.clone(),
                to: seq.nodes[seq.target(k)].label.clone(),
                surjective: is_surjective(&a.matrix, &seq.nodes[seq.target(k)].group),
            })
            .collect()
    } else {
        Vec::new()
    };
    SequenceEntry {
        variant: match seq.variant {
            Variant::SixComplex => "six-complex",
            Variant::SixReal => "six-real",
            Variant::TwentyFour => "twentyfour",
        }
        .into(),
        degree,
        cyclic: seq.cyclic,
        exact_nodes: verdicts.iter().filter(|v| v.is_exact()).count(),
        checked_nodes: verdicts.len(),
        nodes,
        arrows,
        split,
    }
}

fn exactseq(setup: &Setup, opts: &Options) -> Outcome {
    let provider = setup.provider()?;
    let field = setup.context.field();
    let mut sequences = Vec::new();
    match opts.variant {
        VariantArg::SixComplex => {
            if field != FieldTag::ComplexQi {
                return Err(CliError::Input("six-complex needs the complex field".into()));
            }
            let seq = build_sequence(provider, Variant::SixComplex, 0).map_err(kring)?;
            sequences.push(sequence_entry(&seq, None));
        }
        VariantArg::SixReal => {
            if field != FieldTag::RealQ {
                return Err(CliError::Input("six-real needs the real field".into()));
            }
            for n in parse_degrees(opts.degrees.as_deref().unwrap_or("0"))? {
                let seq = build_sequence(provider, Variant::SixReal, n).map_err(kring)?;
                sequences.push(sequence_entry(&seq, Some(degree_label(n))));
            }
        }
        VariantArg::Twentyfour => {
            let seq = build_sequence(provider, Variant::TwentyFour, 0).map_err(kring)?;
            sequences.push(sequence_entry(&seq, None));
        }
    }
    let passed = sequences
        .iter()
        .all(|s| s.exact_nodes == s.checked_nodes && s.split.iter().all(|sp| sp.surjective));
    Ok((passed, Body::Exactseq(ExactseqBody { sequences })))
}

fn abs_table(setup: &Setup, opts: &Options) -> Outcome {
    let range = parse_degrees(opts.degrees.as_deref().unwrap_or("0..8"))?;
    let tower = build_tower(setup.provider()?, *range.end()).map_err(kring)?;
    let rows = range.map(|n| AbsRow { n, group: Group::from(&tower.levels[n].sr) }).collect();
    Ok((true, Body::AbsTable(AbsTableBody { field: setup.context.field().name().into(), rows })))
}
