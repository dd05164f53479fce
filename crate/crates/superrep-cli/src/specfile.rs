//! The JSON description format for algebras and modules.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use superrep::algebra::{check_jacobi, BracketTerm, CliffordSignature, LieSuperAlgebra, ShiftedContext};
use superrep::exactnum::{field_sqrt, format_gaussian, parse_gaussian, FieldTag, Gaussian, Matrix};
use superrep::superspace::{Parity, SuperSpace};
use superrep::supermodule::SuperModule;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("{path}: {message} at line {line}, column {column}")]
    Syntax { path: String, line: usize, column: usize, message: String },
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Semantic(String),
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    #[serde(default = "default_field")]
    pub field: String,
    #[serde(default)]
    pub algebra: AlgebraBlock,
    /// Base Clifford signature `[p, q]`.
    #[serde(default, skip_serializing_if = "is_zero_signature")]
    pub signature: [usize; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<SampleBlock>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modules: Vec<ModuleBlock>,
}

fn default_field() -> String {
    "C".into()
}

fn is_zero_signature(s: &[usize; 2]) -> bool {
    *s == [0, 0]
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraBlock {
    #[serde(default)]
    pub generators: Vec<GeneratorBlock>,
    /// `[x, y, z, c]` for `[x, y] ∋ c·z`.
    #[serde(default)]
    pub brackets: Vec<[String; 4]>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GeneratorBlock {
    pub name: String,
    pub parity: String,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SampleBlock {
    #[serde(default)]
    pub lambda: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ModuleBlock {
    pub name: String,
    #[serde(default = "yes")]
    pub graded: bool,
    /// `[p, q]`; defaults to the base signature.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signature: Option<[usize; 2]>,
    pub even: usize,
    #[serde(default)]
    pub odd: usize,
    /// Matrix per g-generator; missing generators act by zero.
    #[serde(default)]
    pub action: BTreeMap<String, Vec<Vec<String>>>,
    /// `e_1..e_p, f_1..f_q`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub clifford: Vec<Vec<Vec<String>>>,
    /// Entries may use `l` (a sample λ) and `s` (a square root of λ);
    /// `lambda` makes one module per sample, `root` one per signed root.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub template: Option<String>,
}

fn yes() -> bool {
    true
}

/// A module from the file together with its display name.
#[derive(Clone, Debug, PartialEq)]
pub struct NamedModule {
    pub name: String,
    pub module: SuperModule,
}

/// A parsed file. Modules are built but not yet validated.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub context: ShiftedContext,
    pub samples: Vec<Gaussian>,
    pub modules: Vec<NamedModule>,
}

impl Loaded {
    /// Fails with the first Jacobi or module violation.
    pub fn validated(self) -> Result<Self, SpecError> {
        check_jacobi(&self.context.algebra).map_err(|v| SpecError::Semantic(format!("algebra: {v}")))?;
        for m in &self.modules {
            m.module
                .validate()
                .map_err(|v| SpecError::Semantic(format!("module {}: {v}", m.name)))?;
        }
        Ok(self)
    }
}

pub fn parse_field(s: &str) -> Result<FieldTag, SpecError> {
    match s {
        "R" => Ok(FieldTag::RealQ),
        "C" => Ok(FieldTag::ComplexQi),
        other => Err(SpecError::Semantic(format!("field must be R or C, got {other:?}"))),
    }
}

fn parse_parity(s: &str) -> Result<Parity, SpecError> {
    match s {
        "even" | "0" => Ok(Parity::Even),
        "odd" | "1" => Ok(Parity::Odd),
        other => Err(SpecError::Semantic(format!("parity must be even or odd, got {other:?}"))),
    }
}

fn scalar(s: &str, what: &str) -> Result<Gaussian, SpecError> {
    parse_gaussian(s).map_err(|e| SpecError::Semantic(format!("{what}: {e}")))
}

pub fn read_spec(path: &Path) -> Result<SpecFile, SpecError> {
    let text = std::fs::read_to_string(path).map_err(|e| SpecError::Io(format!("{}: {e}", path.display())))?;
    parse_spec_text(&text, &path.display().to_string())
}

pub fn parse_spec_text(text: &str, path: &str) -> Result<SpecFile, SpecError> {
    let text = if text.trim().is_empty() { "{}" } else { text };
    serde_json::from_str(text).map_err(|e| SpecError::Syntax {
        path: path.into(),
        line: e.line(),
        column: e.column(),
        message: e.to_string().split(" at line").next().unwrap_or_default().to_string(),
    })
}

/// Builds the algebra, context and modules; templates are instantiated
/// over the λ samples.
pub fn load(spec: &SpecFile) -> Result<Loaded, SpecError> {
    let field = parse_field(&spec.field)?;
    let generators = spec
        .algebra
        .generators
        .iter()
        .map(|g| Ok((g.name.clone(), parse_parity(&g.parity)?)))
        .collect::<Result<Vec<_>, SpecError>>()?;
    let brackets = spec
        .algebra
        .brackets
        .iter()
        .map(|[x, y, z, c]| Ok(BracketTerm::new(x, y, z, scalar(c, &format!("bracket [{x},{y}]"))?)))
        .collect::<Result<Vec<_>, SpecError>>()?;
    let algebra = LieSuperAlgebra::from_brackets(field, &generators, &brackets)
        .map_err(|e| SpecError::Semantic(format!("algebra: {e}")))?;
    let [p, q] = spec.signature;
    let context = ShiftedContext::new(algebra, CliffordSignature::new(p, q));
    let samples = match &spec.samples {
        Some(s) => s.lambda.iter().map(|l| scalar(l, "sample")).collect::<Result<_, _>>()?,
        None => Vec::new(),
    };
    let mut modules = Vec::new();
    for block in &spec.modules {
        match block.template.as_deref() {
            None => modules.push(NamedModule {
                name: block.name.clone(),
                module: build_module(&context, block, None)?,
            }),
            Some(kind @ ("lambda" | "root")) => {
                for l in &samples {
                    let Some(s) = field_sqrt(field, l) else { continue };
                    let roots = if kind == "root" { vec![s.clone(), -s] } else { vec![s] };
                    for r in roots {
                        let index = if kind == "root" { &r } else { l };
                        modules.push(NamedModule {
                            name: format!("{}[{}]", block.name, format_gaussian(index)),
                            module: build_module(&context, block, Some((l, &r)))?,
                        });
                    }
                }
            }
            Some(other) => {
                return Err(SpecError::Semantic(format!(
                    "module {}: template must be lambda or root, got {other:?}",
                    block.name
                )))
            }
        }
    }
    Ok(Loaded { context, samples, modules })
}

fn entry(s: &str, sample: Option<(&Gaussian, &Gaussian)>, what: &str) -> Result<Gaussian, SpecError> {
    if let Some((l, r)) = sample {
        let t = s.trim();
        let (neg, body) = match t.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, t),
        };
        let value = match body {
            "l" => Some(l.clone()),
            "s" => Some(r.clone()),
            _ => None,
        };
        if let Some(v) = value {
            return Ok(if neg { -v } else { v });
        }
    }
    scalar(s, what)
}

fn matrix(
    rows: &[Vec<String>],
    dim: usize,
    sample: Option<(&Gaussian, &Gaussian)>,
    what: &str,
) -> Result<Matrix<Gaussian>, SpecError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(SpecError::Semantic(format!("{what} is not {dim}x{dim}")));
    }
    let entries = rows
        .iter()
        .map(|r| r.iter().map(|s| entry(s, sample, what)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(entries))
}

fn build_module(
    base: &ShiftedContext,
    block: &ModuleBlock,
    sample: Option<(&Gaussian, &Gaussian)>,
) -> Result<SuperModule, SpecError> {
    let g = &base.algebra;
    let name = &block.name;
    if !block.graded && block.odd != 0 {
        return Err(SpecError::Semantic(format!("module {name}: ungraded modules have odd = 0")));
    }
    for key in block.action.keys() {
        if g.index_of(key).is_none() {
            return Err(SpecError::Semantic(format!("module {name}: unknown generator {key:?}")));
        }
    }
    let dim = block.even + block.odd;
    let g_action = (0..g.dim())
        .map(|i| match block.action.get(g.name(i)) {
            Some(rows) => matrix(rows, dim, sample, &format!("module {name}: {}", g.name(i))),
            None => Ok(Matrix::zeros(dim, dim)),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let sig = match block.signature {
        Some([p, q]) => CliffordSignature::new(p, q),
        None => base.signature,
    };
    if block.clifford.len() != sig.count() {
        return Err(SpecError::Semantic(format!(
            "module {name}: expected {} Clifford matrices, got {}",
            sig.count(),
            block.clifford.len()
        )));
    }
    let cliff_action = block
        .clifford
        .iter()
        .enumerate()
        .map(|(k, rows)| matrix(rows, dim, sample, &format!("module {name}: {}", sig.generator_name(k))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SuperModule {
        context: base.with_signature(sig),
        space: SuperSpace::new(block.even, block.odd, g.field()),
        graded: block.graded,
        g_action,
        cliff_action,
    })
}

fn text_rows(m: &Matrix<Gaussian>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(format_gaussian).collect()).collect()
}

/// The file form of a context and a list of concrete modules.
pub fn serialize(context: &ShiftedContext, modules: &[NamedModule]) -> SpecFile {
    let g = &context.algebra;
    let n = g.dim();
    let generators = (0..n)
        .map(|i| GeneratorBlock {
            name: g.name(i).into(),
            parity: if g.parity(i).is_odd() { "odd" } else { "even" }.into(),
        })
        .collect();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let c = g.constant(i, j, k);
                if !c.is_zero() {
                    brackets.push([g.name(i).into(), g.name(j).into(), g.name(k).into(), format_gaussian(c)]);
                }
            }
        }
    }
    let base = context.signature;
    let modules = modules
        .iter()
        .map(|m| {
            let s = m.module.context.signature;
            ModuleBlock {
                name: m.name.clone(),
                graded: m.module.graded,
                signature: (s != base).then_some([s.p, s.q]),
                even: m.module.space.even,
                odd: m.module.space.odd,
                action: (0..n).map(|i| (g.name(i).to_string(), text_rows(&m.module.g_action[i]))).collect(),
                clifford: m.module.cliff_action.iter().map(text_rows).collect(),
                template: None,
            }
        })
        .collect();
    SpecFile {
        field: g.field().name().into(),
        algebra: AlgebraBlock { generators, brackets },
        signature: [base.p, base.q],
        samples: None,
        modules,
    }
}
