//! Configurations of skew lines `L₀, L∞, L₁, …, L_r`, stored as the matrices
//! `M_i` whose graphs `{(v, M_i v)}` are the lines.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactfield::{Field, FieldError, FieldSpec};
use crate::groupoid::{generator_set, GeneratorMode};
use crate::linalg2::{eigenvectors, EigenReport, Mat2, MatrixCode, ProjPoint};

/// Index of a line. Matrix lines are numbered from 1 in file order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineId {
    Infinity,
    Zero,
    M(usize),
}

impl fmt::Display for LineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineId::Infinity => write!(f, "inf"),
            LineId::Zero => write!(f, "0"),
            LineId::M(i) => write!(f, "{i}"),
        }
    }
}

impl Serialize for LineId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LineId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for LineId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "inf" | "infinity" | "∞" => Ok(LineId::Infinity),
            "0" | "zero" => Ok(LineId::Zero),
            _ => match s.parse::<usize>() {
                Ok(i) if i >= 1 => Ok(LineId::M(i)),
                _ => Err(format!("`{s}` is not a line index")),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("bad configuration: {0}")]
    Parse(String),
    #[error("configuration is not a set of skew lines: {0}")]
    Invalid(ValidationReport),
}

/// One entry of the `lines` array.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LineCode {
    /// `"zero"`, `"infinity"` or `"identity"`.
    Keyword(String),
    Matrix(MatrixCode),
}

/// JSON form of a configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigFile {
    pub field: FieldSpec,
    pub lines: Vec<LineCode>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineConfig {
    field: Field,
    include_zero: bool,
    include_infinity: bool,
    matrices: Vec<Mat2>,
}

impl LineConfig {
    /// Builds and validates.
    pub fn new(
        field: &Field,
        include_zero: bool,
        include_infinity: bool,
        matrices: Vec<Mat2>,
    ) -> Result<LineConfig, ConfigError> {
        let cfg = LineConfig::unchecked(field, include_zero, include_infinity, matrices)?;
        let report = cfg.validate();
        if report.valid {
            Ok(cfg)
        } else {
            Err(ConfigError::Invalid(report))
        }
    }

    /// `{L₀, L∞} ∪ {M_i}`, validated.
    pub fn standard(field: &Field, matrices: Vec<Mat2>) -> Result<LineConfig, ConfigError> {
        LineConfig::new(field, true, true, matrices)
    }

    /// Builds without checking skewness; only field membership is checked.
    pub fn unchecked(
        field: &Field,
        include_zero: bool,
        include_infinity: bool,
        matrices: Vec<Mat2>,
    ) -> Result<LineConfig, ConfigError> {
        if matrices.iter().any(|m| !m.field().same(field)) {
            return Err(FieldError::MixedFields.into());
        }
        Ok(LineConfig {
            field: field.clone(),
            include_zero,
            include_infinity,
            matrices,
        })
    }

    pub fn from_file(file: &ConfigFile) -> Result<LineConfig, ConfigError> {
        let cfg = LineConfig::from_file_unchecked(file)?;
        let report = cfg.validate();
        if report.valid {
            Ok(cfg)
        } else {
            Err(ConfigError::Invalid(report))
        }
    }

    pub fn from_file_unchecked(file: &ConfigFile) -> Result<LineConfig, ConfigError> {
        let field = Field::new(&file.field)?;
        let (mut zero, mut inf) = (false, false);
        let mut matrices = Vec::new();
        for line in &file.lines {
            match line {
                LineCode::Keyword(k) => match k.as_str() {
                    "zero" if !zero => zero = true,
                    "infinity" if !inf => inf = true,
                    "zero" | "infinity" => {
                        return Err(ConfigError::Parse(format!("`{k}` listed twice")))
                    }
                    "identity" => matrices.push(Mat2::identity(&field)),
                    _ => return Err(ConfigError::Parse(format!("unknown line keyword `{k}`"))),
                },
                LineCode::Matrix(code) => matrices.push(Mat2::from_code(&field, code)?),
            }
        }
        LineConfig::unchecked(&field, zero, inf, matrices)
    }

    pub fn from_json(s: &str) -> Result<LineConfig, ConfigError> {
        let file: ConfigFile =
            serde_json::from_str(s).map_err(|e| ConfigError::Parse(e.to_string()))?;
        LineConfig::from_file(&file)
    }

    pub fn to_file(&self) -> ConfigFile {
        let mut lines = Vec::new();
        if self.include_zero {
            lines.push(LineCode::Keyword("zero".into()));
        }
        if self.include_infinity {
            lines.push(LineCode::Keyword("infinity".into()));
        }
        for m in &self.matrices {
            if m.is_identity() {
                lines.push(LineCode::Keyword("identity".into()));
            } else {
                lines.push(LineCode::Matrix(m.to_code()));
            }
        }
        ConfigFile {
            field: self.field.spec().clone(),
            lines,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("plain data")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn has_zero(&self) -> bool {
        self.include_zero
    }

    pub fn has_infinity(&self) -> bool {
        self.include_infinity
    }

    pub fn matrices(&self) -> &[Mat2] {
        &self.matrices
    }

    /// Every line, in the order ∞, 0, 1, …, r.
    pub fn lines(&self) -> Vec<LineId> {
        let mut out = Vec::new();
        if self.include_infinity {
            out.push(LineId::Infinity);
        }
        if self.include_zero {
            out.push(LineId::Zero);
        }
        out.extend((1..=self.matrices.len()).map(LineId::M));
        out
    }

    pub fn contains(&self, id: LineId) -> bool {
        match id {
            LineId::Infinity => self.include_infinity,
            LineId::Zero => self.include_zero,
            LineId::M(i) => i >= 1 && i <= self.matrices.len(),
        }
    }

    /// `M_i`, with `M₀ = 0`; `None` for `L∞` and for absent lines.
    pub fn matrix(&self, id: LineId) -> Option<Mat2> {
        if !self.contains(id) {
            return None;
        }
        match id {
            LineId::Infinity => None,
            LineId::Zero => Some(Mat2::zero(&self.field)),
            LineId::M(i) => Some(self.matrices[i - 1].clone()),
        }
    }

    /// Index of the first `M_i = I`, if any.
    pub fn identity_index(&self) -> Option<usize> {
        self.matrices.iter().position(Mat2::is_identity).map(|i| i + 1)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if self.include_zero {
            for (i, m) in self.matrices.iter().enumerate() {
                if !m.is_invertible() {
                    report.meets_zero.push(i + 1);
                }
            }
        }
        if let Some(one) = self.identity_index() {
            let id = &self.matrices[one - 1];
            for (i, m) in self.matrices.iter().enumerate() {
                if i + 1 != one && !m.sub(id).is_invertible() {
                    report.meets_identity.push(i + 1);
                }
            }
        }
        for i in 0..self.matrices.len() {
            for j in i + 1..self.matrices.len() {
                if !self.matrices[i].sub(&self.matrices[j]).is_invertible() {
                    report.meeting_pairs.push((i + 1, j + 1));
                }
            }
        }
        report.valid = report.meets_zero.is_empty()
            && report.meets_identity.is_empty()
            && report.meeting_pairs.is_empty();
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().valid
    }

    /// The reduced matrices `N_i = M_1⁻¹ M_i`, `i ≥ 2`; a transversal meets
    /// `L₀` at `(v, 0)` exactly when `v` is a common eigenvector of all `N_i`.
    fn reduced(&self) -> Vec<Mat2> {
        let Some(first) = self.matrices.first() else {
            return Vec::new();
        };
        let inv = first.inv().expect("valid configurations have invertible matrices");
        self.matrices[1..].iter().map(|m| inv.mul(m)).collect()
    }

    pub fn transversal_exists(&self) -> bool {
        self.transversal_compute().exists
    }

    pub fn transversal_compute(&self) -> TransversalReport {
        if !(self.include_zero && self.include_infinity) {
            return TransversalReport {
                exists: false,
                infinitely_many: false,
                witnesses: Vec::new(),
                method: TransversalMethod::Unsupported,
            };
        }
        let reduced: Vec<Mat2> = self
            .reduced()
            .into_iter()
            .filter(|m| !m.is_scalar())
            .collect();
        if reduced.is_empty() {
            // every v works: the lines lie on a common quadric
            return TransversalReport {
                exists: true,
                infinitely_many: true,
                witnesses: Vec::new(),
                method: TransversalMethod::SimultaneousEigen,
            };
        }
        let common = |v: &ProjPoint| reduced.iter().all(|m| is_eigenline(m, v));
        for (i, a) in reduced.iter().enumerate() {
            for b in &reduced[i + 1..] {
                let c = a.commutator(b);
                if c.is_zero() {
                    continue;
                }
                let witnesses: Vec<ProjPoint> = match c.kernel_line() {
                    Some(v) if common(&v) => vec![v],
                    _ => Vec::new(),
                };
                return TransversalReport {
                    exists: !witnesses.is_empty(),
                    infinitely_many: false,
                    witnesses,
                    method: TransversalMethod::CommutatorKernel,
                };
            }
        }
        // pairwise commuting and non-scalar: they share the eigenlines of the first
        match eigenvectors(&reduced[0]) {
            EigenReport::Split { pairs } => {
                let witnesses: Vec<ProjPoint> = pairs
                    .into_iter()
                    .map(|(_, v)| v)
                    .filter(|v| common(v))
                    .collect();
                TransversalReport {
                    exists: !witnesses.is_empty(),
                    infinitely_many: false,
                    witnesses,
                    method: TransversalMethod::SimultaneousEigen,
                }
            }
            _ => TransversalReport {
                exists: true,
                infinitely_many: false,
                witnesses: Vec::new(),
                method: TransversalMethod::ExtensionRequired,
            },
        }
    }

    pub fn predict_abelian(&self) -> AbelianReport {
        let mut pairs = Vec::new();
        for i in 0..self.matrices.len() {
            for j in i + 1..self.matrices.len() {
                pairs.push(PairLabel {
                    i: i + 1,
                    j: j + 1,
                    relation: relation(&self.matrices[i], &self.matrices[j]),
                });
            }
        }
        let abelian = if self.include_zero && self.identity_index().is_some() {
            // [M_i] = F_{i10} lies in the group; anticommuting pairs force a
            // non-commuting pair among the [M_i − M_j]
            pairs.iter().all(|p| p.relation.commutes())
        } else {
            let gens = generator_set(self, GeneratorMode::AllTriples).expect("all triples always apply");
            let els = gens.elements();
            els.iter()
                .enumerate()
                .all(|(k, g)| els[k + 1..].iter().all(|h| g.commutes_with(h)))
        };
        AbelianReport { abelian, pairs }
    }
}

fn is_eigenline(m: &Mat2, v: &ProjPoint) -> bool {
    let (x, y) = m.apply(v.x(), v.y());
    (&(v.x() * &y) - &(v.y() * &x)).is_zero()
}

/// Non-scalar and with a single eigenline.
fn is_jordan(m: &Mat2) -> bool {
    let t = m.trace();
    !m.is_scalar() && (&(&t * &t) - &(&m.field().from_i64(4) * &m.det())).is_zero()
}

fn relation(a: &Mat2, b: &Mat2) -> PairRelation {
    if a.is_scalar() || b.is_scalar() {
        return PairRelation::Scalar;
    }
    let ab = a.mul(b);
    let ba = b.mul(a);
    if ab == ba {
        if is_jordan(a) {
            PairRelation::SharedEigenspace
        } else {
            PairRelation::SimultaneouslyDiagonalizable
        }
    } else if ab == ba.neg() {
        PairRelation::Anticommuting
    } else {
        PairRelation::NonCommuting
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    /// Singular `M_i` (the line meets `L₀`).
    pub meets_zero: Vec<usize>,
    /// `M_i` with eigenvalue 1 (the line meets `L₁ = I`).
    pub meets_identity: Vec<usize>,
    /// Pairs with `M_i − M_j` singular.
    pub meeting_pairs: Vec<(usize, usize)>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return write!(f, "valid");
        }
        let mut parts = Vec::new();
        for i in &self.meets_zero {
            parts.push(format!("L{i} meets L0"));
        }
        for i in &self.meets_identity {
            parts.push(format!("L{i} meets the identity line"));
        }
        for (i, j) in &self.meeting_pairs {
            parts.push(format!("L{i} meets L{j}"));
        }
        write!(f, "{}", parts.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TransversalMethod {
    CommutatorKernel,
    SimultaneousEigen,
    ExtensionRequired,
    /// `L₀` or `L∞` is missing.
    Unsupported,
}

/// Transversals through `L₀` and `L∞`: each witness `v` gives the line
/// spanned by `(v, 0)` and `(0, M₁ v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalReport {
    pub exists: bool,
    pub infinitely_many: bool,
    pub witnesses: Vec<ProjPoint>,
    pub method: TransversalMethod,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairRelation {
    SimultaneouslyDiagonalizable,
    SharedEigenspace,
    Scalar,
    /// `AB = −BA ≠ BA`: the classes commute in PGL₂ but the matrices do not.
    Anticommuting,
    NonCommuting,
}

impl PairRelation {
    /// Whether the matrices themselves commute.
    pub fn commutes(self) -> bool {
        matches!(
            self,
            PairRelation::SimultaneouslyDiagonalizable
                | PairRelation::SharedEigenspace
                | PairRelation::Scalar
        )
    }

    /// Whether the classes commute in PGL₂.
    pub fn classes_commute(self) -> bool {
        self != PairRelation::NonCommuting
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairLabel {
    pub i: usize,
    pub j: usize,
    pub relation: PairRelation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianReport {
    pub abelian: bool,
    pub pairs: Vec<PairLabel>,
}

#[cfg(test)]
mod tests;
