//! Labels, real forms, and the good/bad parity split of a dual orbit.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{AlgebraFamily, DiagramError, UnionMode, YoungDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParityError {
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("cannot parse group {0:?}")]
    BadGroup(String),
    #[error("label {0} does not apply here")]
    WrongLabel(Label),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("orbit {0} is very even and needs a variant I or II")]
    VariantRequired(YoungDiagram),
    #[error("variant {variant} is not allowed for {diagram} with label {label}")]
    VariantNotAllowed { label: Label, diagram: YoungDiagram, variant: Variant },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    AR,
    AH,
    A,
    At,
    B,
    D,
    C,
    Ct,
    Dstar,
    Cstar,
    AC,
    BC,
    DC,
    CC,
    CtC,
}

impl Label {
    pub const REAL: [Label; 10] = [
        Label::AR,
        Label::AH,
        Label::A,
        Label::At,
        Label::B,
        Label::D,
        Label::C,
        Label::Ct,
        Label::Dstar,
        Label::Cstar,
    ];
    pub const BCD: [Label; 6] = [Label::B, Label::C, Label::Ct, Label::D, Label::Cstar, Label::Dstar];

    pub fn is_complex(self) -> bool {
        matches!(self, Label::AC | Label::BC | Label::DC | Label::CC | Label::CtC)
    }

    pub fn is_a_family(self) -> bool {
        matches!(self, Label::AR | Label::AH | Label::A | Label::At | Label::AC)
    }

    /// The real label whose parity pattern a complex label follows.
    pub fn real_pattern(self) -> Label {
        match self {
            Label::AC => Label::A,
            Label::BC => Label::B,
            Label::DC => Label::D,
            Label::CC => Label::C,
            Label::CtC => Label::Ct,
            l => l,
        }
    }

    /// Family of the dual Lie algebra, which the orbit diagram lives in.
    pub fn dual_family(self) -> AlgebraFamily {
        match self.real_pattern() {
            Label::B | Label::Ct => AlgebraFamily::C,
            Label::C | Label::Cstar => AlgebraFamily::B,
            Label::D | Label::Dstar => AlgebraFamily::D,
            _ => AlgebraFamily::GL,
        }
    }

    /// Family of the complexified Lie algebra of the group itself.
    pub fn group_family(self) -> AlgebraFamily {
        match self.real_pattern() {
            Label::B => AlgebraFamily::B,
            Label::C | Label::Ct | Label::Cstar => AlgebraFamily::C,
            Label::D | Label::Dstar => AlgebraFamily::D,
            _ => AlgebraFamily::GL,
        }
    }

    /// Rank of the group attached to an orbit of the given size.
    pub fn rank_from_size(self, size: usize) -> usize {
        match self.real_pattern() {
            Label::C | Label::Cstar => size.saturating_sub(1) / 2,
            Label::B | Label::Ct | Label::D | Label::Dstar => size / 2,
            _ => size,
        }
    }

    pub fn cli_name(self) -> &'static str {
        match self {
            Label::AR => "AR",
            Label::AH => "AH",
            Label::A => "A",
            Label::At => "At",
            Label::B => "B",
            Label::D => "D",
            Label::C => "C",
            Label::Ct => "Ct",
            Label::Dstar => "Dstar",
            Label::Cstar => "Cstar",
            Label::AC => "AC",
            Label::BC => "BC",
            Label::DC => "DC",
            Label::CC => "CC",
            Label::CtC => "CtC",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for Label {
    type Err = ParityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Label::REAL
            .iter()
            .chain(&[Label::AC, Label::BC, Label::DC, Label::CC, Label::CtC])
            .copied()
            .find(|l| l.cli_name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| ParityError::UnknownLabel(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupParams {
    Rank(usize),
    Signature(usize, usize),
}

/// A real (or complex) classical group, e.g. `SO(p,q)`, `Sp_2n(R)`, `U(p,q)`.
///
/// For `Cstar` the signature is stored doubled: `Sp(a,b)` has `(p,q) = (2a,2b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupForm {
    pub label: Label,
    pub params: GroupParams,
}

impl GroupForm {
    pub fn with_rank(label: Label, n: usize) -> Self {
        Self { label, params: GroupParams::Rank(n) }
    }

    pub fn with_signature(label: Label, p: usize, q: usize) -> Self {
        Self { label, params: GroupParams::Signature(p, q) }
    }

    pub fn signature(&self) -> Option<(usize, usize)> {
        match self.params {
            GroupParams::Signature(p, q) => Some((p, q)),
            GroupParams::Rank(_) => None,
        }
    }

    /// Rank of the group in the sense used for orbit sizes.
    pub fn rank(&self) -> usize {
        match (self.label.real_pattern(), self.params) {
            (_, GroupParams::Rank(n)) => n,
            (Label::A | Label::At, GroupParams::Signature(p, q)) => p + q,
            (_, GroupParams::Signature(p, q)) => (p + q) / 2,
        }
    }
}

/// Every real form carrying `label` whose orbits have size parameter `n`.
pub fn real_forms(label: Label, n: usize) -> Vec<GroupForm> {
    match label {
        Label::A | Label::At => (0..=n).map(|p| GroupForm::with_signature(label, p, n - p)).collect(),
        Label::B => (0..=2 * n + 1).map(|p| GroupForm::with_signature(label, p, 2 * n + 1 - p)).collect(),
        Label::D => (0..=2 * n).map(|p| GroupForm::with_signature(label, p, 2 * n - p)).collect(),
        Label::Cstar => (0..=n).map(|a| GroupForm::with_signature(label, 2 * a, 2 * (n - a))).collect(),
        Label::AH if n % 2 == 1 => Vec::new(),
        l if l.is_complex() => Vec::new(),
        _ => vec![GroupForm::with_rank(label, n)],
    }
}

impl fmt::Display for GroupForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.label, self.params) {
            (Label::AR, GroupParams::Rank(n)) => write!(f, "GL_{n}(R)"),
            (Label::AH, GroupParams::Rank(n)) => write!(f, "GL_{}(H)", n / 2),
            (Label::A, GroupParams::Signature(p, q)) => write!(f, "U({p},{q})"),
            (Label::At, GroupParams::Signature(p, q)) => write!(f, "U~({p},{q})"),
            (Label::B | Label::D, GroupParams::Signature(p, q)) => write!(f, "SO({p},{q})"),
            (Label::C, GroupParams::Rank(n)) => write!(f, "Sp_{}(R)", 2 * n),
            (Label::Ct, GroupParams::Rank(n)) => write!(f, "Mp_{}(R)", 2 * n),
            (Label::Cstar, GroupParams::Signature(p, q)) => write!(f, "Sp({},{})", p / 2, q / 2),
            (Label::Dstar, GroupParams::Rank(n)) => write!(f, "SO*({})", 2 * n),
            (l, GroupParams::Rank(n)) => write!(f, "{l}:{n}"),
            (l, GroupParams::Signature(p, q)) => write!(f, "{l}:{p},{q}"),
        }
    }
}

impl FromStr for GroupForm {
    type Err = ParityError;

    /// Accepts `Sp:4`, `Sp4R`, `Mp:4`, `SO:3,2`, `SOstar:4`, `Sp:1,1`,
    /// `GL:3`, `GL3R`, `GLH:4`, `U:2,1`, `Ut:2,1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParityError::BadGroup(s.to_string());
        let t = s.trim();
        let (name, args) = match t.split_once(':') {
            Some((a, b)) => (a.to_string(), b.to_string()),
            None => {
                // compact forms like Sp4R, Mp6R, GL3R
                let body = t.strip_suffix('R').ok_or_else(bad)?;
                let split = body.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
                (body[..split].to_string(), body[split..].to_string())
            }
        };
        let nums: Vec<usize> =
            args.split(',').map(|x| x.trim().parse::<usize>()).collect::<Result<_, _>>().map_err(|_| bad())?;
        let even_half = |m: usize| if m.is_multiple_of(2) { Ok(m / 2) } else { Err(bad()) };
        match (name.as_str(), nums.as_slice()) {
            ("Sp", [m]) => Ok(Self::with_rank(Label::C, even_half(*m)?)),
            ("Mp", [m]) => Ok(Self::with_rank(Label::Ct, even_half(*m)?)),
            ("SOstar", [m]) => Ok(Self::with_rank(Label::Dstar, even_half(*m)?)),
            ("Sp", [a, b]) => Ok(Self::with_signature(Label::Cstar, 2 * a, 2 * b)),
            ("SO", [p, q]) => {
                let label = if (p + q) % 2 == 1 { Label::B } else { Label::D };
                Ok(Self::with_signature(label, *p, *q))
            }
            ("GL", [n]) => Ok(Self::with_rank(Label::AR, *n)),
            ("GLH", [m]) => Ok(Self::with_rank(Label::AH, 2 * m)),
            ("U", [p, q]) => Ok(Self::with_signature(Label::A, *p, *q)),
            ("Ut", [p, q]) => Ok(Self::with_signature(Label::At, *p, *q)),
            _ => Err(bad()),
        }
    }
}

/// Marker distinguishing the two orbits sharing a very even diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Variant {
    #[default]
    Unique,
    I,
    II,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Unique => "unique",
            Variant::I => "I",
            Variant::II => "II",
        })
    }
}

impl FromStr for Variant {
    type Err = ParityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "I" | "1" => Ok(Variant::I),
            "II" | "2" => Ok(Variant::II),
            "unique" | "" => Ok(Variant::Unique),
            other => Err(ParityError::UnknownLabel(other.to_string())),
        }
    }
}

/// A dual nilpotent orbit: label, diagram and very-even variant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitSpec {
    pub star: Label,
    pub d: YoungDiagram,
    pub variant: Variant,
}

pub fn is_very_even(d: &YoungDiagram) -> bool {
    !d.is_empty() && d.rows().iter().all(|r| r % 2 == 0)
}

impl OrbitSpec {
    pub fn new(star: Label, d: YoungDiagram, variant: Variant) -> Result<Self, ParityError> {
        let fam = star.dual_family();
        if !d.is_valid_orbit(fam) {
            return Err(DiagramError::InvalidOrbit { diagram: d, family: fam }.into());
        }
        let size_ok = match star.real_pattern() {
            Label::B | Label::Ct | Label::D | Label::Dstar => d.size().is_multiple_of(2),
            Label::C | Label::Cstar => d.size() % 2 == 1,
            _ => true,
        };
        if !size_ok {
            return Err(DiagramError::IncompatibleSize { size: d.size(), family: fam }.into());
        }
        let d_family = matches!(star.real_pattern(), Label::D | Label::Dstar);
        let needs_variant = d_family && is_very_even(&d);
        match (needs_variant, variant) {
            (true, Variant::Unique) => Err(ParityError::VariantRequired(d)),
            (false, Variant::I | Variant::II) => {
                Err(ParityError::VariantNotAllowed { label: star, diagram: d, variant })
            }
            _ => Ok(Self { star, d, variant }),
        }
    }

    /// Like [`OrbitSpec::new`], defaulting very even diagrams to variant I.
    pub fn new_default(star: Label, d: YoungDiagram) -> Result<Self, ParityError> {
        let d_family = matches!(star.real_pattern(), Label::D | Label::Dstar);
        let variant = if d_family && is_very_even(&d) { Variant::I } else { Variant::Unique };
        Self::new(star, d, variant)
    }

    pub fn rank(&self) -> usize {
        self.star.rank_from_size(self.d.size())
    }
}

/// Whether a row of length `k` has good parity for `star` (rank `n` for the A family).
pub fn good_parity(k: usize, star: Label, n: usize) -> bool {
    match star.real_pattern() {
        Label::AR | Label::AH | Label::A => k % 2 == n % 2,
        Label::At => k % 2 == (n + 1) % 2,
        Label::C | Label::Cstar | Label::D | Label::Dstar => k % 2 == 1,
        _ => k.is_multiple_of(2),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityDecomposition {
    pub d_g: YoungDiagram,
    pub d_b: YoungDiagram,
    pub d_b_prime: Option<YoungDiagram>,
    pub n_b: usize,
    pub n_g: usize,
}

pub fn split_parity(spec: &OrbitSpec) -> ParityDecomposition {
    let n = spec.d.size();
    let (good, bad): (Vec<usize>, Vec<usize>) = spec.d.rows().iter().partition(|&&r| good_parity(r, spec.star, n));
    let d_g = YoungDiagram::from_rows(good);
    let d_b = YoungDiagram::from_rows(bad.clone());
    let d_b_prime = if bad.chunks(2).all(|w| w.len() == 2 && w[0] == w[1]) {
        Some(YoungDiagram::from_rows(bad.iter().step_by(2).copied()))
    } else {
        None
    };
    let n_b = d_b_prime.as_ref().map_or(0, YoungDiagram::size);
    let n_g = spec.star.rank_from_size(d_g.size());
    ParityDecomposition { d_g, d_b, d_b_prime, n_b, n_g }
}

pub fn analytically_even(spec: &OrbitSpec) -> bool {
    if spec.star.real_pattern() == Label::At {
        let rows = spec.d.rows();
        rows.iter().all(|r| r % 2 == 0) || rows.iter().all(|r| r % 2 == 1)
    } else {
        split_parity(spec).d_b.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CellType {
    I,
    II,
}

impl fmt::Display for CellType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellType::I => "I",
            CellType::II => "II",
        })
    }
}

/// Type of the bad part: I iff the number of negative coordinates of the
/// chosen dominant infinitesimal character matches `n_b/2` mod 2. For `Ct`
/// the argument is the good part and the rule reads off `n_g/2`.
pub fn bad_part_type(star: Label, d: &YoungDiagram, variant: Variant) -> Result<CellType, ParityError> {
    match star.real_pattern() {
        Label::C | Label::Cstar | Label::D | Label::Dstar => {
            let n_b = d.size() / 2;
            let negatives = usize::from(variant == Variant::II);
            Ok(if negatives % 2 == (n_b / 2) % 2 { CellType::I } else { CellType::II })
        }
        Label::Ct => {
            let n_g = d.size() / 2;
            Ok(if (n_g / 2).is_multiple_of(2) { CellType::I } else { CellType::II })
        }
        l => Err(ParityError::WrongLabel(l)),
    }
}

/// Whether the orbit contributes for this real form at all.
pub fn relevance(group: &GroupForm, spec: &OrbitSpec) -> bool {
    let split = split_parity(spec);
    match spec.star.real_pattern() {
        Label::B | Label::D | Label::Cstar => match group.signature() {
            Some((p, q)) => p >= split.n_b && q >= split.n_b,
            None => false,
        },
        Label::Dstar => {
            let non_relevant = split.n_g == 0
                && split.n_b > 0
                && bad_part_type(Label::Dstar, &split.d_b, spec.variant) == Ok(CellType::II);
            !non_relevant
        }
        _ => true,
    }
}

/// Rows of `d_b` and `d_g` merged back; the inverse of [`split_parity`].
pub fn rejoin(split: &ParityDecomposition) -> YoungDiagram {
    split.d_b.union(&split.d_g, UnionMode::Rows)
}
