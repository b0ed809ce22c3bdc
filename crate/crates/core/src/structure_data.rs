//! Structure constants of the tube-type Hermitian groups in exact rational
//! arithmetic, and the table comparing the complementary-series bound R with
//! L_pos + ρ.

use std::fmt;

use crate::{Error, Rational, Result};

/// The five tube-type families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// SU(n,n).
    SuNN,
    /// SO*(4n).
    SoStar4n,
    /// Sp(n,ℝ).
    SpNR,
    /// SO_o(k,2).
    SoK2,
    /// E_{7(−25)}.
    E7Minus25,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 5] =
        [FamilyKind::SuNN, FamilyKind::SoStar4n, FamilyKind::SpNR, FamilyKind::SoK2, FamilyKind::E7Minus25];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::SuNN => "SU_nn",
            FamilyKind::SoStar4n => "SOstar_4n",
            FamilyKind::SpNR => "Sp_nR",
            FamilyKind::SoK2 => "SO_k2",
            FamilyKind::E7Minus25 => "E7_minus25",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInput(format!("unknown family {s}")))
    }

    fn min_rank(&self) -> i64 {
        match self {
            FamilyKind::SoK2 => 3,
            _ => 1,
        }
    }
}

/// A family together with its rank parameter (n, or k for SO(k,2); ignored for E7).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TubeFamily {
    kind: FamilyKind,
    rank_param: i64,
}

impl TubeFamily {
    pub fn new(kind: FamilyKind, rank_param: i64) -> Result<Self> {
        let rank_param = if kind == FamilyKind::E7Minus25 { 1 } else { rank_param };
        if rank_param < kind.min_rank() {
            return Err(Error::InvalidRank { family: kind.name().into(), rank: rank_param });
        }
        Ok(Self { kind, rank_param })
    }

    pub fn e7() -> Self {
        Self { kind: FamilyKind::E7Minus25, rank_param: 1 }
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn rank_param(&self) -> i64 {
        self.rank_param
    }
}

impl fmt::Display for TubeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::SuNN => write!(f, "SU({0},{0})", self.rank_param),
            FamilyKind::SoStar4n => write!(f, "SO*({})", 4 * self.rank_param),
            FamilyKind::SpNR => write!(f, "Sp({},R)", self.rank_param),
            FamilyKind::SoK2 => write!(f, "SO({},2)", self.rank_param),
            FamilyKind::E7Minus25 => write!(f, "E7(-25)"),
        }
    }
}

/// (r, d): rank and common dimension of the root spaces g_{±(γᵢ+γⱼ)/2}.
///
/// Reference data from Moore's restricted-root theorem:
/// SU(n,n) (n, 2); Sp(n,ℝ) (n, 1); SO*(4n) (2n, 4); SO(k,2) (2, k−2); E_{7(−25)} (3, 8).
pub fn root_data(family: &TubeFamily) -> (i64, i64) {
    let n = family.rank_param;
    match family.kind {
        FamilyKind::SuNN => (n, 2),
        FamilyKind::SpNR => (n, 1),
        FamilyKind::SoStar4n => (2 * n, 4),
        FamilyKind::SoK2 => (2, n - 2),
        FamilyKind::E7Minus25 => (3, 8),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TubeConstants {
    pub r: i64,
    pub d: i64,
    pub gamma: i64,
    pub rho_scalar: Rational,
    pub l_pos: Rational,
    pub l_pos_plus_rho: Rational,
}

/// γ = r, ρ = r(1 + (r−1)d/2), L_pos = −γ(r−1)d/2.
pub fn tube_constants(family: &TubeFamily) -> Result<TubeConstants> {
    let family = TubeFamily::new(family.kind, family.rank_param)?;
    let (r, d) = root_data(&family);
    let gamma = r;
    let half = Rational::new(1, 2);
    let rr = Rational::from_integer(r);
    let dd = Rational::from_integer(d);
    let rho_scalar = rr * (Rational::from_integer(1) + (rr - 1) * dd * half);
    let l_pos = -Rational::from_integer(gamma) * (rr - 1) * dd * half;
    Ok(TubeConstants { r, d, gamma, rho_scalar, l_pos, l_pos_plus_rho: l_pos + rho_scalar })
}

/// a·n + b.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Affine {
    pub a: i64,
    pub b: i64,
}

impl Affine {
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn at(&self, n: i64) -> i64 {
        self.a * n + self.b
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, b) => write!(f, "{b}"),
            (1, 0) => write!(f, "n"),
            (a, 0) => write!(f, "{a}n"),
            (1, b) => write!(f, "n+{b}"),
            (a, b) => write!(f, "{a}n+{b}"),
        }
    }
}

/// One symbolic row of the Cayley-type table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CayleyRow {
    /// Lie algebra pattern, e.g. "su(2n+1,2n+1)".
    pub algebra: &'static str,
    pub kind: FamilyKind,
    /// Rank parameter of the family as a function of n.
    pub rank_param: Affine,
    /// Complementary-series bound R: stored reference data, not computed.
    pub reference_r: Affine,
    /// Tabulated L_pos + ρ.
    pub tabulated: Affine,
}

pub const CAYLEY_ROWS: [CayleyRow; 9] = [
    CayleyRow { algebra: "su(2n+1,2n+1)", kind: FamilyKind::SuNN, rank_param: Affine::new(2, 1), reference_r: Affine::new(2, 1), tabulated: Affine::new(2, 1) },
    CayleyRow { algebra: "su(2n,2n)", kind: FamilyKind::SuNN, rank_param: Affine::new(2, 0), reference_r: Affine::new(0, 0), tabulated: Affine::new(2, 0) },
    CayleyRow { algebra: "so*(4n)", kind: FamilyKind::SoStar4n, rank_param: Affine::new(1, 0), reference_r: Affine::new(1, 0), tabulated: Affine::new(2, 0) },
    CayleyRow { algebra: "sp(2n,R)", kind: FamilyKind::SpNR, rank_param: Affine::new(2, 0), reference_r: Affine::new(1, 0), tabulated: Affine::new(2, 0) },
    CayleyRow { algebra: "sp(2n+1,R)", kind: FamilyKind::SpNR, rank_param: Affine::new(2, 1), reference_r: Affine::new(0, 0), tabulated: Affine::new(2, 1) },
    CayleyRow { algebra: "so(4n+2,2)", kind: FamilyKind::SoK2, rank_param: Affine::new(4, 2), reference_r: Affine::new(0, 2), tabulated: Affine::new(0, 2) },
    CayleyRow { algebra: "so(2n+1,2)", kind: FamilyKind::SoK2, rank_param: Affine::new(2, 1), reference_r: Affine::new(0, 1), tabulated: Affine::new(0, 2) },
    CayleyRow { algebra: "so(4n,2)", kind: FamilyKind::SoK2, rank_param: Affine::new(4, 0), reference_r: Affine::new(0, 0), tabulated: Affine::new(0, 2) },
    CayleyRow { algebra: "E7(-25)", kind: FamilyKind::E7Minus25, rank_param: Affine::new(0, 1), reference_r: Affine::new(0, 3), tabulated: Affine::new(0, 3) },
];

/// A table row instantiated at a value of n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyEntry {
    pub row: CayleyRow,
    pub n: i64,
    pub family: TubeFamily,
    pub constants: TubeConstants,
    /// Reference R at this n.
    pub r_value: i64,
    /// Computed L_pos + ρ equals the tabulated value.
    pub matches_table: bool,
    /// R ≤ L_pos + ρ.
    pub bound_holds: bool,
}

/// The nine rows at a given n ≥ 1.
pub fn cayley_table(n: i64) -> Result<Vec<CayleyEntry>> {
    if n < 1 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    CAYLEY_ROWS
        .iter()
        .map(|row| {
            let family = TubeFamily::new(row.kind, row.rank_param.at(n))?;
            let constants = tube_constants(&family)?;
            let r_value = row.reference_r.at(n);
            let lr = constants.l_pos_plus_rho;
            Ok(CayleyEntry {
                row: *row,
                n,
                family,
                constants,
                r_value,
                matches_table: lr == Rational::from_integer(row.tabulated.at(n)),
                bound_holds: Rational::from_integer(r_value) <= lr,
            })
        })
        .collect()
}

/// ⟨ν − ρ, H_r⟩ ≤ −(r−1)d/2 with ⟨λ, H_r⟩ = λ/γ on scalar weights.
pub fn wallach_root_form(c: &TubeConstants, nu: Rational) -> bool {
    (nu - c.rho_scalar) / Rational::from_integer(c.gamma)
        <= -Rational::from_integer((c.r - 1) * c.d) / Rational::from_integer(2)
}

/// ν − ρ ≤ L_pos.
pub fn wallach_shifted_form(c: &TubeConstants, nu: Rational) -> bool {
    nu - c.rho_scalar <= c.l_pos
}

/// ν ≤ r.
pub fn wallach_scalar_form(c: &TubeConstants, nu: Rational) -> bool {
    nu <= Rational::from_integer(c.r)
}

/// Rationals k/den for k in lo·den..=hi·den.
pub fn rational_sweep(lo: i64, hi: i64, den: i64) -> Vec<Rational> {
    (lo * den..=hi * den).map(|k| Rational::new(k, den)).collect()
}

/// True when the three forms of the Wallach condition agree on every ν.
pub fn wallach_consistent(c: &TubeConstants, nus: &[Rational]) -> bool {
    nus.iter().all(|&nu| {
        let a = wallach_root_form(c, nu);
        a == wallach_shifted_form(c, nu) && a == wallach_scalar_form(c, nu)
    })
}
