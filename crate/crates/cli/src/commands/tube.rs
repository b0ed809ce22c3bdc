use clap::Subcommand;
use osdual::structure_data::{cayley_table, rational_sweep, tube_constants, wallach_consistent, FamilyKind, TubeFamily};

use crate::report::{Report, Table};
use crate::{CliError, Global};

#[derive(Subcommand, Debug)]
pub enum Action {
    /// The nine-row table of L_pos + ρ against R.
    Table {
        /// Instantiate the symbolic rows at this n.
        #[arg(long, default_value_t = 1)]
        n: i64,
    },
    /// Constants r, d, ρ, L_pos of one family and the Wallach-condition sweep.
    Constants {
        /// SU_nn, SOstar_4n, Sp_nR, SO_k2 or E7_minus25.
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 1)]
        rank: i64,
    },
}

pub fn run(action: &Action, _g: &Global) -> Result<Report, CliError> {
    match action {
        Action::Table { n } => {
            let mut r = Report::new("tube table");
            r.param("n", n);
            let rows = cayley_table(*n)?;
            let mut table = Table {
                columns: ["family", "rank_param", "r", "d", "R", "l_pos", "rho", "l_pos_plus_rho"].map(String::from).to_vec(),
                rows: Vec::new(),
            };
            for e in &rows {
                let c = &e.constants;
                table.rows.push(vec![
                    e.row.algebra.to_string(),
                    e.family.rank_param().to_string(),
                    c.r.to_string(),
                    c.d.to_string(),
                    e.r_value.to_string(),
                    c.l_pos.to_string(),
                    c.rho_scalar.to_string(),
                    c.l_pos_plus_rho.to_string(),
                ]);
                r.flag(format!("{} table value", e.row.algebra), c.l_pos_plus_rho.to_string(), e.row.tabulated.at(*n), e.matches_table);
                r.flag(format!("{} R <= L_pos+rho", e.row.algebra), e.r_value, c.l_pos_plus_rho.to_string(), e.bound_holds);
            }
            r.table = Some(table);
            Ok(r)
        }
        Action::Constants { family, rank } => {
            let mut r = Report::new("tube constants");
            r.param("family", family).param("rank", rank);
            let f = TubeFamily::new(FamilyKind::parse(family)?, *rank)?;
            let c = tube_constants(&f)?;
            r.datum("r", c.r).datum("d", c.d).datum("gamma", c.gamma);
            r.datum("rho", c.rho_scalar.to_string()).datum("l_pos", c.l_pos.to_string());
            r.datum("l_pos_plus_rho", c.l_pos_plus_rho.to_string());
            r.flag("l_pos_plus_rho_equals_r", c.l_pos_plus_rho.to_string(), c.r, c.l_pos_plus_rho == osdual::Rational::from_integer(c.r));
            let sweep = rational_sweep(-2 * c.r.max(1), 4 * c.r.max(1), 12);
            let ok = wallach_consistent(&c, &sweep);
            r.flag("wallach_forms_agree", ok, true, ok);
            Ok(r)
        }
    }
}
