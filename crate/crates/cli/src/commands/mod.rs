pub mod bargmann;
pub mod counter;
pub mod os;
pub mod path;
pub mod su11;
pub mod tube;

use crate::CliError;

pub fn times_arg(list: &Option<String>, file: &Option<std::path::PathBuf>) -> Result<Vec<f64>, CliError> {
    match (list, file) {
        (Some(_), Some(_)) => Err(CliError::Usage("give --times or --times-file, not both".into())),
        (Some(l), None) => crate::input::parse_list(l),
        (None, Some(f)) => crate::input::read_times(f),
        (None, None) => Err(CliError::Usage("missing --times or --times-file".into())),
    }
}
