use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} = {value} is outside {}", range_text(*min, *max))]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("length mismatch: {left} vs {right}")]
    Shape { left: usize, right: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{0} overflows 64-bit integers")]
    Overflow(&'static str),
}

fn range_text(min: i64, max: i64) -> String {
    if max == i64::MAX {
        format!("[{min}, ∞)")
    } else {
        format!("[{min}, {max}]")
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_range(what: &'static str, value: i64, min: i64, max: i64) -> Result<()> {
    if value < min || value > max {
        Err(Error::OutOfRange {
            what,
            value,
            min,
            max,
        })
    } else {
        Ok(())
    }
}
