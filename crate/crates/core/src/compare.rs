//! Outcome of checking one identity, shared by every verification routine.

use std::fmt;

/// How an identity is certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Exact comparison of the two sides as Laurent polynomials.
    Symbolic,
    /// Exact comparison at random distinct rational points.
    Sample,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Symbolic => "symbolic",
            Mode::Sample => "sample",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Mode> {
        match s {
            "symbolic" => Ok(Mode::Symbolic),
            "sample" => Ok(Mode::Sample),
            other => Err(crate::Error::Parse(format!("unknown mode `{other}`"))),
        }
    }
}

/// Result of comparing two exact objects, with their canonical forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
    pub note: Option<String>,
}

impl Comparison {
    pub fn of<T: PartialEq + fmt::Display>(lhs: &T, rhs: &T) -> Comparison {
        Comparison { holds: lhs == rhs, lhs: lhs.to_string(), rhs: rhs.to_string(), note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Comparison {
        self.note = Some(note.into());
        self
    }

    /// Fold several comparisons (one per sample point) into one.
    pub fn merge(parts: Vec<Comparison>) -> Comparison {
        let holds = parts.iter().all(|c| c.holds);
        let join = |f: &dyn Fn(&Comparison) -> &str| parts.iter().map(f).collect::<Vec<_>>().join("; ");
        let notes: Vec<&str> = parts.iter().filter_map(|c| c.note.as_deref()).collect();
        Comparison {
            holds,
            lhs: join(&|c| &c.lhs),
            rhs: join(&|c| &c.rhs),
            note: (!notes.is_empty()).then(|| notes.join("; ")),
        }
    }
}
