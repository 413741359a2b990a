use asymptotics::AsymError;
use diagram_io::DiagramError;
use khovanov::KhError;
use laurent_core::LaurentError;
use skein_bracket::SkeinError;
use spin_network::SpinError;
use thiserror::Error;

/// Exit status for a failed domain computation.
pub const EXIT_DOMAIN: i32 = 1;
/// Exit status for bad usage or unparsable input.
pub const EXIT_USAGE: i32 = 2;

/// An error with a module-qualified code such as `diagram-io::Parse`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("error[{code}]: {message}")]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub exit: i32,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: "cli::Usage".into(),
            message: message.into(),
            exit: EXIT_USAGE,
        }
    }

    fn domain(code: &str, message: String) -> Self {
        Self {
            code: code.into(),
            message,
            exit: EXIT_DOMAIN,
        }
    }
}

impl From<LaurentError> for CliError {
    fn from(e: LaurentError) -> Self {
        let code = match &e {
            LaurentError::ZeroDenominator => "ZeroDenominator",
            LaurentError::DivisionByZero => "DivisionByZero",
            LaurentError::SingularEvaluation(_) => "SingularEvaluation",
            LaurentError::Parse(_) => "Parse",
            LaurentError::NonIntegralSeries(_) => "NonIntegralSeries",
        };
        let mut out = Self::domain(&format!("laurent-core::{code}"), e.to_string());
        if matches!(e, LaurentError::Parse(_)) {
            out.exit = EXIT_USAGE;
        }
        out
    }
}

impl From<DiagramError> for CliError {
    fn from(e: DiagramError) -> Self {
        match &e {
            DiagramError::Parse(_) => Self {
                code: "diagram-io::ParseError".into(),
                message: e.to_string(),
                exit: EXIT_USAGE,
            },
            DiagramError::Topology(_) => Self::domain("diagram-io::TopologyError", e.to_string()),
            DiagramError::StateLength { .. } => Self::domain("diagram-io::StateLength", e.to_string()),
        }
    }
}

impl From<SkeinError> for CliError {
    fn from(e: SkeinError) -> Self {
        match e {
            SkeinError::Laurent(x) => x.into(),
            SkeinError::Diagram(x) => x.into(),
            SkeinError::OpenSkein => Self::domain("skein-bracket::OpenSkein", e.to_string()),
            SkeinError::TooLarge { .. } => Self::domain("skein-bracket::TooLarge", e.to_string()),
            SkeinError::NotLaurent(_) => Self::domain("skein-bracket::NotLaurent", e.to_string()),
            SkeinError::Tl(_) => Self::domain("temperley-lieb::Mismatch", e.to_string()),
        }
    }
}

impl From<SpinError> for CliError {
    fn from(e: SpinError) -> Self {
        match e {
            SpinError::Skein(x) => x.into(),
            SpinError::Laurent(x) => x.into(),
            SpinError::Diagram(x) => x.into(),
            SpinError::Parse(_) => Self {
                code: "spin-network::ParseError".into(),
                message: e.to_string(),
                exit: EXIT_USAGE,
            },
            SpinError::Inadmissible(_) => Self::domain("spin-network::Inadmissible", e.to_string()),
            SpinError::NonPlanar(_) => Self::domain("spin-network::NonPlanar", e.to_string()),
            SpinError::Malformed(_) => Self::domain("spin-network::Malformed", e.to_string()),
            SpinError::HypothesisViolated(_) => {
                Self::domain("spin-network::HypothesisViolated", e.to_string())
            }
        }
    }
}

impl From<KhError> for CliError {
    fn from(e: KhError) -> Self {
        match e {
            KhError::Diagram(x) => x.into(),
            KhError::TooLarge { .. } => Self::domain("khovanov::TooLarge", e.to_string()),
            KhError::AlignmentFailed(_) => Self::domain("khovanov::AlignmentFailed", e.to_string()),
        }
    }
}

impl From<AsymError> for CliError {
    fn from(e: AsymError) -> Self {
        match e {
            AsymError::Spin(x) => x.into(),
            AsymError::Laurent(x) => x.into(),
            AsymError::SingularEvaluation { .. } => {
                Self::domain("asymptotics::SingularEvaluation", e.to_string())
            }
            AsymError::Cancellation(_) => Self::domain("asymptotics::Cancellation", e.to_string()),
            AsymError::Invalid(_) => Self {
                code: "asymptotics::Invalid".into(),
                message: e.to_string(),
                exit: EXIT_USAGE,
            },
        }
    }
}
