use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Malformed or inconsistent input: job file, flags, catalog names.
    #[error("{0}")]
    Input(String),
    #[error("{context}: {source}")]
    Engine {
        context: String,
        #[source]
        source: logfutaki::Error,
    },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn engine(context: impl Into<String>) -> impl FnOnce(logfutaki::Error) -> CliError {
        let context = context.into();
        move |source| CliError::Engine { context, source }
    }

    /// Process exit status: 1 for input problems, 2 for engine failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io { .. } => 1,
            CliError::Engine { .. } => 2,
        }
    }
}
