//! Library side of the `stable-closure` binary: descriptor parsing, the
//! command registry and report rendering.

pub mod commands;
pub mod descriptor;
pub mod render;

use stable_closure::{Error, RadicalSolver};

pub use commands::{Command, Context, Outcome, Registry};
pub use descriptor::{parse_input, Job, JobDescriptor};

/// Process exit status for a finished run.
pub fn exit_code(r: &Result<Outcome, Error>) -> i32 {
    match r {
        Ok(o) if o.passed => 0,
        Ok(_) => 1,
        Err(Error::Internal(_)) | Err(Error::KernelNotStable { .. }) => 1,
        Err(_) => 2,
    }
}

/// Parse, build and run one job.
pub fn run_text(
    command: &str,
    text: &str,
    radical: Option<&str>,
    product: Option<&str>,
) -> Result<Outcome, Error> {
    let d = parse_input(text)?;
    let job = Job::build(&d)?;
    run_job(command, &job, radical, product)
}

pub fn run_job(
    command: &str,
    job: &Job,
    radical: Option<&str>,
    product: Option<&str>,
) -> Result<Outcome, Error> {
    let registry = Registry::default();
    let cmd = registry.get(command).ok_or_else(|| {
        Error::Parse {
            path: "command".into(),
            message: format!("unknown command '{command}' (known: {})", registry.names().join(", ")),
        }
    })?;
    let radical = radical.or(job.descriptor.radical.as_deref()).unwrap_or("auto");
    let solver = RadicalSolver::named(radical)?;
    let product = product
        .or(job.descriptor.product.as_deref())
        .unwrap_or("nu")
        .to_string();
    cmd.run(job, &Context { solver, product })
}
