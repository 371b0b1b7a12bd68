//! Run parameters: the flag set shared by the command line and the catalog
//! defaults, and the resolved view the runners read from.

use clap::Args;
use hlq_core::{Partition, StripMask};
use thiserror::Error;

use hlq_core::HlqError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(HlqError),
}

impl From<HlqError> for CliError {
    fn from(e: HlqError) -> Self {
        match e {
            HlqError::InvalidParameter(m) => CliError::Usage(m),
            HlqError::Partition(p) => CliError::Usage(p.to_string()),
            HlqError::NotStrip(s) => CliError::Usage(format!("{s} is not a horizontal strip")),
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(_) => 1,
        }
    }
}

/// Identity parameters. Every field is optional so catalog defaults can be
/// overlaid by whatever the user passes.
#[derive(Debug, Clone, Default, Args)]
pub struct RunArgs {
    /// q-order N
    #[arg(short = 'N', long = "degree")]
    pub degree: Option<i64>,
    /// degree bound in the series variables (x, a, b or z)
    #[arg(short = 'D', long = "xdeg")]
    pub xdeg: Option<u32>,
    /// variable counts, e.g. 2,2
    #[arg(long, value_delimiter = ',')]
    pub vars: Option<Vec<usize>>,
    /// summation bounds M1,M2
    #[arg(long, value_delimiter = ',')]
    pub bound: Option<Vec<i64>>,
    /// partition as comma-separated parts; repeat for identities with two
    #[arg(long)]
    pub partition: Vec<String>,
    /// strip mask as a bit string such as 0110
    #[arg(long)]
    pub mask: Option<String>,
    /// identity-specific form, e.g. inf or finite; see `hlq list`
    #[arg(long)]
    pub variant: Option<String>,
    /// random_points, series or symbolic where offered
    #[arg(long)]
    pub strategy: Option<String>,
    /// shift k1,k2,k3 with zero sum
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub shift: Option<Vec<i64>>,
    /// integer parameters such as k, j or a rank
    #[arg(short = 'k', long, value_delimiter = ',')]
    pub index: Option<Vec<i64>>,
    /// number of random rational points
    #[arg(long)]
    pub points: Option<usize>,
    /// seed for the random-point sampler
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(clap::Parser)]
struct DefaultsParser {
    #[command(flatten)]
    args: RunArgs,
}

impl RunArgs {
    /// Parses a catalog default string such as `"--vars 2,2 -D 4"`.
    pub fn parse_defaults(s: &str) -> Result<RunArgs, CliError> {
        use clap::Parser;
        let argv = std::iter::once("defaults").chain(s.split_whitespace());
        DefaultsParser::try_parse_from(argv).map(|d| d.args).map_err(|e| CliError::Usage(e.to_string()))
    }

    /// `self` with every unset field taken from `base`.
    pub fn over(self, base: &RunArgs) -> RunArgs {
        RunArgs {
            degree: self.degree.or(base.degree),
            xdeg: self.xdeg.or(base.xdeg),
            vars: self.vars.or_else(|| base.vars.clone()),
            bound: self.bound.or_else(|| base.bound.clone()),
            partition: if self.partition.is_empty() { base.partition.clone() } else { self.partition },
            mask: self.mask.or_else(|| base.mask.clone()),
            variant: self.variant.or_else(|| base.variant.clone()),
            strategy: self.strategy.or_else(|| base.strategy.clone()),
            shift: self.shift.or_else(|| base.shift.clone()),
            index: self.index.or_else(|| base.index.clone()),
            points: self.points.or(base.points),
            seed: self.seed.or(base.seed),
        }
    }

    /// Parses the string-valued fields so malformed input is rejected before
    /// anything is computed.
    pub fn resolve(&self) -> Result<Params, CliError> {
        let partitions = self
            .partition
            .iter()
            .map(|s| s.parse::<Partition>().map_err(|e| CliError::Usage(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let mask = match &self.mask {
            Some(m) => Some(m.parse::<StripMask>().map_err(|e| CliError::Usage(e.to_string()))?),
            None => None,
        };
        Ok(Params { raw: self.clone(), partitions, mask })
    }
}

/// Validated parameters with typed accessors.
#[derive(Debug, Clone)]
pub struct Params {
    pub raw: RunArgs,
    pub partitions: Vec<Partition>,
    pub mask: Option<StripMask>,
}

fn missing(flag: &str) -> CliError {
    CliError::Usage(format!("missing {flag}"))
}

impl Params {
    pub fn seed(&self) -> u64 {
        self.raw.seed.unwrap_or(hlq_core::qalgebra::eval::DEFAULT_SEED)
    }

    pub fn degree(&self) -> Result<i64, CliError> {
        let n = self.raw.degree.ok_or_else(|| missing("--degree"))?;
        if n < 0 {
            return Err(CliError::Usage("--degree must be non-negative".into()));
        }
        Ok(n)
    }

    pub fn xdeg(&self) -> Result<u32, CliError> {
        self.raw.xdeg.ok_or_else(|| missing("--xdeg"))
    }

    pub fn vars(&self, count: usize) -> Result<Vec<usize>, CliError> {
        match &self.raw.vars {
            Some(v) if v.len() == count => Ok(v.clone()),
            Some(v) => Err(CliError::Usage(format!("--vars needs {count} value(s), got {}", v.len()))),
            None => Err(missing("--vars")),
        }
    }

    pub fn bound(&self) -> Result<[i64; 2], CliError> {
        match self.raw.bound.as_deref() {
            Some(&[a, b]) if a >= 0 && b >= 0 => Ok([a, b]),
            Some(_) => Err(CliError::Usage("--bound needs two non-negative values M1,M2".into())),
            None => Err(missing("--bound")),
        }
    }

    pub fn partitions(&self, count: usize) -> Result<&[Partition], CliError> {
        if self.partitions.len() == count {
            Ok(&self.partitions)
        } else {
            Err(CliError::Usage(format!("needs {count} --partition value(s), got {}", self.partitions.len())))
        }
    }

    pub fn mask(&self) -> Result<&StripMask, CliError> {
        self.mask.as_ref().ok_or_else(|| missing("--mask"))
    }

    pub fn shift(&self) -> Result<[i64; 3], CliError> {
        match self.raw.shift.as_deref() {
            Some(&[a, b, c]) => Ok([a, b, c]),
            Some(_) => Err(CliError::Usage("--shift needs three values k1,k2,k3".into())),
            None => Err(missing("--shift")),
        }
    }

    /// The integer parameters, all non-negative, exactly `count` of them.
    pub fn index(&self, count: usize) -> Result<Vec<usize>, CliError> {
        match &self.raw.index {
            Some(v) if v.len() == count && v.iter().all(|&x| x >= 0) => Ok(v.iter().map(|&x| x as usize).collect()),
            Some(_) => Err(CliError::Usage(format!("--index needs {count} non-negative value(s)"))),
            None => Err(missing("--index")),
        }
    }

    pub fn points(&self) -> usize {
        self.raw.points.unwrap_or(hlq_core::qalgebra::eval::DEFAULT_POINTS)
    }

    pub fn variant(&self) -> Result<&str, CliError> {
        self.raw.variant.as_deref().ok_or_else(|| missing("--variant"))
    }

    pub fn strategy(&self) -> Result<&str, CliError> {
        self.raw.strategy.as_deref().ok_or_else(|| missing("--strategy"))
    }
}

pub fn bad_choice(flag: &str, got: &str, allowed: &[&str]) -> CliError {
    CliError::Usage(format!("{flag} {got:?} is not one of {}", allowed.join(", ")))
}
