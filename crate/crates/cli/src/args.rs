use std::path::PathBuf;

use ascon_core::Variant;
use clap::{ArgAction, Args, Parser, Subcommand};

/// ASCON-128 / ASCON-128a authenticated encryption.
///
/// Keys are taken from flags or files only. This is demo tooling: command
/// lines are visible to other users of the machine.
#[derive(Debug, Parser)]
#[command(name = "ascon", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Encrypt and authenticate a message.
    Encrypt(EncryptArgs),
    /// Verify and decrypt a message.
    Decrypt(DecryptArgs),
    /// Check the implementation against a NIST LWC KAT file.
    Kat(KatArgs),
    /// Print the permutation state round by round.
    Trace(TraceArgs),
    /// Run the built-in smoke vectors.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
pub struct VariantArg {
    /// Parameter set: ascon128 or ascon128a.
    #[arg(long, default_value = "ascon128", value_parser = parse_variant)]
    pub variant: Variant,
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse()
}

#[derive(Debug, Args)]
pub struct KeyArgs {
    /// 128-bit key as 32 hex characters.
    #[arg(long, value_name = "HEX", conflicts_with = "key_file")]
    pub key: Option<String>,

    /// File holding the key as 16 raw bytes or 32 hex characters.
    #[arg(long, value_name = "PATH")]
    pub key_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AdArgs {
    /// Associated data as hex.
    #[arg(long, value_name = "HEX", conflicts_with = "ad_file")]
    pub ad: Option<String>,

    /// File holding the associated data.
    #[arg(long, value_name = "PATH")]
    pub ad_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EncryptArgs {
    #[command(flatten)]
    pub variant: VariantArg,
    #[command(flatten)]
    pub key: KeyArgs,

    /// 128-bit nonce as 32 hex characters. Must never repeat under one key.
    #[arg(long, value_name = "HEX", conflicts_with = "gen_nonce")]
    pub nonce: Option<String>,

    /// Generate a random nonce and print it to stderr.
    #[arg(long)]
    pub gen_nonce: bool,

    #[command(flatten)]
    pub ad: AdArgs,

    /// Plaintext file; output is ciphertext followed by the tag.
    #[arg(long = "in", value_name = "PATH", conflicts_with = "pt")]
    pub input: Option<PathBuf>,

    /// Plaintext as hex; output is `CT=<hex>` and `TAG=<hex>` lines.
    #[arg(long, value_name = "HEX")]
    pub pt: Option<String>,

    /// Output path (default: stdout).
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[arg(short, action = ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Args)]
pub struct DecryptArgs {
    #[command(flatten)]
    pub variant: VariantArg,
    #[command(flatten)]
    pub key: KeyArgs,

    /// 128-bit nonce as 32 hex characters.
    #[arg(long, value_name = "HEX")]
    pub nonce: Option<String>,

    #[command(flatten)]
    pub ad: AdArgs,

    /// File holding ciphertext followed by the 16-byte tag.
    #[arg(long = "in", value_name = "PATH", conflicts_with_all = ["ct", "tag"])]
    pub input: Option<PathBuf>,

    /// Ciphertext as hex.
    #[arg(long, value_name = "HEX", requires = "tag")]
    pub ct: Option<String>,

    /// Tag as 32 hex characters.
    #[arg(long, value_name = "HEX", requires = "ct")]
    pub tag: Option<String>,

    /// Output path (default: stdout).
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[arg(short, action = ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Args)]
pub struct KatArgs {
    #[command(flatten)]
    pub variant: VariantArg,

    /// KAT file in the NIST LWC format.
    #[arg(long = "in", value_name = "PATH")]
    pub input: PathBuf,

    #[arg(short, action = ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[command(flatten)]
    pub variant: VariantArg,

    /// Input state as 80 hex characters (s0..s4, big-endian).
    #[arg(long, value_name = "HEX", conflicts_with_all = ["key", "key_file", "nonce"])]
    pub state: Option<String>,

    #[command(flatten)]
    pub key: KeyArgs,

    /// Nonce for a key-derived initial state.
    #[arg(long, value_name = "HEX")]
    pub nonce: Option<String>,

    /// Allow tracing states derived from a secret key.
    #[arg(long)]
    pub unsafe_trace: bool,

    /// Number of rounds: 6, 8 or 12.
    #[arg(long, default_value_t = 12)]
    pub rounds: u32,

    /// Repeat to also print the post-constant and post-sbox states.
    #[arg(short, action = ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    #[arg(short, action = ArgAction::Count)]
    pub verbose: u8,
}
