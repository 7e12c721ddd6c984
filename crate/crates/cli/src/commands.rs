use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use ascon_core::aead::Ascon;
use ascon_core::codec::{hex_decode, hex_encode};
use ascon_core::kat::{parse_kat_file, run_kat};
use ascon_core::permutation::{linear_layer, round_constant, substitution_layer};
use ascon_core::{selftest, Error as CoreError, Key, Nonce, RoundCount, State, Tag, Variant};
use rand::rngs::OsRng;
use rand::RngCore;
use zeroize::Zeroizing;

use crate::args::{AdArgs, DecryptArgs, EncryptArgs, KatArgs, KeyArgs, TraceArgs};

/// A failed command, mapped onto the process exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Authentication,
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
            CliError::Authentication => 4,
            CliError::Verification(_) => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Io(msg) | CliError::Verification(msg) => {
                f.write_str(msg)
            }
            CliError::Authentication => f.write_str("authentication failed"),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Reads a file named by `flag`. A missing file is a usage error; anything
/// else is an I/O error.
fn read_file(path: &Path, flag: &str) -> Result<Vec<u8>> {
    fs::read(path).map_err(|e| match e.kind() {
        io::ErrorKind::NotFound => usage(format!("{flag}: no such file: {}", path.display())),
        _ => CliError::Io(format!("{flag}: cannot read {}: {e}", path.display())),
    })
}

fn decode_hex(text: &str, flag: &str) -> Result<Vec<u8>> {
    hex_decode(text.trim()).map_err(|e| usage(format!("{flag}: {e}")))
}

fn fixed_hex<const N: usize>(text: &str, flag: &str) -> Result<[u8; N]> {
    let bytes = decode_hex(text, flag)?;
    bytes
        .as_slice()
        .try_into()
        .map_err(|_| usage(format!("{flag}: expected {N} bytes, got {}", bytes.len())))
}

fn parse_key_hex(text: &str, flag: &str) -> Result<Key> {
    // Key errors never echo the offending characters.
    let bytes = Zeroizing::new(hex_decode(text.trim()).map_err(|e| match e {
        CoreError::HexCharacter { position, .. } => usage(format!(
            "{flag}: invalid hex character at position {position}"
        )),
        other => usage(format!("{flag}: {other}")),
    })?);
    Key::from_slice(&bytes)
        .map_err(|_| usage(format!("{flag}: expected 16 bytes, got {}", bytes.len())))
}

fn resolve_key(args: &KeyArgs) -> Result<Key> {
    match (&args.key, &args.key_file) {
        (Some(hex), _) => parse_key_hex(hex, "--key"),
        (None, Some(path)) => {
            let raw = Zeroizing::new(read_file(path, "--key-file")?);
            if raw.len() == 16 {
                return Ok(Key::from_slice(&raw).expect("16 bytes"));
            }
            let text = std::str::from_utf8(&raw)
                .map_err(|_| usage("--key-file: expected 16 raw bytes or 32 hex characters"))?;
            if text.trim().len() != 32 {
                return Err(usage(
                    "--key-file: expected 16 raw bytes or 32 hex characters",
                ));
            }
            parse_key_hex(text, "--key-file")
        }
        (None, None) => Err(usage("missing key: pass --key HEX or --key-file PATH")),
    }
}

fn resolve_nonce(nonce: Option<&str>) -> Result<Nonce> {
    let hex = nonce.ok_or_else(|| usage("missing nonce: pass --nonce HEX"))?;
    Ok(Nonce::new(fixed_hex(hex, "--nonce")?))
}

fn resolve_ad(args: &AdArgs) -> Result<Vec<u8>> {
    match (&args.ad, &args.ad_file) {
        (Some(hex), _) => decode_hex(hex, "--ad"),
        (None, Some(path)) => read_file(path, "--ad-file"),
        (None, None) => Ok(Vec::new()),
    }
}

fn write_output(out: Option<&PathBuf>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(path) => fs::write(path, bytes)
            .map_err(|e| CliError::Io(format!("--out: cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(bytes)
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}")))
        }
    }
}

pub fn encrypt(args: &EncryptArgs) -> Result<()> {
    let key = resolve_key(&args.key)?;
    let nonce = if args.gen_nonce {
        let mut bytes = [0u8; 16];
        OsRng.fill_bytes(&mut bytes);
        Nonce::new(bytes)
    } else {
        resolve_nonce(args.nonce.as_deref()).map_err(|e| match e {
            CliError::Usage(msg) if args.nonce.is_none() => usage(format!("{msg} or --gen-nonce")),
            other => other,
        })?
    };
    let ad = resolve_ad(&args.ad)?;

    let (plaintext, hex_mode) = match (&args.input, &args.pt) {
        (Some(path), _) => (Zeroizing::new(read_file(path, "--in")?), false),
        (None, Some(hex)) => (Zeroizing::new(decode_hex(hex, "--pt")?), true),
        (None, None) => return Err(usage("missing input: pass --in PATH or --pt HEX")),
    };

    let (ct, tag) = ascon_core::encrypt(args.variant.variant, &key, &nonce, &ad, &plaintext);
    if args.gen_nonce {
        eprintln!("nonce={}", hex_encode(nonce.as_bytes()));
    }

    let output = if hex_mode {
        format!(
            "CT={}\nTAG={}\n",
            hex_encode(&ct),
            hex_encode(tag.as_bytes())
        )
        .into_bytes()
    } else {
        [ct.as_slice(), tag.as_bytes()].concat()
    };
    write_output(args.out.as_ref(), &output)?;
    if args.verbose > 0 {
        eprintln!(
            "{}: encrypted {} bytes with {} bytes of associated data",
            args.variant.variant,
            plaintext.len(),
            ad.len()
        );
    }
    Ok(())
}

pub fn decrypt(args: &DecryptArgs) -> Result<()> {
    let key = resolve_key(&args.key)?;
    let nonce = resolve_nonce(args.nonce.as_deref())?;
    let ad = resolve_ad(&args.ad)?;

    let (ct, tag, hex_mode) = match (&args.input, &args.ct, &args.tag) {
        (Some(path), _, _) => {
            let mut data = read_file(path, "--in")?;
            if data.len() < ascon_core::TAG_LEN {
                return Err(usage("--in: input shorter than tag"));
            }
            let tag_bytes = data.split_off(data.len() - ascon_core::TAG_LEN);
            (data, Tag::from_slice(&tag_bytes).expect("16 bytes"), false)
        }
        (None, Some(ct), Some(tag)) => (
            decode_hex(ct, "--ct")?,
            Tag::new(fixed_hex(tag, "--tag")?),
            true,
        ),
        _ => return Err(usage("missing input: pass --in PATH or --ct HEX --tag HEX")),
    };

    let plaintext = Zeroizing::new(
        ascon_core::decrypt(args.variant.variant, &key, &nonce, &ad, &ct, &tag)
            .map_err(|_| CliError::Authentication)?,
    );
    if hex_mode {
        let line = Zeroizing::new(format!("PT={}\n", hex_encode(&plaintext)));
        write_output(args.out.as_ref(), line.as_bytes())
    } else {
        write_output(args.out.as_ref(), &plaintext)
    }
}

pub fn kat(args: &KatArgs) -> Result<()> {
    let raw = read_file(&args.input, "--in")?;
    let text = String::from_utf8(raw)
        .map_err(|_| usage(format!("--in: {} is not UTF-8 text", args.input.display())))?;
    let records =
        parse_kat_file(&text).map_err(|e| usage(format!("{}: {e}", args.input.display())))?;
    let variant = args.variant.variant;
    let report = run_kat(&records, &Ascon::new(variant));
    if args.verbose > 0 {
        println!(
            "{variant}: {} records from {}",
            records.len(),
            args.input.display()
        );
    }
    println!("{report}");
    if report.is_success() {
        Ok(())
    } else {
        Err(CliError::Verification(format!(
            "{} of {} checks failed",
            report.failed,
            2 * report.total
        )))
    }
}

fn state_line(label: &str, state: &State) -> String {
    let [s0, s1, s2, s3, s4] = state.words();
    format!("{label} s0={s0:016X} s1={s1:016X} s2={s2:016X} s3={s3:016X} s4={s4:016X}")
}

pub fn trace(args: &TraceArgs) -> Result<()> {
    let rounds = RoundCount::new(args.rounds).map_err(|e| usage(format!("--rounds: {e}")))?;
    let variant: Variant = args.variant.variant;
    let keyed = args.key.key.is_some() || args.key.key_file.is_some() || args.nonce.is_some();

    let (input, key) = if let Some(hex) = &args.state {
        let bytes: [u8; 40] = fixed_hex(hex, "--state")?;
        (State::from_bytes(&bytes), None)
    } else if keyed {
        if !args.unsafe_trace {
            return Err(usage(
                "tracing a key-derived state prints secret material; pass --unsafe-trace to allow it",
            ));
        }
        let key = resolve_key(&args.key)?;
        let nonce = resolve_nonce(args.nonce.as_deref())?;
        (Ascon::new(variant).initial_state(&key, &nonce), Some(key))
    } else {
        (
            State::from_words([variant.params().iv_word(), 0, 0, 0, 0]),
            None,
        )
    };

    let mut out = Vec::new();
    out.push(state_line("input", &input));
    let mut state = input;
    for (round, index) in (rounds.first_index()..12).enumerate() {
        let constant = round_constant(index).expect("index below 12");
        let mut words = state.words();
        words[2] ^= u64::from(constant);
        state = State::from_words(words);
        if args.verbose > 0 {
            out.push(state_line(&format!("round={round} step=constant"), &state));
        }
        state = substitution_layer(state);
        if args.verbose > 0 {
            out.push(state_line(&format!("round={round} step=sbox"), &state));
        }
        state = linear_layer(state);
        out.push(state_line(&format!("round={round} step=linear"), &state));
    }
    if let Some(key) = key {
        // Finish initialization with the 0* || K XOR.
        let k = key.as_bytes();
        let mut words = state.words();
        words[3] ^= u64::from_be_bytes(k[..8].try_into().expect("8 bytes"));
        words[4] ^= u64::from_be_bytes(k[8..].try_into().expect("8 bytes"));
        out.push(state_line("init", &State::from_words(words)));
    }
    out.push(String::new());
    write_output(None, out.join("\n").as_bytes())
}

pub fn selftest() -> Result<()> {
    let report = selftest::run();
    println!("{report}");
    if report.all_passed() {
        Ok(())
    } else {
        Err(CliError::Verification("self-test failed".into()))
    }
}
