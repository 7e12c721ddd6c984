//! NIST LWC known-answer-test files: parsing and bidirectional verification.
//!
//! A file is a sequence of blank-line separated blocks:
//!
//! ```text
//! Count = 1
//! Key = 000102030405060708090A0B0C0D0E0F
//! Nonce = 000102030405060708090A0B0C0D0E0F
//! PT =
//! AD =
//! CT = E355159F292911F794CB1432A0103A8A
//! ```
//!
//! `CT` carries the ciphertext followed by the 16-byte tag.

use std::fmt;

use thiserror::Error;

use crate::aead::{AeadCipher, Key, Nonce, Tag, KEY_LEN, NONCE_LEN, TAG_LEN};
use crate::codec::hex_decode;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KatRecord {
    pub count: u32,
    pub key: [u8; KEY_LEN],
    pub nonce: [u8; NONCE_LEN],
    pub pt: Vec<u8>,
    pub ad: Vec<u8>,
    pub ct_and_tag: Vec<u8>,
}

impl KatRecord {
    pub fn key(&self) -> Key {
        Key::new(self.key)
    }

    pub fn nonce(&self) -> Nonce {
        Nonce::new(self.nonce)
    }

    pub fn ciphertext(&self) -> &[u8] {
        &self.ct_and_tag[..self.ct_and_tag.len() - TAG_LEN]
    }

    pub fn tag(&self) -> Tag {
        Tag::from_slice(&self.ct_and_tag[self.ct_and_tag.len() - TAG_LEN..])
            .expect("length checked at parse time")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KatParseError {
    #[error("line {line}: expected `Field = HEX`")]
    Malformed { line: usize },

    #[error("line {line}: unknown field {field:?}")]
    UnknownField { line: usize, field: String },

    #[error("line {line}: duplicate field {field}")]
    DuplicateField { line: usize, field: &'static str },

    #[error("line {line}: field {field}: {message}")]
    BadValue {
        line: usize,
        field: &'static str,
        message: String,
    },

    #[error("line {line}: record is missing field {field}")]
    MissingField { line: usize, field: &'static str },

    #[error("line {line}: record Count = {count}: {message}")]
    Invariant {
        line: usize,
        count: u32,
        message: String,
    },
}

impl KatParseError {
    pub fn line(&self) -> usize {
        match self {
            KatParseError::Malformed { line }
            | KatParseError::UnknownField { line, .. }
            | KatParseError::DuplicateField { line, .. }
            | KatParseError::BadValue { line, .. }
            | KatParseError::MissingField { line, .. }
            | KatParseError::Invariant { line, .. } => *line,
        }
    }
}

const FIELDS: [&str; 6] = ["Count", "Key", "Nonce", "PT", "AD", "CT"];

#[derive(Default)]
struct PendingRecord {
    start_line: usize,
    // Indexed like FIELDS.
    values: [Option<(usize, String)>; 6],
}

impl PendingRecord {
    fn is_empty(&self) -> bool {
        self.values.iter().all(Option::is_none)
    }

    fn finish(self, end_line: usize, previous: Option<u32>) -> Result<KatRecord, KatParseError> {
        let mut values = self.values;
        let mut take = |i: usize| {
            values[i].take().ok_or(KatParseError::MissingField {
                line: end_line,
                field: FIELDS[i],
            })
        };
        let count = take(0)?;
        let key = take(1)?;
        let nonce = take(2)?;
        let pt = take(3)?;
        let ad = take(4)?;
        let ct = take(5)?;

        let count_value: u32 = count.1.parse().map_err(|_| KatParseError::BadValue {
            line: count.0,
            field: "Count",
            message: format!("{:?} is not a positive integer", count.1),
        })?;
        if count_value == 0 {
            return Err(KatParseError::BadValue {
                line: count.0,
                field: "Count",
                message: "count must be positive".into(),
            });
        }
        if let Some(prev) = previous {
            if count_value <= prev {
                return Err(KatParseError::Invariant {
                    line: count.0,
                    count: count_value,
                    message: format!("count does not increase (previous {prev})"),
                });
            }
        }

        let key_bytes = decode_field(&key, "Key")?;
        let nonce_bytes = decode_field(&nonce, "Nonce")?;
        let pt = decode_field(&pt, "PT")?;
        let ad = decode_field(&ad, "AD")?;
        let ct_and_tag = decode_field(&ct, "CT")?;

        let invariant = |message: String| KatParseError::Invariant {
            line: self.start_line,
            count: count_value,
            message,
        };
        let key: [u8; KEY_LEN] = key_bytes.as_slice().try_into().map_err(|_| {
            invariant(format!(
                "Key has {} bytes, expected {KEY_LEN}",
                key_bytes.len()
            ))
        })?;
        let nonce: [u8; NONCE_LEN] = nonce_bytes.as_slice().try_into().map_err(|_| {
            invariant(format!(
                "Nonce has {} bytes, expected {NONCE_LEN}",
                nonce_bytes.len()
            ))
        })?;
        if ct_and_tag.len() != pt.len() + TAG_LEN {
            return Err(invariant(format!(
                "CT has {} bytes, expected |PT| + {TAG_LEN} = {}",
                ct_and_tag.len(),
                pt.len() + TAG_LEN
            )));
        }

        Ok(KatRecord {
            count: count_value,
            key,
            nonce,
            pt,
            ad,
            ct_and_tag,
        })
    }
}

fn decode_field(
    (line, text): &(usize, String),
    field: &'static str,
) -> Result<Vec<u8>, KatParseError> {
    hex_decode(text).map_err(|e| KatParseError::BadValue {
        line: *line,
        field,
        message: e.to_string(),
    })
}

/// Parses a KAT file into records, in file order.
pub fn parse_kat_file(text: &str) -> Result<Vec<KatRecord>, KatParseError> {
    let mut records = Vec::new();
    let mut pending = PendingRecord::default();
    let mut last_line = 0;

    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() {
            if !pending.is_empty() {
                let prev = records.last().map(|r: &KatRecord| r.count);
                records.push(std::mem::take(&mut pending).finish(line_no - 1, prev)?);
            }
            continue;
        }
        let (name, value) = line
            .split_once('=')
            .ok_or(KatParseError::Malformed { line: line_no })?;
        let name = name.trim();
        let slot =
            FIELDS
                .iter()
                .position(|f| *f == name)
                .ok_or_else(|| KatParseError::UnknownField {
                    line: line_no,
                    field: name.to_string(),
                })?;
        if pending.is_empty() {
            pending.start_line = line_no;
        }
        if pending.values[slot].is_some() {
            return Err(KatParseError::DuplicateField {
                line: line_no,
                field: FIELDS[slot],
            });
        }
        pending.values[slot] = Some((line_no, value.trim().to_string()));
    }
    if !pending.is_empty() {
        let prev = records.last().map(|r| r.count);
        records.push(pending.finish(last_line, prev)?);
    }
    Ok(records)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Encrypt,
    Decrypt,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Encrypt => "encrypt",
            Direction::Decrypt => "decrypt",
        })
    }
}

/// First field at which a record diverged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// Ciphertext prefix of the `CT` field.
    Ct,
    /// Tag suffix of `CT`, or a rejected tag on decryption.
    Tag,
    /// Recovered plaintext.
    Pt,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Ct => "CT",
            Field::Tag => "TAG",
            Field::Pt => "PT",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KatFailure {
    pub count: u32,
    pub direction: Direction,
    pub field: Field,
}

impl fmt::Display for KatFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FAIL count={} dir={} field={}",
            self.count, self.direction, self.field
        )
    }
}

/// Outcome of a KAT run. `passed + failed == 2 * total`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KatReport {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    /// Sorted by count, then direction.
    pub failures: Vec<KatFailure>,
}

impl KatReport {
    pub fn is_success(&self) -> bool {
        self.failed == 0
    }

    pub fn summary(&self) -> String {
        format!(
            "total={} passed={} failed={}",
            self.total, self.passed, self.failed
        )
    }
}

impl fmt::Display for KatReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for failure in &self.failures {
            writeln!(f, "{failure}")?;
        }
        write!(f, "{}", self.summary())
    }
}

fn check_encrypt(cipher: &impl AeadCipher, record: &KatRecord) -> Option<Field> {
    let (ct, tag) = cipher.encrypt(&record.key(), &record.nonce(), &record.ad, &record.pt);
    if ct != record.ciphertext() {
        Some(Field::Ct)
    } else if tag != record.tag() {
        Some(Field::Tag)
    } else {
        None
    }
}

fn check_decrypt(cipher: &impl AeadCipher, record: &KatRecord) -> Option<Field> {
    match cipher.decrypt(
        &record.key(),
        &record.nonce(),
        &record.ad,
        record.ciphertext(),
        &record.tag(),
    ) {
        Err(_) => Some(Field::Tag),
        Ok(pt) if pt != record.pt => Some(Field::Pt),
        Ok(_) => None,
    }
}

/// Checks every record in both directions against `cipher`.
pub fn run_kat(records: &[KatRecord], cipher: &impl AeadCipher) -> KatReport {
    let mut report = KatReport {
        total: records.len(),
        ..KatReport::default()
    };
    for record in records {
        let outcomes = [
            (Direction::Encrypt, check_encrypt(cipher, record)),
            (Direction::Decrypt, check_decrypt(cipher, record)),
        ];
        for (direction, outcome) in outcomes {
            match outcome {
                None => report.passed += 1,
                Some(field) => {
                    report.failed += 1;
                    report.failures.push(KatFailure {
                        count: record.count,
                        direction,
                        field,
                    });
                }
            }
        }
    }
    report.failures.sort_by_key(|f| (f.count, f.direction));
    report
}
