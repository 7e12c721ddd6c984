//! Byte/word conversion, padding, XOR and hex helpers.

use crate::error::Error;

/// Big-endian interpretation of exactly eight bytes.
pub fn word_from_bytes(bytes: &[u8]) -> Result<u64, Error> {
    let arr: [u8; 8] = bytes.try_into().map_err(|_| Error::InvalidLength {
        what: "word input",
        expected: 8,
        actual: bytes.len(),
    })?;
    Ok(u64::from_be_bytes(arr))
}

pub fn bytes_from_word(word: u64) -> [u8; 8] {
    word.to_be_bytes()
}

fn check_rate(rate_bytes: usize) -> Result<(), Error> {
    match rate_bytes {
        8 | 16 => Ok(()),
        other => Err(Error::InvalidRate(other)),
    }
}

/// Appends `0x80` and then the fewest zero bytes that make the length a
/// multiple of `rate_bytes`. A full final block always gains a new block.
pub fn pad_10star(data: &[u8], rate_bytes: usize) -> Result<Vec<u8>, Error> {
    check_rate(rate_bytes)?;
    let padded_len = (data.len() / rate_bytes + 1) * rate_bytes;
    let mut out = Vec::with_capacity(padded_len);
    out.extend_from_slice(data);
    out.push(0x80);
    out.resize(padded_len, 0);
    Ok(out)
}

/// Pads a final partial block (`tail.len() < rate_bytes`) into a fixed buffer.
#[inline]
pub(crate) fn pad_block(tail: &[u8], rate_bytes: usize) -> [u8; 16] {
    debug_assert!(tail.len() < rate_bytes && rate_bytes <= 16);
    let mut block = [0u8; 16];
    block[..tail.len()].copy_from_slice(tail);
    block[tail.len()] = 0x80;
    block
}

pub fn xor_bytes(a: &[u8], b: &[u8]) -> Result<Vec<u8>, Error> {
    if a.len() != b.len() {
        return Err(Error::InvalidLength {
            what: "xor operand",
            expected: a.len(),
            actual: b.len(),
        });
    }
    Ok(a.iter().zip(b).map(|(x, y)| x ^ y).collect())
}

/// Case-insensitive hex decoding. The empty string decodes to no bytes.
pub fn hex_decode(text: &str) -> Result<Vec<u8>, Error> {
    hex::decode(text).map_err(|e| match e {
        hex::FromHexError::OddLength => Error::HexOddLength(text.len()),
        hex::FromHexError::InvalidHexCharacter { c, index } => Error::HexCharacter {
            character: c,
            position: index,
        },
        // Only reachable through decode_to_slice.
        hex::FromHexError::InvalidStringLength => Error::HexOddLength(text.len()),
    })
}

/// Uppercase hex, matching the KAT file convention.
pub fn hex_encode(bytes: &[u8]) -> String {
    hex::encode_upper(bytes)
}
