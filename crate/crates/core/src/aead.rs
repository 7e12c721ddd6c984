//! ASCON-128 / ASCON-128a authenticated encryption.
//!
//! The mode is split into the four phases of the duplex construction so
//! each one can be inspected on its own:
//!
//! 1. [`Ascon::initialize`]: load `IV || K || N`, run `p^a`, XOR `0* || K`.
//! 2. [`Ascon::process_associated_data`]: absorb padded AD with `p^b`,
//!    then flip the domain-separation bit.
//! 3. [`Ascon::encrypt_data`] / [`Ascon::decrypt_data`]: duplex the data,
//!    with no permutation after the last block.
//! 4. [`Ascon::finalize`]: XOR the key behind the rate, run `p^a`, and
//!    read the tag out of the last 128 bits.
//!
//! A nonce must never repeat under the same key. Nothing here detects
//! reuse.

use std::fmt;
use std::str::FromStr;

use subtle::{Choice, ConstantTimeEq};
use zeroize::{Zeroize, ZeroizeOnDrop};

use crate::codec::pad_block;
use crate::error::{AuthenticationFailure, Error};
use crate::permutation::{AsconPermutation, Permutation, RoundCount, State};

pub const KEY_LEN: usize = 16;
pub const NONCE_LEN: usize = 16;
pub const TAG_LEN: usize = 16;

/// The two supported parameter sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Ascon128,
    Ascon128a,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::Ascon128, Variant::Ascon128a];

    pub const fn params(self) -> VariantParams {
        match self {
            Variant::Ascon128 => ASCON_128,
            Variant::Ascon128a => ASCON_128A,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            Variant::Ascon128 => "ASCON-128",
            Variant::Ascon128a => "ASCON-128a",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "ascon128" => Ok(Variant::Ascon128),
            "ascon128a" => Ok(Variant::Ascon128a),
            _ => Err(format!(
                "unknown variant {s:?}, expected ascon128 or ascon128a"
            )),
        }
    }
}

/// Per-variant constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VariantParams {
    variant: Variant,
    rate_bytes: usize,
    rounds_a: RoundCount,
    rounds_b: RoundCount,
}

pub const ASCON_128: VariantParams = VariantParams {
    variant: Variant::Ascon128,
    rate_bytes: 8,
    rounds_a: RoundCount::TWELVE,
    rounds_b: RoundCount::SIX,
};

pub const ASCON_128A: VariantParams = VariantParams {
    variant: Variant::Ascon128a,
    rate_bytes: 16,
    rounds_a: RoundCount::TWELVE,
    rounds_b: RoundCount::EIGHT,
};

impl VariantParams {
    pub const fn variant(&self) -> Variant {
        self.variant
    }

    pub const fn key_bits(&self) -> usize {
        KEY_LEN * 8
    }

    pub const fn nonce_bits(&self) -> usize {
        NONCE_LEN * 8
    }

    pub const fn tag_bits(&self) -> usize {
        TAG_LEN * 8
    }

    pub const fn rate_bytes(&self) -> usize {
        self.rate_bytes
    }

    pub const fn rate_words(&self) -> usize {
        self.rate_bytes / 8
    }

    pub const fn rounds_a(&self) -> RoundCount {
        self.rounds_a
    }

    pub const fn rounds_b(&self) -> RoundCount {
        self.rounds_b
    }

    /// `k || r || a || b` as bytes, followed by zeros.
    pub const fn iv_word(&self) -> u64 {
        ((self.key_bits() as u64) << 56)
            | (((self.rate_bytes * 8) as u64) << 48)
            | ((self.rounds_a.get() as u64) << 40)
            | ((self.rounds_b.get() as u64) << 32)
    }
}

/// 128-bit secret key. Wiped on drop and never printed.
#[derive(Clone, Zeroize, ZeroizeOnDrop)]
pub struct Key([u8; KEY_LEN]);

impl Key {
    pub const fn new(bytes: [u8; KEY_LEN]) -> Self {
        Self(bytes)
    }

    pub fn from_slice(bytes: &[u8]) -> Result<Self, Error> {
        Ok(Self(fixed(bytes, "key")?))
    }

    pub fn as_bytes(&self) -> &[u8; KEY_LEN] {
        &self.0
    }

    #[inline]
    fn words(&self) -> (u64, u64) {
        split_words(&self.0)
    }
}

impl fmt::Debug for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Key(<redacted>)")
    }
}

/// 128-bit public nonce.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Nonce([u8; NONCE_LEN]);

impl Nonce {
    pub const fn new(bytes: [u8; NONCE_LEN]) -> Self {
        Self(bytes)
    }

    pub fn from_slice(bytes: &[u8]) -> Result<Self, Error> {
        Ok(Self(fixed(bytes, "nonce")?))
    }

    pub fn as_bytes(&self) -> &[u8; NONCE_LEN] {
        &self.0
    }
}

impl fmt::Debug for Nonce {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Nonce({})", crate::codec::hex_encode(&self.0))
    }
}

/// 128-bit authentication tag. Equality is constant-time.
#[derive(Clone, Copy)]
pub struct Tag([u8; TAG_LEN]);

impl Tag {
    pub const fn new(bytes: [u8; TAG_LEN]) -> Self {
        Self(bytes)
    }

    pub fn from_slice(bytes: &[u8]) -> Result<Self, Error> {
        Ok(Self(fixed(bytes, "tag")?))
    }

    pub fn as_bytes(&self) -> &[u8; TAG_LEN] {
        &self.0
    }
}

impl ConstantTimeEq for Tag {
    fn ct_eq(&self, other: &Self) -> Choice {
        self.0.ct_eq(&other.0)
    }
}

impl PartialEq for Tag {
    fn eq(&self, other: &Self) -> bool {
        self.ct_eq(other).into()
    }
}

impl Eq for Tag {}

impl fmt::Debug for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tag({})", crate::codec::hex_encode(&self.0))
    }
}

fn fixed<const N: usize>(bytes: &[u8], what: &'static str) -> Result<[u8; N], Error> {
    bytes.try_into().map_err(|_| Error::InvalidLength {
        what,
        expected: N,
        actual: bytes.len(),
    })
}

#[inline]
fn be_word(bytes: &[u8]) -> u64 {
    u64::from_be_bytes(bytes.try_into().expect("8-byte chunk"))
}

#[inline]
fn split_words(bytes: &[u8; 16]) -> (u64, u64) {
    (be_word(&bytes[..8]), be_word(&bytes[8..]))
}

/// XORs a rate-sized block into the leading words of the state.
#[inline]
fn absorb(state: &mut State, block: &[u8]) {
    let words = state.words_mut();
    for (word, chunk) in words.iter_mut().zip(block.chunks_exact(8)) {
        *word ^= be_word(chunk);
    }
}

/// Copies the rate portion of the state out as bytes.
#[inline]
fn squeeze(state: &State, out: &mut [u8]) {
    for (i, chunk) in out.chunks_exact_mut(8).enumerate() {
        chunk.copy_from_slice(&state.word(i).to_be_bytes());
    }
}

/// Overwrites the rate portion of the state with `block`.
#[inline]
fn overwrite(state: &mut State, block: &[u8]) {
    let words = state.words_mut();
    for (word, chunk) in words.iter_mut().zip(block.chunks_exact(8)) {
        *word = be_word(chunk);
    }
}

/// An AEAD cipher with a fixed parameter set.
///
/// The known-answer harness runs against this trait, so any implementation
/// can be checked against the official vectors.
pub trait AeadCipher {
    fn params(&self) -> VariantParams;

    fn encrypt(&self, key: &Key, nonce: &Nonce, ad: &[u8], plaintext: &[u8]) -> (Vec<u8>, Tag);

    fn decrypt(
        &self,
        key: &Key,
        nonce: &Nonce,
        ad: &[u8],
        ciphertext: &[u8],
        tag: &Tag,
    ) -> Result<Vec<u8>, AuthenticationFailure>;
}

/// The ASCON AEAD mode over a permutation `P`.
#[derive(Clone, Copy, Debug)]
pub struct Ascon<P = AsconPermutation> {
    params: VariantParams,
    permutation: P,
}

impl Ascon {
    pub const fn new(variant: Variant) -> Self {
        Self {
            params: variant.params(),
            permutation: AsconPermutation,
        }
    }
}

impl<P: Permutation> Ascon<P> {
    pub const fn with_permutation(variant: Variant, permutation: P) -> Self {
        Self {
            params: variant.params(),
            permutation,
        }
    }

    pub const fn params(&self) -> VariantParams {
        self.params
    }

    pub fn permutation(&self) -> &P {
        &self.permutation
    }

    /// `IV || K || N` packed big-endian into `s0..s4`.
    pub fn initial_state(&self, key: &Key, nonce: &Nonce) -> State {
        let (k0, k1) = key.words();
        let (n0, n1) = split_words(&nonce.0);
        State::from_words([self.params.iv_word(), k0, k1, n0, n1])
    }

    pub fn initialize(&self, key: &Key, nonce: &Nonce) -> State {
        let mut state = self.initial_state(key, nonce);
        self.permutation.permute(&mut state, self.params.rounds_a);
        let (k0, k1) = key.words();
        let words = state.words_mut();
        words[3] ^= k0;
        words[4] ^= k1;
        state
    }

    pub fn process_associated_data(&self, state: State, ad: &[u8]) -> State {
        let mut state = state;
        let rate = self.params.rate_bytes;
        if !ad.is_empty() {
            let mut blocks = ad.chunks_exact(rate);
            for block in &mut blocks {
                absorb(&mut state, block);
                self.permutation.permute(&mut state, self.params.rounds_b);
            }
            let last = pad_block(blocks.remainder(), rate);
            absorb(&mut state, &last[..rate]);
            self.permutation.permute(&mut state, self.params.rounds_b);
        }
        state.words_mut()[4] ^= 1;
        state
    }

    pub fn encrypt_data(&self, state: State, plaintext: &[u8]) -> (State, Vec<u8>) {
        let mut state = state;
        let rate = self.params.rate_bytes;
        let mut ciphertext = Vec::with_capacity(plaintext.len());
        let mut buf = [0u8; 16];

        let mut blocks = plaintext.chunks_exact(rate);
        for block in &mut blocks {
            absorb(&mut state, block);
            squeeze(&state, &mut buf[..rate]);
            ciphertext.extend_from_slice(&buf[..rate]);
            self.permutation.permute(&mut state, self.params.rounds_b);
        }

        let tail = blocks.remainder();
        let mut last = pad_block(tail, rate);
        absorb(&mut state, &last[..rate]);
        squeeze(&state, &mut buf[..rate]);
        ciphertext.extend_from_slice(&buf[..tail.len()]);

        last.zeroize();
        buf.zeroize();
        (state, ciphertext)
    }

    pub fn decrypt_data(&self, state: State, ciphertext: &[u8]) -> (State, Vec<u8>) {
        let mut state = state;
        let rate = self.params.rate_bytes;
        let mut plaintext = Vec::with_capacity(ciphertext.len());
        let mut buf = [0u8; 16];

        let mut blocks = ciphertext.chunks_exact(rate);
        for block in &mut blocks {
            squeeze(&state, &mut buf[..rate]);
            plaintext.extend(buf[..rate].iter().zip(block).map(|(s, c)| s ^ c));
            overwrite(&mut state, block);
            self.permutation.permute(&mut state, self.params.rounds_b);
        }

        let tail = blocks.remainder();
        squeeze(&state, &mut buf[..rate]);
        for (s, &c) in buf.iter_mut().zip(tail) {
            plaintext.push(*s ^ c);
            *s = c;
        }
        buf[tail.len()] ^= 0x80;
        overwrite(&mut state, &buf[..rate]);

        buf.zeroize();
        (state, plaintext)
    }

    pub fn finalize(&self, state: State, key: &Key) -> Tag {
        let mut state = state;
        let (k0, k1) = key.words();
        let offset = self.params.rate_words();
        {
            let words = state.words_mut();
            words[offset] ^= k0;
            words[offset + 1] ^= k1;
        }
        self.permutation.permute(&mut state, self.params.rounds_a);
        let mut tag = [0u8; TAG_LEN];
        tag[..8].copy_from_slice(&(state.word(3) ^ k0).to_be_bytes());
        tag[8..].copy_from_slice(&(state.word(4) ^ k1).to_be_bytes());
        Tag(tag)
    }

    pub fn encrypt(&self, key: &Key, nonce: &Nonce, ad: &[u8], plaintext: &[u8]) -> (Vec<u8>, Tag) {
        let state = self.initialize(key, nonce);
        let state = self.process_associated_data(state, ad);
        let (state, ciphertext) = self.encrypt_data(state, plaintext);
        (ciphertext, self.finalize(state, key))
    }

    /// Recomputes the tag and releases the plaintext only if it matches.
    pub fn decrypt(
        &self,
        key: &Key,
        nonce: &Nonce,
        ad: &[u8],
        ciphertext: &[u8],
        tag: &Tag,
    ) -> Result<Vec<u8>, AuthenticationFailure> {
        let state = self.initialize(key, nonce);
        let state = self.process_associated_data(state, ad);
        let (state, mut plaintext) = self.decrypt_data(state, ciphertext);
        let expected = self.finalize(state, key);
        if bool::from(expected.ct_eq(tag)) {
            Ok(plaintext)
        } else {
            plaintext.zeroize();
            Err(AuthenticationFailure)
        }
    }
}

impl<P: Permutation> AeadCipher for Ascon<P> {
    fn params(&self) -> VariantParams {
        self.params
    }

    fn encrypt(&self, key: &Key, nonce: &Nonce, ad: &[u8], plaintext: &[u8]) -> (Vec<u8>, Tag) {
        Ascon::encrypt(self, key, nonce, ad, plaintext)
    }

    fn decrypt(
        &self,
        key: &Key,
        nonce: &Nonce,
        ad: &[u8],
        ciphertext: &[u8],
        tag: &Tag,
    ) -> Result<Vec<u8>, AuthenticationFailure> {
        Ascon::decrypt(self, key, nonce, ad, ciphertext, tag)
    }
}

pub fn initialize(variant: Variant, key: &Key, nonce: &Nonce) -> State {
    Ascon::new(variant).initialize(key, nonce)
}

pub fn process_associated_data(variant: Variant, state: State, ad: &[u8]) -> State {
    Ascon::new(variant).process_associated_data(state, ad)
}

pub fn encrypt_data(variant: Variant, state: State, plaintext: &[u8]) -> (State, Vec<u8>) {
    Ascon::new(variant).encrypt_data(state, plaintext)
}

pub fn decrypt_data(variant: Variant, state: State, ciphertext: &[u8]) -> (State, Vec<u8>) {
    Ascon::new(variant).decrypt_data(state, ciphertext)
}

pub fn finalize(variant: Variant, state: State, key: &Key) -> Tag {
    Ascon::new(variant).finalize(state, key)
}

/// One-shot encryption. Returns the ciphertext (same length as the
/// plaintext) and the tag.
pub fn encrypt(
    variant: Variant,
    key: &Key,
    nonce: &Nonce,
    ad: &[u8],
    plaintext: &[u8],
) -> (Vec<u8>, Tag) {
    Ascon::new(variant).encrypt(key, nonce, ad, plaintext)
}

/// One-shot decryption. On failure no plaintext is returned.
pub fn decrypt(
    variant: Variant,
    key: &Key,
    nonce: &Nonce,
    ad: &[u8],
    ciphertext: &[u8],
    tag: &Tag,
) -> Result<Vec<u8>, AuthenticationFailure> {
    Ascon::new(variant).decrypt(key, nonce, ad, ciphertext, tag)
}
