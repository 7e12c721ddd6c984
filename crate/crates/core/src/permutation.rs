//! The 320-bit ASCON permutation.
//!
//! The state is held bitsliced as five 64-bit words. Bit `j` of `s0..s4`
//! together form the 5-bit input of the `j`-th S-box, so one pass of word
//! operations evaluates all 64 S-boxes at once. Nothing in this module
//! branches on or indexes memory by state-derived values.

use std::fmt;

use crate::error::Error;

/// Number of rounds in the full round-constant schedule.
pub const MAX_ROUNDS: usize = 12;

/// Rotation pairs of the linear layer, one per state word.
pub const ROTATIONS: [(u32, u32); 5] = [(19, 28), (61, 39), (1, 6), (10, 17), (7, 41)];

/// The permutation state: five 64-bit words `s0..s4`.
///
/// `s0` carries the most significant bit of every S-box slice and `s4` the
/// least significant one.
#[derive(Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct State {
    words: [u64; 5],
}

impl State {
    pub const fn from_words(words: [u64; 5]) -> Self {
        Self { words }
    }

    /// Packs 40 bytes big-endian into `s0..s4`.
    pub fn from_bytes(bytes: &[u8; 40]) -> Self {
        let mut words = [0u64; 5];
        for (word, chunk) in words.iter_mut().zip(bytes.chunks_exact(8)) {
            *word = u64::from_be_bytes(chunk.try_into().expect("chunk of 8"));
        }
        Self { words }
    }

    pub fn to_bytes(&self) -> [u8; 40] {
        let mut out = [0u8; 40];
        for (chunk, word) in out.chunks_exact_mut(8).zip(self.words) {
            chunk.copy_from_slice(&word.to_be_bytes());
        }
        out
    }

    #[inline]
    pub const fn words(&self) -> [u64; 5] {
        self.words
    }

    #[inline]
    pub const fn word(&self, index: usize) -> u64 {
        self.words[index]
    }

    #[inline]
    pub(crate) fn words_mut(&mut self) -> &mut [u64; 5] {
        &mut self.words
    }
}

impl fmt::Debug for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [s0, s1, s2, s3, s4] = self.words;
        write!(
            f,
            "State({s0:016X} {s1:016X} {s2:016X} {s3:016X} {s4:016X})"
        )
    }
}

/// A validated permutation round count: 6, 8 or 12.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RoundCount(u8);

impl RoundCount {
    pub const SIX: Self = Self(6);
    pub const EIGHT: Self = Self(8);
    pub const TWELVE: Self = Self(12);

    pub fn new(rounds: u32) -> Result<Self, Error> {
        match rounds {
            6 | 8 | 12 => Ok(Self(rounds as u8)),
            other => Err(Error::InvalidRoundCount(other)),
        }
    }

    #[inline]
    pub const fn get(self) -> usize {
        self.0 as usize
    }

    /// Index into the 12-round constant schedule at which this round count starts.
    #[inline]
    pub const fn first_index(self) -> usize {
        MAX_ROUNDS - self.0 as usize
    }
}

impl TryFrom<u32> for RoundCount {
    type Error = Error;

    fn try_from(value: u32) -> Result<Self, Self::Error> {
        Self::new(value)
    }
}

/// Rotates `x` right by `r` bits.
///
/// `r` must lie in `0..=63`; anything else is a caller bug and panics.
#[inline(always)]
pub fn rotr64(x: u64, r: u32) -> u64 {
    assert!(r < 64, "rotation amount {r} out of range 0..=63");
    x.rotate_right(r)
}

/// Round constant for position `round_index` of the 12-round schedule.
pub fn round_constant(round_index: usize) -> Result<u8, Error> {
    if round_index >= MAX_ROUNDS {
        return Err(Error::RoundIndex(round_index));
    }
    Ok(constant_at(round_index))
}

#[inline(always)]
fn constant_at(i: usize) -> u8 {
    (((0x0f - i) << 4) | i) as u8
}

/// XORs the constant for schedule position `round_index` into `s2`.
#[inline(always)]
pub(crate) fn add_constant(state: &mut State, round_index: usize) {
    state.words[2] ^= u64::from(constant_at(round_index));
}

#[inline(always)]
pub(crate) fn sbox_in_place(state: &mut State) {
    let [mut x0, mut x1, mut x2, mut x3, mut x4] = state.words;

    x0 ^= x4;
    x4 ^= x3;
    x2 ^= x1;

    let t0 = !x0 & x1;
    let t1 = !x1 & x2;
    let t2 = !x2 & x3;
    let t3 = !x3 & x4;
    let t4 = !x4 & x0;

    x0 ^= t1;
    x1 ^= t2;
    x2 ^= t3;
    x3 ^= t4;
    x4 ^= t0;

    x1 ^= x0;
    x0 ^= x4;
    x3 ^= x2;
    x2 = !x2;

    state.words = [x0, x1, x2, x3, x4];
}

#[inline(always)]
pub(crate) fn linear_in_place(state: &mut State) {
    for (word, &(a, b)) in state.words.iter_mut().zip(ROTATIONS.iter()) {
        *word ^= rotr64(*word, a) ^ rotr64(*word, b);
    }
}

/// Applies the 5-bit S-box to all 64 slices of the state.
pub fn substitution_layer(state: State) -> State {
    let mut out = state;
    sbox_in_place(&mut out);
    out
}

/// Per-word diffusion: `s_i ^= rotr(s_i, a_i) ^ rotr(s_i, b_i)`.
pub fn linear_layer(state: State) -> State {
    let mut out = state;
    linear_in_place(&mut out);
    out
}

/// Runs `rounds` rounds of the permutation, using the last `rounds`
/// constants of the 12-round schedule.
pub fn permute(state: State, rounds: RoundCount) -> State {
    let mut out = state;
    permute_in_place(&mut out, rounds);
    out
}

#[inline]
pub(crate) fn permute_in_place(state: &mut State, rounds: RoundCount) {
    for i in rounds.first_index()..MAX_ROUNDS {
        add_constant(state, i);
        sbox_in_place(state);
        linear_in_place(state);
    }
}

/// A 320-bit permutation the AEAD mode can run on.
///
/// [`AsconPermutation`] is the only production implementation; the trait
/// exists so alternative permutations can be plugged into the mode and
/// checked against the known-answer vectors.
pub trait Permutation {
    fn permute(&self, state: &mut State, rounds: RoundCount);
}

/// The standard ASCON permutation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AsconPermutation;

impl Permutation for AsconPermutation {
    #[inline]
    fn permute(&self, state: &mut State, rounds: RoundCount) {
        permute_in_place(state, rounds);
    }
}

impl<P: Permutation + ?Sized> Permutation for &P {
    fn permute(&self, state: &mut State, rounds: RoundCount) {
        (**self).permute(state, rounds)
    }
}

/// Applies the bitsliced S-box to a single 5-bit value by broadcasting it
/// across all slices and reading slice 0 back.
pub fn sbox_eval(input: u8) -> u8 {
    let mut words = [0u64; 5];
    for (bit, word) in words.iter_mut().enumerate() {
        // s0 carries the most significant input bit.
        *word = u64::from((input >> (4 - bit)) & 1).wrapping_neg();
    }
    let out = substitution_layer(State::from_words(words));
    out.words
        .iter()
        .enumerate()
        .fold(0u8, |acc, (bit, w)| acc | (((w & 1) as u8) << (4 - bit)))
}
