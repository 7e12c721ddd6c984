//! Deliberately broken ASCON variants, one per classic implementation bug.
//!
//! Each mutant reuses the production phases and swaps out exactly one step.

use ascon_core::aead::{AeadCipher, Ascon, Key, Nonce, Tag, Variant, VariantParams};
use ascon_core::permutation::{round_constant, substitution_layer, Permutation, ROTATIONS};
use ascon_core::{AsconPermutation, AuthenticationFailure, RoundCount, State};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutant {
    /// Round constant drops its low nibble: `(0xF - i) << 4`.
    WrongRoundConstants,
    /// Linear layer rotates left instead of right.
    LeftRotation,
    /// Linear layer forgets to XOR the word itself back in.
    MissingLinearXor,
    /// Initialization skips the `0* || K` XOR.
    MissingInitKeyXor,
    /// Data phase permutes after the final block too.
    ExtraLastBlockPermutation,
    /// AD phase skips the permutation after its final block.
    MissingAdFinalPermutation,
    /// AD phase never flips the domain-separation bit.
    MissingDomainSeparator,
    /// Finalization XORs the key into `s3, s4` instead of right behind the rate.
    WrongFinalizeKeyOffset,
}

impl Mutant {
    /// The bug classes every KAT run must catch.
    pub const LEDGER: [Mutant; 7] = [
        Mutant::WrongRoundConstants,
        Mutant::LeftRotation,
        Mutant::MissingLinearXor,
        Mutant::MissingInitKeyXor,
        Mutant::ExtraLastBlockPermutation,
        Mutant::MissingAdFinalPermutation,
        Mutant::MissingDomainSeparator,
    ];

    pub const ALL: [Mutant; 8] = [
        Mutant::WrongRoundConstants,
        Mutant::LeftRotation,
        Mutant::MissingLinearXor,
        Mutant::MissingInitKeyXor,
        Mutant::ExtraLastBlockPermutation,
        Mutant::MissingAdFinalPermutation,
        Mutant::MissingDomainSeparator,
        Mutant::WrongFinalizeKeyOffset,
    ];
}

/// The production permutation, or one with a single broken step.
#[derive(Clone, Copy, Debug)]
pub struct MutantPermutation(Option<Mutant>);

impl Permutation for MutantPermutation {
    fn permute(&self, state: &mut State, rounds: RoundCount) {
        let bug = match self.0 {
            Some(
                m @ (Mutant::WrongRoundConstants | Mutant::LeftRotation | Mutant::MissingLinearXor),
            ) => m,
            _ => return AsconPermutation.permute(state, rounds),
        };
        for i in rounds.first_index()..12 {
            let mut w = state.words();
            let c = round_constant(i).unwrap();
            w[2] ^= u64::from(if bug == Mutant::WrongRoundConstants {
                c & 0xF0
            } else {
                c
            });
            let mut w = substitution_layer(State::from_words(w)).words();
            for (word, &(a, b)) in w.iter_mut().zip(ROTATIONS.iter()) {
                *word = match bug {
                    Mutant::LeftRotation => *word ^ word.rotate_left(a) ^ word.rotate_left(b),
                    Mutant::MissingLinearXor => word.rotate_right(a) ^ word.rotate_right(b),
                    _ => *word ^ word.rotate_right(a) ^ word.rotate_right(b),
                };
            }
            *state = State::from_words(w);
        }
    }
}

pub struct MutantCipher {
    mutant: Mutant,
    engine: Ascon<MutantPermutation>,
}

fn key_words(key: &Key) -> (u64, u64) {
    let k = key.as_bytes();
    (
        u64::from_be_bytes(k[..8].try_into().unwrap()),
        u64::from_be_bytes(k[8..].try_into().unwrap()),
    )
}

impl MutantCipher {
    pub fn new(variant: Variant, mutant: Mutant) -> Self {
        Self {
            mutant,
            engine: Ascon::with_permutation(variant, MutantPermutation(Some(mutant))),
        }
    }

    fn permute(&self, state: State, rounds: RoundCount) -> State {
        let mut s = state;
        self.engine.permutation().permute(&mut s, rounds);
        s
    }

    fn initialize(&self, key: &Key, nonce: &Nonce) -> State {
        if self.mutant == Mutant::MissingInitKeyXor {
            let s = self.engine.initial_state(key, nonce);
            return self.permute(s, self.engine.params().rounds_a());
        }
        self.engine.initialize(key, nonce)
    }

    fn associated_data(&self, state: State, ad: &[u8]) -> State {
        match self.mutant {
            Mutant::MissingDomainSeparator => {
                let mut w = self.engine.process_associated_data(state, ad).words();
                w[4] ^= 1;
                State::from_words(w)
            }
            Mutant::MissingAdFinalPermutation => {
                let params = self.engine.params();
                let rate = params.rate_bytes();
                let mut s = state;
                if !ad.is_empty() {
                    let padded = ascon_core::codec::pad_10star(ad, rate).unwrap();
                    let blocks = padded.len() / rate;
                    for (i, block) in padded.chunks_exact(rate).enumerate() {
                        let mut w = s.words();
                        for (j, chunk) in block.chunks_exact(8).enumerate() {
                            w[j] ^= u64::from_be_bytes(chunk.try_into().unwrap());
                        }
                        s = State::from_words(w);
                        if i + 1 < blocks {
                            s = self.permute(s, params.rounds_b());
                        }
                    }
                }
                let mut w = s.words();
                w[4] ^= 1;
                State::from_words(w)
            }
            _ => self.engine.process_associated_data(state, ad),
        }
    }

    fn after_data(&self, state: State) -> State {
        if self.mutant == Mutant::ExtraLastBlockPermutation {
            return self.permute(state, self.engine.params().rounds_b());
        }
        state
    }

    fn finalize(&self, state: State, key: &Key) -> Tag {
        if self.mutant != Mutant::WrongFinalizeKeyOffset {
            return self.engine.finalize(state, key);
        }
        let (k0, k1) = key_words(key);
        let mut w = state.words();
        w[3] ^= k0;
        w[4] ^= k1;
        let out = self.permute(State::from_words(w), RoundCount::TWELVE);
        let mut tag = [0u8; 16];
        tag[..8].copy_from_slice(&(out.word(3) ^ k0).to_be_bytes());
        tag[8..].copy_from_slice(&(out.word(4) ^ k1).to_be_bytes());
        Tag::new(tag)
    }
}

impl AeadCipher for MutantCipher {
    fn params(&self) -> VariantParams {
        self.engine.params()
    }

    fn encrypt(&self, key: &Key, nonce: &Nonce, ad: &[u8], plaintext: &[u8]) -> (Vec<u8>, Tag) {
        let s = self.initialize(key, nonce);
        let s = self.associated_data(s, ad);
        let (s, ct) = self.engine.encrypt_data(s, plaintext);
        let s = self.after_data(s);
        (ct, self.finalize(s, key))
    }

    fn decrypt(
        &self,
        key: &Key,
        nonce: &Nonce,
        ad: &[u8],
        ciphertext: &[u8],
        tag: &Tag,
    ) -> Result<Vec<u8>, AuthenticationFailure> {
        let s = self.initialize(key, nonce);
        let s = self.associated_data(s, ad);
        let (s, pt) = self.engine.decrypt_data(s, ciphertext);
        let s = self.after_data(s);
        if self.finalize(s, key) == *tag {
            Ok(pt)
        } else {
            Err(AuthenticationFailure)
        }
    }
}

/// A cipher that behaves exactly like production, routed through the mutant plumbing.
pub fn unmutated(variant: Variant) -> Ascon<MutantPermutation> {
    Ascon::with_permutation(variant, MutantPermutation(None))
}
