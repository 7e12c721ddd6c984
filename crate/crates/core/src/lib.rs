//! ASCON-128 and ASCON-128a authenticated encryption.
//!
//! ```
//! use ascon_core::{decrypt, encrypt, Key, Nonce, Variant};
//!
//! let key = Key::new([7; 16]);
//! let nonce = Nonce::new([1; 16]);
//! let (ct, tag) = encrypt(Variant::Ascon128, &key, &nonce, b"header", b"payload");
//! let pt = decrypt(Variant::Ascon128, &key, &nonce, b"header", &ct, &tag).unwrap();
//! assert_eq!(pt, b"payload");
//! ```

#![forbid(unsafe_code)]

pub mod aead;
pub mod codec;
mod error;
pub mod kat;
pub mod permutation;
pub mod selftest;

pub use aead::{
    decrypt, encrypt, AeadCipher, Ascon, Key, Nonce, Tag, Variant, VariantParams, KEY_LEN,
    NONCE_LEN, TAG_LEN,
};
pub use error::{AuthenticationFailure, Error};
pub use kat::{parse_kat_file, run_kat, KatRecord, KatReport};
pub use permutation::{AsconPermutation, Permutation, RoundCount, State};
