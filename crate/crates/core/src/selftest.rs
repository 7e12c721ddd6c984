//! Built-in smoke checks that need no external files.

use std::fmt;

use crate::aead::{AeadCipher, Ascon, Key, Nonce, Tag, Variant};
use crate::codec::hex_decode;
use crate::permutation::{permute, sbox_eval, RoundCount, State};

// Count 1 (empty PT, empty AD) and Count 1089 (|PT| = |AD| = 32) of the
// official KAT files, key = nonce = 00..0F.
const KAT_VECTORS: [(Variant, usize, &str); 4] = [
    (Variant::Ascon128, 0, "E355159F292911F794CB1432A0103A8A"),
    (Variant::Ascon128a, 0, "7A834E6F09210957067B10FD831F0078"),
    (
        Variant::Ascon128,
        32,
        "B96C78651B6246B0C3B1A5D373B0D5168DCA4A96734CF0DDF5F92F8D15E30270\
         279BF6A6CC3F2FC9350B915C292BDB8D",
    ),
    (
        Variant::Ascon128a,
        32,
        "A55236AC020DBDA74CE6CCD10C68C4D8514450A382BC87C68946D86A921DD88E\
         2ADDDFBBE77D4112830E01960B9D38D5",
    ),
];

const PERMUTATION_FIXTURE: [u64; 5] = [
    0xB8DFF46B0DB421F8,
    0xED0232A7C68DED74,
    0x138A46B172B225F9,
    0xFA8EAAAAC685D26A,
    0xF044217FBE57E755,
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SelfTestReport {
    pub checks: Vec<Check>,
}

impl SelfTestReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
        });
    }
}

impl fmt::Display for SelfTestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            let status = if check.passed { "ok" } else { "FAILED" };
            writeln!(f, "{status:>6}  {}", check.name)?;
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        write!(f, "{passed}/{} checks passed", self.checks.len())
    }
}

/// Runs the self-test against the production ciphers.
pub fn run() -> SelfTestReport {
    run_with(Ascon::new)
}

/// Runs the self-test against ciphers built by `make`.
pub fn run_with<C: AeadCipher>(make: impl Fn(Variant) -> C) -> SelfTestReport {
    let mut report = SelfTestReport::default();

    let bijective = {
        let mut seen = [false; 32];
        (0..32u8).for_each(|v| seen[sbox_eval(v) as usize] = true);
        seen.iter().all(|&s| s)
    };
    report.push("s-box is a bijection on 5 bits", bijective);

    let iv = State::from_words([Variant::Ascon128.params().iv_word(), 0, 0, 0, 0]);
    report.push(
        "12-round permutation fixture",
        permute(iv, RoundCount::TWELVE).words() == PERMUTATION_FIXTURE,
    );

    let key = Key::new(core::array::from_fn(|i| i as u8));
    let nonce = Nonce::new(core::array::from_fn(|i| i as u8));

    for (variant, len, expected) in KAT_VECTORS {
        let cipher = make(variant);
        let msg: Vec<u8> = (0..len as u8).collect();
        let expected = hex_decode(expected).expect("embedded vector");
        let (ct, tag) = cipher.encrypt(&key, &nonce, &msg, &msg);
        let produced = [ct.as_slice(), tag.as_bytes()].concat();
        report.push(
            format!("{variant} KAT |pt|=|ad|={len} encrypt"),
            produced == expected,
        );

        let (ct, tag) = expected.split_at(len);
        let tag = Tag::from_slice(tag).expect("embedded tag");
        let decrypted = cipher.decrypt(&key, &nonce, &msg, ct, &tag);
        report.push(
            format!("{variant} KAT |pt|=|ad|={len} decrypt"),
            decrypted.as_deref() == Ok(msg.as_slice()),
        );
    }

    for variant in Variant::ALL {
        let cipher = make(variant);
        let msg: Vec<u8> = (0..=200u8).collect();
        let ad = b"self-test associated data";
        let (ct, tag) = cipher.encrypt(&key, &nonce, ad, &msg);
        let round_trip = cipher.decrypt(&key, &nonce, ad, &ct, &tag).as_deref() == Ok(&msg[..]);
        let mut forged = ct.clone();
        forged[0] ^= 1;
        let rejects = cipher.decrypt(&key, &nonce, ad, &forged, &tag).is_err();
        report.push(
            format!("{variant} round trip and forgery rejection"),
            round_trip && rejects && ct.len() == msg.len(),
        );
    }

    report
}
