//! Both sides of Parseval's identity for the built-in corpus and one
//! mixed-parity pair.

use finite_ortho::fourier::PairingParams;
use finite_ortho::verify::{parseval_corpus, parseval_pair, ParsevalPair};

fn main() -> finite_ortho::Result<()> {
    let mut pairs = parseval_corpus()?;
    pairs.push(ParsevalPair::family_a(PairingParams::theorem1(0.25, 2.0, 0.0, 4.0), 1, 2)?);
    for pair in &pairs {
        let r = parseval_pair(pair, 1e-8)?;
        println!("{:<58} x-side {:>20.15e}  s-side {:>20.15e}  rel {:.1e}", r.label, r.left, r.right, r.rel_dev);
    }
    Ok(())
}
