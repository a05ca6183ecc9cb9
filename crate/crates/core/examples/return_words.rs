//! The three return words to bispecial prefixes of a Rote sequence, checked by a scan.
use std::collections::BTreeSet;

use rote::directive::DirectiveSpec;
use rote::oracle::PrefixIndex;
use rote::rote::{rote_from_sturmian, rote_return_triple};
use rote::sturmian::{bispecial, generate_prefix};

fn main() -> rote::Result<()> {
    let spec: DirectiveSpec = "D:1|2,2".parse()?;
    let v = rote_from_sturmian(&generate_prefix(&spec, 20_000)?, 0);
    let index = PrefixIndex::new(&v);
    for n in 0..8 {
        let t = rote_return_triple(&spec, n)?;
        let w = &v[..bispecial(&spec, n)?.len_b as usize + 1];
        let seen: BTreeSet<_> = index.return_words(w)?.into_iter().collect();
        let expected: BTreeSet<_> = t.words().into_iter().cloned().collect();
        println!("n = {n} ({}), lengths {:?}, scan agrees: {}", t.case_tag, t.lengths, seen == expected);
    }
    println!("{}", serde_json::to_string(&rote_return_triple(&spec, 2)?).unwrap());
    Ok(())
}
