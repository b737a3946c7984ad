//! Bundled fixture files. `NELSON_FIXTURES=<dir>` makes [`load`] read from
//! a directory instead of the copies compiled into the library.

use std::borrow::Cow;
use std::path::PathBuf;

use crate::algebra::{boolean2, godel3, lukasiewicz3};
use crate::formula::Formula;

pub const ENV_VAR: &str = "NELSON_FIXTURES";

macro_rules! bundle {
    ($($name:literal),* $(,)?) => {
        pub const BUNDLED: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../fixtures/", $name)))),*
        ];
    };
}

bundle!(
    "a4.alg",
    "boolean2.alg",
    "godel3.alg",
    "l3.alg",
    "n4.calc",
    "s.calc",
    "sprime.calc",
    "proofs/inconsistency.proof",
    "proofs/il1.proof",
    "proofs/il2.proof",
    "proofs/il3.proof",
    "proofs/il4.proof",
    "proofs/il5-and.proof",
    "proofs/il5-imp.proof",
    "proofs/il5-neg.proof",
    "proofs/il5-or.proof",
    "proofs/prop2.1.1.proof",
    "proofs/prop2.1.2.proof",
    "proofs/prop2.1.3.proof",
    "proofs/prop2.1.4.proof",
    "proofs/prop2.1.5.proof",
    "proofs/prop2.2.lr1.proof",
    "proofs/prop2.2.lr2.proof",
    "proofs/prop2.2.rl.proof",
    "proofs/sprime/bridge-from-weak.proof",
    "proofs/sprime/bridge-to-weak.proof",
    "proofs/sprime/square-elim.proof",
    "proofs/sprime/square-split.proof",
    "proofs/sprime/weaken.proof",
    "proofs/n4/n12-instance.proof",
    "proofs/n4/n9-round-trip.proof",
    "proofs/n4/negated-implication.proof",
    "proofs/n4/p-implies-p.proof",
);

/// Directory named by `NELSON_FIXTURES`, if set.
pub fn override_dir() -> Option<PathBuf> {
    std::env::var_os(ENV_VAR).map(PathBuf::from)
}

/// A bundled fixture by relative path, honouring the override directory.
pub fn load(name: &str) -> Result<Cow<'static, str>, crate::Error> {
    if let Some(dir) = override_dir() {
        return Ok(Cow::Owned(std::fs::read_to_string(dir.join(name))?));
    }
    BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| Cow::Borrowed(*t))
        .ok_or_else(|| crate::Error::Input(format!("no bundled fixture `{name}`")))
}

const L3_HEADER: &str = "# The three-element MV-chain 0 < m < 1, a * b = max(0, a + b - 1).\n";
const GODEL_HEADER: &str = "# The three-element Goedel chain 0 < m < 1; fusion is meet.\n";
const BOOLEAN_HEADER: &str = "# The two-element Boolean algebra.\n";
const INCONSISTENCY_HEADER: &str = "\
# Proof of a bare variable using the swapped conjunction rule.
# Accepted with --mode historical, rejected at step 3 otherwise.
";

/// Every bundled file as the library would write it today.
pub fn render_all() -> Vec<(String, String)> {
    let mut out = vec![
        ("a4.alg".to_string(), crate::n4::A4_TEXT.to_string()),
        (
            "boolean2.alg".into(),
            format!("{BOOLEAN_HEADER}{}", boolean2().to_file_string()),
        ),
        (
            "godel3.alg".into(),
            format!("{GODEL_HEADER}{}", godel3().to_file_string()),
        ),
        (
            "l3.alg".into(),
            format!("{L3_HEADER}{}", lukasiewicz3().to_file_string()),
        ),
        ("n4.calc".into(), format!("{}\n", crate::n4::calculus().presentation)),
        ("s.calc".into(), format!("{}\n", crate::calculus_s::presentation())),
        (
            "sprime.calc".into(),
            format!("{}\n", crate::calculus_s_prime::presentation()),
        ),
        (
            "proofs/inconsistency.proof".into(),
            format!(
                "{INCONSISTENCY_HEADER}{}",
                crate::calculus_s::inconsistency_fixture(&Formula::var("q")).to_file_string()
            ),
        ),
    ];
    for n in crate::calculus_s::fixtures() {
        out.push((format!("proofs/{}.proof", n.name), n.proof.to_file_string()));
    }
    for (name, p) in crate::calculus_s_prime::fixtures() {
        out.push((format!("proofs/sprime/{name}.proof"), p.to_file_string()));
    }
    for (name, p) in crate::n4::n4_hilbert_fixtures() {
        out.push((format!("proofs/n4/{name}.proof"), p.to_file_string()));
    }
    out
}
