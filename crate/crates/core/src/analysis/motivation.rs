use super::{require, verdict, Failure, TheoremVerdict};
use crate::encode::{done_place, pcn_to_on, rpes_to_rcn};
use crate::fixtures;
use crate::net::{InhibitorNet, Step};

const ID: &str = "reversible-on-counterexample";

/// Whether `t` is enabled after firing `history` one transition at a time.
fn enabled_after(net: &InhibitorNet, history: &[&str], t: &str) -> Result<bool, Failure> {
    let steps: Vec<Step> = history.iter().map(|h| Step::single(h)).collect();
    let markings = net.fire_sequence(&steps)?;
    let last = markings.last().cloned().unwrap_or_else(|| net.initial_marking());
    Ok(net.step_enabled(&last, &Step::single(t))?)
}

/// Undoing `b` in an occurrence net where `b` causes `c` needs the token
/// that `c` consumed, so `~b` is blocked once `c` has fired. The reversible
/// causal net of the corresponding structure keeps the causal dependency in
/// an inhibitor arc and lets `~b` fire in both situations.
pub fn reversible_on_counterexample() -> TheoremVerdict {
    let mut notes = Vec::new();
    let outcome = (|| {
        let cn = fixtures::net("c1.net").net;
        let on = pcn_to_on(&cn);
        let link = "(b,c)";
        require(on.is_place(link), || format!("occurrence net has no place {link}"))?;
        let mut b = on.to_builder();
        b.transition("~b");
        for p in on.preset("b")? {
            b.produce("~b", p);
        }
        for p in on.postset("b")? {
            b.consume(p, "~b");
        }
        let reversible_on = b.build()?;
        require(enabled_after(&reversible_on, &["b"], "~b")?, || {
            "occurrence net: ~b is not enabled after b".to_string()
        })?;
        require(!enabled_after(&reversible_on, &["b", "c"], "~b")?, || {
            "occurrence net: ~b is enabled after b and c".to_string()
        })?;
        notes.push(format!("occurrence net: ~b needs {link}, consumed by c"));

        let (rcn, _) = rpes_to_rcn(&fixtures::p3().structure);
        require(enabled_after(&rcn, &["b"], "~b")?, || {
            "rcn: ~b is not enabled after b".to_string()
        })?;
        require(enabled_after(&rcn, &["b", "c"], "~b")?, || {
            "rcn: ~b is not enabled after b and c".to_string()
        })?;
        notes.push(format!(
            "rcn: ~b only needs {} and is enabled after b and after b, c",
            done_place("b")
        ));
        Ok(())
    })();
    verdict(ID, "c1.net, p3.es", None, notes, outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn holds() {
        let v = reversible_on_counterexample();
        assert!(v.passed(), "{v}");
    }
}
