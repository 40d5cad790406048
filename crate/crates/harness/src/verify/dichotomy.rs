use chiforge_core::coloring::{clique_number, independence_number};
use chiforge_core::decompose::is_prime;
use chiforge_core::patterns::{is_perfect, GraphClass};

use crate::catalog::CatalogSource;
use crate::error::Result;
use crate::report::{Extremal, Failure, Tally, VerificationReport};

/// Prime graphs that are (P5, banner)-free or (C5, C7, ..., banner)-free and
/// have independence number at least 3 must be perfect.
pub fn verify_prime_dichotomy(source: &CatalogSource) -> Result<VerificationReport> {
    let (tally, ext, exempt) = source.fold(
        || (Tally::default(), Extremal::default(), 0u64),
        |(mut t, mut e, mut exempt), g| {
            let in_class = GraphClass::P5Banner.contains(g) || GraphClass::OddHoleBanner.contains(g);
            if !in_class || !is_prime(g) {
                return (t, e, exempt);
            }
            if independence_number(g) < 3 {
                exempt += 1;
                return (t, e, exempt);
            }
            t.check();
            if is_perfect(g) {
                let omega = clique_number(g);
                e.observe(omega, omega, g);
            } else {
                t.fail(Failure::new(g, "prime banner-free graph with α >= 3 is not perfect"));
            }
            (t, e, exempt)
        },
        |(t1, e1, x1), (t2, e2, x2)| (t1.merge(t2), e1.merge(e2), x1 + x2),
    )?;
    let notes = vec![format!("{exempt} prime class members have α <= 2 and are exempt")];
    Ok(VerificationReport::new("prime-dichotomy", source.to_string(), tally, ext.rows()).with_notes(notes))
}
