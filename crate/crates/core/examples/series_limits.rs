//! Partial sums of the four series against their closed forms.

use aperylab::identities::{series_limit, SeriesId};

fn main() -> aperylab::Result<()> {
    for terms in [5, 20, 60] {
        for id in SeriesId::ALL {
            let s = series_limit(id, terms)?;
            println!(
                "{:<14} {terms:>3} terms  {:.15}  error {:.2e}",
                id.name(),
                s.partial,
                s.abs_error
            );
        }
    }
    Ok(())
}
