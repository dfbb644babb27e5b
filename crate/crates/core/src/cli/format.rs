//! Text encodings for trajectories and sweeps.

use std::fmt::Write as _;

use crate::model::{power, Trajectory};

/// Shortest decimal that parses back to the same `f64`.
///
/// Plain notation for ordinary magnitudes, exponent notation outside
/// `[1e-5, 1e16)` so huge and tiny values stay short.
pub fn fmt_num(x: f64) -> String {
    let mag = x.abs();
    if x == 0.0 || (1e-5..1e16).contains(&mag) || !x.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

pub const TRAJECTORY_HEADER: &str = "t,a,b,power";

/// `t,a,b,power` rows plus an optional `# truncated_at=<t>` trailer.
pub fn trajectory_csv(tr: &Trajectory) -> String {
    let mut out = String::with_capacity(32 * (tr.len() + 1));
    out.push_str(TRAJECTORY_HEADER);
    out.push('\n');
    for (t, s) in tr.states.iter().enumerate() {
        let _ = writeln!(
            out,
            "{t},{},{},{}",
            fmt_num(s.a),
            fmt_num(s.b),
            fmt_num(power(&tr.params, *s))
        );
    }
    if let Some(t) = tr.truncated_at {
        let _ = writeln!(out, "# truncated_at={t}");
    }
    out
}
