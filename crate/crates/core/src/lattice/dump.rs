use std::fmt::Write;

use super::{heights, HArrow, LatticeError, LatticeState, VArrow};

/// ASCII picture of a state, top row first.
///
/// Face lines show heights separated by the vertical-edge arrows (`^`/`v`);
/// edge lines show the turn (`(`), horizontal arrows (`<`/`>`) and vertices
/// (`+`).
pub fn render_state(s: &LatticeState) -> Result<String, LatticeError> {
    let n = s.n();
    let grid = heights(s)?;
    let mut out = String::new();
    for fr in (0..=2 * n).rev() {
        out.push_str("   ");
        for fc in 0..=n {
            write!(out, "{:>3}", grid.get(fr, fc)).unwrap();
            if fc < n {
                let a = match s.vertical(fc, fr) {
                    VArrow::Up => '^',
                    VArrow::Down => 'v',
                };
                write!(out, "  {a} ").unwrap();
            }
        }
        out.push('\n');
        if fr == 0 {
            break;
        }
        let row = fr - 1;
        out.push_str(if row % 2 == 1 { "  /" } else { "  \\" });
        for seg in 0..=n {
            let a = match s.horizontal(row, seg) {
                HArrow::Left => '<',
                HArrow::Right => '>',
            };
            write!(out, "  {a}").unwrap();
            if seg < n {
                out.push_str("   +");
            }
        }
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{enumerate_states, TurnKind};

    #[test]
    fn n1_negative_turn_picture() {
        let s = enumerate_states(1)
            .into_iter()
            .find(|s| s.turn(0) == TurnKind::Negative)
            .unwrap();
        let text = render_state(&s).unwrap();
        let expected = [
            "     0  v   1",
            "  /  <   +  >",
            "     1  ^   0",
            "  \\  >   +  >",
            "     0  ^  -1",
        ];
        assert_eq!(text.lines().collect::<Vec<_>>(), expected);
    }
}
