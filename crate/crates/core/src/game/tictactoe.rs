//! 3x3 tic-tac-toe. Small enough that the accompanying test suites solve it
//! exhaustively, which makes it the ground-truth game for search correctness.

use super::{Encodable, GameError, Outcome, OutcomeReason, Player, Position};
use std::fmt;

/// A cell index, row-major: 0..=2 top row, 3..=5 middle, 6..=8 bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell(pub u8);

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

const LINES: [u16; 8] = [
    0b000_000_111, // rows
    0b000_111_000,
    0b111_000_000,
    0b001_001_001, // columns
    0b010_010_010,
    0b100_100_100,
    0b100_010_001, // diagonals
    0b001_010_100,
];

const FULL: u16 = 0b111_111_111;

#[inline]
fn has_line(mask: u16) -> bool {
    LINES.iter().any(|&l| mask & l == l)
}

/// Tic-tac-toe position. X is [`Player::P1`] and always moves first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TttState {
    x: u16,
    o: u16,
    ply: u32,
}

impl Default for TttState {
    fn default() -> Self {
        TttState::new()
    }
}

impl TttState {
    pub fn new() -> Self {
        TttState { x: 0, o: 0, ply: 0 }
    }

    /// Build a position from cell contents ('X', 'O', '.' per cell).
    /// Ply is inferred from the stone count.
    pub fn from_cells(cells: [char; 9]) -> Result<Self, GameError> {
        let mut x = 0u16;
        let mut o = 0u16;
        for (i, c) in cells.iter().enumerate() {
            match c {
                'X' | 'x' => x |= 1 << i,
                'O' | 'o' => o |= 1 << i,
                '.' => {}
                other => {
                    return Err(GameError::InvalidFen(format!(
                        "bad tic-tac-toe cell {other:?} at index {i}"
                    )))
                }
            }
        }
        let nx = x.count_ones();
        let no = o.count_ones();
        if nx != no && nx != no + 1 {
            return Err(GameError::InvalidFen(format!(
                "unreachable stone counts: {nx} X vs {no} O"
            )));
        }
        Ok(TttState { x, o, ply: nx + no })
    }

    #[inline]
    pub fn occupied(&self) -> u16 {
        self.x | self.o
    }

    #[inline]
    fn own_and_opp(&self) -> (u16, u16) {
        match self.side_to_move() {
            Player::P1 => (self.x, self.o),
            Player::P2 => (self.o, self.x),
        }
    }
}

impl Position for TttState {
    type Action = Cell;

    #[inline]
    fn side_to_move(&self) -> Player {
        if self.ply % 2 == 0 {
            Player::P1
        } else {
            Player::P2
        }
    }

    #[inline]
    fn ply(&self) -> u32 {
        self.ply
    }

    fn legal_actions(&self) -> Vec<Cell> {
        if self.terminal_result().is_some() {
            return Vec::new();
        }
        let occ = self.occupied();
        (0..9).filter(|&i| occ & (1 << i) == 0).map(Cell).collect()
    }

    fn apply(&self, action: Cell) -> Result<Self, GameError> {
        if action.0 >= 9 {
            return Err(GameError::IllegalAction(format!("cell {} out of range", action.0)));
        }
        if self.terminal_result().is_some() || self.occupied() & (1 << action.0) != 0 {
            return Err(GameError::IllegalAction(format!("cell {} not playable", action.0)));
        }
        let mut next = *self;
        match self.side_to_move() {
            Player::P1 => next.x |= 1 << action.0,
            Player::P2 => next.o |= 1 << action.0,
        }
        next.ply += 1;
        Ok(next)
    }

    fn terminal_result(&self) -> Option<Outcome> {
        if has_line(self.x) {
            return Some(Outcome { winner: Some(Player::P1), reason: OutcomeReason::ToyWin });
        }
        if has_line(self.o) {
            return Some(Outcome { winner: Some(Player::P2), reason: OutcomeReason::ToyWin });
        }
        if self.occupied() == FULL {
            return Some(Outcome { winner: None, reason: OutcomeReason::ToyDraw });
        }
        None
    }

    #[inline]
    fn position_key(&self) -> u64 {
        let side = match self.side_to_move() {
            Player::P1 => 0u64,
            Player::P2 => 1u64,
        };
        (self.x as u64) | (self.o as u64) << 9 | side << 18
    }
}

impl Encodable for TttState {
    fn feature_len() -> usize {
        19
    }

    fn policy_len() -> usize {
        9
    }

    fn encode_features(&self) -> Vec<f64> {
        let (own, opp) = self.own_and_opp();
        let mut f = vec![0.0; 19];
        for i in 0..9 {
            if own & (1 << i) != 0 {
                f[i] = 1.0;
            }
            if opp & (1 << i) != 0 {
                f[9 + i] = 1.0;
            }
        }
        // Constant side-to-move marker; the planes above are already
        // mover-relative, so this acts as a bias input.
        f[18] = 1.0;
        f
    }

    #[inline]
    fn action_index(&self, action: Cell) -> usize {
        action.0 as usize
    }
}

impl fmt::Display for TttState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in 0..3 {
            for col in 0..3 {
                let i = row * 3 + col;
                let c = if self.x & (1 << i) != 0 {
                    'X'
                } else if self.o & (1 << i) != 0 {
                    'O'
                } else {
                    '.'
                };
                write!(f, "{c}")?;
            }
            if row < 2 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_board_has_nine_actions() {
        let s = TttState::new();
        assert_eq!(s.legal_actions().len(), 9);
        assert_eq!(s.side_to_move(), Player::P1);
    }

    #[test]
    fn center_move_flips_side() {
        let s = TttState::new().apply(Cell(4)).unwrap();
        assert_eq!(s.side_to_move(), Player::P2);
        assert_eq!(s.ply(), 1);
        assert!(s.legal_actions().iter().all(|c| c.0 != 4));
    }

    #[test]
    fn three_in_a_row_wins_for_x() {
        let s = TttState::from_cells(['X', 'X', 'X', 'O', 'O', '.', '.', '.', '.']).unwrap();
        let out = s.terminal_result().unwrap();
        assert_eq!(out.winner, Some(Player::P1));
        assert_eq!(out.reason, OutcomeReason::ToyWin);
        assert!(s.legal_actions().is_empty());
    }

    #[test]
    fn full_board_draws() {
        let s = TttState::from_cells(['X', 'O', 'X', 'X', 'O', 'O', 'O', 'X', 'X']).unwrap();
        let out = s.terminal_result().unwrap();
        assert_eq!(out.winner, None);
        assert_eq!(out.reason, OutcomeReason::ToyDraw);
    }

    #[test]
    fn occupied_cell_is_illegal() {
        let s = TttState::new().apply(Cell(4)).unwrap();
        assert!(s.apply(Cell(4)).is_err());
    }

    #[test]
    fn apply_is_pure() {
        let s = TttState::new();
        let a = s.apply(Cell(3)).unwrap();
        let b = s.apply(Cell(3)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.position_key(), b.position_key());
    }

    #[test]
    fn features_are_mover_relative() {
        let s = TttState::new();
        let f = s.encode_features();
        assert_eq!(f.len(), 19);
        assert!(f[..18].iter().all(|&v| v == 0.0));
        assert_eq!(f[18], 1.0);

        let s = s.apply(Cell(4)).unwrap();
        // O to move: X's center stone is an opponent feature.
        let f = s.encode_features();
        assert_eq!(f[4], 0.0);
        assert_eq!(f[9 + 4], 1.0);
    }
}
