//! Game abstraction: perfect-information, two-player, zero-sum games with
//! alternating moves. Two implementations are provided: full chess
//! ([`chess::ChessState`]) and 3x3 tic-tac-toe ([`tictactoe::TttState`]),
//! the latter small enough to verify search behaviour against exhaustive
//! ground truth.

pub mod chess;
pub mod tictactoe;

use std::fmt;

use thiserror::Error;

/// The two players. `P1` moves first from the standard start position
/// (White in chess, X in tic-tac-toe).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    P1,
    P2,
}

impl Player {
    #[inline]
    pub fn opponent(self) -> Player {
        match self {
            Player::P1 => Player::P2,
            Player::P2 => Player::P1,
        }
    }
}

/// Why a terminal state is terminal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutcomeReason {
    Checkmate,
    Stalemate,
    FiftyMoveRule,
    ThreefoldRepetition,
    InsufficientMaterial,
    /// Game stopped by the self-play ply cap and adjudicated drawn.
    LengthAdjudication,
    ToyWin,
    ToyDraw,
}

/// Result of a finished game. `winner == None` means a draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Outcome {
    pub winner: Option<Player>,
    pub reason: OutcomeReason,
}

impl Outcome {
    /// Game value in `{-1, 0, +1}` from `side`'s perspective.
    #[inline]
    pub fn value_for(&self, side: Player) -> f64 {
        match self.winner {
            None => 0.0,
            Some(w) if w == side => 1.0,
            Some(_) => -1.0,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.winner {
            Some(Player::P1) => write!(f, "1-0 ({:?})", self.reason),
            Some(Player::P2) => write!(f, "0-1 ({:?})", self.reason),
            None => write!(f, "1/2-1/2 ({:?})", self.reason),
        }
    }
}

#[derive(Debug, Error)]
pub enum GameError {
    #[error("invalid FEN: {0}")]
    InvalidFen(String),
    #[error("illegal action: {0}")]
    IllegalAction(String),
}

/// An immutable game position. All operations are pure: the same state and
/// action always produce the identical successor, and values are safe to
/// share across concurrent searches.
pub trait Position: Clone + Send + Sync + 'static {
    type Action: Copy + Eq + Ord + std::hash::Hash + fmt::Debug + fmt::Display + Send + Sync + 'static;

    fn side_to_move(&self) -> Player;

    /// Half-moves played since the start of the game this state belongs to.
    fn ply(&self) -> u32;

    /// Legal actions in a stable, documented order (see each game's docs).
    /// Empty exactly when [`Position::terminal_result`] is `Some`.
    fn legal_actions(&self) -> Vec<Self::Action>;

    /// Successor state. Errors when `action` is not legal here.
    fn apply(&self, action: Self::Action) -> Result<Self, GameError>;

    /// `Some` exactly when the game is over in this state.
    fn terminal_result(&self) -> Option<Outcome>;

    /// 64-bit key identifying the position for repetition detection and
    /// game-prefix comparison. States that agree on all key-relevant fields
    /// (occupancy, side to move, castling, capturable en passant) share a key.
    fn position_key(&self) -> u64;
}

/// Fixed-size feature and policy encodings used by the trainable evaluator.
pub trait Encodable: Position {
    /// Length of the feature vector returned by `encode_features`.
    fn feature_len() -> usize;

    /// Number of slots in the fixed policy action space.
    fn policy_len() -> usize;

    /// Feature vector from the side to move's perspective: the mover's
    /// pieces always occupy the "own" planes.
    fn encode_features(&self) -> Vec<f64>;

    /// Stable index of `action` in the policy action space, from the side
    /// to move's perspective.
    fn action_index(&self, action: Self::Action) -> usize;
}
