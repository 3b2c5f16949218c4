//! Zobrist key tables. Generated once from a fixed SplitMix64 stream so keys
//! are identical across platforms and runs.

use once_cell::sync::Lazy;

const SEED: u64 = 0x0DDB_A115_EED2_024C;

pub struct ZobristTables {
    /// Indexed by `color * 6 + kind`, then square.
    pub piece_sq: [[u64; 64]; 12],
    pub side_black: u64,
    /// Indexed by the 4-bit castling-rights mask.
    pub castling: [u64; 16],
    pub ep_file: [u64; 8],
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub static ZOBRIST: Lazy<ZobristTables> = Lazy::new(|| {
    let mut s = SEED;
    let mut piece_sq = [[0u64; 64]; 12];
    for plane in piece_sq.iter_mut() {
        for entry in plane.iter_mut() {
            *entry = splitmix64(&mut s);
        }
    }
    let side_black = splitmix64(&mut s);
    let mut castling = [0u64; 16];
    // castling[0] stays 0 so "no rights" contributes nothing.
    for entry in castling.iter_mut().skip(1) {
        *entry = splitmix64(&mut s);
    }
    let mut ep_file = [0u64; 8];
    for entry in ep_file.iter_mut() {
        *entry = splitmix64(&mut s);
    }
    ZobristTables { piece_sq, side_black, castling, ep_file }
});
