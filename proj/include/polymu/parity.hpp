#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace polymu {

enum class Player { kExists, kForall };

inline Player opponent(Player p) { return p == Player::kExists ? Player::kForall : Player::kExists; }

/// Finite parity game. The player who has to move at a dead end loses; an
/// infinite play is won by Exists iff the highest priority seen infinitely
/// often is even.
struct ParityGame {
  std::vector<Player> owner;
  std::vector<unsigned> priority;
  std::vector<std::vector<std::size_t>> moves;
  std::size_t initial = 0;

  std::size_t size() const noexcept { return owner.size(); }
  std::size_t add(Player who, unsigned prio);
};

struct ParitySolution {
  std::vector<Player> winner;
  /// Positional strategy: for each position won by its owner, the chosen
  /// move; nullopt where the owner loses or is stuck.
  std::vector<std::optional<std::size_t>> strategy;
};

/// Recursive attractor decomposition (Zielonka).
ParitySolution solve_parity(const ParityGame& game);

/// Checks that each winning region is closed under the opponent's moves and
/// under the owner's strategy, and that in the graph restricted to the
/// strategy every cycle has a maximal priority of the winner's parity.
bool check_strategy(const ParityGame& game, const ParitySolution& sol);

}  // namespace polymu
