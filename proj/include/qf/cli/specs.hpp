#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qf/algebra/laurent.hpp"
#include "qf/algebra/ring.hpp"
#include "qf/homology/chain.hpp"
#include "qf/link/diagram.hpp"
#include "qf/quandle/quandle.hpp"

namespace qf::cli {

struct QuandleChoice {
  FiniteQuandle quandle;
  /// Set for Alexander quandles (element i is ring index i).
  std::optional<FiniteRing> ring;
  std::string spec;
};

/// dihedral:<n>, trivial:<n>, alexander:<q>:<h>, w:<q>:<m>, u:<q>:<m>,
/// wreath:r<n>:<v>, wreath:qs4:<u>, conj:qs4, file:<path> or a bare path.
QuandleChoice parse_quandle_spec(std::string_view spec);

/// <q>:<h>, e.g. "2:(1-T)^3".
FiniteRing parse_ring_spec(std::string_view spec);

/// zero (values in Z_1), zero:<q>, section:w:<q>:<m>, section:u:<q>:<m>, or
/// a cochain JSON file. Needs the quandle except for section cocycles.
Cochain parse_cocycle_spec(std::string_view spec, const FiniteQuandle* x);

/// The quandle a section cocycle lives on; nullopt for other specs.
std::optional<QuandleChoice> quandle_for_cocycle(std::string_view spec);

/// Built-in name, or a path to a link file.
LinkDiagram parse_link_spec(std::string_view spec);

/// <p>:<g1>[,<g2>...].
std::pair<std::uint64_t, std::vector<IntLaurent>> parse_ideal_spec(std::string_view spec);

std::uint64_t parse_uint(std::string_view text, std::string_view what);

}  // namespace qf::cli
