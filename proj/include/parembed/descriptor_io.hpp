#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "parembed/descriptor.hpp"

namespace parembed {

// Line-oriented `key = value` format with `#` comments. Keys, in canonical
// order:
//
//   dim closed orientable betti_z betti_z2 euler simply_connected torsion_free
//   stably_parallelizable w2_zero bockstein_w2_zero c1_zero p1_zero
//   c_top_pairing p1_pairings embeds_codim embeds_evidence pi1 lai.n
//   lai.pairings
//
// dim, closed, orientable, the two Betti lists and every boolean flag are
// required; the rest are optional. Betti lists are comma-separated integers
// or `?`.
ManifoldDescriptor parse_descriptor(std::string_view text);

// Canonical text: keys in the order above, `key = value`, no spaces inside
// lists, optional keys only when present.
std::string format_descriptor(const ManifoldDescriptor& m);

ManifoldDescriptor read_descriptor(const std::filesystem::path& path);
void write_descriptor(const ManifoldDescriptor& m, const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace parembed
