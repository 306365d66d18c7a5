#pragma once

#include <string>

#include "cuntz/thompson.hpp"

namespace cuntz::cli {

/// Two binary trees side by side with dashed edges pairing their leaves.
std::string render_dot(const TableUnitary& w);
/// Nested-bracket trees followed by the leaf pairing, one row per line.
std::string render_ascii(const TableUnitary& w);
/// PL pieces as a JSON array with "p/2^k" endpoints.
std::string render_pl(const TableUnitary& w);

}  // namespace cuntz::cli
